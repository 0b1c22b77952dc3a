//! Command-line front end for `xembed-core`. Every invocation prints one JSON
//! document; the exit status is 0 when the checked statement holds, 2 when
//! it is violated and 1 on usage or engine errors.

pub mod input;
pub mod output;

use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use xembed_core::{ClassSpec, Engine, Error, Group, Limits, SeriesSpec, SubmaximalWitness};

use crate::input::{parse_class, parse_group, parse_series, parse_subgroup};

#[derive(Parser, Debug)]
#[command(name = "xembed", version, about = "Embedding checks for X-subgroups modulo subnormal series")]
pub struct Cli {
    /// Largest group whose elements may be enumerated.
    #[arg(long, default_value_t = 100_000)]
    pub max_order: u128,
    /// Largest index of a coset action.
    #[arg(long, default_value_t = 10_000)]
    pub max_cosets: u128,
    /// Largest group whose subgroup lattice may be built.
    #[arg(long, default_value_t = 1_000)]
    pub max_lattice: u128,
    /// Omit timing fields, for byte-comparable output.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order, base and composition factors.
    Info(GroupArg),
    /// Subgroup counts.
    Lattice {
        #[command(flatten)]
        group: GroupArg,
        /// List the subgroups of this order.
        #[arg(long)]
        order: Option<u128>,
    },
    /// Conjugacy classes of maximal X-subgroups.
    MaximalX(GroupClass),
    /// Preimages of the projections of H.
    Projections(SeriesH),
    /// Whether H and K are congruent modulo the series.
    Congruent {
        #[command(flatten)]
        base: SeriesH,
        #[arg(long)]
        k: String,
    },
    /// Normalizer of H modulo the final segment of the series at a level.
    NormalizerMod {
        #[command(flatten)]
        base: SeriesH,
        #[arg(long, default_value_t = 0)]
        level: usize,
    },
    /// X-separability and X-length.
    Xsep(GroupClass),
    /// Run a theorem checker.
    #[command(subcommand)]
    Check(Check),
    /// The point-stabilizer counterexample in S_n.
    Example1 {
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
    /// The semiregular involution counterexample in S_2m.
    Example2 {
        #[arg(long, default_value_t = 3)]
        m: usize,
    },
    /// Evaluate the join and corollary conclusions on non-normal series.
    Explore {
        /// Largest group order in the sweep.
        #[arg(long, default_value_t = 24)]
        max_order: u128,
    },
    /// Every theorem sweep over the built-in matrix.
    Matrix,
}

#[derive(Subcommand, Debug)]
pub enum Check {
    Conj {
        #[command(flatten)]
        base: TheoremArgs,
        #[arg(long)]
        k: String,
    },
    Embed {
        #[command(flatten)]
        base: TheoremArgs,
        #[arg(long)]
        k: String,
        #[arg(long, default_value_t = 0)]
        level: usize,
    },
    Join(TheoremArgs),
    Corollary(TheoremArgs),
}

#[derive(Args, Debug)]
pub struct GroupArg {
    /// Group reference: a named construction, a JSON object or @file.
    #[arg(long)]
    pub group: String,
}

#[derive(Args, Debug)]
pub struct GroupClass {
    #[arg(long)]
    pub group: String,
    /// Class JSON or @file.
    #[arg(long)]
    pub class: String,
}

#[derive(Args, Debug)]
pub struct SeriesH {
    /// Group reference, when the series file does not name one.
    #[arg(long)]
    pub group: Option<String>,
    /// Series JSON or @file.
    #[arg(long)]
    pub series: String,
    #[arg(long)]
    pub h: String,
}

#[derive(Args, Debug)]
pub struct TheoremArgs {
    #[command(flatten)]
    pub series: SeriesH,
    #[arg(long)]
    pub class: String,
    /// `{"big": <group>, "hstar": <subgroup>}`; defaults to `G* = G`.
    #[arg(long)]
    pub witness: Option<String>,
}

/// Exit status and output document.
pub struct Outcome {
    pub code: i32,
    pub json: Value,
}

fn engine(cli: &Cli) -> Engine {
    Engine::new(Limits {
        max_elements: cli.max_order,
        max_cosets: cli.max_cosets,
        max_lattice: cli.max_lattice,
    })
}

fn load_series(e: &Engine, a: &SeriesH) -> Result<(SeriesSpec, Group)> {
    let g = a.group.as_deref().map(parse_group).transpose()?;
    let s = parse_series(e, &a.series, g.as_ref())?;
    let h = parse_subgroup(&a.h, s.ambient(), "H")?;
    Ok((s, h))
}

fn load_theorem(e: &Engine, a: &TheoremArgs) -> Result<(SeriesSpec, Group, ClassSpec, SubmaximalWitness)> {
    let (s, h) = load_series(e, &a.series)?;
    let class = parse_class(&a.class)?;
    let w = match &a.witness {
        None => SubmaximalWitness::trivial(s.ambient(), &h),
        Some(text) => {
            let v: Value = serde_json::from_str(&input_text(text)?)?;
            let (Some(big), Some(hstar)) = (v.get("big"), v.get("hstar")) else {
                bail!("a witness needs big and hstar");
            };
            let big = parse_group(&big.to_string())?;
            let hstar = parse_subgroup(&hstar.to_string(), &big, "H*")?;
            SubmaximalWitness { big, hstar }
        }
    };
    Ok((s, h, class, w))
}

fn input_text(text: &str) -> Result<String> {
    match text.strip_prefix('@') {
        Some(path) => Ok(std::fs::read_to_string(path)?),
        None => Ok(text.to_string()),
    }
}

fn verdict_code(report: &xembed_core::TheoremReport) -> i32 {
    match report.verdict {
        xembed_core::Verdict::Violated(_) => 2,
        _ => 0,
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let e = engine(cli);
    let ok = |json: Value| Ok(Outcome { code: 0, json });
    match &cli.command {
        Command::Info(a) => {
            let g = parse_group(&a.group)?;
            let factors: Vec<Value> = e
                .composition_factors(&g)?
                .iter()
                .map(|f| json!({"order": output::order(f.order), "abelian": f.abelian}))
                .collect();
            ok(json!({
                "group": output::group(&g),
                "order": output::order(g.order()),
                "degree": g.degree(),
                "base": g.base().iter().map(|b| b + 1).collect::<Vec<_>>(),
                "composition_factors": factors,
                "solvable": e.is_solvable(&g),
                "simple": e.is_simple(&g)?,
            }))
        }
        Command::Lattice { group, order } => {
            let g = parse_group(&group.group)?;
            let lat = e.lattice(&g)?;
            let mut by_order = std::collections::BTreeMap::new();
            for s in lat.subgroups() {
                *by_order.entry(s.order()).or_insert(0usize) += 1;
            }
            let mut out = json!({
                "group": output::group(&g),
                "subgroups": lat.len(),
                "classes": lat.classes().len(),
                "class_sizes": lat.classes().iter().map(Vec::len).collect::<Vec<_>>(),
                "by_order": by_order.iter().map(|(o, c)| json!({"order": output::order(*o), "count": c})).collect::<Vec<_>>(),
            });
            if let Some(n) = order {
                out["members"] = lat.subgroups_of_order(*n).iter().map(output::group).collect();
            }
            ok(out)
        }
        Command::MaximalX(a) => {
            let g = parse_group(&a.group)?;
            let class = parse_class(&a.class)?;
            let lat = e.lattice(&g)?;
            let mut classes = Vec::new();
            for h in e.maximal_x_subgroups(&class, &g)? {
                let size = lat.classes()[lat.class_of(lat.index_of(&h).expect("lattice member"))].len();
                classes.push(json!({
                    "order": output::order(h.order()),
                    "size": size,
                    "hall": e.is_hall_x(&class, &g, &h)?,
                    "representative": output::group(&h),
                }));
            }
            ok(json!({
                "group": output::group(&g),
                "class": output::class(&class),
                "separable": e.is_x_separable(&class, &g)?,
                "maximal_x": classes,
            }))
        }
        Command::Projections(a) => {
            let (s, h) = load_series(&e, a)?;
            let sig = e.projection_signature(&s, &h)?;
            let orders = sig.section_orders(&s);
            ok(json!({
                "series": output::series(&s),
                "h": output::group(&h),
                "preimages": sig.preimages().iter().map(output::group).collect::<Vec<_>>(),
                "section_orders": orders.iter().map(|&o| output::order(o)).collect::<Vec<_>>(),
                "product": output::order(orders.iter().product()),
            }))
        }
        Command::Congruent { base, k } => {
            let (s, h) = load_series(&e, base)?;
            let k = parse_subgroup(k, s.ambient(), "K")?;
            let sig = |x: &Group| -> Result<Value> {
                Ok(e.projection_signature(&s, x)?.preimages().iter().map(output::group).collect())
            };
            ok(json!({
                "congruent": e.congruent(&s, &h, &k)?,
                "h": sig(&h)?,
                "k": sig(&k)?,
            }))
        }
        Command::NormalizerMod { base, level } => {
            let (s, h) = load_series(&e, base)?;
            let n = e.normalizer_mod(&s, &h, *level)?;
            ok(json!({
                "level": level,
                "order": output::order(n.order()),
                "normalizer": output::group(&n),
                "contains_h": h.is_subgroup_of(&n),
            }))
        }
        Command::Xsep(a) => {
            let g = parse_group(&a.group)?;
            let class = parse_class(&a.class)?;
            let up = e.upper_x_series(&class, &g)?;
            ok(json!({
                "group": output::group(&g),
                "class": output::class(&class),
                "separable": up.separable,
                "x_length": up.x_length(),
                "series": up.terms.iter().map(output::group).collect::<Vec<_>>(),
                "kinds": up.kinds.iter().map(|k| match k {
                    xembed_core::FactorKind::X => "X",
                    xembed_core::FactorKind::XPrime => "X'",
                }).collect::<Vec<_>>(),
            }))
        }
        Command::Check(c) => {
            let (a, k, level) = match c {
                Check::Conj { base, k } => (base, Some(k), 0),
                Check::Embed { base, k, level } => (base, Some(k), *level),
                Check::Join(base) | Check::Corollary(base) => (base, None, 0),
            };
            let (s, h, class, w) = load_theorem(&e, a)?;
            let k = k.map(|k| parse_subgroup(k, s.ambient(), "K")).transpose()?;
            let report = match (c, &k) {
                (Check::Conj { .. }, Some(k)) => e.conj_by_projections(&class, &s, &h, &w, k)?,
                (Check::Embed { .. }, Some(k)) => e.embed_by_normalizer(&class, &s, &h, &w, k, level)?,
                (Check::Join(_), _) => e.wielandt_join(&class, &s, &h, &w)?,
                _ => e.corollary_check(&class, &s, &h, &w)?,
            };
            let inst = output::instance(s.ambient(), &class, Some(&s), Some(&h), k.as_ref(), Some(&w));
            Ok(Outcome {
                code: verdict_code(&report),
                json: output::report(&report, inst, Some(&h)),
            })
        }
        Command::Example1 { n } => {
            let s = e.example1(*n)?;
            Ok(Outcome {
                code: verdict_code(&s.report),
                json: output::scenario(&s),
            })
        }
        Command::Example2 { m } => {
            let s = e.example2(*m)?;
            Ok(Outcome {
                code: verdict_code(&s.report),
                json: output::scenario(&s),
            })
        }
        Command::Explore { max_order } => {
            let found = e.explore_subnormal_open_question(*max_order)?;
            let counter = found.iter().filter(|f| f.is_counterexample()).count();
            let summary = if counter == 0 {
                format!("no counterexample with order at most {max_order}")
            } else {
                format!("{counter} configurations violate a conclusion")
            };
            let failing = |pick: fn(&xembed_core::scenarios::Finding) -> &xembed_core::TheoremReport| {
                found.iter().filter(|f| !pick(f).holds()).count()
            };
            ok(json!({
                "max_order": output::order(*max_order),
                "summary": summary,
                "counterexamples": counter,
                "join_violations": failing(|f| &f.join),
                "corollary_violations": failing(|f| &f.corollary),
                "findings": found.iter().map(output::finding).collect::<Vec<_>>(),
            }))
        }
        Command::Matrix => {
            let instances = e.matrix_instances()?;
            let run = e.run_matrix()?;
            let mut counts = serde_json::Map::new();
            for t in ["conj", "embed", "join", "corollary"] {
                counts.insert(t.into(), json!(run.of_theorem(t).count()));
            }
            let violations = run.violations().count();
            Ok(Outcome {
                code: if violations == 0 { 0 } else { 2 },
                json: json!({
                    "instances": instances.iter().map(|i| json!({
                        "name": i.name,
                        "group": i.group,
                        "class": output::class(&i.class),
                        "series": i.series.iter().map(output::series).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                    "counts": counts,
                    "violations": violations,
                    "entries": run.entries.iter().map(output::entry).collect::<Vec<_>>(),
                }),
            })
        }
    }
}

fn error_json(err: &anyhow::Error) -> Value {
    let mut out = json!({ "error": format!("{err:#}") });
    if let Some(Error::CapExceeded { cap, limit, needed }) = err.downcast_ref::<Error>() {
        out["cap"] = json!(cap.name());
        out["limit"] = output::order(*limit);
        out["needed"] = output::order(*needed);
    }
    out
}

/// Runs a parsed command line.
pub fn run_cli(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let mut outcome = execute(cli).unwrap_or_else(|err| Outcome {
        code: 1,
        json: error_json(&err),
    });
    if !cli.no_timing {
        if let Value::Object(m) = &mut outcome.json {
            m.insert("millis".into(), json!(start.elapsed().as_millis() as u64));
        }
    }
    outcome
}

/// Parses `args` (program name first) and runs them. Usage errors come back
/// as exit status 1 with the message in the document.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_cli(&cli),
        Err(err) => {
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            Outcome {
                code,
                json: json!({ "error": err.to_string() }),
            }
        }
    }
}
