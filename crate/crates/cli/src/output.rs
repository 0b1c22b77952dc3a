//! JSON forms of groups, classes, series and reports. Every group is written
//! as `{"degree", "order", "generators"}`, which parses back as a group
//! reference.

use serde_json::{json, Map, Value};
use xembed_core::matrix::Entry;
use xembed_core::scenarios::{Finding, Scenario};
use xembed_core::wielandt::verdict_name;
use xembed_core::{ClassSpec, Group, Permutation, SeriesSpec, SubmaximalWitness, TheoremReport, Verdict};

pub fn perm(p: &Permutation) -> Value {
    Value::String(p.to_cycle_string())
}

pub fn group(g: &Group) -> Value {
    json!({
        "degree": g.degree(),
        "order": order(g.order()),
        "generators": g.generators().iter().map(perm).collect::<Vec<_>>(),
    })
}

/// Orders fit in `u64` for every group the engine can enumerate; larger ones
/// are written as strings.
pub fn order(n: u128) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

pub fn class(c: &ClassSpec) -> Value {
    let mut m = Map::new();
    if let Some(pi) = c.pi() {
        m.insert("pi".into(), pi.iter().map(|&p| order(p)).collect());
    }
    if c.requires_solvable() {
        m.insert("solvable".into(), json!(true));
    }
    if let Some(b) = c.max_nonabelian_cf() {
        m.insert("max_nonabelian_cf".into(), order(b));
    }
    Value::Object(m)
}

/// Terms `G_1 … G_{n-1}` as generator lists, matching the input schema,
/// plus the full list of terms with orders.
pub fn series(s: &SeriesSpec) -> Value {
    let inner = &s.terms()[1..s.terms().len() - 1];
    json!({
        "group": group(s.ambient()),
        "terms": inner
            .iter()
            .map(|t| t.generators().iter().map(perm).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "orders": s.terms().iter().map(|t| order(t.order())).collect::<Vec<_>>(),
        "normal": s.is_normal(),
    })
}

pub fn witness(w: &SubmaximalWitness) -> Value {
    json!({ "big": group(&w.big), "hstar": group(&w.hstar) })
}

fn verdict(v: &Verdict) -> (Value, Value) {
    let why = match v {
        Verdict::Holds => Value::Null,
        Verdict::Violated(s) | Verdict::Skipped(s) => json!(s),
    };
    (json!(verdict_name(v)), why)
}

/// Groups in which the report certifies a Hall subgroup.
fn hall_certificates(r: &TheoremReport, h: Option<&Group>) -> Value {
    let pairs: &[(&str, &str)] = match r.theorem {
        "conj" => &[("H", "J"), ("K", "J")],
        "join" => &[("H", "W")],
        "corollary" => &[("H", "N")],
        _ => &[],
    };
    let mut m = Map::new();
    for (sub, of) in pairs {
        let s = match (*sub, h) {
            ("H", Some(h)) => Some(h.clone()),
            _ => r.witness(sub).cloned(),
        };
        if let (Some(s), Some(o)) = (s, r.witness(of)) {
            if s.is_subgroup_of(o) {
                m.insert(
                    format!("{sub} in {of}"),
                    json!({ "index": order(o.order() / s.order()) }),
                );
            }
        }
    }
    Value::Object(m)
}

pub fn report(r: &TheoremReport, instance: Value, h: Option<&Group>) -> Value {
    let (v, why) = verdict(&r.verdict);
    let groups: Map<String, Value> = r.witnesses.iter().map(|(n, g)| (n.clone(), group(g))).collect();
    let trace: Map<String, Value> = r
        .trace
        .iter()
        .map(|(n, val)| {
            let val = match val {
                xembed_core::Value::Int(i) => order(*i),
                xembed_core::Value::Flag(b) => json!(b),
                xembed_core::Value::Text(t) => json!(t),
            };
            (n.clone(), val)
        })
        .collect();
    json!({
        "theorem": r.theorem,
        "instance": instance,
        "verdict": v,
        "reason": why,
        "checks": r.checks.iter().map(|(n, ok)| json!({"check": n, "ok": ok})).collect::<Vec<_>>(),
        "witnesses": {
            "conjugator": r.conjugator.as_ref().map(perm),
            "series": r.series.iter().map(group).collect::<Vec<_>>(),
            "hall": hall_certificates(r, h),
            "groups": groups,
        },
        "trace": trace,
    })
}

pub fn instance(
    g: &Group,
    c: &ClassSpec,
    s: Option<&SeriesSpec>,
    h: Option<&Group>,
    k: Option<&Group>,
    w: Option<&SubmaximalWitness>,
) -> Value {
    let mut m = Map::new();
    m.insert("group".into(), group(g));
    m.insert("class".into(), class(c));
    if let Some(s) = s {
        m.insert("series".into(), series(s));
    }
    if let Some(h) = h {
        m.insert("h".into(), group(h));
    }
    if let Some(k) = k {
        m.insert("k".into(), group(k));
    }
    if let Some(w) = w {
        m.insert("witness".into(), witness(w));
    }
    Value::Object(m)
}

pub fn scenario(s: &Scenario) -> Value {
    let inst = instance(s.series.ambient(), &s.class, Some(&s.series), Some(&s.h), Some(&s.k), None);
    report(&s.report, inst, Some(&s.h))
}

pub fn finding(f: &Finding) -> Value {
    let inst = instance(f.series.ambient(), &f.class, Some(&f.series), Some(&f.h), None, None);
    json!({
        "group": f.group,
        "counterexample": f.is_counterexample(),
        "join": report(&f.join, inst.clone(), Some(&f.h)),
        "corollary": report(&f.corollary, inst, Some(&f.h)),
    })
}

pub fn entry(e: &Entry) -> Value {
    let inst = json!({
        "name": e.instance,
        "series": e.series,
        "h": group(&e.h),
        "k": e.k.as_ref().map(group),
    });
    report(&e.report, inst, Some(&e.h))
}
