//! Group references, class files and series files.
//!
//! A group reference is one of
//! - a named construction: `symmetric(n)`, `alternating(n)`, `cyclic(n)`,
//!   `dihedral(n)`, `product(a,b)` with nested references,
//! - a JSON object `{"degree": n, "generators": ["(1,2)", …]}`,
//! - `@path` naming a file that holds either form (a named construction as
//!   a JSON string or bare text).
//!
//! A subgroup may also be a JSON array of generator strings at the ambient
//! degree.

use std::collections::BTreeSet;
use std::fs;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;
use serde_json::Value;
use xembed_core::{named, parse_cycles, ClassSpec, Engine, Group, Permutation, SeriesSpec};

fn read_ref(text: &str) -> Result<String> {
    match text.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path}")),
        None => Ok(text.to_string()),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupObject {
    degree: usize,
    generators: Vec<String>,
    #[serde(default)]
    order: Option<u128>,
}

fn group_from_json(v: &Value, degree: Option<usize>) -> Result<Group> {
    match v {
        Value::String(s) => parse_group_text(s, degree),
        Value::Array(gens) => {
            let degree = degree.ok_or_else(|| anyhow!("a generator list needs an ambient degree"))?;
            let gens = gens
                .iter()
                .map(|g| {
                    let s = g.as_str().ok_or_else(|| anyhow!("generators must be strings"))?;
                    Ok(parse_cycles(s, degree)?)
                })
                .collect::<Result<Vec<Permutation>>>()?;
            Ok(Group::new(degree, &gens)?)
        }
        Value::Object(_) => {
            let obj: GroupObject = serde_json::from_value(v.clone())?;
            let gens = obj
                .generators
                .iter()
                .map(|s| parse_cycles(s, obj.degree))
                .collect::<Result<Vec<_>, _>>()?;
            let g = Group::new(obj.degree, &gens)?;
            if let Some(order) = obj.order {
                if order != g.order() {
                    bail!("declared order {order} but the generators give {}", g.order());
                }
            }
            Ok(g)
        }
        _ => bail!("expected a group reference"),
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts
}

fn named_group(text: &str) -> Result<Group> {
    let text = text.trim();
    let open = text.find('(').ok_or_else(|| anyhow!("unknown group reference `{text}`"))?;
    let inner = text[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| anyhow!("unbalanced parentheses in `{text}`"))?;
    let name = text[..open].trim();
    let int = |s: &str| -> Result<usize> {
        s.trim()
            .parse()
            .with_context(|| format!("`{s}` is not a non-negative integer"))
    };
    let n = || -> Result<usize> {
        let n = int(inner)?;
        if n == 0 {
            bail!("{name} needs a positive argument");
        }
        Ok(n)
    };
    Ok(match name {
        "symmetric" => named::symmetric(n()?),
        "alternating" => named::alternating(n()?),
        "cyclic" => named::cyclic(n()?),
        "dihedral" => named::dihedral(n()?),
        "product" => {
            let parts = split_top_level(inner);
            if parts.len() != 2 {
                bail!("product takes two groups");
            }
            named::direct_product(&named_group(parts[0])?, &named_group(parts[1])?)
        }
        _ => bail!("unknown group construction `{name}`"),
    })
}

fn parse_group_text(text: &str, degree: Option<usize>) -> Result<Group> {
    let text = text.trim();
    if text.starts_with('{') || text.starts_with('[') || text.starts_with('"') {
        let v: Value = serde_json::from_str(text).context("parsing group JSON")?;
        return group_from_json(&v, degree);
    }
    named_group(text)
}

/// Parses a group reference.
pub fn parse_group(text: &str) -> Result<Group> {
    parse_group_text(&read_ref(text)?, None)
}

/// Parses a subgroup of `ambient`; generator lists are read at its degree.
pub fn parse_subgroup(text: &str, ambient: &Group, what: &str) -> Result<Group> {
    let g = parse_group_text(&read_ref(text)?, Some(ambient.degree())).with_context(|| format!("parsing {what}"))?;
    if g.degree() != ambient.degree() {
        bail!("{what} acts on {} points, the ambient group on {}", g.degree(), ambient.degree());
    }
    if !g.is_subgroup_of(ambient) {
        bail!("{what} is not a subgroup of the ambient group");
    }
    Ok(g)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassFile {
    pi: Option<Vec<u128>>,
    solvable: Option<bool>,
    max_nonabelian_cf: Option<u128>,
}

/// `{"pi":[2,3]?, "solvable":true?, "max_nonabelian_cf":59?}`, at least one
/// field present.
pub fn parse_class(text: &str) -> Result<ClassSpec> {
    let f: ClassFile = serde_json::from_str(&read_ref(text)?).context("parsing class JSON")?;
    if f.pi.is_none() && f.solvable.is_none() && f.max_nonabelian_cf.is_none() {
        bail!("a class needs at least one of pi, solvable, max_nonabelian_cf");
    }
    let pi = f.pi.map(|p| p.into_iter().collect::<BTreeSet<u128>>());
    Ok(ClassSpec::new(pi, f.solvable.unwrap_or(false), f.max_nonabelian_cf)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesFile {
    group: Option<Value>,
    terms: Vec<Value>,
}

/// Either `{"group": <ref>, "terms": [[gens], …]}` or a bare terms array
/// used with `group`. Terms run from `G_1` to `G_{n-1}`; the trivial last
/// term is appended.
pub fn parse_series(engine: &Engine, text: &str, group: Option<&Group>) -> Result<SeriesSpec> {
    let v: Value = serde_json::from_str(&read_ref(text)?).context("parsing series JSON")?;
    let file = match v {
        Value::Array(terms) => SeriesFile { group: None, terms },
        other => serde_json::from_value(other).context("parsing series JSON")?,
    };
    let g = match (&file.group, group) {
        (Some(v), _) => group_from_json(v, None)?,
        (None, Some(g)) => g.clone(),
        (None, None) => bail!("the series needs a group, in the file or via --group"),
    };
    if let (Some(_), Some(other)) = (&file.group, group) {
        if &g != other {
            bail!("the series file and --group name different groups");
        }
    }
    let mut terms = Vec::with_capacity(file.terms.len() + 1);
    for (i, t) in file.terms.iter().enumerate() {
        terms.push(group_from_json(t, Some(g.degree())).with_context(|| format!("series term {}", i + 1))?);
    }
    terms.push(Group::trivial(g.degree()));
    Ok(engine.build_series(&g, &terms)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_orders() {
        assert_eq!(parse_group("symmetric(6)").unwrap().order(), 720);
        assert_eq!(parse_group("alternating(5)").unwrap().order(), 60);
        assert_eq!(parse_group("cyclic(7)").unwrap().order(), 7);
        assert_eq!(parse_group("dihedral(4)").unwrap().order(), 8);
        let p = parse_group("product(symmetric(3), cyclic(2))").unwrap();
        assert_eq!((p.order(), p.degree()), (12, 5));
        assert!(parse_group("symmetric(0)").is_err());
        assert!(parse_group("mystery(3)").is_err());
    }

    #[test]
    fn object_and_list_forms() {
        let g = parse_group(r#"{"degree":4,"generators":["(1,2,3,4)","(1,3)"]}"#).unwrap();
        assert_eq!(g.order(), 8);
        assert!(parse_group(r#"{"degree":4,"generators":["(1,2)"],"order":3}"#).is_err());
        let s4 = parse_group("symmetric(4)").unwrap();
        let h = parse_subgroup(r#"["(1,2)(3,4)","(1,3)(2,4)"]"#, &s4, "H").unwrap();
        assert_eq!(h.order(), 4);
        assert!(parse_subgroup("symmetric(5)", &s4, "H").is_err());
    }

    #[test]
    fn class_files() {
        let c = parse_class(r#"{"pi":[2,3]}"#).unwrap();
        assert!(!c.is_char_prime(5).unwrap());
        assert!(parse_class("{}").is_err());
        assert!(parse_class(r#"{"pi":[4]}"#).is_err());
        assert!(parse_class(r#"{"colour":1}"#).is_err());
        assert_eq!(parse_class(r#"{"max_nonabelian_cf":60}"#).unwrap().max_nonabelian_cf(), Some(60));
    }

    #[test]
    fn series_files() {
        let e = Engine::default();
        let s = parse_series(&e, r#"{"group":"symmetric(4)","terms":[["(1,2,3)","(2,3,4)"]]}"#, None).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.is_normal());
        let s4 = parse_group("symmetric(4)").unwrap();
        let sub = parse_series(
            &e,
            r#"[["(1,2,3)","(2,3,4)"],["(1,2)(3,4)","(1,3)(2,4)"],["(1,2)(3,4)"]]"#,
            Some(&s4),
        )
        .unwrap();
        assert!(!sub.is_normal());
        assert!(parse_series(&e, r#"[["(1,2)"]]"#, Some(&s4)).is_err());
        assert!(parse_series(&e, r#"[]"#, None).is_err());
    }
}
