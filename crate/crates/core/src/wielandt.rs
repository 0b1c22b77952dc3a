//! Embedding and conjugacy theorems for submaximal X-subgroups, run as
//! witness-producing checkers.
//!
//! Every checker returns a [`TheoremReport`]. A failed mathematical assertion
//! becomes [`Verdict::Violated`] naming the failed checks; engine problems
//! (caps, bad input) stay errors.

use alloc::string::String;
use alloc::vec::Vec;

use crate::engine::{require_subgroup, Engine};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;
use crate::series::SeriesSpec;
use crate::xclass::ClassSpec;

/// Evidence that `G ∩ hstar` is submaximal in `G`: `G` is subnormal in `big`
/// (on the same points) and `hstar` is a maximal X-subgroup of `big`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmaximalWitness {
    pub big: Group,
    pub hstar: Group,
}

impl SubmaximalWitness {
    /// `G* = G`, for a maximal X-subgroup `h` of `g`.
    pub fn trivial(g: &Group, h: &Group) -> Self {
        SubmaximalWitness {
            big: g.clone(),
            hstar: h.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// Names of the failed checks.
    Violated(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(u128),
    Flag(bool),
    Text(String),
}

impl From<u128> for Value {
    fn from(v: u128) -> Self {
        Value::Int(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as u128)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Flag(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.into())
    }
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub theorem: &'static str,
    pub verdict: Verdict,
    /// Every assertion made, in order, with its outcome.
    pub checks: Vec<(String, bool)>,
    pub conjugator: Option<Permutation>,
    /// Named groups from the construction (`J`, `T`, `U`, `W`, `V`, `N`, …).
    pub witnesses: Vec<(String, Group)>,
    /// A separable series certifying the main separability claim, ascending.
    pub series: Vec<Group>,
    pub trace: Vec<(String, Value)>,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn witness(&self, name: &str) -> Option<&Group> {
        self.witnesses.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }

    pub fn trace_value(&self, name: &str) -> Option<&Value> {
        self.trace.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn trace_int(&self, name: &str) -> Option<u128> {
        match self.trace_value(name) {
            Some(Value::Int(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|(n, _)| n == name).map(|(_, ok)| *ok)
    }

    pub(crate) fn skipped(theorem: &'static str, why: &str) -> Self {
        TheoremReport {
            theorem,
            verdict: Verdict::Skipped(why.into()),
            checks: Vec::new(),
            conjugator: None,
            witnesses: Vec::new(),
            series: Vec::new(),
            trace: Vec::new(),
        }
    }
}

pub(crate) struct ReportBuilder {
    report: TheoremReport,
}

impl ReportBuilder {
    pub(crate) fn new(theorem: &'static str) -> Self {
        ReportBuilder {
            report: TheoremReport::skipped(theorem, ""),
        }
    }

    pub(crate) fn check(&mut self, name: &str, ok: bool) -> bool {
        self.report.checks.push((name.into(), ok));
        ok
    }

    pub(crate) fn value(&mut self, name: &str, v: impl Into<Value>) {
        self.report.trace.push((name.into(), v.into()));
    }

    pub(crate) fn group(&mut self, name: &str, g: &Group) {
        self.report.witnesses.push((name.into(), g.clone()));
    }

    pub(crate) fn conjugator(&mut self, x: &Permutation) {
        self.report.conjugator = Some(x.clone());
    }

    pub(crate) fn series(&mut self, terms: Vec<Group>) {
        self.report.series = terms;
    }

    pub(crate) fn violation(mut self, why: String) -> TheoremReport {
        self.report.checks.push((why, false));
        self.finish()
    }

    pub(crate) fn finish(mut self) -> TheoremReport {
        let failed: Vec<&str> = self
            .report
            .checks
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n.as_str())
            .collect();
        let verdict = if failed.is_empty() {
            Verdict::Holds
        } else {
            Verdict::Violated(failed.join("; "))
        };
        self.report.verdict = verdict;
        self.report
    }
}

/// Turns a theorem violation raised deep inside a construction into a verdict.
fn settle(b: ReportBuilder, r: Result<TheoremReport>) -> Result<TheoremReport> {
    match r {
        Err(Error::TheoremViolation(why)) => Ok(b.violation(why)),
        other => other,
    }
}

fn normalizes(k: &Group, h: &Group) -> bool {
    k.generators().iter().all(|x| h.is_normalized_by(x))
}

/// One level of the normalizer recursion.
#[derive(Clone, Debug)]
pub struct EmbedStep {
    pub level: usize,
    pub delta_size: usize,
    pub w: Group,
    pub j: Group,
    pub t: Group,
    pub u: Group,
    /// Conjugator found at this level, before composing with deeper levels.
    pub x: Permutation,
}

impl Engine {
    /// Checks the witness and returns `G ∩ H*`.
    pub fn verify_sm_witness(&self, class: &ClassSpec, w: &SubmaximalWitness, g: &Group) -> Result<Group> {
        if g.degree() != w.big.degree() || w.hstar.degree() != w.big.degree() {
            return Err(Error::InvalidWitness("witness groups act on a different number of points"));
        }
        if !g.is_subgroup_of(&w.big) {
            return Err(Error::InvalidWitness("G is not a subgroup of G*"));
        }
        if !self.is_subnormal(&w.big, g)? {
            return Err(Error::InvalidWitness("G is not subnormal in G*"));
        }
        if !w.hstar.is_subgroup_of(&w.big) {
            return Err(Error::InvalidWitness("H* is not a subgroup of G*"));
        }
        let lat = self.lattice(&w.big)?;
        let idx = lat
            .index_of(&w.hstar)
            .ok_or(Error::InvalidWitness("H* is not a subgroup of G*"))?;
        if !self.maximal_x_indices(class, &w.big)?.contains(&idx) {
            return Err(Error::InvalidWitness("H* is not a maximal X-subgroup of G*"));
        }
        self.intersection(g, &w.hstar)
    }

    fn validated_h(&self, class: &ClassSpec, g: &Group, h: &Group, w: &SubmaximalWitness) -> Result<()> {
        require_subgroup(h, g, "H", "G")?;
        if &self.verify_sm_witness(class, w, g)? != h {
            return Err(Error::InvalidWitness("G ∩ H* differs from H"));
        }
        Ok(())
    }

    /// Subgroups of the series ambient congruent to `h`. Congruent subgroups
    /// have the same order, so the lattice is filtered by `|h|` first.
    pub fn congruence_class(&self, series: &SeriesSpec, h: &Group) -> Result<Vec<Group>> {
        let target = self.projection_signature(series, h)?;
        let lat = self.lattice(series.ambient())?;
        let mut out = Vec::new();
        for i in lat.indices_of_order(h.order()) {
            let l = lat.get(i);
            if self.projection_signature(series, l)? == target {
                out.push(l.clone());
            }
        }
        Ok(out)
    }

    /// Congruent conjugates `H^g`, `g ∈ G`.
    pub fn congruent_conjugates(&self, series: &SeriesSpec, h: &Group) -> Result<Vec<Group>> {
        let target = self.projection_signature(series, h)?;
        let mut out = Vec::new();
        for (c, _) in self.conjugates(series.ambient(), h)? {
            if self.projection_signature(series, &c)? == target {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// `H ≡ K` for submaximal `H`: `J = ⟨H, K⟩` is separable, both are Hall
    /// in `J`, and they are conjugate in `J`.
    pub fn conj_by_projections(
        &self,
        class: &ClassSpec,
        series: &SeriesSpec,
        h: &Group,
        w: &SubmaximalWitness,
        k: &Group,
    ) -> Result<TheoremReport> {
        let g = series.ambient();
        self.validated_h(class, g, h, w)?;
        require_subgroup(k, g, "K", "G")?;
        if !self.congruent(series, h, k)? {
            return Err(Error::Precondition("H and K are not congruent modulo the series".into()));
        }
        let mut b = ReportBuilder::new("conj");
        let j = h.join(k)?;
        b.group("J", &j);
        b.value("j_order", j.order());
        let upper = self.upper_x_series(class, &j)?;
        b.check("J is X-separable", upper.separable);
        if upper.separable {
            b.series(upper.terms.clone());
        }
        b.check("H is Hall in J", self.is_hall_x(class, &j, h)?);
        b.check("K is Hall in J", self.is_hall_x(class, &j, k)?);
        match self.are_conjugate(&j, h, k)? {
            Some(x) => {
                b.check("conjugator lies in J", j.contains(&x));
                b.check("H^x = K", &h.conjugate(&x)? == k);
                b.conjugator(&x);
            }
            None => {
                b.check("H and K are conjugate in J", false);
            }
        }
        Ok(b.finish())
    }

    /// For an X-subgroup `K ≤ N^{(*i)}(H_i)`, finds `x ∈ G_i ∩ ⟨H_i, K⟩`
    /// with `K ≤ N(H_i^x)` and `H_i^x ≡ H_i (mod *i)` by descending the
    /// series. At `i = 0` it concludes `K ≤ H^x`, so `K^{x⁻¹} ≤ H`.
    pub fn embed_by_normalizer(
        &self,
        class: &ClassSpec,
        series: &SeriesSpec,
        h: &Group,
        w: &SubmaximalWitness,
        k: &Group,
        i: usize,
    ) -> Result<TheoremReport> {
        let g = series.ambient();
        self.validated_h(class, g, h, w)?;
        require_subgroup(k, g, "K", "G")?;
        if i > series.len() {
            return Err(Error::IndexOutOfRange { index: i, len: series.len() });
        }
        if !self.is_in_class(class, k)? {
            return Err(Error::Precondition("K is not an X-group".into()));
        }
        if !k.is_subgroup_of(&self.normalizer_mod(series, h, i)?) {
            return Err(Error::Precondition("K does not normalize H modulo the series".into()));
        }
        let b = ReportBuilder::new("embed");
        let r = self.embed_report(class, series, h, k, i, b);
        settle(ReportBuilder::new("embed"), r)
    }

    fn embed_report(
        &self,
        class: &ClassSpec,
        series: &SeriesSpec,
        h: &Group,
        k: &Group,
        i: usize,
        mut b: ReportBuilder,
    ) -> Result<TheoremReport> {
        let gi = series.term(i);
        let hi = self.intersection(h, gi)?;
        let mut steps = Vec::new();
        let x = self.descend(class, series, &hi, k, i, &mut steps)?;
        b.conjugator(&x);
        b.value("level", i);
        b.value("steps", steps.len());
        if let Some(top) = steps.first() {
            b.value("delta_size", top.delta_size);
            b.value("w_order", top.w.order());
            b.value("j_order", top.j.order());
            b.value("t_order", top.t.order());
            b.value("u_order", top.u.order());
            b.group("W", &top.w);
            b.group("J", &top.j);
            b.group("T", &top.t);
            b.group("U", &top.u);
        }
        let joined = hi.join(k)?;
        let hx = hi.conjugate(&x)?;
        b.check("x lies in G_i", gi.contains(&x));
        b.check("x lies in <H_i, K>", joined.contains(&x));
        b.check("K normalizes H_i^x", normalizes(k, &hx));
        let tail = series.tail(i)?;
        b.check("H_i^x is congruent to H_i", self.congruent(&tail, &hi, &hx)?);
        if i == 0 {
            b.check("K lies in H^x", k.is_subgroup_of(&hx));
            let back = k.conjugate(&x.inverse())?;
            b.check("K^(x^-1) lies in H", back.is_subgroup_of(h));
            b.group("K^(x^-1)", &back);
            let upper = self.upper_x_series(class, &joined)?;
            b.check("<H, K> is X-separable", upper.separable);
            if upper.separable {
                b.series(upper.terms);
            }
        }
        Ok(b.finish())
    }

    /// Conjugator for level `i`, recursing to level `i + 1` first.
    fn descend(
        &self,
        class: &ClassSpec,
        series: &SeriesSpec,
        hi: &Group,
        k: &Group,
        i: usize,
        steps: &mut Vec<EmbedStep>,
    ) -> Result<Permutation> {
        let n = series.len();
        if i == n {
            return Ok(hi.identity());
        }
        let next = series.term(i + 1);
        let h_next = self.intersection(hi, next)?;
        let mut deeper = Vec::new();
        let y = self.descend(class, series, &h_next, k, i + 1, &mut deeper)?;
        let hy = hi.conjugate(&y)?;
        if !normalizes(k, &self.intersection(&hy, next)?) {
            return Err(Error::TheoremViolation(alloc::format!(
                "K does not normalize the conjugated H_{} at level {i}",
                i + 1
            )));
        }
        let two = series.two_term(i)?;
        let delta = self.congruence_class(&two, &hy)?;
        let w = Group::join_all(hy.degree(), &delta)?;
        if !normalizes(k, &w) {
            return Err(Error::TheoremViolation(alloc::format!("K does not normalize W at level {i}")));
        }
        let j = hy.join(k)?;
        let t = match self.hall_containing(class, &j, k) {
            Err(Error::NotSeparable) => {
                return Err(Error::TheoremViolation(alloc::format!("J = <H_i, K> is not X-separable at level {i}")))
            }
            other => other?,
        };
        let jw = self.intersection(&j, &w)?;
        let u = self.intersection(&t, &w)?;
        let x = self.are_conjugate(&jw, &hy, &u)?.ok_or_else(|| {
            Error::TheoremViolation(alloc::format!("T ∩ W is not conjugate to H_i in J ∩ W at level {i}"))
        })?;
        steps.push(EmbedStep {
            level: i,
            delta_size: delta.len(),
            w,
            j,
            t,
            u,
            x: x.clone(),
        });
        steps.append(&mut deeper);
        Ok(y.mul(&x))
    }

    /// Like [`Engine::embed_by_normalizer`] but also returns the per-level
    /// construction, outermost level first.
    pub fn embed_steps(
        &self,
        class: &ClassSpec,
        series: &SeriesSpec,
        h: &Group,
        k: &Group,
        i: usize,
    ) -> Result<(Permutation, Vec<EmbedStep>)> {
        let hi = self.intersection(h, series.term(i))?;
        let mut steps = Vec::new();
        let x = self.descend(class, series, &hi, k, i, &mut steps)?;
        Ok((x, steps))
    }

    /// For a normal series: `W = ⟨Δ⟩` with `Δ` the congruence class of `H`
    /// is separable, `l_X(W) ≤ n`, and `H` is Hall in `W`.
    pub fn wielandt_join(
        &self,
        class: &ClassSpec,
        series: &SeriesSpec,
        h: &Group,
        w: &SubmaximalWitness,
    ) -> Result<TheoremReport> {
        if !series.is_normal() {
            return Err(Error::Precondition("the series is not normal".into()));
        }
        self.validated_h(class, series.ambient(), h, w)?;
        let mut b = ReportBuilder::new("join");
        self.join_checks(class, series, h, &mut b, true)?;
        Ok(b.finish())
    }

    /// The same conclusions without the normality requirement and without
    /// the inductive claims that depend on it.
    pub fn wielandt_join_unchecked(&self, class: &ClassSpec, series: &SeriesSpec, h: &Group) -> Result<TheoremReport> {
        let mut b = ReportBuilder::new("join");
        self.join_checks(class, series, h, &mut b, false)?;
        Ok(b.finish())
    }

    /// Returns `W`.
    fn join_checks(
        &self,
        class: &ClassSpec,
        series: &SeriesSpec,
        h: &Group,
        b: &mut ReportBuilder,
        inductive: bool,
    ) -> Result<Group> {
        let g = series.ambient();
        let n = series.len();
        let lat = self.lattice(g)?;
        let delta = self.congruence_class(series, h)?;
        let mut oracle: Vec<usize> = delta.iter().filter_map(|d| lat.index_of(d)).collect();
        let mut fast: Vec<usize> = self
            .congruent_conjugates(series, h)?
            .iter()
            .filter_map(|d| lat.index_of(d))
            .collect();
        oracle.sort_unstable();
        fast.sort_unstable();
        fast.dedup();
        b.check("Delta from the lattice equals the congruent conjugates", oracle == fast);
        let w = Group::join_all(g.degree(), &delta)?;
        b.value("delta_size", delta.len());
        b.value("w_order", w.order());
        b.group("W", &w);
        let upper = self.upper_x_series(class, &w)?;
        b.check("W is X-separable", upper.separable);
        if let Some(len) = upper.x_length() {
            b.value("x_length", len);
            b.check("x_length(W) <= n", len <= n);
        }
        b.check("H is Hall in W", self.is_hall_x(class, &w, h)?);
        if upper.separable {
            b.series(upper.terms);
        }
        if inductive && n > 1 {
            let g1 = series.term(1);
            let tail = series.tail(1)?;
            let h1 = self.intersection(h, g1)?;
            let gamma = self.congruence_class(&tail, &h1)?;
            let v = Group::join_all(g.degree(), &gamma)?;
            b.value("gamma_size", gamma.len());
            b.value("v_order", v.order());
            b.group("V", &v);
            let upper_v = self.upper_x_series(class, &v)?;
            b.check("(a) V is X-separable", upper_v.separable);
            b.check("(a) x_length(V) <= n - 1", upper_v.x_length().is_some_and(|l| l < n));
            b.check("(a) H_1 is Hall in V", self.is_hall_x(class, &v, &h1)?);
            b.check("(b) every member of Delta normalizes V", delta.iter().all(|d| normalizes(d, &v)));
            let mut delta1: Vec<usize> = Vec::new();
            for d in &delta {
                let m = self.intersection(d, g1)?;
                if let Some(idx) = lat.index_of(&m) {
                    delta1.push(idx);
                }
            }
            delta1.sort_unstable();
            delta1.dedup();
            let mut gamma_idx: Vec<usize> = gamma.iter().filter_map(|d| lat.index_of(d)).collect();
            gamma_idx.sort_unstable();
            b.value("delta1_size", delta1.len());
            b.check("(c) Delta_1 equals Gamma", delta1 == gamma_idx);
        }
        Ok(w)
    }

    /// For a normal series: `N = N^{(*)}(H)` is separable with
    /// `l_X(N) ≤ n`, `H` is Hall in `N`, `W ⊴ N` and `N/W` is an X'-group.
    pub fn corollary_check(
        &self,
        class: &ClassSpec,
        series: &SeriesSpec,
        h: &Group,
        w: &SubmaximalWitness,
    ) -> Result<TheoremReport> {
        if !series.is_normal() {
            return Err(Error::Precondition("the series is not normal".into()));
        }
        self.validated_h(class, series.ambient(), h, w)?;
        self.corollary_unchecked(class, series, h)
    }

    /// The corollary's conclusions for any series, without validating `H`.
    pub fn corollary_unchecked(&self, class: &ClassSpec, series: &SeriesSpec, h: &Group) -> Result<TheoremReport> {
        let mut b = ReportBuilder::new("corollary");
        let mut scratch = ReportBuilder::new("join");
        let w = self.join_checks(class, series, h, &mut scratch, false)?;
        let n = series.len();
        let norm = self.normalizer_mod(series, h, 0)?;
        b.group("N", &norm);
        b.group("W", &w);
        b.value("n_order", norm.order());
        b.value("w_order", w.order());
        b.check("H lies in N", h.is_subgroup_of(&norm));
        let upper = self.upper_x_series(class, &norm)?;
        b.check("N is X-separable", upper.separable);
        if let Some(len) = upper.x_length() {
            b.value("x_length", len);
            b.check("x_length(N) <= n", len <= n);
        }
        let hall = h.is_subgroup_of(&norm) && self.is_hall_x(class, &norm, h)?;
        b.check("H is Hall in N", hall);
        let w_normal = w.is_subgroup_of(&norm) && w.is_normal_in(&norm);
        b.check("W is normal in N", w_normal);
        if w_normal {
            let q = self.quotient(&norm, &w)?;
            b.value("n_over_w_order", q.image().order());
            b.check("N/W is an X'-group", self.is_x_prime_group(class, q.image()));
        }
        if upper.separable {
            b.series(upper.terms);
        }
        Ok(b.finish())
    }
}

/// A `Verdict` as text: `holds`, `violated`, `skipped`.
pub fn verdict_name(v: &Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Violated(_) => "violated",
        Verdict::Skipped(_) => "skipped",
    }
}

impl core::fmt::Display for Value {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Flag(v) => write!(f, "{v}"),
            Value::Text(v) => f.write_str(v),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::perm::parse_cycles;

    fn grp(gens: &[&str], d: usize) -> Group {
        let gens: Vec<Permutation> = gens.iter().map(|s| parse_cycles(s, d).unwrap()).collect();
        Group::new(d, &gens).unwrap()
    }

    fn two() -> ClassSpec {
        ClassSpec::primes(&[2]).unwrap()
    }

    fn d8() -> Group {
        grp(&["(1,2,3,4)", "(1,3)"], 4)
    }

    fn v4() -> Group {
        grp(&["(1,2)(3,4)", "(1,3)(2,4)"], 4)
    }

    fn s4_normal(e: &Engine) -> SeriesSpec {
        e.build_series(&named::symmetric(4), &[named::alternating(4), Group::trivial(4)])
            .unwrap()
    }

    fn s4_subnormal(e: &Engine) -> SeriesSpec {
        e.build_series(
            &named::symmetric(4),
            &[named::alternating(4), v4(), grp(&["(1,2)(3,4)"], 4), Group::trivial(4)],
        )
        .unwrap()
    }

    #[test]
    fn witness_checks() {
        let e = Engine::default();
        let s4 = named::symmetric(4);
        let w = SubmaximalWitness::trivial(&s4, &d8());
        assert_eq!(e.verify_sm_witness(&two(), &w, &s4).unwrap(), d8());
        let a4 = named::alternating(4);
        assert_eq!(e.verify_sm_witness(&two(), &w, &a4).unwrap(), v4());
        let bad = SubmaximalWitness::trivial(&s4, &v4());
        assert!(matches!(
            e.verify_sm_witness(&two(), &bad, &s4),
            Err(Error::InvalidWitness(_))
        ));
        let not_subnormal = grp(&["(1,2)"], 4);
        assert!(e.verify_sm_witness(&two(), &w, &not_subnormal).is_err());
    }

    #[test]
    fn conj_examples() {
        let e = Engine::default();
        let s = s4_normal(&e);
        let s4 = s.ambient().clone();
        let w = SubmaximalWitness::trivial(&s4, &d8());
        let r = e.conj_by_projections(&two(), &s, &d8(), &w, &d8()).unwrap();
        assert!(r.holds());
        assert!(r.conjugator.unwrap().is_identity());
        let other = grp(&["(1,3,2,4)", "(1,2)"], 4);
        let r = e.conj_by_projections(&two(), &s, &d8(), &w, &other).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.trace_int("j_order"), Some(24));
        let x = r.conjugator.unwrap();
        assert_eq!(d8().conjugate(&x).unwrap(), other);
        let congruent = e.congruence_class(&s, &d8()).unwrap();
        assert_eq!(congruent.len(), 3);
        assert!(e
            .conj_by_projections(&two(), &s, &d8(), &w, &grp(&["(1,2)"], 4))
            .is_err());
    }

    #[test]
    fn embed_examples() {
        let e = Engine::default();
        let s = s4_normal(&e);
        let s4 = s.ambient().clone();
        let w = SubmaximalWitness::trivial(&s4, &d8());
        let r = e.embed_by_normalizer(&two(), &s, &d8(), &w, &Group::trivial(4), 2).unwrap();
        assert!(r.holds());
        assert!(r.conjugator.as_ref().unwrap().is_identity());
        let lat = e.lattice(&s4).unwrap();
        for k in lat.subgroups() {
            if !e.is_in_class(&two(), k).unwrap() {
                continue;
            }
            let r = e.embed_by_normalizer(&two(), &s, &d8(), &w, k, 0).unwrap();
            assert!(r.holds(), "{r:?}");
            let x = r.conjugator.unwrap();
            assert!(k.is_subgroup_of(&d8().conjugate(&x).unwrap()));
        }
    }

    #[test]
    fn embed_on_subnormal_series() {
        let e = Engine::default();
        let s = s4_subnormal(&e);
        let s4 = s.ambient().clone();
        let w = SubmaximalWitness::trivial(&s4, &d8());
        let k = grp(&["(1,3)(2,4)"], 4);
        assert!(k.is_subgroup_of(&e.normalizer_mod(&s, &d8(), 0).unwrap()));
        let r = e.embed_by_normalizer(&two(), &s, &d8(), &w, &k, 0).unwrap();
        assert!(r.holds(), "{r:?}");
        let x = r.conjugator.unwrap();
        assert!(k.is_subgroup_of(&d8().conjugate(&x).unwrap()));
        assert!(e.conjugate_into(&d8().join(&k).unwrap(), &k, &d8()).unwrap().is_some());
    }

    #[test]
    fn embed_rejects_bad_input() {
        let e = Engine::default();
        let s = s4_normal(&e);
        let s4 = s.ambient().clone();
        let w = SubmaximalWitness::trivial(&s4, &d8());
        let c3 = grp(&["(1,2,3)"], 4);
        assert!(matches!(
            e.embed_by_normalizer(&two(), &s, &d8(), &w, &c3, 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn join_anchor() {
        let e = Engine::default();
        let s = s4_normal(&e);
        let w = SubmaximalWitness::trivial(s.ambient(), &d8());
        let r = e.wielandt_join(&two(), &s, &d8(), &w).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.trace_int("delta_size"), Some(3));
        assert_eq!(r.trace_int("w_order"), Some(24));
        assert_eq!(r.trace_int("x_length"), Some(2));
        assert!(e.wielandt_join(&two(), &s4_subnormal(&e), &d8(), &w).is_err());
    }

    #[test]
    fn join_length_one() {
        let e = Engine::default();
        let s4 = named::symmetric(4);
        let s = e.build_series(&s4, &[Group::trivial(4)]).unwrap();
        let w = SubmaximalWitness::trivial(&s4, &d8());
        let r = e.wielandt_join(&two(), &s, &d8(), &w).unwrap();
        assert!(r.holds());
        assert_eq!(r.trace_int("delta_size"), Some(1));
        assert_eq!(r.witness("W"), Some(&d8()));
    }

    #[test]
    fn corollary_anchor() {
        let e = Engine::default();
        let s = s4_normal(&e);
        let w = SubmaximalWitness::trivial(s.ambient(), &d8());
        let r = e.corollary_check(&two(), &s, &d8(), &w).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.trace_int("n_order"), Some(24));
        let one = e.build_series(s.ambient(), &[Group::trivial(4)]).unwrap();
        let r = e.corollary_check(&two(), &one, &d8(), &w).unwrap();
        assert!(r.holds());
        assert_eq!(r.witness("N"), Some(&d8()));
    }
}
