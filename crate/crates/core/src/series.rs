//! Subnormal series, projections onto their sections, congruence modulo a
//! series and normalizers modulo a series.
//!
//! The projection of `H` onto the `i`-th section `G_{i-1}/G_i` is represented
//! by its preimage `(H ∩ G_{i-1})·G_i`. Two projections coincide exactly when
//! the preimages do, since both contain `G_i`; no quotient is ever built for a
//! congruence test.

use alloc::vec::Vec;

use crate::engine::{require_subgroup, Engine};
use crate::error::{Error, Result};
use crate::group::{Group, SubgroupBuilder};

/// A validated series `G = G_0 > G_1 > … > G_n = 1` with `G_i ⊴ G_{i-1}`.
#[derive(Clone, Debug)]
pub struct SeriesSpec {
    terms: Vec<Group>,
    normal: bool,
}

impl SeriesSpec {
    pub fn ambient(&self) -> &Group {
        &self.terms[0]
    }

    /// All terms `G_0, …, G_n`.
    pub fn terms(&self) -> &[Group] {
        &self.terms
    }

    pub fn term(&self, i: usize) -> &Group {
        &self.terms[i]
    }

    /// Length `n`.
    pub fn len(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every term is normal in the ambient group.
    pub fn is_normal(&self) -> bool {
        self.normal
    }

    /// The final segment `G_i > … > G_n` as a series of `G_i`.
    pub fn tail(&self, i: usize) -> Result<SeriesSpec> {
        if i > self.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.len() });
        }
        let terms = self.terms[i..].to_vec();
        let normal = terms.iter().all(|t| t.is_normal_in(&terms[0]));
        Ok(SeriesSpec { terms, normal })
    }

    /// The two-term series `G_i ⊵ G_{i+1} ⊵ 1` of `G_i`.
    pub fn two_term(&self, i: usize) -> Result<SeriesSpec> {
        if i >= self.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.len() });
        }
        let gi = self.terms[i].clone();
        let next = self.terms[i + 1].clone();
        let mut terms = alloc::vec![gi, next.clone()];
        if !next.is_trivial() {
            terms.push(Group::trivial(next.degree()));
        }
        Ok(SeriesSpec { terms, normal: true })
    }
}

/// Preimages `(H ∩ G_{i-1})·G_i` for `i = 1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionSignature {
    preimages: Vec<Group>,
}

impl ProjectionSignature {
    pub fn preimages(&self) -> &[Group] {
        &self.preimages
    }

    /// Orders `|H^i| = |preimage_i| / |G_i|`.
    pub fn section_orders(&self, series: &SeriesSpec) -> Vec<u128> {
        self.preimages
            .iter()
            .zip(&series.terms[1..])
            .map(|(p, t)| p.order() / t.order())
            .collect()
    }
}

impl Engine {
    /// Validates `G > terms[0] > … > terms[n-1] = 1`. The terms list starts at
    /// `G_1` and must end with the trivial group.
    pub fn build_series(&self, g: &Group, terms: &[Group]) -> Result<SeriesSpec> {
        let mut all = alloc::vec![g.clone()];
        for (k, t) in terms.iter().enumerate() {
            let index = k + 1;
            require_subgroup(t, g, "series term", "ambient group")?;
            let prev = &all[index - 1];
            if !t.is_subgroup_of(prev) {
                return Err(Error::NotDescending { index });
            }
            if t.order() == prev.order() {
                return Err(Error::RepeatedTerm { index });
            }
            if !t.is_normal_in(prev) {
                return Err(Error::NotSubnormalChain { index });
            }
            all.push(t.clone());
        }
        if !all.last().unwrap().is_trivial() {
            return Err(Error::NontrivialLastTerm);
        }
        let normal = all.iter().all(|t| t.is_normal_in(g));
        Ok(SeriesSpec { terms: all, normal })
    }

    fn signature_over(&self, terms: &[Group], h: &Group) -> Result<ProjectionSignature> {
        let mut preimages = Vec::with_capacity(terms.len().saturating_sub(1));
        let mut part = h.clone();
        for t in &terms[1..] {
            // part = H ∩ G_{i-1}
            preimages.push(part.join(t)?);
            part = self.intersection(&part, t)?;
        }
        Ok(ProjectionSignature { preimages })
    }

    pub fn projection_signature(&self, series: &SeriesSpec, h: &Group) -> Result<ProjectionSignature> {
        require_subgroup(h, series.ambient(), "H", "ambient group")?;
        self.signature_over(&series.terms, h)
    }

    /// Projections as subgroups of the section groups, each realized by a
    /// coset action of `G_{i-1}` on `G_i`.
    pub fn projection_images(&self, series: &SeriesSpec, h: &Group) -> Result<Vec<Group>> {
        require_subgroup(h, series.ambient(), "H", "ambient group")?;
        let mut out = Vec::new();
        let mut part = h.clone();
        for i in 1..series.terms.len() {
            let q = self.quotient(&series.terms[i - 1], &series.terms[i])?;
            out.push(q.push_subgroup(&part)?);
            part = self.intersection(&part, &series.terms[i])?;
        }
        Ok(out)
    }

    /// `H ≡ K (mod *)`.
    pub fn congruent(&self, series: &SeriesSpec, h: &Group, k: &Group) -> Result<bool> {
        require_subgroup(k, series.ambient(), "K", "ambient group")?;
        Ok(self.projection_signature(series, h)? == self.projection_signature(series, k)?)
    }

    /// `G^{(*i)}`: elements of `G` normalizing every `G_j` with `j ≥ i`.
    pub fn series_stabilizer(&self, series: &SeriesSpec, i: usize) -> Result<Group> {
        if i > series.len() {
            return Err(Error::IndexOutOfRange { index: i, len: series.len() });
        }
        let g = series.ambient();
        let tail = &series.terms[i..];
        if tail.iter().all(|t| t.is_normal_in(g)) {
            return Ok(g.clone());
        }
        let mut b = SubgroupBuilder::new(g.degree());
        for x in self.elements(g)?.iter() {
            if !b.contains(x) && tail.iter().all(|t| t.is_normalized_by(x)) {
                b.push(x);
            }
        }
        Ok(b.finish())
    }

    /// `N^{(*i)}(H_i) = {x ∈ G^{(*i)} : H_i^x ≡ H_i (mod *i)}` with
    /// `H_i = H ∩ G_i`, by a scan over `G^{(*i)}`. For `i = 0` this is the
    /// normalizer of `H` modulo the series.
    pub fn normalizer_mod(&self, series: &SeriesSpec, h: &Group, i: usize) -> Result<Group> {
        require_subgroup(h, series.ambient(), "H", "ambient group")?;
        if i > series.len() {
            return Err(Error::IndexOutOfRange { index: i, len: series.len() });
        }
        let stabilizer = self.series_stabilizer(series, i)?;
        if i == series.len() {
            return Ok(stabilizer);
        }
        let tail = &series.terms[i..];
        let hi = self.intersection(h, &series.terms[i])?;
        let target = self.signature_over(tail, &hi)?;
        let mut b = SubgroupBuilder::new(stabilizer.degree());
        for x in self.elements(&stabilizer)?.iter() {
            if b.contains(x) {
                continue;
            }
            if self.signature_over(tail, &hi.conjugate(x)?)? == target {
                b.push(x);
            }
        }
        Ok(b.finish())
    }
}
