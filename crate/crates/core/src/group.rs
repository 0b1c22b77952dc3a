//! Permutation groups given by generators plus a stabilizer-chain certificate.
//!
//! Everything here works from generators and sifting alone; operations that
//! need to enumerate elements live on [`Engine`](crate::Engine), which owns the
//! caps.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::perm::Permutation;

struct Inner {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Chain,
}

/// An immutable permutation group. Cloning is cheap.
///
/// Two groups compare equal when they have the same degree and the same
/// element set, decided by order plus generator membership.
#[derive(Clone)]
pub struct Group(Arc<Inner>);

impl Group {
    /// Group generated by `generators`. Redundant generators are dropped, so
    /// the stored list is irredundant in the order given.
    pub fn new(degree: usize, generators: &[Permutation]) -> Result<Self> {
        let mut chain = Chain::new(degree, &[]);
        let mut kept = Vec::new();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
            if chain.add(g) {
                kept.push(g.clone());
            }
        }
        Ok(Group(Arc::new(Inner {
            degree,
            generators: kept,
            chain,
        })))
    }

    /// Degree is taken from the first generator; an empty list is an error.
    pub fn from_generators(generators: &[Permutation]) -> Result<Self> {
        let degree = generators
            .first()
            .map(Permutation::degree)
            .ok_or_else(|| Error::InvalidArgument("empty generator list needs an explicit degree".into()))?;
        Self::new(degree, generators)
    }

    pub fn trivial(degree: usize) -> Self {
        Group::new(degree, &[]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.0.generators
    }

    pub fn order(&self) -> u128 {
        self.0.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.generators.is_empty()
    }

    pub fn base(&self) -> Vec<usize> {
        self.0.chain.base()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.0.chain.orbit_sizes()
    }

    /// Exact membership; permutations of another degree are never members.
    pub fn contains(&self, p: &Permutation) -> bool {
        self.0.chain.contains(p)
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    /// Element with index `k` in the chain's mixed-radix numbering.
    pub fn element_at(&self, k: u128) -> Permutation {
        self.0.chain.element_at(k % self.order())
    }

    pub(crate) fn raw_elements(&self) -> Vec<Permutation> {
        self.0.chain.all_elements()
    }

    /// Canonical representative of the right coset `self·g`.
    pub fn coset_representative(&self, g: &Permutation) -> Permutation {
        self.0.chain.coset_canonical(g)
    }

    fn check_degree(&self, other: usize) -> Result<()> {
        if self.degree() != other {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other,
            });
        }
        Ok(())
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree() == other.degree()
            && self.order() <= other.order()
            && other.order().is_multiple_of(self.order())
            && self.generators().iter().all(|g| other.contains(g))
    }

    /// Subgroup generated by `self` and the extra elements.
    pub fn with_generators(&self, extra: &[Permutation]) -> Result<Group> {
        let mut gens = self.generators().to_vec();
        gens.extend_from_slice(extra);
        Group::new(self.degree(), &gens)
    }

    /// `⟨self, other⟩`.
    pub fn join(&self, other: &Group) -> Result<Group> {
        self.check_degree(other.degree())?;
        if other.is_subgroup_of(self) {
            return Ok(self.clone());
        }
        self.with_generators(other.generators())
    }

    /// Join of a list of groups of the given degree.
    pub fn join_all<'a>(degree: usize, groups: impl IntoIterator<Item = &'a Group>) -> Result<Group> {
        let mut acc = Group::trivial(degree);
        for g in groups {
            acc = acc.join(g)?;
        }
        Ok(acc)
    }

    /// `self^x = x⁻¹·self·x`.
    pub fn conjugate(&self, x: &Permutation) -> Result<Group> {
        self.check_degree(x.degree())?;
        let gens: Vec<Permutation> = self.generators().iter().map(|g| g.conj(x)).collect();
        Group::new(self.degree(), &gens)
    }

    /// True when `x` normalizes `self`.
    pub fn is_normalized_by(&self, x: &Permutation) -> bool {
        x.degree() == self.degree() && self.generators().iter().all(|g| self.contains(&g.conj(x)))
    }

    /// True when `self ⊴ ambient`.
    pub fn is_normal_in(&self, ambient: &Group) -> bool {
        self.is_subgroup_of(ambient) && ambient.generators().iter().all(|x| self.is_normalized_by(x))
    }

    /// Smallest normal subgroup of `self` containing `s`.
    pub fn normal_closure(&self, s: &Group) -> Result<Group> {
        self.check_degree(s.degree())?;
        if !s.is_subgroup_of(self) {
            return Err(Error::NotSubgroup {
                what: "subgroup",
                of: "ambient group",
            });
        }
        Ok(self.normal_closure_of(s.generators()))
    }

    pub(crate) fn normal_closure_of(&self, seeds: &[Permutation]) -> Group {
        let mut closure = Group::new(self.degree(), seeds).unwrap();
        loop {
            let mut added = None;
            'scan: for n in closure.generators() {
                for x in self.generators() {
                    let c = n.conj(x);
                    if !closure.contains(&c) {
                        added = Some(c);
                        break 'scan;
                    }
                }
            }
            match added {
                Some(c) => closure = closure.with_generators(&[c]).unwrap(),
                None => return closure,
            }
        }
    }

    /// Commutator subgroup.
    pub fn derived_subgroup(&self) -> Group {
        let gens = self.generators();
        let mut commutators = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = a.inverse().mul(&b.inverse()).mul(a).mul(b);
                if !c.is_identity() {
                    commutators.push(c);
                }
            }
        }
        self.normal_closure_of(&commutators)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Stabilizer of a 0-based point from Schreier generators of its orbit.
    pub fn point_stabilizer(&self, point: usize) -> Group {
        // Schreier generators of the orbit of `point`.
        let degree = self.degree();
        let mut reps: Vec<Option<Permutation>> = alloc::vec![None; degree];
        reps[point] = Some(Permutation::identity(degree));
        let mut orbit = alloc::vec![point];
        let mut k = 0;
        while k < orbit.len() {
            let p = orbit[k];
            for g in self.generators() {
                let q = g.apply(p);
                if reps[q].is_none() {
                    reps[q] = Some(reps[p].as_ref().unwrap().mul(g));
                    orbit.push(q);
                }
            }
            k += 1;
        }
        let mut gens = Vec::new();
        for &p in &orbit {
            for g in self.generators() {
                let q = g.apply(p);
                let s = reps[p]
                    .as_ref()
                    .unwrap()
                    .mul(g)
                    .mul(&reps[q].as_ref().unwrap().inverse());
                if !s.is_identity() {
                    gens.push(s);
                }
            }
        }
        Group::new(degree, &gens).unwrap()
    }
}

/// Grows a subgroup one element at a time, keeping an irredundant generator
/// list.
pub(crate) struct SubgroupBuilder {
    degree: usize,
    chain: Chain,
    gens: Vec<Permutation>,
}

impl SubgroupBuilder {
    pub(crate) fn new(degree: usize) -> Self {
        SubgroupBuilder {
            degree,
            chain: Chain::new(degree, &[]),
            gens: Vec::new(),
        }
    }

    pub(crate) fn starting_from(group: &Group) -> Self {
        let mut b = SubgroupBuilder::new(group.degree());
        for g in group.generators() {
            b.push(g);
        }
        b
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    /// Adds `g`; returns false if it was already a member.
    pub(crate) fn push(&mut self, g: &Permutation) -> bool {
        if self.chain.add(g) {
            self.gens.push(g.clone());
            true
        } else {
            false
        }
    }

    pub(crate) fn order(&self) -> u128 {
        self.chain.order()
    }

    pub(crate) fn finish(self) -> Group {
        Group(Arc::new(Inner {
            degree: self.degree,
            generators: self.gens,
            chain: self.chain,
        }))
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Group) -> bool {
        self.degree() == other.degree()
            && self.order() == other.order()
            && self.generators().iter().all(|g| other.contains(g))
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(order {}, <", self.order())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">)")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::perm::parse_cycles;
    use alloc::collections::BTreeSet;

    fn p(s: &str, d: usize) -> Permutation {
        parse_cycles(s, d).unwrap()
    }

    fn closure_count(g: &Group) -> usize {
        let mut seen = BTreeSet::new();
        let mut stack = alloc::vec![g.identity()];
        seen.insert(g.identity());
        while let Some(x) = stack.pop() {
            for s in g.generators() {
                let y = x.mul(s);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn build_orders() {
        let s6 = Group::new(6, &[p("(1,2)", 6), p("(1,2,3,4,5,6)", 6)]).unwrap();
        assert_eq!(s6.order(), 720);
        let a5 = Group::new(5, &[p("(1,2,3)", 5), p("(2,3,4)", 5), p("(3,4,5)", 5)]).unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(Group::trivial(4).order(), 1);
        assert!(Group::new(4, &[p("(1,2)", 3)]).is_err());
    }

    #[test]
    fn chain_order_matches_closure() {
        for g in [
            named::symmetric(4),
            named::alternating(5),
            named::dihedral(6),
            named::cyclic(7),
            named::direct_product(&named::symmetric(3), &named::symmetric(3)),
        ] {
            assert_eq!(g.order() as usize, closure_count(&g));
            assert!(g.generators().iter().all(|x| g.contains(x)));
        }
    }

    #[test]
    fn membership() {
        let a5 = named::alternating(5);
        assert!(!a5.contains(&p("(1,2)", 5)));
        assert!(a5.contains(&p("(1,2)(3,4)", 5)));
        assert!(!a5.contains(&p("(1,2)", 6)));
    }

    #[test]
    fn joins() {
        let a = Group::new(4, &[p("(1,2)", 4)]).unwrap();
        assert_eq!(a.join(&a).unwrap(), a);
        let b = Group::new(4, &[p("(2,3)", 4)]).unwrap();
        let j = a.join(&b).unwrap();
        assert_eq!(j.order(), 6);
        assert_eq!(j, b.join(&a).unwrap());
    }

    #[test]
    fn conjugate_subgroup() {
        let h = Group::new(3, &[p("(1,2)", 3)]).unwrap();
        assert_eq!(h.conjugate(&p("()", 3)).unwrap(), h);
        let c = h.conjugate(&p("(2,3)", 3)).unwrap();
        assert_eq!(c, Group::new(3, &[p("(1,3)", 3)]).unwrap());
    }

    #[test]
    fn normal_closure_and_derived() {
        let s4 = named::symmetric(4);
        let c2 = Group::new(4, &[p("(1,2)(3,4)", 4)]).unwrap();
        let v4 = s4.normal_closure(&c2).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(s4.derived_subgroup(), named::alternating(4));
        assert_eq!(named::alternating(4).derived_subgroup(), v4);
        assert!(v4.derived_subgroup().is_trivial());
        assert!(s4.normal_closure(&Group::new(4, &[p("(1,2,3,4,5)", 5)]).unwrap_or(Group::trivial(5))).is_err());
    }

    #[test]
    fn coset_representative_is_canonical() {
        let s4 = named::symmetric(4);
        let a4 = named::alternating(4);
        let x = p("(1,2)", 4);
        let r = a4.coset_representative(&x);
        for k in 0..a4.order() {
            let y = a4.element_at(k).mul(&x);
            assert_eq!(a4.coset_representative(&y), r);
        }
        assert_ne!(a4.coset_representative(&s4.identity()), r);
    }

    #[test]
    fn point_stabilizer_of_s5() {
        let st = named::symmetric(5).point_stabilizer(4);
        assert_eq!(st.order(), 24);
        assert!(st.generators().iter().all(|g| g.apply(4) == 4));
    }
}
