//! Normal structure: normal subgroups, simplicity, composition factors.

use alloc::vec::Vec;

use crate::arith::{is_prime, prime_factors};
use crate::engine::Engine;
use crate::error::Result;
use crate::group::Group;

/// One composition factor, identified only by its order and whether it is
/// abelian (cyclic of prime order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompositionFactor {
    pub order: u128,
    pub abelian: bool,
}

/// Which proper nontrivial normal subgroup to split along.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Split {
    /// Commutator subgroup when proper, a minimal-order normal subgroup for
    /// perfect groups.
    #[default]
    Derived,
    /// A normal subgroup of least order.
    Minimal,
    /// A proper normal subgroup of largest order.
    Maximal,
}

impl Engine {
    /// Normal closures of single elements, closed under joins; ascending by
    /// order.
    pub fn normal_subgroups(&self, g: &Group) -> Result<Vec<Group>> {
        let mut found: Vec<Group> = alloc::vec![Group::trivial(g.degree())];
        for rep in self.class_representatives(g)? {
            if rep.is_identity() {
                continue;
            }
            let n = g.normal_closure_of(core::slice::from_ref(&rep));
            if !found.contains(&n) {
                found.push(n);
            }
        }
        let mut i = 0;
        while i < found.len() {
            for j in 0..i {
                let joined = found[i].join(&found[j])?;
                if !found.contains(&joined) {
                    found.push(joined);
                }
            }
            i += 1;
        }
        found.sort_by_key(Group::order);
        Ok(found)
    }

    /// A proper nontrivial normal subgroup, or `None` for simple (or trivial)
    /// groups. Scans class representatives in ascending order.
    fn some_proper_normal(&self, g: &Group) -> Result<Option<Group>> {
        if g.is_trivial() {
            return Ok(None);
        }
        for rep in self.class_representatives(g)? {
            if rep.is_identity() {
                continue;
            }
            let n = g.normal_closure_of(core::slice::from_ref(&rep));
            if n.order() < g.order() {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }

    pub fn is_simple(&self, g: &Group) -> Result<bool> {
        if g.is_trivial() {
            return Ok(false);
        }
        if is_prime(g.order()) {
            return Ok(true);
        }
        if !g.is_abelian() && g.derived_subgroup().order() < g.order() {
            return Ok(false);
        }
        Ok(self.some_proper_normal(g)?.is_none())
    }

    pub fn composition_factors(&self, g: &Group) -> Result<Vec<CompositionFactor>> {
        self.composition_factors_with(g, Split::Derived)
    }

    /// Composition factors as a sorted multiset.
    pub fn composition_factors_with(&self, g: &Group, split: Split) -> Result<Vec<CompositionFactor>> {
        let mut out = Vec::new();
        self.collect_factors(g, split, &mut out)?;
        out.sort();
        Ok(out)
    }

    fn collect_factors(&self, g: &Group, split: Split, out: &mut Vec<CompositionFactor>) -> Result<()> {
        if g.is_trivial() {
            return Ok(());
        }
        if is_prime(g.order()) {
            out.push(CompositionFactor {
                order: g.order(),
                abelian: true,
            });
            return Ok(());
        }
        let n = match split {
            Split::Derived => {
                let d = g.derived_subgroup();
                if d.order() < g.order() {
                    for p in prime_factors(g.order() / d.order()) {
                        out.push(CompositionFactor { order: p, abelian: true });
                    }
                    return self.collect_factors(&d, split, out);
                }
                self.some_proper_normal(g)?
            }
            Split::Minimal | Split::Maximal => {
                let proper: Vec<Group> = self
                    .normal_subgroups(g)?
                    .into_iter()
                    .filter(|n| !n.is_trivial() && n.order() < g.order())
                    .collect();
                if split == Split::Minimal {
                    proper.first().cloned()
                } else {
                    proper.last().cloned()
                }
            }
        };
        match n {
            None => out.push(CompositionFactor {
                order: g.order(),
                abelian: false,
            }),
            Some(n) => {
                self.collect_factors(&n, split, out)?;
                let q = self.quotient(g, &n)?;
                self.collect_factors(q.image(), split, out)?;
            }
        }
        Ok(())
    }

    pub fn is_solvable(&self, g: &Group) -> bool {
        let mut current = g.clone();
        while !current.is_trivial() {
            let d = current.derived_subgroup();
            if d.order() == current.order() {
                return false;
            }
            current = d;
        }
        true
    }
}
