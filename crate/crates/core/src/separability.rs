//! X-separability: the radicals `O_X` and `O_X'`, the upper alternating
//! series, X-length, Hall X-subgroups and maximal X-subgroups.

use alloc::vec::Vec;

use crate::engine::{require_subgroup, Engine};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;
use crate::xclass::ClassSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    /// The factor lies in X.
    X,
    /// The factor is an X'-group.
    XPrime,
}

/// `1 = T_0 < T_1 < …` where each step takes the preimage of `O_X'` or `O_X`
/// of `G/T`, alternating and starting with an X'-step. Steps that do not grow
/// are skipped; two consecutive stalls end the chain.
#[derive(Debug, Clone)]
pub struct UpperXSeries {
    pub terms: Vec<Group>,
    pub kinds: Vec<FactorKind>,
    pub separable: bool,
    pub x_factor_count: usize,
}

impl UpperXSeries {
    /// X-length, defined only for separable groups.
    pub fn x_length(&self) -> Option<usize> {
        self.separable.then_some(self.x_factor_count)
    }
}

impl Engine {
    fn radical(&self, class: &ClassSpec, g: &Group, want_x: bool) -> Result<Group> {
        let mut acc = Group::trivial(g.degree());
        for n in self.normal_subgroups(g)? {
            if n.is_subgroup_of(&acc) {
                continue;
            }
            let inside = if want_x {
                self.is_in_class(class, &n)?
            } else {
                self.is_x_prime_group(class, &n)
            };
            if inside {
                acc = acc.join(&n)?;
            }
        }
        Ok(acc)
    }

    /// Largest normal X-subgroup.
    pub fn o_x(&self, class: &ClassSpec, g: &Group) -> Result<Group> {
        self.radical(class, g, true)
    }

    /// Largest normal X'-subgroup.
    pub fn o_x_prime(&self, class: &ClassSpec, g: &Group) -> Result<Group> {
        self.radical(class, g, false)
    }

    pub fn upper_x_series(&self, class: &ClassSpec, g: &Group) -> Result<UpperXSeries> {
        let mut t = Group::trivial(g.degree());
        let mut terms = alloc::vec![t.clone()];
        let mut kinds = Vec::new();
        let mut want_x = false;
        let mut stalls = 0;
        while t.order() < g.order() && stalls < 2 {
            let next = if t.is_trivial() {
                self.radical(class, g, want_x)?
            } else {
                let q = self.quotient(g, &t)?;
                let r = self.radical(class, q.image(), want_x)?;
                q.preimage(&r)?
            };
            if next.order() > t.order() {
                terms.push(next.clone());
                kinds.push(if want_x { FactorKind::X } else { FactorKind::XPrime });
                t = next;
                stalls = 0;
            } else {
                stalls += 1;
            }
            want_x = !want_x;
        }
        let separable = t.order() == g.order();
        let x_factor_count = kinds.iter().filter(|k| **k == FactorKind::X).count();
        Ok(UpperXSeries {
            terms,
            kinds,
            separable,
            x_factor_count,
        })
    }

    pub fn is_x_separable(&self, class: &ClassSpec, g: &Group) -> Result<bool> {
        Ok(self.upper_x_series(class, g)?.separable)
    }

    pub fn x_length(&self, class: &ClassSpec, g: &Group) -> Result<Option<usize>> {
        Ok(self.upper_x_series(class, g)?.x_length())
    }

    /// `H` is an X-subgroup of `G` whose index has no characteristic prime.
    pub fn is_hall_x(&self, class: &ClassSpec, g: &Group, h: &Group) -> Result<bool> {
        require_subgroup(h, g, "H", "G")?;
        Ok(class.char_primes_dividing(g.order() / h.order()).is_empty() && self.is_in_class(class, h)?)
    }

    /// Lattice indices of all maximal X-subgroups.
    pub fn maximal_x_indices(&self, class: &ClassSpec, g: &Group) -> Result<Vec<usize>> {
        let lat = self.lattice(g)?;
        let mut class_in = Vec::with_capacity(lat.classes().len());
        for c in lat.classes() {
            class_in.push(self.is_in_class(class, lat.get(c[0]))?);
        }
        let in_x: Vec<bool> = (0..lat.len()).map(|i| class_in[lat.class_of(i)]).collect();
        Ok((0..lat.len())
            .filter(|&i| in_x[i])
            .filter(|&i| {
                !(0..lat.len()).any(|j| {
                    in_x[j] && lat.get(j).order() > lat.get(i).order() && lat.is_contained(i, j)
                })
            })
            .collect())
    }

    /// Every maximal X-subgroup.
    pub fn all_maximal_x_subgroups(&self, class: &ClassSpec, g: &Group) -> Result<Vec<Group>> {
        let lat = self.lattice(g)?;
        Ok(self
            .maximal_x_indices(class, g)?
            .into_iter()
            .map(|i| lat.get(i).clone())
            .collect())
    }

    /// One maximal X-subgroup per conjugacy class, in lattice class order.
    pub fn maximal_x_subgroups(&self, class: &ClassSpec, g: &Group) -> Result<Vec<Group>> {
        let lat = self.lattice(g)?;
        let mut seen = Vec::new();
        let mut out = Vec::new();
        for i in self.maximal_x_indices(class, g)? {
            let c = lat.class_of(i);
            if !seen.contains(&c) {
                seen.push(c);
                out.push(lat.get(lat.classes()[c][0]).clone());
            }
        }
        Ok(out)
    }

    /// A maximal X-subgroup of the separable group `J` containing `K`, grown
    /// by adjoining elements of `J` in ascending order while the result stays
    /// in X. In a separable group this is a Hall X-subgroup; anything else is
    /// reported as a theorem violation.
    pub fn hall_containing(&self, class: &ClassSpec, j: &Group, k: &Group) -> Result<Group> {
        require_subgroup(k, j, "K", "J")?;
        if !self.is_x_separable(class, j)? {
            return Err(Error::NotSeparable);
        }
        if !self.is_in_class(class, k)? {
            return Err(Error::Precondition("K is not an X-group".into()));
        }
        let mut t = k.clone();
        for g in self.elements(j)?.iter() {
            if t.contains(g) {
                continue;
            }
            let candidate = t.with_generators(core::slice::from_ref(g))?;
            if self.is_in_class(class, &candidate)? {
                t = candidate;
            }
        }
        if !self.is_hall_x(class, j, &t)? {
            return Err(Error::TheoremViolation(alloc::format!(
                "maximal X-subgroup of order {} in a separable group of order {} is not Hall",
                t.order(),
                j.order()
            )));
        }
        Ok(t)
    }

    /// Writes `g = v·m` with `v ∈ V` and `m ∈ N_G(H)`, for `V ⊴ G` separable
    /// and `H` Hall in `V`: find `x ∈ V` with `H^g = H^x`, then
    /// `m = g·x⁻¹` normalizes `H` and `v = m·x·m⁻¹`.
    pub fn frattini_decompose(
        &self,
        class: &ClassSpec,
        g: &Group,
        v: &Group,
        h: &Group,
        elem: &Permutation,
    ) -> Result<(Permutation, Permutation)> {
        require_subgroup(v, g, "V", "G")?;
        if !v.is_normal_in(g) {
            return Err(Error::NotNormal { what: "V", of: "G" });
        }
        if !g.contains(elem) {
            return Err(Error::Precondition("element does not lie in G".into()));
        }
        if !self.is_x_separable(class, v)? {
            return Err(Error::NotSeparable);
        }
        if !self.is_hall_x(class, v, h)? {
            return Err(Error::Precondition("H is not a Hall X-subgroup of V".into()));
        }
        let hg = h.conjugate(elem)?;
        let x = self.are_conjugate(v, h, &hg)?.ok_or_else(|| {
            Error::TheoremViolation("Hall X-subgroups of a separable group are not conjugate".into())
        })?;
        let m = elem.mul(&x.inverse());
        let vpart = m.mul(&x).mul(&m.inverse());
        debug_assert_eq!(&vpart.mul(&m), elem);
        if !v.contains(&vpart) || !h.is_normalized_by(&m) {
            return Err(Error::TheoremViolation("Frattini factorization failed".into()));
        }
        Ok((vpart, m))
    }
}
