//! Cap-aware operations that enumerate group elements.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::error::{Cap, Error, Result};
use crate::group::{Group, SubgroupBuilder};
use crate::lattice::SubgroupLattice;
use crate::perm::Permutation;

/// Enumeration limits. Exceeding one is an error, never a truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group whose elements may be listed.
    pub max_elements: u128,
    /// Largest index for a coset action.
    pub max_cosets: u128,
    /// Largest group whose subgroup lattice may be built.
    pub max_lattice: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 100_000,
            max_cosets: 10_000,
            max_lattice: 1_000,
        }
    }
}

const ELEMENT_CACHE: usize = 8;

/// Holds the caps and per-session caches. Not shared across threads; build
/// one per worker.
pub struct Engine {
    limits: Limits,
    elements: RefCell<Vec<(Group, Rc<[Permutation]>)>>,
    pub(crate) lattices: RefCell<Vec<(Group, Rc<SubgroupLattice>)>>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(Limits::default())
    }
}

impl Engine {
    pub fn new(limits: Limits) -> Self {
        Engine {
            limits,
            elements: RefCell::new(Vec::new()),
            lattices: RefCell::new(Vec::new()),
        }
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub(crate) fn check_cap(&self, cap: Cap, needed: u128) -> Result<()> {
        let limit = match cap {
            Cap::Elements => self.limits.max_elements,
            Cap::Cosets => self.limits.max_cosets,
            Cap::Lattice => self.limits.max_lattice,
        };
        if needed > limit {
            return Err(Error::CapExceeded { cap, limit, needed });
        }
        Ok(())
    }

    /// Every element exactly once, in ascending image-table order.
    pub fn elements(&self, g: &Group) -> Result<Rc<[Permutation]>> {
        self.check_cap(Cap::Elements, g.order())?;
        if let Some((_, e)) = self.elements.borrow().iter().find(|(h, _)| h == g) {
            return Ok(e.clone());
        }
        let mut all = g.raw_elements();
        all.sort_unstable();
        let all: Rc<[Permutation]> = all.into();
        if g.order() > 2 {
            let mut cache = self.elements.borrow_mut();
            if cache.len() == ELEMENT_CACHE {
                cache.remove(0);
            }
            cache.push((g.clone(), all.clone()));
        }
        Ok(all)
    }

    /// `H ∩ K`, enumerating the smaller of the two.
    pub fn intersection(&self, h: &Group, k: &Group) -> Result<Group> {
        check_same_degree(h, k)?;
        if h.is_subgroup_of(k) {
            return Ok(h.clone());
        }
        if k.is_subgroup_of(h) {
            return Ok(k.clone());
        }
        let (small, large) = if h.order() <= k.order() { (h, k) } else { (k, h) };
        let elems = self.elements(small)?;
        let mut b = SubgroupBuilder::new(h.degree());
        for e in elems.iter() {
            if !b.contains(e) && large.contains(e) {
                b.push(e);
            }
        }
        Ok(b.finish())
    }

    /// `N_G(H)` by a scan over the elements of `G`.
    pub fn normalizer(&self, g: &Group, h: &Group) -> Result<Group> {
        require_subgroup(h, g, "H", "G")?;
        let elems = self.elements(g)?;
        let mut b = SubgroupBuilder::starting_from(h);
        for x in elems.iter() {
            if !b.contains(x) && h.is_normalized_by(x) {
                b.push(x);
                if b.order() == g.order() {
                    break;
                }
            }
        }
        Ok(b.finish())
    }

    /// Subnormal defect of `H` in `G`: iterated normal closures
    /// `G = N_0 ⊵ N_1 ⊵ …` with `N_{k+1}` the normal closure of `H` in `N_k`.
    /// Returns `Some(k)` when `N_k = H`, `None` when the chain stalls above `H`.
    pub fn subnormal_defect(&self, g: &Group, h: &Group) -> Result<Option<usize>> {
        require_subgroup(h, g, "H", "G")?;
        let mut current = g.clone();
        let mut k = 0;
        loop {
            if current.order() == h.order() {
                return Ok(Some(k));
            }
            let next = current.normal_closure_of(h.generators());
            if next.order() == current.order() {
                return Ok(None);
            }
            current = next;
            k += 1;
        }
    }

    pub fn is_subnormal(&self, g: &Group, h: &Group) -> Result<bool> {
        Ok(self.subnormal_defect(g, h)?.is_some())
    }

    /// Sorted element list, an exact canonical key for a subgroup.
    pub fn subgroup_key(&self, h: &Group) -> Result<Vec<Permutation>> {
        Ok(self.elements(h)?.to_vec())
    }

    /// The conjugacy class of `H` under `J`, one entry per right coset of
    /// `N_J(H)` in `J`, each with a conjugating element of `J`. Deterministic
    /// breadth-first order starting from `(H, 1)`.
    pub fn conjugates(&self, j: &Group, h: &Group) -> Result<Vec<(Group, Permutation)>> {
        check_same_degree(j, h)?;
        let mut seen = BTreeMap::new();
        let mut out = alloc::vec![(h.clone(), j.identity())];
        seen.insert(self.subgroup_key(h)?, 0usize);
        let mut k = 0;
        while k < out.len() {
            for s in j.generators() {
                let (c, x) = &out[k];
                let next = c.conjugate(s)?;
                let key = self.subgroup_key(&next)?;
                if let alloc::collections::btree_map::Entry::Vacant(slot) = seen.entry(key) {
                    slot.insert(out.len());
                    let y = x.mul(s);
                    out.push((next, y));
                }
            }
            k += 1;
        }
        Ok(out)
    }

    /// Some `x ∈ J` with `H^x = K`, walking the conjugacy class of `H`.
    pub fn are_conjugate(&self, j: &Group, h: &Group, k: &Group) -> Result<Option<Permutation>> {
        require_subgroup(h, j, "H", "J")?;
        require_subgroup(k, j, "K", "J")?;
        if h.order() != k.order() {
            return Ok(None);
        }
        if h == k {
            return Ok(Some(j.identity()));
        }
        let target = self.subgroup_key(k)?;
        let mut seen = BTreeMap::new();
        seen.insert(self.subgroup_key(h)?, ());
        let mut queue = alloc::vec![(h.clone(), j.identity())];
        let mut idx = 0;
        while idx < queue.len() {
            for s in j.generators() {
                let (c, x) = &queue[idx];
                let next = c.conjugate(s)?;
                let key = self.subgroup_key(&next)?;
                if key == target {
                    return Ok(Some(x.mul(s)));
                }
                if seen.insert(key, ()).is_none() {
                    let y = x.mul(s);
                    queue.push((next, y));
                }
            }
            idx += 1;
        }
        Ok(None)
    }

    /// Oracle path for [`Engine::are_conjugate`]: tries every element of `J`.
    pub fn are_conjugate_exhaustive(&self, j: &Group, h: &Group, k: &Group) -> Result<Option<Permutation>> {
        require_subgroup(h, j, "H", "J")?;
        require_subgroup(k, j, "K", "J")?;
        if h.order() != k.order() {
            return Ok(None);
        }
        for x in self.elements(j)?.iter() {
            if h.generators().iter().all(|g| k.contains(&g.conj(x))) {
                return Ok(Some(x.clone()));
            }
        }
        Ok(None)
    }

    /// Some `x ∈ J` with `K^x ≤ H`, by exhaustive search.
    pub fn conjugate_into(&self, j: &Group, k: &Group, h: &Group) -> Result<Option<Permutation>> {
        check_same_degree(j, k)?;
        check_same_degree(j, h)?;
        if !h.order().is_multiple_of(k.order()) {
            return Ok(None);
        }
        for x in self.elements(j)?.iter() {
            if k.generators().iter().all(|g| h.contains(&g.conj(x))) {
                return Ok(Some(x.clone()));
            }
        }
        Ok(None)
    }

    /// Conjugacy class representatives of elements, in ascending order of the
    /// representative.
    pub fn class_representatives(&self, g: &Group) -> Result<Vec<Permutation>> {
        let elems = self.elements(g)?;
        let mut seen = alloc::collections::BTreeSet::new();
        let mut reps = Vec::new();
        for e in elems.iter() {
            if seen.contains(e) {
                continue;
            }
            reps.push(e.clone());
            let mut stack = alloc::vec![e.clone()];
            seen.insert(e.clone());
            while let Some(x) = stack.pop() {
                for s in g.generators() {
                    let y = x.conj(s);
                    if !seen.contains(&y) {
                        seen.insert(y.clone());
                        stack.push(y);
                    }
                }
            }
        }
        Ok(reps)
    }
}

pub(crate) fn check_same_degree(a: &Group, b: &Group) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(())
}

pub(crate) fn require_subgroup(h: &Group, g: &Group, what: &'static str, of: &'static str) -> Result<()> {
    check_same_degree(h, g)?;
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup { what, of });
    }
    Ok(())
}
