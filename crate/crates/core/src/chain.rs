//! Deterministic Schreier-Sims stabilizer chains.

use alloc::vec::Vec;

use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[q]` maps the base point to `q`.
    transversal: Vec<Option<Permutation>>,
    inverse: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = alloc::vec![None; degree];
        let mut inverse = alloc::vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        inverse[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: alloc::vec![base],
            transversal,
            inverse,
        }
    }
}

/// Base and strong generating set. Base points are the smallest points moved
/// by the first generator reaching each level.
#[derive(Clone, Debug)]
pub(crate) struct Chain {
    degree: usize,
    levels: Vec<Level>,
}

impl Chain {
    pub(crate) fn new(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = Chain {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            chain.extend(0, g.clone());
        }
        chain
    }

    /// Adds a generator; returns false if it was already a member.
    pub(crate) fn add(&mut self, g: &Permutation) -> bool {
        if self.contains(g) {
            return false;
        }
        self.extend(0, g.clone());
        true
    }

    pub(crate) fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub(crate) fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Residue of `g` after stripping through levels `from..`.
    fn sift(&self, from: usize, g: &Permutation) -> Permutation {
        let mut h = g.clone();
        for level in &self.levels[from..] {
            let q = h.apply(level.base);
            match &level.inverse[q] {
                Some(u) => h = h.mul(u),
                None => return h,
            }
        }
        h
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(0, g).is_identity()
    }

    fn extend(&mut self, depth: usize, g: Permutation) {
        if self.sift(depth, &g).is_identity() {
            return;
        }
        if depth == self.levels.len() {
            let base = g.first_moved().expect("non-identity residue moves a point");
            self.levels.push(Level::new(base, self.degree));
        }
        let level = &mut self.levels[depth];
        level.gens.push(g);
        let newest = level.gens.len() - 1;
        let mut work: Vec<(usize, usize)> = level.orbit.iter().map(|&p| (p, newest)).collect();
        while let Some((p, s)) = work.pop() {
            let level = &mut self.levels[depth];
            let gen = &level.gens[s];
            let q = gen.apply(p);
            let candidate = level.transversal[p].as_ref().unwrap().mul(gen);
            match &level.inverse[q] {
                None => {
                    level.inverse[q] = Some(candidate.inverse());
                    level.transversal[q] = Some(candidate);
                    level.orbit.push(q);
                    work.extend((0..level.gens.len()).map(|t| (q, t)));
                }
                Some(back) => {
                    let schreier = candidate.mul(back);
                    if !schreier.is_identity() {
                        self.extend(depth + 1, schreier);
                    }
                }
            }
        }
    }

    /// The element with mixed-radix index `k` (`k < order`). Distinct indices
    /// give distinct elements.
    pub(crate) fn element_at(&self, mut k: u128) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        // g = u_last * ... * u_first
        let mut picks = Vec::with_capacity(self.levels.len());
        for level in &self.levels {
            let n = level.orbit.len() as u128;
            picks.push((k % n) as usize);
            k /= n;
        }
        for (level, &pick) in self.levels.iter().zip(&picks).rev() {
            let u = level.transversal[level.orbit[pick]].as_ref().unwrap();
            g = g.mul(u);
        }
        g
    }

    /// All elements, unsorted.
    pub(crate) fn all_elements(&self) -> Vec<Permutation> {
        let mut out = alloc::vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for e in &out {
                for &q in &level.orbit {
                    next.push(e.mul(level.transversal[q].as_ref().unwrap()));
                }
            }
            out = next;
        }
        out
    }

    /// Canonical element of the right coset `self·g`: at each level pick the
    /// coset member sending the base point to the smallest possible point.
    pub(crate) fn coset_canonical(&self, g: &Permutation) -> Permutation {
        let mut h = g.clone();
        for level in &self.levels {
            let mut best: Option<(usize, usize)> = None;
            for &q in &level.orbit {
                // u_q then h sends the base point to h(q)
                let image = h.apply(q);
                if best.is_none_or(|(b, _)| image < b) {
                    best = Some((image, q));
                }
            }
            let (_, q) = best.unwrap();
            h = level.transversal[q].as_ref().unwrap().mul(&h);
        }
        h
    }
}
