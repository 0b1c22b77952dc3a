//! Quotients `G/N` realized as the action of `G` on the right cosets of `N`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::engine::{require_subgroup, Engine};
use crate::error::{Cap, Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

/// The natural map `G → G/N`. The image acts regularly on the cosets, so
/// coset 0 (the kernel itself) identifies each image element.
#[derive(Clone, Debug)]
pub struct Epimorphism {
    source: Group,
    kernel: Group,
    image: Group,
    /// Canonical representative of each coset; `reps[0]` lies in the kernel.
    reps: Vec<Permutation>,
    index_of: BTreeMap<Permutation, u32>,
}

impl Epimorphism {
    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn kernel(&self) -> &Group {
        &self.kernel
    }

    pub fn image(&self) -> &Group {
        &self.image
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    fn action(&self, g: &Permutation) -> Permutation {
        let images: Vec<u32> = self
            .reps
            .iter()
            .map(|r| self.index_of[&self.kernel.coset_representative(&r.mul(g))])
            .collect();
        Permutation::from_images_unchecked(images)
    }

    /// Image of a source element.
    pub fn push_forward(&self, g: &Permutation) -> Result<Permutation> {
        if !self.source.contains(g) {
            return Err(Error::NotSubgroup {
                what: "element",
                of: "source group",
            });
        }
        Ok(self.action(g))
    }

    /// Image of a subgroup of the source.
    pub fn push_subgroup(&self, h: &Group) -> Result<Group> {
        require_subgroup(h, &self.source, "H", "source group")?;
        let gens: Vec<Permutation> = h.generators().iter().map(|g| self.action(g)).collect();
        Group::new(self.index(), &gens)
    }

    /// A source element mapping to `q`.
    pub fn lift(&self, q: &Permutation) -> Result<Permutation> {
        if !self.image.contains(q) {
            return Err(Error::NotSubgroup {
                what: "element",
                of: "image group",
            });
        }
        Ok(self.reps[q.apply(0)].clone())
    }

    /// Full preimage of a subgroup of the image.
    pub fn preimage(&self, q: &Group) -> Result<Group> {
        require_subgroup(q, &self.image, "Q", "image group")?;
        let mut gens = self.kernel.generators().to_vec();
        for g in q.generators() {
            gens.push(self.lift(g)?);
        }
        Group::new(self.source.degree(), &gens)
    }
}

impl Engine {
    /// `G → G/N` for `N ⊴ G`.
    pub fn quotient(&self, g: &Group, n: &Group) -> Result<Epimorphism> {
        require_subgroup(n, g, "N", "G")?;
        if !n.is_normal_in(g) {
            return Err(Error::NotNormal { what: "N", of: "G" });
        }
        let index = g.order() / n.order();
        self.check_cap(Cap::Cosets, index)?;
        let start = n.coset_representative(&g.identity());
        let mut reps = alloc::vec![start.clone()];
        let mut index_of = BTreeMap::new();
        index_of.insert(start, 0u32);
        let mut k = 0;
        while k < reps.len() {
            for s in g.generators() {
                let c = n.coset_representative(&reps[k].mul(s));
                if !index_of.contains_key(&c) {
                    index_of.insert(c.clone(), reps.len() as u32);
                    reps.push(c);
                }
            }
            k += 1;
        }
        debug_assert_eq!(reps.len() as u128, index);
        let mut hom = Epimorphism {
            source: g.clone(),
            kernel: n.clone(),
            image: Group::trivial(reps.len()),
            reps,
            index_of,
        };
        let gens: Vec<Permutation> = g.generators().iter().map(|s| hom.action(s)).collect();
        hom.image = Group::new(hom.index(), &gens)?;
        Ok(hom)
    }
}
