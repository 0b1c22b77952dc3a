//! Exhaustive subgroup lattices of small groups.
//!
//! Elements of the ambient group are numbered in ascending image-table order
//! and a subgroup is stored as a bitset over those numbers. The bitset is the
//! canonical signature: two subgroups are equal exactly when their bitsets are.

use alloc::collections::{BTreeMap, BinaryHeap};
use alloc::rc::Rc;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::engine::Engine;
use crate::error::{Cap, Result};
use crate::group::Group;
use crate::perm::Permutation;

type Bits = Vec<u64>;

fn bit(bits: &[u64], i: u32) -> bool {
    bits[(i / 64) as usize] >> (i % 64) & 1 == 1
}

fn set_bit(bits: &mut [u64], i: u32) {
    bits[(i / 64) as usize] |= 1 << (i % 64);
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Ambient elements with their multiplication table.
struct Table {
    elements: Rc<[Permutation]>,
    index: BTreeMap<Permutation, u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: u32,
}

impl Table {
    fn new(elements: Rc<[Permutation]>) -> Self {
        let n = elements.len();
        let index: BTreeMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        let mut mul = alloc::vec![0u32; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                mul[i * n + j] = index[&a.mul(b)];
            }
        }
        let inv = elements.iter().map(|e| index[&e.inverse()]).collect();
        let identity = index[&Permutation::identity(elements[0].degree())];
        Table {
            elements,
            index,
            mul,
            inv,
            identity,
        }
    }

    fn len(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.len() + b as usize]
    }

    fn words(&self) -> usize {
        self.len().div_ceil(64)
    }

    /// Subgroup generated by `gens`, seeded with the members of `start`.
    fn closure(&self, start: Option<&Bits>, gens: &[u32]) -> (Bits, Vec<u32>) {
        let mut bits = match start {
            Some(b) => b.clone(),
            None => {
                let mut b = alloc::vec![0u64; self.words()];
                set_bit(&mut b, self.identity);
                b
            }
        };
        let mut list: Vec<u32> = members_of(&bits).collect();
        let mut k = 0;
        while k < list.len() {
            let x = list[k];
            for &s in gens {
                let y = self.mul(x, s);
                if !bit(&bits, y) {
                    set_bit(&mut bits, y);
                    list.push(y);
                }
            }
            k += 1;
        }
        (bits, list)
    }

    fn conjugate_bits(&self, bits: &Bits, s: u32) -> Bits {
        let si = self.inv[s as usize];
        let mut out = alloc::vec![0u64; self.words()];
        for x in members_of(bits) {
            set_bit(&mut out, self.mul(self.mul(si, x), s));
        }
        out
    }
}

fn members_of(bits: &[u64]) -> impl Iterator<Item = u32> + '_ {
    bits.iter().enumerate().flat_map(|(w, &word)| {
        (0..64u32).filter(move |b| word >> b & 1 == 1).map(move |b| w as u32 * 64 + b)
    })
}

/// Every subgroup of a group, with conjugacy classes.
pub struct SubgroupLattice {
    ambient: Group,
    table: Table,
    groups: Vec<Group>,
    bits: Vec<Bits>,
    lookup: BTreeMap<Bits, usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl SubgroupLattice {
    fn build(ambient: &Group, elements: Rc<[Permutation]>) -> Self {
        let table = Table::new(elements);
        let degree = ambient.degree();

        // Seeds: distinct cyclic subgroups, with a generator each.
        let mut found: Vec<(Bits, Vec<u32>)> = Vec::new();
        let mut lookup: BTreeMap<Bits, usize> = BTreeMap::new();
        let mut cyclic_gens: Vec<u32> = Vec::new();
        let trivial = table.closure(None, &[]).0;
        lookup.insert(trivial.clone(), 0);
        found.push((trivial, Vec::new()));
        for g in 0..table.len() as u32 {
            if g == table.identity {
                continue;
            }
            let (bits, _) = table.closure(None, &[g]);
            if !lookup.contains_key(&bits) {
                lookup.insert(bits.clone(), found.len());
                found.push((bits, alloc::vec![g]));
                cyclic_gens.push(g);
            }
        }

        // Joins <H, c> with cyclic seeds, smallest subgroups first.
        let mut frontier: BinaryHeap<Reverse<(u32, usize)>> = found
            .iter()
            .enumerate()
            .map(|(i, (b, _))| Reverse((members_of(b).count() as u32, i)))
            .collect();
        while let Some(Reverse((_, i))) = frontier.pop() {
            for &c in &cyclic_gens {
                if bit(&found[i].0, c) {
                    continue;
                }
                let mut gens = found[i].1.clone();
                gens.push(c);
                let (bits, list) = table.closure(Some(&found[i].0), &gens);
                if lookup.contains_key(&bits) {
                    continue;
                }
                lookup.insert(bits.clone(), found.len());
                frontier.push(Reverse((list.len() as u32, found.len())));
                found.push((bits, gens));
            }
        }

        // Canonical order: by order, then by signature.
        found.sort_by(|a, b| {
            let oa = members_of(&a.0).count();
            let ob = members_of(&b.0).count();
            oa.cmp(&ob).then_with(|| a.0.cmp(&b.0))
        });
        let lookup: BTreeMap<Bits, usize> =
            found.iter().enumerate().map(|(i, (b, _))| (b.clone(), i)).collect();
        let groups: Vec<Group> = found
            .iter()
            .map(|(_, gens)| {
                let perms: Vec<Permutation> =
                    gens.iter().map(|&g| table.elements[g as usize].clone()).collect();
                Group::new(degree, &perms).unwrap()
            })
            .collect();
        let bits: Vec<Bits> = found.into_iter().map(|(b, _)| b).collect();

        let ambient_gens: Vec<u32> = ambient
            .generators()
            .iter()
            .map(|g| table.index[g])
            .collect();
        let mut class_of = alloc::vec![usize::MAX; bits.len()];
        let mut classes = Vec::new();
        for start in 0..bits.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = alloc::vec![start];
            class_of[start] = id;
            let mut k = 0;
            while k < class.len() {
                for &s in &ambient_gens {
                    let c = lookup[&table.conjugate_bits(&bits[class[k]], s)];
                    if class_of[c] == usize::MAX {
                        class_of[c] = id;
                        class.push(c);
                    }
                }
                k += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }

        SubgroupLattice {
            ambient: ambient.clone(),
            table,
            groups,
            bits,
            lookup,
            classes,
            class_of,
        }
    }

    pub fn ambient(&self) -> &Group {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// Subgroups in canonical order: ascending order, ties by signature.
    pub fn subgroups(&self) -> &[Group] {
        &self.groups
    }

    pub fn get(&self, i: usize) -> &Group {
        &self.groups[i]
    }

    pub fn subgroups_of_order(&self, n: u128) -> Vec<Group> {
        self.groups.iter().filter(|g| g.order() == n).cloned().collect()
    }

    pub fn indices_of_order(&self, n: u128) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.groups[i].order() == n)
    }

    /// Conjugacy classes as index lists; each list is ascending and its first
    /// entry is the class representative.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn representatives(&self) -> Vec<Group> {
        self.classes.iter().map(|c| self.groups[c[0]].clone()).collect()
    }

    /// Position of a subgroup of the ambient group.
    pub fn index_of(&self, h: &Group) -> Option<usize> {
        if !h.is_subgroup_of(&self.ambient) {
            return None;
        }
        let mut bits = alloc::vec![0u64; self.table.words()];
        for (i, e) in self.table.elements.iter().enumerate() {
            if h.contains(e) {
                set_bit(&mut bits, i as u32);
            }
        }
        self.lookup.get(&bits).copied()
    }

    /// `groups[a] ≤ groups[b]`.
    pub fn is_contained(&self, a: usize, b: usize) -> bool {
        is_subset(&self.bits[a], &self.bits[b])
    }

    /// Indices of members contained in `groups[i]`.
    pub fn below(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&j| self.is_contained(j, i))
    }

    /// Index of `groups[a] ∩ groups[b]`.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        let bits: Bits = self.bits[a].iter().zip(&self.bits[b]).map(|(x, y)| x & y).collect();
        self.lookup[&bits]
    }
}

impl Engine {
    /// The full subgroup lattice, cached per ambient group.
    pub fn lattice(&self, g: &Group) -> Result<Rc<SubgroupLattice>> {
        self.check_cap(Cap::Lattice, g.order())?;
        if let Some((_, l)) = self.lattices.borrow().iter().find(|(h, _)| h == g) {
            return Ok(l.clone());
        }
        let lattice = Rc::new(SubgroupLattice::build(g, self.elements(g)?));
        self.lattices.borrow_mut().push((g.clone(), lattice.clone()));
        Ok(lattice)
    }
}
