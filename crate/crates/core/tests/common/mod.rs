//! Brute-force oracles shared by the integration tests. They use only
//! permutation composition and plain collections, never the stabilizer
//! chain or the lattice.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use xembed_core::{parse_cycles, ClassSpec, Engine, Group, Permutation};

pub fn perm(s: &str, degree: usize) -> Permutation {
    parse_cycles(s, degree).unwrap()
}

pub fn grp(gens: &[&str], degree: usize) -> Group {
    let gens: Vec<Permutation> = gens.iter().map(|s| perm(s, degree)).collect();
    Group::new(degree, &gens).unwrap()
}

/// Every element reachable from the generators by right multiplication.
pub fn closure(degree: usize, gens: &[Permutation]) -> BTreeSet<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose(g).unwrap();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn elements(g: &Group) -> BTreeSet<Permutation> {
    closure(g.degree(), g.generators())
}

pub fn conj_set(set: &BTreeSet<Permutation>, x: &Permutation) -> BTreeSet<Permutation> {
    set.iter().map(|a| a.conjugate(x).unwrap()).collect()
}

/// Some `x ∈ J` with `K^x ≤ H`, by scanning all of `J`.
pub fn brute_conjugate_into(j: &Group, k: &Group, h: &Group) -> Option<Permutation> {
    let hs = elements(h);
    let ks = elements(k);
    elements(j)
        .into_iter()
        .find(|x| ks.iter().all(|a| hs.contains(&a.conjugate(x).unwrap())))
}

/// Some `x ∈ J` with `H^x = K`.
pub fn brute_conjugate(j: &Group, h: &Group, k: &Group) -> Option<Permutation> {
    if h.order() != k.order() {
        return None;
    }
    brute_conjugate_into(j, h, k)
}

fn primes_of(mut n: u128) -> BTreeSet<u128> {
    let mut out = BTreeSet::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.insert(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.insert(n);
    }
    out
}

/// Membership of a group of order `n` in the class of π-groups, and in its
/// complement class.
pub fn pi_kind(pi: &[u128], n: u128) -> (bool, bool) {
    let ps = primes_of(n);
    (ps.iter().all(|p| pi.contains(p)), ps.iter().all(|p| !pi.contains(p)))
}

/// All subgroups of `g` by closing pairs of cyclic subgroups under joins,
/// as element sets.
pub fn all_subgroups(g: &Group) -> Vec<BTreeSet<Permutation>> {
    let d = g.degree();
    let elems: Vec<Permutation> = elements(g).into_iter().collect();
    let mut found: BTreeSet<BTreeSet<Permutation>> = BTreeSet::new();
    let mut gens_of: Vec<Vec<Permutation>> = Vec::new();
    let trivial = closure(d, &[]);
    found.insert(trivial);
    gens_of.push(Vec::new());
    let mut frontier: Vec<Vec<Permutation>> = Vec::new();
    for x in &elems {
        let c = closure(d, std::slice::from_ref(x));
        if found.insert(c) {
            frontier.push(vec![x.clone()]);
            gens_of.push(vec![x.clone()]);
        }
    }
    let cyclic = gens_of.clone();
    while let Some(gens) = frontier.pop() {
        for c in &cyclic[1..] {
            let mut more = gens.clone();
            more.extend(c.iter().cloned());
            let s = closure(d, &more);
            if found.insert(s) {
                frontier.push(more);
            }
        }
    }
    found.into_iter().collect()
}

fn is_normal_set(big: &BTreeSet<Permutation>, small: &BTreeSet<Permutation>) -> bool {
    big.iter().all(|x| small.iter().all(|a| small.contains(&a.conjugate(x).unwrap())))
}

/// Least number of π-factors over every subnormal series of `g` whose
/// factors are π- or π′-groups, or `None` if there is no such series.
pub fn min_pi_length(g: &Group, pi: &[u128]) -> Option<usize> {
    let subs = all_subgroups(g);
    let mut order: Vec<usize> = (0..subs.len()).collect();
    order.sort_by_key(|&i| subs[i].len());
    let mut best: Vec<Option<usize>> = vec![None; subs.len()];
    for &i in &order {
        if subs[i].len() == 1 {
            best[i] = Some(0);
            continue;
        }
        let mut b: Option<usize> = None;
        for &j in &order {
            if subs[j].len() >= subs[i].len() || !subs[j].is_subset(&subs[i]) {
                continue;
            }
            let Some(below) = best[j] else { continue };
            if !is_normal_set(&subs[i], &subs[j]) {
                continue;
            }
            let (x, xp) = pi_kind(pi, (subs[i].len() / subs[j].len()) as u128);
            let cost = match (x, xp) {
                (true, _) => below + 1,
                (false, true) => below,
                _ => continue,
            };
            b = Some(b.map_or(cost, |c: usize| c.min(cost)));
        }
        best[i] = b;
    }
    let top = order.iter().copied().max_by_key(|&i| subs[i].len()).unwrap();
    best[top]
}

/// Whether the set `h` is a π-group whose index in `g` is a π′-number.
pub fn is_hall_pi(g: &BTreeSet<Permutation>, h: &BTreeSet<Permutation>, pi: &[u128]) -> bool {
    let (x, _) = pi_kind(pi, h.len() as u128);
    let (_, xp) = pi_kind(pi, (g.len() / h.len()) as u128);
    x && xp && h.is_subset(g)
}

pub fn engine() -> Engine {
    Engine::default()
}

pub fn pi(ps: &[u128]) -> ClassSpec {
    ClassSpec::primes(ps).unwrap()
}
