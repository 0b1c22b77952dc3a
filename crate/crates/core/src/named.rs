//! Named constructions: symmetric, alternating, cyclic, dihedral groups and
//! direct products.

use alloc::vec::Vec;

use crate::group::Group;
use crate::perm::Permutation;

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let pts: Vec<usize> = points.into_iter().collect();
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (k, &p) in pts.iter().enumerate() {
        images[p] = pts[(k + 1) % pts.len()] as u32;
    }
    Permutation::from_images_unchecked(images)
}

/// `S_n` on `{1..n}`.
pub fn symmetric(n: usize) -> Group {
    symmetric_on(n, n)
}

/// Symmetric group on the first `k` points of a degree-`n` domain.
pub fn symmetric_on(degree: usize, k: usize) -> Group {
    let mut gens = Vec::new();
    if k >= 2 {
        gens.push(cycle(degree, [0, 1]));
    }
    if k >= 3 {
        gens.push(cycle(degree, 0..k));
    }
    Group::new(degree, &gens).unwrap()
}

/// `A_n` on `{1..n}`.
pub fn alternating(n: usize) -> Group {
    alternating_on(n, n)
}

/// Alternating group on the first `k` points of a degree-`n` domain.
pub fn alternating_on(degree: usize, k: usize) -> Group {
    let gens: Vec<Permutation> = (2..k).map(|j| cycle(degree, [0, 1, j])).collect();
    Group::new(degree, &gens).unwrap()
}

/// Regular cyclic group of order `n`.
pub fn cyclic(n: usize) -> Group {
    let gens = if n >= 2 { alloc::vec![cycle(n, 0..n)] } else { Vec::new() };
    Group::new(n.max(1), &gens).unwrap()
}

/// Symmetries of the `n`-gon, order `2n`, acting on its `n` vertices (`n >= 3`).
/// For `n < 3` the natural action is not faithful and this returns `S_n`.
pub fn dihedral(n: usize) -> Group {
    if n < 3 {
        return symmetric(n.max(1));
    }
    let rotation = cycle(n, 0..n);
    let images: Vec<u32> = (0..n).map(|i| ((n - i) % n) as u32).collect();
    let reflection = Permutation::from_images_unchecked(images);
    Group::new(n, &[rotation, reflection]).unwrap()
}

/// `A × B` acting on the disjoint union of the two domains.
pub fn direct_product(a: &Group, b: &Group) -> Group {
    let (da, db) = (a.degree(), b.degree());
    let degree = da + db;
    let lift = |g: &Permutation, offset: usize, own: usize| {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for p in 0..own {
            images[p + offset] = (g.apply(p) + offset) as u32;
        }
        Permutation::from_images_unchecked(images)
    };
    let mut gens: Vec<Permutation> = a.generators().iter().map(|g| lift(g, 0, da)).collect();
    gens.extend(b.generators().iter().map(|g| lift(g, da, db)));
    Group::new(degree, &gens).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_orders() {
        let fact = |n: u128| (1..=n).product::<u128>();
        for n in 1..=7 {
            assert_eq!(symmetric(n).order(), fact(n as u128));
            assert_eq!(alternating(n).order(), fact(n as u128).div_ceil(2).max(1));
            assert_eq!(cyclic(n).order(), n as u128);
        }
        for n in 3..=8 {
            assert_eq!(dihedral(n).order(), 2 * n as u128);
        }
        let p = direct_product(&symmetric(3), &cyclic(4));
        assert_eq!(p.order(), 24);
        assert_eq!(p.degree(), 7);
    }
}
