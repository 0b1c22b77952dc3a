//! The two counterexample constructions in `S_n` and the explorer for
//! subnormal series.

use alloc::string::String;
use alloc::vec::Vec;

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::named;
use crate::perm::Permutation;
use crate::series::SeriesSpec;
use crate::wielandt::{ReportBuilder, TheoremReport};
use crate::xclass::ClassSpec;

/// Groups of a counterexample scenario in `S_n` with the series
/// `S_n ⊳ A_n ⊳ 1`.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub class: ClassSpec,
    pub series: SeriesSpec,
    /// The point stabilizer of the last point.
    pub h: Group,
    /// The subgroup not conjugate into `h`.
    pub k: Group,
    /// The congruent subgroup inside `h`.
    pub kstar: Group,
    pub report: TheoremReport,
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn stab_last(n: usize) -> Group {
    named::symmetric(n).point_stabilizer(n - 1)
}

fn fixed_point_free(e: &Engine, k: &Group) -> Result<Option<Permutation>> {
    Ok(e.elements(k)?.iter().find(|x| x.fixed_points() == 0).cloned())
}

impl Engine {
    fn sn_series(&self, n: usize) -> Result<SeriesSpec> {
        self.build_series(&named::symmetric(n), &[named::alternating(n), Group::trivial(n)])
    }

    /// `K ≡ K*`, `K* ≤ H = Stab(n)` and no conjugate of `K` lies in `H`,
    /// for the class of groups whose nonabelian composition factors have
    /// order below `n!/2`.
    pub fn example1(&self, n: usize) -> Result<Scenario> {
        if n < 5 {
            return Err(Error::InvalidArgument(alloc::format!("n must be at least 5, got {n}")));
        }
        let class = ClassSpec::bounded(factorial(n) / 2);
        let series = self.sn_series(n)?;
        let g = series.ambient().clone();
        let h = stab_last(n);
        let kstar = named::symmetric_on(n, n - 2);
        let swap = Permutation::transposition(n, n - 1, n)?;
        let k = named::alternating_on(n, n - 2).with_generators(&[swap])?;

        let mut b = ReportBuilder::new("example1");
        let lat = self.lattice(&g)?;
        b.value("lattice_size", lat.len());
        b.value("h_order", h.order());
        b.value("k_order", k.order());
        b.value("kstar_order", kstar.order());
        b.check(
            "H is a maximal X-subgroup",
            lat.index_of(&h)
                .is_some_and(|i| self.maximal_x_indices(&class, &g).is_ok_and(|m| m.contains(&i))),
        );
        b.check("K is an X-group", self.is_in_class(&class, &k)?);
        b.check("K* is an X-group", self.is_in_class(&class, &kstar)?);
        b.check("K is congruent to K*", self.congruent(&series, &k, &kstar)?);
        b.check("K* lies in H", kstar.is_subgroup_of(&h));
        let into = self.conjugate_into(&g, &k, &h)?;
        b.check("no conjugate of K lies in H", into.is_none());
        let fpf = fixed_point_free(self, &k)?;
        b.check("K has a fixed-point-free element", fpf.is_some());
        if let Some(x) = &fpf {
            b.conjugator(x);
        }
        b.value("answer", "NO");
        b.group("H", &h);
        b.group("K", &k);
        b.group("K*", &kstar);
        let report = b.finish();
        Ok(Scenario {
            class,
            series,
            h,
            k,
            kstar,
            report,
        })
    }

    /// `T = ⟨(1,2)(3,4)…(2m-1,2m)⟩` and `T* = ⟨(1,2)⟩` in `S_{2m}`, `m ≥ 3`
    /// odd: isomorphic, congruent, `T* ≤ Stab(2m)`, and `T` is semiregular so
    /// no conjugate of it lies in the stabilizer.
    pub fn example2(&self, m: usize) -> Result<Scenario> {
        if m < 3 || m.is_multiple_of(2) {
            return Err(Error::InvalidArgument(alloc::format!("m must be odd and at least 3, got {m}")));
        }
        let n = 2 * m;
        let class = ClassSpec::bounded(factorial(n) / 2);
        let series = self.sn_series(n)?;
        let g = series.ambient().clone();
        let h = stab_last(n);
        let mut images: Vec<u32> = (0..n as u32).collect();
        for i in 0..m {
            images.swap(2 * i, 2 * i + 1);
        }
        let t = Group::new(n, &[Permutation::from_images(images)?])?;
        let tstar = Group::new(n, &[Permutation::transposition(n, 1, 2)?])?;

        let mut b = ReportBuilder::new("example2");
        b.value("t_order", t.order());
        b.value("tstar_order", tstar.order());
        b.check("T and T* are isomorphic", t.order() == 2 && tstar.order() == 2);
        b.check(
            "every nontrivial element of T and T* is odd",
            t.generators().iter().chain(tstar.generators()).all(|x| !x.is_even()),
        );
        b.check("T is congruent to T*", self.congruent(&series, &t, &tstar)?);
        b.check("T* lies in H", tstar.is_subgroup_of(&h));
        let semiregular = self
            .elements(&t)?
            .iter()
            .filter(|x| !x.is_identity())
            .all(|x| x.fixed_points() == 0);
        b.check("T is semiregular", semiregular);
        b.check("no conjugate of T lies in H", self.conjugate_into(&g, &t, &h)?.is_none());
        b.value("answer", "NO");
        b.group("H", &h);
        b.group("T", &t);
        b.group("T*", &tstar);
        let report = b.finish();
        Ok(Scenario {
            class,
            series,
            h,
            k: t,
            kstar: tstar,
            report,
        })
    }

    /// Evaluates the join and corollary conclusions on non-normal subnormal
    /// series of small groups, for every maximal X-subgroup. Results are
    /// observations; a violated report is a finding, not an error.
    pub fn explore_subnormal_open_question(&self, max_order: u128) -> Result<Vec<Finding>> {
        let mut out = Vec::new();
        for (name, g) in explorer_family() {
            if g.order() > max_order {
                continue;
            }
            for class in [ClassSpec::primes(&[2])?, ClassSpec::primes(&[3])?] {
                let hs = self.all_maximal_x_subgroups(&class, &g)?;
                for series in self.subnormal_series(&g)? {
                    if series.is_normal() {
                        continue;
                    }
                    for h in &hs {
                        out.push(Finding {
                            group: name.into(),
                            class: class.clone(),
                            series: series.clone(),
                            h: h.clone(),
                            join: self.wielandt_join_unchecked(&class, &series, h)?,
                            corollary: self.corollary_unchecked(&class, &series, h)?,
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    /// Every subnormal series of `g` without repeated terms, in lattice
    /// order.
    pub fn subnormal_series(&self, g: &Group) -> Result<Vec<SeriesSpec>> {
        let lat = self.lattice(g)?;
        let top = lat.index_of(g).expect("ambient group is in its lattice");
        let mut chains = Vec::new();
        let mut stack = alloc::vec![alloc::vec![top]];
        while let Some(chain) = stack.pop() {
            let last = *chain.last().unwrap();
            let cur = lat.get(last);
            if cur.is_trivial() {
                chains.push(chain);
                continue;
            }
            for j in lat.below(last).collect::<Vec<_>>().into_iter().rev() {
                let sub = lat.get(j);
                if sub.order() < cur.order() && sub.is_normal_in(cur) {
                    let mut next = chain.clone();
                    next.push(j);
                    stack.push(next);
                }
            }
        }
        chains.sort();
        chains
            .into_iter()
            .map(|c| {
                let terms: Vec<Group> = c[1..].iter().map(|&i| lat.get(i).clone()).collect();
                self.build_series(g, &terms)
            })
            .collect()
    }
}

/// One evaluated configuration of the explorer.
#[derive(Clone, Debug)]
pub struct Finding {
    pub group: String,
    pub class: ClassSpec,
    pub series: SeriesSpec,
    pub h: Group,
    pub join: TheoremReport,
    pub corollary: TheoremReport,
}

impl Finding {
    pub fn is_counterexample(&self) -> bool {
        !self.join.holds() || !self.corollary.holds()
    }
}

fn explorer_family() -> Vec<(&'static str, Group)> {
    alloc::vec![
        ("dihedral(4)", named::dihedral(4)),
        ("alternating(4)", named::alternating(4)),
        ("symmetric(4)", named::symmetric(4)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example1_n5() {
        let e = Engine::default();
        let s = e.example1(5).unwrap();
        assert!(s.report.holds(), "{:?}", s.report);
        assert_eq!(s.h.order(), 24);
        assert_eq!((s.k.order(), s.kstar.order()), (6, 6));
        let a5 = named::alternating(5);
        let c3 = Group::new(5, &[crate::parse_cycles("(1,2,3)", 5).unwrap()]).unwrap();
        assert_eq!(e.intersection(&s.k, &a5).unwrap(), c3);
        assert_eq!(e.intersection(&s.kstar, &a5).unwrap(), c3);
        assert_eq!(s.k.join(&a5).unwrap(), named::symmetric(5));
        assert_eq!(s.report.conjugator.as_ref().unwrap().fixed_points(), 0);
    }

    #[test]
    fn example2_m3() {
        let e = Engine::default();
        let s = e.example2(3).unwrap();
        assert!(s.report.holds(), "{:?}", s.report);
        assert!(matches!(e.example2(2), Err(Error::InvalidArgument(_))));
        assert!(e.example2(1).is_err());
    }

    #[test]
    fn subnormal_series_of_s4() {
        let e = Engine::default();
        let all = e.subnormal_series(&named::symmetric(4)).unwrap();
        assert!(all.iter().all(|s| s.terms().last().unwrap().is_trivial()));
        assert_eq!(all.iter().filter(|s| s.is_normal()).count(), 4);
        assert!(all.iter().any(|s| s.len() == 4 && !s.is_normal()));
    }

    #[test]
    fn explorer_shapes() {
        let e = Engine::default();
        assert!(e.explore_subnormal_open_question(1).unwrap().is_empty());
        let found = e.explore_subnormal_open_question(24).unwrap();
        assert!(found.iter().any(|f| f.group == "symmetric(4)" && f.series.len() == 4));
        for f in &found {
            assert!(!f.series.is_normal());
        }
    }
}
