//! The built-in instance matrix and the theorem sweeps over it.

use alloc::string::String;
use alloc::vec::Vec;

use crate::engine::Engine;
use crate::error::Result;
use crate::group::Group;
use crate::named;
use crate::perm::parse_cycles;
use crate::series::SeriesSpec;
use crate::wielandt::{SubmaximalWitness, TheoremReport};
use crate::xclass::ClassSpec;

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub group: String,
    pub class: ClassSpec,
    pub series: Vec<SeriesSpec>,
    /// Submaximal subgroups with their witnesses.
    pub subgroups: Vec<(Group, SubmaximalWitness)>,
}

impl Instance {
    pub fn ambient(&self) -> &Group {
        self.series[0].ambient()
    }
}

/// One theorem evaluation in a sweep.
#[derive(Clone, Debug)]
pub struct Entry {
    pub instance: String,
    pub series: usize,
    pub h: Group,
    pub k: Option<Group>,
    pub report: TheoremReport,
}

#[derive(Clone, Debug, Default)]
pub struct MatrixRun {
    pub entries: Vec<Entry>,
}

impl MatrixRun {
    pub fn violations(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.report.holds())
    }

    pub fn of_theorem<'a>(&'a self, theorem: &'a str) -> impl Iterator<Item = &'a Entry> + 'a {
        self.entries.iter().filter(move |e| e.report.theorem == theorem)
    }
}

fn v4_and_c2() -> (Group, Group) {
    let p = |s| parse_cycles(s, 4).unwrap();
    let v4 = Group::new(4, &[p("(1,2)(3,4)"), p("(1,3)(2,4)")]).unwrap();
    let c2 = Group::new(4, &[p("(1,2)(3,4)")]).unwrap();
    (v4, c2)
}

impl Engine {
    /// All series of `g` whose terms are normal in `g`.
    pub fn normal_series(&self, g: &Group) -> Result<Vec<SeriesSpec>> {
        Ok(self
            .subnormal_series(g)?
            .into_iter()
            .filter(SeriesSpec::is_normal)
            .collect())
    }

    /// The subnormal series `S4 ⊳ A4 ⊳ V4 ⊳ ⟨(1,2)(3,4)⟩ ⊳ 1`.
    pub fn designated_subnormal_series(&self) -> Result<SeriesSpec> {
        let (v4, c2) = v4_and_c2();
        self.build_series(&named::symmetric(4), &[named::alternating(4), v4, c2, Group::trivial(4)])
    }

    /// Maximal X-subgroups of `g` with trivial witnesses, or the traces
    /// `g ∩ H*` of maximal X-subgroups of `big` when `g` is subnormal in it.
    fn submaximal_subgroups(
        &self,
        class: &ClassSpec,
        g: &Group,
        big: Option<&Group>,
    ) -> Result<Vec<(Group, SubmaximalWitness)>> {
        let mut out: Vec<(Group, SubmaximalWitness)> = Vec::new();
        let Some(big) = big else {
            for h in self.all_maximal_x_subgroups(class, g)? {
                let w = SubmaximalWitness::trivial(g, &h);
                out.push((h, w));
            }
            return Ok(out);
        };
        for hstar in self.all_maximal_x_subgroups(class, big)? {
            let h = self.intersection(g, &hstar)?;
            if !out.iter().any(|(x, _)| x == &h) {
                let w = SubmaximalWitness {
                    big: big.clone(),
                    hstar,
                };
                out.push((h, w));
            }
        }
        Ok(out)
    }

    fn instance(
        &self,
        name: &str,
        group: &str,
        class: ClassSpec,
        series: Vec<SeriesSpec>,
        big: Option<&Group>,
    ) -> Result<Instance> {
        let g = series[0].ambient().clone();
        let subgroups = self.submaximal_subgroups(&class, &g, big)?;
        Ok(Instance {
            name: name.into(),
            group: group.into(),
            class,
            series,
            subgroups,
        })
    }

    /// `(S4, π={2})`, `(S4, π={2,3})` with every normal series and the
    /// designated subnormal one; `(S5, nonabelian factors < 60)` with every
    /// normal series; `A5` with submaximal subgroups cut out of `S5`.
    pub fn matrix_instances(&self) -> Result<Vec<Instance>> {
        let s4 = named::symmetric(4);
        let s5 = named::symmetric(5);
        let a5 = named::alternating(5);
        let mut s4_series = self.normal_series(&s4)?;
        s4_series.push(self.designated_subnormal_series()?);
        let a5_series = alloc::vec![self.build_series(&a5, &[Group::trivial(5)])?];
        Ok(alloc::vec![
            self.instance("S4 pi={2}", "symmetric(4)", ClassSpec::primes(&[2])?, s4_series.clone(), None)?,
            self.instance("S4 pi={2,3}", "symmetric(4)", ClassSpec::primes(&[2, 3])?, s4_series, None)?,
            self.instance(
                "S5 nonabelian cf < 60",
                "symmetric(5)",
                ClassSpec::bounded(60),
                self.normal_series(&s5)?,
                None,
            )?,
            self.instance(
                "A5 in S5 nonabelian cf < 60",
                "alternating(5)",
                ClassSpec::bounded(60),
                a5_series.clone(),
                Some(&s5),
            )?,
            self.instance("A5 in S5 pi={2,3}", "alternating(5)", ClassSpec::primes(&[2, 3])?, a5_series, Some(&s5))?,
        ])
    }

    /// Conjugacy of congruent subgroups: every lattice subgroup congruent to
    /// each `H`.
    pub fn sweep_conj(&self, inst: &Instance, out: &mut MatrixRun) -> Result<()> {
        for (si, s) in inst.series.iter().enumerate() {
            for (h, w) in &inst.subgroups {
                for k in self.congruence_class(s, h)? {
                    let report = self.conj_by_projections(&inst.class, s, h, w, &k)?;
                    out.entries.push(Entry {
                        instance: inst.name.clone(),
                        series: si,
                        h: h.clone(),
                        k: Some(k),
                        report,
                    });
                }
            }
        }
        Ok(())
    }

    /// Embedding of every X-subgroup of the lattice lying in `N^{(*)}(H)`.
    pub fn sweep_embed(&self, inst: &Instance, out: &mut MatrixRun) -> Result<()> {
        let lat = self.lattice(inst.ambient())?;
        let mut in_x = Vec::with_capacity(lat.classes().len());
        for c in lat.classes() {
            in_x.push(self.is_in_class(&inst.class, lat.get(c[0]))?);
        }
        for (si, s) in inst.series.iter().enumerate() {
            for (h, w) in &inst.subgroups {
                let norm = self.normalizer_mod(s, h, 0)?;
                for (i, k) in lat.subgroups().iter().enumerate() {
                    if !in_x[lat.class_of(i)] || !k.is_subgroup_of(&norm) {
                        continue;
                    }
                    let report = self.embed_by_normalizer(&inst.class, s, h, w, k, 0)?;
                    out.entries.push(Entry {
                        instance: inst.name.clone(),
                        series: si,
                        h: h.clone(),
                        k: Some(k.clone()),
                        report,
                    });
                }
            }
        }
        Ok(())
    }

    /// Join and corollary on every normal series of the instance.
    pub fn sweep_join(&self, inst: &Instance, out: &mut MatrixRun) -> Result<()> {
        for (si, s) in inst.series.iter().enumerate() {
            if !s.is_normal() {
                continue;
            }
            for (h, w) in &inst.subgroups {
                for report in [
                    self.wielandt_join(&inst.class, s, h, w)?,
                    self.corollary_check(&inst.class, s, h, w)?,
                ] {
                    out.entries.push(Entry {
                        instance: inst.name.clone(),
                        series: si,
                        h: h.clone(),
                        k: None,
                        report,
                    });
                }
            }
        }
        Ok(())
    }

    /// Every sweep over every instance, in a fixed order.
    pub fn run_matrix(&self) -> Result<MatrixRun> {
        let mut run = MatrixRun::default();
        for inst in self.matrix_instances()? {
            self.sweep_conj(&inst, &mut run)?;
            self.sweep_embed(&inst, &mut run)?;
            self.sweep_join(&inst, &mut run)?;
        }
        Ok(run)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_shapes() {
        let e = Engine::default();
        let insts = e.matrix_instances().unwrap();
        assert_eq!(insts.len(), 5);
        assert_eq!(insts[0].series.len(), 5);
        assert!(!insts[0].series[4].is_normal());
        let s5 = &insts[2];
        assert_eq!(s5.subgroups.len(), 5 + 10 + 6);
        let a5 = &insts[3];
        let mut orders: Vec<u128> = a5.subgroups.iter().map(|(h, _)| h.order()).collect();
        orders.sort();
        orders.dedup();
        assert_eq!(orders, [6, 10, 12]);
        assert!(a5.subgroups.iter().all(|(_, w)| w.big.order() == 120));
    }

    #[test]
    fn s4_sweeps_hold() {
        let e = Engine::default();
        let inst = &e.matrix_instances().unwrap()[0];
        let mut run = MatrixRun::default();
        e.sweep_conj(inst, &mut run).unwrap();
        e.sweep_embed(inst, &mut run).unwrap();
        e.sweep_join(inst, &mut run).unwrap();
        assert!(run.violations().next().is_none(), "{:?}", run.violations().next());
        assert!(run.of_theorem("embed").count() > 20);
    }
}
