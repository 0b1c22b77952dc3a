//! Complete classes of finite groups from a small parametric family.
//!
//! A class is the conjunction of the conditions that are present:
//! every composition factor has order divisible only by primes in `pi`,
//! every composition factor is abelian (`solvable`), and every nonabelian
//! composition factor has order below `max_nonabelian_cf`. Each condition is
//! a restriction on composition factors, so the class is closed under
//! subgroups, quotients and extensions.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{is_prime, prime_divisors};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::group::Group;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassSpec {
    pi: Option<BTreeSet<u128>>,
    solvable: bool,
    max_nonabelian_cf: Option<u128>,
}

impl ClassSpec {
    pub fn new(pi: Option<BTreeSet<u128>>, solvable: bool, max_nonabelian_cf: Option<u128>) -> Result<Self> {
        if let Some(pi) = &pi {
            if let Some(&p) = pi.iter().find(|&&p| !is_prime(p)) {
                return Err(Error::NotPrime(p));
            }
        }
        Ok(ClassSpec {
            pi,
            solvable,
            max_nonabelian_cf,
        })
    }

    /// π-groups for the given primes.
    pub fn primes(pi: &[u128]) -> Result<Self> {
        Self::new(Some(pi.iter().copied().collect()), false, None)
    }

    /// Groups whose nonabelian composition factors have order `< bound`.
    pub fn bounded(bound: u128) -> Self {
        ClassSpec {
            pi: None,
            solvable: false,
            max_nonabelian_cf: Some(bound),
        }
    }

    pub fn solvable(mut self) -> Self {
        self.solvable = true;
        self
    }

    pub fn pi(&self) -> Option<&BTreeSet<u128>> {
        self.pi.as_ref()
    }

    pub fn requires_solvable(&self) -> bool {
        self.solvable
    }

    pub fn max_nonabelian_cf(&self) -> Option<u128> {
        self.max_nonabelian_cf
    }

    /// Whether `Z_p` belongs to the class.
    pub fn is_char_prime(&self, p: u128) -> Result<bool> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(self.pi.as_ref().is_none_or(|pi| pi.contains(&p)))
    }

    pub(crate) fn char_prime(&self, p: u128) -> bool {
        self.pi.as_ref().is_none_or(|pi| pi.contains(&p))
    }

    /// Primes of `n` that are characteristic for the class.
    pub fn char_primes_dividing(&self, n: u128) -> Vec<u128> {
        prime_divisors(n).into_iter().filter(|&p| self.char_prime(p)).collect()
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(pi) = &self.pi {
            let list: Vec<alloc::string::String> = pi.iter().map(|p| alloc::format!("{p}")).collect();
            parts.push(alloc::format!("pi={{{}}}", list.join(",")));
        }
        if self.solvable {
            parts.push("solvable".into());
        }
        if let Some(b) = self.max_nonabelian_cf {
            parts.push(alloc::format!("nonabelian cf < {b}"));
        }
        if parts.is_empty() {
            return f.write_str("all finite groups");
        }
        f.write_str(&parts.join(" and "))
    }
}

impl Engine {
    pub fn is_in_class(&self, class: &ClassSpec, g: &Group) -> Result<bool> {
        if g.is_trivial() {
            return Ok(true);
        }
        if let Some(pi) = &class.pi {
            if !prime_divisors(g.order()).iter().all(|p| pi.contains(p)) {
                return Ok(false);
            }
        }
        if class.solvable && !self.is_solvable(g) {
            return Ok(false);
        }
        if let Some(bound) = class.max_nonabelian_cf {
            if g.order() >= bound {
                let factors = self.composition_factors(g)?;
                if factors.iter().any(|f| !f.abelian && f.order >= bound) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// No nontrivial subgroup lies in the class. A nontrivial member would
    /// contain a subgroup of prime order `p` with `Z_p` in the class, and by
    /// Cauchy such a subgroup exists iff `p` divides the order.
    pub fn is_x_prime_group(&self, class: &ClassSpec, g: &Group) -> bool {
        class.char_primes_dividing(g.order()).is_empty()
    }
}
