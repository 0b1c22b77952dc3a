//! Finite permutation groups and embedding theorems for maximal and
//! submaximal X-subgroups, where X is a complete class of finite groups.
//!
//! The crate is `no_std` with `alloc`. Groups carry a stabilizer chain for
//! order and membership; operations that enumerate elements go through an
//! [`Engine`], which enforces the enumeration caps and caches element lists
//! and subgroup lattices.
//!
//! Products use the right-action convention: `a.compose(&b)` applies `a`
//! first, so `H^x = x⁻¹Hx`.
#![no_std]

extern crate alloc;

mod arith;
mod chain;
mod engine;
mod error;
mod group;
pub mod lattice;
pub mod matrix;
pub mod named;
mod normal;
mod perm;
mod quotient;
pub mod scenarios;
mod separability;
mod series;
pub mod wielandt;
pub mod xclass;

pub use arith::{is_prime, prime_divisors, prime_factors};
pub use engine::{Engine, Limits};
pub use error::{Cap, Error, Result};
pub use group::Group;
pub use lattice::SubgroupLattice;
pub use normal::{CompositionFactor, Split};
pub use perm::{parse_cycles, Permutation};
pub use quotient::Epimorphism;
pub use separability::{FactorKind, UpperXSeries};
pub use series::{ProjectionSignature, SeriesSpec};
pub use wielandt::{SubmaximalWitness, TheoremReport, Value, Verdict};
pub use xclass::ClassSpec;
