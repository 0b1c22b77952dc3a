use alloc::string::String;

/// Which configurable limit an operation ran into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cap {
    /// Element enumeration (`--max-order`).
    Elements,
    /// Coset actions (`--max-cosets`).
    Cosets,
    /// Subgroup lattices (`--max-lattice`).
    Lattice,
}

impl Cap {
    pub fn name(self) -> &'static str {
        match self {
            Cap::Elements => "max-order",
            Cap::Cosets => "max-cosets",
            Cap::Lattice => "max-lattice",
        }
    }
}

impl core::fmt::Display for Cap {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image table is not a bijection")]
    NotABijection,
    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {point} repeated within one cycle")]
    RepeatedPoint { point: usize },
    #[error("malformed cycle notation {text:?}: {why}")]
    MalformedCycle { text: String, why: &'static str },
    #[error("cap {cap} exceeded: need {needed}, limit {limit}")]
    CapExceeded { cap: Cap, limit: u128, needed: u128 },
    #[error("{what} is not a subgroup of {of}")]
    NotSubgroup {
        what: &'static str,
        of: &'static str,
    },
    #[error("{what} is not normal in {of}")]
    NotNormal {
        what: &'static str,
        of: &'static str,
    },
    #[error("series term {index} is not normal in term {}", index - 1)]
    NotSubnormalChain { index: usize },
    #[error("series term {index} does not lie in term {}", index - 1)]
    NotDescending { index: usize },
    #[error("series term {index} repeats its predecessor")]
    RepeatedTerm { index: usize },
    #[error("last series term is not trivial")]
    NontrivialLastTerm,
    #[error("series index {index} out of range 0..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid class: {0}")]
    InvalidClass(&'static str),
    #[error("{0} is not prime")]
    NotPrime(u128),
    #[error("group is not X-separable")]
    NotSeparable,
    #[error("invalid submaximal witness: {0}")]
    InvalidWitness(&'static str),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A proven statement failed on a concrete instance; always an engine bug.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
