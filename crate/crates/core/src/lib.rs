//! Exact arithmetic matroids and the polynomials attached to them.
//!
//! The crate builds arithmetic matroids from lists of elements of finitely
//! generated abelian groups (or from explicit rank and multiplicity tables)
//! and computes multivariate and bivariate arithmetic Tutte polynomials,
//! Tutte quasi-polynomials, Potts partition functions over finite abelian
//! groups, flow and coloring counts, and multivariate Ehrhart polynomials of
//! zonotopes. Every closed formula has an independent enumeration path, and
//! [`suite`] compares them.
//!
//! All arithmetic is exact: integers are `BigInt`, multiplicities and
//! evaluations are `BigRational`.

pub mod abelian;
pub mod error;
pub mod io;
pub mod arithmetic;
pub mod cli;
pub mod matroid;
pub mod poly;
pub mod potts;
pub mod report;
pub mod sample;
pub mod subset;
pub mod suite;
pub mod tutte;
pub mod zonotope;

pub use error::{Error, Result};
pub use subset::Subset;

/// Guards for exponential enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of homomorphisms or flow assignments enumerated.
    pub enumeration_cap: u64,
    /// Maximum number of candidate points scanned in a bounding box.
    pub lattice_cap: u64,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits { enumeration_cap: 10_000_000, lattice_cap: 1_000_000 }
    }
}

impl Limits {
    /// Defaults, with `ARITH_TUTTE_CAP` overriding both caps when set.
    pub fn from_env() -> Limits {
        let mut l = Limits::default();
        if let Some(cap) = std::env::var("ARITH_TUTTE_CAP").ok().and_then(|s| s.trim().parse().ok()) {
            l.enumeration_cap = cap;
            l.lattice_cap = cap;
        }
        l
    }
}
