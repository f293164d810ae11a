//! Finite order theory with a topological reading.
//!
//! Finite lattices are turned into spaces of (prime) ideals with their
//! support sets, support data are matched against continuous maps, frames
//! are probed through their points, and lattices carrying a tensor product
//! are reduced to their lattice of radical tensor ideals. Every statement is
//! checked by exhaustive enumeration, so all structures are small and dense:
//! elements are indices `0..n` and subsets are [`BitSet`]s.

pub mod bitset;
pub mod corpus;
mod error;
pub mod frames;
pub mod ideals;
pub mod json;
pub mod order;
pub mod suite;
pub mod support;
pub mod tensor;
pub mod topology;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use order::{BoundedLattice, JoinSemilattice, LatticeMorphism, MorphismKind, Poset};

/// Environment variable consulted by [`SizeGuard::from_env`].
pub const SIZE_GUARD_ENV: &str = "LATTIK_SIZE_GUARD";

/// Upper bound on candidate extensions tried by any exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SizeGuard(pub u64);

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard(100_000_000)
    }
}

impl SizeGuard {
    /// Reads `LATTIK_SIZE_GUARD`, falling back to the default when unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(SIZE_GUARD_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(SizeGuard)
            .unwrap_or_default()
    }
}

/// Counts work against a [`SizeGuard`].
#[derive(Debug)]
pub(crate) struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub(crate) fn new(guard: SizeGuard) -> Self {
        Budget { limit: guard.0, used: 0 }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::SizeGuard(self.limit))
        } else {
            Ok(())
        }
    }
}
