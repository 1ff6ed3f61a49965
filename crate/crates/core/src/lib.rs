//! Permutation groups, subdegrees, and pairwise-coprime subdegree checks.
//!
//! Points are `0..n` internally and act on the right: `x^(gh) = (x^g)^h`.
//! All text formats are 1-based.

pub mod arith;
pub mod constructions;
pub mod coprime;
pub mod corpus;
pub mod error;
pub mod group;
pub mod perm;
pub mod subdegree;

pub use error::{Error, Result};
pub use group::{BlockSystem, Bsgs, Orbit, PermGroup};
pub use perm::Permutation;

/// Size limits for brute-force steps. Exceeding one is an error carrying the
/// bound, so callers can report a skip.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group order `elements` will enumerate.
    pub elements: usize,
    /// Largest group order for subgroup-lattice enumeration.
    pub subgroups: usize,
    /// Largest index for coset actions.
    pub cosets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            elements: 200_000,
            subgroups: 2_000,
            cosets: 100_000,
        }
    }
}
