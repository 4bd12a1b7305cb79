//! Cycle types, solvable permutation groups and invariable generation.
//!
//! The crate answers one question in several forms: when do the conjugacy
//! classes of a few elements of `S_n` force every choice of representatives
//! to generate a nonsolvable group? It builds, for each degree, the maximal
//! sets of cycle types realized by solvable subgroups, and uses them to
//! compute exact probabilities, run simulations, and certify that Galois
//! groups of integer polynomials are not solvable.

pub mod atlas;
pub mod conditions;
pub mod ctset;
pub mod error;
pub mod galois;
pub mod group;
pub mod partition;
pub mod perm;
pub mod primes;
pub mod prob;

pub use atlas::{AtlasCaps, SolvableAtlas};
pub use ctset::{CycleTypeSet, Provenance};
pub use error::{Error, Result};
pub use partition::CycleType;
pub use perm::Permutation;
pub use prob::{exact_p2, is_covered, CoverageQuery, GroupKind};
