//! Generalised Fishburn Condorcet domains.
//!
//! A GF-domain `F_K` is built two independent ways: by filtering all linear
//! orders through the alternating never-condition scheme determined by
//! `K ⊆ [2, n−1]` ([`never`]), and by reading orders off flags of
//! white-convex bead sets on a necklace ([`necklace`]). The [`analysis`]
//! checkers then certify its structure exhaustively at small `n`:
//! Condorcet, copious, maximal, maximal width, direct connectivity, and
//! single-peakedness on a circle. [`single_crossing`] covers maximal chains
//! in the weak order, and [`cardinality`] the size census.
//!
//! ```
//! use gf_condorcet::never::{gf_domain, KSubset};
//! use gf_condorcet::necklace::gf_necklace;
//!
//! let k = KSubset::new(4, [2]).unwrap();
//! let by_scheme = gf_domain(4, &k).unwrap();
//! let by_necklace = gf_necklace(4, &k).unwrap().flags_to_domain();
//! assert_eq!(by_scheme, by_necklace);
//! assert_eq!(by_scheme.len(), 9);
//! ```

pub mod analysis;
pub mod cardinality;
pub mod cli;
pub mod error;
pub mod necklace;
pub mod never;
pub mod order;
pub mod single_crossing;
pub mod verify;

pub use error::{Error, Result};
pub use order::{Domain, LinearOrder, Triple};
