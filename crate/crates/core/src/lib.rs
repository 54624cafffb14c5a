//! Exact combinatorics around strata of quadratic differentials.
//!
//! The crate is organised by subsystem:
//!
//! * [`signature`] holds stratum signatures with their dimension, emptiness
//!   and connected-component classification, plus the hyperelliptic
//!   double-cover construction.
//! * [`adjacency`] is the split/collision calculus on zero orders and the
//!   poset it induces on partitions of `4g - 4`.
//! * [`braid`] implements weighted surface braid words, their permutation and
//!   Abel–Jacobi images, factor certificates, and the kernel factorization.
//! * [`graphs`] works with rotation systems: face tracing, genus, complete
//!   graph embeddings, the face-reduction/subdivision construction and the
//!   edge-transposition generators of the Abel–Jacobi kernel.
//! * [`criteria`] evaluates the numeric bounds and hypothesis predicates that
//!   decide which strata the kernel description covers.
//! * [`cli`] is the JSON command-line front end used by the `strata` binary.

pub mod adjacency;
pub mod arith;
pub mod braid;
pub mod cli;
pub mod criteria;
mod error;
pub mod graphs;
pub mod signature;

pub use error::{Error, Result};
pub use signature::StratumSignature;
