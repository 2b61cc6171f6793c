//! Finite p-groups given by full multiplication tables, their abelian
//! invariants, exhaustive automorphism enumeration, and checks that compare
//! structural conditions on class-2 p-groups against the automorphism sets
//! they are supposed to characterize.
//!
//! Everything here is pure computation over dense element indices and works
//! with `alloc` only. File formats, caching and the command-line front end
//! live in the `centauts` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod abelian;
pub mod automorphism;
pub mod catalog;
mod error;
pub mod group;
pub mod theory;

pub use abelian::{AbelianType, ClassTwoInvariants};
pub use automorphism::{AutSet, Automorphism, CentralHom};
pub use error::{Error, Result};
pub use group::{Group, Limits, QuotientMap, Subgroup};

/// Version string mixed into cache keys.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
