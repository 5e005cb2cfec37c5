//! Exact computations on Weyl groups, parabolic quotients, oriented link
//! patterns and sums of orthogonal root vectors.
//!
//! The crate is organised bottom-up:
//!
//! * [`root_system`]: finite root systems, coroots, coweights.
//! * [`weyl`]: Weyl group elements, Bruhat and weak orders, enumeration.
//! * [`quotient`]: the quotient `W(I,J,K)` and its order `≤_O`.
//! * [`link_pattern`]: type-A oriented link patterns and closure criteria.
//! * [`nilpotent`]: orthogonal root sets, heights, cascades, involutions.
//! * [`checks`]: exhaustive verification routines shared by tests and the CLI.

pub mod checks;
pub mod error;
pub mod link_pattern;
pub mod linalg;
pub mod nilpotent;
pub mod quotient;
pub mod root_system;
pub mod weyl;

pub use error::{Error, Result};

pub use link_pattern::{NilpotentMatrix, OrientedLinkPattern, SeqS};
pub use quotient::{IJKDatum, PosetGraph, QuotientElement};
pub use root_system::{build_root_system, CartanDatum, Coweight, Family, Root, RootSystem};
pub use weyl::{GroupTable, ParabolicSubset, WeylElement};
