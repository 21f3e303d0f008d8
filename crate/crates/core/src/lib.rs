#![no_std]
//! Exact computations with finite-dimensional algebras graded by finite
//! groups.
//!
//! The crate builds graded-simple algebras in the canonical form
//! `F^f H (x) M_r(F)`, glues them with a truncated path radical, and computes
//! the conjectural graded exponent of the result, for the whole group and
//! for any subgroup. It also traces the monomial construction behind the
//! subgroup inequality, builds Grassmann envelopes, and computes multilinear
//! codimensions by brute force.
//!
//! Everything here is pure computation; file formats and the command line
//! live in the `gradedexp` crate.

extern crate alloc;

pub mod algebra;
pub mod cocycle;
pub mod codim;
pub mod decomposition;
pub mod error;
pub mod expconj;
pub mod glued;
pub mod grassmann;
pub mod group;
pub mod linalg;
pub mod scalar;
pub mod simple;
pub mod trace;

pub use error::{Error, Result};
