//! Series-reduced trees counted by tips, and upper bounds on the cusps and
//! singular points of plane projective and affine curves.
//!
//! The combinatorial half lives in [`partitions`], [`counting`] and
//! [`treegen`]: memoized big-integer counts of rooted and unrooted trees
//! without degree-2 vertices, together with an explicit generator used as an
//! independent oracle. The geometric half lives in [`curve_bounds`], which
//! evaluates the bounds as exact rationals and exposes every intermediate
//! identity so that they can be checked against each other.

pub mod cli;
pub mod counting;
pub mod curve_bounds;
mod error;
pub mod partitions;
pub mod treegen;

pub use error::{Error, ParseError, ParseErrorKind, Result};
