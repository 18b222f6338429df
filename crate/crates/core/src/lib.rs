//! Minimal dilatations of pseudo-Anosov maps from Thurston's construction.
//!
//! Two curves α, β filling a surface with `i(α, β) = n` give a
//! representation of the group generated by their Dehn twists into
//! PSL₂(ℤ), with image Λₙ generated by `[[1, −n], [0, 1]]` and
//! `[[1, 0], [n, 1]]`. Hyperbolic elements are pseudo-Anosov and their
//! spectral radius is the dilatation. The smallest one is
//! `(n² − 2 + n√(n² − 4))/2` for `n ≥ 3`, so minimizing over a surface
//! reduces to minimizing the intersection number of a filling pair.
//!
//! - [`surd`]: exact quadratic irrationals `(p + q√D)/2`.
//! - [`matrix`]: exact SL₂(ℤ) and PSL₂(ℤ) arithmetic.
//! - [`word`]: words in the two twists.
//! - [`thurston`]: the representation, classification, closed forms.
//! - [`search`]: breadth-first enumeration of Λₙ as an independent check.
//! - [`filling`]: filling permutations, their search, and the double bigon move.
//! - [`multitwist`]: the floating-point generalization to multicurves.
//! - [`cli`]: the `thurston` command.
//!
//! ```
//! use thurston::thurston::min_dilatation_for_surface;
//!
//! let best = min_dilatation_for_surface(2, 0).unwrap();
//! assert_eq!(best.intersection, 4);
//! assert_eq!(best.dilatation.to_string(), "7 + 4√3");
//! ```

pub mod cli;
pub mod error;
pub mod filling;
mod json;
pub mod matrix;
pub mod multitwist;
pub mod search;
pub mod surd;
pub mod thurston;
pub mod word;

pub use error::{Error, Result};
pub use matrix::{ElementKind, Mat2, ProjMat2};
pub use surd::QuadraticSurd;
pub use word::{Generator, TwistWord};
