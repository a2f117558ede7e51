//! Exact-arithmetic toolkit for rank-one modules over cubic AS-algebras.
//!
//! The crate is organized around the combinatorial and linear-algebra layers
//! that make the classification of rank-one ideals over a cubic AS-algebra
//! effective:
//!
//! * [`series`] — integer Laurent polynomials and truncated Hilbert series
//!   over the fixed denominator `(1-t)^2(1-t^2)`.
//! * [`castelnuovo`] — Castelnuovo polynomials, their weights, enumeration,
//!   and the bijection with Hilbert series of normalized rank-one modules.
//! * [`ktheory`] — the Grothendieck group of the quantum quadric: both
//!   standard bases, shift and Euler-form matrices, normalization and the
//!   numerical invariants of rank-one classes.
//! * [`betti`] — Betti tables of torsion-free modules of projective
//!   dimension one and their enumeration for a fixed characteristic
//!   polynomial.
//! * [`ncalgebra`] — low-degree normal forms in the enveloping algebra
//!   `H_c` and cubic type-A algebras, the relation matrix, divisor
//!   equations on the point scheme, and builders for point/line/conic
//!   quiver representations.
//! * [`quiver`] — representations of the 4-vertex quiver and its hereditary
//!   3-vertex subquiver: relation checks, Hom/Ext dimensions, the Res/Ind
//!   adjunction and membership tests.
//! * [`moduli`] — the matrix varieties cut out by `Y'X - X'Y = I` and
//!   `rank(YX' - XY' - I) <= 1`: membership, finite-field search, exhaustive
//!   counting and tangent-space dimensions.
//! * [`appendix`] — the golden regression table for invariants up to (3,3).
//!
//! All arithmetic is exact: coefficients are big integers, linear algebra is
//! done over the rationals or a prime field. Nothing in the crate uses
//! floating point.

pub mod appendix;
pub mod betti;
pub mod castelnuovo;
pub mod field;
pub mod ktheory;
pub mod matrix;
pub mod moduli;
pub mod ncalgebra;
pub mod quiver;
pub mod series;

pub use field::{Field, PrimeField, Rationals};
pub use matrix::Mat;
