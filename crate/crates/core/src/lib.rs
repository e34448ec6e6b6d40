//! Exact-arithmetic machinery for first BGG operators on |1|-graded parabolic
//! geometries: Kostant differentials and Laplacians, tractor connections on
//! coordinate patches, the iterative construction of the prolongation covariant
//! derivative, splitting operators, and the example geometries (projective and
//! Grassmannian) everything is checked against.
//!
//! All scalars are rationals or rational functions over the rationals, so every
//! claim the library verifies is an exact identity, never an approximation.

pub mod exact;
pub mod linalg;

pub mod lie;
pub mod module;

pub mod kostant;

pub use exact::{Poly, RatFun, Rational};
