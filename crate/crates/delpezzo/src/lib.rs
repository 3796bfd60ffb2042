//! Exact computation of Poisson cohomology dimensions for Poisson Del Pezzo
//! surfaces.
//!
//! Global holomorphic vector and bivector fields on `CP^2`, `CP^1 x CP^1`,
//! and blow-ups of `CP^2` at up to eight generic points are realized as
//! polynomial data in affine charts. The Poisson differential `d_pi = [pi, .]`
//! between global section spaces is assembled as an exact rational matrix and
//! the cohomology dimensions are read off from its rank. All arithmetic is
//! exact; no floating point is used anywhere.

pub mod blowup;
pub mod calculus;
pub mod charts;
pub mod cohomology;
pub mod linalg;
pub mod ratpoly;

pub use charts::{ChartId, ProjectivePoint, SurfaceKind, SurfaceSpec};
pub use ratpoly::{LaurentMonomial, RatLaurent, Rational, Var};
