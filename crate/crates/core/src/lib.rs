//! Exact computation of presentations for the integral Chow rings of the
//! spaces of degree-2 rational curves in projective r-space.
//!
//! The library reconstructs, for any `r >= 1`, the ideal of relations in
//! `Z[T, c2, c3]` in two equivalent shapes — one in closed form via
//! fixed-point localization sums, one via graded expansion of two rational
//! generating functions — and certifies the identities relating them. All
//! arithmetic is exact.

pub mod cli;
pub mod localization;
pub mod presentation;
pub mod ring;
pub mod series;
pub mod symm;
