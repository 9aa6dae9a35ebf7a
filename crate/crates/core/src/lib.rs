//! Exact point schemes of quadratic algebras.
//!
//! Given a presentation `K<x1..xn> / (g1..gm)` with quadratic relations
//! whose coefficients live in `Q[q, q^-1]`, the pipeline
//!
//! 1. multilinearizes every relation (`xi xj -> ai bj`),
//! 2. assembles the `m x n` matrix `D` of linear forms in `a` with
//!    `D b = (g1(a, b), .., gm(a, b))`,
//! 3. computes all maximal minors of `D` by fraction-free elimination,
//! 4. strips parameter units, factors the minors and splits into cases,
//! 5. reports the point scheme as a union of coordinate subspaces and
//!    hypersurfaces, and
//! 6. solves `D(a) b = 0` pointwise for the partner coordinate `b`.

pub mod cli;
pub mod corpus;
pub mod elim;
pub mod fiber;
pub mod linmat;
pub mod multipoly;
pub mod relparse;
pub mod report;
pub mod sampling;
pub mod scalars;
pub mod scheme;
