//! Exact computations for cluster structures arising from preprojective
//! algebras: Coxeter combinatorics, tilting-ideal chains and their quotient
//! modules, Gabriel quivers of cluster tilting objects, Fomin–Zelevinsky
//! mutation of quivers and seeds, and the loop-group minor identities of the
//! rank-two Kronecker case.

// Index loops mirror the matrix formulas; division is multiplication by
// an inverse.
#![allow(clippy::needless_range_loop, clippy::suspicious_arithmetic_impl)]

pub mod cluster;
pub mod coxeter;
pub mod foundation;
pub mod loopgroup;
pub mod preproj;
pub mod quiver;
pub mod word2quiver;
