//! Exact combinatorics of hypersimplices and alcoved polytopes.
//!
//! The crate builds unimodular triangulations of the hypersimplex by four
//! independent constructions (Stanley's piecewise-linear map, sorted
//! collections of subsets, minimal circuits of a shift graph, and alcoves of
//! the affine Coxeter arrangement of type A), extends the triangulation and
//! three volume algorithms to arbitrary alcoved polytopes, and implements the
//! surrounding machinery: sort-closed matroids and their duality, the
//! combinatorial normal form behind the quadratic Groebner basis of the
//! associated toric ideal, thrackle models of rank-two triangulations, and
//! multi-Eulerian polynomials with their permutation identities.
//!
//! Everything is exact integer arithmetic; there is no floating point in the
//! crate.  All enumeration orders are canonical (sorted), so results are
//! deterministic and safe to compare bit-for-bit.

pub mod alcoved;
pub mod combinatorics;
pub mod error;
pub mod hypersimplex;
pub mod linalg;
pub mod matroid;
pub mod multi_eulerian;
pub mod polynomial;
pub mod rank_two;
pub mod sorting_ideal;
pub mod verify;

pub use error::{Error, Result};
pub use polynomial::IntPolynomial;
