//! Exact arithmetic substrate: integers, integer matrices, polynomials,
//! polynomials over prime fields and finite abelian groups.

pub mod group;
pub mod integers;
pub mod matrix;
pub mod modp;
pub mod poly;

pub use group::{generated_subgroup, group_from_relations, FiniteAbelianGroup, GroupElement, Presentation};
pub use matrix::{hnf, snf, IntMatrix, Smith};
pub use poly::{real_root_signs, IntPolynomial, QPoly, RealRoots, Sign};
