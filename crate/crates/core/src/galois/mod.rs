//! Finite fields `F = F_{p^m}` and cyclic extensions `L = F_{q^n}`.

mod base;
mod basis;
mod ext;
pub mod upoly;

pub use base::{BaseField, Fq};
pub use basis::{dual_basis, frobenius, moore_matrix, orthogonal_vector, solve_gamma, trace, BasisKind, LBasis};
pub use ext::{find_irreducible, ExtElem, ExtField};
