//! Exact-arithmetic workbench for symplectic instanton monads on P^3 built
//! from tensors ω ∈ S^2 H* ⊗ Λ^2 V*.

pub mod error;
pub mod families;
pub mod field;
pub mod geometry;
pub mod matrix;
pub mod monad;
pub mod nondeg;
pub mod poly;
pub mod rng;
pub mod suite;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, Fp, Fq, Rationals};
pub use matrix::{sample_matrix, Mat, Subspace};
pub use tensor::{OmegaTensor, Wedge};
