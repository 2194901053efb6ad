//! Exact arithmetic kernels: arbitrary-precision integer linear algebra,
//! Smith normal form, presentations of finitely generated abelian groups,
//! and field scalars (ℚ, 𝔽p, and one quadratic extension layer).

mod abelian;
mod field;
mod matrix;
mod snf;

pub use abelian::AbelianGroupPresentation;
pub use field::{FieldDescriptor, FieldDescriptorError, Scalar};
pub use matrix::IntMatrix;
pub use snf::{cokernel, kernel_basis, smith_normal_form, solve_exact, SmithDecomposition};
