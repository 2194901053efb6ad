//! Multivariate Laurent polynomial arithmetic over a [`FieldDescriptor`],
//! ℤᵐ-gradings, and reduced rational functions with decidable membership in
//! the Laurent ring.
//!
//! [`FieldDescriptor`]: crate::arith::FieldDescriptor

mod fraction;
mod gcd;
mod grading;
mod monomial;
mod poly;

pub use fraction::RationalFunction;
pub use gcd::{divides, exact_div, gcd};
pub use grading::Grading;
pub use monomial::Monomial;
pub use poly::{LaurentError, LaurentPoly};
