//! Exact arithmetic for divisor class groups of invariant subrings.
//!
//! The crate computes, over arbitrary-precision scalars, the objects that
//! decide factoriality of rings of invariants at desk scale:
//!
//! - [`arith`]: integer matrices, Smith normal form, finitely generated
//!   abelian groups, and exact field scalars (ℚ, 𝔽p, one quadratic layer).
//! - [`laurent`]: multivariate Laurent polynomials, gradings, reduced
//!   rational functions with decidable membership in the Laurent ring.
//! - [`actions`]: monomial automorphisms, finite cyclic actions, truncated
//!   invariant bases, and the unit-group lattice module.
//! - [`cohomology`]: H⁰/H¹ of cyclic groups on lattices and roots of unity,
//!   and class groups of quotients via Cl(Sᴳ) ≅ H¹(G, S^×).
//! - [`divisors`]: toric divisor/class-group arithmetic over enumerated
//!   height-one primes and the ceiling contraction formula.
//! - [`eqfrac`]: membership in the equivariant total ring of fractions in
//!   the torus, finite, and Krull regimes.
//! - [`certify`]: certificate verifiers for non-primality, group-like
//!   elements, semiinvariance over a base field, and dimension arithmetic.
//!
//! Everything is immutable after construction and free of global state; the
//! crate is `no_std` (with `alloc`) outside of tests.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod actions;
pub mod arith;
pub mod certify;
pub mod cohomology;
pub mod divisors;
pub mod eqfrac;
pub mod laurent;

pub use arith::{AbelianGroupPresentation, FieldDescriptor, IntMatrix, Scalar, SmithDecomposition};

