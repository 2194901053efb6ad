//! Group actions on Laurent rings: torus actions as gradings, finite
//! cyclic groups acting by monomial automorphisms, truncated invariant
//! extraction, and the unit-group ℤ[G]-module.

mod automorphism;
mod invariants;
mod units;

pub use automorphism::{check_cyclic, CyclicAction, MonomialAutomorphism};
pub use invariants::{invariants_truncated, ExponentBox, TruncatedInvariants};
pub use units::{unit_group_module, LatticeGModule, UnitGroupModule};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;

use crate::laurent::{Grading, LaurentError, LaurentPoly, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionError {
    Laurent(LaurentError),
    /// The exponent matrix is not invertible over ℤ.
    NotUnimodular,
    NotSquare,
    ZeroScalar,
    /// φ^power ≠ identity for the declared order.
    OrderViolated { power: u32 },
    /// φ^smaller = identity already.
    OrderNotMinimal { smaller: u32 },
    /// The unit-group split k^× ⊕ ℤⁿ needs scalar part 1 everywhere.
    NontrivialScalars,
    /// A monomial orbit escapes the truncation box; the smallest stable
    /// enlargement is suggested.
    BoxNotStable { orbit: Vec<crate::laurent::Monomial>, suggested: ExponentBox },
    /// No monomial of the box has its whole orbit inside the box.
    EmptyStableCore { suggested: ExponentBox },
    ZeroDivisorInput,
    /// A precondition element failed its invariance check.
    NotInvariant { which: String },
}

impl fmt::Display for ActionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionError::Laurent(e) => write!(f, "{}", e),
            ActionError::NotUnimodular => write!(f, "exponent matrix is not unimodular"),
            ActionError::NotSquare => write!(f, "exponent matrix is not square"),
            ActionError::ZeroScalar => write!(f, "automorphism scalar must be nonzero"),
            ActionError::OrderViolated { power } => {
                write!(f, "automorphism power {} is not the identity", power)
            }
            ActionError::OrderNotMinimal { smaller } => {
                write!(f, "order is not minimal: power {} is already the identity", smaller)
            }
            ActionError::NontrivialScalars => {
                write!(f, "unit-group split requires trivial scalar part")
            }
            ActionError::BoxNotStable { orbit, .. } => {
                write!(f, "box is not stable under the exponent action (orbit of {:?} escapes)", orbit.first())
            }
            ActionError::EmptyStableCore { .. } => {
                write!(f, "no monomial orbit stays inside the box")
            }
            ActionError::ZeroDivisorInput => write!(f, "element must be a nonzerodivisor"),
            ActionError::NotInvariant { which } => {
                write!(f, "precondition failed: {} is not invariant", which)
            }
        }
    }
}

impl From<LaurentError> for ActionError {
    fn from(e: LaurentError) -> Self {
        ActionError::Laurent(e)
    }
}

/// The weight of f when it is homogeneous under the grading — for a split
/// torus, semiinvariants are exactly the homogeneous elements and the
/// weight is the character.
pub fn semiinvariant_weight(
    f: &LaurentPoly,
    g: &Grading,
) -> Result<Option<Vec<BigInt>>, LaurentError> {
    g.weight_of(f)
}

/// Membership test for the principal ideal f·Sᴳ inside Sᴳ: since
/// Af = Sf ∩ A for invariant f, g lies in f·Sᴳ iff g/f lies in S and is
/// invariant.
pub fn principal_invariant_contract(
    f: &RationalFunction,
    g: &RationalFunction,
    action: &CyclicAction,
) -> Result<bool, ActionError> {
    if f.is_zero() {
        return Err(ActionError::ZeroDivisorInput);
    }
    if !action.is_invariant_fraction(f)? {
        return Err(ActionError::NotInvariant { which: String::from("f") });
    }
    if !action.is_invariant_fraction(g)? {
        return Err(ActionError::NotInvariant { which: String::from("g") });
    }
    let q = g.div(f)?;
    Ok(q.is_laurent() && action.is_invariant_fraction(&q)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{FieldDescriptor, IntMatrix};
    use crate::laurent::Monomial;
    use num_bigint::BigInt as BI;

    /// The order-3 monomial action σA = B, σB = (AB)⁻¹ over an
    /// algebraically closed field of characteristic 3.
    pub(super) fn hochster_action() -> CyclicAction {
        let fd = FieldDescriptor::prime_field(BI::from(3)).unwrap();
        let t = IntMatrix::from_i64(2, 2, &[0, -1, 1, -1]);
        let phi = MonomialAutomorphism::new(t, alloc::vec![fd.one(), fd.one()], fd).unwrap();
        check_cyclic(&phi, 3).unwrap()
    }

    /// Cyclic permutation of X₁, X₂, X₃ in characteristic 3.
    pub(super) fn permutation_action() -> CyclicAction {
        let fd = FieldDescriptor::prime_field(BI::from(3)).unwrap();
        let t = IntMatrix::from_i64(3, 3, &[0, 0, 1, 1, 0, 0, 0, 1, 0]);
        let phi = MonomialAutomorphism::new(t, alloc::vec![fd.one(); 3], fd).unwrap();
        check_cyclic(&phi, 3).unwrap()
    }

    #[test]
    fn contract_membership() {
        // f = e₁³/e₃ does not divide e₁e₂/e₃ in the invariant ring:
        // the quotient e₂/e₁² leaves S.
        let a = hochster_stack();
        let (e1, e2, e3) = a.1;
        let action = a.0;
        let f = RationalFunction::new(e1.pow(3).unwrap(), e3.clone()).unwrap();
        let g = RationalFunction::new(e1.mul(&e2).unwrap(), e3.clone()).unwrap();
        assert!(!principal_invariant_contract(&f, &g, &action).unwrap());
        // f | f
        assert!(principal_invariant_contract(&f, &f, &action).unwrap());
        // f | f·(e₂³/e₃²)
        let h = RationalFunction::new(e2.pow(3).unwrap(), e3.pow(2).unwrap()).unwrap();
        let fg = f.mul(&h).unwrap();
        assert!(principal_invariant_contract(&f, &fg, &action).unwrap());
    }

    /// Permutation action plus the three elementary symmetric polynomials.
    fn hochster_stack() -> (CyclicAction, (LaurentPoly, LaurentPoly, LaurentPoly)) {
        let action = permutation_action();
        let fd = action.generator().field().clone();
        let v = |i: usize| LaurentPoly::variable(3, fd.clone(), i);
        let e1 = v(0).add(&v(1)).unwrap().add(&v(2)).unwrap();
        let e2 = v(0).mul(&v(1)).unwrap()
            .add(&v(0).mul(&v(2)).unwrap()).unwrap()
            .add(&v(1).mul(&v(2)).unwrap()).unwrap();
        let e3 = v(0).mul(&v(1)).unwrap().mul(&v(2)).unwrap();
        (action, (e1, e2, e3))
    }

    #[test]
    fn weight_addition() {
        let g = Grading::from_rows(4, &[alloc::vec![1, 1, -1, -1]]);
        let fd = FieldDescriptor::rationals();
        let m = |e: [i64; 4]| {
            LaurentPoly::monomial_term(4, fd.clone(), Monomial::new(e.to_vec()), fd.from_i64(1))
        };
        let xs = m([1, 0, 1, 0]);
        let x = m([1, 0, 0, 0]);
        let w1 = semiinvariant_weight(&xs, &g).unwrap().unwrap();
        assert_eq!(w1, alloc::vec![BI::from(0)]);
        let w2 = semiinvariant_weight(&x, &g).unwrap().unwrap();
        let prod = xs.mul(&x).unwrap();
        let w = semiinvariant_weight(&prod, &g).unwrap().unwrap();
        assert_eq!(w[0], &w1[0] + &w2[0]);
        // x + s is not homogeneous
        let s = m([0, 0, 1, 0]);
        assert_eq!(semiinvariant_weight(&x.add(&s).unwrap(), &g).unwrap(), None);
    }
}
