//! Exponent vectors ordered graded-lexicographically.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// Exponent vector of a Laurent monomial; entries may be negative.
///
/// The ordering is graded-lexicographic (total degree first, then lex on
/// the exponent vector), which is the term order used for display, leading
/// terms, and the normalization of reduced fractions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn new(exponents: Vec<i64>) -> Self {
        Monomial(exponents)
    }

    /// The monomial 1.
    pub fn unit(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    /// The i-th variable.
    pub fn variable(arity: usize, i: usize) -> Self {
        assert!(i < arity);
        let mut e = vec![0; arity];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product x^a · x^b.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Quotient x^a / x^b (always defined in the Laurent ring).
    pub fn div(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_sub(b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn pow(&self, e: i64) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|&a| a.checked_mul(e).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn inverse(&self) -> Monomial {
        self.pow(-1)
    }

    /// Componentwise ≤; divisibility inside the honest polynomial ring.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.arity() == other.arity() && self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.arity(), other.arity());
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let m = |e: &[i64]| Monomial::new(e.to_vec());
        assert!(m(&[1, 0]) < m(&[2, 0]));
        assert!(m(&[0, 2]) < m(&[1, 2]));
        // same total degree: lex decides
        assert!(m(&[1, 1]) < m(&[2, 0]));
        // negative exponents sort below by degree
        assert!(m(&[-1, 0]) < m(&[0, 0]));
    }

    #[test]
    fn arithmetic() {
        let a = Monomial::new(vec![2, -1]);
        let b = Monomial::new(vec![1, 3]);
        assert_eq!(a.mul(&b), Monomial::new(vec![3, 2]));
        assert_eq!(a.div(&b), Monomial::new(vec![1, -4]));
        assert_eq!(a.pow(-2), Monomial::new(vec![-4, 2]));
        assert!(Monomial::new(vec![1, 0]).divides(&Monomial::new(vec![2, 0])));
        assert!(!Monomial::new(vec![1, 1]).divides(&Monomial::new(vec![2, 0])));
    }
}
