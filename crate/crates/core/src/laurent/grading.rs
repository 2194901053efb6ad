//! ℤᵐ-gradings given by integer weight matrices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_bigint::BigInt;

use crate::arith::IntMatrix;

use super::monomial::Monomial;
use super::poly::{LaurentError, LaurentPoly};

/// A grading by ℤᵐ: the degree of x^e is W·e for an m×n weight matrix W.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    weights: IntMatrix,
}

impl Grading {
    pub fn new(weights: IntMatrix) -> Self {
        Grading { weights }
    }

    /// Total-degree grading: the single row (1, …, 1).
    pub fn standard(arity: usize) -> Self {
        Grading {
            weights: IntMatrix::from_i64(1, arity, &alloc::vec![1; arity]),
        }
    }

    pub fn from_rows(arity: usize, rows: &[Vec<i64>]) -> Self {
        let mut flat = Vec::new();
        for r in rows {
            assert_eq!(r.len(), arity, "weight row length must equal arity");
            flat.extend_from_slice(r);
        }
        Grading { weights: IntMatrix::from_i64(rows.len(), arity, &flat) }
    }

    pub fn weights(&self) -> &IntMatrix {
        &self.weights
    }

    pub fn arity(&self) -> usize {
        self.weights.cols()
    }

    pub fn rank(&self) -> usize {
        self.weights.rows()
    }

    pub fn degree(&self, m: &Monomial) -> Vec<BigInt> {
        assert_eq!(m.arity(), self.arity(), "monomial arity must match grading");
        let v: Vec<BigInt> = m.exponents().iter().map(|&e| BigInt::from(e)).collect();
        self.weights.mul_vec(&v)
    }

    /// Split f into homogeneous components, keyed by degree vector. The
    /// components sum to f.
    pub fn homogeneous_components(
        &self,
        f: &LaurentPoly,
    ) -> Result<BTreeMap<Vec<BigInt>, LaurentPoly>, LaurentError> {
        if f.arity() != self.arity() {
            return Err(LaurentError::ArityMismatch { left: f.arity(), right: self.arity() });
        }
        let mut out: BTreeMap<Vec<BigInt>, LaurentPoly> = BTreeMap::new();
        for (m, c) in f.terms() {
            let d = self.degree(m);
            let entry = out
                .entry(d)
                .or_insert_with(|| LaurentPoly::zero(f.arity(), f.field().clone()));
            *entry = entry.add(&LaurentPoly::monomial_term(
                f.arity(),
                f.field().clone(),
                m.clone(),
                c.clone(),
            ))?;
        }
        Ok(out)
    }

    /// The weight of f when f is homogeneous (a semiinvariant of the split
    /// torus); `None` for inhomogeneous or zero f.
    pub fn weight_of(&self, f: &LaurentPoly) -> Result<Option<Vec<BigInt>>, LaurentError> {
        let comps = self.homogeneous_components(f)?;
        if comps.len() == 1 {
            Ok(comps.into_keys().next())
        } else {
            Ok(None)
        }
    }

    pub fn is_homogeneous(&self, f: &LaurentPoly) -> Result<bool, LaurentError> {
        Ok(self.homogeneous_components(f)?.len() <= 1)
    }
}
