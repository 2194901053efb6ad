//! Smith normal form and the kernel/cokernel computations built on it.
//!
//! Pivoting is deterministic: the first entry of smallest nonzero absolute
//! value in the trailing submatrix is moved to the pivot position, then the
//! pivot column and row are swept in that order. Golden tests rely on the
//! output being a pure function of the input.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::abelian::AbelianGroupPresentation;
use super::matrix::IntMatrix;

/// U·A·V = D with U, V unimodular and D diagonal with d₁ | d₂ | … .
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let t = self.d.rows().min(self.d.cols());
        (0..t).take_while(|&i| !self.d.at(i, i).is_zero()).count()
    }

    /// The nonzero diagonal entries, in chain order.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank()).map(|i| self.d.at(i, i).clone()).collect()
    }
}

/// First entry of smallest nonzero absolute value in the trailing submatrix.
fn find_pivot(d: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut best_abs = BigInt::zero();
    for i in k..d.rows() {
        for j in k..d.cols() {
            let e = d.at(i, j);
            if e.is_zero() {
                continue;
            }
            let a = e.abs();
            if best.is_none() || a < best_abs {
                best = Some((i, j));
                best_abs = a;
            }
        }
    }
    best
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let rows = a.rows();
    let cols = a.cols();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let t = rows.min(cols);

    let mut k = 0;
    while k < t {
        let Some((pi, pj)) = find_pivot(&d, k) else { break };
        d.swap_rows(k, pi);
        u.swap_rows(k, pi);
        d.swap_cols(k, pj);
        v.swap_cols(k, pj);

        loop {
            // Row sweep: clear the pivot column below k.
            let mut residue = false;
            for i in k + 1..rows {
                if d.at(i, k).is_zero() {
                    continue;
                }
                let q = d.at(i, k).div_floor(d.at(k, k));
                if !q.is_zero() {
                    let c = -q;
                    d.row_axpy(i, k, &c);
                    u.row_axpy(i, k, &c);
                }
                if !d.at(i, k).is_zero() {
                    residue = true;
                }
            }
            if residue {
                let (pi, pj) = find_pivot(&d, k).expect("nonzero residue exists");
                d.swap_rows(k, pi);
                u.swap_rows(k, pi);
                d.swap_cols(k, pj);
                v.swap_cols(k, pj);
                continue;
            }
            // Column sweep: clear the pivot row to the right of k.
            for j in k + 1..cols {
                if d.at(k, j).is_zero() {
                    continue;
                }
                let q = d.at(k, j).div_floor(d.at(k, k));
                if !q.is_zero() {
                    let c = -q;
                    d.col_axpy(j, k, &c);
                    v.col_axpy(j, k, &c);
                }
                if !d.at(k, j).is_zero() {
                    residue = true;
                }
            }
            if residue {
                let (pi, pj) = find_pivot(&d, k).expect("nonzero residue exists");
                d.swap_rows(k, pi);
                u.swap_rows(k, pi);
                d.swap_cols(k, pj);
                v.swap_cols(k, pj);
                continue;
            }
            break;
        }

        // Divisibility fix: fold a non-divisible trailing entry into row k
        // and rediagonalize this position.
        let offender = (k + 1..rows)
            .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !d.at(i, j).mod_floor(d.at(k, k)).is_zero());
        if let Some((i, _)) = offender {
            let onev = BigInt::from(1);
            d.row_axpy(k, i, &onev);
            u.row_axpy(k, i, &onev);
            continue;
        }

        if d.at(k, k).is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
        k += 1;
    }

    SmithDecomposition { u, d, v }
}

/// Presentation of ℤ^rows / column-span(A), in canonical form.
pub fn cokernel(a: &IntMatrix) -> AbelianGroupPresentation {
    let snf = smith_normal_form(a);
    let free_rank = a.rows() - snf.rank();
    AbelianGroupPresentation::from_diagonal(&snf.diagonal(), free_rank)
}

/// A saturated ℤ-basis of {v : A·v = 0}, as the columns of the result.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let r = snf.rank();
    let cols = a.cols();
    let mut basis = IntMatrix::zero(cols, cols - r);
    for (out, j) in (r..cols).enumerate() {
        for i in 0..cols {
            *basis.at_mut(i, out) = snf.v.at(i, j).clone();
        }
    }
    basis
}

/// Solve A·x = c over ℤ exactly; `None` when no integer solution exists.
///
/// When the kernel of A is nontrivial the solution with zero coordinates
/// along the kernel directions of the Smith decomposition is returned, so
/// the output is deterministic.
pub fn solve_exact(a: &IntMatrix, c: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(c.len(), a.rows(), "rhs length must equal rows");
    let snf = smith_normal_form(a);
    let r = snf.rank();
    let w = snf.u.mul_vec(c);
    let mut y = alloc::vec![BigInt::zero(); a.cols()];
    for (i, wi) in w.iter().enumerate() {
        if i < r {
            let (q, rem) = wi.div_rem(snf.d.at(i, i));
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !wi.is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&y))
}
