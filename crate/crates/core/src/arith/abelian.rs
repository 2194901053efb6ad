//! Canonical presentations of finitely generated abelian groups.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Invariant-factor presentation: ℤ^free_rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/dₖ with
/// d₁ | d₂ | … and every dᵢ ≥ 2. Unit factors are dropped, so two
/// presentations of the same group compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupPresentation {
    invariant_factors: Vec<BigInt>,
    free_rank: usize,
}

impl AbelianGroupPresentation {
    pub fn trivial() -> Self {
        AbelianGroupPresentation { invariant_factors: Vec::new(), free_rank: 0 }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupPresentation { invariant_factors: Vec::new(), free_rank: rank }
    }

    /// ℤ/n for n ≥ 2; n = 1 gives the trivial group, n = 0 gives ℤ.
    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => Self::free(1),
            1 => Self::trivial(),
            _ => AbelianGroupPresentation {
                invariant_factors: alloc::vec![BigInt::from(n)],
                free_rank: 0,
            },
        }
    }

    /// Canonicalize a Smith diagonal (already a divisibility chain): drop
    /// unit factors, keep the rest, take absolute values.
    pub(crate) fn from_diagonal(diag: &[BigInt], free_rank: usize) -> Self {
        let invariant_factors = diag
            .iter()
            .map(Signed::abs)
            .filter(|d| !d.is_one())
            .collect();
        AbelianGroupPresentation { invariant_factors, free_rank }
    }

    /// Canonical form of an arbitrary direct sum of cyclic groups; a factor
    /// of 0 contributes a free summand.
    pub fn from_factors(factors: &[BigInt]) -> Self {
        let mut free = 0usize;
        let mut torsion: Vec<BigInt> = Vec::new();
        for f in factors {
            if f.is_zero() {
                free += 1;
            } else if !f.abs().is_one() {
                torsion.push(f.abs());
            }
        }
        // Fold into a divisibility chain with pairwise gcd/lcm exchanges.
        let n = torsion.len();
        if n > 1 {
            loop {
                let mut changed = false;
                for i in 0..n {
                    for j in i + 1..n {
                        let g = torsion[i].gcd(&torsion[j]);
                        if g != torsion[i] {
                            let l = torsion[i].lcm(&torsion[j]);
                            torsion[i] = g;
                            torsion[j] = l;
                            changed = true;
                        }
                    }
                }
                if !changed {
                    break;
                }
            }
            torsion.retain(|d| !d.is_one());
            torsion.sort();
        }
        AbelianGroupPresentation { invariant_factors: torsion, free_rank: free }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut factors: Vec<BigInt> = self.invariant_factors.clone();
        factors.extend(other.invariant_factors.iter().cloned());
        let mut out = Self::from_factors(&factors);
        out.free_rank = self.free_rank + other.free_rank;
        out
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order; `None` when a free summand is present.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.invariant_factors.iter().product())
    }

    /// ASCII rendering used in reports: "0", "Z", "Z^2 + Z/2 + Z/6", ...
    pub fn render(&self) -> String {
        use core::fmt::Write;
        if self.is_trivial() {
            return String::from("0");
        }
        let mut out = String::new();
        match self.free_rank {
            0 => {}
            1 => out.push('Z'),
            r => {
                let _ = write!(out, "Z^{}", r);
            }
        }
        for d in &self.invariant_factors {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let _ = write!(out, "Z/{}", d);
        }
        out
    }
}

impl fmt::Display for AbelianGroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(AbelianGroupPresentation::cyclic(1), AbelianGroupPresentation::trivial());
        assert_eq!(AbelianGroupPresentation::cyclic(0), AbelianGroupPresentation::free(1));
        // Z/2 ⊕ Z/3 = Z/6
        let s = AbelianGroupPresentation::cyclic(2)
            .direct_sum(&AbelianGroupPresentation::cyclic(3));
        assert_eq!(s, AbelianGroupPresentation::cyclic(6));
        // Z/4 ⊕ Z/6 = Z/2 ⊕ Z/12
        let s = AbelianGroupPresentation::cyclic(4)
            .direct_sum(&AbelianGroupPresentation::cyclic(6));
        assert_eq!(
            s.invariant_factors(),
            &[BigInt::from(2), BigInt::from(12)]
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(AbelianGroupPresentation::trivial().render(), "0");
        assert_eq!(AbelianGroupPresentation::free(1).render(), "Z");
        assert_eq!(AbelianGroupPresentation::cyclic(3).render(), "Z/3");
        let g = AbelianGroupPresentation::free(2)
            .direct_sum(&AbelianGroupPresentation::cyclic(6))
            .direct_sum(&AbelianGroupPresentation::cyclic(2));
        assert_eq!(g.render(), "Z^2 + Z/2 + Z/6");
    }
}
