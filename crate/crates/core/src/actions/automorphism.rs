//! Monomial automorphisms x_j ↦ c_j·x^(T·e_j) and validated cyclic actions.

use alloc::vec::Vec;
use num_bigint::BigInt;

use crate::arith::{FieldDescriptor, IntMatrix, Scalar};
use crate::laurent::{LaurentPoly, Monomial, RationalFunction};

use super::ActionError;

/// Ring automorphism of the Laurent ring sending the j-th variable to
/// scalars[j] · x^(column j of the exponent matrix). The exponent matrix
/// must be unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialAutomorphism {
    exponent_matrix: IntMatrix,
    scalars: Vec<Scalar>,
    field: FieldDescriptor,
}

impl MonomialAutomorphism {
    pub fn new(
        exponent_matrix: IntMatrix,
        scalars: Vec<Scalar>,
        field: FieldDescriptor,
    ) -> Result<Self, ActionError> {
        if exponent_matrix.rows() != exponent_matrix.cols() {
            return Err(ActionError::NotSquare);
        }
        if !exponent_matrix.is_unimodular() {
            return Err(ActionError::NotUnimodular);
        }
        if scalars.len() != exponent_matrix.rows() {
            return Err(ActionError::NotSquare);
        }
        if scalars.iter().any(|c| field.is_zero(c)) {
            return Err(ActionError::ZeroScalar);
        }
        Ok(MonomialAutomorphism { exponent_matrix, scalars, field })
    }

    pub fn identity(arity: usize, field: FieldDescriptor) -> Self {
        MonomialAutomorphism {
            exponent_matrix: IntMatrix::identity(arity),
            scalars: alloc::vec![field.one(); arity],
            field,
        }
    }

    pub fn arity(&self) -> usize {
        self.exponent_matrix.rows()
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn exponent_matrix(&self) -> &IntMatrix {
        &self.exponent_matrix
    }

    pub fn scalars(&self) -> &[Scalar] {
        &self.scalars
    }

    pub fn has_trivial_scalars(&self) -> bool {
        self.scalars.iter().all(|c| self.field.is_one(c))
    }

    pub fn is_identity(&self) -> bool {
        self.exponent_matrix.is_identity() && self.has_trivial_scalars()
    }

    /// Image of the exponent vector under T alone.
    pub fn exponent_image(&self, m: &Monomial) -> Monomial {
        let v: Vec<BigInt> = m.exponents().iter().map(|&e| BigInt::from(e)).collect();
        let w = self.exponent_matrix.mul_vec(&v);
        Monomial::new(
            w.iter()
                .map(|b| i64::try_from(b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Scalar factor picked up by x^m, i.e. ∏ c_j^{m_j}.
    fn scalar_factor(&self, m: &Monomial) -> Scalar {
        let mut acc = self.field.one();
        for (c, &e) in self.scalars.iter().zip(m.exponents()) {
            if e != 0 {
                acc = self.field.mul(&acc, &self.field.pow(c, e));
            }
        }
        acc
    }

    /// Image of a Laurent polynomial; multiplicative and additive.
    pub fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly, ActionError> {
        if f.arity() != self.arity() {
            return Err(ActionError::Laurent(crate::laurent::LaurentError::ArityMismatch {
                left: f.arity(),
                right: self.arity(),
            }));
        }
        if f.field() != &self.field {
            return Err(ActionError::Laurent(crate::laurent::LaurentError::FieldMismatch));
        }
        let terms: Vec<(Monomial, Scalar)> = f
            .terms()
            .map(|(m, c)| {
                (self.exponent_image(m), self.field.mul(c, &self.scalar_factor(m)))
            })
            .collect();
        Ok(LaurentPoly::from_terms(f.arity(), self.field.clone(), terms))
    }

    pub fn apply_fraction(&self, r: &RationalFunction) -> Result<RationalFunction, ActionError> {
        let num = self.apply(r.numerator())?;
        let den = self.apply(r.denominator())?;
        Ok(RationalFunction::new(num, den)?)
    }

    /// self ∘ other (apply `other` first).
    pub fn compose(&self, other: &MonomialAutomorphism) -> Result<MonomialAutomorphism, ActionError> {
        let n = self.arity();
        let exponent_matrix = self.exponent_matrix.mul(&other.exponent_matrix);
        let mut scalars = Vec::with_capacity(n);
        for j in 0..n {
            // image of x_j under other, then push through self
            let col = Monomial::new(
                (0..n)
                    .map(|i| i64::try_from(other.exponent_matrix.at(i, j)).expect("exponent overflow"))
                    .collect(),
            );
            let c = self.field.mul(&other.scalars[j], &self.scalar_factor(&col));
            scalars.push(c);
        }
        MonomialAutomorphism::new(exponent_matrix, scalars, self.field.clone())
    }
}

/// A monomial automorphism of exact multiplicative order s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicAction {
    generator: MonomialAutomorphism,
    order: u32,
}

/// Validate that φ has exact order s: φˢ = id and no smaller positive power
/// is the identity.
pub fn check_cyclic(phi: &MonomialAutomorphism, s: u32) -> Result<CyclicAction, ActionError> {
    assert!(s >= 1, "order must be positive");
    let mut power = phi.clone();
    for i in 1..=s {
        if i > 1 {
            power = power.compose(phi)?;
        }
        if power.is_identity() {
            if i < s {
                return Err(ActionError::OrderNotMinimal { smaller: i });
            }
            return Ok(CyclicAction { generator: phi.clone(), order: s });
        }
    }
    Err(ActionError::OrderViolated { power: s })
}

impl CyclicAction {
    pub fn generator(&self) -> &MonomialAutomorphism {
        &self.generator
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn arity(&self) -> usize {
        self.generator.arity()
    }

    /// The k-th power of the generator.
    pub fn power(&self, k: u32) -> MonomialAutomorphism {
        let mut acc = MonomialAutomorphism::identity(self.arity(), self.generator.field().clone());
        for _ in 0..(k % self.order) {
            acc = acc.compose(&self.generator).expect("validated action composes");
        }
        acc
    }

    pub fn is_invariant_poly(&self, f: &LaurentPoly) -> Result<bool, ActionError> {
        Ok(self.generator.apply(f)? == *f)
    }

    /// Invariance of a fraction by cross-multiplication: σ(p)·q = p·σ(q).
    pub fn is_invariant_fraction(&self, r: &RationalFunction) -> Result<bool, ActionError> {
        let sp = self.generator.apply(r.numerator())?;
        let sq = self.generator.apply(r.denominator())?;
        Ok(sp.mul(r.denominator())? == r.numerator().mul(&sq)?)
    }

    /// Σ σ^i f over i = 0..s — an invariant whenever it is nonzero.
    pub fn orbit_sum(&self, f: &LaurentPoly) -> Result<LaurentPoly, ActionError> {
        let mut acc = f.clone();
        let mut img = f.clone();
        for _ in 1..self.order {
            img = self.generator.apply(&img)?;
            acc = acc.add(&img)?;
        }
        Ok(acc)
    }

    /// Orbit of an exponent vector under T.
    pub fn exponent_orbit(&self, m: &Monomial) -> Vec<Monomial> {
        let mut orbit = alloc::vec![m.clone()];
        let mut cur = m.clone();
        for _ in 1..self.order {
            cur = self.generator.exponent_image(&cur);
            orbit.push(cur.clone());
        }
        orbit
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldDescriptor;
    use num_bigint::BigInt as BI;

    fn sigma() -> MonomialAutomorphism {
        let fd = FieldDescriptor::prime_field(BI::from(3)).unwrap();
        MonomialAutomorphism::new(
            IntMatrix::from_i64(2, 2, &[0, -1, 1, -1]),
            alloc::vec![fd.one(), fd.one()],
            fd,
        )
        .unwrap()
    }

    #[test]
    fn sigma_images() {
        let s = sigma();
        let fd = s.field().clone();
        let a = LaurentPoly::variable(2, fd.clone(), 0);
        let b = LaurentPoly::variable(2, fd.clone(), 1);
        // σA = B
        assert_eq!(s.apply(&a).unwrap(), b);
        // σB = (AB)⁻¹
        let ab_inv = a.mul(&b).unwrap().pow(-1).unwrap();
        assert_eq!(s.apply(&b).unwrap(), ab_inv);
        // identity fixes everything
        let id = MonomialAutomorphism::identity(2, fd);
        let f = a.add(&b).unwrap();
        assert_eq!(id.apply(&f).unwrap(), f);
    }

    #[test]
    fn order_validation() {
        let s = sigma();
        assert!(check_cyclic(&s, 3).is_ok());
        assert_eq!(
            check_cyclic(&s, 2),
            Err(ActionError::OrderViolated { power: 2 })
        );
        assert_eq!(
            check_cyclic(&s, 6),
            Err(ActionError::OrderNotMinimal { smaller: 3 })
        );
        let fd = FieldDescriptor::rationals();
        let id = MonomialAutomorphism::identity(2, fd);
        assert!(check_cyclic(&id, 1).is_ok());
    }

    #[test]
    fn apply_is_multiplicative_and_composes() {
        let s = sigma();
        let fd = s.field().clone();
        let a = LaurentPoly::variable(2, fd.clone(), 0);
        let b = LaurentPoly::variable(2, fd.clone(), 1);
        let f = a.add(&b).unwrap();
        let g = a.mul(&b).unwrap().add(&LaurentPoly::one(2, fd.clone())).unwrap();
        let fg = f.mul(&g).unwrap();
        assert_eq!(
            s.apply(&fg).unwrap(),
            s.apply(&f).unwrap().mul(&s.apply(&g).unwrap()).unwrap()
        );
        let ss = s.compose(&s).unwrap();
        assert_eq!(
            ss.apply(&f).unwrap(),
            s.apply(&s.apply(&f).unwrap()).unwrap()
        );
    }

    #[test]
    fn generator_power_order_fixes_random_polys() {
        use rand::{Rng, SeedableRng};
        let action = check_cyclic(&sigma(), 3).unwrap();
        let fd = action.generator().field().clone();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..30 {
            let nterms = rng.gen_range(1..5);
            let terms: Vec<(Monomial, Scalar)> = (0..nterms)
                .map(|_| {
                    let e = alloc::vec![rng.gen_range(-3..4), rng.gen_range(-3..4)];
                    (Monomial::new(e), fd.from_i64(rng.gen_range(1..3)))
                })
                .collect();
            let f = LaurentPoly::from_terms(2, fd.clone(), terms);
            let mut img = f.clone();
            for _ in 0..3 {
                img = action.generator().apply(&img).unwrap();
            }
            assert_eq!(img, f);
        }
    }

    #[test]
    fn invariance_checks() {
        let action = check_cyclic(&sigma(), 3).unwrap();
        let fd = action.generator().field().clone();
        let a = LaurentPoly::variable(2, fd.clone(), 0);
        // A is not invariant; its orbit sum A + B + (AB)⁻¹ is
        assert!(!action.is_invariant_poly(&a).unwrap());
        let orbit = action.orbit_sum(&a).unwrap();
        assert!(action.is_invariant_poly(&orbit).unwrap());
        assert_eq!(orbit.num_terms(), 3);
    }
}
