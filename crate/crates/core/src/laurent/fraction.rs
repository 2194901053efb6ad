//! Reduced rational functions over a Laurent ring.
//!
//! The reduced form is unique: the numerator and denominator share no
//! non-unit factor, the denominator is an honest polynomial not divisible
//! by any variable, and its graded-lex least monomial has coefficient 1.
//! All monomial units are carried by the numerator.

use alloc::string::String;

use super::gcd::{exact_div_honest, gcd};
use super::poly::{LaurentError, LaurentPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
    reduced: bool,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        num.compat(&den)?;
        if den.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        Ok(RationalFunction { num, den, reduced: false })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.arity(), p.field().clone());
        RationalFunction { num: p, den, reduced: true }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn arity(&self) -> usize {
        self.num.arity()
    }

    pub fn field(&self) -> &crate::arith::FieldDescriptor {
        self.num.field()
    }

    /// The unique reduced form; value unchanged. 0/q reduces to 0/1.
    pub fn reduce(&self) -> RationalFunction {
        if self.reduced {
            return self.clone();
        }
        let fd = self.num.field().clone();
        let arity = self.num.arity();
        if self.num.is_zero() {
            return RationalFunction {
                num: LaurentPoly::zero(arity, fd.clone()),
                den: LaurentPoly::one(arity, fd),
                reduced: true,
            };
        }
        let (ns, nh) = self.num.split_monomial();
        let (ds, dh) = self.den.split_monomial();
        let g = gcd(&nh, &dh);
        let n = exact_div_honest(&nh, &g).expect("gcd divides numerator");
        let d = exact_div_honest(&dh, &g).expect("gcd divides denominator");
        // scale so the denominator's graded-lex least coefficient is 1
        let c = d.trailing().map(|(_, c)| c.clone()).expect("den nonzero");
        let cinv = fd.inv(&c);
        let num = n.scalar_mul(&cinv).mul_monomial(&ns.div(&ds));
        let den = d.scalar_mul(&cinv);
        RationalFunction { num, den, reduced: true }
    }

    /// Exact value equality by cross-multiplication.
    pub fn value_eq(&self, other: &RationalFunction) -> Result<bool, LaurentError> {
        let left = self.num.mul(&other.den)?;
        let right = other.num.mul(&self.den)?;
        Ok(left == right)
    }

    /// True iff the reduced denominator is a single term, i.e. the value
    /// lies in the Laurent ring.
    pub fn is_laurent(&self) -> bool {
        let r = self.reduce();
        r.den.is_unit()
    }

    /// Convert to a Laurent polynomial when the reduced denominator is a
    /// unit.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        let r = self.reduce();
        if !r.den.is_unit() {
            return None;
        }
        let inv = r.den.unit_inverse().ok()?;
        r.num.mul(&inv).ok()
    }

    pub fn add(&self, other: &RationalFunction) -> Result<RationalFunction, LaurentError> {
        let num = self.num.mul(&other.den)?.add(&other.num.mul(&self.den)?)?;
        let den = self.den.mul(&other.den)?;
        Ok(RationalFunction::new(num, den)?.reduce())
    }

    pub fn sub(&self, other: &RationalFunction) -> Result<RationalFunction, LaurentError> {
        self.add(&RationalFunction {
            num: other.num.neg(),
            den: other.den.clone(),
            reduced: other.reduced,
        })
    }

    pub fn mul(&self, other: &RationalFunction) -> Result<RationalFunction, LaurentError> {
        let num = self.num.mul(&other.num)?;
        let den = self.den.mul(&other.den)?;
        Ok(RationalFunction::new(num, den)?.reduce())
    }

    pub fn div(&self, other: &RationalFunction) -> Result<RationalFunction, LaurentError> {
        if other.num.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        let num = self.num.mul(&other.den)?;
        let den = self.den.mul(&other.num)?;
        Ok(RationalFunction::new(num, den)?.reduce())
    }

    pub fn inv(&self) -> Result<RationalFunction, LaurentError> {
        if self.num.is_zero() {
            return Err(LaurentError::ZeroDenominator);
        }
        Ok(RationalFunction::new(self.den.clone(), self.num.clone())?.reduce())
    }

    pub fn pow(&self, e: i64) -> Result<RationalFunction, LaurentError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        Ok(RationalFunction::new(self.num.pow(e)?, self.den.pow(e)?)?.reduce())
    }

    pub fn render(&self, names: &[String]) -> String {
        let r = self.reduce();
        let n = r.num.render(names);
        if r.den.is_unit() && r.den.num_terms() == 1 && r.den == LaurentPoly::one(r.arity(), r.field().clone()) {
            return n;
        }
        let mut out = String::new();
        if r.num.num_terms() > 1 {
            out.push('(');
            out.push_str(&n);
            out.push(')');
        } else {
            out.push_str(&n);
        }
        out.push_str(" / ");
        let d = r.den.render(names);
        if r.den.num_terms() > 1 {
            out.push('(');
            out.push_str(&d);
            out.push(')');
        } else {
            out.push_str(&d);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldDescriptor;
    use crate::laurent::Monomial;
    use num_bigint::BigInt;

    fn xy() -> (LaurentPoly, LaurentPoly) {
        let fd = FieldDescriptor::rationals();
        (
            LaurentPoly::variable(2, fd.clone(), 0),
            LaurentPoly::variable(2, fd, 1),
        )
    }

    #[test]
    fn difference_of_squares() {
        let (x, y) = xy();
        let num = x.mul(&x).unwrap().sub(&y.mul(&y).unwrap()).unwrap();
        let den = x.sub(&y).unwrap();
        let r = RationalFunction::new(num.clone(), den.clone()).unwrap().reduce();
        assert_eq!(r.numerator(), &x.add(&y).unwrap());
        assert!(r.denominator().is_unit());
        // cross-multiplication check against the unreduced input
        let orig = RationalFunction::new(num, den).unwrap();
        assert!(r.value_eq(&orig).unwrap());
    }

    #[test]
    fn self_quotient() {
        let (x, _) = xy();
        let r = RationalFunction::new(x.clone(), x.clone()).unwrap().reduce();
        let one = LaurentPoly::one(2, FieldDescriptor::rationals());
        assert_eq!(r.numerator(), &one);
        assert_eq!(r.denominator(), &one);
    }

    #[test]
    fn zero_over_anything() {
        let (x, _) = xy();
        let zero = LaurentPoly::zero(2, FieldDescriptor::rationals());
        let r = RationalFunction::new(zero, x).unwrap().reduce();
        assert!(r.is_zero());
        assert!(r.denominator().is_unit());
    }

    #[test]
    fn e1e2_over_e3_char3_is_reduced() {
        // In char 3 on X₁,X₂,X₃: e₁e₂/e₃ has monomial denominator, so it
        // reduces to a Laurent polynomial.
        let fd = FieldDescriptor::prime_field(BigInt::from(3)).unwrap();
        let v = |i: usize| LaurentPoly::variable(3, fd.clone(), i);
        let e1 = v(0).add(&v(1)).unwrap().add(&v(2)).unwrap();
        let e2 = v(0).mul(&v(1)).unwrap()
            .add(&v(0).mul(&v(2)).unwrap()).unwrap()
            .add(&v(1).mul(&v(2)).unwrap()).unwrap();
        let e3 = v(0).mul(&v(1)).unwrap().mul(&v(2)).unwrap();
        let r = RationalFunction::new(e1.mul(&e2).unwrap(), e3).unwrap().reduce();
        assert!(r.denominator().is_unit());
        assert!(r.is_laurent());
        // e₂/e₁²: denominator e₁² is coprime to e₂, stays non-unit
        let r2 = RationalFunction::new(e2, e1.pow(2).unwrap()).unwrap().reduce();
        assert_eq!(r2.denominator().num_terms(), 6);
        assert!(!r2.is_laurent());
    }

    #[test]
    fn membership_examples() {
        let (x, y) = xy();
        let one = LaurentPoly::one(2, FieldDescriptor::rationals());
        // (x + y)/x ∈ S
        let r = RationalFunction::new(x.add(&y).unwrap(), x.clone()).unwrap();
        assert!(r.is_laurent());
        assert!(r.to_laurent().is_some());
        // 1/(x + 1) ∉ S
        let r = RationalFunction::new(one.clone(), x.add(&one).unwrap()).unwrap();
        assert!(!r.is_laurent());
        assert!(r.to_laurent().is_none());
    }

    #[test]
    fn reduce_idempotent_and_value_preserving() {
        let (x, y) = xy();
        let fd = FieldDescriptor::rationals();
        // (x²y − xy²)·m / (x − y) with a Laurent monomial m = x⁻³
        let m = LaurentPoly::monomial_term(2, fd.clone(), Monomial::new(alloc::vec![-3, 0]), fd.from_i64(2));
        let num = x.pow(2).unwrap().mul(&y).unwrap()
            .sub(&x.mul(&y.pow(2).unwrap()).unwrap()).unwrap()
            .mul(&m).unwrap();
        let den = x.sub(&y).unwrap();
        let r0 = RationalFunction::new(num, den).unwrap();
        let r1 = r0.reduce();
        let r2 = r1.reduce();
        assert_eq!(r1, r2);
        assert!(r0.value_eq(&r1).unwrap());
        // denominator normalization: honest, least coeff 1, no variable divides it
        assert!(r1.denominator().is_honest());
    }
}
