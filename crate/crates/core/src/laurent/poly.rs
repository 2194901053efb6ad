//! The Laurent polynomial type and its ring arithmetic.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{FieldDescriptor, Scalar};

use super::monomial::Monomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LaurentError {
    ArityMismatch { left: usize, right: usize },
    FieldMismatch,
    ZeroDenominator,
    /// Negative power of a non-unit, or substitution of a negative exponent
    /// by a non-invertible image.
    NotAUnit,
}

impl fmt::Display for LaurentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LaurentError::ArityMismatch { left, right } => {
                write!(f, "arity mismatch: {} vs {}", left, right)
            }
            LaurentError::FieldMismatch => write!(f, "coefficient fields differ"),
            LaurentError::ZeroDenominator => write!(f, "zero denominator"),
            LaurentError::NotAUnit => write!(f, "element is not a unit"),
        }
    }
}

/// Exact multivariate Laurent polynomial. No zero coefficients are stored;
/// the term map is ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Scalar>,
    arity: usize,
    field: FieldDescriptor,
}

impl LaurentPoly {
    pub fn zero(arity: usize, field: FieldDescriptor) -> Self {
        LaurentPoly { terms: BTreeMap::new(), arity, field }
    }

    pub fn one(arity: usize, field: FieldDescriptor) -> Self {
        Self::constant(arity, field, 1)
    }

    pub fn constant(arity: usize, field: FieldDescriptor, c: i64) -> Self {
        let s = field.from_i64(c);
        Self::from_scalar(arity, field, s)
    }

    pub fn from_scalar(arity: usize, field: FieldDescriptor, c: Scalar) -> Self {
        let mut p = Self::zero(arity, field);
        p.insert_term(Monomial::unit(arity), c);
        p
    }

    /// The i-th variable as a polynomial.
    pub fn variable(arity: usize, field: FieldDescriptor, i: usize) -> Self {
        let mut p = Self::zero(arity, field.clone());
        p.insert_term(Monomial::variable(arity, i), field.from_i64(1));
        p
    }

    pub fn monomial_term(arity: usize, field: FieldDescriptor, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.arity(), arity);
        let mut p = Self::zero(arity, field);
        p.insert_term(m, c);
        p
    }

    pub fn from_terms(
        arity: usize,
        field: FieldDescriptor,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut p = Self::zero(arity, field);
        for (m, c) in terms {
            assert_eq!(m.arity(), arity);
            p.insert_term(m, c);
        }
        p
    }

    fn insert_term(&mut self, m: Monomial, c: Scalar) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(prev) => {
                let s = self.field.add(&prev, &c);
                if !self.field.is_zero(&s) {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// A Laurent-ring unit is exactly a single term with a nonzero
    /// coefficient (units of a ℤⁿ-graded domain are homogeneous).
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    /// Graded-lex greatest term.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Graded-lex least term.
    pub fn trailing(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next()
    }

    pub fn compat(&self, other: &LaurentPoly) -> Result<(), LaurentError> {
        if self.arity != other.arity {
            return Err(LaurentError::ArityMismatch { left: self.arity, right: other.arity });
        }
        if self.field != other.field {
            return Err(LaurentError::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.compat(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.insert_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        let mut out = Self::zero(self.arity, self.field.clone());
        for (m, c) in self.terms.iter() {
            out.terms.insert(m.clone(), self.field.neg(c));
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.compat(other)?;
        let mut out = Self::zero(self.arity, self.field.clone());
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in other.terms.iter() {
                out.insert_term(m1.mul(m2), self.field.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &Scalar) -> LaurentPoly {
        let mut out = Self::zero(self.arity, self.field.clone());
        for (m, a) in self.terms.iter() {
            out.insert_term(m.clone(), self.field.mul(a, c));
        }
        out
    }

    /// Multiply by the monomial x^shift.
    pub fn mul_monomial(&self, shift: &Monomial) -> LaurentPoly {
        let mut out = Self::zero(self.arity, self.field.clone());
        for (m, c) in self.terms.iter() {
            out.terms.insert(m.mul(shift), c.clone());
        }
        out
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, e: i64) -> Result<LaurentPoly, LaurentError> {
        if e < 0 {
            let inv = self.unit_inverse()?;
            return inv.pow(-e);
        }
        let mut acc = Self::one(self.arity, self.field.clone());
        let mut sq = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Inverse of a unit (single term).
    pub fn unit_inverse(&self) -> Result<LaurentPoly, LaurentError> {
        let (m, c) = self.leading().ok_or(LaurentError::NotAUnit)?;
        if !self.is_unit() {
            return Err(LaurentError::NotAUnit);
        }
        Ok(Self::monomial_term(
            self.arity,
            self.field.clone(),
            m.inverse(),
            self.field.inv(c),
        ))
    }

    /// Write self = x^shift · p with p an honest polynomial whose minimum
    /// exponent in every variable is zero. The zero polynomial splits as
    /// (1, 0).
    pub fn split_monomial(&self) -> (Monomial, LaurentPoly) {
        if self.is_zero() {
            return (Monomial::unit(self.arity), self.clone());
        }
        let mut mins = alloc::vec![i64::MAX; self.arity];
        for m in self.terms.keys() {
            for (lo, &e) in mins.iter_mut().zip(m.exponents()) {
                *lo = (*lo).min(e);
            }
        }
        let shift = Monomial::new(mins);
        let inv = shift.inverse();
        (shift, self.mul_monomial(&inv))
    }

    /// True when no variable occurs with a negative exponent.
    pub fn is_honest(&self) -> bool {
        self.terms.keys().all(|m| m.exponents().iter().all(|&e| e >= 0))
    }

    /// Ring homomorphism sending variable i to `images[i]`. Negative
    /// exponents require the image to be a unit.
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<LaurentPoly, LaurentError> {
        assert_eq!(images.len(), self.arity, "one image per variable");
        let target_arity = images.first().map_or(0, LaurentPoly::arity);
        let mut out = Self::zero(target_arity, self.field.clone());
        for (m, c) in self.terms.iter() {
            let mut term = Self::from_scalar(target_arity, self.field.clone(), c.clone());
            for (img, &e) in images.iter().zip(m.exponents()) {
                if e == 0 {
                    continue;
                }
                term = term.mul(&img.pow(e)?)?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Evaluate at scalar arguments.
    pub fn eval(&self, args: &[Scalar]) -> Result<Scalar, LaurentError> {
        assert_eq!(args.len(), self.arity);
        let fd = &self.field;
        let mut acc = fd.zero();
        for (m, c) in self.terms.iter() {
            let mut t = c.clone();
            for (a, &e) in args.iter().zip(m.exponents()) {
                if e == 0 {
                    continue;
                }
                if e < 0 && fd.is_zero(a) {
                    return Err(LaurentError::NotAUnit);
                }
                t = fd.mul(&t, &fd.pow(a, e));
            }
            acc = fd.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Render with the given variable names, leading term first.
    pub fn render(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.arity);
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let cs = self.field.render_scalar(c);
            let mono = render_monomial(m, names);
            let piece = if mono.is_empty() {
                maybe_paren(&cs)
            } else if cs == "1" {
                mono
            } else if cs == "-1" {
                let mut s = String::from("-");
                s.push_str(&mono);
                s
            } else {
                let mut s = maybe_paren(&cs);
                s.push('*');
                s.push_str(&mono);
                s
            };
            if out.is_empty() {
                out.push_str(&piece);
            } else if let Some(stripped) = piece.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(&piece);
            }
        }
        out
    }
}

fn maybe_paren(s: &str) -> String {
    if s.contains(' ') {
        let mut out = String::from("(");
        out.push_str(s);
        out.push(')');
        out
    } else {
        String::from(s)
    }
}

fn render_monomial(m: &Monomial, names: &[String]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (name, &e) in names.iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(name);
        if e != 1 {
            let _ = write!(out, "^{}", e);
        }
    }
    out
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.arity)
            .map(|i| {
                let mut s = String::from("x");
                let _ = fmt::write(&mut s, format_args!("{}", i));
                s
            })
            .collect();
        write!(f, "{}", self.render(&names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ring2() -> (usize, FieldDescriptor) {
        (2, FieldDescriptor::rationals())
    }

    fn var(i: usize) -> LaurentPoly {
        let (n, fd) = ring2();
        LaurentPoly::variable(n, fd, i)
    }

    #[test]
    fn add_cancels() {
        // (A + B) + (−A) = B
        let a = var(0);
        let b = var(1);
        let s = a.add(&b).unwrap().add(&a.neg()).unwrap();
        assert_eq!(s, b);
    }

    #[test]
    fn unit_times_inverse() {
        let a = var(0);
        let one = LaurentPoly::one(2, FieldDescriptor::rationals());
        assert_eq!(a.mul(&a.pow(-1).unwrap()).unwrap(), one);
    }

    #[test]
    fn frobenius_char_3() {
        // (X₁+X₂+X₃)³ = X₁³+X₂³+X₃³ in characteristic 3
        let fd = FieldDescriptor::prime_field(BigInt::from(3)).unwrap();
        let e1 = LaurentPoly::variable(3, fd.clone(), 0)
            .add(&LaurentPoly::variable(3, fd.clone(), 1))
            .unwrap()
            .add(&LaurentPoly::variable(3, fd.clone(), 2))
            .unwrap();
        let cube = e1.pow(3).unwrap();
        let expect = LaurentPoly::from_terms(
            3,
            fd.clone(),
            [
                (Monomial::new(alloc::vec![3, 0, 0]), fd.from_i64(1)),
                (Monomial::new(alloc::vec![0, 3, 0]), fd.from_i64(1)),
                (Monomial::new(alloc::vec![0, 0, 3]), fd.from_i64(1)),
            ],
        );
        assert_eq!(cube, expect);
    }

    #[test]
    fn unit_detection() {
        let (n, fd) = ring2();
        // 3·A²B⁻¹
        let u = LaurentPoly::monomial_term(n, fd.clone(), Monomial::new(alloc::vec![2, -1]), fd.from_i64(3));
        assert!(u.is_unit());
        let a = var(0);
        let b = var(1);
        assert!(!a.add(&b).unwrap().is_unit());
        assert!(!LaurentPoly::zero(n, fd).is_unit());
    }

    #[test]
    fn unit_multiplicative_on_monomials() {
        let (n, fd) = ring2();
        let mk = |e: [i64; 2], c: i64| {
            LaurentPoly::monomial_term(n, fd.clone(), Monomial::new(e.to_vec()), fd.from_i64(c))
        };
        let cases = [mk([1, -2], 3), mk([0, 0], -1), mk([-4, 5], 7)];
        for f in &cases {
            for g in &cases {
                let prod = f.mul(g).unwrap();
                assert_eq!(prod.is_unit(), f.is_unit() && g.is_unit());
            }
        }
    }

    #[test]
    fn split_monomial_roundtrip() {
        let (n, fd) = ring2();
        // A⁻¹B + A²
        let f = LaurentPoly::from_terms(
            n,
            fd.clone(),
            [
                (Monomial::new(alloc::vec![-1, 1]), fd.from_i64(1)),
                (Monomial::new(alloc::vec![2, 0]), fd.from_i64(1)),
            ],
        );
        let (shift, honest) = f.split_monomial();
        assert_eq!(shift.exponents(), &[-1, 0]);
        assert!(honest.is_honest());
        assert_eq!(honest.mul_monomial(&shift), f);
    }

    #[test]
    fn substitute_doubles_variables() {
        let (n, fd) = ring2();
        // f(A,B) = A·B ↦ (x0·x1)·x2 under A ↦ x0·x1, B ↦ x2 in 3 variables
        let f = var(0).mul(&var(1)).unwrap();
        let x0x1 = LaurentPoly::monomial_term(
            3,
            fd.clone(),
            Monomial::new(alloc::vec![1, 1, 0]),
            fd.from_i64(1),
        );
        let x2 = LaurentPoly::variable(3, fd.clone(), 2);
        let g = f.substitute(&[x0x1, x2]).unwrap();
        let _ = n;
        assert_eq!(
            g,
            LaurentPoly::monomial_term(3, fd.clone(), Monomial::new(alloc::vec![1, 1, 1]), fd.from_i64(1))
        );
    }

    #[test]
    fn render_terms() {
        let (n, fd) = ring2();
        let names = alloc::vec![String::from("A"), String::from("B")];
        let f = LaurentPoly::from_terms(
            n,
            fd.clone(),
            [
                (Monomial::new(alloc::vec![2, -1]), fd.from_i64(3)),
                (Monomial::new(alloc::vec![0, 0]), fd.from_i64(1)),
            ],
        );
        assert_eq!(f.render(&names), "3*A^2*B^-1 + 1");
        let g = LaurentPoly::from_terms(
            n,
            fd.clone(),
            [
                (Monomial::new(alloc::vec![1, 0]), fd.from_i64(1)),
                (Monomial::new(alloc::vec![0, 1]), fd.from_i64(-2)),
            ],
        );
        assert_eq!(g.render(&names), "A - 2*B");
    }
}
