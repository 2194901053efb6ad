//! Exact division and multivariate GCD.
//!
//! GCD runs on honest polynomials by primitive-part/content recursion, one
//! variable at a time, with a primitive pseudo-remainder sequence at each
//! level. Laurent inputs are reduced to honest polynomials by factoring
//! out monomial units first.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arith::Scalar;

use super::monomial::Monomial;
use super::poly::LaurentPoly;

/// Exact quotient f/g in the Laurent ring, or `None` when g does not
/// divide f. Panics on g = 0.
pub fn exact_div(f: &LaurentPoly, g: &LaurentPoly) -> Option<LaurentPoly> {
    assert!(!g.is_zero(), "division by zero polynomial");
    f.compat(g).ok()?;
    if f.is_zero() {
        return Some(f.clone());
    }
    let (fs, fh) = f.split_monomial();
    let (gs, gh) = g.split_monomial();
    let q = exact_div_honest(&fh, &gh)?;
    Some(q.mul_monomial(&fs.div(&gs)))
}

/// Exact quotient of honest polynomials by graded-lex leading-term peeling.
pub(crate) fn exact_div_honest(f: &LaurentPoly, g: &LaurentPoly) -> Option<LaurentPoly> {
    debug_assert!(f.is_honest() && g.is_honest());
    let fd = f.field().clone();
    let mut q = LaurentPoly::zero(f.arity(), fd.clone());
    let mut r = f.clone();
    let (gm, gc) = g.leading().map(|(m, c)| (m.clone(), c.clone()))?;
    while !r.is_zero() {
        let (rm, rc) = r.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        if !gm.divides(&rm) {
            return None;
        }
        let t = LaurentPoly::monomial_term(f.arity(), fd.clone(), rm.div(&gm), fd.div(&rc, &gc));
        q = q.add(&t).ok()?;
        r = r.sub(&t.mul(g).ok()?).ok()?;
    }
    Some(q)
}

/// True when g divides f in the Laurent ring.
pub fn divides(g: &LaurentPoly, f: &LaurentPoly) -> bool {
    exact_div(f, g).is_some()
}

/// GCD of the honest parts of f and g, normalized so the graded-lex
/// leading coefficient is 1. Monomials are units of the Laurent ring, so
/// this is a GCD of f and g up to units; gcd(0, 0) = 0.
pub fn gcd(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    let (_, fh) = f.split_monomial();
    let (_, gh) = g.split_monomial();
    gcd_honest(&fh, &gh)
}

fn monic(f: &LaurentPoly) -> LaurentPoly {
    match f.leading() {
        None => f.clone(),
        Some((_, c)) => f.scalar_mul(&f.field().inv(c)),
    }
}

/// Highest variable index occurring in f or g, if any.
fn active_variable(f: &LaurentPoly, g: &LaurentPoly) -> Option<usize> {
    (0..f.arity())
        .rev()
        .find(|&v| occurs(f, v) || occurs(g, v))
}

fn occurs(f: &LaurentPoly, v: usize) -> bool {
    f.terms().any(|(m, _)| m.exponents()[v] != 0)
}

/// View an honest polynomial as univariate in variable v: degree ↦
/// coefficient polynomial (with v-exponent zero).
fn univariate_view(f: &LaurentPoly, v: usize) -> BTreeMap<i64, LaurentPoly> {
    let mut out: BTreeMap<i64, Vec<(Monomial, Scalar)>> = BTreeMap::new();
    for (m, c) in f.terms() {
        let e = m.exponents()[v];
        let mut stripped = m.exponents().to_vec();
        stripped[v] = 0;
        out.entry(e)
            .or_default()
            .push((Monomial::new(stripped), c.clone()));
    }
    out.into_iter()
        .map(|(e, ts)| (e, LaurentPoly::from_terms(f.arity(), f.field().clone(), ts)))
        .collect()
}

fn deg_in(f: &LaurentPoly, v: usize) -> i64 {
    f.terms().map(|(m, _)| m.exponents()[v]).max().unwrap_or(-1)
}

/// Coefficient of the highest power of v.
fn lead_coeff_in(f: &LaurentPoly, v: usize) -> LaurentPoly {
    let d = deg_in(f, v);
    let ts: Vec<(Monomial, Scalar)> = f
        .terms()
        .filter(|(m, _)| m.exponents()[v] == d)
        .map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            e[v] = 0;
            (Monomial::new(e), c.clone())
        })
        .collect();
    LaurentPoly::from_terms(f.arity(), f.field().clone(), ts)
}

fn shift_in(f: &LaurentPoly, v: usize, k: i64) -> LaurentPoly {
    let mut e = alloc::vec![0i64; f.arity()];
    e[v] = k;
    f.mul_monomial(&Monomial::new(e))
}

/// Content of f with respect to v: GCD of its univariate coefficients.
fn content_in(f: &LaurentPoly, v: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(f.arity(), f.field().clone());
    for coeff in univariate_view(f, v).values() {
        acc = gcd_honest(&acc, coeff);
    }
    acc
}

/// Pseudo-remainder of a by b in variable v; deg_v(b) ≥ 0.
fn prem(a: &LaurentPoly, b: &LaurentPoly, v: usize) -> LaurentPoly {
    let db = deg_in(b, v);
    let lb = lead_coeff_in(b, v);
    let mut r = a.clone();
    while !r.is_zero() && deg_in(&r, v) >= db {
        let lr = lead_coeff_in(&r, v);
        let k = deg_in(&r, v) - db;
        // r ← lb·r − lr·v^k·b kills the leading v-term
        let left = r.mul(&lb).unwrap();
        let right = shift_in(b, v, k).mul(&lr).unwrap();
        r = left.sub(&right).unwrap();
    }
    r
}

fn gcd_honest(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    if f.is_zero() {
        return monic(g);
    }
    if g.is_zero() {
        return monic(f);
    }
    let Some(v) = active_variable(f, g) else {
        // both nonzero constants
        return LaurentPoly::one(f.arity(), f.field().clone());
    };

    let cf = content_in(f, v);
    let cg = content_in(g, v);
    let content_gcd = gcd_honest(&cf, &cg);
    let mut a = exact_div_honest(f, &cf).expect("content divides");
    let mut b = exact_div_honest(g, &cg).expect("content divides");
    if deg_in(&a, v) < deg_in(&b, v) {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = prem(&a, &b, v);
        a = b;
        b = if r.is_zero() {
            r
        } else {
            let c = content_in(&r, v);
            exact_div_honest(&r, &c).expect("content divides")
        };
    }
    monic(&content_gcd.mul(&a).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldDescriptor;

    fn xy() -> (LaurentPoly, LaurentPoly) {
        let fd = FieldDescriptor::rationals();
        (
            LaurentPoly::variable(2, fd.clone(), 0),
            LaurentPoly::variable(2, fd, 1),
        )
    }

    #[test]
    fn exact_division() {
        let (x, y) = xy();
        // (x² − y²)/(x − y) = x + y
        let num = x.mul(&x).unwrap().sub(&y.mul(&y).unwrap()).unwrap();
        let den = x.sub(&y).unwrap();
        let q = exact_div(&num, &den).unwrap();
        assert_eq!(q, x.add(&y).unwrap());
        // x + 1 ∤ x + y (x alone would divide: monomials are Laurent units)
        let one = LaurentPoly::one(2, FieldDescriptor::rationals());
        assert!(exact_div(&x.add(&y).unwrap(), &x.add(&one).unwrap()).is_none());
        // Laurent: y/x divides 1
        let frac = y.mul(&x.pow(-1).unwrap()).unwrap();
        let one = LaurentPoly::one(2, FieldDescriptor::rationals());
        let q = exact_div(&one, &frac).unwrap();
        assert_eq!(q.mul(&frac).unwrap(), one);
    }

    #[test]
    fn gcd_shares_factor() {
        let (x, y) = xy();
        let xpy = x.add(&y).unwrap();
        let f = xpy.mul(&x).unwrap(); // x(x+y)
        let g = xpy.mul(&y).unwrap().mul(&xpy).unwrap(); // y(x+y)²
        let d = gcd(&f, &g);
        assert_eq!(d, xpy);
    }

    #[test]
    fn gcd_coprime() {
        let (x, y) = xy();
        let one = LaurentPoly::one(2, FieldDescriptor::rationals());
        assert_eq!(gcd(&x.add(&y).unwrap(), &x), one);
        // gcd captures content across variables: gcd(x²y, xy²) has honest
        // part xy (up to the monomial units the Laurent ring ignores)
        let f = x.pow(2).unwrap().mul(&y).unwrap();
        let g = x.mul(&y.pow(2).unwrap()).unwrap();
        let d = gcd(&f, &g);
        assert_eq!(d, one, "monomials are units, honest parts are 1");
    }

    #[test]
    fn gcd_multivariate_content() {
        let (x, y) = xy();
        // f = (x+y)·(x²+1), g = (x+y)·y
        let x2p1 = x.mul(&x).unwrap().add(&LaurentPoly::one(2, FieldDescriptor::rationals())).unwrap();
        let xpy = x.add(&y).unwrap();
        let f = xpy.mul(&x2p1).unwrap();
        let g = xpy.mul(&y).unwrap();
        assert_eq!(gcd(&f, &g), xpy);
    }
}
