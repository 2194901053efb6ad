//! Exact field scalars: ℚ, prime fields 𝔽p, and a single quadratic
//! extension layer θ² = t over either base.
//!
//! A [`FieldDescriptor`] owns the arithmetic; [`Scalar`] values are inert
//! data whose variant must match the descriptor that produced them. Prime
//! field representatives are kept canonical in [0, p); rationals are kept
//! reduced by `BigRational`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
enum FieldKind {
    Rationals,
    PrimeField(BigInt),
    /// ℚ(θ), θ² = t
    QuadraticRat(BigRational),
    /// 𝔽p(θ), θ² = t
    QuadraticPrime(BigInt, BigInt),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldDescriptor {
    kind: FieldKind,
}

/// Field element; the variant matches the descriptor's kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    RatExt(BigRational, BigRational),
    Mod(BigInt),
    ModExt(BigInt, BigInt),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldDescriptorError {
    NotPrime(BigInt),
    /// The extension parameter has a square root in the base field.
    SquareParameter(String),
    ZeroParameter,
    /// The field has no quadratic generator θ.
    NoExtension,
}

impl fmt::Display for FieldDescriptorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptorError::NotPrime(p) => write!(f, "{} is not prime", p),
            FieldDescriptorError::SquareParameter(t) => {
                write!(f, "extension parameter {} is a square in the base field", t)
            }
            FieldDescriptorError::ZeroParameter => write!(f, "extension parameter must be nonzero"),
            FieldDescriptorError::NoExtension => write!(f, "field has no quadratic generator"),
        }
    }
}

fn is_prime(p: &BigInt) -> bool {
    let two = BigInt::from(2);
    if p < &two {
        return false;
    }
    if p == &two || p == &BigInt::from(3) {
        return true;
    }
    if p.mod_floor(&two).is_zero() || p.mod_floor(&BigInt::from(3)).is_zero() {
        return false;
    }
    let root = p.sqrt();
    let mut d = BigInt::from(5);
    while d <= root {
        if p.mod_floor(&d).is_zero() || p.mod_floor(&(&d + 2)).is_zero() {
            return false;
        }
        d += 6;
    }
    true
}

fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

fn rational_is_square(t: &BigRational) -> bool {
    !t.is_negative() && is_perfect_square(t.numer()) && is_perfect_square(t.denom())
}

/// Euler criterion; `p` odd prime, `t` in [0, p).
fn mod_is_square(t: &BigInt, p: &BigInt) -> bool {
    if t.is_zero() {
        return true;
    }
    let e = (p - 1) / BigInt::from(2);
    t.modpow(&e, p).is_one()
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        FieldDescriptor { kind: FieldKind::Rationals }
    }

    pub fn prime_field(p: BigInt) -> Result<Self, FieldDescriptorError> {
        if !is_prime(&p) {
            return Err(FieldDescriptorError::NotPrime(p));
        }
        Ok(FieldDescriptor { kind: FieldKind::PrimeField(p) })
    }

    /// ℚ(θ) with θ² = t; t must be a nonsquare rational.
    pub fn quadratic_over_rationals(t: BigRational) -> Result<Self, FieldDescriptorError> {
        if t.is_zero() {
            return Err(FieldDescriptorError::ZeroParameter);
        }
        if rational_is_square(&t) {
            return Err(FieldDescriptorError::SquareParameter(format_rational(&t)));
        }
        Ok(FieldDescriptor { kind: FieldKind::QuadraticRat(t) })
    }

    /// 𝔽p(θ) with θ² = t; t must be a nonsquare mod p (impossible for p = 2).
    pub fn quadratic_over_prime_field(p: BigInt, t: BigInt) -> Result<Self, FieldDescriptorError> {
        if !is_prime(&p) {
            return Err(FieldDescriptorError::NotPrime(p));
        }
        let t = t.mod_floor(&p);
        if t.is_zero() {
            return Err(FieldDescriptorError::ZeroParameter);
        }
        if mod_is_square(&t, &p) {
            let mut s = String::new();
            let _ = core::fmt::write(&mut s, format_args!("{}", t));
            return Err(FieldDescriptorError::SquareParameter(s));
        }
        Ok(FieldDescriptor { kind: FieldKind::QuadraticPrime(p, t) })
    }

    pub fn characteristic(&self) -> BigInt {
        match &self.kind {
            FieldKind::Rationals | FieldKind::QuadraticRat(_) => BigInt::zero(),
            FieldKind::PrimeField(p) | FieldKind::QuadraticPrime(p, _) => p.clone(),
        }
    }

    pub fn has_extension(&self) -> bool {
        matches!(
            self.kind,
            FieldKind::QuadraticRat(_) | FieldKind::QuadraticPrime(_, _)
        )
    }

    fn char_zero(&self) -> bool {
        matches!(self.kind, FieldKind::Rationals | FieldKind::QuadraticRat(_))
    }

    fn modulus(&self) -> &BigInt {
        match &self.kind {
            FieldKind::PrimeField(p) | FieldKind::QuadraticPrime(p, _) => p,
            _ => unreachable!("modulus only exists in positive characteristic"),
        }
    }

    fn t_rat(&self) -> BigRational {
        match &self.kind {
            FieldKind::QuadraticRat(t) => t.clone(),
            _ => BigRational::zero(),
        }
    }

    fn t_mod(&self) -> BigInt {
        match &self.kind {
            FieldKind::QuadraticPrime(_, t) => t.clone(),
            _ => BigInt::zero(),
        }
    }

    fn rat_parts(&self, x: &Scalar) -> (BigRational, BigRational) {
        match x {
            Scalar::Rat(a) => (a.clone(), BigRational::zero()),
            Scalar::RatExt(a, b) => (a.clone(), b.clone()),
            _ => panic!("scalar does not belong to a characteristic-zero field"),
        }
    }

    fn mod_parts(&self, x: &Scalar) -> (BigInt, BigInt) {
        match x {
            Scalar::Mod(a) => (a.clone(), BigInt::zero()),
            Scalar::ModExt(a, b) => (a.clone(), b.clone()),
            _ => panic!("scalar does not belong to a prime field"),
        }
    }

    fn wrap_rat(&self, a: BigRational, b: BigRational) -> Scalar {
        if self.has_extension() {
            Scalar::RatExt(a, b)
        } else {
            debug_assert!(b.is_zero());
            Scalar::Rat(a)
        }
    }

    fn wrap_mod(&self, a: BigInt, b: BigInt) -> Scalar {
        let p = self.modulus();
        let a = a.mod_floor(p);
        let b = b.mod_floor(p);
        if self.has_extension() {
            Scalar::ModExt(a, b)
        } else {
            debug_assert!(b.is_zero());
            Scalar::Mod(a)
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_int(BigInt::from(n))
    }

    pub fn from_int(&self, n: BigInt) -> Scalar {
        if self.char_zero() {
            self.wrap_rat(BigRational::from_integer(n), BigRational::zero())
        } else {
            self.wrap_mod(n, BigInt::zero())
        }
    }

    /// num/den as a field element; in characteristic p the denominator is
    /// inverted mod p. Panics when den ≡ 0.
    pub fn from_fraction(&self, num: BigInt, den: BigInt) -> Scalar {
        assert!(!den.is_zero(), "zero denominator");
        let n = self.from_int(num);
        let d = self.from_int(den);
        self.div(&n, &d)
    }

    /// The extension generator θ.
    pub fn theta(&self) -> Result<Scalar, FieldDescriptorError> {
        if !self.has_extension() {
            return Err(FieldDescriptorError::NoExtension);
        }
        Ok(if self.char_zero() {
            Scalar::RatExt(BigRational::zero(), BigRational::one())
        } else {
            self.wrap_mod(BigInt::zero(), BigInt::one())
        })
    }

    pub fn is_zero(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Rat(a) => a.is_zero(),
            Scalar::RatExt(a, b) => a.is_zero() && b.is_zero(),
            Scalar::Mod(a) => a.is_zero(),
            Scalar::ModExt(a, b) => a.is_zero() && b.is_zero(),
        }
    }

    pub fn is_one(&self, x: &Scalar) -> bool {
        *x == self.one()
    }

    /// Whether the scalar lies in the base field (no θ component).
    pub fn in_base_field(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Rat(_) | Scalar::Mod(_) => true,
            Scalar::RatExt(_, b) => b.is_zero(),
            Scalar::ModExt(_, b) => b.is_zero(),
        }
    }

    pub fn add(&self, x: &Scalar, y: &Scalar) -> Scalar {
        if self.char_zero() {
            let (a1, b1) = self.rat_parts(x);
            let (a2, b2) = self.rat_parts(y);
            self.wrap_rat(a1 + a2, b1 + b2)
        } else {
            let (a1, b1) = self.mod_parts(x);
            let (a2, b2) = self.mod_parts(y);
            self.wrap_mod(a1 + a2, b1 + b2)
        }
    }

    pub fn sub(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.add(x, &self.neg(y))
    }

    pub fn neg(&self, x: &Scalar) -> Scalar {
        if self.char_zero() {
            let (a, b) = self.rat_parts(x);
            self.wrap_rat(-a, -b)
        } else {
            let (a, b) = self.mod_parts(x);
            self.wrap_mod(-a, -b)
        }
    }

    pub fn mul(&self, x: &Scalar, y: &Scalar) -> Scalar {
        if self.char_zero() {
            let (a1, b1) = self.rat_parts(x);
            let (a2, b2) = self.rat_parts(y);
            let t = self.t_rat();
            self.wrap_rat(&a1 * &a2 + t * &b1 * &b2, a1 * b2 + a2 * b1)
        } else {
            let (a1, b1) = self.mod_parts(x);
            let (a2, b2) = self.mod_parts(y);
            let t = self.t_mod();
            self.wrap_mod(&a1 * &a2 + t * &b1 * &b2, a1 * b2 + a2 * b1)
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, x: &Scalar) -> Scalar {
        assert!(!self.is_zero(x), "division by zero in field");
        if self.char_zero() {
            let (a, b) = self.rat_parts(x);
            // (a + bθ)⁻¹ = (a − bθ)/(a² − t·b²); the norm is nonzero
            // because t is a nonsquare.
            let norm = &a * &a - self.t_rat() * &b * &b;
            self.wrap_rat(&a / &norm, -b / norm)
        } else {
            let p = self.modulus().clone();
            let (a, b) = self.mod_parts(x);
            let norm = (&a * &a - self.t_mod() * &b * &b).mod_floor(&p);
            let ninv = mod_inverse(&norm, &p);
            self.wrap_mod(&a * &ninv, -b * ninv)
        }
    }

    pub fn div(&self, x: &Scalar, y: &Scalar) -> Scalar {
        self.mul(x, &self.inv(y))
    }

    pub fn pow(&self, x: &Scalar, e: i64) -> Scalar {
        let (base, mut e) = if e < 0 {
            (self.inv(x), e.unsigned_abs())
        } else {
            (x.clone(), e as u64)
        };
        let mut acc = self.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    /// Sum of each element of `v` times the matching element of `w`.
    pub fn dot(&self, v: &[Scalar], w: &[Scalar]) -> Scalar {
        v.iter()
            .zip(w)
            .fold(self.zero(), |acc, (a, b)| self.add(&acc, &self.mul(a, b)))
    }

    /// Render a scalar using `theta` for the extension generator.
    pub fn render_scalar(&self, x: &Scalar) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        match x {
            Scalar::Rat(a) => {
                let _ = write!(s, "{}", format_rational(a));
            }
            Scalar::Mod(a) => {
                let _ = write!(s, "{}", a);
            }
            Scalar::RatExt(a, b) => {
                render_ext(&mut s, &format_rational(a), a.is_zero(), &format_rational(b), b.is_zero());
            }
            Scalar::ModExt(a, b) => {
                let mut sa = String::new();
                let _ = write!(sa, "{}", a);
                let mut sb = String::new();
                let _ = write!(sb, "{}", b);
                render_ext(&mut s, &sa, a.is_zero(), &sb, b.is_zero());
            }
        }
        s
    }
}

fn render_ext(out: &mut String, a: &str, a_zero: bool, b: &str, b_zero: bool) {
    if b_zero {
        out.push_str(a);
        return;
    }
    if !a_zero {
        out.push_str(a);
        out.push_str(" + ");
    }
    if b == "1" {
        out.push_str("theta");
    } else {
        out.push_str(b);
        out.push_str("*theta");
    }
}

fn format_rational(r: &BigRational) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    if r.denom().is_one() {
        let _ = write!(s, "{}", r.numer());
    } else {
        let _ = write!(s, "{}/{}", r.numer(), r.denom());
    }
    s
}

/// Inverse of `a` mod prime `p` by extended Euclid. Panics when gcd ≠ 1.
fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let e = a.extended_gcd(p);
    assert!(e.gcd.is_one(), "element not invertible mod p");
    e.x.mod_floor(p)
}

/// Row-reduce a matrix over the field and return the reduced rows plus the
/// pivot column of each row; rows are Vec<Scalar> of equal length.
pub(crate) fn row_reduce(fd: &FieldDescriptor, mut rows: Vec<Vec<Scalar>>) -> Vec<(Vec<Scalar>, usize)> {
    let width = rows.first().map_or(0, Vec::len);
    let mut reduced: Vec<(Vec<Scalar>, usize)> = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..width {
        let Some(sel) = (pivot_row..rows.len()).find(|&r| !fd.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(pivot_row, sel);
        let inv = fd.inv(&rows[pivot_row][col].clone());
        for x in rows[pivot_row].iter_mut() {
            *x = fd.mul(x, &inv);
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || fd.is_zero(&row[col]) {
                continue;
            }
            let c = row[col].clone();
            for (x, pv) in row.iter_mut().zip(&pivot) {
                *x = fd.sub(x, &fd.mul(&c, pv));
            }
        }
        reduced.push((rows[pivot_row].clone(), col));
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    reduced
}

/// Basis of the nullspace of the matrix whose rows are given; each basis
/// vector has length `width`. Deterministic: free columns in ascending
/// order, pivot entries solved from the reduced rows.
pub(crate) fn nullspace(fd: &FieldDescriptor, rows: Vec<Vec<Scalar>>, width: usize) -> Vec<Vec<Scalar>> {
    let reduced = row_reduce(fd, rows);
    let pivots: Vec<usize> = reduced.iter().map(|(_, c)| *c).collect();
    let mut basis = Vec::new();
    for free in 0..width {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = alloc::vec![fd.zero(); width];
        v[free] = fd.one();
        for (row, pc) in &reduced {
            // pivot entry = -(coefficient of the free column)
            v[*pc] = fd.neg(&row[free]);
        }
        basis.push(v);
    }
    basis
}
