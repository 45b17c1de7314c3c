//! Exact arithmetic in `Q(i, √D)`.
//!
//! A [`QuadScalar`] is `a + b·√D + c·i + d·i·√D` with rational components
//! and a square-free radicand `D`. Values with `b = d = 0` are always
//! stored with `D = 0`, so two scalars are equal exactly when their
//! components and radicands are equal.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Rational = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
    radicand: u64,
}

/// Writes `m = k²·D` with `D` square-free.
pub fn square_free_decompose(mut m: u64) -> (u64, u64) {
    if m == 0 {
        return (0, 0);
    }
    let mut k = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        let mut e = 0u32;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        k *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (k, free * m)
}

pub fn is_square_free(m: u64) -> bool {
    m != 0 && square_free_decompose(m).0 == 1
}

/// Square root of a non-negative integer as an exact scalar.
pub fn sqrt_integer(m: u64) -> QuadScalar {
    let (k, free) = square_free_decompose(m);
    let k = Rational::from_integer(BigInt::from(k));
    if free <= 1 {
        QuadScalar::from_rational(k)
    } else {
        QuadScalar::from_parts(Rational::zero(), k, Rational::zero(), Rational::zero(), free)
    }
}

/// Square root of a big integer; the square-free part must fit in `u64`.
pub fn sqrt_bigint(m: &BigInt) -> Result<QuadScalar> {
    if m.is_negative() {
        return Err(Error::NegativeRadicand(m.to_string()));
    }
    let root = m.sqrt();
    if &root * &root == *m {
        return Ok(QuadScalar::from_bigint(root));
    }
    let small = m
        .to_u64()
        .ok_or_else(|| Error::OutOfDomain(format!("radicand {m} does not fit in 64 bits")))?;
    Ok(sqrt_integer(small))
}

pub fn common_radicand(x: u64, y: u64) -> Result<u64> {
    match (x, y) {
        (0, r) | (r, 0) => Ok(r),
        (l, r) if l == r => Ok(l),
        (l, r) => Err(Error::RadicandMismatch { left: l, right: r }),
    }
}

/// Radicand shared by every scalar of the iterator.
pub fn shared_radicand<'a>(values: impl IntoIterator<Item = &'a QuadScalar>) -> Result<u64> {
    values
        .into_iter()
        .try_fold(0u64, |acc, v| common_radicand(acc, v.radicand))
}

// (p + q√D)(u + v√D)
fn surd_mul(p: &Rational, q: &Rational, u: &Rational, v: &Rational, radicand: u64) -> (Rational, Rational) {
    let dd = Rational::from_integer(BigInt::from(radicand));
    (p * u + q * v * dd, p * v + q * u)
}

impl QuadScalar {
    /// Builds `a + b√D + c·i + d·i√D` for any radicand, reducing it to
    /// square-free form and collapsing rational surds.
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational, radicand: u64) -> Self {
        let (k, free) = square_free_decompose(radicand);
        let k = Rational::from_integer(BigInt::from(k));
        if free <= 1 {
            // √D is the integer k (or zero)
            QuadScalar::from_parts(a + &b * &k, Rational::zero(), c + &d * &k, Rational::zero(), 0)
        } else {
            QuadScalar::from_parts(a, b * &k, c, d * &k, free)
        }
    }

    fn from_parts(a: Rational, b: Rational, c: Rational, d: Rational, radicand: u64) -> Self {
        let mut v = QuadScalar { a, b, c, d, radicand };
        v.canonicalize();
        v
    }

    fn canonicalize(&mut self) {
        if self.radicand == 0 {
            self.b = Rational::zero();
            self.d = Rational::zero();
        }
        if self.b.is_zero() && self.d.is_zero() {
            self.radicand = 0;
        }
    }

    /// Re-applies the canonical form. Idempotent.
    pub fn normalized(&self) -> Self {
        QuadScalar::new(
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.radicand,
        )
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// The imaginary unit `√(−1)`.
    pub fn i() -> Self {
        QuadScalar::from_parts(Rational::zero(), Rational::zero(), Rational::one(), Rational::zero(), 0)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn from_rational(q: Rational) -> Self {
        QuadScalar::from_parts(q, Rational::zero(), Rational::zero(), Rational::zero(), 0)
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn gaussian(re: Rational, im: Rational) -> Self {
        QuadScalar::from_parts(re, Rational::zero(), im, Rational::zero(), 0)
    }

    /// φ = (1 + √5)/2.
    pub fn golden_ratio() -> Self {
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        QuadScalar::from_parts(half.clone(), half, Rational::zero(), Rational::zero(), 5)
    }

    /// Φ = (1 − √5)/2.
    pub fn golden_conjugate() -> Self {
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        QuadScalar::from_parts(half.clone(), -half, Rational::zero(), Rational::zero(), 5)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn to_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn to_bigint(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let r = common_radicand(self.radicand, rhs.radicand)?;
        Ok(QuadScalar::from_parts(
            &self.a + &rhs.a,
            &self.b + &rhs.b,
            &self.c + &rhs.c,
            &self.d + &rhs.d,
            r,
        ))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&-rhs)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let r = common_radicand(self.radicand, rhs.radicand)?;
        // (X1 + i·X2)(Y1 + i·Y2) with X, Y in Q(√D)
        let (p1, q1) = surd_mul(&self.a, &self.b, &rhs.a, &rhs.b, r);
        let (p2, q2) = surd_mul(&self.c, &self.d, &rhs.c, &rhs.d, r);
        let (p3, q3) = surd_mul(&self.a, &self.b, &rhs.c, &rhs.d, r);
        let (p4, q4) = surd_mul(&self.c, &self.d, &rhs.a, &rhs.b, r);
        Ok(QuadScalar::from_parts(p1 - p2, q1 - q2, p3 + p4, q3 + q4, r))
    }

    /// Multiplies by the rational norm-inverse of `rhs`: `x/y = x·ȳ₁ȳ₂ȳ₃ / N(y)`
    /// where `ȳₖ` are the three nontrivial conjugates of `y`.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        common_radicand(self.radicand, rhs.radicand)?;
        let conjugates = rhs
            .conj_sqrt()
            .checked_mul(&rhs.conj_i())?
            .checked_mul(&rhs.conj_both())?;
        let norm = rhs.checked_mul(&conjugates)?;
        let norm = norm
            .to_rational()
            .cloned()
            .expect("product of all conjugates is rational");
        let num = self.checked_mul(&conjugates)?;
        Ok(num.scale(&norm.recip()))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        QuadScalar::from_parts(&self.a * q, &self.b * q, &self.c * q, &self.d * q, self.radicand)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, exp: i64) -> Result<Self> {
        let p = self.pow(exp.unsigned_abs() as u32);
        if exp < 0 {
            p.recip()
        } else {
            Ok(p)
        }
    }

    /// Negates √D.
    pub fn conj_sqrt(&self) -> Self {
        QuadScalar::from_parts(self.a.clone(), -&self.b, self.c.clone(), -&self.d, self.radicand)
    }

    /// Negates i.
    pub fn conj_i(&self) -> Self {
        QuadScalar::from_parts(self.a.clone(), self.b.clone(), -&self.c, -&self.d, self.radicand)
    }

    pub fn conj_both(&self) -> Self {
        QuadScalar::from_parts(self.a.clone(), -&self.b, -&self.c, self.d.clone(), self.radicand)
    }

    /// JSON object form `{"a":"p/q","b":…,"c":…,"d":…,"D":n}`.
    pub fn to_json_object(&self) -> Value {
        json!({
            "a": self.a.to_string(),
            "b": self.b.to_string(),
            "c": self.c.to_string(),
            "d": self.d.to_string(),
            "D": self.radicand,
        })
    }

    pub fn from_json_object(v: &Value) -> Result<Self> {
        let field = |k: &str| -> Result<Rational> {
            let s = v
                .get(k)
                .and_then(Value::as_str)
                .ok_or_else(|| Error::parse(0, format!("missing string field `{k}`")))?;
            parse_rational(s)
        };
        let radicand = v
            .get("D")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::parse(0, "missing integer field `D`"))?;
        Ok(QuadScalar::new(field("a")?, field("b")?, field("c")?, field("d")?, radicand))
    }

    /// Decimal approximation with `digits` fractional digits (truncated).
    /// Only used for display; all arithmetic stays exact.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        let guard = digits + 6;
        let scale = BigInt::from(10).pow(guard as u32);
        let root = (BigInt::from(self.radicand) * &scale * &scale).sqrt();
        let root = Rational::new(root, scale);
        let re = &self.a + &self.b * &root;
        let im = &self.c + &self.d * &root;
        let re_s = rational_to_decimal(&re, digits);
        if im.is_zero() {
            re_s
        } else if im.is_negative() {
            format!("{re_s} - {}i", rational_to_decimal(&-im, digits))
        } else {
            format!("{re_s} + {}i", rational_to_decimal(&im, digits))
        }
    }
}

fn rational_to_decimal(q: &Rational, digits: usize) -> String {
    let scaled = q * Rational::from_integer(BigInt::from(10).pow(digits as u32));
    let n = scaled.to_integer();
    let neg = q.is_negative();
    let mag = n.abs().to_string();
    let mag = format!("{:0>width$}", mag, width = digits + 1);
    let (int, frac) = mag.split_at(mag.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

impl Default for QuadScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QuadScalar {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for QuadScalar {
    fn from(n: BigInt) -> Self {
        Self::from_bigint(n)
    }
}

impl From<Rational> for QuadScalar {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;

    fn neg(self) -> QuadScalar {
        QuadScalar::from_parts(-&self.a, -&self.b, -&self.c, -&self.d, self.radicand)
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;

    fn neg(self) -> QuadScalar {
        -&self
    }
}

// Operator forms panic on a radicand mismatch; matrix code validates the
// shared radicand once at construction and then uses these.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadScalar> for &QuadScalar {
            type Output = QuadScalar;

            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<QuadScalar> for QuadScalar {
            type Output = QuadScalar;

            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&QuadScalar> for QuadScalar {
            type Output = QuadScalar;

            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sqrt = format!("sqrt({})", self.radicand);
        let isqrt = format!("i*{sqrt}");
        let terms: [(&Rational, Option<&str>); 4] = [
            (&self.a, None),
            (&self.b, Some(&sqrt)),
            (&self.c, Some("i")),
            (&self.d, Some(&isqrt)),
        ];
        let mut first = true;
        for (coef, basis) in terms {
            if coef.is_zero() {
                continue;
            }
            let mag = coef.abs();
            let body = match basis {
                None => mag.to_string(),
                Some(b) if mag.is_one() => b.to_string(),
                Some(b) => format!("{mag}*{b}"),
            };
            match (first, coef.is_negative()) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::parse(0, format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().map_or(0, char::len_utf8);
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let out = &self.rest()[..len];
        self.pos += len;
        Some(out)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    fn rational(&mut self) -> Result<Option<Rational>> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        let mut q = Rational::from_integer(num.parse::<BigInt>().expect("digits"));
        let save = self.pos;
        if self.eat("/") {
            match self.digits() {
                Some(den) => {
                    let den: BigInt = den.parse().expect("digits");
                    if den.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    q /= Rational::from_integer(den);
                }
                None => self.pos = save,
            }
        }
        Ok(Some(q))
    }

    fn sqrt_basis(&mut self) -> Result<Option<QuadScalar>> {
        if !self.eat("sqrt(") {
            return Ok(None);
        }
        let n = self.digits().ok_or_else(|| self.err("expected radicand"))?;
        let n: u64 = n.parse().map_err(|_| self.err("radicand too large"))?;
        if !self.eat(")") {
            return Err(self.err("expected `)`"));
        }
        Ok(Some(sqrt_integer(n)))
    }

    // basis := sqrt(n) ['*' i] | i ['*' sqrt(n)]
    fn basis(&mut self) -> Result<Option<QuadScalar>> {
        if let Some(root) = self.sqrt_basis()? {
            let save = self.pos;
            if self.eat("*") && self.eat("i") {
                return Ok(Some(&root * &QuadScalar::i()));
            }
            self.pos = save;
            return Ok(Some(root));
        }
        self.skip_ws();
        let save = self.pos;
        if self.eat("i") {
            let after = self.pos;
            if self.eat("*") {
                if let Some(root) = self.sqrt_basis()? {
                    return Ok(Some(&root * &QuadScalar::i()));
                }
            }
            self.pos = after;
            if self.rest().starts_with(|c: char| c.is_alphanumeric() || c == '_') {
                self.pos = save;
                return Ok(None);
            }
            return Ok(Some(QuadScalar::i()));
        }
        Ok(None)
    }

    fn term(&mut self) -> Result<QuadScalar> {
        let mut negative = false;
        loop {
            if self.eat("-") {
                negative = !negative;
            } else if !self.eat("+") {
                break;
            }
        }
        let value = if let Some(q) = self.rational()? {
            let save = self.pos;
            if self.eat("*") {
                match self.basis()? {
                    Some(b) => b.scale(&q),
                    None => {
                        self.pos = save;
                        return Err(self.err("expected sqrt(n) or i after `*`"));
                    }
                }
            } else {
                QuadScalar::from_rational(q)
            }
        } else if let Some(b) = self.basis()? {
            b
        } else {
            return Err(self.err("expected a number, sqrt(n) or i"));
        };
        Ok(if negative { -value } else { value })
    }

    fn scalar(&mut self) -> Result<QuadScalar> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            let neg = if self.rest().starts_with('+') {
                false
            } else if self.rest().starts_with('-') {
                true
            } else {
                break;
            };
            self.pos += 1;
            let t = self.term()?;
            let t = if neg { -t } else { t };
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }
}

/// Parses the textual form, e.g. `1/2 + 1/2*sqrt(5)` or `-3 + i*sqrt(2)`.
/// Returns the scalar and the number of bytes consumed.
pub(crate) fn parse_scalar_prefix(src: &str) -> Result<(QuadScalar, usize)> {
    let mut cur = Cursor { src, pos: 0 };
    let v = cur.scalar()?;
    Ok((v, cur.pos))
}

impl FromStr for QuadScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (v, used) = parse_scalar_prefix(s)?;
        if !s[used..].trim().is_empty() {
            return Err(Error::parse(used, format!("unexpected trailing input `{}`", &s[used..])));
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QuadScalar {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(q("1") + q("sqrt(5)"), q("1 + sqrt(5)"));
        let x = q("2/3 - 5*i*sqrt(3)");
        assert_eq!(&x + &QuadScalar::zero(), x);
        assert_eq!(QuadScalar::golden_ratio() + QuadScalar::golden_conjugate(), QuadScalar::one());
    }

    #[test]
    fn mul_examples() {
        let prod = QuadScalar::golden_ratio() * QuadScalar::golden_conjugate();
        assert_eq!(prod, QuadScalar::from_integer(-1));
        assert_eq!(QuadScalar::i() * QuadScalar::i(), QuadScalar::from_integer(-1));
        let x = q("7 - 1/2*sqrt(2) + 3*i");
        assert_eq!(&x * &QuadScalar::one(), x);
    }

    #[test]
    fn div_examples() {
        let inv = QuadScalar::one() / QuadScalar::golden_ratio();
        assert_eq!(inv, -QuadScalar::golden_conjugate());
        assert_eq!(QuadScalar::golden_ratio() * &inv, QuadScalar::one());
        assert_eq!(q("2 + 2*i") / q("1 + i"), QuadScalar::from_integer(2));
        let x = q("3/7 + 2*sqrt(5) - i + 4*i*sqrt(5)");
        assert_eq!(&x / &x, QuadScalar::one());
    }

    #[test]
    fn division_by_zero_and_mismatch() {
        assert_eq!(QuadScalar::one().checked_div(&QuadScalar::zero()), Err(Error::DivisionByZero));
        assert_eq!(
            q("sqrt(2)").checked_add(&q("sqrt(3)")),
            Err(Error::RadicandMismatch { left: 2, right: 3 })
        );
        assert!(q("sqrt(2)").checked_mul(&q("i")).is_ok());
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(sqrt_integer(0), QuadScalar::zero());
        assert_eq!(sqrt_integer(9), QuadScalar::from_integer(3));
        assert_eq!(sqrt_integer(12), q("2*sqrt(3)"));
        assert_eq!(sqrt_integer(12).radicand(), 3);
        assert_eq!(sqrt_integer(9).radicand(), 0);
        for m in 0..=10_000u64 {
            let r = sqrt_integer(m);
            assert_eq!(&r * &r, QuadScalar::from_bigint(BigInt::from(m)), "m = {m}");
        }
    }

    #[test]
    fn square_free_factorization() {
        assert_eq!(square_free_decompose(72), (6, 2));
        assert_eq!(square_free_decompose(1), (1, 1));
        assert_eq!(square_free_decompose(97), (1, 97));
        assert!(is_square_free(30));
        assert!(!is_square_free(18));
    }

    #[test]
    fn rational_values_carry_no_radicand() {
        let r = |n: i64| Rational::from_integer(n.into());
        let x = q("sqrt(5)") - q("sqrt(5)") + q("3");
        assert_eq!(x.radicand(), 0);
        assert_eq!(QuadScalar::new(r(1), r(2), r(0), r(0), 4), q("5"));
    }

    #[test]
    fn display_forms() {
        assert_eq!(QuadScalar::golden_ratio().to_string(), "1/2 + 1/2*sqrt(5)");
        assert_eq!(QuadScalar::golden_conjugate().to_string(), "1/2 - 1/2*sqrt(5)");
        assert_eq!(QuadScalar::from_integer(-4).to_string(), "-4");
        assert_eq!(QuadScalar::zero().to_string(), "0");
        assert_eq!(QuadScalar::i().to_string(), "i");
        assert_eq!(q("-i*sqrt(3)").to_string(), "-i*sqrt(3)");
        assert_eq!(q("2 - 3/4*i + 5*i*sqrt(7)").to_string(), "2 - 3/4*i + 5*i*sqrt(7)");
    }

    #[test]
    fn parse_variants() {
        assert_eq!(q("sqrt(5)*i"), q("i*sqrt(5)"));
        assert_eq!(q("1+ -2*sqrt(5)"), q("1 - 2*sqrt(5)"));
        assert_eq!(q("sqrt(12)"), q("2*sqrt(3)"));
        assert_eq!(q(" -1/2 "), QuadScalar::from_ratio(-1, 2));
        assert!("1 + ".parse::<QuadScalar>().is_err());
        assert!("1 + x".parse::<QuadScalar>().is_err());
        assert!("sqrt(2) + sqrt(3)".parse::<QuadScalar>().is_err());
        assert!("1/0".parse::<QuadScalar>().is_err());
    }

    #[test]
    fn json_object_form() {
        let x = q("1/2 - 3*sqrt(5) + i");
        let v = x.to_json_object();
        assert_eq!(v["a"], "1/2");
        assert_eq!(v["D"], 5);
        assert_eq!(QuadScalar::from_json_object(&v).unwrap(), x);
    }

    #[test]
    fn decimal_approximation() {
        assert_eq!(QuadScalar::golden_ratio().to_decimal_string(6), "1.618033");
        assert_eq!(QuadScalar::from_ratio(-1, 3).to_decimal_string(3), "-0.333");
        assert_eq!(q("1 - 2*i").to_decimal_string(2), "1.00 - 2.00i");
    }

    #[test]
    fn powi_negative() {
        let phi = QuadScalar::golden_ratio();
        assert_eq!(phi.powi(-2).unwrap() * phi.pow(2), QuadScalar::one());
        assert_eq!(QuadScalar::zero().pow(0), QuadScalar::one());
    }
}
