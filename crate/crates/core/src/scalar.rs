//! Exact coefficients: rational functions in one indeterminate `q` over ℚ.
//!
//! A [`Scalar`] is stored as `q^shift · num(q) / den(q)` where `num` and `den`
//! are ordinary polynomials with nonzero constant term, `den` is monic and
//! `gcd(num, den) = 1`. This form is unique, so structural equality is value
//! equality and zero testing is trivial.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number (always in lowest terms).
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Dense polynomial in `q` with ascending coefficients and no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
struct Poly(Vec<Rat>);

impl Poly {
    fn one() -> Self {
        Poly(vec![Rat::one()])
    }

    fn constant(c: Rat) -> Self {
        let mut p = Poly(vec![c]);
        p.trim();
        p
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &Rat {
        self.0.last().expect("lead of zero polynomial")
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    /// Number of leading zero coefficients, i.e. the power of `q` dividing self.
    fn valuation(&self) -> usize {
        self.0.iter().take_while(|c| c.is_zero()).count()
    }

    fn drop_low(&mut self, k: usize) {
        if k > 0 {
            self.0.drain(..k);
        }
    }

    fn shifted(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::default();
        }
        let mut v = vec![Rat::zero(); k];
        v.extend(self.0.iter().cloned());
        Poly(v)
    }

    fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.0.get(i), other.0.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            v.push(c);
        }
        let mut p = Poly(v);
        p.trim();
        p
    }

    fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::default();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut v = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        let mut p = Poly(v);
        p.trim();
        p
    }

    fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::default();
        }
        Poly(self.0.iter().map(|x| x * c).collect())
    }

    fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut r = self.clone();
        if r.0.len() < d.0.len() {
            return (Poly::default(), r);
        }
        let mut quot = vec![Rat::zero(); r.0.len() - d.0.len() + 1];
        let dl = d.lead().clone();
        while !r.is_zero() && r.0.len() >= d.0.len() {
            let shift = r.0.len() - d.0.len();
            let c = r.lead() / &dl;
            for (i, dc) in d.0.iter().enumerate() {
                let t = &c * dc;
                r.0[shift + i] -= t;
            }
            quot[shift] = c;
            r.0.pop();
            r.trim();
        }
        let mut q = Poly(quot);
        q.trim();
        (q, r)
    }

    fn monic(&self) -> Poly {
        let l = self.lead().clone();
        self.scale(&l.recip())
    }

    fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.monic() };
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficients reversed: `q^deg · p(1/q)`.
    fn reversed(&self) -> Poly {
        let mut v = self.0.clone();
        v.reverse();
        let mut p = Poly(v);
        p.trim();
        p
    }
}

/// Exact element of ℚ(q).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    shift: i64,
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            shift: 0,
            num: Poly::default(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_rat(Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    pub fn from_rat(r: Rat) -> Self {
        Scalar {
            shift: 0,
            num: Poly::constant(r),
            den: Poly::one(),
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Scalar::q_pow(1)
    }

    /// `q̄ = q⁻¹`.
    pub fn qbar() -> Self {
        Scalar::q_pow(-1)
    }

    pub fn q_pow(k: i64) -> Self {
        Scalar {
            shift: k,
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    /// `c · q^k`.
    pub fn monomial(c: Rat, k: i64) -> Self {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            shift: k,
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    /// Builds a Laurent polynomial from `(exponent, coefficient)` pairs.
    pub fn laurent<I: IntoIterator<Item = (i64, Rat)>>(terms: I) -> Self {
        terms
            .into_iter()
            .fold(Scalar::zero(), |acc, (k, c)| acc + Scalar::monomial(c, k))
    }

    /// The quantum integer `[k] = (q^k - q^-k)/(q - q^-1)`.
    pub fn qint(k: i64) -> Self {
        let sign = if k < 0 { -1 } else { 1 };
        let k = k.abs();
        let s = Scalar::laurent((0..k).map(|j| (k - 1 - 2 * j, Rat::one())));
        if sign < 0 {
            -s
        } else {
            s
        }
    }

    fn from_parts(shift: i64, mut num: Poly, mut den: Poly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        assert!(!den.is_zero(), "zero denominator");
        let vn = num.valuation();
        num.drop_low(vn);
        let vd = den.valuation();
        den.drop_low(vd);
        let shift = shift + vn as i64 - vd as i64;
        if den.degree() > 0 && num.degree() > 0 {
            let g = num.gcd(&den);
            if g.degree() > 0 {
                num = num.div_rem(&g).0;
                den = den.div_rem(&g).0;
            }
        }
        let l = den.lead().clone();
        if !l.is_one() {
            let inv = l.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Scalar { shift, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Returns `(c, k)` when the value is the monomial `c · q^k`.
    pub fn as_monomial(&self) -> Option<(Rat, i64)> {
        if self.is_zero() || !self.den.is_one() || self.num.0.len() != 1 {
            return None;
        }
        Some((self.num.0[0].clone(), self.shift))
    }

    /// Returns the constant value when the scalar does not depend on `q`.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        match self.as_monomial() {
            Some((c, 0)) => Some(c),
            _ => None,
        }
    }

    /// Laurent terms `(exponent, coefficient)` when the denominator is 1.
    pub fn laurent_terms(&self) -> Option<Vec<(i64, Rat)>> {
        if !self.den.is_one() {
            return None;
        }
        Some(
            self.num
                .0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (self.shift + i as i64, c.clone()))
                .collect(),
        )
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::from_parts(
            -self.shift,
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// The bar involution `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Scalar::zero();
        }
        // q^-s n(1/q)/d(1/q) = q^{-s - deg n + deg d} rev(n)/rev(d)
        let shift = -self.shift - self.num.degree() as i64 + self.den.degree() as i64;
        Scalar::from_parts(shift, self.num.reversed(), self.den.reversed())
    }

    /// Substitutes `q ↦ q^k` for a positive integer `k`.
    pub fn subs_q_power(&self, k: u32) -> Self {
        assert!(k >= 1);
        let stretch = |p: &Poly| {
            let mut v = vec![Rat::zero(); p.degree() * k as usize + 1];
            for (i, c) in p.0.iter().enumerate() {
                v[i * k as usize] = c.clone();
            }
            let mut out = Poly(v);
            out.trim();
            out
        };
        if self.is_zero() {
            return Scalar::zero();
        }
        Scalar::from_parts(self.shift * k as i64, stretch(&self.num), stretch(&self.den))
    }

    /// Evaluates at `q = x` for a nonzero rational `x`.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        if x.is_zero() && self.shift < 0 {
            return Err(Error::SingularLimit);
        }
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::SingularLimit);
        }
        let mut p = Rat::one();
        let base = if self.shift < 0 { x.recip() } else { x.clone() };
        for _ in 0..self.shift.unsigned_abs() {
            p *= &base;
        }
        Ok(p * self.num.eval(x) / d)
    }

    /// The classical value at `q = 1`.
    pub fn limit_q1(&self) -> Result<Rat> {
        self.eval(&Rat::one())
    }

    /// Laurent expansion in `t` of the value at `q = e^t`: returns the
    /// valuation `v` and the coefficients of `t^v, t^{v+1}, …` (`len` of them).
    pub fn exp_series(&self, len: usize) -> (i64, Vec<Rat>) {
        if self.is_zero() {
            return (0, vec![Rat::zero(); len]);
        }
        // Σ_k p_k e^{(k+s)t} has t^j coefficient Σ_k p_k (k+s)^j / j!
        let taylor = |p: &Poly, shift: i64, n: usize| -> Vec<Rat> {
            let mut out = vec![Rat::zero(); n];
            for (k, c) in p.0.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let x = Rat::from_integer(BigInt::from(k as i64 + shift));
                let mut pw = Rat::one();
                let mut fact = Rat::one();
                for (j, slot) in out.iter_mut().enumerate() {
                    if j > 0 {
                        pw *= &x;
                        fact *= Rat::from_integer(BigInt::from(j as i64));
                    }
                    *slot += c * &pw / &fact;
                }
            }
            out
        };
        let extra = self.num.degree() + self.den.degree() + 1;
        let n = taylor(&self.num, self.shift, len + extra);
        let d = taylor(&self.den, 0, len + extra);
        let vn = n.iter().position(|c| !c.is_zero()).expect("nonzero polynomial has a nonzero Taylor term");
        let vd = d.iter().position(|c| !c.is_zero()).expect("nonzero polynomial has a nonzero Taylor term");
        let n = &n[vn..];
        let d = &d[vd..];
        let mut out: Vec<Rat> = Vec::with_capacity(len);
        for j in 0..len {
            let mut acc = n[j].clone();
            for i in 1..=j {
                acc -= &d[i] * &out[j - i];
            }
            out.push(acc / &d[0]);
        }
        (vn as i64 - vd as i64, out)
    }

    /// Total degree span used for quick heuristics in reports.
    pub fn complexity(&self) -> usize {
        self.num.0.len() + self.den.0.len()
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rat> for Scalar {
    fn from(r: Rat) -> Self {
        Scalar::from_rat(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, b: &Scalar) -> Scalar {
        if self.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(b.shift);
        let sa = (self.shift - s) as usize;
        let sb = (b.shift - s) as usize;
        if self.den == b.den {
            let num = self.num.shifted(sa).add(&b.num.shifted(sb));
            if self.den.is_one() {
                // already coprime: only a power of q may need extracting
                let mut num = num;
                if num.is_zero() {
                    return Scalar::zero();
                }
                let v = num.valuation();
                num.drop_low(v);
                return Scalar {
                    shift: s + v as i64,
                    num,
                    den: Poly::one(),
                };
            }
            return Scalar::from_parts(s, num, self.den.clone());
        }
        let num = self
            .num
            .shifted(sa)
            .mul(&b.den)
            .add(&b.num.shifted(sb).mul(&self.den));
        Scalar::from_parts(s, num, self.den.mul(&b.den))
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, b: &Scalar) -> Scalar {
        self + &(-b)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, b: &Scalar) -> Scalar {
        if self.is_zero() || b.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && b.den.is_one() {
            // product of polynomials with nonzero constant terms keeps a nonzero constant term
            return Scalar {
                shift: self.shift + b.shift,
                num: self.num.mul(&b.num),
                den: Poly::one(),
            };
        }
        Scalar::from_parts(
            self.shift + b.shift,
            self.num.mul(&b.num),
            self.den.mul(&b.den),
        )
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            shift: self.shift,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, b: Scalar) -> Scalar {
                (&self).$m(&b)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, b: &'a Scalar) -> Scalar {
                (&self).$m(b)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::checked_div`] for a fallible version.
    fn div(self, b: Scalar) -> Scalar {
        self.checked_div(&b).expect("division by zero scalar")
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, b: &Scalar) {
        *self = &*self + b;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, b: &Scalar) {
        *self = &*self - b;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, b: &Scalar) {
        *self = &*self * b;
    }
}

// ---------------------------------------------------------------------------
// Text form

fn write_rat(f: &mut fmt::Formatter<'_>, c: &Rat) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Writes a Laurent polynomial given as descending `(exponent, coeff)` terms.
fn write_laurent(f: &mut fmt::Formatter<'_>, terms: &[(i64, Rat)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (k, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if idx == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { "-" } else { "+" })?;
        }
        match (*k, a.is_one()) {
            (0, _) => write_rat(f, &a)?,
            (k, true) => write_q(f, k)?,
            (k, false) => {
                write_rat(f, &a)?;
                write!(f, "*")?;
                write_q(f, k)?;
            }
        }
    }
    Ok(())
}

fn write_q(f: &mut fmt::Formatter<'_>, k: i64) -> fmt::Result {
    if k == 1 {
        write!(f, "q")
    } else {
        write!(f, "q^{k}")
    }
}

fn descending(shift: i64, p: &Poly) -> Vec<(i64, Rat)> {
    p.0.iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (shift + i as i64, c.clone()))
        .collect()
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write_laurent(f, &descending(self.shift, &self.num));
        }
        let num = descending(self.shift, &self.num);
        let den = descending(0, &self.den);
        let paren_num = num.len() > 1;
        if paren_num {
            write!(f, "(")?;
            write_laurent(f, &num)?;
            write!(f, ")")?;
        } else {
            write_laurent(f, &num)?;
        }
        write!(f, "/(")?;
        write_laurent(f, &den)?;
        write!(f, ")")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Recursive-descent parser for scalar expressions in `q`.
///
/// Grammar: `sum := prod (('+'|'-') prod)*`, `prod := unary (('*'|'/') unary)*`,
/// `unary := '-' unary | pow`, `pow := atom ('^' int)?`,
/// `atom := integer | 'q' | 'qbar' | '(' sum ')'`.
pub(crate) struct ScalarParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> ScalarParser<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        ScalarParser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    pub(crate) fn position(&self) -> usize {
        self.pos
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn parse_sum(&mut self) -> Result<Scalar> {
        let mut acc = self.parse_prod()?;
        loop {
            if self.eat(b'+') {
                acc = acc + self.parse_prod()?;
            } else if self.eat(b'-') {
                acc = acc - self.parse_prod()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_prod(&mut self) -> Result<Scalar> {
        let mut acc = self.parse_unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.parse_unary()?;
            } else if self.eat(b'/') {
                let d = self.parse_unary()?;
                acc = acc.checked_div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_unary(&mut self) -> Result<Scalar> {
        if self.eat(b'-') {
            return Ok(-self.parse_unary()?);
        }
        self.parse_pow()
    }

    fn parse_int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit string"))
    }

    fn parse_pow(&mut self) -> Result<Scalar> {
        let base = self.parse_atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let e = self.parse_int()?;
            let e: i64 = i64::try_from(e).map_err(|_| self.err("exponent too large"))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.parse_sum()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                if self.src[self.pos..].starts_with(b"bar") {
                    self.pos += 3;
                    return Ok(Scalar::qbar());
                }
                Ok(Scalar::q())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.parse_int()?;
                Ok(Scalar::from_rat(Rat::from_integer(n)))
            }
            _ => Err(self.err("expected scalar atom")),
        }
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(self.err("trailing input"));
        }
        Ok(())
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = ScalarParser::new(s);
        let v = p.parse_sum()?;
        p.finish()?;
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let q = Scalar::q();
        let qb = Scalar::qbar();
        assert_eq!(&(&q - &qb) * &(&q + &qb), Scalar::q_pow(2) - Scalar::q_pow(-2));
    }

    #[test]
    fn series_at_q_equals_exp_t() {
        let r = |n, d| rat(n, d);
        // e^t
        assert_eq!(Scalar::q().exp_series(4), (0, vec![r(1, 1), r(1, 1), r(1, 2), r(1, 6)]));
        // 2 cosh t
        assert_eq!(Scalar::qint(2).exp_series(3), (0, vec![r(2, 1), r(0, 1), r(1, 1)]));
        // 1 / (2 sinh t) = 1/(2t) − t/12 + …
        let inv = (Scalar::q() - Scalar::qbar()).inv().unwrap();
        assert_eq!(inv.exp_series(3), (-1, vec![r(1, 2), r(0, 1), r(-1, 12)]));
        // (q² − 1)² / q² = 4 sinh² t = 4t² + …
        let x = s("(q^2-1)^2/q^2");
        assert_eq!(x.exp_series(1), (2, vec![r(4, 1)]));
    }

    #[test]
    fn inverse_of_q_minus_qbar() {
        let d = Scalar::q() - Scalar::qbar();
        let inv = d.inv().unwrap();
        assert_eq!(inv.to_string(), "q/(q^2-1)");
        assert!((&inv * &d).is_one());
    }

    #[test]
    fn exponent_cancellation() {
        assert!((Scalar::q_pow(2) * Scalar::q_pow(-2)).is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(Scalar::one().checked_div(&Scalar::zero()), Err(Error::DivisionByZero)));
        assert!("1/(q-q)".parse::<Scalar>().is_err());
    }

    #[test]
    fn bar_examples() {
        assert_eq!((Scalar::q_pow(2) + Scalar::one()).bar(), Scalar::q_pow(-2) + Scalar::one());
        let d = Scalar::q() - Scalar::qbar();
        assert_eq!(d.bar(), -d.clone());
        let r = (Scalar::q() + Scalar::qbar()).inv().unwrap();
        assert_eq!(r.bar(), r);
    }

    #[test]
    fn limits() {
        assert_eq!(Scalar::q_pow(3).limit_q1().unwrap(), rat(1, 1));
        let r = (Scalar::q() + Scalar::qbar()).inv().unwrap();
        assert_eq!(r.limit_q1().unwrap(), rat(1, 2));
        let sing = (Scalar::q() - Scalar::qbar()).inv().unwrap();
        assert!(matches!(sing.limit_q1(), Err(Error::SingularLimit)));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(s("(q^2-1)/(q+1)"), s("q-1"));
        assert_eq!(s("q^-2").to_string(), "q^-2");
        assert_eq!(s("-1/2*q^-1+3").to_string(), "3-1/2*q^-1");
        assert_eq!(s("qbar"), Scalar::qbar());
        let x = s("(2*q^3-q)/(3*q^2+q+5)");
        assert_eq!(s(&x.to_string()), x);
        assert_eq!(s("0").to_string(), "0");
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(Scalar::qint(2), s("q+q^-1"));
        assert_eq!(Scalar::qint(0), Scalar::zero());
        assert_eq!(Scalar::qint(-3), -Scalar::qint(3));
        let via_fraction = (Scalar::q_pow(3) - Scalar::q_pow(-3))
            .checked_div(&(Scalar::q() - Scalar::qbar()))
            .unwrap();
        assert_eq!(Scalar::qint(3), via_fraction);
    }

    #[test]
    fn substitution() {
        assert_eq!(s("q+1/q").subs_q_power(2), s("q^2+q^-2"));
        assert_eq!(s("1/(q-1)").subs_q_power(2), s("1/(q^2-1)"));
    }
}
