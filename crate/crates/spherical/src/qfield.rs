//! Exact rational functions in `s = q^{1/2}`.
//!
//! Half-integral powers of `q` show up as soon as a parabolic is not a Borel,
//! so the field is `Q(s)` with `q = s^2`. Values that only involve even powers
//! of `s` print as ordinary expressions in `q`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial in `s`, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    c: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn constant(a: BigInt) -> Self {
        Poly::from_coeffs(vec![a])
    }

    pub fn monomial(a: BigInt, k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k];
        c.push(a);
        Poly::from_coeffs(c)
    }

    pub fn from_coeffs(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_default()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn is_monomial(&self) -> bool {
        match (self.low_degree(), self.degree()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    fn scale(&self, a: &BigInt) -> Poly {
        Poly::from_coeffs(self.c.iter().map(|x| x * a).collect())
    }

    fn div_scalar(&self, a: &BigInt) -> Poly {
        Poly::from_coeffs(self.c.iter().map(|x| x / a).collect())
    }

    fn shift_down(&self, k: usize) -> Poly {
        Poly::from_coeffs(self.c[k.min(self.c.len())..].to_vec())
    }

    fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut g = self.content();
        if self.lead().is_negative() {
            g = -g;
        }
        self.div_scalar(&g)
    }

    /// Pseudo-remainder of `self` by `d`.
    fn prem(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.clone();
        let ld = d.lead();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.lead();
            let shift = rd - dd;
            let mut next = r.scale(&ld).c;
            for (i, x) in d.c.iter().enumerate() {
                next[i + shift] -= &lr * x;
            }
            r = Poly::from_coeffs(next);
        }
        r
    }

    /// Exact division; panics if `d` does not divide `self` over the integers.
    fn div_exact(&self, d: &Poly) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let dd = d.degree().expect("division by zero polynomial");
        let sd = self.degree().unwrap();
        assert!(sd >= dd, "inexact polynomial division");
        let mut r = self.c.clone();
        let mut qc = vec![BigInt::zero(); sd - dd + 1];
        let ld = d.lead();
        for k in (0..=sd - dd).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(&ld);
            assert!(rem.is_zero(), "inexact polynomial division");
            for (i, x) in d.c.iter().enumerate() {
                r[k + i] -= &qk * x;
            }
            qc[k] = qk;
        }
        assert!(r.iter().all(|x| x.is_zero()), "inexact polynomial division");
        Poly::from_coeffs(qc)
    }

    /// Greatest common divisor with positive leading coefficient.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        let cg = self.content().gcd(&other.content());
        if self.is_monomial() || other.is_monomial() {
            let k = self.low_degree().unwrap().min(other.low_degree().unwrap());
            return Poly::monomial(cg, k);
        }
        let k = self.low_degree().unwrap().min(other.low_degree().unwrap());
        let mut a = self.shift_down(k).primitive();
        let mut b = other.shift_down(k).primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b).primitive();
            a = b;
            b = r;
        }
        let mut out = a.scale(&cg);
        out.c.splice(0..0, std::iter::repeat(BigInt::zero()).take(k));
        out.normalize_sign()
    }

    fn normalize_sign(&self) -> Poly {
        if self.lead().is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn eval(&self, s: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for x in self.c.iter().rev() {
            acc = acc * s + BigRational::from_integer(x.clone());
        }
        acc
    }

    fn has_odd_terms(&self) -> bool {
        self.c.iter().enumerate().any(|(i, x)| i % 2 == 1 && !x.is_zero())
    }

    /// Substitute `s^2 = q`, assuming only even powers occur.
    fn eval_even(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for x in self.c.iter().step_by(2).rev() {
            acc = acc * q + BigRational::from_integer(x.clone());
        }
        acc
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { c: self.c.into_iter().map(|x| -x).collect() }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.c.get(i).cloned().unwrap_or_default();
            let b = o.c.get(i).cloned().unwrap_or_default();
            c.push(a + b);
        }
        Poly::from_coeffs(c)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::from_coeffs(c)
    }
}

/// Element of `Q(s)`, `s = q^{1/2}`, in lowest terms with positive leading
/// denominator coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::constant(BigInt::one()) }
    }

    pub fn one() -> Self {
        RatFunc::from_int(1)
    }

    pub fn from_int(a: i64) -> Self {
        RatFunc { num: Poly::constant(BigInt::from(a)), den: Poly::constant(BigInt::one()) }
    }

    pub fn from_bigint(a: BigInt) -> Self {
        RatFunc { num: Poly::constant(a), den: Poly::constant(BigInt::one()) }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        RatFunc::new(Poly::constant(r.numer().clone()), Poly::constant(r.denom().clone()))
    }

    /// `num / den`, reduced.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.div_exact(&g), den.div_exact(&g));
        if den.lead().is_negative() {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    /// `s^k` for any integer `k`.
    pub fn s_pow(k: i64) -> Self {
        let one = BigInt::one();
        if k >= 0 {
            RatFunc { num: Poly::monomial(one.clone(), k as usize), den: Poly::constant(one) }
        } else {
            RatFunc { num: Poly::constant(one.clone()), den: Poly::monomial(one, (-k) as usize) }
        }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        RatFunc::s_pow(2 * k)
    }

    pub fn q() -> Self {
        RatFunc::s_pow(2)
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == RatFunc::one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0)
    }

    /// The value as a rational number when it does not depend on `q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_constant() {
            Some(BigRational::new(self.num.lead(), self.den.lead()))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Computation("inverse of zero".into()));
        }
        Ok(RatFunc::new(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut out = RatFunc::one();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    /// True when only even powers of `s` occur, i.e. the value lies in `Q(q)`.
    pub fn is_in_q(&self) -> bool {
        !self.num.has_odd_terms() && !self.den.has_odd_terms()
    }

    /// Specialize `q` to a number; symbolic values pass through unchanged.
    pub fn specialize(&self, q: &QValue) -> Result<RatFunc> {
        match q {
            QValue::Symbolic => Ok(self.clone()),
            QValue::Numeric(r) => Ok(RatFunc::from_rational(&self.eval(r)?)),
        }
    }

    /// Evaluate at a rational `q`.
    pub fn eval(&self, q: &BigRational) -> Result<BigRational> {
        let (n, d) = if self.is_in_q() {
            (self.num.eval_even(q), self.den.eval_even(q))
        } else {
            let s = rational_sqrt(q).ok_or_else(|| {
                Error::Computation(format!("value involves q^(1/2) but q = {q} is not a square"))
            })?;
            (self.num.eval(&s), self.den.eval(&s))
        };
        if d.is_zero() {
            return Err(Error::Computation(format!("pole at q = {q}")));
        }
        Ok(n / d)
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &n * &n == *q.numer() && &d * &d == *q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl From<i64> for RatFunc {
    fn from(a: i64) -> Self {
        RatFunc::from_int(a)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o.clone())
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let num = &self.num.div_exact(&g1) * &o.num.div_exact(&g2);
        let den = &self.den.div_exact(&g2) * &o.den.div_exact(&g1);
        let (num, den) = if den.lead().is_negative() { (-num, -den) } else { (num, den) };
        RatFunc { num, den }
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.inv().expect("division by zero")
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -self.clone()
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $f(self, o: RatFunc) -> RatFunc {
                (&self).$f(&o)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $f(self, o: &RatFunc) -> RatFunc {
                (&self).$f(o)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $f(self, o: RatFunc) -> RatFunc {
                self.$f(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, o: &RatFunc) {
        *self = &*self + o;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, o: &RatFunc) {
        *self = &*self - o;
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, o: &RatFunc) {
        *self = &*self * o;
    }
}

fn fmt_exp(k: i64) -> String {
    // k is the exponent of s
    if k % 2 == 0 {
        let e = k / 2;
        if e == 1 {
            "q".into()
        } else if e < 0 {
            format!("q^({e})")
        } else {
            format!("q^{e}")
        }
    } else {
        format!("q^({k}/2)")
    }
}

/// Terms `(coefficient, exponent of s)` in descending exponent order.
fn fmt_terms(terms: &[(BigInt, i64)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, k)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if *k == 0 {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&fmt_exp(*k));
        } else {
            out.push_str(&format!("{a}*{}", fmt_exp(*k)));
        }
    }
    out
}

fn poly_terms(p: &Poly, shift: i64) -> Vec<(BigInt, i64)> {
    p.c.iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (c.clone(), i as i64 + shift))
        .collect()
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_monomial() {
            let d = self.den.lead();
            let k = self.den.low_degree().unwrap() as i64;
            let body = fmt_terms(&poly_terms(&self.num, -k));
            if d.is_one() {
                write!(f, "{body}")
            } else if self.num.c.iter().filter(|x| !x.is_zero()).count() == 1 {
                write!(f, "{body}/{d}")
            } else {
                write!(f, "({body})/{d}")
            }
        } else {
            write!(f, "({})/({})", fmt_terms(&poly_terms(&self.num, 0)), fmt_terms(&poly_terms(&self.den, 0)))
        }
    }
}

impl PartialOrd for RatFunc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.to_rational(), other.to_rational()) {
            (Some(a), Some(b)) => a.partial_cmp(&b),
            _ => None,
        }
    }
}

/// A value for `q`: kept formal, or a positive rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QValue {
    Symbolic,
    Numeric(BigRational),
}

impl QValue {
    pub fn int(q: i64) -> Self {
        QValue::Numeric(BigRational::from_integer(q.into()))
    }

    /// Parse `sym`, an integer, or `p/r`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "sym" || s == "q" {
            return Ok(QValue::Symbolic);
        }
        let r: BigRational = s
            .parse()
            .map_err(|_| Error::Usage(format!("cannot parse q value `{s}`")))?;
        if r <= BigRational::one() {
            return Err(Error::Usage(format!("q must exceed 1, got {r}")));
        }
        Ok(QValue::Numeric(r))
    }

    /// `q` as a field element.
    pub fn as_ratfunc(&self) -> RatFunc {
        match self {
            QValue::Symbolic => RatFunc::q(),
            QValue::Numeric(r) => RatFunc::from_rational(r),
        }
    }

    /// The integer value of `q`, if numeric and integral.
    pub fn as_int(&self) -> Option<u64> {
        match self {
            QValue::Numeric(r) if r.is_integer() => r.to_integer().to_u64(),
            _ => None,
        }
    }
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QValue::Symbolic => write!(f, "sym"),
            QValue::Numeric(r) => write!(f, "{r}"),
        }
    }
}

/// Parse an expression such as `2*q^2 - 3*q + 1`, `(q-1)/q` or `q^(3/2)`.
pub fn parse_ratfunc(src: &str) -> Result<RatFunc> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Usage(format!("trailing input in `{src}`")));
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Q,
    S,
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(s.parse().unwrap()));
        } else if ch == 'q' {
            out.push(Tok::Q);
            i += 1;
        } else if ch == 's' {
            out.push(Tok::S);
            i += 1;
        } else if "+-*/^()".contains(ch) {
            out.push(Tok::Op(ch));
            i += 1;
        } else {
            return Err(Error::Usage(format!("unexpected character `{ch}` in `{src}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, what: &str) -> Result<T> {
        Err(Error::Usage(format!("parse error: {what} at token {}", self.pos)))
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut v = self.term()?;
        loop {
            if self.eat('+') {
                v = v + self.term()?;
            } else if self.eat('-') {
                v = v - self.term()?;
            } else {
                return Ok(v);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut v = self.unary()?;
        loop {
            if self.eat('*') {
                v = v * self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                if d.is_zero() {
                    return self.err("division by zero");
                }
                v = v / d;
            } else if matches!(self.peek(), Some(Tok::Q) | Some(Tok::S) | Some(Tok::Op('('))) {
                v = v * self.unary()?;
            } else {
                return Ok(v);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc> {
        let (base, s_exp) = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                (RatFunc::from_bigint(n), None)
            }
            Some(Tok::Q) => {
                self.pos += 1;
                (RatFunc::q(), Some(2))
            }
            Some(Tok::S) => {
                self.pos += 1;
                (RatFunc::s_pow(1), Some(1))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                (v, None)
            }
            _ => return self.err("expected operand"),
        };
        if !self.eat('^') {
            return Ok(base);
        }
        let (num, den) = self.exponent()?;
        match (s_exp, den) {
            (_, 1) => base.pow(num),
            (Some(2), 2) => Ok(RatFunc::s_pow(num)),
            _ => self.err("fractional exponent allowed only as q^(k/2)"),
        }
    }

    fn exponent(&mut self) -> Result<(i64, i64)> {
        let paren = self.eat('(');
        let neg = self.eat('-');
        let num = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                n.to_i64().ok_or_else(|| Error::Usage("exponent too large".into()))?
            }
            _ => return self.err("expected exponent"),
        };
        let mut den = 1;
        if paren && self.eat('/') {
            den = match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    n.to_i64().unwrap_or(0)
                }
                _ => return self.err("expected exponent denominator"),
            };
        }
        if paren && !self.eat(')') {
            return self.err("expected `)`");
        }
        if den != 1 && den != 2 {
            return self.err("exponent denominator must be 1 or 2");
        }
        Ok((if neg { -num } else { num }, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn field_arithmetic() {
        let a = p("q - 1");
        let b = p("q + 1");
        assert_eq!(&a * &b, p("q^2 - 1"));
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(p("1/q") + p("q^-1"), p("2/q"));
        assert!((p("q^(1/2)") * p("q^(1/2)") - p("q")).is_zero());
        assert_eq!(p("(q^2-1)/(q-1)"), p("q+1"));
    }

    #[test]
    fn display_round_trips() {
        for s in ["2*q^2 - 3*q + 1", "1 - q", "q^(3/2)", "(q^2 - 1)/(q^3 - 2)", "-q^(-1)"] {
            let v = p(s);
            assert_eq!(p(&v.to_string()), v, "{s} -> {v}");
        }
        assert_eq!(p("2*q^2-3*q+1").to_string(), "2*q^2 - 3*q + 1");
    }

    #[test]
    fn evaluation() {
        let v = p("q^2 - q");
        assert_eq!(v.eval(&BigRational::from_integer(3.into())).unwrap(), BigRational::from_integer(6.into()));
        assert!(p("q^(1/2)").eval(&BigRational::from_integer(2.into())).is_err());
        assert_eq!(
            p("q^(1/2)").eval(&BigRational::from_integer(4.into())).unwrap(),
            BigRational::from_integer(2.into())
        );
    }

    #[test]
    fn gcd_reduces() {
        let v = RatFunc::new(Poly::from_coeffs(vec![(-2).into(), 0.into(), 2.into()]), Poly::from_coeffs(vec![(-4).into(), 4.into()]));
        assert_eq!(v, p("(s+1)/2"));
    }
}
