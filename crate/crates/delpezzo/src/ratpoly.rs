//! Exact rational arithmetic and sparse bivariate Laurent polynomials.
//!
//! `RatLaurent` is a finite map from exponent pairs `(i, j)` in `Z^2` to
//! nonzero rational coefficients, representing `sum c_ij x^i w^j`. Zero
//! coefficients are never stored, so structural equality is semantic
//! equality. Negative exponents arise from chart substitutions such as
//! `x -> 1/x'`; plain polynomials are the special case of nonnegative
//! exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with positive denominator.
///
/// Coefficients are restricted to `Q`; rank over `Q` equals rank over `C`
/// for matrices with rational entries, so every dimension computed
/// downstream is unaffected by the restriction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Builds `numer / denom` in lowest terms. Panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Rational(BigRational::new(numer, denom))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Rational::one();
        }
        let base = if exp < 0 { self.recip() } else { self.clone() };
        let mut acc = Rational::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let (numer, denom) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let n: BigInt = numer
            .parse()
            .map_err(|_| ParseError::BadRational(s.to_string()))?;
        let d: BigInt = match denom {
            Some(d) => d
                .parse()
                .map_err(|_| ParseError::BadRational(s.to_string()))?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(ParseError::BadRational(s.to_string()));
        }
        Ok(Rational(BigRational::new(n, d)))
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// The two affine chart variables.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    W,
}

/// A single Laurent monomial `coeff * x^i * w^j` with nonzero coefficient,
/// used as the image of a coordinate under a chart change.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMonomial {
    coeff: Rational,
    exp_x: i64,
    exp_w: i64,
}

impl LaurentMonomial {
    /// Panics if `coeff` is zero; a coordinate image is never zero.
    pub fn new(coeff: Rational, exp_x: i64, exp_w: i64) -> Self {
        assert!(!coeff.is_zero(), "zero monomial is not a coordinate image");
        LaurentMonomial {
            coeff,
            exp_x,
            exp_w,
        }
    }

    pub fn var_x() -> Self {
        LaurentMonomial::new(Rational::one(), 1, 0)
    }

    pub fn var_w() -> Self {
        LaurentMonomial::new(Rational::one(), 0, 1)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn exp_x(&self) -> i64 {
        self.exp_x
    }

    pub fn exp_w(&self) -> i64 {
        self.exp_w
    }

    /// `coeff^e * x^(i e) * w^(j e)`, exact for any integer `e`.
    fn pow(&self, e: i64) -> (Rational, i64, i64) {
        (self.coeff.pow(e), self.exp_x * e, self.exp_w * e)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid rational literal: {0:?}")]
    BadRational(String),
    #[error("unexpected character {0:?} at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected exponent after '^'")]
    MissingExponent,
    #[error("vector field must be written as \"f; g\"")]
    BadVectorField,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("evaluation at a pole: {var:?} = 0 with negative exponent {exp}")]
    EvalAtPole { var: Var, exp: i64 },
}

/// Sparse bivariate Laurent polynomial over `Q`, in canonical form.
///
/// Equality of values is equality of term maps; the zero polynomial is the
/// empty map. Term storage is ordered, so hashing and printing are
/// deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatLaurent {
    terms: BTreeMap<(i64, i64), Rational>,
}

impl RatLaurent {
    pub fn zero() -> Self {
        RatLaurent::default()
    }

    pub fn one() -> Self {
        RatLaurent::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatLaurent::monomial(c, 0, 0)
    }

    pub fn var_x() -> Self {
        RatLaurent::monomial(Rational::one(), 1, 0)
    }

    pub fn var_w() -> Self {
        RatLaurent::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(coeff: Rational, exp_x: i64, exp_w: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((exp_x, exp_w), coeff);
        }
        RatLaurent { terms }
    }

    /// Sums an arbitrary term iterator into canonical form.
    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), Rational)>>(iter: I) -> Self {
        let mut p = RatLaurent::zero();
        for ((i, j), c) in iter {
            p.add_term(i, j, c);
        }
        p
    }

    fn add_term(&mut self, i: i64, j: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no exponent is negative, i.e. the value is an honest
    /// polynomial (holomorphic on the chart).
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i >= 0 && j >= 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `x^i w^j`, zero if absent.
    pub fn coeff(&self, exp_x: i64, exp_w: i64) -> Rational {
        self.terms
            .get(&(exp_x, exp_w))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RatLaurent::zero();
        }
        RatLaurent {
            terms: self
                .terms
                .iter()
                .map(|(&e, coeff)| (e, coeff * c))
                .collect(),
        }
    }

    /// Formal partial derivative. Laurent terms with exponent -1 in the
    /// derivation variable are differentiated like any other monomial; no
    /// logarithms arise in formal Laurent calculus.
    pub fn partial(&self, var: Var) -> Self {
        let mut out = RatLaurent::zero();
        for (&(i, j), c) in &self.terms {
            match var {
                Var::X => {
                    if i != 0 {
                        out.add_term(i - 1, j, c * &Rational::from_int(i));
                    }
                }
                Var::W => {
                    if j != 0 {
                        out.add_term(i, j - 1, c * &Rational::from_int(j));
                    }
                }
            }
        }
        out
    }

    /// Exact evaluation at a point. Fails with `EvalAtPole` when a variable
    /// carrying a negative exponent is zero at the point.
    pub fn eval(&self, x: &Rational, w: &Rational) -> Result<Rational, EvalError> {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            if i < 0 && x.is_zero() {
                return Err(EvalError::EvalAtPole {
                    var: Var::X,
                    exp: i,
                });
            }
            if j < 0 && w.is_zero() {
                return Err(EvalError::EvalAtPole {
                    var: Var::W,
                    exp: j,
                });
            }
            acc = &acc + &(c * &(&x.pow(i) * &w.pow(j)));
        }
        Ok(acc)
    }

    /// Substitutes `x -> image_x`, `w -> image_w` where both images are
    /// Laurent monomials, as in every chart change of the atlas. The result
    /// is exact and canonical.
    pub fn substitute(&self, image_x: &LaurentMonomial, image_w: &LaurentMonomial) -> Self {
        let mut out = RatLaurent::zero();
        for (&(i, j), c) in &self.terms {
            let (cx, xi, xj) = image_x.pow(i);
            let (cw, wi, wj) = image_w.pow(j);
            out.add_term(xi + wi, xj + wj, &(c * &cx) * &cw);
        }
        out
    }
}

impl Add for &RatLaurent {
    type Output = RatLaurent;
    fn add(self, rhs: &RatLaurent) -> RatLaurent {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &RatLaurent {
    type Output = RatLaurent;
    fn sub(self, rhs: &RatLaurent) -> RatLaurent {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Mul for &RatLaurent {
    type Output = RatLaurent;
    fn mul(self, rhs: &RatLaurent) -> RatLaurent {
        let mut out = RatLaurent::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &RatLaurent {
    type Output = RatLaurent;
    fn neg(self) -> RatLaurent {
        RatLaurent {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! laurent_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RatLaurent {
            type Output = RatLaurent;
            fn $method(self, rhs: RatLaurent) -> RatLaurent {
                (&self).$method(&rhs)
            }
        }
    };
}

laurent_owned_binop!(Add, add);
laurent_owned_binop!(Sub, sub);
laurent_owned_binop!(Mul, mul);

impl Neg for RatLaurent {
    type Output = RatLaurent;
    fn neg(self) -> RatLaurent {
        -&self
    }
}

// Term ordering for printing: graded lexicographic with x before w,
// leading (largest) term first.
fn grlex_key(e: (i64, i64)) -> (i64, i64) {
    (e.0 + e.1, e.0)
}

impl fmt::Display for RatLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<(i64, i64)> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&e| std::cmp::Reverse(grlex_key(e)));
        for (n, &(i, j)) in keys.iter().enumerate() {
            let c = &self.terms[&(i, j)];
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            if i != 0 {
                factors.push(if i == 1 { "x".into() } else { format!("x^{i}") });
            }
            if j != 0 {
                factors.push(if j == 1 { "w".into() } else { format!("w^{j}") });
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RatLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for RatLaurent {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Parser::new(s).parse()
    }
}

/// Recursive-descent parser for the textual form, e.g. `3/2*x^2*w - w^-1`.
struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<RatLaurent, ParseError> {
        let mut out = RatLaurent::zero();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(ParseError::UnexpectedEnd);
        }
        let mut sign = 1i64;
        if let Some(b) = self.peek() {
            if b == b'+' || b == b'-' {
                self.pos += 1;
                if b == b'-' {
                    sign = -1;
                }
            }
        }
        loop {
            let ((i, j), c) = self.parse_term()?;
            let signed = if sign < 0 { -&c } else { c };
            out.add_term(i, j, signed);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => {
                    sign = 1;
                    self.pos += 1;
                }
                Some(b'-') => {
                    sign = -1;
                    self.pos += 1;
                }
                Some(other) => {
                    return Err(ParseError::UnexpectedChar(other as char, self.pos));
                }
            }
        }
        Ok(out)
    }

    /// term := factor ('*' factor)*
    fn parse_term(&mut self) -> Result<((i64, i64), Rational), ParseError> {
        let mut coeff = Rational::one();
        let (mut ex, mut ew) = (0i64, 0i64);
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'x') | Some(b'w') => {
                    let var = self.bytes[self.pos];
                    self.pos += 1;
                    let exp = self.parse_exponent()?;
                    if var == b'x' {
                        ex += exp;
                    } else {
                        ew += exp;
                    }
                }
                Some(b) if b.is_ascii_digit() => {
                    coeff = &coeff * &self.parse_rational()?;
                }
                Some(other) => {
                    return Err(ParseError::UnexpectedChar(other as char, self.pos));
                }
                None => return Err(ParseError::UnexpectedEnd),
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(((ex, ew), coeff))
    }

    /// Optional `^` followed by a (possibly negative) integer; absent means 1.
    fn parse_exponent(&mut self) -> Result<i64, ParseError> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| ParseError::MissingExponent)
    }

    fn parse_rational(&mut self) -> Result<Rational, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let numer: BigInt = self.src[start..self.pos]
            .parse()
            .map_err(|_| ParseError::BadRational(self.src[start..self.pos].to_string()))?;
        // A '/' directly followed by digits is part of the literal.
        let save = self.pos;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let dstart = self.pos;
            while self.peek().is_some_and(|b| b.is_ascii_digit()) {
                self.pos += 1;
            }
            let denom: BigInt = self.src[dstart..self.pos]
                .parse()
                .map_err(|_| ParseError::BadRational(self.src[dstart..self.pos].to_string()))?;
            if denom.is_zero() {
                return Err(ParseError::BadRational(
                    self.src[start..self.pos].to_string(),
                ));
            }
            Ok(Rational::from_big(numer, denom))
        } else {
            self.pos = save;
            Ok(Rational::from_big(numer, BigInt::one()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> RatLaurent {
        s.parse().unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p("x") + &p("-x"), RatLaurent::zero());
        assert_eq!(&p("1 + x") + &p("w"), p("1 + x + w"));
        assert_eq!(&p("x^2*w") + &p("x^2*w"), p("2*x^2*w"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("x") * &p("x^-1"), RatLaurent::one());
        assert_eq!(&p("1 + x") * &p("1 - x"), p("1 - x^2"));
        assert_eq!(&p("x + w") * &p("x + w"), p("x^2 + 2*x*w + w^2"));
    }

    #[test]
    fn partial_examples() {
        assert_eq!(p("x^3").partial(Var::X), p("3*x^2"));
        assert_eq!(p("x^2*w").partial(Var::W), p("x^2"));
        assert_eq!(p("w^3").partial(Var::X), RatLaurent::zero());
        // Laurent terms differentiate formally.
        assert_eq!(p("x^-1").partial(Var::X), p("-x^-2"));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p("x + w").eval(&q("1"), &q("2")), Ok(q("3")));
        assert_eq!(
            p("x^-1").eval(&q("0"), &q("1")),
            Err(EvalError::EvalAtPole {
                var: Var::X,
                exp: -1
            })
        );
        assert_eq!(p("x^2*w").eval(&q("1/2"), &q("4")), Ok(q("1")));
    }

    #[test]
    fn eval_pole_only_when_variable_is_zero() {
        assert_eq!(p("x^-1*w").eval(&q("2"), &q("0")), Ok(q("0")));
    }

    #[test]
    fn substitute_examples() {
        // x -> 1/x', w -> w': x^2 -> x'^-2
        let inv_x = LaurentMonomial::new(Rational::one(), -1, 0);
        let id_w = LaurentMonomial::var_w();
        assert_eq!(p("x^2").substitute(&inv_x, &id_w), p("x^-2"));

        // x -> 1/x1, w -> w1/x1: x*w -> w1 * x1^-2
        let w_over_x = LaurentMonomial::new(Rational::one(), -1, 1);
        assert_eq!(p("x*w").substitute(&inv_x, &w_over_x), p("x^-2*w"));

        // identity substitution
        let id_x = LaurentMonomial::var_x();
        let poly = p("3/2*x^2*w - w^3 + x^-1");
        assert_eq!(poly.substitute(&id_x, &id_w), poly);
    }

    #[test]
    fn display_canonical_form() {
        assert_eq!(p("3/2*x^2*w - w^3").to_string(), "3/2*x^2*w - w^3");
        assert_eq!(RatLaurent::zero().to_string(), "0");
        assert_eq!(p("-x + 2").to_string(), "-x + 2");
        assert_eq!(p("x^-1").to_string(), "x^-1");
        assert_eq!(p("1*x").to_string(), "x");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(p("w*x").to_string(), "x*w");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<RatLaurent>().is_err());
        assert!("x +".parse::<RatLaurent>().is_err());
        assert!("y".parse::<RatLaurent>().is_err());
        assert!("1/0".parse::<RatLaurent>().is_err());
        assert!("x^".parse::<RatLaurent>().is_err());
        assert!("2x".parse::<RatLaurent>().is_err());
    }

    #[test]
    fn rational_parse_and_display() {
        assert_eq!(q("3/2").to_string(), "3/2");
        assert_eq!(q("-4/2").to_string(), "-2");
        assert_eq!(q("0/5"), Rational::zero());
        assert!("1/0".parse::<Rational>().is_err());
        assert!("a".parse::<Rational>().is_err());
    }

    #[test]
    fn rational_pow_negative() {
        assert_eq!(q("2/3").pow(-2), q("9/4"));
        assert_eq!(q("5").pow(0), Rational::one());
    }

    #[test]
    fn values_transfer_between_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Rational>();
        assert_send_sync::<RatLaurent>();
        assert_send_sync::<LaurentMonomial>();
    }
}
