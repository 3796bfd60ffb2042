//! Vector fields, bivector fields, and the Schouten/Lie bracket calculus on
//! a single two-dimensional affine chart.
//!
//! On a chart with coordinates `(x, w)` a vector field is
//! `v = f dx + g dw` and a bivector field is `pi = h dx^dw`. In two
//! dimensions every bivector is a Poisson structure since `[pi, pi]` lives
//! in the zero bundle of trivectors, so no trivector type exists here and
//! `H^i` for `i > 2` vanishes structurally.

use std::fmt;
use std::str::FromStr;

use crate::ratpoly::{EvalError, ParseError, RatLaurent, Rational, Var};

/// `f * d/dx + g * d/dw` with Laurent polynomial components.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct VectorField {
    pub f: RatLaurent,
    pub g: RatLaurent,
}

/// `h * d/dx ^ d/dw` with a Laurent polynomial coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivectorField {
    pub h: RatLaurent,
}

impl VectorField {
    pub fn new(f: RatLaurent, g: RatLaurent) -> Self {
        VectorField { f, g }
    }

    pub fn zero() -> Self {
        VectorField::default()
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.f.is_polynomial() && self.g.is_polynomial()
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        VectorField::new(&self.f + &other.f, &self.g + &other.g)
    }

    pub fn scale(&self, c: &Rational) -> VectorField {
        VectorField::new(self.f.scale(c), self.g.scale(c))
    }

    /// Componentwise evaluation at a point.
    pub fn eval(&self, x: &Rational, w: &Rational) -> Result<(Rational, Rational), EvalError> {
        Ok((self.f.eval(x, w)?, self.g.eval(x, w)?))
    }
}

impl BivectorField {
    pub fn new(h: RatLaurent) -> Self {
        BivectorField { h }
    }

    pub fn zero() -> Self {
        BivectorField::default()
    }

    pub fn is_zero(&self) -> bool {
        self.h.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.h.is_polynomial()
    }

    pub fn add(&self, other: &BivectorField) -> BivectorField {
        BivectorField::new(&self.h + &other.h)
    }

    pub fn scale(&self, c: &Rational) -> BivectorField {
        BivectorField::new(self.h.scale(c))
    }

    pub fn eval(&self, x: &Rational, w: &Rational) -> Result<Rational, EvalError> {
        self.h.eval(x, w)
    }
}

/// Schouten bracket `[pi, v]` of a bivector with a vector field:
///
/// `[h dx^dw, f dx + g dw] = ((h f_x - f h_x) + (h g_w - g h_w)) dx^dw`.
pub fn schouten_pi_v(pi: &BivectorField, v: &VectorField) -> BivectorField {
    let h = &pi.h;
    let x_part = &(h * &v.f.partial(Var::X)) - &(&v.f * &h.partial(Var::X));
    let w_part = &(h * &v.g.partial(Var::W)) - &(&v.g * &h.partial(Var::W));
    BivectorField::new(&x_part + &w_part)
}

/// Lie bracket `[v, u]` of two vector fields, components `v(u_i) - u(v_i)`.
pub fn lie_bracket(v: &VectorField, u: &VectorField) -> VectorField {
    let apply = |field: &VectorField, target: &RatLaurent| -> RatLaurent {
        &(&field.f * &target.partial(Var::X)) + &(&field.g * &target.partial(Var::W))
    };
    VectorField::new(
        &apply(v, &u.f) - &apply(u, &v.f),
        &apply(v, &u.g) - &apply(u, &v.g),
    )
}

/// Schouten bracket of a bivector with a function, the `O -> T` leg of the
/// Poisson complex. Sign convention fixed as
///
/// `[h dx^dw, phi] = h (phi_x dw - phi_w dx)`,
///
/// the unique choice (up to global sign of the complex) making
/// `schouten_pi_v(pi, schouten_pi_f(pi, phi)) = 0` hold identically with
/// the `[pi, v]` formula above; that compatibility is asserted by tests.
pub fn schouten_pi_f(pi: &BivectorField, phi: &RatLaurent) -> VectorField {
    let h = &pi.h;
    VectorField::new(-&(h * &phi.partial(Var::W)), h * &phi.partial(Var::X))
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; {}", self.f, self.g)
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) dx + ({}) dw", self.f, self.g)
    }
}

impl FromStr for VectorField {
    type Err = ParseError;

    /// Parses the textual form `f; g`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (f, g) = s.split_once(';').ok_or(ParseError::BadVectorField)?;
        Ok(VectorField::new(f.trim().parse()?, g.trim().parse()?))
    }
}

impl fmt::Display for BivectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.h)
    }
}

impl fmt::Debug for BivectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) dx^dw", self.h)
    }
}

impl FromStr for BivectorField {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Ok(BivectorField::new(s.parse()?))
    }
}
