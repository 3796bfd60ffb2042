//! Atlases for `CP^2` and `CP^1 x CP^1`: chart changes for fields, global
//! section tests, and the ordered global bases.
//!
//! All public field data lives in one distinguished chart per surface (`U0`
//! for `CP^2`, `U1` for `CP^1 x CP^1`); the remaining charts exist only
//! inside the transform tables. Each transform is stored explicitly as a
//! pair of coordinate images (Laurent monomials), the chain-rule images of
//! the coordinate vector fields, and the Jacobian determinant, all
//! verifiable by hand.

use std::fmt;

use thiserror::Error;

use crate::blowup::{check_generic, BlowupError, PointConfig};
use crate::calculus::{BivectorField, VectorField};
use crate::ratpoly::{LaurentMonomial, RatLaurent, Rational};

/// The two surfaces carrying an atlas. Blow-ups are handled on the `P2`
/// atlas through the pushforward identification.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SurfaceKind {
    P2,
    P1xP1,
}

/// A point of `CP^2` in homogeneous coordinates, stored normalized so the
/// first nonzero coordinate equals 1.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjectivePoint {
    coords: [Rational; 3],
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PointError {
    #[error("projective point needs a nonzero coordinate")]
    AllZero,
}

impl ProjectivePoint {
    pub fn new(z0: Rational, z1: Rational, z2: Rational) -> Result<Self, PointError> {
        let coords = [z0, z1, z2];
        let Some(first) = coords.iter().position(|c| !c.is_zero()) else {
            return Err(PointError::AllZero);
        };
        let inv = coords[first].recip();
        Ok(ProjectivePoint {
            coords: [&coords[0] * &inv, &coords[1] * &inv, &coords[2] * &inv],
        })
    }

    pub fn from_ints(z0: i64, z1: i64, z2: i64) -> Result<Self, PointError> {
        ProjectivePoint::new(
            Rational::from_int(z0),
            Rational::from_int(z1),
            Rational::from_int(z2),
        )
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.coords
    }

    /// Affine coordinates `(z1/z0, z2/z0)` in the chart `U0`, if defined.
    pub fn affine_u0(&self) -> Option<(Rational, Rational)> {
        if self.coords[0].is_zero() {
            return None;
        }
        // Normalization already scaled z0 to 1.
        Some((self.coords[1].clone(), self.coords[2].clone()))
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{}]",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Which Del Pezzo surface a computation runs on.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceSpec {
    inner: SurfaceInner,
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum SurfaceInner {
    P2,
    P1xP1,
    Blowup(PointConfig),
}

impl SurfaceSpec {
    pub fn p2() -> Self {
        SurfaceSpec {
            inner: SurfaceInner::P2,
        }
    }

    pub fn p1xp1() -> Self {
        SurfaceSpec {
            inner: SurfaceInner::P1xP1,
        }
    }

    /// Blow-up of `CP^2` at the given points. The configuration must be
    /// valid (1..=8 points away from the line at infinity, pairwise
    /// distinct) and generic.
    pub fn blowup(points: Vec<ProjectivePoint>) -> Result<Self, BlowupError> {
        let config = PointConfig::new(points)?;
        let report = check_generic(config.points())?;
        if !report.is_generic() {
            return Err(BlowupError::NotGeneric);
        }
        Ok(SurfaceSpec {
            inner: SurfaceInner::Blowup(config),
        })
    }

    /// Blow-up at the built-in standard configuration for the given `r`.
    pub fn blowup_standard(r: usize) -> Result<Self, BlowupError> {
        SurfaceSpec::blowup(crate::blowup::standard_points(r)?)
    }

    /// The atlas global sections are realized on: `P2` for blow-ups.
    pub fn chart_kind(&self) -> SurfaceKind {
        match self.inner {
            SurfaceInner::P1xP1 => SurfaceKind::P1xP1,
            _ => SurfaceKind::P2,
        }
    }

    pub fn is_blowup(&self) -> bool {
        matches!(self.inner, SurfaceInner::Blowup(_))
    }

    pub fn blowup_config(&self) -> Option<&PointConfig> {
        match &self.inner {
            SurfaceInner::Blowup(cfg) => Some(cfg),
            _ => None,
        }
    }

    /// Number of blow-up points (`0` for `P2` and `P1xP1`).
    pub fn num_blowup_points(&self) -> usize {
        self.blowup_config().map_or(0, |cfg| cfg.len())
    }

    pub fn name(&self) -> String {
        match &self.inner {
            SurfaceInner::P2 => "P2".to_string(),
            SurfaceInner::P1xP1 => "P1xP1".to_string(),
            SurfaceInner::Blowup(cfg) => format!("B{}", cfg.len()),
        }
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Index into the atlas: `U0..U2` for `P2`, `U1..U4` for `P1xP1`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct ChartId(u8);

impl ChartId {
    pub fn new(kind: SurfaceKind, index: u8) -> Option<ChartId> {
        let valid = match kind {
            SurfaceKind::P2 => index <= 2,
            SurfaceKind::P1xP1 => (1..=4).contains(&index),
        };
        valid.then_some(ChartId(index))
    }

    pub fn index(self) -> u8 {
        self.0
    }
}

impl fmt::Display for ChartId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U{}", self.0)
    }
}

/// All charts of the atlas, distinguished chart first.
pub fn charts_of(kind: SurfaceKind) -> Vec<ChartId> {
    match kind {
        SurfaceKind::P2 => vec![ChartId(0), ChartId(1), ChartId(2)],
        SurfaceKind::P1xP1 => vec![ChartId(1), ChartId(2), ChartId(3), ChartId(4)],
    }
}

/// `U0` for `P2`, `U1` for `P1xP1`; all public field data lives here.
pub fn distinguished_chart(kind: SurfaceKind) -> ChartId {
    match kind {
        SurfaceKind::P2 => ChartId(0),
        SurfaceKind::P1xP1 => ChartId(1),
    }
}

/// Chart-change data: images of the old coordinates, chain-rule images of
/// the old coordinate fields, and the Jacobian determinant, all written in
/// the target chart's coordinates.
struct ChartTransform {
    subst_x: LaurentMonomial,
    subst_w: LaurentMonomial,
    dx_image: VectorField,
    dw_image: VectorField,
    jacobian: RatLaurent,
}

fn mono(c: i64, i: i64, j: i64) -> RatLaurent {
    RatLaurent::monomial(Rational::from_int(c), i, j)
}

fn lmono(i: i64, j: i64) -> LaurentMonomial {
    LaurentMonomial::new(Rational::one(), i, j)
}

fn identity_transform() -> ChartTransform {
    ChartTransform {
        subst_x: LaurentMonomial::var_x(),
        subst_w: LaurentMonomial::var_w(),
        dx_image: VectorField::new(RatLaurent::one(), RatLaurent::zero()),
        dw_image: VectorField::new(RatLaurent::zero(), RatLaurent::one()),
        jacobian: RatLaurent::one(),
    }
}

/// `P2` charts: U0 = (z1/z0, z2/z0), U1 = (z0/z1, z2/z1), U2 = (z0/z2, z1/z2).
fn p2_transform(from: u8, to: u8) -> ChartTransform {
    match (from, to) {
        // x_old = 1/x, w_old = w/x; d/dx_old = -x^2 dx - xw dw; d/dw_old = x dw.
        (0, 1) | (1, 0) => ChartTransform {
            subst_x: lmono(-1, 0),
            subst_w: lmono(-1, 1),
            dx_image: VectorField::new(mono(-1, 2, 0), mono(-1, 1, 1)),
            dw_image: VectorField::new(RatLaurent::zero(), mono(1, 1, 0)),
            jacobian: mono(-1, 3, 0),
        },
        // x_old = w/x, w_old = 1/x; d/dx_old = x dw; d/dw_old = -x^2 dx - xw dw.
        (0, 2) => ChartTransform {
            subst_x: lmono(-1, 1),
            subst_w: lmono(-1, 0),
            dx_image: VectorField::new(RatLaurent::zero(), mono(1, 1, 0)),
            dw_image: VectorField::new(mono(-1, 2, 0), mono(-1, 1, 1)),
            jacobian: mono(1, 3, 0),
        },
        // x_old = 1/w, w_old = x/w; d/dx_old = -xw dx - w^2 dw; d/dw_old = w dx.
        (2, 0) => ChartTransform {
            subst_x: lmono(0, -1),
            subst_w: lmono(1, -1),
            dx_image: VectorField::new(mono(-1, 1, 1), mono(-1, 0, 2)),
            dw_image: VectorField::new(mono(1, 0, 1), RatLaurent::zero()),
            jacobian: mono(1, 0, 3),
        },
        // x_old = x/w, w_old = 1/w; d/dx_old = w dx; d/dw_old = -xw dx - w^2 dw.
        (1, 2) | (2, 1) => ChartTransform {
            subst_x: lmono(1, -1),
            subst_w: lmono(0, -1),
            dx_image: VectorField::new(mono(1, 0, 1), RatLaurent::zero()),
            dw_image: VectorField::new(mono(-1, 1, 1), mono(-1, 0, 2)),
            jacobian: mono(-1, 0, 3),
        },
        _ => identity_transform(),
    }
}

/// `P1xP1` charts differ factorwise: U1 = (+,+), U2 = (-,+), U3 = (+,-),
/// U4 = (-,-), a sign flip meaning `t -> 1/t` in that factor.
fn p1xp1_transform(from: u8, to: u8) -> ChartTransform {
    let factor = |idx: u8| ((idx - 1) & 1 != 0, (idx - 1) & 2 != 0);
    let (fx, fw) = factor(from);
    let (tx, tw) = factor(to);
    let flip_x = fx != tx;
    let flip_w = fw != tw;
    let jac_x = if flip_x {
        mono(-1, 2, 0)
    } else {
        RatLaurent::one()
    };
    let jac_w = if flip_w {
        mono(-1, 0, 2)
    } else {
        RatLaurent::one()
    };
    ChartTransform {
        subst_x: lmono(if flip_x { -1 } else { 1 }, 0),
        subst_w: lmono(0, if flip_w { -1 } else { 1 }),
        dx_image: VectorField::new(jac_x.clone(), RatLaurent::zero()),
        dw_image: VectorField::new(RatLaurent::zero(), jac_w.clone()),
        jacobian: &jac_x * &jac_w,
    }
}

fn transform(kind: SurfaceKind, from: ChartId, to: ChartId) -> ChartTransform {
    assert!(
        ChartId::new(kind, from.0).is_some() && ChartId::new(kind, to.0).is_some(),
        "chart {from}/{to} invalid for {kind:?}"
    );
    if from == to {
        return identity_transform();
    }
    match kind {
        SurfaceKind::P2 => p2_transform(from.0, to.0),
        SurfaceKind::P1xP1 => p1xp1_transform(from.0, to.0),
    }
}

/// Expresses `v` (given on chart `from`) in the coordinates of chart `to`,
/// as a Laurent vector field; always defined.
pub fn transform_vector(
    kind: SurfaceKind,
    from: ChartId,
    to: ChartId,
    v: &VectorField,
) -> VectorField {
    let t = transform(kind, from, to);
    let f = v.f.substitute(&t.subst_x, &t.subst_w);
    let g = v.g.substitute(&t.subst_x, &t.subst_w);
    VectorField::new(
        &(&f * &t.dx_image.f) + &(&g * &t.dw_image.f),
        &(&f * &t.dx_image.g) + &(&g * &t.dw_image.g),
    )
}

/// Expresses `pi` in the target chart: the coefficient is pulled through
/// the substitution and multiplied by the Jacobian determinant.
pub fn transform_bivector(
    kind: SurfaceKind,
    from: ChartId,
    to: ChartId,
    pi: &BivectorField,
) -> BivectorField {
    let t = transform(kind, from, to);
    BivectorField::new(&pi.h.substitute(&t.subst_x, &t.subst_w) * &t.jacobian)
}

/// True iff `v` (on the distinguished chart) extends holomorphically to
/// the whole surface, i.e. every chart transform is polynomial.
pub fn is_global_vector(kind: SurfaceKind, v: &VectorField) -> bool {
    let dist = distinguished_chart(kind);
    charts_of(kind)
        .into_iter()
        .all(|c| transform_vector(kind, dist, c, v).is_polynomial())
}

/// Bivector analogue of [`is_global_vector`].
pub fn is_global_bivector(kind: SurfaceKind, pi: &BivectorField) -> bool {
    let dist = distinguished_chart(kind);
    charts_of(kind)
        .into_iter()
        .all(|c| transform_bivector(kind, dist, c, pi).is_polynomial())
}

/// Exponent pairs of the global bivector monomial basis, in order:
/// bidegree at most `(2,2)` for `P1xP1` (9 monomials), total degree at
/// most 3 for `P2` (10 monomials).
pub fn bivector_monomials(kind: SurfaceKind) -> Vec<(i64, i64)> {
    match kind {
        SurfaceKind::P1xP1 => vec![
            (0, 0),
            (1, 0),
            (2, 0),
            (0, 1),
            (1, 1),
            (2, 1),
            (0, 2),
            (1, 2),
            (2, 2),
        ],
        SurfaceKind::P2 => vec![
            (0, 0),
            (1, 0),
            (0, 1),
            (2, 0),
            (1, 1),
            (0, 2),
            (3, 0),
            (2, 1),
            (1, 2),
            (0, 3),
        ],
    }
}

/// The ordered basis of global vector fields: 6 for `P1xP1`, 8 for `P2`.
/// The last two `P2` elements couple the components.
pub fn global_vector_basis(kind: SurfaceKind) -> Vec<VectorField> {
    let vf = |fi: &[(i64, i64)], gi: &[(i64, i64)]| {
        VectorField::new(
            RatLaurent::from_terms(fi.iter().map(|&e| (e, Rational::one()))),
            RatLaurent::from_terms(gi.iter().map(|&e| (e, Rational::one()))),
        )
    };
    match kind {
        SurfaceKind::P1xP1 => vec![
            vf(&[(0, 0)], &[]),
            vf(&[(1, 0)], &[]),
            vf(&[(2, 0)], &[]),
            vf(&[], &[(0, 0)]),
            vf(&[], &[(0, 1)]),
            vf(&[], &[(0, 2)]),
        ],
        SurfaceKind::P2 => vec![
            vf(&[(0, 0)], &[]),
            vf(&[(1, 0)], &[]),
            vf(&[(0, 1)], &[]),
            vf(&[], &[(0, 0)]),
            vf(&[], &[(1, 0)]),
            vf(&[], &[(0, 1)]),
            vf(&[(2, 0)], &[(1, 1)]),
            vf(&[(1, 1)], &[(0, 2)]),
        ],
    }
}

/// The ordered monomial basis of global bivector fields: 9 for `P1xP1`,
/// 10 for `P2`.
pub fn global_bivector_basis(kind: SurfaceKind) -> Vec<BivectorField> {
    bivector_monomials(kind)
        .into_iter()
        .map(|(i, j)| BivectorField::new(RatLaurent::monomial(Rational::one(), i, j)))
        .collect()
}

/// Linear combination of the global vector basis with the given
/// coefficients (`b_i` in the basis order). Panics on length mismatch.
pub fn vector_from_coeffs(kind: SurfaceKind, coeffs: &[Rational]) -> VectorField {
    let basis = global_vector_basis(kind);
    assert_eq!(coeffs.len(), basis.len(), "coefficient count mismatch");
    basis
        .iter()
        .zip(coeffs)
        .fold(VectorField::zero(), |acc, (b, c)| acc.add(&b.scale(c)))
}

/// Linear combination of the global bivector monomials (`a_i` order).
pub fn bivector_from_coeffs(kind: SurfaceKind, coeffs: &[Rational]) -> BivectorField {
    let monomials = bivector_monomials(kind);
    assert_eq!(coeffs.len(), monomials.len(), "coefficient count mismatch");
    BivectorField::new(RatLaurent::from_terms(
        monomials.into_iter().zip(coeffs.iter().cloned()),
    ))
}

/// Coordinates of `pi` in the global bivector monomial basis, or `None`
/// when some term of `pi` falls outside the basis support.
pub fn bivector_coeffs(kind: SurfaceKind, pi: &BivectorField) -> Option<Vec<Rational>> {
    let monomials = bivector_monomials(kind);
    let mut coeffs = vec![Rational::zero(); monomials.len()];
    for (exp, c) in pi.h.terms() {
        let pos = monomials.iter().position(|&m| m == exp)?;
        coeffs[pos] = c.clone();
    }
    Some(coeffs)
}
