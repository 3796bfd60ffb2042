//! Genericity predicates for point configurations and the vanishing
//! subspaces realizing global fields on blow-ups of `CP^2`.
//!
//! Global vector (resp. bivector) fields on the blow-up at points `p_i`
//! correspond, under pushforward along the projection, to global fields on
//! `CP^2` vanishing at every `p_i`. Both subspaces are computed exactly as
//! nullspaces of evaluation matrices in the global coefficient coordinates.

use std::fmt;

use thiserror::Error;

use crate::charts::{global_bivector_basis, global_vector_basis, ProjectivePoint, SurfaceKind};
use crate::linalg;
use crate::ratpoly::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlowupError {
    #[error("blow-up takes 1..=8 points, got {0}")]
    InvalidPointCount(usize),
    #[error("point {index} ({point}) lies on the line z0 = 0; configurations must sit inside the chart U0")]
    PointAtInfinity { index: usize, point: String },
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("point configuration is not generic")]
    NotGeneric,
}

/// A validated list of 1..=8 pairwise distinct points inside `U0`.
/// Genericity is a separate, reported property; see [`check_generic`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointConfig {
    points: Vec<ProjectivePoint>,
}

impl PointConfig {
    pub fn new(points: Vec<ProjectivePoint>) -> Result<Self, BlowupError> {
        if points.is_empty() || points.len() > 8 {
            return Err(BlowupError::InvalidPointCount(points.len()));
        }
        for (i, p) in points.iter().enumerate() {
            if p.affine_u0().is_none() {
                return Err(BlowupError::PointAtInfinity {
                    index: i,
                    point: p.to_string(),
                });
            }
        }
        if let Some((i, j)) = find_duplicate(&points) {
            return Err(BlowupError::DuplicatePoint(i, j));
        }
        Ok(PointConfig { points })
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Affine `U0` coordinates of every point; total by construction.
    pub fn affine_points(&self) -> Vec<(Rational, Rational)> {
        self.points
            .iter()
            .map(|p| p.affine_u0().expect("validated inside U0"))
            .collect()
    }
}

fn find_duplicate(points: &[ProjectivePoint]) -> Option<(usize, usize)> {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i] == points[j] {
                return Some((i, j));
            }
        }
    }
    None
}

/// Outcome of the two genericity tests. Tests with no applicable subset
/// (fewer than 3 or 6 points) hold vacuously.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityReport {
    pub no_three_colinear: bool,
    pub no_six_on_conic: bool,
}

impl GenericityReport {
    pub fn is_generic(&self) -> bool {
        self.no_three_colinear && self.no_six_on_conic
    }
}

impl fmt::Display for GenericityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no-three-colinear: {}, no-six-on-conic: {}, generic: {}",
            self.no_three_colinear,
            self.no_six_on_conic,
            self.is_generic()
        )
    }
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        start: usize,
        n: usize,
        chosen: &mut Vec<usize>,
        k: usize,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if chosen.len() == k {
            return f(chosen);
        }
        for i in start..n {
            chosen.push(i);
            if !rec(i + 1, n, chosen, k, f) {
                return false;
            }
            chosen.pop();
        }
        true
    }
    rec(0, n, &mut Vec::new(), k, &mut f)
}

/// Runs the genericity tests of the classification: every 3-subset spans
/// (no three colinear) and no 6-subset lies on a common conic. Coincident
/// points are rejected outright.
pub fn check_generic(points: &[ProjectivePoint]) -> Result<GenericityReport, BlowupError> {
    if let Some((i, j)) = find_duplicate(points) {
        return Err(BlowupError::DuplicatePoint(i, j));
    }
    let homog: Vec<Vec<Rational>> = points.iter().map(|p| p.coords().to_vec()).collect();
    let no_three_colinear = for_each_subset(points.len(), 3, |idx| {
        let rows: Vec<Vec<Rational>> = idx.iter().map(|&i| homog[i].clone()).collect();
        linalg::exact_rank(&rows) == 3
    });
    let conic_rows: Vec<Vec<Rational>> = points.iter().map(conic_row).collect();
    let no_six_on_conic = for_each_subset(points.len(), 6, |idx| {
        let rows: Vec<Vec<Rational>> = idx.iter().map(|&i| conic_rows[i].clone()).collect();
        linalg::exact_rank(&rows) == 6
    });
    Ok(GenericityReport {
        no_three_colinear,
        no_six_on_conic,
    })
}

/// The six conic monomials z0^2, z0 z1, z0 z2, z1^2, z1 z2, z2^2 at `p`.
fn conic_row(p: &ProjectivePoint) -> Vec<Rational> {
    let [z0, z1, z2] = p.coords();
    vec![z0 * z0, z0 * z1, z0 * z2, z1 * z1, z1 * z2, z2 * z2]
}

/// True iff the `r x 10` matrix of cubic monomials evaluated at the points
/// has full rank `r`, i.e. the points impose independent conditions on
/// cubics. With every point normalized into `U0` the homogeneous cubics
/// restrict to the ten affine monomials of the global bivector basis.
pub fn independent_on_cubics(cfg: &PointConfig) -> bool {
    linalg::exact_rank(&bivector_evaluation_matrix(cfg)) == cfg.len()
}

fn bivector_evaluation_matrix(cfg: &PointConfig) -> Vec<Vec<Rational>> {
    let basis = global_bivector_basis(SurfaceKind::P2);
    cfg.affine_points()
        .iter()
        .map(|(x, w)| {
            basis
                .iter()
                .map(|b| b.eval(x, w).expect("monomials have no poles"))
                .collect()
        })
        .collect()
}

fn vector_evaluation_matrix(cfg: &PointConfig) -> Vec<Vec<Rational>> {
    let basis = global_vector_basis(SurfaceKind::P2);
    let mut rows = Vec::with_capacity(2 * cfg.len());
    for (x, w) in cfg.affine_points() {
        let (mut f_row, mut g_row) = (Vec::new(), Vec::new());
        for b in &basis {
            let (fv, gv) = b.eval(&x, &w).expect("polynomial basis");
            f_row.push(fv);
            g_row.push(gv);
        }
        rows.push(f_row);
        rows.push(g_row);
    }
    rows
}

/// Which global section space a vanishing subspace sits in.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum AmbientSpace {
    /// Coefficients `b_1..b_8` of global vector fields on `CP^2`.
    VectorFieldsOnP2,
    /// Coefficients `a_1..a_10` of global bivector fields on `CP^2`.
    BivectorFieldsOnP2,
}

impl AmbientSpace {
    pub fn dim(self) -> usize {
        match self {
            AmbientSpace::VectorFieldsOnP2 => 8,
            AmbientSpace::BivectorFieldsOnP2 => 10,
        }
    }
}

/// Basis of the global fields on `CP^2` vanishing at every configuration
/// point, in the ambient coefficient coordinates. Basis vectors come from
/// deterministic elimination and are scaled to primitive integer form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingSubspace {
    ambient: AmbientSpace,
    basis: Vec<Vec<Rational>>,
}

impl VanishingSubspace {
    pub fn ambient(&self) -> AmbientSpace {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Ambient coefficient vector of the element with the given subspace
    /// coordinates. Panics on length mismatch.
    pub fn ambient_vector(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.dim(), "coordinate count mismatch");
        let mut out = vec![Rational::zero(); self.ambient.dim()];
        for (b, c) in self.basis.iter().zip(coords) {
            for (o, e) in out.iter_mut().zip(b) {
                *o = &*o + &(e * c);
            }
        }
        out
    }

    /// Subspace coordinates of an ambient vector, or `None` when it lies
    /// outside the subspace.
    pub fn coordinates_of(&self, ambient: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(ambient.len(), self.ambient.dim(), "ambient dim mismatch");
        linalg::solve_in_span(&self.basis, ambient)
    }
}

fn vanishing_subspace(
    cfg: &PointConfig,
    ambient: AmbientSpace,
    rows: Vec<Vec<Rational>>,
) -> Result<VanishingSubspace, BlowupError> {
    let report = check_generic(cfg.points())?;
    if !report.is_generic() {
        return Err(BlowupError::NotGeneric);
    }
    Ok(VanishingSubspace {
        ambient,
        basis: linalg::nullspace_basis(&rows),
    })
}

/// Bivector fields on `CP^2` vanishing at the configuration; dimension
/// `10 - r` for generic configurations.
pub fn vanishing_bivector_subspace(cfg: &PointConfig) -> Result<VanishingSubspace, BlowupError> {
    vanishing_subspace(
        cfg,
        AmbientSpace::BivectorFieldsOnP2,
        bivector_evaluation_matrix(cfg),
    )
}

/// Vector fields on `CP^2` vanishing at the configuration; dimension
/// `max(8 - 2r, 0)` for generic configurations.
pub fn vanishing_vector_subspace(cfg: &PointConfig) -> Result<VanishingSubspace, BlowupError> {
    vanishing_subspace(
        cfg,
        AmbientSpace::VectorFieldsOnP2,
        vector_evaluation_matrix(cfg),
    )
}

/// The built-in standard configuration: the four classical points
/// `[1,0,0], [1,1,0], [1,0,1], [1,1,1]` extended by four more rational
/// points chosen once and verified generic by the test suite.
pub fn standard_points(r: usize) -> Result<Vec<ProjectivePoint>, BlowupError> {
    if r == 0 || r > 8 {
        return Err(BlowupError::InvalidPointCount(r));
    }
    let all: [(i64, i64, i64); 8] = [
        (1, 0, 0),
        (1, 1, 0),
        (1, 0, 1),
        (1, 1, 1),
        (1, 2, 5),
        (1, 7, 3),
        (1, -3, 5),
        (1, 11, 13),
    ];
    Ok(all[..r]
        .iter()
        .map(|&(a, b, c)| ProjectivePoint::from_ints(a, b, c).expect("nonzero"))
        .collect())
}
