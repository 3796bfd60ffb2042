//! Serializable output documents and their canonical rendering.
//!
//! JSON mode emits one compact document per invocation with fixed key
//! order and canonical rational strings, so identical requests produce
//! byte-identical output and parse/re-serialize round-trips exactly.

use serde::{Deserialize, Serialize};

use delpezzo::blowup::{independent_on_cubics, GenericityReport, PointConfig};
use delpezzo::cohomology::{CohomologyProfile, CrosscheckReport, DpiMatrix};
use delpezzo::{ProjectivePoint, Rational};

pub fn rational_strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(Rational::to_string).collect()
}

pub fn point_strings(points: &[ProjectivePoint]) -> Vec<[String; 3]> {
    points
        .iter()
        .map(|p| {
            let c = p.coords();
            [c[0].to_string(), c[1].to_string(), c[2].to_string()]
        })
        .collect()
}

pub fn matrix_strings(entries: &[Vec<Rational>]) -> Vec<Vec<String>> {
    entries.iter().map(|row| rational_strings(row)).collect()
}

#[derive(Serialize, Deserialize)]
pub struct ProfileDoc {
    pub surface: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<[String; 3]>>,
    pub pi: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    pub dims: [usize; 3],
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
}

impl ProfileDoc {
    pub fn new(
        profile: &CohomologyProfile,
        pi_ambient: &[Rational],
        matrix: Option<&DpiMatrix>,
    ) -> Self {
        ProfileDoc {
            surface: profile.surface.name(),
            points: profile
                .surface
                .blowup_config()
                .map(|cfg| point_strings(cfg.points())),
            pi: rational_strings(pi_ambient),
            rank: profile.rank,
            dims: profile.dims,
            method: profile.method.to_string(),
            matrix: matrix.map(|m| matrix_strings(m.entries())),
        }
    }

    pub fn render_text(&self) -> String {
        let mut lines = vec![format!("surface: {}", self.surface)];
        if let Some(points) = &self.points {
            lines.push(format!("points: {}", join_points(points)));
        }
        lines.push(format!("pi: {}", self.pi.join(",")));
        match self.rank {
            Some(rank) => lines.push(format!("rank: {rank}")),
            None => lines.push("rank: -".to_string()),
        }
        lines.push(format!(
            "dims: ({}, {}, {})",
            self.dims[0], self.dims[1], self.dims[2]
        ));
        lines.push(format!("method: {}", self.method));
        if let Some(matrix) = &self.matrix {
            lines.push(format!(
                "matrix ({}x{}):",
                matrix.len(),
                matrix.first().map_or(0, Vec::len)
            ));
            for row in matrix {
                lines.push(format!("  [{}]", row.join(", ")));
            }
        }
        lines.join("\n")
    }
}

pub fn join_points(points: &[[String; 3]]) -> String {
    points
        .iter()
        .map(|p| format!("[{},{},{}]", p[0], p[1], p[2]))
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize, Deserialize)]
pub struct BracketDoc {
    pub pi: String,
    pub vector: String,
    pub bracket: String,
}

impl BracketDoc {
    pub fn render_text(&self) -> String {
        format!(
            "pi: {}\nvector: {}\n[pi, v]: {}",
            self.pi, self.vector, self.bracket
        )
    }
}

#[derive(Serialize, Deserialize)]
pub struct BasisDoc {
    pub surface: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<[String; 3]>>,
    pub vector_basis: Vec<String>,
    pub bivector_basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vector_coeffs: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bivector_coeffs: Option<Vec<Vec<String>>>,
}

impl BasisDoc {
    pub fn render_text(&self) -> String {
        let mut lines = vec![format!("surface: {}", self.surface)];
        if let Some(points) = &self.points {
            lines.push(format!("points: {}", join_points(points)));
        }
        lines.push(format!("vector fields ({}):", self.vector_basis.len()));
        for v in &self.vector_basis {
            lines.push(format!("  {v}"));
        }
        lines.push(format!("bivector fields ({}):", self.bivector_basis.len()));
        for b in &self.bivector_basis {
            lines.push(format!("  {b}"));
        }
        lines.join("\n")
    }
}

#[derive(Serialize, Deserialize)]
pub struct GenericityDoc {
    pub points: Vec<[String; 3]>,
    pub no_three_colinear: bool,
    pub no_six_on_conic: bool,
    pub independent_on_cubics: bool,
    pub generic: bool,
}

impl GenericityDoc {
    pub fn new(config: &PointConfig, report: &GenericityReport) -> Self {
        GenericityDoc {
            points: point_strings(config.points()),
            no_three_colinear: report.no_three_colinear,
            no_six_on_conic: report.no_six_on_conic,
            independent_on_cubics: independent_on_cubics(config),
            generic: report.is_generic(),
        }
    }

    pub fn render_text(&self) -> String {
        [
            format!("points: {}", join_points(&self.points)),
            format!("no-three-colinear: {}", self.no_three_colinear),
            format!("no-six-on-conic: {}", self.no_six_on_conic),
            format!("independent-on-cubics: {}", self.independent_on_cubics),
            format!("generic: {}", self.generic),
        ]
        .join("\n")
    }
}

#[derive(Serialize, Deserialize)]
pub struct TablesDoc {
    pub rows: Vec<ProfileDoc>,
}

impl TablesDoc {
    pub fn render_text(&self) -> String {
        self.rows
            .iter()
            .map(|row| {
                let rank = row.rank.map_or("-".to_string(), |r| r.to_string());
                format!(
                    "{}: ({}, {}, {})  rank={}  method={}  pi={}",
                    row.surface,
                    row.dims[0],
                    row.dims[1],
                    row.dims[2],
                    rank,
                    row.method,
                    row.pi.join(",")
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[derive(Serialize, Deserialize)]
pub struct DiscrepancyDoc {
    pub row: usize,
    pub col: usize,
    pub computed: String,
    pub transcribed: String,
}

#[derive(Serialize, Deserialize)]
pub struct CrosscheckDoc {
    pub surface: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<[String; 3]>>,
    pub pi: Vec<String>,
    pub rows: usize,
    pub cols: usize,
    pub basis_note: String,
    pub discrepancies: Vec<DiscrepancyDoc>,
    pub clean: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transcribed: Option<Vec<Vec<String>>>,
}

impl CrosscheckDoc {
    pub fn new(report: &CrosscheckReport, pi_ambient: &[Rational], include_matrices: bool) -> Self {
        CrosscheckDoc {
            surface: report.surface.name(),
            points: report
                .surface
                .blowup_config()
                .map(|cfg| point_strings(cfg.points())),
            pi: rational_strings(pi_ambient),
            rows: report.computed.rows(),
            cols: report.computed.cols(),
            basis_note: report.basis_note.clone(),
            discrepancies: report
                .discrepancies
                .iter()
                .map(|d| DiscrepancyDoc {
                    row: d.row,
                    col: d.col,
                    computed: d.computed.to_string(),
                    transcribed: d.transcribed.to_string(),
                })
                .collect(),
            clean: report.is_clean(),
            computed: include_matrices.then(|| matrix_strings(report.computed.entries())),
            transcribed: include_matrices.then(|| matrix_strings(&report.transcribed)),
        }
    }

    pub fn render_text(&self) -> String {
        let mut lines = vec![format!("surface: {}", self.surface)];
        if let Some(points) = &self.points {
            lines.push(format!("points: {}", join_points(points)));
        }
        lines.push(format!("pi: {}", self.pi.join(",")));
        lines.push(format!("matrix: {}x{}", self.rows, self.cols));
        lines.push(format!("bases: {}", self.basis_note));
        if self.clean {
            lines.push("discrepancies: none".to_string());
        } else {
            lines.push(format!("discrepancies: {}", self.discrepancies.len()));
            for d in &self.discrepancies {
                lines.push(format!(
                    "  ({}, {}): computed {} vs transcribed {}",
                    d.row, d.col, d.computed, d.transcribed
                ));
            }
        }
        if let Some(matrix) = &self.computed {
            lines.push("computed:".to_string());
            for row in matrix {
                lines.push(format!("  [{}]", row.join(", ")));
            }
        }
        if let Some(matrix) = &self.transcribed {
            lines.push("transcribed:".to_string());
            for row in matrix {
                lines.push(format!("  [{}]", row.join(", ")));
            }
        }
        lines.join("\n")
    }
}

#[derive(Serialize, Deserialize)]
pub struct ErrorDoc {
    pub error: ErrorBody,
}

#[derive(Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

impl ErrorDoc {
    pub fn new(kind: &str, message: String) -> Self {
        ErrorDoc {
            error: ErrorBody {
                kind: kind.to_string(),
                message,
            },
        }
    }
}
