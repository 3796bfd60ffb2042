//! Command-line surface over the library: parse inputs, dispatch the
//! computation, and emit deterministic text or JSON.

mod out;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use delpezzo::blowup::{check_generic, standard_points, BlowupError, PointConfig};
use delpezzo::calculus::{schouten_pi_v, BivectorField, VectorField};
use delpezzo::charts::{
    bivector_from_coeffs, global_bivector_basis, global_vector_basis, vector_from_coeffs,
};
use delpezzo::cohomology::{
    assemble_dpi_matrix, paper_matrix_crosscheck, pi_coeffs_from_ambient, poisson_cohomology,
    theorem_table, CohomologyError,
};
use delpezzo::{ProjectivePoint, Rational, SurfaceKind, SurfaceSpec};

use out::{
    matrix_strings, point_strings, BasisDoc, BracketDoc, CrosscheckDoc, ErrorDoc, GenericityDoc,
    ProfileDoc, TablesDoc,
};

#[derive(Parser)]
#[command(
    name = "delpezzo",
    about = "Exact Poisson cohomology of Poisson Del Pezzo surfaces",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct IoArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    output: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Poisson cohomology profile of a surface for a given bivector field
    Cohomology {
        /// Surface name: P2, P1xP1, or B1..B8
        #[arg(long)]
        surface: String,
        /// Blow-up points as `[z0,z1,z2] [z0,z1,z2] ...`; defaults to the
        /// standard configuration for Br
        #[arg(long)]
        points: Option<String>,
        /// Comma-separated rational coefficients of pi in the monomial
        /// basis (10 entries on P2-charted surfaces, 9 on P1xP1)
        #[arg(long)]
        pi: String,
        /// Include the assembled matrix in the output
        #[arg(long)]
        matrix: bool,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Schouten bracket [pi, v] of chart-level fields
    Bracket {
        /// Bivector coefficient as a polynomial in x and w, e.g. "x^2*w - 1"
        #[arg(long)]
        pi: String,
        /// Vector field in the form "f; g"
        #[arg(long)]
        vector: String,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Global section bases (P2, P1xP1) or vanishing subspace bases (Br)
    Basis {
        #[arg(long)]
        surface: String,
        #[arg(long)]
        points: Option<String>,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Genericity report for a point configuration
    Genericity {
        /// Points as `[z0,z1,z2] [z0,z1,z2] ...`
        #[arg(long)]
        points: String,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Cohomology profiles of all surfaces at standard configurations
    Tables {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Diff the computed matrix against the published symbolic matrix
    Crosscheck {
        #[arg(long)]
        surface: String,
        #[arg(long)]
        points: Option<String>,
        /// Comma-separated rational coefficients of pi in the monomial basis
        #[arg(long)]
        pi: String,
        /// Include both matrices in the output
        #[arg(long)]
        matrix: bool,
        #[command(flatten)]
        io: IoArgs,
    },
}

struct CliError {
    kind: &'static str,
    message: String,
}

impl CliError {
    fn parse(message: impl Into<String>) -> Self {
        CliError {
            kind: "parse",
            message: message.into(),
        }
    }
}

impl From<BlowupError> for CliError {
    fn from(err: BlowupError) -> Self {
        let kind = match err {
            BlowupError::InvalidPointCount(_) => "invalid-point-count",
            BlowupError::PointAtInfinity { .. } => "point-at-infinity",
            BlowupError::DuplicatePoint(..) => "duplicate-point",
            BlowupError::NotGeneric => "not-generic",
        };
        CliError {
            kind,
            message: err.to_string(),
        }
    }
}

impl From<CohomologyError> for CliError {
    fn from(err: CohomologyError) -> Self {
        match err {
            CohomologyError::Blowup(inner) => inner.into(),
            CohomologyError::DimensionMismatch { .. } => CliError {
                kind: "dimension-mismatch",
                message: err.to_string(),
            },
            CohomologyError::PiNotVanishing { .. } => CliError {
                kind: "pi-not-vanishing",
                message: err.to_string(),
            },
            CohomologyError::UnsupportedSurface(_) => CliError {
                kind: "unsupported-surface",
                message: err.to_string(),
            },
        }
    }
}

struct Rendered {
    text: String,
    json: String,
    /// Successful invocations that still signal failure, e.g. a
    /// non-generic configuration reported by `genericity`.
    failed: bool,
}

impl Rendered {
    fn ok(text: String, json: String) -> Self {
        Rendered {
            text,
            json,
            failed: false,
        }
    }
}

fn to_json<T: serde::Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("output documents serialize")
}

fn parse_rationals(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<Rational>()
                .map_err(|e| CliError::parse(format!("bad rational {:?}: {e}", part.trim())))
        })
        .collect()
}

fn parse_points(s: &str) -> Result<Vec<ProjectivePoint>, CliError> {
    let mut points = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let Some(open) = rest.find('[') else {
            return Err(CliError::parse(format!(
                "expected '[' in point list near {rest:?}"
            )));
        };
        let Some(close) = rest[open..].find(']') else {
            return Err(CliError::parse("unterminated '[' in point list"));
        };
        let inner = &rest[open + 1..open + close];
        let coords = parse_rationals(inner)?;
        let [z0, z1, z2]: [Rational; 3] = coords
            .try_into()
            .map_err(|_| CliError::parse(format!("point [{inner}] must have 3 coordinates")))?;
        points.push(
            ProjectivePoint::new(z0, z1, z2)
                .map_err(|e| CliError::parse(format!("bad point [{inner}]: {e}")))?,
        );
        rest = rest[open + close + 1..].trim_start();
    }
    if points.is_empty() {
        return Err(CliError::parse("empty point list"));
    }
    Ok(points)
}

fn parse_surface(name: &str, points: Option<&str>) -> Result<SurfaceSpec, CliError> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "p2" | "p1xp1" => {
            if points.is_some() {
                return Err(CliError::parse(format!("{name} takes no --points")));
            }
            Ok(if lower == "p2" {
                SurfaceSpec::p2()
            } else {
                SurfaceSpec::p1xp1()
            })
        }
        _ => {
            let r: usize = lower
                .strip_prefix('b')
                .and_then(|digits| digits.parse().ok())
                .filter(|r| (1..=8).contains(r))
                .ok_or_else(|| {
                    CliError::parse(format!(
                        "unknown surface {name:?}; expected P2, P1xP1, or B1..B8"
                    ))
                })?;
            let points = match points {
                Some(s) => {
                    let parsed = parse_points(s)?;
                    if parsed.len() != r {
                        return Err(CliError::parse(format!(
                            "surface B{r} needs {r} points, got {}",
                            parsed.len()
                        )));
                    }
                    parsed
                }
                None => standard_points(r)?,
            };
            Ok(SurfaceSpec::blowup(points)?)
        }
    }
}

fn run(command: &Command) -> Result<Rendered, CliError> {
    match command {
        Command::Cohomology {
            surface,
            points,
            pi,
            matrix,
            ..
        } => {
            let surface = parse_surface(surface, points.as_deref())?;
            let ambient = parse_rationals(pi)?;
            let coeffs = pi_coeffs_from_ambient(&surface, &ambient)?;
            let profile = poisson_cohomology(&surface, &coeffs)?;
            let assembled = matrix
                .then(|| assemble_dpi_matrix(&surface, &coeffs))
                .transpose()?;
            let doc = ProfileDoc::new(&profile, &ambient, assembled.as_ref());
            Ok(Rendered::ok(doc.render_text(), to_json(&doc)))
        }
        Command::Bracket { pi, vector, .. } => {
            let pi: BivectorField = pi
                .parse()
                .map_err(|e| CliError::parse(format!("bad bivector field: {e}")))?;
            let v: VectorField = vector
                .parse()
                .map_err(|e| CliError::parse(format!("bad vector field: {e}")))?;
            let bracket = schouten_pi_v(&pi, &v);
            let doc = BracketDoc {
                pi: pi.to_string(),
                vector: v.to_string(),
                bracket: bracket.to_string(),
            };
            Ok(Rendered::ok(doc.render_text(), to_json(&doc)))
        }
        Command::Basis {
            surface, points, ..
        } => {
            let surface = parse_surface(surface, points.as_deref())?;
            let doc = basis_doc(&surface)?;
            Ok(Rendered::ok(doc.render_text(), to_json(&doc)))
        }
        Command::Genericity { points, .. } => {
            let parsed = parse_points(points)?;
            let config = PointConfig::new(parsed)?;
            let report = check_generic(config.points())?;
            let doc = GenericityDoc::new(&config, &report);
            let failed = !doc.generic;
            Ok(Rendered {
                text: doc.render_text(),
                json: to_json(&doc),
                failed,
            })
        }
        Command::Tables { .. } => {
            let rows = theorem_table()
                .iter()
                .map(|row| ProfileDoc::new(&row.profile, &row.pi_ambient, None))
                .collect();
            let doc = TablesDoc { rows };
            Ok(Rendered::ok(doc.render_text(), to_json(&doc)))
        }
        Command::Crosscheck {
            surface,
            points,
            pi,
            matrix,
            ..
        } => {
            let surface = parse_surface(surface, points.as_deref())?;
            let ambient = parse_rationals(pi)?;
            let report = paper_matrix_crosscheck(&surface, &ambient)?;
            let doc = CrosscheckDoc::new(&report, &ambient, *matrix);
            Ok(Rendered::ok(doc.render_text(), to_json(&doc)))
        }
    }
}

fn basis_doc(surface: &SurfaceSpec) -> Result<BasisDoc, CliError> {
    let kind = surface.chart_kind();
    match surface.blowup_config() {
        None => Ok(BasisDoc {
            surface: surface.name(),
            points: None,
            vector_basis: global_vector_basis(kind)
                .iter()
                .map(VectorField::to_string)
                .collect(),
            bivector_basis: global_bivector_basis(kind)
                .iter()
                .map(BivectorField::to_string)
                .collect(),
            vector_coeffs: None,
            bivector_coeffs: None,
        }),
        Some(cfg) => {
            let vectors = delpezzo::blowup::vanishing_vector_subspace(cfg)?;
            let bivectors = delpezzo::blowup::vanishing_bivector_subspace(cfg)?;
            Ok(BasisDoc {
                surface: surface.name(),
                points: Some(point_strings(cfg.points())),
                vector_basis: vectors
                    .basis()
                    .iter()
                    .map(|b| vector_from_coeffs(SurfaceKind::P2, b).to_string())
                    .collect(),
                bivector_basis: bivectors
                    .basis()
                    .iter()
                    .map(|a| bivector_from_coeffs(SurfaceKind::P2, a).to_string())
                    .collect(),
                vector_coeffs: Some(matrix_strings(vectors.basis())),
                bivector_coeffs: Some(matrix_strings(bivectors.basis())),
            })
        }
    }
}

fn io_args(command: &Command) -> &IoArgs {
    match command {
        Command::Cohomology { io, .. }
        | Command::Bracket { io, .. }
        | Command::Basis { io, .. }
        | Command::Genericity { io, .. }
        | Command::Tables { io }
        | Command::Crosscheck { io, .. } => io,
    }
}

fn emit(io: &IoArgs, content: &str) -> Result<(), CliError> {
    let mut payload = content.to_string();
    payload.push('\n');
    match &io.output {
        Some(path) => fs::write(path, payload)
            .map_err(|e| CliError::parse(format!("cannot write {path}: {e}"))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let io = io_args(&cli.command);
    match run(&cli.command) {
        Ok(rendered) => {
            let content = match io.format {
                Format::Text => &rendered.text,
                Format::Json => &rendered.json,
            };
            if let Err(err) = emit(io, content) {
                eprintln!("error: {}", err.message);
                return ExitCode::FAILURE;
            }
            if rendered.failed {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            match io.format {
                Format::Json => {
                    let doc = ErrorDoc::new(err.kind, err.message);
                    println!("{}", to_json(&doc));
                }
                Format::Text => eprintln!("error [{}]: {}", err.kind, err.message),
            }
            ExitCode::FAILURE
        }
    }
}
