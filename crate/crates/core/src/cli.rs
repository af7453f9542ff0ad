//! Data-emitting commands behind the `cq-discord` binary.
//!
//! Each command writes a CSV stream (single header row, comma separator,
//! 12 significant digits, empty cells for missing values) to any
//! [`std::io::Write`], so the binary stays a thin argument parser and the
//! commands can be driven directly from tests and examples.

use std::f64::consts::PI;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use num_complex::Complex64;
use serde::Deserialize;
use thiserror::Error;

use crate::channels::{amplitude_damping, apply_local, trajectory};
use crate::correlations::{
    delta_tilde, discord_numeric, ellipse_domain, minimize_delta, CorrelationReport, MeshOptions,
};
use crate::qmat::{BlochVector, ComplexMatrix, DensityOperator, Subsystem};
use crate::states::{CanonicalParams, CqState};

/// Upper bound on sweep and grid sizes.
pub const MAX_POINTS: usize = 100_000;
/// Largest |analytic − numeric| accepted by `evolve --check`.
pub const CHECK_TOL: f64 = 1e-4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Validation(String),
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("check failed: {0}")]
    Check(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Core(#[from] crate::Error),
}

impl CliError {
    /// 2 for usage and validation problems, 1 for internal or check failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Validation(_) | CliError::Read { .. } => 2,
            CliError::Check(_) | CliError::Io(_) | CliError::Csv(_) | CliError::Core(_) => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Formats like C's `%.12g`.
pub fn format_sig(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..DIGITS).contains(&exp) {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        trim_zeros(&format!("{:.*}", (DIGITS - 1 - exp) as usize, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn cell(x: Option<f64>) -> String {
    x.map(format_sig).unwrap_or_default()
}

/// `n` evenly spaced values from `lo` to `hi`, both included.
fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| if i + 1 == n { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
}

fn check_points(name: &str, n: usize, min: usize) -> CliResult<()> {
    if n < min || n > MAX_POINTS {
        return Err(CliError::Usage(format!("{name} must lie in [{min}, {MAX_POINTS}], got {n}")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Analytic,
    Numeric,
    Both,
}

/// Parameters of a damping sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub points: usize,
    pub p_min: f64,
    pub p_max: f64,
    /// Relaxation rate; adds a physical-time column when set.
    pub gamma: Option<f64>,
    pub method: Method,
    pub mesh: MeshOptions,
    /// Fail when analytic and numeric rows disagree by more than [`CHECK_TOL`].
    pub check: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            points: 201,
            p_min: 0.0,
            p_max: 1.0,
            gamma: None,
            method: Method::Analytic,
            mesh: MeshOptions::default(),
            check: false,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> CliResult<()> {
        check_points("points", self.points, 2)?;
        let unit = |v: f64| (0.0..=1.0).contains(&v);
        if !unit(self.p_min) || !unit(self.p_max) || self.p_min >= self.p_max {
            return Err(CliError::Usage(format!(
                "need 0 <= p_min < p_max <= 1, got p_min={}, p_max={}",
                self.p_min, self.p_max
            )));
        }
        if let Some(g) = self.gamma {
            if !(g > 0.0 && g.is_finite()) {
                return Err(CliError::Usage(format!("gamma must be positive, got {g}")));
            }
        }
        if self.mesh.n_theta < 8 || self.mesh.n_phi < 16 {
            return Err(CliError::Usage("mesh needs n_theta >= 8 and n_phi >= 16".into()));
        }
        Ok(())
    }
}

/// One row of an evolve sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolveRow {
    pub p: f64,
    pub s: f64,
    pub phi: f64,
    pub analytic: Option<CorrelationReport>,
    pub numeric: Option<CorrelationReport>,
}

impl EvolveRow {
    /// Largest of the discord, classical and mutual disagreements.
    pub fn abs_diff(&self) -> Option<f64> {
        let (a, n) = (self.analytic?, self.numeric?);
        Some(
            (a.discord - n.discord)
                .abs()
                .max((a.classical - n.classical).abs())
                .max((a.mutual - n.mutual).abs()),
        )
    }
}

/// Correlations of the damped initial state at each p of the sweep.
pub fn evolve_rows(cfg: &SweepConfig) -> CliResult<Vec<EvolveRow>> {
    cfg.validate()?;
    let rho0 = CqState::initial_classical().assemble();
    linspace(cfg.p_min, cfg.p_max, cfg.points)
        .map(|p| {
            let point = trajectory(p)?;
            let kraus = amplitude_damping(p)?;
            let analytic = match cfg.method {
                Method::Numeric => None,
                _ => {
                    let params = CanonicalParams::equal(point.s, point.phi)?;
                    Some(CorrelationReport::analytic(&params)?)
                }
            };
            let numeric = match cfg.method {
                Method::Analytic => None,
                _ => Some(discord_numeric(&apply_local(&rho0, &kraus, Subsystem::B)?, Subsystem::B, &cfg.mesh)?),
            };
            Ok(EvolveRow { p, s: point.s, phi: point.phi, analytic, numeric })
        })
        .collect()
}

/// Writes the damping sweep. Returns the rows that were written.
pub fn cmd_evolve<W: Write>(cfg: &SweepConfig, out: W) -> CliResult<Vec<EvolveRow>> {
    let rows = evolve_rows(cfg)?;
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["p", "gamma_t"];
    if cfg.gamma.is_some() {
        header.push("t");
    }
    header.extend(["s", "phi", "discord", "classical", "mutual"]);
    if cfg.method == Method::Both {
        header.extend(["discord_numeric", "classical_numeric", "mutual_numeric", "abs_diff"]);
    }
    w.write_record(&header)?;

    let mut worst: Option<(f64, f64)> = None;
    for row in &rows {
        let gamma_t = (row.p < 1.0).then(|| -(-row.p).ln_1p());
        let mut rec = vec![format_sig(row.p), cell(gamma_t)];
        if let Some(g) = cfg.gamma {
            rec.push(cell(gamma_t.map(|gt| gt / g)));
        }
        rec.push(format_sig(row.s));
        rec.push(format_sig(row.phi));
        let primary = row.analytic.or(row.numeric).expect("at least one method");
        rec.extend([primary.discord, primary.classical, primary.mutual].map(format_sig));
        if cfg.method == Method::Both {
            let n = row.numeric.expect("numeric requested");
            rec.extend([n.discord, n.classical, n.mutual].map(format_sig));
            let diff = row.abs_diff().expect("both methods");
            rec.push(format_sig(diff));
            if worst.is_none_or(|(_, d)| diff > d) {
                worst = Some((row.p, diff));
            }
        }
        w.write_record(&rec)?;
    }
    w.flush()?;

    if cfg.check {
        if let Some((p, diff)) = worst.filter(|&(_, d)| d > CHECK_TOL) {
            return Err(CliError::Check(format!(
                "analytic and numeric differ by {diff:e} at p = {p} (tolerance {CHECK_TOL:e})"
            )));
        }
    }
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Discord,
    Classical,
}

/// A grid point and its value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePeak {
    pub s: f64,
    pub phi: f64,
    pub value: f64,
}

/// Discord or classical correlations over s ∈ [0, 1], φ ∈ [0, π], followed by
/// a `max` row (first grid point attaining the maximum).
pub fn cmd_surface<W: Write>(n_s: usize, n_phi: usize, quantity: Quantity, out: W) -> CliResult<SurfacePeak> {
    check_points("ns", n_s, 2)?;
    check_points("nphi", n_phi, 2)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["kind", "s", "phi", "value"])?;
    let mut peak = SurfacePeak { s: 0.0, phi: 0.0, value: f64::NEG_INFINITY };
    for s in linspace(0.0, 1.0, n_s) {
        for phi in linspace(0.0, PI, n_phi) {
            let report = CorrelationReport::analytic(&CanonicalParams::equal(s, phi)?)?;
            let value = match quantity {
                Quantity::Discord => report.discord,
                Quantity::Classical => report.classical,
            };
            if value > peak.value {
                peak = SurfacePeak { s, phi, value };
            }
            w.write_record(["grid".to_string(), format_sig(s), format_sig(phi), format_sig(value)])?;
        }
    }
    w.write_record(["max".to_string(), format_sig(peak.s), format_sig(peak.phi), format_sig(peak.value)])?;
    w.flush()?;
    Ok(peak)
}

/// Where δ̃ was minimized, when a parameter set was given.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaMinimum {
    pub x: f64,
    pub y: f64,
    pub value: f64,
    /// The ellipse collapsed to a segment.
    pub degenerate: bool,
}

/// Samples δ̃ on an n × n grid over [−1, 1]².
///
/// Without `params`, cells outside |x| + |y| ≤ 1 are left empty. With
/// `params`, cells outside the measurement ellipse are left empty and a `min`
/// row is appended. A collapsed ellipse prints a warning to `warn` and samples
/// the segment instead.
pub fn cmd_delta_surface<W: Write, E: Write>(
    n: usize,
    params: Option<CanonicalParams>,
    out: W,
    mut warn: E,
) -> CliResult<Option<DeltaMinimum>> {
    check_points("n", n, 2)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["kind", "x", "y", "delta"])?;
    let write_row = |w: &mut csv::Writer<W>, kind: &str, x: f64, y: f64, v: Option<f64>| -> CliResult<()> {
        w.write_record([kind.to_string(), format_sig(x), format_sig(y), cell(v)])?;
        Ok(())
    };

    let Some(params) = params else {
        for x in linspace(-1.0, 1.0, n) {
            for y in linspace(-1.0, 1.0, n) {
                write_row(&mut w, "grid", x, y, delta_tilde(x, y).ok())?;
            }
        }
        w.flush()?;
        return Ok(None);
    };

    let min = minimize_delta(&params);
    let degenerate = match ellipse_domain(&params) {
        Ok(dom) => {
            for x in linspace(-1.0, 1.0, n) {
                for y in linspace(-1.0, 1.0, n) {
                    let inside = dom.quadratic_form(x, y) <= 1.0 + 1e-12;
                    write_row(&mut w, "grid", x, y, if inside { delta_tilde(x, y).ok() } else { None })?;
                }
            }
            false
        }
        Err(e) => {
            writeln!(warn, "warning: {e}; sampling the collapsed segment instead")?;
            let k = params.coefficients();
            for t in linspace(-1.0, 1.0, n) {
                let (x, y) = (t * k.a3, t * k.b3);
                write_row(&mut w, "segment", x, y, delta_tilde(x, y).ok())?;
            }
            true
        }
    };
    write_row(&mut w, "min", min.x, min.y, Some(min.value))?;
    w.flush()?;
    Ok(Some(DeltaMinimum { x: min.x, y: min.y, value: min.value, degenerate }))
}

/// Bloch-plane trajectories of the damped |+⟩ and |−⟩ states.
pub fn cmd_trajectory<W: Write>(points: usize, out: W) -> CliResult<()> {
    check_points("points", points, 2)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["p", "x_plus", "z_plus", "x_minus", "z_minus"])?;
    for p in linspace(0.0, 1.0, points) {
        let t = trajectory(p)?;
        w.write_record(
            [p, t.bloch_plus.x(), t.bloch_plus.z(), t.bloch_minus.x(), t.bloch_minus.z()].map(format_sig),
        )?;
    }
    w.flush()?;
    Ok(())
}

/// A two-qubit state read from disk.
#[derive(Debug, Clone, Copy, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum StateFile {
    /// An explicit 4×4 density matrix.
    Matrix(DensityOperator),
    /// A classical-quantum state given by the Bloch vectors of τ₀ and τ₁.
    Cq(CqState),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CqSpec {
    bloch0: [f64; 3],
    bloch1: [f64; 3],
}

impl StateFile {
    /// Parses either a TOML cq-spec (`bloch0 = [x, y, z]`, `bloch1 = [...]`)
    /// or four lines of eight numbers (re, im interleaved). `#` starts a comment
    /// in the matrix form.
    pub fn parse(text: &str) -> CliResult<Self> {
        if text.contains('=') {
            let spec: CqSpec =
                toml::from_str(text).map_err(|e| CliError::Validation(format!("malformed cq-spec: {e}")))?;
            let vec = |name: &str, v: [f64; 3]| {
                BlochVector::new(v[0], v[1], v[2]).map_err(|e| CliError::Validation(format!("{name}: {e}")))
            };
            let cq = CqState::from_bloch(&vec("bloch0", spec.bloch0)?, &vec("bloch1", spec.bloch1)?)?;
            return Ok(StateFile::Cq(cq));
        }

        let rows: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .collect();
        if rows.len() != 4 {
            return Err(CliError::Validation(format!("matrix file needs 4 rows, found {}", rows.len())));
        }
        let mut entries = Vec::with_capacity(16);
        for (r, line) in rows.iter().enumerate() {
            let nums = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<f64>()
                        .ok()
                        .filter(|v| v.is_finite())
                        .ok_or_else(|| CliError::Validation(format!("row {}: malformed number {t:?}", r + 1)))
                })
                .collect::<CliResult<Vec<f64>>>()?;
            if nums.len() != 8 {
                return Err(CliError::Validation(format!(
                    "row {}: expected 8 numbers (re, im pairs), found {}",
                    r + 1,
                    nums.len()
                )));
            }
            entries.extend(nums.chunks(2).map(|c| Complex64::new(c[0], c[1])));
        }
        let m = ComplexMatrix::from_row_major(4, &entries)?;
        let rho = DensityOperator::new(m).map_err(|e| CliError::Validation(e.to_string()))?;
        Ok(StateFile::Matrix(rho))
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn density(&self) -> DensityOperator {
        match self {
            StateFile::Matrix(rho) => *rho,
            StateFile::Cq(cq) => cq.assemble(),
        }
    }
}

/// Numeric discord of a state file, printed as `key = value` lines.
pub fn cmd_discord<W: Write>(
    input: &Path,
    measured: Subsystem,
    mesh: &MeshOptions,
    mut out: W,
) -> CliResult<CorrelationReport> {
    let mesh = MeshOptions::new(mesh.n_theta, mesh.n_phi, mesh.refine).map_err(|e| CliError::Usage(e.to_string()))?;
    let rho = StateFile::load(input)?.density();
    let report = discord_numeric(&rho, measured, &mesh)?;
    let basis = report.argmin_basis.expect("numeric search reports a basis");
    writeln!(out, "measured = \"{measured}\"")?;
    writeln!(out, "discord = {}", format_sig(report.discord))?;
    writeln!(out, "classical = {}", format_sig(report.classical))?;
    writeln!(out, "mutual = {}", format_sig(report.mutual))?;
    writeln!(out, "theta = {}", format_sig(basis.theta()))?;
    writeln!(out, "phi_m = {}", format_sig(basis.phi_m()))?;
    Ok(report)
}
