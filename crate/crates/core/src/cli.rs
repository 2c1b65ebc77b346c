//! Command-line front end. Every subcommand prints deterministic JSON (or a
//! bare integer for the germ commands) and maps failures onto the exit codes
//! 0 success, 1 input error, 2 inconsistent scene, 3 invariance breach.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::closed::{
    analyze_multiple_cover, analyze_nodal_split, cn_closed, cp2_row, delta_closed, disjointness_verdict,
    vdim_closed, ClosedError,
};
use crate::germs::{
    delta_local, double_point_radius, intersection_radius, local_intersection, numeric_double_point_oracle,
    numeric_intersection_oracle, Germ, GermError, DEFAULT_EPSILON,
};
use crate::intersection::{
    adjunction_defect, automatic_transversality, fredholm_index, foliation_criteria, iota_infinity, normal_chern,
    spectral_covering_total, star, IntersectionError,
};
use crate::json::to_canonical_string;
use crate::model::{euler_char, shift_scene, sigma_bar, ModelError, Scene, Sign, TrivializationShift};
use crate::spectrum::{alphas_from_spectrum, assemble, eigen_window, SpectralLoop, SpectrumError, DEFAULT_CUTOFF};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INCONSISTENT: i32 = 2;
pub const EXIT_BREACH: i32 = 3;

/// Eigenvalue window reported by `spectrum` when `--window` is absent.
pub const DEFAULT_WINDOW: (f64, f64) = (-4.0 * std::f64::consts::PI, 4.0 * std::f64::consts::PI);

#[derive(Parser, Debug)]
#[command(name = "siefring-kit", version, about = "Intersection invariants of punctured holomorphic curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Spectrum, windings and extremal windings of a loop of symmetric matrices.
    Spectrum {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: usize,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        window: Option<Vec<f64>>,
    },
    /// Invariants of one curve in a scene.
    Curve { scene: PathBuf, id: String },
    /// The homotopy-invariant pairing of two curves, and optionally the count
    /// hidden at infinity given a geometric intersection count.
    Star {
        scene: PathBuf,
        u: String,
        v: String,
        geometric: Option<i64>,
    },
    /// Local intersection and double-point numbers of polynomial germs.
    #[command(subcommand)]
    Germ(GermCommand),
    /// Closed-curve adjunction arithmetic.
    #[command(subcommand)]
    Closed(ClosedCommand),
    /// Applies random trivialization shifts and checks that every
    /// trivialization-independent quantity is unchanged.
    Audit {
        scene: PathBuf,
        #[arg(long, default_value_t = 50)]
        shifts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum GermCommand {
    /// Exact local intersection number of two germs.
    Iota { a: PathBuf, b: PathBuf },
    /// Exact double-point count of a simple germ.
    Delta { a: PathBuf },
    /// Numerical count after a small perturbation: intersections with a
    /// second germ, or double points when only one is given.
    Oracle { a: PathBuf, b: Option<PathBuf> },
}

#[derive(Subcommand, Debug)]
enum ClosedCommand {
    /// Adjunction table of a rational curve of the given degree in the projective plane.
    Cp2 {
        #[arg(long)]
        degree: u32,
    },
    /// Virtual dimension, normal Chern number and double points of a closed class.
    Delta(ClosedClassArgs),
    /// Deduces the shape of a nodal splitting of a sphere class.
    #[command(allow_negative_numbers = true)]
    Nodal {
        total_self: i64,
        total_c1: i64,
        c1_plus: i64,
        c1_minus: i64,
    },
    /// Decides whether a class can be a multiple cover of a simple sphere.
    #[command(allow_negative_numbers = true)]
    Cover { total_self: i64, total_c1: i64, k: i64 },
    /// Positivity verdict for the pairing of two distinct curves.
    #[command(allow_negative_numbers = true)]
    Disjoint { pairing: i64 },
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
struct ClosedClassArgs {
    self_pairing: i64,
    c1: i64,
    #[arg(default_value_t = 0)]
    genus: u32,
    /// Half the real dimension of the ambient manifold.
    #[arg(default_value_t = 2)]
    n: u32,
}

/// Failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<ModelError> for Failure {
    fn from(e: ModelError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<IntersectionError> for Failure {
    fn from(e: IntersectionError) -> Self {
        let code = if e.is_inconsistency() {
            EXIT_INCONSISTENT
        } else {
            EXIT_INPUT
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<SpectrumError> for Failure {
    fn from(e: SpectrumError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<GermError> for Failure {
    fn from(e: GermError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<ClosedError> for Failure {
    fn from(e: ClosedError) -> Self {
        let code = match e {
            ClosedError::InvalidInput(_) => EXIT_INPUT,
            _ => EXIT_INCONSISTENT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Output of a successful parse: what to print and the exit code. A report
/// can still carry a nonzero code (inconsistent curve, audit breach).
struct Outcome {
    stdout: String,
    code: i32,
    stderr: Option<String>,
}

impl Outcome {
    fn json(v: &Value) -> Self {
        Outcome {
            stdout: to_canonical_string(v),
            code: EXIT_OK,
            stderr: None,
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing to the given streams. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(o) => {
            let _ = write!(out, "{}", o.stdout);
            if let Some(msg) = o.stderr {
                let _ = writeln!(err, "error: {msg}");
            }
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Spectrum { file, cutoff, window } => cmd_spectrum(&file, cutoff, window.as_deref()),
        Command::Curve { scene, id } => cmd_curve(&Scene::from_path(scene)?, &id),
        Command::Star { scene, u, v, geometric } => cmd_star(&Scene::from_path(scene)?, &u, &v, geometric),
        Command::Germ(g) => cmd_germ(g),
        Command::Closed(c) => cmd_closed(c),
        Command::Audit { scene, shifts, seed } => {
            let label = scene.display().to_string();
            cmd_audit(&Scene::from_path(scene)?, &label, shifts, seed)
        }
    }
}

fn cmd_spectrum(file: &std::path::Path, cutoff: usize, window: Option<&[f64]>) -> Result<Outcome, Failure> {
    let lp = SpectralLoop::from_path(file)?;
    let op = assemble(&lp, cutoff)?;
    let (lo, hi) = match window {
        Some(&[lo, hi]) => (lo, hi),
        Some(_) => return Err(Failure::input("--window takes two numbers")),
        None => {
            let r = op.resolved_radius();
            (DEFAULT_WINDOW.0.max(-r), DEFAULT_WINDOW.1.min(r))
        }
    };
    let pairs = eigen_window(&op, lo, hi)?;
    let alphas = alphas_from_spectrum(&op)?;
    let eigenvalues: Vec<f64> = pairs.iter().map(|p| p.eigenvalue).collect();
    let windings: Vec<i64> = pairs.iter().map(|p| p.winding).collect();
    Ok(Outcome::json(&json!({
        "cutoff": cutoff,
        "window": [lo, hi],
        "eigenvalues": eigenvalues,
        "windings": windings,
        "alpha_minus": alphas.alpha_minus,
        "alpha_plus": alphas.alpha_plus,
        "parity": alphas.parity,
        "cz": alphas.cz,
    })))
}

/// `Ok(None)` when the quantity needs a pairing the scene does not list.
fn optional<T>(r: Result<T, IntersectionError>) -> Result<Option<T>, IntersectionError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(IntersectionError::Model(ModelError::MissingPairing(..))) => Ok(None),
        Err(e) => Err(e),
    }
}

/// The per-curve report; shared with the tests and the audit.
pub fn curve_report(scene: &Scene, id: &str) -> Result<(Value, Vec<String>), IntersectionError> {
    let c = scene.curve(id)?;
    let mut inconsistencies = Vec::new();
    let adjunction = if c.simple {
        match optional(adjunction_defect(scene, id)) {
            Ok(v) => v.map(Value::from).unwrap_or(Value::Null),
            Err(e) if e.is_inconsistency() => {
                inconsistencies.push(e.to_string());
                Value::Null
            }
            Err(e) => return Err(e),
        }
    } else {
        Value::Null
    };
    let transversality = if c.ambient_dim_half == 2 {
        Value::from(automatic_transversality(scene, id)?.regular)
    } else {
        Value::Null
    };
    let report = json!({
        "curve": id,
        "index": fredholm_index(scene, id)?,
        "chi": euler_char(c),
        "c_N": normal_chern(scene, id)?,
        "sigma_bar_total": spectral_covering_total(scene, id)?,
        "star_self": optional(star(scene, id, id))?,
        "adjunction_defect": adjunction,
        "automatic_transversality": transversality,
        "foliation": serde_json::to_value(foliation_criteria(scene, id)?).expect("report serializes"),
        "inconsistencies": inconsistencies,
    });
    Ok((report, inconsistencies))
}

fn cmd_curve(scene: &Scene, id: &str) -> Result<Outcome, Failure> {
    let (report, inconsistencies) = curve_report(scene, id)?;
    let mut o = Outcome::json(&report);
    if !inconsistencies.is_empty() {
        o.code = EXIT_INCONSISTENT;
        o.stderr = Some(format!("inconsistent scene: {}", inconsistencies.join("; ")));
    }
    Ok(o)
}

fn cmd_star(scene: &Scene, u: &str, v: &str, geometric: Option<i64>) -> Result<Outcome, Failure> {
    let s = star(scene, u, v)?;
    let hidden = match geometric {
        Some(g) => Value::from(iota_infinity(scene, u, v, g)?),
        None => Value::Null,
    };
    Ok(Outcome::json(&json!({
        "u": u,
        "v": v,
        "bullet": scene.bullet(u, v)?,
        "star": s,
        "geometric": geometric,
        "iota_infinity": hidden,
    })))
}

fn oracle_epsilon() -> Complex64 {
    Complex64::from_polar(DEFAULT_EPSILON, 0.7)
}

fn cmd_germ(cmd: GermCommand) -> Result<Outcome, Failure> {
    let n = match cmd {
        GermCommand::Iota { a, b } => local_intersection(&Germ::from_path(a)?, &Germ::from_path(b)?)?,
        GermCommand::Delta { a } => delta_local(&Germ::from_path(a)?)?,
        GermCommand::Oracle { a, b: Some(b) } => {
            let (u, v) = (Germ::from_path(a)?, Germ::from_path(b)?);
            numeric_intersection_oracle(&u, &v, oracle_epsilon(), intersection_radius(&u, &v)?)?
        }
        GermCommand::Oracle { a, b: None } => {
            let u = Germ::from_path(a)?;
            numeric_double_point_oracle(&u, oracle_epsilon(), double_point_radius(&u)?)?
        }
    };
    Ok(Outcome {
        stdout: format!("{n}\n"),
        code: EXIT_OK,
        stderr: None,
    })
}

fn cmd_closed(cmd: ClosedCommand) -> Result<Outcome, Failure> {
    let v = match cmd {
        ClosedCommand::Cp2 { degree } => serde_json::to_value(cp2_row(degree)?),
        ClosedCommand::Delta(a) => {
            if a.n < 2 {
                return Err(Failure::input(format!("n must be at least 2, got {}", a.n)));
            }
            let delta = delta_closed(a.self_pairing, a.c1, a.genus)?;
            Ok(json!({
                "self_pairing": a.self_pairing,
                "c1": a.c1,
                "genus": a.genus,
                "vdim": vdim_closed(a.n, a.genus, a.c1),
                "c_N": cn_closed(a.c1, a.genus),
                "delta": delta,
                "embedded": delta == 0,
            }))
        }
        ClosedCommand::Nodal {
            total_self,
            total_c1,
            c1_plus,
            c1_minus,
        } => serde_json::to_value(analyze_nodal_split(total_self, total_c1, (c1_plus, c1_minus))?),
        ClosedCommand::Cover { total_self, total_c1, k } => {
            serde_json::to_value(analyze_multiple_cover(total_self, total_c1, k)?)
        }
        ClosedCommand::Disjoint { pairing } => {
            Ok(json!({ "pairing": pairing, "verdict": disjointness_verdict(pairing)? }))
        }
    };
    Ok(Outcome::json(&v.expect("report serializes")))
}

/// Every trivialization-independent quantity of a scene, keyed by name.
/// Errors are recorded as values so that their invariance is checked too.
fn invariants(scene: &Scene) -> Vec<(String, String)> {
    fn show<T: std::fmt::Debug, E: std::fmt::Display>(r: Result<T, E>) -> String {
        match r {
            Ok(v) => format!("{v:?}"),
            Err(e) => format!("error: {e}"),
        }
    }
    let mut out = Vec::new();
    for c in scene.curves() {
        let id = c.id.as_str();
        out.push((format!("index({id})"), show(fredholm_index(scene, id))));
        out.push((format!("c_N({id})"), show(normal_chern(scene, id))));
        out.push((format!("sigma_bar({id})"), show(spectral_covering_total(scene, id))));
        if c.simple {
            out.push((format!("adjunction_defect({id})"), show(adjunction_defect(scene, id))));
        }
    }
    for (u, v, _) in scene.pairing().iter() {
        out.push((format!("star({u},{v})"), show(star(scene, u, v))));
    }
    for o in scene.orbits() {
        for (&k, w) in o.covers() {
            out.push((format!("parity({}^{k})", o.id()), w.parity().to_string()));
            for sign in [Sign::Plus, Sign::Minus] {
                out.push((format!("sigma_bar_{sign}({}^{k})", o.id()), show(sigma_bar(o, k, sign))));
            }
        }
    }
    out
}

/// Runs `shifts` random trivialization changes (each orbit twisted by an
/// integer in `[-5, 5]`) and compares every invariant with the baseline.
pub fn audit(scene: &Scene, shifts: usize, seed: u64) -> Result<AuditSummary, ModelError> {
    let baseline = invariants(scene);
    let orbit_ids: Vec<String> = scene.orbits().map(|o| o.id().to_string()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut breaches = Vec::new();
    let mut checked = 0;
    for i in 0..shifts {
        let mut shift = TrivializationShift::new();
        for id in &orbit_ids {
            shift = shift.with(id.clone(), rng.gen_range(-5..=5));
        }
        let shifted = shift_scene(scene, &shift)?;
        for ((name, before), (_, after)) in baseline.iter().zip(invariants(&shifted)) {
            checked += 1;
            if *before != after {
                breaches.push(format!("shift {i}: {name} changed from {before} to {after}"));
            }
        }
        checked += 1;
        if shift_scene(&shifted, &shift.negated())? != *scene {
            breaches.push(format!("shift {i}: undoing the shift does not restore the scene"));
        }
    }
    Ok(AuditSummary {
        quantities: baseline.len(),
        checked,
        breaches,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditSummary {
    /// Invariants tracked per shift.
    pub quantities: usize,
    /// Comparisons performed.
    pub checked: usize,
    pub breaches: Vec<String>,
}

fn cmd_audit(scene: &Scene, label: &str, shifts: usize, seed: u64) -> Result<Outcome, Failure> {
    let summary = audit(scene, shifts, seed)?;
    let mut o = Outcome::json(&json!({
        "scene": label,
        "shifts": shifts,
        "seed": seed,
        "quantities": summary.quantities,
        "checked": summary.checked,
        "breaches": summary.breaches,
    }));
    if !summary.breaches.is_empty() {
        o.code = EXIT_BREACH;
        o.stderr = Some(format!("invariance breach: {}", summary.breaches[0]));
    }
    Ok(o)
}
