//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure (or unwritable output),
//! 2 invalid material or usage, 3 solver failure.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::atlas::{distinct_cases, distinct_regions, phase_plane_atlas, zero_velocity_atlas};
use crate::error::Error;
use crate::material::{Material, PRESET_NAMES};
use crate::riemann::{solve, thresholds, zero_velocity_case, RegionLabel, Wave, ZeroVelocityCase};
use crate::sampler::profile;
use crate::verify::suite::{self, SuiteConfig};
use crate::verify::{check_dissipation, check_liu, check_rh};
use crate::wave_curves::State;

#[derive(Debug, Parser)]
#[command(name = "elastic-riemann", version, about = "Exact Riemann solver for a non-convex elastic body")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one Riemann problem and print the wave pattern as JSON.
    Solve(SolveArgs),
    /// Sample a solution in xi = x/t and write `xi,T,v` CSV.
    Profile(ProfileArgs),
    /// Label a grid of zero-velocity problems (or a phase plane with --plane).
    Atlas(AtlasArgs),
    /// Run the randomized invariant suite and the finite-volume refinement study.
    Verify(VerifyArgs),
    /// Print the threshold stresses for a left stress.
    Thresholds(ThresholdArgs),
}

#[derive(Debug, Args)]
pub struct MaterialArg {
    /// Preset name (cubic, paper-like, linear) or path to a JSON material document.
    #[arg(long, default_value = "cubic")]
    pub material: String,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub tl: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub vl: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub tr: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub vr: f64,
}

impl StateArgs {
    fn states(&self) -> (State, State) {
        (State::new(self.tl, self.vl), State::new(self.tr, self.vr))
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub material: MaterialArg,
    #[command(flatten)]
    pub states: StateArgs,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    #[command(flatten)]
    pub material: MaterialArg,
    #[command(flatten)]
    pub states: StateArgs,
    /// Defaults to -1.2 times the largest characteristic speed.
    #[arg(long, allow_hyphen_values = true)]
    pub xi_min: Option<f64>,
    /// Defaults to 1.2 times the largest characteristic speed.
    #[arg(long, allow_hyphen_values = true)]
    pub xi_max: Option<f64>,
    #[arg(long, default_value_t = 201)]
    pub count: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AtlasArgs {
    #[command(flatten)]
    pub material: MaterialArg,
    #[arg(long, allow_hyphen_values = true, default_value_t = -2.0)]
    pub tl_min: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 2.0)]
    pub tl_max: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = -3.0)]
    pub tr_min: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 3.0)]
    pub tr_max: f64,
    #[arg(long, default_value_t = 81)]
    pub resolution: usize,
    /// Sweep the (T_r, v_r) plane for the fixed left state (--tl, --vl) instead.
    #[arg(long)]
    pub plane: bool,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub tl: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub vl: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = -4.0)]
    pub vr_min: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 4.0)]
    pub vr_max: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Fixed material for every trial; a random mix when absent.
    #[arg(long)]
    pub material: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    /// Perturb every shock speed by 1e-3 before checking.
    #[arg(long)]
    pub corrupt_speed: bool,
    /// Skip the finite-volume refinement study.
    #[arg(long)]
    pub no_fv: bool,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    #[command(flatten)]
    pub material: MaterialArg,
    #[arg(long, allow_hyphen_values = true)]
    pub tl: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
pub enum Failure {
    Verify(String),
    Material(String),
    Solver(String),
    Output(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Verify(_) | Failure::Output(_) => 1,
            Failure::Material(_) => 2,
            Failure::Solver(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Verify(m) | Failure::Material(m) | Failure::Solver(m) | Failure::Output(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Material(m) => Failure::Material(m.to_string()),
            other => Failure::Solver(other.to_string()),
        }
    }
}

/// Formats a float with 17 significant digits.
pub fn format_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}

struct SignificantDigits;

impl serde_json::ser::Formatter for SignificantDigits {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(format_f64(value).as_bytes())
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

/// Compact JSON with 17 significant digits per float; non-finite values become `null`.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SignificantDigits);
    value.serialize(&mut ser).expect("in-memory JSON serialization");
    buf.push(b'\n');
    String::from_utf8(buf).expect("JSON is UTF-8")
}

/// Preset name or JSON material document.
pub fn load_material(spec: &str) -> Result<Material, Failure> {
    if PRESET_NAMES.contains(&spec) {
        return Material::preset(spec).map_err(|e| Failure::Material(e.to_string()));
    }
    let path = Path::new(spec);
    let text = fs::read_to_string(path).map_err(|e| {
        Failure::Material(format!("`{spec}` is neither a preset ({}) nor a readable file: {e}", PRESET_NAMES.join(", ")))
    })?;
    serde_json::from_str(&text).map_err(|e| Failure::Material(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Output(format!("{}: {e}", path.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Output(e.to_string())),
    }
}

#[derive(Serialize)]
struct Verification {
    rh_residual: f64,
    dissipation_slack: f64,
    dissipation_sign_mismatches: usize,
    liu_margin: f64,
}

#[derive(Serialize)]
struct SolveReport<'a> {
    material: &'a Material,
    left_state: State,
    right_state: State,
    region_label: RegionLabel,
    zero_velocity_case: Option<ZeroVelocityCase>,
    composition: String,
    waves: &'a [Wave],
    middle_states: &'a [State],
    verification: Verification,
}

pub fn cmd_solve(args: &SolveArgs) -> Result<(), Failure> {
    let m = load_material(&args.material.material)?;
    let (left, right) = args.states.states();
    let pattern = solve(&m, left, right)?;
    let case = if left.v == 0.0 && right.v == 0.0 {
        zero_velocity_case(&m, left.t, right.t)?
    } else {
        None
    };
    let dissipation = check_dissipation(&pattern);
    let report = SolveReport {
        material: &m,
        left_state: left,
        right_state: right,
        region_label: pattern.region_label,
        zero_velocity_case: case,
        composition: pattern.composition(),
        waves: &pattern.waves,
        middle_states: &pattern.middle_states,
        verification: Verification {
            rh_residual: check_rh(&pattern),
            dissipation_slack: dissipation.min_slack,
            dissipation_sign_mismatches: dissipation.sign_mismatches,
            liu_margin: pattern.shocks().map(|w| check_liu(&m, w, suite::LIU_SAMPLES)).fold(f64::INFINITY, f64::min),
        },
    };
    emit(args.out.as_deref(), &to_json(&report))
}

pub fn cmd_profile(args: &ProfileArgs) -> Result<(), Failure> {
    let m = load_material(&args.material.material)?;
    let (left, right) = args.states.states();
    let pattern = solve(&m, left, right)?;
    let reach = 1.2 * m.max_char_speed();
    let prof = profile(&pattern, args.xi_min.unwrap_or(-reach), args.xi_max.unwrap_or(reach), args.count)?;
    let mut csv = String::from("xi,T,v\n");
    for (xi, s) in prof.xi_grid.iter().zip(&prof.states) {
        let _ = writeln!(csv, "{},{},{}", format_f64(*xi), format_f64(s.t), format_f64(s.v));
    }
    emit(args.out.as_deref(), &csv)
}

pub fn cmd_atlas(args: &AtlasArgs) -> Result<(), Failure> {
    let m = load_material(&args.material.material)?;
    let (csv, summary) = if args.plane {
        let left = State::new(args.tl, args.vl);
        let rows = phase_plane_atlas(&m, left, (args.tr_min, args.tr_max), (args.vr_min, args.vr_max), args.resolution)?;
        let mut csv = String::from("T_r,v_r,region_label\n");
        for r in &rows {
            let _ = writeln!(csv, "{},{},{}", format_f64(r.t_r), format_f64(r.v_r), r.region_label);
        }
        let regions = distinct_regions(rows.iter().map(|r| r.region_label));
        let summary = format!("rows: {}, distinct region labels: {} ({})", rows.len(), regions.len(), join(&regions));
        (csv, summary)
    } else {
        let rows = zero_velocity_atlas(&m, (args.tl_min, args.tl_max), (args.tr_min, args.tr_max), args.resolution)?;
        let mut csv = String::from("T_l,T_r,case_label,region_label\n");
        for r in &rows {
            let case = r.case_label.map_or_else(|| "-".to_string(), |c| c.to_string());
            let _ = writeln!(csv, "{},{},{},{}", format_f64(r.t_l), format_f64(r.t_r), case, r.region_label);
        }
        let cases = distinct_cases(&rows);
        let summary = format!("rows: {}, distinct case labels: {} ({})", rows.len(), cases.len(), join(&cases));
        (csv, summary)
    };
    emit(args.out.as_deref(), &csv)?;
    if args.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(())
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let material = args.material.as_deref().map(load_material).transpose()?;
    let config = SuiteConfig {
        seed: args.seed,
        trials: args.trials,
        corrupt_speed: args.corrupt_speed,
        refinement: !args.no_fv,
        material,
    };
    let report = suite::run(&config);
    println!("seed {} trials {}", report.seed, report.trials);
    for p in &report.properties {
        println!("{:<18} {}  {}", p.name, if p.passed { "PASS" } else { "FAIL" }, p.detail);
    }
    match report.first_failure() {
        Some(p) => Err(Failure::Verify(format!("property `{}` failed: {}", p.name, p.detail))),
        None => Ok(()),
    }
}

pub fn cmd_thresholds(args: &ThresholdArgs) -> Result<(), Failure> {
    let m = load_material(&args.material.material)?;
    let th = thresholds(&m, args.tl)?;
    emit(args.out.as_deref(), &to_json(&th))
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = match &cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Profile(a) => cmd_profile(a),
        Command::Atlas(a) => cmd_atlas(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Thresholds(a) => cmd_thresholds(a),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.exit_code()
        }
    }
}
