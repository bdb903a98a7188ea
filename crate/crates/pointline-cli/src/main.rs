//! Command-line front end: parameter conversion and classification,
//! scattering sweeps, bound states, box spectra, spectral-flow runs, duality
//! comparisons and Berry-phase loops, emitted as machine-readable tables.

mod output;
mod uspec;

use clap::{Args, Parser, Subcommand};
use output::{Cell, Format, Table};
use pointline::berry::{
    eigenstate_coefficients, loop_phase, LoopPhaseMethod, SpherePoint, SphereLoop,
};
use pointline::params::{CharacteristicMatrix, ScaleParameter};
use pointline::scattering::{amplitudes_global, bound_states, filter_profile};
use pointline::spectra::{
    box_spectrum, first_levels, paths, spectral_flow, spectral_residual, susy_check, BoxBoundary,
    BoxConfig, Sector, SpectralFlow,
};
use pointline::symmetry::coupling_constants;
use serde_json::Value;
use std::f64::consts::PI;
use std::io::Write;
use std::path::{Path, PathBuf};
use uspec::USpec;

const CONFIG_SCHEMA: &str = "pointline-config/1";

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or config: exit code 2.
    Usage(String),
    /// Root finding, tracking or residual validation failed: exit code 1.
    Numerical(String),
    Io(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> CliError {
        CliError::Usage(msg.into())
    }
    pub fn numerical(msg: impl Into<String>) -> CliError {
        CliError::Numerical(msg.into())
    }
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) | CliError::Io(_) => 1,
        }
    }
    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Numerical(m) | CliError::Io(m) => m,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "pointline",
    about = "One-dimensional point interactions: classification, scattering, spectra, anholonomy",
    version
)]
struct Cli {
    /// Read all parameters from a JSON config document instead of flags.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Subfamily flags, eigenphases, wall decomposition and couplings of one interaction.
    Classify(ClassifyArgs),
    /// Reflection/transmission amplitudes over a momentum grid, with the filter class.
    Scatter(ScatterArgs),
    /// Discrete box spectrum (positive levels, box-bound levels, zero modes).
    Spectrum(SpectrumArgs),
    /// Track box levels along a closed parameter path and report the level shift.
    Flow(FlowArgs),
    /// Berry phase of a loop on the scale-invariant sphere.
    Berry(BerryArgs),
    /// Side-by-side spectra of an interaction and its half-reflection dual.
    Dual(DualArgs),
}

#[derive(Args, Debug, Clone)]
struct OutputOpts {
    /// Output format: csv or jsonl.
    #[arg(long, default_value = "csv")]
    format: String,
    /// Write the table here instead of stdout.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Interpret all angle inputs as degrees.
    #[arg(long)]
    deg: bool,
    /// Reference length L0 of the boundary condition.
    #[arg(long, default_value_t = 1.0)]
    l0: f64,
}

impl OutputOpts {
    fn format(&self) -> Result<Format, CliError> {
        Format::parse(&self.format)
            .ok_or_else(|| CliError::usage(format!("unknown format \"{}\" (csv|jsonl)", self.format)))
    }
    fn l0(&self) -> Result<ScaleParameter, CliError> {
        ScaleParameter::new(self.l0)
            .map_err(|e| CliError::usage(format!("invalid --l0: {e}")))
    }
    fn emit(&self, table: &Table) -> Result<(), CliError> {
        let format = self.format()?;
        match &self.output {
            Some(path) => {
                let mut f = std::fs::File::create(path)?;
                table.write(format, &mut f)?;
            }
            None => {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                table.write(format, &mut lock)?;
            }
        }
        Ok(())
    }
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    u: USpec,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args, Debug)]
struct ScatterArgs {
    #[command(flatten)]
    u: USpec,
    /// Momentum grid (k-min, k-max, k-count), in units of 1/L0.
    #[arg(long, default_value_t = 0.01)]
    k_min: f64,
    #[arg(long, default_value_t = 100.0)]
    k_max: f64,
    #[arg(long, default_value_t = 200)]
    k_count: usize,
    /// Space the grid logarithmically (default) or linearly.
    #[arg(long)]
    linear: bool,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    #[command(flatten)]
    u: USpec,
    /// Edge condition: dirichlet, neumann, periodic or antiperiodic.
    #[arg(long = "box", default_value = "dirichlet")]
    boundary: String,
    /// Symmetric half-length l (both walls at ±l).
    #[arg(long, default_value_t = 1.0)]
    l: f64,
    /// Right half-length (overrides --l).
    #[arg(long)]
    l_plus: Option<f64>,
    /// Left half-length (overrides --l).
    #[arg(long)]
    l_minus: Option<f64>,
    /// Number of levels to report.
    #[arg(long, default_value_t = 20)]
    levels: usize,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args, Debug)]
struct FlowArgs {
    /// Path: diagonal (through the free point), self-dual, delta or epsilon.
    #[arg(long)]
    path: String,
    /// Fixed θ₋ for the delta path (default π).
    #[arg(long)]
    theta_minus: Option<f64>,
    /// Fixed θ₊ for the epsilon path (default 0).
    #[arg(long)]
    theta_plus: Option<f64>,
    #[arg(long, default_value_t = 400)]
    steps: usize,
    #[arg(long, default_value_t = 10)]
    levels: usize,
    /// Box half-length.
    #[arg(long, default_value_t = 1.0)]
    l: f64,
    /// Write a JSON summary (shifts, permutation) to this file.
    #[arg(long, value_name = "FILE")]
    summary: Option<PathBuf>,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args, Debug)]
struct BerryArgs {
    /// Latitude loop at this polar angle.
    #[arg(long, value_name = "RAD")]
    latitude: Option<f64>,
    /// Number of loop vertices.
    #[arg(long, default_value_t = 2000)]
    vertices: usize,
    /// JSON file with loop vertices [{"theta": .., "phi": ..}, ...].
    #[arg(long, value_name = "FILE")]
    loop_json: Option<PathBuf>,
    #[command(flatten)]
    out: OutputOpts,
}

#[derive(Args, Debug)]
struct DualArgs {
    #[arg(long, value_name = "RAD")]
    theta_plus: f64,
    #[arg(long, value_name = "RAD")]
    theta_minus: f64,
    /// Edge condition (dirichlet or neumann).
    #[arg(long = "box", default_value = "dirichlet")]
    boundary: String,
    #[arg(long, default_value_t = 1.0)]
    l: f64,
    #[arg(long, default_value_t = 20)]
    levels: usize,
    #[command(flatten)]
    out: OutputOpts,
}

fn main() {
    let cli = Cli::parse();
    let result = match (&cli.config, cli.command) {
        (Some(path), None) => run_config(path),
        (None, Some(cmd)) => dispatch(cmd),
        (None, None) => Err(CliError::usage(
            "a subcommand or --config <file> is required; see --help",
        )),
        (Some(_), Some(_)) => Err(CliError::usage(
            "--config replaces the subcommand and its flags; give one or the other",
        )),
    };
    if let Err(e) = result {
        eprintln!("error: {}", e.message());
        if matches!(e, CliError::Usage(_)) {
            eprintln!(
                "hint: config documents follow {{\"schema\": \"{CONFIG_SCHEMA}\", \
                 \"command\": \"...\", \"params\": {{flag: value, ...}}}}"
            );
        }
        std::process::exit(e.exit_code());
    }
}

/// Expand a JSON config document into argv form and re-enter the normal
/// argument parser, so flags and config stay one schema.
fn run_config(path: &Path) -> Result<(), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read config {}: {e}", path.display())))?;
    let doc: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("config is not valid JSON: {e}")))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| CliError::usage("config root must be a JSON object"))?;
    match obj.get("schema").and_then(Value::as_str) {
        Some(CONFIG_SCHEMA) => {}
        Some(other) => {
            return Err(CliError::usage(format!(
                "unsupported schema \"{other}\"; expected \"{CONFIG_SCHEMA}\""
            )))
        }
        None => {
            return Err(CliError::usage(format!(
                "config is missing the schema field (\"{CONFIG_SCHEMA}\")"
            )))
        }
    }
    let command = obj
        .get("command")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::usage("config must name a command"))?;
    let mut argv: Vec<String> = vec!["pointline".into(), command.into()];
    if let Some(params) = obj.get("params") {
        let params = params
            .as_object()
            .ok_or_else(|| CliError::usage("params must be a JSON object"))?;
        for (key, value) in params {
            let flag = format!("--{}", key.replace('_', "-"));
            match value {
                Value::Bool(true) => argv.push(flag),
                Value::Bool(false) => {}
                Value::Number(n) => {
                    argv.push(flag);
                    argv.push(n.to_string());
                }
                Value::String(s) => {
                    argv.push(flag);
                    argv.push(s.clone());
                }
                other => {
                    return Err(CliError::usage(format!(
                        "param \"{key}\" must be a number, string or boolean, got {other}"
                    )))
                }
            }
        }
    }
    let cli = Cli::try_parse_from(&argv)
        .map_err(|e| CliError::usage(format!("config expands to invalid arguments: {e}")))?;
    match cli.command {
        Some(cmd) => dispatch(cmd),
        None => Err(CliError::usage("config named no runnable command")),
    }
}

fn dispatch(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Classify(args) => cmd_classify(args),
        Command::Scatter(args) => cmd_scatter(args),
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Flow(args) => cmd_flow(args),
        Command::Berry(args) => cmd_berry(args),
        Command::Dual(args) => cmd_dual(args),
    }
}

fn parse_boundary(s: &str) -> Result<BoxBoundary, CliError> {
    match s {
        "dirichlet" => Ok(BoxBoundary::Dirichlet),
        "neumann" => Ok(BoxBoundary::Neumann),
        "periodic" => Ok(BoxBoundary::Periodic),
        "antiperiodic" => Ok(BoxBoundary::Antiperiodic),
        _ => Err(CliError::usage(format!(
            "unknown box boundary \"{s}\" (dirichlet|neumann|periodic|antiperiodic)"
        ))),
    }
}

fn sector_cell(sector: Option<Sector>) -> Cell {
    match sector {
        Some(s) => Cell::text(s.label()),
        None => Cell::Empty,
    }
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

fn cmd_classify(args: ClassifyArgs) -> Result<(), CliError> {
    let l0 = args.out.l0()?;
    let u = args.u.resolve(args.out.deg, l0)?;
    let flags = u.classify();
    let dec = u.eigenphases();
    let (w, r) = u.decompose_wr();
    let report = bound_states(&u, l0);
    let format = args.out.format()?;

    let mut family_list: Vec<&str> = Vec::new();
    for (set, name) in [
        (flags.omega_p, "parity"),
        (flags.omega_t, "time-reversal"),
        (flags.omega_pt, "pt"),
        (flags.omega_w, "weyl-sphere"),
        (flags.omega_r, "separated"),
        (flags.omega_q, "q-invariant"),
        (flags.omega_sd, "self-dual"),
        (flags.is_identity, "identity"),
        (flags.is_minus_identity, "witten-point"),
        (flags.free_point, "free-point"),
    ] {
        if set {
            family_list.push(name);
        }
    }
    if flags.scale_invariant() {
        family_list.push("scale-invariant");
    }

    let cpx = |z: pointline::mat2::C64| {
        format!("{},{}", output::fmt_float(z.re), output::fmt_float(z.im))
    };

    match format {
        Format::Csv => {
            let mut out: Box<dyn Write> = match &args.out.output {
                Some(p) => Box::new(std::fs::File::create(p)?),
                None => Box::new(std::io::stdout()),
            };
            writeln!(out, "interaction: xi={} alpha={} beta={}",
                output::fmt_float(u.xi()), cpx(u.alpha()), cpx(u.beta()))?;
            writeln!(out, "subfamilies: {}", family_list.join(" "))?;
            writeln!(
                out,
                "eigenphases: mu_plus={} mu_minus={} rho={}",
                output::fmt_float(dec.mu_plus),
                output::fmt_float(dec.mu_minus),
                output::fmt_float(dec.rho)
            )?;
            writeln!(out, "wall decomposition: W(xi={} alpha={} beta={}) R(xi={} alpha={} beta={})",
                output::fmt_float(w.xi()), cpx(w.alpha()), cpx(w.beta()),
                output::fmt_float(r.xi()), cpx(r.alpha()), cpx(r.beta()))?;
            if flags.omega_p {
                let (tp, tm) = u.parity_angles().map_err(|e| CliError::numerical(e.to_string()))?;
                let c = coupling_constants(tp, tm);
                writeln!(
                    out,
                    "parity angles: theta_plus={} theta_minus={} g_plus={} g_minus={}",
                    output::fmt_float(tp),
                    output::fmt_float(tm),
                    output::fmt_float(c.g_plus),
                    output::fmt_float(c.g_minus)
                )?;
            }
            writeln!(out, "bound states: count={}", report.count())?;
            for st in &report.states {
                writeln!(
                    out,
                    "  kappa={} energy={} multiplicity={}",
                    output::fmt_float(st.kappa),
                    output::fmt_float(st.energy),
                    st.multiplicity
                )?;
            }
            if report.zero_energy_modes > 0 {
                writeln!(out, "zero-energy threshold modes: {}", report.zero_energy_modes)?;
            }
            let susy = susy_check(&u);
            if susy.is_witten_point {
                writeln!(out, "supersymmetry: witten point (wavefunctions vanish at the origin)")?;
            }
        }
        Format::JsonLines => {
            let mut obj = serde_json::Map::new();
            obj.insert("xi".into(), Value::String(output::fmt_float(u.xi())));
            obj.insert("alpha".into(), Value::String(cpx(u.alpha())));
            obj.insert("beta".into(), Value::String(cpx(u.beta())));
            obj.insert(
                "subfamilies".into(),
                Value::Array(family_list.iter().map(|s| Value::String((*s).into())).collect()),
            );
            obj.insert("mu_plus".into(), Value::String(output::fmt_float(dec.mu_plus)));
            obj.insert("mu_minus".into(), Value::String(output::fmt_float(dec.mu_minus)));
            obj.insert("rho".into(), Value::String(output::fmt_float(dec.rho)));
            obj.insert("wall_w".into(), Value::String(format!(
                "xi={} alpha={} beta={}", output::fmt_float(w.xi()), cpx(w.alpha()), cpx(w.beta()))));
            obj.insert("wall_r".into(), Value::String(format!(
                "xi={} alpha={} beta={}", output::fmt_float(r.xi()), cpx(r.alpha()), cpx(r.beta()))));
            obj.insert(
                "bound_states".into(),
                Value::Array(
                    report
                        .states
                        .iter()
                        .map(|st| {
                            let mut b = serde_json::Map::new();
                            b.insert("kappa".into(), Value::String(output::fmt_float(st.kappa)));
                            b.insert("multiplicity".into(), Value::from(st.multiplicity));
                            Value::Object(b)
                        })
                        .collect(),
                ),
            );
            obj.insert("zero_energy_modes".into(), Value::from(report.zero_energy_modes));
            let line = serde_json::to_string(&Value::Object(obj)).expect("serializable");
            match &args.out.output {
                Some(p) => std::fs::write(p, format!("{line}\n"))?,
                None => println!("{line}"),
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// scatter
// ---------------------------------------------------------------------------

fn cmd_scatter(args: ScatterArgs) -> Result<(), CliError> {
    let l0 = args.out.l0()?;
    let u = args.u.resolve(args.out.deg, l0)?;
    if !(args.k_min > 0.0 && args.k_max > args.k_min && args.k_count >= 2) {
        return Err(CliError::usage(
            "momentum grid needs 0 < k-min < k-max and k-count >= 2",
        ));
    }
    let n = args.k_count;
    let grid: Vec<f64> = (0..n)
        .map(|i| {
            let t = i as f64 / (n - 1) as f64;
            if args.linear {
                args.k_min + (args.k_max - args.k_min) * t
            } else {
                args.k_min * (args.k_max / args.k_min).powf(t)
            }
        })
        .collect();

    let mut table = Table::new(vec![
        "k", "re_r_l", "im_r_l", "re_t_l", "im_t_l", "re_r_r", "im_r_r", "re_t_r", "im_t_r",
        "t2",
    ]);
    for &k in &grid {
        let amp = amplitudes_global(&u, l0, k)
            .map_err(|e| CliError::numerical(format!("amplitudes at k = {k}: {e}")))?;
        if amp.unitarity_residual() > 1e-12 || amp.cross_residual() > 1e-12 {
            return Err(CliError::numerical(format!(
                "unitarity residual {:.3e} at k = {k} exceeds 1e-12",
                amp.unitarity_residual().max(amp.cross_residual())
            )));
        }
        table.push(vec![
            Cell::Float(k),
            Cell::Float(amp.r_l.re),
            Cell::Float(amp.r_l.im),
            Cell::Float(amp.t_l.re),
            Cell::Float(amp.t_l.im),
            Cell::Float(amp.r_r.re),
            Cell::Float(amp.r_r.im),
            Cell::Float(amp.t_r.re),
            Cell::Float(amp.t_r.im),
            Cell::Float(amp.transmission()),
        ]);
    }
    args.out.emit(&table)?;
    let profile = filter_profile(&u, l0, &grid)
        .map_err(|e| CliError::numerical(e.to_string()))?;
    eprintln!("filter class: {}", profile.classification.label());
    Ok(())
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

fn cmd_spectrum(args: SpectrumArgs) -> Result<(), CliError> {
    let l0 = args.out.l0()?;
    let u = args.u.resolve(args.out.deg, l0)?;
    let boundary = parse_boundary(&args.boundary)?;
    let l_plus = args.l_plus.unwrap_or(args.l);
    let l_minus = args.l_minus.unwrap_or(args.l);
    if args.levels == 0 {
        return Err(CliError::usage("--levels must be positive"));
    }
    let spec = if (l_plus - l_minus).abs() < 1e-15 {
        first_levels(&u, boundary, l_plus, l0, args.levels)
    } else {
        let k_max = (args.levels as f64 + 4.0) * PI / l_plus.min(l_minus);
        BoxConfig::new(boundary, l_plus, l_minus, l0, k_max, 1e-12)
            .and_then(|cfg| box_spectrum(&u, &cfg))
            .map(|mut s| {
                s.levels.truncate(args.levels);
                s
            })
    }
    .map_err(|e| CliError::numerical(e.to_string()))?;

    let cfg_for_residual = BoxConfig::new(
        boundary,
        l_plus,
        l_minus,
        l0,
        spec.levels.last().map(|l| l.k * 1.5).unwrap_or(10.0),
        1e-12,
    )
    .map_err(|e| CliError::usage(e.to_string()))?;

    let mut table = Table::new(vec![
        "kind", "index", "value", "energy", "multiplicity", "sector",
    ]);
    for (i, lv) in spec.levels.iter().enumerate() {
        let residual = spectral_residual(&u, &cfg_for_residual, lv.k);
        if residual > 1e-12 {
            return Err(CliError::numerical(format!(
                "level k = {} fails its spectral equation (residual {:.3e})",
                lv.k, residual
            )));
        }
        table.push(vec![
            Cell::text("level"),
            Cell::Int(i as i64),
            Cell::Float(lv.k),
            Cell::Float(lv.k * lv.k),
            Cell::Int(lv.multiplicity as i64),
            sector_cell(lv.sector),
        ]);
    }
    for (i, &kappa) in spec.negative_levels.iter().enumerate() {
        let residual = pointline::spectra::negative_level_residual(&u, &cfg_for_residual, kappa);
        if residual > 1e-10 {
            return Err(CliError::numerical(format!(
                "bound level kappa = {kappa} fails its spectral equation (residual {residual:.3e})"
            )));
        }
        table.push(vec![
            Cell::text("bound"),
            Cell::Int(i as i64),
            Cell::Float(kappa),
            Cell::Float(-kappa * kappa),
            Cell::Int(1),
            Cell::Empty,
        ]);
    }
    if spec.zero_mode {
        table.push(vec![
            Cell::text("zero-mode"),
            Cell::Int(0),
            Cell::Float(0.0),
            Cell::Float(0.0),
            Cell::Int(1),
            Cell::Empty,
        ]);
    }
    args.out.emit(&table)
}

// ---------------------------------------------------------------------------
// flow
// ---------------------------------------------------------------------------

fn cmd_flow(args: FlowArgs) -> Result<(), CliError> {
    let l0 = args.out.l0()?;
    if args.steps == 0 || args.levels == 0 {
        return Err(CliError::usage("--steps and --levels must be positive"));
    }
    let deg = args.out.deg;
    let fixed_minus = args.theta_minus.map(|v| if deg { v * PI / 180.0 } else { v });
    let fixed_plus = args.theta_plus.map(|v| if deg { v * PI / 180.0 } else { v });
    let path: Box<dyn Fn(f64) -> CharacteristicMatrix> = match args.path.as_str() {
        "diagonal" => Box::new(paths::diagonal_through_free_point()),
        "self-dual" => Box::new(paths::self_dual_cycle()),
        "delta" => Box::new(paths::theta_plus_cycle(fixed_minus.unwrap_or(PI))),
        "epsilon" => Box::new(paths::theta_minus_cycle(fixed_plus.unwrap_or(0.0))),
        other => {
            return Err(CliError::usage(format!(
                "unknown path \"{other}\" (diagonal|self-dual|delta|epsilon)"
            )))
        }
    };
    let k_max = (args.levels as f64 + 6.0) * PI / args.l;
    let cfg = BoxConfig::symmetric(BoxBoundary::Dirichlet, args.l, l0, k_max)
        .map_err(|e| CliError::usage(e.to_string()))?;
    let flow = spectral_flow(&*path, &cfg, args.levels, args.steps)
        .map_err(|e| CliError::numerical(e.to_string()))?;

    let mut table = Table::new(vec![
        "step",
        "t",
        "theta_plus",
        "theta_minus",
        "track",
        "sector",
        "start_rank",
        "k",
        "end_rank",
        "family_shift",
    ]);
    for (si, &t) in flow.ts.iter().enumerate() {
        let u = path(t);
        let angles = u.parity_angles().ok();
        for (ti, tr) in flow.tracks.iter().enumerate() {
            let k_cell = match tr.ks[si] {
                Some(k) => {
                    let residual = spectral_residual(&u, &cfg, k);
                    if residual > 1e-10 {
                        return Err(CliError::numerical(format!(
                            "tracked level k = {k} at t = {t} fails its spectral equation \
                             (residual {residual:.3e})"
                        )));
                    }
                    Cell::Float(k)
                }
                None => Cell::Empty,
            };
            let shift = flow
                .family_shifts
                .iter()
                .find(|(s, _)| *s == tr.sector)
                .map(|&(_, d)| Cell::Int(d))
                .unwrap_or(Cell::Empty);
            table.push(vec![
                Cell::Int(si as i64),
                Cell::Float(t),
                angles.map(|(tp, _)| Cell::Float(tp)).unwrap_or(Cell::Empty),
                angles.map(|(_, tm)| Cell::Float(tm)).unwrap_or(Cell::Empty),
                Cell::Int(ti as i64),
                sector_cell(tr.sector),
                Cell::Int(tr.start_rank as i64),
                k_cell,
                tr.end_rank
                    .map(|r| Cell::Int(r as i64))
                    .unwrap_or(Cell::Empty),
                shift,
            ]);
        }
    }
    args.out.emit(&table)?;
    write_flow_summary(&flow, args.summary.as_deref())?;
    Ok(())
}

fn write_flow_summary(flow: &SpectralFlow, path: Option<&Path>) -> Result<(), CliError> {
    let shifts: Vec<String> = flow
        .family_shifts
        .iter()
        .map(|(s, d)| {
            format!(
                "{}={}",
                s.map(|x| x.label()).unwrap_or("all"),
                d
            )
        })
        .collect();
    match flow.uniform_shift() {
        Some(d) => eprintln!(
            "closed path: level shift {} per family ({})",
            d,
            shifts.join(" ")
        ),
        None if flow.closed => eprintln!("closed path: non-uniform shifts ({})", shifts.join(" ")),
        None => eprintln!("open path: no permutation"),
    }
    if let Some(p) = path {
        let mut obj = serde_json::Map::new();
        obj.insert("closed".into(), Value::Bool(flow.closed));
        obj.insert(
            "family_shifts".into(),
            Value::Array(
                flow.family_shifts
                    .iter()
                    .map(|(s, d)| {
                        let mut m = serde_json::Map::new();
                        m.insert(
                            "sector".into(),
                            match s {
                                Some(x) => Value::String(x.label().into()),
                                None => Value::Null,
                            },
                        );
                        m.insert("shift".into(), Value::from(*d));
                        Value::Object(m)
                    })
                    .collect(),
            ),
        );
        obj.insert(
            "uniform_shift".into(),
            match flow.uniform_shift() {
                Some(d) => Value::from(d),
                None => Value::Null,
            },
        );
        obj.insert(
            "permutation".into(),
            match flow.permutation() {
                Some(p) => Value::Array(p.into_iter().map(|i| Value::from(i as i64)).collect()),
                None => Value::Null,
            },
        );
        std::fs::write(
            p,
            format!(
                "{}\n",
                serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable")
            ),
        )?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// berry
// ---------------------------------------------------------------------------

fn cmd_berry(args: BerryArgs) -> Result<(), CliError> {
    let deg = args.out.deg;
    let (loop_, label, theta0): (SphereLoop, String, Option<f64>) =
        match (&args.latitude, &args.loop_json) {
            (Some(theta), None) => {
                let theta = if deg { theta * PI / 180.0 } else { *theta };
                let l = SphereLoop::latitude(theta, args.vertices)
                    .map_err(|e| CliError::usage(e.to_string()))?;
                (l, "latitude".to_string(), Some(theta))
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    CliError::usage(format!("cannot read loop file {}: {e}", path.display()))
                })?;
                #[derive(serde::Deserialize)]
                struct P {
                    theta: f64,
                    phi: f64,
                }
                let pts: Vec<P> = serde_json::from_str(&text)
                    .map_err(|e| CliError::usage(format!("loop file is not a JSON vertex list: {e}")))?;
                let mut vertices = Vec::with_capacity(pts.len());
                for p in pts {
                    let (theta, phi) = if deg {
                        (p.theta * PI / 180.0, p.phi * PI / 180.0)
                    } else {
                        (p.theta, p.phi)
                    };
                    vertices.push(
                        SpherePoint::new(theta, phi)
                            .map_err(|e| CliError::usage(e.to_string()))?,
                    );
                }
                let l = SphereLoop::closed(vertices)
                    .map_err(|e| CliError::usage(e.to_string()))?;
                (l, path.display().to_string(), None)
            }
            _ => {
                return Err(CliError::usage(
                    "give exactly one of --latitude or --loop-json",
                ))
            }
        };

    let gamma_d = loop_phase(&loop_, LoopPhaseMethod::Discrete)
        .map_err(|e| CliError::numerical(e.to_string()))?;
    let gamma_a = loop_phase(&loop_, LoopPhaseMethod::Analytic)
        .map_err(|e| CliError::numerical(e.to_string()))?;
    // the monopole prediction: −1/2 × enclosed solid angle, to (−π, π]
    let prediction = {
        let mut x = (-0.5 * loop_.solid_angle()).rem_euclid(2.0 * PI);
        if x > PI {
            x -= 2.0 * PI;
        }
        x
    };
    let dist = |a: f64, b: f64| {
        let d = (a - b).rem_euclid(2.0 * PI);
        d.min(2.0 * PI - d)
    };
    if dist(gamma_d, gamma_a) > 1e-6 {
        return Err(CliError::numerical(format!(
            "discrete ({gamma_d}) and analytic ({gamma_a}) phases disagree beyond 1e-6"
        )));
    }
    // sanity anchor for the state family behind the phase
    let _ = eigenstate_coefficients(&loop_.vertices()[0]);

    let mut table = Table::new(vec![
        "loop",
        "theta0",
        "vertices",
        "gamma_discrete",
        "gamma_analytic",
        "prediction",
    ]);
    table.push(vec![
        Cell::text(label),
        theta0.map(Cell::Float).unwrap_or(Cell::Empty),
        Cell::Int(loop_.vertices().len() as i64 - 1),
        Cell::Float(gamma_d),
        Cell::Float(gamma_a),
        Cell::Float(prediction),
    ]);
    args.out.emit(&table)
}

// ---------------------------------------------------------------------------
// dual
// ---------------------------------------------------------------------------

fn cmd_dual(args: DualArgs) -> Result<(), CliError> {
    let l0 = args.out.l0()?;
    let boundary = parse_boundary(&args.boundary)?;
    if matches!(boundary, BoxBoundary::Periodic | BoxBoundary::Antiperiodic) {
        return Err(CliError::usage(
            "dual comparisons use wall boxes (dirichlet or neumann)",
        ));
    }
    let deg = args.out.deg;
    let conv = |v: f64| if deg { v * PI / 180.0 } else { v };
    let (tp, tm) = (conv(args.theta_plus), conv(args.theta_minus));
    let u = CharacteristicMatrix::from_parity_angles(tp, tm);
    let v = CharacteristicMatrix::from_parity_angles(tm, tp);
    let su = first_levels(&u, boundary, args.l, l0, args.levels)
        .map_err(|e| CliError::numerical(e.to_string()))?;
    let sv = first_levels(&v, boundary, args.l, l0, args.levels)
        .map_err(|e| CliError::numerical(e.to_string()))?;
    if su.levels.len() != sv.levels.len() {
        return Err(CliError::numerical("dual spectra have different sizes"));
    }
    let mut table = Table::new(vec![
        "index",
        "k",
        "sector",
        "k_dual",
        "sector_dual",
        "difference",
    ]);
    for (i, (a, b)) in su.levels.iter().zip(sv.levels.iter()).enumerate() {
        let diff = (a.k - b.k).abs();
        if diff > 1e-10 {
            return Err(CliError::numerical(format!(
                "duality violated at level {i}: {} vs {}",
                a.k, b.k
            )));
        }
        table.push(vec![
            Cell::Int(i as i64),
            Cell::Float(a.k),
            sector_cell(a.sector),
            Cell::Float(b.k),
            sector_cell(b.sector),
            Cell::Float(diff),
        ]);
    }
    args.out.emit(&table)
}
