//! `arctic`: enumeration, sampling, verification, limit-shape fields,
//! experiments and SVG rendering.

mod verify;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use arctic_core::asm::{asm_count, enumerate_asms};
use arctic_core::aztec::{
    enumerate_tilings, height_function, sample_tiling, tiling_to_pair, DominoTiling,
};
use arctic_core::experiments::{
    arctic_radius, asm_shape_convergence, ldp_row_check, ldp_trend, tableau_arctic,
    tiling_shape_convergence, ExperimentReport,
};
use arctic_core::render::{r_field_grid, render_jumps, render_shape, render_tiling, ColorBy, TilingStyle};
use arctic_core::shape::{f_star, g_field};
use arctic_core::tableaux::{
    count_tableaux, enumerate_tableaux, sample_tableau, space_time_rows, tableau_to_jumps,
    JumpSequence, SquareTableau,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "arctic", version, about = "Alternating sign matrices, Aztec diamond tilings and their limit shapes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate tilings, ASMs or square tableaux of a small order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Kind::Tilings)]
        kind: Kind,
        /// Print only the number of objects.
        #[arg(long)]
        count_only: bool,
        /// JSON lines output file (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample a uniform domino tiling by shuffling.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// What to write: the tiling, its height function, or its ASM pair.
        #[arg(long, value_enum, default_value_t = SampleOutput::Tiling)]
        emit: SampleOutput,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a tiling, tableau or jump-sequence JSON file as SVG.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// type-parity (alias type), orientation or frozen (tilings only).
        #[arg(long, default_value = "type-parity")]
        color_by: String,
        /// Draw the circle x^2 + y^2 = 1/2 (tilings only).
        #[arg(long)]
        overlay_circle: bool,
        /// Pixels per lattice unit.
        #[arg(long, default_value_t = 12.0)]
        unit: f64,
    },
    /// Evaluate a limit-shape field on a grid as CSV, optionally with a contour SVG.
    Shape {
        #[arg(long, default_value_t = 200)]
        grid: usize,
        /// r: Aztec height function R(u, v); fg: ASM height limits F(x, y) and G(x, y).
        #[arg(long, value_enum, default_value_t = Field::R)]
        field: Field,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Contour plot of R with the arctic circle.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = 12)]
        levels: usize,
    },
    /// Run a verification suite; prints a JSON verdict, exit 0 on pass, 1 on failure.
    Verify(VerifyArgs),
    /// Exact row probabilities against the large-deviation approximation.
    Ldp {
        #[arg(long)]
        n: usize,
        /// Row index; all rows if absent.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a Monte-Carlo experiment; writes <id>.csv and <id>.json under --out.
    Experiment(ExperimentArgs),
    /// Square Young tableaux.
    Syt {
        #[command(subcommand)]
        command: SytCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Tilings,
    Asms,
    Tableaux,
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleOutput {
    Tiling,
    Height,
    Pair,
}

#[derive(Clone, Copy, ValueEnum)]
enum Field {
    R,
    Fg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    TwoEnum,
    RowLaw,
    Compatible,
    Bijections,
    Airfoil,
    Rate,
    OperatorFormula,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Largest order (two-enum: 5, row-law: 4, compatible: 3, bijections: 4).
    #[arg(long)]
    n: Option<usize>,
    /// Longest bottom row (two-enum: 4, operator-formula: 3).
    #[arg(long)]
    k: Option<usize>,
    /// Largest bottom-row entry (two-enum: 6, operator-formula: 6).
    #[arg(long)]
    max: Option<i64>,
    /// Rows y for the rate suite (default 0.05, 0.10, ..., 0.95).
    #[arg(long, value_delimiter = ',')]
    y: Vec<f64>,
    /// Values of beta for the airfoil suite (default 0.2, 0.5, 0.8, 0.95).
    #[arg(long, value_delimiter = ',')]
    beta: Vec<f64>,
    /// Tolerance (airfoil: 1e-3, rate: 2e-3).
    #[arg(long)]
    tol: Option<f64>,
    /// Number of evaluation points for the airfoil suite.
    #[arg(long, default_value_t = 39)]
    grid: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExperimentName {
    Ldp,
    AsmShape,
    TilingShape,
    ArcticRadius,
    TableauArctic,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(value_enum)]
    name: ExperimentName,
    /// Orders (ldp: 3,4,5,6; asm-shape: 16,64,128; tiling-shape: 32,64,128;
    /// arctic-radius: 64,128; tableau-arctic: 10,20,40).
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Squared-radius margin for arctic-radius (default 2/sqrt(n)).
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long, default_value = "reports")]
    out: PathBuf,
}

#[derive(Subcommand)]
enum SytCommand {
    /// Sample a uniform square tableau by the hook walk.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Tableau JSON (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Jump-sequence JSON.
        #[arg(long)]
        jumps: Option<PathBuf>,
        /// Space-time CSV (time, position, particle).
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Space-time SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Deviation of the frozen time periods from the arctic curves.
    Arctic {
        #[arg(long, value_delimiter = ',', default_values_t = [10, 20, 40])]
        n: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "reports")]
        out: PathBuf,
    },
}

/// Errors caused by bad flags rather than by the computation.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let is_usage = e.downcast_ref::<Usage>().is_some()
                || matches!(
                    e.downcast_ref::<arctic_core::Error>(),
                    Some(arctic_core::Error::InvalidArgument(_) | arctic_core::Error::TooLarge { .. })
                );
            ExitCode::from(if is_usage { 2 } else { 1 })
        }
    }
}

fn write_out(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn json_line<T: serde::Serialize>(v: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string(v)? + "\n")
}

/// Returns whether the command passed; errors map to exit codes in `main`.
fn run(cmd: Command) -> anyhow::Result<bool> {
    match cmd {
        Command::Enumerate { n, kind, count_only, out } => {
            let mut text = String::new();
            match kind {
                Kind::Tilings => {
                    let all = enumerate_tilings(n)?;
                    if count_only {
                        text = format!("{}\n", all.len());
                    } else {
                        for t in &all {
                            text += &json_line(t)?;
                        }
                    }
                }
                Kind::Asms => {
                    if count_only {
                        text = format!("{}\n", asm_count(n)?);
                    } else {
                        for m in enumerate_asms(n)? {
                            text += &json_line(&m)?;
                        }
                    }
                }
                Kind::Tableaux => {
                    if count_only {
                        text = format!("{}\n", count_tableaux(n));
                    } else {
                        for t in enumerate_tableaux(n)? {
                            text += &json_line(&t)?;
                        }
                    }
                }
            }
            write_out(out.as_deref(), &text)?;
            Ok(true)
        }
        Command::Sample { n, seed, emit, out } => {
            if n == 0 {
                return Err(usage("--n must be positive"));
            }
            let t = sample_tiling(n, seed);
            let text = match emit {
                SampleOutput::Tiling => json_line(&t)?,
                SampleOutput::Height => json_line(&height_function(&t)?)?,
                SampleOutput::Pair => {
                    let (a, b) = tiling_to_pair(&t)?;
                    json_line(&json!({"a": a, "b": b}))?
                }
            };
            write_out(out.as_deref(), &text)?;
            Ok(true)
        }
        Command::Render { input, out, color_by, overlay_circle, unit } => {
            let color_by: ColorBy = color_by.parse().map_err(|e: arctic_core::Error| usage(e.to_string()))?;
            if !(unit > 0.0) {
                return Err(usage("--unit must be positive"));
            }
            let text = fs::read_to_string(&input).with_context(|| format!("reading {}", input.display()))?;
            let svg = render_file(&text, &TilingStyle { color_by, overlay_circle, unit })
                .with_context(|| format!("in {}", input.display()))?;
            write_out(out.as_deref(), &svg)?;
            Ok(true)
        }
        Command::Shape { grid, field, out, svg, levels } => {
            if grid < 2 {
                return Err(usage("--grid must be at least 2"));
            }
            write_out(out.as_deref(), &shape_csv(grid, field)?)?;
            if let Some(p) = svg {
                fs::write(&p, render_shape(grid, levels, 600.0 / grid as f64)?)?;
            }
            Ok(true)
        }
        Command::Verify(args) => {
            let verdict = run_verify(&args)?;
            println!("{}", serde_json::to_string_pretty(&verdict)?);
            Ok(verdict.passed)
        }
        Command::Ldp { n, k, out } => {
            let ks: Vec<usize> = match k {
                Some(k) => vec![k],
                None => (1..=n).collect(),
            };
            let mut text = String::new();
            for k in ks {
                text += &json_line(&ldp_row_check(n, k)?)?;
            }
            write_out(out.as_deref(), &text)?;
            Ok(true)
        }
        Command::Experiment(args) => {
            let ns = |default: &[usize]| if args.n.is_empty() { default.to_vec() } else { args.n.clone() };
            if args.samples == 0 {
                return Err(usage("--samples must be positive"));
            }
            let report = match args.name {
                ExperimentName::Ldp => ldp_trend(&ns(&[3, 4, 5, 6]))?,
                ExperimentName::AsmShape => asm_shape_convergence(&ns(&[16, 64, 128]), args.samples, args.seed)?,
                ExperimentName::TilingShape => {
                    tiling_shape_convergence(&ns(&[32, 64, 128]), args.samples, args.seed)?
                }
                ExperimentName::ArcticRadius => arctic_radius(&ns(&[64, 128]), args.samples, args.seed, args.eps)?,
                ExperimentName::TableauArctic => tableau_arctic(&ns(&[10, 20, 40]), args.samples, args.seed)?,
            };
            finish_report(&report, &args.out)
        }
        Command::Syt { command } => match command {
            SytCommand::Sample { n, seed, out, jumps, csv, svg } => {
                if n == 0 {
                    return Err(usage("--n must be positive"));
                }
                let t = sample_tableau(n, seed);
                let j = tableau_to_jumps(&t);
                write_out(out.as_deref(), &json_line(&t)?)?;
                if let Some(p) = jumps {
                    fs::write(p, json_line(&j)?)?;
                }
                if let Some(p) = csv {
                    let mut text = String::from("time,position,particle\n");
                    for (time, pos, particle) in space_time_rows(&j) {
                        text += &format!("{time},{pos},{particle}\n");
                    }
                    fs::write(p, text)?;
                }
                if let Some(p) = svg {
                    fs::write(p, render_jumps(&j, 12.0)?)?;
                }
                Ok(true)
            }
            SytCommand::Arctic { n, samples, seed, out } => {
                finish_report(&tableau_arctic(&n, samples, seed)?, &out)
            }
        },
    }
}

fn finish_report(report: &ExperimentReport, dir: &Path) -> anyhow::Result<bool> {
    let (csv, json) = report.write_to(dir)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&json!({
            "experiment": report.id,
            "passed": report.passed(),
            "checks": report.checks,
            "csv": csv,
            "json": json,
        }))?
    );
    Ok(report.passed())
}

fn render_file(text: &str, style: &TilingStyle) -> anyhow::Result<String> {
    let value: serde_json::Value = serde_json::from_str(text).context("malformed JSON")?;
    let obj = value.as_object().context("expected a JSON object")?;
    if obj.contains_key("dominoes") {
        let t: DominoTiling = serde_json::from_str(text).context("invalid tiling")?;
        Ok(render_tiling(&t, style))
    } else if obj.contains_key("moves") {
        let j: JumpSequence = serde_json::from_str(text).context("invalid jump sequence")?;
        Ok(render_jumps(&j, style.unit)?)
    } else if obj.contains_key("rows") {
        let t: SquareTableau = serde_json::from_str(text).context("invalid tableau")?;
        Ok(render_jumps(&tableau_to_jumps(&t), style.unit)?)
    } else {
        bail!("expected a tiling (\"dominoes\"), jump sequence (\"moves\") or tableau (\"rows\")")
    }
}

fn shape_csv(grid: usize, field: Field) -> anyhow::Result<String> {
    let mut text = String::new();
    match field {
        Field::R => {
            text.push_str("u,v,R\n");
            let step = 2.0 / grid as f64;
            for (b, row) in r_field_grid(grid)?.iter().enumerate() {
                for (a, val) in row.iter().enumerate() {
                    if let Some(r) = val {
                        let (u, v) = (-1.0 + a as f64 * step, -1.0 + b as f64 * step);
                        text += &format!("{u},{v},{r}\n");
                    }
                }
            }
        }
        Field::Fg => {
            text.push_str("x,y,F,G\n");
            for b in 0..=grid {
                for a in 0..=grid {
                    let (x, y) = (a as f64 / grid as f64, b as f64 / grid as f64);
                    text += &format!("{x},{y},{},{}\n", f_star(x, y)?, g_field(x, y)?);
                }
            }
        }
    }
    Ok(text)
}

fn run_verify(a: &VerifyArgs) -> anyhow::Result<verify::Verdict> {
    let tol = |d: f64| -> anyhow::Result<f64> {
        match a.tol {
            Some(t) if !(t > 0.0) => Err(usage("--tol must be positive")),
            Some(t) => Ok(t),
            None => Ok(d),
        }
    };
    match a.suite {
        Suite::TwoEnum => verify::two_enum(a.n.unwrap_or(5), a.k.unwrap_or(4), a.max.unwrap_or(6)),
        Suite::RowLaw => verify::row_law(a.n.unwrap_or(4)),
        Suite::Compatible => verify::compatible(a.n.unwrap_or(3)),
        Suite::Bijections => verify::bijections(a.n.unwrap_or(4)),
        Suite::Airfoil => {
            let betas = if a.beta.is_empty() { vec![0.2, 0.5, 0.8, 0.95] } else { a.beta.clone() };
            if betas.iter().any(|b| !(*b > 0.0 && *b < 1.0)) {
                return Err(usage("--beta values must lie in (0, 1)"));
            }
            verify::airfoil(&betas, a.grid, tol(1e-3)?)
        }
        Suite::Rate => {
            let ys = if a.y.is_empty() { (1..=19).map(|i| i as f64 * 0.05).collect() } else { a.y.clone() };
            if ys.iter().any(|y| !(*y > 0.0 && *y < 1.0)) {
                return Err(usage("--y values must lie in (0, 1)"));
            }
            verify::rate(&ys, tol(2e-3)?)
        }
        Suite::OperatorFormula => verify::operator_formula(a.k.unwrap_or(3), a.max.unwrap_or(6)),
    }
}
