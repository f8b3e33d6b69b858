use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fproot::error::EXIT_BUDGET;
use fproot::formats::{parse_algebra, parse_matrix, parse_module, parse_quiver, quiver_to_dot};
use fproot::output::{
    grid_csv, report_csv, tool, BudgetsJson, ClassifyJson, ComplexityJson, CyclesJson, ReportJson, ResolveJson,
    SpectralReport, StepJson, TableJson,
};
use fproot::scan::{check_witnesses, parallel_fp_report};
use fproot::CliError;
use fproot_core::algebra::{simples, BoundAlgebra};
use fproot_core::fpcore::{brick_universe, complexity_estimate, e1_quiver, module_family, simple_ext_table, FpBudgets};
use fproot_core::quiver::{classify_underlying_graph, cycle_number, quiver_fpdim};
use fproot_core::repmod::{ext_dims_from, minimal_resolution, Representation};
use fproot_core::spectral::rho_extended;
use fproot_core::tables::{polyring, Surface};

/// Frobenius-Perron invariants of quivers, bound quiver algebras and their
/// module categories.
#[derive(Debug, Parser)]
#[command(name = "fproot", version)]
struct Cli {
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectral radius of a matrix file (entries "p/q", "inf", "-inf" or numbers).
    Spectral { matrix: PathBuf },
    /// Invariants of a quiver file.
    Quiver {
        #[arg(value_enum)]
        action: QuiverAction,
        quiver: PathBuf,
    },
    /// Scan brick sets of a bounded universe of modules over an algebra.
    FpScan {
        algebra: PathBuf,
        #[command(flatten)]
        budgets: ScanBudgets,
        /// Damage one witness before the final check (exercises exit code 4).
        #[arg(long, hide = true)]
        corrupt_witness: bool,
    },
    /// Minimal projective resolution of a module, with Ext tables.
    Resolve {
        algebra: PathBuf,
        /// Module file.
        #[arg(long, conflicts_with = "simple", required_unless_present = "simple")]
        module: Option<PathBuf>,
        /// Resolve the simple module at this vertex (`1` or `S1`).
        #[arg(long)]
        simple: Option<String>,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Closed-form fp values: p1-twist, p1-serre, a2 or polyring.
    Tables {
        surface: String,
        /// Grid covers `-range..=range` in both parameters.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(i64).range(0..=1000))]
        range: i64,
        /// Number of variables for `polyring`.
        #[arg(long)]
        genus: Option<u64>,
        /// Brick-set size `n` of fpdim^n.
        #[arg(short = 'n', long, default_value_t = 1)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum QuiverAction {
    Fpdim,
    Cycles,
    Classify,
    Dot,
}

#[derive(Debug, Args)]
struct ScanBudgets {
    /// Largest total dimension of a module in the universe.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    budget_dim: u64,
    /// Largest brick-set size.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    budget_set_size: u64,
    /// Largest power of the suspension (Ext degree) evaluated.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    budget_power: u64,
    /// Cap on the number of brick sets enumerated.
    #[arg(long, default_value_t = 2_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_sets: u64,
    /// Random presentations tried when building the universe.
    #[arg(long, default_value_t = 400)]
    tries: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// What a command produced: text to emit and whether a budget cut it short.
struct Output {
    text: String,
    partial: bool,
}

impl Output {
    fn complete(text: String) -> Self {
        Output { text, partial: false }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn unsupported(cmd: &str, f: Format) -> CliError {
    CliError::Usage(format!("`{cmd}` does not support --format {}", format!("{f:?}").to_lowercase()))
}

fn run_spectral(path: &Path, format: Format) -> Result<Output, CliError> {
    if format != Format::Json {
        return Err(unsupported("spectral", format));
    }
    let m = parse_matrix(&read(path)?)?;
    let v = rho_extended(&m);
    Ok(Output::complete(json(&SpectralReport { tool: tool(), size: m.n(), value: (&v).into() })))
}

fn run_quiver(action: QuiverAction, path: &Path, format: Option<Format>) -> Result<Output, CliError> {
    let q = parse_quiver(&read(path)?)?;
    let name = path.file_stem().map_or_else(|| "quiver".into(), |s| s.to_string_lossy().into_owned());
    let format = format.unwrap_or(if matches!(action, QuiverAction::Dot) { Format::Dot } else { Format::Json });
    let text = match (action, format) {
        (QuiverAction::Dot, Format::Dot) => quiver_to_dot(&q, &name),
        (QuiverAction::Dot, f) => return Err(unsupported("quiver dot", f)),
        (_, Format::Dot) => quiver_to_dot(&q, &name),
        (_, Format::Csv) => return Err(unsupported("quiver", Format::Csv)),
        (QuiverAction::Fpdim, Format::Json) => {
            json(&SpectralReport { tool: tool(), size: q.vertex_count(), value: (&quiver_fpdim(&q)).into() })
        }
        (QuiverAction::Cycles, Format::Json) => json(&CyclesJson::new(&q, &cycle_number(&q), &quiver_fpdim(&q))),
        (QuiverAction::Classify, Format::Json) => {
            let class = classify_underlying_graph(&q).map_err(|e| CliError::Usage(format!("cannot classify: {e}")))?;
            json(&ClassifyJson::from(class))
        }
    };
    Ok(Output::complete(text))
}

fn run_fp_scan(path: &Path, b: &ScanBudgets, format: Format, corrupt: bool) -> Result<Output, CliError> {
    let alg = Arc::new(parse_algebra(&read(path)?)?);
    let dim = b.budget_dim as usize;
    let universe = brick_universe(&alg, dim, b.tries, b.seed);
    let budgets = FpBudgets {
        max_set_size: b.budget_set_size as usize,
        powers: (0..=b.budget_power as i64).collect(),
        max_sets: b.max_sets as usize,
    };
    let family = module_family(&universe, b.budget_power as usize);
    let mut report = parallel_fp_report(&family, &budgets);
    if corrupt {
        if let Some(cell) = report.grid.iter_mut().flatten().find(|c| c.witness.is_some()) {
            cell.witness = Some(vec![0; cell.set_size + 1]);
        }
    }
    check_witnesses(&family, &report)?;
    let text = match format {
        Format::Json => {
            let dimvecs: Vec<Vec<usize>> = universe.iter().map(|(_, m)| m.dimvec().to_vec()).collect();
            let meta = BudgetsJson::new(&budgets, Some(dim), Some(b.tries), Some(b.seed));
            json(&ReportJson::new(&report, meta, &dimvecs))
        }
        Format::Csv => report_csv(&report),
        Format::Dot => quiver_to_dot(&e1_quiver(&family, 1), "ext1"),
    };
    Ok(Output { text, partial: report.truncated })
}

fn simple_vertex(alg: &BoundAlgebra, name: &str) -> Result<usize, CliError> {
    let q = alg.quiver();
    q.vertex_index(name)
        .or_else(|| name.strip_prefix('S').and_then(|v| q.vertex_index(v)))
        .ok_or_else(|| CliError::Parse(format!("no vertex named `{name}`")))
}

fn run_resolve(path: &Path, module: Option<&Path>, simple: Option<&str>, depth: usize, format: Format) -> Result<Output, CliError> {
    if format != Format::Json {
        return Err(unsupported("resolve", format));
    }
    let alg = Arc::new(parse_algebra(&read(path)?)?);
    let m = match (module, simple) {
        (Some(p), _) => parse_module(&read(p)?, &alg)?,
        (None, Some(s)) => Representation::simple(&alg, simple_vertex(&alg, s)?),
        (None, None) => return Err(CliError::Usage("give --module or --simple".into())),
    };
    let q = alg.quiver();
    let named = |counts: &[usize]| -> BTreeMap<String, usize> {
        counts.iter().enumerate().map(|(v, &c)| (q.vertex_name(v).to_string(), c)).collect()
    };
    let res = minimal_resolution(&m, depth);
    let steps = res
        .steps
        .iter()
        .enumerate()
        .map(|(degree, s)| StepJson { degree, multiplicities: named(&s.multiplicities(q.vertex_count())), rank: s.rank() })
        .collect();
    let simple_mods = simples(&alg);
    let per_simple: Vec<Vec<usize>> = simple_mods.iter().map(|s| ext_dims_from(&res, s, depth)).collect();
    let ext_to_simples = (0..=depth).map(|n| per_simple.iter().map(|col| col[n]).collect()).collect();
    let complexity = (depth >= 4).then(|| ComplexityJson::from(&complexity_estimate(&alg, depth, 2, 1)));
    let out = ResolveJson {
        tool: tool(),
        depth,
        module: named(m.dimvec()),
        steps,
        projective_dimension: res.projective_dimension,
        minimal: res.minimal,
        ext_to_simples,
        simple_ext: simple_ext_table(&alg, depth),
        complexity,
    };
    Ok(Output::complete(json(&out)))
}

fn run_tables(surface: &str, range: i64, genus: Option<u64>, n: usize, format: Option<Format>) -> Result<Output, CliError> {
    type Labelled = Vec<(i64, Vec<u64>)>;
    let (corner, cols, rows): (&str, Vec<i64>, Labelled) = if surface == "polyring" {
        let g = genus.ok_or_else(|| CliError::Usage("polyring needs --genus".into()))?;
        let cols: Vec<i64> = (0..=g as i64).collect();
        ("g\\i", cols.clone(), vec![(g as i64, cols.iter().map(|&i| polyring(g, i)).collect())])
    } else {
        let s: Surface = surface.parse().map_err(|e: fproot_core::tables::UnknownSurface| CliError::Usage(e.to_string()))?;
        let cols: Vec<i64> = (-range..=range).collect();
        ("a\\b", cols.clone(), cols.iter().zip(s.grid(range, n)).map(|(&a, row)| (a, row)).collect())
    };
    let text = match format.unwrap_or(Format::Csv) {
        Format::Csv => grid_csv(corner, &cols, &rows),
        Format::Json => json(&TableJson { tool: tool(), surface: surface.to_string(), n, cols, rows }),
        Format::Dot => return Err(unsupported("tables", Format::Dot)),
    };
    Ok(Output::complete(text))
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("FPROOT_THREADS") else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("FPROOT_THREADS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Invariant(format!("thread pool: {e}")))
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    configure_threads()?;
    let json_default = cli.format.unwrap_or(Format::Json);
    match &cli.command {
        Command::Spectral { matrix } => run_spectral(matrix, json_default),
        Command::Quiver { action, quiver } => run_quiver(*action, quiver, cli.format),
        Command::FpScan { algebra, budgets, corrupt_witness } => run_fp_scan(algebra, budgets, json_default, *corrupt_witness),
        Command::Resolve { algebra, module, simple, depth } => {
            run_resolve(algebra, module.as_deref(), simple.as_deref(), *depth, json_default)
        }
        Command::Tables { surface, range, genus, n } => run_tables(surface, *range, *genus, *n, cli.format),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|o| emit(cli.out.as_deref(), &o.text).map(|_| o.partial));
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("fproot: brick-set budget exhausted; the report is partial (truncated = true)");
            ExitCode::from(EXIT_BUDGET as u8)
        }
        Err(e) => {
            eprintln!("fproot: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
