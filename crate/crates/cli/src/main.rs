use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hodge_fusion::anneal::{anneal_search, BetaSchedule};
use hodge_fusion::cohomology::{betti, euler_poincare_check, mckean_singer_supertrace, poincare_polynomial};
use hodge_fusion::complex::{random_open_set, Cell, DeltaComplex, Label};
use hodge_fusion::constructions::{generate, random_whitney, GeneratorSpec};
use hodge_fusion::document::{parse_document, ComplexDocument};
use hodge_fusion::fusion::{fusion_report, interface_nullity, split, SplitPair};
use hodge_fusion::operator::{dirac, is_valid_delta};
use hodge_fusion::products::{
    barycentric_refinement, geometric_product, join, kunneth_check, shannon_product, suspension, JoinMode,
};
use hodge_fusion::spectral::{block_spectra, check_fusion_bound, check_monotonicity, laplacian_spectrum};
use hodge_fusion::Error;

const GEOMETRIC_WARN_CELLS: usize = 5000;

#[derive(Parser)]
#[command(name = "hodge-fusion", version, about = "Hodge cohomology of complexes, open sets and Δ-sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// f-vector, Betti vector, Euler characteristic and Poincaré polynomial.
    Betti { file: String },
    /// Dimension markers and optionally the Dirac matrix.
    Dirac {
        file: String,
        #[arg(long)]
        matrix: bool,
    },
    /// Eigenvalues of the Hodge Laplacian, per block.
    Spectrum { file: String },
    /// Fusion report for a closed subset and its open complement.
    Fuse {
        file: String,
        /// Complex document holding the closed part.
        #[arg(long, conflicts_with = "closed_cells", required_unless_present = "closed_cells")]
        closed: Option<String>,
        /// Closed part as `1 2 3; 1 2; 1`.
        #[arg(long)]
        closed_cells: Option<String>,
    },
    /// Cartesian product of Δ-sets, or the geometric product.
    Product {
        a: String,
        b: String,
        #[arg(long)]
        geometric: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Join of two complexes (closed by default).
    Join {
        a: String,
        b: String,
        #[arg(long)]
        open: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Suspension.
    Suspend {
        a: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Barycentric refinement.
    Refine {
        a: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Generate a standard complex, e.g. `gen simplex_boundary 3`.
    Gen {
        kind: String,
        params: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Simulated annealing for the split maximizing ‖b(I)‖₁.
    Anneal {
        file: String,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        #[arg(long, env = "HODGE_FUSION_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.1)]
        beta_start: f64,
        #[arg(long, default_value_t = 5.0)]
        beta_end: f64,
        /// Write the per-step trace as CSV (`-` for standard output).
        #[arg(long)]
        trace: Option<String>,
    },
    /// Run the invariant suite on a complex.
    Verify {
        file: String,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, env = "HODGE_FUSION_SEED", default_value_t = 0)]
        seed: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotDeltaSet { .. } | Error::InterfaceMismatch { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type CliResult = Result<ExitCode, Failure>;

struct Input {
    complex: DeltaComplex,
    doc: ComplexDocument,
}

fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("reading standard input: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
    }
}

fn load(path: &str) -> Result<Input, Failure> {
    let text = read_source(path)?;
    let doc = parse_document(&text).map_err(|e| usage(format!("{path}: {e}")))?;
    let complex = doc.to_complex().map_err(|e| usage(format!("{path}: {e}")))?;
    Ok(Input { complex, doc })
}

fn emit(g: &DeltaComplex, format: Format) -> CliResult {
    let doc = ComplexDocument::from_complex(g);
    let text = match format {
        Format::Json => doc.to_json() + "\n",
        Format::Text => doc.to_text(),
    };
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_betti(path: &str) -> CliResult {
    let Input { complex: g, doc } = load(path)?;
    if let Some(name) = &doc.name {
        println!("name = {name}");
    }
    let b = betti(&g)?;
    println!("f = {}", g.f_vector());
    println!("b = {b}");
    println!("chi(f) = {}", g.euler_characteristic());
    println!("chi(b) = {}", b.alternating_sum());
    println!("P(t) = {}", poincare_polynomial(&b));
    Ok(ExitCode::SUCCESS)
}

fn cmd_dirac(path: &str, matrix: bool) -> CliResult {
    let g = load(path)?.complex;
    let bundle = dirac(&g);
    let markers: Vec<String> = bundle.markers.iter().map(usize::to_string).collect();
    println!("n = {}", g.len());
    println!("markers = ({})", markers.join(","));
    if matrix {
        print!("{}", bundle.dirac);
    }
    Ok(ExitCode::SUCCESS)
}

fn fmt_values(v: &[f64]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|x| format!("{:.6}", if x.abs() < 5e-7 { 0.0 } else { *x }))
        .collect();
    format!("[{}]", parts.join(", "))
}

fn cmd_spectrum(path: &str) -> CliResult {
    let g = load(path)?.complex;
    if is_valid_delta(&g) {
        for (p, s) in block_spectra(&g)?.iter().enumerate() {
            println!("L_{p}: {}", fmt_values(s.values()));
        }
    } else {
        eprintln!("warning: d^2 != 0, Hodge blocks are not defined; showing the whole L");
    }
    println!("L: {}", fmt_values(laplacian_spectrum(&g).values()));
    Ok(ExitCode::SUCCESS)
}

/// Resolves a label token against the vertex-name table of the ambient complex.
fn resolve_label(tok: &str, table: Option<&BTreeMap<String, Label>>) -> Result<Label, Failure> {
    if let Ok(n) = tok.parse::<Label>() {
        return Ok(n);
    }
    table
        .and_then(|t| t.get(tok).copied())
        .ok_or_else(|| usage(format!("unknown vertex `{tok}`")))
}

fn parse_cell_list(s: &str, table: Option<&BTreeMap<String, Label>>) -> Result<Vec<Cell>, Failure> {
    s.split(';')
        .map(str::trim)
        .filter(|c| !c.is_empty())
        .map(|c| {
            let labels = c
                .split(|ch: char| ch.is_whitespace() || ch == ',')
                .filter(|t| !t.is_empty())
                .map(|t| resolve_label(t, table))
                .collect::<Result<Vec<_>, _>>()?;
            Cell::new(labels).map_err(|e| usage(format!("--closed-cells `{c}`: {e}")))
        })
        .collect()
}

fn cmd_fuse(path: &str, closed: Option<&str>, closed_cells: Option<&str>) -> CliResult {
    let Input { complex: g, doc } = load(path)?;
    let table = doc.labels.as_ref();
    let k_cells = match (closed, closed_cells) {
        (_, Some(s)) => parse_cell_list(s, table)?,
        (Some(p), None) => {
            let Input { complex: k, doc: kdoc } = load(p)?;
            // names in the second document refer to the vertices of the first
            let rename: BTreeMap<Label, Label> = match (&kdoc.labels, table) {
                (Some(kt), Some(gt)) => kt
                    .iter()
                    .filter_map(|(name, &l)| gt.get(name).map(|&gl| (l, gl)))
                    .collect(),
                _ => BTreeMap::new(),
            };
            k.cells()
                .iter()
                .map(|c| c.map_labels(|v| rename.get(&v).copied().unwrap_or(v)))
                .collect::<Result<Vec<_>, _>>()?
        }
        (None, None) => return Err(usage("one of --closed or --closed-cells is required")),
    };
    let s = split(&g, &k_cells)?;
    let report = fusion_report(&s)?;
    println!("{report}");
    let projection = interface_nullity(&s)?;
    println!("interface nullity = {projection}");
    Ok(if report.inequality_holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_product(a: &str, b: &str, geometric: bool, format: Format) -> CliResult {
    let (a, b) = (load(a)?.complex, load(b)?.complex);
    let g = if geometric {
        let g = geometric_product(&a, &b);
        if g.len() > GEOMETRIC_WARN_CELLS {
            eprintln!(
                "warning: geometric product has {} cells; the Cartesian product has only {}",
                g.len(),
                a.len() * b.len()
            );
        }
        g
    } else {
        shannon_product(&a, &b)
    };
    emit(&g, format)
}

fn cmd_anneal(
    path: &str,
    steps: usize,
    seed: u64,
    schedule: BetaSchedule,
    trace: Option<&str>,
) -> CliResult {
    let g = load(path)?.complex;
    let out = anneal_search(&g, steps, schedule, seed)?;
    if let Some(t) = trace {
        let csv = out.trace_csv();
        if t == "-" {
            print!("{csv}");
        } else {
            fs::write(t, csv).map_err(|e| usage(format!("{t}: {e}")))?;
        }
    }
    let report = fusion_report(&out.best)?;
    let k: Vec<String> = out.best.k_cells().iter().map(Cell::to_string).collect();
    println!("steps = {}", out.trace.len());
    println!("best pi = {}", out.best_pi);
    println!("K = {{{}}}", k.join(","));
    println!("{report}");
    Ok(ExitCode::SUCCESS)
}

struct Suite {
    failed: bool,
    out: io::StdoutLock<'static>,
}

impl Suite {
    fn record(&mut self, name: &str, ok: bool, detail: impl std::fmt::Display) {
        self.failed |= !ok;
        let _ = writeln!(self.out, "{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    }
}

fn random_closed(g: &DeltaComplex, seed: u64) -> Result<SplitPair, Failure> {
    let stars = 1 + (seed % 3) as usize;
    let u = random_open_set(g, stars, seed);
    Ok(SplitPair::from_open(g.clone(), &u)?)
}

fn cmd_verify(path: &str, trials: usize, seed: u64) -> CliResult {
    let g = load(path)?.complex;
    let mut suite = Suite {
        failed: false,
        out: io::stdout().lock(),
    };
    if !is_valid_delta(&g) {
        suite.record("delta", false, "d^2 != 0");
        return Ok(ExitCode::from(1));
    }
    suite.record("delta", true, "d^2 = 0");

    let b = betti(&g)?;
    suite.record(
        "euler-poincare",
        euler_poincare_check(&g)?,
        format!("chi(f) = {}, chi(b) = {}", g.euler_characteristic(), b.alternating_sum()),
    );

    let chi = g.euler_characteristic() as f64;
    let tol = 1e-6 * g.len().max(1) as f64;
    let mut worst = 0.0f64;
    for t in [0.0, 0.25, 1.0, 4.0] {
        worst = worst.max((mckean_singer_supertrace(&g, t)? - chi).abs());
    }
    suite.record("mckean-singer", worst <= tol, format!("max |str - chi| = {worst:.3e}"));

    let (mut mono, mut bound, mut fusion, mut projection) = (0, 0, 0, 0);
    for trial in 0..trials as u64 {
        let s = random_closed(&g, seed.wrapping_add(trial))?;
        let (k, u) = (s.k_cells(), s.u_cells());
        mono += usize::from(check_monotonicity(&g, &k)?.holds() && check_monotonicity(&g, &u)?.holds());
        bound += usize::from(check_fusion_bound(&g, &k)?.holds);
        fusion += usize::from(fusion_report(&s)?.inequality_holds);
        projection += usize::from(interface_nullity(&s).is_ok());
    }
    let frac = |n: usize| format!("{n}/{trials} splits");
    suite.record("spectral-monotonicity", mono == trials, frac(mono));
    suite.record("spectral-fusion-bound", bound == trials, frac(bound));
    suite.record("fusion-inequality", fusion == trials, frac(fusion));
    suite.record("interface-nullity", projection == trials, frac(projection));

    let second = random_whitney(4, 3 + (seed % 4) as usize, seed)?;
    suite.record(
        "kunneth",
        kunneth_check(&g, &second)?,
        format!("second factor b = {}", betti(&second)?),
    );
    Ok(if suite.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Betti { file } => cmd_betti(&file),
        Command::Dirac { file, matrix } => cmd_dirac(&file, matrix),
        Command::Spectrum { file } => cmd_spectrum(&file),
        Command::Fuse {
            file,
            closed,
            closed_cells,
        } => cmd_fuse(&file, closed.as_deref(), closed_cells.as_deref()),
        Command::Product {
            a,
            b,
            geometric,
            format,
        } => cmd_product(&a, &b, geometric, format),
        Command::Join { a, b, open, format } => {
            let mode = if open { JoinMode::Open } else { JoinMode::Closed };
            emit(&join(&load(&a)?.complex, &load(&b)?.complex, mode), format)
        }
        Command::Suspend { a, format } => emit(&suspension(&load(&a)?.complex), format),
        Command::Refine { a, format } => emit(&barycentric_refinement(&load(&a)?.complex), format),
        Command::Gen { kind, params, format } => {
            let spec = GeneratorSpec::from_kind(&kind, &params).map_err(|e| usage(e.to_string()))?;
            emit(&generate(spec).map_err(|e| usage(e.to_string()))?, format)
        }
        Command::Anneal {
            file,
            steps,
            seed,
            beta_start,
            beta_end,
            trace,
        } => cmd_anneal(
            &file,
            steps,
            seed,
            BetaSchedule {
                start: beta_start,
                end: beta_end,
            },
            trace.as_deref(),
        ),
        Command::Verify { file, trials, seed } => cmd_verify(&file, trials, seed),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
