//! Command-line runner for the `sl2hahn` verification suites.
//!
//! Exit codes: 0 when every item passes, 1 when any item fails or is
//! unresolved at the degree bound, 2 for usage and validation errors.

pub mod json;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sl2hahn::hahn::{self, DEFAULT_DEGREE_BOUND};
use sl2hahn::report::Report;
use sl2hahn::repr::{self, build_l, build_l0, build_l1, evaluate};
use sl2hahn::sample::{random_free, random_usl2, SampleShape};
use sl2hahn::terwilliger::{parse_bitstring, verify_cube, CubeSummary, MAX_DIAMETER};
use sl2hahn::usl2::{self, casimir, parse_element};

use json::{ConfigRecord, ReportDocument, SuiteRecord, SCHEMA_ID};

pub const DEFAULT_SEED: u64 = 0x5eed;
pub const DEFAULT_USL2_N_MAX: usize = 8;
pub const DEFAULT_REPR_N_MAX: usize = 12;
pub const DEFAULT_D_MAX: usize = 8;
/// Largest `D` for which the algebra closure is computed.
pub const CLOSURE_D_MAX: usize = 8;
const SAMPLE_COUNT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RepFamily {
    /// `L_n` with `E`, `F`, `H`.
    L,
    /// `L_n^(0)` with `E^2`, `F^2`, `Λ`, `H`.
    L0,
    /// `L_n^(1)` with `E^2`, `F^2`, `Λ`, `H`.
    L1,
}

#[derive(Debug, Parser)]
#[command(name = "sl2hahn", version, about = "Exact verification of U(sl2), Hahn algebra and hypercube identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Number of suites run concurrently.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
    /// Seed for randomized samples.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Power identities, the automorphism rho, and the even-subalgebra relations.
    VerifyUsl2 {
        #[arg(long, default_value_t = DEFAULT_USL2_N_MAX)]
        n_max: usize,
    },
    /// The natural map, its images, and ideal-membership certificates.
    VerifyHahn {
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND, value_parser = positive)]
        degree_bound: usize,
    },
    /// Modules L_n, L_n^(0), L_n^(1): restriction, irreducibility, classification.
    Repr {
        #[arg(long, default_value_t = DEFAULT_REPR_N_MAX)]
        n_max: usize,
    },
    /// Hypercube and halved-cube decompositions.
    Cube {
        #[command(flatten)]
        range: CubeRange,
    },
    /// Every suite with default bounds unless overridden.
    VerifyAll {
        /// Bound for the power identities.
        #[arg(long, default_value_t = DEFAULT_USL2_N_MAX)]
        n_max: usize,
        #[arg(long, default_value_t = DEFAULT_REPR_N_MAX)]
        repr_n_max: usize,
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND, value_parser = positive)]
        degree_bound: usize,
        #[command(flatten)]
        range: CubeRange,
    },
    /// Print the PBW normal form of an expression in E, F, H, L.
    Normalize { expression: String },
    /// Print the matrices of a module.
    ExportRep {
        #[arg(long, value_enum)]
        family: RepFamily,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, clap::Args)]
pub struct CubeRange {
    #[arg(long, default_value_t = 2, value_parser = diameter)]
    pub d_min: usize,
    #[arg(long, default_value_t = DEFAULT_D_MAX, value_parser = diameter)]
    pub d_max: usize,
    /// Base vertex as a bitstring of length D, most significant bit first.
    #[arg(long)]
    pub base_vertex: Option<String>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn diameter(s: &str) -> Result<usize, String> {
    let d: usize = s.parse().map_err(|e: std::num::ParseIntError| e.to_string())?;
    if (2..=MAX_DIAMETER).contains(&d) {
        Ok(d)
    } else {
        Err(format!("D must lie in 2..={MAX_DIAMETER}"))
    }
}

/// Outcome of a command: the text to write and the exit code.
#[derive(Debug)]
pub struct Output {
    pub body: String,
    pub code: u8,
}

/// Invalid input that clap cannot catch; exits with code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

enum Job {
    Usl2 { n_max: usize, seed: u64 },
    Hahn { bound: usize, seed: u64 },
    Repr { n_max: usize },
    Cube { d: usize, base: usize },
}

enum JobResult {
    Suites(Vec<Report>),
    Cube(Box<CubeSummary>),
}

fn run_job(job: &Job) -> Result<JobResult, UsageError> {
    let shape = SampleShape::default();
    Ok(match *job {
        Job::Usl2 { n_max, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let samples: Vec<_> = (0..SAMPLE_COUNT).map(|_| random_usl2(&mut rng, &shape)).collect();
            let n_max = u32::try_from(n_max).map_err(|_| UsageError("--n-max is too large".into()))?;
            JobResult::Suites(vec![
                usl2::power_identity_suite(n_max),
                usl2::verify_rho_properties(&samples),
                usl2::verify_ue_presentation(),
            ])
        }
        Job::Hahn { bound, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let alphabet = hahn::HahnPresentation::new().alphabet;
            let free_shape = SampleShape { max_exponent: 3, ..shape };
            let samples: Vec<_> = (0..SAMPLE_COUNT).map(|_| random_free(&mut rng, &alphabet, &free_shape)).collect();
            JobResult::Suites(vec![
                hahn::verify_natural_well_defined(),
                hahn::verify_image_gradings(),
                hahn::verify_intertwining(&samples),
                hahn::verify_hahn_identities(bound),
                hahn::verify_kernel_and_inverse(bound),
            ])
        }
        Job::Repr { n_max } => {
            JobResult::Suites(vec![repr::verify_module_facts(n_max), repr::verify_hahn_module_splitting(n_max)])
        }
        Job::Cube { d, base } => {
            let summary = verify_cube(d, base, d <= CLOSURE_D_MAX).map_err(|e| UsageError(e.to_string()))?;
            JobResult::Cube(Box::new(summary))
        }
    })
}

fn cube_jobs(range: &CubeRange, config: &mut ConfigRecord) -> Result<Vec<Job>, UsageError> {
    if range.d_min > range.d_max {
        return Err(UsageError(format!("--d-min {} exceeds --d-max {}", range.d_min, range.d_max)));
    }
    config.d_min = Some(range.d_min);
    config.d_max = Some(range.d_max);
    config.base_vertex.clone_from(&range.base_vertex);
    (range.d_min..=range.d_max)
        .map(|d| {
            let base = match &range.base_vertex {
                Some(s) => parse_bitstring(d, s).map_err(|e| UsageError(format!("--base-vertex: {e}")))?,
                None => 0,
            };
            if base.count_ones() % 2 == 1 {
                return Err(UsageError(format!("--base-vertex {} has odd weight", range.base_vertex.as_deref().unwrap_or(""))));
            }
            Ok(Job::Cube { d, base })
        })
        .collect()
}

fn run_suites(command: &str, jobs: Vec<Job>, config: ConfigRecord, threads: usize) -> Result<ReportDocument, UsageError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| UsageError(format!("cannot start worker threads: {e}")))?;
    let results: Vec<Result<JobResult, UsageError>> = pool.install(|| jobs.par_iter().map(run_job).collect());
    let mut suites: Vec<SuiteRecord> = Vec::new();
    let mut cube = Vec::new();
    for result in results {
        match result? {
            JobResult::Suites(reports) => suites.extend(reports.iter().map(json::suite_record)),
            JobResult::Cube(summary) => {
                suites.push(json::suite_record(&summary.report));
                cube.push(json::cube_record(&summary));
            }
        }
    }
    suites.sort_by(|a, b| a.name.cmp(&b.name));
    cube.sort_by_key(|c| c.d);
    let summary = json::summarize(&suites);
    Ok(ReportDocument { schema: SCHEMA_ID, command: command.into(), config, suites, cube, summary })
}

pub fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    for suite in &doc.suites {
        let _ = writeln!(out, "== {} [{}]", suite.name, suite.status);
        for item in &suite.items {
            let _ = write!(out, "{:<20} {}", item.status, item.name);
            if !item.detail.is_empty() {
                let _ = write!(out, " ({})", item.detail);
            }
            out.push('\n');
        }
    }
    for c in &doc.cube {
        let standard: Vec<String> =
            c.standard_decomposition.iter().map(|s| format!("{}xL_{}", s.multiplicity, s.n)).collect();
        let halved: Vec<String> =
            c.halved_decomposition.iter().map(|s| format!("{}x{}", s.multiplicity, s.label)).collect();
        let te = c.te_dimension.map_or("skipped".to_string(), |t| t.to_string());
        let _ = writeln!(
            out,
            "D={} base={} standard: {} | halved: {} | te_dimension {} formula {} | match {}",
            c.d,
            c.base_vertex,
            standard.join(" + "),
            halved.join(" + "),
            te,
            c.formula_value,
            c.matches
        );
    }
    let s = &doc.summary;
    let _ = writeln!(out, "summary: {} ({} pass, {} fail, {} unresolved)", s.status, s.pass, s.fail, s.unresolved);
    out
}

fn serialize<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report values serialize");
    s.push('\n');
    s
}

fn report_output(doc: &ReportDocument, format: Format) -> Output {
    let body = match format {
        Format::Json => serialize(doc),
        Format::Text => render_text(doc),
    };
    Output { body, code: u8::from(doc.summary.status != "pass") }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Output, UsageError> {
    let threads = usize::from(cli.jobs);
    let mut config = ConfigRecord { seed: cli.seed, ..ConfigRecord::default() };
    let (name, jobs) = match &cli.command {
        Command::VerifyUsl2 { n_max } => {
            config.n_max = Some(*n_max);
            ("verify-usl2", vec![Job::Usl2 { n_max: *n_max, seed: cli.seed }])
        }
        Command::VerifyHahn { degree_bound } => {
            config.degree_bound = Some(*degree_bound);
            ("verify-hahn", vec![Job::Hahn { bound: *degree_bound, seed: cli.seed }])
        }
        Command::Repr { n_max } => {
            config.repr_n_max = Some(*n_max);
            ("repr", vec![Job::Repr { n_max: *n_max }])
        }
        Command::Cube { range } => ("cube", cube_jobs(range, &mut config)?),
        Command::VerifyAll { n_max, repr_n_max, degree_bound, range } => {
            config.n_max = Some(*n_max);
            config.repr_n_max = Some(*repr_n_max);
            config.degree_bound = Some(*degree_bound);
            let mut jobs = vec![
                Job::Hahn { bound: *degree_bound, seed: cli.seed },
                Job::Usl2 { n_max: *n_max, seed: cli.seed },
                Job::Repr { n_max: *repr_n_max },
            ];
            jobs.extend(cube_jobs(range, &mut config)?);
            ("verify-all", jobs)
        }
        Command::Normalize { expression } => return normalize(expression, cli.format),
        Command::ExportRep { family, n } => return export_rep(*family, *n, cli.format),
    };
    let doc = run_suites(name, jobs, config, threads)?;
    Ok(report_output(&doc, cli.format))
}

fn normalize(expression: &str, format: Format) -> Result<Output, UsageError> {
    let element = parse_element(expression).map_err(|e| UsageError(format!("cannot parse {expression:?}: {e}")))?;
    let body = match format {
        Format::Text => format!("{element}\n"),
        Format::Json => {
            let terms: Vec<serde_json::Value> = element
                .terms()
                .iter()
                .map(|(m, c)| serde_json::json!({ "e": m.e, "f": m.f, "h": m.h, "coeff": c.to_string() }))
                .collect();
            serialize(&serde_json::json!({
                "input": expression,
                "normal_form": element.to_string(),
                "even": element.is_even(),
                "terms": terms,
            }))
        }
    };
    Ok(Output { body, code: 0 })
}

fn export_rep(family: RepFamily, n: usize, format: Format) -> Result<Output, UsageError> {
    let (label, ops): (String, Vec<(&str, sl2hahn::linalg::SparseMatrix)>) = match family {
        RepFamily::L => {
            let rep = build_l(n);
            let lam = evaluate(&casimir(), &rep);
            (
                format!("L_{n}"),
                vec![("E", rep.e().clone()), ("F", rep.f().clone()), ("H", rep.h().clone()), ("L", lam)],
            )
        }
        RepFamily::L0 | RepFamily::L1 => {
            let rep = if family == RepFamily::L0 {
                build_l0(n)
            } else {
                build_l1(n).map_err(|e| UsageError(e.to_string()))?
            };
            let tag = if family == RepFamily::L0 { 0 } else { 1 };
            let [e2, f2, lam, h] = rep.operators().map(Clone::clone);
            (format!("L_{n}^({tag})"), vec![("E2", e2), ("F2", f2), ("L", lam), ("H", h)])
        }
    };
    let dim = ops[0].1.nrows();
    let body = match format {
        Format::Json => {
            let operators: serde_json::Map<String, serde_json::Value> = ops
                .iter()
                .map(|(name, m)| ((*name).to_string(), serde_json::json!(json::matrix_record(m))))
                .collect();
            serialize(&serde_json::json!({ "label": label, "dim": dim, "operators": operators }))
        }
        Format::Text => {
            let mut out = format!("{label} dim {dim}\n");
            for (name, m) in &ops {
                let _ = writeln!(out, "{name}:");
                for row in json::matrix_record(m) {
                    let _ = writeln!(out, "  [{}]", row.join(", "));
                }
            }
            out
        }
    };
    Ok(Output { body, code: 0 })
}
