use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rctrs::code::generator_matrix;
use rctrs::construct::{build_subfield_chain_code, build_subgroup_code, ConstructedCode, SubfieldChainParams, SubgroupConstructionParams};
use rctrs::field::{FieldElement, GaloisField, MultiplicativeSubgroup};
use rctrs::linalg::Matrix;
use rctrs::mds::{min_distance, DEFAULT_BUDGET};
use rctrs::report::{analyze, check_mds, AnalyzeOptions, MdsCheck};
use rctrs::repro::{reproduce, GoldenExample};
use rctrs::schur::{ctrs_distinguisher, is_non_rs, SchurReport};
use rctrs::specfile::{read_spec, write_spec};

/// Environment variable overriding the default enumeration budget.
const BUDGET_VAR: &str = "RCTRS_BUDGET";

#[derive(Parser)]
#[command(name = "rctrs", version, about = "Build and analyze twisted Reed-Solomon codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Describe a field given as `p^m` or `p^m/c_m,...,c_0`.
    FieldInfo { field: String },
    /// Build a codespec from a guaranteed construction.
    #[command(subcommand)]
    Construct(Construct),
    /// Decide whether a code is MDS.
    CheckMds {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Schur-square dimension and what it implies.
    SchurDim { spec: PathBuf },
    /// Minimum distance.
    Distance {
        spec: PathBuf,
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Run one of the Schur-square distinguishers.
    Distinguish {
        spec: PathBuf,
        #[arg(long, value_enum)]
        target: Target,
    },
    /// Rebuild and check the worked examples.
    Reproduce {
        #[arg(long, default_value = "all")]
        example: String,
        #[arg(long)]
        verbose: bool,
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Write a spec's generator matrix (or the normalized spec) to a file.
    Export {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = ExportKind::Matrix)]
        what: ExportKind,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Analyze a matrix file as the generator matrix of a code.
    Import {
        matrix: PathBuf,
        #[arg(long)]
        field: String,
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Full report: parameters, MDS verdict, Schur square.
    Analyze {
        spec: PathBuf,
        #[arg(long)]
        verbose: bool,
        #[arg(long)]
        budget: Option<u128>,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Hook-0 code over a chain of subfields F_q0 < F_q1 <= F_q.
    SubfieldChain {
        #[command(flatten)]
        common: CommonParams,
        #[arg(long)]
        q0_degree: usize,
        #[arg(long)]
        q1_degree: usize,
        /// Comma-separated evaluation points.
        #[arg(long)]
        alphas: String,
    },
    /// Evaluation points from a multiplicative subgroup of F_q0.
    Subgroup {
        #[command(flatten)]
        common: CommonParams,
        #[arg(long, default_value_t = 1)]
        base_degree: usize,
        /// Subgroup order n, which is also the code length.
        #[arg(long)]
        order: u64,
        /// Explicit subgroup listing starting with 1.
        #[arg(long)]
        subgroup: Option<String>,
        #[arg(long, default_value_t = 0)]
        h: usize,
        /// Allow eta inside F_q0^*; no guarantees are recorded.
        #[arg(long)]
        unguaranteed: bool,
    },
}

#[derive(Args)]
struct CommonParams {
    #[arg(long)]
    field: String,
    #[arg(long)]
    k: usize,
    /// Elements are indices, `prim`, or `prim@d` for a subfield primitive.
    #[arg(long)]
    b: String,
    #[arg(long)]
    c: String,
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    eta: String,
    #[arg(long)]
    extended: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Minors,
    Closed,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Rs,
    Ctrs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportKind {
    Matrix,
    Spec,
}

/// Failure classes mapped onto exit codes.
enum Failure {
    /// The analysis ran and the answer was negative.
    Analysis(String),
    /// Bad input.
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Analysis(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn budget(flag: Option<u128>) -> Result<u128, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{BUDGET_VAR}={v:?} is not an integer"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn load(path: &Path) -> Result<rctrs::code::CodeSpec, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    read_spec(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(text: String, output: Option<&Path>) -> Result<String, Failure> {
    match output {
        Some(p) => {
            fs::write(p, &text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            Ok(format!("wrote {}\n", p.display()))
        }
        None => Ok(text),
    }
}

fn elements(field: &GaloisField, list: &str) -> Result<Vec<FieldElement>, Failure> {
    list.split(',')
        .map(|s| field.parse_element(s.trim()).map_err(Failure::from))
        .collect()
}

fn run(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::FieldInfo { field } => field_info(&field),
        Command::Construct(c) => construct(c),
        Command::CheckMds { spec, method } => {
            let g = generator_matrix(&load(&spec)?)?;
            let how = match method {
                Method::Minors => MdsCheck::Minors,
                Method::Closed => MdsCheck::ClosedForm,
                Method::Both => MdsCheck::Both,
            };
            let verdict = check_mds(&g, how)?;
            let line = format!("{verdict}\n");
            if verdict.is_mds {
                Ok(line)
            } else {
                Err(Failure::Analysis(line))
            }
        }
        Command::SchurDim { spec } => {
            let g = generator_matrix(&load(&spec)?)?;
            let mds = check_mds(&g, MdsCheck::Minors)?;
            Ok(format!("{}\n", SchurReport::new(&g.matrix, &mds)))
        }
        Command::Distance { spec, budget: b } => {
            let g = generator_matrix(&load(&spec)?)?;
            Ok(format!("{}\n", min_distance(&g.matrix, budget(b)?)))
        }
        Command::Distinguish { spec, target } => {
            let g = generator_matrix(&load(&spec)?)?;
            let mds = check_mds(&g, MdsCheck::Minors)?;
            Ok(match target {
                Target::Rs => format!("non_rs={}\n", is_non_rs(&g.matrix, &mds)),
                Target::Ctrs => format!("ctrs_incompatible={}\n", ctrs_distinguisher(&g.matrix, &mds)),
            })
        }
        Command::Reproduce {
            example,
            verbose,
            budget: b,
        } => {
            let which: Vec<GoldenExample> = if example == "all" {
                GoldenExample::ALL.to_vec()
            } else {
                vec![example.parse::<GoldenExample>().map_err(Failure::Usage)?]
            };
            let budget = budget(b)?;
            let mut out = String::new();
            let mut ok = true;
            for ex in which {
                for outcome in reproduce(ex, budget)? {
                    ok &= outcome.passed();
                    out.push_str(&outcome.render(verbose));
                }
            }
            if ok {
                Ok(out)
            } else {
                Err(Failure::Analysis(out))
            }
        }
        Command::Export { spec, what, output } => {
            let spec = load(&spec)?;
            let text = match what {
                ExportKind::Matrix => generator_matrix(&spec)?.matrix.to_text(),
                ExportKind::Spec => write_spec(&spec)?,
            };
            emit(text, output.as_deref())
        }
        Command::Import { matrix, field, budget: b } => {
            let field = GaloisField::parse(&field)?;
            let text = fs::read_to_string(&matrix).map_err(|e| Failure::Usage(format!("{}: {e}", matrix.display())))?;
            let m = Matrix::from_text(&field, &text)?;
            let rank = m.rank();
            let mut out = format!("rows={} cols={} rank={rank}\n", m.rows(), m.cols());
            if rank != m.rows() {
                out.push_str("error=rows are linearly dependent\n");
                return Err(Failure::Analysis(out));
            }
            let mds = rctrs::mds::mds_by_minors(&m);
            out.push_str(&format!(
                "{}\n{}\n{}\n",
                min_distance(&m, budget(b)?),
                mds,
                SchurReport::new(&m, &mds)
            ));
            Ok(out)
        }
        Command::Analyze { spec, verbose, budget: b } => {
            let spec = load(&spec)?;
            let report = analyze(
                &spec,
                &AnalyzeOptions {
                    budget: budget(b)?,
                    mds: MdsCheck::Auto,
                },
            )?;
            Ok(report.render(verbose))
        }
    }
}

fn field_info(desc: &str) -> Result<String, Failure> {
    let f = GaloisField::parse(desc)?;
    let mut out = format!(
        "field={}\ncharacteristic={}\ndegree={}\norder={}\nprimitive={}\n",
        f.descriptor(),
        f.characteristic(),
        f.degree(),
        f.order(),
        f.primitive_element()
    );
    for d in (1..=f.degree()).filter(|d| f.degree() % d == 0) {
        let view = f.subfield_view(d)?;
        out.push_str(&format!(
            "subfield degree={d} order={} primitive={}\n",
            view.order(),
            view.primitive_element()
        ));
    }
    Ok(out)
}

fn construct(c: Construct) -> Result<String, Failure> {
    let (built, output): (ConstructedCode, Option<PathBuf>) = match c {
        Construct::SubfieldChain {
            common,
            q0_degree,
            q1_degree,
            alphas,
        } => {
            let f = GaloisField::parse(&common.field)?;
            let params = SubfieldChainParams {
                alphas: elements(&f, &alphas)?,
                b: f.parse_element(&common.b)?,
                c: f.parse_element(&common.c)?,
                lambda: f.parse_element(&common.lambda)?,
                eta: f.parse_element(&common.eta)?,
                ambient: f,
                q0_degree,
                q1_degree,
                k: common.k,
                extended: common.extended,
            };
            (build_subfield_chain_code(&params)?, common.output)
        }
        Construct::Subgroup {
            common,
            base_degree,
            order,
            subgroup,
            h,
            unguaranteed,
        } => {
            let f = GaloisField::parse(&common.field)?;
            let subgroup = match subgroup {
                Some(list) => Some(MultiplicativeSubgroup::from_elements(elements(&f, &list)?)?),
                None => None,
            };
            let params = SubgroupConstructionParams {
                b: f.parse_element(&common.b)?,
                c: f.parse_element(&common.c)?,
                lambda: f.parse_element(&common.lambda)?,
                eta: f.parse_element(&common.eta)?,
                ambient: f,
                base_subfield_degree: base_degree,
                group_order: order,
                subgroup,
                h,
                k: common.k,
                extended: common.extended,
                unguaranteed,
            };
            (build_subgroup_code(&params)?, common.output)
        }
    };
    let mut text = String::new();
    for p in built.guarantees.provenance() {
        text.push_str(&format!("# guarantee {p}\n"));
    }
    for w in &built.warnings {
        text.push_str(&format!("# warning {w}\n"));
    }
    text.push_str(&write_spec(&built.spec)?);
    emit(text, output.as_deref())
}
