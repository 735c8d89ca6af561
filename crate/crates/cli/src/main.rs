use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sl21::exec::Execution;
use sl21::qweyl::FunctionTable;
use sl21_cli::{cmd_guess, cmd_invariant, cmd_sweep, cmd_verify, Budget, CliError, GuessSource, GuessStatus, JobSpec, Level, ValueKind};

#[derive(Parser)]
#[command(name = "sl21", version, about = "Link invariants from U_h(sl(2|1)) and q-holonomic certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Run data-parallel loops sequentially.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct JobArgs {
    /// Braid word, e.g. "2: s1 s1 s1" (`S` for inverse crossings).
    #[arg(long)]
    braid: String,
    /// `a1=<int>` or `a1=<lo>..<hi>`; once for all components or once per component.
    #[arg(long = "colors", required = true)]
    colors: Vec<String>,
    /// Component that is cut open (0-based).
    #[arg(long, default_value_t = 0)]
    cut: usize,
    /// Strand of the cut component that is left open (0-based).
    #[arg(long, default_value_t = 0)]
    strand: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    #[arg(long, default_value_t = Budget::default().max_a1)]
    max_a1: u32,
    #[arg(long, default_value_t = Budget::default().max_width)]
    max_width: usize,
}

impl From<BudgetArgs> for Budget {
    fn from(b: BudgetArgs) -> Self {
        Budget {
            max_a1: b.max_a1,
            max_width: b.max_width,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// F'(L) for fixed colors.
    Invariant {
        #[command(flatten)]
        job: JobArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Named algebraic and topological checks.
    Verify {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Tabulate F'(L) over an a1 range.
    Sweep {
        #[command(flatten)]
        job: JobArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value_t = ValueKind::Framed)]
        value: ValueKind,
    },
    /// Guess annihilating operators and certify q-holonomicity.
    Guess {
        /// CSV table (`n1,..,nr,value`).
        #[arg(long, conflicts_with_all = ["builtin", "braid"])]
        table: Option<PathBuf>,
        /// Extension of `--table` used as held-out data.
        #[arg(long, requires = "table")]
        heldout: Option<PathBuf>,
        /// Builtin function name.
        #[arg(long, conflicts_with = "braid")]
        builtin: Option<String>,
        /// Points per direction for `--builtin`.
        #[arg(long, default_value_t = 16)]
        size: i64,
        #[arg(long)]
        braid: Option<String>,
        #[arg(long = "colors")]
        colors: Vec<String>,
        #[arg(long, default_value_t = 0)]
        cut: usize,
        #[arg(long, default_value_t = 0)]
        strand: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ValueKind::Framed)]
        value: ValueKind,
        /// Held-out points computed beyond the window.
        #[arg(long, default_value_t = 2)]
        extend: u32,
        /// Maximum L-order.
        #[arg(long, short = 'd', default_value_t = 4)]
        order: u32,
        /// Maximum |M-exponent|.
        #[arg(long, short = 'e', default_value_t = 6)]
        mdegree: u32,
        /// Try every admissible ansatz up to (order, mdegree), smallest first.
        #[arg(long)]
        search: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

fn job(a: &JobArgs) -> Result<JobSpec, CliError> {
    JobSpec::new(&a.braid, &a.colors, a.cut, a.strand, a.seed)
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn read_table(path: &PathBuf) -> Result<FunctionTable, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    FunctionTable::from_csv(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Output text and the error to report after writing it, if any.
fn run(cli: &Cli) -> Result<(String, Option<CliError>), CliError> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    match &cli.command {
        Command::Invariant { job: j, budget } => {
            let doc = cmd_invariant(&job(j)?, (*budget).into(), exec)?;
            let text = match cli.format {
                Format::Json => json(&doc),
                Format::Csv => {
                    let r = &doc.result;
                    let mut s = String::from("key,value\n");
                    let v = serde_json::to_value(r).expect("serializable");
                    for (k, v) in v.as_object().expect("object") {
                        let v = match v {
                            serde_json::Value::String(s) => s.clone(),
                            other => other.to_string(),
                        };
                        s.push_str(&format!("{k},\"{}\"\n", v.replace('"', "\"\"")));
                    }
                    s
                }
            };
            Ok((text, None))
        }
        Command::Verify { level, seed } => {
            let report = cmd_verify(*level, *seed);
            let failed: Vec<String> = report.failures().map(|c| c.name.clone()).collect();
            let err = (!failed.is_empty()).then(|| CliError::Verification(failed.join(", ")));
            Ok((json(&report), err))
        }
        Command::Sweep { job: j, budget, value } => {
            let budget: Budget = (*budget).into();
            let doc = cmd_sweep(&job(j)?, *value, budget, exec)?;
            let err = doc
                .partial
                .then(|| CliError::Budget(format!("range truncated at --max-a1 {}", budget.max_a1)));
            let text = match cli.format {
                Format::Json => json(&doc),
                Format::Csv => doc.to_csv(),
            };
            Ok((text, err))
        }
        Command::Guess {
            table,
            heldout,
            builtin,
            size,
            braid,
            colors,
            cut,
            strand,
            seed,
            value,
            extend,
            order,
            mdegree,
            search,
            budget,
        } => {
            let spec;
            let source = if let Some(path) = table {
                let t = read_table(path)?;
                let h = match heldout {
                    Some(p) => read_table(p)?,
                    None => t.clone(),
                };
                GuessSource::Tables { table: t, heldout: h }
            } else if let Some(name) = builtin {
                GuessSource::Builtin {
                    name,
                    size: *size,
                    extend: *extend as i64,
                }
            } else if let Some(b) = braid {
                spec = JobSpec::new(b, colors, *cut, *strand, *seed)?;
                GuessSource::Sweep {
                    job: &spec,
                    kind: *value,
                    extend: *extend,
                }
            } else {
                return Err(CliError::Usage("guess needs --table, --builtin or --braid".into()));
            };
            let outcome = cmd_guess(source, *order, *mdegree, *search, (*budget).into(), exec)?;
            let err = match outcome.status {
                GuessStatus::Certified => None,
                _ => Some(CliError::Verification(
                    outcome.reason.clone().unwrap_or_else(|| "no certificate".into()),
                )),
            };
            Ok((json(&outcome), err))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = run(&cli).and_then(|(text, err)| {
        match &cli.out {
            Some(p) => std::fs::write(p, &text).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?,
            None => print!("{text}"),
        }
        err.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sl21: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
