use serde::Serialize;
use sl21::diagram::{invariant, EvalMode, InvariantJson, InvariantResult};
use sl21::exec::Execution;
use sl21::qweyl::{
    builtin, certify, guess_recurrence, search_recurrence, Ansatz, FunctionTable, HolonomyCertificate, QWeylError,
    QWeylOp,
};
use sl21::scalars::Scalar;

use crate::job::{ColorSpec, JobSpec};
use crate::CliError;

/// Guards against symbolic blowup.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Budget {
    pub max_a1: u32,
    /// Maximum number of register factors in the cut tangle.
    pub max_width: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_a1: 16,
            max_width: 9,
        }
    }
}

impl Budget {
    fn check_width(&self, job: &JobSpec) -> Result<(), CliError> {
        if job.register_width() > self.max_width {
            return Err(CliError::Budget(format!(
                "register width {} exceeds --max-width {}",
                job.register_width(),
                self.max_width
            )));
        }
        Ok(())
    }
}

/// Which value a sweep tabulates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum ValueKind {
    /// `F'(L)`, the framed invariant.
    #[default]
    Framed,
    /// `F'(L)` times the framing correction `prod theta^-w`.
    Normalized,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantDoc {
    pub job: JobSpec,
    pub result: InvariantJson,
}

fn compute(job: &JobSpec, a1: Option<u32>, exec: Execution) -> Result<InvariantResult, CliError> {
    let link = job.link_at(a1);
    let ribbon = link.ribbon_data(exec);
    invariant(&link, job.cut, job.strand, &ribbon, EvalMode::HighestWeight, exec)
        .map_err(|e| CliError::Usage(e.to_string()))
}

pub fn cmd_invariant(job: &JobSpec, budget: Budget, exec: Execution) -> Result<InvariantDoc, CliError> {
    if job.sweep_range().is_some() {
        return Err(CliError::Usage("invariant takes fixed colors; use sweep for ranges".into()));
    }
    budget.check_width(job)?;
    if let Some(a) = job.colors.iter().find_map(|c| match c {
        ColorSpec::Fixed(a) if *a > budget.max_a1 => Some(*a),
        _ => None,
    }) {
        return Err(CliError::Budget(format!("a1 = {a} exceeds --max-a1 {}", budget.max_a1)));
    }
    let r = compute(job, None, exec)?;
    Ok(InvariantDoc {
        job: job.clone(),
        result: r.to_json(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub a1: u32,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepDoc {
    pub job: JobSpec,
    pub kind: ValueKind,
    /// Set when the budget cut the range short; rows stop at `max_a1`.
    pub partial: bool,
    pub rows: Vec<SweepRow>,
}

impl SweepDoc {
    /// CSV in the table format (`n1,value`); a partial sweep starts with a
    /// `# partial` comment line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if self.partial {
            out.push_str("# partial: range truncated by budget\n");
        }
        out.push_str(&self.table().to_csv());
        out
    }

    pub fn table(&self) -> FunctionTable {
        let lo = self.rows.first().map(|r| r.a1 as i64).unwrap_or(0);
        let hi = self.rows.last().map(|r| r.a1 as i64).unwrap_or(-1);
        let values = self
            .rows
            .iter()
            .map(|r| sl21::scalars::parse_scalar(&r.value).expect("canonical text"))
            .collect();
        FunctionTable::from_values(vec![lo], vec![hi], values).expect("contiguous rows")
    }
}

/// Values over `lo..=hi`, rows computed in parallel.
pub fn sweep_table(
    job: &JobSpec,
    lo: u32,
    hi: u32,
    kind: ValueKind,
    exec: Execution,
) -> Result<Vec<Scalar>, CliError> {
    let a1s: Vec<u32> = (lo..=hi).collect();
    let rows = exec.map_slice(&a1s, |&a| compute(job, Some(a), Execution::Sequential));
    rows.into_iter()
        .map(|r| {
            r.map(|r| match kind {
                ValueKind::Framed => r.value,
                ValueKind::Normalized => r.normalized,
            })
        })
        .collect()
}

/// Tabulates over the swept range. Returns the document and whether the
/// budget truncated it.
pub fn cmd_sweep(job: &JobSpec, kind: ValueKind, budget: Budget, exec: Execution) -> Result<SweepDoc, CliError> {
    let range = job
        .sweep_range()
        .ok_or_else(|| CliError::Usage("sweep needs a range, e.g. --colors a1=0..8".into()))?;
    budget.check_width(job)?;
    let (lo, hi) = (*range.start(), *range.end());
    if lo > budget.max_a1 {
        return Err(CliError::Budget(format!("range starts above --max-a1 {}", budget.max_a1)));
    }
    let partial = hi > budget.max_a1;
    let top = hi.min(budget.max_a1);
    let values = sweep_table(job, lo, top, kind, exec)?;
    let rows = (lo..=top)
        .zip(values)
        .map(|(a1, v)| SweepRow {
            a1,
            value: v.to_string(),
        })
        .collect();
    Ok(SweepDoc {
        job: job.clone(),
        kind,
        partial,
        rows,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GuessStatus {
    Certified,
    NoWitness,
    Refused,
}

#[derive(Clone, Debug, Serialize)]
pub struct GuessOutcome {
    pub status: GuessStatus,
    pub max_order: u32,
    pub max_mdegree: u32,
    /// Ansatz used per direction (absent where nothing was found).
    pub ansatz: Vec<Option<Ansatz>>,
    pub operators: Vec<String>,
    pub certificate: Option<HolonomyCertificate>,
    pub reason: Option<String>,
}

impl GuessOutcome {
    fn failed(status: GuessStatus, d: u32, e: u32, rank: usize, reason: String) -> Self {
        GuessOutcome {
            status,
            max_order: d,
            max_mdegree: e,
            ansatz: vec![None; rank],
            operators: Vec::new(),
            certificate: None,
            reason: Some(reason),
        }
    }
}

/// Guesses an annihilator in every direction and certifies them against
/// `heldout`. With `search`, every admissible ansatz up to `(d, e)` is
/// tried, smallest first; otherwise exactly `(d, e)`.
pub fn guess_table(
    table: &FunctionTable,
    heldout: &FunctionTable,
    d: u32,
    e: u32,
    search: bool,
    exec: Execution,
) -> GuessOutcome {
    guess_with(table, || Ok(heldout.clone()), d, e, search, exec).expect("held-out table given")
}

fn admissible(table: &FunctionTable, j: usize, d: u32, e: u32) -> Vec<Ansatz> {
    (1..=d)
        .flat_map(|order| (0..=e).map(move |mdegree| Ansatz { direction: j, order, mdegree }))
        .filter(|a| table.extent(j) >= a.min_window())
        .collect()
}

/// As `guess_table`, computing the held-out table only once every direction
/// has an operator.
fn guess_with(
    table: &FunctionTable,
    heldout: impl FnOnce() -> Result<FunctionTable, CliError>,
    d: u32,
    e: u32,
    search: bool,
    exec: Execution,
) -> Result<GuessOutcome, CliError> {
    let rank = table.rank();
    let dirs: Vec<usize> = (0..rank).collect();
    let found = exec.map_slice(&dirs, |&j| -> Result<Option<(Ansatz, Vec<QWeylOp>)>, QWeylError> {
        if search {
            search_recurrence(table, j, d, e, Execution::Sequential)
        } else {
            let a = Ansatz {
                direction: j,
                order: d,
                mdegree: e,
            };
            let ops = guess_recurrence(table, a)?;
            Ok((!ops.is_empty()).then_some((a, ops)))
        }
    });
    let mut chosen = Vec::new();
    let mut ansatz = Vec::new();
    for (j, r) in found.into_iter().enumerate() {
        let detail = match r {
            Ok(Some((a, ops))) => {
                let op = ops.into_iter().min_by_key(|o| o.terms().count()).expect("nonempty");
                ansatz.push(Some(a));
                chosen.push(op);
                continue;
            }
            Ok(None) if search => {
                let tried: Vec<String> = admissible(table, j, d, e)
                    .iter()
                    .map(|a| format!("({},{})", a.order, a.mdegree))
                    .collect();
                format!(
                    "; {} points admit (order, M-degree) {}",
                    table.extent(j),
                    if tried.is_empty() { "none".to_string() } else { tried.join(" ") }
                )
            }
            Ok(None) => String::new(),
            Err(err) => format!(": {err}"),
        };
        return Ok(GuessOutcome::failed(
            GuessStatus::NoWitness,
            d,
            e,
            rank,
            format!("no witness at these bounds in direction {}{detail}", j + 1),
        ));
    }
    let heldout = heldout()?;
    let operators = chosen.iter().map(|o| o.to_string()).collect();
    Ok(match certify(table, &chosen, &heldout) {
        Ok(cert) => GuessOutcome {
            status: GuessStatus::Certified,
            max_order: d,
            max_mdegree: e,
            ansatz,
            operators,
            certificate: Some(cert),
            reason: None,
        },
        Err(err) => GuessOutcome {
            status: GuessStatus::Refused,
            max_order: d,
            max_mdegree: e,
            ansatz,
            operators,
            certificate: None,
            reason: Some(err.to_string()),
        },
    })
}

/// Where `cmd_guess` gets its table and held-out extension from.
pub enum GuessSource<'a> {
    /// A table with an independently computed extension.
    Tables { table: FunctionTable, heldout: FunctionTable },
    /// A builtin tabulated from its default corner, `size` points per
    /// direction, extended by `extend`.
    Builtin { name: &'a str, size: i64, extend: i64 },
    /// A sweep of the job's range, extended by `extend` freshly computed rows.
    Sweep { job: &'a JobSpec, kind: ValueKind, extend: u32 },
}

pub fn cmd_guess(
    source: GuessSource<'_>,
    d: u32,
    e: u32,
    search: bool,
    budget: Budget,
    exec: Execution,
) -> Result<GuessOutcome, CliError> {
    match source {
        GuessSource::Tables { table, heldout } => Ok(guess_table(&table, &heldout, d, e, search, exec)),
        GuessSource::Builtin { name, size, extend } => {
            let b = builtin(name).map_err(|e| CliError::Usage(e.to_string()))?;
            let table = b.default_table(size);
            guess_with(&table, || Ok(b.default_table(size + extend)), d, e, search, exec)
        }
        GuessSource::Sweep { job, kind, extend } => {
            let doc = cmd_sweep(job, kind, budget, exec)?;
            if doc.partial {
                return Err(CliError::Budget(format!("sweep truncated at --max-a1 {}", budget.max_a1)));
            }
            let table = doc.table();
            let hi = doc.rows.last().expect("nonempty").a1;
            if hi + extend > budget.max_a1 {
                return Err(CliError::Budget(format!(
                    "held-out rows up to a1 = {} exceed --max-a1 {}",
                    hi + extend,
                    budget.max_a1
                )));
            }
            let heldout = || {
                let extra = sweep_table(job, hi + 1, hi + extend, kind, exec)?;
                let mut values = table.values().to_vec();
                values.extend(extra);
                FunctionTable::from_values(table.lo().to_vec(), vec![(hi + extend) as i64], values)
                    .map_err(|e| CliError::Usage(e.to_string()))
            };
            guess_with(&table, heldout, d, e, search, exec)
        }
    }
}
