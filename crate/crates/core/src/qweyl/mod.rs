//! The q-Weyl algebra, its action on function tables, and recurrence
//! guessing and certification.

mod builtins;
mod certify;
mod guess;
mod op;
mod random;
mod table;

pub use builtins::{builtin, Builtin, BUILTIN_NAMES};
pub use certify::{certify, CertificateEntry, HolonomyCertificate, Shape};
pub use guess::{guess_recurrence, search_recurrence, Ansatz};
pub use op::{parse_op, Direction, QWeylOp, TermKey};
pub use random::{random_op, random_scalar, random_table};
pub use table::{annihilates, apply, FunctionTable};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QWeylError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Window(String),
    #[error("window has {have} points in direction {dir}, ansatz needs {need}")]
    WindowTooSmall { dir: usize, have: usize, need: usize },
    #[error("degenerate system: {0}")]
    Degenerate(String),
    #[error("certification refused: {0}")]
    Refused(String),
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("i/o: {0}")]
    Io(String),
}
