//! Braid closures, cut (1,1)-tangles and their evaluation to `F'(L)`.

mod braid;
mod eval;
mod invariant;
mod tangle;

pub use braid::{components, parse_braid, BraidParseError, BraidWord};
pub use eval::{
    evaluate, evaluate_highest_weight, scalar_of_column, scalar_of_endo, EvalError,
};
pub use invariant::{
    identify_variables, invariant, self_writhes, EvalMode, InvariantError, InvariantJson,
    InvariantResult,
};
pub use tangle::{close_and_cut, ColoredLink, Factor, LinkError, Slice, SliceTypeError, SlicedTangle};
