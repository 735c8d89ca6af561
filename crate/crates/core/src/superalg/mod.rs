//! Typical modules of `U_h(sl(2|1))` as explicit graded matrices.

mod color;
mod module;
mod relations;

pub use color::{parity_vector, BasisIndex, Block, TypicalColor, WeightTable};
pub use module::{chebyshev_p, Generator, TypicalModule};
pub use relations::{supercommutator, verify_relations, RelationCheck, RelationReport};
