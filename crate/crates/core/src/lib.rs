//! Exact sl(2|1) link invariants from typical representations, and q-Weyl
//! recurrence certificates for them.

pub mod diagram;
pub mod exec;
pub mod linalg;
pub mod scalars;
pub mod ribbon;
pub mod superalg;
pub mod qweyl;
