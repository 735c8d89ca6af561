//! Super tensor products, R-matrices, braidings, duality maps and twists
//! on typical modules.

mod checks;
mod data;
mod duality;
mod rmatrix;

pub use checks::{qybe_at_point, twist_from_composite, zigzags};
pub use data::{Crossing, RibbonData};
pub use duality::{duality_maps, modified_dim, pivot_entries, qdim, twist_scalar, DualityMaps};
pub use rmatrix::{
    braiding, braiding_inverse, coproduct, eprime_fprime, k_matrix, naturality_holds,
    qexp_factor, r_inverse, r_matrix, super_kron, tau, NonTerminating,
};
