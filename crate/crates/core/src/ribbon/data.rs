use std::collections::HashMap;
use std::sync::Arc;

use crate::exec::Execution;
use crate::linalg::GradedMatrix;
use crate::scalars::Scalar;
use crate::superalg::{TypicalColor, TypicalModule};

use super::duality::{duality_maps, modified_dim, twist_scalar, DualityMaps};
use super::rmatrix::{braiding, braiding_inverse};

/// Braiding `c_{A,B}` and its inverse `c_{A,B}^-1 : V_B (x) V_A -> V_A (x) V_B`.
#[derive(Clone, Debug)]
pub struct Crossing {
    pub c: GradedMatrix<Scalar>,
    pub c_inv: GradedMatrix<Scalar>,
}

/// Per-color and per-ordered-pair ribbon structure for a fixed set of colors.
#[derive(Clone, Debug)]
pub struct RibbonData {
    modules: HashMap<TypicalColor, Arc<TypicalModule>>,
    crossings: HashMap<(TypicalColor, TypicalColor), Arc<Crossing>>,
    duality: HashMap<TypicalColor, Arc<DualityMaps>>,
}

impl RibbonData {
    pub fn new(colors: &[TypicalColor], exec: Execution) -> Self {
        Self::build(colors, true, exec)
    }

    /// Modules and duality maps only; `crossing` panics.
    pub fn without_crossings(colors: &[TypicalColor], exec: Execution) -> Self {
        Self::build(colors, false, exec)
    }

    fn build(colors: &[TypicalColor], with_crossings: bool, exec: Execution) -> Self {
        let mut uniq: Vec<TypicalColor> = colors.to_vec();
        uniq.sort();
        uniq.dedup();
        let modules: HashMap<_, _> = exec
            .map_slice(&uniq, |&c| (c, Arc::new(TypicalModule::new(c))))
            .into_iter()
            .collect();
        let pairs: Vec<(TypicalColor, TypicalColor)> = uniq
            .iter()
            .flat_map(|&a| uniq.iter().map(move |&b| (a, b)))
            .filter(|_| with_crossings)
            .collect();
        let crossings = exec
            .map_slice(&pairs, |&(a, b)| {
                let (ma, mb) = (&modules[&a], &modules[&b]);
                let x = Crossing {
                    c: braiding(ma, mb),
                    c_inv: braiding_inverse(ma, mb),
                };
                ((a, b), Arc::new(x))
            })
            .into_iter()
            .collect();
        let duality = uniq
            .iter()
            .map(|c| (*c, Arc::new(duality_maps(&modules[c]))))
            .collect();
        RibbonData {
            modules,
            crossings,
            duality,
        }
    }

    pub fn module(&self, c: TypicalColor) -> &TypicalModule {
        &self.modules[&c]
    }

    pub fn crossing(&self, a: TypicalColor, b: TypicalColor) -> &Crossing {
        &self.crossings[&(a, b)]
    }

    pub fn duality(&self, c: TypicalColor) -> &DualityMaps {
        &self.duality[&c]
    }

    pub fn twist(&self, c: TypicalColor) -> Scalar {
        twist_scalar(c)
    }

    pub fn modified_dim(&self, c: TypicalColor) -> Scalar {
        modified_dim(c)
    }
}
