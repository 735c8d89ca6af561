use serde::Serialize;

use super::eval::{evaluate, evaluate_highest_weight, scalar_of_column, scalar_of_endo, EvalError};
use super::tangle::{close_and_cut, ColoredLink, LinkError};
use crate::exec::Execution;
use crate::ribbon::{twist_scalar, RibbonData};
use crate::scalars::{Gen, GenKind, Monomial, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error(transparent)]
    Link(#[from] LinkError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// How much of the cut-tangle endomorphism to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EvalMode {
    /// Every column, checking the endomorphism is scalar.
    #[default]
    Full,
    /// Only the image of the highest-weight vector.
    HighestWeight,
}

#[derive(Clone, Debug)]
pub struct InvariantResult {
    /// `<T>` with `F(T) = <T> Id`.
    pub tangle_scalar: Scalar,
    pub modified_dim: Scalar,
    /// `F'(L) = d <T>` (framed).
    pub value: Scalar,
    pub writhe: i64,
    /// Per component, the signed count of crossings of the component with itself.
    pub self_writhes: Vec<i64>,
    /// `F'(L) prod_c theta_c^{-w_c}`.
    pub normalized: Scalar,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantJson {
    pub tangle_scalar: String,
    pub modified_dim: String,
    pub value: String,
    pub writhe: i64,
    pub self_writhes: Vec<i64>,
    pub normalized: String,
}

impl InvariantResult {
    pub fn to_json(&self) -> InvariantJson {
        InvariantJson {
            tangle_scalar: self.tangle_scalar.to_string(),
            modified_dim: self.modified_dim.to_string(),
            value: self.value.to_string(),
            writhe: self.writhe,
            self_writhes: self.self_writhes.clone(),
            normalized: self.normalized.to_string(),
        }
    }

    /// Applies a ring map to every scalar field.
    pub fn map_scalars<F: Fn(&Scalar) -> Scalar>(&self, f: F) -> InvariantResult {
        InvariantResult {
            tangle_scalar: f(&self.tangle_scalar),
            modified_dim: f(&self.modified_dim),
            value: f(&self.value),
            writhe: self.writhe,
            self_writhes: self.self_writhes.clone(),
            normalized: f(&self.normalized),
        }
    }
}

pub fn self_writhes(link: &ColoredLink) -> Vec<i64> {
    let comp = link.component_of_position();
    let mut w = vec![0i64; link.colors.len()];
    for (sign, l, r) in link.braid.crossings() {
        if comp[l] == comp[r] {
            w[comp[l]] += sign as i64;
        }
    }
    w
}

/// `F'(L)` cutting strand `strand` of component `cut`.
pub fn invariant(
    link: &ColoredLink,
    cut: usize,
    strand: usize,
    ribbon: &RibbonData,
    mode: EvalMode,
    exec: Execution,
) -> Result<InvariantResult, InvariantError> {
    let tangle = close_and_cut(link, cut, strand)?;
    let t = match mode {
        EvalMode::Full => scalar_of_endo(&evaluate(&tangle, ribbon, exec)?)?,
        EvalMode::HighestWeight => scalar_of_column(&evaluate_highest_weight(&tangle, ribbon, exec)?)?,
    };
    let d = ribbon.modified_dim(tangle.input);
    let value = d.mul(&t);
    let sw = self_writhes(link);
    let mut normalized = value.clone();
    for (c, &w) in link.colors.iter().zip(&sw) {
        let th = twist_scalar(*c).pow(-w as i32).expect("twist is a unit");
        normalized = normalized.mul(&th);
    }
    Ok(InvariantResult {
        tangle_scalar: t,
        modified_dim: d,
        value,
        writhe: link.braid.writhe(),
        self_writhes: sw,
        normalized,
    })
}

/// Ring map sending `x_i -> x_{f(i)}` and `z_ij -> z_{f(i) f(j)}`.
pub fn identify_variables<F: Fn(u16) -> u16>(s: &Scalar, f: F) -> Scalar {
    s.map_monomials(|m| {
        let pairs = m.exponents().iter().map(|&(g, e)| {
            let g2 = match g.kind() {
                GenKind::Q => Gen::Q,
                GenKind::X(i) => Gen::x(f(i)),
                GenKind::Z(i, j) => Gen::z(f(i), f(j)),
            };
            (g2, e)
        });
        (Monomial::from_pairs(pairs), Rational::from_integer(1.into()))
    })
}
