use super::op::{parse_op, Direction, QWeylOp};
use super::table::FunctionTable;
use super::QWeylError;
use crate::scalars::{Monomial, Scalar};

pub const BUILTIN_NAMES: [&str; 5] = ["pochhammer", "inv_pochhammer", "indicator", "inv_qnum", "qsquare"];

/// A tabulated q-holonomic function together with known annihilators.
#[derive(Clone, Debug)]
pub struct Builtin {
    pub name: &'static str,
    pub rank: usize,
    /// Smallest admissible lattice point per direction, if bounded.
    pub domain_lo: Vec<Option<i64>>,
    /// Corner of the default tabulation window.
    pub start: Vec<i64>,
    pub ops: Vec<QWeylOp>,
    eval: fn(&[i64]) -> Scalar,
}

impl Builtin {
    pub fn value(&self, p: &[i64]) -> Scalar {
        (self.eval)(p)
    }

    /// Tabulates on `lo..=hi`.
    pub fn table(&self, lo: Vec<i64>, hi: Vec<i64>) -> Result<FunctionTable, QWeylError> {
        if lo.len() != self.rank || hi.len() != self.rank {
            return Err(QWeylError::RankMismatch(lo.len(), self.rank));
        }
        if lo.iter().zip(&self.domain_lo).any(|(l, d)| d.is_some_and(|d| *l < d)) {
            return Err(QWeylError::Window(format!(
                "{} is defined for points >= {:?}",
                self.name, self.domain_lo
            )));
        }
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Err(QWeylError::Window("empty window".into()));
        }
        Ok(FunctionTable::from_fn(lo, hi, self.eval))
    }

    /// Tabulates `size` points per direction from the domain corner.
    pub fn default_table(&self, size: i64) -> FunctionTable {
        let hi = self.start.iter().map(|l| l + size - 1).collect();
        self.table(self.start.clone(), hi).expect("valid window")
    }
}

fn q_pow(e: i64) -> Scalar {
    Scalar::monomial(Monomial::q(e as i32))
}

/// `(q^a; q)_k`.
fn pochhammer(a: i64, k: i64) -> Scalar {
    let mut acc = Scalar::one();
    for j in 0..k {
        acc = acc.mul(&Scalar::one().sub(&q_pow(a + j)));
    }
    acc
}

fn eval_pochhammer(p: &[i64]) -> Scalar {
    pochhammer(p[0], p[1])
}

fn eval_inv_pochhammer(p: &[i64]) -> Scalar {
    pochhammer(p[0], p[1]).inv().expect("n1 >= 1")
}

fn eval_indicator(p: &[i64]) -> Scalar {
    Scalar::from_i64((p[0] <= p[2] && p[2] <= p[1]) as i64)
}

fn eval_inv_qnum(p: &[i64]) -> Scalar {
    let n = p[0];
    q_pow(-n).div(&pochhammer(-2 * n, 1)).expect("n >= 1")
}

fn eval_qsquare(p: &[i64]) -> Scalar {
    q_pow(p[0] * p[0])
}

fn ops(rank: usize, texts: &[&str]) -> Vec<QWeylOp> {
    texts
        .iter()
        .map(|t| parse_op(t, vec![Direction::Discrete; rank]).expect("builtin operator text"))
        .collect()
}

fn product(rank: usize, factors: &[&str]) -> QWeylOp {
    ops(rank, factors)
        .into_iter()
        .reduce(|a, b| a.mul(&b).expect("same rank"))
        .expect("nonempty")
}

/// Looks up a builtin by name.
pub fn builtin(name: &str) -> Result<Builtin, QWeylError> {
    let b = match name {
        "pochhammer" => Builtin {
            name: "pochhammer",
            rank: 2,
            domain_lo: vec![None, Some(0)],
            start: vec![0, 0],
            ops: ops(2, &["(1) * L1 + (-1) * M1 * L1 + (-1) + (1) * M1 * M2", "(1) * L2 + (1) * M1 * M2 + (-1)"]),
            eval: eval_pochhammer,
        },
        "inv_pochhammer" => Builtin {
            name: "inv_pochhammer",
            rank: 2,
            domain_lo: vec![Some(1), Some(0)],
            start: vec![1, 0],
            ops: ops(
                2,
                &["(1) * L1 + (-1) * M1 * M2 * L1 + (1) * M1 + (-1)", "(1) * L2 + (-1) * M1 * M2 * L2 + (-1)"],
            ),
            eval: eval_inv_pochhammer,
        },
        "indicator" => Builtin {
            name: "indicator",
            rank: 3,
            domain_lo: vec![None; 3],
            start: vec![-1, 0, -2],
            ops: vec![
                product(3, &["(1) * M3 + (-1) * M1", "(1) * L1 + (-1)"]),
                product(3, &["(1) * M3 + (-1*q) * M2", "(1) * L2 + (-1)"]),
                product(3, &["(1) * M3 + (-1) * M2", "(1) * M3 + (-1*q^-1) * M1", "(1) * L3 + (-1)"]),
            ],
            eval: eval_indicator,
        },
        "inv_qnum" => Builtin {
            name: "inv_qnum",
            rank: 1,
            domain_lo: vec![Some(1)],
            start: vec![1],
            ops: ops(1, &["(q) * M1 * L1 + (-1*q^-1) * M1^-1 * L1 + (-1) * M1 + (1) * M1^-1"]),
            eval: eval_inv_qnum,
        },
        "qsquare" => Builtin {
            name: "qsquare",
            rank: 1,
            domain_lo: vec![None],
            start: vec![-3],
            ops: ops(1, &["(1) * L1 + (-1*q) * M1^2"]),
            eval: eval_qsquare,
        },
        other => return Err(QWeylError::UnknownBuiltin(other.to_string())),
    };
    Ok(b)
}
