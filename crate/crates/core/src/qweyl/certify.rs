use serde::Serialize;

use super::op::QWeylOp;
use super::table::{annihilates, FunctionTable};
use super::QWeylError;

/// `Binomial` is `p(M) L_j^d + q(M)`; `Recurrence` also allows intermediate
/// powers of `L_j`, with nonzero leading and trailing coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Binomial,
    Recurrence,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertificateEntry {
    /// 1-based direction.
    pub direction: usize,
    pub order: u32,
    pub shape: Shape,
    pub operator: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HolonomyCertificate {
    pub rank: usize,
    pub entries: Vec<CertificateEntry>,
    pub window_lo: Vec<i64>,
    pub window_hi: Vec<i64>,
    pub heldout_lo: Vec<i64>,
    pub heldout_hi: Vec<i64>,
}

impl HolonomyCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

fn refuse(msg: impl Into<String>) -> QWeylError {
    QWeylError::Refused(msg.into())
}

/// Direction, order and shape of a single-direction operator.
fn classify(op: &QWeylOp) -> Result<(usize, u32, Shape), QWeylError> {
    let active: Vec<usize> = (0..op.rank()).filter(|&i| op.order(i) > 0).collect();
    let j = match active[..] {
        [j] => j,
        [] => return Err(refuse(format!("`{op}` has no shift"))),
        _ => return Err(refuse(format!("`{op}` shifts in more than one direction"))),
    };
    let d = op.order(j);
    let powers: Vec<u32> = op.terms().map(|((a, _), _)| a[j]).collect();
    if !powers.contains(&0) {
        return Err(refuse(format!("`{op}` has zero L^0 coefficient")));
    }
    let shape = if powers.iter().all(|&s| s == 0 || s == d) {
        Shape::Binomial
    } else {
        Shape::Recurrence
    };
    Ok((j, d, shape))
}

/// Checks shapes and coverage, then annihilation on `f` and on `heldout`,
/// an independently computed table on a strictly larger window.
pub fn certify(
    f: &FunctionTable,
    ops: &[QWeylOp],
    heldout: &FunctionTable,
) -> Result<HolonomyCertificate, QWeylError> {
    let r = f.rank();
    if heldout.rank() != r {
        return Err(QWeylError::RankMismatch(heldout.rank(), r));
    }
    let mut entries = Vec::new();
    for op in ops {
        if op.rank() != r {
            return Err(QWeylError::RankMismatch(op.rank(), r));
        }
        let (j, order, shape) = classify(op)?;
        entries.push(CertificateEntry {
            direction: j + 1,
            order,
            shape,
            operator: op.to_string(),
        });
    }
    for j in 1..=r {
        if !entries.iter().any(|e| e.direction == j) {
            return Err(refuse(format!("direction {j} uncovered")));
        }
    }
    let contains = (0..r).all(|i| heldout.lo()[i] <= f.lo()[i] && f.hi()[i] <= heldout.hi()[i]);
    if !contains || heldout.len() == f.len() {
        return Err(refuse("held-out window does not strictly extend the window"));
    }
    for (p, v) in f.iter() {
        if !heldout.get(&p).is_some_and(|w| w.equals(v)) {
            return Err(refuse(format!("held-out table disagrees at {p:?}")));
        }
    }
    for op in ops {
        if !annihilates(op, f)? {
            return Err(refuse(format!("`{op}` does not annihilate the window")));
        }
        if !annihilates(op, heldout)? {
            return Err(refuse(format!("`{op}` fails on the held-out window")));
        }
    }
    Ok(HolonomyCertificate {
        rank: r,
        entries,
        window_lo: f.lo().to_vec(),
        window_hi: f.hi().to_vec(),
        heldout_lo: heldout.lo().to_vec(),
        heldout_hi: heldout.hi().to_vec(),
    })
}
