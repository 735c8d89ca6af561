use serde::Serialize;

use super::color::TypicalColor;
use super::module::TypicalModule;
use crate::linalg::GradedMatrix;
use crate::scalars::Scalar;

type M = GradedMatrix<Scalar>;

/// Outcome of one defining relation checked as a matrix identity.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
    /// First offending entry `(row, col)` on failure.
    pub first_bad: Option<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub a1: u32,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// `[x, y] = xy - (-1)^{|x||y|} yx`.
pub fn supercommutator(x: &M, px: u8, y: &M, py: u8) -> M {
    let yx = y.mul(x);
    if px & py == 1 {
        x.mul(y).add(&yx)
    } else {
        x.mul(y).sub(&yx)
    }
}

/// `(q^h - q^-h) / (q - q^-1)` from the two diagonal exponentials.
fn qbracket_diag(plus: &M, minus: &M) -> M {
    let one = Scalar::q_pow(1).sub(&Scalar::q_pow(-1));
    plus.sub(minus).scale(&Scalar::one().div(&one).unwrap())
}

/// Checks every defining relation of `U_h(sl(2|1))` on `V(a1, a2)`.
pub fn verify_relations(color: TypicalColor) -> RelationReport {
    let m = TypicalModule::new(color);
    let (e1, e2, f1, f2) = (&m.e1, &m.e2, &m.f1, &m.f2);
    let (h1, h2) = (m.h1(), m.h2_offset());
    let zero = M::zeros(m.parity.clone(), m.parity.clone());
    let qq = Scalar::q_pow(1).add(&Scalar::q_pow(-1));
    // Cartan matrix a11 = 2, a12 = a21 = -1, a22 = 0.
    let cartan = [[2i64, -1], [-1, 0]];

    let mut rels: Vec<(String, M, M)> = vec![
        (
            "[E1,F1] = [h1]".into(),
            supercommutator(e1, 0, f1, 0),
            qbracket_diag(&m.qh(1, 0), &m.qh(-1, 0)),
        ),
        (
            "[E2,F2] = [h2]".into(),
            supercommutator(e2, 1, f2, 1),
            qbracket_diag(&m.qh(0, 1), &m.qh(0, -1)),
        ),
        ("[E1,F2] = 0".into(), supercommutator(e1, 0, f2, 1), zero.clone()),
        ("[E2,F1] = 0".into(), supercommutator(e2, 1, f1, 0), zero.clone()),
        ("[h1,h2] = 0".into(), supercommutator(&h1, 0, &h2, 0), zero.clone()),
        ("E2^2 = 0".into(), e2.mul(e2), zero.clone()),
        ("F2^2 = 0".into(), f2.mul(f2), zero.clone()),
        (
            "E1^2 E2 - [2] E1 E2 E1 + E2 E1^2 = 0".into(),
            e1.mul(e1).mul(e2).sub(&e1.mul(e2).mul(e1).scale(&qq)).add(&e2.mul(e1).mul(e1)),
            zero.clone(),
        ),
        (
            "F1^2 F2 - [2] F1 F2 F1 + F2 F1^2 = 0".into(),
            f1.mul(f1).mul(f2).sub(&f1.mul(f2).mul(f1).scale(&qq)).add(&f2.mul(f1).mul(f1)),
            zero.clone(),
        ),
    ];
    let hs = [&h1, &h2];
    let es = [e1, e2];
    let fs = [f1, f2];
    for i in 0..2 {
        for j in 0..2 {
            let a = Scalar::from_i64(cartan[i][j]);
            rels.push((
                format!("[h{},E{}] = {} E{}", i + 1, j + 1, cartan[i][j], j + 1),
                supercommutator(hs[i], 0, es[j], (j == 1) as u8),
                es[j].scale(&a),
            ));
            rels.push((
                format!("[h{},F{}] = {} F{}", i + 1, j + 1, -cartan[i][j], j + 1),
                supercommutator(hs[i], 0, fs[j], (j == 1) as u8),
                fs[j].scale(&a.neg()),
            ));
        }
    }
    let checks = rels
        .into_iter()
        .map(|(name, lhs, rhs)| {
            let first_bad = lhs.first_difference(&rhs);
            RelationCheck {
                name,
                passed: first_bad.is_none(),
                first_bad,
            }
        })
        .collect();
    RelationReport { a1: color.a1, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_small() {
        for a1 in 0..3 {
            let r = verify_relations(TypicalColor::new(a1, 1));
            for c in &r.checks {
                assert!(c.passed, "a1={a1}: {} failed at {:?}", c.name, c.first_bad);
            }
        }
    }
}
