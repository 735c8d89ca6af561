use serde::Serialize;

use super::op::{Direction, QWeylOp};
use super::table::{annihilates, FunctionTable};
use super::QWeylError;
use crate::exec::Execution;
use crate::scalars::{modp, Gen, LaurentPoly, Monomial, Scalar};

/// Single-direction ansatz `sum c_{s,t} M_j^t L_j^s`, `s <= order`, `|t| <= mdegree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ansatz {
    pub direction: usize,
    pub order: u32,
    pub mdegree: u32,
}

impl Ansatz {
    pub fn unknowns(&self) -> usize {
        (self.order as usize + 1) * (2 * self.mdegree as usize + 1)
    }

    /// Points needed along the direction for the system plus held-out checks.
    pub fn min_window(&self) -> usize {
        self.unknowns() + self.order as usize
    }

    fn key(&self, u: usize) -> (u32, i32) {
        let w = 2 * self.mdegree as usize + 1;
        ((u / w) as u32, (u % w) as i32 - self.mdegree as i32)
    }
}

/// Basis of all annihilators of the ansatz shape, each checked on the full window.
pub fn guess_recurrence(f: &FunctionTable, ansatz: Ansatz) -> Result<Vec<QWeylOp>, QWeylError> {
    let j = ansatz.direction;
    if j >= f.rank() {
        return Err(QWeylError::RankMismatch(j + 1, f.rank()));
    }
    if f.extent(j) < ansatz.min_window() {
        return Err(QWeylError::WindowTooSmall {
            dir: j + 1,
            have: f.extent(j),
            need: ansatz.min_window(),
        });
    }
    let nu = ansatz.unknowns();
    let mut hi = f.hi().to_vec();
    hi[j] -= ansatz.order as i64;
    let shape = FunctionTable::from_fn(f.lo().to_vec(), hi, |_| Scalar::zero());
    if full_rank_mod_p(f, &shape, ansatz) {
        return Ok(Vec::new());
    }
    let rows: Vec<Vec<LaurentPoly>> = (0..shape.len())
        .map(|i| {
            let p = shape.point(i);
            // Dividing by f(p) keeps entries small for sequences with
            // simple shift ratios; the row's solutions are unchanged.
            let base = f.get(&p).expect("inside window");
            let scale = if base.is_zero() { Scalar::one() } else { base.inv().expect("nonzero") };
            let row: Vec<Scalar> = (0..nu)
                .map(|u| {
                    let (s, t) = ansatz.key(u);
                    let mut src = p.clone();
                    src[j] += s as i64;
                    let v = f.get(&src).expect("inside window").mul(&scale);
                    v.mul_monomial(&Monomial::q((t as i64 * p[j]) as i32))
                })
                .collect();
            clear_denominators(&row)
        })
        .filter(|r| r.iter().any(|e| !e.is_zero()))
        .collect();
    if rows.is_empty() {
        return Err(QWeylError::Degenerate("table vanishes on the window".into()));
    }
    let basis = nullspace(rows, nu)?;
    let basis: Vec<Vec<Scalar>> = if basis.len() == 1 {
        basis.into_iter().map(|v| v.into_iter().map(Scalar::from_poly).collect()).collect()
    } else {
        reduce(basis.into_iter().map(|v| v.into_iter().map(Scalar::from_poly).collect()).collect())
    };
    let dirs = vec![Direction::Discrete; f.rank()];
    let mut out = Vec::new();
    for v in basis {
        let mut op = QWeylOp::zero(dirs.clone());
        for (u, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (s, t) = ansatz.key(u);
            let mut alpha = vec![0; f.rank()];
            let mut beta = vec![0; f.rank()];
            alpha[j] = s;
            beta[j] = t;
            op = op
                .add(&QWeylOp::term(dirs.clone(), c.clone(), beta, alpha))
                .expect("same directions");
        }
        if !annihilates(&op, f)? {
            return Err(QWeylError::Degenerate(format!("solution fails self-check: {op}")));
        }
        out.push(op);
    }
    Ok(out)
}

/// Full column rank of the system at a fixed point modulo a prime implies
/// full rank over the coefficient field, hence no nonzero solution. `false`
/// is inconclusive.
fn full_rank_mod_p(f: &FunctionTable, shape: &FunctionTable, ansatz: Ansatz) -> bool {
    let j = ansatz.direction;
    let nu = ansatz.unknowns();
    let values: Vec<Option<u64>> = f.values().iter().map(modp::eval_scalar).collect();
    let at = |p: &[i64]| values[f.index(p).expect("inside window")];
    let q = modp::point(Gen::Q);
    let mut rows = Vec::with_capacity(shape.len());
    for i in 0..shape.len() {
        let p = shape.point(i);
        let mut row = Vec::with_capacity(nu);
        for u in 0..nu {
            let (s, t) = ansatz.key(u);
            let mut src = p.clone();
            src[j] += s as i64;
            let Some(v) = at(&src) else { return false };
            row.push(modp::mul(v, modp::pow_signed(q, t as i64 * p[j])));
        }
        rows.push(row);
    }
    modp::rank(rows, nu) == nu
}

/// Tries every admissible ansatz up to the bounds and returns the smallest
/// one (by number of unknowns, then order) with a nonzero solution.
pub fn search_recurrence(
    f: &FunctionTable,
    direction: usize,
    max_order: u32,
    max_mdegree: u32,
    exec: Execution,
) -> Result<Option<(Ansatz, Vec<QWeylOp>)>, QWeylError> {
    let mut cands: Vec<Ansatz> = (1..=max_order)
        .flat_map(|order| {
            (0..=max_mdegree).map(move |mdegree| Ansatz {
                direction,
                order,
                mdegree,
            })
        })
        .filter(|a| direction < f.rank() && f.extent(direction) >= a.min_window())
        .collect();
    cands.sort_by_key(|a| (a.unknowns(), a.order));
    let results = exec.map_slice(&cands, |a| guess_recurrence(f, *a));
    for (a, r) in cands.into_iter().zip(results) {
        let ops = r?;
        if !ops.is_empty() {
            return Ok(Some((a, ops)));
        }
    }
    Ok(None)
}

/// Multiplies a row of fractions by the lcm of its denominators and removes
/// the content of the result.
fn clear_denominators(row: &[Scalar]) -> Vec<LaurentPoly> {
    let reduced: Vec<(LaurentPoly, LaurentPoly)> = row
        .iter()
        .map(|v| {
            let g = v.num().gcd(v.den());
            (
                v.num().div_exact(&g).expect("gcd divides"),
                v.den().div_exact(&g).expect("gcd divides"),
            )
        })
        .collect();
    let mut lcm = LaurentPoly::one();
    for (n, d) in &reduced {
        if !n.is_zero() {
            let g = lcm.gcd(d);
            lcm = lcm.mul(&d.div_exact(&g).expect("gcd divides"));
        }
    }
    let out = reduced
        .iter()
        .map(|(n, d)| {
            if n.is_zero() {
                LaurentPoly::zero()
            } else {
                n.mul(&lcm.div_exact(d).expect("lcm is a multiple"))
            }
        })
        .collect();
    primitive(out)
}

/// Fraction-free elimination with fewest-terms pivoting, then back-substitution
/// without fractions. Returns one basis vector per free column.
fn nullspace(mut a: Vec<Vec<LaurentPoly>>, ncols: usize) -> Result<Vec<Vec<LaurentPoly>>, QWeylError> {
    let nrows = a.len();
    let mut prev = LaurentPoly::one();
    let mut pivots: Vec<usize> = Vec::new();
    let mut used = vec![false; ncols];
    for k in 0..nrows {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for c in (0..ncols).filter(|&c| !used[c]) {
                let n = row[c].len();
                if n > 0 && best.is_none_or(|b| n < b.2) {
                    best = Some((i, c, n));
                }
            }
        }
        let Some((i, c, _)) = best else { break };
        a.swap(k, i);
        used[c] = true;
        pivots.push(c);
        let (top, rest) = a.split_at_mut(k + 1);
        let prow = &top[k];
        let piv = prow[c].clone();
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for c2 in (0..ncols).filter(|&c2| !used[c2]) {
                let v = piv.mul(&row[c2]).sub(&factor.mul(&prow[c2]));
                row[c2] = v
                    .div_exact(&prev)
                    .ok_or_else(|| QWeylError::Degenerate("inexact fraction-free step".into()))?;
            }
            for &pc in &pivots {
                row[pc] = LaurentPoly::zero();
            }
        }
        prev = piv;
    }
    // Cramer numerators: with y_f = det of the pivot block, every other entry
    // is a minor, so each division below is exact.
    let free: Vec<usize> = (0..ncols).filter(|c| !used[*c]).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut y = vec![LaurentPoly::zero(); ncols];
        y[fc] = prev.clone();
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = LaurentPoly::zero();
            for c in (0..ncols).filter(|&c| c != pc) {
                if !a[r][c].is_zero() && !y[c].is_zero() {
                    acc = acc.add(&a[r][c].mul(&y[c]));
                }
            }
            y[pc] = acc
                .neg()
                .div_exact(&a[r][pc])
                .ok_or_else(|| QWeylError::Degenerate("inexact back-substitution".into()))?;
        }
        basis.push(primitive(y));
    }
    Ok(basis)
}

/// Divides by the gcd of the entries, normalized so the last nonzero entry
/// has leading coefficient 1.
fn primitive(v: Vec<LaurentPoly>) -> Vec<LaurentPoly> {
    let mut g = LaurentPoly::zero();
    for p in v.iter().filter(|p| !p.is_zero()) {
        g = g.gcd(p);
        if g.len() == 1 {
            break;
        }
    }
    if g.is_zero() {
        return v;
    }
    let v: Vec<LaurentPoly> = v.iter().map(|p| p.div_exact(&g).expect("gcd divides")).collect();
    let m = v
        .iter()
        .filter(|p| !p.is_zero())
        .map(LaurentPoly::monomial_content)
        .reduce(|a, b| a.gcd(&b))
        .expect("nonzero")
        .inv();
    let v: Vec<LaurentPoly> = v.iter().map(|p| p.mul_monomial(&m)).collect();
    let lead = v.iter().rev().find(|p| !p.is_zero()).expect("nonzero");
    let (_, c) = lead.make_monic();
    let c = c.recip();
    v.iter().map(|p| p.scale(&c)).collect()
}

/// Reduced echelon form with pivots at the highest unknown index, so the
/// basis does not depend on the pivot order of the elimination.
fn reduce(mut basis: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let mut done = 0;
    while done < basis.len() {
        let Some((i, col)) = (done..basis.len())
            .filter_map(|i| basis[i].iter().rposition(|c| !c.is_zero()).map(|c| (i, c)))
            .max_by_key(|&(i, c)| (c, std::cmp::Reverse(i)))
        else {
            break;
        };
        basis.swap(done, i);
        let inv = basis[done][col].inv().expect("nonzero");
        basis[done] = basis[done].iter().map(|c| c.mul(&inv)).collect();
        let pivot = basis[done].clone();
        for (k, v) in basis.iter_mut().enumerate() {
            if k != done && !v[col].is_zero() {
                let f = v[col].clone();
                *v = v.iter().zip(&pivot).map(|(a, b)| a.sub(&f.mul(b))).collect();
            }
        }
        done += 1;
    }
    basis.truncate(done);
    basis
}
