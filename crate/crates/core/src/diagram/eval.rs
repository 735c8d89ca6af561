use smallvec::SmallVec;

use super::tangle::{Factor, Slice, SliceTypeError, SlicedTangle};
use crate::exec::Execution;
use crate::linalg::GradedMatrix;
use crate::ribbon::RibbonData;
use crate::scalars::{LaurentPoly, Scalar};

/// Basis tensor: the input basis index followed by the register indices.
type Key = SmallVec<[u16; 12]>;
/// Numerators over a denominator shared by the whole state.
type State = Vec<(Key, LaurentPoly)>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Type(#[from] SliceTypeError),
    #[error("endomorphism is not a scalar multiple of the identity (entry {0},{1})")]
    NotScalar(usize, usize),
}

/// A local linear map on `k` adjacent register slots: column `c` (the
/// row-major index of the input slots) lists `(output index, numerator)`,
/// all over the common denominator `den`.
struct Local {
    pos: usize,
    k: usize,
    in_dims: SmallVec<[usize; 2]>,
    out_dims: SmallVec<[usize; 2]>,
    columns: Vec<Vec<(usize, LaurentPoly)>>,
    den: LaurentPoly,
}

fn over_common_den(columns: Vec<Vec<(usize, Scalar)>>) -> (Vec<Vec<(usize, LaurentPoly)>>, LaurentPoly) {
    let mut den = LaurentPoly::one();
    for (_, v) in columns.iter().flatten() {
        if !v.den().is_one() && den.div_exact(v.den()).is_none() {
            let g = den.gcd(v.den());
            den = den.mul(&v.den().div_exact(&g).expect("gcd divides"));
        }
    }
    let cols = columns
        .into_iter()
        .map(|col| {
            col.into_iter()
                .map(|(r, v)| (r, v.num().mul(&den.div_exact(v.den()).expect("common multiple"))))
                .collect()
        })
        .collect();
    (cols, den)
}

impl Local {
    fn new(
        pos: usize,
        k: usize,
        in_dims: &[usize],
        out_dims: &[usize],
        columns: Vec<Vec<(usize, Scalar)>>,
    ) -> Local {
        let (columns, den) = over_common_den(columns);
        Local {
            pos,
            k,
            in_dims: SmallVec::from_slice(in_dims),
            out_dims: SmallVec::from_slice(out_dims),
            columns,
            den,
        }
    }
}

fn local_for(slice: &Slice, reg: &[Factor], ribbon: &RibbonData) -> Option<Local> {
    match *slice {
        Slice::Id => None,
        Slice::Cup { pos, color } => {
            let n = color.dim();
            let cols = ribbon.duality(color).coev_r.columns();
            Some(Local::new(pos, 0, &[], &[n, n], cols))
        }
        Slice::Cap { pos } => {
            let n = reg[pos].color.dim();
            let ev = &ribbon.duality(reg[pos].color).ev_l;
            let mut cols = vec![Vec::new(); n * n];
            for (_, j, v) in ev.iter() {
                cols[j].push((0, v.clone()));
            }
            Some(Local::new(pos, 2, &[n, n], &[], cols))
        }
        Slice::Crossing { pos, positive } => {
            let (a, b) = (reg[pos].color, reg[pos + 1].color);
            // positive: c_{A,B}; negative: c_{B,A}^-1. Both map V_A (x) V_B -> V_B (x) V_A.
            let m = if positive {
                &ribbon.crossing(a, b).c
            } else {
                &ribbon.crossing(b, a).c_inv
            };
            debug_assert_eq!(m.homogeneous_parity(), Some(0));
            Some(Local::new(pos, 2, &[a.dim(), b.dim()], &[b.dim(), a.dim()], m.columns()))
        }
    }
}

fn apply_local(state: State, op: &Local, exec: Execution) -> State {
    let start = 1 + op.pos;
    let expanded = exec.flat_map_chunks(&state, 256, |chunk| {
        let mut out = Vec::new();
        for (key, val) in chunk {
            let mut col = 0usize;
            for (t, d) in op.in_dims.iter().enumerate() {
                col = col * d + key[start + t] as usize;
            }
            for (row, c) in &op.columns[col] {
                let mut nk: Key = SmallVec::with_capacity(key.len() + op.out_dims.len());
                nk.extend_from_slice(&key[..start]);
                let mut digits: SmallVec<[u16; 2]> = SmallVec::new();
                let mut r = *row;
                for d in op.out_dims.iter().rev() {
                    digits.push((r % d) as u16);
                    r /= d;
                }
                nk.extend(digits.into_iter().rev());
                nk.extend_from_slice(&key[start + op.k..]);
                out.push((nk, val.mul(c)));
            }
        }
        out
    });
    merge(expanded, exec)
}

/// Sorts by key and sums equal keys, dropping zeros.
fn merge(mut items: State, exec: Execution) -> State {
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::slice::ParallelSliceMut;
        items.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    } else {
        items.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    }
    #[cfg(not(feature = "parallel"))]
    items.sort_unstable_by(|a, b| a.0.cmp(&b.0));

    let mut bounds = Vec::new();
    let mut i = 0;
    while i < items.len() {
        let mut j = i + 1;
        while j < items.len() && items[j].0 == items[i].0 {
            j += 1;
        }
        bounds.push((i, j));
        i = j;
    }
    let summed = exec.map_slice(&bounds, |&(i, j)| {
        let mut acc = items[i].1.clone();
        for it in &items[i + 1..j] {
            acc = acc.add(&it.1);
        }
        (items[i].0.clone(), acc)
    });
    summed.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

fn propagate(
    tangle: &SlicedTangle,
    ribbon: &RibbonData,
    inputs: &[usize],
    exec: Execution,
) -> Result<Vec<(Key, Scalar)>, EvalError> {
    let regs = tangle.registers()?;
    let mut state: State = inputs
        .iter()
        .map(|&j| (SmallVec::from_slice(&[j as u16, j as u16]), LaurentPoly::one()))
        .collect();
    let mut den = LaurentPoly::one();
    for (idx, slice) in tangle.slices.iter().enumerate() {
        if let Some(op) = local_for(slice, &regs[idx], ribbon) {
            state = apply_local(state, &op, exec);
            den = den.mul(&op.den);
        }
    }
    Ok(exec.map_slice(&state, |(k, v)| {
        (k.clone(), Scalar::fraction(v.clone(), den.clone()).expect("nonzero denominator"))
    }))
}

/// The endomorphism of the input module represented by the tangle.
pub fn evaluate(
    tangle: &SlicedTangle,
    ribbon: &RibbonData,
    exec: Execution,
) -> Result<GradedMatrix<Scalar>, EvalError> {
    let par = ribbon.module(tangle.input).parity.clone();
    let inputs: Vec<usize> = (0..par.len()).collect();
    let state = propagate(tangle, ribbon, &inputs, exec)?;
    Ok(GradedMatrix::from_triplets(
        par.clone(),
        par,
        state.into_iter().map(|(k, v)| (k[1] as usize, k[0] as usize, v)),
    ))
}

/// Image of the highest-weight vector; sufficient for the scalar when the
/// endomorphism is known to be scalar.
pub fn evaluate_highest_weight(
    tangle: &SlicedTangle,
    ribbon: &RibbonData,
    exec: Execution,
) -> Result<Vec<(usize, Scalar)>, EvalError> {
    let state = propagate(tangle, ribbon, &[0], exec)?;
    Ok(state.into_iter().map(|(k, v)| (k[1] as usize, v)).collect())
}

/// `M[0,0]`, after checking `M = M[0,0] Id`.
pub fn scalar_of_endo(m: &GradedMatrix<Scalar>) -> Result<Scalar, EvalError> {
    let s = m.get(0, 0);
    for (i, j, v) in m.iter() {
        if i != j {
            return Err(EvalError::NotScalar(i, j));
        }
        if *v != s {
            return Err(EvalError::NotScalar(i, j));
        }
    }
    for i in 0..m.nrows() {
        if m.row(i).is_empty() && !s.is_zero() {
            return Err(EvalError::NotScalar(i, i));
        }
    }
    Ok(s)
}

/// Scalar from a highest-weight column; the column must be a multiple of `e_0`.
pub fn scalar_of_column(col: &[(usize, Scalar)]) -> Result<Scalar, EvalError> {
    let mut s = Scalar::zero();
    for (i, v) in col {
        if *i != 0 {
            return Err(EvalError::NotScalar(*i, 0));
        }
        s = v.clone();
    }
    Ok(s)
}
