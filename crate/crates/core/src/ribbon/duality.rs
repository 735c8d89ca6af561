use crate::linalg::GradedMatrix;
use crate::scalars::{qbracket, Exponent, Gen, Monomial, Scalar};
use crate::superalg::{TypicalColor, TypicalModule};

use super::rmatrix::super_kron;

type M = GradedMatrix<Scalar>;

/// The four duality morphisms of a typical module. The dual basis inherits
/// the parities of `V`; the unit object has one even basis vector.
#[derive(Clone, Debug)]
pub struct DualityMaps {
    /// `1 -> V (x) V*`, `1 -> sum v_i (x) f_i`.
    pub coev_r: M,
    /// `V* (x) V -> 1`, `f (x) v -> f(v)`.
    pub ev_r: M,
    /// `1 -> V* (x) V`, `1 -> sum (-1)^{|v_i|} f_i (x) q^{2 h2} v_i`.
    pub coev_l: M,
    /// `V (x) V* -> 1`, `v (x) f -> (-1)^{|v||f|} f(q^{-2 h2} v)`.
    pub ev_l: M,
}

/// Diagonal of `q^{2 s h2}`.
pub fn pivot_entries(m: &TypicalModule, s: i32) -> Vec<Scalar> {
    m.weights
        .h2_offset
        .iter()
        .map(|&h| {
            Scalar::monomial(Monomial::from_pairs([
                (Gen::Q, 2 * s * h),
                (Gen::x(m.color.var), 2 * s),
            ]))
        })
        .collect()
}

pub fn duality_maps(m: &TypicalModule) -> DualityMaps {
    let n = m.dim();
    let pair_par = super_kron(&m.identity(), &m.identity()).row_parity().to_vec();
    let unit = vec![0u8];
    let diag = |vals: Vec<Scalar>| vals.into_iter().enumerate().map(move |(i, v)| (i * n + i, v));
    let ones = vec![Scalar::one(); n];
    let sign = |i: usize, v: Scalar| if m.parity[i] == 1 { v.neg() } else { v };
    let up: Vec<Scalar> = pivot_entries(m, 1).into_iter().enumerate().map(|(i, v)| sign(i, v)).collect();
    let down: Vec<Scalar> =
        pivot_entries(m, -1).into_iter().enumerate().map(|(i, v)| sign(i, v)).collect();
    let column = |vals: Vec<Scalar>| {
        GradedMatrix::from_triplets(pair_par.clone(), unit.clone(), diag(vals).map(|(r, v)| (r, 0, v)))
    };
    let row = |vals: Vec<Scalar>| {
        GradedMatrix::from_triplets(unit.clone(), pair_par.clone(), diag(vals).map(|(c, v)| (0, c, v)))
    };
    DualityMaps {
        coev_r: column(ones.clone()),
        ev_r: row(ones),
        coev_l: column(up),
        ev_l: row(down),
    }
}

/// `ev_l . coev_r`, the quantum dimension.
pub fn qdim(m: &TypicalModule) -> Scalar {
    let d = duality_maps(m);
    d.ev_l.mul(&d.coev_r).get(0, 0)
}

/// `theta = q^{-2 a2 (a1 + a2 + 1)} = z^-2 x^{-2(a1+1)}`.
pub fn twist_scalar(color: TypicalColor) -> Scalar {
    Scalar::monomial(Monomial::from_pairs([
        (Gen::z(color.var, color.var), -2),
        (Gen::x(color.var), -2 * (color.a1 as i32 + 1)),
    ]))
}

/// `d = {a1+1} / ({1} {a2} {a2+a1+1})`.
pub fn modified_dim(color: TypicalColor) -> Scalar {
    let a1 = color.a1 as i32;
    let v = color.var;
    let br = |e: Exponent| qbracket(&e).expect("affine");
    let den = br(Exponent::int(1))
        .mul(&br(Exponent::affine(0, v, 1)))
        .mul(&br(Exponent::affine(a1 + 1, v, 1)));
    br(Exponent::int(a1 + 1)).div(&den).expect("typical: denominator nonzero")
}
