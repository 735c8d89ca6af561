use std::collections::BTreeMap;

use super::monomial::{Gen, Monomial};
use super::poly::LaurentPoly;
use super::scalar::Scalar;
use super::ScalarError;

/// Exponent of `q` as an integer combination of 1, the formal `a2,i` and
/// products `a2,i * a2,j`, so `q^e` is a monomial in `q`, `x_i`, `z_ij`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Exponent {
    pub constant: i32,
    pub linear: BTreeMap<u16, i32>,
    pub quadratic: BTreeMap<(u16, u16), i32>,
}

impl Exponent {
    pub fn int(c: i32) -> Self {
        Exponent {
            constant: c,
            ..Default::default()
        }
    }

    /// `c0 + c1 * a2,i`.
    pub fn affine(c0: i32, i: u16, c1: i32) -> Self {
        let mut e = Exponent::int(c0);
        e.add_linear(i, c1);
        e
    }

    pub fn add_linear(&mut self, i: u16, c: i32) {
        *self.linear.entry(i).or_insert(0) += c;
        self.linear.retain(|_, v| *v != 0);
    }

    pub fn add_quadratic(&mut self, i: u16, j: u16, c: i32) {
        let key = if i <= j { (i, j) } else { (j, i) };
        *self.quadratic.entry(key).or_insert(0) += c;
        self.quadratic.retain(|_, v| *v != 0);
    }

    pub fn neg(&self) -> Exponent {
        Exponent {
            constant: -self.constant,
            linear: self.linear.iter().map(|(&k, &v)| (k, -v)).collect(),
            quadratic: self.quadratic.iter().map(|(&k, &v)| (k, -v)).collect(),
        }
    }

    pub fn is_affine(&self) -> bool {
        self.quadratic.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.constant == 0 && self.linear.is_empty() && self.quadratic.is_empty()
    }

    pub fn monomial(&self) -> Monomial {
        let mut pairs = vec![(Gen::Q, self.constant)];
        pairs.extend(self.linear.iter().map(|(&i, &c)| (Gen::x(i), c)));
        pairs.extend(self.quadratic.iter().map(|(&(i, j), &c)| (Gen::z(i, j), c)));
        Monomial::from_pairs(pairs)
    }

    pub fn q_power(&self) -> Scalar {
        Scalar::monomial(self.monomial())
    }
}

/// `{e} = q^e - q^-e`.
pub fn qbracket(e: &Exponent) -> Result<Scalar, ScalarError> {
    if !e.is_affine() {
        return Err(ScalarError::NonAffine);
    }
    let m = e.monomial();
    Ok(Scalar::from_poly(
        LaurentPoly::monomial(m.clone()).sub(&LaurentPoly::monomial(m.inv())),
    ))
}

/// `[e] = {e}/{1}`.
pub fn qint(e: &Exponent) -> Result<Scalar, ScalarError> {
    let num = qbracket(e)?;
    let one = qbracket(&Exponent::int(1))?;
    num.div(&one)
}

/// `(x;q)_k = prod_{j<k} (1 - x q^j)`.
pub fn qpochhammer(x: &Scalar, k: u32) -> Scalar {
    let mut acc = Scalar::one();
    for j in 0..k {
        let t = Scalar::one().sub(&x.mul(&Scalar::q_pow(j as i32)));
        acc = acc.mul(&t);
    }
    acc
}

/// `(k)_q! = prod_{j=1..k} (1 - q^j)/(1 - q)` for a given base `q`.
pub fn qfactorial_paren(k: u32, base: &Scalar) -> Scalar {
    let mut acc = Scalar::one();
    let mut pow = Scalar::one();
    for _ in 1..=k {
        pow = pow.mul(base);
        let num = Scalar::one().sub(&pow);
        let den = Scalar::one().sub(base);
        acc = acc.mul(&num.div(&den).expect("base is not 1"));
    }
    acc
}
