//! Arithmetic modulo the Mersenne prime `2^61 - 1` and evaluation of
//! Laurent polynomials at a fixed point, for one-sided fast checks.

use num_bigint::BigInt;

use super::monomial::Gen;
use super::poly::LaurentPoly;
use super::scalar::Scalar;
use super::Rational;

pub(crate) const P: u64 = (1 << 61) - 1;

pub(crate) fn add(a: u64, b: u64) -> u64 {
    (a + b) % P
}

pub(crate) fn sub(a: u64, b: u64) -> u64 {
    (a + P - b) % P
}

pub(crate) fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

pub(crate) fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

pub(crate) fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

/// `x^e` for a signed exponent; `x` must be nonzero.
pub(crate) fn pow_signed(x: u64, e: i64) -> u64 {
    let b = if e < 0 { inv(x) } else { x };
    pow(b, e.unsigned_abs())
}

/// `None` if the denominator vanishes modulo `P`.
pub(crate) fn rational(c: &Rational) -> Option<u64> {
    let p = BigInt::from(P);
    let residue = |n: &BigInt| -> u64 {
        let r = ((n % &p) + &p) % &p;
        r.to_u64_digits().1.first().copied().unwrap_or(0)
    };
    let d = residue(c.denom());
    (d != 0).then(|| mul(residue(c.numer()), inv(d)))
}

/// Fixed nonzero residue assigned to each generator.
pub(crate) fn point(g: Gen) -> u64 {
    1_000_003 + 7_919 * g.index() as u64
}

pub(crate) fn eval_poly(p: &LaurentPoly) -> Option<u64> {
    let mut acc = 0;
    for (m, c) in p.terms() {
        let mut t = rational(c)?;
        for &(g, e) in m.exponents() {
            t = mul(t, pow_signed(point(g), e as i64));
        }
        acc = add(acc, t);
    }
    Some(acc)
}

/// `None` if the denominator vanishes at the point.
pub(crate) fn eval_scalar(s: &Scalar) -> Option<u64> {
    let d = eval_poly(s.den())?;
    (d != 0).then_some(())?;
    Some(mul(eval_poly(s.num())?, inv(d)))
}

/// Rank of a matrix over `F_P`.
pub(crate) fn rank(mut rows: Vec<Vec<u64>>, ncols: usize) -> usize {
    let mut r = 0;
    for c in 0..ncols {
        let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, i);
        let pinv = inv(rows[r][c]);
        for i in r + 1..rows.len() {
            let f = mul(rows[i][c], pinv);
            if f != 0 {
                for k in c..ncols {
                    rows[i][k] = sub(rows[i][k], mul(f, rows[r][k]));
                }
            }
        }
        r += 1;
    }
    r
}
