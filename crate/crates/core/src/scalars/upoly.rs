//! Dense univariate polynomials in `q`, used only for denominator gcds.

use num_traits::Zero;

use super::monomial::Monomial;
use super::poly::LaurentPoly;
use super::Rational;

#[derive(Clone, PartialEq, Debug)]
pub(crate) struct UPoly {
    /// `coeffs[i]` is the coefficient of `q^i`; no trailing zeros.
    coeffs: Vec<Rational>,
}

impl UPoly {
    fn trim(mut coeffs: Vec<Rational>) -> UPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    /// Converts a pure-`q` Laurent polynomial, returning the lowest exponent
    /// that was shifted out.
    pub(crate) fn from_laurent(p: &LaurentPoly) -> (UPoly, i32) {
        debug_assert!(p.is_pure_q());
        let low = p
            .terms()
            .iter()
            .map(|(m, _)| m.split_q().0)
            .min()
            .unwrap_or(0);
        let high = p
            .terms()
            .iter()
            .map(|(m, _)| m.split_q().0)
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (m, c) in p.terms() {
            coeffs[(m.split_q().0 - low) as usize] = c.clone();
        }
        (UPoly::trim(coeffs), low)
    }

    pub(crate) fn to_laurent(&self, shift: i32) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Monomial::q(i as i32 + shift), c.clone())),
        )
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn monic(&self) -> UPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                UPoly {
                    coeffs: self.coeffs.iter().map(|c| c * &inv).collect(),
                }
            }
        }
    }

    pub(crate) fn rem(&self, d: &UPoly) -> UPoly {
        self.div_rem(d).1
    }

    pub(crate) fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dl = d.coeffs.len();
        if r.len() < dl {
            return (UPoly { coeffs: vec![] }, self.clone());
        }
        let lc_inv = d.coeffs[dl - 1].recip();
        let mut quot = vec![Rational::zero(); r.len() - dl + 1];
        for k in (0..quot.len()).rev() {
            let c = &r[k + dl - 1] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        (UPoly::trim(quot), UPoly::trim(r))
    }

    /// Monic gcd.
    pub(crate) fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a.monic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_q_numbers() {
        // {4} = q^4 - q^-4 and {2} = q^2 - q^-2 share the factor {2}.
        let b4 = LaurentPoly::q_pow(4).sub(&LaurentPoly::q_pow(-4));
        let b2 = LaurentPoly::q_pow(2).sub(&LaurentPoly::q_pow(-2));
        let (u4, _) = UPoly::from_laurent(&b4);
        let (u2, _) = UPoly::from_laurent(&b2);
        let g = u4.gcd(&u2);
        assert_eq!(g.degree(), 4);
        assert!(u4.rem(&g).is_zero());
        assert!(u2.rem(&g).is_zero());
    }
}
