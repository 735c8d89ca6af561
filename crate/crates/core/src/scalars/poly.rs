use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::monomial::{Gen, Monomial};
use super::Rational;

/// Sparse Laurent polynomial with exact rational coefficients.
///
/// Terms are kept sorted by descending graded-lex monomial order with no
/// zero coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPoly::term(Monomial::one(), c)
    }

    pub fn from_i64(c: i64) -> Self {
        LaurentPoly::constant(Rational::from_integer(c.into()))
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        LaurentPoly::term(m, Rational::one())
    }

    pub fn gen(g: Gen, e: i32) -> Self {
        LaurentPoly::monomial(Monomial::var(g, e))
    }

    pub fn q_pow(e: i32) -> Self {
        LaurentPoly::monomial(Monomial::q(e))
    }

    /// Collects arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in it {
            if c.is_zero() {
                continue;
            }
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_pure_q(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_pure_q())
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    /// Greatest monomial dividing every term (exponentwise minimum).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |acc, (m, _)| acc.gcd(m))
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.merge(other, true)
    }

    fn merge(&self, other: &LaurentPoly, negate: bool) -> LaurentPoly {
        use std::cmp::Ordering::*;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sgn = |c: &Rational| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Less => {
                    out.push((b[j].0.clone(), sgn(&b[j].1)));
                    j += 1;
                }
                Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sgn(c))));
        LaurentPoly { terms: out }
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                acc.entry(ma.mul(mb))
                    .and_modify(|e| *e += &c)
                    .or_insert(c);
            }
        }
        Self::from_map(acc)
    }

    /// Multiplication by a single term preserves the order of terms.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        self.mul_term(m, &Rational::one())
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Applies a monomial-to-term substitution (a ring endomorphism when the
    /// map is multiplicative).
    pub fn map_monomials<F>(&self, f: F) -> LaurentPoly
    where
        F: Fn(&Monomial) -> (Monomial, Rational),
    {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let (m2, k) = f(m);
            (m2, c * k)
        }))
    }

    pub fn eval<F>(&self, value: F) -> Option<Rational>
    where
        F: Fn(Gen) -> Option<Rational>,
    {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(g, e) in m.exponents() {
                let v = value(g)?;
                if v.is_zero() {
                    return None;
                }
                t *= pow_rat(&v, e);
            }
            total += t;
        }
        Some(total)
    }

    /// Exact division in the Laurent ring; `None` if `d` does not divide.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if d.terms.len() == 1 {
            let (m, c) = &d.terms[0];
            return Some(self.mul_term(&m.inv(), &c.recip()));
        }
        // Reduce to honest polynomials: in the Laurent ring a divisor without
        // monomial content divides a polynomial only with polynomial quotient.
        let md = d.monomial_content();
        let ma = self.monomial_content();
        let dp = d.mul_monomial(&md.inv());
        let mut rem = self.mul_monomial(&ma.inv());
        let (lm, lc) = dp.terms[0].clone();
        let lc_inv = lc.recip();
        let mut quot: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((rm, rc)) = rem.terms.first().cloned() {
            let t = rm.mul(&lm.inv());
            if t.exponents().iter().any(|&(_, e)| e < 0) {
                return None;
            }
            let c = rc * &lc_inv;
            rem = rem.sub(&dp.mul_term(&t, &c));
            quot.push((t, c));
        }
        Some(LaurentPoly::from_terms(quot).mul_monomial(&ma.mul(&md.inv())))
    }

    /// Greatest common divisor, up to a unit (signed monomial times rational).
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        super::mgcd::gcd(self, other)
    }

    /// Content of the coefficients: makes the leading coefficient 1.
    pub fn make_monic(&self) -> (LaurentPoly, Rational) {
        match self.leading() {
            None => (LaurentPoly::zero(), Rational::one()),
            Some((_, c)) => {
                let c = c.clone();
                (self.scale(&c.recip()), c)
            }
        }
    }

    /// Groups terms by their non-`q` part; each group is a Laurent polynomial in q.
    pub fn q_groups(&self) -> Vec<(Monomial, LaurentPoly)> {
        let mut groups: HashMap<Monomial, Vec<(Monomial, Rational)>> = HashMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_q();
            groups.entry(rest).or_default().push((Monomial::q(e), c.clone()));
        }
        let mut out: Vec<_> = groups
            .into_iter()
            .map(|(k, v)| (k, LaurentPoly::from_terms(v)))
            .collect();
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }

    /// Largest exponent magnitude of any generator; a crude size measure.
    pub fn max_abs_exponent(&self) -> i32 {
        self.terms
            .iter()
            .flat_map(|(m, _)| m.exponents().iter().map(|p| p.1.abs()))
            .max()
            .unwrap_or(0)
    }

    pub fn generators(&self) -> Vec<Gen> {
        let mut gens: Vec<Gen> = self
            .terms
            .iter()
            .flat_map(|(m, _)| m.exponents().iter().map(|p| p.0))
            .collect();
        gens.sort();
        gens.dedup();
        gens
    }
}

pub(crate) fn pow_rat(v: &Rational, e: i32) -> Rational {
    let base = if e < 0 { v.recip() } else { v.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

pub(crate) fn fmt_rational(c: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            fmt_rational(c, f)?;
            if !m.is_one() {
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

impl LaurentPoly {
    pub fn is_negative_leading(&self) -> bool {
        self.leading().map(|(_, c)| c.is_negative()).unwrap_or(false)
    }
}
