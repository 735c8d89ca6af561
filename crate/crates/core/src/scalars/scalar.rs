use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::monomial::{Gen, GenKind, Monomial};
use super::poly::LaurentPoly;
use super::upoly::UPoly;
use super::{Rational, ScalarError};

/// Element of the fraction field of the Laurent ring in `q`, `x_i`, `z_ij`.
///
/// The denominator is kept monic (leading grlex coefficient 1) and free of
/// monomial content. Pure-`q` factors shared by numerator and denominator
/// are cancelled; otherwise fractions are left unreduced and equality is
/// decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_poly(LaurentPoly::one())
    }

    pub fn from_i64(c: i64) -> Self {
        Scalar::from_poly(LaurentPoly::from_i64(c))
    }

    pub fn from_rational(c: Rational) -> Self {
        Scalar::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Scalar {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Scalar::from_poly(LaurentPoly::monomial(m))
    }

    pub fn q_pow(e: i32) -> Self {
        Scalar::from_poly(LaurentPoly::q_pow(e))
    }

    pub fn gen(g: Gen, e: i32) -> Self {
        Scalar::from_poly(LaurentPoly::gen(g, e))
    }

    /// Builds `num/den`, normalizing. Fails if `den` is zero.
    pub fn fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalized(num, den))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn size(&self) -> usize {
        self.num.len() + self.den.len()
    }

    fn normalized(mut num: LaurentPoly, mut den: LaurentPoly) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        let m = den.monomial_content();
        if !m.is_one() {
            let mi = m.inv();
            den = den.mul_monomial(&mi);
            num = num.mul_monomial(&mi);
        }
        if den.is_constant() {
            let c = den.terms()[0].1.recip();
            return Scalar {
                num: num.scale(&c),
                den: LaurentPoly::one(),
            };
        }
        // Cancel the common pure-q content.
        if let Some(gd) = q_content(&den) {
            if gd.degree() > 0 {
                if let Some(gn) = q_content(&num) {
                    let g = gd.gcd(&gn);
                    if g.degree() > 0 {
                        let gl = g.to_laurent(0);
                        num = num.div_exact(&gl).expect("q-content divides numerator");
                        den = den.div_exact(&gl).expect("q-content divides denominator");
                        let m = den.monomial_content();
                        if !m.is_one() {
                            let mi = m.inv();
                            den = den.mul_monomial(&mi);
                            num = num.mul_monomial(&mi);
                        }
                    }
                }
            }
        }
        if !den.is_pure_q() && den.len() > 1 {
            if let Some(quot) = num.div_exact(&den) {
                return Scalar {
                    num: quot,
                    den: LaurentPoly::one(),
                };
            }
        }
        let (den, lc) = den.make_monic();
        if !lc.is_one() {
            num = num.scale(&lc.recip());
        }
        Scalar { num, den }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.combine(other, true)
    }

    fn combine(&self, other: &Scalar, negate: bool) -> Scalar {
        let op = |a: &LaurentPoly, b: &LaurentPoly| if negate { a.sub(b) } else { a.add(b) };
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        if self.den == other.den {
            if self.den.is_one() {
                return Scalar::from_poly(op(&self.num, &other.num));
            }
            return Scalar::normalized(op(&self.num, &other.num), self.den.clone());
        }
        if self.den.is_pure_q() && other.den.is_pure_q() {
            let (ub, sb) = UPoly::from_laurent(&self.den);
            let (ud, sd) = UPoly::from_laurent(&other.den);
            let g = ub.gcd(&ud);
            if g.degree() > 0 {
                let gl = g.to_laurent(0);
                let b_red = self.den.div_exact(&gl).expect("gcd divides");
                let d_red = other.den.div_exact(&gl).expect("gcd divides");
                let num = op(&self.num.mul(&d_red), &other.num.mul(&b_red));
                let _ = (sb, sd);
                return Scalar::normalized(num, self.den.mul(&d_red));
            }
        }
        let num = op(&self.num.mul(&other.den), &other.num.mul(&self.den));
        Scalar::normalized(num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Scalar::from_poly(self.num.mul(&other.num));
        }
        Scalar::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Scalar {
        self.mul(&Scalar::from_poly(p.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Scalar {
        Scalar {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Scalar {
        Scalar {
            num: self.num.mul_monomial(m),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.num.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalized(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn pow(&self, k: i32) -> Result<Scalar, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Cross-multiplication equality test.
    pub fn equals(&self, other: &Scalar) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Applies a multiplicative substitution of monomials to numerator and
    /// denominator.
    pub fn map_monomials<F>(&self, f: F) -> Scalar
    where
        F: Fn(&Monomial) -> (Monomial, Rational),
    {
        let num = self.num.map_monomials(&f);
        let den = self.den.map_monomials(&f);
        Scalar::normalized(num, den)
    }

    /// The shift `L_i` on continuous variable `i`:
    /// `x_i -> q x_i`, `z_ii -> q x_i^2 z_ii`, `z_ij -> x_j z_ij`.
    pub fn shift(&self, i: u16) -> Scalar {
        self.map_monomials(|m| (shift_monomial(i, m), Rational::one()))
    }

    /// Evaluates at a rational point; `Resample` if the denominator vanishes.
    pub fn eval(&self, point: &Point) -> Result<Rational, ScalarError> {
        let lookup = |g: Gen| point.get(g);
        let d = self.den.eval(lookup).ok_or(ScalarError::MissingValue)?;
        if d.is_zero() {
            return Err(ScalarError::Resample);
        }
        let n = self.num.eval(lookup).ok_or(ScalarError::MissingValue)?;
        Ok(n / d)
    }

    /// Substitutes a rational value for one generator.
    pub fn specialize(&self, g: Gen, value: &Rational) -> Result<Scalar, ScalarError> {
        let sub = |p: &LaurentPoly| {
            LaurentPoly::from_terms(p.terms().iter().map(|(m, c)| {
                let e = m.exponent(g);
                let rest = m.mul(&Monomial::var(g, -e));
                (rest, c * super::poly::pow_rat(value, e))
            }))
        };
        if value.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Scalar::fraction(sub(&self.num), sub(&self.den)).map_err(|_| ScalarError::Resample)
    }

    pub fn generators(&self) -> Vec<Gen> {
        let mut g = self.num.generators();
        g.extend(self.den.generators());
        g.sort();
        g.dedup();
        g
    }
}

fn q_content(p: &LaurentPoly) -> Option<UPoly> {
    let mut acc: Option<UPoly> = None;
    for (_, group) in p.q_groups() {
        let (u, _) = UPoly::from_laurent(&group);
        acc = Some(match acc {
            None => u,
            Some(a) => a.gcd(&u),
        });
        if acc.as_ref().is_some_and(|a| a.degree() == 0) {
            break;
        }
    }
    acc
}

pub(crate) fn shift_monomial(i: u16, m: &Monomial) -> Monomial {
    let mut pairs: Vec<(Gen, i32)> = Vec::with_capacity(m.exponents().len() + 2);
    for &(g, e) in m.exponents() {
        pairs.push((g, e));
        match g.kind() {
            GenKind::X(j) if j == i => pairs.push((Gen::Q, e)),
            GenKind::Z(j, k) if j == i && k == i => {
                pairs.push((Gen::Q, e));
                pairs.push((Gen::x(i), 2 * e));
            }
            GenKind::Z(j, k) if j == i => pairs.push((Gen::x(k), e)),
            GenKind::Z(j, k) if k == i => pairs.push((Gen::x(j), e)),
            _ => {}
        }
    }
    Monomial::from_pairs(pairs)
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl From<i64> for Scalar {
    fn from(c: i64) -> Self {
        Scalar::from_i64(c)
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(p: LaurentPoly) -> Self {
        Scalar::from_poly(p)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ; {}", self.num, self.den)
    }
}

/// Rational assignment of generators, for randomized identity testing.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Point {
    values: BTreeMap<Gen, Rational>,
}

impl Point {
    pub fn new() -> Self {
        Point::default()
    }

    pub fn with(mut self, g: Gen, v: Rational) -> Self {
        self.values.insert(g, v);
        self
    }

    pub fn set(&mut self, g: Gen, v: Rational) {
        self.values.insert(g, v);
    }

    pub fn get(&self, g: Gen) -> Option<Rational> {
        self.values.get(&g).cloned()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Gen, &Rational)> {
        self.values.iter()
    }

    /// Random point with small nonzero rationals for `q` and the given
    /// generators.
    pub fn random<R: rand::Rng>(rng: &mut R, gens: &[Gen]) -> Point {
        let mut p = Point::new();
        let draw = |rng: &mut R| loop {
            let n: i64 = rng.gen_range(2..60);
            let d: i64 = rng.gen_range(1..40);
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            let r = Rational::new((sign * n).into(), d.into());
            if !r.is_one() && r != -Rational::one() {
                return r;
            }
        };
        p.set(Gen::Q, draw(rng));
        for &g in gens {
            if g != Gen::Q {
                p.set(g, draw(rng));
            }
        }
        p
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl std::ops::Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar::add(&self, &rhs)
    }
}
