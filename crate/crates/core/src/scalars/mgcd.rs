//! Multivariate gcd in the Laurent ring by recursive primitive remainder
//! sequences. Results are defined up to units (signed monomials times
//! rationals) and returned with leading coefficient 1 and no monomial content.

use std::collections::BTreeMap;

use num_traits::One;

use super::modp;
use super::monomial::{Gen, Monomial};
use super::poly::LaurentPoly;

/// Divides out the monomial content and makes the leading coefficient 1.
fn normal(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let m = p.monomial_content();
    p.mul_monomial(&m.inv()).make_monic().0
}

/// Coefficients of `p` as a polynomial in `v`, keyed by exponent.
fn coeffs_in(p: &LaurentPoly, v: Gen) -> BTreeMap<i32, LaurentPoly> {
    let mut parts: BTreeMap<i32, Vec<(Monomial, super::Rational)>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.exponent(v);
        parts
            .entry(e)
            .or_default()
            .push((m.mul(&Monomial::var(v, -e)), c.clone()));
    }
    parts
        .into_iter()
        .map(|(e, t)| (e, LaurentPoly::from_terms(t)))
        .collect()
}

fn degree_in(p: &LaurentPoly, v: Gen) -> i32 {
    p.terms().iter().map(|(m, _)| m.exponent(v)).max().unwrap_or(0)
}

fn content_in(p: &LaurentPoly, v: Gen) -> LaurentPoly {
    let mut g = LaurentPoly::zero();
    for c in coeffs_in(p, v).values() {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part of a pseudo-remainder sequence in `v`; inputs are
/// polynomials without monomial content.
fn prs(a: &LaurentPoly, b: &LaurentPoly, v: Gen) -> LaurentPoly {
    let (mut a, mut b) = if degree_in(a, v) >= degree_in(b, v) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    loop {
        let r = prem(&a, &b, v);
        if r.is_zero() {
            return b;
        }
        if degree_in(&r, v) == 0 {
            return LaurentPoly::one();
        }
        let c = content_in(&r, v);
        let r = normal(&r.div_exact(&c).expect("content divides"));
        a = b;
        b = r;
    }
}

fn prem(a: &LaurentPoly, b: &LaurentPoly, v: Gen) -> LaurentPoly {
    let db = degree_in(b, v);
    let lb = coeffs_in(b, v).remove(&db).expect("leading coefficient");
    let mut r = a.clone();
    while !r.is_zero() && degree_in(&r, v) >= db {
        let dr = degree_in(&r, v);
        let lr = coeffs_in(&r, v).remove(&dr).expect("leading coefficient");
        let shift = LaurentPoly::gen(v, dr - db);
        r = r.mul(&lb).sub(&lr.mul(&shift).mul(b));
        r = r.mul_monomial(&r.monomial_content().inv());
    }
    r
}

/// Image of `p` in `F_P[v]` with every other generator sent to a fixed
/// nonzero residue. `None` if a denominator vanishes or an exponent of `v`
/// is negative.
fn image_in(p: &LaurentPoly, v: Gen) -> Option<Vec<u64>> {
    let mut out = vec![0u64; degree_in(p, v).max(0) as usize + 1];
    for (m, c) in p.terms() {
        let mut t = modp::rational(c)?;
        let mut ev = 0;
        for &(g, e) in m.exponents() {
            if g == v {
                ev = e;
                continue;
            }
            t = modp::mul(t, modp::pow_signed(modp::point(g), e as i64));
        }
        if ev < 0 {
            return None;
        }
        let slot = &mut out[ev as usize];
        *slot = modp::add(*slot, t);
    }
    Some(out)
}

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Degree of the gcd of two polynomials over `F_P`.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let lb = modp::inv(*b.last().expect("nonempty"));
        while a.len() >= b.len() {
            let f = modp::mul(*a.last().expect("nonempty"), lb);
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                a[shift + i] = modp::sub(a[shift + i], modp::mul(f, bc));
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True only if `a` and `b` (primitive in `v`) are certainly coprime: their
/// images keep full degree in `v` and have a constant gcd.
fn coprime_by_image(a: &LaurentPoly, b: &LaurentPoly, v: Gen) -> bool {
    let (Some(ia), Some(ib)) = (image_in(a, v), image_in(b, v)) else {
        return false;
    };
    let full = |img: &[u64], p: &LaurentPoly| img.last().is_some_and(|&c| c != 0) && img.len() as i32 == degree_in(p, v) + 1;
    full(&ia, a) && full(&ib, b) && gcd_degree_mod(ia, ib) == 0
}

/// Greatest common divisor up to units.
pub(crate) fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normal(b);
    }
    if b.is_zero() {
        return normal(a);
    }
    let (a, b) = (normal(a), normal(b));
    if a.len() == 1 || b.len() == 1 {
        return LaurentPoly::one();
    }
    if a == b {
        return a;
    }
    let ga = a.generators();
    let gb = b.generators();
    if let Some(&v) = ga.iter().find(|g| !gb.contains(g)) {
        return gcd(&content_in(&a, v), &b);
    }
    if let Some(&v) = gb.iter().find(|g| !ga.contains(g)) {
        return gcd(&a, &content_in(&b, v));
    }
    let v = *ga
        .iter()
        .min_by_key(|&&g| degree_in(&a, g).max(degree_in(&b, g)))
        .expect("nonconstant");
    let ca = content_in(&a, v);
    let cb = content_in(&b, v);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let (pa, pb) = (normal(&pa), normal(&pb));
    let g = if coprime_by_image(&pa, &pb, v) {
        LaurentPoly::one()
    } else {
        prs(&pa, &pb, v)
    };
    let out = normal(&c.mul(&g));
    debug_assert!(!out.is_zero() && out.leading().is_some_and(|(_, c)| c.is_one()));
    out
}
