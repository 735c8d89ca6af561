//! Canonical text form: `<num> ; <den>`, each a `+`-separated sum of terms
//! `coeff*gen^exp*...`. A bare polynomial parses as a scalar with den 1.

use num_bigint::BigInt;

use super::monomial::{Gen, Monomial};
use super::poly::LaurentPoly;
use super::scalar::Scalar;
use super::{Rational, ScalarError};

fn err(pos: usize, msg: impl Into<String>) -> ScalarError {
    ScalarError::Parse {
        pos,
        msg: msg.into(),
    }
}

pub fn parse_scalar(s: &str) -> Result<Scalar, ScalarError> {
    match s.find(';') {
        None => Ok(Scalar::from_poly(parse_poly_at(s, 0)?)),
        Some(k) => {
            let num = parse_poly_at(&s[..k], 0)?;
            let den = parse_poly_at(&s[k + 1..], k + 1)?;
            Scalar::fraction(num, den).map_err(|_| err(k + 1, "zero denominator"))
        }
    }
}

pub fn parse_poly(s: &str) -> Result<LaurentPoly, ScalarError> {
    parse_poly_at(s, 0)
}

fn parse_poly_at(s: &str, base: usize) -> Result<LaurentPoly, ScalarError> {
    if s.trim().is_empty() {
        return Err(err(base, "empty polynomial"));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    for i in 0..=bytes.len() {
        if i == bytes.len() || bytes[i] == b'+' {
            terms.push(parse_term(&s[start..i], base + start)?);
            start = i + 1;
        }
    }
    Ok(LaurentPoly::from_terms(terms))
}

fn parse_term(s: &str, base: usize) -> Result<(Monomial, Rational), ScalarError> {
    let mut coeff = Rational::from_integer(1.into());
    let mut pairs = Vec::new();
    let mut offset = 0;
    for factor in s.split('*') {
        let pos = base + offset + (factor.len() - factor.trim_start().len());
        offset += factor.len() + 1;
        let f = factor.trim();
        if f.is_empty() {
            return Err(err(pos, "empty factor"));
        }
        let first = f.as_bytes()[0];
        if first.is_ascii_digit() || first == b'-' {
            coeff *= parse_rational(f).ok_or_else(|| err(pos, format!("bad coefficient `{f}`")))?;
        } else {
            let (name, exp) = match f.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<i32>()
                        .map_err(|_| err(pos, format!("bad exponent in `{f}`")))?,
                ),
                None => (f, 1),
            };
            let g = parse_gen(name).ok_or_else(|| err(pos, format!("unknown generator `{name}`")))?;
            pairs.push((g, exp));
        }
    }
    Ok((Monomial::from_pairs(pairs), coeff))
}

fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(Rational::new(n.trim().parse().ok()?, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

fn parse_gen(name: &str) -> Option<Gen> {
    if name == "q" {
        return Some(Gen::Q);
    }
    let idx = |t: &str| -> Option<u16> {
        let v: u16 = t.parse().ok()?;
        (v >= 1).then_some(v)
    };
    if let Some(rest) = name.strip_prefix('x') {
        let i = idx(rest)?;
        return (i < 256).then(|| Gen::x(i));
    }
    if let Some(rest) = name.strip_prefix('z') {
        let (i, j) = match rest.split_once('_') {
            Some((a, b)) => (idx(a)?, idx(b)?),
            None if rest.len() == 2 => (idx(&rest[..1])?, idx(&rest[1..])?),
            None => return None,
        };
        return (i.min(j) < 128 && i.max(j) < 256).then(|| Gen::z(i, j));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let x = Scalar::gen(Gen::x(1), 1);
        let z = Scalar::gen(Gen::z(1, 2), -3);
        let s = x
            .add(&Scalar::q_pow(-2))
            .mul(&z)
            .div(&Scalar::q_pow(1).sub(&Scalar::q_pow(-1)).add(&x))
            .unwrap()
            .scale(&Rational::new((-7).into(), 3.into()));
        let text = s.to_string();
        let back = parse_scalar(&text).unwrap();
        assert_eq!(back.to_string(), text);
        assert_eq!(back, s);
    }

    #[test]
    fn hand_written() {
        let s = parse_scalar("q + q^-1").unwrap();
        assert_eq!(s, Scalar::q_pow(1).add(&Scalar::q_pow(-1)));
        let t = parse_scalar("1 ; 1*x1^1 + -1*x1^-1").unwrap();
        assert!(t.mul(&parse_scalar("x1 + -1*x1^-1").unwrap()).is_one());
        assert_eq!(parse_gen("z3_12"), Some(Gen::z(3, 12)));
    }

    #[test]
    fn errors_have_positions() {
        match parse_scalar("q + w^2") {
            Err(ScalarError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_scalar("1 ; 0").is_err());
    }
}
