use rand::Rng;

use super::op::{Direction, QWeylOp};
use super::table::FunctionTable;
use crate::scalars::{Gen, LaurentPoly, Monomial, Rational, Scalar};

/// Small random Laurent polynomial in `q` and `gens`, occasionally divided
/// by a binomial in `q`.
pub fn random_scalar<R: Rng>(rng: &mut R, gens: &[Gen]) -> Scalar {
    let nterms = rng.gen_range(1..=3);
    let mut terms = Vec::new();
    for _ in 0..nterms {
        let mut pairs = vec![(Gen::Q, rng.gen_range(-3..=3))];
        for &g in gens {
            pairs.push((g, rng.gen_range(-1..=1)));
        }
        let c = Rational::from_integer(rng.gen_range(-4i64..=4).into());
        terms.push((Monomial::from_pairs(pairs), c));
    }
    let num = LaurentPoly::from_terms(terms);
    let num = if num.is_zero() { LaurentPoly::one() } else { num };
    if rng.gen_bool(0.25) {
        let den = LaurentPoly::q_pow(rng.gen_range(1..=3)).add(&LaurentPoly::from_i64(rng.gen_range(1..=3)));
        Scalar::fraction(num, den).expect("nonzero denominator")
    } else {
        Scalar::from_poly(num)
    }
}

/// Random operator with up to `nterms` terms, `L` powers `<= max_l` and
/// `M` powers in `-max_m..=max_m`.
pub fn random_op<R: Rng>(rng: &mut R, dirs: &[Direction], nterms: usize, max_l: u32, max_m: i32) -> QWeylOp {
    let r = dirs.len();
    let gens: Vec<Gen> = dirs
        .iter()
        .filter_map(|d| match d {
            Direction::Continuous(v) => Some(Gen::x(*v)),
            Direction::Discrete => None,
        })
        .collect();
    let mut op = QWeylOp::zero(dirs.to_vec());
    for _ in 0..nterms {
        let alpha = (0..r).map(|_| rng.gen_range(0..=max_l)).collect();
        let beta = (0..r).map(|_| rng.gen_range(-max_m..=max_m)).collect();
        let c = random_scalar(rng, &gens);
        op = op
            .add(&QWeylOp::term(dirs.to_vec(), c, beta, alpha))
            .expect("same directions");
    }
    op
}

/// Table of random scalars on `lo..=hi`.
pub fn random_table<R: Rng>(rng: &mut R, lo: Vec<i64>, hi: Vec<i64>, gens: &[Gen]) -> FunctionTable {
    let shape = FunctionTable::from_fn(lo.clone(), hi.clone(), |_| Scalar::zero());
    let values = (0..shape.len()).map(|_| random_scalar(rng, gens)).collect();
    FunctionTable::from_values(lo, hi, values).expect("filled window")
}
