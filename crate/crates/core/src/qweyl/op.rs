use std::collections::BTreeMap;
use std::fmt;

use super::QWeylError;
use crate::scalars::{parse_scalar, Gen, Scalar};

/// How an operator direction acts: on a tabulated integer variable, or on
/// a formal variable `x_v = q^{a2,v}` carried inside the values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Discrete,
    Continuous(u16),
}

/// `(L-exponents alpha, M-exponents beta)`; a term is `c M^beta L^alpha`.
pub type TermKey = (Vec<u32>, Vec<i32>);

/// Element of the q-Weyl algebra in normal form (all `M`s left of all `L`s).
#[derive(Clone, Debug)]
pub struct QWeylOp {
    dirs: Vec<Direction>,
    terms: BTreeMap<TermKey, Scalar>,
}

impl QWeylOp {
    pub fn zero(dirs: Vec<Direction>) -> Self {
        QWeylOp {
            dirs,
            terms: BTreeMap::new(),
        }
    }

    /// Operator on `r` discrete directions.
    pub fn zero_discrete(r: usize) -> Self {
        QWeylOp::zero(vec![Direction::Discrete; r])
    }

    pub fn constant(dirs: Vec<Direction>, c: Scalar) -> Self {
        let r = dirs.len();
        QWeylOp::zero(dirs).with_term(c, vec![0; r], vec![0; r])
    }

    /// `c M^beta L^alpha`.
    pub fn term(dirs: Vec<Direction>, c: Scalar, beta: Vec<i32>, alpha: Vec<u32>) -> Self {
        QWeylOp::zero(dirs).with_term(c, beta, alpha)
    }

    pub fn l(dirs: Vec<Direction>, i: usize) -> Self {
        let mut alpha = vec![0; dirs.len()];
        alpha[i] = 1;
        let r = dirs.len();
        QWeylOp::term(dirs, Scalar::one(), vec![0; r], alpha)
    }

    pub fn m(dirs: Vec<Direction>, i: usize) -> Self {
        let mut beta = vec![0; dirs.len()];
        beta[i] = 1;
        let r = dirs.len();
        QWeylOp::term(dirs, Scalar::one(), beta, vec![0; r])
    }

    fn with_term(mut self, c: Scalar, beta: Vec<i32>, alpha: Vec<u32>) -> Self {
        assert_eq!(beta.len(), self.dirs.len());
        assert_eq!(alpha.len(), self.dirs.len());
        self.add_term((alpha, beta), c);
        self
    }

    fn add_term(&mut self, key: TermKey, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn dirs(&self) -> &[Direction] {
        &self.dirs
    }

    pub fn rank(&self) -> usize {
        self.dirs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest power of `L_i` present.
    pub fn order(&self, i: usize) -> u32 {
        self.terms.keys().map(|(a, _)| a[i]).max().unwrap_or(0)
    }

    fn check(&self, other: &QWeylOp) -> Result<(), QWeylError> {
        if self.dirs != other.dirs {
            return Err(QWeylError::RankMismatch(self.rank(), other.rank()));
        }
        Ok(())
    }

    pub fn add(&self, other: &QWeylOp) -> Result<QWeylOp, QWeylError> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &QWeylOp) -> Result<QWeylOp, QWeylError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QWeylOp {
        self.scale(&Scalar::from_i64(-1))
    }

    pub fn scale(&self, c: &Scalar) -> QWeylOp {
        let mut out = QWeylOp::zero(self.dirs.clone());
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.mul(c));
        }
        out
    }

    /// Shifts a coefficient past `L^alpha`: continuous directions act by
    /// `scalars::shift`, discrete ones commute with coefficients.
    fn shift_coeff(&self, c: &Scalar, alpha: &[u32]) -> Scalar {
        let mut out = c.clone();
        for (d, &a) in self.dirs.iter().zip(alpha) {
            if let Direction::Continuous(v) = d {
                for _ in 0..a {
                    out = out.shift(*v);
                }
            }
        }
        out
    }

    /// Normal-ordered product using `L_i M_j = q^{delta_ij} M_j L_i`.
    pub fn mul(&self, other: &QWeylOp) -> Result<QWeylOp, QWeylError> {
        self.check(other)?;
        let mut out = QWeylOp::zero(self.dirs.clone());
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let qe: i32 = a1.iter().zip(b2).map(|(&a, &b)| a as i32 * b).sum();
                let c = c1.mul(&self.shift_coeff(c2, a1)).mul(&Scalar::q_pow(qe));
                let alpha = a1.iter().zip(a2).map(|(x, y)| x + y).collect();
                let beta = b1.iter().zip(b2).map(|(x, y)| x + y).collect();
                out.add_term((alpha, beta), c);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> QWeylOp {
        let mut acc = QWeylOp::constant(self.dirs.clone(), Scalar::one());
        for _ in 0..k {
            acc = acc.mul(self).expect("same directions");
        }
        acc
    }

    /// Coefficient-wise equality (cross-multiplication).
    pub fn equals(&self, other: &QWeylOp) -> bool {
        self.dirs == other.dirs
            && self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .all(|(k, v)| other.terms.get(k).is_some_and(|w| w == v))
    }

    /// Coefficient of `M^beta L^alpha`.
    pub fn coefficient(&self, beta: &[i32], alpha: &[u32]) -> Scalar {
        self.terms
            .get(&(alpha.to_vec(), beta.to_vec()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Generators of the coefficient ring other than `q` used in the operator.
    pub fn coefficient_generators(&self) -> Vec<Gen> {
        let mut g: Vec<Gen> = self.terms.values().flat_map(|c| c.generators()).collect();
        g.sort();
        g.dedup();
        g
    }
}

impl fmt::Display for QWeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((alpha, beta), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, &b) in beta.iter().enumerate() {
                if b != 0 {
                    write!(f, " * M{}^{b}", i + 1)?;
                }
            }
            for (i, &a) in alpha.iter().enumerate() {
                if a != 0 {
                    write!(f, " * L{}^{a}", i + 1)?;
                }
            }
        }
        Ok(())
    }
}

/// Parses the `Display` format: `(<scalar>) * M1^b * L1^a + ...`.
pub fn parse_op(text: &str, dirs: Vec<Direction>) -> Result<QWeylOp, QWeylError> {
    let r = dirs.len();
    let mut out = QWeylOp::zero(dirs);
    if text.trim() == "0" {
        return Ok(out);
    }
    let bad = |pos: usize, msg: &str| QWeylError::Parse {
        pos,
        msg: msg.to_string(),
    };
    let bytes = text.as_bytes();
    let mut depth = 0i32;
    let mut start = 0;
    let mut pieces = Vec::new();
    for (i, &ch) in bytes.iter().enumerate() {
        match ch {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' if depth == 0 => {
                pieces.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push((start, &text[start..]));
    for (pos, piece) in pieces {
        let p = piece.trim();
        let open = p.find('(').ok_or_else(|| bad(pos, "expected `(`"))?;
        let close = p.rfind(')').ok_or_else(|| bad(pos, "expected `)`"))?;
        let c = parse_scalar(&p[open + 1..close]).map_err(|e| bad(pos, &e.to_string()))?;
        let mut alpha = vec![0u32; r];
        let mut beta = vec![0i32; r];
        for factor in p[close + 1..].split('*').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, e) = factor.split_once('^').unwrap_or((factor, "1"));
            let (kind, idx) = name.split_at(1);
            let i: usize = idx.parse().map_err(|_| bad(pos, "bad index"))?;
            if i == 0 || i > r {
                return Err(bad(pos, "direction out of range"));
            }
            match kind {
                "M" => beta[i - 1] += e.parse::<i32>().map_err(|_| bad(pos, "bad exponent"))?,
                "L" => alpha[i - 1] += e.parse::<u32>().map_err(|_| bad(pos, "bad exponent"))?,
                _ => return Err(bad(pos, "expected M or L")),
            }
        }
        out.add_term((alpha, beta), c);
    }
    Ok(out)
}
