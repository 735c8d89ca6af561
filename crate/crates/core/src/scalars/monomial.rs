use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Generator of the coefficient ring.
///
/// Encoded so that the numeric order is `q < x1 < x2 < ... < z11 < z12 < ...`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Gen(u16);

const Z_BASE: u16 = 0x8000;

impl Gen {
    pub const Q: Gen = Gen(0);

    /// `x_i = q^{a2,i}`, with `i >= 1`.
    pub fn x(i: u16) -> Gen {
        assert!(i >= 1 && i < 256, "x index out of range: {i}");
        Gen(i)
    }

    /// `z_ij = q^{a2,i * a2,j}`; stored with `i <= j`.
    pub fn z(i: u16, j: u16) -> Gen {
        assert!(i >= 1 && j >= 1 && i < 128 && j < 256, "z index out of range");
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        Gen(Z_BASE | (i << 8) | j)
    }

    pub(crate) fn index(self) -> u16 {
        self.0
    }

    pub fn kind(self) -> GenKind {
        if self.0 == 0 {
            GenKind::Q
        } else if self.0 & Z_BASE == 0 {
            GenKind::X(self.0)
        } else {
            let v = self.0 & !Z_BASE;
            GenKind::Z(v >> 8, v & 0xff)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenKind {
    Q,
    X(u16),
    Z(u16, u16),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            GenKind::Q => write!(f, "q"),
            GenKind::X(i) => write!(f, "x{i}"),
            GenKind::Z(i, j) if i < 10 && j < 10 => write!(f, "z{i}{j}"),
            GenKind::Z(i, j) => write!(f, "z{i}_{j}"),
        }
    }
}

/// Laurent monomial: sorted list of (generator, nonzero exponent).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(SmallVec<[(Gen, i32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(g: Gen, e: i32) -> Self {
        let mut m = Monomial::one();
        if e != 0 {
            m.0.push((g, e));
        }
        m
    }

    pub fn q(e: i32) -> Self {
        Monomial::var(Gen::Q, e)
    }

    /// Builds from arbitrary (generator, exponent) pairs, merging repeats.
    pub fn from_pairs<I: IntoIterator<Item = (Gen, i32)>>(pairs: I) -> Self {
        let mut v: SmallVec<[(Gen, i32); 4]> = pairs.into_iter().collect();
        v.sort_by_key(|p| p.0);
        let mut out: SmallVec<[(Gen, i32); 4]> = SmallVec::new();
        for (g, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == g => last.1 += e,
                _ => out.push((g, e)),
            }
        }
        out.retain(|p| p.1 != 0);
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(Gen, i32)] {
        &self.0
    }

    pub fn exponent(&self, g: Gen) -> i32 {
        self.0
            .binary_search_by_key(&g, |p| p.0)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|p| p.1 as i64).sum()
    }

    /// True when the only generator present is `q` (or none).
    pub fn is_pure_q(&self) -> bool {
        self.0.iter().all(|p| p.0 == Gen::Q)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(g, e)| (g, e * k)).collect())
    }

    /// Componentwise minimum of exponents (treating absent entries as 0).
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut pairs: Vec<(Gen, i32)> = Vec::new();
        for &(g, e) in self.0.iter() {
            let f = other.exponent(g);
            pairs.push((g, e.min(f)));
        }
        for &(g, f) in other.0.iter() {
            if self.exponent(g) == 0 {
                pairs.push((g, f.min(0)));
            }
        }
        Monomial::from_pairs(pairs)
    }

    /// Splits into the `q` part and the rest.
    pub fn split_q(&self) -> (i32, Monomial) {
        match self.0.first() {
            Some(&(g, e)) if g == Gen::Q => (e, Monomial(self.0[1..].iter().copied().collect())),
            _ => (0, self.clone()),
        }
    }

    /// Graded lexicographic comparison; among equal total degree, the
    /// monomial with the larger exponent at the first differing generator
    /// (in generator order) is larger.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| lex_cmp(&self.0, &other.0))
    }
}

fn lex_cmp(a: &[(Gen, i32)], b: &[(Gen, i32)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(&(_, e)), None) => return e.cmp(&0),
            (None, Some(&(_, f))) => return 0.cmp(&f),
            (Some(&(g, e)), Some(&(h, f))) => match g.cmp(&h) {
                Ordering::Less => return e.cmp(&0),
                Ordering::Greater => return 0.cmp(&f),
                Ordering::Equal => {
                    if e != f {
                        return e.cmp(&f);
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grlex_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (g, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{g}^{e}")?;
        }
        Ok(())
    }
}
