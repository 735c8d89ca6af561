use super::color::{parity_vector, BasisIndex, Block, TypicalColor, WeightTable};
use crate::linalg::GradedMatrix;
use crate::scalars::{qint, Exponent, LaurentPoly, Monomial, Gen, Scalar};

/// Generators of `U_h(sl(2|1))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    H1,
    H2,
    E1,
    E2,
    F1,
    F2,
}

impl Generator {
    pub const ALL: [Generator; 6] = [
        Generator::H1,
        Generator::H2,
        Generator::E1,
        Generator::E2,
        Generator::F1,
        Generator::F2,
    ];

    pub fn parity(self) -> u8 {
        match self {
            Generator::E2 | Generator::F2 => 1,
            _ => 0,
        }
    }
}

/// `P_0 = 1`, `P_1 = q + q^-1`, `P_n = (q + q^-1) P_{n-1} - P_{n-2}`, `P_{-1} = 0`.
pub fn chebyshev_p(n: i32) -> LaurentPoly {
    assert!(n >= -1, "P_n is defined for n >= -1");
    if n == -1 {
        return LaurentPoly::zero();
    }
    let s = LaurentPoly::q_pow(1).add(&LaurentPoly::q_pow(-1));
    let (mut prev, mut cur) = (LaurentPoly::zero(), LaurentPoly::one());
    for _ in 0..n {
        let next = s.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

fn qi(n: i32) -> Scalar {
    qint(&Exponent::int(n)).expect("integer exponent")
}

/// The typical module `V(a1, a2)` with explicit generator matrices.
#[derive(Clone, Debug)]
pub struct TypicalModule {
    pub color: TypicalColor,
    pub parity: Vec<u8>,
    pub weights: WeightTable,
    pub e1: GradedMatrix<Scalar>,
    pub e2: GradedMatrix<Scalar>,
    pub f1: GradedMatrix<Scalar>,
    pub f2: GradedMatrix<Scalar>,
}

impl TypicalModule {
    pub fn new(color: TypicalColor) -> Self {
        let a1 = color.a1;
        let a = a1 as i32;
        let parity = parity_vector(a1);
        let ix = |block: Block, k: usize| BasisIndex { block, k }.flat(a1);
        let v = color.var;
        // [a2 + c]
        let qa2 = |c: i32| qint(&Exponent::affine(c, v, 1)).expect("affine exponent");
        let r = qi(a).div(&qi(a + 1)).expect("[a1+1] != 0");

        let mut e1 = Vec::new();
        let mut f1 = Vec::new();
        for b in Block::ALL {
            let (eps1, _) = b.epsilon();
            for k in 0..b.len(a1) {
                if k + 1 < b.len(a1) {
                    f1.push((ix(b, k + 1), ix(b, k), Scalar::one()));
                }
                if k >= 1 {
                    let kk = k as i32;
                    e1.push((ix(b, k - 1), ix(b, k), qi(kk).mul(&qi(a + eps1 + 1 - kk))));
                }
            }
        }

        let mut e2 = Vec::new();
        let mid = qa2(1).sub(&qa2(0).mul(&r));
        for k in 0..a1 as usize {
            e2.push((ix(Block::B00, k + 1), ix(Block::Bm11, k), mid.clone()));
        }
        for k in 0..=a1 as usize {
            e2.push((ix(Block::B00, k), ix(Block::B10, k), qa2(0)));
            if k < a1 as usize {
                e2.push((ix(Block::Bm11, k), ix(Block::B01, k), qa2(0).neg()));
            }
            e2.push((ix(Block::B10, k + 1), ix(Block::B01, k), mid.clone()));
        }

        let p = |n: i32| Scalar::from_poly(chebyshev_p(n));
        let mut f2 = vec![(ix(Block::B10, 0), ix(Block::B00, 0), Scalar::one())];
        for k in 1..=a1 as usize {
            let kk = k as i32;
            if k - 1 < a1 as usize {
                f2.push((ix(Block::Bm11, k - 1), ix(Block::B00, k), p(kk - 1)));
            }
            f2.push((
                ix(Block::B10, k),
                ix(Block::B00, k),
                p(kk - 1).mul(&r).sub(&p(kk - 2)),
            ));
        }
        for k in 0..a1 as usize {
            let kk = k as i32;
            f2.push((ix(Block::B01, k), ix(Block::Bm11, k), p(kk - 1).sub(&r.mul(&p(kk)))));
        }
        for k in 1..(a1 as usize + 2) {
            f2.push((ix(Block::B01, k - 1), ix(Block::B10, k), p(k as i32 - 1)));
        }

        let build = |e: Vec<(usize, usize, Scalar)>| {
            GradedMatrix::from_triplets(parity.clone(), parity.clone(), e)
        };
        TypicalModule {
            color,
            weights: WeightTable::new(a1),
            e1: build(e1),
            e2: build(e2),
            f1: build(f1),
            f2: build(f2),
            parity,
        }
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn identity(&self) -> GradedMatrix<Scalar> {
        GradedMatrix::identity(self.parity.clone())
    }

    /// Diagonal matrix of `h1`.
    pub fn h1(&self) -> GradedMatrix<Scalar> {
        let d = self.weights.h1.iter().map(|&w| Scalar::from_i64(w as i64)).collect();
        GradedMatrix::diagonal(self.parity.clone(), d)
    }

    /// Diagonal matrix of `h2 - a2`. Commutators with it equal those with `h2`.
    pub fn h2_offset(&self) -> GradedMatrix<Scalar> {
        let d = self.weights.h2_offset.iter().map(|&w| Scalar::from_i64(w as i64)).collect();
        GradedMatrix::diagonal(self.parity.clone(), d)
    }

    /// Diagonal `q^{c1 h1 + c2 h2}`.
    pub fn qh(&self, c1: i32, c2: i32) -> GradedMatrix<Scalar> {
        let d = self.qh_entries(c1, c2).into_iter().map(Scalar::monomial).collect();
        GradedMatrix::diagonal(self.parity.clone(), d)
    }

    pub fn qh_entries(&self, c1: i32, c2: i32) -> Vec<Monomial> {
        self.weights
            .h1
            .iter()
            .zip(&self.weights.h2_offset)
            .map(|(&h1, &h2)| {
                Monomial::from_pairs([(Gen::Q, c1 * h1 + c2 * h2), (Gen::x(self.color.var), c2)])
            })
            .collect()
    }

    /// Matrix of a generator; `H2` is represented by its offset from `a2`.
    pub fn generator(&self, g: Generator) -> GradedMatrix<Scalar> {
        match g {
            Generator::H1 => self.h1(),
            Generator::H2 => self.h2_offset(),
            Generator::E1 => self.e1.clone(),
            Generator::E2 => self.e2.clone(),
            Generator::F1 => self.f1.clone(),
            Generator::F2 => self.f2.clone(),
        }
    }

    /// Matrix of the antipode `S(g)` on `V`.
    pub fn antipode(&self, g: Generator) -> GradedMatrix<Scalar> {
        match g {
            Generator::H1 | Generator::H2 => self.generator(g).neg(),
            Generator::E1 => self.qh(1, 0).mul(&self.e1).neg(),
            Generator::E2 => self.qh(0, 1).mul(&self.e2).neg(),
            Generator::F1 => self.f1.mul(&self.qh(-1, 0)).neg(),
            Generator::F2 => self.f2.mul(&self.qh(0, -1)).neg(),
        }
    }

    /// Action of `g` on `V*` in the dual basis: `(g f)(v) = (-1)^{|g||f|} f(S(g) v)`.
    ///
    /// For `H2` this is the action of `h2 + a2` on `V*`, i.e. the negated
    /// offsets; the full eigenvalue is `-a2` plus the returned entry.
    pub fn dual_generator(&self, g: Generator) -> GradedMatrix<Scalar> {
        let s = self.antipode(g).transpose();
        if g.parity() == 0 {
            return s;
        }
        let par = self.parity.clone();
        GradedMatrix::from_triplets(
            par.clone(),
            par.clone(),
            s.iter().map(|(k, l, v)| (k, l, if par[l] == 1 { v.neg() } else { v.clone() })),
        )
    }

    /// `q^{c1 h1 + c2 h2}` acting on `V*`.
    pub fn dual_qh(&self, c1: i32, c2: i32) -> GradedMatrix<Scalar> {
        self.qh(-c1, -c2)
    }
}
