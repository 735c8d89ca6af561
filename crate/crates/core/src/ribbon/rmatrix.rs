use crate::linalg::GradedMatrix;
use crate::scalars::{qfactorial_paren, Gen, Monomial, Scalar};
use crate::superalg::{Generator, TypicalModule};

type M = GradedMatrix<Scalar>;

/// Koszul tensor product of homogeneous maps.
pub fn super_kron(a: &M, b: &M) -> M {
    a.kron(b).expect("second tensor factor must be parity-homogeneous")
}

/// `E' = E1 E2 - q^-1 E2 E1` and `F' = F2 F1 - q F1 F2`.
pub fn eprime_fprime(m: &TypicalModule) -> (M, M) {
    let ep = m.e1.mul(&m.e2).sub(&m.e2.mul(&m.e1).scale(&Scalar::q_pow(-1)));
    let fp = m.f2.mul(&m.f1).sub(&m.f1.mul(&m.f2).scale(&Scalar::q_pow(1)));
    (ep, fp)
}

/// Diagonal entries of `K = q^{-h1 (x) h2 - h2 (x) h1 - 2 h2 (x) h2}` on `V_A (x) V_B`.
pub fn k_entries(a: &TypicalModule, b: &TypicalModule) -> Vec<Monomial> {
    let (xa, xb) = (Gen::x(a.color.var), Gen::x(b.color.var));
    let z = Gen::z(a.color.var, b.color.var);
    let wa = &a.weights;
    let wb = &b.weights;
    let mut out = Vec::with_capacity(a.dim() * b.dim());
    for i in 0..a.dim() {
        let (l1, l2) = (wa.h1[i], wa.h2_offset[i]);
        for j in 0..b.dim() {
            let (m1, m2) = (wb.h1[j], wb.h2_offset[j]);
            out.push(Monomial::from_pairs([
                (Gen::Q, -(l1 * m2 + l2 * m1 + 2 * l2 * m2)),
                (xa, -(m1 + 2 * m2)),
                (xb, -(l1 + 2 * l2)),
                (z, -2),
            ]));
        }
    }
    out
}

pub fn k_matrix(a: &TypicalModule, b: &TypicalModule) -> M {
    let par = super_kron(&a.identity(), &b.identity()).row_parity().to_vec();
    GradedMatrix::diagonal(par, k_entries(a, b).into_iter().map(Scalar::monomial).collect())
}

pub fn k_inverse(a: &TypicalModule, b: &TypicalModule) -> M {
    let par = super_kron(&a.identity(), &b.identity()).row_parity().to_vec();
    GradedMatrix::diagonal(
        par,
        k_entries(a, b).into_iter().map(|m| Scalar::monomial(m.inv())).collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("q-exponential did not terminate within {cap} terms")]
pub struct NonTerminating {
    pub cap: u32,
}

/// `sum_n coeff^n X^n / (n)_base!`, stopping when `X^n` vanishes.
pub fn qexp_factor(x: &M, base: &Scalar, coeff: &Scalar, cap: u32) -> Result<M, NonTerminating> {
    let mut total = GradedMatrix::identity(x.row_parity().to_vec());
    let mut power = total.clone();
    let mut c = Scalar::one();
    for n in 1..=cap {
        power = power.mul(x);
        if power.is_zero() {
            return Ok(total);
        }
        c = c.mul(coeff);
        let w = c.div(&qfactorial_paren(n, base)).expect("(n)! nonzero");
        total = total.add(&power.scale(&w));
    }
    Err(NonTerminating { cap })
}

fn bracket_one() -> Scalar {
    Scalar::q_pow(1).sub(&Scalar::q_pow(-1))
}

fn truncation_cap(a: &TypicalModule, b: &TypicalModule) -> u32 {
    4 * (a.color.a1.max(b.color.a1) + 2)
}

/// The three nilpotent operators `E1 (x) F1`, `E' (x) F'`, `E2 (x) F2`.
fn r_terms(a: &TypicalModule, b: &TypicalModule) -> [M; 3] {
    let (ep, _) = eprime_fprime(a);
    let (_, fp) = eprime_fprime(b);
    [
        super_kron(&a.e1, &b.f1),
        super_kron(&ep, &fp),
        super_kron(&a.e2, &b.f2),
    ]
}

/// `R = exp(t1) exp(-t2) exp(-t3) K` with `t = {1} X (x) Y`; the
/// q-exponentials use base `q^-2`.
pub fn r_matrix(a: &TypicalModule, b: &TypicalModule) -> M {
    let [t1, t2, t3] = r_terms(a, b);
    let base = Scalar::q_pow(-2);
    let one = bracket_one();
    let cap = truncation_cap(a, b);
    let e1 = qexp_factor(&t1, &base, &one, cap).unwrap();
    let e2 = qexp_factor(&t2, &base, &one.neg(), cap).unwrap();
    let e3 = qexp_factor(&t3, &base, &one.neg(), cap).unwrap();
    e1.mul(&e2).mul(&e3).mul(&k_matrix(a, b))
}

/// `R^-1 = K^-1 exp(t3) exp(t2) exp(-t1)` with base `q^2`.
pub fn r_inverse(a: &TypicalModule, b: &TypicalModule) -> M {
    let [t1, t2, t3] = r_terms(a, b);
    let base = Scalar::q_pow(2);
    let one = bracket_one();
    let cap = truncation_cap(a, b);
    let e3 = qexp_factor(&t3, &base, &one, cap).unwrap();
    let e2 = qexp_factor(&t2, &base, &one, cap).unwrap();
    let e1 = qexp_factor(&t1, &base, &one.neg(), cap).unwrap();
    k_inverse(a, b).mul(&e3).mul(&e2).mul(&e1)
}

/// Super flip `V_A (x) V_B -> V_B (x) V_A`, `v (x) w -> (-1)^{|v||w|} w (x) v`.
pub fn tau(a: &TypicalModule, b: &TypicalModule) -> M {
    let (da, db) = (a.dim(), b.dim());
    let row_par = super_kron(&b.identity(), &a.identity()).row_parity().to_vec();
    let col_par = super_kron(&a.identity(), &b.identity()).row_parity().to_vec();
    let mut entries = Vec::with_capacity(da * db);
    for i in 0..da {
        for j in 0..db {
            let s = if a.parity[i] & b.parity[j] == 1 { -1 } else { 1 };
            entries.push((j * da + i, i * db + j, Scalar::from_i64(s)));
        }
    }
    GradedMatrix::from_triplets(row_par, col_par, entries)
}

/// Braiding `c_{A,B} = tau R : V_A (x) V_B -> V_B (x) V_A`.
pub fn braiding(a: &TypicalModule, b: &TypicalModule) -> M {
    tau(a, b).mul(&r_matrix(a, b))
}

/// `c_{A,B}^-1 = R^-1 tau_{B,A} : V_B (x) V_A -> V_A (x) V_B`.
pub fn braiding_inverse(a: &TypicalModule, b: &TypicalModule) -> M {
    r_inverse(a, b).mul(&tau(b, a))
}

/// Coproduct of a generator on `V_A (x) V_B`; `H2` via offsets.
pub fn coproduct(g: Generator, a: &TypicalModule, b: &TypicalModule) -> M {
    let (ia, ib) = (a.identity(), b.identity());
    match g {
        Generator::H1 | Generator::H2 => {
            super_kron(&a.generator(g), &ib).add(&super_kron(&ia, &b.generator(g)))
        }
        Generator::E1 => super_kron(&a.e1, &ib).add(&super_kron(&a.qh(-1, 0), &b.e1)),
        Generator::E2 => super_kron(&a.e2, &ib).add(&super_kron(&a.qh(0, -1), &b.e2)),
        Generator::F1 => super_kron(&a.f1, &b.qh(1, 0)).add(&super_kron(&ia, &b.f1)),
        Generator::F2 => super_kron(&a.f2, &b.qh(0, 1)).add(&super_kron(&ia, &b.f2)),
    }
}

/// Checks `R Delta(g) = Delta^op(g) R` on `V_A (x) V_B`.
pub fn naturality_holds(g: Generator, a: &TypicalModule, b: &TypicalModule) -> bool {
    let r = r_matrix(a, b);
    let lhs = r.mul(&coproduct(g, a, b));
    let dop = tau(b, a).mul(&coproduct(g, b, a)).mul(&tau(a, b));
    lhs.equals(&dop.mul(&r))
}
