use crate::linalg::GradedMatrix;
use crate::scalars::{Point, Rational, Scalar, ScalarError};
use crate::superalg::TypicalModule;

use super::duality::duality_maps;
use super::rmatrix::{braiding, super_kron};

type M = GradedMatrix<Scalar>;

/// The four zig-zag identities, in the order
/// `(ev_r (x) 1)(1 (x) coev_r)`, `(1 (x) ev_r)(coev_r (x) 1)`,
/// `(ev_l (x) 1)(1 (x) coev_l)`, `(1 (x) ev_l)(coev_l (x) 1)`.
pub fn zigzags(m: &TypicalModule) -> [bool; 4] {
    let d = duality_maps(m);
    let id = m.identity();
    let z1 = super_kron(&d.ev_r, &id).mul(&super_kron(&id, &d.coev_r));
    let z2 = super_kron(&id, &d.ev_r).mul(&super_kron(&d.coev_r, &id));
    let z3 = super_kron(&d.ev_l, &id).mul(&super_kron(&id, &d.coev_l));
    let z4 = super_kron(&id, &d.ev_l).mul(&super_kron(&d.coev_l, &id));
    [z1, z2, z3, z4].map(|z| z.equals(&id))
}

/// `(1 (x) ev_l)(c_{V,V} (x) 1)(1 (x) coev_r)`, an endomorphism of `V`.
pub fn twist_from_composite(m: &TypicalModule) -> M {
    let d = duality_maps(m);
    let id = m.identity();
    let c = braiding(m, m);
    super_kron(&id, &d.ev_l)
        .mul(&super_kron(&c, &id))
        .mul(&super_kron(&id, &d.coev_r))
}

fn at_point(m: &M, p: &Point) -> Result<GradedMatrix<Rational>, ScalarError> {
    m.try_map(|s| s.eval(p))
}

/// Braid relation on `V_A (x) V_B (x) V_C` evaluated at a rational point:
/// `(c_BC (x) 1)(1 (x) c_AC)(c_AB (x) 1) = (1 (x) c_AB)(c_AC (x) 1)(1 (x) c_BC)`.
pub fn qybe_at_point(
    a: &TypicalModule,
    b: &TypicalModule,
    c: &TypicalModule,
    p: &Point,
) -> Result<bool, ScalarError> {
    let cab = at_point(&braiding(a, b), p)?;
    let cac = at_point(&braiding(a, c), p)?;
    let cbc = at_point(&braiding(b, c), p)?;
    let id = |m: &TypicalModule| GradedMatrix::<Rational>::identity(m.parity.clone());
    let k = |x: &GradedMatrix<Rational>, y: &GradedMatrix<Rational>| x.kron(y).unwrap();
    let lhs = k(&cbc, &id(a)).mul(&k(&id(b), &cac)).mul(&k(&cab, &id(c)));
    let rhs = k(&id(c), &cab).mul(&k(&cac, &id(b))).mul(&k(&id(a), &cbc));
    Ok(lhs.equals(&rhs))
}
