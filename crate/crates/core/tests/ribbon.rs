use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sl21::ribbon::*;
use sl21::scalars::{Gen, Point, Scalar};
use sl21::superalg::{Generator, TypicalColor, TypicalModule};

fn module(a1: u32, var: u16) -> TypicalModule {
    TypicalModule::new(TypicalColor::new(a1, var))
}

#[test]
fn r_times_r_inverse_is_identity() {
    for a1 in 0..2 {
        for b1 in 0..2 {
            let (a, b) = (module(a1, 1), module(b1, 2));
            let prod = r_matrix(&a, &b).mul(&r_inverse(&a, &b));
            assert!(prod.equals(&super_kron(&a.identity(), &b.identity())), "a1={a1} b1={b1}");
        }
    }
}

#[test]
fn braiding_inverse_composes_to_identity() {
    let (a, b) = (module(0, 1), module(0, 2));
    let c = braiding(&a, &b);
    let ci = braiding_inverse(&a, &b);
    assert!(ci.mul(&c).equals(&super_kron(&a.identity(), &b.identity())));
}

#[test]
fn naturality_all_generators() {
    for a1 in 0..2 {
        let (a, b) = (module(a1, 1), module(a1, 2));
        for g in Generator::ALL {
            assert!(naturality_holds(g, &a, &b), "a1={a1} {g:?}");
        }
    }
}

#[test]
fn qybe_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (a, b, c) = (module(0, 1), module(0, 2), module(0, 3));
    let gens = [
        Gen::x(1),
        Gen::x(2),
        Gen::x(3),
        Gen::z(1, 2),
        Gen::z(1, 3),
        Gen::z(2, 3),
    ];
    for _ in 0..5 {
        let p = Point::random(&mut rng, &gens);
        assert!(qybe_at_point(&a, &b, &c, &p).unwrap());
    }
}

#[test]
fn pivotal_identities() {
    for a1 in 0..3 {
        let m = module(a1, 1);
        assert_eq!(zigzags(&m), [true; 4], "a1={a1}");
        assert!(qdim(&m).is_zero());
    }
}

#[test]
fn twist_matches_closed_form() {
    for a1 in 0..2 {
        let m = module(a1, 1);
        let theta = twist_from_composite(&m);
        let expected = m.identity().scale(&twist_scalar(m.color));
        assert!(theta.equals(&expected), "a1={a1}");
    }
}

#[test]
fn k_and_qexp_examples() {
    let (a, b) = (module(0, 1), module(0, 2));
    let k = k_matrix(&a, &b);
    assert_eq!(k.get(0, 0), Scalar::gen(Gen::z(1, 2), -2));
    assert_eq!(k.nnz(), 16);
    let (aa, _) = (module(0, 1), ());
    assert_eq!(k_matrix(&aa, &aa).get(0, 0), Scalar::gen(Gen::z(1, 1), -2));
    let t = super_kron(&a.e1, &b.f1);
    let one = Scalar::q_pow(1).sub(&Scalar::q_pow(-1));
    // the largest sl(2) block of V(0, a2) is two-dimensional, so the series
    // stops after the linear term
    assert!(t.mul(&t).is_zero());
    let e = qexp_factor(&t, &Scalar::q_pow(-2), &one, 8).unwrap();
    let id = super_kron(&a.identity(), &b.identity());
    assert!(e.equals(&id.add(&t.scale(&one))));
    let (a1, b1) = (module(1, 1), module(1, 2));
    let t1 = super_kron(&a1.e1, &b1.f1);
    assert!(!t1.mul(&t1).is_zero());
    assert!(t1.mul(&t1).mul(&t1).is_zero());
    let zero = sl21::linalg::GradedMatrix::zeros(id.row_parity().to_vec(), id.col_parity().to_vec());
    assert!(qexp_factor(&zero, &Scalar::q_pow(-2), &one, 8).unwrap().equals(&id));
    let (ep, _) = eprime_fprime(&module(1, 1));
    assert!(ep.mul(&ep).is_zero());
}

#[test]
fn modified_dimension_examples() {
    let d0 = modified_dim(TypicalColor::new(0, 1));
    let br = |c: i32| {
        Scalar::monomial(sl21::scalars::Monomial::from_pairs([(Gen::Q, c), (Gen::x(1), 1)]))
            .sub(&Scalar::monomial(sl21::scalars::Monomial::from_pairs([
                (Gen::Q, -c),
                (Gen::x(1), -1),
            ])))
    };
    assert_eq!(d0, Scalar::one().div(&br(0).mul(&br(1))).unwrap());
    for a1 in 0..5 {
        assert!(!modified_dim(TypicalColor::new(a1, 1)).is_zero());
    }
}
