use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sl21::qweyl::*;
use sl21::scalars::{parse_scalar, Gen, Point, Scalar, ScalarError};

fn gens() -> Vec<Gen> {
    vec![Gen::x(1), Gen::x(2), Gen::z(1, 1), Gen::z(1, 2)]
}

fn scalars(seed: u64, n: usize) -> Vec<Scalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_scalar(&mut rng, &gens())).collect()
}

fn dirs() -> Vec<Direction> {
    vec![Direction::Discrete, Direction::Continuous(1)]
}

fn ops(seed: u64, n: usize) -> Vec<QWeylOp> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_op(&mut rng, &dirs(), 3, 2, 2)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn field_laws(seed in any::<u64>()) {
        let v = scalars(seed, 3);
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(a.add(b).mul(c), a.mul(c).add(&b.mul(c)));
        prop_assert_eq!(a.mul(b), b.mul(a));
        prop_assert!(a.sub(a).is_zero());
        prop_assert_eq!(a.mul(b).div(b).unwrap(), a.clone());
        // equal values in different forms agree
        let scaled = Scalar::fraction(a.num().mul(b.num()), a.den().mul(b.num())).unwrap();
        prop_assert!(scaled.equals(a));
    }

    #[test]
    fn shift_is_a_ring_homomorphism(seed in any::<u64>(), var in 1u16..=2) {
        let v = scalars(seed, 2);
        let (a, b) = (&v[0], &v[1]);
        prop_assert_eq!(a.mul(b).shift(var), a.shift(var).mul(&b.shift(var)));
        prop_assert_eq!(a.add(b).shift(var), a.shift(var).add(&b.shift(var)));
        prop_assert_eq!(a.inv().unwrap().shift(var), a.shift(var).inv().unwrap());
    }

    #[test]
    fn point_evaluation_is_consistent(seed in any::<u64>()) {
        let v = scalars(seed, 2);
        let (a, b) = (&v[0], &v[1]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let p = Point::random(&mut rng, &gens());
        let ev = |s: &Scalar| s.eval(&p);
        match (ev(a), ev(b), ev(&a.mul(b)), ev(&a.add(b))) {
            (Ok(x), Ok(y), Ok(xy), Ok(s)) => {
                prop_assert_eq!(xy, &x * &y);
                prop_assert_eq!(s, x + y);
            }
            (Err(ScalarError::Resample), ..) | (_, Err(ScalarError::Resample), ..) => {}
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn gcd_keeps_common_factors(seed in any::<u64>()) {
        let v = scalars(seed, 3);
        let (f, a, b) = (v[0].num(), v[1].num(), v[2].num());
        let g = f.mul(a).gcd(&f.mul(b));
        prop_assert!(g.div_exact(f).is_some(), "f = {}, gcd = {}", f, g);
        prop_assert!(f.mul(a).div_exact(&g).is_some());
        prop_assert!(f.mul(b).div_exact(&g).is_some());
    }

    #[test]
    fn scalar_text_round_trip(seed in any::<u64>()) {
        for a in scalars(seed, 3) {
            let text = a.to_string();
            let back = parse_scalar(&text).unwrap();
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(back.to_string(), text);
        }
    }

    #[test]
    fn qweyl_associativity(seed in any::<u64>()) {
        let v = ops(seed, 3);
        let ab_c = v[0].mul(&v[1]).unwrap().mul(&v[2]).unwrap();
        let a_bc = v[0].mul(&v[1].mul(&v[2]).unwrap()).unwrap();
        prop_assert!(ab_c.equals(&a_bc));
        let distrib = v[0].mul(&v[1].add(&v[2]).unwrap()).unwrap();
        let sum = v[0].mul(&v[1]).unwrap().add(&v[0].mul(&v[2]).unwrap()).unwrap();
        prop_assert!(distrib.equals(&sum));
    }

    #[test]
    fn qweyl_module_action(seed in any::<u64>()) {
        let v = ops(seed, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.rotate_left(17));
        let f = random_table(&mut rng, vec![0], vec![6], &[Gen::x(1)]);
        let lhs = apply(&v[0].mul(&v[1]).unwrap(), &f).unwrap();
        let rhs = apply(&v[0], &apply(&v[1], &f).unwrap()).unwrap();
        prop_assert_eq!(lhs.hi(), rhs.hi());
        prop_assert!(lhs.values() == rhs.values());
    }

    #[test]
    fn operator_text_round_trip(seed in any::<u64>()) {
        for o in ops(seed, 2) {
            let back = parse_op(&o.to_string(), dirs()).unwrap();
            prop_assert!(back.equals(&o), "{}", o);
        }
    }
}
