use sl21::exec::Execution;
use sl21::qweyl::*;
use sl21::ribbon::modified_dim;
use sl21::scalars::{parse_scalar, Scalar};
use sl21::superalg::TypicalColor;

fn d(r: usize) -> Vec<Direction> {
    vec![Direction::Discrete; r]
}

fn op(text: &str, r: usize) -> QWeylOp {
    parse_op(text, d(r)).unwrap()
}

fn s(text: &str) -> Scalar {
    parse_scalar(text).unwrap()
}

#[test]
fn normal_ordering_examples() {
    let l1 = QWeylOp::l(d(2), 0);
    let m1 = QWeylOp::m(d(2), 0);
    let m2 = QWeylOp::m(d(2), 1);
    assert!(l1.mul(&m1).unwrap().equals(&op("(q) * M1 * L1", 2)));
    assert!(l1.mul(&m2).unwrap().equals(&op("(1) * M2 * L1", 2)));
    let lp1 = op("(1) * L1 + (1)", 1);
    let m = QWeylOp::m(d(1), 0);
    assert!(lp1.mul(&m).unwrap().equals(&op("(q) * M1 * L1 + (1) * M1", 1)));
    assert!(matches!(l1.mul(&QWeylOp::l(d(1), 0)), Err(QWeylError::RankMismatch(2, 1))));
}

#[test]
fn operator_text_round_trip() {
    let a = op("(2*q + -1*x1 ; q^3 + 1) * M1^-2 * L1^3 + (q^-1) * M2 + (-1/2)", 2);
    let b = parse_op(&a.to_string(), d(2)).unwrap();
    assert!(a.equals(&b));
    assert!(matches!(parse_op("(1) * K1", d(1)), Err(QWeylError::Parse { .. })));
}

#[test]
fn standard_action() {
    let f = FunctionTable::from_fn(vec![0], vec![6], |p| Scalar::from_i64(p[0] * p[0] + 1));
    let lf = apply(&QWeylOp::l(d(1), 0), &f).unwrap();
    assert_eq!(lf.hi(), &[5]);
    for n in 0..=5 {
        assert_eq!(lf.get(&[n]).unwrap(), f.get(&[n + 1]).unwrap());
    }
    let mf = apply(&QWeylOp::m(d(1), 0), &f).unwrap();
    for n in 0..=6 {
        assert_eq!(*mf.get(&[n]).unwrap(), f.get(&[n]).unwrap().mul(&Scalar::q_pow(n as i32)));
    }
    assert!(matches!(apply(&QWeylOp::l(d(1), 0).pow(7), &f), Err(QWeylError::Window(_))));
}

#[test]
fn continuous_direction_shifts_values() {
    let dirs = vec![Direction::Discrete, Direction::Continuous(1)];
    let f = FunctionTable::from_fn(vec![0], vec![3], |p| s("x1^2").mul(&Scalar::from_i64(p[0])));
    let l2 = QWeylOp::l(dirs.clone(), 1);
    let out = apply(&l2, &f).unwrap();
    for n in 0..=3 {
        assert_eq!(*out.get(&[n]).unwrap(), f.get(&[n]).unwrap().shift(1));
    }
    let m2 = QWeylOp::m(dirs, 1);
    let out = apply(&m2, &f).unwrap();
    assert_eq!(*out.get(&[2]).unwrap(), s("2*x1^3"));
}

#[test]
fn builtin_annihilators() {
    for name in BUILTIN_NAMES {
        let b = builtin(name).unwrap();
        let f = b.default_table(6);
        for o in &b.ops {
            assert!(annihilates(o, &f).unwrap(), "{name}: {o}");
        }
    }
    assert!(matches!(builtin("nope"), Err(QWeylError::UnknownBuiltin(_))));
}

#[test]
fn builtin_values() {
    let ind = builtin("indicator").unwrap();
    assert!(ind.value(&[0, 3, 2]).is_one());
    assert!(ind.value(&[0, 3, 5]).is_zero());
    let inv = builtin("inv_qnum").unwrap();
    for n in 1..6 {
        let qn = Scalar::q_pow(n).sub(&Scalar::q_pow(-n));
        assert!(inv.value(&[n as i64]).mul(&qn).is_one());
    }
    let p = builtin("pochhammer").unwrap();
    assert_eq!(p.value(&[2, 2]), s("1 + -1*q^2 + -1*q^3 + q^5"));
}

#[test]
fn shift_is_not_an_annihilator_of_random_tables() {
    let f = FunctionTable::from_fn(vec![0, 0], vec![5, 5], |p| {
        Scalar::from_i64((p[0] * 7919 + p[1] * 104729) % 1009)
    });
    assert!(!annihilates(&QWeylOp::l(d(2), 0), &f).unwrap());
}

#[test]
fn guess_qsquare() {
    let f = builtin("qsquare").unwrap().default_table(16);
    let a = Ansatz {
        direction: 0,
        order: 1,
        mdegree: 2,
    };
    let ops = guess_recurrence(&f, a).unwrap();
    // M^k (L - q M^2) for k = -2, -1, 0
    assert_eq!(ops.len(), 3);
    assert!(ops.iter().any(|o| o.equals(&op("(1) * L1 + (-1*q) * M1^2", 1))));
}

#[test]
fn guess_constant() {
    let f = FunctionTable::from_fn(vec![0], vec![4], |_| s("3*x1 + q"));
    let a = Ansatz {
        direction: 0,
        order: 1,
        mdegree: 0,
    };
    let ops = guess_recurrence(&f, a).unwrap();
    assert_eq!(ops.len(), 1);
    assert!(ops[0].equals(&op("(1) * L1 + (-1)", 1)));
}

#[test]
fn guess_window_precondition() {
    let f = FunctionTable::from_fn(vec![0], vec![8], |_| Scalar::one());
    let a = Ansatz {
        direction: 0,
        order: 4,
        mdegree: 6,
    };
    assert_eq!(a.min_window(), 69);
    assert!(matches!(
        guess_recurrence(&f, a),
        Err(QWeylError::WindowTooSmall { have: 9, need: 69, .. })
    ));
}

fn unknot_table(lo: i64, hi: i64) -> FunctionTable {
    FunctionTable::from_fn(vec![lo], vec![hi], |p| modified_dim(TypicalColor::new(p[0] as u32, 1)))
}

#[test]
fn unknot_recurrence_is_certified() {
    let f = unknot_table(0, 10);
    let a = Ansatz {
        direction: 0,
        order: 1,
        mdegree: 2,
    };
    let ops = guess_recurrence(&f, a).unwrap();
    assert_eq!(ops.len(), 1);
    let cert = certify(&f, &ops, &unknot_table(0, 13)).unwrap();
    assert_eq!(cert.entries[0].order, 1);
    assert_eq!(cert.entries[0].shape, Shape::Binomial);
    // {a+1}{a2+a+2} L - {a+2}{a2+a+1}, up to scale
    let br = |t: &str| op(t, 1);
    let lhs = br("(q) * M1 + (-1*q^-1) * M1^-1")
        .mul(&br("(q^2*x1) * M1 + (-1*q^-2*x1^-1) * M1^-1"))
        .unwrap()
        .mul(&QWeylOp::l(d(1), 0))
        .unwrap();
    let rhs = br("(q^2) * M1 + (-1*q^-2) * M1^-1")
        .mul(&br("(q*x1) * M1 + (-1*q^-1*x1^-1) * M1^-1"))
        .unwrap();
    let expected = lhs.sub(&rhs).unwrap();
    let ratio = expected.coefficient(&[2], &[1]).div(&ops[0].coefficient(&[2], &[1])).unwrap();
    assert!(ops[0].scale(&ratio).equals(&expected), "{}", ops[0]);
}

#[test]
fn search_finds_smallest_ansatz() {
    let f = builtin("qsquare").unwrap().default_table(20);
    let (a, ops) = search_recurrence(&f, 0, 2, 3, Execution::default()).unwrap().unwrap();
    assert_eq!((a.order, a.mdegree), (1, 1));
    assert_eq!(ops.len(), 1);
    assert!(ops[0].equals(&op("(1) * M1^-1 * L1 + (-1*q) * M1", 1)));
    let seq = search_recurrence(&f, 0, 2, 3, Execution::Sequential).unwrap().unwrap();
    assert!(seq.1[0].equals(&ops[0]));
}

#[test]
fn certify_pochhammer() {
    let b = builtin("pochhammer").unwrap();
    let f = b.table(vec![0, 0], vec![5, 5]).unwrap();
    let h = b.table(vec![0, 0], vec![7, 7]).unwrap();
    let cert = certify(&f, &b.ops, &h).unwrap();
    assert_eq!(cert.entries.len(), 2);
    assert!(cert.entries.iter().all(|e| e.order == 1 && e.shape == Shape::Binomial));
    let json: serde_json::Value = serde_json::from_str(&cert.to_json()).unwrap();
    assert_eq!(json["rank"], 2);
}

#[test]
fn certify_refusals() {
    let b = builtin("pochhammer").unwrap();
    let f = b.table(vec![0, 0], vec![5, 5]).unwrap();
    let h = b.table(vec![0, 0], vec![7, 7]).unwrap();
    let only_l1 = op("(1) * L1 + (-1)", 2);
    match certify(&f, &[only_l1], &h) {
        Err(QWeylError::Refused(msg)) => assert!(msg.contains("direction 2 uncovered")),
        other => panic!("{other:?}"),
    }
    let no_tail = op("(1) * M1 * L1", 2);
    assert!(matches!(certify(&f, &[no_tail, b.ops[1].clone()], &h), Err(QWeylError::Refused(_))));
    let no_shift = op("(1) * M1 + (-1)", 2);
    assert!(matches!(certify(&f, &[no_shift, b.ops[1].clone()], &h), Err(QWeylError::Refused(_))));
    assert!(matches!(certify(&f, &b.ops, &f), Err(QWeylError::Refused(_))));
    let wrong = op("(1) * L1 + (-1)", 2);
    assert!(matches!(certify(&f, &[wrong, b.ops[1].clone()], &h), Err(QWeylError::Refused(_))));
}

#[test]
fn table_csv_round_trip() {
    let f = builtin("inv_pochhammer").unwrap().default_table(3);
    let text = f.to_csv();
    assert!(text.starts_with("n1,n2,value\n"));
    let g = FunctionTable::from_csv(&text).unwrap();
    assert_eq!(g.lo(), f.lo());
    assert_eq!(g.hi(), f.hi());
    assert!(f.values().iter().zip(g.values()).all(|(a, b)| a.equals(b)));
    assert!(FunctionTable::from_csv("n1,value\n0,1\n2,1\n").is_err());
}
