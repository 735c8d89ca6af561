use sl21::diagram::*;
use sl21::exec::Execution;
use sl21::ribbon::{modified_dim, qdim, twist_scalar, RibbonData};
use sl21::scalars::Scalar;
use sl21::superalg::{TypicalColor, TypicalModule};

fn value(link: &ColoredLink, cut: usize, strand: usize) -> InvariantResult {
    let ribbon = RibbonData::new(&link.colors, Execution::default());
    invariant(link, cut, strand, &ribbon, EvalMode::Full, Execution::default()).unwrap()
}

fn knot(word: &str, a1: u32) -> ColoredLink {
    ColoredLink::uniform(parse_braid(word).unwrap(), a1)
}

#[test]
fn unknot_is_modified_dimension() {
    for a1 in 0..5 {
        let r = value(&knot("1:", a1), 0, 0);
        assert!(r.tangle_scalar.is_one());
        assert_eq!(r.value, modified_dim(TypicalColor::new(a1, 1)));
    }
}

#[test]
fn kink_is_twist() {
    for a1 in 0..3 {
        let r = value(&knot("2: s1", a1), 0, 0);
        let theta = twist_scalar(TypicalColor::new(a1, 1));
        assert_eq!(r.tangle_scalar, theta);
        assert_eq!(r.normalized, modified_dim(TypicalColor::new(a1, 1)));
        let neg = value(&knot("2: S1", a1), 0, 0);
        assert_eq!(neg.tangle_scalar, theta.inv().unwrap());
    }
}

#[test]
fn r2_insertion() {
    for a1 in 0..2 {
        let base = value(&knot("2: s1 s1 s1", a1), 0, 0);
        let r2 = value(&knot("2: s1 S1 s1 s1 s1", a1), 0, 0);
        assert_eq!(base.value, r2.value);
    }
}

#[test]
fn markov_stabilization() {
    for a1 in 0..2 {
        let b2 = value(&knot("2: s1 s1 s1", a1), 0, 0);
        let b3 = value(&knot("3: s1 s1 s1 s2", a1), 0, 0);
        assert_eq!(b2.normalized, b3.normalized, "a1={a1}");
        let theta = twist_scalar(TypicalColor::new(a1, 1));
        assert_eq!(b3.value, b2.value.mul(&theta));
    }
}

#[test]
fn cut_strand_independence() {
    let l = knot("2: s1 s1 s1", 1);
    assert_eq!(value(&l, 0, 0).value, value(&l, 0, 1).value);
    let f8 = knot("3: s1 S2 s1 S2", 0);
    let v: Vec<_> = (0..3).map(|s| value(&f8, 0, s).value).collect();
    assert_eq!(v[0], v[1]);
    assert_eq!(v[0], v[2]);
}

#[test]
fn hopf_cut_component_independence() {
    for (a, b) in [(0, 0), (1, 1), (0, 1)] {
        let l = ColoredLink::new(
            parse_braid("2: s1 s1").unwrap(),
            vec![TypicalColor::new(a, 1), TypicalColor::new(b, 2)],
        )
        .unwrap();
        assert_eq!(value(&l, 0, 0).value, value(&l, 1, 0).value, "({a},{b})");
    }
}

#[test]
fn split_unlink_vanishes() {
    let l = ColoredLink::new(
        parse_braid("2: s1 S1").unwrap(),
        vec![TypicalColor::new(0, 1), TypicalColor::new(1, 2)],
    )
    .unwrap();
    assert!(value(&l, 0, 0).value.is_zero());
    assert!(qdim(&TypicalModule::new(TypicalColor::new(1, 2))).is_zero());
}

#[test]
fn highest_weight_mode_agrees() {
    let l = knot("2: s1 s1 s1", 1);
    let ribbon = RibbonData::new(&l.colors, Execution::default());
    let full = invariant(&l, 0, 0, &ribbon, EvalMode::Full, Execution::default()).unwrap();
    let hw = invariant(&l, 0, 0, &ribbon, EvalMode::HighestWeight, Execution::Sequential).unwrap();
    assert_eq!(full.value, hw.value);
}

#[test]
fn variable_identification() {
    let l = ColoredLink::new(
        parse_braid("2: s1 s1").unwrap(),
        vec![TypicalColor::new(0, 1), TypicalColor::new(0, 2)],
    )
    .unwrap();
    let r = value(&l, 0, 0);
    let same = r.map_scalars(|s| identify_variables(s, |_| 1));
    assert!(same.value.generators().iter().all(|g| *g != sl21::scalars::Gen::x(2)));
    let _ = Scalar::one();
}
