use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sl21::diagram::{invariant, parse_braid, ColoredLink, EvalMode, InvariantResult};
use sl21::exec::Execution;
use sl21::qweyl::{annihilates, apply, builtin, random_op, random_table, Direction, BUILTIN_NAMES};
use sl21::ribbon::{
    modified_dim, naturality_holds, qdim, qybe_at_point, r_inverse, r_matrix, super_kron,
    twist_from_composite, twist_scalar, zigzags,
};
use sl21::scalars::{Gen, Monomial, Point, Scalar};
use sl21::superalg::{verify_relations, Generator, TypicalColor, TypicalModule};

/// `quick` uses small colors and compares invariant values at seeded random
/// points; `full` covers the acceptance ranges with exact symbolic equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Quick,
    Full,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub level: Level,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Suite {
    level: Level,
    rng: ChaCha8Rng,
    checks: Vec<CheckResult>,
}

impl Suite {
    fn record(&mut self, name: &str, failures: Vec<String>) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed: failures.is_empty(),
            detail: (!failures.is_empty()).then(|| failures.join("; ")),
        });
    }

    fn colors(&self, quick: &[u32], full: &[u32]) -> Vec<u32> {
        match self.level {
            Level::Quick => quick.to_vec(),
            Level::Full => full.to_vec(),
        }
    }

    /// Exact equality in full mode, equality at a seeded point in quick mode.
    fn agree(&mut self, a: &Scalar, b: &Scalar) -> bool {
        match self.level {
            Level::Full => a.equals(b),
            Level::Quick => {
                let mut gens = a.generators();
                gens.extend(b.generators());
                let p = Point::random(&mut self.rng, &gens);
                match (a.eval(&p), b.eval(&p)) {
                    (Ok(x), Ok(y)) => x == y,
                    _ => a.equals(b),
                }
            }
        }
    }
}

fn module(a1: u32, var: u16) -> TypicalModule {
    TypicalModule::new(TypicalColor::new(a1, var))
}

fn value(link: &ColoredLink, cut: usize, strand: usize) -> InvariantResult {
    let ribbon = link.ribbon_data(Execution::default());
    invariant(link, cut, strand, &ribbon, EvalMode::HighestWeight, Execution::default())
        .expect("valid link")
}

fn knot(word: &str, a1: u32) -> ColoredLink {
    ColoredLink::uniform(parse_braid(word).expect("valid braid"), a1)
}

/// `q^{-2 a2 (a1 + a2 + 1)}` written in the generators `x1 = q^{a2}`,
/// `z11 = q^{a2^2}`.
pub fn kink_monomial(a1: u32) -> Scalar {
    Scalar::monomial(Monomial::from_pairs([
        (Gen::x(1), -2 * (a1 as i32 + 1)),
        (Gen::z(1, 1), -2),
    ]))
}

fn relations(s: &mut Suite) {
    let mut bad = Vec::new();
    for a1 in s.colors(&[0, 1], &[0, 1, 2, 3]) {
        let r = verify_relations(TypicalColor::new(a1, 1));
        bad.extend(r.checks.iter().filter(|c| !c.passed).map(|c| format!("a1={a1} {}", c.name)));
    }
    s.record("algebra_relations", bad);
}

fn r_inverse_check(s: &mut Suite) {
    let mut bad = Vec::new();
    for a1 in s.colors(&[0], &[0, 1]) {
        for b1 in s.colors(&[0], &[0, 1]) {
            let (a, b) = (module(a1, 1), module(b1, 2));
            let id = super_kron(&a.identity(), &b.identity());
            if !r_matrix(&a, &b).mul(&r_inverse(&a, &b)).equals(&id) {
                bad.push(format!("a1={a1} b1={b1}"));
            }
        }
    }
    s.record("r_times_r_inverse", bad);
}

fn naturality(s: &mut Suite) {
    let mut bad = Vec::new();
    for a1 in s.colors(&[0], &[0, 1]) {
        let (a, b) = (module(a1, 1), module(a1, 2));
        for g in Generator::ALL {
            if !naturality_holds(g, &a, &b) {
                bad.push(format!("a1={a1} {g:?}"));
            }
        }
    }
    s.record("coproduct_naturality", bad);
}

fn qybe(s: &mut Suite) {
    let gens = [Gen::x(1), Gen::x(2), Gen::x(3), Gen::z(1, 2), Gen::z(1, 3), Gen::z(2, 3)];
    let mut bad = Vec::new();
    for a1 in s.colors(&[0], &[0, 1]) {
        let (a, b, c) = (module(a1, 1), module(a1, 2), module(a1, 3));
        for i in 0..5 {
            let p = Point::random(&mut s.rng, &gens);
            match qybe_at_point(&a, &b, &c, &p) {
                Ok(true) => {}
                Ok(false) => bad.push(format!("a1={a1} point {i}")),
                Err(e) => bad.push(format!("a1={a1} point {i}: {e}")),
            }
        }
    }
    s.record("qybe", bad);
}

fn pivotal(s: &mut Suite) {
    let (mut zz, mut qd, mut tw) = (Vec::new(), Vec::new(), Vec::new());
    for a1 in s.colors(&[0, 1], &[0, 1, 2]) {
        let m = module(a1, 1);
        if zigzags(&m) != [true; 4] {
            zz.push(format!("a1={a1}"));
        }
        if !qdim(&m).is_zero() {
            qd.push(format!("a1={a1}"));
        }
        let theta = kink_monomial(a1);
        let composite = twist_from_composite(&m).equals(&m.identity().scale(&theta));
        let kink = value(&knot("2: s1", a1), 0, 0).tangle_scalar;
        if !composite || twist_scalar(m.color) != theta || !s.agree(&kink, &theta) {
            tw.push(format!("a1={a1}"));
        }
    }
    s.record("zigzag", zz);
    s.record("qdim_vanishes", qd);
    s.record("kink_is_twist", tw);
}

fn unknot(s: &mut Suite) {
    let mut bad = Vec::new();
    for a1 in s.colors(&[0, 1, 2], &[0, 1, 2, 3, 4]) {
        let r = value(&knot("1:", a1), 0, 0);
        if !s.agree(&r.value, &modified_dim(TypicalColor::new(a1, 1))) {
            bad.push(format!("a1={a1}"));
        }
    }
    s.record("unknot_modified_dimension", bad);
}

fn invariance(s: &mut Suite) {
    let (mut markov, mut r2, mut strand, mut hopf) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for a1 in s.colors(&[0], &[0, 1]) {
        let b2 = value(&knot("2: s1 s1 s1", a1), 0, 0);
        let b3 = value(&knot("3: s1 s1 s1 s2", a1), 0, 0);
        let theta = twist_scalar(TypicalColor::new(a1, 1));
        if !s.agree(&b2.normalized, &b3.normalized) || !s.agree(&b3.value, &b2.value.mul(&theta)) {
            markov.push(format!("a1={a1}"));
        }
        let ins = value(&knot("2: s1 S1 s1 s1 s1", a1), 0, 0);
        if !s.agree(&b2.value, &ins.value) {
            r2.push(format!("a1={a1}"));
        }
        let other = value(&knot("2: s1 s1 s1", a1), 0, 1);
        if !s.agree(&b2.value, &other.value) {
            strand.push(format!("a1={a1}"));
        }
        let link = ColoredLink::new(
            parse_braid("2: s1 s1").expect("valid braid"),
            vec![TypicalColor::new(a1, 1), TypicalColor::new(a1, 2)],
        )
        .expect("two components");
        let (c0, c1) = (value(&link, 0, 0), value(&link, 1, 0));
        if !s.agree(&c0.value, &c1.value) {
            hopf.push(format!("a1={a1}"));
        }
    }
    s.record("markov_stabilization", markov);
    s.record("r2_insertion", r2);
    s.record("cut_strand_independence", strand);
    s.record("hopf_cut_component_independence", hopf);
}

fn builtins(s: &mut Suite) {
    let mut bad = Vec::new();
    for name in BUILTIN_NAMES {
        let b = builtin(name).expect("listed builtin");
        let f = b.default_table(6);
        for (i, o) in b.ops.iter().enumerate() {
            if !matches!(annihilates(o, &f), Ok(true)) {
                bad.push(format!("{name} operator {}", i + 1));
            }
        }
    }
    s.record("builtin_annihilators", bad);
}

fn qweyl_laws(s: &mut Suite) {
    let cases = match s.level {
        Level::Quick => 20,
        Level::Full => 100,
    };
    let dirs = vec![Direction::Discrete, Direction::Continuous(1)];
    let gens = [Gen::x(1)];
    let (mut action, mut assoc) = (Vec::new(), Vec::new());
    for i in 0..cases {
        let a = random_op(&mut s.rng, &dirs, 3, 2, 2);
        let b = random_op(&mut s.rng, &dirs, 3, 2, 2);
        let c = random_op(&mut s.rng, &dirs, 3, 2, 2);
        let f = random_table(&mut s.rng, vec![0], vec![6], &gens);
        let ab = a.mul(&b).expect("same rank");
        let lhs = apply(&ab, &f);
        let rhs = apply(&b, &f).and_then(|g| apply(&a, &g));
        match (lhs, rhs) {
            (Ok(l), Ok(r)) if l.lo() == r.lo() && l.hi() == r.hi() && l.values() == r.values() => {}
            _ => action.push(format!("case {i}")),
        }
        let left = ab.mul(&c).expect("same rank");
        let right = a.mul(&b.mul(&c).expect("same rank")).expect("same rank");
        if !left.equals(&right) {
            assoc.push(format!("case {i}"));
        }
    }
    s.record("module_action", action);
    s.record("associativity", assoc);
}

/// Runs every named check. Output depends only on `level` and `seed`.
pub fn cmd_verify(level: Level, seed: u64) -> VerifyReport {
    let mut s = Suite {
        level,
        rng: ChaCha8Rng::seed_from_u64(seed),
        checks: Vec::new(),
    };
    relations(&mut s);
    r_inverse_check(&mut s);
    naturality(&mut s);
    qybe(&mut s);
    pivotal(&mut s);
    unknot(&mut s);
    invariance(&mut s);
    builtins(&mut s);
    qweyl_laws(&mut s);
    VerifyReport {
        level,
        seed,
        passed: s.checks.iter().all(|c| c.passed),
        checks: s.checks,
    }
}
