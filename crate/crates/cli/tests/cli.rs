use std::process::{Command, Output};

use sl21::exec::Execution;
use sl21::qweyl::FunctionTable;
use sl21::ribbon::modified_dim;
use sl21::scalars::{parse_scalar, Scalar};
use sl21::superalg::TypicalColor;
use sl21_cli::{cmd_guess, Budget, GuessSource, GuessStatus, JobSpec, ValueKind};

fn sl21(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl21")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn s(text: &str) -> Scalar {
    parse_scalar(text).unwrap()
}

#[test]
fn unknot_invariant_at_a1_zero() {
    let o = sl21(&["invariant", "--braid", "1:", "--colors", "a1=0"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = json(&o);
    let value = s(v["result"]["value"].as_str().unwrap());
    // 1 / ({a2}{a2+1})
    let expected = s("1 ; x1 + -1*x1^-1").mul(&s("1 ; q*x1 + -1*q^-1*x1^-1"));
    assert_eq!(value, expected);
    assert_eq!(v["job"]["seed"], 0);
}

#[test]
fn cut_strand_does_not_change_the_value() {
    let run = |strand: &str| {
        let o = sl21(&["invariant", "--braid", "2: s1 s1 s1", "--colors", "a1=0", "--strand", strand]);
        assert!(o.status.success());
        s(json(&o)["result"]["value"].as_str().unwrap())
    };
    assert_eq!(run("0"), run("1"));
}

#[test]
fn invariant_csv_format() {
    let o = sl21(&["invariant", "--braid", "1:", "--colors", "a1=1", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("key,value\n"));
    assert!(text.lines().any(|l| l.starts_with("value,")));
}

#[test]
fn malformed_braid_reports_position() {
    let o = sl21(&["invariant", "--braid", "2: s1 x1", "--colors", "a1=0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("byte 6"), "{}", stderr(&o));
}

#[test]
fn empty_range_is_a_usage_error() {
    let o = sl21(&["sweep", "--braid", "1:", "--colors", "a1=4..2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("empty range"));
    let o = sl21(&["sweep", "--braid", "1:"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn unknot_sweep_matches_modified_dimension() {
    let o = sl21(&["sweep", "--braid", "1:", "--colors", "a1=0..6", "--format", "csv"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let t = FunctionTable::from_csv(&stdout(&o)).unwrap();
    assert_eq!((t.lo(), t.hi()), (&[0][..], &[6][..]));
    for a1 in 0..=6 {
        assert_eq!(*t.get(&[a1]).unwrap(), modified_dim(TypicalColor::new(a1 as u32, 1)));
    }
}

#[test]
fn sweep_json_round_trips_through_scalar_text() {
    let o = sl21(&["sweep", "--braid", "2: s1 s1", "--colors", "a1=0..1"]);
    assert!(o.status.success());
    for row in json(&o)["rows"].as_array().unwrap() {
        let text = row["value"].as_str().unwrap();
        assert_eq!(s(text).to_string(), text);
    }
}

#[test]
fn budget_truncates_and_marks_output() {
    let o = sl21(&["sweep", "--braid", "1:", "--colors", "a1=0..5", "--max-a1", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    assert!(text.starts_with("# partial"));
    assert_eq!(text.lines().count(), 1 + 1 + 3);
    let o = sl21(&["invariant", "--braid", "5: s1 s2 s3 s4", "--colors", "a1=0", "--max-width", "7"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn qsquare_guess_reports_operator() {
    let o = sl21(&["guess", "--builtin", "qsquare", "--order", "1", "--mdegree", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["status"], "certified");
    let op = v["operators"][0].as_str().unwrap();
    let parsed = sl21::qweyl::parse_op(op, vec![sl21::qweyl::Direction::Discrete]).unwrap();
    let expected = sl21::qweyl::parse_op("(1) * L1 + (-1*q) * M1^2", vec![sl21::qweyl::Direction::Discrete]).unwrap();
    assert!(parsed.equals(&expected), "{op}");
}

#[test]
fn noise_has_no_witness() {
    let dir = tempfile::tempdir().unwrap();
    let vals = [3, -7, 11, 2, 19, -5, 8, 13, -1, 6, 17, 4, -9, 23];
    let table = FunctionTable::from_fn(vec![0], vec![11], |p| Scalar::from_i64(vals[p[0] as usize]));
    let held = FunctionTable::from_fn(vec![0], vec![13], |p| Scalar::from_i64(vals[p[0] as usize]));
    let (tp, hp) = (dir.path().join("t.csv"), dir.path().join("h.csv"));
    std::fs::write(&tp, table.to_csv()).unwrap();
    std::fs::write(&hp, held.to_csv()).unwrap();
    let o = sl21(&[
        "guess",
        "--table",
        tp.to_str().unwrap(),
        "--heldout",
        hp.to_str().unwrap(),
        "--order",
        "1",
        "--mdegree",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["status"], "no_witness");
    assert!(v["reason"].as_str().unwrap().contains("no witness at these bounds"));
}

#[test]
fn unknot_table_is_certified() {
    let job = JobSpec::new("1:", &["a1=0..10".into()], 0, 0, 0).unwrap();
    let source = GuessSource::Sweep {
        job: &job,
        kind: ValueKind::Framed,
        extend: 2,
    };
    let out = cmd_guess(source, 1, 2, false, Budget::default(), Execution::default()).unwrap();
    assert_eq!(out.status, GuessStatus::Certified, "{:?}", out.reason);
    let cert = out.certificate.unwrap();
    assert_eq!((cert.heldout_lo.clone(), cert.heldout_hi.clone()), (vec![0], vec![12]));
}

#[test]
fn identical_jobs_give_identical_bytes() {
    let args = ["invariant", "--braid", "2: s1 s1 s1", "--colors", "a1=1", "--seed", "9"];
    let (a, b) = (sl21(&args), sl21(&args));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("\"seed\": 9"));
    let (a, b) = (sl21(&["verify", "--seed", "5"]), sl21(&["verify", "--seed", "5"]));
    assert!(a.status.success(), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let seq = sl21(&["--sequential", "sweep", "--braid", "2: s1 s1 s1", "--colors", "a1=0..2"]);
    let par = sl21(&["sweep", "--braid", "2: s1 s1 s1", "--colors", "a1=0..2"]);
    assert_eq!(seq.stdout, par.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v.json");
    let o = sl21(&["verify", "--seed", "1", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["seed"], 1);
    assert_eq!(v["passed"], true);
}
