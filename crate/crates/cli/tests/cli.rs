use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use exactcat::category::{pullback, Category};
use exactcat::engine::{pullback_to_json, DiagramTrace, ProbeConfig, Report, Status, VerdictCounts, Violation};
use exactcat::instances::finvectq;
use exactcat_cli::render;
use serde_json::{json, Value};
use tempfile::TempDir;

struct Fixtures {
    dir: TempDir,
}

impl Fixtures {
    fn new() -> Self {
        Fixtures { dir: tempfile::tempdir().unwrap() }
    }

    fn file(&self, name: &str, v: &Value) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
        p
    }
}

fn vect(dom: usize, cod: usize, m: Value) -> Value {
    json!({ "category": "FinVectQ", "dom": { "dim": dom }, "cod": { "dim": cod }, "matrix": m })
}

fn exactcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exactcat")).args(args).env_remove("EXACTCAT_SEED").output().unwrap()
}

fn run(args: &[&str], path: &Path) -> Output {
    let mut all: Vec<&str> = args.to_vec();
    all.push(path.to_str().unwrap());
    exactcat(&all)
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn pair_check_accepts_the_vector_space_pair() {
    let fx = Fixtures::new();
    let p = fx.file("pair.json", &json!({ "f": vect(1, 2, json!([[1], [-1]])), "g": vect(2, 1, json!([[1, 1]])) }));
    let o = run(&["pair-check", "--format", "json"], &p);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "yes");
    assert_eq!(code(&run(&["split-check"], &p)), 0);
}

#[test]
fn pair_check_rejects_a_nonzero_composite() {
    let fx = Fixtures::new();
    let p = fx.file("pair.json", &json!({ "f": vect(1, 2, json!([[1], [1]])), "g": vect(2, 1, json!([[1, 1]])) }));
    let o = run(&["pair-check"], &p);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("composite is not zero"), "{}", stderr(&o));
}

#[test]
fn classify_doubling_on_lattices() {
    let fx = Fixtures::new();
    let p = fx.file(
        "two.json",
        &json!({ "category": "LatticeZ", "dom": { "rank": 1 }, "cod": { "rank": 1 }, "matrix": [[2]] }),
    );
    let o = run(&["classify", "--format", "json"], &p);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v,
        json!({ "mono": true, "epi": true, "iso": false, "is_kernel": false, "is_cokernel": false, "strict": false })
    );
    assert_eq!(code(&run(&["strict"], &p)), 1);
    let o = run(&["semistable-cokernel"], &p);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("not a cokernel"));
}

#[test]
fn input_errors_name_the_field() {
    let fx = Fixtures::new();
    let p = fx.file("rows.json", &vect(2, 1, json!([[1, 1], [2, 2]])));
    let o = run(&["kernel"], &p);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("`matrix`"), "{}", stderr(&o));

    let p = fx.file(
        "mp.json",
        &json!({ "category": "MonoPairsQ", "dom": { "dim": 1, "sub": [[1]] }, "cod": { "dim": 1, "sub": [] }, "matrix": [[1]] }),
    );
    let o = run(&["classify"], &p);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("distinguished subspace"), "{}", stderr(&o));

    let p = fx.file("t.json", &json!({ "g": vect(2, 1, json!([[1, 1]])) }));
    let o = run(&["pullback"], &p);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("`t`"), "{}", stderr(&o));

    let p = fx.dir.path().join("broken.json");
    std::fs::write(&p, "{").unwrap();
    assert_eq!(code(&run(&["classify"], &p)), 2);
    assert_eq!(code(&exactcat(&["classify", "/nonexistent/file.json"])), 2);
    assert_eq!(code(&exactcat(&["suite", "axioms"])), 2);
}

#[test]
fn category_flag_must_agree_with_the_file() {
    let fx = Fixtures::new();
    let p = fx.file("g.json", &vect(2, 1, json!([[1, 1]])));
    assert_eq!(code(&run(&["classify", "--category", "LatticeZ"], &p)), 2);
    assert_eq!(code(&run(&["classify", "--category", "FinVectQ"], &p)), 0);
}

#[test]
fn exit_codes_for_verdicts() {
    let fx = Fixtures::new();
    let p = fx.file("g.json", &vect(2, 1, json!([[1, 1]])));
    assert_eq!(code(&run(&["semistable-cokernel"], &p)), 0);
    let o = run(&["semistable-cokernel", "--probe-only", "--samples", "9", "--format", "json"], &p);
    assert_eq!(code(&o), 3);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, json!({ "verdict": "unknown", "budget": 9 }));
}

#[test]
fn kernel_output_parses_back() {
    let fx = Fixtures::new();
    let p = fx.file("g.json", &vect(3, 1, json!([[1, 2, 3]])));
    let o = run(&["kernel", "--format", "json"], &p);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cat = finvectq();
    let k = cat.morphism_from_json(&v["inclusion"]).unwrap();
    assert_eq!(cat.morphism_to_json(&k), v["inclusion"]);
    let g = cat.mor(1, 3, &[1, 2, 3]);
    assert!(cat.is_zero_morphism(&cat.compose(&k, &g).unwrap()));
}

#[test]
fn pullback_and_pushout_verbs() {
    let fx = Fixtures::new();
    let p = fx.file("gt.json", &json!({ "g": vect(2, 1, json!([[1, 1]])), "t": vect(1, 1, json!([[3]])) }));
    let o = run(&["pullback", "--format", "json"], &p);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["P"], json!({ "dim": 2 }));
    let p = fx.file("ft.json", &json!({ "f": vect(1, 2, json!([[1], [0]])), "t": vect(1, 1, json!([[0]])) }));
    let o = run(&["pushout"], &p);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("s_T"));
}

#[test]
fn suite_runs_are_clean_and_deterministic() {
    let args = ["suite", "axioms", "--category", "FinVectQ", "--samples", "100", "--seed", "42"];
    let o = exactcat(&args);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("100 cases, 0 violations"));
    let json_args = [&args[..], &["--format", "json"]].concat();
    let (a, b) = (exactcat(&json_args), exactcat(&json_args));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(code(&exactcat(&["suite", "nope", "--category", "FinVectQ"])), 2);
}

#[test]
fn seed_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_exactcat"))
        .args(["suite", "lemma", "--category", "LatticeZ", "--samples", "3", "--format", "json"])
        .env("EXACTCAT_SEED", "7")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["seed"], 7);
    let o = exactcat(&["suite", "lemma", "--category", "LatticeZ", "--samples", "3", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["seed"], exactcat::DEFAULT_SEED);
}

#[test]
fn empty_report_renders_counts() {
    let o = exactcat(&["suite", "kelly", "--category", "MonoPairsQ", "--samples", "0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("0 cases, 0 violations"));
}

#[test]
fn violation_prints_the_whole_square() {
    let cat = finvectq();
    let sq = pullback(&cat, &cat.mor(1, 2, &[1, 0]), &cat.mor(1, 2, &[0, 1])).unwrap();
    let mut d = DiagramTrace::new();
    d.put_value("probe", pullback_to_json(&cat, &sq));
    let report = Report {
        suite: "axioms".into(),
        category: "FinVectQ".into(),
        config: ProbeConfig::default(),
        instance_rules: true,
        status: Status::Violations,
        cases: 1,
        vacuous: 0,
        violations: vec![Violation {
            case: Some(0),
            check: "E2op".into(),
            message: "example".into(),
            diagram: d,
            recheck: None,
        }],
        unknown: 0,
        verdicts: VerdictCounts::default(),
        witnesses: Vec::new(),
        findings: BTreeMap::new(),
    };
    let text = render::report(&report);
    assert!(text.contains("1 cases, 1 violations"));
    for label in ["g:", "t:", "p_Y:", "p_T:"] {
        assert!(text.contains(label), "{label} missing from\n{text}");
    }
    assert_eq!(render::report(&report), text);
}
