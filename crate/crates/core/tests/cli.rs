use logpoisson::cli::run_with;
use logpoisson::complexes::{
    CochainComplex, ComplexRegistry, ComplexSpec, Logarithmic, VariantKind, VariantParams,
};
use logpoisson::error::{Error, Result};
use logpoisson::poly::BiPoly;
use logpoisson::suites::SuiteRegistry;
use serde_json::Value;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run_in(complexes: &ComplexRegistry, args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("logpoisson").chain(args.iter().copied());
    let code = run_with(
        argv,
        complexes,
        &SuiteRegistry::with_defaults(),
        &mut out,
        &mut err,
    );
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_in(&ComplexRegistry::with_defaults(), args)
}

fn json(args: &[&str]) -> Value {
    let r = run(args);
    assert_eq!(r.code, 0, "{}", r.err);
    serde_json::from_str(&r.out).unwrap()
}

#[test]
fn dims_log_n2_has_32_matching_rows() {
    let v = json(&[
        "dims",
        "--variant",
        "log",
        "--n",
        "2",
        "--weights",
        "-2..5",
        "--format",
        "json",
    ]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 32);
    assert!(rows.iter().all(|r| r["match"] == Value::Bool(true)));
    let keys: Vec<&str> = rows[0]
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    for key in [
        "variant",
        "n",
        "k",
        "w",
        "dimZ",
        "dimB",
        "dimH",
        "predicted",
        "match",
    ] {
        assert!(keys.contains(&key), "missing {key}");
    }
    assert_eq!(v["suites"], Value::Array(vec![]));
    assert_eq!(v["config"]["weights"]["min"], -2);
}

#[test]
fn dims_both_includes_corollary_columns() {
    let r = run(&[
        "dims",
        "--variant",
        "both",
        "--n",
        "3",
        "--weights",
        "-2..6",
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    let header = r.out.lines().next().unwrap();
    assert!(header.contains("logW") && header.contains("logDimH") && header.contains("corollary"));
    assert!(r.out.contains("PASS  corollary[n=3]"));

    let v = json(&[
        "dims",
        "--variant",
        "both",
        "--n",
        "3",
        "--weights",
        "-2..6",
        "--format",
        "json",
    ]);
    let rows = v["rows"].as_array().unwrap();
    let classical: Vec<&Value> = rows
        .iter()
        .filter(|r| r["variant"] == "classical")
        .collect();
    assert!(!classical.is_empty());
    assert!(classical
        .iter()
        .all(|r| r["corollary"]["match"] == Value::Bool(true)));
    assert!(rows
        .iter()
        .filter(|r| r["variant"] == "log")
        .all(|r| r.get("corollary").is_none()));
}

#[test]
fn dims_csv_has_header_row() {
    let r = run(&["dims", "--n", "2", "--weights", "0..1", "--format", "csv"]);
    assert_eq!(r.code, 0);
    let mut lines = r.out.lines();
    assert_eq!(
        lines.next(),
        Some("variant,n,k,w,dimZ,dimB,dimH,predicted,match")
    );
    assert_eq!(lines.count(), 8);
}

#[test]
fn config_errors_exit_2() {
    let r = run(&["dims", "--n", "1"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("n must be ≥ 2"), "{}", r.err);
    assert_eq!(run(&["dims", "--n", "1..3"]).code, 2);
    assert_eq!(run(&["dims", "--weights", "3..x"]).code, 2);
    assert_eq!(run(&["dims", "--weights", "5..0"]).code, 2);
    assert_eq!(run(&["dims", "--variant", "other"]).code, 2);
    assert_eq!(run(&["verify", "--phi", "x + z"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&[]).code, 2);
}

#[test]
fn help_exits_0() {
    let r = run(&["--help"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("dims") && r.out.contains("verify"));
}

#[test]
fn reps_examples() {
    let r = run(&["reps", "--n", "2", "--k", "1", "--w", "0"]);
    assert_eq!(r.code, 0);
    let elements: Vec<&str> = r
        .out
        .lines()
        .skip(1)
        .map(|l| l.split("  cocycle").next().unwrap().trim())
        .collect();
    assert_eq!(elements, ["y·δ¹", "x·δ¹ + δ²"]);
    assert!(r.out.contains("non-coboundary ✓"));

    let v = json(&[
        "reps", "--n", "3", "--k", "2", "--w", "-1", "--format", "json",
    ]);
    let reps = v["representatives"].as_array().unwrap();
    assert_eq!(reps.len(), 1);
    assert_eq!(reps[0]["element"], "δ¹∧δ²");
    assert_eq!(reps[0]["cocycle"], true);
    assert_eq!(reps[0]["nonCoboundary"], true);

    let r = run(&["reps", "--k", "5"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("H^5 = 0"));
}

#[test]
fn classical_reps() {
    let v = json(&[
        "reps",
        "--variant",
        "classical",
        "--n",
        "2",
        "--k",
        "1",
        "--w",
        "0",
        "--format",
        "json",
    ]);
    let elements: Vec<&str> = v["representatives"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["element"].as_str().unwrap())
        .collect();
    assert_eq!(elements, ["y·∂x", "x·∂x + y·∂y"]);
}

#[test]
fn verify_single_n_passes() {
    let r = run(&["verify", "--n", "2", "--seed", "42"]);
    assert_eq!(r.code, 0, "{}", r.out);
    assert!(r.out.contains("suites passed"));
    assert!(!r.out.contains("FAIL"));
}

#[test]
fn verify_loops_over_n() {
    let v = json(&[
        "verify",
        "--n",
        "2..3",
        "--weights",
        "-2..8",
        "--format",
        "json",
    ]);
    let names: Vec<&str> = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"koszul[n=2]") && names.contains(&"koszul[n=3]"));
    assert!(names.contains(&"classical-phi"));
    assert!(v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .all(|s| s["pass"] == true));
}

#[test]
fn verify_accepts_extra_phi() {
    let r = run(&[
        "verify",
        "--n",
        "2",
        "--weights",
        "0..3",
        "--phi",
        "x^3 - 2*y",
        "--phi",
        "-x*y",
    ]);
    assert_eq!(r.code, 0, "{}", r.out);
}

/// The logarithmic complex with `d²` perturbed by `+ a¹`.
struct CorruptedD2(Logarithmic);

impl CochainComplex for CorruptedD2 {
    fn kind(&self) -> VariantKind {
        VariantKind::Logarithmic
    }

    fn spec(&self) -> ComplexSpec {
        self.0.spec()
    }

    fn d1(&self, f: &BiPoly) -> [BiPoly; 2] {
        self.0.d1(f)
    }

    fn d2(&self, a: &[BiPoly; 2]) -> BiPoly {
        &self.0.d2(a) + &a[0]
    }

    fn weight_shift(&self) -> Result<i64> {
        self.0.weight_shift()
    }

    fn y_power(&self) -> Option<u32> {
        self.0.y_power()
    }
}

#[test]
fn corrupted_d2_fails_verify_with_counterexample() {
    let mut complexes = ComplexRegistry::with_defaults();
    complexes.register("log", |p: &VariantParams| {
        let n = p.n.ok_or(Error::MissingParameter("log".into(), "n"))?;
        Ok(Box::new(CorruptedD2(Logarithmic::new(n)?)) as Box<dyn CochainComplex>)
    });
    let r = run_in(&complexes, &["verify", "--n", "2", "--weights", "-2..6"]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("FAIL  complex-identity[n=2]"), "{}", r.out);
    assert!(
        r.out.contains("counterexample: log(n=2): d²(d¹(f)) = "),
        "{}",
        r.out
    );
    assert!(r.out.contains("FAIL  definition-oracle[n=2]"));
}

#[test]
fn json_is_identical_across_job_counts() {
    let args = |jobs: &'static str| {
        [
            "verify",
            "--n",
            "2..3",
            "--weights",
            "-2..10",
            "--format",
            "json",
            "--jobs",
            jobs,
        ]
    };
    let a = run(&args("1"));
    let b = run(&args("8"));
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
    assert!(!a.out.contains("jobs"));
}

#[test]
fn bench_dims_do_not_depend_on_jobs() {
    let dims = |jobs: &str| -> Vec<Value> {
        let v = json(&[
            "bench",
            "--n",
            "2..3",
            "--weights",
            "0..12",
            "--format",
            "json",
            "--jobs",
            jobs,
        ]);
        v["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| serde_json::json!([r["variant"], r["n"], r["w"], r["dimH"], r["match"]]))
            .collect()
    };
    let one = dims("1");
    assert_eq!(one.len(), 26);
    assert_eq!(one, dims("8"));
}

#[test]
fn bench_empty_window() {
    let r = run(&["bench", "--weights", "5..0", "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["rows"], Value::Array(vec![]));
    let r = run(&["bench", "--weights", "5..0"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out.lines().count(), 1);
}
