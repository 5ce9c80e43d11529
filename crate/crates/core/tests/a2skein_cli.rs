use std::path::PathBuf;
use std::process::{Command, Output};

use a2skein::cli::{ClaspReport, DimReport, EvalReport, FusionReport, Genus2Report, QintReport};
use a2skein::repdata::TraceReport;
use a2skein::surface::Certificate;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples", "data", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn a2skein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_a2skein"))
        .args(args)
        .env_remove("A2SKEIN_CACHE_DIR")
        .output()
        .expect("binary runs")
}

/// Runs with `--json`, checks exit 0, and that the report survives a
/// print/parse round trip byte for byte.
fn report<T: Serialize + DeserializeOwned>(args: &[&str]) -> T {
    let mut all = args.to_vec();
    all.push("--json");
    let out = a2skein(&all);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let r: T = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&r).unwrap(), text.trim_end());
    r
}

#[test]
fn qint_at_three_r() {
    let r: QintReport = report(&["qint", "--n", "15", "--level", "2"]);
    assert!(r.is_zero);
    let r: QintReport = report(&["qint", "--n", "3"]);
    assert_eq!(r.value.exact, "A^6 + 1 + A^-6");
}

#[test]
fn fusion_dim_of_three_adjoints() {
    let out = a2skein(&["fusion-dim", "--labels", "(1,1),(1,1),(1,1)"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "2");
    let r: FusionReport = report(&["fusion-dim", "--labels", "(1,1),(1,1),(1,1)", "--tuples"]);
    assert_eq!(r.six_tuples.unwrap().len(), 2);
    let out = a2skein(&[
        "fusion-dim",
        "--labels",
        "(1,1),(1,1),(1,1)",
        "--level",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn distinguish_t_squared() {
    let r: TraceReport = report(&["distinguish", "--word", "t^2"]);
    let s2 = 2f64.sqrt();
    assert!((r.tr_ising - (5.0 + 2.0 * s2).sqrt()).abs() < 1e-9);
    assert!((r.tr_su2 - (5.0 - 2.0 * s2).sqrt()).abs() < 1e-9);
    assert!(r.distinct && r.hypotheses_met);
    let r: TraceReport = report(&["distinguish", "--word", "t^4"]);
    assert!(!r.hypotheses_met);
}

#[test]
fn genus2_powers() {
    let r: Genus2Report = report(&["genus2", "--theory", "ising", "--power", "2"]);
    assert_eq!(r.basis.len(), 10);
    assert!((r.trace_abs - (52.0 + 24.0 * 2f64.sqrt()).sqrt()).abs() < 1e-9);
    assert!(r.distinct);
    assert_eq!(
        a2skein(&["genus2", "--theory", "potts"]).status.code(),
        Some(1)
    );
}

#[test]
fn eval_theta_web() {
    let r: EvalReport = report(&["eval-web", "--web", &data("theta.json")]);
    assert_eq!(r.value.unwrap().exact, "A^9 + 2*A^3 + 2*A^-3 + A^-9");
    let r: EvalReport = report(&[
        "eval-web",
        "--web",
        &data("theta.json"),
        "--level",
        "1",
        "--seed",
        "7",
    ]);
    let [re, im] = r.value.unwrap().numeric.unwrap();
    // [3][2] at A = e^{2πi/24}: [3] = 1, [2] = √2
    assert!((re - 2f64.sqrt()).abs() < 1e-9 && im.abs() < 1e-9);
}

#[test]
fn certificate_from_files() {
    let c: Certificate = report(&[
        "certificate",
        "--spine",
        &data("torus.json"),
        "--curve",
        &data("torus_curve.json"),
    ]);
    assert_eq!((c.complexity, c.min_level), (2, 4));
    let c: Certificate = report(&[
        "certificate",
        "--spine",
        &data("dumbbell.json"),
        "--curve",
        &data("dumbbell_curve.json"),
    ]);
    assert_eq!((c.complexity, c.min_level), (3, 6));
    assert!(c.leading_term_nonzero);
}

#[test]
fn state_space_dims() {
    let r: DimReport = report(&["dim", "--spine", &data("torus.json"), "--level", "4"]);
    assert_eq!(r.dim, 15);
    let r: DimReport = report(&["dim", "--spine", "theta", "--level", "1"]);
    assert_eq!((r.genus, r.dim), (2, 9));
    assert_eq!(
        a2skein(&["dim", "--spine", "dumbbell", "--level", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(a2skein(&["dim", "--spine", "torus"]).status.code(), Some(1));
}

#[test]
fn input_errors_exit_one() {
    for args in [
        &["distinguish", "--word", "x^2"][..],
        &["eval-web", "--web", "/nonexistent/web.json"],
        &["certificate", "--spine", "torus", "--curve", "/nonexistent"],
        &["qint"],
    ] {
        let out = a2skein(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn deterministic_output() {
    let args = ["clasp", "--m", "2", "--n", "1", "--terms", "--json"];
    assert_eq!(a2skein(&args).stdout, a2skein(&args).stdout);
}

#[test]
fn clasp_cache_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_a2skein"))
            .args(["clasp", "--m", "1", "--n", "1", "--level", "3", "--json"])
            .env("A2SKEIN_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(first.status.code(), Some(0));
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    let r: ClaspReport = serde_json::from_slice(&second.stdout).unwrap();
    assert!(r.check.idempotent && r.check.annihilated && r.check.trace_matches);
}
