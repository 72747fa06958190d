use std::process::{Command, Output};

use isotopy_core::LaurentPoly;
use serde_json::Value;

fn isotopy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isotopy"))
        .args(args)
        .env_remove("ISOTOPY_HOM_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = isotopy(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn alex_inline_braid() {
    let o = isotopy(&["alex", "--braid", "strands=3; 1 2 1 2 1 2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("components: 3"));

    let v = json(&["alex", "--braid", "strands=3; 1 2 1 2", "--route", "both"]);
    assert_eq!(v["routes_agree"], Value::Bool(true));
    let poly = LaurentPoly::from_json_value(&v["results"][0]["poly"]).unwrap();
    assert_eq!(
        poly.to_string(),
        v["results"][0]["polynomial"].as_str().unwrap()
    );
    assert!(poly.equal_up_to_units(&LaurentPoly::parse("t^2 - t + 1", 1).unwrap()));
}

#[test]
fn alex_reads_files() {
    let path = std::env::temp_dir().join(format!("isotopy-braid-{}.txt", std::process::id()));
    std::fs::write(&path, "strands=2; 1 1 1\n").unwrap();
    let o = isotopy(&[
        "alex",
        "--braid",
        path.to_str().unwrap(),
        "--route",
        "burau",
    ]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("burau: t1^-1 - 1 + t1"));
}

#[test]
fn sweep_bounds_increase() {
    let v = json(&["sweep", "--family", "trefoil-fiber", "--pmax", "8"]);
    let bounds: Vec<u64> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["lower_bound"].as_u64().unwrap())
        .collect();
    assert_eq!(bounds.len(), 8);
    assert!(bounds.windows(2).all(|w| w[0] < w[1]));

    let v = json(&[
        "sweep",
        "--family",
        "trefoil-fiber",
        "--pmax",
        "3",
        "--three-component",
    ]);
    let bounds: Vec<u64> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["lower_bound"].as_u64().unwrap())
        .collect();
    assert_eq!(bounds, vec![2, 6, 10]);

    let o = isotopy(&[
        "sweep",
        "--family",
        "cable",
        "--pmax",
        "3",
        "--three-component",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn slope_of_a_knot_is_the_longitude() {
    let v = json(&["slope", "--link", "[[0]]", "--m", "[1]"]);
    assert_eq!(v[0]["sigma"], serde_json::json!([0, 1]));
    assert_eq!(v[0]["divisibility"], 1);
    let o = isotopy(&["slope", "--link", "[[0]", "--m", "[1]"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn homology_classes() {
    let v = json(&["homology", "--lk", "[1,0,0]", "--compare", "[1,0,0]"]);
    assert_eq!(v["equal_to_comparison"], Value::Bool(true));
    let v = json(&["homology", "--lk", "[0]"]);
    assert_eq!(v["nullhomologous"], Value::Bool(true));
}

#[test]
fn pi1_reports() {
    let v = json(&["pi1", "--surgery", "1/1", "--targets", "S3,A5"]);
    assert_eq!(v["homs"][1]["total"], 121);
    assert_eq!(v["abelianization"], serde_json::json!([]));

    let v = json(&["pi1", "--family", "--pmax", "3"]);
    assert_eq!(v["blocks"].as_array().unwrap().len(), 2);

    let o = isotopy(&["pi1", "--surgery", "1/0"]);
    assert!(stdout(&o).contains("outside the 1/p surgery family"));
    let o = isotopy(&["pi1", "--surgery", "2/3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = isotopy(&["pi1", "--surgery", "one"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budget_is_enforced() {
    let o = isotopy(&["pi1", "--targets", "A5", "--budget", "100"]);
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_isotopy"))
        .args(["pi1", "--targets", "A5"])
        .env("ISOTOPY_HOM_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn torus_closed_form_and_error_codes() {
    let v = json(&["alex", "--torus", "3,4"]);
    assert_eq!(v["terms"], 5);
    let o = isotopy(&["alex", "--torus", "2,4"]);
    assert_eq!(o.status.code(), Some(1));
    let o = isotopy(&["alex", "--torus", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = isotopy(&["alex", "--braid", "strands=2; 1 1", "--route", "burau"]);
    assert_eq!(o.status.code(), Some(1));
    let o = isotopy(&["alex", "--braid", "strands=2; 3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = isotopy(&["alex"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reproduce_paper_is_deterministic() {
    let a = isotopy(&["reproduce-paper"]);
    let b = isotopy(&["reproduce-paper"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("   3    5  "));
    let v = json(&["reproduce-paper"]);
    assert_eq!(v["torus_growth"][2]["terms"], 5);
    let controls = v["unknot_controls"].as_array().unwrap();
    assert!(controls
        .iter()
        .all(|r| r["homs"].as_array().unwrap().iter().all(|h| h == 1)));
}
