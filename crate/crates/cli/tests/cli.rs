use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn invgen(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invgen"))
        .args(args)
        .current_dir(dir)
        .env_remove("INVGEN_ATLAS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<csv::StringRecord> {
    csv::Reader::from_reader(text.as_bytes())
        .records()
        .map(Result::unwrap)
        .collect()
}

#[test]
fn table_single_row() {
    let dir = TempDir::new().unwrap();
    let o = invgen(dir.path(), &["table", "--range", "5..5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "n,p_num,p_den,p_rounded,inv_gap\n5,1,4,0.250,1.333333\n");
    assert!(dir.path().join("invgen.atlas.json").exists());
}

#[test]
fn table_reproduces_small_degrees() {
    let dir = TempDir::new().unwrap();
    let o = invgen(dir.path(), &["table", "--range", "5..15"]);
    assert_eq!(o.status.code(), Some(0));
    let got: Vec<String> = csv_rows(&stdout(&o)).iter().map(|r| r[3].to_string()).collect();
    let want = [
        "0.250", "0.244", "0.395", "0.380", "0.461", "0.543", "0.601", "0.607", "0.660", "0.700",
        "0.723",
    ];
    assert_eq!(got, want);

    let json = invgen(dir.path(), &["table", "--range", "5..15", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 11);
    for (r, rec) in rows.iter().zip(csv_rows(&stdout(&o))) {
        assert_eq!(r["p_num"].as_str().unwrap(), &rec[1]);
        assert_eq!(r["p_den"].as_str().unwrap(), &rec[2]);
    }
}

#[test]
fn table_solvable_degrees() {
    let dir = TempDir::new().unwrap();
    let o = invgen(dir.path(), &["table", "--range", "2..4"]);
    for r in csv_rows(&stdout(&o)) {
        assert_eq!(&r[1], "0");
        assert_eq!(&r[4], "1.000000");
    }
}

#[test]
fn figure_points() {
    let dir = TempDir::new().unwrap();
    let o = invgen(dir.path(), &["figure", "--range", "5..7"]);
    assert_eq!(stdout(&o).lines().next(), Some("n,inv_gap"));
    assert_eq!(csv_rows(&stdout(&o)).len(), 3);
}

#[test]
fn certify_outcomes() {
    let dir = TempDir::new().unwrap();
    let o = invgen(dir.path(), &["certify", "x^5 - x - 1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let primes: Vec<u64> = v["primes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["p"].as_u64().unwrap())
        .collect();
    assert_eq!(primes, vec![2, 3]);
    assert!(stderr(&o).contains("Dedekind"));

    let o = invgen(dir.path(), &["certify", "x^2 + 1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = invgen(dir.path(), &["certify", "x^5 -"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("column 6"), "{}", stderr(&o));

    let o = invgen(dir.path(), &["certify", "x^5 - 2", "--budget", "200"]);
    assert_eq!(o.status.code(), Some(2));

    let o = invgen(dir.path(), &["certify", "(x^5 - x - 1)^2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn estimate_is_reproducible_and_near_two() {
    let dir = TempDir::new().unwrap();
    let args = ["estimate", "25", "--trials", "10000", "--seed", "1", "--stretch"];
    let a = invgen(dir.path(), &args);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    let b = invgen(dir.path(), &args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let mean = v["mean"].as_f64().unwrap();
    assert!((2.10..=2.30).contains(&mean), "{mean}");
    let mass: u64 = v["histogram"].as_object().unwrap().values().map(|c| c.as_u64().unwrap()).sum();
    assert_eq!(mass, 10_000);
}

#[test]
fn estimate_rejects_small_degrees() {
    let dir = TempDir::new().unwrap();
    let o = invgen(dir.path(), &["estimate", "4", "--trials", "100"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("all subgroups solvable"));
}

#[test]
fn atlas_gap_names_the_degree() {
    let dir = TempDir::new().unwrap();
    let b = invgen(dir.path(), &["atlas", "build", "--max-degree", "8", "--out", "small.atlas.json"]);
    assert_eq!(b.status.code(), Some(0));
    let o = invgen(dir.path(), &["table", "--range", "5..10", "--atlas", "small.atlas.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("degree 10"), "{}", stderr(&o));

    let o = Command::new(env!("CARGO_BIN_EXE_invgen"))
        .args(["table", "--range", "5..8"])
        .current_dir(dir.path())
        .env("INVGEN_ATLAS", "small.atlas.json")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(!dir.path().join("invgen.atlas.json").exists());

    let o = invgen(dir.path(), &["table", "--range", "5..16"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--stretch"));
}

#[test]
fn atlas_inspect_and_corruption() {
    let dir = TempDir::new().unwrap();
    invgen(dir.path(), &["atlas", "build", "--max-degree", "7", "--out", "a.atlas.json"]);
    let o = invgen(dir.path(), &["atlas", "inspect", "a.atlas.json"]);
    assert!(stdout(&o).contains("degree  5: 3 maximal sets"), "{}", stdout(&o));
    let o = invgen(dir.path(), &["atlas", "inspect", "a.atlas.json", "--degree", "5"]);
    assert_eq!(stdout(&o).lines().count(), 3);

    let full = std::fs::read_to_string(dir.path().join("a.atlas.json")).unwrap();
    std::fs::write(dir.path().join("cut.atlas.json"), &full[..full.len() / 2]).unwrap();
    let o = invgen(dir.path(), &["atlas", "inspect", "cut.atlas.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("byte"), "{}", stderr(&o));
}

#[test]
fn covered_queries() {
    let dir = TempDir::new().unwrap();
    let o = invgen(dir.path(), &["covered", "8", "7,1", "4,4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["covered"], false);
    let o = invgen(dir.path(), &["covered", "5", "5", "4,1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["covered"], true);
    let o = invgen(dir.path(), &["covered", "5", "4,4"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn stats_and_frobenius_outputs_parse() {
    let dir = TempDir::new().unwrap();
    let o = invgen(dir.path(), &["stats", "60", "--trials", "2000", "--format", "csv"]);
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 1);
    let p: f64 = rows[0][5].parse().unwrap();
    assert!((0.0..=1.0).contains(&p));
    let j = invgen(dir.path(), &["stats", "60", "--trials", "2000"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&j)).unwrap();
    assert_eq!(v["coprime_prime_cycle"]["estimate"].as_f64().unwrap(), p);

    let o = invgen(dir.path(), &["frobenius", "x^3 - 2", "--bound", "20000", "--format", "csv"]);
    let rows = csv_rows(&stdout(&o));
    let total: f64 = rows.iter().map(|r| r[2].parse::<f64>().unwrap()).sum();
    assert!((total - 1.0).abs() < 1e-5);
    let o = invgen(dir.path(), &["frobenius", "x^3 - 2", "--bound", "20000"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["patterns"].as_array().unwrap().len(), 3);
}

#[test]
fn usage_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    assert_eq!(invgen(dir.path(), &["table", "--range", "9..5"]).status.code(), Some(1));
    assert_eq!(invgen(dir.path(), &["nonsense"]).status.code(), Some(1));
    assert_eq!(invgen(dir.path(), &["--help"]).status.code(), Some(0));
}
