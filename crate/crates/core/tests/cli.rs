use std::process::{Command, Output};

use serde_json::Value;

const FIVE_BLOCKS: &str = "0^2 1^6 0^2 1^9 0^3 1 0^6 1^2 0^3 1^4";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_threshold-spectra")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn spectrum_of_star() {
    let v = json(&["spectrum", "0001"]);
    assert_eq!(v["schema_version"], 1);
    let eig: Vec<f64> = v["eigenvalues"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert_eq!(eig, vec![-1.732051, 0.0, 0.0, 1.732051]);
    assert_eq!(v["inertia_numeric"], serde_json::json!({"negatives": 1, "zeros": 2, "positives": 1}));
    assert_eq!(v["inertia_numeric"], v["inertia_formula"]);

    let v = json(&["spectrum", "01"]);
    assert_eq!(v["eigenvalues"], serde_json::json!([-1.0, 1.0]));
}

#[test]
fn spectrum_extremes_of_larger_example() {
    let v = json(&["spectrum", FIVE_BLOCKS]);
    assert!((v["lambda_min"].as_f64().unwrap() + 7.95182).abs() < 1e-4);
    assert!((v["lambda_max"].as_f64().unwrap() - 24.59001).abs() < 1e-4);
}

#[test]
fn bounds_table() {
    let csv = stdout(&["bounds", "0011", "--format", "csv"]);
    assert_eq!(csv, "block,sigma,tau,lo,hi\n1,2,2,-1.561553,2.561553\n");
    let csv = stdout(&["bounds", "01", "--format", "csv"]);
    assert_eq!(csv, "block,sigma,tau,lo,hi\n1,1,1,-1.000000,1.000000\n");

    let v = json(&["bounds", FIVE_BLOCKS, "--precision", "5"]);
    let rows: Vec<(f64, f64)> = v["per_block"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["lo"].as_f64().unwrap(), r["hi"].as_f64().unwrap()))
        .collect();
    assert_eq!(
        rows,
        vec![(-1.91974, 22.91974), (-3.46586, 18.46586), (-4.61577, 10.61577), (-6.67878, 11.67878), (-6.63941, 9.63941)]
    );
    assert_eq!(v["holds"], true);
}

#[test]
fn embed_orders() {
    for (g, m, n) in [("00101", 5, 5), ("0^3 1^2 0^4 1^6 0^5 1^3", 7, 39), ("011", 2, 4)] {
        let v = json(&["embed", g]);
        assert_eq!((v["m"].as_u64().unwrap(), v["N"].as_u64().unwrap()), (m, n), "{g}");
        assert_eq!(v["subgraph"]["valid"], true);
        assert_eq!(v["supergraph"]["valid"], true);
        assert_eq!(v["subgraph"]["indices"].as_array().unwrap().len() as u64, m);
    }
}

#[test]
fn scan_commands() {
    let v = json(&["scan", "10", "--checks", "inertia,omega_free"]);
    assert_eq!(v["graphs_scanned"], 256);
    assert_eq!(v["violations"], serde_json::json!([]));

    let v = json(&["scan", "8", "--checks", "critical"]);
    let compact: Vec<&str> = v["critical"].as_array().unwrap().iter().map(|e| e["compact"].as_str().unwrap()).collect();
    assert_eq!(
        compact,
        ["0^2 1^2 0 1 0 1", "0^2 1 0^2 1 0 1", "0^2 1 0 1^2 0 1", "0^2 1 0 1 0^2 1", "0^2 1 0 1 0 1^2", "0^3 1 0 1 0 1"]
    );

    assert_eq!(run(&["scan", "1"]).status.code(), Some(2));
    assert_eq!(run(&["scan", "15"]).status.code(), Some(2));
    assert_eq!(run(&["scan", "8", "--checks", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["scan", "8", "--jobs", "0"]).status.code(), Some(2));
}

#[test]
fn scan_output_is_reproducible_across_jobs_and_formats() {
    let one = stdout(&["scan", "9", "--format", "json"]);
    let four = stdout(&["scan", "9", "--format", "json", "--jobs", "4"]);
    assert_eq!(one, four);
    assert_eq!(one, stdout(&["scan", "9", "--format", "json"]));

    let v: Value = serde_json::from_str(&one).unwrap();
    let csv = stdout(&["scan", "9", "--format", "csv", "--jobs", "3"]);
    let text = stdout(&["scan", "9"]);
    for (key, e) in v["extremal"].as_object().unwrap() {
        let value = format!("{:.6}", e["value"].as_f64().unwrap());
        let graph = e["graph"].as_str().unwrap();
        assert!(csv.contains(&format!("extremal,{key},{graph},{value}")), "{key} missing from csv");
        assert!(text.contains(&value) && text.contains(graph), "{key} missing from text");
    }
}

#[test]
fn parity_commands() {
    let v = json(&["parity", "2"]);
    let row = &v["rows"][0];
    assert_eq!((row["even_minus"].as_f64().unwrap(), row["even_plus"].as_f64().unwrap()), (-1.481194, 0.311108));
    assert_eq!(run(&["parity", "1"]).status.code(), Some(2));

    let text = stdout(&["parity", "60"]);
    assert!(!text.contains("FAIL"));
    assert_eq!(text.matches(" pass").count(), 7);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["spectrum", "0010"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "0x1"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "01", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "01", "--precision", "13"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn precision_and_output_file() {
    let dir = std::env::temp_dir().join(format!("threshold-spectra-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("spectrum.json");
    let out = run(&["spectrum", "0101", "--format", "json", "--precision", "12", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["mu_plus"].as_f64().unwrap(), 0.311107817466);
    std::fs::remove_dir_all(dir).unwrap();
}
