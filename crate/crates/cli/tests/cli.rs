use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const HAMMING: &str = "GF 2 1 0 1\n7 4\n1 0 0 0 1 1 0\n0 1 0 0 1 0 1\n0 0 1 0 0 1 1\n0 0 0 1 1 1 1\n";
const EVEN4: &str = "GF 2 1 0 1\n4 3\n1 1 0 0\n0 1 1 0\n0 0 1 1\n";
const ONES4: &str = "GF 2 1 0 1\n4 1\n1 1 1 1\n";
const SELF_ORTH4: &str = "GF 2 1 0 1\n4 2\n1 1 1 1\n1 1 0 0\n";

fn qcss(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcss"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn setup() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("hamming7.code"), HAMMING).unwrap();
    fs::write(dir.path().join("even4.code"), EVEN4).unwrap();
    fs::write(dir.path().join("ones4.code"), ONES4).unwrap();
    fs::write(dir.path().join("so4.code"), SELF_ORTH4).unwrap();
    let out = qcss(dir.path(), &["code", "dual", "--file", "hamming7.code", "--out", "hamming7dual.code"]);
    assert!(out.status.success());
    dir
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn steane_build() {
    let dir = setup();
    let out = qcss(dir.path(), &["css", "build", "--c1", "hamming7.code", "--c2", "hamming7dual.code"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["n"], 7);
    assert_eq!(v["result"]["quantum_dim"], 1);
    assert_eq!(v["result"]["d1"], 3);
    assert_eq!(v["result"]["d2_perp"], 3);
    assert_eq!(v["result"]["t"], 1);
    assert_eq!(v["params"]["c1"], "hamming7.code");
}

#[test]
fn code_info_and_dual() {
    let dir = setup();
    let v = json(&qcss(dir.path(), &["code", "info", "--file", "hamming7.code"]));
    assert_eq!(v["result"]["min_distance"], 3);
    assert_eq!(v["result"]["weight_distribution"], serde_json::json!([1, 0, 0, 7, 7, 0, 0, 1]));
    let dual = fs::read_to_string(dir.path().join("hamming7dual.code")).unwrap();
    assert!(dual.starts_with("GF 2 1 0 1\n7 3\n"));
}

#[test]
fn csst_verdicts_map_to_exit_codes() {
    let dir = setup();
    let yes = qcss(dir.path(), &["csst", "check", "--c1", "so4.code", "--c2", "ones4.code", "--bounds"]);
    assert_eq!(yes.status.code(), Some(0));
    let v = json(&yes);
    assert_eq!(v["result"]["csst"]["verdict"], true);
    assert!(v["result"]["bounds"]["bounds"].is_array());

    let no = qcss(dir.path(), &["csst", "check", "--c1", "even4.code", "--c2", "ones4.code", "--bounds"]);
    assert_eq!(no.status.code(), Some(1));
    let v = json(&no);
    assert_eq!(v["result"]["csst"]["verdict"], false);
    assert_eq!(v["result"]["csst"]["witness"]["condition"], "projected_self_orthogonality");
    assert!(v["result"].get("bounds").is_none());

    let nested = qcss(dir.path(), &["csst", "check", "--c1", "hamming7dual.code", "--c2", "hamming7.code"]);
    assert_eq!(nested.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&nested.stderr).contains("not a subcode"));
    assert!(nested.stdout.is_empty());
}

#[test]
fn density_row_is_consistent_and_deterministic() {
    let dir = setup();
    let args = [
        "density", "--q", "4", "--n", "8", "--k1", "4", "--k2", "2", "--alpha", "2", "--beta", "2", "--N", "2000", "--seed", "7",
    ];
    let a = qcss(dir.path(), &args);
    let b = qcss(dir.path(), &args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let col = |name: &str| row[header.iter().position(|h| *h == name).unwrap()];
    assert_eq!(col("seed"), "7");
    assert_eq!(col("N"), "2000");
    let n: f64 = col("N").parse().unwrap();
    let p_hat = col("successes").parse::<f64>().unwrap() / n;
    let bound = col("lower_bound_num").parse::<f64>().unwrap() / col("lower_bound_den").parse::<f64>().unwrap();
    let sigma = (p_hat * (1.0 - p_hat) / n).sqrt();
    assert!(p_hat >= bound - 3.0 * sigma, "{p_hat} vs {bound}");
}

#[test]
fn out_files_are_byte_identical() {
    let dir = setup();
    let run = |name: &str| {
        let out = qcss(dir.path(), &["weightword", "--q", "3", "--n", "5", "--k", "2", "--omega", "4", "--N", "300", "--seed", "11", "--out", name]);
        assert!(out.status.success());
        fs::read(dir.path().join(name)).unwrap()
    };
    assert_eq!(run("a.csv"), run("b.csv"));
}

#[test]
fn hermitian_emits_codes() {
    let dir = setup();
    let out = qcss(dir.path(), &["hermitian", "--q", "2", "--m", "4", "--emit-codes", "herm"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["css"]["n"], 8);
    assert_eq!(v["result"]["css"]["quantum_dim"], 3);
    assert_eq!(v["result"]["alphabet"], 4);
    assert_eq!(v["result"]["csst"]["verdict"], true);
    let herm = dir.path().join("herm");
    assert_eq!(fs::read(herm.join("report.json")).unwrap(), out.stdout);
    let build = qcss(dir.path(), &["csst", "check", "--c1", "herm/c1.code", "--c2", "herm/c2.code"]);
    assert_eq!(build.status.code(), Some(0));
}

#[test]
fn statevec_verify_prints_residual() {
    let dir = setup();
    let out = qcss(dir.path(), &["statevec", "verify", "--c1", "even4.code", "--c2", "ones4.code"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["holds"], true);
    assert!(v["result"]["max_residual"].as_f64().unwrap() < 1e-9);
    assert_eq!(v["result"]["checked"], 4);
}

#[test]
fn error_exit_codes() {
    let dir = setup();
    assert_eq!(qcss(dir.path(), &["bogus"]).status.code(), Some(2));
    assert_eq!(qcss(dir.path(), &["density", "--q", "6", "--n", "2", "--k1", "1", "--k2", "0", "--alpha", "1", "--beta", "1"]).status.code(), Some(2));
    let cap = qcss(dir.path(), &["--enum-cap", "4", "code", "info", "--file", "hamming7.code"]);
    assert_eq!(cap.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&cap.stderr).contains("cap"));
    let dense = qcss(dir.path(), &["--dense-cap", "8", "statevec", "verify", "--c1", "even4.code", "--c2", "ones4.code"]);
    assert_eq!(dense.status.code(), Some(3));
    fs::write(dir.path().join("bad.code"), "GF 2 1 0 1\n3 1\n1 2 0\n").unwrap();
    assert_eq!(qcss(dir.path(), &["code", "info", "--file", "bad.code"]).status.code(), Some(4));
    assert_eq!(qcss(dir.path(), &["code", "info", "--file", "missing.code"]).status.code(), Some(4));
    let stderr = String::from_utf8(qcss(dir.path(), &["code", "info", "--file", "missing.code"]).stderr).unwrap();
    assert_eq!(stderr.lines().count(), 1);
}
