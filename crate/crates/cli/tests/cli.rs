use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn sqwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqwalk"))
        .args(args)
        .output()
        .expect("sqwalk runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn build_counts_on_bundled_network() {
    let report = stdout_json(&sqwalk(&["build", "--max-dim", "4"]));
    assert_eq!(report["counts"], serde_json::json!([34, 78, 45, 11, 2]));
    assert_eq!(
        report["lower_pair_counts"],
        serde_json::json!([null, 1056, 302, 48, 2])
    );
}

#[test]
fn build_reads_an_edge_file() {
    let path = scratch("bowtie.txt", "# bowtie\n1 2\n1 3\n2 3\n3 4\n3 5\n4 5\n");
    let out = sqwalk(&["build", path.to_str().unwrap(), "--max-dim", "2", "--list"]);
    let report = stdout_json(&out);
    assert_eq!(report["counts"], serde_json::json!([5, 6, 2]));
    assert_eq!(
        report["simplices"][2],
        serde_json::json!([[1, 2, 3], [3, 4, 5]])
    );
}

#[test]
fn build_csv() {
    let out = sqwalk(&["build", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "dim,count,lower_pairs\n0,34,\n1,78,1056\n2,45,302\n3,11,48\n4,2,2\n"
    );
}

#[test]
fn verify_passes_on_karate() {
    let report = stdout_json(&sqwalk(&["verify", "--dim", "1"]));
    assert_eq!(report["all_hold"], Value::Bool(true));
    let all = stdout_json(&sqwalk(&["verify"]));
    assert_eq!(all["checks"].as_array().unwrap().len(), 5);
    assert_eq!(all["all_hold"], Value::Bool(true));
}

#[test]
fn spectrum_reports_betti_number() {
    let report = stdout_json(&sqwalk(&["spectrum", "--dim", "0"]));
    assert_eq!(report["betti"], 1);
    assert_eq!(report["eigenvalues"].as_array().unwrap().len(), 34);
    let path = scratch("hollow.txt", "1 2\n1 3\n2 3\n");
    let hollow = stdout_json(&sqwalk(&[
        "spectrum",
        path.to_str().unwrap(),
        "--max-dim",
        "1",
        "--dim",
        "1",
    ]));
    assert_eq!(hollow["betti"], 1);
}

#[test]
fn walk_table_on_path() {
    let path = scratch("path.txt", "1 2\n2 3\n");
    let report = stdout_json(&sqwalk(&[
        "walk",
        path.to_str().unwrap(),
        "--dim",
        "1",
        "--source",
        "1,2",
        "--time-steps",
        "3",
    ]));
    let table = report["table"].as_array().unwrap();
    assert_eq!(table[1]["target"], serde_json::json!([2, 3]));
    assert_eq!(table[1]["q"].as_f64().unwrap(), 0.666666666667);
    let spectral = stdout_json(&sqwalk(&[
        "walk",
        path.to_str().unwrap(),
        "--dim",
        "1",
        "--source",
        "2,1",
        "--method",
        "spectral",
    ]));
    assert_eq!(spectral["table"][1]["q"].as_f64().unwrap(), 0.5);
}

#[test]
fn detect_is_byte_identical_across_runs_and_thread_counts() {
    let a = sqwalk(&["detect", "--dim", "2"]);
    let b = sqwalk(&["detect", "--dim", "2", "--threads", "1"]);
    let c = sqwalk(&["detect", "--dim", "2", "--threads", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let report = stdout_json(&a);
    assert_eq!(report["communities"].as_array().unwrap().len(), 4);
    assert!((report["modularity"].as_f64().unwrap() - 0.515).abs() < 0.001);
}

#[test]
fn detect_threshold_modes() {
    let path = scratch("path3.txt", "1 2\n2 3\n");
    let p = path.to_str().unwrap();
    let strict = stdout_json(&sqwalk(&["detect", p, "--dim", "1"]));
    assert_eq!(
        strict["communities"],
        serde_json::json!([[[1, 2]], [[2, 3]]])
    );
    let geq = stdout_json(&sqwalk(&["detect", p, "--dim", "1", "--threshold", "geq"]));
    assert_eq!(geq["communities"], serde_json::json!([[[1, 2], [2, 3]]]));
    assert_eq!(geq["threshold"], "at_least");
}

#[test]
fn detect_formats() {
    let csv =
        String::from_utf8(sqwalk(&["detect", "--dim", "2", "--format", "csv"]).stdout).unwrap();
    assert!(csv.starts_with("community,simplex\n0,\"1,2,3\"\n"));
    assert_eq!(csv.lines().count(), 46);

    let dot1 =
        String::from_utf8(sqwalk(&["detect", "--dim", "1", "--format", "dot"]).stdout).unwrap();
    assert!(dot1.starts_with("graph communities {"));
    assert_eq!(dot1.matches(" -- ").count(), 78);
    assert_eq!(dot1.matches("community=").count(), 78);

    let dot2 =
        String::from_utf8(sqwalk(&["detect", "--dim", "2", "--format", "dot"]).stdout).unwrap();
    assert!(dot2.contains("// community 3 [") && dot2.contains("(25,26,32)"));
}

#[test]
fn modularity_round_trip_through_detect_output() {
    let detect = sqwalk(&["detect", "--dim", "2"]);
    let path = scratch(
        "partition.json",
        std::str::from_utf8(&detect.stdout).unwrap(),
    );
    let report = stdout_json(&sqwalk(&[
        "modularity",
        "--partition",
        path.to_str().unwrap(),
    ]));
    assert_eq!(report["dim"], 2);
    assert_eq!(report["m_n"], 302);
    let detected: Value = serde_json::from_slice(&detect.stdout).unwrap();
    assert_eq!(report["q"], detected["modularity"]);

    let bare = scratch("bare.json", "[[[1,2,3,4,8],[1,2,3,4,14]]]");
    let q4 = stdout_json(&sqwalk(&[
        "modularity",
        "--partition",
        bare.to_str().unwrap(),
    ]));
    assert_eq!(q4["q"].as_f64().unwrap(), 0.0);
}

#[test]
fn validation_errors_exit_with_one() {
    for args in [
        vec!["detect", "--dim", "0"],
        vec!["detect", "--dim", "7"],
        vec!["detect", "--dim", "1", "--time-steps", "0"],
        vec!["walk", "--dim", "1", "--source", "1,x"],
        vec!["walk", "--dim", "1", "--source", "1,2,3"],
        vec!["walk", "--dim", "1", "--source", "5,6"],
        vec!["build", "--max-dim", "0"],
        vec!["build", "--format", "dot"],
        vec!["detect", "--dim", "1", "--method", "exact"],
        vec!["nonsense"],
    ] {
        let out = sqwalk(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let bad = scratch("bad.txt", "1 2\n3\n");
    assert_eq!(
        sqwalk(&["build", bad.to_str().unwrap()]).status.code(),
        Some(1)
    );
    let loop_edge = scratch("loop.txt", "1 1\n");
    assert_eq!(
        sqwalk(&["build", loop_edge.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    let partial = scratch("partial.json", "{\"dim\":1,\"communities\":[[[1,2]]]}");
    assert_eq!(
        sqwalk(&["modularity", "--partition", partial.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    let garbage = scratch("garbage.json", "not json");
    assert_eq!(
        sqwalk(&["modularity", "--partition", garbage.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn io_errors_exit_with_two() {
    assert_eq!(
        sqwalk(&["build", "/nonexistent/edges.txt"]).status.code(),
        Some(2)
    );
    assert_eq!(
        sqwalk(&["modularity", "--partition", "/nonexistent/p.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sqwalk(&["build", "-o", "/nonexistent/dir/out.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn help_and_version_exit_cleanly() {
    assert_eq!(sqwalk(&["--help"]).status.code(), Some(0));
    assert_eq!(sqwalk(&["--version"]).status.code(), Some(0));
}

#[test]
fn output_file() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("counts.json");
    let out = sqwalk(&["build", "-o", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(written["counts"][1], 78);
}
