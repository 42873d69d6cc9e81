use std::path::Path;
use std::process::{Command, Output};

fn snarklab(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snarklab"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn petersen_jsonmg() -> String {
    let g = snarklab_core::families::petersen();
    snarklab_core::graph::serialize_graph(&g, snarklab_core::graph::GraphFormat::Jsonmg).unwrap()
}

#[test]
fn exit_codes_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("pg.jsonmg");
    std::fs::write(&input, petersen_jsonmg() + "\n").unwrap();

    // success path, both analysis verbs
    let out = snarklab(&["defect", "pg.jsonmg", "--format", "jsonmg"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let line: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(line["defect"], 3);
    assert_eq!(line["hexagonal"], true);

    let out = snarklab(&["pmi", "pg.jsonmg", "--format", "jsonmg"], dir.path());
    assert!(out.status.success());
    let line: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(line["pmi"], 5);

    // graph6 input of the same graph
    let g6 = {
        let g = snarklab_core::families::petersen();
        snarklab_core::graph::serialize_graph(&g, snarklab_core::graph::GraphFormat::Graph6)
            .unwrap()
    };
    std::fs::write(dir.path().join("pg.g6"), g6 + "\n").unwrap();
    let out = snarklab(&["parse", "pg.g6"], dir.path());
    assert!(out.status.success());
    let line: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(line["n"], 10);
    assert_eq!(line["m"], 15);

    // usage error: unknown verb
    let out = snarklab(&["frobnicate"], dir.path());
    assert_eq!(out.status.code(), Some(1));

    // IO error: missing file
    let out = snarklab(&["defect", "missing.g6"], dir.path());
    assert_eq!(out.status.code(), Some(1));

    // verification failure: Petersen has no 4-cover
    let out = snarklab(
        &["scc-build", "pg.jsonmg", "--format", "jsonmg", "--strategy", "4cover"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_verify_cert_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = snarklab(
        &["generate", "--ops", "1", "--seed", "3", "--out", "certs", "--format", "jsonmg"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let cert_path = dir.path().join("certs/generated-3.json");
    assert!(cert_path.exists());

    let out = snarklab(&["verify-cert", "certs/generated-3.json"], dir.path());
    assert!(out.status.success());

    // tampering breaks verification with exit code 2
    let text = std::fs::read_to_string(&cert_path).unwrap();
    let mut cert: serde_json::Value = serde_json::from_str(&text).unwrap();
    let matchings = cert["analyses"]["defect"]["witness"]["matchings"]
        .as_array_mut()
        .unwrap();
    matchings[0].as_array_mut().unwrap().pop();
    std::fs::write(dir.path().join("certs/bad.json"), cert.to_string()).unwrap();
    let out = snarklab(&["verify-cert", "certs/bad.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn batch_isolates_failures_and_ignores_job_count() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = snarklab_core::graph::serialize_graph(
        &snarklab_core::families::k4(),
        snarklab_core::graph::GraphFormat::Jsonmg,
    )
    .unwrap();
    let corpus = format!("{}\nnot json\n{}\n", petersen_jsonmg(), k4);
    std::fs::write(dir.path().join("corpus.txt"), corpus).unwrap();

    let run = |jobs: &str| -> serde_json::Value {
        let out = snarklab(
            &["batch", "corpus.txt", "--format", "jsonmg", "--tasks", "all", "--jobs", jobs],
            dir.path(),
        );
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        serde_json::from_slice(&out.stdout).unwrap()
    };
    let one = run("1");
    let four = run("4");
    assert_eq!(one, four, "summary must not depend on the worker count");
    assert_eq!(one["total"], 3);
    assert_eq!(one["failures"].as_array().unwrap().len(), 1);
    assert_eq!(one["defect"]["3"], 1);
    assert_eq!(one["defect"]["0"], 1);
    assert_eq!(one["pmi"]["5"], 1);
    assert_eq!(one["pmi"]["3"], 1);

    // an unreachable timeout leaves results intact; a zero-second budget
    // records "unknown" rather than a failure
    let out = snarklab(
        &[
            "batch", "corpus.txt", "--format", "jsonmg", "--tasks", "pmi", "--timeout", "0",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let summary: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // timeouts become "unknown" buckets, never failures; buckets still
    // account for both parseable graphs
    let pmi_total: u64 = summary["pmi"]
        .as_object()
        .unwrap()
        .values()
        .map(|v| v.as_u64().unwrap())
        .sum();
    assert_eq!(pmi_total, 2);
    assert!(summary["pmi"]["unknown"].as_u64().unwrap_or(0) >= 1);
    assert_eq!(summary["failures"].as_array().unwrap().len(), 1);
}
