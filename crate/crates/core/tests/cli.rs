use std::path::PathBuf;

use qmf::cli::{canonical_json, run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn out_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("qmf-cli-{}-{name}", std::process::id()))
}

fn run_to(name: &str, args: &[&str]) -> (i32, String) {
    let path = out_path(name);
    let mut argv = vec!["qmf", "--output", path.to_str().unwrap()];
    argv.extend_from_slice(args);
    let code = run(argv);
    let body = std::fs::read_to_string(&path).unwrap_or_default();
    let _ = std::fs::remove_file(&path);
    (code, body)
}

#[test]
fn expand_golden() {
    let (code, body) = run_to("expand", &["expand", "Y4_2", "--order", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(body, "q + 2q^2 + 12q^3 + 4q^4 + 30q^5\n");
    let (_, body) = run_to("expand-shift", &["expand", "P1shift", "--order", "3"]);
    assert_eq!(body, "q + 2q^2 + 12q^3\n");
    let (_, body) = run_to("expand-frac", &["expand", "H2", "--order", "3"]);
    assert_eq!(body, "16q^{1/2} + 64q^{3/2} + 96q^{5/2}\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run_to("bad-label", &["expand", "Q"]).0, EXIT_USAGE);
    assert_eq!(run_to("bad-t", &["eval", "E4", "--t", "-1"]).0, EXIT_USAGE);
    assert_eq!(run_to("bad-id", &["identity", "NOPE"]).0, EXIT_USAGE);
    assert_eq!(run(["qmf", "frobnicate"]), EXIT_USAGE);
    let (code, body) = run_to("json-err", &["--format", "json", "limits", "E4"]);
    assert_eq!(code, EXIT_USAGE);
    let v: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["error"]["kind"], "InvalidInput");
}

#[test]
fn failed_checks_exit_one() {
    assert_eq!(run_to("pos", &["positivity", "P1", "--order", "10"]).0, EXIT_FAILED);
    assert_eq!(run_to("pos-ok", &["positivity", "Y4_2", "--order", "200"]).0, EXIT_OK);
}

#[test]
fn identity_json_round_trips() {
    let (code, body) = run_to("ids", &["--format", "json", "identity", "--all", "--order", "30"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(canonical_json(&v), body);
    assert!(v["results"].as_array().unwrap().len() >= 35);
    assert!(v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn scan_json() {
    let (code, body) = run_to("scan", &["--format", "json", "scan", "X12_1", "--m", "11"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["verdict"], "monotone_decreasing_on_grid");
    assert_eq!(v["grid"].as_array().unwrap().len(), 60);
    assert_eq!(canonical_json(&v), body);
}

#[test]
fn certificates_emit_and_recheck() {
    let path = out_path("certs.json");
    let code = run(["qmf", "--output", "/dev/null", "lambert-certify", "--all", "--emit", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let _ = std::fs::remove_file(&path);
    for (name, cert) in v.as_object().unwrap() {
        let c: qmf::lambert::CertificateJson = serde_json::from_value(cert.clone()).unwrap();
        assert!(qmf::lambert::recheck(&c).unwrap(), "{name}");
    }
    assert_eq!(v["X101"]["taylor"]["n_star"], 65);
}

#[test]
fn plotdata_headers() {
    let (code, body) = run_to("plot", &["plotdata", "--points", "4"]);
    assert_eq!(code, EXIT_OK);
    for name in ["lambert_g8_g9", "x81", "x101", "x121"] {
        assert!(body.contains(&format!("# {name}\n")), "{name}");
    }
}

#[test]
fn env_order_is_a_default() {
    let bin = env!("CARGO_BIN_EXE_qmf");
    let out = |args: &[&str]| {
        let o = std::process::Command::new(bin).args(args).env("QMF_ORDER", "3").output().unwrap();
        (o.status.code(), String::from_utf8(o.stdout).unwrap())
    };
    assert_eq!(out(&["expand", "X4_2"]), (Some(0), "q + 6q^2 + 12q^3\n".to_string()));
    assert_eq!(out(&["expand", "X4_2", "--order", "2"]), (Some(0), "q + 6q^2\n".to_string()));
}
