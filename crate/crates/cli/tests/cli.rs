use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", &format!("{name}.json")].iter().collect();
    p.to_string_lossy().into_owned()
}

fn polymix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polymix")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = polymix(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn code(args: &[&str]) -> (i32, String) {
    let out = polymix(args);
    (out.status.code().unwrap(), String::from_utf8_lossy(&out.stderr).into_owned())
}

#[test]
fn volumes() {
    assert_eq!(report(&["volume", &fixture("square")])["volume"], "1");
    assert_eq!(report(&["volume", &fixture("simplex3")])["volume"], "1/6");
    let r = report(&["volume", &fixture("cube")]);
    assert_eq!((r["vertex_count"].as_u64(), r["facet_count"].as_u64()), (Some(8), Some(6)));
    let (c, err) = code(&["volume", &fixture("collinear")]);
    assert_eq!(c, 3);
    assert!(err.contains("DimensionError"), "{err}");
}

#[test]
fn mixed_volumes() {
    let r = report(&["mixedvol", &fixture("square"), &fixture("diamond"), "--method", "both"]);
    assert_eq!((&r["base_height"], &r["interp"], &r["agree"]), (&"2".into(), &"2".into(), &true.into()));
    let r = report(&["mixedvol", &fixture("square"), &fixture("square"), "--method", "interp"]);
    assert_eq!(r["interp"], "1");
    assert!(r.get("base_height").is_none());
    let r = report(&["mixedvol", &fixture("cube"), &fixture("seg_e1"), "--method", "interp"]);
    assert_eq!(r["interp"], "1/3");
    let r = report(&["mixedvol", &fixture("cube"), &fixture("seg_e1"), "--method", "base-height"]);
    assert_eq!(r["base_height"], "1/3");
    let (c, err) = code(&["mixedvol", &fixture("seg_e1"), &fixture("cube"), "--method", "base-height"]);
    assert_eq!(c, 3, "{err}");
    let (c, err) = code(&["mixedvol", &fixture("square"), &fixture("cube")]);
    assert_eq!(c, 3);
    assert!(err.starts_with("error: DimensionMismatch"), "{err}");
}

#[test]
fn checks() {
    let r = report(&["check", &fixture("square"), &fixture("rect_2x1"), "--form", "bm", "--lambda", "1/2"]);
    assert_eq!(r["verdict"], "Strict");
    let slack: f64 = r["slack"].as_str().unwrap().parse().unwrap();
    assert!((slack - 0.017638).abs() < 1e-6, "{slack}");
    assert_eq!(r["digits"], 50);
    assert_eq!(r["slack"].as_str().unwrap().split('.').nth(1).unwrap().len(), 50);

    let r = report(&["check", &fixture("square"), &fixture("square_x2_translated"), "--form", "mmv"]);
    assert_eq!(r["verdict"], "Equality");
    let r = report(&["check", &fixture("square"), &fixture("diamond"), "--form", "mmv1"]);
    assert_eq!((&r["verdict"], &r["quotient"]), (&"Strict".into(), &"2".into()));

    let r = report(&["--digits", "8", "check", &fixture("square"), &fixture("rect_2x1"), "--form", "bm", "--lambda", "1/2"]);
    assert_eq!(r["slack"], "0.01763809");

    assert_eq!(code(&["check", &fixture("square"), &fixture("diamond"), "--form", "bm"]).0, 2);
    assert_eq!(code(&["check", &fixture("square"), &fixture("diamond"), "--form", "bm", "--lambda", "x"]).0, 2);
    assert_eq!(code(&["check", &fixture("square"), &fixture("diamond"), "--form", "bm", "--lambda", "3/2"]).0, 3);
    assert_eq!(code(&["check", &fixture("square"), &fixture("collinear"), "--form", "mmv1"]).0, 3);
}

#[test]
fn diagnose_equality_and_refutation() {
    let r = report(&["diagnose", &fixture("square"), &fixture("square_x2_translated")]);
    assert_eq!(r["verdict"], "Equality");
    assert_eq!(r["witness"], serde_json::json!({ "a": "2", "x": ["3", "4"] }));

    let r = report(&["diagnose", &fixture("square"), &fixture("square")]);
    assert_eq!(r["witness"], serde_json::json!({ "a": "1", "x": ["0", "0"] }));

    let r = report(&["diagnose", &fixture("square"), &fixture("diamond_area2")]);
    assert_eq!(r["verdict"], "Strict");
    assert_eq!(r["conclusion"], "NotEqualityCase");
    let values = r["refutation"]["values"].as_array().unwrap();
    assert_ne!(values[0], values[1]);

    let r = report(&["diagnose", &fixture("square"), &fixture("rect_2xhalf"), "--lambda-grid", "0,1/2,1", "--seed", "5"]);
    assert_eq!(r["sweep"], "raw");
    assert_eq!(r["seed"], 5);
    assert!(r["refutation"].is_object());

    assert_eq!(code(&["diagnose", &fixture("square"), &fixture("diamond"), "--lambda-grid", "k/0"]).0, 2);
}

#[test]
fn random_bodies() {
    let args = ["random-body", "--dim", "2", "--vertices", "6", "--seed", "7"];
    let (a, b) = (polymix(&args), polymix(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let body: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(body["dim"], 2);

    let tet: Value =
        serde_json::from_slice(&polymix(&["random-body", "--dim", "3", "--vertices", "4", "--seed", "1"]).stdout).unwrap();
    assert_eq!(tet["vertices"].as_array().unwrap().len(), 4);

    assert_eq!(code(&["random-body", "--dim", "5", "--vertices", "6"]).0, 2);
    assert_eq!(code(&["random-body", "--dim", "3", "--vertices", "3"]).0, 2);
}

#[test]
fn random_body_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.json");
    let p = path.to_str().unwrap();
    let out = polymix(&["random-body", "--dim", "3", "--vertices", "9", "--seed", "11", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let body = polymix_cli::bodyfile::parse_body(&written, polymix_cli::bodyfile::Load::Strict).unwrap();
    assert_eq!(polymix_cli::bodyfile::serialize_body(&body), written);
}

#[test]
fn parse_errors_exit_two() {
    assert_eq!(code(&["volume", &fixture("malformed")]).0, 2);
    assert_eq!(code(&["volume", &fixture("float_coords")]).0, 2);
    assert_eq!(code(&["volume", "/nonexistent/body.json"]).0, 2);
    assert_eq!(code(&["frobnicate"]).0, 2);
    assert_eq!(code(&["project", &fixture("cube")]).0, 2);
    assert_eq!(polymix(&["--help"]).status.code(), Some(0));
}

#[test]
fn projections() {
    let r = report(&["project", &fixture("cube"), "--direction", "1,1,1"]);
    assert_eq!((&r["squared_volume"], &r["degenerate"]), (&"3".into(), &false.into()));
    let r = report(&["project", &fixture("cube"), "--basis", "1,0,0;0,1,0"]);
    assert_eq!(r["squared_volume"], "1");
    let r = report(&["project", &fixture("seg_e1"), "--direction", "1,0,0"]);
    assert_eq!(r["degenerate"], true);
    let (c, err) = code(&["project", &fixture("cube"), "--direction", "0,0,0"]);
    assert_eq!(c, 3);
    assert!(err.contains("ZeroDirectionError"), "{err}");
    assert_eq!(code(&["project", &fixture("cube"), "--basis", "1,0,0;2,0,0"]).0, 3);
}

#[test]
fn steiner_symmetrals() {
    let r = report(&["steiner", &fixture("triangle"), "--direction", "1,2"]);
    assert_eq!((&r["volume_before"], &r["volume_after"]), (&"3".into(), &"3".into()));
    assert_eq!(r["exactness"], "Exact2D");
    let r = report(&["steiner", &fixture("cube"), "--direction", "1,2,3"]);
    assert_eq!((&r["volume_after"], &r["exactness"]), (&"1".into(), &"Overlay3D".into()));
    let r = report(&["steiner", &fixture("triangle"), "--steps", "4", "--schedule", "1,0;0,1"]);
    let trace = r["trace"].as_array().unwrap();
    assert_eq!(trace.len(), 4);
    assert!(trace.iter().all(|s| s["volume"] == "3"));
    assert_eq!(code(&["steiner", &fixture("cube"), "--steps", "2"]).0, 3);
    assert_eq!(code(&["steiner", &fixture("triangle")]).0, 2);
}

#[test]
fn reconstruction() {
    let r = report(&["reconstruct", &fixture("triangle")]);
    assert_eq!(r["all_agree"], true);
    assert_eq!(r["supports"].as_array().unwrap().len(), 64);
    let r = report(&["reconstruct", &fixture("square"), "--other", &fixture("square_translated")]);
    assert_eq!(r["translates"], true);
    assert_eq!(r["translate_by"], serde_json::json!(["5/2", "-1"]));
    let r = report(&["reconstruct", &fixture("square"), "--other", &fixture("rect_2x1")]);
    assert_eq!(r["translates"], false);
    assert!(r["witness"].is_array());
    assert_eq!(code(&["reconstruct", &fixture("cube")]).0, 3);
}

#[test]
fn homothety_reports() {
    let r = report(&["homothety", &fixture("cube"), &fixture("cube_x3_translated"), "--projections"]);
    assert_eq!(r["witness"], serde_json::json!({ "a": "3", "x": ["1", "1", "1"] }));
    assert_eq!(r["projections"]["conclusion"], "Homothetic");
    assert_eq!(r["projections"]["witness"], r["witness"]);
    let r = report(&["homothety", &fixture("square"), &fixture("rect_2x1")]);
    assert_eq!((&r["homothetic"], &r["reason"]), (&false.into(), &"VolumeRatioNotRationalPower".into()));
    let r = report(&["homothety", &fixture("cube"), &fixture("simplex3"), "--projections"]);
    assert_eq!(r["projections"]["conclusion"], "NotHomothetic");
    assert_eq!(code(&["homothety", &fixture("square"), &fixture("rect_2x1"), "--projections"]).0, 3);
}

#[test]
fn reports_are_deterministic_and_digest_inputs() {
    let args = ["diagnose", &fixture("square"), &fixture("diamond_area2"), "--seed", "3"];
    let (a, b) = (polymix(&args), polymix(&args));
    assert_eq!(a.stdout, b.stdout);
    let r: Value = serde_json::from_slice(&a.stdout).unwrap();
    let bytes = std::fs::read(fixture("square")).unwrap();
    assert_eq!(r["inputs"][0]["sha256"], polymix_cli::bodyfile::sha256_hex(&bytes));
    assert_eq!(r["command"], "diagnose");
}
