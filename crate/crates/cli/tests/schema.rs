use std::process::Command;

use serde_json::Value;

fn report(args: &[&str]) -> Value {
    let out = Command::new(env!("CARGO_BIN_EXE_dimforce"))
        .arg("compute")
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn reports_match_the_published_schema() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report-schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let runs: [&[&str]; 6] = [
        &["--family", "path:5"],
        &[
            "--family",
            "spider:1,2,3",
            "--method",
            "both",
            "--even-cycle-rank",
        ],
        &["--family", "cycle:6", "--path-cover", "--no-timing"],
        &["--family", "c4_bouquet:2", "--method", "formula"],
        &["--family", "complete:5", "--no-timing"],
        &["--family", "grid:3,3", "--path-cover"],
    ];
    for args in runs {
        let v = report(args);
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
    let mut broken = report(&["--family", "path:3"]);
    broken["class"] = "forest".into();
    assert!(!validator.is_valid(&broken));
}
