use std::process::{Command, Output};

use noether_strata::render::{self, Document, OutputFormat};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_noether-strata"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn stratum_matches_table_row() {
    let o = run(&["stratum", "--d", "24", "--d0", "23", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "stratum");
    let r = &v["record"];
    assert_eq!(
        (
            r["h0_branch"].as_i64(),
            r["dim_aut"].as_i64(),
            r["delta"].as_i64()
        ),
        (Some(3061), Some(108), Some(2952))
    );
    assert_eq!(r["status"], "undetermined");
    assert_eq!(r["singularity"]["singularities"]["count"], 16);
}

#[test]
fn stratum_out_of_range() {
    let o = run(&["stratum", "--d", "10", "--d0", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("d <= 4*d0"));
}

#[test]
fn stratum_small_minimal_model() {
    let o = run(&["stratum", "--d", "5", "--d0", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["p_g"].as_i64(), v["k3"].as_i64()), (Some(13), Some(14)));
    assert_eq!(v["record"]["status"], "dense_in_component");
    assert_eq!(v["record"]["model"], "minimal_not_canonical");
}

#[test]
fn stratum_below_five_marks_status() {
    let o = run(&["stratum", "--d", "4", "--d0", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("n/a: d < 5"));
}

#[test]
fn moduli_commands() {
    let o = run(&["moduli", "--pg", "70", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "moduli");
    assert_eq!(v["strata"].as_array().unwrap().len(), 31);
    assert_eq!(
        (
            v["components_upper"].as_i64(),
            v["components_lower"].as_i64()
        ),
        (Some(19), Some(18))
    );
    assert_eq!(v["dimension"].as_i64(), Some(3736));

    let by_d = run(&["moduli", "--d", "24", "--format", "json"]);
    assert_eq!(stdout(&by_d), stdout(&o));

    let o = run(&["moduli", "--pg", "12", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["nonempty"], false);

    assert_eq!(run(&["moduli", "--pg", "9"]).status.code(), Some(2));
    assert_eq!(
        run(&["moduli", "--pg", "70", "--d", "24"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["moduli"]).status.code(), Some(2));
}

#[test]
fn profile_commands() {
    let o = run(&["profile", "--d", "24", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o)
        .lines()
        .any(|l| l.starts_with("23,3061,108,2952,")));

    let o = run(&["profile", "--d", "5", "--format", "csv"]);
    let deltas: Vec<i64> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
        .collect();
    assert_eq!(deltas, vec![749, 698, 655, 631, 633, 635]);

    assert_eq!(run(&["profile", "--d", "4"]).status.code(), Some(2));
}

#[test]
fn verify_commands() {
    let o = run(&["verify", "--from", "24", "--to", "24"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("0 failures"));
    assert!(out.contains("table_d24"));
    assert_eq!(
        run(&["verify", "--from", "60", "--to", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--from", "3", "--to", "5"]).status.code(),
        Some(2)
    );
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(
        run(&["profile", "--d", "24", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn json_round_trips_byte_for_byte() {
    let docs = [
        render::stratum_document(24, 23).unwrap(),
        render::stratum_document(4, 3).unwrap(),
        render::moduli_document(13).unwrap(),
        render::moduli_document(14).unwrap(),
        render::profile_document(24).unwrap(),
        render::verification_document(5, 8).unwrap(),
    ];
    for doc in docs {
        let text = render::render(&doc, OutputFormat::Json);
        let parsed: Document = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(render::render(&parsed, OutputFormat::Json), text);
    }
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&run(&[
        "verify", "--from", "5", "--to", "30", "--format", "json",
    ]));
    let b = stdout(&run(&[
        "verify", "--from", "5", "--to", "30", "--format", "json",
    ]));
    assert_eq!(a, b);
}
