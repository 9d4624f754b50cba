use std::process::{Command, Output};

fn rkistab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rkistab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = rkistab(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn parse_errors_exit_with_two_and_point_at_the_column() {
    let out = rkistab(&["amp", "em:7"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("column 4"), "{err}");
    assert!(err.contains("     ^"), "{err}");
    assert_eq!(rkistab(&["tables", "nope"]).status.code(), Some(2));
    assert_eq!(
        rkistab(&["experiment", "d2", "--method", "ssp2:4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn poly_json_carries_exact_coefficients() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["poly", "ee:3", "--json"])).unwrap();
    assert_eq!(v["P"], serde_json::json!(["1", "1", "1/2", "1/6"]));
    assert_eq!(v["Q"].as_array().unwrap().len(), 4);
}

#[test]
fn ssp3_table_rounds_up_to_three_decimals() {
    let text = stdout(&["amp", "--table", "ssp3", "--n-max", "10"]);
    let col: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    assert_eq!(
        col,
        ["1.575", "1.794", "1.956", "2.091", "2.209", "2.314", "2.411", "2.501", "2.585"]
    );
}

#[test]
fn euler_zero_table_is_exact() {
    let text = stdout(&["tables", "ee-zero"]);
    assert!(text.starts_with("# ee-zero:"));
    assert!(text.contains("\n5,128/3,"));
    assert!(text.contains("\n8,5832/5,"));
}

#[test]
fn outputs_are_byte_stable() {
    for args in [
        &[
            "experiment",
            "d2",
            "--method",
            "ee:6",
            "--tols",
            "1e-4..1e-6",
            "--seed",
            "3",
        ][..],
        &["region", "taylor:4", "--resolution", "128"][..],
        &["amp", "ssp2:5", "--json", "--check-bounds"][..],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn half_plane_region_keeps_left_points() {
    let text = stdout(&["region", "taylor:4", "--half-plane", "--resolution", "128"]);
    for line in text.lines().skip(1) {
        let re: f64 = line.split(',').next().unwrap().parse().unwrap();
        assert!(re <= 0.0);
    }
}

#[test]
fn out_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("rkistab-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    stdout(&[
        "method",
        "classic:rk4",
        "--json",
        "--out",
        path.to_str().unwrap(),
    ]);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["id"], "classic:rk4");
    std::fs::remove_dir_all(dir).unwrap();
}
