use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polylandau"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

fn validator() -> jsonschema::Validator {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/schema/output.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn assert_valid(v: &Value) {
    let errors: Vec<String> = validator().iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{v}\n{errors:#?}");
}

#[test]
fn radius_f3_tail_free() {
    let o = run(&["radius", "--class", "f3", "--lambda0", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_valid(&v);
    assert_eq!(num(&v["r"]), 0.5);
    assert!((num(&v["R"]) - 0.273_907_6).abs() < 1e-7);
    assert_eq!(v["whole_disc"], Value::Bool(false));
}

#[test]
fn radius_with_tail_and_csv() {
    let o = run(&[
        "radius",
        "--class",
        "f3",
        "--lambda0",
        "2",
        "--lambdas",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "class,lambda0,lambda_1,r,R,residual,iterations,whole_disc"
    );
    let cells: Vec<&str> = lines.next().unwrap().split(',').collect();
    let r: f64 = cells[3].parse().unwrap();
    assert!((r - (2.0 - 3f64.sqrt())).abs() < 1e-10);
    assert!(lines.next().is_none());
}

#[test]
fn radius_reference_classes() {
    let v = json(&run(&["radius", "--class", "e", "--lambda", "1"]));
    assert_valid(&v);
    assert_eq!((num(&v["rho"]), num(&v["sigma"])), (0.5, 0.25));

    let v = json(&run(&[
        "radius",
        "--class",
        "d",
        "--lambda1",
        "1",
        "--lambda2",
        "2",
    ]));
    assert_valid(&v);
    assert!((num(&v["rho"]) - (2.0 - 3f64.sqrt())).abs() < 1e-15);

    let v = json(&run(&[
        "radius", "--class", "c", "--order", "2", "--M", "2",
    ]));
    assert_valid(&v);
    assert!((num(&v["rho"]) - (1.0 - 0.8f64.sqrt())).abs() < 1e-11);
}

#[test]
fn parameter_errors_exit_2() {
    for args in [
        &["radius", "--class", "f1", "--lambda", "1"][..],
        &["radius", "--class", "f3"],
        &["radius", "--class", "f3", "--lambda0", "2", "--lambda", "3"],
        &["radius", "--class", "f2", "--M", "0.5"],
        &[
            "radius",
            "--class",
            "f3",
            "--lambda0",
            "2",
            "--lambdas",
            "1,-1",
        ],
        &["radius", "--class", "f3", "--lambda0", "2", "--tol", "0"],
        &["radius", "--class", "g"],
        &["verify", "--rho-frac", "1.1"],
        &["verify", "--rho-frac", "0"],
        &["verify", "--class", "e", "--lambda", "1"],
        &[
            "verify",
            "--class",
            "f1",
            "--lambda",
            "2",
            "--check",
            "collision",
        ],
        &["verify", "--pairs", "0"],
        &["sweep", "--class", "f3", "--lambda0", "0.5,2"],
        &[
            "sweep",
            "--class",
            "f3",
            "--lambda0",
            "2",
            "--tail",
            "1:2:0",
        ],
        &["sweep", "--class", "f3"],
        &["sweep", "--class", "e", "--lambda", "1", "--tail", "1"],
        &["sweep", "--class", "c", "--order", "2.5", "--M", "2"],
        &["constants", "--M", "0.5"],
        &[
            "plot-data",
            "--class",
            "f3",
            "--lambda0",
            "2",
            "--boundary-points",
            "4",
        ],
        &[
            "plot-data",
            "--class",
            "d",
            "--lambda1",
            "1",
            "--lambda2",
            "2",
        ],
        &["nonsense"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(!err.trim().is_empty(), "{args:?}");
    }
}

#[test]
fn verify_default_battery_passes() {
    let o = run(&["verify", "--pairs", "20000"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let text = stdout(&o);
    let names: Vec<String> = text
        .lines()
        .map(|l| {
            let v: Value = serde_json::from_str(l).unwrap();
            assert_valid(&v);
            assert_eq!(v["passed"], Value::Bool(true));
            v["check_name"].as_str().unwrap().to_string()
        })
        .collect();
    assert_eq!(
        names,
        [
            "membership",
            "colipschitz",
            "lipschitz",
            "schlicht",
            "collision"
        ]
    );
}

#[test]
fn verify_collision_only() {
    let o = run(&["verify", "--check", "collision", "--r-offset", "0.05"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_valid(&v);
    let w = &v["witness"];
    let x1 = num(&w["z1"][0]);
    let x2 = num(&w["z2"][0]);
    assert!((x1 - x2).abs() >= 1e-3);
    assert!(num(&w["values"][0]) <= 1e-9);
}

#[test]
fn verify_other_classes_and_csv() {
    for args in [
        &[
            "verify",
            "--class",
            "f1",
            "--lambda",
            "2",
            "--m-bounds",
            "0.3",
            "--pairs",
            "5000",
        ][..],
        &[
            "verify",
            "--class",
            "f2",
            "--M",
            "2",
            "--lambdas",
            "0.5",
            "--pairs",
            "5000",
        ],
        &["verify", "--class", "f2", "--M", "1", "--pairs", "5000"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
    let o = run(&["verify", "--pairs", "1000", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("check_name,passed,worst_margin,slack,samples_used,"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn sweep_f3_grid() {
    let o = run(&[
        "sweep",
        "--class",
        "f3",
        "--lambda0",
        "5,1.5,2",
        "--tail",
        "0,0.5,1,2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(
        header,
        [
            "class",
            "lambda0",
            "lambda_1",
            "r",
            "R",
            "rho",
            "l",
            "L",
            "whole_disc",
            "d_rho",
            "d_sigma"
        ]
    );
    let rows: Vec<Vec<f64>> = lines
        .map(|l| {
            l.split(',')
                .skip(1)
                .filter_map(|c| c.parse().ok())
                .collect()
        })
        .collect();
    assert_eq!(rows.len(), 12);
    let mut keys: Vec<(f64, f64)> = rows.iter().map(|r| (r[0], r[1])).collect();
    let sorted = {
        let mut k = keys.clone();
        k.sort_by(|a, b| a.partial_cmp(b).unwrap());
        k
    };
    assert_eq!(keys, sorted);
    keys.dedup();
    assert_eq!(keys.len(), 12);
    for r in &rows {
        let (l0, l1, rr, big_r, rho) = (r[0], r[1], r[2], r[3], r[4]);
        if l1 == 0.0 {
            assert!((rr - 1.0 / l0).abs() < 1e-10);
        }
        assert!((rho - 0.9 * rr).abs() < 1e-15);
        // l, L sandwich
        assert!(r[5] <= r[6]);
        // d_rho, d_sigma columns (whole_disc is not numeric and is skipped)
        assert!((rr - r[7]).abs() < 1e-10);
        assert!((big_r - r[8]).abs() < 1e-10);
    }
}

#[test]
fn sweep_reference_e_branch() {
    let o = run(&[
        "sweep",
        "--class",
        "e",
        "--lambda",
        "0,0.25,0.5,1,2",
        "--format",
        "json",
    ]);
    let v = json(&o);
    assert_valid(&v);
    let rho: Vec<f64> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| num(&r["rho"]))
        .collect();
    assert_eq!(rho, [1.0, 1.0, 1.0, 0.5, 0.25]);
}

#[test]
fn sweep_json_rows_validate() {
    for args in [
        &[
            "sweep", "--class", "f1", "--lambda", "1.5:3:4", "--tail", "0,1", "--format", "json",
        ][..],
        &[
            "sweep", "--class", "f2", "--M", "1,2", "--tail", "0,0.5", "--tail", "1", "--format",
            "json",
        ],
        &[
            "sweep",
            "--class",
            "d",
            "--lambda1",
            "0,1",
            "--lambda2",
            "2",
            "--format",
            "json",
        ],
        &[
            "sweep", "--class", "c", "--order", "2,3", "--M", "2", "--format", "json",
        ],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_valid(&json(&o));
    }
}

#[test]
fn constants_defaults_and_m2() {
    let v = json(&run(&["constants"]));
    assert_valid(&v);
    assert_eq!((num(&v["r0"]), num(&v["sigma0"])), (1.0, 1.0));
    assert!((num(&v["m_const"]) - 6.85).abs() < 0.01);
    let v = json(&run(&["constants", "--M", "2"]));
    assert!((num(&v["r0"]) - 0.267_949_2).abs() < 1e-7);
    let csv = stdout(&run(&["constants", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 2);
}

#[test]
fn plot_data_contract() {
    let o = run(&[
        "plot-data",
        "--class",
        "f3",
        "--lambda0",
        "2",
        "--lambdas",
        "1",
        "--boundary-points",
        "720",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 721);
    assert_eq!(lines[0], "theta,re,im,abs,R");
    let rows: Vec<Vec<f64>> = lines[1..]
        .iter()
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows[0][0], 0.0);
    assert_eq!(rows[0][2], 0.0);
    let min = rows.iter().map(|r| r[3]).fold(f64::INFINITY, f64::min);
    assert!((min - rows[0][4]).abs() < 1e-6);

    let v = json(&run(&[
        "plot-data",
        "--lambda0",
        "2",
        "--boundary-points",
        "16",
        "--format",
        "json",
    ]));
    assert_valid(&v);
    assert_eq!(v["rows"].as_array().unwrap().len(), 16);
}

#[test]
fn outputs_are_byte_identical() {
    for args in [
        &["verify", "--pairs", "5000", "--seed", "7"][..],
        &[
            "sweep",
            "--class",
            "f3",
            "--lambda0",
            "1.5,2",
            "--tail",
            "0,1",
        ],
        &["plot-data", "--lambda0", "2", "--lambdas", "1"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
    assert_ne!(
        run(&["verify", "--pairs", "500", "--seed", "1"]).stdout,
        run(&["verify", "--pairs", "500", "--seed", "2"]).stdout
    );
}

#[test]
fn numbers_carry_seventeen_significant_digits() {
    let text = stdout(&run(&[
        "radius",
        "--class",
        "f3",
        "--lambda0",
        "2",
        "--lambdas",
        "1",
    ]));
    let v: Value = serde_json::from_str(&text).unwrap();
    let raw = text
        .split("\"R\":")
        .nth(1)
        .unwrap()
        .split(',')
        .next()
        .unwrap();
    let mantissa = raw
        .split(['e', 'E'])
        .next()
        .unwrap()
        .replace(['.', '-'], "");
    assert_eq!(mantissa.len(), 17, "{raw}");
    assert_eq!(raw.parse::<f64>().unwrap(), num(&v["R"]));
}

#[test]
fn schema_rejects_malformed_documents() {
    let v = validator();
    for bad in [
        serde_json::json!({ "class": "f3", "r": 0.5 }),
        serde_json::json!({ "class": "f3", "lambda0": 2.0, "r": 0.5, "R": 0.2, "residual": 0.0,
                            "iterations": 1, "whole_disc": false, "extra": 1 }),
        serde_json::json!({ "check_name": "membership", "passed": "yes", "worst_margin": 0.0,
                            "slack": 0.0, "witness": null, "samples_used": 1 }),
        serde_json::json!({ "class": "q", "rows": [] }),
    ] {
        assert!(!v.is_valid(&bad), "{bad}");
    }
}
