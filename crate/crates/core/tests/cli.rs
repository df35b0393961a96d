use std::f64::consts::PI;
use std::process::{Command, Output};

use serde_json::Value;

fn bulge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bulge"))
        .args(args)
        .env_remove("BULGE_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

#[test]
fn build_right_isosceles_report() {
    let out = bulge(&["build", "--right", "1", "1", "--json", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "bulge-report/1");
    let ab = &v["arcs"]["ab"];
    assert_eq!(num(&ab["center"][0]), 1.0);
    assert_eq!(num(&ab["center"][1]), 0.0);
    assert_eq!(num(&ab["radius"]), 1.0);
    assert_eq!(v["metrics"]["convexity"], "convex");
    assert!(num(&v["theorems"]["circumdisk_gap"]).abs() < 1e-12);
    assert!(v["seed"].is_null());
}

#[test]
fn measure_equilateral_text() {
    let out = bulge(&["measure", "--sides", "1", "1", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let field = |name: &str| -> f64 {
        text.lines()
            .find_map(|l| l.strip_prefix(name))
            .unwrap()
            .trim()
            .parse()
            .unwrap()
    };
    for name in ["len_ab", "len_bc", "len_ca"] {
        assert!((field(name) - PI / 3.0).abs() < 1e-12);
    }
    assert!((field("area") - 0.704770923010458).abs() < 1e-12);
}

#[test]
fn sweep_rows_and_signs() {
    let out = bulge(&["sweep", "--leg-a", "1", "--b-from", "1", "--b-to", "5", "--steps", "401", "--csv", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    assert_eq!(reader.headers().unwrap(), vec!["b", "t", "theta0", "gap"]);
    let rows: Vec<Vec<f64>> = reader
        .records()
        .map(|r| r.unwrap().iter().map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 401);
    assert_eq!(rows[0][3], 0.0);
    assert!(rows[1..].iter().all(|r| r[3] < 0.0 && r[1] > r[2]));
    assert_eq!(rows[400][0], 5.0);
}

#[test]
fn exit_codes() {
    assert_eq!(bulge(&["measure", "--sides", "1", "1", "5"]).status.code(), Some(2));
    assert_eq!(bulge(&["measure", "--sides", "1", "1"]).status.code(), Some(2));
    assert_eq!(bulge(&["frobnicate"]).status.code(), Some(2));
    let obtuse = ["0", "0", "1", "0", "1.8", "0.3"];
    let mut args = vec!["measure", "--area", "--vertices"];
    args.extend(obtuse);
    assert_eq!(bulge(&args).status.code(), Some(2));
    let mut args = vec!["build", "--json", "-", "--vertices"];
    args.extend(obtuse);
    let out = bulge(&args);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["metrics"]["convexity"], "concave");
    assert!(json(&out)["metrics"]["area"].is_null());
    let out = bulge(&["measure", "--sides", "1", "1", "5"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn verify_random_is_clean() {
    let out = bulge(&["verify", "--random", "500", "--seed", "4", "--json", "-"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    let start = text.find('{').unwrap();
    let v: Value = serde_json::from_str(&text[start..]).unwrap();
    assert_eq!(v["instances"], 500);
    assert!(v["claims"].as_array().unwrap().iter().all(|c| c["violations"] == 0));
}

#[test]
fn seed_comes_from_environment() {
    let run = |env: Option<&str>, args: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_bulge"));
        cmd.args(args);
        match env {
            Some(s) => cmd.env("BULGE_SEED", s),
            None => cmd.env_remove("BULGE_SEED"),
        };
        cmd.output().unwrap().stdout
    };
    let from_env = run(Some("77"), &["verify", "--random", "50"]);
    let from_flag = run(None, &["verify", "--random", "50", "--seed", "77"]);
    assert_eq!(from_env, from_flag);
    assert!(String::from_utf8(from_env).unwrap().contains("seed 77"));
}

#[test]
fn json_round_trip_through_vertices() {
    let first = bulge(&["build", "--sides", "3", "4", "4.5", "--json", "-"]);
    let v = json(&first);
    let coord = |k: &str, i: usize| v["triangle"][k][i].to_string();
    let verts: Vec<String> = ["a", "b", "c"]
        .iter()
        .flat_map(|k| [coord(k, 0), coord(k, 1)])
        .collect();
    let mut args = vec!["build", "--json", "-", "--vertices"];
    args.extend(verts.iter().map(String::as_str));
    let second = json(&bulge(&args));
    for key in ["len_ab", "len_bc", "len_ca", "perimeter", "area"] {
        let (x, y) = (num(&v["metrics"][key]), num(&second["metrics"][key]));
        assert!((x - y).abs() <= 1e-12 * x.abs(), "{key}: {x} vs {y}");
    }
}

/// Reads the path back and recovers each arc length from `r` and the chord.
#[test]
fn svg_arcs_reparse_to_edge_lengths() {
    let out = bulge(&["render", "--right", "1", "2", "--out", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let svg = stdout(&out);
    let d_start = svg.find(" d=\"").unwrap() + 4;
    let d = &svg[d_start..d_start + svg[d_start..].find('"').unwrap()];
    let tokens: Vec<&str> = d.split_whitespace().collect();
    assert_eq!(tokens[0], "M");
    let mut cur = (tokens[1].parse::<f64>().unwrap(), tokens[2].parse::<f64>().unwrap());
    let mut lengths = Vec::new();
    let mut i = 3;
    while tokens[i] == "A" {
        let f: Vec<f64> = tokens[i + 1..i + 8].iter().map(|t| t.parse().unwrap()).collect();
        let (r, large, next) = (f[0], f[3], (f[5], f[6]));
        assert_eq!(large, 0.0);
        let chord = ((next.0 - cur.0).powi(2) + (next.1 - cur.1).powi(2)).sqrt();
        lengths.push(r * 2.0 * (chord / (2.0 * r)).min(1.0).asin());
        cur = next;
        i += 8;
    }
    assert_eq!(tokens[i], "Z");
    assert_eq!(lengths.len(), 3);

    let report = json(&bulge(&["build", "--right", "1", "2", "--json", "-"]));
    let expect = [
        num(&report["metrics"]["len_ab"]),
        num(&report["metrics"]["len_bc"]),
        num(&report["metrics"]["len_ca"]),
    ];
    let k = lengths[0] / expect[0];
    for (got, want) in lengths.iter().zip(expect) {
        assert!((got / k - want).abs() <= 1e-6 * want, "{got} vs {want}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(bulge(&["--help"]).status.code(), Some(0));
    assert_eq!(bulge(&["--version"]).status.code(), Some(0));
}

#[test]
fn writes_documents_to_files() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("report.json");
    let svg_path = dir.path().join("figure.svg");
    let csv_path = dir.path().join("sweep.csv");
    let path = |p: &std::path::Path| p.to_str().unwrap().to_owned();

    let out = bulge(&["build", "--sides", "1", "1", "1", "--json", &path(&json_path)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(v["metrics"]["convexity"], "convex");

    let out = bulge(&["render", "--sides", "1", "1", "1", "--out", &path(&svg_path)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(std::fs::read_to_string(&svg_path).unwrap().starts_with("<?xml"));

    let out = bulge(&["sweep", "--leg-a", "1", "--b-from", "1", "--b-to", "2", "--steps", "3", "--csv", &path(&csv_path)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&csv_path).unwrap().lines().count(), 4);

    let missing = dir.path().join("no/such/dir/out.svg");
    let out = bulge(&["render", "--sides", "1", "1", "1", "--out", &path(&missing)]);
    assert_eq!(out.status.code(), Some(1));
}
