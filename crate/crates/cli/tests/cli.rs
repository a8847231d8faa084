use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn fwdix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fwdix"))
        .args(args)
        .env_remove("FWDIX_LIMITS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn gen(dir: &TempDir, family: &str, params: &str) -> String {
    let file = path(dir, &format!("{family}-{params}.json"));
    let out = fwdix(&[
        "gen", "--family", family, "--params", params, "--out", &file,
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    file
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn gen_writes_the_cube() {
    let dir = TempDir::new().unwrap();
    let file = gen(&dir, "hypercube", "3");
    let g: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(g["n"], 8);
    assert_eq!(g["edges"].as_array().unwrap().len(), 12);
}

#[test]
fn gen_without_out_prints_the_graph() {
    let out = fwdix(&["gen", "--family", "cycle", "--params", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["n"], 4);
}

#[test]
fn wheel_general_and_minimal() {
    let dir = TempDir::new().unwrap();
    let w7 = gen(&dir, "wheel", "7");
    let out = fwdix(&[
        "solve", "--graph", &w7, "--index", "vertex", "--mode", "general", "--json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["value"], 3);
    assert_eq!(v["status"], "optimal");
    let out = fwdix(&[
        "solve", "--graph", &w7, "--index", "vertex", "--mode", "minimal", "--json",
    ]);
    assert_eq!(json(&out)["value"], 6);
}

fn loads_max(csv: &str, section: &str) -> u64 {
    let mut max = 0;
    let mut inside = false;
    for line in csv.lines() {
        let fields: Vec<&str> = line.split(',').collect();
        if fields[0] == "vertex" || fields[0] == "edge" {
            inside = fields[0] == section;
            continue;
        }
        if inside {
            max = max.max(fields.last().unwrap().parse().unwrap());
        }
    }
    max
}

#[test]
fn certificate_round_trip() {
    let dir = TempDir::new().unwrap();
    for (family, params, index) in [
        ("wheel", "7", "vertex"),
        ("hypercube", "3", "edge"),
        ("path", "5", "vertex"),
    ] {
        let g = gen(&dir, family, params);
        let r = path(&dir, &format!("{family}.routing.json"));
        let out = fwdix(&[
            "solve",
            "--graph",
            &g,
            "--index",
            index,
            "--mode",
            "general",
            "--routing-out",
            &r,
            "--json",
        ]);
        assert_eq!(code(&out), 0);
        let v = json(&out);
        assert_eq!(v["certificateFile"], r.as_str());
        let loads = fwdix(&["loads", "--graph", &g, "--routing", &r]);
        assert_eq!(code(&loads), 0);
        let csv = stdout(&loads);
        assert_eq!(
            loads_max(&csv, index),
            v["value"].as_u64().unwrap(),
            "{family}"
        );
    }
}

#[test]
fn identical_runs_are_identical() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "complete-bipartite", "2,3");
    let args = [
        "solve", "--graph", &g, "--index", "edge", "--mode", "general", "--json",
    ];
    let a = fwdix(&args);
    let b = fwdix(&args);
    assert_eq!(a.stdout, b.stdout);
    let a = fwdix(&["bounds", "--graph", &g]);
    let b = fwdix(&["bounds", "--graph", &g]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_reports_the_cycle_discrepancy() {
    let dir = TempDir::new().unwrap();
    let manifest = path(&dir, "basic.json");
    std::fs::write(
        &manifest,
        r#"[{"family":"cycle","params":[5]},{"family":"hypercube","params":[3]}]"#,
    )
    .unwrap();
    let report = path(&dir, "report.csv");
    let out = fwdix(&["verify", "--manifest", &manifest, "--out", &report]);
    assert_eq!(code(&out), 4);
    let csv = std::fs::read_to_string(&report).unwrap();
    assert!(
        csv.contains("cycle,5,vertex,general,4,2,refuted,§6-item5\n"),
        "{csv}"
    );
    assert!(csv.contains("cycle,5,vertex,general,2,2,confirmed,§6-item6\n"));
    assert!(csv.contains("hypercube,3,edge,general,8,8,confirmed,§6-item8\n"));
}

#[test]
fn verify_without_refutations_succeeds() {
    let dir = TempDir::new().unwrap();
    let manifest = path(&dir, "ok.json");
    std::fs::write(&manifest, r#"[{"family":"path","params":[4]}]"#).unwrap();
    let out = fwdix(&["verify", "--manifest", &manifest]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out)
        .starts_with("family,params,objective,mode,claimed,computed,verdict,citation\n"));
}

#[test]
fn bounds_are_json() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "hypercube", "3");
    let out = fwdix(&["bounds", "--graph", &g]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let entries = v["entries"].as_array().unwrap();
    assert!(entries
        .iter()
        .any(|e| e["theoremId"] == "T2.3a" && e["value"] == 5));
}

#[test]
fn enumerate_writes_a_witness() {
    let dir = TempDir::new().unwrap();
    let w = path(&dir, "witness.json");
    let out = fwdix(&[
        "enumerate",
        "--n",
        "5",
        "--max-degree",
        "2",
        "--index",
        "vertex",
        "--out",
        &w,
        "--json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["minimum"], 2);
    assert_eq!(v["exact"], true);
    let g: Value = serde_json::from_str(&std::fs::read_to_string(&w).unwrap()).unwrap();
    assert_eq!(g["n"], 5);
}

#[test]
fn usage_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "cycle", "4");
    assert_eq!(
        code(&fwdix(&["gen", "--family", "nope", "--params", "3"])),
        2
    );
    assert_eq!(
        code(&fwdix(&["gen", "--family", "cycle", "--params", "2"])),
        2
    );
    assert_eq!(
        code(&fwdix(&["solve", "--graph", &g, "--index", "both"])),
        2
    );
    assert_eq!(
        code(&fwdix(&[
            "solve", "--graph", &g, "--index", "vertex", "--bogus"
        ])),
        2
    );
    assert_eq!(
        code(&fwdix(&["enumerate", "--n", "5", "--index", "vertex"])),
        2
    );
    assert_eq!(code(&fwdix(&[])), 2);
    let garbage = path(&dir, "garbage.json");
    std::fs::write(&garbage, "{").unwrap();
    assert_eq!(code(&fwdix(&["bounds", "--graph", &garbage])), 2);
}

#[test]
fn budget_exhaustion_exits_3_with_incumbent() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "hypercube", "3");
    let r = path(&dir, "incumbent.json");
    let out = fwdix(&[
        "solve",
        "--graph",
        &g,
        "--index",
        "edge",
        "--mode",
        "general",
        "--max-nodes",
        "1",
        "--routing-out",
        &r,
        "--json",
    ]);
    assert_eq!(code(&out), 3);
    let v = json(&out);
    assert_eq!(v["status"], "upper-bound");
    assert!(Path::new(&r).exists());
}

#[test]
fn auto_mode_thresholds() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "hypercube", "3");
    let run = |limits: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_fwdix"));
        cmd.args(["solve", "--graph", &g, "--index", "vertex", "--json"]);
        match limits {
            Some(l) => cmd.env("FWDIX_LIMITS", l),
            None => cmd.env_remove("FWDIX_LIMITS"),
        };
        cmd.output().unwrap()
    };
    let v = json(&run(None));
    assert_eq!(
        (v["mode"].as_str(), v["status"].as_str()),
        (Some("minimal"), Some("optimal"))
    );
    let v = json(&run(Some("general=8")));
    assert_eq!(
        (v["mode"].as_str(), v["value"].as_u64()),
        (Some("general"), Some(5))
    );
    let v = json(&run(Some("general=2,minimal=3")));
    assert_eq!(v["status"], "lower-bound-only");
    assert_eq!(code(&run(Some("fast"))), 2);
}
