use std::path::Path;
use std::process::{Command, Output};

use linturan::hypercore::io;

fn run(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linturan")).arg("--out-dir").arg(out).args(args).output().unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn malformed_input_reports_the_line_and_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let host = dir.path().join("bad.txt");
    std::fs::write(&host, "6 3\n0 1 2\n3 x 5\n").unwrap();
    let o = run(dir.path(), &["certify", "--input", host.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn randomized_commands_require_a_seed() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["construct", "--kind", "packing", "--n", "20"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("seed"));
}

#[test]
fn exhausted_budget_exits_3_after_writing_the_table() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["extremal", "--n", "9", "--budget", "5"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    let csv = std::fs::read_to_string(dir.path().join("extremal_r3_l3.csv")).unwrap();
    assert_eq!(csv.lines().nth(1).unwrap().split(',').nth(5), Some("false"), "{csv}");
}

#[test]
fn unknown_config_keys_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "command = \"extremal\"\ncolour = \"red\"\n[parameters]\nn = 5\n").unwrap();
    assert_eq!(run(dir.path(), &["run", cfg.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&cfg, "command = \"extremal\"\n[parameters]\nn = 5\nwidth = 2\n").unwrap();
    assert_eq!(run(dir.path(), &["run", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn seed_in_both_places_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "command = \"construct\"\nseed = 1\n[parameters]\nkind = \"packing\"\nn = 20\nseed = 2\n").unwrap();
    let o = run(dir.path(), &["run", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("seed"));
}

#[test]
fn config_runs_match_direct_runs() {
    let dir = tempfile::tempdir().unwrap();
    let direct = dir.path().join("direct");
    let via = dir.path().join("via");
    let o = run(&direct, &["construct", "--kind", "packing", "--n", "30", "--ell", "4", "--seed", "7"]);
    assert!(o.status.success(), "{}", stderr(&o));

    let toml = dir.path().join("run.toml");
    std::fs::write(
        &toml,
        format!(
            "command = \"construct\"\nseed = 7\noutputDir = {:?}\n[parameters]\nkind = \"packing\"\nn = 30\nell = 4\n",
            via.to_str().unwrap()
        ),
    )
    .unwrap();
    let o = run(dir.path(), &["run", toml.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    for name in ["packing_n30_r3_l4_s7.txt", "packing_n30_r3_l4_s7.json"] {
        assert_eq!(std::fs::read(direct.join(name)).unwrap(), std::fs::read(via.join(name)).unwrap(), "{name}");
    }

    let json = dir.path().join("run.json");
    let again = dir.path().join("again");
    std::fs::write(
        &json,
        serde_json::json!({
            "command": "construct",
            "seed": 7,
            "output_dir": again,
            "parameters": {"kind": "packing", "n": 30, "ell": 4}
        })
        .to_string(),
    )
    .unwrap();
    assert!(run(dir.path(), &["run", json.to_str().unwrap()]).status.success());
    assert_eq!(
        std::fs::read(direct.join("packing_n30_r3_l4_s7.txt")).unwrap(),
        std::fs::read(again.join("packing_n30_r3_l4_s7.txt")).unwrap()
    );
}

#[test]
fn written_graphs_parse_back() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(dir.path(), &["construct", "--kind", "rs", "--n", "7"]).status.success());
    let text = std::fs::read_to_string(dir.path().join("rs_N7.txt")).unwrap();
    let g = io::from_text(&text).unwrap();
    assert!(g.is_linear());
    assert_eq!(io::to_text(&g), text);

    let host = dir.path().join("rs_N7.txt");
    let o = run(dir.path(), &["certify", "--input", host.to_str().unwrap(), "--ell", "3"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stdout).contains("NONE"));
}

#[test]
fn certify_finds_a_cycle_and_records_it() {
    let dir = tempfile::tempdir().unwrap();
    let host = dir.path().join("c4.txt");
    std::fs::write(&host, "8 3\n0 1 2\n2 3 4\n4 5 6\n6 7 0\n").unwrap();
    let o = run(dir.path(), &["certify", "--input", host.to_str().unwrap(), "--ell", "4"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("certify_cycle.json")).unwrap()).unwrap();
    assert_eq!(v["ell"], 4);
    assert!(!v["certificate"].is_null());
}

#[test]
fn ramsey_exact_writes_value_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["ramsey", "--mode", "exact", "--t", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = std::fs::read_to_string(dir.path().join("ramsey_r3_l3_t3.csv")).unwrap();
    assert_eq!(csv, "r,ell,t,lo,hi,exact\n3,3,3,6,6,true\n");
    assert!(dir.path().join("ramsey_r3_l3_t3_witness.txt").exists());
}
