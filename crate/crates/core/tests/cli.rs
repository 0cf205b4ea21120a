mod common;

use settle::cli::run;

fn settle(args: &[&str]) -> (i32, String, String) {
    run(std::iter::once("settle").chain(args.iter().copied()))
}

fn golden(name: &str) -> String {
    common::golden(name).to_string_lossy().into_owned()
}

#[test]
fn gen_rake_stripe() {
    let (code, out, err) = settle(&["gen", "--pattern", "rake-stripe", "--rows", "6", "--cols", "8"]);
    assert_eq!(code, 0, "{err}");
    let c = settle::io::parse_grid(&out).unwrap();
    assert_eq!(c.occupancy(), 26);
    assert!(err.contains("occupancy 26"));
    let (code, out, _) = settle(&["gen", "--pattern", "Brick-Comb", "--rows", "5", "--cols", "10", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["occupancy"], 39);
    let (code, out, _) = settle(&["gen", "--pattern", "comb", "--rows", "3", "--cols", "3", "--format", "svg"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("<svg"));
}

#[test]
fn check_sample_grids() {
    let (code, out, _) = settle(&["check", &golden("sample_impermissible.grid")]);
    assert_eq!(code, 0);
    assert!(out.contains("permissible: no"));
    assert!(out.contains("blocked house at (2, 2)"));
    assert!(out.contains("blocked house at (3, 3)"));
    assert_eq!(out.matches("blocked house").count(), 2);

    let (code, _, err) = settle(&["check", &golden("sample_permissible.grid"), "--expect", "maximal"]);
    assert_eq!(code, 1);
    assert!(err.contains("maximal"));
    let (code, _, _) = settle(&["check", &golden("sample_permissible.grid"), "--expect", "permissible"]);
    assert_eq!(code, 0);

    let (code, out, _) = settle(&["check", &golden("sample_maximal.grid"), "--expect", "maximal", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["maximal"], true);
    assert_eq!(v["occupancy"], 15);
    assert_eq!(v["addable"].as_array().unwrap().len(), 0);
}

#[test]
fn check_json_agrees_with_library() {
    for name in [
        "sample_impermissible.grid",
        "sample_permissible.grid",
        "sample_maximal.grid",
        "rake_6x8.grid",
        "brick_comb_5x10.grid",
        "check_4x11.grid",
    ] {
        let c = common::golden_grid(name);
        let (_, out, _) = settle(&["check", &golden(name), "--json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["permissible"], c.is_permissible(), "{name}");
        assert_eq!(v["maximal"], c.is_maximal(), "{name}");
    }
}

#[test]
fn table_and_golden() {
    let (code, out, _) = settle(&["table", "--objective", "max", "--rows", "2..6", "--cols", "2..6"]);
    assert_eq!(code, 0);
    let t5 = common::max_table();
    let lines: Vec<&str> = out.lines().skip(1).collect();
    for (k, line) in lines.iter().enumerate() {
        let vals: Vec<u64> = line.split_whitespace().skip(1).map(|v| v.parse().unwrap()).collect();
        assert_eq!(vals, t5[k][..5]);
    }
    let (code, out, _) = settle(&[
        "table", "--objective", "max", "--rows", "2..16", "--cols", "2..16", "--golden",
        &golden("max_table.json"),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("225 compared, 0 mismatched"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"rows":[2],"cols":[2],"values":[[5]]}"#).unwrap();
    let (code, _, err) = settle(&[
        "table", "--objective", "max", "--rows", "2", "--cols", "2", "--golden",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("mismatch"));
}

#[test]
fn solve_bounds_oracle_export() {
    let dir = tempfile::tempdir().unwrap();
    let wpath = dir.path().join("w.grid");
    let (code, out, _) = settle(&[
        "solve", "--objective", "min", "--rows", "6", "--cols", "8", "--witness",
        wpath.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("I 6x8 (free): 26\n"));
    let (code, _, _) = settle(&["check", wpath.to_str().unwrap(), "--expect", "maximal"]);
    assert_eq!(code, 0);

    let (code, out, _) = settle(&["solve", "--objective", "max", "--rows", "3", "--cols", "3", "--boundary", "bricked", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["boundary"], "bricked");

    let (code, out, _) = settle(&["bounds", "--rows", "6", "--cols", "8", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["i_lower"]["value"], 26);

    let (code, out, _) = settle(&["oracle", "--objective", "max", "--rows", "4", "--cols", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("agree"));

    let lp = dir.path().join("m.lp");
    let (code, _, _) = settle(&["export-ip", "--objective", "min", "--rows", "3", "--cols", "4", "-o", lp.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(
        std::fs::read_to_string(lp).unwrap(),
        std::fs::read_to_string(common::golden("model_3x4_min.lp")).unwrap()
    );
}

#[test]
fn errors_and_exit_codes() {
    let (code, _, err) = settle(&["solve", "--objective", "min", "--rows", "3", "--cols", "14"]);
    assert_eq!(code, 2);
    assert!(err.contains("cap of 12"));
    let (code, _, _) = settle(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, _) = settle(&["gen", "--pattern", "zigzag", "--rows", "4", "--cols", "4"]);
    assert_eq!(code, 2);
    let (code, _, _) = settle(&["oracle", "--objective", "max", "--rows", "5", "--cols", "5"]);
    assert_eq!(code, 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.grid");
    std::fs::write(&bad, "##\n#x\n").unwrap();
    let (code, _, err) = settle(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2, column 2"));
    let (code, out, _) = settle(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["gen", "check", "solve", "bounds", "table", "export-ip", "oracle"] {
        assert!(out.contains(sub), "{sub}");
    }
}

#[test]
fn outputs_are_deterministic() {
    let args = ["table", "--objective", "min", "--rows", "2..5", "--cols", "2..6", "--json"];
    assert_eq!(settle(&args), settle(&args));
    let args = ["solve", "--objective", "max", "--rows", "7", "--cols", "9", "--json"];
    assert_eq!(settle(&args), settle(&args));
}
