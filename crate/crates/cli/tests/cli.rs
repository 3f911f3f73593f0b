use std::process::{Command, Output};

use serde_json::Value;

fn weylbn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylbn"))
        .args(args)
        .env_remove("WEYL_BN_MAX_GROUP")
        .output()
        .expect("spawn weylbn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn lemma2_default_passes() {
    let o = weylbn(&["lemma2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["suite_id"], "lemma2");
    assert_eq!(v["summary"]["failed"], 0);
    let ids: Vec<&str> = v["cases"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    for id in ["double-cosets/E8/8", "witness/D4/2", "case1/E7/1", "w0/E6"] {
        assert!(ids.contains(&id), "{id} missing");
    }
    assert!(v.get("wall_time_ms").is_none());
}

#[test]
fn lemma2_family_filter() {
    let v = json(&weylbn(&["lemma2", "--family", "A", "--max-rank", "3", "--format", "json"]));
    let counts: Vec<(String, u64)> = v["cases"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["id"].as_str().unwrap().starts_with("double-cosets/"))
        .map(|c| (c["id"].as_str().unwrap().to_string(), c["actual"]["count"].as_u64().unwrap()))
        .collect();
    let want = [("A2/1", 2), ("A2/2", 2), ("A3/1", 2), ("A3/2", 3), ("A3/3", 2)];
    assert_eq!(counts.len(), want.len());
    for ((id, c), (w, k)) in counts.iter().zip(want) {
        assert_eq!(id, &format!("double-cosets/{w}"));
        assert_eq!(*c, k);
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["lemma2", "--max-rank", "1"][..],
        &["lemma2", "--max-rank", "13"],
        &["lemma2", "--family", "Q"],
        &["bn"],
        &["bn", "--sl", "3", "2", "--affine", "5"],
        &["bn", "--example", "nope"],
        &["bn", "--sl", "2", "4"],
        &["roots", "E", "5"],
        &["reduced-words", "A", "3", "1 4"],
        &["reduced-words", "A", "3", "1 x"],
        &["--jobs", "0", "roots", "A", "2"],
        &["report"],
    ] {
        assert_eq!(weylbn(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bad_max_group_env_exits_2() {
    let run = |v: &str| {
        Command::new(env!("CARGO_BIN_EXE_weylbn"))
            .args(["bn", "--sl", "3", "2"])
            .env("WEYL_BN_MAX_GROUP", v)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("lots"), Some(2));
    assert_eq!(run("0"), Some(2));
    assert_eq!(run("100"), Some(2));
    assert_eq!(run("200"), Some(0));
}

#[test]
fn bn_sl32_cells() {
    let o = weylbn(&["bn", "--sl", "3", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cells 8,16,16,32,32,64 total 168"));
    let v = json(&weylbn(&["bn", "--sl", "3", "2", "--format", "json"]));
    let cells = &v["cases"][1]["actual"]["cells"];
    assert_eq!(cells["e"], 8);
    assert_eq!(cells["1 2 1"], 64);
}

#[test]
fn bn_examples() {
    let v = json(&weylbn(&["bn", "--example", "psl3f2-nonstandard", "--format", "json"]));
    assert_eq!(v["summary"]["failed"], 0);
    let case = |id: &str| v["cases"].as_array().unwrap().iter().find(|c| c["id"] == id).unwrap().clone();
    assert_eq!(case("axioms")["actual"]["b_order"], 21);
    assert_eq!(case("classify")["actual"]["split"], true);

    let v = json(&weylbn(&["bn", "--affine", "5", "--format", "json"]));
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["cases"][0]["actual"]["rank"], 1);
    assert_eq!(v["cases"][4]["actual"]["split"], true);
}

#[test]
fn listings() {
    let o = weylbn(&["roots", "G", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| !l.starts_with('#')).count(), 12);

    let o = weylbn(&["reduced-words", "A", "3", "2 1 3 2"]);
    assert_eq!(stdout(&o), "2 1 3 2\n2 3 1 2\n");

    let o = weylbn(&["reduced-words", "A", "2", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "\n");
    let v = json(&weylbn(&["reduced-words", "A", "2", "", "--format", "json"]));
    assert_eq!(v["reduced_words"], serde_json::json!([""]));

    let o = weylbn(&["roots", "B", "2", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 9);
}

#[test]
fn json_is_stable_across_job_counts() {
    let a = weylbn(&["--jobs", "1", "report", "--all", "--format", "json"]);
    let b = weylbn(&["--jobs", "3", "report", "--all", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["summary"]["failed"], 0);
    assert!(v["suites"].as_array().unwrap().len() >= 20);
}

#[test]
fn timings_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bn.json");
    let o = weylbn(&["bn", "--affine", "3", "--format", "json", "--timings", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(v["wall_time_ms"].is_u64());
    assert_eq!(v["suite_id"], "bn/affine-3");
}
