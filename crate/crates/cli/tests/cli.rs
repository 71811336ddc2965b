use std::path::Path;
use std::process::{Command, Output};

fn run_with_cache(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crossnest"))
        .args(args)
        .env("CROSSNEST_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    let dir = tempfile::tempdir().unwrap();
    run_with_cache(&dir.path().join("counts.json"), args)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

#[test]
fn phi_of_the_running_example() {
    assert_eq!(ok(&["bijection", "phi", "--input", "1457-26-3"]), "∅,∅,1,1,11,11,11,1,2,1,11,1,1,∅,∅\n");
}

#[test]
fn psi_inverts_phi() {
    let walk = ok(&["bijection", "phi", "--input", "1457-26-3"]);
    let back = ok(&["bijection", "psi", "--input", walk.trim()]);
    assert_eq!(back.lines().next(), Some("1457-26-3"));
}

#[test]
fn hesitating_round_trip_through_json() {
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["--format", "json", "bijection", "phibar", "--input", "136-25-4"])).unwrap();
    let shapes: Vec<String> = json["walk"]["shapes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| {
            let parts: Vec<String> = s.as_array().unwrap().iter().map(|v| v.to_string()).collect();
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.concat()
            }
        })
        .collect();
    assert_eq!(ok(&["bijection", "psibar", "--input", &shapes.join(",")]), "136-25-4\n");
}

#[test]
fn oscillate_goes_both_ways() {
    let walk = ok(&["bijection", "oscillate", "--input", "14-23"]);
    assert_eq!(walk, "∅,1,2,1,∅\n");
    assert_eq!(ok(&["bijection", "oscillate", "--input", walk.trim()]), "14-23\n");
}

#[test]
fn trace_lists_every_tableau() {
    let text = ok(&["bijection", "phi", "--input", "1457-26-3", "--trace"]);
    assert!(text.contains("T8: 2 4\n"));
    assert!(text.contains("T14: ∅\n"));
}

#[test]
fn empty_partition_table() {
    assert_eq!(ok(&["table", "--object", "partitions", "--n", "0", "--format", "csv"]), "cr,ne,count\n0,0,1\n");
}

#[test]
fn matching_table_is_symmetric_and_sharding_agrees() {
    let plain = ok(&["table", "--object", "matchings", "--n", "8", "--format", "csv"]);
    let sharded = ok(&["table", "--object", "matchings", "--n", "8", "--format", "csv", "--shards", "3"]);
    assert_eq!(plain, sharded);
    let cells: Vec<(String, String, u64)> = plain
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[0].to_string(), f[1].to_string(), f[2].parse().unwrap())
        })
        .collect();
    assert_eq!(cells.iter().map(|c| c.2).sum::<u64>(), 105);
    for (i, j, c) in &cells {
        assert!(cells.iter().any(|(a, b, d)| a == j && b == i && d == c));
    }
}

#[test]
fn filtered_table_json() {
    let json: serde_json::Value = serde_json::from_str(&ok(&[
        "--format", "json", "table", "--object", "partitions", "--n", "5", "--min", "1,2", "--max", "4,5",
    ]))
    .unwrap();
    assert!(json.is_object());
}

#[test]
fn charpoly_of_two_by_two() {
    let text = ok(&["charpoly", "--k", "2", "--j", "2"]);
    assert_eq!(text.lines().next(), Some("p_{2,2}(x) = 1 - 6x + 5x^2"));
    let csv = ok(&["--format", "csv", "charpoly", "--k", "2", "--j", "2"]);
    assert_eq!(csv, "power,coefficient\n0,1\n1,-6\n2,5\n");
}

#[test]
fn rank_reports_invertibility() {
    let json: serde_json::Value = serde_json::from_str(&ok(&["--format", "json", "rank", "--k", "2", "--j", "2"])).unwrap();
    assert_eq!(json["dim"], 6);
    assert_eq!(json["rank"], 4);
    assert_eq!(json["invertible"], false);
}

#[test]
fn gkj_routes_agree() {
    let count = |via: &str| {
        let json: serde_json::Value =
            serde_json::from_str(&ok(&["--format", "json", "gkj", "--k", "3", "--j", "1", "--m", "6", "--via", via])).unwrap();
        json["count"].as_str().unwrap().to_string()
    };
    assert_eq!(count("dp"), count("series"));
    assert_eq!(count("dp"), count("reflection"));
}

#[test]
fn fk_two_is_catalan() {
    let csv = ok(&["--format", "csv", "fk", "--k", "2", "--order", "5"]);
    assert_eq!(csv, "m,count\n0,1\n1,1\n2,2\n3,5\n4,14\n5,42\n");
}

#[test]
fn walks_count_matchings() {
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["--format", "json", "walks", "--kind", "oscillating", "--length", "8"])).unwrap();
    assert_eq!(json["count"], "105");
}

#[test]
fn dyck_paths_round_trip() {
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["--format", "json", "paths", "dyck2", "--matching", "16-25-34"])).unwrap();
    let path = json["path"]["steps"].as_str().unwrap();
    assert_eq!(path, "UUUDDD");
    assert!(ok(&["paths", "dyck2", "--path", path]).contains("matching: 16-25-34\n"));
    let pair = ok(&["paths", "dyck3", "--matching", "14-26-35"]);
    let upper = pair.lines().find_map(|l| l.strip_prefix("upper: ")).unwrap().to_string();
    let lower = pair.lines().find_map(|l| l.strip_prefix("lower: ")).unwrap().to_string();
    assert!(ok(&["paths", "dyck3", "--paths", &upper, &lower]).contains("matching: 14-26-35\n"));
}

#[test]
fn stats_with_oracle() {
    let text = ok(&["stats", "--partition", "1457-26-3", "--oracle"]);
    assert!(text.contains("cr: 2\n") && text.contains("ne: 2\n") && text.contains("agree: true\n"));
}

#[test]
fn verify_single_suite() {
    let out = run(&["verify", "--suite", "golden"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("criterion  1 golden"));
    let by_number = run(&["verify", "--suite", "1"]);
    assert_eq!(stdout(&out), stdout(&by_number));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["stats", "--partition", "12-x"]).status.code(), Some(1));
    assert_eq!(run(&["paths", "dyck3", "--matching", "14-25-36"]).status.code(), Some(1));
    assert_eq!(run(&["charpoly", "--k", "2"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    let err = run(&["stats", "--partition", "12-x"]);
    assert!(String::from_utf8_lossy(&err.stderr).starts_with("error: "));
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "table", "--object", "partitions", "--n", "6", "--shards", "4"];
    assert_eq!(ok(&args), ok(&args));
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("nested").join("counts.json");
    let args = ["gkj", "--k", "2", "--j", "3", "--m", "7"];
    let first = run_with_cache(&cache, &args);
    assert!(first.status.success());
    let stored = std::fs::read_to_string(&cache).unwrap();
    assert!(stored.contains("\"gkj:k=2,j=3,m=7\""));
    let second = run_with_cache(&cache, &args);
    assert_eq!(stdout(&first), stdout(&second));
    let mut uncached = args.to_vec();
    uncached.push("--no-cache");
    assert_eq!(stdout(&first), stdout(&run_with_cache(&dir.path().join("unused.json"), &uncached)));
    assert!(!dir.path().join("unused.json").exists());
}

#[test]
fn corrupt_cache_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("counts.json");
    std::fs::write(&cache, "not json").unwrap();
    assert_eq!(run_with_cache(&cache, &["fk", "--k", "2", "--order", "3"]).status.code(), Some(1));
}
