use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use degix_core::graph::{canonical_form, graph6_decode};
use serde_json::Value;

fn degix(args: &[&str]) -> Output {
    degix_env(args, &[])
}

fn degix_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_degix"));
    cmd.args(args).env_remove("DEGIX_MAX_PRECISION");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("spawn degix")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_ok(args: &[&str]) -> Value {
    let o = degix(args);
    assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn isomorphic(a: &str, b: &str) -> bool {
    let canon = |s: &str| canonical_form(&graph6_decode(s).unwrap()).unwrap();
    canon(a) == canon(b)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("degix-cli");
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, contents).unwrap();
    p
}

fn g6_of(spec: &str) -> String {
    let o = degix(&["family", "--family", spec, "--format", "g6"]);
    assert_eq!(code(&o), 0);
    stdout(&o).trim().to_string()
}

#[test]
fn p2_exact_values() {
    let p = scratch("p2.edges", "2 1\n0 1\n");
    let v = json_ok(&["compute", "--edges", p.to_str().unwrap()]);
    assert_eq!(v["ga"]["lo"], 1.0);
    assert_eq!(v["ga"]["hi"], 1.0);
    assert_eq!(v["abc"]["lo"], 0.0);
    assert_eq!(v["abc"]["hi"], 0.0);
    assert_eq!(v["verdict"], "GA_GREATER");
    assert_eq!((v["n"].as_u64(), v["m"].as_u64()), (Some(2), Some(1)));
}

#[test]
fn wheel_either_side_of_the_flip() {
    let v = json_ok(&["compute", "--family", "wheel:195", "--precision", "128"]);
    assert_eq!(v["verdict"], "ABC_GREATER");
    assert!(v["precision_used"].as_u64().unwrap() <= 128);
    let v = json_ok(&["compute", "--family", "wheel:194", "--precision", "128"]);
    assert_eq!(v["verdict"], "GA_GREATER");
}

#[test]
fn crossover_reports_first_flip() {
    let v = json_ok(&["crossover", "--range", "4..300"]);
    assert_eq!(v["first_flip"], 195);
    assert_eq!(v["rows"].as_array().unwrap().len(), 297);
    assert_eq!(json_ok(&["crossover", "--range", "4..100"])["first_flip"], Value::Null);
    assert_eq!(json_ok(&["crossover", "--range", "190..200"])["first_flip"], 195);
    assert_eq!(json_ok(&["crossover"])["first_flip"], 195);

    let o = degix(&["crossover", "--range", "190..200", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# degix-csv v1 crossover"));
    assert_eq!(lines.next(), Some("# first_flip=195"));
    assert_eq!(lines.next(), Some("n,sign,gap_lo,gap_hi,gap_mid"));
    assert_eq!(lines.count(), 11);
}

#[test]
fn conjecture_scan_over_connected_graphs() {
    let v = json_ok(&["conjecture", "--max-n", "7"]);
    // 996 connected graphs on 1..=7 vertices; K_1 is trivial.
    assert_eq!(v["graphs_scanned"], 995);
    assert_eq!(v["graphs_skipped"], 1);
    assert_eq!(v["violations"], Value::Array(vec![]));
    assert_eq!(v["indeterminates"], Value::Array(vec![]));

    let v = json_ok(&["conjecture", "--max-n", "7", "--trees-max-n", "12"]);
    assert_eq!(v["graphs_scanned"], 995 + 23 + 47 + 106 + 235 + 551);
    let min = &v["min_abs_gap"];
    assert!(isomorphic(min["graph6"].as_str().unwrap(), &g6_of("tstar")), "{min}");
    let (lo, hi) = (min["gap"]["lo"].as_f64().unwrap(), min["gap"]["hi"].as_f64().unwrap());
    assert!(-0.009 <= lo && hi <= -0.008, "{lo} {hi}");
}

#[test]
fn conjecture_from_graph6_file() {
    let body = format!("{}\n{}\n@\n", g6_of("star:4"), g6_of("cycle:6"));
    let p = scratch("conj.g6", &body);
    let v = json_ok(&["conjecture", "--g6", p.to_str().unwrap()]);
    assert_eq!(v["graphs_scanned"], 2);
    assert_eq!(v["graphs_skipped"], 1);
    assert_eq!(v["min_abs_gap"]["graph6"], g6_of("star:4"));
}

#[test]
fn verify_line_molecular_on_graph6_stream() {
    let o = degix(&["enumerate", "--max-n", "5", "--format", "g6"]);
    assert_eq!(code(&o), 0);
    let p = scratch("le5.g6", &stdout(&o));
    let v = json_ok(&["verify", "--theorem", "line_molecular", "--g6", p.to_str().unwrap()]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 1 + 1 + 2 + 6 + 21);
    let mut keys: Vec<&str> = rows.iter().map(|r| r["graph6"].as_str().unwrap()).collect();
    let sorted = {
        let mut k = keys.clone();
        k.sort();
        k
    };
    assert_eq!(keys, sorted);
    keys.dedup();
    assert_eq!(keys.len(), rows.len());
    for r in rows {
        if r["status"] == "PRECONDITION_FAILED" {
            assert!(r["error"].is_string());
            continue;
        }
        assert_eq!(r["consistent"], true, "{r}");
        if r["hypothesis_holds"] == true {
            assert_eq!(r["verdict"], "GA_GREATER", "{r}");
            assert!(r["evaluated_graph6"].is_string());
        }
    }
}

#[test]
fn dt_delta3_marks_k14_hypothesis_failed() {
    let body = format!("{}\n{}\n{}\n", g6_of("cycle:5"), g6_of("star:4"), g6_of("tstar"));
    let p = scratch("dt.g6", &body);
    let o = degix(&["verify", "--theorem", "DT_DELTA3", "--g6", p.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let find = |g6: &str| v.as_array().unwrap().iter().find(|r| r["graph6"] == g6).unwrap().clone();
    let k14 = find(&g6_of("star:4"));
    assert_eq!(k14["status"], "HYPOTHESIS_FAILED");
    assert_eq!(k14["verdict"], "ABC_GREATER");
    let clause = k14["clauses"].as_array().unwrap().iter().find(|c| c["name"] == "not_k1_4").unwrap();
    assert_eq!(clause["holds"], false);
    assert_eq!(find(&g6_of("tstar"))["status"], "HYPOTHESIS_FAILED");
    assert_eq!(find(&g6_of("cycle:5"))["status"], "CONFIRMED");
}

#[test]
fn precondition_failures_are_rows() {
    let p = scratch("pre.g6", &format!("{}\n@\n", g6_of("path:4")));
    let v = json_ok(&["verify", "--theorem", "tree_pendant", "--g6", p.to_str().unwrap()]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows[0]["graph6"], "@");
    assert_eq!(rows[0]["status"], "PRECONDITION_FAILED");
    assert!(rows[1]["status"].is_string());
    let v = json_ok(&["verify", "--theorem", "starlike_1", "--family", "cycle:5"]);
    assert_eq!(v["status"], "PRECONDITION_FAILED");
}

#[test]
fn sandwich_and_recognize() {
    let v = json_ok(&["sandwich", "--family", "complete:5"]);
    assert_eq!((v["left"].as_str(), v["right"].as_str()), (Some("EQUAL"), Some("STRICT")));
    assert_eq!(v["equality_cases_match"], true);
    let v = json_ok(&["sandwich", "--family", "cycle:3"]);
    assert_eq!(v["right"], "EQUAL");
    let v = json_ok(&["sandwich", "--family", "star:3"]);
    assert!(v["error"].as_str().unwrap().contains("minimum degree"));

    let v = json_ok(&["recognize", "--family", "star:3"]);
    assert_eq!(v["is_line_graph"], false);
    assert_eq!(v["violation"]["kind"], "claw");
    assert_eq!(v["violation"]["center"], 0);
    let v = json_ok(&["recognize", "--family", "complete:4"]);
    assert_eq!(v["is_line_graph"], true);
}

#[test]
fn linegraph_and_census() {
    // L(K_{1,4}) = K_4
    let v = json_ok(&["linegraph", "--family", "star:4"]);
    assert!(isomorphic(v["line_graph6"].as_str().unwrap(), &g6_of("complete:4")));
    let o = degix(&["linegraph", "--family", "cycle:5", "--format", "g6"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    assert!(isomorphic(text.trim(), &g6_of("cycle:5")));

    let v = json_ok(&["census", "--family", "starlike:4,4,4"]);
    let census: Vec<(u64, u64, u64)> = v["census"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["a"].as_u64().unwrap(), e["b"].as_u64().unwrap(), e["count"].as_u64().unwrap()))
        .collect();
    assert_eq!(census, vec![(2, 1, 3), (2, 2, 6), (3, 2, 3)]);
    assert_eq!(v["pendant_count"], 3);
}

#[test]
fn family_and_enumerate() {
    let v = json_ok(&["family", "--family", "bridge:12,3"]);
    assert_eq!((v["n"].as_u64(), v["m"].as_u64()), (Some(15), Some(70)));
    assert_eq!(v["family"], "bridge:12,3");

    let v = json_ok(&["enumerate", "--max-n", "7"]);
    let counts: Vec<u64> = v["counts"].as_array().unwrap().iter().map(|c| c["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    let v = json_ok(&["enumerate", "--max-n", "12", "--trees"]);
    let counts: Vec<u64> = v["counts"].as_array().unwrap().iter().map(|c| c["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
}

#[test]
fn sweeps() {
    let v = json_ok(&["sweep", "--family", "kbip", "--range", "2..4"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows[0]["family"], "kbip:2,12");
    assert!(rows.iter().all(|r| r["sign"] == "ABC_GREATER"));

    let v = json_ok(&["sweep", "--family", "wheel", "--range", "193..196"]);
    let signs: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["sign"].as_str().unwrap()).collect();
    assert_eq!(signs, ["GA_GREATER", "GA_GREATER", "ABC_GREATER", "ABC_GREATER"]);

    let v = json_ok(&["sweep", "--family", "bridge", "--range", "12", "--range", "3", "--theorem", "edgewise_global"]);
    assert_eq!(v[0]["sign"], "GA_GREATER");

    // Invalid instances stay on their rows.
    let v = json_ok(&["sweep", "--family", "wheel", "--range", "2..4"]);
    let rows = v.as_array().unwrap();
    assert!(rows[0]["error"].is_string() && rows[1]["error"].is_string());
    assert_eq!(rows[2]["sign"], "GA_GREATER");
}

#[test]
fn csv_outputs_carry_versioned_header() {
    let p = scratch("csv.g6", &format!("{}\n", g6_of("cycle:4")));
    let p = p.to_str().unwrap();
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("compute", vec!["compute", "--g6", p]),
        ("census", vec!["census", "--g6", p]),
        ("family", vec!["family", "--family", "path:3"]),
        ("linegraph", vec!["linegraph", "--g6", p]),
        ("recognize", vec!["recognize", "--g6", p]),
        ("verify", vec!["verify", "--theorem", "sandwich", "--g6", p]),
        ("sandwich", vec!["sandwich", "--g6", p]),
        ("crossover", vec!["crossover", "--range", "4..6"]),
        ("enumerate", vec!["enumerate", "--max-n", "3"]),
        ("conjecture", vec!["conjecture", "--max-n", "3"]),
        ("sweep", vec!["sweep", "--family", "cycle", "--range", "3..5"]),
    ];
    for (verb, mut args) in cases {
        args.extend(["--format", "csv"]);
        let o = degix(&args);
        assert_eq!(code(&o), 0, "{verb}");
        let text = stdout(&o);
        assert_eq!(text.lines().next(), Some(format!("# degix-csv v1 {verb}").as_str()), "{verb}");
    }
}

#[test]
fn usage_errors_exit_1() {
    let cases: [&[&str]; 9] = [
        &["frobnicate"],
        &["compute", "--family", "path:3", "--precision", "100"],
        &["compute", "--family", "path:3", "--g6", "x.g6"],
        &["compute"],
        &["compute", "--family", "hypercube:3"],
        &["compute", "--family", "path:3", "--format", "g6"],
        &["verify", "--theorem", "nope", "--family", "path:3"],
        &["enumerate", "--max-n", "8"],
        &["crossover", "--range", "300..4"],
    ];
    for args in cases {
        let o = degix(args);
        assert_eq!(code(&o), 1, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(code(&degix(&["--help"])), 0);
    assert_eq!(code(&degix(&["--version"])), 0);
}

#[test]
fn io_and_parse_errors_exit_2() {
    let bad = scratch("bad.g6", "C~\n!!!\n");
    let edges = scratch("bad.edges", "3 2\n0 1\n");
    let missing = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("no-such-file.g6");
    let cases: [Vec<&str>; 4] = [
        vec!["compute", "--g6", bad.to_str().unwrap()],
        vec!["compute", "--edges", edges.to_str().unwrap()],
        vec!["compute", "--g6", missing.to_str().unwrap()],
        vec!["compute", "--family", "wheel:3"],
    ];
    for args in cases {
        let o = degix(&args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn out_file_written_only_on_success() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("degix-cli");
    fs::create_dir_all(&dir).unwrap();
    let good = dir.join("out-good.json");
    let _ = fs::remove_file(&good);
    let o = degix(&["compute", "--family", "cycle:5", "--out", good.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&good).unwrap()).unwrap();
    assert_eq!(v["verdict"], "GA_GREATER");

    let bad = dir.join("out-bad.json");
    let _ = fs::remove_file(&bad);
    let o = degix(&["compute", "--family", "wheel:2", "--out", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(!bad.exists());
}

#[test]
fn precision_from_environment() {
    let o = degix_env(&["compute", "--family", "tstar"], &[("DEGIX_MAX_PRECISION", "64")]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["precision_used"], 64);
    let o = degix_env(&["compute", "--family", "tstar"], &[("DEGIX_MAX_PRECISION", "nope")]);
    assert_eq!(code(&o), 1);

    // The crossover table stamps the ceiling it ran under.
    let o = degix_env(&["crossover", "--range", "4..8"], &[("DEGIX_MAX_PRECISION", "128")]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["precision"], 128);
    let o = degix_env(&["crossover", "--range", "4..8", "--precision", "256"], &[("DEGIX_MAX_PRECISION", "128")]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["precision"], 256, "the flag takes precedence over the environment");
}

#[test]
fn repeated_runs_are_byte_identical() {
    let runs: [&[&str]; 3] = [
        &["conjecture", "--max-n", "7", "--trees-max-n", "10", "--format", "csv"],
        &["crossover", "--range", "4..300"],
        &["sweep", "--family", "starlike", "--range", "1..4", "--range", "1..4", "--range", "1..4", "--theorem", "starlike_2"],
    ];
    for args in runs {
        let a = degix_env(args, &[("RAYON_NUM_THREADS", "1")]);
        let b = degix_env(args, &[("RAYON_NUM_THREADS", "8")]);
        let c = degix_env(args, &[("RAYON_NUM_THREADS", "8")]);
        assert_eq!(code(&a), 0, "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(b.stdout, c.stdout, "{args:?}");
    }
}
