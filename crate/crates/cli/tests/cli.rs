//! End-to-end CLI behavior: golden outputs, exit codes, generator round
//! trips, and witness verification flows, all through the real binary.

use cyclepack::constructions::{complete_biorientation, cylindrical_wall, random_regular_digraph};
use cyclepack::edgelist::{emit_digraph, parse_digraph};
use cyclepack::Digraph;
use std::path::PathBuf;
use std::process::Output;

fn run(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_cyclepack"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cyclepack-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_digraph(name: &str, d: &Digraph) -> PathBuf {
    let p = tmp(name);
    std::fs::write(&p, emit_digraph(d)).unwrap();
    p
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn bounds_prints_summary_then_json() {
    let out = run(&["bounds", "--r", "22"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_str(&out),
        "c_lower=3 c_upper=21 dtw_lower=1\n\
         {\"c_lower\":3,\"c_upper\":21,\"c_upper_capped\":21,\"dtw_lower\":1,\
         \"limit_interval\":[\"3/22\",\"7/8\"],\"r\":22}\n"
    );
}

#[test]
fn bounds_propagates_known_entries() {
    let out = run(&["bounds", "--r", "16", "--known", "8:7", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert_eq!(v["c_upper_propagated"], 14);
    let bad = run(&["bounds", "--r", "16", "--known", "seven"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn gen_output_reparses_bit_exactly() {
    for (args, want) in [
        (vec!["gen", "complete", "4"], complete_biorientation(4).unwrap()),
        (vec!["gen", "wall", "2"], cylindrical_wall(2).unwrap().0),
        (vec!["gen", "regular", "14", "3", "--seed", "9"], random_regular_digraph(14, 3, 9).unwrap()),
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout_str(&out);
        let d = parse_digraph(&text).unwrap();
        assert_eq!(d, want);
        assert_eq!(emit_digraph(&d), text);
    }
}

#[test]
fn c_and_cycles_agree_on_the_complete_biorientation() {
    let file = write_digraph("k4-c.txt", &complete_biorientation(4).unwrap());
    let f = file.to_str().unwrap();

    let out = run(&["c", f]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).starts_with("c = 3\n"), "got: {}", stdout_str(&out));

    let out = run(&["cycles", f, "--hub", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert_eq!(v["hub"], 2);
    assert_eq!(v["size"], 3);

    let out = run(&["cycles", f, "--hub", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_edge_list_reports_the_line() {
    let p = tmp("broken.txt");
    std::fs::write(&p, "not a header\n").unwrap();
    let out = run(&["c", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("line 1"), "stderr: {}", stderr_str(&out));
}

#[test]
fn packing_witness_round_trip_and_tamper() {
    let file = write_digraph("k4-w.txt", &complete_biorientation(4).unwrap());
    let f = file.to_str().unwrap();
    let out = run(&["cycles", f, "--hub", "0", "--json"]);
    let text = stdout_str(&out);
    let wit = tmp("packing.json");
    std::fs::write(&wit, text.trim()).unwrap();
    let ok = run(&["verify", wit.to_str().unwrap(), f]);
    assert_eq!(ok.status.code(), Some(0), "stderr: {}", stderr_str(&ok));

    let mut v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    v["size"] = serde_json::json!(4);
    let bad = tmp("packing-bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let rejected = run(&["verify", bad.to_str().unwrap(), f]);
    assert_eq!(rejected.status.code(), Some(1));
    assert!(stderr_str(&rejected).contains("witness rejected"));
}

#[test]
fn path_and_separator_witnesses_round_trip() {
    let file = write_digraph("k4-m.txt", &complete_biorientation(4).unwrap());
    let f = file.to_str().unwrap();
    let out = run(&["menger", f, "--U", "0,1", "--W", "2,3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();

    let paths = tmp("paths.json");
    std::fs::write(&paths, v["paths"].to_string()).unwrap();
    // with endpoint context and intrinsically
    for args in [
        vec!["verify", paths.to_str().unwrap(), f, "--U", "0,1", "--W", "2,3"],
        vec!["verify", paths.to_str().unwrap(), f],
    ] {
        let ok = run(&args);
        assert_eq!(ok.status.code(), Some(0), "stderr: {}", stderr_str(&ok));
    }

    let sep = tmp("sep.json");
    std::fs::write(&sep, v["separator"].to_string()).unwrap();
    let ok = run(&["verify", sep.to_str().unwrap(), f, "--U", "0,1", "--W", "2,3"]);
    assert_eq!(ok.status.code(), Some(0), "stderr: {}", stderr_str(&ok));

    // endpoint flags must come as a pair
    let half = run(&["verify", sep.to_str().unwrap(), f, "--U", "0,1"]);
    assert_eq!(half.status.code(), Some(2));
}

#[test]
fn dense_witness_round_trip_needs_parameters() {
    let file = write_digraph("reg-d.txt", &random_regular_digraph(10, 3, 4).unwrap());
    let f = file.to_str().unwrap();
    let out = run(&["dense", f, "--r", "3", "--beta", "3/11", "--gamma", "4/11", "--json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let text = stdout_str(&out);
    let wit = tmp("dense.json");
    std::fs::write(&wit, text.trim()).unwrap();

    let ok = run(&[
        "verify", wit.to_str().unwrap(), f, "--r", "3", "--beta", "3/11", "--gamma", "4/11",
    ]);
    assert_eq!(ok.status.code(), Some(0), "stderr: {}", stderr_str(&ok));

    // parameterless verification of a density transcript is a usage error
    let missing = run(&["verify", wit.to_str().unwrap(), f]);
    assert_eq!(missing.status.code(), Some(2));

    // dropping a vertex from the final set must be caught
    let mut v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    let arr = v["vertices"].as_array().unwrap();
    v["vertices"] = serde_json::json!(arr[..arr.len() - 1]);
    let bad = tmp("dense-bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let rejected = run(&[
        "verify", bad.to_str().unwrap(), f, "--r", "3", "--beta", "3/11", "--gamma", "4/11",
    ]);
    assert_eq!(rejected.status.code(), Some(1));
}

#[test]
fn certificate_witness_round_trip_and_tamper() {
    let file = write_digraph("k4-l.txt", &complete_biorientation(4).unwrap());
    let f = file.to_str().unwrap();
    let out = run(&["linked", f, "--L", "0,1,2,3", "--k", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    let wit = tmp("cert.json");
    std::fs::write(&wit, text.trim()).unwrap();
    let ok = run(&["verify", wit.to_str().unwrap(), f]);
    assert_eq!(ok.status.code(), Some(0), "stderr: {}", stderr_str(&ok));

    // claiming one more level than checked must be rejected
    let mut v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    v["k"] = serde_json::json!(3);
    v["bound"] = serde_json::json!(2);
    let bad = tmp("cert-bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let rejected = run(&["verify", bad.to_str().unwrap(), f]);
    assert_eq!(rejected.status.code(), Some(1));
}

#[test]
fn linked_failure_exits_one() {
    let file = write_digraph("k4-nl.txt", &complete_biorientation(4).unwrap());
    let out = run(&["linked", file.to_str().unwrap(), "--L", "0,1,2,3", "--k", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn trace_rejects_irregular_input() {
    let arcs = [(0usize, 1usize), (1, 0), (1, 2), (2, 0)];
    let file = write_digraph("irr.txt", &Digraph::from_arc_list(3, &arcs).unwrap());
    let out = run(&["trace1", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn trace_meets_bound_on_small_regular_input() {
    let file = write_digraph("reg-t.txt", &random_regular_digraph(12, 3, 6).unwrap());
    let out = run(&["trace1", file.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let v: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert_eq!(v["meets_bound"], true);
    assert_eq!(v["bound"], 1);
}
