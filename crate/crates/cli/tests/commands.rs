use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

fn gia(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gia"))
        .args(args)
        .output()
        .unwrap()
}

fn report(args: &[&str]) -> Value {
    let out = gia(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn on(cmd: &[&str], name: &str) -> Value {
    let path = fixture(name);
    let mut args = cmd.to_vec();
    args.push(path.to_str().unwrap());
    report(&args)
}

#[test]
fn check_reports_flags_in_order() {
    let out = gia(&["check", fixture("bridge").to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    let keys: Vec<&str> = text
        .lines()
        .filter_map(|l| l.trim().strip_prefix('"')?.split('"').next())
        .collect();
    assert_eq!(
        keys,
        [
            "row_finite",
            "condition_K",
            "condition_L",
            "simple",
            "primitive"
        ]
    );
    assert_eq!(
        on(&["check"], "bridge"),
        json!({"row_finite": false, "condition_K": false, "condition_L": false,
               "simple": false, "primitive": false})
    );
    assert_eq!(
        on(&["check"], "o2"),
        json!({"row_finite": true, "condition_K": true, "condition_L": true,
               "simple": true, "primitive": true})
    );
    assert_eq!(on(&["check"], "dd")["simple"], json!(true));
    assert_eq!(on(&["check"], "dd")["primitive"], json!(true));
}

#[test]
fn hereditary_with_closure() {
    let r = on(&["hereditary", "--closure", "x1"], "truncated");
    assert_eq!(r["count"], json!(3));
    assert_eq!(
        r["sets"][1],
        json!({"h": ["x1", "x2", "x3"], "fin_inf": ["w"]})
    );
    assert_eq!(
        r["closure"],
        json!({"of": ["x1"], "closure": ["x1", "x2", "x3"]})
    );
    let r = on(&["hereditary"], "beta_sink");
    assert_eq!(r["count"], json!(5));
    assert!(r.get("closure").is_none());
}

#[test]
fn ideals_and_dot_file() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("beta_sink.dot");
    let r = on(&["ideals", "--dot", dot.to_str().unwrap()], "beta_sink");
    assert_eq!(r["count"], json!(7));
    assert_eq!(r["complete"], json!(true));
    assert!(r["banner"].as_str().unwrap().contains("gauge-invariant"));
    assert_eq!(
        r["ideals"][2],
        json!({"label": "J{h|v}", "h": ["h"], "b": ["v"]})
    );
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph ideals {"));
    assert_eq!(text.matches(" -> ").count(), 8);

    let r = on(&["ideals"], "bridge");
    assert!(r.get("banner").is_none());
    assert_eq!(r["complete"], json!(false));
}

#[test]
fn primitive_reports() {
    let r = on(&["primitive"], "bridge");
    assert_eq!(r["tails"].as_array().unwrap().len(), 3);
    assert_eq!(r["breaking_vertices"], json!([]));
    assert_eq!(r["complete"], json!(false));
    assert_eq!(r["label"], json!("gauge-invariant primitive ideals"));
    assert_eq!(
        r["primitive_ideals"],
        json!([{"label": "J{w|}", "h": ["w"], "b": [], "source": "tail", "from": ["u", "v"]}])
    );
    assert_eq!(
        r["tails"][0],
        json!({"vertices": ["u"], "loops_have_exits": false})
    );

    let r = on(&["primitive"], "truncated");
    assert_eq!(r["breaking_vertices"], json!(["w"]));
    assert_eq!(r["complete"], json!(true));
    let last = &r["primitive_ideals"][2];
    assert_eq!(last["source"], json!("breaking_vertex"));
    assert_eq!(last["from"], json!(["w"]));
    assert_eq!(last["h"], json!(["x1", "x2", "x3"]));
}

#[test]
fn quotient_document() {
    let r = on(&["quotient", "--h", "h"], "beta_sink");
    assert_eq!(r["vertices"], json!(["t", "w", "v", "u", "beta(v)"]));
    let into_beta: Vec<&Value> = r["edges"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["dst"] == "beta(v)")
        .collect();
    assert_eq!(into_beta.len(), 2);
    let r = on(&["quotient", "--h", "h", "--b", "v"], "beta_sink");
    assert_eq!(r["vertices"], json!(["t", "w", "v", "u"]));
    let r = on(&["quotient", "--h", ""], "bridge");
    assert_eq!(r["vertices"], json!(["u", "v", "w"]));
}

#[test]
fn ktheory_targets() {
    let r = on(&["ktheory"], "o3");
    assert_eq!(
        r,
        json!({"target": "algebra", "k0": {"torsion": [2], "free_rank": 0},
               "k1": {"torsion": [], "free_rank": 0}})
    );
    let r = on(&["ktheory", "--quotient-h", "w"], "bridge");
    assert_eq!(r["k0"], json!({"torsion": [], "free_rank": 1}));
    assert_eq!(r["k1"], json!({"torsion": [], "free_rank": 0}));
    assert_eq!(r["b"], json!([]));
    let r = on(&["ktheory", "--ideal-h", "v1,v2,v3"], "chain");
    assert_eq!(r["target"], json!("ideal"));
    assert_eq!(r["k0"]["free_rank"], json!(1));
}

#[test]
fn exit_codes() {
    let bridge = fixture("bridge");
    let bridge = bridge.to_str().unwrap();
    assert_eq!(
        gia(&["--max-vertices", "2", "ideals", bridge])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gia(&["primitive", bridge, "--max-vertices", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gia(&["quotient", bridge, "--h", "u"]).status.code(),
        Some(1)
    );
    assert_eq!(
        gia(&["quotient", bridge, "--h", "w", "--b", "v"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        gia(&["ktheory", bridge, "--ideal-h", ""]).status.code(),
        Some(1)
    );
    assert_eq!(
        gia(&["ktheory", bridge, "--quotient-h", "u,v,w"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        gia(&["check", "/nonexistent/graph.json"]).status.code(),
        Some(1)
    );
    assert_eq!(gia(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(gia(&["--help"]).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        "{\"vertices\": [\"a\"],\n \"edges\": [{\"src\": \"a\", \"dst\": \"b\", \"mult\": 1}]}",
    )
    .unwrap();
    let out = gia(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(
        stderr.contains("edge 0") && stderr.contains("undeclared"),
        "{stderr}"
    );
    assert!(out.stdout.is_empty());
}
