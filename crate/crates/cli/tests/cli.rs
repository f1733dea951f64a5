use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arcsmc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn map_json_for_312() {
    let v = json(&["map", "--n", "2", "--perm", "312", "--format", "json"]);
    assert_eq!(
        v["arcs"],
        serde_json::json!([
            {"left": 1, "right": 3, "above": [2], "color": "green"},
            {"left": 1, "right": 2, "above": [], "color": "red"}
        ])
    );
    let modules = v["modules"].as_array().unwrap();
    assert_eq!(modules[0]["shift"], 0);
    assert_eq!(modules[0]["dims"], serde_json::json!([1, 1]));
    assert_eq!(modules[0]["arrows"]["a1-"], serde_json::json!([["1"]]));
    assert_eq!(modules[1]["shift"], 1);
    assert_eq!(modules[1]["arrow_sequence"], "e1");
    // the key order of the document is fixed
    let text = stdout(&["map", "--n", "2", "--perm", "312"]);
    assert!(text.trim_start().starts_with("{\n  \"arcs\""));
}

#[test]
fn map_identity_and_example() {
    let v = json(&["map", "--n", "2", "--perm", "123"]);
    let arcs = v["arcs"].as_array().unwrap();
    assert!(arcs
        .iter()
        .all(|a| a["color"] == "red"
            && a["right"].as_u64().unwrap() - a["left"].as_u64().unwrap() == 1));
    let v = json(&["map", "--n", "7", "--perm", "53271468"]);
    let green: Vec<String> = v["arcs"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|a| a["color"] == "green")
        .map(|a| format!("{}-{}:{}", a["left"], a["right"], a["above"]))
        .collect();
    assert_eq!(green, ["3-5:[4]", "2-3:[]", "1-7:[4,6]"]);
}

#[test]
fn mutate_examples() {
    let v = json(&[
        "mutate", "--n", "3", "--perm", "4321", "--i", "3", "--dir", "left",
    ]);
    assert_eq!(v["permutation"], "4312");
    assert_eq!(v, json(&["map", "--n", "3", "--perm", "4312"]));
    let v = json(&[
        "mutate", "--n", "3", "--perm", "4321", "--i", "1", "--dir", "left",
    ]);
    assert_eq!(v["permutation"], "3421");
    // direction inferred from the arc color
    let v = json(&["mutate", "--n", "3", "--perm", "1234", "--i", "2"]);
    assert_eq!(v["permutation"], "1324");
    assert_eq!(
        code(&["mutate", "--n", "3", "--perm", "1234", "--i", "1", "--dir", "left"]),
        3
    );
    assert_eq!(
        code(&["mutate", "--n", "3", "--perm", "4321", "--i", "1", "--dir", "right"]),
        3
    );
    assert_eq!(
        code(&["mutate", "--n", "3", "--perm", "4321", "--i", "4"]),
        2
    );
}

#[test]
fn hasse_dot() {
    let dot = stdout(&["hasse", "--n", "2", "--format", "dot"]);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches(" -> ").count(), 6);
    assert_eq!(
        dot.lines()
            .filter(|l| l.trim_end().ends_with("\";"))
            .count(),
        6
    );
    assert!(dot.contains("\"321\" -> \"312\" [label=\"mu2\"];"));
    let dot3 = stdout(&["hasse", "--n", "3"]);
    assert_eq!(dot3.matches(" -> ").count(), 36);
    let v = json(&["hasse", "--n", "1", "--format", "json"]);
    assert_eq!(v["edges"][0]["label"], "mu1");
    assert_eq!(code(&["hasse", "--n", "7"]), 4);
    assert_eq!(code(&["hasse", "--n", "2", "--format", "svg"]), 2);
}

#[test]
fn count_families() {
    let table = stdout(&["count", "--family", "rnad", "--n", "4"]);
    assert_eq!(table.lines().last().unwrap(), "4\t42");
    let v = json(&["count", "--family", "nad", "--n", "3", "--format", "json"]);
    assert_eq!(v["counts"][2]["count"], 24);
    let v = json(&["count", "--family", "anad", "--n", "2", "--format", "json"]);
    assert_eq!(v["counts"][1]["count"], 6);
    let v = json(&[
        "count",
        "--family",
        "custom",
        "--ideal",
        r#"["a1-"]"#,
        "--n",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(v["counts"], serde_json::json!([{"n": 2, "count": 5}]));
    assert_eq!(code(&["count", "--family", "custom", "--n", "2"]), 2);
    assert_eq!(
        code(&[
            "count",
            "--family",
            "custom",
            "--ideal",
            "[\"a1 a1\"]",
            "--n",
            "2"
        ]),
        2
    );
    assert_eq!(
        code(&["count", "--family", "custom", "--ideal", "not json", "--n", "2"]),
        2
    );
    assert_eq!(code(&["count", "--n", "9"]), 4);
}

#[test]
fn check_suites() {
    let out = stdout(&["check", "--suite", "all", "--max-n", "3"]);
    assert_eq!(out.lines().count(), 5);
    assert!(out.lines().all(|l| l.contains(": ok")));
    assert_eq!(code(&["check", "--suite", "bogus"]), 2);
    assert_eq!(code(&["check", "--suite", "homs", "--max-n", "6"]), 4);
    let v = json(&[
        "check", "--suite", "order", "--max-n", "2", "--format", "json",
    ]);
    assert_eq!(v[0]["passed"], true);
}

#[test]
fn render_formats() {
    let svg = stdout(&["render", "--n", "2", "--perm", "312"]);
    assert!(svg.starts_with("<svg") && svg.contains("version=\"1.1\""));
    assert_eq!(svg.matches("<path").count(), 2);
    let tikz = stdout(&["render", "--n", "2", "--perm", "312", "--format", "tikz"]);
    assert!(tikz.starts_with("\\begin{tikzpicture}"));
    assert_eq!(
        code(&["render", "--n", "2", "--perm", "312", "--format", "dot"]),
        2
    );
}

#[test]
fn malformed_input() {
    assert_eq!(code(&["map", "--n", "2", "--perm", "3x2"]), 2);
    assert_eq!(code(&["map", "--n", "2", "--perm", "1234"]), 2);
    assert_eq!(code(&["map", "--n", "2", "--perm", "113"]), 2);
    assert_eq!(code(&["map", "--n", "2"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let args = ["hasse", "--n", "3", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
    let path = std::env::temp_dir().join(format!("arcsmc-{}.svg", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(
        stdout(&["render", "--n", "3", "--perm", "2413", "--out", p]),
        ""
    );
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&["render", "--n", "3", "--perm", "2413"]));
    std::fs::remove_file(path).unwrap();
}
