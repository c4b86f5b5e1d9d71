use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_letterlink"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim_end().to_string()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).expect("one JSON object"))
}

const WORD: &str = "[a a,[b,a c]]";
const STAR: &str = "{a1:a, a2:a, a3:a, a4:a, b1:b ; a1->b1, a2->b1, a3->b1, a4->b1}";

#[test]
fn eval_examples() {
    assert_eq!(ok(&["eval", "--symbol", "((a)b)a", "--word", WORD]), "4");
    assert_eq!(ok(&["eval", "--symbol", "(a)b", "--word", "a b a^-1 b^-1"]), "1");
    let o = run(&["eval", "--symbol", "(a)b", "--word", "a b"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "undefined at a (count=1)");
    assert_eq!(ok(&["eval", "--graph", "{v1:a, v2:b ; v1->v2}", "--word", "a b a^-1 b^-1"]), "1");
}

#[test]
fn fox_examples() {
    assert_eq!(ok(&["fox", "--word", WORD, "--seq", "a,b,a"]), "4");
    assert_eq!(ok(&["fox", "--word", "a", "--seq", "a"]), "1");
    assert_eq!(
        ok(&["fox", "--word", WORD, "--seq", "a,b,a", "--full"]),
        "2*aab + aabacb^-1c^-1a^-1 + aabacb^-1c^-1a^-1a^-1"
    );
}

#[test]
fn graph_examples() {
    assert_eq!(
        ok(&["reduce", "--graph", "{v1:a,v2:b,v3:c; v1->v2, v2->v3}", "--order", "v2,v1"]),
        "-1*\"(a(b))c\" + 1*\"(a)(b)c\""
    );
    assert_eq!(ok(&["matrix", "--weight", "5", "--gens", "a,b", "--multidegree", "3,2"]), "[[4,-2],[4,4]]");
    assert_eq!(ok(&["matrix", "--weight", "5", "--gens", "a,b", "--multidegree", "2,3"]), "[[6,-2],[0,4]]");
    assert_eq!(ok(&["pair", "--graph", STAR, "--lie", "[a,[a,[a,[a,b]]]]"]), "24");
    let sum = ok(&["distinct", "--graph", "{b1:b, a1:a, a2:a, c1:c, d1:d ; b1->a1, a1->a2, a2->c1, a2->d1}"]);
    assert!(sum.contains("1/2 * {"), "{sum}");
    assert_eq!(
        ok(&["pair", "--graphsum", "2 * {v1:a, v2:b ; v1->v2} - 1/2 * {v1:b, v2:a ; v1->v2}", "--lie", "[a,b]"]),
        "5/2"
    );
}

#[test]
fn basis_and_coordinates() {
    assert_eq!(ok(&["basis", "--weight", "3", "--gens", "a,b"]), "[a,[a,b]]\n[[a,b],b]");
    assert_eq!(ok(&["basis", "--weight", "5", "--gens", "a,b", "--multidegree", "3,2"]).lines().count(), 2);
    assert_eq!(ok(&["coords", "--word", "[[a,b],c]", "--weight", "3"]), "1*[a,[b,c]] + 1*[[a,c],b]");
    let o = run(&["coords", "--word", "[a,b]", "--weight", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn diagrams() {
    let d = ok(&["diagram", "--word", WORD, "--symbol", "(a)b"]);
    let lines: Vec<&str> = d.lines().collect();
    let top = lines.iter().position(|l| *l == "(a)b:").unwrap();
    let digits: Vec<&str> = lines[top + 1].split_whitespace().collect();
    assert_eq!(digits, ["2", "3", "1", "0"]);
    assert!(d.contains(">--"));
    assert!(d.ends_with("value = 0"));

    assert!(ok(&["diagram", "--word", "", "--symbol", "(a)b"]).ends_with("value = 0"));

    let o = run(&["diagram", "--word", "a b", "--symbol", "(a)b"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("a:"));
    assert!(stdout(&o).ends_with("undefined at a (count=1)"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["eval", "--symbol", "((a", "--word", "a"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--symbol", "(a)b", "--word", "[a,"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--symbol", "(a)a", "--word", "a"]).status.code(), Some(1));
    assert_eq!(run(&["reduce", "--graph", "{v1:a, v2:b ; v1->v2}", "--order", "v1,v2"]).status.code(), Some(1));
    assert_eq!(run(&["matrix", "--weight", "4", "--gens", "a,b", "--multidegree", "3,2"]).status.code(), Some(1));
    assert_eq!(run(&["eval", "--word", "a"]).status.code(), Some(2));
}

#[test]
fn json_envelope_agrees_with_text() {
    let (code, v) = json(&["eval", "--symbol", "((a)b)a", "--word", WORD]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "eval");
    assert_eq!(v["value"], 4);
    assert_eq!(v["input"]["symbol"], "((a)b)a");
    assert!(v["undefined_at"].is_null());
    assert!(v["timing_ms"].is_number());

    let (code, v) = json(&["eval", "--symbol", "(a)b", "--word", "a b"]);
    assert_eq!(code, 1);
    assert_eq!(v["undefined_at"], "a");

    let (_, v) = json(&["pair", "--graphsum", "1/3 * {v1:a, v2:b ; v1->v2}", "--lie", "[a,b]"]);
    assert_eq!(v["value"], "1/3");

    let (_, v) = json(&["matrix", "--weight", "5", "--gens", "a,b", "--multidegree", "3,2"]);
    assert_eq!(v["value"], serde_json::json!([[4, -2], [4, 4]]));

    let (code, v) = json(&["eval", "--symbol", "((a", "--word", "a"]);
    assert_eq!(code, 2);
    assert!(v["error"].is_string());

    for args in [
        &["fox", "--word", WORD, "--seq", "a,b,a", "--full"][..],
        &["reduce", "--graph", "{v1:a,v2:b,v3:c; v1->v2, v2->v3}"][..],
        &["coords", "--word", "[[a,b],c]", "--weight", "3"][..],
    ] {
        let (_, v) = json(args);
        assert_eq!(v["value"].as_str().unwrap(), ok(args));
    }
}

#[test]
fn timing_goes_to_stderr() {
    let o = run(&["--timing", "fox", "--word", "a", "--seq", "a"]);
    assert_eq!(stdout(&o), "1");
    assert!(String::from_utf8_lossy(&o.stderr).contains("ms"));
}

#[test]
fn selfcheck_is_deterministic_and_passes() {
    let first = ok(&["selfcheck", "--seed", "5"]);
    assert_eq!(first.lines().count(), 12);
    assert!(first.lines().all(|l| l.starts_with("PASS")));
    assert_eq!(ok(&["selfcheck", "--seed", "5"]), first);
}
