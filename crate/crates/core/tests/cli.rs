use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

use ftfa_kit::cli;

struct Run {
    code: i32,
    out: String,
    err: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.out).unwrap_or_else(|e| panic!("{e}: {}", self.out))
    }
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ftfa-kit").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const INDEX_THREE: &str =
    r#"{"n":2,"m":1,"generators":[{"word":"x","vec":[2]},{"word":"y","vec":[0]}]}"#;
const INDEX_THREE_PARTNER: &str = r#"{"n":2,"m":1,"generators":[{"word":"x","vec":[0]},{"word":"y","vec":[0]},{"word":"1","vec":[3]}]}"#;
const DIAGONAL: &str =
    r#"{"n":2,"m":1,"generators":[{"word":"x","vec":[1]},{"word":"y","vec":[1]}]}"#;
const ANTI: &str = r#"{"n":2,"m":1,"generators":[{"word":"x","vec":[1]},{"word":"y","vec":[-1]}]}"#;

#[test]
fn basis_output_is_deterministic_and_reloadable() {
    let dir = TempDir::new().unwrap();
    let input = write(
        dir.path(),
        "h.json",
        r#"{"n":2,"m":2,"generators":[{"word":"xy","vec":[1,0]},{"word":"yx","vec":["0","2"]},{"word":"XX","vec":[0,0]}]}"#,
    );
    let first = run(&["basis", s(&input)]);
    assert_eq!(first.code, 0, "{}", first.err);
    let second = run(&["basis", s(&input)]);
    assert_eq!(first.out, second.out);
    assert_eq!(first.json()["schema"], "ftfa-kit/1");

    let again = write(dir.path(), "basis.json", &first.out);
    let third = run(&["basis", s(&again)]);
    assert_eq!(third.code, 0, "{}", third.err);
    assert_eq!(third.out, first.out);
}

#[test]
fn finite_index_intersection() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", INDEX_THREE);
    let b = write(dir.path(), "b.json", INDEX_THREE_PARTNER);
    let r = run(&["intersect", s(&a), s(&b)]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v = r.json();
    assert_eq!(v["fg"], true);
    assert_eq!(v["basis"]["pairs"].as_array().unwrap().len(), 4);

    let t = run(&["--text", "intersect", s(&a), s(&b)]);
    assert_eq!(t.out.trim(), "<y, xxxt^(6), xyX, Xyx>");
}

#[test]
fn infinite_intersection_carries_a_certificate() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", DIAGONAL);
    let b = write(dir.path(), "b.json", ANTI);
    let r = run(&["intersect", s(&a), s(&b)]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v = r.json();
    assert_eq!(v["fg"], false);
    assert!(v.get("basis").is_none_or(Value::is_null));
    let cert = &v["certificate"];
    assert!(cert["rank"].as_u64().unwrap() < cert["r"].as_u64().unwrap());
}

#[test]
fn coset_cap_flag_and_environment() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", INDEX_THREE);
    let b = write(dir.path(), "b.json", INDEX_THREE_PARTNER);
    let r = run(&["intersect", s(&a), s(&b), "--coset-cap", "2"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.json()["error"]["code"], "INDEX_CAP_EXCEEDED");
    assert!(r.err.starts_with("error: INDEX_CAP_EXCEEDED"));

    let status = Command::new(env!("CARGO_BIN_EXE_ftfa-kit"))
        .args(["intersect", s(&a), s(&b)])
        .env("FTFA_COSET_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(2));
    let status = Command::new(env!("CARGO_BIN_EXE_ftfa-kit"))
        .args(["intersect", s(&a), s(&b)])
        .env("FTFA_COSET_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
}

#[test]
fn automaton_dump() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", INDEX_THREE);
    let r = run(&["basis", s(&a), "--dump-automaton"]);
    assert_eq!(r.code, 0);
    let auto = &r.json()["automaton"];
    assert!(auto.is_object());
    assert!(run(&["basis", s(&a)]).json().get("automaton").is_none());
}

#[test]
fn membership() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", INDEX_THREE);
    let yes = run(&["member", s(&a), "xxyX", "--vec", "2"]);
    assert_eq!(yes.json()["member"], true);
    let no = run(&["member", s(&a), "xxyX", "--vec", "-2"]);
    assert_eq!(no.json()["member"], false);
    let text = run(&["--text", "member", s(&a), "y"]);
    assert_eq!(text.out.trim(), "true");
    let bad = run(&["member", s(&a), "xq"]);
    assert_eq!(bad.code, 1);
    let short = run(&["member", s(&a), "x", "--vec", "1,2"]);
    assert_eq!(short.code, 1);
}

#[test]
fn configuration_pipeline() {
    let dir = TempDir::new().unwrap();
    let c = write(
        dir.path(),
        "c.json",
        r#"{"k":3,"support":[[1,2],[2,3],[1,2,3]]}"#,
    );
    let check = run(&["conf-check", s(&c)]);
    assert_eq!(check.json()["howson"], false);

    let free = run(&["conf-realize", s(&c), "--free"]);
    assert_eq!(free.code, 2);
    assert_eq!(free.json()["error"]["code"], "NOT_HOWSON");

    let realized = run(&["conf-realize", s(&c)]);
    assert_eq!(realized.code, 0, "{}", realized.err);
    assert_eq!(realized.json()["m"], 1 + 1 + 2);
    let r = write(dir.path(), "r.json", &realized.out);
    for extra in [&[][..], &["--parallel"][..]] {
        let mut args = vec!["conf-verify", s(&c), s(&r)];
        args.extend_from_slice(extra);
        let v = run(&args);
        assert_eq!(v.code, 0, "{}", v.err);
        let report = v.json();
        assert_eq!(report["pass"], true);
        assert_eq!(report["subsets"].as_array().unwrap().len(), 7);
    }

    let bound = run(&["conf-obstruction", s(&c)]);
    assert!(bound.json()["bound"].as_u64().unwrap() <= 4);
}

#[test]
fn oracle_ball_intersection() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", DIAGONAL);
    let b = write(dir.path(), "b.json", ANTI);
    let seq = run(&["oracle-ball", s(&a), s(&b), "--len", "4", "--norm", "2"]);
    let par = run(&[
        "oracle-ball",
        s(&a),
        s(&b),
        "--len",
        "4",
        "--norm",
        "2",
        "--parallel",
    ]);
    assert_eq!(seq.code, 0, "{}", seq.err);
    assert_eq!(seq.out, par.out);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("nope.json");
    assert_eq!(run(&["basis", s(&missing)]).code, 1);
    let junk = write(dir.path(), "junk.json", "{not json");
    let r = run(&["basis", s(&junk)]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json()["error"]["code"], "INPUT_ERROR");
    let t = run(&["--text", "basis", s(&junk)]);
    assert!(t.out.is_empty());
    assert!(t.err.contains("INPUT_ERROR"));

    let a = write(dir.path(), "a.json", INDEX_THREE);
    let other = write(dir.path(), "o.json", r#"{"n":2,"m":2,"generators":[]}"#);
    let mismatch = run(&["intersect", s(&a), s(&other)]);
    assert_eq!(mismatch.code, 2);
    assert_eq!(mismatch.json()["error"]["code"], "AMBIENT_MISMATCH");

    assert_eq!(run(&["frobnicate"]).code, 1);
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&["--version"]).code, 0);
}
