use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn acm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_acm"))
        .args(args)
        .env_remove("ACM_FIELD")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn ok(args: &[&str]) -> Value {
    let out = acm(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stdout)
    );
    json(&out)
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn spec_examples() {
    let v = ok(&["acm", "--fixture", "l4"]);
    assert_eq!(v["acm"], true);
    assert_eq!(v["hp"], "4*m + 1");
    assert_eq!(ok(&["tangent", "--fixture", "rn4"])["tangent_dim"], 21);

    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        &dir,
        "bad.ideal",
        "ring QQ vars X0..X3 order grevlex\nX1 + \n",
    );
    let out = acm(&["member", "--ideal", &bad, "--poly", "X1"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "syntax");
    let msg = v["error"]["message"].as_str().unwrap();
    assert!(msg.contains("bad.ideal:2: syntax error at offset"), "{msg}");
}

#[test]
fn every_verb_answers() {
    let dir = tempfile::tempdir().unwrap();
    let ci = write(
        &dir,
        "ci.ideal",
        "# a complete intersection\nring QQ vars X0..X3 order grevlex\nX1^2\nX2^2\n",
    );
    let line = write(
        &dir,
        "line.ideal",
        "ring QQ vars X0..X3 order grevlex\nX1\nX2\n",
    );

    let gb = ok(&["gb", "--fixture", "rn3"]);
    assert_eq!(gb["groebner_basis"].as_array().unwrap().len(), 3);
    assert_eq!(gb["ring"], "QQ[X0..X3]");
    assert_eq!(gb["order"], "grevlex");

    assert_eq!(
        ok(&["nf", "--fixture", "rn3", "--poly", "X1^2*X3"])["normal_form"],
        "X0*X2*X3"
    );
    assert_eq!(
        ok(&["member", "--fixture", "rn3", "--poly", "X1*X3 - X2^2"])["member"],
        true
    );
    assert_eq!(
        ok(&["member", "--fixture", "rn3", "--poly", "X1*X3"])["member"],
        false
    );

    let meet = ok(&["intersect", "--ideal", &line, "--with", &ci]);
    assert_eq!(
        meet["minimal_generators"],
        serde_json::json!(["X2^2", "X1^2"])
    );
    let colon = ok(&["colon", "--ideal", &ci, "--with", &line]);
    assert_eq!(colon["minimal_generators"].as_array().unwrap().len(), 3);
    let colon = ok(&["colon", "--ideal", &ci, "--poly", "X1"]);
    assert_eq!(colon["groebner_basis"], serde_json::json!(["X1", "X2^2"]));
    let sat = ok(&["saturate", "--fixture", "lines2"]);
    assert_eq!(sat["groebner_basis"].as_array().unwrap().len(), 4);
    let el = ok(&["eliminate", "--fixture", "l4", "--vars", "X0"]);
    assert_eq!(el["minimal_generators"].as_array().unwrap().len(), 6);

    let h = ok(&["hilbert", "--fixture", "rn3"]);
    assert_eq!(
        (h["degree"].as_i64(), h["genus"].as_i64()),
        (Some(3), Some(0))
    );
    assert_eq!(
        ok(&["jactangent", "--fixture", "rn4", "--point", "1,0,0,0,0"])["tangent_dim"],
        1
    );
    let syz = ok(&["syzygy", "--fixture", "rn4"]);
    assert_eq!(
        syz["degree_counts"],
        serde_json::json!([{"degree": 3, "count": 8}])
    );
    let split = ok(&["split", "--fixture", "type4", "--form", "X4"]);
    assert_eq!(split["gamma_degree"], 1);
    assert_eq!(split["c_prime_degree"], 3);
    let proj = ok(&["project", "--fixture", "rn4", "--point", "0,0,1,0,0"]);
    assert_eq!(proj["image"]["ring"], "QQ[X0..X3]");
    let ln = ok(&["link", "--ideal", &line, "--with", &ci]);
    assert_eq!(ln["double_link_matches"], true);
    let l43 = ok(&[
        "lemma43",
        "--hyperplane",
        "X4",
        "--forms",
        "X1,X2,X3",
        "--quadrics",
        "X0*X2 - X1^2,X0*X3 - X1*X2,X1*X3 - X2^2",
    ]);
    assert_eq!(l43["holds"], true);
    let fam = ok(&["family", "--fixture", "family:p25r1"]);
    assert_eq!(fam["constant"], true);
    assert_eq!(fam["limit_matches"], true);
    let list = ok(&["gallery"]);
    assert!(list
        .as_array()
        .unwrap()
        .iter()
        .any(|f| f["id"] == "family:sec12"));
    assert_eq!(ok(&["gallery", "--fixture", "type2"])["id"], "type2");
}

#[test]
fn family_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let fam = write(
        &dir,
        "fam.ideal",
        "ring QQ vars X0..X3 order grevlex\nX1^2\nX1*X2\nX2^2 + t*X1*X3\n",
    );
    let limit = write(
        &dir,
        "limit.ideal",
        "ring QQ vars X0..X3 order grevlex\nX1^2\nX1*X2\nX2^2\n",
    );
    let v = ok(&["family", "--ideal", &fam, "--with", &limit]);
    assert_eq!(v["constant"], true);
    assert_eq!(v["limit_matches"], true);
    let out = acm(&["family", "--ideal", &fam]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_paper_reports_and_exits_one() {
    let out = acm(&["verify-paper", "--instances", "5"]);
    assert_eq!(out.status.code(), Some(1));
    let items = json(&out);
    let items = items.as_array().unwrap();
    for key in [
        "id",
        "description",
        "paper_ref",
        "expected",
        "computed",
        "pass",
    ] {
        assert!(items[0].get(key).is_some(), "{key}");
    }
    let failing: Vec<&str> = items
        .iter()
        .filter(|i| i["pass"] == false)
        .map(|i| i["id"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["acm:lines2"]);
}

#[test]
fn output_is_reproducible() {
    for args in [
        &["gb", "--fixture", "type3"][..],
        &["project", "--fixture", "l4", "--seed", "7"],
        &["verify-paper", "--instances", "3", "--field", "Fp:32003"],
        &["tangent", "--fixture", "l4", "--pretty"],
    ] {
        let a = acm(args);
        let b = acm(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let a = acm(&["project", "--fixture", "l4", "--seed", "7"]);
    let b = acm(&["project", "--fixture", "l4", "--seed", "8"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_are_json() {
    for args in [
        &["frobnicate"][..],
        &["gb"],
        &["gb", "--fixture", "nope"],
        &["gb", "--fixture", "rn3", "--field", "Fp:8"],
        &["gb", "--fixture", "rn3", "--order", "sideways"],
        &["hilbert", "--fixture", "rn3", "--degree-bound", "2"],
        &["gb", "--fixture", "rn3", "--ideal", "x.ideal"],
        &["gb", "--ideal", "/nonexistent/file.ideal"],
        &[
            "tangent",
            "--fixture",
            "lines2",
            "--field",
            "QQ",
            "--degree-bound",
            "x",
        ],
    ] {
        let out = acm(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let v = json(&out);
        assert!(v["error"]["kind"].is_string(), "{args:?}");
        assert!(out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn field_from_environment_and_flags() {
    let run = |env: Option<&str>, args: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_acm"));
        c.args(args).env_remove("ACM_FIELD");
        if let Some(f) = env {
            c.env("ACM_FIELD", f);
        }
        json(&c.output().unwrap())
    };
    assert_eq!(
        run(Some("Fp:101"), &["gb", "--fixture", "rn3"])["ring"],
        "Fp:101[X0..X3]"
    );
    assert_eq!(
        run(Some("Fp:101"), &["gb", "--fixture", "rn3", "--field", "QQ"])["ring"],
        "QQ[X0..X3]"
    );
    assert_eq!(
        run(None, &["gb", "--fixture", "rn3", "--order", "lex"])["order"],
        "lex"
    );
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        &dir,
        "c.ideal",
        "ring Fp:7 vars X0..X2 order grevlex\nX0*X1\n",
    );
    assert_eq!(
        run(Some("Fp:101"), &["gb", "--ideal", &file])["ring"],
        "Fp:7[X0..X2]"
    );
    assert_eq!(
        run(Some("Fp:101"), &["gb", "--ideal", &file, "--field", "QQ"])["ring"],
        "QQ[X0..X2]"
    );
}

#[test]
fn out_and_pretty() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = acm(&["acm", "--fixture", "l4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["acm"], true);

    let out = acm(&["acm", "--fixture", "l4", "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.lines()
            .any(|l| l.starts_with("hp") && l.ends_with("4*m + 1")),
        "{text}"
    );
}
