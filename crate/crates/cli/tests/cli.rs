use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn upkernel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_upkernel")).args(args).env_remove("UPKERNEL_ORACLE_LIMIT").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn check_reports_each_predicate() {
    let o = upkernel(&["check", &data("fig1.json"), "--set", "x1,x3"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("independent: true"));
    assert!(out.contains("kernel: false (zero-color vertex in set? no;"), "{out}");
    assert!(out.contains("x0, x2 not absorbed"), "{out}");

    let o = upkernel(&["check", &data("fig9.json"), "--set", "b,d"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("kernel: true"));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"name\": \"b\",\n  \"vertices\": [,]\n}\n").unwrap();
    let o = upkernel(&["check", bad.to_str().unwrap(), "--set", ""]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.json:3:"), "{}", String::from_utf8_lossy(&o.stderr));

    assert_eq!(code(&upkernel(&["check", &data("fig1.json"), "--set", "nope"])), 2);
    assert_eq!(code(&upkernel(&["enumerate", "/no/such/file.json"])), 2);
    assert_eq!(code(&upkernel(&["frobnicate"])), 2);
    assert_eq!(code(&upkernel(&["verify", "--suite", "unknown"])), 2);
}

#[test]
fn enumerate_lists_and_counts() {
    let o = upkernel(&["enumerate", &data("fig1.json")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("count: 0\n"));

    let o = upkernel(&["enumerate", &data("fig8-line.json")]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "{(a,b), (c,d)}\ncount: 1\n");

    let dir = tempfile::tempdir().unwrap();
    let single = dir.path().join("v.json");
    std::fs::write(&single, r#"{"name":"v","vertices":[{"id":"v","color":1}],"arcs":[]}"#).unwrap();
    let o = upkernel(&["enumerate", single.to_str().unwrap()]);
    assert_eq!(stdout(&o), "{v}\ncount: 1\n");
    let o = upkernel(&["enumerate", single.to_str().unwrap(), "--count-only"]);
    assert_eq!(stdout(&o), "count: 1\n");
}

#[test]
fn oracle_limit_from_flag_and_environment() {
    let torus = data("fig6-torus.json");
    let o = upkernel(&["enumerate", &torus]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("oracle limit of 22"));
    assert_eq!(code(&upkernel(&["enumerate", &torus, "--oracle-limit", "24"])), 0);
    let o = Command::new(env!("CARGO_BIN_EXE_upkernel")).args(["enumerate", &torus, "--count-only"]).env("UPKERNEL_ORACLE_LIMIT", "30").output().unwrap();
    assert_eq!((code(&o), stdout(&o)), (0, "count: 1\n".to_string()));
}

#[test]
fn build_writes_documents() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("line.json");
    let o = upkernel(&["build", &data("fig8-line-recipe.json"), "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let built = std::fs::read_to_string(&out).unwrap();
    assert_eq!(built, std::fs::read_to_string(data("fig8-line.json")).unwrap());
    let doc = upkernel_cli::GraphDocument::parse(&built, "line").unwrap();
    assert_eq!(doc.vertices.iter().map(|v| v.color).collect::<Vec<_>>(), [2, 1, 4]);

    let o = upkernel(&["build", &data("fig6-torus.json")]);
    let doc = upkernel_cli::GraphDocument::parse(&stdout(&o), "torus").unwrap();
    assert_eq!((doc.vertices.len(), doc.arcs.len()), (24, 48));
    assert_eq!(doc.vertices[1].id, "(x0,x1)");

    let o = upkernel(&["build", &data("zykov-c3.json")]);
    assert_eq!(upkernel_cli::GraphDocument::parse(&stdout(&o), "z").unwrap().vertices.len(), 6);

    // a plain document is not a recipe
    assert_eq!(code(&upkernel(&["build", &data("fig1.json")])), 2);
}

#[test]
fn build_is_deterministic() {
    let a = stdout(&upkernel(&["build", &data("fig7.json")]));
    let b = stdout(&upkernel(&["build", &data("fig7.json")]));
    assert_eq!(a, b);
}

#[test]
fn decide_prints_verdict_and_clause() {
    let o = upkernel(&["decide", &data("fig1.json"), "--family", "path"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).lines().next(), Some("false: c(x0)>c(x1) violated (0 ≤ 1)"));

    let o = upkernel(&["decide", &data("fig6-torus.json"), "--family", "torus"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("witness: {(x0,x0), (x0,x2)"));

    let o = upkernel(&["decide", &data("fig1.json"), "--family", "cycle"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a directed cycle"));
    assert_eq!(code(&upkernel(&["decide", &data("fig1.json"), "--family", "torus"])), 2);
    assert_eq!(code(&upkernel(&["decide", &data("fig3-grid.json"), "--family", "strong-grid"])), 2);
}

#[test]
fn decide_pendant_by_ids() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("p.json");
    // a 2-cycle a <-> b with pendant sink p hanging off a
    std::fs::write(
        &f,
        r#"{"name":"p","vertices":[{"id":"p","color":3},{"id":"a","color":1},{"id":"b","color":2}],
            "arcs":[["a","b"],["b","a"],["a","p"]]}"#,
    )
    .unwrap();
    let o = upkernel(&["decide", f.to_str().unwrap(), "--family", "pendant", "--pendants", "p"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("witness: {p, b}"), "{}", stdout(&o));
    assert_eq!(code(&upkernel(&["decide", f.to_str().unwrap(), "--family", "pendant", "--pendants", "b"])), 2);
    assert_eq!(code(&upkernel(&["decide", f.to_str().unwrap(), "--family", "pendant"])), 2);
}

#[test]
fn verify_reports_and_writes_counterexamples() {
    let dir = tempfile::tempdir().unwrap();
    let cx = dir.path().join("cx.json");
    let o = upkernel(&["verify", "--suite", "zykov-odd", "--counterexample", cx.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("100/100 instances with 0 kernels"));
    assert!(!cx.exists());

    let o = upkernel(&["verify", "--suite", "count-theorem", "--samples", "200", "--seed", "7", "--counterexample", cx.to_str().unwrap()]);
    let out = stdout(&o);
    assert!(out.contains("nonzero source colors: 200/200 consistent"), "{out}");
    // the statement without the nonzero-color condition fails on this seed
    assert_eq!(code(&o), 1);
    let doc = upkernel_cli::GraphDocument::parse(&std::fs::read_to_string(&cx).unwrap(), "cx").unwrap();
    assert!(doc.name.starts_with("count-theorem:"));
    assert!(doc.validate().is_ok());

    let again = upkernel(&["verify", "--suite", "count-theorem", "--samples", "200", "--seed", "7", "--counterexample", cx.to_str().unwrap()]);
    assert_eq!(stdout(&again), out);
}
