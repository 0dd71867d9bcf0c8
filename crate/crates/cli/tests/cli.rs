use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn gpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn compute_triangle_ubar() {
    let o = gpoly(&["compute", "ubar", &data("triangle.el")]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(
        stdout(&o),
        "z[1,0]^3 + 3*z[1,0]*z[2,0] + 3*z[3,0] + z[3,1]\n"
    );
}

#[test]
fn compute_path_extended_polychromate() {
    let o = gpoly(&["compute", "ext-polychromate", &data("path2.el")]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "x2[1,0]^3 + x2[1,0]*x2[2,0] + 2*x2[1,0]*x2[2,1] + x2[3,2]\n"
    );
}

#[test]
fn compute_v_function_of_a_loop() {
    let o = gpoly(&["compute", "v-function", &data("loop1.el")]);
    assert_eq!(stdout(&o), "yk[1]\n");
    let o = gpoly(&["compute", "v-function", "--route", "recurrence", &data("loop1.el")]);
    assert_eq!(stdout(&o), "yk[1]\n");
}

#[test]
fn routes_agree() {
    for inv in ["u", "tutte", "chromatic", "polychromate", "ext-polychromate", "ybar", "chromatic-symmetric"] {
        let a = gpoly(&["compute", inv, &data("g1.el")]);
        let b = gpoly(&["compute", inv, "--route", "specialization", &data("g1.el")]);
        assert_eq!(code(&a), 0, "{inv}: {}", stderr(&a));
        assert_eq!(stdout(&a), stdout(&b), "{inv}");
    }
}

#[test]
fn compute_json_carries_id_and_value() {
    let o = gpoly(&["compute", "u", "--format", "json", &data("triangle.el")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["graph"], "Bw");
    assert_eq!(v["invariant"], "u");
    assert_eq!(v["value"].as_array().unwrap().len(), 4);
}

#[test]
fn compute_every_graph6_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.g6");
    std::fs::write(&path, "Bw\nA_\n").unwrap();
    let o = gpoly(&["compute", "chromatic", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn compare_loop_examples() {
    let o = gpoly(&["compare", "u", &data("g1.el"), &data("g2.el")]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "EQUAL\n");
    let o = gpoly(&["compare", "ubar", &data("g1.el"), &data("g2.el")]);
    assert_eq!(code(&o), 1);
    assert_eq!(
        stdout(&o),
        "DIFFER\nfirst difference at z[1,0]*z[2,1]: 1 vs 2\n"
    );
}

#[test]
fn compare_brylawski_pair() {
    for inv in ["u", "ubar"] {
        let o = gpoly(&["compare", inv, &data("brylawski1.el"), &data("brylawski2.el")]);
        assert_eq!(code(&o), 0, "{inv}: {}", stderr(&o));
        assert_eq!(stdout(&o), "EQUAL\n");
    }
}

#[test]
fn compare_paired_values() {
    let o = gpoly(&["compare", "ybar", &data("g1.el"), &data("g2.el"), "--format", "json"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "DIFFER");
    assert!(v["monomial"].as_str().unwrap().starts_with("pbar["));
}

#[test]
fn parse_error_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.el");
    std::fs::write(&path, "3 2\n1 2\n").unwrap();
    let o = gpoly(&["compute", "u", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line"), "{}", stderr(&o));
    assert_eq!(code(&gpoly(&["compute", "nope", &data("g1.el")])), 2);
    assert_eq!(code(&gpoly(&["compute", "u", "/nonexistent/file"])), 2);
}

#[test]
fn guard_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k6.g6");
    std::fs::write(&path, "E~~w\n").unwrap();
    let p = path.to_str().unwrap();
    // 15 edges: fine for subsets, but 6^6 colourings only with --truncate
    let o = gpoly(&["compute", "polychromate", p]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let o = gpoly(&["compute", "chromatic-symmetric", p, "--truncate", "20"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("--force"));
    let k8 = dir.path().join("k8.g6");
    std::fs::write(&k8, "G~~~~{\n").unwrap();
    assert_eq!(code(&gpoly(&["compute", "u", k8.to_str().unwrap()])), 3);
}

#[test]
fn precondition_exits_4() {
    let o = gpoly(&["compute", "stability", &data("g1.el")]);
    assert_eq!(code(&o), 4);
    assert!(stderr(&o).contains("loopless"));
    let o = gpoly(&["compute", "two-polymatroid", &data("loop1.el")]);
    assert_eq!(code(&o), 4);
}

#[test]
fn verify_suites() {
    let o = gpoly(&["verify", "paper-examples"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).starts_with("paper-examples: PASS"));
    let o = gpoly(&["verify", "recurrence", "--max-edges", "3"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = gpoly(&["verify", "equivalence-chain", "--max-vertices", "4", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["passed"], true);
    assert_eq!(code(&gpoly(&["verify", "bogus"])), 2);
}

#[test]
fn search_loop_examples() {
    let o = gpoly(&["search", &data("g1.el"), &data("g2.el")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("counterexamples: 1\n"), "{out}");
    assert!(out.contains("DISTINCT sha256:"));
    assert!(stderr(&o).contains("elapsed"));
    let o = gpoly(&["search", "--loopless", &data("g1.el"), &data("g2.el")]);
    let out = stdout(&o);
    assert!(out.contains("skipped with loops: 2\n"));
    assert!(out.contains("counterexamples: 0\n"));
}

#[test]
fn search_brylawski_pair_shares_one_bucket() {
    let o = gpoly(&["search", &data("brylawski1.el"), &data("brylawski2.el"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["stats"]["buckets"], 1);
    assert_eq!(v["groups"][0]["graphs"].as_array().unwrap().len(), 2);
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn search_is_deterministic_across_jobs() {
    let one = gpoly(&["search", "--enumerate", "5", "--jobs", "1", "--format", "json"]);
    let four = gpoly(&["search", "--enumerate", "5", "--jobs", "4", "--format", "json"]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    let v: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(v["stats"]["graphs_processed"], 1 + 1 + 4 + 38 + 728);
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn search_graph6_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.g6");
    std::fs::write(&path, "Bw\nzz!\nBg\n").unwrap();
    let p = path.to_str().unwrap();
    let o = gpoly(&["search", "--graphs", p]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 2"));
    let o = gpoly(&["search", "--graphs", p, "--lenient"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("graphs read: 2\n"));
    assert_eq!(code(&gpoly(&["search", "--enumerate", "8"])), 4);
    assert_eq!(code(&gpoly(&["search"])), 2);
}

#[test]
fn convert_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let ubar = dir.path().join("ubar.json");
    let o = gpoly(&["compute", "ubar", "--format", "json", &data("path2.el")]);
    std::fs::write(&ubar, &o.stdout).unwrap();
    let u = ubar.to_str().unwrap();

    let ybar = dir.path().join("ybar.json");
    let o = gpoly(&["convert", "--from", "ubar", "--to", "ybar-p", u]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    std::fs::write(&ybar, &o.stdout).unwrap();
    let y = ybar.to_str().unwrap();

    let back = gpoly(&["convert", "--from", "ybar-p", "--to", "ubar", y, "--format", "text"]);
    let direct = gpoly(&["compute", "ubar", &data("path2.el")]);
    assert_eq!(stdout(&back), stdout(&direct));

    let chi = gpoly(&["convert", "--from", "ybar-p", "--to", "ext-polychromate", y, "--format", "text"]);
    let direct = gpoly(&["compute", "ext-polychromate", &data("path2.el")]);
    assert_eq!(stdout(&chi), stdout(&direct));

    let ym = gpoly(&["convert", "--from", "ubar", "--to", "ybar-m", u]);
    let m: serde_json::Value = serde_json::from_slice(&ym.stdout).unwrap();
    assert_eq!(m["basis"], "m");

    let plain = gpoly(&["convert", "--from", "ubar", "--to", "polychromate", u, "--format", "text"]);
    let direct = gpoly(&["compute", "polychromate", &data("path2.el")]);
    assert_eq!(stdout(&plain), stdout(&direct));

    let upath = dir.path().join("u.json");
    let o = gpoly(&["compute", "u", "--format", "json", &data("path2.el")]);
    std::fs::write(&upath, &o.stdout).unwrap();
    let up = upath.to_str().unwrap();
    let plain = gpoly(&["convert", "--from", "u", "--to", "polychromate", up, "--format", "text"]);
    assert_eq!(stdout(&plain), stdout(&direct));
    assert_eq!(code(&gpoly(&["convert", "--from", "u", "--to", "ubar", up])), 4);
}

#[test]
fn convert_rejects_bad_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{nope").unwrap();
    let o = gpoly(&["convert", "--from", "ubar", "--to", "ybar-p", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}
