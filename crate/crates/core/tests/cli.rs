use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_qgrass"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

fn golden(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/golden");
    p.push(name);
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn chart_prints_the_two_loop_equation() {
    let file = data("two_loops.qg");
    let (out, _, code) = run(&["chart", &file, "--top", "1", "--dim", "4", "--skeleton", "e1,w1,a1*w1,a2"]);
    assert_eq!(code, 0);
    for i in 1..=4 {
        assert!(out.contains(&format!("X{i} = ")), "{out}");
    }
    assert!(out.contains("polynomials: 1\n  1 - X1*X4 = 0\n"), "{out}");
}

#[test]
fn pruned_skeletons() {
    let file = data("loop_and_arrow.qg");
    let (out, _, code) = run(&["skeletons", &file, "--top", "1", "--dim", "3", "--prune"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{e1, w, a}\n{e1, w, a*w}\n2 skeletons\n");
    let (out, _, _) = run(&["skeletons", &file, "--top", "1", "--dim", "3"]);
    assert!(out.ends_with("3 skeletons\n"), "{out}");
}

#[test]
fn moduli_check_on_a2() {
    let (out, _, code) = run(&["moduli-check", &data("a2.qg"), "--top", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "eJe = 0: moduli space exists for all d\n");
}

#[test]
fn negative_checks_exit_one() {
    let file = data("loop_and_arrow.qg");
    let (out, _, code) = run(&["moduli-check", &file]);
    assert_eq!(code, 1, "{out}");
    let (out, _, code) = run(&["invariant-check", &file, "--sub", "a"]);
    assert_eq!(code, 1);
    assert!(out.contains("e1 ↦ w"), "{out}");
    let (_, _, code) = run(&["invariant-check", &file, "--sub", "a*w"]);
    assert_eq!(code, 0);
}

#[test]
fn input_errors_exit_two() {
    let (_, err, code) = run(&["chart", &data("doubled_vee.qg"), "--skeleton", "e1"]);
    assert_eq!(code, 2);
    assert!(err.contains("not squarefree"), "{err}");
    let (_, _, code) = run(&["skeletons", "/nonexistent/problem.qg"]);
    assert_eq!(code, 2);
    let (_, err, code) = run(&["layering", &data("loop_and_arrow.qg"), "--sub", "b"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown arrow"), "{err}");
}

#[test]
fn json_matches_golden_files() {
    let cases: [(&[&str], &str); 5] = [
        (&["skeletons", "loop_and_arrow.qg", "--prune"], "skeletons_loop_and_arrow.json"),
        (&["chart", "two_loops.qg", "--skeleton", "e1,w1,a1*w1,a2"], "chart_two_loops.json"),
        (&["enumerate", "loop_and_arrow.qg"], "enumerate_loop_and_arrow.json"),
        (&["moduli-check", "loop_and_arrow.qg"], "moduli_loop_and_arrow.json"),
        (&["local-type", "truncated_loop.qg"], "local_type_truncated_loop.json"),
    ];
    for (args, file) in cases {
        let mut full: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        full[1] = data(args[1]);
        full.push("--json".into());
        let refs: Vec<&str> = full.iter().map(String::as_str).collect();
        let (out, _, _) = run(&refs);
        assert_eq!(out, golden(file), "{file}");
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["schema_version"], "1");
    }
}

#[test]
fn output_is_deterministic() {
    let file = data("two_loops.qg");
    let args = ["cross-validate", file.as_str(), "--q", "2"];
    let (a, _, code) = run(&args);
    let (b, _, _) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    assert!(!a.contains("MISMATCH"));
}

#[test]
fn enumerate_hereditary_and_non_squarefree() {
    let (out, _, code) = run(&["enumerate", &data("three_and_three.qg")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("points: 100 over F2\n"), "{}", &out[..80]);
    assert!(out.contains("layering classes: 4\n"));
    let (out, _, code) = run(&["enumerate", &data("doubled_vee.qg")]);
    assert_eq!(code, 0);
    assert!(out.contains("  (S1^2, S2⊕S3): 9 points\n"), "{out}");
}

#[test]
fn stdin_and_field_override() {
    use std::io::Write;
    let text = std::fs::read_to_string(data("loop_and_arrow.qg")).unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_qgrass"))
        .args(["layering", "-", "--field", "F5", "--sub", "a"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "(S1, S1, S2)\n");
}

#[test]
fn orbit_dims_and_hom() {
    let file = data("truncated_loop.qg");
    let (out, _, code) = run(&["orbit-dims", &file, "--sub", "a, a*w"]);
    assert_eq!(code, 0);
    assert!(out.contains("orbit dimension: 2\n"), "{out}");
    assert!(out.contains("unipotent orbit dimension: 2\n"), "{out}");
    let (out, _, _) = run(&["hom", &data("loop_and_arrow.qg")]);
    assert_eq!(out, "dim End(P) = 2\ndim Hom(P, JP) = 1\n");
}
