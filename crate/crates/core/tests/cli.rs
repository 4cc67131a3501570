use std::io::Write;
use std::process::{Command, Output, Stdio};

fn vaip(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_vaip"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const CORPUS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/base.txt");

#[test]
fn compute_formats() {
    let o = vaip(&["compute", "-"], "O1+ U2+ U1+ O2+\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).split('\t').next(), Some("t1 + t1^(-1) - 2"));

    let o = vaip(&["compute", "-", "--format", "json"], "O1+ ; U1+\n");
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["weights"], serde_json::json!([-1, 1]));
    assert_eq!(v["compatible"], false);
    let p = vaip::MVPolynomial::from_json_value(v["polynomial"].clone()).unwrap();
    assert_eq!(p.to_string(), "t1^(A-B-1) - 1");

    let o = vaip(&["compute", "-", "--format", "latex"], "O1+ U2+ U1+ O2+\n");
    assert!(stdout(&o).starts_with("t_{1} + t_{1}^{-1} - 2\t"));

    let o = vaip(&["compute", "-", "--collapse", "n-form"], "O1+ O2+ U1+ U3+ ; O3+ U2+\n");
    assert!(stdout(&o).starts_with("t^(-N) + t + t^(N-1) - 3\t"));

    let o = vaip(&["compute", "-", "--order", "2,1"], "O1+ ; U1+\n");
    assert!(stdout(&o).starts_with("t2^(B-A-1) - 1\t1,-1\t"), "{}", stdout(&o));
}

#[test]
fn compute_input_errors() {
    let o = vaip(&["compute", "-"], "O1+ U2+ U1+ O2+\n\nO1+ U1-\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(vaip(&["compute", "-", "--collapse", "single"], "O1+ ; U1+\n").status.code(), Some(2));
    assert_eq!(vaip(&["compute", "/nonexistent/file"], "").status.code(), Some(2));
}

#[test]
fn fuzz_command() {
    let o = vaip(&["fuzz", CORPUS, "--seed", "1", "--moves", "20", "--count", "4"], "");
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = vaip(&["fuzz", "-", "--seed", "1", "--moves", "20", "--count", "100"], "O1+ U2+ U1+ O2+\n");
    assert_eq!(o.status.code(), Some(0));
    let o = vaip(&["fuzz", "-", "--count", "0"], "O1+ U2+ U1+ O2+\n");
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), String::new()));
    // a broken R2 must be caught and its trace printed
    let o = vaip(&["fuzz", "-", "--seed", "1", "--count", "20", "--inject-fault"], "O1+ U2+ U1+ O2+\n");
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let trace = out.lines().find_map(|l| l.trim().strip_prefix("trace:")).unwrap();
    assert!(vaip::moves::parse_trace(trace.trim()).is_ok());
}

#[test]
fn fuzz_is_deterministic() {
    let a = vaip(&["fuzz", "-", "--seed", "3", "--count", "5", "--inject-fault"], "O1+ O2+ ; U1+ U2+\n");
    let b = vaip(&["fuzz", "-", "--seed", "3", "--count", "5", "--inject-fault"], "O1+ O2+ ; U1+ U2+\n");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn vassiliev_command() {
    let o = vaip(&["vassiliev", CORPUS], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(": 0 failures"));
    let o = vaip(&["vassiliev", "-"], "S1l O2+ S1r U2+\n");
    assert!(stdout(&o).contains("witness line 1: S1l O2+ S1r U2+ -> t1 + t1^(-1) - 2"));
    let o = vaip(&["vassiliev", "-", "--pairs", "sample", "2"], "O1+ U2- O3- U1+ O4+ U3- O2- U4+\n");
    assert!(stdout(&o).starts_with("checked 2 "), "{}", stdout(&o));
    let o = vaip(&["vassiliev", "-"], "");
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), String::new()));
}

#[test]
fn shift_command() {
    let o = vaip(&["shift", "-", "--component", "1", "--steps", "1", "--verify"], "O1+ O2+ ; U1+ U2+\n");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("predicted: 2t1^(A-B-2) - 2"));
    assert!(out.ends_with("MATCH\n"));
    let o = vaip(&["shift", "-", "--component", "2", "--steps", "2", "--verify"], "O1+ O2+ ; U1+ U2+\n");
    assert!(stdout(&o).contains("predicted: t1^(A-B-1) + t1^(A-B-3) - 2"));
    assert!(stdout(&o).ends_with("MATCH\n"));
    assert_eq!(vaip(&["shift", "-", "--component", "3", "--steps", "1"], "O1+ ; U1+\n").status.code(), Some(2));
    assert_eq!(vaip(&["shift", "-", "--component", "1", "--steps", "5"], "O1+ ; U1+\n").status.code(), Some(2));
}
