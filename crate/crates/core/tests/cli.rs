use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.extend(["tests", "data", name]);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperacyclic")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn classify_sample() {
    let out = stdout(&["classify", &data("sample.hg")]);
    for line in ["n: 6", "m: 4", "N: 10", "alpha: true", "hypertree: true", "beta: true", "gamma: true"] {
        assert!(out.lines().any(|l| l == line), "missing {line:?} in\n{out}");
    }
}

#[test]
fn classify_triangle() {
    let out = stdout(&["classify", &data("triangle.hg")]);
    assert!(out.contains("alpha: false") && out.contains("hypertree: false"), "{out}");
    assert!(out.lines().any(|l| l == "not acyclic"), "{out}");
}

#[test]
fn subset_graph_every_algorithm_agrees() {
    let want = "1 -> 2\n1 -> 3\n2 -> 3\n";
    for algo in ["auto", "naive", "baseline", "beta", "gamma", "interval"] {
        assert_eq!(stdout(&["subset-graph", "--algo", algo, &data("nested.hg")]), want, "{algo}");
    }
    assert_eq!(stdout(&["subset-graph", "--algo", "gamma", &data("sample.hg")]), "3 -> 1\n");
}

#[test]
fn subset_graph_dot() {
    let out = stdout(&["subset-graph", "--format", "dot", &data("nested.hg")]);
    assert!(out.starts_with("digraph"), "{out}");
    assert!(out.contains("2 [label=\"2: {1,2}\"];") && out.contains("1 -> 3;"), "{out}");
}

#[test]
fn union_join_algorithms() {
    let want = "1 2\n1 3\n1 4\n3 4\n";
    for algo in ["auto", "generic", "gamma", "interval"] {
        assert_eq!(stdout(&["union-join", "--algo", algo, &data("sample.hg")]), want, "{algo}");
    }
    for subset in ["naive", "baseline", "beta"] {
        assert_eq!(stdout(&["union-join", "--algo", "generic", "--subset", subset, &data("sample.hg")]), want);
    }
    assert_eq!(stdout(&["union-join", &data("star.hg")]), "1 2\n1 3\n2 3\n");
    assert_eq!(stdout(&["union-join", &data("chain.hg")]), "1 2\n2 3\n");
}

#[test]
fn union_join_stats_go_to_stderr() {
    let out = run(&["union-join", "--algo", "generic", "--stats", &data("star.hg")]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1 2\n1 3\n2 3\n");
    assert!(String::from_utf8_lossy(&out.stderr).contains("max_multiplicity"));
}

#[test]
fn sperner_answers() {
    assert_eq!(stdout(&["sperner", &data("sample.hg")]), "true\n");
    assert_eq!(stdout(&["sperner", &data("chain.hg")]), "false\n");
}

#[test]
fn bachman_sample() {
    let out = stdout(&["bachman", &data("sample.hg")]);
    assert_eq!(out.lines().filter(|l| l.starts_with("node ")).count(), 6);
    assert_eq!(out.lines().filter(|l| l.contains(" -> ")).count(), 5);
    assert!(out.contains("label {e,f} phi [4]"), "{out}");
    assert!(stdout(&["bachman", "--format", "dot", &data("sample.hg")]).starts_with("digraph"));
}

#[test]
fn gen_is_deterministic_and_parsable() {
    let args = ["gen", "--class", "gamma", "--n", "12", "--m", "9", "--seed", "4", "--density", "0.3"];
    let text = stdout(&args);
    assert_eq!(text, stdout(&args));
    let h = hyperacyclic::hgfile::parse_hg(&text).unwrap();
    assert_eq!((h.n(), h.m()), (12, 9));
    assert_eq!(stdout(&["gen", "--class", "star", "--m", "3"]), "u v1\nu v2\nu v3\n");
}

#[test]
fn bench_writes_csv() {
    let out = stdout(&[
        "bench",
        "--algo",
        "subset_graph_gamma",
        "--class",
        "gamma",
        "--start",
        "200",
        "--end",
        "400",
        "--runs",
        "1",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "class,algo,n,m,N,G_edges,millis");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("gamma,subset_graph_gamma,"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["union-join", &data("triangle.hg")]), 4);
    assert_eq!(code(&["union-join", "--algo", "gamma", &data("interval.hg")]), 3);
    assert_eq!(code(&["subset-graph", "--algo", "gamma", &data("interval.hg")]), 3);
    assert_eq!(code(&["subset-graph", "--algo", "beta", &data("triangle.hg")]), 3);
    assert_eq!(code(&["classify", &data("empty.hg")]), 2);
    assert_eq!(code(&["classify", "/nonexistent/file.hg"]), 1);
    assert_eq!(code(&["no-such-command"]), 2);
}
