use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gogmagog"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn enumerate_counts() {
    let o = run(&["enumerate", "magog", "--n", "5", "--k", "3", "--format", "count"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "387");

    let o = run(&["enumerate", "asm", "--n", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn bad_shape_is_usage_error() {
    let o = run(&["enumerate", "gog", "--n", "2", "--k", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn count_methods_agree() {
    for family in ["magog", "gog"] {
        let mut values = Vec::new();
        for method in ["brute", "ct", "recurrence"] {
            let o = run(&["count", family, "--k", "2", "--n", "3", "--method", method]);
            assert!(o.status.success(), "{family} {method}");
            values.push(stdout(&o).trim().to_string());
        }
        assert_eq!(values[0], "7");
        assert!(values.iter().all(|v| v == "7"), "{family}: {values:?}");
    }
    let o = run(&["count", "magog", "--k", "1", "--n", "3", "--method", "ct"]);
    assert_eq!(stdout(&o).trim(), "5");
    let o = run(&["count", "gog", "--k", "5", "--n", "5", "--method", "brute"]);
    assert_eq!(stdout(&o).trim(), "429");
}

#[test]
fn eval_examples() {
    let o = run(&["eval", "x1/(x1+x2)", "--mode", "ct", "--order", "x1,x2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1");

    let o = run(&["eval", "x1/(x1+x2)", "--mode", "ct", "--order", "x2,x1"]);
    assert_eq!(stdout(&o).trim(), "0");

    let o = run(&["eval", "(1)/((1-x1)*x1^2)", "--mode", "ct"]);
    assert_eq!(stdout(&o).trim(), "1");

    let o = run(&["eval", "(1)/(x1*x2)", "--mode", "res"]);
    assert_eq!(stdout(&o).trim(), "1");

    let o = run(&["eval", "1 -"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 3"));
}

#[test]
fn checks_and_exit_codes() {
    let o = run(&["check", "S1", "--k", "3", "--n", "4"]);
    assert!(o.status.success());

    let o = run(&["check", "S99"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["check", "all", "--max-k", "2", "--max-n", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("checks passed"));
}

#[test]
fn deterministic_output() {
    let a = run(&["enumerate", "gog", "--n", "4", "--k", "2"]);
    let b = run(&["enumerate", "gog", "--n", "4", "--k", "2"]);
    assert_eq!(a.stdout, b.stdout);

    let a = run(&["check", "S15*", "--format", "records"]);
    let b = run(&["check", "S15*", "--format", "records"]);
    let strip = |s: &[u8]| {
        String::from_utf8_lossy(s)
            .lines()
            .map(|l| l.split(" elapsed-ms=").next().unwrap_or(l).to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&a.stdout), strip(&b.stdout));
}
