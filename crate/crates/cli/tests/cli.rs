//! End-to-end checks of the command-line interface: the documented examples,
//! exit codes, and byte-identical output for identical configuration.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_crystal-forge"))
}

#[test]
fn emit_minor_example() {
    let out = bin()
        .args(["emit", "minor", "--type", "A", "--rank", "2", "--k", "2", "--side", "left-closed"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "c[1,1] + c[2,1]/c[1,2]\n");
}

#[test]
fn emit_crystal_has_four_nodes() {
    let out = bin()
        .args(["emit", "crystal", "--type", "C", "--rank", "2", "--highest", "c[1,0]"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.matches("label=").count(), 4 + 3); // 4 nodes + 3 edges
    assert_eq!(text.matches("->").count(), 3);
}

#[test]
fn emit_rect_reproduces_the_printed_trace() {
    let out = bin()
        .args([
            "emit",
            "rect",
            "--n",
            "10",
            "--column",
            "1,2,3,5,6,-6,-5,-3,-2,-1",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("trace:  tau_1, tau_5, tau_5, tau_7"));
    assert!(text.contains("result: [4,7,8,9,10,10b,9b,8b,7b,4b]"));
}

#[test]
fn emit_is_byte_identical_across_runs() {
    let run = || {
        bin()
            .args([
                "emit", "triangles", "--type", "B", "--rank", "4", "--format", "json",
            ])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
    let run2 = || {
        bin()
            .args(["emit", "crystal", "--type", "B", "--rank", "3", "--highest", "c[3,1]", "--sign", "reverse", "--format", "json"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run2(), run2());
}

#[test]
fn verify_passes_and_exits_zero() {
    let out = bin()
        .args(["verify", "--type", "C", "--rank", "2", "--suite", "minors"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn verify_spin_example_suite() {
    let out = bin()
        .args(["verify", "--type", "B", "--rank", "4", "--suite", "spin-example"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 3);
}

#[test]
fn verify_parallel_report_order_is_canonical() {
    let run = |jobs: &str| {
        let out = bin()
            .args([
                "verify", "--type", "C", "--rank", "2", "--suite", "all", "--jobs", jobs,
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        // strip timings before comparing
        String::from_utf8_lossy(&out.stdout)
            .lines()
            .map(|l| l.split("  [").next().unwrap().to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn usage_error_exits_two() {
    let out = bin()
        .args(["verify", "--type", "C", "--suite", "minors"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["verify", "--type", "C", "--rank", "2", "--suite", "no-such-suite"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_seed_monomial_is_a_usage_error() {
    let out = bin()
        .args(["emit", "crystal", "--type", "C", "--rank", "2", "--highest", "c[1,0] + c[2,0]"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
