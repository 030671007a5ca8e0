//! End-to-end checks of the command-line contract: formats, outputs and
//! exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_jisolve"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn write_temp(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("jisolve-test-{}-{name}", std::process::id()));
    std::fs::write(&path, content).unwrap();
    path
}

#[test]
fn solve_dpq_with_witness_on_e1() {
    let out = run(&[
        "solve",
        fixture("e1.cisl").to_str().unwrap(),
        "--algo",
        "dpq",
        "--witness",
    ]);
    assert_eq!(stdout(&out), "value 2\npick 0 2\n");
    assert_eq!(code(&out), 0);
}

#[test]
fn solve_branch_decision_no() {
    let out = run(&[
        "solve",
        fixture("e1.cisl").to_str().unwrap(),
        "--algo",
        "branch",
        "--k",
        "3",
    ]);
    assert_eq!(stdout(&out), "no\n");
    assert_eq!(code(&out), 1);
}

#[test]
fn solve_empty_instance() {
    let path = write_temp("empty.cisl", "cisl 0 0\n");
    let out = run(&["solve", path.to_str().unwrap(), "--algo", "dpq"]);
    assert_eq!(stdout(&out), "value 0\n");
    assert_eq!(code(&out), 0);
}

#[test]
fn all_solvers_agree_on_e1() {
    for algo in ["dpq", "dpgamma", "brute"] {
        let out = run(&[
            "solve",
            fixture("e1.cisl").to_str().unwrap(),
            "--algo",
            algo,
        ]);
        assert_eq!(stdout(&out), "value 2\n", "algo {algo}");
    }
    let out = run(&[
        "solve",
        fixture("e1.cisl").to_str().unwrap(),
        "--algo",
        "cc",
        "--k",
        "2",
        "--exhaustive-recolorings",
        "--witness",
    ]);
    assert_eq!(stdout(&out), "yes\npick 0 2\n");
}

#[test]
fn dpq_decision_mode() {
    let out = run(&[
        "solve",
        fixture("e1.cisl").to_str().unwrap(),
        "--algo",
        "dpq",
        "--k",
        "2",
    ]);
    assert_eq!(stdout(&out), "yes\n");
    assert_eq!(code(&out), 0);
    let out = run(&[
        "solve",
        fixture("e1.cisl").to_str().unwrap(),
        "--algo",
        "dpq",
        "--k",
        "3",
    ]);
    assert_eq!(stdout(&out), "no\n");
    assert_eq!(code(&out), 1);
}

#[test]
fn cc_rejects_invalid_epsilon() {
    let out = run(&[
        "solve",
        fixture("e1.cisl").to_str().unwrap(),
        "--algo",
        "cc",
        "--k",
        "2",
        "--epsilon",
        "1.5",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn matching_rejects_colored_instances() {
    let out = run(&[
        "solve",
        fixture("e1.cisl").to_str().unwrap(),
        "--algo",
        "matching",
    ]);
    assert_eq!(code(&out), 3);
}

#[test]
fn matching_rejects_non_cluster_sides() {
    let path = write_temp(
        "path.2u",
        "2union 3 2\ng1 1 2\ng1 2 3\ng1 3 4\ng2 1 1\ng2 2 2\ng2 3 3\n",
    );
    let out = run(&["solve", path.to_str().unwrap(), "--algo", "matching"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn matching_solves_cluster_pair_and_uses_header_k() {
    let path = write_temp(
        "clusters.2u",
        "2union 3 2\ng1 1 1\ng1 1 1\ng1 2 2\ng2 1 1\ng2 2 2\ng2 2 2\n",
    );
    let out = run(&["solve", path.to_str().unwrap(), "--algo", "matching"]);
    // header k = 2 switches to decision output
    assert_eq!(stdout(&out), "yes\n");
    assert_eq!(code(&out), 0);
    let out = run(&[
        "solve",
        path.to_str().unwrap(),
        "--algo",
        "matching",
        "--k",
        "3",
    ]);
    assert_eq!(stdout(&out), "no\n");
    assert_eq!(code(&out), 1);
}

#[test]
fn weighted_flag_switches_objective() {
    let path = write_temp("weights.cisl", "cisl 2 2\nv 1 2 5 1\nv 1 2 3 2\n");
    let out = run(&["solve", path.to_str().unwrap(), "--algo", "dpq"]);
    assert_eq!(stdout(&out), "value 1\n");
    let out = run(&[
        "solve",
        path.to_str().unwrap(),
        "--algo",
        "dpq",
        "--weighted",
    ]);
    assert_eq!(stdout(&out), "value 5\n");
}

#[test]
fn parse_errors_carry_line_numbers_and_exit_2() {
    let path = write_temp("broken.cisl", "cisl 2 1\nv 1 2 1 1\nv 9 3 1 1\n");
    let out = run(&["solve", path.to_str().unwrap(), "--algo", "dpq"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("line 3"), "stderr: {err}");

    let out = run(&["solve", "/nonexistent/file", "--algo", "dpq"]);
    assert_eq!(code(&out), 2);

    let out = bin().args(["solve"]).output().unwrap();
    assert_eq!(code(&out), 2); // clap usage error
}

#[test]
fn verify_examples() {
    let e1 = fixture("e1.cisl");
    let good = write_temp("good.sol", "value 2\npick 0 2\n");
    let out = run(&["verify", e1.to_str().unwrap(), good.to_str().unwrap()]);
    assert_eq!(stdout(&out), "valid\n");
    assert_eq!(code(&out), 0);

    let overlap = write_temp("overlap.sol", "value 2\npick 0 1\n");
    let out = run(&["verify", e1.to_str().unwrap(), overlap.to_str().unwrap()]);
    assert_eq!(stdout(&out), "invalid: intervals 0 and 1 intersect\n");
    assert_eq!(code(&out), 1);

    let colors = write_temp("colors.sol", "value 2\npick 1 2\n");
    let out = run(&["verify", e1.to_str().unwrap(), colors.to_str().unwrap()]);
    assert_eq!(stdout(&out), "invalid: colors of 1 and 2 intersect\n");
    assert_eq!(code(&out), 1);

    let wrong_value = write_temp("value.sol", "value 3\npick 0 2\n");
    let out = run(&["verify", e1.to_str().unwrap(), wrong_value.to_str().unwrap()]);
    assert_eq!(code(&out), 1);

    let garbage = write_temp("garbage.sol", "zzz\n");
    let out = run(&["verify", e1.to_str().unwrap(), garbage.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_accepts_solver_reports_on_two_union() {
    let path = write_temp(
        "verify.2u",
        "2union 3 0\ng1 1 1\ng1 1 1\ng1 2 2\ng2 1 1\ng2 2 2\ng2 2 2\n",
    );
    // both the oracle and the translated subset DP emit reports that the
    // original two-graph instance accepts
    for algo in ["brute", "dpq"] {
        let out = run(&["solve", path.to_str().unwrap(), "--algo", algo, "--witness"]);
        assert_eq!(code(&out), 0, "algo {algo}");
        let sol_path = write_temp(&format!("verify.2u.{algo}.sol"), &stdout(&out));
        let out = run(&["verify", path.to_str().unwrap(), sol_path.to_str().unwrap()]);
        assert_eq!(stdout(&out), "valid\n", "algo {algo}");
    }
}

#[test]
fn kernelize_signature_containment_example() {
    let path = write_temp("cont.2u", "2union 2 0\ng1 1 4\ng1 2 3\ng2 1 4\ng2 2 3\n");
    let out = run(&[
        "kernelize",
        path.to_str().unwrap(),
        "--rules",
        "signature",
    ]);
    assert_eq!(code(&out), 0);
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("input_n=2 output_n=1"), "stderr: {err}");
    assert!(stdout(&out).starts_with("2union 1 0\n"));
}

#[test]
fn kernelize_proper_kernel_reports_yes() {
    let path = write_temp("easy.cisl", "cisl 2 2\nv 1 1 1 1\nv 2 2 1 2\n");
    let out = run(&[
        "kernelize",
        path.to_str().unwrap(),
        "--rules",
        "proper-kernel",
        "--k",
        "2",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("solved yes\npick "), "stdout: {text}");
}

#[test]
fn kernelize_colorpack_decrements_k() {
    // color 1 packs five disjoint intervals (enough for k = 3); color 2
    // cannot pack against the decremented target
    let path = write_temp(
        "pack.cisl",
        "cisl 7 2\nv 1 1 1 1\nv 2 2 1 1\nv 3 3 1 1\nv 4 4 1 1\nv 5 5 1 1\nv 6 6 1 2\nv 6 6 1 2\n",
    );
    let out = run(&[
        "kernelize",
        path.to_str().unwrap(),
        "--rules",
        "colorpack",
        "--k",
        "3",
    ]);
    assert_eq!(code(&out), 0);
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("k_prime=2"), "stderr: {err}");
    assert!(stdout(&out).starts_with("cisl 2 1\n"), "{}", stdout(&out));
}

#[test]
fn generate_matches_golden_files() {
    let out = run(&[
        "generate", "cisl", "--n", "5", "--c", "4", "--gamma", "2", "--seed", "42",
    ]);
    let golden = std::fs::read_to_string(fixture("golden_cisl_n5_c4_g2_s42.cisl")).unwrap();
    assert_eq!(stdout(&out), golden);

    let out = run(&[
        "generate", "2union", "--n", "4", "--c", "3", "--k", "2", "--seed", "42",
    ]);
    let golden = std::fs::read_to_string(fixture("golden_2union_n4_c3_k2_s42.2u")).unwrap();
    assert_eq!(stdout(&out), golden);

    let out = run(&[
        "generate", "cisl", "--n", "0", "--c", "1", "--gamma", "1", "--seed", "1",
    ]);
    assert_eq!(stdout(&out), "cisl 0 0\n");
}

#[test]
fn reduce_sat_single_positive_clause() {
    let cnf = write_temp("x1.cnf", "c single clause\np cnf 1 1\n1 0\n");
    let out = run(&["reduce-sat", cnf.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("2union 3 2\n"), "stdout: {text}");
    // the produced instance is a yes-instance
    let inst = write_temp("x1.2u", &text);
    let out = run(&["solve", inst.to_str().unwrap(), "--algo", "brute"]);
    assert_eq!(stdout(&out), "yes\n");
    assert_eq!(code(&out), 0);
}

#[test]
fn reduce_sat_contradiction_is_no_instance() {
    let cnf = write_temp("contra.cnf", "p cnf 1 2\n1 0\n-1 0\n");
    let out = run(&["reduce-sat", cnf.to_str().unwrap()]);
    let inst = write_temp("contra.2u", &stdout(&out));
    let out = run(&["solve", inst.to_str().unwrap(), "--algo", "brute"]);
    assert_eq!(stdout(&out), "no\n");
    assert_eq!(code(&out), 1);
}

#[test]
fn bench_emits_versioned_csv_with_expected_row_count() {
    let out = run(&[
        "bench", "--sweep", "gamma", "--points", "2,3,4", "--n", "60", "--c", "8",
        "--repeats", "2", "--seed", "3",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "# jisolve-bench v1");
    assert_eq!(lines[1], "algo,n,gamma,c,Q,ell,time_ms,peak_mem_bytes,value");
    assert_eq!(lines.len(), 2 + 3 * 2);
    for row in &lines[2..] {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 9);
        assert_eq!(fields[0], "dpq");
        assert!(fields[7].parse::<u64>().unwrap() > 0, "row {row}");
    }
}

#[test]
fn signature_kernel_pipeline_preserves_value_when_bound_bites() {
    // 2000 vertices over 12 positions per side: the reduced instance must
    // shrink below 12^3 = 1728 while keeping the optimum
    let gen = run(&[
        "generate", "2union", "--n", "2000", "--c", "12", "--seed", "99",
    ]);
    let inst = write_temp("big.2u", &stdout(&gen));
    let reduced_path = std::env::temp_dir().join(format!("jisolve-test-{}-big.red.2u", std::process::id()));
    let out = run(&[
        "kernelize",
        inst.to_str().unwrap(),
        "--rules",
        "signature",
        "--out",
        reduced_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let stats_line = String::from_utf8_lossy(&out.stderr).into_owned();
    let reduced_n: usize = stats_line
        .split_whitespace()
        .find_map(|f| f.strip_prefix("output_n="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(reduced_n <= 1728, "stats: {stats_line}");
    assert!(reduced_n < 2000, "reduction did nothing: {stats_line}");

    let original = run(&["solve", inst.to_str().unwrap(), "--algo", "dpq"]);
    let reduced = run(&["solve", reduced_path.to_str().unwrap(), "--algo", "dpq"]);
    assert_eq!(stdout(&original), stdout(&reduced));
}

#[test]
fn generated_instances_parse_and_solve_consistently() {
    // every solver-accepted witness of a generated instance verifies
    for seed in 0..8u64 {
        let out = run(&[
            "generate", "cisl", "--n", "12", "--c", "6", "--gamma", "3", "--seed",
            &seed.to_string(),
        ]);
        let path = write_temp(&format!("round-{seed}.cisl"), &stdout(&out));
        let solved = run(&[
            "solve",
            path.to_str().unwrap(),
            "--algo",
            "dpq",
            "--witness",
            "--weighted",
        ]);
        assert_eq!(code(&solved), 0);
        let sol_path = write_temp(&format!("round-{seed}.sol"), &stdout(&solved));
        let verified = run(&[
            "verify",
            path.to_str().unwrap(),
            sol_path.to_str().unwrap(),
            "--weighted",
        ]);
        assert_eq!(stdout(&verified), "valid\n");
        assert_eq!(code(&verified), 0);
    }
}
