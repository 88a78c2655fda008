//! End-to-end tests of the `bezout` binary: output contracts, exit
//! codes, format flags, and determinism.

use std::process::{Command, Output};

use bezout::{check_trace, BenchReport, EgcdTrace};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bezout"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn gcd_prints_decimal() {
    let out = run(&["gcd", "240", "46"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "2\n");

    let out = run(&["gcd", "7", "0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "7\n");
}

#[test]
fn gcd_accepts_hex_operands() {
    let out = run(&["gcd", "0xF0", "0x2E"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "2\n");
}

#[test]
fn egcd_prints_space_separated_triple() {
    let out = run(&["egcd", "12", "8"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "4 1 -1\n");

    let out = run(&["egcd", "7", "0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "7 1 0\n");
}

#[test]
fn egcd_json_flag_emits_the_triple_object() {
    let out = run(&["egcd", "240", "46", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "{\"d\":\"2\",\"x\":\"-9\",\"y\":\"47\"}\n");
}

#[test]
fn negative_operands_exit_2_with_a_diagnostic() {
    let out = run(&["egcd", "-3", "5"]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).is_empty());
    assert!(
        stderr(&out).contains("non-negative"),
        "diagnostic must name the requirement, got: {}",
        stderr(&out)
    );
}

#[test]
fn malformed_operands_exit_2() {
    let out = run(&["gcd", "twelve", "8"]);
    assert_eq!(code(&out), 2);
    let out = run(&["inverse", "3", "0x"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn inverse_prints_the_canonical_representative() {
    let out = run(&["inverse", "3", "11"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "4\n");

    let out = run(&["inverse", "1", "7"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn non_invertible_element_exits_1_naming_the_gcd() {
    let out = run(&["inverse", "6", "9"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).is_empty());
    assert_eq!(stderr(&out), "not invertible: gcd=3\n");
}

#[test]
fn zero_modulus_is_a_usage_error() {
    let out = run(&["inverse", "3", "0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn trace_csv_matches_the_worked_example() {
    let out = run(&["trace", "12", "8", "--csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "k,q,a,b,c,d,e,f\n\
         0,,12,8,1,0,0,1\n\
         1,1,8,4,0,1,1,-1\n\
         2,2,4,0,1,-2,-1,3\n"
    );
}

#[test]
fn trace_json_of_the_zero_pair() {
    let out = run(&["trace", "0", "0", "--json"]);
    assert_eq!(code(&out), 0);
    let trace: EgcdTrace = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(trace.steps.len(), 1);
    assert_eq!(trace.result.d.to_string(), "0");
    assert_eq!(trace.result.x.to_string(), "1");
    assert_eq!(trace.result.y.to_string(), "0");
}

#[test]
fn trace_json_round_trips_and_re_checks() {
    let out = run(&["trace", "240", "46", "--json"]);
    assert_eq!(code(&out), 0);
    let trace: EgcdTrace = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(trace.result.d.to_string(), "2");
    // re-parsed trace passes the same audit the binary ran
    assert!(check_trace(&trace).ok());
    // and re-serializing reproduces the emitted bytes
    assert_eq!(
        serde_json::to_string(&trace).unwrap() + "\n",
        stdout(&out)
    );
}

#[test]
fn trace_defaults_to_json() {
    let explicit = run(&["trace", "12", "8", "--json"]);
    let default = run(&["trace", "12", "8"]);
    assert_eq!(stdout(&explicit), stdout(&default));
}

#[test]
fn trace_format_flags_conflict() {
    let out = run(&["trace", "12", "8", "--json", "--csv"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_exhaustive_sweep_is_clean() {
    let out = run(&["verify", "--exhaustive-to", "300"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("pairs checked: 45451"), "got: {text}"); // 301·302/2
    assert!(text.contains("violations: 0"), "got: {text}");
}

#[test]
fn verify_exhaustive_to_zero_checks_one_pair() {
    let out = run(&["verify", "--exhaustive-to", "0"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("pairs checked: 1"));
}

#[test]
fn verify_random_mode_is_clean_and_deterministic() {
    let args = ["verify", "--random", "50", "--max-bits", "256", "--seed", "42"];
    let first = run(&args);
    assert_eq!(code(&first), 0, "stderr: {}", stderr(&first));
    assert!(stdout(&first).contains("pairs checked: 50"));
    assert!(stdout(&first).contains("violations: 0"));
    let second = run(&args);
    assert_eq!(stdout(&first), stdout(&second), "verify output must be byte-identical");
}

#[test]
fn verify_audits_a_thousand_random_traces() {
    let out = run(&[
        "verify", "--random", "1000", "--max-bits", "256", "--seed", "42",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("pairs checked: 1000"), "got: {text}");
    assert!(text.contains("trace audits passed: 1000"), "got: {text}");
    assert!(text.contains("violations: 0"), "got: {text}");
}

#[test]
fn verify_requires_exactly_one_mode() {
    assert_eq!(code(&run(&["verify"])), 2);
    assert_eq!(
        code(&run(&[
            "verify",
            "--random",
            "5",
            "--max-bits",
            "64",
            "--seed",
            "1",
            "--exhaustive-to",
            "10"
        ])),
        2
    );
    // --random without its companions is incomplete
    assert_eq!(code(&run(&["verify", "--random", "5"])), 2);
}

#[test]
fn bench_emits_a_parsable_report() {
    let out = run(&[
        "bench", "--variant", "iterative", "--bits", "64", "--count", "10", "--seed", "1",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let report: BenchReport = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report.bits, 64);
    assert_eq!(report.count, 10);
    assert_eq!(report.seed, 1);
    assert!(report.iterations_min as f64 <= report.iterations_mean);
    assert!(report.iterations_mean <= report.iterations_max as f64);
}

#[test]
fn bench_variants_share_iteration_statistics_for_a_seed() {
    let recursive = run(&[
        "bench", "--variant", "recursive", "--bits", "64", "--count", "10", "--seed", "1",
    ]);
    let iterative = run(&[
        "bench", "--variant", "iterative", "--bits", "64", "--count", "10", "--seed", "1",
    ]);
    let rec: BenchReport = serde_json::from_str(stdout(&recursive).trim()).unwrap();
    let it: BenchReport = serde_json::from_str(stdout(&iterative).trim()).unwrap();
    assert_eq!(rec.iterations_min, it.iterations_min);
    assert_eq!(rec.iterations_mean, it.iterations_mean);
    assert_eq!(rec.iterations_max, it.iterations_max);
}

#[test]
fn bench_rejects_unknown_variants_and_bad_sizes() {
    let out = run(&[
        "bench", "--variant", "mystery", "--bits", "64", "--count", "10", "--seed", "1",
    ]);
    assert_eq!(code(&out), 2);
    let out = run(&[
        "bench", "--variant", "iterative", "--bits", "1", "--count", "10", "--seed", "1",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["egcd", "123456789", "987654321"],
        vec!["trace", "240", "46", "--json"],
        vec!["trace", "240", "46", "--csv"],
        vec!["inverse", "17", "3120"],
        vec!["verify", "--exhaustive-to", "40"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(
            stdout(&first),
            stdout(&second),
            "output of {args:?} must be deterministic"
        );
        assert_eq!(code(&first), code(&second));
    }
}
