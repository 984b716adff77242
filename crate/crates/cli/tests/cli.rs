//! End-to-end checks of the binary: output determinism across worker
//! counts, output shapes, and exit codes.

use std::process::{Command, Output};

fn fibpart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibpart"))
        .args(args)
        .output()
        .expect("failed to spawn the fibpart binary")
}

fn stdout_of(args: &[&str]) -> Vec<u8> {
    let out = fibpart(args);
    assert!(out.status.success(), "{args:?} exited with {:?}", out.status);
    out.stdout
}

#[test]
fn bare_value_commands_print_only_the_value() {
    assert_eq!(stdout_of(&["r", "6"]), b"2\n");
    assert_eq!(stdout_of(&["zeckendorf", "100"]), b"1000010100\n");
    // Arbitrary-precision input works.
    let big = "123456789012345678901234567890";
    let out = stdout_of(&["r", big]);
    assert!(!out.is_empty() && out.iter().all(|b| b.is_ascii_digit() || *b == b'\n'));
}

#[test]
fn output_is_byte_identical_across_worker_counts() {
    for args in [
        &["seq", "--from", "0", "--to", "5000"][..],
        &["patch", "--pattern", "1,1", "--limit", "5000"][..],
    ] {
        let reference = stdout_of(args);
        for jobs in ["2", "3", "8"] {
            let mut with_jobs = args.to_vec();
            with_jobs.extend(["--jobs", jobs]);
            assert_eq!(
                stdout_of(&with_jobs),
                reference,
                "{args:?} with --jobs {jobs} changed the output"
            );
        }
    }
}

#[test]
fn json_format_emits_columns_and_string_rows() {
    let out = stdout_of(&["seq", "--from", "0", "--to", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out).expect("valid JSON");
    assert_eq!(v["columns"], serde_json::json!(["n", "R"]));
    assert_eq!(
        v["rows"],
        serde_json::json!([["0", "1"], ["1", "1"], ["2", "1"], ["3", "2"]])
    );
}

#[test]
fn verify_succeeds_on_a_short_sweep() {
    let out = fibpart(&["verify", "--max", "150"]);
    assert!(out.status.success(), "verify exited with {:?}", out.status);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6, "one line per invariant");
    assert!(text.lines().all(|l| l.starts_with("ok: ")), "all invariants pass");
}

#[test]
fn usage_errors_exit_with_code_one() {
    for args in [
        &["r", "abc"][..],
        &["r", "--", "-5"][..],
        &["seq", "--from", "9", "--to", "3"][..],
        &["cdf", "1.7"][..],
        &["staircase", "--depth", "21"][..],
        &["patch", "--pattern", "0", "--limit", "10"][..],
        &["verify", "--max", "99"][..],
    ] {
        let out = fibpart(args);
        assert_eq!(out.status.code(), Some(1), "{args:?} should exit 1");
        assert!(!out.stderr.is_empty(), "{args:?} should explain itself on stderr");
    }
}

#[test]
fn out_flag_writes_the_same_bytes_to_a_file() {
    let dir = std::env::temp_dir().join("fibpart-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("seq.csv");
    let direct = stdout_of(&["seq", "--from", "0", "--to", "20"]);
    let out = fibpart(&["seq", "--from", "0", "--to", "20", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty(), "--out should leave stdout empty");
    assert_eq!(std::fs::read(&path).unwrap(), direct);
    std::fs::remove_file(&path).ok();
}
