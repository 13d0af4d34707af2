//! Round-trip, determinism, and exit-code behaviour of the front end,
//! exercised both in-process and through the compiled binary.

use std::process::Command;

use molien_cli::report::{multipoly_of, DenominatorReport};
use molien_cli::{run, Report, RunConfig};

fn report_for(args: &[&str]) -> Report {
    let config = RunConfig::parse_from_args(args.iter().copied()).unwrap();
    run(&config).unwrap()
}

#[test]
fn json_round_trips_exactly() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["--family", "a", "--n", "2", "--k", "2"],
        vec!["--family", "b", "--n", "2", "--k", "3"],
        vec!["--family", "dihedral", "--modulus", "4", "--k", "2"],
        vec!["--family", "g2", "--k", "2"],
    ];
    for args in cases {
        let report = report_for(&args);
        let parsed = Report::from_json(&report.to_json()).unwrap();
        assert_eq!(parsed, report, "args: {:?}", args);

        // the quotient reconstructs exactly from the term list
        let rebuilt = multipoly_of(&parsed.quotient.terms, parsed.k).unwrap();
        let config = RunConfig::parse_from_args(args.iter().copied()).unwrap();
        let direct = run(&config).unwrap();
        let reference = multipoly_of(&direct.quotient.terms, direct.k).unwrap();
        assert_eq!(rebuilt, reference);
    }
}

#[test]
fn identical_configs_produce_identical_json() {
    let args = ["--family", "d", "--n", "3", "--k", "2", "--check-oracle", "--depth", "3"];
    let first = report_for(&args).to_json();
    let second = report_for(&args).to_json();
    assert_eq!(first, second);
}

#[test]
fn residual_denominators_serialize_with_coefficients() {
    let report = report_for(&["--family", "g2", "--k", "2"]);
    assert!(!report.quotient.polynomial);
    let mut vars = Vec::new();
    for entry in &report.quotient.denominator {
        match entry {
            DenominatorReport::Univariate { var, coeffs } => {
                vars.push(*var);
                assert_eq!(coeffs, &["1", "0", "0", "0", "1"]);
            }
            DenominatorReport::Binomial { .. } => panic!("expected univariate factors"),
        }
    }
    assert_eq!(vars, vec![1, 2]);

    let parsed = Report::from_json(&report.to_json()).unwrap();
    assert_eq!(parsed.quotient.denominator, report.quotient.denominator);
}

#[test]
fn text_report_names_the_quotient_and_rank() {
    let text = report_for(&["--family", "a", "--n", "2", "--k", "2"]).to_text();
    assert!(text.contains("Q = 1 + h1*h2"), "text was:\n{}", text);
    assert!(text.contains("rank 2 = |G|^1"), "text was:\n{}", text);

    let text = report_for(&["--family", "g2", "--k", "2"]).to_text();
    assert!(text.contains("Q is NOT a polynomial"), "text was:\n{}", text);
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_molien"))
}

#[test]
fn exit_codes_by_error_kind() {
    // a valid non-polynomial outcome is still success
    let ok = binary().args(["--family", "g2", "--k", "2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));

    let usage = binary().args(["--family", "nope", "--k", "2"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(1));

    let invalid = binary().args(["--family", "b", "--n", "0", "--k", "2"]).output().unwrap();
    assert_eq!(invalid.status.code(), Some(1));

    let unstable = binary()
        .args(["--family", "custom", "--modulus", "2", "--dim", "2", "--gen", "1,0", "--k", "1"])
        .output()
        .unwrap();
    assert_eq!(unstable.status.code(), Some(1));

    let capacity = binary().args(["--family", "b", "--n", "30", "--k", "2"]).output().unwrap();
    assert_eq!(capacity.status.code(), Some(2));
}

#[test]
fn cap_env_variable_is_honored() {
    let out = binary()
        .env("MOLIEN_CAP", "4")
        .args(["--family", "b", "--n", "3", "--k", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // explicit flag overrides the environment
    let out = binary()
        .env("MOLIEN_CAP", "4")
        .args(["--family", "b", "--n", "3", "--k", "1", "--cap", "1000000"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn batch_mode_emits_a_json_array() {
    let dir = std::env::temp_dir().join("molien-batch-test");
    std::fs::create_dir_all(&dir).unwrap();
    let specs = dir.join("specs.txt");
    let output = dir.join("out.json");
    std::fs::write(
        &specs,
        "--family a --n 2 --k 2\n# comment\n\n--family i2 --modulus 3 --k 2\n",
    )
    .unwrap();
    let status = binary()
        .args(["--batch"])
        .arg(&specs)
        .args(["--output"])
        .arg(&output)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let text = std::fs::read_to_string(&output).unwrap();
    let reports: Vec<Report> = serde_json::from_str(&text).unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0].group.family, "symmetric");
    assert_eq!(reports[1].group.family, "dihedral");
    assert!(reports.iter().all(|r| r.quotient.polynomial));
}

#[test]
fn stdout_receives_the_report_and_stderr_stays_quiet() {
    let out = binary()
        .args(["--family", "a", "--n", "2", "--k", "2", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stderr.is_empty());
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.rank.as_deref(), Some("2"));
}
