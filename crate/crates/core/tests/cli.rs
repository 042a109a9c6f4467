use std::io::Write;

use pandigital::cli::{run, CliOutput, EXIT_BUDGET, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn cli(args: &[&str]) -> CliOutput {
    run(std::iter::once("pandigital").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = cli(&full);
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn spec_examples() {
    assert_eq!(cli(&["aset", "--base", "10"]).stdout, "A_10 = {0, 3, 6} (theory: unconstrained)\n");
    assert_eq!(cli(&["classify", "--base", "10", "1323546789"]).stdout, "penholodigital (loose)\n");
    let out = cli(&["prime-search", "--base", "10", "--family", "subpandigital"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("10 1012356487 1012356487\n"));
}

#[test]
fn json_record_shape() {
    let v = json(&["prime-search", "--base", "17", "--family", "subpandigital"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["tool_version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["base"], 17);
    assert_eq!(v["family"], "subpandigital");
    assert_eq!(v["results"]["smallest_prime"], "48851274656431280857");
    assert_eq!(v["results"]["rendered"], "10123456789acdebf");
    assert_eq!(v["results"]["verdict"]["classification"], "probable-prime");
    assert_eq!(v["command"][0], "prime-search");

    let v = json(&["squares", "--base", "10", "--family", "pandigital", "--count"]);
    assert_eq!(v["results"]["count"], 87);
    let v = json(&["bounds", "--base", "10", "--family", "subpandigital"]);
    assert_eq!(v["results"]["bound_value"], "1012345678");
    assert!(v["results"]["warning"].is_string());
}

#[test]
fn csv_output() {
    let out = cli(&["squares", "--base", "6", "--family", "pandigital", "--format", "csv"]);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("root,square,written_in_base"));
    assert!(lines.all(|l| l.split(',').count() == 3));
}

#[test]
fn jobs_do_not_change_output() {
    let cases: &[&[&str]] = &[
        &["squares", "--base", "11", "--family", "pandigital", "--list", "--format", "json"],
        &["squares", "--base", "12", "--family", "penholodigital", "--count"],
        &["prime-search", "--base", "14", "--family", "subpandigital", "--format", "json"],
        &["conjectures", "--which", "4", "--bases", "5..12", "--format", "csv"],
    ];
    for args in cases {
        let one = cli(&[&["--jobs", "1"], *args].concat());
        let eight = cli(&[&["--jobs", "8"], *args].concat());
        assert_eq!(one.code, EXIT_OK, "{args:?}: {}", one.stderr);
        assert_eq!(one.stdout, eight.stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&[]).code, EXIT_USAGE);
    assert_eq!(cli(&["aset", "--base", "1"]).code, EXIT_USAGE);
    assert_eq!(cli(&["classify", "--base", "10", "12x"]).code, EXIT_USAGE);
    assert_eq!(cli(&["conjectures", "--which", "5", "--bases", "5..6"]).code, EXIT_USAGE);
    assert_eq!(cli(&["conjectures", "--which", "1", "--bases", "9..5"]).code, EXIT_USAGE);
    let out = cli(&["squares", "--base", "16", "--family", "pandigital", "--budget", "1000"]);
    assert_eq!(out.code, EXIT_BUDGET);
    let out = cli(&["prime-search", "--base", "12", "--family", "pandigital", "--budget", "2"]);
    assert_eq!(out.code, EXIT_BUDGET);
}

#[test]
fn resume_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("state.json");
    let state = state.to_str().unwrap();
    let args = ["prime-search", "--base", "12", "--family", "subpandigital", "--budget", "4", "--resume", state];
    let mut runs = 0;
    let last = loop {
        let out = cli(&args);
        runs += 1;
        if out.code != EXIT_BUDGET {
            break out;
        }
        assert!(runs < 1000);
    };
    assert!(runs > 1);
    assert_eq!(last.code, EXIT_OK);
    let direct = cli(&["prime-search", "--base", "12", "--family", "subpandigital"]);
    assert_eq!(last.stdout, direct.stdout);

    let wrong = cli(&["prime-search", "--base", "13", "--family", "subpandigital", "--resume", state]);
    assert_eq!(wrong.code, EXIT_USAGE);
    std::fs::write(dir.path().join("bad.json"), "{}").unwrap();
    let bad = dir.path().join("bad.json");
    let out = cli(&["prime-search", "--base", "12", "--family", "pandigital", "--resume", bad.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_USAGE);
}

#[test]
fn oeis_check() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let path = dir.path().join(name);
        std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
        path.to_str().unwrap().to_string()
    };
    let good = write("good.txt", "# smallest subpandigital primes\n3 3\n4 73\n5 683\n6 8521\n");
    let bad = write("bad.txt", "3 3\n4 74\n");
    let far = write("far.txt", "100 1\n");
    let base = ["oeis-check", "--seq", "A000000", "--what", "smallest-primes", "--family", "subpandigital", "--bases", "3..6", "--bfile"];
    assert_eq!(cli(&[&base[..], &[good.as_str()]].concat()).code, EXIT_OK);
    let out = cli(&[&base[..], &[bad.as_str()]].concat());
    assert_eq!(out.code, EXIT_MISMATCH);
    assert!(out.stdout.contains("MISMATCH"));
    assert_eq!(cli(&[&base[..], &[far.as_str()]].concat()).code, EXIT_USAGE);
    let shifted = cli(&[&base[..], &[far.as_str(), "--index-offset", "-2"]].concat());
    assert_eq!(shifted.code, EXIT_USAGE);

    let counts = write("counts.txt", "10 87\n");
    let out = cli(&[
        "oeis-check", "--bfile", &counts, "--seq", "A000000", "--what", "square-counts",
        "--family", "pandigital", "--bases", "10..10",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
}
