//! The `pandigital` command line.
//!
//! [`run`] takes the full argument vector and returns the exit status and
//! the text that belongs on stdout and stderr, so it can be driven directly
//! from tests.

mod output;

use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value as Json};

use crate::digits::{self, Family};
use crate::error::Error;
use crate::oeis;
use crate::residues;
use crate::search::{self, SearchOptions, SearchOutcome, SearchState};
use crate::squares::{self, ScanOptions};

pub use output::{Format, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable holding the default worker count.
pub const JOBS_ENV: &str = "PANDIGITAL_JOBS";

#[derive(Debug, Parser)]
#[command(name = "pandigital", version, about = "Pandigital-family numbers: classification, squares, primes")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Worker threads; never changes results.
    #[arg(long, short = 'j', global = true, env = JOBS_ENV)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    SquareCounts,
    SmallestPrimes,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Residue set A_b and its predicted shape.
    Aset {
        #[arg(long)]
        base: u32,
    },
    /// Classification labels of a number.
    Classify {
        #[arg(long)]
        base: u32,
        /// Decimal value, or a base-b digit string with --digits.
        value: String,
        #[arg(long)]
        digits: bool,
    },
    /// Strict squares of a family.
    Squares {
        #[arg(long)]
        base: u32,
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// List every root (default).
        #[arg(long, conflicts_with = "count")]
        list: bool,
        /// Print only the count.
        #[arg(long)]
        count: bool,
        /// Accepted for symmetry; squares are always strict.
        #[arg(long)]
        strict: bool,
        /// Maximum post-filter candidates; 0 removes the limit.
        #[arg(long, default_value_t = squares::DEFAULT_SCAN_BUDGET)]
        budget: u128,
    },
    /// Smallest prime of a family.
    PrimeSearch {
        #[arg(long)]
        base: u32,
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// Rejected: strict members are never prime above base 3.
        #[arg(long)]
        strict: bool,
        /// Maximum primality tests in this run; 0 removes the limit.
        #[arg(long, default_value_t = search::DEFAULT_TEST_BUDGET)]
        budget: u64,
        /// State file: read if present, written when the budget runs out.
        #[arg(long)]
        resume: Option<PathBuf>,
    },
    /// Lower bound for primes of a family.
    Bounds {
        #[arg(long)]
        base: u32,
        #[arg(long, value_parser = parse_family)]
        family: Family,
    },
    /// Conjecture harness: 1 and 3 check square existence, 2 and 4 check
    /// digit sums of smallest primes.
    Conjectures {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        which: u8,
        #[arg(long, value_parser = parse_bases)]
        bases: RangeInclusive<u32>,
        /// Per-base budget (scan candidates or primality tests); 0 removes it.
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Compare computed values against an OEIS b-file.
    OeisCheck {
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long)]
        seq: String,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_parser = parse_bases)]
        bases: RangeInclusive<u32>,
        /// b-file index of a base is `base + index_offset`.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        index_offset: i64,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_bases(s: &str) -> Result<RangeInclusive<u32>, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: u32 = lo.parse().map_err(|_| format!("bad lower base {lo:?}"))?;
    let hi: u32 = hi.parse().map_err(|_| format!("bad upper base {hi:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn usage(msg: impl Into<String>) -> Self {
        CliOutput {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }
}

/// A finished command before formatting.
struct Outcome {
    code: i32,
    base: Option<u32>,
    family: Option<Family>,
    results: Json,
    table: Table,
    notes: Vec<String>,
}

impl Outcome {
    fn new(base: Option<u32>, family: Option<Family>, results: Json, table: Table) -> Self {
        Outcome {
            code: EXIT_OK,
            base,
            family,
            results,
            table,
            notes: Vec::new(),
        }
    }
}

/// Runs the command line `argv` (program name first).
pub fn run<I, S>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CliOutput {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => CliOutput::usage(text),
            };
        }
    };

    let jobs = cli.jobs.unwrap_or(0);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => return CliOutput::usage(format!("cannot start {jobs} workers: {e}")),
    };
    let format = cli.format;
    let outcome = pool.install(|| execute(cli.command));
    match outcome {
        Ok(out) => {
            let echo = command_echo(&argv);
            let stdout = output::render(format, &echo, &out);
            CliOutput {
                code: out.code,
                stdout,
                stderr: if format == Format::Plain {
                    String::new()
                } else {
                    out.notes.join("\n")
                },
            }
        }
        Err(Failure { code, message }) => CliOutput {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
    }
}

/// Arguments with the worker count removed, since it must not show up in
/// the output.
fn command_echo(argv: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in argv.iter().skip(1) {
        if skip {
            skip = false;
            continue;
        }
        if a == "--jobs" || a == "-j" {
            skip = true;
            continue;
        }
        if a.starts_with("--jobs=") || (a.starts_with("-j") && a.len() > 2 && !a.starts_with("--")) {
            continue;
        }
        out.push(a.clone());
    }
    out
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ScanBudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn execute(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Aset { base } => cmd_aset(base),
        Command::Classify { base, value, digits } => cmd_classify(base, &value, digits),
        Command::Squares {
            base,
            family,
            count,
            budget,
            ..
        } => cmd_squares(base, family, count, budget),
        Command::PrimeSearch {
            base,
            family,
            strict,
            budget,
            resume,
        } => {
            if strict {
                return Err(usage(
                    "prime-search is always loose: strict members have a digit sum sharing a factor \
                     with b-1, so none is prime above base 3",
                ));
            }
            cmd_prime_search(base, family, budget, resume)
        }
        Command::Bounds { base, family } => cmd_bounds(base, family),
        Command::Conjectures { which, bases, budget } => cmd_conjectures(which, bases, budget),
        Command::OeisCheck {
            bfile,
            seq,
            what,
            family,
            bases,
            index_offset,
        } => cmd_oeis_check(&bfile, &seq, what, family, bases, index_offset),
    }
}

fn cmd_aset(base: u32) -> Result<Outcome, Failure> {
    let set = residues::aset(base)?;
    let members: Vec<String> = set.members.iter().map(u64::to_string).collect();
    let table = Table::new(["base", "members", "theory"])
        .row([base.to_string(), members.join(" "), set.prediction.to_string()])
        .plain(vec![set.to_string()]);
    let results = json!({
        "members": set.members,
        "prediction": set.prediction,
        "agrees_with_prediction": set.agrees_with_prediction(),
    });
    Ok(Outcome::new(Some(base), None, results, table))
}

fn cmd_classify(base: u32, value: &str, as_digits: bool) -> Result<Outcome, Failure> {
    let ds = if as_digits {
        digits::parse(value, base)?
    } else {
        let n: BigUint = value
            .parse()
            .map_err(|_| usage(format!("{value:?} is not a nonnegative decimal integer")))?;
        digits::to_digits(&n, base)?
    };
    let n: BigUint = ds.value()?;
    let labels: Vec<String> = ds.classify().iter().map(ToString::to_string).collect();
    let line = if labels.is_empty() {
        "none".to_string()
    } else {
        labels.join(", ")
    };
    let table = Table::new(["base", "value", "digits", "labels"])
        .row([base.to_string(), n.to_string(), ds.render(), labels.join("; ")])
        .plain(vec![line]);
    let results = json!({
        "value": n.to_string(),
        "digits": ds.render(),
        "digit_sum": ds.digit_sum(),
        "labels": ds.classify(),
    });
    Ok(Outcome::new(Some(base), None, results, table))
}

fn cmd_squares(base: u32, family: Family, count_only: bool, budget: u128) -> Result<Outcome, Failure> {
    let options = ScanOptions {
        budget: (budget > 0).then_some(budget),
        short_circuit: true,
    };
    let scan = squares::enumerate_auto(base, family, options)?;
    let mut plain = vec![format!(
        "base {base} {family}: {} strict squares ({} roots tested, {} skipped by the residue filter)",
        scan.count, scan.scanned, scan.filtered
    )];
    let mut table = Table::new(["root", "square", "written_in_base"]);
    let mut rows = Vec::new();
    for m in &scan.roots {
        let sq = m * m;
        let ds = digits::to_digits(&sq, base)?;
        if !count_only {
            plain.push(format!("{m}^2 = {sq} = {}", ds.render()));
            table = table.row([m.to_string(), sq.to_string(), ds.render()]);
        }
        rows.push(json!({"root": m.to_string(), "square": sq.to_string(), "digits": ds.render()}));
    }
    if count_only {
        table = Table::new(["base", "family", "count", "scanned", "filtered"]).row([
            base.to_string(),
            family.to_string(),
            scan.count.to_string(),
            scan.scanned.to_string(),
            scan.filtered.to_string(),
        ]);
    }
    let mut results = json!({
        "count": scan.count,
        "scanned": scan.scanned,
        "filtered": scan.filtered,
    });
    if !count_only {
        results["roots"] = Json::Array(rows);
    }
    Ok(Outcome::new(Some(base), Some(family), results, table.plain(plain)))
}

fn cmd_prime_search(
    base: u32,
    family: Family,
    budget: u64,
    resume: Option<PathBuf>,
) -> Result<Outcome, Failure> {
    let state = match resume.as_ref().filter(|p| p.exists()) {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            let state = SearchState::from_json(&text)?;
            if state.base != base || state.family != family {
                return Err(Error::StateMismatch {
                    base,
                    family: family.name(),
                }
                .into());
            }
            state
        }
        None => SearchState::fresh(base, family)?,
    };
    let options = SearchOptions {
        budget: (budget > 0).then_some(budget),
        ..SearchOptions::default()
    };
    match search::resume_auto(state, options)? {
        SearchOutcome::Found(report) => {
            let bound = search::lower_bound(base, family).ok();
            let rendered = report.digits.render();
            let plain = vec![
                format!("{base} {} {rendered}", report.smallest_prime),
                format!(
                    "digit sum {}, {} by {}, {} candidates tested, {} multisets pruned",
                    report.digit_sum,
                    report.verdict.label(),
                    output::method_label(&report.verdict),
                    report.candidates_tested,
                    report.multisets_pruned
                ),
            ];
            let table = Table::new([
                "base",
                "family",
                "smallest_prime",
                "written_in_base",
                "digit_sum",
                "verdict",
                "candidates_tested",
                "multisets_pruned",
            ])
            .row([
                base.to_string(),
                family.to_string(),
                report.smallest_prime.to_string(),
                rendered.clone(),
                report.digit_sum.to_string(),
                report.verdict.label().to_string(),
                report.candidates_tested.to_string(),
                report.multisets_pruned.to_string(),
            ])
            .plain(plain);
            let mut results = serde_json::to_value(&report).expect("report serializes");
            results["rendered"] = json!(rendered);
            if let Some(b) = bound {
                results["lower_bound"] = json!(b.bound_value.to_string());
                results["respects_lower_bound"] = json!(b.is_respected_by(&report.smallest_prime));
            }
            Ok(Outcome::new(Some(base), Some(family), results, table))
        }
        SearchOutcome::BudgetExhausted(state) => {
            let mut notes = vec![format!(
                "budget exhausted after {} candidates at {} digits",
                state.candidates_tested, state.k
            )];
            if let Some(path) = &resume {
                std::fs::write(path, state.to_json())
                    .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
                notes.push(format!("state written to {}", path.display()));
            }
            let table = Table::new(["base", "family", "status", "digits", "candidates_tested"])
                .row([
                    base.to_string(),
                    family.to_string(),
                    "budget-exhausted".to_string(),
                    state.k.to_string(),
                    state.candidates_tested.to_string(),
                ])
                .plain(notes.clone());
            let results = json!({
                "status": "budget-exhausted",
                "state": state,
            });
            let mut out = Outcome::new(Some(base), Some(family), results, table);
            out.code = EXIT_BUDGET;
            out.notes = notes;
            Ok(out)
        }
    }
}

fn cmd_bounds(base: u32, family: Family) -> Result<Outcome, Failure> {
    let spec = search::lower_bound(base, family)?;
    let rendered = spec.bound_digits.render();
    let mut plain = vec![
        format!(
            "base {base} {family} primes are at least {} = {rendered} (extra digit {})",
            spec.bound_value,
            spec.rule.extra_digit()
        ),
        format!("closed form: {}", spec.closed_form),
        format!(
            "published form: {}/{}",
            spec.published_form.numerator, spec.published_form.denominator
        ),
    ];
    let mut notes = Vec::new();
    if let Some(w) = &spec.warning {
        plain.push(format!("warning: {w}"));
        notes.push(format!("warning: {w}"));
    }
    let table = Table::new(["base", "family", "bound", "written_in_base", "closed_form", "published_form", "warning"])
        .row([
            base.to_string(),
            family.to_string(),
            spec.bound_value.to_string(),
            rendered,
            spec.closed_form.to_string(),
            format!("{}/{}", spec.published_form.numerator, spec.published_form.denominator),
            spec.warning.clone().unwrap_or_default(),
        ])
        .plain(plain);
    let results = serde_json::to_value(&spec).expect("bound serializes");
    let mut out = Outcome::new(Some(base), Some(family), results, table);
    out.notes = notes;
    Ok(out)
}

fn cmd_conjectures(which: u8, bases: RangeInclusive<u32>, budget: Option<u128>) -> Result<Outcome, Failure> {
    let families = if which <= 2 {
        [Family::Pandigital, Family::Penholodigital]
    } else {
        [Family::Subpandigital, Family::Subpenholodigital]
    };
    let existence = which == 1 || which == 3;
    let mut table = Table::new(["base", "family", "observed", "predicted", "status"]);
    let mut plain = Vec::new();
    let mut rows = Vec::new();
    let mut mismatches = 0;
    for family in families {
        if existence {
            let options = ScanOptions {
                budget: match budget {
                    Some(0) => None,
                    Some(b) => Some(b),
                    None => Some(squares::DEFAULT_SCAN_BUDGET),
                },
                short_circuit: true,
            };
            for r in squares::conjecture_existence_report(bases.clone(), family, options)? {
                let observed = format!("{} squares", r.count);
                let predicted = match r.predicted {
                    Some(true) => "exist",
                    Some(false) => "none",
                    None => "-",
                };
                mismatches += (r.status == search::RowStatus::Mismatch) as usize;
                let status = output::status_label(&r.status);
                plain.push(format!("{:>3} {:<18} {:<14} {:<6} {status}", r.base, family, observed, predicted));
                table = table.row([r.base.to_string(), family.to_string(), r.count.to_string(), predicted.to_string(), status.to_string()]);
                rows.push(serde_json::to_value(&r).expect("row serializes"));
            }
        } else {
            let options = SearchOptions {
                budget: match budget {
                    Some(0) => None,
                    Some(b) => Some(u64::try_from(b).unwrap_or(u64::MAX)),
                    None => Some(search::DEFAULT_TEST_BUDGET),
                },
                ..SearchOptions::default()
            };
            for r in search::conjecture_digit_sum_report(bases.clone(), family, options)? {
                let predicted = r.predicted.map_or("-".to_string(), |p| p.to_string());
                mismatches += (r.status == search::RowStatus::Mismatch) as usize;
                let status = output::status_label(&r.status);
                plain.push(format!(
                    "{:>3} {:<18} {:>4} {:>4} {status}  {} = {}",
                    r.base, family, r.digit_sum, predicted, r.smallest_prime, r.digits
                ));
                table = table.row([r.base.to_string(), family.to_string(), r.digit_sum.to_string(), predicted, status.to_string()]);
                rows.push(serde_json::to_value(&r).expect("row serializes"));
            }
        }
    }
    plain.push(format!("{mismatches} mismatches"));
    let results = json!({
        "conjecture": which,
        "rows": rows,
        "mismatches": mismatches,
    });
    Ok(Outcome::new(None, None, results, table.plain(plain)))
}

fn cmd_oeis_check(
    path: &std::path::Path,
    seq: &str,
    what: What,
    family: Family,
    bases: RangeInclusive<u32>,
    index_offset: i64,
) -> Result<Outcome, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let reference = oeis::parse_bfile(&text, seq).map_err(|e| usage(e.to_string()))?;
    let mut computed = Vec::new();
    for base in bases {
        let value: BigUint = match what {
            What::SquareCounts => squares::enumerate_auto(base, family, ScanOptions::default())?
                .count
                .into(),
            What::SmallestPrimes => match search::smallest_prime_auto(base, family, SearchOptions::default())? {
                SearchOutcome::Found(r) => r.smallest_prime,
                SearchOutcome::BudgetExhausted(_) => {
                    return Err(Failure {
                        code: EXIT_BUDGET,
                        message: format!("budget exhausted at base {base}"),
                    })
                }
            },
        };
        computed.push((base as i64 + index_offset, value));
    }
    let diff = oeis::compare(&computed, &reference).map_err(|e| usage(e.to_string()))?;
    let mut table = Table::new(["index", "computed", "reference", "status"]);
    let mut plain = Vec::new();
    for r in &diff.rows {
        let status = if r.matches { "match" } else { "MISMATCH" };
        plain.push(format!("{:>4} {} {} {status}", r.index, r.computed, r.reference));
        table = table.row([r.index.to_string(), r.computed.to_string(), r.reference.to_string(), status.to_string()]);
    }
    plain.push(format!("{}: {} match, {} mismatch", diff.sequence_id, diff.matched, diff.mismatched));
    let results = serde_json::to_value(&diff).expect("diff serializes");
    let mut out = Outcome::new(None, Some(family), results, table.plain(plain));
    if !diff.all_match() {
        out.code = EXIT_MISMATCH;
    }
    Ok(out)
}
