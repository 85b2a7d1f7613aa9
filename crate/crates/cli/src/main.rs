//! Command-line frontend for the `repcount` library.
//!
//! Subcommands map one-to-one onto library operations: `count` and
//! `enumerate` for single values, `verify` for the exhaustively checked
//! claims (shift windows, maxima, oracle agreement), `scan` for tabulating
//! a function over a range, and `normalize` for the balanced digit rewrite.
//!
//! Exit codes: 0 on success (and when a verified claim holds), 1 when a
//! scan contradicts a claim (the offending points are printed), 2 for
//! usage and domain errors, 3 when a scan exceeds its point budget.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::json;

use repcount::{
    balanced_count, count_via_enumeration, enumerate_reps, hyper_count, normalize_balanced,
    parse_pattern, shift_difference, verify_balanced_maxima, verify_hyper_maxima,
    verify_shift_window, Alphabet, BaseParams, Error, Interval, MaxReport, MemoCache,
};

const DEFAULT_BUDGET: u64 = 10_000_000;

// ---------------------------------------------------------------------------
// Argument grammar
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(name = "repcount", version, about = "Count and explore hyper and balanced digit representations")]
struct Cli {
    /// Cap memoized entries per counting function (0 disables caching).
    #[arg(long, global = true, value_name = "N")]
    memo_limit: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the representations of one value.
    Count(ValueArgs),
    /// List the representations of one value, shortest first.
    Enumerate(ValueArgs),
    /// Check a claim by exhaustive scan; exit 1 if the scan contradicts it.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Tabulate a counting function (or a shift difference) over a range.
    Scan(ScanArgs),
    /// Rewrite a balanced pattern to avoid the digit -l, preserving value.
    Normalize(NormalizeArgs),
}

#[derive(Args)]
struct ValueArgs {
    /// Positional base d.
    #[arg(long)]
    base: u32,
    /// Which digit alphabet to count over.
    #[arg(long, value_enum)]
    kind: CountKind,
    /// The value: an integer or a digit pattern such as "[1 2 1]_4".
    #[arg(long, allow_hyphen_values = true)]
    n: String,
    /// Emit JSON instead of plain text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountKind {
    /// Digits 0..=d.
    Hyper,
    /// Digits -l..=l for d = 2l.
    Balanced,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// The shifted hyper count equals the balanced count on the j-th zero
    /// window, with difference -1 just outside both ends.
    Shift {
        #[arg(long)]
        base: u32,
        #[arg(long)]
        j: u32,
        /// Maximum number of points the scan may evaluate.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// The hyper count's maximum over the (k-1)-digit block is Fibonacci,
    /// first attained at the alternating 1-0 pattern.
    MaximaHyper {
        #[arg(long)]
        base: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// The base-4 balanced count's maximum over the (r+1)-th zero window is
    /// Fibonacci, attained at the closed-form point.
    MaximaBalanced {
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// The recurrence counts equal independently enumerated counts across a
    /// range (hyper on its nonnegative part; balanced when the base allows).
    Oracle {
        #[arg(long)]
        base: u32,
        /// Inclusive range "A..B".
        #[arg(long, allow_hyphen_values = true)]
        range: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    base: u32,
    /// What to tabulate: a count, or the order-j shift difference.
    #[arg(long, value_enum)]
    kind: ScanKind,
    /// Window order; required by (and only by) kind D.
    #[arg(long)]
    j: Option<u32>,
    /// Inclusive range "A..B".
    #[arg(long, allow_hyphen_values = true)]
    range: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Partition the range across this many threads (each with its own
    /// cache); output order is unaffected.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScanKind {
    Hyper,
    Balanced,
    /// The shift difference of order --j.
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct NormalizeArgs {
    /// A balanced digit pattern such as "[1 -2]_4".
    #[arg(long, allow_hyphen_values = true)]
    pattern: String,
}

// ---------------------------------------------------------------------------
// Error handling and exit codes
// ---------------------------------------------------------------------------

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(err: Error) -> CliError {
        CliError::Lib(err)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(Error::BudgetExceeded { .. }) => 3,
            CliError::Lib(Error::WitnessFailed { .. }) => 1,
            CliError::Lib(_) => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(msg) => msg.clone(),
            CliError::Lib(err) => err.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let memo_limit = cli.memo_limit;
    match cli.command {
        Command::Count(args) => cmd_count(args, memo_limit),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(what) => match what {
            VerifyCommand::Shift { base, j, budget, json } => {
                cmd_verify_shift(base, j, budget, json, memo_limit)
            }
            VerifyCommand::MaximaHyper { base, k, budget, json } => {
                cmd_verify_maxima_hyper(base, k, budget, json, memo_limit)
            }
            VerifyCommand::MaximaBalanced { r, budget, json } => {
                cmd_verify_maxima_balanced(r, budget, json, memo_limit)
            }
            VerifyCommand::Oracle { base, range, budget } => {
                cmd_verify_oracle(base, range, budget, memo_limit)
            }
        },
        Command::Scan(args) => cmd_scan(args, memo_limit),
        Command::Normalize(args) => cmd_normalize(args),
    }
}

// ---------------------------------------------------------------------------
// Shared parsing helpers
// ---------------------------------------------------------------------------

fn make_cache(base: BaseParams, memo_limit: Option<usize>) -> MemoCache {
    match memo_limit {
        Some(limit) => MemoCache::with_limit(base, limit),
        None => MemoCache::new(base),
    }
}

/// `--n` accepts a plain integer or a digit pattern; a pattern must carry
/// the same base as `--base`.
fn parse_value(text: &str, base: BaseParams) -> Result<BigInt, CliError> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let pattern = parse_pattern(trimmed)?;
        if pattern.base() != base {
            return Err(usage(format!(
                "pattern base {} does not match --base {}",
                pattern.base(),
                base
            )));
        }
        Ok(pattern.eval())
    } else {
        BigInt::from_str(trimmed)
            .map_err(|_| usage(format!("--n must be an integer or a [..]_d pattern, got {text:?}")))
    }
}

/// Inclusive integer range "A..B" with A <= B.
fn parse_range(text: &str) -> Result<Interval, CliError> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| usage(format!("--range must look like A..B, got {text:?}")))?;
    let lo = BigInt::from_str(lo.trim())
        .map_err(|_| usage(format!("range start {:?} is not an integer", lo.trim())))?;
    let hi = BigInt::from_str(hi.trim())
        .map_err(|_| usage(format!("range end {:?} is not an integer", hi.trim())))?;
    Interval::new(lo, hi).map_err(CliError::from)
}

fn verdict(ok: bool) -> u8 {
    u8::from(!ok)
}

// ---------------------------------------------------------------------------
// count / enumerate
// ---------------------------------------------------------------------------

fn cmd_count(args: ValueArgs, memo_limit: Option<usize>) -> Result<u8, CliError> {
    let base = BaseParams::new(args.base)?;
    let n = parse_value(&args.n, base)?;
    if args.kind == CountKind::Hyper && n.is_negative() {
        return Err(usage("hyper counts are only defined for n >= 0"));
    }
    let mut cache = make_cache(base, memo_limit);
    let (kind, count) = match args.kind {
        CountKind::Hyper => ("hyper", hyper_count(&n, &mut cache)?),
        CountKind::Balanced => ("balanced", balanced_count(&n, &mut cache)?),
    };
    if args.json {
        println!(
            "{}",
            json!({
                "base": args.base,
                "kind": kind,
                "n": n.to_string(),
                "count": count.to_string(),
            })
        );
    } else {
        println!("{count}");
    }
    Ok(0)
}

fn cmd_enumerate(args: ValueArgs) -> Result<u8, CliError> {
    let base = BaseParams::new(args.base)?;
    let n = parse_value(&args.n, base)?;
    if args.kind == CountKind::Hyper && n.is_negative() {
        return Err(usage("hyper representations only exist for n >= 0"));
    }
    let alphabet = match args.kind {
        CountKind::Hyper => Alphabet::Hyper,
        CountKind::Balanced => Alphabet::Balanced,
    };
    let reps = enumerate_reps(&n, base, alphabet)?;
    if args.json {
        let list: Vec<String> = reps.iter().map(|r| r.to_string()).collect();
        println!("{}", json!(list));
    } else {
        for rep in &reps {
            println!("{rep}");
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify_shift(
    base: u32,
    j: u32,
    budget: u64,
    json: bool,
    memo_limit: Option<usize>,
) -> Result<u8, CliError> {
    let base = BaseParams::new(base)?;
    let mut cache = make_cache(base, memo_limit);
    let report = verify_shift_window(j, &mut cache, budget)?;
    if json {
        let failures: Vec<[String; 2]> = report
            .failures
            .iter()
            .map(|(n, diff)| [n.to_string(), diff.to_string()])
            .collect();
        println!(
            "{}",
            json!({
                "base": report.base.d(),
                "j": report.j,
                "interval": [report.window.lo().to_string(), report.window.hi().to_string()],
                "zero_on_interval": report.zero_on_window(),
                "left_boundary": report.left_boundary.to_string(),
                "right_boundary": report.right_boundary.to_string(),
                "failures": failures,
            })
        );
    } else {
        println!(
            "shift window j={} base={}: {} ({} points)",
            report.j,
            report.base,
            report.window,
            report.window.point_count()
        );
        println!(
            "boundary probes: left {}, right {}",
            report.left_boundary, report.right_boundary
        );
        if report.zero_on_window() {
            println!("interior: difference is zero everywhere");
        } else {
            for (n, diff) in &report.failures {
                println!("deviation at n = {n}: difference = {diff}");
            }
        }
        println!("verdict: {}", if report.holds() { "holds" } else { "VIOLATED" });
    }
    Ok(verdict(report.holds()))
}

fn print_max_report(report: &MaxReport, ok: bool, json: bool) {
    if json {
        println!(
            "{}",
            json!({
                "interval": [report.window.lo().to_string(), report.window.hi().to_string()],
                "max": report.max_value.to_string(),
                "first_argmax": report.first_argmax.to_string(),
                "predicted_argmax": report.predicted_argmax.to_string(),
                "agree": ok,
            })
        );
    } else {
        println!(
            "window {}: max {} first at {} (predicted {} with value {})",
            report.window,
            report.max_value,
            report.first_argmax,
            report.predicted_argmax,
            report.predicted_value
        );
        println!("verdict: {}", if ok { "holds" } else { "VIOLATED" });
    }
}

fn cmd_verify_maxima_hyper(
    base: u32,
    k: u32,
    budget: u64,
    json: bool,
    memo_limit: Option<usize>,
) -> Result<u8, CliError> {
    let base = BaseParams::new(base)?;
    let mut cache = make_cache(base, memo_limit);
    let report = verify_hyper_maxima(k, &mut cache, budget)?;
    // The hyper claim also pins *where the maximum first occurs*.
    let ok = report.agree && report.first_argmax == report.predicted_argmax;
    print_max_report(&report, ok, json);
    Ok(verdict(ok))
}

fn cmd_verify_maxima_balanced(
    r: u32,
    budget: u64,
    json: bool,
    memo_limit: Option<usize>,
) -> Result<u8, CliError> {
    let base = BaseParams::new(4).expect("4 is a valid base");
    let mut cache = make_cache(base, memo_limit);
    let report = verify_balanced_maxima(r, &mut cache, budget)?;
    print_max_report(&report, report.agree, json);
    Ok(verdict(report.agree))
}

fn cmd_verify_oracle(
    base: u32,
    range: String,
    budget: u64,
    memo_limit: Option<usize>,
) -> Result<u8, CliError> {
    let base = BaseParams::new(base)?;
    let window = parse_range(&range)?;
    let check_balanced = base.balanced_digit_bound().is_ok();

    // Budget: one check per (point, alphabet) pair actually evaluated.
    let balanced_points = if check_balanced {
        window.point_count()
    } else {
        0u32.into()
    };
    let hyper_points = if window.hi().is_negative() {
        0u32.into()
    } else {
        let lo = window.lo().clone().max(BigInt::from(0));
        Interval::new(lo, window.hi().clone())
            .expect("hi >= 0 >= lo bound")
            .point_count()
    };
    let needed = balanced_points + hyper_points;
    if needed > budget.into() {
        return Err(Error::BudgetExceeded { needed, budget }.into());
    }

    let mut cache = make_cache(base, memo_limit);
    let mut checks = 0u64;
    for n in window.points() {
        if !n.is_negative() {
            let by_recurrence = hyper_count(&n, &mut cache)?;
            let by_enumeration = count_via_enumeration(&n, base, Alphabet::Hyper)?;
            if by_recurrence != by_enumeration {
                println!(
                    "oracle mismatch: hyper n = {n}: recurrence {by_recurrence}, enumeration {by_enumeration}"
                );
                return Ok(1);
            }
            checks += 1;
        }
        if check_balanced {
            let by_recurrence = balanced_count(&n, &mut cache)?;
            let by_enumeration = count_via_enumeration(&n, base, Alphabet::Balanced)?;
            if by_recurrence != by_enumeration {
                println!(
                    "oracle mismatch: balanced n = {n}: recurrence {by_recurrence}, enumeration {by_enumeration}"
                );
                return Ok(1);
            }
            checks += 1;
        }
    }
    println!(
        "oracle agreement holds on {} (base {}, {} checks)",
        window, base, checks
    );
    Ok(0)
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

fn cmd_scan(args: ScanArgs, memo_limit: Option<usize>) -> Result<u8, CliError> {
    let base = BaseParams::new(args.base)?;
    let window = parse_range(&args.range)?;
    let j = match (args.kind, args.j) {
        (ScanKind::D, Some(j)) => Some(j),
        (ScanKind::D, None) => return Err(usage("scan --kind D requires --j")),
        (_, None) => None,
        (_, Some(_)) => return Err(usage("--j only applies to --kind D")),
    };
    if args.workers == 0 {
        return Err(usage("--workers must be at least 1"));
    }
    let needed = window.point_count();
    if needed > args.budget.into() {
        return Err(Error::BudgetExceeded {
            needed,
            budget: args.budget,
        }
        .into());
    }

    // Validate the base for the requested function up front, so worker
    // threads cannot hit a domain error mid-scan.
    {
        let mut probe = make_cache(base, Some(0));
        match args.kind {
            ScanKind::Hyper => drop(hyper_count(&BigInt::from(0), &mut probe)?),
            ScanKind::Balanced => drop(balanced_count(&BigInt::from(0), &mut probe)?),
            ScanKind::D => drop(shift_difference(j.expect("checked"), &BigInt::from(0), &mut probe)?),
        }
    }

    let rows = scan_rows(base, args.kind, j, &window, args.workers, memo_limit)?;
    match args.format {
        OutputFormat::Csv => {
            println!("n,value");
            for (n, value) in &rows {
                println!("{n},{value}");
            }
        }
        OutputFormat::Json => {
            let list: Vec<[String; 2]> = rows
                .iter()
                .map(|(n, value)| [n.to_string(), value.to_string()])
                .collect();
            println!("{}", json!(list));
        }
    }
    Ok(0)
}

/// Evaluates the scan in `workers` contiguous chunks, each on its own thread
/// with its own cache, and stitches the results back in range order.
fn scan_rows(
    base: BaseParams,
    kind: ScanKind,
    j: Option<u32>,
    window: &Interval,
    workers: usize,
    memo_limit: Option<usize>,
) -> Result<Vec<(BigInt, BigInt)>, CliError> {
    let total = usize::try_from(u64::try_from(window.point_count()).map_err(|_| {
        usage("scan range too large to materialize")
    })?)
    .map_err(|_| usage("scan range too large to materialize"))?;
    let chunk = total.div_ceil(workers.min(total.max(1)));

    let evaluate_chunk = |start: usize, len: usize| -> Result<Vec<(BigInt, BigInt)>, Error> {
        let mut cache = make_cache(base, memo_limit);
        let mut out = Vec::with_capacity(len);
        let mut n = window.lo() + BigInt::from(start);
        for _ in 0..len {
            let value = match kind {
                ScanKind::Hyper => BigInt::from(hyper_count(&n, &mut cache)?),
                ScanKind::Balanced => BigInt::from(balanced_count(&n, &mut cache)?),
                ScanKind::D => shift_difference(j.expect("present for kind D"), &n, &mut cache)?,
            };
            out.push((n.clone(), value));
            n += 1;
        }
        Ok(out)
    };

    if workers <= 1 || total <= 1 {
        return evaluate_chunk(0, total).map_err(CliError::from);
    }

    let chunks: Vec<(usize, usize)> = (0..)
        .map(|i| i * chunk)
        .take_while(|&start| start < total)
        .map(|start| (start, chunk.min(total - start)))
        .collect();
    let mut rows = Vec::with_capacity(total);
    std::thread::scope(|scope| -> Result<(), Error> {
        let handles: Vec<_> = chunks
            .iter()
            .map(|&(start, len)| scope.spawn(move || evaluate_chunk(start, len)))
            .collect();
        for handle in handles {
            rows.extend(handle.join().expect("scan worker panicked")?);
        }
        Ok(())
    })?;
    Ok(rows)
}

// ---------------------------------------------------------------------------
// normalize
// ---------------------------------------------------------------------------

fn cmd_normalize(args: NormalizeArgs) -> Result<u8, CliError> {
    let pattern = parse_pattern(args.pattern.trim())?;
    let normalized = normalize_balanced(&pattern.expand())?;
    println!("{normalized}");
    Ok(0)
}

// ---------------------------------------------------------------------------
