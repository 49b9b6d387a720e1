//! Command-line driver behind the `simperm` binary.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid permutation (or a
//! permutation the command cannot take), 3 guard exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::classify::{is_parallel_alternation, simplify_parallel_alternation};
use crate::enumerate::{
    all_simple_bruteforce_with_guard, simple_via_extension_with_guard, BRUTE_FORCE_GUARD, EXTENSION_GUARD,
};
use crate::error::Error;
use crate::essential::{
    double_count_check_with_guard, extension_analysis, inessential_entries, verify_theorem_with_guard, EXHAUSTIVE_GUARD,
};
use crate::intervals::{is_simple, minimal_nontrivial_intervals, nontrivial_intervals};
use crate::perm::Permutation;
use crate::plot::{PlotFormat, PlotSpec};
use crate::stats::{inessential_trend_range, interval_count_exhaustive, interval_count_experiment, TREND_GUARD};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "simperm",
    version,
    about = "Simple permutations: intervals, alternations, inessential entries"
)]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Emit CSV (stats, trend).
    #[arg(long, global = true, conflicts_with = "json")]
    csv: bool,

    /// Worker threads for exhaustive and sampling commands.
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Read newline-delimited permutations from a file ('#' starts a comment).
    #[arg(long, global = true)]
    file: Option<PathBuf>,

    /// Override the length cap of exhaustive commands.
    #[arg(long, global = true)]
    guard: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EnumMethod {
    Brute,
    Extension,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Ascii,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Simplicity test with a witness interval.
    Check { perm: Option<String> },
    /// Nontrivial intervals.
    Intervals {
        perm: Option<String>,
        /// Only the inclusion-minimal ones.
        #[arg(long)]
        minimal: bool,
    },
    /// Parallel-alternation recognition.
    Classify { perm: Option<String> },
    /// Inessential entries of a simple permutation.
    Inessential { perm: Option<String> },
    /// All simple permutations of a length.
    Enumerate {
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum, default_value = "brute")]
        method: EnumMethod,
        #[arg(long)]
        count_only: bool,
    },
    /// Exhaustively check every simple permutation up to a length.
    VerifyTheorem {
        #[arg(long)]
        max_length: usize,
        #[arg(long, default_value_t = 1)]
        min_length: usize,
    },
    /// Census of the one-point extensions of a simple permutation.
    Extensions {
        perm: Option<String>,
        /// List every slot.
        #[arg(long)]
        slots: bool,
    },
    /// Count (simple σ of length n+1, inessential entry) pairs two ways.
    DoubleCount {
        #[arg(long)]
        length: usize,
    },
    /// Monte Carlo interval statistics.
    Stats {
        #[arg(long)]
        length: usize,
        #[arg(long, required_unless_present = "exhaustive")]
        samples: Option<u64>,
        #[arg(long, required_unless_present = "exhaustive")]
        seed: Option<u64>,
        /// Use all n! permutations instead of sampling.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Mean number of inessential entries by length.
    Trend {
        #[arg(long)]
        max_length: usize,
        #[arg(long, default_value_t = 5)]
        min_length: usize,
    },
    /// Plot a permutation.
    Plot {
        perm: Option<String>,
        /// Shade the window i,j (repeatable).
        #[arg(long, value_parser = parse_window)]
        highlight: Vec<(usize, usize)>,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
        #[arg(long, default_value_t = 24)]
        cell_size: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn parse_window(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected i,j")?;
    let i = a.trim().parse().map_err(|e| format!("{e}"))?;
    let j = b.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((i, j))
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooLarge { .. } => EXIT_GUARD,
            Error::Parse { .. }
            | Error::NotAPermutation(_)
            | Error::NotSimple(_)
            | Error::NotAParallelAlternation(_)
            | Error::TooSmall { .. } => EXIT_INVALID,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
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

type CmdResult = Result<(), Failure>;

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{shown}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{shown}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.workers {
        Some(0) => Err(usage("--workers must be at least 1")),
        Some(w) => match rayon::ThreadPoolBuilder::new().num_threads(w).build() {
            Ok(pool) => {
                // Output is buffered so the command can run on the pool.
                let (result, buf) = pool.install(|| {
                    let mut buf = Vec::new();
                    (dispatch(&cli, &mut buf), buf)
                });
                out.write_all(&buf).map_err(Failure::from).and(result)
            }
            Err(e) => Err(usage(e.to_string())),
        },
        None => dispatch(&cli, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Permutations named on the command line or in `--file`.
fn inputs(cli: &Cli, perm: &Option<String>) -> Result<Vec<Permutation>, Failure> {
    match (perm, &cli.file) {
        (Some(_), Some(_)) => Err(usage("give a permutation or --file, not both")),
        (None, None) => Err(usage("missing permutation (positional argument or --file)")),
        (Some(text), None) => Ok(vec![text.parse()?]),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)?;
            let mut perms = Vec::new();
            for (lineno, line) in text.lines().enumerate() {
                let line = line.split('#').next().unwrap_or("").trim();
                if line.is_empty() {
                    continue;
                }
                let p = line.parse::<Permutation>().map_err(|e| {
                    let mut f = Failure::from(e);
                    f.message = format!("{}:{}: {}", path.display(), lineno + 1, f.message);
                    f
                })?;
                perms.push(p);
            }
            Ok(perms)
        }
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> CmdResult {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| usage(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

/// One JSON document: the bare report for a single input, an array for a
/// file.
fn emit_json_many<T: Serialize>(out: &mut dyn Write, cli: &Cli, items: Vec<T>) -> CmdResult {
    if cli.file.is_none() && items.len() == 1 {
        emit_json(out, &items[0])
    } else {
        emit_json(out, &items)
    }
}

fn guard_or(cli: &Cli, default: usize) -> usize {
    cli.guard.unwrap_or(default)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    if cli.csv && !matches!(cli.command, Command::Stats { .. } | Command::Trend { .. }) {
        return Err(usage("--csv applies to stats and trend only"));
    }
    match &cli.command {
        Command::Check { perm } => {
            let mut docs = Vec::new();
            for p in inputs(cli, perm)? {
                let r = is_simple(&p);
                if cli.json {
                    docs.push(json!({ "permutation": p, "simple": r.simple, "witness": r.witness }));
                } else {
                    match r.witness {
                        None => writeln!(out, "{p}: simple")?,
                        Some(w) => writeln!(
                            out,
                            "{p}: not simple (interval [{},{}] with values {}..{})",
                            w.i, w.j, w.vmin, w.vmax
                        )?,
                    }
                }
            }
            if cli.json {
                emit_json_many(out, cli, docs)?;
            }
        }
        Command::Intervals { perm, minimal } => {
            let mut docs = Vec::new();
            for p in inputs(cli, perm)? {
                let ws = if *minimal {
                    minimal_nontrivial_intervals(&p)
                } else {
                    nontrivial_intervals(&p)
                };
                if cli.json {
                    docs.push(json!({ "permutation": p, "minimal": minimal, "intervals": ws }));
                } else {
                    writeln!(out, "{p}: {} interval(s)", ws.len())?;
                    for w in ws {
                        writeln!(out, "  [{},{}] values {}..{}", w.i, w.j, w.vmin, w.vmax)?;
                    }
                }
            }
            if cli.json {
                emit_json_many(out, cli, docs)?;
            }
        }
        Command::Classify { perm } => {
            let mut docs = Vec::new();
            for p in inputs(cli, perm)? {
                let witness = is_parallel_alternation(&p);
                let repair = witness
                    .as_ref()
                    .map(|_| simplify_parallel_alternation(&p))
                    .transpose()?;
                if cli.json {
                    docs.push(json!({
                        "permutation": p,
                        "parallel_alternation": witness.is_some(),
                        "witness": witness,
                        "repair": repair,
                    }));
                    continue;
                }
                match (witness, repair) {
                    (Some(w), Some(r)) => {
                        let axis = serde_json::to_value(w.axis).unwrap_or_default();
                        let dir = serde_json::to_value(w.direction).unwrap_or_default();
                        writeln!(
                            out,
                            "{p}: parallel alternation ({}, {})",
                            axis.as_str().unwrap_or(""),
                            dir.as_str().unwrap_or("")
                        )?;
                        let removed: Vec<String> = r.removed.iter().map(|e| e.to_string()).collect();
                        writeln!(out, "  simple after removing [{}]: {}", removed.join(", "), r.result)?;
                    }
                    _ => writeln!(out, "{p}: not a parallel alternation")?,
                }
            }
            if cli.json {
                emit_json_many(out, cli, docs)?;
            }
        }
        Command::Inessential { perm } => {
            let mut docs = Vec::new();
            for p in inputs(cli, perm)? {
                let r = inessential_entries(&p)?;
                if cli.json {
                    docs.push(r);
                    continue;
                }
                writeln!(
                    out,
                    "{p}: {} inessential entr{}",
                    r.inessential_count,
                    if r.inessential_count == 1 { "y" } else { "ies" }
                )?;
                for e in r.inessential() {
                    writeln!(
                        out,
                        "  ({}, {}) -> {}",
                        e.position,
                        e.value,
                        e.remainder.as_ref().expect("inessential entries carry their remainder")
                    )?;
                }
            }
            if cli.json {
                emit_json_many(out, cli, docs)?;
            }
        }
        Command::Enumerate {
            length,
            method,
            count_only,
        } => {
            let set = match method {
                EnumMethod::Brute => all_simple_bruteforce_with_guard(*length, guard_or(cli, BRUTE_FORCE_GUARD))?,
                EnumMethod::Extension => simple_via_extension_with_guard(*length, guard_or(cli, EXTENSION_GUARD))?,
            };
            match (cli.json, count_only) {
                (true, true) => emit_json(out, &json!({ "n": set.n, "method": set.method, "count": set.len() }))?,
                (true, false) => emit_json(out, &set.permutations)?,
                (false, true) => writeln!(out, "{}", set.len())?,
                (false, false) => {
                    for p in set.iter() {
                        writeln!(out, "{p}")?;
                    }
                }
            }
        }
        Command::VerifyTheorem { max_length, min_length } => {
            let guard = guard_or(cli, EXHAUSTIVE_GUARD);
            if *max_length > guard {
                return Err(Error::TooLarge { n: *max_length, guard }.into());
            }
            if *min_length == 0 || min_length > max_length {
                return Err(usage("need 1 <= --min-length <= --max-length"));
            }
            let mut reports = Vec::new();
            for n in *min_length..=*max_length {
                reports.push(verify_theorem_with_guard(n, guard)?);
            }
            let holds = reports.iter().all(|r| r.holds);
            if cli.json {
                emit_json(out, &json!({ "holds": holds, "reports": reports }))?;
            } else {
                for r in &reports {
                    writeln!(
                        out,
                        "n={}: {} simple, {} parallel alternations, {} with an inessential entry, {} counterexamples",
                        r.n,
                        r.simple_count,
                        r.parallel_alternation_simple_count,
                        r.simple_with_inessential_count,
                        r.counterexamples.len()
                    )?;
                    for c in &r.counterexamples {
                        writeln!(out, "  counterexample: {c}")?;
                    }
                }
                writeln!(
                    out,
                    "{}",
                    if holds {
                        "holds at every length"
                    } else {
                        "COUNTEREXAMPLES FOUND"
                    }
                )?;
            }
        }
        Command::Extensions { perm, slots } => {
            let mut docs = Vec::new();
            for p in inputs(cli, perm)? {
                let mut r = extension_analysis(&p)?;
                if !slots {
                    r.slots.clear();
                }
                if cli.json {
                    docs.push(r);
                    continue;
                }
                let c = r.counts;
                writeln!(
                    out,
                    "{p}: {} slots: {} doubleton ({} distinct), {} corner, {} simple, {} other; {} distinct results",
                    r.slot_count,
                    c.doubleton,
                    r.distinct_doubleton_results,
                    c.corner,
                    c.simple,
                    c.other,
                    r.distinct_results
                )?;
                writeln!(
                    out,
                    "  simple slots: measured {} = (n+1)(n-3) = {}; naive count n^2-3 = {}",
                    c.simple, r.measured_formula_simple, r.predicted_simple
                )?;
                for s in &r.slots {
                    let class = serde_json::to_value(s.class).unwrap_or_default();
                    writeln!(
                        out,
                        "  ({}, {}) {} {}",
                        s.position,
                        s.value,
                        class.as_str().unwrap_or(""),
                        s.result
                    )?;
                }
            }
            if cli.json {
                emit_json_many(out, cli, docs)?;
            }
        }
        Command::DoubleCount { length } => {
            let r = double_count_check_with_guard(*length, guard_or(cli, EXHAUSTIVE_GUARD))?;
            if cli.json {
                emit_json(out, &r)?;
            } else {
                writeln!(
                    out,
                    "n={}: inessential pairs at length {} = {}; simple extension slots at length {} = {}; {}",
                    r.n,
                    r.n + 1,
                    r.inessential_pairs,
                    r.n,
                    r.simple_extension_slots,
                    if r.equal { "equal" } else { "NOT EQUAL" }
                )?;
            }
        }
        Command::Stats {
            length,
            samples,
            seed,
            exhaustive,
        } => {
            let r = if *exhaustive {
                let guard = guard_or(cli, EXHAUSTIVE_GUARD);
                if *length > guard {
                    return Err(Error::TooLarge { n: *length, guard }.into());
                }
                interval_count_exhaustive(*length)?
            } else {
                let samples = samples.ok_or_else(|| usage("--samples is required"))?;
                let seed = seed.ok_or_else(|| usage("--seed is required"))?;
                interval_count_experiment(*length, samples, seed)?
            };
            if cli.json {
                emit_json(out, &r)?;
            } else if cli.csv {
                r.write_csv(&mut *out)?;
            } else {
                writeln!(out, "n={} samples={} seed={} ({})", r.n, r.samples, r.seed, r.generator)?;
                writeln!(
                    out,
                    "simple fraction {:.6} (e^-2 = {:.6})",
                    r.simple_fraction, r.e_minus_2
                )?;
                writeln!(
                    out,
                    "mean nontrivial intervals {:.4}; TV distance to Poisson(2) {:.4}",
                    r.mean_interval_count, r.tv_distance
                )?;
                writeln!(
                    out,
                    "samples with an interval of size >= 3: {:.4}",
                    r.large_interval_fraction
                )?;
                for b in &r.histogram {
                    writeln!(
                        out,
                        "  {:>3} {:>8} {:.5} {:.5}",
                        b.intervals, b.frequency, b.empirical, b.poisson
                    )?;
                }
            }
        }
        Command::Trend { max_length, min_length } => {
            let t = inessential_trend_range(*min_length, *max_length, guard_or(cli, TREND_GUARD))?;
            if cli.json {
                emit_json(out, &t)?;
            } else if cli.csv {
                t.write_csv(&mut *out)?;
            } else {
                writeln!(out, "   n   simple  inessential     mean   mean/n  check")?;
                for r in &t.rows {
                    writeln!(
                        out,
                        "{:>4} {:>8} {:>12} {:>8.4} {:>8.4}  {}",
                        r.n,
                        r.simple_count,
                        r.total_inessential,
                        r.mean_inessential,
                        r.mean_over_n,
                        if r.consistent { "ok" } else { "MISMATCH" }
                    )?;
                }
            }
        }
        Command::Plot {
            perm,
            highlight,
            format,
            cell_size,
            output,
        } => {
            let perms = inputs(cli, perm)?;
            if perms.len() != 1 {
                return Err(usage("plot takes exactly one permutation"));
            }
            let fmt = match format {
                Format::Svg => PlotFormat::Svg,
                Format::Ascii => PlotFormat::Ascii,
            };
            let mut spec = PlotSpec::new(perms.into_iter().next().unwrap(), fmt);
            spec.cell_size = *cell_size;
            for &(i, j) in highlight {
                spec.highlight_window(i, j)?;
            }
            let doc = spec.render();
            match output {
                Some(path) => fs::write(path, doc)?,
                None if cli.json => emit_json(
                    out,
                    &json!({ "format": format!("{format:?}").to_lowercase(), "document": doc }),
                )?,
                None => write!(out, "{doc}")?,
            }
        }
    }
    Ok(())
}
