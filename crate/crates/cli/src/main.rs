//! Command-line front end: verification, exact search, constructions, and
//! bound reports for binary codes whose nonzero distances form a pair
//! `{d1, d2}`, plus the pair-disjoint block families equivalent to the
//! `{d, d+2}` case.
//!
//! Exit codes: `0` success, `1` malformed input (bad flags, or a file
//! parse/validity failure, reported with its line number where one exists),
//! `2` infeasible request or exceeded size/time limit. Everything runs on a
//! single thread, configured entirely by flags.

mod budget;
mod formats;

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use budget::WallClockBudget;
use formats::{block_row, parse_code, parse_packing, write_code, write_packing};
use twodist::bounds::{parity_feasible, sandwich, threshold_estimate, CaseKind};
use twodist::combin::binomial;
use twodist::packings::{bose_triple_system, extend_packing, greedy_packing};
use twodist::search::{
    exact_a2, midpoint_analysis, optimality_report, packing_number_oracle, SearchError,
    SearchLimits,
};
use twodist::{Packing, TwoDistanceClass, TwoDistanceParams};

/// Exact sizes, bounds, and constructions for binary codes with two
/// distances, and for the block families they correspond to.
#[derive(Parser)]
#[command(name = "twodist", version, about)]
struct Cli {
    /// Output format: human-readable text or stable `key=value` lines.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Check a code file against a distance pair; report distances,
    /// weights, and a constant-weight translator when one exists.
    Verify(VerifyArgs),
    /// Exact largest code size for length n and distances {d1, d2},
    /// with a certificate code.
    Search(SearchArgs),
    /// Block-family commands: verify, constructions, exact search.
    #[command(subcommand)]
    Packing(PackingCommand),
    /// Extend a (d/2 + 1)-block family by two blocks, adding d/2 - 1
    /// points.
    Extend(ExtendArgs),
    /// Lower and upper bounds at one parameter set.
    Bounds(BoundsArgs),
    /// Length from which the quadratic construction beats every
    /// non-constant-weight case cap for good.
    Threshold(ThresholdArgs),
    /// Exhaustive per-weight-class midpoint counts for the two reference
    /// words at distance d + 2.
    Midpoint(MidpointArgs),
    /// Sweep lengths, printing the bound sandwich and, where feasible,
    /// exact values.
    Table(TableArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Code file to check.
    #[arg(long)]
    input: PathBuf,
    /// Smaller prescribed distance.
    #[arg(long)]
    d1: u32,
    /// Larger prescribed distance.
    #[arg(long)]
    d2: u32,
    /// Skip the constant-weight translator sweep above this length (the
    /// sweep visits up to 2^n candidates).
    #[arg(long, default_value_t = 20)]
    translate_limit: u32,
}

#[derive(Args)]
struct SearchArgs {
    /// Code length.
    #[arg(long)]
    n: u32,
    /// Smaller prescribed distance.
    #[arg(long)]
    d1: u32,
    /// Larger prescribed distance.
    #[arg(long)]
    d2: u32,
    /// Accept an equidistant certificate even when an optimal code
    /// realizing both distances exists.
    #[arg(long)]
    allow_equidistant: bool,
    /// Also report the packing and pair-counting bounds and whether some
    /// translate of the certificate is constant-weight (needs the
    /// {d, d+2} shape).
    #[arg(long)]
    optimality: bool,
    /// Stop searching after this many seconds; the best size found so far
    /// is then only a lower bound and the exit code is 2.
    #[arg(long, default_value_t = 60.0)]
    time_budget: f64,
    /// Refuse graphs with more vertices than this.
    #[arg(long, default_value_t = 50_000)]
    max_vertices: usize,
    /// Write the certificate as a code file.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum PackingCommand {
    /// Check a packing file: every pair of points in at most one block.
    Verify {
        /// Packing file to check.
        #[arg(long)]
        input: PathBuf,
    },
    /// Greedy construction over a seeded shuffle of all candidate blocks.
    Greedy {
        /// Number of points.
        #[arg(long)]
        v: u32,
        /// Block size.
        #[arg(long)]
        k: u32,
        /// Shuffle seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the family as a packing file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Algebraic triple system on v = 3 (mod 6) points covering every
    /// pair exactly once.
    Bose {
        /// Number of points; must be 3 mod 6.
        #[arg(long)]
        v: u32,
        /// Write the family as a packing file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exact packing number by clique search over all k-subsets,
    /// independent of the closed-form tables.
    Oracle {
        /// Number of points.
        #[arg(long)]
        v: u32,
        /// Block size.
        #[arg(long)]
        k: u32,
        /// Stop searching after this many seconds; the best count found so
        /// far is then only a lower bound and the exit code is 2.
        #[arg(long, default_value_t = 60.0)]
        time_budget: f64,
        /// Refuse subset graphs with more vertices than this.
        #[arg(long, default_value_t = 50_000)]
        max_vertices: usize,
        /// Write the best family found as a packing file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ExtendArgs {
    /// Packing file holding the family to extend.
    #[arg(long)]
    input: PathBuf,
    /// Code-side distance; blocks must have size d/2 + 1.
    #[arg(long)]
    d: u32,
    /// Give up after this many randomized attempts.
    #[arg(long, default_value_t = 100)]
    max_attempts: u32,
    /// Selection seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the extended family, with a provenance comment block.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    /// Code length.
    #[arg(long)]
    n: u32,
    /// Smaller prescribed distance.
    #[arg(long)]
    d1: u32,
    /// Larger prescribed distance.
    #[arg(long)]
    d2: u32,
}

#[derive(Args)]
struct ThresholdArgs {
    /// Smaller distance of the pair {d, d+2}; 4 or 6.
    #[arg(long)]
    d: u32,
}

#[derive(Args)]
struct MidpointArgs {
    /// Smaller distance of the pair {d, d+2}; 4 or 6.
    #[arg(long)]
    d: u32,
    /// Word length; needs room for weight d + 2.
    #[arg(long)]
    n: u32,
}

#[derive(Args)]
struct TableArgs {
    /// Smaller prescribed distance.
    #[arg(long)]
    d1: u32,
    /// Larger prescribed distance.
    #[arg(long)]
    d2: u32,
    /// First length of the sweep.
    #[arg(long)]
    from: u32,
    /// Last length of the sweep.
    #[arg(long)]
    to: u32,
    /// Run the exact search only when the word graph has at most this
    /// many vertices.
    #[arg(long, default_value_t = 2_000)]
    max_vertices: usize,
    /// Per-length time budget for the exact search, in seconds; lengths
    /// that run out are reported as lower bounds, not errors.
    #[arg(long, default_value_t = 5.0)]
    time_budget: f64,
}

/// A command failure, carrying the exit code contract.
enum Failure {
    /// Exit 1: bad flags or a file that fails to parse or verify.
    Malformed(String),
    /// Exit 2: the request is infeasible or exceeded a size/time limit.
    Infeasible(String),
}

type CmdResult = Result<(), Failure>;

/// Die quietly when the reader of our stdout goes away (`twodist ... |
/// head`); Rust masks SIGPIPE by default, which turns that into a panic.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                // Help and version requests print and exit 0.
                e.exit();
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    let format = cli.format;
    let result = match cli.command {
        Command::Verify(args) => run_verify(args, format),
        Command::Search(args) => run_search(args, format),
        Command::Packing(cmd) => match cmd {
            PackingCommand::Verify { input } => run_packing_verify(&input, format),
            PackingCommand::Greedy { v, k, seed, output } => {
                run_packing_greedy(v, k, seed, output.as_deref(), format)
            }
            PackingCommand::Bose { v, output } => run_packing_bose(v, output.as_deref(), format),
            PackingCommand::Oracle {
                v,
                k,
                time_budget,
                max_vertices,
                output,
            } => run_packing_oracle(v, k, time_budget, max_vertices, output.as_deref(), format),
        },
        Command::Extend(args) => run_extend(args, format),
        Command::Bounds(args) => run_bounds(args, format),
        Command::Threshold(args) => run_threshold(args, format),
        Command::Midpoint(args) => run_midpoint(args, format),
        Command::Table(args) => run_table(args, format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Malformed(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Infeasible(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn malformed(msg: impl Display) -> Failure {
    Failure::Malformed(msg.to_string())
}

fn infeasible(msg: impl Display) -> Failure {
    Failure::Infeasible(msg.to_string())
}

/// Size limits go to exit 2, everything else about the parameters to 1.
fn map_search_err(e: SearchError) -> Failure {
    match e {
        SearchError::TooManyVertices { .. } => infeasible(e),
        _ => malformed(e),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| malformed(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> CmdResult {
    fs::write(path, contents)
        .map_err(|e| malformed(format!("cannot write {}: {e}", path.display())))
}

fn params_for(n: u32, d1: u32, d2: u32) -> Result<TwoDistanceParams, Failure> {
    TwoDistanceParams::new(n, d1, d2).map_err(malformed)
}

/// One stable `key=value` line of machine output.
fn kv(key: impl Display, value: impl Display) {
    println!("{key}={value}");
}

// --- verify ---------------------------------------------------------------

fn run_verify(args: VerifyArgs, format: Format) -> CmdResult {
    let code = parse_code(&read_file(&args.input)?).map_err(malformed)?;
    let p = params_for(code.len(), args.d1, args.d2)?;
    let class = code.classify(&p);
    let distances = code.distance_set();
    let weights = code.weight_distribution();
    let translator = if code.len() <= args.translate_limit {
        Some(
            code.constant_weight_translator(args.translate_limit)
                .unwrap(),
        )
    } else {
        None // sweep skipped: 2^n candidates is too many
    };

    let class_tag = match class {
        TwoDistanceClass::Exact => "exact",
        TwoDistanceClass::SubsetOnly => "subset",
        TwoDistanceClass::No => "outside",
    };
    let dist_list = |set: &std::collections::BTreeSet<u32>| {
        set.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    match format {
        Format::Text => {
            println!("code: {} words of length {}", code.size(), code.len());
            println!(
                "distances realized: {{{}}}",
                dist_list(&distances).replace(',', ", ")
            );
            println!(
                "against {{{}, {}}}: {}",
                p.d1(),
                p.d2(),
                match class {
                    TwoDistanceClass::Exact => "both distances, nothing else",
                    TwoDistanceClass::SubsetOnly => "within the pair, one distance unused",
                    TwoDistanceClass::No => "a distance outside the pair occurs",
                }
            );
            println!("weights:");
            for (w, count) in &weights {
                println!("  weight {w}: {count} word(s)");
            }
            match &translator {
                None => println!(
                    "constant-weight translator: skipped (length above {})",
                    args.translate_limit
                ),
                Some(None) => println!("constant-weight translator: none exists"),
                Some(Some(y)) => println!("constant-weight translator: {y}"),
            }
        }
        Format::Machine => {
            kv("command", "verify");
            kv("n", code.len());
            kv("words", code.size());
            kv("d1", p.d1());
            kv("d2", p.d2());
            kv("distances", dist_list(&distances));
            kv("class", class_tag);
            for (w, count) in &weights {
                kv(format!("weight.{w}"), count);
            }
            match &translator {
                None => kv("translator", "skipped"),
                Some(None) => kv("translator", "none"),
                Some(Some(y)) => kv("translator", y),
            }
        }
    }

    if class == TwoDistanceClass::No {
        let offending = distances
            .iter()
            .find(|&&d| d != p.d1() && d != p.d2())
            .expect("class `No` means some distance is outside the pair");
        return Err(malformed(format!(
            "{}: distance {offending} outside {{{}, {}}}",
            args.input.display(),
            p.d1(),
            p.d2()
        )));
    }
    Ok(())
}

// --- search ---------------------------------------------------------------

fn run_search(args: SearchArgs, format: Format) -> CmdResult {
    let p = params_for(args.n, args.d1, args.d2)?;
    let limits = SearchLimits {
        max_vertices: args.max_vertices,
    };
    let mut budget = WallClockBudget::from_seconds(args.time_budget);

    let (result, extras) = if args.optimality {
        let report = optimality_report(&p, &limits, &mut budget).map_err(map_search_err)?;
        (report.search.clone(), Some(report))
    } else {
        let r =
            exact_a2(&p, !args.allow_equidistant, &limits, &mut budget).map_err(map_search_err)?;
        (r, None)
    };

    // Write the certificate before printing: if stdout is a pipe that closes
    // early, the process dies on SIGPIPE and a write placed after the report
    // would be lost.
    if let Some(path) = &args.output {
        let comments = vec![format!(
            "largest code: length {} distances {{{}, {}}} size {}{}",
            p.n(),
            p.d1(),
            p.d2(),
            result.value,
            if result.exact { "" } else { " (lower bound)" }
        )];
        write_file(path, &write_code(&result.certificate, &comments))?;
    }

    match format {
        Format::Text => {
            if result.exact {
                println!(
                    "largest code with length {} and distances in {{{}, {}}}: {} words",
                    p.n(),
                    p.d1(),
                    p.d2(),
                    result.value
                );
            } else {
                println!(
                    "best code found within budget: {} words (a lower bound only)",
                    result.value
                );
            }
            println!(
                "certificate realizes {}; search explored {} nodes",
                if result.both_distances_realized {
                    "both distances"
                } else {
                    "one distance"
                },
                result.nodes_explored
            );
            if let Some(report) = &extras {
                println!(
                    "packing lower bound: {} ({})",
                    report.packing_lower,
                    report.packing_lower_source.label()
                );
                match report.barg {
                    Some(b) => println!("pair-counting upper bound: {b}"),
                    None => println!("pair-counting upper bound: none below length 6"),
                }
                println!(
                    "constant-weight translate: {}",
                    if report.constant_weight_translate {
                        "yes"
                    } else {
                        "no"
                    }
                );
            }
            println!("certificate:");
            for w in result.certificate.words() {
                println!("  {w}");
            }
        }
        Format::Machine => {
            kv("command", "search");
            kv("n", p.n());
            kv("d1", p.d1());
            kv("d2", p.d2());
            kv("value", result.value);
            kv("exact", result.exact);
            kv("both_distances", result.both_distances_realized);
            kv("nodes", result.nodes_explored);
            if let Some(report) = &extras {
                kv("packing_lower", report.packing_lower);
                kv("packing_lower_source", report.packing_lower_source.label());
                if let Some(b) = report.barg {
                    kv("barg", b);
                }
                kv(
                    "constant_weight_translate",
                    report.constant_weight_translate,
                );
            }
            for (i, w) in result.certificate.words().iter().enumerate() {
                kv(format!("word.{i}"), w);
            }
        }
    }

    if !result.exact {
        return Err(infeasible(format!(
            "time budget of {}s exhausted after {} nodes; {} words is only a lower bound",
            args.time_budget, result.nodes_explored, result.value
        )));
    }
    Ok(())
}

// --- packing verify -------------------------------------------------------

fn run_packing_verify(input: &Path, format: Format) -> CmdResult {
    let p = parse_packing(&read_file(input)?).map_err(malformed)?;
    let report = p.verify();
    match format {
        Format::Text => {
            println!(
                "family: {} block(s) of size {} on {} points",
                p.block_count(),
                p.k(),
                p.v()
            );
            match report.first_violation {
                None => println!("pair coverage: every pair in at most one block"),
                Some(v) => println!(
                    "pair coverage: pair {{{}, {}}} lies in two blocks ({} and {})",
                    v.pair.0,
                    v.pair.1,
                    block_row(&p.blocks()[v.blocks.0]),
                    block_row(&p.blocks()[v.blocks.1])
                ),
            }
        }
        Format::Machine => {
            kv("command", "packing-verify");
            kv("v", p.v());
            kv("k", p.k());
            kv("blocks", p.block_count());
            kv("valid", report.valid);
            if let Some(v) = report.first_violation {
                kv("violation", format!("{} {}", v.pair.0, v.pair.1));
            }
        }
    }
    match report.first_violation {
        Some(v) => Err(malformed(format!(
            "{}: pair {{{}, {}}} covered twice",
            input.display(),
            v.pair.0,
            v.pair.1
        ))),
        None => Ok(()),
    }
}

// --- packing constructions ------------------------------------------------

/// Shared output path for the construction subcommands.
fn emit_packing(
    p: &Packing,
    comments: &[String],
    command: &str,
    fixed: &[(&str, String)],
    output: Option<&Path>,
    format: Format,
) -> CmdResult {
    // File first, report second: a pipe closing mid-report must not cost the
    // caller the file.
    if let Some(path) = output {
        write_file(path, &write_packing(p, comments))?;
    }
    match format {
        Format::Text => {
            println!(
                "{} block(s) of size {} on {} points",
                p.block_count(),
                p.k(),
                p.v()
            );
            for line in fixed {
                println!("{}: {}", line.0, line.1);
            }
            for b in p.blocks() {
                println!("  {}", block_row(b));
            }
        }
        Format::Machine => {
            kv("command", command);
            kv("v", p.v());
            kv("k", p.k());
            for (key, value) in fixed {
                kv(key, value);
            }
            kv("blocks", p.block_count());
            for (i, b) in p.blocks().iter().enumerate() {
                kv(format!("block.{i}"), block_row(b));
            }
        }
    }
    Ok(())
}

fn run_packing_greedy(
    v: u32,
    k: u32,
    seed: u64,
    output: Option<&Path>,
    format: Format,
) -> CmdResult {
    if k < 2 || k > v {
        return Err(malformed(format!("need 2 <= k <= v, got v={v} k={k}")));
    }
    let p = greedy_packing(v, k, seed);
    emit_packing(
        &p,
        &[format!("greedy family: v={v} k={k} seed={seed}")],
        "packing-greedy",
        &[("seed", seed.to_string())],
        output,
        format,
    )
}

fn run_packing_bose(v: u32, output: Option<&Path>, format: Format) -> CmdResult {
    let p = bose_triple_system(v).map_err(malformed)?;
    emit_packing(
        &p,
        &[format!(
            "triple system: v={v}, every pair covered exactly once"
        )],
        "packing-bose",
        &[],
        output,
        format,
    )
}

fn run_packing_oracle(
    v: u32,
    k: u32,
    time_budget: f64,
    max_vertices: usize,
    output: Option<&Path>,
    format: Format,
) -> CmdResult {
    let limits = SearchLimits { max_vertices };
    let mut budget = WallClockBudget::from_seconds(time_budget);
    let r = packing_number_oracle(v, k, &limits, &mut budget).map_err(map_search_err)?;
    if format == Format::Text {
        if r.exact {
            println!(
                "largest family of {k}-blocks on {v} points: {} blocks",
                r.value
            );
        } else {
            println!(
                "best family found within budget: {} blocks (a lower bound only)",
                r.value
            );
        }
        println!("search explored {} nodes", r.nodes_explored);
    }
    emit_packing(
        &r.certificate,
        &[format!(
            "largest family: v={v} k={k} blocks={}{}",
            r.value,
            if r.exact { "" } else { " (lower bound)" }
        )],
        "packing-oracle",
        &[
            ("value", r.value.to_string()),
            ("exact", r.exact.to_string()),
            ("nodes", r.nodes_explored.to_string()),
        ],
        output,
        format,
    )?;
    if !r.exact {
        return Err(infeasible(format!(
            "time budget of {time_budget}s exhausted after {} nodes; {} blocks is only a lower bound",
            r.nodes_explored, r.value
        )));
    }
    Ok(())
}

// --- extend ----------------------------------------------------------------

fn run_extend(args: ExtendArgs, format: Format) -> CmdResult {
    let input = parse_packing(&read_file(&args.input)?).map_err(malformed)?;
    let outcome =
        extend_packing(&input, args.d, args.max_attempts, args.seed).map_err(malformed)?;
    let Some(result) = outcome else {
        return Err(infeasible(format!(
            "no extension found within {} attempt(s); retry with a different --seed or more --max-attempts",
            args.max_attempts
        )));
    };

    let (s1, s2) = &result.added;
    let provenance = {
        let mut lines = vec![
            format!(
                "extension: v={} -> v={}, blocks {} -> {}, seed={}, attempt {}",
                input.v(),
                result.output.v(),
                result.input_blocks,
                result.output.block_count(),
                args.seed,
                result.attempts_used
            ),
            format!("round-1 set: {}", block_row(s1)),
            format!("round-2 set: {}", block_row(s2)),
        ];
        for r in &result.rewires {
            lines.push(format!(
                "rewired (round {}): {} -> {}",
                r.round,
                block_row(&r.before),
                block_row(&r.after)
            ));
        }
        lines
    };

    // File first, report second (see run_search).
    if let Some(path) = &args.output {
        write_file(path, &write_packing(&result.output, &provenance))?;
    }

    match format {
        Format::Text => {
            println!(
                "extended to {} block(s) of size {} on {} points",
                result.output.block_count(),
                result.output.k(),
                result.output.v()
            );
            for line in &provenance {
                println!("{line}");
            }
            for b in result.output.blocks() {
                println!("  {}", block_row(b));
            }
        }
        Format::Machine => {
            kv("command", "extend");
            kv("v", input.v());
            kv("k", input.k());
            kv("d", args.d);
            kv("seed", args.seed);
            kv("v_out", result.output.v());
            kv("attempts_used", result.attempts_used);
            kv("input_blocks", result.input_blocks);
            kv("output_blocks", result.output.block_count());
            kv("round1", block_row(s1));
            kv("round2", block_row(s2));
            for (i, r) in result.rewires.iter().enumerate() {
                kv(format!("rewire.{i}.round"), r.round);
                kv(format!("rewire.{i}.before"), block_row(&r.before));
                kv(format!("rewire.{i}.after"), block_row(&r.after));
            }
            for (i, b) in result.output.blocks().iter().enumerate() {
                kv(format!("block.{i}"), block_row(b));
            }
        }
    }
    Ok(())
}

// --- bounds -----------------------------------------------------------------

fn run_bounds(args: BoundsArgs, format: Format) -> CmdResult {
    let p = params_for(args.n, args.d1, args.d2)?;
    let report = sandwich(&p);
    let feasible = parity_feasible(&p);
    match format {
        Format::Text => {
            println!(
                "bounds for length {}, distances {{{}, {}}}",
                p.n(),
                p.d1(),
                p.d2()
            );
            println!(
                "realizing both distances: {}",
                if feasible {
                    "possible"
                } else {
                    "impossible by parity"
                }
            );
            println!("lower: {} ({})", report.lower, report.lower_source.label());
            println!("upper: {} ({})", report.upper, report.upper_source.label());
        }
        Format::Machine => {
            kv("command", "bounds");
            kv("n", p.n());
            kv("d1", p.d1());
            kv("d2", p.d2());
            kv("feasible", feasible);
            kv("lower", report.lower);
            kv("lower_source", report.lower_source.label());
            kv("upper", report.upper);
            kv("upper_source", report.upper_source.label());
        }
    }
    Ok(())
}

// --- threshold ---------------------------------------------------------------

fn case_tag(kind: CaseKind) -> String {
    match kind {
        CaseKind::MaxWeightTop => "top".into(),
        CaseKind::Intermediate(i) => format!("intermediate.{i}"),
        CaseKind::NearMinimum => "near-minimum".into(),
    }
}

fn run_threshold(args: ThresholdArgs, format: Format) -> CmdResult {
    let report = threshold_estimate(args.d).map_err(malformed)?;
    match format {
        Format::Text => {
            println!(
                "constant-weight threshold estimate for distances {{{}, {}}}",
                report.d,
                report.d + 2
            );
            println!(
                "{:<16} {:>10} {:>14} {:>14}",
                "case", "top weight", "cap", "beaten from"
            );
            for c in &report.cases {
                println!(
                    "{:<16} {:>10} {:>14} {:>14}",
                    case_tag(c.bound.kind),
                    c.bound.weight,
                    c.bound.to_string(),
                    c.crossover
                );
            }
            println!(
                "threshold: {} (an upper estimate of the true onset)",
                report.threshold
            );
        }
        Format::Machine => {
            kv("command", "threshold");
            kv("d", report.d);
            kv("cases", report.cases.len());
            for (i, c) in report.cases.iter().enumerate() {
                kv(format!("case.{i}.kind"), case_tag(c.bound.kind));
                kv(format!("case.{i}.weight"), c.bound.weight);
                kv(format!("case.{i}.cap"), c.bound);
                kv(format!("case.{i}.crossover"), c.crossover);
            }
            kv("threshold", report.threshold);
            kv("label", report.label);
        }
    }
    Ok(())
}

// --- midpoint -----------------------------------------------------------------

fn run_midpoint(args: MidpointArgs, format: Format) -> CmdResult {
    // Every word of the two top weights is enumerated; the limit only
    // guards pathological lengths.
    let limits = SearchLimits::default();
    let report = midpoint_analysis(args.d, args.n, &limits).map_err(map_search_err)?;
    match format {
        Format::Text => {
            println!(
                "midpoint counts for distances {{{}, {}}} at length {}",
                report.d,
                report.d + 2,
                report.n
            );
            println!(
                "midpoints shared by the two reference words: {}",
                report.midpoint_count
            );
            println!(
                "{:<12} {:>8} {:>10} {:>10} {:>9}",
                "class", "members", "per-word", "predicted", "constant"
            );
            for c in &report.classes {
                let per_word = match c.coefficient {
                    Some(x) => x.to_string(),
                    None => "-".into(),
                };
                println!(
                    "{:<12} {:>8} {:>10} {:>10} {:>9}",
                    c.class.label(),
                    c.members,
                    per_word,
                    c.expected,
                    if c.constant { "yes" } else { "NO" }
                );
            }
            println!(
                "all classes constant at the predicted counts: {}",
                if report.all_match() { "yes" } else { "NO" }
            );
        }
        Format::Machine => {
            kv("command", "midpoint");
            kv("d", report.d);
            kv("n", report.n);
            kv("midpoints", report.midpoint_count);
            for (i, c) in report.classes.iter().enumerate() {
                kv(format!("class.{i}.label"), c.class.label());
                kv(format!("class.{i}.members"), c.members);
                kv(format!("class.{i}.constant"), c.constant);
                if let Some(x) = c.coefficient {
                    kv(format!("class.{i}.count"), x);
                }
                kv(format!("class.{i}.predicted"), c.expected);
            }
            kv("all_match", report.all_match());
        }
    }
    Ok(())
}

// --- table ----------------------------------------------------------------

fn run_table(args: TableArgs, format: Format) -> CmdResult {
    if args.from > args.to {
        return Err(malformed(format!(
            "empty sweep: from={} exceeds to={}",
            args.from, args.to
        )));
    }
    if args.d1 == 0 || args.d1 >= args.d2 {
        return Err(malformed(format!(
            "need 1 <= d1 < d2, got d1={} d2={}",
            args.d1, args.d2
        )));
    }

    if format == Format::Machine {
        kv("command", "table");
        kv("d1", args.d1);
        kv("d2", args.d2);
        kv("from", args.from);
        kv("to", args.to);
    } else {
        println!(
            "sizes for distances {{{}, {}}}, lengths {}..={}",
            args.d1, args.d2, args.from, args.to
        );
        println!(
            "{:>5} {:>8} {:<16} {:>8} {:<8} {:>8}",
            "n", "lower", "(source)", "upper", "(source)", "exact"
        );
    }

    for n in args.from..=args.to {
        let Ok(p) = TwoDistanceParams::new(n, args.d1, args.d2) else {
            // Only the length can be at fault: the pair was validated above.
            match format {
                Format::Text => println!("{n:>5} (length below d2)"),
                Format::Machine => kv(format!("row.{n}.status"), "length-too-short"),
            }
            continue;
        };
        let report = sandwich(&p);
        let vertices =
            binomial(u64::from(n), u64::from(args.d1)) + binomial(u64::from(n), u64::from(args.d2));
        let exact_cell = if vertices <= args.max_vertices as u128 {
            let limits = SearchLimits {
                max_vertices: args.max_vertices,
            };
            let mut budget = WallClockBudget::from_seconds(args.time_budget);
            let r = exact_a2(&p, false, &limits, &mut budget)
                .expect("vertex count was checked against the limit");
            Some((r.value, r.exact))
        } else {
            None
        };
        match format {
            Format::Text => {
                let exact_text = match exact_cell {
                    Some((value, true)) => value.to_string(),
                    Some((value, false)) => format!(">={value}"),
                    None => "-".into(),
                };
                println!(
                    "{:>5} {:>8} {:<16} {:>8} {:<8} {:>8}",
                    n,
                    report.lower,
                    format!("({})", report.lower_source.label()),
                    report.upper,
                    format!("({})", report.upper_source.label()),
                    exact_text
                );
            }
            Format::Machine => {
                kv(format!("row.{n}.lower"), report.lower);
                kv(format!("row.{n}.lower_source"), report.lower_source.label());
                kv(format!("row.{n}.upper"), report.upper);
                kv(format!("row.{n}.upper_source"), report.upper_source.label());
                match exact_cell {
                    Some((value, true)) => {
                        kv(format!("row.{n}.exact"), value);
                        kv(format!("row.{n}.exact_status"), "exact");
                    }
                    Some((value, false)) => {
                        kv(format!("row.{n}.exact"), value);
                        kv(format!("row.{n}.exact_status"), "lower-bound");
                    }
                    None => kv(format!("row.{n}.exact_status"), "skipped"),
                }
            }
        }
    }
    Ok(())
}
