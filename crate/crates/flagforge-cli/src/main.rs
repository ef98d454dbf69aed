//! Command-line front end: construct flag codes, verify files
//! exhaustively, tabulate bounds, enumerate rank-metric codes, and run the
//! property suites. Exit codes: 0 success (for `verify`: the code is an
//! ODFC), 1 verified-but-not-ODFC or a failed property suite, 2 usage or
//! format errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use flagforge::analysis::{odfc_bounds, verify_odfc, GaussianBinomial, Optimality};
use flagforge::flag::{construct_odfc, type_set, CodeParams};
use flagforge::galois::Field;
use flagforge::matrix::MatGF;
use flagforge::rankmetric::{min_rank_distance, verify_mrd, MrdCode};
use flagforge::selftest::{suites, DEFAULT_SEED};
use flagforge::wire;

#[derive(Parser)]
#[command(
    name = "flagforge",
    about = "Construct and exhaustively verify optimum distance flag codes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the flag code for (n, k, q) and write it as JSON.
    Construct(ConstructArgs),
    /// Exhaustively verify a flag-code JSON file.
    Verify(VerifyArgs),
    /// Print the size formula and the applicable upper bounds.
    Bounds(BoundsArgs),
    /// Enumerate a square rank-metric code and verify its distance.
    Mrd(MrdArgs),
    /// Run the seeded property suites.
    Selftest(SelftestArgs),
}

/// Field selection: either `--q` (any prime power, factored internally)
/// or `--p` with `--e`.
#[derive(Args)]
struct FieldArgs {
    /// Field order, a prime power.
    #[arg(long, conflicts_with_all = ["p", "e"])]
    q: Option<u64>,
    /// Field characteristic (use with --e).
    #[arg(long, requires = "e")]
    p: Option<u64>,
    /// Extension degree over the prime field (use with --p).
    #[arg(long, requires = "p")]
    e: Option<u32>,
}

impl FieldArgs {
    fn field(&self) -> Result<Field, flagforge::Error> {
        match (self.q, self.p, self.e) {
            (Some(q), None, None) => Field::from_order(q),
            (None, Some(p), Some(e)) => Field::new(p, e),
            _ => Err(flagforge::Error::BadParams(
                "give either --q or both --p and --e".into(),
            )),
        }
    }
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Ambient dimension.
    #[arg(long)]
    n: usize,
    /// Spread dimension (requires n >= 2k).
    #[arg(long)]
    k: usize,
    /// Comma-separated type ticks; defaults to the full admissible set
    /// {1..k} u {n-k..n-1}.
    #[arg(long = "type", value_delimiter = ',')]
    ticks: Option<Vec<usize>>,
    /// Output path; defaults to flagcode_q{q}_n{n}_k{k}.json.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Flag-code JSON file to verify.
    input: PathBuf,
    /// Also write the verification report as JSON.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Number of threads for the pair scans (default: all cores).
    #[arg(long)]
    parallel: Option<usize>,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Ambient dimension.
    #[arg(long)]
    n: usize,
    /// Spread dimension (requires n >= 2k).
    #[arg(long)]
    k: usize,
    /// Comma-separated type ticks; defaults to the full admissible set.
    #[arg(long = "type", value_delimiter = ',')]
    ticks: Option<Vec<usize>>,
}

#[derive(Args)]
struct MrdArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Matrix side length.
    #[arg(long)]
    m: usize,
    /// Designed rank distance (1 <= delta <= m).
    #[arg(long)]
    delta: usize,
    /// Also write the codeword listing as JSON.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SelftestArgs {
    /// Seed for the randomized suites.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct(args) => cmd_construct(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Bounds(args) => cmd_bounds(&args),
        Command::Mrd(args) => cmd_mrd(&args),
        Command::Selftest(args) => Ok(cmd_selftest(&args)),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn ticks_display(ticks: &[usize]) -> String {
    let inner: Vec<String> = ticks.iter().map(|t| t.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn cmd_construct(args: &ConstructArgs) -> Result<u8, String> {
    let field = args.field.field().map_err(|e| e.to_string())?;
    let q = field.order();
    let full = type_set(args.n, args.k).map_err(|e| e.to_string())?;
    let ticks = args.ticks.clone().unwrap_or_else(|| full.ticks().to_vec());
    let code = construct_odfc(args.n, args.k, &ticks, &field).map_err(|e| e.to_string())?;
    let text = wire::flag_code_to_json(&code).map_err(|e| e.to_string())?;
    let path = args
        .output
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("flagcode_q{q}_n{}_k{}.json", args.n, args.k)));
    std::fs::write(&path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    let params = code.params();
    println!("wrote {}", path.display());
    println!(
        "q = {q}, n = {}, k = {} (r = {}, a = {})",
        params.n, params.k, params.r, params.a
    );
    println!("type: {}", ticks_display(code.flag_type().ticks()));
    let formula =
        flagforge::analysis::size_formula(args.n, args.k, q).map_err(|e| e.to_string())?;
    println!("flags: {} (size formula: {formula})", code.len());
    Ok(0)
}

fn render_report(report: &flagforge::VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "flag code: q = {}, n = {}, k = {}, type {}, {} flags",
        report.q,
        report.n,
        report.k,
        ticks_display(&report.ticks),
        report.size
    );
    let _ = writeln!(
        out,
        "min flag distance: {} (bound {})",
        report.min_flag_distance, report.max_distance_bound
    );
    let _ = writeln!(out, "disjoint: {}", if report.disjoint { "yes" } else { "no" });
    let _ = writeln!(out, "tick  size  min-dist  target  attains");
    for t in &report.per_tick {
        let _ = writeln!(
            out,
            "{:>4}  {:>4}  {:>8}  {:>6}  {}",
            t.tick,
            t.size,
            t.min_distance,
            t.target,
            if t.attains { "yes" } else { "no" }
        );
    }
    let _ = writeln!(out, "ODFC: {}", if report.is_odfc { "yes" } else { "no" });
    let _ = writeln!(out, "size formula: {}", report.size_formula);
    match &report.upper_bound {
        Some(b) => {
            let _ = writeln!(
                out,
                "upper bound: {b}{}",
                if report.bound_exact { " (exact)" } else { " (best known)" }
            );
        }
        None => {
            let _ = writeln!(out, "upper bound: none applies to this type");
        }
    }
    let _ = writeln!(out, "optimality: {}", wire::optimality_label(report.optimality));
    out
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, String> {
    if let Some(threads) = args.parallel {
        if threads == 0 {
            return Err("--parallel needs at least one thread".into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| format!("thread pool: {e}"))?;
    }
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| format!("cannot read {}: {e}", args.input.display()))?;
    let code = wire::flag_code_from_json(&text).map_err(|e| e.to_string())?;
    let report = verify_odfc(&code).map_err(|e| e.to_string())?;
    print!("{}", render_report(&report));
    if let Some(path) = &args.report {
        let json = wire::report_to_json(&report).map_err(|e| e.to_string())?;
        std::fs::write(path, json)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        println!("report written to {}", path.display());
    }
    Ok(if report.is_odfc { 0 } else { 1 })
}

fn cmd_bounds(args: &BoundsArgs) -> Result<u8, String> {
    let field = args.field.field().map_err(|e| e.to_string())?;
    let q = field.order();
    let params = CodeParams::derive(q, args.n, args.k).map_err(|e| e.to_string())?;
    let full = type_set(args.n, args.k).map_err(|e| e.to_string())?;
    let ticks = args.ticks.clone().unwrap_or_else(|| full.ticks().to_vec());
    let bounds = odfc_bounds(args.n, args.k, q, &ticks).map_err(|e| e.to_string())?;
    println!(
        "q = {q}, n = {}, k = {} (r = {}, a = {})",
        params.n, params.k, params.r, params.a
    );
    println!("type: {}", ticks_display(&ticks));
    println!("size formula: {}", bounds.size_formula);
    let lines = GaussianBinomial::lines(q, params.r).value;
    println!("[r; 1]_q = [{}; 1]_{q} = {lines}", params.r);
    match &bounds.upper_bound {
        Some(b) => println!(
            "upper bound: {b}{}",
            if bounds.exact { " (exact)" } else { " (best known)" }
        ),
        None => println!("upper bound: none applies (type avoids k and n-k)"),
    }
    println!("verdict: {}", wire::optimality_label(bounds.verdict));
    if bounds.verdict == Optimality::NotProvenOptimal {
        println!("note: the gap between the formula and the bound is open here");
    }
    Ok(0)
}

fn render_matrix(m: &MatGF) -> String {
    let mut out = String::new();
    for row in m.row_codes() {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "  [{}]", cells.join(" "));
    }
    out
}

fn cmd_mrd(args: &MrdArgs) -> Result<u8, String> {
    let field = args.field.field().map_err(|e| e.to_string())?;
    let code = MrdCode::gabidulin(args.m, args.delta, &field).map_err(|e| e.to_string())?;
    let words = code.codewords();
    println!(
        "square rank-metric code: q = {}, m = {}, delta = {}",
        field.order(),
        args.m,
        args.delta
    );
    println!("extension modulus (base-q coefficients): {:?}", code.ext_modulus());
    println!(
        "dimension over GF({}): {} ({} codewords)",
        field.order(),
        code.dimension(),
        words.len()
    );
    const LISTING_CAP: usize = 256;
    if words.len() <= LISTING_CAP {
        for (i, w) in words.iter().enumerate() {
            println!("codeword {i} (rank {}):", w.rank());
            print!("{}", render_matrix(w));
        }
    } else {
        println!("(listing suppressed for {} codewords; use --output)", words.len());
    }
    let dist = min_rank_distance(&words).map_err(|e| e.to_string())?;
    let attained = verify_mrd(&words, args.delta).map_err(|e| e.to_string())?;
    match dist {
        Some(d) => println!("min rank distance: {d}"),
        None => println!("min rank distance: undefined (single codeword)"),
    }
    println!(
        "designed distance attained: {}",
        if attained { "yes" } else { "no" }
    );
    if let Some(path) = &args.output {
        let json = wire::mrd_to_json(&code, &words, dist, attained).map_err(|e| e.to_string())?;
        std::fs::write(path, json)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        println!("codewords written to {}", path.display());
    }
    Ok(0)
}

fn cmd_selftest(args: &SelftestArgs) -> u8 {
    println!("seed: {}", args.seed);
    let mut failed = false;
    for suite in suites() {
        let run = suite.run;
        match run(args.seed) {
            Ok(cases) => println!("{:<20} ok ({cases} cases)", suite.name),
            Err(msg) => {
                println!("{:<20} FAILED: {msg}", suite.name);
                failed = true;
            }
        }
    }
    if failed {
        eprintln!("error: property suite failed");
        1
    } else {
        println!("all suites passed");
        0
    }
}
