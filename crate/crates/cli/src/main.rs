//! `monocle` — normal filtrations of monomial ideals from the command line.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use monocle_core::closure::ClosureCache;
use monocle_core::filtration::{hi_check, reduction_number};
use monocle_core::graded::{h_vector, HilbertSeries, SimplicialComplex};
use monocle_core::hilbert::{fit, normal_table, BinomialPolynomial, HilbertTable};
use monocle_core::ideal::MonomialIdeal;
use monocle_core::random::{random_m_primary_ideal, seeded_rng, DEFAULT_SEED};
use monocle_core::theorems::{theorem_suite, HypothesisStatus, TheoremReport};
use monocle_core::Error;

const CACHE_ENV: &str = "MONOCLE_CACHE_DIR";

#[derive(Parser)]
#[command(name = "monocle", version, about = "Exact normal filtrations, Hilbert coefficients and reduction numbers of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Closure cache directory (falls back to $MONOCLE_CACHE_DIR, then a per-user default)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for the randomized verification sweeps
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Log cache hits and other details to stderr
    #[arg(long, global = true)]
    verbose: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal generators of the integral closure of a power of the ideal
    Closure {
        /// Ideal file: {"dim": d, "gens": [[..], ..]}
        #[arg(long)]
        ideal: PathBuf,
        /// The power n of the ideal to close
        #[arg(long)]
        power: u32,
    },
    /// Normal Hilbert function table and the fitted polynomial
    Hilbert {
        #[arg(long)]
        ideal: PathBuf,
        /// Largest n tabulated (needs at least 2(d+1) values to fit)
        #[arg(long, default_value_t = 8)]
        max_n: u32,
    },
    /// Window-certified normal reduction number
    Reduction {
        #[arg(long)]
        ideal: PathBuf,
        /// Reduction ideal J (defaults to the ideal itself)
        #[arg(long)]
        reduction_ideal: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        max_n: u32,
    },
    /// Intersection condition I^n ∩ closure(n+r) = I^n · closure(r) on a window
    HiCheck {
        #[arg(long)]
        ideal: PathBuf,
        /// The shift r of the condition
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 8)]
        max_n: u32,
    },
    /// Full coefficient/vanishing report for one index k
    Verify {
        #[arg(long)]
        ideal: PathBuf,
        /// Coefficient index k
        #[arg(long)]
        k: u32,
        /// Type t(R) of the ambient ring (1 for a polynomial ring)
        #[arg(long = "type", default_value_t = 1)]
        type_input: u64,
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        /// Additionally sweep this many random m-primary instances
        #[arg(long, default_value_t = 0)]
        fuzz: usize,
    },
    /// f-vector, h-vector and Hilbert series of a Stanley-Reisner instance
    Sr {
        /// Complex file: {"vertices": v, "facets": [[..], ..]}
        #[arg(long)]
        complex: PathBuf,
        /// Do not assert the associated graded ring Cohen-Macaulay
        /// (drops the reduction-number claim)
        #[arg(long)]
        no_cm: bool,
    },
    /// Hilbert series of the degree-n diagonal hypersurface in dimension d
    Hypersurface {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: u32,
    },
}

struct AppError {
    message: String,
    code: u8,
}

impl AppError {
    fn input(message: impl fmt::Display) -> Self {
        AppError {
            message: message.to_string(),
            code: 2,
        }
    }

    fn check(message: impl fmt::Display) -> Self {
        AppError {
            message: message.to_string(),
            code: 1,
        }
    }
}

impl From<Error> for AppError {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => AppError::check(e),
            _ => AppError::input(e),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, AppError> {
    match &cli.command {
        Command::Closure { ideal, power } => cmd_closure(cli, ideal, *power),
        Command::Hilbert { ideal, max_n } => cmd_hilbert(cli, ideal, *max_n),
        Command::Reduction {
            ideal,
            reduction_ideal,
            max_n,
        } => cmd_reduction(cli, ideal, reduction_ideal.as_deref(), *max_n),
        Command::HiCheck { ideal, r, max_n } => cmd_hi_check(cli, ideal, *r, *max_n),
        Command::Verify {
            ideal,
            k,
            type_input,
            max_n,
            fuzz,
        } => cmd_verify(cli, ideal, *k, *type_input, *max_n, *fuzz),
        Command::Sr { complex, no_cm } => cmd_sr(cli, complex, !*no_cm),
        Command::Hypersurface { d, n } => cmd_hypersurface(cli, *d, *n),
    }
}

// ---------------------------------------------------------------- commands

fn cmd_closure(cli: &Cli, path: &Path, power: u32) -> Result<ExitCode, AppError> {
    let base = load_ideal(path)?;
    let mut cache = open_cache(cli, base.clone())?;
    let closed = cache.closure(power)?;
    store_cache(cli, &cache);

    if cli.format == Format::Json {
        print_json(&json!({
            "base": to_value(&base),
            "power": power,
            "closure": to_value(&closed),
        }));
    } else {
        println!("closure of {}^{power}:", base.render());
        println!("  {}", closed.render());
        println!("  ({} minimal generators)", closed.gens().len());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_hilbert(cli: &Cli, path: &Path, max_n: u32) -> Result<ExitCode, AppError> {
    let base = load_ideal(path)?;
    let mut cache = open_cache(cli, base.clone())?;
    let table = normal_table(&mut cache, max_n)?;
    store_cache(cli, &cache);
    if cli.format == Format::Text {
        print_table_text(&table);
    }
    let fitted = fit(&table)?;

    if cli.format == Format::Json {
        print_json(&json!({
            "values": table.values,
            "e": bigints_value(&fitted.coeffs),
            "postulation": fitted.postulation,
        }));
    } else {
        let e: Vec<String> = fitted.coeffs.iter().map(|c| c.to_string()).collect();
        println!("e = ({})", e.join(", "));
        match fitted.postulation {
            Some(n) => println!("postulation: {n}"),
            None => println!("postulation: none (polynomial at every tabulated n)"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reduction(
    cli: &Cli,
    path: &Path,
    reduction_path: Option<&Path>,
    max_n: u32,
) -> Result<ExitCode, AppError> {
    let base = load_ideal(path)?;
    let reduction_ideal = reduction_path.map(load_ideal).transpose()?;
    let mut cache = open_cache(cli, base.clone())?;
    let report = reduction_number(&mut cache, reduction_ideal.as_ref(), max_n)?;
    store_cache(cli, &cache);

    if cli.format == Format::Json {
        print_json(&json!({
            "reduction_ideal": to_value(&report.reduction_ideal),
            "n_max": report.n_max,
            "failures": report.failures,
            "r_bar": report.r_bar,
            "window_limited": true,
        }));
    } else {
        println!("reduction ideal J = {}", report.reduction_ideal.render());
        match report.r_bar {
            Some(r) => println!(
                "r_bar = {r} (certified on the window n < {} only)",
                report.n_max
            ),
            None => println!(
                "r_bar not certified: J·closure(n) != closure(n+1) still at n = {}; enlarge --max-n",
                report.n_max - 1
            ),
        }
        if !report.failures.is_empty() {
            println!("failing levels: {:?}", report.failures);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_hi_check(cli: &Cli, path: &Path, r: u32, max_n: u32) -> Result<ExitCode, AppError> {
    let base = load_ideal(path)?;
    let mut cache = open_cache(cli, base.clone())?;
    let report = hi_check(&mut cache, r, max_n)?;
    store_cache(cli, &cache);

    if cli.format == Format::Json {
        let witness = report.witness.as_ref().map(|w| {
            json!({ "n": w.n, "monomial": serde_json::to_value(&w.monomial).expect("serializes") })
        });
        print_json(&json!({
            "r": report.r,
            "n_max": report.n_max,
            "passed": report.passed,
            "witness": witness,
        }));
    } else if report.passed {
        println!(
            "HI_{r} holds for {} on 0 <= n <= {max_n}",
            base.render()
        );
    } else {
        let w = report.witness.as_ref().expect("failing report has witness");
        println!(
            "HI_{r} FAILS for {} at n = {}: {} lies in I^n ∩ closure(n+{r}) but not in I^n·closure({r})",
            base.render(),
            w.n,
            w.monomial.monomial_string()
        );
    }
    if report.passed {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_verify(
    cli: &Cli,
    path: &Path,
    k: u32,
    type_input: u64,
    max_n: u32,
    fuzz: usize,
) -> Result<ExitCode, AppError> {
    let base = load_ideal(path)?;
    if k < 2 {
        eprintln!("warning: k = {k} is outside the coefficient checks' scope (k >= 2); only the containment consequence runs");
    }
    let (reports, fitted) = verify_instance(cli, base, k, type_input, max_n)?;
    let all_ok = reports.iter().all(|r| r.conclusion_holds);

    if cli.format == Format::Json {
        print_json(&json!({
            "e": bigints_value(&fitted.coeffs),
            "k": k,
            "all_conclusions_hold": all_ok,
            "reports": reports.iter().map(report_value).collect::<Vec<_>>(),
        }));
    } else {
        for report in &reports {
            print_report_text(report);
        }
        println!(
            "aggregate: {}",
            if all_ok {
                "all conclusions hold"
            } else {
                "CHECK FAILURE: some conclusion does not hold"
            }
        );
    }

    let mut fuzz_ok = true;
    if fuzz > 0 {
        fuzz_ok = run_fuzz(cli, k, type_input, max_n, fuzz)?;
    }

    if all_ok && fuzz_ok {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn verify_instance(
    cli: &Cli,
    base: MonomialIdeal,
    k: u32,
    type_input: u64,
    max_n: u32,
) -> Result<(Vec<TheoremReport>, BinomialPolynomial), AppError> {
    let mut cache = open_cache(cli, base)?;
    let table = normal_table(&mut cache, max_n)?;
    let fitted = fit(&table)?;
    let reports = theorem_suite(&mut cache, &fitted, k, type_input, max_n)?;
    store_cache(cli, &cache);
    Ok((reports, fitted))
}

fn run_fuzz(
    cli: &Cli,
    k: u32,
    type_input: u64,
    max_n: u32,
    count: usize,
) -> Result<bool, AppError> {
    let mut rng = seeded_rng(cli.seed);
    let mut ok = true;
    for index in 0..count {
        let dim = if index % 2 == 0 { 2 } else { 3 };
        let instance = random_m_primary_ideal(&mut rng, dim, 2, 3);
        let k_eff = k.min(dim as u32);
        let window = max_n.max(2 * dim as u32 + 1).max(k_eff);
        let mut cache = ClosureCache::new(instance.clone())?;
        let table = normal_table(&mut cache, window)?;
        let fitted = fit(&table)?;
        let reports = theorem_suite(&mut cache, &fitted, k_eff, type_input, window)?;
        for report in &reports {
            let strict = report
                .hypotheses
                .iter()
                .all(|h| h.status == HypothesisStatus::Passed);
            if strict && !report.conclusion_holds {
                eprintln!(
                    "fuzz failure on {}: {} with verified hypotheses",
                    instance.render(),
                    report.check
                );
                ok = false;
            }
        }
        if cli.verbose {
            eprintln!("fuzz {}/{count}: {} ok", index + 1, instance.render());
        }
    }
    println!(
        "fuzz sweep: {count} random instances, seed {}: {}",
        cli.seed,
        if ok { "consistent" } else { "INCONSISTENT" }
    );
    Ok(ok)
}

fn cmd_sr(cli: &Cli, path: &Path, cm: bool) -> Result<ExitCode, AppError> {
    let text = fs::read_to_string(path)
        .map_err(|e| AppError::input(format!("cannot read {}: {e}", path.display())))?;
    let complex: SimplicialComplex = serde_json::from_str(&text)
        .map_err(|e| AppError::input(format!("invalid complex in {}: {e}", path.display())))?;
    let facet_size = complex.check_pure()?;
    let f = complex.f_vector();
    let h = h_vector(&f);
    let series = HilbertSeries::from_h(h.clone(), facet_size);
    let e = series.coefficients();
    let (postulation, reduction) = series.postulation_and_reduction(cm)?;

    if cli.format == Format::Json {
        print_json(&json!({
            "vertices": complex.vertex_count(),
            "facets": complex.facets(),
            "f": f,
            "h": bigints_value(&h),
            "series": { "numerator": bigints_value(&series.numerator), "dim": series.dim },
            "e": bigints_value(&e),
            "postulation": postulation,
            "reduction": reduction,
            "cm_asserted": cm,
        }));
    } else {
        println!(
            "complex on {} vertices, {} facets, dimension {}",
            complex.vertex_count(),
            complex.facets().len(),
            complex.dimension()
        );
        println!("f = {}", render_u64s(&f));
        println!("h = {}", render_bigints(&h));
        println!("Hilbert series: {}", series.render());
        println!("e = {}", render_bigints(&e));
        println!("postulation: {postulation}");
        match reduction {
            Some(r) => println!("reduction number: {r} (graded ring asserted Cohen-Macaulay)"),
            None => println!("reduction number: not asserted (Cohen-Macaulayness not asserted)"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_hypersurface(cli: &Cli, d: usize, n: u32) -> Result<ExitCode, AppError> {
    if n as usize > d {
        eprintln!("warning: n = {n} exceeds d = {d}; the construction is stated for n <= d");
    }
    let series = HilbertSeries::diagonal_hypersurface(d, n)?;
    let e = series.coefficients();
    let (postulation, reduction) = series.postulation_and_reduction(true)?;

    if cli.format == Format::Json {
        print_json(&json!({
            "d": d,
            "n": n,
            "series": { "numerator": bigints_value(&series.numerator), "dim": series.dim },
            "e": bigints_value(&e),
            "postulation": postulation,
            "reduction": reduction,
        }));
    } else {
        println!("diagonal hypersurface of degree {n} in dimension {d}");
        println!("Hilbert series: {}", series.render());
        println!("e = {}", render_bigints(&e));
        println!("postulation: {postulation}");
        println!(
            "reduction number: {}",
            reduction.expect("cm is asserted for the hypersurface instance")
        );
    }
    Ok(ExitCode::SUCCESS)
}

// ------------------------------------------------------------------- io

fn load_ideal(path: &Path) -> Result<MonomialIdeal, AppError> {
    let text = fs::read_to_string(path)
        .map_err(|e| AppError::input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| AppError::input(format!("invalid ideal in {}: {e}", path.display())))
}

fn cache_dir(cli: &Cli) -> Option<PathBuf> {
    if let Some(dir) = &cli.cache_dir {
        return Some(dir.clone());
    }
    if let Ok(dir) = std::env::var(CACHE_ENV) {
        return Some(PathBuf::from(dir));
    }
    std::env::var_os("HOME").map(|home| PathBuf::from(home).join(".cache").join("monocle"))
}

fn open_cache(cli: &Cli, base: MonomialIdeal) -> Result<ClosureCache, AppError> {
    let cache = match cache_dir(cli) {
        Some(dir) => ClosureCache::load_or_new(base, &dir)?,
        None => ClosureCache::new(base)?,
    };
    if cli.verbose && !cache.cached_levels().is_empty() {
        eprintln!(
            "cache hit: closures {:?} for {}",
            cache.cached_levels(),
            cache.base().render()
        );
    }
    Ok(cache)
}

fn store_cache(cli: &Cli, cache: &ClosureCache) {
    if let Some(dir) = cache_dir(cli) {
        if let Err(e) = cache.save(&dir) {
            if cli.verbose {
                eprintln!("cache write failed (ignored): {e}");
            }
        }
    }
}

// -------------------------------------------------------------- rendering

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("valid json"));
}

fn to_value(ideal: &MonomialIdeal) -> Value {
    serde_json::to_value(ideal).expect("ideal serializes")
}

/// JSON for a big integer: a number when it fits, a decimal string otherwise.
fn bigint_value(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(small) => json!(small),
        Err(_) => json!(x.to_string()),
    }
}

fn bigints_value(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(bigint_value).collect())
}

fn render_bigints(xs: &[BigInt]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn render_u64s(xs: &[u64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn print_table_text(table: &HilbertTable) {
    let width = table
        .values
        .iter()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(4);
    println!("  n  {:>width$}", "H(n)");
    for (n, value) in table.values.iter().enumerate() {
        println!("{n:>3}  {value:>width$}");
    }
}

fn status_str(status: HypothesisStatus) -> &'static str {
    match status {
        HypothesisStatus::Passed => "passed",
        HypothesisStatus::Failed => "FAILED",
        HypothesisStatus::Assumed => "assumed",
    }
}

fn report_value(report: &TheoremReport) -> Value {
    json!({
        "check": report.check,
        "instance": report.instance,
        "k": report.k,
        "hypotheses": report.hypotheses.iter().map(|h| {
            json!({ "name": h.name, "status": status_str(h.status) })
        }).collect::<Vec<_>>(),
        "conclusion": report.conclusion,
        "conclusion_holds": report.conclusion_holds,
        "confirmed": report.confirmed(),
        "type_input": report.type_input,
        "notes": report.notes,
    })
}

fn print_report_text(report: &TheoremReport) {
    println!("[{}] {}", report.check, report.instance);
    for h in &report.hypotheses {
        println!("  hypothesis: {} ... {}", h.name, status_str(h.status));
    }
    println!(
        "  conclusion: {} ... {}",
        report.conclusion,
        if report.conclusion_holds { "holds" } else { "DOES NOT HOLD" }
    );
    if let Some(t) = report.type_input {
        println!("  t(R) supplied: {t}");
    }
    for note in &report.notes {
        println!("  note: {note}");
    }
    println!(
        "  verdict: {}",
        if report.confirmed() {
            "instance confirmed"
        } else {
            "not confirmed (see hypotheses/conclusion)"
        }
    );
}
