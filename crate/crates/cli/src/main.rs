//! Command-line front end: single-pair evaluation, grid scans,
//! height-bounded searches, and class-number cache maintenance.

mod cachefile;
mod wire;

use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use cyclofc_core::criteria::{
    eval_catg1, eval_main, eval_main1, eval_main2, eval_trc, CriterionReport, EvalConfig, HCache,
};
use cyclofc_core::diophantine::{classify_case, merge_reports, search_fc_strip};
use cyclofc_core::ntcore::{is_prime, NtError};
use cyclofc_core::PrimePair;
use num_bigint::BigInt;

use wire::{report_to_wire, search_to_wire, ReportWire};

const ALL_THEOREMS: [&str; 5] = ["main", "main1", "main2", "catg1", "trc"];

#[derive(Parser)]
#[command(name = "cyclofc", version, about = "Computable criteria for x^p + y^p = z^q and the rational Catalan equation")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the theorem criteria for one prime pair.
    Pair(PairArgs),
    /// Evaluate a full grid of prime pairs and write JSON-lines.
    Scan(ScanArgs),
    /// Exhaustive height-bounded search for x^p + y^p = z^q.
    Search(SearchArgs),
    /// Maintain the class-number cache file.
    Cache(CacheArgs),
}

#[derive(Args, Clone)]
struct CommonEval {
    /// Compute h_m^- on the fly only for m up to this cutoff.
    #[arg(long, default_value_t = 250)]
    h_cutoff: u64,
    /// Accept conclusions resting on the draft-status lemma.
    #[arg(long)]
    accept_draft_lemmas: bool,
    /// Use the corollary's printed sign for its subgroup condition.
    #[arg(long)]
    catg1_as_printed: bool,
    /// Fixed coordinate C for the catg1 family.
    #[arg(long, default_value = "1")]
    catg1_c: String,
    /// Class-number cache file (also settable via CYCLOFC_CACHE).
    #[arg(long)]
    cache_path: Option<PathBuf>,
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    q: u64,
    /// Comma-separated subset of main,main1,main2,catg1,trc (or "all").
    #[arg(long, default_value = "all")]
    theorems: String,
    /// Emit canonical JSON-lines instead of the table.
    #[arg(long)]
    json: bool,
    /// Emit CSV rows (p,q,theorem,condition,verdict,witness).
    #[arg(long)]
    csv: bool,
    #[command(flatten)]
    common: CommonEval,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    p_min: u64,
    #[arg(long)]
    p_max: u64,
    #[arg(long)]
    q_min: u64,
    #[arg(long)]
    q_max: u64,
    #[arg(long, default_value = "all")]
    theorems: String,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// JSON-lines results file.
    #[arg(long)]
    output: PathBuf,
    /// Optional CSV export path.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[command(flatten)]
    common: CommonEval,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    height: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Emit the result as one JSON document.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CacheArgs {
    #[command(subcommand)]
    cmd: CacheCmd,
}

#[derive(Subcommand)]
enum CacheCmd {
    /// Compute and store h_m^- for every valid modulus up to a cutoff.
    Warm {
        #[arg(long, default_value_t = 250)]
        cutoff: u64,
        #[arg(long)]
        cache_path: Option<PathBuf>,
    },
    /// List the cached values.
    List {
        #[arg(long)]
        cache_path: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Pair(a) => cmd_pair(a),
        Cmd::Scan(a) => cmd_scan(a),
        Cmd::Search(a) => cmd_search(a),
        Cmd::Cache(a) => cmd_cache(a),
    }
}

/// Usage errors exit with code 2, matching clap's own convention.
fn usage_error(msg: &str) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn validated_pair(p: u64, q: u64) -> PrimePair {
    match PrimePair::new(p, q) {
        Ok(pair) => pair,
        Err(NtError::NotOddPrime(n)) => {
            let which = if n == p { "p" } else { "q" };
            usage_error(&format!("{which} must be an odd prime (got {n})"));
        }
        Err(_) => usage_error("p and q must be distinct odd primes"),
    }
}

fn parse_theorems(selection: &str) -> Vec<&'static str> {
    if selection == "all" {
        return ALL_THEOREMS.to_vec();
    }
    let mut out = Vec::new();
    for name in selection.split(',') {
        let name = name.trim();
        match ALL_THEOREMS.iter().find(|t| **t == name) {
            Some(t) => {
                if !out.contains(t) {
                    out.push(*t);
                }
            }
            None => usage_error(&format!(
                "unknown theorem {name:?}; expected a subset of {}",
                ALL_THEOREMS.join(",")
            )),
        }
    }
    if out.is_empty() {
        usage_error("at least one theorem must be selected");
    }
    out
}

fn eval_config(common: &CommonEval) -> EvalConfig {
    if common.h_cutoff < 15 {
        usage_error("--h-cutoff must be at least 15 (the smallest composite modulus)");
    }
    EvalConfig {
        h_cutoff: common.h_cutoff,
        accept_draft_lemmas: common.accept_draft_lemmas,
        catg1_as_printed: common.catg1_as_printed,
    }
}

fn parse_c(common: &CommonEval) -> BigInt {
    match common.catg1_c.parse::<BigInt>() {
        Ok(c) if c != BigInt::from(0) => c,
        _ => usage_error("--catg1-c must be a nonzero integer"),
    }
}

fn evaluate(
    pair: &PrimePair,
    theorems: &[&'static str],
    cache: &HCache,
    config: &EvalConfig,
    c: &BigInt,
) -> Vec<CriterionReport> {
    theorems
        .iter()
        .map(|t| match *t {
            "main" => eval_main(pair, cache, config),
            "main1" => eval_main1(pair, cache, config),
            "main2" => eval_main2(pair, cache, config),
            "catg1" => eval_catg1(pair, c, cache, config),
            "trc" => eval_trc(pair, cache, config),
            other => unreachable!("unknown theorem {other}"),
        })
        .collect()
}

fn print_table(reports: &[CriterionReport]) {
    for r in reports {
        println!(
            "theorem {:<6} (p={}, q={}) -> {}",
            r.theorem,
            r.pair.p(),
            r.pair.q(),
            wire::conclusion_str(r.conclusion)
        );
        for c in &r.conditions {
            let tag = if c.required { "" } else { " (info)" };
            println!(
                "  {:<28} {:<7} {}{}",
                c.name,
                wire::verdict_str(c.verdict),
                c.witness,
                tag
            );
        }
        if let Some(b) = &r.bounds {
            println!("  log10 bounds: lowb={} bound={} bound1={}", b.lowb, b.bound, b.bound1);
        }
    }
}

fn write_csv<W: std::io::Write>(sink: W, records: &[ReportWire]) -> Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(["p", "q", "theorem", "condition", "verdict", "witness"])?;
    for r in records {
        for c in &r.conditions {
            w.write_record([
                r.p.to_string(),
                r.q.to_string(),
                r.theorem.clone(),
                c.name.clone(),
                c.verdict.clone(),
                c.witness.clone(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

fn cmd_pair(a: PairArgs) -> Result<()> {
    let pair = validated_pair(a.p, a.q);
    let theorems = parse_theorems(&a.theorems);
    let config = eval_config(&a.common);
    let c = parse_c(&a.common);
    let cache_path = cachefile::resolve_cache_path(a.common.cache_path.as_deref());
    let cache = cachefile::load(&cache_path)?;

    let start = Instant::now();
    let reports = evaluate(&pair, &theorems, &cache, &config, &c);
    eprintln!(
        "pair p={} q={} evaluated in {} ms",
        a.p,
        a.q,
        start.elapsed().as_millis()
    );

    let wires: Vec<ReportWire> = reports.iter().map(report_to_wire).collect();
    if a.json {
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        for w in &wires {
            serde_json::to_writer(&mut out, w)?;
            out.write_all(b"\n")?;
        }
    } else if a.csv {
        write_csv(std::io::stdout(), &wires)?;
    } else {
        print_table(&reports);
    }
    Ok(())
}

fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(3)..=hi).filter(|&n| n % 2 == 1 && is_prime(n)).collect()
}

fn cmd_scan(a: ScanArgs) -> Result<()> {
    if a.workers == 0 {
        usage_error("--workers must be at least 1");
    }
    let theorems = parse_theorems(&a.theorems);
    let config = eval_config(&a.common);
    let c = parse_c(&a.common);

    let ps = primes_in(a.p_min, a.p_max);
    let qs = primes_in(a.q_min, a.q_max);
    if ps.is_empty() || qs.is_empty() {
        usage_error("prime ranges must be non-empty");
    }
    let pairs: Vec<PrimePair> = ps
        .iter()
        .flat_map(|&p| qs.iter().filter(move |&&q| q != p).map(move |&q| (p, q)))
        .map(|(p, q)| PrimePair::new(p, q).expect("filtered primes"))
        .collect();
    if pairs.is_empty() {
        usage_error("the ranges contain no valid pairs");
    }

    // serial pre-warm of every class number the evaluators may touch,
    // persisted so later runs load instead of recompute
    let cache_path = cachefile::resolve_cache_path(a.common.cache_path.as_deref());
    let mut cache = cachefile::load(&cache_path)?;
    let known = cachefile::known_moduli(&cache);
    let mut moduli: Vec<u64> = Vec::new();
    for pair in &pairs {
        for m in [pair.p(), pair.p() * pair.q()] {
            if m <= config.h_cutoff && !moduli.contains(&m) {
                moduli.push(m);
            }
        }
    }
    moduli.sort_unstable();
    for m in moduli {
        let t = Instant::now();
        cache.warm(m);
        eprintln!("warm h_{m}^- in {} ms", t.elapsed().as_millis());
    }
    let appended = cachefile::append_new(&cache_path, &cache, &known)?;
    if appended > 0 {
        eprintln!("cache: appended {appended} records to {}", cache_path.display());
    }

    // parallel evaluation; merge order fixed by pair index
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(usize, Vec<ReportWire>)>> = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..a.workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= pairs.len() {
                    break;
                }
                let pair = &pairs[i];
                let t = Instant::now();
                let reports = evaluate(pair, &theorems, &cache, &config, &c);
                eprintln!(
                    "pair p={} q={} evaluated in {} ms",
                    pair.p(),
                    pair.q(),
                    t.elapsed().as_millis()
                );
                let wires = reports.iter().map(report_to_wire).collect();
                results.lock().unwrap().push((i, wires));
            });
        }
    });
    let mut results = results.into_inner().unwrap();
    results.sort_by_key(|(i, _)| *i);
    let records: Vec<ReportWire> = results.into_iter().flat_map(|(_, w)| w).collect();

    let mut out = Vec::new();
    for w in &records {
        serde_json::to_writer(&mut out, w)?;
        out.push(b'\n');
    }
    std::fs::write(&a.output, &out)
        .with_context(|| format!("writing {}", a.output.display()))?;
    if let Some(csv_path) = &a.csv {
        let file = std::fs::File::create(csv_path)
            .with_context(|| format!("writing {}", csv_path.display()))?;
        write_csv(file, &records)?;
    }

    // summary: counts per conclusion
    let mut counts: std::collections::BTreeMap<&str, usize> = Default::default();
    for w in &records {
        *counts.entry(w.conclusion.as_str()).or_default() += 1;
    }
    println!("scanned {} pairs, {} records", pairs.len(), records.len());
    for (conclusion, n) in counts {
        println!("  {conclusion}: {n}");
    }
    Ok(())
}

fn cmd_search(a: SearchArgs) -> Result<()> {
    if a.workers == 0 {
        usage_error("--workers must be at least 1");
    }
    if a.height == 0 {
        usage_error("--height must be at least 1");
    }
    let pair = validated_pair(a.p, a.q);
    let start = Instant::now();

    // disjoint strips, merged into the serial order
    let workers = a.workers.min(a.height as usize);
    let strip = a.height / workers as u64 + 1;
    let parts: Mutex<Vec<(usize, cyclofc_core::diophantine::SearchReport)>> =
        Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for w in 0..workers {
            let parts = &parts;
            let pair = &pair;
            scope.spawn(move || {
                let lo = 1 + w as u64 * strip;
                let hi = (lo + strip - 1).min(a.height);
                let rep = search_fc_strip(pair, a.height, lo, hi);
                parts.lock().unwrap().push((w, rep));
            });
        }
    });
    let mut parts = parts.into_inner().unwrap();
    parts.sort_by_key(|(i, _)| *i);
    let report = merge_reports(parts.into_iter().map(|(_, r)| r).collect());
    eprintln!("search finished in {} ms", start.elapsed().as_millis());

    if a.json {
        println!("{}", serde_json::to_string(&search_to_wire(&report))?);
        return Ok(());
    }
    if report.solutions.is_empty() {
        println!(
            "no solutions up to height {} (p={}, q={}); {} trivial candidates filtered",
            a.height, a.p, a.q, report.trivial_count
        );
    } else {
        for sol in &report.solutions {
            match classify_case(sol) {
                Ok(tag) => println!(
                    "solution x={} y={} z={} case e={} f={:?} [cross-check ok]",
                    sol.x(),
                    sol.y(),
                    sol.z(),
                    tag.e,
                    tag.f
                ),
                Err(e) => println!(
                    "solution x={} y={} z={} (classification failed: {e})",
                    sol.x(),
                    sol.y(),
                    sol.z()
                ),
            }
        }
    }
    Ok(())
}

fn cmd_cache(a: CacheArgs) -> Result<()> {
    match a.cmd {
        CacheCmd::Warm { cutoff, cache_path } => {
            if cutoff < 15 {
                usage_error("--cutoff must be at least 15");
            }
            let path = cachefile::resolve_cache_path(cache_path.as_deref());
            let mut cache = cachefile::load(&path)?;
            let known = cachefile::known_moduli(&cache);
            for m in 3..=cutoff {
                if !valid_modulus(m) {
                    continue;
                }
                let t = Instant::now();
                cache.warm(m);
                eprintln!("warm h_{m}^- in {} ms", t.elapsed().as_millis());
            }
            let appended = cachefile::append_new(&path, &cache, &known)?;
            println!("cache {}: {} new records", path.display(), appended);
        }
        CacheCmd::List { cache_path } => {
            let path = cachefile::resolve_cache_path(cache_path.as_deref());
            let cache = cachefile::load(&path)?;
            for (m, h) in cache.moduli() {
                println!("h_{m}^- = {h}");
            }
        }
    }
    Ok(())
}

/// Moduli with a defined relative class number here: odd primes and
/// products of two distinct odd primes.
fn valid_modulus(m: u64) -> bool {
    if m % 2 == 0 || m < 3 {
        return false;
    }
    if is_prime(m) {
        return true;
    }
    for l in 3..m {
        if m % l == 0 {
            let other = m / l;
            return l != other && is_prime(l) && is_prime(other);
        }
    }
    false
}
