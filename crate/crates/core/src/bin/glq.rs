//! Command-line front end: sampling, exact measure evaluation, identity
//! verification, closed-form counting with optional brute-force
//! cross-checks, censuses, and census-cache inspection.
//!
//! Exit codes: 0 success/verified, 1 verification mismatch, 2 usage error,
//! 3 budget or refinement exceeded.

use clap::{Args, Parser, Subcommand};
use glq_core::error::Error;
use glq_core::exactnum::{parse_rational, Rational};
use glq_core::measure::{self, MeasureParams, Mode};
use glq_core::oracle::{self, CensusKey, CensusTable, Statistic};
use glq_core::partition::Partition;
use glq_core::qseries::{self, Identity};
use glq_core::sampler::{Sampler, SamplerConfig};
use glq_core::theorems::{self, GroupKind, GroupSpec};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "glq",
    about = "Exact partition measures and finite general linear / unitary group statistics",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw partitions from the measure and print one JSON record per line
    Sample(SampleArgs),
    /// Print the exact weight and enclosed value of the measure at one partition
    Measure(MeasureArgs),
    /// Verify a named identity; exit 0 when it holds
    Verify(VerifyArgs),
    /// Evaluate counting formulas, optionally cross-checked by exhaustion
    Count(CountArgs),
    /// Run a brute-force census and print its table
    Oracle(OracleArgs),
    /// Inspect census cache files
    Cache(CacheArgs),
}

#[derive(Args)]
struct SampleArgs {
    /// measure parameter u as an exact rational ("1/2", "0.5")
    #[arg(long)]
    u: String,
    /// measure parameter q as an exact rational > 1
    #[arg(long)]
    q: String,
    /// number of records to emit
    #[arg(long, default_value_t = 10)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// first stream id; workers use consecutive ids
    #[arg(long, default_value_t = 0)]
    stream_id: u64,
    /// parallel sampling streams
    #[arg(long, default_value_t = 1)]
    workers: u64,
    /// abort any single draw beyond this many cells
    #[arg(long, default_value_t = glq_core::sampler::DEFAULT_MAX_SIZE_GUARD)]
    max_size_guard: u64,
}

#[derive(Args)]
struct MeasureArgs {
    #[arg(long)]
    u: String,
    #[arg(long)]
    q: String,
    /// partition as comma-joined parts, "-" for the empty partition
    #[arg(long)]
    partition: String,
    /// evaluate at (-u, -q) instead
    #[arg(long, default_value = "standard")]
    mode: String,
    /// width bound for the enclosure of the prefactor
    #[arg(long, default_value = "1e-9")]
    eps: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// one of: sizegen, interp, hw, stong, prodgl, weight-dp, rr
    #[arg(long)]
    identity: String,
    #[arg(long)]
    q: Option<String>,
    /// truncation degree for series identities
    #[arg(long, default_value_t = 12)]
    d: usize,
    #[arg(long)]
    k: Option<u32>,
    /// y parameter for the hw identity (defaults to 1/q)
    #[arg(long)]
    y: Option<String>,
    /// u parameter for weight-dp
    #[arg(long)]
    u: Option<String>,
    #[arg(long, default_value = "standard")]
    mode: String,
    /// largest partition size for weight-dp
    #[arg(long, default_value_t = 8)]
    max_size: u64,
    /// partition-sum size bound for rr
    #[arg(long, default_value_t = 40)]
    b: u64,
    #[arg(long, default_value = "1e-6")]
    eps: String,
}

#[derive(Args)]
struct CountArgs {
    /// gl or u
    #[arg(long)]
    group: String,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    q: u64,
    /// unipotent, fixed-space, nilpotent-rank, unipotent-fixed, unipotent-partition
    #[arg(long)]
    what: String,
    /// cross-check against the exhaustive census
    #[arg(long, default_value_t = false)]
    oracle: bool,
    #[arg(long, default_value_t = oracle::DEFAULT_CENSUS_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// jsonl or csv
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    group: String,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    q: u64,
    /// fixed_dim, unipotent_partition, or nilpotent_rank
    #[arg(long)]
    statistic: String,
    #[arg(long, default_value_t = oracle::DEFAULT_CENSUS_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// cache directory (overrides GLQ_CACHE_DIR)
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// store the table in the cache directory after computing
    #[arg(long, default_value_t = false)]
    save: bool,
}

#[derive(Args)]
struct CacheArgs {
    #[command(subcommand)]
    action: CacheAction,
}

#[derive(Subcommand)]
enum CacheAction {
    /// Print the resolved cache directory
    Path {
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Validate a cache file's checksum and print its table
    Show { file: PathBuf },
    /// Validate a cache file's checksum only
    Verify { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::BudgetExceeded { .. }
                | Error::RefinementExhausted { .. }
                | Error::GuardExceeded { .. } => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Sample(args) => cmd_sample(args),
        Command::Measure(args) => cmd_measure(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Count(args) => cmd_count(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Cache(args) => cmd_cache(args),
    }
}

fn parse_mode(s: &str) -> Result<Mode, Error> {
    match s {
        "standard" => Ok(Mode::Standard),
        "signed" => Ok(Mode::Signed),
        other => Err(Error::InvalidParameter(format!("unknown mode `{other}`"))),
    }
}

fn cmd_sample(args: SampleArgs) -> Result<u8, Error> {
    let u = parse_rational(&args.u)?;
    let q = parse_rational(&args.q)?;
    let params = MeasureParams::standard(u, q)?;
    let workers = args.workers.max(1);
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    // per-stream record counts: first (count % workers) streams get one more
    let base = args.count / workers;
    let extra = args.count % workers;
    let mut shards = Vec::new();
    for w in 0..workers {
        let cfg = SamplerConfig::new(params.clone(), args.seed, args.stream_id + w)?
            .with_guard(args.max_size_guard)?;
        let quota = base + if w < extra { 1 } else { 0 };
        shards.push((cfg, quota));
    }
    let lines: Vec<Vec<String>> = if workers == 1 {
        let (cfg, quota) = shards.pop().expect("one shard");
        vec![sample_shard(cfg, quota)?]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = shards
                .into_iter()
                .map(|(cfg, quota)| scope.spawn(move || sample_shard(cfg, quota)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sampler thread panicked"))
                .collect::<Result<Vec<_>, Error>>()
        })?
    };
    for shard in lines {
        for line in shard {
            writeln!(out, "{line}")?;
        }
    }
    Ok(0)
}

fn sample_shard(cfg: SamplerConfig, quota: u64) -> Result<Vec<String>, Error> {
    let mut sampler = Sampler::new(cfg);
    (0..quota)
        .map(|_| Ok(sampler.sample()?.to_jsonl()))
        .collect()
}

fn cmd_measure(args: MeasureArgs) -> Result<u8, Error> {
    let u = parse_rational(&args.u)?;
    let q = parse_rational(&args.q)?;
    let mode = parse_mode(&args.mode)?;
    let eps = parse_rational(&args.eps)?;
    let lambda = Partition::parse(&args.partition)?;
    let params = MeasureParams::new(u, q, mode)?;
    let weight = measure::normalized_weight(&lambda, &params);
    let enc = measure::measure_value(&lambda, &params, &eps)?;
    println!("partition {lambda}");
    println!("weight {weight}");
    println!("measure {enc}");
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Error> {
    let need_q = || -> Result<Rational, Error> {
        parse_rational(
            args.q
                .as_deref()
                .ok_or_else(|| Error::InvalidParameter("this identity requires --q".into()))?,
        )
    };
    let pass = match args.identity.as_str() {
        "sizegen" => report_series(&Identity::SizeGen {
            q: need_q()?,
            degree: args.d,
        })?,
        "interp" => {
            let k = args
                .k
                .ok_or_else(|| Error::InvalidParameter("interp requires --k".into()))?;
            report_series(&Identity::Interp {
                k,
                q: need_q()?,
                degree: args.d,
            })?
        }
        "hw" => {
            let k = args
                .k
                .ok_or_else(|| Error::InvalidParameter("hw requires --k".into()))?;
            let y = match &args.y {
                Some(y) => parse_rational(y)?,
                None => need_q()?.recip(),
            };
            report_series(&Identity::Hw {
                k,
                y,
                degree: args.d,
            })?
        }
        "stong" => report_series(&Identity::Stong {
            q: need_q()?,
            degree: args.d,
        })?,
        "prodgl" => {
            let q: u64 = args
                .q
                .as_deref()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::InvalidParameter("prodgl requires an integer --q".into()))?;
            report_series(&Identity::ProdGl { q, degree: args.d })?
        }
        "weight-dp" => {
            let u = parse_rational(args.u.as_deref().unwrap_or("1/2"))?;
            let mode = parse_mode(&args.mode)?;
            let params = MeasureParams::new(u, need_q()?, mode)?;
            verify_weight_dp(&params, args.max_size)?
        }
        "rr" => {
            let k = args
                .k
                .ok_or_else(|| Error::InvalidParameter("rr requires --k".into()))?;
            let eps = parse_rational(&args.eps)?;
            let report = theorems::rr_check(k, &need_q()?, args.b, &eps)?;
            println!("{}", serde_json::to_string(&report).expect("serializable"));
            report.pass
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown identity `{other}`"
            )));
        }
    };
    Ok(if pass { 0 } else { 1 })
}

fn report_series(identity: &Identity) -> Result<bool, Error> {
    let report = qseries::verify_identity(identity)?;
    println!("{}", serde_json::to_string(&report).expect("serializable"));
    Ok(report.pass)
}

/// Checks that the lattice-path dynamic program reproduces the closed-form
/// weight for every partition up to `max_size`.
fn verify_weight_dp(params: &MeasureParams, max_size: u64) -> Result<bool, Error> {
    let table = measure::path_sum_table(max_size, params, max_size.max(1))?;
    let mut pass = true;
    let mut first_mismatch = None;
    for (lam, path_sum) in &table {
        if *path_sum != measure::normalized_weight(lam, params) {
            pass = false;
            first_mismatch = Some(lam.to_compact_string());
            break;
        }
    }
    let report = serde_json::json!({
        "identity": "weight-dp",
        "q": params.q().to_string(),
        "u": params.u().to_string(),
        "max_size": max_size,
        "pass": pass,
        "mismatch_at": first_mismatch,
    });
    println!("{report}");
    Ok(pass)
}

fn cmd_count(args: CountArgs) -> Result<u8, Error> {
    let kind: GroupKind = args.group.parse()?;
    let spec = GroupSpec::new(kind, args.n, args.q)?;
    let jsonl = match args.format.as_str() {
        "jsonl" => true,
        "csv" => false,
        other => {
            return Err(Error::InvalidParameter(format!("unknown format `{other}`")));
        }
    };
    match args.what.as_str() {
        "unipotent" => {
            let predicted = theorems::unipotent_count(&spec);
            println!("{predicted}");
            if args.oracle {
                let table = oracle::census(
                    &spec,
                    Statistic::UnipotentPartition,
                    args.budget,
                    args.workers,
                )?;
                let total = BigInt::from(table.total());
                if total != predicted {
                    eprintln!("oracle census total {total} disagrees with {predicted}");
                    return Ok(1);
                }
                println!("verified by exhaustive census of {spec}");
            }
            Ok(0)
        }
        "fixed-space" => {
            if jsonl {
                let rows: Vec<serde_json::Value> = theorems::fixed_dim_counts(&spec)?
                    .into_iter()
                    .map(|(k, c)| serde_json::json!({"k": k, "count": c.to_string()}))
                    .collect();
                println!("{}", serde_json::Value::Array(rows));
            } else {
                print!("{}", theorems::fixed_space_table_csv(&spec)?);
            }
            if args.oracle {
                let predicted = to_dim_map(theorems::fixed_dim_counts(&spec)?);
                let table = oracle::census(&spec, Statistic::FixedDim, args.budget, args.workers)?;
                return finish_compare(&table, &predicted);
            }
            Ok(0)
        }
        "nilpotent-rank" => {
            if kind != GroupKind::Gl {
                return Err(Error::InvalidParameter(
                    "the nilpotent census lives over F_q; use --group gl".into(),
                ));
            }
            let counts = theorems::nilpotent_rank_counts(args.n, args.q)?;
            print_count_rows(&spec, "rank", &counts, jsonl);
            if args.oracle {
                let predicted = to_dim_map(counts);
                let table = oracle::nilpotent_census(args.n, args.q, args.budget, args.workers)?;
                return finish_compare(&table, &predicted);
            }
            Ok(0)
        }
        "unipotent-fixed" => {
            let counts = theorems::unipotent_fixed_dim_counts(&spec)?;
            print_count_rows(&spec, "k", &counts, jsonl);
            if args.oracle {
                let predicted = unipotent_fixed_predictions(&spec)?;
                let table = oracle::census(
                    &spec,
                    Statistic::UnipotentPartition,
                    args.budget,
                    args.workers,
                )?;
                let by_dim = unipotent_census_by_fixed_dim(&table);
                return finish_compare_plain(&by_dim, &predicted, &spec);
            }
            Ok(0)
        }
        "unipotent-partition" => {
            if kind != GroupKind::Gl {
                return Err(Error::InvalidParameter(
                    "per-partition class sizes are computed for gl only".into(),
                ));
            }
            let counts = theorems::unipotent_partition_counts(args.n, args.q)?;
            if jsonl {
                for (lam, c) in &counts {
                    println!(
                        "{}",
                        serde_json::json!({"partition": lam.to_compact_string(),
                                           "count": c.to_string()})
                    );
                }
            } else {
                println!("kind,n,q,partition,count");
                for (lam, c) in &counts {
                    println!("{},{},{},\"{}\",{}", spec.kind, spec.n, spec.q, lam, c);
                }
            }
            if args.oracle {
                let predicted: BTreeMap<CensusKey, BigInt> = counts
                    .into_iter()
                    .map(|(lam, c)| (CensusKey::Shape(lam), c))
                    .collect();
                let table = oracle::census(
                    &spec,
                    Statistic::UnipotentPartition,
                    args.budget,
                    args.workers,
                )?;
                return finish_compare(&table, &predicted);
            }
            Ok(0)
        }
        other => Err(Error::InvalidParameter(format!(
            "unknown count target `{other}`"
        ))),
    }
}

fn print_count_rows(spec: &GroupSpec, key: &str, counts: &[(u32, BigInt)], jsonl: bool) {
    if jsonl {
        for (k, c) in counts {
            println!("{}", serde_json::json!({key: k, "count": c.to_string()}));
        }
    } else {
        println!("kind,n,q,{key},count");
        for (k, c) in counts {
            println!("{},{},{},{},{}", spec.kind, spec.n, spec.q, k, c);
        }
    }
}

fn to_dim_map(rows: Vec<(u32, BigInt)>) -> BTreeMap<CensusKey, BigInt> {
    rows.into_iter()
        .map(|(k, c)| (CensusKey::Dim(k), c))
        .collect()
}

fn unipotent_fixed_predictions(spec: &GroupSpec) -> Result<BTreeMap<u32, BigInt>, Error> {
    Ok(theorems::unipotent_fixed_dim_counts(spec)?
        .into_iter()
        .filter(|(_, c)| !num_traits::Zero::is_zero(c))
        .collect())
}

fn unipotent_census_by_fixed_dim(table: &CensusTable) -> BTreeMap<u32, BigInt> {
    let mut out: BTreeMap<u32, BigInt> = BTreeMap::new();
    for (key, count) in &table.counts {
        if let CensusKey::Shape(lam) = key {
            *out.entry(lam.num_parts()).or_default() += BigInt::from(*count);
        }
    }
    out
}

fn finish_compare(
    table: &CensusTable,
    predicted: &BTreeMap<CensusKey, BigInt>,
) -> Result<u8, Error> {
    let report = oracle::compare(table, predicted);
    println!("{}", serde_json::to_string(&report).expect("serializable"));
    Ok(if report.pass { 0 } else { 1 })
}

fn finish_compare_plain(
    actual: &BTreeMap<u32, BigInt>,
    predicted: &BTreeMap<u32, BigInt>,
    spec: &GroupSpec,
) -> Result<u8, Error> {
    let pass = actual == predicted;
    println!(
        "{}",
        serde_json::json!({"group": spec.to_string(), "statistic": "unipotent_fixed_dim",
                           "pass": pass})
    );
    Ok(if pass { 0 } else { 1 })
}

fn resolve_cache_dir(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| std::env::var_os("GLQ_CACHE_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."))
}

fn cmd_oracle(args: OracleArgs) -> Result<u8, Error> {
    let kind: GroupKind = args.group.parse()?;
    let spec = GroupSpec::new(kind, args.n, args.q)?;
    let statistic: Statistic = args.statistic.parse()?;
    let dir = resolve_cache_dir(args.cache_dir);
    let path = dir.join(oracle::cache_file_name(&spec, statistic));
    let table = if path.exists() {
        oracle::cache_load(&spec, statistic, &path)?
    } else {
        let t = oracle::census(&spec, statistic, args.budget, args.workers)?;
        if args.save {
            std::fs::create_dir_all(&dir)?;
            oracle::cache_store(&t, &path)?;
            eprintln!("stored {}", path.display());
        }
        t
    };
    print_table(&table);
    Ok(0)
}

fn print_table(table: &CensusTable) {
    println!("kind,n,q,statistic,key,count");
    for (key, count) in &table.counts {
        let key_str = key.to_string();
        let quoted = if key_str.contains(',') {
            format!("\"{key_str}\"")
        } else {
            key_str
        };
        println!(
            "{},{},{},{},{},{}",
            table.spec.kind, table.spec.n, table.spec.q, table.statistic, quoted, count
        );
    }
}

fn cmd_cache(args: CacheArgs) -> Result<u8, Error> {
    match args.action {
        CacheAction::Path { cache_dir } => {
            println!("{}", resolve_cache_dir(cache_dir).display());
            Ok(0)
        }
        CacheAction::Show { file } => {
            let (spec, statistic) = spec_from_file_name(&file)?;
            let table = oracle::cache_load(&spec, statistic, &file)?;
            print_table(&table);
            Ok(0)
        }
        CacheAction::Verify { file } => {
            let (spec, statistic) = spec_from_file_name(&file)?;
            oracle::cache_load(&spec, statistic, &file)?;
            println!("ok");
            Ok(0)
        }
    }
}

/// Parses `<kind><n>_q<q>_<statistic>.csv` back into a census request.
fn spec_from_file_name(path: &std::path::Path) -> Result<(GroupSpec, Statistic), Error> {
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .ok_or_else(|| Error::InvalidParameter("bad cache file name".into()))?;
    let mut pieces = stem.splitn(3, '_');
    let head = pieces
        .next()
        .ok_or_else(|| Error::InvalidParameter("bad cache file name".into()))?;
    let q_piece = pieces
        .next()
        .and_then(|s| s.strip_prefix('q'))
        .ok_or_else(|| Error::InvalidParameter("bad cache file name".into()))?;
    let stat_piece = pieces
        .next()
        .ok_or_else(|| Error::InvalidParameter("bad cache file name".into()))?;
    let (kind, n): (GroupKind, u32) = if let Some(rest) = head.strip_prefix("gl") {
        (
            GroupKind::Gl,
            rest.parse()
                .map_err(|_| Error::InvalidParameter("bad dimension in cache file name".into()))?,
        )
    } else if let Some(rest) = head.strip_prefix('u') {
        (
            GroupKind::U,
            rest.parse()
                .map_err(|_| Error::InvalidParameter("bad dimension in cache file name".into()))?,
        )
    } else {
        return Err(Error::InvalidParameter(format!(
            "bad cache file name `{stem}`"
        )));
    };
    let q: u64 = q_piece
        .parse()
        .map_err(|_| Error::InvalidParameter("bad q in cache file name".into()))?;
    Ok((GroupSpec::new(kind, n, q)?, stat_piece.parse()?))
}
