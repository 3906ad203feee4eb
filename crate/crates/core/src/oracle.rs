//! Brute-force censuses over `GL(n,q)` and `U(n,q)`: every closed form in
//! [`crate::theorems`] is verifiable at desk scale by exhaustion.
//!
//! Enumeration is sharded over contiguous candidate-index ranges; workers
//! share nothing and the merge is a commutative fold of count maps, so the
//! resulting table is identical for any worker count.

use crate::error::{Error, Result};
use crate::gflinear::{
    candidate_count, is_unitary, make_field, prime_power_decompose, unipotent_partition, FqMatrix,
};
use crate::partition::Partition;
use crate::theorems::{GroupKind, GroupSpec};
use num_bigint::BigInt;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::Path;
use std::sync::Arc;

pub use crate::gflinear::DEFAULT_CENSUS_BUDGET;

/// The element statistic a census tallies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    /// Dimension of the fixed space `ker(alpha - I)`, over group elements.
    FixedDim,
    /// The `z - 1` partition of unipotent group elements.
    UnipotentPartition,
    /// Rank, over all `n x n` matrices with `M^n = 0` (not just invertible
    /// ones).
    NilpotentRank,
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Statistic::FixedDim => "fixed_dim",
            Statistic::UnipotentPartition => "unipotent_partition",
            Statistic::NilpotentRank => "nilpotent_rank",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Statistic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fixed_dim" | "fixed-dim" => Ok(Statistic::FixedDim),
            "unipotent_partition" | "unipotent-partition" => Ok(Statistic::UnipotentPartition),
            "nilpotent_rank" | "nilpotent-rank" => Ok(Statistic::NilpotentRank),
            other => Err(Error::InvalidParameter(format!(
                "unknown statistic `{other}`"
            ))),
        }
    }
}

/// Census keys: small dimensions/ranks or partitions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CensusKey {
    Dim(u32),
    Shape(Partition),
}

impl fmt::Display for CensusKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusKey::Dim(d) => write!(f, "{d}"),
            CensusKey::Shape(p) => write!(f, "{p}"),
        }
    }
}

impl CensusKey {
    fn parse(statistic: Statistic, s: &str) -> Result<Self> {
        match statistic {
            Statistic::FixedDim | Statistic::NilpotentRank => s
                .parse::<u32>()
                .map(CensusKey::Dim)
                .map_err(|_| Error::CorruptCache(format!("bad integer key `{s}`"))),
            Statistic::UnipotentPartition => Ok(CensusKey::Shape(Partition::parse(s)?)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Enumerated,
    Cached,
}

/// Exact counts for one `(group, statistic)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    pub spec: GroupSpec,
    pub statistic: Statistic,
    pub counts: BTreeMap<CensusKey, u64>,
    pub provenance: Provenance,
}

impl CensusTable {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Exhaustive census of the group named by `spec`.
///
/// `FixedDim` tallies every group element; `UnipotentPartition` tallies the
/// unipotent ones keyed by their `z - 1` partition. `NilpotentRank` is only
/// meaningful for the `GL` ambient space and is routed through
/// [`nilpotent_census`].
pub fn census(
    spec: &GroupSpec,
    statistic: Statistic,
    budget: u64,
    workers: usize,
) -> Result<CensusTable> {
    if statistic == Statistic::NilpotentRank {
        if spec.kind != GroupKind::Gl {
            return Err(Error::InvalidParameter(
                "the nilpotent census lives in the full matrix space over F_q".into(),
            ));
        }
        return nilpotent_census(spec.n, spec.q, budget, workers);
    }
    let n = spec.n as usize;
    let (field, total) = match spec.kind {
        GroupKind::Gl => {
            let (p, e) = prime_power_decompose(spec.q).expect("validated by GroupSpec");
            let field = make_field(p, e)?;
            let total = candidate_count(field.size(), n);
            (field, total)
        }
        GroupKind::U => {
            let (p, e) = prime_power_decompose(spec.q).expect("validated by GroupSpec");
            let field = make_field(p, 2 * e)?;
            let total = candidate_count(field.size(), n);
            (field, total)
        }
    };
    if total > budget as u128 {
        return Err(Error::BudgetExceeded {
            candidates: total,
            budget: budget as u128,
        });
    }
    let kind = spec.kind;
    let counts = parallel_tally(total, workers, move |range, out| {
        let id = FqMatrix::identity(&field, n);
        for idx in range {
            let m = FqMatrix::from_index(&field, n, idx);
            let member = match kind {
                GroupKind::Gl => m.is_invertible(),
                GroupKind::U => is_unitary(&m).expect("extension field has conjugation"),
            };
            if !member {
                continue;
            }
            match statistic {
                Statistic::FixedDim => {
                    let k = m.sub(&id).kernel_dim() as u32;
                    *out.entry(CensusKey::Dim(k)).or_insert(0) += 1;
                }
                Statistic::UnipotentPartition => {
                    let lam = unipotent_partition(&m).expect("group elements are invertible");
                    if lam.size() == n as u64 {
                        *out.entry(CensusKey::Shape(lam)).or_insert(0) += 1;
                    }
                }
                Statistic::NilpotentRank => unreachable!("routed above"),
            }
        }
    });
    Ok(CensusTable {
        spec: *spec,
        statistic,
        counts,
        provenance: Provenance::Enumerated,
    })
}

/// Census of all `n x n` matrices over `F_q` with `M^n = 0`, keyed by rank.
pub fn nilpotent_census(n: u32, q: u64, budget: u64, workers: usize) -> Result<CensusTable> {
    let spec = GroupSpec::new(GroupKind::Gl, n, q)?;
    let (p, e) = prime_power_decompose(q).expect("validated");
    let field = make_field(p, e)?;
    let n = n as usize;
    let total = candidate_count(field.size(), n);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded {
            candidates: total,
            budget: budget as u128,
        });
    }
    let counts = parallel_tally(total, workers, move |range, out| {
        for idx in range {
            let m = FqMatrix::from_index(&field, n, idx);
            let mut power = m.clone();
            for _ in 1..n {
                power = power.mul(&m);
            }
            if power.is_zero() {
                let rank = m.rank() as u32;
                *out.entry(CensusKey::Dim(rank)).or_insert(0) += 1;
            }
        }
    });
    Ok(CensusTable {
        spec,
        statistic: Statistic::NilpotentRank,
        counts,
        provenance: Provenance::Enumerated,
    })
}

/// Splits `0..total` into contiguous shards, tallies each on its own
/// thread, and merges. The tally closure must be deterministic per index.
fn parallel_tally<F>(total: u128, workers: usize, tally: F) -> BTreeMap<CensusKey, u64>
where
    F: Fn(std::ops::Range<u128>, &mut BTreeMap<CensusKey, u64>) + Send + Sync,
{
    let workers = workers.max(1).min(64) as u128;
    let tally = Arc::new(tally);
    let mut maps: Vec<BTreeMap<CensusKey, u64>> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        let chunk = total.div_ceil(workers);
        for w in 0..workers {
            let lo = (w * chunk).min(total);
            let hi = ((w + 1) * chunk).min(total);
            let tally = Arc::clone(&tally);
            handles.push(scope.spawn(move || {
                let mut local = BTreeMap::new();
                tally(lo..hi, &mut local);
                local
            }));
        }
        for h in handles {
            maps.push(h.join().expect("census worker panicked"));
        }
    });
    let mut merged = BTreeMap::new();
    for m in maps {
        for (k, v) in m {
            *merged.entry(k).or_insert(0) += v;
        }
    }
    merged
}

/// One key's disagreement between a census and a closed-form prediction.
#[derive(Clone, Debug, Serialize)]
pub struct Discrepancy {
    pub key: String,
    pub expected: String,
    pub actual: String,
}

/// Result of checking a census against predicted counts, key by key
/// (missing keys count as zero on either side).
#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub group: String,
    pub statistic: String,
    pub pass: bool,
    pub discrepancies: Vec<Discrepancy>,
}

pub fn compare(table: &CensusTable, predicted: &BTreeMap<CensusKey, BigInt>) -> CompareReport {
    let mut discrepancies = Vec::new();
    let zero = BigInt::from(0u8);
    let mut keys: Vec<&CensusKey> = table.counts.keys().collect();
    for k in predicted.keys() {
        if !table.counts.contains_key(k) {
            keys.push(k);
        }
    }
    keys.sort();
    keys.dedup();
    for key in keys {
        let actual = table.counts.get(key).copied().unwrap_or(0);
        let expected = predicted.get(key).unwrap_or(&zero);
        if BigInt::from(actual) != *expected {
            discrepancies.push(Discrepancy {
                key: key.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }
    CompareReport {
        group: table.spec.to_string(),
        statistic: table.statistic.to_string(),
        pass: discrepancies.is_empty(),
        discrepancies,
    }
}

/// Canonical cache file name for a census.
pub fn cache_file_name(spec: &GroupSpec, statistic: Statistic) -> String {
    format!("{}{}_q{}_{}.csv", spec.kind, spec.n, spec.q, statistic)
}

fn table_body_csv(table: &CensusTable) -> String {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(["kind", "n", "q", "statistic", "key", "count"])
        .expect("in-memory write");
    for (key, count) in &table.counts {
        wtr.write_record([
            table.spec.kind.to_string(),
            table.spec.n.to_string(),
            table.spec.q.to_string(),
            table.statistic.to_string(),
            key.to_string(),
            count.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(wtr.into_inner().expect("in-memory flush")).expect("csv is utf8")
}

fn body_checksum(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

/// Writes the table as CSV preceded by a checksum comment line:
///
/// ```text
/// # sha256=<hex of the body>
/// kind,n,q,statistic,key,count
/// ...
/// ```
pub fn cache_store(table: &CensusTable, path: &Path) -> Result<()> {
    let body = table_body_csv(table);
    let mut file = std::fs::File::create(path)?;
    writeln!(file, "# sha256={}", body_checksum(&body))?;
    file.write_all(body.as_bytes())?;
    Ok(())
}

/// Loads a census previously written by [`cache_store`], verifying the
/// checksum and that the stored rows describe exactly the requested
/// `(spec, statistic)`.
pub fn cache_load(spec: &GroupSpec, statistic: Statistic, path: &Path) -> Result<CensusTable> {
    let raw = std::fs::read_to_string(path)?;
    let (header, body) = raw
        .split_once('\n')
        .ok_or_else(|| Error::CorruptCache("missing checksum line".into()))?;
    let declared = header
        .strip_prefix("# sha256=")
        .ok_or_else(|| Error::CorruptCache("first line is not a checksum comment".into()))?;
    if declared != body_checksum(body) {
        return Err(Error::CorruptCache("checksum mismatch".into()));
    }
    let mut rdr = csv::Reader::from_reader(body.as_bytes());
    let mut counts = BTreeMap::new();
    for record in rdr.records() {
        let record = record.map_err(|e| Error::CorruptCache(e.to_string()))?;
        if record.len() != 6 {
            return Err(Error::CorruptCache(format!(
                "expected 6 columns, got {}",
                record.len()
            )));
        }
        let row_kind: GroupKind = record[0].parse()?;
        let row_n: u32 = record[1]
            .parse()
            .map_err(|_| Error::CorruptCache("bad n".into()))?;
        let row_q: u64 = record[2]
            .parse()
            .map_err(|_| Error::CorruptCache("bad q".into()))?;
        let row_stat: Statistic = record[3].parse()?;
        if row_kind != spec.kind || row_n != spec.n || row_q != spec.q || row_stat != statistic {
            return Err(Error::CacheMismatch(format!(
                "file row describes {row_kind}({row_n},{row_q})/{row_stat}, \
                 requested {spec}/{statistic}"
            )));
        }
        let key = CensusKey::parse(statistic, &record[4])?;
        let count: u64 = record[5]
            .parse()
            .map_err(|_| Error::CorruptCache("bad count".into()))?;
        if counts.insert(key, count).is_some() {
            return Err(Error::CorruptCache("duplicate key".into()));
        }
    }
    Ok(CensusTable {
        spec: *spec,
        statistic,
        counts,
        provenance: Provenance::Cached,
    })
}
