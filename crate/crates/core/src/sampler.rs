//! Exact sampler for the partition measure: grows a random partition cell
//! by cell, recording the standard Young tableau of creation order.
//!
//! The underlying process flips a coin for every index `i >= 1`, coin `i`
//! showing heads with probability `u/q^i`; every head adds one cell, in a
//! column drawn from an exact categorical law, and the head counts of
//! distinct coins are independent geometrics. Termination is realized by
//! first drawing the largest coin index `K` that shows any head at all
//! (inverse CDF on the exact tail product `P(K <= N) = prod_{i>N} (1 -
//! u/q^i)`), then replaying coins `1..=K` in order. Every random decision
//! is made by comparing a lazily extended dyadic uniform against exact
//! rationals or refinable enclosures, so the sampled law is exactly the
//! target measure.

use crate::error::{Error, Result};
use crate::exactnum::{
    rat_pow, BitSource, EulerProduct, LazyUniform, ProductKind, Rational,
    DEFAULT_REFINEMENT_CAP_BITS,
};
use crate::measure::{MeasureParams, Mode};
use crate::partition::{Partition, StandardTableau};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;

/// Configuration of one sampling stream. The pair `(seed, stream_id)`
/// determines the random byte stream, so shards with distinct stream ids
/// can run in parallel and reproduce exactly.
#[derive(Clone, Debug)]
pub struct SamplerConfig {
    pub params: MeasureParams,
    pub seed: u64,
    pub stream_id: u64,
    pub max_size_guard: u64,
}

pub const DEFAULT_MAX_SIZE_GUARD: u64 = 1 << 20;

impl SamplerConfig {
    pub fn new(params: MeasureParams, seed: u64, stream_id: u64) -> Result<Self> {
        if params.mode() != Mode::Standard {
            return Err(Error::InvalidParameter(
                "sampling requires standard mode (signed weights are not probabilities)".into(),
            ));
        }
        Ok(Self {
            params,
            seed,
            stream_id,
            max_size_guard: DEFAULT_MAX_SIZE_GUARD,
        })
    }

    pub fn with_guard(mut self, guard: u64) -> Result<Self> {
        if guard < 1 {
            return Err(Error::InvalidParameter("size guard must be >= 1".into()));
        }
        self.max_size_guard = guard;
        Ok(self)
    }
}

/// One sampled partition with its creation-order tableau and the raw coin
/// head counts (`coin_head_counts[i-1]` heads of coin `i`; they sum to the
/// partition size).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleRecord {
    pub partition: Partition,
    pub tableau: StandardTableau,
    pub h_stats: Vec<u64>,
    pub coin_head_counts: Vec<u64>,
}

#[derive(Serialize)]
struct RecordJson<'a> {
    partition: &'a [u32],
    size: u64,
    k: u32,
    h: &'a [u64],
    tableau: &'a [Vec<u32>],
}

impl SampleRecord {
    /// One JSON object per line:
    /// `{"partition":[...],"size":n,"k":...,"h":[...],"tableau":[[...]]}`.
    pub fn to_jsonl(&self) -> String {
        serde_json::to_string(&RecordJson {
            partition: self.partition.parts(),
            size: self.partition.size(),
            k: self.partition.num_parts(),
            h: &self.h_stats,
            tableau: self.tableau.rows(),
        })
        .expect("record serialization cannot fail")
    }
}

/// A single-owner sampling stream.
pub struct Sampler {
    cfg: SamplerConfig,
    bits: BitSource<ChaCha8Rng>,
    /// memoized tail products F(N) = prod_{i>N} (1 - u/q^i), index N
    tails: Vec<EulerProduct>,
    /// q^N - 1 thresholds reuse these integer powers when q is an integer
    int_q: Option<BigUint>,
    cap_bits: u32,
}

impl Sampler {
    pub fn new(cfg: SamplerConfig) -> Sampler {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(cfg.stream_id);
        let int_q = if cfg.params.q().is_integer() {
            Some(cfg.params.q().to_integer().to_biguint().expect("q > 1"))
        } else {
            None
        };
        Sampler {
            cfg,
            bits: BitSource::new(rng),
            tails: Vec::new(),
            int_q,
            cap_bits: DEFAULT_REFINEMENT_CAP_BITS,
        }
    }

    pub fn config(&self) -> &SamplerConfig {
        &self.cfg
    }

    fn ensure_tail(&mut self, n: u32) -> Result<()> {
        while self.tails.len() <= n as usize {
            let idx = self.tails.len() as i64;
            let u_shift = self.cfg.params.u() * rat_pow(self.cfg.params.q(), -idx);
            let p = EulerProduct::new(ProductKind::Euler, u_shift, self.cfg.params.q().clone())?;
            self.tails.push(p);
        }
        Ok(())
    }

    /// Draws the largest coin index showing at least one head (0 means no
    /// coin does, i.e. the empty partition), by walking the exact CDF
    /// `P(K <= N) = prod_{i>N} (1 - u/q^i)` with one uniform draw.
    pub fn max_head_coin(&mut self) -> Result<u32> {
        let mut u = LazyUniform::new();
        let mut n = 0u32;
        loop {
            self.ensure_tail(n)?;
            let cap = self.cap_bits;
            if u.lt_refinable(&mut self.tails[n as usize], &mut self.bits, cap)? {
                return Ok(n);
            }
            n += 1;
        }
    }

    /// Number of successes before the first failure of a `theta`-coin
    /// (`P(G = g) = theta^g (1 - theta)`), plus `forced_min_one` forcing at
    /// least one success (the law conditioned on `G >= 1`).
    pub(crate) fn geometric(&mut self, theta: &Rational, forced_min_one: bool) -> Result<u64> {
        let mut count = if forced_min_one { 1 } else { 0 };
        loop {
            let mut u = LazyUniform::new();
            if u.lt_rational(theta, &mut self.bits, self.cap_bits)? {
                count += 1;
            } else {
                return Ok(count);
            }
        }
    }

    /// The column probabilities for a head of coin `n_coin` at the current
    /// partition: column 1 with probability `(q^(N-k) - 1)/(q^N - 1)`
    /// (`k = lambda'_1`), column `s > 1` with probability
    /// `(q^(N-lambda'_s) - q^(N-lambda'_{s-1}))/(q^N - 1)`. Nonzero entries
    /// only; columns index from 1 to `lambda_1 + 1`.
    pub fn column_probabilities(
        lambda: &Partition,
        n_coin: u32,
        q: &Rational,
    ) -> Result<Vec<(u32, Rational)>> {
        let k = lambda.num_parts();
        if k > n_coin {
            return Err(Error::PreconditionViolated(format!(
                "partition has {k} parts but the coin index is {n_coin}"
            )));
        }
        let n = n_coin as i64;
        let denom = rat_pow(q, n) - Rational::one();
        let mut out = Vec::new();
        let first = rat_pow(q, n - k as i64) - Rational::one();
        if !first.is_zero() {
            out.push((1, first / &denom));
        }
        for s in 2..=lambda.first_part() + 1 {
            let cs = lambda.conjugate_part(s) as i64;
            let cprev = lambda.conjugate_part(s - 1) as i64;
            if cs < cprev {
                let num = rat_pow(q, n - cs) - rat_pow(q, n - cprev);
                out.push((s, num / &denom));
            }
        }
        Ok(out)
    }

    /// Draws the column for one head of coin `n_coin`.
    ///
    /// Integer `q` uses a uniform big integer below `q^N - 1` against exact
    /// integer thresholds; non-integer rational `q` walks cumulative
    /// rational thresholds with a lazy dyadic uniform. Both are exact.
    pub fn column_choice(&mut self, lambda: &Partition, n_coin: u32) -> Result<u32> {
        let k = lambda.num_parts();
        if k > n_coin {
            return Err(Error::PreconditionViolated(format!(
                "partition has {k} parts but the coin index is {n_coin}"
            )));
        }
        if let Some(q) = self.int_q.clone() {
            return self.column_choice_integer(lambda, n_coin, &q);
        }
        let q = self.cfg.params.q().clone();
        let probs = Self::column_probabilities(lambda, n_coin, &q)?;
        let mut u = LazyUniform::new();
        let mut cumulative = Rational::zero();
        for (col, p) in &probs {
            cumulative += p;
            if u.lt_rational(&cumulative, &mut self.bits, self.cap_bits)? {
                return Ok(*col);
            }
        }
        // cumulative probability is exactly 1, so the loop must have hit
        unreachable!("column probabilities sum to 1");
    }

    fn column_choice_integer(
        &mut self,
        lambda: &Partition,
        n_coin: u32,
        q: &BigUint,
    ) -> Result<u32> {
        let k = lambda.num_parts();
        let total = q.pow(n_coin) - BigUint::one();
        let x = self.bits.next_below(&total);
        let mut acc = q.pow(n_coin - k) - BigUint::one();
        if x < acc {
            return Ok(1);
        }
        for s in 2..=lambda.first_part() + 1 {
            let cs = lambda.conjugate_part(s);
            let cprev = lambda.conjugate_part(s - 1);
            if cs < cprev {
                acc += q.pow(n_coin - cs) - q.pow(n_coin - cprev);
                if x < acc {
                    return Ok(s);
                }
            }
        }
        unreachable!("thresholds exhaust q^N - 1");
    }

    /// Draws one partition from the measure, with its creation tableau.
    pub fn sample(&mut self) -> Result<SampleRecord> {
        let top_coin = self.max_head_coin()?;
        let mut lambda = Partition::empty();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut heads = Vec::with_capacity(top_coin as usize);
        let mut entry = 0u32;
        for coin in 1..=top_coin {
            let theta = self.cfg.params.u() * rat_pow(self.cfg.params.q(), -(coin as i64));
            let g = self.geometric(&theta, coin == top_coin)?;
            heads.push(g);
            for _ in 0..g {
                let col = self.column_choice(&lambda, coin)?;
                entry += 1;
                if col == 1 {
                    rows.push(vec![entry]);
                } else {
                    let row = lambda.conjugate_part(col) as usize;
                    rows[row].push(entry);
                }
                lambda = lambda.add_cell(col)?;
                if lambda.size() > self.cfg.max_size_guard {
                    return Err(Error::GuardExceeded {
                        guard: self.cfg.max_size_guard,
                    });
                }
            }
        }
        let tableau = StandardTableau::new(rows).expect("growth yields a standard tableau");
        let h_stats = tableau.h_stats();
        debug_assert_eq!(heads.iter().sum::<u64>(), lambda.size());
        Ok(SampleRecord {
            partition: lambda,
            tableau,
            h_stats,
            coin_head_counts: heads,
        })
    }
}

/// Deterministic, mergeable histograms over sample records, keyed by
/// partition size, number of parts, and the h-vector.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SampleStats {
    pub total: u64,
    pub by_size: BTreeMap<u64, u64>,
    pub by_first_col: BTreeMap<u32, u64>,
    pub by_h: BTreeMap<Vec<u64>, u64>,
    pub by_partition: BTreeMap<Partition, u64>,
}

impl SampleStats {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn observe(&mut self, record: &SampleRecord) {
        self.total += 1;
        *self.by_size.entry(record.partition.size()).or_insert(0) += 1;
        *self
            .by_first_col
            .entry(record.partition.num_parts())
            .or_insert(0) += 1;
        *self.by_h.entry(record.h_stats.clone()).or_insert(0) += 1;
        *self
            .by_partition
            .entry(record.partition.clone())
            .or_insert(0) += 1;
    }

    /// Associative, commutative merge: sharded collection equals the
    /// sequential result.
    pub fn merge(mut self, other: SampleStats) -> SampleStats {
        self.total += other.total;
        for (k, v) in other.by_size {
            *self.by_size.entry(k).or_insert(0) += v;
        }
        for (k, v) in other.by_first_col {
            *self.by_first_col.entry(k).or_insert(0) += v;
        }
        for (k, v) in other.by_h {
            *self.by_h.entry(k).or_insert(0) += v;
        }
        for (k, v) in other.by_partition {
            *self.by_partition.entry(k).or_insert(0) += v;
        }
        self
    }

    /// Frequency of a given partition size as an exact rational.
    pub fn size_frequency(&self, n: u64) -> Rational {
        let hits = self.by_size.get(&n).copied().unwrap_or(0);
        crate::exactnum::rat(hits as i64, self.total.max(1) as i64)
    }
}

/// Folds a stream of records into histograms.
pub fn collect_stats<I>(records: I) -> SampleStats
where
    I: IntoIterator<Item = SampleRecord>,
{
    let mut stats = SampleStats::new();
    for r in records {
        stats.observe(&r);
    }
    stats
}
