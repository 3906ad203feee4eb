//! The partition measure `M_(u,q)` and its Young-lattice decomposition.
//!
//! For `q > 1` and `0 < u <= 1` the measure assigns to a partition `lambda`
//!
//! ```text
//! M_(u,q)(lambda) = [prod_{r>=1} (1 - u/q^r)] * w(lambda)
//! w(lambda) = u^|lambda| / ( q^e(lambda) * prod_i |GL(m_i(lambda), q)| )
//! e(lambda) = 2*sum_{h<i} h m_h m_i + sum_i (i-1) m_i^2
//! ```
//!
//! The bracketed infinite product is irrational and lives in an
//! [`IntervalEnclosure`]; everything else is exact. The signed
//! specialization evaluates the same formulas at `(-u, -q)`, which again
//! yields a (nonnegative) measure even though it cannot be sampled
//! directly.
//!
//! The same measure decomposes over the Young lattice: each covering edge
//! `lambda -> Lambda` (adding a cell in column `s`) carries the weight
//! `m_{lambda,Lambda}` below, and `w(lambda)` equals the sum over all
//! lattice paths from the empty partition of the products of edge weights.

use crate::error::{Error, Result};
use crate::exactnum::{
    euler_prefactor, rat_int, rat_pow, signed_prefactor, IntervalEnclosure, Rational,
};
use crate::partition::Partition;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Standard,
    /// Evaluate every formula at `(-u, -q)`.
    Signed,
}

/// Measure parameters `(u, q)` with the evaluation mode.
///
/// Both modes require `0 < u <= 1` and `q > 1`; `u = 1` is the extension by
/// continuity used throughout the limit theorems.
#[derive(Clone, Debug)]
pub struct MeasureParams {
    u: Rational,
    q: Rational,
    mode: Mode,
}

impl MeasureParams {
    pub fn new(u: Rational, q: Rational, mode: Mode) -> Result<Self> {
        if !u.is_positive() || u > Rational::one() {
            return Err(Error::InvalidParameter(format!("u={u} outside (0,1]")));
        }
        if q <= Rational::one() {
            return Err(Error::InvalidParameter(format!("q={q} must exceed 1")));
        }
        Ok(Self { u, q, mode })
    }

    pub fn standard(u: Rational, q: Rational) -> Result<Self> {
        Self::new(u, q, Mode::Standard)
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// `u` or `-u` according to the mode.
    pub fn eff_u(&self) -> Rational {
        match self.mode {
            Mode::Standard => self.u.clone(),
            Mode::Signed => -self.u.clone(),
        }
    }

    /// `q` or `-q` according to the mode.
    pub fn eff_q(&self) -> Rational {
        match self.mode {
            Mode::Standard => self.q.clone(),
            Mode::Signed => -self.q.clone(),
        }
    }

    /// Enclosure of the measure's prefactor with width at most `eps`:
    /// `prod (1 - u/q^r)` in standard mode, `prod (1 + (-1)^r u/q^r)` in
    /// signed mode.
    pub fn prefactor(&self, eps: &Rational) -> Result<IntervalEnclosure> {
        match self.mode {
            Mode::Standard => euler_prefactor(&self.u, &self.q, eps),
            Mode::Signed => signed_prefactor(&self.u, &self.q, eps),
        }
    }
}

/// `prod_{i=0}^{m-1} (t^m - t^i)`: the order of `GL(m, t)` for prime-power
/// integer `t`, kept polynomial in `t` so the signed mode can evaluate it at
/// negative arguments. Empty product (`m = 0`) is 1.
pub fn gl_order_formal(m: u32, t: &Rational) -> Rational {
    let tm = rat_pow(t, m as i64);
    let mut acc = Rational::one();
    for i in 0..m {
        acc *= &tm - rat_pow(t, i as i64);
    }
    acc
}

/// The exponent `e(lambda) = 2*sum_{h<i} h m_h m_i + sum_i (i-1) m_i^2`.
fn weight_exponent(lambda: &Partition) -> i64 {
    let top = lambda.first_part() as usize;
    let mut mult = vec![0i64; top + 1];
    for i in 1..=top {
        mult[i] = lambda.multiplicity(i as u32) as i64;
    }
    let mut cross = 0i64;
    for h in 1..=top {
        for i in (h + 1)..=top {
            cross += h as i64 * mult[h] * mult[i];
        }
    }
    let mut diag = 0i64;
    for i in 1..=top {
        diag += (i as i64 - 1) * mult[i] * mult[i];
    }
    2 * cross + diag
}

/// The exact rational factor `w(lambda)` of the measure, so that
/// `M(lambda) = prefactor * w(lambda)`. In signed mode the formula is
/// evaluated at `(-u, -q)` and is still nonnegative.
pub fn normalized_weight(lambda: &Partition, params: &MeasureParams) -> Rational {
    let u = params.eff_u();
    let q = params.eff_q();
    let mut denom = rat_pow(&q, weight_exponent(lambda));
    for i in 1..=lambda.first_part() {
        let m = lambda.multiplicity(i);
        if m > 0 {
            denom *= gl_order_formal(m, &q);
        }
    }
    rat_pow(&u, lambda.size() as i64) / denom
}

/// `w(lambda) / u^|lambda|` evaluated in the given mode: the factor of the
/// weight that depends on `q` alone. For the signed mode this divides out
/// `(-u)^|lambda|`.
pub fn size_free_weight(lambda: &Partition, q: &Rational, mode: Mode) -> Rational {
    let params =
        MeasureParams::new(Rational::one(), q.clone(), mode).expect("u=1 is always admissible");
    let w = normalized_weight(lambda, &params);
    if mode == Mode::Signed && lambda.size() % 2 == 1 {
        -w
    } else {
        w
    }
}

/// Enclosure of `M(lambda) = prefactor * w(lambda)` whose width is at most
/// `eps` times the weight scale.
pub fn measure_value(
    lambda: &Partition,
    params: &MeasureParams,
    eps: &Rational,
) -> Result<IntervalEnclosure> {
    let w = normalized_weight(lambda, params);
    let pre = params.prefactor(eps)?;
    Ok(pre.scale(&w))
}

/// Weight of the Young-lattice edge adding one cell to column `s` of
/// `lambda`:
///
/// ```text
/// s = 1:  u / ( q^k (q^{k+1} - 1) )            with k = lambda'_1
/// s > 1:  u (q^{-lambda'_s} - q^{-lambda'_{s-1}}) / (q^k - 1)
/// ```
///
/// The `s > 1` weight is zero when `lambda'_s = lambda'_{s-1}` (no addable
/// cell there), which also covers the empty partition. Signed mode replaces
/// `(u, q)` by `(-u, -q)`.
pub fn lattice_weight(lambda: &Partition, s: u64, params: &MeasureParams) -> Result<Rational> {
    if s < 1 {
        return Err(Error::InvalidColumn(s));
    }
    let u = params.eff_u();
    let q = params.eff_q();
    let k = lambda.num_parts() as i64;
    if s == 1 {
        let qk = rat_pow(&q, k);
        let qk1 = rat_pow(&q, k + 1);
        return Ok(&u / (qk * (qk1 - rat_int(1))));
    }
    let s32: u32 = s.try_into().map_err(|_| Error::InvalidColumn(s))?;
    let cs = lambda.conjugate_part(s32) as i64;
    let cprev = lambda.conjugate_part(s32 - 1) as i64;
    if cs == cprev {
        return Ok(Rational::zero());
    }
    let num = rat_pow(&q, -cs) - rat_pow(&q, -cprev);
    let den = rat_pow(&q, k) - rat_int(1);
    Ok(u * num / den)
}

/// Total weight out of `lambda`: the sum of [`lattice_weight`] over the
/// addable columns. Standard mode only. Equals `u/(q-1)` for the empty
/// partition and `u q / (q^{k+1} - 1)` with `k = lambda'_1` otherwise.
pub fn total_out_weight(lambda: &Partition, params: &MeasureParams) -> Rational {
    assert_eq!(
        params.mode(),
        Mode::Standard,
        "total out-weight is a standard-mode notion"
    );
    lambda
        .addable_columns()
        .into_iter()
        .map(|s| lattice_weight(lambda, s as u64, params).expect("addable column is valid"))
        .sum()
}

/// Path sums `f(lambda)` for every partition of size at most `max_size`,
/// computed by dynamic programming over the lattice levels:
/// `f(empty) = 1`, `f(Lambda) = sum_{mu -> Lambda} f(mu) * m_{mu,Lambda}`.
pub fn path_sum_table(
    max_size: u64,
    params: &MeasureParams,
    limit: u64,
) -> Result<BTreeMap<Partition, Rational>> {
    if max_size > limit {
        return Err(Error::SizeLimitExceeded {
            size: max_size,
            limit,
        });
    }
    let mut table = BTreeMap::new();
    table.insert(Partition::empty(), Rational::one());
    let mut level: Vec<Partition> = vec![Partition::empty()];
    for _ in 0..max_size {
        let mut next_level: BTreeMap<Partition, Rational> = BTreeMap::new();
        for mu in &level {
            let f_mu = table[mu].clone();
            for s in mu.addable_columns() {
                let w = lattice_weight(mu, s as u64, params)?;
                let lam = mu.add_cell(s)?;
                *next_level.entry(lam).or_insert_with(Rational::zero) += &f_mu * &w;
            }
        }
        level = next_level.keys().cloned().collect();
        table.extend(next_level);
    }
    Ok(table)
}

/// Default cap on [`path_sum`] targets; the dynamic program touches every
/// partition of every smaller size.
pub const DEFAULT_PATH_SUM_LIMIT: u64 = 32;

/// The path sum `f(lambda) = sum_gamma prod_i m_{gamma_i, gamma_{i+1}}` over
/// all lattice paths from the empty partition to `lambda`. Equals
/// [`normalized_weight`]; the dynamic program is the independent route.
pub fn path_sum(lambda: &Partition, params: &MeasureParams) -> Result<Rational> {
    let table = path_sum_table(lambda.size(), params, DEFAULT_PATH_SUM_LIMIT)?;
    Ok(table
        .get(lambda)
        .cloned()
        .expect("every partition of the target size is reachable"))
}

/// Enclosure of the probability that the tableau sampler outputs exactly
/// `tableau`: prefactor times the product of edge weights along its path.
/// Standard mode only.
pub fn tableau_probability(
    tableau: &crate::partition::StandardTableau,
    params: &MeasureParams,
    eps: &Rational,
) -> Result<IntervalEnclosure> {
    if params.mode() != Mode::Standard {
        return Err(Error::InvalidParameter(
            "tableau probabilities require standard mode".into(),
        ));
    }
    let path = tableau.to_path();
    let mut w = Rational::one();
    for i in 0..path.num_edges() {
        w *= lattice_weight(&path.steps()[i], path.added_column(i) as u64, params)?;
    }
    let pre = params.prefactor(eps)?;
    Ok(pre.scale(&w))
}
