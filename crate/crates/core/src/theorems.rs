//! Closed-form evaluators for the counting theorems: unipotent totals
//! (Steinberg), fixed-space distributions (Rudvalis-Shinoda), nilpotent
//! counts by rank (Lusztig), per-class unipotent counts, and the
//! Rogers-Ramanujan-type product check.
//!
//! Finite-`n` quantities are exact rationals or integers; the `n -> inf`
//! limits are interval enclosures. No pass/fail decision here ever touches
//! floating point.

use crate::error::{Error, Result};
use crate::exactnum::{
    euler_prefactor, rat_int, rat_pow, signed_prefactor, IntervalEnclosure, Rational,
};
use crate::gflinear::{gl_order_int, prime_power_decompose, unitary_order};
use crate::measure::{size_free_weight, Mode};
use crate::partition::{partitions_of, Constraint, Partition};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Gl,
    U,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Gl => write!(f, "gl"),
            GroupKind::U => write!(f, "u"),
        }
    }
}

impl std::str::FromStr for GroupKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(GroupKind::Gl),
            "u" => Ok(GroupKind::U),
            other => Err(Error::InvalidParameter(format!(
                "unknown group kind `{other}`"
            ))),
        }
    }
}

/// One finite classical group `GL(n,q)` or `U(n,q)` (the latter inside
/// `GL(n,q^2)`); `q` must be a prime power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub n: u32,
    pub q: u64,
}

impl GroupSpec {
    pub fn new(kind: GroupKind, n: u32, q: u64) -> Result<Self> {
        if prime_power_decompose(q).is_none() {
            return Err(Error::InvalidParameter(format!(
                "q={q} is not a prime power"
            )));
        }
        Ok(Self { kind, n, q })
    }

    pub fn order(&self) -> BigInt {
        match self.kind {
            GroupKind::Gl => gl_order_int(self.n, self.q),
            GroupKind::U => unitary_order(self.n, self.q),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::Gl => write!(f, "GL({},{})", self.n, self.q),
            GroupKind::U => write!(f, "U({},{})", self.n, self.q),
        }
    }
}

fn expect_integer(r: &Rational, what: &str) -> BigInt {
    assert!(r.is_integer(), "{what} must be an integer, got {r}");
    r.to_integer()
}

/// The number of unipotent elements: `q^(n(n-1))` for both kinds.
pub fn unipotent_count(spec: &GroupSpec) -> BigInt {
    BigInt::from(spec.q).pow(spec.n * (spec.n.saturating_sub(1)))
}

/// Order of a `p`-Sylow subgroup: `q^(n(n-1)/2)` for both kinds.
pub fn sylow_p_order(spec: &GroupSpec) -> BigInt {
    BigInt::from(spec.q).pow(spec.n * (spec.n.saturating_sub(1)) / 2)
}

/// The unipotent count equals the square of the `p`-Sylow order.
pub fn steinberg_check(spec: &GroupSpec) -> bool {
    let s = sylow_p_order(spec);
    unipotent_count(spec) == &s * &s
}

/// Probability that a uniform element of `GL(n,q)` fixes a `k`-dimensional
/// subspace pointwise (fixed-space dimension exactly `k`):
///
/// ```text
/// P(k) = 1/|GL(k,q)| * sum_{i=0}^{n-k} (-1)^i q^(C(i,2)) / ( q^(ki) |GL(i,q)| )
/// ```
pub fn p_gl_n(k: u32, n: u32, q: u64) -> Result<Rational> {
    if k > n {
        return Err(Error::Range(format!("k={k} exceeds n={n}")));
    }
    let qr = rat_int(q as i64);
    let mut sum = Rational::zero();
    for i in 0..=(n - k) {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let num = rat_int(sign) * rat_pow(&qr, (i as i64) * (i as i64 - 1) / 2);
        let den =
            rat_pow(&qr, (k as i64) * (i as i64)) * Rational::from_integer(gl_order_int(i, q));
        sum += num / den;
    }
    Ok(sum / Rational::from_integer(gl_order_int(k, q)))
}

/// The `n -> inf` limit of [`p_gl_n`]:
/// `[prod_{r>=1}(1 - q^-r)] * q^(-k^2) / prod_{s=1}^{k} (1 - q^-s)^2`.
pub fn p_gl_inf(k: u32, q: u64, eps: &Rational) -> Result<IntervalEnclosure> {
    let qr = rat_int(q as i64);
    let mut factor = rat_pow(&qr, -((k as i64) * (k as i64)));
    for s in 1..=k {
        let t = Rational::one() - rat_pow(&qr, -(s as i64));
        factor /= &t * &t;
    }
    // scale the prefactor tolerance so the final width is still <= eps
    let pre_eps = eps / &factor;
    let pre = euler_prefactor(&Rational::one(), &qr, &pre_eps)?;
    Ok(pre.scale(&factor))
}

/// Unitary analogue of [`p_gl_n`], with `q` replaced by `-q` inside the
/// alternating sum:
///
/// ```text
/// P(k) = 1/|U(k,q)| * sum_{i=0}^{n-k} (-1)^i (-q)^(C(i,2)) / ( (-q)^(ki) |U(i,q)| )
/// ```
pub fn p_u_n(k: u32, n: u32, q: u64) -> Result<Rational> {
    if k > n {
        return Err(Error::Range(format!("k={k} exceeds n={n}")));
    }
    let mq = rat_int(-(q as i64));
    let mut sum = Rational::zero();
    for i in 0..=(n - k) {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let num = rat_int(sign) * rat_pow(&mq, (i as i64) * (i as i64 - 1) / 2);
        let den =
            rat_pow(&mq, (k as i64) * (i as i64)) * Rational::from_integer(unitary_order(i, q));
        sum += num / den;
    }
    Ok(sum / Rational::from_integer(unitary_order(k, q)))
}

/// The `n -> inf` limit of [`p_u_n`]:
/// `[prod_{r>=1}(1 + (-1)^r q^-r)] * q^(-k^2) / prod_{s=1}^{k} (1 - q^-2s)`.
pub fn p_u_inf(k: u32, q: u64, eps: &Rational) -> Result<IntervalEnclosure> {
    let qr = rat_int(q as i64);
    let mut factor = rat_pow(&qr, -((k as i64) * (k as i64)));
    for s in 1..=k {
        factor /= Rational::one() - rat_pow(&qr, -2 * (s as i64));
    }
    let pre_eps = eps / &factor;
    let pre = signed_prefactor(&Rational::one(), &qr, &pre_eps)?;
    Ok(pre.scale(&factor))
}

/// The number of nilpotent `n x n` matrices over `F_q` of rank `n - k`:
///
/// ```text
/// |GL(n,q)|/|GL(k,q)| * (1-q^-k)...(1-q^-(n-1)) /
///                       ( q^(n-k) (1-q^-1)...(1-q^-(n-k)) )
/// ```
pub fn lusztig_nilpotent(n: u32, k: u32, q: u64) -> Result<BigInt> {
    if k > n || n < 1 {
        return Err(Error::Range(format!(
            "need 0 <= k <= n with n >= 1, got k={k}, n={n}"
        )));
    }
    let qr = rat_int(q as i64);
    let mut value =
        Rational::from_integer(gl_order_int(n, q)) / Rational::from_integer(gl_order_int(k, q));
    for r in k..n {
        value *= Rational::one() - rat_pow(&qr, -(r as i64));
    }
    value /= rat_pow(&qr, (n - k) as i64);
    for r in 1..=(n - k) {
        value /= Rational::one() - rat_pow(&qr, -(r as i64));
    }
    Ok(expect_integer(&value, "nilpotent count"))
}

/// The number of unipotent elements of `U(n,q)` with a `k`-dimensional
/// fixed space: the same shape as [`lusztig_nilpotent`] with orders and
/// powers taken at `-q`.
pub fn lusztig_unitary_unipotent(n: u32, k: u32, q: u64) -> Result<BigInt> {
    if k > n || n < 1 {
        return Err(Error::Range(format!(
            "need 0 <= k <= n with n >= 1, got k={k}, n={n}"
        )));
    }
    let mq = rat_int(-(q as i64));
    let qr = rat_int(q as i64);
    let mut value =
        Rational::from_integer(unitary_order(n, q)) / Rational::from_integer(unitary_order(k, q));
    for r in k..n {
        value *= Rational::one() - rat_pow(&mq, -(r as i64));
    }
    value /= rat_pow(&qr, (n - k) as i64);
    for r in 1..=(n - k) {
        value /= Rational::one() - rat_pow(&mq, -(r as i64));
    }
    Ok(expect_integer(&value, "unitary unipotent count"))
}

/// The number of unipotent elements of `GL(n,q)` whose `z - 1` partition is
/// exactly `lambda` (one conjugacy class): `|GL(n,q)| * w(lambda)/u^n`.
pub fn unipotent_class_count(lambda: &Partition, n: u32, q: u64) -> Result<BigInt> {
    if lambda.size() != n as u64 {
        return Err(Error::SizeMismatch {
            actual: lambda.size(),
            expected: n as u64,
        });
    }
    let w = size_free_weight(lambda, &rat_int(q as i64), Mode::Standard);
    let count = Rational::from_integer(gl_order_int(n, q)) * w;
    Ok(expect_integer(&count, "class size"))
}

/// Reproduces the unipotent total through the generating-function route:
/// `|GL(n,q)| * [v^n] prod_{r>=1} 1/(1 - v/q^r)`, which must equal
/// `q^(n(n-1))`.
pub fn cycleindex_unipotent_coeff(n: u32, q: u64) -> BigInt {
    let series =
        crate::qseries::size_gen_normalized(&rat_int(q as i64), n as usize).expect("q > 1");
    let coeff = series.coeff(n as usize).expect("degree covers n").clone();
    let total = Rational::from_integer(gl_order_int(n, q)) * coeff;
    expect_integer(&total, "cycle index coefficient")
}

/// Outcome of the Rogers-Ramanujan-type comparison: both sides are
/// enclosures of the same number, so they must overlap (within `eps`).
#[derive(Clone, Debug, Serialize)]
pub struct RrReport {
    pub k: u32,
    pub q: String,
    #[serde(rename = "B")]
    pub size_bound: u64,
    pub lhs: [String; 2],
    pub rhs: [String; 2],
    pub gap: String,
    pub pass: bool,
}

/// Compares `sum_{lambda: lambda_1 < k} M_(1,q)(lambda)` (partial partition
/// sum up to size `b` with an exact tail bound from the size distribution)
/// against `prod_{r = 0, +-k mod 2k+1} (1 - q^-r)`, requiring the two
/// enclosures to come within `eps` of each other.
pub fn rr_check(k: u32, q: &Rational, b: u64, eps: &Rational) -> Result<RrReport> {
    if k < 2 {
        return Err(Error::Range(format!("k must be >= 2, got {k}")));
    }
    if *q <= Rational::one() {
        return Err(Error::InvalidParameter(format!("q={q} must exceed 1")));
    }
    let lhs = rr_lhs_interval(k, q, b, eps)?;
    let rhs = rr_product_interval(k, q, eps)?;
    let gap = lhs.gap(&rhs);
    let pass = gap <= *eps;
    Ok(RrReport {
        k,
        q: q.to_string(),
        size_bound: b,
        lhs: [lhs.lo().to_string(), lhs.hi().to_string()],
        rhs: [rhs.lo().to_string(), rhs.hi().to_string()],
        gap: gap.to_string(),
        pass,
    })
}

/// Enclosure of the measure of `{lambda : lambda_1 < k}` at `u = 1`.
fn rr_lhs_interval(k: u32, q: &Rational, b: u64, eps: &Rational) -> Result<IntervalEnclosure> {
    // exact partial sum over partitions with all parts < k
    let mut partial = Rational::zero();
    for n in 0..=b {
        for lam in partitions_of(n, Some(Constraint::MaxPart(k - 1))) {
            partial += size_free_weight(&lam, q, Mode::Standard);
        }
    }
    // tail of the full size distribution: sum_{n>b} c_n with
    // c_n = q^-n / prod_{j<=n} (1 - q^-j) and ratio bound
    // c_{n+1}/c_n <= 1/(q (1 - q^-(b+1)))
    let series = crate::qseries::size_gen_normalized(q, b as usize)?;
    let c_b = series.coeff(b as usize)?.clone();
    let rho = rat_pow(q, -1) / (Rational::one() - rat_pow(q, -(b as i64 + 1)));
    if rho >= Rational::one() {
        return Err(Error::InvalidParameter(
            "size bound too small for a convergent tail estimate".into(),
        ));
    }
    let tail = &c_b * &rho / (Rational::one() - &rho);
    let weight_interval = IntervalEnclosure::new(partial.clone(), partial + tail);
    let pre = euler_prefactor(&Rational::one(), q, eps)?;
    Ok(pre.mul(&weight_interval))
}

/// Enclosure of `prod_{r>=1, r mod (2k+1) in {0, k, k+1}} (1 - q^-r)`.
fn rr_product_interval(k: u32, q: &Rational, eps: &Rational) -> Result<IntervalEnclosure> {
    let modulus = 2 * k as u64 + 1;
    let residues = [0u64, k as u64, k as u64 + 1];
    let mut partial = Rational::one();
    let mut r = 0u64;
    loop {
        r += 1;
        if residues.contains(&(r % modulus)) {
            partial *= Rational::one() - rat_pow(q, -(r as i64));
        }
        // tail over ALL exponents beyond r bounds the patterned tail:
        // prod_{s>r, pattern} (1 - q^-s) in [1 - q^-r/(q-1), 1]
        let tail_sum = rat_pow(q, -(r as i64)) / (q - Rational::one());
        if tail_sum < *eps && r >= modulus {
            let lo = &partial * (Rational::one() - tail_sum);
            return Ok(IntervalEnclosure::new(lo, partial));
        }
    }
}

/// Predicted fixed-space-dimension counts `|G| * P(k)` for `k = 0..=n`.
pub fn fixed_dim_counts(spec: &GroupSpec) -> Result<Vec<(u32, BigInt)>> {
    let order = Rational::from_integer(spec.order());
    (0..=spec.n)
        .map(|k| {
            let p = match spec.kind {
                GroupKind::Gl => p_gl_n(k, spec.n, spec.q)?,
                GroupKind::U => p_u_n(k, spec.n, spec.q)?,
            };
            Ok((k, expect_integer(&(&order * p), "fixed-space count")))
        })
        .collect()
}

/// Predicted counts of unipotent elements by fixed-space dimension
/// `k = 0..=n` (for `GL` these equal the nilpotent counts of rank `n-k`).
pub fn unipotent_fixed_dim_counts(spec: &GroupSpec) -> Result<Vec<(u32, BigInt)>> {
    (0..=spec.n)
        .map(|k| {
            let c = match spec.kind {
                GroupKind::Gl => lusztig_nilpotent(spec.n, k, spec.q)?,
                GroupKind::U => lusztig_unitary_unipotent(spec.n, k, spec.q)?,
            };
            Ok((k, c))
        })
        .collect()
}

/// Predicted counts of nilpotent `n x n` matrices keyed by rank.
pub fn nilpotent_rank_counts(n: u32, q: u64) -> Result<Vec<(u32, BigInt)>> {
    (0..=n)
        .map(|rank| Ok((rank, lusztig_nilpotent(n, n - rank, q)?)))
        .collect()
}

/// Predicted per-class unipotent counts keyed by partition (`GL` only).
pub fn unipotent_partition_counts(n: u32, q: u64) -> Result<BTreeMap<Partition, BigInt>> {
    partitions_of(n as u64, None)
        .into_iter()
        .map(|lam| {
            let c = unipotent_class_count(&lam, n, q)?;
            Ok((lam, c))
        })
        .collect()
}

/// CSV rows `kind,n,q,k,value_num,value_den` for the fixed-space
/// distribution of the group.
pub fn fixed_space_table_csv(spec: &GroupSpec) -> Result<String> {
    let mut out = String::from("kind,n,q,k,value_num,value_den\n");
    for k in 0..=spec.n {
        let p = match spec.kind {
            GroupKind::Gl => p_gl_n(k, spec.n, spec.q)?,
            GroupKind::U => p_u_n(k, spec.n, spec.q)?,
        };
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            spec.kind,
            spec.n,
            spec.q,
            k,
            p.numer(),
            p.denom()
        ));
    }
    Ok(out)
}

/// A crude decimal rendering of an enclosure midpoint for logs; exact
/// endpoints stay in the report strings.
pub fn approx_f64(enc: &IntervalEnclosure) -> f64 {
    enc.midpoint().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{parse_rational, rat};
    use num_traits::Signed;

    fn spec(kind: GroupKind, n: u32, q: u64) -> GroupSpec {
        GroupSpec::new(kind, n, q).unwrap()
    }

    #[test]
    fn group_spec_validation_and_order() {
        assert!(GroupSpec::new(GroupKind::Gl, 2, 6).is_err());
        assert_eq!(spec(GroupKind::Gl, 2, 2).order(), BigInt::from(6));
        assert_eq!(spec(GroupKind::U, 3, 2).order(), BigInt::from(648));
    }

    #[test]
    fn steinberg_examples() {
        assert_eq!(unipotent_count(&spec(GroupKind::Gl, 1, 5)), BigInt::one());
        assert_eq!(unipotent_count(&spec(GroupKind::Gl, 2, 2)), BigInt::from(4));
        assert_eq!(unipotent_count(&spec(GroupKind::U, 3, 2)), BigInt::from(64));
        assert_eq!(sylow_p_order(&spec(GroupKind::Gl, 2, 3)), BigInt::from(3));
        assert_eq!(sylow_p_order(&spec(GroupKind::U, 3, 2)), BigInt::from(8));
        assert_eq!(sylow_p_order(&spec(GroupKind::Gl, 4, 2)), BigInt::from(64));
        for n in 1..=5 {
            for q in [2u64, 3, 4, 5] {
                assert!(steinberg_check(&spec(GroupKind::Gl, n, q)));
                assert!(steinberg_check(&spec(GroupKind::U, n, q)));
            }
        }
    }

    #[test]
    fn p_gl_small_cases() {
        assert_eq!(p_gl_n(1, 1, 2).unwrap(), Rational::one());
        assert_eq!(p_gl_n(1, 1, 3).unwrap(), rat(1, 2));
        assert_eq!(p_gl_n(0, 1, 2).unwrap(), Rational::zero());
        assert!(p_gl_n(2, 1, 2).is_err());
    }

    #[test]
    fn p_rows_sum_to_one() {
        for q in [2u64, 3] {
            for n in 0..=6u32 {
                let gl: Rational = (0..=n).map(|k| p_gl_n(k, n, q).unwrap()).sum();
                assert_eq!(gl, Rational::one(), "GL row sum at n={n}, q={q}");
                let un: Rational = (0..=n).map(|k| p_u_n(k, n, q).unwrap()).sum();
                assert_eq!(un, Rational::one(), "U row sum at n={n}, q={q}");
            }
        }
    }

    #[test]
    fn p_values_are_nonnegative() {
        for q in [2u64, 3] {
            for n in 0..=6u32 {
                for k in 0..=n {
                    assert!(!p_gl_n(k, n, q).unwrap().is_negative());
                    assert!(!p_u_n(k, n, q).unwrap().is_negative(), "p_u_n({k},{n},{q})");
                }
            }
        }
    }

    #[test]
    fn p_u_small_cases() {
        assert_eq!(p_u_n(1, 1, 2).unwrap(), rat(1, 3));
        assert_eq!(p_u_n(0, 1, 2).unwrap(), rat(2, 3));
    }

    #[test]
    fn p_gl_inf_limit_matches_finite_n() {
        let eps = parse_rational("1e-9").unwrap();
        let tol = parse_rational("1e-6").unwrap();
        // k = 0: the enclosure is just the Euler product
        let enc = p_gl_inf(0, 2, &eps).unwrap();
        assert!(enc.contains(&parse_rational("0.28878809508660242128").unwrap()));
        for k in 0..=3u32 {
            let finite = p_gl_n(k, 30, 2).unwrap();
            let limit = p_gl_inf(k, 2, &eps).unwrap();
            let diff = (finite - limit.midpoint()).abs();
            assert!(diff <= tol, "GL limit mismatch at k={k}: {diff}");
            let finite_u = p_u_n(k, 30, 2).unwrap();
            let limit_u = p_u_inf(k, 2, &eps).unwrap();
            let diff_u = (finite_u - limit_u.midpoint()).abs();
            assert!(diff_u <= tol, "U limit mismatch at k={k}: {diff_u}");
        }
    }

    #[test]
    fn finite_n_distance_to_limit_shrinks_monotonically() {
        // the alternating tail terms decay so fast that each extra n moves
        // p_gl_n strictly closer to the limit, up to the enclosure width
        let eps = parse_rational("1e-12").unwrap();
        for k in 0..=2u32 {
            let limit = p_gl_inf(k, 2, &eps).unwrap();
            let mid = limit.midpoint();
            let width = limit.width();
            let mut prev: Option<Rational> = None;
            for n in k..=30 {
                let d = (p_gl_n(k, n, 2).unwrap() - &mid).abs();
                if let Some(p) = prev {
                    assert!(d <= &p + &width, "distance grew at k={k}, n={n}");
                }
                prev = Some(d);
            }
        }
    }

    #[test]
    fn p_inf_sums_to_one_within_widths() {
        let eps = parse_rational("1e-10").unwrap();
        type LimitFn = fn(u32, u64, &Rational) -> Result<IntervalEnclosure>;
        let limits: [(LimitFn, &str); 2] = [(p_gl_inf, "gl"), (p_u_inf, "u")];
        for (f, name) in limits {
            let mut lo = Rational::zero();
            let mut hi = Rational::zero();
            for k in 0..=12u32 {
                let enc = f(k, 2, &eps).unwrap();
                lo += enc.lo();
                hi += enc.hi();
            }
            assert!(lo < Rational::one(), "{name}: partial sums stay below 1");
            // truncation after k=12 leaves only ~q^-169 of mass
            assert!(hi > parse_rational("0.999999").unwrap(), "{name} sums to 1");
        }
    }

    #[test]
    fn lusztig_examples() {
        for q in [2u64, 3, 5] {
            for n in 1..=4 {
                assert_eq!(lusztig_nilpotent(n, n, q).unwrap(), BigInt::one());
            }
            assert_eq!(lusztig_nilpotent(1, 0, q).unwrap(), BigInt::zero());
        }
        // rank-1 nilpotent 2x2 over F_2: brute force over 16 matrices
        let mut count = 0;
        for bits in 0u16..16 {
            let (a, b, c, d) = (bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1);
            // M^2 = 0 over F_2
            let m2 = [
                (a * a + b * c) % 2,
                (a * b + b * d) % 2,
                (c * a + d * c) % 2,
                (c * b + d * d) % 2,
            ];
            let rank1 = (a, b, c, d) != (0, 0, 0, 0);
            if m2 == [0, 0, 0, 0] && rank1 {
                count += 1;
            }
        }
        assert_eq!(count, 3);
        assert_eq!(lusztig_nilpotent(2, 1, 2).unwrap(), BigInt::from(3));
        assert!(lusztig_nilpotent(2, 3, 2).is_err());
    }

    #[test]
    fn lusztig_unitary_examples() {
        for q in [2u64, 3] {
            for n in 1..=4 {
                assert_eq!(lusztig_unitary_unipotent(n, n, q).unwrap(), BigInt::one());
                let total: BigInt = (0..=n)
                    .map(|k| lusztig_unitary_unipotent(n, k, q).unwrap())
                    .sum();
                assert_eq!(
                    total,
                    unipotent_count(&spec(GroupKind::U, n, q)),
                    "row sum at n={n}, q={q}"
                );
                for k in 0..=n {
                    assert!(!lusztig_unitary_unipotent(n, k, q).unwrap().is_negative());
                }
            }
        }
        assert_eq!(lusztig_unitary_unipotent(2, 1, 2).unwrap(), BigInt::from(3));
    }

    #[test]
    fn nilpotent_row_sums_match_steinberg() {
        for q in [2u64, 3] {
            for n in 1..=4 {
                let total: BigInt = (0..=n).map(|k| lusztig_nilpotent(n, k, q).unwrap()).sum();
                assert_eq!(total, unipotent_count(&spec(GroupKind::Gl, n, q)));
            }
        }
    }

    #[test]
    fn unipotent_class_counts() {
        // the identity class is the all-ones partition
        let ones = Partition::new(vec![1, 1, 1]).unwrap();
        assert_eq!(unipotent_class_count(&ones, 3, 2).unwrap(), BigInt::one());
        // lambda = (2) in GL(2,2): 6 * 1/(q(q-1)) = 3
        let two = Partition::new(vec![2]).unwrap();
        assert_eq!(unipotent_class_count(&two, 2, 2).unwrap(), BigInt::from(3));
        assert!(matches!(
            unipotent_class_count(&two, 3, 2),
            Err(Error::SizeMismatch { .. })
        ));
        // per-class counts sum to the Steinberg total
        for q in [2u64, 3] {
            for n in 1..=4 {
                let total: BigInt = unipotent_partition_counts(n, q)
                    .unwrap()
                    .values()
                    .cloned()
                    .sum();
                assert_eq!(total, unipotent_count(&spec(GroupKind::Gl, n, q)));
            }
        }
    }

    #[test]
    fn lusztig_equals_partition_sums_by_fixed_dim() {
        // number of unipotents with fixed-space dimension k equals the sum
        // of class sizes over partitions with k parts
        for q in [2u64, 3] {
            for n in 1..=4u32 {
                let by_partition = unipotent_partition_counts(n, q).unwrap();
                for k in 0..=n {
                    let sum: BigInt = by_partition
                        .iter()
                        .filter(|(lam, _)| lam.num_parts() == k)
                        .map(|(_, c)| c.clone())
                        .sum();
                    assert_eq!(
                        sum,
                        lusztig_nilpotent(n, k, q).unwrap(),
                        "fixed-dim {k} mismatch at n={n}, q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn cycle_index_route_reproduces_steinberg() {
        assert_eq!(cycleindex_unipotent_coeff(0, 2), BigInt::one());
        assert_eq!(cycleindex_unipotent_coeff(1, 2), BigInt::one());
        assert_eq!(cycleindex_unipotent_coeff(4, 3), BigInt::from(531441));
        for n in 0..=5u32 {
            for q in [2u64, 3] {
                assert_eq!(
                    cycleindex_unipotent_coeff(n, q),
                    unipotent_count(&spec(GroupKind::Gl, n, q))
                );
            }
        }
    }

    #[test]
    fn rr_check_passes_and_reports() {
        let eps = parse_rational("1e-6").unwrap();
        let rep = rr_check(2, &rat_int(2), 30, &eps).unwrap();
        assert!(rep.pass, "rr failed: gap={}", rep.gap);
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains("\"pass\":true"));
        assert!(rr_check(1, &rat_int(2), 30, &eps).is_err());
        assert!(rr_check(2, &rat_int(1), 30, &eps).is_err());
    }

    #[test]
    fn rr_negative_control_fails() {
        // compare the k=2 partition sum against the k=3 product pattern
        let eps = parse_rational("1e-6").unwrap();
        let q = rat_int(2);
        let lhs = rr_lhs_interval(2, &q, 30, &eps).unwrap();
        let wrong_rhs = rr_product_interval(3, &q, &eps).unwrap();
        assert!(lhs.gap(&wrong_rhs) > eps);
    }

    #[test]
    fn prediction_tables_are_consistent() {
        let s = spec(GroupKind::Gl, 3, 2);
        let fixed = fixed_dim_counts(&s).unwrap();
        let total: BigInt = fixed.iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, s.order());
        let nil = nilpotent_rank_counts(3, 2).unwrap();
        let total_nil: BigInt = nil.iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(total_nil, unipotent_count(&s));
        let uni = unipotent_fixed_dim_counts(&spec(GroupKind::U, 3, 2)).unwrap();
        let total_uni: BigInt = uni.iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(total_uni, BigInt::from(64));
    }

    #[test]
    fn csv_table_shape() {
        let table = fixed_space_table_csv(&spec(GroupKind::Gl, 2, 2)).unwrap();
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines[0], "kind,n,q,k,value_num,value_den");
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with("gl,2,2,0,"));
    }
}
