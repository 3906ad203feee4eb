//! Truncated univariate power series with exact rational coefficients, and
//! coefficientwise verification of the generating-function identities.
//!
//! All series live in one variable `v`. Identities that the measure states
//! in the pair `(u, x)` are normalized by the prefactor first, after which
//! `u` and `x` only occur through `v = ux`, so a univariate ring suffices
//! and every compared quantity is rational.

use crate::error::{Error, Result};
use crate::exactnum::{euler_prefactor, rat_int, rat_pow, stong_term, IntervalEnclosure, Rational};
use crate::measure::{gl_order_formal, size_free_weight, Mode};
use crate::partition::{enumerate_partitions, Constraint};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// A power series truncated at degree `D`: coefficients of `v^0..v^D`.
/// Arithmetic is exact and never reads beyond the truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    pub fn zero(degree: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); degree + 1],
        }
    }

    pub fn one(degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn monomial(degree: usize, power: usize, coeff: Rational) -> Self {
        let mut s = Self::zero(degree);
        if power <= degree {
            s.coeffs[power] = coeff;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Result<&Rational> {
        self.coeffs.get(i).ok_or(Error::TruncationExceeded {
            index: i,
            degree: self.degree(),
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, i: usize, c: Rational) -> Result<()> {
        let d = self.degree();
        match self.coeffs.get_mut(i) {
            Some(slot) => {
                *slot = c;
                Ok(())
            }
            None => Err(Error::TruncationExceeded {
                index: i,
                degree: d,
            }),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "truncation degrees differ");
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "truncation degrees differ");
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "truncation degrees differ");
        let d = self.degree();
        let mut out = vec![Rational::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(d + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert_unit(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NonUnitInversion);
        }
        let d = self.degree();
        let a0_inv = self.coeffs[0].clone().recip();
        let mut out = vec![Rational::zero(); d + 1];
        out[0] = a0_inv.clone();
        for n in 1..=d {
            let mut acc = Rational::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[n - i];
                }
            }
            out[n] = -acc * &a0_inv;
        }
        Ok(Self { coeffs: out })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitutes `v -> v^d`, keeping the same truncation degree.
    pub fn substitute_power(&self, d: usize) -> Self {
        assert!(d >= 1);
        let deg = self.degree();
        let mut out = vec![Rational::zero(); deg + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            match i.checked_mul(d) {
                Some(j) if j <= deg => out[j] = c.clone(),
                _ => break,
            }
        }
        Self { coeffs: out }
    }

    pub fn evaluate(&self, v: &Rational) -> Rational {
        // Horner
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    /// `sum_{i<=n} a_i`: the coefficient of `v^n` in `f(v)/(1-v)`.
    pub fn prefix_sum(&self, n: usize) -> Result<Rational> {
        if n > self.degree() {
            return Err(Error::TruncationExceeded {
                index: n,
                degree: self.degree(),
            });
        }
        Ok(self.coeffs[..=n].iter().sum())
    }

    /// Index of the first differing coefficient, if any.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        assert_eq!(self.degree(), other.degree(), "truncation degrees differ");
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }
}

/// Series expansion of `prod_{r>=1} (1 - v/q^r)`: coefficient `i` is
/// `(-1)^i / ((q^i - 1) ... (q - 1))`.
pub fn euler_numerator_series(q: &Rational, degree: usize) -> TruncSeries {
    let coeffs = (0..=degree).map(|i| stong_term(i as u32, q)).collect();
    TruncSeries { coeffs }
}

/// Series in `a` for `1 / ((1-a y)(1-a y^2)...(1-a y^k))` (finite `k`) or
/// `1 / prod_{r>=1} (1-a y^r)` (`k = None`): the coefficient of `a^m` is
/// `y^m * prod_{j=0}^{m-1} (1 - y^{k+j}) / prod_{j=1}^{m} (1 - y^j)`,
/// with the numerator factors collapsing to 1 in the infinite case.
/// Requires `|y| < 1`.
pub fn hw_denominator_series(k: Option<u32>, y: &Rational, degree: usize) -> Result<TruncSeries> {
    if y.abs() >= Rational::one() {
        return Err(Error::InvalidParameter(format!("|y| must be < 1, got {y}")));
    }
    let mut coeffs = Vec::with_capacity(degree + 1);
    let mut current = Rational::one();
    coeffs.push(current.clone());
    for m in 1..=degree {
        // multiply by y * (1 - y^{k+m-1}) / (1 - y^m)
        let mut factor = y / (Rational::one() - rat_pow(y, m as i64));
        if let Some(k) = k {
            factor *= Rational::one() - rat_pow(y, k as i64 + m as i64 - 1);
        }
        current *= factor;
        coeffs.push(current.clone());
    }
    Ok(TruncSeries { coeffs })
}

/// The size generating function of the measure, normalized by the
/// prefactor and written in `v = ux`:
/// `sum_lambda v^|lambda| w(lambda)/u^|lambda| = prod_{r>=1} 1/(1 - v/q^r)`.
pub fn size_gen_normalized(q: &Rational, degree: usize) -> Result<TruncSeries> {
    hw_denominator_series(None, &q.clone().recip(), degree)
}

/// The first-column-count generating function, normalized and in `v = ux`:
/// restricted to partitions with `lambda'_1 = k` the sum equals
/// `v^k / |GL(k,q)| * prod_{r=1}^{k} 1/(1 - v/q^r)`.
pub fn interp_normalized(k: u32, q: &Rational, degree: usize) -> Result<TruncSeries> {
    let tail = hw_denominator_series(Some(k), &q.clone().recip(), degree)?;
    let lead = TruncSeries::monomial(degree, k as usize, gl_order_formal(k, q).recip());
    Ok(lead.mul(&tail))
}

/// Partition-sum route to the same coefficients as [`size_gen_normalized`]:
/// coefficient `n` is `sum_{|lambda|=n} w(lambda)/u^n`, with an optional
/// restriction on the number of parts.
pub fn partition_sum_series(q: &Rational, degree: usize, num_parts: Option<u32>) -> TruncSeries {
    let mut coeffs = vec![Rational::zero(); degree + 1];
    let constraint = num_parts.map(Constraint::NumParts);
    for lam in enumerate_partitions(degree as u64, constraint) {
        coeffs[lam.size() as usize] += size_free_weight(&lam, q, Mode::Standard);
    }
    TruncSeries { coeffs }
}

/// One verifiable identity. Each variant names both of its independently
/// constructed sides.
#[derive(Clone, Debug)]
pub enum Identity {
    /// Size generating function: partition sums vs. the closed product.
    SizeGen { q: Rational, degree: usize },
    /// First-column generating function at fixed `k`.
    Interp { k: u32, q: Rational, degree: usize },
    /// Finite-product expansion: `prod_{r=1}^k (1-a y^r) * series = 1`.
    Hw { k: u32, y: Rational, degree: usize },
    /// Series expansion of the Euler-type product, checked numerically at
    /// `v = 1/2` against the product enclosure.
    Stong { q: Rational, degree: usize },
    /// Factorization of `1 - v` over all monic irreducibles except `z`,
    /// grouped by degree with necklace counts; requires prime-power `q`.
    ProdGl { q: u64, degree: usize },
}

impl Identity {
    pub fn name(&self) -> String {
        match self {
            Identity::SizeGen { .. } => "sizegen".into(),
            Identity::Interp { k, .. } => format!("interp(k={k})"),
            Identity::Hw { k, .. } => format!("hw(k={k})"),
            Identity::Stong { .. } => "stong".into(),
            Identity::ProdGl { .. } => "prodgl".into(),
        }
    }

    fn q_label(&self) -> String {
        match self {
            Identity::SizeGen { q, .. }
            | Identity::Interp { q, .. }
            | Identity::Stong { q, .. } => q.to_string(),
            Identity::Hw { y, .. } => format!("y={y}"),
            Identity::ProdGl { q, .. } => q.to_string(),
        }
    }

    fn degree(&self) -> usize {
        match self {
            Identity::SizeGen { degree, .. }
            | Identity::Interp { degree, .. }
            | Identity::Hw { degree, .. }
            | Identity::Stong { degree, .. }
            | Identity::ProdGl { degree, .. } => *degree,
        }
    }
}

/// Outcome of a coefficientwise comparison. A mismatch is a result, not an
/// error.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub identity: String,
    pub q: String,
    #[serde(rename = "D")]
    pub degree: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch_index: Option<usize>,
}

pub fn verify_identity(identity: &Identity) -> Result<VerifyReport> {
    let (pass, mismatch_index) = match identity {
        Identity::SizeGen { q, degree } => {
            require_q_gt_one(q)?;
            let lhs = partition_sum_series(q, *degree, None);
            let rhs = size_gen_normalized(q, *degree)?;
            mismatch_outcome(&lhs, &rhs)
        }
        Identity::Interp { k, q, degree } => {
            require_q_gt_one(q)?;
            let lhs = partition_sum_series(q, *degree, Some(*k));
            let rhs = interp_normalized(*k, q, *degree)?;
            mismatch_outcome(&lhs, &rhs)
        }
        Identity::Hw { k, y, degree } => {
            let series = hw_denominator_series(Some(*k), y, *degree)?;
            let mut product = TruncSeries::one(*degree);
            for r in 1..=*k {
                let factor = TruncSeries::from_coeffs(
                    (0..=*degree)
                        .map(|i| match i {
                            0 => Rational::one(),
                            1 => -rat_pow(y, r as i64),
                            _ => Rational::zero(),
                        })
                        .collect(),
                );
                product = product.mul(&factor);
            }
            mismatch_outcome(&product.mul(&series), &TruncSeries::one(*degree))
        }
        Identity::Stong { q, degree } => {
            require_q_gt_one(q)?;
            (stong_evaluation_check(q, *degree)?, None)
        }
        Identity::ProdGl { q, degree } => {
            let lhs = irreducible_factorization_series(*q, *degree)?;
            let mut rhs = TruncSeries::one(*degree);
            if *degree >= 1 {
                rhs.set_coeff(1, -Rational::one())?;
            }
            mismatch_outcome(&lhs, &rhs)
        }
    };
    Ok(VerifyReport {
        identity: identity.name(),
        q: identity.q_label(),
        degree: identity.degree(),
        pass,
        mismatch_index,
    })
}

fn mismatch_outcome(lhs: &TruncSeries, rhs: &TruncSeries) -> (bool, Option<usize>) {
    match lhs.first_mismatch(rhs) {
        None => (true, None),
        some => (false, some),
    }
}

fn require_q_gt_one(q: &Rational) -> Result<()> {
    if *q > Rational::one() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("q={q} must exceed 1")))
    }
}

/// Checks the series expansion of `prod (1 - v/q^r)` by evaluating the
/// truncated series at `v = 1/2` and bracketing the dropped terms by the
/// geometric ratio bound `|a_{i+1}/a_i| <= 1/(q^{D+2} - 1)`.
fn stong_evaluation_check(q: &Rational, degree: usize) -> Result<bool> {
    let v = crate::exactnum::rat(1, 2);
    let series = euler_numerator_series(q, degree);
    let value = series.evaluate(&v);
    let next = stong_term(degree as u32 + 1, q).abs() * rat_pow(&v, degree as i64 + 1);
    let ratio = &v / (rat_pow(q, degree as i64 + 2) - rat_int(1));
    let bound = &next / (Rational::one() - ratio);
    let sum_interval = IntervalEnclosure::new(&value - &bound, &value + &bound);
    // Both sides enclose the same real number, so soundness means the
    // intervals must meet once the product is at least as tight as the
    // series tail bound.
    let product = euler_prefactor(&v, q, &bound)?;
    Ok(sum_interval.intersects(&product))
}

/// Moebius function on small arguments.
fn moebius(mut n: u64) -> i64 {
    let mut primes = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            primes += 1;
        }
        p += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of monic irreducible polynomials of degree `d` over `F_q`:
/// `(1/d) sum_{e|d} mu(e) q^{d/e}`.
pub fn irreducible_count(q: u64, d: u32) -> u64 {
    let d = d as u64;
    let mut total: i128 = 0;
    for e in 1..=d {
        if d % e == 0 {
            total += moebius(e) as i128 * (q as i128).pow((d / e) as u32);
        }
    }
    (total / d as i128) as u64
}

/// The series `prod_{phi != z} prod_{r>=1} (1 - v^{m_phi}/q^{m_phi r})`
/// truncated at `degree`, built by grouping irreducibles by degree: the
/// inner product over `r` is the Euler-type series at base `q^d` in `v^d`,
/// raised to the number of irreducibles of that degree (degree 1 excludes
/// `z` itself). Equals `1 - v` identically.
fn irreducible_factorization_series(q: u64, degree: usize) -> Result<TruncSeries> {
    let (_, _) = crate::gflinear::prime_power_decompose(q)
        .ok_or_else(|| Error::InvalidParameter(format!("q={q} is not a prime power")))?;
    let mut acc = TruncSeries::one(degree);
    for d in 1..=degree.max(1) {
        if d > degree {
            break;
        }
        let count = if d == 1 {
            q - 1 // all monic linear polynomials except z
        } else {
            irreducible_count(q, d as u32)
        };
        let base = rat_pow(&rat_int(q as i64), d as i64);
        let inner = euler_numerator_series(&base, degree / d);
        // re-truncate at `degree` and substitute v -> v^d
        let mut padded = vec![Rational::zero(); degree + 1];
        for (i, c) in inner.coeffs().iter().enumerate() {
            padded[i] = c.clone();
        }
        let spread = TruncSeries::from_coeffs(padded).substitute_power(d);
        acc = acc.mul(&spread.pow(count));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    #[test]
    fn geometric_series_inversion() {
        // (1-v)(1+v+v^2+...) = 1
        let d = 10;
        let mut one_minus_v = TruncSeries::one(d);
        one_minus_v.set_coeff(1, -Rational::one()).unwrap();
        let geo = one_minus_v.invert_unit().unwrap();
        for i in 0..=d {
            assert_eq!(geo.coeff(i).unwrap(), &Rational::one());
        }
        assert_eq!(one_minus_v.mul(&geo), TruncSeries::one(d));
        assert_eq!(
            TruncSeries::one(d).invert_unit().unwrap(),
            TruncSeries::one(d)
        );
        assert!(TruncSeries::zero(d).invert_unit().is_err());
    }

    proptest! {
        // mul matches a naive convolution oracle on random small inputs
        #[test]
        fn mul_matches_naive_convolution(
            a in proptest::collection::vec((-9i64..=9, 1i64..=4), 6),
            b in proptest::collection::vec((-9i64..=9, 1i64..=4), 6),
        ) {
            let s1 = TruncSeries::from_coeffs(a.iter().map(|&(n, d)| rat(n, d)).collect());
            let s2 = TruncSeries::from_coeffs(b.iter().map(|&(n, d)| rat(n, d)).collect());
            let prod = s1.mul(&s2);
            for n in 0..=5usize {
                let mut acc = Rational::zero();
                for i in 0..=n {
                    acc += s1.coeff(i).unwrap() * s2.coeff(n - i).unwrap();
                }
                prop_assert_eq!(prod.coeff(n).unwrap(), &acc);
            }
        }
    }

    #[test]
    fn euler_numerator_series_coefficients() {
        let s = euler_numerator_series(&rat_int(2), 4);
        assert_eq!(s.coeff(0).unwrap(), &Rational::one());
        assert_eq!(s.coeff(1).unwrap(), &rat_int(-1));
        assert_eq!(s.coeff(2).unwrap(), &rat(1, 3));
    }

    #[test]
    fn hw_series_examples() {
        // k=1: geometric in a with ratio y
        let y = rat(1, 2);
        let s = hw_denominator_series(Some(1), &y, 6).unwrap();
        for m in 0..=6 {
            assert_eq!(s.coeff(m).unwrap(), &rat_pow(&y, m as i64));
        }
        // k=2, y=1/2, m=1: y(1-y^2)/(1-y) = 3/4
        let s = hw_denominator_series(Some(2), &y, 4).unwrap();
        assert_eq!(s.coeff(1).unwrap(), &rat(3, 4));
        // |y| >= 1 rejected
        assert!(hw_denominator_series(Some(2), &rat_int(1), 4).is_err());
    }

    #[test]
    fn hw_ring_identity() {
        for k in 1..=4u32 {
            for y in [rat(1, 2), rat(1, 3)] {
                let rep = verify_identity(&Identity::Hw { k, y, degree: 12 }).unwrap();
                assert!(rep.pass, "HW identity failed at k={k}");
            }
        }
    }

    #[test]
    fn size_gen_examples() {
        let s = size_gen_normalized(&rat_int(2), 10).unwrap();
        assert_eq!(s.coeff(0).unwrap(), &Rational::one());
        assert_eq!(s.coeff(1).unwrap(), &Rational::one()); // 1/(q-1) at q=2
        let rep = verify_identity(&Identity::SizeGen {
            q: rat_int(2),
            degree: 10,
        })
        .unwrap();
        assert!(rep.pass);
        let rep = verify_identity(&Identity::SizeGen {
            q: rat(5, 2),
            degree: 10,
        })
        .unwrap();
        assert!(rep.pass);
    }

    #[test]
    fn interp_examples() {
        // k=0 restricts to the empty partition
        let s = interp_normalized(0, &rat_int(2), 6).unwrap();
        assert_eq!(s.coeff(0).unwrap(), &Rational::one());
        for i in 1..=6 {
            assert_eq!(s.coeff(i).unwrap(), &Rational::zero());
        }
        // k=1, q=2: coefficient of v^1 is 1/|GL(1,2)| = 1
        let s = interp_normalized(1, &rat_int(2), 6).unwrap();
        assert_eq!(s.coeff(1).unwrap(), &Rational::one());
        for k in 0..=4u32 {
            for q in [rat_int(2), rat_int(3)] {
                let rep = verify_identity(&Identity::Interp {
                    k,
                    q: q.clone(),
                    degree: 10,
                })
                .unwrap();
                assert!(rep.pass, "interp failed at k={k}, q={q}");
            }
        }
    }

    #[test]
    fn interp_series_sum_to_size_gen() {
        // summing the k-restricted series over k recovers the size series
        let q = rat_int(3);
        let d = 8;
        let mut acc = TruncSeries::zero(d);
        for k in 0..=d as u32 {
            acc = acc.add(&interp_normalized(k, &q, d).unwrap());
        }
        assert_eq!(acc, size_gen_normalized(&q, d).unwrap());
    }

    #[test]
    fn perturbed_coefficient_is_detected() {
        let q = rat_int(2);
        let lhs = partition_sum_series(&q, 8, None);
        let mut rhs = size_gen_normalized(&q, 8).unwrap();
        let c5 = rhs.coeff(5).unwrap().clone();
        rhs.set_coeff(5, c5 + rat(1, 7)).unwrap();
        assert_eq!(lhs.first_mismatch(&rhs), Some(5));
    }

    #[test]
    fn stong_evaluation_passes() {
        for q in [rat_int(2), rat_int(3), rat(5, 2)] {
            let rep = verify_identity(&Identity::Stong {
                q: q.clone(),
                degree: 12,
            })
            .unwrap();
            assert!(rep.pass, "stong check failed at q={q}");
        }
    }

    #[test]
    fn prefix_sums() {
        let ones = TruncSeries::from_coeffs(vec![Rational::one(); 7]);
        assert_eq!(ones.prefix_sum(4).unwrap(), rat_int(5));
        assert!(ones.prefix_sum(7).is_err());
        // prefix sums of a nonnegative series are monotone
        let s = size_gen_normalized(&rat_int(2), 10).unwrap();
        let mut prev = Rational::zero();
        for n in 0..=10 {
            let cur = s.prefix_sum(n).unwrap();
            assert!(cur >= prev);
            prev = cur;
        }
    }

    #[test]
    fn prefix_sums_of_euler_series_converge_into_enclosure() {
        // at v=1 the Euler-type series sums to prod (1 - 1/q^r)
        let q = rat_int(2);
        let s = euler_numerator_series(&q, 24);
        let total = s.prefix_sum(24).unwrap();
        let enc = euler_prefactor(
            &Rational::one(),
            &q,
            &crate::exactnum::parse_rational("1e-4").unwrap(),
        )
        .unwrap();
        // |partial - product| is bounded by the next term magnitude
        let slack = stong_term(25, &q).abs() * rat_int(2);
        assert!(
            IntervalEnclosure::new(&total - &slack, &total + &slack).intersects(&enc),
            "partial sum {total} not near product"
        );
    }

    #[test]
    fn moebius_small_values() {
        let expect = [1i64, -1, -1, 0, -1, 1, -1, 0, 0, 1];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(moebius(i as u64 + 1), e, "mu({})", i + 1);
        }
    }

    #[test]
    fn irreducible_counts_match_brute_force() {
        use crate::gflinear::{make_field, FqPoly};
        for q in [2u64, 3] {
            let field = make_field(q, 1).unwrap();
            for d in 1..=4u32 {
                let brute = FqPoly::enumerate_monic(&field, d as usize)
                    .filter(|f| f.is_irreducible())
                    .count() as u64;
                assert_eq!(irreducible_count(q, d), brute, "q={q} d={d}");
            }
        }
    }

    #[test]
    fn prodgl_collapses_to_one_minus_v() {
        for q in [2u64, 3, 4] {
            let rep = verify_identity(&Identity::ProdGl { q, degree: 10 }).unwrap();
            assert!(rep.pass, "prodgl failed at q={q}");
        }
        assert!(verify_identity(&Identity::ProdGl { q: 6, degree: 6 }).is_err());
    }

    #[test]
    fn report_serialization() {
        let rep = verify_identity(&Identity::SizeGen {
            q: rat_int(2),
            degree: 6,
        })
        .unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains("\"identity\":\"sizegen\""));
        assert!(json.contains("\"pass\":true"));
        assert!(!json.contains("mismatch_index"));
    }
}
