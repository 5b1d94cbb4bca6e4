//! Exact counting formulas and Monte Carlo density experiments.
//!
//! Closed forms are evaluated with big integers and rationals. Monte Carlo
//! trials run in parallel; trial `t` draws from ChaCha8 stream `t` of the
//! given seed, so results do not depend on scheduling.

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fqlinear::{binomial, sample_code, sample_subcode, LinearCode};
use crate::galois::Field;
use crate::limits::Limits;

pub const SCHEMA_VERSION: u32 = 1;

fn big_pow(q: u64, e: usize) -> BigUint {
    num_traits::pow(BigUint::from(q), e)
}

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// `b(r) = Σ_{i ≤ r} (q−1)^i C(n, i)`, the size of a Hamming ball of radius `r` in `F_q^n`.
pub fn ball_volume(n: usize, q: u64, r: usize) -> Result<BigUint> {
    if r > n {
        return Err(Error::InvalidParameter(format!("radius {r} exceeds length {n}")));
    }
    Ok((0..=r)
        .map(|i| big_pow(q - 1, i) * BigUint::from(binomial(n, i)))
        .sum())
}

/// Number of `k`-dimensional subspaces of `F_q^n` (zero when `k > n`).
pub fn gaussian_binomial(n: u64, k: u64, q: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k as usize {
        num *= big_pow(q, n as usize - i) - 1u32;
        den *= big_pow(q, i + 1) - 1u32;
    }
    num / den
}

/// Upper bound on the number of `h`-dimensional codes `D ⊇ C` with `d(D) < d`,
/// for a `k`-dimensional `C` with `d(C) ≥ d`:
///
/// `C(n−k, h−k)_q · (q^h − q^k) / ((q−1)(q^n − q^k)) · (b(d−1) − 1)`.
///
/// The leading factor counts all `h`-dimensional supercodes of `C`.
pub fn extension_bound(n: usize, k: usize, h: usize, d: usize, q: u64) -> Result<BigRational> {
    if !(k <= h && h <= n) {
        return Err(Error::InvalidParameter(format!("need k ≤ h ≤ n, got k={k}, h={h}, n={n}")));
    }
    if k >= n {
        return Err(Error::InvalidParameter(format!("need k < n, got k={k}, n={n}")));
    }
    if d < 2 {
        return Err(Error::InvalidParameter(format!("need d ≥ 2, got {d}")));
    }
    if d - 1 > n {
        return Err(Error::InvalidParameter(format!("d − 1 = {} exceeds n = {n}", d - 1)));
    }
    let supercodes = BigInt::from(gaussian_binomial((n - k) as u64, (h - k) as u64, q));
    let qh = BigInt::from(big_pow(q, h));
    let qk = BigInt::from(big_pow(q, k));
    let qn = BigInt::from(big_pow(q, n));
    let ball = BigInt::from(ball_volume(n, q, d - 1)?) - 1;
    Ok(ratio(
        supercodes * (qh - &qk) * ball,
        BigInt::from(q - 1) * (qn - qk),
    ))
}

/// Parameters of a pair experiment: `C2 ⊆ C1 ⊆ F_q^n`, `dim C_i = k_i`,
/// success iff `d(C1) ≥ alpha` and `d(C2⊥) ≥ beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairParams {
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub alpha: usize,
    pub beta: usize,
}

impl PairParams {
    fn validate(&self) -> Result<()> {
        if !(self.k2 <= self.k1 && self.k1 <= self.n) {
            return Err(Error::InvalidParameter(format!(
                "need k2 ≤ k1 ≤ n, got k2={}, k1={}, n={}",
                self.k2, self.k1, self.n
            )));
        }
        Ok(())
    }

    /// Regime where the density of good pairs tends to 1 as `q` grows.
    pub fn in_dense_regime(&self) -> bool {
        self.k2 + 1 >= self.beta
    }
}

/// The two bracketed factors of the pair density bound and their product.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityBound {
    /// `1 − (q^{k1} − 1)/((q−1)(q^n − 1)) · (b(α−1) − 1)`, the `C1` factor.
    pub c1_factor: BigRational,
    /// `1 − (q^{n−k2} − q^{n−k1})/((q−1)(q^n − q^{n−k1})) · (b(β−1) − 1)`, the `C2` factor.
    pub c2_factor: BigRational,
    /// `c1_factor · c2_factor`.
    pub value: BigRational,
}

impl DensityBound {
    /// Product of the factors clamped at zero; the raw product of two negative
    /// factors is positive but says nothing.
    pub fn clamped(&self) -> BigRational {
        let clamp = |x: &BigRational| if x.is_negative() { BigRational::zero() } else { x.clone() };
        clamp(&self.c1_factor) * clamp(&self.c2_factor)
    }
}

// 1 − num/den · ball, with an empty numerator giving 1 even when den = 0.
fn bound_factor(num: BigInt, den: BigInt, ball_minus_one: BigInt) -> BigRational {
    if num.is_zero() || ball_minus_one.is_zero() {
        return BigRational::one();
    }
    BigRational::one() - ratio(num * ball_minus_one, den)
}

/// Lower bound on the fraction of pairs in `S_{k1,k2}` with `d(C1) ≥ α` and `d(C2⊥) ≥ β`.
///
/// A distance requirement of `α ≤ 1` is vacuous and contributes a factor 1;
/// `α > n + 1` is unattainable and contributes 0 (or less).
pub fn density_lower_bound(p: &PairParams, q: u64) -> Result<DensityBound> {
    p.validate()?;
    let n = p.n;
    let ball = |req: usize| -> BigInt {
        if req <= 1 {
            BigInt::zero()
        } else {
            // Clamped radius; requirements beyond n + 1 cannot be met anyway.
            let r = (req - 1).min(n);
            let extra = if req - 1 > n { 1 } else { 0 };
            BigInt::from(ball_volume(n, q, r).expect("r ≤ n")) - 1 + extra
        }
    };
    let qb = |e: usize| BigInt::from(big_pow(q, e));
    let c1_factor = bound_factor(
        qb(p.k1) - 1,
        BigInt::from(q - 1) * (qb(n) - 1),
        ball(p.alpha),
    );
    let c2_factor = bound_factor(
        qb(n - p.k2) - qb(n - p.k1),
        BigInt::from(q - 1) * (qb(n) - qb(n - p.k1)),
        ball(p.beta),
    );
    let value = &c1_factor * &c2_factor;
    Ok(DensityBound {
        c1_factor,
        c2_factor,
        value,
    })
}

/// `|S_{k1,k2}| = C(n, k1)_q · C(k1, k2)_q`.
pub fn pair_count(n: usize, k1: usize, k2: usize, q: u64) -> BigUint {
    gaussian_binomial(n as u64, k1 as u64, q) * gaussian_binomial(k1 as u64, k2 as u64, q)
}

/// Lower bound on the fraction of `[n, k]_q` codes containing a word of weight exactly `ω`:
/// `β·C(n−1, k−1)_q / (1 + (β−1)(q^{k−1}−1)/(q^{n−1}−1)) / C(n, k)_q` with `β = C(n, ω)(q−1)^{ω−1}`.
///
/// Requires `1 ≤ ω ≤ n` and `1 ≤ k < n`.
pub fn weightword_lower_bound(n: usize, k: usize, omega: usize, q: u64) -> Result<BigRational> {
    if !(1 <= k && k < n) || !(1 <= omega && omega <= n) {
        return Err(Error::InvalidParameter(format!(
            "need 1 ≤ k < n and 1 ≤ ω ≤ n, got n={n}, k={k}, ω={omega}"
        )));
    }
    let beta = BigInt::from(binomial(n, omega)) * BigInt::from(big_pow(q - 1, omega - 1));
    let qb = |e: usize| BigInt::from(big_pow(q, e));
    let denom = BigRational::one() + ratio((&beta - 1) * (qb(k - 1) - 1), qb(n - 1) - 1);
    let numer = BigRational::from_integer(beta * BigInt::from(gaussian_binomial(n as u64 - 1, k as u64 - 1, q)));
    let total = BigRational::from_integer(BigInt::from(gaussian_binomial(n as u64, k as u64, q)));
    Ok(numer / denom / total)
}

/// Outcome of a Monte Carlo experiment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DensityEstimate {
    pub trials: u64,
    pub successes: u64,
    pub seed: u64,
}

impl DensityEstimate {
    pub fn estimate(&self) -> f64 {
        if self.trials == 0 {
            return 0.0;
        }
        self.successes as f64 / self.trials as f64
    }

    /// Binomial standard error `sqrt(p(1−p)/N)`.
    pub fn std_error(&self) -> f64 {
        if self.trials == 0 {
            return 0.0;
        }
        let p = self.estimate();
        (p * (1.0 - p) / self.trials as f64).sqrt()
    }

    /// 95% normal-approximation half-width.
    pub fn ci_halfwidth(&self) -> f64 {
        1.96 * self.std_error()
    }
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn run_trials(trials: u64, seed: u64, trial: impl Fn(&mut ChaCha8Rng) -> Result<bool> + Sync) -> Result<DensityEstimate> {
    let outcomes: Vec<bool> = (0..trials)
        .into_par_iter()
        .map(|t| trial(&mut trial_rng(seed, t)))
        .collect::<Result<_>>()?;
    Ok(DensityEstimate {
        trials,
        successes: outcomes.iter().filter(|&&b| b).count() as u64,
        seed,
    })
}

fn meets_distance(code: &LinearCode, required: usize, limits: &Limits) -> Result<bool> {
    if required <= 1 {
        return Ok(true);
    }
    if required > code.len() + 1 {
        return Ok(false);
    }
    Ok(code.min_distance_with(limits)? >= required)
}

/// Fraction of `N` uniformly sampled pairs `C2 ⊆ C1` with `d(C1) ≥ α` and `d(C2⊥) ≥ β`.
///
/// Pairs are drawn as a uniform `C1` followed by a uniform subcode; every
/// `C1` has the same number of `k2`-dimensional subcodes, so this is uniform on pairs.
pub fn estimate_pair_density(
    field: &Arc<Field>,
    p: &PairParams,
    trials: u64,
    seed: u64,
    limits: &Limits,
) -> Result<DensityEstimate> {
    p.validate()?;
    run_trials(trials, seed, |rng| {
        let c1 = sample_code(field, p.n, p.k1, rng)?;
        let c2 = sample_subcode(&c1, p.k2, rng)?;
        Ok(meets_distance(&c1, p.alpha, limits)? && meets_distance(&c2.dual(), p.beta, limits)?)
    })
}

/// Whether `(n, k, ω)` satisfies `k < n` and `ω > n − k + 1`.
pub fn weightword_in_regime(n: usize, k: usize, omega: usize) -> bool {
    k < n && omega > n - k + 1
}

/// Fraction of `N` uniformly sampled `[n, k]_q` codes containing a word of weight exactly `ω`.
pub fn estimate_weightword_density(
    field: &Arc<Field>,
    n: usize,
    k: usize,
    omega: usize,
    trials: u64,
    seed: u64,
    limits: &Limits,
) -> Result<DensityEstimate> {
    if k > n || omega > n {
        return Err(Error::InvalidParameter(format!(
            "need k ≤ n and ω ≤ n, got n={n}, k={k}, ω={omega}"
        )));
    }
    run_trials(trials, seed, |rng| {
        let code = sample_code(field, n, k, rng)?;
        Ok(code.weight_distribution(limits)?[omega] > 0)
    })
}

fn rational_parts(r: &BigRational) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}

/// One CSV row of a pair density experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct PairExperiment {
    pub q: u64,
    pub params: PairParams,
    pub estimate: DensityEstimate,
    pub bound: DensityBound,
}

impl PairExperiment {
    pub const CSV_HEADER: &'static str =
        "q,n,k1,k2,alpha,beta,N,seed,successes,estimate,ci_halfwidth,lower_bound_num,lower_bound_den,schema_version";

    pub fn run(field: &Arc<Field>, params: PairParams, trials: u64, seed: u64, limits: &Limits) -> Result<PairExperiment> {
        let bound = density_lower_bound(&params, field.order() as u64)?;
        let estimate = estimate_pair_density(field, &params, trials, seed, limits)?;
        Ok(PairExperiment {
            q: field.order() as u64,
            params,
            estimate,
            bound,
        })
    }

    /// `estimate ≥ bound − z·σ`.
    pub fn consistent(&self, z: f64) -> bool {
        let bound = self.bound.value.to_f64().unwrap_or(f64::NEG_INFINITY);
        self.estimate.estimate() >= bound - z * self.estimate.std_error()
    }

    pub fn csv_row(&self) -> String {
        let (num, den) = rational_parts(&self.bound.value);
        let p = &self.params;
        let e = &self.estimate;
        format!(
            "{},{},{},{},{},{},{},{},{},{:.6},{:.6},{},{},{}",
            self.q,
            p.n,
            p.k1,
            p.k2,
            p.alpha,
            p.beta,
            e.trials,
            e.seed,
            e.successes,
            e.estimate(),
            e.ci_halfwidth(),
            num,
            den,
            SCHEMA_VERSION
        )
    }
}

/// One CSV row of a weight-ω experiment. The bound columns are empty outside `1 ≤ k < n`, `1 ≤ ω`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightwordExperiment {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub omega: usize,
    pub estimate: DensityEstimate,
    pub bound: Option<BigRational>,
}

impl WeightwordExperiment {
    pub const CSV_HEADER: &'static str =
        "q,n,k,omega,N,seed,successes,estimate,ci_halfwidth,lower_bound_num,lower_bound_den,in_regime,schema_version";

    pub fn run(
        field: &Arc<Field>,
        n: usize,
        k: usize,
        omega: usize,
        trials: u64,
        seed: u64,
        limits: &Limits,
    ) -> Result<WeightwordExperiment> {
        let q = field.order() as u64;
        let estimate = estimate_weightword_density(field, n, k, omega, trials, seed, limits)?;
        Ok(WeightwordExperiment {
            q,
            n,
            k,
            omega,
            estimate,
            bound: weightword_lower_bound(n, k, omega, q).ok(),
        })
    }

    pub fn csv_row(&self) -> String {
        let (num, den) = self.bound.as_ref().map(rational_parts).unwrap_or_default();
        let e = &self.estimate;
        format!(
            "{},{},{},{},{},{},{},{:.6},{:.6},{},{},{},{}",
            self.q,
            self.n,
            self.k,
            self.omega,
            e.trials,
            e.seed,
            e.successes,
            e.estimate(),
            e.ci_halfwidth(),
            num,
            den,
            weightword_in_regime(self.n, self.k, self.omega),
            SCHEMA_VERSION
        )
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::fqlinear::{enumerate_subspaces, tests::gf, LinearCode};

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn ball_volume_examples() {
        assert_eq!(ball_volume(5, 3, 0).unwrap(), 1u32.into());
        assert_eq!(ball_volume(7, 2, 1).unwrap(), 8u32.into());
        assert_eq!(ball_volume(3, 3, 3).unwrap(), 27u32.into());
        assert!(ball_volume(3, 3, 4).is_err());
    }

    #[test]
    fn ball_volume_matches_counting() {
        for (n, q) in [(4usize, 2u64), (3, 3), (3, 4)] {
            let f = gf(q);
            let all = LinearCode::full(f, n).codewords(&Limits::default()).unwrap();
            for radius in 0..=n {
                let inside = all.iter().filter(|v| crate::fqlinear::weight(v) <= radius).count();
                assert_eq!(ball_volume(n, q, radius).unwrap(), BigUint::from(inside));
            }
        }
    }

    #[test]
    fn gaussian_binomial_examples() {
        assert_eq!(gaussian_binomial(5, 0, 3), 1u32.into());
        assert_eq!(gaussian_binomial(2, 1, 2), 3u32.into());
        assert_eq!(gaussian_binomial(4, 2, 2), 35u32.into());
        assert_eq!(gaussian_binomial(2, 3, 2), 0u32.into());
    }

    #[test]
    fn gaussian_binomial_counts_subspaces() {
        for q in [2u64, 3] {
            for n in 0..=4 {
                let ambient = LinearCode::full(gf(q), n);
                for k in 0..=n {
                    let count = enumerate_subspaces(&ambient, k, &Limits::default()).unwrap().count();
                    assert_eq!(gaussian_binomial(n as u64, k as u64, q), BigUint::from(count));
                }
            }
        }
    }

    #[test]
    fn pair_count_matches_enumeration() {
        let lim = Limits::default();
        for n in 0..=4 {
            let ambient = LinearCode::full(gf(2), n);
            for k1 in 0..=n {
                for k2 in 0..=k1 {
                    let pairs: usize = enumerate_subspaces(&ambient, k1, &lim)
                        .unwrap()
                        .map(|c1| enumerate_subspaces(&c1, k2, &lim).unwrap().count())
                        .sum();
                    assert_eq!(pair_count(n, k1, k2, 2), BigUint::from(pairs));
                }
            }
        }
    }

    #[test]
    fn extension_bound_errors_and_trivial_cases() {
        assert!(extension_bound(4, 1, 2, 1, 2).is_err());
        assert!(extension_bound(4, 2, 1, 2, 2).is_err());
        assert!(extension_bound(4, 4, 4, 2, 2).is_err());
        assert!(extension_bound(4, 2, 2, 2, 2).unwrap().is_zero());
    }

    // Count h-dimensional D ⊇ C with d(D) < d by exhaustion.
    fn bad_supercodes(c: &LinearCode, h: usize, d: usize) -> (usize, usize) {
        let lim = Limits::default();
        let ambient = LinearCode::full(c.field().clone(), c.len());
        let supers: Vec<_> = enumerate_subspaces(&ambient, h, &lim)
            .unwrap()
            .filter(|dd| c.is_subcode_of(dd))
            .collect();
        let bad = supers.iter().filter(|dd| dd.min_distance().unwrap() < d).count();
        (supers.len(), bad)
    }

    #[test]
    fn extension_bound_dominates_exhaustive_count() {
        let c = LinearCode::from_values(gf(2), &[vec![1, 1, 1, 1]]).unwrap();
        let (total, bad) = bad_supercodes(&c, 2, 2);
        assert_eq!(BigUint::from(total), gaussian_binomial(3, 1, 2));
        assert_eq!(bad, 4);
        // Tight here: 7 · 2/14 · 4.
        assert_eq!(extension_bound(4, 1, 2, 2, 2).unwrap(), r(4, 1));

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for (q, n) in [(2u64, 5usize), (3, 4)] {
            for k in 0..n {
                for _ in 0..3 {
                    let c = sample_code(&gf(q), n, k, &mut rng).unwrap();
                    let dc = c.min_distance().unwrap().min(n + 1);
                    for d in 2..=dc.min(n + 1) {
                        for h in k..=n {
                            let (_, bad) = bad_supercodes(&c, h, d);
                            let bound = extension_bound(n, k, h, d, q).unwrap();
                            assert!(BigRational::from_integer(bad.into()) <= bound, "{c:?} h={h} d={d}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn density_bound_examples() {
        let p = |alpha, beta| PairParams { n: 8, k1: 4, k2: 2, alpha, beta };
        assert_eq!(density_lower_bound(&p(1, 1), 4).unwrap().value, r(1, 1));
        // Independent simplification: (1 − 8/(q⁴+1)) · (1 − 8/(q²+1)).
        for q in [2i64, 4, 8, 16] {
            let expected = (r(1, 1) - r(8, q.pow(4) + 1)) * (r(1, 1) - r(8, q * q + 1));
            assert_eq!(density_lower_bound(&p(2, 2), q as u64).unwrap().value, expected);
        }
        assert_eq!(density_lower_bound(&p(2, 2), 4).unwrap().value, r(2241, 4369));
        let series: Vec<_> = [2u64, 4, 8, 16]
            .iter()
            .map(|&q| density_lower_bound(&p(2, 2), q).unwrap().value)
            .collect();
        assert!(series.windows(2).all(|w| w[0] < w[1]));
        assert!(series.iter().all(|v| *v < r(1, 1)));
        assert!(density_lower_bound(&PairParams { n: 3, k1: 1, k2: 2, alpha: 1, beta: 1 }, 2).is_err());
    }

    #[test]
    fn density_bound_degenerate_dimensions() {
        for (k1, k2) in [(0, 0), (3, 3), (5, 5)] {
            let b = density_lower_bound(&PairParams { n: 5, k1, k2, alpha: 1, beta: 3 }, 3).unwrap();
            assert_eq!(b.c2_factor, r(1, 1));
        }
    }

    fn exact_pair_density(n: usize, q: u64, p: &PairParams) -> BigRational {
        let lim = Limits::default();
        let ambient = LinearCode::full(gf(q), n);
        let (mut good, mut total) = (0u64, 0u64);
        for c1 in enumerate_subspaces(&ambient, p.k1, &lim).unwrap() {
            let ok1 = meets_distance(&c1, p.alpha, &lim).unwrap();
            for c2 in enumerate_subspaces(&c1, p.k2, &lim).unwrap() {
                total += 1;
                if ok1 && meets_distance(&c2.dual(), p.beta, &lim).unwrap() {
                    good += 1;
                }
            }
        }
        BigRational::new(good.into(), total.into())
    }

    #[test]
    fn c1_factor_bounds_exhaustive_fraction() {
        let lim = Limits::default();
        for (q, n) in [(2u64, 4usize), (3, 3)] {
            let ambient = LinearCode::full(gf(q), n);
            for k1 in 0..=n {
                let codes: Vec<_> = enumerate_subspaces(&ambient, k1, &lim).unwrap().collect();
                for alpha in 1..=n + 1 {
                    let good = codes.iter().filter(|c| meets_distance(c, alpha, &lim).unwrap()).count();
                    let exact = BigRational::new(good.into(), codes.len().into());
                    let p = PairParams { n, k1, k2: 0, alpha, beta: 1 };
                    assert!(density_lower_bound(&p, q).unwrap().c1_factor <= exact, "{p:?}");
                }
            }
        }
    }

    // The C2 factor bounds the subcodes of one C1, provided d(C1⊥) ≥ β.
    #[test]
    fn c2_factor_bounds_subcodes_of_each_c1() {
        let lim = Limits::default();
        for (q, n) in [(2u64, 4usize), (3, 3)] {
            let ambient = LinearCode::full(gf(q), n);
            for k1 in 1..=n {
                for c1 in enumerate_subspaces(&ambient, k1, &lim).unwrap() {
                    let dual_distance = c1.dual().min_distance().unwrap();
                    for k2 in 0..=k1 {
                        let subs: Vec<_> = enumerate_subspaces(&c1, k2, &lim).unwrap().collect();
                        for beta in 2..=dual_distance.min(n + 1) {
                            let good = subs
                                .iter()
                                .filter(|c2| meets_distance(&c2.dual(), beta, &lim).unwrap())
                                .count();
                            let exact = BigRational::new(good.into(), subs.len().into());
                            let p = PairParams { n, k1, k2, alpha: 1, beta };
                            assert!(density_lower_bound(&p, q).unwrap().c2_factor <= exact, "{c1:?} {p:?}");
                        }
                    }
                }
            }
        }
    }

    // Without d(C1⊥) ≥ β the product is not a lower bound at small q.
    #[test]
    fn product_bound_fails_for_some_small_cases() {
        let p = PairParams { n: 4, k1: 3, k2: 2, alpha: 1, beta: 2 };
        assert!(p.in_dense_regime());
        assert_eq!(exact_pair_density(4, 2, &p), r(13, 35));
        assert_eq!(density_lower_bound(&p, 2).unwrap().value, r(3, 7));
        let p = PairParams { n: 4, k1: 1, k2: 1, alpha: 2, beta: 2 };
        assert_eq!(exact_pair_density(4, 2, &p), r(1, 15));
        assert_eq!(density_lower_bound(&p, 2).unwrap().value, r(11, 15));
    }

    #[test]
    fn product_bound_holds_on_small_exhaustive_grid() {
        // n = 4, q = 3, k1 = 2, k2 = 1: every admissible (α, β) pair.
        for alpha in 1..=3 {
            for beta in 1..=2 {
                let p = PairParams { n: 4, k1: 2, k2: 1, alpha, beta };
                let exact = exact_pair_density(4, 3, &p);
                assert!(density_lower_bound(&p, 3).unwrap().clamped() <= exact, "{p:?} {exact}");
            }
        }
    }

    #[test]
    fn pair_estimate_trivial_cases() {
        let f = gf(3);
        let lim = Limits::default();
        let all = PairParams { n: 5, k1: 3, k2: 1, alpha: 1, beta: 1 };
        let e = estimate_pair_density(&f, &all, 200, 1, &lim).unwrap();
        assert_eq!(e.successes, 200);
        let none = PairParams { alpha: 7, ..all };
        assert_eq!(estimate_pair_density(&f, &none, 200, 1, &lim).unwrap().successes, 0);
    }

    #[test]
    fn pair_estimate_is_deterministic() {
        let f = gf(4);
        let p = PairParams { n: 6, k1: 3, k2: 1, alpha: 3, beta: 2 };
        let lim = Limits::default();
        let a = estimate_pair_density(&f, &p, 300, 9, &lim).unwrap();
        let b = estimate_pair_density(&f, &p, 300, 9, &lim).unwrap();
        assert_eq!(a, b);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let c = pool.install(|| estimate_pair_density(&f, &p, 300, 9, &lim).unwrap());
        assert_eq!(a, c);
    }

    #[test]
    fn pair_estimate_respects_bound() {
        let f = gf(4);
        let p = PairParams { n: 8, k1: 4, k2: 2, alpha: 2, beta: 2 };
        let exp = PairExperiment::run(&f, p, 500, 7, &Limits::default()).unwrap();
        assert!(exp.consistent(3.0), "{}", exp.csv_row());
        assert_eq!(exp.csv_row().split(',').count(), PairExperiment::CSV_HEADER.split(',').count());
    }

    #[test]
    fn weightword_trivial_cases() {
        let lim = Limits::default();
        let f = gf(3);
        assert_eq!(estimate_weightword_density(&f, 5, 2, 0, 50, 3, &lim).unwrap().successes, 50);
        assert_eq!(estimate_weightword_density(&f, 4, 4, 4, 50, 3, &lim).unwrap().successes, 50);
        assert!(estimate_weightword_density(&f, 4, 5, 4, 50, 3, &lim).is_err());
    }

    #[test]
    fn weightword_density_grows_with_q() {
        // [6,3] codes with a weight-5 word: ω = 5 > n − k + 1 = 4.
        assert!(weightword_in_regime(6, 3, 5));
        let lim = Limits::default();
        let est: Vec<f64> = [2u64, 4, 8]
            .iter()
            .map(|&q| estimate_weightword_density(&gf(q), 6, 3, 5, 1000, 17, &lim).unwrap().estimate())
            .collect();
        assert!(est.windows(2).all(|w| w[0] < w[1]), "{est:?}");
    }

    #[test]
    fn weightword_bound_below_exhaustive_fraction() {
        let lim = Limits::default();
        for (q, n) in [(2u64, 4usize), (2, 5), (3, 4)] {
            let ambient = LinearCode::full(gf(q), n);
            for k in 1..n {
                let codes: Vec<_> = enumerate_subspaces(&ambient, k, &lim).unwrap().collect();
                for omega in 1..=n {
                    let hits = codes
                        .iter()
                        .filter(|c| c.weight_distribution(&lim).unwrap()[omega] > 0)
                        .count();
                    let exact = BigRational::new(hits.into(), codes.len().into());
                    assert!(weightword_lower_bound(n, k, omega, q).unwrap() <= exact);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn gaussian_binomial_symmetry(n in 0u64..9, k in 0u64..9, q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9])) {
            prop_assume!(k <= n);
            prop_assert_eq!(gaussian_binomial(n, k, q), gaussian_binomial(n, n - k, q));
        }

        #[test]
        fn full_ball_is_whole_space(n in 0usize..12, q in 2u64..10) {
            prop_assert_eq!(ball_volume(n, q, n).unwrap(), big_pow(q, n));
        }
    }
}
