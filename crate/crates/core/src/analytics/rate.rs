use serde::{Deserialize, Serialize};

use super::check_probability;
use crate::{Error, Result};

/// The Chernoff rate function `H(t) = (log t)/t + 1/t - 1`, with `H(∞) = -1`.
///
/// `H(1) = 0`, `H < 0` elsewhere, increasing on `(0, 1)` and decreasing on
/// `(1, ∞)`. Pass `f64::INFINITY` for the limit.
pub fn rate_h(t: f64) -> Result<f64> {
    if t.is_nan() || t <= 0.0 {
        return Err(Error::argument(format!("H(t) requires t > 0, got {t}")));
    }
    if t.is_infinite() {
        return Ok(-1.0);
    }
    // (log t - (t - 1)) / t; log1p keeps the cancellation near t = 1 exact.
    let numerator = if (0.5..=2.0).contains(&t) {
        let h = t - 1.0;
        h.ln_1p() - h
    } else {
        t.ln() + 1.0 - t
    };
    Ok(numerator / t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TailDirection {
    /// `P[X >= k]`
    Upper,
    /// `P[X <= k]`
    Lower,
}

impl std::str::FromStr for TailDirection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "upper" => Ok(TailDirection::Upper),
            "lower" => Ok(TailDirection::Lower),
            _ => Err(Error::argument(format!(
                "direction must be `upper` or `lower`, got {s:?}"
            ))),
        }
    }
}

/// A binomial tail bound request `X ~ Bi(trials, success_prob)` at `cutoff`.
///
/// The bound is valid for `cutoff >= trials·p` (upper) or
/// `0 < cutoff <= trials·p` (lower); construction enforces the window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBoundQuery {
    trials: u64,
    success_prob: f64,
    cutoff: f64,
    direction: TailDirection,
}

impl TailBoundQuery {
    pub fn new(
        trials: u64,
        success_prob: f64,
        cutoff: f64,
        direction: TailDirection,
    ) -> Result<Self> {
        if trials == 0 {
            return Err(Error::argument("trials must be at least 1"));
        }
        if !(success_prob > 0.0 && success_prob <= 1.0) {
            return Err(Error::argument(format!(
                "success probability must lie in (0, 1], got {success_prob}"
            )));
        }
        if !(cutoff.is_finite() && cutoff > 0.0) {
            return Err(Error::argument(format!(
                "cutoff must be positive, got {cutoff}"
            )));
        }
        let mean = trials as f64 * success_prob;
        match direction {
            TailDirection::Upper if cutoff < mean => Err(Error::domain(format!(
                "upper tail bound requires k >= np, got k = {cutoff} < np = {mean}"
            ))),
            TailDirection::Lower if cutoff > mean => Err(Error::domain(format!(
                "lower tail bound requires 0 < k <= np, got k = {cutoff} > np = {mean}"
            ))),
            _ => Ok(TailBoundQuery {
                trials,
                success_prob,
                cutoff,
                direction,
            }),
        }
    }

    pub fn trials(&self) -> u64 {
        self.trials
    }

    pub fn success_prob(&self) -> f64 {
        self.success_prob
    }

    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn direction(&self) -> TailDirection {
        self.direction
    }

    pub fn mean(&self) -> f64 {
        self.trials as f64 * self.success_prob
    }
}

/// `(np/k)^k · exp(k - np)`, the Chernoff bound on the requested tail.
///
/// Equal to `exp(np · H(np/k))`; evaluated as the exponent
/// `k·log(np/k) + k - np` to stay finite for large `n`.
pub fn tail_bound(query: &TailBoundQuery) -> f64 {
    let mean = query.mean();
    let k = query.cutoff;
    (k * (mean / k).ln() + k - mean).exp()
}

/// Full `Bi(trials, p)` pmf over `0..=trials`.
///
/// Built by the ratio recurrence outward from the mode and normalized, so
/// it never forms a binomial coefficient explicitly.
pub fn binomial_pmf(trials: usize, p: f64) -> Vec<f64> {
    let mut pmf = vec![0.0; trials + 1];
    if p <= 0.0 {
        pmf[0] = 1.0;
        return pmf;
    }
    if p >= 1.0 {
        pmf[trials] = 1.0;
        return pmf;
    }
    let odds = p / (1.0 - p);
    let mode = (((trials + 1) as f64 * p).floor() as usize).min(trials);
    pmf[mode] = 1.0;
    for k in mode..trials {
        pmf[k + 1] = pmf[k] * (trials - k) as f64 / (k + 1) as f64 * odds;
        if pmf[k + 1] == 0.0 {
            break;
        }
    }
    for k in (1..=mode).rev() {
        pmf[k - 1] = pmf[k] * k as f64 / (trials - k + 1) as f64 / odds;
        if pmf[k - 1] == 0.0 {
            break;
        }
    }
    let total: f64 = pmf.iter().sum();
    pmf.iter_mut().for_each(|x| *x /= total);
    pmf
}

/// Exact `P[X >= cutoff]` or `P[X <= cutoff]` for `X ~ Bi(trials, p)`.
///
/// Terms are summed from the far end of the tail inward so small terms are
/// accumulated first; the result is clamped to `[0, 1]`.
pub fn binom_tail_exact(trials: u64, p: f64, cutoff: u64, direction: TailDirection) -> Result<f64> {
    if trials == 0 {
        return Err(Error::argument("trials must be at least 1"));
    }
    check_probability("p", p)?;
    if cutoff > trials {
        return Err(Error::argument(format!(
            "cutoff {cutoff} exceeds trials {trials}"
        )));
    }
    let pmf = binomial_pmf(trials as usize, p);
    let k = cutoff as usize;
    let sum: f64 = match direction {
        TailDirection::Upper => pmf[k..].iter().rev().sum(),
        TailDirection::Lower => pmf[..=k].iter().sum(),
    };
    Ok(sum.clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn choose(n: u64, k: u64) -> f64 {
        (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
    }

    /// Direct summation of `C(n, j) p^j q^(n-j)`, independent of the recurrence.
    fn naive_tail(n: u64, p: f64, k: u64, upper: bool) -> f64 {
        let range: Vec<u64> = if upper {
            (k..=n).collect()
        } else {
            (0..=k).collect()
        };
        range
            .into_iter()
            .map(|j| choose(n, j) * p.powi(j as i32) * (1.0 - p).powi((n - j) as i32))
            .sum()
    }

    #[test]
    fn rate_function_values() {
        assert_eq!(rate_h(1.0).unwrap(), 0.0);
        assert_eq!(rate_h(f64::INFINITY).unwrap(), -1.0);
        let e = std::f64::consts::E;
        assert!((rate_h(e).unwrap() - (2.0 / e - 1.0)).abs() < 1e-15);
        assert!((rate_h(e).unwrap() + 0.26424).abs() < 1e-5);
        assert!(rate_h(0.0).is_err());
        assert!(rate_h(-1.0).is_err());
        assert!(rate_h(f64::NAN).is_err());
    }

    #[test]
    fn rate_function_shape() {
        let below: Vec<f64> = (1..10_000)
            .map(|i| rate_h(i as f64 / 1e4).unwrap())
            .collect();
        assert!(below.windows(2).all(|w| w[0] < w[1]));
        assert!(below.iter().all(|&h| h < 0.0));
        let above: Vec<f64> = (1..10_000)
            .map(|i| rate_h(1.0 + i as f64 * 1e-3).unwrap())
            .collect();
        assert!(above.windows(2).all(|w| w[0] > w[1]));
        assert!(above.iter().all(|&h| h < 0.0 && h > -1.0));
    }

    #[test]
    fn bound_examples() {
        let q = TailBoundQuery::new(10, 0.5, 10.0, TailDirection::Upper).unwrap();
        let expected = 5f64.exp() / 1024.0;
        assert!((tail_bound(&q) - expected).abs() < 1e-15);
        assert!((tail_bound(&q) - 0.144935).abs() < 1e-6);
        let exact = binom_tail_exact(10, 0.5, 10, TailDirection::Upper).unwrap();
        assert!((exact - 2f64.powi(-10)).abs() < 1e-18);
        assert!(exact <= tail_bound(&q));

        for dir in [TailDirection::Upper, TailDirection::Lower] {
            let at_mean = TailBoundQuery::new(10, 0.5, 5.0, dir).unwrap();
            assert_eq!(tail_bound(&at_mean), 1.0);
        }
    }

    #[test]
    fn window_violations_are_named() {
        let err = TailBoundQuery::new(10, 0.5, 3.0, TailDirection::Upper).unwrap_err();
        assert!(err.to_string().contains("k >= np"));
        let err = TailBoundQuery::new(10, 0.5, 7.0, TailDirection::Lower).unwrap_err();
        assert!(err.to_string().contains("0 < k <= np"));
        assert!(TailBoundQuery::new(10, 0.5, 0.0, TailDirection::Lower).is_err());
        assert!(TailBoundQuery::new(0, 0.5, 1.0, TailDirection::Upper).is_err());
        assert!(TailBoundQuery::new(10, 0.0, 1.0, TailDirection::Upper).is_err());
    }

    #[test]
    fn exact_tail_examples() {
        assert_eq!(
            binom_tail_exact(10, 0.5, 0, TailDirection::Upper).unwrap(),
            1.0
        );
        let lower = binom_tail_exact(5, 0.3, 2, TailDirection::Lower).unwrap();
        assert!((lower - 0.83692).abs() < 1e-12);
        assert!(binom_tail_exact(5, 0.3, 6, TailDirection::Lower).is_err());
        assert!(binom_tail_exact(5, 1.3, 2, TailDirection::Lower).is_err());
    }

    #[test]
    fn exact_tail_matches_direct_summation() {
        for n in 1..=30u64 {
            for &p in &[0.1, 0.3, 0.5, 0.7, 0.9] {
                for k in 0..=n {
                    for (dir, upper) in
                        [(TailDirection::Upper, true), (TailDirection::Lower, false)]
                    {
                        let got = binom_tail_exact(n, p, k, dir).unwrap();
                        let want = naive_tail(n, p, k, upper).min(1.0);
                        assert!((got - want).abs() <= 1e-13, "n={n} p={p} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn chernoff_dominates_exact_tail() {
        for n in 1..=30u64 {
            for &p in &[0.1, 0.3, 0.5, 0.7, 0.9] {
                let mean = n as f64 * p;
                for k in 1..=n {
                    let kf = k as f64;
                    if kf >= mean {
                        let q = TailBoundQuery::new(n, p, kf, TailDirection::Upper).unwrap();
                        let exact = binom_tail_exact(n, p, k, TailDirection::Upper).unwrap();
                        assert!(tail_bound(&q) >= exact, "upper n={n} p={p} k={k}");
                    }
                    if kf <= mean {
                        let q = TailBoundQuery::new(n, p, kf, TailDirection::Lower).unwrap();
                        let exact = binom_tail_exact(n, p, k, TailDirection::Lower).unwrap();
                        assert!(tail_bound(&q) >= exact, "lower n={n} p={p} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn pmf_edge_cases() {
        assert_eq!(binomial_pmf(3, 0.0), vec![1.0, 0.0, 0.0, 0.0]);
        assert_eq!(binomial_pmf(3, 1.0), vec![0.0, 0.0, 0.0, 1.0]);
        let big = binomial_pmf(10_000, 1e-3);
        assert!((big.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        let mean: f64 = big.iter().enumerate().map(|(k, w)| k as f64 * w).sum();
        assert!((mean - 10.0).abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn bound_equals_rate_form(n in 1u64..2000, p in 0.01f64..=1.0, frac in 0.01f64..3.0) {
            let mean = n as f64 * p;
            let k = mean * frac;
            let dir = if k >= mean { TailDirection::Upper } else { TailDirection::Lower };
            let q = TailBoundQuery::new(n, p, k, dir).unwrap();
            let via_h = (mean * rate_h(mean / k).unwrap()).exp();
            let bound = tail_bound(&q);
            prop_assert!(bound <= 1.0);
            if via_h > 0.0 {
                prop_assert!(((bound - via_h) / via_h).abs() <= 1e-12);
            }
        }
    }
}
