use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Absolute residual every returned root satisfies.
pub const ROOT_TOLERANCE: f64 = 1e-12;

const LOWER_BRACKET_FLOOR: f64 = 1e-15;
const MAX_ITERATIONS: usize = 400;

/// Which root of `a log a - a + 1 = c` to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// The root in `[1, ∞)`.
    Upper,
    /// The root in `(0, 1]`; exists only for `c < 1`.
    Lower,
}

impl std::str::FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "upper" => Ok(Branch::Upper),
            "lower" => Ok(Branch::Lower),
            _ => Err(Error::argument(format!(
                "branch must be `upper` or `lower`, got {s:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootResult {
    pub c: f64,
    pub branch: Branch,
    pub a: f64,
    /// `|a log a - a + 1 - c|`
    pub residual: f64,
}

/// `a log a - a + 1`, the degree-envelope function. Zero at `a = 1`,
/// decreasing on `(0, 1)`, increasing on `(1, ∞)`, tending to 1 as `a → 0⁺`.
pub fn envelope_fn(a: f64) -> f64 {
    if (0.5..=2.0).contains(&a) {
        let h = a - 1.0;
        a * h.ln_1p() - h
    } else {
        a * a.ln() - a + 1.0
    }
}

/// Solves `a log a - a + 1 = c` on the requested branch.
///
/// Safeguarded Newton: the iterate stays inside a sign-change bracket
/// (`[1, 1 + c + e^(1+c)]` upper, `[1e-15, 1]` lower) and falls back to
/// bisection whenever the Newton step leaves it or the derivative `log a`
/// vanishes. `c = 0` gives `a = 1` on both branches.
pub fn solve_a(c: f64, branch: Branch) -> Result<RootResult> {
    if c.is_nan() || c < 0.0 || c.is_infinite() {
        return Err(Error::argument(format!(
            "c must be finite and >= 0, got {c}"
        )));
    }
    if branch == Branch::Lower && c >= 1.0 {
        return Err(Error::domain(format!(
            "lower-branch root exists only for c < 1, got c = {c}"
        )));
    }
    if c == 0.0 {
        return Ok(RootResult {
            c,
            branch,
            a: 1.0,
            residual: 0.0,
        });
    }

    let f = |a: f64| envelope_fn(a) - c;
    // `hi_side` is the end of the bracket where f > 0.
    let (mut lo, mut hi) = match branch {
        Branch::Upper => (1.0, 1.0 + c + (1.0 + c).exp()),
        Branch::Lower => (LOWER_BRACKET_FLOOR, 1.0),
    };
    let positive_at_lo = branch == Branch::Lower;
    let mut x = if positive_at_lo { lo } else { hi };
    let mut best = (f64::INFINITY, x);

    for _ in 0..MAX_ITERATIONS {
        let fx = f(x);
        if fx.abs() < best.0 {
            best = (fx.abs(), x);
        }
        if fx == 0.0 || fx.abs() <= ROOT_TOLERANCE * 1e-2 {
            break;
        }
        if (fx > 0.0) == positive_at_lo {
            lo = x;
        } else {
            hi = x;
        }
        if hi - lo <= f64::EPSILON * hi {
            break;
        }
        let slope = x.ln();
        let newton = x - fx / slope;
        x = if slope != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }

    let (residual, a) = best;
    if residual > ROOT_TOLERANCE {
        return Err(Error::NoConvergence(format!(
            "a log a - a + 1 = {c} ({branch:?} branch): residual {residual:e} at a = {a}"
        )));
    }
    Ok(RootResult {
        c,
        branch,
        a,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    #[test]
    fn closed_form_roots() {
        for branch in [Branch::Upper, Branch::Lower] {
            assert_eq!(solve_a(0.0, branch).unwrap().a, 1.0);
        }
        let up = solve_a(1.0, Branch::Upper).unwrap();
        assert!((up.a - E).abs() < 1e-12, "{up:?}");
        let low = solve_a(1.0 - 2.0 / E, Branch::Lower).unwrap();
        assert!((low.a - 1.0 / E).abs() < 1e-12, "{low:?}");
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(solve_a(1.0, Branch::Lower), Err(Error::Domain(_))));
        assert!(matches!(solve_a(2.5, Branch::Lower), Err(Error::Domain(_))));
        assert!(solve_a(-0.1, Branch::Upper).is_err());
        assert!(solve_a(f64::NAN, Branch::Upper).is_err());
    }

    #[test]
    fn residuals_and_monotonicity() {
        let upper: Vec<RootResult> = (0..=5000)
            .map(|i| solve_a(i as f64 * 0.01, Branch::Upper).unwrap())
            .collect();
        assert!(upper
            .iter()
            .all(|r| r.residual <= ROOT_TOLERANCE && r.a >= 1.0));
        assert!(upper.windows(2).all(|w| w[0].a <= w[1].a));

        let lower: Vec<RootResult> = (0..=999)
            .map(|i| solve_a(i as f64 * 0.001, Branch::Lower).unwrap())
            .collect();
        assert!(lower
            .iter()
            .all(|r| r.residual <= ROOT_TOLERANCE && r.a > 0.0 && r.a <= 1.0));
        assert!(lower.windows(2).all(|w| w[0].a >= w[1].a));
    }

    #[test]
    fn tiny_and_near_one_rates() {
        for c in [1e-300, 1e-20, 1e-9, 0.999_999] {
            let r = solve_a(c, Branch::Lower).unwrap();
            assert!(r.residual <= ROOT_TOLERANCE, "{r:?}");
            let r = solve_a(c, Branch::Upper).unwrap();
            assert!(r.residual <= ROOT_TOLERANCE, "{r:?}");
        }
    }
}
