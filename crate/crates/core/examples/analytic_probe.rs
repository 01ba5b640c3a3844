//! Tabulates the closed-form quantities: edge probability and its Taylor
//! bounds, the rate function, Chernoff bounds against exact binomial tails,
//! envelope roots and the threshold curve.

use rig_lab::analytics::{
    binom_tail_exact, q_approx, q_exact, rate_h, solve_a, tail_bound, threshold_p, zeta_bound,
    Branch, TailBoundQuery, TailDirection,
};

fn main() -> rig_lab::Result<()> {
    println!("edge probability, m = 50");
    println!(
        "{:>8} {:>14} {:>14} {:>14}",
        "p", "lower", "q_exact", "q_approx"
    );
    for p in [0.001, 0.01, 0.02, 0.05, 0.1] {
        let upper = q_approx(50, p);
        let lower = upper - zeta_bound(50, p);
        println!(
            "{p:>8} {lower:>14.6e} {:>14.6e} {upper:>14.6e}",
            q_exact(50, p)?
        );
    }

    println!("\nH(t) = (ln t + 1 - t) / t");
    for t in [0.1, 0.5, 1.0, 2.0, 10.0, f64::INFINITY] {
        println!("  H({t}) = {:.6}", rate_h(t)?);
    }

    println!("\nupper tail of Bi(100, 0.3)");
    println!("{:>4} {:>14} {:>14}", "k", "exact", "chernoff");
    for k in [30u64, 35, 40, 50, 60] {
        let query = TailBoundQuery::new(100, 0.3, k as f64, TailDirection::Upper)?;
        let exact = binom_tail_exact(100, 0.3, k, TailDirection::Upper)?;
        println!("{k:>4} {exact:>14.6e} {:>14.6e}", tail_bound(&query));
    }

    println!("\nenvelope roots of a ln a - a + 1 = c");
    for c in [0.1, 0.5, 0.9] {
        let lo = solve_a(c, Branch::Lower)?;
        let hi = solve_a(c, Branch::Upper)?;
        println!("  c = {c}: [{:.6}, {:.6}]", lo.a, hi.a);
    }

    println!("\nthreshold p(alpha) at m = n = 1000");
    for alpha in [1.0, 2.0, 3.0] {
        println!(
            "  alpha = {alpha}: p = {:.6e}",
            threshold_p(alpha, 1000, 1000)
        );
    }
    Ok(())
}
