//! Property-based suites over randomized inputs: quadrature laws for power
//! integrands, profile flatness for balanced power pairs, and positivity of
//! doubling ratios.

use proptest::prelude::*;

use volterra_weights::expr::Expression;
use volterra_weights::hardy::{doubling_ratio, hardy_constant, SearchConfig, Verdict};
use volterra_weights::quadrature::{integrate_finite, weighted_l2_norm, Status};

fn expr(s: &str) -> Expression {
    Expression::parse(s).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// ∫_0^r x^p dx = r^{p+1}/(p+1) for p > -1 across scales.
    #[test]
    fn power_integrals_match_closed_form(p in -0.8f64..3.0, r in 0.05f64..50.0) {
        let f = expr(&format!("x^({p})"));
        let expected = r.powf(p + 1.0) / (p + 1.0);
        let tol = 1e-10 * expected.max(1.0);
        let got = integrate_finite(&f, 0.0, r, tol).unwrap();
        prop_assert_eq!(got.status, Status::Converged);
        prop_assert!((got.value - expected).abs() <= tol.max(1e-8 * expected));
    }

    /// Splitting the interval never changes the integral beyond the summed
    /// error estimates.
    #[test]
    fn integrals_are_additive(p in -0.5f64..2.0, split in 0.05f64..0.95) {
        let f = expr(&format!("x^({p}) + exp(-x)"));
        let c = 3.0 * split;
        let whole = integrate_finite(&f, 0.0, 3.0, 1e-10).unwrap();
        let left = integrate_finite(&f, 0.0, c, 1e-10).unwrap();
        let right = integrate_finite(&f, c, 3.0, 1e-10).unwrap();
        let budget = 2.0
            * (whole.error_estimate + left.error_estimate + right.error_estimate).max(1e-12);
        prop_assert!((left.value + right.value - whole.value).abs() <= budget);
    }

    /// The squared norm equals the direct integral of the square.
    #[test]
    fn norm_squares_to_the_integral(p in 0.0f64..1.5, r in 0.1f64..20.0) {
        let g = expr(&format!("x^({p})*exp(-x)"));
        let tol = 1e-10;
        let norm = weighted_l2_norm(&g, 0.0, r, tol).unwrap();
        let sq = Expression::mul(g.clone(), g);
        let direct = integrate_finite(&sq, 0.0, r, tol).unwrap();
        prop_assert!(
            (norm.value * norm.value - direct.value).abs() <= 2.0 * tol * (norm.value + 1.0)
        );
    }

    /// Balanced power pairs have a constant profile: the supremum matches the
    /// closed form (2β)^{-1/2}(2γ)^{-1/2} for v1 = x^{-β-1/2}, u1 = x^{1/2-γ}
    /// written through the tail/head integrals.
    #[test]
    fn balanced_power_pairs_have_flat_profiles(beta in 0.15f64..1.5) {
        // tail exponent: ∫_r^∞ x^{-2β-1} = r^{-2β}/(2β); head must balance:
        // u1 = x^{1/2-β} gives ∫_0^r x^{2β-1} = r^{2β}/(2β)
        let v1 = expr(&format!("x^({})", -beta - 0.5));
        let u1 = expr(&format!("x^({})", 0.5 - beta));
        let expected = 1.0 / (2.0 * beta);
        let result = hardy_constant(&v1, &u1, &SearchConfig::default(), 1e-9).unwrap();
        prop_assert_eq!(result.verdict, Verdict::Finite);
        prop_assert!(
            (result.supremum - expected).abs() <= 1e-6 * expected.max(1.0),
            "supremum {} vs {}", result.supremum, expected
        );
        let values: Vec<f64> = result.profile.iter().map(|&(_, f)| f).collect();
        let max = values.iter().cloned().fold(f64::MIN, f64::max);
        let min = values.iter().cloned().fold(f64::MAX, f64::min);
        prop_assert!(max - min <= 1e-6 * max.max(1.0));
    }

    /// Doubling ratios are at least 1 for every positive weight: the half
    /// interval is contained in the whole one.
    #[test]
    fn doubling_ratios_dominate_one(
        alpha in -0.9f64..3.0,
        center in 0.1f64..100.0,
        frac in 0.05f64..1.9
    ) {
        let w = expr(&format!("x^({alpha})"));
        let length = center * frac;
        let ratio = doubling_ratio(&w, center, length).unwrap();
        prop_assert!(ratio >= 1.0, "ratio {} below 1", ratio);
    }
}
