//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! with its runtime. Every tolerance is pinned here, in code.

use std::time::Instant;

use volterra_weights::expr::Expression;
use volterra_weights::gram;
use volterra_weights::hardy::{
    coefficient_constant, doubling_constant, doubling_ratio, SamplingConfig, SearchConfig, Verdict,
};
use volterra_weights::multiplier::{
    derivative_norms, expansion_residual, multiplier_verdict, MultiplierProblem,
};
use volterra_weights::operator::{
    default_ladder, divergence_slope, operator_norm, splitting_report, OperatorSpec,
};

fn expr(s: &str) -> Expression {
    Expression::parse(s).unwrap()
}

/// Run one criterion, print its verdict line, and fail the test on error or
/// budget overrun.
fn criterion(name: &str, budget_s: f64, body: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed().as_secs_f64();
    match outcome {
        Ok(()) if elapsed <= budget_s => {
            println!("acceptance {name}: PASS ({elapsed:.2}s)");
        }
        Ok(()) => {
            println!("acceptance {name}: FAIL (runtime {elapsed:.2}s exceeds {budget_s}s)");
            panic!("{name}: runtime budget exceeded");
        }
        Err(msg) => {
            println!("acceptance {name}: FAIL ({msg})");
            panic!("{name}: {msg}");
        }
    }
}

fn check(ok: bool, msg: String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg)
    }
}

#[test]
fn criterion_1_averaging_kernel_constant_and_norm() {
    criterion("1 (classical averaging kernel)", 60.0, || {
        let one = expr("1");
        let a0 = expr("x^(-1)");

        let s0 = coefficient_constant(&one, &one, &a0, 0, &SearchConfig::default())
            .map_err(|e| e.to_string())?;
        check(
            (s0.supremum - 1.0).abs() <= 1e-6,
            format!("s_0 = {} instead of 1 ± 1e-6", s0.supremum),
        )?;

        let spec = OperatorSpec::new(vec![a0]).map_err(|e| e.to_string())?;
        let (_, norm) =
            operator_norm(&spec, &one, &one, &default_ladder(), 1e-3).map_err(|e| e.to_string())?;
        check(norm.converged, "ladder did not converge".into())?;
        check(
            (norm.value - 2.0).abs() <= 0.04,
            format!("norm = {} instead of 2.0 ± 2%", norm.value),
        )
    });
}

#[test]
fn criterion_2_degree_one_constant_and_flat_profile() {
    criterion("2 (degree-one closed form)", 10.0, || {
        let one = expr("1");
        let a1 = expr("x^(-2)");
        let s1 = coefficient_constant(&one, &one, &a1, 1, &SearchConfig::default())
            .map_err(|e| e.to_string())?;
        check(
            (s1.supremum - 1.0 / 3.0).abs() <= 1e-6,
            format!("s_1 = {} instead of 1/3 ± 1e-6", s1.supremum),
        )?;
        let values: Vec<f64> = s1.profile.iter().map(|&(_, f)| f).collect();
        let max = values.iter().cloned().fold(f64::MIN, f64::max);
        let min = values.iter().cloned().fold(f64::MAX, f64::min);
        check(
            max - min <= 1e-6,
            format!("profile spread {} exceeds 1e-6", max - min),
        )
    });
}

#[test]
fn criterion_3_two_sided_norm_bound() {
    criterion("3 (two-sided bound, degree-one operator)", 120.0, || {
        let one = expr("1");
        let spec =
            OperatorSpec::new(vec![expr("x^(-1)"), expr("x^(-2)")]).map_err(|e| e.to_string())?;
        let report = splitting_report(
            &spec,
            &one,
            &one,
            &SearchConfig::default(),
            &default_ladder(),
            1e-3,
        )
        .map_err(|e| e.to_string())?;
        check(
            report.whole_norm.converged,
            "ladder did not converge".into(),
        )?;
        let s_max = report
            .s_values
            .iter()
            .map(|s| s.supremum)
            .fold(f64::MIN, f64::max);
        let norm = report.whole_norm.value;
        check(
            norm >= 0.95 * s_max,
            format!("norm {norm} below 0.95 · max s_k = {}", 0.95 * s_max),
        )?;
        let upper = 2.0 * report.sum_s * 1.05;
        check(
            norm <= upper,
            format!("norm {norm} above 2 · Σs_k · 1.05 = {upper}"),
        )?;
        check(report.sandwich_upper_ok, "sandwich flag not set".into())
    });
}

#[test]
fn criterion_4_divergence_of_constant_kernel() {
    criterion(
        "4 (unbounded operator grows along the ladder)",
        120.0,
        || {
            let one = expr("1");
            let s0 = coefficient_constant(&one, &one, &one, 0, &SearchConfig::default())
                .map_err(|e| e.to_string())?;
            check(
                s0.verdict == Verdict::Infinite,
                "constant coefficient should have an infinite criterion constant".into(),
            )?;
            let spec = OperatorSpec::new(vec![one.clone()]).map_err(|e| e.to_string())?;
            let (ladder, _) = operator_norm(&spec, &one, &one, &default_ladder(), 1e-3)
                .map_err(|e| e.to_string())?;
            let profile: Vec<(f64, f64)> = ladder.iter().map(|e| (e.grid.x_max, e.value)).collect();
            let slope = divergence_slope(&profile);
            check(
                slope >= 0.5,
                format!("trunc norm slope {slope} below 0.5 on {profile:?}"),
            )
        },
    );
}

#[test]
fn criterion_5_moment_system_volume() {
    criterion("5 (moment-system volume ratios)", 30.0, || {
        // unit weight, one extra edge: ρ = 1/2 at every radius
        let profile = gram::nondegeneracy_scan(&expr("1"), 1, (1e-3, 1e3), 40, 1e-10)
            .map_err(|e| e.to_string())?;
        for s in &profile.samples {
            check(
                (s.rho - 0.5).abs() <= 1e-6,
                format!("rho({}) = {} instead of 1/2 ± 1e-6", s.r, s.rho),
            )?;
        }
        // pure powers up to degree 4: r-independent volume, positive infimum
        for (p, degree) in [(0.0, 4u32), (0.25, 3), (-0.5, 4), (0.4, 2)] {
            let u = expr(&format!("x^({p})"));
            let profile = gram::nondegeneracy_scan(&u, degree, (1e-3, 1e3), 40, 1e-10)
                .map_err(|e| e.to_string())?;
            let rhos: Vec<f64> = profile.samples.iter().map(|s| s.rho).collect();
            let max = rhos.iter().cloned().fold(f64::MIN, f64::max);
            let min = rhos.iter().cloned().fold(f64::MAX, f64::min);
            check(
                max - min <= 1e-6,
                format!("x^{p} degree {degree}: spread {} exceeds 1e-6", max - min),
            )?;
            check(
                profile.inf_ratio > 0.0,
                format!("x^{p} degree {degree}: inf_ratio not positive"),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_6_doubling_constants() {
    criterion("6 (doubling constants)", 30.0, || {
        let report = doubling_constant(&expr("1"), 0.0, &SamplingConfig::default())
            .map_err(|e| e.to_string())?;
        check(
            (report.constant_estimate - 2.0).abs() <= 1e-6,
            format!(
                "flat weight estimate {} instead of 2 ± 1e-6",
                report.constant_estimate
            ),
        )?;
        check(report.member, "flat weight must be doubling".into())?;

        let w = expr("exp(x)");
        let report =
            doubling_constant(&w, 0.0, &SamplingConfig::default()).map_err(|e| e.to_string())?;
        check(!report.member, "exp(x) must not be doubling".into())?;
        // the growth that disqualifies it: ratio on a length-2h interval is
        // 2·cosh(h/2) at any admissible center
        for &h in &[1.0f64, 5.0, 20.0] {
            let got = doubling_ratio(&w, 25.0, 2.0 * h).map_err(|e| e.to_string())?;
            let expected = 2.0 * (h / 2.0).cosh();
            check(
                (got - expected).abs() <= 1e-6 * expected,
                format!("ratio at h = {h}: {got} vs 2cosh(h/2) = {expected}"),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_7_expansion_identity_corpus() {
    criterion("7 (derivative expansion identity)", 30.0, || {
        let phis = ["1", "x^2", "x^3 + 2*x", "exp(-x)", "x^2*exp(-x)"];
        let shapes: [(u32, u32, &str); 5] = [
            (1, 1, "1"),
            (2, 2, "2 + x"),
            (2, 1, "exp(-x)"),
            (3, 3, "1"),
            (4, 3, "2 + x"),
        ];
        let xs = [0.5, 1.0, 2.0];
        let mut cases = 0;
        for phi_src in phis {
            for &(l, m, h) in &shapes {
                let phi = expr(phi_src);
                let g = expr(&format!("x^{l}*({h})"));
                let residual =
                    expansion_residual(&phi, &g, l, m, &xs).map_err(|e| e.to_string())?;
                check(
                    residual <= 1e-8,
                    format!("phi = {phi_src}, l = {l}, m = {m}, h = {h}: residual {residual}"),
                )?;
                cases += 1;
            }
        }
        check(cases >= 20, format!("only {cases} corpus cases"))
    });
}

#[test]
fn criterion_8_multiplier_verdicts() {
    criterion("8 (multiplier verdicts)", 30.0, || {
        let search = SearchConfig::default();
        let sampling = SamplingConfig::default();
        let problem = |phi: &str| {
            MultiplierProblem::new(expr(phi), expr("1"), expr("1"), 1, 1).map_err(|e| e.to_string())
        };

        let accepted = multiplier_verdict(&problem("1")?, &search, &sampling, 1e-9)
            .map_err(|e| e.to_string())?;
        check(accepted.verdict, "constant must be a multiplier".into())?;

        let rejected = multiplier_verdict(&problem("x")?, &search, &sampling, 1e-9)
            .map_err(|e| e.to_string())?;
        check(
            !rejected.verdict,
            "identity must not be a multiplier".into(),
        )?;

        let damped = derivative_norms(&problem("exp(-x)")?, 1e-9).map_err(|e| e.to_string())?;
        let expected = std::f64::consts::FRAC_1_SQRT_2;
        check(
            (damped[0].value - expected).abs() <= 1e-6,
            format!("‖(e^-x)'‖ = {} instead of 1/√2 ± 1e-6", damped[0].value),
        )?;
        let damped_verdict = multiplier_verdict(&problem("exp(-x)")?, &search, &sampling, 1e-9)
            .map_err(|e| e.to_string())?;
        check(
            damped_verdict.verdict,
            "exp(-x) must be a multiplier".into(),
        )
    });
}

#[test]
fn criterion_9_property_suites() {
    criterion("9 (cross-module property suites)", 120.0, || {
        properties::finite_difference_agreement()?;
        properties::quadrature_additivity_linearity_scaling()?;
        properties::scale_invariances()?;
        properties::operator_expansion_consistency()?;
        Ok(())
    });
}

mod properties {
    use super::*;
    use volterra_weights::hardy::hardy_constant;
    use volterra_weights::multiplier::induced_operator;
    use volterra_weights::operator::apply;
    use volterra_weights::quadrature::integrate_finite;

    /// First derivatives agree with central finite differences at 200
    /// log-spaced points in [1e-3, 1e3] to 1e-6 relative (step x·1e-6).
    pub fn finite_difference_agreement() -> Result<(), String> {
        let corpus = [
            "x^3 + x",
            "exp(-x)",
            "log(x)",
            "x^(-1)",
            "x^(0.5)",
            "x/(x + 1)",
        ];
        for src in corpus {
            let f = expr(src);
            // derivatives up to order 4 must exist for the corpus
            f.differentiate(4).map_err(|err| err.to_string())?;
            let d = f.differentiate(1).map_err(|err| err.to_string())?;
            for i in 0..200 {
                let x = 1e-3 * 10f64.powf(6.0 * i as f64 / 199.0);
                let h = x * 1e-6;
                let fd = (f.eval(x + h).map_err(|e| e.to_string())?
                    - f.eval(x - h).map_err(|e| e.to_string())?)
                    / (2.0 * h);
                let exact = d.eval(x).map_err(|e| e.to_string())?;
                let tol = 1e-6 * exact.abs().max(1e-12);
                if (fd - exact).abs() > tol {
                    return Err(format!("{src} at x = {x}: fd {fd} vs exact {exact}"));
                }
            }
        }
        Ok(())
    }

    pub fn quadrature_additivity_linearity_scaling() -> Result<(), String> {
        // additivity over interior split points
        let f = expr("x^(-0.5) + x^2");
        for &c in &[0.01, 0.7, 2.0] {
            let whole = integrate_finite(&f, 0.0, 3.0, 1e-10).map_err(|e| e.to_string())?;
            let left = integrate_finite(&f, 0.0, c, 1e-10).map_err(|e| e.to_string())?;
            let right = integrate_finite(&f, c, 3.0, 1e-10).map_err(|e| e.to_string())?;
            let budget = 2.0
                * (whole.error_estimate + left.error_estimate + right.error_estimate).max(5e-13);
            if (left.value + right.value - whole.value).abs() > budget {
                return Err(format!("additivity failed at split {c}"));
            }
        }
        // linearity
        let (alpha, beta) = (2.5, -0.75);
        let g = expr("exp(-x)");
        let combo = expr("2.5*(x^(-0.5) + x^2) - 0.75*exp(-x)");
        let int_f = integrate_finite(&f, 0.0, 2.0, 1e-10).map_err(|e| e.to_string())?;
        let int_g = integrate_finite(&g, 0.0, 2.0, 1e-10).map_err(|e| e.to_string())?;
        let int_c = integrate_finite(&combo, 0.0, 2.0, 1e-10).map_err(|e| e.to_string())?;
        let lhs = int_c.value;
        let rhs = alpha * int_f.value + beta * int_g.value;
        let budget = int_c.error_estimate
            + alpha.abs() * int_f.error_estimate
            + beta.abs() * int_g.error_estimate;
        if (lhs - rhs).abs() > budget.max(1e-12) {
            return Err(format!("linearity failed: {lhs} vs {rhs}"));
        }
        // scaling law for powers
        for &p in &[-0.5f64, 0.0, 1.0, 2.0] {
            for &r in &[0.01f64, 1.0, 100.0] {
                let f = expr(&format!("x^({p})"));
                let expected = r.powf(p + 1.0) / (p + 1.0);
                let tol = 1e-12 * expected.max(1.0);
                let got = integrate_finite(&f, 0.0, r, tol).map_err(|e| e.to_string())?;
                if (got.value - expected).abs() > tol.max(1e-9 * expected) {
                    return Err(format!("scaling law failed for p = {p}, r = {r}"));
                }
            }
        }
        Ok(())
    }

    pub fn scale_invariances() -> Result<(), String> {
        // normalized volume and angle are invariant under u -> λu
        let u = expr("x^(0.25)");
        let scaled = expr("6*x^(0.25)");
        let a = gram::moment_matrix(&u, 3.0, 2, 1e-11).map_err(|e| e.to_string())?;
        let b = gram::moment_matrix(&scaled, 3.0, 2, 1e-11).map_err(|e| e.to_string())?;
        let (ra, rb) = (
            gram::volume_ratio(&a).map_err(|e| e.to_string())?,
            gram::volume_ratio(&b).map_err(|e| e.to_string())?,
        );
        if (ra - rb).abs() > 1e-9 * ra {
            return Err(format!("volume ratio not scale invariant: {ra} vs {rb}"));
        }
        let (sa, sb) = (
            gram::subspace_angle(&a).map_err(|e| e.to_string())?,
            gram::subspace_angle(&b).map_err(|e| e.to_string())?,
        );
        if (sa - sb).abs() > 1e-9 * sa {
            return Err(format!("angle not scale invariant: {sa} vs {sb}"));
        }

        // the Hardy constant scales linearly in v1, and the verdict is
        // invariant under scaling
        let search = SearchConfig::default();
        let base = hardy_constant(&expr("x^(-1)"), &expr("1"), &search, 1e-9)
            .map_err(|e| e.to_string())?;
        let scaled = hardy_constant(&expr("3*x^(-1)"), &expr("1"), &search, 1e-9)
            .map_err(|e| e.to_string())?;
        if (scaled.supremum / base.supremum - 3.0).abs() > 1e-9 * 3.0 {
            return Err("hardy constant does not scale linearly".into());
        }
        if base.verdict != scaled.verdict {
            return Err("verdict changed under scaling".into());
        }
        Ok(())
    }

    /// `apply(induced_operator(φ, l, m), g^{(l)}, x) + [m=l]·φ·g^{(l)}(x)`
    /// equals `(φg)^{(m)}(x)` within 1e-7 at 20 sampled points.
    pub fn operator_expansion_consistency() -> Result<(), String> {
        let cases = [("x^2", "x^2*(2 + x)", 2u32, 2u32), ("exp(-x)", "x^3", 3, 2)];
        for (phi_src, g_src, l, m) in cases {
            let phi = expr(phi_src);
            let g = expr(g_src);
            let op = induced_operator(&phi, l, m).map_err(|e| e.to_string())?;
            let g_l = g.differentiate(l as usize).map_err(|e| e.to_string())?;
            let target = Expression::mul(phi.clone(), g.clone())
                .differentiate(m as usize)
                .map_err(|e| e.to_string())?;
            for i in 0..20 {
                let x = 0.25 + 2.75 * i as f64 / 19.0;
                let mut got = apply(&op, &g_l, x, 1e-11).map_err(|e| e.to_string())?;
                if m == l {
                    got += phi.eval(x).map_err(|e| e.to_string())?
                        * g_l.eval(x).map_err(|e| e.to_string())?;
                }
                let expected = target.eval(x).map_err(|e| e.to_string())?;
                if (got - expected).abs() > 1e-7 * expected.abs().max(1.0) {
                    return Err(format!(
                        "{phi_src} × {g_src} at x = {x}: {got} vs {expected}"
                    ));
                }
            }
        }
        Ok(())
    }
}
