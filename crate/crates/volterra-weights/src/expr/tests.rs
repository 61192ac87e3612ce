use super::Expression;
use crate::error::Error;

fn parse(s: &str) -> Expression {
    Expression::parse(s).unwrap()
}

#[test]
fn parses_and_evaluates_inverse_power() {
    let e = parse("x^(-1)");
    assert_eq!(e.eval(2.0).unwrap(), 0.5);
}

#[test]
fn exp_of_negated_variable() {
    let e = parse("exp(-x)");
    assert!((e.eval(1.0).unwrap() - 0.36787944117144233).abs() < 1e-15);
    assert!(matches!(e.eval(0.0), Err(Error::Eval { .. })));
}

#[test]
fn rejects_identically_zero_denominator() {
    let err = Expression::parse("x/(x-x)").unwrap_err();
    assert!(matches!(err, Error::Domain(_)), "got {err:?}");
}

#[test]
fn rejects_denominator_vanishing_inside_domain() {
    // (x - 2)^(-2) has a pole at x = 2
    assert!(Expression::parse("(x-2)^(-2)")
        .unwrap_err()
        .to_string()
        .contains("positive"));
    assert!(Expression::parse("1/(x-2)").is_err());
}

#[test]
fn rejects_bad_log_argument() {
    assert!(Expression::parse("log(x-10)").is_err());
    assert!(Expression::parse("log(-x)").is_err());
}

#[test]
fn syntax_errors_carry_positions() {
    match Expression::parse("x^^2").unwrap_err() {
        Error::Syntax { position, .. } => assert_eq!(position, 3),
        other => panic!("expected syntax error, got {other:?}"),
    }
    assert!(Expression::parse("2*y").is_err());
    assert!(Expression::parse("sin(x)").is_err());
    assert!(Expression::parse("").is_err());
    assert!(
        Expression::parse("x^x").is_err(),
        "exponent must be constant"
    );
}

#[test]
fn evaluates_basic_forms() {
    assert_eq!(parse("x^3").eval(2.0).unwrap(), 8.0);
    assert_eq!(parse("log(x)").eval(1.0).unwrap(), 0.0);
    // 2 * e^{-4}, checked against direct computation
    let v = parse("x^(0.5)*exp(-x)").eval(4.0).unwrap();
    assert!((v - 0.03663127777746836).abs() < 1e-16);
    // scientific notation literals
    assert_eq!(parse("1e-2*x").eval(3.0).unwrap(), 0.03);
}

#[test]
fn differentiates_polynomials() {
    let d2 = parse("x^3").differentiate(2).unwrap();
    assert!((d2.eval(1.0).unwrap() - 6.0).abs() < 1e-15);
    assert!((d2.eval(2.5).unwrap() - 15.0).abs() < 1e-12);
}

#[test]
fn differentiates_exponentials() {
    let d3 = parse("exp(-x)").differentiate(3).unwrap();
    let expected = -(-2.0f64).exp();
    assert!((d3.eval(2.0).unwrap() - expected).abs() < 1e-15);
}

#[test]
fn derivative_matches_finite_difference() {
    // (x^2 log x)' = 2x log x + x; cross-check with a central difference
    let e = parse("x^2*log(x)");
    let d = e.differentiate(1).unwrap();
    assert!((d.eval(1.0).unwrap() - 1.0).abs() < 1e-14);
    for &x in &[0.3, 1.0, 2.7, 11.0] {
        let h = 1e-5;
        let fd = (e.eval(x + h).unwrap() - e.eval(x - h).unwrap()) / (2.0 * h);
        let exact = d.eval(x).unwrap();
        assert!(
            (fd - exact).abs() <= 1e-8 * exact.abs().max(1.0),
            "x = {x}: fd {fd} vs {exact}"
        );
    }
}

#[test]
fn order_zero_is_identity() {
    let e = parse("exp(-x)*x^2");
    let same = e.differentiate(0).unwrap();
    for &x in &[0.1, 1.0, 42.0] {
        assert_eq!(e.eval(x).unwrap(), same.eval(x).unwrap());
    }
}

#[test]
fn nth_derivative_equals_repeated_first() {
    for src in ["x^3*exp(-x)", "log(x)/x", "x^(0.5) + x^2"] {
        let e = parse(src);
        let direct = e.differentiate(3).unwrap();
        let repeated = e
            .differentiate(1)
            .unwrap()
            .differentiate(1)
            .unwrap()
            .differentiate(1)
            .unwrap();
        for i in 0..20 {
            let x = 1e-2 * 10f64.powf(3.0 * i as f64 / 19.0);
            let a = direct.eval(x).unwrap();
            let b = repeated.eval(x).unwrap();
            assert!(
                (a - b).abs() <= 1e-10 * a.abs().max(1e-30),
                "{src} at {x}: {a} vs {b}"
            );
        }
    }
}

#[test]
fn multiply_by_power_examples() {
    let squared = parse("1").multiply_by_power(2);
    assert_eq!(squared.eval(3.0).unwrap(), 9.0);

    let e = parse("exp(-x)");
    let same = e.multiply_by_power(0);
    assert_eq!(e.eval(1.5).unwrap(), same.eval(1.5).unwrap());

    let one = parse("x^(-1)").multiply_by_power(1);
    for &x in &[1e-6, 0.5, 1.0, 1e6] {
        assert!((one.eval(x).unwrap() - 1.0).abs() < 1e-15);
    }
}

#[test]
fn multiply_by_power_is_exact() {
    let e = parse("exp(-x) + x^2");
    let m = e.multiply_by_power(3);
    for i in 0..30 {
        let x = 1e-3 * 10f64.powf(6.0 * i as f64 / 29.0);
        let expected = e.eval(x).unwrap() * x.powi(3);
        let got = m.eval(x).unwrap();
        let ulp_ish = 2.0 * f64::EPSILON * expected.abs();
        assert!((got - expected).abs() <= ulp_ish, "x = {x}");
    }
}

#[test]
fn node_budget_stops_derivative_blowup() {
    // derivatives of exp(exp(x)) grow like Bell numbers
    let e = parse("exp(exp(x))");
    let err = e.differentiate(14).unwrap_err();
    assert!(matches!(err, Error::SizeCap { .. }), "got {err:?}");
}

#[test]
fn display_round_trips_through_parser() {
    for src in [
        "x^(-1)",
        "exp(-x)*x^(0.5)",
        "(x + 1)/(x + 2)",
        "2*x^3 - x/4 + log(x + 1)",
        "-x",
    ] {
        let e = parse(src);
        let printed = e.to_string();
        let reparsed = Expression::parse(&printed)
            .unwrap_or_else(|err| panic!("printed form '{printed}' failed to parse: {err}"));
        for &x in &[0.17, 1.0, 9.3] {
            let a = e.eval(x).unwrap();
            let b = reparsed.eval(x).unwrap();
            assert!((a - b).abs() <= 1e-15 * a.abs().max(1.0));
        }
    }
}

#[test]
fn exp_weight_is_accepted() {
    // finite on (0, inf) mathematically; IEEE overflow at huge x is an
    // evaluation error, not a parse error
    let e = parse("exp(x)");
    assert!(e.eval(1e8).is_err());
    assert!(e.eval(10.0).is_ok());
}
