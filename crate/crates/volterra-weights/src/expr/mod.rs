//! A small expression language for scalar functions on (0, ∞).
//!
//! Expressions are closed-form combinations of constants, the variable `x`,
//! the arithmetic operators, real-exponent powers, `exp` and `log`. They are
//! immutable, cheaply cloneable (shared subtrees) and support exact symbolic
//! differentiation, which is what the analysis layers need: every weight,
//! kernel coefficient and test function in this crate is an [`Expression`].
//!
//! ```
//! use volterra_weights::expr::Expression;
//!
//! let e: Expression = "x^(0.5)*exp(-x)".parse().unwrap();
//! let d = e.differentiate(1).unwrap();
//! assert!((e.eval(4.0).unwrap() - 2.0 * (-4.0f64).exp()).abs() < 1e-15);
//! assert!(d.eval(4.0).is_ok());
//! ```

mod parser;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Node budget after each differentiation step; repeated symbolic
/// differentiation can blow up combinatorially and is cut off here.
pub const MAX_NODES: usize = 10_000;

#[derive(Debug)]
enum Node {
    Const(f64),
    Var,
    Add(Expression, Expression),
    Sub(Expression, Expression),
    Mul(Expression, Expression),
    Div(Expression, Expression),
    /// Power with a real constant exponent (the only power the grammar admits).
    Pow(Expression, f64),
    Exp(Expression),
    Log(Expression),
    Neg(Expression),
}

/// A scalar function of `x` on (0, ∞), represented as an immutable syntax tree.
#[derive(Clone, Debug)]
pub struct Expression(Arc<Node>);

fn near_integer(p: f64) -> Option<i64> {
    let r = p.round();
    if (p - r).abs() < 1e-12 && r.abs() < 1e15 {
        Some(r as i64)
    } else {
        None
    }
}

// The guard form `if x == 0.0` is kept over float-literal patterns, and the
// constructor names `add`/`mul`/… intentionally mirror the std traits (which
// are implemented below and delegate here).
#[allow(clippy::redundant_guards, clippy::should_implement_trait)]
impl Expression {
    pub fn constant(c: f64) -> Self {
        Expression(Arc::new(Node::Const(c)))
    }

    pub fn var() -> Self {
        Expression(Arc::new(Node::Var))
    }

    pub fn add(a: Expression, b: Expression) -> Self {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => Self::constant(x + y),
            (Some(x), _) if x == 0.0 => b,
            (_, Some(y)) if y == 0.0 => a,
            _ => Expression(Arc::new(Node::Add(a, b))),
        }
    }

    pub fn sub(a: Expression, b: Expression) -> Self {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => Self::constant(x - y),
            (_, Some(y)) if y == 0.0 => a,
            (Some(x), _) if x == 0.0 => Self::neg(b),
            _ => Expression(Arc::new(Node::Sub(a, b))),
        }
    }

    pub fn mul(a: Expression, b: Expression) -> Self {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) => Self::constant(x * y),
            (Some(0.0), _) | (_, Some(0.0)) => Self::constant(0.0),
            (Some(x), _) if x == 1.0 => b,
            (_, Some(y)) if y == 1.0 => a,
            _ => Expression(Arc::new(Node::Mul(a, b))),
        }
    }

    pub fn div(a: Expression, b: Expression) -> Self {
        match (a.as_const(), b.as_const()) {
            (Some(x), Some(y)) if y != 0.0 => Self::constant(x / y),
            (Some(0.0), _) => Self::constant(0.0),
            (_, Some(y)) if y == 1.0 => a,
            _ => Expression(Arc::new(Node::Div(a, b))),
        }
    }

    pub fn pow(base: Expression, exponent: f64) -> Self {
        if exponent == 0.0 {
            return Self::constant(1.0);
        }
        if exponent == 1.0 {
            return base;
        }
        if let Some(c) = base.as_const() {
            return Self::constant(c.powf(exponent));
        }
        Expression(Arc::new(Node::Pow(base, exponent)))
    }

    pub fn exp(a: Expression) -> Self {
        match a.as_const() {
            Some(c) => Self::constant(c.exp()),
            None => Expression(Arc::new(Node::Exp(a))),
        }
    }

    pub fn log(a: Expression) -> Self {
        match a.as_const() {
            Some(c) => Self::constant(c.ln()),
            None => Expression(Arc::new(Node::Log(a))),
        }
    }

    pub fn neg(a: Expression) -> Self {
        match (a.as_const(), &*a.0) {
            (Some(c), _) => Self::constant(-c),
            (_, Node::Neg(inner)) => inner.clone(),
            _ => Expression(Arc::new(Node::Neg(a))),
        }
    }

    fn as_const(&self) -> Option<f64> {
        match &*self.0 {
            Node::Const(c) => Some(*c),
            _ => None,
        }
    }

    /// True when the tree contains no occurrence of the variable.
    pub fn is_constant(&self) -> bool {
        match &*self.0 {
            Node::Const(_) => true,
            Node::Var => false,
            Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
                a.is_constant() && b.is_constant()
            }
            Node::Pow(a, _) => a.is_constant(),
            Node::Exp(a) | Node::Log(a) | Node::Neg(a) => a.is_constant(),
        }
    }

    pub fn node_count(&self) -> usize {
        match &*self.0 {
            Node::Const(_) | Node::Var => 1,
            Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
                1 + a.node_count() + b.node_count()
            }
            Node::Pow(a, _) => 1 + a.node_count(),
            Node::Exp(a) | Node::Log(a) | Node::Neg(a) => 1 + a.node_count(),
        }
    }

    /// Raw IEEE evaluation: overflow and domain violations propagate as
    /// `inf`/`NaN` instead of errors. This is what the quadrature engine uses,
    /// which has its own policy for non-finite integrand values.
    pub fn eval_raw(&self, x: f64) -> f64 {
        match &*self.0 {
            Node::Const(c) => *c,
            Node::Var => x,
            Node::Add(a, b) => a.eval_raw(x) + b.eval_raw(x),
            Node::Sub(a, b) => a.eval_raw(x) - b.eval_raw(x),
            Node::Mul(a, b) => a.eval_raw(x) * b.eval_raw(x),
            Node::Div(a, b) => a.eval_raw(x) / b.eval_raw(x),
            Node::Pow(a, p) => a.eval_raw(x).powf(*p),
            Node::Exp(a) => a.eval_raw(x).exp(),
            Node::Log(a) => a.eval_raw(x).ln(),
            Node::Neg(a) => -a.eval_raw(x),
        }
    }

    /// Checked evaluation at a point of (0, ∞).
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) {
            return Err(Error::Eval {
                x,
                reason: "argument must lie in (0, inf)",
            });
        }
        let v = self.eval_raw(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Eval {
                x,
                reason: "result is not finite (overflow or invalid operation)",
            })
        }
    }

    fn derivative(&self) -> Expression {
        match &*self.0 {
            Node::Const(_) => Self::constant(0.0),
            Node::Var => Self::constant(1.0),
            Node::Add(a, b) => Self::add(a.derivative(), b.derivative()),
            Node::Sub(a, b) => Self::sub(a.derivative(), b.derivative()),
            Node::Mul(a, b) => Self::add(
                Self::mul(a.derivative(), b.clone()),
                Self::mul(a.clone(), b.derivative()),
            ),
            Node::Div(a, b) => Self::div(
                Self::sub(
                    Self::mul(a.derivative(), b.clone()),
                    Self::mul(a.clone(), b.derivative()),
                ),
                Self::pow(b.clone(), 2.0),
            ),
            Node::Pow(a, p) => Self::mul(
                Self::mul(Self::constant(*p), Self::pow(a.clone(), p - 1.0)),
                a.derivative(),
            ),
            Node::Exp(a) => Self::mul(Self::exp(a.clone()), a.derivative()),
            Node::Log(a) => Self::div(a.derivative(), a.clone()),
            Node::Neg(a) => Self::neg(a.derivative()),
        }
    }

    /// Exact symbolic derivative of the given order; order 0 returns the
    /// expression unchanged. Fails with [`Error::SizeCap`] when an
    /// intermediate derivative exceeds [`MAX_NODES`] nodes.
    pub fn differentiate(&self, order: usize) -> Result<Expression> {
        let mut e = self.clone();
        for _ in 0..order {
            e = e.derivative();
            let nodes = e.node_count();
            if nodes > MAX_NODES {
                return Err(Error::SizeCap {
                    nodes,
                    cap: MAX_NODES,
                });
            }
        }
        Ok(e)
    }

    /// The expression `self · x^k`.
    pub fn multiply_by_power(&self, k: u32) -> Expression {
        if k == 0 {
            return self.clone();
        }
        Self::mul(self.clone(), Self::pow(Self::var(), f64::from(k)))
    }

    /// The 64 log-spaced probe points in [1e-8, 1e8] used for domain checks.
    fn probe_points() -> impl Iterator<Item = f64> {
        (0..64).map(ten_pow_helper)
    }

    /// Validity on (0, ∞), checked by sampling: every division denominator
    /// (including negative-exponent powers) must be strictly positive and
    /// finite, every `log` argument strictly positive and finite, and every
    /// fractional-power base nonnegative, at 64 log-spaced points spanning
    /// [1e-8, 1e8]. This catches the practical failure class (vanishing or
    /// sign-changing denominators) without full interval arithmetic.
    pub fn validate(&self) -> Result<()> {
        for x in Self::probe_points() {
            self.validate_at(x)?;
        }
        Ok(())
    }

    fn validate_at(&self, x: f64) -> Result<()> {
        match &*self.0 {
            Node::Const(_) | Node::Var => Ok(()),
            Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) => {
                a.validate_at(x)?;
                b.validate_at(x)
            }
            Node::Div(a, b) => {
                a.validate_at(x)?;
                b.validate_at(x)?;
                let d = b.eval_raw(x);
                if d.is_finite() && d > 0.0 {
                    Ok(())
                } else {
                    Err(Error::Domain(format!(
                        "denominator evaluates to {d} at x = {x}; it must stay positive on (0, inf)"
                    )))
                }
            }
            Node::Pow(a, p) => {
                a.validate_at(x)?;
                let base = a.eval_raw(x);
                match near_integer(*p) {
                    Some(n) if n >= 0 => Ok(()),
                    Some(_) => {
                        // negative integer power: the base is a denominator
                        if base.is_finite() && base > 0.0 {
                            Ok(())
                        } else {
                            Err(Error::Domain(format!(
                                "base of a negative power evaluates to {base} at x = {x}; \
                                 it must stay positive on (0, inf)"
                            )))
                        }
                    }
                    None => {
                        if base.is_finite() && base >= 0.0 {
                            Ok(())
                        } else {
                            Err(Error::Domain(format!(
                                "base of a fractional power evaluates to {base} at x = {x}; \
                                 it must stay nonnegative on (0, inf)"
                            )))
                        }
                    }
                }
            }
            Node::Log(a) => {
                a.validate_at(x)?;
                let v = a.eval_raw(x);
                if v.is_finite() && v > 0.0 {
                    Ok(())
                } else {
                    Err(Error::Domain(format!(
                        "log argument evaluates to {v} at x = {x}; it must stay positive on (0, inf)"
                    )))
                }
            }
            Node::Exp(a) | Node::Neg(a) => a.validate_at(x),
        }
    }

    /// Check that the expression can serve as a positive weight — the
    /// runtime guard for "w > 0 on (0, ∞)" preconditions. Negative or NaN
    /// probe values reject; IEEE overflow to `+inf` and underflow to `0` at
    /// the extreme probes are tolerated (e.g. `exp(x)`, `exp(-x)`) as long
    /// as the weight is positive and finite somewhere.
    pub fn check_positive_weight(&self, role: &str) -> Result<()> {
        let mut finite_positive = 0usize;
        for x in Self::probe_points() {
            let v = self.eval_raw(x);
            if v.is_nan() || v < 0.0 {
                return Err(Error::Domain(format!(
                    "{role} evaluates to {v} at x = {x}; a weight must be positive on (0, inf)"
                )));
            }
            if v.is_finite() && v > 0.0 {
                finite_positive += 1;
            }
        }
        if finite_positive == 0 {
            return Err(Error::Domain(format!(
                "{role} is nowhere positive and finite on the probe grid; \
                 a weight must be positive on (0, inf)"
            )));
        }
        Ok(())
    }

    /// Parse and validate expression text.
    pub fn parse(source: &str) -> Result<Expression> {
        let e = parser::parse(source)?;
        e.validate()?;
        Ok(e)
    }
}

fn ten_pow_helper(i: usize) -> f64 {
    let t = -8.0 + 16.0 * (i as f64) / 63.0;
    10f64.powf(t)
}

impl FromStr for Expression {
    type Err = Error;

    fn from_str(s: &str) -> Result<Expression> {
        Expression::parse(s)
    }
}

impl std::ops::Add for Expression {
    type Output = Expression;
    fn add(self, rhs: Expression) -> Expression {
        Expression::add(self, rhs)
    }
}

impl std::ops::Sub for Expression {
    type Output = Expression;
    fn sub(self, rhs: Expression) -> Expression {
        Expression::sub(self, rhs)
    }
}

impl std::ops::Mul for Expression {
    type Output = Expression;
    fn mul(self, rhs: Expression) -> Expression {
        Expression::mul(self, rhs)
    }
}

impl std::ops::Div for Expression {
    type Output = Expression;
    fn div(self, rhs: Expression) -> Expression {
        Expression::div(self, rhs)
    }
}

impl std::ops::Neg for Expression {
    type Output = Expression;
    fn neg(self) -> Expression {
        Expression::neg(self)
    }
}

fn precedence(node: &Node) -> u8 {
    match node {
        Node::Add(..) | Node::Sub(..) => 1,
        Node::Mul(..) | Node::Div(..) => 2,
        Node::Neg(..) => 3,
        Node::Pow(..) => 4,
        _ => 5,
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn sub(f: &mut fmt::Formatter<'_>, e: &Expression, min_prec: u8) -> fmt::Result {
            let p = precedence(&e.0);
            if p < min_prec {
                write!(f, "(")?;
            }
            match &*e.0 {
                Node::Const(c) => write!(f, "{c}")?,
                Node::Var => write!(f, "x")?,
                Node::Add(a, b) => {
                    sub(f, a, 1)?;
                    write!(f, " + ")?;
                    sub(f, b, 2)?;
                }
                Node::Sub(a, b) => {
                    sub(f, a, 1)?;
                    write!(f, " - ")?;
                    sub(f, b, 2)?;
                }
                Node::Mul(a, b) => {
                    sub(f, a, 2)?;
                    write!(f, "*")?;
                    sub(f, b, 3)?;
                }
                Node::Div(a, b) => {
                    sub(f, a, 2)?;
                    write!(f, "/")?;
                    sub(f, b, 3)?;
                }
                Node::Pow(a, p) => {
                    sub(f, a, 5)?;
                    if *p < 0.0 {
                        write!(f, "^({p})")?;
                    } else {
                        write!(f, "^{p}")?;
                    }
                }
                Node::Exp(a) => {
                    write!(f, "exp(")?;
                    sub(f, a, 0)?;
                    write!(f, ")")?;
                }
                Node::Log(a) => {
                    write!(f, "log(")?;
                    sub(f, a, 0)?;
                    write!(f, ")")?;
                }
                Node::Neg(a) => {
                    write!(f, "-")?;
                    sub(f, a, 3)?;
                }
            }
            if p < min_prec {
                write!(f, ")")?;
            }
            Ok(())
        }
        sub(f, self, 0)
    }
}

#[cfg(test)]
mod tests;
