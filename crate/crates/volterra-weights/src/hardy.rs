//! The weighted Hardy criterion, the per-coefficient criterion constants,
//! and the integral doubling class of weights.
//!
//! For weights `v1`, `u1` the boundedness of `f ↦ v1(x) ∫_0^x f` from L² to
//! L² is governed by the supremum over r > 0 of
//!
//! ```text
//! F(r) = ‖v1‖_{L²(r,∞)} · ‖u1⁻¹‖_{L²(0,r)}
//! ```
//!
//! and each kernel component `a_k(x) ∫_0^x t^k f(t) dt` between the weighted
//! spaces given by `u` and `v` reduces to exactly this criterion with
//! `v1 = a_k·v` and `u1 = x^{-k}·u`. This module computes the profile
//! `r ↦ F(r)`, searches for its supremum with divergence detection at both
//! ends of the r-range, and estimates the doubling constant
//! `sup_Δ ∫_Δ w / ∫_{½Δ} w` over structured families of intervals, where
//! `½Δ` is the concentric interval of half the length.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::Expression;
use crate::quadrature::{integrate_closure_finite, l2_norm_closure, Tolerance, DEFAULT_TOL};

/// Supremum search: where the profile is sampled, when a boundary trend is
/// declared divergent, and how hard the best bracket is refined.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default)]
pub struct SearchConfig {
    pub r_min: f64,
    pub r_max: f64,
    pub samples: usize,
    /// A log–log boundary slope of the profile beyond this value means the
    /// supremum is attained in the limit, i.e. is infinite.
    pub slope_threshold: f64,
    /// Golden-section iterations refining the best grid bracket.
    pub refine_iters: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            r_min: 1e-6,
            r_max: 1e6,
            samples: 200,
            slope_threshold: 0.02,
            refine_iters: 40,
        }
    }
}

/// Interval sampling for the doubling-constant estimate.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default)]
pub struct SamplingConfig {
    pub center_min: f64,
    pub center_max: f64,
    pub centers: usize,
    pub length_max: f64,
    pub lengths: usize,
    /// Left endpoint used to approximate intervals anchored at the origin.
    pub origin_offset: f64,
    /// Ratios beyond this cap mean the weight is not doubling.
    pub ratio_cap: f64,
    /// Growth slope of per-length maxima that flags an unbounded constant.
    pub slope_threshold: f64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig {
            center_min: 1e-6,
            center_max: 1e6,
            centers: 60,
            length_max: 1e6,
            lengths: 60,
            origin_offset: 1e-12,
            ratio_cap: 1e6,
            slope_threshold: 0.02,
        }
    }
}

/// Finite/infinite answer of a supremum search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Finite,
    Infinite,
}

/// Result of a Hardy-criterion supremum search.
#[derive(Clone, Debug)]
pub struct HardyResult {
    /// Sampled `(r, F(r))`; values may be `f64::INFINITY`.
    pub profile: Vec<(f64, f64)>,
    /// `sup_{r>0} F(r)`, or `f64::INFINITY`.
    pub supremum: f64,
    /// Location of the supremum when it is finite and attained on the grid.
    pub argmax_r: Option<f64>,
    pub verdict: Verdict,
    /// Log–log slopes of the profile over the first and last decade of the
    /// r-grid; a growing trend toward either boundary means divergence.
    pub boundary_slopes: (f64, f64),
}

impl HardyResult {
    pub fn is_finite(&self) -> bool {
        self.verdict == Verdict::Finite
    }
}

pub(crate) fn logspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo && n >= 2);
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

pub(crate) fn lsq_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let (mut num, mut den) = (0.0, 0.0);
    for (x, y) in points {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// `F(r)` for one `r`: the product of the tail norm of `v1` and the head
/// norm of `u1⁻¹`, `f64::INFINITY` when either factor diverges.
pub fn hardy_profile(v1: &Expression, u1: &Expression, r: f64, tol: f64) -> Result<f64> {
    u1.check_positive_weight("u1")?;
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::Problem(format!(
            "profile point must satisfy r > 0, got {r}"
        )));
    }
    profile_value(v1, u1, r, tol)
}

fn profile_value(v1: &Expression, u1: &Expression, r: f64, tol: f64) -> Result<f64> {
    // Each factor gets a tenth of the budget so the product meets `tol`.
    // The factor magnitudes vary over many orders along the r-grid, so the
    // tolerance must be relative; an absolute budget would let the tiny
    // factor converge with an arbitrarily wrong value.
    let factor_tol = Tolerance::relative(tol / 10.0);
    let tail = l2_norm_closure(
        &|x| v1.eval_raw(x),
        r,
        f64::INFINITY,
        factor_tol,
        crate::quadrature::MAX_PANELS,
    )?;
    if tail.is_divergent() {
        return Ok(f64::INFINITY);
    }
    if tail.value == 0.0 {
        // zero tail factor: the product vanishes regardless of the head
        return Ok(0.0);
    }
    let head = l2_norm_closure(
        &|x| 1.0 / u1.eval_raw(x),
        0.0,
        r,
        factor_tol,
        crate::quadrature::MAX_PANELS,
    )?;
    if head.is_divergent() {
        return Ok(f64::INFINITY);
    }
    Ok(tail.value * head.value)
}

fn decade_slope(profile: &[(f64, f64)], low_end: bool) -> f64 {
    let (lo_r, hi_r) = (profile[0].0, profile[profile.len() - 1].0);
    let window: Vec<(f64, f64)> = profile
        .iter()
        .filter(|(r, f)| {
            let in_decade = if low_end {
                *r <= lo_r * 10.0
            } else {
                *r >= hi_r / 10.0
            };
            in_decade && f.is_finite() && *f > 0.0
        })
        .map(|&(r, f)| (r.ln(), f.ln()))
        .collect();
    if window.len() < 2 {
        0.0
    } else {
        lsq_slope(&window)
    }
}

/// The best constant of the weighted Hardy inequality for the pair
/// `(v1, u1)`: the supremum of [`hardy_profile`] over r > 0.
///
/// The profile is sampled on a log grid, the best bracket is refined by
/// golden section, and a growing trend over the first or last decade of the
/// grid is reported as an infinite supremum.
pub fn hardy_constant(
    v1: &Expression,
    u1: &Expression,
    search: &SearchConfig,
    tol: f64,
) -> Result<HardyResult> {
    u1.check_positive_weight("u1")?;
    if !(search.r_min > 0.0 && search.r_max > search.r_min && search.samples >= 8) {
        return Err(Error::Problem(
            "search grid needs r_max > r_min > 0 and at least 8 samples".into(),
        ));
    }
    let grid = logspace(search.r_min, search.r_max, search.samples);
    let values: Vec<f64> = grid
        .par_iter()
        .map(|&r| profile_value(v1, u1, r, tol))
        .collect::<Result<Vec<f64>>>()?;
    let profile: Vec<(f64, f64)> = grid.iter().copied().zip(values.iter().copied()).collect();

    let slopes = (decade_slope(&profile, true), decade_slope(&profile, false));
    let infinite = |profile, slopes| HardyResult {
        profile,
        supremum: f64::INFINITY,
        argmax_r: None,
        verdict: Verdict::Infinite,
        boundary_slopes: slopes,
    };

    if values.iter().any(|v| v.is_infinite()) {
        return Ok(infinite(profile, slopes));
    }
    if slopes.0 < -search.slope_threshold || slopes.1 > search.slope_threshold {
        return Ok(infinite(profile, slopes));
    }

    let best = values
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .expect("non-empty grid");
    let mut supremum = values[best];
    let mut argmax = grid[best];

    // golden-section refinement of the surrounding bracket, in log r
    let lo = grid[best.saturating_sub(1)].ln();
    let hi = grid[(best + 1).min(grid.len() - 1)].ln();
    if hi > lo {
        const INV_PHI: f64 = 0.618_033_988_749_894_8;
        let (mut a, mut b) = (lo, hi);
        let mut c = b - INV_PHI * (b - a);
        let mut d = a + INV_PHI * (b - a);
        let mut fc = profile_value(v1, u1, c.exp(), tol)?;
        let mut fd = profile_value(v1, u1, d.exp(), tol)?;
        for _ in 0..search.refine_iters {
            if fc >= fd {
                b = d;
                d = c;
                fd = fc;
                c = b - INV_PHI * (b - a);
                fc = profile_value(v1, u1, c.exp(), tol)?;
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + INV_PHI * (b - a);
                fd = profile_value(v1, u1, d.exp(), tol)?;
            }
            let (x, fx) = if fc >= fd { (c, fc) } else { (d, fd) };
            if fx > supremum {
                supremum = fx;
                argmax = x.exp();
            }
        }
    }

    if supremum.is_infinite() {
        return Ok(infinite(profile, slopes));
    }
    Ok(HardyResult {
        profile,
        supremum,
        argmax_r: Some(argmax),
        verdict: Verdict::Finite,
        boundary_slopes: slopes,
    })
}

/// The criterion constant of the k-th kernel component between `L²_u` and
/// `L²_v`: the Hardy constant of the pair `v1 = a_k·v`, `u1 = x^{-k}·u`, so
/// that the head factor is `‖x^k u⁻¹‖_{L²(0,r)}`.
pub fn coefficient_constant(
    u: &Expression,
    v: &Expression,
    a_k: &Expression,
    k: u32,
    search: &SearchConfig,
) -> Result<HardyResult> {
    u.check_positive_weight("u")?;
    let v1 = Expression::mul(a_k.clone(), v.clone());
    let u1 = Expression::mul(Expression::pow(Expression::var(), -f64::from(k)), u.clone());
    hardy_constant(&v1, &u1, search, DEFAULT_TOL)
}

/// One sampled interval together with its doubling ratio.
#[derive(Clone, Copy, Debug)]
pub struct IntervalRatio {
    pub center: f64,
    pub length: f64,
    pub ratio: f64,
}

/// Doubling-class membership report for a weight.
#[derive(Clone, Debug)]
pub struct DoublingReport {
    /// Largest sampled ratio `∫_Δ w / ∫_{½Δ} w` — the smallest admissible
    /// doubling constant on the sample family.
    pub constant_estimate: f64,
    /// Minimum interval length the condition was required for.
    pub min_length: f64,
    pub member: bool,
    /// Interval attaining `constant_estimate`, as `(center, length)`.
    pub worst_interval: (f64, f64),
    /// Per-length maxima (largest lengths last); when `member` is false this
    /// documents the unbounded growth.
    pub growth_evidence: Vec<IntervalRatio>,
}

fn interval_ratio<F: Fn(f64) -> f64>(w: &F, a: f64, b: f64) -> Result<Option<f64>> {
    debug_assert!(a >= 0.0 && b > a);
    // skip intervals where the weight overflows or carries no representable mass
    let mut peak: f64 = 0.0;
    for i in 0..5 {
        let x = a + (b - a) * (0.1 + 0.2 * i as f64);
        let v = w(x);
        if !v.is_finite() {
            return Ok(None);
        }
        peak = peak.max(v.abs());
    }
    if peak < 1e-280 {
        return Ok(None);
    }
    // intervals much shorter than the ulp scale of their position have
    // meaninglessly rounded endpoints
    if b - a < 1e-8 * b {
        return Ok(None);
    }
    let tol = Tolerance {
        abs: 0.0,
        rel: 1e-10,
    };
    let whole = integrate_closure_finite(w, a, b, tol, 400)?;
    let quarter = 0.25 * (b - a);
    let mid = 0.5 * (a + b);
    let half = integrate_closure_finite(w, mid - quarter, mid + quarter, tol, 400)?;
    if whole.is_divergent() || half.is_divergent() {
        return Ok(None);
    }
    if !(whole.value.is_finite() && half.value.is_finite() && half.value > 0.0) {
        return Ok(None);
    }
    Ok(Some(whole.value / half.value))
}

/// The ratio `∫_Δ w / ∫_{½Δ} w` for one interval Δ of the given center and
/// length, with `½Δ` concentric of half the length.
pub fn doubling_ratio(w: &Expression, center: f64, length: f64) -> Result<f64> {
    w.check_positive_weight("w")?;
    let a = center - 0.5 * length;
    let b = center + 0.5 * length;
    if !(a >= 0.0 && length > 0.0 && b.is_finite()) {
        return Err(Error::Problem(format!(
            "interval (center {center}, length {length}) does not lie inside (0, inf)"
        )));
    }
    interval_ratio(&|x| w.eval_raw(x), a, b)?.ok_or_else(|| {
        Error::Quadrature(format!(
            "weight could not be integrated over (center {center}, length {length})"
        ))
    })
}

/// Estimate the doubling constant of `w` over intervals of length at least
/// `min_length`, and decide membership in the doubling class.
///
/// Intervals are sampled as a log grid of centers × lengths plus the family
/// anchored at the origin. Membership fails when a sampled ratio exceeds the
/// cap or the per-length maxima keep growing over the last decade of lengths.
pub fn doubling_constant(
    w: &Expression,
    min_length: f64,
    sampling: &SamplingConfig,
) -> Result<DoublingReport> {
    w.check_positive_weight("w")?;
    if min_length < 0.0 {
        return Err(Error::Problem("min_length must be nonnegative".into()));
    }
    if !(min_length.max(1e-8) < sampling.length_max
        && sampling.center_min > 0.0
        && sampling.center_min < sampling.center_max
        && sampling.lengths >= 2
        && sampling.centers >= 2)
    {
        return Err(Error::Problem(
            "sampling grid needs min_length < length_max, 0 < center_min < center_max, \
             and at least two centers and lengths"
                .into(),
        ));
    }
    let weight = |x: f64| w.eval_raw(x);
    let lengths = logspace(min_length.max(1e-8), sampling.length_max, sampling.lengths);
    let centers = logspace(sampling.center_min, sampling.center_max, sampling.centers);

    // (length index, interval) pairs: centered family + origin-anchored family
    let mut intervals: Vec<(usize, f64, f64)> = Vec::new();
    for (j, &len) in lengths.iter().enumerate() {
        for &c in &centers {
            let a = c - 0.5 * len;
            if a > 0.0 {
                intervals.push((j, a, c + 0.5 * len));
            }
        }
        if len > 2.0 * sampling.origin_offset {
            intervals.push((j, sampling.origin_offset, len));
        }
    }

    let ratios: Vec<(usize, f64, f64, Option<f64>)> = intervals
        .par_iter()
        .map(|&(j, a, b)| Ok((j, a, b, interval_ratio(&weight, a, b)?)))
        .collect::<Result<Vec<_>>>()?;

    let mut best: Option<IntervalRatio> = None;
    let mut per_length: Vec<Option<IntervalRatio>> = vec![None; lengths.len()];
    for (j, a, b, ratio) in ratios {
        let Some(ratio) = ratio else { continue };
        let sample = IntervalRatio {
            center: 0.5 * (a + b),
            length: b - a,
            ratio,
        };
        if best.is_none() || ratio > best.unwrap().ratio {
            best = Some(sample);
        }
        if per_length[j].is_none() || ratio > per_length[j].unwrap().ratio {
            per_length[j] = Some(sample);
        }
    }
    let best = best.ok_or_else(|| {
        Error::Quadrature("no interval in the sampling family could be integrated".into())
    })?;

    let maxima: Vec<IntervalRatio> = per_length.into_iter().flatten().collect();
    let top_length = maxima.last().map_or(0.0, |s| s.length);
    let last_decade: Vec<(f64, f64)> = maxima
        .iter()
        .filter(|s| s.length >= top_length / 10.0)
        .map(|s| (s.length.ln(), s.ratio.ln()))
        .collect();
    let growing = last_decade.len() >= 3 && {
        let slope = lsq_slope(&last_decade);
        slope > sampling.slope_threshold
            && last_decade.last().unwrap().1 > last_decade.first().unwrap().1
    };
    let member = best.ratio <= sampling.ratio_cap && !growing;

    Ok(DoublingReport {
        constant_estimate: best.ratio,
        min_length,
        member,
        worst_interval: (best.center, best.length),
        growth_evidence: maxima,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expr(s: &str) -> Expression {
        Expression::parse(s).unwrap()
    }

    #[test]
    fn averaging_kernel_profile_is_flat_one() {
        // v1 = x^{-1}, u1 = 1: tail r^{-1/2}, head r^{1/2}
        let v1 = expr("x^(-1)");
        let u1 = expr("1");
        for &r in &[1.0, 100.0] {
            let f = hardy_profile(&v1, &u1, r, 1e-9).unwrap();
            assert!((f - 1.0).abs() < 1e-9, "r = {r}: {f}");
        }
    }

    #[test]
    fn profile_detects_divergent_tail_factor() {
        let f = hardy_profile(&expr("1"), &expr("1"), 1.0, 1e-9).unwrap();
        assert_eq!(f, f64::INFINITY);
    }

    #[test]
    fn hardy_constant_of_averaging_kernel() {
        let r =
            hardy_constant(&expr("x^(-1)"), &expr("1"), &SearchConfig::default(), 1e-9).unwrap();
        assert_eq!(r.verdict, Verdict::Finite);
        assert!((r.supremum - 1.0).abs() < 1e-6, "supremum {}", r.supremum);
        assert!(r.argmax_r.is_some());
        // finite supremum dominates every sample
        for &(_, f) in &r.profile {
            assert!(r.supremum >= f);
        }
    }

    #[test]
    fn hardy_constant_balanced_cubic_pair() {
        // v1 = x^{-2}, u1 = x^{-1}: F(r) = (r^{-3/2}/√3)(r^{3/2}/√3) = 1/3
        let r = hardy_constant(
            &expr("x^(-2)"),
            &expr("x^(-1)"),
            &SearchConfig::default(),
            1e-9,
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Finite);
        assert!((r.supremum - 1.0 / 3.0).abs() < 1e-6);
    }

    #[test]
    fn hardy_constant_divergent_tail() {
        // tail exponent -0.8 is not integrable
        let r = hardy_constant(
            &expr("x^(-0.4)"),
            &expr("1"),
            &SearchConfig::default(),
            1e-9,
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Infinite);
        assert_eq!(r.supremum, f64::INFINITY);
        assert!(r.argmax_r.is_none());
    }

    #[test]
    fn hardy_constant_divergence_by_boundary_slope() {
        // v1 = x^{-0.6}: every F(r) is finite but F(r) ~ r^{0.4} grows
        let r = hardy_constant(
            &expr("x^(-0.6)"),
            &expr("1"),
            &SearchConfig::default(),
            1e-9,
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Infinite);
        assert!(
            r.boundary_slopes.1 > 0.3,
            "right slope {:?}",
            r.boundary_slopes
        );
    }

    #[test]
    fn flat_profile_spread_for_balanced_powers() {
        // tail ∝ r^{-3/2}, head ∝ r^{3/2}: F constant in r
        let r = hardy_constant(
            &expr("x^(-2)"),
            &expr("x^(-1)"),
            &SearchConfig::default(),
            1e-9,
        )
        .unwrap();
        let finite: Vec<f64> = r.profile.iter().map(|&(_, f)| f).collect();
        let max = finite.iter().cloned().fold(f64::MIN, f64::max);
        let min = finite.iter().cloned().fold(f64::MAX, f64::min);
        assert!(max - min <= 1e-6 * max, "spread {} at {}", max - min, max);
    }

    #[test]
    fn constant_scales_linearly_in_v1() {
        let search = SearchConfig::default();
        let base = hardy_constant(&expr("x^(-1)"), &expr("1"), &search, 1e-9).unwrap();
        let scaled = hardy_constant(&expr("7.5*x^(-1)"), &expr("1"), &search, 1e-9).unwrap();
        let ratio = scaled.supremum / base.supremum;
        assert!((ratio - 7.5).abs() <= 7.5 * 1e-9, "ratio {ratio}");
    }

    #[test]
    fn coefficient_constant_examples() {
        let one = expr("1");
        let search = SearchConfig::default();

        let s0 = coefficient_constant(&one, &one, &expr("x^(-1)"), 0, &search).unwrap();
        assert!((s0.supremum - 1.0).abs() < 1e-6);

        let s1 = coefficient_constant(&one, &one, &expr("x^(-2)"), 1, &search).unwrap();
        assert!((s1.supremum - 1.0 / 3.0).abs() < 1e-6);

        let inf = coefficient_constant(&one, &one, &one, 0, &search).unwrap();
        assert_eq!(inf.verdict, Verdict::Infinite);
    }

    #[test]
    fn coefficient_constant_matches_composed_pair_bitwise() {
        let (u, v, a1) = (expr("1"), expr("1"), expr("x^(-2)"));
        let search = SearchConfig::default();
        let direct = coefficient_constant(&u, &v, &a1, 1, &search).unwrap();
        let v1 = Expression::mul(a1, v);
        let u1 = Expression::mul(Expression::pow(Expression::var(), -1.0), u);
        let composed = hardy_constant(&v1, &u1, &search, DEFAULT_TOL).unwrap();
        assert_eq!(direct.supremum.to_bits(), composed.supremum.to_bits());
    }

    #[test]
    fn doubling_constant_of_flat_weight() {
        let report = doubling_constant(&expr("1"), 0.0, &SamplingConfig::default()).unwrap();
        assert!(report.member);
        assert!(
            (report.constant_estimate - 2.0).abs() < 1e-6,
            "estimate {}",
            report.constant_estimate
        );
    }

    #[test]
    fn doubling_ratio_of_exponential_weight_matches_closed_form() {
        // Δ of length 2h centered anywhere: ratio = sinh(h)/sinh(h/2) = 2cosh(h/2)
        let w = expr("exp(x)");
        for &h in &[0.5f64, 2.0, 10.0] {
            let got = doubling_ratio(&w, 15.0, 2.0 * h).unwrap();
            let expected = 2.0 * (h / 2.0).cosh();
            assert!(
                (got - expected).abs() <= 1e-6 * expected,
                "h = {h}: {got} vs {expected}"
            );
        }
    }

    #[test]
    fn growing_exponential_is_not_doubling() {
        let report = doubling_constant(&expr("exp(x)"), 0.0, &SamplingConfig::default()).unwrap();
        assert!(!report.member);
        assert!(report.constant_estimate > 1e6);
        assert!(!report.growth_evidence.is_empty());
    }

    #[test]
    fn decaying_exponential_is_not_doubling() {
        let report =
            doubling_constant(&expr("exp(-2*x)"), 0.0, &SamplingConfig::default()).unwrap();
        assert!(!report.member);
    }

    #[test]
    fn power_weight_doubling_constants() {
        // Closed forms with the concentric half interval: on Δ = (0, h) the
        // ratio is 1/((3/4)^{α+1} - (1/4)^{α+1}); small intervals far from
        // the origin approach the flat-weight ratio 2. The estimate is the
        // larger of the two.
        let anchored =
            |alpha: f64| 1.0 / ((3.0f64 / 4.0).powf(alpha + 1.0) - (0.25f64).powf(alpha + 1.0));
        for &(alpha, src) in &[(0.0, "1"), (0.5, "x^(0.5)"), (1.0, "x"), (2.0, "x^2")] {
            let expected = anchored(alpha).max(2.0);
            let report = doubling_constant(&expr(src), 0.0, &SamplingConfig::default()).unwrap();
            assert!(report.member, "x^{alpha} must be doubling");
            assert!(
                (report.constant_estimate - expected).abs() < 1e-6,
                "x^{alpha}: estimate {} vs {expected}",
                report.constant_estimate
            );
            assert!(report.constant_estimate >= 1.0);
        }
        // for the convex power the worst interval is anchored at the origin
        let report = doubling_constant(&expr("x^2"), 0.0, &SamplingConfig::default()).unwrap();
        let (center, length) = report.worst_interval;
        assert!(
            (center - length / 2.0).abs() <= 1e-6 * length,
            "worst interval should touch the origin: center {center}, length {length}"
        );
    }

    #[test]
    fn doubling_rejects_degenerate_sampling() {
        let sampling = SamplingConfig {
            length_max: 1e-9,
            ..SamplingConfig::default()
        };
        assert!(doubling_constant(&expr("1"), 0.0, &sampling).is_err());
        assert!(doubling_constant(&expr("1"), -1.0, &SamplingConfig::default()).is_err());
    }

    #[test]
    fn doubling_respects_min_length() {
        // with min_length large, only long intervals are sampled
        let report = doubling_constant(&expr("1"), 10.0, &SamplingConfig::default()).unwrap();
        assert!(report.member);
        assert!(report.worst_interval.1 >= 10.0 * (1.0 - 1e-12));
        assert_eq!(report.min_length, 10.0);
    }
}
