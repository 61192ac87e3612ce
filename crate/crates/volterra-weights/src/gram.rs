//! Moment Gram matrices of the truncated system `u⁻¹, x·u⁻¹, …, x^m·u⁻¹` on
//! (0, r), and the uniform non-degeneracy quantities built from them.
//!
//! The Gram matrix has entries `G[i][j] = ∫_0^r x^{i+j} u(x)⁻² dx`. Because
//! the raw determinant scales like the product of the squared edge norms, the
//! dimensionless content of the system is the normalized volume
//! `ρ = sqrt(det R)` of the correlation matrix `R[i][j] = G[i][j] /
//! sqrt(G[i][i] G[j][j])`, which lies in (0, 1] and equals 1 exactly for
//! orthogonal edges. The angle between the first edge and the span of the
//! others satisfies `sin θ = sqrt(det R / det R')` with `R'` the minor over
//! the remaining edges, so `ρ = sin θ · ρ'` is an exact factorization.
//! Scanning ρ over a range of r estimates the uniform lower bound (and the
//! threshold radius beyond which it holds) that makes the whole criterion
//! machinery work.

use nalgebra::DMatrix;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::expr::Expression;
use crate::hardy::{logspace, lsq_slope};
use crate::quadrature::{integrate_closure_finite, Tolerance, DEFAULT_TOL, MAX_PANELS};

/// Largest supported system degree; beyond this the Hilbert-like moment
/// matrices are too ill-conditioned for double precision even after
/// correlation normalization.
pub const MAX_DEGREE: u32 = 8;

/// The Gram matrix of the moment system on (0, r).
#[derive(Clone, Debug)]
pub struct MomentMatrix {
    pub r: f64,
    pub degree: u32,
    /// `(m+1) × (m+1)`, entries `∫_0^r x^{i+j} u⁻²`.
    pub entries: DMatrix<f64>,
}

/// One scan point of the non-degeneracy profile.
#[derive(Clone, Copy, Debug)]
pub struct GramSample {
    pub r: f64,
    /// Normalized parallelepiped volume in (0, 1].
    pub rho: f64,
    /// Sine of the angle between the first edge and the span of the rest.
    pub sin_theta: f64,
    /// Log of the raw Gram determinant (it overflows for large r and m).
    pub ln_det: f64,
}

/// Profile of the normalized volume over a range of truncation radii.
#[derive(Clone, Debug)]
pub struct GramProfile {
    pub samples: Vec<GramSample>,
    /// Smallest normalized volume over the stable part of the range — the
    /// empirical uniform non-degeneracy constant.
    pub inf_ratio: f64,
    /// Smallest sampled r past which the volume no longer undercuts its
    /// running minimum by more than 10%; 0 when the whole range qualifies.
    pub suggested_r0: f64,
}

/// Compute the moment matrix of `u⁻¹, …, x^m·u⁻¹` on (0, r). Symmetry is
/// exact by construction: each distinct moment `∫ x^s u⁻²` is computed once.
pub fn moment_matrix(u: &Expression, r: f64, degree: u32, tol: f64) -> Result<MomentMatrix> {
    if degree > MAX_DEGREE {
        return Err(Error::Problem(format!(
            "moment systems are supported up to degree {MAX_DEGREE}, got {degree}"
        )));
    }
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::Problem(format!("radius must be positive, got {r}")));
    }
    u.check_positive_weight("u")?;
    let n = degree as usize + 1;
    let moments: Vec<f64> = (0..2 * n - 1)
        .into_par_iter()
        .map(|s| {
            let f = |x: f64| {
                let w = u.eval_raw(x);
                x.powi(s as i32) / (w * w)
            };
            let est = integrate_closure_finite(&f, 0.0, r, Tolerance::relative(tol), MAX_PANELS)?;
            if est.is_divergent() {
                return Err(Error::Quadrature(format!(
                    "moment of order {s} diverges on (0, {r}): u^-2 is not locally integrable"
                )));
            }
            Ok(est.value)
        })
        .collect::<Result<Vec<f64>>>()?;
    let entries = DMatrix::from_fn(n, n, |i, j| moments[i + j]);
    Ok(MomentMatrix { r, degree, entries })
}

/// The correlation-normalized matrix `R[i][j] = G[i][j]/√(G[i][i]G[j][j])`.
fn correlation(g: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = g.nrows();
    for i in 0..n {
        if !(g[(i, i)].is_finite() && g[(i, i)] > 0.0) {
            return Err(Error::NotPositiveDefinite(format!(
                "diagonal moment {i} is {}",
                g[(i, i)]
            )));
        }
    }
    Ok(DMatrix::from_fn(n, n, |i, j| {
        g[(i, j)] / (g[(i, i)] * g[(j, j)]).sqrt()
    }))
}

/// Product of the Cholesky diagonal — `sqrt(det)` of a positive definite
/// matrix — computed without ever forming the determinant.
fn sqrt_det_cholesky(m: DMatrix<f64>, what: &str) -> Result<f64> {
    let chol = nalgebra::linalg::Cholesky::new(m).ok_or_else(|| {
        Error::NotPositiveDefinite(format!("{what} has no Cholesky factorization"))
    })?;
    Ok(chol.l().diagonal().iter().product())
}

/// The normalized parallelepiped volume `ρ = sqrt(det R) ∈ (0, 1]`;
/// 1 exactly when the edges are orthogonal.
pub fn volume_ratio(g: &MomentMatrix) -> Result<f64> {
    let r = correlation(&g.entries)?;
    sqrt_det_cholesky(r, "correlation matrix")
}

/// `sin θ` for the angle θ between the first edge of the system and the
/// span of the remaining edges, from the Gram-determinant ratio
/// `sin²θ = det G / (G[0][0] · det G')` evaluated through the normalized
/// Cholesky factors.
pub fn subspace_angle(g: &MomentMatrix) -> Result<f64> {
    if g.degree == 0 {
        return Err(Error::Problem(
            "the subspace angle needs at least two edges (degree >= 1)".into(),
        ));
    }
    let r = correlation(&g.entries)?;
    let n = r.nrows();
    let minor = r.view_range(1..n, 1..n).into_owned();
    let rho_full = sqrt_det_cholesky(r, "correlation matrix")?;
    let rho_minor = sqrt_det_cholesky(minor, "correlation minor")?;
    Ok(rho_full / rho_minor)
}

fn ln_det(g: &MomentMatrix) -> Result<f64> {
    let r = correlation(&g.entries)?;
    let sqrt_det_r = sqrt_det_cholesky(r, "correlation matrix")?;
    let mut ln = 2.0 * sqrt_det_r.ln();
    for i in 0..g.entries.nrows() {
        ln += g.entries[(i, i)].ln();
    }
    Ok(ln)
}

/// Sample `ρ(r)` and `sin θ(r)` on a log grid of radii and estimate the
/// uniform non-degeneracy constant of the moment system.
pub fn nondegeneracy_scan(
    u: &Expression,
    degree: u32,
    r_range: (f64, f64),
    n_samples: usize,
    tol: f64,
) -> Result<GramProfile> {
    let (r_lo, r_hi) = r_range;
    if !(r_lo > 0.0 && r_hi > r_lo && n_samples >= 2) {
        return Err(Error::Problem(
            "scan needs 0 < r_lo < r_hi and at least two samples".into(),
        ));
    }
    let grid = logspace(r_lo, r_hi, n_samples);
    let samples: Vec<GramSample> = grid
        .par_iter()
        .map(|&r| {
            let g = moment_matrix(u, r, degree, tol)?;
            let rho = volume_ratio(&g)?;
            let sin_theta = if degree == 0 {
                1.0
            } else {
                subspace_angle(&g)?
            };
            Ok(GramSample {
                r,
                rho,
                sin_theta,
                ln_det: ln_det(&g)?,
            })
        })
        .collect::<Result<Vec<GramSample>>>()?;

    // first index from which the running minimum never drops by another 10%
    let rhos: Vec<f64> = samples.iter().map(|s| s.rho).collect();
    let mut start = rhos.len() - 1;
    for i in 0..rhos.len() {
        let mut running_min = rhos[i];
        let mut stable = true;
        for &rho in &rhos[i + 1..] {
            if rho < 0.9 * running_min {
                stable = false;
                break;
            }
            running_min = running_min.min(rho);
        }
        if stable {
            start = i;
            break;
        }
    }
    let suggested_r0 = if start == 0 { 0.0 } else { samples[start].r };
    let inf_ratio = rhos[start..].iter().cloned().fold(f64::INFINITY, f64::min);

    Ok(GramProfile {
        samples,
        inf_ratio,
        suggested_r0,
    })
}

/// Log–log slope of `ρ(r)` over the profile; near zero for scale-invariant
/// (pure power) weights.
pub fn profile_slope(profile: &GramProfile) -> f64 {
    let pts: Vec<(f64, f64)> = profile
        .samples
        .iter()
        .filter(|s| s.rho > 0.0)
        .map(|s| (s.r.ln(), s.rho.ln()))
        .collect();
    if pts.len() < 2 {
        0.0
    } else {
        lsq_slope(&pts)
    }
}

/// Convenience: the scan with the default radius range and tolerance.
pub fn default_scan(u: &Expression, degree: u32) -> Result<GramProfile> {
    nondegeneracy_scan(u, degree, (1e-3, 1e3), 60, DEFAULT_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::weighted_l2_norm;

    fn expr(s: &str) -> Expression {
        Expression::parse(s).unwrap()
    }

    /// Brute-force determinant by cofactor expansion, used as an independent
    /// oracle against the Cholesky route.
    fn det_cofactor(m: &DMatrix<f64>) -> f64 {
        let n = m.nrows();
        if n == 1 {
            return m[(0, 0)];
        }
        let mut det = 0.0;
        for j in 0..n {
            let minor = m.clone().remove_row(0).remove_column(j);
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            det += sign * m[(0, j)] * det_cofactor(&minor);
        }
        det
    }

    #[test]
    fn unit_weight_moments_form_scaled_hilbert_matrix() {
        let g = moment_matrix(&expr("1"), 1.0, 1, 1e-10).unwrap();
        assert!((g.entries[(0, 0)] - 1.0).abs() < 1e-12);
        assert!((g.entries[(0, 1)] - 0.5).abs() < 1e-12);
        assert!((g.entries[(1, 0)] - 0.5).abs() < 1e-12);
        assert!((g.entries[(1, 1)] - 1.0 / 3.0).abs() < 1e-12);
        // exact symmetry, not just approximate
        assert_eq!(g.entries[(0, 1)], g.entries[(1, 0)]);

        let g0 = moment_matrix(&expr("1"), 2.0, 0, 1e-10).unwrap();
        assert!((g0.entries[(0, 0)] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn non_integrable_weight_is_rejected() {
        // u = x: u^{-2} = x^{-2} is not integrable at the origin
        let err = moment_matrix(&expr("x"), 1.0, 1, 1e-9).unwrap_err();
        assert!(matches!(err, Error::Quadrature(_)), "got {err:?}");
    }

    #[test]
    fn degree_cap_is_enforced() {
        assert!(moment_matrix(&expr("1"), 1.0, 9, 1e-9).is_err());
    }

    #[test]
    fn volume_ratio_of_unit_weight_pair_is_half() {
        for &r in &[0.01, 1.0, 50.0] {
            let g = moment_matrix(&expr("1"), r, 1, 1e-10).unwrap();
            let rho = volume_ratio(&g).unwrap();
            assert!((rho - 0.5).abs() < 1e-9, "r = {r}: rho = {rho}");
        }
    }

    #[test]
    fn single_edge_and_diagonal_volumes_are_one() {
        let g = moment_matrix(&expr("1"), 3.0, 0, 1e-10).unwrap();
        assert!((volume_ratio(&g).unwrap() - 1.0).abs() < 1e-12);

        let diag = MomentMatrix {
            r: 1.0,
            degree: 2,
            entries: DMatrix::from_diagonal(&nalgebra::dvector![2.0, 5.0, 0.25]),
        };
        assert!((volume_ratio(&diag).unwrap() - 1.0).abs() < 1e-15);
        assert!((subspace_angle(&diag).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn subspace_angle_of_unit_weight_pair_is_half() {
        let g = moment_matrix(&expr("1"), 7.0, 1, 1e-10).unwrap();
        let s = subspace_angle(&g).unwrap();
        assert!((s - 0.5).abs() < 1e-9, "sin = {s}");
    }

    #[test]
    fn subspace_angle_matches_brute_force_determinants() {
        // 3×3 Hilbert matrix: sin θ = sqrt(det G / (G00 · det G'))
        let g = moment_matrix(&expr("1"), 1.0, 2, 1e-11).unwrap();
        let det_full = det_cofactor(&g.entries);
        let minor = g.entries.clone().remove_row(0).remove_column(0);
        let det_minor = det_cofactor(&minor);
        let expected = (det_full / (g.entries[(0, 0)] * det_minor)).sqrt();
        let got = subspace_angle(&g).unwrap();
        assert!(
            (got - expected).abs() < 1e-9,
            "cholesky {got} vs cofactor {expected}"
        );
        // and the closed form for the 3×3 Hilbert matrix is exactly 1/3
        assert!((got - 1.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn volume_factorizes_through_the_angle() {
        // ρ = sin θ · ρ(minor system) exactly
        for src in ["1", "x^(0.3)", "exp(x)"] {
            let u = expr(src);
            let g = moment_matrix(&u, 2.0, 3, 1e-11).unwrap();
            let rho = volume_ratio(&g).unwrap();
            let sin = subspace_angle(&g).unwrap();
            let minor = MomentMatrix {
                r: g.r,
                degree: g.degree - 1,
                entries: g.entries.clone().remove_row(0).remove_column(0),
            };
            let rho_minor = volume_ratio(&minor).unwrap();
            assert!(
                (rho - sin * rho_minor).abs() <= 1e-9 * rho,
                "{src}: {rho} vs {}",
                sin * rho_minor
            );
        }
    }

    #[test]
    fn normalization_is_invariant_under_weight_scaling() {
        let u = expr("x^(0.2)");
        let scaled = expr("3*x^(0.2)");
        let a = moment_matrix(&u, 5.0, 2, 1e-11).unwrap();
        let b = moment_matrix(&scaled, 5.0, 2, 1e-11).unwrap();
        let (rho_a, rho_b) = (volume_ratio(&a).unwrap(), volume_ratio(&b).unwrap());
        let (sin_a, sin_b) = (subspace_angle(&a).unwrap(), subspace_angle(&b).unwrap());
        assert!((rho_a - rho_b).abs() <= 1e-9 * rho_a);
        assert!((sin_a - sin_b).abs() <= 1e-9 * sin_a);
    }

    #[test]
    fn diagonal_moment_matches_l2_norm() {
        let u = expr("x^(0.3)");
        let r = 2.5;
        let g = moment_matrix(&u, r, 2, 1e-11).unwrap();
        for k in 0..=2u32 {
            let edge = Expression::mul(
                Expression::pow(Expression::var(), f64::from(k)),
                Expression::pow(u.clone(), -1.0),
            );
            let norm = weighted_l2_norm(&edge, 0.0, r, 1e-10).unwrap();
            let expected = norm.value * norm.value;
            let got = g.entries[(k as usize, k as usize)];
            assert!(
                (got - expected).abs() <= 1e-8 * expected.max(1.0),
                "k = {k}: {got} vs {expected}"
            );
        }
    }

    #[test]
    fn scan_of_unit_weight_is_scale_invariant() {
        let profile = nondegeneracy_scan(&expr("1"), 3, (1e-3, 1e3), 40, 1e-10).unwrap();
        let rhos: Vec<f64> = profile.samples.iter().map(|s| s.rho).collect();
        let max = rhos.iter().cloned().fold(f64::MIN, f64::max);
        let min = rhos.iter().cloned().fold(f64::MAX, f64::min);
        assert!(max - min <= 1e-6 * max, "spread {}", max - min);
        assert_eq!(profile.suggested_r0, 0.0);
        assert!((profile.inf_ratio - min).abs() <= f64::EPSILON * min);
        assert!(profile_slope(&profile).abs() < 1e-6);
    }

    #[test]
    fn scan_degree_zero_is_identically_one() {
        let profile = nondegeneracy_scan(&expr("1"), 0, (1e-2, 1e2), 20, 1e-10).unwrap();
        for s in &profile.samples {
            assert!((s.rho - 1.0).abs() < 1e-12);
        }
        assert_eq!(profile.inf_ratio, 1.0);
    }

    #[test]
    fn scan_of_growing_exponential_weight_stays_positive() {
        // u = exp(x): u^{-2} = e^{-2x} is integrable, all moments finite
        let profile = nondegeneracy_scan(&expr("exp(x)"), 1, (0.1, 50.0), 25, 1e-10).unwrap();
        for s in &profile.samples {
            assert!(s.rho > 0.0 && s.rho <= 1.0, "rho = {}", s.rho);
            assert!(s.sin_theta > 0.0 && s.sin_theta <= 1.0);
        }
        assert!(profile.inf_ratio > 0.0);
    }

    #[test]
    fn power_weight_scan_is_r_independent() {
        // u = x^p with p < 1/2 keeps u^{-2} locally integrable
        for &p in &[0.1, 0.3, 0.45] {
            let u = expr(&format!("x^({p})"));
            let profile = nondegeneracy_scan(&u, 2, (1e-2, 1e2), 25, 1e-10).unwrap();
            let rhos: Vec<f64> = profile.samples.iter().map(|s| s.rho).collect();
            let max = rhos.iter().cloned().fold(f64::MIN, f64::max);
            let min = rhos.iter().cloned().fold(f64::MAX, f64::min);
            assert!(max - min <= 1e-6 * max, "p = {p}: spread {}", max - min);
            assert!(profile.inf_ratio > 0.0);
        }
    }
}
