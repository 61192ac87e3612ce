//! Configuration-driven job runner behind the command-line interface.
//!
//! A job is one TOML file describing one analysis: the kind, the expression
//! fields it needs, and optional numeric overrides. Running a job writes a
//! plain-text report plus machine-readable CSV profiles into the output
//! directory and classifies the outcome: a divergent/negative verdict is a
//! first-class mathematical answer (exit code 2 at the CLI), distinct from a
//! failure (exit code 1).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::Expression;
use crate::gram;
use crate::hardy::{self, SamplingConfig, SearchConfig, Verdict};
use crate::multiplier::{self, MultiplierProblem};
use crate::operator::{self, GridSpec, OperatorSpec};
use crate::quadrature::DEFAULT_TOL;

/// Grid-ladder parameters of an operator job.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default)]
pub struct LadderParams {
    pub x_max: Vec<f64>,
    pub nodes: Vec<usize>,
}

impl Default for LadderParams {
    fn default() -> Self {
        LadderParams {
            x_max: vec![1e2, 1e3, 1e4],
            nodes: vec![512, 1024, 2048],
        }
    }
}

impl LadderParams {
    fn grids(&self) -> Result<Vec<GridSpec>> {
        if self.x_max.is_empty() || self.x_max.len() != self.nodes.len() {
            return Err(Error::Config(
                "ladder needs matching, nonempty x_max and nodes lists".into(),
            ));
        }
        Ok(self
            .x_max
            .iter()
            .zip(&self.nodes)
            .map(|(&x, &n)| GridSpec::log(x, n))
            .collect())
    }
}

/// One analysis job; the `kind` key selects the variant.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum JobConfig {
    /// Supremum of the weighted Hardy profile for a pair `(v1, u1)`.
    Hardy {
        v1: String,
        u1: String,
        #[serde(default = "default_tol")]
        tol: f64,
        #[serde(default)]
        search: SearchConfig,
    },
    /// Criterion constant of one kernel coefficient between `L²_u` and `L²_v`.
    Coefficient {
        u: String,
        v: String,
        a: String,
        k: u32,
        #[serde(default)]
        search: SearchConfig,
    },
    /// Doubling-class membership of a weight.
    Doubling {
        w: String,
        #[serde(default)]
        min_length: f64,
        #[serde(default)]
        sampling: SamplingConfig,
    },
    /// Splitting report of a full operator.
    Operator {
        coefficients: Vec<String>,
        u: String,
        v: String,
        #[serde(default)]
        search: SearchConfig,
        #[serde(default)]
        ladder: LadderParams,
        #[serde(default = "default_rtol")]
        rtol: f64,
    },
    /// Non-degeneracy scan of the moment system of a weight.
    Gram {
        u: String,
        degree: u32,
        #[serde(default = "default_r_min")]
        r_min: f64,
        #[serde(default = "default_r_max")]
        r_max: f64,
        #[serde(default = "default_gram_samples")]
        samples: usize,
        #[serde(default = "default_tol")]
        tol: f64,
    },
    /// Multiplier verdict between weighted Sobolev spaces.
    Multiplier {
        phi: String,
        u: String,
        v: String,
        source_order: u32,
        target_order: u32,
        #[serde(default = "default_tol")]
        tol: f64,
        #[serde(default)]
        search: SearchConfig,
        #[serde(default)]
        sampling: SamplingConfig,
    },
    /// Residual of the derivative expansion identity.
    Expansion {
        phi: String,
        g: String,
        source_order: u32,
        target_order: u32,
        #[serde(default = "default_points")]
        points: Vec<f64>,
    },
}

fn default_tol() -> f64 {
    DEFAULT_TOL
}

fn default_rtol() -> f64 {
    1e-3
}

fn default_r_min() -> f64 {
    1e-3
}

fn default_r_max() -> f64 {
    1e3
}

fn default_gram_samples() -> usize {
    60
}

fn default_points() -> Vec<f64> {
    vec![0.5, 1.0, 3.0]
}

impl JobConfig {
    pub fn load(path: &Path) -> Result<JobConfig> {
        let text = fs::read_to_string(path)?;
        toml::from_str(&text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            JobConfig::Hardy { .. } => "hardy",
            JobConfig::Coefficient { .. } => "coefficient",
            JobConfig::Doubling { .. } => "doubling",
            JobConfig::Operator { .. } => "operator",
            JobConfig::Gram { .. } => "gram",
            JobConfig::Multiplier { .. } => "multiplier",
            JobConfig::Expansion { .. } => "expansion",
        }
    }

    /// A runnable default configuration for the given kind, as used by the
    /// `dump-defaults` subcommand.
    pub fn defaults_for(kind: &str) -> Result<JobConfig> {
        match kind {
            "hardy" => Ok(JobConfig::Hardy {
                v1: "x^(-1)".into(),
                u1: "1".into(),
                tol: DEFAULT_TOL,
                search: SearchConfig::default(),
            }),
            "coefficient" => Ok(JobConfig::Coefficient {
                u: "1".into(),
                v: "1".into(),
                a: "x^(-1)".into(),
                k: 0,
                search: SearchConfig::default(),
            }),
            "doubling" => Ok(JobConfig::Doubling {
                w: "1".into(),
                min_length: 0.0,
                sampling: SamplingConfig::default(),
            }),
            "operator" => Ok(JobConfig::Operator {
                coefficients: vec!["x^(-1)".into(), "x^(-2)".into()],
                u: "1".into(),
                v: "1".into(),
                search: SearchConfig::default(),
                ladder: LadderParams::default(),
                rtol: default_rtol(),
            }),
            "gram" => Ok(JobConfig::Gram {
                u: "1".into(),
                degree: 2,
                r_min: default_r_min(),
                r_max: default_r_max(),
                samples: default_gram_samples(),
                tol: DEFAULT_TOL,
            }),
            "multiplier" => Ok(JobConfig::Multiplier {
                phi: "exp(-x)".into(),
                u: "1".into(),
                v: "1".into(),
                source_order: 1,
                target_order: 1,
                tol: DEFAULT_TOL,
                search: SearchConfig::default(),
                sampling: SamplingConfig::default(),
            }),
            "expansion" => Ok(JobConfig::Expansion {
                phi: "x^2".into(),
                g: "x^2*(2 + x)".into(),
                source_order: 2,
                target_order: 1,
                points: default_points(),
            }),
            other => Err(Error::Config(format!(
                "unknown job kind '{other}'; expected one of hardy, coefficient, doubling, \
                 operator, gram, multiplier, expansion"
            ))),
        }
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string_pretty(self).map_err(|e| Error::Config(e.to_string()))
    }
}

/// Result of a finished job.
#[derive(Debug)]
pub struct JobOutcome {
    /// The analysis answered "divergent"/"not a member"/"not a multiplier" —
    /// a valid result mapped to exit code 2.
    pub divergent: bool,
    pub report: String,
    pub files: Vec<PathBuf>,
}

fn parse_expr(field: &str, src: &str) -> Result<Expression> {
    Expression::parse(src)
        .map_err(|e| Error::Config(format!("expression field '{field}' = \"{src}\": {e}")))
}

/// Write samples as CSV: a header row, one sample per line, every value with
/// 17 significant digits, LF line endings.
pub fn emit_csv(path: &Path, header: &[&str], rows: &[Vec<f64>]) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::Config(format!(
            "refusing to write empty profile {}",
            path.display()
        )));
    }
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        debug_assert_eq!(row.len(), header.len());
        let line: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    fs::write(path, out)?;
    Ok(())
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Finite => "finite",
        Verdict::Infinite => "infinite",
    }
}

fn fmt_value(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.6} ({v:.16e})")
    } else {
        format!("{v}")
    }
}

fn hardy_report(title: &str, lines: &mut String, result: &hardy::HardyResult) {
    let _ = writeln!(lines, "supremum: {}", fmt_value(result.supremum));
    let _ = writeln!(lines, "verdict: {}", verdict_name(result.verdict));
    if let Some(r) = result.argmax_r {
        let _ = writeln!(lines, "argmax_r: {}", fmt_value(r));
    }
    let _ = writeln!(
        lines,
        "boundary_slopes: {:.6} {:.6}",
        result.boundary_slopes.0, result.boundary_slopes.1
    );
    let _ = writeln!(lines, "profile_samples: {}", result.profile.len());
    let _ = writeln!(lines, "profile_csv: {title}");
}

/// Run one job, writing `report.txt` and the kind's CSV profiles under
/// `out_dir` (created if missing).
pub fn run(config: &JobConfig, out_dir: &Path) -> Result<JobOutcome> {
    fs::create_dir_all(out_dir)?;
    let mut report = String::new();
    let mut files = Vec::new();
    let _ = writeln!(report, "kind: {}", config.kind_name());

    let divergent = match config {
        JobConfig::Hardy {
            v1,
            u1,
            tol,
            search,
        } => {
            let v1e = parse_expr("v1", v1)?;
            let u1e = parse_expr("u1", u1)?;
            let result = hardy::hardy_constant(&v1e, &u1e, search, *tol)?;
            let _ = writeln!(report, "v1: {v1}");
            let _ = writeln!(report, "u1: {u1}");
            hardy_report("profile.csv", &mut report, &result);
            let csv = out_dir.join("profile.csv");
            let rows: Vec<Vec<f64>> = result.profile.iter().map(|&(r, f)| vec![r, f]).collect();
            emit_csv(&csv, &["r", "value"], &rows)?;
            files.push(csv);
            result.verdict == Verdict::Infinite
        }
        JobConfig::Coefficient { u, v, a, k, search } => {
            let ue = parse_expr("u", u)?;
            let ve = parse_expr("v", v)?;
            let ae = parse_expr("a", a)?;
            let result = hardy::coefficient_constant(&ue, &ve, &ae, *k, search)?;
            let _ = writeln!(report, "u: {u}");
            let _ = writeln!(report, "v: {v}");
            let _ = writeln!(report, "a: {a}");
            let _ = writeln!(report, "k: {k}");
            hardy_report("profile.csv", &mut report, &result);
            let csv = out_dir.join("profile.csv");
            let rows: Vec<Vec<f64>> = result.profile.iter().map(|&(r, f)| vec![r, f]).collect();
            emit_csv(&csv, &["r", "value"], &rows)?;
            files.push(csv);
            result.verdict == Verdict::Infinite
        }
        JobConfig::Doubling {
            w,
            min_length,
            sampling,
        } => {
            let we = parse_expr("w", w)?;
            let result = hardy::doubling_constant(&we, *min_length, sampling)?;
            let _ = writeln!(report, "w: {w}");
            let _ = writeln!(report, "min_length: {min_length}");
            let _ = writeln!(
                report,
                "constant_estimate: {}",
                fmt_value(result.constant_estimate)
            );
            let _ = writeln!(report, "member: {}", result.member);
            let _ = writeln!(
                report,
                "worst_interval: center {} length {}",
                fmt_value(result.worst_interval.0),
                fmt_value(result.worst_interval.1)
            );
            let csv = out_dir.join("ratios.csv");
            let rows: Vec<Vec<f64>> = result
                .growth_evidence
                .iter()
                .map(|s| vec![s.length, s.ratio])
                .collect();
            emit_csv(&csv, &["length", "max_ratio"], &rows)?;
            files.push(csv);
            !result.member
        }
        JobConfig::Operator {
            coefficients,
            u,
            v,
            search,
            ladder,
            rtol,
        } => {
            let coeffs: Vec<Expression> = coefficients
                .iter()
                .enumerate()
                .map(|(k, src)| parse_expr(&format!("coefficients[{k}]"), src))
                .collect::<Result<_>>()?;
            let spec = OperatorSpec::new(coeffs)?;
            let ue = parse_expr("u", u)?;
            let ve = parse_expr("v", v)?;
            let grids = ladder.grids()?;
            let result = operator::splitting_report(&spec, &ue, &ve, search, &grids, *rtol)?;
            let _ = writeln!(report, "degree: {}", spec.degree());
            let _ = writeln!(report, "u: {u}");
            let _ = writeln!(report, "v: {v}");
            for (k, s) in result.s_values.iter().enumerate() {
                let _ = writeln!(
                    report,
                    "criterion_constant[{k}]: {} ({})",
                    fmt_value(s.supremum),
                    verdict_name(s.verdict)
                );
            }
            let _ = writeln!(report, "criterion_sum: {}", fmt_value(result.sum_s));
            let _ = writeln!(
                report,
                "whole_norm: {} (ladder converged: {})",
                fmt_value(result.whole_norm.value),
                result.whole_norm.converged
            );
            for (k, c) in result.component_norms.iter().enumerate() {
                let _ = writeln!(report, "component_norm[{k}]: {}", fmt_value(c.value));
            }
            let _ = writeln!(report, "sandwich_upper_ok: {}", result.sandwich_upper_ok);
            if let Some(ratio) = result.empirical_lower_ratio {
                let _ = writeln!(report, "empirical_lower_ratio: {}", fmt_value(ratio));
            }
            if !result.divergence_profile.is_empty() {
                let _ = writeln!(
                    report,
                    "divergence_slope: {:.6}",
                    operator::divergence_slope(&result.divergence_profile)
                );
            }
            for (k, ok) in result.head_square_integrable.iter().enumerate() {
                let _ = writeln!(report, "head_square_integrable[{k}]: {ok}");
            }
            let csv = out_dir.join("ladder.csv");
            let rows: Vec<Vec<f64>> = result
                .whole_ladder
                .iter()
                .map(|e| vec![e.grid.x_max, e.value])
                .collect();
            emit_csv(&csv, &["x_max", "norm"], &rows)?;
            files.push(csv);
            !result.sum_s.is_finite()
        }
        JobConfig::Gram {
            u,
            degree,
            r_min,
            r_max,
            samples,
            tol,
        } => {
            let ue = parse_expr("u", u)?;
            let profile = gram::nondegeneracy_scan(&ue, *degree, (*r_min, *r_max), *samples, *tol)?;
            let _ = writeln!(report, "u: {u}");
            let _ = writeln!(report, "degree: {degree}");
            let _ = writeln!(report, "inf_ratio: {}", fmt_value(profile.inf_ratio));
            let _ = writeln!(report, "suggested_r0: {}", fmt_value(profile.suggested_r0));
            let _ = writeln!(
                report,
                "profile_slope: {:.6}",
                gram::profile_slope(&profile)
            );
            let csv = out_dir.join("profile.csv");
            let rows: Vec<Vec<f64>> = profile
                .samples
                .iter()
                .map(|s| vec![s.r, s.rho, s.sin_theta, s.ln_det])
                .collect();
            emit_csv(&csv, &["r", "rho", "sin_theta", "ln_det"], &rows)?;
            files.push(csv);
            false
        }
        JobConfig::Multiplier {
            phi,
            u,
            v,
            source_order,
            target_order,
            tol,
            search,
            sampling,
        } => {
            let problem = MultiplierProblem::new(
                parse_expr("phi", phi)?,
                parse_expr("u", u)?,
                parse_expr("v", v)?,
                *source_order,
                *target_order,
            )?;
            let result = multiplier::multiplier_verdict(&problem, search, sampling, *tol)?;
            let _ = writeln!(report, "phi: {phi}");
            let _ = writeln!(report, "u: {u}");
            let _ = writeln!(report, "v: {v}");
            let _ = writeln!(report, "source_order: {source_order}");
            let _ = writeln!(report, "target_order: {target_order}");
            let mut rows = Vec::new();
            for (d, t) in result
                .derivative_norms
                .iter()
                .zip(&result.tail_head_suprema)
            {
                let _ = writeln!(
                    report,
                    "derivative_norm[{}]: {} ({})",
                    d.k,
                    fmt_value(d.value),
                    if d.finite { "finite" } else { "infinite" }
                );
                let _ = writeln!(
                    report,
                    "tail_head_sup[{}]: {} ({})",
                    t.k,
                    fmt_value(t.value),
                    if t.finite { "finite" } else { "infinite" }
                );
                rows.push(vec![f64::from(d.k), d.value, t.value]);
            }
            if let Some(sup) = result.ratio_sup {
                let _ = writeln!(report, "weight_ratio_sup: {}", fmt_value(sup));
            }
            let _ = writeln!(
                report,
                "verdict: {}",
                if result.verdict {
                    "multiplier"
                } else {
                    "not a multiplier"
                }
            );
            let _ = writeln!(
                report,
                "side_condition_source_doubling: {} (estimate {})",
                result.side_conditions.source_doubling,
                fmt_value(result.side_conditions.source_doubling_estimate)
            );
            for (r, ok) in &result.side_conditions.target_inverse_integrable {
                let _ = writeln!(report, "side_condition_target_inverse_l2_on_(0,{r}): {ok}");
            }
            let csv = out_dir.join("conditions.csv");
            emit_csv(&csv, &["k", "derivative_norm", "tail_head_sup"], &rows)?;
            files.push(csv);
            !result.verdict
        }
        JobConfig::Expansion {
            phi,
            g,
            source_order,
            target_order,
            points,
        } => {
            let phie = parse_expr("phi", phi)?;
            let ge = parse_expr("g", g)?;
            let residual =
                multiplier::expansion_residual(&phie, &ge, *source_order, *target_order, points)?;
            let _ = writeln!(report, "phi: {phi}");
            let _ = writeln!(report, "g: {g}");
            let _ = writeln!(report, "source_order: {source_order}");
            let _ = writeln!(report, "target_order: {target_order}");
            let _ = writeln!(report, "points: {points:?}");
            let _ = writeln!(report, "residual: {}", fmt_value(residual));
            false
        }
    };

    let report_path = out_dir.join("report.txt");
    fs::write(&report_path, &report)?;
    files.push(report_path);
    Ok(JobOutcome {
        divergent,
        report,
        files,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_format_is_pinned_bytewise() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("one.csv");
        emit_csv(&path, &["r", "value"], &[vec![1.0, 0.5]]).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(
            text,
            "r,value\n1.0000000000000000e0,5.0000000000000000e-1\n"
        );
    }

    #[test]
    fn csv_rejects_empty_profiles() {
        let dir = tempfile::tempdir().unwrap();
        assert!(emit_csv(&dir.path().join("x.csv"), &["a"], &[]).is_err());
    }

    #[test]
    fn csv_line_count_is_header_plus_rows() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("three.csv");
        let rows = vec![vec![1.0, 2.0], vec![3.0, 4.0], vec![5.0, 6.0]];
        emit_csv(&path, &["a", "b"], &rows).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert!(text.ends_with('\n'));
        assert!(!text.contains('\r'));
    }

    #[test]
    fn defaults_round_trip_through_toml() {
        for kind in [
            "hardy",
            "coefficient",
            "doubling",
            "operator",
            "gram",
            "multiplier",
            "expansion",
        ] {
            let config = JobConfig::defaults_for(kind).unwrap();
            let text = config.to_toml().unwrap();
            let reparsed: JobConfig =
                toml::from_str(&text).unwrap_or_else(|e| panic!("{kind}: {e}\n{text}"));
            let text2 = reparsed.to_toml().unwrap();
            assert_eq!(text, text2, "{kind} does not round-trip");
        }
        assert!(JobConfig::defaults_for("nonsense").is_err());
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = "kind = \"hardy\"\nv1 = \"1\"\nu1 = \"1\"\nbogus = 3\n";
        assert!(toml::from_str::<JobConfig>(text).is_err());
    }

    #[test]
    fn expansion_job_runs_end_to_end() {
        let dir = tempfile::tempdir().unwrap();
        let config = JobConfig::defaults_for("expansion").unwrap();
        let outcome = run(&config, dir.path()).unwrap();
        assert!(!outcome.divergent);
        assert!(outcome.report.contains("residual:"));
        assert!(dir.path().join("report.txt").exists());
    }
}
