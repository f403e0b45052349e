//! Bath-temperature estimation from measured single-photon reflection.
//!
//! The probe is first equilibrated with the bath; a photon (or Lorentzian
//! pulse) is then scattered and its reflection probability measured. Because
//! `R` is unimodal in `x = ⟨σ₁ᶻ⟩`, one reading can map to two temperatures,
//! one on each side of the complete-reflection point. Readings at a second
//! carrier detuning pick the common one.
//!
//! Every candidate carries the interval of temperatures whose forward
//! reflection is within `sigma` of the reading. On flat parts of the curve
//! (for instance `Δ = J` at `θ → 0`, where `x` saturates at −1) that interval
//! is wide, and disambiguation matches candidates by interval overlap as well
//! as by relative distance.

use crate::error::{Error, Result};
use crate::grid::logspace;
use crate::lindblad::{self, DensityMatrix, EvolutionConfig};
use crate::params::ModelParams;
use crate::pulse::{self, PulseSpec, QuadratureConfig};
use crate::roots;
use crate::thermal;

pub const DEFAULT_MERGE_TOL: f64 = 1e-4;
/// Default absolute uncertainty of a reflection reading.
pub const DEFAULT_SIGMA: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    BelowPeak,
    Peak,
    AbovePeak,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::BelowPeak => "below-peak",
            Branch::Peak => "peak",
            Branch::AbovePeak => "above-peak",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Candidate {
    pub theta: f64,
    pub branch: Branch,
    /// Temperatures whose forward reflection lies within `sigma` of the reading.
    pub interval: (f64, f64),
    /// Forward reflection at `theta` minus the reading.
    pub residual: f64,
    /// `dR/dθ` at `theta`.
    pub sensitivity: f64,
}

impl Candidate {
    fn relative_width(&self) -> f64 {
        (self.interval.1 - self.interval.0) / self.theta.max(f64::MIN_POSITIVE)
    }

    /// Two candidates describe the same temperature when they are within
    /// `merge_tol` of each other (relative) or their intervals overlap.
    pub fn matches(&self, other: &Candidate, merge_tol: f64) -> bool {
        let close = (self.theta - other.theta).abs() <= merge_tol * self.theta.max(other.theta);
        let overlap = self.interval.0 <= other.interval.1 && other.interval.0 <= self.interval.1;
        close || overlap
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TemperatureEstimate {
    pub measured: f64,
    /// Sorted by ascending temperature.
    pub candidates: Vec<Candidate>,
    pub selected: Option<f64>,
}

impl TemperatureEstimate {
    fn from_candidates(measured: f64, mut candidates: Vec<Candidate>) -> Self {
        candidates.sort_by(|a, b| a.theta.total_cmp(&b.theta));
        let selected = match candidates.as_slice() {
            [only] => Some(only.theta),
            _ => None,
        };
        TemperatureEstimate {
            measured,
            candidates,
            selected,
        }
    }

    pub fn thetas(&self) -> Vec<f64> {
        self.candidates.iter().map(|c| c.theta).collect()
    }

    pub fn selected_candidate(&self) -> Option<&Candidate> {
        let theta = self.selected?;
        self.candidates.iter().find(|c| c.theta == theta)
    }
}

fn check_reading(r: f64, allow_zero: bool) -> Result<()> {
    let ok = if allow_zero {
        (0.0..=1.0).contains(&r)
    } else {
        r > 0.0 && r <= 1.0
    };
    if ok {
        Ok(())
    } else if allow_zero {
        Err(Error::domain(format!("reflection must lie in [0, 1], got {r}")))
    } else {
        Err(Error::domain(format!("reflection must lie in (0, 1], got {r}")))
    }
}

fn theta_of_x_clipped(x: f64) -> f64 {
    if x <= -1.0 {
        0.0
    } else if x >= 0.0 {
        f64::INFINITY
    } else {
        0.5 / (-x).atanh()
    }
}

/// Monochromatic `R` at temperature `θ` in reduced variables.
pub fn monochromatic_reflection(theta: f64, x0: f64, reduced_gamma: f64) -> Result<f64> {
    let x = thermal::sigma1z_thermal(theta)?;
    let d = x - x0;
    let g2 = reduced_gamma * reduced_gamma;
    Ok(g2 / (d * d + g2))
}

/// Analytic `dR/dθ` for monochromatic light, using `dx/dθ = (1 − x²)/(2θ²)`.
pub fn monochromatic_sensitivity(theta: f64, x0: f64, reduced_gamma: f64) -> Result<f64> {
    let x = thermal::sigma1z_thermal(theta)?;
    if theta == 0.0 {
        return Ok(0.0);
    }
    let dx = (1.0 - x) * (1.0 + x) / (2.0 * theta * theta);
    let d = x - x0;
    let g2 = reduced_gamma * reduced_gamma;
    let denom = d * d + g2;
    Ok(-2.0 * d * g2 / (denom * denom) * dx)
}

pub fn invert_monochromatic(r_meas: f64, x0: f64, reduced_gamma: f64) -> Result<TemperatureEstimate> {
    invert_monochromatic_with_sigma(r_meas, DEFAULT_SIGMA, x0, reduced_gamma)
}

/// Algebraic inversion `x = x₀ ± Γ √((1 − R)/R)`, keeping physical roots.
///
/// The reading interval `[R − σ, R + σ]` is mapped onto each branch to give
/// the candidate's temperature interval.
pub fn invert_monochromatic_with_sigma(
    r_meas: f64,
    sigma: f64,
    x0: f64,
    reduced_gamma: f64,
) -> Result<TemperatureEstimate> {
    check_reading(r_meas, false)?;
    if !(reduced_gamma.is_finite() && reduced_gamma > 0.0) {
        return Err(Error::domain(format!(
            "reduced gamma must be > 0, got {reduced_gamma}"
        )));
    }
    if !(sigma.is_finite() && sigma >= 0.0) {
        return Err(Error::domain(format!("sigma must be >= 0, got {sigma}")));
    }
    let offset = |r: f64| reduced_gamma * ((1.0 - r) / r).sqrt();
    let half = offset(r_meas);
    let far = offset((r_meas - sigma).max(f64::MIN_POSITIVE));
    let near = offset((r_meas + sigma).min(1.0));

    let mut roots = Vec::with_capacity(2);
    if half == 0.0 {
        roots.push((x0, Branch::Peak, (x0 - far, x0 + far)));
    } else {
        roots.push((x0 - half, Branch::BelowPeak, (x0 - far, x0 - near)));
        roots.push((x0 + half, Branch::AbovePeak, (x0 + near, x0 + far)));
    }

    let mut candidates = Vec::new();
    for (x, branch, (x_lo, x_hi)) in roots {
        if !(-1.0..0.0).contains(&x) {
            continue;
        }
        let theta = thermal::theta_from_sigma1z(x)?;
        candidates.push(Candidate {
            theta,
            branch,
            interval: (theta_of_x_clipped(x_lo), theta_of_x_clipped(x_hi)),
            residual: monochromatic_reflection(theta, x0, reduced_gamma)? - r_meas,
            sensitivity: monochromatic_sensitivity(theta, x0, reduced_gamma)?,
        });
    }
    Ok(TemperatureEstimate::from_candidates(r_meas, candidates))
}

/// Central finite-difference `dR/dθ` of the pulse reflection with step
/// `h = max(1e−6, 1e−4 θ)`.
pub fn sensitivity(
    theta: f64,
    pulse: &PulseSpec,
    params: &ModelParams,
    quad: &QuadratureConfig,
) -> Result<f64> {
    if !(theta.is_finite() && theta > 0.0) {
        return Err(Error::domain(format!("sensitivity needs theta > 0, got {theta}")));
    }
    let h = (1e-4 * theta).max(1e-6);
    let r = |t: f64| pulse::pulse_reflection(pulse, params, t, quad).map(|p| p.value);
    if theta - h <= 0.0 {
        return Ok((r(theta + h)? - r(theta)?) / h);
    }
    Ok((r(theta + h)? - r(theta - h)?) / (2.0 * h))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InversionConfig {
    pub theta_min: f64,
    pub theta_max: f64,
    /// Points of the logarithmic scan used to split the curve into monotone
    /// pieces.
    pub grid_points: usize,
    /// Absolute uncertainty of the reading; reflection differences below it
    /// are treated as flat.
    pub sigma: f64,
    pub quad: QuadratureConfig,
}

impl Default for InversionConfig {
    fn default() -> Self {
        InversionConfig {
            theta_min: 1e-3,
            theta_max: 1e3,
            grid_points: 400,
            sigma: DEFAULT_SIGMA,
            quad: QuadratureConfig {
                abs_tol: 1e-13,
                ..QuadratureConfig::default()
            },
        }
    }
}

impl InversionConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.theta_min > 0.0 && self.theta_max > self.theta_min && self.theta_max.is_finite()) {
            return Err(Error::config(
                "theta_min",
                format!(
                    "need 0 < theta_min < theta_max, got [{}, {}]",
                    self.theta_min, self.theta_max
                ),
            ));
        }
        if self.grid_points < 3 {
            return Err(Error::config("grid_points", "must be >= 3"));
        }
        if !(self.sigma.is_finite() && self.sigma > 0.0) {
            return Err(Error::config("sigma", format!("must be > 0, got {}", self.sigma)));
        }
        self.quad.validate()
    }
}

/// Numerical inversion of the pulse reflection curve.
///
/// A logarithmic scan splits `R(θ)` into monotone pieces (interior extrema are
/// refined by golden-section search); each piece that brackets the reading is
/// bisected in `ln θ` to floating-point resolution.
pub fn invert_pulse(
    r_meas: f64,
    pulse: &PulseSpec,
    params: &ModelParams,
    config: &InversionConfig,
) -> Result<TemperatureEstimate> {
    check_reading(r_meas, true)?;
    config.validate()?;
    params.validate()?;
    let tol = config.sigma;
    let forward = |log_theta: f64| -> Result<f64> {
        let theta = log_theta.exp();
        pulse::pulse_reflection(pulse, params, theta, &config.quad)
            .map(|p| p.value)
            .map_err(|e| e.at_theta(theta))
    };

    let grid: Vec<f64> = logspace(config.theta_min, config.theta_max, config.grid_points)
        .into_iter()
        .map(f64::ln)
        .collect();
    let values = grid.iter().map(|&l| forward(l)).collect::<Result<Vec<_>>>()?;
    let last = grid.len() - 1;

    // Piece boundaries as (ln θ, R).
    let mut nodes = vec![(grid[0], values[0])];
    let mut direction = 0i8;
    let mut run_start = 0usize;
    for i in 0..last {
        let diff = values[i + 1] - values[i];
        let step = if diff > tol {
            1
        } else if diff < -tol {
            -1
        } else {
            0
        };
        if step == 0 {
            continue;
        }
        if direction != 0 && step != direction {
            let sign = f64::from(direction);
            let k = (run_start..=i)
                .max_by(|&a, &b| (sign * values[a]).total_cmp(&(sign * values[b])))
                .expect("non-empty run");
            let (lo, hi) = (grid[k.saturating_sub(1)], grid[(k + 1).min(last)]);
            let (mut at, mut best) = roots::golden_max(|l| Ok(sign * forward(l)?), lo, hi, 1e-12)?;
            best *= sign;
            if sign * best < sign * values[k] {
                at = grid[k];
                best = values[k];
            }
            if at > nodes.last().expect("seeded").0 && at < grid[last] {
                nodes.push((at, best));
            }
        }
        direction = step;
        run_start = i + 1;
    }
    nodes.push((grid[last], values[last]));

    let all = values.iter().chain(nodes.iter().map(|(_, r)| r));
    let min = all.clone().copied().fold(f64::INFINITY, f64::min);
    let max = all.copied().fold(f64::NEG_INFINITY, f64::max);
    if r_meas < min - tol || r_meas > max + tol {
        return Err(Error::NoSolution {
            measured: r_meas,
            min,
            max,
        });
    }
    let peak = nodes
        .iter()
        .copied()
        .chain(grid.iter().copied().zip(values.iter().copied()))
        .fold(
            (grid[0], f64::NEG_INFINITY),
            |acc, (l, r)| if r > acc.1 { (l, r) } else { acc },
        )
        .0;

    let residual = |l: f64| Ok(forward(l)? - r_meas);
    let mut found: Vec<(f64, usize)> = Vec::new();
    for (piece, w) in nodes.windows(2).enumerate() {
        let ((la, ra), (lb, rb)) = (w[0], w[1]);
        let (da, db) = (ra - r_meas, rb - r_meas);
        let root = if da == 0.0 {
            la
        } else if db == 0.0 {
            lb
        } else if da.signum() != db.signum() {
            roots::bisect(residual, la, lb, da, db)?
        } else if da.abs() <= tol || db.abs() <= tol {
            if da.abs() <= db.abs() {
                la
            } else {
                lb
            }
        } else {
            continue;
        };
        if !found.iter().any(|&(l, _)| (l - root).abs() <= 1e-12) {
            found.push((root, piece));
        }
    }
    if found.is_empty() {
        return Err(Error::NoSolution {
            measured: r_meas,
            min,
            max,
        });
    }

    let mut candidates = Vec::with_capacity(found.len());
    for (root, piece) in found {
        let (la, lb) = (nodes[piece].0, nodes[piece + 1].0);
        let gap = |l: f64| Ok((forward(l)? - r_meas).abs() - tol);
        let edge = |end: f64| -> Result<f64> {
            let (g_root, g_end) = (gap(root)?, gap(end)?);
            if g_end <= 0.0 {
                Ok(end)
            } else if g_root > 0.0 {
                Ok(root)
            } else {
                roots::bisect(gap, root, end, g_root, g_end)
            }
        };
        let (lo, hi) = (edge(la)?, edge(lb)?);
        let theta = root.exp();
        let branch = if (root - peak).abs() <= 1e-9 {
            Branch::Peak
        } else if root < peak {
            Branch::BelowPeak
        } else {
            Branch::AbovePeak
        };
        candidates.push(Candidate {
            theta,
            branch,
            interval: (lo.exp(), hi.exp()),
            residual: residual(root)?,
            sensitivity: sensitivity(theta, pulse, params, &config.quad)?,
        });
    }
    Ok(TemperatureEstimate::from_candidates(r_meas, candidates))
}

/// Selects the temperature common to estimates taken at different carriers.
pub fn disambiguate(estimates: &[TemperatureEstimate], merge_tol: f64) -> Result<TemperatureEstimate> {
    if estimates.len() < 2 {
        return Err(Error::domain("disambiguation needs at least two estimates"));
    }
    if !(merge_tol.is_finite() && merge_tol >= 0.0) {
        return Err(Error::domain(format!(
            "merge tolerance must be >= 0, got {merge_tol}"
        )));
    }
    let mut common: Vec<Candidate> = Vec::new();
    for (i, estimate) in estimates.iter().enumerate() {
        for anchor in &estimate.candidates {
            let mut members = vec![*anchor];
            let mut everywhere = true;
            for (j, other) in estimates.iter().enumerate() {
                if i == j {
                    continue;
                }
                let matching: Vec<_> = other
                    .candidates
                    .iter()
                    .filter(|c| anchor.matches(c, merge_tol))
                    .copied()
                    .collect();
                if matching.is_empty() {
                    everywhere = false;
                    break;
                }
                members.extend(matching);
            }
            if !everywhere {
                continue;
            }
            let best = members
                .into_iter()
                .min_by(|a, b| a.relative_width().total_cmp(&b.relative_width()))
                .expect("anchor is a member");
            if !common.iter().any(|c| c.matches(&best, merge_tol)) {
                common.push(best);
            }
        }
    }
    match common.len() {
        0 => Err(Error::Inconsistent),
        1 => Ok(TemperatureEstimate::from_candidates(
            estimates[0].measured,
            common,
        )),
        _ => {
            let mut thetas: Vec<f64> = common.iter().map(|c| c.theta).collect();
            thetas.sort_by(f64::total_cmp);
            Err(Error::Ambiguous { candidates: thetas })
        }
    }
}

/// Time for the probe, starting in `|g₁g₂⟩`, to reach the steady state.
pub fn equilibration_time(params: &ModelParams, theta: f64, config: &EvolutionConfig) -> Result<Option<f64>> {
    Ok(lindblad::evolve(&DensityMatrix::ground(), params, theta, config)?.steady_at)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn pulse_params(gamma: f64) -> ModelParams {
        ModelParams::dimensionless(gamma).unwrap()
    }

    fn forward(theta: f64, delta: f64, gamma: f64) -> f64 {
        let pulse = PulseSpec::with_width_ratio(delta, gamma, 20.0).unwrap();
        let quad = InversionConfig::default().quad;
        pulse::pulse_reflection(&pulse, &pulse_params(gamma), theta, &quad)
            .unwrap()
            .value
    }

    fn invert(r: f64, delta: f64, gamma: f64) -> Result<TemperatureEstimate> {
        let pulse = PulseSpec::with_width_ratio(delta, gamma, 20.0).unwrap();
        invert_pulse(r, &pulse, &pulse_params(gamma), &InversionConfig::default())
    }

    fn point(theta: f64) -> Candidate {
        Candidate {
            theta,
            branch: Branch::BelowPeak,
            interval: (theta, theta),
            residual: 0.0,
            sensitivity: 0.0,
        }
    }

    fn estimate(thetas: &[f64]) -> TemperatureEstimate {
        TemperatureEstimate::from_candidates(0.5, thetas.iter().map(|&t| point(t)).collect())
    }

    #[test]
    fn mono_full_reflection_single_candidate() {
        let e = invert_monochromatic(1.0, -0.5f64.tanh(), 0.1).unwrap();
        assert_eq!(e.candidates.len(), 1);
        assert_eq!(e.candidates[0].branch, Branch::Peak);
        assert_relative_eq!(e.candidates[0].theta, 1.0, max_relative = 1e-12);
        assert_eq!(e.selected, Some(e.candidates[0].theta));
    }

    #[test]
    fn mono_half_maximum_two_candidates() {
        let e = invert_monochromatic(0.5, -0.5, 0.1).unwrap();
        let xs: Vec<f64> = e
            .thetas()
            .iter()
            .map(|&t| thermal::sigma1z_thermal(t).unwrap())
            .collect();
        assert_eq!(xs.len(), 2);
        // ascending θ means ascending x
        assert!((xs[0] + 0.6).abs() < 1e-12);
        assert!((xs[1] + 0.4).abs() < 1e-12);
        assert_eq!(e.candidates[0].branch, Branch::BelowPeak);
        assert_eq!(e.candidates[1].branch, Branch::AbovePeak);
        assert_eq!(e.selected, None);
    }

    #[test]
    fn mono_unphysical_root_dropped() {
        let e = invert_monochromatic(0.2, 0.0, 0.1).unwrap();
        assert_eq!(e.candidates.len(), 1);
        assert_relative_eq!(
            e.candidates[0].theta,
            2.466_303_462_376_431_7,
            max_relative = 1e-12
        );
        let none = invert_monochromatic(0.01, 2.0, 0.1).unwrap();
        assert!(none.candidates.is_empty());
    }

    #[test]
    fn mono_reading_domain() {
        assert!(matches!(
            invert_monochromatic(0.0, -0.5, 0.1),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            invert_monochromatic(1.5, -0.5, 0.1),
            Err(Error::Domain(_))
        ));
        assert!(invert_monochromatic(0.5, -0.5, 0.0).is_err());
    }

    #[test]
    fn mono_interval_contains_candidate() {
        let e = invert_monochromatic_with_sigma(0.3, 1e-3, -0.4, 0.1).unwrap();
        for c in &e.candidates {
            assert!(c.interval.0 < c.theta && c.theta < c.interval.1, "{c:?}");
            for end in [c.interval.0, c.interval.1] {
                let r = monochromatic_reflection(end, -0.4, 0.1).unwrap();
                assert!((r - 0.3).abs() < 1e-3 + 1e-12);
            }
        }
    }

    #[test]
    fn mono_sensitivity_vanishes_at_peak_and_matches_difference() {
        let x0 = -0.3f64;
        let peak = thermal::theta_from_sigma1z(x0).unwrap();
        assert!(monochromatic_sensitivity(peak, x0, 0.05).unwrap().abs() < 1e-9);
        let theta = 0.9;
        let h = 1e-6;
        let fd = (monochromatic_reflection(theta + h, x0, 0.05).unwrap()
            - monochromatic_reflection(theta - h, x0, 0.05).unwrap())
            / (2.0 * h);
        assert_relative_eq!(
            monochromatic_sensitivity(theta, x0, 0.05).unwrap(),
            fd,
            max_relative = 1e-6
        );
    }

    #[test]
    fn pulse_round_trip_monotone_curve() {
        let r = forward(0.3, 1.0, 0.1);
        let e = invert(r, 1.0, 0.1).unwrap();
        assert_eq!(e.candidates.len(), 1, "{e:?}");
        assert_relative_eq!(e.selected.unwrap(), 0.3, max_relative = 1e-6);
        assert!(e.candidates[0].residual.abs() < 1e-9);
    }

    #[test]
    fn pulse_round_trip_two_branches() {
        let r = forward(2.0, 0.5, 0.1);
        let e = invert(r, 0.5, 0.1).unwrap();
        assert_eq!(e.candidates.len(), 2, "{e:?}");
        assert!(e.thetas().iter().any(|&t| ((t - 2.0) / 2.0).abs() < 1e-6));
        assert_eq!(e.candidates[0].branch, Branch::BelowPeak);
        assert_eq!(e.candidates[1].branch, Branch::AbovePeak);
        for c in &e.candidates {
            assert!((forward(c.theta, 0.5, 0.1) - r).abs() < 1e-9);
        }
    }

    #[test]
    fn pulse_reading_outside_range() {
        assert!(matches!(invert(1.5, 1.0, 0.1), Err(Error::Domain(_))));
        match invert(0.0, 1.0, 0.1) {
            Err(Error::NoSolution { min, max, .. }) => assert!(0.0 < min && min < max && max <= 1.0),
            other => panic!("expected no solution, got {other:?}"),
        }
    }

    #[test]
    fn dual_carrier_selects_common_temperature() {
        let estimates: Vec<_> = [0.5, 1.0]
            .iter()
            .map(|&d| invert(forward(2.0, d, 0.1), d, 0.1).unwrap())
            .collect();
        let chosen = disambiguate(&estimates, DEFAULT_MERGE_TOL).unwrap();
        assert_relative_eq!(chosen.selected.unwrap(), 2.0, max_relative = 1e-6);
    }

    #[test]
    fn disambiguation_outcomes() {
        let same = disambiguate(&[estimate(&[1.3]), estimate(&[1.3])], 1e-4).unwrap();
        assert_eq!(same.selected, Some(1.3));
        assert!(matches!(
            disambiguate(&[estimate(&[1.0, 4.0]), estimate(&[2.0, 5.0])], 1e-3),
            Err(Error::Inconsistent)
        ));
        match disambiguate(&[estimate(&[1.0, 4.0]), estimate(&[1.0, 4.0])], 1e-3) {
            Err(Error::Ambiguous { candidates }) => assert_eq!(candidates, vec![1.0, 4.0]),
            other => panic!("expected ambiguity, got {other:?}"),
        }
        assert!(disambiguate(&[estimate(&[1.0])], 1e-3).is_err());
        let close = disambiguate(&[estimate(&[1.0, 4.0]), estimate(&[1.00005, 7.0])], 1e-4).unwrap();
        assert_eq!(close.candidates.len(), 1);
    }

    #[test]
    fn pulse_sensitivity_contrast_and_richardson() {
        let gamma = 0.1;
        let p = pulse_params(gamma);
        let pulse = PulseSpec::with_width_ratio(1.0, gamma, 20.0).unwrap();
        let quad = InversionConfig::default().quad;
        let cold = sensitivity(0.2, &pulse, &p, &quad).unwrap();
        let hot = sensitivity(20.0, &pulse, &p, &quad).unwrap();
        assert!(cold.abs() > 1e2 * hot.abs(), "{cold} vs {hot}");

        let theta = 0.2;
        let r = |t: f64| pulse::pulse_reflection(&pulse, &p, t, &quad).unwrap().value;
        let d = |h: f64| (r(theta + h) - r(theta - h)) / (2.0 * h);
        let h = 1e-4 * theta;
        let richardson = (4.0 * d(h / 2.0) - d(h)) / 3.0;
        assert!((cold - richardson).abs() < 1e-5, "{cold} vs {richardson}");
        assert!(sensitivity(0.0, &pulse, &p, &quad).is_err());
    }

    #[test]
    fn inversion_config_validation() {
        let bad = InversionConfig {
            theta_min: 2.0,
            theta_max: 1.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = InversionConfig {
            grid_points: 2,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = InversionConfig {
            sigma: 0.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }
}
