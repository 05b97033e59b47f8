//! Classification and verification tools: REP classification, operation
//! time cost, fidelity landscapes, robustness-order fits, and the
//! brute-force scan showing that two-pulse composite pulses are trivial.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::error_model::{
    elementary_ore_operator, elementary_ple_operator, first_order_errors, sequence_with_errors,
    ErrorAxis, ErrorStrengths, DEFAULT_ROBUST_TOL,
};
use crate::math;
use crate::su2::{fidelity, is_trivial, rotation, PulseSequence, RotationParams, Unitary2};

/// Result of residual-error-preserving classification.
///
/// `rep` is `Some(axis)` when the sequence is robust against the *other*
/// error and its surviving first-order term on `axis` has exactly the
/// elementary pulse's form: the definitions couple the two. CCCPs cancel
/// both operators and so are REP on neither axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepClassification {
    /// Which error's residual keeps the elementary structure, if any.
    pub rep: Option<ErrorAxis>,
    /// First-order PLE operator vanishes.
    pub robust_ple: bool,
    /// First-order ORE operator vanishes.
    pub robust_ore: bool,
    /// Max-entry norm of the first-order PLE operator.
    pub e_eps_norm: f64,
    /// Max-entry norm of the first-order ORE operator.
    pub e_f_norm: f64,
}

/// Classify with the default robustness tolerance.
pub fn classify_rep(seq: &PulseSequence) -> RepClassification {
    classify_rep_with_tol(seq, DEFAULT_ROBUST_TOL)
}

/// Classify a sequence's robustness axes and REP property.
///
/// Before the surviving operator is compared against the elementary
/// patterns `-i (θ/2)(n(φ)·σ) U₀` and `-i sin(θ/2) σz`, the zero-error
/// product is aligned to the target rotation by the unit phase that makes
/// `tr(U₀† R_target)` real and positive: a 2π winding flips the product's
/// sign, and the error operators inherit the same phase.
pub fn classify_rep_with_tol(seq: &PulseSequence, tol: f64) -> RepClassification {
    let fo = first_order_errors(seq);
    let e_eps_norm = fo.e_eps.max_norm();
    let e_f_norm = fo.e_f.max_norm();
    let robust_ple = e_eps_norm <= tol;
    let robust_ore = e_f_norm <= tol;

    let u0 = seq.product();
    let overlap = (u0.dagger() * seq.target_matrix()).trace();
    let rep = if overlap.norm() < 1e-9 {
        // Product does not implement the target at all; REP is meaningless.
        None
    } else {
        let phase = overlap / Complex64::new(overlap.norm(), 0.0);
        let u0_aligned = u0.scale(phase);
        let e_eps_aligned = fo.e_eps.scale(phase);
        let e_f_aligned = fo.e_f.scale(phase);
        let ple_pattern = elementary_ple_operator(seq.target(), &u0_aligned);
        let ore_pattern = elementary_ore_operator(seq.target());
        if robust_ore && e_eps_aligned.approx_eq(&ple_pattern, tol) {
            Some(ErrorAxis::Ple)
        } else if robust_ple && e_f_aligned.approx_eq(&ore_pattern, tol) {
            Some(ErrorAxis::Ore)
        } else {
            None
        }
    };

    RepClassification {
        rep,
        robust_ple,
        robust_ore,
        e_eps_norm,
        e_f_norm,
    }
}

/// Operation time cost `T = Σ θᵢ / π` over the raw, unnormalized angles.
pub fn time_cost(seq: &PulseSequence) -> Result<f64> {
    let mut sum = 0.0;
    for (index, p) in seq.pulses().iter().enumerate() {
        if p.theta() < 0.0 {
            return Err(Error::NegativeAngle {
                index,
                theta: p.theta(),
            });
        }
        sum += p.theta();
    }
    Ok(sum / PI)
}

/// Gate fidelity sampled on a rectangular `(ε, f)` grid, stored row-major
/// with `ε` indexing rows.
#[derive(Debug, Clone, PartialEq)]
pub struct FidelityMap {
    eps_axis: Vec<f64>,
    f_axis: Vec<f64>,
    values: Vec<f64>,
}

impl FidelityMap {
    /// Assemble a map from raw parts; `values` must hold one row per `ε`
    /// sample, each of `f_axis` length.
    pub fn from_parts(eps_axis: Vec<f64>, f_axis: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if values.len() != eps_axis.len() * f_axis.len() {
            return Err(Error::InvalidParameter(alloc::format!(
                "fidelity grid has {} values for a {}x{} axis layout",
                values.len(),
                eps_axis.len(),
                f_axis.len()
            )));
        }
        Ok(Self {
            eps_axis,
            f_axis,
            values,
        })
    }

    pub fn eps_axis(&self) -> &[f64] {
        &self.eps_axis
    }

    pub fn f_axis(&self) -> &[f64] {
        &self.f_axis
    }

    /// Row-major values, `ε` varying slowest.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Fidelity at grid indices `(eps_index, f_index)`.
    pub fn value(&self, eps_index: usize, f_index: usize) -> f64 {
        self.values[eps_index * self.f_axis.len() + f_index]
    }

    /// Smallest fidelity on the grid.
    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(1.0, f64::min)
    }
}

/// `n` samples spanning `[lo, hi]` inclusive.
pub fn grid_axis(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n as f64 - 1.0);
    (0..n).map(|i| lo + step * i as f64).collect()
}

/// One row of the fidelity map: `F(ε, f_j)` for every `f_j`.
///
/// Grid cells are independent pure evaluations; callers may farm rows out to
/// threads and reassemble them in index order without changing the result.
pub fn fidelity_row(seq: &PulseSequence, eps: f64, f_axis: &[f64]) -> Vec<f64> {
    let ideal = seq.target_matrix();
    f_axis
        .iter()
        .map(|&f| {
            let e = ErrorStrengths::new(eps, f).expect("grid strengths are finite");
            fidelity(&ideal, &sequence_with_errors(seq, e))
        })
        .collect()
}

/// Gate fidelity `F(ε, f)` against the target rotation on a
/// `resolution × resolution` grid over the given ranges.
pub fn fidelity_map(
    seq: &PulseSequence,
    eps_range: (f64, f64),
    f_range: (f64, f64),
    resolution: usize,
) -> Result<FidelityMap> {
    if resolution < 2 {
        return Err(Error::InvalidParameter(alloc::format!(
            "fidelity map needs at least 2 samples per axis, got {resolution}"
        )));
    }
    let eps_axis = grid_axis(eps_range.0, eps_range.1, resolution);
    let f_axis = grid_axis(f_range.0, f_range.1, resolution);
    let mut values = Vec::with_capacity(resolution * resolution);
    for &eps in &eps_axis {
        values.extend(fidelity_row(seq, eps, &f_axis));
    }
    FidelityMap::from_parts(eps_axis, f_axis, values)
}

/// Error-strength sweep direction for robustness-order fits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    /// `(ε, 0)`
    Ple,
    /// `(0, f)`
    Ore,
    /// `(s, s)`
    Diagonal,
}

impl core::fmt::Display for SweepAxis {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SweepAxis::Ple => write!(f, "PLE"),
            SweepAxis::Ore => write!(f, "ORE"),
            SweepAxis::Diagonal => write!(f, "diagonal"),
        }
    }
}

/// Fitted scaling exponent of the infidelity, `1 - F ∝ strength^slope`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RobustnessFit {
    pub axis: SweepAxis,
    pub slope: f64,
    pub r_squared: f64,
}

/// Number of log-spaced strength samples used by [`robustness_order`].
const FIT_SAMPLES: usize = 20;
/// Strength window for the fit. Below 1e-3 a quartic signal approaches the
/// double-precision floor; above 1e-1 higher orders bend the fit.
const FIT_RANGE: (f64, f64) = (1e-3, 1e-1);
/// Samples with `1 - F` at or below this are indistinguishable from
/// round-off and are excluded from the fit.
const INFIDELITY_FLOOR: f64 = 1e-13;

/// Fit the exponent of `log10(1-F)` against `log10(strength)` along one
/// error axis: slope ≈ 2 for an unprotected pulse, ≥ 4 once the first-order
/// term cancels.
pub fn robustness_order(seq: &PulseSequence, axis: SweepAxis) -> Result<RobustnessFit> {
    let ideal = seq.target_matrix();
    let (lo, hi) = FIT_RANGE;
    let log_lo = math::log10(lo);
    let log_step = (math::log10(hi) - log_lo) / (FIT_SAMPLES as f64 - 1.0);
    let mut xs = Vec::with_capacity(FIT_SAMPLES);
    let mut ys = Vec::with_capacity(FIT_SAMPLES);
    for i in 0..FIT_SAMPLES {
        let log_s = log_lo + log_step * i as f64;
        let s = libm::pow(10.0, log_s);
        let strengths = match axis {
            SweepAxis::Ple => ErrorStrengths::new(s, 0.0),
            SweepAxis::Ore => ErrorStrengths::new(0.0, s),
            SweepAxis::Diagonal => ErrorStrengths::new(s, s),
        }
        .expect("sweep strengths are finite");
        let infidelity = 1.0 - fidelity(&ideal, &sequence_with_errors(seq, strengths));
        if infidelity > INFIDELITY_FLOOR {
            xs.push(log_s);
            ys.push(math::log10(infidelity));
        }
    }
    if xs.len() < 2 {
        return Err(Error::DegenerateFit);
    }
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (x, y) in xs.iter().zip(&ys) {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
        syy += (y - mean_y) * (y - mean_y);
    }
    let slope = sxy / sxx;
    let r_squared = if syy <= 0.0 {
        1.0
    } else {
        sxy * sxy / (sxx * syy)
    };
    Ok(RobustnessFit {
        axis,
        slope,
        r_squared,
    })
}

/// Outcome of the exhaustive two-pulse robustness scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct NoGoReport {
    pub pairs_scanned: u64,
    /// Pairs whose first-order PLE operator vanishes within tolerance.
    pub ple_robust: u64,
    /// Pairs whose first-order ORE operator vanishes within tolerance.
    pub ore_robust: u64,
    /// Robust pairs whose product is *not* trivial; expected to stay zero.
    pub violations: u64,
}

impl NoGoReport {
    /// Combine disjoint slices of the scan.
    pub fn merge(self, other: NoGoReport) -> NoGoReport {
        NoGoReport {
            pairs_scanned: self.pairs_scanned + other.pairs_scanned,
            ple_robust: self.ple_robust + other.ple_robust,
            ore_robust: self.ore_robust + other.ore_robust,
            violations: self.violations + other.violations,
        }
    }
}

/// Precomputed grid-point data for the scan.
struct ScanPoint {
    mat: Unitary2,
    // θ·n(φ) in the xy-plane.
    weighted_axis: [f64; 2],
    sin_half: f64,
}

fn scan_points(resolution: usize) -> Vec<ScanPoint> {
    let mut points = Vec::with_capacity(resolution * resolution);
    for i in 0..resolution {
        // θ on (0, 2π]: zero is excluded as trivially degenerate.
        let theta = TAU * (i + 1) as f64 / resolution as f64;
        for j in 0..resolution {
            let phi = TAU * j as f64 / resolution as f64;
            let p = RotationParams::new(theta, phi).expect("grid angles are finite");
            let (sp, cp) = math::sincos(phi);
            points.push(ScanPoint {
                mat: rotation(p),
                weighted_axis: [theta * cp, theta * sp],
                sin_half: math::sin(0.5 * theta),
            });
        }
    }
    points
}

/// First-order operators of the pair `R(θ₂,φ₂)·R(θ₁,φ₁)` in closed form.
///
/// Differentiating each factor gives
/// `E_ε = -(i/2)·R₂·[(θ₁n₁ + θ₂n₂)·σ]·R₁` and
/// `E_f = -i·[sin(θ₂/2)·σz·R₁ + sin(θ₁/2)·R₂·σz]`,
/// a few 2×2 products per pair instead of a finite-difference propagation.
fn pair_operators(p1: &ScanPoint, p2: &ScanPoint) -> (Unitary2, Unitary2) {
    let vx = p1.weighted_axis[0] + p2.weighted_axis[0];
    let vy = p1.weighted_axis[1] + p2.weighted_axis[1];
    // (v·σ) for an in-plane vector v.
    let v_sigma = Unitary2::new(
        Complex64::new(0.0, 0.0),
        Complex64::new(vx, -vy),
        Complex64::new(vx, vy),
        Complex64::new(0.0, 0.0),
    );
    let e_eps = (p2.mat * v_sigma * p1.mat).scale(Complex64::new(0.0, -0.5));
    let e_f = ((Unitary2::SIGMA_Z * p1.mat).scale(Complex64::new(p2.sin_half, 0.0))
        + (p2.mat * Unitary2::SIGMA_Z).scale(Complex64::new(p1.sin_half, 0.0)))
    .scale(Complex64::new(0.0, -1.0));
    (e_eps, e_f)
}

/// Scan a contiguous range of first-pulse indices; see [`n2_no_go_scan`].
///
/// Slices are independent and may run concurrently; merging their reports
/// reproduces the full scan regardless of order.
pub fn n2_no_go_scan_slice(
    resolution: usize,
    robust_tol: f64,
    trivial_tol: f64,
    first_pulse_range: (usize, usize),
) -> Result<NoGoReport> {
    if resolution < 8 {
        return Err(Error::InvalidParameter(alloc::format!(
            "no-go scan needs resolution >= 8, got {resolution}"
        )));
    }
    let points = scan_points(resolution);
    let (lo, hi) = first_pulse_range;
    let hi = hi.min(points.len());
    let mut report = NoGoReport::default();
    // A robust pair needs |θ₁n₁ + θ₂n₂| near zero; the max-entry norm of a
    // 2×2 matrix is at least half its spectral norm, so anything with
    // |v| > 4·tol cannot pass and skips the matrix products.
    let ple_prefilter = 4.0 * robust_tol;
    for p1 in &points[lo..hi] {
        for p2 in &points {
            report.pairs_scanned += 1;
            let vx = p1.weighted_axis[0] + p2.weighted_axis[0];
            let vy = p1.weighted_axis[1] + p2.weighted_axis[1];
            let ple_candidate = math::sqrt(vx * vx + vy * vy) <= ple_prefilter;
            let (e_eps, e_f) = pair_operators(p1, p2);
            let ple_robust = ple_candidate && e_eps.max_norm() <= robust_tol;
            let ore_robust = e_f.max_norm() <= robust_tol;
            if ple_robust {
                report.ple_robust += 1;
            }
            if ore_robust {
                report.ore_robust += 1;
            }
            if ple_robust || ore_robust {
                let product = p2.mat * p1.mat;
                if !is_trivial(&product, trivial_tol) {
                    report.violations += 1;
                }
            }
        }
    }
    Ok(report)
}

/// Exhaustively check that every robust two-pulse sequence on the grid is
/// trivial.
///
/// The grid covers `(θ₁, φ₁, θ₂, φ₂)` with `θ ∈ (0, 2π]` and `φ ∈ [0, 2π)`
/// at `resolution` samples each, so `resolution⁴` pairs are evaluated in
/// closed form. Violations are counted, never thrown.
pub fn n2_no_go_scan(resolution: usize, robust_tol: f64, trivial_tol: f64) -> Result<NoGoReport> {
    n2_no_go_scan_slice(
        resolution,
        robust_tol,
        trivial_tol,
        (0, resolution * resolution),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concat::{named_cccp, reduced_cinbb, reduced_cinsk, reduced_skinsc, CccpName};
    use crate::error_model::first_order_errors_with_step;
    use crate::library::{bb1, corpse, elementary, scrofulous, short_corpse, sk1, CorpseWindings};
    use alloc::vec;
    use alloc::vec::Vec;
    use core::f64::consts::FRAC_PI_2;

    fn params(theta: f64, phi: f64) -> RotationParams {
        RotationParams::new(theta, phi).unwrap()
    }

    #[test]
    fn rep_classification_reproduces_known_table() {
        for &theta in &[FRAC_PI_2, PI] {
            let t = params(theta, 0.0);
            let sk1_class = classify_rep(&sk1(t).unwrap());
            assert_eq!(sk1_class.rep, Some(ErrorAxis::Ore));
            assert!(sk1_class.robust_ple && !sk1_class.robust_ore);

            let bb1_class = classify_rep(&bb1(t).unwrap());
            assert_eq!(bb1_class.rep, Some(ErrorAxis::Ore));
            assert!(bb1_class.robust_ple && !bb1_class.robust_ore);

            let scrof_class = classify_rep(&scrofulous(t).unwrap());
            assert_eq!(scrof_class.rep, None);
            assert!(scrof_class.robust_ple && !scrof_class.robust_ore);

            let corpse_class = classify_rep(&corpse(t, CorpseWindings::standard()).unwrap());
            assert_eq!(corpse_class.rep, Some(ErrorAxis::Ple));
            assert!(corpse_class.robust_ore && !corpse_class.robust_ple);

            let short_class = classify_rep(&short_corpse(t).unwrap());
            assert_eq!(short_class.rep, None);
            assert!(short_class.robust_ore && !short_class.robust_ple);
        }
    }

    #[test]
    fn cccps_classify_as_robust_on_both_axes() {
        let t = params(PI, 0.0);
        let class = classify_rep(&reduced_cinbb(t).unwrap());
        assert!(class.robust_ple && class.robust_ore);
        assert_eq!(class.rep, None);
    }

    #[test]
    fn time_cost_of_known_rows() {
        let t = params(PI, 0.0);
        assert!(math::fabs(time_cost(&elementary(t)).unwrap() - 1.0) < 1e-12);
        let cins = named_cccp(CccpName::CinS, t).unwrap();
        assert!(math::fabs(time_cost(&cins).unwrap() - 13.0) < 1e-12);
        let rsk = reduced_skinsc(t).unwrap();
        assert!(math::fabs(time_cost(&rsk).unwrap() - 19.0 / 3.0) < 1e-12);
    }

    #[test]
    fn time_cost_rejects_negative_angles() {
        let seq = PulseSequence::new(
            "bad",
            params(1.0, 0.0),
            vec![params(-0.5, 0.0), params(1.5, 0.0)],
        );
        assert!(matches!(
            time_cost(&seq),
            Err(Error::NegativeAngle { index: 0, .. })
        ));
    }

    #[test]
    fn fidelity_map_center_and_spot_values() {
        let seq = elementary(params(PI, 0.0));
        let map = fidelity_map(&seq, (-0.1, 0.1), (-0.1, 0.1), 5).unwrap();
        // Center of the symmetric window is (0, 0).
        assert!(math::fabs(map.value(2, 2) - 1.0) < 1e-12);
        // Edge at (0.1, 0): closed form |cos(εθ/2)|.
        let expected = math::fabs(math::cos(0.05 * PI));
        assert!(math::fabs(map.value(4, 2) - expected) < 1e-12);
        assert_eq!(map.values().len(), 25);
    }

    #[test]
    fn fidelity_map_rejects_degenerate_resolution() {
        let seq = elementary(params(PI, 0.0));
        assert!(fidelity_map(&seq, (-0.1, 0.1), (-0.1, 0.1), 1).is_err());
    }

    #[test]
    fn fidelity_map_robust_pulse_dominates_elementary() {
        let t = params(PI, 0.0);
        let window = ((-0.1, 0.1), (-0.1, 0.1));
        let plain = fidelity_map(&elementary(t), window.0, window.1, 11).unwrap();
        let robustified = fidelity_map(&reduced_cinbb(t).unwrap(), window.0, window.1, 11).unwrap();
        assert!(robustified.min_value() > plain.min_value());
    }

    #[test]
    fn slope_of_elementary_pulse_is_quadratic() {
        let seq = elementary(params(PI, 0.0));
        for axis in [SweepAxis::Ple, SweepAxis::Ore] {
            let fit = robustness_order(&seq, axis).unwrap();
            assert!(
                math::fabs(fit.slope - 2.0) <= 0.1,
                "axis {axis}: slope {}",
                fit.slope
            );
            assert!(fit.r_squared > 0.999);
        }
    }

    #[test]
    fn slope_of_protected_axes_is_at_least_quartic() {
        let t = params(PI, 0.0);
        let fit = robustness_order(&bb1(t).unwrap(), SweepAxis::Ple).unwrap();
        assert!(fit.slope >= 3.5, "BB1 PLE slope {}", fit.slope);
        let fit = robustness_order(
            &corpse(t, CorpseWindings::standard()).unwrap(),
            SweepAxis::Ore,
        )
        .unwrap();
        assert!(fit.slope >= 3.5, "CORPSE ORE slope {}", fit.slope);
        let fit = robustness_order(&reduced_cinsk(t).unwrap(), SweepAxis::Diagonal).unwrap();
        assert!(
            fit.slope >= 3.5,
            "reduced CinSK diagonal slope {}",
            fit.slope
        );
    }

    #[test]
    fn pair_operators_match_finite_differences() {
        let cases = [
            ((1.2, 0.3), (2.5, 4.1)),
            ((TAU, 0.0), (TAU, 1.0)),
            ((0.9, 5.0), (0.9, 5.0 + PI)),
        ];
        for ((t1, f1), (t2, f2)) in cases {
            let points = [
                ScanPoint {
                    mat: rotation(params(t1, f1)),
                    weighted_axis: [t1 * math::cos(f1), t1 * math::sin(f1)],
                    sin_half: math::sin(0.5 * t1),
                },
                ScanPoint {
                    mat: rotation(params(t2, f2)),
                    weighted_axis: [t2 * math::cos(f2), t2 * math::sin(f2)],
                    sin_half: math::sin(0.5 * t2),
                },
            ];
            let (e_eps, e_f) = pair_operators(&points[0], &points[1]);
            let seq = PulseSequence::new(
                "pair",
                params(1.0, 0.0),
                vec![params(t1, f1), params(t2, f2)],
            );
            let fo = first_order_errors_with_step(&seq, 1e-4);
            assert!(
                e_eps.approx_eq(&fo.e_eps, 1e-7),
                "E_eps at {t1},{f1},{t2},{f2}"
            );
            assert!(e_f.approx_eq(&fo.e_f, 1e-7), "E_f at {t1},{f1},{t2},{f2}");
        }
    }

    #[test]
    fn small_no_go_scan_finds_expected_families_and_no_violations() {
        let resolution = 8;
        let report = n2_no_go_scan(resolution, 1e-6, 1e-6).unwrap();
        assert_eq!(report.pairs_scanned, (resolution as u64).pow(4));
        assert_eq!(report.violations, 0);
        // Opposite-axis equal-angle pairs: one per (θ, φ).
        assert_eq!(report.ple_robust, (resolution as u64).pow(2));
        // Full-rotation pairs (res²) plus angle-complement pairs
        // (θ₂ = 2π - θ₁, φ₂ = φ₁) for the res-1 non-2π angles.
        let res = resolution as u64;
        assert_eq!(report.ore_robust, res * res + (res - 1) * res);
    }

    #[test]
    fn no_go_scan_slices_merge_to_full_report() {
        let full = n2_no_go_scan(8, 1e-6, 1e-6).unwrap();
        let a = n2_no_go_scan_slice(8, 1e-6, 1e-6, (0, 20)).unwrap();
        let b = n2_no_go_scan_slice(8, 1e-6, 1e-6, (20, 64)).unwrap();
        assert_eq!(a.merge(b), full);
    }

    #[test]
    fn no_go_scan_rejects_tiny_grids() {
        assert!(n2_no_go_scan(4, 1e-6, 1e-6).is_err());
    }

    #[test]
    fn grid_axis_is_inclusive_and_even() {
        let axis = grid_axis(-0.2, 0.2, 101);
        assert_eq!(axis.len(), 101);
        assert!(math::fabs(axis[0] + 0.2) < 1e-15);
        assert!(math::fabs(axis[100] - 0.2) < 1e-15);
        assert!(math::fabs(axis[50]) < 1e-15);
        let collected: Vec<f64> = axis;
        assert!(collected.windows(2).all(|w| w[1] > w[0]));
    }
}
