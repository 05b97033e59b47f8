//! Builders for the named composite pulses and the trivial pulse sequences,
//! parameterized by the target rotation `(θ, φ)`.
//!
//! Each builder returns a [`PulseSequence`] whose zero-error product equals
//! the target rotation up to global phase, and whose first-order error
//! operator vanishes on the axis the pulse is designed for:
//!
//! | pulse          | pulses | robust against |
//! |----------------|--------|----------------|
//! | BB1            | 4      | PLE            |
//! | SCROFULOUS     | 3      | PLE            |
//! | SK1            | 3      | PLE            |
//! | CORPSE         | 3      | ORE            |
//! | short CORPSE   | 3      | ORE            |
//! | trivial pair   | 2      | PLE            |
//! | full rotation  | 1      | ORE            |
//! | trivial triple | 3      | ORE            |
//!
//! The last three implement the identity; they matter because replacing them
//! is unnecessary when concatenating composite pulses, which is what makes
//! the reduced concatenated pulses in [`crate::concat`] short.
//!
//! Builders keep raw angles (CORPSE deliberately winds past 2π) and check
//! their formula domains explicitly instead of clamping.

use alloc::vec;
use core::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::math;
use crate::su2::{PulseSequence, RotationParams};

/// Winding numbers `(n1, n2, n3)` of the three CORPSE pulses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpseWindings {
    pub n1: i32,
    pub n2: i32,
    pub n3: i32,
}

impl CorpseWindings {
    /// The common CORPSE choice `n1 = n2 = 1, n3 = 0`.
    pub fn standard() -> Self {
        Self {
            n1: 1,
            n2: 1,
            n3: 0,
        }
    }

    /// The short CORPSE choice `n1 = n3 = 0, n2 = 1`.
    pub fn short() -> Self {
        Self {
            n1: 0,
            n2: 1,
            n3: 0,
        }
    }
}

/// Inverse of `sinc x = sin(x)/x` on its monotonically decreasing branch
/// `[0, π]`, solved by bisection to 1e-12.
///
/// `sinc` falls from 1 at `x = 0` to 0 at `x = π`, so the admissible inputs
/// are `0 ≤ y ≤ 1`; anything else has no solution on the branch and is a
/// domain error. Bisection is chosen over Newton for unconditional
/// convergence.
pub fn arcsinc(y: f64) -> Result<f64> {
    if !y.is_finite() || !(0.0..=1.0).contains(&y) {
        return Err(Error::Domain {
            formula: "arcsinc",
            detail: alloc::format!("sin(x)/x = {y} has no solution for x in [0, pi]"),
        });
    }
    if y == 1.0 {
        return Ok(0.0);
    }
    if y == 0.0 {
        return Ok(PI);
    }
    let sinc = |x: f64| if x == 0.0 { 1.0 } else { math::sin(x) / x };
    let (mut lo, mut hi) = (0.0f64, PI);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if sinc(mid) > y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// The target rotation as a one-pulse sequence.
pub fn elementary(target: RotationParams) -> PulseSequence {
    PulseSequence::new("elementary", target, vec![target])
}

fn phase_offset_arccos(x: f64, formula: &'static str) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain {
            formula,
            detail: alloc::format!("arccos argument {x} outside [-1, 1]"),
        });
    }
    Ok(math::acos(x))
}

/// BB1: the target pulse preceded by a trivial π, 2π, π triple whose phases
/// are chosen to cancel the pulse-length error.
pub fn bb1(target: RotationParams) -> Result<PulseSequence> {
    let (theta, phi) = (target.theta(), target.phi());
    let s = phase_offset_arccos(-theta / (4.0 * PI), "BB1 phase arccos[-theta/(4*pi)]")?;
    let phi1 = phi + s;
    let phi2 = 3.0 * phi1 - 2.0 * phi;
    let pulses = vec![
        RotationParams::new(PI, phi1)?,
        RotationParams::new(TAU, phi2)?,
        RotationParams::new(PI, phi1)?,
        RotationParams::new(theta, phi)?,
    ];
    Ok(PulseSequence::new("BB1", target, pulses))
}

/// SCROFULOUS: three pulses with angles and phases fixed by an `arcsinc`
/// and two `arccos` conditions.
pub fn scrofulous(target: RotationParams) -> Result<PulseSequence> {
    let (theta, phi) = (target.theta(), target.phi());
    let sin_half = math::sin(0.5 * theta);
    if math::fabs(sin_half) < 1e-12 {
        return Err(Error::DegenerateTarget(alloc::format!(
            "SCROFULOUS phase formula divides by sin(theta/2), which vanishes at theta={theta}"
        )));
    }
    let theta1 = arcsinc(2.0 * math::cos(0.5 * theta) / PI)?;
    let phi1 = phi
        + phase_offset_arccos(
            -PI * math::cos(theta1) / (2.0 * theta1 * sin_half),
            "SCROFULOUS phase arccos[-pi*cos(theta1)/(2*theta1*sin(theta/2))]",
        )?;
    let phi2 = phi1
        - phase_offset_arccos(
            -PI / (2.0 * theta1),
            "SCROFULOUS phase arccos[-pi/(2*theta1)]",
        )?;
    let pulses = vec![
        RotationParams::new(theta1, phi1)?,
        RotationParams::new(PI, phi2)?,
        RotationParams::new(theta1, phi1)?,
    ];
    Ok(PulseSequence::new("SCROFULOUS", target, pulses))
}

/// SK1: the target pulse followed by two full rotations at symmetric phase
/// offsets `∓arccos[-θ/(4π)]`.
pub fn sk1(target: RotationParams) -> Result<PulseSequence> {
    let (theta, phi) = (target.theta(), target.phi());
    let s = phase_offset_arccos(-theta / (4.0 * PI), "SK1 phase arccos[-theta/(4*pi)]")?;
    let pulses = vec![
        RotationParams::new(theta, phi)?,
        RotationParams::new(TAU, phi - s)?,
        RotationParams::new(TAU, phi + s)?,
    ];
    Ok(PulseSequence::new("SK1", target, pulses))
}

/// CORPSE family: three back-to-back rotations about `±n(φ)` with winding
/// numbers `(n1, n2, n3)` and auxiliary angle `k = arcsin[sin(θ/2)/2]`.
pub fn corpse(target: RotationParams, w: CorpseWindings) -> Result<PulseSequence> {
    let (theta, phi) = (target.theta(), target.phi());
    let k = math::asin(math::sin(0.5 * theta) / 2.0);
    let theta1 = 2.0 * f64::from(w.n1) * PI + 0.5 * theta - k;
    let theta2 = 2.0 * f64::from(w.n2) * PI - 2.0 * k;
    let theta3 = 2.0 * f64::from(w.n3) * PI + 0.5 * theta - k;
    for (i, t) in [theta1, theta2, theta3].iter().enumerate() {
        if *t < 0.0 {
            return Err(Error::Domain {
                formula: "CORPSE winding angles",
                detail: alloc::format!(
                    "pulse {} angle {t} is negative for windings ({}, {}, {}) at theta={theta}",
                    i + 1,
                    w.n1,
                    w.n2,
                    w.n3
                ),
            });
        }
    }
    let label = if w == CorpseWindings::standard() {
        "CORPSE"
    } else if w == CorpseWindings::short() {
        "short CORPSE"
    } else {
        "CORPSE (custom windings)"
    };
    let pulses = vec![
        RotationParams::new(theta1, phi)?,
        RotationParams::new(theta2, phi + PI)?,
        RotationParams::new(theta3, phi)?,
    ];
    Ok(PulseSequence::new(label, target, pulses))
}

/// CORPSE with the short windings `n1 = n3 = 0, n2 = 1`.
pub fn short_corpse(target: RotationParams) -> Result<PulseSequence> {
    corpse(target, CorpseWindings::short())
}

/// The trivial pair `R(θ, φ)·R(θ, φ̄)` with `φ̄ = φ + π`: an identity
/// operation whose pulse-length error cancels exactly.
pub fn trivial_pair(theta: f64, phi: f64) -> Result<PulseSequence> {
    let pulses = vec![
        RotationParams::new(theta, phi + PI)?,
        RotationParams::new(theta, phi)?,
    ];
    Ok(PulseSequence::new(
        "trivial pair",
        RotationParams::new(0.0, phi)?,
        pulses,
    ))
}

/// A single full rotation `R(2π, φ) = -I`: trivial and robust against the
/// off-resonance error.
pub fn full_rotation(phi: f64) -> Result<PulseSequence> {
    Ok(PulseSequence::new(
        "full rotation",
        RotationParams::new(0.0, phi)?,
        vec![RotationParams::new(TAU, phi)?],
    ))
}

/// The trivial triple `R(π, φ')·R(2π, φ)·R(π, φ')`: an identity operation
/// robust against the off-resonance error. BB1 contains one.
pub fn trivial_triple(phi_prime: f64, phi: f64) -> Result<PulseSequence> {
    let pulses = vec![
        RotationParams::new(PI, phi_prime)?,
        RotationParams::new(TAU, phi)?,
        RotationParams::new(PI, phi_prime)?,
    ];
    Ok(PulseSequence::new(
        "trivial triple",
        RotationParams::new(0.0, phi)?,
        pulses,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error_model::{first_order_errors, is_robust, ErrorAxis, DEFAULT_ROBUST_TOL};
    use crate::su2::{fidelity, is_trivial, rotation};
    use core::f64::consts::FRAC_PI_2;

    fn params(theta: f64, phi: f64) -> RotationParams {
        RotationParams::new(theta, phi).unwrap()
    }

    fn angle_sum_over_pi(seq: &PulseSequence) -> f64 {
        seq.pulses().iter().map(|p| p.theta()).sum::<f64>() / PI
    }

    fn assert_implements_target(seq: &PulseSequence) {
        let f = fidelity(&seq.product(), &seq.target_matrix());
        assert!(
            f >= 1.0 - 1e-10,
            "{} zero-error fidelity {f} below floor",
            seq.label()
        );
    }

    #[test]
    fn arcsinc_endpoints_and_midpoint() {
        assert_eq!(arcsinc(1.0).unwrap(), 0.0);
        assert_eq!(arcsinc(0.0).unwrap(), PI);
        assert!(math::fabs(arcsinc(2.0 / PI).unwrap() - FRAC_PI_2) < 1e-11);
    }

    #[test]
    fn arcsinc_inverts_sinc() {
        // Forward oracle: sin(x)/x must reproduce the input.
        for &y in &[0.95, 0.61, 0.45015815807855303, 0.2, 0.01] {
            let x = arcsinc(y).unwrap();
            assert!(math::fabs(math::sin(x) / x - y) < 1e-12, "y={y}");
        }
        // The SCROFULOUS π/2 feed value lands near 2.01.
        let x = arcsinc(2.0 * math::cos(PI / 4.0) / PI).unwrap();
        assert!(math::fabs(x - 2.0103114334664385) < 1e-10);
    }

    #[test]
    fn arcsinc_rejects_out_of_branch_inputs() {
        assert!(arcsinc(1.2).is_err());
        assert!(arcsinc(-0.1).is_err());
        assert!(arcsinc(f64::NAN).is_err());
    }

    #[test]
    fn bb1_parameterization_at_pi() {
        let seq = bb1(params(PI, 0.0)).unwrap();
        let phi1 = math::acos(-0.25);
        assert!(math::fabs(phi1 - 1.8234765819369751) < 1e-12);
        let angles: alloc::vec::Vec<_> = seq.pulses().iter().map(|p| p.theta()).collect();
        assert_eq!(angles, alloc::vec![PI, TAU, PI, PI]);
        assert!(math::fabs(seq.pulses()[0].phi() - phi1) < 1e-12);
        assert!(math::fabs(seq.pulses()[1].phi() - 3.0 * phi1) < 1e-12);
        assert!(math::fabs(seq.pulses()[3].phi()) < 1e-15);
        assert_implements_target(&seq);
    }

    #[test]
    fn bb1_rejects_overlong_targets() {
        assert!(matches!(
            bb1(params(4.0 * PI + 0.1, 0.0)),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn scrofulous_parameterization_at_pi() {
        let seq = scrofulous(params(PI, 0.0)).unwrap();
        for p in seq.pulses() {
            assert!(math::fabs(p.theta() - PI) < 1e-11);
        }
        assert!(math::fabs(seq.pulses()[0].phi() - PI / 3.0) < 1e-11);
        assert!(math::fabs(seq.pulses()[1].phi() + PI / 3.0) < 1e-11);
        assert_implements_target(&seq);
    }

    #[test]
    fn scrofulous_first_pulse_angle_at_half_pi() {
        let seq = scrofulous(params(FRAC_PI_2, 0.0)).unwrap();
        assert!(math::fabs(seq.pulses()[0].theta() - 2.0103114334664385) < 1e-10);
        assert_implements_target(&seq);
    }

    #[test]
    fn scrofulous_rejects_degenerate_and_out_of_domain_targets() {
        assert!(matches!(
            scrofulous(params(0.0, 0.0)),
            Err(Error::DegenerateTarget(_))
        ));
        // Beyond θ = π the arcsinc feed turns negative.
        assert!(matches!(
            scrofulous(params(3.0 * PI / 2.0, 0.0)),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn sk1_parameterization_at_pi() {
        let seq = sk1(params(PI, 0.0)).unwrap();
        let s = math::acos(-0.25);
        assert_eq!(seq.pulses()[0].theta(), PI);
        assert!(math::fabs(seq.pulses()[1].phi() + s) < 1e-12);
        assert!(math::fabs(seq.pulses()[2].phi() - s) < 1e-12);
        assert_implements_target(&seq);
    }

    #[test]
    fn corpse_angles_at_pi() {
        // k = arcsin(1/2) = π/6 gives 420°, 300°, 60°.
        let seq = corpse(params(PI, 0.0), CorpseWindings::standard()).unwrap();
        let expect = [7.0 * PI / 3.0, 5.0 * PI / 3.0, PI / 3.0];
        for (p, e) in seq.pulses().iter().zip(expect) {
            assert!(math::fabs(p.theta() - e) < 1e-12);
        }
        assert!(math::fabs(seq.pulses()[1].phi() - PI) < 1e-15);
        assert_implements_target(&seq);

        let short = short_corpse(params(PI, 0.0)).unwrap();
        let expect_short = [PI / 3.0, 5.0 * PI / 3.0, PI / 3.0];
        for (p, e) in short.pulses().iter().zip(expect_short) {
            assert!(math::fabs(p.theta() - e) < 1e-12);
        }
        assert_implements_target(&short);
    }

    #[test]
    fn corpse_rejects_negative_winding_angles() {
        let w = CorpseWindings {
            n1: 0,
            n2: 0,
            n3: 0,
        };
        assert!(matches!(
            corpse(params(PI, 0.0), w),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn angle_sums_match_closed_forms() {
        for &theta in &[0.4, FRAC_PI_2, PI, 2.6, 3.0 * PI / 2.0] {
            let t = params(theta, 0.3);
            assert!(math::fabs(angle_sum_over_pi(&bb1(t).unwrap()) - (4.0 + theta / PI)) < 1e-12);
            assert!(math::fabs(angle_sum_over_pi(&sk1(t).unwrap()) - (4.0 + theta / PI)) < 1e-12);
            let k = math::asin(math::sin(0.5 * theta) / 2.0);
            let c = corpse(t, CorpseWindings::standard()).unwrap();
            assert!(math::fabs(angle_sum_over_pi(&c) - (4.0 + (theta - 4.0 * k) / PI)) < 1e-12);
            let sc = short_corpse(t).unwrap();
            assert!(math::fabs(angle_sum_over_pi(&sc) - (2.0 + (theta - 4.0 * k) / PI)) < 1e-12);
        }
    }

    #[test]
    fn builders_are_robust_on_their_design_axis() {
        let tol = DEFAULT_ROBUST_TOL;
        for &theta in &[FRAC_PI_2, PI] {
            let t = params(theta, 0.0);
            assert!(is_robust(&bb1(t).unwrap(), ErrorAxis::Ple, tol));
            assert!(is_robust(&sk1(t).unwrap(), ErrorAxis::Ple, tol));
            assert!(is_robust(&scrofulous(t).unwrap(), ErrorAxis::Ple, tol));
            assert!(is_robust(
                &corpse(t, CorpseWindings::standard()).unwrap(),
                ErrorAxis::Ore,
                tol
            ));
            assert!(is_robust(&short_corpse(t).unwrap(), ErrorAxis::Ore, tol));
        }
        assert!(is_robust(
            &trivial_pair(1.1, 0.4).unwrap(),
            ErrorAxis::Ple,
            tol
        ));
        assert!(is_robust(&full_rotation(0.7).unwrap(), ErrorAxis::Ore, tol));
        assert!(is_robust(
            &trivial_triple(0.2, 0.9).unwrap(),
            ErrorAxis::Ore,
            tol
        ));
    }

    #[test]
    fn trivial_pair_products_and_errors() {
        let seq = trivial_pair(1.3, 0.6).unwrap();
        assert!(is_trivial(&seq.product(), 1e-12));
        let fo = first_order_errors(&seq);
        assert!(fo.e_eps.max_norm() <= 1e-8);
        // Residual ORE term: -2i sin(θ/2) R(θ, φ) σz.
        let pattern = (rotation(params(1.3, 0.6)) * crate::su2::Unitary2::SIGMA_Z)
            .scale(crate::Complex64::new(0.0, -2.0 * math::sin(0.65)));
        assert!(fo.e_f.approx_eq(&pattern, 1e-8));
    }

    #[test]
    fn full_rotation_products_and_errors() {
        let seq = full_rotation(0.9).unwrap();
        let u = seq.product();
        assert!(is_trivial(&u, 1e-12));
        // Product is -I, so PLE error survives at magnitude π while the ORE
        // term cancels.
        let fo = first_order_errors(&seq);
        assert!(fo.e_f.max_norm() <= 1e-8);
        assert!(math::fabs(fo.e_eps.max_norm() - PI) < 1e-8);
    }

    #[test]
    fn trivial_triple_products_and_errors() {
        let seq = trivial_triple(0.8, 0.8).unwrap();
        assert!(is_trivial(&seq.product(), 1e-12));
        let fo = first_order_errors(&seq);
        assert!(fo.e_f.max_norm() <= 1e-8);
        // With φ' = φ the three pulses share an axis and the PLE derivative
        // is that of a bare 4π rotation: magnitude 2π.
        assert!(math::fabs(fo.e_eps.max_norm() - TAU) < 1e-7);
    }

    #[test]
    fn every_builder_hits_its_target() {
        for &theta in &[PI / 6.0, FRAC_PI_2, PI] {
            for &phi in &[0.0, PI / 4.0] {
                let t = params(theta, phi);
                assert_implements_target(&elementary(t));
                assert_implements_target(&bb1(t).unwrap());
                assert_implements_target(&scrofulous(t).unwrap());
                assert_implements_target(&sk1(t).unwrap());
                assert_implements_target(&corpse(t, CorpseWindings::standard()).unwrap());
                assert_implements_target(&short_corpse(t).unwrap());
            }
        }
    }
}
