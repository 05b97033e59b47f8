//! Concatenated composite pulses (CCCPs): robustness against both error
//! types at once by nesting one composite pulse inside another.
//!
//! The scheme replaces every constituent elementary pulse of an *outer*
//! composite pulse with an *inner* composite pulse. Validity hinges on the
//! residual-error-preserving (REP) property: the inner must cancel the error
//! axis the outer leaves open, while reproducing the elementary first-order
//! error structure on the axis the outer cancels. The outer then removes
//! that surviving term exactly as it would for bare pulses, and both
//! first-order operators vanish.
//!
//! Outer pulses that are already trivial (identity up to phase) and robust
//! on the right axis need no replacement; skipping them yields the three
//! *reduced* CCCPs, which are emitted both from their closed-form
//! parameterizations ([`reduced_cinsk`], [`reduced_cinbb`],
//! [`reduced_skinsc`]) and through the generic [`concatenate`] path with a
//! structural skip rule. The two constructions must agree pulse by pulse;
//! tests hold them to 1e-12.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};
use core::fmt;
use core::str::FromStr;

use crate::analysis::classify_rep_with_tol;
use crate::error::{Error, Result};
use crate::error_model::{ErrorAxis, DEFAULT_ROBUST_TOL};
use crate::library::{bb1, corpse, scrofulous, short_corpse, sk1, CorpseWindings};
use crate::math;
use crate::su2::{PulseSequence, RotationParams};

/// Angle-congruence tolerance (mod 2π) used by the same-axis merge and the
/// structural trivial-pattern scanner.
pub const MERGE_PHI_TOL: f64 = 1e-12;

/// The five concatenated composite pulses, named inner-in-outer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CccpName {
    /// CORPSE in SCROFULOUS.
    CinS,
    /// CORPSE in SK1.
    CinSk,
    /// SK1 in short CORPSE.
    SkInSc,
    /// CORPSE in BB1.
    CinBb,
    /// BB1 in short CORPSE.
    BbInSc,
}

impl CccpName {
    pub const ALL: [CccpName; 5] = [
        CccpName::CinS,
        CccpName::CinSk,
        CccpName::SkInSc,
        CccpName::CinBb,
        CccpName::BbInSc,
    ];
}

impl fmt::Display for CccpName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CccpName::CinS => "CinS",
            CccpName::CinSk => "CinSK",
            CccpName::SkInSc => "SKinsC",
            CccpName::CinBb => "CinBB",
            CccpName::BbInSc => "BBinsC",
        };
        write!(f, "{s}")
    }
}

impl FromStr for CccpName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cins" => Ok(CccpName::CinS),
            "cinsk" => Ok(CccpName::CinSk),
            "skinsc" => Ok(CccpName::SkInSc),
            "cinbb" => Ok(CccpName::CinBb),
            "bbinsc" => Ok(CccpName::BbInSc),
            _ => Err(Error::UnknownName(String::from(s))),
        }
    }
}

/// Outer composite pulses available to a recipe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OuterPulse {
    Scrofulous,
    Sk1,
    Bb1,
    ShortCorpse,
    /// Short CORPSE with its first and last pulses split so that two trivial
    /// pairs appear; see [`modified_short_corpse`].
    ModifiedShortCorpse,
}

/// Inner composite pulses available to a recipe. All three carry the REP
/// property and may sit inside an outer pulse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerPulse {
    Corpse,
    Sk1,
    Bb1,
}

/// Which outer pulses are exempt from replacement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkipRule {
    /// Replace every outer pulse.
    None,
    /// Skip outer pulses that belong to a structurally trivial subsequence:
    /// a pair `R(θ, φ)·R(θ, φ+π)`, a full rotation `R(2π, φ)`, or a triple
    /// `R(π, φ')·R(2π, φ)·R(π, φ')`. Longest pattern wins, scanning left to
    /// right.
    TrivialSubsequences,
}

/// A concatenation recipe: which outer, which inner, and what to skip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CccpRecipe {
    pub outer: OuterPulse,
    pub inner: InnerPulse,
    pub skip: SkipRule,
}

/// The Table of inner/outer pairings for the five named CCCPs.
pub fn cccp_recipe(name: CccpName) -> CccpRecipe {
    let (outer, inner) = match name {
        CccpName::CinS => (OuterPulse::Scrofulous, InnerPulse::Corpse),
        CccpName::CinSk => (OuterPulse::Sk1, InnerPulse::Corpse),
        CccpName::SkInSc => (OuterPulse::ShortCorpse, InnerPulse::Sk1),
        CccpName::CinBb => (OuterPulse::Bb1, InnerPulse::Corpse),
        CccpName::BbInSc => (OuterPulse::ShortCorpse, InnerPulse::Bb1),
    };
    CccpRecipe {
        outer,
        inner,
        skip: SkipRule::None,
    }
}

/// Recipe behind [`reduced_cinsk`].
pub fn reduced_cinsk_recipe() -> CccpRecipe {
    CccpRecipe {
        outer: OuterPulse::Sk1,
        inner: InnerPulse::Corpse,
        skip: SkipRule::TrivialSubsequences,
    }
}

/// Recipe behind [`reduced_cinbb`].
pub fn reduced_cinbb_recipe() -> CccpRecipe {
    CccpRecipe {
        outer: OuterPulse::Bb1,
        inner: InnerPulse::Corpse,
        skip: SkipRule::TrivialSubsequences,
    }
}

/// Recipe behind [`reduced_skinsc`]; the merge of the two adjacent same-axis
/// pulses is applied separately via [`merge_same_axis`].
pub fn reduced_skinsc_recipe() -> CccpRecipe {
    CccpRecipe {
        outer: OuterPulse::ModifiedShortCorpse,
        inner: InnerPulse::Sk1,
        skip: SkipRule::TrivialSubsequences,
    }
}

fn build_outer(kind: OuterPulse, target: RotationParams) -> Result<PulseSequence> {
    match kind {
        OuterPulse::Scrofulous => scrofulous(target),
        OuterPulse::Sk1 => sk1(target),
        OuterPulse::Bb1 => bb1(target),
        OuterPulse::ShortCorpse => short_corpse(target),
        OuterPulse::ModifiedShortCorpse => modified_short_corpse(target),
    }
}

fn build_inner(kind: InnerPulse, target: RotationParams) -> Result<PulseSequence> {
    match kind {
        InnerPulse::Corpse => corpse(target, CorpseWindings::standard()),
        InnerPulse::Sk1 => sk1(target),
        InnerPulse::Bb1 => bb1(target),
    }
}

fn phi_congruent(a: f64, b: f64) -> bool {
    math::angle_distance_mod_two_pi(a, b) <= MERGE_PHI_TOL
}

fn theta_close(a: f64, b: f64) -> bool {
    math::fabs(a - b) <= MERGE_PHI_TOL
}

/// Mark the pulses that belong to a structurally trivial subsequence.
///
/// Patterns are matched on the raw parameter lists, longest first, scanning
/// left to right; no numeric search is involved, so the outcome is
/// deterministic and independent of error tolerances beyond exact-match
/// rounding slack.
fn trivial_skip_mask(pulses: &[RotationParams]) -> Vec<bool> {
    let mut mask = vec![false; pulses.len()];
    let mut i = 0;
    while i < pulses.len() {
        // Triple R(π, φ')·R(2π, φ)·R(π, φ').
        if i + 2 < pulses.len()
            && theta_close(pulses[i].theta(), PI)
            && theta_close(pulses[i + 1].theta(), TAU)
            && theta_close(pulses[i + 2].theta(), PI)
            && phi_congruent(pulses[i].phi(), pulses[i + 2].phi())
        {
            mask[i] = true;
            mask[i + 1] = true;
            mask[i + 2] = true;
            i += 3;
            continue;
        }
        // Pair R(θ, φ)·R(θ, φ+π).
        if i + 1 < pulses.len()
            && theta_close(pulses[i].theta(), pulses[i + 1].theta())
            && phi_congruent(pulses[i].phi() + PI, pulses[i + 1].phi())
        {
            mask[i] = true;
            mask[i + 1] = true;
            i += 2;
            continue;
        }
        // Full rotation R(2π, φ).
        if theta_close(pulses[i].theta(), TAU) {
            mask[i] = true;
        }
        i += 1;
    }
    mask
}

/// Replace each non-skipped outer pulse by the inner composite pulse built
/// for that pulse's `(θ, φ)`, returning the flattened sequence.
///
/// The recipe is validated at build time: the outer must be robust against
/// at least one error axis, and for every replaced pulse the inner must
/// preserve the elementary error structure on an axis the outer cancels.
/// A mismatch is reported as [`Error::RecipeInvalid`] naming the axis.
pub fn concatenate(recipe: CccpRecipe, target: RotationParams) -> Result<PulseSequence> {
    let outer = build_outer(recipe.outer, target)?;
    let outer_class = classify_rep_with_tol(&outer, DEFAULT_ROBUST_TOL);
    if !outer_class.robust_ple && !outer_class.robust_ore {
        return Err(Error::RecipeInvalid {
            axis: ErrorAxis::Ple,
            detail: alloc::format!(
                "outer pulse {} is not robust against either error axis",
                outer.label()
            ),
        });
    }
    let required_axis = if outer_class.robust_ple {
        ErrorAxis::Ple
    } else {
        ErrorAxis::Ore
    };

    let mask = match recipe.skip {
        SkipRule::None => vec![false; outer.len()],
        SkipRule::TrivialSubsequences => trivial_skip_mask(outer.pulses()),
    };

    let mut pulses = Vec::new();
    for (pulse, skipped) in outer.pulses().iter().zip(&mask) {
        if *skipped {
            pulses.push(*pulse);
            continue;
        }
        let inner = build_inner(recipe.inner, *pulse)?;
        let inner_class = classify_rep_with_tol(&inner, DEFAULT_ROBUST_TOL);
        let inner_ok = match inner_class.rep {
            Some(axis) => {
                (axis == ErrorAxis::Ple && outer_class.robust_ple)
                    || (axis == ErrorAxis::Ore && outer_class.robust_ore)
            }
            None => false,
        };
        if !inner_ok {
            return Err(Error::RecipeInvalid {
                axis: required_axis,
                detail: alloc::format!(
                    "inner pulse {} does not preserve the elementary {} error structure \
                     required by outer pulse {}",
                    inner.label(),
                    required_axis,
                    outer.label()
                ),
            });
        }
        pulses.extend_from_slice(inner.pulses());
    }

    let label = alloc::format!("{} in {}", inner_label(recipe.inner), outer.label());
    Ok(PulseSequence::new(label, target, pulses))
}

fn inner_label(kind: InnerPulse) -> &'static str {
    match kind {
        InnerPulse::Corpse => "CORPSE",
        InnerPulse::Sk1 => "SK1",
        InnerPulse::Bb1 => "BB1",
    }
}

/// Build one of the five named CCCPs from its Table pairing.
pub fn named_cccp(name: CccpName, target: RotationParams) -> Result<PulseSequence> {
    let seq = concatenate(cccp_recipe(name), target)?;
    Ok(seq.with_label(alloc::format!("{name}")))
}

/// Short CORPSE with the outer pulses split about the same axes so that two
/// trivial pairs appear:
///
/// ```text
/// R(θ₃, φ)·R(θ₂, φ̄)·R(θ₁, φ)
///   = R(θ₃, φ)·R(θ₃, φ̄) · R(2π-θ, φ̄) · R(θ₁, φ̄)·R(θ₁, φ),
/// ```
///
/// with `θ₁ = θ₃ = θ/2 - k`. Splitting same-axis pulses changes nothing,
/// not even in the presence of errors (all five factors commute with their
/// same-axis neighbours), but it exposes trivial pairs robust against the
/// pulse-length error, which the reduced SK1-in-short-CORPSE pulse then
/// leaves unreplaced.
pub fn modified_short_corpse(target: RotationParams) -> Result<PulseSequence> {
    let (theta, phi) = (target.theta(), target.phi());
    let k = math::asin(math::sin(0.5 * theta) / 2.0);
    let wing = 0.5 * theta - k;
    let middle = TAU - theta;
    if wing < 0.0 || middle < 0.0 {
        return Err(Error::Domain {
            formula: "modified short CORPSE angles",
            detail: alloc::format!(
                "theta={theta} gives negative pulse angles; the split form needs 0 <= theta <= 2*pi"
            ),
        });
    }
    let phi_bar = phi + PI;
    let pulses = vec![
        RotationParams::new(wing, phi)?,
        RotationParams::new(wing, phi_bar)?,
        RotationParams::new(middle, phi_bar)?,
        RotationParams::new(wing, phi_bar)?,
        RotationParams::new(wing, phi)?,
    ];
    Ok(PulseSequence::new("modified short CORPSE", target, pulses))
}

/// Reduced CORPSE-in-SK1, emitted from its closed-form parameterization:
/// CORPSE for the target followed by SK1's two full rotations, 5 pulses.
pub fn reduced_cinsk(target: RotationParams) -> Result<PulseSequence> {
    let (theta, phi) = (target.theta(), target.phi());
    let k = math::asin(math::sin(0.5 * theta) / 2.0);
    let s = arccos_checked(
        -theta / (4.0 * PI),
        "reduced CinSK phase arccos[-theta/(4*pi)]",
    )?;
    let pulses = vec![
        RotationParams::new(TAU + 0.5 * theta - k, phi)?,
        RotationParams::new(TAU - 2.0 * k, phi + PI)?,
        RotationParams::new(0.5 * theta - k, phi)?,
        RotationParams::new(TAU, phi - s)?,
        RotationParams::new(TAU, phi + s)?,
    ];
    Ok(PulseSequence::new("reduced CinSK", target, pulses))
}

/// Reduced CORPSE-in-BB1, emitted from its closed-form parameterization:
/// BB1's trivial triple followed by CORPSE for the target, 6 pulses.
pub fn reduced_cinbb(target: RotationParams) -> Result<PulseSequence> {
    let (theta, phi) = (target.theta(), target.phi());
    let k = math::asin(math::sin(0.5 * theta) / 2.0);
    let s = arccos_checked(
        -theta / (4.0 * PI),
        "reduced CinBB phase arccos[-theta/(4*pi)]",
    )?;
    let phi1 = phi + s;
    let phi2 = 3.0 * phi1 - 2.0 * phi;
    let pulses = vec![
        RotationParams::new(PI, phi1)?,
        RotationParams::new(TAU, phi2)?,
        RotationParams::new(PI, phi1)?,
        RotationParams::new(TAU + 0.5 * theta - k, phi)?,
        RotationParams::new(TAU - 2.0 * k, phi + PI)?,
        RotationParams::new(0.5 * theta - k, phi)?,
    ];
    Ok(PulseSequence::new("reduced CinBB", target, pulses))
}

/// Reduced SK1-in-modified-short-CORPSE, emitted from its closed-form
/// parameterization, 6 pulses.
///
/// The replaced pulse is the middle `R(2π-θ, φ̄)` of the modified short
/// CORPSE, so the inner SK1 is built for that target: its full-rotation
/// phases sit at `φ̄ ∓ arccos[-(2π-θ)/(4π)]`, and its first pulse merges
/// with the same-axis wing pulse in front of it into `R(2π-θ/2-k, φ̄)`.
pub fn reduced_skinsc(target: RotationParams) -> Result<PulseSequence> {
    let (theta, phi) = (target.theta(), target.phi());
    let k = math::asin(math::sin(0.5 * theta) / 2.0);
    let wing = 0.5 * theta - k;
    if wing < 0.0 || theta > TAU {
        return Err(Error::Domain {
            formula: "reduced SKinsC angles",
            detail: alloc::format!("theta={theta} outside [0, 2*pi]"),
        });
    }
    let s = arccos_checked(
        -(TAU - theta) / (4.0 * PI),
        "reduced SKinsC phase arccos[-(2*pi-theta)/(4*pi)]",
    )?;
    let phi_bar = phi + PI;
    let pulses = vec![
        RotationParams::new(wing, phi)?,
        RotationParams::new(TAU - 0.5 * theta - k, phi_bar)?,
        RotationParams::new(TAU, phi_bar - s)?,
        RotationParams::new(TAU, phi_bar + s)?,
        RotationParams::new(wing, phi_bar)?,
        RotationParams::new(wing, phi)?,
    ];
    Ok(PulseSequence::new("reduced SKinsC", target, pulses))
}

fn arccos_checked(x: f64, formula: &'static str) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain {
            formula,
            detail: alloc::format!("arccos argument {x} outside [-1, 1]"),
        });
    }
    Ok(math::acos(x))
}

/// Merge adjacent pulses sharing an axis (`φ` equal mod 2π within 1e-12) by
/// adding their angles.
///
/// Same-axis rotations commute with each other and with their own error
/// terms, so the merged sequence has identical behavior at every `(ε, f)`,
/// not merely to first order.
pub fn merge_same_axis(seq: &PulseSequence) -> PulseSequence {
    let mut merged: Vec<RotationParams> = Vec::with_capacity(seq.len());
    for p in seq.pulses() {
        match merged.last_mut() {
            Some(last) if phi_congruent(last.phi(), p.phi()) => {
                *last = RotationParams::new(last.theta() + p.theta(), last.phi())
                    .expect("sum of finite angles is finite");
            }
            _ => merged.push(*p),
        }
    }
    PulseSequence::new(seq.label(), seq.target(), merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error_model::{first_order_errors, is_robust, sequence_with_errors, ErrorStrengths};
    use crate::library::elementary;
    use crate::su2::fidelity;
    use core::f64::consts::FRAC_PI_2;

    fn params(theta: f64, phi: f64) -> RotationParams {
        RotationParams::new(theta, phi).unwrap()
    }

    fn targets() -> Vec<RotationParams> {
        let mut v = Vec::new();
        for &theta in &[PI / 6.0, FRAC_PI_2, PI, 3.0 * PI / 2.0] {
            for &phi in &[0.0, PI / 4.0] {
                v.push(params(theta, phi));
            }
        }
        v
    }

    #[test]
    fn cccp_names_round_trip() {
        for name in CccpName::ALL {
            let text = alloc::format!("{name}");
            assert_eq!(text.parse::<CccpName>().unwrap(), name);
        }
        assert!(matches!(
            "corpsey".parse::<CccpName>(),
            Err(Error::UnknownName(_))
        ));
    }

    #[test]
    fn cins_has_nine_pulses() {
        let seq = named_cccp(CccpName::CinS, params(PI, 0.0)).unwrap();
        assert_eq!(seq.len(), 9);
    }

    #[test]
    fn cinsk_angle_pattern() {
        let seq = named_cccp(CccpName::CinSk, params(PI, 0.0)).unwrap();
        assert_eq!(seq.len(), 9);
        let th: Vec<f64> = seq.pulses().iter().map(|p| p.theta()).collect();
        // The two CORPSE(2π) blocks have angles 3π, 2π, π.
        assert!(math::fabs(th[3] - 3.0 * PI) < 1e-12);
        assert!(math::fabs(th[6] - 3.0 * PI) < 1e-12);
        assert!(math::fabs(th[4] - TAU) < 1e-12);
        assert!(math::fabs(th[7] - TAU) < 1e-12);
        assert!(math::fabs(th[5] - PI) < 1e-12);
        assert!(math::fabs(th[8] - PI) < 1e-12);
    }

    #[test]
    fn cccp_pulse_counts_match_table() {
        let t = params(PI, 0.0);
        let counts = [
            (CccpName::CinS, 9),
            (CccpName::CinSk, 9),
            (CccpName::SkInSc, 9),
            (CccpName::CinBb, 12),
            (CccpName::BbInSc, 12),
        ];
        for (name, n) in counts {
            assert_eq!(named_cccp(name, t).unwrap().len(), n, "{name}");
        }
    }

    #[test]
    fn all_cccps_cancel_both_first_order_errors() {
        for t in targets() {
            for name in CccpName::ALL {
                // SCROFULOUS has no parameterization beyond θ = π.
                let seq = match named_cccp(name, t) {
                    Ok(seq) => seq,
                    Err(Error::Domain { .. }) if name == CccpName::CinS => continue,
                    Err(e) => panic!("{name} failed at {t}: {e}"),
                };
                let f = fidelity(&seq.product(), &seq.target_matrix());
                assert!(f >= 1.0 - 1e-10, "{name} at {t}: fidelity {f}");
                let fo = first_order_errors(&seq);
                assert!(fo.e_eps.max_norm() <= 1e-6, "{name} at {t}");
                assert!(fo.e_f.max_norm() <= 1e-6, "{name} at {t}");
            }
        }
    }

    #[test]
    fn reduced_builders_cancel_both_first_order_errors() {
        for t in targets() {
            for (label, seq) in [
                ("reduced CinSK", reduced_cinsk(t).unwrap()),
                ("reduced CinBB", reduced_cinbb(t).unwrap()),
                ("reduced SKinsC", reduced_skinsc(t).unwrap()),
            ] {
                let f = fidelity(&seq.product(), &seq.target_matrix());
                assert!(f >= 1.0 - 1e-10, "{label} at {t}: fidelity {f}");
                let fo = first_order_errors(&seq);
                assert!(fo.e_eps.max_norm() <= 1e-6, "{label} at {t}: e_eps");
                assert!(fo.e_f.max_norm() <= 1e-6, "{label} at {t}: e_f");
            }
        }
    }

    #[test]
    fn reduced_pulse_counts() {
        let t = params(PI, 0.0);
        assert_eq!(reduced_cinsk(t).unwrap().len(), 5);
        assert_eq!(reduced_cinbb(t).unwrap().len(), 6);
        assert_eq!(reduced_skinsc(t).unwrap().len(), 6);
    }

    #[test]
    fn dual_path_reduced_construction_agrees() {
        for t in targets() {
            let pairs = [
                (reduced_cinsk(t).unwrap(), reduced_cinsk_recipe()),
                (reduced_cinbb(t).unwrap(), reduced_cinbb_recipe()),
                (reduced_skinsc(t).unwrap(), reduced_skinsc_recipe()),
            ];
            for (closed, recipe) in pairs {
                let concatenated = merge_same_axis(&concatenate(recipe, t).unwrap());
                assert_eq!(closed.len(), concatenated.len(), "{}", closed.label());
                for (a, b) in closed.pulses().iter().zip(concatenated.pulses()) {
                    assert!(
                        math::fabs(a.theta() - b.theta()) <= 1e-12
                            && math::fabs(a.phi() - b.phi()) <= 1e-12,
                        "{} at {t}: {a} vs {b}",
                        closed.label()
                    );
                }
            }
        }
    }

    #[test]
    fn skip_rule_finds_trivial_structures() {
        let t = params(PI, 0.0);
        let mask = trivial_skip_mask(sk1(t).unwrap().pulses());
        assert_eq!(mask, vec![false, true, true]);
        let mask = trivial_skip_mask(bb1(t).unwrap().pulses());
        assert_eq!(mask, vec![true, true, true, false]);
        let mask = trivial_skip_mask(modified_short_corpse(t).unwrap().pulses());
        assert_eq!(mask, vec![true, true, false, true, true]);
    }

    #[test]
    fn modified_short_corpse_equals_short_corpse_product() {
        for t in targets() {
            let modified = modified_short_corpse(t).unwrap();
            let plain = short_corpse(t).unwrap();
            assert!(modified.product().approx_eq(&plain.product(), 1e-12));
            // The split commutes with error injection too.
            let e = ErrorStrengths::new(0.17, -0.29).unwrap();
            assert!(sequence_with_errors(&modified, e)
                .approx_eq(&sequence_with_errors(&plain, e), 1e-12));
        }
    }

    #[test]
    fn modified_short_corpse_angles_at_pi() {
        let seq = modified_short_corpse(params(PI, 0.0)).unwrap();
        let th: Vec<f64> = seq.pulses().iter().map(|p| p.theta()).collect();
        for (got, want) in th.iter().zip([PI / 3.0, PI / 3.0, PI, PI / 3.0, PI / 3.0]) {
            assert!(math::fabs(got - want) < 1e-12);
        }
        // Both wing pairs are trivial and PLE-robust.
        let front = PulseSequence::new("front pair", params(0.0, 0.0), seq.pulses()[..2].to_vec());
        assert!(crate::su2::is_trivial(&front.product(), 1e-12));
        assert!(is_robust(&front, ErrorAxis::Ple, DEFAULT_ROBUST_TOL));
        let back = PulseSequence::new("back pair", params(0.0, 0.0), seq.pulses()[3..].to_vec());
        assert!(crate::su2::is_trivial(&back.product(), 1e-12));
        assert!(is_robust(&back, ErrorAxis::Ple, DEFAULT_ROBUST_TOL));
    }

    #[test]
    fn merge_collapses_adjacent_same_axis_pulses() {
        let seq = PulseSequence::new(
            "split",
            params(1.5, 0.2),
            vec![params(0.9, 0.2), params(0.6, 0.2), params(1.0, 0.7)],
        );
        let merged = merge_same_axis(&seq);
        assert_eq!(merged.len(), 2);
        assert!(math::fabs(merged.pulses()[0].theta() - 1.5) < 1e-15);
        // Error behavior is untouched at finite strengths.
        let e = ErrorStrengths::new(0.2, 0.3).unwrap();
        assert!(sequence_with_errors(&seq, e).approx_eq(&sequence_with_errors(&merged, e), 1e-12));
    }

    #[test]
    fn merge_recognizes_phases_congruent_mod_two_pi() {
        let seq = PulseSequence::new(
            "wrapped",
            params(2.0, 0.0),
            vec![params(1.0, 0.3), params(1.0, 0.3 + TAU)],
        );
        assert_eq!(merge_same_axis(&seq).len(), 1);
    }

    #[test]
    fn premerge_reduced_skinsc_has_seven_pulses() {
        let t = params(PI, 0.0);
        let raw = concatenate(reduced_skinsc_recipe(), t).unwrap();
        assert_eq!(raw.len(), 7);
        assert_eq!(merge_same_axis(&raw).len(), 6);
    }

    #[test]
    fn mismatched_recipe_is_rejected() {
        // CORPSE inside short CORPSE: the inner preserves the PLE structure
        // but the outer only cancels ORE.
        let bad = CccpRecipe {
            outer: OuterPulse::ShortCorpse,
            inner: InnerPulse::Corpse,
            skip: SkipRule::None,
        };
        match concatenate(bad, params(PI, 0.0)) {
            Err(Error::RecipeInvalid { axis, .. }) => assert_eq!(axis, ErrorAxis::Ore),
            other => panic!("expected recipe error, got {other:?}"),
        }
    }

    #[test]
    fn no_two_pulse_sequence_is_both_robust_and_nontrivial() {
        // Spot-check over the library's two-pulse constructions.
        for &(theta, phi) in &[(0.7, 0.0), (1.9, 1.1), (PI, 2.0)] {
            let pair = crate::library::trivial_pair(theta, phi).unwrap();
            assert!(crate::su2::is_trivial(&pair.product(), 1e-10));
        }
        // A non-trivial two-pulse sequence must fail robustness on both axes.
        let seq = PulseSequence::new(
            "generic pair",
            params(1.0, 0.0),
            vec![params(0.4, 0.1), params(0.6, 0.4)],
        );
        assert!(!is_robust(&seq, ErrorAxis::Ple, DEFAULT_ROBUST_TOL));
        assert!(!is_robust(&seq, ErrorAxis::Ore, DEFAULT_ROBUST_TOL));
        let _ = elementary(params(1.0, 0.0));
    }
}
