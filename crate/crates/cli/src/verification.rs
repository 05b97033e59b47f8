//! The verification suite behind `cpulse verify` and the acceptance tests:
//! eight checks covering the published tables, first-order cancellation,
//! robustness scaling, closed-form time costs, the two-pulse no-go scan,
//! dual-path construction, and the global correctness floor.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt::Write as _;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cpulse_core::{
    classify_rep, concatenate, fidelity, first_order_errors, merge_same_axis,
    modified_short_corpse, reduced_cinbb_recipe, reduced_cinsk_recipe, reduced_skinsc_recipe,
    robustness_order, sequence_with_errors, time_cost, Error, ErrorAxis, ErrorStrengths,
    PulseSequence, RotationParams, SweepAxis,
};

use crate::names::{self, PulseName};
use crate::parallel::no_go_scan_threaded;

/// Outcome of one verification criterion.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

/// Knobs for the suite; the defaults pin the published tolerances.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub nogo_resolution: usize,
    pub robust_tol: f64,
    pub trivial_tol: f64,
    pub threads: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            nogo_resolution: 32,
            robust_tol: 1e-6,
            trivial_tol: 1e-6,
            threads: 0,
        }
    }
}

/// Number of criteria in the suite.
pub const CRITERIA: usize = 8;

/// Run a single criterion by its 1-based index.
pub fn run_criterion(index: usize, opts: &VerifyOptions) -> CriterionReport {
    match index {
        1 => check_time_cost_table(),
        2 => check_rep_table(),
        3 => check_first_order_cancellation(),
        4 => check_robustness_orders(),
        5 => check_cinsk_time_cost_formula(),
        6 => check_no_go_scan(opts),
        7 => check_dual_path_and_merge(),
        8 => check_correctness_floor(),
        _ => panic!("criterion index {index} out of range 1..={CRITERIA}"),
    }
}

/// Run all eight criteria in order.
pub fn run_all(opts: &VerifyOptions) -> Vec<CriterionReport> {
    (1..=CRITERIA).map(|i| run_criterion(i, opts)).collect()
}

fn report(
    index: usize,
    name: &'static str,
    started: Instant,
    budget_seconds: f64,
    failures: Vec<String>,
    summary: String,
) -> CriterionReport {
    let seconds = started.elapsed().as_secs_f64();
    let mut passed = failures.is_empty();
    let mut detail = summary;
    if seconds > budget_seconds {
        passed = false;
        let _ = write!(detail, "; exceeded {budget_seconds:.0} s runtime budget");
    }
    if !failures.is_empty() {
        detail = failures.join("; ");
    }
    CriterionReport {
        index,
        name,
        passed,
        detail,
        seconds,
    }
}

/// Expected pulse counts and time costs at θ = π/2 and θ = π.
const TIME_COST_TABLE: [(PulseName, usize, f64, f64); 14] = [
    (PulseName::Elementary, 1, 0.5, 1.0),
    (PulseName::Scrofulous, 3, 2.3, 3.0),
    (PulseName::Sk1, 3, 4.5, 5.0),
    (PulseName::Bb1, 4, 4.5, 5.0),
    (PulseName::ShortCorpse, 3, 2.0, 2.3),
    (PulseName::Corpse, 3, 4.0, 4.3),
    (PulseName::CinS, 9, 12.5, 13.0),
    (PulseName::CinSk, 9, 16.0, 16.3),
    (PulseName::CinBb, 12, 18.7, 19.0),
    (PulseName::SkInSc, 9, 14.0, 14.3),
    (PulseName::BbInSc, 12, 14.0, 14.3),
    (PulseName::ReducedCinSk, 5, 8.0, 8.3),
    (PulseName::ReducedCinBb, 6, 8.0, 8.3),
    (PulseName::ReducedSkInSc, 6, 6.0, 6.3),
];

fn check_time_cost_table() -> CriterionReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    for (name, expected_n, t_half, t_pi) in TIME_COST_TABLE {
        for (theta, expected_t) in [(FRAC_PI_2, t_half), (PI, t_pi)] {
            match names::build(name, theta, 0.0, None).and_then(|seq| {
                let t = time_cost(&seq)?;
                Ok((seq.len(), t))
            }) {
                Ok((n, t)) => {
                    if n != expected_n {
                        failures.push(format!("{name}: N = {n}, expected {expected_n}"));
                    }
                    if (t - expected_t).abs() > 0.05 {
                        failures.push(format!(
                            "{name} at theta={theta:.4}: T = {t:.4}, expected {expected_t} +/- 0.05"
                        ));
                    }
                }
                Err(e) => failures.push(format!("{name}: {e}")),
            }
        }
    }
    report(
        1,
        "operation-time-cost table",
        started,
        1.0,
        failures,
        "14 rows: N exact, T(pi/2) and T(pi) within +/-0.05".to_string(),
    )
}

/// Expected (REP axis, robust-PLE, robust-ORE) per single-error composite.
const REP_TABLE: [(PulseName, Option<ErrorAxis>, bool, bool); 5] = [
    (PulseName::Sk1, Some(ErrorAxis::Ore), true, false),
    (PulseName::Bb1, Some(ErrorAxis::Ore), true, false),
    (PulseName::Scrofulous, None, true, false),
    (PulseName::Corpse, Some(ErrorAxis::Ple), false, true),
    (PulseName::ShortCorpse, None, false, true),
];

fn check_rep_table() -> CriterionReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    for (name, rep, robust_ple, robust_ore) in REP_TABLE {
        for theta in [FRAC_PI_2, PI] {
            match names::build(name, theta, 0.0, None) {
                Ok(seq) => {
                    let class = classify_rep(&seq);
                    if class.rep != rep
                        || class.robust_ple != robust_ple
                        || class.robust_ore != robust_ore
                    {
                        failures.push(format!(
                            "{name} at theta={theta:.4}: got rep={:?} robust=({}, {}), \
                             expected rep={rep:?} robust=({robust_ple}, {robust_ore})",
                            class.rep, class.robust_ple, class.robust_ore
                        ));
                    }
                }
                Err(e) => failures.push(format!("{name}: {e}")),
            }
        }
    }
    report(
        2,
        "REP classification table",
        started,
        1.0,
        failures,
        "5 composite pulses at theta = pi/2 and pi".to_string(),
    )
}

const CCCP_NAMES: [PulseName; 8] = [
    PulseName::CinS,
    PulseName::CinSk,
    PulseName::SkInSc,
    PulseName::CinBb,
    PulseName::BbInSc,
    PulseName::ReducedCinSk,
    PulseName::ReducedCinBb,
    PulseName::ReducedSkInSc,
];

const CCCP_THETAS: [f64; 4] = [PI / 6.0, FRAC_PI_2, PI, 3.0 * PI / 2.0];

fn check_first_order_cancellation() -> CriterionReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut skipped = 0;
    for name in CCCP_NAMES {
        for theta in CCCP_THETAS {
            match names::build(name, theta, 0.0, None) {
                Ok(seq) => {
                    let fo = first_order_errors(&seq);
                    let (eps_norm, f_norm) = (fo.e_eps.max_norm(), fo.e_f.max_norm());
                    if eps_norm > 1e-6 || f_norm > 1e-6 {
                        failures.push(format!(
                            "{name} at theta={theta:.4}: |E_eps|={eps_norm:.2e}, |E_f|={f_norm:.2e}"
                        ));
                    }
                }
                // SCROFULOUS (and so CinS) has no parameterization past
                // theta = pi; the builder documents this as a domain error.
                Err(Error::Domain { .. }) if name == PulseName::CinS && theta > PI => {
                    skipped += 1;
                }
                Err(e) => failures.push(format!("{name} at theta={theta:.4}: {e}")),
            }
        }
    }
    report(
        3,
        "CCCP first-order cancellation",
        started,
        5.0,
        failures,
        format!(
            "8 concatenated pulses x 4 targets, both operator norms <= 1e-6 \
             ({skipped} out-of-domain CinS target raising the documented error)"
        ),
    )
}

fn slope(seq: &PulseSequence, axis: SweepAxis) -> Result<f64, String> {
    robustness_order(seq, axis)
        .map(|fit| fit.slope)
        .map_err(|e| e.to_string())
}

fn expect_slope(
    failures: &mut Vec<String>,
    label: &str,
    seq: &PulseSequence,
    axis: SweepAxis,
    min: Option<f64>,
    near_two: bool,
) {
    match slope(seq, axis) {
        Ok(s) => {
            if let Some(min) = min {
                if s < min {
                    failures.push(format!("{label} on {axis}: slope {s:.3} < {min}"));
                }
            }
            if near_two && (s - 2.0).abs() > 0.1 {
                failures.push(format!(
                    "{label} on {axis}: slope {s:.3} not within 2.0 +/- 0.1"
                ));
            }
        }
        Err(e) => failures.push(format!("{label} on {axis}: {e}")),
    }
}

fn check_robustness_orders() -> CriterionReport {
    let started = Instant::now();
    let mut failures = Vec::new();

    let plain = names::build(PulseName::Elementary, PI, 0.0, None).unwrap();
    expect_slope(
        &mut failures,
        "elementary",
        &plain,
        SweepAxis::Ple,
        None,
        true,
    );
    expect_slope(
        &mut failures,
        "elementary",
        &plain,
        SweepAxis::Ore,
        None,
        true,
    );

    // Single-error composites: at least quartic on the protected axis,
    // quadratic on the other.
    let singles = [
        (PulseName::Scrofulous, SweepAxis::Ple, SweepAxis::Ore),
        (PulseName::Sk1, SweepAxis::Ple, SweepAxis::Ore),
        (PulseName::Bb1, SweepAxis::Ple, SweepAxis::Ore),
        (PulseName::Corpse, SweepAxis::Ore, SweepAxis::Ple),
        (PulseName::ShortCorpse, SweepAxis::Ore, SweepAxis::Ple),
    ];
    for (name, protected, open) in singles {
        match names::build(name, PI, 0.0, None) {
            Ok(seq) => {
                let label = name.display_name();
                expect_slope(&mut failures, label, &seq, protected, Some(3.5), false);
                expect_slope(&mut failures, label, &seq, open, None, true);
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }

    for name in CCCP_NAMES {
        match names::build(name, PI, 0.0, None) {
            Ok(seq) => {
                let label = name.display_name();
                for axis in [SweepAxis::Ple, SweepAxis::Ore, SweepAxis::Diagonal] {
                    expect_slope(&mut failures, label, &seq, axis, Some(3.5), false);
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }

    report(
        4,
        "robustness-order fits",
        started,
        10.0,
        failures,
        "infidelity exponents: ~2 on open axes, >= 3.5 on protected axes \
         (both CCCP axes and the diagonal)"
            .to_string(),
    )
}

fn check_cinsk_time_cost_formula() -> CriterionReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    for _ in 0..20 {
        let theta: f64 = rng.random_range(1e-6..TAU);
        let k = ((0.5 * theta).sin() / 2.0).asin();
        let expected_full = 16.0 + (theta - 4.0 * k) / PI;
        let expected_reduced = 8.0 + (theta - 4.0 * k) / PI;
        match (
            names::build(PulseName::CinSk, theta, 0.0, None).and_then(|s| time_cost(&s)),
            names::build(PulseName::ReducedCinSk, theta, 0.0, None).and_then(|s| time_cost(&s)),
        ) {
            (Ok(t_full), Ok(t_reduced)) => {
                if (t_full - expected_full).abs() > 1e-12 {
                    failures.push(format!(
                        "CinSK at theta={theta:.6}: T={t_full:.15} vs {expected_full:.15}"
                    ));
                }
                if (t_reduced - expected_reduced).abs() > 1e-12 {
                    failures.push(format!(
                        "reduced CinSK at theta={theta:.6}: T={t_reduced:.15} vs {expected_reduced:.15}"
                    ));
                }
            }
            (a, b) => failures.push(format!("build failed at theta={theta:.6}: {a:?} {b:?}")),
        }
    }
    report(
        5,
        "CinSK time-cost formula",
        started,
        1.0,
        failures,
        "T = 16 + (theta-4k)/pi and 8 + (theta-4k)/pi at 20 seeded random targets, to 1e-12"
            .to_string(),
    )
}

fn check_no_go_scan(opts: &VerifyOptions) -> CriterionReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut summary = String::new();
    match no_go_scan_threaded(
        opts.nogo_resolution,
        opts.robust_tol,
        opts.trivial_tol,
        opts.threads,
    ) {
        Ok(r) => {
            if r.violations != 0 {
                failures.push(format!(
                    "{} robust-yet-nontrivial pairs at resolution {}",
                    r.violations, opts.nogo_resolution
                ));
            }
            let _ = write!(
                summary,
                "{} pairs at resolution {}: {} PLE-robust, {} ORE-robust, {} violations",
                r.pairs_scanned, opts.nogo_resolution, r.ple_robust, r.ore_robust, r.violations
            );
        }
        Err(e) => failures.push(e.to_string()),
    }
    report(6, "two-pulse no-go scan", started, 300.0, failures, summary)
}

fn check_dual_path_and_merge() -> CriterionReport {
    let started = Instant::now();
    let mut failures = Vec::new();

    let reduced = [
        (PulseName::ReducedCinSk, reduced_cinsk_recipe()),
        (PulseName::ReducedCinBb, reduced_cinbb_recipe()),
        (PulseName::ReducedSkInSc, reduced_skinsc_recipe()),
    ];
    for theta in CCCP_THETAS {
        for phi in [0.0, PI / 4.0] {
            let target = RotationParams::new(theta, phi).unwrap();
            for (name, recipe) in reduced {
                let closed = match names::build(name, theta, phi, None) {
                    Ok(seq) => seq,
                    Err(e) => {
                        failures.push(format!("{name} closed form at theta={theta:.4}: {e}"));
                        continue;
                    }
                };
                let concatenated = match concatenate(recipe, target) {
                    Ok(seq) => merge_same_axis(&seq),
                    Err(e) => {
                        failures.push(format!("{name} recipe path at theta={theta:.4}: {e}"));
                        continue;
                    }
                };
                if closed.len() != concatenated.len() {
                    failures.push(format!(
                        "{name} at theta={theta:.4}: {} vs {} pulses",
                        closed.len(),
                        concatenated.len()
                    ));
                    continue;
                }
                for (a, b) in closed.pulses().iter().zip(concatenated.pulses()) {
                    if (a.theta() - b.theta()).abs() > 1e-12 || (a.phi() - b.phi()).abs() > 1e-12 {
                        failures.push(format!(
                            "{name} at theta={theta:.4}, phi={phi:.4}: pulse mismatch {a} vs {b}"
                        ));
                        break;
                    }
                }
            }
        }
    }

    // Merging must leave the propagator untouched at finite error strengths.
    let target = RotationParams::new(PI, 0.0).unwrap();
    let premerge = concatenate(reduced_skinsc_recipe(), target).unwrap();
    let merged = merge_same_axis(&premerge);
    if premerge.len() != 7 || merged.len() != 6 {
        failures.push(format!(
            "pre-merge/merged pulse counts {} / {}, expected 7 / 6",
            premerge.len(),
            merged.len()
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x0bad_5eed);
    for _ in 0..10 {
        let e =
            ErrorStrengths::new(rng.random_range(-0.5..0.5), rng.random_range(-0.5..0.5)).unwrap();
        let before = sequence_with_errors(&premerge, e);
        let after = sequence_with_errors(&merged, e);
        if !before.approx_eq(&after, 1e-12) {
            failures.push(format!(
                "merge changed the propagator at (eps, f) = ({:.4}, {:.4})",
                e.epsilon(),
                e.f()
            ));
        }
    }

    report(
        7,
        "dual-path construction and merge invariance",
        started,
        5.0,
        failures,
        "closed forms equal concatenate+skip to 1e-12 at 8 targets; \
         merging preserved the propagator at 10 seeded error points"
            .to_string(),
    )
}

fn floor_check(
    failures: &mut Vec<String>,
    built: &mut usize,
    label: &str,
    seq: &PulseSequence,
    sample_errors: ErrorStrengths,
) {
    *built += 1;
    let f = fidelity(&seq.product(), &seq.target_matrix());
    if f < 1.0 - 1e-10 {
        failures.push(format!("{label}: zero-error fidelity {f}"));
    }
    let drift = seq.product().unitarity_error();
    if drift > 1e-12 {
        failures.push(format!("{label}: unitarity drift {drift:.2e}"));
    }
    let perturbed_drift = sequence_with_errors(seq, sample_errors).unitarity_error();
    if perturbed_drift > 1e-12 {
        failures.push(format!(
            "{label}: perturbed unitarity drift {perturbed_drift:.2e}"
        ));
    }
}

fn check_correctness_floor() -> CriterionReport {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut built = 0usize;
    let sample_errors = ErrorStrengths::new(0.3, -0.4).unwrap();

    for theta in CCCP_THETAS {
        for phi in [0.0, PI / 4.0] {
            for name in PulseName::TABLE_ORDER {
                match names::build(name, theta, phi, None) {
                    Ok(seq) => floor_check(
                        &mut failures,
                        &mut built,
                        name.display_name(),
                        &seq,
                        sample_errors,
                    ),
                    Err(Error::Domain { .. } | Error::DegenerateTarget(_))
                        if theta > PI
                            && (name == PulseName::Scrofulous || name == PulseName::CinS) => {}
                    Err(e) => failures.push(format!("{name} at theta={theta:.4}: {e}")),
                }
            }
            match modified_short_corpse(RotationParams::new(theta, phi).unwrap()) {
                Ok(seq) => floor_check(
                    &mut failures,
                    &mut built,
                    "modified short CORPSE",
                    &seq,
                    sample_errors,
                ),
                Err(e) => failures.push(format!("modified short CORPSE at theta={theta:.4}: {e}")),
            }
            for (name, phi_prime) in [
                (PulseName::TrivialPair, None),
                (PulseName::FullRotation, None),
                (PulseName::TrivialTriple, Some(phi + 0.3)),
            ] {
                match names::build(name, theta, phi, phi_prime) {
                    Ok(seq) => floor_check(
                        &mut failures,
                        &mut built,
                        name.display_name(),
                        &seq,
                        sample_errors,
                    ),
                    Err(e) => failures.push(format!("{name}: {e}")),
                }
            }
        }
    }

    report(
        8,
        "correctness floor",
        started,
        5.0,
        failures,
        format!(
            "{built} built sequences: zero-error fidelity >= 1-1e-10, \
             unitarity drift <= 1e-12 (also at (eps, f) = (0.3, -0.4))"
        ),
    )
}
