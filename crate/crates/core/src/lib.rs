//! Composite pulses for single-qubit gates under systematic control errors.
//!
//! A single-qubit gate driven by a resonant pulse is an SU(2) rotation
//! `R(θ, φ)` about an axis in the xy-plane of the Bloch sphere. Real pulses
//! suffer two systematic errors: a pulse-length error (PLE) that rescales the
//! rotation angle, `θ → (1+ε)θ`, and an off-resonance error (ORE) that tilts
//! the rotation axis out of the plane by adding `f·σz` to the generator.
//! Composite pulses are short sequences of such rotations arranged so that
//! the first-order error term cancels.
//!
//! This crate builds the classic single-error composite pulses (BB1,
//! SCROFULOUS, SK1, CORPSE, short CORPSE), concatenates them into pulses
//! robust against both errors at once (CCCPs), derives the shortened
//! "reduced" variants, and provides the analysis tools used to verify all of
//! them: exact error propagators, first-order error operators, residual-
//! error-preserving (REP) classification, gate fidelity landscapes, operation
//! time cost, and a brute-force scan confirming that two-pulse composite
//! pulses are necessarily trivial.
//!
//! The crate is `no_std` (it allocates, but performs no IO); the companion
//! `cpulse-cli` crate carries the command-line surface and file formats.
//!
//! # Quick start
//!
//! ```
//! use core::f64::consts::PI;
//! use cpulse_core::{classify_rep, corpse, reduced_cinsk, time_cost};
//! use cpulse_core::{CorpseWindings, ErrorAxis, RotationParams};
//!
//! let target = RotationParams::new(PI, 0.0)?;
//!
//! // CORPSE suppresses the off-resonance error and preserves the
//! // pulse-length error structure of a bare pulse.
//! let corpse = corpse(target, CorpseWindings::standard())?;
//! let class = classify_rep(&corpse);
//! assert!(class.robust_ore);
//! assert_eq!(class.rep, Some(ErrorAxis::Ple));
//!
//! // Nesting it inside SK1 and skipping SK1's trivial full rotations
//! // gives a 5-pulse sequence robust against both errors.
//! let reduced = reduced_cinsk(target)?;
//! assert_eq!(reduced.len(), 5);
//! let both = classify_rep(&reduced);
//! assert!(both.robust_ple && both.robust_ore);
//! assert!((time_cost(&reduced)? - 25.0 / 3.0).abs() < 1e-12);
//! # Ok::<(), cpulse_core::Error>(())
//! ```

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod concat;
pub mod error;
pub mod error_model;
pub mod library;
mod math;
pub mod su2;

pub use error::{Error, Result};
pub use num_complex::Complex64;

pub use su2::{compose, fidelity, is_trivial, rotation, PulseSequence, RotationParams, Unitary2};

pub use error_model::{
    first_order_errors, is_robust, pulse_with_errors, sequence_with_errors, ErrorAxis,
    ErrorStrengths, FirstOrderErrors, DEFAULT_ROBUST_TOL,
};

pub use library::{
    arcsinc, bb1, corpse, elementary, full_rotation, scrofulous, short_corpse, sk1, trivial_pair,
    trivial_triple, CorpseWindings,
};

pub use concat::{
    cccp_recipe, concatenate, merge_same_axis, modified_short_corpse, named_cccp, reduced_cinbb,
    reduced_cinbb_recipe, reduced_cinsk, reduced_cinsk_recipe, reduced_skinsc,
    reduced_skinsc_recipe, CccpName, CccpRecipe, InnerPulse, OuterPulse, SkipRule,
};

pub use analysis::{
    classify_rep, classify_rep_with_tol, fidelity_map, n2_no_go_scan, robustness_order, time_cost,
    FidelityMap, NoGoReport, RepClassification, RobustnessFit, SweepAxis,
};
