//! Exact 2×2 special-unitary algebra: rotations, composition, adjoints,
//! fidelity and triviality testing.
//!
//! The propagator of a resonant pulse with rotation angle `θ` and azimuthal
//! axis angle `φ` is
//!
//! ```text
//! R(θ, φ) = exp[-i θ n(φ)·σ / 2],    n(φ) = (cos φ, sin φ, 0),
//! ```
//!
//! built here in closed form from `cos(θ/2)` and `sin(θ/2)` rather than a
//! generic matrix exponential, so every rotation is unitary to machine
//! precision by construction. Global phase is never normalized away in
//! storage; phase-sensitive comparisons go through [`fidelity`] or
//! [`is_trivial`], which mod it out.
//!
//! All values are immutable after construction and safe to share across
//! threads.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::math;

/// A 2×2 complex matrix stored dense in row-major order `[a, b, c, d]`.
///
/// Rotation constructors and products of rotations are unitary; the same
/// type also carries the (non-unitary) first-order error operators produced
/// by differentiation. Unitarity is a checked property, not an enforced one:
/// see [`Unitary2::unitarity_error`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unitary2 {
    entries: [Complex64; 4],
}

const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

impl Unitary2 {
    /// Identity matrix.
    pub const IDENTITY: Unitary2 = Unitary2 {
        entries: [C_ONE, C_ZERO, C_ZERO, C_ONE],
    };

    /// Pauli σx.
    pub const SIGMA_X: Unitary2 = Unitary2 {
        entries: [C_ZERO, C_ONE, C_ONE, C_ZERO],
    };

    /// Pauli σy.
    pub const SIGMA_Y: Unitary2 = Unitary2 {
        entries: [
            C_ZERO,
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            C_ZERO,
        ],
    };

    /// Pauli σz.
    pub const SIGMA_Z: Unitary2 = Unitary2 {
        entries: [C_ONE, C_ZERO, C_ZERO, Complex64::new(-1.0, 0.0)],
    };

    /// Build from row-major entries `[[a, b], [c, d]]`.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self {
            entries: [a, b, c, d],
        }
    }

    /// Row-major entries `[a, b, c, d]`.
    pub fn entries(&self) -> [Complex64; 4] {
        self.entries
    }

    /// Entry at `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[2 * row + col]
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let [a, b, c, d] = self.entries;
        Self::new(a.conj(), c.conj(), b.conj(), d.conj())
    }

    /// Trace `a + d`.
    pub fn trace(&self) -> Complex64 {
        self.entries[0] + self.entries[3]
    }

    /// Determinant `ad - bc`.
    pub fn det(&self) -> Complex64 {
        let [a, b, c, d] = self.entries;
        a * d - b * c
    }

    /// Multiply every entry by a complex scalar.
    pub fn scale(&self, z: Complex64) -> Self {
        let [a, b, c, d] = self.entries;
        Self::new(a * z, b * z, c * z, d * z)
    }

    /// Largest entry magnitude, `max_ij |m_ij|`.
    pub fn max_norm(&self) -> f64 {
        let mut m = 0.0f64;
        for e in &self.entries {
            m = m.max(e.norm_sqr());
        }
        math::sqrt(m)
    }

    /// `‖U†U - I‖_max`: how far the matrix is from unitary.
    pub fn unitarity_error(&self) -> f64 {
        (self.dagger() * *self - Self::IDENTITY).max_norm()
    }

    /// Entrywise comparison: every `|self - other|` entry at most `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (*self - *other).max_norm() <= tol
    }
}

impl Mul for Unitary2 {
    type Output = Unitary2;

    fn mul(self, rhs: Unitary2) -> Unitary2 {
        let [a, b, c, d] = self.entries;
        let [e, f, g, h] = rhs.entries;
        Unitary2::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    }
}

impl Add for Unitary2 {
    type Output = Unitary2;

    fn add(self, rhs: Unitary2) -> Unitary2 {
        let [a, b, c, d] = self.entries;
        let [e, f, g, h] = rhs.entries;
        Unitary2::new(a + e, b + f, c + g, d + h)
    }
}

impl Sub for Unitary2 {
    type Output = Unitary2;

    fn sub(self, rhs: Unitary2) -> Unitary2 {
        let [a, b, c, d] = self.entries;
        let [e, f, g, h] = rhs.entries;
        Unitary2::new(a - e, b - f, c - g, d - h)
    }
}

/// Rotation angle `θ` and azimuthal axis angle `φ` of one elementary pulse,
/// both in radians.
///
/// Angles are kept raw: builders deliberately emit `θ > 2π` (CORPSE) and
/// phases outside `[0, 2π)`, and the operation time cost depends on the raw
/// values. Reduction of `φ` to `[0, 2π)` is an explicit step,
/// [`RotationParams::normalized`], never a silent one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationParams {
    theta: f64,
    phi: f64,
}

impl RotationParams {
    /// Create pulse parameters; both angles must be finite.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() || !phi.is_finite() {
            return Err(Error::InvalidParameter(alloc::format!(
                "rotation angles must be finite, got theta={theta}, phi={phi}"
            )));
        }
        Ok(Self { theta, phi })
    }

    /// Rotation angle in radians.
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Azimuthal axis angle in radians.
    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Same rotation with `φ` reduced to `[0, 2π)`; `θ` is left untouched.
    pub fn normalized(&self) -> Self {
        Self {
            theta: self.theta,
            phi: math::wrap_two_pi(self.phi),
        }
    }
}

impl fmt::Display for RotationParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R(theta={:.6}, phi={:.6})", self.theta, self.phi)
    }
}

/// An ordered pulse sequence together with the target gate it implements.
///
/// Pulse index 0 is applied first, i.e. it sits rightmost in the matrix
/// product. Every library builder guarantees that the zero-error product
/// equals the target rotation up to global phase.
#[derive(Debug, Clone, PartialEq)]
pub struct PulseSequence {
    label: String,
    target: RotationParams,
    pulses: Vec<RotationParams>,
}

impl PulseSequence {
    /// Assemble a sequence from parts.
    pub fn new(
        label: impl Into<String>,
        target: RotationParams,
        pulses: Vec<RotationParams>,
    ) -> Self {
        Self {
            label: label.into(),
            target,
            pulses,
        }
    }

    /// Free-form name of the sequence.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// The rotation this sequence is meant to implement.
    pub fn target(&self) -> RotationParams {
        self.target
    }

    /// Pulses in application order.
    pub fn pulses(&self) -> &[RotationParams] {
        &self.pulses
    }

    /// Number of elementary pulses.
    pub fn len(&self) -> usize {
        self.pulses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pulses.is_empty()
    }

    /// Zero-error propagator: the composed product of all pulses.
    pub fn product(&self) -> Unitary2 {
        let mut acc = Unitary2::IDENTITY;
        for p in &self.pulses {
            acc = rotation(*p) * acc;
        }
        acc
    }

    /// Propagator of the target rotation itself.
    pub fn target_matrix(&self) -> Unitary2 {
        rotation(self.target)
    }

    /// Replace the label, keeping pulses and target.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

/// The elementary pulse `R(θ, φ) = cos(θ/2)·I - i sin(θ/2)·(n(φ)·σ)`.
pub fn rotation(p: RotationParams) -> Unitary2 {
    let (s, c) = math::sincos(0.5 * p.theta());
    let (sp, cp) = math::sincos(p.phi());
    // -i sin(θ/2) e^{∓iφ} spelled out in real and imaginary parts.
    Unitary2::new(
        Complex64::new(c, 0.0),
        Complex64::new(-s * sp, -s * cp),
        Complex64::new(s * sp, -s * cp),
        Complex64::new(c, 0.0),
    )
}

/// Rotation about an arbitrary unit axis; used by the error model where the
/// off-resonance term tilts the axis out of the xy-plane.
pub(crate) fn axis_angle_rotation(angle: f64, axis: [f64; 3]) -> Unitary2 {
    let (s, c) = math::sincos(0.5 * angle);
    let [nx, ny, nz] = axis;
    Unitary2::new(
        Complex64::new(c, -s * nz),
        Complex64::new(-s * ny, -s * nx),
        Complex64::new(s * ny, -s * nx),
        Complex64::new(c, s * nz),
    )
}

/// Compose operators applied first-to-last: `compose([A, B, C]) = C·B·A`.
///
/// The first operator in the slice sits rightmost in the product. An empty
/// slice gives the identity.
pub fn compose(ops: &[Unitary2]) -> Unitary2 {
    let mut acc = Unitary2::IDENTITY;
    for op in ops {
        acc = *op * acc;
    }
    acc
}

/// Gate fidelity `F = |tr(u† v)| / 2`, insensitive to the global phase of
/// either argument.
pub fn fidelity(u: &Unitary2, v: &Unitary2) -> f64 {
    let t = (u.dagger() * *v).trace();
    (t.norm() / 2.0).min(1.0)
}

/// True when `u` is the identity up to global phase: `|tr u| / 2 ≥ 1 - tol`.
pub fn is_trivial(u: &Unitary2, tol: f64) -> bool {
    u.trace().norm() / 2.0 >= 1.0 - tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn rot(theta: f64, phi: f64) -> Unitary2 {
        rotation(RotationParams::new(theta, phi).unwrap())
    }

    #[test]
    fn zero_angle_is_identity() {
        assert!(rot(0.0, 1.3).approx_eq(&Unitary2::IDENTITY, 1e-15));
    }

    #[test]
    fn pi_pulse_about_x() {
        let expected = Unitary2::SIGMA_X.scale(Complex64::new(0.0, -1.0));
        assert!(rot(PI, 0.0).approx_eq(&expected, 1e-15));
    }

    #[test]
    fn half_pi_pulse_about_y() {
        // (I - i σy) / √2 has real entries [[1, -1], [1, 1]] / √2.
        let r = 1.0 / math::sqrt(2.0);
        let expected = Unitary2::new(
            Complex64::new(r, 0.0),
            Complex64::new(-r, 0.0),
            Complex64::new(r, 0.0),
            Complex64::new(r, 0.0),
        );
        assert!(rot(PI / 2.0, PI / 2.0).approx_eq(&expected, 1e-15));
    }

    #[test]
    fn empty_composition_is_identity() {
        assert_eq!(compose(&[]), Unitary2::IDENTITY);
    }

    #[test]
    fn same_axis_angles_add() {
        let composed = compose(&[rot(0.7, 1.1), rot(1.9, 1.1)]);
        assert!(composed.approx_eq(&rot(2.6, 1.1), 1e-14));
    }

    #[test]
    fn corpse_product_implements_pi_rotation() {
        // CORPSE angles for a π rotation about x, multiplied out directly.
        let pulses = [
            rot(7.0 * PI / 3.0, 0.0),
            rot(5.0 * PI / 3.0, PI),
            rot(PI / 3.0, 0.0),
        ];
        let u = compose(&pulses);
        assert!(fidelity(&u, &rot(PI, 0.0)) >= 1.0 - 1e-10);
    }

    #[test]
    fn fidelity_of_identical_gates_is_one() {
        let u = rot(1.234, 0.456);
        assert!(math::fabs(fidelity(&u, &u) - 1.0) < 1e-15);
    }

    #[test]
    fn fidelity_of_orthogonal_gates_is_zero() {
        assert!(fidelity(&Unitary2::IDENTITY, &rot(PI, 0.0)) < 1e-15);
    }

    #[test]
    fn fidelity_ignores_global_phase() {
        let u = rot(0.9, 2.3);
        let phase = Complex64::new(math::cos(0.77), math::sin(0.77));
        assert!(math::fabs(fidelity(&u, &u.scale(phase)) - 1.0) < 1e-14);
    }

    #[test]
    fn triviality_detects_phased_identity() {
        assert!(is_trivial(&Unitary2::IDENTITY, 1e-12));
        let minus_i = Unitary2::IDENTITY.scale(Complex64::new(-1.0, 0.0));
        assert!(is_trivial(&minus_i, 1e-12));
        assert!(!is_trivial(&rot(PI, 0.0), 1e-12));
    }

    #[test]
    fn rotation_params_reject_non_finite() {
        assert!(RotationParams::new(f64::NAN, 0.0).is_err());
        assert!(RotationParams::new(1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn normalization_is_explicit_and_wraps_phi_only() {
        let p = RotationParams::new(7.0 * PI / 3.0, -PI / 2.0).unwrap();
        let n = p.normalized();
        assert_eq!(n.theta(), 7.0 * PI / 3.0);
        assert!(math::fabs(n.phi() - 3.0 * PI / 2.0) < 1e-15);
    }

    #[test]
    fn sequence_product_and_target() {
        let target = RotationParams::new(PI, 0.0).unwrap();
        let seq = PulseSequence::new(
            "two quarter turns",
            target,
            alloc::vec![
                RotationParams::new(PI / 2.0, 0.0).unwrap(),
                RotationParams::new(PI / 2.0, 0.0).unwrap(),
            ],
        );
        assert_eq!(seq.len(), 2);
        assert!(fidelity(&seq.product(), &seq.target_matrix()) >= 1.0 - 1e-12);
    }
}
