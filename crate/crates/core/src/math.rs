//! Scalar float math routed through `libm` so the crate stays `no_std`.

use core::f64::consts::TAU;

pub(crate) use libm::{acos, asin, cos, fabs, log10, sin, sqrt};

/// sin and cos in one call.
pub(crate) fn sincos(x: f64) -> (f64, f64) {
    libm::sincos(x)
}

/// Reduce an angle to `[0, 2π)`.
pub(crate) fn wrap_two_pi(x: f64) -> f64 {
    let mut r = libm::fmod(x, TAU);
    if r < 0.0 {
        r += TAU;
    }
    // fmod of a value just below a multiple of 2π can round back up to 2π.
    if r >= TAU {
        r = 0.0;
    }
    r
}

/// Distance from `a - b` to the nearest multiple of 2π.
pub(crate) fn angle_distance_mod_two_pi(a: f64, b: f64) -> f64 {
    let d = wrap_two_pi(a - b);
    d.min(TAU - d)
}
