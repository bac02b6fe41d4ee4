//! Float helpers. `core` has no transcendental functions, so everything goes
//! through `libm`.

pub(crate) use libm::{cos, fabs, hypot, log2, sqrt};

pub(crate) const PI: f64 = core::f64::consts::PI;

pub(crate) fn ceil(x: f64) -> f64 {
    libm::ceil(x)
}
