//! Phase boundaries of the fixed-entropy ensemble in the (q, u) plane.
//!
//! `u = ln N - S_q` measures the entropy deficit. For each exponent q > 1/2
//! two boundary curves split the deficit axis into three phases:
//!
//! * `u < u_c(q)`: both spectral edges detach from zero (Entangled),
//! * `u_c(q) <= u <= u_e(q)`: the lower edge sticks at zero (Typical),
//! * `u > u_e(q)`: a single eigenvalue evaporates from the sea (Separable).

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::phase::PhasePoint;
use crate::roots::golden_minimum;
use crate::special::lgamma;

const LN_2: f64 = std::f64::consts::LN_2;
const LN_SQRT_PI: f64 = 0.572_364_942_924_700_087_1;

/// Both boundary formulas divide by (q - 1); inside this window a cubic
/// expansion replaces them to avoid amplifying log-gamma rounding.
const SEAM_WIDTH: f64 = 1e-3;

/// u_c(q) = c0 + c1 (q-1) + c2 (q-1)^2 + c3 (q-1)^3 near q = 1.
/// c0 = 2/3 + ln(2/3); the higher coefficients involve pi^2 and zeta(3).
const UC_SEAM: [f64; 4] = [
    0.261_201_558_558_502_285,
    -0.077_288_155_373_995_786,
    0.069_651_625_779_576_861,
    -0.052_918_064_723_359_599,
];

/// u_e(q) near q = 1: c0 = 1/2.
const UE_SEAM: [f64; 4] = [
    0.5,
    0.269_934_066_848_226_44,
    -0.112_447_139_652_521_9,
    0.053_756_317_984_857_134,
];

/// A_c near q = 1, applied as A_c = -1 + seam; the leading term is 1 + ln 2
/// so A_c(1) = ln 2.
const AC_SEAM: [f64; 4] = [
    1.693_147_180_559_945_3,
    -0.711_560_379_329_180_41,
    -0.085_271_055_547_968_331,
    0.165_075_299_137_131_62,
];

fn seam(c: &[f64; 4], e: f64) -> f64 {
    c[0] + e * (c[1] + e * (c[2] + e * c[3]))
}

fn check_exponent(q: f64) -> Result<()> {
    if !q.is_finite() || q <= 0.5 {
        return Err(Error::Domain(format!(
            "the boundary curves are defined for q > 1/2, got q = {q}"
        )));
    }
    Ok(())
}

/// Lower boundary u_c(q): the deficit at which the lower spectral edge
/// reaches zero. Exact form
/// `exp((q-1) u_c) = (4(q+1)/(3q))^q Gamma(q+3/2) / (sqrt(pi) Gamma(q+2))`.
pub fn u_c(q: f64) -> Result<f64> {
    check_exponent(q)?;
    let e = q - 1.0;
    if e.abs() <= SEAM_WIDTH {
        return Ok(seam(&UC_SEAM, e));
    }
    let t = q * (4.0 * (q + 1.0) / (3.0 * q)).ln() + lgamma(q + 1.5) - lgamma(q + 2.0)
        - LN_SQRT_PI;
    Ok(t / e)
}

/// Upper boundary u_e(q): the deficit at which the evaporated eigenvalue
/// first appears. Exact form
/// `exp((q-1) u_e) = 2^{2q} Gamma(q+1/2) / (sqrt(pi) Gamma(q+2))`.
pub fn u_e(q: f64) -> Result<f64> {
    // Unlike u_c, the upper boundary stays finite on all of q > 0.
    if !q.is_finite() || q <= 0.0 {
        return Err(Error::Domain(format!(
            "the upper boundary curve is defined for q > 0, got q = {q}"
        )));
    }
    let e = q - 1.0;
    if e.abs() <= SEAM_WIDTH {
        return Ok(seam(&UE_SEAM, e));
    }
    let t = 2.0 * q * LN_2 + lgamma(q + 0.5) - lgamma(q + 2.0) - LN_SQRT_PI;
    Ok(t / e)
}

/// Everything the critical line determines at a given exponent.
#[derive(Debug, Clone)]
pub struct CriticalValues {
    pub q: f64,
    /// Lower boundary deficit.
    pub u_c: f64,
    /// Upper boundary deficit.
    pub u_e: f64,
    /// Support width parameter at the lower boundary: delta_c = 2(q+1)/(3q).
    pub delta_c: f64,
    /// Linear density coefficient at the lower boundary.
    pub a_c: f64,
    /// Kernel coefficient at the lower boundary:
    /// B_c = sqrt(pi) Gamma(q+1) / (2^{q-1} Gamma(q-1/2)).
    pub b_c: f64,
}

/// Critical-line constants at exponent q > 1/2.
pub fn critical_constants(q: f64) -> Result<CriticalValues> {
    check_exponent(q)?;
    let e = q - 1.0;
    let b_c = (LN_SQRT_PI + lgamma(q + 1.0) - e * LN_2 - lgamma(q - 0.5)).exp();
    let a_c = if e.abs() <= SEAM_WIDTH {
        -1.0 + seam(&AC_SEAM, e)
    } else {
        // A_c = -1 + (B_c - 1)/(q - 1).
        let t = LN_SQRT_PI + lgamma(q + 1.0) - e * LN_2 - lgamma(q - 0.5);
        -1.0 + t.exp_m1() / e
    };
    Ok(CriticalValues {
        q,
        u_c: u_c(q)?,
        u_e: u_e(q)?,
        delta_c: 2.0 * (q + 1.0) / (3.0 * q),
        a_c,
        b_c,
    })
}

/// Location and value of the minimum of u_c over q, computed once.
///
/// u_c decreases from q = 1, bottoms out near q = 3.73, and climbs toward
/// its q -> infinity asymptote ln(4/3); the returned pair is (q, u_c(q)) at
/// the minimum.
pub fn u_c_minimum() -> (f64, f64) {
    static CACHE: OnceLock<(f64, f64)> = OnceLock::new();
    *CACHE.get_or_init(|| {
        golden_minimum(|q| u_c(q), 1.0, 20.0, 1e-11)
            .expect("u_c is smooth and unimodal on [1, 20]")
    })
}

/// Deficit intervals whose phase assignment holds for every exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionTag {
    /// u below the minimum of u_c: Entangled at every q (written EIES).
    Eies,
    /// u above the supremum 2 ln 2 of u_e: never Typical at any q, so the
    /// point is Separable for every exponent (written EISS).
    Eiss,
}

/// Exponent-independent region tags that apply to the given point.
pub fn region_tags(point: &PhasePoint) -> Result<Vec<RegionTag>> {
    if !point.u.is_finite() || point.u < 0.0 {
        return Err(Error::Domain(format!(
            "the entropy deficit must be non-negative, got u = {}",
            point.u
        )));
    }
    if !point.q.is_finite() || point.q <= 0.0 {
        return Err(Error::Domain(format!(
            "q must be positive, got q = {}",
            point.q
        )));
    }
    let mut tags = Vec::new();
    let (_, u_star) = u_c_minimum();
    if point.u < u_star {
        tags.push(RegionTag::Eies);
    }
    if point.u > 2.0 * LN_2 {
        tags.push(RegionTag::Eiss);
    }
    Ok(tags)
}
