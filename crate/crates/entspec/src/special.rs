//! Log-gamma and the weighted finite-Hilbert transforms that drive every
//! continuum solver in the crate.
//!
//! The central objects are the two kernels of the resolvent construction,
//!
//! ```text
//! h(x, alpha) = (1/pi) PV int_{-1}^{1} sqrt(1 - y^2) f(y) / (y - x) dy
//! g(alpha)    = (1/pi)    int_{-1}^{1} sqrt(1 - y^2) f(y) dy
//! ```
//!
//! with `f(y) = ((y + alpha)^{q-1} - 1) / (q - 1)` (and `f = ln(y + alpha)`
//! at q = 1). For alpha clearly above 1 the integrand is analytic in a
//! Bernstein ellipse of radius `alpha + sqrt(alpha^2 - 1)`, so a Chebyshev
//! expansion of f converts the transform into an exact coefficient map and
//! converges geometrically. As alpha approaches 1 the branch point at
//! y = -alpha pinches the interval and the expansion degrades, so a narrow
//! band near alpha = 1 switches to edge-adapted panel quadrature that peels
//! the algebraic singularity off the lower edge dyadically.

use crate::error::{Error, Result};

/// ln(sqrt(2 pi)).
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_741_8;
/// ln(sqrt(pi)).
const LN_SQRT_PI: f64 = 0.572_364_942_924_700_087_1;
const LN_2: f64 = std::f64::consts::LN_2;
const PI: f64 = std::f64::consts::PI;

/// Below `alpha = 1 + CROSSOVER` the Chebyshev order needed for full
/// precision exceeds the expansion cap, so the kernel switches to panel
/// quadrature. At the crossover the required order is about 3400, safely
/// inside the cap, so both representations are valid in a neighbourhood of
/// the seam and agree to the requested tolerance.
const CROSSOVER: f64 = 3.1e-5;
const MAX_ORDER: usize = 4096;

// ---------------------------------------------------------------------------
// log-gamma
// ---------------------------------------------------------------------------

/// Lanczos coefficients, g = 7, 9 terms.
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of the gamma function for positive real argument.
///
/// Absolute error is below 1e-13 for z in (0, 30] and the relative error
/// stays at a few ulps for larger arguments.
pub fn log_gamma(z: f64) -> Result<f64> {
    if !z.is_finite() || z <= 0.0 {
        return Err(Error::Domain(format!(
            "log_gamma requires a positive finite argument, got {z}"
        )));
    }
    Ok(lgamma(z))
}

/// Unchecked log-gamma for internal call sites that already know z > 0.
pub(crate) fn lgamma(z: f64) -> f64 {
    if z < 0.5 {
        // One step of the recurrence keeps the Lanczos sum in its sweet spot.
        return lgamma(z + 1.0) - z.ln();
    }
    let x = z - 1.0;
    let mut s = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        s += c / (x + i as f64);
    }
    let t = x + 7.5;
    LN_SQRT_2PI + (x + 0.5) * t.ln() - t + s.ln()
}

// ---------------------------------------------------------------------------
// configuration
// ---------------------------------------------------------------------------

/// Resolution controls for kernel evaluation.
#[derive(Debug, Clone)]
pub struct KernelConfig {
    /// Baseline Chebyshev truncation order. The kernel raises the order
    /// automatically when the support parameter demands it.
    pub chebyshev_order: usize,
    /// Baseline number of quadrature nodes for the coefficient transform.
    pub quadrature_points: usize,
    /// Requested absolute accuracy of kernel values.
    pub tolerance: f64,
}

impl Default for KernelConfig {
    fn default() -> Self {
        KernelConfig {
            chebyshev_order: 64,
            quadrature_points: 128,
            tolerance: 1e-10,
        }
    }
}

impl KernelConfig {
    /// Checks the structural constraints between the fields.
    pub fn validate(&self) -> Result<()> {
        if self.chebyshev_order < 8 {
            return Err(Error::Domain(format!(
                "chebyshev_order must be at least 8, got {}",
                self.chebyshev_order
            )));
        }
        if self.quadrature_points < 2 * self.chebyshev_order {
            return Err(Error::Domain(format!(
                "quadrature_points ({}) must be at least twice chebyshev_order ({})",
                self.quadrature_points, self.chebyshev_order
            )));
        }
        if !(self.tolerance > 0.0) || !self.tolerance.is_finite() {
            return Err(Error::Domain(format!(
                "tolerance must be a positive finite number, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// the integrand building blocks
// ---------------------------------------------------------------------------

/// f(y) expressed in w = y + alpha, in the form that stays accurate for
/// exponents near 1 and for w near 0. Integer exponents are polynomials and
/// remain defined for w <= 0.
pub(crate) fn f_val(w: f64, q: f64) -> f64 {
    if q == 1.0 {
        return w.ln();
    }
    if w <= 0.0 {
        let qi = q.round();
        if qi >= 2.0 && (q - qi).abs() <= 1e-12 * qi {
            return (w.powi(qi as i32 - 1) - 1.0) / (q - 1.0);
        }
        return f64::NAN;
    }
    let t = (q - 1.0) * w.ln();
    t.exp_m1() / (q - 1.0)
}

/// Difference quotient (f(y) - f(x)) / (y - x) in the shifted coordinate
/// w = y + alpha, where y - x = wy - wx exactly. Working in w keeps both
/// arguments positive and exact near the singular edge w = 0, where
/// reconstructing wy as wx + (y - x) would cancel to zero.
/// `fx = f(x)` is precomputed by the caller.
fn diff_quotient(wy: f64, wx: f64, fx: f64, q: f64) -> f64 {
    let dy = wy - wx;
    if dy == 0.0 {
        // Limit value f'(x) = wx^{q-2}.
        return if q == 1.0 { 1.0 / wx } else { wx.powf(q - 2.0) };
    }
    let r = dy / wx;
    if r > -0.5 && r < 0.5 {
        let lp = r.ln_1p();
        if q == 1.0 {
            return lp / dy;
        }
        let t = (q - 1.0) * lp;
        if t.abs() < 500.0 {
            return wx.powf(q - 2.0) * t.exp_m1() / ((q - 1.0) * r);
        }
    }
    // Well separated points: the plain difference does not cancel.
    (f_val(wy, q) - fx) / dy
}

// ---------------------------------------------------------------------------
// quadrature engine
// ---------------------------------------------------------------------------

/// 24-point Gauss-Legendre rule on [-1, 1]: positive abscissae and weights.
const GL24: [(f64, f64); 12] = [
    (0.064_056_892_862_605_626, 0.127_938_195_346_752_16),
    (0.191_118_867_473_616_31, 0.125_837_456_346_828_30),
    (0.315_042_679_696_163_37, 0.121_670_472_927_803_39),
    (0.433_793_507_626_045_14, 0.115_505_668_053_725_60),
    (0.545_421_471_388_839_54, 0.107_444_270_115_965_63),
    (0.648_093_651_936_975_57, 0.097_618_652_104_113_888),
    (0.740_124_191_578_554_36, 0.086_190_161_531_953_276),
    (0.820_001_985_973_902_92, 0.073_346_481_411_080_306),
    (0.886_415_527_004_401_03, 0.059_298_584_915_436_781),
    (0.938_274_552_002_732_76, 0.044_277_438_817_419_806),
    (0.974_728_555_971_309_50, 0.028_531_388_628_933_663),
    (0.995_187_219_997_021_36, 0.012_341_229_799_987_200),
];

/// Gauss-Legendre integral of f over [lo, hi].
pub(crate) fn gl24<F: Fn(f64) -> f64>(lo: f64, hi: f64, f: F) -> f64 {
    let c = 0.5 * (lo + hi);
    let hw = 0.5 * (hi - lo);
    let mut s = 0.0;
    for &(x, w) in GL24.iter() {
        s += w * (f(c + hw * x) + f(c - hw * x));
    }
    s * hw
}

/// Value plus a conservative bound on the neglected remainder.
pub(crate) struct PanelSum {
    pub value: f64,
    pub residual: f64,
}

/// Integrates f over (0, top] with panels [top/2^{k+1}, top/2^k] that chase
/// an integrable edge singularity at 0. Each panel is analytic (the nearest
/// branch point sits at or below the origin) so Gauss-Legendre converges
/// geometrically per panel; the dyadic ladder stops once contributions fall
/// below `stop_rel` relative to the accumulated value.
pub(crate) fn dyadic_edge<F: Fn(f64) -> f64>(
    top: f64,
    max_panels: usize,
    stop_rel: f64,
    f: F,
) -> PanelSum {
    let mut acc = 0.0;
    let mut scale = 0.0f64;
    let mut hi = top;
    let mut small_run = 0usize;
    let mut last = f64::INFINITY;
    for _ in 0..max_panels {
        let lo = 0.5 * hi;
        let p = gl24(lo, hi, &f);
        acc += p;
        last = p.abs();
        scale = scale.max(last);
        let thresh = stop_rel * (acc.abs() + 0.1 * scale);
        if last <= thresh {
            small_run += 1;
            if small_run >= 2 {
                return PanelSum {
                    value: acc,
                    residual: 8.0 * last,
                };
            }
        } else {
            small_run = 0;
        }
        hi = lo;
    }
    PanelSum {
        value: acc,
        residual: 32.0 * last,
    }
}

// ---------------------------------------------------------------------------
// exact endpoint values at alpha = 1
// ---------------------------------------------------------------------------

// Taylor seams in eps = q - 1. The closed forms below are ratios of gamma
// functions divided by (q - 1); inside a narrow window around q = 1 the
// division amplifies log-gamma rounding, so a cubic expansion in eps takes
// over. Worst seam mismatch is about 2e-13 at |eps| = 3e-4.
const SEAM_WIDTH: f64 = 3e-4;
const HP_SEAM: [f64; 4] = [
    0.306_852_819_440_054_69,
    0.192_013_393_247_381_84,
    -0.021_491_571_259_590_450,
    0.034_107_880_893_760_812,
];
const HM_SEAM: [f64; 4] = [
    -1.693_147_180_559_945_3,
    3.578_307_754_367_272_5,
    -7.178_107_079_994_135_4,
    14.390_322_040_882_032,
];
const GE_SEAM: [f64; 4] = [
    -0.193_147_180_559_945_31,
    0.288_586_983_527_354_49,
    -0.165_785_063_023_267_70,
    0.117_000_412_405_394_66,
];

fn seam(c: &[f64; 4], e: f64) -> f64 {
    c[0] + e * (c[1] + e * (c[2] + e * c[3]))
}

/// h(+1) at alpha = 1: -(P - 1)/(q - 1) with
/// P = 2^q Gamma(q + 1/2) / (sqrt(pi) Gamma(q + 1)).
pub(crate) fn h_upper_edge_at_one(q: f64) -> f64 {
    let e = q - 1.0;
    if e.abs() <= SEAM_WIDTH {
        return -seam(&HP_SEAM, e);
    }
    let t = q * LN_2 + lgamma(q + 0.5) - LN_SQRT_PI - lgamma(q + 1.0);
    -t.exp_m1() / e
}

/// h(-1) at alpha = 1: (R - 1)/(q - 1) with
/// R = 2^{q-1} Gamma(q - 1/2) / (sqrt(pi) Gamma(q + 1)). Defined for q > 1/2.
pub(crate) fn h_lower_edge_at_one(q: f64) -> Result<f64> {
    if q <= 0.5 {
        return Err(Error::Domain(format!(
            "h(-1) diverges at the lower edge for q <= 1/2 when alpha = 1, got q = {q}"
        )));
    }
    let e = q - 1.0;
    if e.abs() <= SEAM_WIDTH {
        return Ok(seam(&HM_SEAM, e));
    }
    let t = e * LN_2 + lgamma(q - 0.5) - LN_SQRT_PI - lgamma(q + 1.0);
    Ok(t.exp_m1() / e)
}

/// g at alpha = 1: (M - 1/2)/(q - 1) with
/// M = 2^q Gamma(q + 1/2) / (sqrt(pi) Gamma(q + 2)).
pub(crate) fn g_at_one(q: f64) -> f64 {
    let e = q - 1.0;
    if e.abs() <= SEAM_WIDTH {
        return 0.5 * seam(&GE_SEAM, e);
    }
    let t = q * LN_2 + lgamma(q + 0.5) - LN_SQRT_PI - lgamma(q + 2.0) + LN_2;
    0.5 * t.exp_m1() / e
}

// ---------------------------------------------------------------------------
// Chebyshev transform
// ---------------------------------------------------------------------------

/// First-kind Chebyshev coefficients a_n (n < n_terms) of the function whose
/// values at the m Chebyshev nodes cos(pi (j + 1/2) / m) are given.
/// Convention: F(y) = a_0 / 2 + sum_{n >= 1} a_n T_n(y).
pub(crate) fn dct_coeffs(values: &[f64], n_terms: usize) -> Vec<f64> {
    let m = values.len();
    let mut a = vec![0.0; n_terms];
    for (j, &fj) in values.iter().enumerate() {
        let theta = PI * (j as f64 + 0.5) / m as f64;
        let c = theta.cos();
        // T_n(cos theta) by the three-term recurrence in n.
        let mut t_prev = 1.0;
        let mut t_cur = c;
        a[0] += fj;
        if n_terms > 1 {
            a[1] += fj * c;
        }
        for an in a.iter_mut().take(n_terms).skip(2) {
            let t_next = 2.0 * c * t_cur - t_prev;
            *an += fj * t_next;
            t_prev = t_cur;
            t_cur = t_next;
        }
    }
    let norm = 2.0 / m as f64;
    for an in a.iter_mut() {
        *an *= norm;
    }
    a
}

/// Chebyshev coefficients of (y + alpha)^s sampled on m nodes.
pub(crate) fn power_t_coeffs(alpha: f64, s: f64, n_terms: usize, m: usize) -> Result<Vec<f64>> {
    let mut vals = vec![0.0; m];
    for (j, v) in vals.iter_mut().enumerate() {
        let theta = PI * (j as f64 + 0.5) / m as f64;
        let w = theta.cos() + alpha;
        *v = if w <= 0.0 && s != s.round() {
            f64::NAN
        } else {
            w.powf(s)
        };
        if !v.is_finite() {
            return Err(Error::Domain(format!(
                "power basis overflowed at w = {w}, exponent {s}"
            )));
        }
    }
    Ok(dct_coeffs(&vals, n_terms))
}

/// Chebyshev coefficients of (y + alpha) ln(y + alpha) sampled on m nodes,
/// the q -> 1 limit of the deficit weight; needs alpha > 1 so the argument
/// stays positive across the interval.
pub(crate) fn xlogx_t_coeffs(alpha: f64, n_terms: usize, m: usize) -> Vec<f64> {
    let mut vals = vec![0.0; m];
    for (j, v) in vals.iter_mut().enumerate() {
        let theta = PI * (j as f64 + 0.5) / m as f64;
        let w = theta.cos() + alpha;
        *v = w * w.ln();
    }
    dct_coeffs(&vals, n_terms)
}

// ---------------------------------------------------------------------------
// kernel evaluator
// ---------------------------------------------------------------------------

enum Rep {
    /// h(x) = -sum_n c_n T_{n+1}(x); the c_n follow from the Chebyshev
    /// coefficients of f because the transform maps U_n to -T_{n+1}.
    /// `noise` is the rounding floor 6e-15 max|a_n|: a series assembled
    /// from coefficients of that size cannot be more accurate.
    Spectral { c: Vec<f64>, tail: f64, noise: f64 },
    /// Edge-adapted panel quadrature for alpha within CROSSOVER of 1.
    Panel,
}

/// Cached evaluator of h(x, alpha) and g(alpha) at fixed (alpha, q).
pub(crate) struct Kernel {
    pub alpha: f64,
    pub q: f64,
    tol: f64,
    rep: Rep,
    g_val: f64,
}

impl Kernel {
    pub(crate) fn new(alpha: f64, q: f64, cfg: &KernelConfig) -> Result<Kernel> {
        cfg.validate()?;
        if !q.is_finite() || q <= 0.0 {
            return Err(Error::Domain(format!("q must be positive, got {q}")));
        }
        if !alpha.is_finite() {
            return Err(Error::Domain(format!("alpha must be finite, got {alpha}")));
        }
        let qi = q.round();
        let polynomial = qi >= 2.0 && (q - qi).abs() <= 1e-12 * qi;
        if alpha < 1.0 && !polynomial {
            return Err(Error::Domain(format!(
                "alpha < 1 requires integer q >= 2 (polynomial integrand), got alpha = {alpha}, q = {q}"
            )));
        }
        let tol = cfg.tolerance;
        if !polynomial && alpha - 1.0 < CROSSOVER {
            let g_val = if alpha == 1.0 {
                g_at_one(q)
            } else {
                let eps = alpha - 1.0;
                let l = dyadic_edge(1.0, 900, tol * 1e-3, |v| {
                    (v * (2.0 - v)).sqrt() * f_val(eps + v, q)
                });
                let r = gl24(0.0, 1.0, |w| {
                    let ww = w * w;
                    2.0 * ww * (2.0 - ww).sqrt() * f_val(alpha + 1.0 - ww, q)
                });
                if l.residual > tol {
                    return Err(Error::Accuracy {
                        residual: l.residual,
                        tolerance: tol,
                    });
                }
                (l.value + r) / PI
            };
            return Ok(Kernel {
                alpha,
                q,
                tol,
                rep: Rep::Panel,
                g_val,
            });
        }

        // Spectral representation.
        let rho = alpha.abs() + ((alpha - 1.0) * (alpha + 1.0)).max(0.0).sqrt();
        let needed = if polynomial {
            qi as usize + 4
        } else {
            (((1.0 / tol).ln() / rho.ln()) * 1.15).ceil() as usize + 16
        };
        let order = needed.max(cfg.chebyshev_order).min(MAX_ORDER);
        let m = (2 * (order + 3)).max(cfg.quadrature_points);
        let mut vals = vec![0.0; m];
        for (j, v) in vals.iter_mut().enumerate() {
            let theta = PI * (j as f64 + 0.5) / m as f64;
            *v = f_val(theta.cos() + alpha, q);
            if !v.is_finite() {
                return Err(Error::Domain(format!(
                    "integrand overflowed at alpha = {alpha}, q = {q}; \
                     the exponent is too large for this support"
                )));
            }
        }
        let a = dct_coeffs(&vals, order + 3);
        let mut tail = 0.0f64;
        let mut scale = 0.0f64;
        for (n, &an) in a.iter().enumerate() {
            scale = scale.max(an.abs());
            if n + 5 >= a.len() {
                tail = tail.max(an.abs());
            }
        }
        if !polynomial && tail > 2.0 * tol && tail > 6e-15 * scale {
            // Unconverged both absolutely and relative to the natural scale.
            return Err(Error::Accuracy {
                residual: tail,
                tolerance: tol,
            });
        }
        let c: Vec<f64> = (0..=order).map(|n| 0.5 * (a[n] - a[n + 2])).collect();
        let g_val = 0.5 * c[0];
        Ok(Kernel {
            alpha,
            q,
            tol,
            rep: Rep::Spectral {
                c,
                tail,
                noise: 6e-15 * scale,
            },
            g_val,
        })
    }

    pub(crate) fn g(&self) -> f64 {
        self.g_val
    }

    pub(crate) fn tolerance(&self) -> f64 {
        self.tol
    }

    /// Chebyshev coefficients when the spectral representation is active.
    pub(crate) fn spectral_coeffs(&self) -> Option<&[f64]> {
        match &self.rep {
            Rep::Spectral { c, .. } => Some(c),
            Rep::Panel => None,
        }
    }

    /// Kernel value together with an estimate of its absolute error.
    pub(crate) fn h_with_residual(&self, x: f64) -> Result<(f64, f64)> {
        if !(-1.0..=1.0).contains(&x) {
            return Err(Error::OutOfRange(format!(
                "kernel argument must lie in [-1, 1], got {x}"
            )));
        }
        match &self.rep {
            Rep::Spectral { c, tail, .. } => {
                let val = if x == 1.0 {
                    -c.iter().sum::<f64>()
                } else if x == -1.0 {
                    c.iter()
                        .enumerate()
                        .map(|(n, &cn)| if n % 2 == 0 { cn } else { -cn })
                        .sum::<f64>()
                } else {
                    // Clenshaw on the shifted series sum_n c_n T_{n+1}.
                    let mut b1 = 0.0;
                    let mut b2 = 0.0;
                    for &cn in c.iter().rev() {
                        let b0 = 2.0 * x * b1 - b2 + cn;
                        b2 = b1;
                        b1 = b0;
                    }
                    // The series has no T_0 term: S = x b1 - b2.
                    -(x * b1 - b2)
                };
                Ok((val, *tail))
            }
            Rep::Panel => self.h_panel(x),
        }
    }

    /// Kernel value, failing when the error estimate misses the tolerance.
    /// A residual at the representation's rounding floor counts as met: no
    /// double-precision evaluation can land closer, and the series is then
    /// converged in the construction-time sense.
    pub(crate) fn h(&self, x: f64) -> Result<f64> {
        let (val, res) = self.h_with_residual(x)?;
        let floor = match &self.rep {
            Rep::Spectral { noise, .. } => *noise,
            Rep::Panel => 0.0,
        };
        if res > self.tol.max(6e-15 * val.abs()).max(floor) {
            return Err(Error::Accuracy {
                residual: res,
                tolerance: self.tol,
            });
        }
        Ok(val)
    }

    fn h_panel(&self, x: f64) -> Result<(f64, f64)> {
        let alpha = self.alpha;
        let q = self.q;
        let eps = alpha - 1.0;
        let stop = self.tol * 1e-3;
        if x == -1.0 {
            if eps == 0.0 {
                return Ok((h_lower_edge_at_one(q)?, 1e-15));
            }
            // Direct weighted integral, no principal value at the endpoint:
            // h(-1) = (1/pi) int sqrt((1-y)/(1+y)) f(y) dy. Lower half via
            // 1 + y = t^2, upper half via 1 - y = w^2.
            let l = dyadic_edge(1.0, 500, stop, |t| {
                let tt = t * t;
                2.0 * (2.0 - tt).sqrt() * f_val(eps + tt, q)
            });
            let r = gl24(0.0, 1.0, |w| {
                let ww = w * w;
                2.0 * ww * f_val(alpha + 1.0 - ww, q) / (2.0 - ww).sqrt()
            });
            let val = (l.value + r) / PI;
            let res = l.residual / PI + 3e-16 * val.abs();
            return Ok((val, res));
        }
        if x == 1.0 {
            if eps == 0.0 {
                return Ok((h_upper_edge_at_one(q), 1e-15));
            }
            // h(+1) = -(1/pi) int sqrt((1+y)/(1-y)) f(y) dy.
            let l = dyadic_edge(1.0, 900, stop, |v| (v / (2.0 - v)).sqrt() * f_val(eps + v, q));
            let r = gl24(0.0, 1.0, |w| {
                let ww = w * w;
                2.0 * (2.0 - ww).sqrt() * f_val(alpha + 1.0 - ww, q)
            });
            let val = -(l.value + r) / PI;
            let res = l.residual / PI + 3e-16 * val.abs();
            return Ok((val, res));
        }
        // Interior point: subtract the pole,
        // h(x) = (1/pi) int sqrt(1-y^2) (f(y) - f(x))/(y - x) dy - x f(x),
        // which uses int sqrt(1-y^2)/(y-x) dy = -pi x for |x| < 1.
        let wx = x + alpha;
        let fx = f_val(wx, q);
        // When x sits deep in the edge region |x f(x)| dwarfs h, so the
        // integral must be resolved below the cancelled scale.
        let stop = stop / (1.0 + (x * fx).abs());
        let l = dyadic_edge(1.0, 900, stop, |v| {
            (v * (2.0 - v)).sqrt() * diff_quotient(eps + v, wx, fx, q)
        });
        let r = gl24(0.0, 1.0, |w| {
            let ww = w * w;
            2.0 * ww * (2.0 - ww).sqrt() * diff_quotient(alpha + 1.0 - ww, wx, fx, q)
        });
        let j = l.value + r;
        let val = j / PI - x * fx;
        // Cancellation between the two terms bounds the achievable accuracy.
        let res = l.residual / PI + 3e-16 * (j.abs() / PI + (x * fx).abs());
        Ok((val, res))
    }
}

// ---------------------------------------------------------------------------
// public one-shot wrappers
// ---------------------------------------------------------------------------

/// Weighted principal-value transform h(x, alpha) for the exponent family.
pub fn h_kernel(x: f64, alpha: f64, q: f64, cfg: &KernelConfig) -> Result<f64> {
    if !x.is_finite() || !(-1.0..=1.0).contains(&x) {
        return Err(Error::OutOfRange(format!(
            "x must lie in [-1, 1], got {x}"
        )));
    }
    Kernel::new(alpha, q, cfg)?.h(x)
}

/// Weighted mean g(alpha) of the exponent family.
pub fn g_kernel(alpha: f64, q: f64, cfg: &KernelConfig) -> Result<f64> {
    Ok(Kernel::new(alpha, q, cfg)?.g())
}
