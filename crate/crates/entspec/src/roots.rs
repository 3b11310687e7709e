use crate::error::{Error, Result};

/// Scalar root finding on a bracketing interval, secant steps with a
/// bisection safety net. The function may itself fail (for example a
/// quadrature error deep inside the evaluation); those errors propagate.
///
/// Requires f(lo) and f(hi) with opposite signs (zero at an endpoint is
/// accepted immediately). Converges when either the bracket width falls
/// below `xtol` (absolute, caller picks the scale) or |f| falls below
/// `ftol`.
pub(crate) fn bracketed_root<F>(
    mut f: F,
    lo: f64,
    hi: f64,
    xtol: f64,
    ftol: f64,
    max_iter: usize,
) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a)?;
    if fa == 0.0 {
        return Ok(a);
    }
    let mut fb = f(b)?;
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NonConvergence {
            message: format!("root not bracketed on [{a:.6e}, {b:.6e}]"),
            residual: fa.abs().min(fb.abs()),
        });
    }

    let mut x_prev = a;
    let mut f_prev = fa;
    let mut x_cur = b;
    let mut f_cur = fb;

    for _ in 0..max_iter {
        // Secant proposal from the two most recent iterates.
        let denom = f_cur - f_prev;
        let mut x_new = if denom != 0.0 {
            x_cur - f_cur * (x_cur - x_prev) / denom
        } else {
            f64::NAN
        };
        // Reject secant steps that leave the bracket or stagnate.
        if !x_new.is_finite() || x_new <= a || x_new >= b {
            x_new = 0.5 * (a + b);
        }
        let f_new = f(x_new)?;

        x_prev = x_cur;
        f_prev = f_cur;
        x_cur = x_new;
        f_cur = f_new;

        if f_new == 0.0 || f_new.abs() <= ftol {
            return Ok(x_new);
        }
        if f_new.signum() == fa.signum() {
            a = x_new;
            fa = f_new;
        } else {
            b = x_new;
            fb = f_new;
        }
        if (b - a).abs() <= xtol {
            // Midpoint of the final bracket, biased toward the smaller residual.
            return Ok(if fa.abs() < fb.abs() { a } else { b });
        }
    }
    Err(Error::NonConvergence {
        message: "bracketed root search exceeded the iteration budget".into(),
        residual: f_cur.abs(),
    })
}

/// Golden-section minimizer for a smooth unimodal function.
pub(crate) fn golden_minimum<F>(mut f: F, lo: f64, hi: f64, xtol: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut a = lo;
    let mut b = hi;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    while (b - a).abs() > xtol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
        }
    }
    let x = 0.5 * (a + b);
    let fx = f(x)?;
    Ok((x, fx))
}
