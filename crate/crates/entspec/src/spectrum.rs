//! Pointwise densities, moments, cumulative distributions, and exportable
//! grids for a solved phase point.
//!
//! Everything here works in scaled eigenvalue units l = N lambda, where the
//! density has unit mass and (outside the separable phase) unit mean. For
//! separable solutions the density describes the sea of small eigenvalues,
//! normalized to unit mass; the evaporated eigenvalue sits at N mu and is
//! carried alongside, never on the grid.
//!
//! [`DensityProfile`] caches the kernel evaluation (and, where needed, a
//! cumulative table) for one solution; the free functions are one-shot
//! wrappers around it.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::phase::{Phase, SpectrumSolution};
use crate::special::{self, Kernel, KernelConfig};

const PI: f64 = std::f64::consts::PI;

/// Alpha above which moments switch from edge-adapted panels to a plain
/// Chebyshev-weighted rule; the integrands are analytic well past the
/// support there.
const GAUSS_CHEBYSHEV_ALPHA: f64 = 1.01;

/// Number of nodes of the Chebyshev-weighted moment rule.
const GC_NODES: usize = 256;

/// Resolution of the cumulative table used when no closed form exists.
const CDF_TABLE: usize = 4096;

/// Detection threshold for a diverging lower edge: the edge weight
/// psi(-1) = 1 + A + B h(-1) vanishes like the square root of the distance
/// in the entangled phase and stays order one in the others.
const EDGE_SOFT: f64 = 1e-8;

/// A density sampled on a grid, ready for serialization.
#[derive(Debug, Clone)]
pub struct DensityGrid {
    /// Scaled eigenvalues l = N lambda, ascending across the support.
    pub lambdas: Vec<f64>,
    /// Density values sigma(l); the first entry is capped when the lower
    /// edge diverges.
    pub densities: Vec<f64>,
    pub phase: Phase,
    /// Evaporated eigenvalue in the separable phase.
    pub mu: Option<f64>,
    /// True when sigma diverges at the lower edge; the first density value
    /// is then a cap (copied from its neighbor), not a sample.
    pub left_edge_divergent: bool,
}

/// Cached evaluator of the spectral density of one solution.
pub struct DensityProfile {
    sol: SpectrumSolution,
    kernel: Option<Kernel>,
    tol: f64,
    cdf_table: OnceLock<Vec<f64>>,
}

impl DensityProfile {
    pub fn new(sol: &SpectrumSolution, cfg: &KernelConfig) -> Result<DensityProfile> {
        cfg.validate()?;
        let s = &sol.support;
        if !(s.delta.is_finite() && s.delta > 0.0 && s.b > s.a && s.alpha >= 1.0) {
            return Err(Error::Domain(format!(
                "malformed support: a = {}, b = {}, alpha = {}, delta = {}",
                s.a, s.b, s.alpha, s.delta
            )));
        }
        let kernel = if sol.b_coeff == 0.0 {
            None
        } else {
            Some(Kernel::new(s.alpha, sol.q, cfg)?)
        };
        Ok(DensityProfile {
            sol: sol.clone(),
            kernel,
            tol: cfg.tolerance,
            cdf_table: OnceLock::new(),
        })
    }

    pub fn solution(&self) -> &SpectrumSolution {
        &self.sol
    }

    /// Edge weight psi(x) = 1 - A x + B h(x); the density is
    /// psi(x) / (pi sqrt(1 - x^2)) at x = l/delta - alpha.
    fn edge_weight(&self, x: f64) -> Result<f64> {
        let h = match &self.kernel {
            Some(k) => k.h_with_residual(x)?.0,
            None => 0.0,
        };
        let psi = 1.0 - self.sol.a_coeff * x + self.sol.b_coeff * h;
        let scale = 1.0 + self.sol.a_coeff.abs() + (self.sol.b_coeff * h).abs();
        if psi < 0.0 {
            if psi >= -1e-9 * scale {
                return Ok(0.0);
            }
            return Err(Error::WrongPhase(format!(
                "density negative inside the support (psi = {psi:.3e} at x = {x}); \
                 the solution does not describe this point"
            )));
        }
        Ok(psi)
    }

    /// Density sigma(l) of the scaled eigenvalue l = N lambda. Zero outside
    /// the support; infinity at a diverging lower edge.
    pub fn density(&self, l: f64) -> Result<f64> {
        let s = &self.sol.support;
        let x = l / s.delta - s.alpha;
        if !x.is_finite() {
            return Err(Error::Domain(format!("eigenvalue {l} is not finite")));
        }
        if x <= -1.0 {
            if x < -1.0 - 1e-12 {
                return Ok(0.0);
            }
            let psi = self.edge_weight(-1.0)?;
            return Ok(if psi > EDGE_SOFT { f64::INFINITY } else { 0.0 });
        }
        if x >= 1.0 {
            return Ok(0.0);
        }
        let psi = self.edge_weight(x)?;
        Ok(psi / (PI * (1.0 - x * x).sqrt() * s.delta))
    }

    /// Integral of sigma(l) f(l) over the support.
    fn weighted_integral<F: Fn(f64) -> f64>(&self, f: F) -> Result<f64> {
        let s = &self.sol.support;
        let (alpha, delta) = (s.alpha, s.delta);
        if alpha >= GAUSS_CHEBYSHEV_ALPHA {
            // Chebyshev-weighted rule: int psi(x) f(l(x)) / (pi sqrt(1-x^2))
            // = lim (1/M) sum psi(x_j) f(l(x_j)) at x_j = cos((j+1/2)pi/M).
            let eval = |m: usize| -> Result<f64> {
                let mut acc = 0.0;
                for j in 0..m {
                    let x = (PI * (j as f64 + 0.5) / m as f64).cos();
                    acc += self.edge_weight(x)? * f(delta * (x + alpha));
                }
                Ok(acc / m as f64)
            };
            let coarse = eval(GC_NODES / 2)?;
            let fine = eval(GC_NODES)?;
            let residual = (fine - coarse).abs();
            if residual > 1e-6 * (1.0 + fine.abs()) {
                return Err(Error::Accuracy {
                    residual,
                    tolerance: 1e-6 * (1.0 + fine.abs()),
                });
            }
            return Ok(fine);
        }
        // Edge-adapted panels on both halves. Left: x = -1 + v; right:
        // x = 1 - w^2 absorbs the square-root edge.
        let stop = self.tol * 1e-2;
        let left = special::dyadic_edge(1.0, 900, stop, |v| {
            let psi = self.edge_weight(-1.0 + v).unwrap_or(f64::NAN);
            psi * f(delta * (v + alpha - 1.0)) / (PI * (v * (2.0 - v)).sqrt())
        });
        let right = special::dyadic_edge(1.0, 900, stop, |w| {
            let ww = w * w;
            let psi = self.edge_weight(1.0 - ww).unwrap_or(f64::NAN);
            2.0 * psi * f(delta * (alpha + 1.0 - ww)) / (PI * (2.0 - ww).sqrt())
        });
        let value = left.value + right.value;
        let residual = left.residual + right.residual;
        if !value.is_finite() {
            return Err(Error::NonConvergence {
                message: "density integral failed inside the support".into(),
                residual: f64::NAN,
            });
        }
        if residual > self.tol * 10.0 * (1.0 + value.abs()) {
            return Err(Error::Accuracy {
                residual,
                tolerance: self.tol * 10.0 * (1.0 + value.abs()),
            });
        }
        Ok(value)
    }

    /// Moment int sigma(l) l^p dl of the full spectral measure. Needs
    /// p > -1/2 when the lower edge diverges; p = 0 returns the mass (one
    /// by construction), p = 1 the mean (one by trace normalization). In
    /// the separable phase the sea carries weight (N-1)/N and the
    /// evaporated eigenvalue contributes (N mu)^p / N, so mass and mean
    /// still come out one.
    pub fn moment(&self, p: f64) -> Result<f64> {
        if !p.is_finite() {
            return Err(Error::Domain(format!("moment order must be finite, got {p}")));
        }
        let sea = self.weighted_integral(|l| l.powf(p))?;
        if self.sol.phase == Phase::Separable {
            let mu = self.sol.mu.ok_or_else(|| {
                Error::MissingParameter("separable solution lost its evaporated eigenvalue".into())
            })?;
            let nf = self.sol.n.ok_or_else(|| {
                Error::MissingParameter("separable solution lost its dimension".into())
            })? as f64;
            return Ok((1.0 - 1.0 / nf) * sea + (nf * mu).powf(p) / nf);
        }
        Ok(sea)
    }

    /// Deficit reproduced from the solution itself: the q-moment route for
    /// the continuum phases, the reduced evaporation equation for the
    /// separable phase (whose sea enters through its mass alone).
    pub fn deficit(&self) -> Result<f64> {
        let q = self.sol.q;
        match self.sol.phase {
            Phase::Separable => {
                let mu = self.sol.mu.ok_or_else(|| {
                    Error::MissingParameter("separable solution lost its evaporated eigenvalue".into())
                })?;
                let n = self.sol.n.ok_or_else(|| {
                    Error::MissingParameter("separable solution lost its dimension".into())
                })?;
                Ok(evaporation_deficit(q, mu, n as f64))
            }
            _ => {
                if (q - 1.0).abs() <= 1e-12 {
                    return self.weighted_integral(|l| l * l.ln());
                }
                let m = self.moment(q)?;
                if !(m > 0.0) {
                    return Err(Error::NonConvergence {
                        message: "non-positive deficit moment".into(),
                        residual: m,
                    });
                }
                Ok(m.ln() / (q - 1.0))
            }
        }
    }

    /// Fraction of the mass at or below l (sea mass only in the separable
    /// phase).
    pub fn cdf(&self, l: f64) -> Result<f64> {
        let s = &self.sol.support;
        let x = l / s.delta - s.alpha;
        if !x.is_finite() {
            return Err(Error::Domain(format!("eigenvalue {l} is not finite")));
        }
        if x <= -1.0 {
            return Ok(0.0);
        }
        if x >= 1.0 {
            return Ok(1.0);
        }
        let t = x.acos();
        // Upper-tail mass G(t) = (1/pi) int_0^t psi(cos s) ds.
        if let Some(c) = self.kernel.as_ref().and_then(|k| k.spectral_coeffs()) {
            // Closed form: the Chebyshev sum integrates term by term.
            let mut g = t - self.sol.a_coeff * t.sin();
            let mut cross = 0.0;
            for (n, &cn) in c.iter().enumerate() {
                let k = (n + 1) as f64;
                cross += cn * (k * t).sin() / k;
            }
            g -= self.sol.b_coeff * cross;
            return Ok((1.0 - g / PI).clamp(0.0, 1.0));
        }
        if self.kernel.is_none() {
            // psi = 1 - A x integrates in closed form.
            let g = t - self.sol.a_coeff * t.sin();
            return Ok((1.0 - g / PI).clamp(0.0, 1.0));
        }
        // Panel-kernel solutions: cumulative trapezoid over uniform t,
        // built once per profile.
        let table = self.cdf_table_ref()?;
        let pos = t / PI * CDF_TABLE as f64;
        let i = (pos.floor() as usize).min(CDF_TABLE - 1);
        let frac = pos - i as f64;
        let g = table[i] + frac * (table[i + 1] - table[i]);
        let total = table[CDF_TABLE];
        Ok((1.0 - g / total).clamp(0.0, 1.0))
    }

    fn cdf_table_ref(&self) -> Result<&Vec<f64>> {
        if let Some(t) = self.cdf_table.get() {
            return Ok(t);
        }
        let mut cum = Vec::with_capacity(CDF_TABLE + 1);
        let mut acc = 0.0;
        let mut prev = self.edge_weight(1.0)?;
        cum.push(0.0);
        let h = PI / CDF_TABLE as f64;
        for i in 1..=CDF_TABLE {
            let t = h * i as f64;
            let cur = self.edge_weight(t.cos())?;
            acc += 0.5 * (prev + cur) * h;
            cum.push(acc);
            prev = cur;
        }
        Ok(self.cdf_table.get_or_init(|| cum))
    }

    /// Density sampled on a support-adapted grid of n >= 4 points. The
    /// spacing clusters toward soft edges; a diverging lower edge gets
    /// quartic clustering and a capped first sample.
    pub fn grid(&self, n: usize) -> Result<DensityGrid> {
        if n < 4 {
            return Err(Error::Domain(format!(
                "a density grid needs at least 4 points, got {n}"
            )));
        }
        let s = &self.sol.support;
        let psi_lo = self.edge_weight(-1.0)?;
        let divergent = psi_lo > EDGE_SOFT;
        let mut lambdas = Vec::with_capacity(n);
        for i in 0..n {
            let theta = PI * i as f64 / (n - 1) as f64;
            let frac = 0.5 * (1.0 - theta.cos());
            let frac = if divergent { frac * frac } else { frac };
            lambdas.push(s.a + (s.b - s.a) * frac);
        }
        // Pin the endpoints against rounding.
        lambdas[0] = s.a;
        lambdas[n - 1] = s.b;
        let mut densities = Vec::with_capacity(n);
        for &l in &lambdas {
            densities.push(self.density(l)?);
        }
        if divergent {
            densities[0] = densities[1];
        }
        Ok(DensityGrid {
            lambdas,
            densities,
            phase: self.sol.phase,
            mu: self.sol.mu,
            left_edge_divergent: divergent,
        })
    }
}

/// Deficit implied by an evaporated eigenvalue mu at dimension N through
/// the reduced equation `N^{q-1} mu^q - mu + 1 = exp((q-1) u)`, written to
/// stay exact through q = 1 where it degenerates to mu ln(N mu) = u.
fn evaporation_deficit(q: f64, mu: f64, nf: f64) -> f64 {
    let l = (nf * mu).ln();
    let w = q - 1.0;
    let t = if w == 0.0 {
        mu * l
    } else {
        mu * l * (w * l).exp_m1() / (w * l)
    };
    if w == 0.0 {
        t
    } else {
        (w * t).ln_1p() / w
    }
}

/// One-shot density evaluation; build a [`DensityProfile`] to amortize the
/// kernel over many points.
pub fn density(sol: &SpectrumSolution, l: f64, cfg: &KernelConfig) -> Result<f64> {
    DensityProfile::new(sol, cfg)?.density(l)
}

/// One-shot moment int sigma(l) l^p dl.
pub fn moment(sol: &SpectrumSolution, p: f64, cfg: &KernelConfig) -> Result<f64> {
    DensityProfile::new(sol, cfg)?.moment(p)
}

/// One-shot deficit recomputation; see [`DensityProfile::deficit`].
pub fn u_of(sol: &SpectrumSolution, cfg: &KernelConfig) -> Result<f64> {
    DensityProfile::new(sol, cfg)?.deficit()
}

/// One-shot cumulative distribution at l.
pub fn cdf(sol: &SpectrumSolution, l: f64, cfg: &KernelConfig) -> Result<f64> {
    DensityProfile::new(sol, cfg)?.cdf(l)
}

/// One-shot export grid; see [`DensityProfile::grid`].
pub fn export_grid(sol: &SpectrumSolution, n: usize, cfg: &KernelConfig) -> Result<DensityGrid> {
    DensityProfile::new(sol, cfg)?.grid(n)
}
