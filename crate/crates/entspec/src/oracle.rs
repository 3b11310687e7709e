//! Finite-size ground truth for the constrained eigenvalue ensemble.
//!
//! Two independent routes to the same measure. A damped Newton iteration
//! solves the stationarity system for N logarithmically repelling
//! eigenvalues on the simplex at fixed entropy deficit, with the two
//! Lagrange multipliers as extra unknowns. A Metropolis chain samples the
//! Gibbs weight at fixed inverse temperature instead. Both work in physical
//! eigenvalue units and report states that the continuum solutions in
//! [`crate::phase`] and [`crate::spectrum`] can be validated against.

use crate::error::{Error, Result};
use crate::linalg::lu_solve;
use crate::phase::{multipliers, solve, Phase, PhasePoint, SpectrumSolution};
use crate::rng;
use crate::spectrum::DensityProfile;
use crate::special::KernelConfig;
use rand::Rng;

/// Quantity held fixed by the solver or sampler.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Target {
    /// Entropy deficit u = ln N - S_q.
    Deficit(f64),
    /// Inverse temperature multiplying N^2 u in the Gibbs weight.
    InverseTemperature(f64),
}

/// Configuration shared by the Newton solver and the Metropolis sampler.
#[derive(Debug, Clone)]
pub struct OracleConfig {
    /// Number of eigenvalues.
    pub n: usize,
    /// Entropy order.
    pub q: f64,
    /// Constraint the run holds fixed.
    pub target: Target,
    /// Newton iteration budget.
    pub max_iterations: usize,
    /// Stationarity residual accepted as converged.
    pub step_tolerance: f64,
    /// Seed for every stochastic choice the run makes.
    pub seed: u64,
}

impl OracleConfig {
    /// Configuration with the default iteration budget and tolerance.
    pub fn new(n: usize, q: f64, target: Target) -> OracleConfig {
        OracleConfig {
            n,
            q,
            target,
            max_iterations: 200,
            step_tolerance: 1e-10,
            seed: 1,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n < 8 {
            return Err(Error::OutOfRange(format!(
                "the finite-size solver needs at least 8 eigenvalues, got {}",
                self.n
            )));
        }
        if !(self.q > 0.0 && self.q.is_finite()) {
            return Err(Error::Domain(format!(
                "entropy order must be positive and finite, got {}",
                self.q
            )));
        }
        if self.max_iterations == 0 {
            return Err(Error::OutOfRange("iteration budget must be positive".into()));
        }
        if !(self.step_tolerance > 0.0) {
            return Err(Error::OutOfRange("step tolerance must be positive".into()));
        }
        Ok(())
    }
}

/// A converged or sampled configuration of N eigenvalues on the simplex.
#[derive(Debug, Clone)]
pub struct CoulombGasState {
    /// Eigenvalues ascending, summing to one.
    pub eigenvalues: Vec<f64>,
    /// Multiplier conjugate to normalization.
    pub xi: f64,
    /// Inverse temperature conjugate to the deficit.
    pub beta: f64,
    /// Entropy deficit ln N - S_q of this configuration.
    pub energy: f64,
    /// Largest stationarity violation over the eigenvalue equations.
    pub residual: f64,
}

/// Distances between a finite-size state and a continuum solution.
#[derive(Debug, Clone, Copy)]
pub struct SpectralDistance {
    /// Integrated absolute CDF gap in scaled eigenvalue units.
    pub wasserstein1: f64,
    /// Kolmogorov-Smirnov statistic of the empirical CDF.
    pub ks: f64,
    /// Absolute difference of the entropy deficits.
    pub u_gap: f64,
}

/// Metropolis trajectory with its sampling diagnostics.
#[derive(Debug, Clone)]
pub struct MetropolisRun {
    /// Thinned post-burn-in states, one per N sweeps.
    pub states: Vec<CoulombGasState>,
    /// Acceptance fraction measured after the proposal width froze.
    pub acceptance: f64,
    /// Frozen proposal half-width.
    pub step: f64,
    /// Set when the tuned acceptance rate leaves [0.1, 0.9].
    pub warning: Option<String>,
}

const Q1_WINDOW: f64 = 1e-8;
const COLLISION_GAP: f64 = 1e-14;
const MAX_RESTARTS: usize = 3;
const MIN_STEP: f64 = 1.0 / ((1u64 << 30) as f64);
const CONSTRAINT_TOL: f64 = 1e-10;

fn exact_q1(q: f64) -> bool {
    (q - 1.0).abs() <= Q1_WINDOW
}

/// Entropy deficit of a configuration in scaled units l = N lambda.
fn gas_deficit(l: &[f64], q: f64) -> f64 {
    let n = l.len() as f64;
    if exact_q1(q) {
        return l.iter().map(|&x| if x > 0.0 { x * x.ln() } else { 0.0 }).sum::<f64>() / n;
    }
    let m: f64 = l.iter().map(|&x| x.powf(q)).sum::<f64>() / n;
    m.ln() / (q - 1.0)
}

// ---------------------------------------------------------------------------
// stationarity system
// ---------------------------------------------------------------------------

/// Residuals of the full system: N eigenvalue equations, the deficit
/// constraint, and normalization. Unknown layout [l_0 .. l_{N-1}, beta, xi].
///
/// `tau` is the log-barrier weight enforcing positivity: each eigenvalue
/// equation carries a wall multiplier tau / l_j. In phases whose continuum
/// support touches zero the constrained minimizer sits on the boundary of
/// the positivity cone, so the plain interior equations have no root there
/// and the stationarity condition only closes in this KKT form.
fn residuals(l: &[f64], beta: f64, xi: f64, q: f64, u: f64, tau: f64, out: &mut [f64]) {
    let n = l.len();
    let nf = n as f64;
    let q1 = exact_q1(q);
    let d = if q1 {
        1.0
    } else {
        let mq: f64 = l.iter().map(|&x| x.powf(q)).sum::<f64>() / nf;
        let m1: f64 = l.iter().sum::<f64>() / nf;
        mq - m1 + 1.0
    };
    for j in 0..n {
        let mut pair = 0.0;
        for k in 0..n {
            if k != j {
                pair += 1.0 / (l[k] - l[j]);
            }
        }
        let grad = if q1 {
            1.0 + l[j].ln()
        } else {
            (q * l[j].powf(q - 1.0) - 1.0) / ((q - 1.0) * d)
        };
        out[j] = 2.0 * pair / nf + beta * grad + xi - tau / l[j];
    }
    out[n] = if q1 {
        l.iter().map(|&x| x * x.ln()).sum::<f64>() / nf - u
    } else {
        d.ln() / (q - 1.0) - u
    };
    out[n + 1] = l.iter().sum::<f64>() / nf - 1.0;
}

/// Dense Jacobian of [`residuals`] in row-major order.
fn jacobian(l: &[f64], beta: f64, q: f64, tau: f64, jac: &mut [f64]) {
    let n = l.len();
    let m = n + 2;
    let nf = n as f64;
    let q1 = exact_q1(q);
    jac.iter_mut().for_each(|x| *x = 0.0);
    let (d, grads): (f64, Vec<f64>) = if q1 {
        (1.0, l.iter().map(|&x| 1.0 + x.ln()).collect())
    } else {
        let mq: f64 = l.iter().map(|&x| x.powf(q)).sum::<f64>() / nf;
        let m1: f64 = l.iter().sum::<f64>() / nf;
        let d = mq - m1 + 1.0;
        (d, l.iter().map(|&x| q * x.powf(q - 1.0) - 1.0).collect())
    };
    for j in 0..n {
        let mut diag = 0.0;
        for k in 0..n {
            if k == j {
                continue;
            }
            let inv2 = 1.0 / ((l[k] - l[j]) * (l[k] - l[j]));
            diag += inv2;
            jac[j * m + k] = -2.0 * inv2 / nf;
            if !q1 {
                jac[j * m + k] -= beta * grads[j] * grads[k] / ((q - 1.0) * nf * d * d);
            }
        }
        jac[j * m + j] = 2.0 * diag / nf + tau / (l[j] * l[j]);
        if q1 {
            jac[j * m + j] += beta / l[j];
            jac[j * m + n] = grads[j];
            jac[n * m + j] = grads[j] / nf;
        } else {
            jac[j * m + j] += beta * q * l[j].powf(q - 2.0) / d
                - beta * grads[j] * grads[j] / ((q - 1.0) * nf * d * d);
            jac[j * m + n] = grads[j] / ((q - 1.0) * d);
            jac[n * m + j] = grads[j] / ((q - 1.0) * nf * d);
        }
        jac[j * m + n + 1] = 1.0;
        jac[(n + 1) * m + j] = 1.0 / nf;
    }
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0_f64, |a, &x| a.max(x.abs()))
}

// ---------------------------------------------------------------------------
// initialization
// ---------------------------------------------------------------------------

/// Quantiles of the square-case Marchenko-Pastur law on [0, 4], rescaled to
/// unit mean exactly.
fn mp_quantiles(n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let p = (j as f64 + 0.5) / n as f64;
        // Invert F(4 sin^2 t) = (2 t + sin 2t) / pi by bisection in t.
        let (mut lo, mut hi) = (0.0_f64, std::f64::consts::FRAC_PI_2);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if (2.0 * mid + (2.0 * mid).sin()) / std::f64::consts::PI < p {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let t = 0.5 * (lo + hi);
        out.push(4.0 * t.sin() * t.sin());
    }
    let mean: f64 = out.iter().sum::<f64>() / n as f64;
    out.iter_mut().for_each(|x| *x /= mean);
    out
}

/// Seed spreading the spectrum between the fully condensed point (all equal)
/// and the sampled unconstrained law, matched to the requested deficit.
fn contracted_seed(n: usize, q: f64, u: f64) -> Vec<f64> {
    let mp = mp_quantiles(n);
    let shape = |t: f64| -> Vec<f64> { mp.iter().map(|&x| 1.0 + t * (x - 1.0)).collect() };
    if gas_deficit(&mp, q) <= u {
        return mp;
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if gas_deficit(&shape(mid), q) < u {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    shape(0.5 * (lo + hi))
}

/// Seed with one detached eigenvalue carrying mass mu above a compressed sea.
fn evaporated_seed(n: usize, mu: f64) -> Vec<f64> {
    let sea_scale = (1.0 - mu) * n as f64 / (n - 1) as f64;
    let mut l: Vec<f64> = mp_quantiles(n - 1).iter().map(|&x| sea_scale * x).collect();
    l.push(mu * n as f64);
    l
}

// ---------------------------------------------------------------------------
// Newton solver
// ---------------------------------------------------------------------------

/// Solves the stationarity system for N eigenvalues at fixed deficit.
///
/// Interior-point damped Newton with the two multipliers as extra unknowns:
/// positivity enters through a log barrier walked down a fixed continuation
/// schedule, steps are shortened to preserve strict ordering, then
/// backtracked until the residual norm decreases. Eigenvalue collisions
/// trigger a jittered restart from the seed before the run is abandoned.
/// The reported residual is the KKT stationarity including the final wall
/// multipliers, which matters in the phases whose support touches zero:
/// there the constrained minimizer has its smallest eigenvalues pressed
/// against the positivity boundary and the plain interior equations have no
/// root.
pub fn minimize_potential(cfg: &OracleConfig) -> Result<CoulombGasState> {
    cfg.validate()?;
    let u = match cfg.target {
        Target::Deficit(u) => u,
        Target::InverseTemperature(_) => {
            return Err(Error::MissingParameter(
                "the saddle solver fixes the deficit; pass Target::Deficit".into(),
            ))
        }
    };
    let n = cfg.n;
    let nf = n as f64;
    if !(u > 0.0 && u < nf.ln()) {
        return Err(Error::OutOfRange(format!(
            "deficit must lie in (0, ln N) = (0, {:.6}), got {u}",
            nf.ln()
        )));
    }

    // Continuum solution at the same point seeds the shape and multipliers.
    let point = PhasePoint::with_n(cfg.q, u, n as u64);
    let continuum = solve(&point, &KernelConfig::default())?;
    let (beta0, xi0) = multipliers(&continuum)?;
    let seed = match continuum.phase {
        Phase::Separable => evaporated_seed(n, continuum.mu.unwrap_or(0.5)),
        _ => contracted_seed(n, cfg.q, u),
    };

    let mut jitter_rng = rng::from_seed_stream(cfg.seed, 0);
    let mut last_residual = f64::INFINITY;
    for restart in 0..=MAX_RESTARTS {
        let mut l = seed.clone();
        if restart > 0 {
            for x in l.iter_mut() {
                let (g, _) = rng::gaussian_pair(&mut jitter_rng);
                *x *= (1.0 + 1e-3 * g).max(0.5);
            }
            l.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mean = l.iter().sum::<f64>() / nf;
            l.iter_mut().for_each(|x| *x /= mean);
        }
        match newton_run(&mut l, beta0, xi0, cfg, u) {
            Ok(state) => return Ok(state),
            Err(Error::NonConvergence { residual, .. }) => last_residual = residual,
            Err(e) => return Err(e),
        }
    }
    Err(Error::NonConvergence {
        message: format!(
            "saddle solver failed after {} jittered restarts",
            MAX_RESTARTS
        ),
        residual: last_residual,
    })
}

/// Barrier continuation schedule: the first weight roughly balances the
/// edge imbalance of quantile seeds, the last leaves wall multipliers
/// below every tolerance used downstream.
const TAU_FIRST: f64 = 1e-2;
const TAU_LAST: f64 = 1e-10;

fn newton_run(
    l: &mut Vec<f64>,
    beta0: f64,
    xi0: f64,
    cfg: &OracleConfig,
    u: f64,
) -> Result<CoulombGasState> {
    let n = cfg.n;
    let m = n + 2;
    let (mut beta, mut xi) = (beta0, xi0);
    let mut r = vec![0.0; m];
    let mut r_trial = vec![0.0; m];
    let mut jac = vec![0.0; m * m];

    let mut tau = TAU_FIRST;
    loop {
        let last_stage = tau <= TAU_LAST;
        let stage_tol = if last_stage {
            cfg.step_tolerance
        } else {
            cfg.step_tolerance.max(1e-6)
        };
        let mut converged = false;
        for _ in 0..cfg.max_iterations {
            residuals(l, beta, xi, cfg.q, u, tau, &mut r);
            let saddle = max_abs(&r[..n]);
            let cons = max_abs(&r[n..]);
            if saddle <= stage_tol && cons <= CONSTRAINT_TOL {
                converged = true;
                break;
            }
            jacobian(l, beta, cfg.q, tau, &mut jac);
            let mut step: Vec<f64> = r.iter().map(|&x| -x).collect();
            let mut lu = jac.clone();
            lu_solve(&mut lu, m, &mut step)?;

            // Longest fraction of the step preserving order and positivity.
            let mut s = 1.0_f64;
            if step[0] < 0.0 {
                s = s.min(0.9 * l[0] / -step[0]);
            }
            for j in 0..n - 1 {
                let dgap = step[j + 1] - step[j];
                if dgap < 0.0 {
                    s = s.min(0.9 * (l[j + 1] - l[j]) / -dgap);
                }
            }
            // Backtrack until the residual norm drops.
            let norm0 = max_abs(&r);
            let mut accepted = false;
            while s >= MIN_STEP {
                let trial: Vec<f64> = l.iter().zip(&step).map(|(&x, &d)| x + s * d).collect();
                let tb = beta + s * step[n];
                let tx = xi + s * step[n + 1];
                residuals(&trial, tb, tx, cfg.q, u, tau, &mut r_trial);
                let norm1 = max_abs(&r_trial);
                if norm1.is_finite() && norm1 < norm0 * (1.0 - 1e-4 * s) {
                    *l = trial;
                    beta = tb;
                    xi = tx;
                    accepted = true;
                    break;
                }
                s *= 0.5;
            }
            let min_gap = l.windows(2).fold(f64::INFINITY, |a, w| a.min(w[1] - w[0]));
            if min_gap < COLLISION_GAP {
                return Err(Error::NonConvergence {
                    message: "eigenvalue collision".into(),
                    residual: max_abs(&r),
                });
            }
            if !accepted {
                return Err(Error::NonConvergence {
                    message: "stalled line search".into(),
                    residual: norm0,
                });
            }
        }
        if !converged {
            residuals(l, beta, xi, cfg.q, u, tau, &mut r);
            return Err(Error::NonConvergence {
                message: "iteration budget exhausted".into(),
                residual: max_abs(&r),
            });
        }
        if last_stage {
            return Ok(finish_state(l, beta, xi, cfg.q, u));
        }
        tau = (tau * 0.1).max(TAU_LAST);
    }
}

/// Renormalizes to the exact simplex and packages the state. The reported
/// residual is the KKT stationarity at the final barrier weight.
fn finish_state(l: &[f64], beta: f64, xi: f64, q: f64, u: f64) -> CoulombGasState {
    let n = l.len();
    let nf = n as f64;
    let total: f64 = l.iter().sum();
    let l_exact: Vec<f64> = l.iter().map(|&x| x * nf / total).collect();
    let mut r = vec![0.0; n + 2];
    residuals(&l_exact, beta, xi, q, u, TAU_LAST, &mut r);
    CoulombGasState {
        eigenvalues: l_exact.iter().map(|&x| x / nf).collect(),
        xi,
        beta,
        energy: gas_deficit(&l_exact, q),
        residual: max_abs(&r[..n]),
    }
}

// ---------------------------------------------------------------------------
// Metropolis sampler
// ---------------------------------------------------------------------------

/// Samples the Gibbs weight exp(-beta N^2 u(lambda)) times the squared
/// Vandermonde factor on the simplex.
///
/// Moves exchange mass between a random pair, so normalization holds
/// exactly. During burn-in (10 N sweeps) the temperature anneals from zero
/// coupling to the target and the proposal half-width adapts toward 50%
/// acceptance; both freeze afterwards, preserving detailed balance for the
/// recorded part of the chain. One state is recorded every N post-burn-in
/// sweeps.
pub fn metropolis_sample(cfg: &OracleConfig, sweeps: usize) -> Result<MetropolisRun> {
    cfg.validate()?;
    let beta = match cfg.target {
        Target::InverseTemperature(b) => b,
        Target::Deficit(_) => {
            return Err(Error::MissingParameter(
                "the sampler fixes the temperature; pass Target::InverseTemperature".into(),
            ))
        }
    };
    if sweeps == 0 {
        return Err(Error::OutOfRange("sweep budget must be positive".into()));
    }
    let n = cfg.n;
    let nf = n as f64;
    let q = cfg.q;
    let q1 = exact_q1(q);
    let mut rng = rng::from_seed_stream(cfg.seed, 1);

    // Spread start: the fully condensed point has zero Vandermonde weight.
    let mut lam: Vec<f64> = mp_quantiles(n).iter().map(|&x| x / nf).collect();
    // Running entropy sum: S_q = sum lambda^q, or sum lambda ln lambda at q=1.
    let refresh = |lam: &[f64]| -> f64 {
        if q1 {
            lam.iter().map(|&x| if x > 0.0 { x * x.ln() } else { 0.0 }).sum()
        } else {
            lam.iter().map(|&x| x.powf(q)).sum()
        }
    };
    let mut entropy_sum = refresh(&lam);
    let u_of = |s: f64| -> f64 {
        if q1 {
            nf.ln() + s
        } else {
            nf.ln() + s.ln() / (q - 1.0)
        }
    };

    let mut width = 1.0 / (nf * nf);
    let burn_in_sweeps = 10 * n;
    let total_sweeps = burn_in_sweeps + sweeps;
    let mut states = Vec::new();
    let mut accepted_run = 0usize;
    let mut proposed_run = 0usize;
    let mut window_acc = 0usize;
    let mut window_all = 0usize;

    for sweep in 0..total_sweeps {
        let tuning = sweep < burn_in_sweeps;
        // Anneal from the spread start to the target temperature over
        // burn-in: at large |beta| a cold chain started from the typical
        // configuration would freeze long before reaching its own phase.
        let beta_now = if tuning {
            beta * (sweep + 1) as f64 / burn_in_sweeps as f64
        } else {
            beta
        };
        for _ in 0..n {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let eps = width * (2.0 * rng.gen::<f64>() - 1.0);
            let (ai, aj) = (lam[i] + eps, lam[j] - eps);
            if !tuning {
                proposed_run += 1;
            }
            window_all += 1;
            let mut accept = false;
            if ai > 0.0 && aj > 0.0 {
                let mut dlog = 2.0 * ((ai - aj).abs().ln() - (lam[i] - lam[j]).abs().ln());
                for (k, &lk) in lam.iter().enumerate() {
                    if k == i || k == j {
                        continue;
                    }
                    dlog += 2.0
                        * ((ai - lk).abs().ln() + (aj - lk).abs().ln()
                            - (lam[i] - lk).abs().ln()
                            - (lam[j] - lk).abs().ln());
                }
                let moved = if q1 {
                    ai * ai.ln() + aj * aj.ln()
                        - lam[i] * lam[i].ln()
                        - lam[j] * lam[j].ln()
                } else {
                    ai.powf(q) + aj.powf(q) - lam[i].powf(q) - lam[j].powf(q)
                };
                let new_sum = entropy_sum + moved;
                let du = u_of(new_sum) - u_of(entropy_sum);
                dlog -= beta_now * nf * nf * du;
                if dlog >= 0.0 || rng.gen::<f64>() < dlog.exp() {
                    lam[i] = ai;
                    lam[j] = aj;
                    entropy_sum = new_sum;
                    accept = true;
                }
            }
            if accept {
                window_acc += 1;
                if !tuning {
                    accepted_run += 1;
                }
            }
            if tuning && window_all >= 100 {
                let rate = window_acc as f64 / window_all as f64;
                if rate > 0.55 {
                    width *= 1.15;
                } else if rate < 0.45 {
                    width /= 1.15;
                }
                width = width.clamp(1e-14, 1.0);
                window_acc = 0;
                window_all = 0;
            }
        }
        if !tuning && (sweep + 1 - burn_in_sweeps) % n == 0 {
            // Kill float drift before recording.
            let total: f64 = lam.iter().sum();
            lam.iter_mut().for_each(|x| *x /= total);
            entropy_sum = refresh(&lam);
            states.push(record_state(&lam, beta, q));
        }
    }
    if states.is_empty() {
        let total: f64 = lam.iter().sum();
        lam.iter_mut().for_each(|x| *x /= total);
        states.push(record_state(&lam, beta, q));
    }

    let acceptance = if proposed_run > 0 {
        accepted_run as f64 / proposed_run as f64
    } else {
        0.0
    };
    let warning = if !(0.1..=0.9).contains(&acceptance) {
        Some(format!(
            "acceptance rate {acceptance:.3} outside [0.1, 0.9] after tuning"
        ))
    } else {
        None
    };
    Ok(MetropolisRun {
        states,
        acceptance,
        step: width,
        warning,
    })
}

/// Packages a chain snapshot, estimating xi from stationarity: summing the
/// eigenvalue equations cancels the pair term, leaving xi as minus the mean
/// entropy gradient scaled by beta.
fn record_state(lam: &[f64], beta: f64, q: f64) -> CoulombGasState {
    let n = lam.len();
    let nf = n as f64;
    let mut l: Vec<f64> = lam.iter().map(|&x| nf * x).collect();
    l.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let q1 = exact_q1(q);
    let d = if q1 {
        1.0
    } else {
        let mq: f64 = l.iter().map(|&x| x.powf(q)).sum::<f64>() / nf;
        let m1: f64 = l.iter().sum::<f64>() / nf;
        mq - m1 + 1.0
    };
    let mean_grad: f64 = l
        .iter()
        .map(|&x| {
            if q1 {
                1.0 + x.ln()
            } else {
                (q * x.powf(q - 1.0) - 1.0) / ((q - 1.0) * d)
            }
        })
        .sum::<f64>()
        / nf;
    let xi = -beta * mean_grad;
    let u = gas_deficit(&l, q);
    let mut r = vec![0.0; n + 2];
    residuals(&l, beta, xi, q, u, 0.0, &mut r);
    CoulombGasState {
        eigenvalues: l.iter().map(|&x| x / nf).collect(),
        xi,
        beta,
        energy: u,
        residual: max_abs(&r[..n]),
    }
}

// ---------------------------------------------------------------------------
// comparison against the continuum
// ---------------------------------------------------------------------------

/// Distances between the empirical law of a state and a continuum solution.
///
/// The empirical measure uses scaled eigenvalues N lambda; in the separable
/// phase the detached top eigenvalue is excluded so the sea is compared to
/// the sea. Wasserstein-1 integrates the absolute CDF gap on a uniform grid
/// spanning both supports.
pub fn compare(state: &CoulombGasState, solution: &SpectrumSolution) -> Result<SpectralDistance> {
    if state.eigenvalues.is_empty() {
        return Err(Error::Domain("state has no eigenvalues".into()));
    }
    let nf = state.eigenvalues.len() as f64;
    let mut scaled: Vec<f64> = state.eigenvalues.iter().map(|&x| nf * x).collect();
    scaled.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if solution.phase == Phase::Separable && scaled.len() > 1 {
        scaled.pop();
    }
    let profile = DensityProfile::new(solution, &KernelConfig::default())?;
    let m = scaled.len();
    let mf = m as f64;

    let mut ks = 0.0_f64;
    for (i, &x) in scaled.iter().enumerate() {
        let f = profile.cdf(x)?;
        ks = ks.max(f - i as f64 / mf).max((i as f64 + 1.0) / mf - f);
    }

    let lo = solution.support.a.min(scaled[0]);
    let hi = solution.support.b.max(scaled[m - 1]);
    let cells = 8192usize;
    let dx = (hi - lo) / cells as f64;
    let mut w1 = 0.0;
    let mut idx = 0usize;
    for c in 0..cells {
        let x = lo + (c as f64 + 0.5) * dx;
        while idx < m && scaled[idx] <= x {
            idx += 1;
        }
        let emp = idx as f64 / mf;
        w1 += (emp - profile.cdf(x)?).abs() * dx;
    }

    Ok(SpectralDistance {
        wasserstein1: w1,
        ks,
        u_gap: (state.energy - solution.u).abs(),
    })
}
