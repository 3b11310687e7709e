//! Spectra of Haar-random bipartite pure states.
//!
//! For a balanced bipartition the reduced state is W / tr W with W = G G^H
//! and G a square matrix of independent standard complex Gaussians, so its
//! spectrum follows the fixed-trace Wishart law. In scaled units N lambda
//! the large-N density is Marchenko-Pastur on [0, 4], which makes these
//! samples an unconstrained, continuum-free check on everything else in the
//! crate. Trace normalization makes the result invariant under rescaling G,
//! so no scale convention enters.

use crate::error::{Error, Result};
use crate::linalg::symmetric_eigenvalues;
use crate::rng;

/// Spectrum of one sampled reduced state, in scaled units.
#[derive(Debug, Clone)]
pub struct EmpiricalSpectrum {
    /// Values N lambda, ascending; their mean is one by trace normalization.
    pub scaled_eigenvalues: Vec<f64>,
    /// Hilbert space dimension of the kept subsystem.
    pub n: usize,
    /// Seed that produced this sample.
    pub seed: u64,
}

/// Draws one Haar-random pure state and returns its reduced spectrum.
///
/// The Hermitian W = G G^H is embedded as the real symmetric 2N x 2N block
/// matrix [[S, -K], [K, S]] whose spectrum is that of W doubled; pairing the
/// sorted eigenvalues recovers the N physical values and cross-checks the
/// eigensolver at the same time.
pub fn sample_spectrum(n: usize, seed: u64) -> Result<EmpiricalSpectrum> {
    if n < 2 {
        return Err(Error::OutOfRange(format!(
            "spectrum sampling needs dimension at least 2, got {n}"
        )));
    }
    let mut rng = rng::from_seed(seed);
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let mut re = vec![0.0; n * n];
    let mut im = vec![0.0; n * n];
    for k in 0..n * n {
        let (a, b) = rng::gaussian_pair(&mut rng);
        re[k] = a * inv_sqrt2;
        im[k] = b * inv_sqrt2;
    }

    // W = S + iK: S symmetric, K antisymmetric, filled from the lower triangle.
    let m = 2 * n;
    let mut emb = vec![0.0; m * m];
    for i in 0..n {
        for j in 0..=i {
            let mut s = 0.0;
            let mut k = 0.0;
            for t in 0..n {
                let (ri, ii) = (re[i * n + t], im[i * n + t]);
                let (rj, ij) = (re[j * n + t], im[j * n + t]);
                s += ri * rj + ii * ij;
                k += ii * rj - ri * ij;
            }
            emb[i * m + j] = s;
            emb[j * m + i] = s;
            emb[(n + i) * m + (n + j)] = s;
            emb[(n + j) * m + (n + i)] = s;
            emb[(n + i) * m + j] = k;
            emb[j * m + (n + i)] = k;
            emb[(n + j) * m + i] = -k;
            emb[i * m + (n + j)] = -k;
        }
    }

    let ev = symmetric_eigenvalues(&mut emb, m)?;
    let top = ev[m - 1].abs().max(1.0);
    let mut vals = Vec::with_capacity(n);
    for p in 0..n {
        let (a, b) = (ev[2 * p], ev[2 * p + 1]);
        if (b - a).abs() > 1e-7 * top {
            return Err(Error::NonConvergence {
                message: "embedded Hermitian spectrum failed to pair".into(),
                residual: (b - a).abs(),
            });
        }
        vals.push(0.5 * (a + b).max(0.0));
    }
    let trace: f64 = vals.iter().sum();
    let scale = n as f64 / trace;
    Ok(EmpiricalSpectrum {
        scaled_eigenvalues: vals.iter().map(|&v| v * scale).collect(),
        n,
        seed,
    })
}

/// Entropy deficit ln N - S_q of an empirical spectrum.
pub fn u_estimate(spectrum: &EmpiricalSpectrum, q: f64) -> Result<f64> {
    if !(q > 0.0 && q.is_finite()) {
        return Err(Error::Domain(format!(
            "entropy order must be positive and finite, got {q}"
        )));
    }
    let s = &spectrum.scaled_eigenvalues;
    if s.len() != spectrum.n || s.is_empty() {
        return Err(Error::Domain(
            "spectrum length disagrees with its dimension".into(),
        ));
    }
    let nf = spectrum.n as f64;
    if (q - 1.0).abs() <= 1e-8 {
        let t: f64 = s.iter().map(|&x| if x > 0.0 { x * x.ln() } else { 0.0 }).sum();
        return Ok(t / nf);
    }
    let m: f64 = s.iter().map(|&x| x.powf(q)).sum::<f64>() / nf;
    Ok(m.ln() / (q - 1.0))
}

/// CDF of the Marchenko-Pastur law on [0, 4], the large-N limit of the
/// scaled spectra sampled here: F(x) = (2 theta + sin 2 theta) / pi with
/// theta = asin(sqrt(x) / 2).
pub fn marchenko_pastur_cdf(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 4.0 {
        return 1.0;
    }
    let theta = (x.sqrt() / 2.0).asin();
    (2.0 * theta + (2.0 * theta).sin()) / std::f64::consts::PI
}

/// Kolmogorov-Smirnov distance between sorted values and the
/// Marchenko-Pastur law, max over the staircase corners.
pub fn marchenko_pastur_ks(sorted: &[f64]) -> f64 {
    let n = sorted.len() as f64;
    let mut ks = 0.0f64;
    for (i, &x) in sorted.iter().enumerate() {
        let f = marchenko_pastur_cdf(x);
        ks = ks.max((f - i as f64 / n).abs());
        ks = ks.max(((i + 1) as f64 / n - f).abs());
    }
    ks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_normalization_is_exact() {
        let s = sample_spectrum(2, 7).unwrap();
        let sum: f64 = s.scaled_eigenvalues.iter().sum();
        assert!((sum - 2.0).abs() < 1e-12);
        assert!(s.scaled_eigenvalues.iter().all(|&x| x >= 0.0));
    }

    #[test]
    fn samples_are_deterministic_in_the_seed() {
        let a = sample_spectrum(16, 42).unwrap();
        let b = sample_spectrum(16, 42).unwrap();
        assert_eq!(a.scaled_eigenvalues, b.scaled_eigenvalues);
        let c = sample_spectrum(16, 43).unwrap();
        assert_ne!(a.scaled_eigenvalues, c.scaled_eigenvalues);
    }

    #[test]
    fn uniform_spectrum_has_zero_deficit() {
        let s = EmpiricalSpectrum {
            scaled_eigenvalues: vec![1.0; 10],
            n: 10,
            seed: 0,
        };
        for q in [0.5, 1.0, 2.0, 5.0] {
            assert_eq!(u_estimate(&s, q).unwrap(), 0.0);
        }
    }

    #[test]
    fn pure_state_reaches_the_deficit_ceiling() {
        let n = 100;
        let mut v = vec![0.0; n];
        v[n - 1] = n as f64;
        let s = EmpiricalSpectrum {
            scaled_eigenvalues: v,
            n,
            seed: 0,
        };
        let ln_n = (n as f64).ln();
        assert!((u_estimate(&s, 2.0).unwrap() - ln_n).abs() < 1e-12);
        assert!((u_estimate(&s, 1.0).unwrap() - ln_n).abs() < 1e-12);
    }

    #[test]
    fn rejects_nonpositive_order() {
        let s = sample_spectrum(8, 1).unwrap();
        assert!(u_estimate(&s, 0.0).is_err());
        assert!(u_estimate(&s, -1.0).is_err());
    }

    #[test]
    fn limit_law_cdf_matches_its_density_by_quadrature() {
        // Midpoint rule on rho(x) = sqrt(4 - x) / (2 pi sqrt(x)).
        let rho = |x: f64| (4.0 - x).sqrt() / (2.0 * std::f64::consts::PI * x.sqrt());
        for target in [0.5, 1.0, 2.0, 3.5] {
            let m = 400_000;
            let mut acc = 0.0;
            for i in 0..m {
                let x = target * (i as f64 + 0.5) / m as f64;
                acc += rho(x) * target / m as f64;
            }
            assert!(
                (marchenko_pastur_cdf(target) - acc).abs() < 1e-6,
                "cdf mismatch at {target}"
            );
        }
        assert_eq!(marchenko_pastur_cdf(-1.0), 0.0);
        assert_eq!(marchenko_pastur_cdf(5.0), 1.0);
    }

    #[test]
    fn quantile_staircase_is_close_to_its_own_law() {
        // Exact quantiles at (i + 1/2) / n should sit within 1/(2n) of the law.
        let n = 200;
        let mut quantiles = Vec::with_capacity(n);
        for i in 0..n {
            let p = (i as f64 + 0.5) / n as f64;
            let mut lo = 0.0;
            let mut hi = 4.0;
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if marchenko_pastur_cdf(mid) < p {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            quantiles.push(0.5 * (lo + hi));
        }
        let ks = marchenko_pastur_ks(&quantiles);
        assert!(ks <= 0.5 / n as f64 + 1e-9, "ks {ks}");
    }
}
