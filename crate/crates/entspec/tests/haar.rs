//! Haar-random bipartite spectra against the Marchenko-Pastur limit.

use entspec::critical;
use entspec::haar::{sample_spectrum, u_estimate};
use std::f64::consts::{LN_2, PI};

/// Marchenko-Pastur CDF on [0, 4] in scaled units.
fn mp_cdf(x: f64) -> f64 {
    let theta = (x.clamp(0.0, 4.0).sqrt() / 2.0).asin();
    (2.0 * theta + (2.0 * theta).sin()) / PI
}

#[test]
fn two_level_spectrum_sums_to_one_unscaled() {
    let s = sample_spectrum(2, 5).unwrap();
    let unscaled: f64 = s.scaled_eigenvalues.iter().map(|&x| x / 2.0).sum();
    assert!((unscaled - 1.0).abs() < 1e-12);
    assert!(s.scaled_eigenvalues.iter().all(|&x| x >= 0.0));
}

#[test]
fn samples_are_reproducible_and_seed_sensitive() {
    let a = sample_spectrum(32, 9).unwrap();
    let b = sample_spectrum(32, 9).unwrap();
    let c = sample_spectrum(32, 10).unwrap();
    assert_eq!(a.scaled_eigenvalues, b.scaled_eigenvalues);
    assert_ne!(a.scaled_eigenvalues, c.scaled_eigenvalues);
}

#[test]
fn pooled_mean_is_pinned_by_trace_normalization() {
    let mut pooled = Vec::new();
    for seed in 0..10 {
        pooled.extend(sample_spectrum(128, seed).unwrap().scaled_eigenvalues);
    }
    let mean = pooled.iter().sum::<f64>() / pooled.len() as f64;
    assert!((mean - 1.0).abs() < 0.02);
}

#[test]
fn ensemble_concentrates_on_the_marchenko_pastur_law() {
    // One shared 100-draw ensemble at N=256 backs the KS, anchor, and
    // concentration checks; each draw costs an O(N^3) eigensolve.
    let n = 256usize;
    let draws = 100usize;
    let mut pooled: Vec<f64> = Vec::with_capacity(n * draws);
    let mut deficits = vec![Vec::with_capacity(draws); 3];
    let orders = [1.0, 2.0, 5.0];
    for k in 0..draws {
        let s = sample_spectrum(n, 4000 + k as u64).unwrap();
        for (slot, &q) in deficits.iter_mut().zip(&orders) {
            slot.push(u_estimate(&s, q).unwrap());
        }
        pooled.extend_from_slice(&s.scaled_eigenvalues);
    }

    pooled.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let m = pooled.len() as f64;
    let mut ks = 0.0f64;
    for (i, &x) in pooled.iter().enumerate() {
        let f = mp_cdf(x);
        ks = ks.max((f - i as f64 / m).max((i as f64 + 1.0) / m - f));
    }
    assert!(ks < 0.05, "pooled KS {ks}");

    let anchors = [0.5, LN_2, critical::u_e(5.0).unwrap()];
    let tolerances = [0.02, 0.02, 0.05];
    for i in 0..3 {
        let mean = deficits[i].iter().sum::<f64>() / draws as f64;
        let var = deficits[i].iter().map(|v| (v - mean).powi(2)).sum::<f64>() / draws as f64;
        assert!(
            (mean - anchors[i]).abs() < tolerances[i],
            "q={} mean {} anchor {}",
            orders[i],
            mean,
            anchors[i]
        );
        assert!(var.sqrt() < 0.05, "q={} std {}", orders[i], var.sqrt());
    }
}

#[test]
fn deficit_estimate_rejects_nonpositive_orders() {
    let s = sample_spectrum(8, 1).unwrap();
    assert!(u_estimate(&s, 0.0).is_err());
    assert!(u_estimate(&s, -2.0).is_err());
}

#[test]
fn tiny_dimensions_are_rejected() {
    assert!(sample_spectrum(0, 1).is_err());
    assert!(sample_spectrum(1, 1).is_err());
}
