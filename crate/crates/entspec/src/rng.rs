use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// Deterministic generator used by every stochastic routine in the crate.
///
/// All randomness flows through ChaCha12 seeded from a user-visible u64, so
/// identical seeds reproduce identical output on every platform.
pub(crate) fn from_seed(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Independent substream of a seed, for routines that draw from several
/// logically separate sources without coupling their sequences.
pub(crate) fn from_seed_stream(seed: u64, stream: u64) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// One standard normal pair via the Marsaglia polar method.
pub(crate) fn gaussian_pair<R: Rng>(rng: &mut R) -> (f64, f64) {
    loop {
        let u = 2.0 * rng.gen::<f64>() - 1.0;
        let v = 2.0 * rng.gen::<f64>() - 1.0;
        let s = u * u + v * v;
        if s > 0.0 && s < 1.0 {
            let factor = (-2.0 * s.ln() / s).sqrt();
            return (u * factor, v * factor);
        }
    }
}
