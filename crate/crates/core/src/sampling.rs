//! Seeded random data for property batteries: small rationals (numerators
//! in `[-3, 3]`, denominators in `{1, 2}`), matrices, wedge elements, and
//! cochains. Everything is deterministic given the seed.

use crate::cochain::{multi_indices, Cochain};
use crate::linalg::Mat;
use crate::scalar::{rat, Rat};
use crate::wedge::wedge_dim;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

pub fn rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

pub fn small_rat(r: &mut ChaCha12Rng) -> Rat {
    let num = r.gen_range(-3i64..=3);
    let den = if r.gen_bool(0.5) { 1 } else { 2 };
    rat(num, den)
}

pub fn rat_vec(r: &mut ChaCha12Rng, len: usize) -> Vec<Rat> {
    (0..len).map(|_| small_rat(r)).collect()
}

pub fn matrix(r: &mut ChaCha12Rng, rows: usize, cols: usize) -> Mat {
    Mat::from_fn(rows, cols, |_, _| small_rat(r))
}

/// A dense random cochain of the given degree on `domain → codomain`.
pub fn cochain(r: &mut ChaCha12Rng, degree: usize, domain: usize, codomain: usize) -> Cochain {
    let mut c = Cochain::zero(degree, domain, codomain);
    if degree == 0 {
        for v in 0..domain {
            let val = rat_vec(r, codomain);
            c.set_g(&[], v, &val);
        }
        return c;
    }
    let w = wedge_dim(domain);
    for multi in multi_indices(w, degree) {
        let val = rat_vec(r, codomain);
        c.set_f(&multi, &val);
        for v in 0..domain {
            let val = rat_vec(r, codomain);
            c.set_g(&multi, v, &val);
        }
    }
    c
}
