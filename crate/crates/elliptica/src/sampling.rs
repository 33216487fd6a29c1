//! Deterministic constrained random sampling of complex parameters.
//!
//! Free parameters are drawn with log-uniform modulus in [0.5, 2] and
//! uniform phase; the base q gets modulus in [0.3, 0.7] and the nome p in
//! [0.05, 0.3]. All draws come from a counter-seeded ChaCha stream so a
//! (seed, shape) pair always reproduces the same assignment.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::precision::C64;

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Log-uniform modulus in [lo, hi], uniform phase.
pub fn draw_annulus(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> C64 {
    let m = lo * (hi / lo).powf(rng.gen::<f64>());
    let phase = rng.gen::<f64>() * std::f64::consts::TAU;
    C64::from_polar(m, phase)
}

/// A free parameter draw.
pub fn draw_param(rng: &mut ChaCha8Rng) -> C64 {
    draw_annulus(rng, 0.5, 2.0)
}

pub fn draw_q(rng: &mut ChaCha8Rng) -> C64 {
    draw_annulus(rng, 0.3, 0.7)
}

pub fn draw_p(rng: &mut ChaCha8Rng) -> C64 {
    draw_annulus(rng, 0.05, 0.3)
}

/// Variable vector with the normalization x_1 = 1.
pub fn draw_x(rng: &mut ChaCha8Rng, n: usize) -> Vec<C64> {
    (0..n)
        .map(|r| if r == 0 { C64::one() } else { draw_param(rng) })
        .collect()
}

/// One full draw of engine-level parameters (matrices, pairs, lemmas).
#[derive(Clone, Debug)]
pub struct EngineParams {
    pub q: C64,
    pub p: C64,
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
    pub e: C64,
    pub rho1: C64,
    pub rho2: C64,
    pub x: Vec<C64>,
}

pub fn engine_params(seed: u64, n: usize, p_zero: bool) -> EngineParams {
    let mut rng = rng_for(seed);
    let q = draw_q(&mut rng);
    let p = if p_zero { C64::zero() } else { draw_p(&mut rng) };
    EngineParams {
        q,
        p,
        a: draw_param(&mut rng),
        b: draw_param(&mut rng),
        c: draw_param(&mut rng),
        d: draw_param(&mut rng),
        e: draw_param(&mut rng),
        rho1: draw_param(&mut rng),
        rho2: draw_param(&mut rng),
        x: draw_x(&mut rng, n),
    }
}
