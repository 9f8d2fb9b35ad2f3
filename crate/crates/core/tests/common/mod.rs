#![allow(dead_code)]

use hombi_core::linalg::{fixed_tensors, ratio, LinMap, Rational, Tensor2, Vector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rationals p/q with |p| ≤ 4, 1 ≤ q ≤ 3, zero about a third of the time.
pub fn small(rng: &mut ChaCha8Rng) -> Rational {
    if rng.gen_range(0..3) == 0 {
        return ratio(0, 1);
    }
    ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    Vector::from_vec((0..n).map(|_| small(rng)).collect())
}

pub fn tensor2(rng: &mut ChaCha8Rng, n: usize) -> Tensor2 {
    Tensor2::from_coords(n, (0..n * n).map(|_| small(rng)).collect()).unwrap()
}

pub fn symmetric(rng: &mut ChaCha8Rng, n: usize) -> Tensor2 {
    let t = tensor2(rng, n);
    &t + &t.flip()
}

pub fn antisymmetric(rng: &mut ChaCha8Rng, n: usize) -> Tensor2 {
    let t = tensor2(rng, n);
    &t - &t.flip()
}

/// A random combination of a basis of the `α⊗α`-fixed tensors.
pub fn invariant(rng: &mut ChaCha8Rng, alpha: &LinMap) -> Tensor2 {
    let mut r = Tensor2::zeros(alpha.dim());
    for b in fixed_tensors(alpha) {
        r.axpy(&small(rng), &b);
    }
    r
}

pub fn map(rng: &mut ChaCha8Rng, n: usize) -> LinMap {
    LinMap::from_rows((0..n).map(|_| (0..n).map(|_| small(rng)).collect()).collect()).unwrap()
}
