#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tgrs_core::tgrs::{CodeSpec, TwistMatrix};
use tgrs_core::{Elt, Field};

pub fn small_fields() -> Vec<Field> {
    vec![
        Field::prime(7).unwrap(),
        Field::prime(11).unwrap(),
        Field::prime(13).unwrap(),
        Field::new(2, 4, None).unwrap(),
    ]
}

pub fn distinct_points(rng: &mut ChaCha8Rng, f: &Field, n: usize, allow_zero: bool) -> Vec<Elt> {
    let mut pool: Vec<Elt> = if allow_zero { f.elements().collect() } else { f.nonzero_elements().collect() };
    pool.shuffle(rng);
    pool.truncate(n);
    pool
}

pub fn nonzero(rng: &mut ChaCha8Rng, f: &Field) -> Elt {
    f.elt(rng.random_range(1..f.q() as u64)).unwrap()
}

pub fn any_elt(rng: &mut ChaCha8Rng, f: &Field) -> Elt {
    f.elt(rng.random_range(0..f.q() as u64)).unwrap()
}

/// Dense twists fill every entry; sparse ones set each entry with
/// probability `density`.
pub fn random_twist(rng: &mut ChaCha8Rng, f: &Field, k: usize, r: usize, density: f64) -> TwistMatrix {
    let mut t = TwistMatrix::zero(k, r);
    for m in 0..k {
        for j in 1..=r {
            if rng.random_bool(density) {
                t.set(m, j, nonzero(rng, f));
            }
        }
    }
    t
}

pub fn random_spec(rng: &mut ChaCha8Rng, f: &Field, max_n: usize) -> CodeSpec {
    let n = rng.random_range(4..=max_n.min(f.q() as usize));
    let k = rng.random_range(3..n);
    let alpha = distinct_points(rng, f, n, true);
    let v = (0..n).map(|_| nonzero(rng, f)).collect();
    let density = [1.0, 0.5, 0.2, 0.08][rng.random_range(0..4)];
    let twist = random_twist(rng, f, k, n - k, density);
    CodeSpec::new(f.clone(), alpha, Some(v), twist).unwrap()
}

/// Minimum Hamming weight over all nonzero codewords.
pub fn min_distance(spec: &CodeSpec) -> usize {
    let f = spec.field();
    let g = spec.generator_matrix();
    let (k, q) = (spec.k(), f.q() as u64);
    let total = q.pow(k as u32);
    let mut best = spec.n();
    for idx in 1..total {
        let mut x = idx;
        let msg: Vec<Elt> = (0..k)
            .map(|_| {
                let e = f.elt(x % q).unwrap();
                x /= q;
                e
            })
            .collect();
        let weight = g.vec_mul(&msg).unwrap().iter().filter(|e| !e.is_zero()).count();
        best = best.min(weight);
    }
    best
}
