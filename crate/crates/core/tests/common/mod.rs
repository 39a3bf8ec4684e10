//! Seeded random inputs shared by the integration tests.

#![allow(dead_code)]

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sqw::{Graph, Polygon, Tessellation, WalkState};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_unit_vector(rng: &mut impl Rng, len: usize) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> =
            (0..len).map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
        let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        // keep every entry comfortably away from zero
        if v.iter().all(|a| a.norm() > 1e-3) {
            return v.into_iter().map(|a| a / norm).collect();
        }
    }
}

pub fn random_state(rng: &mut impl Rng, dimension: usize) -> WalkState {
    WalkState::new(random_unit_vector(rng, dimension)).unwrap()
}

/// Random partition of `0..n` into polygons of at most `max_size` vertices,
/// each carrying a random unit vector. Valid on the complete graph.
pub fn random_tessellation(rng: &mut impl Rng, n: usize, max_size: usize) -> Tessellation {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut polygons = Vec::new();
    let mut rest = &order[..];
    while !rest.is_empty() {
        let size = rng.random_range(1..=max_size.min(rest.len()));
        let (head, tail) = rest.split_at(size);
        let amps = random_unit_vector(rng, size);
        polygons.push(Polygon::new(head.iter().copied().zip(amps)).unwrap());
        rest = tail;
    }
    Tessellation::new(polygons)
}

pub fn random_complete_graph(rng: &mut impl Rng, max_n: usize) -> Graph {
    Graph::complete(rng.random_range(2..=max_n))
}

pub fn max_entry_distance(a: &WalkState, b: &WalkState) -> f64 {
    a.amplitudes().iter().zip(b.amplitudes()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}
