use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Poset;

/// Deterministic random poset on `n` elements.
///
/// The generator is ChaCha8 seeded with `seed` via `seed_from_u64`, and only
/// raw `next_u64` output is consumed so the stream does not depend on
/// sampling helpers:
///
/// 1. a Fisher–Yates shuffle of `0..n` (index `i` drawn as
///    `next_u64() % (i + 1)` for `i = n-1 .. 1`) fixes a linear order;
/// 2. for each pair `(order[i], order[j])`, `i < j`, in row-major order, the
///    relation `order[i] < order[j]` is added when
///    `next_u64() < edge_prob · 2⁶⁴`;
/// 3. the result is the transitive closure, stored reduced.
///
/// Labels are `"0".."n-1"`. `edge_prob` is clamped to `[0, 1]`.
pub fn random_poset(n: usize, seed: u64, edge_prob: f64) -> Poset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let k = (rng.next_u64() % (i as u64 + 1)) as usize;
        order.swap(i, k);
    }
    let p = edge_prob.clamp(0.0, 1.0);
    let mut rel = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let draw = rng.next_u64();
            let hit = if p >= 1.0 {
                true
            } else {
                (draw as f64) < p * 18_446_744_073_709_551_616.0
            };
            if hit {
                rel.push((order[i], order[j]));
            }
        }
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    Poset::from_index_relations(labels, &rel).expect("relations follow a linear order")
}
