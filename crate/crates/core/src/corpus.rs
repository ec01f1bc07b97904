//! Deterministic test corpora: a curated list of small posets, seeded
//! random posets, and random expressions built by ordinal sums and disjoint
//! unions from small leaves.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::expr::{literal_of, PosetExpr, Program};
use crate::poset::{random_poset, Poset};

pub const DEFAULT_SEED: u64 = 0x5eed0ff00d;
pub const DEFAULT_SIZE: usize = 200;

#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    pub poset: Poset,
}

fn entry(name: impl Into<String>, poset: Poset) -> Entry {
    Entry {
        name: name.into(),
        poset,
    }
}

/// `f0 < f1 > f2 < f3 > ...`
pub fn fence(n: usize) -> Poset {
    let labels = (0..n).map(|i| format!("f{i}")).collect();
    let rel: Vec<_> = (1..n)
        .map(|i| if i % 2 == 1 { (i - 1, i) } else { (i, i - 1) })
        .collect();
    Poset::from_index_relations(labels, &rel).expect("fence is acyclic")
}

pub fn curated() -> Vec<Entry> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push(entry(format!("chain({n})"), Poset::chain(n)));
    }
    for n in 2..=5 {
        out.push(entry(format!("antichain({n})"), Poset::antichain(n)));
    }
    for n in 3..=7 {
        out.push(entry(format!("fence({n})"), fence(n)));
    }
    out.push(entry("x", Poset::x_poset()));
    out.push(entry("op(x)", Poset::x_poset().opposite()));
    for n in [6, 7] {
        out.push(entry(format!("zigzag({n})"), Poset::zigzag(n)));
    }
    out
}

/// `size` random posets with 2 to 8 elements.
pub fn random_entries(size: usize, seed: u64) -> Vec<Entry> {
    const PROBS: [f64; 4] = [0.2, 0.35, 0.5, 0.7];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..size)
        .map(|i| {
            let n = 2 + (rng.next_u64() % 7) as usize;
            let prob = PROBS[(rng.next_u64() % 4) as usize];
            let s = rng.next_u64();
            entry(format!("random[{i}]"), random_poset(n, s, prob))
        })
        .collect()
}

/// Curated list followed by `size` random posets.
pub fn corpus(size: usize, seed: u64) -> Vec<Entry> {
    let mut out = curated();
    out.extend(random_entries(size, seed));
    out
}

/// Nonempty pairs with at most `max_total` elements together.
pub fn random_pairs(count: usize, seed: u64, max_total: usize) -> Vec<(Poset, Poset)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let total = 2 + (rng.next_u64() % (max_total as u64 - 1)) as usize;
            let a = 1 + (rng.next_u64() % (total as u64 - 1)) as usize;
            let pa = random_poset(a, rng.next_u64(), 0.45);
            let pb = random_poset(total - a, rng.next_u64(), 0.45);
            (pa, pb)
        })
        .collect()
}

fn lettered(p: &Poset) -> Poset {
    let labels = (0..p.len()).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let rel: Vec<_> = p.covers().to_vec();
    Poset::from_index_relations(labels, &rel).expect("relabelling keeps acyclicity")
}

/// Random expression with exactly `n` elements. Leaves have at most four
/// elements, hence are X-free, so every result lies in the family closed
/// under ordinal sums and disjoint unions.
pub fn random_family_expr(n: usize, rng: &mut ChaCha8Rng) -> PosetExpr {
    assert!(n >= 1);
    let leaf = n <= 4 && (n == 1 || rng.next_u64().is_multiple_of(3));
    let e = if leaf {
        match rng.next_u64() % 3 {
            0 => PosetExpr::Chain(n),
            1 => PosetExpr::Antichain(n),
            _ => literal_of(&lettered(&random_poset(n, rng.next_u64(), 0.5))),
        }
    } else {
        let k = 1 + (rng.next_u64() % (n as u64 - 1)) as usize;
        let a = random_family_expr(k, rng);
        let b = random_family_expr(n - k, rng);
        if rng.next_u64().is_multiple_of(2) {
            PosetExpr::ordinal(a, b)
        } else {
            PosetExpr::union(a, b)
        }
    };
    if rng.next_u64().is_multiple_of(6) {
        PosetExpr::op(e)
    } else {
        e
    }
}

/// `count` random expressions with sizes drawn from `min..=max`.
pub fn family_programs(count: usize, seed: u64, min: usize, max: usize) -> Vec<Program> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = min + (rng.next_u64() % (max - min + 1) as u64) as usize;
            Program {
                bindings: Vec::new(),
                body: random_family_expr(n, &mut rng),
            }
        })
        .collect()
}
