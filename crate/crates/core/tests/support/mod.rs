//! Independent oracles used by the integration tests. Nothing here calls
//! the face engine or the poset decomposition code.

#![allow(dead_code)]

use std::collections::HashMap;

use num_rational::Ratio;
use posetpoly::Poset;

type Q = Ratio<i128>;

/// Row-reduces `m` (with `cols` unknowns, last column the right-hand side).
/// Returns the unique solution, or `None` if the columns are dependent or
/// the system is inconsistent.
fn solve_unique(mut m: Vec<Vec<Q>>, cols: usize) -> Option<Vec<Q>> {
    let rows = m.len();
    let mut r = 0;
    for c in 0..cols {
        let p = (r..rows).find(|&i| m[i][c] != Q::from(0))?;
        m.swap(r, p);
        let pivot = m[r][c];
        for x in m[r].iter_mut() {
            *x /= pivot;
        }
        for i in 0..rows {
            if i != r && m[i][c] != Q::from(0) {
                let f = m[i][c];
                for k in 0..=cols {
                    let v = m[r][k];
                    m[i][k] -= f * v;
                }
            }
        }
        r += 1;
    }
    if m[r..].iter().any(|row| row[cols] != Q::from(0)) {
        return None;
    }
    Some((0..cols).map(|c| m[c][cols]).collect())
}

fn affine_basis(points: &[&Vec<i64>]) -> Vec<usize> {
    let mut basis: Vec<usize> = Vec::new();
    for (i, _) in points.iter().enumerate() {
        let mut cand = basis.clone();
        cand.push(i);
        if affinely_independent(&cand.iter().map(|&j| points[j]).collect::<Vec<_>>()) {
            basis = cand;
        }
    }
    basis
}

/// Points are affinely independent iff the vectors `(p, 1)` are linearly
/// independent.
fn affinely_independent(points: &[&Vec<i64>]) -> bool {
    if points.is_empty() {
        return true;
    }
    let d = points[0].len();
    let m: Vec<Vec<Q>> = (0..=d)
        .map(|r| {
            let mut row: Vec<Q> = points
                .iter()
                .map(|p| Q::from(if r < d { p[r] as i128 } else { 1 }))
                .collect();
            row.push(Q::from(0));
            row
        })
        .collect();
    // homogeneous system: unique solution iff full column rank
    solve_unique(m, points.len()).is_some()
}

/// Dimension of the affine hull.
pub fn affine_dim(points: &[&Vec<i64>]) -> i64 {
    affine_basis(points).len() as i64 - 1
}

/// Whether the affine hull of `w` meets the convex hull of `u`.
fn affine_meets_convex(w: &[&Vec<i64>], u: &[&Vec<i64>]) -> bool {
    if w.is_empty() || u.is_empty() {
        return false;
    }
    let basis: Vec<&Vec<i64>> = affine_basis(w).into_iter().map(|i| w[i]).collect();
    let d = u[0].len();
    let k = basis.len();
    let max_s = (d + 2).saturating_sub(k).min(u.len());
    // A minimal-support solution has independent columns.
    for mask in 1u32..(1 << u.len()) {
        if mask.count_ones() as usize > max_s {
            continue;
        }
        let s: Vec<&Vec<i64>> = (0..u.len()).filter(|i| mask >> i & 1 == 1).map(|i| u[i]).collect();
        let cols = k + s.len();
        // Σ μ_b b − Σ λ_s s = 0, Σ μ = 1, Σ λ = 1
        let mut m: Vec<Vec<Q>> = Vec::with_capacity(d + 2);
        for r in 0..d {
            let mut row: Vec<Q> = basis.iter().map(|b| Q::from(b[r] as i128)).collect();
            row.extend(s.iter().map(|p| Q::from(-(p[r] as i128))));
            row.push(Q::from(0));
            m.push(row);
        }
        let mut row = vec![Q::from(1); k];
        row.extend(vec![Q::from(0); s.len()]);
        row.push(Q::from(1));
        m.push(row);
        let mut row = vec![Q::from(0); k];
        row.extend(vec![Q::from(1); s.len()]);
        row.push(Q::from(1));
        m.push(row);
        if let Some(sol) = solve_unique(m, cols) {
            if sol[k..].iter().all(|x| *x >= Q::from(0)) {
                return true;
            }
        }
    }
    false
}

/// All faces of `conv(vertices)` as `(dim, sorted vertex indices)`, found by
/// testing every vertex subset `W` for `aff(W) ∩ conv(V ∖ W) = ∅`.
pub fn oracle_faces(vertices: &[Vec<i64>]) -> Vec<(i64, Vec<usize>)> {
    let n = vertices.len();
    assert!(n <= 12, "oracle is exponential in the vertex count");
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let w: Vec<&Vec<i64>> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &vertices[i]).collect();
        let u: Vec<&Vec<i64>> = (0..n).filter(|i| mask >> i & 1 == 0).map(|i| &vertices[i]).collect();
        if !affine_meets_convex(&w, &u) {
            let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            out.push((affine_dim(&w), idx));
        }
    }
    out.sort();
    out
}

/// Face counts indexed by `dim + 1`.
pub fn oracle_f_vector(vertices: &[Vec<i64>]) -> Vec<u128> {
    let faces = oracle_faces(vertices);
    let top = faces.iter().map(|f| f.0).max().unwrap_or(-1);
    let mut c = vec![0u128; (top + 2) as usize];
    for (d, _) in faces {
        c[(d + 1) as usize] += 1;
    }
    c
}

fn leq(p: &Poset, a: usize, b: usize) -> bool {
    p.leq(a, b)
}

/// Up-closed subsets by checking every subset.
pub fn naive_filters(p: &Poset) -> Vec<u64> {
    let n = p.len();
    (0u64..1 << n)
        .filter(|&m| {
            (0..n).all(|a| m >> a & 1 == 0 || (0..n).all(|b| !leq(p, a, b) || m >> b & 1 == 1))
        })
        .collect()
}

pub fn naive_antichains(p: &Poset) -> Vec<u64> {
    let n = p.len();
    (0u64..1 << n)
        .filter(|&m| {
            (0..n).all(|a| (0..n).all(|b| a == b || m >> a & 1 == 0 || m >> b & 1 == 0 || !leq(p, a, b)))
        })
        .collect()
}

pub fn vertices_of(masks: &[u64], n: usize) -> Vec<Vec<i64>> {
    masks
        .iter()
        .map(|m| (0..n).map(|i| (m >> i & 1) as i64).collect())
        .collect()
}

/// Some element has an incomparable pair strictly below and one strictly
/// above, checked over all 5-tuples.
pub fn naive_contains_x(p: &Poset) -> bool {
    let n = p.len();
    let lt = |a: usize, b: usize| a != b && leq(p, a, b);
    let inc = |a: usize, b: usize| a != b && !leq(p, a, b) && !leq(p, b, a);
    for c in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                if !(lt(a, c) && lt(b, c) && inc(a, b)) {
                    continue;
                }
                for d in 0..n {
                    for e in d + 1..n {
                        if lt(c, d) && lt(c, e) && inc(d, e) {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

/// Membership in the closure of X-free posets under ordinal sums and
/// disjoint unions, by trying every split of every induced subposet.
pub fn naive_in_family(p: &Poset) -> bool {
    fn go(p: &Poset, mask: u64, memo: &mut HashMap<u64, bool>) -> bool {
        if let Some(&r) = memo.get(&mask) {
            return r;
        }
        let elems: Vec<usize> = (0..p.len()).filter(|i| mask >> i & 1 == 1).collect();
        let sub = p.induced_subposet(mask);
        let mut ok = !naive_contains_x(&sub);
        if !ok && elems.len() > 1 {
            let k = elems.len();
            for s in 1u64..(1 << k) - 1 {
                let lo: u64 = (0..k).filter(|j| s >> j & 1 == 1).map(|j| 1 << elems[j]).sum();
                let hi = mask & !lo;
                let lo_elems: Vec<usize> = (0..p.len()).filter(|i| lo >> i & 1 == 1).collect();
                let hi_elems: Vec<usize> = (0..p.len()).filter(|i| hi >> i & 1 == 1).collect();
                let ordinal = lo_elems.iter().all(|&a| hi_elems.iter().all(|&b| p.leq(a, b) && a != b));
                let apart = lo_elems
                    .iter()
                    .all(|&a| hi_elems.iter().all(|&b| !p.leq(a, b) && !p.leq(b, a)));
                if (ordinal || apart) && go(p, lo, memo) && go(p, hi, memo) {
                    ok = true;
                    break;
                }
            }
        }
        memo.insert(mask, ok);
        ok
    }
    go(p, p.ground(), &mut HashMap::new())
}

/// f-vector of the `n`-cube indexed by `dim + 1`: `f_k = C(n,k)·2^(n−k)`.
pub fn cube_f_vector(n: usize) -> Vec<u128> {
    let mut out = vec![1u128];
    let mut binom = 1u128;
    for k in 0..=n {
        out.push(binom << (n - k));
        binom = binom * (n - k) as u128 / (k + 1) as u128;
    }
    out
}
