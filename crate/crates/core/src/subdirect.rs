//! Subdirect sums `P ∨ Q = conv(P × {0} ∪ {0} × Q)` glued at a common
//! origin vertex, and their relation to polytopes of ordinal sums.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::face::{FaceSet, HRep, VRep};
use crate::polytope::{chain_polytope, order_polytope};
use crate::poset::Poset;

#[derive(Debug, Clone)]
pub struct SubdirectSum {
    pub left: VRep,
    pub left_facets: Option<HRep>,
    pub right: VRep,
    pub right_facets: Option<HRep>,
    pub combined: VRep,
}

impl SubdirectSum {
    pub fn new(left: VRep, right: VRep) -> Result<SubdirectSum> {
        let combined = subdirect_vertices(&left, &right)?;
        Ok(SubdirectSum {
            left,
            left_facets: None,
            right,
            right_facets: None,
            combined,
        })
    }

    pub fn dim(&self, left_dim: i64, right_dim: i64) -> i64 {
        subdirect_dim(left_dim, right_dim)
    }
}

/// Vertices of `P ∨ Q`: the origin, then `(v, 0)` for the nonzero vertices
/// of `P`, then `(0, w)` for those of `Q`. No hull computation is needed;
/// every listed point is a vertex.
pub fn subdirect_vertices(p: &VRep, q: &VRep) -> Result<VRep> {
    if p.origin_index().is_none() || q.origin_index().is_none() {
        return Err(Error::OriginNotVertex);
    }
    let (m, n) = (p.ambient_dim, q.ambient_dim);
    let mut vertices = vec![vec![0; m + n]];
    for v in &p.vertices {
        if v.iter().any(|&x| x != 0) {
            let mut w = v.clone();
            w.resize(m + n, 0);
            vertices.push(w);
        }
    }
    for v in &q.vertices {
        if v.iter().any(|&x| x != 0) {
            let mut w = vec![0; m];
            w.extend_from_slice(v);
            vertices.push(w);
        }
    }
    VRep::new(m + n, vertices)
}

/// `dim(P ∨ Q) = dim P + dim Q`.
pub fn subdirect_dim(dim_p: i64, dim_q: i64) -> i64 {
    dim_p + dim_q
}

/// Face counts indexed by `dim + 1`, split by whether the face contains the
/// origin vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OriginCounts {
    pub through: Vec<u128>,
    pub avoiding: Vec<u128>,
}

impl OriginCounts {
    pub fn from_faces(fs: &FaceSet, origin: usize) -> Result<OriginCounts> {
        if origin >= fs.vertex_count() {
            return Err(Error::NotAVertex(origin));
        }
        let len = (fs.dim() + 2) as usize;
        let mut c = OriginCounts {
            through: vec![0; len],
            avoiding: vec![0; len],
        };
        for f in fs.faces() {
            let slot = (f.dim + 1) as usize;
            if f.vertices.contains(origin) {
                c.through[slot] += 1;
            } else {
                c.avoiding[slot] += 1;
            }
        }
        Ok(OriginCounts {
            through: trimmed(c.through),
            avoiding: trimmed(c.avoiding),
        })
    }

    /// Counts of all faces, indexed by `dim + 1`.
    pub fn total(&self) -> Vec<u128> {
        let n = self.through.len().max(self.avoiding.len());
        trimmed(
            (0..n)
                .map(|k| self.through.get(k).unwrap_or(&0) + self.avoiding.get(k).unwrap_or(&0))
                .collect(),
        )
    }
}

fn trimmed(mut v: Vec<u128>) -> Vec<u128> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Face counts of `P ∨ Q` from those of `P` and `Q`.
///
/// Faces through the origin are `F ∨ G` with `F ∋ 0`, `G ∋ 0` and
/// `dim = dim F + dim G`. Faces avoiding it correspond to joins `F * G`
/// with `F ∌ 0`, `G ∌ 0` (either possibly empty) and
/// `dim = dim F + dim G + 1`.
pub fn subdirect_face_counts(p: &OriginCounts, q: &OriginCounts) -> OriginCounts {
    let len = p.through.len() + q.through.len();
    let mut through = vec![0u128; len];
    let mut avoiding = vec![0u128; len + 1];
    for (i, &a) in p.through.iter().enumerate().skip(1) {
        for (j, &b) in q.through.iter().enumerate().skip(1) {
            // dim F + dim G = (i - 1) + (j - 1), stored at that + 1
            through[i + j - 1] += a * b;
        }
    }
    for (i, &a) in p.avoiding.iter().enumerate() {
        for (j, &b) in q.avoiding.iter().enumerate() {
            // (i - 1) + (j - 1) + 1, stored at that + 1
            avoiding[i + j] += a * b;
        }
    }
    OriginCounts {
        through: trimmed(through),
        avoiding: trimmed(avoiding),
    }
}

fn vertex_set(v: &VRep) -> HashSet<Vec<i64>> {
    v.vertices.iter().cloned().collect()
}

/// `C(A < B) = C(A) ∨ C(B)` as vertex sets, coordinates of `A` first.
pub fn ordinal_chain_identity(a: &Poset, b: &Poset) -> bool {
    let sum = chain_polytope(&a.ordinal_sum(b));
    let Ok(glued) = subdirect_vertices(&chain_polytope(a).vrep, &chain_polytope(b).vrep) else {
        return false;
    };
    glued.len() == sum.vrep.len() && vertex_set(&glued) == vertex_set(&sum.vrep)
}

/// The map fixing `A`-coordinates and sending `x ↦ 1 − x` on
/// `B`-coordinates carries the vertices of `O(A < B)` onto those of
/// `O(A) ∨ O(Bᵒᵖ)`.
pub fn ordinal_order_identity(a: &Poset, b: &Poset) -> bool {
    let m = a.len();
    let sum = order_polytope(&a.ordinal_sum(b));
    let image: HashSet<Vec<i64>> = sum
        .vrep
        .vertices
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .map(|(i, &x)| if i < m { x } else { 1 - x })
                .collect()
        })
        .collect();
    let Ok(glued) = subdirect_vertices(&order_polytope(a).vrep, &order_polytope(&b.opposite()).vrep)
    else {
        return false;
    };
    image.len() == sum.vrep.len() && image == vertex_set(&glued)
}
