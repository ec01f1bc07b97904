//! Order and chain polytopes in vertex and facet form.
//!
//! Coordinate `i` corresponds to poset element `i`. Vertices are listed in
//! ascending order of their 0/1 support read as a bitmask, so the origin is
//! always vertex 0 and, for order polytopes, the all-ones vertex is last.

use std::collections::HashSet;

use crate::bitset::bits;
use crate::error::Result;
use crate::face::{enumerate_faces, f_polynomial, incidence, FaceSet, HRep, HRow, VRep};
use crate::fpoly::FPoly;
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Order,
    Chain,
}

#[derive(Debug, Clone)]
pub struct PosetPolytope {
    pub poset: Poset,
    pub kind: Kind,
    pub vrep: VRep,
    pub hrep: HRep,
    /// Index of the origin `e_∅`.
    pub bottom: usize,
    /// Index of `e_P` for order polytopes.
    pub top: Option<usize>,
}

fn indicator(n: usize, mask: u64) -> Vec<i64> {
    (0..n).map(|i| (mask >> i & 1) as i64).collect()
}

fn unit_row(n: usize, i: usize, c: i64) -> Vec<i64> {
    let mut a = vec![0; n];
    a[i] = c;
    a
}

impl PosetPolytope {
    pub fn new(poset: &Poset, kind: Kind) -> PosetPolytope {
        match kind {
            Kind::Order => order_polytope(poset),
            Kind::Chain => chain_polytope(poset),
        }
    }

    pub fn dim(&self) -> usize {
        self.vrep.ambient_dim
    }

    pub fn faces(&self) -> Result<FaceSet> {
        enumerate_faces(&incidence(&self.vrep, &self.hrep)?, &self.vrep)
    }

    pub fn f_polynomial(&self) -> Result<FPoly> {
        Ok(f_polynomial(&self.faces()?))
    }
}

fn finish(poset: &Poset, kind: Kind, masks: &[u64], mut hrep: HRep) -> PosetPolytope {
    let n = poset.len();
    hrep.dedup();
    let vrep = VRep {
        ambient_dim: n,
        vertices: masks.iter().map(|&m| indicator(n, m)).collect(),
    };
    let bottom = masks.iter().position(|&m| m == 0).expect("empty set is a vertex");
    let top = match kind {
        Kind::Order => masks.iter().position(|&m| m == poset.ground()),
        Kind::Chain => None,
    };
    PosetPolytope {
        poset: poset.clone(),
        kind,
        vrep,
        hrep,
        bottom,
        top,
    }
}

/// `O(P)`: vertices `e_F` over filters `F`; facets `x_i ≥ 0` for minimal
/// `i`, `x_j ≤ 1` for maximal `j`, and `x_i ≤ x_j` for covers `i ⋖ j`.
pub fn order_polytope(p: &Poset) -> PosetPolytope {
    let n = p.len();
    let mut rows = Vec::new();
    for i in bits(p.minimal()) {
        rows.push(HRow {
            a: unit_row(n, i, -1),
            b: 0,
        });
    }
    for j in bits(p.maximal()) {
        rows.push(HRow {
            a: unit_row(n, j, 1),
            b: 1,
        });
    }
    for &(i, j) in p.covers() {
        let mut a = vec![0; n];
        a[i] = 1;
        a[j] = -1;
        rows.push(HRow { a, b: 0 });
    }
    let hrep = HRep {
        ambient_dim: n,
        rows,
    };
    finish(p, Kind::Order, &p.filters().members, hrep)
}

/// `C(P)`: vertices `e_A` over antichains `A`; facets `x_i ≥ 0` for every
/// `i` and `Σ_{i∈C} x_i ≤ 1` for every maximal chain `C`.
pub fn chain_polytope(p: &Poset) -> PosetPolytope {
    let n = p.len();
    let mut rows: Vec<HRow> = (0..n)
        .map(|i| HRow {
            a: unit_row(n, i, -1),
            b: 0,
        })
        .collect();
    for c in p.maximal_chains().members {
        rows.push(HRow {
            a: indicator(n, c),
            b: 1,
        });
    }
    let hrep = HRep {
        ambient_dim: n,
        rows,
    };
    finish(p, Kind::Chain, &p.antichains().members, hrep)
}

/// `#minimal + #maximal + #covers`.
pub fn facet_count_order(p: &Poset) -> usize {
    (p.minimal().count_ones() + p.maximal().count_ones()) as usize + p.covers().len()
}

/// `#P + #maximal chains`.
pub fn facet_count_chain(p: &Poset) -> usize {
    p.len() + p.maximal_chains().len()
}

/// Checks that `x ↦ 1 − x` maps the vertices of `O(P)` bijectively onto
/// those of `O(Pᵒᵖ)`.
pub fn opposite_iso_check(p: &Poset) -> bool {
    let here = order_polytope(p);
    let there = order_polytope(&p.opposite());
    let image: HashSet<Vec<i64>> = here
        .vrep
        .vertices
        .iter()
        .map(|v| v.iter().map(|x| 1 - x).collect())
        .collect();
    let target: HashSet<Vec<i64>> = there.vrep.vertices.iter().cloned().collect();
    image.len() == here.vrep.len() && image == target
}
