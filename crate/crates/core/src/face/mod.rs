//! Exact face lattices of polytopes given by vertices and facets.
//!
//! A face is identified by its vertex set. For a full-dimensional polytope
//! with an irredundant facet list, the nonempty faces are exactly the
//! intersections of facet vertex sets (the whole polytope being the empty
//! intersection), so the lattice is the intersection closure of the facet
//! columns of the incidence matrix.

mod rank;

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::fpoly::FPoly;

pub use rank::{affine_rank, EchelonBasis};

/// Vertex description: one integer coordinate vector per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VRep {
    pub ambient_dim: usize,
    pub vertices: Vec<Vec<i64>>,
}

impl VRep {
    pub fn new(ambient_dim: usize, vertices: Vec<Vec<i64>>) -> Result<VRep> {
        let mut seen = HashSet::with_capacity(vertices.len());
        for v in &vertices {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
            if !seen.insert(v) {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        Ok(VRep {
            ambient_dim,
            vertices,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, point: &[i64]) -> Option<usize> {
        self.vertices.iter().position(|v| v == point)
    }

    pub fn origin_index(&self) -> Option<usize> {
        self.vertices.iter().position(|v| v.iter().all(|&x| x == 0))
    }
}

/// One inequality `a · x ≤ b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HRow {
    pub a: Vec<i64>,
    pub b: i64,
}

impl HRow {
    pub fn eval(&self, x: &[i64]) -> i128 {
        self.a
            .iter()
            .zip(x)
            .map(|(&a, &x)| a as i128 * x as i128)
            .sum()
    }

    /// `[a₁, …, a_n, b]`
    pub fn to_array(&self) -> Vec<i64> {
        self.a.iter().copied().chain(std::iter::once(self.b)).collect()
    }
}

/// Facet description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    pub ambient_dim: usize,
    pub rows: Vec<HRow>,
}

impl HRep {
    /// Drops repeated rows, keeping first occurrences.
    pub fn dedup(&mut self) {
        let mut seen = HashSet::new();
        self.rows.retain(|r| seen.insert(r.clone()));
    }
}

/// Facet × vertex tightness matrix, stored as one vertex set per facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    vertex_count: usize,
    rows: Vec<VertexSet>,
}

impl IncidenceMatrix {
    pub fn facet_count(&self) -> usize {
        self.rows.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_tight(&self, row: usize, vertex: usize) -> bool {
        self.rows[row].contains(vertex)
    }

    /// Vertices on facet `row`.
    pub fn row(&self, row: usize) -> &VertexSet {
        &self.rows[row]
    }

    /// Number of facets through `vertex`.
    pub fn vertex_degree(&self, vertex: usize) -> usize {
        self.rows.iter().filter(|r| r.contains(vertex)).count()
    }

    /// Every row is tight somewhere.
    pub fn rows_are_tight(&self) -> bool {
        self.rows.iter().all(|r| !r.is_empty())
    }

    /// Each vertex of a full-dimensional `dim`-polytope lies on at least
    /// `dim` facets.
    pub fn degrees_at_least(&self, dim: usize) -> bool {
        (0..self.vertex_count).all(|v| self.vertex_degree(v) >= dim)
    }

    /// Each vertex is the only vertex on all of its facets, which certifies
    /// that it is extreme.
    pub fn vertices_are_extreme(&self) -> bool {
        (0..self.vertex_count).all(|v| {
            let mut common = VertexSet::full(self.vertex_count);
            for r in self.rows.iter().filter(|r| r.contains(v)) {
                common = common.intersection(r);
            }
            common.count() == 1
        })
    }
}

/// Tightness of every vertex against every row, exactly.
pub fn incidence(v: &VRep, h: &HRep) -> Result<IncidenceMatrix> {
    if v.ambient_dim != h.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: v.ambient_dim,
            found: h.ambient_dim,
        });
    }
    let mut rows = Vec::with_capacity(h.rows.len());
    for (ri, row) in h.rows.iter().enumerate() {
        if row.a.len() != h.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: h.ambient_dim,
                found: row.a.len(),
            });
        }
        let mut tight = VertexSet::empty(v.len());
        for (vi, x) in v.vertices.iter().enumerate() {
            let lhs = row.eval(x);
            if lhs > row.b as i128 {
                return Err(Error::InfeasibleVertex { vertex: vi, row: ri });
            }
            if lhs == row.b as i128 {
                tight.insert(vi);
            }
        }
        rows.push(tight);
    }
    Ok(IncidenceMatrix {
        vertex_count: v.len(),
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    pub dim: i64,
    pub vertices: VertexSet,
}

/// All faces of a polytope, sorted by `(dim, vertex set)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Face>,
    vertex_count: usize,
}

#[derive(Serialize)]
struct FaceLine<'a> {
    dim: i64,
    vertices: &'a [usize],
}

impl FaceSet {
    /// Sorts `faces` canonically.
    pub fn from_faces(vertex_count: usize, mut faces: Vec<Face>) -> FaceSet {
        faces.sort();
        FaceSet {
            faces,
            vertex_count,
        }
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension of the polytope (of its largest face).
    pub fn dim(&self) -> i64 {
        self.faces.last().map_or(-1, |f| f.dim)
    }

    pub fn contains(&self, set: &VertexSet) -> bool {
        self.faces.iter().any(|f| &f.vertices == set)
    }

    /// The vertex sets are closed under pairwise intersection.
    pub fn is_intersection_closed(&self) -> bool {
        let sets: HashSet<&VertexSet> = self.faces.iter().map(|f| &f.vertices).collect();
        self.faces.par_iter().all(|f| {
            self.faces
                .iter()
                .all(|g| sets.contains(&f.vertices.intersection(&g.vertices)))
        })
    }

    /// One JSON object per line: `{"dim":d,"vertices":[...]}`.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for f in &self.faces {
            let idx = f.vertices.to_vec();
            let line = FaceLine {
                dim: f.dim,
                vertices: &idx,
            };
            out.push_str(&serde_json::to_string(&line).expect("face serializes"));
            out.push('\n');
        }
        out
    }
}

/// A strategy for computing the face lattice from an incidence matrix.
pub trait FaceEnumerator {
    fn enumerate(&self, inc: &IncidenceMatrix, v: &VRep) -> Result<FaceSet>;
}

/// Breadth-first intersection closure of the facet vertex sets.
///
/// Each round intersects every face found in the previous round with every
/// facet; new sets become the next frontier. Rounds run data-parallel and
/// are merged through a visited set, and the final list is sorted, so the
/// output does not depend on scheduling.
#[derive(Debug, Clone, Copy, Default)]
pub struct ClosureBfs;

impl FaceEnumerator for ClosureBfs {
    fn enumerate(&self, inc: &IncidenceMatrix, v: &VRep) -> Result<FaceSet> {
        let rank = affine_rank(&v.vertices)?;
        if rank != v.ambient_dim as i64 {
            return Err(Error::NotFullDimensional {
                rank,
                ambient: v.ambient_dim,
            });
        }
        let n = v.len();
        let facets: Vec<VertexSet> = {
            let mut seen = HashSet::new();
            inc.rows
                .iter()
                .filter(|r| !r.is_empty() && seen.insert((*r).clone()))
                .cloned()
                .collect()
        };

        let mut visited: HashSet<VertexSet> = facets.iter().cloned().collect();
        let mut frontier: Vec<VertexSet> = facets.clone();
        while !frontier.is_empty() {
            let candidates: Vec<VertexSet> = frontier
                .par_iter()
                .flat_map_iter(|f| {
                    facets.iter().filter_map(move |g| {
                        let h = f.intersection(g);
                        (!h.is_empty() && &h != f).then_some(h)
                    })
                })
                .collect();
            frontier = candidates
                .into_iter()
                .filter(|h| visited.insert(h.clone()))
                .collect();
        }
        visited.insert(VertexSet::full(n));

        let mut faces: Vec<Face> = visited
            .into_par_iter()
            .map(|set| {
                let dim = rank::affine_rank_iter(set.iter().map(|i| v.vertices[i].as_slice()))?;
                Ok(Face { dim, vertices: set })
            })
            .collect::<Result<_>>()?;
        faces.push(Face {
            dim: -1,
            vertices: VertexSet::empty(n),
        });
        Ok(FaceSet::from_faces(n, faces))
    }
}

/// Face lattice via [`ClosureBfs`].
pub fn enumerate_faces(inc: &IncidenceMatrix, v: &VRep) -> Result<FaceSet> {
    ClosureBfs.enumerate(inc, v)
}

/// Coefficient of `x^(k+1)` is the number of `k`-dimensional faces.
pub fn f_polynomial(fs: &FaceSet) -> FPoly {
    let mut c = vec![0u128; (fs.dim() + 2).max(0) as usize];
    for f in fs.faces() {
        c[(f.dim + 1) as usize] += 1;
    }
    FPoly::new(c)
}

/// `(f⁰, f¹)`: faces containing vertex `v` and the rest (the empty face
/// included in `f¹`).
pub fn f_split_at(fs: &FaceSet, v: usize) -> Result<(FPoly, FPoly)> {
    if v >= fs.vertex_count() {
        return Err(Error::NotAVertex(v));
    }
    let len = (fs.dim() + 2).max(0) as usize;
    let (mut with, mut without) = (vec![0u128; len], vec![0u128; len]);
    for f in fs.faces() {
        let slot = (f.dim + 1) as usize;
        if f.vertices.contains(v) {
            with[slot] += 1;
        } else {
            without[slot] += 1;
        }
    }
    Ok((FPoly::new(with), FPoly::new(without)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(a: &[i64], b: i64) -> HRow {
        HRow { a: a.to_vec(), b }
    }

    fn segment() -> (VRep, HRep) {
        let v = VRep::new(1, vec![vec![0], vec![1]]).unwrap();
        let h = HRep {
            ambient_dim: 1,
            rows: vec![row(&[1], 1), row(&[-1], 0)],
        };
        (v, h)
    }

    fn triangle() -> (VRep, HRep) {
        let v = VRep::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        let h = HRep {
            ambient_dim: 2,
            rows: vec![row(&[-1, 0], 0), row(&[0, -1], 0), row(&[1, 1], 1)],
        };
        (v, h)
    }

    fn square() -> (VRep, HRep) {
        let v = VRep::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let h = HRep {
            ambient_dim: 2,
            rows: vec![
                row(&[-1, 0], 0),
                row(&[0, -1], 0),
                row(&[1, 0], 1),
                row(&[0, 1], 1),
            ],
        };
        (v, h)
    }

    fn faces_of((v, h): (VRep, HRep)) -> FaceSet {
        enumerate_faces(&incidence(&v, &h).unwrap(), &v).unwrap()
    }

    #[test]
    fn segment_incidence() {
        let (v, h) = segment();
        let inc = incidence(&v, &h).unwrap();
        let m: Vec<Vec<bool>> = (0..2)
            .map(|r| (0..2).map(|c| inc.is_tight(r, c)).collect())
            .collect();
        assert_eq!(m, vec![vec![false, true], vec![true, false]]);
    }

    #[test]
    fn triangle_incidence() {
        let (v, h) = triangle();
        let inc = incidence(&v, &h).unwrap();
        for r in 0..3 {
            assert_eq!(inc.row(r).count(), 2);
        }
        assert!(inc.rows_are_tight() && inc.degrees_at_least(2) && inc.vertices_are_extreme());
    }

    #[test]
    fn infeasible_vertex() {
        let (v, mut h) = triangle();
        h.rows[2].b = 0;
        assert_eq!(
            incidence(&v, &h),
            Err(Error::InfeasibleVertex { vertex: 1, row: 2 })
        );
    }

    #[test]
    fn duplicate_vertex_rejected() {
        assert!(matches!(
            VRep::new(1, vec![vec![0], vec![0]]),
            Err(Error::DuplicateVertex(_))
        ));
    }

    #[test]
    fn segment_faces() {
        let fs = faces_of(segment());
        assert_eq!(fs.len(), 4);
        assert_eq!(f_polynomial(&fs), FPoly::new(vec![1, 2, 1]));
        let (f0, f1) = f_split_at(&fs, 0).unwrap();
        assert_eq!(f0, FPoly::new(vec![0, 1, 1]));
        assert_eq!(f1, FPoly::new(vec![1, 1]));
    }

    #[test]
    fn triangle_faces() {
        let fs = faces_of(triangle());
        assert_eq!(fs.len(), 8);
        assert_eq!(f_polynomial(&fs), FPoly::one_plus_x_pow(3));
        for v in 0..3 {
            let (f0, f1) = f_split_at(&fs, v).unwrap();
            assert_eq!(f0, FPoly::new(vec![0, 1, 2, 1]));
            assert_eq!(f1, FPoly::new(vec![1, 2, 1]));
        }
        assert_eq!(f_split_at(&fs, 3), Err(Error::NotAVertex(3)));
    }

    #[test]
    fn square_faces() {
        let fs = faces_of(square());
        assert_eq!(f_polynomial(&fs), FPoly::new(vec![1, 4, 4, 1]));
        assert!(fs.is_intersection_closed());
        let (f0, _) = f_split_at(&fs, 3).unwrap();
        assert_eq!(f0.at_one(), 4);
    }

    #[test]
    fn point_in_zero_dimensions() {
        let v = VRep::new(0, vec![vec![]]).unwrap();
        let h = HRep {
            ambient_dim: 0,
            rows: vec![],
        };
        let fs = enumerate_faces(&incidence(&v, &h).unwrap(), &v).unwrap();
        assert_eq!(f_polynomial(&fs), FPoly::new(vec![1, 1]));
    }

    #[test]
    fn not_full_dimensional() {
        let v = VRep::new(2, vec![vec![0, 0], vec![1, 1]]).unwrap();
        let h = HRep {
            ambient_dim: 2,
            rows: vec![row(&[1, 0], 1), row(&[-1, 0], 0)],
        };
        let inc = incidence(&v, &h).unwrap();
        assert_eq!(
            enumerate_faces(&inc, &v),
            Err(Error::NotFullDimensional { rank: 1, ambient: 2 })
        );
    }

    #[test]
    fn json_lines_are_canonical() {
        let fs = faces_of(segment());
        assert_eq!(
            fs.to_json_lines(),
            "{\"dim\":-1,\"vertices\":[]}\n{\"dim\":0,\"vertices\":[0]}\n{\"dim\":0,\"vertices\":[1]}\n{\"dim\":1,\"vertices\":[0,1]}\n"
        );
    }
}
