//! Finite posets stored by their cover relation.
//!
//! Elements are indexed `0..n` with `n <= 64`, so every subset of a poset
//! is a `u64` mask. Labels are only used for I/O and for namespacing when
//! posets are combined.

mod family;
mod random;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bitset::bits;
use crate::error::{Error, Result};

pub use family::{in_family, DecompositionTree, OrdinalDecomposition};
pub use random::random_poset;

pub const MAX_ELEMENTS: usize = 64;

/// A finite partial order.
///
/// `covers` is always the transitive reduction of the order and is kept
/// sorted; `above[i]` / `below[i]` are the strict up- and down-sets of `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    above: Vec<u64>,
    below: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Filters,
    Antichains,
    MaximalChains,
}

/// A family of subsets of a poset's ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetFamily {
    pub kind: FamilyKind,
    pub ground_size: usize,
    /// Members in ascending mask order.
    pub members: Vec<u64>,
}

impl SubsetFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    labels: Vec<String>,
    covers: Vec<[String; 2]>,
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Poset {
    /// Builds a poset from arbitrary relations `(a, b)` meaning `a < b`.
    ///
    /// The order is the transitive closure of `relations`; the stored covers
    /// are its transitive reduction.
    pub fn from_covers<S: AsRef<str>>(labels: &[S], relations: &[(S, S)]) -> Result<Poset> {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_owned()).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownLabel(s.as_ref().to_owned()))
        };
        let mut edges = Vec::with_capacity(relations.len());
        for (a, b) in relations {
            edges.push((lookup(a)?, lookup(b)?));
        }
        Poset::from_index_relations(labels, &edges)
    }

    /// Same as [`Poset::from_covers`] but with relations given by index.
    pub fn from_index_relations(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements(n));
        }
        let mut succ = vec![0u64; n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in relations {
            assert!(a < n && b < n, "relation index out of range");
            if a == b {
                return Err(Error::Cycle(labels[a].clone()));
            }
            if succ[a] >> b & 1 == 0 {
                succ[a] |= 1 << b;
                indegree[b] += 1;
            }
        }

        // Kahn's algorithm; elements left over lie on a cycle.
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        while let Some(i) = stack.pop() {
            order.push(i);
            for j in bits(succ[i]) {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    stack.push(j);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&i| indegree[i] > 0).unwrap();
            return Err(Error::Cycle(labels[stuck].clone()));
        }

        let mut above = vec![0u64; n];
        for &i in order.iter().rev() {
            let mut up = succ[i];
            for j in bits(succ[i]) {
                up |= above[j];
            }
            above[i] = up;
        }
        Ok(Poset::from_closure(labels, above))
    }

    /// `above` must already be transitively closed and acyclic.
    fn from_closure(labels: Vec<String>, above: Vec<u64>) -> Poset {
        let n = labels.len();
        let mut below = vec![0u64; n];
        for i in 0..n {
            for j in bits(above[i]) {
                below[j] |= 1 << i;
            }
        }
        let mut covers = Vec::new();
        for i in 0..n {
            for j in bits(above[i]) {
                if above[i] & below[j] == 0 {
                    covers.push((i, j));
                }
            }
        }
        Poset {
            labels,
            covers,
            above,
            below,
        }
    }

    pub fn empty() -> Poset {
        Poset::from_closure(Vec::new(), Vec::new())
    }

    /// `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Poset {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_index_relations(labels, &rel).expect("chain is acyclic")
    }

    pub fn antichain(n: usize) -> Poset {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Poset::from_index_relations(labels, &[]).expect("antichain is acyclic")
    }

    /// The five-element X-poset `antichain(2) < chain(1) < antichain(2)`.
    pub fn x_poset() -> Poset {
        Poset::from_covers(
            &["a", "b", "c", "d", "e"],
            &[("a", "c"), ("b", "c"), ("c", "d"), ("c", "e")],
        )
        .expect("X-poset")
    }

    /// Fence built from chains of three elements glued alternately at
    /// their tops and bottoms: `z0 < z1 < z2 > z3 > z4 < z5 < z6 > ...`.
    ///
    /// Connected, of height three, X-free, and without ordinal cuts once it
    /// has at least six elements.
    pub fn zigzag(n: usize) -> Poset {
        let labels: Vec<String> = (0..n).map(|i| format!("z{i}")).collect();
        let mut rel = Vec::new();
        for i in 1..n {
            // Up-runs on segments [0,2], [4,6], ...; down-runs on [2,4], ...
            if (i - 1) % 4 < 2 {
                rel.push((i - 1, i));
            } else {
                rel.push((i, i - 1));
            }
        }
        Poset::from_index_relations(labels, &rel).expect("fence is acyclic")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Cover pairs `(i, j)`, `i` covered by `j`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn ground(&self) -> u64 {
        full_mask(self.len())
    }

    /// Strict up-set of `i`.
    pub fn above(&self, i: usize) -> u64 {
        self.above[i]
    }

    /// Strict down-set of `i`.
    pub fn below(&self, i: usize) -> u64 {
        self.below[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.above[i] >> j & 1 == 1
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.above[i] >> j & 1 == 1
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Elements comparable to `i`, excluding `i` itself.
    pub fn comparable_mask(&self, i: usize) -> u64 {
        self.above[i] | self.below[i]
    }

    /// The reflexive order as an `n × n` matrix.
    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        (0..n)
            .map(|i| (0..n).map(|j| self.leq(i, j)).collect())
            .collect()
    }

    pub fn minimal(&self) -> u64 {
        (0..self.len())
            .filter(|&i| self.below[i] == 0)
            .fold(0, |m, i| m | 1 << i)
    }

    pub fn maximal(&self) -> u64 {
        (0..self.len())
            .filter(|&i| self.above[i] == 0)
            .fold(0, |m, i| m | 1 << i)
    }

    /// Upward closure of a subset.
    pub fn up_closure(&self, set: u64) -> u64 {
        bits(set).fold(set, |m, i| m | self.above[i])
    }

    pub fn is_filter(&self, set: u64) -> bool {
        self.up_closure(set) == set
    }

    pub fn is_antichain(&self, set: u64) -> bool {
        bits(set).all(|i| self.comparable_mask(i) & set == 0)
    }

    pub fn is_chain(&self, set: u64) -> bool {
        bits(set).all(|i| set & !(self.comparable_mask(i) | 1 << i) == 0)
    }

    /// All antichains, including the empty one, in ascending mask order.
    pub fn antichains(&self) -> SubsetFamily {
        let mut members = Vec::new();
        self.antichains_from(0, 0, &mut members);
        members.sort_unstable();
        SubsetFamily {
            kind: FamilyKind::Antichains,
            ground_size: self.len(),
            members,
        }
    }

    fn antichains_from(&self, start: usize, chosen: u64, out: &mut Vec<u64>) {
        out.push(chosen);
        for i in start..self.len() {
            if self.comparable_mask(i) & chosen == 0 {
                self.antichains_from(i + 1, chosen | 1 << i, out);
            }
        }
    }

    /// All filters (up-sets), including `∅` and the whole poset.
    ///
    /// Generated as up-closures of antichains, which is a bijection.
    pub fn filters(&self) -> SubsetFamily {
        let mut members: Vec<u64> = self
            .antichains()
            .members
            .into_iter()
            .map(|a| self.up_closure(a))
            .collect();
        members.sort_unstable();
        SubsetFamily {
            kind: FamilyKind::Filters,
            ground_size: self.len(),
            members,
        }
    }

    /// All maximal chains: paths from a minimal to a maximal element in the
    /// Hasse diagram. The empty poset has none.
    pub fn maximal_chains(&self) -> SubsetFamily {
        let n = self.len();
        let mut up_covers = vec![Vec::new(); n];
        for &(i, j) in &self.covers {
            up_covers[i].push(j);
        }
        let mut members = Vec::new();
        let mut stack: Vec<(usize, u64)> = bits(self.minimal()).map(|i| (i, 1u64 << i)).collect();
        while let Some((i, mask)) = stack.pop() {
            if up_covers[i].is_empty() {
                members.push(mask);
            }
            for &j in &up_covers[i] {
                stack.push((j, mask | 1 << j));
            }
        }
        members.sort_unstable();
        SubsetFamily {
            kind: FamilyKind::MaximalChains,
            ground_size: n,
            members,
        }
    }

    /// Restriction of the order to the elements in `set`, keeping their
    /// relative index order and labels.
    pub fn induced_subposet(&self, set: u64) -> Poset {
        let set = set & self.ground();
        let keep: Vec<usize> = bits(set).collect();
        let mut pos = vec![usize::MAX; self.len()];
        for (k, &i) in keep.iter().enumerate() {
            pos[i] = k;
        }
        let remap = |m: u64| bits(m & set).fold(0u64, |acc, i| acc | 1 << pos[i]);
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let above = keep.iter().map(|&i| remap(self.above[i])).collect();
        Poset::from_closure(labels, above)
    }

    /// The dual order.
    pub fn opposite(&self) -> Poset {
        Poset::from_closure(self.labels.clone(), self.below.clone())
    }

    /// Labels for a combination of `self` (first) and `other` (second).
    /// Labels are kept verbatim unless the two label sets intersect, in
    /// which case they are prefixed with `0.` and `1.` respectively.
    fn merged_labels(&self, other: &Poset) -> Vec<String> {
        let clash = {
            let mine: std::collections::HashSet<&str> =
                self.labels.iter().map(String::as_str).collect();
            other.labels.iter().any(|l| mine.contains(l.as_str()))
        };
        if clash {
            self.labels
                .iter()
                .map(|l| format!("0.{l}"))
                .chain(other.labels.iter().map(|l| format!("1.{l}")))
                .collect()
        } else {
            self.labels.iter().chain(other.labels.iter()).cloned().collect()
        }
    }

    fn combined_closure(&self, other: &Poset, cross: bool) -> Poset {
        let n = self.len();
        let labels = self.merged_labels(other);
        if labels.len() > MAX_ELEMENTS {
            // Both inputs were valid; callers are expected to respect the cap.
            panic!("combined poset has {} elements, limit is 64", labels.len());
        }
        let b_mask = other.ground() << n;
        let above = self
            .above
            .iter()
            .map(|&a| if cross { a | b_mask } else { a })
            .chain(other.above.iter().map(|&a| a << n))
            .collect();
        Poset::from_closure(labels, above)
    }

    /// Ordinal sum `self < other`: every element of `self` lies below every
    /// element of `other`. Elements of `self` come first in the result.
    ///
    /// # Panics
    /// If the result would exceed 64 elements.
    pub fn ordinal_sum(&self, other: &Poset) -> Poset {
        self.combined_closure(other, true)
    }

    /// Disjoint union with no relations between the parts.
    ///
    /// # Panics
    /// If the result would exceed 64 elements.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        self.combined_closure(other, false)
    }

    /// Same order with labels replaced by `0..n`.
    pub fn strip_labels(&self) -> Poset {
        Poset {
            labels: (0..self.len()).map(|i| i.to_string()).collect(),
            ..self.clone()
        }
    }

    /// Isomorphism test by backtracking; intended for small posets.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        let n = self.len();
        if n != other.len() || self.covers.len() != other.covers.len() {
            return false;
        }
        let sig = |p: &Poset, i: usize| (p.below[i].count_ones(), p.above[i].count_ones());
        let mut a: Vec<u32> = (0..n).map(|i| self.below[i].count_ones() * 65 + self.above[i].count_ones()).collect();
        let mut b: Vec<u32> = (0..n).map(|i| other.below[i].count_ones() * 65 + other.above[i].count_ones()).collect();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
        let mut image = vec![usize::MAX; n];
        let mut used = 0u64;
        fn extend(
            p: &Poset,
            q: &Poset,
            k: usize,
            image: &mut [usize],
            used: &mut u64,
            sig: &dyn Fn(&Poset, usize) -> (u32, u32),
        ) -> bool {
            if k == p.len() {
                return true;
            }
            for t in 0..q.len() {
                if *used >> t & 1 == 1 || sig(p, k) != sig(q, t) {
                    continue;
                }
                let ok = (0..k).all(|i| {
                    p.less(i, k) == q.less(image[i], t) && p.less(k, i) == q.less(t, image[i])
                });
                if ok {
                    image[k] = t;
                    *used |= 1 << t;
                    if extend(p, q, k + 1, image, used, sig) {
                        return true;
                    }
                    *used &= !(1 << t);
                }
            }
            false
        }
        extend(self, other, 0, &mut image, &mut used, &sig)
    }

    /// True iff no induced five-element subposet is isomorphic to the
    /// X-poset.
    ///
    /// An induced X is a middle element `m` with an incomparable pair
    /// strictly below it and an incomparable pair strictly above it, so only
    /// elements with at least two elements on each side are inspected.
    pub fn is_x_free(&self) -> bool {
        (0..self.len()).all(|m| {
            let (down, up) = (self.below[m], self.above[m]);
            down.count_ones() < 2
                || up.count_ones() < 2
                || !self.has_incomparable_pair(down)
                || !self.has_incomparable_pair(up)
        })
    }

    fn has_incomparable_pair(&self, set: u64) -> bool {
        bits(set).any(|i| set & !(self.comparable_mask(i) | 1 << i) != 0)
    }

    /// Masks of the connected components of the comparability graph, i.e.
    /// the finest disjoint-union decomposition. Sorted by lowest element.
    pub fn components(&self) -> Vec<u64> {
        self.components_by(|p, i| p.comparable_mask(i))
    }

    fn components_by(&self, neighbours: impl Fn(&Poset, usize) -> u64) -> Vec<u64> {
        let mut rest = self.ground();
        let mut out = Vec::new();
        while rest != 0 {
            let seed = rest.trailing_zeros() as usize;
            let mut comp = 1u64 << seed;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for i in bits(frontier) {
                    next |= neighbours(self, i);
                }
                next &= rest & !comp;
                comp |= next;
                frontier = next;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    /// The finest decomposition `P = P₁ < P₂ < … < P_k`.
    ///
    /// The blocks are the connected components of the incomparability
    /// graph, listed bottom to top.
    pub fn ordinal_cuts(&self) -> OrdinalDecomposition {
        let ground = self.ground();
        let mut blocks =
            self.components_by(|p, i| ground & !(p.comparable_mask(i) | 1 << i));
        blocks.sort_by_key(|&b| self.below[b.trailing_zeros() as usize].count_ones());
        OrdinalDecomposition { blocks }
    }

    pub fn to_json(&self) -> String {
        let doc = PosetJson {
            labels: self.labels.clone(),
            covers: self
                .covers
                .iter()
                .map(|&(i, j)| [self.labels[i].clone(), self.labels[j].clone()])
                .collect(),
        };
        serde_json::to_string(&doc).expect("poset serializes")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::from_str(&self.to_json()).expect("valid json")
    }

    pub fn from_json(src: &str) -> Result<Poset> {
        let doc: PosetJson = serde_json::from_str(src).map_err(|e| Error::Json(e.to_string()))?;
        let rel: Vec<(&str, &str)> = doc
            .covers
            .iter()
            .map(|[a, b]| (a.as_str(), b.as_str()))
            .collect();
        let labels: Vec<&str> = doc.labels.iter().map(String::as_str).collect();
        Poset::from_covers(&labels, &rel)
    }

    /// Same order with labels sorted and elements renumbered to match, so
    /// that [`Poset::to_json`] is canonical for a labelled poset.
    pub fn sorted_by_label(&self) -> Poset {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        let mut pos = vec![0; self.len()];
        for (k, &i) in idx.iter().enumerate() {
            pos[i] = k;
        }
        let labels = idx.iter().map(|&i| self.labels[i].clone()).collect();
        let above = idx
            .iter()
            .map(|&i| bits(self.above[i]).fold(0u64, |m, j| m | 1 << pos[j]))
            .collect();
        Poset::from_closure(labels, above)
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset{}", self.to_json())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels_of(p: &Poset, mask: u64) -> Vec<&str> {
        bits(mask).map(|i| p.labels()[i].as_str()).collect()
    }

    #[test]
    fn from_covers_two_chain() {
        let p = Poset::from_covers(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(p.covers(), &[(0, 1)]);
        assert!(p.less(0, 1) && !p.less(1, 0));
    }

    #[test]
    fn from_covers_reduces_transitive_pair() {
        let p = Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert!(p.less(0, 2));
    }

    #[test]
    fn from_covers_errors() {
        assert_eq!(
            Poset::from_covers(&["a", "b"], &[("a", "b"), ("b", "a")]),
            Err(Error::Cycle("a".into()))
        );
        assert!(matches!(
            Poset::from_covers(&["a", "a"], &[]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(
            Poset::from_covers(&["a"], &[("a", "z")]),
            Err(Error::UnknownLabel(_))
        ));
        assert!(matches!(
            Poset::from_covers(&["a"], &[("a", "a")]),
            Err(Error::Cycle(_))
        ));
        let many: Vec<String> = (0..65).map(|i| i.to_string()).collect();
        assert!(matches!(
            Poset::from_index_relations(many, &[]),
            Err(Error::TooManyElements(65))
        ));
    }

    #[test]
    fn leq_matrix_is_reflexive_closure() {
        let p = Poset::chain(3);
        let m = p.leq_matrix();
        assert!(m[0][2] && m[1][1] && !m[2][0]);
    }

    #[test]
    fn ordinal_sums() {
        let two = Poset::chain(1).ordinal_sum(&Poset::chain(1));
        assert!(two.is_isomorphic(&Poset::chain(2)));

        let x = Poset::antichain(2)
            .ordinal_sum(&Poset::chain(1))
            .ordinal_sum(&Poset::antichain(2));
        assert!(x.is_isomorphic(&Poset::x_poset()));

        let aa = Poset::antichain(2).ordinal_sum(&Poset::antichain(2));
        assert_eq!(aa.len(), 4);
        assert_eq!(aa.covers().len(), 4);
    }

    #[test]
    fn ordinal_sum_namespaces_clashing_labels() {
        let s = Poset::chain(1).ordinal_sum(&Poset::chain(1));
        assert_eq!(s.labels(), &["0.0".to_string(), "1.0".to_string()]);
        let a = Poset::from_covers::<&str>(&["a"], &[]).unwrap();
        let b = Poset::from_covers::<&str>(&["b"], &[]).unwrap();
        assert_eq!(a.ordinal_sum(&b).labels(), &["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn disjoint_unions() {
        let u = Poset::chain(1).disjoint_union(&Poset::chain(1));
        assert!(u.is_isomorphic(&Poset::antichain(2)));
        let u = Poset::chain(2).disjoint_union(&Poset::chain(3));
        assert_eq!(u.len(), 5);
        assert_eq!(u.covers().len(), 3);
        assert!(u.components().len() >= 2);
    }

    #[test]
    fn opposites() {
        assert!(Poset::chain(3).opposite().is_isomorphic(&Poset::chain(3)));
        let v = Poset::chain(1).ordinal_sum(&Poset::antichain(2));
        let wedge = Poset::antichain(2).ordinal_sum(&Poset::chain(1));
        assert!(v.opposite().is_isomorphic(&wedge));
        assert!(!v.is_isomorphic(&wedge));
        assert_eq!(v.opposite().opposite(), v);
    }

    #[test]
    fn filter_counts() {
        let c2 = Poset::from_covers(&["a", "b"], &[("a", "b")]).unwrap();
        let f = c2.filters();
        assert_eq!(f.members, vec![0b00, 0b10, 0b11]);
        assert_eq!(Poset::x_poset().filters().len(), 8);
        assert_eq!(Poset::antichain(5).filters().len(), 32);
    }

    #[test]
    fn antichain_counts() {
        for n in 0..6 {
            assert_eq!(Poset::chain(n).antichains().len(), n + 1);
        }
        let x = Poset::x_poset();
        let mut got: Vec<Vec<&str>> = x
            .antichains()
            .members
            .iter()
            .map(|&m| labels_of(&x, m))
            .collect();
        got.sort();
        let mut want: Vec<Vec<&str>> = vec![
            vec![],
            vec!["a"],
            vec!["b"],
            vec!["c"],
            vec!["d"],
            vec!["e"],
            vec!["a", "b"],
            vec!["d", "e"],
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn maximal_chain_counts() {
        assert_eq!(Poset::chain(4).maximal_chains().members, vec![0b1111]);
        assert_eq!(Poset::x_poset().maximal_chains().len(), 4);
        assert_eq!(Poset::antichain(3).maximal_chains().len(), 3);
        assert!(Poset::empty().maximal_chains().is_empty());
    }

    #[test]
    fn induced_subposets() {
        let x = Poset::x_poset();
        assert!(x.induced_subposet(0).is_empty());
        assert_eq!(x.induced_subposet(x.ground()), x);
        // {a, c, d}
        let s = x.induced_subposet(0b01101);
        assert!(s.is_isomorphic(&Poset::chain(3)));
        assert_eq!(s.labels(), &["a", "c", "d"]);
    }

    #[test]
    fn x_freeness() {
        assert!(!Poset::x_poset().is_x_free());
        for n in 0..=4 {
            assert!(Poset::antichain(n).is_x_free());
            assert!(Poset::chain(n).is_x_free());
        }
        for n in 2..12 {
            assert!(Poset::zigzag(n).is_x_free(), "zigzag({n})");
        }
    }

    #[test]
    fn ordinal_decomposition() {
        let x = Poset::x_poset();
        let d = x.ordinal_cuts();
        let shapes: Vec<Vec<&str>> = d.blocks.iter().map(|&b| labels_of(&x, b)).collect();
        assert_eq!(shapes, vec![vec!["a", "b"], vec!["c"], vec!["d", "e"]]);
        assert_eq!(d.cuts().len(), 2);

        assert_eq!(Poset::antichain(2).ordinal_cuts().blocks.len(), 1);
        assert_eq!(Poset::chain(3).ordinal_cuts().blocks, vec![0b001, 0b010, 0b100]);
        assert!(Poset::empty().ordinal_cuts().blocks.is_empty());
    }

    #[test]
    fn zigzag_is_indecomposable() {
        let z = Poset::zigzag(7);
        assert_eq!(z.components().len(), 1);
        assert_eq!(z.ordinal_cuts().blocks.len(), 1);
    }

    #[test]
    fn json_round_trip_is_byte_stable() {
        let src = r#"{"labels":["a","b","c","d","e"],"covers":[["a","c"],["b","c"],["c","d"],["c","e"]]}"#;
        let p = Poset::from_json(src).unwrap();
        assert_eq!(p.to_json(), src);
        assert_eq!(Poset::from_json(&p.to_json()).unwrap(), p);
        assert!(matches!(Poset::from_json("{"), Err(Error::Json(_))));
    }

    #[test]
    fn sorted_by_label_renumbers() {
        let p = Poset::from_covers(&["b", "a"], &[("b", "a")]).unwrap();
        let s = p.sorted_by_label();
        assert_eq!(s.labels(), &["a", "b"]);
        assert_eq!(s.covers(), &[(1, 0)]);
        assert!(s.is_isomorphic(&p));
    }
}
