//! Face counts of order and chain polytopes computed over a decomposition
//! tree, splitting every count by incidence with the bottom vertex `e_∅`
//! and (for order polytopes) the top vertex `e_P`.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::Quad;
use crate::error::{Error, Result};
use crate::face::FaceSet;
use crate::fpoly::FPoly;
use crate::polytope::{chain_polytope, order_polytope};
use crate::poset::{DecompositionTree, Poset};

pub const DEFAULT_MAX_BRUTE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Recursive,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Recursive => "recursive",
        }
    }
}

/// f-polynomial split four ways. Part `(b << 1) | t` counts the faces that
/// contain the bottom vertex iff `b` and the top vertex iff `t`. Polytopes
/// without a tracked top keep parts 1 and 3 at zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitF {
    parts: [FPoly; 4],
}

fn idx(b: bool, t: bool) -> usize {
    (b as usize) << 1 | t as usize
}

impl SplitF {
    pub fn from_parts(parts: [FPoly; 4]) -> SplitF {
        SplitF { parts }
    }

    pub fn from_faces(fs: &FaceSet, bottom: usize, top: Option<usize>) -> SplitF {
        let len = (fs.dim() + 2).max(0) as usize;
        let mut c = vec![vec![0u128; len]; 4];
        for f in fs.faces() {
            let b = f.vertices.contains(bottom);
            let t = top.is_some_and(|t| f.vertices.contains(t));
            c[idx(b, t)][(f.dim + 1) as usize] += 1;
        }
        let mut it = c.into_iter().map(FPoly::new);
        SplitF {
            parts: std::array::from_fn(|_| it.next().expect("four parts")),
        }
    }

    pub fn part(&self, bottom: bool, top: bool) -> &FPoly {
        &self.parts[idx(bottom, top)]
    }

    pub fn parts(&self) -> &[FPoly; 4] {
        &self.parts
    }

    pub fn total(&self) -> FPoly {
        self.parts.iter().sum()
    }

    pub fn through_bottom(&self) -> FPoly {
        self.part(true, false) + self.part(true, true)
    }

    pub fn avoiding_bottom(&self) -> FPoly {
        self.part(false, false) + self.part(false, true)
    }

    /// Exchanges the roles of bottom and top.
    pub fn swapped(&self) -> SplitF {
        let p = &self.parts;
        SplitF {
            parts: [p[0].clone(), p[2].clone(), p[1].clone(), p[3].clone()],
        }
    }

    /// Faces of a cartesian product are products of nonempty faces plus
    /// the empty face; a product face contains a marked vertex iff both
    /// factors do.
    fn product(&self, other: &SplitF) -> Result<SplitF> {
        let nonempty = |s: &SplitF| -> Result<[FPoly; 4]> {
            let mut p = s.parts.clone();
            p[0] = p[0].checked_sub(&FPoly::one())?;
            Ok(p)
        };
        let (l, r) = (nonempty(self)?, nonempty(other)?);
        let mut out: [FPoly; 4] = Default::default();
        for (i, a) in l.iter().enumerate() {
            for (j, b) in r.iter().enumerate() {
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                out[i & j] = &out[i & j] + &(a * b).div_x()?;
            }
        }
        out[0] = &out[0] + &FPoly::one();
        Ok(SplitF { parts: out })
    }

    /// Order polytope of `A < B` from those of `A` (self) and `B`.
    ///
    /// `O(A < B) ≅ O(A) ∨ O(Bᵒᵖ)` with the glued origin being `(e_∅, e_B)`
    /// on the `O(B)` side; the new bottom is the bottom of `O(B)` and the new
    /// top the top of `O(A)`.
    fn ordinal_order(&self, b: &SplitF) -> Result<SplitF> {
        let mut out: [FPoly; 4] = Default::default();
        for bb in [false, true] {
            for t in [false, true] {
                let through = (self.part(true, t) * b.part(bb, true)).div_x()?;
                let avoiding = self.part(false, t) * b.part(bb, false);
                out[idx(bb, t)] = &through + &avoiding;
            }
        }
        Ok(SplitF { parts: out })
    }

    /// Chain polytope of `A < B`: `C(A) ∨ C(B)` glued at the origin.
    fn ordinal_chain(&self, b: &SplitF) -> Result<SplitF> {
        let mut out: [FPoly; 4] = Default::default();
        out[idx(true, false)] = (self.part(true, false) * b.part(true, false)).div_x()?;
        out[idx(false, false)] = self.part(false, false) * b.part(false, false);
        Ok(SplitF { parts: out })
    }
}

/// Split f-polynomials of both polytopes of one poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeSplits {
    pub order: SplitF,
    pub chain: SplitF,
}

impl PolytopeSplits {
    fn product(&self, other: &PolytopeSplits) -> Result<PolytopeSplits> {
        Ok(PolytopeSplits {
            order: self.order.product(&other.order)?,
            chain: self.chain.product(&other.chain)?,
        })
    }

    fn ordinal(&self, other: &PolytopeSplits) -> Result<PolytopeSplits> {
        Ok(PolytopeSplits {
            order: self.order.ordinal_order(&other.order)?,
            chain: self.chain.ordinal_chain(&other.chain)?,
        })
    }
}

/// Splits from full face enumeration of both polytopes.
pub fn brute_splits(p: &Poset) -> Result<PolytopeSplits> {
    let o = order_polytope(p);
    let c = chain_polytope(p);
    let (of, cf) = rayon::join(|| o.faces(), || c.faces());
    Ok(PolytopeSplits {
        order: SplitF::from_faces(&of?, o.bottom, o.top),
        chain: SplitF::from_faces(&cf?, c.bottom, None),
    })
}

/// Splits computed over `tree`. Leaves up to `max_brute` elements are
/// enumerated directly; larger leaves are decomposed further and rejected
/// with [`Error::LeafTooLarge`] if they are indecomposable.
pub fn recursive_split(tree: &DecompositionTree, max_brute: usize) -> Result<PolytopeSplits> {
    match tree {
        DecompositionTree::Leaf(p) if p.len() <= max_brute => brute_splits(p),
        DecompositionTree::Leaf(p) => match DecompositionTree::canonical(p) {
            DecompositionTree::Leaf(_) => Err(Error::LeafTooLarge {
                size: p.len(),
                limit: max_brute,
            }),
            t => recursive_split(&t, max_brute),
        },
        DecompositionTree::OrdinalSum(ch) => fold(ch, max_brute, PolytopeSplits::ordinal),
        DecompositionTree::DisjointUnion(ch) => fold(ch, max_brute, PolytopeSplits::product),
    }
}

fn fold(
    children: &[DecompositionTree],
    max_brute: usize,
    op: fn(&PolytopeSplits, &PolytopeSplits) -> Result<PolytopeSplits>,
) -> Result<PolytopeSplits> {
    let parts: Vec<PolytopeSplits> = children
        .par_iter()
        .map(|c| recursive_split(c, max_brute))
        .collect::<Result<_>>()?;
    let mut it = parts.into_iter();
    let first = it.next().expect("nonempty node");
    it.try_fold(first, |acc, s| op(&acc, &s))
}

fn splits_for(tree: &DecompositionTree, method: Method, max_brute: usize) -> Result<PolytopeSplits> {
    match method {
        Method::Brute => brute_splits(&tree.evaluate()),
        Method::Recursive => recursive_split(tree, max_brute),
    }
}

/// The inequality chains for the last ordinal cut `A < B` of the root.
/// A side is `None` when one of its differences would be negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinalStep {
    /// `x·α_A·(β_Bᵒᵖ − α_B)` and `γ_A·(δ_B − γ_Bᵒᵖ)`
    pub lhs2: Option<FPoly>,
    pub rhs2: Option<FPoly>,
    /// `x·(β_A − α_A)·β_Bᵒᵖ` and `(δ_A − γ_A)·δ_B`
    pub lhs3: Option<FPoly>,
    pub rhs3: Option<FPoly>,
    /// Whether `f_O = x·β_A·β_Bᵒᵖ + γ_A·γ_Bᵒᵖ` and
    /// `f_C = x·α_A·α_B + δ_A·δ_B` reproduce the totals.
    pub identities: bool,
}

fn side_leq(l: &Option<FPoly>, r: &Option<FPoly>) -> bool {
    matches!((l, r), (Some(l), Some(r)) if l.leq(r))
}

impl OrdinalStep {
    pub fn holds2(&self) -> bool {
        side_leq(&self.lhs2, &self.rhs2)
    }

    pub fn holds3(&self) -> bool {
        side_leq(&self.lhs3, &self.rhs3)
    }

    fn new(a: &Quad, b: &Quad, b_op: &Quad, f_order: &FPoly, f_chain: &FPoly) -> OrdinalStep {
        let x = FPoly::monomial(1, 1);
        let lhs2 = b_op.beta.checked_sub(&b.alpha).ok().map(|d| &(&x * &a.alpha) * &d);
        let rhs2 = b.delta.checked_sub(&b_op.gamma).ok().map(|d| &a.gamma * &d);
        let lhs3 = a.beta.checked_sub(&a.alpha).ok().map(|d| &(&x * &d) * &b_op.beta);
        let rhs3 = a.delta.checked_sub(&a.gamma).ok().map(|d| &d * &b.delta);
        let fo = &(&(&x * &a.beta) * &b_op.beta) + &(&a.gamma * &b_op.gamma);
        let fc = &(&(&x * &a.alpha) * &b.alpha) + &(&a.delta * &b.delta);
        OrdinalStep {
            lhs2,
            rhs2,
            lhs3,
            rhs3,
            identities: &fo == f_order && &fc == f_chain,
        }
    }

    pub fn to_json(&self) -> Value {
        let coeffs = |f: &Option<FPoly>| f.as_ref().map(|f| f.coeffs().to_vec());
        json!({
            "lhs2": coeffs(&self.lhs2),
            "rhs2": coeffs(&self.rhs2),
            "holds2": self.holds2(),
            "lhs3": coeffs(&self.lhs3),
            "rhs3": coeffs(&self.rhs3),
            "holds3": self.holds3(),
            "identities": self.identities,
        })
    }
}

/// Outcome of comparing `f_O(P)` with `f_C(P)`.
#[derive(Debug, Clone)]
pub struct Report {
    pub poset: Poset,
    pub f_order: FPoly,
    pub f_chain: FPoly,
    pub leq: bool,
    /// `f_C − f_O` coefficientwise.
    pub slack: Vec<i128>,
    pub method: Method,
    pub ordinal_step: Option<OrdinalStep>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "poset": self.poset.to_json_value(),
            "fO": self.f_order.coeffs(),
            "fC": self.f_chain.coeffs(),
            "leq": self.leq,
            "slack": self.slack,
            "method": self.method.as_str(),
        });
        if let Some(s) = &self.ordinal_step {
            v["ordinal_step"] = s.to_json();
        }
        v
    }
}

pub fn verify_main_theorem(tree: &DecompositionTree, method: Method, max_brute: usize) -> Result<Report> {
    let splits = splits_for(tree, method, max_brute)?;
    let f_order = splits.order.total();
    let f_chain = splits.chain.total();
    let ordinal_step = match tree {
        DecompositionTree::OrdinalSum(ch) if ch.len() >= 2 => {
            let (last, init) = ch.split_last().expect("two children");
            let a_tree = match init {
                [one] => one.clone(),
                _ => DecompositionTree::OrdinalSum(init.to_vec()),
            };
            let (sa, sb) = rayon::join(
                || splits_for(&a_tree, method, max_brute),
                || splits_for(last, method, max_brute),
            );
            let sb = sb?;
            let qa = Quad::from_splits(&sa?)?;
            let qb = Quad::from_splits(&sb)?;
            let qb_op = Quad::of_opposite(&sb)?;
            Some(OrdinalStep::new(&qa, &qb, &qb_op, &f_order, &f_chain))
        }
        _ => None,
    };
    Ok(Report {
        poset: tree.evaluate(),
        leq: f_order.leq(&f_chain),
        slack: f_order.slack_to(&f_chain),
        f_order,
        f_chain,
        method,
        ordinal_step,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u128]) -> FPoly {
        FPoly::new(v.to_vec())
    }

    fn recursive(poset: &Poset) -> PolytopeSplits {
        recursive_split(&DecompositionTree::canonical(poset), 1).unwrap()
    }

    #[test]
    fn two_chain_by_ordinal_rule() {
        let c2 = Poset::chain(2);
        let r = recursive(&c2);
        assert_eq!(r.order.total(), FPoly::one_plus_x_pow(3));
        assert_eq!(r.order.part(false, false), &p(&[1, 1]));
        assert_eq!(r, brute_splits(&c2).unwrap());
    }

    #[test]
    fn square_by_product_rule() {
        let a2 = Poset::antichain(2);
        let r = recursive(&a2);
        assert_eq!(r.order.total(), p(&[1, 4, 4, 1]));
        assert_eq!(r, brute_splits(&a2).unwrap());
    }

    #[test]
    fn x_poset_matches_brute_force() {
        let x = Poset::x_poset();
        assert_eq!(recursive(&x), brute_splits(&x).unwrap());
    }

    #[test]
    fn mixed_trees_match_brute_force() {
        let v = Poset::chain(1).ordinal_sum(&Poset::antichain(2));
        let w = v.disjoint_union(&Poset::chain(2)).ordinal_sum(&v.opposite());
        assert_eq!(recursive(&w), brute_splits(&w).unwrap());
        let nested = DecompositionTree::canonical(&w);
        for t in [nested.left_nested(), nested.right_nested()] {
            assert_eq!(recursive_split(&t, 1).unwrap(), brute_splits(&w).unwrap());
        }
    }

    #[test]
    fn swapping_gives_opposite() {
        let v = Poset::chain(1).ordinal_sum(&Poset::antichain(2));
        let s = brute_splits(&v).unwrap();
        assert_eq!(s.order.swapped(), brute_splits(&v.opposite()).unwrap().order);
    }

    #[test]
    fn empty_poset_is_neutral() {
        let e = brute_splits(&Poset::empty()).unwrap();
        let v = brute_splits(&Poset::x_poset()).unwrap();
        assert_eq!(e.ordinal(&v).unwrap(), v);
        assert_eq!(v.ordinal(&e).unwrap(), v);
    }

    #[test]
    fn indecomposable_leaf_too_large() {
        let z = Poset::zigzag(6);
        let t = DecompositionTree::Leaf(z);
        assert!(matches!(
            recursive_split(&t, 4),
            Err(Error::LeafTooLarge { size: 6, limit: 4 })
        ));
        assert!(recursive_split(&DecompositionTree::Leaf(Poset::chain(6)), 4).is_ok());
    }

    #[test]
    fn report_on_x_poset() {
        let t = DecompositionTree::canonical(&Poset::x_poset());
        let brute = verify_main_theorem(&t, Method::Brute, DEFAULT_MAX_BRUTE).unwrap();
        let rec = verify_main_theorem(&t, Method::Recursive, DEFAULT_MAX_BRUTE).unwrap();
        assert!(brute.leq && rec.leq);
        assert_eq!(brute.f_order, rec.f_order);
        assert_eq!(brute.f_chain, rec.f_chain);
        assert_ne!(brute.f_order, brute.f_chain);
        let step = rec.ordinal_step.unwrap();
        assert!(step.identities && step.holds2() && step.holds3());
        let j = brute.to_json();
        assert_eq!(j["method"], "brute");
        assert_eq!(j["fO"].as_array().unwrap().len(), 7);
    }
}
