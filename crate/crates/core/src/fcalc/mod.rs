//! f-polynomial formulas for subdirect sums, products, joins and pyramids,
//! the α/β/γ/δ quantities of a poset, and checkers for the inequalities
//! relating order and chain polytopes.

mod recursive;

use serde::Serialize;

use crate::error::Result;
use crate::face::{f_split_at, FaceSet};
use crate::fpoly::FPoly;
use crate::polytope::chain_polytope;
use crate::poset::Poset;

pub use recursive::{
    brute_splits, recursive_split, verify_main_theorem, Method, OrdinalStep, PolytopeSplits,
    Report, SplitF, DEFAULT_MAX_BRUTE,
};

pub fn fp_add(f: &FPoly, g: &FPoly) -> FPoly {
    f + g
}

pub fn fp_mul(f: &FPoly, g: &FPoly) -> FPoly {
    f * g
}

pub fn fp_divx(f: &FPoly) -> Result<FPoly> {
    f.div_x()
}

pub fn fp_leq(f: &FPoly, g: &FPoly) -> bool {
    f.leq(g)
}

/// f-polynomial of `P ∨ Q`: `(1/x)·f⁰_P·f⁰_Q + f¹_P·f¹_Q`.
pub fn fp_subdirect(f0_p: &FPoly, f1_p: &FPoly, f0_q: &FPoly, f1_q: &FPoly) -> Result<FPoly> {
    Ok(&(f0_p * f0_q).div_x()? + &(f1_p * f1_q))
}

/// f-polynomial of `P × Q`: `1 + (f_P − 1)(f_Q − 1)/x`.
pub fn fp_product(f_p: &FPoly, f_q: &FPoly) -> Result<FPoly> {
    let one = FPoly::one();
    let a = f_p.checked_sub(&one)?;
    let b = f_q.checked_sub(&one)?;
    Ok(&one + &(&a * &b).div_x()?)
}

/// f-polynomial of the join `R * S`.
pub fn fp_join(f_r: &FPoly, f_s: &FPoly) -> FPoly {
    f_r * f_s
}

/// f-polynomial of the pyramid over `R`, i.e. the join with a point.
pub fn fp_pyramid(f: &FPoly) -> FPoly {
    f * &FPoly::new(vec![1, 1])
}

/// `α = f⁰_C / x`, `β = f⁰_O / x`, `γ = f¹_O`, `δ = f¹_C`, all split at
/// the origin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quad {
    pub alpha: FPoly,
    pub beta: FPoly,
    pub gamma: FPoly,
    pub delta: FPoly,
}

impl Quad {
    pub fn from_splits(s: &PolytopeSplits) -> Result<Quad> {
        Ok(Quad {
            alpha: s.chain.through_bottom().div_x()?,
            beta: s.order.through_bottom().div_x()?,
            gamma: s.order.avoiding_bottom(),
            delta: s.chain.avoiding_bottom(),
        })
    }

    /// The quantities of `Pᵒᵖ`: `C(Pᵒᵖ) = C(P)` and `O(Pᵒᵖ)` is `O(P)` with
    /// bottom and top exchanged.
    pub fn of_opposite(s: &PolytopeSplits) -> Result<Quad> {
        Quad::from_splits(&PolytopeSplits {
            order: s.order.swapped(),
            chain: s.chain.clone(),
        })
    }
}

pub fn quad(p: &Poset, method: Method, max_brute: usize) -> Result<Quad> {
    let splits = match method {
        Method::Brute => brute_splits(p)?,
        Method::Recursive => recursive_split(&crate::poset::DecompositionTree::canonical(p), max_brute)?,
    };
    Quad::from_splits(&splits)
}

/// `f⁰_{C(P)} = x(1 + x)^{#P}`: the vertex figure of the chain polytope at
/// the origin is a simplex.
pub fn check_simplex_vertex_figure(p: &Poset) -> Result<bool> {
    let c = chain_polytope(p);
    let (f0, _) = f_split_at(&c.faces()?, c.bottom)?;
    Ok(f0 == FPoly::one_plus_x_pow(p.len()).shift_up())
}

/// `f⁰ ≤ x·f¹` at vertex `v`.
pub fn origin_estimate_at(fs: &FaceSet, v: usize) -> Result<bool> {
    let (f0, f1) = f_split_at(fs, v)?;
    Ok(f0.leq(&f1.shift_up()))
}

/// `f⁰ ≤ x·f¹` at every vertex.
pub fn check_origin_estimate(fs: &FaceSet) -> bool {
    (0..fs.vertex_count()).all(|v| origin_estimate_at(fs, v).unwrap_or(false))
}

/// Both sides of `f_{P*Q} ≤ f_{pyr(P∨Q)}` and the slack terms
/// `g = x·f¹ − f⁰` of each factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PyrJoin {
    pub join: FPoly,
    pub pyramid: FPoly,
    pub g_p: Option<FPoly>,
    pub g_q: Option<FPoly>,
    pub holds: bool,
}

/// Compares the join of `P` and `Q` with the pyramid over `P ∨ Q`, both
/// glued at the given origin vertices.
pub fn check_pyr_vs_join(p: &FaceSet, p_origin: usize, q: &FaceSet, q_origin: usize) -> Result<PyrJoin> {
    let (f0p, f1p) = f_split_at(p, p_origin)?;
    let (f0q, f1q) = f_split_at(q, q_origin)?;
    let join = fp_join(&(&f0p + &f1p), &(&f0q + &f1q));
    let pyramid = fp_pyramid(&fp_subdirect(&f0p, &f1p, &f0q, &f1q)?);
    let holds = join.leq(&pyramid);
    Ok(PyrJoin {
        g_p: f1p.shift_up().checked_sub(&f0p).ok(),
        g_q: f1q.shift_up().checked_sub(&f0q).ok(),
        join,
        pyramid,
        holds,
    })
}

/// Outcome of the two-part α/β/γ/δ inequality check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LemmaAbcd {
    /// `x(β − α) ≤ δ − γ`
    pub part1: bool,
    /// `α ≤ β ≤ γ ≤ δ`
    pub part2: bool,
}

impl LemmaAbcd {
    pub fn holds(&self) -> bool {
        self.part1 && self.part2
    }
}

/// Checks both parts exactly. A subtraction that would go negative makes
/// the corresponding part false.
pub fn check_lemma_abcd(q: &Quad) -> LemmaAbcd {
    let part1 = match (q.beta.checked_sub(&q.alpha), q.delta.checked_sub(&q.gamma)) {
        (Ok(l), Ok(r)) => l.shift_up().leq(&r),
        _ => false,
    };
    let part2 = q.alpha.leq(&q.beta) && q.beta.leq(&q.gamma) && q.gamma.leq(&q.delta);
    LemmaAbcd { part1, part2 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::order_polytope;

    fn p(v: &[u128]) -> FPoly {
        FPoly::new(v.to_vec())
    }

    #[test]
    fn subdirect_of_segments_is_triangle() {
        let (f0, f1) = (p(&[0, 1, 1]), p(&[1, 1]));
        assert_eq!(fp_subdirect(&f0, &f1, &f0, &f1).unwrap(), FPoly::one_plus_x_pow(3));
    }

    #[test]
    fn subdirect_with_point() {
        let (f0, f1) = (p(&[0, 1, 2, 1]), p(&[1, 2, 1]));
        let got = fp_subdirect(&f0, &f1, &p(&[0, 1]), &p(&[1])).unwrap();
        assert_eq!(got, &f0 + &f1);
    }

    #[test]
    fn products() {
        let seg = p(&[1, 2, 1]);
        assert_eq!(fp_product(&seg, &seg).unwrap(), p(&[1, 4, 4, 1]));
        let tri = FPoly::one_plus_x_pow(3);
        assert_eq!(fp_product(&tri, &p(&[1, 1])).unwrap(), tri);
    }

    #[test]
    fn joins_and_pyramids() {
        let pt = p(&[1, 1]);
        assert_eq!(fp_join(&pt, &pt), p(&[1, 2, 1]));
        assert_eq!(fp_pyramid(&p(&[1, 4, 4, 1])), p(&[1, 5, 8, 5, 1]));
        let seg = p(&[1, 2, 1]);
        assert_eq!(fp_join(&seg, &seg), FPoly::one_plus_x_pow(4));
    }

    #[test]
    fn quad_of_single_element() {
        let q = quad(&Poset::chain(1), Method::Brute, DEFAULT_MAX_BRUTE).unwrap();
        for f in [&q.alpha, &q.beta, &q.gamma, &q.delta] {
            assert_eq!(f, &p(&[1, 1]));
        }
        let l = check_lemma_abcd(&q);
        assert!(l.part1 && l.part2);
    }

    #[test]
    fn quad_of_x_poset() {
        let x = Poset::x_poset();
        let q = quad(&x, Method::Brute, DEFAULT_MAX_BRUTE).unwrap();
        // f⁰_C = x(1+x)^5, so α = (1+x)^5.
        assert_eq!(q.alpha, FPoly::one_plus_x_pow(5));
        let qo = quad(&x.opposite(), Method::Brute, DEFAULT_MAX_BRUTE).unwrap();
        assert_eq!(q.alpha, qo.alpha);
        assert_eq!(q.delta, qo.delta);
        assert!(check_lemma_abcd(&q).holds());
        let r = quad(&x, Method::Recursive, DEFAULT_MAX_BRUTE).unwrap();
        assert_eq!(q, r);
    }

    #[test]
    fn simplex_vertex_figures() {
        assert!(check_simplex_vertex_figure(&Poset::chain(2)).unwrap());
        assert!(check_simplex_vertex_figure(&Poset::antichain(3)).unwrap());
        assert!(check_simplex_vertex_figure(&Poset::x_poset()).unwrap());
    }

    #[test]
    fn origin_estimates() {
        let tri = chain_polytope(&Poset::chain(2)).faces().unwrap();
        for v in 0..3 {
            let (f0, f1) = f_split_at(&tri, v).unwrap();
            assert_eq!(f0, f1.shift_up());
        }
        let sq = order_polytope(&Poset::antichain(2)).faces().unwrap();
        let (f0, f1) = f_split_at(&sq, 0).unwrap();
        assert_eq!(f0, p(&[0, 1, 2, 1]));
        assert_eq!(f1.shift_up(), p(&[0, 1, 3, 2]));
        assert!(check_origin_estimate(&sq));
    }

    #[test]
    fn pyramid_against_join() {
        let seg = order_polytope(&Poset::chain(1)).faces().unwrap();
        let r = check_pyr_vs_join(&seg, 0, &seg, 0).unwrap();
        assert_eq!(r.join, FPoly::one_plus_x_pow(4));
        assert_eq!(r.pyramid, FPoly::one_plus_x_pow(4));
        assert!(r.holds);

        let sq = chain_polytope(&Poset::antichain(2)).faces().unwrap();
        let r = check_pyr_vs_join(&sq, 0, &sq, 0).unwrap();
        // join: (1+4x+4x²+x³)²; pyramid over the 7-vertex subdirect sum
        assert_eq!(r.join, p(&[1, 8, 24, 34, 24, 8, 1]));
        assert_eq!(r.pyramid, p(&[1, 8, 24, 35, 26, 9, 1]));
        assert!(r.holds && r.join != r.pyramid);
        assert_eq!(r.g_p, Some(p(&[0, 0, 1, 1])));
    }
}
