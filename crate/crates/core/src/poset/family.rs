//! Decomposition of posets into ordinal sums and disjoint unions.

use super::Poset;

/// Finest ordinal decomposition `P = P₁ < … < P_k`, blocks bottom to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinalDecomposition {
    pub blocks: Vec<u64>,
}

impl OrdinalDecomposition {
    /// Every cut `(A, B)` with both sides nonempty and `A` entirely below
    /// `B`. Cuts form a chain, so there is one per gap between blocks.
    pub fn cuts(&self) -> Vec<(u64, u64)> {
        let all = self.blocks.iter().fold(0, |m, b| m | b);
        let mut lower = 0;
        let mut out = Vec::new();
        for &b in &self.blocks[..self.blocks.len().saturating_sub(1)] {
            lower |= b;
            out.push((lower, all & !lower));
        }
        out
    }
}

/// A construction of a poset from leaves by ordinal sums and disjoint
/// unions. Children of a sum node are listed in order (bottom to top for
/// ordinal sums).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionTree {
    Leaf(Poset),
    OrdinalSum(Vec<DecompositionTree>),
    DisjointUnion(Vec<DecompositionTree>),
}

impl DecompositionTree {
    /// Splits `p` by components and ordinal blocks until every leaf is
    /// indecomposable (a single element, or connected with no cut).
    pub fn canonical(p: &Poset) -> DecompositionTree {
        split(p, &|_| false, true).expect("canonical split never fails")
    }

    /// Folds the tree back into a poset.
    pub fn evaluate(&self) -> Poset {
        match self {
            DecompositionTree::Leaf(p) => p.clone(),
            DecompositionTree::OrdinalSum(ch) => fold(ch, Poset::ordinal_sum),
            DecompositionTree::DisjointUnion(ch) => fold(ch, Poset::disjoint_union),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            DecompositionTree::Leaf(p) => p.len(),
            DecompositionTree::OrdinalSum(ch) | DecompositionTree::DisjointUnion(ch) => {
                ch.iter().map(DecompositionTree::size).sum()
            }
        }
    }

    pub fn leaves(&self) -> Vec<&Poset> {
        match self {
            DecompositionTree::Leaf(p) => vec![p],
            DecompositionTree::OrdinalSum(ch) | DecompositionTree::DisjointUnion(ch) => {
                ch.iter().flat_map(DecompositionTree::leaves).collect()
            }
        }
    }

    /// Rewrites every n-ary node as nested binary nodes associated to the
    /// right: `[a, b, c]` becomes `[a, [b, c]]`.
    pub fn right_nested(&self) -> DecompositionTree {
        self.rebinarize(true)
    }

    /// Rewrites every n-ary node as nested binary nodes associated to the
    /// left: `[a, b, c]` becomes `[[a, b], c]`.
    pub fn left_nested(&self) -> DecompositionTree {
        self.rebinarize(false)
    }

    fn rebinarize(&self, right: bool) -> DecompositionTree {
        let build = |ch: &[DecompositionTree], wrap: fn(Vec<DecompositionTree>) -> DecompositionTree| {
            let mut ch: Vec<DecompositionTree> = ch.iter().map(|c| c.rebinarize(right)).collect();
            if right {
                let mut acc = ch.pop().expect("nonempty node");
                while let Some(c) = ch.pop() {
                    acc = wrap(vec![c, acc]);
                }
                acc
            } else {
                let mut it = ch.into_iter();
                let mut acc = it.next().expect("nonempty node");
                for c in it {
                    acc = wrap(vec![acc, c]);
                }
                acc
            }
        };
        match self {
            DecompositionTree::Leaf(p) => DecompositionTree::Leaf(p.clone()),
            DecompositionTree::OrdinalSum(ch) => build(ch, DecompositionTree::OrdinalSum),
            DecompositionTree::DisjointUnion(ch) => build(ch, DecompositionTree::DisjointUnion),
        }
    }

    /// Compact rendering such as `({a,b} < {c} < {d,e})`; leaves that are
    /// not X-free carry a trailing `!`.
    pub fn render(&self) -> String {
        match self {
            DecompositionTree::Leaf(p) => {
                let mut s = p.labels().join(",");
                if p.is_x_free() {
                    s = format!("{{{s}}}");
                } else {
                    s = format!("{{{s}}}!");
                }
                s
            }
            DecompositionTree::OrdinalSum(ch) => format!(
                "({})",
                ch.iter().map(|c| c.render()).collect::<Vec<_>>().join(" < ")
            ),
            DecompositionTree::DisjointUnion(ch) => format!(
                "[{}]",
                ch.iter().map(|c| c.render()).collect::<Vec<_>>().join(" + ")
            ),
        }
    }
}

fn fold(ch: &[DecompositionTree], op: fn(&Poset, &Poset) -> Poset) -> Poset {
    let mut it = ch.iter();
    let first = it.next().map(|c| c.evaluate()).unwrap_or_else(Poset::empty);
    it.fold(first, |acc, c| op(&acc, &c.evaluate()))
}

/// Splits until `stop` accepts a part. Indecomposable parts that `stop`
/// rejects become leaves when `keep_indecomposable` is set; otherwise the
/// whole split fails with `None`.
fn split(
    p: &Poset,
    stop: &dyn Fn(&Poset) -> bool,
    keep_indecomposable: bool,
) -> Option<DecompositionTree> {
    if p.len() <= 1 || stop(p) {
        return Some(DecompositionTree::Leaf(p.clone()));
    }
    let comps = p.components();
    if comps.len() > 1 {
        let ch = comps
            .iter()
            .map(|&c| split(&p.induced_subposet(c), stop, keep_indecomposable))
            .collect::<Option<Vec<_>>>()?;
        return Some(DecompositionTree::DisjointUnion(ch));
    }
    let blocks = p.ordinal_cuts().blocks;
    if blocks.len() > 1 {
        let ch = blocks
            .iter()
            .map(|&b| split(&p.induced_subposet(b), stop, keep_indecomposable))
            .collect::<Option<Vec<_>>>()?;
        return Some(DecompositionTree::OrdinalSum(ch));
    }
    keep_indecomposable.then(|| DecompositionTree::Leaf(p.clone()))
}

/// Decides membership in the family generated from X-free posets by
/// ordinal sums and disjoint unions, relative to the canonical splits.
///
/// X-free parts become leaves. Other parts are split by comparability
/// components or, when connected, by the finest ordinal decomposition. A
/// part that is not X-free and admits neither split yields `None`.
pub fn in_family(p: &Poset) -> Option<DecompositionTree> {
    split(p, &Poset::is_x_free, false)
}
