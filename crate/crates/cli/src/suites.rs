//! Property suites run over the seeded corpus.

use anyhow::Result;
use rayon::prelude::*;
use serde_json::{json, Value};

use posetpoly::corpus::{corpus, Entry};
use posetpoly::face::f_split_at;
use posetpoly::fcalc::{
    brute_splits, check_lemma_abcd, check_pyr_vs_join, check_simplex_vertex_figure, fp_product,
    fp_subdirect, verify_main_theorem, Quad,
};
use posetpoly::polytope::{chain_polytope, facet_count_chain, facet_count_order, order_polytope};
use posetpoly::subdirect::{ordinal_chain_identity, ordinal_order_identity};
use posetpoly::{in_family, Poset};

use crate::commands::{method, poset_hash, pretty, Output};
use crate::csv::Table;
use crate::{Format, Options, Suite};

/// Outcome on one corpus item. `None` verdicts are skipped items.
struct Case {
    name: String,
    hash: String,
    posets: Vec<Poset>,
    verdict: Option<bool>,
    detail: Value,
}

type Check = (Option<bool>, Value);

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Edges => "edges",
        Suite::HibiLiFacets => "hibi-li-facets",
        Suite::OriginEstimate => "origin-estimate",
        Suite::SimplexFigure => "simplex-figure",
        Suite::PyrJoin => "pyr-join",
        Suite::LemmaAbcd => "lemma-abcd",
        Suite::OrdinalIdentities => "ordinal-identities",
        Suite::MainTheorem => "main-theorem",
    }
}

fn single(e: &Entry, check: impl Fn(&Poset) -> Result<Check>) -> Result<Case> {
    let (verdict, detail) = check(&e.poset)?;
    Ok(Case {
        name: e.name.clone(),
        hash: poset_hash(&e.poset),
        posets: vec![e.poset.clone()],
        verdict,
        detail,
    })
}

fn paired(a: &Entry, b: &Entry, check: impl Fn(&Poset, &Poset) -> Result<Check>) -> Result<Case> {
    let (verdict, detail) = check(&a.poset, &b.poset)?;
    Ok(Case {
        name: format!("{} | {}", a.name, b.name),
        hash: format!("{}{}", poset_hash(&a.poset), poset_hash(&b.poset)),
        posets: vec![a.poset.clone(), b.poset.clone()],
        verdict,
        detail,
    })
}

fn edges(p: &Poset) -> Result<Check> {
    let fo = order_polytope(p).f_polynomial()?;
    let fc = chain_polytope(p).f_polynomial()?;
    let (eo, ec) = (fo.coeff(2), fc.coeff(2));
    Ok((Some(eo == ec), json!({ "edges_order": eo, "edges_chain": ec })))
}

fn facets(p: &Poset) -> Result<Check> {
    let (o, c) = (facet_count_order(p), facet_count_chain(p));
    let x_free = p.is_x_free();
    let ok = c >= o && (c == o) == x_free;
    Ok((Some(ok), json!({ "facets_order": o, "facets_chain": c, "x_free": x_free })))
}

fn origin_estimate(p: &Poset) -> Result<Check> {
    for (name, poly) in [("order", order_polytope(p)), ("chain", chain_polytope(p))] {
        let fs = poly.faces()?;
        for v in 0..fs.vertex_count() {
            let (f0, f1) = f_split_at(&fs, v)?;
            if !f0.leq(&f1.shift_up()) {
                let d = json!({ "polytope": name, "vertex": v, "f0": f0.coeffs(), "f1": f1.coeffs() });
                return Ok((Some(false), d));
            }
        }
    }
    Ok((Some(true), Value::Null))
}

fn simplex_figure(p: &Poset) -> Result<Check> {
    Ok((Some(check_simplex_vertex_figure(p)?), json!({ "elements": p.len() })))
}

fn lemma(p: &Poset) -> Result<Check> {
    let s = brute_splits(p)?;
    if !s.order.total().leq(&s.chain.total()) {
        return Ok((None, json!({ "reason": "fO not <= fC" })));
    }
    let q = Quad::from_splits(&s)?;
    let l = check_lemma_abcd(&q);
    Ok((Some(l.holds()), json!({ "part1": l.part1, "part2": l.part2, "quad": q })))
}

fn main_theorem(p: &Poset, opts: &Options) -> Result<Check> {
    let Some(tree) = in_family(p) else {
        return Ok((None, json!({ "reason": "not in family" })));
    };
    let r = verify_main_theorem(&tree, method(opts), opts.max_brute)?;
    let equal_when_x_free = !p.is_x_free() || r.f_order == r.f_chain;
    Ok((Some(r.leq && equal_when_x_free), r.to_json()))
}

fn pyr_join(a: &Poset, b: &Poset) -> Result<Check> {
    let combos = [
        ("order", order_polytope(a), "order", order_polytope(b)),
        ("chain", chain_polytope(a), "chain", chain_polytope(b)),
        ("order", order_polytope(a), "chain", chain_polytope(b)),
    ];
    for (na, pa, nb, pb) in combos {
        let r = check_pyr_vs_join(&pa.faces()?, pa.bottom, &pb.faces()?, pb.bottom)?;
        if !r.holds {
            return Ok((Some(false), json!({ "left": na, "right": nb, "detail": r })));
        }
    }
    Ok((Some(true), Value::Null))
}

fn ordinal_identities(a: &Poset, b: &Poset) -> Result<Check> {
    let split = |poly: &posetpoly::polytope::PosetPolytope| -> Result<_> { Ok(f_split_at(&poly.faces()?, poly.bottom)?) };
    let (ca, cb) = (chain_polytope(a), chain_polytope(b));
    let (oa, ob) = (order_polytope(a), order_polytope(&b.opposite()));
    let ((c0a, c1a), (c0b, c1b)) = (split(&ca)?, split(&cb)?);
    let ((o0a, o1a), (o0b, o1b)) = (split(&oa)?, split(&ob)?);
    let sum = a.ordinal_sum(b);
    let union = a.disjoint_union(b);
    let checks = [
        ("chain vertex identity", ordinal_chain_identity(a, b)),
        ("order vertex identity", ordinal_order_identity(a, b)),
        (
            "chain ordinal sum formula",
            fp_subdirect(&c0a, &c1a, &c0b, &c1b)? == chain_polytope(&sum).f_polynomial()?,
        ),
        (
            "order ordinal sum formula",
            fp_subdirect(&o0a, &o1a, &o0b, &o1b)? == order_polytope(&sum).f_polynomial()?,
        ),
        (
            "order product formula",
            fp_product(&oa.f_polynomial()?, &order_polytope(b).f_polynomial()?)?
                == order_polytope(&union).f_polynomial()?,
        ),
        (
            "chain product formula",
            fp_product(&(&c0a + &c1a), &(&c0b + &c1b))? == chain_polytope(&union).f_polynomial()?,
        ),
    ];
    match checks.iter().find(|(_, ok)| !ok) {
        Some((name, _)) => Ok((Some(false), json!({ "failed": name }))),
        None => Ok((Some(true), Value::Null)),
    }
}

fn consecutive(entries: &[Entry], keep: impl Fn(&Poset) -> bool, max_total: usize) -> Vec<(&Entry, &Entry)> {
    let small: Vec<&Entry> = entries.iter().filter(|e| keep(&e.poset)).collect();
    small
        .windows(2)
        .map(|w| (w[0], w[1]))
        .filter(|(a, b)| a.poset.len() + b.poset.len() <= max_total)
        .collect()
}

pub fn run(suite: Suite, opts: &Options) -> Result<Output> {
    let entries = corpus(opts.corpus_size, opts.seed);
    let nonempty = |p: &Poset| !p.is_empty();
    let cases: Result<Vec<Case>> = match suite {
        Suite::Edges => entries.par_iter().map(|e| single(e, edges)).collect(),
        Suite::HibiLiFacets => entries.par_iter().map(|e| single(e, facets)).collect(),
        Suite::OriginEstimate => entries.par_iter().map(|e| single(e, origin_estimate)).collect(),
        Suite::SimplexFigure => entries.par_iter().map(|e| single(e, simplex_figure)).collect(),
        Suite::LemmaAbcd => entries.par_iter().map(|e| single(e, lemma)).collect(),
        Suite::MainTheorem => entries
            .par_iter()
            .map(|e| single(e, |p| main_theorem(p, opts)))
            .collect(),
        Suite::PyrJoin => consecutive(&entries, |p| nonempty(p) && p.len() <= 5, 10)
            .par_iter()
            .map(|(a, b)| paired(a, b, pyr_join))
            .collect(),
        Suite::OrdinalIdentities => consecutive(&entries, nonempty, 8)
            .par_iter()
            .map(|(a, b)| paired(a, b, ordinal_identities))
            .collect(),
    };
    let mut cases = cases?;
    cases.sort_by(|a, b| (&a.hash, &a.name).cmp(&(&b.hash, &b.name)));

    let skipped = cases.iter().filter(|c| c.verdict.is_none()).count();
    let failed: Vec<&Case> = cases.iter().filter(|c| c.verdict == Some(false)).collect();
    let exit = if failed.is_empty() { 0 } else { 1 };
    let text = match opts.format {
        Format::Json => {
            let first = failed.first().map(|c| {
                json!({
                    "name": c.name,
                    "posets": c.posets.iter().map(Poset::to_json_value).collect::<Vec<_>>(),
                    "detail": c.detail,
                })
            });
            pretty(&json!({
                "suite": suite_name(suite),
                "seed": opts.seed,
                "corpus_size": opts.corpus_size,
                "checked": cases.len() - skipped,
                "skipped": skipped,
                "failed": failed.len(),
                "passed": failed.is_empty(),
                "first_counterexample": first,
            }))
        }
        Format::Csv => {
            let mut t = Table::new(&["suite", "name", "hash", "status"]);
            for c in &cases {
                let status = match c.verdict {
                    Some(true) => "pass",
                    Some(false) => "fail",
                    None => "skip",
                };
                t.row(&[suite_name(suite), &c.name, &c.hash, status]);
            }
            t.finish()
        }
    };
    Ok(Output { text, exit })
}
