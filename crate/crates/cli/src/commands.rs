use anyhow::Result;
use serde_json::{json, Value};

use posetpoly::corpus::corpus;
use posetpoly::fcalc::{recursive_split, verify_main_theorem, Method};
use posetpoly::polytope::{facet_count_chain, facet_count_order, Kind, PosetPolytope};
use posetpoly::{in_family, DecompositionTree, FPoly, Poset};

use crate::cache::{self, Cache};
use crate::csv::Table;
use crate::input::{self, Input};
use crate::{suites, Command, Format, KindArg, MethodArg, Options, What};

pub struct Output {
    pub text: String,
    pub exit: u8,
}

impl Output {
    pub fn ok(text: String) -> Output {
        Output { text, exit: 0 }
    }
}

/// Indented JSON with arrays of scalars kept on one line.
pub fn pretty(v: &Value) -> String {
    let mut s = String::new();
    write_json(v, 0, &mut s);
    s.push('\n');
    s
}

fn write_json(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (i, (k, val)) in m.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_json(val, depth + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(a) if a.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_json(x, depth + 1, out);
                out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Array(a) => {
            let items: Vec<String> = a.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&items.join(", "));
            out.push(']');
        }
        _ => out.push_str(&v.to_string()),
    }
}

pub fn method(opts: &Options) -> Method {
    match opts.method {
        MethodArg::Brute => Method::Brute,
        MethodArg::Recursive => Method::Recursive,
    }
}

fn kind(opts: &Options) -> Kind {
    match opts.kind {
        KindArg::Order => Kind::Order,
        KindArg::Chain => Kind::Chain,
    }
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Order => "order",
        Kind::Chain => "chain",
    }
}

fn command_name(cmd: &Command) -> String {
    match cmd {
        Command::Describe => "describe".into(),
        Command::Fvector => "fvector".into(),
        Command::Compare => "compare".into(),
        Command::Verify { suite } => format!("verify:{suite:?}"),
        Command::Decompose => "decompose".into(),
        Command::Corpus => "corpus".into(),
        Command::Export { what } => format!("export:{what:?}"),
    }
}

fn needs_poset(cmd: &Command) -> bool {
    !matches!(cmd, Command::Verify { .. } | Command::Corpus)
}

fn cache_key(cmd: &Command, opts: &Options, input: Option<&Input>) -> String {
    let settings = format!(
        "{:?}/{:?}/{:?}/{}/{}/{}",
        opts.format, opts.kind, opts.method, opts.max_brute, opts.seed, opts.corpus_size
    );
    let (poset, tree) = match input {
        Some(i) => (i.poset.to_json(), i.tree.render()),
        None => (String::new(), String::new()),
    };
    cache::key(&[&command_name(cmd), &settings, &poset, &tree])
}

pub fn run(cmd: &Command, opts: &Options) -> Result<Output> {
    let input = if needs_poset(cmd) { Some(input::load(opts)?) } else { None };
    let store = opts.cache.as_deref().map(Cache::new);
    let key = cache_key(cmd, opts, input.as_ref());
    if let Some(hit) = store.as_ref().and_then(|c| c.get(&key)) {
        return Ok(Output {
            text: hit.text,
            exit: hit.exit,
        });
    }
    let out = match (cmd, &input) {
        (Command::Describe, Some(i)) => describe(i, opts),
        (Command::Fvector, Some(i)) => fvector(i, opts)?,
        (Command::Compare, Some(i)) => compare(i, opts)?,
        (Command::Decompose, Some(i)) => decompose(i, opts),
        (Command::Export { what }, Some(i)) => export(i, *what, opts)?,
        (Command::Verify { suite }, _) => suites::run(*suite, opts)?,
        (Command::Corpus, _) => corpus_cmd(opts),
        (_, None) => unreachable!("poset commands load their input"),
    };
    if let Some(c) = &store {
        c.put(
            &key,
            &cache::Entry {
                exit: out.exit,
                text: out.text.clone(),
            },
        )?;
    }
    Ok(out)
}

fn describe(i: &Input, opts: &Options) -> Output {
    let p = &i.poset;
    let filters = p.filters().len();
    let antichains = p.antichains().len();
    let rows: Vec<(&str, Value)> = vec![
        ("elements", json!(p.len())),
        ("covers", json!(p.covers().len())),
        ("minimal", json!(p.minimal().count_ones())),
        ("maximal", json!(p.maximal().count_ones())),
        ("filters", json!(filters)),
        ("antichains", json!(antichains)),
        ("maximal_chains", json!(p.maximal_chains().len())),
        ("x_free", json!(p.is_x_free())),
        ("in_family", json!(in_family(p).is_some())),
        ("facets_order", json!(facet_count_order(p))),
        ("facets_chain", json!(facet_count_chain(p))),
    ];
    let text = match opts.format {
        Format::Json => {
            let mut v = json!({ "poset": p.to_json_value() });
            for (k, val) in rows {
                v[k] = val;
            }
            v["vertices_order"] = json!(filters);
            v["vertices_chain"] = json!(antichains);
            pretty(&v)
        }
        Format::Csv => {
            let mut t = Table::new(&["key", "value"]);
            for (k, val) in rows {
                t.row(&[k.to_string(), val.to_string()]);
            }
            t.finish()
        }
    };
    Output::ok(text)
}

fn f_vector(i: &Input, k: Kind, opts: &Options) -> Result<FPoly> {
    Ok(match method(opts) {
        Method::Brute => PosetPolytope::new(&i.poset, k).f_polynomial()?,
        Method::Recursive => {
            let s = recursive_split(&i.tree, opts.max_brute)?;
            match k {
                Kind::Order => s.order.total(),
                Kind::Chain => s.chain.total(),
            }
        }
    })
}

fn fvector(i: &Input, opts: &Options) -> Result<Output> {
    let k = kind(opts);
    let f = f_vector(i, k, opts)?;
    let text = match opts.format {
        Format::Json => pretty(&json!({
            "poset": i.poset.to_json_value(),
            "kind": kind_name(k),
            "method": method(opts).as_str(),
            "f": f.coeffs(),
        })),
        Format::Csv => {
            let mut t = Table::new(&["kind", "method", "dim", "count"]);
            for (d, c) in f.coeffs().iter().enumerate() {
                t.row(&[
                    kind_name(k).to_string(),
                    method(opts).as_str().to_string(),
                    (d as i64 - 1).to_string(),
                    c.to_string(),
                ]);
            }
            t.finish()
        }
    };
    Ok(Output::ok(text))
}

fn compare(i: &Input, opts: &Options) -> Result<Output> {
    let mut r = verify_main_theorem(&i.tree, method(opts), opts.max_brute)?;
    r.poset = i.poset.clone();
    let exit = if r.leq { 0 } else { 1 };
    let text = match opts.format {
        Format::Json => {
            let mut v = r.to_json();
            v["facets"] = json!({
                "order": facet_count_order(&i.poset),
                "chain": facet_count_chain(&i.poset),
            });
            pretty(&v)
        }
        Format::Csv => {
            let mut t = Table::new(&["dim", "fO", "fC", "slack"]);
            for (d, s) in r.slack.iter().enumerate() {
                t.row(&[
                    (d as i64 - 1).to_string(),
                    r.f_order.coeff(d).to_string(),
                    r.f_chain.coeff(d).to_string(),
                    s.to_string(),
                ]);
            }
            t.finish()
        }
    };
    Ok(Output { text, exit })
}

fn structure(t: &DecompositionTree) -> Value {
    match t {
        DecompositionTree::Leaf(p) => json!({ "leaf": p.labels() }),
        DecompositionTree::OrdinalSum(ch) => json!({ "ordinal_sum": ch.iter().map(structure).collect::<Vec<_>>() }),
        DecompositionTree::DisjointUnion(ch) => {
            json!({ "disjoint_union": ch.iter().map(structure).collect::<Vec<_>>() })
        }
    }
}

fn decompose(i: &Input, opts: &Options) -> Output {
    let tree = in_family(&i.poset);
    let exit = if tree.is_some() { 0 } else { 1 };
    let text = match (opts.format, &tree) {
        (Format::Json, Some(t)) => pretty(&json!({
            "poset": i.poset.to_json_value(),
            "in_family": true,
            "tree": t.render(),
            "structure": structure(t),
        })),
        (Format::Json, None) => pretty(&json!({
            "poset": i.poset.to_json_value(),
            "in_family": false,
            "error": "NotInFamily",
        })),
        (Format::Csv, t) => {
            let mut tb = Table::new(&["in_family", "tree"]);
            match t {
                Some(t) => tb.row(&["true".to_string(), t.render()]),
                None => tb.row(&["false", "NotInFamily"]),
            }
            tb.finish()
        }
    };
    Output { text, exit }
}

fn corpus_cmd(opts: &Options) -> Output {
    let entries = corpus(opts.corpus_size, opts.seed);
    let text = match opts.format {
        Format::Json => {
            let mut s = String::new();
            for e in &entries {
                let line = json!({ "name": e.name, "poset": e.poset.to_json_value() });
                s.push_str(&line.to_string());
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut t = Table::new(&["name", "elements", "covers", "x_free", "in_family"]);
            for e in &entries {
                t.row(&[
                    e.name.clone(),
                    e.poset.len().to_string(),
                    e.poset.covers().len().to_string(),
                    e.poset.is_x_free().to_string(),
                    in_family(&e.poset).is_some().to_string(),
                ]);
            }
            t.finish()
        }
    };
    Output::ok(text)
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn export(i: &Input, what: What, opts: &Options) -> Result<Output> {
    let k = kind(opts);
    let poly = PosetPolytope::new(&i.poset, k);
    let n = poly.dim();
    let text = match (what, opts.format) {
        (What::Vrep, Format::Json) => pretty(&json!({
            "kind": kind_name(k),
            "coordinates": i.poset.labels(),
            "vertices": poly.vrep.vertices,
        })),
        (What::Vrep, Format::Csv) => {
            let mut t = Table::new(&numbered("x", n).iter().map(String::as_str).collect::<Vec<_>>());
            for v in &poly.vrep.vertices {
                t.row(v);
            }
            t.finish()
        }
        (What::Hrep, Format::Json) => pretty(&json!({
            "kind": kind_name(k),
            "coordinates": i.poset.labels(),
            "rows": poly.hrep.rows.iter().map(|r| r.to_array()).collect::<Vec<_>>(),
        })),
        (What::Hrep, Format::Csv) => {
            let mut header = numbered("a", n);
            header.push("b".into());
            let mut t = Table::new(&header.iter().map(String::as_str).collect::<Vec<_>>());
            for r in &poly.hrep.rows {
                t.row(&r.to_array());
            }
            t.finish()
        }
        (What::Faces, Format::Json) => poly.faces()?.to_json_lines(),
        (What::Faces, Format::Csv) => {
            let mut t = Table::new(&["dim", "vertices"]);
            for f in poly.faces()?.faces() {
                let vs: Vec<String> = f.vertices.iter().map(|v| v.to_string()).collect();
                t.row(&[f.dim.to_string(), vs.join(" ")]);
            }
            t.finish()
        }
    };
    Ok(Output::ok(text))
}

/// Short stable identifier for a poset.
pub fn poset_hash(p: &Poset) -> String {
    cache::key(&[&p.to_json()])[..16].to_string()
}
