//! A small expression language for posets.
//!
//! ```text
//! program := {"let" IDENT "=" expr ";"} expr
//! expr    := term {"<" term}
//! term    := atom {"+" atom}
//! atom    := "chain(" INT ")" | "antichain(" INT ")" | "op(" expr ")"
//!          | IDENT | "(" expr ")" | "{" LABELS ";" COVERS "}"
//! ```
//!
//! `<` is the ordinal sum and `+` the disjoint union; both are
//! left-associative and `+` binds tighter. A literal lists its labels and
//! then relations `a<b` separated by commas, e.g. `{a, b, c; a<c, b<c}`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poset::{DecompositionTree, Poset, MAX_ELEMENTS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetExpr {
    Chain(usize),
    Antichain(usize),
    Op(Box<PosetExpr>),
    OrdinalSum(Box<PosetExpr>, Box<PosetExpr>),
    DisjointUnion(Box<PosetExpr>, Box<PosetExpr>),
    Literal {
        labels: Vec<String>,
        covers: Vec<(String, String)>,
    },
    Ref(String),
}

/// Let bindings followed by a body expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    pub bindings: Vec<(String, PosetExpr)>,
    pub body: PosetExpr,
}

pub fn parse(src: &str) -> Result<Program> {
    let mut p = Parser::new(src);
    let prog = p.program()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected '{c}' after expression")));
    }
    Ok(prog)
}

/// Parses and evaluates in one step.
pub fn eval_str(src: &str) -> Result<Poset> {
    parse(src)?.eval()
}

impl Program {
    /// Evaluates the body with bindings inlined, so every use of a binding
    /// contributes fresh elements.
    pub fn eval(&self) -> Result<Poset> {
        self.inlined().eval()
    }

    /// Decomposition tree following the shape of the expression.
    pub fn tree(&self) -> Result<DecompositionTree> {
        let env: HashMap<&str, &PosetExpr> = self.bindings.iter().map(|(n, e)| (n.as_str(), e)).collect();
        self.body.tree(&env, false)
    }

    /// The body with every reference replaced by its definition.
    pub fn inlined(&self) -> PosetExpr {
        let mut env: HashMap<&str, PosetExpr> = HashMap::new();
        for (name, e) in &self.bindings {
            let e = e.substitute(&env);
            env.insert(name, e);
        }
        self.body.substitute(&env)
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, e) in &self.bindings {
            writeln!(f, "let {name} = {e};")?;
        }
        write!(f, "{}", self.body)
    }
}

fn combine(a: &Poset, b: &Poset, ordinal: bool) -> Result<Poset> {
    if a.len() + b.len() > MAX_ELEMENTS {
        return Err(Error::TooManyElements(a.len() + b.len()));
    }
    Ok(if ordinal { a.ordinal_sum(b) } else { a.disjoint_union(b) })
}

fn sized(n: usize) -> Result<usize> {
    if n > MAX_ELEMENTS {
        Err(Error::TooManyElements(n))
    } else {
        Ok(n)
    }
}

impl PosetExpr {
    pub fn ordinal(a: PosetExpr, b: PosetExpr) -> PosetExpr {
        PosetExpr::OrdinalSum(Box::new(a), Box::new(b))
    }

    pub fn union(a: PosetExpr, b: PosetExpr) -> PosetExpr {
        PosetExpr::DisjointUnion(Box::new(a), Box::new(b))
    }

    pub fn op(a: PosetExpr) -> PosetExpr {
        PosetExpr::Op(Box::new(a))
    }

    /// Evaluates a closed expression. Elements of `chain` and `antichain`
    /// atoms are labelled `0, 1, 2, ...` from left to right; literals keep
    /// their labels, and clashing labels are namespaced by the sum.
    pub fn eval(&self) -> Result<Poset> {
        self.eval_numbered(&mut 0)
    }

    fn eval_numbered(&self, next: &mut usize) -> Result<Poset> {
        let mut atom = |n: usize, chain: bool| -> Result<Poset> {
            let labels = (*next..*next + sized(n)?).map(|i| i.to_string()).collect();
            *next += n;
            let rel: Vec<_> = if chain { (1..n).map(|i| (i - 1, i)).collect() } else { Vec::new() };
            Poset::from_index_relations(labels, &rel)
        };
        match self {
            PosetExpr::Chain(n) => atom(*n, true),
            PosetExpr::Antichain(n) => atom(*n, false),
            PosetExpr::Op(e) => Ok(e.eval_numbered(next)?.opposite()),
            PosetExpr::OrdinalSum(a, b) => {
                let a = a.eval_numbered(next)?;
                combine(&a, &b.eval_numbered(next)?, true)
            }
            PosetExpr::DisjointUnion(a, b) => {
                let a = a.eval_numbered(next)?;
                combine(&a, &b.eval_numbered(next)?, false)
            }
            PosetExpr::Literal { labels, covers } => {
                sized(labels.len())?;
                let rel: Vec<(&str, &str)> = covers.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
                let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
                Poset::from_covers(&labels, &rel)
            }
            PosetExpr::Ref(name) => Err(Error::UnboundRef {
                name: name.clone(),
                line: 0,
                column: 0,
            }),
        }
    }

    /// Element count without building the poset.
    pub fn size(&self) -> usize {
        match self {
            PosetExpr::Chain(n) | PosetExpr::Antichain(n) => *n,
            PosetExpr::Op(e) => e.size(),
            PosetExpr::OrdinalSum(a, b) | PosetExpr::DisjointUnion(a, b) => a.size() + b.size(),
            PosetExpr::Literal { labels, .. } => labels.len(),
            PosetExpr::Ref(_) => 0,
        }
    }

    fn substitute(&self, env: &HashMap<&str, PosetExpr>) -> PosetExpr {
        match self {
            PosetExpr::Ref(n) => env.get(n.as_str()).cloned().unwrap_or_else(|| self.clone()),
            PosetExpr::Op(e) => PosetExpr::op(e.substitute(env)),
            PosetExpr::OrdinalSum(a, b) => PosetExpr::ordinal(a.substitute(env), b.substitute(env)),
            PosetExpr::DisjointUnion(a, b) => PosetExpr::union(a.substitute(env), b.substitute(env)),
            _ => self.clone(),
        }
    }

    /// `op` is pushed down to the leaves; chains and antichains become sums
    /// of single points.
    fn tree(&self, env: &HashMap<&str, &PosetExpr>, flip: bool) -> Result<DecompositionTree> {
        let point = || DecompositionTree::Leaf(Poset::chain(1));
        Ok(match self {
            PosetExpr::Chain(0) | PosetExpr::Antichain(0) => DecompositionTree::Leaf(Poset::empty()),
            PosetExpr::Chain(1) | PosetExpr::Antichain(1) => point(),
            PosetExpr::Chain(n) => DecompositionTree::OrdinalSum((0..sized(*n)?).map(|_| point()).collect()),
            PosetExpr::Antichain(n) => DecompositionTree::DisjointUnion((0..sized(*n)?).map(|_| point()).collect()),
            PosetExpr::Op(e) => e.tree(env, !flip)?,
            PosetExpr::OrdinalSum(a, b) => {
                let (a, b) = (a.tree(env, flip)?, b.tree(env, flip)?);
                if flip {
                    DecompositionTree::OrdinalSum(vec![b, a])
                } else {
                    DecompositionTree::OrdinalSum(vec![a, b])
                }
            }
            PosetExpr::DisjointUnion(a, b) => DecompositionTree::DisjointUnion(vec![a.tree(env, flip)?, b.tree(env, flip)?]),
            PosetExpr::Literal { .. } => {
                let p = self.eval()?;
                DecompositionTree::Leaf(if flip { p.opposite() } else { p })
            }
            PosetExpr::Ref(name) => match env.get(name.as_str()) {
                Some(e) => e.tree(env, flip)?,
                None => {
                    return Err(Error::UnboundRef {
                        name: name.clone(),
                        line: 0,
                        column: 0,
                    })
                }
            },
        })
    }

    fn write_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        // 0: any context, 1: operand of `+`, 2: right operand of `+` or `<`
        match self {
            PosetExpr::OrdinalSum(a, b) => {
                let paren = prec >= 1;
                if paren {
                    f.write_str("(")?;
                }
                a.write_prec(f, 0)?;
                f.write_str(" < ")?;
                b.write_prec(f, 2)?;
                if paren {
                    f.write_str(")")?;
                }
                Ok(())
            }
            PosetExpr::DisjointUnion(a, b) => {
                let paren = prec >= 2;
                if paren {
                    f.write_str("(")?;
                }
                a.write_prec(f, 1)?;
                f.write_str(" + ")?;
                b.write_prec(f, 2)?;
                if paren {
                    f.write_str(")")?;
                }
                Ok(())
            }
            PosetExpr::Chain(n) => write!(f, "chain({n})"),
            PosetExpr::Antichain(n) => write!(f, "antichain({n})"),
            PosetExpr::Op(e) => write!(f, "op({e})"),
            PosetExpr::Ref(n) => f.write_str(n),
            PosetExpr::Literal { labels, covers } => {
                write!(f, "{{{}; ", labels.join(", "))?;
                let rel: Vec<String> = covers.iter().map(|(a, b)| format!("{a}<{b}")).collect();
                write!(f, "{}}}", rel.join(", "))
            }
        }
    }
}

impl fmt::Display for PosetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_prec(f, 0)
    }
}

/// `p` written as a literal.
pub fn literal_of(p: &Poset) -> PosetExpr {
    PosetExpr::Literal {
        labels: p.labels().to_vec(),
        covers: p
            .covers()
            .iter()
            .map(|&(a, b)| (p.labels()[a].clone(), p.labels()[b].clone()))
            .collect(),
    }
}

const KEYWORDS: [&str; 4] = ["let", "chain", "antichain", "op"];

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
    bound: Vec<String>,
}

impl Parser {
    fn new(src: &str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            line: 1,
            col: 1,
            bound: Vec::new(),
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.col,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(match self.peek() {
                Some(got) => self.error(format!("expected '{c}', found '{got}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            })
        }
    }

    fn word(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_' || c == '.') {
            self.bump();
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    /// Looks at the next word without consuming it.
    fn peek_word(&self) -> String {
        let mut i = self.pos;
        while self.chars.get(i).is_some_and(|c| c.is_whitespace()) {
            i += 1;
        }
        let start = i;
        while self.chars.get(i).is_some_and(|c| c.is_alphanumeric() || *c == '_') {
            i += 1;
        }
        self.chars[start..i].iter().collect()
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        self.skip_ws();
        let (line, col) = (self.line, self.col);
        match self.word() {
            Some(w) if is_ident(&w) && !KEYWORDS.contains(&w.as_str()) => Ok(w),
            Some(w) => Err(Error::Parse {
                line,
                column: col,
                message: format!("expected {what}, found '{w}'"),
            }),
            None => Err(self.error(format!("expected {what}"))),
        }
    }

    fn program(&mut self) -> Result<Program> {
        let mut bindings = Vec::new();
        while self.peek_word() == "let" {
            self.word();
            let name = self.ident("a name")?;
            self.expect('=')?;
            let e = self.expr()?;
            self.expect(';')?;
            self.bound.push(name.clone());
            bindings.push((name, e));
        }
        let body = self.expr()?;
        Ok(Program { bindings, body })
    }

    fn expr(&mut self) -> Result<PosetExpr> {
        let mut e = self.term()?;
        while self.eat('<') {
            e = PosetExpr::ordinal(e, self.term()?);
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<PosetExpr> {
        let mut e = self.atom()?;
        while self.eat('+') {
            e = PosetExpr::union(e, self.atom()?);
        }
        Ok(e)
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        if s.is_empty() {
            return Err(self.error("expected an integer"));
        }
        s.parse().map_err(|_| self.error(format!("integer '{s}' out of range")))
    }

    fn atom(&mut self) -> Result<PosetExpr> {
        self.skip_ws();
        let (line, column) = (self.line, self.col);
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('{') => {
                self.bump();
                self.literal()
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let w = self.word().expect("alphabetic start");
                match w.as_str() {
                    "chain" | "antichain" => {
                        self.expect('(')?;
                        let n = self.int()?;
                        self.expect(')')?;
                        Ok(if w == "chain" {
                            PosetExpr::Chain(n)
                        } else {
                            PosetExpr::Antichain(n)
                        })
                    }
                    "op" => {
                        self.expect('(')?;
                        let e = self.expr()?;
                        self.expect(')')?;
                        Ok(PosetExpr::op(e))
                    }
                    "let" => Err(Error::Parse {
                        line,
                        column,
                        message: "'let' must precede the expression".into(),
                    }),
                    _ if !is_ident(&w) => Err(Error::Parse {
                        line,
                        column,
                        message: format!("invalid name '{w}'"),
                    }),
                    _ if self.bound.contains(&w) => Ok(PosetExpr::Ref(w)),
                    _ => Err(Error::UnboundRef { name: w, line, column }),
                }
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn label(&mut self) -> Result<String> {
        self.skip_ws();
        match self.word() {
            Some(w) => Ok(w),
            None => Err(match self.peek() {
                Some(c) => self.error(format!("expected a label, found '{c}'")),
                None => self.error("expected a label"),
            }),
        }
    }

    fn literal(&mut self) -> Result<PosetExpr> {
        let mut labels = Vec::new();
        self.skip_ws();
        if self.peek() != Some(';') {
            loop {
                labels.push(self.label()?);
                if !self.eat(',') {
                    break;
                }
            }
        }
        self.expect(';')?;
        let mut covers = Vec::new();
        self.skip_ws();
        if self.peek() != Some('}') {
            loop {
                let a = self.label()?;
                self.expect('<')?;
                let b = self.label()?;
                covers.push((a, b));
                if !self.eat(',') {
                    break;
                }
            }
        }
        self.expect('}')?;
        Ok(PosetExpr::Literal { labels, covers })
    }
}

fn is_ident(w: &str) -> bool {
    let mut it = w.chars();
    it.next().is_some_and(|c| c.is_alphabetic() || c == '_') && it.all(|c| c.is_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_poset_from_expression() {
        let p = eval_str("antichain(2) < chain(1) < antichain(2)").unwrap();
        assert!(p.is_isomorphic(&Poset::x_poset()));
        assert_eq!(p.labels(), ["0", "1", "2", "3", "4"]);
    }

    #[test]
    fn precedence_and_associativity() {
        let e = parse("chain(1) + chain(2) < chain(3) < chain(4)").unwrap().body;
        let expected = PosetExpr::ordinal(
            PosetExpr::ordinal(
                PosetExpr::union(PosetExpr::Chain(1), PosetExpr::Chain(2)),
                PosetExpr::Chain(3),
            ),
            PosetExpr::Chain(4),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn simple_examples() {
        let two = eval_str("chain(2) + chain(2)").unwrap();
        assert_eq!(two.len(), 4);
        assert_eq!(two.components().len(), 2);
        assert!(eval_str("op(chain(3))").unwrap().is_isomorphic(&Poset::chain(3)));
    }

    #[test]
    fn literals_and_bindings() {
        let src = "let v = {a, b, c; a<b, a<c};\nlet w = op(v);\nv < w";
        let prog = parse(src).unwrap();
        let p = prog.eval().unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p.covers().len(), 8);
        assert_eq!((p.minimal().count_ones(), p.maximal().count_ones()), (1, 1));
        assert_eq!(eval_str("{;}").unwrap().len(), 0);
        assert_eq!(eval_str("{a;}").unwrap().len(), 1);
    }

    #[test]
    fn printing_round_trips() {
        for src in [
            "chain(1) + chain(2) < chain(3)",
            "chain(1) < (chain(2) < chain(3))",
            "chain(1) + (chain(2) + chain(3))",
            "(chain(1) < chain(2)) + antichain(3)",
            "op(antichain(2) < {a, b; a<b})",
            "let q = chain(2);\nq + q",
        ] {
            let prog = parse(src).unwrap();
            assert_eq!(prog.to_string(), src);
            assert_eq!(parse(&prog.to_string()).unwrap(), prog);
        }
    }

    #[test]
    fn errors_carry_positions() {
        match parse("chain(2) <\n  chian(3)") {
            Err(Error::UnboundRef { name, line, column }) => {
                assert_eq!((name.as_str(), line, column), ("chian", 2, 3));
            }
            other => panic!("{other:?}"),
        }
        match parse("chain(2) + ") {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("chain(x)"), Err(Error::Parse { column: 7, .. })));
        assert!(matches!(parse("chain(2) chain(1)"), Err(Error::Parse { .. })));
        assert!(matches!(eval_str("chain(65)"), Err(Error::TooManyElements(65))));
        assert!(matches!(eval_str("{a, b; a<b, b<a}"), Err(Error::Cycle(_))));
    }

    #[test]
    fn tree_pushes_op_to_leaves() {
        let prog = parse("op(chain(1) + chain(1) < {a, b, c; a<b, a<c})").unwrap();
        let t = prog.tree().unwrap();
        assert!(t.evaluate().is_isomorphic(&prog.eval().unwrap()));
        match t {
            DecompositionTree::OrdinalSum(ch) => assert_eq!(ch[0].size(), 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn inlining_removes_refs() {
        let prog = parse("let a = chain(2); let b = a + a; b < a").unwrap();
        let e = prog.inlined();
        assert_eq!(e.to_string(), "chain(2) + chain(2) < chain(2)");
        assert_eq!(e.size(), 6);
    }
}
