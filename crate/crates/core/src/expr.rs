//! Graph-expression language.
//!
//! ```text
//! expr  := atom | comb
//! atom  := K(n) | Kbar(n) | P(n) | C(n) | S(n) | W(n) | Tri(n) | TriK2(n)
//!        | Kmulti(part, …)        part := n | n*count
//!        | T1 | T2
//!        | graph{n; u-v, …}
//!        | file("path")
//! comb  := union(expr, …) | zykov(expr, …) | star(expr)
//!        | ej(expr, u, expr, v) | rep(k, expr)
//! ```
//!
//! `ej(a, u, b, v)` joins vertex `u` of `a` to vertex `v` of `b`; in the
//! result, `b`'s vertices follow `a`'s (so `v` becomes `v + |a|`).
//! `rep(k, e)` is the disjoint union of `k` copies of `e`.

use std::fmt;

use crate::engine::{
    independence_poly, repeated_union, star_transform, union_poly, zykov_poly, StableSetProfile,
};
use crate::error::{Error, Result, MAX_VERTICES};
use crate::families::{self, FamilySpec};
use crate::graph::Graph;
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphExpr {
    Family(FamilySpec),
    Explicit { n: usize, edges: Vec<(usize, usize)> },
    File(String),
    Union(Vec<GraphExpr>),
    Zykov(Vec<GraphExpr>),
    Star(Box<GraphExpr>),
    EdgeJoin(Box<GraphExpr>, usize, Box<GraphExpr>, usize),
    Rep(usize, Box<GraphExpr>),
}

const MAX_PARAM: usize = 1_000_000;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn location(&self, at: usize) -> (usize, usize) {
        let before = &self.src[..at];
        let line = before.matches('\n').count() + 1;
        let column = before.chars().rev().take_while(|&c| c != '\n').count() + 1;
        (line, column)
    }

    fn error_at(&self, at: usize, message: impl Into<String>) -> Error {
        let (line, column) = self.location(at);
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = match self.peek() {
                Some(f) => format!("`{f}`"),
                None => "end of input".into(),
            };
            Err(self.error_at(self.pos, format!("expected `{c}`, found {found}")))
        }
    }

    fn ident(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_alphanumeric() || c == '_') || (i == 0 && c.is_ascii_digit()))
            .map_or(self.src.len() - start, |(i, _)| i);
        if len == 0 {
            return Err(self.error_at(start, "expected a graph expression"));
        }
        self.pos += len;
        Ok((start, &self.src[start..start + len]))
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return Err(self.error_at(start, "expected a number"));
        }
        self.pos += len;
        self.src[start..self.pos]
            .parse::<usize>()
            .ok()
            .filter(|&v| v <= MAX_PARAM)
            .ok_or_else(|| self.error_at(start, "number too large"))
    }

    fn single_param(&mut self, name: &str, min: usize, at: usize) -> Result<usize> {
        self.expect('(')?;
        let n = self.number()?;
        self.expect(')')?;
        if n < min {
            return Err(self.error_at(at, format!("{name} requires n >= {min}, got {n}")));
        }
        Ok(n)
    }

    fn expr_list(&mut self) -> Result<Vec<GraphExpr>> {
        self.expect('(')?;
        let mut items = vec![self.expr()?];
        while self.eat(',') {
            items.push(self.expr()?);
        }
        self.expect(')')?;
        Ok(items)
    }

    fn expr(&mut self) -> Result<GraphExpr> {
        let (at, name) = self.ident()?;
        let fam = |f: FamilySpec| Ok(GraphExpr::Family(f));
        match name {
            "K" => fam(FamilySpec::Complete(self.single_param(name, 1, at)?)),
            "Kbar" => fam(FamilySpec::Empty(self.single_param(name, 1, at)?)),
            "P" => fam(FamilySpec::Path(self.single_param(name, 1, at)?)),
            "C" => fam(FamilySpec::Cycle(self.single_param(name, 3, at)?)),
            "S" => fam(FamilySpec::Spider(self.single_param(name, 2, at)?)),
            "W" => fam(FamilySpec::Centipede(self.single_param(name, 1, at)?)),
            "Tri" => fam(FamilySpec::TriangleChain(self.single_param(name, 1, at)?)),
            "TriK2" => fam(FamilySpec::TriangleChainK2(self.single_param(name, 1, at)?)),
            "T1" => fam(FamilySpec::TreeT1),
            "T2" => fam(FamilySpec::TreeT2),
            "Kmulti" => {
                self.expect('(')?;
                let mut parts = Vec::new();
                loop {
                    let item_at = self.pos;
                    let size = self.number()?;
                    let count = if self.eat('*') { self.number()? } else { 1 };
                    if size == 0 || count == 0 {
                        return Err(self.error_at(item_at, "multipartite parts must be >= 1"));
                    }
                    if parts.len() + count > MAX_PARAM {
                        return Err(self.error_at(item_at, "too many parts"));
                    }
                    parts.extend(std::iter::repeat_n(size, count));
                    if !self.eat(',') {
                        break;
                    }
                }
                self.expect(')')?;
                fam(FamilySpec::CompleteMultipartite(parts))
            }
            "graph" => {
                self.expect('{')?;
                let n_at = self.pos;
                let n = self.number()?;
                if n > MAX_VERTICES {
                    return Err(self.error_at(n_at, format!("graph{{}} allows at most {MAX_VERTICES} vertices")));
                }
                self.expect(';')?;
                let mut edges = Vec::new();
                if self.peek() != Some('}') {
                    loop {
                        let e_at = self.pos;
                        let u = self.number()?;
                        self.expect('-')?;
                        let v = self.number()?;
                        if u >= n || v >= n || u == v {
                            return Err(self.error_at(e_at, format!("bad edge {u}-{v} for {n} vertices")));
                        }
                        edges.push((u, v));
                        if !self.eat(',') || self.peek() == Some('}') {
                            break;
                        }
                    }
                }
                self.expect('}')?;
                Ok(GraphExpr::Explicit { n, edges })
            }
            "file" => {
                self.expect('(')?;
                self.skip_ws();
                let start = self.pos;
                let path = if self.eat('"') {
                    let body = start + 1;
                    let end = self.src[body..]
                        .find('"')
                        .ok_or_else(|| self.error_at(start, "unterminated string"))?;
                    self.pos = body + end + 1;
                    self.src[body..body + end].to_string()
                } else {
                    let end = self.src[start..]
                        .find(')')
                        .ok_or_else(|| self.error_at(start, "expected `)`"))?;
                    self.pos = start + end;
                    self.src[start..start + end].trim().to_string()
                };
                if path.is_empty() {
                    return Err(self.error_at(start, "empty file path"));
                }
                self.expect(')')?;
                Ok(GraphExpr::File(path))
            }
            "union" => Ok(GraphExpr::Union(self.expr_list()?)),
            "zykov" => Ok(GraphExpr::Zykov(self.expr_list()?)),
            "star" => {
                self.expect('(')?;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(GraphExpr::Star(Box::new(e)))
            }
            "ej" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let u = self.number()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(',')?;
                let v = self.number()?;
                self.expect(')')?;
                Ok(GraphExpr::EdgeJoin(Box::new(a), u, Box::new(b), v))
            }
            "rep" => {
                self.expect('(')?;
                let k_at = self.pos;
                let k = self.number()?;
                if k == 0 {
                    return Err(self.error_at(k_at, "rep requires k >= 1"));
                }
                self.expect(',')?;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(GraphExpr::Rep(k, Box::new(e)))
            }
            other => Err(self.error_at(at, format!("unknown atom `{other}`"))),
        }
    }
}

/// Parses one expression; trailing input is an error.
pub fn parse(text: &str) -> Result<GraphExpr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error_at(p.pos, "unexpected trailing input"));
    }
    Ok(e)
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, name: &str, items: &[GraphExpr]| {
            write!(f, "{name}(")?;
            for (i, e) in items.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str(")")
        };
        match self {
            GraphExpr::Family(spec) => match spec {
                FamilySpec::Complete(n) => write!(f, "K({n})"),
                FamilySpec::Empty(n) => write!(f, "Kbar({n})"),
                FamilySpec::Path(n) => write!(f, "P({n})"),
                FamilySpec::Cycle(n) => write!(f, "C({n})"),
                FamilySpec::Spider(n) => write!(f, "S({n})"),
                FamilySpec::Centipede(n) => write!(f, "W({n})"),
                FamilySpec::TriangleChain(n) => write!(f, "Tri({n})"),
                FamilySpec::TriangleChainK2(n) => write!(f, "TriK2({n})"),
                FamilySpec::TreeT1 => f.write_str("T1"),
                FamilySpec::TreeT2 => f.write_str("T2"),
                FamilySpec::CompleteMultipartite(parts) => {
                    f.write_str("Kmulti(")?;
                    let mut first = true;
                    for run in parts.chunk_by(|a, b| a == b) {
                        if !first {
                            f.write_str(", ")?;
                        }
                        first = false;
                        match run.len() {
                            1 => write!(f, "{}", run[0])?,
                            k => write!(f, "{}*{k}", run[0])?,
                        }
                    }
                    f.write_str(")")
                }
                // Not reachable from the parser; printed in their family form.
                other => write!(f, "{other}"),
            },
            GraphExpr::Explicit { n, edges } => {
                write!(f, "graph{{{n};")?;
                for (i, (u, v)) in edges.iter().enumerate() {
                    write!(f, "{}{u}-{v}", if i == 0 { " " } else { ", " })?;
                }
                f.write_str("}")
            }
            GraphExpr::File(path) => write!(f, "file(\"{path}\")"),
            GraphExpr::Union(items) => list(f, "union", items),
            GraphExpr::Zykov(items) => list(f, "zykov", items),
            GraphExpr::Star(e) => write!(f, "star({e})"),
            GraphExpr::EdgeJoin(a, u, b, v) => write!(f, "ej({a}, {u}, {b}, {v})"),
            GraphExpr::Rep(k, e) => write!(f, "rep({k}, {e})"),
        }
    }
}

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluated {
    Graph(Graph),
    /// Too large to materialize; only the polynomial is known.
    ClosedForm { poly: Polynomial, vertices: u64 },
}

impl Evaluated {
    pub fn vertices(&self) -> u64 {
        match self {
            Evaluated::Graph(g) => g.n() as u64,
            Evaluated::ClosedForm { vertices, .. } => *vertices,
        }
    }

    pub fn poly(&self) -> Result<Polynomial> {
        match self {
            Evaluated::Graph(g) => independence_poly(g),
            Evaluated::ClosedForm { poly, .. } => Ok(poly.clone()),
        }
    }

    pub fn graph(&self) -> Option<&Graph> {
        match self {
            Evaluated::Graph(g) => Some(g),
            Evaluated::ClosedForm { .. } => None,
        }
    }
}

/// Evaluates an expression, materializing the graph whenever it fits and
/// falling back to polynomial identities otherwise.
pub fn eval(expr: &GraphExpr) -> Result<Evaluated> {
    Evaluator {
        prefer_closed: false,
    }
    .eval(expr)
}

/// Evaluates using polynomial identities wherever one applies, even for
/// graphs that would fit. Returns the polynomial.
pub fn eval_closed_form(expr: &GraphExpr) -> Result<Polynomial> {
    Evaluator {
        prefer_closed: true,
    }
    .eval(expr)?
    .poly()
}

struct Evaluator {
    prefer_closed: bool,
}

impl Evaluator {
    fn closed(poly: Polynomial, vertices: u64) -> Evaluated {
        Evaluated::ClosedForm { poly, vertices }
    }

    fn eval(&self, expr: &GraphExpr) -> Result<Evaluated> {
        match expr {
            GraphExpr::Family(spec) => {
                if self.prefer_closed && spec.has_closed_form() {
                    return Ok(Self::closed(families::poly(spec)?, spec.order()));
                }
                match families::build(spec) {
                    Ok(g) => Ok(Evaluated::Graph(g)),
                    Err(Error::ClosedFormOnly(_)) => {
                        Ok(Self::closed(families::poly(spec)?, spec.order()))
                    }
                    Err(e) => Err(e),
                }
            }
            GraphExpr::Explicit { n, edges } => Ok(Evaluated::Graph(Graph::from_edge_list(*n, edges)?)),
            GraphExpr::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{path}: {e}")))?;
                Ok(Evaluated::Graph(Graph::parse_edge_list(&text)?))
            }
            GraphExpr::Union(items) => self.combine(items, false),
            GraphExpr::Zykov(items) => self.combine(items, true),
            GraphExpr::Rep(k, e) => {
                let inner = self.eval(e)?;
                let total = inner.vertices().saturating_mul(*k as u64);
                match inner {
                    Evaluated::Graph(g) if !self.prefer_closed && total <= MAX_VERTICES as u64 => {
                        let mut acc = g.clone();
                        for _ in 1..*k {
                            acc = acc.disjoint_union(&g)?;
                        }
                        Ok(Evaluated::Graph(acc))
                    }
                    other => Ok(Self::closed(repeated_union(&other.poly()?, *k as u64)?, total)),
                }
            }
            GraphExpr::Star(e) => {
                let inner = self.eval(e)?;
                let n = inner.vertices();
                match inner {
                    Evaluated::Graph(g) if !self.prefer_closed && 2 * n <= MAX_VERTICES as u64 => {
                        Ok(Evaluated::Graph(g.star()?))
                    }
                    other => {
                        let n_usize = usize::try_from(n)
                            .map_err(|_| Error::Range(format!("{n} vertices")))?;
                        let profile = StableSetProfile::from_poly(n_usize, &other.poly()?)?;
                        Ok(Self::closed(star_transform(&profile), 2 * n))
                    }
                }
            }
            GraphExpr::EdgeJoin(a, u, b, v) => {
                let (left, right) = (self.eval(a)?, self.eval(b)?);
                if (*u as u64) >= left.vertices() {
                    return Err(Error::InvalidVertex {
                        vertex: *u,
                        n: left.vertices() as usize,
                    });
                }
                if (*v as u64) >= right.vertices() {
                    return Err(Error::InvalidVertex {
                        vertex: *v,
                        n: right.vertices() as usize,
                    });
                }
                match (left, right) {
                    (Evaluated::Graph(g1), Evaluated::Graph(g2)) => {
                        Ok(Evaluated::Graph(g1.edge_join(*u, &g2, *v)?))
                    }
                    (l, r) => Err(Error::capacity(
                        "edge-join (no closed form)",
                        l.vertices() + r.vertices(),
                    )),
                }
            }
        }
    }

    fn combine(&self, items: &[GraphExpr], zykov: bool) -> Result<Evaluated> {
        let parts = items
            .iter()
            .map(|e| self.eval(e))
            .collect::<Result<Vec<_>>>()?;
        let total: u64 = parts.iter().map(Evaluated::vertices).sum();
        let all_graphs = parts.iter().all(|p| p.graph().is_some());
        if all_graphs && !self.prefer_closed && total <= MAX_VERTICES as u64 {
            let mut graphs = parts.into_iter().filter_map(|p| match p {
                Evaluated::Graph(g) => Some(g),
                Evaluated::ClosedForm { .. } => None,
            });
            let mut acc = graphs.next().expect("at least one operand");
            for g in graphs {
                acc = if zykov {
                    acc.zykov_sum(&g)?
                } else {
                    acc.disjoint_union(&g)?
                };
            }
            return Ok(Evaluated::Graph(acc));
        }
        let polys = parts
            .iter()
            .map(Evaluated::poly)
            .collect::<Result<Vec<_>>>()?;
        let poly = if zykov {
            zykov_poly(&polys)?
        } else {
            union_poly(&polys)?
        };
        Ok(Self::closed(poly, total))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_i64s(cs)
    }

    #[test]
    fn parse_examples() {
        let e = parse("zykov(K(42), rep(3, K(7)))").unwrap();
        assert_eq!(
            e,
            GraphExpr::Zykov(vec![
                GraphExpr::Family(FamilySpec::Complete(42)),
                GraphExpr::Rep(3, Box::new(GraphExpr::Family(FamilySpec::Complete(7)))),
            ])
        );
        assert_eq!(
            parse("star(P(7))").unwrap(),
            GraphExpr::Star(Box::new(GraphExpr::Family(FamilySpec::Path(7))))
        );
        assert_eq!(
            parse("graph{3; 0-1, 1-2, 0-2}").unwrap(),
            GraphExpr::Explicit {
                n: 3,
                edges: vec![(0, 1), (1, 2), (0, 2)]
            }
        );
        assert_eq!(
            parse("  graph { 1 ; } ").unwrap(),
            GraphExpr::Explicit { n: 1, edges: vec![] }
        );
    }

    #[test]
    fn parse_errors_have_positions() {
        match parse("union(K(3),\n  Q(2))") {
            Err(Error::Parse { line, column, message }) => {
                assert_eq!((line, column), (2, 3));
                assert!(message.contains("unknown atom"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("K(3"), Err(Error::Parse { .. })));
        assert!(matches!(parse("K(3) K(4)"), Err(Error::Parse { .. })));
        assert!(matches!(parse("S(1)"), Err(Error::Parse { .. })));
        assert!(matches!(parse("C(2)"), Err(Error::Parse { .. })));
        assert!(matches!(parse("graph{2; 0-2}"), Err(Error::Parse { .. })));
        assert!(matches!(parse("rep(0, K(1))"), Err(Error::Parse { .. })));
        assert!(matches!(parse("ej(K(1), 0, K(1))"), Err(Error::Parse { .. })));
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(parse("K(99999999999)"), Err(Error::Parse { .. })));
    }

    #[test]
    fn print_round_trip_examples() {
        for text in [
            "zykov(K(42), rep(3, K(7)))",
            "Kmulti(3*120)",
            "Kmulti(1, 2*2, 3)",
            "ej(Tri(2), 4, TriK2(1), 0)",
            "graph{3; 0-1, 1-2}",
            "graph{1;}",
            "file(\"some/path.txt\")",
            "union(T1, T2, W(3), S(4), C(5), Kbar(2), P(1))",
        ] {
            let e = parse(text).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{text}");
        }
        assert_eq!(parse("Kmulti(3*120)").unwrap().to_string(), "Kmulti(3*120)");
    }

    #[test]
    fn eval_graph_h_closed_form() {
        let e = parse("zykov(rep(3,K(10)), Kmulti(3*120))").unwrap();
        let v = eval(&e).unwrap();
        assert!(v.graph().is_none());
        assert_eq!(v.vertices(), 390);
        assert_eq!(v.poly().unwrap(), p(&[1, 390, 660, 1120]));
    }

    #[test]
    fn eval_small_cases() {
        let k2 = eval(&parse("star(graph{1;})").unwrap()).unwrap();
        assert_eq!(k2, Evaluated::Graph(Graph::complete(2).unwrap()));
        let g = eval(&parse("ej(Tri(1), 1, K(2), 0)").unwrap()).unwrap();
        let g = g.graph().unwrap();
        assert_eq!(g.n(), 5);
        assert!(g.has_edge(1, 3));
        assert_eq!(
            eval(&parse("ej(Tri(1), 3, K(2), 0)").unwrap()),
            Err(Error::InvalidVertex { vertex: 3, n: 3 })
        );
        assert!(matches!(
            eval(&parse("ej(K(100), 0, K(2), 0)").unwrap()),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            eval(&parse("P(70)").unwrap()),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn eval_counterexamples() {
        for (n, want) in [(42, 63), (43, 64), (127, 148)] {
            let e = parse(&format!("zykov(K({n}), rep(3, K(7)))")).unwrap();
            assert_eq!(eval(&e).unwrap().poly().unwrap(), p(&[1, want, 147, 343]));
        }
    }

    #[test]
    fn star_of_closed_form_uses_transform() {
        let big = eval(&parse("star(Kbar(40))").unwrap()).unwrap();
        assert!(big.graph().is_none());
        assert_eq!(big.vertices(), 80);
        // (K̄_40)* = 40 disjoint K_2
        assert_eq!(big.poly().unwrap(), p(&[1, 2]).pow(40));
    }

    #[test]
    fn closed_form_path_agrees_when_both_exist() {
        for text in [
            "zykov(K(4), rep(3, K(7)))",
            "union(S(2), W(3), Kmulti(2, 3))",
            "star(zykov(Kbar(3), Kbar(3)))",
            "rep(2, zykov(Tri(2), K(3)))",
        ] {
            let e = parse(text).unwrap();
            let materialized = eval(&e).unwrap();
            assert!(materialized.graph().is_some(), "{text}");
            assert_eq!(materialized.poly().unwrap(), eval_closed_form(&e).unwrap(), "{text}");
        }
    }

    #[test]
    fn file_atom_reads_edge_list() {
        let dir = std::env::temp_dir().join(format!("indpoly-expr-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("p3.txt");
        std::fs::write(&path, "3\n0 1\n1 2\n").unwrap();
        let quoted = format!("star(file(\"{}\"))", path.display());
        let v = eval(&parse(&quoted).unwrap()).unwrap();
        assert_eq!(v.poly().unwrap(), p(&[1, 6, 10, 5]));
        let bare = format!("file({})", path.display());
        assert_eq!(eval(&parse(&bare).unwrap()).unwrap().vertices(), 3);
        assert!(matches!(
            eval(&parse("file(\"/nonexistent/graph.txt\")").unwrap()),
            Err(Error::Io(_))
        ));
        std::fs::remove_dir_all(&dir).ok();
    }
}
