//! Parametric graph families with fixed labelings, and closed-form
//! polynomials for members too large to materialize.
//!
//! Labelings:
//! - `star_graph(n)` = `K_{1,n}`: center 0, leaves `1..=n`.
//! - `spider(n)` = `K_{1,n}*`: hub `b_0 = 0`, legs `b_i = i`, pendant `a_i = n + 1 + i`.
//! - `centipede(n)` = `P_n*`: spine `b_i = i - 1`, pendant `a_i = n + i - 1`.
//! - `triangle_chain(n)`: triangle `t` (0-based) is `{3t, 3t+1, 3t+2}`, and
//!   `3t+1` is joined to `3t+3`.
//! - `triangle_chain_k2(n)`: the chain plus a `K_2` on `{3n, 3n+1}` hung from
//!   vertex `3n-2`.
//! - `complete_multipartite`: parts occupy consecutive index blocks.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::engine::{independence_poly, repeated_zykov, zykov_poly};
use crate::error::{Error, Result, MAX_VERTICES};
use crate::graph::Graph;
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    CompleteMultipartite(Vec<usize>),
    /// `K_{1,n}`.
    StarGraph(usize),
    /// `S_n`, `n >= 2`.
    Spider(usize),
    /// `W_n`, `n >= 1`.
    Centipede(usize),
    /// `△_n`, `n >= 1`.
    TriangleChain(usize),
    /// `△_n ⊘ K_2`, `n >= 1`.
    TriangleChainK2(usize),
    /// `K_n ⊎ (⊔3K_7)`.
    KnJoin3K7(usize),
    /// `(⊔3K_10) ⊎ K_{3,…,3}` with 120 parts. Closed-form only.
    GraphH,
    TreeT1,
    TreeT2,
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Empty(_) => "empty",
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::CompleteMultipartite(_) => "complete_multipartite",
            FamilySpec::StarGraph(_) => "star_graph",
            FamilySpec::Spider(_) => "spider",
            FamilySpec::Centipede(_) => "centipede",
            FamilySpec::TriangleChain(_) => "triangle_chain",
            FamilySpec::TriangleChainK2(_) => "triangle_chain_k2",
            FamilySpec::KnJoin3K7(_) => "kn_join_3k7",
            FamilySpec::GraphH => "graph_H",
            FamilySpec::TreeT1 => "fig4_T1",
            FamilySpec::TreeT2 => "fig4_T2",
        }
    }

    /// Vertex count of the described graph, whether or not it fits.
    pub fn order(&self) -> u64 {
        match *self {
            FamilySpec::Complete(n)
            | FamilySpec::Empty(n)
            | FamilySpec::Path(n)
            | FamilySpec::Cycle(n) => n as u64,
            FamilySpec::CompleteMultipartite(ref parts) => parts.iter().map(|&p| p as u64).sum(),
            FamilySpec::StarGraph(n) => n as u64 + 1,
            FamilySpec::Spider(n) => 2 * (n as u64 + 1),
            FamilySpec::Centipede(n) => 2 * n as u64,
            FamilySpec::TriangleChain(n) => 3 * n as u64,
            FamilySpec::TriangleChainK2(n) => 3 * n as u64 + 2,
            FamilySpec::KnJoin3K7(n) => n as u64 + 21,
            FamilySpec::GraphH => 390,
            FamilySpec::TreeT1 => 10,
            FamilySpec::TreeT2 => 8,
        }
    }

    fn validate(&self) -> Result<()> {
        let range = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::Range(format!("{} {what}", self)))
            }
        };
        match self {
            FamilySpec::Complete(n)
            | FamilySpec::Empty(n)
            | FamilySpec::Path(n)
            | FamilySpec::StarGraph(n)
            | FamilySpec::Centipede(n)
            | FamilySpec::TriangleChain(n)
            | FamilySpec::TriangleChainK2(n)
            | FamilySpec::KnJoin3K7(n) => range(*n >= 1, "requires n >= 1"),
            FamilySpec::Cycle(n) => range(*n >= 3, "requires n >= 3"),
            FamilySpec::Spider(n) => range(*n >= 2, "requires n >= 2"),
            FamilySpec::CompleteMultipartite(parts) => range(
                !parts.is_empty() && parts.iter().all(|&p| p >= 1),
                "requires at least one part, each of size >= 1",
            ),
            FamilySpec::GraphH | FamilySpec::TreeT1 | FamilySpec::TreeT2 => Ok(()),
        }
    }

    /// Whether a closed form exists that avoids materializing the graph.
    pub fn has_closed_form(&self) -> bool {
        !matches!(
            self,
            FamilySpec::Path(_) | FamilySpec::Cycle(_) | FamilySpec::TreeT1 | FamilySpec::TreeT2
        )
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}({})", self.name(), parts.join(","))
            }
            FamilySpec::GraphH | FamilySpec::TreeT1 | FamilySpec::TreeT2 => {
                f.write_str(self.name())
            }
            FamilySpec::Complete(n)
            | FamilySpec::Empty(n)
            | FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::StarGraph(n)
            | FamilySpec::Spider(n)
            | FamilySpec::Centipede(n)
            | FamilySpec::TriangleChain(n)
            | FamilySpec::TriangleChainK2(n)
            | FamilySpec::KnJoin3K7(n) => write!(f, "{}({n})", self.name()),
        }
    }
}

fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

fn triangle_chain(n: usize) -> Result<Graph> {
    let mut edges = Vec::with_capacity(4 * n);
    for t in 0..n {
        let b = 3 * t;
        edges.extend([(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
        if t + 1 < n {
            edges.push((b + 1, b + 3));
        }
    }
    Graph::from_edge_list(3 * n, &edges)
}

/// Materializes a family member with its fixed labeling.
pub fn build(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let order = spec.order();
    if matches!(spec, FamilySpec::GraphH) {
        return Err(Error::ClosedFormOnly(spec.to_string()));
    }
    if order > MAX_VERTICES as u64 {
        return Err(if spec.has_closed_form() {
            Error::ClosedFormOnly(spec.to_string())
        } else {
            Error::capacity(spec.to_string(), order)
        });
    }
    match spec {
        FamilySpec::Complete(n) => Graph::complete(*n),
        FamilySpec::Empty(n) => Graph::edgeless(*n),
        FamilySpec::Path(n) => path(*n),
        FamilySpec::Cycle(n) => {
            let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edge_list(*n, &edges)
        }
        FamilySpec::CompleteMultipartite(parts) => {
            let mut g = Graph::edgeless(parts[0])?;
            for &p in &parts[1..] {
                g = g.zykov_sum(&Graph::edgeless(p)?)?;
            }
            Ok(g)
        }
        FamilySpec::StarGraph(n) => {
            let edges: Vec<_> = (1..=*n).map(|i| (0, i)).collect();
            Graph::from_edge_list(n + 1, &edges)
        }
        FamilySpec::Spider(n) => build(&FamilySpec::StarGraph(*n))?.star(),
        FamilySpec::Centipede(n) => path(*n)?.star(),
        FamilySpec::TriangleChain(n) => triangle_chain(*n),
        FamilySpec::TriangleChainK2(n) => {
            triangle_chain(*n)?.edge_join(3 * n - 2, &Graph::complete(2)?, 0)
        }
        FamilySpec::KnJoin3K7(n) => {
            let k7 = Graph::complete(7)?;
            let three = k7.disjoint_union(&k7)?.disjoint_union(&k7)?;
            Graph::complete(*n)?.zykov_sum(&three)
        }
        FamilySpec::GraphH => unreachable!("rejected above"),
        FamilySpec::TreeT1 => Graph::from_edge_list(
            10,
            &[
                (0, 1),
                (4, 5),
                (5, 6),
                (6, 7),
                (8, 9),
                (1, 5),
                (5, 9),
                (2, 6),
                (3, 7),
            ],
        ),
        FamilySpec::TreeT2 => Graph::from_edge_list(
            8,
            &[(0, 1), (3, 4), (4, 5), (6, 7), (1, 4), (4, 7), (2, 5)],
        ),
    }
}

/// `I(G;x)` for a family member: closed form when one exists, otherwise the
/// engine on the materialized graph.
pub fn poly(spec: &FamilySpec) -> Result<Polynomial> {
    spec.validate()?;
    match spec {
        FamilySpec::Complete(n) => Ok(Polynomial::linear(*n as u64)),
        FamilySpec::Empty(n) => Ok(Polynomial::one_plus_x_pow(*n)),
        FamilySpec::CompleteMultipartite(parts) => multipartite_poly(parts),
        FamilySpec::StarGraph(n) => {
            Ok(Polynomial::one_plus_x_pow(*n).add(&Polynomial::from_i64s(&[0, 1])))
        }
        FamilySpec::Spider(n) => spider_poly(*n),
        FamilySpec::Centipede(n) => centipede_poly(*n),
        FamilySpec::TriangleChain(n) => triangle_chain_poly(*n),
        FamilySpec::TriangleChainK2(n) => triangle_chain_k2_poly(*n),
        FamilySpec::KnJoin3K7(n) => counterexample_poly_kn_3k7(*n),
        FamilySpec::GraphH => Ok(graph_h_poly()),
        FamilySpec::Path(_) | FamilySpec::Cycle(_) | FamilySpec::TreeT1 | FamilySpec::TreeT2 => {
            independence_poly(&build(spec)?)
        }
    }
}

/// `K_{n_1,…,n_p}` is the Zykov sum of edgeless graphs.
pub fn multipartite_poly(parts: &[usize]) -> Result<Polynomial> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::Range("multipartite parts must be nonempty".into()));
    }
    let polys: Vec<Polynomial> = parts.iter().map(|&p| Polynomial::one_plus_x_pow(p)).collect();
    zykov_poly(&polys)
}

/// The inner factor `P(x)` of `I(S_n;x) = (1+x)·P(x)`, with
/// `c_k = C(n,k)·2^k + C(n-1,k-1)`.
pub fn spider_inner_poly(n: usize) -> Result<Polynomial> {
    if n < 2 {
        return Err(Error::Range(format!("spider requires n >= 2, got {n}")));
    }
    // step C(n,k)·2^k and C(n-1,k-1) from k to k+1 instead of recomputing
    let n = n as u64;
    let mut doubled = BigInt::one();
    let mut shifted = BigInt::zero();
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        coeffs.push(&doubled + &shifted);
        shifted = if k == 0 {
            BigInt::one()
        } else {
            shifted * (n - k) / k
        };
        doubled = doubled * (2 * (n - k)) / (k + 1);
    }
    Ok(Polynomial::new(coeffs))
}

/// `I(S_n;x)` in closed form.
pub fn spider_poly(n: usize) -> Result<Polynomial> {
    Ok(Polynomial::one_plus_x_pow(1).mul(&spider_inner_poly(n)?))
}

/// Predicted unique mode of `I(S_n;x)`: `1 + (n-1) mod 3 + 2(⌈n/3⌉ - 1)`.
pub fn spider_mode(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::Range(format!("spider requires n >= 2, got {n}")));
    }
    Ok(1 + (n - 1) % 3 + 2 * (n.div_ceil(3) - 1))
}

/// `I(△_n;x)` and `I(△_n ⊘ K_2;x)` by the pivot recurrences on the last
/// triangle:
/// `T_{k+1} = (1+2x)·T_k + x·U_{k-1}` and
/// `U_{k+1} = (1+2x)·U_k + x(1+x)·T_k`, with `U_0 = I(K_2)`.
pub fn triangle_chain_polys_by_recurrence(n: usize) -> Result<(Polynomial, Polynomial)> {
    if n == 0 {
        return Err(Error::Range("triangle chain requires n >= 1".into()));
    }
    let k2 = Polynomial::from_i64s(&[1, 2]);
    let x = Polynomial::from_i64s(&[0, 1]);
    let x_k2 = Polynomial::from_i64s(&[0, 1, 1]);
    let mut u_prev = k2.clone();
    let mut t = Polynomial::from_i64s(&[1, 3]);
    let mut u = Polynomial::from_i64s(&[1, 5, 5]);
    for _ in 1..n {
        let t_next = k2.mul(&t).add(&x.mul(&u_prev));
        let u_next = k2.mul(&u).add(&x_k2.mul(&t));
        u_prev = u;
        t = t_next;
        u = u_next;
    }
    Ok((t, u))
}

/// `I(△_n;x)`: engine while the chain fits, recurrence beyond.
pub fn triangle_chain_poly(n: usize) -> Result<Polynomial> {
    if n >= 1 && 3 * n <= MAX_VERTICES {
        independence_poly(&build(&FamilySpec::TriangleChain(n))?)
    } else {
        Ok(triangle_chain_polys_by_recurrence(n)?.0)
    }
}

/// `I(△_n ⊘ K_2;x)`: engine while the graph fits, recurrence beyond.
pub fn triangle_chain_k2_poly(n: usize) -> Result<Polynomial> {
    if n >= 1 && 3 * n + 2 <= MAX_VERTICES {
        independence_poly(&build(&FamilySpec::TriangleChainK2(n))?)
    } else {
        Ok(triangle_chain_polys_by_recurrence(n)?.1)
    }
}

/// `I(W_n;x)` via `I(W_{2m}) = (1+x)^m·I(△_m)` and
/// `I(W_{2m+1}) = (1+x)^m·I(△_m ⊘ K_2)`.
pub fn centipede_poly(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::Range("centipede requires n >= 1".into()));
    }
    let m = n / 2;
    let chain = match (n % 2, m) {
        (1, 0) => Polynomial::from_i64s(&[1, 2]),
        (0, _) => triangle_chain_poly(m)?,
        _ => triangle_chain_k2_poly(m)?,
    };
    Ok(Polynomial::one_plus_x_pow(m).mul(&chain))
}

/// `I(K_n ⊎ (⊔3K_7);x) = 1 + (n+21)x + 147x² + 343x³`.
pub fn counterexample_poly_kn_3k7(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::Range("K_n requires n >= 1".into()));
    }
    zykov_poly(&[
        Polynomial::linear(n as u64),
        Polynomial::linear(7).pow(3),
    ])
}

/// `I(H;x)` for `H = (⊔3K_10) ⊎ K_{3,…,3}` (120 parts).
pub fn graph_h_poly() -> Polynomial {
    let multipartite = repeated_zykov(&Polynomial::one_plus_x_pow(3), 120)
        .expect("constant term is 1");
    zykov_poly(&[Polynomial::linear(10).pow(3), multipartite]).expect("constant terms are 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_i64s(cs)
    }

    #[test]
    fn build_examples() {
        let s2 = build(&FamilySpec::Spider(2)).unwrap();
        assert_eq!(s2.n(), 6);
        assert_eq!(
            crate::trees::canonical_code(&s2),
            crate::trees::canonical_code(&build(&FamilySpec::Centipede(3)).unwrap())
        );
        assert_eq!(
            crate::trees::canonical_code(&build(&FamilySpec::Centipede(2)).unwrap()),
            crate::trees::canonical_code(&build(&FamilySpec::Path(4)).unwrap())
        );
        assert_eq!(
            build(&FamilySpec::TriangleChain(1)).unwrap(),
            Graph::complete(3).unwrap()
        );
        assert_eq!(
            build(&FamilySpec::Centipede(1)).unwrap(),
            Graph::complete(2).unwrap()
        );
    }

    #[test]
    fn build_errors() {
        assert!(matches!(
            build(&FamilySpec::Spider(1)),
            Err(Error::Range(_))
        ));
        assert!(matches!(build(&FamilySpec::Cycle(2)), Err(Error::Range(_))));
        assert!(matches!(
            build(&FamilySpec::GraphH),
            Err(Error::ClosedFormOnly(_))
        ));
        assert!(matches!(
            build(&FamilySpec::CompleteMultipartite(vec![3; 120])),
            Err(Error::ClosedFormOnly(_))
        ));
        assert!(matches!(
            build(&FamilySpec::Path(65)),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            build(&FamilySpec::KnJoin3K7(127)),
            Err(Error::ClosedFormOnly(_))
        ));
    }

    #[test]
    fn spider_examples() {
        assert_eq!(spider_poly(3).unwrap(), p(&[1, 8, 21, 23, 9]));
        assert_eq!(spider_poly(2).unwrap(), p(&[1, 6, 10, 5]));
        assert_eq!(spider_mode(2).unwrap(), 2);
        assert_eq!(spider_mode(3).unwrap(), 3);
        assert!(spider_poly(1).is_err());
        assert!(spider_mode(1).is_err());
        let big = spider_poly(100).unwrap();
        assert_eq!(big.modes(), vec![spider_mode(100).unwrap()]);
    }

    #[test]
    fn spider_matches_engine() {
        for n in 2..=12 {
            let g = build(&FamilySpec::Spider(n)).unwrap();
            assert_eq!(independence_poly(&g).unwrap(), spider_poly(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn centipede_examples() {
        assert_eq!(centipede_poly(2).unwrap(), p(&[1, 4, 3]));
        assert_eq!(centipede_poly(3).unwrap(), p(&[1, 6, 10, 5]));
        assert_eq!(centipede_poly(1).unwrap(), p(&[1, 2]));
        assert!(centipede_poly(0).is_err());
        for n in 1..=16 {
            let g = build(&FamilySpec::Centipede(n)).unwrap();
            assert_eq!(independence_poly(&g).unwrap(), centipede_poly(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn chain_recurrence_matches_engine() {
        for n in 1..=20 {
            let (t, u) = triangle_chain_polys_by_recurrence(n).unwrap();
            let tg = build(&FamilySpec::TriangleChain(n)).unwrap();
            let ug = build(&FamilySpec::TriangleChainK2(n)).unwrap();
            assert_eq!(independence_poly(&tg).unwrap(), t, "△_{n}");
            assert_eq!(independence_poly(&ug).unwrap(), u, "△_{n}⊘K_2");
        }
    }

    #[test]
    fn counterexample_and_h() {
        assert_eq!(counterexample_poly_kn_3k7(42).unwrap(), p(&[1, 63, 147, 343]));
        assert_eq!(counterexample_poly_kn_3k7(43).unwrap(), p(&[1, 64, 147, 343]));
        assert_eq!(counterexample_poly_kn_3k7(127).unwrap(), p(&[1, 148, 147, 343]));
        assert_eq!(graph_h_poly(), p(&[1, 390, 660, 1120]));
        let g = build(&FamilySpec::KnJoin3K7(5)).unwrap();
        assert_eq!(
            independence_poly(&g).unwrap(),
            counterexample_poly_kn_3k7(5).unwrap()
        );
    }

    #[test]
    fn fig4_trees() {
        let t1 = build(&FamilySpec::TreeT1).unwrap();
        let t2 = build(&FamilySpec::TreeT2).unwrap();
        assert!(t1.is_tree() && t2.is_tree());
        let t1_expected = p(&[1, 1]).pow(2).mul(&p(&[1, 2])).mul(&p(&[1, 6, 7]));
        let t2_expected = p(&[1, 1]).mul(&p(&[1, 7, 14, 9]));
        assert_eq!(independence_poly(&t1).unwrap(), t1_expected);
        assert_eq!(independence_poly(&t2).unwrap(), t2_expected);
        assert!(t1.is_very_well_covered().unwrap());
        assert!(t2.is_very_well_covered().unwrap());
    }

    #[test]
    fn closed_forms_match_engine_when_small() {
        let specs = [
            FamilySpec::Complete(6),
            FamilySpec::Empty(5),
            FamilySpec::CompleteMultipartite(vec![1, 2, 3]),
            FamilySpec::StarGraph(7),
            FamilySpec::TriangleChain(4),
            FamilySpec::TriangleChainK2(4),
        ];
        for spec in specs {
            let g = build(&spec).unwrap();
            assert_eq!(independence_poly(&g).unwrap(), poly(&spec).unwrap(), "{spec}");
        }
    }

    #[test]
    fn orders() {
        assert_eq!(FamilySpec::Centipede(5).order(), 10);
        assert_eq!(FamilySpec::Path(5).order(), 5);
        assert_eq!(FamilySpec::Spider(3).order(), 8);
        assert_eq!(FamilySpec::CompleteMultipartite(vec![3; 120]).order(), 360);
    }

    #[test]
    fn triangle_chain_structure() {
        for n in 1..=6 {
            let g = build(&FamilySpec::TriangleChain(n)).unwrap();
            assert_eq!(g.edge_count(), 4 * n - 1);
            assert!(g.is_claw_free());
            let k2 = build(&FamilySpec::TriangleChainK2(n)).unwrap();
            assert_eq!(k2.degree(3 * n - 2), 3);
        }
    }
}
