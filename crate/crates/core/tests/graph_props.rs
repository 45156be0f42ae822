use indpoly::engine::{
    independence_poly_with, oracle_profile, star_transform, zykov_poly, EngineConfig, PivotRule,
};
use indpoly::families::{self, FamilySpec};
use indpoly::{independence_poly, Error, Graph, Polynomial, VertexSet};
use num_bigint::BigInt;
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

/// Subsets of the vertex set that are stable and cannot be extended.
fn maximal_stable_sizes(g: &Graph) -> Vec<usize> {
    let n = g.n();
    (0u64..1 << n)
        .map(VertexSet)
        .filter(|&s| g.is_stable(s))
        .filter(|&s| (0..n).all(|v| s.contains(v) || !g.is_stable(s.with(v))))
        .map(VertexSet::len)
        .collect()
}

fn has_claw_brute(g: &Graph) -> bool {
    let n = g.n();
    (0..n).any(|c| {
        let nb: Vec<usize> = g.neighbors(c).iter().collect();
        nb.iter().enumerate().any(|(i, &a)| {
            nb[i + 1..].iter().enumerate().any(|(j, &b)| {
                !g.has_edge(a, b)
                    && nb[i + 1 + j + 1..]
                        .iter()
                        .any(|&d| !g.has_edge(a, d) && !g.has_edge(b, d))
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn low_coefficients_count_vertices_and_non_edges(g in graph_strategy(14)) {
        let p = independence_poly(&g).unwrap();
        let n = g.n() as i64;
        prop_assert_eq!(p.coeff(0), BigInt::from(1));
        prop_assert_eq!(p.coeff(1), BigInt::from(n));
        prop_assert_eq!(p.coeff(2), BigInt::from(n * (n - 1) / 2 - g.edge_count() as i64));
        prop_assert_eq!(p.degree().unwrap(), g.alpha_search());
    }

    #[test]
    fn engine_matches_oracle(g in graph_strategy(16)) {
        let o = oracle_profile(&g).unwrap();
        prop_assert_eq!(o.to_poly(), independence_poly(&g).unwrap());
    }

    #[test]
    fn vertex_recurrence_holds(g in graph_strategy(14), pick in any::<usize>()) {
        let v = pick % g.n();
        let minus_v = independence_poly(&g.delete_vertex(v).unwrap().graph).unwrap();
        let minus_nv = independence_poly(&g.delete_closed_neighborhood(v).unwrap().graph).unwrap();
        let whole = independence_poly(&g).unwrap();
        prop_assert_eq!(whole, minus_v.add(&minus_nv.shift_mul_x()));
    }

    #[test]
    fn pivot_choice_does_not_matter(g in graph_strategy(18), seed in any::<u64>()) {
        let config = EngineConfig { pivot: PivotRule::Random { seed }, ..EngineConfig::default() };
        prop_assert_eq!(
            independence_poly_with(&g, config).unwrap(),
            independence_poly(&g).unwrap()
        );
    }

    #[test]
    fn union_and_zykov_follow_their_formulas(a in graph_strategy(9), b in graph_strategy(9)) {
        let pa = independence_poly(&a).unwrap();
        let pb = independence_poly(&b).unwrap();
        prop_assert_eq!(independence_poly(&a.disjoint_union(&b).unwrap()).unwrap(), pa.mul(&pb));
        prop_assert_eq!(
            independence_poly(&a.zykov_sum(&b).unwrap()).unwrap(),
            zykov_poly(&[pa, pb]).unwrap()
        );
    }

    #[test]
    fn star_transform_matches_star_graph(g in graph_strategy(12)) {
        let t = star_transform(&oracle_profile(&g).unwrap());
        prop_assert_eq!(t, independence_poly(&g.star().unwrap()).unwrap());
    }

    #[test]
    fn edge_list_text_round_trips(g in graph_strategy(20)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list_text()).unwrap(), g);
    }

    #[test]
    fn well_covered_matches_subset_scan(g in graph_strategy(11)) {
        let sizes = maximal_stable_sizes(&g);
        let uniform = sizes.iter().all(|&k| k == sizes[0]);
        prop_assert_eq!(g.is_well_covered().unwrap(), uniform);
        let very = uniform && !g.has_isolated_vertex() && g.n() == 2 * sizes[0];
        prop_assert_eq!(g.is_very_well_covered().unwrap(), very);
    }

    #[test]
    fn claw_free_matches_brute_force(g in graph_strategy(12)) {
        prop_assert_eq!(g.is_claw_free(), !has_claw_brute(&g));
    }

    #[test]
    fn components_partition_the_vertices(g in graph_strategy(20)) {
        let comps = g.components();
        let mut seen = VertexSet::EMPTY;
        for c in &comps {
            prop_assert!(seen.intersection(*c).is_empty());
            seen = seen.union(*c);
        }
        prop_assert_eq!(seen, g.vertices());
        let product = comps.iter().fold(Polynomial::one(), |acc, &c| {
            acc.mul(&independence_poly(&g.induced(c).unwrap().graph).unwrap())
        });
        prop_assert_eq!(product, independence_poly(&g).unwrap());
    }
}

#[test]
fn chain_recurrences_match_engine() {
    for n in 1..=20 {
        let (t, u) = families::triangle_chain_polys_by_recurrence(n).unwrap();
        let tri = independence_poly(&families::build(&FamilySpec::TriangleChain(n)).unwrap()).unwrap();
        let tri_k2 =
            independence_poly(&families::build(&FamilySpec::TriangleChainK2(n)).unwrap()).unwrap();
        assert_eq!(t, tri, "n = {n}");
        assert_eq!(u, tri_k2, "n = {n}");
    }
}

#[test]
fn centipede_closed_form_crosses_the_vertex_cap() {
    // W_n has 2n vertices, so W_32 is the largest one the engine can hold
    let w32 = independence_poly(&families::build(&FamilySpec::Centipede(32)).unwrap()).unwrap();
    assert_eq!(families::centipede_poly(32).unwrap(), w32);
    // a top-size stable set picks one end of every pendant edge, so s_n
    // counts the stable sets of the path, the Fibonacci number F(n+2)
    let fib = |k: usize| (0..k).fold((BigInt::from(0), BigInt::from(1)), |(a, b), _| (b.clone(), a + b)).0;
    for n in [33, 63, 64] {
        let w = families::centipede_poly(n).unwrap();
        assert_eq!(w.degree(), Some(n));
        assert_eq!(w.coeff(1), BigInt::from(2 * n));
        assert_eq!(w.coeff(n), fib(n + 2));
    }
    assert!(matches!(
        families::build(&FamilySpec::Centipede(33)),
        Err(Error::Capacity { .. }) | Err(Error::ClosedFormOnly(_))
    ));
}

#[test]
fn memo_cap_is_enforced() {
    let g = families::build(&FamilySpec::Cycle(40)).unwrap();
    let tiny = EngineConfig { memo_cap: 4, ..EngineConfig::default() };
    assert!(matches!(
        independence_poly_with(&g, tiny),
        Err(Error::ResourceExhausted { .. })
    ));
}
