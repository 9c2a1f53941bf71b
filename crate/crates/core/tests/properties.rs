use coherent_motion::catalog::{generate, parse_family};
use coherent_motion::distinguish::{greedy_distinguishing_set, is_distinguishing, pair_distinguishing_number};
use coherent_motion::geometry::{line_graph_reconstruct, metsch_lines, verify_clique_geometry};
use coherent_motion::motion::{bipartite_spectral_formula, spectral_formula};
use coherent_motion::oracle::{exact_motion, isomorphic};
use coherent_motion::rank4::{constituent_spectral_bound, merged_spectral_bound, Rank4Scheme};
use coherent_motion::wl::wl_stabilize;
use coherent_motion::{certify, structure_constants, Configuration, Graph};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| Graph::from_fn(n, |u, v| bits[u * n + v]))
    })
}

fn arb_graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn arb_connected(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n)
        .prop_flat_map(|n| {
            (
                proptest::collection::vec(0usize..1000, n - 1),
                proptest::collection::vec(any::<bool>(), n * n),
            )
        })
        .prop_map(|(parents, bits)| {
            let n = parents.len() + 1;
            // a random spanning tree plus random extra edges
            Graph::from_fn(n, |u, v| {
                let (a, b) = (u.min(v), u.max(v));
                parents[b - 1] % b == a || (bits[a * n + b] && bits[b * n + a])
            })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wl_commutes_with_relabeling((g, perm) in arb_graph_with_perm(10)) {
        let cfg = Configuration::adjacency(&g);
        let a = wl_stabilize(&cfg.permuted(&perm)).unwrap();
        let b = wl_stabilize(&cfg).unwrap().permuted(&perm);
        prop_assert!(a.same_up_to_relabeling(&b));
    }

    #[test]
    fn stable_configurations_satisfy_the_tensor(g in arb_graph(12)) {
        let st = wl_stabilize(&Configuration::adjacency(&g)).unwrap();
        let sc = structure_constants(&st).unwrap();
        prop_assert!(sc.identity_failures().unwrap().is_empty());
        // entry (u, v) of A_i A_j is p_{i,j}^{c(u,v)}
        let n = st.n();
        for u in 0..n {
            for v in 0..n {
                for i in 0..st.rank() as u16 {
                    for j in 0..st.rank() as u16 {
                        let walks = (0..n).filter(|&w| st.color(u, w) == i && st.color(w, v) == j).count() as u64;
                        prop_assert_eq!(walks, sc.p(i, j, st.color(u, v)));
                    }
                }
            }
        }
    }

    #[test]
    fn distinguishing_numbers_follow_relabeling((g, perm) in arb_graph_with_perm(10)) {
        let cfg = wl_stabilize(&Configuration::adjacency(&g)).unwrap();
        let moved = cfg.permuted(&perm);
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(
                    pair_distinguishing_number(&cfg, u, v),
                    pair_distinguishing_number(&moved, perm[u], perm[v])
                );
            }
        }
    }

    #[test]
    fn certified_bound_never_exceeds_motion(g in arb_graph(9)) {
        let cfg = Configuration::adjacency(&g);
        let cert = certify(&cfg).unwrap();
        prop_assert!(cert.bound <= g.n() as u64);
        if let Some(m) = exact_motion(&cfg, 60).unwrap() {
            prop_assert!(cert.bound <= m as u64, "bound {} motion {}", cert.bound, m);
        }
    }

    #[test]
    fn greedy_sets_distinguish(g in arb_graph(12)) {
        let cfg = wl_stabilize(&Configuration::adjacency(&g)).unwrap();
        prop_assert!(is_distinguishing(&cfg, &greedy_distinguishing_set(&cfg)));
    }

    #[test]
    fn spectral_bounds_are_antitone(
        n in 1usize..500,
        k in 1u32..100,
        q in 0.0f64..100.0,
        xi in 0.0f64..100.0,
        dq in 0.0f64..10.0,
        dxi in 0.0f64..10.0,
    ) {
        let k = k as f64;
        prop_assert!(spectral_formula(n, k, q + dq, xi) <= spectral_formula(n, k, q, xi));
        prop_assert!(spectral_formula(n, k, q, xi + dxi) <= spectral_formula(n, k, q, xi));
        prop_assert!(bipartite_spectral_formula(n, k, xi + dxi, q) <= bipartite_spectral_formula(n, k, xi, q));
        prop_assert!(bipartite_spectral_formula(n, k, -(xi + dxi), q) <= bipartite_spectral_formula(n, k, xi, q));
        prop_assert!(bipartite_spectral_formula(n, k, xi, q + dq) <= bipartite_spectral_formula(n, k, xi, q));
    }

    #[test]
    fn whitney_reconstruction(y in arb_connected(5, 10)) {
        let l = y.line_graph();
        let back = line_graph_reconstruct(&l, 60).unwrap().expect("line graphs reconstruct");
        let used: Vec<usize> = (0..back.n()).filter(|&v| back.degree(v) > 0).collect();
        let back = Graph::from_fn(used.len(), |a, b| back.adjacent(used[a], used[b]));
        prop_assert!(isomorphic(&Configuration::adjacency(&back), &Configuration::adjacency(&y), 60).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn rank4_slack_grows_with_epsilon(e1 in 0.001f64..1.0, e2 in 0.001f64..1.0) {
        let (lo, hi) = (e1.min(e2), e1.max(e2));
        for s in ["hamming:3,6", "johnson:10,3"] {
            let cfg = generate(parse_family(s).unwrap()).unwrap().config;
            let scheme = Rank4Scheme::from_config(&cfg).unwrap();
            for f in [constituent_spectral_bound, merged_spectral_bound] {
                if let Ok(a) = f(&scheme, lo).unwrap() {
                    let b = f(&scheme, hi).unwrap();
                    prop_assert!(b.is_ok(), "{s}: applicable at {lo} but not at {hi}");
                    prop_assert!(b.unwrap().slack >= a.slack);
                }
            }
        }
    }
}

#[test]
fn metsch_geometries_verify() {
    for s in 5..10 {
        let l = generate(parse_family(&format!("lattice:{s}")).unwrap()).unwrap().graph.unwrap();
        let geo = metsch_lines(&l, s as u64 - 2, s as u64 - 2, 2, 2).unwrap().unwrap();
        assert_eq!(verify_clique_geometry(&l, &geo.lines).unwrap().m, geo.m);
    }
    for s in 11..15 {
        let t = generate(parse_family(&format!("triangular:{s}")).unwrap()).unwrap().graph.unwrap();
        let geo = metsch_lines(&t, s as u64 - 2, s as u64 - 2, 4, 2).unwrap().unwrap();
        assert_eq!(verify_clique_geometry(&t, &geo.lines).unwrap().m, geo.m);
    }
}
