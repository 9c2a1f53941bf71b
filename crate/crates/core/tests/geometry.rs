use coherent_motion::catalog::{generate, parse_family, Confirmation};
use coherent_motion::geometry::{
    clique_number, delsarte_clique_bound, is_delsarte_clique, line_graph_reconstruct, metsch_lines,
    seidel_recognize, sun_wilmes_bound, verify_clique_geometry, SeidelTag,
};
use coherent_motion::oracle::isomorphic;
use coherent_motion::rank4::oriented_route;
use coherent_motion::{Configuration, Error, Graph, Rule};

fn graph(s: &str) -> Graph {
    generate(parse_family(s).unwrap()).unwrap().graph.unwrap()
}

fn adj(g: &Graph) -> Configuration {
    Configuration::adjacency(g)
}

#[test]
fn metsch_on_triangular_and_lattice() {
    let t = graph("triangular:11");
    let geo = metsch_lines(&t, 9, 9, 4, 2).unwrap().unwrap();
    assert_eq!(geo.lines.len(), 11);
    assert!(geo.lines.iter().all(|l| l.len() == 10));
    assert!(geo.incidence.iter().all(|&c| c == 2));
    let rep = verify_clique_geometry(&t, &geo.lines).unwrap();
    assert_eq!((rep.m, rep.mu, rep.mu_bound), (2, 4, 4));
    assert!(rep.psd_ok && rep.mu_bound_ok);

    let l = graph("lattice:6");
    let geo = metsch_lines(&l, 4, 4, 2, 2).unwrap().unwrap();
    assert_eq!(geo.lines.len(), 12);
    assert!(geo.lines.iter().all(|l| l.len() == 6));
    assert_eq!(verify_clique_geometry(&l, &geo.lines).unwrap().m, 2);
}

#[test]
fn metsch_refusals() {
    let p = graph("petersen");
    let na = metsch_lines(&p, 0, 0, 1, 2).unwrap().unwrap_err();
    assert!(na.condition.contains("degree"));
    assert_eq!((na.lhs, na.rhs), (Some(3.0), Some(3.0)));
    // supplied lambda range excludes the real value
    assert!(matches!(metsch_lines(&p, 1, 1, 1, 2), Err(Error::InvalidParameters(_))));
    assert!(matches!(metsch_lines(&p, 0, 0, 0, 2), Err(Error::InvalidParameters(_))));
    let two = Graph::from_edges(4, [(0, 1), (2, 3)]);
    assert!(matches!(metsch_lines(&two, 0, 0, 1, 1), Err(Error::Disconnected(..))));
}

#[test]
fn johnson_cliques_certify_smallest_eigenvalue() {
    let (m, t) = (7usize, 3usize);
    let g = graph("johnson:7,3");
    // vertex order of the generator: t-subsets in lexicographic order
    let mut sets = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                sets.push([a, b, c]);
            }
        }
    }
    assert_eq!(sets.len(), g.n());
    let mut lines = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            lines.push((0..sets.len()).filter(|&v| sets[v].contains(&a) && sets[v].contains(&b)).collect::<Vec<_>>());
        }
    }
    assert!(lines.iter().all(|l| l.len() == m - 2));
    let rep = verify_clique_geometry(&g, &lines).unwrap();
    assert_eq!(rep.m, t);
    assert_eq!(rep.drg_diameter, Some(3));
    assert_eq!((rep.mu, rep.mu_bound), (4, 4));
    assert!(rep.psd_ok);
    assert!((rep.psd_min_eigenvalue - 0.0).abs() < 1e-9);

    let mut broken = lines.clone();
    broken[0].pop();
    assert!(matches!(verify_clique_geometry(&g, &broken), Err(Error::InvalidParameters(_))));
}

#[test]
fn delsarte_bounds_cap_clique_numbers() {
    assert_eq!(delsarte_clique_bound(6.0, -2.0).unwrap(), 4.0);
    assert_eq!(delsarte_clique_bound(12.0, -3.0).unwrap(), 5.0);
    assert!(delsarte_clique_bound(6.0, 0.0).is_err());
    assert!(is_delsarte_clique(4, 6.0, -2.0));
    for s in [
        "petersen", "heawood", "johnson:7,3", "hamming:3,3", "triangular:6", "lattice:5", "cocktail:5", "cycle:7",
        "kneser:7,2", "hamming:4,2",
    ] {
        let g = graph(s);
        let spec = coherent_motion::drg::graph_spectrum(&g);
        let k = g.regular_degree().unwrap() as f64;
        let b = delsarte_clique_bound(k, spec.theta_min).unwrap();
        assert!(clique_number(&g) as f64 <= b + 1e-9, "{s}");
    }
}

#[test]
fn line_graph_round_trips() {
    let k5 = Graph::from_fn(5, |_, _| true);
    let y = line_graph_reconstruct(&graph("triangular:5"), 60).unwrap().unwrap();
    assert!(isomorphic(&adj(&y), &adj(&k5), 60).unwrap());

    let p = graph("petersen");
    let y = line_graph_reconstruct(&p.line_graph(), 60).unwrap().unwrap();
    assert!(isomorphic(&adj(&y), &adj(&p), 60).unwrap());
    assert!(line_graph_reconstruct(&p, 60).unwrap().is_none());
}

#[test]
fn seidel_tags() {
    let t7 = seidel_recognize(&graph("triangular:7")).unwrap().unwrap();
    assert_eq!(t7.tag, SeidelTag::Triangular { s: 7 });
    assert_eq!(t7.srg, Some((21, 10, 5, 4)));
    assert_eq!(t7.confirmation, Confirmation::Isomorphism);

    let l5 = seidel_recognize(&graph("lattice:5")).unwrap().unwrap();
    assert_eq!(l5.tag, SeidelTag::Lattice { s: 5 });
    assert_eq!(l5.srg, Some((25, 8, 3, 2)));

    let p = seidel_recognize(&graph("petersen")).unwrap().unwrap();
    assert_eq!(p.tag, SeidelTag::Sporadic { n: 10 });

    let lp = seidel_recognize(&graph("petersen").line_graph()).unwrap().unwrap();
    assert_eq!(lp.tag, SeidelTag::LineOfTriangleFree);

    let k34 = Graph::from_fn(7, |u, v| (u < 3) != (v < 3));
    let grid = seidel_recognize(&k34.line_graph()).unwrap().unwrap();
    assert_eq!(grid.tag, SeidelTag::Grid { m1: 3, m2: 4 });

    let na = seidel_recognize(&graph("johnson:7,3")).unwrap().unwrap_err();
    assert_eq!(na.lhs.map(f64::round), Some(-3.0));
    assert!(seidel_recognize(&graph("path:4")).is_err());
}

#[test]
fn sun_wilmes_on_johnson_pairs() {
    let cfg = generate(parse_family("johnson:8,2").unwrap()).unwrap().config;
    let cert = sun_wilmes_bound(&cfg, &[1]).unwrap().unwrap();
    assert_eq!(cert.rule, Rule::SunWilmes);
    assert_eq!(cert.inputs["clique_size"], 7);
    assert_eq!(cert.inputs["alpha_num"], 2);
    // ceil(n / |C|)
    assert_eq!(cert.bound, 4);
    assert!(sun_wilmes_bound(&cfg, &[2]).unwrap().is_err());
    assert!(sun_wilmes_bound(&cfg, &[0]).is_err());
}

/// Orbital configuration of a permutation group given by generators.
fn orbital_configuration(n: usize, gens: &[Vec<usize>]) -> Configuration {
    let mut group = vec![(0..n).collect::<Vec<_>>()];
    let mut i = 0;
    while i < group.len() {
        for g in gens {
            let h: Vec<usize> = (0..n).map(|x| g[group[i][x]]).collect();
            if !group.contains(&h) {
                group.push(h);
            }
        }
        i += 1;
    }
    let mut color = vec![usize::MAX; n * n];
    let mut next = 0;
    for u in 0..n {
        for v in 0..n {
            if color[u * n + v] != usize::MAX {
                continue;
            }
            for g in &group {
                color[g[u] * n + g[v]] = next;
            }
            next += 1;
        }
    }
    Configuration::from_matrix(n, &color).unwrap()
}

#[test]
fn oriented_rank4_routing() {
    // the alternating group on four points acting on the six edges of K4
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let on_edges = |p: [usize; 4]| -> Vec<usize> {
        edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                edges.iter().position(|&e| e == (x, y)).unwrap()
            })
            .collect()
    };
    let cfg = orbital_configuration(6, &[on_edges([1, 2, 0, 3]), on_edges([0, 2, 3, 1])]);
    assert_eq!(cfg.rank(), 4);
    let oriented = (0..4).filter(|&c| cfg.paired(c) != c).count();
    assert_eq!(oriented, 2);
    // the undirected color pairs opposite edges: a perfect matching
    let na = oriented_route(&cfg).unwrap().unwrap_err();
    assert!(na.condition.contains("strongly regular"));
    let exact = coherent_motion::oracle::exact_motion(&cfg, 60).unwrap().unwrap();
    assert!(coherent_motion::certify(&cfg).unwrap().bound <= exact as u64);
}

#[test]
fn bang_constraints_on_diameter_three() {
    use coherent_motion::drg::parse_array;
    use coherent_motion::geometry::{bang_check, bang_constraints};
    // beta = 2: b2 = 2 lambda, c3 = 6
    let ok = bang_constraints(5, 10, 6);
    assert_eq!(ok.beta, Some(2));
    assert!(ok.consistent);
    assert!(!bang_constraints(5, 9, 6).consistent);
    assert!(!bang_constraints(1, 4, 6).consistent);
    assert_eq!(bang_constraints(5, 10, 7).beta, None);

    // generalized hexagon of order (2,2): k = 6 is below the threshold
    let na = bang_check(&parse_array("{6,4,4;1,1,3}").unwrap()).unwrap().unwrap_err();
    assert_eq!((na.lhs, na.rhs), (Some(6.0), Some(24.0)));
    let na = bang_check(&parse_array("{12,6,2;1,4,9}").unwrap()).unwrap().unwrap_err();
    assert!(na.condition.contains("mu"));
    assert!(bang_check(&parse_array("{3,2;1,1}").unwrap()).unwrap().is_err());
}
