use coherent_motion::catalog::{generate, parse_family};
use coherent_motion::drg::parse_array;
use coherent_motion::motion::{
    bipartite_spectral_bound, bipartite_spectral_formula, bound_from_distinguishing, bounded_degree_bound,
    order_and_thickness_bounds, primitive_drg_bound, spectral_bound, spectral_formula,
};
use coherent_motion::oracle::{automorphisms, exact_motion};
use coherent_motion::rank4::{
    constituent_cubic, constituent_spectral_bound, cubic_residual, diam2_distinguishing_bound,
    merged_spectral_bound, param_inequalities, Rank4Scheme,
};
use coherent_motion::{certify, structure_constants, Color, Configuration, Error, Graph, Rule, StructureConstants};

fn config(s: &str) -> Configuration {
    generate(parse_family(s).unwrap()).unwrap().config
}

fn graph(s: &str) -> Graph {
    generate(parse_family(s).unwrap()).unwrap().graph.unwrap()
}

fn real_roots_ok(cfg: &Configuration) {
    let s = Rank4Scheme::from_config(cfg).unwrap();
    for c in 1..4 as Color {
        let k = s.constants().degree(c).max(1) as f64;
        let r = cubic_residual(cfg, c).unwrap();
        assert!(r <= 1e-6 * k.powi(3), "color {c}: residual {r}");
    }
}

#[test]
fn cubic_roots() {
    let j = config("johnson:7,3");
    let s = Rank4Scheme::from_config(&j).unwrap();
    // distance 1 constituent: nontrivial eigenvalues 5, 0, -3
    let c = constituent_cubic(&s, 1).unwrap();
    assert_eq!(c, [1, -2, -15, 0]);
    real_roots_ok(&j);
    real_roots_ok(&config("heawood"));
    real_roots_ok(&config("cyclotomic:13,3"));
    assert!(Rank4Scheme::from_config(&config("petersen")).is_err());
    assert!(constituent_cubic(&s, 0).is_err());
}

#[test]
fn relabeling_is_by_degree() {
    // distance degrees of J(7,3): 12, 18, 4
    let s = Rank4Scheme::from_config(&config("johnson:7,3")).unwrap();
    assert_eq!(s.relabeling(), [0, 3, 1, 2]);
    assert_eq!((s.k(1), s.k(2), s.k(3)), (4, 12, 18));
}

#[test]
fn cyclotomic_rank4_bounds() {
    let cfg = config("cyclotomic:13,3");
    let s = Rank4Scheme::from_config(&cfg).unwrap();
    assert_eq!(s.diameter(), Some(2));
    let d2 = diam2_distinguishing_bound(&s).unwrap();
    assert_eq!((d2.bound, d2.gamma), (2, 1.0));
    assert!(exact_motion(&cfg, 60).unwrap().unwrap() >= 2);

    let na = constituent_spectral_bound(&s, 0.01).unwrap().unwrap_err();
    assert_eq!((na.lhs, na.rhs), (Some(100.0), Some(4.0)));
    assert!(merged_spectral_bound(&s, 0.01).unwrap().is_err());

    let rep = param_inequalities(&s, 0.5).unwrap().unwrap();
    assert!(!rep.precondition.holds);
    assert_eq!((rep.precondition.lhs, rep.precondition.rhs), (4.0, 1.0));
    assert!(rep.inequalities.is_empty());
    assert!(rep.triangle_violations.is_empty() && rep.consistent);

    let sc = structure_constants(&cfg).unwrap();
    let b = bounded_degree_bound(&sc, 4, 13).unwrap().unwrap();
    assert_eq!(b.bound, 1);
    assert!(bounded_degree_bound(&sc, 3, 13).unwrap().is_err());
}

#[test]
fn diameter_three_is_refused() {
    let s = Rank4Scheme::from_config(&config("heawood")).unwrap();
    assert_eq!(s.diameter(), None);
    let j = Rank4Scheme::from_config(&config("johnson:7,3")).unwrap();
    assert_eq!(j.diameter(), Some(3));
    assert!(diam2_distinguishing_bound(&j).is_err());
    assert!(param_inequalities(&j, 0.1).unwrap().is_err());
}

#[test]
fn spectral_radius_bounds_hold_when_applicable() {
    // a rank-4 scheme whose two small constituents are nearly disjoint from
    // the largest: the distance scheme of a large Hamming graph, merged
    for s in ["hamming:3,6", "johnson:10,3", "cyclotomic:31,3", "cyclotomic:37,3"] {
        let cfg = config(s);
        let scheme = Rank4Scheme::from_config(&cfg).unwrap();
        for eps in [0.05, 0.2, 0.5, 0.9] {
            let r = scheme.relabeling();
            let xi = |colors: &[Color]| {
                let g = cfg.constituent_graph(colors);
                coherent_motion::drg::graph_spectrum(&g).zero_weight_radius
            };
            if let Ok(b) = constituent_spectral_bound(&scheme, eps).unwrap() {
                assert!(xi(&[r[1]]) <= b.bound + 1e-9, "{s} eps {eps}");
            }
            if let Ok(b) = merged_spectral_bound(&scheme, eps).unwrap() {
                assert!(xi(&[r[1], r[2]]) <= b.bound + 1e-9, "{s} eps {eps}");
            }
        }
    }
}

fn tampered(sc: &StructureConstants, extra: u64) -> StructureConstants {
    let r = sc.rank();
    let pairing = sc.pairing().to_vec();
    let diagonal = (0..r as Color).map(|c| sc.is_diagonal(c)).collect();
    let mut entries = Vec::new();
    for t in 0..r as Color {
        for &(i, j, p) in sc.entries(t) {
            let bump = if (i, j, t) == (1, 1, 1) { extra } else { 0 };
            entries.push((i, j, t, p + bump));
        }
    }
    if sc.p(1, 1, 1) == 0 {
        entries.push((1, 1, 1, extra));
    }
    StructureConstants::from_entries(r, pairing, diagonal, entries).unwrap()
}

#[test]
fn triangle_bounds_flag_a_forged_tensor() {
    let sc = structure_constants(&config("cyclotomic:13,3")).unwrap();
    let s = Rank4Scheme::from_constants(tampered(&sc, 10)).unwrap();
    let rep = param_inequalities(&s, 0.5).unwrap().unwrap();
    assert!(!rep.triangle_violations.is_empty());
    assert!(!rep.consistent);
    assert!(rep.triangle_violations.iter().all(|q| !q.holds && q.lhs > q.rhs));
}

#[test]
fn triangle_bounds_hold_on_real_schemes() {
    for s in ["cyclotomic:13,3", "cyclotomic:19,3", "cyclotomic:31,3", "hamming:3,4"] {
        let scheme = Rank4Scheme::from_config(&config(s)).unwrap();
        if let Ok(rep) = param_inequalities(&scheme, 0.3).unwrap() {
            assert!(rep.consistent, "{s}: {:?}", rep.triangle_violations);
        }
    }
}

#[test]
fn distinguishing_rules() {
    let p = bound_from_distinguishing(&config("petersen")).unwrap();
    assert_eq!(p.bound, 6);
    let c6 = bound_from_distinguishing(&config("cycle:6")).unwrap();
    assert!(c6.bound <= 4);
    assert_eq!(exact_motion(&config("cycle:6"), 60).unwrap(), Some(4));
    let k2 = bound_from_distinguishing(&config("complete:2")).unwrap();
    assert_eq!(k2.bound, 2);
}

#[test]
fn spectral_rules() {
    let t5 = spectral_bound(&graph("triangular:5")).unwrap();
    assert_eq!(t5.bound, 0);
    assert_eq!(t5.inputs["q"], 4);
    assert!((t5.inputs["xi"].as_f64().unwrap() - 2.0).abs() < 1e-9);
    assert_eq!(spectral_formula(56, 10.0, 2.0, 4.0), 23);
    assert_eq!(spectral_formula(30, 5.0, 3.0, 2.5), 0);
    assert!(matches!(spectral_bound(&graph("path:4")), Err(Error::Irregular { .. })));

    let q3 = bipartite_spectral_bound(&graph("cocktail:4")).unwrap();
    assert_eq!(q3.bound, 0);
    assert!((q3.inputs["lambda2"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    let n = 1000usize;
    let want = (n as f64 * (0.5 - (300f64.sqrt() + 100.0) / 800.0)).ceil() as u64;
    assert_eq!(bipartite_spectral_formula(n, 400.0, 300f64.sqrt(), 100.0), want);
    assert!(matches!(bipartite_spectral_bound(&graph("cycle:7")), Err(Error::NotBalancedBipartite(_))));
}

#[test]
fn primitive_drg_rule() {
    let j = primitive_drg_bound(&parse_array("{12,6,2;1,4,9}").unwrap()).unwrap().unwrap();
    assert_eq!(j.bound, 3);
    assert_eq!(j.inputs["j"], 1);
    let p = primitive_drg_bound(&parse_array("{3,2;1,1}").unwrap()).unwrap().unwrap();
    assert_eq!(p.bound, 2);
    assert!(primitive_drg_bound(&parse_array("{2,1,1;1,1,2}").unwrap()).unwrap().is_err());
}

#[test]
fn order_and_thickness() {
    let o = order_and_thickness_bounds(10, 6, 0.5).unwrap();
    assert!((o.log10_order - (1.0 + 20.0 * 10f64.ln() / 6.0)).abs() < 1e-12);
    let petersen = automorphisms(&config("petersen"), 60).unwrap();
    assert!(petersen.log10_order() <= o.log10_order);
    let big = order_and_thickness_bounds(100, 50, 0.5).unwrap();
    assert!(big.ln_order.is_finite() && big.thickness.is_some());
    let near = order_and_thickness_bounds(100, 50, 1.0 - 1e-12).unwrap().thickness.unwrap();
    let nearer = order_and_thickness_bounds(100, 50, 1.0 - 1e-15).unwrap().thickness.unwrap();
    assert!(nearer > near);
    assert!(order_and_thickness_bounds(10, 6, 0.0).is_err());
    assert!(order_and_thickness_bounds(10, 6, 1.5).is_err());
}

#[test]
fn certify_examples() {
    let p = certify(&config("petersen")).unwrap();
    assert_eq!((p.bound, p.rule), (6, Rule::Distinguishing));
    assert!(p.all_rules.len() > 2);

    let j = certify(&config("johnson:7,3")).unwrap();
    assert_eq!(j.family.as_deref(), Some("johnson(7,3)"));
    assert_eq!(j.exact_motion, Some(20));
    // D_min is already 20, and ties go to the earlier rule
    assert_eq!((j.bound, j.rule), (20, Rule::Distinguishing));
    assert!(j.all_rules.iter().any(|r| r.rule == Rule::ExceptionalFamily && r.bound == Some(20)));

    let c = certify(&config("crown:4")).unwrap();
    assert_eq!(c.family.as_deref(), Some("cocktail(4)"));
    assert_eq!(c.exact_motion, Some(4));

    // the adjacency configuration is refined to the distance scheme first
    let adj = certify(&Configuration::adjacency(&graph("johnson:7,3"))).unwrap();
    assert_eq!(adj.bound, 20);

    let json = serde_json::to_value(&p).unwrap();
    for key in ["n", "bound", "rule", "inputs", "all_rules"] {
        assert!(json.get(key).is_some(), "{key}");
    }
    assert_eq!(json["rule"], "distinguishing");
}

#[test]
fn certify_is_deterministic() {
    let cfg = config("cyclotomic:13,3");
    let a = serde_json::to_string(&certify(&cfg).unwrap()).unwrap();
    let b = serde_json::to_string(&certify(&cfg).unwrap()).unwrap();
    assert_eq!(a, b);
    assert!(certify(&cfg).unwrap().family.is_none());
}
