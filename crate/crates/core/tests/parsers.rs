//! The fuzz target bodies, run over the checked-in seeds and over random
//! edits of them.

use std::path::PathBuf;

use coherent_motion::catalog::parse_family;
use coherent_motion::drg::parse_array;
use coherent_motion::{parse_configuration_json, parse_edge_list};
use proptest::prelude::*;

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| std::fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    out
}

fn edge_list(text: &str) {
    if let Ok(g) = parse_edge_list(text) {
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }
}

fn configuration(text: &str) {
    if let Ok(cfg) = parse_configuration_json(text) {
        assert!(cfg.verify().is_empty());
        assert_eq!(parse_configuration_json(&cfg.to_json()).unwrap(), cfg);
    }
}

fn array(text: &str) {
    if let Ok(a) = parse_array(text) {
        assert_eq!(parse_array(&a.to_string()).as_ref(), Ok(&a));
        let _ = a.validate();
        let _ = a.n();
    }
}

fn family(text: &str) {
    if let Ok(f) = parse_family(text) {
        let _ = f.order();
        let _ = f.canonical();
    }
}

const TARGETS: [(&str, fn(&str)); 4] = [
    ("parse_edge_list", edge_list),
    ("parse_configuration_json", configuration),
    ("parse_array", array),
    ("parse_family", family),
];

#[test]
fn seeds_parse() {
    for (target, _) in TARGETS {
        let all = seeds(target);
        assert!(!all.is_empty(), "{target}");
        let good = all.iter().filter(|s| match target {
            "parse_edge_list" => parse_edge_list(s).is_ok(),
            "parse_configuration_json" => parse_configuration_json(s).is_ok(),
            "parse_array" => parse_array(s).is_ok(),
            _ => parse_family(s).is_ok(),
        });
        assert!(good.count() > 0, "{target}: no seed parses");
    }
}

/// Replaces `len` characters at `at` (both taken modulo the length) with `insert`.
fn splice(s: &str, at: usize, len: usize, insert: &str) -> String {
    let chars: Vec<char> = s.chars().collect();
    let at = at % (chars.len() + 1);
    let end = (at + len).min(chars.len());
    chars[..at].iter().chain(insert.chars().collect::<Vec<_>>().iter()).chain(&chars[end..]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn edited_seeds_never_panic(
        which in 0usize..4,
        pick in any::<usize>(),
        at in any::<usize>(),
        len in 0usize..4,
        insert in "[0-9 ,;{}:\\[\\]\"a-z\n#-]{0,6}",
    ) {
        let (target, check) = TARGETS[which];
        let all = seeds(target);
        check(&splice(&all[pick % all.len()], at, len, &insert));
    }

    #[test]
    fn arbitrary_text_never_panics(text in "\\PC{0,40}") {
        for (_, check) in TARGETS {
            check(&text);
        }
    }
}
