// Validates the bundled fact table and citation registry.

use std::collections::HashSet;
use std::fs;

const FAMILIES: [&str; 4] = ["mathieu", "alternating", "psl-even", "psl-odd"];
const FLAGS: [&str; 4] = [
    "no_linear_at_min_degree",
    "no_real_rep_at_degree_g",
    "lie_type_char2",
    "wagner_char2_bound",
];
const COVER_RULES: [&str; 4] = [
    "feit_tits_transfer",
    "kleidman_liebeck_m4",
    "order7_cyclotomic",
    "g2_automatic",
];
const SYMBOLIC_BOUNDS: [&str; 4] = ["none", "q-1", "(q^m-q)/(q-1)", "2g"];

fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i + 1, l.split('\t').collect()))
}

fn check_selector(line: usize, selector: &str) {
    if selector == "*" {
        return;
    }
    for cond in selector.split(',') {
        let (var, value) = cond
            .split_once(">=")
            .or_else(|| cond.split_once('='))
            .unwrap_or_else(|| panic!("facts.tsv:{line}: bad selector {cond:?}"));
        assert!(
            ["n", "m", "q"].contains(&var) && value.parse::<u64>().is_ok(),
            "facts.tsv:{line}: bad selector {cond:?}"
        );
    }
}

fn main() {
    println!("cargo:rerun-if-changed=data/citations.tsv");
    println!("cargo:rerun-if-changed=data/facts.tsv");

    let citations = fs::read_to_string("data/citations.tsv").expect("data/citations.tsv");
    let mut keys = HashSet::new();
    for (line, fields) in records(&citations) {
        assert_eq!(fields.len(), 2, "citations.tsv:{line}: expected 2 fields");
        assert!(!fields[1].trim().is_empty(), "citations.tsv:{line}: empty reference");
        assert!(keys.insert(fields[0].to_string()), "citations.tsv:{line}: duplicate key");
    }

    let facts = fs::read_to_string("data/facts.tsv").expect("data/facts.tsv");
    for (line, fields) in records(&facts) {
        assert_eq!(fields.len(), 6, "facts.tsv:{line}: expected 6 fields");
        let [family, selector, bound, flags, cover, cites] = fields[..] else {
            unreachable!()
        };
        assert!(FAMILIES.contains(&family), "facts.tsv:{line}: unknown family {family}");
        check_selector(line, selector);
        match bound.parse::<u64>() {
            Ok(b) => assert!(b >= 2, "facts.tsv:{line}: bound below 2"),
            Err(_) => assert!(
                SYMBOLIC_BOUNDS.contains(&bound),
                "facts.tsv:{line}: unknown bound {bound}"
            ),
        }
        let flag_list: Vec<&str> = if flags == "-" { Vec::new() } else { flags.split(',').collect() };
        for f in &flag_list {
            assert!(FLAGS.contains(f), "facts.tsv:{line}: unknown flag {f}");
        }
        if bound == "none" {
            assert_eq!(cover, "-", "facts.tsv:{line}: rows without a bound carry no cover rule");
        } else {
            assert!(COVER_RULES.contains(&cover), "facts.tsv:{line}: unknown cover rule {cover}");
            let lie2 = flag_list.contains(&"lie_type_char2");
            assert_eq!(
                lie2,
                cover == "kleidman_liebeck_m4",
                "facts.tsv:{line}: characteristic-2 Lie type rows go with kleidman_liebeck_m4"
            );
        }
        assert!(!cites.is_empty(), "facts.tsv:{line}: no citation");
        for c in cites.split(',') {
            assert!(keys.contains(c), "facts.tsv:{line}: citation {c} not in the registry");
        }
    }
}
