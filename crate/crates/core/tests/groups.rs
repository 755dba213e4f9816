mod common;

use std::collections::BTreeSet;

use heartlab::galoisprobe::group_cycle_types;
use heartlab::groupzoo::{self, GroupId};
use heartlab::permgroup::{PermGroup, Permutation};
use num_integer::Integer;
use proptest::prelude::*;

fn small_zoo() -> Vec<GroupId> {
    let mut ids: Vec<GroupId> = (3..=8).flat_map(|n| [GroupId::Symmetric(n), GroupId::Alternating(n)]).collect();
    ids.extend([11, 12, 22].map(GroupId::Mathieu));
    for (m, q) in groupzoo::projective_parameters(40) {
        ids.push(GroupId::Psl { m, q });
        ids.push(GroupId::Pgl { m, q });
    }
    ids
}

#[test]
fn chain_order_matches_breadth_first_closure() {
    for id in small_zoo() {
        let g = id.build().unwrap().group;
        if g.order() > 1_000_000 {
            continue;
        }
        assert_eq!(common::bfs_closure(g.generators()).len() as u128, g.order(), "{id}");
    }
}

#[test]
fn generator_products_are_members() {
    for id in small_zoo() {
        let g = id.build().unwrap().group;
        for a in g.generators() {
            for b in g.generators() {
                assert!(g.contains(&a.compose(b).unwrap()), "{id}");
            }
        }
    }
}

#[test]
fn transitivity_divides_order() {
    for id in small_zoo() {
        let g = id.build().unwrap().group;
        let (n, t) = (g.degree(), g.transitivity_degree());
        let falling: u128 = (0..t).map(|j| (n - j) as u128).product();
        assert_eq!(g.order() % falling, 0, "{id}: {t}-transitive");
    }
}

#[test]
fn transitivity_matches_tuple_enumeration() {
    for name in ["S5", "A6", "PSL(2,7)", "PGL(2,5)", "PSL(3,2)", "M11"] {
        let g = name.parse::<GroupId>().unwrap().build().unwrap().group;
        let elements = common::bfs_closure(g.generators());
        assert_eq!(common::transitivity_by_tuples(&elements, g.degree()), g.transitivity_degree(), "{name}");
    }
}

#[test]
fn mathieu_23_over_22() {
    let m22 = groupzoo::mathieu(22).unwrap();
    let m23 = groupzoo::mathieu(23).unwrap();
    assert_eq!(m23.order(), 23 * m22.order());
}

#[test]
fn projective_groups_are_doubly_transitive_with_formula_orders() {
    for (m, q) in groupzoo::projective_parameters(100) {
        for id in [GroupId::Psl { m, q }, GroupId::Pgl { m, q }] {
            let g = id.build().unwrap().group;
            assert_eq!(g.order(), id.order_formula(), "{id}");
            assert!(g.transitivity_degree() >= 2, "{id}");
        }
    }
}

#[test]
fn psl_equals_pgl_exactly_when_coprime() {
    for (m, q) in groupzoo::projective_parameters(100) {
        let s = groupzoo::psl(m, q).unwrap();
        let g = groupzoo::pgl(m, q).unwrap();
        let coprime = (m as u64).gcd(&(q - 1)) == 1;
        let mutual = g.generators().iter().all(|x| s.contains(x)) && s.generators().iter().all(|x| g.contains(x));
        assert_eq!(coprime, s.order() == g.order() && mutual, "({m},{q})");
    }
}

#[test]
fn m11_cycle_types_match_enumeration() {
    let g = groupzoo::mathieu(11).unwrap();
    let set = group_cycle_types(&g, 1, 0);
    assert!(set.exact);
    let oracle: BTreeSet<Vec<usize>> = common::bfs_closure(g.generators())
        .iter()
        .map(|e| common::cycle_lengths(e))
        .collect();
    let got: BTreeSet<Vec<usize>> = set.types.iter().map(|t| t.lengths().to_vec()).collect();
    assert_eq!(got, oracle);
    assert!(got.contains(&vec![11]) && got.contains(&vec![8, 2, 1]));
}

fn zoo_group() -> impl Strategy<Value = PermGroup> {
    prop::sample::select(vec!["M11", "M12", "M24", "PSL(3,4)", "PGL(2,9)", "S9", "A10"])
        .prop_map(|s| s.parse::<GroupId>().unwrap().build().unwrap().group)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cycle_type_is_a_class_function(g in zoo_group(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let p = g.random_element(s1);
        let x = g.random_element(s2);
        let conj = x.compose(&p).unwrap().compose(&x.inverse()).unwrap();
        prop_assert_eq!(conj.cycle_type(), p.cycle_type());
        prop_assert!(g.contains(&conj));
    }

    #[test]
    fn random_elements_are_members(g in zoo_group(), seed in any::<u64>()) {
        prop_assert!(g.contains(&g.random_element(seed)));
    }

    #[test]
    fn composition_is_pointwise(images in Just((0..9).collect::<Vec<usize>>()).prop_shuffle(),
                                other in Just((0..9).collect::<Vec<usize>>()).prop_shuffle()) {
        let p = Permutation::new(images.clone()).unwrap();
        let q = Permutation::new(other.clone()).unwrap();
        let pq = p.compose(&q).unwrap();
        for x in 0..9 {
            prop_assert_eq!(pq.apply(x), images[other[x]]);
        }
    }
}
