use std::sync::Arc;

use weylbn::fingrp::{affine_group, affine_line_action, projective_space_action, special_linear_group};
use weylbn::titssys::{
    cell_size_formula_check, check_axioms, classify, coxeter_order_check, derive_weyl, find_s,
    intersection_identity_check, rank1_from_2transitive, rank1_round_trip, sl_rank1_column_system,
    standard_projective_system, standard_sl_system, star_property_check, weakly_split_brute, TitsSystemCandidate,
    DEFAULT_MAX_GROUP,
};

fn sizes(c: &TitsSystemCandidate) -> Vec<usize> {
    check_axioms(c, DEFAULT_MAX_GROUP).unwrap().sorted_cell_sizes()
}

#[test]
fn standard_examples() {
    let c = standard_sl_system(3, 2, DEFAULT_MAX_GROUP).unwrap();
    assert_eq!(derive_weyl(&c).unwrap().order(), 6);
    assert_eq!(find_s(&c).unwrap(), ["1", "2"]);
    assert_eq!(sizes(&c), [8, 16, 16, 32, 32, 64]);
    let c = standard_sl_system(2, 3, DEFAULT_MAX_GROUP).unwrap();
    assert_eq!(sizes(&c), [6, 18]);
    let r = check_axioms(&c, DEFAULT_MAX_GROUP).unwrap();
    assert!(r.pass && r.normalizer_is_b && r.bruhat_bijective);
}

#[test]
fn cell_formula() {
    for (n, p) in [(2, 2), (2, 3), (2, 5), (2, 7), (3, 2), (3, 3)] {
        let r = cell_size_formula_check(n, p, DEFAULT_MAX_GROUP).unwrap();
        assert!(r.pass, "{r:?}");
    }
}

#[test]
fn star_and_intersection() {
    for (n, p, h) in [(3, 2, 1), (3, 3, 4), (2, 5, 4)] {
        let c = standard_sl_system(n, p, DEFAULT_MAX_GROUP).unwrap();
        assert!(star_property_check(&c).unwrap());
        let i = intersection_identity_check(&c).unwrap();
        assert!(i.holds);
        assert_eq!(i.h_order, h);
    }
}

#[test]
fn coxeter_orders() {
    for (n, p) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let c = standard_sl_system(n, p, DEFAULT_MAX_GROUP).unwrap();
        let r = coxeter_order_check(&c).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.nodes, (1..n).collect::<Vec<_>>());
    }
}

#[test]
fn rank1_systems() {
    let sl32 = Arc::new(special_linear_group(3, 2, DEFAULT_MAX_GROUP).unwrap());
    let act = projective_space_action(sl32).unwrap();
    let c = rank1_from_2transitive(&act, 0, 6).unwrap();
    let r = check_axioms(&c, DEFAULT_MAX_GROUP).unwrap();
    assert!(r.pass);
    assert_eq!((r.group_order / r.b_order, r.b_order, r.rank, r.weyl_order), (7, 24, 1, 2));
    assert!(rank1_round_trip(&c).unwrap());

    let sl27 = Arc::new(special_linear_group(2, 7, DEFAULT_MAX_GROUP).unwrap());
    let act = projective_space_action(sl27).unwrap();
    let c = rank1_from_2transitive(&act, 0, 7).unwrap();
    let r = check_axioms(&c, DEFAULT_MAX_GROUP).unwrap();
    assert!(r.pass);
    assert_eq!(r.group_order / r.b_order, 8);
    assert!(intersection_identity_check(&c).unwrap().holds);

    for (n, p) in [(2, 2), (2, 3), (3, 2)] {
        let col = sl_rank1_column_system(n, p, DEFAULT_MAX_GROUP).unwrap();
        assert!(star_property_check(&col).unwrap());
        assert!(rank1_round_trip(&col).unwrap());
    }
}

#[test]
fn classification_is_monotone_and_matches_brute_force() {
    let mut systems = Vec::new();
    for (n, p) in [(2, 2), (2, 3), (2, 5), (2, 7), (3, 2), (3, 3)] {
        systems.push(standard_sl_system(n, p, DEFAULT_MAX_GROUP).unwrap());
    }
    for (n, p) in [(2, 2), (2, 3), (3, 2)] {
        systems.push(sl_rank1_column_system(n, p, DEFAULT_MAX_GROUP).unwrap());
    }
    systems.push(standard_projective_system(3, 2, DEFAULT_MAX_GROUP).unwrap());
    for q in [3, 5, 7] {
        let act = affine_line_action(Arc::new(affine_group(q).unwrap())).unwrap();
        systems.push(rank1_from_2transitive(&act, 0, q as u32 - 1).unwrap());
    }
    for c in &systems {
        assert!(check_axioms(c, DEFAULT_MAX_GROUP).unwrap().pass, "{}", c.label());
        let f = classify(c).unwrap();
        assert!(!f.split || (f.weakly_split && f.saturated), "{}", c.label());
        let expect_split = c.label() != "SL3(F2) column rank 1";
        assert_eq!(f.split, expect_split, "{}", c.label());
        if c.b().order() <= 500 {
            assert_eq!(weakly_split_brute(c).unwrap(), f.weakly_split, "{}", c.label());
        }
    }
}

#[test]
fn column_system_is_not_weakly_split() {
    // B is the stabilizer of a point of P^2(F_2), of shape 2^2:S_3, so
    // Fit(B) has order 4 and |H·Fit(B)| < |B|.
    let c = sl_rank1_column_system(3, 2, DEFAULT_MAX_GROUP).unwrap();
    let f = classify(&c).unwrap();
    assert_eq!((c.b().order(), f.h_order, f.fitting_order), (24, 4, 4));
    assert!(f.saturated && !f.weakly_split && !f.split);
}

#[test]
fn sl4f2_cells() {
    let r = cell_size_formula_check(4, 2, DEFAULT_MAX_GROUP).unwrap();
    assert!(r.pass);
    assert_eq!(r.group_order, 20160);
    assert_eq!(r.cells.len(), 24);
}

#[test]
fn rank_profile_method_agrees_with_enumeration() {
    use weylbn::titssys::matrix_coxeter_order_check;
    for (n, p) in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)] {
        let c = standard_sl_system(n, p, DEFAULT_MAX_GROUP).unwrap();
        let enumerated = coxeter_order_check(&c).unwrap();
        let profiled = matrix_coxeter_order_check(n, p).unwrap();
        assert!(enumerated.holds && profiled.holds);
        assert_eq!(enumerated.orders, profiled.orders);
        assert_eq!(enumerated.nodes, profiled.nodes);
    }
    let sl43 = matrix_coxeter_order_check(4, 3).unwrap();
    assert!(sl43.holds);
    assert_eq!(sl43.orders, [[1, 3, 2], [3, 1, 3], [2, 3, 1]]);
}
