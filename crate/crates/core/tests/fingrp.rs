use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weylbn::fingrp::{
    affine_group, affine_line_action, central_quotient, coset_action, cyclic_group, fitting_subgroup,
    fitting_subgroup_brute, is_nilpotent, projective_space_action, regular_action, special_linear_group,
    upper_triangular_b, FiniteGroup, GroupAction, DEFAULT_MAX_ORDER,
};

fn groups() -> Vec<FiniteGroup> {
    let mut out = Vec::new();
    for (n, p) in [(2, 2), (2, 3), (2, 5), (2, 7), (3, 2)] {
        let g = special_linear_group(n, p, DEFAULT_MAX_ORDER).unwrap();
        out.push(central_quotient(&g).unwrap());
        out.push(g);
    }
    for p in [3, 5, 7] {
        out.push(affine_group(p).unwrap());
    }
    out.push(cyclic_group(6).unwrap());
    out
}

#[test]
fn every_group_satisfies_the_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for g in groups() {
        assert!(g.check_axioms(), "{}", g.name());
        let n = g.order() as u32;
        let triples: Vec<(u32, u32, u32)> =
            (0..10_000).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))).collect();
        assert!(g.check_associative(triples), "{}", g.name());
    }
}

#[test]
fn large_groups_use_the_oracle() {
    let g = special_linear_group(3, 3, DEFAULT_MAX_ORDER).unwrap();
    assert_eq!(g.order(), 5616);
    assert!(!g.has_table());
    assert!(g.check_axioms());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = g.order() as u32;
    let triples: Vec<_> =
        (0..10_000).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    assert!(g.check_associative(triples));
}

#[test]
fn central_quotient_orders() {
    for (n, p) in [(2, 2), (2, 3), (2, 5), (2, 7), (3, 2), (3, 3)] {
        let g = special_linear_group(n, p, DEFAULT_MAX_ORDER).unwrap();
        let q = central_quotient(&g).unwrap();
        assert_eq!(q.order() * g.center(&g.whole()).order(), g.order());
    }
}

fn orbit_stabilizer_holds(a: &GroupAction) -> bool {
    let order = a.group().order();
    (0..a.num_points() as u32).all(|x| a.orbit(x).len() * a.stabilizer(x).order() == order)
}

#[test]
fn orbit_stabilizer_everywhere() {
    let mut actions = Vec::new();
    for (n, p) in [(2, 2), (2, 3), (2, 7), (3, 2)] {
        let g = Arc::new(special_linear_group(n, p, DEFAULT_MAX_ORDER).unwrap());
        let b = upper_triangular_b(&g).unwrap();
        actions.push(projective_space_action(g.clone()).unwrap());
        actions.push(coset_action(g.clone(), &b).unwrap());
        actions.push(regular_action(g).unwrap());
    }
    for p in [3, 5, 7] {
        actions.push(affine_line_action(Arc::new(affine_group(p).unwrap())).unwrap());
    }
    let c4 = Arc::new(cyclic_group(4).unwrap());
    actions.push(coset_action(c4.clone(), &c4.closure(&[2])).unwrap());
    for a in &actions {
        assert!(a.check_axioms());
        assert!(orbit_stabilizer_holds(a), "{}", a.group().name());
        let total: usize = a.orbits().iter().map(Vec::len).sum();
        assert_eq!(total, a.num_points());
    }
}

#[test]
fn two_transitivity_examples() {
    let sl32 = Arc::new(special_linear_group(3, 2, DEFAULT_MAX_ORDER).unwrap());
    assert!(projective_space_action(sl32).unwrap().is_2transitive());
    assert!(!regular_action(Arc::new(cyclic_group(4).unwrap())).unwrap().is_2transitive());
    assert!(affine_line_action(Arc::new(affine_group(5).unwrap())).unwrap().is_2transitive());
    let sl27 = Arc::new(special_linear_group(2, 7, DEFAULT_MAX_ORDER).unwrap());
    let a = projective_space_action(sl27).unwrap();
    assert_eq!(a.num_points(), 8);
    assert!(a.is_2transitive());
}

#[test]
fn fitting_agrees_with_brute_force() {
    let mut cases = Vec::new();
    for g in groups().into_iter().filter(|g| g.order() <= 500) {
        cases.push((Arc::new(g.clone()), g.whole()));
        if g.matrix_shape().is_some() {
            let b = upper_triangular_b(&g).unwrap();
            cases.push((Arc::new(g), b));
        }
    }
    let aff7 = Arc::new(affine_group(7).unwrap());
    let frobenius = aff7.filter_subgroup(|e| [1, 2, 4].contains(&e[1])).unwrap();
    assert_eq!(frobenius.order(), 21);
    cases.push((aff7, frobenius));
    for (g, h) in cases {
        let fit = fitting_subgroup(&g, &h).unwrap();
        let (brute, nilpotent) = fitting_subgroup_brute(&g, &h).unwrap();
        assert_eq!(fit, brute, "{}", g.name());
        assert!(is_nilpotent(&g, &fit));
        assert!(g.is_normal_in(&fit, &h));
        assert!(nilpotent.iter().all(|n| n.is_subset_of(&fit)));
        if h.order() == 21 {
            assert_eq!(fit.order(), 7);
        }
    }
}
