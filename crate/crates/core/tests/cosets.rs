use weylbn::cosets::{
    case1_bound_check, double_coset_count, double_coset_count_naive, lemma2_sweep, parabolic_orbit,
    prop7_weight_sets, stembridge_witness, w0_negation_map, ParabolicChoice,
};
use weylbn::rootsys::{Family, RootSystem};
use weylbn::Error;

fn choice(family: Family, rank: usize, node: usize) -> ParabolicChoice {
    ParabolicChoice::new(&RootSystem::of(family, rank).unwrap(), node - 1).unwrap()
}

#[test]
fn orbit_method_matches_exhaustive_oracle() {
    let mut cases = vec![(Family::F, 4)];
    for family in Family::ALL {
        for rank in 2..=3 {
            if family.admits_rank(rank) {
                cases.push((family, rank));
            }
        }
    }
    for (family, rank) in cases {
        for node in 1..=rank {
            let c = choice(family, rank, node);
            let fast = double_coset_count(&c).unwrap();
            assert_eq!(fast.count, double_coset_count_naive(&c).unwrap(), "{family}{rank} node {node}");
            assert_eq!(fast.orbit_sizes.iter().sum::<usize>(), fast.index);
        }
    }
}

#[test]
fn frozen_counts() {
    assert_eq!(double_coset_count(&choice(Family::A, 3, 1)).unwrap().count, 2);
    assert_eq!(double_coset_count(&choice(Family::A, 3, 2)).unwrap().count, 3);
    assert_eq!(double_coset_count(&choice(Family::B, 2, 1)).unwrap().count, 3);
    assert_eq!(double_coset_count(&choice(Family::B, 2, 2)).unwrap().count, 3);
    assert_eq!(double_coset_count(&choice(Family::G, 2, 1)).unwrap().count, 4);
    assert_eq!(double_coset_count(&choice(Family::G, 2, 2)).unwrap().count, 4);
    assert_eq!(double_coset_count_naive(&choice(Family::A, 2, 1)).unwrap(), 2);
}

#[test]
fn orbit_sizes() {
    for m in 1..=8 {
        assert_eq!(parabolic_orbit(&choice(Family::A, m, 1)).unwrap().len(), m + 1);
    }
    let e8 = RootSystem::of(Family::E, 8).unwrap();
    let node = (0..8)
        .find(|&a| {
            let sizes = double_coset_count(&ParabolicChoice::new(&e8, a).unwrap()).unwrap();
            sizes.index == 241_920
        })
        .expect("an E8 node with index 241920");
    assert_eq!(node + 1, 5);
}

#[test]
fn naive_oracle_refuses_large_groups() {
    assert!(matches!(
        double_coset_count_naive(&choice(Family::E, 7, 1)),
        Err(Error::GroupTooLarge { .. })
    ));
}

#[test]
fn sweep_has_two_exactly_on_type_a_end_nodes() {
    let reports = lemma2_sweep(8).unwrap();
    for r in &reports {
        // D3 is A3 with nodes 2 and 3 at the ends of the chain 2-1-3.
        let a_end = (r.family == Family::A && (r.node == 1 || r.node == r.rank))
            || (r.family == Family::D && r.rank == 3 && r.node != 1);
        assert_eq!(r.count == 2, a_end, "{r:?}");
        assert!(r.pass);
    }
    let r2 = lemma2_sweep(2).unwrap();
    assert_eq!(r2.len(), 10);
    assert!(matches!(lemma2_sweep(1), Err(Error::RankTooSmall { .. })));
}

#[test]
fn witness_examples() {
    let w = stembridge_witness(&choice(Family::A, 3, 2)).unwrap();
    assert_eq!(w.word, "2 1 3 2");
    assert_eq!(w.length, 4);
    assert!(w.pass);
    let d4 = stembridge_witness(&choice(Family::D, 4, 1)).unwrap();
    assert_eq!(d4.length, 6);
    assert!(d4.pass && d4.single_commuting_swap);
    assert!(matches!(
        stembridge_witness(&choice(Family::A, 5, 1)),
        Err(Error::WitnessNotApplicable(_))
    ));
}

#[test]
fn case1_examples() {
    let b2 = case1_bound_check(&choice(Family::B, 2, 1)).unwrap();
    assert_eq!((b2.size_psi, b2.size_psi_prime, b2.holds), (8, 2, true));
    let b3 = case1_bound_check(&choice(Family::B, 3, 2)).unwrap();
    assert_eq!((b3.size_psi, b3.size_psi_prime, b3.holds), (18, 4, true));
    let g2 = case1_bound_check(&choice(Family::G, 2, 1)).unwrap();
    assert_eq!((g2.size_psi, g2.size_psi_prime, g2.holds), (12, 2, true));
}

#[test]
fn prop7_examples() {
    let rs = RootSystem::of(Family::A, 2).unwrap();
    let s = prop7_weight_sets(2).unwrap();
    assert_eq!(s.difference_coords(&rs), vec![vec![0, 1], vec![1, 1]]);
    let rs3 = RootSystem::of(Family::A, 3).unwrap();
    let s3 = prop7_weight_sets(3).unwrap();
    assert_eq!(s3.difference_coords(&rs3), vec![vec![0, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]);
    assert!(matches!(prop7_weight_sets(1), Err(Error::RankTooSmall { .. })));
    assert_eq!(w0_negation_map(&rs).unwrap(), vec![1, 0]);
    assert_eq!(w0_negation_map(&RootSystem::of(Family::A, 1).unwrap()).unwrap(), vec![0]);
}
