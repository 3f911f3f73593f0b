use std::collections::BTreeSet;

use weylbn::rootsys::{Family, RootSystem, RootSystemSpec};

/// Positive roots in simple-root coordinates, generated from the Cartan
/// matrix alone by root strings.
fn positive_roots_from_cartan(cartan: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let n = cartan.len();
    let unit = |i: usize| (0..n).map(|j| i64::from(i == j)).collect::<Vec<i64>>();
    let mut roots: BTreeSet<Vec<i64>> = (0..n).map(unit).collect();
    let mut layer: Vec<Vec<i64>> = roots.iter().cloned().collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if !roots.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if roots.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    roots
}

fn all_specs(max_rank: usize) -> Vec<RootSystemSpec> {
    Family::ALL
        .iter()
        .flat_map(|&f| (1..=max_rank).filter_map(move |r| RootSystemSpec::new(f, r).ok()))
        .collect()
}

#[test]
fn root_counts_are_frozen() {
    for spec in all_specs(8) {
        let m = spec.rank;
        let expected = match spec.family {
            Family::A => m * (m + 1),
            Family::B | Family::C => 2 * m * m,
            Family::D => 2 * m * (m - 1),
            Family::G => 12,
            Family::F => 48,
            Family::E => [72, 126, 240][m - 6],
            Family::BC => 2 * m * m + 2 * m,
        };
        let rs = RootSystem::build(spec).unwrap();
        assert_eq!(rs.num_roots(), expected, "{spec}");
        assert_eq!(rs.num_positive() * 2, expected, "{spec}");
    }
}

#[test]
fn positive_roots_match_root_string_oracle() {
    for spec in all_specs(8).into_iter().filter(|s| s.family != Family::BC) {
        let rs = RootSystem::build(spec).unwrap();
        let got: BTreeSet<Vec<i64>> =
            (0..rs.num_roots()).filter(|&i| rs.is_positive(i)).map(|i| rs.simple_coords(i).to_vec()).collect();
        assert_eq!(got, positive_roots_from_cartan(rs.cartan()), "{spec}");
    }
}

#[test]
fn bc_is_b_union_doubled_short_roots() {
    for m in 1..=6 {
        let bc = RootSystem::of(Family::BC, m).unwrap();
        let b = RootSystem::of(Family::B, m).unwrap();
        assert_eq!(bc.scale(), b.scale());
        let bc_set: BTreeSet<Vec<i64>> = bc.roots().iter().cloned().collect();
        let mut union: BTreeSet<Vec<i64>> = b.roots().iter().cloned().collect();
        for r in b.roots() {
            if r.iter().filter(|&&x| x != 0).count() == 1 {
                union.insert(r.iter().map(|x| 2 * x).collect());
            }
        }
        assert_eq!(bc_set, union, "BC{m}");
        assert!(!bc.is_reduced());
        assert_eq!(bc.nondivisible_core().unwrap().cartan(), b.cartan());
    }
}

#[test]
fn invariants_hold_everywhere() {
    for spec in all_specs(8) {
        let rs = RootSystem::build(spec).unwrap();
        rs.check_invariants().unwrap_or_else(|e| panic!("{spec}: {e}"));
        for (a, row) in rs.cartan().iter().enumerate() {
            assert_eq!(row[a], 2);
            if rs.is_reduced() {
                assert!(row.iter().enumerate().all(|(b, &x)| b == a || (-3..=0).contains(&x)));
            }
        }
    }
}

#[test]
fn coxeter_matrices_agree() {
    for spec in all_specs(8).into_iter().filter(|s| s.family != Family::BC) {
        let rs = RootSystem::build(spec).unwrap();
        let m = rs.coxeter_matrix();
        assert_eq!(m, rs.coxeter_matrix_from_cartan(), "{spec}");
        for a in 0..spec.rank {
            assert_eq!(m.get(a, a), 1);
            for b in 0..spec.rank {
                assert_eq!(m.get(a, b), m.get(b, a));
                if a != b {
                    assert!([2, 3, 4, 6].contains(&m.get(a, b)));
                }
            }
        }
    }
}

#[test]
fn reflections_are_involutions_preserving_the_root_set() {
    for spec in all_specs(5) {
        let rs = RootSystem::build(spec).unwrap();
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                let img = rs.reflect_root(a, b);
                assert_eq!(rs.reflect_root(a, img), b);
            }
            assert_eq!(rs.reflect_root(a, a), rs.negate(a));
        }
    }
}

#[test]
fn spec_admissibility() {
    assert!(RootSystemSpec::new(Family::E, 5).is_err());
    assert!(RootSystemSpec::new(Family::F, 3).is_err());
    assert!(RootSystemSpec::new(Family::G, 3).is_err());
    assert!(RootSystemSpec::new(Family::D, 2).is_err());
    assert!(RootSystemSpec::new(Family::A, 0).is_err());
    assert_eq!("e8".parse::<RootSystemSpec>().unwrap(), RootSystemSpec::new(Family::E, 8).unwrap());
    assert_eq!("BC2".parse::<RootSystemSpec>().unwrap().to_string(), "BC2");
}
