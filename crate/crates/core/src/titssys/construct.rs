//! Constructors for the finite example systems.

use std::sync::Arc;

use super::{check_axioms, classify, ClassificationFlags, TitsReport, TitsSystemCandidate, DEFAULT_MAX_GROUP};
use crate::error::{Error, Result};
use crate::fingrp::{
    central_quotient, coset_action, image_in_quotient, monomial_n, special_linear_group, upper_triangular_b,
    FiniteGroup, GroupAction, GroupKind, Subgroup,
};

/// `(SL_n(F_p), upper triangular, monomial)`.
pub fn standard_sl_system(n: usize, p: u32, limit: usize) -> Result<TitsSystemCandidate> {
    let g = special_linear_group(n, p, limit)?;
    let b = upper_triangular_b(&g)?;
    let nn = monomial_n(&g)?;
    Ok(TitsSystemCandidate::new(format!("SL{n}(F{p}) standard"), Arc::new(g), b, nn))
}

/// The image of the standard system in `PSL_n(F_p)`.
pub fn standard_projective_system(n: usize, p: u32, limit: usize) -> Result<TitsSystemCandidate> {
    let sl = special_linear_group(n, p, limit)?;
    let q = central_quotient(&sl)?;
    let b = image_in_quotient(&sl, &q, &upper_triangular_b(&sl)?)?;
    let nn = image_in_quotient(&sl, &q, &monomial_n(&sl)?)?;
    Ok(TitsSystemCandidate::new(format!("PSL{n}(F{p}) standard"), Arc::new(q), b, nn))
}

/// `B = Stab(x)`, `N = Stab{x, x'}` for a 2-transitive action.
pub fn rank1_from_2transitive(action: &GroupAction, x: u32, x2: u32) -> Result<TitsSystemCandidate> {
    let n = action.num_points() as u32;
    if x >= n || x2 >= n || x == x2 {
        return Err(Error::InvalidArgument(format!("need two distinct points below {n}, got {x} and {x2}")));
    }
    if !action.is_2transitive() {
        return Err(Error::NotTwoTransitive);
    }
    let b = action.stabilizer(x);
    let nn = action.setwise_stabilizer(&[x, x2]);
    let label = format!(
        "{} on {} points, x={}, x'={}",
        action.group().name(),
        n,
        action.label(x),
        action.label(x2)
    );
    Ok(TitsSystemCandidate::new(label, action.group().clone(), b, nn))
}

/// Whether `g X g^-1 = Y` (same order, generators of `X` land in `Y`).
fn conjugates_onto(g: &FiniteGroup, x: u32, from: &Subgroup, to: &Subgroup) -> bool {
    from.order() == to.order() && from.gens().iter().all(|&y| to.contains(g.conj(x, y)))
}

/// `B` = matrices whose first column is zero below the top entry, `B'` =
/// matrices whose last column is zero above the bottom entry, `H = B ∩ B'`
/// and `N = H ∪ gH` for the first `g` with `gBg^-1 = B'` and `gB'g^-1 = B`.
pub fn sl_rank1_column_system(n: usize, p: u32, limit: usize) -> Result<TitsSystemCandidate> {
    if n < 2 {
        return Err(Error::InvalidArgument("column construction needs n >= 2".into()));
    }
    let g = special_linear_group(n, p, limit)?;
    let b = g.filter_subgroup(|m| (1..n).all(|i| m[i * n] == 0))?;
    let b2 = g.filter_subgroup(|m| (0..n - 1).all(|i| m[i * n + n - 1] == 0))?;
    let h = g.intersection(&b, &b2);
    let x = g
        .elements()
        .find(|&x| conjugates_onto(&g, x, &b, &b2) && conjugates_onto(&g, x, &b2, &b))
        .ok_or(Error::NoConjugatorFound)?;
    let mut gens = h.gens().to_vec();
    gens.push(x);
    let nn = g.closure(&gens);
    assert_eq!(nn.order(), 2 * h.order(), "x^2 lies in H");
    Ok(TitsSystemCandidate::new(format!("SL{n}(F{p}) column rank 1"), Arc::new(g), b, nn))
}

/// Rebuilds a rank-1 system from the coset action on `G/B` with
/// `x = B` and `x' = n_s B`, and compares cell sizes.
pub fn rank1_round_trip(c: &TitsSystemCandidate) -> Result<bool> {
    let a = c.analysis()?;
    if a.s.len() != 1 {
        return Ok(false);
    }
    let action = coset_action(c.group().clone(), c.b())?;
    let x = action.apply(c.group().identity(), 0);
    let x2 = action.apply(a.weyl.reps[a.s[0]], x);
    let d = rank1_from_2transitive(&action, x, x2)?;
    let mut before = a.cell_sizes();
    let mut after = d.analysis()?.cell_sizes();
    before.sort_unstable();
    after.sort_unstable();
    Ok(before == after && d.b() == c.b())
}

/// The non-standard rank-1 system in `PSL_3(F_2)` from a subgroup of order 21.
#[derive(Debug)]
pub struct Psl3f2Nonstandard {
    pub candidate: TitsSystemCandidate,
    pub action: GroupAction,
    pub two_transitive: bool,
    pub report: TitsReport,
    pub flags: ClassificationFlags,
    /// Orders of the proper standard parabolics of the standard rank-2
    /// system in the same group.
    pub standard_parabolic_orders: Vec<usize>,
}

impl Psl3f2Nonstandard {
    pub fn b_order(&self) -> usize {
        self.candidate.b().order()
    }

    pub fn is_nonstandard(&self) -> bool {
        !self.standard_parabolic_orders.contains(&self.b_order())
    }
}

/// Finds an order-21 subgroup of `PSL_3(F_2)` (generated by an element of
/// order 7 and one of order 3), acts on its 8 cosets and takes the induced
/// rank-1 system.
pub fn psl3f2_nonstandard() -> Result<Psl3f2Nonstandard> {
    let standard = standard_projective_system(3, 2, DEFAULT_MAX_GROUP)?;
    let g = standard.group().clone();
    debug_assert!(matches!(g.kind(), GroupKind::Matrix { projective: true, .. }));
    let sevens: Vec<u32> = g.elements().filter(|&x| g.element_order(x) == 7).collect();
    let threes: Vec<u32> = g.elements().filter(|&x| g.element_order(x) == 3).collect();
    let b = sevens
        .iter()
        .flat_map(|&a| threes.iter().map(move |&t| (a, t)))
        .map(|(a, t)| g.closure(&[a, t]))
        .find(|s| s.order() == 21)
        .ok_or_else(|| Error::SubgroupNotFound("no subgroup of order 21 in PSL3(F2)".into()))?;
    let action = coset_action(g.clone(), &b)?;
    let two_transitive = action.is_2transitive();
    let mut candidate = rank1_from_2transitive(&action, 0, 1)?;
    candidate.label = "PSL3(F2) order-21 rank 1".into();
    let report = check_axioms(&candidate, DEFAULT_MAX_GROUP)?;
    let flags = classify(&candidate)?;
    let standard_parabolic_orders = super::standard_parabolic_orders(&standard)?;
    Ok(Psl3f2Nonstandard { candidate, action, two_transitive, report, flags, standard_parabolic_orders })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingrp::{affine_group, affine_line_action, projective_space_action};

    #[test]
    fn column_matches_projective() {
        for (n, p, index) in [(2, 2, 3), (2, 3, 4), (3, 2, 7)] {
            let col = sl_rank1_column_system(n, p, DEFAULT_MAX_GROUP).unwrap();
            let r = check_axioms(&col, DEFAULT_MAX_GROUP).unwrap();
            assert!(r.pass, "{r:?}");
            assert_eq!(r.rank, 1);
            assert_eq!(r.group_order / r.b_order, index);
            let g = Arc::new(special_linear_group(n, p, DEFAULT_MAX_GROUP).unwrap());
            let act = projective_space_action(g).unwrap();
            let last = act.num_points() as u32 - 1;
            let proj = rank1_from_2transitive(&act, 0, last).unwrap();
            assert_eq!(proj.b(), col.b());
            assert_eq!(check_axioms(&proj, DEFAULT_MAX_GROUP).unwrap().sorted_cell_sizes(), r.sorted_cell_sizes());
        }
    }

    #[test]
    fn affine_split() {
        let g = Arc::new(affine_group(5).unwrap());
        let act = affine_line_action(g).unwrap();
        let c = rank1_from_2transitive(&act, 0, 4).unwrap();
        let r = check_axioms(&c, DEFAULT_MAX_GROUP).unwrap();
        assert!(r.pass);
        assert_eq!(r.group_order / r.b_order, 5);
        assert!(classify(&c).unwrap().split);
        assert!(rank1_round_trip(&c).unwrap());
    }

    #[test]
    fn nonstandard() {
        let ns = psl3f2_nonstandard().unwrap();
        assert_eq!(ns.b_order(), 21);
        assert_eq!(ns.action.num_points(), 8);
        assert!(ns.two_transitive);
        assert!(ns.report.pass);
        assert!(ns.flags.split);
        assert_eq!(ns.flags.fitting_order, 7);
        assert_eq!(ns.flags.witness_u_order, Some(7));
        assert_eq!(ns.standard_parabolic_orders, vec![8, 24, 24]);
        assert!(ns.is_nonstandard());
    }

    #[test]
    fn rejects_non_2transitive() {
        let g = Arc::new(crate::fingrp::cyclic_group(4).unwrap());
        let act = crate::fingrp::regular_action(g).unwrap();
        assert!(matches!(rank1_from_2transitive(&act, 0, 1), Err(Error::NotTwoTransitive)));
    }
}
