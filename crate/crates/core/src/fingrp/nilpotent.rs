//! Nilpotency, Sylow subgroups and the Fitting subgroup.
//!
//! The Fitting subgroup is the product of the p-cores `O_p(H)`, one per
//! prime dividing `|H|`, where `O_p(H)` is the intersection of the Sylow
//! p-subgroups. This avoids searching the lattice of normal subgroups,
//! which is kept only as a brute-force cross-check on small groups.

use super::group::FiniteGroup;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

/// Largest group handled by [`fitting_subgroup`].
pub const FITTING_MAX_ORDER: usize = 10_000;

/// Largest group handled by [`fitting_subgroup_brute`].
pub const BRUTE_FITTING_MAX_ORDER: usize = 500;

pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn p_part(mut n: usize, p: usize) -> usize {
    let mut q = 1;
    while n % p == 0 {
        n /= p;
        q *= p;
    }
    q
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// `H = γ_1 ⊇ γ_2 ⊇ ...` with `γ_{i+1} = [γ_i, H]`, up to the first repeat.
pub fn lower_central_series(g: &FiniteGroup, h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().unwrap();
        let comms: Vec<u32> = last
            .members()
            .iter()
            .flat_map(|&x| h.gens().iter().map(move |&y| (x, y)))
            .map(|(x, y)| g.commutator(x, y))
            .collect();
        let next = g.normal_closure(&comms, h);
        if next == *last {
            return series;
        }
        series.push(next);
    }
}

pub fn is_nilpotent(g: &FiniteGroup, h: &Subgroup) -> bool {
    lower_central_series(g, h).last().unwrap().is_trivial()
}

/// A Sylow p-subgroup of `h`, grown one normalizing p-element at a time.
pub fn sylow(g: &FiniteGroup, h: &Subgroup, p: usize) -> Subgroup {
    let target = p_part(h.order(), p);
    let mut s = g.trivial();
    while s.order() < target {
        let x = h
            .members()
            .iter()
            .copied()
            .find(|&x| !s.contains(x) && is_power_of(g.element_order(x), p) && g.normalizes(x, &s))
            .expect("a non-Sylow p-subgroup has a p-element in its normalizer");
        let mut gens = s.gens().to_vec();
        gens.push(x);
        s = g.closure(&gens);
        debug_assert!(is_power_of(s.order(), p));
    }
    s
}

/// `O_p(H)`: the intersection of all Sylow p-subgroups of `h`.
pub fn p_core(g: &FiniteGroup, h: &Subgroup, p: usize) -> Subgroup {
    let s = sylow(g, h, p);
    if g.is_normal_in(&s, h) {
        return s;
    }
    let mut core: Vec<u32> = s.members().to_vec();
    for &x in h.members() {
        let xi = g.inv(x);
        core.retain(|&y| s.contains(g.mul(g.mul(xi, y), x)));
        if core.len() == 1 {
            break;
        }
    }
    g.subgroup_from_members(core).expect("intersection of conjugates")
}

/// Largest nilpotent normal subgroup of `h`.
pub fn fitting_subgroup(g: &FiniteGroup, h: &Subgroup) -> Result<Subgroup> {
    if h.order() > FITTING_MAX_ORDER {
        return Err(Error::CapExceeded { what: "Fitting subgroup", cap: FITTING_MAX_ORDER });
    }
    let mut fit = g.trivial();
    for p in prime_factors(h.order()) {
        fit = g.join(&fit, &p_core(g, h, p));
    }
    Ok(fit)
}

/// Brute-force oracle: every nilpotent normal subgroup of `h`, and the
/// largest of them. Asserts the largest contains all the others.
pub fn fitting_subgroup_brute(g: &FiniteGroup, h: &Subgroup) -> Result<(Subgroup, Vec<Subgroup>)> {
    if h.order() > BRUTE_FITTING_MAX_ORDER {
        return Err(Error::CapExceeded { what: "brute-force Fitting subgroup", cap: BRUTE_FITTING_MAX_ORDER });
    }
    let nilpotent: Vec<Subgroup> =
        g.normal_subgroups(h, 4096)?.into_iter().filter(|n| is_nilpotent(g, n)).collect();
    let largest = nilpotent.iter().max_by_key(|n| n.order()).expect("trivial subgroup").clone();
    assert!(nilpotent.iter().all(|n| n.is_subset_of(&largest)));
    Ok((largest, nilpotent))
}
