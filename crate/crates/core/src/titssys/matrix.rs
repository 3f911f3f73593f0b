//! Weyl-group data of the standard system in `SL_n(F_p)` computed from `B`
//! and `N` alone, for groups too large to enumerate.
//!
//! The cell `BwB` of an invertible matrix is read off from rank profiles:
//! left multiplication by an upper triangular matrix preserves the span of
//! the bottom rows, right multiplication preserves the span of the left
//! columns, so `r(i, j) = rank(rows i.., cols ..=j)` is constant on cells and
//! equals the count for the permutation matrix of `w`.

use std::collections::BTreeSet;

use super::{adjacent_transposition, monomial_pattern, CoxeterOrderReport};
use crate::error::{Error, Result};
use crate::fingrp::{rank_mod, FiniteGroup, GroupKind, PrimeField, DEFAULT_MAX_ORDER};
use crate::rootsys::{Family, RootSystem};

/// The permutation `w` (row -> column) with `m ∈ BwB`, `B` upper triangular.
pub fn bruhat_permutation(field: PrimeField, n: usize, m: &[u8]) -> Vec<usize> {
    // r[i][j]: rank of rows i..n, columns 0..j (exclusive bounds, padded with zeros).
    let mut r = vec![vec![0usize; n + 1]; n + 1];
    for i in 0..n {
        for j in 1..=n {
            let sub: Vec<u8> = (i..n).flat_map(|row| m[row * n..row * n + j].iter().copied()).collect();
            r[i][j] = rank_mod(field, n - i, j, &sub);
        }
    }
    (0..n)
        .map(|i| {
            (0..n)
                .find(|&j| r[i][j + 1] + r[i + 1][j] == 1 + r[i][j] + r[i + 1][j + 1])
                .expect("invertible matrices have a full rank profile")
        })
        .collect()
}

fn elementary(n: usize, entries: &[(usize, usize, u8)]) -> Box<[u8]> {
    let mut m = vec![0u8; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    for &(i, j, v) in entries {
        m[i * n + j] = v;
    }
    m.into()
}

fn diag_pair(n: usize, field: PrimeField, i: usize, x: u8) -> Box<[u8]> {
    elementary(n, &[(i, i, x), (i + 1, i + 1, field.inv(x))])
}

/// The standard `B` and `N` of `SL_n(F_p)` generated directly, without
/// enumerating `SL_n(F_p)`; orders are asserted against the formulas.
pub fn standard_b_and_n(n: usize, p: u32) -> Result<(FiniteGroup, FiniteGroup)> {
    let field = PrimeField::new(p)?;
    if n < 2 {
        return Err(Error::InvalidArgument("need n >= 2".into()));
    }
    let kind = GroupKind::Matrix { n, field, projective: false };
    let diag: Vec<Box<[u8]>> =
        (0..n - 1).flat_map(|i| field.units().skip(1).map(move |x| diag_pair(n, field, i, x))).collect();
    let mut b_gens = diag.clone();
    for i in 0..n {
        for j in i + 1..n {
            b_gens.push(elementary(n, &[(i, j, 1)]));
        }
    }
    let mut n_gens = diag;
    for i in 0..n - 1 {
        n_gens.push(elementary(n, &[(i, i, 0), (i + 1, i + 1, 0), (i, i + 1, 1), (i + 1, i, field.neg(1))]));
    }
    let b = FiniteGroup::generate(&format!("B(SL{n}(F{p}))"), kind, &b_gens, DEFAULT_MAX_ORDER)?;
    let nn = FiniteGroup::generate(&format!("N(SL{n}(F{p}))"), kind, &n_gens, DEFAULT_MAX_ORDER)?;
    let q = p as usize;
    let torus = (q - 1).pow(n as u32 - 1);
    assert_eq!(b.order(), q.pow((n * (n - 1) / 2) as u32) * torus);
    assert_eq!(nn.order(), (1..=n).product::<usize>() * torus);
    Ok((b, nn))
}

/// [`super::coxeter_order_check`] for the standard `SL_n(F_p)` system
/// without enumerating the group: `S` is found from the criterion
/// `n_w B n_w ⊆ B ∪ BwB` with cells identified by rank profiles.
pub fn matrix_coxeter_order_check(n: usize, p: u32) -> Result<CoxeterOrderReport> {
    let (b, nn) = standard_b_and_n(n, p)?;
    let kind = nn.kind();
    let field = PrimeField::new(p)?;
    let pattern = |x: u32| monomial_pattern(&nn, x).expect("N is monomial");
    let identity: Vec<usize> = (0..n).collect();
    // W = N/H with H the diagonal elements; classes are keyed by pattern.
    let mut reps: Vec<(Vec<usize>, u32)> = Vec::new();
    let mut seen = BTreeSet::new();
    for x in nn.elements() {
        let pat = pattern(x);
        if seen.insert(pat.clone()) {
            reps.push((pat, x));
        }
    }
    let class = |pat: &[usize]| reps.iter().position(|(q, _)| q == pat).expect("pattern of an element of N");
    let s: Vec<usize> = (0..reps.len())
        .filter(|&w| reps[w].0 != identity)
        .filter(|&w| {
            let nw = nn.element(reps[w].1);
            b.elements().all(|x| {
                let m = kind.mul(&kind.mul(nw, b.element(x)), nw);
                let cell = bruhat_permutation(field, n, &m);
                cell == identity || cell == reps[w].0
            })
        })
        .collect();
    let weyl_mul = |u: usize, v: usize| class(&pattern(nn.mul(reps[u].1, reps[v].1)));
    let id = class(&identity);
    let order = |w: usize| {
        let mut k = 1;
        let mut cur = w;
        while cur != id {
            cur = weyl_mul(cur, w);
            k += 1;
        }
        k
    };
    let mut pairs: Vec<(usize, usize)> = s
        .iter()
        .map(|&w| (adjacent_transposition(&nn, reps[w].1).unwrap_or(usize::MAX), w))
        .collect();
    pairs.sort_unstable();
    let nodes: Vec<usize> = pairs.iter().map(|&(i, _)| i).collect();
    let orders: Vec<Vec<usize>> =
        pairs.iter().map(|&(_, u)| pairs.iter().map(|&(_, v)| order(weyl_mul(u, v))).collect()).collect();
    let rank = n - 1;
    let cox = RootSystem::of(Family::A, rank)?.coxeter_matrix();
    let holds = nodes == (0..rank).collect::<Vec<_>>()
        && (0..rank).all(|i| (0..rank).all(|j| orders[i][j] == cox.get(i, j) as usize));
    Ok(CoxeterOrderReport {
        nodes: nodes.iter().map(|&i| i.wrapping_add(1)).collect(),
        orders,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_profile_of_permutations() {
        let f = PrimeField::new(3).unwrap();
        // Row i has its 1 in column w[i].
        for w in [[0usize, 1, 2], [1, 0, 2], [2, 0, 1], [2, 1, 0]] {
            let mut m = vec![0u8; 9];
            for i in 0..3 {
                m[i * 3 + w[i]] = 1;
            }
            assert_eq!(bruhat_permutation(f, 3, &m), w);
        }
        // An upper triangular matrix lies in the identity cell.
        assert_eq!(bruhat_permutation(f, 2, &[2, 1, 0, 2]), vec![0, 1]);
        assert_eq!(bruhat_permutation(f, 2, &[1, 0, 1, 1]), vec![1, 0]);
    }

    #[test]
    fn small_orders() {
        let (b, nn) = standard_b_and_n(3, 3).unwrap();
        assert_eq!((b.order(), nn.order()), (108, 24));
        assert!(matrix_coxeter_order_check(3, 2).unwrap().holds);
    }
}
