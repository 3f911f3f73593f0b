//! Tits systems (BN-pairs) in explicit finite groups.
//!
//! A [`TitsSystemCandidate`] is a triple `(G, B, N)`. Everything else is
//! derived: `H = B ∩ N`, the Weyl group `W = N/H` as coset representatives,
//! the distinguished generators `S` (the `w ≠ 1` for which `B ∪ BwB` is a
//! subgroup), and the Bruhat cells `BwB` as a labelling of `G`.
//!
//! Weakly-split test. Every nilpotent normal subgroup `U` of `B` lies in
//! `Fit(B)`, so `B = HU` for such a `U` implies `B = H·Fit(B)`; conversely
//! `Fit(B)` is itself nilpotent and normal. Hence `B` is weakly split iff
//! `|H·Fit(B)| = |B|`.

mod construct;
mod matrix;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fingrp::{fitting_subgroup, fitting_subgroup_brute, p_core, prime_factors, FiniteGroup, Subgroup};
use crate::rootsys::{Family, RootSystem};
use crate::weyl::WeylGroup;

pub use construct::{
    psl3f2_nonstandard, rank1_from_2transitive, rank1_round_trip, sl_rank1_column_system, standard_projective_system,
    standard_sl_system, Psl3f2Nonstandard,
};
pub use matrix::{bruhat_permutation, matrix_coxeter_order_check, standard_b_and_n};

/// Default bound on `|G|` for exhaustive checks.
pub const DEFAULT_MAX_GROUP: usize = 32_768;

/// Bound on the number of normal subgroups visited by the split search.
pub const SPLIT_SEARCH_CAP: usize = 4096;

const NONE: u32 = u32::MAX;

/// A triple `(G, B, N)`; `B` and `N` are subgroups of `G`.
#[derive(Debug)]
pub struct TitsSystemCandidate {
    label: String,
    group: Arc<FiniteGroup>,
    b: Subgroup,
    n: Subgroup,
    analysis: OnceLock<Result<Analysis>>,
}

impl TitsSystemCandidate {
    pub fn new(label: impl Into<String>, group: Arc<FiniteGroup>, b: Subgroup, n: Subgroup) -> Self {
        Self { label: label.into(), group, b, n, analysis: OnceLock::new() }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn b(&self) -> &Subgroup {
        &self.b
    }

    pub fn n(&self) -> &Subgroup {
        &self.n
    }

    /// Derived data, computed once.
    pub fn analysis(&self) -> Result<&Analysis> {
        self.analysis.get_or_init(|| Analysis::new(self)).as_ref().map_err(Clone::clone)
    }
}

/// `H` and the Weyl group `N/H`.
#[derive(Debug, Clone)]
pub struct WeylData {
    pub h: Subgroup,
    /// Least element of each coset `nH`; the identity comes first.
    pub reps: Vec<u32>,
    /// Coset index of each element of `N`, `u32::MAX` elsewhere.
    class_of: Vec<u32>,
    /// `mul[u * |W| + v]` is the class of `n_u n_v`.
    mul: Vec<usize>,
}

impl WeylData {
    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn mul(&self, u: usize, v: usize) -> usize {
        self.mul[u * self.order() + v]
    }

    pub fn class_of(&self, x: u32) -> Option<usize> {
        let c = self.class_of[x as usize];
        (c != NONE).then_some(c as usize)
    }

    /// Order of `w` in `W`.
    pub fn element_order(&self, w: usize) -> usize {
        let mut k = 1;
        let mut cur = w;
        while cur != 0 {
            cur = self.mul(cur, w);
            k += 1;
        }
        k
    }
}

/// `H = B ∩ N` and coset representatives of `N/H`.
pub fn derive_weyl(c: &TitsSystemCandidate) -> Result<WeylData> {
    let g = &c.group;
    let h = g.intersection(&c.b, &c.n);
    if !g.is_normal_in(&h, &c.n) {
        return Err(Error::HNotNormal);
    }
    let (class_of, reps) = g.left_cosets(&h, &c.n);
    let k = reps.len();
    let mut mul = Vec::with_capacity(k * k);
    for &u in &reps {
        for &v in &reps {
            mul.push(class_of[g.mul(u, v) as usize] as usize);
        }
    }
    Ok(WeylData { h, reps, class_of, mul })
}

/// Everything derived from a candidate.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub weyl: WeylData,
    /// Weyl class of the cell `BwB` containing each element of `G`, or
    /// `u32::MAX` if the element lies in no cell `BwB`.
    cell_of: Vec<u32>,
    /// Whether distinct Weyl classes gave distinct cells.
    cells_distinct: bool,
    /// Distinguished generators as Weyl class indices.
    pub s: Vec<usize>,
    /// Length with respect to `S`, `usize::MAX` when not generated.
    pub lengths: Vec<usize>,
    /// Lexicographically least reduced word over `S` (1-based letters).
    pub words: Vec<Vec<usize>>,
}

impl Analysis {
    fn new(c: &TitsSystemCandidate) -> Result<Self> {
        let g = &c.group;
        let weyl = derive_weyl(c)?;
        let mut cell_of = vec![NONE; g.order()];
        let mut cells_distinct = true;
        for (w, &start) in weyl.reps.iter().enumerate() {
            if cell_of[start as usize] != NONE {
                cells_distinct = false;
                continue;
            }
            cell_of[start as usize] = w as u32;
            let mut queue = vec![start];
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                for &b in c.b.gens() {
                    for y in [g.mul(b, x), g.mul(x, b)] {
                        if cell_of[y as usize] == NONE {
                            cell_of[y as usize] = w as u32;
                            queue.push(y);
                        }
                    }
                }
            }
        }

        let cell = |x: u32| cell_of[x as usize];
        let mut s: Vec<usize> = (1..weyl.order())
            .filter(|&w| {
                let nw = weyl.reps[w];
                c.b.members().iter().all(|&b| {
                    let k = cell(g.mul(g.mul(nw, b), nw));
                    k == 0 || k == w as u32
                })
            })
            .collect();
        sort_generators(g, &weyl, &mut s);

        let mut lengths = vec![usize::MAX; weyl.order()];
        let mut words = vec![Vec::new(); weyl.order()];
        lengths[0] = 0;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for (i, &si) in s.iter().enumerate() {
                let v = weyl.mul(u, si);
                if lengths[v] == usize::MAX {
                    lengths[v] = lengths[u] + 1;
                    let mut word = words[u].clone();
                    word.push(i + 1);
                    words[v] = word;
                    queue.push(v);
                }
            }
        }
        Ok(Self { weyl, cell_of, cells_distinct, s, lengths, words })
    }

    pub fn cell_of(&self, x: u32) -> Option<usize> {
        let c = self.cell_of[x as usize];
        (c != NONE).then_some(c as usize)
    }

    /// Whether `W -> B\G/B` is a bijection.
    pub fn bruhat_bijective(&self) -> bool {
        self.cells_distinct && self.cell_of.iter().all(|&c| c != NONE)
    }

    /// Whether `S` generates `W`.
    pub fn s_generates(&self) -> bool {
        self.lengths.iter().all(|&l| l != usize::MAX)
    }

    /// Cell key: the canonical reduced word, or `e` for the identity.
    pub fn key(&self, w: usize) -> String {
        if self.lengths[w] == usize::MAX {
            return format!("#{w}");
        }
        if self.words[w].is_empty() {
            return "e".into();
        }
        self.words[w].iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.weyl.order()];
        for &c in &self.cell_of {
            if c != NONE {
                sizes[c as usize] += 1;
            }
        }
        sizes
    }

    /// The unique element of maximal length, if there is exactly one.
    pub fn longest(&self) -> Option<usize> {
        let max = *self.lengths.iter().filter(|&&l| l != usize::MAX).max()?;
        let top: Vec<usize> = (0..self.lengths.len()).filter(|&w| self.lengths[w] == max).collect();
        (top.len() == 1).then_some(top[0])
    }
}

/// Row `i` -> column of the unique nonzero entry, for monomial matrices.
fn monomial_pattern(g: &FiniteGroup, x: u32) -> Option<Vec<usize>> {
    let (n, _) = g.matrix_shape()?;
    let e = g.element(x);
    (0..n)
        .map(|i| {
            let nz: Vec<usize> = (0..n).filter(|&j| e[i * n + j] != 0).collect();
            (nz.len() == 1).then(|| nz[0])
        })
        .collect()
}

/// For monomial generators, the node `i` (0-based) with pattern `(i i+1)`.
fn adjacent_transposition(g: &FiniteGroup, x: u32) -> Option<usize> {
    let pat = monomial_pattern(g, x)?;
    let moved: Vec<usize> = (0..pat.len()).filter(|&i| pat[i] != i).collect();
    match moved[..] {
        [i, j] if j == i + 1 && pat[i] == j && pat[j] == i => Some(i),
        _ => None,
    }
}

/// Orders `S` by the node of the permutation pattern when every generator
/// is a monomial adjacent transposition; otherwise keeps class order.
fn sort_generators(g: &FiniteGroup, weyl: &WeylData, s: &mut [usize]) {
    let nodes: Option<Vec<usize>> = s.iter().map(|&w| adjacent_transposition(g, weyl.reps[w])).collect();
    if let Some(nodes) = nodes {
        let mut pairs: Vec<(usize, usize)> = nodes.into_iter().zip(s.iter().copied()).collect();
        pairs.sort_unstable();
        for (slot, (_, w)) in s.iter_mut().zip(pairs) {
            *slot = w;
        }
    }
}

/// Distinguished generators as canonical words.
pub fn find_s(c: &TitsSystemCandidate) -> Result<Vec<String>> {
    let a = c.analysis()?;
    Ok(a.s.iter().map(|&w| a.key(w)).collect())
}

/// Result of [`check_axioms`].
#[derive(Debug, Clone, Serialize)]
pub struct TitsReport {
    pub label: String,
    pub group_order: usize,
    pub b_order: usize,
    pub n_order: usize,
    pub h_order: usize,
    pub weyl_order: usize,
    pub rank: usize,
    pub s_set: Vec<String>,
    pub t1_generates: bool,
    pub h_normal_in_n: bool,
    pub t2_s_generates: bool,
    pub t2_involutions: bool,
    pub t3_holds: bool,
    pub t4_holds: bool,
    pub bruhat_bijective: bool,
    pub normalizer_is_b: bool,
    pub cells: BTreeMap<String, usize>,
    pub cells_total: usize,
    pub pass: bool,
}

impl TitsReport {
    /// Cell sizes in increasing order.
    pub fn sorted_cell_sizes(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.cells.values().copied().collect();
        v.sort_unstable();
        v
    }
}

fn check_cap(c: &TitsSystemCandidate, cap: usize) -> Result<()> {
    if c.group.order() > cap {
        return Err(Error::GroupTooLarge { order: c.group.order(), limit: cap });
    }
    Ok(())
}

/// Axioms T1-T4, bijectivity of the Bruhat map and `N_G(B) = B`, all
/// checked exhaustively.
pub fn check_axioms(c: &TitsSystemCandidate, cap: usize) -> Result<TitsReport> {
    check_cap(c, cap)?;
    let g = &c.group;
    let h_normal = !matches!(derive_weyl(c), Err(Error::HNotNormal));
    let t1 = {
        let gens: Vec<u32> = c.b.gens().iter().chain(c.n.gens()).copied().collect();
        g.closure(&gens).order() == g.order()
    };
    let normalizer_is_b = g.normalizer(&c.b, &g.whole()) == c.b;
    let Ok(a) = c.analysis() else {
        return Ok(TitsReport {
            label: c.label.clone(),
            group_order: g.order(),
            b_order: c.b.order(),
            n_order: c.n.order(),
            h_order: g.intersection(&c.b, &c.n).order(),
            weyl_order: 0,
            rank: 0,
            s_set: vec![],
            t1_generates: t1,
            h_normal_in_n: h_normal,
            t2_s_generates: false,
            t2_involutions: false,
            t3_holds: false,
            t4_holds: false,
            bruhat_bijective: false,
            normalizer_is_b,
            cells: BTreeMap::new(),
            cells_total: 0,
            pass: false,
        });
    };
    let w = &a.weyl;
    let t2_involutions = a.s.iter().all(|&s| w.mul(s, s) == 0);
    let t3 = a.s.iter().all(|&s| {
        let ns = w.reps[s];
        (0..w.order()).all(|x| {
            let sx = w.mul(s, x);
            let nx = w.reps[x];
            c.b.members().iter().all(|&b| match a.cell_of(g.mul(g.mul(ns, b), nx)) {
                Some(k) => k == x || k == sx,
                None => false,
            })
        })
    });
    let t4 = a.s.iter().all(|&s| g.conjugate(&c.b, w.reps[s]) != c.b);
    let sizes = a.cell_sizes();
    let cells: BTreeMap<String, usize> = (0..w.order()).map(|x| (a.key(x), sizes[x])).collect();
    let cells_total = sizes.iter().sum();
    let bij = a.bruhat_bijective();
    let pass = t1 && h_normal && a.s_generates() && t2_involutions && t3 && t4 && bij && normalizer_is_b;
    Ok(TitsReport {
        label: c.label.clone(),
        group_order: g.order(),
        b_order: c.b.order(),
        n_order: c.n.order(),
        h_order: w.h.order(),
        weyl_order: w.order(),
        rank: a.s.len(),
        s_set: a.s.iter().map(|&s| a.key(s)).collect(),
        t1_generates: t1,
        h_normal_in_n: h_normal,
        t2_s_generates: a.s_generates(),
        t2_involutions,
        t3_holds: t3,
        t4_holds: t4,
        bruhat_bijective: bij,
        normalizer_is_b,
        cells,
        cells_total,
        pass,
    })
}

/// Cell sizes keyed by canonical reduced word.
pub fn bruhat_cells(c: &TitsSystemCandidate) -> Result<BTreeMap<String, usize>> {
    let a = c.analysis()?;
    let sizes = a.cell_sizes();
    Ok((0..a.weyl.order()).map(|w| (a.key(w), sizes[w])).collect())
}

/// Result of [`cell_size_formula_check`].
#[derive(Debug, Clone, Serialize)]
pub struct CellFormulaReport {
    pub n: usize,
    pub p: u32,
    pub group_order: usize,
    pub b_order: usize,
    /// `(canonical word, length, size)` per Weyl class.
    pub cells: Vec<(String, usize, usize)>,
    pub sizes_match: bool,
    pub sum_matches_order: bool,
    pub poincare_matches: bool,
    pub pass: bool,
}

/// `|BwB| = p^ℓ(w)·|B|` in the standard `SL_n(F_p)` system, and
/// `Σ_w p^ℓ(w)·|B| = |G|`, with the length census of `S_n` taken
/// independently from the Coxeter group of type `A_{n-1}`.
pub fn cell_size_formula_check(n: usize, p: u32, cap: usize) -> Result<CellFormulaReport> {
    let c = standard_sl_system(n, p, cap)?;
    let a = c.analysis()?;
    let b = c.b.order();
    let sizes = a.cell_sizes();
    let pow = |l: usize| (p as usize).pow(l as u32);
    let mut cells: Vec<(String, usize, usize)> =
        (0..a.weyl.order()).map(|w| (a.key(w), a.lengths[w], sizes[w])).collect();
    cells.sort_by(|x, y| (x.1, &x.0).cmp(&(y.1, &y.0)));
    let sizes_match = a.s_generates() && cells.iter().all(|&(_, l, s)| s == pow(l) * b);
    let total: usize = sizes.iter().sum();
    let order = crate::fingrp::sl_order(n, p) as usize;
    let sum_matches_order = total == order && c.group.order() == order;

    let mut census = BTreeMap::<usize, usize>::new();
    for (_, l, _) in &cells {
        *census.entry(*l).or_default() += 1;
    }
    let poincare_matches = if n >= 2 {
        let wg = WeylGroup::new(&RootSystem::of(Family::A, n - 1)?)?;
        let mut ref_census = BTreeMap::<usize, usize>::new();
        for w in wg.enumerate(crate::cosets::NAIVE_MAX_ORDER)? {
            *ref_census.entry(w.length()).or_default() += 1;
        }
        let poincare: usize = ref_census.iter().map(|(&l, &k)| k * pow(l)).sum();
        census == ref_census && poincare * b == order
    } else {
        census.len() == 1 && b == order
    };
    let pass = sizes_match && sum_matches_order && poincare_matches;
    Ok(CellFormulaReport { n, p, group_order: c.group.order(), b_order: b, cells, sizes_match, sum_matches_order, poincare_matches, pass })
}

/// Cells met by `BsB·BwB`, as Weyl classes.
fn product_cells(c: &TitsSystemCandidate, a: &Analysis, s: usize, w: usize) -> BTreeSet<Option<usize>> {
    let g = &c.group;
    let (ns, nw) = (a.weyl.reps[s], a.weyl.reps[w]);
    c.b.members().iter().map(|&b| a.cell_of(g.mul(g.mul(ns, b), nw))).collect()
}

/// For all `s ∈ S`, `w ∈ W`: `BsB·BwB = BswB` when `ℓ(sw) > ℓ(w)`, and
/// `BsB·BwB = BwB ∪ BswB` with `w ≠ sw` otherwise.
pub fn star_property_check(c: &TitsSystemCandidate) -> Result<bool> {
    let a = c.analysis()?;
    if !a.bruhat_bijective() || !a.s_generates() {
        return Ok(false);
    }
    let w = &a.weyl;
    Ok(a.s.iter().all(|&s| {
        (0..w.order()).all(|x| {
            let sx = w.mul(s, x);
            let hit = product_cells(c, a, s, x);
            if a.lengths[sx] > a.lengths[x] {
                hit == BTreeSet::from([Some(sx)])
            } else {
                sx != x && hit == BTreeSet::from([Some(x), Some(sx)])
            }
        })
    }))
}

/// Result of [`intersection_identity_check`].
#[derive(Debug, Clone, Serialize)]
pub struct IntersectionReport {
    pub h_order: usize,
    /// `|∩_w n_w B n_w^-1|`.
    pub all_conjugates_order: usize,
    /// `|B ∩ n_w0 B n_w0^-1|`.
    pub longest_conjugate_order: usize,
    pub holds: bool,
}

/// `H = ∩_{w ∈ W} wBw^-1 = B ∩ w0 B w0^-1`, by explicit intersection.
pub fn intersection_identity_check(c: &TitsSystemCandidate) -> Result<IntersectionReport> {
    let a = c.analysis()?;
    let g = &c.group;
    let all = intersect_conjugates(g, &c.b, a.weyl.reps.iter().copied());
    let top = match a.longest() {
        Some(w0) => intersect_conjugates(g, &c.b, [a.weyl.reps[w0]]),
        None => Vec::new(),
    };
    let h = a.weyl.h.members();
    Ok(IntersectionReport {
        h_order: h.len(),
        all_conjugates_order: all.len(),
        longest_conjugate_order: top.len(),
        holds: all == h && top == h,
    })
}

/// Sorted members of `B ∩ ∩_x xBx^-1`.
fn intersect_conjugates(g: &FiniteGroup, b: &Subgroup, conjugators: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut cur: Vec<u32> = b.members().to_vec();
    for x in conjugators {
        let xi = g.inv(x);
        cur.retain(|&y| b.contains(g.mul(g.mul(xi, y), x)));
    }
    cur
}

/// Result of [`coxeter_order_check`].
#[derive(Debug, Clone, Serialize)]
pub struct CoxeterOrderReport {
    /// 1-based `A_{n-1}` node of each distinguished generator.
    pub nodes: Vec<usize>,
    /// `orders[i][j]` is the order of `s_i s_j` in `W`.
    pub orders: Vec<Vec<usize>>,
    pub holds: bool,
}

/// In a standard `SL_n` system, each `s ∈ S` is represented by a monomial
/// matrix whose pattern is an adjacent transposition `(i i+1)`; the order of
/// `s s'` must equal the `A_{n-1}` Coxeter matrix entry of their nodes.
pub fn coxeter_order_check(c: &TitsSystemCandidate) -> Result<CoxeterOrderReport> {
    let a = c.analysis()?;
    let g = &c.group;
    let nodes: Option<Vec<usize>> = a.s.iter().map(|&s| adjacent_transposition(g, a.weyl.reps[s])).collect();
    let orders: Vec<Vec<usize>> = a
        .s
        .iter()
        .map(|&s| a.s.iter().map(|&t| a.weyl.element_order(a.weyl.mul(s, t))).collect())
        .collect();
    let Some(nodes) = nodes else {
        return Ok(CoxeterOrderReport { nodes: vec![], orders, holds: false });
    };
    let rank = nodes.len();
    let distinct = nodes.iter().collect::<BTreeSet<_>>().len() == rank;
    let holds = distinct
        && rank >= 1
        && nodes.iter().all(|&i| i < rank)
        && {
            let cox = RootSystem::of(Family::A, rank)?.coxeter_matrix();
            (0..rank).all(|i| (0..rank).all(|j| orders[i][j] == cox.get(nodes[i], nodes[j]) as usize))
        };
    Ok(CoxeterOrderReport { nodes: nodes.iter().map(|i| i + 1).collect(), orders, holds })
}

/// Result of [`classify`].
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationFlags {
    pub saturated: bool,
    pub weakly_split: bool,
    pub split: bool,
    pub h_order: usize,
    pub fitting_order: usize,
    pub witness_u_order: Option<usize>,
    #[serde(skip)]
    pub fitting: Option<Subgroup>,
    #[serde(skip)]
    pub witness_u: Option<Subgroup>,
}

/// Saturated, weakly-split and split flags, with a witness `U` for split.
pub fn classify(c: &TitsSystemCandidate) -> Result<ClassificationFlags> {
    let a = c.analysis()?;
    let g = &c.group;
    let h = &a.weyl.h;
    let saturated = intersect_conjugates(g, &c.b, c.n.members().iter().copied()) == h.members();
    let fit = fitting_subgroup(g, &c.b)?;
    let weakly_split = g.product_size(h, &fit) == c.b.order();
    let complements = |u: &Subgroup| u.order() * h.order() == c.b.order() && g.intersection(h, u).is_trivial();

    let mut witness = None;
    if saturated && weakly_split {
        let primes = prime_factors(c.b.order());
        let cores: Vec<Subgroup> = primes.iter().map(|&p| p_core(g, &c.b, p)).collect();
        for mask in 0..1usize << cores.len() {
            let mut u = g.trivial();
            for (i, core) in cores.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    u = g.join(&u, core);
                }
            }
            if complements(&u) {
                witness = Some(u);
                break;
            }
        }
        if witness.is_none() {
            witness = g
                .normal_subgroups(&c.b, SPLIT_SEARCH_CAP)?
                .into_iter()
                .find(|u| u.is_subset_of(&fit) && complements(u));
        }
    }
    let split = saturated && witness.is_some();
    Ok(ClassificationFlags {
        saturated,
        weakly_split,
        split,
        h_order: h.order(),
        fitting_order: fit.order(),
        witness_u_order: witness.as_ref().map(Subgroup::order),
        fitting: Some(fit),
        witness_u: witness,
    })
}

/// Weakly-split by brute force: some nilpotent normal subgroup `U` of `B`
/// has `|HU| = |B|`. Only for `|B| ≤ 500`.
pub fn weakly_split_brute(c: &TitsSystemCandidate) -> Result<bool> {
    let a = c.analysis()?;
    let g = &c.group;
    let (_, nilpotent) = fitting_subgroup_brute(g, &c.b)?;
    Ok(nilpotent.iter().any(|u| g.product_size(&a.weyl.h, u) == c.b.order()))
}

/// Orders of the standard parabolic subgroups `B W_X B` for proper subsets
/// `X ⊊ S`, sorted.
pub fn standard_parabolic_orders(c: &TitsSystemCandidate) -> Result<Vec<usize>> {
    let a = c.analysis()?;
    let g = &c.group;
    let k = a.s.len();
    let mut out = Vec::new();
    for mask in 0..(1usize << k) - 1 {
        let mut gens = c.b.gens().to_vec();
        gens.extend((0..k).filter(|i| mask >> i & 1 == 1).map(|i| a.weyl.reps[a.s[i]]));
        out.push(g.closure(&gens).order());
    }
    out.sort_unstable();
    Ok(out)
}
