//! Parabolic quotients and double cosets for maximal parabolic subgroups.
//!
//! `W/W'` is realized as the orbit of the fundamental weight `omega_a`, whose
//! stabilizer is `W' = <r_b : b != a>`. Double cosets `W' \ W / W'` are then
//! the `W'`-orbits on that weight orbit, so `W` itself is never enumerated.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{Family, RootSystem, RootSystemSpec};
use crate::weyl::{WeightVector, WeylElement, WeylGroup, Word};

/// Largest Weyl group the exhaustive double-coset oracle will enumerate.
pub const NAIVE_MAX_ORDER: usize = 100_000;

/// A root system with one simple node removed.
#[derive(Debug, Clone)]
pub struct ParabolicChoice {
    group: WeylGroup,
    removed: usize,
}

impl ParabolicChoice {
    pub fn new(rs: &RootSystem, removed: usize) -> Result<Self> {
        if removed >= rs.rank() {
            return Err(Error::InvalidArgument(format!(
                "node {} out of range for {}",
                removed + 1,
                rs.spec()
            )));
        }
        Ok(Self { group: WeylGroup::new(rs)?, removed })
    }

    pub fn from_group(group: &WeylGroup, removed: usize) -> Self {
        assert!(removed < group.rank());
        Self { group: group.clone(), removed }
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn removed(&self) -> usize {
        self.removed
    }

    /// Original (possibly non-reduced) type.
    pub fn label(&self) -> RootSystemSpec {
        self.group.label()
    }

    fn rs(&self) -> &RootSystem {
        self.group.root_system()
    }
}

fn pack(coords: &[i64]) -> Result<u128> {
    let mut key = 0u128;
    for (i, &c) in coords.iter().enumerate() {
        let byte = i8::try_from(c).map_err(|_| Error::WeightOverflow(c))? as u8;
        key |= (byte as u128) << (8 * i);
    }
    Ok(key)
}

fn unpack(key: u128, rank: usize) -> Vec<i64> {
    (0..rank).map(|i| (key >> (8 * i)) as u8 as i8 as i64).collect()
}

/// The `W`-orbit of `omega_a` with its simple-reflection transition table.
#[derive(Debug, Clone)]
pub struct ParabolicOrbit {
    rank: usize,
    points: Vec<u128>,
    index: HashMap<u128, u32>,
    next: Vec<u32>,
}

impl ParabolicOrbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn weight(&self, i: usize) -> WeightVector {
        WeightVector(unpack(self.points[i], self.rank))
    }

    pub fn weights(&self) -> Vec<WeightVector> {
        (0..self.len()).map(|i| self.weight(i)).collect()
    }

    pub fn position(&self, v: &WeightVector) -> Option<usize> {
        pack(&v.0).ok().and_then(|k| self.index.get(&k)).map(|&i| i as usize)
    }

    /// Index of `r_b` applied to point `i`.
    pub fn step(&self, i: usize, b: usize) -> usize {
        self.next[i * self.rank + b] as usize
    }

    /// Orbits of the subgroup generated by the simple reflections other than
    /// `removed`, as a component label per point plus the component count.
    pub fn components_without(&self, removed: usize) -> (Vec<u32>, usize) {
        let mut label = vec![u32::MAX; self.len()];
        let mut count = 0u32;
        let mut stack = Vec::new();
        for start in 0..self.len() {
            if label[start] != u32::MAX {
                continue;
            }
            label[start] = count;
            stack.push(start);
            while let Some(x) = stack.pop() {
                for b in (0..self.rank).filter(|&b| b != removed) {
                    let y = self.step(x, b);
                    if label[y] == u32::MAX {
                        label[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (label, count as usize)
    }
}

/// Breadth-first closure of `{omega_a}` under the simple reflections.
pub fn parabolic_orbit(choice: &ParabolicChoice) -> Result<ParabolicOrbit> {
    let g = &choice.group;
    let rank = g.rank();
    if rank > 16 {
        return Err(Error::InvalidArgument(format!("rank {rank} exceeds the packed-orbit limit 16")));
    }
    let cartan = g.root_system().cartan();
    let start = pack(&WeightVector::fundamental(rank, choice.removed).0)?;
    let mut points = vec![start];
    let mut index = HashMap::from([(start, 0u32)]);
    let mut next = Vec::new();
    let mut head = 0;
    while head < points.len() {
        let v = unpack(points[head], rank);
        head += 1;
        for a in 0..rank {
            let key = if v[a] == 0 {
                pack(&v)?
            } else {
                let w: Vec<i64> = v.iter().zip(&cartan[a]).map(|(x, y)| x - v[a] * y).collect();
                pack(&w)?
            };
            let id = match index.get(&key) {
                Some(&id) => id,
                None => {
                    let id = points.len() as u32;
                    points.push(key);
                    index.insert(key, id);
                    id
                }
            };
            next.push(id);
        }
    }
    Ok(ParabolicOrbit { rank, points, index, next })
}

/// Outcome of counting `W' \ W / W'` for one (type, node).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleCosetReport {
    pub family: Family,
    pub rank: usize,
    /// 1-based node.
    pub node: usize,
    /// `[W : W']`.
    pub index: usize,
    pub count: usize,
    /// Sizes of the `W'`-orbits on `W/W'`, ascending.
    pub orbit_sizes: Vec<usize>,
    /// The diagram is of type `A_m` and the node is an end node.
    pub expected_two: bool,
    pub pass: bool,
}

pub fn double_coset_count(choice: &ParabolicChoice) -> Result<DoubleCosetReport> {
    let rs = choice.rs();
    if rs.rank() < 2 {
        return Err(Error::RankTooSmall { rank: rs.rank(), min: 2 });
    }
    let orbit = parabolic_orbit(choice)?;
    let (labels, count) = orbit.components_without(choice.removed);
    let mut sizes = vec![0usize; count];
    for &l in &labels {
        sizes[l as usize] += 1;
    }
    sizes.sort_unstable();
    assert_eq!(sizes.iter().sum::<usize>(), orbit.len(), "W'-orbits partition W/W'");
    let expected_two = rs.has_type_a_diagram() && rs.is_end_node(choice.removed);
    let pass = if expected_two { count == 2 } else { count > 2 };
    let label = choice.label();
    Ok(DoubleCosetReport {
        family: label.family,
        rank: label.rank,
        node: choice.removed + 1,
        index: orbit.len(),
        count,
        orbit_sizes: sizes,
        expected_two,
        pass,
    })
}

/// Exhaustive oracle: enumerate `W` and partition it into classes
/// `W' x W'` by multiplying with the generators of `W'` on both sides.
pub fn double_coset_count_naive(choice: &ParabolicChoice) -> Result<usize> {
    let g = &choice.group;
    let elements = g.enumerate(NAIVE_MAX_ORDER).map_err(|e| match e {
        Error::EnumerationCapExceeded { partial, .. } => {
            Error::GroupTooLarge { order: partial + 1, limit: NAIVE_MAX_ORDER }
        }
        other => other,
    })?;
    let index: HashMap<&[u16], usize> =
        elements.iter().enumerate().map(|(i, w)| (w.perm(), i)).collect();
    let gens: Vec<usize> = (0..g.rank()).filter(|&b| b != choice.removed).collect();
    let mut class = vec![usize::MAX; elements.len()];
    let mut count = 0;
    for start in 0..elements.len() {
        if class[start] != usize::MAX {
            continue;
        }
        class[start] = count;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &b in &gens {
                let left = g.left_mul_simple(b, &elements[x]);
                let right = g.right_mul_simple(&elements[x], b);
                for y in [left, right] {
                    let j = index[y.perm()];
                    if class[j] == usize::MAX {
                        class[j] = count;
                        stack.push(j);
                    }
                }
            }
        }
        count += 1;
    }
    Ok(count)
}

/// Types covered by the sweep up to `max_rank`, in canonical order.
pub fn lemma2_specs(max_rank: usize, families: &[Family]) -> Vec<RootSystemSpec> {
    let mut out = Vec::new();
    for &family in Family::ALL.iter().filter(|f| families.contains(f)) {
        for rank in 2..=max_rank {
            if let Ok(spec) = RootSystemSpec::new(family, rank) {
                out.push(spec);
            }
        }
    }
    out.sort();
    out
}

/// Double-coset reports for every node of one type.
pub fn lemma2_reports(spec: RootSystemSpec) -> Result<Vec<DoubleCosetReport>> {
    let group = WeylGroup::new(&RootSystem::build(spec)?)?;
    (0..group.rank())
        .map(|a| double_coset_count(&ParabolicChoice::from_group(&group, a)))
        .collect()
}

/// Every family, every rank in `2..=max_rank`, every node.
pub fn lemma2_sweep(max_rank: usize) -> Result<Vec<DoubleCosetReport>> {
    if max_rank < 2 {
        return Err(Error::RankTooSmall { rank: max_rank, min: 2 });
    }
    let mut out = Vec::new();
    for spec in lemma2_specs(max_rank, &Family::ALL) {
        out.extend(lemma2_reports(spec)?);
    }
    Ok(out)
}

/// The braid-relation witness for `#W' \ W / W' > 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub family: Family,
    pub rank: usize,
    pub node: usize,
    /// 1-based letters.
    pub word: String,
    /// Number of nodes on the path from the chosen node to the pivot.
    pub i: usize,
    pub length: usize,
    pub length_ok: bool,
    pub reduced_words: Vec<String>,
    pub two_reduced_words: bool,
    pub endpoints_r_a: bool,
    /// The two reduced words differ by one swap of commuting letters.
    pub single_commuting_swap: bool,
    pub coset_distinct: bool,
    pub pass: bool,
}

/// Word `r_1 ... r_i r_{i+1} r_{i+2} r_i ... r_1` for the chosen node, or
/// `WitnessNotApplicable` when the node is an end node of a diagram with no
/// branch node (the type-A end case).
pub fn witness_word(choice: &ParabolicChoice) -> Result<(Word, usize)> {
    let rs = choice.rs();
    let a = choice.removed;
    let (path, pivot_neighbors): (Vec<usize>, Vec<usize>) = if rs.degree(a) >= 2 {
        (vec![a], rs.neighbors(a).to_vec())
    } else if let (true, Some(b)) = (rs.is_end_node(a), rs.branch_node()) {
        let path = rs.dynkin_path(a, b);
        let before = path[path.len() - 2];
        (path, rs.neighbors(b).iter().copied().filter(|&x| x != before).collect())
    } else {
        return Err(Error::WitnessNotApplicable(format!(
            "node {} of {} is an end node and the diagram has no branch node",
            a + 1,
            choice.label()
        )));
    };
    let mut nbrs = pivot_neighbors;
    nbrs.sort_unstable();
    let i = path.len();
    let mut letters = path.clone();
    letters.extend(&nbrs[..2]);
    letters.extend(path.iter().rev());
    Ok((Word(letters), i))
}

pub fn stembridge_witness(choice: &ParabolicChoice) -> Result<WitnessReport> {
    let g = &choice.group;
    let a = choice.removed;
    let (word, i) = witness_word(choice)?;
    let w = g.element_of(&word)?;
    let length = w.length();
    let length_ok = length == 2 * i + 2;
    let words = g.reduced_words(&w, 1000)?;
    let two_reduced_words = words.len() == 2;
    let endpoints_r_a = words
        .iter()
        .all(|u| u.letters().first() == Some(&a) && u.letters().last() == Some(&a));
    let single_commuting_swap = two_reduced_words && {
        let (x, y) = (words[0].letters(), words[1].letters());
        let diff: Vec<usize> = (0..x.len()).filter(|&k| x[k] != y[k]).collect();
        diff.len() == 2
            && diff[1] == diff[0] + 1
            && x[diff[0]] == y[diff[1]]
            && x[diff[1]] == y[diff[0]]
            && g.coxeter_matrix().get(x[diff[0]], x[diff[1]]) == 2
    };
    let coset_distinct = witness_coset_distinct(choice, &w);
    let label = choice.label();
    Ok(WitnessReport {
        family: label.family,
        rank: label.rank,
        node: a + 1,
        word: word.to_string(),
        i,
        length,
        length_ok,
        reduced_words: words.iter().map(|u| u.to_string()).collect(),
        two_reduced_words,
        endpoints_r_a,
        single_commuting_swap,
        coset_distinct,
        pass: length_ok && two_reduced_words && endpoints_r_a && single_commuting_swap && coset_distinct,
    })
}

/// `W' w W'` differs from `W'` and `W' r_a W'`, decided on weights:
/// `w(omega_a) != omega_a` and `w(omega_a)` is outside the `W'`-orbit of
/// `r_a(omega_a)`.
fn witness_coset_distinct(choice: &ParabolicChoice, w: &WeylElement) -> bool {
    let g = &choice.group;
    let a = choice.removed;
    let omega = WeightVector::fundamental(g.rank(), a);
    let image = g.act_on_weight(w, &omega);
    if image == omega {
        return false;
    }
    let start = g.reflect_weight(a, &omega);
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        if v == image {
            return false;
        }
        for b in (0..g.rank()).filter(|&b| b != a) {
            let u = g.reflect_weight(b, &v);
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    true
}

/// Root counts for the `w0 = -1` branch of the argument.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Case1Report {
    pub family: Family,
    pub rank: usize,
    pub node: usize,
    pub size_psi: usize,
    pub size_psi_prime: usize,
    pub w0_is_minus_one: bool,
    /// `#Psi > #Psi' + 2` whenever `w0 = -1`.
    pub holds: bool,
}

pub fn case1_bound_check(choice: &ParabolicChoice) -> Result<Case1Report> {
    let rs = choice.rs();
    if rs.rank() < 2 {
        return Err(Error::RankTooSmall { rank: rs.rank(), min: 2 });
    }
    let a = choice.removed;
    let size_psi = rs.num_roots();
    let size_psi_prime = (0..size_psi).filter(|&i| rs.simple_coords(i)[a] == 0).count();
    let g = &choice.group;
    let w0_is_minus_one = g.is_minus_one(&g.longest_element());
    let label = choice.label();
    Ok(Case1Report {
        family: label.family,
        rank: label.rank,
        node: a + 1,
        size_psi,
        size_psi_prime,
        w0_is_minus_one,
        holds: !w0_is_minus_one || size_psi > size_psi_prime + 2,
    })
}

/// Whether `w0 = -1` for the given type.
pub fn w0_is_minus_one(spec: RootSystemSpec) -> Result<bool> {
    let g = WeylGroup::new(&RootSystem::build(spec)?)?;
    Ok(g.is_minus_one(&g.longest_element()))
}

/// The types with `w0 != -1`: `A_m (m > 1)`, `D_m` with `m` odd, `E6`.
pub fn w0_not_minus_one_expected(spec: RootSystemSpec) -> bool {
    match spec.family {
        Family::A => spec.rank > 1,
        Family::D => spec.rank % 2 == 1,
        Family::E => spec.rank == 6,
        _ => false,
    }
}

/// `sigma` with `w0(a_i) = -a_{sigma(i)}` for type `A_m`, 0-based; asserts
/// `sigma(i) = m + 1 - i` in 1-based terms.
pub fn w0_negation_map(rs: &RootSystem) -> Result<Vec<usize>> {
    if rs.family() != Family::A {
        return Err(Error::InvalidArgument(format!("{} is not of type A", rs.spec())));
    }
    let g = WeylGroup::new(rs)?;
    let sigma = g.negation_map(&g.longest_element()).expect("w0 maps simple roots to negative simple roots");
    let m = rs.rank();
    assert!(sigma.iter().enumerate().all(|(i, &s)| s == m - 1 - i));
    Ok(sigma)
}

/// Root sets for the type-`A_m` weight computation with the removed node an
/// end node; sets hold root indices of the `A_m` system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop7Sets {
    pub m: usize,
    pub lie_p: BTreeSet<usize>,
    pub lie_q: BTreeSet<usize>,
    pub difference: BTreeSet<usize>,
    /// `w0(lie_p)` equals the negative roots together with the positive
    /// roots in the span of `a_1, ..., a_{m-1}`.
    pub opposite_ok: bool,
    /// `difference = { a_i + ... + a_m : 1 <= i <= m }`.
    pub matches_expected: bool,
}

impl Prop7Sets {
    /// Simple-root coordinates of the difference set, sorted.
    pub fn difference_coords(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> =
            self.difference.iter().map(|&i| rs.simple_coords(i).to_vec()).collect();
        v.sort();
        v
    }
}

pub fn prop7_weight_sets(m: usize) -> Result<Prop7Sets> {
    if m < 2 {
        return Err(Error::RankTooSmall { rank: m, min: 2 });
    }
    let rs = RootSystem::of(Family::A, m)?;
    let g = WeylGroup::new(&rs)?;
    let w0 = g.longest_element();
    let n = rs.num_roots();
    let lie_p: BTreeSet<usize> = (0..n)
        .filter(|&i| rs.is_positive(i) || rs.simple_coords(i)[0] == 0)
        .collect();
    let image: BTreeSet<usize> = lie_p.iter().map(|&i| w0.apply(i)).collect();
    let expected_image: BTreeSet<usize> = (0..n)
        .filter(|&i| !rs.is_positive(i) || rs.simple_coords(i)[m - 1] == 0)
        .collect();
    let lie_q: BTreeSet<usize> = lie_p.intersection(&image).copied().collect();
    let difference: BTreeSet<usize> = lie_p.difference(&lie_q).copied().collect();
    let expected: BTreeSet<usize> = (0..m)
        .map(|i| {
            let c: Vec<i64> = (0..m).map(|j| i64::from(j >= i)).collect();
            rs.find_by_coords(&c).expect("a_i + ... + a_m is a root")
        })
        .collect();
    Ok(Prop7Sets {
        m,
        matches_expected: difference == expected && difference.len() == m,
        opposite_ok: image == expected_image,
        lie_p,
        lie_q,
        difference,
    })
}
