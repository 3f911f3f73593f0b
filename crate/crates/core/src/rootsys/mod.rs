//! Irreducible root systems with exact integer arithmetic.
//!
//! Simple roots and node numbering follow the Bourbaki plates:
//!
//! | type | nodes (1-based)                                   |
//! |------|---------------------------------------------------|
//! | A_n  | chain 1 - 2 - ... - n                             |
//! | B_n  | chain 1 - ... - (n-1) => n, node n short          |
//! | C_n  | chain 1 - ... - (n-1) <= n, node n long           |
//! | D_n  | chain 1 - ... - (n-2), with n-1 and n on n-2      |
//! | E_n  | chain 1 - 3 - 4 - ... - n, node 2 on node 4       |
//! | F4   | 1 - 2 => 3 - 4                                    |
//! | G2   | 1 <= 2, node 1 short                              |
//! | BC_n | as B_n, with both e_n and 2e_n roots              |
//!
//! Internally nodes are 0-based. Root indices are laid out so that the
//! positive roots come first, ordered by height, with the simple roots at
//! indices `0..rank` in node order; the negative of root `i < npos` sits at
//! `i + npos`.

mod build;
pub(crate) mod linalg;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    BC,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
        Family::BC,
    ];

    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
            Family::D => rank >= 3,
            Family::A | Family::B | Family::C | Family::BC => rank >= 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
            Family::BC => "BC",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            "BC" => Family::BC,
            _ => return Err(Error::Parse { what: "family", input: s.to_string() }),
        })
    }
}

/// An admissible (family, rank) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootSystemSpec {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.admits_rank(rank) {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidSpec(format!("{family}{rank}")))
        }
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    /// Parses labels such as `A3`, `e8` or `BC2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
        let family: Family = s[..split].parse()?;
        let rank = s[split..]
            .parse()
            .map_err(|_| Error::Parse { what: "rank", input: s.to_string() })?;
        Self::new(family, rank)
    }
}

/// Orders `m(a, b)` of products of simple reflections.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoxeterMatrix(Vec<Vec<u32>>);

impl CoxeterMatrix {
    pub fn get(&self, a: usize, b: usize) -> u32 {
        self.0[a][b]
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.0
    }
}

/// An irreducible root system, immutable after construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: RootSystemSpec,
    ambient_dim: usize,
    scale: i64,
    roots: Vec<Vec<i64>>,
    coords: Vec<Vec<i64>>,
    npos: usize,
    cartan: Vec<Vec<i64>>,
    adjacency: Vec<Vec<usize>>,
    lookup: HashMap<Vec<i64>, usize>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl RootSystem {
    pub fn build(spec: RootSystemSpec) -> Result<Self> {
        let spec = RootSystemSpec::new(spec.family, spec.rank)?;
        let raw = build::raw(spec);
        Self::from_parts(spec, raw.ambient_dim, raw.scale, raw.roots, &raw.simple)
    }

    /// Convenience wrapper over [`RootSystem::build`].
    pub fn of(family: Family, rank: usize) -> Result<Self> {
        Self::build(RootSystemSpec::new(family, rank)?)
    }

    fn from_parts(
        spec: RootSystemSpec,
        ambient_dim: usize,
        scale: i64,
        roots: Vec<Vec<i64>>,
        simple: &[Vec<i64>],
    ) -> Result<Self> {
        let rank = simple.len();
        let gram: Vec<Vec<i64>> =
            simple.iter().map(|a| simple.iter().map(|b| dot(a, b)).collect()).collect();
        let inv = linalg::inverse(&gram)
            .ok_or_else(|| Error::InvalidSpec(format!("{spec}: simple roots are dependent")))?;

        let mut positive = Vec::new();
        for root in roots {
            let rhs: Vec<i64> = simple.iter().map(|a| dot(&root, a)).collect();
            let c = linalg::apply_integral(&inv, &rhs).ok_or_else(|| {
                Error::InvalidSpec(format!("{spec}: root {root:?} is not in the root lattice"))
            })?;
            let first = c.iter().copied().find(|&x| x != 0).unwrap_or(0);
            if first > 0 {
                positive.push((root, c));
            }
        }
        positive.sort_by(|(_, a), (_, b)| {
            let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let npos = positive.len();
        let mut all_roots = Vec::with_capacity(2 * npos);
        let mut coords = Vec::with_capacity(2 * npos);
        for (r, c) in &positive {
            all_roots.push(r.clone());
            coords.push(c.clone());
        }
        for (r, c) in &positive {
            all_roots.push(r.iter().map(|x| -x).collect());
            coords.push(c.iter().map(|x| -x).collect());
        }
        let lookup: HashMap<Vec<i64>, usize> =
            all_roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        if lookup.len() != all_roots.len() {
            return Err(Error::InvalidSpec(format!("{spec}: duplicate roots")));
        }
        for (j, s) in simple.iter().enumerate() {
            if all_roots.get(j) != Some(s) {
                return Err(Error::InvalidSpec(format!("{spec}: simple root {j} misplaced")));
            }
        }

        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        let adjacency = (0..rank)
            .map(|i| (0..rank).filter(|&j| j != i && cartan[i][j] != 0).collect())
            .collect();

        Ok(Self {
            spec,
            ambient_dim,
            scale,
            roots: all_roots,
            coords,
            npos,
            cartan,
            adjacency,
            lookup,
        })
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Global factor by which every stored coordinate has been multiplied.
    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    /// Coefficients of root `i` in the simple-root basis.
    pub fn simple_coords(&self, i: usize) -> &[i64] {
        &self.coords[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        self.coords[i].iter().sum()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    pub fn negate(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    /// Root index of simple root `a` (always `a` itself).
    pub fn simple_root(&self, a: usize) -> usize {
        assert!(a < self.rank());
        a
    }

    pub fn find(&self, v: &[i64]) -> Option<usize> {
        self.lookup.get(v).copied()
    }

    /// Root index with the given simple-root coordinates.
    pub fn find_by_coords(&self, c: &[i64]) -> Option<usize> {
        self.coords.iter().position(|x| x == c)
    }

    pub fn inner(&self, i: usize, j: usize) -> i64 {
        dot(&self.roots[i], &self.roots[j])
    }

    /// `<v, a^vee> = 2 (v, a) / (a, a)` for root index `a`.
    pub fn pairing(&self, v: &[i64], a: usize) -> Result<i64> {
        let root = &self.roots[a];
        let num = dot(v, root);
        let den = dot(root, root);
        if (2 * num) % den != 0 {
            return Err(Error::NonCrystallographicInput { num, den });
        }
        Ok(2 * num / den)
    }

    /// `r_a(v) = v - <v, a^vee> a`.
    pub fn reflect(&self, a: usize, v: &[i64]) -> Result<Vec<i64>> {
        let k = self.pairing(v, a)?;
        Ok(v.iter().zip(&self.roots[a]).map(|(x, y)| x - k * y).collect())
    }

    /// Index of `r_a(root b)`.
    pub fn reflect_root(&self, a: usize, b: usize) -> usize {
        let v = self.reflect(a, &self.roots[b]).expect("roots pair integrally");
        self.find(&v).expect("root systems are reflection-closed")
    }

    /// `cartan()[i][j] = <a_i, a_j^vee>`; row `i` is `a_i` in the
    /// fundamental-weight basis.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn neighbors(&self, a: usize) -> &[usize] {
        &self.adjacency[a]
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adjacency[a].len()
    }

    pub fn is_end_node(&self, a: usize) -> bool {
        self.degree(a) == 1
    }

    pub fn end_nodes(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&a| self.is_end_node(a)).collect()
    }

    /// The node connected to three others, if the diagram has one.
    pub fn branch_node(&self) -> Option<usize> {
        (0..self.rank()).find(|&a| self.degree(a) == 3)
    }

    /// The unique simple path between two nodes of the Dynkin tree,
    /// endpoints included.
    pub fn dynkin_path(&self, from: usize, to: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.rank()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    pub fn is_simply_laced(&self) -> bool {
        self.cartan.iter().flatten().all(|&x| x == 2 || x == 0 || x == -1)
    }

    /// Whether the Dynkin diagram is that of `A_rank`: a simply-laced path.
    /// This is decided from the diagram, so `D3` qualifies.
    pub fn has_type_a_diagram(&self) -> bool {
        self.is_simply_laced() && (0..self.rank()).all(|a| self.degree(a) <= 2)
    }

    pub fn is_reduced(&self) -> bool {
        self.spec.family != Family::BC
    }

    /// Order of `r_a r_b`, found by iterating the product on the simple
    /// roots (which span the space the reflections move) until it is the
    /// identity.
    fn product_order(&self, a: usize, b: usize) -> u32 {
        let simple: Vec<Vec<i64>> = (0..self.rank()).map(|i| self.roots[i].clone()).collect();
        let mut cur = simple.clone();
        for k in 1..=12 {
            cur = cur
                .iter()
                .map(|v| {
                    let v = self.reflect(b, v).expect("integral");
                    self.reflect(a, &v).expect("integral")
                })
                .collect();
            if cur == simple {
                return k;
            }
        }
        unreachable!("crystallographic products have order at most 6")
    }

    pub fn coxeter_matrix(&self) -> CoxeterMatrix {
        let r = self.rank();
        CoxeterMatrix(
            (0..r).map(|a| (0..r).map(|b| self.product_order(a, b)).collect()).collect(),
        )
    }

    /// The Coxeter matrix read off the Cartan products
    /// `{0, 1, 2, 3} -> {2, 3, 4, 6}`.
    pub fn coxeter_matrix_from_cartan(&self) -> CoxeterMatrix {
        let r = self.rank();
        CoxeterMatrix(
            (0..r)
                .map(|a| {
                    (0..r)
                        .map(|b| {
                            if a == b {
                                return 1;
                            }
                            match self.cartan[a][b] * self.cartan[b][a] {
                                0 => 2,
                                1 => 3,
                                2 => 4,
                                3 => 6,
                                x => panic!("Cartan product {x} is not crystallographic"),
                            }
                        })
                        .collect()
                })
                .collect(),
        )
    }

    /// The roots `b` such that `b/2` is not a root, as a root system of
    /// type `B_rank`.
    pub fn nondivisible_core(&self) -> Result<RootSystem> {
        if self.is_reduced() {
            return Err(Error::NotNonReduced(self.spec.to_string()));
        }
        let roots: Vec<Vec<i64>> = self
            .roots
            .iter()
            .filter(|r| {
                let half: Option<Vec<i64>> =
                    r.iter().map(|&x| (x % 2 == 0).then_some(x / 2)).collect();
                half.is_none_or(|h| self.find(&h).is_none())
            })
            .cloned()
            .collect();
        let simple: Vec<Vec<i64>> = (0..self.rank()).map(|i| self.roots[i].clone()).collect();
        let spec = RootSystemSpec::new(Family::B, self.rank())?;
        let core = Self::from_parts(spec, self.ambient_dim, self.scale, roots, &simple)?;
        let reference = RootSystem::build(spec)?;
        if core.cartan != reference.cartan {
            return Err(Error::InvalidSpec(format!("core of {} is not of type B", self.spec)));
        }
        Ok(core)
    }

    /// The system the Weyl group is computed from: itself when reduced,
    /// otherwise its nondivisible core.
    pub fn reduced(&self) -> Result<RootSystem> {
        if self.is_reduced() {
            Ok(self.clone())
        } else {
            self.nondivisible_core()
        }
    }

    /// Exhaustive check of the structural invariants. Returns a description
    /// of the first violation.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.num_roots();
        if n != 2 * self.npos {
            return Err("positive roots are not half of all roots".into());
        }
        for i in 0..n {
            let neg: Vec<i64> = self.roots[i].iter().map(|x| -x).collect();
            if self.find(&neg) != Some(self.negate(i)) {
                return Err(format!("negation closure fails at root {i}"));
            }
            let pos = self.coords[i].iter().all(|&c| c >= 0);
            let negc = self.coords[i].iter().all(|&c| c <= 0);
            if pos == negc || pos != self.is_positive(i) {
                return Err(format!("root {i} is not cleanly positive or negative"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let v = self.reflect(a, &self.roots[b]).map_err(|e| e.to_string())?;
                if self.find(&v).is_none() {
                    return Err(format!("r_{a}(root {b}) is not a root"));
                }
            }
        }
        for (i, row) in self.cartan.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let ok = if i == j { x == 2 } else { (-3..=0).contains(&x) };
                if !ok {
                    return Err(format!("cartan[{i}][{j}] = {x}"));
                }
            }
        }
        for i in 0..self.npos {
            if self.greedy_decomposition(i).is_none() {
                return Err(format!("greedy subtraction fails for root {i}"));
            }
        }
        Ok(())
    }

    /// Writes positive root `i` as a sum of simple roots by repeatedly
    /// subtracting a simple root while staying inside the root set.
    pub fn greedy_decomposition(&self, i: usize) -> Option<Vec<i64>> {
        let mut out = vec![0; self.rank()];
        let mut cur = self.roots[i].clone();
        loop {
            if let Some(j) = self.find(&cur).filter(|&j| j < self.rank()) {
                out[j] += 1;
                return Some(out);
            }
            let step = (0..self.rank()).find_map(|a| {
                let next: Vec<i64> = cur.iter().zip(&self.roots[a]).map(|(x, y)| x - y).collect();
                self.find(&next).filter(|&k| self.is_positive(k)).map(|_| (a, next))
            })?;
            out[step.0] += 1;
            cur = step.1;
        }
    }

    /// Canonical document: roots sorted lexicographically.
    pub fn to_json(&self) -> serde_json::Value {
        let mut roots = self.roots.clone();
        roots.sort();
        let simple: Vec<&Vec<i64>> = self.roots[..self.rank()].iter().collect();
        serde_json::json!({
            "spec": { "family": self.spec.family.to_string(), "rank": self.spec.rank },
            "ambient_dim": self.ambient_dim,
            "scale": self.scale,
            "roots": roots,
            "simple_roots": simple,
            "cartan": self.cartan,
        })
    }
}
