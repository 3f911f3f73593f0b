use std::collections::HashMap;
use std::fmt::Write as _;
use std::io;

use super::field::PrimeField;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

/// Canonical element encoding. Equal group elements have equal encodings.
pub type Elem = Box<[u8]>;

/// Groups at or below this order get a materialized multiplication table.
pub const TABLE_MAX_ORDER: usize = 1 << 10;

/// Default bound on fully enumerated groups.
pub const DEFAULT_MAX_ORDER: usize = 100_000;

/// How encodings multiply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    /// `n x n` matrices over `F_p`, row-major. When `projective`, each
    /// element is the lexicographically least of its nonzero scalar multiples.
    Matrix { n: usize, field: PrimeField, projective: bool },
    /// `F_p ⋊ F_p^×` with elements `(t, x)` acting on the line by `y -> t + x y`.
    Affine { field: PrimeField },
    /// `Z/n`.
    Cyclic { order: u8 },
}

impl GroupKind {
    pub fn identity(self) -> Elem {
        match self {
            GroupKind::Matrix { n, .. } => {
                let mut v = vec![0u8; n * n];
                for i in 0..n {
                    v[i * n + i] = 1;
                }
                v.into()
            }
            GroupKind::Affine { .. } => vec![0, 1].into(),
            GroupKind::Cyclic { .. } => vec![0].into(),
        }
    }

    pub fn mul(self, a: &[u8], b: &[u8]) -> Elem {
        match self {
            GroupKind::Matrix { n, field, projective } => {
                let p = field.p() as u32;
                let mut out = vec![0u8; n * n];
                for i in 0..n {
                    for j in 0..n {
                        let s: u32 = (0..n).map(|k| a[i * n + k] as u32 * b[k * n + j] as u32).sum();
                        out[i * n + j] = (s % p) as u8;
                    }
                }
                if projective {
                    projective_canonical(field, &out)
                } else {
                    out.into()
                }
            }
            GroupKind::Affine { field } => {
                vec![field.add(a[0], field.mul(a[1], b[0])), field.mul(a[1], b[1])].into()
            }
            GroupKind::Cyclic { order } => {
                vec![((a[0] as u16 + b[0] as u16) % order as u16) as u8].into()
            }
        }
    }

    pub fn format(self, e: &[u8]) -> String {
        match self {
            GroupKind::Matrix { n, .. } => {
                let rows: Vec<String> = e
                    .chunks(n)
                    .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                    .collect();
                rows.join(";")
            }
            GroupKind::Affine { .. } => format!("({},{})", e[0], e[1]),
            GroupKind::Cyclic { .. } => e[0].to_string(),
        }
    }
}

/// Least scalar multiple in row-major lexicographic order.
pub fn projective_canonical(field: PrimeField, v: &[u8]) -> Elem {
    field
        .units()
        .map(|l| v.iter().map(|&x| field.mul(l, x)).collect::<Vec<u8>>())
        .min()
        .expect("p >= 2")
        .into()
}

/// Rank over `F_p` of a `rows x cols` row-major matrix.
pub fn rank_mod(field: PrimeField, rows: usize, cols: usize, m: &[u8]) -> usize {
    let mut a = m.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + col] != 0) else { continue };
        for c in 0..cols {
            a.swap(piv * cols + c, rank * cols + c);
        }
        let pinv = field.inv(a[rank * cols + col]);
        for r in rank + 1..rows {
            let f = field.mul(a[r * cols + col], pinv);
            if f != 0 {
                for c in col..cols {
                    let v = field.mul(f, a[rank * cols + c]);
                    a[r * cols + c] = field.sub(a[r * cols + c], v);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn det_mod(field: PrimeField, n: usize, m: &[u8]) -> u8 {
    let mut a: Vec<u8> = m.to_vec();
    let mut det = 1u8;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else { return 0 };
        if piv != col {
            for c in 0..n {
                a.swap(piv * n + c, col * n + c);
            }
            det = field.neg(det);
        }
        let pv = a[col * n + col];
        det = field.mul(det, pv);
        let pinv = field.inv(pv);
        for r in col + 1..n {
            let f = field.mul(a[r * n + col], pinv);
            if f != 0 {
                for c in col..n {
                    let v = field.mul(f, a[col * n + c]);
                    a[r * n + c] = field.sub(a[r * n + c], v);
                }
            }
        }
    }
    det
}

/// An explicitly enumerated finite group. Elements are addressed by `u32`
/// indices; index order is the breadth-first discovery order from the
/// generators, so it is deterministic.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    name: String,
    kind: GroupKind,
    elements: Vec<Elem>,
    index: HashMap<Elem, u32>,
    identity: u32,
    inverses: Vec<u32>,
    generators: Vec<u32>,
    table: Option<Vec<u32>>,
}

impl FiniteGroup {
    /// Enumerates the group generated by `gens` (which must already be in
    /// canonical form) by breadth-first closure.
    pub fn generate(name: &str, kind: GroupKind, gens: &[Elem], limit: usize) -> Result<Self> {
        let id = kind.identity();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0u32)]);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in gens {
                let y = kind.mul(&x, g);
                if !index.contains_key(&y) {
                    if elements.len() >= limit {
                        return Err(Error::GroupTooLarge { order: elements.len() + 1, limit });
                    }
                    index.insert(y.clone(), elements.len() as u32);
                    elements.push(y);
                }
            }
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        let mut group = Self {
            name: name.to_string(),
            kind,
            elements,
            index,
            identity: 0,
            inverses: Vec::new(),
            generators,
            table: None,
        };
        group.inverses = (0..group.order() as u32).map(|g| group.inverse_by_powers(g)).collect();
        if group.order() <= TABLE_MAX_ORDER {
            let n = group.order() as u32;
            let table = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| group.mul_oracle(a, b)).collect();
            group.table = Some(table);
        }
        Ok(group)
    }

    fn mul_oracle(&self, a: u32, b: u32) -> u32 {
        let prod = self.kind.mul(&self.elements[a as usize], &self.elements[b as usize]);
        *self.index.get(&prod).expect("group is closed under multiplication")
    }

    fn inverse_by_powers(&self, g: u32) -> u32 {
        let mut prev = self.identity;
        let mut cur = g;
        while cur != self.identity {
            prev = cur;
            cur = self.mul_oracle(cur, g);
        }
        prev
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn element(&self, g: u32) -> &[u8] {
        &self.elements[g as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order() as u32
    }

    pub fn index_of(&self, e: &[u8]) -> Option<u32> {
        self.index.get(e).copied()
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.order() + b as usize],
            None => self.mul_oracle(a, b),
        }
    }

    pub fn inv(&self, g: u32) -> u32 {
        self.inverses[g as usize]
    }

    /// `g x g^-1`.
    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, g: u32) -> usize {
        let mut k = 1;
        let mut cur = g;
        while cur != self.identity {
            cur = self.mul(cur, g);
            k += 1;
        }
        k
    }

    pub fn format(&self, g: u32) -> String {
        self.kind.format(self.element(g))
    }

    /// Matrix dimension and field, for matrix groups.
    pub fn matrix_shape(&self) -> Option<(usize, PrimeField)> {
        match self.kind {
            GroupKind::Matrix { n, field, .. } => Some((n, field)),
            _ => None,
        }
    }

    /// Exhaustive closure, identity and inverse checks.
    pub fn check_axioms(&self) -> bool {
        let n = self.order() as u32;
        (0..n).all(|g| {
            self.mul(g, self.identity) == g
                && self.mul(self.identity, g) == g
                && self.mul(g, self.inv(g)) == self.identity
                && self.generators.iter().all(|&s| (self.mul(g, s) as usize) < self.order())
        })
    }

    /// Associativity on the given triples.
    pub fn check_associative(&self, triples: impl IntoIterator<Item = (u32, u32, u32)>) -> bool {
        triples
            .into_iter()
            .all(|(a, b, c)| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))
    }

    /// The subgroup of elements satisfying `pred`; fails if that set is not
    /// a subgroup.
    pub fn filter_subgroup(&self, pred: impl Fn(&[u8]) -> bool) -> Result<Subgroup> {
        let members: Vec<u32> = self.elements().filter(|&g| pred(self.element(g))).collect();
        self.subgroup_from_members(members)
    }

    /// Writes the multiplication table as CSV: a header row of element
    /// labels, then one row per left factor with product indices.
    pub fn write_table_csv<W: io::Write>(&self, mut out: W) -> io::Result<()> {
        let mut line = String::from("x");
        for g in self.elements() {
            write!(line, ",{}", self.format(g)).unwrap();
        }
        writeln!(out, "{line}")?;
        for a in self.elements() {
            let mut line = self.format(a).to_string();
            for b in self.elements() {
                write!(line, ",{}", self.mul(a, b)).unwrap();
            }
            writeln!(out, "{line}")?;
        }
        Ok(())
    }
}

/// `p^{n(n-1)/2} * prod_{i=2..n} (p^i - 1)`.
pub fn sl_order(n: usize, p: u32) -> u128 {
    let p = p as u128;
    let mut order = p.pow((n * (n - 1) / 2) as u32);
    for i in 2..=n {
        order *= p.pow(i as u32) - 1;
    }
    order
}

/// `SL_n(F_p)`, generated by the elementary transvections `I + E_ij`.
pub fn special_linear_group(n: usize, p: u32, limit: usize) -> Result<FiniteGroup> {
    let field = PrimeField::new(p)?;
    if n < 1 {
        return Err(Error::InvalidArgument("matrix size must be positive".into()));
    }
    let expected = sl_order(n, p);
    if expected > limit as u128 {
        return Err(Error::GroupTooLarge { order: expected.min(usize::MAX as u128) as usize, limit });
    }
    let kind = GroupKind::Matrix { n, field, projective: false };
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = kind.identity().to_vec();
                m[i * n + j] = 1;
                gens.push(m.into_boxed_slice());
            }
        }
    }
    let g = FiniteGroup::generate(&format!("SL{n}(F{p})"), kind, &gens, limit)?;
    assert_eq!(g.order() as u128, expected, "|SL_n(F_p)| matches the order formula");
    assert!(g.elements().all(|x| det_mod(field, n, g.element(x)) == 1));
    Ok(g)
}

/// Upper-triangular matrices of a matrix group.
pub fn upper_triangular_b(g: &FiniteGroup) -> Result<Subgroup> {
    let (n, _) = matrix_only(g)?;
    g.filter_subgroup(|m| (0..n).all(|i| (0..i).all(|j| m[i * n + j] == 0)))
}

/// Monomial matrices (one nonzero entry per row and column).
pub fn monomial_n(g: &FiniteGroup) -> Result<Subgroup> {
    let (n, _) = matrix_only(g)?;
    g.filter_subgroup(|m| (0..n).all(|i| m[i * n..(i + 1) * n].iter().filter(|&&x| x != 0).count() == 1))
}

/// Upper unitriangular matrices. In a projective group this is the image
/// of the unitriangular group of the cover, whose canonical form keeps the
/// unit diagonal only up to a common scalar.
pub fn unitriangular_u(g: &FiniteGroup) -> Result<Subgroup> {
    let (n, _) = matrix_only(g)?;
    let projective = matches!(g.kind(), GroupKind::Matrix { projective: true, .. });
    g.filter_subgroup(|m| {
        let d = if projective { m[0] } else { 1 };
        (0..n).all(|i| m[i * n + i] == d && (0..i).all(|j| m[i * n + j] == 0))
    })
}

fn matrix_only(g: &FiniteGroup) -> Result<(usize, PrimeField)> {
    g.matrix_shape()
        .ok_or_else(|| Error::InvalidArgument(format!("{} is not a matrix group", g.name())))
}

/// The scalar matrices of `g` (the center of `SL_n`).
pub fn scalar_subgroup(g: &FiniteGroup) -> Result<Subgroup> {
    let (n, _) = matrix_only(g)?;
    g.filter_subgroup(|m| {
        (0..n).all(|i| (0..n).all(|j| m[i * n + j] == if i == j { m[0] } else { 0 }))
    })
}

/// Quotient of a matrix group by its scalar subgroup. Elements are the
/// canonical projective representatives; asserts that the center is scalar
/// and that `|quotient| * |center| = |G|`.
pub fn central_quotient(g: &FiniteGroup) -> Result<FiniteGroup> {
    let GroupKind::Matrix { n, field, projective: false } = g.kind() else {
        return Err(Error::InvalidArgument(format!("{} is not a linear matrix group", g.name())));
    };
    let center = g.center(&g.whole());
    let scalars = scalar_subgroup(g)?;
    assert_eq!(center, scalars, "the center of a matrix group here is scalar");
    let kind = GroupKind::Matrix { n, field, projective: true };
    let gens: Vec<Elem> =
        g.generators().iter().map(|&x| projective_canonical(field, g.element(x))).collect();
    let name = g.name().strip_prefix("SL").map_or_else(|| format!("P{}", g.name()), |r| format!("PSL{r}"));
    let q = FiniteGroup::generate(&name, kind, &gens, g.order())?;
    assert_eq!(q.order() * center.order(), g.order());
    Ok(q)
}

/// Image of a subgroup of a matrix group in its central quotient.
pub fn image_in_quotient(g: &FiniteGroup, q: &FiniteGroup, h: &Subgroup) -> Result<Subgroup> {
    let (_, field) = matrix_only(g)?;
    let mut members: Vec<u32> = h
        .members()
        .iter()
        .map(|&x| q.index_of(&projective_canonical(field, g.element(x))).expect("image exists"))
        .collect();
    members.sort_unstable();
    members.dedup();
    q.subgroup_from_members(members)
}

/// `F_p ⋊ F_p^×`.
pub fn affine_group(p: u32) -> Result<FiniteGroup> {
    let field = PrimeField::new(p)?;
    let kind = GroupKind::Affine { field };
    let mut gens: Vec<Elem> = vec![vec![1, 1].into()];
    gens.extend(field.units().skip(1).map(|x| vec![0, x].into_boxed_slice()));
    let g = FiniteGroup::generate(&format!("AGL1(F{p})"), kind, &gens, DEFAULT_MAX_ORDER)?;
    assert_eq!(g.order(), (p * (p - 1)) as usize);
    Ok(g)
}

pub fn cyclic_group(n: u8) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclic group of order 0".into()));
    }
    let gens: Vec<Elem> = if n == 1 { vec![] } else { vec![vec![1].into()] };
    FiniteGroup::generate(&format!("C{n}"), GroupKind::Cyclic { order: n }, &gens, DEFAULT_MAX_ORDER)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl_orders() {
        assert_eq!(special_linear_group(2, 2, DEFAULT_MAX_ORDER).unwrap().order(), 6);
        assert_eq!(special_linear_group(3, 2, DEFAULT_MAX_ORDER).unwrap().order(), 168);
        let sl23 = special_linear_group(2, 3, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(sl23.order(), 24);
        assert_eq!(upper_triangular_b(&sl23).unwrap().order(), 6);
        assert_eq!(unitriangular_u(&sl23).unwrap().order(), 3);
        assert!(matches!(
            special_linear_group(3, 5, DEFAULT_MAX_ORDER),
            Err(Error::GroupTooLarge { .. })
        ));
        assert!(matches!(special_linear_group(2, 4, 100), Err(Error::NotPrime(4))));
    }

    #[test]
    fn quotients() {
        let sl32 = special_linear_group(3, 2, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(central_quotient(&sl32).unwrap().order(), 168);
        let sl23 = special_linear_group(2, 3, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(central_quotient(&sl23).unwrap().order(), 12);
        let sl22 = special_linear_group(2, 2, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(central_quotient(&sl22).unwrap().order(), 6);
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let f = PrimeField::new(5).unwrap();
        let m = [3u8, 1, 0, 2];
        let c = projective_canonical(f, &m);
        assert_eq!(projective_canonical(f, &c), c);
        assert_eq!(&*c, &[1, 2, 0, 4]);
    }

    #[test]
    fn small_groups() {
        assert_eq!(affine_group(5).unwrap().order(), 20);
        let c4 = cyclic_group(4).unwrap();
        assert_eq!(c4.order(), 4);
        assert!(c4.check_axioms());
        assert_eq!(cyclic_group(1).unwrap().order(), 1);
    }

    #[test]
    fn printing_and_csv() {
        let sl22 = special_linear_group(2, 2, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(sl22.format(sl22.identity()), "1 0;0 1");
        let mut buf = Vec::new();
        sl22.write_table_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 7);
        assert!(text.starts_with("x,1 0;0 1,"));
    }

    #[test]
    fn determinant() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(det_mod(f, 2, &[1, 2, 0, 1]), 1);
        assert_eq!(det_mod(f, 2, &[0, 1, 1, 0]), 2);
        assert_eq!(det_mod(f, 2, &[1, 1, 1, 1]), 0);
        assert_eq!(rank_mod(f, 2, 2, &[1, 1, 1, 1]), 1);
        assert_eq!(rank_mod(f, 2, 3, &[0, 1, 2, 0, 2, 1]), 1);
        assert_eq!(rank_mod(f, 3, 2, &[0, 1, 1, 0, 2, 2]), 2);
    }
}
