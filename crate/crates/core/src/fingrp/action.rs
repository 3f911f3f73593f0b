use std::collections::HashMap;
use std::sync::Arc;

use super::field::PrimeField;
use super::group::{FiniteGroup, GroupKind};
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

/// A left action of a finite group on `0..num_points`, stored as a full
/// table.
#[derive(Debug, Clone)]
pub struct GroupAction {
    group: Arc<FiniteGroup>,
    labels: Vec<String>,
    table: Vec<u32>,
}

impl GroupAction {
    /// Builds the table from `f(g, x)` and checks the action axioms.
    pub fn from_fn(
        group: Arc<FiniteGroup>,
        labels: Vec<String>,
        f: impl Fn(u32, u32) -> u32,
    ) -> Result<Self> {
        let n = labels.len() as u32;
        let table = group.elements().flat_map(|g| (0..n).map(move |x| (g, x))).map(|(g, x)| f(g, x)).collect();
        let action = Self { group, labels, table };
        if !action.check_axioms() {
            return Err(Error::InvalidArgument("map is not a group action".into()));
        }
        Ok(action)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn num_points(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, x: u32) -> &str {
        &self.labels[x as usize]
    }

    pub fn apply(&self, g: u32, x: u32) -> u32 {
        self.table[g as usize * self.num_points() + x as usize]
    }

    /// Identity acts trivially, every element permutes the points, and
    /// `(g s)·x = g·(s·x)` for every generator `s`; by induction on word
    /// length the last condition gives compatibility for all pairs.
    pub fn check_axioms(&self) -> bool {
        let g = &self.group;
        let n = self.num_points() as u32;
        let id_ok = (0..n).all(|x| self.apply(g.identity(), x) == x);
        let perm_ok = g.elements().all(|a| {
            let mut hit = vec![false; n as usize];
            (0..n).all(|x| {
                let y = self.apply(a, x) as usize;
                y < n as usize && !std::mem::replace(&mut hit[y], true)
            })
        });
        let hom_ok = g.elements().all(|a| {
            g.generators()
                .iter()
                .all(|&s| (0..n).all(|x| self.apply(g.mul(a, s), x) == self.apply(a, self.apply(s, x))))
        });
        id_ok && perm_ok && hom_ok
    }

    pub fn orbit(&self, x: u32) -> Vec<u32> {
        let mut seen = vec![false; self.num_points()];
        seen[x as usize] = true;
        let mut orbit = vec![x];
        let mut head = 0;
        while head < orbit.len() {
            let y = orbit[head];
            head += 1;
            for &s in self.group.generators() {
                let z = self.apply(s, y);
                if !seen[z as usize] {
                    seen[z as usize] = true;
                    orbit.push(z);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    /// Orbit partition, each orbit sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.num_points()];
        let mut out = Vec::new();
        for x in 0..self.num_points() as u32 {
            if !seen[x as usize] {
                let o = self.orbit(x);
                for &y in &o {
                    seen[y as usize] = true;
                }
                out.push(o);
            }
        }
        out
    }

    pub fn stabilizer(&self, x: u32) -> Subgroup {
        self.setwise_stabilizer(&[x])
    }

    pub fn setwise_stabilizer(&self, set: &[u32]) -> Subgroup {
        let members = self
            .group
            .elements()
            .filter(|&g| set.iter().all(|&x| set.contains(&self.apply(g, x))))
            .collect();
        self.group.subgroup_from_members(members).expect("stabilizers are subgroups")
    }

    pub fn is_transitive(&self) -> bool {
        self.num_points() == 0 || self.orbit(0).len() == self.num_points()
    }

    /// Transitive, and the stabilizer of a point is transitive on the rest.
    pub fn is_2transitive(&self) -> bool {
        if !self.is_transitive() {
            return false;
        }
        let n = self.num_points() as u32;
        if n <= 1 {
            return true;
        }
        let stab = self.stabilizer(0);
        let mut seen = vec![false; n as usize];
        for &g in stab.members() {
            seen[self.apply(g, 1) as usize] = true;
        }
        (1..n).all(|y| seen[y as usize])
    }
}

/// Nonzero vectors of `F_p^n` normalized so the first nonzero entry is 1.
pub fn projective_points(n: usize, field: PrimeField) -> Vec<Vec<u8>> {
    let p = field.p() as usize;
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        for k in 0..p.pow(free as u32) {
            let mut v = vec![0u8; n];
            v[lead] = 1;
            let mut r = k;
            for i in (lead + 1..n).rev() {
                v[i] = (r % p) as u8;
                r /= p;
            }
            out.push(v);
        }
    }
    out
}

fn normalize_point(field: PrimeField, v: &mut [u8]) {
    if let Some(&lead) = v.iter().find(|&&x| x != 0) {
        let inv = field.inv(lead);
        for x in v.iter_mut() {
            *x = field.mul(*x, inv);
        }
    }
}

/// Natural action of a matrix group (linear or projective) on the lines of
/// `F_p^n`, by `M·v` on column vectors.
pub fn projective_space_action(group: Arc<FiniteGroup>) -> Result<GroupAction> {
    let GroupKind::Matrix { n, field, .. } = group.kind() else {
        return Err(Error::InvalidArgument(format!("{} is not a matrix group", group.name())));
    };
    let points = projective_points(n, field);
    let index: HashMap<Vec<u8>, u32> = points.iter().cloned().zip(0..).collect();
    let labels = points.iter().map(|v| format!("[{}]", join_digits(v))).collect();
    let g = group.clone();
    GroupAction::from_fn(group, labels, move |a, x| {
        let m = g.element(a);
        let v = &points[x as usize];
        let mut w: Vec<u8> = (0..n)
            .map(|i| (0..n).fold(0, |acc, k| field.add(acc, field.mul(m[i * n + k], v[k]))))
            .collect();
        normalize_point(field, &mut w);
        index[&w]
    })
}

fn join_digits(v: &[u8]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Action on the left cosets `gH` by left multiplication. Point `i` is the
/// coset of the `i`-th least coset representative.
pub fn coset_action(group: Arc<FiniteGroup>, h: &Subgroup) -> Result<GroupAction> {
    let (id, reps) = group.left_cosets(h, &group.whole());
    let labels = reps.iter().map(|&r| format!("{}H", group.format(r))).collect();
    let g = group.clone();
    GroupAction::from_fn(group, labels, move |a, c| id[g.mul(a, reps[c as usize]) as usize])
}

/// `(t, x)·y = t + x y` on `F_p`.
pub fn affine_line_action(group: Arc<FiniteGroup>) -> Result<GroupAction> {
    let GroupKind::Affine { field } = group.kind() else {
        return Err(Error::InvalidArgument(format!("{} is not an affine group", group.name())));
    };
    let labels = (0..field.p()).map(|y| y.to_string()).collect();
    let g = group.clone();
    GroupAction::from_fn(group, labels, move |a, y| {
        let e = g.element(a);
        field.add(e[0], field.mul(e[1], y as u8)) as u32
    })
}

/// Left multiplication on the group itself.
pub fn regular_action(group: Arc<FiniteGroup>) -> Result<GroupAction> {
    let labels = group.elements().map(|x| group.format(x)).collect();
    let g = group.clone();
    GroupAction::from_fn(group, labels, move |a, x| g.mul(a, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingrp::group::{affine_group, cyclic_group, special_linear_group, DEFAULT_MAX_ORDER};

    #[test]
    fn point_counts() {
        assert_eq!(projective_points(3, PrimeField::new(2).unwrap()).len(), 7);
        assert_eq!(projective_points(2, PrimeField::new(7).unwrap()).len(), 8);
    }

    #[test]
    fn transitivity_examples() {
        let sl = Arc::new(special_linear_group(3, 2, DEFAULT_MAX_ORDER).unwrap());
        let a = projective_space_action(sl).unwrap();
        assert_eq!(a.num_points(), 7);
        assert!(a.is_2transitive());
        assert_eq!(a.stabilizer(0).order(), 24);

        let c4 = Arc::new(cyclic_group(4).unwrap());
        let r = regular_action(c4).unwrap();
        assert!(r.is_transitive());
        assert!(!r.is_2transitive());

        let aff = Arc::new(affine_group(5).unwrap());
        let l = affine_line_action(aff).unwrap();
        assert!(l.is_2transitive());
        assert_eq!(l.stabilizer(0).order(), 4);
        assert_eq!(l.setwise_stabilizer(&[0, 4]).order(), 2);
    }

    #[test]
    fn coset_action_of_borel() {
        let sl = Arc::new(special_linear_group(2, 3, DEFAULT_MAX_ORDER).unwrap());
        let b = crate::fingrp::group::upper_triangular_b(&sl).unwrap();
        let a = coset_action(sl, &b).unwrap();
        assert_eq!(a.num_points(), 4);
        assert!(a.is_2transitive());
        assert_eq!(a.orbits().len(), 1);
    }
}
