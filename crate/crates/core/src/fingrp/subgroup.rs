use std::collections::HashSet;

use super::group::FiniteGroup;
use crate::error::{Error, Result};

/// A subgroup of a [`FiniteGroup`], stored as a sorted member list plus a
/// membership mask over the ambient group.
#[derive(Debug, Clone)]
pub struct Subgroup {
    members: Vec<u32>,
    mask: Vec<bool>,
    gens: Vec<u32>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Sorted element indices.
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    /// A generating set (small, not necessarily minimal).
    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    pub fn contains(&self, g: u32) -> bool {
        self.mask[g as usize]
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }
}

impl FiniteGroup {
    fn closure_from(&self, mask: &mut Vec<bool>, members: &mut Vec<u32>, gens: &[u32]) {
        if members.is_empty() {
            mask[self.identity() as usize] = true;
            members.push(self.identity());
        }
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &s in gens {
                let y = self.mul(x, s);
                if !mask[y as usize] {
                    mask[y as usize] = true;
                    members.push(y);
                }
            }
        }
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[u32]) -> Subgroup {
        let mut mask = vec![false; self.order()];
        let mut members = Vec::new();
        let mut kept = Vec::new();
        for &g in gens {
            if g != self.identity() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        self.closure_from(&mut mask, &mut members, &kept);
        members.sort_unstable();
        Subgroup { members, mask, gens: kept }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: self.elements().collect(),
            mask: vec![true; self.order()],
            gens: self.generators().to_vec(),
        }
    }

    pub fn trivial(&self) -> Subgroup {
        self.closure(&[])
    }

    /// Wraps a member list, verifying that it is a subgroup. A small
    /// generating set is picked greedily on the way.
    pub fn subgroup_from_members(&self, mut members: Vec<u32>) -> Result<Subgroup> {
        members.sort_unstable();
        members.dedup();
        let mut target = vec![false; self.order()];
        for &m in &members {
            target[m as usize] = true;
        }
        let mut mask = vec![false; self.order()];
        let mut found: Vec<u32> = Vec::new();
        let mut gens = Vec::new();
        for &m in &members {
            if mask[m as usize] && !found.is_empty() {
                continue;
            }
            if m != self.identity() {
                gens.push(m);
            }
            // Extending by a new generator: multiply every known element by all gens again.
            self.closure_from(&mut mask, &mut found, &gens);
            if found.len() > members.len() || found.iter().any(|&x| !target[x as usize]) {
                return Err(Error::InvalidArgument("element set is not a subgroup".into()));
            }
        }
        if found.len() != members.len() {
            return Err(Error::InvalidArgument("element set is not a subgroup".into()));
        }
        Ok(Subgroup { members, mask, gens })
    }

    /// Subgroup generated by two subgroups.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let gens: Vec<u32> = a.gens.iter().chain(&b.gens).copied().collect();
        self.closure(&gens)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let members = a.members.iter().copied().filter(|&x| b.contains(x)).collect();
        self.subgroup_from_members(members).expect("intersections are subgroups")
    }

    /// `g H g^-1`.
    pub fn conjugate(&self, h: &Subgroup, g: u32) -> Subgroup {
        let members = h.members.iter().map(|&x| self.conj(g, x)).collect();
        let mut s = self.subgroup_from_members(members).expect("conjugates are subgroups");
        s.gens = h.gens.iter().map(|&x| self.conj(g, x)).collect();
        s
    }

    /// Whether `g` normalizes `h` (checked on generators).
    pub fn normalizes(&self, g: u32, h: &Subgroup) -> bool {
        h.gens.iter().all(|&x| h.contains(self.conj(g, x)))
    }

    /// Whether `h` is normal in `k`.
    pub fn is_normal_in(&self, h: &Subgroup, k: &Subgroup) -> bool {
        h.is_subset_of(k) && k.gens.iter().all(|&g| self.normalizes(g, h))
    }

    /// `N_K(H)`.
    pub fn normalizer(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let members = k.members.iter().copied().filter(|&g| self.normalizes(g, h)).collect();
        self.subgroup_from_members(members).expect("normalizers are subgroups")
    }

    /// Center of `k`.
    pub fn center(&self, k: &Subgroup) -> Subgroup {
        let members = k
            .members
            .iter()
            .copied()
            .filter(|&z| k.gens.iter().all(|&g| self.mul(g, z) == self.mul(z, g)))
            .collect();
        self.subgroup_from_members(members).expect("centers are subgroups")
    }

    /// Smallest normal subgroup of `k` containing `elems`.
    pub fn normal_closure(&self, elems: &[u32], k: &Subgroup) -> Subgroup {
        let mut h = self.closure(elems);
        loop {
            let extra: Vec<u32> = h
                .gens
                .iter()
                .flat_map(|&x| k.gens.iter().map(move |&g| (g, x)))
                .map(|(g, x)| self.conj(g, x))
                .filter(|&y| !h.contains(y))
                .collect();
            if extra.is_empty() {
                return h;
            }
            let mut gens = h.gens.clone();
            gens.extend(extra);
            h = self.closure(&gens);
        }
    }

    /// Conjugacy classes of `k`, each sorted, ordered by least member.
    pub fn conjugacy_classes(&self, k: &Subgroup) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.order()];
        let mut classes = Vec::new();
        for &x in &k.members {
            if seen[x as usize] {
                continue;
            }
            seen[x as usize] = true;
            let mut class = vec![x];
            let mut head = 0;
            while head < class.len() {
                let y = class[head];
                head += 1;
                for &g in &k.gens {
                    let z = self.conj(g, y);
                    if !seen[z as usize] {
                        seen[z as usize] = true;
                        class.push(z);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// All normal subgroups of `k`, found by joining normal closures of
    /// conjugacy classes until nothing new appears. Sorted by order, then
    /// members.
    pub fn normal_subgroups(&self, k: &Subgroup, cap: usize) -> Result<Vec<Subgroup>> {
        let class_closures: Vec<Subgroup> = self
            .conjugacy_classes(k)
            .iter()
            .skip(1)
            .map(|c| self.normal_closure(&c[..1], k))
            .collect();
        let mut found: Vec<Subgroup> = vec![self.trivial()];
        let mut seen: HashSet<Vec<u32>> = HashSet::from([found[0].members.clone()]);
        let mut head = 0;
        while head < found.len() {
            let n = found[head].clone();
            head += 1;
            for c in &class_closures {
                if c.is_subset_of(&n) {
                    continue;
                }
                let j = self.join(&n, c);
                if seen.insert(j.members.clone()) {
                    if found.len() >= cap {
                        return Err(Error::CapExceeded { what: "normal subgroup search", cap });
                    }
                    found.push(j);
                }
            }
        }
        found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
        Ok(found)
    }

    /// Size of the product set `AB`.
    pub fn product_size(&self, a: &Subgroup, b: &Subgroup) -> usize {
        a.order() * b.order() / self.intersection(a, b).order()
    }

    /// Left cosets `gH` of `h` in `k`: returns (coset id per element of the
    /// ambient group or `u32::MAX` outside `k`, least representative per coset).
    pub fn left_cosets(&self, h: &Subgroup, k: &Subgroup) -> (Vec<u32>, Vec<u32>) {
        let mut id = vec![u32::MAX; self.order()];
        let mut reps = Vec::new();
        for &g in &k.members {
            if id[g as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(g);
            for &x in &h.members {
                id[self.mul(g, x) as usize] = c;
            }
        }
        (id, reps)
    }
}

#[cfg(test)]
mod tests {
    use crate::fingrp::group::{central_quotient, special_linear_group, DEFAULT_MAX_ORDER};

    #[test]
    fn closure_basics() {
        let g = special_linear_group(2, 2, DEFAULT_MAX_ORDER).unwrap();
        assert!(g.closure(&[g.identity()]).is_trivial());
        let invols: Vec<u32> = g.elements().filter(|&x| g.element_order(x) == 2).collect();
        assert_eq!(invols.len(), 3);
        assert_eq!(g.closure(&invols[..2]).order(), 6);
        assert_eq!(g.closure(&invols[..1]).order(), 2);
    }

    #[test]
    fn simplicity_of_psl3f2() {
        let sl = special_linear_group(3, 2, DEFAULT_MAX_ORDER).unwrap();
        let g = central_quotient(&sl).unwrap();
        let normals = g.normal_subgroups(&g.whole(), 64).unwrap();
        let orders: Vec<usize> = normals.iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 168]);
        assert_eq!(g.conjugacy_classes(&g.whole()).len(), 6);
    }

    #[test]
    fn sl23_structure() {
        let g = special_linear_group(2, 3, DEFAULT_MAX_ORDER).unwrap();
        let all = g.whole();
        assert_eq!(g.center(&all).order(), 2);
        let orders: Vec<usize> = g.normal_subgroups(&all, 64).unwrap().iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 2, 8, 24]);
        assert!(g.subgroup_from_members(vec![0, 1]).is_err());
    }

    #[test]
    fn cosets_partition() {
        let g = special_linear_group(3, 2, DEFAULT_MAX_ORDER).unwrap();
        let b = crate::fingrp::group::upper_triangular_b(&g).unwrap();
        let (id, reps) = g.left_cosets(&b, &g.whole());
        assert_eq!(reps.len(), 21);
        assert!(id.iter().all(|&c| (c as usize) < 21));
        let nb = g.normalizer(&b, &g.whole());
        assert_eq!(nb, b);
    }
}
