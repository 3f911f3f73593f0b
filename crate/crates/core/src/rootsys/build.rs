//! Explicit ambient-coordinate constructions, one per family.
//!
//! Coordinates and simple roots follow the Bourbaki plates with 0-based
//! ambient indices. Families with half-integer roots (F4, E6-E8) are stored
//! with every coordinate doubled.

use super::{Family, RootSystemSpec};

pub(super) struct RawSystem {
    pub ambient_dim: usize,
    pub scale: i64,
    pub roots: Vec<Vec<i64>>,
    pub simple: Vec<Vec<i64>>,
}

fn unit(dim: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = c;
    v
}

fn pair(dim: usize, i: usize, ci: i64, j: usize, cj: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] += ci;
    v[j] += cj;
    v
}

/// `±c e_i ± c e_j` for all `i < j`.
fn long_pairs(dim: usize, c: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for si in [c, -c] {
                for sj in [c, -c] {
                    out.push(pair(dim, i, si, j, sj));
                }
            }
        }
    }
    out
}

fn singles(dim: usize, c: i64) -> Vec<Vec<i64>> {
    (0..dim).flat_map(|i| [unit(dim, i, c), unit(dim, i, -c)]).collect()
}

/// Simple roots `e_i - e_{i+1}` for `i < count`, scaled by `c`.
fn chain(dim: usize, count: usize, c: i64) -> Vec<Vec<i64>> {
    (0..count).map(|i| pair(dim, i, c, i + 1, -c)).collect()
}

fn e8() -> RawSystem {
    let dim = 8;
    let mut roots = long_pairs(dim, 2);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            roots.push((0..dim).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
        }
    }
    let mut simple = vec![
        vec![1, -1, -1, -1, -1, -1, -1, 1],
        pair(dim, 0, 2, 1, 2),
        pair(dim, 0, -2, 1, 2),
    ];
    for i in 1..6 {
        simple.push(pair(dim, i, -2, i + 1, 2));
    }
    RawSystem { ambient_dim: dim, scale: 2, roots, simple }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// E6 and E7 as the E8 roots orthogonal to fixed vectors, which keeps the
/// Bourbaki simple roots.
fn e_sub(rank: usize) -> RawSystem {
    let big = e8();
    let mut normals = vec![pair(8, 6, 1, 7, 1)];
    if rank == 6 {
        normals.push(pair(8, 5, 1, 7, 1));
    }
    let keep = |v: &Vec<i64>| normals.iter().all(|n| dot(n, v) == 0);
    RawSystem {
        ambient_dim: 8,
        scale: 2,
        roots: big.roots.into_iter().filter(keep).collect(),
        simple: big.simple[..rank].to_vec(),
    }
}

pub(super) fn raw(spec: RootSystemSpec) -> RawSystem {
    let n = spec.rank;
    match spec.family {
        Family::A => {
            let dim = n + 1;
            let mut roots = Vec::new();
            for i in 0..dim {
                for j in 0..dim {
                    if i != j {
                        roots.push(pair(dim, i, 1, j, -1));
                    }
                }
            }
            RawSystem { ambient_dim: dim, scale: 1, roots, simple: chain(dim, n, 1) }
        }
        Family::B | Family::C | Family::BC => {
            let mut roots = long_pairs(n, 1);
            let mut simple = chain(n, n - 1, 1);
            if spec.family != Family::C {
                roots.extend(singles(n, 1));
            }
            if spec.family != Family::B {
                roots.extend(singles(n, 2));
            }
            let last = if spec.family == Family::C { 2 } else { 1 };
            simple.push(unit(n, n - 1, last));
            RawSystem { ambient_dim: n, scale: 1, roots, simple }
        }
        Family::D => {
            let mut simple = chain(n, n - 1, 1);
            simple.push(pair(n, n - 2, 1, n - 1, 1));
            RawSystem { ambient_dim: n, scale: 1, roots: long_pairs(n, 1), simple }
        }
        Family::G => {
            let mut roots = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        roots.push(pair(3, i, 1, j, -1));
                    }
                }
                let mut long = vec![-1; 3];
                long[i] = 2;
                roots.push(long.clone());
                roots.push(long.iter().map(|x| -x).collect());
            }
            let simple = vec![vec![1, -1, 0], vec![-2, 1, 1]];
            RawSystem { ambient_dim: 3, scale: 1, roots, simple }
        }
        Family::F => {
            let mut roots = long_pairs(4, 2);
            roots.extend(singles(4, 2));
            for mask in 0u32..16 {
                roots.push((0..4).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
            }
            let simple = vec![
                vec![0, 2, -2, 0],
                vec![0, 0, 2, -2],
                vec![0, 0, 0, 2],
                vec![1, -1, -1, -1],
            ];
            RawSystem { ambient_dim: 4, scale: 2, roots, simple }
        }
        Family::E if n == 8 => e8(),
        Family::E => e_sub(n),
    }
}
