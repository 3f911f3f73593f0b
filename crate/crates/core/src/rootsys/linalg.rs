//! Small exact linear algebra over the rationals.

use num_rational::Ratio;
use num_traits::{One, Zero};

type Q = Ratio<i64>;

/// Inverse of a nonsingular square integer matrix, or `None` when singular.
pub(crate) fn inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| Q::from_integer(x)).collect();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// `m * v`, requiring every entry of the result to be an integer.
pub(crate) fn apply_integral(m: &[Vec<Q>], v: &[i64]) -> Option<Vec<i64>> {
    m.iter()
        .map(|row| {
            let s = row
                .iter()
                .zip(v)
                .fold(Q::zero(), |acc, (a, &b)| acc + *a * Q::from_integer(b));
            s.is_integer().then(|| s.to_integer())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_a2_gram() {
        let inv = inverse(&[vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(inv[0][0], Q::new(2, 3));
        assert_eq!(inv[0][1], Q::new(1, 3));
        assert_eq!(apply_integral(&inv, &[1, 1]), Some(vec![1, 1]));
        assert_eq!(apply_integral(&inv, &[1, 0]), None);
    }

    #[test]
    fn singular_matrix() {
        assert!(inverse(&[vec![1, 2], vec![2, 4]]).is_none());
    }
}
