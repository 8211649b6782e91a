//! Exact rational phase-one simplex for `w ≥ 0, Σ w = 1, Σ w_g g ≤ a`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::partitions::Exponent;

/// Convex weights `w` on `points` with `Σ w_g g ≤ a`, if any exist.
pub fn convex_combination(points: &[Exponent], a: &[u32]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let m = points.len();
    if m == 0 {
        return None;
    }
    // columns: w_0..w_{m-1}, s_0..s_{n-1}, art; then rhs
    let cols = m + n + 1;
    let rows = n + 1;
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut t: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); cols + 1]; rows];
    for i in 0..n {
        for (g, p) in points.iter().enumerate() {
            t[i][g] = q(i64::from(p[i]));
        }
        t[i][m + i] = BigRational::one();
        t[i][cols] = q(i64::from(a[i]));
    }
    for g in 0..m {
        t[n][g] = BigRational::one();
    }
    t[n][m + n] = BigRational::one();
    t[n][cols] = BigRational::one();
    let mut basis: Vec<usize> = (0..n).map(|i| m + i).chain([m + n]).collect();
    let cost = |j: usize| if j == m + n { BigRational::one() } else { BigRational::zero() };

    loop {
        // reduced costs c_B B^{-1} A_j - c_j; enter the lowest index with a positive value
        let entering = (0..cols).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let mut r = -cost(j);
            for (i, &b) in basis.iter().enumerate() {
                if b == m + n {
                    r += &t[i][j];
                }
            }
            r.is_positive()
        });
        let Some(j) = entering else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..rows {
            if t[i][j].is_positive() {
                let ratio = &t[i][cols] / &t[i][j];
                let better = match &leave {
                    None => true,
                    Some((k, r)) => ratio < *r || (ratio == *r && basis[i] < basis[*k]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else { break };
        let piv = t[r][j].clone();
        for x in t[r].iter_mut() {
            *x /= &piv;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[j].is_zero() {
                let f = row[j].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        basis[r] = j;
    }
    let art_level = basis
        .iter()
        .position(|&b| b == m + n)
        .map(|i| t[i][cols].clone())
        .unwrap_or_else(BigRational::zero);
    if !art_level.is_zero() {
        return None;
    }
    let mut w = vec![BigRational::zero(); m];
    for (i, &b) in basis.iter().enumerate() {
        if b < m {
            w[b] = t[i][cols].clone();
        }
    }
    Some(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn midpoint_feasible() {
        let w = convex_combination(&[vec![2, 0], vec![0, 2]], &[1, 1]).unwrap();
        let total: BigRational = w.iter().sum();
        assert!(total.is_one());
        assert!(convex_combination(&[vec![2, 0], vec![0, 2]], &[1, 0]).is_none());
    }
}
