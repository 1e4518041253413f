//! Exact Gaussian elimination over a field.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = F::one().div(&m[row][col]);
        for x in m[row].iter_mut().skip(col) {
            *x = x.mul(&inv);
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x = x.sub(&f.mul(p));
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    pivots
}

/// A basis of `{x : m x = 0}`, one vector per free column.
pub fn nullspace<F: Field>(m: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = a[r][f].neg();
            }
            v
        })
        .collect()
}

/// The unique solution of a square system, or `None` if singular.
pub fn solve<F: Field>(m: &[Vec<F>], rhs: &[F]) -> Option<Vec<F>> {
    let n = rhs.len();
    let mut a: Vec<Vec<F>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut a, n);
    if pivots.len() < n {
        return None;
    }
    Some(a.iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = vec![vec![r(1), r(2), r(3)], vec![r(2), r(4), r(6)]];
        let k = nullspace(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &m {
                let s = row.iter().zip(v).fold(r(0), |a, (x, y)| a + x * y);
                assert!(Zero::is_zero(&s));
            }
        }
    }

    #[test]
    fn square_solve() {
        let m = vec![vec![r(2), r(1)], vec![r(1), r(3)]];
        let x = solve(&m, &[r(3), r(5)]).unwrap();
        assert_eq!(x, vec![BigRational::new(BigInt::from(4), BigInt::from(5)), BigRational::new(BigInt::from(7), BigInt::from(5))]);
        assert!(solve(&[vec![r(1), r(1)], vec![r(2), r(2)]], &[r(0), r(1)]).is_none());
    }
}
