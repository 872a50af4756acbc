//! Square integer matrices with exact fraction-free determinants.

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IMat {
    n: usize,
    data: Vec<BigInt>,
}

impl IMat {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IMat {
            n,
            data: rows
                .into_iter()
                .flatten()
                .map(BigInt::from)
                .collect(),
        }
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IMat {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![BigInt::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = BigInt::one();
        }
        IMat { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                // pivot search
                let swap = (k + 1..n).find(|&i| !m[i * n + k].is_zero());
                match swap {
                    None => return BigInt::zero(),
                    Some(i) => {
                        for j in 0..n {
                            m.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let val = (&m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j])
                        / &prev;
                    m[i * n + j] = val;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = m[k * n + k].clone();
        }
        sign * m[(n - 1) * n + (n - 1)].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Oracle: cofactor expansion along the first row.
    pub(crate) fn det_cofactor(m: &IMat) -> BigInt {
        let n = m.dim();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m.at(0, 0).clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if m.at(0, j).is_zero() {
                continue;
            }
            let minor_rows: Vec<Vec<BigInt>> = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| m.at(i, c).clone())
                        .collect()
                })
                .collect();
            let minor = IMat::from_bigint_rows(minor_rows);
            let term = m.at(0, j) * det_cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn identity_det() {
        assert_eq!(IMat::identity(5).det(), BigInt::one());
        assert_eq!(IMat::identity(0).det(), BigInt::one());
    }

    #[test]
    fn singular_det() {
        let m = IMat::from_rows(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(m.det(), BigInt::zero());
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(entries in proptest::collection::vec(-5i64..=5, 16)) {
            for n in 1..=4usize {
                let rows: Vec<Vec<i64>> =
                    (0..n).map(|i| entries[i * n..(i + 1) * n].to_vec()).collect();
                let m = IMat::from_rows(rows);
                prop_assert_eq!(m.det(), det_cofactor(&m));
            }
        }
    }
}
