//! Small dense matrices over GF(p): just what Frobenius tables, kernels of
//! linearized maps, and embedding solves need.

use crate::gfpoly::modinv;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FpMat {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    a: Vec<u64>, // row-major
}

impl FpMat {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        FpMat { p, rows, cols, a: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.a[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.a[i * self.cols + j] = v % self.p;
    }

    pub fn mul(&self, rhs: &FpMat) -> FpMat {
        assert_eq!(self.cols, rhs.rows);
        let p = self.p;
        let mut out = FpMat::zeros(p, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let s = self.at(i, k);
                if s == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = (out.at(i, j) + s * rhs.at(k, j)) % p;
                    out.a[i * out.cols + j] = v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        let p = self.p;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for j in 0..self.cols {
                    acc = (acc + self.at(i, j) * v[j]) % p;
                }
                acc
            })
            .collect()
    }

    pub fn sub(&self, rhs: &FpMat) -> FpMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let p = self.p;
        let mut out = self.clone();
        for (x, &y) in out.a.iter_mut().zip(rhs.a.iter()) {
            *x = (*x + p - y) % p;
        }
        out
    }

    /// In-place row reduction; returns the pivot column of each pivot row.
    fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            for j in 0..self.cols {
                self.a.swap(row * self.cols + j, pr * self.cols + j);
            }
            let inv = modinv(self.at(row, col), p);
            for j in col..self.cols {
                let v = self.at(row, j) * inv % p;
                self.a[row * self.cols + j] = v;
            }
            for r in 0..self.rows {
                if r != row && self.at(r, col) != 0 {
                    let c = self.at(r, col);
                    for j in col..self.cols {
                        let v = (self.at(r, j) + (p - c) * self.at(row, j)) % p;
                        self.a[r * self.cols + j] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    /// Basis of the column space, as coefficient vectors.
    pub fn col_space_basis(&self) -> Vec<Vec<u64>> {
        let mut t = FpMat::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j));
            }
        }
        let pivots = t.rref();
        (0..pivots.len())
            .map(|r| (0..t.cols).map(|j| t.at(r, j)).collect())
            .collect()
    }

    /// Basis of the right nullspace {v : M v = 0}.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m.at(r, free)) % p;
            }
            basis.push(v);
        }
        basis
    }

    /// One particular solution of M x = b (free variables set to 0), or None.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(self.rows, b.len());
        let p = self.p;
        let mut aug = FpMat::zeros(p, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j));
            }
            aug.set(i, self.cols, b[i] % p);
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None; // a pivot in the augmented column: inconsistent
        }
        let mut x = vec![0u64; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(r, self.cols);
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(p: u64, rows: &[&[u64]]) -> FpMat {
        let mut m = FpMat::zeros(p, rows.len(), rows[0].len());
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    #[test]
    fn rank_and_nullspace_over_gf2() {
        // Rows 0 and 1 sum to row 2 over GF(2).
        let m = from_rows(2, &[&[1, 0, 1], &[0, 1, 1], &[1, 1, 0]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(m.mul_vec(&ns[0]), vec![0, 0, 0]);
        assert_eq!(ns[0], vec![1, 1, 1]);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = from_rows(5, &[&[1, 2], &[3, 4]]);
        // det = 4 - 6 = -2 = 3 mod 5: invertible.
        let x = m.solve(&[1, 0]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![1, 0]);

        let sing = from_rows(5, &[&[1, 2], &[2, 4]]);
        assert!(sing.solve(&[1, 0]).is_none());
        assert_eq!(m.mul(&FpMat::identity(5, 2)), m);
    }
}
