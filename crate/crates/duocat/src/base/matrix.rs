//! Dense matrices over a prime field F_p, p <= 257. All arithmetic is exact.

use crate::error::{Error, Result};

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Row-major matrix over F_p. A `rows x cols` matrix represents a linear map
/// from a `cols`-dimensional space to a `rows`-dimensional space.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Matrix {
    p: u32,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u32>,
}

fn fadd(p: u32, a: u32, b: u32) -> u32 {
    (a + b) % p
}

fn fsub(p: u32, a: u32, b: u32) -> u32 {
    (a + p - b) % p
}

fn fmul(p: u32, a: u32, b: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn finv(p: u32, a: u32) -> u32 {
    // Fermat: a^(p-2) mod p, valid since p is prime and a != 0.
    let mut base = a as u64;
    let mut exp = p as u64 - 2;
    let m = p as u64;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u32
}

impl Matrix {
    pub fn zero(p: u32, rows: usize, cols: usize) -> Self {
        Matrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Matrix::zero(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_vec(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "matrix data length {} does not match {}x{}",
                data.len(),
                rows,
                cols
            )));
        }
        if let Some(bad) = data.iter().find(|&&x| x >= p) {
            return Err(Error::Shape(format!("matrix entry {bad} not reduced mod {p}")));
        }
        Ok(Matrix { p, rows, cols, data })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.p != rhs.p {
            return Err(Error::Shape("matrix moduli differ".into()));
        }
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zero(self.p, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = fadd(self.p, out.get(i, j), fmul(self.p, a, rhs.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip(rhs, fadd)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip(rhs, fsub)
    }

    fn zip(&self, rhs: &Matrix, op: fn(u32, u32, u32) -> u32) -> Result<Matrix> {
        if self.p != rhs.p || self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape("matrix shapes differ".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| op(self.p, a, b))
            .collect();
        Ok(Matrix { p: self.p, rows: self.rows, cols: self.cols, data })
    }

    /// Kronecker product with row-major pair indexing: the entry at
    /// (i1*rows2 + i2, j1*cols2 + j2) is self[i1,j1] * rhs[i2,j2].
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Matrix::zero(self.p, rows, cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a == 0 {
                    continue;
                }
                for i2 in 0..rhs.rows {
                    for j2 in 0..rhs.cols {
                        let v = fmul(self.p, a, rhs.get(i2, j2));
                        out.set(i1 * rhs.rows + i2, j1 * rhs.cols + j2, v);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.p;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    let a = m.get(row, c);
                    let b = m.get(pr, c);
                    m.set(row, c, b);
                    m.set(pr, c, a);
                }
            }
            let inv = finv(p, m.get(row, col));
            for c in 0..m.cols {
                m.set(row, c, fmul(p, inv, m.get(row, c)));
            }
            for r in 0..m.rows {
                if r != row && m.get(r, col) != 0 {
                    let factor = m.get(r, col);
                    for c in 0..m.cols {
                        let v = fsub(p, m.get(r, c), fmul(p, factor, m.get(row, c)));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, one column per free variable, free columns in
    /// ascending order; each basis vector has a 1 in its free coordinate.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zero(self.p, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, fsub(self.p, 0, r.get(i, f)));
            }
        }
        out
    }

    /// Solves self * X = rhs, returning the particular solution with all free
    /// variables zero; None when the system is inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        if self.rows != rhs.rows || self.p != rhs.p {
            return None;
        }
        let mut aug = Matrix::zero(self.p, self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            for c in 0..rhs.cols {
                aug.set(r, self.cols + c, rhs.get(r, c));
            }
        }
        let (red, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zero(self.p, self.cols, rhs.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, red.get(i, self.cols + j));
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let inv = self.solve(&Matrix::identity(self.p, self.rows))?;
        let check = self.mul(&inv).ok()?;
        if check == Matrix::identity(self.p, self.rows) {
            Some(inv)
        } else {
            None
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.p, self.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent rank oracle: the row span of a matrix over F_p is a finite
    /// group under addition; its size is p^rank. Computed by closure, with no
    /// elimination involved.
    fn rank_by_span(m: &Matrix) -> usize {
        let p = m.modulus();
        let mut span: std::collections::BTreeSet<Vec<u32>> = std::collections::BTreeSet::new();
        span.insert(vec![0; m.cols]);
        loop {
            let mut grew = false;
            let snapshot: Vec<Vec<u32>> = span.iter().cloned().collect();
            for v in &snapshot {
                for r in 0..m.rows {
                    let w: Vec<u32> = (0..m.cols)
                        .map(|c| fadd(p, v[c], m.get(r, c)))
                        .collect();
                    if span.insert(w) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let mut size = span.len();
        let mut rank = 0;
        while size > 1 {
            size /= p as usize;
            rank += 1;
        }
        rank
    }

    #[test]
    fn f2_unipotent_is_self_inverse() {
        let m = Matrix::from_vec(2, 2, 2, vec![1, 1, 0, 1]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(inv, m);
        assert!(m.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn rank_matches_span_oracle() {
        let cases = [
            Matrix::from_vec(2, 3, 2, vec![1, 0, 0, 0, 0, 0]).unwrap(),
            Matrix::from_vec(3, 3, 3, vec![1, 2, 0, 2, 1, 1, 0, 0, 1]).unwrap(),
            Matrix::from_vec(5, 2, 4, vec![1, 2, 3, 4, 2, 4, 1, 3]).unwrap(),
            Matrix::zero(7, 3, 3),
        ];
        for m in &cases {
            assert_eq!(m.rank(), rank_by_span(m));
        }
    }

    #[test]
    fn kernel_vectors_are_killed() {
        let m = Matrix::from_vec(3, 2, 3, vec![1, 2, 0, 1, 2, 0]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(m.cols - m.rank(), k.cols);
        let prod = m.mul(&k).unwrap();
        assert_eq!(prod, Matrix::zero(3, 2, k.cols));
    }

    #[test]
    fn kron_mixed_product() {
        let a = Matrix::from_vec(3, 2, 2, vec![1, 2, 0, 1]).unwrap();
        let b = Matrix::from_vec(3, 2, 3, vec![1, 0, 2, 2, 1, 0]).unwrap();
        let c = Matrix::from_vec(3, 2, 2, vec![2, 1, 1, 1]).unwrap();
        let d = Matrix::from_vec(3, 3, 2, vec![1, 1, 0, 2, 1, 0]).unwrap();
        let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn solve_finds_consistent_solutions_and_rejects_inconsistent() {
        let a = Matrix::from_vec(5, 2, 2, vec![1, 2, 2, 4]).unwrap(); // rank 1
        let good = Matrix::from_vec(5, 2, 1, vec![3, 1]).unwrap(); // 2*(3) = 6 = 1 mod 5
        let x = a.solve(&good).unwrap();
        assert_eq!(a.mul(&x).unwrap(), good);
        let bad = Matrix::from_vec(5, 2, 1, vec![1, 1]).unwrap();
        assert!(a.solve(&bad).is_none());
    }

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(3) && is_prime(257));
        assert!(!is_prime(1) && !is_prime(256) && !is_prime(0));
    }
}
