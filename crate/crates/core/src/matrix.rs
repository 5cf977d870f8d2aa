//! Dense matrices over a finite field, row-vector convention.
//!
//! A matrix `g` acts on a row vector by `x -> x g`, so `(x g) h = x (g h)`
//! and products compose left to right.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Gf};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.0.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Gf::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = Gf::ONE;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Gf>]) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.concat() })
    }

    /// Build from small integers (prime-field entries or raw element indices).
    pub fn from_u16(rows: usize, cols: usize, entries: &[u16]) -> Matrix {
        assert_eq!(entries.len(), rows * cols);
        Matrix { rows, cols, data: entries.iter().map(|&v| Gf(v)).collect() }
    }

    /// Permutation matrix sending basis vector `i` to basis vector `perm[i]`.
    pub fn permutation(perm: &[usize]) -> Matrix {
        let n = perm.len();
        let mut m = Matrix::zero(n, n);
        for (i, &j) in perm.iter().enumerate() {
            m.set(i, j, Gf::ONE);
        }
        m
    }

    pub fn diagonal(d: &[Gf]) -> Matrix {
        let mut m = Matrix::zero(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Gf {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Gf) {
        self.data[r * self.cols + c] = v;
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[Gf] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn entries(&self) -> &[Gf] {
        &self.data
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == if r == c { Gf::ONE } else { Gf::ZERO }))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, k: &Field, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul_unchecked(k, other))
    }

    pub(crate) fn mul_unchecked(&self, k: &Field, other: &Matrix) -> Matrix {
        let (n, m, p) = (self.rows, self.cols, other.cols);
        let mut out = Matrix::zero(n, p);
        for i in 0..n {
            let orow = &mut out.data[i * p..(i + 1) * p];
            for l in 0..m {
                let a = self.data[i * m + l];
                if a.is_zero() {
                    continue;
                }
                let brow = &other.data[l * p..(l + 1) * p];
                if a == Gf::ONE {
                    for (o, &b) in orow.iter_mut().zip(brow) {
                        *o = k.add(*o, b);
                    }
                } else {
                    for (o, &b) in orow.iter_mut().zip(brow) {
                        *o = k.add(*o, k.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, k: &Field, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch("addition".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| k.add(a, b)).collect(),
        })
    }

    pub fn scale(&self, k: &Field, s: Gf) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| k.mul(s, a)).collect() }
    }

    /// Apply a field map entrywise (e.g. Frobenius).
    pub fn map(&self, f: impl Fn(Gf) -> Gf) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f(a)).collect() }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, k: &Field, x: &[Gf]) -> Vec<Gf> {
        let mut out = vec![Gf::ZERO; self.cols];
        self.vec_mul_into(k, x, &mut out);
        out
    }

    #[inline]
    pub fn vec_mul_into(&self, k: &Field, x: &[Gf], out: &mut [Gf]) {
        debug_assert_eq!(x.len(), self.rows);
        out.iter_mut().for_each(|o| *o = Gf::ZERO);
        for (l, &a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let brow = self.row(l);
            for (o, &b) in out.iter_mut().zip(brow) {
                *o = k.add(*o, k.mul(a, b));
            }
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self, k: &Field) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = k.inv(m.get(r, c)).expect("nonzero pivot");
            m.scale_row(k, r, inv);
            for i in 0..m.rows {
                if i != r {
                    let f = m.get(i, c);
                    if !f.is_zero() {
                        m.add_row_multiple(k, i, r, k.neg(f));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, k: &Field, r: usize, s: Gf) {
        for c in 0..self.cols {
            let v = self.get(r, c);
            self.set(r, c, k.mul(s, v));
        }
    }

    /// row[dst] += s * row[src]
    fn add_row_multiple(&mut self, k: &Field, dst: usize, src: usize, s: Gf) {
        for c in 0..self.cols {
            let v = k.add(self.get(dst, c), k.mul(s, self.get(src, c)));
            self.set(dst, c, v);
        }
    }

    pub fn rank(&self, k: &Field) -> usize {
        self.rref(k).1.len()
    }

    pub fn inv(&self, k: &Field) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, Gf::ONE);
        }
        let (red, piv) = aug.rref(k);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        let mut out = Matrix::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, red.get(r, n + c));
            }
        }
        Ok(out)
    }

    pub fn det(&self, k: &Field) -> Result<Gf> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Gf::ONE;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else { return Ok(Gf::ZERO) };
            if p != c {
                m.swap_rows(p, c);
                det = k.neg(det);
            }
            let piv = m.get(c, c);
            det = k.mul(det, piv);
            let inv = k.inv(piv)?;
            for i in c + 1..n {
                let f = m.get(i, c);
                if !f.is_zero() {
                    m.add_row_multiple(k, i, c, k.neg(k.mul(f, inv)));
                }
            }
        }
        Ok(det)
    }

    /// Basis of the left kernel `{x : x A = 0}` as row vectors.
    pub fn kernel_basis(&self, k: &Field) -> Vec<Vec<Gf>> {
        // x A = 0  <=>  A^T x^T = 0: null space of the transpose.
        let t = self.transpose();
        let (red, piv) = t.rref(k);
        let free: Vec<usize> = (0..t.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Gf::ZERO; t.cols];
                v[fc] = Gf::ONE;
                for (r, &pc) in piv.iter().enumerate() {
                    v[pc] = k.neg(red.get(r, fc));
                }
                v
            })
            .collect()
    }

    /// Kronecker product `self ⊗ other`, first factor major.
    pub fn kronecker(&self, k: &Field, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zero(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        out.set(i * other.rows + p, j * other.cols + q, k.mul(a, other.get(p, q)));
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum of square blocks.
    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zero(n, n);
        let mut off = 0;
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(off + r, off + c, b.get(r, c));
                }
            }
            off += b.rows;
        }
        out
    }

    /// `C g C^{-1}`: the matrix of `g` in the basis given by the rows of `C`.
    pub fn conjugate_by_basis(&self, k: &Field, c: &Matrix, c_inv: &Matrix) -> Matrix {
        c.mul_unchecked(k, self).mul_unchecked(k, c_inv)
    }

    /// Stable row-major text form: one line per row, entries as element indices.
    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.0.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Standard basis row vector.
pub fn unit_vector(n: usize, i: usize) -> Vec<Gf> {
    let mut v = vec![Gf::ZERO; n];
    v[i] = Gf::ONE;
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Field {
        Field::with_order(q).unwrap()
    }

    #[test]
    fn identity_has_full_rank() {
        let k = gf(4);
        for n in 1..7 {
            assert_eq!(Matrix::identity(n).rank(&k), n);
        }
    }

    #[test]
    fn zero_map_kernel_is_everything() {
        let k = gf(2);
        assert_eq!(Matrix::zero(3, 3).kernel_basis(&k).len(), 3);
    }

    #[test]
    fn inverse_roundtrip_and_singular() {
        let k = gf(4);
        let g = Matrix::from_u16(3, 3, &[1, 2, 0, 0, 1, 3, 2, 0, 1]);
        let gi = g.inv(&k).unwrap();
        assert!(g.mul(&k, &gi).unwrap().is_identity());
        assert!(gi.mul(&k, &g).unwrap().is_identity());
        let s = Matrix::from_u16(2, 2, &[1, 2, 1, 2]);
        assert_eq!(s.inv(&k), Err(Error::SingularMatrix));
        assert_eq!(s.det(&k).unwrap(), Gf::ZERO);
    }

    #[test]
    fn determinant_is_multiplicative() {
        let k = gf(5);
        let a = Matrix::from_u16(3, 3, &[1, 2, 3, 0, 4, 1, 2, 2, 0]);
        let b = Matrix::from_u16(3, 3, &[3, 0, 1, 1, 1, 0, 4, 2, 2]);
        let ab = a.mul(&k, &b).unwrap();
        assert_eq!(ab.det(&k).unwrap(), k.mul(a.det(&k).unwrap(), b.det(&k).unwrap()));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let k = gf(4);
        let a = Matrix::from_u16(3, 2, &[1, 2, 2, 3, 3, 1]);
        let ker = a.kernel_basis(&k);
        assert_eq!(ker.len(), 3 - a.rank(&k));
        for v in ker {
            assert!(a.vec_mul(&k, &v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn shape_errors() {
        let k = gf(2);
        let a = Matrix::zero(2, 3);
        assert!(matches!(a.mul(&k, &a), Err(Error::ShapeMismatch(_))));
        assert!(matches!(a.inv(&k), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn kronecker_is_multiplicative() {
        let k = gf(4);
        let a = Matrix::from_u16(2, 2, &[1, 2, 0, 1]);
        let b = Matrix::from_u16(2, 2, &[3, 1, 1, 0]);
        let c = Matrix::from_u16(2, 2, &[0, 1, 1, 1]);
        let d = Matrix::from_u16(2, 2, &[2, 2, 0, 3]);
        let lhs = a.kronecker(&k, &b).mul(&k, &c.kronecker(&k, &d)).unwrap();
        let rhs = a.mul(&k, &c).unwrap().kronecker(&k, &b.mul(&k, &d).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_format_is_row_major() {
        let m = Matrix::from_u16(2, 2, &[0, 1, 2, 3]);
        assert_eq!(m.to_text(), "0 1\n2 3");
    }
}
