//! Group actions on canonical point encodings.
//!
//! Matrix groups act on vectors, lines, subspaces and quadratic forms; the
//! points are packed into a `u128` so orbits hash quickly. Permutation groups
//! act on integers, subsets, oriented subsets and set partitions.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::forms::{triangularize, QuadraticForm};
use crate::matrix::{unit_vector, Matrix};
use crate::perm::Perm;

/// A right action of a group on points. Composition is left to right:
/// `act(act(p, a), b) == act(p, mul(a, b))`.
pub trait Action: Clone {
    type Elem: Clone + Debug;
    type Point: Clone + Eq + Hash + Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn act(&self, p: &Self::Point, g: &Self::Elem) -> Self::Point;
    fn is_identity(&self, g: &Self::Elem) -> bool;
    /// Points whose pointwise stabilizer is trivial, in base-selection order.
    fn faithful_points(&self) -> Vec<Self::Point>;

    fn conj(&self, g: &Self::Elem, x: &Self::Elem) -> Self::Elem {
        // x^{-1} g x
        self.mul(&self.mul(&self.inv(x), g), x)
    }
}

/// An invertible matrix carried together with its inverse.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatElem {
    pub m: Matrix,
    pub inv: Matrix,
}

impl Debug for MatElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        Debug::fmt(&self.m, f)
    }
}

impl MatElem {
    pub fn new(k: &Field, m: Matrix) -> Result<MatElem> {
        let inv = m.inv(k)?;
        Ok(MatElem { m, inv })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatPoint {
    Vector(u128),
    /// A 1-space, stored by the representative whose first nonzero entry is 1.
    Line(u128),
    /// A subspace of the given dimension, stored by its reduced echelon basis.
    Subspace(u8, u128),
    /// A quadratic form, stored by its upper-triangular coefficients.
    Form(u128),
}

#[derive(Clone, Debug)]
pub struct MatAction {
    pub field: Field,
    pub dim: usize,
    bits: u32,
}

impl MatAction {
    pub fn new(field: &Field, dim: usize) -> MatAction {
        let bits = 32 - (field.order() - 1).leading_zeros();
        MatAction { field: field.clone(), dim, bits }
    }

    pub fn elem(&self, m: Matrix) -> Result<MatElem> {
        MatElem::new(&self.field, m)
    }

    fn pack(&self, entries: impl Iterator<Item = Gf>) -> Result<u128> {
        let mut acc = 0u128;
        let mut shift = 0u32;
        for e in entries {
            if shift + self.bits > 128 {
                return Err(Error::BudgetExceeded("point encoding exceeds 128 bits".into()));
            }
            acc |= (e.0 as u128) << shift;
            shift += self.bits;
        }
        Ok(acc)
    }

    #[inline]
    fn unpack(&self, mut v: u128, len: usize) -> Vec<Gf> {
        let mask = (1u128 << self.bits) - 1;
        (0..len)
            .map(|_| {
                let e = Gf((v & mask) as u16);
                v >>= self.bits;
                e
            })
            .collect()
    }

    pub fn vector_point(&self, x: &[Gf]) -> Result<MatPoint> {
        Ok(MatPoint::Vector(self.pack(x.iter().copied())?))
    }

    pub fn line_point(&self, x: &[Gf]) -> Result<MatPoint> {
        let lead = x.iter().find(|e| !e.is_zero()).ok_or(Error::PointNotInUniverse)?;
        let s = self.field.inv(*lead)?;
        Ok(MatPoint::Line(self.pack(x.iter().map(|&e| self.field.mul(s, e)))?))
    }

    pub fn subspace_point(&self, rows: &[Vec<Gf>]) -> Result<MatPoint> {
        let (red, piv) = Matrix::from_rows(rows)?.rref(&self.field);
        let k = piv.len();
        Ok(MatPoint::Subspace(k as u8, self.pack((0..k).flat_map(|r| red.row(r).to_vec()))?))
    }

    pub fn form_point(&self, q: &QuadraticForm) -> Result<MatPoint> {
        let n = self.dim;
        Ok(MatPoint::Form(self.pack((0..n).flat_map(|i| (i..n).map(move |j| (i, j))).map(|(i, j)| q.coeffs.get(i, j)))?))
    }

    /// Coordinates of a vector or line point.
    pub fn point_vector(&self, p: &MatPoint) -> Option<Vec<Gf>> {
        match *p {
            MatPoint::Vector(v) | MatPoint::Line(v) => Some(self.unpack(v, self.dim)),
            _ => None,
        }
    }

    pub fn point_subspace(&self, p: &MatPoint) -> Option<Vec<Vec<Gf>>> {
        match *p {
            MatPoint::Subspace(k, v) => {
                let flat = self.unpack(v, k as usize * self.dim);
                Some(flat.chunks(self.dim).map(<[Gf]>::to_vec).collect())
            }
            _ => None,
        }
    }

    pub fn point_form(&self, p: &MatPoint) -> Option<QuadraticForm> {
        match *p {
            MatPoint::Form(v) => {
                let n = self.dim;
                let flat = self.unpack(v, n * (n + 1) / 2);
                let mut u = Matrix::zero(n, n);
                let mut it = flat.into_iter();
                for i in 0..n {
                    for j in i..n {
                        u.set(i, j, it.next().unwrap());
                    }
                }
                Some(QuadraticForm { coeffs: u })
            }
            _ => None,
        }
    }

    /// Every nonzero vector, in canonical order.
    pub fn all_nonzero_vectors(&self) -> Result<Vec<MatPoint>> {
        let q = self.field.order() as u64;
        let total = q.checked_pow(self.dim as u32).filter(|&t| t <= 1 << 24).ok_or_else(|| {
            Error::BudgetExceeded(format!("{}^{} vectors exceed the degree budget", q, self.dim))
        })?;
        (1..total)
            .map(|mut i| {
                let v: Vec<Gf> = (0..self.dim)
                    .map(|_| {
                        let c = Gf((i % q) as u16);
                        i /= q;
                        c
                    })
                    .collect();
                self.vector_point(&v)
            })
            .collect()
    }
}

impl Action for MatAction {
    type Elem = MatElem;
    type Point = MatPoint;

    fn identity(&self) -> MatElem {
        MatElem { m: Matrix::identity(self.dim), inv: Matrix::identity(self.dim) }
    }

    fn mul(&self, a: &MatElem, b: &MatElem) -> MatElem {
        MatElem { m: a.m.mul_unchecked(&self.field, &b.m), inv: b.inv.mul_unchecked(&self.field, &a.inv) }
    }

    fn inv(&self, a: &MatElem) -> MatElem {
        MatElem { m: a.inv.clone(), inv: a.m.clone() }
    }

    fn act(&self, p: &MatPoint, g: &MatElem) -> MatPoint {
        let k = &self.field;
        match *p {
            MatPoint::Vector(v) => {
                let x = self.unpack(v, self.dim);
                MatPoint::Vector(self.pack(g.m.vec_mul(k, &x).into_iter()).expect("fits"))
            }
            MatPoint::Line(v) => {
                let x = self.unpack(v, self.dim);
                self.line_point(&g.m.vec_mul(k, &x)).expect("nonzero image")
            }
            MatPoint::Subspace(..) => {
                let rows = self.point_subspace(p).unwrap();
                let imgs: Vec<Vec<Gf>> = rows.iter().map(|r| g.m.vec_mul(k, r)).collect();
                self.subspace_point(&imgs).expect("fits")
            }
            MatPoint::Form(_) => {
                let q = self.point_form(p).unwrap();
                let a = g.inv.mul_unchecked(k, &q.coeffs).mul_unchecked(k, &g.inv.transpose());
                self.form_point(&QuadraticForm { coeffs: triangularize(k, &a) }).expect("fits")
            }
        }
    }

    fn is_identity(&self, g: &MatElem) -> bool {
        g.m.is_identity()
    }

    fn faithful_points(&self) -> Vec<MatPoint> {
        (0..self.dim).map(|i| self.vector_point(&unit_vector(self.dim, i)).expect("fits")).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PermPoint {
    Int(u16),
    /// Bit mask of a subset.
    Set(u64),
    /// A subset together with an orientation: the parity class of orderings,
    /// relative to increasing order.
    Oriented(u64, bool),
    /// A set partition, stored as its sorted block masks.
    Partition(Vec<u64>),
}

#[derive(Clone, Debug)]
pub struct PermAction {
    pub degree: usize,
}

impl PermAction {
    pub fn new(degree: usize) -> PermAction {
        PermAction { degree }
    }

    pub fn set_point(points: &[usize]) -> PermPoint {
        PermPoint::Set(points.iter().fold(0, |m, &p| m | 1 << p))
    }

    pub fn oriented_point(points: &[usize]) -> PermPoint {
        PermPoint::Oriented(points.iter().fold(0, |m, &p| m | 1 << p), false)
    }

    pub fn partition_point(blocks: &[&[usize]]) -> PermPoint {
        let mut masks: Vec<u64> = blocks.iter().map(|b| b.iter().fold(0, |m, &p| m | 1 << p)).collect();
        masks.sort_unstable();
        PermPoint::Partition(masks)
    }

    fn image_mask(g: &Perm, mask: u64) -> u64 {
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let p = m.trailing_zeros() as usize;
            out |= 1 << g.image(p);
            m &= m - 1;
        }
        out
    }

    /// All k-subsets of the points, as set points in lexicographic order.
    pub fn all_subsets(&self, k: usize) -> Vec<PermPoint> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<PermPoint>) {
            if cur.len() == k {
                out.push(PermAction::set_point(cur));
                return;
            }
            for p in start..n {
                cur.push(p);
                rec(n, k, p + 1, cur, out);
                cur.pop();
            }
        }
        rec(self.degree, k, 0, &mut cur, &mut out);
        out
    }
}

impl Action for PermAction {
    type Elem = Perm;
    type Point = PermPoint;

    fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }
    fn mul(&self, a: &Perm, b: &Perm) -> Perm {
        a.mul(b)
    }
    fn inv(&self, a: &Perm) -> Perm {
        a.inv()
    }
    fn act(&self, p: &PermPoint, g: &Perm) -> PermPoint {
        match p {
            PermPoint::Int(x) => PermPoint::Int(g.image(*x as usize) as u16),
            PermPoint::Set(m) => PermPoint::Set(Self::image_mask(g, *m)),
            PermPoint::Oriented(m, o) => {
                // images of the increasing enumeration, then the parity of sorting them
                let mut imgs = Vec::with_capacity(m.count_ones() as usize);
                let mut mm = *m;
                while mm != 0 {
                    imgs.push(g.image(mm.trailing_zeros() as usize));
                    mm &= mm - 1;
                }
                let mut inversions = 0usize;
                for i in 0..imgs.len() {
                    for j in i + 1..imgs.len() {
                        if imgs[i] > imgs[j] {
                            inversions += 1;
                        }
                    }
                }
                let mask = imgs.iter().fold(0u64, |acc, &x| acc | 1 << x);
                PermPoint::Oriented(mask, *o ^ (inversions % 2 == 1))
            }
            PermPoint::Partition(blocks) => {
                let mut b: Vec<u64> = blocks.iter().map(|&m| Self::image_mask(g, m)).collect();
                b.sort_unstable();
                PermPoint::Partition(b)
            }
        }
    }
    fn is_identity(&self, g: &Perm) -> bool {
        g.is_identity()
    }
    fn faithful_points(&self) -> Vec<PermPoint> {
        (0..self.degree as u16).map(PermPoint::Int).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_action_is_right_action() {
        let k = Field::with_order(4).unwrap();
        let a = MatAction::new(&k, 3);
        let g = a.elem(Matrix::from_u16(3, 3, &[1, 2, 0, 0, 1, 3, 2, 0, 1])).unwrap();
        let h = a.elem(Matrix::from_u16(3, 3, &[0, 1, 0, 1, 1, 0, 0, 2, 1])).unwrap();
        let x = [Gf(1), Gf(3), Gf(2)];
        let q = QuadraticForm::new(&k, Matrix::from_u16(3, 3, &[1, 2, 0, 0, 0, 1, 0, 0, 3])).unwrap();
        let points = [
            a.vector_point(&x).unwrap(),
            a.line_point(&x).unwrap(),
            a.subspace_point(&[x.to_vec(), vec![Gf(0), Gf(1), Gf(1)]]).unwrap(),
            a.form_point(&q).unwrap(),
        ];
        let gh = a.mul(&g, &h);
        for p in points {
            assert_eq!(a.act(&a.act(&p, &g), &h), a.act(&p, &gh));
            assert_eq!(a.act(&a.act(&p, &g), &a.inv(&g)), p);
        }
    }

    #[test]
    fn form_action_preserves_values_along_orbit() {
        // Q^g(x g) = Q(x)
        let k = Field::with_order(2).unwrap();
        let a = MatAction::new(&k, 4);
        let g = a.elem(Matrix::from_u16(4, 4, &[1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1])).unwrap();
        let q = QuadraticForm::new(&k, Matrix::from_u16(4, 4, &[1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 1])).unwrap();
        let qg = a.point_form(&a.act(&a.form_point(&q).unwrap(), &g)).unwrap();
        for p in a.all_nonzero_vectors().unwrap() {
            let x = a.point_vector(&p).unwrap();
            assert_eq!(qg.eval(&k, &g.m.vec_mul(&k, &x)), q.eval(&k, &x));
        }
    }

    #[test]
    fn oriented_sets_track_parity() {
        let a = PermAction::new(6);
        let p = PermAction::oriented_point(&[0, 1, 2]);
        let swap = Perm::parse_cycles(6, "(1,2)").unwrap();
        let three = Perm::parse_cycles(6, "(1,2,3)").unwrap();
        let out = Perm::parse_cycles(6, "(1,4)(5,6)").unwrap();
        assert_eq!(a.act(&p, &swap), PermPoint::Oriented(0b111, true));
        assert_eq!(a.act(&p, &three), p);
        let moved = a.act(&p, &out);
        assert_eq!(a.act(&moved, &out.inv()), p);
    }
}
