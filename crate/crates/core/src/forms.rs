//! Bilinear and quadratic forms, isometries, the Dickson invariant and
//! standardization of bases.
//!
//! A quadratic form is stored as an upper-triangular matrix `U` with
//! `Q(x) = x U x^T`. Its polarization has Gram matrix `U + U^T`. A basis
//! change is a matrix `C` whose rows are the new basis vectors written in
//! old coordinates; the form in the new basis is `Q'(y) = Q(y C)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::matrix::{unit_vector, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum FormType {
    Plus,
    Minus,
}

impl FormType {
    pub fn sign(self) -> i64 {
        match self {
            FormType::Plus => 1,
            FormType::Minus => -1,
        }
    }
    pub fn flip(self) -> FormType {
        match self {
            FormType::Plus => FormType::Minus,
            FormType::Minus => FormType::Plus,
        }
    }
}

impl fmt::Display for FormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormType::Plus => "+",
            FormType::Minus => "-",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub gram: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    pub coeffs: Matrix,
}

/// Sum `A + A^T` folded onto the upper triangle: the unique upper-triangular
/// `U` with `x U x^T = x A x^T` for all `x`.
pub fn triangularize(k: &Field, a: &Matrix) -> Matrix {
    let n = a.rows();
    let mut u = Matrix::zero(n, n);
    for i in 0..n {
        u.set(i, i, a.get(i, i));
        for j in i + 1..n {
            u.set(i, j, k.add(a.get(i, j), a.get(j, i)));
        }
    }
    u
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<BilinearForm> {
        if !gram.is_square() {
            return Err(Error::ShapeMismatch("Gram matrix must be square".into()));
        }
        Ok(BilinearForm { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, k: &Field, x: &[Gf], y: &[Gf]) -> Gf {
        let xg = self.gram.vec_mul(k, x);
        xg.iter().zip(y).fold(Gf::ZERO, |acc, (&a, &b)| k.add(acc, k.mul(a, b)))
    }

    pub fn is_alternating(&self, k: &Field) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            self.gram.get(i, i).is_zero() && (0..n).all(|j| self.gram.get(i, j) == k.neg(self.gram.get(j, i)))
        })
    }

    pub fn is_nondegenerate(&self, k: &Field) -> bool {
        self.gram.rank(k) == self.dim()
    }

    /// Gram matrix in the basis given by the rows of `c`.
    pub fn change_basis(&self, k: &Field, c: &Matrix) -> BilinearForm {
        BilinearForm { gram: c.mul_unchecked(k, &self.gram).mul_unchecked(k, &c.transpose()) }
    }

    /// `[[0,1],[-1,0]]` blocks on the pairs (e1,f1), (e2,f2), ...
    pub fn standard_symplectic(k: &Field, m: usize) -> BilinearForm {
        let mut g = Matrix::zero(2 * m, 2 * m);
        for i in 0..m {
            g.set(2 * i, 2 * i + 1, Gf::ONE);
            g.set(2 * i + 1, 2 * i, k.neg(Gf::ONE));
        }
        BilinearForm { gram: g }
    }
}

impl QuadraticForm {
    pub fn new(k: &Field, coeffs: Matrix) -> Result<QuadraticForm> {
        if !coeffs.is_square() {
            return Err(Error::ShapeMismatch("coefficient matrix must be square".into()));
        }
        Ok(QuadraticForm { coeffs: triangularize(k, &coeffs) })
    }

    pub fn dim(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn eval(&self, k: &Field, x: &[Gf]) -> Gf {
        let n = self.dim();
        let mut acc = Gf::ZERO;
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            let mut row = Gf::ZERO;
            for j in i..n {
                row = k.add(row, k.mul(self.coeffs.get(i, j), x[j]));
            }
            acc = k.add(acc, k.mul(x[i], row));
        }
        acc
    }

    pub fn polarize(&self, k: &Field) -> BilinearForm {
        BilinearForm { gram: self.coeffs.add(k, &self.coeffs.transpose()).expect("square") }
    }

    /// The form `y -> Q(y C)`.
    pub fn change_basis(&self, k: &Field, c: &Matrix) -> QuadraticForm {
        let a = c.mul_unchecked(k, &self.coeffs).mul_unchecked(k, &c.transpose());
        QuadraticForm { coeffs: triangularize(k, &a) }
    }

    /// Image of the form under `g` for the right action `Q^g(x) = Q(x g^{-1})`.
    pub fn image(&self, k: &Field, g_inv: &Matrix) -> QuadraticForm {
        self.change_basis(k, g_inv)
    }

    /// Standard plus form `x1 x2 + x3 x4 + ...` or minus form with the last
    /// pair replaced by `x^2 + x y + d y^2`.
    pub fn standard(k: &Field, m: usize, ty: FormType) -> Result<QuadraticForm> {
        let mut u = Matrix::zero(2 * m, 2 * m);
        for i in 0..m {
            u.set(2 * i, 2 * i + 1, Gf::ONE);
        }
        if ty == FormType::Minus {
            if m == 0 {
                return Err(Error::InvalidArgument("minus type needs dimension at least 2".into()));
            }
            let d = k.irreducible_quadratic_d()?;
            u.set(2 * m - 2, 2 * m - 2, Gf::ONE);
            u.set(2 * m - 1, 2 * m - 1, d);
        }
        Ok(QuadraticForm { coeffs: u })
    }
}

/// Which forms a [`FormedSpace`] carries in its distinguished basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardShape {
    Symplectic,
    Orthogonal(FormType),
    Other,
}

#[derive(Clone, Debug)]
pub struct FormedSpace {
    pub field: Field,
    pub dim: usize,
    pub bilinear: Option<BilinearForm>,
    pub quadratic: Option<QuadraticForm>,
    /// Rows are the distinguished basis in ambient coordinates.
    pub basis: Matrix,
    pub shape: StandardShape,
}

impl FormedSpace {
    pub fn symplectic(k: &Field, m: usize) -> FormedSpace {
        FormedSpace {
            field: k.clone(),
            dim: 2 * m,
            bilinear: Some(BilinearForm::standard_symplectic(k, m)),
            quadratic: None,
            basis: Matrix::identity(2 * m),
            shape: StandardShape::Symplectic,
        }
    }

    pub fn orthogonal(k: &Field, m: usize, ty: FormType) -> Result<FormedSpace> {
        let q = QuadraticForm::standard(k, m, ty)?;
        Ok(FormedSpace {
            field: k.clone(),
            dim: 2 * m,
            bilinear: Some(q.polarize(k)),
            quadratic: Some(q),
            basis: Matrix::identity(2 * m),
            shape: StandardShape::Orthogonal(ty),
        })
    }

    pub fn from_quadratic(k: &Field, q: QuadraticForm) -> FormedSpace {
        FormedSpace {
            field: k.clone(),
            dim: q.dim(),
            bilinear: Some(q.polarize(k)),
            basis: Matrix::identity(q.dim()),
            quadratic: Some(q),
            shape: StandardShape::Other,
        }
    }

    pub fn from_bilinear(k: &Field, b: BilinearForm) -> FormedSpace {
        FormedSpace {
            field: k.clone(),
            dim: b.dim(),
            basis: Matrix::identity(b.dim()),
            bilinear: Some(b),
            quadratic: None,
            shape: StandardShape::Other,
        }
    }
}

/// True iff `g` preserves the bilinear form (`g B g^T = B`) and, when present,
/// the quadratic form (`Q(x g) = Q(x)` for all `x`).
pub fn is_isometry(g: &Matrix, space: &FormedSpace) -> Result<bool> {
    if !g.is_square() || g.rows() != space.dim {
        return Err(Error::ShapeMismatch(format!("{}x{} against dimension {}", g.rows(), g.cols(), space.dim)));
    }
    let k = &space.field;
    if let Some(b) = &space.bilinear {
        if b.change_basis(k, g) != *b {
            return Ok(false);
        }
    }
    if let Some(q) = &space.quadratic {
        if q.change_basis(k, g) != *q {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dickson invariant `rank(g + I) mod 2` of an isometry in characteristic 2.
pub fn dickson_invariant(g: &Matrix, space: &FormedSpace) -> Result<u8> {
    let k = &space.field;
    if !k.is_char2() {
        return Err(Error::WrongCharacteristic { expected: 2, got: k.p() });
    }
    if space.quadratic.is_none() || !is_isometry(g, space)? {
        return Err(Error::NotAnIsometry);
    }
    Ok(dickson_unchecked(k, g))
}

pub(crate) fn dickson_unchecked(k: &Field, g: &Matrix) -> u8 {
    let d = g.add(k, &Matrix::identity(g.rows())).expect("square");
    (d.rank(k) % 2) as u8
}

/// Result of [`classify_quadratic`].
#[derive(Clone, Debug)]
pub struct Classification {
    pub form_type: FormType,
    pub witt_index: usize,
    /// Rows form a basis in which the form is exactly the standard one.
    pub basis: Matrix,
}

fn combine(k: &Field, coeffs: &[Gf], vs: &[Vec<Gf>]) -> Vec<Gf> {
    let n = vs[0].len();
    let mut out = vec![Gf::ZERO; n];
    for (c, v) in coeffs.iter().zip(vs) {
        if c.is_zero() {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(v) {
            *o = k.add(*o, k.mul(*c, x));
        }
    }
    out
}

fn axpy(k: &Field, a: Gf, x: &[Gf], y: &[Gf]) -> Vec<Gf> {
    x.iter().zip(y).map(|(&xi, &yi)| k.add(k.mul(a, xi), yi)).collect()
}

/// Odometer over coefficient tuples in canonical order, skipping zero.
fn nonzero_combinations(k: &Field, len: usize) -> impl Iterator<Item = Vec<Gf>> {
    let q = k.order() as u64;
    let total = q.pow(len as u32);
    (1..total).map(move |mut idx| {
        (0..len)
            .map(|_| {
                let c = Gf((idx % q) as u16);
                idx /= q;
                c
            })
            .collect()
    })
}

/// Basis of a span (rows of the RREF), dropping dependent vectors.
fn span_basis(k: &Field, vs: &[Vec<Gf>]) -> Vec<Vec<Gf>> {
    if vs.is_empty() {
        return Vec::new();
    }
    let (red, piv) = Matrix::from_rows(vs).expect("uniform").rref(k);
    (0..piv.len()).map(|r| red.row(r).to_vec()).collect()
}

/// Witt decomposition in characteristic 2: plus/minus type, Witt index and a
/// standardizing basis.
pub fn classify_quadratic(q: &QuadraticForm, k: &Field) -> Result<Classification> {
    let n = q.dim();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if !k.is_char2() {
        return Err(Error::Unsupported("quadratic form classification in odd characteristic".into()));
    }
    let b = q.polarize(k);
    if !b.is_nondegenerate(k) {
        return Err(Error::DegenerateForm);
    }
    let mut rest: Vec<Vec<Gf>> = (0..n).map(|i| unit_vector(n, i)).collect();
    let mut out: Vec<Vec<Gf>> = Vec::with_capacity(n);
    let mut pairs = 0;
    let mut ty = FormType::Plus;
    while !rest.is_empty() {
        // Any quadratic form in three or more variables over a finite field is
        // isotropic, so three vectors of the complement suffice.
        let probe = &rest[..rest.len().min(3)];
        let singular = nonzero_combinations(k, probe.len())
            .map(|c| combine(k, &c, probe))
            .find(|x| q.eval(k, x).is_zero());
        let Some(x) = singular else {
            if rest.len() != 2 {
                return Err(Error::DegenerateForm);
            }
            out.extend(anisotropic_plane(q, &b, k, &rest)?);
            ty = FormType::Minus;
            break;
        };
        let y0 = rest
            .iter()
            .find(|r| !b.eval(k, &x, r).is_zero())
            .ok_or(Error::DegenerateForm)?
            .clone();
        let s = k.inv(b.eval(k, &x, &y0))?;
        let y1: Vec<Gf> = y0.iter().map(|&v| k.mul(s, v)).collect();
        // y = y1 - Q(y1) x is singular with B(x, y) = 1
        let y = axpy(k, k.neg(q.eval(k, &y1)), &x, &y1);
        let projected: Vec<Vec<Gf>> = rest
            .iter()
            .map(|z| {
                let t = axpy(k, k.neg(b.eval(k, z, &y)), &x, z);
                axpy(k, b.eval(k, z, &x), &y, &t)
            })
            .collect();
        out.push(x);
        out.push(y);
        pairs += 1;
        rest = span_basis(k, &projected);
    }
    let basis = Matrix::from_rows(&out)?;
    let witt_index = pairs;
    debug_assert_eq!(q.change_basis(k, &basis), QuadraticForm::standard(k, n / 2, ty)?);
    Ok(Classification { form_type: ty, witt_index, basis })
}

fn anisotropic_plane(q: &QuadraticForm, b: &BilinearForm, k: &Field, plane: &[Vec<Gf>]) -> Result<[Vec<Gf>; 2]> {
    let a = &plane[0];
    // scale a so that Q(e) = 1; squares are surjective in characteristic 2
    let qa = q.eval(k, a);
    let c = k.elements().find(|&c| k.mul(k.mul(c, c), qa) == Gf::ONE).ok_or(Error::DegenerateForm)?;
    let e: Vec<Gf> = a.iter().map(|&v| k.mul(c, v)).collect();
    let f0 = plane.iter().find(|p| !b.eval(k, &e, p).is_zero()).ok_or(Error::DegenerateForm)?;
    let s = k.inv(b.eval(k, &e, f0))?;
    let f0: Vec<Gf> = f0.iter().map(|&v| k.mul(s, v)).collect();
    let d = k.irreducible_quadratic_d()?;
    // Q(f0 + t e) = Q(f0) + t + t^2
    let target = k.add(q.eval(k, &f0), d);
    let t = k
        .elements()
        .find(|&t| k.add(k.mul(t, t), t) == target)
        .ok_or_else(|| Error::DataIntegrity("Artin-Schreier equation unsolvable".into()))?;
    Ok([e.clone(), axpy(k, t, &e, &f0)])
}

/// Number of nonzero singular vectors, by enumeration.
pub fn count_singular(q: &QuadraticForm, k: &Field) -> Result<u64> {
    let n = q.dim() as u32;
    let total = (k.order() as u64).checked_pow(n).filter(|&t| t <= 1 << 24).ok_or_else(|| {
        Error::BudgetExceeded(format!("{}^{} vectors exceed the enumeration budget", k.order(), n))
    })?;
    let qq = k.order() as u64;
    let mut x = vec![Gf::ZERO; n as usize];
    let mut count = 0;
    for mut idx in 1..total {
        for c in x.iter_mut() {
            *c = Gf((idx % qq) as u16);
            idx /= qq;
        }
        if q.eval(k, &x).is_zero() {
            count += 1;
        }
    }
    Ok(count)
}

/// Closed-form count of nonzero singular vectors of a nondegenerate form of
/// dimension `2m` and the given type.
pub fn singular_count_formula(q: u64, m: u32, ty: FormType) -> u64 {
    let qm = q.pow(m);
    let qm1 = q.pow(m - 1);
    match ty {
        FormType::Plus => (qm - 1) * (qm1 + 1),
        FormType::Minus => (qm + 1) * (qm1 - 1),
    }
}

/// Symplectic Gram-Schmidt: rows u1, v1, u2, v2, ... with `B(u_i, v_i) = 1`
/// and all other pairings zero. Pivots are chosen by lowest index.
pub fn symplectic_standard_basis(b: &BilinearForm, k: &Field) -> Result<Matrix> {
    let n = b.dim();
    if !b.is_alternating(k) || !b.is_nondegenerate(k) {
        return Err(Error::DegenerateForm);
    }
    let mut rest: Vec<Vec<Gf>> = (0..n).map(|i| unit_vector(n, i)).collect();
    let mut out = Vec::with_capacity(n);
    while !rest.is_empty() {
        let u = rest[0].clone();
        let j = (1..rest.len()).find(|&j| !b.eval(k, &u, &rest[j]).is_zero()).ok_or(Error::DegenerateForm)?;
        let s = k.inv(b.eval(k, &u, &rest[j]))?;
        let v: Vec<Gf> = rest[j].iter().map(|&x| k.mul(s, x)).collect();
        let others: Vec<Vec<Gf>> = rest
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != 0 && i != j)
            .map(|(_, z)| {
                // z - B(z,v) u + B(z,u) v
                let t = axpy(k, k.neg(b.eval(k, z, &v)), &u, z);
                axpy(k, b.eval(k, z, &u), &v, &t)
            })
            .collect();
        out.push(u);
        out.push(v);
        rest = others;
    }
    Matrix::from_rows(&out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Field {
        Field::with_order(q).unwrap()
    }

    fn form(k: &Field, n: usize, entries: &[u16]) -> QuadraticForm {
        QuadraticForm::new(k, Matrix::from_u16(n, n, entries)).unwrap()
    }

    #[test]
    fn hyperbolic_plane_polarizes_to_swap() {
        let k = gf(2);
        let q = form(&k, 2, &[0, 1, 0, 0]);
        assert_eq!(q.polarize(&k).gram, Matrix::from_u16(2, 2, &[0, 1, 1, 0]));
    }

    #[test]
    fn polarization_matches_definition() {
        let k = gf(4);
        let q = form(&k, 3, &[1, 2, 3, 0, 2, 1, 0, 0, 3]);
        let b = q.polarize(&k);
        let vecs: Vec<Vec<Gf>> = nonzero_combinations(&k, 3).collect();
        for x in vecs.iter().step_by(5) {
            for y in vecs.iter().step_by(7) {
                let s: Vec<Gf> = x.iter().zip(y).map(|(&a, &c)| k.add(a, c)).collect();
                let lhs = k.sub(k.sub(q.eval(&k, &s), q.eval(&k, x)), q.eval(&k, y));
                assert_eq!(lhs, b.eval(&k, x, y));
            }
        }
    }

    #[test]
    fn small_classifications() {
        let k = gf(2);
        let plus = classify_quadratic(&form(&k, 2, &[0, 1, 0, 0]), &k).unwrap();
        assert_eq!((plus.form_type, plus.witt_index), (FormType::Plus, 1));
        let minus = classify_quadratic(&form(&k, 2, &[1, 1, 0, 1]), &k).unwrap();
        assert_eq!((minus.form_type, minus.witt_index), (FormType::Minus, 0));
        assert_eq!(count_singular(&form(&k, 2, &[0, 1, 0, 0]), &k).unwrap(), 2);
        assert_eq!(count_singular(&form(&k, 2, &[1, 1, 0, 1]), &k).unwrap(), 0);
    }

    #[test]
    fn minus_four_space_over_gf4() {
        let k = gf(4);
        let q = QuadraticForm::standard(&k, 2, FormType::Minus).unwrap();
        assert_eq!(count_singular(&q, &k).unwrap(), 51);
        assert_eq!(singular_count_formula(4, 2, FormType::Minus), 51);
    }

    #[test]
    fn classification_errors() {
        let k = gf(2);
        assert_eq!(classify_quadratic(&form(&k, 3, &[0; 9]), &k).unwrap_err(), Error::OddDimension(3));
        assert_eq!(classify_quadratic(&form(&k, 2, &[1, 0, 0, 1]), &k).unwrap_err(), Error::DegenerateForm);
    }

    #[test]
    fn standardizing_basis_is_bit_exact() {
        for q in [2u32, 4, 8] {
            let k = gf(q);
            for m in 1..=3 {
                for ty in [FormType::Plus, FormType::Minus] {
                    // scramble the standard form by an invertible change of basis
                    let n = 2 * m;
                    let mut c = Matrix::identity(n);
                    for i in 0..n {
                        for j in i + 1..n {
                            c.set(i, j, Gf(((i * 3 + j) % q as usize) as u16));
                        }
                    }
                    c.set(n - 1, 0, Gf::ONE);
                    if c.rank(&k) < n {
                        continue;
                    }
                    let std = QuadraticForm::standard(&k, m, ty).unwrap();
                    let scrambled = std.change_basis(&k, &c);
                    let cl = classify_quadratic(&scrambled, &k).unwrap();
                    assert_eq!(cl.form_type, ty);
                    assert_eq!(scrambled.change_basis(&k, &cl.basis), std);
                    assert_eq!(cl.basis.rank(&k), n);
                }
            }
        }
    }

    #[test]
    fn symplectic_basis_examples() {
        let k = gf(4);
        let b = BilinearForm::new(Matrix::from_u16(2, 2, &[0, 1, 1, 0])).unwrap();
        assert!(symplectic_standard_basis(&b, &k).unwrap().is_identity());
        let mut anti = Matrix::zero(6, 6);
        for i in 0..6 {
            anti.set(i, 5 - i, Gf::ONE);
        }
        let b = BilinearForm::new(anti).unwrap();
        let c = symplectic_standard_basis(&b, &k).unwrap();
        assert_eq!(c, Matrix::permutation(&[0, 5, 1, 4, 2, 3]));
        assert_eq!(b.change_basis(&k, &c), BilinearForm::standard_symplectic(&k, 3));
        let deg = BilinearForm::new(Matrix::zero(2, 2)).unwrap();
        assert_eq!(symplectic_standard_basis(&deg, &k), Err(Error::DegenerateForm));
    }

    #[test]
    fn dickson_of_identity_and_transvection() {
        let k = gf(2);
        let space = FormedSpace::orthogonal(&k, 2, FormType::Plus).unwrap();
        assert_eq!(dickson_invariant(&Matrix::identity(4), &space).unwrap(), 0);
        // reflection in v = e1 + f1 (Q(v) = 1)
        let v = [Gf::ONE, Gf::ONE, Gf::ZERO, Gf::ZERO];
        let b = space.bilinear.as_ref().unwrap();
        let mut g = Matrix::identity(4);
        for i in 0..4 {
            let bi = b.eval(&k, &unit_vector(4, i), &v);
            for j in 0..4 {
                g.set(i, j, k.add(g.get(i, j), k.mul(bi, v[j])));
            }
        }
        assert!(is_isometry(&g, &space).unwrap());
        assert_eq!(dickson_invariant(&g, &space).unwrap(), 1);
        let not_iso = Matrix::from_u16(4, 4, &[1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1]);
        assert_eq!(dickson_invariant(&not_iso, &space), Err(Error::NotAnIsometry));
    }
}
