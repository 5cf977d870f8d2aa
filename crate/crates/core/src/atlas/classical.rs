//! Symplectic and orthogonal groups from transvections, and the standard
//! subgroup constructions: direct sums, wreath products, field extension
//! subgroups and tensor decompositions.

use num_bigint::BigUint;

use super::restrict::FieldRestriction;
use super::{space_in_basis, MatrixGroup};
use crate::arith::orders::{order_of, Family};
use crate::bsgs::{index2_kernel, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::forms::{
    classify_quadratic, dickson_unchecked, symplectic_standard_basis, BilinearForm, FormType, FormedSpace,
    QuadraticForm, StandardShape,
};
use crate::matrix::{unit_vector, Matrix};

/// Scalars used for generating families: `{1}` over a prime field, else `{1, z}`.
pub fn generating_scalars(k: &Field) -> Vec<Gf> {
    if k.degree() == 1 {
        vec![Gf::ONE]
    } else {
        vec![Gf::ONE, k.primitive_element()]
    }
}

/// `x -> x + lambda B(x, v) v`, as the matrix `I + lambda (Gram v^T) v`.
pub fn symplectic_transvection(k: &Field, gram: &Matrix, v: &[Gf], lambda: Gf) -> Matrix {
    let n = v.len();
    let col = gram.vec_mul(k, v); // B is alternating, so (Gram v^T)_i = -(v Gram)_i; sign is absorbed into lambda
    let mut t = Matrix::identity(n);
    for i in 0..n {
        let c = k.mul(lambda, k.neg(col[i]));
        if c.is_zero() {
            continue;
        }
        for j in 0..n {
            t.set(i, j, k.add(t.get(i, j), k.mul(c, v[j])));
        }
    }
    t
}

/// Orthogonal transvection `x -> x + Q(v)^{-1} B(x, v) v` (characteristic 2);
/// `None` when `v` is singular.
pub fn orthogonal_reflection(k: &Field, q: &QuadraticForm, v: &[Gf]) -> Option<Matrix> {
    let qv = q.eval(k, v);
    if qv.is_zero() {
        return None;
    }
    let gram = q.polarize(k).gram;
    Some(symplectic_transvection(k, &gram, v, k.inv(qv).ok()?))
}

fn axpy(k: &Field, a: Gf, x: &[Gf], b: Gf, y: &[Gf]) -> Vec<Gf> {
    x.iter().zip(y).map(|(&u, &w)| k.add(k.mul(a, u), k.mul(b, w))).collect()
}

fn symplectic_label(n: usize, q: u32) -> String {
    format!("Sp_{n}({q})")
}

/// `Sp_{2m}(q)` on the standard symplectic space.
pub fn sp_group(m: usize, q: u32) -> Result<MatrixGroup> {
    let k = Field::with_order(q)?;
    let space = FormedSpace::symplectic(&k, m);
    let gram = &space.bilinear.as_ref().unwrap().gram;
    let n = 2 * m;
    let mut vectors: Vec<Vec<Gf>> = (0..n).map(|i| unit_vector(n, i)).collect();
    for i in 0..m.saturating_sub(1) {
        vectors.push(axpy(&k, Gf::ONE, &unit_vector(n, 2 * i), Gf::ONE, &unit_vector(n, 2 * i + 2)));
    }
    let mut gens = Vec::new();
    for v in &vectors {
        for &l in &generating_scalars(&k) {
            gens.push(symplectic_transvection(&k, gram, v, l));
        }
    }
    Ok(MatrixGroup::new(symplectic_label(n, q), &space, gens)
        .predict(order_of(Family::Sp, n as u32, q)?)
        .trust())
}

/// Nonsingular vectors of small support whose reflections generate `O(Q)`
/// (reflections never generate `O^+_4(2)`).
fn reflection_vectors(k: &Field, q: &QuadraticForm) -> Vec<Vec<Gf>> {
    let n = q.dim();
    let scal = generating_scalars(k);
    let mut cands: Vec<Vec<Gf>> = (0..n).map(|i| unit_vector(n, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            for &x in &scal {
                for &y in &scal {
                    cands.push(axpy(k, x, &unit_vector(n, i), y, &unit_vector(n, j)));
                }
            }
        }
    }
    for i in 0..n.saturating_sub(2) {
        let v: Vec<Gf> = (0..n).map(|j| if (i..i + 3).contains(&j) { Gf::ONE } else { Gf::ZERO }).collect();
        cands.push(v);
    }
    let mut seen = std::collections::HashSet::new();
    cands
        .into_iter()
        .filter(|v| !q.eval(k, v).is_zero())
        .filter(|v| {
            // one representative per line
            let lead = *v.iter().find(|c| !c.is_zero()).unwrap();
            let s = k.inv(lead).unwrap();
            seen.insert(v.iter().map(|&c| k.mul(s, c)).collect::<Vec<_>>())
        })
        .collect()
}

fn orthogonal_label(kind: &str, n: usize, ty: FormType, q: u32) -> String {
    format!("{kind}_{n}^{ty}({q})")
}

/// `O(Q)` for a nondegenerate quadratic form `Q` in characteristic 2, in the
/// coordinates of `Q`, together with its Dickson kernel.
pub fn orthogonal_groups_for_form(k: &Field, q: &QuadraticForm) -> Result<(MatrixGroup, MatrixGroup)> {
    if !k.is_char2() {
        return Err(Error::Unsupported("orthogonal groups in odd characteristic".into()));
    }
    let cls = classify_quadratic(q, k)?;
    let m = q.dim() / 2;
    let (o_std, omega_std) = o_group(m, k.order(), cls.form_type)?;
    let space = FormedSpace::from_quadratic(k, q.clone());
    let c_inv = cls.basis.inv(k)?;
    // a matrix g' in standard coordinates y (x = y C) is C^{-1} g' C in x coordinates
    let back = |g: &MatrixGroup| -> MatrixGroup {
        let mut out = g.clone();
        out.gens = g.gens.iter().map(|h| h.conjugate_by_basis(k, &c_inv, &cls.basis)).collect();
        out.space = space.clone();
        out
    };
    Ok((back(&o_std), back(&omega_std)))
}

/// `(GO^eps_{2m}(q), Omega^eps_{2m}(q))` on the standard form, characteristic 2.
pub fn o_group(m: usize, q: u32, ty: FormType) -> Result<(MatrixGroup, MatrixGroup)> {
    let k = Field::with_order(q)?;
    if !k.is_char2() {
        return Err(Error::Unsupported("orthogonal groups in odd characteristic".into()));
    }
    let space = FormedSpace::orthogonal(&k, m, ty)?;
    let form = space.quadratic.clone().unwrap();
    let gens: Vec<Matrix> = reflection_vectors(&k, &form)
        .iter()
        .filter_map(|v| orthogonal_reflection(&k, &form, v))
        .collect();
    let n = 2 * m;
    let go_family = if ty == FormType::Plus { Family::GOPlus } else { Family::GOMinus };
    let go_order = order_of(go_family, n as u32, q)?;
    let o = MatrixGroup::new(orthogonal_label("GO", n, ty, q), &space, gens).predict(go_order.clone()).trust();
    let omega = omega_of(&o, orthogonal_label("Omega", n, ty, q))?;
    Ok((o, omega))
}

/// The Dickson kernel of a group that contains an element of invariant 1.
pub fn omega_of(o: &MatrixGroup, label: String) -> Result<MatrixGroup> {
    let act = o.action();
    let k = o.field.clone();
    let kernel = index2_kernel(&act, &o.elems()?, |g| dickson_unchecked(&k, &g.m), DEFAULT_SEED)?;
    let mut out = o.clone();
    out.label = label;
    out.gens = kernel.into_iter().map(|e| e.m).collect();
    out.predicted = o.predicted.as_ref().map(|n| n / 2u32);
    Ok(out)
}

/// `GO^-_{4l}(q)` preserving the standard minus form, whose polarization is
/// the standard symplectic form: a subgroup of `Sp_{4l}(q)`.
pub fn go_minus_in_sp(l: usize, q: u32) -> Result<MatrixGroup> {
    Ok(o_group(2 * l, q, FormType::Minus)?.0)
}

/// First orthogonal transvection of the standard generating set (Dickson invariant 1).
pub fn first_reflection(o: &MatrixGroup) -> Option<Matrix> {
    o.gens.iter().find(|g| dickson_unchecked(&o.field, g) == 1).cloned()
}

fn sum_spaces(k: &Field, spaces: &[&FormedSpace]) -> FormedSpace {
    let dim = spaces.iter().map(|s| s.dim).sum();
    let grams: Option<Vec<Matrix>> = spaces.iter().map(|s| s.bilinear.as_ref().map(|b| b.gram.clone())).collect();
    let quads: Option<Vec<Matrix>> = spaces.iter().map(|s| s.quadratic.as_ref().map(|q| q.coeffs.clone())).collect();
    let block = |ms: Vec<Matrix>| Matrix::block_diag(&ms.iter().collect::<Vec<_>>());
    let symplectic = spaces.iter().all(|s| s.shape == StandardShape::Symplectic);
    FormedSpace {
        field: k.clone(),
        dim,
        bilinear: grams.map(|g| BilinearForm { gram: block(g) }),
        quadratic: quads.map(|q| QuadraticForm { coeffs: block(q) }),
        basis: Matrix::identity(dim),
        shape: if symplectic { StandardShape::Symplectic } else { StandardShape::Other },
    }
}

/// Block-diagonal direct product acting on the orthogonal sum.
pub fn direct_sum(label: impl Into<String>, parts: &[&MatrixGroup]) -> Result<MatrixGroup> {
    let k = parts.first().ok_or_else(|| Error::InvalidArgument("empty direct sum".into()))?.field.clone();
    if parts.iter().any(|p| p.field != k) {
        return Err(Error::FieldMismatch);
    }
    let space = sum_spaces(&k, &parts.iter().map(|p| &p.space).collect::<Vec<_>>());
    let idents: Vec<Matrix> = parts.iter().map(|p| Matrix::identity(p.dim)).collect();
    let mut gens = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        for g in &p.gens {
            let blocks: Vec<&Matrix> = (0..parts.len()).map(|j| if i == j { g } else { &idents[j] }).collect();
            gens.push(Matrix::block_diag(&blocks));
        }
    }
    let predicted = parts.iter().map(|p| p.predicted.clone()).try_fold(BigUint::from(1u32), |acc, o| o.map(|o| acc * o));
    let mut g = MatrixGroup::new(label, &space, gens);
    g.predicted = predicted;
    Ok(g)
}

/// The involution exchanging the two halves of a `2d`-dimensional space.
pub fn block_swap(d: usize) -> Matrix {
    Matrix::permutation(&(0..2 * d).map(|i| (i + d) % (2 * d)).collect::<Vec<_>>())
}

/// `inner wr S_2`: two diagonal copies and the block swap.
pub fn wreath_pair(inner: &MatrixGroup) -> Result<MatrixGroup> {
    let base = direct_sum(format!("{} wr S_2", inner.label), &[inner, inner])?;
    let order = base.predicted.clone().map(|n| n * 2u32);
    let swap = block_swap(inner.dim);
    Ok(base.with_extra(format!("{} wr S_2", inner.label), &[swap], order))
}

/// A space over `GF(q^b)` viewed over `GF(q)`, with the basis in which the
/// restricted form (quadratic when present, else symplectic) is standard.
/// The basis depends only on the big space, so groups sharing a space
/// restrict compatibly.
#[derive(Clone, Debug)]
pub struct Restricted {
    pub r: FieldRestriction,
    pub big_dim: usize,
    /// Rows: the standard basis in blown-up coordinates.
    pub c: Matrix,
    c_inv: Matrix,
    pub space: FormedSpace,
}

impl Restricted {
    pub fn new(big: &FormedSpace, small: &Field) -> Result<Restricted> {
        let r = FieldRestriction::new(&big.field, small)?;
        let (raw, c) = if let Some(p) = &big.quadratic {
            let q = r.quadratic(p);
            let cls = classify_quadratic(&q, small)?;
            (FormedSpace::from_quadratic(small, q), cls.basis)
        } else {
            let b = r.bilinear(big.bilinear.as_ref().ok_or(Error::DegenerateForm)?);
            let c = symplectic_standard_basis(&b, small)?;
            (FormedSpace::from_bilinear(small, b), c)
        };
        let c_inv = c.inv(small)?;
        let space = standard_shape(space_in_basis(&raw, &c));
        Ok(Restricted { r, big_dim: big.dim, c, c_inv, space })
    }

    fn standardize(&self, m: &Matrix) -> Matrix {
        m.conjugate_by_basis(&self.r.small, &self.c, &self.c_inv)
    }

    /// A `GF(q^b)`-matrix as a `GF(q)`-matrix in the standard basis.
    pub fn matrix(&self, g: &Matrix) -> Matrix {
        self.standardize(&self.r.matrix(g))
    }

    /// Frobenius `x -> x^q` on the big coordinates in `range`.
    pub fn frobenius_on(&self, range: std::ops::Range<usize>) -> Matrix {
        self.standardize(&self.r.frobenius_on(self.big_dim, range))
    }

    pub fn frobenius(&self) -> Matrix {
        self.frobenius_on(0..self.big_dim)
    }

    /// Standard coordinates of a big-field vector.
    pub fn vector(&self, x: &[Gf]) -> Vec<Gf> {
        self.c_inv.vec_mul(&self.r.small, &self.r.vector(x))
    }

    /// The restriction of `g` with `extra` (already restricted) generators
    /// appended and the prediction multiplied by `factor`.
    pub fn group(&self, g: &MatrixGroup, extra: Vec<Matrix>, factor: u32) -> MatrixGroup {
        let mut gens: Vec<Matrix> = g.gens.iter().map(|h| self.matrix(h)).collect();
        gens.extend(extra);
        let mut out = MatrixGroup::new(g.label.clone(), &self.space, gens);
        out.predicted = g.predicted.as_ref().map(|o| o * BigUint::from(factor));
        out
    }
}

/// Restrict a group over `GF(q^b)` to `GF(q)` in standard coordinates,
/// optionally adjoining the Frobenius `x -> x^q`.
pub fn restrict_group(g: &MatrixGroup, small: &Field, frobenius: bool) -> Result<MatrixGroup> {
    let res = Restricted::new(&g.space, small)?;
    Ok(if frobenius {
        res.group(g, vec![res.frobenius()], res.r.b as u32)
    } else {
        res.group(g, Vec::new(), 1)
    })
}

fn standard_shape(mut s: FormedSpace) -> FormedSpace {
    let k = &s.field;
    let m = s.dim / 2;
    if let Some(q) = &s.quadratic {
        for ty in [FormType::Plus, FormType::Minus] {
            if QuadraticForm::standard(k, m, ty).ok().as_ref() == Some(q) {
                s.shape = StandardShape::Orthogonal(ty);
            }
        }
    } else if s.bilinear.as_ref() == Some(&BilinearForm::standard_symplectic(k, m)) {
        s.shape = StandardShape::Symplectic;
    }
    s
}

/// `Q(u) = P(u) + P(u)^2` on the `GF(2)`-space underlying a `GF(4)`-space.
pub fn subfield_norm_form(p: &QuadraticForm) -> Result<QuadraticForm> {
    let big = Field::with_order(4)?;
    let small = Field::with_order(2)?;
    Ok(FieldRestriction::new(&big, &small)?.quadratic(p))
}

/// `Sp_{2a}(q^b).b` inside `Sp_{2ab}(q)`.
pub fn field_ext_subgroup(a: usize, b: u32, q: u32) -> Result<MatrixGroup> {
    let big_q = q.checked_pow(b).ok_or_else(|| Error::InvalidArgument("field too large".into()))?;
    let inner = sp_group(a, big_q)?;
    let small = Field::with_order(q)?;
    let mut g = restrict_group(&inner, &small, b > 1)?;
    g.label = format!("Sp_{}({big_q}).{b}", 2 * a);
    g.trusted = false;
    Ok(g)
}

/// `W ⊗ V` with `dim W = 2`, `dim V = 2m`, standard symplectic forms on both
/// factors and the quadratic form vanishing on the basis tensors whose
/// polarization is the product form. Index of `w_a ⊗ x_b` is `a * 2m + b`.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    pub field: Field,
    pub m: usize,
    pub form: QuadraticForm,
    pub space: FormedSpace,
}

impl TensorSpace {
    pub fn new(m: usize, q: u32) -> Result<TensorSpace> {
        let k = Field::with_order(q)?;
        if !k.is_char2() {
            return Err(Error::Unsupported("tensor quadratic form in odd characteristic".into()));
        }
        let alpha = BilinearForm::standard_symplectic(&k, 1).gram;
        let beta = BilinearForm::standard_symplectic(&k, m).gram;
        let prod = alpha.kronecker(&k, &beta);
        let n = 4 * m;
        let mut u = Matrix::zero(n, n);
        for i in 0..n {
            for j in i + 1..n {
                u.set(i, j, prod.get(i, j));
            }
        }
        let form = QuadraticForm { coeffs: u };
        let space = FormedSpace::from_quadratic(&k, form.clone());
        Ok(TensorSpace { field: k, m, form, space })
    }

    pub fn dim(&self) -> usize {
        4 * self.m
    }

    pub fn tensor(&self, w: &[Gf], v: &[Gf]) -> Vec<Gf> {
        let k = &self.field;
        w.iter().flat_map(|&a| v.iter().map(move |&b| k.mul(a, b))).collect()
    }

    /// `A ⊗ I` for a `2 x 2` matrix on `W`.
    pub fn lift_w(&self, a: &Matrix) -> Matrix {
        a.kronecker(&self.field, &Matrix::identity(2 * self.m))
    }

    /// `I ⊗ B` for a matrix on `V`.
    pub fn lift_v(&self, b: &Matrix) -> Matrix {
        Matrix::identity(2).kronecker(&self.field, b)
    }

    /// The group generated by lifts of `w` (on `W`) and `v` (on `V`).
    pub fn group(&self, label: impl Into<String>, w: &[Matrix], v: &[Matrix], predicted: Option<BigUint>) -> MatrixGroup {
        let gens = w.iter().map(|a| self.lift_w(a)).chain(v.iter().map(|b| self.lift_v(b))).collect();
        let mut g = MatrixGroup::new(label, &self.space, gens);
        g.predicted = predicted;
        g
    }

    /// `Sp_2(q) x Sp_{2m}(q)` acting on the tensor product.
    pub fn sp_product(&self) -> Result<MatrixGroup> {
        let q = self.field.order();
        let a = sp_group(1, q)?;
        let b = sp_group(self.m, q)?;
        let order = a.predicted.clone().unwrap() * b.predicted.clone().unwrap();
        Ok(self.group(format!("Sp_2({q}) x Sp_{}({q})", 2 * self.m), &a.gens, &b.gens, Some(order)))
    }

    /// `(O(Q), Omega(Q))` in tensor coordinates.
    pub fn orthogonal(&self) -> Result<(MatrixGroup, MatrixGroup)> {
        orthogonal_groups_for_form(&self.field, &self.form)
    }
}

/// The stabilizer `Sp_{2m-2k}(q) x Sp_{2k}(q)` of the span of the last `k`
/// standard pairs.
pub fn n_k_symplectic(m: usize, k: usize, q: u32) -> Result<MatrixGroup> {
    let top = sp_group(m - k, q)?;
    let bottom = sp_group(k, q)?;
    direct_sum(format!("Sp_{}({q}) x Sp_{}({q})", 2 * (m - k), 2 * k), &[&top, &bottom])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::is_isometry;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn symplectic_orders() {
        for (m, q, n) in [(1, 4, 60u64), (2, 4, 979200), (2, 2, 720), (3, 2, 1451520), (1, 8, 504), (2, 8, 1056706560)] {
            let g = sp_group(m, q).unwrap();
            g.check_forms().unwrap();
            assert_eq!(g.chain().unwrap().order(), big(n), "Sp_{}({q})", 2 * m);
        }
    }

    #[test]
    fn transvection_preserves_form_for_random_vectors() {
        use rand::{Rng, SeedableRng};
        let k = Field::with_order(4).unwrap();
        let space = FormedSpace::symplectic(&k, 3);
        let gram = &space.bilinear.as_ref().unwrap().gram;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let v: Vec<Gf> = (0..6).map(|_| Gf(rng.gen_range(0..4))).collect();
            let t = symplectic_transvection(&k, gram, &v, Gf(rng.gen_range(1..4)));
            assert!(is_isometry(&t, &space).unwrap());
        }
    }

    #[test]
    fn orthogonal_orders_and_kernels() {
        for (m, q, ty, go) in [
            (2, 4, FormType::Minus, 8160u64),
            (1, 2, FormType::Minus, 6),
            (3, 2, FormType::Plus, 40320),
            (4, 2, FormType::Plus, 348364800),
        ] {
            let (o, omega) = o_group(m, q, ty).unwrap();
            o.check_forms().unwrap();
            omega.check_forms().unwrap();
            assert_eq!(o.chain().unwrap().order(), big(go));
            assert_eq!(omega.chain().unwrap().order(), big(go / 2));
            assert!(omega.dickson_profile().iter().all(|&d| d == 0));
        }
    }

    #[test]
    fn wreath_and_extension_orders() {
        let w = wreath_pair(&sp_group(1, 4).unwrap()).unwrap();
        w.check_forms().unwrap();
        assert_eq!(w.chain().unwrap().order(), big(7200));
        let e = field_ext_subgroup(1, 2, 2).unwrap();
        e.check_forms().unwrap();
        assert_eq!(e.chain().unwrap().order(), big(120));
        let e = field_ext_subgroup(1, 2, 4).unwrap();
        e.check_forms().unwrap();
        assert_eq!(e.chain().unwrap().order(), big(8160));
    }

    #[test]
    fn extension_subgroup_lies_in_the_symplectic_group() {
        let e = field_ext_subgroup(1, 2, 2).unwrap();
        let sp = sp_group(2, 2).unwrap().chain().unwrap();
        for g in e.elems().unwrap() {
            assert!(sp.contains(&g));
        }
    }

    #[test]
    fn norm_form_of_the_plus_plane() {
        let k4 = Field::with_order(4).unwrap();
        let k2 = Field::with_order(2).unwrap();
        for m in [1, 2] {
            let p = QuadraticForm::standard(&k4, m, FormType::Plus).unwrap();
            let q = subfield_norm_form(&p).unwrap();
            assert_eq!(classify_quadratic(&q, &k2).unwrap().form_type, FormType::Plus);
            assert_eq!(crate::forms::count_singular(&q, &k2).unwrap(), crate::forms::singular_count_formula(2, 2 * m as u32, FormType::Plus));
        }
        // e1 + w f1 has norm w + w^2 = 1
        let p = QuadraticForm::standard(&k4, 2, FormType::Plus).unwrap();
        let r = FieldRestriction::new(&k4, &k2).unwrap();
        let w = k4.primitive_element();
        let v = r.vector(&[Gf::ONE, w, Gf::ZERO, Gf::ZERO]);
        assert_eq!(subfield_norm_form(&p).unwrap().eval(&k2, &v), Gf::ONE);
    }

    #[test]
    fn restricted_orthogonal_groups_preserve_the_norm_form() {
        let k2 = Field::with_order(2).unwrap();
        let (o, omega) = o_group(2, 4, FormType::Plus).unwrap();
        let res = Restricted::new(&o.space, &k2).unwrap();
        assert_eq!(res.space.shape, StandardShape::Orthogonal(FormType::Plus));
        let mut g = res.group(&omega, vec![res.frobenius()], 2);
        g.gens.push(res.matrix(&first_reflection(&o).unwrap()));
        g.check_forms().unwrap();
        assert!(g.dickson_profile().iter().all(|&d| d == 0));
    }

    #[test]
    fn tensor_form_is_plus_and_preserved() {
        let t = TensorSpace::new(2, 4).unwrap();
        assert_eq!(classify_quadratic(&t.form, &t.field).unwrap().form_type, FormType::Plus);
        let h = t.sp_product().unwrap();
        h.check_forms().unwrap();
        assert!(h.dickson_profile().iter().all(|&d| d == 0));
        // the two factors commute
        let a = sp_group(1, 4).unwrap();
        let b = sp_group(2, 4).unwrap();
        for x in &a.gens {
            for y in &b.gens {
                let (x, y) = (t.lift_w(x), t.lift_v(y));
                assert_eq!(x.mul(&t.field, &y).unwrap(), y.mul(&t.field, &x).unwrap());
            }
        }
        let t = TensorSpace::new(3, 2).unwrap();
        t.sp_product().unwrap().check_forms().unwrap();
    }
}
