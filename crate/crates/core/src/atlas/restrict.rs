//! Viewing a space over GF(q^b) as a space over GF(q).
//!
//! The GF(q)-basis of `GF(q^b)^n` is `z^i e_j` at index `j*b + i`, where `z`
//! is the primitive element of the big field. Bilinear and quadratic forms
//! restrict through the relative trace.

use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::forms::{BilinearForm, QuadraticForm};
use crate::matrix::Matrix;

#[derive(Clone, Debug)]
pub struct FieldRestriction {
    pub big: Field,
    pub small: Field,
    pub b: usize,
    /// Image of each small-field element in the big field.
    emb: Vec<Gf>,
    /// Small-field coordinates of each big-field element.
    coords: Vec<Vec<Gf>>,
    /// `z^i` for `i < b`.
    powers: Vec<Gf>,
}

impl FieldRestriction {
    pub fn new(big: &Field, small: &Field) -> Result<FieldRestriction> {
        let emb = big.embedding_from(small)?;
        let b = (big.degree() / small.degree()) as usize;
        let z = big.primitive_element();
        let mut powers = vec![Gf::ONE];
        for _ in 1..b {
            powers.push(big.mul(*powers.last().unwrap(), z));
        }
        let mut coords = vec![Vec::new(); big.order() as usize];
        let q = small.order() as u64;
        for idx in 0..(q.pow(b as u32)) {
            let mut t = idx;
            let c: Vec<Gf> = (0..b)
                .map(|_| {
                    let v = Gf((t % q) as u16);
                    t /= q;
                    v
                })
                .collect();
            let x = c.iter().zip(&powers).fold(Gf::ZERO, |acc, (&ci, &p)| big.add(acc, big.mul(emb[ci.0 as usize], p)));
            coords[x.0 as usize] = c;
        }
        if coords.iter().any(Vec::is_empty) {
            return Err(Error::DataIntegrity("powers of the primitive element are not a basis".into()));
        }
        Ok(FieldRestriction { big: big.clone(), small: small.clone(), b, emb, coords, powers })
    }

    pub fn embed(&self, x: Gf) -> Gf {
        self.emb[x.0 as usize]
    }

    /// A big-field element known to lie in the small field, as a small-field element.
    fn descend(&self, x: Gf) -> Gf {
        let c = &self.coords[x.0 as usize];
        debug_assert!(c[1..].iter().all(|v| v.is_zero()));
        c[0]
    }

    fn trace(&self, x: Gf) -> Gf {
        self.descend(self.big.trace_to_subfield(x, self.small.order()).expect("subfield"))
    }

    pub fn vector(&self, x: &[Gf]) -> Vec<Gf> {
        x.iter().flat_map(|&c| self.coords[c.0 as usize].iter().copied()).collect()
    }

    pub fn matrix(&self, g: &Matrix) -> Matrix {
        let (n, b) = (g.rows(), self.b);
        let mut out = Matrix::zero(n * b, n * b);
        for j in 0..n {
            for i in 0..b {
                for l in 0..n {
                    let c = &self.coords[self.big.mul(self.powers[i], g.get(j, l)).0 as usize];
                    for (i2, &v) in c.iter().enumerate() {
                        out.set(j * b + i, l * b + i2, v);
                    }
                }
            }
        }
        out
    }

    /// The coordinatewise Frobenius `x -> x^q`, linear over the small field.
    pub fn frobenius(&self, n: usize) -> Matrix {
        self.frobenius_on(n, 0..n)
    }

    /// Frobenius on the big-field coordinates in `range`, identity on the rest.
    pub fn frobenius_on(&self, n: usize, range: std::ops::Range<usize>) -> Matrix {
        let b = self.b;
        let q = self.small.order();
        let mut out = Matrix::identity(n * b);
        for j in range {
            for i in 0..b {
                out.set(j * b + i, j * b + i, Gf::ZERO);
                let img = self.big.frobenius(self.powers[i], q).expect("subfield");
                for (i2, &v) in self.coords[img.0 as usize].iter().enumerate() {
                    out.set(j * b + i, j * b + i2, v);
                }
            }
        }
        out
    }

    pub fn bilinear(&self, form: &BilinearForm) -> BilinearForm {
        let (n, b) = (form.dim(), self.b);
        let k = &self.big;
        let mut g = Matrix::zero(n * b, n * b);
        for j in 0..n {
            for l in 0..n {
                for i in 0..b {
                    for i2 in 0..b {
                        let v = k.mul(k.mul(self.powers[i], self.powers[i2]), form.gram.get(j, l));
                        g.set(j * b + i, l * b + i2, self.trace(v));
                    }
                }
            }
        }
        BilinearForm { gram: g }
    }

    /// `x -> Tr(P(x))`. Over GF(4) down to GF(2) this is `P + P^2`.
    pub fn quadratic(&self, p: &QuadraticForm) -> QuadraticForm {
        let (n, b) = (p.dim(), self.b);
        let k = &self.big;
        let polar = p.polarize(k).gram;
        let mut u = Matrix::zero(n * b, n * b);
        for j in 0..n {
            for i in 0..b {
                let a = j * b + i;
                let zi = self.powers[i];
                u.set(a, a, self.trace(k.mul(k.mul(zi, zi), p.coeffs.get(j, j))));
                for l in j..n {
                    for i2 in 0..b {
                        let c = l * b + i2;
                        if c <= a {
                            continue;
                        }
                        u.set(a, c, self.trace(k.mul(k.mul(zi, self.powers[i2]), polar.get(j, l))));
                    }
                }
            }
        }
        QuadraticForm { coeffs: u }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{classify_quadratic, count_singular, symplectic_standard_basis, FormType};

    fn gf(q: u32) -> Field {
        Field::with_order(q).unwrap()
    }

    #[test]
    fn restricted_products_match() {
        let (big, small) = (gf(16), gf(4));
        let r = FieldRestriction::new(&big, &small).unwrap();
        let z = big.primitive_element();
        let g = Matrix::from_rows(&[vec![z, Gf::ONE], vec![Gf::ZERO, big.mul(z, z)]]).unwrap();
        let h = Matrix::from_rows(&[vec![Gf::ONE, z], vec![z, Gf::ZERO]]).unwrap();
        let gh = g.mul(&big, &h).unwrap();
        assert_eq!(r.matrix(&gh), r.matrix(&g).mul(&small, &r.matrix(&h)).unwrap());
        let x = vec![z, big.mul(z, z)];
        assert_eq!(r.vector(&g.vec_mul(&big, &x)), r.matrix(&g).vec_mul(&small, &r.vector(&x)));
    }

    #[test]
    fn trace_form_of_symplectic_plane_is_standardizable() {
        let (big, small) = (gf(4), gf(2));
        let r = FieldRestriction::new(&big, &small).unwrap();
        let b = r.bilinear(&BilinearForm::standard_symplectic(&big, 1));
        let c = symplectic_standard_basis(&b, &small).unwrap();
        assert_eq!(b.change_basis(&small, &c), BilinearForm::standard_symplectic(&small, 2));
    }

    #[test]
    fn norm_form_of_plus_plane_is_plus() {
        let (big, small) = (gf(4), gf(2));
        let r = FieldRestriction::new(&big, &small).unwrap();
        let p = QuadraticForm::standard(&big, 1, FormType::Plus).unwrap();
        let q = r.quadratic(&p);
        assert_eq!(classify_quadratic(&q, &small).unwrap().form_type, FormType::Plus);
        assert_eq!(count_singular(&q, &small).unwrap(), 9);
        // the restricted form takes the value Tr(P(x)) on every vector
        for x0 in big.elements() {
            for x1 in big.elements() {
                let x = [x0, x1];
                let lhs = q.eval(&small, &r.vector(&x));
                let val = p.eval(&big, &x);
                let expect = big.add(val, big.mul(val, val));
                assert_eq!(r.embed(lhs), expect);
            }
        }
    }

    #[test]
    fn frobenius_squares_to_identity_over_gf4() {
        let r = FieldRestriction::new(&gf(4), &gf(2)).unwrap();
        let f = r.frobenius(3);
        assert!(f.mul(&gf(2), &f).unwrap().is_identity());
        assert!(!f.is_identity());
    }
}
