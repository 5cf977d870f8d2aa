//! `G_2(q)` and `Sz(q)` in characteristic 2, built in coordinates where their
//! generators are monomial or unitriangular and then moved to the standard
//! symplectic basis.

use std::collections::HashSet;

use num_bigint::BigUint;

use super::MatrixGroup;
use crate::arith::orders::{order_of, Family};
use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::forms::{symplectic_standard_basis, BilinearForm, FormedSpace, StandardShape};
use crate::matrix::Matrix;

fn antidiagonal(n: usize) -> Matrix {
    Matrix::permutation(&(0..n).rev().collect::<Vec<_>>())
}

fn even_field(f: u32) -> Result<Field> {
    Field::new(2, f)
}

/// Rewrite a group on the antidiagonal symplectic space in the standard basis.
fn standardize(g: MatrixGroup) -> Result<MatrixGroup> {
    let b = g.space.bilinear.clone().ok_or(Error::DegenerateForm)?;
    let c = symplectic_standard_basis(&b, &g.field)?;
    let mut out = g.in_basis(&c)?;
    out.space.shape = StandardShape::Symplectic;
    Ok(out)
}

fn antidiagonal_space(k: &Field, n: usize) -> FormedSpace {
    FormedSpace::from_bilinear(k, BilinearForm { gram: antidiagonal(n) })
}

struct G2Gens {
    k: Field,
}

impl G2Gens {
    fn r(&self) -> Matrix {
        Matrix::permutation(&[0, 2, 1, 4, 3, 5])
    }

    fn s(&self) -> Matrix {
        Matrix::permutation(&[1, 0, 3, 2, 5, 4])
    }

    fn torus(&self, l: Gf, m: Gf) -> Matrix {
        let k = &self.k;
        let (li, mi) = (k.inv(l).unwrap(), k.inv(m).unwrap());
        Matrix::diagonal(&[l, m, k.mul(l, mi), k.mul(li, m), mi, li])
    }

    fn a(&self, x: Gf) -> Matrix {
        let mut t = Matrix::identity(6);
        t.set(4, 0, x);
        t.set(5, 1, x);
        t
    }

    fn f(&self, x: Gf) -> Matrix {
        let mut t = Matrix::identity(6);
        t.set(1, 0, x);
        t.set(3, 2, self.k.mul(x, x));
        t.set(5, 4, x);
        t
    }

    fn additive_basis(&self) -> Vec<Gf> {
        let z = self.k.primitive_element();
        (0..self.k.degree()).map(|i| self.k.pow(z, i as i64).unwrap()).collect()
    }

    fn tori(&self) -> Vec<Matrix> {
        if self.k.order() == 2 {
            return Vec::new();
        }
        let z = self.k.primitive_element();
        vec![self.torus(z, Gf::ONE), self.torus(Gf::ONE, z)]
    }

    fn unipotents(&self) -> Vec<Matrix> {
        self.additive_basis().into_iter().flat_map(|x| [self.a(x), self.f(x)]).collect()
    }
}

/// `G_2(2^f)` in its six-dimensional symplectic representation. The last
/// standard pair spans a nondegenerate 2-space whose stabilizer is
/// [`g2_example_m`].
pub fn g2_subgroup(f: u32) -> Result<MatrixGroup> {
    let k = even_field(f)?;
    let q = k.order();
    let g = G2Gens { k: k.clone() };
    let mut gens = vec![g.r(), g.s()];
    gens.extend(g.tori());
    gens.extend(g.unipotents());
    let grp = MatrixGroup::new(format!("G_2({q})"), &antidiagonal_space(&k, 6), gens).predict(order_of(Family::G2, 6, q)?);
    standardize(grp)
}

/// The subgroup `<s, (rs)^3, T, A, F>` of `G_2(2^f)`, of order `q^2 (q^2-1)^2`.
pub fn g2_example_m(f: u32) -> Result<MatrixGroup> {
    let k = even_field(f)?;
    let q = k.order();
    let g = G2Gens { k: k.clone() };
    let rs = g.r().mul(&k, &g.s())?;
    let rs3 = rs.mul(&k, &rs)?.mul(&k, &rs)?;
    let mut gens = vec![g.s(), rs3];
    gens.extend(g.tori());
    gens.extend(g.unipotents());
    let q = BigUint::from(q);
    let qq = &q * &q;
    let order = &qq * (&qq - 1u32) * (&qq - 1u32);
    let grp = MatrixGroup::new(format!("SL_2({q}) x SL_2({q}) in G_2({q})"), &antidiagonal_space(&k, 6), gens).predict(order);
    standardize(grp)
}

/// `x -> x^{2^{(f+1)/2}}`, the field automorphism squaring to Frobenius.
fn theta(k: &Field, f: u32, x: Gf) -> Gf {
    k.pow(x, 1i64 << f.div_ceil(2)).unwrap()
}

/// Points of the Tits ovoid in antidiagonal coordinates, each normalized to
/// have first nonzero coordinate 1.
fn ovoid(k: &Field, f: u32) -> HashSet<Vec<Gf>> {
    let mut pts = HashSet::new();
    for x in k.elements() {
        for y in k.elements() {
            let t = theta(k, f, x);
            let xt2 = k.mul(k.mul(t, x), x);
            let z = k.add(k.add(k.mul(x, y), xt2), theta(k, f, y));
            pts.insert(vec![Gf::ONE, x, y, z]);
        }
    }
    pts.insert(vec![Gf::ZERO, Gf::ZERO, Gf::ZERO, Gf::ONE]);
    pts
}

fn normalize(k: &Field, v: Vec<Gf>) -> Vec<Gf> {
    let lead = *v.iter().find(|c| !c.is_zero()).unwrap();
    let s = k.inv(lead).unwrap();
    v.into_iter().map(|c| k.mul(s, c)).collect()
}

fn preserves(k: &Field, g: &Matrix, pts: &HashSet<Vec<Gf>>) -> bool {
    pts.iter().all(|p| pts.contains(&normalize(k, g.vec_mul(k, p))))
}

/// `Sz(2^f)`, `f` odd, as the stabilizer of the Tits ovoid in `Sp_4(2^f)`,
/// generated by the antidiagonal involution, a torus element and a
/// unitriangular element; written in the standard symplectic basis.
pub fn sz_group(f: u32) -> Result<MatrixGroup> {
    if f.is_multiple_of(2) || f < 3 {
        return Err(Error::InvalidArgument(format!("Sz(2^{f}) needs f odd and at least 3")));
    }
    let k = even_field(f)?;
    let q = k.order();
    let space = antidiagonal_space(&k, 4);
    let pts = ovoid(&k, f);
    let mut gens = vec![antidiagonal(4)];
    let a = k.primitive_element();
    let torus = k
        .elements()
        .filter(|b| !b.is_zero())
        .map(|b| {
            let (ai, bi) = (k.inv(a).unwrap(), k.inv(b).unwrap());
            Matrix::diagonal(&[a, b, bi, ai])
        })
        .find(|t| preserves(&k, t, &pts))
        .ok_or_else(|| Error::DataIntegrity("no ovoid torus element".into()))?;
    gens.push(torus);
    let unip = unitriangular_ovoid_element(&k, &space, &pts)?;
    gens.push(unip);
    let s = k.order() as u64;
    let order = BigUint::from(s * s * (s * s + 1) * (s - 1));
    standardize(MatrixGroup::new(format!("Sz({q})"), &space, gens).predict(order))
}

fn unitriangular_ovoid_element(k: &Field, space: &FormedSpace, pts: &HashSet<Vec<Gf>>) -> Result<Matrix> {
    for c12 in k.elements() {
        for c13 in k.elements() {
            for c23 in k.elements() {
                let rows = vec![
                    vec![Gf::ONE, Gf::ONE, Gf::ZERO, Gf::ONE],
                    vec![Gf::ZERO, Gf::ONE, c12, c13],
                    vec![Gf::ZERO, Gf::ZERO, Gf::ONE, c23],
                    vec![Gf::ZERO, Gf::ZERO, Gf::ZERO, Gf::ONE],
                ];
                let m = Matrix::from_rows(&rows)?;
                if crate::forms::is_isometry(&m, space)? && preserves(k, &m, pts) {
                    return Ok(m);
                }
            }
        }
    }
    Err(Error::DataIntegrity("no unitriangular ovoid element".into()))
}

/// The antidiagonal involution of the Suzuki construction in the standard
/// basis `(e_1, f_1, e_2, f_2)`.
pub fn suzuki_element(f: u32) -> Result<Matrix> {
    Ok(sz_group(f)?.gens[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_generators_are_symplectic_and_order_is_right() {
        let g = g2_subgroup(1).unwrap();
        g.check_forms().unwrap();
        assert_eq!(g.chain().unwrap().order(), BigUint::from(12096u32));
        let g = g2_subgroup(2).unwrap();
        g.check_forms().unwrap();
        assert_eq!(g.chain().unwrap().order(), BigUint::from(251596800u64));
    }

    #[test]
    fn g2_m_stabilizes_the_last_pair() {
        let m = g2_example_m(2).unwrap();
        assert_eq!(m.chain().unwrap().order(), BigUint::from(3600u32));
        for g in &m.gens {
            for r in 0..4 {
                assert!(g.get(r, 4).is_zero() && g.get(r, 5).is_zero());
            }
            for r in 4..6 {
                assert!((0..4).all(|c| g.get(r, c).is_zero()));
            }
        }
    }

    #[test]
    fn suzuki_orders() {
        let s = sz_group(3).unwrap();
        s.check_forms().unwrap();
        assert_eq!(s.chain().unwrap().order(), BigUint::from(29120u32));
        assert_eq!(sz_group(5).unwrap().chain().unwrap().order(), BigUint::from(32537600u32));
        assert!(sz_group(1).is_err() && sz_group(4).is_err());
    }

    #[test]
    fn suzuki_element_swaps_the_standard_pairs() {
        let w = suzuki_element(3).unwrap();
        assert_eq!(w, Matrix::permutation(&[1, 0, 3, 2]));
    }
}
