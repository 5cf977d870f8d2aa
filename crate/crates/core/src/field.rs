//! Exact arithmetic in GF(p^f) backed by a fixed, versioned modulus table.
//!
//! Elements are stored as a [`Gf`] index: the coefficient vector
//! `(c0, .., c_{f-1})` of the polynomial representative, read as the base-p
//! integer `c0 + c1 p + ... + c_{f-1} p^{f-1}`. That integer order is the
//! canonical element ordering used for every deterministic "smallest" choice.
//! In characteristic 2 addition is XOR on the index.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Raw table-encoded field element. Meaningful only together with its [`Field`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Gf(pub u16);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Largest supported field size.
pub const MAX_FIELD_ORDER: u32 = 1 << 16;

const MODULUS_TABLE: &str = include_str!("../data/moduli.txt");

pub(crate) struct FieldData {
    p: u32,
    f: u32,
    q: u32,
    modulus: Vec<u32>,
    /// exp[i] = g^i for 0 <= i < 2(q-1), g the primitive root of the table polynomial.
    exp: Vec<u16>,
    /// log[a] for a != 0.
    log: Vec<u32>,
    /// Addition table for odd-characteristic extension fields.
    add: Option<Vec<u16>>,
    neg: Vec<u16>,
}

/// A finite field GF(p^f). Cheap to clone; two values with equal `(p, f)`
/// share the same tables.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.f == other.0.f)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Version number from the modulus table header.
pub fn modulus_table_version() -> u32 {
    MODULUS_TABLE
        .lines()
        .find_map(|l| l.strip_prefix("version "))
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(0)
}

/// All `(p, f)` pairs in the embedded modulus table.
pub fn modulus_table() -> Vec<(u32, u32, Vec<u32>)> {
    MODULUS_TABLE
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("version"))
        .map(|l| {
            let nums: Vec<u32> = l
                .split_whitespace()
                .map(|t| t.parse().expect("modulus table: bad integer"))
                .collect();
            (nums[0], nums[1], nums[2..].to_vec())
        })
        .collect()
}

fn registry() -> &'static Mutex<HashMap<(u32, u32), Field>> {
    static REG: OnceLock<Mutex<HashMap<(u32, u32), Field>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

// Dense polynomials over GF(p), low degree first, used only while building tables.
fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = mod_inv(m[dm], p);
    while r.len() > dm {
        let c = r[r.len() - 1] * lead_inv % p;
        let shift = r.len() - 1 - dm;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    poly_rem(&r, m, p)
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = poly_trim(a.to_vec());
    let mut b = poly_trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn mod_inv(a: u32, p: u32) -> u32 {
    mod_pow(a, p - 2, p)
}

fn mod_pow(mut a: u32, mut e: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = (a % p) as u64;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    a = r as u32;
    a
}

/// Rabin's irreducibility test: m | x^{p^f} - x and gcd(x^{p^{f/r}} - x, m) = 1
/// for each prime r | f.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let f = (m.len() - 1) as u32;
    if f == 1 {
        return true;
    }
    let x = vec![0, 1];
    // frob_pow(k) = x^{p^k} mod m
    let frob_pow = |k: u32| -> Vec<u32> {
        let mut cur = poly_rem(&x, m, p);
        for _ in 0..k {
            // cur = cur^p
            let mut acc = vec![1u32];
            let mut base = cur.clone();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    acc = poly_mulmod(&acc, &base, m, p);
                }
                base = poly_mulmod(&base, &base, m, p);
                e >>= 1;
            }
            cur = acc;
        }
        cur
    };
    let sub_x = |mut a: Vec<u32>| -> Vec<u32> {
        if a.len() < 2 {
            a.resize(2, 0);
        }
        a[1] = (a[1] + p - 1) % p;
        poly_trim(a)
    };
    if !sub_x(frob_pow(f)).is_empty() {
        return false;
    }
    let mut r = 2;
    let mut ff = f;
    while ff > 1 {
        if ff.is_multiple_of(r) {
            let g = poly_gcd(&sub_x(frob_pow(f / r)), m, p);
            if g.len() != 1 {
                return false;
            }
            while ff.is_multiple_of(r) {
                ff /= r;
            }
        }
        r += 1;
    }
    true
}

impl Field {
    /// The canonical field GF(p^f) from the modulus table.
    pub fn new(p: u32, f: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if f == 0 || (p as u64).pow(f) > MAX_FIELD_ORDER as u64 {
            return Err(Error::UnknownModulus { p, f });
        }
        if let Some(field) = registry().lock().unwrap().get(&(p, f)) {
            return Ok(field.clone());
        }
        let modulus = modulus_table()
            .into_iter()
            .find(|(pp, ff, _)| *pp == p && *ff == f)
            .map(|(_, _, m)| m)
            .ok_or(Error::UnknownModulus { p, f })?;
        let field = Field(Arc::new(Self::build(p, f, modulus)?));
        let mut reg = registry().lock().unwrap();
        Ok(reg.entry((p, f)).or_insert(field).clone())
    }

    /// GF(q) for a prime power q.
    pub fn with_order(q: u32) -> Result<Field> {
        let (p, f) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::new(p, f)
    }

    fn build(p: u32, f: u32, modulus: Vec<u32>) -> Result<FieldData> {
        if modulus.len() != f as usize + 1 || modulus[f as usize] != 1 {
            return Err(Error::DataIntegrity(format!("modulus for ({p},{f}) is not monic of degree {f}")));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::DataIntegrity(format!("modulus for ({p},{f}) is reducible")));
        }
        let q = p.pow(f);
        let to_coeffs = |mut v: u32| -> Vec<u32> {
            (0..f)
                .map(|_| {
                    let c = v % p;
                    v /= p;
                    c
                })
                .collect()
        };
        let from_coeffs = |c: &[u32]| -> u32 { c.iter().rev().fold(0, |acc, &x| acc * p + x) };
        // Root of the modulus: x itself for f > 1, the root -c0 for f = 1.
        let gen = if f == 1 { (p - modulus[0]) % p } else { p };
        let mul_poly = |a: u32, b: u32| -> u32 {
            if f == 1 {
                return a * b % p;
            }
            let r = poly_mulmod(&to_coeffs(a), &to_coeffs(b), &modulus, p);
            let mut r = r;
            r.resize(f as usize, 0);
            from_coeffs(&r)
        };
        let n = (q - 1) as usize;
        let mut exp = vec![0u16; 2 * n.max(1)];
        let mut log = vec![u32::MAX; q as usize];
        let mut cur = 1u32;
        for (i, slot) in exp.iter_mut().enumerate().take(n) {
            *slot = cur as u16;
            if log[cur as usize] != u32::MAX {
                return Err(Error::DataIntegrity(format!(
                    "root of the ({p},{f}) modulus is not primitive (order {i})"
                )));
            }
            log[cur as usize] = i as u32;
            cur = mul_poly(cur, gen);
        }
        if cur != 1 {
            return Err(Error::DataIntegrity(format!("({p},{f}) table root has wrong order")));
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        let add_elem = |a: u32, b: u32| -> u32 {
            let ca = to_coeffs(a);
            let cb = to_coeffs(b);
            let s: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
            from_coeffs(&s)
        };
        let add = if p != 2 && f > 1 {
            let mut t = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = add_elem(a, b) as u16;
                }
            }
            Some(t)
        } else {
            None
        };
        let neg = (0..q)
            .map(|a| {
                let c: Vec<u32> = to_coeffs(a).iter().map(|&x| (p - x) % p).collect();
                from_coeffs(&c) as u16
            })
            .collect();
        Ok(FieldData { p, f, q, modulus, exp, log, add, neg })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }
    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.f
    }
    #[inline]
    pub fn order(&self) -> u32 {
        self.0.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }
    #[inline]
    pub fn is_char2(&self) -> bool {
        self.0.p == 2
    }

    /// Every element in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Gf> {
        (0..self.0.q).map(|v| Gf(v as u16))
    }

    /// The fixed multiplicative generator (root of the table polynomial).
    pub fn primitive_element(&self) -> Gf {
        Gf(self.0.exp[if self.0.q == 2 { 0 } else { 1 }])
    }

    /// Coefficient vector (c0, .., c_{f-1}) of an element.
    pub fn coeffs(&self, x: Gf) -> Vec<u32> {
        let mut v = x.0 as u32;
        (0..self.0.f)
            .map(|_| {
                let c = v % self.0.p;
                v /= self.0.p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<Gf> {
        if c.len() != self.0.f as usize || c.iter().any(|&x| x >= self.0.p) {
            return Err(Error::InvalidArgument(format!("bad coefficient vector for {self}")));
        }
        Ok(Gf(c.iter().rev().fold(0u32, |acc, &x| acc * self.0.p + x) as u16))
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Gf {
        Gf(n.rem_euclid(self.0.p as i64) as u16)
    }

    #[inline]
    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        let d = &*self.0;
        if d.p == 2 {
            Gf(a.0 ^ b.0)
        } else if let Some(t) = &d.add {
            Gf(t[a.0 as usize * d.q as usize + b.0 as usize])
        } else {
            let s = a.0 as u32 + b.0 as u32;
            Gf(if s >= d.p { s - d.p } else { s } as u16)
        }
    }

    #[inline]
    pub fn neg(&self, a: Gf) -> Gf {
        if self.0.p == 2 {
            a
        } else {
            Gf(self.0.neg[a.0 as usize])
        }
    }

    #[inline]
    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a.0 == 0 || b.0 == 0 {
            return Gf::ZERO;
        }
        let d = &*self.0;
        Gf(d.exp[(d.log[a.0 as usize] + d.log[b.0 as usize]) as usize])
    }

    /// Multiplicative inverse.
    pub fn inv(&self, a: Gf) -> Result<Gf> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let d = &*self.0;
        let n = d.q - 1;
        Ok(Gf(d.exp[((n - d.log[a.0 as usize]) % n) as usize]))
    }

    /// `a^e`; negative exponents invert.
    pub fn pow(&self, a: Gf, e: i64) -> Result<Gf> {
        if a.is_zero() {
            return match e.cmp(&0) {
                std::cmp::Ordering::Less => Err(Error::ZeroInverse),
                std::cmp::Ordering::Equal => Ok(Gf::ONE),
                std::cmp::Ordering::Greater => Ok(Gf::ZERO),
            };
        }
        let d = &*self.0;
        let n = (d.q - 1) as i64;
        let l = (d.log[a.0 as usize] as i64 * e.rem_euclid(n)).rem_euclid(n);
        Ok(Gf(d.exp[l as usize]))
    }

    /// Discrete log with respect to [`Field::primitive_element`]; `None` for zero.
    pub fn log(&self, a: Gf) -> Option<u32> {
        (!a.is_zero()).then(|| self.0.log[a.0 as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Gf) -> Option<u32> {
        let l = self.log(a)?;
        let n = self.0.q - 1;
        Some(n / num_integer::gcd(n, l))
    }

    /// Degree e with p^e = q0, if GF(q0) is a subfield.
    fn subfield_degree(&self, q0: u32) -> Result<u32> {
        let (p, e) = prime_power(q0).ok_or(Error::NotASubfield { q0, q: self.0.q })?;
        if p != self.0.p || !self.0.f.is_multiple_of(e) {
            return Err(Error::NotASubfield { q0, q: self.0.q });
        }
        Ok(e)
    }

    /// `x^{q0}`, the Frobenius automorphism relative to the subfield GF(q0).
    pub fn frobenius(&self, x: Gf, q0: u32) -> Result<Gf> {
        self.subfield_degree(q0)?;
        self.pow(x, q0 as i64)
    }

    /// Relative trace `x + x^{q0} + ... + x^{q0^{k-1}}`, landing in the copy of
    /// GF(q0) inside this field.
    pub fn trace_to_subfield(&self, x: Gf, q0: u32) -> Result<Gf> {
        let e = self.subfield_degree(q0)?;
        let k = self.0.f / e;
        let mut acc = Gf::ZERO;
        let mut cur = x;
        for _ in 0..k {
            acc = self.add(acc, cur);
            cur = self.pow(cur, q0 as i64)?;
        }
        Ok(acc)
    }

    /// Elements of the subfield GF(q0), in canonical order.
    pub fn subfield_elements(&self, q0: u32) -> Result<Vec<Gf>> {
        self.subfield_degree(q0)?;
        Ok(self.elements().filter(|&x| self.pow(x, q0 as i64).unwrap() == x).collect())
    }

    /// Smallest d (canonical order) with x^2 + x + d irreducible over this
    /// characteristic-2 field.
    pub fn irreducible_quadratic_d(&self) -> Result<Gf> {
        if !self.is_char2() {
            return Err(Error::WrongCharacteristic { expected: 2, got: self.0.p });
        }
        let image: std::collections::HashSet<Gf> =
            self.elements().map(|y| self.add(self.mul(y, y), y)).collect();
        Ok(self.elements().find(|d| !image.contains(d)).expect("Artin-Schreier image has index 2"))
    }

    /// Embedding of `sub` into `self`: table indexed by the `sub` element index.
    /// The generator of `sub` is sent to the smallest root of its modulus.
    pub fn embedding_from(&self, sub: &Field) -> Result<Vec<Gf>> {
        if sub.p() != self.p() || !self.degree().is_multiple_of(sub.degree()) {
            return Err(Error::NotASubfield { q0: sub.order(), q: self.order() });
        }
        let m = sub.modulus();
        let eval = |x: Gf| -> Gf {
            let mut acc = Gf::ZERO;
            for &c in m.iter().rev() {
                acc = self.add(self.mul(acc, x), self.from_int(c as i64));
            }
            acc
        };
        let root = if sub.degree() == 1 {
            // prime field: identity on integers
            None
        } else {
            Some(self.elements().find(|&x| eval(x).is_zero()).ok_or_else(|| {
                Error::DataIntegrity(format!("{sub} modulus has no root in {self}"))
            })?)
        };
        Ok(sub
            .elements()
            .map(|a| match root {
                None => a,
                Some(r) => {
                    let mut acc = Gf::ZERO;
                    let mut pw = Gf::ONE;
                    for c in sub.coeffs(a) {
                        acc = self.add(acc, self.mul(self.from_int(c as i64), pw));
                        pw = self.mul(pw, r);
                    }
                    acc
                }
            })
            .collect())
    }

    pub fn element(&self, x: Gf) -> FieldElement {
        FieldElement { field: self.clone(), value: x }
    }

    /// Render an element: `0`, `1`, `z^k` for powers of the primitive element
    /// (prime fields print integers).
    pub fn fmt_elem(&self, x: Gf) -> String {
        if self.0.f == 1 {
            return x.0.to_string();
        }
        match self.log(x) {
            None => "0".into(),
            Some(0) => "1".into(),
            Some(1) => "z".into(),
            Some(k) => format!("z^{k}"),
        }
    }
}

/// `(p, f)` with `p^f = q`, if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let mut f = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        f += 1;
    }
    (r == 1).then_some((p, f))
}

/// A field element carrying its field; operations check that operands agree.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    pub field: Field,
    pub value: Gf,
}

/// Operations accepted by [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
    Inv,
    Pow(i64),
}

impl FieldElement {
    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }
    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.add(self.value, other.value)))
    }
    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.mul(self.value, other.value)))
    }
    pub fn neg(&self) -> FieldElement {
        self.field.element(self.field.neg(self.value))
    }
    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.field.element(self.field.inv(self.value)?))
    }
    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        Ok(self.field.element(self.field.pow(self.value, e)?))
    }
}

/// Checked arithmetic dispatch; `y` is required for binary operations.
pub fn field_arith(op: ArithOp, x: &FieldElement, y: Option<&FieldElement>) -> Result<FieldElement> {
    let need = || y.ok_or_else(|| Error::InvalidArgument("binary operation needs two operands".into()));
    match op {
        ArithOp::Add => x.add(need()?),
        ArithOp::Mul => x.mul(need()?),
        ArithOp::Neg => Ok(x.neg()),
        ArithOp::Inv => x.inv(),
        ArithOp::Pow(e) => x.pow(e),
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.fmt_elem(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Field {
        Field::with_order(q).unwrap()
    }

    #[test]
    fn table_covers_required_fields() {
        for f in 1..=8 {
            assert_eq!(Field::new(2, f).unwrap().order(), 1 << f);
        }
        for p in [2, 3, 5, 7, 11, 13, 17] {
            assert_eq!(Field::new(p, 1).unwrap().order(), p);
        }
        assert_eq!(modulus_table_version(), 1);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(Field::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(Field::new(2, 17), Err(Error::UnknownModulus { .. })));
        assert!(matches!(Field::new(19, 3), Err(Error::UnknownModulus { .. })));
    }

    #[test]
    fn gf4_modulus_is_the_only_irreducible_quadratic() {
        // exhaustive over the four monic quadratics x^2 + b x + c
        let irreducible: Vec<(u32, u32)> = (0..2)
            .flat_map(|b| (0..2).map(move |c| (b, c)))
            .filter(|&(b, c)| (0..2).all(|x| (x * x + b * x + c) % 2 != 0))
            .collect();
        assert_eq!(irreducible, vec![(1, 1)]);
        assert_eq!(gf(4).modulus(), &[1, 1, 1]);
    }

    #[test]
    fn gf4_products() {
        let k = gf(4);
        let w = Gf(2);
        assert_eq!(k.mul(w, w), Gf(3)); // w^2 = w + 1
        assert_eq!(k.mul(Gf(3), w), Gf::ONE);
        assert_eq!(k.inv(Gf::ZERO), Err(Error::ZeroInverse));
    }

    #[test]
    fn gf8_nonzero_seventh_power_is_one() {
        let k = gf(8);
        for x in k.elements().skip(1) {
            assert_eq!(k.pow(x, 7).unwrap(), Gf::ONE);
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        for (p, f, _) in modulus_table() {
            let k = Field::new(p, f).unwrap();
            if k.order() > 1 << 12 {
                continue;
            }
            let n = k.order() - 1;
            let gens = k.elements().skip(1).filter(|&x| k.mult_order(x) == Some(n)).count();
            assert!(gens > 0, "{k} has no generator");
            // brute-force order of the primitive element
            let g = k.primitive_element();
            let mut cur = g;
            let mut ord = 1;
            while cur != Gf::ONE {
                cur = k.mul(cur, g);
                ord += 1;
            }
            assert_eq!(ord, n);
        }
    }

    #[test]
    fn odd_fields_are_consistent() {
        for q in [9, 25, 27, 49, 13] {
            let k = gf(q);
            for a in k.elements() {
                assert_eq!(k.add(a, k.neg(a)), Gf::ZERO);
                for b in k.elements() {
                    let s = k.add(a, b);
                    assert_eq!(k.sub(s, b), a);
                }
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        let k = gf(4);
        assert_eq!(k.frobenius(Gf(2), 2).unwrap(), Gf(3));
        assert_eq!(k.frobenius(Gf::ONE, 2).unwrap(), Gf::ONE);
        assert!(matches!(k.frobenius(Gf(2), 8), Err(Error::NotASubfield { .. })));
        let k16 = gf(16);
        for x in k16.elements() {
            let y = k16.frobenius(k16.frobenius(x, 4).unwrap(), 4).unwrap();
            assert_eq!(y, x);
        }
    }

    #[test]
    fn frobenius_is_a_field_automorphism() {
        for q in [4u32, 8, 16, 64, 256] {
            let k = gf(q);
            let sub: Vec<u32> = (1..k.degree()).filter(|e| k.degree().is_multiple_of(*e)).map(|e| 1 << e).collect();
            for q0 in std::iter::once(2).chain(sub) {
                let fr = |x| k.frobenius(x, q0).unwrap();
                for a in k.elements() {
                    for b in k.elements() {
                        assert_eq!(fr(k.add(a, b)), k.add(fr(a), fr(b)));
                        assert_eq!(fr(k.mul(a, b)), k.mul(fr(a), fr(b)));
                    }
                }
            }
        }
    }

    #[test]
    fn traces() {
        let k = gf(4);
        assert_eq!(k.trace_to_subfield(Gf(2), 2).unwrap(), Gf::ONE);
        assert_eq!(k.trace_to_subfield(Gf::ONE, 2).unwrap(), Gf::ZERO);
        let k16 = gf(16);
        let zeros = k16.elements().filter(|&x| k16.trace_to_subfield(x, 4).unwrap().is_zero()).count();
        assert_eq!(zeros, 4);
        // transitivity of the trace through GF(4)
        for x in k16.elements() {
            let direct = k16.trace_to_subfield(x, 2).unwrap();
            let y = k16.trace_to_subfield(x, 4).unwrap();
            let via = k16.add(y, k16.mul(y, y));
            assert_eq!(direct, via);
        }
    }

    #[test]
    fn artin_schreier_constant() {
        assert_eq!(gf(2).irreducible_quadratic_d().unwrap(), Gf::ONE);
        assert_eq!(gf(4).irreducible_quadratic_d().unwrap(), Gf(2));
        for q in [2u32, 4, 8, 16, 32, 256] {
            let k = gf(q);
            let d = k.irreducible_quadratic_d().unwrap();
            assert_eq!(k.trace_to_subfield(d, 2).unwrap(), Gf::ONE);
            assert!(k.elements().all(|y| k.add(k.mul(y, y), y) != d));
        }
        assert!(gf(9).irreducible_quadratic_d().is_err());
    }

    #[test]
    fn embeddings_are_ring_homomorphisms() {
        for (sub, sup) in [(4u32, 16u32), (2, 4), (4, 64), (16, 256), (9, 81)] {
            let (ks, kb) = (gf(sub), gf(sup));
            let e = kb.embedding_from(&ks).unwrap();
            for a in ks.elements() {
                for b in ks.elements() {
                    assert_eq!(e[ks.mul(a, b).0 as usize], kb.mul(e[a.0 as usize], e[b.0 as usize]));
                    assert_eq!(e[ks.add(a, b).0 as usize], kb.add(e[a.0 as usize], e[b.0 as usize]));
                }
            }
        }
    }

    #[test]
    fn checked_elements_reject_mixed_fields() {
        let a = gf(4).element(Gf(2));
        let b = gf(8).element(Gf(2));
        assert_eq!(field_arith(ArithOp::Add, &a, Some(&b)), Err(Error::FieldMismatch));
        let c = field_arith(ArithOp::Mul, &a, Some(&a)).unwrap();
        assert_eq!(c.value, Gf(3));
        assert_eq!(field_arith(ArithOp::Pow(-1), &a, None).unwrap().value, Gf(3));
        assert_eq!(field_arith(ArithOp::Inv, &gf(4).element(Gf::ZERO), None), Err(Error::ZeroInverse));
    }
}
