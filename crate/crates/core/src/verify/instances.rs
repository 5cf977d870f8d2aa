//! Concrete factorizations at small parameters, with the property checks
//! every full verification must pass.

use num_bigint::BigUint;
use serde::Serialize;

use super::{
    check_chain, choose_strategy, conjugators, order_oracle, orbit_transitivity, screen, Budget, Group, Report, Side,
    Strategy, Verdict, CONJUGATION_SEED,
};
use crate::catalog::Table;
use std::sync::Mutex;

use crate::action::{Action, MatAction, MatPoint, PermAction, PermPoint};
use crate::atlas::classical::{
    direct_sum, first_reflection, go_minus_in_sp, n_k_symplectic, o_group, sp_group, wreath_pair, Restricted, TensorSpace,
};
use crate::atlas::perms::{direct_product, even_part, even_young, wreath_s2};
use crate::atlas::{alternating, g2_example_m, g2_subgroup, mathieu12, mathieu24, pgaml2_8, symmetric, sz_group, PermGroup};
use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::forms::FormType;
use crate::matrix::{unit_vector, Matrix};
use crate::perm::Perm;

/// One named property of a verified instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Property {
    pub instance: String,
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl Property {
    fn new(instance: &str, name: &str, holds: bool, detail: String) -> Property {
        Property { instance: instance.into(), name: name.into(), holds, detail }
    }
}

/// Anything the CLI and the test suites can verify.
pub trait Verifiable {
    fn id(&self) -> &str;
    /// Run with `strategy`, or the default choice when `None`.
    fn run(&self, strategy: Option<Strategy>, budget: &Budget) -> Result<Report>;
    /// Strategy agreement, symmetry, conjugation invariance and, where an
    /// overgroup is recorded, the overgroup identity.
    fn properties(&self, budget: &Budget) -> Result<Vec<Property>>;
}

/// `G`, `H`, `K` with an optional point whose stabilizer is one factor and an
/// optional overgroup `M ⊇ H` (itself a point stabilizer when a point is given).
#[derive(Clone)]
pub struct Setting<A: Action> {
    pub id: String,
    pub g: Group<A>,
    pub h: Group<A>,
    pub k: Group<A>,
    pub point: Option<(A::Point, Side)>,
    pub overgroup: Option<(Group<A>, Option<A::Point>)>,
}

fn same_outcome(a: &Report, b: &Report) -> bool {
    a.verdict == b.verdict && a.intersection == b.intersection
}

fn outcome(r: &Report) -> String {
    format!("{} with |H∩K| = {}", r.verdict, r.intersection.as_deref().unwrap_or("?"))
}

impl<A: Action> Setting<A> {
    pub fn new(id: impl Into<String>, g: Group<A>, h: Group<A>, k: Group<A>) -> Setting<A> {
        Setting { id: id.into(), g, h, k, point: None, overgroup: None }
    }

    pub fn with_point(mut self, p: A::Point, side: Side) -> Setting<A> {
        self.point = Some((p, side));
        self
    }

    pub fn with_overgroup(mut self, m: Group<A>, point: Option<A::Point>) -> Setting<A> {
        self.overgroup = Some((m, point));
        self
    }

    pub fn swapped(&self) -> Setting<A> {
        Setting {
            id: format!("{}/swapped", self.id),
            g: self.g.clone(),
            h: self.k.clone(),
            k: self.h.clone(),
            point: self.point.clone().map(|(p, s)| (p, if s == Side::H { Side::K } else { Side::H })),
            overgroup: None,
        }
    }

    /// `H^x`, `K^y` for seeded random `x, y` in `G`.
    pub fn conjugated(&self, seed: u64, budget: &Budget) -> Result<Setting<A>> {
        let (x, y) = conjugators(&self.g, seed);
        let act = self.g.action();
        let point = self.point.clone().map(|(p, s)| {
            let img = act.act(&p, if s == Side::H { &x } else { &y });
            (img, s)
        });
        Ok(Setting {
            id: format!("{}/conjugated", self.id),
            g: self.g.clone(),
            h: self.h.conjugate(&x, budget)?,
            k: self.k.conjugate(&y, budget)?,
            point,
            overgroup: None,
        })
    }

    fn default_strategy(&self) -> Strategy {
        choose_strategy(&self.g.order(), &self.h.order(), &self.k.order(), self.point.as_ref().map(|p| p.1))
    }

    /// `|M| |H ∩ K| = |H| |K ∩ M|` for the recorded overgroup.
    fn overgroup_identity(&self, hk: &BigUint) -> Result<Option<Property>> {
        let Some((m, m_point)) = &self.overgroup else { return Ok(None) };
        if !m.contains_group(&self.h) {
            return Ok(Some(Property::new(&self.id, "overgroup identity", false, format!("{} is not inside {}", self.h.label, m.label))));
        }
        let km = match (m_point, &self.point) {
            (Some(q), _) => self.k.stabilizer("K ∩ M", q)?.order(),
            (None, Some((p, Side::K))) => m.stabilizer("K ∩ M", p)?.order(),
            _ => return Ok(None),
        };
        let holds = m.order() * hk == self.h.order() * &km;
        let detail = format!("|M| = {}, |H| = {}, |K∩M| = {km}, |H∩K∩M| = {hk}", m.order(), self.h.order());
        Ok(Some(Property::new(&self.id, "overgroup identity", holds, detail)))
    }
}

impl<A: Action> Verifiable for Setting<A> {
    fn id(&self) -> &str {
        &self.id
    }

    fn run(&self, strategy: Option<Strategy>, budget: &Budget) -> Result<Report> {
        let strategy = strategy.unwrap_or_else(|| self.default_strategy());
        match strategy {
            Strategy::OrbitTransitivity => {
                let (p, side) = self
                    .point
                    .as_ref()
                    .ok_or_else(|| Error::StrategyPrecondition(format!("{}: no factor is realized as a point stabilizer", self.id)))?;
                orbit_transitivity(&self.id, &self.g, &self.h, &self.k, p, *side, budget)
            }
            Strategy::OrderOracle => order_oracle(&self.id, &self.g, &self.h, &self.k, budget),
            Strategy::Screen => Ok(screen(
                &self.id,
                (&self.g.label, &self.g.order()),
                (&self.h.label, &self.h.order()),
                (&self.k.label, &self.k.order()),
            )),
            Strategy::Chain => Err(Error::StrategyPrecondition(format!("{} has no chain recipe", self.id))),
        }
    }

    fn properties(&self, budget: &Budget) -> Result<Vec<Property>> {
        let base = self.run(None, budget)?;
        let mut out = Vec::new();
        let small = self.h.order().min(self.k.order()) <= BigUint::from(budget.elements);
        if let Some((p, side)) = &self.point {
            if small {
                let a = self.run(Some(Strategy::OrbitTransitivity), budget)?;
                let b = self.run(Some(Strategy::OrderOracle), budget)?;
                let detail = format!("orbit: {}; oracle: {}", outcome(&a), outcome(&b));
                out.push(Property::new(&self.id, "strategy agreement", same_outcome(&a, &b), detail));
            } else {
                // the stabilizer of the point in the moving factor is H ∩ K
                let mover = if *side == Side::K { &self.h } else { &self.k };
                let n = mover.stabilizer("H ∩ K", p)?.order().to_string();
                let holds = base.intersection.as_deref() == Some(n.as_str());
                let detail = format!("orbit: {}; stabilizer chain: {n}", outcome(&base));
                out.push(Property::new(&self.id, "strategy agreement", holds, detail));
            }
        }
        let sw = self.swapped().run(None, budget)?;
        out.push(Property::new(&self.id, "symmetry", same_outcome(&base, &sw), format!("(H,K): {}; (K,H): {}", outcome(&base), outcome(&sw))));
        let cj = self.conjugated(CONJUGATION_SEED, budget)?.run(None, budget)?;
        out.push(Property::new(
            &self.id,
            "conjugation invariance",
            same_outcome(&base, &cj),
            format!("original: {}; conjugated: {}", outcome(&base), outcome(&cj)),
        ));
        if base.verdict == Verdict::Verified {
            if let Some(hk) = base.intersection.as_ref().and_then(|s| s.parse::<BigUint>().ok()) {
                out.extend(self.overgroup_identity(&hk)?);
            }
        }
        Ok(out)
    }
}

/// A factorization proved through overgroup links, with an optional direct
/// setting for the same `(G, H, K)` to compare against.
pub struct ChainInstance {
    pub id: String,
    pub g: (String, BigUint),
    pub h: (String, BigUint),
    pub k: (String, BigUint),
    pub links: Vec<Box<dyn Verifiable>>,
    pub direct: Option<Box<dyn Verifiable>>,
}

impl Verifiable for ChainInstance {
    fn id(&self) -> &str {
        &self.id
    }

    fn run(&self, strategy: Option<Strategy>, budget: &Budget) -> Result<Report> {
        match (strategy, &self.direct) {
            (None | Some(Strategy::Chain), _) => {
                let links = self.links.iter().map(|l| l.run(None, budget)).collect::<Result<Vec<_>>>()?;
                Ok(check_chain(&self.id, (&self.g.0, &self.g.1), (&self.h.0, &self.h.1), (&self.k.0, &self.k.1), links))
            }
            (Some(s), Some(d)) => d.run(Some(s), budget),
            (Some(s), None) => Err(Error::StrategyPrecondition(format!("{} only runs as a chain, not {s:?}", self.id))),
        }
    }

    fn properties(&self, budget: &Budget) -> Result<Vec<Property>> {
        let mut out = Vec::new();
        for l in &self.links {
            out.extend(l.properties(budget)?);
        }
        if let Some(d) = &self.direct {
            let a = self.run(None, budget)?;
            let b = d.run(None, budget)?;
            let detail = format!("chain: {}; direct: {}", outcome(&a), outcome(&b));
            out.push(Property::new(&self.id, "strategy agreement", same_outcome(&a, &b), detail));
            out.extend(d.properties(budget)?);
        }
        Ok(out)
    }
}

pub type Params = crate::arith::expr::Bindings;

fn two_power(f: u64) -> Result<u32> {
    if f == 0 || f > 16 {
        return Err(Error::InvalidArgument(format!("f = {f} out of range")));
    }
    Ok(1 << f)
}

fn mat(g: &crate::atlas::MatrixGroup, budget: &Budget) -> Result<Group<MatAction>> {
    Group::from_matrix(g, budget)
}

fn perm(g: &PermGroup, budget: &Budget) -> Result<Group<PermAction>> {
    Group::from_perm(g, budget)
}

fn boxed<A: Action + 'static>(s: Setting<A>) -> Box<dyn Verifiable>
where
    A::Point: 'static,
    A::Elem: 'static,
{
    Box::new(s)
}

fn labelled(mut g: crate::atlas::MatrixGroup, label: String) -> crate::atlas::MatrixGroup {
    g.label = label;
    g
}

/// `Sp_{4l}(q) = ((Sp_{2a}(q^b) x Sp_{2a}(q^b)).R.2) GO^-_{4l}(q)` with
/// `ab = l`. For `b > 1` the proof runs through `M = Sp_{4a}(q^b).b`.
/// Decorations: `R` in `{1, b^2}`, `Q` in `{1, 2}` (`K = Omega` or `GO`).
pub fn symplectic_wreath_minus(f: u64, l: u64, a: u64, b: u64, rr: u64, qq: u64, budget: &Budget) -> Result<Box<dyn Verifiable>> {
    if a * b != l || a == 0 {
        return Err(Error::ConstraintViolation(format!("ab = l fails for a={a}, b={b}, l={l}")));
    }
    if rr != 1 && rr != b * b {
        return Err(Error::Unsupported(format!("R of order {rr}; witnesses are 1 and b x b")));
    }
    let q = two_power(f)?;
    let (l, a, b) = (l as usize, a as usize, b as u32);
    let id = format!("T1.1[f={f},l={l},a={a},b={b},R={rr},Q={qq}]");
    let g = mat(&sp_group(2 * l, q)?, budget)?;
    let go = go_minus_in_sp(l, q)?;
    let form = g.action().form_point(go.space.quadratic.as_ref().unwrap())?;
    let k = match qq {
        2 => mat(&go, budget)?,
        1 => mat(&crate::atlas::classical::omega_of(&go, format!("Omega_{}^-({q})", 4 * l))?, budget)?,
        _ => return Err(Error::Unsupported(format!("Q of order {qq}"))),
    };
    let k_point = (qq == 2).then_some(form);
    let big_q = q.checked_pow(b).ok_or_else(|| Error::InvalidArgument("field too large".into()))?;
    let inner = sp_group(a, big_q)?;
    let wr = wreath_pair(&inner)?;
    if b == 1 {
        let h = mat(&wr, budget)?;
        let mut s = Setting::new(id, g, h, k);
        if let Some(p) = k_point {
            s = s.with_point(p, Side::K);
        }
        return Ok(boxed(s));
    }
    let small = Field::with_order(q)?;
    let res = Restricted::new(&wr.space, &small)?;
    let m_big = sp_group(2 * a, big_q)?;
    let m = mat(&labelled(res.group(&m_big, vec![res.frobenius()], b), format!("Sp_{}({big_q}).{b}", 4 * a)), budget)?;
    let extra = if rr == 1 { Vec::new() } else { vec![res.frobenius_on(0..2 * a)] };
    let h_label = format!("(Sp_{}({big_q}) x Sp_{}({big_q})).{}.2", 2 * a, 2 * a, if rr == 1 { "1".into() } else { format!("{b}x{b}") });
    let h = mat(&labelled(res.group(&wr, extra, rr as u32), h_label), budget)?;
    let Some(p) = k_point else {
        return Ok(boxed(Setting::new(id, g, h, k)));
    };
    if rr != 1 {
        // the extra field automorphism on one block leaves M
        return Ok(boxed(Setting::new(id, g, h, k).with_point(p, Side::K)));
    }
    let km = m.stabilizer(format!("{} ∩ M", k.label), &p)?;
    let link1 = Setting::new(format!("{id}/G=MK"), g.clone(), m.clone(), k.clone()).with_point(p, Side::K);
    let link2 = Setting::new(format!("{id}/M=H(K∩M)"), m.clone(), h.clone(), km).with_point(p, Side::K);
    let direct = Setting::new(format!("{id}/direct"), g.clone(), h.clone(), k.clone())
        .with_point(p, Side::K)
        .with_overgroup(m, None);
    Ok(Box::new(ChainInstance {
        id,
        g: (g.label.clone(), g.order()),
        h: (h.label.clone(), h.order()),
        k: (k.label.clone(), k.order()),
        links: vec![boxed(link1), boxed(link2)],
        direct: Some(boxed(direct)),
    }))
}

/// `Sp_4(q) = ((Sp_2(q) x Sp_2(q)).P) Sz(q)`, `q = 2^f`, `f` odd; `P` in `{1, 2}`.
pub fn symplectic_suzuki(f: u64, pp: u64, budget: &Budget) -> Result<Box<dyn Verifiable>> {
    let q = two_power(f)?;
    let g = mat(&sp_group(2, q)?, budget)?;
    let inner = sp_group(1, q)?;
    let h = match pp {
        2 => wreath_pair(&inner)?,
        1 => direct_sum(format!("Sp_2({q}) x Sp_2({q})"), &[&inner, &inner])?,
        _ => return Err(Error::Unsupported(format!("P of order {pp}"))),
    };
    let h = mat(&h, budget)?;
    let k = mat(&sz_group(f as u32)?, budget)?;
    Ok(boxed(Setting::new(format!("T1.6[f={f},P={pp}]"), g, h, k)))
}

/// `Sp_6(q) = (U x Sp_4(q)) G_2(q)`, `U` in `{1, Sp_2(q)}` given by its order.
pub fn symplectic_g2(f: u64, u: u64, budget: &Budget) -> Result<Box<dyn Verifiable>> {
    let q = two_power(f)?;
    let g = mat(&sp_group(3, q)?, budget)?;
    let k = mat(&g2_subgroup(f as u32)?, budget)?;
    let sp2 = (q as u64) * ((q as u64) * (q as u64) - 1);
    let id = format!("T1.7[f={f},U={u}]");
    if u == sp2 {
        let h = mat(&n_k_symplectic(3, 1, q)?, budget)?;
        let pair = g.action().subspace_point(&[unit_vector(6, 4), unit_vector(6, 5)])?;
        return Ok(boxed(Setting::new(id, g, h, k).with_point(pair, Side::H)));
    }
    if u != 1 {
        return Err(Error::Unsupported(format!("U of order {u}; witnesses are 1 and {sp2}")));
    }
    let top = sp_group(2, q)?;
    let trivial = crate::atlas::MatrixGroup::new("1", &crate::forms::FormedSpace::symplectic(&top.field, 1), Vec::new())
        .predict(BigUint::from(1u32));
    let h = mat(&direct_sum(format!("Sp_4({q})"), &[&top, &trivial])?, budget)?;
    Ok(boxed(Setting::new(id, g, h, k)))
}

/// The stabilizer of the last standard pair inside `G_2(q)`, compared with
/// the subgroup `<s, (rs)^3, T, A, F>`.
pub fn g2_pair_stabilizer(f: u64, budget: &Budget) -> Result<Property> {
    let q = two_power(f)?;
    let k = mat(&g2_subgroup(f as u32)?, budget)?;
    let pair = k.action().subspace_point(&[unit_vector(6, 4), unit_vector(6, 5)])?;
    let stab = k.stabilizer("G_2 ∩ N_2", &pair)?;
    let m = mat(&g2_example_m(f as u32)?, budget)?;
    let inside = stab.contains_group(&m);
    let holds = inside && stab.order() == m.order();
    let detail = format!("|stabilizer| = {}, |M| = {}, M inside: {inside}", stab.order(), m.order());
    Ok(Property::new(&format!("G2({q})"), "pair stabilizer equals M", holds, detail))
}

/// Which elements decorate `Omega_4^+(4)` before restriction to `GF(2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decor {
    None,
    Frobenius,
    Reflection,
    Both,
}

impl Decor {
    fn tag(self) -> &'static str {
        match self {
            Decor::None => "1",
            Decor::Frobenius => "<phi>",
            Decor::Reflection => "<r>",
            Decor::Both => "<phi,r>",
        }
    }
}

/// `SL_2(4) x SL_2(4) = Omega_4^+(4)` on `GF(4)^4` seen over `GF(2)` with
/// the norm form, decorated by Frobenius and/or a reflection.
fn restricted_omega4_4(decor: Decor) -> Result<(Restricted, crate::atlas::MatrixGroup)> {
    let k2 = Field::with_order(2)?;
    let (o4, omega4) = o_group(2, 4, FormType::Plus)?;
    let res = Restricted::new(&o4.space, &k2)?;
    let mut extra = Vec::new();
    if matches!(decor, Decor::Frobenius | Decor::Both) {
        extra.push(res.frobenius());
    }
    if matches!(decor, Decor::Reflection | Decor::Both) {
        extra.push(res.matrix(&first_reflection(&o4).ok_or(Error::DataIntegrity("no reflection".into()))?));
    }
    let factor = 1u32 << extra.len();
    let h = labelled(res.group(&omega4, extra, factor), format!("(SL_2(4) x SL_2(4)).{}", decor.tag()));
    Ok((res, h))
}

/// `Omega_8^+(2) = (Omega_4^+(4).P) Sp_6(2)` with `K` the stabilizer of a
/// nonsingular vector.
pub fn omega8_2_restricted(decor: Decor, budget: &Budget) -> Result<Box<dyn Verifiable>> {
    let (res, h) = restricted_omega4_4(decor)?;
    let (_, omega8) = o_group(4, 2, FormType::Plus)?;
    let g = mat(&omega8, budget)?;
    let h = mat(&h, budget)?;
    let w = Field::with_order(4)?.primitive_element();
    let v = res.vector(&[Gf::ONE, w, Gf::ZERO, Gf::ZERO]);
    let p = g.action().vector_point(&v)?;
    let k = g.stabilizer("Sp_6(2)", &p)?;
    Ok(boxed(Setting::new(format!("O8+(2)[P={}]", decor.tag()), g, h, k).with_point(p, Side::K)))
}

/// `Sp_8(2) = (Omega_4^+(4).P) Omega_8^-(2).Q`, the plus form of the
/// restriction polarizing to the standard symplectic form.
pub fn sp8_2_restricted(decor: Decor, qq: u64, budget: &Budget) -> Result<Box<dyn Verifiable>> {
    let (_, h) = restricted_omega4_4(decor)?;
    let g = mat(&sp_group(4, 2)?, budget)?;
    let h = mat(&h, budget)?;
    let go = go_minus_in_sp(2, 2)?;
    let id = format!("Sp8(2)[P={},Q={qq}]", decor.tag());
    match qq {
        2 => {
            let form = g.action().form_point(go.space.quadratic.as_ref().unwrap())?;
            let k = mat(&go, budget)?;
            Ok(boxed(Setting::new(id, g, h, k).with_point(form, Side::K)))
        }
        1 => {
            let k = mat(&crate::atlas::classical::omega_of(&go, "Omega_8^-(2)".into())?, budget)?;
            Ok(boxed(Setting::new(id, g, h, k)))
        }
        _ => Err(Error::Unsupported(format!("Q of order {qq}"))),
    }
}

/// `Sp_12(2) = (G_2(2) wr S_2) GO_12^-(2)`.
pub fn symplectic_g2_wreath(f: u64, budget: &Budget) -> Result<Box<dyn Verifiable>> {
    let q = two_power(f)?;
    let g = mat(&sp_group(6, q)?, budget)?;
    let h = mat(&wreath_pair(&g2_subgroup(f as u32)?)?, budget)?;
    let go = go_minus_in_sp(3, q)?;
    let form = g.action().form_point(go.space.quadratic.as_ref().unwrap())?;
    let k = mat(&go, budget)?;
    Ok(boxed(Setting::new(format!("T1.2[f={f},l=1]"), g, h, k).with_point(form, Side::K)))
}

/// `GF(16)^2 ⊗ GF(16)^2` seen as a 16-dimensional space over `GF(2)`, in
/// coordinates where `Omega_8^+(4)` (over the intermediate `GF(4)`) is
/// standard.
struct TwoStepRestriction {
    tensor: TensorSpace,
    to4: Restricted,
    to2: Restricted,
    basis_inv: Matrix,
}

impl TwoStepRestriction {
    fn new() -> Result<TwoStepRestriction> {
        let tensor = TensorSpace::new(1, 16)?;
        let to4 = Restricted::new(&tensor.space, &Field::with_order(4)?)?;
        let to2 = Restricted::new(&to4.space, &Field::with_order(2)?)?;
        let mut s = TwoStepRestriction { tensor, to4, to2, basis_inv: Matrix::identity(1) };
        let rows: Vec<Vec<Gf>> = s.big_basis().iter().map(|x| s.coords(x)).collect();
        s.basis_inv = Matrix::from_rows(&rows)?.inv(&s.to2.space.field)?;
        Ok(s)
    }

    fn big_basis(&self) -> Vec<Vec<Gf>> {
        let k = &self.tensor.field;
        let z = k.primitive_element();
        let mut out = Vec::new();
        for j in 0..4 {
            let mut scalar = Gf::ONE;
            for _ in 0..4 {
                let mut x = vec![Gf::ZERO; 4];
                x[j] = scalar;
                out.push(x);
                scalar = k.mul(scalar, z);
            }
        }
        out
    }

    fn coords(&self, x: &[Gf]) -> Vec<Gf> {
        self.to2.vector(&self.to4.vector(x))
    }

    /// The matrix of an additive map of `GF(16)^4` in the `GF(2)` coordinates.
    fn lift(&self, f: impl Fn(&[Gf]) -> Vec<Gf>) -> Result<Matrix> {
        let rows: Vec<Vec<Gf>> = self.big_basis().iter().map(|x| self.coords(&f(x))).collect();
        self.basis_inv.mul(&self.to2.space.field, &Matrix::from_rows(&rows)?)
    }

    fn linear(&self, g: &Matrix) -> Result<Matrix> {
        self.lift(|x| g.vec_mul(&self.tensor.field, x))
    }

    /// `x -> x^2` on the `GF(16)` coordinates: semilinear over `GF(4)`.
    fn sigma(&self) -> Result<Matrix> {
        let k = &self.tensor.field;
        self.lift(|x| x.iter().map(|&a| k.mul(a, a)).collect())
    }
}

/// `Omega_8^+(4).2 = ((Sp_2(4^c) x Sp_2(16)).P) N_1` with the outer
/// automorphism `x -> x^2` of the tensor square over `GF(16)`. `P` counts the
/// part of `H` inside `Omega_8^+(4)`: `P = 2` adds `x -> x^2` (whose square lies
/// in `Omega_8^+(4)`), `P = 4` also the swap of the tensor factors.
pub fn omega8_4_tensor(c: u64, pp: u64, budget: &Budget) -> Result<Box<dyn Verifiable>> {
    let two = TwoStepRestriction::new()?;
    let k16 = &two.tensor.field;
    let v_gens = sp_group(1, 16)?.gens;
    let w_gens: Vec<Matrix> = match c {
        2 => v_gens.clone(),
        1 => {
            let w = k16.pow(k16.primitive_element(), 5)?;
            [Gf::ONE, w]
                .iter()
                .flat_map(|&l| {
                    let mut up = Matrix::identity(2);
                    up.set(0, 1, l);
                    let mut down = Matrix::identity(2);
                    down.set(1, 0, l);
                    [up, down]
                })
                .collect()
        }
        _ => return Err(Error::ConstraintViolation(format!("c = {c}"))),
    };
    let mut gens = Vec::new();
    for g in &w_gens {
        gens.push(two.linear(&two.tensor.lift_w(g))?);
    }
    for g in &v_gens {
        gens.push(two.linear(&two.tensor.lift_v(g))?);
    }
    let sigma = two.sigma()?;
    match pp {
        2 => gens.push(sigma.clone()),
        4 if c == 2 => {
            gens.push(sigma.clone());
            let mut swap = Matrix::zero(4, 4);
            for (i, j) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
                swap.set(i, j, Gf::ONE);
            }
            gens.push(two.linear(&swap)?);
        }
        _ => return Err(Error::Unsupported(format!("P = {pp} with c = {c}"))),
    }
    let sl = BigUint::from(if c == 2 { 4080u32 } else { 60 }) * BigUint::from(4080u32);
    let label = format!("(Sp_2({}) x Sp_2(16)).{pp}", 4u32.pow(c as u32));
    let mut h = crate::atlas::MatrixGroup::new(label, &two.to2.space, gens);
    h.predicted = Some(sl * BigUint::from(2 * pp));
    let h = mat(&h, budget)?;
    let (g, k, p) = omega8_4_ambient(&two, sigma, budget)?;
    Ok(boxed(Setting::new(format!("T5.3[l=1,c={c},P={pp}]"), g, h, k).with_point(p, Side::K)))
}

type Ambient = (Group<MatAction>, Group<MatAction>, MatPoint);

/// `G = Omega_8^+(4).<sigma>` with `K` the stabilizer of a nonsingular
/// `GF(4)`-line, shared between calls with the same point budget.
fn omega8_4_ambient(two: &TwoStepRestriction, sigma: Matrix, budget: &Budget) -> Result<Ambient> {
    static CACHE: Mutex<Option<(usize, Ambient)>> = Mutex::new(None);
    if let Some((points, amb)) = CACHE.lock().unwrap().as_ref() {
        if *points == budget.points {
            return Ok(amb.clone());
        }
    }
    let (_, omega) = o_group(4, 4, FormType::Plus)?;
    let g = mat(&labelled(two.to2.group(&omega, vec![sigma], 2), "Omega_8^+(4).2".into()), budget)?;
    let k16 = &two.tensor.field;
    let z = k16.primitive_element();
    let w = k16.pow(z, 5)?;
    let x = [Gf::ONE, Gf::ZERO, Gf::ZERO, z];
    let wx: Vec<Gf> = x.iter().map(|&a| k16.mul(a, w)).collect();
    let p = g.action().subspace_point(&[two.coords(&x), two.coords(&wx)])?;
    let k = g.stabilizer("N_1", &p)?;
    let amb = (g, k, p);
    *CACHE.lock().unwrap() = Some((budget.points, amb.clone()));
    Ok(amb)
}

/// The tensor decomposition `W ⊗ V` of an `Omega^+_{4m}(q)` space:
/// `G = Omega(Q)`, `H = U x Sp_{2m}(q)`, `K` the stabilizer of
/// `w_1 ⊗ u_1 + w_2 ⊗ v_1`.
pub struct TensorCase {
    pub setting: Setting<MatAction>,
    pub space: TensorSpace,
    pub vector: Vec<Gf>,
}

pub fn tensor_case(m: usize, q: u32, u_full: bool, budget: &Budget) -> Result<TensorCase> {
    let t = TensorSpace::new(m, q)?;
    let (_, omega) = t.orthogonal()?;
    let g = mat(&omega, budget)?;
    let h = if u_full {
        t.sp_product()?
    } else {
        let b = sp_group(m, q)?;
        t.group(format!("Sp_{}({q})", 2 * m), &[], &b.gens, b.predicted.clone())
    };
    let h = mat(&h, budget)?;
    let k_ = &t.field;
    let w1 = unit_vector(2, 0);
    let w2 = unit_vector(2, 1);
    let v: Vec<Gf> = t
        .tensor(&w1, &unit_vector(2 * m, 0))
        .iter()
        .zip(t.tensor(&w2, &unit_vector(2 * m, 1)))
        .map(|(&a, b)| k_.add(a, b))
        .collect();
    let p = g.action().vector_point(&v)?;
    let k = g.stabilizer(format!("N_1 = Omega_{}({q})", 4 * m - 1), &p)?;
    let u = if u_full { "Sp_2" } else { "1" };
    let setting = Setting::new(format!("T5.1[l={m},q={q},U={u}]"), g, h, k).with_point(p, Side::K);
    Ok(TensorCase { setting, space: t, vector: v })
}

/// `M = 1 ⊗ Sp_{2m}(q)`, `B = K`, and the predicted `M ∩ B`: the elements of
/// `Sp_{2m}(q)` fixing `u_1` and `v_1`.
pub fn tensor_intersection_prediction(case: &TensorCase, budget: &Budget) -> Result<Report> {
    let t = &case.space;
    let q = t.field.order();
    let m = t.m;
    let sp = sp_group(m, q)?;
    let mm = mat(&t.group(format!("1 x Sp_{}({q})", 2 * m), &[], &sp.gens, sp.predicted.clone()), budget)?;
    let fix = sp_group(m - 1, q)?;
    let id2 = Matrix::identity(2);
    let lifted: Vec<Matrix> = fix.gens.iter().map(|g| Matrix::block_diag(&[&id2, g])).collect();
    let predicted = t.group(format!("Sp_{}({q}) fixing u_1, v_1", 2 * m - 2), &[], &lifted, fix.predicted.clone());
    let predicted = mat(&predicted, budget)?;
    super::intersection_prediction(&format!("{}/M∩B", case.setting.id), &mm, &case.setting.k, &predicted, budget)
}

fn perm_setting(id: String, g: &PermGroup, h: &PermGroup, k: &PermGroup, budget: &Budget) -> Result<Setting<PermAction>> {
    Ok(Setting::new(id, perm(g, budget)?, perm(h, budget)?, perm(k, budget)?))
}

/// `A_n = H A_{n-1}` with `H` the cyclic group of an `n`-cycle (odd `n`)
/// or `H = A_n`.
pub fn alternating_point(n: usize, full: bool, budget: &Budget) -> Result<Box<dyn Verifiable>> {
    if n < 5 {
        return Err(Error::ConstraintViolation(format!("n = {n} too small")));
    }
    let h = if full {
        alternating(n)
    } else if n % 2 == 1 {
        PermGroup::new(format!("C_{n}"), n, vec![Perm::from_cycles(n, &[&(0..n).collect::<Vec<_>>()])], Some(BigUint::from(n)))
    } else {
        return Err(Error::Unsupported(format!("no transitive subgroup of order {n} in A_{n}")));
    };
    let k = alternating(n - 1).shifted(0, n);
    let id = format!("A.1[n={n},H={}]", if full { "A_n" } else { "C_n" });
    let s = perm_setting(id, &alternating(n), &h, &k, budget)?.with_point(PermPoint::Int((n - 1) as u16), Side::K);
    Ok(boxed(s))
}

/// `A_10 = ((S_5 wr S_2) ∩ A_10) K` with `K = PSL_2(8)` or `PΓL_2(8)` by order.
pub fn alternating_10(k_order: u64, budget: &Budget) -> Result<Box<dyn Verifiable>> {
    let full = pgaml2_8();
    let k = match k_order {
        1512 => full,
        504 => PermGroup::new("PSL_2(8)", 10, full.gens[..3].to_vec(), Some(BigUint::from(504u32))),
        _ => return Err(Error::Unsupported(format!("K of order {k_order}"))),
    };
    let h = even_part(&wreath_s2(&symmetric(5)))?;
    let blocks = PermAction::partition_point(&[&[0, 1, 2, 3, 4], &[5, 6, 7, 8, 9]]);
    let s = perm_setting(format!("A.2[K={k_order}]"), &alternating(10), &h, &k, budget)?.with_point(blocks, Side::H);
    Ok(boxed(s))
}

/// `A_n = H M_n` for `n` in `{12, 24}` with `H = A_{n-5} x A_5` (`full = false`)
/// or `(S_{n-5} x S_5) ∩ A_n`. The oriented 5-set `{n-4..n}` has stabilizer
/// `A_{n-5} x A_5` and the plain 5-set has stabilizer `(S_{n-5} x S_5) ∩ A_n`.
pub fn alternating_mathieu(n: usize, full: bool, budget: &Budget) -> Result<Box<dyn Verifiable>> {
    let k = match n {
        12 => mathieu12(),
        24 => mathieu24(),
        _ => return Err(Error::Unsupported(format!("no Mathieu group of degree {n}"))),
    };
    let row = if n == 12 { "A.3" } else { "A.4" };
    let small = direct_product(&[&alternating(n - 5), &alternating(5)]);
    let big = even_young(n - 5, 5);
    let five: Vec<usize> = (n - 5..n).collect();
    let set = PermAction::set_point(&five);
    let oriented = PermAction::oriented_point(&five);
    let g = perm(&alternating(n), budget)?;
    let kk = perm(&k, budget)?;
    let m = perm(&big, budget)?;
    if full {
        let s = Setting::new(format!("{row}[H=max]"), g, m, kk).with_point(set, Side::H);
        return Ok(boxed(s));
    }
    let h = perm(&small, budget)?;
    let id = format!("{row}[H=min]");
    let direct = Setting::new(format!("{id}/direct"), g.clone(), h.clone(), kk.clone())
        .with_point(oriented, Side::H)
        .with_overgroup(m.clone(), Some(set.clone()));
    let km = kk.stabilizer(format!("{} ∩ M", kk.label), &set)?;
    let link1 = Setting::new(format!("{id}/G=MK"), g.clone(), m.clone(), kk.clone()).with_point(set, Side::H);
    let link2 = Setting::new(format!("{id}/M=H(K∩M)"), m, h.clone(), km);
    Ok(Box::new(ChainInstance {
        id,
        g: (g.label.clone(), g.order()),
        h: (h.label.clone(), h.order()),
        k: (kk.label.clone(), kk.order()),
        links: vec![boxed(link1), boxed(link2)],
        direct: Some(boxed(direct)),
    }))
}

fn p(env: &Params, name: &str) -> u64 {
    env.get(name).copied().unwrap_or(0)
}

/// Why the registry cannot verify this resolved tuple, or `None` if it can.
pub fn unsupported(table: Table, row: &str, env: &Params) -> Option<String> {
    let why = |s: &str| Some(s.to_string());
    match (table, row) {
        (Table::T1, "1") | (Table::T2, "1") => None,
        (Table::T1, "2") if p(env, "f") == 1 && p(env, "l") == 1 => match p(env, "Q") {
            1 => why("Q = 1 has no point-stabilizer model and both factors exceed the oracle budget"),
            _ => None,
        },
        (Table::T1, "2") => why("witness built only for Sp_12(2)"),
        (Table::T1, "5") if p(env, "l") == 1 => match p(env, "P") {
            1 | 2 | 4 => None,
            _ => why("no element of order 8 is constructed for P"),
        },
        (Table::T1, "5") => why("witness built only for l = 1"),
        (Table::T1, "6") | (Table::T2, "3") if p(env, "f") == 3 => None,
        (Table::T1, "6") | (Table::T2, "3") => why("oracle over Sz(2^f) beyond f = 3 exceeds the element budget"),
        (Table::T1, "7") | (Table::T2, "4") if p(env, "f") == 2 => None,
        (Table::T1, "7") | (Table::T2, "4") => why("the orbit of nondegenerate 2-spaces exceeds the point budget beyond f = 2"),
        (Table::T2, "7") | (Table::T2, "8") => None,
        (Table::T5, "1") if p(env, "l") == 2 && p(env, "q") == 4 => None,
        (Table::T5, "1") => why("witness built only for l = 2, q = 4"),
        (Table::T5, "2") if p(env, "l") == 1 => None,
        (Table::T5, "2") => why("witness built only for l = 1"),
        (Table::T5, "3") if p(env, "l") == 1 => match (p(env, "c"), p(env, "P")) {
            (_, 1) => why("H inside Omega_8^+(4) alone is intransitive on nonsingular points"),
            (1, 4) => why("for c = 1 the only constructed witness is P = 2"),
            _ => None,
        },
        (Table::T5, "3") => why("witness built only for l = 1"),
        (Table::A, "a.1") => {
            let n = p(env, "n");
            (p(env, "T") == 1 && n.is_multiple_of(2)).then(|| format!("no transitive subgroup of order {n} in A_{n}"))
        }
        (Table::A, "a.2") if p(env, "T") == 1 => why("A_10 has no transitive (A_5 x A_5).2"),
        (Table::A, _) => None,
        _ => why("no constructed witness"),
    }
}

fn build_inner(table: Table, row: &str, env: &Params, budget: &Budget) -> Result<Box<dyn Verifiable>> {
    let decor = |name: &str| match p(env, name) {
        1 => Decor::None,
        2 => Decor::Frobenius,
        _ => Decor::Both,
    };
    Ok(match (table, row) {
        (Table::T1, "1") => symplectic_wreath_minus(p(env, "f"), p(env, "l"), p(env, "a"), p(env, "b"), p(env, "R"), p(env, "Q"), budget)?,
        (Table::T2, "1") => symplectic_wreath_minus(p(env, "f"), p(env, "l"), p(env, "l"), 1, 1, 2, budget)?,
        (Table::T1, "2") => symplectic_g2_wreath(p(env, "f"), budget)?,
        (Table::T1, "5") => sp8_2_restricted(decor("P"), p(env, "Q"), budget)?,
        (Table::T1, "6") => symplectic_suzuki(p(env, "f"), p(env, "P"), budget)?,
        (Table::T2, "3") => symplectic_suzuki(p(env, "f"), 2, budget)?,
        (Table::T1, "7") | (Table::T2, "4") => {
            let q = 1u64 << p(env, "f");
            symplectic_g2(p(env, "f"), q * (q * q - 1), budget)?
        }
        (Table::T2, "7") => omega8_2_restricted(Decor::Both, budget)?,
        (Table::T2, "8") => omega8_4_tensor(2, 4, budget)?,
        (Table::T5, "1") => boxed(tensor_case(p(env, "l") as usize, p(env, "q") as u32, true, budget)?.setting),
        (Table::T5, "2") => omega8_2_restricted(decor("P"), budget)?,
        (Table::T5, "3") => omega8_4_tensor(p(env, "c"), p(env, "P"), budget)?,
        (Table::A, "a.1") => alternating_point(p(env, "n") as usize, p(env, "T") != 1, budget)?,
        (Table::A, "a.2") => alternating_10(if p(env, "K") == 3 { 1512 } else { 504 }, budget)?,
        (Table::A, "a.3") => alternating_mathieu(12, p(env, "T") == 2, budget)?,
        (Table::A, "a.4") => alternating_mathieu(24, p(env, "T") == 2, budget)?,
        _ => return Err(Error::Unsupported(format!("no constructor for {table}.{row}"))),
    })
}

/// The constructed instance for a resolved catalog tuple (parameters and
/// decoration values), if the registry has one.
pub fn build(table: Table, row: &str, env: &Params, budget: &Budget) -> Option<Result<Box<dyn Verifiable>>> {
    if unsupported(table, row, env).is_some() {
        return None;
    }
    Some(build_inner(table, row, env, budget))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_wreath_factorization_and_properties() {
        let b = Budget::default();
        let s = symplectic_wreath_minus(2, 1, 1, 1, 1, 2, &b).unwrap();
        let r = s.run(None, &b).unwrap();
        assert_eq!(r.verdict, Verdict::Verified);
        assert_eq!(r.intersection.as_deref(), Some("60"));
        assert_eq!(r.orbit.as_ref().unwrap().length, 120);
        for p in s.properties(&b).unwrap() {
            assert!(p.holds, "{p:?}");
        }
    }

    #[test]
    fn alternating_point_stabilizer() {
        let b = Budget::default();
        for n in [7, 10] {
            let r = alternating_point(n, n % 2 == 0, &b).unwrap().run(None, &b).unwrap();
            assert_eq!(r.verdict, Verdict::Verified);
        }
    }

    #[test]
    fn g2_over_gf2() {
        let b = Budget::default();
        let s = symplectic_g2(1, 6, &b).unwrap();
        let r = s.run(None, &b).unwrap();
        assert_eq!(r.verdict, Verdict::Verified);
        assert_eq!(r.orbit.as_ref().unwrap().length, 336);
        assert_eq!(r.intersection.as_deref(), Some("36"));
    }
}
