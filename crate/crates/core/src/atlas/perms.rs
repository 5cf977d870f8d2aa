//! Permutation groups: alternating and symmetric groups, their Young-type
//! subgroups, and the sporadic and projective examples loaded from data files.

use num_bigint::BigUint;
use num_traits::One;

use super::perm_chain;
use crate::action::PermAction;
use crate::bsgs::{index2_kernel, BsgsChain, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::perm::Perm;

const M12_DATA: &str = include_str!("../../data/m12.txt");
const M24_DATA: &str = include_str!("../../data/m24.txt");
const PGAML_DATA: &str = include_str!("../../data/pgaml2_8.txt");

#[derive(Clone, Debug)]
pub struct PermGroup {
    pub label: String,
    pub degree: usize,
    pub gens: Vec<Perm>,
    pub predicted: Option<BigUint>,
}

impl PermGroup {
    pub fn new(label: impl Into<String>, degree: usize, gens: Vec<Perm>, predicted: Option<BigUint>) -> PermGroup {
        PermGroup { label: label.into(), degree, gens, predicted }
    }

    /// Parse the `name` / `degree` / `order` / `gen` line format.
    pub fn parse(text: &str) -> Result<PermGroup> {
        let (mut name, mut degree, mut order, mut gens) = (None, None, None, Vec::new());
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (key, val) = line.split_once(char::is_whitespace).ok_or_else(|| Error::Parse(format!("bad line {line:?}")))?;
            let val = val.trim();
            match key {
                "name" => name = Some(val.to_string()),
                "degree" => degree = Some(val.parse::<usize>().map_err(|_| Error::Parse(format!("bad degree {val:?}")))?),
                "order" => order = Some(val.parse::<BigUint>().map_err(|_| Error::Parse(format!("bad order {val:?}")))?),
                "gen" => gens.push(val.to_string()),
                _ => return Err(Error::Parse(format!("unknown key {key:?}"))),
            }
        }
        let degree = degree.ok_or_else(|| Error::Parse("missing degree".into()))?;
        let gens = gens.iter().map(|g| Perm::parse_cycles(degree, g)).collect::<Result<Vec<_>>>()?;
        Ok(PermGroup { label: name.ok_or_else(|| Error::Parse("missing name".into()))?, degree, gens, predicted: order })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("name {}\ndegree {}\n", self.label, self.degree);
        if let Some(n) = &self.predicted {
            out += &format!("order {n}\n");
        }
        for g in &self.gens {
            out += &format!("gen {g}\n");
        }
        out
    }

    pub fn action(&self) -> PermAction {
        PermAction::new(self.degree)
    }

    /// Chain with the recorded order verified.
    pub fn chain(&self) -> Result<BsgsChain<PermAction>> {
        perm_chain(self.degree, &self.gens, self.predicted.as_ref(), &self.label)
    }

    /// The same group on `offset + degree .. n` points, fixing the others.
    pub fn shifted(&self, offset: usize, n: usize) -> PermGroup {
        PermGroup {
            label: self.label.clone(),
            degree: n,
            gens: self.gens.iter().map(|g| g.shifted(offset, n)).collect(),
            predicted: self.predicted.clone(),
        }
    }

    pub fn with_extra(&self, label: impl Into<String>, extra: Vec<Perm>, predicted: Option<BigUint>) -> PermGroup {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        PermGroup { label: label.into(), degree: self.degree, gens, predicted }
    }
}

/// Direct product acting on consecutive blocks of points.
pub fn direct_product(parts: &[&PermGroup]) -> PermGroup {
    let n = parts.iter().map(|p| p.degree).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    let mut order = Some(BigUint::one());
    for p in parts {
        gens.extend(p.shifted(offset, n).gens);
        offset += p.degree;
        order = order.zip(p.predicted.clone()).map(|(a, b)| a * b);
    }
    let label = parts.iter().map(|p| p.label.as_str()).collect::<Vec<_>>().join(" x ");
    PermGroup { label, degree: n, gens, predicted: order }
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

fn cycle(points: impl Iterator<Item = usize>, n: usize) -> Perm {
    let pts: Vec<usize> = points.collect();
    Perm::from_cycles(n, &[&pts])
}

pub fn symmetric(n: usize) -> PermGroup {
    let gens = if n < 2 { Vec::new() } else { vec![cycle(0..2, n), cycle(0..n, n)] };
    PermGroup::new(format!("S_{n}"), n, gens, Some(factorial(n)))
}

pub fn alternating(n: usize) -> PermGroup {
    let gens = match n {
        0..=2 => Vec::new(),
        _ if n % 2 == 1 => vec![cycle(0..3, n), cycle(0..n, n)],
        _ => vec![cycle(0..3, n), cycle(1..n, n)],
    };
    let order = if n < 2 { BigUint::one() } else { factorial(n) / 2u32 };
    PermGroup::new(format!("A_{n}"), n, gens, Some(order))
}

/// The even part of `S_a x S_b` is generated by `A_a x A_b` and a product of
/// two transpositions, one in each block.
pub fn even_young(a: usize, b: usize) -> PermGroup {
    let base = direct_product(&[&alternating(a), &alternating(b)]);
    let n = a + b;
    let order = factorial(a) * factorial(b) / 2u32;
    let mut extra = Vec::new();
    if a >= 2 && b >= 2 {
        extra.push(Perm::from_cycles(n, &[&[0, 1], &[a, a + 1]]));
    }
    base.with_extra(format!("(S_{a} x S_{b}) ∩ A_{n}"), extra, Some(order))
}

/// `inner wr S_2` on two consecutive blocks of `inner.degree` points.
pub fn wreath_s2(inner: &PermGroup) -> PermGroup {
    let d = inner.degree;
    let base = direct_product(&[inner, inner]);
    let swap = Perm::from_images((0..2 * d).map(|i| ((i + d) % (2 * d)) as u16).collect()).expect("bijection");
    let order = base.predicted.clone().map(|n| n * 2u32);
    base.with_extra(format!("{} wr S_2", inner.label), vec![swap], order)
}

/// The even permutations of `g`, which must contain an odd one.
pub fn even_part(g: &PermGroup) -> Result<PermGroup> {
    if g.gens.iter().all(|p| p.parity() == 0) {
        return Err(Error::InvalidArgument(format!("{} has no odd generator", g.label)));
    }
    let gens = index2_kernel(&g.action(), &g.gens, Perm::parity, DEFAULT_SEED)?;
    let order = g.predicted.clone().map(|n| n / 2u32);
    Ok(PermGroup::new(format!("({}) ∩ A_{}", g.label, g.degree), g.degree, gens, order))
}

pub fn mathieu12() -> PermGroup {
    PermGroup::parse(M12_DATA).expect("bundled M12 data")
}

pub fn mathieu24() -> PermGroup {
    PermGroup::parse(M24_DATA).expect("bundled M24 data")
}

/// `PΓL_2(8)` on the projective line, with a tenth fixed point.
pub fn pgaml2_8() -> PermGroup {
    PermGroup::parse(PGAML_DATA).expect("bundled PGammaL(2,8) data")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, Gf};

    fn order(g: &PermGroup) -> BigUint {
        g.chain().unwrap().order()
    }

    #[test]
    fn bundled_groups_have_their_orders() {
        assert_eq!(order(&mathieu12()), BigUint::from(95040u32));
        assert_eq!(order(&mathieu24()), BigUint::from(244823040u32));
        assert_eq!(order(&pgaml2_8()), BigUint::from(1512u32));
    }

    #[test]
    fn alternating_and_symmetric() {
        for n in 3..=9 {
            assert_eq!(order(&alternating(n)), factorial(n) / 2u32);
            assert_eq!(order(&symmetric(n)), factorial(n));
            assert!(alternating(n).gens.iter().all(|g| g.parity() == 0));
        }
        assert_eq!(order(&even_young(7, 5)), BigUint::from(5040u32 * 60));
        let w = even_part(&wreath_s2(&symmetric(5))).unwrap();
        assert_eq!(order(&w), BigUint::from(14400u32));
        assert!(w.gens.iter().all(|g| g.parity() == 0));
    }

    #[test]
    fn text_round_trip() {
        let g = mathieu12();
        let h = PermGroup::parse(&g.to_text()).unwrap();
        assert_eq!(g.gens, h.gens);
        assert_eq!(g.predicted, h.predicted);
    }

    #[test]
    fn projective_data_matches_field_arithmetic() {
        let k = Field::new(2, 3).unwrap();
        // point 0 is infinity, point 1 + v is the element with encoding v
        let pt = |x: Option<Gf>| x.map_or(0, |v| 1 + v.0 as usize);
        let make = |f: &dyn Fn(Option<Gf>) -> Option<Gf>| {
            let mut images: Vec<u16> = (0..10).collect();
            for x in std::iter::once(None).chain(k.elements().map(Some)) {
                images[pt(x)] = pt(f(x)) as u16;
            }
            Perm::from_images(images).unwrap()
        };
        let z = k.primitive_element();
        let gens = vec![
            make(&|x| x.map(|v| k.add(v, Gf::ONE))),
            make(&|x| x.map(|v| k.mul(z, v))),
            make(&|x| match x {
                None => Some(Gf::ZERO),
                Some(v) if v.is_zero() => None,
                Some(v) => Some(k.inv(v).unwrap()),
            }),
            make(&|x| x.map(|v| k.mul(v, v))),
        ];
        assert_eq!(gens, pgaml2_8().gens);
    }
}
