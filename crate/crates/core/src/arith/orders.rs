//! Exact orders of the finite groups the catalog talks about.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::field::prime_power;

/// Group families with an order formula. Dimensions are matrix dimensions
/// (`Sp(4, q)` is `Sp_4(q)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Family {
    Sp,
    PSp,
    OmegaPlus,
    OmegaMinus,
    POmegaPlus,
    POmegaMinus,
    GOPlus,
    GOMinus,
    /// Odd-dimensional orthogonal group `Omega_{2m+1}(q)`.
    OmegaOdd,
    SL,
    PSL,
    SU,
    G2,
    Sz,
    Alt,
    Sym,
    Mathieu12,
    Mathieu24,
    Dihedral,
    Cyclic,
}

impl Family {
    pub const ALL: [Family; 20] = [
        Family::Sp,
        Family::PSp,
        Family::OmegaPlus,
        Family::OmegaMinus,
        Family::POmegaPlus,
        Family::POmegaMinus,
        Family::GOPlus,
        Family::GOMinus,
        Family::OmegaOdd,
        Family::SL,
        Family::PSL,
        Family::SU,
        Family::G2,
        Family::Sz,
        Family::Alt,
        Family::Sym,
        Family::Mathieu12,
        Family::Mathieu24,
        Family::Dihedral,
        Family::Cyclic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Sp => "Sp",
            Family::PSp => "PSp",
            Family::OmegaPlus => "Omega+",
            Family::OmegaMinus => "Omega-",
            Family::POmegaPlus => "POmega+",
            Family::POmegaMinus => "POmega-",
            Family::GOPlus => "GO+",
            Family::GOMinus => "GO-",
            Family::OmegaOdd => "Omega",
            Family::SL => "SL",
            Family::PSL => "PSL",
            Family::SU => "SU",
            Family::G2 => "G2",
            Family::Sz => "Sz",
            Family::Alt => "Alt",
            Family::Sym => "Sym",
            Family::Mathieu12 => "M12",
            Family::Mathieu24 => "M24",
            Family::Dihedral => "D",
            Family::Cyclic => "C",
        }
    }

    /// Whether the family takes a field order argument.
    pub fn takes_q(self) -> bool {
        !matches!(
            self,
            Family::Alt | Family::Sym | Family::Mathieu12 | Family::Mathieu24 | Family::Dihedral | Family::Cyclic
        )
    }

    /// Whether the family takes a degree/dimension argument.
    pub fn takes_n(self) -> bool {
        !matches!(self, Family::G2 | Family::Sz | Family::Mathieu12 | Family::Mathieu24)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        let norm = s.trim();
        let alias = match norm {
            "Omega_plus" | "OmegaP" | "Om+" => "Omega+",
            "Omega_minus" | "OmegaM" | "Om-" => "Omega-",
            "POmega_plus" | "POmegaP" | "POm+" => "POmega+",
            "POmega_minus" | "POmegaM" | "POm-" => "POmega-",
            "GO_plus" | "GOP" => "GO+",
            "GO_minus" | "GOM" => "GO-",
            "A" => "Alt",
            "S" => "Sym",
            "Mathieu12" => "M12",
            "Mathieu24" => "M24",
            "dihedral" => "D",
            "cyclic" => "C",
            other => other,
        };
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.name() == alias)
            .ok_or_else(|| Error::Unsupported(format!("unknown group family {s:?}")))
    }
}

/// A family with its parameters and an explicit decoration multiplier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupOrderSpec {
    pub family: Family,
    pub n: u32,
    pub q: u32,
    pub multiplier: BigUint,
}

impl GroupOrderSpec {
    pub fn new(family: Family, n: u32, q: u32) -> GroupOrderSpec {
        GroupOrderSpec { family, n, q, multiplier: BigUint::one() }
    }

    pub fn decorated(mut self, m: u64) -> GroupOrderSpec {
        self.multiplier *= m;
        self
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn pow(q: u32, e: u64) -> BigUint {
    num_traits::pow(BigUint::from(q), e as usize)
}

/// `prod_{i=1..k} (q^{step*i} - 1)`
fn cyclotomic_product(q: u32, k: u32, step: u32) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * (pow(q, (step * i) as u64) - 1u32))
}

fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * big(i as u64))
}

fn gcd_u(a: &BigUint, b: u64) -> u64 {
    a.gcd(&big(b)).to_u64().expect("small")
}

fn check_q(q: u32) -> Result<()> {
    prime_power(q).map(|_| ()).ok_or(Error::NotPrimePower(q))
}

fn even_dim(n: u32) -> Result<u32> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddDimension(n as usize));
    }
    Ok(n / 2)
}

/// `|GO^eps_{2m}(q)|` for the full isometry group of a nondegenerate form.
fn go_order(m: u32, q: u32, plus: bool) -> BigUint {
    let qm = pow(q, m as u64);
    let middle = if plus { qm - 1u32 } else { qm + 1u32 };
    big(2) * pow(q, (m * (m - 1)) as u64) * middle * cyclotomic_product(q, m - 1, 2)
}

fn sp_order(m: u32, q: u32) -> BigUint {
    pow(q, (m * m) as u64) * cyclotomic_product(q, m, 2)
}

/// Exact order of a group described by `spec`.
pub fn classical_order(spec: &GroupOrderSpec) -> Result<BigUint> {
    let GroupOrderSpec { family, n, q, .. } = *spec;
    if family.takes_q() {
        check_q(q)?;
    }
    let odd_q = q % 2 == 1;
    let base = match family {
        Family::Sp => sp_order(even_dim(n)?, q),
        Family::PSp => {
            let m = even_dim(n)?;
            sp_order(m, q) / big(if odd_q { 2 } else { 1 })
        }
        Family::GOPlus | Family::GOMinus => {
            let m = even_dim(n)?;
            go_order(m, q, family == Family::GOPlus)
        }
        Family::OmegaPlus | Family::OmegaMinus => {
            let m = even_dim(n)?;
            go_order(m, q, family == Family::OmegaPlus) / big(if odd_q { 4 } else { 2 })
        }
        Family::POmegaPlus | Family::POmegaMinus => {
            let m = even_dim(n)?;
            let plus = family == Family::POmegaPlus;
            let qm = pow(q, m as u64);
            let d = if plus { gcd_u(&(qm - 1u32), 4) } else { gcd_u(&(qm + 1u32), 4) };
            go_order(m, q, plus) / big(2 * d)
        }
        Family::OmegaOdd => {
            if n % 2 == 0 {
                return Err(Error::InvalidArgument(format!("Omega takes an odd dimension, got {n}")));
            }
            let m = n / 2;
            sp_order(m, q) / big(if odd_q { 2 } else { 1 })
        }
        Family::SL | Family::PSL => {
            if n == 0 {
                return Err(Error::InvalidArgument("dimension must be positive".into()));
            }
            let mut o = pow(q, (n * (n - 1) / 2) as u64);
            for i in 2..=n {
                o *= pow(q, i as u64) - 1u32;
            }
            if family == Family::PSL {
                let d = (n as u64).gcd(&(q as u64 - 1));
                o /= big(d);
            }
            o
        }
        Family::SU => {
            if n == 0 {
                return Err(Error::InvalidArgument("dimension must be positive".into()));
            }
            let mut o = pow(q, (n * (n - 1) / 2) as u64);
            for i in 2..=n {
                let qi = pow(q, i as u64);
                o *= if i % 2 == 0 { qi - 1u32 } else { qi + 1u32 };
            }
            o
        }
        Family::G2 => pow(q, 6) * (pow(q, 6) - 1u32) * (pow(q, 2) - 1u32),
        Family::Sz => {
            let (p, f) = prime_power(q).expect("checked");
            if p != 2 || f % 2 == 0 || f < 3 {
                return Err(Error::InvalidArgument(format!("Sz(q) needs q = 2^f with f odd and at least 3, got {q}")));
            }
            pow(q, 2) * (pow(q, 2) + 1u32) * (big(q as u64) - 1u32)
        }
        Family::Alt => {
            if n < 2 {
                BigUint::one()
            } else {
                factorial(n) / big(2)
            }
        }
        Family::Sym => factorial(n),
        Family::Mathieu12 => big(95040),
        Family::Mathieu24 => big(244823040),
        Family::Dihedral => big(n as u64),
        Family::Cyclic => big(n as u64),
    };
    Ok(base * &spec.multiplier)
}

/// Shorthand for `classical_order` without a multiplier.
pub fn order_of(family: Family, n: u32, q: u32) -> Result<BigUint> {
    classical_order(&GroupOrderSpec::new(family, n, q))
}

/// Order of `Out(L)` for the simple classical groups used in screening.
/// Triality for `POmega+_8` and the graph automorphism of `Sp_4(2^f)` are
/// included.
pub fn outer_order(family: Family, n: u32, q: u32) -> Result<BigUint> {
    let (p, f) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let f = big(f as u64);
    Ok(match family {
        Family::Sp | Family::PSp => {
            let m = even_dim(n)?;
            let d = if p == 2 { 1u64 } else { 2 };
            let graph = if m == 2 && p == 2 { 2u64 } else { 1 };
            big(d * graph) * f
        }
        Family::OmegaPlus | Family::POmegaPlus => {
            let m = even_dim(n)?;
            let d = if p == 2 { 1 } else { gcd_u(&(pow(q, m as u64) - 1u32), 4) };
            if m == 4 {
                // diagonal 2^2 (odd q) extended by S_3 from triality
                let diag = if p == 2 { 1u64 } else { 4 };
                big(6 * diag) * f
            } else {
                big(2 * d) * f
            }
        }
        Family::OmegaMinus | Family::POmegaMinus => {
            let m = even_dim(n)?;
            let d = if p == 2 { 1 } else { gcd_u(&(pow(q, m as u64) + 1u32), 4) };
            big(2 * d) * f
        }
        Family::G2 => big(if p == 3 { 2 } else { 1 }) * f,
        Family::Sz => f,
        other => return Err(Error::Unsupported(format!("outer automorphism order of {other}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(f: Family, n: u32, q: u32) -> BigUint {
        order_of(f, n, q).unwrap()
    }

    #[test]
    fn symplectic_orders() {
        assert_eq!(o(Family::Sp, 2, 4), big(60));
        assert_eq!(o(Family::Sp, 4, 4), big(979200));
        assert_eq!(o(Family::Sp, 6, 4), big(4106059776000));
        assert_eq!(o(Family::Sp, 6, 2), big(1451520));
        assert_eq!(o(Family::Sp, 4, 8), big(1056706560));
    }

    #[test]
    fn orthogonal_orders() {
        assert_eq!(o(Family::GOMinus, 4, 4), big(8160));
        assert_eq!(o(Family::OmegaMinus, 4, 4), big(4080));
        assert_eq!(o(Family::GOPlus, 8, 2), big(348364800));
        assert_eq!(o(Family::OmegaPlus, 8, 2), big(174182400));
        assert_eq!(o(Family::GOMinus, 2, 2), big(6));
        assert_eq!(o(Family::GOMinus, 8, 2), big(394813440));
        // q odd: PSp_2(q) = PSL_2(q) and POmega^-_4(q) = PSL_2(q^2)
        assert_eq!(o(Family::PSp, 2, 5), o(Family::PSL, 2, 5));
        assert_eq!(o(Family::POmegaMinus, 4, 3), o(Family::PSL, 2, 9));
        assert_eq!(o(Family::POmegaPlus, 8, 3), big(4952179814400));
        assert_eq!(o(Family::OmegaOdd, 7, 2), o(Family::Sp, 6, 2));
    }

    #[test]
    fn exceptional_and_sporadic() {
        assert_eq!(o(Family::G2, 0, 4), big(251596800));
        assert_eq!(o(Family::G2, 0, 2), big(12096));
        assert_eq!(o(Family::Sz, 0, 8), big(29120));
        assert!(order_of(Family::Sz, 0, 4).is_err());
        assert_eq!(o(Family::Alt, 10, 0), big(1814400));
        assert_eq!(o(Family::SL, 2, 8), big(504));
        assert_eq!(o(Family::SU, 3, 3), big(6048));
    }

    #[test]
    fn parse_family_names() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("Spin".parse::<Family>().is_err());
    }

    #[test]
    fn multipliers_are_exact() {
        let s = GroupOrderSpec::new(Family::Sp, 2, 8).decorated(2).decorated(3);
        assert_eq!(classical_order(&s).unwrap(), big(504 * 6));
    }
}
