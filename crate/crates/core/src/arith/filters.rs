//! Necessary divisibility conditions for a factorization `G = HK` with
//! `L = Soc(G)`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

/// The orders entering the four divisibility clauses. `g_mod_l` is `|G/L|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterInput {
    pub g: BigUint,
    pub h: BigUint,
    pub k: BigUint,
    pub l: BigUint,
    pub h_cap_l: BigUint,
    pub k_cap_l: BigUint,
    pub g_mod_l: BigUint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FilterOutcome {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
}

impl FilterOutcome {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c && self.d
    }

    /// Clause labels that fail, e.g. `"ac"`.
    pub fn failing(&self) -> String {
        [('a', self.a), ('b', self.b), ('c', self.c), ('d', self.d)]
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(c, _)| *c)
            .collect()
    }
}

fn divides(a: &BigUint, b: &BigUint) -> bool {
    !a.is_zero() && b.is_multiple_of(a)
}

pub fn divisibility_filter(x: &FilterInput) -> FilterOutcome {
    FilterOutcome {
        a: divides(&x.g, &(&x.h * &x.k)),
        b: divides(&x.g, &(&x.h_cap_l * &x.k * &x.g_mod_l)),
        c: divides(&x.l, &(&x.h_cap_l * &x.k)),
        d: divides(&x.l, &(&x.h_cap_l * &x.k_cap_l * &x.g_mod_l)),
    }
}

impl FilterInput {
    /// `G = L.O`, `H = (H∩L).O`, `K = (K∩L).O` for an outer part of order `o`.
    pub fn with_outer(l: BigUint, h_cap_l: BigUint, k_cap_l: BigUint, o: BigUint) -> FilterInput {
        FilterInput {
            g: &l * &o,
            h: &h_cap_l * &o,
            k: &k_cap_l * &o,
            l,
            h_cap_l,
            k_cap_l,
            g_mod_l: o,
        }
    }
}
