//! Explicit generators for the groups and subgroups the catalog needs.
//!
//! Every constructor records a predicted order. Building a chain checks it:
//! `trusted` predictions are the order of a group known to contain the
//! generators (the full isometry group of a form, or its Dickson kernel), so
//! reaching them certifies the chain; other predictions are verified by a
//! complete Schreier generator check.

pub mod classical;
pub mod exceptional;
pub mod perms;
pub mod restrict;

use num_bigint::BigUint;

use crate::action::{MatAction, MatElem, MatPoint, PermAction, PermPoint};
use crate::bsgs::{BsgsChain, ChainOptions, KnownOrder};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::forms::{dickson_unchecked, is_isometry, FormedSpace};
use crate::matrix::Matrix;
use crate::perm::Perm;

pub use classical::*;
pub use exceptional::{g2_example_m, g2_subgroup, suzuki_element, sz_group};
pub use perms::{alternating, mathieu12, mathieu24, pgaml2_8, symmetric, PermGroup};
pub use restrict::FieldRestriction;

#[derive(Clone, Debug)]
pub struct MatrixGroup {
    pub label: String,
    pub field: Field,
    pub dim: usize,
    pub gens: Vec<Matrix>,
    /// The forms every generator preserves.
    pub space: FormedSpace,
    pub predicted: Option<BigUint>,
    pub trusted: bool,
}

impl MatrixGroup {
    pub fn new(label: impl Into<String>, space: &FormedSpace, gens: Vec<Matrix>) -> MatrixGroup {
        MatrixGroup {
            label: label.into(),
            field: space.field.clone(),
            dim: space.dim,
            gens,
            space: space.clone(),
            predicted: None,
            trusted: false,
        }
    }

    pub fn predict(mut self, order: BigUint) -> MatrixGroup {
        self.predicted = Some(order);
        self
    }

    pub fn trust(mut self) -> MatrixGroup {
        self.trusted = true;
        self
    }

    pub fn action(&self) -> MatAction {
        MatAction::new(&self.field, self.dim)
    }

    pub fn elems(&self) -> Result<Vec<MatElem>> {
        self.gens.iter().map(|g| MatElem::new(&self.field, g.clone())).collect()
    }

    pub fn known_order(&self) -> KnownOrder {
        match (&self.predicted, self.trusted) {
            (None, _) => KnownOrder::None,
            (Some(n), true) => KnownOrder::UpperBound(n.clone()),
            (Some(n), false) => KnownOrder::Expected(n.clone()),
        }
    }

    pub fn chain(&self) -> Result<BsgsChain<MatAction>> {
        self.chain_with_base(&[])
    }

    pub fn chain_with_base(&self, base: &[MatPoint]) -> Result<BsgsChain<MatAction>> {
        let opts = ChainOptions { known: self.known_order(), label: self.label.clone(), ..Default::default() };
        BsgsChain::build(&self.action(), &self.elems()?, base, &opts)
    }

    /// Every generator preserves the recorded forms.
    pub fn check_forms(&self) -> Result<()> {
        for g in &self.gens {
            if !is_isometry(g, &self.space)? {
                return Err(Error::NotAnIsometry);
            }
        }
        Ok(())
    }

    /// Dickson invariants of the generators (characteristic 2, quadratic form present).
    pub fn dickson_profile(&self) -> Vec<u8> {
        self.gens.iter().map(|g| dickson_unchecked(&self.field, g)).collect()
    }

    /// The same group written in the basis given by the rows of `c`.
    pub fn in_basis(&self, c: &Matrix) -> Result<MatrixGroup> {
        let k = &self.field;
        let c_inv = c.inv(k)?;
        let mut out = self.clone();
        out.gens = self.gens.iter().map(|g| g.conjugate_by_basis(k, c, &c_inv)).collect();
        out.space = space_in_basis(&self.space, c);
        Ok(out)
    }

    /// Conjugate by `x`: generators `x^{-1} g x`.
    pub fn conjugate(&self, x: &MatElem) -> MatrixGroup {
        let k = &self.field;
        let mut out = self.clone();
        out.gens = self.gens.iter().map(|g| x.inv.mul_unchecked(k, g).mul_unchecked(k, &x.m)).collect();
        out
    }

    pub fn with_extra(&self, label: impl Into<String>, extra: &[Matrix], predicted: Option<BigUint>) -> MatrixGroup {
        let mut out = self.clone();
        out.label = label.into();
        out.gens.extend(extra.iter().cloned());
        out.predicted = predicted;
        out.trusted = false;
        out
    }
}

/// Forms rewritten for the basis given by the rows of `c`.
pub fn space_in_basis(space: &FormedSpace, c: &Matrix) -> FormedSpace {
    let k = &space.field;
    FormedSpace {
        field: k.clone(),
        dim: space.dim,
        bilinear: space.bilinear.as_ref().map(|b| b.change_basis(k, c)),
        quadratic: space.quadratic.as_ref().map(|q| q.change_basis(k, c)),
        basis: Matrix::identity(space.dim),
        shape: crate::forms::StandardShape::Other,
    }
}

/// Chain for a permutation group with its prediction checked.
pub(crate) fn perm_chain(degree: usize, gens: &[Perm], predicted: Option<&BigUint>, label: &str) -> Result<BsgsChain<PermAction>> {
    let known = predicted.map_or(KnownOrder::None, |n| KnownOrder::Expected(n.clone()));
    let opts = ChainOptions { known, label: label.to_string(), ..Default::default() };
    BsgsChain::build(&PermAction::new(degree), gens, &[] as &[PermPoint], &opts)
}
