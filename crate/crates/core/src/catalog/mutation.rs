//! Deliberately broken variants of catalog rows. Each must be caught, by
//! screening or by verification, or the checks are vacuous.

use serde::Serialize;

use super::{instantiate, parse_params, Catalog, DecorChoice, Table};
use crate::error::Result;
use crate::verify::instances::{omega8_2_restricted, Decor};
use crate::verify::{Budget, Report, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// Minus-type factor replaced by the plus type in the first symplectic row.
    WrongFormSign,
    /// `Omega_8^+(2)` with the decoration of `SL_2(4) x SL_2(4)` dropped.
    DroppedDecoration,
    /// `Sz(8)` replaced by its subgroup of order 1456.
    WrongSubgroup,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [Mutation::WrongFormSign, Mutation::DroppedDecoration, Mutation::WrongSubgroup];
}

#[derive(Clone, Debug, Serialize)]
pub struct MutationOutcome {
    pub mutation: Mutation,
    pub caught: bool,
    pub report: Report,
}

pub fn run(m: Mutation, cat: &Catalog, budget: &Budget) -> Result<MutationOutcome> {
    let report = match m {
        Mutation::WrongFormSign => {
            let mut row = cat.row(Table::T1, "1")?.clone();
            row.order_kl = row.order_kl.replace("Omega-", "Omega+");
            let inst = instantiate(&row, &parse_params("f=1,l=2,a=1,b=2")?, DecorChoice::Max, budget)?;
            inst.screen()
        }
        Mutation::DroppedDecoration => omega8_2_restricted(Decor::None, budget)?.run(None, budget)?,
        Mutation::WrongSubgroup => {
            let mut row = cat.row(Table::T1, "6")?.clone();
            row.order_kl = format!("({}) / 20", row.order_kl);
            let inst = instantiate(&row, &parse_params("f=3")?, DecorChoice::Max, budget)?;
            inst.screen()
        }
    };
    Ok(MutationOutcome { mutation: m, caught: report.verdict == Verdict::Refuted, report })
}
