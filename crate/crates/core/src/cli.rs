//! The `factorcheck` command line: `verify`, `screen`, `ppd`, `order`, `selftest`.
//!
//! Every instance verb writes one JSON record per line to stdout, sorted by
//! instance id. Exit status is 0 when every verdict is `verified` or
//! `screened-consistent`, 1 when something was refuted or ran out of budget,
//! and 2 for usage errors.

use std::io::Write;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use crate::arith::orders::{order_of, Family};
use crate::arith::ppd::ppd;
use crate::catalog::{self, Catalog, DecorChoice, Table};
use crate::verify::{Budget, Report, Strategy, Verdict};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "factorcheck", version, about = "Exact checks of group factorizations G = HK")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify one catalog row at the given parameters.
    Verify {
        #[arg(long)]
        table: Table,
        #[arg(long)]
        row: String,
        /// Comma-separated `name=value` bindings; decorations may be given too.
        #[arg(long, default_value = "")]
        params: String,
        /// order-oracle, orbit-transitivity, chain or screen.
        #[arg(long)]
        strategy: Option<Strategy>,
        /// Use the smallest listed decorations instead of the largest.
        #[arg(long)]
        min: bool,
    },
    /// Arithmetic screening of a whole table over a parameter range.
    Screen {
        #[arg(long)]
        table: Table,
        #[arg(long, default_value_t = 16)]
        max_q: u64,
        #[arg(long, default_value_t = 3)]
        max_l: u64,
    },
    /// Primitive prime divisors of a^n - 1.
    Ppd { a: u64, n: u32 },
    /// Order of a named group.
    Order {
        family: Family,
        n: u32,
        #[arg(default_value_t = 1)]
        q: u32,
    },
    /// Run every desk instance.
    Selftest,
}

fn usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_) | Error::InvalidArgument(_) | Error::ConstraintViolation(_) | Error::Unsupported(_) | Error::NotPrimePower(_)
    )
}

fn emit(out: &mut dyn Write, mut reports: Vec<Report>) -> std::io::Result<i32> {
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    let mut code = EXIT_OK;
    for r in &reports {
        writeln!(out, "{}", r.to_json())?;
        if !r.verdict.is_success() {
            code = EXIT_FAILED;
        }
    }
    Ok(code)
}

fn budget_record(id: &str, e: &Error) -> Report {
    let zero = num_bigint::BigUint::default();
    Report::from_orders(id, Strategy::Screen, ("G", &zero), ("H", &zero), ("K", &zero))
        .with_verdict(Verdict::BudgetExceeded, e.to_string())
}

fn run_one(inst: &catalog::CatalogInstance, strategy: Option<Strategy>, budget: &Budget) -> Result<Report, Error> {
    match catalog::run_instance(inst, strategy, budget) {
        Err(e @ Error::BudgetExceeded(_)) => Ok(budget_record(&inst.id, &e)),
        other => other,
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let budget = match Budget::from_env() {
        Ok(b) => b,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let cat = Catalog::bundled();
    let fail = |err: &mut dyn Write, e: Error| -> std::io::Result<i32> {
        writeln!(err, "error: {e}")?;
        Ok(if usage_error(&e) { EXIT_USAGE } else { EXIT_FAILED })
    };
    match cli.command {
        Command::Verify { table, row, params, strategy, min } => {
            let choice = if min { DecorChoice::Min } else { DecorChoice::Max };
            let inst = match catalog::parse_params(&params)
                .and_then(|p| cat.row(table, &row).map_err(|e| Error::InvalidArgument(e.to_string())).map(|r| (r, p)))
                .and_then(|(r, p)| catalog::instantiate(r, &p, choice, &budget))
            {
                Ok(i) => i,
                Err(e) => return fail(err, e),
            };
            match run_one(&inst, strategy, &budget) {
                Ok(r) => emit(out, vec![r]),
                Err(e) => fail(err, e),
            }
        }
        Command::Screen { table, max_q, max_l } => match catalog::screen_table(&cat, table, max_q, max_l, &budget) {
            Ok(rs) => emit(out, rs),
            Err(e) => fail(err, e),
        },
        Command::Ppd { a, n } => {
            if a < 2 || n < 1 {
                writeln!(err, "error: need a >= 2 and n >= 1")?;
                return Ok(EXIT_USAGE);
            }
            let set: Vec<String> = ppd(a, n).iter().map(|p| p.to_string()).collect();
            writeln!(out, "{{{}}}", set.join(", "))?;
            Ok(EXIT_OK)
        }
        Command::Order { family, n, q } => match order_of(family, n, q) {
            Ok(o) => {
                writeln!(out, "{o}")?;
                Ok(EXIT_OK)
            }
            Err(e) => fail(err, e),
        },
        Command::Selftest => {
            let insts = match catalog::desk_instances(&cat, &budget) {
                Ok(i) => i,
                Err(e) => return fail(err, e),
            };
            let results: Vec<Result<Report, Error>> = insts.par_iter().map(|i| run_one(i, None, &budget)).collect();
            let mut reports = Vec::new();
            let mut code = EXIT_OK;
            for (inst, r) in insts.iter().zip(results) {
                match r {
                    Ok(r) => reports.push(r),
                    Err(e) => {
                        writeln!(err, "error: {}: {e}", inst.id)?;
                        code = EXIT_FAILED;
                    }
                }
            }
            let total = reports.len();
            let failed = reports.iter().filter(|r| !r.verdict.is_success()).count();
            let emitted = emit(out, reports)?;
            writeln!(err, "selftest: {} instances, {failed} failed", total)?;
            Ok(code.max(emitted))
        }
    }
}

/// Parse `args` (program name first) and run, writing records to `out` and
/// diagnostics to `err`. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    dispatch(cli, out, err).unwrap_or(EXIT_FAILED)
}
