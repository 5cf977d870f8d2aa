//! The factorization tables as data: parsing, constraint checking,
//! instantiation with feasibility, and arithmetic screening.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::arith::expr::{self, Bindings};
use crate::arith::FilterInput;
use crate::error::{Error, Result};
use crate::field::prime_power;
use crate::verify::{instances, screen_input, Budget, Report, Verdict};

pub mod mutation;

pub const CATALOG_TEXT: &str = include_str!("../../data/catalog.txt");
pub const CATALOG_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Table {
    T1,
    T2,
    T5,
    A,
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Table::T1 => "T1",
            Table::T2 => "T2",
            Table::T5 => "T5",
            Table::A => "A",
        })
    }
}

impl FromStr for Table {
    type Err = Error;
    fn from_str(s: &str) -> Result<Table> {
        Ok(match s {
            "T1" | "1" => Table::T1,
            "T2" | "2" => Table::T2,
            "T5" | "5" => Table::T5,
            "A" | "a" => Table::A,
            _ => return Err(Error::InvalidArgument(format!("unknown table {s:?}"))),
        })
    }
}

/// A decoration with its witness values, minimal first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoration {
    pub name: String,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cmp {
    Ge,
    Le,
    Eq,
    Ne,
}

/// `lhs OP rhs` with `OP` one of `>= <= == !=`, or `prime_power(expr)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint(pub String);

impl Constraint {
    fn holds(&self, env: &Bindings) -> Result<bool> {
        let t = self.0.trim();
        if let Some(inner) = t.strip_prefix("prime_power(").and_then(|r| r.strip_suffix(')')) {
            let v = expr::eval_str(inner, env)?;
            return Ok(v.to_u32().and_then(prime_power).is_some());
        }
        for (tok, op) in [(">=", Cmp::Ge), ("<=", Cmp::Le), ("==", Cmp::Eq), ("!=", Cmp::Ne)] {
            if let Some((l, r)) = t.split_once(tok) {
                let (a, b) = (expr::eval_str(l, env)?, expr::eval_str(r, env)?);
                return Ok(match op {
                    Cmp::Ge => a >= b,
                    Cmp::Le => a <= b,
                    Cmp::Eq => a == b,
                    Cmp::Ne => a != b,
                });
            }
        }
        Err(Error::Parse(format!("constraint {t:?} has no comparison")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogRow {
    pub table: Table,
    pub row: String,
    pub params: Vec<String>,
    pub constraints: Vec<Constraint>,
    pub decorations: Vec<Decoration>,
    /// Field order, absent for the alternating cases.
    pub field: Option<String>,
    /// Size of the natural point set: nonzero vectors, or the permutation degree.
    pub degree: String,
    /// `|G/L|` of the group realizing the row.
    pub outer: String,
    pub order_l: String,
    pub order_hl: String,
    pub order_kl: String,
    pub text_l: String,
    pub text_hl: String,
    pub text_kl: String,
    pub ex: Option<String>,
    pub smallest: Option<Bindings>,
    pub larger: Option<Bindings>,
}

fn parse_bindings(s: &str) -> Result<Bindings> {
    let mut out = Bindings::new();
    for part in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
        let v: u64 = v.trim().parse().map_err(|_| Error::Parse(format!("bad value in {part:?}")))?;
        out.insert(k.trim().to_string(), v);
    }
    Ok(out)
}

pub fn format_bindings(b: &Bindings, sep: &str) -> String {
    b.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(sep)
}

/// Parse `k=v,k=v` (commas or spaces).
pub fn parse_params(s: &str) -> Result<Bindings> {
    parse_bindings(s)
}

impl CatalogRow {
    pub fn id(&self) -> String {
        format!("{}.{}", self.table, self.row)
    }

    fn blank(table: Table, row: String) -> CatalogRow {
        CatalogRow {
            table,
            row,
            params: Vec::new(),
            constraints: Vec::new(),
            decorations: Vec::new(),
            field: None,
            degree: String::new(),
            outer: "1".into(),
            order_l: String::new(),
            order_hl: String::new(),
            order_kl: String::new(),
            text_l: String::new(),
            text_hl: String::new(),
            text_kl: String::new(),
            ex: None,
            smallest: None,
            larger: None,
        }
    }

    fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let v = value.to_string();
        match key {
            "params" => self.params = value.split_whitespace().map(String::from).collect(),
            "constraint" => self.constraints.push(Constraint(v)),
            "decor" => {
                let (name, rest) = value.split_once(' ').ok_or_else(|| Error::Parse(format!("decor without witnesses: {value:?}")))?;
                let witnesses = rest.split('|').map(|w| w.trim().to_string()).collect();
                self.decorations.push(Decoration { name: name.into(), witnesses });
            }
            "field" => self.field = Some(v),
            "degree" => self.degree = v,
            "outer" => self.outer = v,
            "order.L" => self.order_l = v,
            "order.HL" => self.order_hl = v,
            "order.KL" => self.order_kl = v,
            "text.L" => self.text_l = v,
            "text.HL" => self.text_hl = v,
            "text.KL" => self.text_kl = v,
            "ex" => self.ex = Some(v),
            "smallest" => self.smallest = Some(parse_bindings(value)?),
            "larger" => self.larger = Some(parse_bindings(value)?),
            _ => return Err(Error::Parse(format!("unknown field {key:?} in row {}", self.id()))),
        }
        Ok(())
    }

    fn write(&self, out: &mut String) {
        let _ = writeln!(out, "row {} {}", self.table, self.row);
        if !self.params.is_empty() {
            let _ = writeln!(out, "params {}", self.params.join(" "));
        }
        for c in &self.constraints {
            let _ = writeln!(out, "constraint {}", c.0);
        }
        for d in &self.decorations {
            let _ = writeln!(out, "decor {} {}", d.name, d.witnesses.join(" | "));
        }
        if let Some(f) = &self.field {
            let _ = writeln!(out, "field {f}");
        }
        let _ = writeln!(out, "degree {}", self.degree);
        let _ = writeln!(out, "outer {}", self.outer);
        let _ = writeln!(out, "order.L {}", self.order_l);
        let _ = writeln!(out, "order.HL {}", self.order_hl);
        let _ = writeln!(out, "order.KL {}", self.order_kl);
        let _ = writeln!(out, "text.L {}", self.text_l);
        let _ = writeln!(out, "text.HL {}", self.text_hl);
        let _ = writeln!(out, "text.KL {}", self.text_kl);
        if let Some(e) = &self.ex {
            let _ = writeln!(out, "ex {e}");
        }
        if let Some(b) = &self.smallest {
            let _ = writeln!(out, "smallest {}", format_bindings(b, " "));
        }
        if let Some(b) = &self.larger {
            let _ = writeln!(out, "larger {}", format_bindings(b, " "));
        }
    }

    fn check_complete(&self) -> Result<()> {
        for (name, v) in [("degree", &self.degree), ("order.L", &self.order_l), ("order.HL", &self.order_hl), ("order.KL", &self.order_kl)] {
            if v.is_empty() {
                return Err(Error::Parse(format!("row {} lacks {name}", self.id())));
            }
            expr::parse(v)?;
        }
        for d in &self.decorations {
            for w in &d.witnesses {
                expr::parse(w)?;
            }
        }
        Ok(())
    }

    /// Parameter tuples used for screening coverage: the smallest and the
    /// larger tuple, or the empty tuple for rows without parameters.
    pub fn sample_params(&self) -> Vec<Bindings> {
        let v: Vec<Bindings> = self.smallest.iter().chain(self.larger.iter()).cloned().collect();
        if v.is_empty() {
            vec![Bindings::new()]
        } else {
            v
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub version: u32,
    pub rows: Vec<CatalogRow>,
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog> {
        let mut version = None;
        let mut rows: Vec<CatalogRow> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim_end();
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once(' ').unwrap_or((line, ""));
            let value = value.trim();
            match key {
                "catalog" => {
                    let v: u32 = value.parse().map_err(|_| Error::Parse(format!("line {}: bad version", n + 1)))?;
                    if v != CATALOG_VERSION {
                        return Err(Error::Parse(format!("catalog version {v}, expected {CATALOG_VERSION}")));
                    }
                    version = Some(v);
                }
                "row" => {
                    let (t, r) = value.split_once(' ').ok_or_else(|| Error::Parse(format!("line {}: row needs a table and an id", n + 1)))?;
                    rows.push(CatalogRow::blank(t.parse()?, r.trim().to_string()));
                }
                _ => {
                    let row = rows.last_mut().ok_or_else(|| Error::Parse(format!("line {}: field before any row", n + 1)))?;
                    row.set(key, value)?;
                }
            }
        }
        let version = version.ok_or_else(|| Error::Parse("missing catalog header".into()))?;
        for r in &rows {
            r.check_complete()?;
        }
        Ok(Catalog { version, rows })
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("catalog {}\n", self.version);
        for r in &self.rows {
            out.push('\n');
            r.write(&mut out);
        }
        out
    }

    /// The bundled catalog.
    pub fn bundled() -> Catalog {
        Catalog::parse(CATALOG_TEXT).expect("bundled catalog parses")
    }

    pub fn row(&self, table: Table, row: &str) -> Result<&CatalogRow> {
        self.rows
            .iter()
            .find(|r| r.table == table && r.row == row)
            .ok_or_else(|| Error::InvalidArgument(format!("no row {row} in table {table}")))
    }

    pub fn table(&self, table: Table) -> impl Iterator<Item = &CatalogRow> {
        self.rows.iter().filter(move |r| r.table == table)
    }

    /// One line per row with the verbatim cells, for review against the source tables.
    pub fn display_table(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let _ = writeln!(out, "{} | {} | {} | {} | {}", r.id(), r.text_l, r.text_hl, r.text_kl, r.ex.as_deref().unwrap_or("-"));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Feasibility {
    FullVerify,
    ScreenOnly,
}

/// Which end of each decoration range to take when none is given.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecorChoice {
    Min,
    Max,
}

#[derive(Clone, Debug, Serialize)]
pub struct Orders {
    pub l: String,
    pub h_cap_l: String,
    pub k_cap_l: String,
    pub outer: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogInstance {
    pub id: String,
    pub table: Table,
    pub row: String,
    /// Parameters together with the chosen decoration values.
    pub params: Bindings,
    pub orders: Orders,
    /// The order expressions of `L`, `H ∩ L` and `K ∩ L`, used as labels.
    pub labels: [String; 3],
    pub degree: String,
    /// Rough bytes to hold the point set: one entry per point.
    pub memory_estimate: String,
    pub feasibility: Feasibility,
    pub reason: String,
}

/// Bytes per stored point: a hashed key plus its orbit bookkeeping.
const POINT_BYTES: u32 = 64;

impl CatalogInstance {
    pub fn instance_id(row: &CatalogRow, params: &Bindings) -> String {
        format!("{}[{}]", row.id(), format_bindings(params, ","))
    }

    fn big(s: &str) -> BigUint {
        s.parse().expect("decimal")
    }

    pub fn filter_input(&self) -> FilterInput {
        let o = &self.orders;
        FilterInput::with_outer(Self::big(&o.l), Self::big(&o.h_cap_l), Self::big(&o.k_cap_l), Self::big(&o.outer))
    }

    /// Arithmetic screening of this instance.
    pub fn screen(&self) -> Report {
        let input = self.filter_input();
        let [g, h, k] = &self.labels;
        screen_input(&self.id, (g, &input.g), (h, &input.h), (k, &input.k), &input)
    }

    pub fn table_name(&self) -> String {
        self.table.to_string()
    }
}

/// Check constraints, resolve decorations and classify feasibility.
pub fn instantiate(row: &CatalogRow, params: &Bindings, choice: DecorChoice, budget: &Budget) -> Result<CatalogInstance> {
    for p in &row.params {
        if !params.contains_key(p) {
            return Err(Error::InvalidArgument(format!("{} needs parameter {p}", row.id())));
        }
        if params[p] == 0 {
            return Err(Error::ConstraintViolation(format!("{p} >= 1")));
        }
    }
    for k in params.keys() {
        if !row.params.contains(k) && !row.decorations.iter().any(|d| &d.name == k) {
            return Err(Error::InvalidArgument(format!("{} has no parameter {k}", row.id())));
        }
    }
    let mut env: Bindings = row.params.iter().map(|p| (p.clone(), params[p])).collect();
    for c in &row.constraints {
        if !c.holds(&env)? {
            return Err(Error::ConstraintViolation(format!("{} requires {}", row.id(), c.0)));
        }
    }
    for d in &row.decorations {
        let values = d
            .witnesses
            .iter()
            .map(|w| expr::eval_str(w, &env)?.to_u64().ok_or_else(|| Error::InvalidArgument(format!("decoration {} too large", d.name))))
            .collect::<Result<Vec<u64>>>()?;
        let v = match params.get(&d.name) {
            Some(v) if values.contains(v) => *v,
            Some(v) => {
                return Err(Error::Unsupported(format!("{}={v}; the witnesses for {} are {values:?}", d.name, row.id())));
            }
            None => match choice {
                DecorChoice::Min => values[0],
                DecorChoice::Max => *values.last().unwrap(),
            },
        };
        env.insert(d.name.clone(), v);
    }
    let eval = |e: &str| expr::eval_str(e, &env);
    let orders = Orders {
        l: eval(&row.order_l)?.to_string(),
        h_cap_l: eval(&row.order_hl)?.to_string(),
        k_cap_l: eval(&row.order_kl)?.to_string(),
        outer: eval(&row.outer)?.to_string(),
    };
    let degree = eval(&row.degree)?;
    let memory = &degree * BigUint::from(POINT_BYTES);
    let q = row.field.as_deref().map(eval).transpose()?;
    let (feasibility, reason) = if q.as_ref().is_some_and(|q| q % 2u32 == BigUint::one()) {
        (Feasibility::ScreenOnly, "odd characteristic: no Omega membership test".to_string())
    } else if degree > BigUint::from(budget.points) {
        (Feasibility::ScreenOnly, format!("{degree} points exceed the budget of {}", budget.points))
    } else if let Some(why) = instances::unsupported(row.table, &row.row, &env) {
        (Feasibility::ScreenOnly, why)
    } else {
        (Feasibility::FullVerify, "constructed witness within budget".to_string())
    };
    Ok(CatalogInstance {
        id: CatalogInstance::instance_id(row, &env),
        table: row.table,
        row: row.row.clone(),
        params: env,
        orders,
        labels: [row.order_l.clone(), row.order_hl.clone(), row.order_kl.clone()],
        degree: degree.to_string(),
        memory_estimate: memory.to_string(),
        feasibility,
        reason,
    })
}

/// Screen a row at one parameter tuple with minimal and maximal decorations.
pub fn screen_row(row: &CatalogRow, params: &Bindings, budget: &Budget) -> Result<(Report, Report)> {
    let min = instantiate(row, params, DecorChoice::Min, budget)?.screen();
    let max = instantiate(row, params, DecorChoice::Max, budget)?.screen();
    Ok((min, max))
}

/// Screen every parameter tuple of a table with `q <= max_q` and `l <= max_l`
/// (rows without those parameters contribute their sample tuples).
pub fn screen_table(cat: &Catalog, table: Table, max_q: u64, max_l: u64, budget: &Budget) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for row in cat.table(table) {
        for params in sweep(row, max_q, max_l) {
            match instantiate(row, &params, DecorChoice::Max, budget) {
                Ok(inst) => {
                    out.push(inst.screen());
                    let min = instantiate(row, &params, DecorChoice::Min, budget)?;
                    let mut r = min.screen();
                    r.id = format!("{}/min", r.id);
                    out.push(r);
                }
                Err(Error::ConstraintViolation(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

fn sweep(row: &CatalogRow, max_q: u64, max_l: u64) -> Vec<Bindings> {
    if row.params.is_empty() {
        return vec![Bindings::new()];
    }
    let range = |p: &str| -> Vec<u64> {
        match p {
            "f" => (1..=16).take_while(|f| 1u64 << f <= max_q).collect(),
            "q" => (2..=max_q).filter(|&q| u32::try_from(q).ok().and_then(prime_power).is_some()).collect(),
            "l" | "a" | "b" => (1..=max_l).collect(),
            "c" => vec![1, 2],
            "n" => (10..=12).collect(),
            _ => vec![1],
        }
    };
    let mut out = vec![Bindings::new()];
    for p in &row.params {
        out = out
            .into_iter()
            .flat_map(|b| {
                range(p).into_iter().map(move |v| {
                    let mut b = b.clone();
                    b.insert(p.clone(), v);
                    b
                })
            })
            .collect();
    }
    out
}

/// The instances named by the acceptance list, each row at its sample
/// tuples, all tagged with feasibility.
pub fn desk_instances(cat: &Catalog, budget: &Budget) -> Result<Vec<CatalogInstance>> {
    let named: &[(Table, &str, &str)] = &[
        (Table::T1, "1", "f=2,l=1,a=1,b=1,R=1,Q=2"),
        (Table::T1, "1", "f=1,l=2,a=1,b=2,R=1,Q=2"),
        (Table::T1, "1", "f=1,l=2,a=1,b=2,R=4,Q=2"),
        (Table::T1, "6", "f=3,P=2"),
        (Table::T1, "2", "f=1,l=1,R=1,Q=2"),
        (Table::T1, "5", "l=1,P=4,Q=2"),
        (Table::T1, "5", "l=1,P=2,Q=2"),
        (Table::T1, "7", "f=2"),
        (Table::T2, "7", ""),
        (Table::T5, "1", "l=2,q=4,P=1"),
        (Table::T5, "2", "l=1,P=2"),
        (Table::T5, "3", "l=1,c=2,P=4"),
        (Table::T5, "3", "l=1,c=1,P=2"),
        (Table::A, "a.1", "n=11,T=1"),
        (Table::A, "a.2", "T=2,K=3"),
        (Table::A, "a.3", "T=1"),
        (Table::A, "a.4", "T=1"),
    ];
    let mut out = Vec::new();
    for (t, r, p) in named {
        out.push(instantiate(cat.row(*t, r)?, &parse_bindings(p)?, DecorChoice::Max, budget)?);
    }
    for row in &cat.rows {
        for p in row.sample_params() {
            let inst = instantiate(row, &p, DecorChoice::Max, budget)?;
            if !out.iter().any(|o| o.id == inst.id) {
                out.push(inst);
            }
        }
    }
    Ok(out)
}

/// Verify an instance with its constructed witness, or screen it.
pub fn run_instance(inst: &CatalogInstance, strategy: Option<crate::verify::Strategy>, budget: &Budget) -> Result<Report> {
    if inst.feasibility == Feasibility::ScreenOnly || strategy == Some(crate::verify::Strategy::Screen) {
        let mut r = inst.screen();
        if inst.feasibility == Feasibility::ScreenOnly && r.verdict == Verdict::ScreenedConsistent {
            r.detail = format!("{}; screen-only: {}", r.detail, inst.reason);
        }
        return Ok(r);
    }
    let built = instances::build(inst.table, &inst.row, &inst.params, budget)
        .ok_or_else(|| Error::Unsupported(format!("no constructor for {}", inst.id)))??;
    let mut r = built.run(strategy, budget)?;
    r.id = inst.id.clone();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> Bindings {
        parse_bindings(s).unwrap()
    }

    #[test]
    fn bundled_catalog_shape() {
        let c = Catalog::bundled();
        assert_eq!(c.table(Table::T1).count(), 10);
        assert_eq!(c.table(Table::T2).count(), 8);
        assert_eq!(c.table(Table::T5).count(), 6);
        assert_eq!(c.table(Table::A).count(), 4);
        assert_eq!(Catalog::parse(&c.serialize()).unwrap(), c);
    }

    #[test]
    fn constraints_are_enforced() {
        let c = Catalog::bundled();
        let bud = Budget::default();
        let r6 = c.row(Table::T1, "6").unwrap();
        let e = instantiate(r6, &b("f=4"), DecorChoice::Max, &bud).unwrap_err();
        assert!(matches!(e, Error::ConstraintViolation(ref m) if m.contains("f % 2 == 1")), "{e}");
        let r1 = c.row(Table::T1, "1").unwrap();
        assert!(matches!(instantiate(r1, &b("f=1,l=1,a=1,b=1"), DecorChoice::Max, &bud), Err(Error::ConstraintViolation(_))));
        assert!(matches!(instantiate(r1, &b("f=2,l=2,a=1,b=1"), DecorChoice::Max, &bud), Err(Error::ConstraintViolation(_))));
        assert!(instantiate(r1, &b("f=2,l=1"), DecorChoice::Max, &bud).is_err());
        let t5 = c.row(Table::T5, "1").unwrap();
        assert!(instantiate(t5, &b("l=2,q=6"), DecorChoice::Max, &bud).is_err());
    }

    #[test]
    fn feasibility_tags() {
        let c = Catalog::bundled();
        let bud = Budget::default();
        let i = instantiate(c.row(Table::T1, "1").unwrap(), &b("f=2,l=1,a=1,b=1"), DecorChoice::Max, &bud).unwrap();
        assert_eq!(i.feasibility, Feasibility::FullVerify);
        assert_eq!(i.degree, "255");
        let i = instantiate(c.row(Table::T1, "2").unwrap(), &b("f=1,l=1"), DecorChoice::Max, &bud).unwrap();
        assert_eq!(i.degree, "4095");
        assert_eq!(i.feasibility, Feasibility::FullVerify);
        let i = instantiate(c.row(Table::T1, "9").unwrap(), &Bindings::new(), DecorChoice::Max, &bud).unwrap();
        assert_eq!(i.feasibility, Feasibility::ScreenOnly);
        let i = instantiate(c.row(Table::T5, "1").unwrap(), &b("l=2,q=5"), DecorChoice::Max, &bud).unwrap();
        assert_eq!(i.feasibility, Feasibility::ScreenOnly);
        assert!(i.reason.contains("odd"));
    }

    #[test]
    fn decorations_resolve_to_witnesses() {
        let c = Catalog::bundled();
        let bud = Budget::default();
        let r1 = c.row(Table::T1, "1").unwrap();
        let min = instantiate(r1, &b("f=1,l=2,a=1,b=2"), DecorChoice::Min, &bud).unwrap();
        let max = instantiate(r1, &b("f=1,l=2,a=1,b=2"), DecorChoice::Max, &bud).unwrap();
        assert_eq!((min.params["R"], min.params["Q"]), (1, 1));
        assert_eq!((max.params["R"], max.params["Q"]), (4, 2));
        assert!(matches!(instantiate(r1, &b("f=1,l=2,a=1,b=2,R=2"), DecorChoice::Max, &bud), Err(Error::Unsupported(_))));
        assert_eq!(max.orders.h_cap_l, (3600u64 * 4 * 2).to_string());
    }

    #[test]
    fn screening_small_tables() {
        let c = Catalog::bundled();
        let bud = Budget::default();
        for t in [Table::T1, Table::T5] {
            for r in screen_table(&c, t, 16, 3, &bud).unwrap() {
                if !r.id.ends_with("/min") {
                    assert_eq!(r.verdict, Verdict::ScreenedConsistent, "{} {}", r.id, r.detail);
                }
            }
        }
    }
}
