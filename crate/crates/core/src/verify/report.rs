//! Line-delimited JSON verification records.

use num_bigint::BigUint;
use serde::Serialize;

use super::Group;
use crate::action::Action;
use crate::arith::filters::FilterOutcome;

/// Version of the record layout below; bump on any field change.
pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    OrderOracle,
    OrbitTransitivity,
    Chain,
    Screen,
}

impl std::str::FromStr for Strategy {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Strategy> {
        Ok(match s {
            "order-oracle" | "oracle" => Strategy::OrderOracle,
            "orbit-transitivity" | "orbit" => Strategy::OrbitTransitivity,
            "chain" => Strategy::Chain,
            "screen" => Strategy::Screen,
            _ => return Err(crate::Error::InvalidArgument(format!("unknown strategy {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Verified,
    Refuted,
    ScreenedConsistent,
    BudgetExceeded,
}

impl Verdict {
    pub fn is_success(self) -> bool {
        matches!(self, Verdict::Verified | Verdict::ScreenedConsistent)
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "verified",
            Verdict::Refuted => "refuted",
            Verdict::ScreenedConsistent => "screened-consistent",
            Verdict::BudgetExceeded => "budget-exceeded",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitStats {
    /// Length of the `G`-orbit of the stabilized point.
    pub length: u64,
    /// Points reached by the moving factor.
    pub reached: u64,
    /// Which factor is the stabilizer.
    pub stabilizer: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EngineStats {
    pub elements_enumerated: u64,
    pub orbit_points: u64,
    pub base_length: usize,
    pub strong_generators: usize,
}

/// One verification record. Field order is the serialized order; big
/// integers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub id: String,
    pub strategy: Strategy,
    pub g: String,
    pub h: String,
    pub k: String,
    pub g_order: String,
    pub h_order: String,
    pub k_order: String,
    pub intersection: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit: Option<OrbitStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filter: Option<FilterOutcome>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub links: Vec<Report>,
    pub verdict: Verdict,
    pub detail: String,
    pub seed: u64,
    pub stats: EngineStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new<A: Action>(id: &str, strategy: Strategy, g: &Group<A>, h: &Group<A>, k: &Group<A>) -> Report {
        let mut r = Report::from_orders(id, strategy, (&g.label, &g.order()), (&h.label, &h.order()), (&k.label, &k.order()));
        r.stats.base_length = g.chain.levels.len();
        r.stats.strong_generators = g.chain.strong.len();
        r
    }

    pub fn from_orders(id: &str, strategy: Strategy, g: (&str, &BigUint), h: (&str, &BigUint), k: (&str, &BigUint)) -> Report {
        Report {
            schema: REPORT_SCHEMA,
            id: id.to_string(),
            strategy,
            g: g.0.to_string(),
            h: h.0.to_string(),
            k: k.0.to_string(),
            g_order: g.1.to_string(),
            h_order: h.1.to_string(),
            k_order: k.1.to_string(),
            intersection: None,
            orbit: None,
            filter: None,
            links: Vec::new(),
            verdict: Verdict::BudgetExceeded,
            detail: String::new(),
            seed: super::CONJUGATION_SEED,
            stats: EngineStats::default(),
            elapsed_ms: None,
        }
    }

    pub fn with_verdict(mut self, verdict: Verdict, detail: String) -> Report {
        self.verdict = verdict;
        self.detail = detail;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
