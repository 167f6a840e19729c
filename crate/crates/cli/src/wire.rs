//! Serialization structs for the machine-readable outputs. All big
//! integers travel as decimal strings; the schema carries a version
//! field.

use cyclofc_core::criteria::{Conclusion, CriterionReport, Verdict};
use cyclofc_core::diophantine::{SearchReport, SolutionTriple};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConditionWire {
    pub name: String,
    pub verdict: String,
    pub witness: String,
    pub required: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundsWire {
    /// log10 values as fixed-point decimal strings.
    pub lowb: String,
    pub bound: String,
    pub bound1: String,
    /// The constant c1(q) itself (not a log).
    pub c1_of_q: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportWire {
    pub version: u32,
    pub p: u64,
    pub q: u64,
    pub theorem: String,
    pub conditions: Vec<ConditionWire>,
    pub conclusion: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsWire>,
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Unknown => "unknown",
    }
}

pub fn conclusion_str(c: Conclusion) -> &'static str {
    match c {
        Conclusion::NoSolutionsBelowBound => "no_solutions_below_bound",
        Conclusion::NoRationalSolutions => "no_rational_solutions",
        Conclusion::CasesRestricted => "cases_restricted",
        Conclusion::Inconclusive => "inconclusive",
    }
}

pub fn report_to_wire(r: &CriterionReport) -> ReportWire {
    ReportWire {
        version: SCHEMA_VERSION,
        p: r.pair.p(),
        q: r.pair.q(),
        theorem: r.theorem.to_string(),
        conditions: r
            .conditions
            .iter()
            .map(|c| ConditionWire {
                name: c.name.to_string(),
                verdict: verdict_str(c.verdict).to_string(),
                witness: c.witness.clone(),
                required: c.required,
            })
            .collect(),
        conclusion: conclusion_str(r.conclusion).to_string(),
        bounds: r.bounds.as_ref().map(|b| BoundsWire {
            lowb: b.lowb.to_string(),
            bound: b.bound.to_string(),
            bound1: b.bound1.to_string(),
            c1_of_q: b.c1_of_q.to_string(),
        }),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TripleWire {
    pub x: String,
    pub y: String,
    pub z: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchWire {
    pub version: u32,
    pub p: u64,
    pub q: u64,
    pub height: u64,
    pub solutions: Vec<TripleWire>,
    pub trivial_count: u64,
}

pub fn triple_to_wire(t: &SolutionTriple) -> TripleWire {
    TripleWire {
        x: t.x().to_string(),
        y: t.y().to_string(),
        z: t.z().to_string(),
    }
}

pub fn search_to_wire(r: &SearchReport) -> SearchWire {
    SearchWire {
        version: SCHEMA_VERSION,
        p: r.pair.p(),
        q: r.pair.q(),
        height: r.height,
        solutions: r.solutions.iter().map(triple_to_wire).collect(),
        trivial_count: r.trivial_count,
    }
}

/// Append-only class-number cache record.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheRecord {
    pub version: u32,
    pub m: u64,
    /// Exact integer as a decimal string.
    pub h_minus: String,
    pub computed_by: String,
}
