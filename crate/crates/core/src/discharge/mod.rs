//! Exact audits of discharging arguments: initial charge sums, per-case
//! ledgers, closed-form vertex and face bounds, and a small LP.

pub mod bounds;
pub mod ledger;
pub mod lp;
pub mod spec;
pub mod sums;

pub use bounds::{verify_face_bound, verify_vertex_bound, FaceProfile};
pub use ledger::{check_ledger, evaluate_ledger, parse_ledgers, ChargeLedger, LedgerSet};
pub use lp::{audit_lp, LpAudit};
pub use spec::{Rule, Variant};
pub use sums::audit_initial_sum;

use crate::error::{Error, Result};
use crate::fixture::{blocks, parse_graph_body};
use crate::graph::PlaneGraph;
use crate::rational::Rational;

pub const C5_LEDGERS: &str = include_str!("../../fixtures/ledgers/c5.led");
pub const CC6_LEDGERS: &str = include_str!("../../fixtures/ledgers/cc6.led");
pub const DCC67_LEDGERS: &str = include_str!("../../fixtures/ledgers/dcc67.led");
pub const CC7_LEDGERS: &str = include_str!("../../fixtures/ledgers/cc7.led");
pub const PLANE_FIXTURES: &str = include_str!("../../fixtures/plane.graph");

pub fn shipped_ledgers(variant: Variant) -> &'static str {
    match variant {
        Variant::C5 => C5_LEDGERS,
        Variant::Cc6 => CC6_LEDGERS,
        Variant::Dcc67 => DCC67_LEDGERS,
        Variant::Cc7 => CC7_LEDGERS,
    }
}

/// A plane graph with an optional precoloured set.
#[derive(Debug, Clone)]
pub struct PlaneFixture {
    pub name: String,
    pub plane: PlaneGraph,
    pub precolored: Vec<usize>,
}

pub fn parse_plane_fixtures(text: &str) -> Result<Vec<PlaneFixture>> {
    let mut out = Vec::new();
    for b in blocks(text)? {
        if b.kind != "graph" {
            return Err(Error::parse(b.header.number, format!("unknown block `{}`", b.kind)));
        }
        let mut precolored = Vec::new();
        let (graph, faces, _) = parse_graph_body(&b, |line| match line.keyword() {
            "precolored" => {
                precolored = line.args(1, "vertex")?;
                Ok(())
            }
            kw => Err(Error::parse(line.number, format!("unknown keyword `{kw}`"))),
        })?;
        let plane = PlaneGraph::new(graph, faces).map_err(|e| Error::parse(b.header.number, e.to_string()))?;
        out.push(PlaneFixture { name: b.name().to_owned(), plane, precolored });
    }
    Ok(out)
}

/// One checked line of a suite.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditItem {
    pub name: String,
    pub value: Option<Rational>,
    pub failures: Vec<String>,
    pub note: String,
}

impl AuditItem {
    fn new(name: impl Into<String>, value: Option<Rational>, failures: Vec<String>, note: impl Into<String>) -> Self {
        AuditItem { name: name.into(), value, failures, note: note.into() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every case and transfer of a ledger text, in file order. Cases of other
/// variants are an error.
pub fn run_case_suite_on(variant: Variant, text: &str) -> Result<Vec<AuditItem>> {
    let set = parse_ledgers(text)?;
    let mut out = Vec::new();
    for case in &set.cases {
        if case.variant != variant {
            return Err(Error::Ledger { case: case.name.clone(), msg: format!("belongs to {}, not {variant}", case.variant) });
        }
        let o = check_ledger(case)?;
        out.push(AuditItem::new(format!("case/{}", o.name), Some(o.value), o.failures, ""));
    }
    for t in &set.transfers {
        let f = ledger::check_transfer(&set, t);
        out.push(AuditItem::new(format!("transfer/{}", t.name), Some(t.from.1 + t.to.1), f, t.rule.to_string()));
    }
    Ok(out)
}

pub fn run_case_suite(variant: Variant) -> Result<Vec<AuditItem>> {
    run_case_suite_on(variant, shipped_ledgers(variant))
}

/// Vertex bounds for 4 ≤ d ≤ 60 and face bounds for 4 ≤ ℓ ≤ 60 under the
/// worst profile, plus the floor-free check beyond that range.
pub fn run_bound_suite(variant: Variant) -> Result<Vec<AuditItem>> {
    use crate::rational::int;
    let max = bounds::AUDIT_MAX;
    let mut out = Vec::new();
    for d in 4..=max {
        let v = verify_vertex_bound(variant, d)?;
        let strict = variant == Variant::Cc7 && d >= 7;
        let bad = if strict { v <= int(0) } else { v < int(0) };
        let f = if bad { vec![format!("bound {v} at degree {d}")] } else { vec![] };
        out.push(AuditItem::new(format!("vertex/d={d}"), Some(v), f, ""));
    }
    for l in 4..=max {
        let p = bounds::worst_face_profile(variant, l);
        let v = verify_face_bound(variant, l, &p)?;
        let f = if v < int(0) { vec![format!("bound {v} at length {l}")] } else { vec![] };
        out.push(AuditItem::new(format!("face/l={l}"), Some(v), f, ""));
    }
    for (what, (slope, icpt)) in [("vertex", bounds::vertex_relaxation(variant)), ("face", bounds::face_relaxation(variant))] {
        let v = slope * int(max as i64 + 1) + icpt;
        let ok = slope > int(0) && v >= int(0);
        let f = if ok { vec![] } else { vec![format!("relaxation {slope}*x + {icpt} fails past {max}")] };
        out.push(AuditItem::new(format!("{what}/relaxation"), Some(v), f, format!("slope {slope}")));
    }
    Ok(out)
}

/// Charge sums over the plane fixtures; the precoloured set only counts
/// under `Cc7`.
pub fn run_sum_suite(variant: Variant, text: &str) -> Result<Vec<AuditItem>> {
    let mut out = Vec::new();
    for fx in parse_plane_fixtures(text)? {
        let p = (variant == Variant::Cc7).then_some(&fx.precolored[..]);
        let (value, failures) = match audit_initial_sum(&fx.plane, variant, p) {
            Ok(v) => (Some(v), vec![]),
            Err(e) => (None, vec![e.to_string()]),
        };
        out.push(AuditItem::new(format!("sum/{}", fx.name), value, failures, ""));
    }
    Ok(out)
}

/// The LP as audit items; only meaningful for `Cc7`.
pub fn run_lp_suite() -> Vec<AuditItem> {
    let a = audit_lp();
    let mut out: Vec<AuditItem> =
        a.summary().into_iter().map(|(name, v, note)| AuditItem::new(format!("lp/{name}"), v, vec![], note)).collect();
    if !a.passes() {
        out.push(AuditItem::new("lp/verdict", None, vec!["no certificate above 4".into()], ""));
    }
    out
}
