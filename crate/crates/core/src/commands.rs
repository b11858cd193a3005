//! The verification suites behind the command-line tool, each producing a
//! [`RunReport`].

use std::path::Path;
use std::time::Instant;

use crate::alon_tarsi::{eulerian_counts, find_at_orientation, is_alon_tarsi, Orientation};
use crate::choose::is_reducible_with_budget;
use crate::config::{load_catalog, Configuration};
use crate::discharge::{self, AuditItem, Variant};
use crate::error::{Error, Result};
use crate::fixture::parse_graphs;
use crate::graph::Graph;
use crate::merge::{classify_pairs, enumerate_merge_lists, identifiable_triples, verify_merged, MergedProof};
use crate::report::{RunReport, Verdict};

/// Fixture texts, either shipped or read from a directory.
#[derive(Debug, Clone)]
pub struct Fixtures {
    pub catalog: String,
    pub plane: String,
    pub graphs: String,
    pub orientations: String,
    pub ledgers: Vec<(Variant, String)>,
}

impl Fixtures {
    pub fn shipped() -> Self {
        Fixtures {
            catalog: include_str!("../fixtures/catalog.cfg").to_owned(),
            plane: discharge::PLANE_FIXTURES.to_owned(),
            graphs: include_str!("../fixtures/graphs.graph").to_owned(),
            orientations: include_str!("../fixtures/orientations.graph").to_owned(),
            ledgers: Variant::ALL.iter().map(|&v| (v, discharge::shipped_ledgers(v).to_owned())).collect(),
        }
    }

    /// Files present in `dir` replace the shipped ones: `catalog.cfg`,
    /// `plane.graph`, `graphs.graph`, `orientations.graph` and
    /// `ledgers/<variant>.led`.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        if !dir.is_dir() {
            return Err(Error::input(format!("fixture directory {} does not exist", dir.display())));
        }
        let mut fx = Fixtures::shipped();
        let read = |rel: &str, slot: &mut String| -> Result<()> {
            let p = dir.join(rel);
            if p.exists() {
                *slot = std::fs::read_to_string(&p).map_err(|e| Error::input(format!("{}: {e}", p.display())))?;
            }
            Ok(())
        };
        read("catalog.cfg", &mut fx.catalog)?;
        read("plane.graph", &mut fx.plane)?;
        read("graphs.graph", &mut fx.graphs)?;
        read("orientations.graph", &mut fx.orientations)?;
        for (v, text) in &mut fx.ledgers {
            read(&format!("ledgers/{v}.led"), text)?;
        }
        Ok(fx)
    }

    pub fn ledger(&self, v: Variant) -> &str {
        &self.ledgers.iter().find(|(w, _)| *w == v).expect("every variant has a ledger").1
    }
}

fn pick<'a>(confs: &'a [Configuration], names: &[String]) -> Result<Vec<&'a Configuration>> {
    if names.is_empty() {
        return Ok(confs.iter().collect());
    }
    names
        .iter()
        .map(|n| confs.iter().find(|c| &c.name == n).ok_or_else(|| Error::input(format!("no catalog entry `{n}`"))))
        .collect()
}

pub fn cmd_verify_catalog(fx: &Fixtures, names: &[String], budget: u64) -> Result<RunReport> {
    let confs = load_catalog(&fx.catalog)?;
    let mut r = RunReport::new("verify-catalog");
    for c in pick(&confs, names)? {
        let t = Instant::now();
        match is_reducible_with_budget(c, budget) {
            Ok(v) if v.choosable => {
                r.push(&c.name, Verdict::Pass, None, format!("reducible; {} assignments, {} nodes", v.assignments, v.nodes))
            }
            Ok(v) => r.push(
                &c.name,
                Verdict::Fail,
                None,
                format!("not reducible; witness {}", v.witness.map(|w| w.to_string()).unwrap_or_default()),
            ),
            Err(Error::Budget(m)) => r.push(&c.name, Verdict::Budget, None, m),
            Err(e) => r.push(&c.name, Verdict::Error, None, e.to_string()),
        }
        r = r.timed(t.elapsed());
    }
    Ok(r)
}

fn proof_detail(p: &MergedProof) -> String {
    match p {
        MergedProof::Exhaustive { nodes } => format!("exhaustive, {nodes} nodes"),
        MergedProof::AlonTarsi { orientation, ee, eo } => {
            format!("alon-tarsi {} EE={ee} EO={eo}", orientation.direction_string())
        }
    }
}

/// Classification of every pair of X, then a verdict on every list of
/// candidate pairs. Overflow pairs cannot coincide in a host graph and need
/// no check.
pub fn cmd_verify_merges(fx: &Fixtures, names: &[String], forbidden_len: usize, budget: u64) -> Result<RunReport> {
    if forbidden_len < 4 {
        return Err(Error::input("--forbidden-len must be at least 4"));
    }
    let confs = load_catalog(&fx.catalog)?;
    let default: Vec<String> = crate::merge::LARGE_ENTRIES.iter().map(|s| s.to_string()).collect();
    let names = if names.is_empty() { &default[..] } else { names };
    let mut r = RunReport::new("verify-merges");
    for c in pick(&confs, names)? {
        let verify = |r: &mut RunReport, item: String, m: &Configuration| {
            let t = Instant::now();
            match verify_merged(m, budget) {
                Ok(v) if v.reducible => r.push(&item, Verdict::Pass, None, proof_detail(v.proof.as_ref().unwrap())),
                Ok(v) => r.push(&item, Verdict::Fail, None, format!("not reducible; witness {}", v.witness.unwrap_or_default())),
                Err(Error::Budget(m)) => r.push(&item, Verdict::Budget, None, m),
                Err(e) => r.push(&item, Verdict::Error, None, e.to_string()),
            }
            *r = std::mem::take(r).timed(t.elapsed());
        };
        for (a, b, class) in classify_pairs(c, forbidden_len)? {
            r.push(format!("{}/pair {a}-{b}", c.name), Verdict::Pass, None, class.tag());
        }
        for list in enumerate_merge_lists(c, forbidden_len)? {
            let pairs: Vec<String> = list.pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            verify(&mut r, format!("{}/merge {}", c.name, pairs.join(",")), &list.merged);
        }
        let triples = identifiable_triples(c, forbidden_len)?;
        if triples.is_empty() {
            r.push(format!("{}/triples", c.name), Verdict::Pass, None, "no three vertices pairwise identifiable");
        } else {
            r.push(format!("{}/triples", c.name), Verdict::Fail, None, format!("{triples:?}"));
        }
    }
    Ok(r)
}

fn push_items(r: &mut RunReport, prefix: &str, items: Vec<AuditItem>) {
    for it in items {
        let verdict = if it.passed() { Verdict::Pass } else { Verdict::Fail };
        let mut detail = it.failures.join("; ");
        if !it.note.is_empty() {
            if !detail.is_empty() {
                detail.push_str("; ");
            }
            detail.push_str(&it.note);
        }
        r.push(format!("{prefix}/{}", it.name), verdict, it.value, detail);
    }
}

pub fn cmd_audit_discharging(fx: &Fixtures, variants: &[Variant]) -> Result<RunReport> {
    let variants = if variants.is_empty() { &Variant::ALL[..] } else { variants };
    let mut r = RunReport::new("audit-discharging");
    for &v in variants {
        let p = v.to_string();
        push_items(&mut r, &p, discharge::run_case_suite_on(v, fx.ledger(v))?);
        push_items(&mut r, &p, discharge::run_bound_suite(v)?);
        push_items(&mut r, &p, discharge::run_sum_suite(v, &fx.plane)?);
        if v == Variant::Cc7 {
            push_items(&mut r, &p, discharge::run_lp_suite());
        }
    }
    Ok(r)
}

/// `"2"` for a constant, or one value per vertex separated by commas.
pub fn parse_f_spec(spec: &str, n: usize) -> Result<Vec<usize>> {
    let vals: Vec<usize> = spec
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::input(format!("bad list size `{t}`"))))
        .collect::<Result<_>>()?;
    match vals.len() {
        1 => Ok(vec![vals[0]; n]),
        k if k == n => Ok(vals),
        k => Err(Error::input(format!("{k} list sizes for {n} vertices"))),
    }
}

/// Searches the named catalog entry or plain graph. `f` defaults to the
/// catalog's list sizes, or 2 everywhere for a plain graph.
pub fn cmd_find_at(fx: &Fixtures, name: &str, f: Option<&str>) -> Result<RunReport> {
    let confs = load_catalog(&fx.catalog)?;
    let (g, f): (Graph, Vec<usize>) = if let Some(c) = confs.iter().find(|c| c.name == name) {
        let f = match f {
            Some(s) => parse_f_spec(s, c.graph().vertex_count())?,
            None => c.f(),
        };
        (c.graph().clone(), f)
    } else {
        let gs = parse_graphs(&fx.graphs)?;
        let gf = gs.iter().find(|g| g.name == name).ok_or_else(|| Error::input(format!("no graph or entry `{name}`")))?;
        let f = parse_f_spec(f.unwrap_or("2"), gf.graph.vertex_count())?;
        (gf.graph.clone(), f)
    };
    let mut r = RunReport::new("find-at");
    let t = Instant::now();
    match find_at_orientation(&g, &f)? {
        Some(o) => {
            let p = eulerian_counts(&o)?;
            r.push(name, Verdict::Pass, None, format!("{} [{o}] EE={} EO={}", o.direction_string(), p.ee, p.eo));
        }
        None => r.push(name, Verdict::Fail, None, "none"),
    }
    r = r.timed(t.elapsed());
    for stored in parse_graphs(&fx.orientations)?.into_iter().filter(|s| s.name == name) {
        let item = format!("{name}/stored");
        match Orientation::from_arcs(g.clone(), &stored.arcs) {
            Ok(o) if stored.graph.vertex_count() == g.vertex_count() && stored.graph.edges() == g.edges() => {
                let ok = is_alon_tarsi(&o, &f)?;
                let p = eulerian_counts(&o)?;
                let v = if ok { Verdict::Pass } else { Verdict::Fail };
                r.push(item, v, None, format!("{} EE={} EO={}", o.direction_string(), p.ee, p.eo));
            }
            Ok(_) => r.push(item, Verdict::Fail, None, "stored orientation is of a different graph"),
            Err(e) => r.push(item, Verdict::Fail, None, e.to_string()),
        }
    }
    Ok(r)
}
