//! Identifying pairs of configuration vertices, and isomorphism classes of
//! the results.

use std::collections::BTreeSet;

use crate::alon_tarsi::{eulerian_counts, find_at_orientation, Orientation};
use crate::choose::is_reducible_with_budget;
use crate::config::{Configuration, ExtDegree};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Catalog entries large enough that their X vertices may coincide in a
/// host graph, in catalog order.
pub const LARGE_ENTRIES: [&str; 13] =
    ["d2", "d1", "d9", "d7", "bigneedy", "3paths", "3pathsB", "d5", "d6", "d8", "lastconf", "d4", "d4b"];

/// Node budget for the exhaustive check of a merged configuration before
/// falling back to an orientation.
pub const MERGE_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MergeClassification {
    /// Distance at most 2: the merge would create a loop or a multi-edge.
    TooClose,
    /// The merged graph has a chorded cycle of the forbidden length.
    CreatesChord,
    /// The merged vertex would need more edges than either original allows
    /// in the host graph. Carries the merge with `ex = 0` at that vertex.
    DegreeOverflow(Configuration),
    Candidate(Configuration),
}

impl MergeClassification {
    pub fn tag(&self) -> &'static str {
        match self {
            MergeClassification::TooClose => "too-close",
            MergeClassification::CreatesChord => "chord",
            MergeClassification::DegreeOverflow(_) => "overflow",
            MergeClassification::Candidate(_) => "candidate",
        }
    }

    pub fn merged(&self) -> Option<&Configuration> {
        match self {
            MergeClassification::DegreeOverflow(c) | MergeClassification::Candidate(c) => Some(c),
            _ => None,
        }
    }
}

fn finite(e: ExtDegree) -> Result<i64> {
    match e {
        ExtDegree::Finite(k) => Ok(k as i64),
        ExtDegree::Inf => Err(Error::pre("merged vertices must lie in X")),
    }
}

/// Identifies `a` and `b`, keeping the lower index and shifting the vertices
/// above the higher one down by one. Returns the merge and the unclamped
/// external degree of the merged vertex.
fn identify(conf: &Configuration, a: usize, b: usize) -> Result<(Configuration, i64)> {
    let (keep, gone) = (a.min(b), a.max(b));
    let g = conf.graph();
    let n = g.vertex_count();
    let map = |v: usize| if v == gone { keep } else if v > gone { v - 1 } else { v };
    let mut h = Graph::new(n - 1)?;
    for (u, v) in g.edges() {
        let (x, y) = (map(u), map(v));
        if x != y && !h.has_edge(x, y) {
            h.add_edge(x, y)?;
        }
    }
    for v in (0..n).filter(|&v| v != gone) {
        if let Some(l) = g.label(v) {
            h.set_label(map(v), l)?;
        }
    }
    let room = |v: usize| -> Result<i64> { Ok(g.degree(v)? as i64 + finite(conf.ex(v))?) };
    let ex_keep = room(a)?.min(room(b)?) - h.degree(keep)? as i64;
    let mut ex: Vec<ExtDegree> = (0..n).filter(|&v| v != gone).map(|v| conf.ex(v)).collect();
    ex[keep] = ExtDegree::Finite(ex_keep.clamp(0, 2) as u8);
    let xs: Vec<usize> = conf.x_vertices().into_iter().filter(|&v| v != gone).map(map).collect();
    let merged = Configuration::new(format!("{}/{keep}={gone}", conf.name), h, &xs, ex)?;
    Ok((merged, ex_keep))
}

pub fn merge_pair(conf: &Configuration, a: usize, b: usize, forbidden_len: usize) -> Result<MergeClassification> {
    if forbidden_len < 4 {
        return Err(Error::input("the forbidden chorded cycle needs length at least 4"));
    }
    if a == b || !conf.in_x(a) || !conf.in_x(b) {
        return Err(Error::pre(format!("{a} and {b} must be distinct vertices of X")));
    }
    if conf.graph().distance(a, b) <= 2 {
        return Ok(MergeClassification::TooClose);
    }
    let (merged, ex) = identify(conf, a, b)?;
    if merged.graph().contains_chorded_cycle(forbidden_len)? {
        return Ok(MergeClassification::CreatesChord);
    }
    Ok(if ex < 0 { MergeClassification::DegreeOverflow(merged) } else { MergeClassification::Candidate(merged) })
}

/// Every pair of X with its classification, pairs in increasing order.
pub fn classify_pairs(conf: &Configuration, forbidden_len: usize) -> Result<Vec<(usize, usize, MergeClassification)>> {
    let xs = conf.x_vertices();
    let mut out = Vec::new();
    for (i, &a) in xs.iter().enumerate() {
        for &b in &xs[i + 1..] {
            out.push((a, b, merge_pair(conf, a, b, forbidden_len)?));
        }
    }
    Ok(out)
}

/// A sequence of identifications, named by original vertices (each merged
/// vertex by the lowest original it absorbed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeList {
    pub pairs: Vec<(usize, usize)>,
    pub merged: Configuration,
}

/// All lists of pairs that are candidates at each step, one per
/// isomorphism class of the result, in breadth-first order.
pub fn enumerate_merge_lists(conf: &Configuration, forbidden_len: usize) -> Result<Vec<MergeList>> {
    let mut seen = BTreeSet::new();
    seen.insert(canonical_form(conf));
    let mut out = Vec::new();
    let mut layer: Vec<(Vec<(usize, usize)>, Configuration, Vec<usize>)> =
        vec![(Vec::new(), conf.clone(), (0..conf.graph().vertex_count()).collect())];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for (pairs, cur, orig) in &layer {
            for (a, b, class) in classify_pairs(cur, forbidden_len)? {
                let MergeClassification::Candidate(m) = class else { continue };
                if !seen.insert(canonical_form(&m)) {
                    continue;
                }
                let mut p = pairs.clone();
                p.push((orig[a], orig[b]));
                let mut o: Vec<usize> = orig.clone();
                o[a] = o[a].min(o[b]);
                o.remove(b);
                out.push(MergeList { pairs: p.clone(), merged: m.clone() });
                next.push((p, m, o));
            }
        }
        layer = next;
    }
    Ok(out)
}

/// Triples of X in which every pair is a candidate or an overflow.
pub fn identifiable_triples(conf: &Configuration, forbidden_len: usize) -> Result<Vec<[usize; 3]>> {
    let pairs = classify_pairs(conf, forbidden_len)?;
    let ok = |a: usize, b: usize| {
        pairs.iter().any(|(x, y, c)| (*x, *y) == (a.min(b), a.max(b)) && c.merged().is_some())
    };
    let xs = conf.x_vertices();
    let mut out = Vec::new();
    for (i, &a) in xs.iter().enumerate() {
        for (j, &b) in xs.iter().enumerate().skip(i + 1) {
            for &c in &xs[j + 1..] {
                if ok(a, b) && ok(a, c) && ok(b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MergedProof {
    /// Every list assignment was colored.
    Exhaustive { nodes: u64 },
    /// The exhaustive check ran out of budget; an orientation with
    /// out-degrees below f and unequal even/odd Eulerian counts was found.
    AlonTarsi { orientation: Orientation, ee: u64, eo: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergedVerdict {
    pub reducible: bool,
    pub proof: Option<MergedProof>,
    /// A failing assignment when not reducible.
    pub witness: Option<String>,
}

/// Reducibility of a merged configuration: the exhaustive engine within
/// `budget` nodes, else an Alon-Tarsi orientation. Fails with a budget
/// error only when neither settles it.
pub fn verify_merged(conf: &Configuration, budget: u64) -> Result<MergedVerdict> {
    match is_reducible_with_budget(conf, budget) {
        Ok(v) if v.choosable => {
            Ok(MergedVerdict { reducible: true, proof: Some(MergedProof::Exhaustive { nodes: v.nodes }), witness: None })
        }
        Ok(v) => Ok(MergedVerdict { reducible: false, proof: None, witness: v.witness.map(|w| w.to_string()) }),
        Err(Error::Budget(msg)) => match find_at_orientation(conf.graph(), &conf.f())? {
            Some(orientation) => {
                let p = eulerian_counts(&orientation)?;
                Ok(MergedVerdict {
                    reducible: true,
                    proof: Some(MergedProof::AlonTarsi { orientation, ee: p.ee, eo: p.eo }),
                    witness: None,
                })
            }
            None => Err(Error::Budget(format!("{msg}; no orientation either"))),
        },
        Err(e) => Err(e),
    }
}

/// Isomorphism invariant of a configuration: vertex labels (the external
/// degree, `3` standing for a vertex outside X) and adjacency rows in the
/// lexicographically least vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub labels: Vec<u8>,
    pub rows: Vec<u64>,
}

fn label(conf: &Configuration, v: usize) -> u8 {
    match (conf.in_x(v), conf.ex(v)) {
        (true, ExtDegree::Finite(k)) => k,
        _ => 3,
    }
}

/// Vertices are first split by label, degree and the multiset of their
/// neighbours' labels and degrees; the order is then searched within those
/// classes, pruning any prefix whose rows already exceed the best found.
pub fn canonical_form(conf: &Configuration) -> CanonicalForm {
    let g = conf.graph();
    let n = g.vertex_count();
    let inv: Vec<(u8, usize, Vec<(u8, usize)>)> = (0..n)
        .map(|v| {
            let mut nb: Vec<(u8, usize)> = g.neighbors(v).map(|u| (label(conf, u), g.adj_mask(u).count_ones() as usize)).collect();
            nb.sort_unstable();
            (label(conf, v), g.adj_mask(v).count_ones() as usize, nb)
        })
        .collect();
    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    let slot_inv: Vec<&(u8, usize, Vec<(u8, usize)>)> = slots.iter().map(|&v| &inv[v]).collect();

    struct Search<'a> {
        g: &'a Graph,
        inv: &'a [(u8, usize, Vec<(u8, usize)>)],
        slot_inv: Vec<&'a (u8, usize, Vec<(u8, usize)>)>,
        placed: Vec<usize>,
        rows: Vec<u64>,
        best: Option<Vec<u64>>,
    }
    impl Search<'_> {
        fn go(&mut self, used: u64) {
            let p = self.placed.len();
            if p == self.inv.len() {
                if self.best.as_ref().is_none_or(|b| self.rows < *b) {
                    self.best = Some(self.rows.clone());
                }
                return;
            }
            for v in 0..self.inv.len() {
                if used >> v & 1 == 1 || &self.inv[v] != self.slot_inv[p] {
                    continue;
                }
                let row = self.placed.iter().enumerate().fold(0u64, |m, (i, &u)| m | (self.g.has_edge(u, v) as u64) << i);
                self.rows.push(row);
                if self.best.as_ref().is_some_and(|b| self.rows[..] > b[..=p]) {
                    self.rows.pop();
                    continue;
                }
                self.placed.push(v);
                self.go(used | 1 << v);
                self.placed.pop();
                self.rows.pop();
            }
        }
    }
    let mut s = Search { g, inv: &inv, slot_inv, placed: Vec::new(), rows: Vec::new(), best: None };
    s.go(0);
    CanonicalForm { labels: slots.iter().map(|&v| inv[v].0).collect(), rows: s.best.unwrap_or_default() }
}

/// Relabels a configuration by `perm` (new index of each old vertex).
pub fn permute(conf: &Configuration, perm: &[usize]) -> Result<Configuration> {
    let g = conf.graph();
    let n = g.vertex_count();
    if perm.len() != n || perm.iter().collect::<BTreeSet<_>>().len() != n || perm.iter().any(|&p| p >= n) {
        return Err(Error::input("not a permutation of the vertices"));
    }
    let mut h = Graph::new(n)?;
    for (u, v) in g.edges() {
        h.add_edge(perm[u], perm[v])?;
    }
    let mut ex = vec![ExtDegree::Inf; n];
    for v in 0..n {
        ex[perm[v]] = conf.ex(v);
    }
    let xs: Vec<usize> = bits(conf.x_mask()).map(|v| perm[v]).collect();
    Configuration::new(conf.name.clone(), h, &xs, ex)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_conf(n: usize) -> Configuration {
        Configuration::new("p", Graph::path(n), &(0..n).collect::<Vec<_>>(), vec![ExtDegree::Finite(2); n]).unwrap()
    }

    #[test]
    fn distance_rule() {
        let p = path_conf(5);
        assert_eq!(merge_pair(&p, 0, 2, 5).unwrap(), MergeClassification::TooClose);
        assert!(merge_pair(&p, 0, 1, 5).unwrap() == MergeClassification::TooClose);
        assert!(merge_pair(&p, 0, 0, 5).is_err());
        assert!(merge_pair(&p, 0, 3, 3).is_err());
    }

    #[test]
    fn merge_closes_a_cycle() {
        // path 0-1-2-3: merging the ends gives a triangle, ex limited by degrees
        let p = path_conf(4);
        match merge_pair(&p, 0, 3, 5).unwrap() {
            MergeClassification::Candidate(m) => {
                assert_eq!(m.graph().vertex_count(), 3);
                assert_eq!(m.graph().edge_count(), 3);
                assert_eq!(m.ex(0), ExtDegree::Finite(1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn canonical_form_is_invariant() {
        let p = path_conf(6);
        let q = permute(&p, &[3, 1, 5, 0, 2, 4]).unwrap();
        assert_eq!(canonical_form(&p), canonical_form(&q));
        let c = Configuration::new("c", Graph::cycle(6), &[0, 1, 2, 3, 4, 5], vec![ExtDegree::Finite(2); 6]).unwrap();
        assert_ne!(canonical_form(&p), canonical_form(&c));
    }
}
