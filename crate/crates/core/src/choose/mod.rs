//! List colorings, (f,s)-choosability and the path tools used by the templates.

pub mod canonical;
mod colorer;
mod engine;
mod grow;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub use canonical::{count_assignments, for_each_assignment};
pub use colorer::MaskColorer;

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// One sorted color list per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ListAssignment {
    pub lists: Vec<Vec<u32>>,
}

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<u32>>) -> Self {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        ListAssignment { lists }
    }

    pub fn from_masks(masks: &[u64]) -> Self {
        ListAssignment { lists: masks.iter().map(|&m| bits(m).map(|c| c as u32).collect()).collect() }
    }

    /// Renumbers colors by first use, scanning vertices in order and each list ascending.
    pub fn canonical(&self) -> Self {
        let mut map = BTreeMap::new();
        for l in &self.lists {
            for &c in l {
                let next = map.len() as u32;
                map.entry(c).or_insert(next);
            }
        }
        ListAssignment::new(self.lists.iter().map(|l| l.iter().map(|c| map[c]).collect()).collect())
    }

    /// Checks list sizes, the edge caps and the disjointness of adjacent 1-lists.
    pub fn validate(&self, g: &Graph, f: &[usize], s: usize) -> Result<()> {
        if self.lists.len() != g.vertex_count() || f.len() != g.vertex_count() {
            return Err(Error::input("assignment, f and graph disagree on vertex count"));
        }
        for (v, l) in self.lists.iter().enumerate() {
            if l.len() < f[v] {
                return Err(Error::input(format!("list of {v} has {} < f = {} colors", l.len(), f[v])));
            }
        }
        for (u, v) in g.edges() {
            let shared = self.lists[u].iter().filter(|c| self.lists[v].binary_search(c).is_ok()).count();
            let cap = canonical::edge_cap(f, s, u, v);
            if shared > cap {
                return Err(Error::input(format!("lists of {u} and {v} share {shared} > {cap} colors")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ListAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, l) in self.lists.iter().enumerate() {
            if v > 0 {
                f.write_str(" ")?;
            }
            let cs: Vec<String> = l.iter().map(u32::to_string).collect();
            write!(f, "{{{}}}", cs.join(","))?;
        }
        Ok(())
    }
}

/// A proper coloring from the lists, or `None`. Exact.
pub fn find_coloring(g: &Graph, lists: &ListAssignment) -> Option<Vec<u32>> {
    let n = g.vertex_count();
    assert_eq!(lists.lists.len(), n, "one list per vertex");
    let palette: Vec<u32> = {
        let mut p: Vec<u32> = lists.lists.iter().flatten().copied().collect();
        p.sort_unstable();
        p.dedup();
        p
    };
    if palette.len() <= 64 {
        let masks: Vec<u64> = lists
            .lists
            .iter()
            .map(|l| l.iter().fold(0u64, |m, c| m | 1 << palette.binary_search(c).unwrap()))
            .collect();
        let mut out = vec![0u8; n];
        let mut nodes = 0;
        return MaskColorer::new(g)
            .solve(&masks, &mut nodes, Some(&mut out))
            .then(|| out.iter().map(|&i| palette[i as usize]).collect());
    }
    // Wide palettes: plain backtracking in the same vertex order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.adj_mask(v).count_ones()), v));
    fn go(g: &Graph, lists: &[Vec<u32>], order: &[usize], col: &mut [Option<u32>]) -> bool {
        let Some((&v, rest)) = order.split_first() else { return true };
        for &c in &lists[v] {
            if g.neighbors(v).any(|w| col[w] == Some(c)) {
                continue;
            }
            col[v] = Some(c);
            if go(g, lists, rest, col) {
                return true;
            }
        }
        col[v] = None;
        false
    }
    let mut col = vec![None; n];
    go(g, &lists.lists, &order, &mut col).then(|| col.into_iter().map(Option::unwrap).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoosabilityVerdict {
    pub choosable: bool,
    pub witness: Option<ListAssignment>,
    /// Assignments handed to the colorer.
    pub assignments: u64,
    /// Search nodes, enumeration and coloring combined.
    pub nodes: u64,
}

/// Decides (f,s)-choosability. A failing verdict carries the first
/// uncolorable assignment met by the search, in canonical form.
pub fn is_fs_choosable(g: &Graph, f: &[usize], s: usize) -> Result<ChoosabilityVerdict> {
    is_fs_choosable_with_budget(g, f, s, DEFAULT_BUDGET)
}

pub fn is_fs_choosable_with_budget(g: &Graph, f: &[usize], s: usize, budget: u64) -> Result<ChoosabilityVerdict> {
    let mut engine = engine::Engine::new(g, f, s, budget)?;
    let found = engine.check(engine.full_mask())?;
    let witness = found.map(|sups| {
        let mut lists = vec![Vec::new(); g.vertex_count()];
        for (c, &m) in sups.iter().enumerate() {
            for u in bits(m) {
                lists[u].push(c as u32);
            }
        }
        // vertices outside the failing subgraph get private colors
        let mut next = sups.len() as u32;
        for (v, l) in lists.iter_mut().enumerate() {
            if l.is_empty() {
                l.extend(next..next + f[v] as u32);
                next += f[v] as u32;
            }
        }
        ListAssignment::new(lists).canonical()
    });
    Ok(ChoosabilityVerdict { choosable: witness.is_none(), witness, assignments: engine.assignments, nodes: engine.nodes })
}

/// Same question answered over the full canonical stream. Much slower;
/// kept as an independent check for small graphs.
pub fn is_fs_choosable_exhaustive(g: &Graph, f: &[usize], s: usize) -> Result<ChoosabilityVerdict> {
    let colorer = MaskColorer::new(g);
    let (mut assignments, mut nodes) = (0u64, 0u64);
    let mut witness = None;
    for_each_assignment(g, f, s, |lists| {
        assignments += 1;
        if colorer.solve(lists, &mut nodes, None) {
            ControlFlow::Continue(())
        } else {
            witness = Some(ListAssignment::from_masks(lists));
            ControlFlow::Break(())
        }
    })?;
    Ok(ChoosabilityVerdict { choosable: witness.is_none(), witness, assignments, nodes })
}

pub fn is_reducible(conf: &Configuration) -> Result<ChoosabilityVerdict> {
    is_fs_choosable(conf.graph(), &conf.f(), 2)
}

pub fn is_reducible_with_budget(conf: &Configuration, budget: u64) -> Result<ChoosabilityVerdict> {
    is_fs_choosable_with_budget(conf.graph(), &conf.f(), 2, budget)
}

/// 2-lists around an odd cycle: colorable unless every list is the same.
pub fn odd_cycle_2list_colorable(lists: &[Vec<u32>]) -> Result<bool> {
    if lists.len() % 2 == 0 || lists.len() < 3 {
        return Err(Error::input(format!("need an odd cycle, got {} lists", lists.len())));
    }
    let norm = ListAssignment::new(lists.to_vec());
    if norm.lists.iter().any(|l| l.len() != 2) {
        return Err(Error::input("every list must have exactly two colors"));
    }
    Ok(norm.lists.iter().any(|l| *l != norm.lists[0]))
}

/// `odd_cycle_2list_colorable` over bitmask lists.
pub fn odd_cycle_2mask_colorable(lists: &[u64]) -> Result<bool> {
    if lists.len() % 2 == 0 || lists.len() < 3 {
        return Err(Error::input(format!("need an odd cycle, got {} lists", lists.len())));
    }
    if lists.iter().any(|l| l.count_ones() != 2) {
        return Err(Error::input("every list must have exactly two colors"));
    }
    Ok(lists.iter().any(|&l| l != lists[0]))
}

/// A path `u = p_0, ..., p_k = v` with lists, optionally carrying a tripod:
/// a vertex `z` adjacent to the consecutive internal pair `p_x, p_{x+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListPath {
    pub lists: Vec<Vec<u32>>,
    pub tripod: Option<Tripod>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tripod {
    pub x: usize,
    pub z_list: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathEnd {
    Start,
    End,
}

impl ListPath {
    /// Internal vertices need 2 colors, the tripod pair 3 and `z` exactly one.
    pub fn validate(&self) -> Result<()> {
        let k = self.lists.len();
        if k < 2 {
            return Err(Error::input("a path needs two endpoints"));
        }
        let pair = match &self.tripod {
            Some(t) => {
                if t.x == 0 || t.x + 1 >= k - 1 {
                    return Err(Error::input(format!("tripod at {} is not an internal pair", t.x)));
                }
                if ListAssignment::new(vec![t.z_list.clone()]).lists[0].len() != 1 {
                    return Err(Error::input("the tripod apex takes a single color"));
                }
                Some(t.x)
            }
            None => None,
        };
        let norm = ListAssignment::new(self.lists.clone());
        if norm.lists[0].is_empty() || norm.lists[k - 1].is_empty() {
            return Err(Error::input("endpoint lists must be nonempty"));
        }
        for i in 1..k - 1 {
            let want = if pair.is_some_and(|x| i == x || i == x + 1) { 3 } else { 2 };
            if norm.lists[i].len() != want {
                return Err(Error::input(format!("internal vertex {i} needs {want} colors")));
            }
        }
        Ok(())
    }

    fn graph(&self) -> Graph {
        let k = self.lists.len();
        let mut g = Graph::new(k + self.tripod.is_some() as usize).unwrap();
        for i in 1..k {
            g.add_edge(i - 1, i).unwrap();
        }
        if let Some(t) = &self.tripod {
            g.add_edge(k, t.x).unwrap();
            g.add_edge(k, t.x + 1).unwrap();
        }
        g
    }

    /// Colors of the far endpoint that block every extension once `end` is colored `a`.
    pub fn block_set(&self, end: PathEnd, a: u32) -> Result<Vec<u32>> {
        self.validate()?;
        let k = self.lists.len();
        let (near, far) = match end {
            PathEnd::Start => (0, k - 1),
            PathEnd::End => (k - 1, 0),
        };
        let g = self.graph();
        let mut lists = self.lists.clone();
        if let Some(t) = &self.tripod {
            lists.push(t.z_list.clone());
        }
        lists[near] = vec![a];
        let mut blocked = Vec::new();
        for &b in &ListAssignment::new(self.lists.clone()).lists[far] {
            let mut trial = lists.clone();
            trial[far] = vec![b];
            if find_coloring(&g, &ListAssignment::new(trial)).is_none() {
                blocked.push(b);
            }
        }
        Ok(blocked)
    }
}

pub fn path_block_set(p: &ListPath, end: PathEnd, a: u32) -> Result<Vec<u32>> {
    p.block_set(end, a)
}
