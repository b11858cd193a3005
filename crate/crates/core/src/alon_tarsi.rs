//! Orientations, Eulerian parity counts and the Alon-Tarsi search.
//!
//! An orientation certifies f-choosability when every out-degree is below
//! f and the even and odd Eulerian subgraphs differ in number.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_COUNT_EDGES: usize = 30;
pub const MAX_SEARCH_EDGES: usize = 20;

/// Directions indexed like `base.edges()`; `true` reverses the edge, so
/// `(u, v)` with `u < v` points from `v` to `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    base: Graph,
    flip: Vec<bool>,
}

impl Orientation {
    pub fn from_flips(base: Graph, flip: Vec<bool>) -> Result<Self> {
        if flip.len() != base.edge_count() {
            return Err(Error::input(format!("{} directions for {} edges", flip.len(), base.edge_count())));
        }
        Ok(Orientation { base, flip })
    }

    /// From a list of arcs covering every edge exactly once.
    pub fn from_arcs(base: Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let edges = base.edges();
        let mut flip = vec![None; edges.len()];
        for &(u, v) in arcs {
            let k = edges
                .binary_search(&(u.min(v), u.max(v)))
                .map_err(|_| Error::input(format!("arc {u}->{v} is not an edge")))?;
            if flip[k].replace(u > v).is_some() {
                return Err(Error::input(format!("edge {u}-{v} oriented twice")));
            }
        }
        if let Some(k) = flip.iter().position(Option::is_none) {
            let (u, v) = edges[k];
            return Err(Error::input(format!("edge {u}-{v} has no direction")));
        }
        Ok(Orientation { base, flip: flip.into_iter().map(Option::unwrap).collect() })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn flips(&self) -> &[bool] {
        &self.flip
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.base
            .edges()
            .into_iter()
            .zip(&self.flip)
            .map(|((u, v), &r)| if r { (v, u) } else { (u, v) })
            .collect()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut out = vec![0; self.base.vertex_count()];
        for (u, _) in self.arcs() {
            out[u] += 1;
        }
        out
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.base.vertex_count()];
        for (_, v) in self.arcs() {
            d[v] += 1;
        }
        d
    }

    pub fn reversed(&self) -> Orientation {
        Orientation { base: self.base.clone(), flip: self.flip.iter().map(|r| !r).collect() }
    }

    /// The direction vector as a 0/1 string, first edge first.
    pub fn direction_string(&self) -> String {
        self.flip.iter().map(|&r| if r { '1' } else { '0' }).collect()
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self.arcs().iter().map(|(u, v)| format!("{u}>{v}")).collect();
        f.write_str(&arcs.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerianParity {
    pub ee: u64,
    pub eo: u64,
}

/// Counts arc subsets in which every vertex has equal in- and out-degree,
/// split by parity of size. Arcs are decided one at a time; a vertex whose
/// last arc has been decided must be balanced, and no vertex may drift
/// further from balance than its undecided arcs can repair.
pub fn eulerian_counts(d: &Orientation) -> Result<EulerianParity> {
    let arcs = d.arcs();
    if arcs.len() > MAX_COUNT_EDGES {
        return Err(Error::Budget(format!("{} edges exceeds the counting cap of {MAX_COUNT_EDGES}", arcs.len())));
    }
    Ok(count_balanced(&arcs, d.base.vertex_count()))
}

fn count_balanced(arcs: &[(usize, usize)], n: usize) -> EulerianParity {
    // remaining[i][v]: arcs at v with index >= i
    let mut remaining = vec![vec![0i32; n]; arcs.len() + 1];
    for i in (0..arcs.len()).rev() {
        remaining[i] = remaining[i + 1].clone();
        remaining[i][arcs[i].0] += 1;
        remaining[i][arcs[i].1] += 1;
    }
    let mut balance = vec![0i32; n];
    let mut counts = [0u64; 2];
    fn go(i: usize, size: usize, arcs: &[(usize, usize)], rem: &[Vec<i32>], bal: &mut [i32], counts: &mut [u64; 2]) {
        if i == arcs.len() {
            counts[size % 2] += 1;
            return;
        }
        let (u, v) = arcs[i];
        for take in [false, true] {
            if take {
                bal[u] += 1;
                bal[v] -= 1;
            }
            if bal[u].abs() <= rem[i + 1][u] && bal[v].abs() <= rem[i + 1][v] {
                go(i + 1, size + take as usize, arcs, rem, bal, counts);
            }
            if take {
                bal[u] -= 1;
                bal[v] += 1;
            }
        }
    }
    go(0, 0, arcs, &remaining, &mut balance, &mut counts);
    EulerianParity { ee: counts[0], eo: counts[1] }
}

pub fn is_alon_tarsi(d: &Orientation, f: &[usize]) -> Result<bool> {
    if f.len() != d.base.vertex_count() {
        return Err(Error::input("f must cover every vertex"));
    }
    if d.out_degrees().iter().zip(f).any(|(&o, &k)| o + 1 > k) {
        return Ok(false);
    }
    let p = eulerian_counts(d)?;
    Ok(p.ee != p.eo)
}

/// The lexicographically first orientation passing `is_alon_tarsi`, with
/// direction vectors compared first edge first and `false < true`.
pub fn find_at_orientation(g: &Graph, f: &[usize]) -> Result<Option<Orientation>> {
    let edges = g.edges();
    if edges.len() > MAX_SEARCH_EDGES {
        return Err(Error::Budget(format!("{} edges exceeds the search cap of {MAX_SEARCH_EDGES}", edges.len())));
    }
    if f.len() != g.vertex_count() || f.contains(&0) {
        return Err(Error::input("f must be positive on every vertex"));
    }
    let slack_total: usize = f.iter().map(|k| k - 1).sum();
    if slack_total < edges.len() {
        return Ok(None);
    }
    let mut flip = vec![false; edges.len()];
    let mut out = vec![0usize; g.vertex_count()];
    let found = sweep(0, &edges, f, &mut out, &mut flip, slack_total);
    Ok(found.then(|| Orientation { base: g.clone(), flip }))
}

fn sweep(i: usize, edges: &[(usize, usize)], f: &[usize], out: &mut [usize], flip: &mut [bool], room: usize) -> bool {
    if i == edges.len() {
        let arcs: Vec<(usize, usize)> =
            edges.iter().zip(flip.iter()).map(|(&(u, v), &r)| if r { (v, u) } else { (u, v) }).collect();
        let p = count_balanced(&arcs, out.len());
        return p.ee != p.eo;
    }
    // every remaining edge still needs a unit of out-degree room somewhere
    if room < edges.len() - i {
        return false;
    }
    let (u, v) = edges[i];
    for r in [false, true] {
        let tail = if r { v } else { u };
        if out[tail] + 1 < f[tail] {
            out[tail] += 1;
            flip[i] = r;
            if sweep(i + 1, edges, f, out, flip, room - 1) {
                return true;
            }
            out[tail] -= 1;
        }
    }
    flip[i] = false;
    false
}
