//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitsets,
//! plus plane graphs carrying explicit face boundary walks.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
    labels: Vec<Option<String>>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::input(format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
        }
        Ok(Graph { adj: vec![0; n], labels: vec![None; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle length must be at least 3")
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.adj.len() {
            return Err(Error::input(format!("vertex {v} out of range (n = {})", self.adj.len())));
        }
        Ok(())
    }

    /// Rejects loops and repeated edges.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::input(format!("loop at {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::input(format!("repeated edge {u}-{v}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && v < self.adj.len() && self.adj[u] >> v & 1 == 1
    }

    pub fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.adj.len() {
            for v in bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) -> Result<()> {
        self.check(v)?;
        self.labels[v] = Some(label.into());
        Ok(())
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(v).and_then(|l| l.as_deref())
    }

    /// BFS distances; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.adj.len()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.distances_from(u)[v]
    }

    pub fn is_connected(&self) -> bool {
        self.adj.is_empty() || self.distances_from(0).iter().all(|&d| d != usize::MAX)
    }

    /// Graph on the vertices of `keep`, renumbered in increasing order.
    pub fn induced(&self, keep: u64) -> Graph {
        let verts: Vec<usize> = bits(keep).collect();
        let mut g = Graph::new(verts.len()).unwrap();
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }

    /// All simple cycles of length 3..=max_len. Each cycle is reported once,
    /// starting at its smallest vertex and walking towards the smaller of
    /// that vertex's two cycle neighbours.
    pub fn enumerate_cycles(&self, max_len: usize) -> Result<Vec<Vec<usize>>> {
        if max_len < 3 {
            return Err(Error::pre("max_len must be at least 3"));
        }
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(max_len);
        for s in 0..self.adj.len() {
            path.push(s);
            self.extend_cycles(s, 1 << s, max_len, &mut path, &mut out);
            path.pop();
        }
        Ok(out)
    }

    fn extend_cycles(&self, s: usize, used: u64, max_len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if path.len() >= 3 && self.has_edge(last, s) && path[1] < last {
            out.push(path.clone());
        }
        if path.len() == max_len {
            return;
        }
        // only vertices larger than the start, so the start is the minimum
        let above = !((2u64 << s) - 1);
        for w in bits(self.adj[last] & !used & above) {
            path.push(w);
            self.extend_cycles(s, used | 1 << w, max_len, path, out);
            path.pop();
        }
    }

    /// Number of edges joining non-consecutive vertices of `cycle`.
    pub fn chord_count(&self, cycle: &[usize]) -> usize {
        let k = cycle.len();
        let mut count = 0;
        for i in 0..k {
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                if self.has_edge(cycle[i], cycle[j]) {
                    count += 1;
                }
            }
        }
        count
    }

    fn cycles_of_len(&self, len: usize) -> impl Iterator<Item = Vec<usize>> {
        self.enumerate_cycles(len).unwrap().into_iter().filter(move |c| c.len() == len)
    }

    pub fn contains_chorded_cycle(&self, len: usize) -> Result<bool> {
        if len < 4 {
            return Err(Error::pre("chorded cycles need length at least 4"));
        }
        Ok(self.cycles_of_len(len).any(|c| self.chord_count(&c) >= 1))
    }

    pub fn contains_doubly_chorded_cycle(&self, len: usize) -> Result<bool> {
        if len < 5 {
            return Err(Error::pre("doubly chorded cycles need length at least 5"));
        }
        Ok(self.cycles_of_len(len).any(|c| self.chord_count(&c) >= 2))
    }
}

/// Indices of the set bits of `m`, ascending.
pub fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

/// A connected graph with its faces given as closed boundary walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    pub graph: Graph,
    pub faces: Vec<Vec<usize>>,
}

impl PlaneGraph {
    pub fn new(graph: Graph, faces: Vec<Vec<usize>>) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::Audit("plane graph is disconnected".into()));
        }
        let edges = graph.edges();
        let mut seen = vec![0usize; edges.len()];
        for (fi, walk) in faces.iter().enumerate() {
            if walk.is_empty() {
                return Err(Error::input(format!("face {fi} is empty")));
            }
            for i in 0..walk.len() {
                let (a, b) = (walk[i], walk[(i + 1) % walk.len()]);
                let key = (a.min(b), a.max(b));
                match edges.binary_search(&key) {
                    Ok(k) => seen[k] += 1,
                    Err(_) => return Err(Error::input(format!("face {fi} steps along non-edge {a}-{b}"))),
                }
            }
        }
        if let Some(k) = seen.iter().position(|&c| c != 2) {
            let (u, v) = edges[k];
            return Err(Error::input(format!("edge {u}-{v} lies on {} face walks, expected 2", seen[k])));
        }
        let (n, m, f) = (graph.vertex_count() as i64, edges.len() as i64, faces.len() as i64);
        if n - m + f != 2 {
            return Err(Error::input(format!("Euler check fails: {n} - {m} + {f} != 2")));
        }
        Ok(PlaneGraph { graph, faces })
    }

    pub fn face_len(&self, f: usize) -> usize {
        self.faces[f].len()
    }
}
