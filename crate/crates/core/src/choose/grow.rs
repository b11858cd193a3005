//! Vertex-by-vertex search over hard assignments of one induced subgraph.
//!
//! Lists are grown one vertex at a time, as in the canonical stream: colors
//! whose supports so far coincide form a class, and a new list takes the
//! lowest few colors of some classes plus fresh ones. On top of that, every
//! branch must stay consistent with a worst case of the following shape:
//!
//! * each support induces a connected subgraph of at least two vertices;
//! * no vertex, and no small connected set of vertices, is free: colorable
//!   last whatever its neighbours receive;
//! * no two colors with disjoint, adjacent supports can be fused.
//!
//! Each condition is tested as soon as the data it looks at is final.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

use super::canonical::edge_cap;
use super::colorer::MaskColorer;

pub(crate) struct Grow<'a> {
    g: &'a Graph,
    f: &'a [usize],
    s: usize,
    order: Vec<usize>,
    /// `closes[i]`: vertices whose closed neighbourhood is processed once `order[i]` is.
    closes: Vec<u64>,
    /// `sets[i]`: connected sets of two or three vertices whose closed
    /// neighbourhood is processed once `order[i]` is.
    sets: Vec<Vec<u64>>,
    /// `later[i]`: vertices after `order[i]`.
    later: Vec<u64>,
    colorer: MaskColorer,
    lists: Vec<u64>,
    supp: Vec<u64>,
    pub assignments: u64,
    pub nodes: u64,
    budget: u64,
}

impl<'a> Grow<'a> {
    pub fn new(g: &'a Graph, f: &'a [usize], s: usize, budget: u64) -> Self {
        let n = g.vertex_count();
        let order = search_order(g);
        let mut seen = 0u64;
        let mut closes = vec![0u64; n];
        let mut closed = 0u64;
        for (i, &v) in order.iter().enumerate() {
            seen |= 1 << v;
            for u in bits(seen & !closed) {
                if g.adj_mask(u) & !seen == 0 {
                    closes[i] |= 1 << u;
                    closed |= 1 << u;
                }
            }
        }
        let pos: Vec<usize> = {
            let mut p = vec![0; n];
            for (i, &v) in order.iter().enumerate() {
                p[v] = i;
            }
            p
        };
        let mut sets = vec![Vec::new(); n];
        for d in small_connected_sets(g, FREE_SET_SIZE) {
            let hood = bits(d).fold(d, |m, u| m | g.adj_mask(u));
            let last = bits(hood).map(|x| pos[x]).max().unwrap();
            sets[last].push(d);
        }
        let later = (0..n).map(|i| order[i + 1..].iter().fold(0u64, |m, &u| m | 1 << u)).collect();
        Grow {
            g,
            f,
            s,
            order,
            closes,
            sets,
            later,
            colorer: MaskColorer::new(g),
            lists: vec![0; n],
            supp: Vec::new(),
            assignments: 0,
            nodes: 0,
            budget,
        }
    }

    /// `Ok(Some(lists))` with an uncolorable assignment, `Ok(None)` if there is none.
    pub fn run(&mut self) -> Result<Option<Vec<u64>>> {
        if self.order.is_empty() {
            return Ok(None);
        }
        let mut take = Vec::new();
        match self.vertex(0, &[], &mut take)? {
            true => Ok(None),
            false => Ok(Some(self.lists.clone())),
        }
    }

    fn vertex(&mut self, i: usize, classes: &[u64], take: &mut Vec<usize>) -> Result<bool> {
        if i == self.order.len() {
            return self.leaf();
        }
        take.clear();
        take.resize(classes.len(), 0);
        self.pick(i, classes, 0, 0, take)
    }

    fn pick(&mut self, i: usize, classes: &[u64], ci: usize, taken: usize, take: &mut Vec<usize>) -> Result<bool> {
        let v = self.order[i];
        if ci == classes.len() {
            return self.close(i, classes, taken, take);
        }
        let room = (self.f[v] - taken).min(classes[ci].count_ones() as usize);
        for k in 0..=room {
            take[ci] = k;
            if k > 0 && !self.caps_ok(v, classes, ci, take) {
                break;
            }
            if !self.pick(i, classes, ci + 1, taken + k, take)? {
                return Ok(false);
            }
        }
        take[ci] = 0;
        Ok(true)
    }

    fn caps_ok(&self, v: usize, classes: &[u64], ci: usize, take: &[usize]) -> bool {
        let rep = classes[ci].trailing_zeros() as usize;
        for u in bits(self.g.adj_mask(v) & self.supp[rep]) {
            let shared: usize = (0..=ci)
                .filter(|&cj| self.lists[u] >> classes[cj].trailing_zeros() & 1 == 1)
                .map(|cj| take[cj])
                .sum();
            if shared > edge_cap(self.f, self.s, u, v) {
                return false;
            }
        }
        true
    }

    fn close(&mut self, i: usize, classes: &[u64], taken: usize, take: &[usize]) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget(format!("search exceeded {} nodes", self.budget)));
        }
        let v = self.order[i];
        let fresh = self.f[v] - taken;
        let later = self.later(i);
        if fresh > 0 && self.g.adj_mask(v) & later == 0 {
            // a fresh color here would stay private
            return Ok(true);
        }
        let mut list = 0u64;
        let mut split = Vec::with_capacity(classes.len() * 2 + 1);
        for (ci, &cls) in classes.iter().enumerate() {
            let mut chosen = 0u64;
            let mut rest = cls;
            for _ in 0..take[ci] {
                let low = rest & rest.wrapping_neg();
                chosen |= low;
                rest &= !low;
            }
            list |= chosen;
            split.extend([chosen, rest].into_iter().filter(|&m| m != 0));
        }
        let first_fresh = self.supp.len();
        if fresh > 0 {
            split.push(((1u64 << fresh) - 1) << first_fresh);
        }
        list |= ((1u64 << fresh) - 1) << first_fresh;
        if self.supp.len() + fresh > 64 {
            return Err(Error::input("more than 64 colors in one assignment"));
        }

        for c in bits(list) {
            if c < first_fresh {
                self.supp[c] |= 1 << v;
            }
        }
        self.supp.extend(std::iter::repeat(1u64 << v).take(fresh));
        self.lists[v] = list;

        let ok = if self.consistent(i, later) {
            let mut take = Vec::new();
            self.vertex(i + 1, &split, &mut take)?
        } else {
            true
        };

        self.lists[v] = 0;
        self.supp.truncate(first_fresh);
        for c in bits(list) {
            if c < first_fresh {
                self.supp[c] &= !(1 << v);
            }
        }
        if !ok {
            // keep the failing assignment for the caller
            self.lists[v] = list;
        }
        Ok(ok)
    }

    fn later(&self, i: usize) -> u64 {
        self.later[i]
    }

    /// Whether the partial assignment after placing `order[i]` can still grow
    /// into a hard assignment.
    fn consistent(&self, i: usize, later: u64) -> bool {
        let v = self.order[i];
        let mut newly_closed = 0u64;
        for (c, &sup) in self.supp.iter().enumerate() {
            if self.reach(sup, 0) != sup && self.reach(sup, later) != sup {
                return false;
            }
            let open = self.nbhd(sup) & later != 0;
            if !open {
                if sup.count_ones() < 2 {
                    return false;
                }
                if sup >> v & 1 == 1 || self.nbhd(sup) >> v & 1 == 1 {
                    newly_closed |= 1 << c;
                }
            }
        }
        for u in bits(self.closes[i]) {
            if self.is_free(u) {
                return false;
            }
        }
        for &d in &self.sets[i] {
            if self.set_is_free(d) {
                return false;
            }
        }
        self.no_fusable_pair(newly_closed, later)
    }

    fn nbhd(&self, set: u64) -> u64 {
        bits(set).fold(0u64, |m, u| m | self.g.adj_mask(u))
    }

    /// Vertices of `sup` connected to its lowest vertex inside `sup ∪ later`.
    fn reach(&self, sup: u64, later: u64) -> u64 {
        let allowed = sup | later;
        let mut seen = sup & sup.wrapping_neg();
        loop {
            let next = (seen | self.nbhd(seen)) & allowed;
            if next == seen {
                return seen & sup;
            }
            seen = next;
        }
    }

    fn is_free(&self, v: usize) -> bool {
        let adj = self.g.adj_mask(v);
        let mut holders = [0u64; 64];
        let mut k = 0;
        for c in bits(self.lists[v]) {
            holders[k] = self.supp[c] & adj;
            k += 1;
        }
        let holders = &holders[..k];
        fn saturate(holders: &[u64], taken: u64) -> bool {
            match holders.split_first() {
                None => true,
                Some((&h, rest)) => bits(h & !taken).any(|w| saturate(rest, taken | 1 << w)),
            }
        }
        !saturate(holders, 0)
    }

    /// Like `is_free` for a small connected set `d`: whether every way of
    /// coloring the neighbours of `d` (properly or not) leaves a coloring of `d`.
    fn set_is_free(&self, d: u64) -> bool {
        let palette = bits(d).fold(0u64, |m, u| m | self.lists[u]);
        let hood = self.nbhd(d) & !d;
        let mut blockers = [(0u64, 0u64); 64];
        let mut nb = 0;
        let mut space = 1usize;
        for x in bits(hood) {
            let opts = self.lists[x] & palette;
            if opts != 0 {
                space *= opts.count_ones() as usize;
                if space > 4096 {
                    return false;
                }
                blockers[nb] = (opts, self.g.adj_mask(x) & d);
                nb += 1;
            }
        }
        let mut inner = [0usize; FREE_SET_SIZE as usize];
        let mut avail = [0u64; FREE_SET_SIZE as usize];
        let mut k = 0;
        for u in bits(d) {
            inner[k] = u;
            avail[k] = self.lists[u];
            k += 1;
        }
        self.extends_always(&blockers[..nb], &inner[..k], avail)
    }

    fn extends_always(&self, blockers: &[(u64, u64)], inner: &[usize], avail: [u64; FREE_SET_SIZE as usize]) -> bool {
        let Some((&(opts, touch), rest)) = blockers.split_first() else {
            return self.colors_set(inner, avail, 0);
        };
        bits(opts).all(|c| {
            let mut next = avail;
            for (k, &u) in inner.iter().enumerate() {
                if touch >> u & 1 == 1 {
                    next[k] &= !(1 << c);
                }
            }
            self.extends_always(rest, inner, next)
        })
    }

    fn colors_set(&self, inner: &[usize], avail: [u64; FREE_SET_SIZE as usize], k: usize) -> bool {
        if k == inner.len() {
            return true;
        }
        bits(avail[k]).any(|c| {
            let mut next = avail;
            for (j, &u) in inner.iter().enumerate().skip(k + 1) {
                if self.g.has_edge(inner[k], u) {
                    next[j] &= !(1 << c);
                }
            }
            self.colors_set(inner, next, k + 1)
        })
    }

    /// Closed colors are final. A pair of them with disjoint supports joined
    /// by edges that all have room for one more shared color could be fused
    /// into a single color, giving an assignment at least as hard.
    fn no_fusable_pair(&self, newly_closed: u64, later: u64) -> bool {
        if newly_closed == 0 {
            return true;
        }
        let closed: Vec<usize> = (0..self.supp.len())
            .filter(|&c| self.nbhd(self.supp[c]) & later == 0)
            .collect();
        for &c in &closed {
            if newly_closed >> c & 1 == 0 {
                continue;
            }
            for &d in &closed {
                if d == c || (newly_closed >> d & 1 == 1 && d < c) {
                    continue;
                }
                let (a, b) = (self.supp[c], self.supp[d]);
                if a & b != 0 {
                    continue;
                }
                let mut cross = false;
                let mut room = true;
                for x in bits(a) {
                    for y in bits(self.g.adj_mask(x) & b) {
                        cross = true;
                        let shared = (self.lists[x] & self.lists[y]).count_ones() as usize;
                        room &= shared < edge_cap(self.f, self.s, x, y);
                    }
                }
                if cross && room {
                    return false;
                }
            }
        }
        true
    }

    fn leaf(&mut self) -> Result<bool> {
        self.assignments += 1;
        let ok = self.colorer.solve(&self.lists, &mut self.nodes, None);
        if self.nodes > self.budget {
            return Err(Error::Budget(format!("search exceeded {} nodes", self.budget)));
        }
        Ok(ok)
    }
}

const FREE_SET_SIZE: u32 = 3;

/// Connected vertex sets with 2..=max vertices, each once.
fn small_connected_sets(g: &Graph, max: u32) -> Vec<u64> {
    let mut out = std::collections::BTreeSet::new();
    let mut layer: Vec<u64> = (0..g.vertex_count()).map(|v| 1u64 << v).collect();
    for _ in 1..max {
        let mut next = Vec::new();
        for &d in &layer {
            let hood = bits(d).fold(0u64, |m, u| m | g.adj_mask(u)) & !d;
            for x in bits(hood) {
                if out.insert(d | 1 << x) {
                    next.push(d | 1 << x);
                }
            }
        }
        layer = next;
    }
    out.into_iter().collect()
}

/// Starts at a vertex of maximum degree, then repeatedly takes the vertex
/// with the most processed neighbours (ties: fewest unprocessed, then index).
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut done = 0u64;
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| done >> v & 1 == 0)
            .max_by_key(|&v| {
                let a = g.adj_mask(v);
                (
                    (a & done).count_ones(),
                    if done == 0 { a.count_ones() } else { 0 },
                    std::cmp::Reverse((a & !done).count_ones()),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        order.push(v);
        done |= 1 << v;
    }
    order
}
