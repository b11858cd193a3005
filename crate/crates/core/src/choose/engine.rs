//! Choosability by recursion over induced subgraphs.
//!
//! Three facts shrink the search without changing the verdict:
//!
//! * a vertex with more colors than live neighbours can always be colored
//!   last, so such vertices are peeled off first (repeatedly);
//! * extra colors never hurt, so every list may be taken to have exactly
//!   `f(v)` colors;
//! * a color whose support induces a disconnected subgraph can be split
//!   into one color per component. The split assignment is still an
//!   (f,s)-assignment, and it is colorable exactly when the original is.

use std::collections::HashSet;

use crate::error::Result;
use crate::graph::{bits, Graph};

use super::canonical::check_sizes;
use super::grow::Grow;

/// Removes, repeatedly, vertices with more colors than live neighbours.
pub(crate) fn peel(g: &Graph, f: &[usize], mut alive: u64) -> u64 {
    while let Some(v) = bits(alive).find(|&v| f[v] > (g.adj_mask(v) & alive).count_ones() as usize) {
        alive &= !(1 << v);
    }
    alive
}

/// Decides choosability of every induced subgraph it is asked about.
///
/// An assignment with a private color at `v` (a color on no other list)
/// is colorable exactly when its restriction to `G - v` is. Likewise when
/// the neighbours of `v` cannot block all of its colors at once. So `G` is
/// choosable iff every `G - v` is and every assignment without such a
/// vertex is colorable. Subgraphs are memoised by vertex set.
pub(crate) struct Engine<'a> {
    g: &'a Graph,
    f: &'a [usize],
    s: usize,
    done: HashSet<u64>,
    pub assignments: u64,
    pub nodes: u64,
    budget: u64,
}

impl<'a> Engine<'a> {
    pub fn new(g: &'a Graph, f: &'a [usize], s: usize, budget: u64) -> Result<Self> {
        check_sizes(g, f)?;
        Ok(Engine { g, f, s, done: HashSet::new(), assignments: 0, nodes: 0, budget })
    }

    pub fn full_mask(&self) -> u64 {
        match self.g.vertex_count() {
            64 => !0,
            n => (1u64 << n) - 1,
        }
    }

    /// `Ok(None)` when the induced subgraph is choosable, else the supports
    /// (original vertex masks) of an uncolorable assignment; vertices they
    /// miss get private colors.
    pub fn check(&mut self, alive: u64) -> Result<Option<Vec<u64>>> {
        let alive = peel(self.g, self.f, alive);
        if alive == 0 || self.done.contains(&alive) {
            return Ok(None);
        }
        for v in bits(alive) {
            if let Some(w) = self.check(alive & !(1 << v))? {
                return Ok(Some(w));
            }
        }
        let verts: Vec<usize> = bits(alive).collect();
        let sub = self.g.induced(alive);
        let f: Vec<usize> = verts.iter().map(|&v| self.f[v]).collect();
        let mut grow = Grow::new(&sub, &f, self.s, self.budget.saturating_sub(self.nodes));
        let found = grow.run();
        self.assignments += grow.assignments;
        self.nodes += grow.nodes;
        match found? {
            None => {
                self.done.insert(alive);
                Ok(None)
            }
            Some(lists) => {
                let colors = lists.iter().fold(0u64, |m, &l| m | l);
                Ok(Some(
                    bits(colors)
                        .map(|c| {
                            (0..verts.len()).filter(|&u| lists[u] >> c & 1 == 1).fold(0u64, |m, u| m | 1 << verts[u])
                        })
                        .collect(),
                ))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn peels_low_degree() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(peel(&star, &[2, 2, 2, 2], 0b1111), 0);
        assert_eq!(peel(&Graph::cycle(4), &[2, 2, 2, 2], 0b1111), 0b1111);
    }
}
