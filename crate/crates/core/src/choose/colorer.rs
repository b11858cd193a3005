//! Backtracking list colorer over bitmask lists (at most 64 colors).

use crate::graph::{bits, Graph};

/// Vertices are tried by decreasing degree, ties by index. After each choice
/// the color is struck from later neighbours and the branch dies as soon as
/// one of them runs dry.
#[derive(Debug, Clone)]
pub struct MaskColorer {
    order: Vec<usize>,
    /// For each position in `order`, the neighbours placed after it.
    later: Vec<u64>,
    n: usize,
}

impl MaskColorer {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.adj_mask(v).count_ones()), v));
        let mut placed = 0u64;
        let mut later = vec![0; n];
        for i in (0..n).rev() {
            later[i] = g.adj_mask(order[i]) & placed;
            placed |= 1 << order[i];
        }
        MaskColorer { order, later, n }
    }

    /// Returns whether `lists` admits a proper coloring; `nodes` counts color trials.
    /// When `out` is given it receives the color index chosen at each vertex.
    pub fn solve(&self, lists: &[u64], nodes: &mut u64, out: Option<&mut [u8]>) -> bool {
        debug_assert_eq!(lists.len(), self.n);
        if lists.iter().any(|&l| l == 0) {
            return false;
        }
        let mut avail = [0u64; 64];
        avail[..self.n].copy_from_slice(lists);
        let mut chosen = [0u8; 64];
        let ok = self.step(0, &avail, nodes, &mut chosen);
        if ok {
            if let Some(out) = out {
                for (i, &v) in self.order.iter().enumerate() {
                    out[v] = chosen[i];
                }
            }
        }
        ok
    }

    fn step(&self, i: usize, avail: &[u64; 64], nodes: &mut u64, chosen: &mut [u8; 64]) -> bool {
        if i == self.n {
            return true;
        }
        let v = self.order[i];
        'colors: for c in bits(avail[v]) {
            *nodes += 1;
            let bit = 1u64 << c;
            let mut next = *avail;
            for w in bits(self.later[i]) {
                next[w] &= !bit;
                if next[w] == 0 {
                    continue 'colors;
                }
            }
            chosen[i] = c as u8;
            if self.step(i + 1, &next, nodes, chosen) {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let col = MaskColorer::new(&Graph::complete(3));
        let mut nodes = 0;
        assert!(!col.solve(&[0b11, 0b11, 0b11], &mut nodes, None));
        let mut out = [0u8; 3];
        assert!(col.solve(&[0b11, 0b11, 0b101], &mut nodes, Some(&mut out)));
        assert_eq!(out[2], 2);
        assert_ne!(out[0], out[1]);
    }
}
