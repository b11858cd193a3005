//! Canonical enumeration of (f,s)-list assignments up to color permutation.
//!
//! Lists are built vertex by vertex. Used colors are kept in classes of
//! colors whose supports so far coincide; a new list takes some number of
//! colors from each class (always the lowest ones) plus fresh colors. Two
//! colors of one class are interchangeable, so each assignment appears once.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub(crate) fn edge_cap(f: &[usize], s: usize, u: usize, v: usize) -> usize {
    if f[u] == 1 && f[v] == 1 {
        0
    } else {
        s
    }
}

pub(crate) fn check_sizes(g: &Graph, f: &[usize]) -> Result<()> {
    if f.len() != g.vertex_count() {
        return Err(Error::input(format!("f has {} entries for {} vertices", f.len(), g.vertex_count())));
    }
    if let Some(v) = f.iter().position(|&k| k == 0) {
        return Err(Error::input(format!("f({v}) = 0")));
    }
    let total: usize = f.iter().sum();
    if total > 64 {
        return Err(Error::input(format!("sum of list sizes {total} exceeds the 64-color universe")));
    }
    Ok(())
}

struct Walker<'a, V> {
    g: &'a Graph,
    f: &'a [usize],
    s: usize,
    lists: Vec<u64>,
    visit: V,
}

/// Calls `visit` once per canonical assignment, as one color bitmask per vertex.
/// Colors never exceed `Σ f(v) - 1`.
pub fn for_each_assignment<V>(g: &Graph, f: &[usize], s: usize, visit: V) -> Result<()>
where
    V: FnMut(&[u64]) -> ControlFlow<()>,
{
    check_sizes(g, f)?;
    let n = g.vertex_count();
    let mut w = Walker { g, f, s, lists: vec![0; n], visit };
    let _ = w.vertex(0, 0, &[]);
    Ok(())
}

impl<V: FnMut(&[u64]) -> ControlFlow<()>> Walker<'_, V> {
    fn vertex(&mut self, v: usize, next_color: usize, classes: &[u64]) -> ControlFlow<()> {
        if v == self.lists.len() {
            return (self.visit)(&self.lists);
        }
        let mut take = vec![0usize; classes.len()];
        self.pick(v, next_color, classes, 0, 0, &mut take)
    }

    fn pick(
        &mut self,
        v: usize,
        next_color: usize,
        classes: &[u64],
        ci: usize,
        taken: usize,
        take: &mut Vec<usize>,
    ) -> ControlFlow<()> {
        if ci == classes.len() {
            return self.close(v, next_color, classes, taken, take);
        }
        let room = (self.f[v] - taken).min(classes[ci].count_ones() as usize);
        for k in 0..=room {
            take[ci] = k;
            if k > 0 && !self.caps_ok(v, classes, ci, take) {
                break;
            }
            self.pick(v, next_color, classes, ci + 1, taken + k, take)?;
        }
        take[ci] = 0;
        ControlFlow::Continue(())
    }

    /// Checks the intersection caps against earlier neighbours once class `ci` grew.
    fn caps_ok(&self, v: usize, classes: &[u64], ci: usize, take: &[usize]) -> bool {
        let rep = classes[ci].trailing_zeros();
        for u in bits(self.g.adj_mask(v) & ((1u64 << v) - 1)) {
            if self.lists[u] >> rep & 1 == 0 {
                continue;
            }
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

    fn close(&mut self, v: usize, next_color: usize, classes: &[u64], taken: usize, take: &[usize]) -> ControlFlow<()> {
        let fresh = self.f[v] - taken;
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
        if fresh > 0 {
            let block = ((1u64 << fresh) - 1) << next_color;
            list |= block;
            split.push(block);
        }
        self.lists[v] = list;
        let r = self.vertex(v + 1, next_color + fresh, &split);
        self.lists[v] = 0;
        r
    }
}

pub fn count_assignments(g: &Graph, f: &[usize], s: usize) -> Result<u64> {
    let mut count = 0u64;
    for_each_assignment(g, f, s, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}
