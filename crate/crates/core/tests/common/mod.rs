#![allow(dead_code)]

use std::ops::ControlFlow;

use sepchoose_core::choose::{for_each_assignment, ListAssignment, ListPath, Tripod};
use sepchoose_core::graph::Graph;

/// Every canonical list assignment of a path with `edges` edges and 2-lists,
/// optionally with a tripod apex on the inner pair starting at `tripod`.
pub fn paths(edges: usize, tripod: Option<usize>) -> Vec<ListPath> {
    let k = edges + 1;
    let mut g = Graph::path(k);
    let mut f = vec![2; k];
    if let Some(x) = tripod {
        let mut h = Graph::new(k + 1).unwrap();
        for (u, v) in g.edges() {
            h.add_edge(u, v).unwrap();
        }
        h.add_edge(k, x).unwrap();
        h.add_edge(k, x + 1).unwrap();
        g = h;
        f[x] = 3;
        f[x + 1] = 3;
        f.push(1);
    }
    let mut out = Vec::new();
    for_each_assignment(&g, &f, 2, |masks| {
        let mut lists = ListAssignment::from_masks(masks).lists;
        let tripod = tripod.map(|x| Tripod { x, z_list: lists.pop().unwrap() });
        out.push(ListPath { lists, tripod });
        ControlFlow::Continue(())
    })
    .unwrap();
    out
}

pub fn special_paths() -> Vec<ListPath> {
    (2..=5).flat_map(|e| paths(e, None)).collect()
}

pub fn extra_special_paths() -> Vec<ListPath> {
    let mut out = Vec::new();
    for e in 3..=5 {
        for x in 1..e - 1 {
            out.extend(paths(e, Some(x)));
        }
    }
    out
}
