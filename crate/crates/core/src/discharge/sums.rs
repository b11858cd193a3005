//! Total initial charge of a plane graph.

use crate::discharge::spec::Variant;
use crate::error::{Error, Result};
use crate::graph::PlaneGraph;
use crate::rational::{int, Rational};

/// Σμ(v) + Σν(f). Under `Cc7` the precoloured vertices must induce a
/// single vertex, an edge, a 2-edge path or a triangle, all on one face;
/// a face whose boundary is exactly that triangle gets ε = 1.
pub fn audit_initial_sum(pg: &PlaneGraph, variant: Variant, precolored: Option<&[usize]>) -> Result<Rational> {
    let g = &pg.graph;
    let n = g.vertex_count();
    let p: &[usize] = match (variant, precolored) {
        (Variant::Cc7, p) => p.unwrap_or(&[]),
        (_, Some(p)) if !p.is_empty() => {
            return Err(Error::input(format!("variant {variant} has no precoloured vertices")));
        }
        _ => &[],
    };
    let mut in_p = vec![false; n];
    for &v in p {
        if v >= n || std::mem::replace(&mut in_p[v], true) {
            return Err(Error::input(format!("bad precoloured vertex {v}")));
        }
    }
    let mut precolored_faces = vec![false; pg.faces.len()];
    if !p.is_empty() {
        let inner_edges = p.iter().enumerate().flat_map(|(i, &a)| p[i + 1..].iter().map(move |&b| (a, b)));
        let e = inner_edges.filter(|&(a, b)| g.has_edge(a, b)).count();
        let shape_ok = matches!((p.len(), e), (1, 0) | (2, 1) | (3, 2) | (3, 3));
        if !shape_ok {
            return Err(Error::input(format!("{} precoloured vertices with {e} edges is not P1, P2, P3 or K3", p.len())));
        }
        if !pg.faces.iter().any(|w| p.iter().all(|v| w.contains(v))) {
            return Err(Error::input("precoloured vertices do not share a face"));
        }
        if e == 3 {
            for (fi, w) in pg.faces.iter().enumerate() {
                precolored_faces[fi] = w.len() == 3 && w.iter().all(|&v| in_p[v]);
            }
        }
    }
    let mut sum = int(0);
    for v in 0..n {
        sum += variant.mu(g.degree(v)?, in_p[v]);
    }
    for (fi, w) in pg.faces.iter().enumerate() {
        sum += variant.nu(w.len(), precolored_faces[fi]);
    }
    let expected = variant.closed_form_sum(p.len(), precolored_faces.iter().filter(|&&b| b).count());
    if sum != expected {
        return Err(Error::Audit(format!("charge sum {sum} differs from the Euler value {expected}")));
    }
    if variant == Variant::Cc7 && sum > int(-1) {
        return Err(Error::Audit(format!("charge sum {sum} is above -1")));
    }
    Ok(sum)
}
