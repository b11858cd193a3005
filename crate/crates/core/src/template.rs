//! Configurations made of a short cycle with a special and an extra-special path.
//!
//! Numbering: `u = 0`, `v = 1`, `w = 2`, then `r = 3` for the second kind,
//! then the inner vertices of the u-v path, its tripod apex `z`, and the
//! inner vertices of the v-w path.

use crate::config::{Configuration, ExtDegree};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TemplateKind {
    /// Triangle `uvw`; `u`, `w` have external degree 2 and `v` none.
    B1,
    /// Edge `uv` plus triangle `vwr` with `r` precolored and `ex(w) = 1`.
    B2,
}

/// `p1_len`, `p2_len` count edges. `tripod` is the 1-based position of `x`
/// among the inner vertices of the u-v path; `y` follows it.
pub fn build_template(kind: TemplateKind, p1_len: usize, tripod: usize, p2_len: usize) -> Result<Configuration> {
    if p1_len < 2 || p2_len < 2 {
        return Err(Error::input("both paths need at least two edges"));
    }
    if tripod == 0 || tripod + 1 > p1_len - 1 {
        return Err(Error::input(format!(
            "tripod position {tripod} needs an inner pair; the path has {} inner vertices",
            p1_len - 1
        )));
    }
    let base = match kind {
        TemplateKind::B1 => 3,
        TemplateKind::B2 => 4,
    };
    let p1: Vec<usize> = (0..p1_len - 1).map(|i| base + i).collect();
    let z = base + p1_len - 1;
    let p2: Vec<usize> = (0..p2_len - 1).map(|i| z + 1 + i).collect();
    let n = z + p2_len;

    let mut g = Graph::new(n)?;
    let mut ex = vec![ExtDegree::Finite(2); n];
    let (u, v, w) = (0, 1, 2);
    g.add_edge(u, v)?;
    g.add_edge(v, w)?;
    ex[v] = ExtDegree::Finite(0);
    match kind {
        TemplateKind::B1 => g.add_edge(u, w)?,
        TemplateKind::B2 => {
            g.add_edge(v, 3)?;
            g.add_edge(w, 3)?;
            ex[w] = ExtDegree::Finite(1);
            ex[3] = ExtDegree::Inf;
        }
    }
    let walk = |g: &mut Graph, from: usize, inner: &[usize], to: usize| -> Result<()> {
        let mut prev = from;
        for &x in inner.iter().chain([to].iter()) {
            g.add_edge(prev, x)?;
            prev = x;
        }
        Ok(())
    };
    walk(&mut g, u, &p1, v)?;
    walk(&mut g, v, &p2, w)?;
    let (x, y) = (p1[tripod - 1], p1[tripod]);
    g.add_edge(z, x)?;
    g.add_edge(z, y)?;
    ex[x] = ExtDegree::Finite(1);
    ex[y] = ExtDegree::Finite(1);
    ex[z] = ExtDegree::Inf;

    let xs: Vec<usize> = (0..n).filter(|&t| ex[t] != ExtDegree::Inf).collect();
    let name = format!("{kind:?}({p1_len},{tripod},{p2_len})");
    Configuration::new(name, g, &xs, ex)
}

/// Every template instance with at most `max_vertices` vertices.
pub fn template_instances(max_vertices: usize) -> Vec<Configuration> {
    let mut out = Vec::new();
    for kind in [TemplateKind::B1, TemplateKind::B2] {
        let extra = if kind == TemplateKind::B1 { 2 } else { 3 };
        for p1 in 3..=max_vertices {
            for p2 in 2..=max_vertices {
                if p1 + p2 + extra > max_vertices {
                    continue;
                }
                for t in 1..=p1 - 2 {
                    out.push(build_template(kind, p1, t, p2).unwrap());
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let b1 = build_template(TemplateKind::B1, 4, 1, 2).unwrap();
        assert_eq!(b1.graph().vertex_count(), 8);
        assert_eq!(b1.graph().edge_count(), 3 + 4 + 2 + 2);
        assert_eq!(b1.f(), vec![2, 4, 2, 3, 3, 2, 1, 2]);
        let b2 = build_template(TemplateKind::B2, 3, 1, 2).unwrap();
        assert_eq!(b2.list_size(3), 1);
        assert_eq!(b2.list_size(2), 3);
        assert_eq!(b2.graph().degree(1).unwrap(), 5);
    }

    #[test]
    fn bad_tripod() {
        assert!(build_template(TemplateKind::B1, 4, 3, 2).is_err());
        assert!(build_template(TemplateKind::B1, 4, 0, 2).is_err());
        assert!(build_template(TemplateKind::B1, 2, 1, 2).is_err());
    }

    #[test]
    fn instance_sizes() {
        let all = template_instances(10);
        assert!(all.iter().all(|c| c.graph().vertex_count() <= 10));
        assert!(!all.is_empty());
    }
}
