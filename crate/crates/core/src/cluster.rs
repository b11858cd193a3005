//! Clusters of 3-faces and small plane realizations of them.
//!
//! A realization is a whole plane graph: the cluster's 3-faces plus the
//! regions around it, each given as a boundary walk. The regions stand for
//! the rest of a host graph, so a region bounded by a 3-cycle is not a
//! 3-face of the cluster.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, PlaneGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClusterKind {
    Triangle,
    Diamond,
    Fan(usize),
    Wheel(usize),
    Strip(usize),
    K3,
    K4,
    K5a,
    K5b,
    K5c,
    K6a,
    K6b,
    K6c,
    K6d,
    K6e,
    K6f,
}

impl ClusterKind {
    pub const NAMED: [ClusterKind; 11] = [
        ClusterKind::K3,
        ClusterKind::K4,
        ClusterKind::K5a,
        ClusterKind::K5b,
        ClusterKind::K5c,
        ClusterKind::K6a,
        ClusterKind::K6b,
        ClusterKind::K6c,
        ClusterKind::K6d,
        ClusterKind::K6e,
        ClusterKind::K6f,
    ];
}

impl fmt::Display for ClusterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClusterKind::Triangle => write!(f, "triangle"),
            ClusterKind::Diamond => write!(f, "diamond"),
            ClusterKind::Fan(k) => write!(f, "{k}-fan"),
            ClusterKind::Wheel(k) => write!(f, "{k}-wheel"),
            ClusterKind::Strip(k) => write!(f, "{k}-strip"),
            named => write!(f, "{named:?}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Cluster {
    pub kind: ClusterKind,
    pub k: usize,
    pub plane: PlaneGraph,
    /// Indices into `plane.faces` of the cluster's 3-faces.
    pub triangles: Vec<usize>,
    /// Some 3-cycle is not one of the cluster's faces, so in a host graph
    /// it separates.
    pub separating_3_cycle: bool,
}

impl Cluster {
    fn build(kind: ClusterKind, k: usize, n: usize, triangles: &[[usize; 3]], regions: &[Vec<usize>]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for t in triangles {
            for i in 0..3 {
                let (a, b) = (t[i], t[(i + 1) % 3]);
                if !g.has_edge(a, b) {
                    g.add_edge(a, b)?;
                }
            }
        }
        let mut faces: Vec<Vec<usize>> = triangles.iter().map(|t| t.to_vec()).collect();
        faces.extend(regions.iter().cloned());
        let plane = PlaneGraph::new(g, faces)?;
        let separating_3_cycle = plane.graph.enumerate_cycles(3)?.iter().any(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            !triangles.iter().any(|t| {
                let mut t = *t;
                t.sort_unstable();
                t[..] == c[..]
            })
        });
        Ok(Cluster { kind, k, plane, triangles: (0..triangles.len()).collect(), separating_3_cycle })
    }

    pub fn triangle() -> Self {
        Self::build(ClusterKind::Triangle, 1, 3, &[[0, 1, 2]], &[vec![0, 2, 1]]).expect("triangle")
    }

    pub fn diamond() -> Self {
        let mut c = Self::fan(2).expect("2-fan");
        c.kind = ClusterKind::Diamond;
        c
    }

    /// Apex 0 over the path 1..=k+1.
    pub fn fan(k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::input("a fan needs at least one face"));
        }
        let tris: Vec<[usize; 3]> = (1..=k).map(|i| [0, i, i + 1]).collect();
        let outer: Vec<usize> = (0..=k + 1).collect();
        Self::build(ClusterKind::Fan(k), k, k + 2, &tris, &[outer])
    }

    /// Hub 0 inside the cycle 1..=k.
    pub fn wheel(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::input("a wheel needs at least three faces"));
        }
        let tris: Vec<[usize; 3]> = (1..=k).map(|i| [0, i, i % k + 1]).collect();
        let rim: Vec<usize> = (1..=k).collect();
        Self::build(ClusterKind::Wheel(k), k, k + 1, &tris, &[rim])
    }

    /// Faces (i, i+1, i+2); the outer walk runs up the even vertices and
    /// back down the odd ones.
    pub fn strip(k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::input("a strip needs at least one face"));
        }
        let n = k + 2;
        let tris: Vec<[usize; 3]> = (0..k).map(|i| [i, i + 1, i + 2]).collect();
        let mut outer: Vec<usize> = (0..n).step_by(2).collect();
        outer.extend((1..n).step_by(2).rev());
        Self::build(ClusterKind::Strip(k), k, n, &tris, &[outer])
    }

    pub fn named(kind: ClusterKind) -> Result<Self> {
        let mut c = match kind {
            ClusterKind::K3 => Self::triangle(),
            ClusterKind::K4 => Self::diamond(),
            ClusterKind::K5a => Self::fan(3)?,
            ClusterKind::K5b => Self::wheel(4)?,
            ClusterKind::K6a => Self::strip(4)?,
            ClusterKind::K6b => Self::fan(4)?,
            ClusterKind::K6e => Self::wheel(5)?,
            // 4-strip v,u1,u3,u2,u4 whose ends close up at v
            ClusterKind::K5c => Self::build(
                kind,
                4,
                5,
                &[[0, 1, 3], [1, 3, 2], [3, 2, 4], [2, 4, 0]],
                &[vec![0, 1, 2], vec![0, 3, 4]],
            )?,
            // a central face with a face on each side
            ClusterKind::K6c => {
                Self::build(kind, 4, 6, &[[0, 1, 2], [0, 1, 3], [1, 2, 4], [2, 0, 5]], &[vec![0, 3, 1, 4, 2, 5]])?
            }
            // 4-wheel plus a face on one rim edge
            ClusterKind::K6d => Self::build(
                kind,
                5,
                6,
                &[[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 1], [4, 1, 5]],
                &[vec![1, 2, 3, 4, 5]],
            )?,
            // octahedron minus the edge 1-2: poles 0 and 5, equator 1,2,3,4
            ClusterKind::K6f => Self::build(
                kind,
                6,
                6,
                &[[0, 2, 3], [0, 3, 4], [0, 4, 1], [5, 2, 3], [5, 3, 4], [5, 4, 1]],
                &[vec![0, 1, 5, 2]],
            )?,
            other => return Err(Error::input(format!("{other} is not a named cluster"))),
        };
        c.kind = kind;
        Ok(c)
    }

    pub fn face_count(&self) -> usize {
        self.triangles.len()
    }

    /// Edges on exactly one cluster face.
    pub fn boundary_edges(&self) -> Vec<(usize, usize)> {
        self.plane
            .graph
            .edges()
            .into_iter()
            .filter(|&(u, v)| {
                self.triangles
                    .iter()
                    .filter(|&&t| {
                        let f = &self.plane.faces[t];
                        (0..3).any(|i| {
                            let (a, b) = (f[i], f[(i + 1) % 3]);
                            (a.min(b), a.max(b)) == (u, v)
                        })
                    })
                    .count()
                    == 1
            })
            .collect()
    }

    /// Number of cluster faces at each vertex.
    pub fn face_degree(&self, v: usize) -> usize {
        self.triangles.iter().filter(|&&t| self.plane.faces[t].contains(&v)).count()
    }
}
