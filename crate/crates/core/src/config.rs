//! Configurations `(C, X, ex)` and the catalog fixture format.

use std::fmt;

use crate::error::{Error, Result};
use crate::fixture::{blocks, parse_graph_body};
use crate::graph::{bits, Graph};

/// External degree: a bound on edges leaving the configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtDegree {
    Finite(u8),
    /// Stands for an arbitrarily precoloured neighbourhood; never used in arithmetic.
    Inf,
}

impl fmt::Display for ExtDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtDegree::Finite(k) => write!(f, "{k}"),
            ExtDegree::Inf => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for ExtDegree {
    type Err = ();
    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        match s {
            "0" => Ok(ExtDegree::Finite(0)),
            "1" => Ok(ExtDegree::Finite(1)),
            "2" => Ok(ExtDegree::Finite(2)),
            "inf" => Ok(ExtDegree::Inf),
            _ => Err(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub name: String,
    c: Graph,
    x: u64,
    ex: Vec<ExtDegree>,
}

impl Configuration {
    pub fn new(name: impl Into<String>, c: Graph, x: &[usize], ex: Vec<ExtDegree>) -> Result<Self> {
        let n = c.vertex_count();
        if ex.len() != n {
            return Err(Error::input(format!("ex has {} entries for {n} vertices", ex.len())));
        }
        let mut mask = 0u64;
        for &v in x {
            if v >= n {
                return Err(Error::input(format!("X vertex {v} out of range")));
            }
            mask |= 1 << v;
        }
        for v in bits(mask) {
            if !matches!(ex[v], ExtDegree::Finite(0..=2)) {
                return Err(Error::input(format!("vertex {v} in X has ex = {}", ex[v])));
            }
        }
        Ok(Configuration { name: name.into(), c, x: mask, ex })
    }

    pub fn graph(&self) -> &Graph {
        &self.c
    }

    pub fn x_mask(&self) -> u64 {
        self.x
    }

    pub fn x_vertices(&self) -> Vec<usize> {
        bits(self.x).collect()
    }

    pub fn in_x(&self, v: usize) -> bool {
        self.x >> v & 1 == 1
    }

    pub fn ex(&self, v: usize) -> ExtDegree {
        self.ex[v]
    }

    pub fn ex_all(&self) -> &[ExtDegree] {
        &self.ex
    }

    pub fn list_size(&self, v: usize) -> usize {
        match (self.in_x(v), self.ex[v]) {
            (true, ExtDegree::Finite(k)) => 4 - k as usize,
            _ => 1,
        }
    }

    pub fn f(&self) -> Vec<usize> {
        (0..self.c.vertex_count()).map(|v| self.list_size(v)).collect()
    }

    /// Adds the edge `uv` and lowers both external degrees by one.
    pub fn apply_iteration(&self, u: usize, v: usize) -> Result<Configuration> {
        if !self.in_x(u) || !self.in_x(v) || u == v {
            return Err(Error::pre(format!("{u} and {v} must be distinct vertices of X")));
        }
        if self.c.has_edge(u, v) {
            return Err(Error::pre(format!("{u} and {v} are already adjacent")));
        }
        let mut ex = self.ex.clone();
        for w in [u, v] {
            match ex[w] {
                ExtDegree::Finite(k) if k >= 1 => ex[w] = ExtDegree::Finite(k - 1),
                _ => return Err(Error::pre(format!("ex({w}) = {} leaves no room for an edge", ex[w]))),
            }
        }
        let mut c = self.c.clone();
        c.add_edge(u, v)?;
        Ok(Configuration { name: format!("{}+{u}{v}", self.name), c, x: self.x, ex })
    }

    /// Pairs `(u, v)` on which `apply_iteration` is legal.
    pub fn iteration_pairs(&self) -> Vec<(usize, usize)> {
        let xs = self.x_vertices();
        let open = |w: usize| matches!(self.ex[w], ExtDegree::Finite(k) if k >= 1);
        let mut out = Vec::new();
        for (i, &u) in xs.iter().enumerate() {
            for &v in &xs[i + 1..] {
                if open(u) && open(v) && !self.c.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn to_fixture(&self) -> String {
        let mut s = format!("config {}\nvertices {}\n", self.name, self.c.vertex_count());
        for (u, v) in self.c.edges() {
            s += &format!("edge {u} {v}\n");
        }
        for v in 0..self.c.vertex_count() {
            if let Some(l) = self.c.label(v) {
                s += &format!("label {v} {l}\n");
            }
        }
        let xs: Vec<String> = self.x_vertices().iter().map(|v| v.to_string()).collect();
        if !xs.is_empty() {
            s += &format!("x {}\n", xs.join(" "));
        }
        for v in 0..self.c.vertex_count() {
            if self.in_x(v) || self.ex[v] != ExtDegree::Inf {
                s += &format!("ex {v} {}\n", self.ex[v]);
            }
        }
        s + "end\n"
    }
}

/// Parses every `config` block. Vertices outside X default to `ex = inf`;
/// every vertex of X needs an explicit `ex` line.
pub fn load_catalog(text: &str) -> Result<Vec<Configuration>> {
    let mut out: Vec<Configuration> = Vec::new();
    for b in blocks(text)? {
        if b.kind != "config" {
            continue;
        }
        let mut x_lines = Vec::new();
        let mut ex_lines = Vec::new();
        let (graph, _, _) = parse_graph_body(&b, |line| {
            match line.keyword() {
                "x" => x_lines.push(line.clone()),
                "ex" => ex_lines.push(line.clone()),
                kw => return Err(Error::parse(line.number, format!("unknown keyword `{kw}`"))),
            }
            Ok(())
        })?;
        let n = graph.vertex_count();
        let mut x = Vec::new();
        for line in &x_lines {
            for v in line.args::<usize>(1, "vertex")? {
                if v >= n {
                    return Err(Error::parse(line.number, format!("vertex {v} out of range")));
                }
                x.push(v);
            }
        }
        let mut ex: Vec<Option<ExtDegree>> = vec![None; n];
        for line in &ex_lines {
            let v: usize = line.arg(1, "vertex")?;
            let e: ExtDegree = line.arg(2, "ex value (0, 1, 2 or inf)")?;
            if v >= n || ex[v].is_some() {
                return Err(Error::parse(line.number, format!("bad or repeated ex for vertex {v}")));
            }
            ex[v] = Some(e);
        }
        let mut ex_full = Vec::with_capacity(n);
        for (v, e) in ex.into_iter().enumerate() {
            match e {
                Some(e) => ex_full.push(e),
                None if x.contains(&v) => {
                    return Err(Error::parse(b.header.number, format!("vertex {v} of X has no ex line")))
                }
                None => ex_full.push(ExtDegree::Inf),
            }
        }
        if out.iter().any(|c| c.name == b.name()) {
            return Err(Error::parse(b.header.number, format!("duplicate configuration `{}`", b.name())));
        }
        let conf = Configuration::new(b.name(), graph, &x, ex_full)
            .map_err(|e| Error::parse(b.header.number, e.to_string()))?;
        out.push(conf);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DIAMOND1: &str = "config diamond1\nvertices 4\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 0\nedge 1 3\nx 1 3\nex 1 1\nex 3 1\nend\n";

    #[test]
    fn list_sizes() {
        let c = &load_catalog(DIAMOND1).unwrap()[0];
        assert_eq!(c.f(), vec![1, 3, 1, 3]);
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let ex = vec![ExtDegree::Finite(2), ExtDegree::Finite(0), ExtDegree::Inf];
        let c = Configuration::new("p", g, &[0, 1], ex).unwrap();
        assert_eq!((c.list_size(0), c.list_size(1), c.list_size(2)), (2, 4, 1));
    }

    #[test]
    fn roundtrip() {
        let c = &load_catalog(DIAMOND1).unwrap()[0];
        assert_eq!(&load_catalog(&c.to_fixture()).unwrap()[0], c);
    }

    #[test]
    fn iteration() {
        let g = Graph::path(4);
        let ex = vec![ExtDegree::Finite(1), ExtDegree::Finite(2), ExtDegree::Finite(1), ExtDegree::Finite(0)];
        let c = Configuration::new("p4", g, &[0, 1, 2, 3], ex).unwrap();
        let d = c.apply_iteration(0, 2).unwrap();
        assert_eq!(d.graph().edge_count(), 4);
        assert_eq!((d.ex(0), d.ex(2)), (ExtDegree::Finite(0), ExtDegree::Finite(0)));
        assert!(c.apply_iteration(0, 1).is_err());
        assert!(c.apply_iteration(1, 3).is_err());
        assert_eq!(c.iteration_pairs(), vec![(0, 2)]);
    }

    #[test]
    fn parse_errors() {
        let bad = DIAMOND1.replace("ex 3 1", "ex 3 7");
        assert!(matches!(load_catalog(&bad), Err(Error::Parse { line: 10, .. })));
        let missing = DIAMOND1.replace("ex 3 1\n", "");
        assert!(load_catalog(&missing).is_err());
        let inf_in_x = DIAMOND1.replace("ex 3 1", "ex 3 inf");
        assert!(load_catalog(&inf_in_x).is_err());
    }
}
