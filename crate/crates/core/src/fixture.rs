//! Line-oriented fixture text: `<kind> <name> ...` opens a block, `end` closes it.
//! Blank lines and `#` comments are ignored everywhere.

use crate::error::{Error, Result};
use crate::graph::{Graph, PlaneGraph};

#[derive(Debug, Clone)]
pub struct Line {
    pub number: usize,
    pub tokens: Vec<String>,
}

impl Line {
    pub fn arg<T: std::str::FromStr>(&self, i: usize, what: &str) -> Result<T> {
        let tok = self
            .tokens
            .get(i)
            .ok_or_else(|| Error::parse(self.number, format!("missing {what}")))?;
        tok.parse().map_err(|_| Error::parse(self.number, format!("bad {what} `{tok}`")))
    }

    pub fn args<T: std::str::FromStr>(&self, from: usize, what: &str) -> Result<Vec<T>> {
        (from..self.tokens.len()).map(|i| self.arg(i, what)).collect()
    }

    pub fn keyword(&self) -> &str {
        &self.tokens[0]
    }
}

#[derive(Debug, Clone)]
pub struct Block {
    pub kind: String,
    /// Tokens after the kind on the opening line; the first is the name.
    pub header: Line,
    pub body: Vec<Line>,
}

impl Block {
    pub fn name(&self) -> &str {
        &self.header.tokens[1]
    }
}

pub fn blocks(text: &str) -> Result<Vec<Block>> {
    let mut out = Vec::new();
    let mut open: Option<Block> = None;
    for (i, raw) in text.lines().enumerate() {
        let number = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<String> = content.split_whitespace().map(str::to_owned).collect();
        if tokens.is_empty() {
            continue;
        }
        let line = Line { number, tokens };
        match (&mut open, line.keyword()) {
            (Some(_), "end") => out.push(open.take().unwrap()),
            (Some(b), _) => b.body.push(line),
            (None, "end") => return Err(Error::parse(number, "`end` outside a block")),
            (None, kind) => {
                if line.tokens.len() < 2 {
                    return Err(Error::parse(number, format!("`{kind}` needs a name")));
                }
                open = Some(Block { kind: kind.to_owned(), header: line, body: Vec::new() });
            }
        }
    }
    if let Some(b) = open {
        return Err(Error::parse(b.header.number, format!("block `{}` is never closed", b.name())));
    }
    Ok(out)
}

/// A parsed `graph` block.
#[derive(Debug, Clone)]
pub struct GraphFixture {
    pub name: String,
    pub graph: Graph,
    pub faces: Vec<Vec<usize>>,
    /// Directed edges from `orient u v` lines, in file order.
    pub arcs: Vec<(usize, usize)>,
}

impl GraphFixture {
    pub fn plane(&self) -> Result<PlaneGraph> {
        PlaneGraph::new(self.graph.clone(), self.faces.clone())
    }
}

/// Shared body parser for `vertices`, `edge`, `face` and `orient` lines.
/// Lines with other keywords are handed to `other`.
pub(crate) fn parse_graph_body(
    block: &Block,
    mut other: impl FnMut(&Line) -> Result<()>,
) -> Result<(Graph, Vec<Vec<usize>>, Vec<(usize, usize)>)> {
    let mut graph: Option<Graph> = None;
    let mut faces = Vec::new();
    let mut arcs = Vec::new();
    let at = |line: &Line, e: Error| match e {
        Error::Parse { .. } => e,
        e => Error::parse(line.number, e.to_string()),
    };
    for line in &block.body {
        match line.keyword() {
            "vertices" => {
                if graph.is_some() {
                    return Err(Error::parse(line.number, "duplicate `vertices`"));
                }
                graph = Some(Graph::new(line.arg(1, "vertex count")?).map_err(|e| at(line, e))?);
            }
            kw @ ("edge" | "orient" | "face" | "label") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| Error::parse(line.number, "`vertices` must come first"))?;
                match kw {
                    "edge" | "orient" => {
                        let (u, v) = (line.arg(1, "vertex")?, line.arg(2, "vertex")?);
                        if line.tokens.len() != 3 {
                            return Err(Error::parse(line.number, "expected exactly two vertices"));
                        }
                        if kw == "orient" {
                            arcs.push((u, v));
                            if g.has_edge(u, v) {
                                continue;
                            }
                        }
                        g.add_edge(u, v).map_err(|e| at(line, e))?;
                    }
                    "face" => {
                        let walk: Vec<usize> = line.args(1, "vertex")?;
                        if walk.is_empty() || walk.iter().any(|&v| v >= g.vertex_count()) {
                            return Err(Error::parse(line.number, "bad face walk"));
                        }
                        faces.push(walk);
                    }
                    _ => {
                        let v = line.arg(1, "vertex")?;
                        g.set_label(v, line.tokens[2..].join(" ")).map_err(|e| at(line, e))?;
                    }
                }
            }
            _ => other(line)?,
        }
    }
    let graph = graph.ok_or_else(|| Error::parse(block.header.number, "missing `vertices`"))?;
    Ok((graph, faces, arcs))
}

pub fn parse_graphs(text: &str) -> Result<Vec<GraphFixture>> {
    let mut out = Vec::new();
    for b in blocks(text)? {
        if b.kind != "graph" {
            continue;
        }
        let (graph, faces, arcs) = parse_graph_body(&b, |line| {
            Err(Error::parse(line.number, format!("unknown keyword `{}`", line.keyword())))
        })?;
        out.push(GraphFixture { name: b.name().to_owned(), graph, faces, arcs });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_graph_block() {
        let text = "# k3\ngraph tri\nvertices 3\nedge 0 1\nedge 1 2\norient 2 0\nface 0 1 2\nface 0 2 1\nend\n";
        let gs = parse_graphs(text).unwrap();
        assert_eq!(gs.len(), 1);
        assert_eq!(gs[0].graph.edge_count(), 3);
        assert_eq!(gs[0].arcs, vec![(2, 0)]);
        assert!(gs[0].plane().is_ok());
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_graphs("graph g\nvertices 2\nedge 0 5\nend\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_graphs("graph g\nvertices 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_graphs("graph g\nedge 0 1\nend").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
