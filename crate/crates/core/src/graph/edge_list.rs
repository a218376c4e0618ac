//! Plain-text edge lists: first line the vertex count, then one `u v` pair
//! per line, `#` starting a comment anywhere.

use super::{Graph, GraphError};

/// Parses an edge-list document. Returns the graph and any duplicate edges
/// that were collapsed.
pub fn read_edge_list(text: &str) -> Result<(Graph, Vec<(usize, usize)>), GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |reason: String| GraphError::EdgeListSyntax {
            line: idx + 1,
            reason,
        };
        if n.is_none() {
            n = Some(
                line.parse()
                    .map_err(|_| syntax(format!("expected vertex count, got {line:?}")))?,
            );
            continue;
        }
        let mut fields = line.split_whitespace();
        let u = fields
            .next()
            .ok_or_else(|| syntax("missing endpoints".into()))?;
        let v = fields
            .next()
            .ok_or_else(|| syntax(format!("missing second endpoint in {line:?}")))?;
        if fields.next().is_some() {
            return Err(syntax(format!("trailing fields in {line:?}")));
        }
        let u = u
            .parse()
            .map_err(|_| syntax(format!("bad vertex {u:?}")))?;
        let v = v
            .parse()
            .map_err(|_| syntax(format!("bad vertex {v:?}")))?;
        edges.push((u, v));
    }
    let n = n.ok_or(GraphError::EdgeListSyntax {
        line: 0,
        reason: "empty edge-list document".into(),
    })?;
    Graph::from_edge_list(n, &edges)
}

/// Writes the edge-list form read back by [`read_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let text = "# a square\n4\n0 1\n1 2 # right side\n2 3\n3 0\n";
        let (g, dups) = read_edge_list(text).unwrap();
        assert!(dups.is_empty());
        assert_eq!(g.n(), 4);
        assert_eq!(g.degree(), Some(2));
    }

    #[test]
    fn round_trip() {
        let (g, _) = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let (h, _) = read_edge_list(&write_edge_list(&g)).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(
            read_edge_list("4\n0\n"),
            Err(GraphError::EdgeListSyntax { line: 2, .. })
        ));
        assert!(matches!(
            read_edge_list("x\n"),
            Err(GraphError::EdgeListSyntax { line: 1, .. })
        ));
        assert!(matches!(
            read_edge_list("# nothing\n"),
            Err(GraphError::EdgeListSyntax { line: 0, .. })
        ));
    }

    #[test]
    fn propagates_graph_errors() {
        assert_eq!(
            read_edge_list("3\n1 1\n").unwrap_err(),
            GraphError::SelfLoop(1)
        );
    }
}
