//! Graph data model: immutable simple undirected graphs with dense
//! 0-indexed vertices, plus generators and file formats.

mod edge_list;
mod families;
mod graph6;

pub use edge_list::{read_edge_list, write_edge_list};
pub use families::FamilySpec;
pub use graph6::{parse_graph6, read_graph6_file, write_graph6, GRAPH6_HEADER};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("bad family parameters: {0}")]
    BadFamilyParams(String),
    #[error("byte {0:#04x} outside the graph6 range [63, 126]")]
    BadChar(u8),
    #[error("graph6 payload truncated")]
    TruncatedPayload,
    #[error("graph6 padding bits are not zero")]
    NonzeroPadding,
    #[error("graph6 size {0} not supported (max 258047)")]
    UnsupportedSize(usize),
    #[error("empty graph6 input")]
    EmptyInput,
    #[error("edge list parse error at line {line}: {reason}")]
    EdgeListSyntax { line: usize, reason: String },
}

/// Immutable simple undirected graph.
///
/// Neighbor lists are sorted, adjacency is symmetric, and self-loops are
/// banned at construction. `degree` is `Some(d)` exactly when the graph is
/// d-regular; the spectral layer refuses non-regular graphs rather than
/// generalizing silently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    degree: Option<usize>,
}

impl Graph {
    /// Builds a graph from an explicit edge list.
    ///
    /// Duplicate edges are tolerated (stored once) and returned as warnings;
    /// self-loops and out-of-range endpoints are errors. Returns the graph
    /// together with the deduplicated `(min, max)` pairs that occurred more
    /// than once.
    pub fn from_edge_list(
        n: usize,
        edges: &[(usize, usize)],
    ) -> Result<(Graph, Vec<(usize, usize)>), GraphError> {
        if n == 0 {
            return Err(GraphError::BadFamilyParams(
                "graph needs at least one vertex".into(),
            ));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = std::collections::BTreeSet::new();
        let mut duplicates = Vec::new();
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                if !duplicates.contains(&key) {
                    duplicates.push(key);
                }
                continue;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok((Graph::from_adjacency(n, adjacency), duplicates))
    }

    /// Internal constructor; `adjacency` must already be simple and
    /// symmetric (possibly unsorted).
    pub(crate) fn from_adjacency(n: usize, mut adjacency: Vec<Vec<usize>>) -> Graph {
        debug_assert_eq!(adjacency.len(), n);
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let total: usize = adjacency.iter().map(|nbrs| nbrs.len()).sum();
        debug_assert_eq!(total % 2, 0);
        let edge_count = total / 2;
        let d0 = adjacency.first().map_or(0, |nbrs| nbrs.len());
        let regular = adjacency.iter().all(|nbrs| nbrs.len() == d0);
        Graph {
            n,
            adjacency,
            edge_count,
            degree: regular.then_some(d0),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Common degree when the graph is regular.
    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn is_regular(&self) -> bool {
        self.degree.is_some()
    }

    /// Regular with every vertex adjacent to every other.
    pub fn is_complete(&self) -> bool {
        self.degree == Some(self.n - 1)
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adjacency[x]
    }

    pub fn vertex_degree(&self, x: usize) -> usize {
        self.adjacency[x].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Unordered edges as ascending `(min, max)` pairs, in a fixed order, so
    /// edge sums are deterministic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| {
            self.adjacency[x]
                .iter()
                .filter(move |&&y| y > x)
                .map(move |&y| (x, y))
        })
    }

    /// Ordered arcs: both orientations of every edge.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| self.adjacency[x].iter().map(move |&y| (x, y)))
    }

    /// True iff a traversal from vertex 0 reaches all vertices.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut visited = vec![false; self.n];
        let mut stack = vec![0usize];
        visited[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &self.adjacency[x] {
                if !visited[y] {
                    visited[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.n
    }
}
