//! Built-in graph families: cycles, complete graphs, complete bipartite
//! graphs, hypercubes, circulants, and the Petersen graph.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// A generator request for one of the built-in families.
///
/// The string form is colon-separated (`cycle:9`, `circulant:6:2,3`,
/// `petersen`) and round-trips through `Display` / `FromStr`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    /// Cycle C_N, N ≥ 3.
    Cycle { n: usize },
    /// Complete graph K_N, N ≥ 2.
    Complete { n: usize },
    /// Complete bipartite K_{n,n}, n ≥ 1.
    CompleteBipartite { half: usize },
    /// Hypercube Q_n on 2^n vertices, n ≥ 1.
    Hypercube { dim: usize },
    /// Circulant C_N(S): i ~ i ± s (mod N) for s in the connection set,
    /// with S ⊆ {1..⌊N/2⌋} nonempty, sorted and duplicate-free.
    Circulant { n: usize, connections: Vec<usize> },
    /// The Petersen graph (3-regular, 10 vertices).
    Petersen,
}

impl FamilySpec {
    /// Validates the parameters and builds the canonical graph.
    pub fn generate(&self) -> Result<Graph, GraphError> {
        match self {
            FamilySpec::Cycle { n } => cycle(*n),
            FamilySpec::Complete { n } => complete(*n),
            FamilySpec::CompleteBipartite { half } => complete_bipartite(*half),
            FamilySpec::Hypercube { dim } => hypercube(*dim),
            FamilySpec::Circulant { n, connections } => circulant(*n, connections),
            FamilySpec::Petersen => Ok(petersen()),
        }
    }
}

/// Same as [`FamilySpec::generate`].
pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.generate()
}

fn bad(msg: impl Into<String>) -> GraphError {
    GraphError::BadFamilyParams(msg.into())
}

fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(bad(format!("cycle needs N >= 3, got {n}")));
    }
    let adjacency = (0..n)
        .map(|i| vec![(i + n - 1) % n, (i + 1) % n])
        .collect();
    Ok(Graph::from_adjacency(n, adjacency))
}

fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(bad(format!("complete graph needs N >= 2, got {n}")));
    }
    let adjacency = (0..n)
        .map(|i| (0..n).filter(|&j| j != i).collect())
        .collect();
    Ok(Graph::from_adjacency(n, adjacency))
}

fn complete_bipartite(half: usize) -> Result<Graph, GraphError> {
    if half < 1 {
        return Err(bad("complete bipartite needs n >= 1".to_string()));
    }
    let n = 2 * half;
    let adjacency = (0..n)
        .map(|i| {
            if i < half {
                (half..n).collect()
            } else {
                (0..half).collect()
            }
        })
        .collect();
    Ok(Graph::from_adjacency(n, adjacency))
}

fn hypercube(dim: usize) -> Result<Graph, GraphError> {
    if dim < 1 {
        return Err(bad(format!("hypercube needs n >= 1, got {dim}")));
    }
    if dim > 20 {
        return Err(bad(format!("hypercube dimension {dim} too large (max 20)")));
    }
    let n = 1usize << dim;
    let adjacency = (0..n)
        .map(|x| (0..dim).map(|b| x ^ (1 << b)).collect())
        .collect();
    Ok(Graph::from_adjacency(n, adjacency))
}

fn circulant(n: usize, connections: &[usize]) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(bad(format!("circulant needs N >= 3, got {n}")));
    }
    if connections.is_empty() {
        return Err(bad("circulant connection set must be nonempty".to_string()));
    }
    for w in connections.windows(2) {
        if w[0] >= w[1] {
            return Err(bad(format!(
                "circulant connection set must be strictly increasing, got {} before {}",
                w[0], w[1]
            )));
        }
    }
    for &s in connections {
        if s < 1 || s > n / 2 {
            return Err(bad(format!(
                "circulant offset {s} outside 1..={} for N={n}",
                n / 2
            )));
        }
    }
    let mut adjacency = vec![Vec::new(); n];
    for i in 0..n {
        for &s in connections {
            let fwd = (i + s) % n;
            adjacency[i].push(fwd);
            let back = (i + n - s) % n;
            // s = N/2 maps both directions onto the same vertex.
            if back != fwd {
                adjacency[i].push(back);
            }
        }
    }
    Ok(Graph::from_adjacency(n, adjacency))
}

fn petersen() -> Graph {
    // Outer 5-cycle 0..4, spokes i - (i+5), inner pentagram on 5..9.
    let mut adjacency = vec![Vec::new(); 10];
    for i in 0..5 {
        adjacency[i].push((i + 1) % 5);
        adjacency[(i + 1) % 5].push(i);
        adjacency[i].push(i + 5);
        adjacency[i + 5].push(i);
        adjacency[i + 5].push((i + 2) % 5 + 5);
        adjacency[(i + 2) % 5 + 5].push(i + 5);
    }
    Graph::from_adjacency(10, adjacency)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite { half } => write!(f, "complete_bipartite:{half}"),
            FamilySpec::Hypercube { dim } => write!(f, "hypercube:{dim}"),
            FamilySpec::Circulant { n, connections } => {
                let set: Vec<String> = connections.iter().map(|s| s.to_string()).collect();
                write!(f, "circulant:{n}:{}", set.join(","))
            }
            FamilySpec::Petersen => write!(f, "petersen"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split(':');
        let family = parts.next().unwrap_or_default();
        let params: Vec<&str> = parts.collect();
        let one_int = |what: &str| -> Result<usize, GraphError> {
            if params.len() != 1 {
                return Err(bad(format!("{what} takes exactly one parameter, got {s:?}")));
            }
            params[0]
                .parse()
                .map_err(|_| bad(format!("bad integer {:?} in {s:?}", params[0])))
        };
        match family {
            "cycle" => Ok(FamilySpec::Cycle { n: one_int("cycle")? }),
            "complete" => Ok(FamilySpec::Complete { n: one_int("complete")? }),
            "complete_bipartite" => Ok(FamilySpec::CompleteBipartite {
                half: one_int("complete_bipartite")?,
            }),
            "hypercube" => Ok(FamilySpec::Hypercube { dim: one_int("hypercube")? }),
            "circulant" => {
                if params.len() != 2 {
                    return Err(bad(format!(
                        "circulant takes N and a comma-separated connection set, got {s:?}"
                    )));
                }
                let n = params[0]
                    .parse()
                    .map_err(|_| bad(format!("bad integer {:?} in {s:?}", params[0])))?;
                let mut connections = Vec::new();
                for item in params[1].split(',') {
                    connections.push(
                        item.parse()
                            .map_err(|_| bad(format!("bad integer {item:?} in {s:?}")))?,
                    );
                }
                connections.sort_unstable();
                Ok(FamilySpec::Circulant { n, connections })
            }
            "petersen" => {
                if !params.is_empty() {
                    return Err(bad(format!("petersen takes no parameters, got {s:?}")));
                }
                Ok(FamilySpec::Petersen)
            }
            other => Err(bad(format!("unknown family {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_matches_edge_list() {
        let g = cycle(4).unwrap();
        let (h, _) = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn complete_four() {
        let g = complete(4).unwrap();
        assert_eq!(g.degree(), Some(3));
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_complete());
    }

    #[test]
    fn prism_circulant() {
        // Triangular prism edge list enumerated directly from the circulant
        // definition: i ~ i±2 gives two triangles, i ~ i+3 the three rungs.
        let g = circulant(6, &[2, 3]).unwrap();
        assert_eq!(g.degree(), Some(3));
        assert_eq!(g.edge_count(), 9);
        let expected = vec![
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 4),
            (2, 5),
            (3, 5),
        ];
        assert_eq!(g.edges().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn circulant_half_offset_not_doubled() {
        // C_4({2}) is a perfect matching: degree 1, not 2.
        let g = circulant(4, &[2]).unwrap();
        assert_eq!(g.degree(), Some(1));
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!(g.n(), 10);
        assert_eq!(g.degree(), Some(3));
        assert_eq!(g.edge_count(), 15);
        assert!(g.is_connected());
        // Girth 5: no triangles or quadrilaterals through vertex 0.
        for &a in g.neighbors(0) {
            for &b in g.neighbors(a) {
                assert!(b == 0 || !g.has_edge(0, b));
            }
        }
    }

    #[test]
    fn hypercube_shape() {
        let g = hypercube(3).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.degree(), Some(3));
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn bipartite_shape() {
        let g = complete_bipartite(3).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.degree(), Some(3));
        assert_eq!(g.edge_count(), 9);
        assert!(!g.has_edge(0, 1));
        assert!(g.has_edge(0, 3));
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(cycle(2), Err(GraphError::BadFamilyParams(_))));
        assert!(matches!(complete(1), Err(GraphError::BadFamilyParams(_))));
        assert!(matches!(hypercube(0), Err(GraphError::BadFamilyParams(_))));
        assert!(matches!(
            circulant(6, &[]),
            Err(GraphError::BadFamilyParams(_))
        ));
        assert!(matches!(
            circulant(6, &[4]),
            Err(GraphError::BadFamilyParams(_))
        ));
        assert!(matches!(
            circulant(6, &[2, 2]),
            Err(GraphError::BadFamilyParams(_))
        ));
    }

    #[test]
    fn spec_string_round_trip() {
        for text in [
            "cycle:9",
            "complete:5",
            "complete_bipartite:4",
            "hypercube:3",
            "circulant:6:2,3",
            "petersen",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert!("cycle".parse::<FamilySpec>().is_err());
        assert!("grid:3:3".parse::<FamilySpec>().is_err());
        assert!("circulant:6:2,x".parse::<FamilySpec>().is_err());
    }
}
