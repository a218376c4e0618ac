//! Automorphism search and transitivity classification.
//!
//! A graph is vertex-transitive when its automorphism group acts
//! transitively on vertices, and arc-transitive (symmetric) when for any
//! two ordered adjacent pairs some automorphism carries one to the other.
//! Both properties are decided by a constrained backtracking search:
//! images are assigned in BFS order from the constrained vertices, pruning
//! on degree equality and adjacency consistency with everything assigned
//! so far. The search is exact; a node budget turns oversized instances
//! into an explicit "unknown" instead of a guess.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::calculus::VertexFunction;
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("automorphism search exceeded the node budget of {0}")]
    SearchBudgetExceeded(u64),
    #[error("constraint sources must be distinct")]
    DuplicateConstraintSource,
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("node limit must be at least 1")]
    ZeroNodeLimit,
    #[error("graph must be connected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("permutation has length {got}, function has length {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

/// A bijection on `{0..n-1}`, stored as the image table `images[x] = γ(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Validates that `images` is a bijection.
    pub fn new(images: Vec<usize>) -> Option<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &y in &images {
            if y >= n || seen[y] {
                return None;
            }
            seen[y] = true;
        }
        Some(Permutation { images })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Checks `x ~ y ⇔ γ(x) ~ γ(y)` edge by edge. For a bijection it is
    /// enough that every edge maps to an edge: distinct edges map to
    /// distinct edges, so the edge set maps onto itself.
    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.images.len() == g.n()
            && g.edges()
                .all(|(x, y)| g.has_edge(self.images[x], self.images[y]))
    }
}

/// Outcome of a single transitivity question.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransitivityCheck {
    /// `Some(answer)` when decided, `None` when the budget ran out.
    pub verdict: Option<bool>,
    /// For a negative answer, a pair with no connecting automorphism:
    /// vertices for vertex-transitivity, flattened arcs for
    /// arc-transitivity (see [`SymmetryReport`]).
    pub witness: Option<(usize, usize)>,
    /// Total search nodes spent across all sub-searches.
    pub search_nodes: u64,
    pub truncated: bool,
}

/// Combined classification of one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub vertex_transitive: Option<bool>,
    pub arc_transitive: Option<bool>,
    /// Vertex pair not connected by any automorphism, when one was found.
    pub vertex_witness: Option<(usize, usize)>,
    /// Arc pair not connected by any automorphism, when one was found.
    pub arc_witness: Option<((usize, usize), (usize, usize))>,
    pub search_nodes: u64,
    pub truncated: bool,
}

/// Searches for an automorphism sending `source -> target` for every
/// constraint pair. Returns `None` when provably no such automorphism
/// exists; exceeding `node_limit` is an error so a timeout is never
/// mistaken for a proof.
pub fn find_automorphism(
    g: &Graph,
    constraints: &[(usize, usize)],
    node_limit: u64,
) -> Result<Option<Permutation>, SymmetryError> {
    let mut budget = Budget {
        remaining: node_limit,
        limit: node_limit,
        spent: 0,
    };
    find_automorphism_budgeted(g, constraints, &mut budget)
}

struct Budget {
    remaining: u64,
    limit: u64,
    spent: u64,
}

impl Budget {
    fn charge(&mut self) -> Result<(), SymmetryError> {
        if self.remaining == 0 {
            return Err(SymmetryError::SearchBudgetExceeded(self.limit));
        }
        self.remaining -= 1;
        self.spent += 1;
        Ok(())
    }
}

fn find_automorphism_budgeted(
    g: &Graph,
    constraints: &[(usize, usize)],
    budget: &mut Budget,
) -> Result<Option<Permutation>, SymmetryError> {
    let n = g.n();
    if budget.limit == 0 {
        return Err(SymmetryError::ZeroNodeLimit);
    }
    for (i, &(s, t)) in constraints.iter().enumerate() {
        if s >= n {
            return Err(SymmetryError::VertexOutOfRange { vertex: s, n });
        }
        if t >= n {
            return Err(SymmetryError::VertexOutOfRange { vertex: t, n });
        }
        if constraints[..i].iter().any(|&(s2, _)| s2 == s) {
            return Err(SymmetryError::DuplicateConstraintSource);
        }
    }

    // Assign images in BFS order from the constrained vertices so every
    // later vertex has an already-mapped neighbor to prune against.
    let order = bfs_order(g, constraints.iter().map(|&(s, _)| s));

    const UNSET: usize = usize::MAX;
    let mut image = vec![UNSET; n];
    let mut preimage = vec![UNSET; n];
    let mut stack: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut depth = 0usize;

    let candidates_for = |g: &Graph, image: &[usize], preimage: &[usize], v: usize| -> Vec<usize> {
        // A mapped neighbor confines the candidates to its image's
        // neighborhood; otherwise fall back to all unused vertices.
        let anchor = g.neighbors(v).iter().find(|&&u| image[u] != UNSET);
        match anchor {
            Some(&u) => g
                .neighbors(image[u])
                .iter()
                .copied()
                .filter(|&w| preimage[w] == UNSET)
                .collect(),
            None => (0..g.n()).filter(|&w| preimage[w] == UNSET).collect(),
        }
    };

    // Partial-adjacency consistency, both directions: for every already
    // assigned u, v ~ u must hold exactly when w ~ γ(u).
    let consistent = |g: &Graph, image: &[usize], preimage: &[usize], v: usize, w: usize| -> bool {
        if g.vertex_degree(v) != g.vertex_degree(w) {
            return false;
        }
        for &u in g.neighbors(v) {
            if image[u] != UNSET && !g.has_edge(w, image[u]) {
                return false;
            }
        }
        for &wu in g.neighbors(w) {
            if preimage[wu] != UNSET && !g.has_edge(v, preimage[wu]) {
                return false;
            }
        }
        true
    };

    // Seed with the constrained assignments.
    for &(s, t) in constraints {
        budget.charge()?;
        if preimage[t] != UNSET || !consistent(g, &image, &preimage, s, t) {
            return Ok(None);
        }
        image[s] = t;
        preimage[t] = s;
    }
    let constrained = constraints.len();

    loop {
        if depth + constrained == order.len() {
            // All vertices assigned; adjacency was enforced incrementally.
            let perm = Permutation::new(image.clone()).expect("search built a bijection");
            debug_assert!(perm.is_automorphism(g));
            return Ok(Some(perm));
        }
        let v = order[depth + constrained];
        let cands = candidates_for(g, &image, &preimage, v);
        stack.push((v, cands));
        loop {
            let (v, cands) = stack.last_mut().expect("stack nonempty inside loop");
            let v = *v;
            match cands.pop() {
                Some(w) => {
                    budget.charge()?;
                    if consistent(g, &image, &preimage, v, w) {
                        image[v] = w;
                        preimage[w] = v;
                        depth += 1;
                        break;
                    }
                }
                None => {
                    stack.pop();
                    match stack.last() {
                        Some(&(prev, _)) => {
                            preimage[image[prev]] = UNSET;
                            image[prev] = UNSET;
                            depth -= 1;
                        }
                        None => return Ok(None),
                    }
                }
            }
        }
    }
}

fn bfs_order(g: &Graph, roots: impl Iterator<Item = usize>) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for r in roots {
        if !seen[r] {
            seen[r] = true;
            order.push(r);
            queue.push_back(r);
        }
    }
    let mut fallback = 0usize;
    loop {
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
        // Disconnected graphs: restart from the next unseen vertex.
        while fallback < n && seen[fallback] {
            fallback += 1;
        }
        if fallback == n {
            return order;
        }
        seen[fallback] = true;
        order.push(fallback);
        queue.push_back(fallback);
    }
}

/// Decides vertex-transitivity by searching, for every vertex `v`, for an
/// automorphism with `γ(0) = v`. Short-circuits on the first failure.
pub fn is_vertex_transitive(g: &Graph, node_limit: u64) -> Result<TransitivityCheck, SymmetryError> {
    if !g.is_connected() {
        return Err(SymmetryError::Disconnected);
    }
    let mut spent = 0u64;
    for v in 1..g.n() {
        let mut budget = Budget {
            remaining: node_limit,
            limit: node_limit,
            spent: 0,
        };
        let outcome = find_automorphism_budgeted(g, &[(0, v)], &mut budget);
        spent += budget.spent;
        match outcome {
            Ok(Some(_)) => {}
            Ok(None) => {
                return Ok(TransitivityCheck {
                    verdict: Some(false),
                    witness: Some((0, v)),
                    search_nodes: spent,
                    truncated: false,
                })
            }
            Err(SymmetryError::SearchBudgetExceeded(_)) => {
                return Ok(TransitivityCheck {
                    verdict: None,
                    witness: None,
                    search_nodes: spent,
                    truncated: true,
                })
            }
            Err(other) => return Err(other),
        }
    }
    Ok(TransitivityCheck {
        verdict: Some(true),
        witness: None,
        search_nodes: spent,
        truncated: false,
    })
}

/// Decides arc-transitivity: fixes the reference arc `(x₀, y₀)` with
/// `x₀ = 0` and tests every ordered arc `(x', y')` for an automorphism with
/// `γ(x₀) = x'`, `γ(y₀) = y'`. Transitivity of the group action makes the
/// fixed reference equivalent to the all-pairs definition.
pub fn is_arc_transitive(g: &Graph, node_limit: u64) -> Result<SymmetryReport, SymmetryError> {
    if !g.is_connected() {
        return Err(SymmetryError::Disconnected);
    }
    if g.edge_count() == 0 {
        return Err(SymmetryError::NoEdges);
    }
    let x0 = 0usize;
    let y0 = g.neighbors(x0)[0];
    let mut spent = 0u64;
    for (x, y) in g.arcs() {
        let mut budget = Budget {
            remaining: node_limit,
            limit: node_limit,
            spent: 0,
        };
        let outcome = find_automorphism_budgeted(g, &[(x0, x), (y0, y)], &mut budget);
        spent += budget.spent;
        match outcome {
            Ok(Some(_)) => {}
            Ok(None) => {
                return Ok(SymmetryReport {
                    vertex_transitive: None,
                    arc_transitive: Some(false),
                    vertex_witness: None,
                    arc_witness: Some(((x0, y0), (x, y))),
                    search_nodes: spent,
                    truncated: false,
                })
            }
            Err(SymmetryError::SearchBudgetExceeded(_)) => {
                return Ok(SymmetryReport {
                    vertex_transitive: None,
                    arc_transitive: None,
                    vertex_witness: None,
                    arc_witness: None,
                    search_nodes: spent,
                    truncated: true,
                })
            }
            Err(other) => return Err(other),
        }
    }
    Ok(SymmetryReport {
        // Arc-transitivity moves any vertex onto vertex 0 along an arc.
        vertex_transitive: Some(true),
        arc_transitive: Some(true),
        vertex_witness: None,
        arc_witness: None,
        search_nodes: spent,
        truncated: false,
    })
}

/// Runs both transitivity checks and merges them into one report.
pub fn classify(g: &Graph, node_limit: u64) -> Result<SymmetryReport, SymmetryError> {
    let vertex = is_vertex_transitive(g, node_limit)?;
    if vertex.truncated {
        return Ok(SymmetryReport {
            vertex_transitive: None,
            arc_transitive: None,
            vertex_witness: None,
            arc_witness: None,
            search_nodes: vertex.search_nodes,
            truncated: true,
        });
    }
    if vertex.verdict == Some(false) {
        // Not vertex-transitive rules out arc-transitivity outright for
        // connected graphs with at least one edge.
        let arc = if g.edge_count() > 0 { Some(false) } else { None };
        return Ok(SymmetryReport {
            vertex_transitive: Some(false),
            arc_transitive: arc,
            vertex_witness: vertex.witness,
            arc_witness: None,
            search_nodes: vertex.search_nodes,
            truncated: false,
        });
    }
    let mut report = is_arc_transitive(g, node_limit)?;
    report.vertex_transitive = Some(true);
    report.vertex_witness = None;
    report.search_nodes += vertex.search_nodes;
    Ok(report)
}

/// Pull-back `(γu)(x) = u(γ(x))`.
pub fn pull_back(
    perm: &Permutation,
    u: &VertexFunction,
) -> Result<VertexFunction, SymmetryError> {
    if perm.len() != u.len() {
        return Err(SymmetryError::LengthMismatch {
            expected: u.len(),
            got: perm.len(),
        });
    }
    Ok(VertexFunction::new(
        (0..u.len()).map(|x| u[perm.apply(x)]).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn cycle(n: usize) -> Graph {
        FamilySpec::Cycle { n }.generate().unwrap()
    }

    const LIMIT: u64 = 1_000_000;

    #[test]
    fn rotation_found_on_five_cycle() {
        let g = cycle(5);
        let perm = find_automorphism(&g, &[(0, 2)], LIMIT).unwrap().unwrap();
        assert_eq!(perm.apply(0), 2);
        assert!(perm.is_automorphism(&g));
    }

    #[test]
    fn incompatible_constraints_on_five_cycle() {
        // Fixing 0 forces γ(1) ∈ {1, 4}, so (1 -> 2) is impossible.
        let g = cycle(5);
        assert_eq!(find_automorphism(&g, &[(0, 0), (1, 2)], LIMIT).unwrap(), None);
    }

    #[test]
    fn petersen_moves_any_vertex() {
        let g = FamilySpec::Petersen.generate().unwrap();
        let perm = find_automorphism(&g, &[(0, 1)], LIMIT).unwrap().unwrap();
        assert_eq!(perm.apply(0), 1);
        assert!(perm.is_automorphism(&g));
    }

    #[test]
    fn degree_mismatch_prunes_immediately() {
        let (path, _) = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        // Endpoint cannot map onto the center.
        assert_eq!(find_automorphism(&path, &[(0, 1)], LIMIT).unwrap(), None);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = cycle(12);
        assert_eq!(
            find_automorphism(&g, &[(0, 1)], 3).unwrap_err(),
            SymmetryError::SearchBudgetExceeded(3)
        );
    }

    #[test]
    fn duplicate_sources_rejected() {
        let g = cycle(4);
        assert_eq!(
            find_automorphism(&g, &[(0, 1), (0, 2)], LIMIT).unwrap_err(),
            SymmetryError::DuplicateConstraintSource
        );
    }

    #[test]
    fn vertex_transitivity_examples() {
        assert_eq!(
            is_vertex_transitive(&cycle(7), LIMIT).unwrap().verdict,
            Some(true)
        );
        let (path, _) = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let check = is_vertex_transitive(&path, LIMIT).unwrap();
        assert_eq!(check.verdict, Some(false));
        assert!(check.witness.is_some());
        let prism = FamilySpec::Circulant {
            n: 6,
            connections: vec![2, 3],
        }
        .generate()
        .unwrap();
        assert_eq!(
            is_vertex_transitive(&prism, LIMIT).unwrap().verdict,
            Some(true)
        );
    }

    #[test]
    fn arc_transitivity_examples() {
        for n in [3usize, 8, 17, 64] {
            let report = is_arc_transitive(&cycle(n), LIMIT).unwrap();
            assert_eq!(report.arc_transitive, Some(true), "C_{n}");
        }
        let k5 = FamilySpec::Complete { n: 5 }.generate().unwrap();
        assert_eq!(
            is_arc_transitive(&k5, LIMIT).unwrap().arc_transitive,
            Some(true)
        );
        let prism = FamilySpec::Circulant {
            n: 6,
            connections: vec![2, 3],
        }
        .generate()
        .unwrap();
        let report = is_arc_transitive(&prism, LIMIT).unwrap();
        assert_eq!(report.arc_transitive, Some(false));
        assert!(report.arc_witness.is_some());
    }

    #[test]
    fn classify_merges_both_answers() {
        let prism = FamilySpec::Circulant {
            n: 6,
            connections: vec![2, 3],
        }
        .generate()
        .unwrap();
        let report = classify(&prism, LIMIT).unwrap();
        assert_eq!(report.vertex_transitive, Some(true));
        assert_eq!(report.arc_transitive, Some(false));

        let truncated = classify(&cycle(16), 2).unwrap();
        assert!(truncated.truncated);
        assert_eq!(truncated.vertex_transitive, None);
        assert_eq!(truncated.arc_transitive, None);
    }

    #[test]
    fn pull_back_examples() {
        let u = VertexFunction::new(vec![1.0, 0.0, 0.0, 0.0]);
        let id = Permutation::identity(4);
        assert_eq!(pull_back(&id, &u).unwrap(), u);

        // Rotation by one on C_4: γ(x) = x+1, so (γu)(x) = u(x+1).
        let rot = Permutation::new(vec![1, 2, 3, 0]).unwrap();
        assert_eq!(
            pull_back(&rot, &u).unwrap().values(),
            &[0.0, 0.0, 0.0, 1.0]
        );

        let c = VertexFunction::constant(4, 2.5);
        assert_eq!(pull_back(&rot, &c).unwrap(), c);

        let short = VertexFunction::zeros(3);
        assert!(matches!(
            pull_back(&rot, &short),
            Err(SymmetryError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 0, 2]).is_some());
        assert!(Permutation::new(vec![1, 1, 2]).is_none());
        assert!(Permutation::new(vec![0, 3]).is_none());
    }
}
