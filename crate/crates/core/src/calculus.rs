//! Discrete difference calculus on vertex functions of a regular graph:
//! the normalized Laplacian `Δu(x) = (1/d)Σ_{y~x}(u(y) - u(x))`, the edge
//! difference `∇_xy u = u(y) - u(x)`, the carré du champ
//! `Γ(u,v)(x) = (1/2d)Σ_{y~x}(∇_xy u)(∇_xy v)`, and the degree-weighted
//! inner product `⟨u,v⟩ = Σ_x u(x)v(x)·d`.

use std::ops::Index;

use thiserror::Error;

use crate::graph::Graph;
use crate::kahan::KahanSum;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CalculusError {
    #[error("vertex function has length {got}, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("graph is not regular")]
    NotRegular,
}

/// A real-valued function on the vertices of a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexFunction {
    values: Vec<f64>,
}

impl VertexFunction {
    pub fn new(values: Vec<f64>) -> Self {
        VertexFunction { values }
    }

    pub fn constant(n: usize, value: f64) -> Self {
        VertexFunction {
            values: vec![value; n],
        }
    }

    pub fn zeros(n: usize) -> Self {
        Self::constant(n, 0.0)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.values.iter()
    }

    /// Pointwise product `u·v` (lengths must already agree).
    pub fn pointwise_mul(&self, other: &VertexFunction) -> VertexFunction {
        debug_assert_eq!(self.len(), other.len());
        VertexFunction::new(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        )
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }
}

impl Index<usize> for VertexFunction {
    type Output = f64;

    fn index(&self, x: usize) -> &f64 {
        &self.values[x]
    }
}

impl From<Vec<f64>> for VertexFunction {
    fn from(values: Vec<f64>) -> Self {
        VertexFunction::new(values)
    }
}

fn check_len(g: &Graph, u: &VertexFunction) -> Result<(), CalculusError> {
    if u.len() != g.n() {
        return Err(CalculusError::LengthMismatch {
            expected: g.n(),
            got: u.len(),
        });
    }
    Ok(())
}

fn regular_degree(g: &Graph) -> Result<usize, CalculusError> {
    g.degree().ok_or(CalculusError::NotRegular)
}

/// `(Δu)(x) = (1/d) Σ_{y~x} (u(y) - u(x))`.
pub fn apply_laplacian(g: &Graph, u: &VertexFunction) -> Result<VertexFunction, CalculusError> {
    check_len(g, u)?;
    let d = regular_degree(g)? as f64;
    let values = (0..g.n())
        .map(|x| {
            if d == 0.0 {
                return 0.0;
            }
            let mut acc = KahanSum::new();
            for &y in g.neighbors(x) {
                acc.add(u[y] - u[x]);
            }
            acc.value() / d
        })
        .collect();
    Ok(VertexFunction::new(values))
}

/// Degree-weighted inner product `Σ_x u(x)v(x)·d`.
pub fn inner(g: &Graph, u: &VertexFunction, v: &VertexFunction) -> Result<f64, CalculusError> {
    check_len(g, u)?;
    check_len(g, v)?;
    let d = regular_degree(g)? as f64;
    let mut acc = KahanSum::new();
    for x in 0..g.n() {
        acc.add(u[x] * v[x]);
    }
    Ok(acc.value() * d)
}

/// Norm induced by [`inner`].
pub fn weighted_norm(g: &Graph, u: &VertexFunction) -> Result<f64, CalculusError> {
    Ok(inner(g, u, u)?.sqrt())
}

/// `∇_xy u = u(y) - u(x)`; antisymmetric in the edge orientation.
pub fn grad_edge(u: &VertexFunction, x: usize, y: usize) -> f64 {
    u[y] - u[x]
}

/// Carré du champ via the edge sum `(1/2d) Σ_{y~x} (∇_xy u)(∇_xy v)`.
pub fn gamma(
    g: &Graph,
    u: &VertexFunction,
    v: &VertexFunction,
) -> Result<VertexFunction, CalculusError> {
    check_len(g, u)?;
    check_len(g, v)?;
    let d = regular_degree(g)? as f64;
    let values = (0..g.n())
        .map(|x| {
            if d == 0.0 {
                return 0.0;
            }
            let mut acc = KahanSum::new();
            for &y in g.neighbors(x) {
                acc.add(grad_edge(u, x, y) * grad_edge(v, x, y));
            }
            acc.value() / (2.0 * d)
        })
        .collect();
    Ok(VertexFunction::new(values))
}

/// Carré du champ via its definition `½(Δ(uv) - (Δu)v - u(Δv))`.
///
/// Agrees with [`gamma`] pointwise up to rounding; kept as an independent
/// route for self-checks.
pub fn gamma_definitional(
    g: &Graph,
    u: &VertexFunction,
    v: &VertexFunction,
) -> Result<VertexFunction, CalculusError> {
    check_len(g, u)?;
    check_len(g, v)?;
    let product = u.pointwise_mul(v);
    let lap_product = apply_laplacian(g, &product)?;
    let lap_u = apply_laplacian(g, u)?;
    let lap_v = apply_laplacian(g, v)?;
    let values = (0..g.n())
        .map(|x| 0.5 * (lap_product[x] - lap_u[x] * v[x] - u[x] * lap_v[x]))
        .collect();
    Ok(VertexFunction::new(values))
}

/// Trial quantity `Σ_{x~y} u_i(x) u_i(y) (∇_xy h)²`, summed over each
/// unordered adjacent pair once.
pub fn phi(g: &Graph, u_i: &VertexFunction, h: &VertexFunction) -> Result<f64, CalculusError> {
    check_len(g, u_i)?;
    check_len(g, h)?;
    let mut acc = KahanSum::new();
    for (x, y) in g.edges() {
        let dh = grad_edge(h, x, y);
        acc.add(u_i[x] * u_i[y] * dh * dh);
    }
    Ok(acc.value())
}

/// Deviation of the summation-by-parts identity
/// `⟨u, Δv⟩ = -Σ_x Γ(u,v)(x)·d`; zero in exact arithmetic.
pub fn check_green(
    g: &Graph,
    u: &VertexFunction,
    v: &VertexFunction,
) -> Result<f64, CalculusError> {
    let lap_v = apply_laplacian(g, v)?;
    let lhs = inner(g, u, &lap_v)?;
    let d = regular_degree(g)? as f64;
    let gamma_uv = gamma(g, u, v)?;
    let mut acc = KahanSum::new();
    for x in 0..g.n() {
        acc.add(gamma_uv[x]);
    }
    Ok((lhs + acc.value() * d).abs())
}

/// Deviation of the product rule
/// `Γ(u, v₁v₂)(x) = Γ(u,v₁)v₂(x) + Γ(u,v₂)v₁(x) + (1/2d)Σ_{y~x}(∇u)(∇v₁)(∇v₂)`,
/// maximized over vertices, together with its summed form
/// `Σ_V Γ(u, v₁v₂) = Σ_V (Γ(u,v₁)v₂ + Γ(u,v₂)v₁)`.
pub fn check_product_rule(
    g: &Graph,
    u: &VertexFunction,
    v1: &VertexFunction,
    v2: &VertexFunction,
) -> Result<f64, CalculusError> {
    check_len(g, u)?;
    check_len(g, v1)?;
    check_len(g, v2)?;
    let d = regular_degree(g)? as f64;
    if d == 0.0 {
        return Ok(0.0);
    }
    let product = v1.pointwise_mul(v2);
    let gamma_prod = gamma(g, u, &product)?;
    let gamma_v1 = gamma(g, u, v1)?;
    let gamma_v2 = gamma(g, u, v2)?;

    let mut max_dev: f64 = 0.0;
    let mut sum_lhs = KahanSum::new();
    let mut sum_rhs = KahanSum::new();
    for x in 0..g.n() {
        let mut third = KahanSum::new();
        for &y in g.neighbors(x) {
            third.add(grad_edge(u, x, y) * grad_edge(v1, x, y) * grad_edge(v2, x, y));
        }
        let rhs = gamma_v1[x] * v2[x] + gamma_v2[x] * v1[x] + third.value() / (2.0 * d);
        max_dev = max_dev.max((gamma_prod[x] - rhs).abs());
        sum_lhs.add(gamma_prod[x]);
        sum_rhs.add(gamma_v1[x] * v2[x] + gamma_v2[x] * v1[x]);
    }
    let summed_dev = (sum_lhs.value() - sum_rhs.value()).abs();
    Ok(max_dev.max(summed_dev))
}
