//! Quadrature kernels: periodic trapezoid sums for closed contours,
//! Gauss–Legendre rules on `[0, 1]`, and collapsed (Duffy) tensor rules on
//! the solid simplex `A_d = {x ∈ ℝ^d : x_j ≥ 0, Σ x_j ≤ 1}`.
//!
//! The Genocchi–Hermite representation integrates over the standard simplex
//! `Σ_d ⊂ ℝ^{d+1}` against Hausdorff measure with a `1/√(d+1)` prefactor.
//! Writing `Σ_d` as a graph over `A_d` gives `dH_d = √(1+d) dx`, so the two
//! factors cancel and the surface integral is the plain Lebesgue integral
//! over `A_d` computed here.

use alloc::{format, vec::Vec};
use core::f64::consts::{PI, TAU};

// Inherent when std is linked, needed under no_std.
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result, C64};

/// Default per-axis order of [`SimplexRule`].
pub const DEFAULT_SIMPLEX_ORDER: usize = 16;

/// Largest supported Gauss–Legendre order.
pub const MAX_GAUSS_ORDER: usize = 64;

/// `(1/2πi) Σ_j value_j · weight_j`.
///
/// With weights from [`crate::geometry::sample_boundary`] this is the
/// trapezoid approximation of `(1/2πi) ∮_Γ g(t) dt`.
pub fn periodic_trapezoid(values: &[C64], weights: &[C64]) -> C64 {
    debug_assert_eq!(values.len(), weights.len());
    let sum: C64 = values.iter().zip(weights).map(|(v, w)| v * w).sum();
    sum / C64::new(0.0, TAU)
}

/// Gauss–Legendre nodes and weights mapped to `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// Gauss–Legendre rule of the given order on `[0, 1]`, exact for
/// polynomials of degree `≤ 2·order − 1`.
pub fn gauss_legendre(order: usize) -> Result<GaussRule> {
    if order == 0 || order > MAX_GAUSS_ORDER {
        return Err(Error::InvalidInput(format!(
            "Gauss-Legendre order must be in 1..={MAX_GAUSS_ORDER}, got {order}"
        )));
    }
    let n = order;
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d.is_finite() {
            dp = d;
        }
        nodes.push(0.5 * (1.0 - x));
        weights.push(1.0 / ((1.0 - x * x) * dp * dp));
    }
    Ok(GaussRule { nodes, weights })
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Tensor Gauss–Legendre rule pulled back to `A_d` by the collapsed map
/// `x_k = u_k ∏_{i<k} (1 − u_i)`, with Jacobian `∏_i (1 − u_i)^{d−i}`.
#[derive(Debug, Clone)]
pub struct SimplexRule {
    dim: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl SimplexRule {
    pub fn new(dim: usize, order: usize) -> Result<Self> {
        let line = gauss_legendre(order)?;
        let count = order
            .checked_pow(dim as u32)
            .filter(|&c| c <= 1 << 24)
            .ok_or_else(|| Error::InvalidInput(format!("simplex rule {order}^{dim} is too large")))?;
        let mut nodes = Vec::with_capacity(count * dim);
        let mut weights = Vec::with_capacity(count);
        let mut idx = alloc::vec![0usize; dim];
        for _ in 0..count {
            let mut remaining = 1.0;
            let mut weight = 1.0;
            for &i in &idx {
                let u = line.nodes[i];
                nodes.push(u * remaining);
                weight *= line.weights[i] * remaining;
                remaining *= 1.0 - u;
            }
            weights.push(weight);
            for slot in idx.iter_mut().rev() {
                *slot += 1;
                if *slot < order {
                    break;
                }
                *slot = 0;
            }
        }
        Ok(SimplexRule { dim, nodes, weights })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Iterator over `(point, weight)` pairs.
    pub fn points(&self) -> impl Iterator<Item = (&[f64], f64)> + '_ {
        let d = self.dim;
        self.weights.iter().enumerate().map(move |(k, &w)| (&self.nodes[k * d..(k + 1) * d], w))
    }

    pub fn integrate<F: FnMut(&[f64]) -> C64>(&self, mut f: F) -> C64 {
        self.points().map(|(x, w)| f(x) * w).sum()
    }
}

/// `∫_{A_d} integrand(x) dx` with a fresh [`SimplexRule`].
pub fn simplex_integrate<F: FnMut(&[f64]) -> C64>(dim: usize, integrand: F, order: usize) -> Result<C64> {
    Ok(SimplexRule::new(dim, order)?.integrate(integrand))
}
