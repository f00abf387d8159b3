//! Divided differences of holomorphic functions.
//!
//! Two independent routes: the triangular Newton table
//! ([`divdiff_recursive`]) and the Genocchi–Hermite simplex integral of the
//! `n`-th derivative ([`divdiff_gh`]), which stays finite when nodes
//! coincide.
//!
//! The Newton table divides each sub-block by (first node − last node). The
//! result is a symmetric function of the nodes, so any other consistent
//! elimination order gives the same value; [`check_symmetry`] measures this.

use alloc::{format, vec::Vec};
use core::f64::consts::TAU;

// Inherent when std is linked, needed under no_std.
#[allow(unused_imports)]
use num_traits::Float;
use rand::{seq::SliceRandom, Rng};

use crate::{
    quadrature::{SimplexRule, DEFAULT_SIMPLEX_ORDER},
    Error, Result, C64,
};

/// Nodes closer than this times the node spread are treated as coincident
/// by the recursive route.
pub const DIAG_TOL_REL: f64 = 1e-8;

/// An evaluable holomorphic function, optionally with analytic derivatives.
pub trait Holomorphic {
    fn eval(&self, z: C64) -> C64;

    /// `f^{(order)}(z)` when known in closed form.
    fn derivative(&self, order: u32, z: C64) -> Option<C64> {
        let _ = (order, z);
        None
    }
}

impl<H: Holomorphic + ?Sized> Holomorphic for &H {
    fn eval(&self, z: C64) -> C64 {
        (**self).eval(z)
    }

    fn derivative(&self, order: u32, z: C64) -> Option<C64> {
        (**self).derivative(order, z)
    }
}

/// Test functions with closed-form derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Analytic {
    Exp,
    /// `z^m`.
    Monomial(u32),
    /// `1/(z − a)^order`.
    Pole { a: C64, order: u32 },
}

impl Holomorphic for Analytic {
    fn eval(&self, z: C64) -> C64 {
        match *self {
            Analytic::Exp => z.exp(),
            Analytic::Monomial(m) => z.powu(m),
            Analytic::Pole { a, order } => (z - a).powi(-(order as i32)),
        }
    }

    fn derivative(&self, k: u32, z: C64) -> Option<C64> {
        Some(match *self {
            Analytic::Exp => z.exp(),
            Analytic::Monomial(m) => {
                if k > m {
                    C64::new(0.0, 0.0)
                } else {
                    let falling: f64 = (m - k + 1..=m).map(|j| j as f64).product();
                    z.powu(m - k) * falling
                }
            }
            Analytic::Pole { a, order } => {
                // d^k/dz^k (z−a)^{−r} = (−1)^k r(r+1)…(r+k−1) (z−a)^{−r−k}
                let rising: f64 = (0..k).map(|j| (order + j) as f64).product();
                let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
                (z - a).powi(-((order + k) as i32)) * (sign * rising)
            }
        })
    }
}

/// Wraps a closure without derivative information.
pub struct FnHandle<F>(pub F);

impl<F: Fn(C64) -> C64> Holomorphic for FnHandle<F> {
    fn eval(&self, z: C64) -> C64 {
        (self.0)(z)
    }
}

/// Supplies derivatives by Cauchy's formula on a circle of fixed radius:
/// `f^{(k)}(z) = k!/(N r^k) Σ_j f(z + r e^{iθ_j}) e^{−ikθ_j}`.
///
/// The circle must lie in the domain of holomorphy of `inner`.
pub struct CauchyDerivative<H> {
    pub inner: H,
    pub radius: f64,
    pub nodes: usize,
}

impl<H: Holomorphic> CauchyDerivative<H> {
    pub fn new(inner: H, radius: f64) -> Self {
        CauchyDerivative { inner, radius, nodes: 64 }
    }
}

impl<H: Holomorphic> Holomorphic for CauchyDerivative<H> {
    fn eval(&self, z: C64) -> C64 {
        self.inner.eval(z)
    }

    fn derivative(&self, k: u32, z: C64) -> Option<C64> {
        if let Some(d) = self.inner.derivative(k, z) {
            return Some(d);
        }
        if k == 0 {
            return Some(self.inner.eval(z));
        }
        let n = self.nodes;
        let sum: C64 = (0..n)
            .map(|j| {
                let theta = TAU * j as f64 / n as f64;
                self.inner.eval(z + C64::from_polar(self.radius, theta)) * C64::from_polar(1.0, -(k as f64) * theta)
            })
            .sum();
        let factorial: f64 = (1..=k).map(|j| j as f64).product();
        Some(sum * (factorial / (n as f64 * self.radius.powi(k as i32))))
    }
}

fn spread(nodes: &[C64]) -> f64 {
    let mut s: f64 = 0.0;
    for (i, a) in nodes.iter().enumerate() {
        for b in &nodes[i + 1..] {
            s = s.max((a - b).norm());
        }
    }
    s
}

/// Order-`(m−1)` divided difference `f^{[m−1]}(z_1, …, z_m)` from the Newton
/// table.
pub fn divdiff_recursive<H: Holomorphic + ?Sized>(f: &H, nodes: &[C64]) -> Result<C64> {
    let m = nodes.len();
    if m == 0 {
        return Err(Error::InvalidInput("divided difference of zero nodes".into()));
    }
    let tol = DIAG_TOL_REL * spread(nodes);
    for i in 0..m {
        for j in i + 1..m {
            if (nodes[i] - nodes[j]).norm() <= tol {
                return Err(Error::CoincidentNodes { i, j, tolerance: tol });
            }
        }
    }
    let mut table: Vec<C64> = nodes.iter().map(|&z| f.eval(z)).collect();
    for k in 1..m {
        for i in 0..m - k {
            table[i] = (table[i] - table[i + 1]) / (nodes[i] - nodes[i + k]);
        }
    }
    Ok(table[0])
}

/// Genocchi–Hermite representation
/// `f^{[n]}(z) = ∫_{A_n} f^{(n)}(Σ_{j≤n} τ_j z_j + (1 − Σ τ_j) z_{n+1}) dτ`.
pub fn divdiff_gh_with_rule<H: Holomorphic + ?Sized>(f: &H, nodes: &[C64], rule: &SimplexRule) -> Result<C64> {
    let m = nodes.len();
    if m == 0 {
        return Err(Error::InvalidInput("divided difference of zero nodes".into()));
    }
    let n = m - 1;
    if rule.dim() != n {
        return Err(Error::InvalidInput(format!("simplex rule of dimension {} for {m} nodes", rule.dim())));
    }
    let last = nodes[n];
    let mut missing = false;
    let value = rule.integrate(|tau| {
        let mut point = last;
        for (t, z) in tau.iter().zip(nodes) {
            point += (z - last) * *t;
        }
        f.derivative(n as u32, point).unwrap_or_else(|| {
            missing = true;
            C64::new(0.0, 0.0)
        })
    });
    if missing {
        return Err(Error::InvalidInput(format!("function provides no derivative of order {n}")));
    }
    Ok(value)
}

/// [`divdiff_gh_with_rule`] with a fresh rule of the given per-axis order.
pub fn divdiff_gh<H: Holomorphic + ?Sized>(f: &H, nodes: &[C64], order: usize) -> Result<C64> {
    let rule = SimplexRule::new(nodes.len().saturating_sub(1), order)?;
    divdiff_gh_with_rule(f, nodes, &rule)
}

/// [`divdiff_gh`] at the default order.
pub fn divdiff_gh_default<H: Holomorphic + ?Sized>(f: &H, nodes: &[C64]) -> Result<C64> {
    divdiff_gh(f, nodes, DEFAULT_SIMPLEX_ORDER)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryReport {
    pub max_deviation: f64,
    pub permutations_checked: usize,
}

/// Largest change of the recursive divided difference under node
/// permutations. All permutations are used when `m! ≤ trials`, otherwise
/// `trials` random ones.
pub fn check_symmetry<H, R>(f: &H, nodes: &[C64], trials: usize, rng: &mut R) -> Result<SymmetryReport>
where
    H: Holomorphic + ?Sized,
    R: Rng + ?Sized,
{
    let base = divdiff_recursive(f, nodes)?;
    let m = nodes.len();
    let total: Option<usize> = (1..=m).try_fold(1usize, |acc, k| acc.checked_mul(k));
    let mut max_deviation: f64 = 0.0;
    let mut checked = 0;
    let mut measure = |perm: &[C64]| -> Result<()> {
        let v = divdiff_recursive(f, perm)?;
        max_deviation = max_deviation.max((v - base).norm());
        checked += 1;
        Ok(())
    };
    match total {
        Some(t) if t <= trials => {
            let mut idx: Vec<usize> = (0..m).collect();
            loop {
                let perm: Vec<C64> = idx.iter().map(|&k| nodes[k]).collect();
                measure(&perm)?;
                if !next_permutation(&mut idx) {
                    break;
                }
            }
        }
        _ => {
            let mut perm = nodes.to_vec();
            for _ in 0..trials {
                perm.shuffle(rng);
                measure(&perm)?;
            }
        }
    }
    Ok(SymmetryReport { max_deviation, permutations_checked: checked })
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
