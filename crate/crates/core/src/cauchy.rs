//! Cauchy-type integral transforms of boundary data.
//!
//! Every transform here is `(1/2πi) ∮_Γ φ(t) / p(z, t) dt` for some
//! polynomial kernel `p`, evaluated with the trapezoid grid of a
//! [`BoundaryGrid`]:
//!
//! - [`cauchy_transform`]: `p = t − z`;
//! - [`norlund_transform`]: `p = ω_n(w, t) = ∏ (t − w_j)`;
//! - [`symmetrized_transform`]: `p = q_n(z, t) = tⁿ − z₁tⁿ⁻¹ + … + (−1)ⁿ z_n`.
//!
//! Kernels are rejected when they come too close to zero on the grid, since
//! the trapezoid error grows like `exp(−c·N·dist)`.

use alloc::{format, string::String, sync::Arc, vec::Vec};
use core::cmp::Ordering;

// Inherent when std is linked, needed under no_std.
#[allow(unused_imports)]
use num_traits::Float;

use crate::{
    geometry::{BoundaryGrid, DomainBoundary},
    holder::fit_line,
    symmetric::{desymmetrize, eval_q},
    Error, Result, C64,
};

/// Kernel floor: the geometric-mean factor distance `min_j |p(z,t_j)|^{1/deg}`
/// must exceed this times the domain diameter.
pub const KERNEL_TOL_REL: f64 = 1e-4;

/// Default number of terms of the Weierstrass-type catalog function.
pub const DEFAULT_WEIERSTRASS_TERMS: u32 = 12;

/// A point `w = (w_1, …, w_n)` of the Cartesian power `Uⁿ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductPoint(pub Vec<C64>);

/// A point `z` of coefficient space, a candidate member of `ΣⁿU`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymPoint(pub Vec<C64>);

macro_rules! point_common {
    ($t:ty) => {
        impl $t {
            pub fn new(coords: Vec<C64>) -> Self {
                Self(coords)
            }

            pub fn coords(&self) -> &[C64] {
                &self.0
            }

            pub fn arity(&self) -> usize {
                self.0.len()
            }

            /// Euclidean norm in `ℂⁿ`.
            pub fn norm(&self) -> f64 {
                self.0.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
            }
        }

        impl From<Vec<C64>> for $t {
            fn from(v: Vec<C64>) -> Self {
                Self(v)
            }
        }
    };
}

point_common!(ProductPoint);
point_common!(SymPoint);

impl ProductPoint {
    /// `σ(w)` with `σ` given as an index table: output `k` is `w[perm[k]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        ProductPoint(perm.iter().map(|&k| self.0[k]).collect())
    }

    /// The `k`-fold diagonal point `(w, …, w)` of `(ℂⁿ)^k`.
    pub fn repeated(&self, k: usize) -> Self {
        let mut out = Vec::with_capacity(self.0.len() * k);
        for _ in 0..k {
            out.extend_from_slice(&self.0);
        }
        ProductPoint(out)
    }
}

/// Multi-index `γ ∈ ℕⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(n: usize) -> Self {
        MultiIndex(alloc::vec![0; n])
    }

    /// `|γ| = Σ γ_j`.
    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// All multi-indices of length `n` with `|γ| = order`, lexicographically
    /// descending.
    pub fn all_of_order(n: usize, order: u32) -> Vec<MultiIndex> {
        fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if prefix.len() + 1 == n {
                prefix.push(left);
                out.push(MultiIndex(prefix.clone()));
                prefix.pop();
                return;
            }
            for v in (0..=left).rev() {
                prefix.push(v);
                rec(n, left - v, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if order == 0 {
                out.push(MultiIndex(Vec::new()));
            }
            return out;
        }
        rec(n, order, &mut Vec::with_capacity(n), &mut out);
        out
    }
}

impl core::fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Catalog of boundary data.
#[derive(Debug, Clone, PartialEq)]
pub enum PhiSpec {
    /// `t^m`.
    Monomial(u32),
    /// `1/(t − a)^order`, with `a` in a hole or outside `Ū`.
    Pole { a: C64, order: u32 },
    /// `conj(t)`; on the unit circle this equals `1/t`.
    Conj,
    /// `W_α(θ) = Σ_{k=0}^{K} 2^{−αk} cos(2^k θ)` in the contour parameter.
    Weierstrass { alpha: f64, terms: u32 },
}

impl PhiSpec {
    pub fn eval(&self, t: C64, theta: f64) -> C64 {
        match *self {
            PhiSpec::Monomial(m) => t.powu(m),
            PhiSpec::Pole { a, order } => (t - a).powi(-(order as i32)),
            PhiSpec::Conj => t.conj(),
            PhiSpec::Weierstrass { alpha, terms } => C64::new(weierstrass(alpha, terms, theta), 0.0),
        }
    }

    /// The holomorphic extension into `U` when the data are the trace of a
    /// function holomorphic on a neighbourhood of `Ū`.
    pub fn holomorphic_extension(&self, z: C64) -> Option<C64> {
        match *self {
            PhiSpec::Monomial(m) => Some(z.powu(m)),
            PhiSpec::Pole { a, order } => Some((z - a).powi(-(order as i32))),
            _ => None,
        }
    }
}

impl core::fmt::Display for PhiSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PhiSpec::Monomial(m) => write!(f, "monomial {m}"),
            PhiSpec::Pole { a, order } => write!(f, "pole {} {} {order}", a.re, a.im),
            PhiSpec::Conj => write!(f, "conj"),
            PhiSpec::Weierstrass { alpha, terms } => write!(f, "weierstrass {alpha} {terms}"),
        }
    }
}

/// Truncated Weierstrass-type function, Hölder of order `alpha` uniformly in
/// the number of terms.
pub fn weierstrass(alpha: f64, terms: u32, theta: f64) -> f64 {
    (0..=terms)
        .map(|k| {
            let scale = (k as f64).exp2();
            scale.powf(-alpha) * (scale * theta).cos()
        })
        .sum()
}

/// Values `φ(t_j)` of boundary data on a quadrature grid.
#[derive(Debug, Clone)]
pub struct BoundarySamples {
    grid: Arc<BoundaryGrid>,
    values: Vec<C64>,
    description: String,
}

impl BoundarySamples {
    pub fn new(grid: Arc<BoundaryGrid>, values: Vec<C64>, description: impl Into<String>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidInput(format!(
                "{} values for a grid of {} nodes",
                values.len(),
                grid.len()
            )));
        }
        Ok(BoundarySamples { grid, values, description: description.into() })
    }

    /// Samples `f(t, θ)` at every node; `θ` is the contour parameter.
    pub fn from_fn<F: Fn(C64, f64) -> C64>(grid: Arc<BoundaryGrid>, f: F, description: impl Into<String>) -> Self {
        let values = grid.t.iter().zip(&grid.theta).map(|(&t, &th)| f(t, th)).collect();
        BoundarySamples { grid, values, description: description.into() }
    }

    pub fn from_spec(grid: Arc<BoundaryGrid>, spec: &PhiSpec) -> Self {
        Self::from_fn(grid, |t, th| spec.eval(t, th), format!("{spec}"))
    }

    pub fn grid(&self) -> &Arc<BoundaryGrid> {
        &self.grid
    }

    pub fn domain(&self) -> &DomainBoundary {
        self.grid.domain()
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// Pointwise product with `g(t)`.
    pub fn multiplied<F: Fn(C64) -> C64>(&self, g: F, description: impl Into<String>) -> Self {
        let values = self.values.iter().zip(&self.grid.t).map(|(v, &t)| v * g(t)).collect();
        BoundarySamples { grid: self.grid.clone(), values, description: description.into() }
    }
}

/// Polynomial kernels `p(z, t)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Kernel {
    /// `t − z`.
    Cauchy(C64),
    /// `∏_j (t − w_j)`; coordinates are kept sorted so the kernel value does
    /// not depend on their order.
    Product(Vec<C64>),
    /// `q_n(z, t)`.
    Symmetrized(Vec<C64>),
}

impl Kernel {
    pub fn product(w: &[C64]) -> Self {
        let mut sorted = w.to_vec();
        sorted.sort_by(|a, b| match a.re.total_cmp(&b.re) {
            Ordering::Equal => a.im.total_cmp(&b.im),
            o => o,
        });
        Kernel::Product(sorted)
    }

    pub fn degree(&self) -> usize {
        match self {
            Kernel::Cauchy(_) => 1,
            Kernel::Product(w) => w.len(),
            Kernel::Symmetrized(z) => z.len(),
        }
    }

    pub fn eval(&self, t: C64) -> C64 {
        match self {
            Kernel::Cauchy(z) => t - z,
            Kernel::Product(w) => w.iter().fold(C64::new(1.0, 0.0), |acc, wj| acc * (t - wj)),
            Kernel::Symmetrized(z) => eval_q(z, t),
        }
    }
}

/// `(1/2πi) Σ_j values_j · weight_j / p(t_j)` with the kernel floor check.
pub fn transform_values(kernel: &Kernel, values: &[C64], grid: &BoundaryGrid) -> Result<C64> {
    let mut min_kernel = f64::INFINITY;
    let mut sum = C64::new(0.0, 0.0);
    for ((v, w), &t) in values.iter().zip(&grid.weight).zip(&grid.t) {
        let k = kernel.eval(t);
        min_kernel = min_kernel.min(k.norm());
        sum += v * w / k;
    }
    let deg = kernel.degree();
    if deg > 0 {
        let floor_dist = KERNEL_TOL_REL * grid.domain().diameter();
        if !(min_kernel.powf(1.0 / deg as f64) > floor_dist) {
            return Err(Error::KernelProximity { min_kernel, floor: floor_dist.powi(deg as i32) });
        }
    }
    Ok(sum / C64::new(0.0, core::f64::consts::TAU))
}

/// `𝒟_p φ(z) = (1/2πi) ∮ φ(t)/p(z,t) dt`.
pub fn generic_transform(kernel: &Kernel, phi: &BoundarySamples) -> Result<C64> {
    transform_values(kernel, &phi.values, &phi.grid)
}

fn require_in_domain(domain: &DomainBoundary, w: C64) -> Result<()> {
    let label = domain.classify_point(w)?;
    if !label.is_domain() {
        return Err(Error::WrongRegion(format!("{w} lies in region {}", label.index())));
    }
    Ok(())
}

/// Cauchy transform `𝒯φ(z)` for `z ∈ U`.
pub fn cauchy_transform(phi: &BoundarySamples, z: C64) -> Result<C64> {
    require_in_domain(phi.domain(), z)?;
    generic_transform(&Kernel::Cauchy(z), phi)
}

/// Cauchy–Nørlund transform `ℬ_nφ(w)` for `w ∈ Uⁿ`.
pub fn norlund_transform(phi: &BoundarySamples, w: &ProductPoint) -> Result<C64> {
    if w.arity() == 0 {
        return Err(Error::InvalidInput("empty product point".into()));
    }
    for &wj in w.coords() {
        require_in_domain(phi.domain(), wj)?;
    }
    generic_transform(&Kernel::product(w.coords()), phi)
}

fn roots_in_domain(domain: &DomainBoundary, z: &SymPoint) -> Result<Vec<C64>> {
    let roots = desymmetrize(z)?.roots;
    for &r in &roots {
        require_in_domain(domain, r)?;
    }
    Ok(roots)
}

/// Symmetrized Cauchy transform `ℰ_nφ(z)` for `z ∈ ΣⁿU`.
pub fn symmetrized_transform(phi: &BoundarySamples, z: &SymPoint) -> Result<C64> {
    if z.arity() == 0 {
        return Err(Error::InvalidInput("empty symmetric point".into()));
    }
    roots_in_domain(phi.domain(), z)?;
    generic_transform(&Kernel::Symmetrized(z.0.clone()), phi)
}

/// `u_γ(t)` with `∂^γ (1/q_n(z,t)) = u_γ(t) / q_n(z,t)^{|γ|+1}`.
///
/// Since `∂q_n/∂z_j = (−1)^j t^{n−j}`, the sign is `(−1)^{|γ| + Σ j γ_j}`.
pub fn multiplier(gamma: &MultiIndex, t: C64) -> C64 {
    let n = gamma.arity() as u32;
    let order = gamma.order();
    let weighted: u32 = gamma.0.iter().enumerate().map(|(k, &g)| (k as u32 + 1) * g).sum();
    let power: u32 = gamma.0.iter().enumerate().map(|(k, &g)| g * (n - 1 - k as u32)).sum();
    let factorial: f64 = (1..=order).map(|j| j as f64).product();
    let sign = if (order + weighted).is_multiple_of(2) { 1.0 } else { -1.0 };
    t.powu(power) * (sign * factorial)
}

/// `M_γ φ = u_γ · φ`.
pub fn apply_multiplier(phi: &BoundarySamples, gamma: &MultiIndex, n: usize) -> Result<BoundarySamples> {
    if gamma.arity() != n {
        return Err(Error::InvalidInput(format!("multi-index {gamma} has length {} ≠ {n}", gamma.arity())));
    }
    Ok(phi.multiplied(|t| multiplier(gamma, t), format!("M{gamma}[{}]", phi.description)))
}

/// `∂^γ ℰ_nφ(z)` through the factorization
/// `π_* ∘ j*_{|γ|+1} ∘ ℬ_{n(|γ|+1)} ∘ M_γ`: the multiplied data are
/// integrated against `ω_n(w,t)^{|γ|+1}` at a preimage `w` of `z`.
pub fn derivative_symmetrized(gamma: &MultiIndex, phi: &BoundarySamples, z: &SymPoint) -> Result<C64> {
    let n = z.arity();
    let multiplied = apply_multiplier(phi, gamma, n)?;
    let w = ProductPoint(roots_in_domain(phi.domain(), z)?);
    let repeated = w.repeated(gamma.order() as usize + 1);
    generic_transform(&Kernel::product(repeated.coords()), &multiplied)
}

/// Largest number of coordinates of `z` that coincide within `tol`.
pub fn chi(z: &[C64], tol: f64) -> usize {
    z.iter()
        .map(|a| z.iter().filter(|b| (a - *b).norm() <= tol).count())
        .max()
        .unwrap_or(0)
}

/// `(1/2πi) ∫_{Γ ∖ ∪_j B(z_j, ρ)} φ(t)/ω_n(z,t) dt` for `z` on the boundary.
///
/// Whole quadrature nodes inside the excised discs are dropped.
pub fn truncated_pv(phi: &BoundarySamples, z: &ProductPoint, rho: f64) -> Result<C64> {
    let grid = &phi.grid;
    let domain = grid.domain();
    if !(rho > 0.0 && rho < domain.diameter() / 4.0) {
        return Err(Error::InvalidInput(format!("truncation radius {rho} outside (0, diam/4)")));
    }
    let on_boundary = grid.max_spacing();
    for &zj in z.coords() {
        let d = domain.distance_to_boundary(zj);
        if d > on_boundary {
            return Err(Error::InvalidInput(format!("{zj} is {d:e} away from the boundary")));
        }
    }
    let kernel = Kernel::product(z.coords());
    let mut sum = C64::new(0.0, 0.0);
    let mut kept = 0usize;
    for ((v, w), &t) in phi.values.iter().zip(&grid.weight).zip(&grid.t) {
        if z.coords().iter().all(|zj| (t - zj).norm() > rho) {
            sum += v * w / kernel.eval(t);
            kept += 1;
        }
    }
    if kept == 0 {
        return Err(Error::Degenerate);
    }
    Ok(sum / C64::new(0.0, core::f64::consts::TAU))
}

/// Log-log growth of truncated principal values at `χ`-fold boundary points.
#[derive(Debug, Clone, PartialEq)]
pub struct PvFit {
    pub multiplicity: usize,
    pub base_points: usize,
    pub slope: f64,
    pub intercept: f64,
    /// `1 − χ`.
    pub expected_slope: f64,
    pub radii: Vec<f64>,
    /// Root-mean-square magnitude over the base points, per radius.
    pub magnitudes: Vec<f64>,
}

/// Fits `log |PV_ρ|` against `log ρ` at the diagonal boundary points
/// `(t₀, …, t₀)` (multiplicity copies), with `t₀` running over `base_points`
/// equispaced nodes of the outer contour. Magnitudes are aggregated by root
/// mean square over the base points.
pub fn pv_blowup_fit(phi: &BoundarySamples, multiplicity: usize, base_points: usize, radii: &[f64]) -> Result<PvFit> {
    if multiplicity == 0 || base_points == 0 || radii.len() < 2 {
        return Err(Error::InvalidInput("need multiplicity ≥ 1, base points ≥ 1 and two radii".into()));
    }
    let per_contour = phi.grid.nodes_per_contour();
    let stride = (per_contour / base_points).max(1);
    let bases: Vec<C64> = (0..base_points.min(per_contour)).map(|k| phi.grid.t[k * stride]).collect();
    let mut magnitudes = Vec::with_capacity(radii.len());
    for &rho in radii {
        let mut acc = 0.0;
        for &t0 in &bases {
            let z = ProductPoint(alloc::vec![t0; multiplicity]);
            acc += truncated_pv(phi, &z, rho)?.norm_sqr();
        }
        magnitudes.push((acc / bases.len() as f64).sqrt());
    }
    let xs: Vec<f64> = radii.iter().map(|r| r.ln()).collect();
    let ys: Vec<f64> = magnitudes.iter().map(|m| m.ln()).collect();
    let line = fit_line(&xs, &ys).ok_or_else(|| Error::InsufficientPairs("degenerate radius set".into()))?;
    Ok(PvFit {
        multiplicity,
        base_points: bases.len(),
        slope: line.slope,
        intercept: line.intercept,
        expected_slope: 1.0 - multiplicity as f64,
        radii: radii.to_vec(),
        magnitudes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{
        geometry::{build_domain, DomainSpec},
        symmetric::symmetrize,
    };
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn circle(n: usize) -> Arc<BoundaryGrid> {
        let d = build_domain(&DomainSpec::Disc { center: c(0.0, 0.0), radius: 1.0 }).unwrap();
        Arc::new(d.sample(n).unwrap())
    }

    fn phi(n: usize, spec: PhiSpec) -> BoundarySamples {
        BoundarySamples::from_spec(circle(n), &spec)
    }

    #[test]
    fn generic_transform_examples() {
        let one = BoundarySamples::from_fn(circle(256), |_, _| c(1.0, 0.0), "1");
        assert!((generic_transform(&Kernel::Cauchy(c(0.0, 0.0)), &one).unwrap() - 1.0).norm() < 1e-12);
        let two = generic_transform(&Kernel::product(&[c(0.0, 0.0), c(0.5, 0.0)]), &one).unwrap();
        assert!(two.norm() < 1e-12);
        let inv = BoundarySamples::from_fn(circle(256), |t, _| t.inv(), "1/t");
        assert!(generic_transform(&Kernel::Cauchy(c(0.5, 0.0)), &inv).unwrap().norm() < 1e-12);
    }

    #[test]
    fn kernel_floor_rejects_points_on_the_grid() {
        let one = BoundarySamples::from_fn(circle(64), |_, _| c(1.0, 0.0), "1");
        let on_node = one.grid().t[3];
        assert!(matches!(
            generic_transform(&Kernel::Cauchy(on_node), &one),
            Err(Error::KernelProximity { .. })
        ));
    }

    #[test]
    fn cauchy_examples() {
        let p = phi(256, PhiSpec::Monomial(3));
        assert!((cauchy_transform(&p, c(0.2, 0.0)).unwrap() - 0.008).norm() < 1e-12);
        let p = phi(256, PhiSpec::Pole { a: c(3.0, 0.0), order: 1 });
        let v = cauchy_transform(&p, c(0.1, 0.0)).unwrap();
        assert!((v - 1.0 / (0.1 - 3.0)).norm() < 1e-12);
        let p = phi(256, PhiSpec::Conj);
        assert!(cauchy_transform(&p, c(0.5, 0.0)).unwrap().norm() < 1e-12);
        assert!(matches!(cauchy_transform(&p, c(2.0, 0.0)), Err(Error::WrongRegion(_))));
        assert!(matches!(
            cauchy_transform(&p, c(1.0, 1e-9)),
            Err(Error::BoundaryProximity { .. })
        ));
    }

    #[test]
    fn norlund_examples() {
        let p = phi(256, PhiSpec::Monomial(2));
        let v = norlund_transform(&p, &ProductPoint(alloc::vec![c(0.1, 0.0), c(0.2, 0.0)])).unwrap();
        assert!((v - 0.3).norm() < 1e-12);
        let single = norlund_transform(&p, &ProductPoint(alloc::vec![c(0.3, 0.1)])).unwrap();
        let t = cauchy_transform(&p, c(0.3, 0.1)).unwrap();
        assert_eq!(single, t);
        let p = phi(256, PhiSpec::Pole { a: c(3.0, 0.0), order: 1 });
        let v = norlund_transform(&p, &ProductPoint(alloc::vec![c(0.0, 0.0), c(0.5, 0.0)])).unwrap();
        assert!((v + 2.0 / 15.0).norm() < 1e-12);
    }

    #[test]
    fn norlund_is_bitwise_permutation_invariant() {
        let p = phi(128, PhiSpec::Pole { a: c(2.0, 1.0), order: 2 });
        let w = ProductPoint(alloc::vec![c(0.1, 0.2), c(-0.3, 0.05), c(0.4, -0.4)]);
        let base = norlund_transform(&p, &w).unwrap();
        for perm in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            assert_eq!(norlund_transform(&p, &w.permuted(&perm)).unwrap(), base);
        }
    }

    #[test]
    fn symmetrized_examples() {
        let p = phi(256, PhiSpec::Monomial(2));
        let z = SymPoint(alloc::vec![c(0.3, 0.0), c(0.02, 0.0)]);
        assert!((symmetrized_transform(&p, &z).unwrap() - 0.3).norm() < 1e-12);
        let single = symmetrized_transform(&p, &SymPoint(alloc::vec![c(0.4, 0.0)])).unwrap();
        assert!((single - cauchy_transform(&p, c(0.4, 0.0)).unwrap()).norm() < 1e-14);
        let p = phi(256, PhiSpec::Pole { a: c(3.0, 0.0), order: 1 });
        let z = SymPoint(alloc::vec![c(0.5, 0.0), c(0.0, 0.0)]);
        assert!((symmetrized_transform(&p, &z).unwrap() + 2.0 / 15.0).norm() < 1e-12);
        // One root at 3, outside the disc.
        let outside = symmetrize(&ProductPoint(alloc::vec![c(0.5, 0.0), c(3.0, 0.0)]));
        assert!(matches!(symmetrized_transform(&p, &outside), Err(Error::WrongRegion(_))));
    }

    #[test]
    fn multiplier_values() {
        let t = c(0.3, -0.7);
        assert_eq!(multiplier(&MultiIndex(alloc::vec![0, 0, 0]), t), c(1.0, 0.0));
        assert!((multiplier(&MultiIndex(alloc::vec![1, 0]), t) - t).norm() < 1e-15);
        assert!((multiplier(&MultiIndex(alloc::vec![0, 1]), t) + 1.0).norm() < 1e-15);
        assert!((multiplier(&MultiIndex(alloc::vec![1]), t) - 1.0).norm() < 1e-15);
        // ∂²/∂z₁∂z₂ of 1/q₂ = −2t/q₂³.
        assert!((multiplier(&MultiIndex(alloc::vec![1, 1]), t) + 2.0 * t).norm() < 1e-15);
        let p = phi(16, PhiSpec::Monomial(1));
        assert!(apply_multiplier(&p, &MultiIndex(alloc::vec![1]), 2).is_err());
    }

    #[test]
    fn derivative_examples() {
        let p = phi(256, PhiSpec::Monomial(2));
        let z = SymPoint(alloc::vec![c(0.3, 0.0)]);
        let d = derivative_symmetrized(&MultiIndex(alloc::vec![1]), &p, &z).unwrap();
        assert!((d - 0.6).norm() < 1e-12);
        let z2 = symmetrize(&ProductPoint(alloc::vec![c(0.1, 0.0), c(0.2, 0.0)]));
        let d0 = derivative_symmetrized(&MultiIndex::zero(2), &p, &z2).unwrap();
        assert!((d0 - symmetrized_transform(&p, &z2).unwrap()).norm() < 1e-13);
    }

    #[test]
    fn derivative_matches_finite_difference() {
        // ℰ₂(t²)(z) = z₁, ℰ₂(t³)(z) = z₁² − z₂: check against central differences.
        let p = phi(256, PhiSpec::Monomial(3));
        let z = symmetrize(&ProductPoint(alloc::vec![c(0.1, 0.05), c(0.2, -0.1)]));
        let h = 1e-4;
        for (j, gamma) in [(0usize, [1u32, 0]), (1, [0, 1])] {
            let mut zp = z.clone();
            let mut zm = z.clone();
            zp.0[j] += h;
            zm.0[j] -= h;
            let fd = (symmetrized_transform(&p, &zp).unwrap() - symmetrized_transform(&p, &zm).unwrap()) / (2.0 * h);
            let d = derivative_symmetrized(&MultiIndex(gamma.to_vec()), &p, &z).unwrap();
            assert!((d - fd).norm() < 1e-6, "γ={gamma:?}: {d} vs {fd}");
        }
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi(&[c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)], 1e-9), 1);
        assert_eq!(chi(&[c(1.0, 0.0), c(1.0, 0.0), c(3.0, 0.0)], 1e-9), 2);
        assert_eq!(chi(&[c(1.0 + 1e-12, 0.0), c(1.0, 0.0), c(1.0, 0.0)], 1e-9), 3);
    }

    #[test]
    fn truncated_pv_guards() {
        let p = phi(256, PhiSpec::Monomial(1));
        let on = ProductPoint(alloc::vec![c(1.0, 0.0)]);
        assert!(truncated_pv(&p, &on, 0.1).is_ok());
        assert!(truncated_pv(&p, &on, 0.6).is_err());
        assert!(truncated_pv(&p, &ProductPoint(alloc::vec![c(0.5, 0.0)]), 0.1).is_err());
        // Spread base points whose excised discs cover the circle.
        let cover: Vec<C64> = (0..16).map(|k| C64::from_polar(1.0, core::f64::consts::TAU * k as f64 / 16.0)).collect();
        assert_eq!(truncated_pv(&p, &ProductPoint(cover), 0.45), Err(Error::Degenerate));
    }

    #[test]
    fn simple_pv_of_holder_data_stays_bounded() {
        let p = phi(1 << 14, PhiSpec::Weierstrass { alpha: 0.5, terms: 12 });
        let radii: Vec<f64> = (3..=8).map(|k| (-(k as f64)).exp2()).collect();
        let fit = pv_blowup_fit(&p, 1, 16, &radii).unwrap();
        assert_abs_diff_eq!(fit.slope, 0.0, epsilon = 0.2);
    }
}
