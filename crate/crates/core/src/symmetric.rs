//! Symmetric products `ΣⁿU = π(Uⁿ)`.
//!
//! `π` sends `w ∈ ℂⁿ` to the elementary symmetric polynomials of its
//! coordinates, i.e. to the coefficients of the monic polynomial
//! `q_n(z, t) = ∏ (t − w_j) = tⁿ − z₁tⁿ⁻¹ + … + (−1)ⁿ z_n`. Its inverse is
//! computed with Aberth–Ehrlich simultaneous iteration.

use alloc::{collections::BTreeMap, format, vec::Vec};
use core::f64::consts::TAU;

// Inherent when std is linked, needed under no_std.
#[allow(unused_imports)]
use num_traits::Float;
use rand::{seq::SliceRandom, Rng};

use crate::{
    cauchy::{chi, transform_values, BoundarySamples, Kernel, ProductPoint, SymPoint},
    geometry::DomainBoundary,
    holder::fit_line,
    Error, Result, C64,
};

/// Largest arity handled by [`desymmetrize`].
pub const MAX_ROOT_ARITY: usize = 12;
/// Largest arity handled by [`delta_metric`].
pub const MAX_DELTA_ARITY: usize = 8;

const ABERTH_MAX_ITER: usize = 200;
const ROOT_TOL_REL: f64 = 1e-10;
const CLUSTER_ROOT_TOL_REL: f64 = 1e-6;

fn zero() -> C64 {
    C64::new(0.0, 0.0)
}

fn one() -> C64 {
    C64::new(1.0, 0.0)
}

/// Coefficients of `∏ (t − w_j)`, highest degree first.
fn monic_from_roots(w: &[C64]) -> Vec<C64> {
    let mut c = Vec::with_capacity(w.len() + 1);
    c.push(one());
    for &r in w {
        c.push(zero());
        for k in (1..c.len()).rev() {
            let prev = c[k - 1];
            c[k] -= r * prev;
        }
    }
    c
}

/// `π(w)`: `z_j` is the `j`-th elementary symmetric polynomial of `w`.
pub fn symmetrize(w: &ProductPoint) -> SymPoint {
    let c = monic_from_roots(w.coords());
    SymPoint(
        c.iter()
            .enumerate()
            .skip(1)
            .map(|(j, &cj)| if j % 2 == 0 { cj } else { -cj })
            .collect(),
    )
}

/// `q_n(z, t)` by Horner's rule.
pub fn eval_q(z: &[C64], t: C64) -> C64 {
    z.iter().enumerate().fold(one(), |acc, (k, &zj)| {
        let c = if k % 2 == 0 { -zj } else { zj };
        acc * t + c
    })
}

/// `∂q_n/∂t (z, t) = Σ_{j<n} (−1)^j (n − j) z_j t^{n−j−1}` with `z_0 = 1`.
pub fn eval_q_prime(z: &[C64], t: C64) -> C64 {
    let n = z.len();
    let mut acc = C64::new(n as f64, 0.0);
    for (k, &zj) in z.iter().enumerate().take(n.saturating_sub(1)) {
        let j = k + 1;
        let c = zj * ((n - j) as f64);
        acc = acc * t + if j % 2 == 0 { c } else { -c };
    }
    acc
}

/// Roots of `q_n(z, ·)` with the largest residual `|q_n(z, root)|`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootMultiset {
    pub roots: Vec<C64>,
    pub residual: f64,
}

/// All roots of `q_n(z, ·)`.
pub fn desymmetrize(z: &SymPoint) -> Result<RootMultiset> {
    let n = z.arity();
    if n > MAX_ROOT_ARITY {
        return Err(Error::ArityTooLarge { n, max: MAX_ROOT_ARITY });
    }
    if n == 0 {
        return Ok(RootMultiset { roots: Vec::new(), residual: 0.0 });
    }
    let coeffs = z.coords();
    let mut roots = aberth(coeffs);
    polish(coeffs, &mut roots);
    let residual = roots.iter().map(|&r| eval_q(coeffs, r).norm()).fold(0.0, f64::max);
    let scale = 1.0 + z.norm();
    let tol = ROOT_TOL_REL * scale;
    let clustered = chi(&roots, 1e-4 * scale) > 1;
    if residual <= tol || (clustered && residual <= CLUSTER_ROOT_TOL_REL * scale) {
        Ok(RootMultiset { roots, residual })
    } else {
        Err(Error::RootFailure { residual, tolerance: tol })
    }
}

fn aberth(z: &[C64]) -> Vec<C64> {
    let n = z.len();
    let radius = 1.0
        + z.iter()
            .enumerate()
            .map(|(k, zj)| zj.norm().powf(1.0 / (k as f64 + 1.0)))
            .fold(0.0, f64::max);
    let mut roots: Vec<C64> = (0..n)
        .map(|k| C64::from_polar(radius, TAU * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..ABERTH_MAX_ITER {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let wi = roots[i];
            let p = eval_q(z, wi);
            if p == zero() {
                continue;
            }
            let ratio = p / eval_q_prime(z, wi);
            let repulsion: C64 = roots
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &wj)| if wi == wj { zero() } else { (wi - wj).inv() })
                .sum();
            let step = ratio / (one() - ratio * repulsion);
            if step.is_finite() {
                roots[i] = wi - step;
                max_step = max_step.max(step.norm() / (1.0 + wi.norm()));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    roots
}

/// A couple of Newton steps, kept only when they lower the residual.
fn polish(z: &[C64], roots: &mut [C64]) {
    for r in roots.iter_mut() {
        for _ in 0..2 {
            let p = eval_q(z, *r);
            let dp = eval_q_prime(z, *r);
            let candidate = *r - p / dp;
            if candidate.is_finite() && eval_q(z, candidate).norm() < p.norm() {
                *r = candidate;
            } else {
                break;
            }
        }
    }
}

/// `π_* f (z) = f(w)` for any preimage `w` of `z`.
///
/// Symmetry of `f` is spot-checked with one random permutation.
pub fn push_forward<F, R>(f: F, z: &SymPoint, rng: &mut R) -> Result<C64>
where
    F: Fn(&[C64]) -> C64,
    R: Rng + ?Sized,
{
    let roots = desymmetrize(z)?.roots;
    let value = f(&roots);
    if roots.len() > 1 {
        let mut perm: Vec<usize> = (0..roots.len()).collect();
        perm.shuffle(rng);
        if perm.iter().enumerate().all(|(k, &p)| k == p) {
            perm.reverse();
        }
        let shuffled: Vec<C64> = perm.iter().map(|&k| roots[k]).collect();
        let deviation = (f(&shuffled) - value).norm();
        if deviation > 1e-8 * (1.0 + value.norm()) {
            return Err(Error::AsymmetryDetected { deviation });
        }
    }
    Ok(value)
}

/// `j*_k f (w) = f(w, …, w)`.
pub fn diagonal_pullback<F: Fn(&[C64]) -> C64>(f: F, w: &[C64], k: usize) -> C64 {
    f(&ProductPoint(w.to_vec()).repeated(k).0)
}

/// Visits every permutation of `0..n` (Heap's algorithm).
fn for_each_permutation<F: FnMut(&[usize])>(n: usize, mut visit: F) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = alloc::vec![0usize; n];
    visit(&perm);
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            visit(&perm);
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
}

/// `δ(z, w) = min_{σ ∈ S_n} |z − σ(w)|`, by enumeration.
pub fn delta_metric(z: &[C64], w: &[C64]) -> Result<f64> {
    let n = z.len();
    if w.len() != n {
        return Err(Error::InvalidInput(format!("arity mismatch {n} vs {}", w.len())));
    }
    if n > MAX_DELTA_ARITY {
        return Err(Error::ArityTooLarge { n, max: MAX_DELTA_ARITY });
    }
    let mut best = f64::INFINITY;
    for_each_permutation(n, |perm| {
        let d: f64 = z.iter().zip(perm).map(|(a, &k)| (a - w[k]).norm_sqr()).sum();
        best = best.min(d);
    });
    Ok(best.sqrt())
}

/// Łojasiewicz exponent `Λ_n`: `n!` for `n ≤ 3`, `3n!/2` otherwise.
pub fn lambda_n(n: usize) -> u64 {
    let f: u64 = (1..=n as u64).product();
    if n <= 3 {
        f
    } else {
        3 * f / 2
    }
}

/// Outcome of [`lojasiewicz_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct LojasiewiczReport {
    pub n: usize,
    pub lambda: u64,
    /// Largest observed `δ^Λ / |π(z) − π(w)|`.
    pub c_max: f64,
    pub violations: usize,
    pub pairs_used: usize,
    pub near_diagonal_pairs: usize,
    /// Least-squares slope of `log δ` against `log |π(z) − π(w)|` over the
    /// near-diagonal pairs.
    pub exponent: f64,
}

/// Uniform point of `U` by rejection from the bounding disc.
pub fn random_domain_point<R: Rng + ?Sized>(domain: &DomainBoundary, rng: &mut R) -> C64 {
    let (center, radius) = domain.bounding_disc();
    loop {
        let p = center + C64::from_polar(radius * rng.gen::<f64>().sqrt(), TAU * rng.gen::<f64>());
        if domain.contains(p) {
            return p;
        }
    }
}

fn random_product_point<R: Rng + ?Sized>(domain: &DomainBoundary, n: usize, rng: &mut R) -> Vec<C64> {
    (0..n).map(|_| random_domain_point(domain, rng)).collect()
}

/// Samples pairs of `Uⁿ` and measures `δ(z,w)^{Λ_n} / |π(z) − π(w)|`.
///
/// Even-numbered pairs are independent; odd-numbered pairs perturb `z` at a
/// log-uniform scale in `[1e-4, 1e-1]·diam`, and half of those first pull two
/// coordinates of `z` together so the big diagonal is probed.
pub fn lojasiewicz_check<R: Rng + ?Sized>(
    domain: &DomainBoundary,
    n: usize,
    num_pairs: usize,
    rng: &mut R,
) -> Result<LojasiewiczReport> {
    if num_pairs < 100 {
        return Err(Error::InvalidInput(format!("need at least 100 pairs, got {num_pairs}")));
    }
    if n == 0 || n > MAX_DELTA_ARITY {
        return Err(Error::ArityTooLarge { n, max: MAX_DELTA_ARITY });
    }
    let lambda = lambda_n(n);
    let diam = domain.diameter();
    let mut ratios = Vec::with_capacity(num_pairs);
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    for k in 0..num_pairs {
        let (z, w) = if k % 2 == 0 {
            (random_product_point(domain, n, rng), random_product_point(domain, n, rng))
        } else {
            perturbed_pair(domain, n, diam, rng)
        };
        let dpi = symmetric_distance(&z, &w);
        if dpi <= 1e-12 {
            continue;
        }
        let delta = delta_metric(&z, &w)?;
        ratios.push(delta.powi(lambda as i32) / dpi);
        if delta <= 0.1 * diam && delta > 0.0 {
            xs.push(dpi.ln());
            ys.push(delta.ln());
        }
    }
    let c_max = ratios.iter().copied().fold(0.0, f64::max);
    let violations = ratios.iter().filter(|&&r| r > c_max).count();
    let exponent = fit_line(&xs, &ys).map(|l| l.slope).unwrap_or(f64::NAN);
    Ok(LojasiewiczReport {
        n,
        lambda,
        c_max,
        violations,
        pairs_used: ratios.len(),
        near_diagonal_pairs: xs.len(),
        exponent,
    })
}

fn perturbed_pair<R: Rng + ?Sized>(domain: &DomainBoundary, n: usize, diam: f64, rng: &mut R) -> (Vec<C64>, Vec<C64>) {
    loop {
        let mut z = random_product_point(domain, n, rng);
        if n >= 2 && rng.gen_bool(0.5) {
            let offset = C64::from_polar(1e-3 * diam * rng.gen::<f64>(), TAU * rng.gen::<f64>());
            z[1] = z[0] + offset;
        }
        let scale = diam * 10f64.powf(-1.0 - 3.0 * rng.gen::<f64>());
        let w: Vec<C64> = z
            .iter()
            .map(|&zj| zj + C64::from_polar(scale * rng.gen::<f64>(), TAU * rng.gen::<f64>()))
            .collect();
        if z.iter().chain(&w).all(|&p| domain.contains(p)) {
            return (z, w);
        }
    }
}

fn symmetric_distance(z: &[C64], w: &[C64]) -> f64 {
    let a = symmetrize(&ProductPoint(z.to_vec()));
    let b = symmetrize(&ProductPoint(w.to_vec()));
    a.0.iter().zip(&b.0).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}

/// Complete symmetric polynomial `h_p^q(z)`, the sum of all degree-`p`
/// monomials in the `q = z.len()` variables; zero for `p < 0`.
pub fn complete_symmetric(p: i64, z: &[C64]) -> C64 {
    if p < 0 {
        return zero();
    }
    let p = p as usize;
    // h[d] over the variables seen so far; h_d(z_1..z_k) = h_d(z_1..z_{k-1}) + z_k h_{d-1}(z_1..z_k).
    let mut h = alloc::vec![zero(); p + 1];
    h[0] = one();
    for &zk in z {
        for d in 1..=p {
            let prev = h[d - 1];
            h[d] += zk * prev;
        }
    }
    if z.is_empty() && p > 0 {
        return zero();
    }
    h[p]
}

/// Number of roots of `q_n(z, ·)` in each component of `ℂ ∖ Γ`, indexed by
/// [`crate::geometry::RegionLabel`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentSignature(pub Vec<usize>);

impl ComponentSignature {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

pub fn classify_symmetric_point(domain: &DomainBoundary, z: &SymPoint) -> Result<ComponentSignature> {
    let roots = desymmetrize(z)?.roots;
    let mut counts = alloc::vec![0usize; domain.kappa()];
    for r in roots {
        counts[domain.classify_point(r)?.index()] += 1;
    }
    Ok(ComponentSignature(counts))
}

/// `C(n + κ − 1, κ − 1)`, the number of components of `ℂⁿ ∖ Γ*_{q_n}`.
pub fn expected_component_count(n: usize, kappa: usize) -> u64 {
    let k = (kappa - 1) as u64;
    let mut acc: u64 = 1;
    for j in 1..=k {
        acc = acc * (n as u64 + j) / j;
    }
    acc
}

/// Signature tally from [`component_census`].
#[derive(Debug, Clone, PartialEq)]
pub struct CensusReport {
    pub n: usize,
    pub kappa: usize,
    pub counts: BTreeMap<ComponentSignature, usize>,
    /// Points discarded because a root came within tolerance of `Γ`.
    pub skipped: usize,
}

/// Classifies random points `z = π(w)` with the `w_j` uniform in a disc of
/// 1.25 times the bounding radius of the domain. The classification itself
/// root-finds `q_n(z, ·)` afresh.
pub fn component_census<R: Rng + ?Sized>(
    domain: &DomainBoundary,
    n: usize,
    samples: usize,
    rng: &mut R,
) -> Result<CensusReport> {
    let (center, radius) = domain.bounding_disc();
    let mut counts = BTreeMap::new();
    let mut skipped = 0;
    for _ in 0..samples {
        let w: Vec<C64> = (0..n)
            .map(|_| center + C64::from_polar(1.25 * radius * rng.gen::<f64>().sqrt(), TAU * rng.gen::<f64>()))
            .collect();
        let z = symmetrize(&ProductPoint(w));
        match classify_symmetric_point(domain, &z) {
            Ok(sig) => *counts.entry(sig).or_insert(0) += 1,
            Err(Error::BoundaryProximity { .. }) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(CensusReport { n, kappa: domain.kappa(), counts, skipped })
}

/// Power sums `p_k = Σ_j w_j^k` for `k = 1..=count`.
pub fn power_sums(w: &[C64], count: usize) -> Vec<C64> {
    let mut powers: Vec<C64> = w.to_vec();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(powers.iter().sum());
        for (p, &wj) in powers.iter_mut().zip(w) {
            *p *= wj;
        }
    }
    out
}

/// Newton's identities: power sums `p_1..p_n` to elementary symmetric
/// polynomials `e_1..e_n`.
pub fn newton_map(power_sums: &[C64]) -> Vec<C64> {
    let n = power_sums.len();
    let mut e = Vec::with_capacity(n + 1);
    e.push(one());
    for k in 1..=n {
        let mut acc = zero();
        for i in 1..=k {
            let term = e[k - i] * power_sums[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / k as f64);
    }
    e.remove(0);
    e
}

/// `Ψ_ℓ(z) = (1/2πi) ∮ f(t)^ℓ q'_n(z,t)/q_n(z,t) dt`, the `ℓ`-th power sum
/// of `f` over the roots of `q_n(z, ·)`.
pub fn psi_ell(f_boundary: &BoundarySamples, ell: u32, z: &SymPoint) -> Result<C64> {
    let grid = f_boundary.grid();
    let values: Vec<C64> = f_boundary
        .values()
        .iter()
        .zip(&grid.t)
        .map(|(f, &t)| f.powu(ell) * eval_q_prime(z.coords(), t))
        .collect();
    transform_values(&Kernel::Symmetrized(z.0.clone()), &values, grid)
}

/// `Σⁿf(z)` by the integral route: Newton's identities applied to
/// `(Ψ_1(z), …, Ψ_n(z))`.
pub fn symmetric_power_map(f_boundary: &BoundarySamples, z: &SymPoint) -> Result<SymPoint> {
    let psi = (1..=z.arity() as u32)
        .map(|ell| psi_ell(f_boundary, ell, z))
        .collect::<Result<Vec<_>>>()?;
    Ok(SymPoint(newton_map(&psi)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_domain, DomainSpec};
    use alloc::{sync::Arc, vec};
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn disc() -> DomainBoundary {
        build_domain(&DomainSpec::Disc { center: c(0.0, 0.0), radius: 1.0 }).unwrap()
    }

    fn close(a: &[C64], b: &[C64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol)
    }

    fn omega() -> C64 {
        C64::from_polar(1.0, TAU / 3.0)
    }

    #[test]
    fn symmetrize_examples() {
        assert!(close(&symmetrize(&ProductPoint(vec![c(1.0, 0.0), c(2.0, 0.0)])).0, &[c(3.0, 0.0), c(2.0, 0.0)], 0.0));
        let w = c(0.3, -0.2);
        assert!(close(&symmetrize(&ProductPoint(vec![w, w])).0, &[2.0 * w, w * w], 1e-16));
        let z = symmetrize(&ProductPoint(vec![one(), omega(), omega() * omega()]));
        assert!(close(&z.0, &[zero(), zero(), one()], 1e-15));
    }

    #[test]
    fn q_and_derivative() {
        let z = [c(0.3, 0.1), c(-0.2, 0.4), c(0.05, 0.0)];
        let t = c(0.7, -0.3);
        let direct = t * t * t - z[0] * t * t + z[1] * t - z[2];
        assert!((eval_q(&z, t) - direct).norm() < 1e-15);
        let deriv = 3.0 * t * t - 2.0 * z[0] * t + z[1];
        assert!((eval_q_prime(&z, t) - deriv).norm() < 1e-15);
    }

    fn sorted(mut v: Vec<C64>) -> Vec<C64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v
    }

    #[test]
    fn desymmetrize_examples() {
        let r = desymmetrize(&SymPoint(vec![c(3.0, 0.0), c(2.0, 0.0)])).unwrap();
        assert!(close(&sorted(r.roots), &[c(1.0, 0.0), c(2.0, 0.0)], 1e-12));
        let r = desymmetrize(&SymPoint(vec![zero(), zero(), one()])).unwrap();
        assert!(delta_metric(&r.roots, &[one(), omega(), omega() * omega()]).unwrap() < 1e-12);
        let w = c(0.4, 0.3);
        let r = desymmetrize(&SymPoint(vec![2.0 * w, w * w])).unwrap();
        assert!(r.residual <= 1e-10);
        assert!(r.roots.iter().all(|x| (x - w).norm() < 1e-7));
        assert!(matches!(
            desymmetrize(&SymPoint(vec![zero(); 13])),
            Err(Error::ArityTooLarge { n: 13, .. })
        ));
    }

    #[test]
    fn push_forward_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let z = SymPoint(vec![c(3.0, 0.0), c(2.0, 0.0)]);
        let sum = push_forward(|w: &[C64]| w.iter().sum(), &z, &mut rng).unwrap();
        assert_abs_diff_eq!((sum - 3.0).norm(), 0.0, epsilon = 1e-12);
        let prod = push_forward(|w: &[C64]| w[0] * w[1], &z, &mut rng).unwrap();
        assert_abs_diff_eq!((prod - 2.0).norm(), 0.0, epsilon = 1e-12);
        let asym = push_forward(|w: &[C64]| w[0] + w[1] * w[1], &z, &mut rng);
        assert!(matches!(asym, Err(Error::AsymmetryDetected { .. })));
    }

    #[test]
    fn diagonal_pullback_examples() {
        let w = [c(3.0, 0.0)];
        assert_eq!(diagonal_pullback(|v: &[C64]| v[0] * 2.0, &w, 1), c(6.0, 0.0));
        assert_eq!(diagonal_pullback(|v: &[C64]| v.iter().sum(), &w, 2), c(6.0, 0.0));
    }

    #[test]
    fn repeated_point_kernel_matches_squared_cauchy_kernel() {
        // j*_2 ℬ_2 φ(w) = (1/2πi)∮ φ(t)/(t − w)² dt = φ'(w) for φ = t³.
        let grid = Arc::new(disc().sample(256).unwrap());
        let phi = BoundarySamples::from_fn(grid, |t, _| t * t * t, "t^3");
        let w = c(0.2, -0.1);
        let v = crate::cauchy::norlund_transform(&phi, &ProductPoint(vec![w, w])).unwrap();
        assert!((v - 3.0 * w * w).norm() < 1e-12);
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_metric(&[c(1.0, 0.0), c(0.0, 2.0)], &[c(0.0, 2.0), c(1.0, 0.0)]).unwrap(), 0.0);
        assert_abs_diff_eq!(
            delta_metric(&[zero(), zero()], &[one(), one()]).unwrap(),
            2f64.sqrt(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            delta_metric(&[zero(), one()], &[c(0.1, 0.0), c(1.2, 0.0)]).unwrap(),
            0.05f64.sqrt(),
            epsilon = 1e-15
        );
        assert!(matches!(delta_metric(&[zero(); 9], &[zero(); 9]), Err(Error::ArityTooLarge { .. })));
    }

    #[test]
    fn heap_enumerates_all_permutations() {
        let mut seen = alloc::collections::BTreeSet::new();
        for_each_permutation(5, |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 120);
    }

    #[test]
    fn lambda_values() {
        assert_eq!(lambda_n(1), 1);
        assert_eq!(lambda_n(2), 2);
        assert_eq!(lambda_n(3), 6);
        assert_eq!(lambda_n(4), 36);
        assert_eq!(lambda_n(5), 180);
    }

    #[test]
    fn lojasiewicz_small_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let r1 = lojasiewicz_check(&disc(), 1, 200, &mut rng).unwrap();
        assert_abs_diff_eq!(r1.c_max, 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(r1.exponent, 1.0, epsilon = 1e-9);
        let r2 = lojasiewicz_check(&disc(), 2, 2000, &mut rng).unwrap();
        assert!(r2.c_max.is_finite() && r2.c_max > 0.0);
        assert_eq!(r2.violations, 0);
        assert!(r2.near_diagonal_pairs > 100);
        assert!(lojasiewicz_check(&disc(), 2, 50, &mut rng).is_err());
    }

    #[test]
    fn complete_symmetric_examples() {
        assert_eq!(complete_symmetric(0, &[c(5.0, 1.0), c(2.0, 0.0)]), one());
        let z = [c(0.3, 0.1), c(-0.7, 0.2)];
        assert!((complete_symmetric(1, &z) - (z[0] + z[1])).norm() < 1e-15);
        assert_eq!(complete_symmetric(2, &[c(1.0, 0.0), c(2.0, 0.0)]), c(7.0, 0.0));
        assert_eq!(complete_symmetric(-1, &z), zero());
        // h_3 in three variables by enumeration.
        let z = [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)];
        let mut brute = zero();
        for a in 0..=3u32 {
            for b in 0..=(3 - a) {
                let cexp = 3 - a - b;
                brute += z[0].powu(a) * z[1].powu(b) * z[2].powu(cexp);
            }
        }
        assert_eq!(complete_symmetric(3, &z), brute);
    }

    #[test]
    fn component_signatures() {
        let d = disc();
        let inside = symmetrize(&ProductPoint(vec![c(0.1, 0.0), c(0.2, 0.0)]));
        assert_eq!(classify_symmetric_point(&d, &inside).unwrap(), ComponentSignature(vec![2, 0]));
        let split = symmetrize(&ProductPoint(vec![c(0.5, 0.0), c(3.0, 0.0)]));
        assert_eq!(classify_symmetric_point(&d, &split).unwrap(), ComponentSignature(vec![1, 1]));
        assert_eq!(expected_component_count(2, 2), 3);
        assert_eq!(expected_component_count(2, 3), 6);
        assert_eq!(expected_component_count(3, 2), 4);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let census = component_census(&d, 2, 2000, &mut rng).unwrap();
        assert_eq!(census.counts.len(), 3);
    }

    #[test]
    fn newton_examples() {
        assert!(close(&newton_map(&[c(3.0, 0.0), c(5.0, 0.0)]), &[c(3.0, 0.0), c(2.0, 0.0)], 1e-15));
        assert!(close(&newton_map(&[zero(); 4]), &[zero(); 4], 0.0));
        let ps = power_sums(&[one(), omega(), omega() * omega()], 3);
        assert!(close(&ps, &[zero(), zero(), c(3.0, 0.0)], 1e-14));
        assert!(close(&newton_map(&ps), &[zero(), zero(), one()], 1e-14));
    }

    #[test]
    fn psi_examples() {
        let big = build_domain(&DomainSpec::Disc { center: c(0.0, 0.0), radius: 3.0 }).unwrap();
        let grid = Arc::new(big.sample(256).unwrap());
        let id = BoundarySamples::from_fn(grid, |t, _| t, "t");
        let z = SymPoint(vec![c(3.0, 0.0), c(2.0, 0.0)]);
        assert!((psi_ell(&id, 1, &z).unwrap() - 3.0).norm() < 1e-10);
        assert!((psi_ell(&id, 2, &z).unwrap() - 5.0).norm() < 1e-10);

        let grid = Arc::new(disc().sample(256).unwrap());
        let sq = BoundarySamples::from_fn(grid, |t, _| t * t, "t^2");
        let z = symmetrize(&ProductPoint(vec![c(0.1, 0.0), c(0.2, 0.0)]));
        assert!((psi_ell(&sq, 1, &z).unwrap() - 0.05).norm() < 1e-12);
        let image = symmetric_power_map(&sq, &z).unwrap();
        assert!(close(&image.0, &[c(0.05, 0.0), c(0.0004, 0.0)], 1e-12));
    }
}
