//! Proper holomorphic maps `Σⁿf : ΣⁿD → ΣⁿD` of the symmetrized polydisc.
//!
//! `Σⁿf(π(w)) = π(f(w_1), …, f(w_n))`. The integral route recovers the same
//! map from boundary values of `f` through the power-sum integrals `Ψ_ℓ` and
//! Newton's identities; the roots route evaluates the defining property
//! directly.

use alloc::{format, string::String, sync::Arc, vec::Vec};
use core::f64::consts::TAU;

// Inherent when std is linked, needed under no_std.
#[allow(unused_imports)]
use num_traits::Float;
use rand::Rng;

use crate::{
    cauchy::{BoundarySamples, ProductPoint, SymPoint},
    geometry::{build_domain, DomainBoundary, DomainSpec},
    holder::{estimate_exponent, ExponentFit, FieldMeta, SampledField},
    symmetric::{desymmetrize, lambda_n, symmetric_power_map, symmetrize},
    Error, Result, C64,
};

/// Regularity parameter used by the boundary experiment.
pub const THETA: f64 = 0.9;
/// Slack below `θ/Λ_n` tolerated by the boundary experiment.
pub const EXPONENT_SLACK: f64 = 0.05;

/// Self-maps of the unit disc with closed forms.
#[derive(Debug, Clone, PartialEq)]
pub enum ProperMapKind {
    Identity,
    /// `t^d`.
    Monomial(u32),
    /// `∏ (t − a_i)/(1 − conj(a_i) t)`.
    Blaschke(Vec<C64>),
}

impl ProperMapKind {
    pub fn eval(&self, t: C64) -> C64 {
        match self {
            ProperMapKind::Identity => t,
            ProperMapKind::Monomial(d) => t.powu(*d),
            ProperMapKind::Blaschke(zeros) => zeros
                .iter()
                .fold(C64::new(1.0, 0.0), |acc, a| acc * (t - a) / (1.0 - a.conj() * t)),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            ProperMapKind::Monomial(0) => Err(Error::InvalidInput("monomial degree must be ≥ 1".into())),
            ProperMapKind::Blaschke(zeros) if zeros.is_empty() || zeros.iter().any(|a| a.norm() >= 1.0) => {
                Err(Error::InvalidInput("Blaschke zeros must be nonempty and inside the unit disc".into()))
            }
            _ => Ok(()),
        }
    }
}

impl core::fmt::Display for ProperMapKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ProperMapKind::Identity => write!(f, "identity"),
            ProperMapKind::Monomial(d) => write!(f, "monomial {d}"),
            ProperMapKind::Blaschke(zeros) => {
                write!(f, "blaschke")?;
                for a in zeros {
                    if a.im == 0.0 {
                        write!(f, " {}", a.re)?;
                    } else {
                        write!(f, " {}{:+}i", a.re, a.im)?;
                    }
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProperMapSpec {
    pub map: ProperMapKind,
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Integral,
    Roots,
}

/// A proper map with its boundary data sampled on the unit circle.
#[derive(Debug, Clone)]
pub struct ProperMap {
    spec: ProperMapSpec,
    domain: DomainBoundary,
    boundary: BoundarySamples,
}

impl ProperMap {
    pub fn new(spec: ProperMapSpec, nodes: usize) -> Result<Self> {
        spec.map.validate()?;
        if spec.n == 0 {
            return Err(Error::InvalidInput("arity must be ≥ 1".into()));
        }
        let domain = build_domain(&DomainSpec::Disc { center: C64::new(0.0, 0.0), radius: 1.0 })?;
        let grid = Arc::new(domain.sample(nodes)?);
        let map = spec.map.clone();
        let boundary = BoundarySamples::from_fn(grid, move |t, _| map.eval(t), format!("{}", spec.map));
        Ok(ProperMap { spec, domain, boundary })
    }

    pub fn spec(&self) -> &ProperMapSpec {
        &self.spec
    }

    pub fn domain(&self) -> &DomainBoundary {
        &self.domain
    }

    /// Root clearance from the circle above which the integral route is
    /// accurate to roughly `e^{−30}` at this node count.
    pub fn integral_clearance(&self) -> f64 {
        30.0 / self.boundary.grid().nodes_per_contour() as f64
    }

    fn preimage(&self, z: &SymPoint) -> Result<Vec<C64>> {
        if z.arity() != self.spec.n {
            return Err(Error::InvalidInput(format!("expected arity {}, got {}", self.spec.n, z.arity())));
        }
        let roots = desymmetrize(z)?.roots;
        for &r in &roots {
            let label = self.domain.classify_point(r)?;
            if !label.is_domain() {
                return Err(Error::WrongRegion(format!("root {r} outside the disc")));
            }
        }
        Ok(roots)
    }

    pub fn evaluate(&self, z: &SymPoint, route: Route) -> Result<SymPoint> {
        let roots = self.preimage(z)?;
        Ok(match route {
            Route::Integral => symmetric_power_map(&self.boundary, z)?,
            Route::Roots => symmetrize(&ProductPoint(roots.iter().map(|&w| self.spec.map.eval(w)).collect())),
        })
    }

    /// Integral route when every root clears the circle by
    /// [`ProperMap::integral_clearance`], roots route otherwise.
    pub fn evaluate_auto(&self, z: &SymPoint) -> Result<(SymPoint, Route)> {
        let roots = self.preimage(z)?;
        let clearance = roots.iter().map(|r| 1.0 - r.norm()).fold(f64::INFINITY, f64::min);
        if clearance >= self.integral_clearance() {
            Ok((symmetric_power_map(&self.boundary, z)?, Route::Integral))
        } else {
            Ok((symmetrize(&ProductPoint(roots.iter().map(|&w| self.spec.map.eval(w)).collect())), Route::Roots))
        }
    }
}

/// One-shot evaluation of `Σⁿf(z)`.
pub fn evaluate_proper_map(spec: &ProperMapSpec, z: &SymPoint, route: Route, nodes: usize) -> Result<SymPoint> {
    ProperMap::new(spec.clone(), nodes)?.evaluate(z, route)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegularityReport {
    pub n: usize,
    pub lambda: u64,
    pub theta: f64,
    /// `θ/Λ_n − slack`.
    pub threshold: f64,
    /// One fit per coordinate of `F`.
    pub fits: Vec<ExponentFit>,
    pub integral_evaluations: usize,
    pub root_evaluations: usize,
    pub passed: bool,
    pub description: String,
}

/// Samples `z = π(w)` with each `w_j` at distance `10^{−U(2,4)}` inside the
/// unit circle; 10% of samples also pull `w_2` within `1e-3` of `w_1`.
/// Every coordinate of `F = Σⁿf` gets its own exponent fit.
pub fn boundary_regularity_experiment<R: Rng + ?Sized>(
    map: &ProperMap,
    num_samples: usize,
    rng: &mut R,
) -> Result<RegularityReport> {
    if num_samples < 1000 {
        return Err(Error::InvalidInput(format!("need at least 1000 samples, got {num_samples}")));
    }
    let n = map.spec.n;
    let mut points = Vec::with_capacity(num_samples);
    let mut images = Vec::with_capacity(num_samples);
    let (mut integral, mut roots) = (0, 0);
    while points.len() < num_samples {
        let mut w: Vec<C64> = (0..n).map(|_| near_circle(rng)).collect();
        if n >= 2 && rng.gen_bool(0.1) {
            let cand = w[0] + C64::from_polar(1e-3 * rng.gen::<f64>(), TAU * rng.gen::<f64>());
            if cand.norm() < 1.0 - 1e-5 {
                w[1] = cand;
            }
        }
        let z = symmetrize(&ProductPoint(w));
        let (value, route) = match map.evaluate_auto(&z) {
            Ok(v) => v,
            Err(Error::BoundaryProximity { .. }) => continue,
            Err(e) => return Err(e),
        };
        match route {
            Route::Integral => integral += 1,
            Route::Roots => roots += 1,
        }
        points.push(z.0);
        images.push(value.0);
    }
    let lambda = lambda_n(n);
    let threshold = THETA / lambda as f64 - EXPONENT_SLACK;
    let mut fits = Vec::with_capacity(n);
    for k in 0..n {
        let meta = FieldMeta {
            transform: format!("Sigma^{n} f, coordinate {}", k + 1),
            phi: format!("{}", map.spec.map),
            domain: "disc 0 0 1".into(),
            n,
            nodes: map.boundary.grid().nodes_per_contour(),
        };
        let values = images.iter().map(|v| v[k]).collect();
        let field = SampledField::from_complex(&points, values, meta)?;
        fits.push(estimate_exponent(&field)?);
    }
    let passed = fits.iter().all(|f| f.alpha_hat >= threshold);
    Ok(RegularityReport {
        n,
        lambda,
        theta: THETA,
        threshold,
        fits,
        integral_evaluations: integral,
        root_evaluations: roots,
        passed,
        description: format!("{}", map.spec.map),
    })
}

fn near_circle<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let gap = 10f64.powf(-2.0 - 2.0 * rng.gen::<f64>());
    C64::from_polar(1.0 - gap, TAU * rng.gen::<f64>())
}
