//! Planar domains bounded by analytic closed contours.
//!
//! A [`DomainBoundary`] is one positively oriented outer contour plus zero or
//! more negatively oriented hole contours, so the boundary cycle is `∂U` with
//! the standard orientation. Points are classified by winding numbers and the
//! boundary is sampled on equispaced parameter grids for the trapezoid rule.

use alloc::{format, string::String, vec::Vec};
use core::f64::consts::TAU;

// Inherent when std is linked, needed under no_std.
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result, C64};

/// Samples per contour used to validate simplicity and nesting.
pub const VALIDATION_SAMPLES: usize = 2048;

/// Relative boundary clearance: points closer than this times the domain
/// diameter are rejected by classification.
pub const BOUNDARY_TOL_REL: f64 = 1e-6;

const CACHE_SAMPLES: usize = 256;
const MAX_WINDING_DEPTH: u32 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Positive => 1.0,
            Orientation::Negative => -1.0,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

/// Built-in analytic curve families, parametrized counter-clockwise by
/// `θ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Curve {
    Circle { center: C64, radius: f64 },
    Ellipse { center: C64, a: f64, b: f64 },
    /// Polar curve `r(θ) = R (1 + ε cos mθ)`.
    Star { center: C64, radius: f64, eps: f64, m: u32 },
}

impl Curve {
    pub fn point(&self, theta: f64) -> C64 {
        match *self {
            Curve::Circle { center, radius } => center + C64::from_polar(radius, theta),
            Curve::Ellipse { center, a, b } => center + C64::new(a * theta.cos(), b * theta.sin()),
            Curve::Star { center, radius, eps, m } => {
                let r = radius * (1.0 + eps * (m as f64 * theta).cos());
                center + C64::from_polar(r, theta)
            }
        }
    }

    /// Derivative of [`Curve::point`] with respect to `θ`.
    pub fn tangent(&self, theta: f64) -> C64 {
        match *self {
            Curve::Circle { radius, .. } => C64::from_polar(radius, theta) * C64::i(),
            Curve::Ellipse { a, b, .. } => C64::new(-a * theta.sin(), b * theta.cos()),
            Curve::Star { radius, eps, m, .. } => {
                let mf = m as f64;
                let r = radius * (1.0 + eps * (mf * theta).cos());
                let dr = -radius * eps * mf * (mf * theta).sin();
                C64::from_polar(1.0, theta) * C64::new(dr, r)
            }
        }
    }

    fn check_parameters(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidGeometry(msg));
        match *self {
            Curve::Circle { radius, .. } if !(radius > 0.0 && radius.is_finite()) => {
                bad(format!("circle radius {radius} must be positive"))
            }
            Curve::Ellipse { a, b, .. } if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) => {
                bad(format!("ellipse semi-axes ({a}, {b}) must be positive"))
            }
            Curve::Star { radius, eps, m, .. } => {
                if !(radius > 0.0 && radius.is_finite()) || !(eps >= 0.0) || m == 0 {
                    return bad(format!("star parameters R={radius}, eps={eps}, m={m} out of range"));
                }
                // r > 0 makes the polar curve simple; r + r'' > 0 is the
                // admissibility condition of the family.
                let mf = m as f64;
                for k in 0..VALIDATION_SAMPLES {
                    let c = (mf * TAU * k as f64 / VALIDATION_SAMPLES as f64).cos();
                    let r = 1.0 + eps * c;
                    let r_plus_rpp = 1.0 + eps * (1.0 - mf * mf) * c;
                    if r <= 0.0 || r_plus_rpp <= 0.0 {
                        return bad(format!(
                            "star with eps={eps}, m={m} violates r > 0 and r + r'' > 0"
                        ));
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

/// One oriented boundary component.
#[derive(Debug, Clone)]
pub struct Contour {
    curve: Curve,
    orientation: Orientation,
    label: usize,
    cache: Vec<C64>,
    max_speed: f64,
}

impl Contour {
    pub fn new(curve: Curve, orientation: Orientation, label: usize) -> Self {
        let cache = (0..CACHE_SAMPLES)
            .map(|k| curve.point(TAU * k as f64 / CACHE_SAMPLES as f64))
            .collect();
        // Speed bound with a margin for the gaps between validation samples.
        let max_speed = (0..VALIDATION_SAMPLES)
            .map(|k| curve.tangent(TAU * k as f64 / VALIDATION_SAMPLES as f64).norm())
            .fold(0.0, f64::max)
            * 1.01;
        Contour { curve, orientation, label, cache, max_speed }
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn label(&self) -> usize {
        self.label
    }

    pub fn point(&self, theta: f64) -> C64 {
        self.curve.point(theta)
    }

    pub fn tangent(&self, theta: f64) -> C64 {
        self.curve.tangent(theta)
    }

    /// The same curve traversed the other way.
    pub fn reversed(&self) -> Self {
        let mut out = self.clone();
        out.orientation = self.orientation.reversed();
        out
    }

    /// Euclidean distance from `w` to the curve.
    pub fn distance(&self, w: C64) -> f64 {
        let n = self.cache.len();
        let step = TAU / n as f64;
        let slack = self.max_speed * step;
        let dists: Vec<f64> = self.cache.iter().map(|p| (p - w).norm()).collect();
        let coarse = dists.iter().copied().fold(f64::INFINITY, f64::min);
        let mut best = coarse;
        for (k, &d) in dists.iter().enumerate() {
            if d > coarse + slack {
                continue;
            }
            let theta = step * k as f64;
            best = best.min(self.refine_distance(w, theta - step, theta + step));
        }
        best
    }

    /// Cheap bound `≤ distance(w)`.
    pub fn distance_lower_bound(&self, w: C64) -> f64 {
        let step = TAU / self.cache.len() as f64;
        let coarse = self.cache.iter().map(|p| (p - w).norm()).fold(f64::INFINITY, f64::min);
        coarse - 0.5 * self.max_speed * step
    }

    fn refine_distance(&self, w: C64, mut lo: f64, mut hi: f64) -> f64 {
        let golden = 0.5 * (5.0f64.sqrt() - 1.0);
        let f = |t: f64| (self.curve.point(t) - w).norm();
        let mut a = hi - golden * (hi - lo);
        let mut b = lo + golden * (hi - lo);
        let (mut fa, mut fb) = (f(a), f(b));
        for _ in 0..80 {
            if fa < fb {
                hi = b;
                b = a;
                fb = fa;
                a = hi - golden * (hi - lo);
                fa = f(a);
            } else {
                lo = a;
                a = b;
                fa = fb;
                b = lo + golden * (hi - lo);
                fb = f(b);
            }
        }
        fa.min(fb)
    }

    /// Signed winding contribution `(1/2πi) ∮ dt/(t − w)` before rounding.
    ///
    /// Integrates the argument increment along the analytic parametrization,
    /// bisecting wherever a step turns by more than π/8 or its chord is long
    /// compared with the distance to `w`.
    pub fn winding_value(&self, w: C64) -> Result<f64> {
        let n = CACHE_SAMPLES;
        let step = TAU / n as f64;
        let mut total = 0.0;
        for k in 0..n {
            let a = step * k as f64;
            total += self.arg_increment(w, a, a + step, 0)?;
        }
        Ok(self.orientation.sign() * total / TAU)
    }

    fn arg_increment(&self, w: C64, a: f64, b: f64, depth: u32) -> Result<f64> {
        let pa = self.curve.point(a) - w;
        let pb = self.curve.point(b) - w;
        let turn = (pb / pa).arg();
        let chord = self.max_speed * (b - a);
        if turn.abs() <= core::f64::consts::PI / 8.0 && chord <= 0.5 * pa.norm().min(pb.norm()) {
            return Ok(turn);
        }
        if depth >= MAX_WINDING_DEPTH {
            return Err(Error::Nonconvergent(format!(
                "argument increment unresolved near θ = {a} on contour {}",
                self.label
            )));
        }
        let mid = 0.5 * (a + b);
        Ok(self.arg_increment(w, a, mid, depth + 1)? + self.arg_increment(w, mid, b, depth + 1)?)
    }

    fn polyline(&self, samples: usize) -> Vec<C64> {
        (0..samples)
            .map(|k| self.curve.point(TAU * k as f64 / samples as f64))
            .collect()
    }
}

/// Approximate diameter of a set of contours from their cached samples.
fn diameter_of(contours: &[Contour]) -> f64 {
    let pts: Vec<C64> = contours.iter().flat_map(|c| c.cache.iter().copied()).collect();
    let mut d: f64 = 0.0;
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            d = d.max((p - q).norm());
        }
    }
    d
}

/// Winding number of the oriented cycle formed by `contours` about `w`.
pub fn winding_number(contours: &[Contour], w: C64) -> Result<i32> {
    let tol = BOUNDARY_TOL_REL * diameter_of(contours);
    winding_with_tolerance(contours, w, tol)
}

fn winding_with_tolerance(contours: &[Contour], w: C64, tol: f64) -> Result<i32> {
    let mut total = 0.0;
    for c in contours {
        check_clearance(c, w, tol)?;
        total += c.winding_value(w)?;
    }
    round_winding(total)
}

fn check_clearance(c: &Contour, w: C64, tol: f64) -> Result<()> {
    if c.distance_lower_bound(w) > tol {
        return Ok(());
    }
    let distance = c.distance(w);
    if distance <= tol {
        return Err(Error::BoundaryProximity { distance, tolerance: tol });
    }
    Ok(())
}

fn round_winding(value: f64) -> Result<i32> {
    let rounded = value.round();
    if (value - rounded).abs() > 0.25 {
        return Err(Error::Nonconvergent(format!("winding value {value} is not near an integer")));
    }
    Ok(rounded as i32)
}

/// Component of `ℂ ∖ Γ`: 0 is the domain itself, 1 the unbounded
/// component, `2..κ` the holes in contour order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RegionLabel(pub usize);

impl RegionLabel {
    pub const DOMAIN: RegionLabel = RegionLabel(0);
    pub const UNBOUNDED: RegionLabel = RegionLabel(1);

    pub fn index(self) -> usize {
        self.0
    }

    pub fn is_domain(self) -> bool {
        self.0 == 0
    }
}

/// Domain descriptors for the built-in families.
#[derive(Debug, Clone, PartialEq)]
pub enum DomainSpec {
    Disc { center: C64, radius: f64 },
    Ellipse { center: C64, a: f64, b: f64 },
    Star { center: C64, radius: f64, eps: f64, m: u32 },
    Annulus { center: C64, inner: f64, outer: f64 },
    Composite { outer: Curve, holes: Vec<Curve> },
}

pub fn build_domain(spec: &DomainSpec) -> Result<DomainBoundary> {
    match spec {
        DomainSpec::Disc { center, radius } => {
            DomainBoundary::new(Curve::Circle { center: *center, radius: *radius }, Vec::new())
        }
        DomainSpec::Ellipse { center, a, b } => {
            DomainBoundary::new(Curve::Ellipse { center: *center, a: *a, b: *b }, Vec::new())
        }
        DomainSpec::Star { center, radius, eps, m } => DomainBoundary::new(
            Curve::Star { center: *center, radius: *radius, eps: *eps, m: *m },
            Vec::new(),
        ),
        DomainSpec::Annulus { center, inner, outer } => DomainBoundary::new(
            Curve::Circle { center: *center, radius: *outer },
            alloc::vec![Curve::Circle { center: *center, radius: *inner }],
        ),
        DomainSpec::Composite { outer, holes } => DomainBoundary::new(*outer, holes.clone()),
    }
}

/// Validated boundary of a bounded domain `U`.
#[derive(Debug, Clone)]
pub struct DomainBoundary {
    contours: Vec<Contour>,
    diameter: f64,
    center: C64,
    radius: f64,
}

impl DomainBoundary {
    /// Builds and validates a domain from its outer curve and hole curves.
    pub fn new(outer: Curve, holes: Vec<Curve>) -> Result<Self> {
        let mut contours = Vec::with_capacity(holes.len() + 1);
        contours.push(Contour::new(outer, Orientation::Positive, 0));
        for (k, h) in holes.into_iter().enumerate() {
            contours.push(Contour::new(h, Orientation::Negative, k + 1));
        }
        for c in &contours {
            c.curve.check_parameters()?;
        }
        let polylines: Vec<Vec<C64>> =
            contours.iter().map(|c| c.polyline(VALIDATION_SAMPLES)).collect();
        for (c, poly) in contours.iter().zip(&polylines) {
            check_regular(c)?;
            if let Some((i, j)) = self_intersection(poly) {
                return Err(Error::InvalidGeometry(format!(
                    "contour {} self-intersects between segments {i} and {j}",
                    c.label
                )));
            }
        }
        for h in 1..polylines.len() {
            if polylines_cross(&polylines[0], &polylines[h]) {
                return Err(Error::InvalidGeometry(format!("hole {h} crosses the outer contour")));
            }
            if polylines[h].iter().any(|&p| !point_in_polygon(&polylines[0], p)) {
                return Err(Error::InvalidGeometry(format!("hole {h} is not inside the outer contour")));
            }
            for g in 1..h {
                if polylines_cross(&polylines[g], &polylines[h])
                    || point_in_polygon(&polylines[g], polylines[h][0])
                    || point_in_polygon(&polylines[h], polylines[g][0])
                {
                    return Err(Error::InvalidGeometry(format!("holes {g} and {h} overlap")));
                }
            }
        }

        let diameter = diameter_of(&contours);
        let (mut lo, mut hi) = (C64::new(f64::INFINITY, f64::INFINITY), C64::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
        for p in &polylines[0] {
            lo = C64::new(lo.re.min(p.re), lo.im.min(p.im));
            hi = C64::new(hi.re.max(p.re), hi.im.max(p.im));
        }
        let center = 0.5 * (lo + hi);
        let radius = polylines[0].iter().map(|p| (p - center).norm()).fold(0.0, f64::max);
        Ok(DomainBoundary { contours, diameter, center, radius })
    }

    pub fn contours(&self) -> &[Contour] {
        &self.contours
    }

    /// Number of components of `ℂ ∖ Γ`.
    pub fn kappa(&self) -> usize {
        self.contours.len() + 1
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// Center and radius of a disc containing the closure of the domain.
    pub fn bounding_disc(&self) -> (C64, f64) {
        (self.center, self.radius)
    }

    pub fn tol_boundary(&self) -> f64 {
        BOUNDARY_TOL_REL * self.diameter
    }

    pub fn distance_to_boundary(&self, w: C64) -> f64 {
        self.contours.iter().map(|c| c.distance(w)).fold(f64::INFINITY, f64::min)
    }

    pub fn winding_number(&self, w: C64) -> Result<i32> {
        winding_with_tolerance(&self.contours, w, self.tol_boundary())
    }

    /// Region containing `w`, from the per-contour winding numbers.
    pub fn classify_point(&self, w: C64) -> Result<RegionLabel> {
        let tol = self.tol_boundary();
        let mut windings = Vec::with_capacity(self.contours.len());
        for c in &self.contours {
            check_clearance(c, w, tol)?;
            windings.push(round_winding(c.winding_value(w)?)?);
        }
        if windings[0] == 0 {
            return Ok(RegionLabel::UNBOUNDED);
        }
        match windings.iter().skip(1).position(|&k| k != 0) {
            Some(h) => Ok(RegionLabel(h + 2)),
            None => Ok(RegionLabel::DOMAIN),
        }
    }

    /// True when `w` lies in the domain and clears the boundary tolerance.
    pub fn contains(&self, w: C64) -> bool {
        matches!(self.classify_point(w), Ok(l) if l.is_domain())
    }

    /// Equispaced trapezoid grid with `nodes_per_contour` nodes per contour.
    pub fn sample(&self, nodes_per_contour: usize) -> Result<BoundaryGrid> {
        sample_boundary(self, nodes_per_contour)
    }
}

fn check_regular(c: &Contour) -> Result<()> {
    let scale = c.max_speed.max(f64::MIN_POSITIVE);
    for k in 0..VALIDATION_SAMPLES {
        let theta = TAU * k as f64 / VALIDATION_SAMPLES as f64;
        if c.tangent(theta).norm() <= 1e-12 * scale {
            return Err(Error::InvalidGeometry(format!(
                "contour {} has a vanishing tangent at θ = {theta}",
                c.label
            )));
        }
    }
    Ok(())
}

fn cross(a: C64, b: C64) -> f64 {
    a.re * b.im - a.im * b.re
}

fn segments_intersect(p1: C64, p2: C64, q1: C64, q2: C64) -> bool {
    let (lo_p, hi_p) = (C64::new(p1.re.min(p2.re), p1.im.min(p2.im)), C64::new(p1.re.max(p2.re), p1.im.max(p2.im)));
    if q1.re.max(q2.re) < lo_p.re || q1.re.min(q2.re) > hi_p.re || q1.im.max(q2.im) < lo_p.im || q1.im.min(q2.im) > hi_p.im {
        return false;
    }
    let d1 = cross(p2 - p1, q1 - p1);
    let d2 = cross(p2 - p1, q2 - p1);
    let d3 = cross(q2 - q1, p1 - q1);
    let d4 = cross(q2 - q1, p2 - q1);
    d1 * d2 <= 0.0 && d3 * d4 <= 0.0
}

/// First pair of non-adjacent crossing segments of a closed polyline.
fn self_intersection(poly: &[C64]) -> Option<(usize, usize)> {
    let n = poly.len();
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            if segments_intersect(a, b, poly[j], poly[(j + 1) % n]) {
                return Some((i, j));
            }
        }
    }
    None
}

fn polylines_cross(a: &[C64], b: &[C64]) -> bool {
    let (na, nb) = (a.len(), b.len());
    (0..na).any(|i| (0..nb).any(|j| segments_intersect(a[i], a[(i + 1) % na], b[j], b[(j + 1) % nb])))
}

fn point_in_polygon(poly: &[C64], p: C64) -> bool {
    let n = poly.len();
    let mut inside = false;
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        if (a.im > p.im) != (b.im > p.im) {
            let x = a.re + (p.im - a.im) * (b.re - a.re) / (b.im - a.im);
            if x > p.re {
                inside = !inside;
            }
        }
    }
    inside
}

/// Trapezoid grid on the boundary cycle.
///
/// `Σ_j weight[j]·g(t[j])` approximates `∮_Γ g(t) dt`; the hole weights carry
/// the negative orientation sign.
#[derive(Debug, Clone)]
pub struct BoundaryGrid {
    domain: DomainBoundary,
    nodes_per_contour: usize,
    pub t: Vec<C64>,
    pub tangent: Vec<C64>,
    pub weight: Vec<C64>,
    pub theta: Vec<f64>,
    pub contour: Vec<usize>,
}

impl BoundaryGrid {
    pub fn domain(&self) -> &DomainBoundary {
        &self.domain
    }

    pub fn nodes_per_contour(&self) -> usize {
        self.nodes_per_contour
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    /// Largest distance between consecutive nodes of a contour.
    pub fn max_spacing(&self) -> f64 {
        let n = self.nodes_per_contour;
        let mut gap: f64 = 0.0;
        for block in self.t.chunks(n) {
            for k in 0..n {
                gap = gap.max((block[(k + 1) % n] - block[k]).norm());
            }
        }
        gap
    }
}

/// Samples every contour of `domain` at `nodes_per_contour` equispaced
/// parameter values. The node count must be even and at least 4.
pub fn sample_boundary(domain: &DomainBoundary, nodes_per_contour: usize) -> Result<BoundaryGrid> {
    if nodes_per_contour < 4 || !nodes_per_contour.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "nodes per contour must be even and at least 4, got {nodes_per_contour}"
        )));
    }
    let total = nodes_per_contour * domain.contours.len();
    let mut grid = BoundaryGrid {
        domain: domain.clone(),
        nodes_per_contour,
        t: Vec::with_capacity(total),
        tangent: Vec::with_capacity(total),
        weight: Vec::with_capacity(total),
        theta: Vec::with_capacity(total),
        contour: Vec::with_capacity(total),
    };
    let h = TAU / nodes_per_contour as f64;
    for (idx, c) in domain.contours.iter().enumerate() {
        let sign = c.orientation.sign();
        for k in 0..nodes_per_contour {
            let theta = h * k as f64;
            let dt = c.tangent(theta);
            grid.t.push(c.point(theta));
            grid.tangent.push(dt);
            grid.weight.push(dt * (sign * h));
            grid.theta.push(theta);
            grid.contour.push(idx);
        }
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn disc() -> DomainBoundary {
        build_domain(&DomainSpec::Disc { center: C64::new(0.0, 0.0), radius: 1.0 }).unwrap()
    }

    fn annulus() -> DomainBoundary {
        build_domain(&DomainSpec::Annulus { center: C64::new(0.0, 0.0), inner: 0.3, outer: 1.0 }).unwrap()
    }

    #[test]
    fn built_in_families_have_expected_kappa() {
        assert_eq!(disc().kappa(), 2);
        assert_eq!(disc().contours().len(), 1);
        let a = annulus();
        assert_eq!(a.contours().len(), 2);
        assert_eq!(a.kappa(), 3);
        assert_eq!(a.contours()[1].orientation(), Orientation::Negative);
    }

    #[test]
    fn overly_deep_star_is_rejected() {
        let spec = DomainSpec::Star { center: C64::new(0.0, 0.0), radius: 1.0, eps: 0.8, m: 2 };
        assert!(matches!(build_domain(&spec), Err(Error::InvalidGeometry(_))));
        let mild = DomainSpec::Star { center: C64::new(0.0, 0.0), radius: 1.0, eps: 0.1, m: 3 };
        assert!(build_domain(&mild).is_ok());
    }

    #[test]
    fn bad_nesting_is_rejected() {
        let outer = Curve::Circle { center: C64::new(0.0, 0.0), radius: 1.0 };
        let escaping = Curve::Circle { center: C64::new(0.9, 0.0), radius: 0.3 };
        assert!(matches!(DomainBoundary::new(outer, alloc::vec![escaping]), Err(Error::InvalidGeometry(_))));
        let h1 = Curve::Circle { center: C64::new(0.3, 0.0), radius: 0.2 };
        let h2 = Curve::Circle { center: C64::new(-0.1, 0.0), radius: 0.25 };
        assert!(matches!(DomainBoundary::new(outer, alloc::vec![h1, h2]), Err(Error::InvalidGeometry(_))));
        let h3 = Curve::Circle { center: C64::new(-0.5, 0.0), radius: 0.2 };
        let two_holes = DomainBoundary::new(outer, alloc::vec![h1, h3]).unwrap();
        assert_eq!(two_holes.kappa(), 4);
        assert_eq!(two_holes.classify_point(C64::new(-0.5, 0.0)).unwrap(), RegionLabel(3));
        assert_eq!(two_holes.classify_point(C64::new(0.3, 0.0)).unwrap(), RegionLabel(2));
    }

    #[test]
    fn winding_of_circle() {
        let d = disc();
        assert_eq!(d.winding_number(C64::new(0.0, 0.0)).unwrap(), 1);
        assert_eq!(d.winding_number(C64::new(2.0, 0.0)).unwrap(), 0);
        let a = annulus();
        assert_eq!(winding_number(a.contours(), C64::new(0.1, 0.0)).unwrap(), 0);
    }

    #[test]
    fn winding_near_boundary() {
        let d = disc();
        // Well inside the 1e-6 tolerance band on each side.
        assert_eq!(d.winding_number(C64::new(1.0 - 1e-5, 0.0)).unwrap(), 1);
        assert_eq!(d.winding_number(C64::new(0.0, 1.0 + 1e-5)).unwrap(), 0);
        assert!(matches!(
            d.winding_number(C64::new(1.0 + 1e-8, 0.0)),
            Err(Error::BoundaryProximity { .. })
        ));
    }

    #[test]
    fn reversing_orientation_negates_contribution() {
        let d = disc();
        let c = &d.contours()[0];
        let w = C64::new(0.2, -0.1);
        let fwd = c.winding_value(w).unwrap();
        let back = c.reversed().winding_value(w).unwrap();
        assert_eq!(fwd, -back);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(disc().classify_point(C64::new(0.5, 0.0)).unwrap(), RegionLabel::DOMAIN);
        assert_eq!(disc().classify_point(C64::new(3.0, 0.0)).unwrap(), RegionLabel::UNBOUNDED);
        assert_eq!(annulus().classify_point(C64::new(0.1, 0.0)).unwrap(), RegionLabel(2));
        assert_eq!(annulus().classify_point(C64::new(0.6, 0.2)).unwrap(), RegionLabel::DOMAIN);
    }

    #[test]
    fn circle_grid_with_four_nodes() {
        let g = disc().sample(4).unwrap();
        let expected = [C64::new(1.0, 0.0), C64::new(0.0, 1.0), C64::new(-1.0, 0.0), C64::new(0.0, -1.0)];
        for (t, e) in g.t.iter().zip(expected) {
            assert_abs_diff_eq!((t - e).norm(), 0.0, epsilon = 1e-15);
        }
        for (w, t) in g.weight.iter().zip(&g.t) {
            let e = C64::new(0.0, core::f64::consts::FRAC_PI_2) * t;
            assert_abs_diff_eq!((w - e).norm(), 0.0, epsilon = 1e-15);
        }
        assert!(disc().sample(5).is_err());
        assert!(disc().sample(2).is_err());
    }

    #[test]
    fn closed_form_contour_sums() {
        let g = disc().sample(64).unwrap();
        let sum: C64 = g.weight.iter().sum();
        assert!(sum.norm() < 1e-14);
        let cauchy: C64 = g.weight.iter().zip(&g.t).map(|(w, t)| w / t).sum();
        assert!((cauchy - C64::new(0.0, TAU)).norm() < 1e-12);
    }

    #[test]
    fn entire_moments_vanish_on_every_family() {
        let specs = [
            DomainSpec::Disc { center: C64::new(0.1, -0.2), radius: 1.0 },
            DomainSpec::Ellipse { center: C64::new(0.0, 0.0), a: 1.0, b: 0.6 },
            DomainSpec::Star { center: C64::new(0.0, 0.0), radius: 1.0, eps: 0.1, m: 3 },
            DomainSpec::Annulus { center: C64::new(0.0, 0.0), inner: 0.3, outer: 1.0 },
        ];
        for spec in &specs {
            let dom = build_domain(spec).unwrap();
            let mut n = 64;
            while n <= 512 {
                let g = dom.sample(n).unwrap();
                for m in 0..=8 {
                    let s: C64 = g.weight.iter().zip(&g.t).map(|(w, t)| w * t.powu(m)).sum();
                    assert!(s.norm() <= 1e-10, "{spec:?} N={n} m={m}: {s}");
                }
                n *= 2;
            }
        }
    }

    #[test]
    fn contour_distance() {
        let e = build_domain(&DomainSpec::Ellipse { center: C64::new(0.0, 0.0), a: 2.0, b: 1.0 }).unwrap();
        assert_abs_diff_eq!(e.distance_to_boundary(C64::new(0.0, 0.5)), 0.5, epsilon = 1e-9);
        assert_abs_diff_eq!(e.distance_to_boundary(C64::new(3.0, 0.0)), 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(annulus().distance_to_boundary(C64::new(0.0, 0.0)), 0.3, epsilon = 1e-9);
    }
}
