//! Identity suites and experiments behind the subcommands. Each function
//! takes its parameters explicitly and returns an [`Outcome`] holding
//! results, asserted checks and CSV tables.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use symprod_core::{
    cauchy::{
        cauchy_transform, derivative_symmetrized, norlund_transform, pv_blowup_fit, symmetrized_transform,
        weierstrass, BoundarySamples, MultiIndex, PhiSpec, ProductPoint, SymPoint,
    },
    divdiff::{divdiff_gh_default, divdiff_recursive, Analytic, FnHandle},
    geometry::{build_domain, DomainBoundary, DomainSpec},
    holder::{estimate_exponent, CALIBRATION_WEIERSTRASS_TERMS, ExponentFit, FieldMeta, SampledField},
    propermap::{boundary_regularity_experiment, ProperMap, ProperMapKind, ProperMapSpec, Route},
    symmetric::{
        component_census, desymmetrize, expected_component_count, lambda_n, lojasiewicz_check, newton_map,
        power_sums, random_domain_point, symmetrize,
    },
    Error, C64,
};

use crate::output::{cplx, cplx_json, num, Check, Outcome, Table};

pub type Result<T> = std::result::Result<T, Error>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn domain(spec: &DomainSpec) -> Result<DomainBoundary> {
    build_domain(spec)
}

pub fn samples(domain: &DomainBoundary, phi: &PhiSpec, nodes: usize) -> Result<BoundarySamples> {
    Ok(BoundarySamples::from_spec(Arc::new(domain.sample(nodes)?), phi))
}

/// `count` points of `U` at distance `≥ clearance` from `Γ` and pairwise
/// `≥ separation` apart.
pub fn separated_points<R: Rng + ?Sized>(
    domain: &DomainBoundary,
    count: usize,
    clearance: f64,
    separation: f64,
    rng: &mut R,
) -> Vec<C64> {
    let mut out: Vec<C64> = Vec::with_capacity(count);
    while out.len() < count {
        let p = random_domain_point(domain, rng);
        if domain.distance_to_boundary(p) >= clearance && out.iter().all(|q| (p - q).norm() >= separation) {
            out.push(p);
        }
    }
    out
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, |a, b| if b.is_nan() || b > a { b } else { a })
}

/// `𝒯φ` against the exact interior values for `t^m`, `m ≤ 8`, and
/// `1/(t − 3)` when `3 ∉ Ū`.
pub fn cauchy_reproduction(label: &str, spec: &DomainSpec, nodes: usize, points: usize, tol: f64, seed: u64) -> Result<Outcome> {
    let d = domain(spec)?;
    let mut rng = rng(seed);
    let zs: Vec<C64> = (0..points)
        .map(|_| loop {
            let p = random_domain_point(&d, &mut rng);
            if d.distance_to_boundary(p) >= 0.1 {
                break p;
            }
        })
        .collect();
    let mut phis: Vec<PhiSpec> = (0..=8).map(PhiSpec::Monomial).collect();
    if !d.contains(c(3.0, 0.0)) && d.distance_to_boundary(c(3.0, 0.0)) > 0.5 {
        phis.push(PhiSpec::Pole { a: c(3.0, 0.0), order: 1 });
    }
    let mut out = Outcome::default();
    let mut per_phi = serde_json::Map::new();
    let mut worst: f64 = 0.0;
    for phi in &phis {
        let s = samples(&d, phi, nodes)?;
        let errs: Vec<f64> = zs
            .par_iter()
            .map(|&z| {
                let exact = phi.holomorphic_extension(z).expect("catalog entries are holomorphic");
                cauchy_transform(&s, z).map(|v| (v - exact).norm())
            })
            .collect::<Result<_>>()?;
        let e = max_of(errs);
        per_phi.insert(phi.to_string(), json!(e));
        worst = max_of([worst, e]);
    }
    out.insert("max_error_by_phi", Value::Object(per_phi));
    out.checks.push(Check::at_most(format!("cauchy reproduction [{label}]"), worst, tol));
    Ok(out)
}

/// `ℬ_nφ(w)` against the Newton-table divided difference of `𝒯φ`.
pub fn norlund_identity(spec: &DomainSpec, phi: &PhiSpec, n: usize, nodes: usize, points: usize, tol: f64, seed: u64) -> Result<Outcome> {
    let d = domain(spec)?;
    let s = samples(&d, phi, nodes)?;
    let mut rng = rng(seed);
    let ws: Vec<Vec<C64>> = (0..points).map(|_| separated_points(&d, n, 0.1, 0.1, &mut rng)).collect();
    let transform = FnHandle(|z: C64| cauchy_transform(&s, z).unwrap_or(c(f64::NAN, f64::NAN)));
    let errs: Vec<f64> = ws
        .par_iter()
        .map(|w| {
            let b = norlund_transform(&s, &ProductPoint(w.clone()))?;
            let dd = divdiff_recursive(&transform, w)?;
            Ok((b - dd).norm())
        })
        .collect::<Result<_>>()?;
    let e = max_of(errs);
    let mut out = Outcome::default();
    out.insert("max_residual", json!(e));
    out.checks.push(Check::at_most(format!("norlund identity [n={n}, {phi}]"), e, tol));
    Ok(out)
}

/// Genocchi–Hermite simplex quadrature against the Newton table, orders
/// `1..=max_order`, nodes in the unit disc pairwise `≥ 0.1` apart.
pub fn genocchi_hermite(max_order: usize, trials: usize, tol: f64, seed: u64) -> Result<Outcome> {
    let disc = domain(&DomainSpec::Disc { center: c(0.0, 0.0), radius: 1.0 })?;
    let fs = [Analytic::Exp, Analytic::Monomial(6), Analytic::Pole { a: c(3.0, 0.0), order: 1 }];
    let mut rng = rng(seed);
    let mut out = Outcome::default();
    let mut worst: f64 = 0.0;
    for f in fs {
        for order in 1..=max_order {
            let sets: Vec<Vec<C64>> = (0..trials).map(|_| separated_points(&disc, order + 1, 0.0, 0.1, &mut rng)).collect();
            let errs: Vec<f64> = sets
                .par_iter()
                .map(|nodes| Ok((divdiff_gh_default(&f, nodes)? - divdiff_recursive(&f, nodes)?).norm()))
                .collect::<Result<_>>()?;
            let e = max_of(errs);
            out.insert(&format!("{f:?} order {order}"), json!(e));
            worst = max_of([worst, e]);
        }
    }
    out.checks.push(Check::at_most("genocchi-hermite vs newton table", worst, tol));
    Ok(out)
}

/// `ℰ_nφ(π(w))` against `ℬ_nφ(w)`.
pub fn pushforward(spec: &DomainSpec, phi: &PhiSpec, n: usize, nodes: usize, points: usize, tol: f64, seed: u64) -> Result<Outcome> {
    let d = domain(spec)?;
    let s = samples(&d, phi, nodes)?;
    let mut rng = rng(seed);
    let ws: Vec<Vec<C64>> = (0..points).map(|_| separated_points(&d, n, 0.1, 0.0, &mut rng)).collect();
    let errs: Vec<f64> = ws
        .par_iter()
        .map(|w| {
            let w = ProductPoint(w.clone());
            Ok((symmetrized_transform(&s, &symmetrize(&w))? - norlund_transform(&s, &w)?).norm())
        })
        .collect::<Result<_>>()?;
    let e = max_of(errs);
    let mut out = Outcome::default();
    out.insert("max_residual", json!(e));
    out.checks.push(Check::at_most(format!("push-forward [n={n}, {phi}]"), e, tol));
    Ok(out)
}

/// Central finite differences of `ℰ_nφ` in the coordinates of `z`.
fn finite_difference(s: &BoundarySamples, z: &[C64], gamma: &MultiIndex, h: f64) -> Result<C64> {
    let e = |shift: &[(usize, f64)]| {
        let mut p = z.to_vec();
        for &(j, dz) in shift {
            p[j] += dz;
        }
        symmetrized_transform(s, &SymPoint(p))
    };
    let idx: Vec<usize> = gamma.0.iter().enumerate().flat_map(|(j, &g)| std::iter::repeat_n(j, g as usize)).collect();
    match idx.as_slice() {
        [i] => Ok((e(&[(*i, h)])? - e(&[(*i, -h)])?) / (2.0 * h)),
        [i, j] if i == j => Ok((e(&[(*i, h)])? - 2.0 * e(&[])? + e(&[(*i, -h)])?) / (h * h)),
        [i, j] => Ok((e(&[(*i, h), (*j, h)])? - e(&[(*i, h), (*j, -h)])? - e(&[(*i, -h), (*j, h)])?
            + e(&[(*i, -h), (*j, -h)])?)
            / (4.0 * h * h)),
        _ => Err(Error::InvalidInput("finite differences cover orders 1 and 2".into())),
    }
}

/// `∂^γℰ_nφ` by the derivative factorization against Richardson-extrapolated
/// central differences, relative error, all `1 ≤ |γ| ≤ 2`.
pub fn derivative_factorization(phi: &PhiSpec, n: usize, nodes: usize, points: usize, tol: f64, seed: u64) -> Result<Outcome> {
    let d = domain(&DomainSpec::Disc { center: c(0.0, 0.0), radius: 1.0 })?;
    let s = samples(&d, phi, nodes)?;
    let mut rng = rng(seed);
    let zs: Vec<SymPoint> = (0..points)
        .map(|_| symmetrize(&ProductPoint(separated_points(&d, n, 0.4, 0.1, &mut rng))))
        .collect();
    let mut out = Outcome::default();
    let mut worst: f64 = 0.0;
    for order in 1..=2 {
        for gamma in MultiIndex::all_of_order(n, order) {
            let errs: Vec<f64> = zs
                .par_iter()
                .map(|z| {
                    let exact = derivative_symmetrized(&gamma, &s, z)?;
                    let h = 1e-3;
                    let fd = (4.0 * finite_difference(&s, &z.0, &gamma, h / 2.0)? - finite_difference(&s, &z.0, &gamma, h)?) / 3.0;
                    Ok((fd - exact).norm() / exact.norm())
                })
                .collect::<Result<_>>()?;
            let e = max_of(errs);
            out.insert(&format!("gamma {gamma}"), json!(e));
            worst = max_of([worst, e]);
        }
    }
    out.checks.push(Check::at_most(format!("derivative factorization [n={n}, {phi}]"), worst, tol));
    Ok(out)
}

/// Distinct root-location signatures among `samples` random points.
pub fn census(label: &str, spec: &DomainSpec, n: usize, samples: usize, seed: u64) -> Result<Outcome> {
    let d = domain(spec)?;
    let report = component_census(&d, n, samples, &mut rng(seed))?;
    let expected = expected_component_count(n, d.kappa());
    let mut out = Outcome::default();
    let mut table = Table::new(format!("components_{}", sanitize(label)), &["signature", "count"]);
    for (sig, count) in &report.counts {
        table.push(vec![format!("{:?}", sig.0), count.to_string()]);
    }
    out.insert("n", json!(n));
    out.insert("components_of_complement", json!(d.kappa()));
    out.insert("expected", json!(expected));
    out.insert("distinct", json!(report.counts.len()));
    out.insert("skipped", json!(report.skipped));
    out.insert(
        "signatures",
        Value::Array(report.counts.iter().map(|(s, k)| json!({ "signature": s.0, "count": k })).collect()),
    );
    out.checks.push(Check::within(
        format!("component census [{label}, n={n}]"),
        report.counts.len() as f64,
        expected as f64,
        0.0,
    ));
    out.tables.push(table);
    Ok(out)
}

/// `δ^Λ ≤ C|Δπ|` over several seeds; `C_max` must agree within `factor`.
pub fn lojasiewicz_stability(spec: &DomainSpec, n: usize, pairs: usize, seeds: &[u64], factor: f64) -> Result<Outcome> {
    let d = domain(spec)?;
    let reports = seeds
        .iter()
        .map(|&s| lojasiewicz_check(&d, n, pairs, &mut rng(s)))
        .collect::<Result<Vec<_>>>()?;
    let cs: Vec<f64> = reports.iter().map(|r| r.c_max).collect();
    let spread = cs.iter().cloned().fold(f64::MIN, f64::max) / cs.iter().cloned().fold(f64::MAX, f64::min);
    let violations: usize = reports.iter().map(|r| r.violations).sum();
    let mut out = Outcome::default();
    out.insert("n", json!(n));
    out.insert("lambda", json!(lambda_n(n)));
    out.insert(
        "runs",
        Value::Array(
            seeds
                .iter()
                .zip(&reports)
                .map(|(s, r)| {
                    json!({
                        "seed": s, "c_max": r.c_max, "violations": r.violations, "pairs_used": r.pairs_used,
                        "near_diagonal_pairs": r.near_diagonal_pairs, "exponent": r.exponent,
                    })
                })
                .collect(),
        ),
    );
    out.insert("c_max_spread", json!(spread));
    out.checks.push(Check::at_most(format!("lojasiewicz violations [n={n}]"), violations as f64, 0.0));
    out.checks.push(Check::at_most(format!("lojasiewicz C_max stability [n={n}]"), spread, factor));
    Ok(out)
}

/// Dyadic radii `2^{-3}, …, 2^{-8}` used by the blow-up fit.
pub fn pv_radii() -> Vec<f64> {
    (3..=8).map(|k| (-(k as f64)).exp2()).collect()
}

/// Truncated principal values at `χ`-fold diagonal points of the unit
/// circle; slopes must match `1 − χ` within `tolerances[χ − 2]`.
pub fn pv_experiment(phi: &PhiSpec, nodes: usize, base_points: usize, tolerances: &[(usize, f64)]) -> Result<Outcome> {
    let d = domain(&DomainSpec::Disc { center: c(0.0, 0.0), radius: 1.0 })?;
    let s = samples(&d, phi, nodes)?;
    let radii = pv_radii();
    let mut out = Outcome::default();
    let mut table = Table::new("pv", &["multiplicity", "rho", "rms_magnitude"]);
    for &(chi, tol) in tolerances {
        let fit = pv_blowup_fit(&s, chi, base_points, &radii)?;
        for (r, m) in fit.radii.iter().zip(&fit.magnitudes) {
            table.push(vec![chi.to_string(), num(*r), num(*m)]);
        }
        out.insert(
            &format!("chi {chi}"),
            json!({
                "slope": fit.slope, "expected_slope": fit.expected_slope, "intercept": fit.intercept,
                "base_points": fit.base_points, "magnitudes": fit.magnitudes,
            }),
        );
        out.checks.push(Check::within(format!("pv blow-up slope [chi={chi}]"), fit.slope, fit.expected_slope, tol));
    }
    out.insert("radii", json!(radii));
    out.tables.push(table);
    Ok(out)
}

fn fit_json(fit: &ExponentFit) -> Value {
    json!({
        "alpha_hat": fit.alpha_hat,
        "confidence_band": [fit.confidence_band.0, fit.confidence_band.1],
        "pairs_used": fit.pairs_used,
        "flagged": fit.flagged,
        "bin_edges": fit.bins.iter().map(|b| [b.lo, b.hi]).collect::<Vec<_>>(),
    })
}

fn bins_table(name: &str, fit: &ExponentFit) -> Table {
    let mut t = Table::new(name, &["bin_lo", "bin_hi", "pair_count", "max_diff"]);
    for b in &fit.bins {
        t.push(vec![num(b.lo), num(b.hi), b.pair_count.to_string(), num(b.max_diff)]);
    }
    t
}

/// Calibration fields with known exponents on equispaced grids: `W_{0.3}`
/// over one period, `|x|^{1/2}` and a linear function on `[−1, 1)`. The
/// grid on `[−1, 1)` has step `2/points` and contains the singular point 0.
pub fn calibration_fields(points: usize) -> Result<Vec<(f64, &'static str, SampledField)>> {
    let xs: Vec<f64> = (0..points).map(|k| -1.0 + 2.0 * k as f64 / points as f64).collect();
    let thetas: Vec<f64> = (0..points).map(|k| std::f64::consts::TAU * k as f64 / points as f64).collect();
    let real = |xs: &[f64], f: &dyn Fn(f64) -> f64, name: &str| {
        let meta = FieldMeta { transform: "calibration".into(), phi: name.into(), ..Default::default() };
        SampledField::from_real(xs, xs.iter().map(|&x| c(f(x), 0.0)).collect(), meta)
    };
    let w = |t: f64| weierstrass(0.3, CALIBRATION_WEIERSTRASS_TERMS, t);
    Ok(vec![
        (0.3, "weierstrass 0.3", real(&thetas, &w, "weierstrass 0.3")?),
        (0.5, "abs^0.5", real(&xs, &|x: f64| x.abs().sqrt(), "abs^0.5")?),
        (1.0, "linear", real(&xs, &|x| 2.0 * x + 1.0, "linear")?),
    ])
}

pub fn holder_calibration(points: usize, tol: f64) -> Result<Outcome> {
    let mut out = Outcome::default();
    for (alpha, name, field) in calibration_fields(points)? {
        let fit = estimate_exponent(&field)?;
        out.insert(name, fit_json(&fit));
        out.tables.push(bins_table(&format!("holder_bins_{}", sanitize(name)), &fit));
        out.checks.push(Check::within(format!("exponent calibration [{name}]"), fit.alpha_hat, alpha, tol));
    }
    Ok(out)
}

/// Exponent of `ℰ_nφ` on `π`-images of points of `Uⁿ` whose clearance keeps
/// the quadrature accurate; reported, not asserted.
pub fn symmetrized_field_exponent(spec: &DomainSpec, phi: &PhiSpec, n: usize, nodes: usize, points: usize, seed: u64) -> Result<Outcome> {
    let d = domain(spec)?;
    let s = samples(&d, phi, nodes)?;
    let clearance = 30.0 / nodes as f64 * d.diameter();
    let mut rng = rng(seed);
    let zs: Vec<Vec<C64>> = (0..points)
        .map(|_| symmetrize(&ProductPoint(separated_points(&d, n, clearance, 0.0, &mut rng))).0)
        .collect();
    let values: Vec<C64> = zs.par_iter().map(|z| symmetrized_transform(&s, &SymPoint(z.clone()))).collect::<Result<_>>()?;
    let meta = FieldMeta {
        transform: format!("E_{n}"),
        phi: phi.to_string(),
        domain: String::new(),
        n,
        nodes,
    };
    let fit = estimate_exponent(&SampledField::from_complex(&zs, values, meta)?)?;
    let mut out = Outcome::default();
    out.insert("clearance", json!(clearance));
    out.insert("fit", fit_json(&fit));
    out.tables.push(bins_table("holder_bins_symmetrized", &fit));
    Ok(out)
}

fn roots_image(f: &ProperMapKind, z: &SymPoint) -> Result<Vec<C64>> {
    Ok(desymmetrize(z)?.roots.iter().map(|&w| f.eval(w)).collect())
}

/// Route agreement, functoriality and the boundary exponent experiment.
pub fn propermap_experiment(
    kind: &ProperMapKind,
    n: usize,
    nodes: usize,
    samples: usize,
    tol_scale: f64,
    seed: u64,
) -> Result<Outcome> {
    let map = ProperMap::new(ProperMapSpec { map: kind.clone(), n }, nodes)?;
    let mut rng = rng(seed);
    let interior: Vec<SymPoint> = (0..100)
        .map(|_| symmetrize(&ProductPoint((0..n).map(|_| C64::from_polar(0.8 * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..std::f64::consts::TAU))).collect())))
        .collect();
    let route_err = max_of(
        interior
            .par_iter()
            .map(|z| {
                let a = map.evaluate(z, Route::Integral)?;
                let b = map.evaluate(z, Route::Roots)?;
                Ok(a.0.iter().zip(&b.0).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max))
            })
            .collect::<Result<Vec<_>>>()?,
    );

    let g = ProperMapKind::Blaschke(vec![c(0.3, 0.2)]);
    let inner = ProperMap::new(ProperMapSpec { map: g.clone(), n }, nodes)?;
    let functor_err = max_of(
        interior[..50]
            .iter()
            .map(|z| {
                let composed: Vec<C64> = roots_image(&g, z)?.into_iter().map(|w| kind.eval(w)).collect();
                let lhs = symmetrize(&ProductPoint(composed));
                let rhs = map.evaluate(&inner.evaluate(z, Route::Roots)?, Route::Roots)?;
                Ok(lhs.0.iter().zip(&rhs.0).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max))
            })
            .collect::<Result<Vec<_>>>()?,
    );

    let identity = ProperMap::new(ProperMapSpec { map: ProperMapKind::Identity, n }, nodes)?;
    let identity_err = max_of(
        interior
            .iter()
            .map(|z| Ok(identity.evaluate(z, Route::Roots)?.0.iter().zip(&z.0).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)))
            .collect::<Result<Vec<_>>>()?,
    );

    let report = boundary_regularity_experiment(&map, samples, &mut rng)?;
    let mut out = Outcome::default();
    out.insert("map", json!(kind.to_string()));
    out.insert("n", json!(n));
    out.insert("lambda", json!(report.lambda));
    out.insert("threshold", json!(report.threshold));
    out.insert("route_agreement", json!(route_err));
    out.insert("functoriality", json!(functor_err));
    out.insert("identity", json!(identity_err));
    out.insert("integral_evaluations", json!(report.integral_evaluations));
    out.insert("root_evaluations", json!(report.root_evaluations));
    out.insert("fits", Value::Array(report.fits.iter().map(fit_json).collect()));
    for (k, fit) in report.fits.iter().enumerate() {
        out.tables.push(bins_table(&format!("propermap_bins_{}", k + 1), fit));
    }
    out.checks.push(Check::at_most(format!("proper map route agreement [{kind}, n={n}]"), route_err, 1e-8 * tol_scale));
    out.checks.push(Check::at_most(format!("proper map functoriality [{kind}, n={n}]"), functor_err, 1e-7 * tol_scale));
    out.checks.push(Check::at_most(format!("proper map identity [n={n}]"), identity_err, 1e-9 * tol_scale));
    for (k, fit) in report.fits.iter().enumerate() {
        out.checks.push(Check::at_least(
            format!("boundary exponent [{kind}, n={n}, coordinate {}]", k + 1),
            fit.alpha_hat,
            report.threshold,
        ));
    }
    Ok(out)
}

/// `newton_map(p_1..p_n) = π(w)` relative to `max(1, |π(w)|_∞)`.
pub fn newton_consistency(max_n: usize, samples: usize, tol: f64, seed: u64) -> Result<Outcome> {
    let mut rng = rng(seed);
    let mut out = Outcome::default();
    let mut worst: f64 = 0.0;
    for n in 1..=max_n {
        let mut e_n: f64 = 0.0;
        for _ in 0..samples {
            let w: Vec<C64> = (0..n).map(|_| C64::from_polar(rng.gen::<f64>().sqrt(), rng.gen_range(0.0..std::f64::consts::TAU))).collect();
            let exact = symmetrize(&ProductPoint(w.clone()));
            let got = newton_map(&power_sums(&w, n));
            let scale = exact.0.iter().map(|v| v.norm()).fold(1.0, f64::max);
            let err = got.iter().zip(&exact.0).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max) / scale;
            e_n = max_of([e_n, err]);
        }
        out.insert(&format!("n {n}"), json!(e_n));
        worst = max_of([worst, e_n]);
    }
    out.checks.push(Check::at_most("newton / power-sum consistency", worst, tol));
    Ok(out)
}

/// `𝒯φ`, `ℬ_nφ` and `ℰ_nφ` at random interior points.
pub fn transform_table(spec: &DomainSpec, phi: &PhiSpec, n: usize, nodes: usize, points: usize, tol_scale: f64, seed: u64) -> Result<Outcome> {
    let d = domain(spec)?;
    let s = samples(&d, phi, nodes)?;
    let mut rng = rng(seed);
    let clearance = 0.1 * d.diameter();
    let ws: Vec<Vec<C64>> = (0..points).map(|_| separated_points(&d, n, clearance, 0.0, &mut rng)).collect();
    let rows: Vec<(C64, C64, C64)> = ws
        .par_iter()
        .map(|w| {
            let p = ProductPoint(w.clone());
            Ok((cauchy_transform(&s, w[0])?, norlund_transform(&s, &p)?, symmetrized_transform(&s, &symmetrize(&p))?))
        })
        .collect::<Result<_>>()?;
    let mut header: Vec<String> = (1..=n).flat_map(|j| [format!("w{j}_re"), format!("w{j}_im")]).collect();
    header.extend(
        ["cauchy_re", "cauchy_im", "norlund_re", "norlund_im", "symmetrized_re", "symmetrized_im"].map(String::from),
    );
    let mut table = Table { name: "transform".into(), header, rows: Vec::new() };
    let mut push_err: f64 = 0.0;
    let mut exact_err: Option<f64> = None;
    for (w, (t, b, e)) in ws.iter().zip(&rows) {
        let mut row: Vec<String> = w.iter().flat_map(|&z| cplx(z)).collect();
        row.extend(cplx(*t));
        row.extend(cplx(*b));
        row.extend(cplx(*e));
        table.push(row);
        push_err = max_of([push_err, (e - b).norm()]);
        if let Some(exact) = phi.holomorphic_extension(w[0]) {
            exact_err = Some(max_of([exact_err.unwrap_or(0.0), (t - exact).norm()]));
        }
    }
    let mut out = Outcome::default();
    out.insert("points", json!(points));
    out.insert("first", json!({ "w": w_json(&ws[0]), "cauchy": cplx_json(rows[0].0), "norlund": cplx_json(rows[0].1), "symmetrized": cplx_json(rows[0].2) }));
    out.insert("pushforward_residual", json!(push_err));
    out.checks.push(Check::at_most("push-forward", push_err, 1e-9 * tol_scale));
    if let Some(e) = exact_err {
        out.insert("cauchy_error", json!(e));
        out.checks.push(Check::at_most("cauchy reproduction", e, 1e-10 * tol_scale));
    }
    out.tables.push(table);
    Ok(out)
}

fn w_json(w: &[C64]) -> Value {
    Value::Array(w.iter().map(|&z| cplx_json(z)).collect())
}

fn sanitize(label: &str) -> String {
    label.chars().map(|ch| if ch.is_ascii_alphanumeric() { ch } else { '_' }).collect()
}

