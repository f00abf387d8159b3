//! Hölder seminorms and empirical Hölder exponents of sampled fields.

use alloc::{collections::BTreeMap, format, string::String, vec::Vec};
use core::cmp::Ordering;

// Inherent when std is linked, needed under no_std.
#[allow(unused_imports)]
use num_traits::Float;

use crate::{cauchy::MultiIndex, Error, Result, C64};

/// Pair-enumeration cap for [`holder_seminorm`].
pub const MAX_SEMINORM_POINTS: usize = 5000;
/// Bins with fewer pairs are dropped by [`estimate_exponent`].
pub const MIN_PAIRS_PER_BIN: usize = 5;
/// Fits outside `[0, MAX_PLAUSIBLE_ALPHA]` are flagged.
pub const MAX_PLAUSIBLE_ALPHA: f64 = 1.5;
/// Weierstrass terms for calibration fields. Truncation smooths the sum below
/// scale `2^-K`, which biases the fitted exponent upward unless `2^-K` sits
/// well under the grid step.
pub const CALIBRATION_WEIERSTRASS_TERMS: u32 = 24;

/// Provenance of a sampled field.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FieldMeta {
    pub transform: String,
    pub phi: String,
    pub domain: String,
    pub n: usize,
    pub nodes: usize,
}

/// Values at pairwise-distinct points of some `ℝ^d` (complex coordinates are
/// stored as consecutive real and imaginary parts).
#[derive(Debug, Clone, PartialEq)]
pub struct SampledField {
    dim: usize,
    coords: Vec<f64>,
    values: Vec<C64>,
    pub meta: FieldMeta,
}

impl SampledField {
    /// Field over real points, each `dim` reals long in `coords`.
    pub fn new(dim: usize, coords: Vec<f64>, values: Vec<C64>, meta: FieldMeta) -> Result<Self> {
        if dim == 0 || coords.len() != dim * values.len() {
            return Err(Error::InvalidInput(format!(
                "{} coordinates do not describe {} points of dimension {dim}",
                coords.len(),
                values.len()
            )));
        }
        let field = SampledField { dim, coords, values, meta };
        field.check_distinct()?;
        Ok(field)
    }

    pub fn from_real(xs: &[f64], values: Vec<C64>, meta: FieldMeta) -> Result<Self> {
        Self::new(1, xs.to_vec(), values, meta)
    }

    /// Field over points of `ℂⁿ`.
    pub fn from_complex(points: &[Vec<C64>], values: Vec<C64>, meta: FieldMeta) -> Result<Self> {
        let n = points.first().map_or(0, |p| p.len());
        if points.iter().any(|p| p.len() != n) {
            return Err(Error::InvalidInput("points of mixed arity".into()));
        }
        let coords = points.iter().flat_map(|p| p.iter().flat_map(|c| [c.re, c.im])).collect();
        Self::new(2 * n, coords, values, meta)
    }

    fn check_distinct(&self) -> Result<()> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| {
            self.point(a)
                .iter()
                .zip(self.point(b))
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal)
        });
        for pair in order.windows(2) {
            if self.point(pair[0]) == self.point(pair[1]) {
                return Err(Error::InvalidInput(format!("points {} and {} coincide", pair[0], pair[1])));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, k: usize) -> &[f64] {
        &self.coords[k * self.dim..(k + 1) * self.dim]
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn distance(&self, a: usize, b: usize) -> f64 {
        self.point(a)
            .iter()
            .zip(self.point(b))
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>()
            .sqrt()
    }

    /// Same points, values multiplied by `c`.
    pub fn scaled(&self, c: C64) -> Self {
        let mut out = self.clone();
        for v in &mut out.values {
            *v *= c;
        }
        out
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// Discrete `sup_{x≠y} |f(x) − f(y)| / |x − y|^α` over all point pairs.
pub fn holder_seminorm(field: &SampledField, alpha: f64) -> Result<f64> {
    if field.len() < 2 {
        return Err(Error::InvalidInput("seminorm needs at least two points".into()));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::InvalidInput(format!("Hölder exponent {alpha} outside (0, 1]")));
    }
    if field.len() > MAX_SEMINORM_POINTS {
        return Err(Error::TooManyPoints { count: field.len(), max: MAX_SEMINORM_POINTS });
    }
    let mut best: f64 = 0.0;
    for a in 0..field.len() {
        for b in a + 1..field.len() {
            let diff = (field.values[a] - field.values[b]).norm();
            best = best.max(diff / field.distance(a, b).powf(alpha));
        }
    }
    Ok(best)
}

/// Per-bin pair statistics: pairs with distance in `[lo, hi)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinStat {
    pub lo: f64,
    pub hi: f64,
    pub pair_count: usize,
    pub max_diff: f64,
    /// Distance of the pair attaining `max_diff`.
    pub argmax_distance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExponentFit {
    pub alpha_hat: f64,
    /// `alpha_hat ± 2·stderr` of the regression slope.
    pub confidence_band: (f64, f64),
    pub pairs_used: usize,
    /// Bins kept for the regression.
    pub bins: Vec<BinStat>,
    /// Set when `alpha_hat` falls outside `[0, 1.5]`.
    pub flagged: bool,
}

/// Regression of `log max|Δvalue|` on `log distance` over dyadic distance
/// bins `[2^k, 2^{k+1})`. Each bin contributes the point
/// `(log d*, log max|Δvalue|)` where `d*` is the distance of the maximizing
/// pair; a fixed bin midpoint biases sparsely filled end bins. Bins with
/// fewer than five pairs are dropped, and so is the bin cut off by the
/// extent of the point set, where differences saturate.
///
/// The per-bin maximum only sees a singularity the samples resolve, so
/// calibration grids should contain the singular points.
pub fn estimate_exponent(field: &SampledField) -> Result<ExponentFit> {
    if field.len() < 100 {
        return Err(Error::InsufficientPairs(format!("{} points, need at least 100", field.len())));
    }
    let mut bins: BTreeMap<i32, (usize, f64, f64)> = BTreeMap::new();
    let mut extent: f64 = 0.0;
    for a in 0..field.len() {
        for b in a + 1..field.len() {
            let d = field.distance(a, b);
            extent = extent.max(d);
            let key = d.log2().floor() as i32;
            let diff = (field.values[a] - field.values[b]).norm();
            let entry = bins.entry(key).or_insert((0, 0.0, d));
            entry.0 += 1;
            if diff > entry.1 {
                entry.1 = diff;
                entry.2 = d;
            }
        }
    }
    let kept: Vec<BinStat> = bins
        .into_iter()
        .filter(|(k, (count, max, _))| {
            *count >= MIN_PAIRS_PER_BIN && *max > 0.0 && (*k as f64 + 1.0).exp2() <= extent
        })
        .map(|(k, (pair_count, max_diff, argmax_distance))| BinStat {
            lo: (k as f64).exp2(),
            hi: (k as f64 + 1.0).exp2(),
            pair_count,
            max_diff,
            argmax_distance,
        })
        .collect();
    if kept.len() < 3 {
        return Err(Error::InsufficientPairs(format!("only {} usable distance bins", kept.len())));
    }
    let xs: Vec<f64> = kept.iter().map(|b| b.argmax_distance.ln()).collect();
    let ys: Vec<f64> = kept.iter().map(|b| b.max_diff.ln()).collect();
    let line = fit_line(&xs, &ys).ok_or_else(|| Error::InsufficientPairs("degenerate bins".into()))?;
    let pairs_used = kept.iter().map(|b| b.pair_count).sum();
    let alpha_hat = line.slope;
    Ok(ExponentFit {
        alpha_hat,
        confidence_band: (alpha_hat - 2.0 * line.slope_stderr, alpha_hat + 2.0 * line.slope_stderr),
        pairs_used,
        bins: kept,
        flagged: !(0.0..=MAX_PLAUSIBLE_ALPHA).contains(&alpha_hat),
    })
}

/// `Σ_{|γ|≤k} sup|∂^γΦ| + Σ_{|γ|=k} |∂^γΦ|_α` from derivative fields keyed by
/// multi-index. All multi-indices of order `≤ k` must be present.
pub fn ck_norm(fields: &[(MultiIndex, SampledField)], k: u32, alpha: f64) -> Result<f64> {
    let n = fields
        .first()
        .map(|(g, _)| g.arity())
        .ok_or_else(|| Error::MissingDerivativeField(format!("{}", MultiIndex(alloc::vec![0]))))?;
    let lookup = |g: &MultiIndex| fields.iter().find(|(h, _)| h == g).map(|(_, f)| f);
    let mut total = 0.0;
    for order in 0..=k {
        for gamma in MultiIndex::all_of_order(n, order) {
            let field = lookup(&gamma).ok_or_else(|| Error::MissingDerivativeField(format!("{gamma}")))?;
            total += field.sup_norm();
            if order == k {
                total += holder_seminorm(field, alpha)?;
            }
        }
    }
    Ok(total)
}

/// Least-squares line `y ≈ slope·x + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub slope_stderr: f64,
}

pub fn fit_line(xs: &[f64], ys: &[f64]) -> Option<LineFit> {
    let n = xs.len();
    if n < 2 || ys.len() != n {
        return None;
    }
    let nf = n as f64;
    let mx = xs.iter().sum::<f64>() / nf;
    let my = ys.iter().sum::<f64>() / nf;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if !(sxx > 0.0) {
        return None;
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let slope_stderr = if n > 2 {
        let ssr: f64 = xs.iter().zip(ys).map(|(x, y)| (y - intercept - slope * x).powi(2)).sum();
        (ssr / (nf - 2.0) / sxx).sqrt()
    } else {
        0.0
    };
    Some(LineFit { slope, intercept, slope_stderr })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use approx::assert_abs_diff_eq;

    fn real(xs: &[f64], f: impl Fn(f64) -> f64) -> SampledField {
        SampledField::from_real(xs, xs.iter().map(|&x| C64::new(f(x), 0.0)).collect(), FieldMeta::default()).unwrap()
    }

    #[test]
    fn seminorm_examples() {
        assert_eq!(holder_seminorm(&real(&[0.0, 0.3, 0.9], |_| 2.0), 0.5).unwrap(), 0.0);
        assert_abs_diff_eq!(holder_seminorm(&real(&[0.0, 1.0], |x| x), 1.0).unwrap(), 1.0);
        let sqrt = real(&[0.0, 0.25, 1.0], f64::sqrt);
        assert_abs_diff_eq!(holder_seminorm(&sqrt, 0.5).unwrap(), 1.0, epsilon = 1e-15);
        assert!(holder_seminorm(&sqrt, 0.0).is_err());
        assert!(holder_seminorm(&sqrt, 1.5).is_err());
        let xs: Vec<f64> = (0..5001).map(|k| k as f64).collect();
        assert!(matches!(holder_seminorm(&real(&xs, |x| x), 1.0), Err(Error::TooManyPoints { .. })));
    }

    #[test]
    fn duplicate_points_are_rejected() {
        let r = SampledField::from_real(&[0.0, 1.0, 0.0], vec![C64::new(1.0, 0.0); 3], FieldMeta::default());
        assert!(r.is_err());
        assert!(SampledField::from_real(&[0.0, 1.0], vec![C64::new(1.0, 0.0)], FieldMeta::default()).is_err());
    }

    #[test]
    fn linear_field_has_exponent_one() {
        let xs: Vec<f64> = (0..400).map(|k| -1.0 + 2.0 * k as f64 / 399.0).collect();
        let fit = estimate_exponent(&real(&xs, |x| 3.0 * x + 1.0)).unwrap();
        assert_abs_diff_eq!(fit.alpha_hat, 1.0, epsilon = 1e-2);
        assert!(!fit.flagged);
        assert!(fit.bins.iter().all(|b| b.pair_count >= MIN_PAIRS_PER_BIN));
        assert!(estimate_exponent(&real(&xs[..50], |x| x)).is_err());
    }

    #[test]
    fn calibration_examples() {
        let xs: Vec<f64> = (0..2000).map(|k| -1.0 + k as f64 / 1000.0).collect();
        let a = estimate_exponent(&real(&xs, |x| x.abs().sqrt())).unwrap().alpha_hat;
        assert!((0.45..=0.55).contains(&a), "{a}");
        let th: Vec<f64> = (0..2000).map(|k| core::f64::consts::TAU * k as f64 / 2000.0).collect();
        let w = estimate_exponent(&real(&th, |t| crate::cauchy::weierstrass(0.3, CALIBRATION_WEIERSTRASS_TERMS, t))).unwrap().alpha_hat;
        assert!((0.25..=0.38).contains(&w), "{w}");
    }

    #[test]
    fn ck_norm_examples() {
        let xs: Vec<f64> = (0..20).map(|k| k as f64 * 0.05).collect();
        let constant = real(&xs, |_| -3.0);
        let zero = real(&xs, |_| 0.0);
        assert_abs_diff_eq!(
            ck_norm(&[(MultiIndex(vec![0]), constant.clone())], 0, 0.5).unwrap(),
            3.0
        );
        let v = ck_norm(&[(MultiIndex(vec![0]), constant.clone()), (MultiIndex(vec![1]), zero)], 1, 0.5).unwrap();
        assert_abs_diff_eq!(v, 3.0);
        let missing = ck_norm(&[(MultiIndex(vec![0]), constant)], 1, 0.5);
        assert!(matches!(missing, Err(Error::MissingDerivativeField(_))));
    }

    #[test]
    fn ck_norm_of_identity_on_disc() {
        let pts: Vec<Vec<C64>> = (0..60).map(|k| vec![C64::from_polar(0.9 * (k as f64 / 60.0), 2.4 * k as f64)]).collect();
        let vals: Vec<C64> = pts.iter().map(|p| p[0]).collect();
        let sup = vals.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let f = SampledField::from_complex(&pts, vals, FieldMeta::default()).unwrap();
        let df = SampledField::from_complex(&pts, vec![C64::new(1.0, 0.0); 60], FieldMeta::default()).unwrap();
        let v = ck_norm(&[(MultiIndex(vec![0]), f), (MultiIndex(vec![1]), df)], 1, 0.5).unwrap();
        assert_abs_diff_eq!(v, sup + 1.0, epsilon = 1e-15);
    }

    #[test]
    fn fit_line_recovers_exact_line() {
        let xs = [0.0, 1.0, 2.0, 3.0];
        let ys: Vec<f64> = xs.iter().map(|x| 2.0 * x - 1.0).collect();
        let l = fit_line(&xs, &ys).unwrap();
        assert_abs_diff_eq!(l.slope, 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(l.intercept, -1.0, epsilon = 1e-14);
        assert!(l.slope_stderr < 1e-12);
        assert!(fit_line(&[1.0, 1.0], &[0.0, 1.0]).is_none());
    }
}
