// Copyright 2026 qresonance Contributors
// SPDX-License-Identifier: Apache-2.0

//! Parametric sweeps of the two-Pauli channel over the flipping rate `x` and
//! the search for noise enhancement along the resulting `(N, C)`, `(N, F)`
//! curves.
//!
//! A figure of merit `Q` is noise-enhanced wherever `dQ/dN > 0` along the
//! curve. Both `Q` and `N` are smooth in `x`, so the parametric slope is
//! formed as `(dQ/dx) / (dN/dx)` from finite differences on the uniform
//! x-grid. Where `dN/dx` is too small the slope is left undefined.

use rayon::prelude::*;

use crate::channel::{BlochVector, ChannelMetrics};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::two_pauli::{two_pauli_metrics, TwoPauliParams};

/// `|dN/dx|` below this leaves `dQ/dN` undefined (bits per unit x).
pub const DEFAULT_SLOPE_EPSILON: f64 = 1e-6;
/// `|dQ/dx|` at or below this counts as flat, never as an increase.
pub const QUANTITY_SLOPE_EPSILON: f64 = 1e-9;
/// Shortest run of qualifying samples reported as a segment.
pub const MIN_SEGMENT_SAMPLES: usize = 2;
/// Difference in `Q` between branches at equal `N` that counts as multivalued.
pub const MULTIVALUED_TOL: f64 = 1e-9;

pub const FIGURE_X_MIN: f64 = 0.0;
pub const FIGURE_X_MAX: f64 = 0.7;
pub const DEFAULT_STEPS: usize = 701;

/// The four input states of the reference parametric plots, labelled a-d.
pub const FIGURE1_STATES: [(&str, [f64; 3]); 4] = [
    ("a", [0.1, 0.2, 0.9]),
    ("b", [0.3, 0.4, 0.2]),
    ("c", [0.6, 0.3, 0.5]),
    ("d", [0.1, 0.2, 0.3]),
];

/// Figure of merit tracked against the noise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    /// Coherent information `C`.
    Capacity,
    /// Entangled fidelity `F`.
    Fidelity,
}

impl Quantity {
    pub fn of<T: Copy>(self, m: &ChannelMetrics<T>) -> T {
        match self {
            Quantity::Capacity => m.coherent_info,
            Quantity::Fidelity => m.fidelity,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Quantity::Capacity => "capacity",
            Quantity::Fidelity => "fidelity",
        }
    }
}

/// Samples of one input state on a uniform, strictly increasing x-grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepCurve<T> {
    pub state: BlochVector<T>,
    pub samples: Vec<ChannelMetrics<T>>,
    pub x_min: T,
    pub x_max: T,
    pub step: T,
}

impl<T: Real> SweepCurve<T> {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn xs(&self) -> Vec<T> {
        self.samples
            .iter()
            .map(|m| m.x.expect("swept samples carry x"))
            .collect()
    }

    pub fn noise(&self) -> Vec<T> {
        self.samples.iter().map(|m| m.noise).collect()
    }

    pub fn values(&self, q: Quantity) -> Vec<T> {
        self.samples.iter().map(|m| q.of(m)).collect()
    }

    /// Samples `start..=end` as a new curve; used to cut monotone pieces.
    pub fn slice(&self, start: usize, end: usize) -> Result<Self> {
        if end >= self.len() || end < start + 2 {
            return Err(Error::TooFewPoints {
                got: end.saturating_sub(start) + 1,
                min: 3,
            });
        }
        let samples = self.samples[start..=end].to_vec();
        Ok(Self {
            state: self.state,
            x_min: samples[0].x.expect("swept"),
            x_max: samples[samples.len() - 1].x.expect("swept"),
            samples,
            step: self.step,
        })
    }
}

/// Evaluates the two-Pauli metrics at `steps` uniformly spaced x-values
/// covering `[x_min, x_max]` inclusive.
pub fn sweep<T: Real>(a: &BlochVector<T>, x_min: T, x_max: T, steps: usize) -> Result<SweepCurve<T>> {
    if !(x_min >= T::zero() && x_min < x_max && x_max <= T::one()) {
        return Err(Error::InvalidRange {
            x_min: x_min.as_f64(),
            x_max: x_max.as_f64(),
        });
    }
    if steps < 3 {
        return Err(Error::TooFewPoints { got: steps, min: 3 });
    }
    let span = x_max - x_min;
    let last = T::from_usize(steps - 1).expect("step count fits the scalar");
    let step = span / last;
    let samples = (0..steps)
        .into_par_iter()
        .map(|i| {
            let x = if i == steps - 1 {
                x_max
            } else {
                x_min + span * T::from_usize(i).expect("index fits the scalar") / last
            };
            two_pauli_metrics(a, TwoPauliParams::new(x)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepCurve {
        state: *a,
        samples,
        x_min,
        x_max,
        step,
    })
}

/// Central differences inside, first-order one-sided differences at the ends.
pub fn finite_difference<T: Real>(values: &[T], step: T) -> Vec<T> {
    let n = values.len();
    let two = T::lit(2.0);
    (0..n)
        .map(|i| match i {
            0 => (values[1] - values[0]) / step,
            i if i == n - 1 => (values[n - 1] - values[n - 2]) / step,
            i => (values[i + 1] - values[i - 1]) / (two * step),
        })
        .collect()
}

/// x-derivatives of every tracked quantity from a single differentiation pass.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveDerivatives<T> {
    pub dn_dx: Vec<T>,
    pub dc_dx: Vec<T>,
    pub df_dx: Vec<T>,
}

impl<T: Real> CurveDerivatives<T> {
    pub fn of(curve: &SweepCurve<T>) -> Self {
        Self {
            dn_dx: finite_difference(&curve.noise(), curve.step),
            dc_dx: finite_difference(&curve.values(Quantity::Capacity), curve.step),
            df_dx: finite_difference(&curve.values(Quantity::Fidelity), curve.step),
        }
    }

    pub fn quantity(&self, q: Quantity) -> &[T] {
        match q {
            Quantity::Capacity => &self.dc_dx,
            Quantity::Fidelity => &self.df_dx,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SlopeSample<T> {
    pub x: T,
    pub dn_dx: T,
    pub dq_dx: T,
    /// `None` where `|dN/dx| <= slope_epsilon`.
    pub dq_dn: Option<T>,
}

impl<T: Real> SlopeSample<T> {
    /// Whether this sample shows `Q` rising with `N`.
    pub fn is_enhancing(&self) -> bool {
        self.dq_dx.abs() > T::lit(QUANTITY_SLOPE_EPSILON) && self.dq_dn.is_some_and(|s| s > T::zero())
    }
}

fn slopes_from<T: Real>(
    curve: &SweepCurve<T>,
    derivs: &CurveDerivatives<T>,
    q: Quantity,
    slope_epsilon: T,
) -> Vec<SlopeSample<T>> {
    curve
        .xs()
        .into_iter()
        .zip(derivs.dn_dx.iter().zip(derivs.quantity(q)))
        .map(|(x, (&dn_dx, &dq_dx))| SlopeSample {
            x,
            dn_dx,
            dq_dx,
            dq_dn: (dn_dx.abs() > slope_epsilon).then(|| dq_dx / dn_dx),
        })
        .collect()
}

/// Parametric slopes `dQ/dN` along the curve.
pub fn estimate_slopes<T: Real>(curve: &SweepCurve<T>, q: Quantity, slope_epsilon: T) -> Vec<SlopeSample<T>> {
    slopes_from(curve, &CurveDerivatives::of(curve), q, slope_epsilon)
}

/// A maximal run of samples where `dQ/dN > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnhancementSegment<T> {
    pub x_start: T,
    pub x_end: T,
    pub max_slope: T,
    /// Sample indices `start..=end` on the originating curve.
    pub start: usize,
    pub end: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnhancementReport<T> {
    pub quantity: Quantity,
    pub segments: Vec<EnhancementSegment<T>>,
    /// x of the largest noise, when it lies strictly inside the sweep.
    pub noise_peak_x: Option<T>,
    /// Noise intervals over which `Q` takes several distinct values.
    pub multivalued_noise_intervals: Vec<(T, T)>,
}

impl<T> EnhancementReport<T> {
    pub fn is_enhanced(&self) -> bool {
        !self.segments.is_empty()
    }
}

/// Runs of at least [`MIN_SEGMENT_SAMPLES`] consecutive enhancing samples.
pub fn enhancement_segments<T: Real>(slopes: &[SlopeSample<T>]) -> Vec<EnhancementSegment<T>> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < slopes.len() {
        if !slopes[i].is_enhancing() {
            i += 1;
            continue;
        }
        let start = i;
        while i < slopes.len() && slopes[i].is_enhancing() {
            i += 1;
        }
        let end = i - 1;
        if end + 1 - start >= MIN_SEGMENT_SAMPLES {
            let max_slope = slopes[start..=end]
                .iter()
                .filter_map(|s| s.dq_dn)
                .fold(T::neg_infinity(), T::max);
            out.push(EnhancementSegment {
                x_start: slopes[start].x,
                x_end: slopes[end].x,
                max_slope,
                start,
                end,
            });
        }
    }
    out
}

/// x at the noise maximum if it is attained at an interior grid point.
pub fn noise_peak_x<T: Real>(curve: &SweepCurve<T>) -> Option<T> {
    let noise = curve.noise();
    let (idx, _) = noise.iter().enumerate().fold(
        (0, T::neg_infinity()),
        |(bi, bv), (i, &v)| if v > bv { (i, v) } else { (bi, bv) },
    );
    (idx > 0 && idx + 1 < noise.len()).then(|| curve.samples[idx].x.expect("swept"))
}

/// Tuning knobs for the enhancement search.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalysisConfig<T> {
    pub slope_epsilon: T,
}

impl<T: Real> Default for AnalysisConfig<T> {
    fn default() -> Self {
        Self {
            slope_epsilon: T::lit(DEFAULT_SLOPE_EPSILON),
        }
    }
}

/// Reports for both quantities built on one set of derivatives.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveAnalysis<T> {
    pub derivatives: CurveDerivatives<T>,
    pub capacity: EnhancementReport<T>,
    pub fidelity: EnhancementReport<T>,
}

impl<T> CurveAnalysis<T> {
    pub fn report(&self, q: Quantity) -> &EnhancementReport<T> {
        match q {
            Quantity::Capacity => &self.capacity,
            Quantity::Fidelity => &self.fidelity,
        }
    }
}

pub fn analyze<T: Real>(curve: &SweepCurve<T>, cfg: AnalysisConfig<T>) -> CurveAnalysis<T> {
    let derivatives = CurveDerivatives::of(curve);
    let branches = noise_branches(curve);
    let peak = noise_peak_x(curve);
    let report = |q| {
        let slopes = slopes_from(curve, &derivatives, q, cfg.slope_epsilon);
        EnhancementReport {
            quantity: q,
            segments: enhancement_segments(&slopes),
            noise_peak_x: peak,
            multivalued_noise_intervals: multivalued_over(curve, &branches, q),
        }
    };
    let capacity = report(Quantity::Capacity);
    let fidelity = report(Quantity::Fidelity);
    CurveAnalysis {
        derivatives,
        capacity,
        fidelity,
    }
}

/// Noise-enhancement report for `q` with the default slope gate.
pub fn detect_enhancement<T: Real>(curve: &SweepCurve<T>, q: Quantity) -> EnhancementReport<T> {
    let cfg = AnalysisConfig::default();
    let analysis = analyze(curve, cfg);
    match q {
        Quantity::Capacity => analysis.capacity,
        Quantity::Fidelity => analysis.fidelity,
    }
}

/// A maximal piece of the curve on which `N` is monotone.
///
/// Consecutive branches share their turning sample, which is owned by the
/// earlier branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Branch {
    pub start: usize,
    pub end: usize,
    pub increasing: bool,
}

impl Branch {
    /// Sample indices owned by this branch; branches partition the curve.
    pub fn owned(&self, first: bool) -> std::ops::RangeInclusive<usize> {
        if first {
            self.start..=self.end
        } else {
            self.start + 1..=self.end
        }
    }
}

/// Splits the curve where the sign of `dN/dx` changes.
pub fn noise_branches<T: Real>(curve: &SweepCurve<T>) -> Vec<Branch> {
    let noise = curve.noise();
    let n = noise.len();
    if n < 2 {
        return Vec::new();
    }
    // Sign of each forward difference; exact ties inherit their neighbour.
    let mut signs: Vec<i8> = noise
        .windows(2)
        .map(|w| match w[1].partial_cmp(&w[0]) {
            Some(std::cmp::Ordering::Greater) => 1,
            Some(std::cmp::Ordering::Less) => -1,
            _ => 0,
        })
        .collect();
    let first_nonzero = signs.iter().copied().find(|&s| s != 0).unwrap_or(1);
    let mut prev = first_nonzero;
    for s in signs.iter_mut() {
        if *s == 0 {
            *s = prev;
        }
        prev = *s;
    }

    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..signs.len() {
        if signs[i] != signs[i - 1] {
            out.push(Branch {
                start,
                end: i,
                increasing: signs[i - 1] > 0,
            });
            start = i;
        }
    }
    out.push(Branch {
        start,
        end: n - 1,
        increasing: signs[signs.len() - 1] > 0,
    });
    out
}

/// Linear interpolation of `q` at noise level `level` on a monotone branch.
fn interpolate_on_branch<T: Real>(noise: &[T], q: &[T], b: &Branch, level: T) -> T {
    let idx: Vec<usize> = if b.increasing {
        (b.start..=b.end).collect()
    } else {
        (b.start..=b.end).rev().collect()
    };
    // idx now visits noise in non-decreasing order
    let pos = idx.partition_point(|&i| noise[i] < level);
    if pos == 0 {
        return q[idx[0]];
    }
    if pos == idx.len() {
        return q[idx[idx.len() - 1]];
    }
    let (i0, i1) = (idx[pos - 1], idx[pos]);
    let (n0, n1) = (noise[i0], noise[i1]);
    if n1 == n0 {
        return q[i1];
    }
    let t = (level - n0) / (n1 - n0);
    q[i0] + (q[i1] - q[i0]) * t
}

fn multivalued_over<T: Real>(curve: &SweepCurve<T>, branches: &[Branch], quantity: Quantity) -> Vec<(T, T)> {
    let noise = curve.noise();
    let q = curve.values(quantity);
    let tol = T::lit(MULTIVALUED_TOL);
    let range = |b: &Branch| {
        let (a, z) = (noise[b.start], noise[b.end]);
        (a.min(z), a.max(z))
    };
    let mut found = Vec::new();
    for (i, bi) in branches.iter().enumerate() {
        for bj in &branches[i + 1..] {
            let ((lo_i, hi_i), (lo_j, hi_j)) = (range(bi), range(bj));
            let (lo, hi) = (lo_i.max(lo_j), hi_i.min(hi_j));
            if hi <= lo {
                continue;
            }
            let probes = (bi.start..=bi.end)
                .chain(bj.start..=bj.end)
                .map(|k| noise[k])
                .filter(|&v| v >= lo && v <= hi)
                .chain([lo, hi]);
            let differs = probes.into_iter().any(|level| {
                (interpolate_on_branch(&noise, &q, bi, level) - interpolate_on_branch(&noise, &q, bj, level)).abs()
                    > tol
            });
            if differs {
                found.push((lo, hi));
            }
        }
    }
    merge_intervals(found)
}

fn merge_intervals<T: Real>(mut intervals: Vec<(T, T)>) -> Vec<(T, T)> {
    intervals.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite noise"));
    let mut out: Vec<(T, T)> = Vec::new();
    for (lo, hi) in intervals {
        match out.last_mut() {
            Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
            _ => out.push((lo, hi)),
        }
    }
    out
}

/// Noise intervals on which the coherent information is multivalued.
pub fn detect_multivalued<T: Real>(curve: &SweepCurve<T>) -> Vec<(T, T)> {
    multivalued_over(curve, &noise_branches(curve), Quantity::Capacity)
}

/// Uniform `resolution^3` grid over `[-1, 1]^3`, clipped to the Bloch ball.
pub fn bloch_grid<T: Real>(resolution: usize) -> Result<Vec<BlochVector<T>>> {
    if resolution < 2 {
        return Err(Error::TooFewPoints {
            got: resolution,
            min: 2,
        });
    }
    let coord = |i: usize| -1.0 + 2.0 * i as f64 / (resolution - 1) as f64;
    let mut out = Vec::new();
    for i in 0..resolution {
        for j in 0..resolution {
            for k in 0..resolution {
                if let Ok(v) = BlochVector::new(T::lit(coord(i)), T::lit(coord(j)), T::lit(coord(k))) {
                    out.push(v);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanEntry<T> {
    pub state: BlochVector<T>,
    pub capacity_enhanced: bool,
    pub fidelity_enhanced: bool,
    pub noise_peak_x: Option<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanReport<T> {
    pub entries: Vec<ScanEntry<T>>,
}

impl<T> ScanReport<T> {
    pub fn states(&self) -> usize {
        self.entries.len()
    }

    pub fn capacity_count(&self) -> usize {
        self.entries.iter().filter(|e| e.capacity_enhanced).count()
    }

    pub fn fidelity_count(&self) -> usize {
        self.entries.iter().filter(|e| e.fidelity_enhanced).count()
    }
}

/// Enhancement search over a clipped Bloch grid on the default x-range.
pub fn state_scan<T: Real>(grid_resolution: usize, x_steps: usize) -> Result<ScanReport<T>> {
    state_scan_over(grid_resolution, T::lit(FIGURE_X_MIN), T::lit(FIGURE_X_MAX), x_steps)
}

/// Grid states are evaluated in parallel and collected in grid order.
pub fn state_scan_over<T: Real>(grid_resolution: usize, x_min: T, x_max: T, x_steps: usize) -> Result<ScanReport<T>> {
    let grid = bloch_grid(grid_resolution)?;
    let entries = grid
        .par_iter()
        .map(|a| {
            let curve = sweep(a, x_min, x_max, x_steps)?;
            let analysis = analyze(&curve, AnalysisConfig::default());
            Ok(ScanEntry {
                state: *a,
                capacity_enhanced: analysis.capacity.is_enhanced(),
                fidelity_enhanced: analysis.fidelity.is_enhanced(),
                noise_peak_x: analysis.capacity.noise_peak_x,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanReport { entries })
}
