//! Deterministic adaptive quadrature and bracketed root finding.
//!
//! This is the oracle layer: every closed-form integral in the crate is
//! re-derived here numerically and the two values are compared in tests and
//! in [`crate::checks`]. The integrands that actually occur are smooth on
//! `(0, Λ]` with at worst an integrable `1/k` that is already cancelled by
//! the `k²` measure, so a globally adaptive Gauss–Kronrod rule with no
//! endpoint transform is enough.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::{Error, Result};

/// Default relative tolerance; closed-form comparisons demand near-machine
/// agreement.
pub const DEFAULT_REL_TOL: f64 = 1e-10;
/// Default absolute tolerance, a floor for integrals that are legitimately
/// tiny (e.g. cutoffs Λ → 0).
pub const DEFAULT_ABS_TOL: f64 = 1e-14;

/// Hard cap on panel subdivisions before giving up. Every integrand in the
/// crate converges in well under fifty panels; hitting this means the caller
/// handed us something pathological.
const MAX_PANELS: usize = 512;

/// A finite integration (or root-bracketing) range `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "interval endpoints must be finite, got [{lo}, {hi}]"
            )));
        }
        if lo > hi {
            return Err(Error::InvalidArgument(format!(
                "interval endpoints out of order: [{lo}, {hi}]"
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    /// Estimated absolute error, from the Gauss/Kronrod difference summed
    /// over panels. An estimate, not a rigorous bound.
    pub abs_error_estimate: f64,
    /// Number of panels the range was split into (≥ 1).
    pub subdivisions: usize,
}

// 15-point Kronrod abscissae (positive half), with the embedded 7-point
// Gauss rule on the odd-indexed nodes. Standard QUADPACK values, kept at
// the published 33-digit precision.
#[allow(clippy::excessive_precision)]
const XGK15: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
#[allow(clippy::excessive_precision)]
const WG7: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];
#[allow(clippy::excessive_precision)]
const WGK15: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// One 15-point Kronrod evaluation on `[a, b]`, returning the Kronrod value
/// and a conservative error estimate scaled per QUADPACK's recipe.
fn qk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<(f64, f64)> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let eval = |x: f64| -> Result<f64> {
        let v = f(x);
        if v.is_nan() {
            Err(Error::NanIntegrand { abscissa: x })
        } else {
            Ok(v)
        }
    };

    let f_center = eval(center)?;
    let mut res_gauss = f_center * WG7[3];
    let mut res_kronrod = f_center * WGK15[7];
    let mut res_abs = res_kronrod.abs();

    let mut fv = [0.0f64; 14];
    for j in 0..7 {
        let x = half * XGK15[j];
        let f1 = eval(center - x)?;
        let f2 = eval(center + x)?;
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        let fsum = f1 + f2;
        res_kronrod += WGK15[j] * fsum;
        res_abs += WGK15[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_gauss += WG7[j / 2] * fsum;
        }
    }

    let mean = res_kronrod * 0.5;
    let mut res_asc = WGK15[7] * (f_center - mean).abs();
    for j in 0..7 {
        res_asc += WGK15[j] * ((fv[2 * j] - mean).abs() + (fv[2 * j + 1] - mean).abs());
    }

    let value = res_kronrod * half;
    res_abs *= half.abs();
    res_asc *= half.abs();

    let mut err = ((res_kronrod - res_gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }

    Ok((value, err))
}

/// A panel in the global refinement queue, ordered by error estimate so the
/// worst panel is split first. `seq` breaks ties deterministically.
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
    seq: u64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err && self.seq == other.seq
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        // err values are finite by construction; compare seq in reverse so
        // that among equal errors the older panel is split first.
        self.err
            .partial_cmp(&other.err)
            .unwrap_or(Ordering::Equal)
            .then(other.seq.cmp(&self.seq))
    }
}

/// Globally adaptive integration of `f` over `range`.
///
/// Splits the worst panel until the summed error estimate drops below
/// `max(abs_tol, rel_tol·|value|)`. Deterministic: identical inputs take an
/// identical subdivision path.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    range: Interval,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<QuadResult> {
    if rel_tol.is_nan() || rel_tol <= 0.0 || abs_tol.is_nan() || abs_tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerances must be positive, got rel_tol = {rel_tol}, abs_tol = {abs_tol}"
        )));
    }
    if range.width() == 0.0 {
        return Ok(QuadResult {
            value: 0.0,
            abs_error_estimate: 0.0,
            subdivisions: 1,
        });
    }

    let (value, err) = qk15(&f, range.lo, range.hi)?;
    let mut heap = BinaryHeap::new();
    heap.push(Panel {
        a: range.lo,
        b: range.hi,
        value,
        err,
        seq: 0,
    });
    let mut seq = 1u64;
    let mut total_value = value;
    let mut total_err = err;

    loop {
        if total_err <= abs_tol.max(rel_tol * total_value.abs()) {
            let n = heap.len();
            return Ok(QuadResult {
                value: total_value,
                abs_error_estimate: total_err,
                subdivisions: n,
            });
        }
        if heap.len() >= MAX_PANELS {
            return Err(Error::QuadratureStalled {
                value: total_value,
                abs_error_estimate: total_err,
                subdivisions: heap.len(),
            });
        }

        let worst = heap.pop().expect("heap holds at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Panel narrower than machine spacing: cannot refine further.
            return Err(Error::QuadratureStalled {
                value: total_value,
                abs_error_estimate: total_err,
                subdivisions: heap.len() + 1,
            });
        }
        let (v1, e1) = qk15(&f, worst.a, mid)?;
        let (v2, e2) = qk15(&f, mid, worst.b)?;
        total_value += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.err;
        heap.push(Panel {
            a: worst.a,
            b: mid,
            value: v1,
            err: e1,
            seq,
        });
        heap.push(Panel {
            a: mid,
            b: worst.b,
            value: v2,
            err: e2,
            seq: seq + 1,
        });
        seq += 2;
    }
}

/// [`integrate`] with the crate-default tolerances.
pub fn integrate_default<F: Fn(f64) -> f64>(f: F, range: Interval) -> Result<QuadResult> {
    integrate(f, range, DEFAULT_REL_TOL, DEFAULT_ABS_TOL)
}

/// Non-adaptive composite Kronrod rule: `panels` equal panels over `[a, b]`,
/// no error estimate. Used for bounded trigonometric integrands (angular
/// integrals) where a fixed deterministic grid is simpler than adaptivity.
pub(crate) fn composite_qk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut sum = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let hi = lo + h;
        let center = 0.5 * (lo + hi);
        let half = 0.5 * (hi - lo);
        let mut acc = f(center) * WGK15[7];
        for j in 0..7 {
            let x = half * XGK15[j];
            acc += WGK15[j] * (f(center - x) + f(center + x));
        }
        sum += acc * half;
    }
    sum
}

/// Brent's method on a sign-changing bracket. Returns a root `x` with the
/// terminal bracket width below `tol` (plus machine slack `~4ε|x|`).
/// Deterministic for identical inputs.
pub fn find_root<G: Fn(f64) -> f64>(g: G, bracket: Interval, tol: f64) -> Result<f64> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "root tolerance must be positive, got {tol}"
        )));
    }
    let (mut a, mut b) = (bracket.lo, bracket.hi);
    let (mut fa, mut fb) = (g(a), g(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NotBracketed {
            lo: a,
            hi: b,
            g_lo: fa,
            g_hi: fb,
        });
    }

    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;

    for _ in 0..200 {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // Inverse quadratic interpolation, falling back to secant.
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            if 2.0 * p < (3.0 * xm * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = g(b);
    }
    // 200 Brent iterations halve the bracket at worst; for finite f64
    // brackets this is unreachable before the width test fires.
    Ok(b)
}
