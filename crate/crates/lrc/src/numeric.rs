//! Shared numeric primitives: stable special-function helpers, adaptive
//! quadrature, and bracketed root finding.
//!
//! Everything here is deterministic pure math used by the model, the weight
//! combinatorics, and the asymptotic analysis. Quadrature and root finders
//! target absolute accuracy around 1e-12, which is what the closed-form
//! cross-checks in the test suite assume.

/// ln(1 + e^x) without overflow for large |x|.
#[inline]
pub fn softplus(x: f64) -> f64 {
    if x > 0.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// Logistic sigmoid 1/(1 + e^{-x}), stable at both tails.
#[inline]
pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// ln cosh(x) without overflow.
#[inline]
pub fn ln_cosh(x: f64) -> f64 {
    let a = x.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

/// log(sum(exp(v))) over a slice, tolerating -inf entries.
pub fn log_sum_exp(values: &[f64]) -> f64 {
    let m = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !m.is_finite() {
        return m;
    }
    let s: f64 = values.iter().map(|&v| (v - m).exp()).sum();
    m + s.ln()
}

/// Binary entropy h(t) = -t ln t - (1-t) ln(1-t) in nats, with h(0)=h(1)=0.
#[inline]
pub fn binary_entropy(t: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&t));
    let mut h = 0.0;
    if t > 0.0 {
        h -= t * t.ln();
    }
    if t < 1.0 {
        h -= (1.0 - t) * (1.0 - t).ln();
    }
    h
}

const PI2_6: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;

/// Real part of the dilogarithm `Li2(x)` for any real `x` (equals `Li2(x)`
/// itself for `x <= 1`). Series on `|x| <= 1/2`, classical reflection and
/// inversion identities elsewhere; absolute accuracy ~1e-15.
pub fn li2_real(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x == 0.0 {
        return 0.0;
    }
    if x == 1.0 {
        return PI2_6;
    }
    if x < -1.0 {
        // Inversion: Li2(x) = -pi^2/6 - ln^2(-x)/2 - Li2(1/x). The reciprocal
        // may land in (-1, -1/2), so dispatch rather than call the series.
        let l = (-x).ln();
        return -PI2_6 - 0.5 * l * l - li2_real(1.0 / x);
    }
    if x < -0.5 {
        // Landen: Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2; x/(x-1) in (1/3, 1/2].
        let l = (1.0 - x).ln();
        return -li2_series(x / (x - 1.0)) - 0.5 * l * l;
    }
    if x <= 0.5 {
        return li2_series(x);
    }
    if x < 1.0 {
        // Reflection: Li2(x) = pi^2/6 - ln(x) ln(1-x) - Li2(1-x).
        return PI2_6 - x.ln() * (1.0 - x).ln() - li2_series(1.0 - x);
    }
    if x <= 2.0 {
        // Continuation, real part: Li2(x) = pi^2/6 - ln(x) ln(x-1) - Li2(1-x).
        return PI2_6 - x.ln() * (x - 1.0).ln() - li2_real(1.0 - x);
    }
    // x > 2, real part: Li2(x) = pi^2/3 - ln^2(x)/2 - Li2(1/x).
    2.0 * PI2_6 - 0.5 * x.ln() * x.ln() - li2_series(1.0 / x)
}

/// `Li2(-e^z)` for any real `z`, without forming `e^z` (stable for z well
/// past the overflow threshold). Uses the inversion identity
/// `Li2(-e^z) = -pi^2/6 - z^2/2 - Li2(-e^{-z})` for positive `z`.
pub fn li2_neg_exp(z: f64) -> f64 {
    if z <= 0.0 {
        li2_real(-z.exp())
    } else {
        -PI2_6 - 0.5 * z * z - li2_real(-(-z).exp())
    }
}

fn li2_series(x: f64) -> f64 {
    debug_assert!(x.abs() <= 0.5 + 1e-9, "series called with |x| = {x}");
    let mut term = x;
    let mut sum = x;
    let mut k = 1.0f64;
    while k < 200.0 {
        k += 1.0;
        term *= x;
        let add = term / (k * k);
        sum += add;
        if add.abs() <= f64::EPSILON * sum.abs() {
            break;
        }
    }
    sum
}

/// Adaptive Simpson quadrature of `f` on [a, b] to absolute tolerance `tol`.
///
/// The integrands in this crate are smooth, so plain Simpson refinement with
/// the standard 1/15 Richardson error estimate converges quickly. Recursion
/// depth is capped; on pathological input the best available estimate is
/// returned rather than looping forever.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fb, fm, whole, tol, 60)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fb: f64,
    fm: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, fm, flm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, fb, frm, right, 0.5 * tol, depth - 1)
}

/// Bisection for a root of `f` on [lo, hi]; requires a sign change.
///
/// Runs to interval width `tol` (or machine resolution) and returns the
/// midpoint. Panics in debug builds if the bracket is invalid.
pub fn bisect<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = f(lo);
    let fhi = f(hi);
    debug_assert!(
        flo == 0.0 || fhi == 0.0 || (flo < 0.0) != (fhi < 0.0),
        "bisect: no sign change on [{lo}, {hi}] ({flo}, {fhi})"
    );
    if flo == 0.0 {
        return lo;
    }
    if fhi == 0.0 {
        return hi;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi || (hi - lo).abs() <= tol {
            break;
        }
        let fmid = f(mid);
        if fmid == 0.0 {
            return mid;
        }
        if (fmid < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Golden-section search for the maximum of a unimodal `f` on [lo, hi].
///
/// Returns the abscissa of the maximum once the bracket shrinks below `tol`.
pub fn golden_section_max<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
        if hi - lo < 1e-300 {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Expands `hi` geometrically away from `lo` until `f` changes sign, then
/// bisects. `f(lo)` and `f(hi)` must eventually bracket; panics (debug) if
/// not found within the expansion budget.
pub fn bisect_expanding<F: Fn(f64) -> f64>(f: &F, lo: f64, hi0: f64, step0: f64, tol: f64) -> f64 {
    let flo = f(lo);
    let mut hi = hi0;
    let mut step = step0;
    for _ in 0..200 {
        let fhi = f(hi);
        if fhi == 0.0 {
            return hi;
        }
        if (fhi < 0.0) != (flo < 0.0) {
            return bisect(f, lo, hi, tol);
        }
        hi += step;
        step *= 2.0;
    }
    debug_assert!(false, "bisect_expanding: no bracket found");
    hi
}
