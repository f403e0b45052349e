//! Bracketing root and extremum search on one-dimensional curves.

use crate::error::Result;

/// Bisection for a sign change of `f` on `[lo, hi]`.
///
/// `f_lo` and `f_hi` are the known endpoint values; they must not share a
/// strict sign. The ends may be given in either order. Stops when the
/// bracket can no longer be halved in floating point or `f` vanishes
/// exactly, returning the point of smaller `|f|`.
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, mut f_lo: f64, mut f_hi: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    debug_assert!(f_lo.signum() != f_hi.signum(), "bracket without sign change");
    if lo > hi {
        std::mem::swap(&mut lo, &mut hi);
        std::mem::swap(&mut f_lo, &mut f_hi);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    Ok(if f_lo.abs() <= f_hi.abs() { lo } else { hi })
}

/// Golden-section search for the maximum of a unimodal `f` on `[a, b]`.
/// Returns `(argmax, max)`.
pub fn golden_max<F>(mut f: F, mut a: f64, mut b: f64, tol: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    while (b - a).abs() > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
        }
        if c <= a || d >= b || c >= d {
            break;
        }
    }
    Ok(if fc >= fd { (c, fc) } else { (d, fd) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt2() {
        let f = |x: f64| Ok(x * x - 2.0);
        let r = bisect(f, 0.0, 2.0, -2.0, 2.0).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 4e-16);
    }

    #[test]
    fn bisect_exact_endpoint() {
        let r = bisect(|x: f64| Ok(x - 1.0), 1.0, 3.0, 0.0, 2.0).unwrap();
        assert_eq!(r, 1.0);
    }

    #[test]
    fn bisect_decreasing_function() {
        let r = bisect(|x: f64| Ok((-x).exp() - 0.5), 0.0, 5.0, 0.5, (-5f64).exp() - 0.5).unwrap();
        assert!((r - std::f64::consts::LN_2).abs() < 1e-15);
    }

    #[test]
    fn bisect_reversed_bracket() {
        let r = bisect(|x: f64| Ok(x * x - 2.0), 2.0, 0.0, 2.0, -2.0).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 4e-16);
    }

    #[test]
    fn golden_finds_parabola_top() {
        let (x, fx) = golden_max(|x: f64| Ok(-(x - 0.3) * (x - 0.3) + 2.0), -1.0, 2.0, 1e-10).unwrap();
        // a quadratic top resolves the argmax only to ~sqrt(ulp)
        assert!((x - 0.3).abs() < 1e-7);
        assert!((fx - 2.0).abs() < 1e-15);
    }

    #[test]
    fn errors_propagate() {
        let r = bisect(|_| Err(crate::Error::Inconsistent), 0.0, 1.0, -1.0, 1.0);
        assert!(r.is_err());
    }
}
