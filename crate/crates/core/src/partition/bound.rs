//! The integral bound `t + ∫_t^max(n,t) dx/f(x)`.

use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

pub const QUADRATURE_TOLERANCE: f64 = 1e-9;
pub const MAX_SUBDIVISIONS: usize = 1_000_000;

/// A guaranteed part-size function. Tagged forms carry closed-form
/// antiderivatives; `Custom` is integrated numerically.
#[derive(Clone)]
pub enum SizeFn {
    Constant(f64),
    /// `(x − α)/(2α) + 1`.
    IndependenceClass { alpha: usize },
    /// `(x − 1)/2 − d + 1`.
    DegenerateComplement { d: usize },
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl fmt::Debug for SizeFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SizeFn::Constant(c) => write!(f, "Constant({c})"),
            SizeFn::IndependenceClass { alpha } => write!(f, "IndependenceClass {{ alpha: {alpha} }}"),
            SizeFn::DegenerateComplement { d } => write!(f, "DegenerateComplement {{ d: {d} }}"),
            SizeFn::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

impl SizeFn {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            SizeFn::Constant(c) => *c,
            SizeFn::IndependenceClass { alpha } => {
                let a = *alpha as f64;
                (x - a) / (2.0 * a) + 1.0
            }
            SizeFn::DegenerateComplement { d } => (x - 1.0) / 2.0 - *d as f64 + 1.0,
            SizeFn::Custom(f) => f(x),
        }
    }

    /// `∫_a^b dx/f(x)` in closed form, when one is known.
    fn closed_integral(&self, a: f64, b: f64) -> Option<f64> {
        match self {
            SizeFn::Constant(c) => Some((b - a) / c),
            SizeFn::IndependenceClass { alpha } => {
                let a2 = *alpha as f64;
                Some(2.0 * a2 * ((b + a2) / (a + a2)).ln())
            }
            SizeFn::DegenerateComplement { d } => {
                let s = 1.0 - 2.0 * *d as f64;
                Some(2.0 * ((b + s) / (a + s)).ln())
            }
            SizeFn::Custom(_) => None,
        }
    }
}

fn check_positive(f: &SizeFn, x: f64) -> Result<f64> {
    let y = f.eval(x);
    if y > 0.0 && y.is_finite() {
        Ok(y)
    } else {
        Err(Error::domain(format!("size function is not positive at x = {x}: f(x) = {y}")))
    }
}

struct Simpson<'a> {
    f: &'a SizeFn,
    subdivisions: usize,
}

impl Simpson<'_> {
    fn recip(&self, x: f64) -> Result<f64> {
        Ok(1.0 / check_positive(self.f, x)?)
    }

    #[allow(clippy::too_many_arguments)]
    fn refine(&mut self, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64) -> Result<f64> {
        self.subdivisions += 1;
        if self.subdivisions > MAX_SUBDIVISIONS {
            return Err(Error::cap(format!(
                "quadrature exceeded {MAX_SUBDIVISIONS} subdivisions"
            )));
        }
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (self.recip(lm)?, self.recip(rm)?);
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * tol || b - a < 1e-12 {
            return Ok(left + right + delta / 15.0);
        }
        Ok(self.refine(a, m, fa, flm, fm, left, tol / 2.0)?
            + self.refine(m, b, fm, frm, fb, right, tol / 2.0)?)
    }
}

/// `∫_a^b dx/f(x)` by adaptive Simpson to absolute tolerance 1e-9.
pub fn integrate_reciprocal(f: &SizeFn, a: f64, b: f64) -> Result<f64> {
    if b <= a {
        return Ok(0.0);
    }
    let mut s = Simpson { f, subdivisions: 0 };
    let (fa, fb) = (s.recip(a)?, s.recip(b)?);
    let fm = s.recip(0.5 * (a + b))?;
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    s.refine(a, b, fa, fm, fb, whole, QUADRATURE_TOLERANCE)
}

/// `t + ∫_t^max(n,t) dx/f(x)`, closed form where `f` has one.
pub fn gpl_bound(t: usize, f: &SizeFn, n: usize) -> Result<f64> {
    bound_with(t, f, n, false)
}

/// As [`gpl_bound`], but always by quadrature.
pub fn gpl_bound_quadrature(t: usize, f: &SizeFn, n: usize) -> Result<f64> {
    bound_with(t, f, n, true)
}

fn bound_with(t: usize, f: &SizeFn, n: usize, force_quadrature: bool) -> Result<f64> {
    let (a, b) = (t as f64, n.max(t) as f64);
    check_positive(f, a)?;
    if b > a {
        check_positive(f, b)?;
    }
    let integral = match f.closed_integral(a, b) {
        Some(v) if !force_quadrature => v,
        _ => integrate_reciprocal(f, a, b)?,
    };
    Ok(a + integral)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_integral() {
        let f = SizeFn::IndependenceClass { alpha: 3 };
        assert_eq!(gpl_bound(3, &f, 2).unwrap(), 3.0);
        assert_eq!(gpl_bound(3, &f, 3).unwrap(), 3.0);
    }

    #[test]
    fn alpha_two_instance() {
        let f = SizeFn::IndependenceClass { alpha: 2 };
        let v = gpl_bound(2, &f, 10).unwrap();
        assert!((v - (2.0 + 4.0 * 3f64.ln())).abs() < 1e-12);
        assert!((v - 6.394).abs() < 1e-3);
    }

    #[test]
    fn degenerate_instance() {
        let f = SizeFn::DegenerateComplement { d: 2 };
        let v = gpl_bound(5, &f, 20).unwrap();
        assert!((v - (5.0 + 2.0 * (17.0f64 / 2.0).ln())).abs() < 1e-12);
    }

    #[test]
    fn constant_instance_counts_vertices() {
        assert_eq!(gpl_bound(2, &SizeFn::Constant(1.0), 9).unwrap(), 9.0);
    }

    #[test]
    fn quadrature_agrees_with_closed_forms() {
        for alpha in 1..=8 {
            for n in [alpha, alpha + 1, 3 * alpha, 40, 64] {
                let f = SizeFn::IndependenceClass { alpha };
                let a = gpl_bound(alpha, &f, n).unwrap();
                let b = gpl_bound_quadrature(alpha, &f, n).unwrap();
                assert!((a - b).abs() < 1e-8, "alpha={alpha} n={n}");
            }
        }
        for d in 0..4 {
            let f = SizeFn::DegenerateComplement { d };
            let a = gpl_bound(2 * d + 1, &f, 50).unwrap();
            let b = gpl_bound_quadrature(2 * d + 1, &f, 50).unwrap();
            assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn custom_function() {
        let f = SizeFn::Custom(Arc::new(|x: f64| x));
        let v = gpl_bound(1, &f, 8).unwrap();
        assert!((v - (1.0 + 8f64.ln())).abs() < 1e-8);
    }

    #[test]
    fn non_positive_is_an_error() {
        let f = SizeFn::Custom(Arc::new(|x: f64| 3.0 - x));
        assert!(matches!(gpl_bound(1, &f, 5), Err(Error::Domain(_))));
        assert!(gpl_bound(1, &SizeFn::Constant(0.0), 5).is_err());
    }

    #[test]
    fn monotone_in_n() {
        let f = SizeFn::IndependenceClass { alpha: 3 };
        let mut last = 0.0;
        for n in 0..100 {
            let v = gpl_bound(3, &f, n).unwrap();
            assert!(v >= last);
            last = v;
        }
    }
}
