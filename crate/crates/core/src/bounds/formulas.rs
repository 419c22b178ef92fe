//! Closed-form bounds. `ln` is the natural logarithm, `log2` base two; each
//! formula uses the logarithm it is stated with.

use crate::{Error, Result};

fn need(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(msg()))
    }
}

fn check_alpha(n: usize, alpha: usize) -> Result<()> {
    need(1 <= alpha && alpha <= n, || format!("need 1 <= alpha <= n, got alpha={alpha}, n={n}"))
}

/// `(log2 n − 2 log2 log2 n, log2(n+1))`, bracketing the largest domination
/// number over tournaments on `n` vertices.
pub fn erdos_bounds(n: usize) -> Result<(f64, f64)> {
    need(n >= 2, || format!("need n >= 2, got {n}"))?;
    let l = (n as f64).log2();
    Ok((l - 2.0 * l.log2(), (n as f64 + 1.0).log2()))
}

/// `α(1 + 2 ln(n/α))`.
pub fn main_upper(n: usize, alpha: usize) -> Result<f64> {
    check_alpha(n, alpha)?;
    let a = alpha as f64;
    Ok(a * (1.0 + 2.0 * (n as f64 / a).ln()))
}

/// `α(1 + 2 ln χ)`.
pub fn cor_chi_upper(alpha: usize, chi: usize) -> Result<f64> {
    need(alpha >= 1 && chi >= 1, || format!("need alpha, chi >= 1, got {alpha}, {chi}"))?;
    Ok(alpha as f64 * (1.0 + 2.0 * (chi as f64).ln()))
}

/// `α(1 + 2 ln(d_av + 1))`.
pub fn cor_avg_upper(alpha: usize, d_av: f64) -> Result<f64> {
    need(alpha >= 1 && d_av >= 0.0, || format!("need alpha >= 1 and d_av >= 0, got {alpha}, {d_av}"))?;
    Ok(alpha as f64 * (1.0 + 2.0 * (d_av + 1.0).ln()))
}

/// `2d + 1 + 2 ln((n − 2d + 1)/2)` for graphs whose complement is
/// `d`-degenerate.
pub fn degen_upper(n: usize, d: usize) -> Result<f64> {
    need(n > 2 * d, || format!("need n >= 2d+1, got n={n}, d={d}"))?;
    let (n, d) = (n as f64, d as f64);
    Ok(2.0 * d + 1.0 + 2.0 * ((n - 2.0 * d + 1.0) / 2.0).ln())
}

/// `2(m−1) n ln(δ + m − 1)/(δ + m − 1)`, a strict upper bound for
/// `K_{1,m}`-free graphs.
pub fn k1m_upper(n: usize, m: usize, delta: usize) -> Result<f64> {
    need(m >= 3, || format!("need m >= 3, got {m}"))?;
    let k = (delta + m - 1) as f64;
    Ok(2.0 * (m - 1) as f64 * n as f64 * k.ln() / k)
}

/// `4n log2(δ + 2)/(δ + 2)` for claw-free graphs.
pub fn clawfree_upper(n: usize, delta: usize) -> f64 {
    let k = (delta + 2) as f64;
    4.0 * n as f64 * k.log2() / k
}

/// `n (log2(δ + 1) + 1)/(δ + 1)`, an upper bound on the domination number.
pub fn arnautov_upper(n: usize, delta: usize) -> f64 {
    let k = (delta + 1) as f64;
    n as f64 * (k.log2() + 1.0) / k
}

/// `(m − 1) n/(δ + m − 1)`, an upper bound on `α` for `K_{1,m}`-free graphs.
pub fn faudree_alpha_upper(n: usize, m: usize, delta: usize) -> Result<f64> {
    need(m >= 2, || format!("need m >= 2, got {m}"))?;
    Ok((m - 1) as f64 * n as f64 / (delta + m - 1) as f64)
}

/// `(n + log2 n − 2 log2 log2 n, n + ⌈n/2⌉)`: a value some graph on `n`
/// vertices reaches, and the cap on `Γ_d(G) + Γ_d(Ḡ)`.
pub fn ng_bounds(n: usize) -> Result<(f64, usize)> {
    let (lower, _) = erdos_bounds(n)?;
    Ok((n as f64 + lower, n + n.div_ceil(2)))
}

/// `(r log2(n+1), r·α(1 + 2 ln(n/α)))`.
pub fn rdom_uppers(n: usize, alpha: usize, r: usize) -> Result<(f64, f64)> {
    need(r >= 1, || format!("need r >= 1, got {r}"))?;
    let r = r as f64;
    Ok((r * (n as f64 + 1.0).log2(), r * main_upper(n, alpha)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-3
    }

    #[test]
    fn erdos() {
        assert_eq!(erdos_bounds(7).unwrap().1, 3.0);
        assert_eq!(erdos_bounds(2).unwrap().0, 1.0);
        assert!(close(erdos_bounds(2).unwrap().1, 1.585));
        assert_eq!(erdos_bounds(16).unwrap().0, 0.0);
        assert!(erdos_bounds(1).is_err());
    }

    #[test]
    fn main_and_corollaries() {
        assert_eq!(main_upper(9, 9).unwrap(), 9.0);
        assert!(close(main_upper(5, 2).unwrap(), 5.665));
        assert!(main_upper(5, 0).is_err());
        assert!(main_upper(5, 6).is_err());
        assert_eq!(cor_chi_upper(3, 1).unwrap(), 3.0);
        assert_eq!(cor_avg_upper(2, 0.0).unwrap(), 2.0);
        assert!(cor_avg_upper(2, -1.0).is_err());
    }

    #[test]
    fn main_upper_increases_up_to_n_over_root_e() {
        for n in 2..200 {
            let top = (n as f64 / 1f64.exp().sqrt()).floor() as usize;
            for a in 1..top {
                assert!(main_upper(n, a).unwrap() < main_upper(n, a + 1).unwrap());
            }
        }
    }

    #[test]
    fn degenerate() {
        for d in 0..5 {
            assert_eq!(degen_upper(2 * d + 1, d).unwrap(), (2 * d + 1) as f64);
            let v = degen_upper(2 * d + 3, d).unwrap();
            assert!(close(v, 2.0 * d as f64 + 1.0 + 2.0 * 2f64.ln()));
        }
        assert!(close(degen_upper(10, 1).unwrap(), 6.008));
        assert!(degen_upper(2, 1).is_err());
    }

    #[test]
    fn star_free() {
        assert!(close(k1m_upper(10, 3, 2).unwrap(), 13.863));
        assert!(k1m_upper(10, 2, 2).is_err());
        for n in 1..20 {
            assert_eq!(clawfree_upper(n, 2), 2.0 * n as f64);
        }
        assert_eq!(faudree_alpha_upper(10, 3, 2).unwrap(), 5.0);
        assert_eq!(arnautov_upper(4, 0), 4.0);
    }

    #[test]
    fn nordhaus_gaddum() {
        assert_eq!(ng_bounds(5).unwrap().1, 8);
        assert_eq!(ng_bounds(4).unwrap().0, 4.0);
        assert_eq!(ng_bounds(2).unwrap().1, 3);
        assert!(ng_bounds(1).is_err());
    }

    #[test]
    fn multiple_domination() {
        for n in 2..30 {
            for a in 1..=n {
                let (c, g) = rdom_uppers(n, a, 1).unwrap();
                assert_eq!(c, erdos_bounds(n).unwrap().1);
                assert_eq!(g, main_upper(n, a).unwrap());
            }
        }
        assert_eq!(rdom_uppers(7, 1, 2).unwrap().0, 6.0);
        assert_eq!(rdom_uppers(3, 1, 2).unwrap().0, 4.0);
        assert!(rdom_uppers(3, 1, 0).is_err());
    }

    #[test]
    fn alpha_instance_below_main_upper() {
        for n in 1..300usize {
            for a in 1..=n {
                let a_f = a as f64;
                let closed = a_f + 2.0 * a_f * ((n as f64 + a_f) / (2.0 * a_f)).ln();
                assert!(closed <= main_upper(n, a).unwrap() + 1e-9);
            }
        }
    }
}
