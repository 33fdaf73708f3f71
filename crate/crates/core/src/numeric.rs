//! Small numeric helpers: adaptive quadrature and Gaussian functions.

/// Adaptive Simpson integration of `f` over `[a, b]` to absolute tolerance
/// `tol`. Handles the piecewise-smooth integrands used here (kernels and
/// indicator products); discontinuities cost extra subdivision depth.
pub fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a >= b {
        return 0.0;
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(a, b, fa, fm, fb);
    simpson_rec(f, a, b, fa, fm, fb, whole, tol, 60)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

pub fn gaussian_pdf(mu: f64, sigma: f64, t: f64) -> f64 {
    let z = (t - mu) / sigma;
    (-(0.5) * z * z).exp() / (sigma * (2.0 * std::f64::consts::PI).sqrt())
}

pub fn gaussian_cdf(mu: f64, sigma: f64, t: f64) -> f64 {
    0.5 * (1.0 + libm::erf((t - mu) / (sigma * std::f64::consts::SQRT_2)))
}

pub fn logistic(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomial_exactly() {
        let got = adaptive_simpson(&|x| x * x, 0.0, 3.0, 1e-12);
        assert!((got - 9.0).abs() < 1e-10);
    }

    #[test]
    fn integrates_step_function() {
        let got = adaptive_simpson(&|x| if x < 1.0 { 1.0 } else { 0.25 }, 0.0, 3.0, 1e-10);
        assert!((got - 1.5).abs() < 1e-8, "got {got}");
    }

    #[test]
    fn gaussian_mass_is_one() {
        let got = adaptive_simpson(&|x| gaussian_pdf(0.0, 1.0, x), -8.0, 8.0, 1e-12);
        assert!((got - 1.0).abs() < 1e-10);
        assert!((gaussian_cdf(0.0, 1.0, 0.0) - 0.5).abs() < 1e-15);
    }
}
