//! Gauss-Hermite quadrature nodes and weights.
//!
//! Physicists' convention: `sum(w_i * f(x_i))` approximates the integral of
//! `exp(-x^2) f(x)` over the real line. Nodes are found by Newton iteration
//! on the Hermite recurrence with the usual asymptotic initial guesses.

const NEWTON_EPS: f64 = 3e-14;
const PIM4: f64 = 0.751_125_544_464_942_5; // pi^(-1/4)
const SQRT_PI: f64 = 1.772_453_850_905_516;

/// Nodes and weights of the n-point Gauss-Hermite rule.
pub fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = (n + 1) / 2;
    let nf = n as f64;
    let mut z = 0.0;
    let mut z_prev = 0.0;
    let mut z_prev2 = 0.0;
    for i in 0..m {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * z_prev2,
            3 => 1.91 * z - 0.91 * z_prev2,
            _ => 2.0 * z - z_prev2,
        };
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p1 = PIM4;
            let mut p2 = 0.0;
            for j in 1..=n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
            }
            pp = (2.0 * nf).sqrt() * p2;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= NEWTON_EPS {
                break;
            }
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
        z_prev2 = z_prev;
        z_prev = z;
    }
    // descending |x| out of the loop; return ascending nodes
    x.reverse();
    w.reverse();
    (x, w)
}

/// Expectation of `f(Z)` for standard normal Z via an n-point rule.
pub fn normal_expectation<F: Fn(f64) -> f64>(nodes: &[f64], weights: &[f64], f: F) -> f64 {
    let mut acc = 0.0;
    for (x, w) in nodes.iter().zip(weights) {
        acc += w * f(std::f64::consts::SQRT_2 * x);
    }
    acc / SQRT_PI
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn weights_sum_to_sqrt_pi() {
        for n in [8, 21, 80] {
            let (_, w) = gauss_hermite(n);
            assert_abs_diff_eq!(w.iter().sum::<f64>(), SQRT_PI, epsilon = 1e-12);
        }
    }

    #[test]
    fn normal_moments() {
        let (x, w) = gauss_hermite(80);
        assert_abs_diff_eq!(normal_expectation(&x, &w, |_| 1.0), 1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(normal_expectation(&x, &w, |z| z), 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!(normal_expectation(&x, &w, |z| z * z), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(normal_expectation(&x, &w, |z| z.powi(4)), 3.0, epsilon = 1e-11);
        // smooth non-polynomial: E[exp(Z)] = sqrt(e)
        assert_abs_diff_eq!(
            normal_expectation(&x, &w, f64::exp),
            1.0f64.exp().sqrt(),
            epsilon = 1e-12
        );
    }
}
