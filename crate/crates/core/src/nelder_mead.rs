//! Derivative-free simplex minimization.
//!
//! Reflection, expansion, contraction and shrink coefficients scale with the
//! dimension, which behaves much better than the classic (1, 2, 0.5, 0.5) set
//! once the dimension passes ten or so. When the simplex collapses before the iteration budget is spent the
//! search restarts around the best vertex.

/// Stopping rules for [`minimize`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    pub max_iterations: usize,
    /// Initial simplex edge length.
    pub step: f64,
    /// Collapse threshold on the spread of function values.
    pub f_tol: f64,
    /// Collapse threshold on the simplex diameter.
    pub x_tol: f64,
    /// Stop as soon as a value at or below this is seen.
    pub target: f64,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            max_iterations: 2000,
            step: 0.5,
            f_tol: 1e-15,
            x_tol: 1e-10,
            target: f64::NEG_INFINITY,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    /// The simplex collapsed (or the target was hit) within the budget.
    pub converged: bool,
}

pub fn minimize<F>(f: F, x0: &[f64], settings: &Settings) -> Minimum
where
    F: Fn(&[f64]) -> f64,
{
    let n = x0.len();
    if n == 0 {
        return Minimum {
            x: Vec::new(),
            value: f(x0),
            iterations: 0,
            converged: true,
        };
    }
    let nf = n as f64;
    let alpha = 1.0;
    let gamma = 1.0 + 2.0 / nf;
    let rho = 0.75 - 1.0 / (2.0 * nf);
    let sigma = 1.0 - 1.0 / nf;

    let mut best_x = x0.to_vec();
    let mut best_f = f(x0);
    let mut iterations = 0;
    let mut converged = false;
    let mut step = settings.step;

    'outer: while iterations < settings.max_iterations {
        let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
        simplex.push((best_x.clone(), best_f));
        for i in 0..n {
            let mut x = best_x.clone();
            x[i] += step;
            let fx = f(&x);
            simplex.push((x, fx));
        }

        loop {
            simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
            if simplex[0].1 < best_f || (simplex[0].1 == best_f && iterations == 0) {
                best_f = simplex[0].1;
                best_x.clone_from(&simplex[0].0);
            }
            if best_f <= settings.target {
                converged = true;
                break 'outer;
            }
            if iterations >= settings.max_iterations {
                break 'outer;
            }
            let spread = simplex[n].1 - simplex[0].1;
            let diameter = simplex[1..]
                .iter()
                .map(|(x, _)| {
                    x.iter()
                        .zip(&simplex[0].0)
                        .map(|(a, b)| (a - b).abs())
                        .fold(0.0, f64::max)
                })
                .fold(0.0, f64::max);
            if spread <= settings.f_tol && diameter <= settings.x_tol.max(1e-3 * step) {
                converged = true;
                if step <= settings.x_tol * 10.0 {
                    break 'outer;
                }
                // fresh, smaller simplex around the best point
                step *= 0.1;
                continue 'outer;
            }
            iterations += 1;

            let mut centroid = vec![0.0; n];
            for (x, _) in &simplex[..n] {
                for (cv, xv) in centroid.iter_mut().zip(x) {
                    *cv += xv / nf;
                }
            }
            let worst = simplex[n].clone();
            let along = |t: f64| -> Vec<f64> {
                centroid
                    .iter()
                    .zip(&worst.0)
                    .map(|(cv, wv)| cv + t * (cv - wv))
                    .collect()
            };

            let xr = along(alpha);
            let fr = f(&xr);
            if fr < simplex[0].1 {
                let xe = along(alpha * gamma);
                let fe = f(&xe);
                simplex[n] = if fe < fr { (xe, fe) } else { (xr, fr) };
                continue;
            }
            if fr < simplex[n - 1].1 {
                simplex[n] = (xr, fr);
                continue;
            }
            let (xc, fc) = if fr < worst.1 {
                let xc = along(alpha * rho);
                let fc = f(&xc);
                (xc, fc)
            } else {
                let xc = along(-rho);
                let fc = f(&xc);
                (xc, fc)
            };
            if fc < worst.1.min(fr) {
                simplex[n] = (xc, fc);
                continue;
            }
            // shrink towards the best vertex
            let head = simplex[0].0.clone();
            for (x, fx) in simplex.iter_mut().skip(1) {
                for (xv, hv) in x.iter_mut().zip(&head) {
                    *xv = hv + sigma * (*xv - hv);
                }
                *fx = f(x);
            }
        }
    }

    Minimum {
        x: best_x,
        value: best_f,
        iterations,
        converged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_bowl() {
        let f = |x: &[f64]| {
            x.iter()
                .enumerate()
                .map(|(i, v)| (v - i as f64).powi(2))
                .sum::<f64>()
        };
        let m = minimize(f, &[5.0; 6], &Settings::default());
        for (i, v) in m.x.iter().enumerate() {
            assert!((v - i as f64).abs() < 1e-6, "{:?}", m.x);
        }
        assert!(m.converged);
    }

    #[test]
    fn rosenbrock() {
        let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let m = minimize(
            f,
            &[-1.2, 1.0],
            &Settings {
                max_iterations: 5000,
                ..Settings::default()
            },
        );
        assert!(
            (m.x[0] - 1.0).abs() < 1e-5 && (m.x[1] - 1.0).abs() < 1e-5,
            "{:?}",
            m.x
        );
    }

    #[test]
    fn stops_at_target() {
        let f = |x: &[f64]| x[0] * x[0];
        let m = minimize(
            f,
            &[3.0],
            &Settings {
                target: 1e-2,
                ..Settings::default()
            },
        );
        assert!(m.value <= 1e-2 && m.converged);
    }

    #[test]
    fn empty_problem() {
        let m = minimize(|_: &[f64]| 4.0, &[], &Settings::default());
        assert_eq!(m.value, 4.0);
        assert_eq!(m.iterations, 0);
    }
}
