//! Small deterministic minimizers used by the mean-field solver and the
//! discord measurement search.

/// Minimizes a unimodal function on `[lo, hi]`.
///
/// Golden-section search narrows the bracket, then bisection on the sign of
/// the supplied derivative resolves the minimizer to machine precision (a
/// function-value search alone stalls near `sqrt(ε)` relative accuracy).
/// Boundary minima are returned exactly.
pub fn minimize_bracketed<F, D>(f: F, df: D, lo: f64, hi: f64) -> f64
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while b - a > 1e-4 * (hi - lo) {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    // Golden section keeps the minimizer inside [a, b] up to the resolution of
    // f; widen by one step so the derivative test sees a sign change.
    let pad = b - a;
    let a = (a - pad).max(lo);
    let b = (b + pad).min(hi);
    if df(b) <= 0.0 {
        return b;
    }
    if df(a) >= 0.0 {
        return a;
    }
    let (mut a, mut b) = (a, b);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        if df(m) > 0.0 {
            b = m;
        } else {
            a = m;
        }
    }
    0.5 * (a + b)
}

/// Projected Newton descent for a smooth function on the unit box `[0, 1]²`.
///
/// `grad` and `hess` are analytic. Coordinates sitting on a bound with the
/// gradient pointing outward are frozen; the rest take a Newton step when the
/// reduced Hessian is positive definite, a gradient step otherwise, with
/// Armijo backtracking along the projected path.
pub fn projected_newton_unit_box<F, G, H>(f: F, grad: G, hess: H, start: [f64; 2]) -> [f64; 2]
where
    F: Fn([f64; 2]) -> f64,
    G: Fn([f64; 2]) -> [f64; 2],
    H: Fn([f64; 2]) -> [[f64; 2]; 2],
{
    let clamp = |x: [f64; 2]| [x[0].clamp(0.0, 1.0), x[1].clamp(0.0, 1.0)];
    let mut x = clamp(start);
    let mut fx = f(x);
    for _ in 0..500 {
        let g = grad(x);
        let h = hess(x);
        let free = [0, 1].map(|i| !((x[i] <= 0.0 && g[i] > 0.0) || (x[i] >= 1.0 && g[i] < 0.0)));

        let mut d = [0.0; 2];
        match free {
            [true, true] => {
                let det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
                if h[0][0] > 0.0 && det > 0.0 {
                    d[0] = -(h[1][1] * g[0] - h[0][1] * g[1]) / det;
                    d[1] = -(h[0][0] * g[1] - h[1][0] * g[0]) / det;
                } else {
                    d = [-g[0], -g[1]];
                }
            }
            [true, false] | [false, true] => {
                let i = if free[0] { 0 } else { 1 };
                d[i] = if h[i][i] > 0.0 {
                    -g[i] / h[i][i]
                } else {
                    -g[i]
                };
            }
            [false, false] => break,
        }
        if g[0] * d[0] + g[1] * d[1] >= 0.0 {
            d = [0, 1].map(|i| if free[i] { -g[i] } else { 0.0 });
        }
        if d == [0.0, 0.0] {
            break;
        }

        let mut t = 1.0;
        let mut accepted = None;
        while t > 1e-18 {
            let xn = clamp([x[0] + t * d[0], x[1] + t * d[1]]);
            let fxn = f(xn);
            let decrease = g[0] * (xn[0] - x[0]) + g[1] * (xn[1] - x[1]);
            if decrease.abs() <= 1e-13 * fx.abs().max(1.0) {
                // f no longer resolves the step; judge it by the projected gradient
                if projected_norm(grad(xn), xn) < projected_norm(g, x) {
                    accepted = Some((xn, fxn));
                }
                break;
            }
            if fxn <= fx + 1e-4 * decrease {
                accepted = Some((xn, fxn));
                break;
            }
            t *= 0.5;
        }
        let Some((xn, fxn)) = accepted else { break };
        let step = (xn[0] - x[0]).abs().max((xn[1] - x[1]).abs());
        x = xn;
        fx = fxn;
        if step < 1e-16 {
            break;
        }
    }
    x
}

fn projected_norm(g: [f64; 2], x: [f64; 2]) -> f64 {
    (0..2)
        .map(|i| {
            if (x[i] <= 0.0 && g[i] > 0.0) || (x[i] >= 1.0 && g[i] < 0.0) {
                0.0
            } else {
                g[i].abs()
            }
        })
        .fold(0.0, f64::max)
}

/// Nelder–Mead simplex search in two dimensions with the first coordinate
/// clamped to `[lo0, hi0]`.
///
/// Stops when the simplex diameter falls below `xtol` and the spread of
/// function values below `ftol`, or after `max_iter` iterations.
pub fn nelder_mead_2d<F>(
    f: F,
    start: [f64; 2],
    step: [f64; 2],
    bounds0: (f64, f64),
    xtol: f64,
    ftol: f64,
    max_iter: usize,
) -> ([f64; 2], f64)
where
    F: Fn([f64; 2]) -> f64,
{
    let clamp = |p: [f64; 2]| [p[0].clamp(bounds0.0, bounds0.1), p[1]];
    let eval = |p: [f64; 2]| {
        let p = clamp(p);
        (p, f(p))
    };
    let mut simplex = [
        eval(start),
        eval([start[0] + step[0], start[1]]),
        eval([start[0], start[1] + step[1]]),
    ];
    for _ in 0..max_iter {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let diameter = simplex
            .iter()
            .skip(1)
            .map(|(p, _)| {
                (p[0] - simplex[0].0[0])
                    .abs()
                    .max((p[1] - simplex[0].0[1]).abs())
            })
            .fold(0.0, f64::max);
        if diameter < xtol && simplex[2].1 - simplex[0].1 < ftol {
            break;
        }
        let centroid = [
            0.5 * (simplex[0].0[0] + simplex[1].0[0]),
            0.5 * (simplex[0].0[1] + simplex[1].0[1]),
        ];
        let worst = simplex[2];
        let along = |t: f64| {
            [
                centroid[0] + t * (worst.0[0] - centroid[0]),
                centroid[1] + t * (worst.0[1] - centroid[1]),
            ]
        };
        let reflected = eval(along(-1.0));
        if reflected.1 < simplex[0].1 {
            let expanded = eval(along(-2.0));
            simplex[2] = if expanded.1 < reflected.1 {
                expanded
            } else {
                reflected
            };
        } else if reflected.1 < simplex[1].1 {
            simplex[2] = reflected;
        } else {
            let contracted = if reflected.1 < worst.1 {
                eval(along(-0.5))
            } else {
                eval(along(0.5))
            };
            if contracted.1 < worst.1.min(reflected.1) {
                simplex[2] = contracted;
            } else {
                let best = simplex[0].0;
                for vertex in simplex.iter_mut().skip(1) {
                    *vertex = eval([
                        best[0] + 0.5 * (vertex.0[0] - best[0]),
                        best[1] + 0.5 * (vertex.0[1] - best[1]),
                    ]);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    simplex[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracketed_interior_and_boundary() {
        let x = minimize_bracketed(|x| (x - 0.3) * (x - 0.3), |x| 2.0 * (x - 0.3), 0.0, 1.0);
        assert!((x - 0.3).abs() < 1e-15);
        let x = minimize_bracketed(|x| -x, |_| -1.0, 0.0, 1.0);
        assert_eq!(x, 1.0);
        let x = minimize_bracketed(|x| x * x, |x| 2.0 * x, 0.0, 1.0);
        assert_eq!(x, 0.0);
        // flat at the boundary: derivative vanishes exactly at hi
        let x = minimize_bracketed(|x| (1.0 - x).powi(2), |x| -2.0 * (1.0 - x), 0.0, 1.0);
        assert_eq!(x, 1.0);
    }

    #[test]
    fn newton_box_quadratic() {
        let c = [0.2, 0.7];
        let f = |x: [f64; 2]| (x[0] - c[0]).powi(2) + 3.0 * (x[1] - c[1]).powi(2) + x[0] * x[1];
        let g = |x: [f64; 2]| [2.0 * (x[0] - c[0]) + x[1], 6.0 * (x[1] - c[1]) + x[0]];
        let h = |_: [f64; 2]| [[2.0, 1.0], [1.0, 6.0]];
        let x = projected_newton_unit_box(f, g, h, [0.9, 0.1]);
        let gx = g(x);
        // interior stationary point or projected stationarity
        for i in 0..2 {
            let ok =
                gx[i].abs() < 1e-12 || (x[i] == 0.0 && gx[i] > 0.0) || (x[i] == 1.0 && gx[i] < 0.0);
            assert!(ok, "{x:?} {gx:?}");
        }
    }

    #[test]
    fn newton_box_active_bound() {
        let f = |x: [f64; 2]| (x[0] - 2.0).powi(2) + (x[1] + 1.0).powi(2);
        let g = |x: [f64; 2]| [2.0 * (x[0] - 2.0), 2.0 * (x[1] + 1.0)];
        let h = |_: [f64; 2]| [[2.0, 0.0], [0.0, 2.0]];
        assert_eq!(projected_newton_unit_box(f, g, h, [0.5, 0.5]), [1.0, 0.0]);
    }

    #[test]
    fn nelder_mead_rosenbrock() {
        let f = |p: [f64; 2]| (1.0 - p[0]).powi(2) + 100.0 * (p[1] - p[0] * p[0]).powi(2);
        let (p, v) = nelder_mead_2d(
            f,
            [-0.5, 0.5],
            [0.1, 0.1],
            (-2.0, 2.0),
            1e-10,
            1e-20,
            10_000,
        );
        assert!(
            (p[0] - 1.0).abs() < 1e-6 && (p[1] - 1.0).abs() < 1e-6,
            "{p:?} {v}"
        );
    }
}
