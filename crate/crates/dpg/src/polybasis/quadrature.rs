//! Gauss quadrature on the reference edge [0,1] and the reference triangle.
//!
//! Edge rules are Gauss-Legendre; triangle rules are collapsed tensor-product
//! rules (Duffy map of a Gauss x Gauss grid), which are exact for all
//! polynomials up to the requested total degree by construction.

use super::BasisError;

/// Maximum exactness degree served by `edge_quadrature`/`tri_quadrature`.
pub const MAX_QUADRATURE_DEGREE: usize = 30;

/// Points and weights integrating polynomials up to total degree `degree`
/// exactly. `P` is `f64` on the edge and `[f64; 2]` on the triangle.
#[derive(Debug, Clone)]
pub struct QuadratureRule<P> {
    pub points: Vec<P>,
    pub weights: Vec<f64>,
    pub degree: usize,
}

impl<P> QuadratureRule<P> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Gauss-Legendre nodes/weights on [-1,1], found by Newton iteration on P_n.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Chebyshev-like initial guess for the i-th positive-side root.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n and P_n' by the three-term recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 1..n {
                let p2 = ((2 * k + 1) as f64 * x * p1 - k as f64 * p0) / (k + 1) as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                // one polishing step
                let mut q0 = 1.0;
                let mut q1 = x;
                for k in 1..n {
                    let q2 = ((2 * k + 1) as f64 * x * q1 - k as f64 * q0) / (k + 1) as f64;
                    q0 = q1;
                    q1 = q2;
                }
                dp = n as f64 * (x * q1 - q0) / (x * x - 1.0);
                x -= q1 / dp;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Gauss-Legendre rule on [0,1] with `n` points (exact up to degree 2n-1).
pub fn gauss_legendre_01(n: usize) -> (Vec<f64>, Vec<f64>) {
    let (t, w) = gauss_legendre(n);
    (
        t.iter().map(|&t| 0.5 * (t + 1.0)).collect(),
        w.iter().map(|&w| 0.5 * w).collect(),
    )
}

/// Rule on the reference edge [0,1] exact for polynomials of degree `degree`.
pub fn edge_quadrature(degree: usize) -> Result<QuadratureRule<f64>, BasisError> {
    if degree > MAX_QUADRATURE_DEGREE {
        return Err(BasisError::QuadratureDegree {
            requested: degree,
            max: MAX_QUADRATURE_DEGREE,
        });
    }
    let n = degree / 2 + 1;
    let (points, weights) = gauss_legendre_01(n);
    Ok(QuadratureRule {
        points,
        weights,
        degree,
    })
}

/// Rule on the reference triangle {x,y >= 0, x+y <= 1} exact for total degree
/// `degree`, built by collapsing a tensor Gauss grid through
/// (u, v) -> (u, v(1-u)) with Jacobian (1-u).
pub fn tri_quadrature(degree: usize) -> Result<QuadratureRule<[f64; 2]>, BasisError> {
    if degree > MAX_QUADRATURE_DEGREE {
        return Err(BasisError::QuadratureDegree {
            requested: degree,
            max: MAX_QUADRATURE_DEGREE,
        });
    }
    // The u-integrand picks up one extra power from the Jacobian.
    let nu = (degree + 1) / 2 + 1;
    let nv = degree / 2 + 1;
    let (u, wu) = gauss_legendre_01(nu);
    let (v, wv) = gauss_legendre_01(nv);
    let mut points = Vec::with_capacity(nu * nv);
    let mut weights = Vec::with_capacity(nu * nv);
    for i in 0..nu {
        for j in 0..nv {
            points.push([u[i], v[j] * (1.0 - u[i])]);
            weights.push(wu[i] * wv[j] * (1.0 - u[i]));
        }
    }
    Ok(QuadratureRule {
        points,
        weights,
        degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Exact value of the integral of x^a y^b over the reference triangle,
    /// a! b! / (a+b+2)!.
    pub fn tri_monomial_integral(a: usize, b: usize) -> f64 {
        let mut num = 1.0f64;
        for k in 2..=a {
            num *= k as f64;
        }
        for k in 2..=b {
            num *= k as f64;
        }
        let mut den = 1.0f64;
        for k in 2..=(a + b + 2) {
            den *= k as f64;
        }
        num / den
    }

    #[test]
    fn edge_rule_examples() {
        // 2-point rule integrates x^3 exactly
        let r = edge_quadrature(3).unwrap();
        assert_eq!(r.len(), 2);
        let v: f64 = r
            .points
            .iter()
            .zip(&r.weights)
            .map(|(&x, &w)| w * x.powi(3))
            .sum();
        assert_relative_eq!(v, 0.25, max_relative = 1e-14);

        let r = edge_quadrature(0).unwrap();
        let one: f64 = r.weights.iter().sum();
        assert_relative_eq!(one, 1.0, max_relative = 1e-15);

        // 4-point rule integrates x^6 exactly
        let r = edge_quadrature(6).unwrap();
        assert_eq!(r.len(), 4);
        let v: f64 = r
            .points
            .iter()
            .zip(&r.weights)
            .map(|(&x, &w)| w * x.powi(6))
            .sum();
        assert_relative_eq!(v, 1.0 / 7.0, max_relative = 1e-14);
    }

    #[test]
    fn tri_rule_examples() {
        let r = tri_quadrature(2).unwrap();
        let area: f64 = r.weights.iter().sum();
        assert_relative_eq!(area, 0.5, max_relative = 1e-15);
        let x2: f64 = r
            .points
            .iter()
            .zip(&r.weights)
            .map(|(p, &w)| w * p[0] * p[0])
            .sum();
        assert_relative_eq!(x2, 1.0 / 12.0, max_relative = 1e-14);
        let xy: f64 = r
            .points
            .iter()
            .zip(&r.weights)
            .map(|(p, &w)| w * p[0] * p[1])
            .sum();
        assert_relative_eq!(xy, 1.0 / 24.0, max_relative = 1e-14);
    }

    #[test]
    fn monomial_exactness_all_degrees() {
        for d in 0..=16usize {
            let r = tri_quadrature(d).unwrap();
            for a in 0..=d {
                for b in 0..=(d - a) {
                    let num: f64 = r
                        .points
                        .iter()
                        .zip(&r.weights)
                        .map(|(p, &w)| w * p[0].powi(a as i32) * p[1].powi(b as i32))
                        .sum();
                    let exact = tri_monomial_integral(a, b);
                    assert!(
                        (num - exact).abs() <= 1e-13 * exact.abs().max(1e-30),
                        "tri degree {d}, monomial x^{a} y^{b}: {num} vs {exact}"
                    );
                }
            }
            let re = edge_quadrature(d).unwrap();
            for a in 0..=d {
                let num: f64 = re
                    .points
                    .iter()
                    .zip(&re.weights)
                    .map(|(&x, &w)| w * x.powi(a as i32))
                    .sum();
                let exact = 1.0 / (a as f64 + 1.0);
                assert!(
                    (num - exact).abs() <= 1e-13 * exact,
                    "edge degree {d}, x^{a}: {num} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn degree_cap_reported() {
        let err = tri_quadrature(31).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("30"), "error should name the maximum: {msg}");
        assert!(edge_quadrature(31).is_err());
    }
}
