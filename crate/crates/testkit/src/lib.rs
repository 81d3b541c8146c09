//! Self-contained numerical oracles for the formsim test suites.
//!
//! Everything in here is deliberately written from first principles on plain
//! `f64` containers, independent of the library code it is used to check:
//! a dense matrix exponential, a characteristic-polynomial eigenvalue
//! finder, the literal binomial-sum form of the quintic step function, and
//! a Kronecker product for assembling block matrices explicitly.

use num_complex::Complex64;

/// Minimal dense row-major square matrix.
#[derive(Clone, Debug)]
pub struct DenseMat {
    pub n: usize,
    pub data: Vec<f64>,
}

impl DenseMat {
    pub fn zeros(n: usize) -> Self {
        DenseMat {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        DenseMat {
            n,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn scale(&self, s: f64) -> Self {
        DenseMat {
            n: self.n,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        DenseMat {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(self.n, x.len());
        let n = self.n;
        let mut y = vec![0.0; n];
        for i in 0..n {
            let mut acc = 0.0;
            for j in 0..n {
                acc += self.get(i, j) * x[j];
            }
            y[i] = acc;
        }
        y
    }

    /// Maximum absolute column sum (induced 1-norm).
    pub fn norm_one(&self) -> f64 {
        let n = self.n;
        (0..n)
            .map(|j| (0..n).map(|i| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Trace of the matrix.
    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &DenseMat, b: &DenseMat) -> DenseMat {
    let n = a.n * b.n;
    let mut out = DenseMat::zeros(n);
    for i in 0..a.n {
        for j in 0..a.n {
            let aij = a.get(i, j);
            if aij == 0.0 {
                continue;
            }
            for p in 0..b.n {
                for q in 0..b.n {
                    out.set(i * b.n + p, j * b.n + q, aij * b.get(p, q));
                }
            }
        }
    }
    out
}

/// Matrix exponential `exp(a·t)` by scaling-and-squaring with a Taylor series.
///
/// The argument is scaled down until its 1-norm is below 0.5, the series is
/// summed until terms vanish at machine precision, and the result is squared
/// back up. Plenty accurate for the well-conditioned, modest-norm closed-loop
/// matrices exercised in the tests.
pub fn expm(a: &DenseMat, t: f64) -> DenseMat {
    let at = a.scale(t);
    let norm = at.norm_one();
    let mut squarings = 0u32;
    let mut scale = 1.0;
    while norm * scale > 0.5 {
        scale *= 0.5;
        squarings += 1;
    }
    let b = at.scale(scale);

    let mut result = DenseMat::identity(a.n);
    let mut term = DenseMat::identity(a.n);
    for k in 1..200 {
        term = term.matmul(&b).scale(1.0 / k as f64);
        let next = result.add(&term);
        let term_norm = term.norm_one();
        result = next;
        if term_norm < 1e-300 || term_norm < f64::EPSILON * result.norm_one() {
            break;
        }
    }
    for _ in 0..squarings {
        result = result.matmul(&result);
    }
    result
}

/// Coefficients of the characteristic polynomial det(xI − A) via the
/// Faddeev–LeVerrier recurrence. Returned ascending: c[0] + c[1]x + … + x^n.
pub fn char_poly(a: &DenseMat) -> Vec<f64> {
    let n = a.n;
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    let mut m = DenseMat::zeros(n);
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{n-k+1}·I
        let mut am = a.matmul(&m);
        let c_prev = coeffs[n - k + 1];
        for i in 0..n {
            am.data[i * n + i] += c_prev;
        }
        m = am;
        let c = -a.matmul(&m).trace() / k as f64;
        coeffs[n - k] = c;
    }
    coeffs
}

/// All roots of a real polynomial (ascending coefficients) by the
/// Durand–Kerner iteration. Intended for well-separated real spectra of
/// small symmetric matrices; returns real parts sorted ascending.
pub fn real_poly_roots(coeffs: &[f64]) -> Vec<f64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return vec![];
    }
    let lead = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in monic.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    // Non-real, non-symmetric starting points on a circle bounding the roots.
    let radius = 1.0
        + monic[..n]
            .iter()
            .map(|c| c.abs())
            .fold(0.0f64, f64::max);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius * 0.7, angle)
        })
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            moved = moved.max(delta.norm());
        }
        if moved < 1e-13 * radius.max(1.0) {
            break;
        }
    }
    let mut re: Vec<f64> = roots.iter().map(|r| r.re).collect();
    re.sort_by(|a, b| a.partial_cmp(b).unwrap());
    re
}

/// Eigenvalues of a small symmetric matrix through the characteristic
/// polynomial, fully independent of any Jacobi-rotation code path.
pub fn charpoly_eigenvalues(a: &DenseMat) -> Vec<f64> {
    real_poly_roots(&char_poly(a))
}

/// The literal binomial-sum middle clause of the smooth step function,
/// transcribed term by term: for d in the open transition band,
/// ((d−dr)/(dc−dr))^3 · Σ_{k=0}^{2} C(k+2,k)·C(5,2−k)·((dr−d)/(dc−dr))^k,
/// with the 0 / 1 clauses outside.
pub fn smooth_step_literal(d: f64, d_risky: f64, d_cautionary: f64) -> f64 {
    if d <= d_risky {
        return 0.0;
    }
    if d >= d_cautionary {
        return 1.0;
    }
    let span = d_cautionary - d_risky;
    let s = (d - d_risky) / span;
    let neg_s = (d_risky - d) / span;
    let binom = |n: u64, k: u64| -> f64 {
        if k > n {
            return 0.0;
        }
        let mut acc = 1.0;
        for i in 0..k {
            acc = acc * (n - i) as f64 / (i + 1) as f64;
        }
        acc
    };
    let mut sum = 0.0;
    for k in 0..=2u64 {
        sum += binom(k + 2, k) * binom(5, 2 - k) * neg_s.powi(k as i32);
    }
    s.powi(3) * sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expm_diagonal() {
        let a = DenseMat::from_rows(&[vec![1.0, 0.0], vec![0.0, -2.0]]);
        let e = expm(&a, 1.0);
        assert!((e.get(0, 0) - 1.0f64.exp()).abs() < 1e-14);
        assert!((e.get(1, 1) - (-2.0f64).exp()).abs() < 1e-14);
        assert!(e.get(0, 1).abs() < 1e-15);
    }

    #[test]
    fn expm_rotation_block() {
        // exp([[0,-w],[w,0]]·t) is a rotation by w·t.
        let w = 0.7;
        let a = DenseMat::from_rows(&[vec![0.0, -w], vec![w, 0.0]]);
        let e = expm(&a, 2.0);
        assert!((e.get(0, 0) - (1.4f64).cos()).abs() < 1e-13);
        assert!((e.get(1, 0) - (1.4f64).sin()).abs() < 1e-13);
    }

    #[test]
    fn charpoly_known_spectrum() {
        let a = DenseMat::from_rows(&[
            vec![2.0, 0.0, 0.0],
            vec![0.0, 3.0, 4.0],
            vec![0.0, 4.0, 9.0],
        ]);
        let eigs = charpoly_eigenvalues(&a);
        assert!((eigs[0] - 1.0).abs() < 1e-9);
        assert!((eigs[1] - 2.0).abs() < 1e-9);
        assert!((eigs[2] - 11.0).abs() < 1e-9);
    }

    #[test]
    fn literal_step_edges() {
        assert_eq!(smooth_step_literal(0.4, 0.4, 0.7), 0.0);
        assert_eq!(smooth_step_literal(0.7, 0.4, 0.7), 1.0);
        let mid = smooth_step_literal(0.55, 0.4, 0.7);
        assert!((mid - 0.5).abs() < 1e-12);
    }
}
