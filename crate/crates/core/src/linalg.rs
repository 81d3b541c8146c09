//! Small dense linear algebra: 3-vectors and n×n symmetric eigenproblems.
//!
//! The matrices in this problem are tiny (communication graphs of a few
//! dozen agents at most), so everything here is a plain dense
//! implementation with no external dependency. Eigenvalues come from the
//! cyclic Jacobi rotation method, which is robust for real symmetric
//! matrices of this size.

use crate::error::{CoreError, Result};
use crate::scalar::Real;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

/// A 3-vector of positions, velocities, or accelerations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> Vec3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Vec3 { x, y, z }
    }

    pub fn zero() -> Self {
        Vec3::new(T::zero(), T::zero(), T::zero())
    }

    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm_sq(self) -> T {
        self.dot(self)
    }

    pub fn norm(self) -> T {
        self.norm_sq().sqrt()
    }

    /// Largest absolute component.
    pub fn linf(self) -> T {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Clamps every component to [-bound, bound].
    pub fn clamp_abs(self, bound: T) -> Self {
        let clamp = |v: T| v.min(bound).max(-bound);
        Vec3::new(clamp(self.x), clamp(self.y), clamp(self.z))
    }

    pub fn to_array(self) -> [T; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_array(a: [T; 3]) -> Self {
        Vec3::new(a[0], a[1], a[2])
    }
}

impl<T: Real> Add for Vec3<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Vec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl<T: Real> Sub for Vec3<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl<T: Real> Neg for Vec3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl<T: Real> Mul<T> for Vec3<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl<T: Real> AddAssign for Vec3<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<T: Real> SubAssign for Vec3<T> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

/// Dense row-major square matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Real> Matrix<T> {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from nested rows; all rows must have length `rows.len()`.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(CoreError::DimensionMismatch(format!(
                "expected {n} entries in every row of a {n}x{n} matrix"
            )));
        }
        Ok(Matrix {
            n,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mul_vec(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.n {
            return Err(CoreError::DimensionMismatch(format!(
                "matrix is {}x{} but vector has length {}",
                self.n,
                self.n,
                x.len()
            )));
        }
        Ok((0..self.n)
            .map(|i| {
                (0..self.n).fold(T::zero(), |acc, j| acc + self[(i, j)] * x[j])
            })
            .collect())
    }

    pub fn frobenius(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, &v| acc + v * v)
            .sqrt()
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self[(i, j)] != self[(j, i)] {
                    return false;
                }
            }
        }
        true
    }
}

impl<T: Real> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.n + j]
    }
}

impl<T: Real> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.n + j]
    }
}

const MAX_JACOBI_SWEEPS: usize = 64;

/// Eigenvalues of a symmetric matrix, sorted ascending.
///
/// Cyclic Jacobi rotations; each sweep annihilates every off-diagonal
/// element once. Convergence is declared when the accumulated off-diagonal
/// magnitude falls to the round-off floor of the matrix scale.
pub fn sym_eigenvalues<T: Real>(a: &Matrix<T>) -> Result<Vec<T>> {
    let n = a.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![a[(0, 0)]]);
    }
    let mut m = a.clone();
    let scale = m.frobenius().max(T::one());
    let tol = scale * T::epsilon() * T::from_usize(n).unwrap();

    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut off = T::zero();
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                off = off + m[(p, q)].abs();
            }
        }
        if off <= tol {
            let mut eigs: Vec<T> = (0..n).map(|i| m[(i, i)]).collect();
            eigs.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));
            return Ok(eigs);
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq == T::zero() {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (T::two() * apq);
                // Smaller-angle root of t^2 + 2θt − 1 = 0; θ = ±inf degrades
                // to t = 0 (identity rotation), which is safe.
                let mut t = T::one() / (theta.abs() + (T::one() + theta * theta).sqrt());
                if theta < T::zero() {
                    t = -t;
                }
                if !t.is_finite() {
                    continue;
                }
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                let tau = s / (T::one() + c);

                let h = t * apq;
                m[(p, p)] = m[(p, p)] - h;
                m[(q, q)] = m[(q, q)] + h;
                m[(p, q)] = T::zero();
                m[(q, p)] = T::zero();
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = m[(r, p)];
                    let arq = m[(r, q)];
                    let new_rp = arp - s * (arq + tau * arp);
                    let new_rq = arq + s * (arp - tau * arq);
                    m[(r, p)] = new_rp;
                    m[(p, r)] = new_rp;
                    m[(r, q)] = new_rq;
                    m[(q, r)] = new_rq;
                }
            }
        }
    }
    Err(CoreError::NoConvergence(MAX_JACOBI_SWEEPS))
}

/// Eigenvalues of a symmetric 2×2 matrix [[a, b], [b, d]], ascending.
///
/// Closed form with the numerically stable discriminant (a−d)² + 4b².
pub fn sym2x2_eigenvalues<T: Real>(a: T, b: T, d: T) -> (T, T) {
    let half = T::lit(0.5);
    let mean = (a + d) * half;
    let disc = ((a - d) * (a - d) + T::lit(4.0) * b * b).sqrt() * half;
    (mean - disc, mean + disc)
}
