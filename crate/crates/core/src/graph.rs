//! Undirected communication graph, its Laplacian machinery, and the
//! spectrum that drives every feasibility check.
//!
//! The coupling matrix for stacked 3-D states is (L + Δ) ⊗ I₃. It is never
//! materialized: its spectrum is the spectrum of L + Δ with multiplicity 3,
//! and applying it to a stack of 3-vectors is an axis-wise application of
//! L + Δ.

use crate::error::{CoreError, Result};
use crate::linalg::{sym_eigenvalues, Matrix, Vec3};
use crate::scalar::Real;

/// Undirected weighted communication graph with a leader mask.
///
/// Construction validates symmetry, a zero diagonal, and non-negative
/// weights. Connectivity and the presence of a leader are separate queries
/// so that infeasible configurations can still be built and *reported* by
/// the stability checker.
#[derive(Clone, Debug, PartialEq)]
pub struct CommGraph<T> {
    n: usize,
    adjacency: Matrix<T>,
    leaders: Vec<bool>,
}

impl<T: Real> CommGraph<T> {
    pub fn new(adjacency: Matrix<T>, leaders: Vec<bool>) -> Result<Self> {
        let n = adjacency.n();
        if n == 0 {
            return Err(CoreError::InvalidGraph("graph needs at least one agent".into()));
        }
        if leaders.len() != n {
            return Err(CoreError::InvalidGraph(format!(
                "leader mask length {} does not match {} agents",
                leaders.len(),
                n
            )));
        }
        for i in 0..n {
            if adjacency[(i, i)] != T::zero() {
                return Err(CoreError::InvalidGraph(format!(
                    "adjacency diagonal entry ({i},{i}) must be zero"
                )));
            }
            for j in 0..n {
                let w = adjacency[(i, j)];
                if !w.is_finite() || w < T::zero() {
                    return Err(CoreError::InvalidGraph(format!(
                        "adjacency weight ({i},{j}) must be finite and non-negative"
                    )));
                }
                if adjacency[(i, j)] != adjacency[(j, i)] {
                    return Err(CoreError::InvalidGraph(format!(
                        "adjacency must be symmetric; entries ({i},{j}) and ({j},{i}) differ"
                    )));
                }
            }
        }
        Ok(CommGraph { n, adjacency, leaders })
    }

    /// Complete graph on `n` vertices with uniform edge weight.
    pub fn complete(n: usize, weight: T, leaders: Vec<bool>) -> Result<Self> {
        let adj = Matrix::from_fn(n, |i, j| if i == j { T::zero() } else { weight });
        Self::new(adj, leaders)
    }

    /// Cycle 0–1–…–(n−1)–0 with uniform edge weight.
    pub fn ring(n: usize, weight: T, leaders: Vec<bool>) -> Result<Self> {
        if n < 3 {
            return Err(CoreError::InvalidGraph("ring topology needs n >= 3".into()));
        }
        let adj = Matrix::from_fn(n, |i, j| {
            let d = (i as isize - j as isize).unsigned_abs();
            if d == 1 || d == n - 1 {
                weight
            } else {
                T::zero()
            }
        });
        Self::new(adj, leaders)
    }

    /// Chain 0–1–…–(n−1) with uniform edge weight.
    pub fn path(n: usize, weight: T, leaders: Vec<bool>) -> Result<Self> {
        let adj = Matrix::from_fn(n, |i, j| {
            if (i as isize - j as isize).abs() == 1 {
                weight
            } else {
                T::zero()
            }
        });
        Self::new(adj, leaders)
    }

    pub fn n_agents(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self) -> &Matrix<T> {
        &self.adjacency
    }

    pub fn weight(&self, i: usize, j: usize) -> T {
        self.adjacency[(i, j)]
    }

    pub fn leaders(&self) -> &[bool] {
        &self.leaders
    }

    pub fn is_leader(&self, i: usize) -> bool {
        self.leaders[i]
    }

    pub fn has_leader(&self) -> bool {
        self.leaders.iter().any(|&l| l)
    }

    /// Indices j with a positive edge weight to agent `i`, ascending.
    pub fn neighbors(&self, i: usize) -> Result<Vec<usize>> {
        if i >= self.n {
            return Err(CoreError::IndexOutOfRange {
                what: "agent",
                index: i,
                len: self.n,
            });
        }
        Ok((0..self.n)
            .filter(|&j| self.adjacency[(i, j)] > T::zero())
            .collect())
    }

    /// True iff the graph ({edges with positive weight}) has a single
    /// connected component. A single vertex is connected.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for j in 0..self.n {
                if !seen[j] && self.adjacency[(i, j)] > T::zero() {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count == self.n
    }

    /// Enforces the full scenario-level invariant: connected with at least
    /// one leader.
    pub fn validate_connected_with_leader(&self) -> Result<()> {
        if !self.is_connected() {
            return Err(CoreError::InvalidGraph(
                "communication graph must be connected".into(),
            ));
        }
        if !self.has_leader() {
            return Err(CoreError::InvalidGraph(
                "at least one agent must know the reference trajectory".into(),
            ));
        }
        Ok(())
    }

    /// Degree, Laplacian, L + Δ, and the full spectrum of L + Δ.
    pub fn build_matrices(&self) -> Result<GraphMatrices<T>> {
        let n = self.n;
        let mut degree = Matrix::zeros(n);
        for i in 0..n {
            degree[(i, i)] =
                (0..n).fold(T::zero(), |acc, j| acc + self.adjacency[(i, j)]);
        }
        let laplacian = Matrix::from_fn(n, |i, j| {
            if i == j {
                degree[(i, i)]
            } else {
                -self.adjacency[(i, j)]
            }
        });
        let l_plus_delta = Matrix::from_fn(n, |i, j| {
            let delta = if i == j && self.leaders[i] {
                T::one()
            } else {
                T::zero()
            };
            laplacian[(i, j)] + delta
        });
        let eigenvalues = sym_eigenvalues(&l_plus_delta)?;
        Ok(GraphMatrices {
            degree,
            laplacian,
            l_plus_delta,
            eigenvalues,
        })
    }
}

/// Derived matrices of a communication graph.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphMatrices<T> {
    pub degree: Matrix<T>,
    pub laplacian: Matrix<T>,
    pub l_plus_delta: Matrix<T>,
    /// Spectrum of L + Δ, sorted ascending. The stacked coupling matrix
    /// (L + Δ) ⊗ I₃ has the same eigenvalues with multiplicity 3.
    pub eigenvalues: Vec<T>,
}

impl<T: Real> GraphMatrices<T> {
    pub fn n(&self) -> usize {
        self.l_plus_delta.n()
    }

    pub fn lambda_min(&self) -> T {
        self.eigenvalues[0]
    }

    pub fn lambda_max(&self) -> T {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    /// True iff L + Δ is (numerically) positive definite, which holds for a
    /// connected graph with at least one leader.
    pub fn is_positive_definite(&self) -> bool {
        self.lambda_min() > positivity_floor(self)
    }

    /// Applies (L + Δ) ⊗ I₃ to a stack of per-agent 3-vectors, axis by axis.
    pub fn apply_l_plus_delta(&self, field: &[Vec3<T>]) -> Result<Vec<Vec3<T>>> {
        let n = self.n();
        if field.len() != n {
            return Err(CoreError::DimensionMismatch(format!(
                "expected {n} stacked vectors, got {}",
                field.len()
            )));
        }
        Ok((0..n)
            .map(|i| {
                let mut acc = Vec3::zero();
                for j in 0..n {
                    acc += field[j] * self.l_plus_delta[(i, j)];
                }
                acc
            })
            .collect())
    }
}

/// Numerical zero threshold for positive-definiteness of L + Δ. The spurious
/// eigenvalue of a leaderless Laplacian lands within round-off of zero, far
/// below this floor for any reasonable edge weighting.
fn positivity_floor<T: Real>(m: &GraphMatrices<T>) -> T {
    let scale = m.lambda_max().abs().max(T::one());
    scale * T::epsilon().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn leaders(mask: &[u8]) -> Vec<bool> {
        mask.iter().map(|&b| b != 0).collect()
    }

    #[test]
    fn path_graph_matrices_match_definition() {
        let g = CommGraph::path(2, 1.0, leaders(&[1, 0])).unwrap();
        let m = g.build_matrices().unwrap();
        assert_eq!(m.laplacian[(0, 0)], 1.0);
        assert_eq!(m.laplacian[(0, 1)], -1.0);
        assert_eq!(m.laplacian[(1, 0)], -1.0);
        assert_eq!(m.laplacian[(1, 1)], 1.0);
        assert_eq!(m.l_plus_delta[(0, 0)], 2.0);
        assert_eq!(m.l_plus_delta[(0, 1)], -1.0);
        assert_eq!(m.l_plus_delta[(1, 1)], 1.0);
    }

    #[test]
    fn complete_graph_spectrum_shifted_by_identity() {
        // K4 Laplacian spectrum {0, 4, 4, 4}; all-leader shift adds one.
        let g = CommGraph::complete(4, 1.0, leaders(&[1, 1, 1, 1])).unwrap();
        let m = g.build_matrices().unwrap();
        let expected = [1.0, 5.0, 5.0, 5.0];
        for (got, want) in m.eigenvalues.iter().zip(expected) {
            assert_relative_eq!(*got, want, epsilon = 1e-12);
        }
        assert!(m.is_positive_definite());
    }

    #[test]
    fn leaderless_connected_graph_is_not_positive_definite() {
        let g = CommGraph::complete(4, 1.0, leaders(&[0, 0, 0, 0])).unwrap();
        let m = g.build_matrices().unwrap();
        assert!(m.lambda_min().abs() < 1e-12);
        assert!(!m.is_positive_definite());
    }

    #[test]
    fn connectivity_cases() {
        assert!(CommGraph::complete(4, 1.0, leaders(&[1, 1, 1, 1]))
            .unwrap()
            .is_connected());
        // Two disjoint edges on 4 vertices.
        let adj = Matrix::from_rows(&[
            vec![0.0, 1.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, 1.0],
            vec![0.0, 0.0, 1.0, 0.0],
        ])
        .unwrap();
        let g = CommGraph::new(adj, leaders(&[1, 0, 0, 0])).unwrap();
        assert!(!g.is_connected());
        assert!(g.validate_connected_with_leader().is_err());
        // Single vertex: vacuously connected.
        let solo = CommGraph::new(Matrix::zeros(1), leaders(&[1])).unwrap();
        assert!(solo.is_connected());
    }

    #[test]
    fn neighbor_sets() {
        let k4 = CommGraph::complete(4, 1.0, leaders(&[1, 1, 1, 1])).unwrap();
        assert_eq!(k4.neighbors(0).unwrap(), vec![1, 2, 3]);
        let p3 = CommGraph::path(3, 1.0, leaders(&[1, 0, 0])).unwrap();
        assert_eq!(p3.neighbors(1).unwrap(), vec![0, 2]);
        // Isolated vertex in a disconnected graph has no neighbors.
        let adj = Matrix::from_rows(&[
            vec![0.0, 1.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0],
        ])
        .unwrap();
        let g = CommGraph::new(adj, leaders(&[1, 0, 0])).unwrap();
        assert_eq!(g.neighbors(2).unwrap(), Vec::<usize>::new());
        assert!(k4.neighbors(4).is_err());
    }

    #[test]
    fn rejects_malformed_adjacency() {
        let asym = Matrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).unwrap();
        assert!(CommGraph::new(asym, leaders(&[1, 0])).is_err());
        let negative = Matrix::from_rows(&[vec![0.0, -1.0], vec![-1.0, 0.0]]).unwrap();
        assert!(CommGraph::new(negative, leaders(&[1, 0])).is_err());
        let diag = Matrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert!(CommGraph::new(diag, leaders(&[1, 0])).is_err());
    }

    #[test]
    fn laplacian_annihilates_ones_for_integer_weights() {
        let g = CommGraph::ring(6, 3.0, leaders(&[1, 0, 0, 0, 0, 0])).unwrap();
        let m = g.build_matrices().unwrap();
        let ones = vec![1.0; 6];
        for r in m.laplacian.mul_vec(&ones).unwrap() {
            assert!(r.abs() <= 1e-12);
        }
    }

    #[test]
    fn apply_matches_explicit_multiply() {
        let g = CommGraph::path(3, 2.0, leaders(&[0, 1, 0])).unwrap();
        let m = g.build_matrices().unwrap();
        let field = vec![
            Vec3::new(1.0, -1.0, 0.5),
            Vec3::new(0.0, 2.0, -0.25),
            Vec3::new(3.0, 0.0, 1.0),
        ];
        let applied = m.apply_l_plus_delta(&field).unwrap();
        for axis in 0..3 {
            let comp: Vec<f64> = field.iter().map(|v| v.to_array()[axis]).collect();
            let expect = m.l_plus_delta.mul_vec(&comp).unwrap();
            for i in 0..3 {
                assert_relative_eq!(applied[i].to_array()[axis], expect[i], epsilon = 1e-14);
            }
        }
    }
}
