//! Normalized Laplacian `L = I - D^{-1/2} A D^{-1/2}` and a cyclic Jacobi
//! eigensolver for dense symmetric matrices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// Default convergence tolerance on the off-diagonal Frobenius norm.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Slack used when comparing eigenvalues against exact bounds.
pub const CHECK_SLACK: f64 = 1e-9;
pub const MAX_SWEEPS: usize = 100;

/// Dense symmetric matrix, stored in full row-major form.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        SymMatrix { order, data: vec![0.0; order * order] }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Builds from the upper triangle `entry(i, j)` for `i <= j`.
    pub fn from_upper(order: usize, mut entry: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in i..order {
                m.set(i, j, entry(i, j));
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        let n = self.order;
        self.data[i * n + j] = value;
        self.data[j * n + i] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let n = self.order;
        let mut sum = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                let a = self.get(i, j);
                sum += 2.0 * a * a;
            }
        }
        sum.sqrt()
    }
}

pub fn normalized_laplacian(g: &Graph) -> Result<SymMatrix> {
    let n = g.order();
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(Error::DegreeZero(v));
    }
    Ok(SymMatrix::from_upper(n, |i, j| {
        if i == j {
            1.0
        } else if g.has_edge(i, j) {
            -1.0 / ((g.degree(i) * g.degree(j)) as f64).sqrt()
        } else {
            0.0
        }
    }))
}

/// Eigenvalues in ascending order by cyclic Jacobi rotations, iterated until
/// the off-diagonal Frobenius norm drops below `tol`.
pub fn eigenvalues(mat: &SymMatrix, tol: f64) -> Result<Vec<f64>> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::PreconditionViolated(format!("tolerance must be positive, got {tol}")));
    }
    let n = mat.order();
    let mut a = mat.clone();
    let mut sweeps = 0;
    while a.off_diagonal_norm() >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Annihilates `a[p][q]` with a Jacobi rotation.
fn rotate(a: &mut SymMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    if apq == 0.0 {
        return;
    }
    let (app, aqq) = (a.get(p, p), a.get(q, q));
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    for k in 0..a.order() {
        if k == p || k == q {
            continue;
        }
        let (akp, akq) = (a.get(k, p), a.get(k, q));
        a.set(k, p, c * akp - s * akq);
        a.set(k, q, s * akp + c * akq);
    }
    a.set(p, p, app - t * apq);
    a.set(q, q, aqq + t * apq);
    a.set(p, q, 0.0);
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Lambda1Report {
    pub lambda1: f64,
    /// `lambda1 <= n / (n - 1)` up to [`CHECK_SLACK`].
    pub leq_bound_ok: bool,
    /// Vacuous when the curvature lower bound is not positive.
    pub lichnerowicz_ok: bool,
    /// Spectral connectivity indicator `lambda1 > tol`.
    pub connected: bool,
    pub spectrum: Vec<f64>,
}

/// Eigenvalue side of the rigidity and Lichnerowicz statements for a
/// connected graph with at least two vertices.
pub fn lambda1_checks(g: &Graph, min_curvature: &Rational) -> Result<Lambda1Report> {
    g.require_connected()?;
    let n = g.order();
    if n < 2 {
        return Err(Error::PreconditionViolated("lambda1 needs at least two vertices".into()));
    }
    let spectrum = eigenvalues(&normalized_laplacian(g)?, DEFAULT_TOL)?;
    let lambda1 = spectrum[1];
    let bound = n as f64 / (n as f64 - 1.0);
    let kappa0 = min_curvature.to_f64();
    Ok(Lambda1Report {
        lambda1,
        leq_bound_ok: lambda1 <= bound + CHECK_SLACK,
        lichnerowicz_ok: !min_curvature.is_positive() || lambda1 >= kappa0 - CHECK_SLACK,
        connected: lambda1 > DEFAULT_TOL,
        spectrum,
    })
}
