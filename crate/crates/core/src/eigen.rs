//! Dense symmetric eigenvalues and their classification.
//!
//! The solver reduces the matrix to tridiagonal form with Householder
//! reflections and then runs implicit-shift QL sweeps on the tridiagonal
//! pair. Only eigenvalues are computed. The algorithm is sequential and uses
//! no data-dependent parallelism, so identical input gives bit-identical
//! output.

use serde::Serialize;

use crate::graph::SymmetricMatrix;
use crate::{Error, Result, MAX_ORDER};

/// Classification tolerance for trivial eigenvalues and sign counts.
///
/// Non-trivial eigenvalues of threshold graphs stay at least `(√2 - 1)/2`
/// away from both `0` and `-1`, so this threshold never straddles a cluster.
pub const DEFAULT_TOL: f64 = 1e-6;

const MAX_SWEEPS: usize = 64;

/// Counts of negative, zero and positive eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct InertiaTriple {
    pub negatives: usize,
    pub zeros: usize,
    pub positives: usize,
}

impl InertiaTriple {
    pub fn new(negatives: usize, zeros: usize, positives: usize) -> Self {
        Self { negatives, zeros, positives }
    }

    pub fn total(&self) -> usize {
        self.negatives + self.zeros + self.positives
    }
}

impl std::fmt::Display for InertiaTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.negatives, self.zeros, self.positives)
    }
}

/// Ascending eigenvalues together with the tolerance used to classify them.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    /// Sorts `values` ascending (stable, NaN-free input assumed).
    pub fn new(mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_by(f64::total_cmp);
        Self { values, tol }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `λ_i`, 1-based.
    pub fn get(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn inertia(&self) -> InertiaTriple {
        let negatives = self.values.iter().filter(|&&x| x < -self.tol).count();
        let positives = self.values.iter().filter(|&&x| x > self.tol).count();
        InertiaTriple::new(negatives, self.len() - negatives - positives, positives)
    }

    /// `μ⁻`: the largest eigenvalue below `-1 - tol`.
    pub fn mu_minus(&self) -> Option<f64> {
        self.values.iter().rev().copied().find(|&x| x < -1.0 - self.tol)
    }

    /// 1-based position of `μ⁻` in the ascending list.
    pub fn mu_minus_index(&self) -> Option<usize> {
        self.values.iter().rposition(|&x| x < -1.0 - self.tol).map(|i| i + 1)
    }

    /// `μ⁺`: the smallest eigenvalue above `tol`.
    pub fn mu_plus(&self) -> Result<f64> {
        self.values.iter().copied().find(|&x| x > self.tol).ok_or(Error::NoPositiveEigenvalue)
    }

    pub fn mu_plus_index(&self) -> Option<usize> {
        self.values.iter().position(|&x| x > self.tol).map(|i| i + 1)
    }

    /// Number of eigenvalues within `tol` of `target`.
    pub fn multiplicity(&self, target: f64) -> usize {
        self.values.iter().filter(|&&x| (x - target).abs() <= self.tol).count()
    }

    /// Groups of consecutive eigenvalues whose neighbouring gaps are at most
    /// `tol`, as `(representative, size)` with the representative being the
    /// group mean.
    pub fn clusters(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        let mut start = 0;
        for i in 1..=self.values.len() {
            if i == self.values.len() || self.values[i] - self.values[i - 1] > self.tol {
                let group = &self.values[start..i];
                out.push((group.iter().sum::<f64>() / group.len() as f64, group.len()));
                start = i;
            }
        }
        out
    }

    /// Power sum `Σ λ^p`.
    pub fn moment(&self, p: i32) -> f64 {
        self.values.iter().map(|x| x.powi(p)).sum()
    }
}

/// All eigenvalues of `matrix`, ascending, classified with [`DEFAULT_TOL`].
pub fn eigenvalues(matrix: &SymmetricMatrix) -> Result<Spectrum> {
    let n = matrix.order();
    if n > MAX_ORDER {
        return Err(Error::TooLarge { order: n, max: MAX_ORDER });
    }
    let (mut diag, mut off) = tridiagonalize(matrix.as_slice(), n);
    implicit_ql(&mut diag, &mut off)?;
    Ok(Spectrum::new(diag, DEFAULT_TOL))
}

/// Like [`eigenvalues`] but for a raw row-major buffer, validating symmetry.
pub fn eigenvalues_dense(order: usize, data: &[f64]) -> Result<Spectrum> {
    if order > MAX_ORDER {
        return Err(Error::TooLarge { order, max: MAX_ORDER });
    }
    let m = SymmetricMatrix::from_row_major(order, data.to_vec())?;
    eigenvalues(&m)
}

/// Householder reduction of a symmetric row-major matrix to tridiagonal
/// form. Returns the diagonal and the subdiagonal, the latter padded with a
/// trailing zero so both have length `n`.
pub(crate) fn tridiagonalize(data: &[f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut a = data.to_vec();
    let mut off = vec![0.0; n];
    let mut v = vec![0.0; n];
    let mut p = vec![0.0; n];
    for k in 0..n.saturating_sub(2) {
        let len = n - k - 1;
        let scale: f64 = (k + 1..n).map(|i| a[i * n + k].abs()).sum();
        if scale == 0.0 {
            off[k] = 0.0;
            continue;
        }
        let mut norm2 = 0.0;
        for (j, i) in (k + 1..n).enumerate() {
            v[j] = a[i * n + k] / scale;
            norm2 += v[j] * v[j];
        }
        let x0 = v[0];
        let alpha = if x0 >= 0.0 { -norm2.sqrt() } else { norm2.sqrt() };
        off[k] = scale * alpha;
        // v = x - alpha e1, H = I - beta v v^T
        v[0] = x0 - alpha;
        let vtv = norm2 - 2.0 * alpha * x0 + alpha * alpha;
        if vtv == 0.0 {
            continue;
        }
        let beta = 2.0 / vtv;

        // p = beta * B v on the trailing block B.
        for r in 0..len {
            let row = (k + 1 + r) * n + k + 1;
            let mut acc = 0.0;
            for c in 0..len {
                acc += a[row + c] * v[c];
            }
            p[r] = beta * acc;
        }
        let vp: f64 = (0..len).map(|r| v[r] * p[r]).sum();
        let half = 0.5 * beta * vp;
        for r in 0..len {
            p[r] -= half * v[r];
        }
        // B -= v q^T + q v^T
        for r in 0..len {
            let row = (k + 1 + r) * n + k + 1;
            for c in 0..len {
                a[row + c] -= v[r] * p[c] + p[r] * v[c];
            }
        }
    }
    if n >= 2 {
        off[n - 2] = a[(n - 1) * n + (n - 2)];
    }
    let diag = (0..n).map(|i| a[i * n + i]).collect();
    (diag, off)
}

/// Implicit QL iteration on a symmetric tridiagonal matrix. On return `diag`
/// holds the eigenvalues in no particular order and `off` is destroyed.
pub(crate) fn implicit_ql(diag: &mut [f64], off: &mut [f64]) -> Result<()> {
    let n = diag.len();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS {
                return Err(Error::NoConvergence);
            }
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + off[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Ok(())
}
