//! Dense and tridiagonal symmetric eigensolvers, implemented in-repo.
//!
//! The workhorse is the implicit-shift QL iteration on a symmetric
//! tridiagonal matrix (the classic Bowdler–Martin–Reinsch–Wilkinson
//! algorithm); dense matrices are first reduced by Householder reflections
//! with accumulated transformations. The discretized Hamiltonians are
//! assembled tridiagonal, so the sweeps never pay the dense reduction.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum EigenError {
    NotSquare { rows: usize, cols: usize },
    NotSymmetric { defect: f64, tolerance: f64 },
    NoConvergence { index: usize },
    EmptyMatrix,
}

impl fmt::Display for EigenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenError::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}×{cols}, expected square")
            }
            EigenError::NotSymmetric { defect, tolerance } => {
                write!(
                    f,
                    "asymmetry {defect} exceeds relative tolerance {tolerance}"
                )
            }
            EigenError::NoConvergence { index } => {
                write!(f, "QL iteration failed to converge at eigenvalue {index}")
            }
            EigenError::EmptyMatrix => write!(f, "matrix has no rows"),
        }
    }
}

impl std::error::Error for EigenError {}

/// Symmetric tridiagonal matrix: `diag` of length n, `offdiag` of length
/// n−1 with `offdiag[i] = T[i][i+1]`.
#[derive(Debug, Clone)]
pub struct SymTridiagonal {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
}

impl SymTridiagonal {
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn inf_norm(&self) -> f64 {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut row = self.diag[i].abs();
                if i > 0 {
                    row += self.offdiag[i - 1].abs();
                }
                if i + 1 < n {
                    row += self.offdiag[i].abs();
                }
                row
            })
            .fold(0.0, f64::max)
    }

    /// `T·v`.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut acc = self.diag[i] * v[i];
                if i > 0 {
                    acc += self.offdiag[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    acc += self.offdiag[i] * v[i + 1];
                }
                acc
            })
            .collect()
    }

    /// All eigenvalues, ascending. O(n²); no eigenvectors.
    pub fn eigenvalues(&self) -> Result<Vec<f64>, EigenError> {
        let mut d = self.diag.clone();
        let mut e = self.offdiag.clone();
        e.push(0.0);
        tqli(&mut d, &mut e, None)?;
        d.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(d)
    }

    /// Eigenvector for an isolated eigenvalue by shifted inverse iteration.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.len();
        let scale = self.inf_norm().max(f64::MIN_POSITIVE);
        let shift = lambda + 1e-11 * scale;
        // deterministic pseudo-random start breaks symmetry-induced stalls
        let rng = crate::rng::CounterRng::new(0x51D3);
        let mut v: Vec<f64> = (0..n).map(|i| rng.nth_range(i as u64, -1.0, 1.0)).collect();
        normalize(&mut v);
        for _ in 0..4 {
            v = self.solve_shifted(shift, &v);
            normalize(&mut v);
        }
        v
    }

    /// Solve `(T − shift·I) x = b` by tridiagonal LU with partial pivoting
    /// (one superdiagonal of fill-in, tiny-pivot guard for the
    /// near-singular shifts inverse iteration uses).
    fn solve_shifted(&self, shift: f64, b: &[f64]) -> Vec<f64> {
        let n = self.len();
        let mut d: Vec<f64> = self.diag.iter().map(|&x| x - shift).collect();
        let mut du = self.offdiag.clone();
        du.push(0.0);
        let mut du2 = vec![0.0; n];
        let mut rhs = b.to_vec();
        let tiny = 1e-300;
        let guard = |p: f64| if p.abs() < tiny { tiny.copysign(p) } else { p };

        for i in 0..n - 1 {
            // the subdiagonal of row i+1 is never touched by earlier steps
            let dl = self.offdiag[i];
            if dl.abs() <= d[i].abs() {
                let fact = dl / guard(d[i]);
                d[i + 1] -= fact * du[i];
                rhs[i + 1] -= fact * rhs[i];
            } else {
                // swap rows i and i+1
                let fact = d[i] / dl;
                let old_d_next = d[i + 1];
                let old_du_next = du[i + 1];
                d[i] = dl;
                d[i + 1] = du[i] - fact * old_d_next;
                du[i] = old_d_next;
                du2[i] = old_du_next;
                du[i + 1] = -fact * old_du_next;
                rhs.swap(i, i + 1);
                rhs[i + 1] -= fact * rhs[i];
            }
        }
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut acc = rhs[i];
            if i + 1 < n {
                acc -= du[i] * x[i + 1];
            }
            if i + 2 < n {
                acc -= du2[i] * x[i + 2];
            }
            x[i] = acc / guard(d[i]);
        }
        x
    }
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

/// Dense symmetric matrix in full row-major storage.
#[derive(Debug, Clone)]
pub struct DenseSymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseSymMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseSymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, EigenError> {
        let n = rows.len();
        if n == 0 {
            return Err(EigenError::EmptyMatrix);
        }
        for row in rows {
            if row.len() != n {
                return Err(EigenError::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
        }
        let mut m = DenseSymMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.data[i * n + j] = v;
            }
        }
        Ok(m)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Largest absolute asymmetry `|a_ij − a_ji|`.
    pub fn symmetry_defect(&self) -> f64 {
        let mut defect: f64 = 0.0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                defect = defect.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        defect
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }
}

/// Full eigen-decomposition of a dense symmetric matrix.
#[derive(Debug, Clone)]
pub struct EigenSolve {
    /// Ascending eigenvalues.
    pub values: Vec<f64>,
    /// `vectors[k]` is the eigenvector for `values[k]`.
    pub vectors: Vec<Vec<f64>>,
    /// `‖Av − λv‖₂` for the lowest pairs (up to 20).
    pub residual_norms: Vec<f64>,
    pub matrix_inf_norm: f64,
}

/// Relative symmetry tolerance enforced on input matrices.
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;

/// Householder reduction + implicit QL with accumulated transformations.
///
/// Rejects matrices whose asymmetry exceeds `1e-12` relative to the largest
/// entry.
pub fn eig_sym(matrix: &DenseSymMatrix) -> Result<EigenSolve, EigenError> {
    let n = matrix.len();
    if n == 0 {
        return Err(EigenError::EmptyMatrix);
    }
    let scale = matrix
        .data
        .iter()
        .fold(0.0f64, |acc, &v| acc.max(v.abs()))
        .max(f64::MIN_POSITIVE);
    let defect = matrix.symmetry_defect();
    if defect > SYMMETRY_TOLERANCE * scale {
        return Err(EigenError::NotSymmetric {
            defect: defect / scale,
            tolerance: SYMMETRY_TOLERANCE,
        });
    }

    let mut a = matrix.clone();
    let (mut d, mut e) = tred2(&mut a);
    e.push(0.0);
    let mut z = a; // holds the accumulated transformation
    tqli(&mut d, &mut e, Some(&mut z))?;

    // sort ascending, permuting the columns of z
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| (0..n).map(|row| z.get(row, col)).collect())
        .collect();

    let matrix_inf_norm = matrix.inf_norm();
    let residual_norms = values
        .iter()
        .zip(&vectors)
        .take(20)
        .map(|(&lam, v)| {
            let av = matrix.apply(v);
            av.iter()
                .zip(v)
                .map(|(&a, &x)| (a - lam * x) * (a - lam * x))
                .sum::<f64>()
                .sqrt()
        })
        .collect();

    Ok(EigenSolve {
        values,
        vectors,
        residual_norms,
        matrix_inf_norm,
    })
}

/// Householder tridiagonalization with accumulation (tred2). On return the
/// matrix argument holds the orthogonal transformation Q such that
/// `QᵀAQ = T`; returns `(diag, offdiag)` of T with `offdiag[i] = T[i][i+1]`.
fn tred2(a: &mut DenseSymMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];

    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a.get(i, k).abs()).sum();
            if scale == 0.0 {
                e[i] = a.get(i, l);
            } else {
                for k in 0..=l {
                    let v = a.get(i, k) / scale;
                    a.set(i, k, v);
                    h += v * v;
                }
                let mut f = a.get(i, l);
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a.set(i, l, f - g);
                f = 0.0;
                for j in 0..=l {
                    a.set(j, i, a.get(i, j) / h);
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a.get(j, k) * a.get(i, k);
                    }
                    for k in (j + 1)..=l {
                        g += a.get(k, j) * a.get(i, k);
                    }
                    e[j] = g / h;
                    f += e[j] * a.get(i, j);
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let fj = a.get(i, j);
                    let gj = e[j] - hh * fj;
                    e[j] = gj;
                    for k in 0..=j {
                        let v = a.get(j, k) - (fj * e[k] + gj * a.get(i, k));
                        a.set(j, k, v);
                    }
                }
            }
        } else {
            e[i] = a.get(i, l);
        }
        d[i] = h;
    }

    d[0] = 0.0;
    e[0] = 0.0;
    for i in 0..n {
        if d[i] != 0.0 {
            for j in 0..i {
                let mut g = 0.0;
                for k in 0..i {
                    g += a.get(i, k) * a.get(k, j);
                }
                for k in 0..i {
                    let v = a.get(k, j) - g * a.get(k, i);
                    a.set(k, j, v);
                }
            }
        }
        d[i] = a.get(i, i);
        a.set(i, i, 1.0);
        for j in 0..i {
            a.set(j, i, 0.0);
            a.set(i, j, 0.0);
        }
    }

    let offdiag: Vec<f64> = (1..n).map(|i| e[i]).collect();
    (d, offdiag)
}

/// Implicit-shift QL on a symmetric tridiagonal; `d` diagonal (length n),
/// `e` subdiagonal with `e[i] = T[i][i+1]` and `e[n-1]` a zero sentinel.
/// When `z` is provided its columns accumulate the eigenvectors.
fn tqli(
    d: &mut [f64],
    e: &mut [f64],
    mut z: Option<&mut DenseSymMatrix>,
) -> Result<(), EigenError> {
    let n = d.len();
    if n == 0 {
        return Err(EigenError::EmptyMatrix);
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(EigenError::NoConvergence { index: l });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(zm) = z.as_deref_mut() {
                    for k in 0..n {
                        f = zm.get(k, i + 1);
                        zm.set(k, i + 1, s * zm.get(k, i) + c * f);
                        zm.set(k, i, c * zm.get(k, i) - s * f);
                    }
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeqRng;

    #[test]
    fn two_by_two_diagonal() {
        let m = DenseSymMatrix::from_rows(&[vec![2.0, 0.0], vec![0.0, 3.0]]).unwrap();
        let solve = eig_sym(&m).unwrap();
        assert!((solve.values[0] - 2.0).abs() < 1e-14);
        assert!((solve.values[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn two_by_two_offdiagonal() {
        let m = DenseSymMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let solve = eig_sym(&m).unwrap();
        assert!((solve.values[0] + 1.0).abs() < 1e-14);
        assert!((solve.values[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn random_symmetric_trace_identity() {
        let mut rng = SeqRng::new(0xE16);
        let n = 50;
        let mut m = DenseSymMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let v = rng.next_range(-1.0, 1.0);
                m.set(i, j, v);
                m.set(j, i, v);
            }
        }
        let trace: f64 = (0..n).map(|i| m.get(i, i)).sum();
        let solve = eig_sym(&m).unwrap();
        let sum: f64 = solve.values.iter().sum();
        assert!((trace - sum).abs() < 1e-10, "trace {trace} vs sum {sum}");
        // eigenvalues ascending
        for w in solve.values.windows(2) {
            assert!(w[0] <= w[1]);
        }
        // residuals within the contract
        for &r in &solve.residual_norms {
            assert!(r <= 1e-10 * solve.matrix_inf_norm, "residual {r}");
        }
        // eigenvectors orthonormal (spot check)
        let dot: f64 = solve.vectors[0]
            .iter()
            .zip(&solve.vectors[1])
            .map(|(a, b)| a * b)
            .sum();
        assert!(dot.abs() < 1e-10);
    }

    #[test]
    fn rejects_asymmetric_input() {
        let m = DenseSymMatrix::from_rows(&[vec![1.0, 0.5], vec![0.2, 1.0]]).unwrap();
        assert!(matches!(eig_sym(&m), Err(EigenError::NotSymmetric { .. })));
    }

    #[test]
    fn tridiagonal_matches_dense() {
        let mut rng = SeqRng::new(7);
        let n = 40;
        let diag: Vec<f64> = (0..n).map(|_| rng.next_range(-2.0, 2.0)).collect();
        let offdiag: Vec<f64> = (0..n - 1).map(|_| rng.next_range(-1.0, 1.0)).collect();
        let tri = SymTridiagonal {
            diag: diag.clone(),
            offdiag: offdiag.clone(),
        };
        let mut dense = DenseSymMatrix::zeros(n);
        for i in 0..n {
            dense.set(i, i, diag[i]);
            if i + 1 < n {
                dense.set(i, i + 1, offdiag[i]);
                dense.set(i + 1, i, offdiag[i]);
            }
        }
        let ev_tri = tri.eigenvalues().unwrap();
        let ev_dense = eig_sym(&dense).unwrap().values;
        for (a, b) in ev_tri.iter().zip(&ev_dense) {
            assert!((a - b).abs() < 1e-11, "{a} vs {b}");
        }
    }

    #[test]
    fn inverse_iteration_gives_true_eigenvectors() {
        let n = 60;
        // discrete Laplacian: eigenvalues 2−2cos(kπ/(n+1)) are known
        let tri = SymTridiagonal {
            diag: vec![2.0; n],
            offdiag: vec![-1.0; n - 1],
        };
        let eigenvalues = tri.eigenvalues().unwrap();
        for &lam in eigenvalues.iter().take(5) {
            let v = tri.eigenvector(lam);
            let av = tri.apply(&v);
            let res: f64 = av
                .iter()
                .zip(&v)
                .map(|(&a, &x)| (a - lam * x) * (a - lam * x))
                .sum::<f64>()
                .sqrt();
            assert!(res < 1e-10 * tri.inf_norm(), "residual {res}");
        }
    }
}
