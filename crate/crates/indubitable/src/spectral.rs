//! Eigenstructure of symmetric matrices: eigenvalue clustering, spectral
//! idempotents, entry-value classes, Hadamard-algebra dimension, and the
//! two-valued decomposition `E = θ₀K + θ₁(J − K)`.
//!
//! All tolerances flow from a single value (default [`DEFAULT_TOL`], relative
//! to the spectral scale of the matrix). Idempotents are computed as `U Uᵀ`
//! from orthonormal eigenbases rather than via Lagrange interpolation, which
//! keeps them rank-exact when eigenvalues cluster.

use crate::error::{Error, Result};
use crate::graph::Graph;
use nalgebra::DMatrix;

/// Default clustering / verification tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

/// One eigenvalue class: a representative value, its multiplicity, and an
/// orthonormal basis of the summed eigenspace.
#[derive(Debug, Clone)]
pub struct EigenClass {
    pub value: f64,
    pub multiplicity: usize,
    /// n × multiplicity block with orthonormal columns.
    pub basis: DMatrix<f64>,
    /// Present when the class value rounds to an integer within tolerance.
    pub int_value: Option<i64>,
}

/// Full symmetric eigendecomposition, grouped into eigenvalue classes in
/// descending order.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub classes: Vec<EigenClass>,
    /// Set when some gap between adjacent classes falls within (tol, 10·tol):
    /// the clustering is then sensitive to the tolerance choice.
    pub ambiguous: bool,
    pub n: usize,
    /// The spectral scale max(1, ‖A‖) used to normalize tolerances.
    pub scale: f64,
}

impl Spectrum {
    /// The projection idempotent of class `idx` (E = U Uᵀ).
    pub fn idempotent(&self, idx: usize) -> Idempotent {
        let class = &self.classes[idx];
        Idempotent {
            matrix: &class.basis * class.basis.transpose(),
            eigenvalue: class.value,
            rank: class.multiplicity,
        }
    }

    /// Index of the class matching `lambda` under the clustering tolerance.
    pub fn class_of(&self, lambda: f64, tol: f64) -> Option<usize> {
        let thr = tol * self.scale;
        self.classes
            .iter()
            .position(|c| (c.value - lambda).abs() <= thr.max(1e-12))
    }

    pub fn distinct_count(&self) -> usize {
        self.classes.len()
    }
}

/// A spectral projection matrix tagged with its eigenvalue and rank.
#[derive(Debug, Clone)]
pub struct Idempotent {
    pub matrix: DMatrix<f64>,
    pub eigenvalue: f64,
    pub rank: usize,
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix: eigenvalues and
/// an orthogonal eigenvector matrix (one eigenvector per column). Converges
/// quadratically and keeps full accuracy on clustered eigenvalues, where
/// shifted-QR implementations can lose several digits.
fn jacobi_eigen(a: &DMatrix<f64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let n = a.nrows();
    let mut m = a.clone();
    let mut v = DMatrix::<f64>::identity(n, n);
    let scale = a.iter().fold(1.0f64, |acc, &x| acc.max(x.abs()));
    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += m[(p, q)] * m[(p, q)];
            }
        }
        if off.sqrt() <= 1e-14 * scale * n as f64 {
            return Ok((m.diagonal().iter().copied().collect(), v));
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for i in 0..n {
                    let mip = m[(i, p)];
                    let miq = m[(i, q)];
                    m[(i, p)] = c * mip - s * miq;
                    m[(i, q)] = s * mip + c * miq;
                }
                for i in 0..n {
                    let mpi = m[(p, i)];
                    let mqi = m[(q, i)];
                    m[(p, i)] = c * mpi - s * mqi;
                    m[(q, i)] = s * mpi + c * mqi;
                }
                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = c * vip - s * viq;
                    v[(i, q)] = s * vip + c * viq;
                }
            }
        }
    }
    Err(Error::Eigen("Jacobi iteration did not converge".into()))
}

/// Computes the spectrum of a graph's adjacency matrix, clustering
/// eigenvalues whose consecutive sorted values differ by at most
/// `tol · max(1, ‖A‖)` and re-orthonormalizing each class basis.
pub fn spectrum(g: &Graph, tol: f64) -> Result<Spectrum> {
    if tol <= 0.0 {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    let n = g.n();
    let a = g.adj_f64();
    let (eigenvalues, eigenvectors) = jacobi_eigen(&a)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        eigenvalues[j]
            .partial_cmp(&eigenvalues[i])
            .expect("eigenvalues are finite")
    });

    let scale = eigenvalues.iter().fold(1.0f64, |m, &v| m.max(v.abs()));
    let thr = tol * scale;

    let mut classes: Vec<EigenClass> = Vec::new();
    let mut ambiguous = false;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (eigenvalues[order[end - 1]] - eigenvalues[order[end]]).abs() <= thr {
            end += 1;
        }
        if end < n {
            let gap = (eigenvalues[order[end - 1]] - eigenvalues[order[end]]).abs();
            if gap <= 10.0 * thr {
                ambiguous = true;
            }
        }
        let mult = end - start;
        let mut basis = DMatrix::zeros(n, mult);
        for (c, &k) in order[start..end].iter().enumerate() {
            basis.set_column(c, &eigenvectors.column(k));
        }
        // Re-orthonormalize (thin QR); eigenvectors of clustered values can
        // drift from orthogonality.
        let basis = basis.qr().q();
        let mean = order[start..end].iter().map(|&k| eigenvalues[k]).sum::<f64>() / mult as f64;
        let int_value = if (mean - mean.round()).abs() <= thr {
            Some(mean.round() as i64)
        } else {
            None
        };
        classes.push(EigenClass { value: mean, multiplicity: mult, basis, int_value });
        start = end;
    }
    Ok(Spectrum { classes, ambiguous, n, scale })
}

/// Convenience wrapper: the idempotent of eigenvalue class `class_index`.
pub fn spectral_idempotent(g: &Graph, class_index: usize, tol: f64) -> Result<Idempotent> {
    let s = spectrum(g, tol)?;
    if class_index >= s.classes.len() {
        return Err(Error::Precondition(format!(
            "class index {class_index} out of range ({} classes)",
            s.classes.len()
        )));
    }
    Ok(s.idempotent(class_index))
}

// ============================================================================
// Entry-value classes
// ============================================================================

/// The distinct entry values of a matrix, clustered by single linkage with a
/// gap threshold, plus the per-entry class assignment.
#[derive(Debug, Clone)]
pub struct EntryClasses {
    /// Ascending class representatives (class means).
    pub values: Vec<f64>,
    /// n × n matrix of class indices into `values`.
    pub class_matrix: DMatrix<usize>,
}

impl EntryClasses {
    pub fn count(&self) -> usize {
        self.values.len()
    }
}

/// Single-linkage clustering of the multiset of matrix entries: a new class
/// starts wherever the gap between consecutive sorted entries exceeds `tol`.
/// Deterministic; ties broken by ascending value.
pub fn entry_classes(m: &DMatrix<f64>, tol: f64) -> EntryClasses {
    let (rows, cols) = m.shape();
    let mut entries: Vec<(f64, usize)> = m.iter().copied().zip(0..rows * cols).collect();
    entries.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite entries"));

    let mut values = Vec::new();
    let mut class_matrix = DMatrix::zeros(rows, cols);
    let mut start = 0;
    while start < entries.len() {
        let mut end = start + 1;
        while end < entries.len() && entries[end].0 - entries[end - 1].0 <= tol {
            end += 1;
        }
        let class = values.len();
        let mean = entries[start..end].iter().map(|e| e.0).sum::<f64>() / (end - start) as f64;
        values.push(mean);
        for &(_, flat) in &entries[start..end] {
            // nalgebra iterates column-major
            class_matrix[(flat % rows, flat / rows)] = class;
        }
        start = end;
    }
    EntryClasses { values, class_matrix }
}

/// Dimension of the entrywise algebra ⟨J, E⟩∘, which equals the number of
/// distinct entry values of E (Vandermonde on the entry values).
pub fn hadamard_dim(e: &Idempotent, tol: f64) -> usize {
    entry_classes(&e.matrix, tol).count()
}

const ORACLE_PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % ORACLE_PRIME as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, ORACLE_PRIME - 2)
}

/// Brute-force span oracle for the entrywise algebra ⟨J, M⟩∘: the rank of
/// the family `{J, M, M∘M, ...}` computed exactly. Entries are snapped to
/// the grid of width `tol` (the only well-posed reading of floating-point
/// data at that resolution) and the entrywise power family of the resulting
/// integer vector is row-reduced over a prime field. The iteration stops at
/// the first dependent power: entrywise multiplication maps the span into
/// itself, so every later power is dependent too. `max_power` caps the
/// number of powers taken. Independent of [`hadamard_dim`]'s entry-counting
/// route: no entries are ever sorted or compared against each other.
pub fn hadamard_span_oracle(m: &DMatrix<f64>, max_power: usize, tol: f64) -> usize {
    let len = m.nrows() * m.ncols();
    let step = tol.max(1e-12);
    let values: Vec<u64> = m
        .iter()
        .map(|&x| {
            let q = (x / step).round() as i64;
            q.rem_euclid(ORACLE_PRIME as i64) as u64
        })
        .collect();

    // reduced pivot rows of the power family, built by streaming elimination
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut power = vec![1u64; len];
    for _ in 0..=max_power.min(len) {
        let mut row = power.clone();
        for (col, pivot_row) in &pivots {
            let factor = row[*col];
            if factor != 0 {
                for (r, p) in row.iter_mut().zip(pivot_row) {
                    *r = (*r + ORACLE_PRIME - mul_mod(factor, *p)) % ORACLE_PRIME;
                }
            }
        }
        match row.iter().position(|&v| v != 0) {
            None => break,
            Some(col) => {
                let scale = inv_mod(row[col]);
                for r in row.iter_mut() {
                    *r = mul_mod(*r, scale);
                }
                pivots.push((col, row));
            }
        }
        for (p, &v) in power.iter_mut().zip(&values) {
            *p = mul_mod(*p, v);
        }
    }
    pivots.len()
}

// ============================================================================
// Two-valued decomposition (E = θ₀ K + θ₁ (J − K))
// ============================================================================

/// A two-entry idempotent resolved into its 01 part: `E = θ₀K + θ₁(J − K)`
/// with `θ₀ = m/v`, `θ₁ = −1/v`, and `K` an equivalence relation with
/// `m + 1` classes of size `v/(m+1)`.
#[derive(Debug, Clone)]
pub struct TwoValuedDecomposition {
    pub theta0: f64,
    pub theta1: f64,
    /// 01 matrix of the equivalence relation.
    pub k: DMatrix<i64>,
    /// Rank of the idempotent (= number of classes minus one).
    pub m: usize,
    /// Equivalence classes of `K`, each sorted, ordered by minimum vertex.
    pub cells: Vec<Vec<usize>>,
}

/// Attempts the two-valued decomposition of an idempotent with vanishing row
/// sums. Returns `None` when the entry count differs from two; returns a
/// structural-violation error when the entries are two-valued but the
/// implied `K` is not a well-formed equivalence relation (which exact
/// arithmetic forbids, so it flags numerical trouble).
pub fn two_valued_decomposition(
    e: &Idempotent,
    tol: f64,
) -> Result<Option<TwoValuedDecomposition>> {
    let v = e.matrix.nrows();
    let vf = v as f64;
    let row_sum_bound = tol * vf;
    for i in 0..v {
        let s: f64 = e.matrix.row(i).sum();
        if s.abs() > row_sum_bound.max(1e-10) {
            return Err(Error::Precondition(format!(
                "idempotent row sums must vanish (row {i} sums to {s:.3e})"
            )));
        }
    }
    let classes = entry_classes(&e.matrix, tol);
    if classes.count() != 2 {
        return Ok(None);
    }
    let theta1 = classes.values[0];
    let theta0 = classes.values[1];
    let m = e.rank;
    let mf = m as f64;

    let structural = |msg: String| Err(Error::Structural(msg));

    if (theta0 - mf / vf).abs() > tol || (theta1 + 1.0 / vf).abs() > tol {
        return structural(format!(
            "two-valued entries ({theta0}, {theta1}) differ from (m/v, -1/v) = ({}, {})",
            mf / vf,
            -1.0 / vf
        ));
    }

    // K = (vE + J)/(m+1), rounded to 01.
    let mut k = DMatrix::<i64>::zeros(v, v);
    let round_bound = (tol * vf * 10.0).max(1e-8);
    for i in 0..v {
        for j in 0..v {
            let x = (vf * e.matrix[(i, j)] + 1.0) / (mf + 1.0);
            if (x - 1.0).abs() <= round_bound {
                k[(i, j)] = 1;
            } else if x.abs() > round_bound {
                return structural(format!("entry ({i},{j}) of K rounds to {x}, not 0/1"));
            }
        }
    }

    // K must be reflexive, symmetric (it is, E is symmetric), and transitive,
    // with m+1 classes of size v/(m+1).
    for i in 0..v {
        if k[(i, i)] != 1 {
            return structural(format!("K not reflexive at vertex {i}"));
        }
    }
    if !v.is_multiple_of(m + 1) {
        return structural(format!("(m+1) = {} does not divide v = {v}", m + 1));
    }
    let class_size = v / (m + 1);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut cell_of = vec![usize::MAX; v];
    for i in 0..v {
        if cell_of[i] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (0..v).filter(|&j| k[(i, j)] == 1).collect();
        for &j in &members {
            if cell_of[j] != usize::MAX {
                return structural(format!("K not transitive near vertex {j}"));
            }
            cell_of[j] = cells.len();
        }
        // transitivity: all members must share identical rows
        for &j in &members {
            if k.row(j) != k.row(i) {
                return structural(format!("K rows of {i} and {j} disagree"));
            }
        }
        if members.len() != class_size {
            return structural(format!(
                "K-class of vertex {i} has size {}, expected {class_size}",
                members.len()
            ));
        }
        cells.push(members);
    }
    if cells.len() != m + 1 {
        return structural(format!("K has {} classes, expected {}", cells.len(), m + 1));
    }
    Ok(Some(TwoValuedDecomposition { theta0, theta1, k, m, cells }))
}

/// When the whole spectrum is integral, validates that the idempotent's
/// entries are exact rationals with denominator `v · ∏_{μ≠λ}(λ−μ)`.
/// Returns `None` when the spectrum is not integral (float-only mode).
pub fn rational_idempotent_check(e: &Idempotent, spec: &Spectrum, tol: f64) -> Option<bool> {
    let lambda = e.eigenvalue;
    let mut denom: f64 = spec.n as f64;
    for class in &spec.classes {
        let mu = class.int_value? as f64;
        if (mu - lambda).abs() > 0.5 {
            denom *= lambda - mu;
        }
    }
    let denom = denom.abs();
    let bound = (tol * denom * spec.n as f64).max(1e-8);
    Some(
        e.matrix
            .iter()
            .all(|&x| ((x * denom) - (x * denom).round()).abs() <= bound),
    )
}
