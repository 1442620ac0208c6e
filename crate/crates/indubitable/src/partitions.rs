//! Equitable and indubitable partitions.
//!
//! The combinatorial route (exact integer neighbor counting on the adjacency
//! matrix) and the spectral route (two-valued idempotents) describe the same
//! objects; cross-validating the two is the core of this module. Cells are
//! canonically ordered by minimum vertex label, ascending within cells, so
//! partitions compare for equality deterministically.

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::spectral::{self, Idempotent, Spectrum};
use nalgebra::DMatrix;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// A partition of `{0, .., n-1}` into disjoint, covering, nonempty cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
    n: usize,
}

impl Partition {
    /// Validates disjointness and coverage, then canonicalizes cell order.
    pub fn new(cells: Vec<Vec<usize>>, n: usize) -> Result<Partition> {
        let mut seen = vec![false; n];
        for cell in &cells {
            if cell.is_empty() {
                return Err(Error::Partition("empty cell".into()));
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::Partition(format!(
                        "vertex {v} out of range for order {n}"
                    )));
                }
                if seen[v] {
                    return Err(Error::Partition(format!("vertex {v} appears twice")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::Partition(format!("vertex {v} not covered")));
        }
        let mut cells: Vec<Vec<usize>> = cells
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        cells.sort_by_key(|c| c[0]);
        Ok(Partition { cells, n })
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cell_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                out[v] = i;
            }
        }
        out
    }

    /// The n × (cell count) 01 characteristic matrix P.
    pub fn characteristic_matrix(&self) -> DMatrix<i64> {
        let mut p = DMatrix::zeros(self.n, self.cells.len());
        for (j, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                p[(v, j)] = 1;
            }
        }
        p
    }

    /// K = P Pᵀ, the 01 matrix of the cell equivalence relation.
    pub fn relation_matrix(&self) -> DMatrix<i64> {
        let p = self.characteristic_matrix();
        &p * p.transpose()
    }

    /// Parses the partition text format: one cell per line, space-separated
    /// vertex labels.
    pub fn parse(text: &str, n: usize) -> Result<Partition> {
        let mut cells = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let cell: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::Partition(format!("bad vertex label {t:?}")))
                })
                .collect::<Result<_>>()?;
            cells.push(cell);
        }
        Partition::new(cells, n)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for cell in &self.cells {
            let labels: Vec<String> = cell.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", labels.join(" "));
        }
        out
    }
}

/// Quotient matrix of an equitable partition: `Q[i][j]` is the number of
/// neighbors in cell `j` of any vertex of cell `i`; satisfies `AP = PQ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientResult {
    pub q: DMatrix<i64>,
}

/// Exact integer check of equitability. Returns the quotient matrix iff each
/// cell-to-cell neighbor count is constant.
pub fn quotient_if_equitable(g: &Graph, pi: &Partition) -> Result<Option<QuotientResult>> {
    if pi.n() != g.n() {
        return Err(Error::Partition(format!(
            "partition of order {} does not match graph of order {}",
            pi.n(),
            g.n()
        )));
    }
    let cell_of = pi.cell_of();
    let s = pi.cell_count();
    let mut q = DMatrix::<i64>::zeros(s, s);
    for (i, cell) in pi.cells().iter().enumerate() {
        let mut counts = vec![0i64; s];
        for &u in cell {
            let mut local = vec![0i64; s];
            for w in g.neighbors(u) {
                local[cell_of[w]] += 1;
            }
            if u == cell[0] {
                counts = local;
            } else if counts != local {
                return Ok(None);
            }
        }
        for j in 0..s {
            q[(i, j)] = counts[j];
        }
    }
    debug_assert_eq!(g.adj() * pi.characteristic_matrix(), pi.characteristic_matrix() * &q);
    Ok(Some(QuotientResult { q }))
}

/// Present iff the partition is equitable with quotient `aI + b(J − I)`.
pub fn indubitable_params(g: &Graph, pi: &Partition) -> Result<Option<(i64, i64)>> {
    if !graph::is_connected(g) {
        return Err(Error::Disconnected);
    }
    let Some(QuotientResult { q }) = quotient_if_equitable(g, pi)? else {
        return Ok(None);
    };
    let s = pi.cell_count();
    let a = q[(0, 0)];
    let b = if s > 1 { q[(0, 1)] } else { 0 };
    for i in 0..s {
        for j in 0..s {
            let expected = if i == j { a } else { b };
            if q[(i, j)] != expected {
                return Ok(None);
            }
        }
    }
    Ok(Some((a, b)))
}

/// Predicted indubitable parameters for a k-regular graph, eigenvalue λ, and
/// r + 1 cells: `a = λ + (k−λ)/(r+1)`, `b = (k−λ)/(r+1)`.
pub fn predicted_params(k: i64, lambda: f64, r: usize) -> (f64, f64) {
    assert!(r >= 1);
    let b = (k as f64 - lambda) / (r as f64 + 1.0);
    (lambda + b, b)
}

/// A verified indubitable partition together with its parameters and the
/// eigenvalue data that makes it full.
#[derive(Debug, Clone)]
pub struct IndubitableReport {
    pub partition: Partition,
    pub a: i64,
    pub b: i64,
    /// λ = a − b, reported as the representative of its eigenvalue class.
    pub eigenvalue: f64,
    pub is_full: bool,
    pub multiplicity: usize,
}

/// Theorem-1 forward direction: extracts the full indubitable partition for
/// eigenvalue class `class_index` from the spectral idempotent, when the
/// idempotent is two-valued. Returns `None` when dim ⟨J,E⟩∘ ≠ 2.
///
/// The extracted partition is re-verified combinatorially; a mismatch there
/// is a consistency error, since the theorem equates the two routes.
pub fn partition_from_idempotent(
    g: &Graph,
    spec: &Spectrum,
    class_index: usize,
    tol: f64,
) -> Result<Option<IndubitableReport>> {
    let profile = graph::basic_profile(g);
    if !profile.connected {
        return Err(Error::Disconnected);
    }
    if profile.regular_degree.is_none() {
        return Err(Error::NotRegular);
    }
    if class_index >= spec.classes.len() {
        return Err(Error::Precondition(format!(
            "class index {class_index} out of range ({} classes)",
            spec.classes.len()
        )));
    }
    let e = spec.idempotent(class_index);
    let Some(d) = spectral::two_valued_decomposition(&e, tol)? else {
        return Ok(None);
    };
    let pi = Partition::new(d.cells, g.n())?;
    let lambda = e.eigenvalue;
    let m = e.rank;
    let Some((a, b)) = indubitable_params(g, &pi)? else {
        return Err(Error::Consistency(format!(
            "two-valued idempotent at λ = {lambda} produced a non-indubitable partition"
        )));
    };
    if ((a - b) as f64 - lambda).abs() > tol * spec.scale + 1e-9 {
        return Err(Error::Consistency(format!(
            "partition parameters ({a},{b}) disagree with eigenvalue {lambda}"
        )));
    }
    if pi.cell_count() != m + 1 {
        return Err(Error::Consistency(format!(
            "extracted partition has {} cells, expected m + 1 = {}",
            pi.cell_count(),
            m + 1
        )));
    }
    Ok(Some(IndubitableReport {
        partition: pi,
        a,
        b,
        eigenvalue: lambda,
        is_full: true,
        multiplicity: m,
    }))
}

/// Theorem-1 backward direction: builds `E = ((m+1)/v)·PPᵀ − (1/v)·J` from a
/// full indubitable partition and verifies it is the spectral idempotent of
/// λ (AE = λE, E² = E, trace E = m).
pub fn idempotent_from_partition(
    g: &Graph,
    pi: &Partition,
    lambda: f64,
    tol: f64,
) -> Result<Idempotent> {
    let spec = spectral::spectrum(g, tol)?;
    let idx = spec
        .class_of(lambda, tol)
        .ok_or_else(|| Error::Precondition(format!("{lambda} is not an eigenvalue")))?;
    let m = spec.classes[idx].multiplicity;
    let lambda = spec.classes[idx].value;
    let Some((a, b)) = indubitable_params(g, pi)? else {
        return Err(Error::Precondition("partition is not indubitable".into()));
    };
    if ((a - b) as f64 - lambda).abs() > tol * spec.scale + 1e-9 {
        return Err(Error::Precondition(format!(
            "partition parameters ({a},{b}) do not correspond to eigenvalue {lambda}"
        )));
    }
    if pi.cell_count() != m + 1 {
        return Err(Error::Precondition(format!(
            "partition has {} cells but multiplicity of {lambda} needs {}",
            pi.cell_count(),
            m + 1
        )));
    }
    let v = g.n() as f64;
    let k = pi.relation_matrix().map(|x| x as f64);
    let e = k * ((m as f64 + 1.0) / v) - DMatrix::from_element(g.n(), g.n(), 1.0 / v);

    let bound = (tol * spec.scale * g.n() as f64).max(1e-9);
    let ae = g.adj_f64() * &e;
    if (ae - &e * lambda).abs().max() > bound {
        return Err(Error::Consistency("AE = λE failed for reconstructed idempotent".into()));
    }
    if (&e * &e - &e).abs().max() > bound {
        return Err(Error::Consistency("E² = E failed for reconstructed idempotent".into()));
    }
    if (e.trace() - m as f64).abs() > bound {
        return Err(Error::Consistency("trace E = m failed for reconstructed idempotent".into()));
    }
    Ok(Idempotent { matrix: e, eigenvalue: lambda, rank: m })
}

/// True iff the diagonal of the idempotent is constant within tol.
pub fn constant_diagonal_check(e: &Idempotent, tol: f64) -> bool {
    let diag = e.matrix.diagonal();
    let max = diag.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = diag.iter().cloned().fold(f64::INFINITY, f64::min);
    max - min <= tol
}

/// Census of full indubitable partitions over all eigenvalue classes except
/// the Perron class (whose full partition would need b = 0, impossible for a
/// connected graph).
#[derive(Debug, Clone)]
pub struct CensusOutcome {
    pub spectrum: Spectrum,
    /// Hadamard-algebra dimension of every class, Perron included.
    pub hadamard_dims: Vec<usize>,
    /// class index → report, for every class whose idempotent is two-valued.
    pub full: BTreeMap<usize, IndubitableReport>,
}

pub fn full_indubitable_census(g: &Graph, tol: f64) -> Result<CensusOutcome> {
    let profile = graph::basic_profile(g);
    if !profile.connected {
        return Err(Error::Disconnected);
    }
    if profile.regular_degree.is_none() {
        return Err(Error::NotRegular);
    }
    let spec = spectral::spectrum(g, tol)?;
    let mut hadamard_dims = Vec::with_capacity(spec.classes.len());
    let mut full = BTreeMap::new();
    for idx in 0..spec.classes.len() {
        let e = spec.idempotent(idx);
        hadamard_dims.push(spectral::hadamard_dim(&e, tol));
        if idx == 0 {
            continue;
        }
        if let Some(report) = partition_from_idempotent(g, &spec, idx, tol)? {
            full.insert(idx, report);
        }
    }
    Ok(CensusOutcome { spectrum: spec, hadamard_dims, full })
}
