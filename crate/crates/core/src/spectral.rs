//! Floating-point spectra of Hodge Laplacians and the left-padded partial order on
//! finite sequences.
//!
//! Sequences are compared after sorting ascending and prepending zeros to the shorter
//! one. Spectra never decide Betti numbers here; the exact nullity is authoritative and
//! zero counts are only cross-checked against it.

use nalgebra::DMatrix;

use crate::complex::{Cell, DeltaComplex};
use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;
use crate::operator::{hodge_blocks, laplacian};

/// Eigenvalues below this count as zero when cross-checking exact nullities.
pub const ZERO_THRESHOLD: f64 = 1e-9;

/// Per-entry absolute tolerance of the eigenvalue inequalities checked on complexes.
pub const ORDER_TOL: f64 = 1e-8;

/// Ascending eigenvalues.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Self(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn zero_count(&self, threshold: f64) -> usize {
        self.0.iter().filter(|v| v.abs() < threshold).count()
    }

    pub fn scaled(&self, factor: f64) -> Spectrum {
        Spectrum::new(self.0.iter().map(|v| v * factor).collect())
    }
}

fn to_dmatrix(m: &IntegerMatrix) -> DMatrix<f64> {
    DMatrix::from_row_iterator(m.rows(), m.cols(), m.as_slice().iter().map(|&v| v as f64))
}

/// All eigenvalues of a symmetric integer matrix, ascending.
pub fn eigenvalues(m: &IntegerMatrix) -> Result<Spectrum> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if m.rows() == 0 {
        return Ok(Spectrum::default());
    }
    let eig = to_dmatrix(m).symmetric_eigen();
    Ok(Spectrum::new(eig.eigenvalues.iter().copied().collect()))
}

/// Eigenvalues with unit eigenvectors, ascending by eigenvalue.
pub fn eigenpairs(m: &IntegerMatrix) -> Result<Vec<(f64, Vec<f64>)>> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if m.rows() == 0 {
        return Ok(Vec::new());
    }
    let eig = to_dmatrix(m).symmetric_eigen();
    let mut pairs: Vec<(f64, Vec<f64>)> = eig
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(k, &l)| (l, eig.eigenvectors.column(k).iter().copied().collect()))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(pairs)
}

/// Spectrum of the full `L = D²`.
pub fn laplacian_spectrum(g: &DeltaComplex) -> Spectrum {
    eigenvalues(&laplacian(g)).expect("D² is symmetric")
}

/// Spectra of `L_0, …, L_q`.
pub fn block_spectra(g: &DeltaComplex) -> Result<Vec<Spectrum>> {
    hodge_blocks(g)?.iter().map(eigenvalues).collect()
}

fn sorted(x: &[f64]) -> Vec<f64> {
    let mut v = x.to_vec();
    v.sort_by(f64::total_cmp);
    v
}

/// Sorted and left-padded with zeros to `len` entries.
pub fn left_pad(x: &[f64], len: usize) -> Vec<f64> {
    let v = sorted(x);
    let mut out = vec![0.0; len.saturating_sub(v.len())];
    out.extend(v);
    out
}

/// Two sequences sorted and left-padded to equal length.
#[derive(Clone, Debug, PartialEq)]
pub struct PaddedPair {
    pub left: Vec<f64>,
    pub right: Vec<f64>,
}

impl PaddedPair {
    pub fn new(x: &[f64], y: &[f64]) -> Self {
        let n = x.len().max(y.len());
        Self {
            left: left_pad(x, n),
            right: left_pad(y, n),
        }
    }

    /// Largest `left_k - right_k`, or `-∞` for empty sequences.
    pub fn max_excess(&self) -> f64 {
        self.left
            .iter()
            .zip(&self.right)
            .map(|(a, b)| a - b)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// `x ≤ y` in the spectral partial order, with per-entry tolerance
/// `1e-9·(1 + max|entry|)`.
pub fn seq_leq(x: &[f64], y: &[f64]) -> bool {
    let p = PaddedPair::new(x, y);
    let scale = p
        .left
        .iter()
        .chain(&p.right)
        .fold(0.0f64, |m, v| m.max(v.abs()));
    seq_leq_padded(&p, 1e-9 * (1.0 + scale))
}

/// `x ≤ y` with an absolute per-entry tolerance.
pub fn seq_leq_abs(x: &[f64], y: &[f64], tol: f64) -> bool {
    seq_leq_padded(&PaddedPair::new(x, y), tol)
}

fn seq_leq_padded(p: &PaddedPair, tol: f64) -> bool {
    p.left.iter().zip(&p.right).all(|(a, b)| *a <= b + tol)
}

/// Entrywise sum of the left-padded sequences.
pub fn seq_sum(x: &[f64], y: &[f64]) -> Vec<f64> {
    let p = PaddedPair::new(x, y);
    p.left.iter().zip(&p.right).map(|(a, b)| a + b).collect()
}

/// Sorted multiset union.
pub fn seq_merge(x: &[f64], y: &[f64]) -> Vec<f64> {
    let mut v: Vec<f64> = x.iter().chain(y).copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

pub fn seq_scale(x: &[f64], factor: f64) -> Vec<f64> {
    sorted(x).into_iter().map(|v| v * factor).collect()
}

/// Sum of two square matrices after padding the smaller one with zero rows and columns
/// at the upper left.
pub fn padded_sum(a: &IntegerMatrix, b: &IntegerMatrix) -> IntegerMatrix {
    let n = a.rows().max(b.rows());
    let mut out = IntegerMatrix::zeros(n, n);
    for m in [a, b] {
        let off = n - m.rows();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out[(off + i, off + j)] += m[(i, j)];
            }
        }
    }
    out
}

/// `A ≤ B` in the spectral order of symmetric matrices.
pub fn matrix_leq(a: &IntegerMatrix, b: &IntegerMatrix) -> Result<bool> {
    Ok(seq_leq(eigenvalues(a)?.values(), eigenvalues(b)?.values()))
}

/// Outcome of comparing the spectrum of a closed or open subset with that of `G`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonotonicityReport {
    /// `σ(L_A) ≤ σ(L_G)` for the whole Laplacians.
    pub whole: bool,
    /// The same comparison for each Hodge block `p`.
    pub per_block: Vec<bool>,
    pub max_excess: f64,
}

impl MonotonicityReport {
    pub fn holds(&self) -> bool {
        self.whole && self.per_block.iter().all(|&b| b)
    }
}

/// Checks `λ_k(L_A) ≤ λ_k(L_G)` for a closed or open `A ⊆ G`.
pub fn check_monotonicity(g: &DeltaComplex, a: &[Cell]) -> Result<MonotonicityReport> {
    let mask = g.mask_of(a)?;
    let class = g.classify_mask(&mask);
    if !class.is_open() && !class.is_closed() {
        return Err(Error::NeitherOpenNorClosed);
    }
    let sub = g.restrict_mask(&mask);
    Ok(monotonicity(g, &sub))
}

pub(crate) fn monotonicity(g: &DeltaComplex, sub: &DeltaComplex) -> MonotonicityReport {
    let sg = laplacian_spectrum(g);
    let ss = laplacian_spectrum(sub);
    let pair = PaddedPair::new(ss.values(), sg.values());
    let whole = seq_leq_padded(&pair, ORDER_TOL);
    let bg = block_spectra(g).unwrap_or_default();
    let bs = block_spectra(sub).unwrap_or_default();
    let per_block = (0..bg.len().max(bs.len()))
        .map(|p| {
            let empty = Spectrum::default();
            seq_leq_abs(
                bs.get(p).unwrap_or(&empty).values(),
                bg.get(p).unwrap_or(&empty).values(),
                ORDER_TOL,
            )
        })
        .collect();
    MonotonicityReport {
        whole,
        per_block,
        max_excess: pair.max_excess(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FusionBoundReport {
    /// `σ(L_K) ⊕ σ(L_U) ≤ 2σ(L_G)`.
    pub holds: bool,
    /// `σ(L_K ⊕ L_U) = σ(L_K) ⊕ σ(L_U)` within tolerance.
    pub merge_identity: bool,
    pub max_excess: f64,
}

/// Checks the eigenvalue bound behind the fusion inequality for a closed `K ⊆ G`.
pub fn check_fusion_bound(g: &DeltaComplex, k: &[Cell]) -> Result<FusionBoundReport> {
    let mask = g.mask_of(k)?;
    if let Some((i, j)) = g.closed_violation(&mask) {
        return Err(Error::NotClosed {
            cell: g.cell(i).clone(),
            missing_face: g.cell(j).clone(),
        });
    }
    let kc = g.restrict_mask(&mask);
    let uc = g.restrict_mask(&mask.iter().map(|m| !m).collect::<Vec<_>>());
    Ok(fusion_bound(g, &kc, &uc))
}

pub(crate) fn fusion_bound(g: &DeltaComplex, k: &DeltaComplex, u: &DeltaComplex) -> FusionBoundReport {
    let lk = laplacian(k);
    let lu = laplacian(u);
    let sk = eigenvalues(&lk).expect("symmetric");
    let su = eigenvalues(&lu).expect("symmetric");
    let merged = seq_merge(sk.values(), su.values());
    let doubled = laplacian_spectrum(g).scaled(2.0);
    let pair = PaddedPair::new(&merged, doubled.values());
    let direct = eigenvalues(&lk.direct_sum(&lu)).expect("symmetric");
    let merge_identity = direct.len() == merged.len()
        && direct
            .values()
            .iter()
            .zip(&merged)
            .all(|(a, b)| (a - b).abs() <= ORDER_TOL * (1.0 + b.abs()));
    FusionBoundReport {
        holds: seq_leq_padded(&pair, ORDER_TOL),
        merge_identity,
        max_excess: pair.max_excess(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_examples() {
        assert!(seq_leq(&[1.0, 2.0, 4.0], &[0.0, 0.0, 2.0, 3.0, 5.0]));
        let x = [0.5, 3.0, 1.0];
        assert!(seq_leq(&x, &x));
        assert!(!seq_leq(&[1.0, 2.0], &[0.5, 3.0]));
    }

    #[test]
    fn negative_entries_against_zero_padding() {
        // (-1,2,3,5) against (0,0,4,6): 2 <= 0 fails once the shorter side is padded.
        assert!(!seq_leq(&[-1.0, 2.0, 3.0, 5.0], &[4.0, 6.0]));
        assert!(seq_leq(&[3.0, 5.0], &[4.0, 6.0]));
    }

    #[test]
    fn sum_and_merge_examples() {
        assert_eq!(seq_sum(&[1.0, 2.0, 3.0], &[3.0, 7.0, 8.0, 9.0]), vec![3.0, 8.0, 10.0, 12.0]);
        assert_eq!(
            seq_merge(&[1.0, 2.0, 3.0], &[3.0, 7.0, 8.0, 9.0]),
            vec![1.0, 2.0, 3.0, 3.0, 7.0, 8.0, 9.0]
        );
        assert_eq!(seq_sum(&[1.0, 4.0], &[]), vec![1.0, 4.0]);
    }

    #[test]
    fn eigenvalue_examples() {
        let s = eigenvalues(&IntegerMatrix::identity(3)).unwrap();
        assert_eq!(s.values(), &[1.0, 1.0, 1.0]);
        let s = eigenvalues(&IntegerMatrix::identity(4).scale(2)).unwrap();
        assert!(s.values().iter().all(|v| (v - 2.0).abs() < 1e-12));
        assert!(eigenvalues(&IntegerMatrix::zeros(0, 0)).unwrap().is_empty());
        assert!(matches!(
            eigenvalues(&IntegerMatrix::from_rows(&[[0, 1], [0, 0]])),
            Err(Error::NotSymmetric)
        ));
    }

    #[test]
    fn eigenpair_residuals() {
        let m = IntegerMatrix::from_rows(&[[2, 1, -1], [1, 2, 1], [-1, 1, 2]]);
        let norm = m.max_abs() as f64 * 3.0;
        for (l, v) in eigenpairs(&m).unwrap() {
            for i in 0..3 {
                let mv: f64 = (0..3).map(|j| m[(i, j)] as f64 * v[j]).sum();
                assert!((mv - l * v[i]).abs() <= 1e-8 * norm);
            }
        }
    }

    #[test]
    fn padded_sum_aligns_bottom_right() {
        let a = IntegerMatrix::from_rows(&[[1]]);
        let b = IntegerMatrix::from_rows(&[[2, 0], [0, 3]]);
        assert_eq!(padded_sum(&a, &b), IntegerMatrix::from_rows(&[[2, 0], [0, 4]]));
    }
}
