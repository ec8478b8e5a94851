//! Betti vectors as exact nullities of the Hodge blocks, harmonic bases, and the
//! Euler–Poincaré and McKean–Singer identities.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::complex::{alternating_sum, write_tuple, DeltaComplex};
use crate::error::{Error, Result};
use crate::exact::{integer_kernel, integer_nullity, sparse_integer_rank, SparseRow};
use crate::operator::{d_squared, face_lists, hodge_blocks, is_valid_delta};
use crate::spectral;

/// `b = (b_0, …, b_q)`. Its length is the top dimension plus one, trailing zeros kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    pub fn new(v: Vec<usize>) -> Self {
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }

    /// Right-padded with zeros to at least `len` entries.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }

    pub fn alternating_sum(&self) -> i64 {
        alternating_sum(&self.0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl From<Vec<usize>> for BettiVector {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

/// `b_p = dim ker L_p`, computed exactly. Since `L_p = AᵀA` for the stacked incidence
/// matrix `A = [d_p; d_{p-1}ᵀ]`, the kernel of `L_p` is that of `A`, whose ±1 entries
/// keep sparse elimination small.
pub fn betti(g: &DeltaComplex) -> Result<BettiVector> {
    if !is_valid_delta(g) {
        return Err(Error::NotDeltaSet {
            d_squared: d_squared(g),
        });
    }
    let faces = face_lists(g);
    let r = g.markers();
    let mut rows: Vec<Vec<SparseRow<i64>>> = vec![Vec::new(); r.len().saturating_sub(1)];
    for (i, f) in faces.iter().enumerate() {
        let p = g.dim_at(i);
        if f.is_empty() {
            continue;
        }
        // row of d_{p-1}: the cell against its faces
        let mut row: SparseRow<i64> = f.iter().map(|&(j, s)| (j - r[p - 1], s)).collect();
        row.sort_unstable();
        rows[p - 1].push(row);
    }
    let mut transposed: Vec<SparseRow<i64>> = vec![Vec::new(); g.len()];
    for (i, f) in faces.iter().enumerate() {
        let p = g.dim_at(i);
        for &(j, s) in f {
            transposed[j].push((i - r[p], s));
        }
    }
    for (k, row) in transposed.into_iter().enumerate() {
        if !row.is_empty() {
            rows[g.dim_at(k) + 1].push(row);
        }
    }
    Ok(BettiVector(
        rows.iter()
            .enumerate()
            .map(|(p, a)| {
                let f = r[p + 1] - r[p];
                f - sparse_integer_rank(f, a)
            })
            .collect(),
    ))
}

/// `b_p` as the nullity of the Hodge block `L_p` itself. Agrees with [`betti`].
pub fn betti_laplacian(g: &DeltaComplex) -> Result<BettiVector> {
    let blocks = hodge_blocks(g)?;
    Ok(BettiVector(blocks.iter().map(integer_nullity).collect()))
}

/// Per dimension, a kernel basis of `L_p` embedded as length-`n` vectors supported on
/// the `p`-cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicBasis {
    pub n: usize,
    pub per_dim: Vec<Vec<Vec<BigInt>>>,
}

impl HarmonicBasis {
    pub fn counts(&self) -> BettiVector {
        BettiVector(self.per_dim.iter().map(Vec::len).collect())
    }

    pub fn dim(&self, p: usize) -> &[Vec<BigInt>] {
        self.per_dim.get(p).map_or(&[], Vec::as_slice)
    }
}

pub fn harmonic_basis(g: &DeltaComplex) -> Result<HarmonicBasis> {
    let blocks = hodge_blocks(g)?;
    let r = g.markers();
    let per_dim = blocks
        .iter()
        .enumerate()
        .map(|(p, block)| {
            integer_kernel(block)
                .vectors
                .into_iter()
                .map(|local| {
                    let mut v = vec![BigInt::zero(); g.len()];
                    for (k, x) in local.into_iter().enumerate() {
                        v[r[p] + k] = x;
                    }
                    v
                })
                .collect()
        })
        .collect();
    Ok(HarmonicBasis { n: g.len(), per_dim })
}

/// `Σ (-1)^p f_p = Σ (-1)^p b_p`. Errors for sets that are not Δ-sets.
pub fn euler_poincare_check(g: &DeltaComplex) -> Result<bool> {
    let b = betti(g)?;
    Ok(g.euler_characteristic() == b.alternating_sum())
}

/// `str(e^{-tL}) = Σ_p (-1)^p Σ_j exp(-t λ_j(L_p))` from floating-point block spectra.
pub fn mckean_singer_supertrace(g: &DeltaComplex, t: f64) -> Result<f64> {
    let spectra = spectral::block_spectra(g)?;
    Ok(spectra
        .iter()
        .enumerate()
        .map(|(p, s)| {
            let sum: f64 = s.values().iter().map(|&l| (-t * l).exp()).sum();
            if p % 2 == 0 {
                sum
            } else {
                -sum
            }
        })
        .sum())
}

/// `b_0 + b_1 t + … + b_q t^q`. Coefficients are signed so that products and
/// differences of polynomials stay in the type.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PoincarePolynomial {
    pub coeffs: Vec<i64>,
}

impl PoincarePolynomial {
    pub fn from_betti(b: &BettiVector) -> Self {
        Self {
            coeffs: b.0.iter().map(|&x| x as i64).collect(),
        }
    }

    /// Horner evaluation.
    pub fn evaluate(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, &c| {
                acc * t + BigRational::from_integer(BigInt::from(c))
            })
    }

    pub fn evaluate_int(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * t + c)
    }

    /// Coefficient convolution.
    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::default();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }
}

pub fn poincare_polynomial(b: &BettiVector) -> PoincarePolynomial {
    PoincarePolynomial::from_betti(b)
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".into(),
                (1, c) => format!("{c}t"),
                (k, 1) => format!("t^{k}"),
                (k, c) => format!("{c}t^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Whether `L·form = 0` exactly.
pub fn is_harmonic(g: &DeltaComplex, form: &[BigInt]) -> Result<bool> {
    if form.len() != g.len() {
        return Err(Error::FormLength {
            expected: g.len(),
            got: form.len(),
        });
    }
    let l = crate::operator::laplacian(g);
    Ok((0..g.len()).all(|i| {
        l.row(i)
            .iter()
            .zip(form)
            .map(|(&a, x)| BigInt::from(a) * x)
            .sum::<BigInt>()
            .is_zero()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{closure, Cell};

    fn c(v: &[u32]) -> Cell {
        Cell::new(v.iter().copied()).unwrap()
    }

    fn complex(v: &[&[u32]]) -> DeltaComplex {
        DeltaComplex::from_cells(v.iter().map(|x| c(x))).unwrap()
    }

    #[test]
    fn comma_space_is_acyclic() {
        assert_eq!(betti(&complex(&[&[1], &[1, 2]])).unwrap().0, vec![0, 0]);
    }

    #[test]
    fn open_simplex_carries_top_class() {
        let u = complex(&[&[1, 2, 3]]);
        assert_eq!(betti(&u).unwrap().0, vec![0, 0, 1]);
        let h = harmonic_basis(&u).unwrap();
        assert_eq!(h.dim(2), &[vec![BigInt::from(1)]]);
        assert!(h.dim(0).is_empty());
    }

    #[test]
    fn closed_simplex_is_contractible() {
        let k4 = closure(&[c(&[1, 2, 3, 4])]);
        let h = harmonic_basis(&k4).unwrap();
        assert_eq!(h.counts().0, vec![1, 0, 0, 0]);
        let constant = &h.dim(0)[0];
        assert!(constant[..4].iter().all(|x| *x == BigInt::from(1)));
        assert!(constant[4..].iter().all(Zero::is_zero));
        assert!(is_harmonic(&k4, constant).unwrap());
    }

    #[test]
    fn empty_complex() {
        let e = DeltaComplex::empty();
        assert!(betti(&e).unwrap().is_empty());
        assert!(euler_poincare_check(&e).unwrap());
    }

    #[test]
    fn euler_poincare_fails_loudly_off_delta_sets() {
        let a = complex(&[&[1], &[1, 2], &[1, 2, 3]]);
        assert!(matches!(euler_poincare_check(&a), Err(Error::NotDeltaSet { .. })));
    }

    #[test]
    fn polynomial_examples() {
        let torus = PoincarePolynomial::from_betti(&BettiVector(vec![1, 2, 1]));
        assert_eq!(torus.evaluate_int(-1), 0);
        let sphere = PoincarePolynomial::from_betti(&BettiVector(vec![1, 0, 1]));
        assert_eq!(
            sphere.evaluate(&BigRational::from_integer(BigInt::from(1))),
            BigRational::from_integer(BigInt::from(2))
        );
        assert_eq!(torus.mul(&torus).coeffs, vec![1, 4, 6, 4, 1]);
        assert_eq!(torus.to_string(), "1 + 2t + t^2");
    }

    #[test]
    fn supertrace_at_zero_counts_cells() {
        let g = closure(&[c(&[1, 2, 3])]);
        let s = mckean_singer_supertrace(&g, 0.0).unwrap();
        assert!((s - 1.0).abs() < 1e-12);
    }

    #[test]
    fn incidence_route_matches_laplacian_blocks() {
        use crate::constructions::random_whitney;
        for seed in 0..40 {
            let g = random_whitney(9, 10 + (seed as usize % 15), seed).unwrap();
            assert_eq!(betti(&g).unwrap(), betti_laplacian(&g).unwrap(), "seed {seed}");
        }
        let open = complex(&[&[1, 2], &[1, 2, 3], &[1, 3]]);
        assert_eq!(betti(&open).unwrap(), betti_laplacian(&open).unwrap());
        let dims = DeltaComplex::with_dims([(c(&[3]), 0), (c(&[1, 2]), 1)]).unwrap();
        assert_eq!(betti(&dims).unwrap().0, vec![1, 1]);
    }
}
