//! Exact rational row reduction: rank, nullity and kernel bases.
//!
//! Elimination runs on `Ratio<i128>` with checked arithmetic and restarts on
//! arbitrary-precision rationals if any intermediate value overflows, so results never
//! depend on a tolerance.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, ToPrimitive, Zero};

use crate::matrix::IntegerMatrix;

/// Dense matrix of exact rationals. `0×0` and `0×n` shapes are legal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Self { rows: n, cols, data }
    }

    /// Integer rows, with an explicit column count so that `k×0` shapes survive.
    pub fn from_integer_rows(rows: &[Vec<BigInt>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r.iter().cloned().map(BigRational::from_integer));
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    /// `M·v` for an integer vector.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(BigRational::zero(), |acc, j| {
                    acc + self.get(i, j) * BigRational::from_integer(v[j].clone())
                })
            })
            .collect()
    }

    fn small_entries(&self) -> Option<Vec<Ratio<i128>>> {
        self.data
            .iter()
            .map(|q| Some(Ratio::new(q.numer().to_i128()?, q.denom().to_i128()?)))
            .collect()
    }
}

impl From<&IntegerMatrix> for RationalMatrix {
    fn from(m: &IntegerMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            data: m
                .as_slice()
                .iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        }
    }
}

/// Linearly independent integer vectors (content 1) spanning a kernel.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct KernelBasis {
    pub vectors: Vec<Vec<BigInt>>,
}

impl KernelBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

trait Field: Clone {
    fn is_zero(&self) -> bool;
    /// Size measure used to pick pivots with small numerators and denominators.
    fn height(&self) -> u128;
    fn quotient(&self, pivot: &Self) -> Option<Self>;
    /// `self - f·g`
    fn sub_mul(&self, f: &Self, g: &Self) -> Option<Self>;
    fn to_big(&self) -> BigRational;
}

impl Field for Ratio<i128> {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn height(&self) -> u128 {
        self.numer()
            .unsigned_abs()
            .saturating_mul(self.denom().unsigned_abs())
    }

    fn quotient(&self, pivot: &Self) -> Option<Self> {
        self.checked_div(pivot)
    }

    fn sub_mul(&self, f: &Self, g: &Self) -> Option<Self> {
        self.checked_sub(&f.checked_mul(g)?)
    }

    fn to_big(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

impl Field for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn height(&self) -> u128 {
        (self.numer().bits() + self.denom().bits()) as u128
    }

    fn quotient(&self, pivot: &Self) -> Option<Self> {
        Some(self / pivot)
    }

    fn sub_mul(&self, f: &Self, g: &Self) -> Option<Self> {
        Some(self - f * g)
    }

    fn to_big(&self) -> BigRational {
        self.clone()
    }
}

/// Row echelon form: the non-zero rows and the pivot column of each.
struct Echelon<T> {
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

/// Gaussian elimination. With `reduce` the result is the reduced row echelon form
/// (unique, so kernel representatives are canonical). `None` signals overflow.
fn eliminate<T: Field>(rows: usize, cols: usize, data: Vec<T>, reduce: bool) -> Option<Echelon<T>> {
    let mut m: Vec<Vec<T>> = Vec::with_capacity(rows);
    let mut it = data.into_iter();
    for _ in 0..rows {
        m.push(it.by_ref().take(cols).collect());
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].height())
        else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for j in c..cols {
            if !m[r][j].is_zero() {
                m[r][j] = m[r][j].quotient(&pivot)?;
            }
        }
        let pivot_row = m[r].clone();
        let targets = if reduce { 0..rows } else { r + 1..rows };
        for i in targets {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    m[i][j] = m[i][j].sub_mul(&factor, &pivot_row[j])?;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Some(Echelon { rows: m, pivots })
}

fn echelon_big(m: &RationalMatrix, reduce: bool) -> Echelon<BigRational> {
    if let Some(small) = m.small_entries() {
        if let Some(e) = eliminate(m.rows, m.cols, small, reduce) {
            return Echelon {
                rows: e
                    .rows
                    .iter()
                    .map(|r| r.iter().map(Field::to_big).collect())
                    .collect(),
                pivots: e.pivots,
            };
        }
    }
    eliminate(m.rows, m.cols, m.data.clone(), reduce).expect("big rationals do not overflow")
}

/// `(rank, nullity)` with `rank + nullity = cols`.
pub fn rank_nullity(m: &RationalMatrix) -> (usize, usize) {
    let rank = rank(m);
    (rank, m.cols - rank)
}

fn rank(m: &RationalMatrix) -> usize {
    if let Some(small) = m.small_entries() {
        if let Some(e) = eliminate(m.rows, m.cols, small, false) {
            return e.pivots.len();
        }
    }
    eliminate(m.rows, m.cols, m.data.clone(), false)
        .expect("big rationals do not overflow")
        .pivots
        .len()
}

/// Integer entries for sparse fraction-free elimination.
trait Entry: Clone + PartialEq {
    fn gcd_with(&self, other: &Self) -> Self;
    fn is_zero_entry(&self) -> bool;
    fn is_unit_or_zero(&self) -> bool;
    fn size(&self) -> u128;
    fn div_exact(&self, d: &Self) -> Self;
    fn mul_checked(&self, o: &Self) -> Option<Self>;
    fn sub_checked(&self, o: &Self) -> Option<Self>;
    fn neg_checked(&self) -> Option<Self>;
}

impl Entry for i128 {
    fn gcd_with(&self, other: &Self) -> Self {
        self.gcd(other)
    }
    fn is_zero_entry(&self) -> bool {
        *self == 0
    }
    fn is_unit_or_zero(&self) -> bool {
        self.unsigned_abs() <= 1
    }
    fn size(&self) -> u128 {
        self.unsigned_abs()
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn mul_checked(&self, o: &Self) -> Option<Self> {
        i128::checked_mul(*self, *o)
    }
    fn sub_checked(&self, o: &Self) -> Option<Self> {
        i128::checked_sub(*self, *o)
    }
    fn neg_checked(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Entry for BigInt {
    fn gcd_with(&self, other: &Self) -> Self {
        self.gcd(other)
    }
    fn is_zero_entry(&self) -> bool {
        self.is_zero()
    }
    fn is_unit_or_zero(&self) -> bool {
        self.magnitude() <= &One::one()
    }
    fn size(&self) -> u128 {
        self.bits() as u128
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn mul_checked(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub_checked(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn neg_checked(&self) -> Option<Self> {
        Some(-self)
    }
}

/// A sparse row: strictly increasing column indices with non-zero entries.
pub(crate) type SparseRow<T> = Vec<(usize, T)>;

/// `a·row - b·pivot` with the leading entries cancelling, divided by its content.
fn cancel_leading<T: Entry>(row: &SparseRow<T>, pivot: &SparseRow<T>) -> Option<SparseRow<T>> {
    let g = row[0].1.gcd_with(&pivot[0].1);
    let (a, b) = (pivot[0].1.div_exact(&g), row[0].1.div_exact(&g));
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, row[i - 1].1.mul_checked(&a)?)
        } else if cj < ci {
            j += 1;
            (cj, pivot[j - 1].1.mul_checked(&b)?.neg_checked()?)
        } else {
            i += 1;
            j += 1;
            let x = row[i - 1].1.mul_checked(&a)?;
            (ci, x.sub_checked(&pivot[j - 1].1.mul_checked(&b)?)?)
        };
        if !v.is_zero_entry() {
            out.push((col, v));
        }
    }
    if !out.is_empty() && !out.iter().any(|e| e.1.is_unit_or_zero()) {
        let content = out
            .iter()
            .skip(1)
            .fold(out[0].1.clone(), |acc, e| acc.gcd_with(&e.1));
        if !content.is_unit_or_zero() {
            for e in &mut out {
                e.1 = e.1.div_exact(&content);
            }
        }
    }
    Some(out)
}

/// Fraction-free elimination on sparse integer rows, bucketed by leading column.
/// `None` signals overflow.
fn sparse_rank<T: Entry>(cols: usize, rows: Vec<SparseRow<T>>) -> Option<usize> {
    let mut buckets: Vec<Vec<SparseRow<T>>> = vec![Vec::new(); cols];
    for row in rows {
        if let Some(c) = row.first().map(|e| e.0) {
            buckets[c].push(row);
        }
    }
    let mut rank = 0;
    for c in 0..cols {
        let mut rows = std::mem::take(&mut buckets[c]);
        let Some(p) = (0..rows.len()).min_by_key(|&i| (rows[i][0].1.size(), rows[i].len())) else {
            continue;
        };
        rank += 1;
        let pivot = rows.swap_remove(p);
        for row in rows {
            let reduced = cancel_leading(&row, &pivot)?;
            if let Some(lead) = reduced.first().map(|e| e.0) {
                buckets[lead].push(reduced);
            }
        }
    }
    Some(rank)
}

/// Exact rank of a sparse integer matrix given by rows; `i128` arithmetic, redone
/// with big integers on overflow. Entries must be non-zero and columns increasing.
pub(crate) fn sparse_integer_rank(cols: usize, rows: &[SparseRow<i64>]) -> usize {
    let small = rows
        .iter()
        .map(|r| r.iter().map(|&(j, v)| (j, v as i128)).collect())
        .collect();
    sparse_rank(cols, small).unwrap_or_else(|| {
        let big = rows
            .iter()
            .map(|r| r.iter().map(|&(j, v)| (j, BigInt::from(v))).collect())
            .collect();
        sparse_rank(cols, big).expect("big integers do not overflow")
    })
}

fn sparse_rows(m: &IntegerMatrix) -> Vec<SparseRow<i64>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter(|(_, v)| **v != 0)
                .map(|(j, &v)| (j, v))
                .collect()
        })
        .collect()
}

/// Exact rank of an integer matrix.
pub fn integer_rank(m: &IntegerMatrix) -> usize {
    sparse_integer_rank(m.cols(), &sparse_rows(m))
}

pub fn integer_nullity(m: &IntegerMatrix) -> usize {
    m.cols() - integer_rank(m)
}

/// Kernel basis read off the reduced row echelon form: one vector per free column (in
/// column order), scaled to coprime integers.
pub fn kernel_basis(m: &RationalMatrix) -> KernelBasis {
    let e = echelon_big(m, true);
    let mut is_pivot = vec![false; m.cols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![BigRational::zero(); m.cols];
            v[f] = BigRational::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                v[p] = -row[f].clone();
            }
            primitive_integer_vector(&v)
        })
        .collect();
    KernelBasis { vectors }
}

pub fn integer_kernel(m: &IntegerMatrix) -> KernelBasis {
    kernel_basis(&RationalMatrix::from(m))
}

/// Scales a rational vector to integers with gcd 1.
fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|q| q.numer() * (&lcm / q.denom()))
        .collect();
    let g = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Content 1, or the zero vector.
pub fn is_primitive(v: &[BigInt]) -> bool {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x)).is_one()
        || v.iter().all(|x| x.is_zero())
}

pub(crate) fn big_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
