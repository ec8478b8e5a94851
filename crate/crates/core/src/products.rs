//! Cartesian (Shannon) product of Δ-sets, joins, suspension, Barycentric refinement,
//! the geometric product and Künneth checks.

use num_bigint::BigInt;

use crate::cohomology::{betti, is_harmonic, PoincarePolynomial};
use crate::complex::{closure, whitney_complex, Cell, DeltaComplex, Graph, Label};
use crate::error::{Error, Result};

/// A product cell `x ∪ shift(y)` together with its factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductCell {
    pub cell: Cell,
    pub left: Cell,
    pub right: Cell,
    pub factor_dims: (usize, usize),
}

impl ProductCell {
    pub fn dim(&self) -> usize {
        self.factor_dims.0 + self.factor_dims.1
    }
}

/// `A × B` with the bookkeeping needed to go back to the factors.
#[derive(Clone, Debug)]
pub struct ShannonProduct {
    pub complex: DeltaComplex,
    /// Added to every label of the right factor.
    pub shift: Label,
    /// For each product cell (in canonical order), the indices in `A` and `B`.
    pub factors: Vec<(usize, usize)>,
    a: DeltaComplex,
    b: DeltaComplex,
}

/// Shift that puts every label of `b` above every label of `a`: the maximum label of
/// `a`, or one more when `b` uses the label 0.
fn separating_shift(a: &DeltaComplex, b: &DeltaComplex) -> Label {
    let max_a = a.max_label().unwrap_or(0);
    match b.min_label() {
        Some(0) => max_a + 1,
        _ => max_a,
    }
}

impl ShannonProduct {
    pub fn new(a: &DeltaComplex, b: &DeltaComplex) -> Self {
        let shift = separating_shift(a, b);
        let pairs = a.iter().flat_map(|(x, dx)| {
            b.iter()
                .map(move |(y, dy)| (x.union(&y.shifted(shift)), dx + dy))
        });
        let complex = DeltaComplex::with_dims_unchecked(pairs)
            .expect("shifted unions of distinct pairs are distinct");
        let max_a = a.max_label().unwrap_or(0);
        let factors = complex
            .cells()
            .iter()
            .map(|z| {
                let (x, y) = split_cell(z, max_a, shift);
                (
                    a.index_of(&x).expect("left factor"),
                    b.index_of(&y).expect("right factor"),
                )
            })
            .collect();
        Self {
            complex,
            shift,
            factors,
            a: a.clone(),
            b: b.clone(),
        }
    }

    pub fn decode(&self, z: &Cell) -> Option<ProductCell> {
        let k = self.complex.index_of(z)?;
        let (i, j) = self.factors[k];
        Some(ProductCell {
            cell: z.clone(),
            left: self.a.cell(i).clone(),
            right: self.b.cell(j).clone(),
            factor_dims: (self.a.dim_at(i), self.b.dim_at(j)),
        })
    }
}

fn split_cell(z: &Cell, max_a: Label, shift: Label) -> (Cell, Cell) {
    let cut = z.labels().partition_point(|&v| v <= max_a);
    let x = Cell::from_sorted(z.labels()[..cut].to_vec());
    let y = Cell::from_sorted(z.labels()[cut..].iter().map(|v| v - shift).collect());
    (x, y)
}

/// Cells `x ∪ shift(y)` with `dim = dim_A(x) + dim_B(y)`; `|A|·|B|` cells in all.
///
/// Products with an empty factor are empty.
pub fn shannon_product(a: &DeltaComplex, b: &DeltaComplex) -> DeltaComplex {
    ShannonProduct::new(a, b).complex
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JoinMode {
    Closed,
    Open,
}

/// Labels of `b` are shifted above those of `a` unless the label sets are already
/// disjoint.
fn join_shift(a: &DeltaComplex, b: &DeltaComplex) -> Label {
    if a.labels().is_disjoint(&b.labels()) {
        0
    } else {
        separating_shift(a, b)
    }
}

/// Closed: the closure of `{x ∪ y}` together with `A` and `B`. Open: the bare unions
/// `{x ∪ y}` with the simplicial dimension `|x ∪ y| - 1`.
pub fn join(a: &DeltaComplex, b: &DeltaComplex, mode: JoinMode) -> DeltaComplex {
    let shift = join_shift(a, b);
    let unions: Vec<Cell> = a
        .cells()
        .iter()
        .flat_map(|x| b.cells().iter().map(move |y| x.union(&y.shifted(shift))))
        .collect();
    match mode {
        JoinMode::Open => DeltaComplex::from_cells(unions).expect("unions are distinct"),
        JoinMode::Closed => {
            let mut gens = unions;
            gens.extend(a.cells().iter().cloned());
            gens.extend(b.cells().iter().map(|y| y.shifted(shift)));
            closure(&gens)
        }
    }
}

/// `S(H) = H * S⁰` with two fresh apex labels.
pub fn suspension(h: &DeltaComplex) -> DeltaComplex {
    let m = h.max_label().map_or(1, |m| m + 1);
    let s0 = DeltaComplex::from_cells([Cell::vertex(m), Cell::vertex(m + 1)]).expect("two points");
    join(h, &s0, JoinMode::Closed)
}

fn inclusion_graph<F: Fn(usize, usize) -> bool>(n: usize, label: impl Fn(usize) -> Label, le: F) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if le(i, j) || le(j, i) {
                edges.push((label(i), label(j)));
            }
        }
    }
    Graph::new((0..n).map(label).collect(), edges)
}

/// Order complex of the inclusion poset. The cell at index `i` of `G` becomes vertex
/// `i + 1`.
pub fn barycentric_refinement(g: &DeltaComplex) -> DeltaComplex {
    let cells = g.cells();
    whitney_complex(&inclusion_graph(
        g.len(),
        |i| i as Label + 1,
        |i, j| cells[i].is_proper_subset_of(&cells[j]),
    ))
}

/// Whitney complex of the divisibility graph of the monomials `(x, y)`: two pairs are
/// adjacent when one contains the other componentwise. The pair `(i, j)` of indices
/// becomes vertex `i·|B| + j + 1`.
pub fn geometric_product(a: &DeltaComplex, b: &DeltaComplex) -> DeltaComplex {
    let nb = b.len();
    let pair = |k: usize| (a.cell(k / nb), b.cell(k % nb));
    let sub = |k: usize, l: usize| {
        let ((x, y), (x2, y2)) = (pair(k), pair(l));
        k != l && x.is_subset_of(x2) && y.is_subset_of(y2)
    };
    whitney_complex(&inclusion_graph(a.len() * nb, |k| k as Label + 1, sub))
}

/// Exact Künneth check `b(A × B)(t) = b(A)(t)·b(B)(t)`.
pub fn kunneth_check(a: &DeltaComplex, b: &DeltaComplex) -> Result<bool> {
    let ba = PoincarePolynomial::from_betti(&betti(a)?);
    let bb = PoincarePolynomial::from_betti(&betti(b)?);
    let bp = PoincarePolynomial::from_betti(&betti(&shannon_product(a, b))?);
    let expected = ba.mul(&bb);
    let n = expected.coeffs.len().max(bp.coeffs.len());
    let pad = |v: &[i64]| {
        let mut v = v.to_vec();
        v.resize(n, 0);
        v
    };
    Ok(pad(&expected.coeffs) == pad(&bp.coeffs))
}

/// `(f ⊗ g)(x ∪ shift(y)) = f(x)·g(y)`, for harmonic `f` on `A` and `g` on `B`.
pub fn tensor_harmonic(
    a: &DeltaComplex,
    f: &[BigInt],
    b: &DeltaComplex,
    g: &[BigInt],
) -> Result<(ShannonProduct, Vec<BigInt>)> {
    if !is_harmonic(a, f)? || !is_harmonic(b, g)? {
        return Err(Error::NotHarmonic);
    }
    let p = ShannonProduct::new(a, b);
    let form = p.factors.iter().map(|&(i, j)| &f[i] * &g[j]).collect();
    Ok((p, form))
}
