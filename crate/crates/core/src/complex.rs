//! Cells, Δ-complexes and the finite Alexandroff topology on them.
//!
//! Closed sets are the subset-closed families (subcomplexes); the stars
//! `U(x) = {y : x ⊆ y}` form the basis of open sets.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Vertex label. Labels are plain integers; named vertices are mapped at the I/O layer.
pub type Label = u32;

/// A non-empty, strictly ascending set of vertex labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell(Vec<Label>);

impl Cell {
    /// Sorts the labels. Empty input and repeated labels are rejected.
    pub fn new<I: IntoIterator<Item = Label>>(labels: I) -> Result<Self> {
        let mut v: Vec<Label> = labels.into_iter().collect();
        if v.is_empty() {
            return Err(Error::InvalidCell("cell must be non-empty".into()));
        }
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCell(format!("repeated label in {v:?}")));
        }
        Ok(Cell(v))
    }

    /// Caller guarantees the labels are non-empty and strictly ascending.
    pub(crate) fn from_sorted(v: Vec<Label>) -> Self {
        debug_assert!(!v.is_empty() && v.windows(2).all(|w| w[0] < w[1]));
        Cell(v)
    }

    pub fn vertex(label: Label) -> Self {
        Cell(vec![label])
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    /// Cardinality `|x|`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// `|x| - 1`, the dimension of a simplex.
    pub fn simplex_dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn min_label(&self) -> Label {
        self.0[0]
    }

    pub fn max_label(&self) -> Label {
        *self.0.last().expect("cells are non-empty")
    }

    pub fn contains_label(&self, v: Label) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Cell) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for a in &self.0 {
            for b in it.by_ref() {
                if b == a {
                    continue 'outer;
                }
                if b > a {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_proper_subset_of(&self, other: &Cell) -> bool {
        self.0.len() < other.0.len() && self.is_subset_of(other)
    }

    /// The cell with the label at `position` removed, or `None` for a vertex.
    pub fn without_position(&self, position: usize) -> Option<Cell> {
        if self.0.len() == 1 {
            return None;
        }
        let mut v = self.0.clone();
        v.remove(position);
        Some(Cell(v))
    }

    /// Union of two cells. Overlapping labels are merged.
    pub fn union(&self, other: &Cell) -> Cell {
        let set: BTreeSet<Label> = self.0.iter().chain(&other.0).copied().collect();
        Cell(set.into_iter().collect())
    }

    pub fn is_disjoint(&self, other: &Cell) -> bool {
        !self.0.iter().any(|v| other.contains_label(*v))
    }

    pub fn shifted(&self, by: Label) -> Cell {
        Cell(self.0.iter().map(|v| v + by).collect())
    }

    pub fn map_labels(&self, f: impl Fn(Label) -> Label) -> Result<Cell> {
        Cell::new(self.0.iter().map(|&v| f(v)))
    }

    /// All non-empty subsets, including the cell itself.
    pub fn nonempty_subsets(&self) -> impl Iterator<Item = Cell> + '_ {
        let n = self.0.len();
        assert!(n < 32, "cell too large to enumerate subsets");
        (1u32..(1u32 << n)).map(move |mask| {
            Cell(
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Classification of a subset `A ⊆ G` in the Alexandroff topology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetClass {
    Open,
    Closed,
    Clopen,
    Neither,
}

impl SubsetClass {
    pub fn is_open(self) -> bool {
        matches!(self, SubsetClass::Open | SubsetClass::Clopen)
    }

    pub fn is_closed(self) -> bool {
        matches!(self, SubsetClass::Closed | SubsetClass::Clopen)
    }
}

/// Cell counts per dimension.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

pub(crate) fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, v: &[T]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

pub(crate) fn alternating_sum(v: &[usize]) -> i64 {
    v.iter()
        .enumerate()
        .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

/// A finite set of cells with an explicit dimension per cell, in canonical order:
/// ascending dimension, lexicographic on labels within a dimension.
#[derive(Clone)]
pub struct DeltaComplex {
    cells: Vec<Cell>,
    dims: Vec<usize>,
    index: HashMap<Cell, usize>,
}

impl PartialEq for DeltaComplex {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells && self.dims == other.dims
    }
}

impl Eq for DeltaComplex {}

impl fmt::Debug for DeltaComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.has_default_dims() {
            f.debug_set().entries(&self.cells).finish()
        } else {
            f.debug_list()
                .entries(self.cells.iter().zip(&self.dims).map(|(c, d)| format!("{c}:{d}")))
                .finish()
        }
    }
}

impl Default for DeltaComplex {
    fn default() -> Self {
        Self::empty()
    }
}

impl DeltaComplex {
    pub fn empty() -> Self {
        Self {
            cells: Vec::new(),
            dims: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Cells with the default dimension `|x| - 1`.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self> {
        Self::build(cells.into_iter().map(|c| {
            let d = c.simplex_dim();
            (c, d)
        }))
    }

    /// Cells with explicitly supplied dimensions. Dimensions must increase strictly
    /// along proper inclusion.
    pub fn with_dims<I: IntoIterator<Item = (Cell, usize)>>(pairs: I) -> Result<Self> {
        let g = Self::build(pairs)?;
        g.check_monotone()?;
        Ok(g)
    }

    /// For constructions whose dimensions are monotone by construction.
    pub(crate) fn with_dims_unchecked<I: IntoIterator<Item = (Cell, usize)>>(pairs: I) -> Result<Self> {
        Self::build(pairs)
    }

    fn build<I: IntoIterator<Item = (Cell, usize)>>(pairs: I) -> Result<Self> {
        let mut v: Vec<(usize, Cell)> = pairs.into_iter().map(|(c, d)| (d, c)).collect();
        v.sort();
        for w in v.windows(2) {
            if w[0].1 == w[1].1 {
                return Err(Error::DuplicateCell(w[0].1.clone()));
            }
        }
        let mut g = Self::from_sorted_pairs(v);
        // cells equal with different dims sort apart
        if g.index.len() != g.cells.len() {
            let mut seen = BTreeSet::new();
            for c in &g.cells {
                if !seen.insert(c) {
                    return Err(Error::DuplicateCell(c.clone()));
                }
            }
        }
        g.index.shrink_to_fit();
        Ok(g)
    }

    fn from_sorted_pairs(v: Vec<(usize, Cell)>) -> Self {
        let mut cells = Vec::with_capacity(v.len());
        let mut dims = Vec::with_capacity(v.len());
        for (d, c) in v {
            dims.push(d);
            cells.push(c);
        }
        let index = cells.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        Self { cells, dims, index }
    }

    fn check_monotone(&self) -> Result<()> {
        for (i, x) in self.cells.iter().enumerate() {
            for (j, y) in self.cells.iter().enumerate() {
                if y.is_proper_subset_of(x) && self.dims[j] >= self.dims[i] {
                    return Err(Error::NonMonotoneDims {
                        face: y.clone(),
                        face_dim: self.dims[j],
                        coface: x.clone(),
                        coface_dim: self.dims[i],
                    });
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &Cell {
        &self.cells[i]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, i: usize) -> usize {
        self.dims[i]
    }

    pub fn dim_of(&self, x: &Cell) -> Option<usize> {
        self.index_of(x).map(|i| self.dims[i])
    }

    pub fn index_of(&self, x: &Cell) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &Cell) -> bool {
        self.index.contains_key(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Cell, usize)> {
        self.cells.iter().zip(self.dims.iter().copied())
    }

    /// Largest dimension present, `None` for the empty complex.
    pub fn max_dim(&self) -> Option<usize> {
        self.dims.last().copied()
    }

    pub fn has_default_dims(&self) -> bool {
        self.iter().all(|(c, d)| c.simplex_dim() == d)
    }

    /// Cumulative counts `r_0 = 0 ≤ r_1 ≤ … ≤ r_{q+1} = n`; cells of dimension `k`
    /// occupy positions `r_k..r_{k+1}`.
    pub fn markers(&self) -> Vec<usize> {
        let mut r = vec![0];
        let mut acc = 0;
        for f in self.f_vector().0 {
            acc += f;
            r.push(acc);
        }
        r
    }

    pub fn f_vector(&self) -> FVector {
        let Some(q) = self.max_dim() else {
            return FVector::default();
        };
        let mut f = vec![0; q + 1];
        for &d in &self.dims {
            f[d] += 1;
        }
        FVector(f)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// Sub-collection on sorted indices, keeping dimensions. Canonical order is inherited.
    pub fn restrict(&self, indices: &[usize]) -> DeltaComplex {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Self::from_sorted_pairs(
            indices
                .iter()
                .map(|&i| (self.dims[i], self.cells[i].clone()))
                .collect(),
        )
    }

    pub fn restrict_mask(&self, mask: &[bool]) -> DeltaComplex {
        self.restrict(&mask_to_indices(mask))
    }

    /// Sub-collection on the given cells, which must all lie in `self`.
    pub fn sub(&self, cells: &[Cell]) -> Result<DeltaComplex> {
        Ok(self.restrict_mask(&self.mask_of(cells)?))
    }

    /// Membership mask of `cells` in canonical order.
    pub fn mask_of(&self, cells: &[Cell]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.len()];
        for c in cells {
            let i = self
                .index_of(c)
                .ok_or_else(|| Error::CellNotInComplex(c.clone()))?;
            mask[i] = true;
        }
        Ok(mask)
    }

    pub fn cells_of_mask(&self, mask: &[bool]) -> Vec<Cell> {
        mask_to_indices(mask)
            .into_iter()
            .map(|i| self.cells[i].clone())
            .collect()
    }

    pub fn max_label(&self) -> Option<Label> {
        self.cells.iter().map(Cell::max_label).max()
    }

    pub fn min_label(&self) -> Option<Label> {
        self.cells.iter().map(Cell::min_label).min()
    }

    /// Vertex labels appearing in any cell.
    pub fn labels(&self) -> BTreeSet<Label> {
        self.cells.iter().flat_map(|c| c.labels().iter().copied()).collect()
    }

    /// Relabels every vertex; dimensions are carried along.
    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> Result<DeltaComplex> {
        let pairs = self
            .iter()
            .map(|(c, d)| Ok((c.map_labels(&f)?, d)))
            .collect::<Result<Vec<_>>>()?;
        Self::build(pairs)
    }

    /// Indices of cells `y` with `x ⊆ y`.
    pub(crate) fn star_indices(&self, i: usize) -> Vec<usize> {
        let x = &self.cells[i];
        (0..self.len()).filter(|&j| x.is_subset_of(&self.cells[j])).collect()
    }

    /// First `(cell, missing face)` showing that `mask` is not closed in `self`.
    pub(crate) fn closed_violation(&self, mask: &[bool]) -> Option<(usize, usize)> {
        for i in mask_to_indices(mask) {
            for (j, y) in self.cells.iter().enumerate() {
                if !mask[j] && y.is_proper_subset_of(&self.cells[i]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// First `(cell, missing coface)` showing that `mask` is not open in `self`.
    pub(crate) fn open_violation(&self, mask: &[bool]) -> Option<(usize, usize)> {
        for i in mask_to_indices(mask) {
            for (j, y) in self.cells.iter().enumerate() {
                if !mask[j] && self.cells[i].is_proper_subset_of(y) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub(crate) fn classify_mask(&self, mask: &[bool]) -> SubsetClass {
        let closed = self.closed_violation(mask).is_none();
        let open = self.open_violation(mask).is_none();
        match (open, closed) {
            (true, true) => SubsetClass::Clopen,
            (true, false) => SubsetClass::Open,
            (false, true) => SubsetClass::Closed,
            (false, false) => SubsetClass::Neither,
        }
    }
}

pub(crate) fn mask_to_indices(mask: &[bool]) -> Vec<usize> {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &m)| m.then_some(i))
        .collect()
}

/// Smallest simplicial complex containing every input cell. Empty input gives the
/// empty complex.
pub fn closure(sets: &[Cell]) -> DeltaComplex {
    let all: BTreeSet<Cell> = sets.iter().flat_map(|c| c.nonempty_subsets()).collect();
    let mut v: Vec<(usize, Cell)> = all.into_iter().map(|c| (c.simplex_dim(), c)).collect();
    v.sort();
    DeltaComplex::from_sorted_pairs(v)
}

/// The star `U(x) = {y ∈ G : x ⊆ y}`, in `G`'s canonical order.
pub fn star(g: &DeltaComplex, x: &Cell) -> Result<Vec<Cell>> {
    let i = g
        .index_of(x)
        .ok_or_else(|| Error::CellNotInComplex(x.clone()))?;
    Ok(g.star_indices(i)
        .into_iter()
        .map(|j| g.cells[j].clone())
        .collect())
}

pub fn classify(g: &DeltaComplex, a: &[Cell]) -> Result<SubsetClass> {
    Ok(g.classify_mask(&g.mask_of(a)?))
}

/// `G ∖ A` in canonical order.
pub fn complement(g: &DeltaComplex, a: &[Cell]) -> Result<Vec<Cell>> {
    let mask = g.mask_of(a)?;
    Ok(g.cells_of_mask(&mask.iter().map(|m| !m).collect::<Vec<_>>()))
}

/// Unit ball `B(x)`: the closure of the star, taken inside `G`.
pub fn unit_ball(g: &DeltaComplex, x: &Cell) -> Result<DeltaComplex> {
    let i = g
        .index_of(x)
        .ok_or_else(|| Error::CellNotInComplex(x.clone()))?;
    Ok(g.restrict_mask(&ball_mask(g, &g.star_indices(i))))
}

/// Unit sphere `S(x) = B(x) ∖ U(x)`.
pub fn unit_sphere(g: &DeltaComplex, x: &Cell) -> Result<DeltaComplex> {
    let i = g
        .index_of(x)
        .ok_or_else(|| Error::CellNotInComplex(x.clone()))?;
    let star = g.star_indices(i);
    let mut mask = ball_mask(g, &star);
    for j in star {
        mask[j] = false;
    }
    Ok(g.restrict_mask(&mask))
}

fn ball_mask(g: &DeltaComplex, star: &[usize]) -> Vec<bool> {
    g.cells
        .iter()
        .map(|y| star.iter().any(|&s| y.is_subset_of(&g.cells[s])))
        .collect()
}

/// `int(M) = {x ∈ M : U(x) ⊆ M}` and the boundary `δM = M ∖ int(M)`.
pub fn interior_boundary(g: &DeltaComplex, m: &[Cell]) -> Result<(Vec<Cell>, Vec<Cell>)> {
    let mask = g.mask_of(m)?;
    let mut interior = Vec::new();
    let mut boundary = Vec::new();
    for i in mask_to_indices(&mask) {
        if g.star_indices(i).into_iter().all(|j| mask[j]) {
            interior.push(g.cells[i].clone());
        } else {
            boundary.push(g.cells[i].clone());
        }
    }
    Ok((interior, boundary))
}

/// A simple undirected graph on integer labels.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    pub vertices: Vec<Label>,
    pub edges: Vec<(Label, Label)>,
}

impl Graph {
    pub fn new(vertices: Vec<Label>, edges: Vec<(Label, Label)>) -> Self {
        Self { vertices, edges }
    }

    fn adjacency(&self) -> BTreeMap<Label, BTreeSet<Label>> {
        let mut adj: BTreeMap<Label, BTreeSet<Label>> = BTreeMap::new();
        for &v in &self.vertices {
            adj.entry(v).or_default();
        }
        for &(a, b) in &self.edges {
            if a == b {
                continue;
            }
            adj.entry(a).or_default().insert(b);
            adj.entry(b).or_default().insert(a);
        }
        adj
    }
}

/// Whitney (clique) complex: every complete subgraph is a cell.
pub fn whitney_complex(graph: &Graph) -> DeltaComplex {
    let adj = graph.adjacency();
    let mut out = Vec::new();
    let mut stack: Vec<Label> = Vec::new();

    fn extend(
        adj: &BTreeMap<Label, BTreeSet<Label>>,
        stack: &mut Vec<Label>,
        candidates: &BTreeSet<Label>,
        out: &mut Vec<(usize, Cell)>,
    ) {
        for &v in candidates {
            stack.push(v);
            out.push((stack.len() - 1, Cell::from_sorted(stack.clone())));
            let next: BTreeSet<Label> = candidates
                .range(v + 1..)
                .filter(|w| adj[&v].contains(w))
                .copied()
                .collect();
            extend(adj, stack, &next, out);
            stack.pop();
        }
    }

    let all: BTreeSet<Label> = adj.keys().copied().collect();
    extend(&adj, &mut stack, &all, &mut out);
    out.sort();
    DeltaComplex::from_sorted_pairs(out)
}

/// All cells of dimension at most `k`.
pub fn skeleton(g: &DeltaComplex, k: usize) -> DeltaComplex {
    let idx: Vec<usize> = (0..g.len()).filter(|&i| g.dims[i] <= k).collect();
    g.restrict(&idx)
}

/// Union of `k` stars drawn uniformly with replacement from the basis of `G`.
pub fn random_open_set(g: &DeltaComplex, k: usize, seed: u64) -> Vec<Cell> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_open_mask(g, k, &mut rng)
        .map(|m| g.cells_of_mask(&m))
        .unwrap_or_default()
}

pub(crate) fn random_open_mask<R: Rng>(g: &DeltaComplex, k: usize, rng: &mut R) -> Option<Vec<bool>> {
    if g.is_empty() {
        return None;
    }
    let mut mask = vec![false; g.len()];
    for _ in 0..k {
        let i = rng.gen_range(0..g.len());
        for j in g.star_indices(i) {
            mask[j] = true;
        }
    }
    Some(mask)
}

/// `∫_M f = Σ_{x ∈ M} f(x)`.
pub fn integrate(m: &[Cell], f: impl Fn(&Cell) -> BigRational) -> BigRational {
    m.iter().fold(BigRational::zero(), |acc, x| acc + f(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn c(v: &[Label]) -> Cell {
        Cell::new(v.iter().copied()).unwrap()
    }

    fn cells(v: &[&[Label]]) -> Vec<Cell> {
        v.iter().map(|x| c(x)).collect()
    }

    fn tetra_boundary() -> DeltaComplex {
        let mut g = closure(&cells(&[&[1, 2, 3, 4]]));
        let top = c(&[1, 2, 3, 4]);
        let keep: Vec<Cell> = g.cells().iter().filter(|x| **x != top).cloned().collect();
        g = DeltaComplex::from_cells(keep).unwrap();
        g
    }

    #[test]
    fn cell_rejects_bad_input() {
        assert!(Cell::new([]).is_err());
        assert!(Cell::new([2, 2]).is_err());
        assert_eq!(Cell::new([3, 1, 2]).unwrap().labels(), &[1, 2, 3]);
    }

    #[test]
    fn subset_walk() {
        assert!(c(&[1, 3]).is_subset_of(&c(&[1, 2, 3])));
        assert!(!c(&[1, 4]).is_subset_of(&c(&[1, 2, 3])));
        assert!(!c(&[0]).is_subset_of(&c(&[1, 2])));
        assert!(c(&[2]).is_proper_subset_of(&c(&[1, 2])));
        assert!(!c(&[1, 2]).is_proper_subset_of(&c(&[1, 2])));
    }

    #[test]
    fn closure_examples() {
        let g = closure(&cells(&[&[1, 2]]));
        assert_eq!(g.cells(), cells(&[&[1], &[2], &[1, 2]]).as_slice());
        assert_eq!(closure(&cells(&[&[1]])).cells(), cells(&[&[1]]).as_slice());
        assert_eq!(closure(&cells(&[&[1, 2, 3]])).len(), 7);
        assert!(closure(&[]).is_empty());
    }

    #[test]
    fn closure_idempotent() {
        let g = closure(&cells(&[&[1, 2, 3], &[3, 4]]));
        assert_eq!(closure(g.cells()), g);
    }

    #[test]
    fn star_examples() {
        let g = tetra_boundary();
        assert_eq!(g.len(), 14);
        let s = star(&g, &c(&[1])).unwrap();
        assert_eq!(
            s,
            cells(&[&[1], &[1, 2], &[1, 3], &[1, 4], &[1, 2, 3], &[1, 2, 4], &[1, 3, 4]])
        );
        assert_eq!(star(&g, &c(&[1, 2, 3])).unwrap(), cells(&[&[1, 2, 3]]));
        let e = closure(&cells(&[&[1, 2]]));
        assert_eq!(star(&e, &c(&[2])).unwrap(), cells(&[&[2], &[1, 2]]));
        assert!(matches!(star(&e, &c(&[7])), Err(Error::CellNotInComplex(_))));
    }

    #[test]
    fn classify_examples() {
        let g = closure(&cells(&[&[1, 2, 3]]));
        let s = star(&g, &c(&[1])).unwrap();
        assert_eq!(classify(&g, &s).unwrap(), SubsetClass::Open);
        let k = complement(&g, &s).unwrap();
        assert_eq!(classify(&g, &k).unwrap(), SubsetClass::Closed);
        let a = cells(&[&[1], &[1, 2], &[1, 2, 3]]);
        assert_eq!(classify(&g, &a).unwrap(), SubsetClass::Neither);
        assert_eq!(classify(&g, g.cells()).unwrap(), SubsetClass::Clopen);
        assert_eq!(classify(&g, &[]).unwrap(), SubsetClass::Clopen);
        assert!(classify(&g, &cells(&[&[9]])).is_err());
    }

    #[test]
    fn spheres_and_balls() {
        let g = tetra_boundary();
        let s = unit_sphere(&g, &c(&[1])).unwrap();
        assert_eq!(s.cells(), cells(&[&[2], &[3], &[4], &[2, 3], &[2, 4], &[3, 4]]).as_slice());
        let b = unit_ball(&g, &c(&[1])).unwrap();
        assert_eq!(b.len(), 13);
        let top = c(&[1, 2, 4]);
        let s = unit_sphere(&g, &top).unwrap();
        assert_eq!(s.len(), 6);
        assert!(s.cells().iter().all(|y| y.is_proper_subset_of(&top)));
    }

    #[test]
    fn interior_and_boundary() {
        let g = closure(&cells(&[&[1, 2]]));
        let (i, b) = interior_boundary(&g, g.cells()).unwrap();
        assert_eq!(i.len(), 3);
        assert!(b.is_empty());
        let m = cells(&[&[1], &[2]]);
        let (i, b) = interior_boundary(&g, &m).unwrap();
        assert!(i.is_empty());
        assert_eq!(b, m);
        let open = star(&g, &c(&[1])).unwrap();
        let (i, b) = interior_boundary(&g, &open).unwrap();
        assert_eq!(i, open);
        assert!(b.is_empty());
    }

    #[test]
    fn f_vector_and_euler() {
        let h = DeltaComplex::with_dims(vec![(c(&[0]), 0), (c(&[1, 2, 3]), 2)]).unwrap();
        assert_eq!(h.f_vector(), FVector(vec![1, 0, 1]));
        assert_eq!(h.euler_characteristic(), 2);
        assert_eq!(h.markers(), vec![0, 1, 1, 2]);
        assert_eq!(DeltaComplex::empty().f_vector(), FVector(vec![]));
        assert_eq!(DeltaComplex::empty().euler_characteristic(), 0);
        let u = DeltaComplex::from_cells(cells(&[&[1, 2]])).unwrap();
        assert_eq!(u.markers(), vec![0, 0, 1]);
    }

    #[test]
    fn whitney_examples() {
        let k3 = whitney_complex(&Graph::new(vec![1, 2, 3], vec![(1, 2), (2, 3), (1, 3)]));
        assert_eq!(k3, closure(&cells(&[&[1, 2, 3]])));
        let c4 = whitney_complex(&Graph::new(
            vec![1, 2, 3, 4],
            vec![(1, 2), (2, 3), (3, 4), (4, 1)],
        ));
        assert_eq!(c4.len(), 8);
        assert_eq!(c4.max_dim(), Some(1));
        let points = whitney_complex(&Graph::new(vec![5, 6], vec![]));
        assert_eq!(points.cells(), cells(&[&[5], &[6]]).as_slice());
    }

    #[test]
    fn skeleton_examples() {
        let g = closure(&cells(&[&[1, 2, 3]]));
        let s = skeleton(&g, 1);
        assert_eq!(s.len(), 6);
        assert_eq!(skeleton(&g, 2), g);
        assert_eq!(skeleton(&g, 0).len(), 3);
    }

    #[test]
    fn random_open_sets_are_open_and_deterministic() {
        let g = tetra_boundary();
        for seed in 0..20 {
            let u = random_open_set(&g, 1 + (seed as usize % 4), seed);
            assert!(classify(&g, &u).unwrap().is_open());
            assert_eq!(u, random_open_set(&g, 1 + (seed as usize % 4), seed));
        }
        let single = random_open_set(&g, 1, 3);
        let apex = single.iter().min_by_key(|x| x.len()).unwrap();
        assert_eq!(single, star(&g, apex).unwrap());
    }

    #[test]
    fn integral_of_constants() {
        let g = closure(&cells(&[&[1, 2, 3]]));
        let one = integrate(g.cells(), |_| BigRational::from_integer(BigInt::from(1)));
        assert_eq!(one, BigRational::from_integer(BigInt::from(7)));
        assert!(integrate(g.cells(), |_| BigRational::zero()).is_zero());
    }

    #[test]
    fn duplicates_and_monotonicity() {
        assert!(matches!(
            DeltaComplex::from_cells(cells(&[&[1], &[1]])),
            Err(Error::DuplicateCell(_))
        ));
        assert!(matches!(
            DeltaComplex::with_dims(vec![(c(&[1]), 0), (c(&[1]), 1)]),
            Err(Error::DuplicateCell(_))
        ));
        assert!(matches!(
            DeltaComplex::with_dims(vec![(c(&[1]), 1), (c(&[1, 2]), 1)]),
            Err(Error::NonMonotoneDims { .. })
        ));
    }
}
