//! Closed/open splits `G = K ∪ U`, the fusion report `b(G) ≤ b(K) + b(U)`, interface
//! cohomology by two independent routes, and the flip moves between splits.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cohomology::{betti, harmonic_basis, BettiVector};
use crate::complex::{mask_to_indices, write_tuple, Cell, DeltaComplex};
use crate::error::{Error, Result};
use crate::exact::{rank_nullity, RationalMatrix};

/// A complex with a closed part `K` and its open complement `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPair {
    g: DeltaComplex,
    in_k: Vec<bool>,
}

impl SplitPair {
    /// Validates that `mask` marks a closed set; its complement is then open.
    pub fn from_mask(g: DeltaComplex, in_k: Vec<bool>) -> Result<Self> {
        assert_eq!(in_k.len(), g.len());
        if let Some((i, j)) = g.closed_violation(&in_k) {
            return Err(Error::NotClosed {
                cell: g.cell(i).clone(),
                missing_face: g.cell(j).clone(),
            });
        }
        Ok(Self { g, in_k })
    }

    /// Split from the open part.
    pub fn from_open(g: DeltaComplex, u_cells: &[Cell]) -> Result<Self> {
        let in_u = g.mask_of(u_cells)?;
        if let Some((i, j)) = g.open_violation(&in_u) {
            return Err(Error::NotOpen {
                cell: g.cell(i).clone(),
                missing_coface: g.cell(j).clone(),
            });
        }
        Ok(Self {
            in_k: in_u.iter().map(|m| !m).collect(),
            g,
        })
    }

    pub fn g(&self) -> &DeltaComplex {
        &self.g
    }

    pub fn k_mask(&self) -> &[bool] {
        &self.in_k
    }

    pub fn in_k(&self, i: usize) -> bool {
        self.in_k[i]
    }

    pub fn k(&self) -> DeltaComplex {
        self.g.restrict_mask(&self.in_k)
    }

    pub fn u(&self) -> DeltaComplex {
        self.g.restrict(&self.u_indices())
    }

    pub fn k_indices(&self) -> Vec<usize> {
        mask_to_indices(&self.in_k)
    }

    pub fn u_indices(&self) -> Vec<usize> {
        (0..self.g.len()).filter(|&i| !self.in_k[i]).collect()
    }

    pub fn k_cells(&self) -> Vec<Cell> {
        self.g.cells_of_mask(&self.in_k)
    }

    pub fn u_cells(&self) -> Vec<Cell> {
        self.u_indices().into_iter().map(|i| self.g.cell(i).clone()).collect()
    }

    /// `K` closed and `U` open in `G`.
    pub fn is_sound(&self) -> bool {
        let in_u: Vec<bool> = self.in_k.iter().map(|m| !m).collect();
        self.g.closed_violation(&self.in_k).is_none() && self.g.open_violation(&in_u).is_none()
    }
}

/// Validated split with `K = k_cells` and `U = G ∖ K`.
pub fn split(g: &DeltaComplex, k_cells: &[Cell]) -> Result<SplitPair> {
    let mask = g.mask_of(k_cells)?;
    SplitPair::from_mask(g.clone(), mask)
}

/// Betti vectors of a split and the interface vector `b(I) = b(K) + b(U) - b(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionReport {
    pub bg: BettiVector,
    pub bk: BettiVector,
    pub bu: BettiVector,
    /// Signed, so that a violation of the inequality is representable.
    pub bi: Vec<i64>,
    pub inequality_holds: bool,
    /// `(j, c_j)` with `b(I) = Σ c_j (e_j + e_{j+1})`, greedily from dimension 0;
    /// `None` when no such decomposition exists.
    pub adjacent_pairs: Option<Vec<(usize, usize)>>,
}

impl FusionReport {
    pub fn from_vectors(bg: &BettiVector, bk: &BettiVector, bu: &BettiVector) -> Self {
        let n = bg.len().max(bk.len()).max(bu.len());
        let (g, k, u) = (bg.padded(n), bk.padded(n), bu.padded(n));
        let bi: Vec<i64> = (0..n)
            .map(|p| k[p] as i64 + u[p] as i64 - g[p] as i64)
            .collect();
        let inequality_holds = bi.iter().all(|&x| x >= 0);
        Self {
            adjacent_pairs: adjacent_pair_decomposition(&bi),
            bg: BettiVector(g),
            bk: BettiVector(k),
            bu: BettiVector(u),
            bi,
            inequality_holds,
        }
    }

    pub fn is_equality(&self) -> bool {
        self.bi.iter().all(|&x| x == 0)
    }

    /// `‖b(I)‖₁`.
    pub fn interface_norm(&self) -> u64 {
        self.bi.iter().map(|x| x.unsigned_abs()).sum()
    }

    pub fn bi_alternating_sum(&self) -> i64 {
        self.bi
            .iter()
            .enumerate()
            .map(|(k, &x)| if k % 2 == 0 { x } else { -x })
            .sum()
    }
}

impl fmt::Display for FusionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "b(G) = {}", self.bg)?;
        writeln!(f, "b(K) = {}", self.bk)?;
        writeln!(f, "b(U) = {}", self.bu)?;
        write!(f, "b(I) = ")?;
        write_tuple(f, &self.bi)?;
        writeln!(f)?;
        match &self.adjacent_pairs {
            Some(pairs) if pairs.is_empty() => writeln!(f, "adjacent pairs: none")?,
            Some(pairs) => {
                let s: Vec<String> = pairs
                    .iter()
                    .map(|(j, c)| format!("{c}*(e{j}+e{})", j + 1))
                    .collect();
                writeln!(f, "adjacent pairs: {}", s.join(" + "))?;
            }
            None => writeln!(f, "adjacent pairs: not decomposable")?,
        }
        let verdict = match (self.inequality_holds, self.is_equality()) {
            (true, true) => "equality b(G) = b(K) + b(U)",
            (true, false) => "strict inequality b(G) <= b(K) + b(U)",
            (false, _) => "VIOLATION of b(G) <= b(K) + b(U)",
        };
        write!(f, "verdict: {verdict}")
    }
}

fn adjacent_pair_decomposition(bi: &[i64]) -> Option<Vec<(usize, usize)>> {
    if bi.iter().any(|&x| x < 0) {
        return None;
    }
    let mut rem = bi.to_vec();
    let mut out = Vec::new();
    for j in 0..rem.len().saturating_sub(1) {
        let c = rem[j];
        if c > 0 {
            rem[j] = 0;
            rem[j + 1] -= c;
            if rem[j + 1] < 0 {
                return None;
            }
            out.push((j, c as usize));
        }
    }
    rem.iter().all(|&x| x == 0).then_some(out)
}

pub fn fusion_report(s: &SplitPair) -> Result<FusionReport> {
    let bg = betti(s.g())?;
    let bk = betti(&s.k())?;
    let bu = betti(&s.u())?;
    Ok(FusionReport::from_vectors(&bg, &bk, &bu))
}

/// Projection route: per `p`, the nullity of `Bᵀ A`, where the columns of `A` span the
/// harmonic `p`-forms of `L_K ⊕ L_U` and those of `B` span the harmonic `p`-forms of
/// `L_G`, all written in `G`'s coordinates. `nullity(AᵀBBᵀA) = nullity(BᵀA)`, so the
/// interface Laplacian is never formed.
pub fn projection_nullity(s: &SplitPair) -> Result<BettiVector> {
    let g = s.g();
    let hg = harmonic_basis(g)?;
    let hk = harmonic_basis(&s.k())?;
    let hu = harmonic_basis(&s.u())?;
    let k_idx = s.k_indices();
    let u_idx = s.u_indices();
    let q = g.max_dim().map_or(0, |d| d + 1);
    let embed = |v: &[BigInt], idx: &[usize]| {
        let mut out = vec![BigInt::zero(); g.len()];
        for (local, x) in v.iter().enumerate() {
            out[idx[local]] = x.clone();
        }
        out
    };
    let out = (0..q)
        .map(|p| {
            let a: Vec<Vec<BigInt>> = hk
                .dim(p)
                .iter()
                .map(|v| embed(v, &k_idx))
                .chain(hu.dim(p).iter().map(|v| embed(v, &u_idx)))
                .collect();
            let b = hg.dim(p);
            let rows: Vec<Vec<BigInt>> = b
                .iter()
                .map(|bv| a.iter().map(|av| crate::exact::big_dot(bv, av)).collect())
                .collect();
            rank_nullity(&RationalMatrix::from_integer_rows(&rows, a.len())).1
        })
        .collect();
    Ok(BettiVector(out))
}

/// Interface Betti vector from the projection picture, cross-checked against
/// `b(K) + b(U) - b(G)`. A disagreement is reported as [`Error::InterfaceMismatch`].
pub fn interface_nullity(s: &SplitPair) -> Result<BettiVector> {
    let projection = projection_nullity(s)?;
    let report = fusion_report(s)?;
    let n = projection.len().max(report.bi.len());
    let agree = (0..n).all(|p| {
        projection.get(p) as i64 == report.bi.get(p).copied().unwrap_or(0)
    });
    if !agree {
        return Err(Error::InterfaceMismatch {
            projection: projection.to_string(),
            difference: format!("{:?}", report.bi),
        });
    }
    Ok(projection)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    /// A locally maximal cell of `K` becomes a locally minimal cell of `U`.
    KToU,
    /// A locally minimal cell of `U` becomes a locally maximal cell of `K`.
    UToK,
}

impl MoveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MoveKind::KToU => "k_to_u",
            MoveKind::UToK => "u_to_k",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub kind: MoveKind,
    pub index: usize,
    pub cell: Cell,
}

/// All moves that keep `K` closed and `U` open, in canonical cell order.
pub fn flip_moves(s: &SplitPair) -> Vec<Move> {
    let g = s.g();
    (0..g.len())
        .filter_map(|i| {
            let x = g.cell(i);
            let kind = if s.in_k[i] {
                let blocked = (0..g.len()).any(|j| s.in_k[j] && x.is_proper_subset_of(g.cell(j)));
                (!blocked).then_some(MoveKind::KToU)
            } else {
                let blocked = (0..g.len()).any(|j| !s.in_k[j] && g.cell(j).is_proper_subset_of(x));
                (!blocked).then_some(MoveKind::UToK)
            }?;
            Some(Move {
                kind,
                index: i,
                cell: x.clone(),
            })
        })
        .collect()
}

impl SplitPair {
    /// Applies a move without re-validating; moves from [`flip_moves`] are sound.
    pub fn apply(&self, mv: &Move) -> SplitPair {
        let mut next = self.clone();
        next.in_k[mv.index] = mv.kind == MoveKind::UToK;
        next
    }
}

/// How one side's Betti vector changed across a move of a `k`-cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaCase {
    /// `±e_k` in the dimension of the moved cell.
    SameDimension,
    /// The compensating change one dimension away (`e_{k-1}` for `K`, `e_{k+1}` for `U`).
    AdjacentDimension,
    /// Anything else; would contradict the dichotomy.
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DichotomyRecord {
    pub mv: Move,
    pub dim: usize,
    pub delta_k: Vec<i64>,
    pub delta_u: Vec<i64>,
    pub k_case: DeltaCase,
    pub u_case: DeltaCase,
}

impl DichotomyRecord {
    pub fn is_consistent(&self) -> bool {
        self.k_case != DeltaCase::Counterexample && self.u_case != DeltaCase::Counterexample
    }
}

fn unit(len: usize, at: isize, sign: i64) -> Option<Vec<i64>> {
    if at < 0 || at as usize >= len {
        return None;
    }
    let mut v = vec![0; len];
    v[at as usize] = sign;
    Some(v)
}

fn classify_delta(delta: &[i64], same: Option<Vec<i64>>, adjacent: Option<Vec<i64>>) -> DeltaCase {
    if same.as_deref() == Some(delta) {
        DeltaCase::SameDimension
    } else if adjacent.as_deref() == Some(delta) {
        DeltaCase::AdjacentDimension
    } else {
        DeltaCase::Counterexample
    }
}

fn diff(after: &BettiVector, before: &BettiVector, n: usize) -> Vec<i64> {
    let (a, b) = (after.padded(n), before.padded(n));
    a.iter().zip(&b).map(|(x, y)| *x as i64 - *y as i64).collect()
}

/// Records `Δb(K)` and `Δb(U)` across a move and classifies both against the
/// dichotomy: `K` gaining a `k`-cell changes by `+e_k` or `-e_{k-1}`, `U` losing it
/// by `-e_k` or `+e_{k+1}` (signs reversed for the opposite move).
pub fn dichotomy_track(s: &SplitPair, mv: &Move) -> Result<DichotomyRecord> {
    let next = s.apply(mv);
    let before = (betti(&s.k())?, betti(&s.u())?);
    let after = (betti(&next.k())?, betti(&next.u())?);
    Ok(dichotomy_from(s, mv, &before, &after))
}

pub(crate) fn dichotomy_from(
    s: &SplitPair,
    mv: &Move,
    before: &(BettiVector, BettiVector),
    after: &(BettiVector, BettiVector),
) -> DichotomyRecord {
    let g = s.g();
    let dim = g.dim_at(mv.index);
    let n = g.max_dim().map_or(0, |d| d + 2);
    let delta_k = diff(&after.0, &before.0, n);
    let delta_u = diff(&after.1, &before.1, n);
    let k = dim as isize;
    let sign = if mv.kind == MoveKind::UToK { 1 } else { -1 };
    let k_case = classify_delta(&delta_k, unit(n, k, sign), unit(n, k - 1, -sign));
    let u_case = classify_delta(&delta_u, unit(n, k, -sign), unit(n, k + 1, sign));
    DichotomyRecord {
        mv: mv.clone(),
        dim,
        delta_k,
        delta_u,
        k_case,
        u_case,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{closure, Cell};

    fn c(v: &[u32]) -> Cell {
        Cell::new(v.iter().copied()).unwrap()
    }

    fn tetra_boundary() -> DeltaComplex {
        let full = closure(&[c(&[1, 2, 3, 4])]);
        DeltaComplex::from_cells(full.cells().iter().filter(|x| x.len() < 4).cloned()).unwrap()
    }

    #[test]
    fn split_rejects_non_closed() {
        let g = tetra_boundary();
        let err = split(&g, &[c(&[1, 2])]).unwrap_err();
        assert!(matches!(err, Error::NotClosed { .. }));
        let whole = split(&g, g.cells()).unwrap();
        assert!(whole.u().is_empty());
    }

    #[test]
    fn sphere_split_moves() {
        let g = tetra_boundary();
        let s = split(&g, closure(&[c(&[1, 2, 3])]).cells()).unwrap();
        let moves = flip_moves(&s);
        assert_eq!(
            moves.iter().map(|m| (m.kind, m.cell.clone())).collect::<Vec<_>>(),
            vec![(MoveKind::UToK, c(&[4])), (MoveKind::KToU, c(&[1, 2, 3]))]
        );
        for m in &moves {
            assert!(s.apply(m).is_sound());
        }
    }

    #[test]
    fn extreme_splits_moves() {
        let g = tetra_boundary();
        let all_k = split(&g, g.cells()).unwrap();
        let moves = flip_moves(&all_k);
        assert_eq!(moves.len(), 4);
        assert!(moves.iter().all(|m| m.kind == MoveKind::KToU && m.cell.len() == 3));
        let all_u = split(&g, &[]).unwrap();
        let moves = flip_moves(&all_u);
        assert_eq!(moves.len(), 4);
        assert!(moves.iter().all(|m| m.kind == MoveKind::UToK && m.cell.len() == 1));
    }

    #[test]
    fn adjacent_pairs() {
        assert_eq!(adjacent_pair_decomposition(&[0, 1, 1]), Some(vec![(1, 1)]));
        assert_eq!(adjacent_pair_decomposition(&[1, 2, 1]), Some(vec![(0, 1), (1, 1)]));
        assert_eq!(adjacent_pair_decomposition(&[0, 0, 0]), Some(vec![]));
        assert_eq!(adjacent_pair_decomposition(&[1, 0, 1]), None);
        assert_eq!(adjacent_pair_decomposition(&[-1, 1]), None);
    }

    #[test]
    fn dichotomy_on_growing_k() {
        // G = triangle boundary; K = path 1-2-3, U = open edge {1,3}
        let g = closure(&[c(&[1, 2]), c(&[2, 3]), c(&[1, 3])]);
        let k = closure(&[c(&[1, 2]), c(&[2, 3])]);
        let s = split(&g, k.cells()).unwrap();
        let mv = flip_moves(&s)
            .into_iter()
            .find(|m| m.cell == c(&[1, 3]))
            .unwrap();
        let rec = dichotomy_track(&s, &mv).unwrap();
        assert_eq!(rec.delta_k[..2], [0, 1]);
        assert_eq!(rec.k_case, DeltaCase::SameDimension);
        assert!(rec.is_consistent());
    }

    #[test]
    fn dichotomy_on_isolated_vertex_and_merge() {
        let g = closure(&[c(&[1, 2])]);
        let s = split(&g, &[c(&[1])]).unwrap();
        let add_vertex = Move {
            kind: MoveKind::UToK,
            index: g.index_of(&c(&[2])).unwrap(),
            cell: c(&[2]),
        };
        let rec = dichotomy_track(&s, &add_vertex).unwrap();
        assert_eq!(rec.delta_k[0], 1);
        assert_eq!(rec.k_case, DeltaCase::SameDimension);
        let s2 = s.apply(&add_vertex);
        let join = flip_moves(&s2).into_iter().find(|m| m.cell == c(&[1, 2])).unwrap();
        let rec = dichotomy_track(&s2, &join).unwrap();
        assert_eq!(rec.delta_k[..2], [-1, 0]);
        assert_eq!(rec.k_case, DeltaCase::AdjacentDimension);
    }
}
