//! Exterior derivative, Dirac matrix and Hodge Laplacian of a set of cells.
//!
//! `d[i][j]` is the signed incidence of the face `cell_j` in `cell_i`. It only depends on
//! the cells themselves, so closed sets, open sets and products are handled alike.

use crate::complex::{Cell, DeltaComplex};
use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignedIncidence {
    Minus,
    Zero,
    Plus,
}

impl SignedIncidence {
    pub fn value(self) -> i64 {
        match self {
            SignedIncidence::Minus => -1,
            SignedIncidence::Zero => 0,
            SignedIncidence::Plus => 1,
        }
    }

    fn from_parity(position: usize) -> Self {
        if position.is_multiple_of(2) {
            SignedIncidence::Plus
        } else {
            SignedIncidence::Minus
        }
    }
}

/// Sign of `y` as a face of `x`: the signature of `(v, y…)` times the signature of `x`,
/// where `v` is the label of `x` missing from `y`. With sorted labels this is
/// `(-1)^position(v in x)`. Zero unless `y ⊂ x` with `|x| = |y| + 1` and
/// `dim x = dim y + 1`.
pub fn incidence_sign(x: &Cell, dim_x: usize, y: &Cell, dim_y: usize) -> SignedIncidence {
    if x.len() != y.len() + 1 || dim_x != dim_y + 1 || !y.is_subset_of(x) {
        return SignedIncidence::Zero;
    }
    let position = x
        .labels()
        .iter()
        .zip(y.labels().iter().map(Some).chain(std::iter::once(None)))
        .position(|(a, b)| b != Some(a))
        .expect("y is a proper subset of x");
    SignedIncidence::from_parity(position)
}

/// `d`, `D = d + dᵀ` and the dimension markers of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorBundle {
    pub d: IntegerMatrix,
    pub dirac: IntegerMatrix,
    pub markers: Vec<usize>,
}

/// Sparse rows of `d`: for each cell, its codimension-one faces with signs.
pub(crate) fn face_lists(g: &DeltaComplex) -> Vec<Vec<(usize, i64)>> {
    (0..g.len())
        .map(|i| {
            let x = g.cell(i);
            let dx = g.dim_at(i);
            (0..x.len())
                .filter_map(|pos| {
                    let face = x.without_position(pos)?;
                    let j = g.index_of(&face)?;
                    let s = incidence_sign(x, dx, &face, g.dim_at(j));
                    (s != SignedIncidence::Zero).then(|| (j, s.value()))
                })
                .collect()
        })
        .collect()
}

pub fn exterior_derivative(g: &DeltaComplex) -> IntegerMatrix {
    let mut d = IntegerMatrix::zeros(g.len(), g.len());
    for (i, faces) in face_lists(g).into_iter().enumerate() {
        for (j, s) in faces {
            d[(i, j)] = s;
        }
    }
    d
}

pub fn dirac(g: &DeltaComplex) -> OperatorBundle {
    let d = exterior_derivative(g);
    let dirac = d.add(&d.transpose());
    OperatorBundle {
        d,
        dirac,
        markers: g.markers(),
    }
}

/// Symmetric sparse adjacency of `D`.
fn dirac_lists(g: &DeltaComplex) -> Vec<Vec<(usize, i64)>> {
    let faces = face_lists(g);
    let mut adj: Vec<Vec<(usize, i64)>> = faces.clone();
    for (i, f) in faces.iter().enumerate() {
        for &(j, s) in f {
            adj[j].push((i, s));
        }
    }
    adj
}

/// `d·d`; zero exactly when the cells form a Δ-set.
pub fn d_squared(g: &DeltaComplex) -> IntegerMatrix {
    let faces = face_lists(g);
    let mut out = IntegerMatrix::zeros(g.len(), g.len());
    for (i, fi) in faces.iter().enumerate() {
        for &(j, a) in fi {
            for &(k, b) in &faces[j] {
                out[(i, k)] += a * b;
            }
        }
    }
    out
}

pub fn is_valid_delta(g: &DeltaComplex) -> bool {
    let faces = face_lists(g);
    let mut acc = std::collections::HashMap::new();
    for fi in &faces {
        acc.clear();
        for &(j, a) in fi {
            for &(k, b) in &faces[j] {
                *acc.entry(k).or_insert(0i64) += a * b;
            }
        }
        if acc.values().any(|&v| v != 0) {
            return false;
        }
    }
    true
}

/// The full Hodge Laplacian `L = D²`. Defined for any set of cells; block diagonal
/// only for Δ-sets.
pub fn laplacian(g: &DeltaComplex) -> IntegerMatrix {
    let adj = dirac_lists(g);
    let mut out = IntegerMatrix::zeros(g.len(), g.len());
    for (i, ai) in adj.iter().enumerate() {
        for &(k, a) in ai {
            for &(j, b) in &adj[k] {
                out[(i, j)] += a * b;
            }
        }
    }
    out
}

/// `L = D²` cut along the markers into `L_0, …, L_q`. Blocks may be `0×0`.
pub fn hodge_blocks(g: &DeltaComplex) -> Result<Vec<IntegerMatrix>> {
    if !is_valid_delta(g) {
        return Err(Error::NotDeltaSet {
            d_squared: d_squared(g),
        });
    }
    let l = laplacian(g);
    let r = g.markers();
    Ok(r.windows(2)
        .map(|w| l.diagonal_block(w[0], w[1]))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::closure;

    fn c(v: &[u32]) -> Cell {
        Cell::new(v.iter().copied()).unwrap()
    }

    fn complex(v: &[&[u32]]) -> DeltaComplex {
        DeltaComplex::from_cells(v.iter().map(|x| c(x))).unwrap()
    }

    #[test]
    fn sign_examples() {
        // Signature((2,1)) * Signature((1,2)) = -1
        assert_eq!(incidence_sign(&c(&[1, 2]), 1, &c(&[1]), 0), SignedIncidence::Minus);
        assert_eq!(incidence_sign(&c(&[1, 2]), 1, &c(&[2]), 0), SignedIncidence::Plus);
        assert_eq!(incidence_sign(&c(&[1, 2]), 1, &c(&[3]), 0), SignedIncidence::Zero);
        assert_eq!(incidence_sign(&c(&[1, 2]), 1, &c(&[1, 2]), 1), SignedIncidence::Zero);
        // {1,2,3} ⊃ {1,3}: Signature((2,1,3)) = -1
        assert_eq!(
            incidence_sign(&c(&[1, 2, 3]), 2, &c(&[1, 3]), 1),
            SignedIncidence::Minus
        );
        // dimension condition
        assert_eq!(incidence_sign(&c(&[1, 2]), 2, &c(&[1]), 0), SignedIncidence::Zero);
    }

    #[test]
    fn comma_space() {
        let u = complex(&[&[1], &[1, 2]]);
        let b = dirac(&u);
        assert_eq!(b.d, IntegerMatrix::from_rows(&[[0, 0], [-1, 0]]));
        assert_eq!(laplacian(&u), IntegerMatrix::identity(2));
        let mirrored = complex(&[&[2], &[1, 2]]);
        assert_eq!(dirac(&mirrored).d, IntegerMatrix::from_rows(&[[0, 0], [1, 0]]));
    }

    #[test]
    fn closed_edge_dirac() {
        let g = closure(&[c(&[1, 2])]);
        let b = dirac(&g);
        assert_eq!(
            b.dirac,
            IntegerMatrix::from_rows(&[[0, 0, -1], [0, 0, 1], [-1, 1, 0]])
        );
        assert_eq!(b.markers, vec![0, 2, 3]);
    }

    #[test]
    fn minimal_circle_has_zero_dirac() {
        let g = DeltaComplex::with_dims(vec![(c(&[3]), 0), (c(&[1, 2]), 1)]).unwrap();
        let b = dirac(&g);
        assert!(b.dirac.is_zero());
        assert_eq!(b.dirac.rows(), 2);
        assert_eq!(b.markers, vec![0, 1, 2]);
    }

    #[test]
    fn punctured_triangle_star() {
        let u = complex(&[&[1], &[1, 2], &[1, 3], &[1, 2, 3]]);
        assert_eq!(
            dirac(&u).dirac,
            IntegerMatrix::from_rows(&[[0, -1, -1, 0], [-1, 0, 0, 1], [-1, 0, 0, -1], [0, 1, -1, 0]])
        );
        assert_eq!(laplacian(&u), IntegerMatrix::identity(4).scale(2));
    }

    #[test]
    fn open_edge_blocks() {
        let u = complex(&[&[1, 2]]);
        let blocks = hodge_blocks(&u).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].rows(), 0);
        assert_eq!(blocks[1], IntegerMatrix::from_rows(&[[0]]));
    }

    #[test]
    fn non_delta_set_detected() {
        let a = complex(&[&[1], &[1, 2], &[1, 2, 3]]);
        assert!(!is_valid_delta(&a));
        let err = hodge_blocks(&a).unwrap_err();
        match err {
            Error::NotDeltaSet { d_squared } => assert_eq!(d_squared[(2, 0)], -1),
            other => panic!("unexpected {other}"),
        }
        // dirac still succeeds
        assert_eq!(dirac(&a).dirac.rows(), 3);
        assert!(is_valid_delta(&closure(&[c(&[1, 2, 3])])));
    }

    #[test]
    fn d_is_strictly_lower_triangular() {
        let g = closure(&[c(&[1, 2, 3, 4])]);
        let d = exterior_derivative(&g);
        for i in 0..g.len() {
            for j in i..g.len() {
                assert_eq!(d[(i, j)], 0);
            }
        }
        assert!(d_squared(&g).is_zero());
    }
}
