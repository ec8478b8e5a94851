#![allow(dead_code)]

use std::collections::HashMap;

use hodge_fusion::complex::{closure, whitney_complex, Graph};
use hodge_fusion::constructions::{cyclic, octahedron, random_whitney, simplex_boundary};
use hodge_fusion::products::{join, shannon_product, JoinMode};
use hodge_fusion::{Cell, DeltaComplex, Label, SplitPair};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn c(v: &[Label]) -> Cell {
    Cell::new(v.iter().copied()).unwrap()
}

pub fn cells(v: &[&[Label]]) -> Vec<Cell> {
    v.iter().map(|x| c(x)).collect()
}

pub fn complex(v: &[&[Label]]) -> DeltaComplex {
    DeltaComplex::from_cells(cells(v)).unwrap()
}

pub fn with_dims(v: &[(&[Label], usize)]) -> DeltaComplex {
    DeltaComplex::with_dims(v.iter().map(|(x, d)| (c(x), *d))).unwrap()
}

pub const DIRAC_K: [[i64; 7]; 7] = [
    [0, 0, 0, -1, -1, 0, 0],
    [0, 0, 0, 1, 0, -1, 0],
    [0, 0, 0, 0, 1, 1, 0],
    [-1, 1, 0, 0, 0, 0, 1],
    [-1, 0, 1, 0, 0, 0, -1],
    [0, -1, 1, 0, 0, 0, 1],
    [0, 0, 0, 1, -1, 1, 0],
];

pub const DIRAC_U: [[i64; 7]; 7] = [
    [0, 1, 1, 1, 0, 0, 0],
    [1, 0, 0, 0, -1, -1, 0],
    [1, 0, 0, 0, 1, 0, -1],
    [1, 0, 0, 0, 0, 1, 1],
    [0, -1, 1, 0, 0, 0, 0],
    [0, -1, 0, 1, 0, 0, 0],
    [0, 0, -1, 1, 0, 0, 0],
];

pub const LAPLACIAN_U: [[i64; 7]; 7] = [
    [3, 0, 0, 0, 0, 0, 0],
    [0, 3, 0, 0, 0, 0, 0],
    [0, 0, 3, 0, 0, 0, 0],
    [0, 0, 0, 3, 0, 0, 0],
    [0, 0, 0, 0, 2, 1, -1],
    [0, 0, 0, 0, 1, 2, 1],
    [0, 0, 0, 0, -1, 1, 2],
];

pub const LAPLACIAN_K: [[i64; 7]; 7] = [
    [2, -1, -1, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0],
    [-1, -1, 2, 0, 0, 0, 0],
    [0, 0, 0, 3, 0, 0, 0],
    [0, 0, 0, 0, 3, 0, 0],
    [0, 0, 0, 0, 0, 3, 0],
    [0, 0, 0, 0, 0, 0, 3],
];

pub const LAPLACIAN_G: [[i64; 14]; 14] = [
    [3, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 3, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, -1, 3, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, -1, -1, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 1, -1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 1, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 3, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 1, 3],
];

/// The 2-sphere split into the closed triangle `B({1,2,3})` and the open star of `{4}`.
pub fn sphere_split() -> SplitPair {
    let g = simplex_boundary(3).unwrap();
    SplitPair::from_mask(
        g.clone(),
        g.mask_of(closure(&[c(&[1, 2, 3])]).cells()).unwrap(),
    )
    .unwrap()
}

/// Anna is vertex 1; the unit sphere of 1 is the path 2-3-4-5 plus the edge 6-7, and
/// 8, 9 close a cycle 6-8-9-7 outside the ball.
pub fn friends_graph() -> DeltaComplex {
    let edges = vec![
        (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7),
        (2, 3), (3, 4), (4, 5), (6, 7), (6, 8), (8, 9), (9, 7),
    ];
    whitney_complex(&Graph::new((1..=9).collect(), edges))
}

pub fn minimal_circle() -> DeltaComplex {
    with_dims(&[(&[1], 0), (&[2, 3], 1)])
}

pub fn utility_join() -> DeltaComplex {
    let a = complex(&[&[1], &[2], &[3]]);
    let b = complex(&[&[4], &[5], &[6]]);
    join(&a, &b, JoinMode::Closed)
}

pub fn torus_minimal() -> DeltaComplex {
    shannon_product(&minimal_circle(), &minimal_circle())
}

pub fn octahedron_equator() -> Vec<Cell> {
    cells(&[&[1], &[2], &[3], &[4], &[1, 3], &[2, 3], &[2, 4], &[1, 4]])
}

pub struct Fixture {
    pub name: &'static str,
    pub g: DeltaComplex,
    pub b: Vec<usize>,
}

pub struct SplitFixture {
    pub name: &'static str,
    pub split: SplitPair,
    pub bg: Vec<usize>,
    pub bk: Vec<usize>,
    pub bu: Vec<usize>,
}

pub fn fixtures() -> Vec<Fixture> {
    let s = minimal_circle();
    let t2 = torus_minimal();
    let t3 = shannon_product(&t2, &s);
    let t4 = shannon_product(&t2, &t2);
    let s2 = with_dims(&[(&[0], 0), (&[1, 2, 3], 2)]);
    let mut out = vec![
        Fixture { name: "tetrahedron boundary", g: simplex_boundary(3).unwrap(), b: vec![1, 0, 1] },
        Fixture { name: "comma space", g: complex(&[&[1], &[1, 2]]), b: vec![0, 0] },
        Fixture {
            name: "punctured 2-simplex star",
            g: complex(&[&[1], &[1, 2], &[1, 3], &[1, 2, 3]]),
            b: vec![0, 0, 0],
        },
        Fixture { name: "utility join", g: utility_join(), b: vec![1, 4] },
        Fixture { name: "octahedron", g: octahedron(), b: vec![1, 0, 1] },
        Fixture { name: "minimal circle", g: s, b: vec![1, 1] },
        Fixture { name: "torus S x S", g: t2, b: vec![1, 2, 1] },
        Fixture { name: "T^3", g: t3, b: vec![1, 3, 3, 1] },
        Fixture { name: "T^4", g: t4, b: vec![1, 4, 6, 4, 1] },
        Fixture { name: "S^2 x S^2", g: shannon_product(&s2, &s2), b: vec![1, 0, 2, 0, 1] },
        Fixture { name: "friends graph", g: friends_graph(), b: vec![1, 1, 0] },
    ];
    for q in 1..=4 {
        let mut b = vec![0; q + 1];
        b[0] = 1;
        b[q] = 1;
        out.push(Fixture {
            name: ["minimal 1-sphere", "minimal 2-sphere", "minimal 3-sphere", "minimal 4-sphere"][q - 1],
            g: hodge_fusion::constructions::minimal_sphere(q).unwrap(),
            b,
        });
    }
    out
}

fn split_of(g: DeltaComplex, k: &[Cell]) -> SplitPair {
    let mask = g.mask_of(k).unwrap();
    SplitPair::from_mask(g, mask).unwrap()
}

pub fn split_fixtures() -> Vec<SplitFixture> {
    let friends = friends_graph();
    let ball = hodge_fusion::complex::unit_ball(&friends, &c(&[1])).unwrap();
    let sphere = hodge_fusion::complex::unit_sphere(&friends, &c(&[1])).unwrap();
    let friends_k: Vec<Cell> = friends
        .cells()
        .iter()
        .filter(|x| **x != c(&[8, 9]))
        .cloned()
        .collect();
    let triangle = closure(&[c(&[1, 2, 3])]);
    let circle = cyclic(4).unwrap();
    vec![
        SplitFixture {
            name: "sphere = closed ball + open ball",
            split: sphere_split(),
            bg: vec![1, 0, 1],
            bk: vec![1, 0, 0],
            bu: vec![0, 0, 1],
        },
        SplitFixture {
            name: "octahedron with equator",
            split: split_of(octahedron(), &octahedron_equator()),
            bg: vec![1, 0, 1],
            bk: vec![1, 1, 0],
            bu: vec![0, 0, 2],
        },
        SplitFixture {
            name: "closed 2-ball = circle + open triangle",
            split: split_of(triangle.clone(), simplex_boundary(2).unwrap().cells()),
            bg: vec![1, 0, 0],
            bk: vec![1, 1, 0],
            bu: vec![0, 0, 1],
        },
        SplitFixture {
            name: "circle = path + open edge",
            split: SplitPair::from_open(circle.clone(), &[c(&[1, 2])]).unwrap(),
            bg: vec![1, 1],
            bk: vec![1, 0],
            bu: vec![0, 1],
        },
        SplitFixture {
            name: "circle minus three points",
            split: split_of(circle, &cells(&[&[1], &[2], &[3]])),
            bg: vec![1, 1],
            bk: vec![3, 0],
            bu: vec![0, 3],
        },
        SplitFixture {
            name: "friends ball = unit sphere + star",
            split: split_of(ball, sphere.cells()),
            bg: vec![1, 0, 0],
            bk: vec![2, 0, 0],
            bu: vec![0, 1, 0],
        },
        SplitFixture {
            name: "friends graph minus an edge",
            split: split_of(friends, &friends_k),
            bg: vec![1, 1, 0],
            bk: vec![1, 0, 0],
            bu: vec![0, 1, 0],
        },
        SplitFixture {
            name: "wedge of three circles at its center",
            split: split_of(hodge_fusion::constructions::wedge_circles(3).unwrap(), &[c(&[1])]),
            bg: vec![1, 3],
            bk: vec![1, 0],
            bu: vec![0, 3],
        },
        SplitFixture {
            name: "octahedron minus two poles",
            split: split_of(octahedron(), &cells(&[&[5], &[6]])),
            bg: vec![1, 0, 1],
            bk: vec![2, 0, 0],
            bu: vec![0, 1, 1],
        },
    ]
}

/// A random Whitney complex on at most 15 vertices and a random closed `K` in it,
/// the complement of a union of random stars.
pub fn random_pair(seed: u64) -> SplitPair {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0fc0de);
    let n = rng.gen_range(3..=15usize);
    let max_edges = (n * (n - 1) / 2).min(4 * n);
    let m = rng.gen_range(n - 1..=max_edges);
    let g = random_whitney(n, m, rng.gen()).unwrap();
    let stars = rng.gen_range(1..=3usize);
    let open = hodge_fusion::complex::random_open_set(&g, stars, rng.gen());
    SplitPair::from_open(g, &open).unwrap()
}

const P: u64 = 1_000_000_007;

fn rank_mod_p(mut rows: Vec<Vec<u64>>, cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], P - 2);
        for j in col..cols {
            rows[rank][j] = rows[rank][j] * inv % P;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for j in col..cols {
                    let sub = f * rows[rank][j] % P;
                    rows[r][j] = (rows[r][j] + P - sub) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

/// Betti vector from boundary ranks over `GF(p)`, built straight from the cells:
/// `b_p = f_p - rank d_p - rank d_{p-1}`.
pub fn oracle_betti(g: &DeltaComplex) -> Vec<usize> {
    let top = match g.max_dim() {
        Some(d) => d,
        None => return Vec::new(),
    };
    let mut index: Vec<HashMap<Vec<Label>, usize>> = vec![HashMap::new(); top + 1];
    for (x, d) in g.iter() {
        let k = index[d].len();
        index[d].insert(x.labels().to_vec(), k);
    }
    let f: Vec<usize> = index.iter().map(HashMap::len).collect();
    let ranks: Vec<usize> = (0..top)
        .map(|p| {
            let mut rows = Vec::new();
            for x in index[p + 1].keys() {
                let mut row = vec![0u64; f[p]];
                for pos in 0..x.len() {
                    let mut face = x.clone();
                    face.remove(pos);
                    if let Some(&j) = index[p].get(&face) {
                        row[j] = if pos % 2 == 0 { 1 } else { P - 1 };
                    }
                }
                rows.push(row);
            }
            rank_mod_p(rows, f[p])
        })
        .collect();
    (0..=top)
        .map(|p| {
            let below = if p > 0 { ranks[p - 1] } else { 0 };
            let above = if p < top { ranks[p] } else { 0 };
            f[p] - below - above
        })
        .collect()
}
