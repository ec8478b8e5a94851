//! Standard complexes used as fixtures, and the connected sum of two complexes along
//! matched unit spheres.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{closure, skeleton, star, unit_ball, unit_sphere, whitney_complex, Cell, DeltaComplex, Graph, Label};
use crate::error::{Error, Result};
use crate::fusion::SplitPair;
use crate::products::geometric_product;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    /// Cycle `C_n` as a 1-dimensional complex.
    Cyclic(usize),
    /// The full simplex on `n` vertices.
    Complete(usize),
    /// Boundary of the `q`-simplex, a `(q-1)`-sphere on `q + 1` vertices.
    SimplexBoundary(usize),
    /// `{{0}, {1, …, q+1}}` with dimensions `(0, q)`.
    MinimalSphere(usize),
    /// Boundary of the `n`-dimensional cross-polytope, vertex pairs `(2i-1, 2i)`.
    CrossPolytope(usize),
    /// Path on `n` vertices.
    Path(usize),
    /// `k`-skeleton of the full simplex on `n` vertices.
    SkeletonOf { n: usize, k: usize },
    /// `m` triangles' boundaries sharing the vertex 1.
    WedgeCircles(usize),
    /// Whitney complex of a uniformly random graph with `n` vertices and `m` edges.
    RandomWhitney { n: usize, m: usize, seed: u64 },
}

pub const KINDS: &[&str] = &[
    "cyclic",
    "complete",
    "simplex_boundary",
    "minimal_sphere",
    "cross_polytope",
    "path",
    "skeleton_of",
    "wedge_circles",
    "random_whitney",
];

impl GeneratorSpec {
    pub fn from_kind(kind: &str, params: &[u64]) -> Result<Self> {
        let arity = match kind {
            "skeleton_of" => 2,
            "random_whitney" => 3,
            k if KINDS.contains(&k) => 1,
            other => return Err(Error::UnknownGenerator(other.to_string())),
        };
        let required = if kind == "random_whitney" { 2 } else { arity };
        if params.len() < required || params.len() > arity {
            return Err(Error::InvalidParameter(format!(
                "{kind} takes {} integer parameter{}",
                if required == arity { arity.to_string() } else { format!("{required} or {arity}") },
                if arity == 1 { "" } else { "s" }
            )));
        }
        let p = |i: usize| params[i] as usize;
        Ok(match kind {
            "cyclic" => Self::Cyclic(p(0)),
            "complete" => Self::Complete(p(0)),
            "simplex_boundary" => Self::SimplexBoundary(p(0)),
            "minimal_sphere" => Self::MinimalSphere(p(0)),
            "cross_polytope" => Self::CrossPolytope(p(0)),
            "path" => Self::Path(p(0)),
            "skeleton_of" => Self::SkeletonOf { n: p(0), k: p(1) },
            "wedge_circles" => Self::WedgeCircles(p(0)),
            _ => Self::RandomWhitney {
                n: p(0),
                m: p(1),
                seed: params.get(2).copied().unwrap_or(0),
            },
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Cyclic(_) => "cyclic",
            Self::Complete(_) => "complete",
            Self::SimplexBoundary(_) => "simplex_boundary",
            Self::MinimalSphere(_) => "minimal_sphere",
            Self::CrossPolytope(_) => "cross_polytope",
            Self::Path(_) => "path",
            Self::SkeletonOf { .. } => "skeleton_of",
            Self::WedgeCircles(_) => "wedge_circles",
            Self::RandomWhitney { .. } => "random_whitney",
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::SkeletonOf { n, k } => write!(f, "skeleton_of({n},{k})"),
            Self::RandomWhitney { n, m, seed } => write!(f, "random_whitney({n},{m},{seed})"),
            Self::Cyclic(n)
            | Self::Complete(n)
            | Self::SimplexBoundary(n)
            | Self::MinimalSphere(n)
            | Self::CrossPolytope(n)
            | Self::Path(n)
            | Self::WedgeCircles(n) => write!(f, "{}({n})", self.kind()),
        }
    }
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

fn label(i: usize) -> Label {
    i as Label
}

pub fn generate(spec: GeneratorSpec) -> Result<DeltaComplex> {
    match spec {
        GeneratorSpec::Cyclic(n) => cyclic(n),
        GeneratorSpec::Complete(n) => complete(n),
        GeneratorSpec::SimplexBoundary(q) => simplex_boundary(q),
        GeneratorSpec::MinimalSphere(q) => minimal_sphere(q),
        GeneratorSpec::CrossPolytope(n) => cross_polytope(n),
        GeneratorSpec::Path(n) => path(n),
        GeneratorSpec::SkeletonOf { n, k } => Ok(skeleton(&complete(n)?, k)),
        GeneratorSpec::WedgeCircles(m) => wedge_circles(m),
        GeneratorSpec::RandomWhitney { n, m, seed } => random_whitney(n, m, seed),
    }
}

pub fn cyclic(n: usize) -> Result<DeltaComplex> {
    need(n >= 3, || format!("cyclic needs n >= 3, got {n}"))?;
    let edges: Vec<Cell> = (1..=n)
        .map(|i| Cell::new([label(i), label(i % n + 1)]).expect("distinct"))
        .collect();
    Ok(closure(&edges))
}

pub fn complete(n: usize) -> Result<DeltaComplex> {
    need(n >= 1, || "complete needs n >= 1".into())?;
    Ok(closure(&[Cell::new((1..=n).map(label))?]))
}

pub fn simplex_boundary(q: usize) -> Result<DeltaComplex> {
    need(q >= 1, || "simplex_boundary needs q >= 1".into())?;
    let top = Cell::new((1..=q + 1).map(label))?;
    let full = closure(std::slice::from_ref(&top));
    DeltaComplex::from_cells(full.cells().iter().filter(|x| **x != top).cloned())
}

pub fn minimal_sphere(q: usize) -> Result<DeltaComplex> {
    DeltaComplex::with_dims([
        (Cell::vertex(0), 0),
        (Cell::new((1..=q + 1).map(label))?, q),
    ])
}

pub fn cross_polytope(n: usize) -> Result<DeltaComplex> {
    need(n >= 1, || "cross_polytope needs n >= 1".into())?;
    let mut cells = vec![Vec::new()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(cells.len() * 3);
        for c in &cells {
            next.push(c.clone());
            for v in [2 * i - 1, 2 * i] {
                let mut c2: Vec<Label> = c.clone();
                c2.push(label(v));
                next.push(c2);
            }
        }
        cells = next;
    }
    DeltaComplex::from_cells(
        cells
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(Cell::from_sorted),
    )
}

pub fn path(n: usize) -> Result<DeltaComplex> {
    need(n >= 1, || "path needs n >= 1".into())?;
    let mut gens: Vec<Cell> = (1..n)
        .map(|i| Cell::new([label(i), label(i + 1)]).expect("distinct"))
        .collect();
    gens.push(Cell::vertex(1));
    Ok(closure(&gens))
}

pub fn wedge_circles(m: usize) -> Result<DeltaComplex> {
    need(m >= 1, || "wedge_circles needs m >= 1".into())?;
    let edges: Vec<Cell> = (1..=m)
        .flat_map(|i| {
            let (a, b) = (label(2 * i), label(2 * i + 1));
            [[1, a], [1, b], [a, b]]
        })
        .map(|e| Cell::new(e).expect("distinct"))
        .collect();
    Ok(closure(&edges))
}

pub fn random_whitney(n: usize, m: usize, seed: u64) -> Result<DeltaComplex> {
    need(n >= 1, || "random_whitney needs n >= 1".into())?;
    let mut pairs: Vec<(Label, Label)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (label(i), label(j))))
        .collect();
    need(m <= pairs.len(), || {
        format!("random_whitney: {m} edges exceed the {} possible", pairs.len())
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs.shuffle(&mut rng);
    pairs.truncate(m);
    Ok(whitney_complex(&Graph::new((1..=n).map(label).collect(), pairs)))
}

/// The octahedron, as the boundary of the 3-dimensional cross-polytope.
pub fn octahedron() -> DeltaComplex {
    cross_polytope(3).expect("n = 3")
}

/// A simplicial torus: the geometric product of two 4-cycles.
pub fn torus() -> DeltaComplex {
    let c4 = cyclic(4).expect("n = 4");
    geometric_product(&c4, &c4)
}

/// `M # H`: removes the open star of `x` from `M` (closed part `K`) and the closed
/// ball of `y` from `H` (open part `U`), and identifies the unit spheres through the
/// vertex matching `(label in S(x), label in S(y))`. Vertices of `H` outside the
/// sphere get fresh labels above those of `M`.
pub fn connected_sum(
    m: &DeltaComplex,
    x: &Cell,
    h: &DeltaComplex,
    y: &Cell,
    matching: &[(Label, Label)],
) -> Result<SplitPair> {
    let sx = unit_sphere(m, x)?;
    let sy = unit_sphere(h, y)?;
    let sx_vertices = sx.labels();
    let sy_vertices = sy.labels();
    let mut to_m: BTreeMap<Label, Label> = BTreeMap::new();
    let mut seen_x = BTreeSet::new();
    for &(a, b) in matching {
        if !sx_vertices.contains(&a) {
            return Err(Error::InvalidMatching(format!("{a} is not a vertex of S({x})")));
        }
        if !sy_vertices.contains(&b) {
            return Err(Error::InvalidMatching(format!("{b} is not a vertex of S({y})")));
        }
        if !seen_x.insert(a) || to_m.insert(b, a).is_some() {
            return Err(Error::InvalidMatching("matching is not injective".into()));
        }
    }
    if seen_x.len() != sx_vertices.len() || to_m.len() != sy_vertices.len() {
        return Err(Error::InvalidMatching("matching does not cover both spheres".into()));
    }
    let mapped_sy: BTreeSet<Cell> = sy
        .cells()
        .iter()
        .map(|c| c.map_labels(|v| to_m[&v]))
        .collect::<Result<_>>()?;
    let sx_cells: BTreeSet<Cell> = sx.cells().iter().cloned().collect();
    if mapped_sy != sx_cells {
        return Err(Error::InvalidMatching(format!(
            "matching does not carry S({y}) onto S({x})"
        )));
    }

    let star_x: BTreeSet<Cell> = star(m, x)?.into_iter().collect();
    let k_cells: Vec<Cell> = m.cells().iter().filter(|c| !star_x.contains(c)).cloned().collect();
    let ball_y = unit_ball(h, y)?;
    let base = m.max_label().unwrap_or(0) + 1;
    let mut fresh: BTreeMap<Label, Label> = BTreeMap::new();
    for v in h.labels() {
        if !to_m.contains_key(&v) {
            let next = base + fresh.len() as Label;
            fresh.insert(v, next);
        }
    }
    let relabel = |v: Label| to_m.get(&v).or_else(|| fresh.get(&v)).copied().expect("every label mapped");
    let u_cells: Vec<Cell> = h
        .cells()
        .iter()
        .filter(|c| !ball_y.contains(c))
        .map(|c| c.map_labels(relabel))
        .collect::<Result<_>>()?;
    let k_set: BTreeSet<&Cell> = k_cells.iter().collect();
    if let Some(clash) = u_cells.iter().find(|c| k_set.contains(c)) {
        return Err(Error::InvalidMatching(format!(
            "glued cell {clash} already lies in M"
        )));
    }
    let g = DeltaComplex::from_cells(k_cells.iter().cloned().chain(u_cells))?;
    let mask = g.mask_of(&k_cells)?;
    SplitPair::from_mask(g, mask)
}
