//! Hodge cohomology of finite abstract simplicial complexes, their open subsets and
//! Δ-sets.
//!
//! Every finite set of cells carries a Dirac matrix `D = d + dᵀ` read off from the subset
//! relation, and the kernels of the blocks of `L = D²` give the Betti vector. Closed
//! sets (subcomplexes) and open sets (unions of stars) are treated the same way, which
//! makes the fusion inequality `b(G) ≤ b(K) + b(U)` for a closed `K` and its open
//! complement `U` directly computable.
//!
//! ```
//! use hodge_fusion::{constructions, cohomology, complex::Cell};
//!
//! let sphere = constructions::simplex_boundary(3).unwrap();
//! assert_eq!(cohomology::betti(&sphere).unwrap().to_string(), "(1,0,1)");
//! let _ = Cell::new([1, 2]).unwrap();
//! ```

pub mod anneal;
pub mod cohomology;
pub mod complex;
pub mod constructions;
pub mod document;
pub mod error;
pub mod exact;
pub mod fusion;
pub mod matrix;
pub mod operator;
pub mod products;
pub mod spectral;

pub use cohomology::{betti, BettiVector};
pub use complex::{Cell, DeltaComplex, Label, SubsetClass};
pub use error::{Error, Result};
pub use fusion::{FusionReport, SplitPair};
pub use matrix::IntegerMatrix;
