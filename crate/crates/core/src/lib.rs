//! Exact arithmetic on graded Betti diagrams of Cohen-Macaulay modules.
//!
//! Diagrams live in the rational vector space cut out by the alternating
//! power-sum equations `sum (-1)^i j^m b[i][j] = 0`, `m < p`. Inside that space
//! the crate builds pure diagrams from degree sequences, expands diagrams
//! greedily into chains of pure diagrams, and provides the codimension
//! reduction maps and the complete-intersection / Gorenstein codimension-3
//! constructions that produce such expansions explicitly.
//!
//! All arithmetic is exact: coefficients are [`Rational`] (arbitrary precision)
//! and every comparison is an equality test, never a tolerance.

pub mod constructions;
pub mod decomposition;
pub mod diagram;
mod error;
pub mod exec;
pub mod format;
pub mod linalg;
pub mod order_complex;
pub mod poly;
pub mod pure;
pub mod rational;
pub mod reductions;

pub use constructions::{
    codim2_pure_construction, gorenstein3_decompose, gorenstein3_diagram, gorenstein3_split,
    hilbert_function, koszul_diagram, power_ideal_diagram, GorensteinData, MonomialModuleSpec,
};
pub use decomposition::{
    check_bounds, greedy_decompose, is_quasipure, is_strictly_quasipure, recombine, BoundSide,
    BoundsReport, BoundsVerdict, PureCombination, PureDecomposition, Term,
};
pub use diagram::{BettiDiagram, ShiftBounds, Validation};
pub use error::{Error, Result};
pub use exec::Exec;
pub use order_complex::{
    chain_coordinates, classify_boundary, facets, BoundaryCase, BoundaryVerdict, Face,
};
pub use poly::{HVector, LaurentPoly};
pub use pure::{
    compare, enumerate_poset, maximal_chains, pure_diagram, pure_multiplicity, space_dimension,
    DegreeSequence, Order, PosetView,
};
pub use rational::Rational;
pub use reductions::{phi, phi_inverse, phi_with, step_up_combine, step_up_expand, PhiContext};
