//! Exact computation of the smallest normalized signless ∞-Laplacian
//! eigenvalue `μ∞` of a simple graph, together with the minimal
//! ∞,∞-norm generalized inverse of its weighted signless incidence matrix
//! `W = B D⁻¹`.
//!
//! For a connected non-bipartite graph the two quantities are reciprocal:
//! `μ∞ · min{‖G‖∞,∞ : WGW = W} = 1`. Every computation here runs in exact
//! rational arithmetic, so that identity is checked with `==`, not a
//! tolerance.
//!
//! * [`rational`] and [`matrix`]: scalars, dense vectors and matrices, norms, rank.
//! * [`graph`]: simple graphs, edge-list I/O, connectivity, bipartiteness,
//!   odd closed walks.
//! * [`lp`]: two-phase simplex over the rationals, ℓ1 minimization on an
//!   affine subspace, weighted medians.
//! * [`spectral`]: incidence matrices, `μ∞` and `q∞`.
//! * [`geninv`]: minimal-norm left inverses and the duality check.
//! * [`et`]: the `ET(n, a, b)` bicyclic family with closed forms.

pub mod error;
pub mod et;
pub mod geninv;
pub mod graph;
pub mod lp;
pub mod matrix;
pub mod rational;
pub mod spectral;

pub use error::{Error, Result};
pub use et::{build_et, closed_form_min_norm, et_report, optimal_vector, EtParams, EtReport};
pub use geninv::{
    is_generalized_inverse, kernel_row, min_norm_bicyclic_median, min_norm_generalized_inverse,
    verify_duality, DualityReport, GenInvResult, KernelRow,
};
pub use graph::{Bipartition, Graph};
pub use lp::{LpProblem, LpSolution, LpStatus, Relation};
pub use matrix::{RatMatrix, RatVector};
pub use rational::Rational;
pub use spectral::{
    evaluate, incidence_matrix, mu_infinity, q_infinity_formula, q_infinity_lp, weighted_incidence,
    EigenResult, WeightedIncidence,
};
