//! Incidence matrices and the eigenvalue side of the duality: `μ∞` and the
//! unnormalized `q∞`.
//!
//! Both minima over the ∞-sphere are computed by face decomposition. A
//! minimizer of `‖M x‖∞` over `‖x‖∞ = 1` has some coordinate with
//! `|x_k| = 1`, and `M(−x) = −(M x)`, so it suffices to fix `x_k = 1` for
//! each `k` in turn and solve
//!
//! ```text
//! minimize t  subject to  −t ≤ (M x)_e ≤ t,  −1 ≤ x_i ≤ 1,  x_k = 1
//! ```
//!
//! then take the smallest of the `n` optima.

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::{solve, LpProblem, LpStatus, Relation};
use crate::matrix::{RatMatrix, RatVector};
use crate::rational::{one, Rational};

/// `W = B D⁻¹` for a graph without isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedIncidence {
    pub w: RatMatrix,
    pub graph: Graph,
    pub degrees: RatVector,
}

/// `μ∞` with a minimizing vector on the unit ∞-sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenResult {
    pub mu: Rational,
    pub optimal_x: RatVector,
    /// Lowest edge index with `|(W x)_e| = mu`.
    pub tight_edge: usize,
    /// Coordinate fixed to `+1` in the winning face problem.
    pub fixed_coord: usize,
}

/// The 0/1 edge-vertex incidence matrix `B`, one row per edge in edge order.
pub fn incidence_matrix(g: &Graph) -> RatMatrix {
    let mut b = RatMatrix::zeros(g.m(), g.n());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        b[(e, u)] = one();
        b[(e, v)] = one();
    }
    b
}

pub fn weighted_incidence(g: &Graph) -> Result<WeightedIncidence> {
    let deg = g.degree_counts();
    if let Some(v) = deg.iter().position(|&d| d == 0) {
        return Err(Error::Degenerate(format!(
            "vertex {} is isolated; D is singular",
            v + 1
        )));
    }
    let mut w = RatMatrix::zeros(g.m(), g.n());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        w[(e, u)] = Rational::new(1.into(), deg[u].into());
        w[(e, v)] = Rational::new(1.into(), deg[v].into());
    }
    Ok(WeightedIncidence {
        w,
        graph: g.clone(),
        degrees: g.degrees(),
    })
}

/// `‖W x‖∞ / ‖x‖∞`, an upper bound on `μ∞` for any nonzero `x`.
pub fn evaluate(w: &WeightedIncidence, x: &RatVector) -> Result<Rational> {
    if x.len() != w.w.cols() {
        return Err(Error::Dimension(format!(
            "vector of length {} for {} vertices",
            x.len(),
            w.w.cols()
        )));
    }
    if x.is_zero() {
        return Err(Error::InvalidInput(
            "cannot evaluate the zero vector".into(),
        ));
    }
    let wx = w.w.mul_vec(x)?;
    let top = if wx.is_empty() {
        Rational::zero()
    } else {
        wx.inf_norm()?
    };
    Ok(top / x.inf_norm()?)
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Hypothesis("graph is disconnected".into()))
    }
}

struct SphereMin {
    value: Rational,
    x: RatVector,
    fixed: usize,
}

/// One face problem: minimize `‖M x‖∞` with `x_k = 1`, `‖x‖∞ ≤ 1`.
fn face_lp(m: &RatMatrix, k: usize) -> Result<SphereMin> {
    let n = m.cols();
    let t = n;
    let mut objective = RatVector::zeros(n + 1);
    objective[t] = one();
    let mut p = LpProblem::new(objective);
    for e in 0..m.rows() {
        let upper: RatVector = m.row(e).iter().cloned().chain([-one()]).collect();
        let lower: RatVector = m.row(e).iter().cloned().chain([one()]).collect();
        p.constrain(upper, Relation::Le, Rational::zero());
        p.constrain(lower, Relation::Ge, Rational::zero());
    }
    for i in 0..n {
        let lo = if i == k { one() } else { -one() };
        p.bound(i, Some(lo), Some(one()));
    }
    p.bound(t, Some(Rational::zero()), None);
    let sol = solve(&p)?;
    if sol.status != LpStatus::Optimal {
        return Err(Error::ConstructionMismatch(format!(
            "face problem {k} reported {:?}",
            sol.status
        )));
    }
    let point = sol.point.expect("optimal point").into_inner();
    Ok(SphereMin {
        value: sol.value.expect("optimal value"),
        x: point[..n].to_vec().into(),
        fixed: k,
    })
}

/// `min ‖M x‖∞` over `‖x‖∞ = 1` by face decomposition; ties go to the
/// lowest fixed coordinate.
fn sphere_min(m: &RatMatrix) -> Result<SphereMin> {
    let faces: Vec<SphereMin> = (0..m.cols())
        .into_par_iter()
        .map(|k| face_lp(m, k))
        .collect::<Result<_>>()?;
    faces
        .into_iter()
        .reduce(|best, f| if f.value < best.value { f } else { best })
        .ok_or_else(|| Error::IllFormed("graph has no vertices".into()))
}

fn tight_edge(wx: &RatVector, mu: &Rational) -> usize {
    wx.iter().position(|v| &v.abs() == mu).unwrap_or(0)
}

/// The smallest normalized signless ∞-Laplacian eigenvalue
/// `μ∞ = min_{‖x‖∞=1} max_{i∼j} |x_i/d_i + x_j/d_j|`.
///
/// Bipartite graphs short-circuit to `μ∞ = 0` with the certificate
/// `x_i = σ_i d_i / max d`.
pub fn mu_infinity(g: &Graph) -> Result<EigenResult> {
    require_connected(g)?;
    let w = weighted_incidence(g)?;
    if let Some(part) = g.bipartition() {
        let deg = g.degree_counts();
        let (fixed, &dmax) = deg
            .iter()
            .enumerate()
            .rev()
            .max_by_key(|&(_, d)| d)
            .expect("nonempty graph");
        let x: RatVector = part
            .side
            .iter()
            .zip(&deg)
            .map(|(&s, &d)| Rational::new((i64::from(s) * d as i64).into(), (dmax as i64).into()))
            .collect();
        debug_assert!(w.w.mul_vec(&x)?.is_zero());
        return Ok(EigenResult {
            mu: Rational::zero(),
            optimal_x: x,
            tight_edge: 0,
            fixed_coord: fixed,
        });
    }
    let best = sphere_min(&w.w)?;
    let wx = w.w.mul_vec(&best.x)?;
    if wx.inf_norm()? != best.value || best.x.inf_norm()? != one() {
        return Err(Error::ConstructionMismatch(
            "face optimum does not certify itself".into(),
        ));
    }
    Ok(EigenResult {
        tight_edge: tight_edge(&wx, &best.value),
        mu: best.value,
        optimal_x: best.x,
        fixed_coord: best.fixed,
    })
}

/// `q∞ = 2 / max_u l(u)`, with `l(u)` the shortest odd closed walk through
/// `u`; zero for bipartite graphs.
pub fn q_infinity_formula(g: &Graph) -> Result<Rational> {
    require_connected(g)?;
    let longest = (0..g.n()).filter_map(|u| g.odd_walk_length(u)).max();
    Ok(match longest {
        Some(l) => Rational::new(2.into(), l.into()),
        None => Rational::zero(),
    })
}

/// `q∞ = min_{‖x‖∞=1} max_{i∼j} |x_i + x_j|`, by face decomposition on `B`.
pub fn q_infinity_lp(g: &Graph) -> Result<Rational> {
    require_connected(g)?;
    Ok(sphere_min(&incidence_matrix(g))?.value)
}

/// Exposed for diagnostics: `‖B x‖∞ / ‖x‖∞`.
pub fn evaluate_unweighted(g: &Graph, x: &RatVector) -> Result<Rational> {
    if x.is_zero() {
        return Err(Error::InvalidInput(
            "cannot evaluate the zero vector".into(),
        ));
    }
    let bx = incidence_matrix(g).mul_vec(x)?;
    let top = if bx.is_empty() {
        Rational::zero()
    } else {
        bx.inf_norm()?
    };
    Ok(top / x.inf_norm()?)
}
