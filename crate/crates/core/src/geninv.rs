//! Minimal ∞,∞-norm generalized inverses of `W` and the duality check
//! `μ∞ · min ‖G‖∞,∞ = 1`.
//!
//! For a connected non-bipartite graph `W` has full column rank, so the
//! generalized inverses are exactly the left inverses `G W = I`. The norm is
//! a max of row ℓ1 norms and each row of `G` is constrained independently
//! (`g_i W = e_iᵀ`), so the minimum of the max is the max of the per-row
//! minima.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::{min_l1_affine, weighted_median_l1};
use crate::matrix::{RatMatrix, RatVector};
use crate::rational::{one, Rational};
use crate::spectral::{mu_infinity, weighted_incidence, WeightedIncidence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenInvResult {
    /// `n × m` left inverse of `W` attaining the minimal norm.
    pub g: RatMatrix,
    pub norm: Rational,
    /// Minimal ℓ1 norm of each row.
    pub row_values: RatVector,
}

/// Integer spanning vector of the left null space of `W` for a bicyclic
/// graph, with gcd 1 and last nonzero entry positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelRow {
    pub beta: RatVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub mu: Rational,
    pub norm: Rational,
    pub product: Rational,
    pub pass: bool,
}

/// `W G W == W`, exactly.
pub fn is_generalized_inverse(w: &RatMatrix, g: &RatMatrix) -> Result<bool> {
    if g.rows() != w.cols() || g.cols() != w.rows() {
        return Err(Error::Dimension(format!(
            "G is {}x{} but W is {}x{}",
            g.rows(),
            g.cols(),
            w.rows(),
            w.cols()
        )));
    }
    Ok(&w.mul(g)?.mul(w)? == w)
}

/// `W` for a graph satisfying the full-column-rank hypothesis.
fn full_rank_incidence(g: &Graph) -> Result<WeightedIncidence> {
    if !g.is_connected() {
        return Err(Error::Hypothesis("graph is disconnected".into()));
    }
    if g.is_bipartite() {
        return Err(Error::Hypothesis(
            "graph is bipartite, so W lacks full column rank and has no left inverse".into(),
        ));
    }
    weighted_incidence(g)
}

fn assemble(w: &RatMatrix, rows: Vec<(RatVector, Rational)>) -> Result<GenInvResult> {
    let n = rows.len();
    let m = w.rows();
    let (vecs, values): (Vec<RatVector>, Vec<Rational>) = rows.into_iter().unzip();
    let g = RatMatrix::new(
        n,
        m,
        vecs.into_iter().flat_map(RatVector::into_inner).collect(),
    )?;
    let norm = values.iter().max().cloned().unwrap_or_default();
    if g.mul(w)? != RatMatrix::identity(n) {
        return Err(Error::ConstructionMismatch(
            "assembled G is not a left inverse".into(),
        ));
    }
    if g.induced_inf_norm()? != norm {
        return Err(Error::ConstructionMismatch(
            "row minima disagree with the induced norm".into(),
        ));
    }
    Ok(GenInvResult {
        g,
        norm,
        row_values: values.into(),
    })
}

/// Minimal-norm generalized inverse by one ℓ1 linear program per row:
/// `min ‖g_i‖₁` subject to `Wᵀ g_iᵀ = e_i`.
pub fn min_norm_generalized_inverse(g: &Graph) -> Result<GenInvResult> {
    let w = full_rank_incidence(g)?.w;
    let wt = w.transpose();
    let n = w.cols();
    let rows = (0..n)
        .into_par_iter()
        .map(|i| min_l1_affine(&wt, &RatVector::unit(n, i)))
        .collect::<Result<Vec<_>>>()?;
    assemble(&w, rows)
}

/// Some left inverse of a full-column-rank `w`: choose `n` independent rows
/// scanning in `row_order`, invert that square block, and zero the other
/// columns. Different orders give different inverses.
pub fn left_inverse(w: &RatMatrix, row_order: &[usize]) -> Result<RatMatrix> {
    let n = w.cols();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    for &r in row_order {
        if chosen.len() == n {
            break;
        }
        let mut trial: Vec<Vec<Rational>> = chosen.iter().map(|&c| w.row(c).to_vec()).collect();
        trial.push(w.row(r).to_vec());
        if RatMatrix::from_rows(trial)?.rank()? == chosen.len() + 1 {
            chosen.push(r);
        }
    }
    if chosen.len() < n {
        return Err(Error::Hypothesis("W does not have full column rank".into()));
    }
    let block = RatMatrix::from_rows(chosen.iter().map(|&c| w.row(c).to_vec()).collect())?;
    let inv = block.inverse()?;
    let mut g = RatMatrix::zeros(n, w.rows());
    for (k, &c) in chosen.iter().enumerate() {
        for i in 0..n {
            g[(i, c)] = inv[(i, k)].clone();
        }
    }
    Ok(g)
}

/// Scales a rational vector to coprime integers with the last nonzero
/// entry positive.
fn normalize_integral(v: &RatVector) -> RatVector {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return v.clone();
    }
    if ints
        .iter()
        .rev()
        .find(|x| !x.is_zero())
        .is_some_and(Signed::is_negative)
    {
        gcd = -gcd;
    }
    ints.into_iter()
        .map(|x| Rational::from_integer(x / &gcd))
        .collect()
}

fn bicyclic_incidence(g: &Graph) -> Result<WeightedIncidence> {
    let w = full_rank_incidence(g)?;
    if g.m() != g.n() + 1 {
        return Err(Error::Hypothesis(format!(
            "expected a bicyclic graph with m = n + 1, got n = {}, m = {}",
            g.n(),
            g.m()
        )));
    }
    Ok(w)
}

fn kernel_of(w: &RatMatrix) -> Result<KernelRow> {
    let basis = w.transpose().null_space();
    match basis.as_slice() {
        [beta] => Ok(KernelRow {
            beta: normalize_integral(beta),
        }),
        _ => Err(Error::Hypothesis(format!(
            "left null space of W has dimension {}",
            basis.len()
        ))),
    }
}

/// The spanning row `β` of `{z : z W = 0}` for a connected non-bipartite
/// bicyclic graph; every left inverse is `Ĝ + α β`.
pub fn kernel_row(g: &Graph) -> Result<KernelRow> {
    kernel_of(&bicyclic_incidence(g)?.w)
}

/// Same norm as [`min_norm_generalized_inverse`] for bicyclic graphs, with
/// each row's LP replaced by a weighted median along the one-dimensional
/// family `ĝ_i + z β`.
pub fn min_norm_bicyclic_median(g: &Graph) -> Result<GenInvResult> {
    let w = bicyclic_incidence(g)?.w;
    let order: Vec<usize> = (0..w.rows()).collect();
    min_norm_bicyclic_median_from(&w, &left_inverse(&w, &order)?)
}

/// Runs the median search starting from a caller-supplied left inverse.
pub fn min_norm_bicyclic_median_from(w: &RatMatrix, g_hat: &RatMatrix) -> Result<GenInvResult> {
    let beta = kernel_of(w)?.beta;
    let rows = (0..g_hat.rows())
        .map(|i| {
            let row = g_hat.row(i);
            let mut constant = Rational::zero();
            let mut points = Vec::new();
            for (gij, bj) in row.iter().zip(beta.iter()) {
                if bj.is_zero() {
                    constant += gij.abs();
                } else {
                    points.push((-(gij / bj), bj.abs()));
                }
            }
            let (z, value) = weighted_median_l1(&points)?;
            let best: RatVector = row
                .iter()
                .zip(beta.iter())
                .map(|(gij, bj)| gij + &z * bj)
                .collect();
            Ok((best, value + constant))
        })
        .collect::<Result<Vec<_>>>()?;
    assemble(w, rows)
}

/// Computes `μ∞` by face LPs and the minimal norm by row LPs, independently,
/// and checks that their product is exactly one.
pub fn verify_duality(g: &Graph) -> Result<DualityReport> {
    full_rank_incidence(g)?;
    let mu = mu_infinity(g)?.mu;
    let norm = min_norm_generalized_inverse(g)?.norm;
    let product = &mu * &norm;
    let pass = product == one();
    Ok(DualityReport {
        mu,
        norm,
        product,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn et(text: &str) -> Graph {
        Graph::parse_edge_list(text).unwrap()
    }

    fn et533() -> Graph {
        et("1 2\n2 3\n3 1\n3 4\n4 5\n5 3\n")
    }

    fn et634() -> Graph {
        et("1 2\n2 3\n3 1\n3 4\n4 5\n5 6\n6 3\n")
    }

    fn et937() -> Graph {
        et("1 2\n2 3\n3 1\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 3\n")
    }

    #[test]
    fn generalized_inverse_checks() {
        let w = weighted_incidence(&Graph::cycle(3)).unwrap().w;
        let inv = RatMatrix::from_int_rows(&[&[1, -1, 1], &[1, 1, -1], &[-1, 1, 1]]).unwrap();
        assert!(is_generalized_inverse(&w, &inv).unwrap());
        assert!(is_generalized_inverse(&w, &w.inverse().unwrap()).unwrap());
        assert!(!is_generalized_inverse(&w, &RatMatrix::zeros(3, 3)).unwrap());
        assert!(is_generalized_inverse(&w, &RatMatrix::zeros(3, 2)).is_err());
    }

    #[test]
    fn triangle_inverse_is_unique() {
        let r = min_norm_generalized_inverse(&Graph::cycle(3)).unwrap();
        assert_eq!(r.norm, int(3));
        assert_eq!(r.row_values, RatVector::from_ints(&[3, 3, 3]));
        assert_eq!(
            r.g,
            RatMatrix::from_int_rows(&[&[1, -1, 1], &[1, 1, -1], &[-1, 1, 1]]).unwrap()
        );
    }

    #[test]
    fn et_norms() {
        assert_eq!(min_norm_generalized_inverse(&et937()).unwrap().norm, int(7));
        assert_eq!(min_norm_generalized_inverse(&et634()).unwrap().norm, int(7));
    }

    #[test]
    fn rejects_bipartite_and_disconnected() {
        assert!(matches!(
            min_norm_generalized_inverse(&Graph::cycle(4)),
            Err(Error::Hypothesis(_))
        ));
        let g = Graph::new(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(matches!(
            min_norm_generalized_inverse(&g),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            verify_duality(&Graph::cycle(6)),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn kernel_rows() {
        assert_eq!(
            kernel_row(&et533()).unwrap().beta,
            RatVector::from_ints(&[1, -1, -1, 1, -1, 1])
        );
        assert_eq!(
            kernel_row(&et634()).unwrap().beta,
            RatVector::from_ints(&[0, 0, 0, -1, 1, -1, 1])
        );
        assert!(matches!(
            kernel_row(&Graph::cycle(3)),
            Err(Error::Hypothesis(_))
        ));
        let w = weighted_incidence(&et533()).unwrap().w;
        let beta = kernel_row(&et533()).unwrap().beta;
        let row = RatMatrix::new(1, 6, beta.into_inner()).unwrap();
        assert!(row.mul(&w).unwrap().is_zero());
    }

    #[test]
    fn median_path_matches() {
        assert_eq!(min_norm_bicyclic_median(&et533()).unwrap().norm, int(6));
        assert_eq!(min_norm_bicyclic_median(&et937()).unwrap().norm, int(7));
    }

    #[test]
    fn left_inverse_choice_does_not_matter() {
        let g = et937();
        let w = weighted_incidence(&g).unwrap().w;
        let forward: Vec<usize> = (0..w.rows()).collect();
        let backward: Vec<usize> = forward.iter().rev().copied().collect();
        let a = left_inverse(&w, &forward).unwrap();
        let b = left_inverse(&w, &backward).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.mul(&w).unwrap(), RatMatrix::identity(9));
        assert_eq!(b.mul(&w).unwrap(), RatMatrix::identity(9));
        let na = min_norm_bicyclic_median_from(&w, &a).unwrap().norm;
        let nb = min_norm_bicyclic_median_from(&w, &b).unwrap().norm;
        assert_eq!(na, nb);
    }

    #[test]
    fn duality_examples() {
        let r = verify_duality(&Graph::cycle(3)).unwrap();
        assert_eq!(
            (r.mu, r.norm, r.product, r.pass),
            (ratio(1, 3), int(3), int(1), true)
        );
        let r = verify_duality(&et937()).unwrap();
        assert_eq!(
            (r.mu, r.norm, r.product, r.pass),
            (ratio(1, 7), int(7), int(1), true)
        );
        let r = verify_duality(&et634()).unwrap();
        assert_eq!(
            (r.mu, r.norm, r.product, r.pass),
            (ratio(1, 7), int(7), int(1), true)
        );
    }
}
