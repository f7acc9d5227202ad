//! The bicyclic family `ET(n, a, b)`: an odd `a`-cycle and a `b`-cycle
//! glued at the vertex `v_a`, with `n = a + b − 1` vertices and `n + 1`
//! edges. Its minimal generalized-inverse norm has a closed form, and an
//! explicit vector attains the reciprocal `μ∞`, so the family is exact
//! ground truth for the general solvers.

use num_traits::One;

use crate::error::{Error, Result};
use crate::geninv::{min_norm_bicyclic_median, min_norm_generalized_inverse};
use crate::graph::Graph;
use crate::matrix::RatVector;
use crate::rational::{int, Rational};
use crate::spectral::{evaluate, mu_infinity, weighted_incidence};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EtParams {
    a: usize,
    b: usize,
}

impl EtParams {
    /// `a` must be odd and both cycle lengths greater than 2.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a <= 2 || b <= 2 {
            return Err(Error::InvalidParameter(format!(
                "ET needs a, b > 2; got a = {a}, b = {b}"
            )));
        }
        if a.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "ET needs odd a; got a = {a}"
            )));
        }
        Ok(EtParams { a, b })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn n(&self) -> usize {
        self.a + self.b - 1
    }

    /// Every valid `(a, b)` with `a ≤ max_a` and `b ≤ max_b`.
    pub fn grid(max_a: usize, max_b: usize) -> Vec<EtParams> {
        (3..=max_a)
            .step_by(2)
            .flat_map(|a| (3..=max_b).map(move |b| EtParams { a, b }))
            .collect()
    }
}

/// Builds `ET(n, a, b)` with the edges in their defining order:
/// the path `v1 … va` and closing edge `va v1`, then the path
/// `va … vn` and closing edge `vn va`.
pub fn build_et(p: EtParams) -> Graph {
    let (a, n) = (p.a, p.n());
    let mut edges = Vec::with_capacity(n + 1);
    for k in 1..a {
        edges.push((k - 1, k));
    }
    edges.push((a - 1, 0));
    for k in a + 1..=n {
        edges.push((k - 2, k - 1));
    }
    edges.push((n - 1, a - 1));
    Graph::new(n, edges).expect("ET parameters give a simple graph")
}

/// The closed-form minimal norm of a generalized inverse of `W(ET)`.
pub fn closed_form_min_norm(p: EtParams) -> Rational {
    let (a, b) = (p.a, p.b);
    let v = if b % 2 == 1 {
        if a > 2 * b {
            a
        } else if b > 2 * a {
            b
        } else {
            2 * a.min(b)
        }
    } else {
        (2 * a).max(a + b)
    };
    int(v as i64)
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Vector for `b` odd and `a > 2b`; `‖Y‖∞ = a`.
fn long_odd_first(a: i64, b: i64) -> Vec<i64> {
    let mut y = Vec::with_capacity((a + b - 1) as usize);
    for i in 1..a {
        y.push(sign(i) * (a - (a - 1 - 2 * i).abs()));
    }
    y.push(2);
    for i in a + 1..a + b {
        y.push(sign(i) * (b - (2 * a + b + 1 - 2 * i).abs()));
    }
    y
}

/// Vector for `b` odd and `b ≤ a ≤ 2b`; `‖Y‖∞ = 2b`.
fn balanced_odd(a: i64, b: i64) -> Vec<i64> {
    let h = (b - 1) / 2;
    let mut y = Vec::with_capacity((a + b - 1) as usize);
    for i in 1..=h {
        y.push(sign(i) * (b - 2 * i));
    }
    // Empty when a = b.
    for _ in h + 1..=a - h - 1 {
        y.push(sign(h));
    }
    for i in a - h..a {
        y.push(sign(a - i) * (b - 2 * (a - i)));
    }
    y.push(2 * b);
    for i in a + 1..=a + h {
        y.push(sign(i - a) * (b - 2 * (i - a)));
    }
    for i in a + h + 1..a + b {
        y.push(sign(a + b - i) * (b - 2 * (a + b - i)));
    }
    y
}

/// Vector for `b` even; `‖Y‖∞ = max(2a, a + b)`.
fn even_second(a: i64, b: i64) -> Vec<i64> {
    let mut y = Vec::with_capacity((a + b - 1) as usize);
    for i in 1..=(a - 1) / 2 {
        y.push(sign(i) * (a - 2 * i));
    }
    for i in (a + 1) / 2..a {
        y.push(sign(a - i) * (a - 2 * (a - i)));
    }
    y.push(2 * a);
    for i in a + 1..=a + b / 2 {
        y.push(sign(i - a) * (a + 2 * (i - a)));
    }
    for i in a + b / 2 + 1..a + b {
        y.push(sign(a + b - i) * (a + 2 * (a + b - i)));
    }
    y
}

/// Position in `ET(n, a, b)` of vertex `k` (0-based) of `ET(n, b, a)`
/// when both cycle lengths are odd: the hubs correspond, the `b`-cycle
/// path `v1 … v(b−1)` of the swapped graph maps onto `v(a+1) … vn`, and its
/// `a`-cycle path `v(b+1) … vn` maps onto `v1 … v(a−1)`.
fn swap_position(a: usize, b: usize, k: usize) -> usize {
    if k + 1 < b {
        a + k
    } else if k + 1 == b {
        a - 1
    } else {
        k - b
    }
}

/// Unscaled integer vector attaining `μ∞(ET)` with every edge value in
/// `[−1, 1]`, before verification.
fn raw_optimal_vector(p: EtParams) -> Vec<i64> {
    let (a, b) = (p.a as i64, p.b as i64);
    if b % 2 == 0 {
        return even_second(a, b);
    }
    if a >= b {
        return if a > 2 * b {
            long_odd_first(a, b)
        } else {
            balanced_odd(a, b)
        };
    }
    // b odd and larger: build for ET(n, b, a) and relabel.
    let swapped = if b > 2 * a {
        long_odd_first(b, a)
    } else {
        balanced_odd(b, a)
    };
    let mut y = vec![0; swapped.len()];
    for (k, v) in swapped.into_iter().enumerate() {
        y[swap_position(p.a, p.b, k)] = v;
    }
    y
}

/// The `μ∞`-attaining vector for `ET(n, a, b)`, checked exactly before it is
/// returned: every edge value has magnitude at most one with equality
/// somewhere, and `‖W Y‖∞ / ‖Y‖∞` equals the reciprocal closed form.
pub fn optimal_vector(p: EtParams) -> Result<RatVector> {
    let y = RatVector::from_ints(&raw_optimal_vector(p));
    let g = build_et(p);
    let w = weighted_incidence(&g)?;
    let wy = w.w.mul_vec(&y)?;
    let target = closed_form_min_norm(p);
    let top = wy.inf_norm()?;
    if !top.is_one() {
        return Err(Error::ConstructionMismatch(format!(
            "ET({}, {}, {}): largest edge value is {top}, expected 1",
            p.n(),
            p.a,
            p.b
        )));
    }
    if y.inf_norm()? != target {
        return Err(Error::ConstructionMismatch(format!(
            "ET({}, {}, {}): ‖Y‖∞ = {}, expected {target}",
            p.n(),
            p.a,
            p.b,
            y.inf_norm()?
        )));
    }
    Ok(y)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtReport {
    pub params: EtParams,
    pub closed_form: Rational,
    pub lp_norm: Rational,
    pub median_norm: Rational,
    pub mu_lp: Rational,
    pub y_eval: Rational,
    pub all_consistent: bool,
}

/// Runs every route to the minimal norm and to `μ∞` on `ET(n, a, b)` and
/// compares them exactly.
pub fn et_report(p: EtParams) -> Result<EtReport> {
    let g = build_et(p);
    let closed_form = closed_form_min_norm(p);
    let lp_norm = min_norm_generalized_inverse(&g)?.norm;
    let median_norm = min_norm_bicyclic_median(&g)?.norm;
    let mu_lp = mu_infinity(&g)?.mu;
    let w = weighted_incidence(&g)?;
    let y_eval = evaluate(&w, &optimal_vector(p)?)?;
    let all_consistent = lp_norm == closed_form
        && median_norm == closed_form
        && (&mu_lp * &closed_form).is_one()
        && (&y_eval * &closed_form).is_one();
    Ok(EtReport {
        params: p,
        closed_form,
        lp_norm,
        median_norm,
        mu_lp,
        y_eval,
        all_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(a: usize, b: usize) -> EtParams {
        EtParams::new(a, b).unwrap()
    }

    #[test]
    fn builds_figure_graph() {
        let g = build_et(p(3, 7));
        let expected =
            Graph::parse_edge_list("1 2\n2 3\n3 1\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 3\n").unwrap();
        assert_eq!(g, expected);
        assert_eq!(
            g.degrees(),
            RatVector::from_ints(&[2, 2, 4, 2, 2, 2, 2, 2, 2])
        );
    }

    #[test]
    fn two_triangles() {
        let g = build_et(p(3, 3));
        assert_eq!((g.n(), g.m()), (5, 6));
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(
            EtParams::new(2, 3),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            EtParams::new(4, 3),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            EtParams::new(3, 2),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_min_norm(p(3, 7)), int(7));
        assert_eq!(closed_form_min_norm(p(7, 3)), int(7));
        assert_eq!(closed_form_min_norm(p(5, 4)), int(10));
        assert_eq!(closed_form_min_norm(p(5, 5)), int(10));
        assert_eq!(closed_form_min_norm(p(3, 4)), int(7));
        for a in (3..15).step_by(2) {
            for b in (3..15).step_by(2) {
                assert_eq!(closed_form_min_norm(p(a, b)), closed_form_min_norm(p(b, a)));
            }
        }
    }

    #[test]
    fn optimal_vectors() {
        assert_eq!(
            optimal_vector(p(3, 3)).unwrap(),
            RatVector::from_ints(&[-1, -1, 6, -1, -1])
        );
        assert_eq!(
            optimal_vector(p(3, 4)).unwrap(),
            RatVector::from_ints(&[-1, -1, 6, -5, 7, -5])
        );
        assert_eq!(
            optimal_vector(p(7, 3)).unwrap(),
            RatVector::from_ints(&[-3, 5, -7, 5, -3, 1, 2, 1, -3])
        );
        let w = weighted_incidence(&build_et(p(3, 3))).unwrap();
        assert_eq!(
            evaluate(&w, &optimal_vector(p(3, 3)).unwrap()).unwrap(),
            ratio(1, 6)
        );
    }

    #[test]
    fn exchanged_vectors_verify() {
        for (a, b) in [(3, 5), (3, 7), (3, 9), (5, 7), (5, 11), (7, 9)] {
            let y = optimal_vector(p(a, b)).unwrap();
            let w = weighted_incidence(&build_et(p(a, b))).unwrap();
            assert_eq!(
                evaluate(&w, &y).unwrap() * closed_form_min_norm(p(a, b)),
                int(1)
            );
        }
    }

    #[test]
    fn swap_is_an_isomorphism() {
        for (a, b) in [(3, 5), (5, 9), (3, 7)] {
            let g = build_et(p(a, b));
            let h = build_et(p(b, a));
            let mut mapped: Vec<(usize, usize)> = h
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let (x, y) = (swap_position(a, b, u), swap_position(a, b, v));
                    (x.min(y), x.max(y))
                })
                .collect();
            let mut orig: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(u, v)| (u.min(v), u.max(v)))
                .collect();
            mapped.sort();
            orig.sort();
            assert_eq!(mapped, orig);
        }
    }

    #[test]
    fn reports() {
        for (a, b, v) in [(3, 7, 7), (5, 5, 10), (3, 4, 7)] {
            let r = et_report(p(a, b)).unwrap();
            assert!(r.all_consistent, "{r:?}");
            assert_eq!(r.closed_form, int(v));
            assert_eq!(r.y_eval, ratio(1, v));
        }
    }
}
