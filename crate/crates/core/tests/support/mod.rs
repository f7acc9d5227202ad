//! Test-only generators and oracles. Nothing here calls the simplex solver
//! or the crate's elimination routines.
#![allow(dead_code)]

use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use siginf_core::lp::{Constraint, LpProblem, LpStatus, Relation};
use siginf_core::rational::{int, ratio};
use siginf_core::{Graph, RatVector, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut impl Rng, span: i64, max_den: i64) -> Rational {
    ratio(rng.gen_range(-span..=span), rng.gen_range(1..=max_den))
}

/// Uniform-ish random labeled tree via a random Prüfer-like attachment.
pub fn random_tree_edges(rng: &mut impl Rng, n: usize) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    (1..n)
        .map(|k| (order[rng.gen_range(0..k)], order[k]))
        .collect()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// Random connected graph: a random spanning tree plus each other pair with
/// probability `p`, edges shuffled.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = random_tree_edges(rng, n);
    let have: std::collections::HashSet<(usize, usize)> =
        edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    for (u, v) in pairs(n) {
        if !have.contains(&(u, v)) && rng.gen_bool(p) {
            edges.push((u, v));
        }
    }
    edges.shuffle(rng);
    Graph::new(n, edges).unwrap()
}

pub fn random_connected_non_bipartite(rng: &mut impl Rng, n: usize) -> Graph {
    loop {
        let p = rng.gen_range(0.1..0.6);
        let g = random_connected(rng, n, p);
        if !g.is_bipartite() {
            return g;
        }
    }
}

/// Random connected non-bipartite graph with exactly `n + 1` edges.
pub fn random_bicyclic(rng: &mut impl Rng, n: usize) -> Graph {
    assert!(n >= 4, "no non-bipartite bicyclic graph on {n} vertices");
    loop {
        let mut edges = random_tree_edges(rng, n);
        let have: std::collections::HashSet<(usize, usize)> =
            edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let mut rest: Vec<(usize, usize)> =
            pairs(n).into_iter().filter(|e| !have.contains(e)).collect();
        rest.shuffle(rng);
        edges.extend(rest.into_iter().take(2));
        edges.shuffle(rng);
        let g = Graph::new(n, edges).unwrap();
        if !g.is_bipartite() {
            return g;
        }
    }
}

pub fn connected_labeled(n: usize) -> impl Iterator<Item = Graph> {
    Graph::all_labeled(n).filter(Graph::is_connected)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of graphs on `n ≤ 6` vertices
/// (smallest pair-mask under vertex relabeling).
pub fn graph_classes(n: usize) -> Vec<Graph> {
    let ps = pairs(n);
    let mut index = vec![vec![0usize; n]; n];
    for (k, &(i, j)) in ps.iter().enumerate() {
        index[i][j] = k;
        index[j][i] = k;
    }
    let perms = permutations(n);
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| ps.iter().map(|&(i, j)| index[p[i]][p[j]]).collect())
        .collect();
    let total = 1u64 << ps.len();
    let mut seen = vec![false; total as usize];
    let mut reps = Vec::new();
    for mask in 0..total {
        if seen[mask as usize] {
            continue;
        }
        reps.push(Graph::from_pair_mask(n, mask));
        for map in &maps {
            let mut image = 0u64;
            for (k, &t) in map.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    image |= 1 << t;
                }
            }
            seen[image as usize] = true;
        }
    }
    reps
}

/// Gaussian elimination for a square system; `None` unless the solution
/// is unique.
pub fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(p, c);
        b.swap(p, c);
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = &a[r][c] / &a[c][c];
                let pivot = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot).skip(c) {
                    *x -= &f * y;
                }
                let d = &f * &b[c];
                b[r] -= d;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

fn satisfies(c: &Constraint, x: &[Rational]) -> bool {
    let lhs: Rational = c.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
    match c.relation {
        Relation::Le => lhs <= c.rhs,
        Relation::Eq => lhs == c.rhs,
        Relation::Ge => lhs >= c.rhs,
    }
}

fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), f);
}

/// Vertices of `{x : constraints}` by brute force over every choice of
/// `dim` constraints taken as equalities.
fn vertices(cons: &[Constraint], dim: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for_each_subset(cons.len(), dim, &mut |s| {
        let a = s
            .iter()
            .map(|&i| cons[i].coeffs.as_slice().to_vec())
            .collect();
        let b = s.iter().map(|&i| cons[i].rhs.clone()).collect();
        if let Some(x) = solve_square(a, b) {
            if cons.iter().all(|c| satisfies(c, &x)) {
                out.push(x);
            }
        }
    });
    out
}

/// Oracle classification and optimal value for an LP whose variables are
/// all bounded below by zero (so the feasible region is pointed).
pub fn enumerate_lp(p: &LpProblem) -> (LpStatus, Option<Rational>) {
    let n = p.num_vars();
    assert!(p
        .lower
        .iter()
        .all(|l| l.as_ref().is_some_and(Zero::is_zero)));
    assert!(p.upper.iter().all(Option::is_none));
    let mut cons = p.constraints.clone();
    for j in 0..n {
        cons.push(Constraint {
            coeffs: RatVector::unit(n, j),
            relation: Relation::Ge,
            rhs: int(0),
        });
    }
    let verts = vertices(&cons, n);
    if verts.is_empty() {
        return (LpStatus::Infeasible, None);
    }
    // Extreme rays of the recession cone, normalized by Σ d = 1.
    let mut cone: Vec<Constraint> = cons
        .iter()
        .map(|c| Constraint {
            coeffs: c.coeffs.clone(),
            relation: c.relation,
            rhs: int(0),
        })
        .collect();
    cone.push(Constraint {
        coeffs: RatVector::from_ints(&vec![1; n]),
        relation: Relation::Eq,
        rhs: int(1),
    });
    let normal = cone.len() - 1;
    let mut improving_ray = false;
    for_each_subset(normal, n - 1, &mut |s| {
        if improving_ray {
            return;
        }
        let idx: Vec<usize> = s.iter().copied().chain([normal]).collect();
        let a = idx
            .iter()
            .map(|&i| cone[i].coeffs.as_slice().to_vec())
            .collect();
        let b = idx.iter().map(|&i| cone[i].rhs.clone()).collect();
        if let Some(d) = solve_square(a, b) {
            if cone.iter().all(|c| satisfies(c, &d)) {
                let cd: Rational = p.objective.iter().zip(&d).map(|(c, v)| c * v).sum();
                if cd.is_negative() {
                    improving_ray = true;
                }
            }
        }
    });
    if improving_ray {
        return (LpStatus::Unbounded, None);
    }
    let best = verts
        .iter()
        .map(|x| {
            p.objective
                .iter()
                .zip(x)
                .map(|(c, v)| c * v)
                .sum::<Rational>()
        })
        .min()
        .unwrap();
    (LpStatus::Optimal, Some(best))
}

/// Random LP with `x ≥ 0`, up to 6 variables and 8 constraints.
pub fn random_lp(rng: &mut impl Rng) -> LpProblem {
    let n = rng.gen_range(1..=6);
    let m = rng.gen_range(0..=8);
    let objective: RatVector = (0..n).map(|_| small_rational(rng, 4, 2)).collect();
    let mut p = LpProblem::new(objective).nonnegative();
    for _ in 0..m {
        let coeffs: RatVector = (0..n).map(|_| small_rational(rng, 3, 2)).collect();
        let relation = match rng.gen_range(0..5) {
            0 | 1 => Relation::Le,
            2 | 3 => Relation::Ge,
            _ => Relation::Eq,
        };
        p.constrain(coeffs, relation, small_rational(rng, 6, 2));
    }
    p
}
