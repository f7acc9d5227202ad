//! Exact linear programming over the rationals.
//!
//! [`solve`] runs a two-phase dense-tableau simplex with Bland's rule, so it
//! terminates on degenerate problems without any tolerance. The ℓ1 helpers
//! on top of it are the building blocks of the minimal-norm inverse.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{dot, RatMatrix, RatVector};
use crate::rational::{one, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: RatVector,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `minimize objective · x` subject to linear constraints and per-variable
/// bounds. Variables are free unless bounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpProblem {
    pub objective: RatVector,
    pub constraints: Vec<Constraint>,
    pub lower: Vec<Option<Rational>>,
    pub upper: Vec<Option<Rational>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub status: LpStatus,
    pub value: Option<Rational>,
    pub point: Option<RatVector>,
}

impl LpSolution {
    fn without_point(status: LpStatus) -> Self {
        LpSolution {
            status,
            value: None,
            point: None,
        }
    }
}

impl LpProblem {
    /// A problem over `objective.len()` free variables with no constraints.
    pub fn new(objective: RatVector) -> Self {
        let n = objective.len();
        LpProblem {
            objective,
            constraints: Vec::new(),
            lower: vec![None; n],
            upper: vec![None; n],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn constrain(&mut self, coeffs: RatVector, relation: Relation, rhs: Rational) -> &mut Self {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        self
    }

    pub fn bound(
        &mut self,
        var: usize,
        lower: Option<Rational>,
        upper: Option<Rational>,
    ) -> &mut Self {
        self.lower[var] = lower;
        self.upper[var] = upper;
        self
    }

    /// Sets `x ≥ 0` for every variable.
    pub fn nonnegative(mut self) -> Self {
        self.lower = vec![Some(Rational::zero()); self.num_vars()];
        self
    }

    fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        if self.lower.len() != n || self.upper.len() != n {
            return Err(Error::Dimension(format!("bounds for {} variables", n)));
        }
        for (i, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != n {
                return Err(Error::Dimension(format!(
                    "constraint {i} has {} coefficients for {n} variables",
                    c.coeffs.len()
                )));
            }
        }
        Ok(())
    }

    /// Exact check that `x` satisfies every constraint and bound.
    pub fn is_feasible(&self, x: &RatVector) -> bool {
        if x.len() != self.num_vars() {
            return false;
        }
        let bounds_ok = x.iter().enumerate().all(|(j, v)| {
            self.lower[j].as_ref().is_none_or(|l| v >= l)
                && self.upper[j].as_ref().is_none_or(|u| v <= u)
        });
        bounds_ok
            && self.constraints.iter().all(|c| {
                let lhs = dot(c.coeffs.as_slice(), x.as_slice());
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                }
            })
    }
}

/// How an original variable is expressed in nonnegative standard-form
/// columns: `x = offset + Σ sign · y_col`.
struct VarMap {
    offset: Rational,
    terms: Vec<(usize, bool)>,
}

/// Solves `p` exactly.
pub fn solve(p: &LpProblem) -> Result<LpSolution> {
    p.validate()?;
    let n = p.num_vars();

    for j in 0..n {
        if let (Some(l), Some(u)) = (&p.lower[j], &p.upper[j]) {
            if l > u {
                return Ok(LpSolution::without_point(LpStatus::Infeasible));
            }
        }
    }

    // Substitute bounded/free variables by nonnegative columns.
    let mut maps = Vec::with_capacity(n);
    let mut ncols = 0;
    let mut bound_rows: Vec<(usize, Rational)> = Vec::new();
    for j in 0..n {
        let map = match (&p.lower[j], &p.upper[j]) {
            (Some(l), u) => {
                if let Some(u) = u {
                    bound_rows.push((ncols, u - l));
                }
                VarMap {
                    offset: l.clone(),
                    terms: vec![(ncols, true)],
                }
            }
            (None, Some(u)) => VarMap {
                offset: u.clone(),
                terms: vec![(ncols, false)],
            },
            (None, None) => {
                ncols += 1;
                VarMap {
                    offset: Rational::zero(),
                    terms: vec![(ncols - 1, true), (ncols, false)],
                }
            }
        };
        ncols += 1;
        maps.push(map);
    }
    let structural = ncols;

    // Rows over the structural columns, each with relation and rhs.
    let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = Vec::new();
    for c in &p.constraints {
        let mut row = vec![Rational::zero(); structural];
        let mut rhs = c.rhs.clone();
        for (j, a) in c.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            rhs -= a * &maps[j].offset;
            for &(col, pos) in &maps[j].terms {
                if pos {
                    row[col] += a;
                } else {
                    row[col] -= a;
                }
            }
        }
        rows.push((row, c.relation, rhs));
    }
    for (col, cap) in bound_rows {
        let mut row = vec![Rational::zero(); structural];
        row[col] = one();
        rows.push((row, Relation::Le, cap));
    }

    let mut cost = vec![Rational::zero(); structural];
    let mut cost_offset = Rational::zero();
    for (j, c) in p.objective.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        cost_offset += c * &maps[j].offset;
        for &(col, pos) in &maps[j].terms {
            if pos {
                cost[col] += c;
            } else {
                cost[col] -= c;
            }
        }
    }

    let y = match Tableau::build(rows, structural).run(&cost) {
        Outcome::Optimal(y) => y,
        Outcome::Infeasible => return Ok(LpSolution::without_point(LpStatus::Infeasible)),
        Outcome::Unbounded => return Ok(LpSolution::without_point(LpStatus::Unbounded)),
    };

    let x: RatVector = maps
        .iter()
        .map(|m| {
            m.terms.iter().fold(m.offset.clone(), |acc, &(col, pos)| {
                if pos {
                    acc + &y[col]
                } else {
                    acc - &y[col]
                }
            })
        })
        .collect();
    let value = dot(p.objective.as_slice(), x.as_slice());
    debug_assert_eq!(value, dot(&cost, &y) + cost_offset);
    Ok(LpSolution {
        status: LpStatus::Optimal,
        value: Some(value),
        point: Some(x),
    })
}

enum Outcome {
    Optimal(Vec<Rational>),
    Infeasible,
    Unbounded,
}

/// Dense simplex tableau in canonical form: `a[i][basis[i]]` is 1 and the
/// basic columns are unit vectors. `rhs` stays nonnegative.
struct Tableau {
    a: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    structural: usize,
    /// Columns `>= first_artificial` are phase-one artificials.
    first_artificial: usize,
}

impl Tableau {
    /// Adds slack, surplus, and artificial columns. Rows whose slack can
    /// start in the basis get no artificial.
    fn build(rows: Vec<(Vec<Rational>, Relation, Rational)>, structural: usize) -> Tableau {
        let m = rows.len();
        let n_slack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let first_artificial = structural + n_slack;
        let mut a = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut slack = structural;
        let mut needs_art = Vec::new();
        for (i, (mut row, rel, mut b)) in rows.into_iter().enumerate() {
            row.resize(first_artificial, Rational::zero());
            let mut slack_col = None;
            match rel {
                Relation::Le => {
                    row[slack] = one();
                    slack_col = Some(slack);
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -one();
                    slack_col = Some(slack);
                    slack += 1;
                }
                Relation::Eq => {}
            }
            if b.is_negative() {
                for v in row.iter_mut() {
                    *v = -&*v;
                }
                b = -b;
            }
            match slack_col {
                Some(s) if row[s] == one() => basis.push(s),
                _ => {
                    basis.push(usize::MAX);
                    needs_art.push(i);
                }
            }
            a.push(row);
            rhs.push(b);
        }
        let total = first_artificial + needs_art.len();
        for row in a.iter_mut() {
            row.resize(total, Rational::zero());
        }
        for (k, &i) in needs_art.iter().enumerate() {
            a[i][first_artificial + k] = one();
            basis[i] = first_artificial + k;
        }
        Tableau {
            a,
            rhs,
            basis,
            structural,
            first_artificial,
        }
    }

    fn cols(&self) -> usize {
        self.a.first().map_or(self.first_artificial, Vec::len)
    }

    /// Reduced costs `c_j - c_B · column_j` and the current objective value.
    fn reduced_costs(&self, cost: &[Rational]) -> (Vec<Rational>, Rational) {
        let mut d: Vec<Rational> = (0..self.cols())
            .map(|j| cost.get(j).cloned().unwrap_or_default())
            .collect();
        let mut z = Rational::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = cost.get(b).cloned().unwrap_or_default();
            if cb.is_zero() {
                continue;
            }
            for (dj, aij) in d.iter_mut().zip(&self.a[i]) {
                if !aij.is_zero() {
                    *dj -= &cb * aij;
                }
            }
            z += &cb * &self.rhs[i];
        }
        (d, z)
    }

    fn pivot(&mut self, r: usize, c: usize, d: &mut [Rational], z: &mut Rational) {
        let inv = self.a[r][c].recip();
        if inv != one() {
            for v in self.a[r].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
            self.rhs[r] *= &inv;
        }
        let prow = std::mem::take(&mut self.a[r]);
        let prhs = self.rhs[r].clone();
        for i in 0..self.a.len() {
            if i == r || self.a[i][c].is_zero() {
                continue;
            }
            let f = self.a[i][c].clone();
            for (v, pv) in self.a[i].iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        let f = d[c].clone();
        if !f.is_zero() {
            for (v, pv) in d.iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            *z += &f * &prhs;
        }
        self.a[r] = prow;
        self.basis[r] = c;
    }

    /// Bland's rule iterations over columns `< limit`. Returns false if the
    /// problem is unbounded along some entering column.
    fn iterate(&mut self, d: &mut [Rational], z: &mut Rational, limit: usize) -> bool {
        loop {
            let Some(enter) = (0..limit).find(|&j| d[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.a.len() {
                let aij = &self.a[i][enter];
                if !aij.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / aij;
                let better = match &leave {
                    None => true,
                    Some((k, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter, d, z),
                None => return false,
            }
        }
    }

    fn run(mut self, cost: &[Rational]) -> Outcome {
        let total = self.cols();
        if total > self.first_artificial {
            let phase1: Vec<Rational> = (0..total)
                .map(|j| {
                    if j >= self.first_artificial {
                        one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            let (mut d, mut z) = self.reduced_costs(&phase1);
            let bounded = self.iterate(&mut d, &mut z, total);
            debug_assert!(bounded, "phase one is bounded below by zero");
            if z.is_positive() {
                return Outcome::Infeasible;
            }
            self.expel_artificials();
        }
        let (mut d, mut z) = self.reduced_costs(cost);
        if !self.iterate(&mut d, &mut z, self.first_artificial) {
            return Outcome::Unbounded;
        }
        let mut y = vec![Rational::zero(); self.structural];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.structural {
                y[b] = self.rhs[i].clone();
            }
        }
        Outcome::Optimal(y)
    }

    /// Pivots zero-level artificials out of the basis, dropping rows that
    /// turn out to be redundant.
    fn expel_artificials(&mut self) {
        let mut i = 0;
        while i < self.a.len() {
            if self.basis[i] < self.first_artificial {
                i += 1;
                continue;
            }
            match (0..self.first_artificial).find(|&j| !self.a[i][j].is_zero()) {
                Some(c) => {
                    let mut scratch = vec![Rational::zero(); self.cols()];
                    let mut z = Rational::zero();
                    self.pivot(i, c, &mut scratch, &mut z);
                    i += 1;
                }
                None => {
                    self.a.remove(i);
                    self.rhs.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }
}

/// Minimizes `‖x‖₁` subject to `A x = b`, via the split `x = x⁺ − x⁻`.
///
/// Returns a minimizer and the exact minimum.
pub fn min_l1_affine(a: &RatMatrix, b: &RatVector) -> Result<(RatVector, Rational)> {
    if a.rows() != b.len() {
        return Err(Error::Dimension(format!(
            "{}x{} system with right-hand side of length {}",
            a.rows(),
            a.cols(),
            b.len()
        )));
    }
    let n = a.cols();
    let mut p = LpProblem::new(RatVector::new(vec![one(); 2 * n])).nonnegative();
    for i in 0..a.rows() {
        let row: RatVector = a
            .row(i)
            .iter()
            .cloned()
            .chain(a.row(i).iter().map(|v| -v))
            .collect();
        p.constrain(row, Relation::Eq, b[i].clone());
    }
    let sol = solve(&p)?;
    match sol.status {
        LpStatus::Optimal => {
            let z = sol.point.expect("optimal solution carries a point");
            let x: RatVector = (0..n).map(|j| &z[j] - &z[n + j]).collect();
            Ok((x, sol.value.expect("optimal solution carries a value")))
        }
        LpStatus::Infeasible => Err(Error::Infeasible("A x = b has no solution".into())),
        LpStatus::Unbounded => unreachable!("an l1 objective is bounded below by zero"),
    }
}

/// Minimizes `f(z) = Σ w_k |z − p_k|` over `z`.
///
/// Returns the left endpoint of the minimizer interval and `f` there.
pub fn weighted_median_l1(points: &[(Rational, Rational)]) -> Result<(Rational, Rational)> {
    if points.is_empty() {
        return Err(Error::InvalidInput("weighted median of no points".into()));
    }
    if let Some((_, w)) = points.iter().find(|(_, w)| !w.is_positive()) {
        return Err(Error::InvalidInput(format!("weight {w} is not positive")));
    }
    let mut sorted: Vec<&(Rational, Rational)> = points.iter().collect();
    sorted.sort_by(|x, y| x.0.cmp(&y.0));
    let total: Rational = points.iter().map(|(_, w)| w).sum();
    // Smallest breakpoint whose cumulative weight reaches half the total:
    // there the right derivative of f turns nonnegative.
    let mut cumulative = Rational::zero();
    let mut z = sorted[0].0.clone();
    for (p, w) in &sorted {
        cumulative += w;
        if &cumulative + &cumulative >= total {
            z = p.clone();
            break;
        }
    }
    let value = points.iter().map(|(p, w)| w * (&z - p).abs()).sum();
    Ok((z, value))
}
