//! Dense-tableau primal simplex over exact rationals.
//!
//! Two phases, Bland's rule for both entering and leaving variables, fixed
//! column order. Every optimal outcome carries a dual vector read off the
//! final basis, so callers can rely on strong duality and complementary
//! slackness holding exactly.
//!
//! Dual sign conventions, per constraint row:
//!
//! | sense    | `≤` row | `≥` row | `=` row |
//! |----------|---------|---------|---------|
//! | maximize | y ≥ 0   | y ≤ 0   | free    |
//! | minimize | y ≤ 0   | y ≥ 0   | free    |
//!
//! and the dual constraints are `Aᵀy ≥ c` (maximize) or `Aᵀy ≤ c` (minimize).

use std::fmt;

use num::{Signed, Zero};

use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `sense c·x` subject to the constraint rows and `x ≥ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LpModel {
    pub sense: Sense,
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

impl LpModel {
    pub fn new(sense: Sense, objective: Vec<Rational>) -> Self {
        LpModel {
            sense,
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    /// Appends a row and returns its index.
    ///
    /// Panics if the row length differs from the variable count.
    pub fn add_row(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> usize {
        assert_eq!(
            coeffs.len(),
            self.num_vars(),
            "constraint row length must equal the variable count"
        );
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        self.constraints.len() - 1
    }

    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        dot(&self.objective, x)
    }

    pub fn row_activity(&self, row: usize, x: &[Rational]) -> Rational {
        dot(&self.constraints[row].coeffs, x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpOutcome {
    pub status: LpStatus,
    /// Optimal value; zero unless `status` is `Optimal`.
    pub value: Rational,
    pub primal: Vec<Rational>,
    /// One entry per constraint row.
    pub dual: Vec<Rational>,
}

impl LpOutcome {
    fn without_solution(status: LpStatus) -> Self {
        LpOutcome {
            status,
            value: Rational::zero(),
            primal: Vec::new(),
            dual: Vec::new(),
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ColumnKind {
    Structural,
    Slack,
    Artificial,
}

struct Tableau {
    /// m rows of `ncols + 1` entries; the last entry is the right-hand side.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs d_j = c_j − c_B B⁻¹ A_j; last entry is −z.
    obj: Vec<Rational>,
    basis: Vec<usize>,
    kinds: Vec<ColumnKind>,
}

impl Tableau {
    fn ncols(&self) -> usize {
        self.kinds.len()
    }

    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.ncols()]
    }

    fn set_costs(&mut self, costs: &[Rational]) {
        let width = self.ncols() + 1;
        let mut obj: Vec<Rational> = (0..width)
            .map(|j| {
                if j < costs.len() {
                    costs[j].clone()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            for (d, t) in obj.iter_mut().zip(&self.rows[i]) {
                if !t.is_zero() {
                    *d -= cb * t;
                }
            }
        }
        self.obj = obj;
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        debug_assert!(!p.is_zero());
        for t in self.rows[r].iter_mut() {
            if !t.is_zero() {
                *t /= &p;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let nz: Vec<usize> = (0..pivot_row.len())
            .filter(|&j| !pivot_row[j].is_zero())
            .collect();
        let eliminate = |row: &mut Vec<Rational>| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for &j in &nz {
                let delta = &f * &pivot_row[j];
                row[j] -= delta;
            }
        };
        for row in self.rows.iter_mut() {
            if !row.is_empty() {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Runs Bland-rule pivots until optimal or unbounded. Returns false on unbounded.
    fn optimize(&mut self, can_enter: impl Fn(usize) -> bool) -> bool {
        loop {
            let entering = (0..self.ncols()).find(|&j| can_enter(j) && self.obj[j].is_positive());
            let Some(c) = entering else { return true };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

/// Solves the model exactly. Infeasible and unbounded models are reported
/// through the outcome status.
pub fn simplex_solve(model: &LpModel) -> LpOutcome {
    let nv = model.num_vars();
    let m = model.constraints.len();

    // Normalise to non-negative right-hand sides.
    let mut flipped = vec![false; m];
    let mut rels = Vec::with_capacity(m);
    for (i, row) in model.constraints.iter().enumerate() {
        let mut rel = row.relation;
        if row.rhs.is_negative() {
            flipped[i] = true;
            rel = match rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        rels.push(rel);
    }

    let mut kinds = vec![ColumnKind::Structural; nv];
    let mut slack_col = vec![None; m];
    for (i, rel) in rels.iter().enumerate() {
        if *rel != Relation::Eq {
            slack_col[i] = Some(kinds.len());
            kinds.push(ColumnKind::Slack);
        }
    }
    let mut art_col = vec![None; m];
    for (i, rel) in rels.iter().enumerate() {
        if *rel != Relation::Le {
            art_col[i] = Some(kinds.len());
            kinds.push(ColumnKind::Artificial);
        }
    }
    let ncols = kinds.len();

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    // Column holding B⁻¹e_i throughout: the row's initial basic column.
    let mut unit_col = Vec::with_capacity(m);
    for (i, row) in model.constraints.iter().enumerate() {
        let sign = if flipped[i] {
            -Rational::from_integer(1.into())
        } else {
            rational::one()
        };
        let mut t = vec![Rational::zero(); ncols + 1];
        for (j, a) in row.coeffs.iter().enumerate() {
            if !a.is_zero() {
                t[j] = a * &sign;
            }
        }
        t[ncols] = &row.rhs * &sign;
        if let Some(s) = slack_col[i] {
            t[s] = if rels[i] == Relation::Le {
                rational::one()
            } else {
                -rational::one()
            };
        }
        let b = match rels[i] {
            Relation::Le => slack_col[i].expect("slack for <= row"),
            _ => art_col[i].expect("artificial for >= / = row"),
        };
        t[b] = rational::one();
        rows.push(t);
        basis.push(b);
        unit_col.push(b);
    }

    let mut tab = Tableau {
        rows,
        obj: Vec::new(),
        basis,
        kinds,
    };

    // Phase 1: maximise −Σ artificials.
    if art_col.iter().any(Option::is_some) {
        let costs: Vec<Rational> = tab
            .kinds
            .iter()
            .map(|k| {
                if *k == ColumnKind::Artificial {
                    -rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        tab.set_costs(&costs);
        let bounded = tab.optimize(|_| true);
        debug_assert!(bounded, "phase one is bounded by zero");
        if !tab.obj[ncols].is_zero() {
            return LpOutcome::without_solution(LpStatus::Infeasible);
        }
        // Drive zero-level artificials out of the basis where possible; rows
        // where that fails are linearly redundant and stay inert.
        for i in 0..m {
            if tab.kinds[tab.basis[i]] != ColumnKind::Artificial {
                continue;
            }
            if let Some(c) = (0..ncols)
                .find(|&j| tab.kinds[j] != ColumnKind::Artificial && !tab.rows[i][j].is_zero())
            {
                tab.pivot(i, c);
            }
        }
    }

    // Phase 2 on the internal maximisation problem.
    let internal: Vec<Rational> = model
        .objective
        .iter()
        .map(|c| {
            if model.sense == Sense::Maximize {
                c.clone()
            } else {
                -c
            }
        })
        .collect();
    let mut costs = vec![Rational::zero(); ncols];
    costs[..nv].clone_from_slice(&internal);
    tab.set_costs(&costs);
    let kinds = tab.kinds.clone();
    if !tab.optimize(|j| kinds[j] != ColumnKind::Artificial) {
        return LpOutcome::without_solution(LpStatus::Unbounded);
    }

    let mut primal = vec![Rational::zero(); nv];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < nv {
            primal[b] = tab.rhs(i).clone();
        }
    }
    // y_i = c_B B⁻¹ e_i = cost(unit_col) − d(unit_col), and those costs are 0.
    let dual: Vec<Rational> = (0..m)
        .map(|i| {
            let mut y = -tab.obj[unit_col[i]].clone();
            if flipped[i] {
                y = -y;
            }
            if model.sense == Sense::Minimize {
                y = -y;
            }
            y
        })
        .collect();
    let value = model.objective_value(&primal);
    LpOutcome {
        status: LpStatus::Optimal,
        value,
        primal,
        dual,
    }
}

/// One failed optimality condition.
#[derive(Clone, Debug, PartialEq)]
pub enum DualityViolation {
    NotOptimal,
    Shape,
    PrimalSign {
        var: usize,
    },
    PrimalRow {
        row: usize,
    },
    DualSign {
        row: usize,
    },
    DualRow {
        var: usize,
    },
    ValueMismatch {
        reported: Rational,
        primal: Rational,
        dual: Rational,
    },
    PrimalSlackness {
        var: usize,
    },
    DualSlackness {
        row: usize,
    },
}

impl fmt::Display for DualityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualityViolation::NotOptimal => write!(f, "outcome is not optimal"),
            DualityViolation::Shape => write!(f, "primal/dual lengths do not match the model"),
            DualityViolation::PrimalSign { var } => write!(f, "primal variable {var} is negative"),
            DualityViolation::PrimalRow { row } => write!(f, "primal row {row} is violated"),
            DualityViolation::DualSign { row } => write!(f, "dual variable {row} has the wrong sign"),
            DualityViolation::DualRow { var } => {
                write!(f, "dual constraint for variable {var} is violated")
            }
            DualityViolation::ValueMismatch { reported, primal, dual } => write!(
                f,
                "value mismatch: reported {reported}, primal {primal}, dual {dual}"
            ),
            DualityViolation::PrimalSlackness { var } => write!(
                f,
                "complementary slackness: variable {var} is positive but its dual constraint is slack"
            ),
            DualityViolation::DualSlackness { row } => write!(
                f,
                "complementary slackness: dual {row} is nonzero but its row is slack"
            ),
        }
    }
}

/// Re-checks an outcome against its model: primal feasibility, dual
/// feasibility, equal objective values and complementary slackness.
/// An empty list means the pair is a certified optimum.
pub fn check_strong_duality(model: &LpModel, out: &LpOutcome) -> Vec<DualityViolation> {
    check_pair(model, &out.primal, &out.dual, Some(&out.value), out.status)
}

/// Same as [`check_strong_duality`] for an arbitrary `(x, y)` pair.
pub fn check_primal_dual_pair(
    model: &LpModel,
    primal: &[Rational],
    dual: &[Rational],
) -> Vec<DualityViolation> {
    check_pair(model, primal, dual, None, LpStatus::Optimal)
}

fn check_pair(
    model: &LpModel,
    x: &[Rational],
    y: &[Rational],
    reported: Option<&Rational>,
    status: LpStatus,
) -> Vec<DualityViolation> {
    let mut out = Vec::new();
    if status != LpStatus::Optimal {
        out.push(DualityViolation::NotOptimal);
        return out;
    }
    if x.len() != model.num_vars() || y.len() != model.constraints.len() {
        out.push(DualityViolation::Shape);
        return out;
    }
    let max = model.sense == Sense::Maximize;

    for (j, xj) in x.iter().enumerate() {
        if xj.is_negative() {
            out.push(DualityViolation::PrimalSign { var: j });
        }
    }
    let activities: Vec<Rational> = (0..model.constraints.len())
        .map(|i| model.row_activity(i, x))
        .collect();
    for (i, row) in model.constraints.iter().enumerate() {
        let ok = match row.relation {
            Relation::Le => activities[i] <= row.rhs,
            Relation::Ge => activities[i] >= row.rhs,
            Relation::Eq => activities[i] == row.rhs,
        };
        if !ok {
            out.push(DualityViolation::PrimalRow { row: i });
        }
        let sign_ok = match (row.relation, max) {
            (Relation::Eq, _) => true,
            (Relation::Le, true) | (Relation::Ge, false) => !y[i].is_negative(),
            (Relation::Ge, true) | (Relation::Le, false) => !y[i].is_positive(),
        };
        if !sign_ok {
            out.push(DualityViolation::DualSign { row: i });
        }
    }

    let mut reduced = Vec::with_capacity(model.num_vars());
    for j in 0..model.num_vars() {
        let aty = model
            .constraints
            .iter()
            .zip(y)
            .filter(|(row, yi)| !row.coeffs[j].is_zero() && !yi.is_zero())
            .fold(Rational::zero(), |acc, (row, yi)| acc + &row.coeffs[j] * yi);
        let ok = if max {
            aty >= model.objective[j]
        } else {
            aty <= model.objective[j]
        };
        if !ok {
            out.push(DualityViolation::DualRow { var: j });
        }
        reduced.push(aty - &model.objective[j]);
    }

    let primal_value = model.objective_value(x);
    let dual_value = model
        .constraints
        .iter()
        .zip(y)
        .fold(Rational::zero(), |acc, (row, yi)| acc + &row.rhs * yi);
    let reported_ok = reported.is_none_or(|r| *r == primal_value);
    if primal_value != dual_value || !reported_ok {
        out.push(DualityViolation::ValueMismatch {
            reported: reported.cloned().unwrap_or_else(|| primal_value.clone()),
            primal: primal_value,
            dual: dual_value,
        });
    }

    for (j, xj) in x.iter().enumerate() {
        if xj.is_positive() && !reduced[j].is_zero() {
            out.push(DualityViolation::PrimalSlackness { var: j });
        }
    }
    for (i, row) in model.constraints.iter().enumerate() {
        if !y[i].is_zero() && activities[i] != row.rhs {
            out.push(DualityViolation::DualSlackness { row: i });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn box_maximum() {
        let mut m = LpModel::new(Sense::Maximize, ints(&[1, 1]));
        m.add_row(ints(&[1, 0]), Relation::Le, int(1));
        m.add_row(ints(&[0, 1]), Relation::Le, int(1));
        let out = simplex_solve(&m);
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value, int(2));
        assert_eq!(out.primal, ints(&[1, 1]));
        assert_eq!(out.dual, ints(&[1, 1]));
        assert!(check_strong_duality(&m, &out).is_empty());
    }

    #[test]
    fn one_variable_duality() {
        let mut m = LpModel::new(Sense::Maximize, ints(&[3]));
        m.add_row(ints(&[2]), Relation::Le, int(1));
        let out = simplex_solve(&m);
        assert_eq!(out.value, ratio(3, 2));
        assert_eq!(out.primal, vec![ratio(1, 2)]);
        assert_eq!(out.dual, vec![ratio(3, 2)]);
        assert!(check_strong_duality(&m, &out).is_empty());
    }

    #[test]
    fn perturbed_dual_is_reported() {
        let mut m = LpModel::new(Sense::Maximize, ints(&[3]));
        m.add_row(ints(&[2]), Relation::Le, int(1));
        let mut out = simplex_solve(&m);
        out.dual[0] = int(2);
        let v = check_strong_duality(&m, &out);
        assert!(v
            .iter()
            .any(|e| matches!(e, DualityViolation::ValueMismatch { .. })));
        assert!(v.iter().any(|e| e.to_string().contains("value mismatch")));
    }

    #[test]
    fn minimisation_with_ge_and_eq_rows() {
        // min 2x + 3y  s.t. x + y >= 4, x - y = 1  ->  x = 5/2, y = 3/2, value 19/2
        let mut m = LpModel::new(Sense::Minimize, ints(&[2, 3]));
        m.add_row(ints(&[1, 1]), Relation::Ge, int(4));
        m.add_row(ints(&[1, -1]), Relation::Eq, int(1));
        let out = simplex_solve(&m);
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value, ratio(19, 2));
        assert_eq!(out.primal, vec![ratio(5, 2), ratio(3, 2)]);
        assert!(
            check_strong_duality(&m, &out).is_empty(),
            "{:?}",
            check_strong_duality(&m, &out)
        );
    }

    #[test]
    fn negative_rhs_rows() {
        // max x  s.t. -x >= -3  (x <= 3)
        let mut m = LpModel::new(Sense::Maximize, ints(&[1]));
        m.add_row(ints(&[-1]), Relation::Ge, int(-3));
        let out = simplex_solve(&m);
        assert_eq!(out.value, int(3));
        assert_eq!(out.dual, vec![int(-1)]);
        assert!(check_strong_duality(&m, &out).is_empty());
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut m = LpModel::new(Sense::Maximize, ints(&[1]));
        m.add_row(ints(&[1]), Relation::Le, int(1));
        m.add_row(ints(&[1]), Relation::Ge, int(2));
        assert_eq!(simplex_solve(&m).status, LpStatus::Infeasible);

        let mut m = LpModel::new(Sense::Maximize, ints(&[1, 0]));
        m.add_row(ints(&[0, 1]), Relation::Le, int(1));
        assert_eq!(simplex_solve(&m).status, LpStatus::Unbounded);
    }

    #[test]
    fn redundant_equalities() {
        // x + y = 1 twice; max x
        let mut m = LpModel::new(Sense::Maximize, ints(&[1, 0]));
        m.add_row(ints(&[1, 1]), Relation::Eq, int(1));
        m.add_row(ints(&[1, 1]), Relation::Eq, int(1));
        m.add_row(ints(&[2, 2]), Relation::Eq, int(2));
        let out = simplex_solve(&m);
        assert_eq!(out.value, int(1));
        assert!(check_strong_duality(&m, &out).is_empty());
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example cycles under the textbook largest-coefficient rule.
        let mut m = LpModel::new(
            Sense::Maximize,
            vec![ratio(3, 4), int(-150), ratio(1, 50), int(-6)],
        );
        m.add_row(
            vec![ratio(1, 4), int(-60), ratio(-1, 25), int(9)],
            Relation::Le,
            int(0),
        );
        m.add_row(
            vec![ratio(1, 2), int(-90), ratio(-1, 50), int(3)],
            Relation::Le,
            int(0),
        );
        m.add_row(ints(&[0, 0, 1, 0]), Relation::Le, int(1));
        let out = simplex_solve(&m);
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value, ratio(1, 20));
        assert!(check_strong_duality(&m, &out).is_empty());
    }

    #[test]
    fn no_constraints() {
        let m = LpModel::new(Sense::Minimize, ints(&[1, 2]));
        let out = simplex_solve(&m);
        assert_eq!(out.value, int(0));
        assert!(out.dual.is_empty());
    }
}
