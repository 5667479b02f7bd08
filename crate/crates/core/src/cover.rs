//! Exact integer covering: minimise `cost·f` over `f ∈ ℕⁿ` with `A f ≥ demand`
//! for a 0/1 matrix `A`, by LP-based branch-and-bound.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lp::{simplex_solve, LpModel, Relation, Sense};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct CoverSolution {
    pub f: Vec<u64>,
    pub value: Rational,
    /// Optimal value of the LP relaxation at the root.
    pub relaxation: Rational,
}

impl CoverSolution {
    pub fn relaxation_is_tight(&self) -> bool {
        self.value == self.relaxation
    }
}

/// Minimum of `|f|` over non-negative integer `f` with `rows·f ≥ demands`.
pub fn integer_cover_min(rows: &[Vec<bool>], demands: &[u64]) -> Result<CoverSolution> {
    let ncols = rows.first().map_or(0, Vec::len);
    weighted_integer_cover_min(rows, demands, &vec![rational::one(); ncols])
}

/// Same as [`integer_cover_min`] with per-column positive costs.
pub fn weighted_integer_cover_min(
    rows: &[Vec<bool>],
    demands: &[u64],
    costs: &[Rational],
) -> Result<CoverSolution> {
    assert_eq!(rows.len(), demands.len(), "one demand per row");
    let ncols = costs.len();
    assert!(
        rows.iter().all(|r| r.len() == ncols),
        "row length must equal column count"
    );
    assert!(
        costs.iter().all(Signed::is_positive),
        "costs must be positive"
    );

    let mut active = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        if demands[i] == 0 {
            continue;
        }
        if !row.iter().any(|&a| a) {
            return Err(Error::Infeasible { row: i });
        }
        active.push(i);
    }

    let grain = costs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut search = Search {
        rows,
        demands,
        costs,
        active,
        grain: Rational::from_integer(grain),
        best: None,
        relaxation: None,
    };
    let mut bounds = vec![(0u64, None::<u64>); ncols];
    search.branch(&mut bounds);
    let (f, value) = search.best.expect("a feasible cover always exists");
    let relaxation = search.relaxation.expect("root LP solved");
    Ok(CoverSolution {
        f,
        value,
        relaxation,
    })
}

struct Search<'a> {
    rows: &'a [Vec<bool>],
    demands: &'a [u64],
    costs: &'a [Rational],
    active: Vec<usize>,
    /// Every integral objective value is a multiple of 1/grain.
    grain: Rational,
    best: Option<(Vec<u64>, Rational)>,
    relaxation: Option<Rational>,
}

impl Search<'_> {
    fn objective(&self, f: &[u64]) -> Rational {
        f.iter()
            .zip(self.costs)
            .filter(|(v, _)| **v > 0)
            .fold(Rational::zero(), |acc, (v, c)| acc + c * rational::uint(*v))
    }

    /// Smallest attainable integral value that is ≥ `lp`.
    fn round_up(&self, lp: &Rational) -> Rational {
        (lp * &self.grain).ceil() / &self.grain
    }

    fn offer(&mut self, f: Vec<u64>) {
        let value = self.objective(&f);
        if self.best.as_ref().is_none_or(|(_, b)| value < *b) {
            self.best = Some((f, value));
        }
    }

    fn branch(&mut self, bounds: &mut Vec<(u64, Option<u64>)>) {
        let n = self.costs.len();
        // Substitute f = lo + f' so lower bounds shift the demands.
        let mut model = LpModel::new(Sense::Minimize, self.costs.to_vec());
        for &i in &self.active {
            let covered: u64 = (0..n)
                .filter(|&j| self.rows[i][j])
                .map(|j| bounds[j].0)
                .sum();
            let residual = self.demands[i].saturating_sub(covered);
            let coeffs = self.rows[i]
                .iter()
                .map(|&a| if a { rational::one() } else { Rational::zero() })
                .collect();
            model.add_row(coeffs, Relation::Ge, rational::uint(residual));
        }
        for (j, &(lo, hi)) in bounds.iter().enumerate() {
            if let Some(hi) = hi {
                let mut coeffs = vec![Rational::zero(); n];
                coeffs[j] = rational::one();
                model.add_row(coeffs, Relation::Le, rational::uint(hi - lo));
            }
        }
        let out = simplex_solve(&model);
        if !out.is_optimal() {
            return;
        }
        let shift: Rational = bounds
            .iter()
            .zip(self.costs)
            .fold(Rational::zero(), |acc, ((lo, _), c)| {
                acc + c * rational::uint(*lo)
            });
        let lp_value = &out.value + &shift;
        if self.relaxation.is_none() {
            self.relaxation = Some(lp_value.clone());
        }
        if let Some((_, best)) = &self.best {
            if self.round_up(&lp_value) >= *best {
                return;
            }
        }
        let x: Vec<Rational> = out
            .primal
            .iter()
            .zip(bounds.iter())
            .map(|(v, (lo, _))| v + rational::uint(*lo))
            .collect();

        // Rounding every coordinate up stays feasible: the matrix is non-negative.
        let rounded: Vec<u64> = x
            .iter()
            .map(|v| rational::to_u64(&v.ceil()).expect("non-negative LP value"))
            .collect();

        match x.iter().position(|v| !v.is_integer()) {
            None => self.offer(rounded),
            Some(j) => {
                self.offer(rounded);
                let down = rational::to_u64(&x[j].floor()).expect("non-negative");
                let saved = bounds[j];
                bounds[j].1 = Some(down);
                self.branch(bounds);
                bounds[j] = (down + 1, saved.1);
                self.branch(bounds);
                bounds[j] = saved;
            }
        }
    }
}

/// Checks `rows·f ≥ demands` coordinate-wise.
pub fn covers(rows: &[Vec<bool>], demands: &[u64], f: &[u64]) -> bool {
    rows.iter().zip(demands).all(|(row, &d)| {
        let got: u64 = row
            .iter()
            .zip(f)
            .filter(|(a, _)| **a)
            .map(|(_, v)| *v)
            .sum();
        got >= d
    })
}
