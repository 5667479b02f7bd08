//! The fractional partial-transversal program over independent-set columns:
//!
//! ```text
//! max Σ_I x_I w[I]   s.t.   Σ_I x_I ≤ 1,   Σ_I x_I |I ∩ V_j| ≤ 1  (j = 1..m),   x ≥ 0
//! ```
//!
//! Row 0 is the mass row, rows 1..=m are the block rows, so the dual vector is
//! `(y₀, y₁, …, y_m)`.

use num::{Signed, Zero};

use super::{check_failed, weighted_sum, ParamKind, ParamResult, Witness};
use crate::error::Result;
use crate::graph::{Graph, Partition, VertexSet, WeightVector};
use crate::indep::enumerate_independent_sets;
use crate::lp::{
    check_primal_dual_pair, check_strong_duality, simplex_solve, LpModel, LpOutcome, Relation,
    Sense,
};
use crate::rational::{self, Rational};

#[derive(Clone, Debug)]
pub struct PackingLp {
    pub columns: Vec<VertexSet>,
    pub model: LpModel,
    pub outcome: LpOutcome,
}

impl PackingLp {
    /// Builds and solves the program. `block_of` maps original vertex ids to
    /// block indices in `0..m`; blocks may be empty.
    pub(crate) fn solve(
        columns: Vec<VertexSet>,
        block_of: &[Option<usize>],
        m: usize,
        w: &WeightVector,
    ) -> Result<PackingLp> {
        let k = columns.len();
        let objective = columns
            .iter()
            .map(|s| rational::uint(s.weight(w)))
            .collect();
        let mut model = LpModel::new(Sense::Maximize, objective);
        model.add_row(vec![rational::one(); k], Relation::Le, rational::one());
        let mut block_rows = vec![vec![0u64; k]; m];
        for (i, s) in columns.iter().enumerate() {
            for v in s.iter() {
                if let Some(j) = block_of[v] {
                    block_rows[j][i] += 1;
                }
            }
        }
        for row in block_rows {
            model.add_row(
                row.into_iter().map(rational::uint).collect(),
                Relation::Le,
                rational::one(),
            );
        }
        let outcome = simplex_solve(&model);
        if !outcome.is_optimal() {
            return Err(check_failed(
                "packing_lp",
                format!("LP status {:?}", outcome.status),
            ));
        }
        let violations = check_strong_duality(&model, &outcome);
        if !violations.is_empty() {
            return Err(check_failed("packing_lp", format!("{violations:?}")));
        }
        Ok(PackingLp {
            columns,
            model,
            outcome,
        })
    }

    pub fn value(&self) -> &Rational {
        &self.outcome.value
    }

    /// y₀, the dual of the mass row.
    pub fn mass_dual(&self) -> &Rational {
        &self.outcome.dual[0]
    }

    /// (y₁, …, y_m).
    pub fn block_duals(&self) -> &[Rational] {
        &self.outcome.dual[1..]
    }

    /// Full dual (y₀, y₁, …, y_m).
    pub fn dual(&self) -> &[Rational] {
        &self.outcome.dual
    }

    /// Columns with positive mass, in canonical order.
    pub fn column_mass(&self) -> Vec<(VertexSet, Rational)> {
        self.columns
            .iter()
            .zip(&self.outcome.primal)
            .filter(|(_, x)| x.is_positive())
            .map(|(s, x)| (s.clone(), x.clone()))
            .collect()
    }

    pub fn total_mass(&self) -> Rational {
        rational::sum(&self.outcome.primal)
    }

    /// f = Σ_I x_I χ_I on `0..n`.
    pub fn vertex_vector(&self, n: usize) -> Vec<Rational> {
        let mut f = vec![Rational::zero(); n];
        for (s, x) in self.columns.iter().zip(&self.outcome.primal) {
            if x.is_zero() {
                continue;
            }
            for v in s.iter() {
                f[v] += x;
            }
        }
        f
    }

    /// Activity of block row j (1-based in the model, 0-based here).
    pub fn block_activity(&self, j: usize) -> Rational {
        self.model.row_activity(j + 1, &self.outcome.primal)
    }

    /// The optimal dual with the smallest mass dual y₀, so that as much dual
    /// weight as possible sits on the block rows. Solved as a second LP over
    /// the optimal dual face; the result is re-checked against the primal.
    pub fn block_heavy_dual(&self) -> Result<Vec<Rational>> {
        let rows = self.model.constraints.len();
        let mut objective = vec![Rational::zero(); rows];
        objective[0] = rational::one();
        let mut face = LpModel::new(Sense::Minimize, objective);
        for (i, c) in self.model.objective.iter().enumerate() {
            let coeffs = self
                .model
                .constraints
                .iter()
                .map(|r| r.coeffs[i].clone())
                .collect();
            face.add_row(coeffs, Relation::Ge, c.clone());
        }
        let rhs = self
            .model
            .constraints
            .iter()
            .map(|r| r.rhs.clone())
            .collect();
        face.add_row(rhs, Relation::Eq, self.value().clone());
        let out = simplex_solve(&face);
        if !out.is_optimal() {
            return Err(check_failed(
                "dual_face",
                format!("LP status {:?}", out.status),
            ));
        }
        let violations = check_primal_dual_pair(&self.model, &self.outcome.primal, &out.primal);
        if !violations.is_empty() {
            return Err(check_failed("dual_face", format!("{violations:?}")));
        }
        Ok(out.primal)
    }

    pub fn block_rows_tight(&self) -> bool {
        (0..self.model.constraints.len() - 1).all(|j| self.block_activity(j) == rational::one())
    }
}

/// ν*ʷ(G, 𝒱) together with the solved program.
#[derive(Clone, Debug)]
pub struct NuStar {
    pub result: ParamResult,
    pub lp: PackingLp,
}

/// ν*ʷ(G, 𝒱): maximum of Σ w(v)f(v) over fractional partial independent
/// transversals f. The witness is f itself.
pub fn nu_star_w(g: &Graph, p: &Partition, w: &WeightVector, cap: usize) -> Result<NuStar> {
    p.require_full()?;
    let fam = enumerate_independent_sets(g, cap)?;
    let lp = PackingLp::solve(fam.sets().to_vec(), p.block_map(), p.len(), w)?;
    let f = lp.vertex_vector(g.n());
    if lp.total_mass() > rational::one() {
        return Err(check_failed("witness", "column mass exceeds 1"));
    }
    for (j, block) in p.blocks().iter().enumerate() {
        if rational::sum(block.iter().map(|v| &f[v])) > rational::one() {
            return Err(check_failed(
                "witness",
                format!("block {j} carries mass above 1"),
            ));
        }
    }
    let value = weighted_sum(w, &f);
    if value != *lp.value() {
        return Err(check_failed("witness", "objective does not match witness"));
    }
    let result = ParamResult {
        kind: ParamKind::NuStarW,
        value,
        witness: Some(Witness::Fractional(f)),
        relaxation: None,
    };
    Ok(NuStar { result, lp })
}

/// ν*ʷ(G, 𝒱) in vertex form: max Σ w(v)f(v) over f ∈ IP(G) with f[V_j] ≤ 1,
/// with IP(G) written as convex combinations of ℐ(G) (mass exactly 1).
pub fn nu_star_vertex_form(
    g: &Graph,
    p: &Partition,
    w: &WeightVector,
    cap: usize,
) -> Result<Rational> {
    p.require_full()?;
    let n = g.n();
    let fam = enumerate_independent_sets(g, cap)?;
    let k = fam.len();
    let mut objective = vec![Rational::zero(); k + n];
    for v in 0..n {
        objective[k + v] = rational::uint(w.get(v));
    }
    let mut model = LpModel::new(Sense::Maximize, objective);
    let mut mass = vec![Rational::zero(); k + n];
    mass[..k].fill(rational::one());
    model.add_row(mass, Relation::Eq, rational::one());
    for v in 0..n {
        let mut row = vec![Rational::zero(); k + n];
        for (i, s) in fam.iter().enumerate() {
            if s.contains(v) {
                row[i] = -rational::one();
            }
        }
        row[k + v] = rational::one();
        model.add_row(row, Relation::Eq, Rational::zero());
    }
    for block in p.blocks() {
        let mut row = vec![Rational::zero(); k + n];
        for v in block.iter() {
            row[k + v] = rational::one();
        }
        model.add_row(row, Relation::Le, rational::one());
    }
    let out = simplex_solve(&model);
    if !out.is_optimal() {
        return Err(check_failed(
            "vertex_form",
            format!("LP status {:?}", out.status),
        ));
    }
    Ok(out.value)
}
