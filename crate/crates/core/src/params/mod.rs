//! The weighted independence and domination parameters, each computed exactly
//! and returned together with a witness that is re-checked before it is handed
//! out.
//!
//! Domination-type parameters are minimised over non-negative *integer*
//! functions; the LP relaxation value is attached to the result as well.

mod conditions;
mod packing;

use std::fmt;
use std::str::FromStr;

use num::Zero;
use serde_json::{json, Value};

use crate::cover::{integer_cover_min, weighted_integer_cover_min, CoverSolution};
use crate::error::{Error, Result};
use crate::graph::{Graph, Partition, VertexSet, WeightVector};
use crate::indep::{
    enumerate_independent_sets, is_independent_unchecked, max_weight_independent_set,
};
use crate::instance::Instance;
use crate::lp::{simplex_solve, LpModel, Relation, Sense};
use crate::rational::{self, Rational};

pub use conditions::{
    check_theorem_conditions, ConditionReport, SubsetCheck, MAX_CONDITION_BLOCKS,
};
pub use packing::{nu_star_vertex_form, nu_star_w, PackingLp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamKind {
    AlphaW,
    GammaW,
    GammaTilde,
    AlphaCapW,
    AlphaCapStarW,
    GammaCupW,
    NuW,
    NuStarW,
    GammaWPartition,
    TauW,
}

impl ParamKind {
    pub const ALL: [ParamKind; 10] = [
        ParamKind::AlphaW,
        ParamKind::GammaW,
        ParamKind::GammaTilde,
        ParamKind::AlphaCapW,
        ParamKind::AlphaCapStarW,
        ParamKind::GammaCupW,
        ParamKind::NuW,
        ParamKind::NuStarW,
        ParamKind::GammaWPartition,
        ParamKind::TauW,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParamKind::AlphaW => "alpha_w",
            ParamKind::GammaW => "gamma_w",
            ParamKind::GammaTilde => "gamma_tilde",
            ParamKind::AlphaCapW => "alpha_cap_w",
            ParamKind::AlphaCapStarW => "alpha_cap_star_w",
            ParamKind::GammaCupW => "gamma_cup_w",
            ParamKind::NuW => "nu_w",
            ParamKind::NuStarW => "nu_star_w",
            ParamKind::GammaWPartition => "gamma_w_partition",
            ParamKind::TauW => "tau_w",
        }
    }

    pub fn needs_second_graph(self) -> bool {
        matches!(
            self,
            ParamKind::AlphaCapW | ParamKind::AlphaCapStarW | ParamKind::GammaCupW
        )
    }

    pub fn needs_partition(self) -> bool {
        matches!(
            self,
            ParamKind::NuW | ParamKind::NuStarW | ParamKind::GammaWPartition | ParamKind::TauW
        )
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParamKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ParamKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = ParamKind::ALL.iter().map(|k| k.name()).collect();
                format!(
                    "unknown parameter `{s}`; expected one of {}",
                    names.join(", ")
                )
            })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// An independent set (or partial independent transversal).
    Set(VertexSet),
    /// A vertex-indexed fractional vector.
    Fractional(Vec<Rational>),
    /// A w-dominating function on the vertices.
    Function(Vec<u64>),
    /// `(f₁, f₂)` for a pair of graphs, or `(g, f)` with `g` on blocks.
    Pair { first: Vec<u64>, second: Vec<u64> },
}

impl Witness {
    pub fn to_json(&self) -> Value {
        match self {
            Witness::Set(s) => json!(s.as_slice()),
            Witness::Fractional(x) => json!(x.iter().map(rational::render).collect::<Vec<_>>()),
            Witness::Function(f) => json!(f),
            Witness::Pair { first, second } => json!({ "first": first, "second": second }),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParamResult {
    pub kind: ParamKind,
    pub value: Rational,
    pub witness: Option<Witness>,
    /// LP relaxation value for integer-minimisation kinds.
    pub relaxation: Option<Rational>,
}

pub(crate) fn check_failed(step: &'static str, detail: impl Into<String>) -> Error {
    Error::InternalCheckFailed {
        step,
        detail: detail.into(),
    }
}

fn sum_u64(f: &[u64]) -> Rational {
    rational::uint(f.iter().sum())
}

impl ParamResult {
    /// Witness is a set independent in every graph of `graphs` and, when a
    /// partition is given, meeting each block at most once. Value is `w[set]`.
    fn independent(
        kind: ParamKind,
        graphs: &[&Graph],
        partition: Option<&Partition>,
        w: &WeightVector,
        set: VertexSet,
    ) -> Result<ParamResult> {
        for g in graphs {
            if !is_independent_unchecked(g, &set) {
                return Err(check_failed(
                    "witness",
                    format!("{kind}: {set:?} is not independent"),
                ));
            }
        }
        if let Some(p) = partition {
            let mut seen = vec![false; p.len()];
            for v in set.iter() {
                if let Some(j) = p.block_of(v) {
                    if std::mem::replace(&mut seen[j], true) {
                        return Err(check_failed(
                            "witness",
                            format!("{kind}: {set:?} meets block {j} twice"),
                        ));
                    }
                }
            }
        }
        Ok(ParamResult {
            kind,
            value: rational::uint(set.weight(w)),
            witness: Some(Witness::Set(set)),
            relaxation: None,
        })
    }

    /// Witness `f` satisfies `f[N(v)] ≥ w(v)` (open neighbourhoods when `open`).
    fn dominating(
        kind: ParamKind,
        g: &Graph,
        w: &WeightVector,
        f: Vec<u64>,
        open: bool,
        relaxation: Rational,
    ) -> Result<ParamResult> {
        if let Some(v) = first_undominated(g, w, &f, open) {
            return Err(check_failed(
                "witness",
                format!("{kind}: vertex {v} is under-dominated"),
            ));
        }
        Ok(ParamResult {
            kind,
            value: sum_u64(&f),
            witness: Some(Witness::Function(f)),
            relaxation: Some(relaxation),
        })
    }

    fn collective(
        kind: ParamKind,
        g: &Graph,
        h: &Graph,
        w: &WeightVector,
        f1: Vec<u64>,
        f2: Vec<u64>,
        relaxation: Rational,
    ) -> Result<ParamResult> {
        for v in 0..g.n() {
            let got = closed_sum(g, v, &f1) + closed_sum(h, v, &f2);
            if got < w.get(v) {
                return Err(check_failed(
                    "witness",
                    format!("{kind}: vertex {v} is under-dominated"),
                ));
            }
        }
        Ok(ParamResult {
            kind,
            value: sum_u64(&f1) + sum_u64(&f2),
            witness: Some(Witness::Pair {
                first: f1,
                second: f2,
            }),
            relaxation: Some(relaxation),
        })
    }

    /// `(g, f)` with `g(j(v)) + f[N(v)] ≥ w(v)`; value `|g| + |f|`, or
    /// `|g| + |f|/2` when `halve_f`.
    #[allow(clippy::too_many_arguments)]
    fn partition_pair(
        kind: ParamKind,
        graph: &Graph,
        p: &Partition,
        w: &WeightVector,
        g: Vec<u64>,
        f: Vec<u64>,
        halve_f: bool,
        relaxation: Rational,
    ) -> Result<ParamResult> {
        if let Some(v) = first_undominated_pair(graph, p, w, &g, &f) {
            return Err(check_failed(
                "witness",
                format!("{kind}: vertex {v} is under-dominated"),
            ));
        }
        let mut value = sum_u64(&g);
        if halve_f {
            value += sum_u64(&f) / rational::int(2);
        } else {
            value += sum_u64(&f);
        }
        Ok(ParamResult {
            kind,
            value,
            witness: Some(Witness::Pair {
                first: g,
                second: f,
            }),
            relaxation: Some(relaxation),
        })
    }

    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "kind": self.kind.name(),
            "value": rational::render(&self.value),
            "witness": self.witness.as_ref().map_or(Value::Null, Witness::to_json),
        });
        if let Some(r) = &self.relaxation {
            if *r != self.value {
                out["relaxation"] = json!(rational::render(r));
            }
        }
        out
    }
}

pub(crate) fn closed_sum(g: &Graph, v: usize, f: &[u64]) -> u64 {
    f[v] + g.neighbors(v).iter().map(|&u| f[u]).sum::<u64>()
}

fn open_sum(g: &Graph, v: usize, f: &[u64]) -> u64 {
    g.neighbors(v).iter().map(|&u| f[u]).sum()
}

/// First vertex with `f[N(v)] < w(v)`, if any.
pub fn first_undominated(g: &Graph, w: &WeightVector, f: &[u64], open: bool) -> Option<usize> {
    (0..g.n()).find(|&v| {
        let got = if open {
            open_sum(g, v, f)
        } else {
            closed_sum(g, v, f)
        };
        got < w.get(v)
    })
}

/// First vertex with `g(j(v)) + f[N(v)] < w(v)`, if any.
pub fn first_undominated_pair(
    graph: &Graph,
    p: &Partition,
    w: &WeightVector,
    g: &[u64],
    f: &[u64],
) -> Option<usize> {
    (0..graph.n()).find(|&v| {
        let block = p.block_of(v).map_or(0, |j| g[j]);
        block + closed_sum(graph, v, f) < w.get(v)
    })
}

fn neighborhood_matrix(g: &Graph, open: bool) -> Vec<Vec<bool>> {
    (0..g.n())
        .map(|v| {
            let mut row = vec![false; g.n()];
            for &u in g.neighbors(v) {
                row[u] = true;
            }
            if !open {
                row[v] = true;
            }
            row
        })
        .collect()
}

/// Rows are vertices; the first m columns are blocks, the next n are vertices.
fn partition_cover_matrix(g: &Graph, p: &Partition) -> Vec<Vec<bool>> {
    let m = p.len();
    neighborhood_matrix(g, false)
        .into_iter()
        .enumerate()
        .map(|(v, nbhd)| {
            let mut row = vec![false; m];
            if let Some(j) = p.block_of(v) {
                row[j] = true;
            }
            row.extend(nbhd);
            row
        })
        .collect()
}

fn check_same_n(g: &Graph, h: &Graph) -> Result<()> {
    if g.n() != h.n() {
        return Err(Error::Model(crate::error::ModelError::Invalid {
            field: "edges2".into(),
            message: format!("second graph has {} vertices, expected {}", h.n(), g.n()),
        }));
    }
    Ok(())
}

/// αʷ(G): maximum weight of an independent set.
pub fn alpha_w(g: &Graph, w: &WeightVector) -> Result<ParamResult> {
    let (set, _) = max_weight_independent_set(g, w);
    ParamResult::independent(ParamKind::AlphaW, &[g], None, w, set)
}

/// γʷ(G): minimum |f| over w-dominating f: V → ℕ.
pub fn gamma_w(g: &Graph, w: &WeightVector) -> Result<ParamResult> {
    let sol = integer_cover_min(&neighborhood_matrix(g, false), w.as_slice())?;
    ParamResult::dominating(ParamKind::GammaW, g, w, sol.f, false, sol.relaxation)
}

/// γ̃(G): minimum size of a totally dominating set. `Infeasible` when G has an
/// isolated vertex.
pub fn gamma_tilde(g: &Graph) -> Result<ParamResult> {
    let w = WeightVector::ones(g.n());
    let sol = integer_cover_min(&neighborhood_matrix(g, true), w.as_slice())?;
    ParamResult::dominating(ParamKind::GammaTilde, g, &w, sol.f, true, sol.relaxation)
}

/// α∩ʷ(G, H): maximum weight of a set independent in both graphs.
pub fn alpha_cap_w(g: &Graph, h: &Graph, w: &WeightVector, cap: usize) -> Result<ParamResult> {
    check_same_n(g, h)?;
    let fg = enumerate_independent_sets(g, cap)?;
    let fh = enumerate_independent_sets(h, cap)?;
    let (small, other) = if fg.len() <= fh.len() {
        (&fg, h)
    } else {
        (&fh, g)
    };
    let mut best = VertexSet::new();
    let mut best_w = 0;
    // Families are in canonical order, so strict improvement keeps the
    // canonically smallest maximiser.
    for s in small {
        let sw = s.weight(w);
        if sw > best_w && is_independent_unchecked(other, s) {
            best = s.clone();
            best_w = sw;
        }
    }
    ParamResult::independent(ParamKind::AlphaCapW, &[g, h], None, w, best)
}

/// (α∩ʷ)*(G, H) = max Σ w(v)x(v) over x ∈ IP(G) ∩ IP(H).
pub fn alpha_cap_star_w(g: &Graph, h: &Graph, w: &WeightVector, cap: usize) -> Result<ParamResult> {
    check_same_n(g, h)?;
    let n = g.n();
    let fg = enumerate_independent_sets(g, cap)?;
    let fh = enumerate_independent_sets(h, cap)?;
    let (a, b) = (fg.len(), fh.len());
    let nvars = a + b + n;

    let mut objective = vec![Rational::zero(); nvars];
    for v in 0..n {
        objective[a + b + v] = rational::uint(w.get(v));
    }
    let mut model = LpModel::new(Sense::Maximize, objective);
    let mut mass_g = vec![Rational::zero(); nvars];
    mass_g[..a].fill(rational::one());
    model.add_row(mass_g, Relation::Eq, rational::one());
    let mut mass_h = vec![Rational::zero(); nvars];
    mass_h[a..a + b].fill(rational::one());
    model.add_row(mass_h, Relation::Eq, rational::one());
    for (offset, fam) in [(0, &fg), (a, &fh)] {
        for v in 0..n {
            let mut row = vec![Rational::zero(); nvars];
            for (i, s) in fam.iter().enumerate() {
                if s.contains(v) {
                    row[offset + i] = rational::one();
                }
            }
            row[a + b + v] = -rational::one();
            model.add_row(row, Relation::Eq, Rational::zero());
        }
    }
    let out = simplex_solve(&model);
    if !out.is_optimal() {
        return Err(check_failed(
            "alpha_cap_star_w",
            format!("LP status {:?}", out.status),
        ));
    }
    let x: Vec<Rational> = out.primal[a + b..].to_vec();
    let lambda = &out.primal[..a];
    let mu = &out.primal[a..a + b];
    // Revalidate: x is a convex combination in both polytopes.
    for (fam, coeffs, name) in [(&fg, lambda, "G"), (&fh, mu, "H")] {
        let pairs: Vec<(VertexSet, Rational)> =
            fam.iter().cloned().zip(coeffs.iter().cloned()).collect();
        if !is_convex_combination(&pairs, &x) {
            return Err(check_failed(
                "witness",
                format!("x is not certified in IP({name})"),
            ));
        }
    }
    let value = weighted_sum(w, &x);
    if value != out.value {
        return Err(check_failed("witness", "objective does not match witness"));
    }
    Ok(ParamResult {
        kind: ParamKind::AlphaCapStarW,
        value,
        witness: Some(Witness::Fractional(x)),
        relaxation: None,
    })
}

/// Σ w(v)x(v).
pub fn weighted_sum(w: &WeightVector, x: &[Rational]) -> Rational {
    x.iter()
        .enumerate()
        .filter(|(v, xv)| w.get(*v) > 0 && !xv.is_zero())
        .fold(Rational::zero(), |acc, (v, xv)| {
            acc + xv * rational::uint(w.get(v))
        })
}

/// Whether non-negative coefficients summing to 1 reproduce `x` exactly.
pub fn is_convex_combination(terms: &[(VertexSet, Rational)], x: &[Rational]) -> bool {
    use num::Signed;
    if terms.iter().any(|(_, c)| c.is_negative()) {
        return false;
    }
    if rational::sum(terms.iter().map(|(_, c)| c)) != rational::one() {
        return false;
    }
    let mut acc = vec![Rational::zero(); x.len()];
    for (s, c) in terms {
        for v in s.iter() {
            if v >= x.len() {
                return false;
            }
            acc[v] += c;
        }
    }
    acc == x
}

/// Decides x ∈ IP(G) with an exact feasibility LP over ℐ(G).
pub fn in_independence_polytope(g: &Graph, x: &[Rational], cap: usize) -> Result<bool> {
    use num::Signed;
    if x.len() != g.n() || x.iter().any(Signed::is_negative) {
        return Ok(false);
    }
    let fam = enumerate_independent_sets(g, cap)?;
    let k = fam.len();
    let mut model = LpModel::new(Sense::Maximize, vec![Rational::zero(); k]);
    model.add_row(vec![rational::one(); k], Relation::Eq, rational::one());
    for (v, xv) in x.iter().enumerate() {
        let row = fam
            .iter()
            .map(|s| {
                if s.contains(v) {
                    rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        model.add_row(row, Relation::Eq, xv.clone());
    }
    Ok(simplex_solve(&model).is_optimal())
}

/// γ∪ʷ(G, H): minimum |f₁| + |f₂| with f₁[N_G(v)] + f₂[N_H(v)] ≥ w(v).
pub fn gamma_cup_w(g: &Graph, h: &Graph, w: &WeightVector) -> Result<ParamResult> {
    check_same_n(g, h)?;
    let n = g.n();
    let rows: Vec<Vec<bool>> = neighborhood_matrix(g, false)
        .into_iter()
        .zip(neighborhood_matrix(h, false))
        .map(|(mut a, b)| {
            a.extend(b);
            a
        })
        .collect();
    let sol = integer_cover_min(&rows, w.as_slice())?;
    let (f1, f2) = sol.f.split_at(n);
    ParamResult::collective(
        ParamKind::GammaCupW,
        g,
        h,
        w,
        f1.to_vec(),
        f2.to_vec(),
        sol.relaxation,
    )
}

/// νʷ(G, 𝒱): maximum weight of a partial independent transversal.
pub fn nu_w(g: &Graph, p: &Partition, w: &WeightVector, cap: usize) -> Result<ParamResult> {
    p.require_full()?;
    let fam = enumerate_independent_sets(g, cap)?;
    let mut best = VertexSet::new();
    let mut best_w = 0;
    for s in &fam {
        let sw = s.weight(w);
        if sw > best_w && meets_blocks_at_most_once(p, s) {
            best = s.clone();
            best_w = sw;
        }
    }
    ParamResult::independent(ParamKind::NuW, &[g], Some(p), w, best)
}

pub(crate) fn meets_blocks_at_most_once(p: &Partition, s: &VertexSet) -> bool {
    let mut seen = vec![false; p.len()];
    s.iter().all(|v| match p.block_of(v) {
        Some(j) => !std::mem::replace(&mut seen[j], true),
        None => true,
    })
}

fn partition_cover(
    g: &Graph,
    p: &Partition,
    w: &WeightVector,
    vertex_cost: Rational,
) -> Result<CoverSolution> {
    p.require_full()?;
    let rows = partition_cover_matrix(g, p);
    let mut costs = vec![rational::one(); p.len()];
    costs.extend(std::iter::repeat_n(vertex_cost, g.n()));
    weighted_integer_cover_min(&rows, w.as_slice(), &costs)
}

/// γʷ(G, 𝒱): minimum |g| + |f| over collectively w-dominating pairs.
pub fn gamma_w_partition(g: &Graph, p: &Partition, w: &WeightVector) -> Result<ParamResult> {
    let sol = partition_cover(g, p, w, rational::one())?;
    let (gb, f) = sol.f.split_at(p.len());
    ParamResult::partition_pair(
        ParamKind::GammaWPartition,
        g,
        p,
        w,
        gb.to_vec(),
        f.to_vec(),
        false,
        sol.relaxation,
    )
}

/// τʷ(G, 𝒱): minimum |g| + |f|/2 over collectively w-dominating pairs.
pub fn tau_w(g: &Graph, p: &Partition, w: &WeightVector) -> Result<ParamResult> {
    let sol = partition_cover(g, p, w, rational::ratio(1, 2))?;
    let (gb, f) = sol.f.split_at(p.len());
    ParamResult::partition_pair(
        ParamKind::TauW,
        g,
        p,
        w,
        gb.to_vec(),
        f.to_vec(),
        true,
        sol.relaxation,
    )
}

/// Evaluates one parameter on an instance, checking its data requirements.
pub fn evaluate(kind: ParamKind, inst: &Instance, cap: usize) -> Result<ParamResult> {
    let g = &inst.graph;
    let w = &inst.weights;
    match kind {
        ParamKind::AlphaW => alpha_w(g, w),
        ParamKind::GammaW => gamma_w(g, w),
        ParamKind::GammaTilde => gamma_tilde(g),
        ParamKind::AlphaCapW => alpha_cap_w(g, inst.second_graph()?, w, cap),
        ParamKind::AlphaCapStarW => alpha_cap_star_w(g, inst.second_graph()?, w, cap),
        ParamKind::GammaCupW => gamma_cup_w(g, inst.second_graph()?, w),
        ParamKind::NuW => nu_w(g, inst.partition()?, w, cap),
        ParamKind::NuStarW => nu_star_w(g, inst.partition()?, w, cap).map(|r| r.result),
        ParamKind::GammaWPartition => gamma_w_partition(g, inst.partition()?, w),
        ParamKind::TauW => tau_w(g, inst.partition()?, w),
    }
}

#[cfg(test)]
mod tests;
