use std::fmt;

use crate::error::{ModelError, Result};
use crate::graph::{Graph, VertexSet, WeightVector};
use crate::indep::is_independent_unchecked;
use crate::params::first_undominated;

/// A w-dominating `f` and an independent `I` with `w[I] ≥ |f|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyCertificate {
    pub f: Vec<u64>,
    pub independent: VertexSet,
    pub order: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyViolation {
    Undominated { vertex: usize },
    NotIndependent,
    WeightBelowSize { weight: u64, size: u64 },
}

impl fmt::Display for GreedyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GreedyViolation::Undominated { vertex } => {
                write!(f, "vertex {vertex} is under-dominated")
            }
            GreedyViolation::NotIndependent => write!(f, "extracted set is not independent"),
            GreedyViolation::WeightBelowSize { weight, size } => {
                write!(f, "w[I] = {weight} < |f| = {size}")
            }
        }
    }
}

impl GreedyCertificate {
    pub fn size(&self) -> u64 {
        self.f.iter().sum()
    }

    pub fn independent_weight(&self, w: &WeightVector) -> u64 {
        self.independent.weight(w)
    }

    pub fn violations(&self, g: &Graph, w: &WeightVector) -> Vec<GreedyViolation> {
        let mut out = Vec::new();
        if let Some(v) = first_undominated(g, w, &self.f, false) {
            out.push(GreedyViolation::Undominated { vertex: v });
        }
        if !is_independent_unchecked(g, &self.independent) {
            out.push(GreedyViolation::NotIndependent);
        }
        let (weight, size) = (self.independent_weight(w), self.size());
        if weight < size {
            out.push(GreedyViolation::WeightBelowSize { weight, size });
        }
        out
    }
}

/// Scans vertices in `order` (natural order by default) setting
/// `f(v) = [w(v) − Σ f(u)]⁺` over earlier neighbours `u`, then extracts `I` by
/// repeatedly taking the latest remaining vertex of `supp(f)` and deleting its
/// closed neighbourhood.
pub fn greedy_alpha_ge_gamma(
    g: &Graph,
    w: &WeightVector,
    order: Option<&[usize]>,
) -> Result<GreedyCertificate> {
    let n = g.n();
    w.check_len(n)?;
    let order: Vec<usize> = match order {
        Some(o) => o.to_vec(),
        None => (0..n).collect(),
    };
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || position[v] != usize::MAX {
            return Err(ModelError::Invalid {
                field: format!("order[{i}]"),
                message: "order must be a permutation of the vertices".into(),
            }
            .into());
        }
        position[v] = i;
    }
    if order.len() != n {
        return Err(ModelError::Invalid {
            field: "order".into(),
            message: format!("expected {n} vertices, found {}", order.len()),
        }
        .into());
    }

    let mut f = vec![0u64; n];
    for (i, &v) in order.iter().enumerate() {
        let earlier: u64 = g
            .neighbors(v)
            .iter()
            .filter(|&&u| position[u] < i)
            .map(|&u| f[u])
            .sum();
        f[v] = w.get(v).saturating_sub(earlier);
    }

    let mut remaining: Vec<bool> = f.iter().map(|&x| x > 0).collect();
    let mut chosen = Vec::new();
    while let Some(&v) = order.iter().rev().find(|&&v| remaining[v]) {
        chosen.push(v);
        remaining[v] = false;
        for &u in g.neighbors(v) {
            remaining[u] = false;
        }
    }
    Ok(GreedyCertificate {
        f,
        independent: VertexSet::from_unsorted(chosen),
        order,
    })
}
