//! Independent sets: membership test, full enumeration, exact maximum weight.

use std::cmp::Ordering;

use crate::error::{Error, ModelError, Result};
use crate::graph::{Graph, VertexSet, WeightVector};

/// Default limit on the number of enumerated independent sets.
pub const DEFAULT_COLUMN_CAP: usize = 1 << 20;

pub fn is_independent(g: &Graph, s: &VertexSet) -> Result<bool, ModelError> {
    if let Some(v) = s.iter().find(|&v| v >= g.n()) {
        return Err(ModelError::OutOfRange {
            vertex: v,
            n: g.n(),
            index: 0,
        });
    }
    Ok(is_independent_unchecked(g, s))
}

pub(crate) fn is_independent_unchecked(g: &Graph, s: &VertexSet) -> bool {
    let ids = s.as_slice();
    ids.iter()
        .enumerate()
        .all(|(i, &u)| ids[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

/// ℐ(G): every independent set, ∅ included, in canonical order
/// (by size, then lexicographic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentFamily {
    sets: Vec<VertexSet>,
}

impl IndependentFamily {
    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.sets.iter()
    }

    pub fn contains(&self, s: &VertexSet) -> bool {
        self.sets.binary_search_by(|x| x.canonical_cmp(s)).is_ok()
    }

    pub fn position(&self, s: &VertexSet) -> Option<usize> {
        self.sets.binary_search_by(|x| x.canonical_cmp(s)).ok()
    }
}

impl<'a> IntoIterator for &'a IndependentFamily {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

/// Enumerates ℐ(G). Fails with `CapExceeded` as soon as the count passes `cap`.
pub fn enumerate_independent_sets(g: &Graph, cap: usize) -> Result<IndependentFamily> {
    let n = g.n();
    let mut sets = vec![VertexSet::new()];
    if sets.len() > cap {
        return Err(Error::CapExceeded { cap });
    }
    // Extend each set by a larger vertex with no neighbour in the set.
    let mut stack: Vec<(Vec<usize>, Vec<usize>)> = vec![(Vec::new(), (0..n).collect())];
    while let Some((current, candidates)) = stack.pop() {
        for (i, &v) in candidates.iter().enumerate() {
            let mut next = current.clone();
            next.push(v);
            sets.push(VertexSet::from_sorted_unchecked(next.clone()));
            if sets.len() > cap {
                return Err(Error::CapExceeded { cap });
            }
            let rest: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&u| !g.has_edge(u, v))
                .collect();
            if !rest.is_empty() {
                stack.push((next, rest));
            }
        }
    }
    sets.sort_by(VertexSet::canonical_cmp);
    Ok(IndependentFamily { sets })
}

/// Exact maximum-weight independent set by branch-and-bound.
///
/// Branches on the highest-degree remaining vertex (include first); the bound
/// is the current weight plus all remaining positive weight. Among maximisers
/// the canonically smallest set is returned, so zero-weight vertices are never
/// included.
pub fn max_weight_independent_set(g: &Graph, w: &WeightVector) -> (VertexSet, u64) {
    let candidates: Vec<usize> = (0..g.n()).filter(|&v| w.get(v) > 0).collect();
    let mut best = (VertexSet::new(), 0u64);
    let mut chosen = Vec::new();
    mwis_branch(g, w, &candidates, &mut chosen, 0, &mut best);
    best
}

fn mwis_branch(
    g: &Graph,
    w: &WeightVector,
    candidates: &[usize],
    chosen: &mut Vec<usize>,
    weight: u64,
    best: &mut (VertexSet, u64),
) {
    let remaining: u64 = candidates.iter().map(|&v| w.get(v)).sum();
    if weight + remaining < best.1 {
        return;
    }
    if candidates.is_empty() {
        let set = VertexSet::from_unsorted(chosen.iter().copied());
        let better = match weight.cmp(&best.1) {
            Ordering::Greater => true,
            Ordering::Equal => set.canonical_cmp(&best.0) == Ordering::Less,
            Ordering::Less => false,
        };
        if better {
            *best = (set, weight);
        }
        return;
    }
    let degree_in = |v: usize| candidates.iter().filter(|&&u| g.has_edge(u, v)).count();
    let pivot = candidates
        .iter()
        .copied()
        .max_by(|&a, &b| degree_in(a).cmp(&degree_in(b)).then(b.cmp(&a)))
        .expect("non-empty");

    let without_nbhd: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&u| u != pivot && !g.has_edge(u, pivot))
        .collect();
    chosen.push(pivot);
    mwis_branch(g, w, &without_nbhd, chosen, weight + w.get(pivot), best);
    chosen.pop();

    let without_pivot: Vec<usize> = candidates.iter().copied().filter(|&u| u != pivot).collect();
    mwis_branch(g, w, &without_pivot, chosen, weight, best);
}
