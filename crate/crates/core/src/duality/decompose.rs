use std::collections::{BTreeSet, HashMap};

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Partition, VertexSet};
use crate::rational::{self, Rational};

/// Σ coefficient · χ_T over partial transversals T.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexDecomposition {
    pub terms: Vec<(Rational, VertexSet)>,
}

impl ConvexDecomposition {
    pub fn coefficient_sum(&self) -> Rational {
        rational::sum(self.terms.iter().map(|(c, _)| c))
    }

    pub fn reconstruct(&self, n: usize) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); n];
        for (c, t) in &self.terms {
            for v in t.iter() {
                x[v] += c;
            }
        }
        x
    }
}

/// Writes a vector with block sums at most 1 as a convex combination of
/// partial transversals.
///
/// Each block lays its vertices, in id order, as consecutive subintervals of
/// [0, 1) of lengths x(v); the rest of the block's interval belongs to no
/// vertex. Every cell of the common refinement becomes one term, picking in
/// each block the vertex owning that cell. Equal transversals are merged, so
/// there are at most Σ|V_j| + 1 terms.
pub fn decompose_box_product(p: &Partition, x: &[Rational]) -> Result<ConvexDecomposition> {
    if let Some(v) = x.iter().position(Signed::is_negative) {
        return Err(Error::NegativeEntry { vertex: v });
    }
    if let Some(v) = (0..x.len()).find(|&v| x[v].is_positive() && p.block_of(v).is_none()) {
        return Err(Error::OutsideBlocks { vertex: v });
    }

    // (end of interval, vertex) per block, in id order.
    let mut layouts: Vec<Vec<(Rational, usize)>> = Vec::with_capacity(p.len());
    let mut cuts: BTreeSet<Rational> = BTreeSet::new();
    cuts.insert(Rational::zero());
    cuts.insert(rational::one());
    for (j, block) in p.blocks().iter().enumerate() {
        let mut end = Rational::zero();
        let mut layout = Vec::new();
        for v in block.iter() {
            let xv = x.get(v).cloned().unwrap_or_else(Rational::zero);
            if xv.is_zero() {
                continue;
            }
            end += xv;
            layout.push((end.clone(), v));
        }
        if end > rational::one() {
            return Err(Error::BlockOverflow { block: j });
        }
        cuts.extend(layout.iter().map(|(e, _)| e.clone()));
        layouts.push(layout);
    }

    let cuts: Vec<Rational> = cuts.into_iter().collect();
    let mut terms: Vec<(Rational, VertexSet)> = Vec::new();
    let mut index: HashMap<VertexSet, usize> = HashMap::new();
    for pair in cuts.windows(2) {
        let (start, end) = (&pair[0], &pair[1]);
        let picked: VertexSet = layouts
            .iter()
            .filter_map(|layout| layout.iter().find(|(e, _)| start < e).map(|&(_, v)| v))
            .collect();
        let length = end - start;
        match index.get(&picked) {
            Some(&i) => terms[i].0 += length,
            None => {
                index.insert(picked.clone(), terms.len());
                terms.push((length, picked));
            }
        }
    }
    Ok(ConvexDecomposition { terms })
}
