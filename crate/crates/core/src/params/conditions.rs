//! Hypothesis checks for the independent-transversal existence results:
//! `γ̃(G[V_I]) ≥ 2|I| − 1` (integral IT) and `γ(G[V_I]) ≥ |I|` (fractional IT)
//! for every set I of blocks.

use super::{gamma_tilde, gamma_w, nu_star_w, nu_w};
use crate::error::{Error, ModelError, Result};
use crate::graph::{Graph, Partition, VertexSet, WeightVector};
use crate::rational::{self, Rational};

pub const MAX_CONDITION_BLOCKS: usize = 20;

#[derive(Clone, Debug, PartialEq)]
pub struct SubsetCheck {
    pub blocks: Vec<usize>,
    /// γ(G[V_I]).
    pub gamma: u64,
    /// γ̃(G[V_I]); `None` when G[V_I] has an isolated vertex (no totally
    /// dominating set, read as +∞).
    pub gamma_tilde: Option<u64>,
}

impl SubsetCheck {
    pub fn fractional_slack(&self) -> i64 {
        self.gamma as i64 - self.blocks.len() as i64
    }

    pub fn integral_slack(&self) -> Option<i64> {
        self.gamma_tilde
            .map(|t| t as i64 - (2 * self.blocks.len() as i64 - 1))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConditionReport {
    pub m: usize,
    /// Every non-empty I ⊆ [m], in Gray-code order.
    pub subsets: Vec<SubsetCheck>,
    /// γ(G[V_I]) ≥ |I| for all I.
    pub fractional_hypothesis: bool,
    /// Subset minimising γ(G[V_I]) − |I| (first in Gray order on ties).
    pub fractional_tightest: Option<SubsetCheck>,
    /// γ̃(G[V_I]) ≥ 2|I| − 1 for all I.
    pub integral_hypothesis: bool,
    pub integral_tightest: Option<SubsetCheck>,
    /// An independent transversal exists (brute force).
    pub it_exists: bool,
    pub it_witness: Option<VertexSet>,
    /// ν* with unit weights.
    pub nu_star_unit: Rational,
    /// ν* = m with every block row tight.
    pub fractional_it_exists: bool,
}

pub fn check_theorem_conditions(g: &Graph, p: &Partition, cap: usize) -> Result<ConditionReport> {
    p.require_full()?;
    let m = p.len();
    if m > MAX_CONDITION_BLOCKS {
        return Err(Error::Model(ModelError::Invalid {
            field: "parts".into(),
            message: format!("{m} blocks; subset checks support at most {MAX_CONDITION_BLOCKS}"),
        }));
    }

    let mut subsets = Vec::with_capacity((1usize << m) - 1);
    let mut member = vec![false; m];
    for k in 1usize..(1 << m) {
        let flip = k.trailing_zeros() as usize;
        member[flip] = !member[flip];
        let blocks: Vec<usize> = (0..m).filter(|&j| member[j]).collect();
        let vs = p.union_of(blocks.iter().copied());
        let (sub, _) = g.induced_subgraph(&vs)?;
        let gamma = rational::to_u64(&gamma_w(&sub, &WeightVector::ones(sub.n()))?.value)
            .expect("integral domination number");
        let gamma_tilde = match gamma_tilde(&sub) {
            Ok(r) => Some(rational::to_u64(&r.value).expect("integral")),
            Err(Error::Infeasible { .. }) => None,
            Err(e) => return Err(e),
        };
        subsets.push(SubsetCheck {
            blocks,
            gamma,
            gamma_tilde,
        });
    }

    let fractional_tightest = subsets.iter().min_by_key(|s| s.fractional_slack()).cloned();
    let fractional_hypothesis = subsets.iter().all(|s| s.fractional_slack() >= 0);
    let integral_tightest = subsets
        .iter()
        .filter(|s| s.gamma_tilde.is_some())
        .min_by_key(|s| s.integral_slack())
        .cloned();
    let integral_hypothesis = subsets
        .iter()
        .all(|s| s.integral_slack().is_none_or(|x| x >= 0));

    let ones = WeightVector::ones(g.n());
    let m_rational = rational::uint(m as u64);
    let nu = nu_w(g, p, &ones, cap)?;
    let it_exists = nu.value == m_rational;
    let it_witness = match (&nu.witness, it_exists) {
        (Some(super::Witness::Set(s)), true) => Some(s.clone()),
        _ => None,
    };
    let star = nu_star_w(g, p, &ones, cap)?;
    let fractional_it_exists = star.result.value == m_rational && star.lp.block_rows_tight();

    Ok(ConditionReport {
        m,
        subsets,
        fractional_hypothesis,
        fractional_tightest,
        integral_hypothesis,
        integral_tightest,
        it_exists,
        it_witness,
        nu_star_unit: star.result.value,
        fractional_it_exists,
    })
}
