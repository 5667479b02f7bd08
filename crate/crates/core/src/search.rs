//! Seeded random search over small instances.
//!
//! Instance `i` is drawn from a ChaCha8 stream keyed by `(seed, i)` alone, so
//! evaluation order and worker count never change the report.

use std::fmt;
use std::str::FromStr;

use num::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::duality::{build_domination_certificate, greedy_alpha_ge_gamma};
use crate::error::{Error, ModelError, Result};
use crate::graph::{Graph, Partition, WeightVector};
use crate::instance::Instance;
use crate::params::{
    alpha_cap_star_w, alpha_cap_w, alpha_w, check_failed, gamma_cup_w, gamma_w, gamma_w_partition,
    nu_w, tau_w,
};
use crate::rational::{self, Rational};

/// Largest vertex count the generator accepts; keeps 2ⁿ columns under the
/// default enumeration cap.
pub const MAX_SEARCH_N: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Two independent random graphs on the same vertices.
    Pair,
    /// One random graph with a random vertex partition.
    Partition,
}

impl SearchMode {
    pub fn name(self) -> &'static str {
        match self {
            SearchMode::Pair => "pair",
            SearchMode::Partition => "partition",
        }
    }
}

impl FromStr for SearchMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pair" => Ok(SearchMode::Pair),
            "partition" => Ok(SearchMode::Partition),
            other => Err(format!(
                "unknown mode {other:?}; expected pair or partition"
            )),
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    pub seed: u64,
    pub count: usize,
    pub max_n: usize,
    pub edge_prob: Rational,
    pub max_weight: u64,
    pub mode: SearchMode,
}

impl SearchConfig {
    pub fn validate(&self) -> std::result::Result<(), ModelError> {
        let bad = |field: &str, message: String| ModelError::Invalid {
            field: field.into(),
            message,
        };
        if self.count == 0 {
            return Err(bad("count", "must be at least 1".into()));
        }
        if self.max_n == 0 || self.max_n > MAX_SEARCH_N {
            return Err(bad("max_n", format!("must lie in 1..={MAX_SEARCH_N}")));
        }
        if self.edge_prob < Rational::zero() || self.edge_prob > rational::one() {
            return Err(bad(
                "edge_prob",
                format!("{} is not in [0, 1]", self.edge_prob),
            ));
        }
        if self.edge_prob.denom().to_u64().is_none() {
            return Err(bad(
                "edge_prob",
                "denominator does not fit in 64 bits".into(),
            ));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "count": self.count,
            "max_n": self.max_n,
            "edge_prob": rational::render(&self.edge_prob),
            "max_weight": self.max_weight,
            "mode": self.mode.name(),
        })
    }

    fn edge_odds(&self) -> (u64, u64) {
        let p = self.edge_prob.numer().to_u64().expect("validated");
        let q = self.edge_prob.denom().to_u64().expect("validated");
        (p, q)
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, (p, q): (u64, u64)) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_range(0..q) < p {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).expect("generated edges are valid")
}

/// Uniform random set partition of `0..n`.
///
/// `count[r][k]` is the number of ways to place `r` further elements when `k`
/// blocks already exist; element `i` opens a new block with probability
/// `count[r-1][k+1] / count[r][k]`.
fn random_set_partition(rng: &mut ChaCha8Rng, n: usize) -> Partition {
    let mut count = vec![vec![0u128; n + 2]; n + 1];
    count[0].fill(1);
    for r in 1..=n {
        for k in 0..=n {
            count[r][k] = k as u128 * count[r - 1][k] + count[r - 1][k + 1];
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let r = n - v;
        let k = blocks.len();
        let pick = rng.gen_range(0..count[r][k]);
        let per_block = count[r - 1][k];
        let j = (pick / per_block) as usize;
        if pick < k as u128 * per_block {
            blocks[j].push(v);
        } else {
            blocks.push(vec![v]);
        }
    }
    Partition::full(n, blocks).expect("generated blocks partition the vertices")
}

/// Instance `index` of the stream keyed by `seed`.
///
/// Pair mode sets `second_graph` to an independent G(n, p). Partition mode
/// sets `partition` and, as `second_graph`, the partition graph of a second
/// independent random partition (used by the partition-graph duality check).
pub fn random_instance(seed: u64, index: u64, config: &SearchConfig) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let n = rng.gen_range(1..=config.max_n);
    let odds = config.edge_odds();
    let graph = random_graph(&mut rng, n, odds);
    let mut inst = Instance::new(graph);
    match config.mode {
        SearchMode::Pair => {
            inst = inst.with_second_graph(random_graph(&mut rng, n, odds));
        }
        SearchMode::Partition => {
            let parts = random_set_partition(&mut rng, n);
            let other = random_set_partition(&mut rng, n);
            inst = inst
                .with_partition(parts)
                .with_second_graph(other.partition_graph().expect("full partition"));
        }
    }
    let weights = (0..n)
        .map(|_| rng.gen_range(0..=config.max_weight))
        .collect();
    inst.with_weights(WeightVector::new(weights))
}

/// Inequality families checked by the search, named by what they compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    /// Fractional joint independence ≥ collective domination, arbitrary weights.
    WeightedDuality,
    /// The same with unit weights.
    UnitDuality,
    /// Greedy certificate: α^w(G) ≥ w[I] ≥ |f| ≥ γ^w(G).
    Greedy,
    /// Dual rounding: ν*^w(G,𝒱) ≥ |g|+|h| ≥ γ^w(G,𝒱).
    PartitionCertificate,
    /// ν^w(G,𝒱) ≥ τ^w(G,𝒱).
    TransversalHalfDomination,
    /// α∩^w = γ∪^w for two partition graphs.
    PartitionGraphs,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::WeightedDuality,
        CheckKind::UnitDuality,
        CheckKind::Greedy,
        CheckKind::PartitionCertificate,
        CheckKind::TransversalHalfDomination,
        CheckKind::PartitionGraphs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::WeightedDuality => "weighted_duality",
            CheckKind::UnitDuality => "unit_duality",
            CheckKind::Greedy => "greedy",
            CheckKind::PartitionCertificate => "partition_certificate",
            CheckKind::TransversalHalfDomination => "transversal_half_domination",
            CheckKind::PartitionGraphs => "partition_graphs",
        }
    }
}

/// One evaluated inequality `lhs ≥ rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckRecord {
    pub kind: CheckKind,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl CheckRecord {
    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs
    }

    fn to_json(&self) -> Value {
        json!({
            "check": self.kind.name(),
            "lhs": rational::render(&self.lhs),
            "rhs": rational::render(&self.rhs),
            "holds": self.holds(),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InstanceReport {
    pub index: u64,
    pub instance: Instance,
    pub checks: Vec<CheckRecord>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub index: u64,
    pub kind: CheckKind,
    pub instance: Instance,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub tested: usize,
    pub violations: Vec<Violation>,
    /// Passed checks per kind, in [`CheckKind::ALL`] order.
    pub tallies: Vec<(CheckKind, usize)>,
    pub instances: Vec<InstanceReport>,
}

impl SearchReport {
    pub fn tally(&self, kind: CheckKind) -> usize {
        self.tallies
            .iter()
            .find(|(k, _)| *k == kind)
            .map_or(0, |(_, c)| *c)
    }

    pub fn to_json(&self) -> Value {
        let tallies: serde_json::Map<String, Value> = self
            .tallies
            .iter()
            .map(|(k, c)| (k.name().to_string(), json!(c)))
            .collect();
        json!({
            "config": self.config.to_json(),
            "tested": self.tested,
            "violations": self.violations.iter().map(|v| json!({
                "index": v.index,
                "check": v.kind.name(),
                "instance": v.instance.to_json_value(),
                "lhs": rational::render(&v.lhs),
                "rhs": rational::render(&v.rhs),
            })).collect::<Vec<_>>(),
            "tallies": tallies,
            "instances": self.instances.iter().map(|r| json!({
                "index": r.index,
                "n": r.instance.n(),
                "checks": r.checks.iter().map(CheckRecord::to_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

fn greedy_check(g: &Graph, w: &WeightVector) -> Result<CheckRecord> {
    let cert = greedy_alpha_ge_gamma(g, w, None)?;
    let broken = cert.violations(g, w);
    if broken
        .iter()
        .any(|v| !matches!(v, crate::duality::GreedyViolation::WeightBelowSize { .. }))
    {
        return Err(check_failed("greedy", format!("{broken:?}")));
    }
    let size = rational::uint(cert.size());
    let weight = rational::uint(cert.independent_weight(w));
    if gamma_w(g, w)?.value > size || weight > alpha_w(g, w)?.value {
        return Err(check_failed(
            "greedy",
            "certificate outside the γ..α sandwich",
        ));
    }
    Ok(CheckRecord {
        kind: CheckKind::Greedy,
        lhs: weight,
        rhs: size,
    })
}

/// Evaluates every check that applies to `inst` under `mode`.
pub fn check_instance(inst: &Instance, mode: SearchMode, cap: usize) -> Result<Vec<CheckRecord>> {
    let g = &inst.graph;
    let w = &inst.weights;
    let mut out = Vec::new();
    match mode {
        SearchMode::Pair => {
            let h = inst.second_graph()?;
            out.push(CheckRecord {
                kind: CheckKind::WeightedDuality,
                lhs: alpha_cap_star_w(g, h, w, cap)?.value,
                rhs: gamma_cup_w(g, h, w)?.value,
            });
            let ones = WeightVector::ones(g.n());
            out.push(CheckRecord {
                kind: CheckKind::UnitDuality,
                lhs: alpha_cap_star_w(g, h, &ones, cap)?.value,
                rhs: gamma_cup_w(g, h, &ones)?.value,
            });
            out.push(greedy_check(g, w)?);
        }
        SearchMode::Partition => {
            let p = inst.partition()?;
            let cert = build_domination_certificate(g, p, w, cap)?;
            let gamma = gamma_w_partition(g, p, w)?.value;
            if gamma > rational::uint(cert.size()) {
                return Err(check_failed(
                    "certificate",
                    format!("certificate size {} below γ^w(G,𝒱) = {gamma}", cert.size()),
                ));
            }
            out.push(CheckRecord {
                kind: CheckKind::PartitionCertificate,
                lhs: cert.bound,
                rhs: gamma,
            });
            out.push(CheckRecord {
                kind: CheckKind::TransversalHalfDomination,
                lhs: nu_w(g, p, w, cap)?.value,
                rhs: tau_w(g, p, w)?.value,
            });
            out.push(greedy_check(g, w)?);
            let a = p.partition_graph()?;
            let b = inst.second_graph()?;
            let lhs = alpha_cap_w(&a, b, w, cap)?.value;
            let rhs = gamma_cup_w(&a, b, w)?.value;
            if lhs > rhs {
                return Err(check_failed("partition_graphs", "α∩ exceeds γ∪"));
            }
            out.push(CheckRecord {
                kind: CheckKind::PartitionGraphs,
                lhs,
                rhs,
            });
        }
    }
    Ok(out)
}

/// Generates and checks `config.count` instances in parallel; the report is
/// assembled in index order.
pub fn run_search(config: &SearchConfig, cap: usize) -> Result<SearchReport> {
    config.validate()?;
    let instances: Vec<InstanceReport> = (0..config.count as u64)
        .into_par_iter()
        .map(|index| {
            let instance = random_instance(config.seed, index, config);
            let checks = check_instance(&instance, config.mode, cap)?;
            Ok::<_, Error>(InstanceReport {
                index,
                instance,
                checks,
            })
        })
        .collect::<Result<_>>()?;

    let mut tallies: Vec<(CheckKind, usize)> = CheckKind::ALL.iter().map(|&k| (k, 0)).collect();
    let mut violations = Vec::new();
    for r in &instances {
        for c in &r.checks {
            if c.holds() {
                tallies
                    .iter_mut()
                    .find(|(k, _)| *k == c.kind)
                    .expect("all kinds")
                    .1 += 1;
            } else {
                violations.push(Violation {
                    index: r.index,
                    kind: c.kind,
                    instance: r.instance.clone(),
                    lhs: c.lhs.clone(),
                    rhs: c.rhs.clone(),
                });
            }
        }
    }
    Ok(SearchReport {
        config: config.clone(),
        tested: instances.len(),
        violations,
        tallies,
        instances,
    })
}
