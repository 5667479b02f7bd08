//! Dual rounding for partitioned graphs.
//!
//! From an optimal dual `(y₀, y₁, …, y_m)` of the fractional partial
//! transversal program, take `g(j) = ⌊y_j⌋`, lower the weights to
//! `w_g(v) = [w(v) − g(j(v))]⁺`, re-solve on the support of `w_g`, and let `h`
//! be `w_g` restricted to a lightest set `I₀` in the support of the new primal.
//! Then `(g, h)` is collectively w-dominating and `|g| + |h| ≤ ν*ʷ(G, 𝒱)`.

use std::fmt;

use num::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, ModelError, Result};
use crate::graph::{Graph, Partition, VertexSet, WeightVector};
use crate::indep::enumerate_independent_sets;
use crate::lp::check_primal_dual_pair;
use crate::params::{closed_sum, nu_star_w, PackingLp};
use crate::rational::{self, Rational};

/// Column → mass, in canonical column order, zero entries omitted.
pub type ColumnMass = Vec<(VertexSet, Rational)>;

#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedMass {
    pub columns: ColumnMass,
    /// Mass added to reach Σx = 1.
    pub added: Rational,
    /// Σ x_I w[I], unchanged by normalisation.
    pub value: Rational,
}

fn column_value(x: &ColumnMass, w: &WeightVector) -> Rational {
    x.iter().fold(Rational::zero(), |acc, (s, m)| {
        acc + m * rational::uint(s.weight(w))
    })
}

/// Raises the total mass of a feasible packing to exactly 1 without changing
/// its objective or any block activity.
///
/// With ε = 1 − Σx, mass δ = min(ε, x_I) moves from a column I with |I| ≥ 2
/// to both I∖{v} and {v} (v = min I); repeated until ε is spent. Any residual
/// left once no such column remains goes to the ∅ column.
pub fn normalize_unit_mass(x: &ColumnMass, w: &WeightVector) -> NormalizedMass {
    let mut cols: Vec<(VertexSet, Rational)> =
        x.iter().filter(|(_, m)| m.is_positive()).cloned().collect();
    let value = column_value(&cols, w);
    let total = rational::sum(cols.iter().map(|(_, m)| m));
    let added = rational::one() - &total;
    if !added.is_positive() {
        cols.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        return NormalizedMass {
            columns: cols,
            added: Rational::zero(),
            value,
        };
    }

    let add = |cols: &mut Vec<(VertexSet, Rational)>, s: VertexSet, m: Rational| match cols
        .iter_mut()
        .find(|(t, _)| *t == s)
    {
        Some(entry) => entry.1 += m,
        None => cols.push((s, m)),
    };

    let mut eps = added.clone();
    while eps.is_positive() {
        cols.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        let Some(i) = cols
            .iter()
            .position(|(s, m)| s.len() >= 2 && m.is_positive())
        else {
            add(&mut cols, VertexSet::new(), eps.clone());
            break;
        };
        let delta = std::cmp::min(eps.clone(), cols[i].1.clone());
        let set = cols[i].0.clone();
        let v = set.iter().next().expect("|I| >= 2");
        cols[i].1 -= &delta;
        add(&mut cols, set.without(v), delta.clone());
        add(&mut cols, VertexSet::singleton(v), delta.clone());
        eps -= delta;
    }
    cols.retain(|(_, m)| m.is_positive());
    cols.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    debug_assert_eq!(column_value(&cols, w), value);
    NormalizedMass {
        columns: cols,
        added,
        value,
    }
}

/// Intermediate quantities of the construction, kept so runs can be replayed.
#[derive(Clone, Debug, PartialEq)]
pub struct CertificateAudit {
    /// Optimal dual (y₀, y₁, …, y_m) of the original program.
    pub y: Vec<Rational>,
    /// (y₀, {y₁}, …, {y_m}), optimal for the reduced program.
    pub reduced_dual: Vec<Rational>,
    pub wg: Vec<u64>,
    pub v_prime: VertexSet,
    pub i0: VertexSet,
    pub nu_star: Rational,
    pub reduced_value: Rational,
    /// Mass added when normalising the reduced primal to Σx = 1.
    pub mass_added: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DominationCertificate {
    /// On blocks.
    pub g: Vec<u64>,
    /// On vertices.
    pub h: Vec<u64>,
    /// ν*ʷ(G, 𝒱).
    pub bound: Rational,
    pub audit: CertificateAudit,
}

impl DominationCertificate {
    pub fn size(&self) -> u64 {
        self.g.iter().sum::<u64>() + self.h.iter().sum::<u64>()
    }

    pub fn to_json(&self) -> Value {
        let rs = |v: &[Rational]| v.iter().map(rational::render).collect::<Vec<_>>();
        json!({
            "g": self.g,
            "h": self.h,
            "bound": rational::render(&self.bound),
            "audit": {
                "y": rs(&self.audit.y),
                "reduced_dual": rs(&self.audit.reduced_dual),
                "wg": self.audit.wg,
                "V_prime": self.audit.v_prime.as_slice(),
                "I0": self.audit.i0.as_slice(),
                "nu_star": rational::render(&self.audit.nu_star),
                "reduced_value": rational::render(&self.audit.reduced_value),
                "mass_added": rational::render(&self.audit.mass_added),
            }
        })
    }
}

fn failed(step: &'static str, detail: impl Into<String>) -> Error {
    Error::InternalCheckFailed {
        step,
        detail: detail.into(),
    }
}

/// Runs the dual-rounding construction and checks every intermediate claim
/// exactly, failing with `InternalCheckFailed` if one does not hold.
pub fn build_domination_certificate(
    graph: &Graph,
    p: &Partition,
    w: &WeightVector,
    cap: usize,
) -> Result<DominationCertificate> {
    p.require_full()?;
    w.check_len(graph.n())?;
    let n = graph.n();
    let m = p.len();

    let nu = nu_star_w(graph, p, w, cap)?;
    let y = nu.lp.block_heavy_dual()?;
    let nu_star = nu.result.value.clone();

    let mut g = Vec::with_capacity(m);
    for yj in &y[1..] {
        let fl = rational::to_u64(&yj.floor())
            .ok_or_else(|| failed("dual", format!("block dual {yj} is negative")))?;
        g.push(fl);
    }

    let wg: Vec<u64> = (0..n)
        .map(|v| {
            let j = p.block_of(v).expect("full partition");
            w.get(v).saturating_sub(g[j])
        })
        .collect();
    let wg_vec = WeightVector::new(wg.clone());
    let v_prime = VertexSet::from_unsorted((0..n).filter(|&v| wg[v] > 0));

    let (sub, map) = graph.induced_subgraph(&v_prime)?;
    let columns: Vec<VertexSet> = enumerate_independent_sets(&sub, cap)?
        .iter()
        .map(|s| VertexSet::from_unsorted(s.iter().map(|i| map[i])))
        .collect();
    let reduced = PackingLp::solve(columns, p.block_map(), m, &wg_vec)?;
    let reduced_value = reduced.value().clone();

    let mut reduced_dual = vec![y[0].clone()];
    reduced_dual.extend(y[1..].iter().map(rational::fract_part));
    let dual_sum = rational::sum(&reduced_dual);
    if dual_sum != reduced_value {
        return Err(failed(
            "reduced_dual_value",
            format!("y0 + Σ{{y_j}} = {dual_sum} but reduced optimum is {reduced_value}"),
        ));
    }
    let slackness = check_primal_dual_pair(&reduced.model, &reduced.outcome.primal, &reduced_dual);
    if !slackness.is_empty() {
        let detail: Vec<String> = slackness.iter().map(ToString::to_string).collect();
        return Err(failed("reduced_slackness", detail.join("; ")));
    }

    let normalized = normalize_unit_mass(&reduced.column_mass(), &wg_vec);
    if normalized.value != reduced_value {
        return Err(failed("normalize", "normalisation changed the objective"));
    }
    let i0 = normalized
        .columns
        .iter()
        .map(|(s, _)| s)
        .min_by(|a, b| {
            a.weight(&wg_vec)
                .cmp(&b.weight(&wg_vec))
                .then_with(|| a.canonical_cmp(b))
        })
        .cloned()
        .ok_or_else(|| failed("support", "normalised primal has empty support"))?;
    if rational::uint(i0.weight(&wg_vec)) > reduced_value {
        return Err(failed("i0_weight", "w_g[I0] exceeds the reduced optimum"));
    }

    let mut h = vec![0u64; n];
    for v in i0.iter() {
        h[v] = wg[v];
    }

    // h is w_g-dominating on G[V'] (h vanishes outside V', so G-neighbourhoods suffice).
    if let Some(v) = v_prime.iter().find(|&v| closed_sum(graph, v, &h) < wg[v]) {
        return Err(failed(
            "reduced_domination",
            format!("vertex {v} is under-dominated by h"),
        ));
    }

    let cert = DominationCertificate {
        g,
        h,
        bound: nu_star.clone(),
        audit: CertificateAudit {
            y,
            reduced_dual,
            wg,
            v_prime,
            i0,
            nu_star,
            reduced_value,
            mass_added: normalized.added,
        },
    };
    let violations = verify_certificate(graph, p, w, &cert, &cert.bound);
    if !violations.is_empty() {
        let detail: Vec<String> = violations.iter().map(ToString::to_string).collect();
        return Err(failed("verify", detail.join("; ")));
    }
    Ok(cert)
}

#[derive(Clone, Debug, PartialEq)]
pub enum CertificateViolation {
    Shape {
        field: &'static str,
        expected: usize,
        found: usize,
    },
    NotIntegral {
        field: &'static str,
        index: usize,
    },
    Negative {
        field: &'static str,
        index: usize,
    },
    Undominated {
        vertex: usize,
        covered: Rational,
        demand: u64,
    },
    BoundExceeded {
        size: Rational,
        bound: Rational,
    },
}

impl fmt::Display for CertificateViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateViolation::Shape {
                field,
                expected,
                found,
            } => {
                write!(f, "{field} has {found} entries, expected {expected}")
            }
            CertificateViolation::NotIntegral { field, index } => {
                write!(f, "{field}[{index}] is not an integer")
            }
            CertificateViolation::Negative { field, index } => {
                write!(f, "{field}[{index}] is negative")
            }
            CertificateViolation::Undominated {
                vertex,
                covered,
                demand,
            } => write!(
                f,
                "vertex {vertex}: g(j(v)) + h[N(v)] = {covered} < w(v) = {demand}"
            ),
            CertificateViolation::BoundExceeded { size, bound } => {
                write!(f, "|g| + |h| = {size} exceeds bound {bound}")
            }
        }
    }
}

/// Independent re-check of a certificate; no solver involved.
pub fn verify_certificate(
    graph: &Graph,
    p: &Partition,
    w: &WeightVector,
    cert: &DominationCertificate,
    bound: &Rational,
) -> Vec<CertificateViolation> {
    let g: Vec<Rational> = cert.g.iter().map(|&x| rational::uint(x)).collect();
    let h: Vec<Rational> = cert.h.iter().map(|&x| rational::uint(x)).collect();
    verify_raw(graph, p, w, &g, &h, bound)
}

/// [`verify_certificate`] on possibly non-integral or negative entries, as
/// read from an untrusted file.
pub fn verify_raw(
    graph: &Graph,
    p: &Partition,
    w: &WeightVector,
    g: &[Rational],
    h: &[Rational],
    bound: &Rational,
) -> Vec<CertificateViolation> {
    let mut out = Vec::new();
    let n = graph.n();
    if g.len() != p.len() {
        out.push(CertificateViolation::Shape {
            field: "g",
            expected: p.len(),
            found: g.len(),
        });
    }
    if h.len() != n {
        out.push(CertificateViolation::Shape {
            field: "h",
            expected: n,
            found: h.len(),
        });
    }
    if w.len() != n || !p.is_full() || p.n() != n {
        out.push(CertificateViolation::Shape {
            field: "w",
            expected: n,
            found: w.len(),
        });
    }
    if !out.is_empty() {
        return out;
    }
    for (field, vals) in [("g", g), ("h", h)] {
        for (i, x) in vals.iter().enumerate() {
            if !x.is_integer() {
                out.push(CertificateViolation::NotIntegral { field, index: i });
            }
            if x.is_negative() {
                out.push(CertificateViolation::Negative { field, index: i });
            }
        }
    }
    for v in 0..n {
        let j = p.block_of(v).expect("full partition");
        let mut covered = g[j].clone();
        covered += &h[v];
        for &u in graph.neighbors(v) {
            covered += &h[u];
        }
        if covered < rational::uint(w.get(v)) {
            out.push(CertificateViolation::Undominated {
                vertex: v,
                covered,
                demand: w.get(v),
            });
        }
    }
    let size = rational::sum(g) + rational::sum(h);
    if size > *bound {
        out.push(CertificateViolation::BoundExceeded {
            size,
            bound: bound.clone(),
        });
    }
    out
}

/// Reads `g`, `h` and `bound` from certificate JSON. Entries may be JSON
/// integers or rational strings; they are checked by [`verify_raw`], not here.
pub fn parse_certificate_json(
    value: &Value,
) -> std::result::Result<(Vec<Rational>, Vec<Rational>, Rational), ModelError> {
    fn entry(field: &str, i: usize, v: &Value) -> std::result::Result<Rational, ModelError> {
        let bad = || ModelError::Invalid {
            field: format!("{field}[{i}]"),
            message: format!("expected a number or \"p/q\" string, found {v}"),
        };
        match v {
            Value::Number(num) => {
                if let Some(k) = num.as_i64() {
                    Ok(rational::int(k))
                } else if let Some(f) = num.as_f64() {
                    Rational::from_float(f).ok_or_else(bad)
                } else {
                    Err(bad())
                }
            }
            Value::String(s) => rational::parse(s).ok_or_else(bad),
            _ => Err(bad()),
        }
    }
    fn array(value: &Value, field: &str) -> std::result::Result<Vec<Rational>, ModelError> {
        let arr =
            value
                .get(field)
                .and_then(Value::as_array)
                .ok_or_else(|| ModelError::Invalid {
                    field: field.into(),
                    message: "missing or not an array".into(),
                })?;
        arr.iter()
            .enumerate()
            .map(|(i, v)| entry(field, i, v))
            .collect()
    }
    let g = array(value, "g")?;
    let h = array(value, "h")?;
    let bound = match value.get("bound") {
        Some(v) => entry("bound", 0, v).map_err(|_| ModelError::Invalid {
            field: "bound".into(),
            message: format!("expected a rational, found {v}"),
        })?,
        None => {
            return Err(ModelError::Invalid {
                field: "bound".into(),
                message: "missing".into(),
            })
        }
    };
    Ok((g, h, bound))
}
