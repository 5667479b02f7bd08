//! Instance files.
//!
//! ```json
//! { "n": 4, "edges": [[0,1],[1,2],[2,3]], "parts": [[0,3],[1,2]],
//!   "weights": [1,1,1,1], "edges2": [[0,2],[0,3],[1,3]] }
//! ```
//!
//! `parts`, `weights` (default all ones) and `edges2` are optional.

use serde::{Deserialize, Serialize};

use crate::error::{Error, ModelError};
use crate::graph::{Graph, Partition, WeightVector};

#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub graph: Graph,
    pub second_graph: Option<Graph>,
    pub partition: Option<Partition>,
    pub weights: WeightVector,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    n: i64,
    edges: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    parts: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    edges2: Option<Vec<Vec<i64>>>,
}

fn invalid(field: impl Into<String>, message: impl Into<String>) -> ModelError {
    ModelError::Invalid {
        field: field.into(),
        message: message.into(),
    }
}

fn vertex_id(field: &str, value: i64, n: usize) -> Result<usize, ModelError> {
    if value < 0 || value as u64 >= n as u64 {
        Err(invalid(
            field,
            format!("vertex {value} out of range for n = {n}"),
        ))
    } else {
        Ok(value as usize)
    }
}

fn parse_edges(field: &str, raw: &[Vec<i64>], n: usize) -> Result<Graph, ModelError> {
    let mut pairs = Vec::with_capacity(raw.len());
    for (i, e) in raw.iter().enumerate() {
        let name = format!("{field}[{i}]");
        if e.len() != 2 {
            return Err(invalid(
                name,
                format!("expected a pair, found {} entries", e.len()),
            ));
        }
        let u = vertex_id(&name, e[0], n)?;
        let v = vertex_id(&name, e[1], n)?;
        if u == v {
            return Err(invalid(name, format!("self-loop at vertex {u}")));
        }
        pairs.push((u, v));
    }
    Graph::build(n, &pairs).map_err(|e| e.in_field(field))
}

impl Instance {
    pub fn new(graph: Graph) -> Instance {
        let n = graph.n();
        Instance {
            graph,
            second_graph: None,
            partition: None,
            weights: WeightVector::ones(n),
        }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn with_partition(mut self, p: Partition) -> Instance {
        self.partition = Some(p);
        self
    }

    pub fn with_second_graph(mut self, h: Graph) -> Instance {
        self.second_graph = Some(h);
        self
    }

    pub fn with_weights(mut self, w: WeightVector) -> Instance {
        self.weights = w;
        self
    }

    pub fn partition(&self) -> Result<&Partition, Error> {
        self.partition.as_ref().ok_or(Error::Missing("parts"))
    }

    pub fn second_graph(&self) -> Result<&Graph, Error> {
        self.second_graph.as_ref().ok_or(Error::Missing("edges2"))
    }

    /// Parses and validates instance JSON. Errors name the offending field.
    pub fn from_json(text: &str) -> Result<Instance, ModelError> {
        let raw: RawInstance =
            serde_json::from_str(text).map_err(|e| invalid("json", e.to_string()))?;
        if raw.n < 0 {
            return Err(invalid(
                "n",
                format!("must be non-negative, found {}", raw.n),
            ));
        }
        let n = raw.n as usize;
        let graph = parse_edges("edges", &raw.edges, n)?;
        let second_graph = match &raw.edges2 {
            Some(e) => Some(parse_edges("edges2", e, n)?),
            None => None,
        };
        let partition = match &raw.parts {
            Some(parts) => {
                let mut blocks = Vec::with_capacity(parts.len());
                for (j, block) in parts.iter().enumerate() {
                    let name = format!("parts[{j}]");
                    let ids = block
                        .iter()
                        .map(|&v| vertex_id(&name, v, n))
                        .collect::<Result<Vec<_>, _>>()?;
                    blocks.push(ids);
                }
                Some(Partition::full(n, blocks).map_err(|e| e.in_field("parts"))?)
            }
            None => None,
        };
        let weights = match &raw.weights {
            Some(w) => {
                if w.len() != n {
                    return Err(invalid(
                        "weights",
                        format!("expected {n} entries, found {}", w.len()),
                    ));
                }
                let mut out = Vec::with_capacity(n);
                for (i, &x) in w.iter().enumerate() {
                    if x < 0 {
                        return Err(invalid(
                            format!("weights[{i}]"),
                            format!("negative weight {x}"),
                        ));
                    }
                    out.push(x as u64);
                }
                WeightVector::new(out)
            }
            None => WeightVector::ones(n),
        };
        Ok(Instance {
            graph,
            second_graph,
            partition,
            weights,
        })
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let edges = |g: &Graph| -> Vec<Vec<i64>> {
            g.edges()
                .into_iter()
                .map(|(u, v)| vec![u as i64, v as i64])
                .collect()
        };
        let raw = RawInstance {
            n: self.n() as i64,
            edges: edges(&self.graph),
            parts: self.partition.as_ref().map(|p| {
                p.blocks()
                    .iter()
                    .map(|b| b.iter().map(|v| v as i64).collect())
                    .collect()
            }),
            weights: Some(self.weights.as_slice().iter().map(|&x| x as i64).collect()),
            edges2: self.second_graph.as_ref().map(edges),
        };
        serde_json::to_value(raw).expect("instance serialises")
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }
}
