//! Simple undirected graphs, vertex partitions and weight vectors.
//!
//! Vertices are the contiguous ids `0..n`. The listed order of vertices is the
//! canonical order used by order-sensitive constructions such as the greedy
//! domination certificate.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::ModelError;

/// A sorted, duplicate-free set of vertex ids.
///
/// The derived `Ord` is plain lexicographic order on the sorted ids; use
/// [`VertexSet::canonical_cmp`] for the size-then-lexicographic order that
/// independent-set families are kept in.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    /// Builds a set from ids in any order, dropping duplicates.
    pub fn from_unsorted<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        let mut v: Vec<usize> = ids.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// Caller guarantees `ids` is strictly increasing.
    pub(crate) fn from_sorted_unchecked(ids: Vec<usize>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        VertexSet(ids)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn insert(&mut self, v: usize) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn without(&self, v: usize) -> VertexSet {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_unsorted(self.iter().chain(other.iter()))
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Size first, then lexicographic.
    pub fn canonical_cmp(&self, other: &VertexSet) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }

    pub fn weight(&self, w: &WeightVector) -> u64 {
        self.iter().map(|v| w.get(v)).sum()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_unsorted(iter)
    }
}

impl<const K: usize> From<[usize; K]> for VertexSet {
    fn from(ids: [usize; K]) -> Self {
        VertexSet::from_unsorted(ids)
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.0
    }
}

/// Simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges collapse.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, ModelError> {
        let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for (index, &(u, v)) in edges.iter().enumerate() {
            for id in [u, v] {
                if id >= n {
                    return Err(ModelError::OutOfRange {
                        vertex: id,
                        n,
                        index,
                    });
                }
            }
            if u == v {
                return Err(ModelError::SelfLoop { vertex: u, index });
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Graph {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Graph {
        Graph {
            adj: (0..n)
                .map(|v| (0..n).filter(|&u| u != v).collect())
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        Graph {
            adj: (0..n)
                .map(|v| (0..n).filter(|&u| u != v && !self.has_edge(v, u)).collect())
                .collect(),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<(), ModelError> {
        if v >= self.n() {
            Err(ModelError::OutOfRange {
                vertex: v,
                n: self.n(),
                index: 0,
            })
        } else {
            Ok(())
        }
    }

    /// Open neighborhood Ñ(v), or closed neighborhood N(v) = Ñ(v) ∪ {v}.
    pub fn neighborhood(&self, v: usize, closed: bool) -> Result<VertexSet, ModelError> {
        self.check_vertex(v)?;
        Ok(self.neighborhood_unchecked(v, closed))
    }

    pub(crate) fn neighborhood_unchecked(&self, v: usize, closed: bool) -> VertexSet {
        let mut ids = self.adj[v].clone();
        if closed {
            if let Err(pos) = ids.binary_search(&v) {
                ids.insert(pos, v);
            }
        }
        VertexSet::from_sorted_unchecked(ids)
    }

    /// Union of the (open or closed) neighborhoods of every vertex in `d`.
    pub fn set_neighborhood(&self, d: &VertexSet, closed: bool) -> Result<VertexSet, ModelError> {
        for v in d.iter() {
            self.check_vertex(v)?;
        }
        let mut out = BTreeSet::new();
        for v in d.iter() {
            out.extend(self.adj[v].iter().copied());
            if closed {
                out.insert(v);
            }
        }
        Ok(VertexSet::from_sorted_unchecked(out.into_iter().collect()))
    }

    /// G[s] relabelled to `0..|s|`; the returned map sends new ids to original ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), ModelError> {
        for v in s.iter() {
            self.check_vertex(v)?;
        }
        let map: Vec<usize> = s.iter().collect();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&u| local[u] != usize::MAX)
                    .map(|&u| local[u])
                    .collect()
            })
            .collect();
        Ok((Graph { adj }, map))
    }

    /// Maximal cliques by Bron–Kerbosch with pivoting. Only meant for small graphs.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        fn expand(
            g: &Graph,
            r: &mut Vec<usize>,
            p: BTreeSet<usize>,
            mut x: BTreeSet<usize>,
            out: &mut Vec<VertexSet>,
        ) {
            if p.is_empty() {
                if x.is_empty() {
                    out.push(VertexSet::from_unsorted(r.iter().copied()));
                }
                return;
            }
            let pivot = p
                .iter()
                .chain(x.iter())
                .copied()
                .max_by_key(|&u| g.adj[u].iter().filter(|v| p.contains(v)).count());
            let pivot = pivot.expect("p is non-empty");
            let candidates: Vec<usize> = p
                .iter()
                .copied()
                .filter(|v| !g.has_edge(pivot, *v))
                .collect();
            let mut p = p;
            for v in candidates {
                let nv: BTreeSet<usize> = g.adj[v].iter().copied().collect();
                r.push(v);
                expand(
                    g,
                    r,
                    p.intersection(&nv).copied().collect(),
                    x.intersection(&nv).copied().collect(),
                    out,
                );
                r.pop();
                p.remove(&v);
                x.insert(v);
            }
        }
        let mut out = Vec::new();
        expand(
            self,
            &mut Vec::new(),
            (0..self.n()).collect(),
            BTreeSet::new(),
            &mut out,
        );
        out.sort();
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Ordered blocks V₁,…,V_m of pairwise disjoint, non-empty vertex sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    blocks: Vec<VertexSet>,
    /// `block_of[v]` is the index j with v ∈ V_j, if any.
    block_of: Vec<Option<usize>>,
}

impl Partition {
    /// Validates disjointness, non-emptiness and range. The union may be a
    /// proper subset of `0..n`; see [`Partition::is_full`].
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Partition, ModelError> {
        if blocks.is_empty() {
            return Err(ModelError::NoBlocks);
        }
        let mut block_of = vec![None; n];
        let mut out = Vec::with_capacity(blocks.len());
        for (j, block) in blocks.into_iter().enumerate() {
            if block.is_empty() {
                return Err(ModelError::EmptyBlock { block: j });
            }
            for &v in &block {
                if v >= n {
                    return Err(ModelError::OutOfRange {
                        vertex: v,
                        n,
                        index: j,
                    });
                }
                if let Some(prev) = block_of[v] {
                    return Err(ModelError::OverlappingBlocks {
                        vertex: v,
                        first: prev,
                        second: j,
                    });
                }
                block_of[v] = Some(j);
            }
            out.push(VertexSet::from_unsorted(block));
        }
        Ok(Partition {
            blocks: out,
            block_of,
        })
    }

    /// Like [`Partition::new`] but also requires the blocks to cover `0..n`.
    pub fn full(n: usize, blocks: Vec<Vec<usize>>) -> Result<Partition, ModelError> {
        let p = Partition::new(n, blocks)?;
        p.require_full()?;
        Ok(p)
    }

    pub fn singletons(n: usize) -> Partition {
        Partition::new(n, (0..n).map(|v| vec![v]).collect()).expect("n >= 1")
    }

    pub fn require_full(&self) -> Result<(), ModelError> {
        match self.block_of.iter().position(Option::is_none) {
            Some(v) => Err(ModelError::NotAPartition { vertex: v }),
            None => Ok(()),
        }
    }

    pub fn is_full(&self) -> bool {
        self.block_of.iter().all(Option::is_some)
    }

    /// Number of blocks m.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Size of the ground set the partition lives in.
    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn block(&self, j: usize) -> &VertexSet {
        &self.blocks[j]
    }

    /// j(v): the block containing v.
    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.block_of.get(v).copied().flatten()
    }

    pub(crate) fn block_map(&self) -> &[Option<usize>] {
        &self.block_of
    }

    /// V_I for a set of block indices.
    pub fn union_of(&self, blocks: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_unsorted(blocks.into_iter().flat_map(|j| self.blocks[j].iter()))
    }

    /// Graph whose cliques are exactly the blocks.
    pub fn partition_graph(&self) -> Result<Graph, ModelError> {
        self.require_full()?;
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let j = self.block_of[v].expect("full partition");
                self.blocks[j].iter().filter(|&u| u != v).collect()
            })
            .collect();
        Ok(Graph { adj })
    }
}

/// Non-negative integer vertex weights.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(w: Vec<u64>) -> Self {
        WeightVector(w)
    }

    pub fn ones(n: usize) -> Self {
        WeightVector(vec![1; n])
    }

    pub fn zeros(n: usize) -> Self {
        WeightVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> u64 {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn max(&self) -> u64 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn check_len(&self, n: usize) -> Result<(), ModelError> {
        if self.len() == n {
            Ok(())
        } else {
            Err(ModelError::WeightLength {
                expected: n,
                found: self.len(),
            })
        }
    }

    /// Weights of the vertices in `map`, in map order.
    pub fn restrict(&self, map: &[usize]) -> WeightVector {
        WeightVector(map.iter().map(|&v| self.0[v]).collect())
    }
}

/// Convenience constructor mirroring the edge-list form used in instance files.
pub fn build_graph(n: usize, edges: &[[usize; 2]]) -> Result<Graph, ModelError> {
    let pairs: Vec<(usize, usize)> = edges.iter().map(|e| (e[0], e[1])).collect();
    Graph::build(n, &pairs)
}

/// Path on `n` vertices, 0−1−…−(n−1).
pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::build(n, &edges).expect("valid path")
}
