//! Brute-force oracles written straight from the definitions, sharing no code
//! with the library beyond its data types.
#![allow(dead_code)]

use inddom_core::lp::Relation;
use inddom_core::rational::{self, Rational};
use inddom_core::{Graph, Partition, WeightVector};
use num::{Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::build(n, &edges).unwrap()
}

/// A graph on `n` vertices, `1 ≤ n ≤ max_n`.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |b| graph_from_bits(n, &b))
    })
}

/// Two graphs on the same vertex set.
pub fn arb_graph_pair(max_n: usize) -> impl Strategy<Value = (Graph, Graph)> {
    (1..=max_n).prop_flat_map(|n| {
        let e = n * (n - 1) / 2;
        (
            proptest::collection::vec(any::<bool>(), e),
            proptest::collection::vec(any::<bool>(), e),
        )
            .prop_map(move |(a, b)| (graph_from_bits(n, &a), graph_from_bits(n, &b)))
    })
}

pub fn arb_weights(n: usize, max_w: u64) -> impl Strategy<Value = WeightVector> {
    proptest::collection::vec(0..=max_w, n).prop_map(WeightVector::new)
}

/// A full partition of `0..n` from block labels (relabelled to be contiguous).
pub fn partition_from_labels(labels: &[usize]) -> Partition {
    let mut ids: Vec<usize> = labels.to_vec();
    ids.sort_unstable();
    ids.dedup();
    let mut blocks = vec![Vec::new(); ids.len()];
    for (v, l) in labels.iter().enumerate() {
        blocks[ids.binary_search(l).unwrap()].push(v);
    }
    Partition::full(labels.len(), blocks).unwrap()
}

pub fn arb_partition(n: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..n.max(1), n).prop_map(|l| partition_from_labels(&l))
}

/// Graph, partition and weights.
pub fn arb_partitioned(
    max_n: usize,
    max_w: u64,
) -> impl Strategy<Value = (Graph, Partition, WeightVector)> {
    arb_graph(max_n).prop_flat_map(move |g| {
        let n = g.n();
        (Just(g), arb_partition(n), arb_weights(n, max_w))
    })
}

/// Seeded generator used by the acceptance suite.
pub fn seeded_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let bits: Vec<bool> = (0..n * (n - 1) / 2).map(|_| rng.gen_bool(0.5)).collect();
    graph_from_bits(n, &bits)
}

pub fn seeded_partition(rng: &mut ChaCha8Rng, n: usize) -> Partition {
    let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
    partition_from_labels(&labels)
}

pub fn seeded_weights(rng: &mut ChaCha8Rng, n: usize, max_w: u64) -> WeightVector {
    WeightVector::new((0..n).map(|_| rng.gen_range(0..=max_w)).collect())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn mask_members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn independent(g: &Graph, mask: u32) -> bool {
    let vs = mask_members(mask, g.n());
    vs.iter()
        .all(|&u| vs.iter().all(|&v| u == v || !g.has_edge(u, v)))
}

pub fn mask_weight(w: &WeightVector, mask: u32) -> u64 {
    mask_members(mask, w.len()).iter().map(|&v| w.get(v)).sum()
}

/// All independent sets as bitmasks.
pub fn independent_masks(g: &Graph) -> Vec<u32> {
    (0..1u32 << g.n()).filter(|&m| independent(g, m)).collect()
}

pub fn brute_mwis(g: &Graph, w: &WeightVector) -> u64 {
    independent_masks(g)
        .into_iter()
        .map(|m| mask_weight(w, m))
        .max()
        .unwrap()
}

pub fn brute_alpha_cap(g: &Graph, h: &Graph, w: &WeightVector) -> u64 {
    (0..1u32 << g.n())
        .filter(|&m| independent(g, m) && independent(h, m))
        .map(|m| mask_weight(w, m))
        .max()
        .unwrap()
}

/// Mass of f on the closed neighbourhood of v.
pub fn closed_mass(g: &Graph, f: &[u64], v: usize) -> u64 {
    (0..g.n())
        .filter(|&u| u == v || g.has_edge(u, v))
        .map(|u| f[u])
        .sum()
}

/// Calls `visit` on every vector in {0..=bound}^len.
pub fn each_vector(len: usize, bound: u64, mut visit: impl FnMut(&[u64])) {
    let mut f = vec![0u64; len];
    loop {
        visit(&f);
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            if f[i] < bound {
                f[i] += 1;
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

pub fn brute_gamma_w(g: &Graph, w: &WeightVector) -> u64 {
    let mut best = u64::MAX;
    each_vector(g.n(), w.max(), |f| {
        if (0..g.n()).all(|v| closed_mass(g, f, v) >= w.get(v)) {
            best = best.min(f.iter().sum());
        }
    });
    best
}

pub fn brute_gamma_cup(g: &Graph, h: &Graph, w: &WeightVector) -> u64 {
    let n = g.n();
    let mut best = u64::MAX;
    each_vector(2 * n, w.max(), |fh| {
        let (f, k) = fh.split_at(n);
        if (0..n).all(|v| closed_mass(g, f, v) + closed_mass(h, k, v) >= w.get(v)) {
            best = best.min(fh.iter().sum());
        }
    });
    best
}

/// (γ^w(G,𝒱), τ^w(G,𝒱)) by enumerating every pair (g on blocks, f on vertices).
pub fn brute_partition_domination(g: &Graph, p: &Partition, w: &WeightVector) -> (u64, Rational) {
    let n = g.n();
    let m = p.len();
    let mut gamma = u64::MAX;
    let mut tau2 = u64::MAX;
    each_vector(m + n, w.max(), |gf| {
        let (gb, f) = gf.split_at(m);
        let ok = (0..n).all(|v| gb[p.block_of(v).unwrap()] + closed_mass(g, f, v) >= w.get(v));
        if ok {
            let sg: u64 = gb.iter().sum();
            let sf: u64 = f.iter().sum();
            gamma = gamma.min(sg + sf);
            tau2 = tau2.min(2 * sg + sf);
        }
    });
    (gamma, rational::ratio(tau2 as i64, 2))
}

pub fn brute_gamma_tilde(g: &Graph) -> Option<u64> {
    let n = g.n();
    (0..1u32 << n)
        .filter(|&m| (0..n).all(|v| mask_members(m, n).iter().any(|&u| g.has_edge(u, v))))
        .map(|m| m.count_ones() as u64)
        .min()
}

pub fn brute_gamma(g: &Graph) -> u64 {
    let n = g.n();
    (0..1u32 << n)
        .filter(|&m| {
            (0..n).all(|v| {
                mask_members(m, n)
                    .iter()
                    .any(|&u| u == v || g.has_edge(u, v))
            })
        })
        .map(|m| m.count_ones() as u64)
        .min()
        .unwrap()
}

pub fn brute_nu(g: &Graph, p: &Partition, w: &WeightVector) -> u64 {
    independent_masks(g)
        .into_iter()
        .filter(|&m| {
            (0..p.len()).all(|j| p.block(j).iter().filter(|&v| m >> v & 1 == 1).count() <= 1)
        })
        .map(|m| mask_weight(w, m))
        .max()
        .unwrap()
}

fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let d = b.len();
    for col in 0..d {
        let piv = (col..d).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let pivot_row = a[col].clone();
        for r in 0..d {
            if r != col && !a[r][col].is_zero() {
                let factor = &a[r][col] / &pivot_row[col];
                for (cell, p) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                    *cell -= &factor * p;
                }
                let t = &factor * &b[col];
                b[r] -= t;
            }
        }
    }
    Some((0..d).map(|i| &b[i] / &a[i][i]).collect())
}

/// Maximum of `c·x` over `{x ≥ 0 : rows}` by enumerating basic solutions.
/// The feasible region must be bounded. `None` when it is empty.
pub fn brute_lp_max(
    c: &[Rational],
    rows: &[(Vec<Rational>, Relation, Rational)],
) -> Option<Rational> {
    let d = c.len();
    // Every constraint as a hyperplane candidate: the rows, then x_i = 0.
    let mut planes: Vec<(Vec<Rational>, Rational)> = rows
        .iter()
        .map(|(a, _, b)| (a.clone(), b.clone()))
        .collect();
    for i in 0..d {
        let mut e = vec![Rational::zero(); d];
        e[i] = rational::one();
        planes.push((e, Rational::zero()));
    }
    let feasible = |x: &[Rational]| {
        x.iter().all(|v| !v.is_negative())
            && rows.iter().all(|(a, rel, b)| {
                let lhs: Rational = a.iter().zip(x).map(|(p, q)| p * q).sum();
                match rel {
                    Relation::Le => lhs <= *b,
                    Relation::Ge => lhs >= *b,
                    Relation::Eq => lhs == *b,
                }
            })
    };
    let mut best: Option<Rational> = None;
    let k = planes.len();
    let mut idx: Vec<usize> = (0..d).collect();
    if d > k {
        return None;
    }
    loop {
        let a = idx.iter().map(|&i| planes[i].0.clone()).collect();
        let b = idx.iter().map(|&i| planes[i].1.clone()).collect();
        if let Some(x) = solve_square(a, b) {
            if feasible(&x) {
                let val: Rational = c.iter().zip(&x).map(|(p, q)| p * q).sum();
                if best.as_ref().is_none_or(|cur| val > *cur) {
                    best = Some(val);
                }
            }
        }
        // next combination
        let mut i = d;
        loop {
            if i == 0 {
                return best;
            }
            i -= 1;
            if idx[i] < k - d + i {
                idx[i] += 1;
                for j in i + 1..d {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Clique rows `x(K) ≤ 1` over every clique of `g` with at least two vertices
/// (single-vertex rows `x_v ≤ 1` are added too). Describes IP(G) exactly when
/// G is perfect, which holds for every graph on at most four vertices.
pub fn clique_rows(g: &Graph) -> Vec<(Vec<Rational>, Relation, Rational)> {
    let n = g.n();
    let mut rows = Vec::new();
    for m in 1..1u32 << n {
        let vs = mask_members(m, n);
        let clique = vs
            .iter()
            .all(|&u| vs.iter().all(|&v| u == v || g.has_edge(u, v)));
        if clique {
            let mut a = vec![Rational::zero(); n];
            for v in vs {
                a[v] = rational::one();
            }
            rows.push((a, Relation::Le, rational::one()));
        }
    }
    rows
}

pub fn weights_as_rationals(w: &WeightVector) -> Vec<Rational> {
    w.as_slice().iter().map(|&x| rational::uint(x)).collect()
}
