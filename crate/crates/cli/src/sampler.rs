//! Seeded sampler of random connected self-loop graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use selfloop_core::SelfLoopGraph;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerParams {
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub edge_prob: f64,
    pub loop_prob: f64,
    pub seed: u64,
}

impl Default for SamplerParams {
    fn default() -> Self {
        Self {
            count: 1000,
            n_min: 2,
            n_max: 10,
            edge_prob: 0.3,
            loop_prob: 0.5,
            seed: 42,
        }
    }
}

/// A random spanning tree over a shuffled vertex order, extra edges with
/// probability `edge_prob`, and each loop with probability `loop_prob`.
fn sample_one(rng: &mut ChaCha8Rng, p: &SamplerParams) -> SelfLoopGraph {
    let n = rng.random_range(p.n_min..=p.n_max);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut tree = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for i in 1..n {
        let (u, v) = (order[i], order[rng.random_range(0..i)]);
        tree[u][v] = true;
        tree[v][u] = true;
        edges.push((u, v));
    }
    for (u, row) in tree.iter().enumerate() {
        for (v, &in_tree) in row.iter().enumerate().skip(u + 1) {
            if !in_tree && rng.random_bool(p.edge_prob) {
                edges.push((u, v));
            }
        }
    }
    let loops: Vec<usize> = (0..n).filter(|_| rng.random_bool(p.loop_prob)).collect();
    SelfLoopGraph::build(n, &edges, &loops).expect("sampled graphs are valid")
}

/// `p.count` connected graphs, reproducible from `p.seed`.
pub fn random_connected_graphs(p: &SamplerParams) -> Vec<SelfLoopGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    (0..p.count).map(|_| sample_one(&mut rng, p)).collect()
}
