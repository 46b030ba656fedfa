//! Counts of the elementary substructures consumed by the walk formulas.
//!
//! Triangles are classified by how many of their vertices carry a loop.
//! Four-cycles are split into those whose vertex set induces `K_4` and the
//! rest: a `K_4` contributes three 4-cycles, which are reported through
//! `k4_count` and excluded from `c4_not_k4`, so that the total number of
//! 4-cycles is `c4_not_k4 + 3 * k4_count`.

use crate::graph::SelfLoopGraph;

/// Graph-level substructure counts of `G_S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphCensus {
    /// First Zagreb index `Σ d(v)²`.
    pub zagreb1: u64,
    /// `Σ_{v ∈ S} d(v)`.
    pub degree_sum_loops: u64,
    pub n1: Vec<u64>,
    pub n2: Vec<u64>,
    /// `Σ_{v ∈ S} n1(v)`, the number of edges between `S` and its complement.
    pub n1_sum_loops: u64,
    pub triangles: u64,
    /// Triangles with exactly 1, 2 and 3 looped vertices.
    pub tri_loops: [u64; 3],
    pub c4_not_k4: u64,
    pub k4_count: u64,
}

impl SubgraphCensus {
    /// Total number of 4-cycles, counting the three inside each `K_4`.
    pub fn four_cycles_total(&self) -> u64 {
        self.c4_not_k4 + 3 * self.k4_count
    }
}

/// Per-vertex loop-boundary counts.
///
/// For a looped vertex, `n1` counts unlooped neighbours and `n2` looped
/// ones. For an unlooped vertex, `n1` counts looped neighbours and `n2` is 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopBoundary {
    pub n1: Vec<u64>,
    pub n2: Vec<u64>,
    pub n1_sum_loops: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleCensus {
    pub total: u64,
    pub by_loops: [u64; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourCycleCensus {
    pub c4_not_k4: u64,
    pub k4_count: u64,
}

/// Substructures through a single vertex.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VertexCensus {
    pub triangles: u64,
    /// Triangles at this vertex with exactly 1, 2, 3 looped vertices.
    pub tri_loops: [u64; 3],
    pub c4_not_k4: u64,
    pub k4: u64,
}

pub fn first_zagreb(g: &SelfLoopGraph) -> u64 {
    g.degrees().iter().map(|&d| (d * d) as u64).sum()
}

pub fn loop_boundary(g: &SelfLoopGraph) -> LoopBoundary {
    let n = g.order();
    let mut n1 = vec![0u64; n];
    let mut n2 = vec![0u64; n];
    for v in 0..n {
        let looped_nbrs = g.neighbors(v).iter().filter(|&&u| g.is_looped(u)).count() as u64;
        if g.is_looped(v) {
            n2[v] = looped_nbrs;
            n1[v] = g.degree(v) as u64 - looped_nbrs;
        } else {
            n1[v] = looped_nbrs;
        }
    }
    let n1_sum_loops = (0..n).filter(|&v| g.is_looped(v)).map(|v| n1[v]).sum();
    LoopBoundary {
        n1,
        n2,
        n1_sum_loops,
    }
}

pub fn triangle_census(g: &SelfLoopGraph) -> TriangleCensus {
    let mut census = TriangleCensus {
        total: 0,
        by_loops: [0; 3],
    };
    for_each_triangle(g, |tri| {
        census.total += 1;
        let r = loops_in(g, &tri);
        if r > 0 {
            census.by_loops[r - 1] += 1;
        }
    });
    census
}

pub fn four_cycle_census(g: &SelfLoopGraph) -> FourCycleCensus {
    let n = g.order();
    // Each 4-cycle has two diagonals, so summing C(codeg, 2) over
    // unordered pairs counts every cycle twice.
    let mut twice_cycles = 0u64;
    for u in 0..n {
        for w in u + 1..n {
            twice_cycles += choose2(codegree(g, u, w));
        }
    }
    let mut k4_count = 0u64;
    for_each_k4(g, |_| k4_count += 1);
    FourCycleCensus {
        c4_not_k4: twice_cycles / 2 - 3 * k4_count,
        k4_count,
    }
}

pub fn census(g: &SelfLoopGraph) -> SubgraphCensus {
    let boundary = loop_boundary(g);
    let triangles = triangle_census(g);
    let cycles = four_cycle_census(g);
    let degree_sum_loops = (0..g.order())
        .filter(|&v| g.is_looped(v))
        .map(|v| g.degree(v) as u64)
        .sum();
    SubgraphCensus {
        zagreb1: first_zagreb(g),
        degree_sum_loops,
        n1: boundary.n1,
        n2: boundary.n2,
        n1_sum_loops: boundary.n1_sum_loops,
        triangles: triangles.total,
        tri_loops: triangles.by_loops,
        c4_not_k4: cycles.c4_not_k4,
        k4_count: cycles.k4_count,
    }
}

/// Triangle, 4-cycle and `K_4` counts at every vertex.
pub fn vertex_census(g: &SelfLoopGraph) -> Vec<VertexCensus> {
    let n = g.order();
    let mut out = vec![VertexCensus::default(); n];
    for_each_triangle(g, |tri| {
        let r = loops_in(g, &tri);
        for &v in &tri {
            out[v].triangles += 1;
            if r > 0 {
                out[v].tri_loops[r - 1] += 1;
            }
        }
    });
    for_each_k4(g, |quad| {
        for &v in &quad {
            out[v].k4 += 1;
        }
    });
    for (v, entry) in out.iter_mut().enumerate() {
        // every 4-cycle through v has exactly one vertex opposite to v
        let through: u64 = (0..n)
            .filter(|&w| w != v)
            .map(|w| choose2(codegree(g, v, w)))
            .sum();
        entry.c4_not_k4 = through - 3 * entry.k4;
    }
    out
}

fn loops_in(g: &SelfLoopGraph, vs: &[usize]) -> usize {
    vs.iter().filter(|&&v| g.is_looped(v)).count()
}

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

fn codegree(g: &SelfLoopGraph, u: usize, w: usize) -> u64 {
    let mut count = 0;
    merge_common(g.neighbors(u), g.neighbors(w), |_| count += 1);
    count
}

/// Calls `f` on every common element of two sorted slices.
fn merge_common(a: &[usize], b: &[usize], mut f: impl FnMut(usize)) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                f(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

fn for_each_triangle(g: &SelfLoopGraph, mut f: impl FnMut([usize; 3])) {
    for u in 0..g.order() {
        for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
            merge_common(g.neighbors(u), g.neighbors(v), |w| {
                if w > v {
                    f([u, v, w]);
                }
            });
        }
    }
}

fn for_each_k4(g: &SelfLoopGraph, mut f: impl FnMut([usize; 4])) {
    let mut common = Vec::new();
    for u in 0..g.order() {
        for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
            common.clear();
            merge_common(g.neighbors(u), g.neighbors(v), |w| {
                if w > v {
                    common.push(w);
                }
            });
            for (i, &w) in common.iter().enumerate() {
                for &x in &common[i + 1..] {
                    if g.has_edge(w, x) {
                        f([u, v, w, x]);
                    }
                }
            }
        }
    }
}
