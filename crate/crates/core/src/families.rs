//! Generators for the named graph families, and exhaustive enumeration of
//! all small labeled self-loop graphs.
//!
//! Vertex layout conventions:
//! * complete bipartite `K_{a,b}`: part A is `0..a`, part B is `a..a+b`;
//! * star `S_n = K_{1,n-1}`: centre `0`, leaves `1..n`;
//! * wheel `W_n`: centre `0`, rim cycle `1..n`;
//! * path and cycle: vertices in sequence order;
//! * Kneser `K(2k+1, k)`: the `k`-subsets of `{1, …, 2k+1}` in lexicographic
//!   order, adjacent iff disjoint. The Petersen graph is `K(5, 2)`.

use crate::error::{Error, Result};
use crate::graph::SelfLoopGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Cycle { n: usize },
    Path { n: usize },
    Wheel { n: usize },
    Star { n: usize },
    Kneser { k: usize },
    Petersen,
}

/// Where the loops go.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoopPlacement {
    Explicit(Vec<usize>),
    /// First `sigma_a` vertices of part A and first `sigma_b` of part B.
    /// Complete bipartite graphs and stars only.
    Parts { sigma_a: usize, sigma_b: usize },
    /// Optional loop at the centre plus loops on rim vertices `1..=rim`.
    /// Wheels only.
    Wheel { center: bool, rim: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub loops: LoopPlacement,
}

impl FamilySpec {
    pub fn loopless(family: Family) -> Self {
        Self::with_loops(family, Vec::new())
    }

    pub fn with_loops(family: Family, loops: Vec<usize>) -> Self {
        Self {
            family,
            loops: LoopPlacement::Explicit(loops),
        }
    }

    pub fn with_placement(family: Family, loops: LoopPlacement) -> Self {
        Self { family, loops }
    }

    /// Expands the placement into an explicit, sorted vertex list.
    pub fn loop_vertices(&self) -> Result<Vec<usize>> {
        let n = self.family.order()?;
        let mut loops = match (&self.loops, self.family) {
            (LoopPlacement::Explicit(list), _) => {
                if let Some(&v) = list.iter().find(|&&v| v >= n) {
                    return Err(Error::InvalidLoopPlacement(format!(
                        "vertex {v} out of range for order {n}"
                    )));
                }
                list.clone()
            }
            (&LoopPlacement::Parts { sigma_a, sigma_b }, family) => {
                let (a, b) = family.parts().ok_or_else(|| {
                    Error::InvalidLoopPlacement(
                        "part placement needs a complete bipartite graph or a star".into(),
                    )
                })?;
                if sigma_a > a || sigma_b > b {
                    return Err(Error::InvalidLoopPlacement(format!(
                        "sigma_a = {sigma_a}, sigma_b = {sigma_b} exceed part sizes {a}, {b}"
                    )));
                }
                (0..sigma_a).chain(a..a + sigma_b).collect()
            }
            (&LoopPlacement::Wheel { center, rim }, Family::Wheel { n }) => {
                if rim > n - 1 {
                    return Err(Error::InvalidLoopPlacement(format!(
                        "{rim} rim loops on a wheel with {} rim vertices",
                        n - 1
                    )));
                }
                let centre = center.then_some(0);
                centre.into_iter().chain(1..=rim).collect()
            }
            (LoopPlacement::Wheel { .. }, _) => {
                return Err(Error::InvalidLoopPlacement(
                    "centre/rim placement needs a wheel".into(),
                ))
            }
        };
        loops.sort_unstable();
        if loops.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidLoopPlacement("repeated loop vertex".into()));
        }
        Ok(loops)
    }
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete { .. } => "complete",
            Family::CompleteBipartite { .. } => "complete_bipartite",
            Family::Cycle { .. } => "cycle",
            Family::Path { .. } => "path",
            Family::Wheel { .. } => "wheel",
            Family::Star { .. } => "star",
            Family::Kneser { .. } => "kneser",
            Family::Petersen => "petersen",
        }
    }

    /// Number of vertices, validating the family parameters.
    pub fn order(&self) -> Result<usize> {
        let invalid = |msg: &str| Err(Error::InvalidSpec(format!("{}: {msg}", self.name())));
        match *self {
            Family::Complete { n } | Family::Path { n } if n == 0 => invalid("n must be >= 1"),
            Family::Complete { n } | Family::Path { n } => Ok(n),
            Family::CompleteBipartite { a, b } if a == 0 || b == 0 => {
                invalid("part sizes must be >= 1")
            }
            Family::CompleteBipartite { a, b } => Ok(a + b),
            Family::Cycle { n } if n < 3 => invalid("n must be >= 3"),
            Family::Cycle { n } => Ok(n),
            Family::Wheel { n } if n < 4 => invalid("n must be >= 4"),
            Family::Wheel { n } => Ok(n),
            Family::Star { n } if n < 2 => invalid("n must be >= 2"),
            Family::Star { n } => Ok(n),
            Family::Kneser { k } if !(2..=8).contains(&k) => invalid("k must be in 2..=8"),
            Family::Kneser { k } => Ok(binomial(2 * k + 1, k)),
            Family::Petersen => Ok(10),
        }
    }

    /// Part sizes for the bipartite families.
    pub fn parts(&self) -> Option<(usize, usize)> {
        match *self {
            Family::CompleteBipartite { a, b } => Some((a, b)),
            Family::Star { n } => Some((1, n - 1)),
            _ => None,
        }
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        match *self {
            Family::Complete { n } => (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect(),
            Family::CompleteBipartite { .. } | Family::Star { .. } => {
                let (a, b) = self.parts().unwrap();
                (0..a)
                    .flat_map(|u| (a..a + b).map(move |v| (u, v)))
                    .collect()
            }
            Family::Path { n } => (1..n).map(|i| (i - 1, i)).collect(),
            Family::Cycle { n } => (0..n).map(|i| (i, (i + 1) % n)).collect(),
            Family::Wheel { n } => {
                let rim = n - 1;
                (1..n)
                    .map(|i| (0, i))
                    .chain((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)))
                    .collect()
            }
            Family::Kneser { k } => kneser_edges(k),
            Family::Petersen => kneser_edges(2),
        }
    }
}

/// Builds the labeled family graph with its loops.
pub fn generate(spec: &FamilySpec) -> Result<SelfLoopGraph> {
    let n = spec.family.order()?;
    let loops = spec.loop_vertices()?;
    SelfLoopGraph::build(n, &spec.family.edges(), &loops)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `k`-subsets of `{0, …, 2k}` as bitmasks, lexicographic by sorted elements.
fn kneser_vertices(k: usize) -> Vec<u32> {
    fn rec(start: usize, left: usize, ground: usize, mask: u32, out: &mut Vec<u32>) {
        if left == 0 {
            out.push(mask);
            return;
        }
        for e in start..=ground - left {
            rec(e + 1, left - 1, ground, mask | 1 << e, out);
        }
    }
    let mut out = Vec::new();
    rec(0, k, 2 * k + 1, 0, &mut out);
    out
}

fn kneser_edges(k: usize) -> Vec<(usize, usize)> {
    let vs = kneser_vertices(k);
    let mut edges = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                edges.push((i, j));
            }
        }
    }
    edges
}

pub const MAX_EXHAUSTIVE_ORDER: usize = 5;

/// Every labeled graph on `n` vertices with every loop subset.
///
/// Item `index` has edge mask `index >> n` over the pairs `(u, v)`, `u < v`,
/// in lexicographic order, and loop mask `index & (2^n - 1)`. The stream can
/// be sharded by index range with [`graph_at`].
pub struct AllGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
    connected_only: bool,
}

impl AllGraphs {
    pub fn len_unfiltered(&self) -> u64 {
        self.end
    }
}

pub fn enumerate_all_graphs(n: usize, connected_only: bool) -> Result<AllGraphs> {
    if n == 0 || n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::SizeLimitExceeded(format!(
            "exhaustive enumeration supports 1 <= n <= {MAX_EXHAUSTIVE_ORDER}, got {n}"
        )));
    }
    let pairs = pairs(n);
    let end = 1u64 << (pairs.len() + n);
    Ok(AllGraphs {
        n,
        pairs,
        next: 0,
        end,
        connected_only,
    })
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn decode(n: usize, pairs: &[(usize, usize)], index: u64) -> SelfLoopGraph {
    let loop_mask = index & ((1 << n) - 1);
    let edge_mask = index >> n;
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| edge_mask >> i & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    let loops: Vec<_> = (0..n).filter(|v| loop_mask >> v & 1 == 1).collect();
    SelfLoopGraph::build(n, &edges, &loops).expect("decoded graphs are valid")
}

/// The graph at position `index` of the unfiltered exhaustive stream.
pub fn graph_at(n: usize, index: u64) -> Result<SelfLoopGraph> {
    let all = enumerate_all_graphs(n, false)?;
    if index >= all.end {
        return Err(Error::SizeLimitExceeded(format!(
            "index {index} beyond {} graphs",
            all.end
        )));
    }
    Ok(decode(n, &all.pairs, index))
}

impl Iterator for AllGraphs {
    type Item = SelfLoopGraph;

    fn next(&mut self) -> Option<SelfLoopGraph> {
        while self.next < self.end {
            let g = decode(self.n, &self.pairs, self.next);
            self.next += 1;
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}
