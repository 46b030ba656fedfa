use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A simple undirected graph with one loop on each vertex of a subset `S`.
///
/// Vertices are `0..order`. Edges are stored canonically as `(u, v)` with
/// `u < v`, sorted. Loops are kept apart from the edge set, so
/// [`degree`](Self::degree) never counts a loop.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SelfLoopGraph {
    order: usize,
    edges: Vec<(usize, usize)>,
    looped: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
}

impl SelfLoopGraph {
    /// Builds a graph from an edge list and a loop list.
    ///
    /// Edge endpoints may be given in either order. Repeated edges, repeated
    /// loops and pairs `{v, v}` in the edge list are rejected.
    pub fn build(order: usize, edges: &[(usize, usize)], loops: &[usize]) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let check = |v: usize| {
            if v < order {
                Ok(())
            } else {
                Err(Error::IndexOutOfRange { vertex: v, order })
            }
        };

        let mut canonical = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            check(u)?;
            check(v)?;
            if u == v {
                return Err(Error::SelfPairInEdgeList(u));
            }
            canonical.push((u.min(v), u.max(v)));
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut looped = vec![false; order];
        for &v in loops {
            check(v)?;
            if std::mem::replace(&mut looped[v], true) {
                return Err(Error::DuplicateLoop(v));
            }
        }

        let mut neighbors = vec![Vec::new(); order];
        for &(u, v) in &canonical {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }

        Ok(Self {
            order,
            edges: canonical,
            looped,
            neighbors,
        })
    }

    /// Same edge set, different loop set.
    pub fn with_loops(&self, loops: &[usize]) -> Result<Self> {
        Self::build(self.order, &self.edges, loops)
    }

    /// Number of vertices `n`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of proper edges `m`.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Number of loops `σ`.
    pub fn sigma(&self) -> usize {
        self.looped.iter().filter(|&&l| l).count()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Looped vertices in increasing order.
    pub fn loops(&self) -> Vec<usize> {
        (0..self.order).filter(|&v| self.looped[v]).collect()
    }

    pub fn is_looped(&self, v: usize) -> bool {
        self.looped[v]
    }

    /// Sorted neighbours of `v` over proper edges.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.neighbors[u].binary_search(&v).is_ok()
    }

    pub fn adjacency(&self) -> AdjacencyMatrix {
        let n = self.order;
        let mut entries = vec![0u8; n * n];
        for &(u, v) in &self.edges {
            entries[u * n + v] = 1;
            entries[v * n + u] = 1;
        }
        for v in 0..n {
            if self.looped[v] {
                entries[v * n + v] = 1;
            }
        }
        AdjacencyMatrix { n, entries }
    }

    /// Breadth-first reachability over proper edges. Loops play no part.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.neighbors[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == self.order
    }
}

/// Dense 0/1 adjacency matrix of a self-loop graph, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    entries: Vec<u8>,
}

impl AdjacencyMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> usize {
        (0..self.n).map(|i| usize::from(self.get(i, i))).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.entries.chunks(self.n).map(<[u8]>::to_vec).collect()
    }

    /// Row-major `f64` copy, for the eigensolver.
    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&a| f64::from(a)).collect()
    }
}
