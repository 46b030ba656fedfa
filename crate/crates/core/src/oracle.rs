//! Ground truth for closed-walk counts.
//!
//! Entry `(i, j)` of `A^k` is the number of `k`-walks from `i` to `j`, so the
//! trace of `A^k` is the number of closed `k`-walks. This module computes
//! that count twice: by naive depth-first enumeration of vertex sequences
//! and by exact integer matrix powers. Neither route shares code with the
//! degree/census formulas in [`crate::walks`].

use crate::error::{Error, Result};
use crate::graph::SelfLoopGraph;

pub const MAX_ENUMERATION_LENGTH: usize = 8;
pub const MAX_ENUMERATION_ORDER: usize = 12;

/// Closed `k`-walks counted per starting vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkEnumeration {
    pub k: usize,
    pub per_vertex: Vec<u64>,
    pub total: u64,
}

fn check_size(g: &SelfLoopGraph, k: usize) -> Result<()> {
    if k > MAX_ENUMERATION_LENGTH || g.order() > MAX_ENUMERATION_ORDER {
        return Err(Error::SizeLimitExceeded(format!(
            "walk enumeration is limited to k <= {MAX_ENUMERATION_LENGTH} and n <= \
             {MAX_ENUMERATION_ORDER} (got k = {k}, n = {})",
            g.order()
        )));
    }
    Ok(())
}

/// Steps available from `v`: every neighbour, plus `v` itself when looped.
fn steps(g: &SelfLoopGraph, v: usize) -> impl Iterator<Item = usize> + '_ {
    let stay = g.is_looped(v).then_some(v);
    g.neighbors(v).iter().copied().chain(stay)
}

fn count_from(g: &SelfLoopGraph, start: usize, at: usize, remaining: usize) -> u64 {
    if remaining == 0 {
        return u64::from(at == start);
    }
    steps(g, at)
        .map(|next| count_from(g, start, next, remaining - 1))
        .sum()
}

/// Depth-first enumeration of every closed walk `v_0 v_1 … v_k` with
/// `v_k = v_0`. A loop-step `v → v` is allowed exactly when `v ∈ S`.
pub fn enumerate_closed_walks(g: &SelfLoopGraph, k: usize) -> Result<WalkEnumeration> {
    check_size(g, k)?;
    let per_vertex: Vec<u64> = (0..g.order()).map(|v| count_from(g, v, v, k)).collect();
    let total = per_vertex.iter().sum();
    Ok(WalkEnumeration {
        k,
        per_vertex,
        total,
    })
}

/// Lists the closed `k`-walks starting at `start` as vertex sequences of
/// length `k + 1`, in lexicographic step order.
pub fn closed_walks_from(g: &SelfLoopGraph, k: usize, start: usize) -> Result<Vec<Vec<usize>>> {
    check_size(g, k)?;
    if start >= g.order() {
        return Err(Error::IndexOutOfRange {
            vertex: start,
            order: g.order(),
        });
    }
    fn walk(g: &SelfLoopGraph, k: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let at = *path.last().unwrap();
        if path.len() == k + 1 {
            if at == path[0] {
                out.push(path.clone());
            }
            return;
        }
        let mut next: Vec<usize> = steps(g, at).collect();
        next.sort_unstable();
        for v in next {
            path.push(v);
            walk(g, k, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    walk(g, k, &mut vec![start], &mut out);
    Ok(out)
}

type IntMatrix = Vec<Vec<u64>>;

fn multiply(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    let n = a.len();
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        for l in 0..n {
            let ail = a[i][l];
            if ail == 0 {
                continue;
            }
            for j in 0..n {
                let term = ail.checked_mul(b[l][j]).ok_or(Error::Overflow)?;
                out[i][j] = out[i][j].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
    }
    Ok(out)
}

/// Exact `A(G_S)^k`, by repeated multiplication with overflow checks.
pub fn matrix_power(g: &SelfLoopGraph, k: usize) -> Result<IntMatrix> {
    let n = g.order();
    let a: IntMatrix = g
        .adjacency()
        .to_rows()
        .into_iter()
        .map(|row| row.into_iter().map(u64::from).collect())
        .collect();
    let mut power: IntMatrix = (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect();
    for _ in 0..k {
        power = multiply(&power, &a)?;
    }
    Ok(power)
}

/// Diagonal of `A^k`: closed `k`-walks at each vertex.
pub fn power_diagonal(g: &SelfLoopGraph, k: usize) -> Result<Vec<u64>> {
    let p = matrix_power(g, k)?;
    Ok((0..g.order()).map(|i| p[i][i]).collect())
}

/// `trace(A(G_S)^k)`, the number of closed `k`-walks.
pub fn trace_power(g: &SelfLoopGraph, k: usize) -> Result<u64> {
    power_diagonal(g, k)?
        .into_iter()
        .try_fold(0u64, |acc, x| acc.checked_add(x))
        .ok_or(Error::Overflow)
}
