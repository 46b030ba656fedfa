//! Closed-walk counts `w_1 … w_4` from degrees and substructure counts,
//! and closed forms for the named families.
//!
//! With `σ = |S|`, `m` edges, first Zagreb index `M_1`, and the census of
//! [`crate::census`]:
//!
//! ```text
//! w1 = σ
//! w2 = 2m + σ
//! w3 = 3 Σ_{v∈S} d(v) + 6 n_△ + σ
//! w4 = σ + 2(M_1 − m) + 6 Σ_{v∈S} d(v) − 2 Σ_{v∈S} n1(v)
//!      + 8 (n_△1 + 2 n_△2 + 3 n_△3 + n_□ + 3 n_⊠)
//! ```
//!
//! The family closed forms work on a [`FamilySpec`] alone and never build
//! the graph, so they can be checked against the general formulas.

use crate::census::{self, SubgraphCensus};
use crate::error::{Error, Result};
use crate::families::{Family, FamilySpec};
use crate::graph::SelfLoopGraph;

/// `w_k^cl(G_S)` for `k = 1..=4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkCounts {
    pub w1: u64,
    pub w2: u64,
    pub w3: u64,
    pub w4: u64,
}

impl WalkCounts {
    pub fn get(&self, k: usize) -> Option<u64> {
        match k {
            1 => Some(self.w1),
            2 => Some(self.w2),
            3 => Some(self.w3),
            4 => Some(self.w4),
            _ => None,
        }
    }
}

fn to_count(x: i128) -> Result<u64> {
    u64::try_from(x).map_err(|_| Error::Overflow)
}

pub fn w1_formula(g: &SelfLoopGraph) -> u64 {
    g.sigma() as u64
}

pub fn w2_formula(g: &SelfLoopGraph) -> u64 {
    2 * g.size() as u64 + g.sigma() as u64
}

pub fn w3_from_census(sigma: u64, c: &SubgraphCensus) -> Result<u64> {
    to_count(3 * i128::from(c.degree_sum_loops) + 6 * i128::from(c.triangles) + i128::from(sigma))
}

pub fn w4_from_census(sigma: u64, size: u64, c: &SubgraphCensus) -> Result<u64> {
    let [t1, t2, t3] = c.tri_loops.map(i128::from);
    let substructures = t1 + 2 * t2 + 3 * t3 + i128::from(c.c4_not_k4) + 3 * i128::from(c.k4_count);
    to_count(
        i128::from(sigma) + 2 * (i128::from(c.zagreb1) - i128::from(size))
            + 6 * i128::from(c.degree_sum_loops)
            - 2 * i128::from(c.n1_sum_loops)
            + 8 * substructures,
    )
}

pub fn w3_formula(g: &SelfLoopGraph) -> Result<u64> {
    w3_from_census(g.sigma() as u64, &census::census(g))
}

pub fn w4_formula(g: &SelfLoopGraph) -> Result<u64> {
    w4_from_census(g.sigma() as u64, g.size() as u64, &census::census(g))
}

/// All four counts from one census pass.
pub fn walk_counts(g: &SelfLoopGraph) -> Result<WalkCounts> {
    let c = census::census(g);
    let sigma = g.sigma() as u64;
    Ok(WalkCounts {
        w1: w1_formula(g),
        w2: w2_formula(g),
        w3: w3_from_census(sigma, &c)?,
        w4: w4_from_census(sigma, g.size() as u64, &c)?,
    })
}

/// Loop statistics of a path or cycle.
///
/// A run is a maximal block of two or more consecutive looped vertices;
/// `sigma_na` counts looped vertices with no looped neighbour. On a cycle
/// there are no endpoints, and a fully looped cycle has no run boundary, so
/// it reports zero runs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PathLoopProfile {
    pub sigma_e: usize,
    pub sigma_ne: usize,
    pub run_count: usize,
    pub sigma_na: usize,
}

impl PathLoopProfile {
    /// Profile of loops at `positions` along a path (or cycle) `0, 1, …, n−1`.
    pub fn from_positions(n: usize, positions: &[usize], cyclic: bool) -> Self {
        let mut looped = vec![false; n];
        for &p in positions {
            looped[p] = true;
        }
        let sigma = looped.iter().filter(|&&l| l).count();
        let sigma_e = if cyclic || n == 0 {
            0
        } else if n == 1 {
            usize::from(looped[0])
        } else {
            usize::from(looped[0]) + usize::from(looped[n - 1])
        };
        if cyclic && sigma == n {
            return Self {
                sigma_e: 0,
                sigma_ne: sigma,
                run_count: 0,
                sigma_na: 0,
            };
        }

        // Walk blocks of consecutive loops; on a cycle, start just after an
        // unlooped vertex so no block wraps around the start.
        let start = if cyclic {
            (0..n).find(|&i| !looped[i]).map_or(0, |i| i + 1)
        } else {
            0
        };
        let (mut run_count, mut sigma_na, mut block) = (0, 0, 0);
        for step in 0..=n {
            let here = step < n && looped[(start + step) % n];
            if here {
                block += 1;
            } else {
                match block {
                    0 => {}
                    1 => sigma_na += 1,
                    _ => run_count += 1,
                }
                block = 0;
            }
        }
        Self {
            sigma_e,
            sigma_ne: sigma - sigma_e,
            run_count,
            sigma_na,
        }
    }

    pub fn sigma(&self) -> usize {
        self.sigma_e + self.sigma_ne
    }

    /// Whether some two looped vertices are adjacent.
    pub fn has_adjacent_loops(&self) -> bool {
        self.sigma() != self.sigma_na
    }
}

/// Orders the vertices of a path or cycle along the graph.
fn path_or_cycle_order(g: &SelfLoopGraph) -> Option<(Vec<usize>, bool)> {
    let n = g.order();
    if !g.is_connected() || g.degrees().iter().any(|&d| d > 2) {
        return None;
    }
    let cyclic = match g.size() {
        m if m + 1 == n => false,
        m if m == n && n >= 3 => true,
        _ => return None,
    };
    let start = if cyclic {
        0
    } else {
        (0..n).find(|&v| g.degree(v) <= 1)?
    };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut at = start;
    while order.len() < n {
        let next = *g.neighbors(at).iter().find(|&&v| v != prev)?;
        prev = at;
        at = next;
        order.push(at);
    }
    Some((order, cyclic))
}

pub fn path_loop_profile(g: &SelfLoopGraph) -> Result<PathLoopProfile> {
    let (order, cyclic) = path_or_cycle_order(g).ok_or(Error::NotAPathOrCycle)?;
    let positions: Vec<usize> = order
        .iter()
        .enumerate()
        .filter(|&(_, &v)| g.is_looped(v))
        .map(|(i, _)| i)
        .collect();
    Ok(PathLoopProfile::from_positions(g.order(), &positions, cyclic))
}

fn parts_sigma(spec: &FamilySpec) -> Result<(i128, i128, i128, i128)> {
    let (a, b) = spec.family.parts().expect("bipartite family");
    let loops = spec.loop_vertices()?;
    let sigma_a = loops.iter().filter(|&&v| v < a).count();
    let sigma_b = loops.len() - sigma_a;
    Ok((a as i128, b as i128, sigma_a as i128, sigma_b as i128))
}

/// `w_3` from the family closed forms.
pub fn closed_form_w3(spec: &FamilySpec) -> Result<u64> {
    spec.family.order()?;
    let sigma = spec.loop_vertices()?.len() as i128;
    let value = match spec.family {
        Family::Complete { n } => {
            let n = n as i128;
            sigma * (3 * n - 2) + n * (n - 1) * (n - 2)
        }
        Family::CompleteBipartite { .. } | Family::Star { .. } => {
            let (a, b, sa, sb) = parts_sigma(spec)?;
            3 * (b * sa + a * sb) + sigma
        }
        Family::Kneser { k } => sigma * (3 * k as i128 + 4),
        Family::Petersen => 10 * sigma,
        Family::Cycle { n: 3 } => 7 * sigma + 6,
        Family::Cycle { .. } => 7 * sigma,
        Family::Wheel { n } if n < 5 => {
            return Err(Error::InvalidSpec(
                "the wheel closed form needs n >= 5 (W_4 is K_4)".into(),
            ))
        }
        Family::Wheel { n } => {
            let n = n as i128;
            if spec.loop_vertices()?.contains(&0) {
                10 * sigma + 9 * (n - 2)
            } else {
                10 * sigma + 6 * (n - 1)
            }
        }
        Family::Path { .. } => {
            return Err(Error::UnsupportedFamily("path has no w3 closed form".into()))
        }
    };
    to_count(value)
}

/// `w_4` from the family closed forms.
pub fn closed_form_w4(spec: &FamilySpec) -> Result<u64> {
    spec.family.order()?;
    let loops = spec.loop_vertices()?;
    let sigma = loops.len() as i128;
    let value = match spec.family {
        Family::Complete { n } => {
            if n < 4 {
                return Err(Error::InvalidSpec("the K_n closed form needs n >= 4".into()));
            }
            if sigma != 0 {
                return Err(Error::InvalidLoopPlacement(
                    "the K_n closed form is loopless".into(),
                ));
            }
            let n = n as i128;
            n * (n - 1) * (2 * n - 3) + n * (n - 1) * (n - 2) * (n - 3)
        }
        Family::CompleteBipartite { .. } => {
            let (a, b, sa, sb) = parts_sigma(spec)?;
            sa * (4 * b + 1) + sb * (4 * a + 1) + 4 * sa * sb + 2 * a * a * b * b
        }
        Family::Star { n } => {
            let (_, _, sa, sb) = parts_sigma(spec)?;
            let n = n as i128;
            if sa == 0 {
                2 * (n - 1) * (n - 1) + 5 * sb
            } else {
                2 * (n - 1) * (n - 1) + 9 * sb + 4 * n - 3
            }
        }
        Family::Path { n } => {
            if n < 2 {
                return Err(Error::InvalidSpec("the path closed form needs n >= 2".into()));
            }
            let p = PathLoopProfile::from_positions(n, &loops, false);
            let n = n as i128;
            let base = 2 * (3 * n - 5);
            if !p.has_adjacent_loops() {
                base + sigma + 4 * (2 * p.sigma_ne as i128 + p.sigma_e as i128)
            } else if p.sigma_e == 0 {
                base + 13 * sigma - 4 * (p.run_count + p.sigma_na) as i128
            } else {
                return Err(Error::InvalidLoopPlacement(
                    "no path closed form for adjacent loops together with looped endpoints".into(),
                ));
            }
        }
        Family::Cycle { n: 3 } => [18, 35, 56, 81][loops.len()],
        Family::Cycle { n } => {
            let p = PathLoopProfile::from_positions(n, &loops, true);
            let base = if n == 4 { 32 } else { 6 * n as i128 };
            base + 13 * sigma - 4 * (p.run_count + p.sigma_na) as i128
        }
        Family::Wheel { .. } | Family::Kneser { .. } | Family::Petersen => {
            return Err(Error::UnsupportedFamily(format!(
                "{} has no w4 closed form",
                spec.family.name()
            )))
        }
    };
    to_count(value)
}
