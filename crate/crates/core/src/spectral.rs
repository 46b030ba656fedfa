//! Eigenvalues, spectral and twisted moments, energy, and the moment and
//! energy inequalities.
//!
//! The twisted moment of order `q` is `𝓜_q = Σ_i |λ_i − σ/n|^q` with
//! `0^0 = 1`, so `𝓜_0 = n`, `𝓜_1` is the energy `𝓔(G_S)` and
//! `𝓜_2 = 2m + σ − σ²/n`. Spectral moments `M_k = trace(A^k)` are exact
//! integers from [`crate::oracle::trace_power`]; twisted moments use the
//! floating-point spectrum.

use crate::error::{Error, Result};
use crate::graph::SelfLoopGraph;
use crate::{oracle, walks};

pub const MAX_SWEEPS: usize = 100;
/// Tolerance on a bound's slack for it to count as holding.
pub const BOUND_TOLERANCE: f64 = 1e-9;
/// Threshold for the strict positivity of `𝓜_i`.
pub const POSITIVITY_FLOOR: f64 = 1e-12;
/// Eigenvalues within this distance below `σ/n` still count towards `j`
/// in the closed form for `𝓜_3`.
pub const SPLIT_TOLERANCE: f64 = 1e-9;

/// Eigenvalues of `A(G_S)`, sorted non-increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// Largest off-diagonal magnitude left when the iteration stopped.
    pub residual: f64,
    pub sweeps_used: usize,
}

impl Spectrum {
    pub fn power_sum(&self, k: i32) -> f64 {
        self.eigenvalues.iter().map(|l| l.powi(k)).sum()
    }
}

/// Cyclic Jacobi iteration on a dense symmetric row-major `n × n` matrix.
///
/// Stops once every off-diagonal entry is below
/// `1e-12 · max(1, ‖A‖_F)`.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Spectrum> {
    assert_eq!(a.len(), n * n, "matrix must be n × n");
    let frobenius = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = 1e-12 * frobenius.max(1.0);
    let max_off = |a: &[f64]| {
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j].abs())
            .fold(0.0, f64::max)
    };

    for sweep in 0..=MAX_SWEEPS {
        let residual = max_off(&a);
        if residual < threshold {
            let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
            eigenvalues.sort_by(|x, y| y.total_cmp(x));
            return Ok(Spectrum {
                eigenvalues,
                residual,
                sweeps_used: sweep,
            });
        }
        if sweep == MAX_SWEEPS {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let (arp, arq) = (a[r * n + p], a[r * n + q]);
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    Err(Error::NoConvergence { sweeps: MAX_SWEEPS })
}

pub fn eigenvalues(g: &SelfLoopGraph) -> Result<Spectrum> {
    symmetric_eigenvalues(g.adjacency().to_f64(), g.order())
}

/// `M_k = Σ λ_i^k = trace(A^k)`, exactly.
pub fn spectral_moment(g: &SelfLoopGraph, k: usize) -> Result<u64> {
    oracle::trace_power(g, k)
}

fn power(x: f64, q: f64) -> f64 {
    if q.fract() == 0.0 && q <= f64::from(i32::MAX) {
        x.powi(q as i32)
    } else {
        x.powf(q)
    }
}

/// Twisted moments of one graph, sharing a single eigen-decomposition.
#[derive(Debug, Clone)]
pub struct TwistedMoments {
    spectrum: Spectrum,
    centre: f64,
    deviations: Vec<f64>,
    order: usize,
    size: usize,
    sigma: usize,
    connected: bool,
}

impl TwistedMoments {
    /// Moments twisted by `M_1 / n = σ / n`.
    pub fn new(g: &SelfLoopGraph) -> Result<Self> {
        Ok(Self::from_spectrum(g, eigenvalues(g)?, g.sigma() as f64 / g.order() as f64))
    }

    /// Moments twisted by `M_k / n`.
    pub fn with_twist(g: &SelfLoopGraph, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidSpec("twist order k must be >= 1".into()));
        }
        let centre = spectral_moment(g, k)? as f64 / g.order() as f64;
        Ok(Self::from_spectrum(g, eigenvalues(g)?, centre))
    }

    fn from_spectrum(g: &SelfLoopGraph, spectrum: Spectrum, centre: f64) -> Self {
        let deviations = spectrum.eigenvalues.iter().map(|l| (l - centre).abs()).collect();
        Self {
            spectrum,
            centre,
            deviations,
            order: g.order(),
            size: g.size(),
            sigma: g.sigma(),
            connected: g.is_connected(),
        }
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn centre(&self) -> f64 {
        self.centre
    }

    /// `𝓜_q` for real `q >= 0`.
    pub fn get(&self, q: f64) -> Result<f64> {
        if !q.is_finite() || q < 0.0 {
            return Err(Error::NegativeExponentUnsupported(q));
        }
        if q == 0.0 {
            return Ok(self.order as f64);
        }
        Ok(self.deviations.iter().map(|&x| power(x, q)).sum())
    }

    pub fn energy(&self) -> f64 {
        self.deviations.iter().sum()
    }

    fn require_hypotheses(&self) -> Result<()> {
        if !self.connected {
            Err(Error::DisconnectedInput)
        } else if self.size == 0 {
            Err(Error::Edgeless)
        } else {
            Ok(())
        }
    }
}

/// `Σ_i |λ_i − M_k/n|^q`.
pub fn twisted_moment(g: &SelfLoopGraph, q: f64, k: usize) -> Result<f64> {
    TwistedMoments::with_twist(g, k)?.get(q)
}

/// `𝓔(G_S) = Σ_i |λ_i − σ/n|`.
pub fn energy(g: &SelfLoopGraph) -> Result<f64> {
    Ok(TwistedMoments::new(g)?.energy())
}

/// `𝓜_3` from the split of the spectrum at `σ/n` and the walk counts.
pub fn m3_closed_form(g: &SelfLoopGraph) -> Result<f64> {
    let counts = walks::walk_counts(g)?;
    let spectrum = eigenvalues(g)?;
    Ok(m3_from_parts(
        &spectrum.eigenvalues,
        g.order(),
        g.sigma(),
        counts.w2,
        counts.w3,
        SPLIT_TOLERANCE,
    ))
}

/// Closed form for `𝓜_3`, with `j` the number of eigenvalues at least
/// `σ/n − split_tol`.
pub fn m3_from_parts(
    eigenvalues: &[f64],
    n: usize,
    sigma: usize,
    w2: u64,
    w3: u64,
    split_tol: f64,
) -> f64 {
    let (n, s) = (n as f64, sigma as f64);
    let c = s / n;
    let upper = eigenvalues.iter().filter(|&&l| l >= c - split_tol);
    let (mut p1, mut p2, mut p3) = (0.0, 0.0, 0.0);
    for &l in upper {
        p1 += l;
        p2 += l * l;
        p3 += l * l * l;
    }
    let energy: f64 = eigenvalues.iter().map(|l| (l - c).abs()).sum();
    2.0 * p3 - 6.0 * c * p2 + 4.0 * c * c * p1 - w3 as f64 + 3.0 * c * w2 as f64
        - 2.0 * s * s * s / (n * n)
        + c * c * energy
}

/// `𝓜_4 = w4 − (4σ/n) w3 + (6σ²/n²) w2 − 3σ⁴/n³`.
pub fn m4_closed_form(g: &SelfLoopGraph) -> Result<f64> {
    let counts = walks::walk_counts(g)?;
    let (n, s) = (g.order() as f64, g.sigma() as f64);
    Ok(counts.w4 as f64 - 4.0 * s / n * counts.w3 as f64 + 6.0 * s * s / (n * n) * counts.w2 as f64
        - 3.0 * s.powi(4) / n.powi(3))
}

/// Outcome of evaluating one inequality. `slack >= 0` means it holds.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundRecord {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
}

impl BoundRecord {
    /// Records `lhs <= rhs`.
    pub fn at_most(name: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Self::from_slack(name, lhs, rhs, rhs - lhs, BOUND_TOLERANCE)
    }

    /// Records `lhs >= rhs`.
    pub fn at_least(name: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Self::from_slack(name, lhs, rhs, lhs - rhs, BOUND_TOLERANCE)
    }

    fn from_slack(name: impl Into<String>, lhs: f64, rhs: f64, slack: f64, tol: f64) -> Self {
        Self {
            name: name.into(),
            lhs,
            rhs,
            slack,
            holds: slack >= -tol,
        }
    }
}

/// `𝓜_q² <= 𝓜_{2q−2p} · 𝓜_{2p}` for `0 <= p <= q`.
pub fn verify_cauchy_schwarz(tm: &TwistedMoments, p: f64, q: f64) -> Result<BoundRecord> {
    if !(p >= 0.0 && p <= q && q.is_finite()) {
        return Err(Error::InvalidExponents { p, q });
    }
    let lhs = tm.get(q)?.powi(2);
    let rhs = tm.get(2.0 * q - 2.0 * p)? * tm.get(2.0 * p)?;
    Ok(BoundRecord::at_most(
        format!("cauchy_schwarz(p={p},q={q})"),
        lhs,
        rhs,
    ))
}

/// `𝓔 <= sqrt(n (2m + σ − σ²/n))`, evaluated from `n`, `m`, `σ`.
pub fn mcclelland_bound(tm: &TwistedMoments) -> BoundRecord {
    let (n, m, s) = (tm.order as f64, tm.size as f64, tm.sigma as f64);
    BoundRecord::at_most("mcclelland", tm.energy(), (n * (2.0 * m + s - s * s / n)).sqrt())
}

/// `𝓜_i > 1e-12` for `i = 0..=i_max`.
pub fn verify_positivity(tm: &TwistedMoments, i_max: usize) -> Result<Vec<BoundRecord>> {
    tm.require_hypotheses()?;
    (0..=i_max)
        .map(|i| {
            let value = tm.get(i as f64)?;
            let slack = value - POSITIVITY_FLOOR;
            Ok(BoundRecord {
                name: format!("positivity(M_{i})"),
                lhs: value,
                rhs: POSITIVITY_FLOOR,
                slack,
                holds: slack > 0.0,
            })
        })
        .collect()
}

/// `𝓜_1/𝓜_0 <= 𝓜_2/𝓜_1 <= … <= 𝓜_{q_max}/𝓜_{q_max−1}`, with positivity
/// of every `𝓜_i` involved. Ratios are compared with a relative tolerance.
pub fn verify_ratio_chain(tm: &TwistedMoments, q_max: usize) -> Result<Vec<BoundRecord>> {
    let mut records = verify_positivity(tm, q_max)?;
    let moments: Vec<f64> = (0..=q_max).map(|i| tm.get(i as f64)).collect::<Result<_>>()?;
    for i in 1..q_max {
        let lhs = moments[i] / moments[i - 1];
        let rhs = moments[i + 1] / moments[i];
        let tol = BOUND_TOLERANCE * rhs.abs().max(1.0);
        records.push(BoundRecord::from_slack(
            format!("ratio_chain(M_{i}/M_{}<=M_{}/M_{i})", i - 1, i + 1),
            lhs,
            rhs,
            rhs - lhs,
            tol,
        ));
    }
    Ok(records)
}

fn check_rst(r: f64, s: f64, t: f64) -> Result<()> {
    let ok = [r, s, t].iter().all(|x| x.is_finite() && *x >= 0.0)
        && (4.0 * r - (s + t + 2.0)).abs() <= 1e-12 * (1.0 + r.abs());
    if ok {
        Ok(())
    } else {
        Err(Error::ConstraintViolation { r, s, t })
    }
}

/// Energy and higher-moment lower bounds:
///
/// * `𝓔 >= sqrt(𝓜_2³ / 𝓜_4)`;
/// * `𝓔 >= 4m/n`;
/// * `𝓜_3 >= 64 m³ / n⁵` and `𝓜_4 >= 256 m⁴ / n⁷`;
/// * `𝓔 >= 𝓜_r² / sqrt(𝓜_s 𝓜_t)` for each `(r, s, t)` with `4r = s + t + 2`.
pub fn energy_lower_bounds(
    tm: &TwistedMoments,
    rst: &[(f64, f64, f64)],
) -> Result<Vec<BoundRecord>> {
    tm.require_hypotheses()?;
    for &(r, s, t) in rst {
        check_rst(r, s, t)?;
    }
    let (n, m) = (tm.order as f64, tm.size as f64);
    let energy = tm.energy();
    let (m2, m3, m4) = (tm.get(2.0)?, tm.get(3.0)?, tm.get(4.0)?);
    let mut records = vec![
        BoundRecord::at_least("energy_moment_ratio", energy, (m2.powi(3) / m4).sqrt()),
        BoundRecord::at_least("energy_4m_over_n", energy, 4.0 * m / n),
        BoundRecord::at_least("m3_size_order", m3, 64.0 * m.powi(3) / n.powi(5)),
        BoundRecord::at_least("m4_size_order", m4, 256.0 * m.powi(4) / n.powi(7)),
    ];
    for &(r, s, t) in rst {
        let rhs = tm.get(r)?.powi(2) / (tm.get(s)? * tm.get(t)?).sqrt();
        records.push(BoundRecord::at_least(
            format!("energy_rst(r={r},s={s},t={t})"),
            energy,
            rhs,
        ));
    }
    Ok(records)
}

/// The `(r, s, t)` triples evaluated by default.
pub const DEFAULT_RST: [(f64, f64, f64); 3] = [(1.0, 0.0, 2.0), (1.5, 2.0, 2.0), (2.0, 3.0, 3.0)];

/// Everything known about the moments of one graph.
#[derive(Debug, Clone)]
pub struct MomentReport {
    pub spectrum: Spectrum,
    /// `M_0 … M_kmax`, exact.
    pub spectral_moments: Vec<u64>,
    /// `(q, 𝓜_q)` in request order.
    pub twisted: Vec<(f64, f64)>,
    pub energy: f64,
    pub m3_closed: f64,
    pub m4_closed: f64,
    pub bounds: Vec<BoundRecord>,
}

/// Computes the moment report. Bounds that need a connected graph with at
/// least one edge are skipped when those hypotheses fail.
pub fn moment_report(g: &SelfLoopGraph, kmax: usize, qs: &[f64]) -> Result<MomentReport> {
    let tm = TwistedMoments::new(g)?;
    let spectral_moments = (0..=kmax)
        .map(|k| spectral_moment(g, k))
        .collect::<Result<_>>()?;
    let twisted = qs
        .iter()
        .map(|&q| Ok((q, tm.get(q)?)))
        .collect::<Result<_>>()?;
    let mut bounds = vec![mcclelland_bound(&tm)];
    if tm.require_hypotheses().is_ok() {
        bounds.extend(verify_ratio_chain(&tm, 4)?);
        bounds.extend(energy_lower_bounds(&tm, &DEFAULT_RST)?);
    }
    Ok(MomentReport {
        energy: tm.energy(),
        m3_closed: m3_closed_form(g)?,
        m4_closed: m4_closed_form(g)?,
        spectrum: tm.spectrum,
        spectral_moments,
        twisted,
        bounds,
    })
}
