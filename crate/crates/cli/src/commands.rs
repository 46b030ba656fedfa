//! Subcommand implementations. Each returns a rendered report plus whether
//! every check it performed held.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context};
use rayon::prelude::*;
use serde_json::{json, Value};
use selfloop_core::spectral::{self, TwistedMoments, DEFAULT_RST};
use selfloop_core::{census, families, format, oracle, walks};
use selfloop_core::{BoundRecord, Family, FamilySpec, LoopPlacement, SelfLoopGraph};

use crate::args::{Cli, Command, FamilyName, GenerateArgs, VerifyArgs};
use crate::report::{self, real};
use crate::sampler::{random_connected_graphs, SamplerParams};

/// Exponents `p <= q` drawn from this grid are checked by `verify`.
pub const CAUCHY_SCHWARZ_GRID: [f64; 6] = [0.0, 0.5, 1.0, 1.5, 2.0, 3.0];

/// Closed-form and direct `𝓜_3`, `𝓜_4` must agree to this absolute tolerance.
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub output: String,
    pub all_hold: bool,
    pub warnings: Vec<String>,
}

/// Runs one parsed command line. Errors are input errors.
pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let (value, all_hold, warnings) = match &cli.command {
        Command::Walks { file, kmax } => cmd_walks(&read_graph(file)?, *kmax)?,
        Command::Moments { file, q } => cmd_moments(&read_graph(file)?, q)?,
        Command::Census { file } => cmd_census(&read_graph(file)?),
        Command::Verify(args) => cmd_verify(args)?,
        Command::Generate(args) => {
            let text = cmd_generate(args)?;
            return Ok(Outcome {
                output: text,
                all_hold: true,
                warnings: Vec::new(),
            });
        }
    };
    Ok(Outcome {
        output: report::render(&value, cli.format),
        all_hold,
        warnings,
    })
}

fn read_graph(path: &Path) -> anyhow::Result<SelfLoopGraph> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    format::parse(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn connectivity_warnings(g: &SelfLoopGraph) -> Vec<String> {
    if g.is_connected() {
        Vec::new()
    } else {
        vec!["graph is disconnected; the inequality results assume a connected graph".into()]
    }
}

type Report = (Value, bool, Vec<String>);

fn counts(values: &[(usize, u64)]) -> Value {
    values
        .iter()
        .map(|&(k, w)| (format!("w{k}"), json!(w)))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

pub fn cmd_walks(g: &SelfLoopGraph, kmax: usize) -> anyhow::Result<Report> {
    let formula = walks::walk_counts(g)?;
    let by_formula: Vec<(usize, u64)> = (1..=kmax.min(4))
        .map(|k| (k, formula.get(k).expect("k <= 4")))
        .collect();
    let by_trace: Vec<(usize, u64)> = (1..=kmax)
        .map(|k| Ok((k, oracle::trace_power(g, k)?)))
        .collect::<selfloop_core::Result<_>>()?;
    let agree = by_formula.iter().all(|f| by_trace.contains(f));
    let warnings = connectivity_warnings(g);
    let value = json!({
        "graph": report::graph_summary(g),
        "walks": {
            "kmax": kmax,
            "formula": counts(&by_formula),
            "trace": counts(&by_trace),
            "agree": agree,
        },
        "warnings": warnings,
    });
    Ok((value, agree, warnings))
}

pub fn cmd_moments(g: &SelfLoopGraph, qs: &[f64]) -> anyhow::Result<Report> {
    let r = spectral::moment_report(g, 4, qs)?;
    let tm = TwistedMoments::new(g)?;
    let (m3, m4) = (tm.get(3.0)?, tm.get(4.0)?);
    let closed_agree = (r.m3_closed - m3).abs() <= CLOSED_FORM_TOLERANCE
        && (r.m4_closed - m4).abs() <= CLOSED_FORM_TOLERANCE;
    let all_hold = closed_agree && r.bounds.iter().all(|b| b.holds);
    let warnings = connectivity_warnings(g);
    let value = json!({
        "graph": report::graph_summary(g),
        "moments": {
            "spectrum": {
                "eigenvalues": r.spectrum.eigenvalues.iter().map(|&x| real(x)).collect::<Vec<_>>(),
                "residual": real(r.spectrum.residual),
                "sweeps": r.spectrum.sweeps_used,
            },
            "spectral": r.spectral_moments.iter().enumerate()
                .map(|(k, &v)| (format!("M{k}"), json!(v)))
                .collect::<serde_json::Map<_, _>>(),
            "twisted": r.twisted.iter()
                .map(|&(q, v)| json!({"q": real(q), "value": real(v)}))
                .collect::<Vec<_>>(),
            "energy": real(r.energy),
            "closed_form": {
                "m3_closed": real(r.m3_closed),
                "m3_direct": real(m3),
                "m4_closed": real(r.m4_closed),
                "m4_direct": real(m4),
                "agree": closed_agree,
            },
        },
        "bounds": r.bounds.iter().map(report::bound).collect::<Vec<_>>(),
        "warnings": warnings,
    });
    Ok((value, all_hold, warnings))
}

pub fn cmd_census(g: &SelfLoopGraph) -> Report {
    let c = census::census(g);
    let value = json!({
        "graph": report::graph_summary(g),
        "census": {
            "zagreb1": c.zagreb1,
            "degree_sum_loops": c.degree_sum_loops,
            "n1": c.n1,
            "n2": c.n2,
            "n1_sum_loops": c.n1_sum_loops,
            "triangles": c.triangles,
            "tri_loops": c.tri_loops,
            "c4_not_k4": c.c4_not_k4,
            "k4_count": c.k4_count,
            "four_cycles_total": c.four_cycles_total(),
        },
    });
    (value, true, Vec::new())
}

/// What `verify` checks on each graph.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    pub chain_depth: usize,
    pub positivity_depth: usize,
    pub rst: Vec<(f64, f64, f64)>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            chain_depth: 8,
            positivity_depth: 10,
            rst: DEFAULT_RST.to_vec(),
        }
    }
}

/// Every inequality record for one graph. The Cauchy–Schwarz grid and the
/// McClelland bound need no hypotheses; the rest are skipped with a note
/// when the graph is disconnected or edgeless.
pub fn verification_records(
    g: &SelfLoopGraph,
    opts: &VerifyOptions,
) -> selfloop_core::Result<(Vec<BoundRecord>, Option<String>)> {
    let tm = TwistedMoments::new(g)?;
    let mut records = Vec::new();
    for (i, &p) in CAUCHY_SCHWARZ_GRID.iter().enumerate() {
        for &q in &CAUCHY_SCHWARZ_GRID[i..] {
            records.push(spectral::verify_cauchy_schwarz(&tm, p, q)?);
        }
    }
    records.push(spectral::mcclelland_bound(&tm));
    let depth = opts.positivity_depth.max(opts.chain_depth);
    match spectral::verify_positivity(&tm, depth) {
        Ok(positivity) => records.extend(positivity),
        Err(e @ (selfloop_core::Error::DisconnectedInput | selfloop_core::Error::Edgeless)) => {
            return Ok((records, Some(format!("{e:?}: {e}"))));
        }
        Err(e) => return Err(e),
    }
    records.extend(
        spectral::verify_ratio_chain(&tm, opts.chain_depth)?
            .into_iter()
            .filter(|r| r.name.starts_with("ratio_chain")),
    );
    records.extend(spectral::energy_lower_bounds(&tm, &opts.rst)?);
    Ok((records, None))
}

fn min_slack(records: &[BoundRecord]) -> f64 {
    records.iter().map(|r| r.slack).fold(f64::INFINITY, f64::min)
}

fn validate_rst(rst: &[(f64, f64, f64)]) -> anyhow::Result<()> {
    for &(r, s, t) in rst {
        let ok = [r, s, t].iter().all(|x| x.is_finite() && *x >= 0.0)
            && (4.0 * r - (s + t + 2.0)).abs() <= 1e-12 * (1.0 + r.abs());
        if !ok {
            bail!(selfloop_core::Error::ConstraintViolation { r, s, t });
        }
    }
    Ok(())
}

pub fn cmd_verify(args: &VerifyArgs) -> anyhow::Result<Report> {
    let opts = VerifyOptions {
        chain_depth: args.chain_depth,
        positivity_depth: args.positivity_depth,
        rst: if args.rst.is_empty() {
            DEFAULT_RST.to_vec()
        } else {
            args.rst.clone()
        },
    };
    validate_rst(&opts.rst)?;
    match &args.file {
        Some(path) => verify_file(&read_graph(path)?, &opts),
        None => {
            let params = SamplerParams {
                count: args.random.unwrap_or(SamplerParams::default().count),
                n_min: args.n_min,
                n_max: args.n_max,
                edge_prob: args.edge_prob,
                loop_prob: args.loop_prob,
                seed: args.seed,
            };
            verify_random(&params, &opts)
        }
    }
}

fn options_json(opts: &VerifyOptions) -> Value {
    json!({
        "chain_depth": opts.chain_depth,
        "positivity_depth": opts.positivity_depth,
        "rst": opts.rst.iter().map(|&(r, s, t)| vec![real(r), real(s), real(t)]).collect::<Vec<_>>(),
    })
}

pub fn verify_file(g: &SelfLoopGraph, opts: &VerifyOptions) -> anyhow::Result<Report> {
    let (records, note) = verification_records(g, opts)?;
    let all_hold = records.iter().all(|r| r.holds);
    let warnings: Vec<String> = note.iter().cloned().collect();
    let value = json!({
        "graph": report::graph_summary(g),
        "options": options_json(opts),
        "bounds": records.iter().map(report::bound).collect::<Vec<_>>(),
        "summary": {
            "records": records.len(),
            "violations": records.iter().filter(|r| !r.holds).count(),
            "min_slack": real(min_slack(&records)),
            "all_hold": all_hold,
        },
        "notes": warnings,
    });
    Ok((value, all_hold, warnings))
}

pub fn verify_random(params: &SamplerParams, opts: &VerifyOptions) -> anyhow::Result<Report> {
    if params.n_min == 0 || params.n_min > params.n_max {
        bail!("need 1 <= n-min <= n-max (got {}..{})", params.n_min, params.n_max);
    }
    for (name, p) in [("edge-prob", params.edge_prob), ("loop-prob", params.loop_prob)] {
        if !(0.0..=1.0).contains(&p) {
            bail!("{name} must lie in [0, 1] (got {p})");
        }
    }
    let graphs = random_connected_graphs(params);
    let results = graphs
        .par_iter()
        .map(|g| verification_records(g, opts))
        .collect::<selfloop_core::Result<Vec<_>>>()?;

    let mut entries = Vec::with_capacity(graphs.len());
    let mut warnings = Vec::new();
    let (mut total, mut violations, mut lowest) = (0usize, 0usize, f64::INFINITY);
    for (index, (g, (records, note))) in graphs.iter().zip(&results).enumerate() {
        let bad: Vec<Value> = records.iter().filter(|r| !r.holds).map(report::bound).collect();
        let slack = min_slack(records);
        total += records.len();
        violations += bad.len();
        lowest = lowest.min(slack);
        let mut entry = json!({
            "index": index,
            "graph": report::graph_summary(g),
            "records": records.len(),
            "min_slack": real(slack),
            "violations": bad,
        });
        if let Some(note) = note {
            entry["note"] = json!(note);
            warnings.push(format!("graph {index}: {note}"));
        }
        entries.push(entry);
    }
    let all_hold = violations == 0;
    let value = json!({
        "sampler": {
            "count": params.count,
            "n_min": params.n_min,
            "n_max": params.n_max,
            "edge_prob": real(params.edge_prob),
            "loop_prob": real(params.loop_prob),
            "seed": params.seed,
        },
        "options": options_json(opts),
        "graphs": entries,
        "summary": {
            "graphs": graphs.len(),
            "records": total,
            "violations": violations,
            "min_slack": real(lowest),
            "all_hold": all_hold,
        },
    });
    Ok((value, all_hold, warnings))
}

fn require(value: Option<usize>, flag: &str, family: &str) -> anyhow::Result<usize> {
    value.with_context(|| format!("--family {family} needs --{flag}"))
}

pub fn family_spec(args: &GenerateArgs) -> anyhow::Result<FamilySpec> {
    let name = match args.family {
        FamilyName::Complete => "complete",
        FamilyName::CompleteBipartite => "complete-bipartite",
        FamilyName::Cycle => "cycle",
        FamilyName::Path => "path",
        FamilyName::Wheel => "wheel",
        FamilyName::Star => "star",
        FamilyName::Kneser => "kneser",
        FamilyName::Petersen => "petersen",
    };
    let family = match args.family {
        FamilyName::Complete => Family::Complete { n: require(args.n, "n", name)? },
        FamilyName::CompleteBipartite => Family::CompleteBipartite {
            a: require(args.a, "a", name)?,
            b: require(args.b, "b", name)?,
        },
        FamilyName::Cycle => Family::Cycle { n: require(args.n, "n", name)? },
        FamilyName::Path => Family::Path { n: require(args.n, "n", name)? },
        FamilyName::Wheel => Family::Wheel { n: require(args.n, "n", name)? },
        FamilyName::Star => Family::Star { n: require(args.n, "n", name)? },
        FamilyName::Kneser => Family::Kneser { k: require(args.k, "k", name)? },
        FamilyName::Petersen => Family::Petersen,
    };
    let parts = args.sigma_a.is_some() || args.sigma_b.is_some();
    let wheel = args.center_loop || args.rim_loops.is_some();
    let loops = match (parts, wheel) {
        (true, true) => bail!("--sigma-a/--sigma-b and --center-loop/--rim-loops are exclusive"),
        (true, false) => LoopPlacement::Parts {
            sigma_a: args.sigma_a.unwrap_or(0),
            sigma_b: args.sigma_b.unwrap_or(0),
        },
        (false, true) => LoopPlacement::Wheel {
            center: args.center_loop,
            rim: args.rim_loops.unwrap_or(0),
        },
        (false, false) => LoopPlacement::Explicit(args.loops.clone()),
    };
    Ok(FamilySpec::with_placement(family, loops))
}

/// Writes the canonical graph file to `--output`, or returns it for stdout.
pub fn cmd_generate(args: &GenerateArgs) -> anyhow::Result<String> {
    let g = families::generate(&family_spec(args)?)?;
    let text = format::serialize(&g);
    match &args.output {
        Some(path) => {
            fs::write(path, &text).with_context(|| format!("cannot write {}", path.display()))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}
