//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use anyhow::{ensure, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use selfloop_cli::commands::{verification_records, VerifyOptions};
use selfloop_cli::sampler::{random_connected_graphs, SamplerParams};
use selfloop_core::families::{enumerate_all_graphs, generate};
use selfloop_core::spectral::{self, TwistedMoments};
use selfloop_core::walks::{self, closed_form_w3, closed_form_w4};
use selfloop_core::{format, oracle, Error, Family, FamilySpec, LoopPlacement, SelfLoopGraph};

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|v| mask >> v & 1 == 1).collect())
}

fn graph(spec: &FamilySpec) -> SelfLoopGraph {
    generate(spec).unwrap()
}

/// Every labeled graph with every loop subset on 1..=5 vertices.
fn exhaustive(connected_only: bool) -> impl Iterator<Item = SelfLoopGraph> {
    (1..=5).flat_map(move |n| enumerate_all_graphs(n, connected_only).unwrap())
}

/// Uniform random graphs on 1..=10 vertices, connected or not.
fn random_graphs(count: usize, seed: u64) -> Vec<SelfLoopGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let loops: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
            SelfLoopGraph::build(n, &edges, &loops).unwrap()
        })
        .collect()
}

fn oracle_equivalence() -> Result<String> {
    let mut cases = 0;
    for g in exhaustive(false) {
        let formula = walks::walk_counts(&g)?;
        for k in 1..=4 {
            let trace = oracle::trace_power(&g, k)?;
            let walked = oracle::enumerate_closed_walks(&g, k)?.total;
            ensure!(
                formula.get(k) == Some(trace) && trace == walked,
                "k = {k}: formula {:?}, trace {trace}, enumeration {walked} on {g:?}",
                formula.get(k)
            );
        }
        cases += 1;
    }
    ensure!(cases == 2 + 8 + 64 + 1024 + 32768, "unexpected case count {cases}");
    Ok(format!("{cases} graphs, k = 1..4"))
}

fn all_three(g: &SelfLoopGraph, k: usize) -> Result<u64> {
    let formula = walks::walk_counts(g)?.get(k).unwrap();
    let trace = oracle::trace_power(g, k)?;
    let walked = oracle::enumerate_closed_walks(g, k)?.total;
    ensure!(formula == trace && trace == walked, "formula {formula}, trace {trace}, walks {walked}");
    Ok(formula)
}

fn worked_example_checkpoints() -> Result<String> {
    let mut checked = 0;
    let mut expect = |label: &str, got: u64, want: u64| -> Result<()> {
        ensure!(got == want, "{label}: got {got}, expected {want}");
        checked += 1;
        Ok(())
    };

    let k4 = FamilySpec::with_loops(Family::Complete { n: 4 }, vec![0, 1, 3]);
    expect("w4 of K4 with three loops", all_three(&graph(&k4), 4)?, 207)?;

    let petersen = graph(&FamilySpec::with_loops(Family::Petersen, vec![0]));
    expect("w3 of Petersen with one loop", walks::w3_formula(&petersen)?, 10)?;
    expect("w3 of Petersen by trace", oracle::trace_power(&petersen, 3)?, 10)?;
    let listed: usize = (0..petersen.order())
        .map(|v| oracle::closed_walks_from(&petersen, 3, v).map(|w| w.len()))
        .sum::<selfloop_core::Result<_>>()?;
    expect("Petersen 3-walks listed", listed as u64, 10)?;

    let q1 = FamilySpec::with_loops(Family::Path { n: 8 }, vec![1, 2, 4, 6]);
    let q2 = FamilySpec::with_loops(Family::Path { n: 8 }, vec![1, 2, 4, 5, 6]);
    for (label, spec, want) in [("Q1", q1, 78), ("Q2", q2, 95)] {
        expect(label, closed_form_w4(&spec)?, want)?;
        expect(label, oracle::trace_power(&graph(&spec), 4)?, want)?;
    }

    for (sigma, want) in [(1, 35), (2, 56), (3, 81)] {
        let spec = FamilySpec::with_loops(Family::Cycle { n: 3 }, (0..sigma).collect());
        expect("C3", closed_form_w4(&spec)?, want)?;
        expect("C3", all_three(&graph(&spec), 4)?, want)?;
    }

    let k23 = FamilySpec::loopless(Family::CompleteBipartite { a: 2, b: 3 });
    expect("K23", closed_form_w4(&k23)?, 72)?;
    expect("K23", all_three(&graph(&k23), 4)?, 72)?;

    for n in [4usize, 6, 8] {
        let spec = FamilySpec::with_loops(
            Family::CompleteBipartite { a: n / 2, b: n / 2 },
            (0..n).collect(),
        );
        let want = (3 * n * n / 2 + n) as u64;
        expect("looped balanced K_ab", closed_form_w3(&spec)?, want)?;
        expect("looped balanced K_ab", walks::w3_formula(&graph(&spec))?, want)?;
        expect("looped balanced K_ab", oracle::trace_power(&graph(&spec), 3)?, want)?;
    }

    let k5 = FamilySpec::loopless(Family::Complete { n: 5 });
    expect("K5", closed_form_w4(&k5)?, 260)?;
    expect("K5", all_three(&graph(&k5), 4)?, 260)?;

    for n in 3..=7 {
        for sigma in 0..=n {
            let spec = FamilySpec::with_loops(Family::Complete { n }, (0..sigma).collect());
            let want = (sigma * (3 * n - 2) + n * (n - 1) * (n - 2)) as u64;
            expect("K_n", closed_form_w3(&spec)?, want)?;
            expect("K_n", oracle::trace_power(&graph(&spec), 3)?, want)?;
        }
    }
    Ok(format!("{checked} exact values"))
}

fn spectral_identities() -> Result<String> {
    let mut count = 0;
    let mut worst: f64 = 0.0;
    for g in exhaustive(false).chain(random_graphs(1000, 3)) {
        let s = spectral::eigenvalues(&g)?;
        let d1 = (s.power_sum(1) - g.sigma() as f64).abs();
        let d2 = (s.power_sum(2) - (2 * g.size() + g.sigma()) as f64).abs();
        ensure!(d1 < 1e-8 && d2 < 1e-8, "deviation {d1:e}, {d2:e} on {g:?}");
        worst = worst.max(d1).max(d2);
        count += 1;
    }
    Ok(format!("{count} graphs, max deviation {worst:.1e}"))
}

fn closed_form_moments() -> Result<String> {
    let mut count = 0;
    let mut worst: f64 = 0.0;
    for g in exhaustive(true) {
        let tm = TwistedMoments::new(&g)?;
        let d3 = (spectral::m3_closed_form(&g)? - tm.get(3.0)?).abs();
        let d4 = (spectral::m4_closed_form(&g)? - tm.get(4.0)?).abs();
        ensure!(d3 < 1e-7 && d4 < 1e-7, "deviation {d3:e}, {d4:e} on {g:?}");
        worst = worst.max(d3).max(d4);
        count += 1;
    }
    Ok(format!("{count} connected graphs, max deviation {worst:.1e}"))
}

/// Cauchy–Schwarz grid (21) + McClelland (1) + positivity i <= 10 (11) +
/// ratio chain to depth 8 (7) + size/order bounds (4) + rst triples (3).
const RECORDS_PER_GRAPH: usize = 47;

fn inequality_suite() -> Result<String> {
    let opts = VerifyOptions::default();
    let sampled = random_connected_graphs(&SamplerParams::default());
    let mut graphs = 0;
    let mut records = 0;
    let mut lowest = f64::INFINITY;
    for g in exhaustive(true).filter(|g| g.size() > 0).chain(sampled) {
        ensure!(g.is_connected() && g.size() > 0);
        let (recs, note) = verification_records(&g, &opts)?;
        ensure!(note.is_none(), "{note:?}");
        ensure!(recs.len() == RECORDS_PER_GRAPH, "{} records on {g:?}", recs.len());
        for r in &recs {
            ensure!(r.holds && r.slack >= -1e-9, "{} fails: {r:?} on {g:?}", r.name);
            if r.name.starts_with("positivity") {
                ensure!(r.lhs > 1e-12);
            }
            lowest = lowest.min(r.slack);
        }
        graphs += 1;
        records += recs.len();
    }
    Ok(format!("{graphs} graphs, {records} records, min slack {lowest:.1e}"))
}

fn equality_cases() -> Result<String> {
    let mut checked = 0;
    for a in 1..=4 {
        for b in 1..=4 {
            for looped in [false, true] {
                let placement = if looped {
                    LoopPlacement::Parts { sigma_a: a, sigma_b: b }
                } else {
                    LoopPlacement::Explicit(Vec::new())
                };
                let g = graph(&FamilySpec::with_placement(
                    Family::CompleteBipartite { a, b },
                    placement,
                ));
                let tm = TwistedMoments::new(&g)?;
                let e = tm.energy();
                let gap = (e * e - tm.get(2.0)?.powi(3) / tm.get(4.0)?).abs();
                ensure!(gap < 1e-7, "K_{a},{b} looped={looped}: gap {gap:e}");
                checked += 1;
            }
        }
    }
    let k22 = graph(&FamilySpec::with_placement(
        Family::CompleteBipartite { a: 2, b: 2 },
        LoopPlacement::Parts { sigma_a: 2, sigma_b: 2 },
    ));
    let tm = TwistedMoments::new(&k22)?;
    for (label, got, want) in [
        ("energy", tm.energy(), 4.0),
        ("M2", tm.get(2.0)?, 8.0),
        ("M4", tm.get(4.0)?, 32.0),
    ] {
        ensure!((got - want).abs() < 1e-9, "looped K22 {label}: {got}");
    }
    Ok(format!("{checked} complete bipartite graphs, looped K22 = (4, 8, 32)"))
}

fn closed_form_sweeps() -> Result<String> {
    let mut w3_checks = 0;
    let mut w4_checks = 0;
    let mut check = |spec: &FamilySpec, w3: bool, w4: bool| -> Result<()> {
        let g = graph(spec);
        if w3 {
            ensure!(closed_form_w3(spec)? == walks::w3_formula(&g)?, "w3 {spec:?}");
            w3_checks += 1;
        }
        if w4 {
            ensure!(closed_form_w4(spec)? == walks::w4_formula(&g)?, "w4 {spec:?}");
            w4_checks += 1;
        }
        Ok(())
    };
    for n in 1..=8 {
        for loops in subsets(n) {
            check(&FamilySpec::with_loops(Family::Complete { n }, loops), true, false)?;
        }
    }
    for n in 4..=12 {
        check(&FamilySpec::loopless(Family::Complete { n }), true, true)?;
    }
    for a in 1..=5 {
        for b in 1..=5 {
            for loops in subsets(a + b) {
                let spec = FamilySpec::with_loops(Family::CompleteBipartite { a, b }, loops);
                check(&spec, true, true)?;
            }
        }
    }
    for n in 2..=10 {
        for loops in subsets(n) {
            check(&FamilySpec::with_loops(Family::Star { n }, loops), true, true)?;
        }
    }
    for n in 3..=12 {
        for loops in subsets(n) {
            check(&FamilySpec::with_loops(Family::Cycle { n }, loops), true, true)?;
        }
    }
    for n in 2..=12 {
        for loops in subsets(n) {
            let spec = FamilySpec::with_loops(Family::Path { n }, loops);
            match closed_form_w4(&spec) {
                Ok(_) => check(&spec, false, true)?,
                Err(Error::InvalidLoopPlacement(_)) => {}
                Err(e) => return Err(e.into()),
            }
        }
    }
    for n in 5..=10 {
        for loops in subsets(n) {
            check(&FamilySpec::with_loops(Family::Wheel { n }, loops), true, false)?;
        }
    }
    for k in 2..=4 {
        let n = graph(&FamilySpec::loopless(Family::Kneser { k })).order();
        for sigma in 0..=n {
            check(&FamilySpec::with_loops(Family::Kneser { k }, (0..sigma).collect()), true, false)?;
        }
    }
    for loops in subsets(10) {
        check(&FamilySpec::with_loops(Family::Petersen, loops), true, false)?;
    }
    Ok(format!("{w3_checks} w3 and {w4_checks} w4 agreements"))
}

fn selfloop(args: &[&str]) -> Result<std::process::Output> {
    Command::new(env!("CARGO_BIN_EXE_selfloop"))
        .args(args)
        .output()
        .context("running selfloop")
}

fn cli_contract() -> Result<String> {
    let dir = tempfile::TempDir::new()?;
    let path = |name: &str| dir.path().join(name).to_str().unwrap().to_string();

    let specs: [(&[&str], FamilySpec); 4] = [
        (
            &["--family", "complete", "--n", "4", "--loops", "0,1,3"],
            FamilySpec::with_loops(Family::Complete { n: 4 }, vec![0, 1, 3]),
        ),
        (
            &["--family", "path", "--n", "8", "--loops", "1,2,4,6"],
            FamilySpec::with_loops(Family::Path { n: 8 }, vec![1, 2, 4, 6]),
        ),
        (
            &["--family", "petersen", "--loops", "1"],
            FamilySpec::with_loops(Family::Petersen, vec![1]),
        ),
        (
            &["--family", "wheel", "--n", "6", "--center-loop", "--rim-loops", "3"],
            FamilySpec::with_placement(Family::Wheel { n: 6 }, LoopPlacement::Wheel { center: true, rim: 3 }),
        ),
    ];
    for (i, (flags, spec)) in specs.iter().enumerate() {
        let file = path(&format!("g{i}.txt"));
        let mut args = vec!["generate"];
        args.extend_from_slice(flags);
        args.extend_from_slice(&["-o", &file]);
        ensure!(selfloop(&args)?.status.code() == Some(0), "generate {flags:?}");
        let parsed = format::parse(&std::fs::read_to_string(&file)?)?;
        ensure!(parsed == graph(spec), "round trip {flags:?}");
    }

    let k4 = path("g0.txt");
    for cmd in ["walks", "moments", "census", "verify"] {
        let (a, b) = (selfloop(&[cmd, &k4])?, selfloop(&[cmd, &k4])?);
        ensure!(a.status.code() == Some(0), "{cmd} exit {:?}", a.status.code());
        ensure!(a.stdout == b.stdout && !a.stdout.is_empty(), "{cmd} not deterministic");
        serde_json::from_slice::<serde_json::Value>(&a.stdout).context("JSON output")?;
    }

    let bad = path("bad.txt");
    std::fs::write(&bad, "n 2\ne 0 5\n")?;
    ensure!(selfloop(&["walks", &bad])?.status.code() == Some(2), "input error exit");
    let k10 = path("k10.txt");
    ensure!(selfloop(&["generate", "--family", "complete", "--n", "10", "-o", &k10])?.status.success());
    let unconfirmed = selfloop(&["verify", &k10, "--rst", "400,799,799"])?;
    ensure!(unconfirmed.status.code() == Some(1), "violation exit");

    let run = || selfloop(&["verify", "--random", "1000", "--seed", "42", "--chain-depth", "8"]);
    let (first, second) = (run()?, run()?);
    ensure!(first.status.code() == Some(0), "seeded verify exit {:?}", first.status.code());
    ensure!(first.stdout == second.stdout, "seeded verify reports differ");
    let report: serde_json::Value = serde_json::from_slice(&first.stdout)?;
    ensure!(report["summary"]["graphs"] == 1000 && report["summary"]["violations"] == 0);
    Ok(format!(
        "round trips, determinism, exit codes 0/1/2, seeded verify report of {} bytes identical",
        first.stdout.len()
    ))
}

type Criterion = (&'static str, fn() -> Result<String>);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("exhaustive oracle equivalence", oracle_equivalence),
        ("worked-example checkpoints", worked_example_checkpoints),
        ("spectral identities", spectral_identities),
        ("closed-form twisted moments", closed_form_moments),
        ("inequality suite", inequality_suite),
        ("equality cases", equality_cases),
        ("closed-form family sweeps", closed_form_sweeps),
        ("CLI contract", cli_contract),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(anyhow::anyhow!("panicked: {msg}"))
            });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} PASS {name}: {detail} ({secs:.1}s)", i + 1),
            Err(e) => {
                failures += 1;
                println!("criterion {} FAIL {name}: {e:#} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
