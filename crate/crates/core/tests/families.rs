//! Family closed forms against the general formulas on generated graphs.

use selfloop_core::families::generate;
use selfloop_core::walks::{self, closed_form_w3, closed_form_w4};
use selfloop_core::{census, Error, Family, FamilySpec, LoopPlacement};

/// Every subset of `0..n` as a sorted vertex list.
fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|v| mask >> v & 1 == 1).collect())
}

fn check(spec: &FamilySpec, w3: bool, w4: bool) {
    let g = generate(spec).unwrap();
    if w3 {
        assert_eq!(
            closed_form_w3(spec).unwrap(),
            walks::w3_formula(&g).unwrap(),
            "w3 {spec:?}"
        );
    }
    if w4 {
        assert_eq!(
            closed_form_w4(spec).unwrap(),
            walks::w4_formula(&g).unwrap(),
            "w4 {spec:?}"
        );
    }
}

#[test]
fn complete_graphs() {
    for n in 1..=8 {
        for loops in subsets(n) {
            check(&FamilySpec::with_loops(Family::Complete { n }, loops), true, false);
        }
    }
    for n in 4..=10 {
        check(&FamilySpec::loopless(Family::Complete { n }), true, true);
    }
}

#[test]
fn complete_bipartite_graphs() {
    for a in 1..=5 {
        for b in 1..=5 {
            let family = Family::CompleteBipartite { a, b };
            for loops in subsets(a + b) {
                check(&FamilySpec::with_loops(family, loops), true, true);
            }
            for sigma_a in 0..=a {
                for sigma_b in 0..=b {
                    let placement = LoopPlacement::Parts { sigma_a, sigma_b };
                    check(&FamilySpec::with_placement(family, placement), true, true);
                }
            }
        }
    }
}

#[test]
fn stars() {
    for n in 2..=10 {
        for loops in subsets(n) {
            check(&FamilySpec::with_loops(Family::Star { n }, loops), true, true);
        }
    }
}

#[test]
fn cycles() {
    for n in 3..=10 {
        for loops in subsets(n) {
            check(&FamilySpec::with_loops(Family::Cycle { n }, loops), true, true);
        }
    }
}

#[test]
fn paths_on_supported_placements() {
    let mut covered = 0;
    for n in 2..=10 {
        for loops in subsets(n) {
            let spec = FamilySpec::with_loops(Family::Path { n }, loops);
            match closed_form_w4(&spec) {
                Ok(_) => {
                    check(&spec, false, true);
                    covered += 1;
                }
                Err(Error::InvalidLoopPlacement(_)) => {
                    let g = generate(&spec).unwrap();
                    let p = walks::path_loop_profile(&g).unwrap();
                    assert!(p.sigma_e > 0 && p.has_adjacent_loops());
                }
                Err(e) => panic!("{e}"),
            }
        }
    }
    // 741 of the 2044 placements on P_2..P_10 fall under a stated branch
    assert_eq!(covered, 741);
}

#[test]
fn wheels() {
    for n in 5..=10 {
        for loops in subsets(n) {
            check(&FamilySpec::with_loops(Family::Wheel { n }, loops), true, false);
        }
        for rim in 0..n {
            for center in [false, true] {
                let spec = FamilySpec::with_placement(
                    Family::Wheel { n },
                    LoopPlacement::Wheel { center, rim },
                );
                check(&spec, true, false);
            }
        }
    }
}

#[test]
fn kneser_graphs() {
    for k in 2..=4 {
        let n = generate(&FamilySpec::loopless(Family::Kneser { k })).unwrap().order();
        for sigma in [0, 1, 2, n / 2, n] {
            let spec = FamilySpec::with_loops(Family::Kneser { k }, (0..sigma).collect());
            check(&spec, true, false);
        }
    }
    for loops in subsets(10).step_by(37) {
        check(&FamilySpec::with_loops(Family::Petersen, loops), true, false);
    }
}

#[test]
fn mantel_extremal_graphs() {
    for half in 1..=6 {
        let n = 2 * half;
        let g = generate(&FamilySpec::with_loops(
            Family::CompleteBipartite { a: half, b: half },
            (0..n).collect(),
        ))
        .unwrap();
        assert_eq!(census::triangle_census(&g).total, 0);
        assert_eq!(2 * walks::w3_formula(&g).unwrap(), (3 * n * n + 2 * n) as u64);
    }
}
