//! End-to-end acceptance gate.
//!
//! Eight scenarios, each a separate test that prints one summary line on
//! success and panics with context on any mismatch.  Budgets are asserted
//! with `Instant` so a regression in the solver or the pruning rules fails
//! loudly instead of slowly.

use std::time::{Duration, Instant};

use comaxdim::checks::{analyze_ring, CheckStatus, Regime, RingAnalysis};
use comaxdim::graph::Graph;
use comaxdim::ring::RingSpec;
use comaxdim::{solver, Caps, OracleMode};

fn spec(lengths: &[u32]) -> RingSpec {
    RingSpec::from_lengths(lengths).unwrap_or_else(|e| panic!("spec {lengths:?}: {e}"))
}

fn analyze(lengths: &[u32], oracle: OracleMode) -> RingAnalysis {
    let s = spec(lengths);
    analyze_ring(&s, &Caps::default(), oracle).unwrap_or_else(|e| panic!("analyze {s}: {e}"))
}

fn check_status(a: &RingAnalysis, id: &str) -> CheckStatus {
    a.checks
        .iter()
        .find(|c| c.id == id)
        .unwrap_or_else(|| panic!("missing check {id}"))
        .status
}

fn assert_budget(name: &str, started: Instant, budget: Duration) -> Duration {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "{name} took {elapsed:?}, budget {budget:?}"
    );
    elapsed
}

#[test]
fn reduced_triple_example() {
    let started = Instant::now();
    let a = analyze(&[1, 1, 1], OracleMode::Require);

    // Boundary is exactly the three minimal ideals (one nonzero component).
    let minimal: Vec<usize> = a
        .derived
        .vertices
        .iter()
        .enumerate()
        .filter(|(_, v)| v.nzc() == 1)
        .map(|(i, _)| i)
        .collect();
    assert_eq!(minimal.len(), 3);
    assert_eq!(a.srg.base_indices, minimal, "boundary != minimal ideals");

    // The strong resolving graph is a triangle and the dimension is 2.
    assert_eq!(a.srg.graph.vertex_count(), 3);
    assert!(a.srg.graph.is_complete(), "strong resolving graph not K3");
    assert_eq!(a.sdim.value, 2);
    assert_eq!(a.oracle_sdim.as_ref().map(|o| o.value), Some(2));
    assert!(a.all_pass(), "failed checks: {:?}", a.failed_checks());

    let elapsed = assert_budget("reduced triple", started, Duration::from_secs(1));
    println!("acceptance reduced_triple_example: pass ({elapsed:?})");
}

#[test]
fn chain_triple_example() {
    let pipeline_started = Instant::now();
    let a = analyze(&[2, 2, 3], OracleMode::Off);
    assert_eq!(a.derived.gamma.vertex_count(), 23);

    // Class sizes keyed by which components sit at the top level.
    let s = spec(&[2, 2, 3]);
    let mut sizes: std::collections::BTreeMap<Vec<bool>, usize> = Default::default();
    for v in &a.derived.vertices {
        *sizes
            .entry(s.nil_class(v).unwrap().mask().to_vec())
            .or_default() += 1;
    }
    let expect = [
        (vec![true, false, false], 6),
        (vec![false, true, false], 6),
        (vec![false, false, true], 4),
        (vec![true, true, false], 3),
        (vec![true, false, true], 2),
        (vec![false, true, true], 2),
    ];
    assert_eq!(sizes.len(), expect.len());
    for (mask, size) in expect {
        assert_eq!(sizes.get(&mask), Some(&size), "class {mask:?}");
    }

    // Every vertex is on the boundary; cover the 125-edge strong
    // resolving graph exactly.
    assert_eq!(a.srg.base_indices.len(), 23);
    assert_eq!(a.cover.alpha, 4, "independence number of the SR graph");
    assert_eq!(a.sdim.value, 19);
    assert!(a.all_pass(), "failed checks: {:?}", a.failed_checks());
    let pipeline =
        assert_budget("chain triple pipeline", pipeline_started, Duration::from_secs(1));

    let oracle_started = Instant::now();
    let oracle = solver::sdim_bruteforce(&a.derived.gamma, &Caps::default()).unwrap();
    assert_eq!(oracle.value, 19);
    let brute = assert_budget("chain triple oracle", oracle_started, Duration::from_secs(60));
    println!("acceptance chain_triple_example: pass (pipeline {pipeline:?}, oracle {brute:?})");
}

#[test]
fn reduced_sweep() {
    let started = Instant::now();
    // Oracle capped at 14 vertices: cross-checks up to four factors.
    let caps = Caps {
        brute_cap: 14,
        ..Caps::default()
    };
    let expected = [1u64, 2, 8, 22, 52];
    for (i, want) in expected.iter().enumerate() {
        let n = i + 2;
        let s = spec(&vec![1; n]);
        let a = analyze_ring(&s, &caps, OracleMode::Auto).unwrap();
        assert_eq!(a.sdim.value as u64, *want, "{s}");
        assert!(a.all_pass(), "{s} failed checks: {:?}", a.failed_checks());
        let oracle = a.oracle_sdim.as_ref().map(|o| o.value as u64);
        if a.derived.gamma.vertex_count() <= 14 {
            assert_eq!(oracle, Some(*want), "{s} oracle");
        } else {
            assert_eq!(oracle, None, "{s} oracle should be skipped");
        }
    }
    let elapsed = assert_budget("reduced sweep", started, Duration::from_secs(30));
    println!("acceptance reduced_sweep: pass ({elapsed:?})");
}

#[test]
fn all_non_field_family() {
    let started = Instant::now();
    for lengths in [
        [2u32, 2].as_slice(),
        &[2, 3],
        &[3, 3],
        &[2, 2, 2],
        &[2, 2, 3],
    ] {
        let a = analyze(lengths, OracleMode::Auto);
        assert_eq!(a.regime, Regime::AllNonField);
        let v = a.derived.gamma.vertex_count();
        let n = lengths.len();
        assert_eq!(a.sdim.value, v + 2 - 2 * n, "{lengths:?}");
        if v <= Caps::default().brute_cap {
            assert_eq!(
                a.oracle_sdim.as_ref().map(|o| o.value),
                Some(a.sdim.value),
                "{lengths:?} oracle"
            );
        }
        assert!(a.all_pass(), "{lengths:?}: {:?}", a.failed_checks());
    }
    let elapsed = assert_budget("all-non-field family", started, Duration::from_secs(300));
    println!("acceptance all_non_field_family: pass ({elapsed:?})");
}

#[test]
fn mixed_family() {
    let started = Instant::now();
    for lengths in [[2u32, 1].as_slice(), &[2, 2, 1], &[2, 1, 1], &[3, 1, 1]] {
        let a = analyze(lengths, OracleMode::Require);
        assert_eq!(a.regime, Regime::Mixed);
        let v = a.derived.gamma.vertex_count();
        let n = lengths.iter().filter(|&&k| k > 1).count();
        let m = lengths.len() - n;
        assert_eq!(a.sdim.value, v + 2 - 2 * n - 2 * m, "{lengths:?}");
        assert_eq!(
            a.oracle_sdim.as_ref().map(|o| o.value),
            Some(a.sdim.value),
            "{lengths:?} oracle"
        );
        assert!(a.all_pass(), "{lengths:?}: {:?}", a.failed_checks());
    }
    let elapsed = assert_budget("mixed family", started, Duration::from_secs(300));
    println!("acceptance mixed_family: pass ({elapsed:?})");
}

#[test]
fn structural_identities() {
    let started = Instant::now();

    // Reduced rings: the incomparability graph sans isolated vertices is
    // the strong resolving graph, as labeled graphs.
    for n in 2..=6 {
        let a = analyze(&vec![1; n], OracleMode::Off);
        assert_eq!(
            a.derived.gamma_star, a.srg.graph,
            "{n} fields: gamma_star != srg"
        );
        if n >= 3 {
            let isolated = a.derived.gamma_star_star.isolated_vertices();
            let spec = spec(&vec![1; n]);
            let max: Vec<usize> = spec
                .maximal_ideals()
                .iter()
                .map(|m| a.derived.vertices.iter().position(|v| v == m).unwrap())
                .collect();
            assert_eq!(isolated, max, "{n} fields: isolates != maximal ideals");
        }
    }

    // All-non-field rings: the class graph is the strong resolving graph.
    for lengths in [
        [2u32, 2].as_slice(),
        &[2, 3],
        &[3, 3],
        &[2, 2, 2],
        &[2, 2, 3],
    ] {
        let a = analyze(lengths, OracleMode::Off);
        assert_eq!(
            a.derived.gamma_prime, a.srg.graph,
            "{lengths:?}: gamma_prime != srg"
        );
    }

    let elapsed = assert_budget("structural identities", started, Duration::from_secs(60));
    println!("acceptance structural_identities: pass ({elapsed:?})");
}

#[test]
fn invariant_battery() {
    let started = Instant::now();
    let corpus: Vec<Vec<u32>> = (2..=6)
        .map(|n| vec![1; n])
        .chain(
            [
                vec![2, 2],
                vec![2, 3],
                vec![3, 3],
                vec![2, 2, 2],
                vec![2, 2, 3],
                vec![2, 1],
                vec![2, 2, 1],
                vec![2, 1, 1],
                vec![3, 1, 1],
            ]
            .into_iter(),
        )
        .collect();

    for lengths in &corpus {
        let a = analyze(lengths, OracleMode::Off);
        let v = a.derived.gamma.vertex_count();
        let reduced = lengths.iter().all(|&k| k == 1);

        assert!(a.all_pass(), "{lengths:?}: {:?}", a.failed_checks());
        assert_eq!(check_status(&a, "gallai-identity"), CheckStatus::Pass);
        assert_eq!(check_status(&a, "gamma-diameter"), CheckStatus::Pass);
        if reduced && lengths.len() <= 6 {
            assert_eq!(
                check_status(&a, "distance-trichotomy"),
                CheckStatus::Pass,
                "{lengths:?}"
            );
        }
        if !reduced {
            assert_eq!(
                check_status(&a, "same-class-twins"),
                CheckStatus::Pass,
                "{lengths:?}"
            );
        }
        if v <= 20 {
            assert_eq!(
                check_status(&a, "dim-le-sdim"),
                CheckStatus::Pass,
                "{lengths:?}"
            );
        }
    }
    let elapsed = assert_budget("invariant battery", started, Duration::from_secs(300));
    println!(
        "acceptance invariant_battery: pass ({} rings, {elapsed:?})",
        corpus.len()
    );
}

#[test]
fn oracle_equivalence() {
    let started = Instant::now();
    let caps = Caps::default();
    let mut corpus: Vec<(String, Graph)> = Vec::new();

    // Every ring graph of the other scenarios with at most 30 vertices.
    for lengths in [
        [1u32, 1].as_slice(),
        &[1, 1, 1],
        &[1, 1, 1, 1],
        &[1, 1, 1, 1, 1],
        &[2, 2],
        &[2, 3],
        &[3, 3],
        &[2, 2, 2],
        &[2, 2, 3],
        &[2, 1],
        &[2, 2, 1],
        &[2, 1, 1],
        &[3, 1, 1],
    ] {
        let s = spec(lengths);
        let d = comaxdim::comaximal::build_derived(&s, &caps).unwrap();
        assert!(d.gamma.vertex_count() <= 30);
        corpus.push((s.to_string(), d.gamma));
    }
    for n in 2..=7 {
        corpus.push((format!("P{n}"), Graph::path(n)));
    }
    for n in 3..=8 {
        corpus.push((format!("C{n}"), Graph::cycle(n).unwrap()));
    }
    let multipartite: [(&str, &[usize], usize); 5] = [
        ("K{2,3}", &[2, 3], 3),
        ("K{3,3}", &[3, 3], 4),
        ("K{1,4}", &[1, 4], 3),
        ("K{2,2,2}", &[2, 2, 2], 3),
        ("K{2,2,3}", &[2, 2, 3], 4),
    ];
    let mut frozen: Vec<(String, usize)> = Vec::new();
    for (name, parts, want) in multipartite {
        corpus.push((name.to_string(), Graph::complete_multipartite(parts).unwrap()));
        frozen.push((name.to_string(), want));
    }
    for n in 2..=7 {
        frozen.push((format!("P{n}"), 1));
    }
    for n in 3..=8usize {
        frozen.push((format!("C{n}"), n.div_ceil(2)));
    }

    assert!(corpus.len() >= 25, "corpus has only {} graphs", corpus.len());
    for (name, g) in &corpus {
        let fast = solver::sdim_via_srg(g, &caps)
            .unwrap_or_else(|e| panic!("{name} pipeline: {e}"));
        let slow = solver::sdim_bruteforce(g, &caps)
            .unwrap_or_else(|e| panic!("{name} oracle: {e}"));
        assert_eq!(fast.value, slow.value, "{name}: pipeline vs oracle");
        if let Some((_, want)) = frozen.iter().find(|(n, _)| n == name) {
            assert_eq!(fast.value, *want, "{name}: known value");
        }
    }

    let elapsed = assert_budget("oracle equivalence", started, Duration::from_secs(600));
    println!(
        "acceptance oracle_equivalence: pass ({} graphs, {elapsed:?})",
        corpus.len()
    );
}
