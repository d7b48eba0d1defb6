//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Run with `cargo test -p distchrom --test acceptance -- --nocapture`
//! to see the lines.
//!
//! All tolerances in this domain are exact equalities; every bound and
//! characterization is pinned here and in the sweep layer.

mod common;

use std::path::PathBuf;
use std::time::Instant;

use distchrom::constructive;
use distchrom::corpus::{
    enumerate_connected, enumerate_connected_bounded, run_sweep, SweepOptions, SweepRecord,
    TheoremId, TheoremSpec,
};
use distchrom::exact::{
    distinguishing_chromatic_index, distinguishing_chromatic_number,
};
use distchrom::graph::{
    complete, complete_bipartite, complete_multipartite, cycle, fig_lk13, write_graph6_string,
    Graph,
};
use distchrom::symmetry::canonical_form;
use once_cell::sync::Lazy;

/// Shared oracle cache: every sweep in this binary reuses solve results.
static CACHE_DIR: Lazy<tempfile::TempDir> =
    Lazy::new(|| tempfile::tempdir().expect("tempdir for the sweep cache"));

fn sweep(id: TheoremId, k: Option<usize>, n_max: usize) -> Vec<SweepRecord> {
    let spec = TheoremSpec::new(id, k).unwrap();
    let opts = SweepOptions {
        n_max,
        allow_n8: false,
        jobs: None,
        cache_dir: Some(PathBuf::from(CACHE_DIR.path())),
    };
    match run_sweep(&spec, &opts) {
        Ok(records) => records,
        Err(e) => panic!("sweep {} aborted: {e}", id.id_str()),
    }
}

fn criterion<T>(number: u32, name: &str, body: impl FnOnce() -> T + std::panic::UnwindSafe) -> T {
    let start = Instant::now();
    match std::panic::catch_unwind(body) {
        Ok(value) => {
            println!(
                "[acceptance] criterion {number} ({name}): PASS  [{:.2?}]",
                start.elapsed()
            );
            value
        }
        Err(cause) => {
            println!("[acceptance] criterion {number} ({name}): FAIL");
            std::panic::resume_unwind(cause);
        }
    }
}

fn canon(g: &Graph) -> Vec<u8> {
    canonical_form(g).unwrap()
}

fn equality_canon_set(records: &[SweepRecord]) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = records
        .iter()
        .filter(|r| r.equality)
        .map(|r| canon(&distchrom::graph::parse_graph6(r.graph6.as_bytes()).unwrap()))
        .collect();
    out.sort();
    out
}

fn exception_canon_set(records: &[SweepRecord]) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = records
        .iter()
        .filter(|r| r.exception)
        .map(|r| canon(&distchrom::graph::parse_graph6(r.graph6.as_bytes()).unwrap()))
        .collect();
    out.sort();
    out
}

fn sorted_canons(graphs: &[Graph]) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = graphs.iter().map(canon).collect();
    out.sort();
    out
}

#[test]
fn criterion_01_known_oracle_values() {
    criterion(1, "known oracle values", || {
        let start = Instant::now();
        assert_eq!(distinguishing_chromatic_number(&cycle(6)).unwrap().chi_d, 4);
        assert!(start.elapsed().as_secs() < 1, "C6 under a second");
        let start = Instant::now();
        assert_eq!(distinguishing_chromatic_number(&cycle(5)).unwrap().chi_d, 3);
        assert!(start.elapsed().as_secs() < 1);
        let start = Instant::now();
        assert_eq!(
            distinguishing_chromatic_number(&complete_bipartite(3, 3))
                .unwrap()
                .chi_d,
            6
        );
        assert!(start.elapsed().as_secs() < 1);
        for n in 1..=7 {
            let start = Instant::now();
            assert_eq!(distinguishing_chromatic_number(&complete(n)).unwrap().chi_d, n);
            assert!(start.elapsed().as_secs() < 1);
        }
        // Every complete multipartite graph on up to 7 vertices: chi_D = n.
        for n in 2..=7usize {
            for parts in integer_partitions(n) {
                if parts.len() < 2 {
                    continue; // disconnected unless complete of one part... K_n handled above.
                }
                let g = complete_multipartite(&parts);
                let start = Instant::now();
                assert_eq!(
                    distinguishing_chromatic_number(&g).unwrap().chi_d,
                    n,
                    "K_{parts:?}"
                );
                assert!(start.elapsed().as_secs() < 1, "K_{parts:?} under a second");
            }
        }
    });
}

fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            cur.push(part);
            rec(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_02_collins_trenk_sweep() {
    criterion(2, "chi_D <= 2*Delta, equality K_{p,p} and C6", || {
        let corpus_size: usize = (1..=7).map(|n| enumerate_connected(n).unwrap().len()).sum();
        assert_eq!(corpus_size, 996);
        let records = sweep(TheoremId::CT2Delta, None, 7);
        // K1 is out of class (2*Delta = 0 is degenerate); everything else is in.
        assert_eq!(records.len(), 995);
        assert!(records.iter().all(|r| r.holds));
        let expected = sorted_canons(&[
            complete(2),
            complete_bipartite(2, 2),
            complete_bipartite(3, 3),
            cycle(6),
        ]);
        assert_eq!(equality_canon_set(&records), expected);
    });
}

#[test]
fn criterion_03_c4_free_sweep() {
    criterion(3, "C4-free: chi_D <= Delta+2, equality only C6", || {
        let records = sweep(TheoremId::C4Delta2, None, 7);
        assert_eq!(equality_canon_set(&records), sorted_canons(&[cycle(6)]));
        // The constructive procedure ran on every graph in class and stayed
        // within the bound (the sweep aborts otherwise).
        assert!(records.iter().all(|r| r.constructive_colours.is_some()));
        assert!(records
            .iter()
            .all(|r| r.constructive_colours.unwrap() <= r.bound));
        // Delta+2 is attained constructively only on C6 itself.
        for r in &records {
            if r.constructive_colours.unwrap() == r.bound {
                assert_eq!(r.chi_d, 4, "only C6 may need Delta+2: {}", r.graph6);
            }
        }
    });
}

#[test]
fn criterion_04_chordal_sweep() {
    criterion(4, "chordal: chi_D <= Delta+1, equality = symmetric or join", || {
        let records = sweep(TheoremId::ChordalDelta1, None, 7);
        // The bidirectional tag check runs inside the sweep; assert the
        // equality set is exactly the tagged families here as well.
        for r in &records {
            assert_eq!(
                r.equality,
                r.extremal.is_symmetric_or_join(),
                "tag/equality mismatch on {}",
                r.graph6
            );
        }
        // Known members: K1, P3, K_{1,3}, every K_n, K_n minus an edge.
        let equality = equality_canon_set(&records);
        for g in [
            complete(1),
            distchrom::graph::path(3),
            distchrom::graph::path(5),
            distchrom::graph::claw(),
            complete(5),
            distchrom::graph::diamond(),
        ] {
            assert!(equality.contains(&canon(&g)));
        }
        // Peeling ran everywhere.
        assert!(records.iter().all(|r| r.constructive_colours.is_some()));
    });
}

#[test]
fn criterion_05_c4_2k2_sweep() {
    criterion(5, "(C4,2K2)-free: equality = join or C5", || {
        let records = sweep(TheoremId::C42K2Delta1, None, 7);
        assert!(records.iter().all(|r| r.holds));
        let equality = equality_canon_set(&records);
        assert!(equality.contains(&canon(&cycle(5))));
        assert!(equality.contains(&canon(&complete(3))));
        // Every equality case is the join shape or C5 (checked inside the
        // sweep bidirectionally); count a few known non-members.
        assert!(!equality.contains(&canon(&distchrom::graph::path(4))));
    });
}

#[test]
fn criterion_06_2k2_sweep() {
    criterion(6, "2K2-free: chi_D <= 2*Delta-omega+2", || {
        let records = sweep(TheoremId::TwoK2Bound, None, 7);
        let equality = equality_canon_set(&records);
        let mut expected: Vec<Vec<u8>> = (1..=7).map(|n| canon(&complete(n))).collect();
        for p in 1..=3 {
            expected.push(canon(&complete_bipartite(p, p)));
        }
        expected.sort();
        expected.dedup(); // K2 = K_{1,1} appears in both families.
        assert_eq!(equality, expected);
        // Constructive runs on every in-class graph with omega >= 3 that is
        // not an equality case.
        for r in &records {
            let should_run = r.omega >= 3 && !r.equality;
            assert_eq!(
                r.constructive_colours.is_some(),
                should_run,
                "constructive coverage on {}",
                r.graph6
            );
        }
    });
}

#[test]
fn criterion_07_claw_free_sweeps() {
    criterion(7, "claw-free: chi_D <= chi+p and chi_D <= Delta+2", || {
        let records = sweep(TheoremId::ClawChiP, None, 7);
        // At n <= 7 the only encountered exception is C6 (the figure graph
        // has 9 vertices).
        assert_eq!(exception_canon_set(&records), sorted_canons(&[cycle(6)]));
        for r in &records {
            if !r.exception {
                assert!(r.constructive_colours.is_some(), "{}", r.graph6);
            }
        }

        let records = sweep(TheoremId::ClawDelta2, None, 7);
        let expected = sorted_canons(&[
            cycle(6),
            cycle(4),
            distchrom::graph::cocktail_party(3),
        ]);
        assert_eq!(equality_canon_set(&records), expected);
    });
}

#[test]
fn criterion_08_claw_diamond_sweeps() {
    criterion(8, "(claw,diamond)-free bounds and the index theorem", || {
        let records = sweep(TheoremId::ClawDiamondDelta1, None, 7);
        assert_eq!(
            exception_canon_set(&records),
            sorted_canons(&[cycle(4), cycle(6)])
        );
        for r in &records {
            if !r.exception {
                assert!(r.constructive_colours.is_some());
                assert!(r.constructive_colours.unwrap() <= r.delta + 1);
            }
        }

        // chi_D <= k for (claw, diamond, K_k)-free with Delta >= 3.
        for k in [4, 5] {
            let records = sweep(TheoremId::ClawDiamondKk, Some(k), 7);
            assert!(records.iter().all(|r| r.chi_d <= k), "k={k}");
        }

        // Index theorem on connected H with 3 <= n <= 6: exceptions exactly
        // C4, K4, C6, K_{3,3}.
        let records = sweep(TheoremId::IndexDelta1, None, 6);
        let expected = sorted_canons(&[cycle(4), complete(4), cycle(6), complete_bipartite(3, 3)]);
        assert_eq!(exception_canon_set(&records), expected);

        assert_eq!(distinguishing_chromatic_index(&complete(4)).unwrap(), 5);
        assert_eq!(
            distinguishing_chromatic_index(&complete_bipartite(3, 3)).unwrap(),
            5
        );
    });
}

/// Roots with 3..=9 edges, with the bridge residual per graph.
fn whitney_failures(excluded: &[Graph]) -> (usize, Vec<String>) {
    let excluded: Vec<Vec<u8>> = excluded.iter().map(canon).collect();
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for n in 3..=10usize {
        for h in enumerate_connected_bounded(n, 9).unwrap() {
            let m = h.edge_count();
            if !(3..=9).contains(&m) {
                continue;
            }
            if excluded.contains(&canon(&h)) {
                continue;
            }
            checked += 1;
            let index = distinguishing_chromatic_index(&h).unwrap();
            let l = constructive::line_graph(&h).unwrap();
            let chi_d = distinguishing_chromatic_number(&l).unwrap().chi_d;
            if index != chi_d {
                failures.push(format!(
                    "H = {} (n={n}, m={m}): chi'_D = {index}, chi_D(L(H)) = {chi_d}",
                    write_graph6_string(&h).unwrap()
                ));
            }
        }
    }
    (checked, failures)
}

/// The criterion exactly as stated: exclusions K2 (out of edge range
/// anyway), the paw, and the diamond. KNOWN RED: the equality is
/// mathematically false at H = K4, whose line graph is the octahedron
/// K_{2,2,2} with chi_D = 6 (complete multipartite) while chi'_D(K4) = 5.
/// The natural map Aut(K4) -> Aut(L(K4)) has index 2 (24 vs 48), so K4 is a
/// fourth genuine exception the stated list omits. See the corrected
/// variant below for the full verification.
#[test]
fn criterion_09_whitney_bridge_as_stated() {
    criterion(9, "Whitney bridge with the stated exception list", || {
        let (checked, failures) =
            whitney_failures(&[distchrom::graph::paw(), distchrom::graph::diamond()]);
        assert!(checked > 1000, "swept {checked} root graphs");
        assert!(
            failures.is_empty(),
            "Whitney bridge fails on {} of {checked} roots outside the stated exceptions:\n{}",
            failures.len(),
            failures.join("\n")
        );
    });
}

/// The mathematically complete exception set {K2, paw, diamond, K4}: the
/// bridge holds on every other root with 3..=9 edges, and fails on each
/// in-range exception.
#[test]
fn criterion_09_whitney_bridge_corrected_exceptions() {
    criterion(9, "Whitney bridge with the complete exception set", || {
        let (checked, failures) = whitney_failures(&[
            distchrom::graph::paw(),
            distchrom::graph::diamond(),
            complete(4),
        ]);
        assert!(checked > 1000, "swept {checked} root graphs");
        assert!(failures.is_empty(), "{}", failures.join("\n"));
        // Each excluded root genuinely breaks the bridge.
        for h in [distchrom::graph::paw(), distchrom::graph::diamond(), complete(4)] {
            let index = distinguishing_chromatic_index(&h).unwrap();
            let l = constructive::line_graph(&h).unwrap();
            let chi_d = distinguishing_chromatic_number(&l).unwrap().chi_d;
            assert_eq!(
                index + 1,
                chi_d,
                "exceptional root {} should miss the bridge by one",
                write_graph6_string(&h).unwrap()
            );
        }
    });
}

#[test]
fn criterion_10_certification_invariant() {
    criterion(10, "no uncertified colouring escapes the constructive layer", || {
        // Every constructive op certifies before returning; a failure
        // surfaces as an internal error and aborts the sweeps above. Run a
        // compact combined pass here and assert clean exits.
        for id in [
            TheoremId::C4Delta2,
            TheoremId::ChordalDelta1,
            TheoremId::TwoK2Bound,
            TheoremId::ClawChiP,
            TheoremId::ClawDiamondDelta1,
        ] {
            let records = sweep(id, None, 6);
            assert!(records.iter().all(|r| r.holds), "{}", id.id_str());
        }
    });
}

#[test]
fn criterion_11_fig_lk13_fixture() {
    criterion(11, "figure graph: chi = 3 confirmed, chi_D compared to 5", || {
        let fig = constructive::fixture("fig_LK13").unwrap();
        assert_eq!(fig, fig_lk13());
        let chi = distchrom::exact::chromatic_number(&fig).unwrap();
        assert_eq!(chi, 3, "chi of the figure graph");
        let chi_d = distinguishing_chromatic_number(&fig).unwrap().chi_d;
        // The claimed value is 5; report agreement or mismatch without
        // failing (the open question stays recorded, not resolved).
        if chi_d == 5 {
            println!("[acceptance] fig_LK13: oracle chi_D = 5 matches the claimed value");
        } else {
            println!(
                "[acceptance] fig_LK13: oracle chi_D = {chi_d} MISMATCHES the claimed value 5"
            );
        }
    });
}
