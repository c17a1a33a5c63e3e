//! Acceptance criteria, one line each. Runs without the libtest harness so
//! that every criterion reports even when an earlier one fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use odiam::constructions::{build_gnd, build_h, expected_size, Family};
use odiam::format::{parse_arc_list, parse_edge_list, serialize_arc_list, serialize_edge_list};
use odiam::graph::{
    find_hamiltonian_cycle, is_bridgeless, is_connected, is_strongly_connected, strong_orientation,
    Edge, HamiltonianSearch, Orientation, UndirectedGraph,
};
use odiam::oracle::{
    canonical_code, diameter_profile, enumerate_bridgeless, oriented_diameter, random_bridgeless,
    sweep, verify_lower_bound, SweepOptions, Threshold, Verdict, DEFAULT_CAP,
};
use odiam::orient::{
    apply_case, build_long_path_frame_for, classify_chords, find_return_path, orient_bounded,
    orient_via_cycle, CaseTag, FrameOutcome, HamiltonianFrame,
};
use odiam::Error;
use rand::{Rng, SeedableRng};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Diameter by Floyd-Warshall; `None` when not strongly connected.
fn independent_diameter(o: &Orientation) -> Option<usize> {
    let n = o.order();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (t, h) in o.arcs() {
        d[t][h] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let worst = d.into_iter().flatten().max().unwrap_or(0);
    (worst < inf).then_some(worst)
}

fn dense_small_classes() -> Vec<UndirectedGraph> {
    (5..=6)
        .flat_map(|n| enumerate_bridgeless(n).unwrap())
        .filter(|g| g.size() >= g.order() + 3)
        .collect()
}

fn criterion_1() -> Check {
    let classes = dense_small_classes();
    let mut failures = Vec::new();
    for g in &classes {
        let n = g.order();
        match orient_bounded(g) {
            Ok(cert) if independent_diameter(&cert.orientation).is_some_and(|d| d <= n - 2) => {}
            Ok(cert) => failures.push(format!(
                "{:?}: certificate diameter {}",
                g.edges(),
                cert.diameter
            )),
            Err(e) => failures.push(format!("{:?}: {e}", g.edges())),
        }
    }
    ensure!(
        failures.is_empty(),
        "{} failures, first {}",
        failures.len(),
        failures[0]
    );
    Ok(format!("{} classes, zero failures", classes.len()))
}

fn criterion_2() -> Check {
    let mut instances: Vec<(String, UndirectedGraph, usize)> = (5..=8)
        .map(|n| (format!("H({n})"), build_h(n).unwrap().0, n - 2))
        .collect();
    for (n, d) in [(7, 5), (8, 5), (8, 6), (9, 5), (9, 6), (9, 7), (10, 5)] {
        instances.push((format!("G({n},{d})"), build_gnd(n, d).unwrap().0, d));
    }
    let mut largest = 0;
    for (name, g, d) in &instances {
        let cert = verify_lower_bound(g, *d).map_err(|e| format!("{name}: {e}"))?;
        ensure!(
            cert.is_valid(),
            "{name}: minimum {} does not exceed {d}",
            cert.minimum_diameter
        );
        ensure!(
            cert.orientations_examined == 1 << (g.size() - 1),
            "{name}: examined {}",
            cert.orientations_examined
        );
        ensure!(
            independent_diameter(&cert.witness) == cert.minimum_diameter.finite(),
            "{name}: witness does not attain the minimum"
        );
        largest = largest.max(cert.orientations_examined);
    }
    Ok(format!(
        "{} constructions valid, largest search {largest} orientations",
        instances.len()
    ))
}

fn criterion_3() -> Check {
    let five = sweep(5, &[3], &SweepOptions::default()).map_err(|e| e.to_string())?;
    let six = sweep(6, &[2, 4], &SweepOptions::default()).map_err(|e| e.to_string())?;
    let got = [five.threshold(3), six.threshold(4), six.threshold(2)];
    let want = [
        Threshold::Finite(8),
        Threshold::Finite(9),
        Threshold::Finite(14),
    ];
    ensure!(
        got == want.map(Some),
        "thresholds {got:?}, expected {want:?}"
    );
    Ok("m(5,3)=8, m(6,4)=9, m(6,2)=14".into())
}

fn criterion_4() -> Check {
    let report = sweep(6, &[3], &SweepOptions::default()).map_err(|e| e.to_string())?;
    let threshold = report.threshold(3).ok_or("no threshold for d=3")?;
    let verdict = report.verdict(3).ok_or("no verdict for d=3")?;
    let (text, witness) = match verdict {
        Verdict::Agrees { value, extremal } => (format!("agrees with {value}"), extremal.clone()),
        Verdict::UpperFails {
            conjectured,
            counterexample,
            ..
        } => (
            format!("exceeds {conjectured}"),
            Some(counterexample.clone()),
        ),
        Verdict::LowerFails {
            conjectured,
            largest_violator,
            ..
        } => (format!("below {conjectured}"), largest_violator.clone()),
    };
    let witness = witness.ok_or("verdict carries no witness")?;
    ensure!(
        independent_diameter(&witness.witness_orientation()) == witness.oriented_diameter.finite(),
        "witness orientation does not attain its recorded diameter"
    );
    Ok(format!(
        "m_empirical(6,3) = {threshold}, {text}; witness {} with {} edges and oriented diameter {}",
        witness.code,
        witness.size(),
        witness.oriented_diameter
    ))
}

fn with_forced_bridge(seed: u64) -> UndirectedGraph {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let a = rng.random_range(3..=6);
    let b = rng.random_range(3..=6);
    let left = random_bridgeless(a, 0.6, seed).unwrap();
    let right = random_bridgeless(b, 0.6, seed ^ 0x9e37).unwrap();
    let (u, v) = (rng.random_range(0..a), a + rng.random_range(0..b));
    let edges = left
        .edges()
        .iter()
        .copied()
        .chain(right.edges().iter().map(|&(x, y)| (x + a, y + a)))
        .chain([(u, v)]);
    UndirectedGraph::new(a + b, edges).unwrap()
}

fn criterion_5() -> Check {
    for seed in 0..200u64 {
        let n = 3 + (seed % 10) as usize;
        let g = random_bridgeless(n, 0.3 + 0.003 * seed as f64, seed).map_err(|e| e.to_string())?;
        let o = strong_orientation(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure!(
            independent_diameter(&o).is_some(),
            "seed {seed}: orientation not strong"
        );
    }
    for seed in 0..50u64 {
        let g = with_forced_bridge(seed);
        ensure!(
            matches!(strong_orientation(&g), Err(Error::Bridge(_))),
            "seed {seed}: bridged graph was oriented"
        );
    }
    let mut bridged = 0;
    for n in 2..=5usize {
        let pairs: Vec<Edge> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let g = UndirectedGraph::new(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap();
            if !is_connected(&g) || is_bridgeless(&g) {
                continue;
            }
            bridged += 1;
            for k in 0u32..1 << g.size() {
                let o = Orientation::from_directions(
                    g.clone(),
                    (0..g.size()).map(|i| k >> i & 1 == 0).collect(),
                )
                .unwrap();
                ensure!(
                    !is_strongly_connected(&o),
                    "bridged graph {:?} has a strong orientation",
                    g.edges()
                );
            }
        }
    }
    Ok(format!(
        "200 strong orientations, 50 bridge errors, {bridged} labeled bridged graphs exhausted"
    ))
}

/// Hamiltonicity by trying every vertex order starting at 0.
fn brute_hamiltonian(g: &UndirectedGraph) -> bool {
    fn extend(g: &UndirectedGraph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let n = g.order();
        if path.len() == n {
            return g.has_edge(path[n - 1], path[0]);
        }
        let last = *path.last().unwrap();
        for v in 0..n {
            if !used[v] && g.has_edge(last, v) {
                used[v] = true;
                path.push(v);
                if extend(g, path, used) {
                    return true;
                }
                path.pop();
                used[v] = false;
            }
        }
        false
    }
    let mut used = vec![false; g.order()];
    used[0] = true;
    extend(g, &mut vec![0], &mut used)
}

fn criterion_6() -> Check {
    let mut hamiltonian = 0;
    for n in 5..=6 {
        for g in enumerate_bridgeless(n).unwrap() {
            if g.size() < n + 3 {
                continue;
            }
            let search = find_hamiltonian_cycle(&g, u64::MAX);
            ensure!(
                matches!(search, HamiltonianSearch::Found(_)) == brute_hamiltonian(&g),
                "search and brute force disagree on {:?}",
                g.edges()
            );
            let HamiltonianSearch::Found(cycle) = search else {
                continue;
            };
            hamiltonian += 1;
            let frame = HamiltonianFrame::new(&g, cycle).map_err(|e| e.to_string())?;
            let o = orient_via_cycle(&g, &frame).map_err(|e| format!("{:?}: {e}", g.edges()))?;
            ensure!(
                independent_diameter(&o).is_some_and(|d| d <= n - 2),
                "{:?}: diameter above bound",
                g.edges()
            );
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    for case in 0..1000 {
        let n = rng.random_range(5..=8usize);
        let all: Vec<Edge> = (0..n)
            .flat_map(|i| (i + 2..n).map(move |j| (i, j)))
            .filter(|&(i, j)| j - i != n - 1)
            .collect();
        let k = rng.random_range(3..=all.len());
        let chosen: Vec<Edge> = rand::seq::index::sample(&mut rng, all.len(), k)
            .into_iter()
            .map(|i| all[i])
            .collect();
        ensure!(
            classify_chords(n, &chosen).is_ok(),
            "case {case}: no pattern for n={n} chords {chosen:?}"
        );
    }
    Ok(format!(
        "{hamiltonian} Hamiltonian classes oriented, 1000 chord sets classified"
    ))
}

fn long_path_instance(n: usize, chords: &[Edge]) -> Result<odiam::orient::LongPathFrame, String> {
    let g = UndirectedGraph::new(
        n,
        (0..n - 1).map(|i| (i, i + 1)).chain(chords.iter().copied()),
    )
    .unwrap();
    let arcs = (0..n - 1)
        .map(|i| (i, i + 1))
        .chain(chords.iter().map(|&(i, j)| (j, i)));
    let o = Orientation::from_arcs(g, arcs).unwrap();
    match build_long_path_frame_for(&o, 0, n - 1).map_err(|e| e.to_string())? {
        FrameOutcome::Frame(f) => Ok(f),
        other => Err(format!("expected a frame, got {other:?}")),
    }
}

fn criterion_7() -> Check {
    let instances: [(CaseTag, usize, &[Edge]); 6] = [
        (CaseTag::Overlap, 7, &[(0, 4), (2, 6), (1, 3), (3, 5)]),
        (
            CaseTag::DirectReturn,
            7,
            &[(0, 2), (1, 4), (1, 5), (2, 4), (4, 6)],
        ),
        (CaseTag::DirectReturn, 8, &[(0, 2), (2, 4), (2, 5), (5, 7)]),
        (
            CaseTag::ReturnFromInterior,
            8,
            &[(0, 2), (1, 3), (3, 6), (4, 7), (5, 7)],
        ),
        (CaseTag::ReturnWithRun, 8, &[(0, 2), (2, 4), (3, 5), (5, 7)]),
        (
            CaseTag::ReturnTwoJumps,
            8,
            &[(0, 2), (1, 3), (2, 4), (3, 5), (5, 7)],
        ),
    ];
    let mut critical = false;
    for (tag, n, chords) in instances {
        let f = long_path_instance(n, chords)?;
        let ret = if f.spans_overlap() {
            None
        } else {
            Some(find_return_path(&f).map_err(|e| e.to_string())?)
        };
        let c = apply_case(&f, ret.as_ref()).map_err(|e| format!("{}: {e}", tag.name()))?;
        ensure!(
            c.case == tag,
            "expected {}, got {}",
            tag.name(),
            c.case.name()
        );
        ensure!(
            independent_diameter(&c.orientation).is_some_and(|d| d <= n - 2),
            "{}: diameter above bound",
            tag.name()
        );
        if let Some(r) = &ret {
            critical |= tag == CaseTag::DirectReturn
                && (r.start(), r.end()) == (f.exit_head, f.entry_tail)
                && c.spares.len() == 1;
        }
    }
    ensure!(
        critical,
        "critical direct-return instance did not add its spare arc"
    );
    Ok("5 layouts verified including the spanning detour; no conflicts arose".into())
}

fn criterion_8() -> Check {
    let classes = dense_small_classes();
    for g in &classes {
        let cert = orient_bounded(g).map_err(|e| e.to_string())?;
        let od = oriented_diameter(g).map_err(|e| e.to_string())?;
        ensure!(
            od.diameter <= cert.diameter,
            "{:?}: oracle above certificate",
            g.edges()
        );
    }
    let mut checked = 0;
    let mut seed = 0u64;
    while checked < 100 {
        let n = 4 + (seed % 5) as usize;
        let g = random_bridgeless(n, 0.5, seed).map_err(|e| e.to_string())?;
        seed += 1;
        if g.size() > 16 {
            continue;
        }
        let fwd = diameter_profile(&g, true, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let bwd = diameter_profile(&g, false, DEFAULT_CAP).map_err(|e| e.to_string())?;
        ensure!(fwd == bwd, "profiles differ on {:?}", g.edges());
        checked += 1;
    }
    Ok(format!(
        "{} certificates dominated by the oracle, 100 reversal profiles equal",
        classes.len()
    ))
}

fn criterion_9() -> Check {
    let mut count = 0;
    for n in 5..=40 {
        ensure!(
            build_h(n).unwrap().0.size() == expected_size(Family::H, n, n - 2).unwrap(),
            "H({n}) size"
        );
        count += 1;
        for d in 5..=n.saturating_sub(2) {
            ensure!(
                build_gnd(n, d).unwrap().0.size() == expected_size(Family::Gnd, n, d).unwrap(),
                "G({n},{d}) size"
            );
            count += 1;
        }
    }
    for n in 7..=10 {
        ensure!(
            canonical_code(&build_gnd(n, n - 2).unwrap().0)
                == canonical_code(&build_h(n).unwrap().0),
            "codes differ at n={n}"
        );
    }
    Ok(format!("{count} sizes exact, codes coincide for n=7..10"))
}

fn exit_code(args: &[&str], env_cap: Option<&str>) -> Option<i32> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_odiam"));
    cmd.args(args).env_remove("ODIAM_CAP");
    if let Some(cap) = env_cap {
        cmd.env("ODIAM_CAP", cap);
    }
    cmd.output().ok()?.status.code()
}

fn criterion_10() -> Check {
    let mut graphs = dense_small_classes();
    graphs.extend((5..=8).map(|n| build_h(n).unwrap().0));
    for (n, d) in [(7, 5), (8, 5), (8, 6), (9, 5), (9, 6), (9, 7), (10, 5)] {
        graphs.push(build_gnd(n, d).unwrap().0);
    }
    graphs.push(UndirectedGraph::petersen());
    for g in &graphs {
        let text = serialize_edge_list(g);
        let back = parse_edge_list(&text).map_err(|e| e.to_string())?;
        ensure!(
            &back == g && serialize_edge_list(&back) == text,
            "edge list round trip failed"
        );
        let o = strong_orientation(g).map_err(|e| e.to_string())?;
        let arcs = serialize_arc_list(&o);
        let back = parse_arc_list(&arcs).map_err(|e| e.to_string())?;
        ensure!(
            back == o && serialize_arc_list(&back) == arcs,
            "arc list round trip failed"
        );
    }

    let dir = std::env::temp_dir().join(format!("odiam-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let c6 = dir.join("c6.txt");
    let k7 = dir.join("k7.txt");
    std::fs::write(
        &c6,
        serialize_edge_list(&UndirectedGraph::cycle(6).unwrap()),
    )
    .map_err(|e| e.to_string())?;
    std::fs::write(&k7, serialize_edge_list(&UndirectedGraph::complete(7)))
        .map_err(|e| e.to_string())?;
    let codes = [
        exit_code(&["verify-lower", "h", "--n", "5", "--d", "3"], None),
        exit_code(
            &[
                "orient",
                "/nonexistent/graph.txt",
                "-o",
                "/nonexistent/out.txt",
            ],
            None,
        ),
        exit_code(&["verify-lower", c6.to_str().unwrap(), "--d", "5"], None),
        exit_code(&["od", k7.to_str().unwrap()], Some("12")),
    ];
    let _ = std::fs::remove_dir_all(&dir);
    ensure!(
        codes == [Some(0), Some(1), Some(2), Some(3)],
        "exit codes {codes:?}"
    );
    Ok(format!(
        "{} graphs round-trip, exit codes 0/1/2/3 observed",
        graphs.len()
    ))
}

type Criterion = (&'static str, fn() -> Check, Duration);

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "threshold n+3 orients every dense class of order 5 and 6",
            criterion_1,
            Duration::from_secs(120),
        ),
        (
            "extremal constructions have no short orientation",
            criterion_2,
            Duration::from_secs(300),
        ),
        (
            "exact thresholds from the sweep",
            criterion_3,
            Duration::MAX,
        ),
        (
            "conjecture probe at order 6, d = 3",
            criterion_4,
            Duration::MAX,
        ),
        (
            "bridgeless iff strongly orientable",
            criterion_5,
            Duration::MAX,
        ),
        ("Hamiltonian chord patterns", criterion_6, Duration::MAX),
        ("long-path layouts", criterion_7, Duration::MAX),
        ("oracle consistency", criterion_8, Duration::MAX),
        (
            "construction sizes and isomorphism",
            criterion_9,
            Duration::MAX,
        ),
        ("formats and exit codes", criterion_10, Duration::MAX),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(format!(
                "panicked: {:?}",
                p.downcast_ref::<String>()
                    .map(String::as_str)
                    .or(p.downcast_ref::<&str>().copied())
            ))
        });
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > budget => {
                Err(format!("{detail}; took {elapsed:.1?}, budget {budget:.0?}"))
            }
            other => other,
        };
        match result {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {name}: {detail} ({elapsed:.2?})",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
