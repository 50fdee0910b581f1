//! Acceptance suite. Prints one line per criterion and exits non-zero if
//! any criterion fails.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use hangable::blocks::is_block_graph;
use hangable::embedding::{hangable_embedding, verify_induced_subgraph};
use hangable::explorer::smallest_hangable_power;
use hangable::graph::enumerate::{edge_slots, graph_count, graph_from_mask};
use hangable::graph::generators::grid;
use hangable::graph::random::random_block_graph;
use hangable::graph::{is_connected, to_graph6};
use hangable::metrics::{check_hangable_triples, TripleScan};
use hangable::products::{cartesian, corona, join, join_hangability_predicate, CartesianOracle, CoronaOracle};
use hangable::{check_hangable, DistanceMatrix, Graph, MetricProfile, Vertex};
use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn labeled_graphs(n: usize) -> impl ParallelIterator<Item = Graph> {
    let slots = edge_slots(n);
    (0..graph_count(n)).into_par_iter().map(move |mask| graph_from_mask(n, &slots, mask))
}

fn connected_graphs(n: usize) -> impl ParallelIterator<Item = Graph> {
    labeled_graphs(n).filter(is_connected)
}

/// One representative per isomorphism class, by minimal relabeled edge set.
fn class_representatives(n: usize, connected_only: bool) -> Vec<Graph> {
    let slots = edge_slots(n);
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for mask in 0..graph_count(n) {
        let g = graph_from_mask(n, &slots, mask);
        if connected_only && !is_connected(&g) {
            continue;
        }
        let canonical = (0..n)
            .permutations(n)
            .map(|p| {
                let mut edges: Vec<(Vertex, Vertex)> =
                    g.edges().map(|(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
                edges.sort_unstable();
                edges
            })
            .min()
            .unwrap_or_default();
        if seen.insert(canonical) {
            reps.push(g);
        }
    }
    reps
}

fn hangable(g: &Graph) -> bool {
    check_hangable(g).expect("connected input").hangable
}

fn labeled(n: usize, edges: &[(Vertex, Vertex)], labels: &str) -> Graph {
    Graph::from_edge_list(n, edges.iter().copied())
        .unwrap()
        .with_labels(labels.split_whitespace())
        .unwrap()
}

fn golden_values() -> Outcome {
    let g = labeled(5, &[(0, 1), (0, 3), (1, 3), (1, 2), (2, 3), (2, 4)], "a b c d e");
    let dm = DistanceMatrix::new(&g).map_err(|e| e.to_string())?;
    let profile = MetricProfile::from_distances(&dm);
    let by_name = |names: &[&str]| -> Vec<Vertex> { names.iter().map(|s| g.vertex_by_label(s).unwrap()).collect() };
    let expected = [
        by_name(&["e"]),
        by_name(&["e"]),
        by_name(&["a"]),
        by_name(&["e"]),
        by_name(&["a"]),
    ];
    ensure(profile.vertex_periphery == expected, || {
        format!("vertex peripheries {:?}", profile.vertex_periphery)
    })?;
    ensure(profile.graph_periphery == by_name(&["a", "e"]), || {
        format!("graph periphery {:?}", profile.graph_periphery)
    })?;
    ensure(profile.eccentricity == [3, 2, 2, 2, 3], || format!("eccentricities {:?}", profile.eccentricity))?;
    ensure(hangable(&g), || "G reported non-hangable".into())?;

    let h = labeled(4, &[(0, 1), (0, 3), (1, 3), (1, 2), (2, 3)], "a b c d");
    let hdm = DistanceMatrix::new(&h).unwrap();
    let report = check_hangable(&h).unwrap();
    let triples = check_hangable_triples(&h, TripleScan::FirstViolation).unwrap();
    ensure(!report.hangable && report.witness.is_some() && report.revalidate(&hdm), || {
        format!("H report {report:?}")
    })?;
    ensure(!triples.hangable && triples.triple_witness.is_some() && triples.revalidate(&hdm), || {
        format!("H triple report {triples:?}")
    })?;

    let best = (0..200)
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(check_hangable(std::hint::black_box(&g)).unwrap());
            start.elapsed()
        })
        .min()
        .unwrap();
    ensure(best < Duration::from_millis(1), || format!("check took {best:?}"))?;
    Ok(format!("G hangable, P(G)={{a,e}}, H witness revalidated, {best:?} per check"))
}

fn block_graphs() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for n in 1..=7 {
        let (count, failures) = connected_graphs(n)
            .filter(|g| is_block_graph(g).unwrap())
            .map(|g| (1usize, usize::from(!hangable(&g))))
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
        ensure(failures == 0, || format!("{failures} non-hangable block graphs on {n} vertices"))?;
        total += count;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..500 {
        let g = random_block_graph(40, &mut rng);
        ensure(is_block_graph(&g).unwrap() && hangable(&g), || {
            format!("random block graph #{i} failed: {}", to_graph6(&g))
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{total} labeled block graphs n<=7 and 500 random ones hangable in {elapsed:.1?}"))
}

fn checker_agreement() -> Outcome {
    let mut total = 0;
    for n in 1..=7 {
        let (count, mismatches) = connected_graphs(n)
            .map(|g| {
                let direct = hangable(&g);
                let triple = check_hangable_triples(&g, TripleScan::FirstViolation).unwrap().hangable;
                (1usize, usize::from(direct != triple))
            })
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
        ensure(mismatches == 0, || format!("{mismatches} disagreements on {n} vertices"))?;
        total += count;
    }
    Ok(format!("{total} connected labeled graphs, zero disagreements"))
}

fn corona_mismatch(g: &Graph, h: &Graph) -> Option<String> {
    let (p, _) = corona(g, h);
    let describe = |what: &str| Some(format!("{what} for g={} h={}", to_graph6(g), to_graph6(h)));
    if hangable(&p) != hangable(g) {
        return describe("hangability");
    }
    if h.vertex_count() == 0 {
        return None;
    }
    let oracle = CoronaOracle::for_factors(g, h).unwrap();
    let dm = DistanceMatrix::new(&p).unwrap();
    let profile = MetricProfile::from_distances(&dm);
    let n = p.vertex_count();
    if (0..n).any(|a| (0..n).any(|b| oracle.distance(a, b) != dm.get(a, b))) {
        return describe("distance");
    }
    if oracle.diameter() != profile.diameter {
        return describe("diameter");
    }
    if (0..n).any(|a| oracle.vertex_periphery(a) != profile.vertex_periphery[a]) {
        return describe("vertex periphery");
    }
    if oracle.graph_periphery() != profile.graph_periphery {
        return describe("graph periphery");
    }
    None
}

fn corona_products() -> Outcome {
    let start = Instant::now();
    let hs: Vec<Graph> = (0..=3).flat_map(|n| labeled_graphs(n).collect::<Vec<_>>()).collect();
    let mut pairs = 0;
    for n in 2..=5 {
        let gs: Vec<Graph> = connected_graphs(n).collect();
        if let Some(m) = gs.par_iter().find_map_any(|g| hs.iter().find_map(|h| corona_mismatch(g, h))) {
            return Err(m);
        }
        pairs += gs.len() * hs.len();
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok(format!("{pairs} labeled factor pairs, zero mismatches in {elapsed:.1?}"))
}

fn cartesian_mismatch(g: &Graph, h: &Graph) -> Option<String> {
    let (p, _) = cartesian(g, h);
    let describe = |what: &str| Some(format!("{what} for g={} h={}", to_graph6(g), to_graph6(h)));
    let oracle = CartesianOracle::for_factors(g, h).unwrap();
    let dm = DistanceMatrix::new(&p).unwrap();
    let profile = MetricProfile::from_distances(&dm);
    let n = p.vertex_count();
    if (0..n).any(|a| (0..n).any(|b| oracle.distance(a, b) != dm.get(a, b))) {
        return describe("distance");
    }
    if (0..n).any(|a| oracle.eccentricity(a) != profile.eccentricity[a]) {
        return describe("eccentricity");
    }
    if oracle.diameter() != profile.diameter {
        return describe("diameter");
    }
    if (0..n).any(|a| oracle.vertex_periphery(a) != profile.vertex_periphery[a]) {
        return describe("vertex periphery");
    }
    if oracle.graph_periphery() != profile.graph_periphery {
        return describe("graph periphery");
    }
    let both = hangable(g) && hangable(h);
    if both != hangable(&p) {
        return describe("hangability");
    }
    None
}

fn cartesian_products() -> Outcome {
    let factors: Vec<Graph> = (1..=5).flat_map(|n| class_representatives(n, true)).collect();
    if let Some(m) = factors
        .par_iter()
        .find_map_any(|g| factors.iter().find_map(|h| cartesian_mismatch(g, h)))
    {
        return Err(m);
    }
    for m in 1..=8 {
        for n in 1..=8 {
            ensure(hangable(&grid(m, n).unwrap()), || format!("grid {m}x{n} not hangable"))?;
        }
    }
    Ok(format!(
        "{} factor pairs over all connected classes n<=5, grids up to 8x8 hangable",
        factors.len() * factors.len()
    ))
}

fn join_products() -> Outcome {
    let factors: Vec<Graph> = (1..=5).flat_map(|n| class_representatives(n, false)).collect();
    let mismatch = factors.par_iter().find_map_any(|g| {
        factors.iter().find_map(|h| {
            let (p, _) = join(g, h);
            (join_hangability_predicate(g, h) != hangable(&p))
                .then(|| format!("g={} h={}", to_graph6(g), to_graph6(h)))
        })
    });
    if let Some(m) = mismatch {
        return Err(m);
    }
    Ok(format!("{} factor pairs over all classes n<=5, zero mismatches", factors.len() * factors.len()))
}

fn embeddings() -> Outcome {
    let mut total = 0;
    for n in 0..=6 {
        let failure = labeled_graphs(n).find_map_any(|h| {
            let r = hangable_embedding(&h);
            let ok = r.supergraph.vertex_count() <= n + 1
                && hangable(&r.supergraph)
                && verify_induced_subgraph(&r.supergraph, &h, &r.injection).unwrap();
            (!ok).then(|| to_graph6(&h))
        });
        if let Some(h) = failure {
            return Err(format!("embedding failed for {h}"));
        }
        total += graph_count(n);
    }
    Ok(format!("{total} labeled graphs n<=6 embedded"))
}

fn powers() -> Outcome {
    let mut total = 0;
    for n in 1..=7 {
        let (count, failure) = connected_graphs(n)
            .map(|g| {
                let k = smallest_hangable_power(&g).unwrap();
                let diameter = DistanceMatrix::new(&g).unwrap().max_entry() as usize;
                let ok = k <= diameter.max(1) && (k == 1) == hangable(&g);
                (1usize, (!ok).then(|| format!("{} gave k={k}, diameter {diameter}", to_graph6(&g))))
            })
            .reduce(|| (0, None), |a, b| (a.0 + b.0, a.1.or(b.1)));
        if let Some(m) = failure {
            return Err(m);
        }
        total += count;
    }
    Ok(format!("{total} connected labeled graphs n<=7"))
}

fn run_cli(args: &[&str], stdin: &[u8]) -> (Vec<u8>, Option<i32>) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hangable"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("spawn binary");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.stdout, out.status.code())
}

fn determinism() -> Outcome {
    let edge_list = b"5 6\n# labels: a b c d e\n0 1\n0 3\n1 3\n1 2\n2 3\n2 4\n";
    let mut corpus = String::new();
    for n in 1..=5 {
        for g in labeled_graphs(n).collect::<Vec<_>>() {
            corpus += &to_graph6(&g);
            corpus.push('\n');
        }
    }
    corpus += "not graph6 at all\n";
    let runs: [(&[&str], &[u8]); 4] = [
        (&["analyze", "-"], edge_list),
        (&["analyze", "-", "--format", "structured"], edge_list),
        (&["classify"], corpus.as_bytes()),
        (&["classify", "--format", "structured"], corpus.as_bytes()),
    ];
    for (args, input) in runs {
        let first = run_cli(args, input);
        let second = run_cli(args, input);
        ensure(first == second, || format!("`{}` differed between runs", args.join(" ")))?;
        ensure(first.1 == Some(0) && !first.0.is_empty(), || {
            format!("`{}` exited with {:?}", args.join(" "), first.1)
        })?;
    }
    let (text, _) = run_cli(&["analyze", "-"], edge_list);
    let text = String::from_utf8(text).unwrap();
    ensure(text.contains("graph periphery: {a,e}\n") && text.contains("hangable: yes\n"), || {
        format!("unexpected analyze output:\n{text}")
    })?;
    Ok(format!("analyze and classify byte-identical over {} input lines", corpus.lines().count()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("golden values and witness", golden_values),
        ("block graphs are hangable", block_graphs),
        ("dual checkers agree", checker_agreement),
        ("corona oracle and hangability", corona_products),
        ("cartesian oracle, hangability, grids", cartesian_products),
        ("join predicate", join_products),
        ("hangable embedding", embeddings),
        ("smallest hangable power", powers),
        ("cli determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
        failed += usize::from(outcome.is_err());
        let detail = outcome.unwrap_or_else(|e| e);
        println!("criterion {} {name:<38} {status}  {detail} [{:.2?}]", i + 1, start.elapsed());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
