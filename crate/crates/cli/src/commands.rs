use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};

use hangable::blocks::biconnected_components;
use hangable::embedding::{hangable_embedding, verify_induced_subgraph};
use hangable::explorer::{
    classify_stream, record_header, record_row, search_hangable_subgraphs, smallest_hangable_power, SubgraphMode,
};
use hangable::graph::generators::Family;
use hangable::graph::{power, to_graph6};
use hangable::metrics::{check_hangable_profile, check_hangable_triples_with, TripleScan};
use hangable::products::{cartesian, corona, join, join_hangability_predicate, CartesianOracle, CoronaOracle};
use hangable::{check_hangable, DistanceMatrix, Graph, MetricProfile, Vertex};
use serde::Serialize;

use crate::input::{load, Source};
use crate::output::{graph_text, json, names, no_graph6, set, yes_no, GraphJson};
use crate::{Cli, CliError, Command, Format, ModeArg, ProductArg, EXIT_NOT_HANGABLE, EXIT_REFUSED};

type CmdResult = Result<u8, CliError>;

pub fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Analyze { input } => analyze(cli, input),
        Command::Product { kind, g, h, oracle_check } => product(cli, *kind, g, h, *oracle_check),
        Command::Embed { input } => embed(cli, input),
        Command::Power { input, k, smallest } => power_cmd(cli, input, *k, *smallest),
        Command::Blocks { input } => blocks(cli, input),
        Command::Classify { input } => classify(cli, input),
        Command::Generate { family, params } => generate(cli, family, params),
        Command::SubgraphSearch { host, max, mode, emit } => subgraph_search(cli, host, *max, *mode, *emit),
    }
}

fn emit(text: &str) -> Result<(), CliError> {
    let mut stdout = io::stdout().lock();
    match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

#[derive(Serialize)]
struct VertexJson {
    id: Vertex,
    label: String,
    eccentricity: u32,
    periphery: Vec<String>,
}

#[derive(Serialize)]
struct WitnessJson {
    vertex: String,
    farthest: String,
}

#[derive(Serialize)]
struct TripleJson {
    v: String,
    u: String,
    w: String,
    distance: u32,
}

#[derive(Serialize)]
struct AnalyzeJson {
    order: usize,
    size: usize,
    vertices: Vec<VertexJson>,
    diameter: u32,
    radius: u32,
    graph_periphery: Vec<String>,
    self_centered: bool,
    hangable: bool,
    witness: Option<WitnessJson>,
    triple_witness: Option<TripleJson>,
}

fn analyze(cli: &Cli, input: &str) -> CmdResult {
    if cli.format == Format::Graph6 {
        return Err(no_graph6("analyze"));
    }
    let g = load(input)?;
    let dm = DistanceMatrix::new(&g)?;
    let profile = MetricProfile::from_distances(&dm);
    let direct = check_hangable_profile(&profile);
    let triples = check_hangable_triples_with(&dm, TripleScan::FirstViolation);
    if direct.hangable != triples.hangable || !direct.revalidate(&dm) || !triples.revalidate(&dm) {
        return Err(CliError::refused("internal error: hangability checkers disagree"));
    }
    let hangable = direct.hangable;
    let code = if hangable { 0 } else { EXIT_NOT_HANGABLE };
    if cli.quiet {
        return Ok(code);
    }

    let witness = direct.witness.map(|w| WitnessJson {
        vertex: g.label(w.vertex),
        farthest: g.label(w.farthest),
    });
    let triple = triples.triple_witness.map(|t| TripleJson {
        v: g.label(t.v),
        u: g.label(t.u),
        w: g.label(t.w),
        distance: dm.get(t.u, t.w),
    });

    let text = match cli.format {
        Format::Structured => json(&AnalyzeJson {
            order: g.vertex_count(),
            size: g.edge_count(),
            vertices: g
                .vertices()
                .map(|v| VertexJson {
                    id: v,
                    label: g.label(v),
                    eccentricity: profile.eccentricity[v],
                    periphery: names(&g, &profile.vertex_periphery[v]),
                })
                .collect(),
            diameter: profile.diameter,
            radius: profile.radius,
            graph_periphery: names(&g, &profile.graph_periphery),
            self_centered: profile.is_self_centered(),
            hangable,
            witness,
            triple_witness: triple,
        }),
        _ => {
            let mut out = format!("order: {}\nsize: {}\n", g.vertex_count(), g.edge_count());
            let ecc: Vec<String> = g.vertices().map(|v| format!("{}={}", g.label(v), profile.eccentricity[v])).collect();
            out += &format!("eccentricity: {}\n", ecc.join(" "));
            out += &format!("diameter: {}\nradius: {}\n", profile.diameter, profile.radius);
            for v in g.vertices() {
                out += &format!("periphery({}): {}\n", g.label(v), set(&g, &profile.vertex_periphery[v]));
            }
            out += &format!("graph periphery: {}\n", set(&g, &profile.graph_periphery));
            out += &format!("self-centered: {}\n", yes_no(profile.is_self_centered()));
            out += &format!("hangable: {}\n", yes_no(hangable));
            if let Some(w) = witness {
                out += &format!("witness: v={} u={} (u is farthest from v but not peripheral)\n", w.vertex, w.farthest);
            }
            if let Some(t) = triple {
                out += &format!(
                    "triple witness: v={} u={} w={} (d(u,w)={} < diameter {})\n",
                    t.v, t.u, t.w, t.distance, profile.diameter
                );
            }
            out
        }
    };
    emit(&text)?;
    Ok(code)
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
enum Outcome {
    Pass,
    Fail { detail: String },
    Skip { reason: String },
}

#[derive(Serialize)]
struct OracleLine {
    statement: &'static str,
    #[serde(flatten)]
    outcome: Outcome,
}

fn compare<T: PartialEq + std::fmt::Debug>(
    ids: usize,
    what: &str,
    oracle: impl Fn(Vertex) -> T,
    truth: impl Fn(Vertex) -> T,
) -> Outcome {
    for id in 0..ids {
        let (a, b) = (oracle(id), truth(id));
        if a != b {
            return Outcome::Fail {
                detail: format!("{what} of vertex {id}: oracle {a:?}, BFS {b:?}"),
            };
        }
    }
    Outcome::Pass
}

fn compare_distances(n: usize, oracle: impl Fn(Vertex, Vertex) -> u32, truth: &DistanceMatrix) -> Outcome {
    for p in 0..n {
        for q in 0..n {
            if oracle(p, q) != truth.get(p, q) {
                return Outcome::Fail {
                    detail: format!("d({p},{q}): oracle {}, BFS {}", oracle(p, q), truth.get(p, q)),
                };
            }
        }
    }
    Outcome::Pass
}

fn diameter_outcome(oracle: u32, truth: u32) -> Outcome {
    if oracle == truth {
        Outcome::Pass
    } else {
        Outcome::Fail {
            detail: format!("oracle {oracle}, BFS {truth}"),
        }
    }
}

fn skip_all(statements: &[&'static str], reason: String) -> Vec<OracleLine> {
    statements
        .iter()
        .map(|&statement| OracleLine {
            statement,
            outcome: Outcome::Skip { reason: reason.clone() },
        })
        .collect()
}

fn oracle_check(kind: ProductArg, g: &Graph, h: &Graph, product: &Graph) -> Vec<OracleLine> {
    match kind {
        ProductArg::Corona => {
            const STATEMENTS: [&str; 4] = ["distance", "diameter", "vertex-periphery", "graph-periphery"];
            let oracle = match CoronaOracle::for_factors(g, h) {
                Ok(o) => o,
                Err(e) => return skip_all(&STATEMENTS, e.to_string()),
            };
            let truth = match DistanceMatrix::new(product) {
                Ok(t) => t,
                Err(e) => return skip_all(&STATEMENTS, e.to_string()),
            };
            let profile = MetricProfile::from_distances(&truth);
            let n = product.vertex_count();
            let outcomes = [
                compare_distances(n, |p, q| oracle.distance(p, q), &truth),
                diameter_outcome(oracle.diameter(), profile.diameter),
                compare(n, "periphery", |p| oracle.vertex_periphery(p), |p| profile.vertex_periphery[p].clone()),
                compare(1, "graph periphery", |_| oracle.graph_periphery(), |_| profile.graph_periphery.clone()),
            ];
            STATEMENTS.iter().zip(outcomes).map(|(&statement, outcome)| OracleLine { statement, outcome }).collect()
        }
        ProductArg::Cartesian => {
            const STATEMENTS: [&str; 5] = ["distance", "eccentricity", "diameter", "vertex-periphery", "graph-periphery"];
            let oracle = match CartesianOracle::for_factors(g, h) {
                Ok(o) => o,
                Err(e) => return skip_all(&STATEMENTS, e.to_string()),
            };
            let truth = DistanceMatrix::new(product).expect("product of connected factors is connected");
            let profile = MetricProfile::from_distances(&truth);
            let n = product.vertex_count();
            let outcomes = [
                compare_distances(n, |p, q| oracle.distance(p, q), &truth),
                compare(n, "eccentricity", |p| oracle.eccentricity(p), |p| profile.eccentricity[p]),
                diameter_outcome(oracle.diameter(), profile.diameter),
                compare(n, "periphery", |p| oracle.vertex_periphery(p), |p| profile.vertex_periphery[p].clone()),
                compare(1, "graph periphery", |_| oracle.graph_periphery(), |_| profile.graph_periphery.clone()),
            ];
            STATEMENTS.iter().zip(outcomes).map(|(&statement, outcome)| OracleLine { statement, outcome }).collect()
        }
        ProductArg::Join => {
            let outcome = match check_hangable(product) {
                Ok(report) => {
                    let predicted = join_hangability_predicate(g, h);
                    if predicted == report.hangable {
                        Outcome::Pass
                    } else {
                        Outcome::Fail {
                            detail: format!("predicate {predicted}, BFS {}", report.hangable),
                        }
                    }
                }
                Err(e) => Outcome::Skip { reason: e.to_string() },
            };
            vec![OracleLine {
                statement: "hangability",
                outcome,
            }]
        }
    }
}

#[derive(Serialize)]
struct MapEntry {
    id: Vertex,
    vertex: String,
}

#[derive(Serialize)]
struct ProductJson {
    kind: String,
    graph: GraphJson,
    vertex_map: Vec<MapEntry>,
    oracle: Option<Vec<OracleLine>>,
}

fn product(cli: &Cli, kind: ProductArg, g_arg: &str, h_arg: &str, check: bool) -> CmdResult {
    if g_arg == "-" && h_arg == "-" {
        return Err(CliError::input("only one product factor may come from stdin"));
    }
    let g = load(g_arg)?;
    let h = load(h_arg)?;
    let (p, map) = match kind {
        ProductArg::Corona => corona(&g, &h),
        ProductArg::Cartesian => cartesian(&g, &h),
        ProductArg::Join => join(&g, &h),
    };
    let lines = check.then(|| oracle_check(kind, &g, &h, &p));
    let code = match &lines {
        Some(lines) if lines.iter().any(|l| matches!(l.outcome, Outcome::Fail { .. })) => EXIT_NOT_HANGABLE,
        Some(lines) if lines.iter().any(|l| matches!(l.outcome, Outcome::Skip { .. })) => EXIT_REFUSED,
        _ => 0,
    };

    let text = match cli.format {
        Format::Structured => json(&ProductJson {
            kind: map.kind().to_string(),
            graph: GraphJson::new(&p),
            vertex_map: (0..map.len()).map(|id| MapEntry { id, vertex: map.describe(id) }).collect(),
            oracle: lines,
        }),
        format => {
            let mut out = graph_text(&p, format);
            if !cli.quiet {
                if format == Format::Text {
                    out += "vertex map:\n";
                    out += &map.render();
                }
                if let Some(lines) = &lines {
                    for line in lines {
                        out += &match &line.outcome {
                            Outcome::Pass => format!("PASS {}\n", line.statement),
                            Outcome::Fail { detail } => format!("FAIL {}: {detail}\n", line.statement),
                            Outcome::Skip { reason } => format!("SKIP {}: {reason}\n", line.statement),
                        };
                    }
                }
            }
            out
        }
    };
    emit(&text)?;
    Ok(code)
}

#[derive(Serialize)]
struct InjectionEntry {
    vertex: String,
    image: Vertex,
}

#[derive(Serialize)]
struct EmbedJson {
    branch: &'static str,
    added_vertex: Option<Vertex>,
    supergraph: GraphJson,
    injection: Vec<InjectionEntry>,
    verified: bool,
}

fn embed(cli: &Cli, input: &str) -> CmdResult {
    let h = load(input)?;
    let result = hangable_embedding(&h);
    let verified = check_hangable(&result.supergraph)?.hangable
        && verify_induced_subgraph(&result.supergraph, &h, &result.injection)?;
    let injection: Vec<InjectionEntry> = h
        .vertices()
        .map(|v| InjectionEntry {
            vertex: h.label(v),
            image: result.injection[v],
        })
        .collect();
    let text = match cli.format {
        Format::Structured => json(&EmbedJson {
            branch: result.branch.name(),
            added_vertex: result.added_vertex(),
            supergraph: GraphJson::new(&result.supergraph),
            injection,
            verified,
        }),
        Format::Graph6 => format!("{}\n", to_graph6(&result.supergraph)),
        Format::Text if cli.quiet => graph_text(&result.supergraph, Format::Text),
        Format::Text => {
            let mut out = format!("branch: {}\n", result.branch.name());
            out += &format!(
                "added vertex: {}\n",
                result.added_vertex().map_or("none".to_string(), |v| result.supergraph.label(v))
            );
            out += &format!("verified: {}\n", yes_no(verified));
            out += "supergraph:\n";
            out += &graph_text(&result.supergraph, Format::Text);
            out += "injection:\n";
            for entry in &injection {
                out += &format!("{} ↦ {}\n", entry.vertex, entry.image);
            }
            out
        }
    };
    emit(&text)?;
    Ok(if verified { 0 } else { EXIT_NOT_HANGABLE })
}

fn power_cmd(cli: &Cli, input: &str, k: Option<usize>, smallest: bool) -> CmdResult {
    let g = load(input)?;
    if smallest {
        let k = smallest_hangable_power(&g)?;
        let text = match cli.format {
            Format::Structured => json(&serde_json::json!({ "smallest_hangable_power": k })),
            Format::Graph6 => return Err(no_graph6("power --smallest")),
            Format::Text => format!("k = {k}\n"),
        };
        emit(&text)?;
        return Ok(0);
    }
    let k = k.ok_or_else(|| CliError::input("give --k or --smallest"))?;
    let gk = power(&g, k)?;
    let text = match cli.format {
        Format::Structured => json(&GraphJson::new(&gk)),
        format => graph_text(&gk, format),
    };
    emit(&text)?;
    Ok(0)
}

#[derive(Serialize)]
struct BlocksJson {
    blocks: Vec<Vec<String>>,
    cut_vertices: Vec<String>,
}

fn blocks(cli: &Cli, input: &str) -> CmdResult {
    let g = load(input)?;
    let decomposition = biconnected_components(&g)?;
    let text = match cli.format {
        Format::Structured => json(&BlocksJson {
            blocks: decomposition.blocks.iter().map(|b| names(&g, b)).collect(),
            cut_vertices: names(&g, &decomposition.cut_vertices),
        }),
        Format::Graph6 => return Err(no_graph6("blocks")),
        Format::Text => decomposition.render(&g),
    };
    emit(&text)?;
    Ok(0)
}

fn classify(cli: &Cli, input: &str) -> CmdResult {
    if cli.format == Format::Graph6 {
        return Err(no_graph6("classify"));
    }
    let lines: Box<dyn Iterator<Item = io::Result<String>>> = match Source::parse(input) {
        Source::Stdin => Box::new(io::stdin().lock().lines()),
        Source::File(path) => {
            let file = File::open(&path).map_err(|e| CliError::input(format!("reading {path}: {e}")))?;
            Box::new(BufReader::new(file).lines())
        }
        Source::Inline(code) => Box::new(std::iter::once(Ok(code))),
        Source::Generator(family) => Box::new(std::iter::once(Ok(to_graph6(&family.build()?)))),
    };

    let mut out = BufWriter::new(io::stdout().lock());
    let structured = cli.format == Format::Structured;
    if !structured {
        writeln!(out, "{}", record_header())?;
    }
    let result = classify_stream(lines, |record| {
        if structured {
            let line = serde_json::to_string(&record).map_err(io::Error::other)?;
            writeln!(out, "{line}")
        } else {
            writeln!(out, "{}", record_row(&record))
        }
    });
    let flushed = out.flush();
    match (result, flushed) {
        (Err(e), _) | (_, Err(e)) if e.kind() == io::ErrorKind::BrokenPipe => Ok(0),
        (Err(e), _) | (_, Err(e)) => Err(e.into()),
        _ => Ok(0),
    }
}

fn generate(cli: &Cli, family: &str, params: &[usize]) -> CmdResult {
    let g = Family::from_parts(family, params)?.build()?;
    let text = match cli.format {
        Format::Structured => json(&GraphJson::new(&g)),
        format => graph_text(&g, format),
    };
    emit(&text)?;
    Ok(0)
}

fn subgraph_search(cli: &Cli, host: &str, max: usize, mode: ModeArg, collect: bool) -> CmdResult {
    if cli.format == Format::Graph6 {
        return Err(no_graph6("subgraph-search"));
    }
    let g = load(host)?;
    let mode = match mode {
        ModeArg::Induced => SubgraphMode::Induced,
        ModeArg::ConnectedInduced => SubgraphMode::ConnectedInduced,
    };
    let report = search_hangable_subgraphs(&g, max, mode, cli.budget, collect)?;
    if cli.quiet {
        return Ok(0);
    }
    let text = match cli.format {
        Format::Structured => json(&report),
        _ => {
            let induced = mode == SubgraphMode::Induced;
            let mut out = format!("mode: {}\n", if induced { "induced" } else { "connected-induced" });
            out += if induced { "size\tsubsets\tconnected\thangable\n" } else { "size\tconnected\thangable\n" };
            for c in &report.per_size {
                out += &if induced {
                    format!("{}\t{}\t{}\t{}\n", c.size, c.subsets, c.connected, c.hangable)
                } else {
                    format!("{}\t{}\t{}\n", c.size, c.connected, c.hangable)
                };
            }
            for found in &report.hangable {
                out += &format!("hangable: {} {}\n", set(&g, &found.vertices), found.graph6);
            }
            out
        }
    };
    emit(&text)?;
    Ok(0)
}
