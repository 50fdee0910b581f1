//! Batch classification and brute-force probes: complements, powers,
//! self-complementarity, and hangable induced subgraphs of a host graph.

use std::io;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::blocks::{is_block_graph, is_tree};
use crate::error::{GraphError, Result};
use crate::graph::ops::require_connected;
use crate::graph::{complement, from_graph6, induced_subgraph, is_connected, power, to_graph6, Graph, Vertex};
use crate::metrics::{check_hangable, check_hangable_profile, DistanceMatrix, MetricProfile};

/// Largest order for which self-complementarity is searched.
pub const SELF_COMPLEMENT_MAX_ORDER: usize = 8;

/// Default cap on the number of vertex subsets a subgraph search visits.
pub const DEFAULT_SUBSET_BUDGET: u128 = 10_000_000;

/// Lines classified per parallel batch in [`classify_stream`].
const STREAM_BATCH: usize = 1024;

/// Per-graph record. Metric fields are `None` when the graph is empty or
/// disconnected, with the reason in `note`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub order: usize,
    pub size: usize,
    pub connected: bool,
    pub hangable: Option<bool>,
    pub self_centered: Option<bool>,
    pub block_graph: Option<bool>,
    pub tree: Option<bool>,
    pub diameter: Option<u32>,
    pub radius: Option<u32>,
    pub periphery_size: Option<usize>,
    /// Only when the complement is connected and nonempty.
    pub complement_hangable: Option<bool>,
    /// Only up to [`SELF_COMPLEMENT_MAX_ORDER`] vertices.
    pub self_complementary: Option<bool>,
    pub smallest_hangable_power: Option<usize>,
    pub note: Option<String>,
}

pub fn classify_graph(g: &Graph) -> Classification {
    let n = g.vertex_count();
    let connected = is_connected(g);
    let mut record = Classification {
        order: n,
        size: g.edge_count(),
        connected,
        hangable: None,
        self_centered: None,
        block_graph: None,
        tree: None,
        diameter: None,
        radius: None,
        periphery_size: None,
        complement_hangable: None,
        self_complementary: (n <= SELF_COMPLEMENT_MAX_ORDER).then(|| is_self_complementary(g)),
        smallest_hangable_power: None,
        note: None,
    };

    let co = complement(g);
    if n > 0 && is_connected(&co) {
        record.complement_hangable = check_hangable(&co).ok().map(|r| r.hangable);
    }

    if n == 0 {
        record.note = Some("empty graph".into());
        return record;
    }
    if !connected {
        record.note = Some("disconnected: metric fields undefined".into());
        return record;
    }

    let dm = DistanceMatrix::new(g).expect("connected and nonempty");
    let profile = MetricProfile::from_distances(&dm);
    let hangable = check_hangable_profile(&profile).hangable;
    record.hangable = Some(hangable);
    record.self_centered = Some(profile.is_self_centered());
    record.block_graph = is_block_graph(g).ok();
    record.tree = is_tree(g).ok();
    record.diameter = Some(profile.diameter);
    record.radius = Some(profile.radius);
    record.periphery_size = Some(profile.graph_periphery.len());
    record.smallest_hangable_power = if hangable {
        Some(1)
    } else {
        smallest_hangable_power(g).ok()
    };
    record
}

/// Label-respecting search for a permutation mapping `g` onto its
/// complement. Meant for small orders; cost grows as `n!`.
pub fn is_self_complementary(g: &Graph) -> bool {
    let n = g.vertex_count();
    let pairs = n * n.saturating_sub(1) / 2;
    if !pairs.is_multiple_of(2) || g.edge_count() * 2 != pairs {
        return false;
    }
    let co = complement(g);
    let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut co_degrees: Vec<usize> = co.vertices().map(|v| co.degree(v)).collect();
    degrees.sort_unstable();
    co_degrees.sort_unstable();
    if degrees != co_degrees {
        return false;
    }
    (0..n).permutations(n).any(|perm| {
        g.vertices()
            .all(|u| co.degree(perm[u]) == g.degree(u) && g.neighbors(u).iter().all(|&v| co.has_edge(perm[u], perm[v])))
    })
}

/// Least `k >= 1` with `G^k` hangable. At most the diameter, since `G^d`
/// is complete.
pub fn smallest_hangable_power(g: &Graph) -> Result<usize> {
    require_connected(g)?;
    let dm = DistanceMatrix::new(g)?;
    let diameter = dm.max_entry() as usize;
    for k in 1..=diameter.max(1) {
        let gk = if k == 1 { g.clone() } else { power(g, k)? };
        if check_hangable(&gk)?.hangable {
            return Ok(k);
        }
    }
    unreachable!("the diameter-th power is complete and therefore hangable")
}

/// Output of [`classify_stream`], one per input line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum StreamRecord {
    Ok {
        index: usize,
        graph6: String,
        classification: Classification,
    },
    Error {
        index: usize,
        message: String,
    },
}

impl StreamRecord {
    pub fn index(&self) -> usize {
        match self {
            StreamRecord::Ok { index, .. } | StreamRecord::Error { index, .. } => *index,
        }
    }
}

fn classify_line(index: usize, line: &str) -> StreamRecord {
    let code = line.trim_end_matches(['\n', '\r']);
    match from_graph6(code) {
        Ok(g) => StreamRecord::Ok {
            index,
            graph6: to_graph6(&g),
            classification: classify_graph(&g),
        },
        Err(e) => StreamRecord::Error {
            index,
            message: e.to_string(),
        },
    }
}

/// Classifies graph6 lines in parallel batches and hands records to `sink`
/// in input order. Malformed lines become error records. An input error
/// stops the stream after the lines already read have been emitted.
/// Returns the number of records emitted.
pub fn classify_stream<I, F>(lines: I, mut sink: F) -> io::Result<usize>
where
    I: IntoIterator<Item = io::Result<String>>,
    F: FnMut(StreamRecord) -> io::Result<()>,
{
    let mut lines = lines.into_iter();
    let mut emitted = 0;
    let mut batch: Vec<String> = Vec::with_capacity(STREAM_BATCH);
    loop {
        batch.clear();
        let mut failure = None;
        for line in lines.by_ref() {
            match line {
                Ok(line) => batch.push(line),
                Err(e) => {
                    failure = Some(e);
                    break;
                }
            }
            if batch.len() == STREAM_BATCH {
                break;
            }
        }
        let base = emitted;
        let records: Vec<StreamRecord> = batch
            .par_iter()
            .enumerate()
            .map(|(i, line)| classify_line(base + i, line))
            .collect();
        for record in records {
            sink(record)?;
            emitted += 1;
        }
        if let Some(e) = failure {
            return Err(e);
        }
        if batch.len() < STREAM_BATCH {
            return Ok(emitted);
        }
    }
}

/// Column order of the delimiter-separated record format.
pub const RECORD_COLUMNS: [&str; 16] = [
    "index",
    "graph6",
    "n",
    "m",
    "connected",
    "hangable",
    "self_centered",
    "block_graph",
    "tree",
    "diameter",
    "radius",
    "periphery_size",
    "complement_hangable",
    "self_complementary",
    "smallest_power",
    "note",
];

pub fn record_header() -> String {
    RECORD_COLUMNS.join("\t")
}

/// Tab-separated row matching [`RECORD_COLUMNS`]; `-` marks an absent value.
pub fn record_row(record: &StreamRecord) -> String {
    fn flag(b: Option<bool>) -> String {
        b.map_or("-".into(), |b| if b { "yes" } else { "no" }.into())
    }
    fn num<T: ToString>(x: Option<T>) -> String {
        x.map_or("-".into(), |x| x.to_string())
    }
    let fields: Vec<String> = match record {
        StreamRecord::Ok {
            index,
            graph6,
            classification: c,
        } => vec![
            index.to_string(),
            graph6.clone(),
            c.order.to_string(),
            c.size.to_string(),
            flag(Some(c.connected)),
            flag(c.hangable),
            flag(c.self_centered),
            flag(c.block_graph),
            flag(c.tree),
            num(c.diameter),
            num(c.radius),
            num(c.periphery_size),
            flag(c.complement_hangable),
            flag(c.self_complementary),
            num(c.smallest_hangable_power),
            c.note.clone().unwrap_or_else(|| "-".into()),
        ],
        StreamRecord::Error { index, message } => {
            let mut row = vec![index.to_string()];
            row.extend(std::iter::repeat_n("-".to_string(), RECORD_COLUMNS.len() - 2));
            row.push(format!("error: {}", message.replace('\t', " ")));
            row
        }
    };
    fields.join("\t")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubgraphMode {
    /// Every vertex subset; disconnected ones are counted but not classified.
    Induced,
    /// Only subsets inducing a connected subgraph are reported.
    ConnectedInduced,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeCounts {
    pub size: usize,
    pub subsets: u64,
    pub connected: u64,
    pub hangable: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HangableSubgraph {
    pub vertices: Vec<Vertex>,
    pub graph6: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgraphReport {
    pub mode: SubgraphMode,
    pub per_size: Vec<SizeCounts>,
    /// Filled only when requested.
    pub hangable: Vec<HangableSubgraph>,
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// Enumerates vertex subsets of `host` with 1 to `max_vertices` vertices,
/// classifies the connected induced subgraphs, and counts hangable ones
/// per size. Refuses when the number of subsets exceeds `budget`.
pub fn search_hangable_subgraphs(
    host: &Graph,
    max_vertices: usize,
    mode: SubgraphMode,
    budget: u128,
    collect: bool,
) -> Result<SubgraphReport> {
    let n = host.vertex_count();
    if max_vertices > n {
        return Err(GraphError::Precondition(format!(
            "max_vertices {max_vertices} exceeds host order {n}"
        )));
    }
    let required = (1..=max_vertices).fold(0u128, |acc, k| acc.saturating_add(binomial(n, k)));
    if required > budget {
        return Err(GraphError::BudgetExceeded { required, budget });
    }

    let mut per_size = Vec::with_capacity(max_vertices);
    let mut hangable = Vec::new();
    for size in 1..=max_vertices {
        let mut counts = SizeCounts {
            size,
            subsets: 0,
            connected: 0,
            hangable: 0,
        };
        for subset in (0..n).combinations(size) {
            counts.subsets += 1;
            let sub = induced_subgraph(host, &subset)?;
            if !is_connected(&sub) {
                continue;
            }
            counts.connected += 1;
            if check_hangable(&sub)?.hangable {
                counts.hangable += 1;
                if collect {
                    hangable.push(HangableSubgraph {
                        graph6: to_graph6(&sub),
                        vertices: subset,
                    });
                }
            }
        }
        if mode == SubgraphMode::ConnectedInduced {
            counts.subsets = counts.connected;
        }
        per_size.push(counts);
    }
    Ok(SubgraphReport { mode, per_size, hangable })
}
