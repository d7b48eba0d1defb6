//! Isomorphism-free enumeration of small connected graphs, exhaustive bound
//! sweeps, JSONL reports, and a content-addressed result cache.

use std::collections::HashSet;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::constructive::{self, ExtremalClass};
use crate::error::{Error, Result};
use crate::exact::{self, SolveResult};
use crate::graph::{
    class_profile, is_balanced_complete_bipartite, is_cycle, multipartite_parts, parse_graph6,
    write_graph6_string, ClassProfile, Graph,
};
use crate::symmetry::{canonical_form, Colouring};

/// Default enumeration cap; 8 needs an explicit override in sweeps because
/// the oracle over the 11117 connected 8-vertex graphs runs for hours.
pub const ENUMERATION_CAP: usize = 8;

/// Exactly one representative per isomorphism class of connected graphs on
/// `n` vertices, built by vertex augmentation with canonical-form
/// deduplication, sorted by canonical graph6 bytes.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(Error::Capability(format!(
            "enumeration supports 1 <= n <= {ENUMERATION_CAP}, got {n}"
        )));
    }
    enumerate_connected_bounded(n, usize::MAX)
}

/// As `enumerate_connected`, but keeping only graphs with at most
/// `max_edges` edges throughout the augmentation. Used for sparse corpora
/// (line-graph roots) on up to 10 vertices.
pub fn enumerate_connected_bounded(n: usize, max_edges: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > 10 {
        return Err(Error::Capability(format!(
            "bounded enumeration supports 1 <= n <= 10, got {n}"
        )));
    }
    let mut reps = vec![Graph::empty(1)?];
    for size in 2..=n {
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut next = Vec::new();
        for g in &reps {
            let base_edges = g.edges();
            for subset in 1u64..(1 << (size - 1)) {
                if base_edges.len() + subset.count_ones() as usize > max_edges {
                    continue;
                }
                let mut edges = base_edges.clone();
                for v in 0..size - 1 {
                    if subset >> v & 1 == 1 {
                        edges.push((v, size - 1));
                    }
                }
                let aug = Graph::from_edges(size, &edges)?;
                let canon = canonical_form(&aug)?;
                if seen.insert(canon.clone()) {
                    next.push(parse_graph6(&canon)?);
                }
            }
        }
        reps = next;
    }
    let mut keyed: Vec<(Vec<u8>, Graph)> = reps
        .into_iter()
        .map(|g| (crate::graph::write_graph6(&g).expect("in range"), g))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

/// The theorem sweep catalogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    CT2Delta,
    Cranston,
    C4Delta2,
    ChordalDelta1,
    C42K2Delta1,
    TwoK2Bound,
    ClawChiP,
    ClawDelta2,
    ClawDiamondDelta1,
    ClawDiamondKk,
    IndexDelta1,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::CT2Delta,
        TheoremId::Cranston,
        TheoremId::C4Delta2,
        TheoremId::ChordalDelta1,
        TheoremId::C42K2Delta1,
        TheoremId::TwoK2Bound,
        TheoremId::ClawChiP,
        TheoremId::ClawDelta2,
        TheoremId::ClawDiamondDelta1,
        TheoremId::ClawDiamondKk,
        TheoremId::IndexDelta1,
    ];

    pub fn id_str(&self) -> &'static str {
        match self {
            TheoremId::CT2Delta => "CT-2Delta",
            TheoremId::Cranston => "Cranston",
            TheoremId::C4Delta2 => "C4-Delta2",
            TheoremId::ChordalDelta1 => "Chordal-Delta1",
            TheoremId::C42K2Delta1 => "C42K2-Delta1",
            TheoremId::TwoK2Bound => "TwoK2-Bound",
            TheoremId::ClawChiP => "ClawChiP",
            TheoremId::ClawDelta2 => "Claw-Delta2",
            TheoremId::ClawDiamondDelta1 => "ClawDiamond-Delta1",
            TheoremId::ClawDiamondKk => "ClawDiamondKk",
            TheoremId::IndexDelta1 => "Index-Delta1",
        }
    }

    pub fn parse(s: &str) -> Option<TheoremId> {
        TheoremId::ALL.iter().copied().find(|t| t.id_str() == s)
    }
}

/// A bound check to sweep: theorem id plus the clique-order parameter for
/// the K_k-free variant (k in {4, 5}).
#[derive(Debug, Clone, Copy)]
pub struct TheoremSpec {
    pub id: TheoremId,
    pub k: Option<usize>,
}

impl TheoremSpec {
    pub fn new(id: TheoremId, k: Option<usize>) -> Result<TheoremSpec> {
        match (id, k) {
            (TheoremId::ClawDiamondKk, Some(4 | 5)) => Ok(TheoremSpec { id, k }),
            (TheoremId::ClawDiamondKk, _) => Err(Error::Contract(
                "ClawDiamondKk requires k in {4, 5}".into(),
            )),
            (_, Some(_)) => Err(Error::Contract(format!(
                "{} takes no k parameter",
                id.id_str()
            ))),
            (_, None) => Ok(TheoremSpec { id, k }),
        }
    }
}

/// One line of a sweep report. `chi_D` carries the measured quantity: the
/// distinguishing chromatic number, except for Index-Delta1 where it is the
/// distinguishing chromatic index of the swept graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub graph6: String,
    pub n: usize,
    pub delta: usize,
    pub chi: usize,
    pub omega: usize,
    pub alpha: usize,
    #[serde(rename = "chi_D")]
    pub chi_d: usize,
    pub classes: ClassProfile,
    pub extremal: ExtremalClass,
    pub theorem: String,
    pub bound: usize,
    pub holds: bool,
    pub equality: bool,
    pub exception: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub constructive_colours: Option<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    pub n_max: usize,
    pub allow_n8: bool,
    pub jobs: Option<usize>,
    pub cache_dir: Option<PathBuf>,
}

/// Run one theorem sweep over every enumerated connected graph in class.
/// Any bound violation or characterization mismatch aborts the sweep with a
/// theorem-violation error naming the offending graph6 string.
pub fn run_sweep(spec: &TheoremSpec, opts: &SweepOptions) -> Result<Vec<SweepRecord>> {
    if opts.n_max > ENUMERATION_CAP || (opts.n_max == 8 && !opts.allow_n8) {
        return Err(Error::Capability(format!(
            "sweeps default to n_max <= 7; n_max = {} needs the n8 override",
            opts.n_max
        )));
    }
    if opts.n_max == 0 {
        return Err(Error::Contract("n_max must be at least 1".into()));
    }
    let cache = match &opts.cache_dir {
        Some(dir) => Some(Cache::open(dir)?),
        None => None,
    };
    let mut graphs = Vec::new();
    for n in 1..=opts.n_max {
        graphs.extend(enumerate_connected(n)?);
    }
    let evaluate = |g: &Graph| evaluate_graph(spec, g, cache.as_ref());
    let results: Result<Vec<Option<SweepRecord>>> = match opts.jobs {
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
            pool.install(|| graphs.par_iter().map(evaluate).collect())
        }
        None => graphs.par_iter().map(evaluate).collect(),
    };
    let records: Vec<SweepRecord> = results?.into_iter().flatten().collect();
    if let Some(cache) = &cache {
        cache.flush_counters();
    }
    Ok(records)
}

/// Cache hit/miss counters of the most recent sweep on this thread's cache,
/// for observability in tests and the CLI.
pub static CACHE_HITS: AtomicUsize = AtomicUsize::new(0);
pub static CACHE_MISSES: AtomicUsize = AtomicUsize::new(0);

fn solve_cached(g: &Graph, cache: Option<&Cache>) -> Result<SolveResult> {
    let g6 = write_graph6_string(g)?;
    if let Some(cache) = cache {
        if let Some(hit) = cache.read(&g6) {
            cache.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(SolveResult {
                chi: hit.chi,
                chi_d: hit.chi_d,
                omega: hit.omega,
                alpha: hit.alpha,
                delta: hit.delta,
                witness: Colouring::new(hit.witness)?,
                extremal: None,
            });
        }
        cache.misses.fetch_add(1, Ordering::Relaxed);
    }
    let solved = exact::distinguishing_chromatic_number(g)?;
    if let Some(cache) = cache {
        cache.write(
            &g6,
            &CachedSolve {
                chi: solved.chi,
                chi_d: solved.chi_d,
                omega: solved.omega,
                alpha: solved.alpha,
                delta: solved.delta,
                witness: solved.witness.as_slice().to_vec(),
            },
        )?;
    }
    Ok(solved)
}

fn is_k33(g: &Graph) -> bool {
    multipartite_parts(g).is_some_and(|p| p == vec![3, 3])
}

fn evaluate_graph(spec: &TheoremSpec, g: &Graph, cache: Option<&Cache>) -> Result<Option<SweepRecord>> {
    let profile = class_profile(g);
    let n = g.n();
    let in_class = match spec.id {
        TheoremId::CT2Delta => n >= 2,
        TheoremId::Cranston => profile.c3_free && profile.c4_free,
        TheoremId::C4Delta2 => profile.c4_free,
        TheoremId::ChordalDelta1 => profile.chordal,
        TheoremId::C42K2Delta1 => profile.c4_free && profile.two_k2_free,
        TheoremId::TwoK2Bound => profile.two_k2_free,
        TheoremId::ClawChiP | TheoremId::ClawDelta2 => profile.claw_free,
        TheoremId::ClawDiamondDelta1 => profile.claw_free && profile.diamond_free,
        TheoremId::ClawDiamondKk => {
            let k = spec.k.expect("validated");
            let kk_free = match k {
                4 => profile.k4_free,
                5 => g.clique_number() < 5,
                _ => unreachable!(),
            };
            profile.claw_free && profile.diamond_free && kk_free && g.max_degree() >= 3
        }
        TheoremId::IndexDelta1 => (3..=6).contains(&n),
    };
    if !in_class {
        return Ok(None);
    }

    let solved = solve_cached(g, cache)?;
    let extremal = constructive::classify_extremal(g)?;
    let g6 = write_graph6_string(g)?;

    // The measured quantity and the bound.
    let (measure, bound) = match spec.id {
        TheoremId::CT2Delta => (solved.chi_d, 2 * solved.delta),
        TheoremId::Cranston => (solved.chi_d, solved.delta + 1),
        TheoremId::C4Delta2 => (solved.chi_d, solved.delta + 2),
        TheoremId::ChordalDelta1 => (solved.chi_d, solved.delta + 1),
        TheoremId::C42K2Delta1 => (solved.chi_d, solved.delta + 1),
        TheoremId::TwoK2Bound => (solved.chi_d, 2 * solved.delta + 2 - solved.omega),
        TheoremId::ClawChiP => {
            let p = constructive::module_partition(g)?.p;
            (solved.chi_d, solved.chi + p)
        }
        TheoremId::ClawDelta2 => (solved.chi_d, solved.delta + 2),
        TheoremId::ClawDiamondDelta1 => (solved.chi_d, solved.delta + 1),
        TheoremId::ClawDiamondKk => (solved.chi_d, spec.k.expect("validated")),
        TheoremId::IndexDelta1 => (
            exact::distinguishing_chromatic_index(g)?,
            solved.delta + 1,
        ),
    };

    // Exception sets: graphs allowed (and required) to violate the bound.
    let exception = match spec.id {
        TheoremId::Cranston => is_cycle(g) && n == 6,
        TheoremId::ClawChiP => constructive::is_claw_exception(g)?,
        TheoremId::ClawDiamondDelta1 => is_cycle(g) && (n == 4 || n == 6),
        TheoremId::IndexDelta1 => {
            (is_cycle(g) && (n == 4 || n == 6)) || (g.is_complete() && n == 4) || is_k33(g)
        }
        _ => false,
    };

    if exception {
        if measure <= bound {
            return Err(Error::TheoremViolation(format!(
                "{}: listed exception {} satisfies the bound ({} <= {})",
                spec.id.id_str(),
                g6,
                measure,
                bound
            )));
        }
    } else if measure > bound {
        return Err(Error::TheoremViolation(format!(
            "{}: bound violated on {} ({} > {})",
            spec.id.id_str(),
            g6,
            measure,
            bound
        )));
    }

    let equality = !exception && measure == bound;
    // Equality characterizations, checked in both directions.
    let predicted: Option<bool> = match spec.id {
        TheoremId::CT2Delta => Some(is_balanced_complete_bipartite(g) || (is_cycle(g) && n == 6)),
        TheoremId::C4Delta2 => Some(is_cycle(g) && n == 6),
        TheoremId::ChordalDelta1 => Some(extremal.is_symmetric_or_join()),
        TheoremId::C42K2Delta1 => Some(
            constructive::is_join_alpha_k1_clique(g) || (is_cycle(g) && n == 5),
        ),
        TheoremId::TwoK2Bound => Some(g.is_complete() || is_balanced_complete_bipartite(g)),
        TheoremId::ClawDelta2 => Some(
            (is_cycle(g) && n == 6)
                || multipartite_parts(g)
                    .is_some_and(|p| p.len() >= 2 && p.iter().all(|&s| s == 2)),
        ),
        _ => None,
    };
    if let Some(predicted) = predicted {
        if equality != predicted {
            return Err(Error::TheoremViolation(format!(
                "{}: equality characterization mismatch on {} (equality={}, predicted={})",
                spec.id.id_str(),
                g6,
                equality,
                predicted
            )));
        }
    }

    // Constructive procedures, certified internally; their colour counts are
    // recorded and checked against the theorem's bound.
    let constructive_colours = match spec.id {
        TheoremId::C4Delta2 => {
            let c = constructive::colour_c4_free(g)?;
            check_constructive(spec, &g6, c.distinct_count(), bound)?;
            Some(c.distinct_count())
        }
        TheoremId::ChordalDelta1 => {
            let c = constructive::colour_chordal(g)?;
            let used = c.distinct_count();
            // Peeling stays within Delta + 2 everywhere and within
            // Delta + 1 off the extremal families.
            if used > solved.delta + 2
                || (!extremal.is_symmetric_or_join() && used > solved.delta + 1)
            {
                return Err(Error::TheoremViolation(format!(
                    "Chordal-Delta1: peeling used {used} colours on {g6}"
                )));
            }
            Some(used)
        }
        TheoremId::TwoK2Bound
            if solved.omega >= 3 && !g.is_complete() && !is_balanced_complete_bipartite(g) =>
        {
            let c = constructive::colour_2k2_free(g)?;
            check_constructive(spec, &g6, c.distinct_count(), bound)?;
            Some(c.distinct_count())
        }
        TheoremId::ClawChiP if !exception => {
            let c = constructive::colour_claw_free(g)?;
            check_constructive(spec, &g6, c.distinct_count(), bound)?;
            Some(c.distinct_count())
        }
        TheoremId::ClawDiamondDelta1 if !exception => {
            let c = constructive::colour_claw_diamond_free(g)?;
            check_constructive(spec, &g6, c.distinct_count(), bound)?;
            Some(c.distinct_count())
        }
        _ => None,
    };

    Ok(Some(SweepRecord {
        graph6: g6,
        n,
        delta: solved.delta,
        chi: solved.chi,
        omega: solved.omega,
        alpha: solved.alpha,
        chi_d: measure,
        classes: profile,
        extremal,
        theorem: spec.id.id_str().to_string(),
        bound,
        holds: true,
        equality,
        exception,
        constructive_colours,
    }))
}

fn check_constructive(spec: &TheoremSpec, g6: &str, used: usize, bound: usize) -> Result<()> {
    if used > bound {
        return Err(Error::TheoremViolation(format!(
            "{}: constructive colouring used {used} colours on {g6}, beyond {bound}",
            spec.id.id_str()
        )));
    }
    Ok(())
}

/// Aggregate view of a sweep for the CLI summary.
#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub theorem: String,
    pub records: usize,
    pub per_n: Vec<(usize, usize)>,
    pub equality_graph6: Vec<String>,
    pub exception_graph6: Vec<String>,
    pub max_constructive_colours: Option<usize>,
}

impl SweepSummary {
    pub fn from_records(theorem: &str, records: &[SweepRecord]) -> SweepSummary {
        let mut per_n: Vec<(usize, usize)> = Vec::new();
        for r in records {
            match per_n.iter_mut().find(|(n, _)| *n == r.n) {
                Some((_, c)) => *c += 1,
                None => per_n.push((r.n, 1)),
            }
        }
        per_n.sort_unstable();
        SweepSummary {
            theorem: theorem.to_string(),
            records: records.len(),
            per_n,
            equality_graph6: records
                .iter()
                .filter(|r| r.equality)
                .map(|r| r.graph6.clone())
                .collect(),
            exception_graph6: records
                .iter()
                .filter(|r| r.exception)
                .map(|r| r.graph6.clone())
                .collect(),
            max_constructive_colours: records.iter().filter_map(|r| r.constructive_colours).max(),
        }
    }
}

/// Report header: run metadata lives here, never in payload lines, so
/// identical inputs produce byte-identical files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportHeader {
    pub r#type: String,
    pub theorem: String,
    pub n_max: usize,
    pub solver_version: String,
}

impl ReportHeader {
    pub fn new(theorem: &str, n_max: usize) -> ReportHeader {
        ReportHeader {
            r#type: "header".into(),
            theorem: theorem.into(),
            n_max,
            solver_version: crate::SOLVER_VERSION.into(),
        }
    }
}

/// Write a JSONL report: one record per line. An empty record list yields
/// an empty file.
pub fn write_report(path: &Path, records: &[SweepRecord]) -> Result<()> {
    let mut out = Vec::new();
    for r in records {
        serde_json::to_writer(&mut out, r).map_err(|e| Error::Internal(e.to_string()))?;
        out.push(b'\n');
    }
    std::fs::write(path, out).map_err(|e| Error::io(path.display().to_string(), e))
}

/// As `write_report`, with the run-metadata header as the first line.
pub fn write_report_with_header(
    path: &Path,
    header: &ReportHeader,
    records: &[SweepRecord],
) -> Result<()> {
    let mut out = Vec::new();
    serde_json::to_writer(&mut out, header).map_err(|e| Error::Internal(e.to_string()))?;
    out.push(b'\n');
    for r in records {
        serde_json::to_writer(&mut out, r).map_err(|e| Error::Internal(e.to_string()))?;
        out.push(b'\n');
    }
    std::fs::write(path, out).map_err(|e| Error::io(path.display().to_string(), e))
}

/// Read a JSONL report back, tolerating an optional leading header line.
pub fn read_report(path: &Path) -> Result<(Option<ReportHeader>, Vec<SweepRecord>)> {
    let file = std::fs::File::open(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let mut header = None;
    let mut records = Vec::new();
    for (i, line) in std::io::BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path.display().to_string(), e))?;
        if line.is_empty() {
            continue;
        }
        if i == 0 {
            if let Ok(h) = serde_json::from_str::<ReportHeader>(&line) {
                header = Some(h);
                continue;
            }
        }
        records.push(serde_json::from_str(&line).map_err(|e| Error::Parse {
            offset: i,
            msg: e.to_string(),
        })?);
    }
    Ok((header, records))
}

/// Cached solve payload, keyed by `(graph6, solver version)`; the cache is
/// content-addressed and safe to delete wholesale.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CachedSolve {
    pub chi: usize,
    #[serde(rename = "chi_D")]
    pub chi_d: usize,
    pub omega: usize,
    pub alpha: usize,
    pub delta: usize,
    pub witness: Vec<u32>,
}

#[derive(Debug)]
pub struct Cache {
    root: PathBuf,
    pub hits: AtomicUsize,
    pub misses: AtomicUsize,
}

impl Cache {
    pub fn open(dir: &Path) -> Result<Cache> {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir.display().to_string(), e))?;
        Ok(Cache {
            root: dir.to_path_buf(),
            hits: AtomicUsize::new(0),
            misses: AtomicUsize::new(0),
        })
    }

    fn path_for(&self, graph6: &str) -> PathBuf {
        let hash = hex(&Sha256::digest(graph6.as_bytes()));
        self.root
            .join(crate::SOLVER_VERSION)
            .join(&hash[..2])
            .join(format!("{hash}.json"))
    }

    pub fn read(&self, graph6: &str) -> Option<CachedSolve> {
        let bytes = std::fs::read(self.path_for(graph6)).ok()?;
        serde_json::from_slice(&bytes).ok()
    }

    /// Atomic write: temp file in the final directory, then rename, so
    /// concurrent readers never observe partial entries.
    pub fn write(&self, graph6: &str, value: &CachedSolve) -> Result<()> {
        let path = self.path_for(graph6);
        let dir = path.parent().expect("cache paths have parents");
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir.display().to_string(), e))?;
        let tmp = dir.join(format!(
            ".tmp-{}-{:?}",
            std::process::id(),
            std::thread::current().id()
        ));
        let payload = serde_json::to_vec(value).map_err(|e| Error::Internal(e.to_string()))?;
        {
            let mut f = std::fs::File::create(&tmp)
                .map_err(|e| Error::io(tmp.display().to_string(), e))?;
            f.write_all(&payload)
                .map_err(|e| Error::io(tmp.display().to_string(), e))?;
        }
        std::fs::rename(&tmp, &path).map_err(|e| Error::io(path.display().to_string(), e))
    }

    fn flush_counters(&self) {
        CACHE_HITS.store(self.hits.load(Ordering::Relaxed), Ordering::Relaxed);
        CACHE_MISSES.store(self.misses.load(Ordering::Relaxed), Ordering::Relaxed);
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}
