//! Exhaustive oracles: chromatic number, distinguishing chromatic number
//! with witness, capped feasibility, and the distinguishing chromatic index.
//!
//! The distinguishing searches enumerate set partitions into independent
//! sets (matchings for the index) in nondecreasing class-count order, so
//! colour-renaming invariance cuts the labelling factor; each candidate is
//! certified through the symmetry module. Witnesses are the first hit in a
//! deterministic enumeration order with classes ordered by minimum vertex.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::constructive::ExtremalClass;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::symmetry::{self, Colouring};

/// Vertex cap for chromatic number computations.
pub const CHROMATIC_VERTEX_CAP: usize = 16;
/// Vertex cap for exact distinguishing chromatic numbers.
pub const DISTINGUISHING_VERTEX_CAP: usize = 10;
/// Edge cap for exact distinguishing chromatic indices. 15 edges admits
/// every connected graph on up to 6 vertices.
pub const INDEX_EDGE_CAP: usize = 15;

/// Cooperative cancellation for long searches; checked at least once per
/// search node.
#[derive(Debug, Clone, Default)]
pub struct CancelToken {
    flag: Arc<AtomicBool>,
}

impl CancelToken {
    pub fn new() -> CancelToken {
        CancelToken::default()
    }

    pub fn cancel(&self) {
        self.flag.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.flag.load(Ordering::Relaxed)
    }
}

fn check_cancel(cancel: Option<&CancelToken>) -> Result<()> {
    match cancel {
        Some(t) if t.is_cancelled() => Err(Error::Cancelled),
        _ => Ok(()),
    }
}

/// The computed invariants of one graph, with a witness colouring attaining
/// the distinguishing chromatic number.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub chi: usize,
    pub chi_d: usize,
    pub omega: usize,
    pub alpha: usize,
    pub delta: usize,
    pub witness: Colouring,
    pub extremal: Option<ExtremalClass>,
}

/// Minimum number of colours in a proper vertex colouring.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_cancellable(g, None)
}

pub fn chromatic_number_cancellable(g: &Graph, cancel: Option<&CancelToken>) -> Result<usize> {
    if g.n() > CHROMATIC_VERTEX_CAP {
        return Err(Error::Capability(format!(
            "chromatic_number supports n <= {CHROMATIC_VERTEX_CAP}, got {}",
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let lower = g.clique_number();
    for k in lower.. {
        check_cancel(cancel)?;
        if colourable(g, k, cancel)? {
            return Ok(k);
        }
    }
    unreachable!("n colours always suffice")
}

fn colourable(g: &Graph, k: usize, cancel: Option<&CancelToken>) -> Result<bool> {
    let mut colours = vec![usize::MAX; g.n()];
    colour_rec(g, k, 0, 0, &mut colours, cancel)
}

fn colour_rec(
    g: &Graph,
    k: usize,
    v: usize,
    used: usize,
    colours: &mut Vec<usize>,
    cancel: Option<&CancelToken>,
) -> Result<bool> {
    check_cancel(cancel)?;
    if v == g.n() {
        return Ok(true);
    }
    // Trying at most one fresh colour kills the colour-renaming factor.
    let limit = k.min(used + 1);
    for c in 0..limit {
        if g.neighbours(v).iter().all(|w| colours[w] != c) {
            colours[v] = c;
            if colour_rec(g, k, v + 1, used.max(c + 1), colours, cancel)? {
                colours[v] = usize::MAX;
                return Ok(true);
            }
            colours[v] = usize::MAX;
        }
    }
    Ok(false)
}

/// Exact distinguishing chromatic number with witness, for connected graphs
/// on at most 10 vertices.
pub fn distinguishing_chromatic_number(g: &Graph) -> Result<SolveResult> {
    distinguishing_chromatic_number_cancellable(g, None)
}

pub fn distinguishing_chromatic_number_cancellable(
    g: &Graph,
    cancel: Option<&CancelToken>,
) -> Result<SolveResult> {
    check_solve_input(g)?;
    let chi = chromatic_number_cancellable(g, cancel)?;
    for k in chi..=g.n() {
        if let Some(witness) = partition_search(g, k, cancel)? {
            return Ok(SolveResult {
                chi,
                chi_d: k,
                omega: g.clique_number(),
                alpha: g.independence_number(),
                delta: g.max_degree(),
                witness,
                extremal: None,
            });
        }
    }
    Err(Error::Internal(
        "rainbow colouring must be distinguishing".into(),
    ))
}

/// A proper distinguishing colouring with at most `cap` colours, or `None`
/// iff none exists.
pub fn distinguishing_chromatic_capped(
    g: &Graph,
    cap: usize,
    cancel: Option<&CancelToken>,
) -> Result<Option<Colouring>> {
    check_solve_input(g)?;
    capped_partition_search(g, cap, cancel)
}

fn check_solve_input(g: &Graph) -> Result<()> {
    if g.n() > DISTINGUISHING_VERTEX_CAP {
        return Err(Error::Capability(format!(
            "distinguishing search supports n <= {DISTINGUISHING_VERTEX_CAP}, got {}",
            g.n()
        )));
    }
    if g.n() == 0 {
        return Err(Error::Contract("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Contract(
            "distinguishing search requires a connected graph".into(),
        ));
    }
    Ok(())
}

/// The partition search without the connectivity requirement. Induced
/// subgraphs handed over by the constructive procedures may be disconnected;
/// the search itself never needs connectivity.
pub(crate) fn capped_partition_search(
    g: &Graph,
    cap: usize,
    cancel: Option<&CancelToken>,
) -> Result<Option<Colouring>> {
    if g.n() == 0 {
        return Err(Error::Contract("empty graph".into()));
    }
    let chi = chromatic_number_cancellable(g, cancel)?;
    for k in chi..=cap.min(g.n()) {
        if let Some(w) = partition_search(g, k, cancel)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// First partition of the vertices into exactly `k` nonempty independent
/// classes whose induced colouring is distinguishing, in restricted-growth
/// enumeration order (classes are opened by their minimum vertex).
fn partition_search(g: &Graph, k: usize, cancel: Option<&CancelToken>) -> Result<Option<Colouring>> {
    let n = g.n();
    if k > n {
        return Ok(None);
    }
    let mut classes: Vec<VertexSet> = Vec::new();
    partition_rec(g, k, 0, &mut classes, cancel)
}

fn partition_rec(
    g: &Graph,
    k: usize,
    v: usize,
    classes: &mut Vec<VertexSet>,
    cancel: Option<&CancelToken>,
) -> Result<Option<Colouring>> {
    check_cancel(cancel)?;
    let n = g.n();
    if v == n {
        if classes.len() != k {
            return Ok(None);
        }
        let mut colours = vec![0u32; n];
        for (i, class) in classes.iter().enumerate() {
            for u in class.iter() {
                colours[u] = (i + 1) as u32;
            }
        }
        let c = Colouring::new(colours)?;
        if !symmetry::has_nonidentity_automorphism(g, Some(&c)) {
            return Ok(Some(c));
        }
        return Ok(None);
    }
    // Not enough vertices left to open the remaining classes.
    if classes.len() + (n - v) < k {
        return Ok(None);
    }
    for i in 0..classes.len() {
        if g.neighbours(v).intersection(classes[i]).is_empty() {
            classes[i].insert(v);
            if let Some(c) = partition_rec(g, k, v + 1, classes, cancel)? {
                return Ok(Some(c));
            }
            classes[i].remove(v);
        }
    }
    if classes.len() < k {
        classes.push(VertexSet::singleton(v));
        if let Some(c) = partition_rec(g, k, v + 1, classes, cancel)? {
            return Ok(Some(c));
        }
        classes.pop();
    }
    Ok(None)
}

/// A proper edge colouring as a colour per edge of the lexicographic edge
/// list.
#[derive(Debug, Clone)]
pub struct EdgeColouring {
    pub edges: Vec<(usize, usize)>,
    pub colours: Vec<u32>,
}

impl EdgeColouring {
    pub fn distinct_count(&self) -> usize {
        self.colours.iter().collect::<std::collections::BTreeSet<_>>().len()
    }
}

/// Minimum number of colours in a proper edge colouring such that every
/// colouring-preserving automorphism fixes all vertices.
pub fn distinguishing_chromatic_index(h: &Graph) -> Result<usize> {
    Ok(distinguishing_chromatic_index_with_witness(h, None)?.0)
}

pub fn distinguishing_chromatic_index_with_witness(
    h: &Graph,
    cancel: Option<&CancelToken>,
) -> Result<(usize, EdgeColouring)> {
    if !h.is_connected() {
        return Err(Error::Contract(
            "distinguishing index requires a connected graph".into(),
        ));
    }
    if h.n() == 2 && h.edge_count() == 1 {
        return Err(Error::Domain(
            "the distinguishing chromatic index is undefined for K2".into(),
        ));
    }
    let edges = h.edges();
    let m = edges.len();
    if m > INDEX_EDGE_CAP {
        return Err(Error::Capability(format!(
            "distinguishing index supports |E| <= {INDEX_EDGE_CAP}, got {m}"
        )));
    }
    if m == 0 {
        // A single vertex needs no edge colours and is trivially fixed.
        return Ok((
            0,
            EdgeColouring {
                edges,
                colours: Vec::new(),
            },
        ));
    }
    for k in h.max_degree()..=m {
        check_cancel(cancel)?;
        let mut classes: Vec<Vec<usize>> = Vec::new();
        if let Some(colours) = matching_partition_rec(h, &edges, k, 0, &mut classes, cancel)? {
            return Ok((
                k,
                EdgeColouring {
                    edges,
                    colours,
                },
            ));
        }
    }
    Err(Error::Internal(
        "rainbow edge colouring must be distinguishing for connected graphs beyond K2".into(),
    ))
}

fn matching_partition_rec(
    h: &Graph,
    edges: &[(usize, usize)],
    k: usize,
    e: usize,
    classes: &mut Vec<Vec<usize>>,
    cancel: Option<&CancelToken>,
) -> Result<Option<Vec<u32>>> {
    check_cancel(cancel)?;
    let m = edges.len();
    if e == m {
        if classes.len() != k {
            return Ok(None);
        }
        let mut colours = vec![0u32; m];
        for (i, class) in classes.iter().enumerate() {
            for &idx in class {
                colours[idx] = (i + 1) as u32;
            }
        }
        if edge_colouring_is_distinguishing(h, edges, &colours) {
            return Ok(Some(colours));
        }
        return Ok(None);
    }
    if classes.len() + (m - e) < k {
        return Ok(None);
    }
    let (u, v) = edges[e];
    for i in 0..classes.len() {
        let conflict = classes[i].iter().any(|&idx| {
            let (a, b) = edges[idx];
            a == u || a == v || b == u || b == v
        });
        if !conflict {
            classes[i].push(e);
            if let Some(c) = matching_partition_rec(h, edges, k, e + 1, classes, cancel)? {
                return Ok(Some(c));
            }
            classes[i].pop();
        }
    }
    if classes.len() < k {
        classes.push(vec![e]);
        if let Some(c) = matching_partition_rec(h, edges, k, e + 1, classes, cancel)? {
            return Ok(Some(c));
        }
        classes.pop();
    }
    Ok(None)
}

/// True iff the identity is the only automorphism of `h` preserving the edge
/// colouring.
fn edge_colouring_is_distinguishing(h: &Graph, edges: &[(usize, usize)], colours: &[u32]) -> bool {
    let n = h.n();
    let mut colour_of = vec![vec![0u32; n]; n];
    for (idx, &(u, v)) in edges.iter().enumerate() {
        colour_of[u][v] = colours[idx];
        colour_of[v][u] = colours[idx];
    }
    // Refinement key: degree plus the sorted multiset of incident colours.
    let keys: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            let mut incident: Vec<u32> = h.neighbours(v).iter().map(|w| colour_of[v][w]).collect();
            incident.sort_unstable();
            incident
        })
        .collect();
    let mut image = vec![usize::MAX; n];
    let mut used = 0u64;
    !edge_aut_search(h, &colour_of, &keys, 0, &mut image, &mut used)
}

/// Finds some non-identity colour-preserving automorphism, if any.
fn edge_aut_search(
    h: &Graph,
    colour_of: &[Vec<u32>],
    keys: &[Vec<u32>],
    v: usize,
    image: &mut Vec<usize>,
    used: &mut u64,
) -> bool {
    let n = h.n();
    if v == n {
        return image.iter().enumerate().any(|(i, &w)| i != w);
    }
    for w in 0..n {
        if *used >> w & 1 == 1 || keys[w] != keys[v] {
            continue;
        }
        let ok = (0..v).all(|u| {
            let edge_here = h.has_edge(u, v);
            let edge_there = h.has_edge(image[u], w);
            edge_here == edge_there
                && (!edge_here || colour_of[u][v] == colour_of[image[u]][w])
        });
        if !ok {
            continue;
        }
        image[v] = w;
        *used |= 1 << w;
        if edge_aut_search(h, colour_of, keys, v + 1, image, used) {
            return true;
        }
        image[v] = usize::MAX;
        *used &= !(1 << w);
    }
    false
}
