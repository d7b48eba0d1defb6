//! Line graphs, line-graph roots via Krausz partitions, and the
//! distinguishing colouring of (claw, diamond)-free graphs by transporting
//! an optimal distinguishing edge colouring of the root.

use super::certify;
use crate::error::{Error, Result};
use crate::exact;
use crate::graph::{has_induced, is_cycle, Graph, PatternName, VertexSet};
use crate::symmetry::Colouring;

/// Vertex cap for root reconstruction.
pub const LINE_ROOT_VERTEX_CAP: usize = 12;

/// The line graph of `h`: one vertex per edge of the lexicographic edge
/// list, adjacent iff the edges share an endpoint.
pub fn line_graph(h: &Graph) -> Result<Graph> {
    let edges = h.edges();
    if edges.is_empty() {
        return Err(Error::Domain("line graph of an edgeless graph".into()));
    }
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                out.push((i, j));
            }
        }
    }
    Graph::from_edges(edges.len(), &out)
}

/// A connected root `h` with `L(h)` isomorphic to `g`, or `None` when `g`
/// is not a line graph. For the triangle the root K3 (not the claw) is
/// returned, which the search order yields naturally.
pub fn line_root(g: &Graph) -> Result<Option<Graph>> {
    Ok(root_with_map(g)?.map(|(h, _)| h))
}

/// Root plus the correspondence: for each vertex of `g`, the index of its
/// edge in the root's lexicographic edge list.
pub(crate) fn root_with_map(g: &Graph) -> Result<Option<(Graph, Vec<usize>)>> {
    if g.n() > LINE_ROOT_VERTEX_CAP {
        return Err(Error::Capability(format!(
            "line_root supports n <= {LINE_ROOT_VERTEX_CAP}, got {}",
            g.n()
        )));
    }
    if g.n() == 0 {
        return Err(Error::Contract("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Contract("line_root requires a connected graph".into()));
    }
    if g.n() == 1 {
        // K1 = L(K2).
        return Ok(Some((crate::graph::path(2), vec![0])));
    }
    let mut cells: Vec<VertexSet> = Vec::new();
    let mut cell_count = vec![0usize; g.n()];
    let mut covered = vec![false; g.n() * g.n()];
    let edges = g.edges();
    match krausz(g, &edges, 0, &mut cells, &mut cell_count, &mut covered) {
        Some(cells) => Ok(Some(build_root(g, &cells))),
        None => Ok(None),
    }
}

/// Backtracking search for a Krausz partition: a family of cliques covering
/// every edge exactly once with every vertex in at most two cliques.
fn krausz(
    g: &Graph,
    edges: &[(usize, usize)],
    next_edge: usize,
    cells: &mut Vec<VertexSet>,
    cell_count: &mut Vec<usize>,
    covered: &mut Vec<bool>,
) -> Option<Vec<VertexSet>> {
    let mut e = next_edge;
    while e < edges.len() && covered[edges[e].0 * g.n() + edges[e].1] {
        e += 1;
    }
    if e == edges.len() {
        return Some(cells.clone());
    }
    let (u, v) = edges[e];
    if cell_count[u] >= 2 || cell_count[v] >= 2 {
        return None;
    }
    // The cell covering (u, v) is a clique containing both; its other
    // members come from the common neighbourhood, must be mutually adjacent,
    // uncovered towards u, v and each other, and must have a spare cell slot.
    let common: Vec<usize> = g
        .neighbours(u)
        .intersection(g.neighbours(v))
        .iter()
        .filter(|&x| cell_count[x] < 2)
        .collect();
    let mut chosen: Vec<usize> = Vec::new();
    try_extensions(g, edges, e, u, v, &common, 0, &mut chosen, cells, cell_count, covered)
}

#[allow(clippy::too_many_arguments)]
fn try_extensions(
    g: &Graph,
    edges: &[(usize, usize)],
    e: usize,
    u: usize,
    v: usize,
    common: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    cells: &mut Vec<VertexSet>,
    cell_count: &mut Vec<usize>,
    covered: &mut Vec<bool>,
) -> Option<Vec<VertexSet>> {
    // Current candidate cell: {u, v} plus `chosen`.
    let mut cell = VertexSet::from_iter([u, v]);
    for &x in chosen.iter() {
        cell.insert(x);
    }
    let members = cell.to_vec();
    let mut pairs = Vec::new();
    let mut ok = true;
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let (a, b) = (members[i], members[j]);
            if covered[a * g.n() + b] {
                ok = false;
            }
            pairs.push((a, b));
        }
    }
    if ok {
        for &(a, b) in &pairs {
            covered[a * g.n() + b] = true;
            covered[b * g.n() + a] = true;
        }
        for &m in &members {
            cell_count[m] += 1;
        }
        cells.push(cell);
        if let Some(solution) = krausz(g, edges, e + 1, cells, cell_count, covered) {
            return Some(solution);
        }
        cells.pop();
        for &m in &members {
            cell_count[m] -= 1;
        }
        for &(a, b) in &pairs {
            covered[a * g.n() + b] = false;
            covered[b * g.n() + a] = false;
        }
    }
    // Grow the candidate cell with a further common neighbour.
    for (i, &x) in common.iter().enumerate().skip(from) {
        if chosen.iter().all(|&y| g.has_edge(x, y)) {
            chosen.push(x);
            if let Some(solution) = try_extensions(
                g, edges, e, u, v, common, i + 1, chosen, cells, cell_count, covered,
            ) {
                return Some(solution);
            }
            chosen.pop();
        }
    }
    None
}

/// Build the root graph from a Krausz partition. Cells become vertices;
/// a vertex of `g` lying in one cell gets a private pendant vertex; each
/// vertex of `g` becomes the edge between its (at most two) cells.
fn build_root(g: &Graph, cells: &[VertexSet]) -> (Graph, Vec<usize>) {
    let mut endpoint_pairs: Vec<(usize, usize)> = Vec::new();
    let mut next_vertex = cells.len();
    for v in g.vertices() {
        let mine: Vec<usize> = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.contains(v))
            .map(|(i, _)| i)
            .collect();
        let (a, b) = match mine.len() {
            2 => (mine[0], mine[1]),
            1 => {
                let pendant = next_vertex;
                next_vertex += 1;
                (mine[0], pendant)
            }
            _ => unreachable!("every vertex lies in one or two cells"),
        };
        endpoint_pairs.push((a.min(b), a.max(b)));
    }
    let h = Graph::from_edges(next_vertex, &endpoint_pairs).expect("root size bounded");
    let h_edges = h.edges();
    let map: Vec<usize> = endpoint_pairs
        .iter()
        .map(|pair| {
            h_edges
                .iter()
                .position(|e| e == pair)
                .expect("every pair is an edge of the root")
        })
        .collect();
    (h, map)
}

/// Certified distinguishing colouring of a connected (claw, diamond)-free
/// graph within `Delta + 1` colours, transported from an optimal
/// distinguishing proper edge colouring of its line-graph root.
pub fn colour_claw_diamond_free(g: &Graph) -> Result<Colouring> {
    if g.n() == 0 {
        return Err(Error::Contract("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Contract(
            "colour_claw_diamond_free requires connectivity".into(),
        ));
    }
    if has_induced(g, PatternName::Claw) || has_induced(g, PatternName::Diamond) {
        return Err(Error::Contract(
            "colour_claw_diamond_free requires a (claw, diamond)-free graph".into(),
        ));
    }
    if is_cycle(g) && (g.n() == 4 || g.n() == 6) {
        return Err(Error::Domain(
            "exceptional input (C4 or C6): use the exact oracle".into(),
        ));
    }
    if g.n() == 1 {
        let c = Colouring::rainbow(1);
        certify(g, &c, "colour_claw_diamond_free")?;
        return Ok(c);
    }
    let (root, edge_of_vertex) = root_with_map(g)?.ok_or_else(|| {
        Error::Internal("every (claw, diamond)-free graph is a line graph".into())
    })?;
    let (count, edge_colouring) = exact::distinguishing_chromatic_index_with_witness(&root, None)?;
    let colours: Vec<u32> = edge_of_vertex
        .iter()
        .map(|&idx| edge_colouring.colours[idx])
        .collect();
    let c = Colouring::new(colours)?;
    if c.distinct_count() != count {
        return Err(Error::Internal(
            "edge colour count changed under transport".into(),
        ));
    }
    if c.distinct_count() > g.max_degree() + 1 {
        return Err(Error::Internal(format!(
            "(claw, diamond)-free construction used {} colours, beyond Delta+1 = {}",
            c.distinct_count(),
            g.max_degree() + 1
        )));
    }
    certify(g, &c, "colour_claw_diamond_free")?;
    Ok(c)
}
