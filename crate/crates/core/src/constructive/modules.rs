//! Partitions of the vertex set into the maximum number of pairwise
//! disjoint non-complete dominating modules.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// Vertex cap for the exact partition search.
pub const MODULE_PARTITION_VERTEX_CAP: usize = 10;

/// A partition of the vertices into `p` parts, each of which is a module,
/// induces a non-complete subgraph, and dominates the graph. Complete
/// graphs get `p = 0` with no parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModulePartition {
    pub parts: Vec<Vec<usize>>,
    pub p: usize,
}

/// A partition realizing the maximum number of parts, found by exhaustive
/// search over set partitions in restricted-growth order (the first maximum
/// encountered is returned, so results are deterministic).
pub fn module_partition(g: &Graph) -> Result<ModulePartition> {
    if !g.is_connected() {
        return Err(Error::Contract("module_partition requires connectivity".into()));
    }
    if g.n() > MODULE_PARTITION_VERTEX_CAP {
        return Err(Error::Capability(format!(
            "module_partition supports n <= {MODULE_PARTITION_VERTEX_CAP}, got {}",
            g.n()
        )));
    }
    if g.is_complete() {
        return Ok(ModulePartition {
            parts: Vec::new(),
            p: 0,
        });
    }
    let mut best: Vec<VertexSet> = vec![g.vertex_set()];
    let mut classes: Vec<VertexSet> = Vec::new();
    search(g, 0, &mut classes, &mut best);
    Ok(ModulePartition {
        p: best.len(),
        parts: best.iter().map(|s| s.to_vec()).collect(),
    })
}

fn valid_part(g: &Graph, part: VertexSet) -> bool {
    let (induced, _) = g.induced(part).expect("subset of vertex range");
    g.is_module(part) && !induced.is_complete() && g.dominates(part)
}

fn search(g: &Graph, v: usize, classes: &mut Vec<VertexSet>, best: &mut Vec<VertexSet>) {
    let n = g.n();
    if v == n {
        if classes.len() > best.len() && classes.iter().all(|&part| valid_part(g, part)) {
            *best = classes.clone();
        }
        return;
    }
    // A valid part is non-complete, hence has at least two vertices; the
    // remaining vertices can open at most (n - v) / 2 further classes.
    let optimistic = classes.len() + (n - v) / 2;
    if optimistic <= best.len() {
        return;
    }
    for i in 0..classes.len() {
        classes[i].insert(v);
        search(g, v + 1, classes, best);
        classes[i].remove(v);
    }
    classes.push(VertexSet::singleton(v));
    search(g, v + 1, classes, best);
    classes.pop();
}
