//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency rows are stored as one `u64` bitmask per vertex, so every
//! neighbourhood operation is a handful of word ops. Vertex labels are
//! always exactly `0..n`; operations that drop vertices relabel the result
//! and hand back the label map.

mod builders;
mod graph6;
mod patterns;

pub use builders::*;
pub use graph6::{parse_graph6, write_graph6, write_graph6_string};
pub use patterns::{
    class_profile, has_induced, is_balanced_complete_bipartite, is_bipartite, is_chordal,
    is_cycle, multipartite_parts, ClassProfile, PatternName,
};

use crate::error::{Error, Result};

/// Maximum supported vertex count: adjacency rows must fit one machine word.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of an associated graph, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    bits: u64,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { bits: 0 };

    pub fn from_bits(bits: u64) -> Self {
        VertexSet { bits }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet { bits: 1u64 << v }
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet { bits: u64::MAX }
        } else {
            VertexSet {
                bits: (1u64 << n) - 1,
            }
        }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.bits |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.bits &= !(1u64 << v);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn union(&self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(&self, other: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & !other.bits,
        }
    }

    pub fn is_subset_of(&self, other: VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Iterate members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter { bits: self.bits }
    }

    pub fn min(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

struct BitIter {
    bits: u64,
}

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            let v = self.bits.trailing_zeros() as usize;
            self.bits &= self.bits - 1;
            Some(v)
        }
    }
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Invariants: adjacency is symmetric and irreflexive; construction
/// validates both.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::Capability(format!(
                "graphs beyond {MAX_VERTICES} vertices are unsupported (got n={n})"
            )));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Build from an edge list. Duplicate edges are tolerated; loops and
    /// out-of-range endpoints are contract errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Contract(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::Contract(format!("loop at vertex {u}")));
            }
            g.adj[u] |= 1u64 << v;
            g.adj[v] |= 1u64 << u;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Open neighbourhood as a set.
    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    /// Closed neighbourhood as a set.
    pub fn closed_neighbourhood(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v] | 1u64 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic order of `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet::from_bits(self.adj[u]).iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_regular(&self) -> bool {
        self.n == 0 || (0..self.n).all(|v| self.degree(v) == self.degree(0))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Vertices reachable from `start` within `allowed`.
    fn reach(&self, start: usize, allowed: u64) -> u64 {
        debug_assert!(allowed >> start & 1 == 1);
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet::from_bits(frontier).iter() {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let full = VertexSet::full(self.n).bits();
        self.reach(0, full) == full
    }

    /// Connected components, each as a vertex set, ordered by minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let full = VertexSet::full(self.n).bits();
        let mut remaining = full;
        let mut out = Vec::new();
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            let comp = self.reach(v, remaining);
            out.push(VertexSet::from_bits(comp));
            remaining &= !comp;
        }
        out
    }

    /// BFS layers from `u`: `layers[d]` holds the vertices at distance
    /// exactly `d`. The graph must be connected.
    pub fn bfs_layers(&self, u: usize) -> Result<Vec<VertexSet>> {
        if u >= self.n {
            return Err(Error::Contract(format!("vertex {u} out of range")));
        }
        if !self.is_connected() {
            return Err(Error::Contract(
                "bfs_layers requires a connected graph".into(),
            ));
        }
        let mut layers = vec![VertexSet::singleton(u)];
        let mut seen = 1u64 << u;
        loop {
            let mut next = 0u64;
            for v in layers.last().unwrap().iter() {
                next |= self.adj[v];
            }
            next &= !seen;
            if next == 0 {
                break;
            }
            seen |= next;
            layers.push(VertexSet::from_bits(next));
        }
        Ok(layers)
    }

    /// Induced subgraph on the complement of `s`, relabelled to
    /// `0..n-|s|`. The returned map sends new labels to old ones.
    pub fn remove_vertices(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if !s.is_subset_of(self.vertex_set()) {
            return Err(Error::Contract("vertex set out of range".into()));
        }
        self.induced(self.vertex_set().difference(s))
    }

    /// Induced subgraph on `keep`, relabelled to `0..|keep|` in ascending
    /// label order. The returned map sends new labels to old ones.
    pub fn induced(&self, keep: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if !keep.is_subset_of(self.vertex_set()) {
            return Err(Error::Contract("vertex set out of range".into()));
        }
        let old_of_new: Vec<usize> = keep.iter().collect();
        let mut new_of_old = vec![usize::MAX; self.n];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = new;
        }
        let mut adj = vec![0u64; old_of_new.len()];
        for (new, &old) in old_of_new.iter().enumerate() {
            for w in VertexSet::from_bits(self.adj[old] & keep.bits()).iter() {
                adj[new] |= 1u64 << new_of_old[w];
            }
        }
        Ok((
            Graph {
                n: old_of_new.len(),
                adj,
            },
            old_of_new,
        ))
    }

    /// Apply a relabelling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabelled(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            for w in VertexSet::from_bits(self.adj[v]).iter() {
                adj[perm[v]] |= 1u64 << perm[w];
            }
        }
        Graph { n: self.n, adj }
    }

    /// True iff `set` induces a clique.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| {
            let others = set.bits() & !(1u64 << v);
            others & !self.adj[v] == 0
        })
    }

    /// True iff `set` is independent.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v] & set.bits() & !(1u64 << v) == 0)
    }

    /// Union of open neighbourhoods of `set`, minus `set` itself.
    pub fn neighbourhood_of_set(&self, set: VertexSet) -> VertexSet {
        let mut bits = 0u64;
        for v in set.iter() {
            bits |= self.adj[v];
        }
        VertexSet::from_bits(bits & !set.bits())
    }

    /// True iff every vertex is in `set` or adjacent to it.
    pub fn dominates(&self, set: VertexSet) -> bool {
        let covered = set.bits() | self.neighbourhood_of_set(set).bits();
        covered == self.vertex_set().bits()
    }

    /// True iff every vertex outside `m` is complete or anti-complete to `m`.
    pub fn is_module(&self, m: VertexSet) -> bool {
        if !m.is_subset_of(self.vertex_set()) {
            return false;
        }
        for v in self.vertex_set().difference(m).iter() {
            let hit = self.adj[v] & m.bits();
            if hit != 0 && hit != m.bits() {
                return false;
            }
        }
        true
    }

    /// Vertices whose open neighbourhood induces a clique.
    pub fn simplicial_vertices(&self) -> VertexSet {
        (0..self.n)
            .filter(|&v| self.is_clique(self.neighbours(v)))
            .collect()
    }

    /// Exact clique number via branch and bound.
    pub fn clique_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let mut best = 0usize;
        self.clique_search(0, VertexSet::full(self.n).bits(), &mut best);
        best
    }

    fn clique_search(&self, size: usize, candidates: u64, best: &mut usize) {
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        if candidates == 0 {
            if size > *best {
                *best = size;
            }
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        // Branch: include v, then exclude v.
        self.clique_search(size + 1, candidates & self.adj[v], best);
        self.clique_search(size, candidates & !(1u64 << v), best);
    }

    /// Exact independence number (clique number of the complement).
    pub fn independence_number(&self) -> usize {
        self.complement().clique_number()
    }

    /// All cliques of exactly `size` vertices, as sorted vertex lists.
    pub fn cliques_of_size(&self, size: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.cliques_rec(0, size, &mut cur, &mut out);
        out
    }

    fn cliques_rec(&self, start: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        if cur.len() == size {
            out.push(cur.iter().copied().collect());
            return;
        }
        if self.n - start < size - cur.len() {
            return;
        }
        for v in start..self.n {
            if cur.iter().all(|&u| self.has_edge(u, v)) {
                cur.push(v);
                self.cliques_rec(v + 1, size, cur, out);
                cur.pop();
            }
        }
    }

    /// A dominating clique of maximum clique size, searched in descending
    /// lexicographic order of the sorted vertex lists. Requires a connected
    /// 2K2-free graph; returns `None` when `omega == 2` and no edge
    /// dominates (such graphs exist, e.g. the 5-cycle).
    pub fn dominating_clique(&self) -> Result<Option<VertexSet>> {
        if !self.is_connected() {
            return Err(Error::Contract(
                "dominating_clique requires a connected graph".into(),
            ));
        }
        if patterns::has_induced(self, PatternName::TwoK2) {
            return Err(Error::Contract(
                "dominating_clique requires a 2K2-free graph".into(),
            ));
        }
        let omega = self.clique_number();
        if omega == 0 {
            return Ok(None);
        }
        let mut cliques = self.cliques_of_size(omega);
        cliques.sort_by_key(|c| std::cmp::Reverse(c.to_vec()));
        Ok(cliques.into_iter().find(|c| self.dominates(*c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_validates() {
        assert!(Graph::from_edges(3, &[(0, 1), (1, 2)]).is_ok());
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            Graph::from_edges(2, &[(1, 1)]),
            Err(Error::Contract(_))
        ));
        assert!(matches!(Graph::empty(65), Err(Error::Capability(_))));
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 2)]).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
            assert!(!g.has_edge(u, u));
        }
    }

    #[test]
    fn simplicial_examples() {
        // Every vertex of a complete graph is simplicial.
        let k4 = complete(4);
        assert_eq!(k4.simplicial_vertices(), VertexSet::full(4));
        // C5 has none.
        assert!(cycle(5).simplicial_vertices().is_empty());
        // The endpoints of P4.
        let p4 = path(4);
        assert_eq!(p4.simplicial_vertices().to_vec(), vec![0, 3]);
    }

    #[test]
    fn module_examples() {
        let g = complete_bipartite(2, 3);
        // One side of K_{2,3} is a module.
        assert!(g.is_module(VertexSet::from_iter([0, 1])));
        // A mixed pair with one vertex per side is not.
        assert!(!g.is_module(VertexSet::from_iter([0, 2])));
        // Degenerate cases.
        assert!(g.is_module(VertexSet::singleton(3)));
        assert!(g.is_module(g.vertex_set()));
    }

    #[test]
    fn clique_and_independence_numbers() {
        assert_eq!(complete(5).clique_number(), 5);
        assert_eq!(complete(5).independence_number(), 1);
        assert_eq!(complete(5).max_degree(), 4);
        let c6 = cycle(6);
        assert_eq!(c6.clique_number(), 2);
        assert_eq!(c6.independence_number(), 3);
        assert_eq!(c6.max_degree(), 2);
        // 3K1 + K4: the join of an independent triple with a 4-clique.
        let g = join(&empty_graph(3), &complete(4));
        assert_eq!(g.clique_number(), 5);
        assert_eq!(g.independence_number(), 3);
        assert_eq!(g.max_degree(), 6);
    }

    #[test]
    fn bfs_layer_examples() {
        // Universal vertex: two layers.
        let star = star(4);
        let layers = star.bfs_layers(0).unwrap();
        assert_eq!(layers.len(), 2);
        assert_eq!(layers[1].len(), 4);
        // Path endpoint: singleton layers.
        let p5 = path(5);
        let layers = p5.bfs_layers(0).unwrap();
        assert_eq!(layers.len(), 5);
        assert!(layers.iter().all(|l| l.len() == 1));
        // Petersen: 1, 3, 6.
        let pet = petersen();
        for v in 0..10 {
            let sizes: Vec<usize> = pet.bfs_layers(v).unwrap().iter().map(|l| l.len()).collect();
            assert_eq!(sizes, vec![1, 3, 6]);
        }
        // Disconnected input is a contract error.
        let disc = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(disc.bfs_layers(0), Err(Error::Contract(_))));
    }

    #[test]
    fn remove_vertices_relabels() {
        let c6 = cycle(6);
        let (p5, map) = c6.remove_vertices(VertexSet::singleton(0)).unwrap();
        assert_eq!(p5.n(), 5);
        assert_eq!(p5.edge_count(), 4);
        assert_eq!(map, vec![1, 2, 3, 4, 5]);
        // Removing everything leaves the empty graph.
        let (e, map) = c6.remove_vertices(c6.vertex_set()).unwrap();
        assert_eq!(e.n(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn dominating_clique_examples() {
        // K_n: the whole vertex set.
        let k4 = complete(4);
        assert_eq!(k4.dominating_clique().unwrap(), Some(VertexSet::full(4)));
        // C5 is 2K2-free with omega = 2, and no edge dominates it.
        assert_eq!(cycle(5).dominating_clique().unwrap(), None);
        // A star has a dominating edge.
        let s = star(3);
        let w = s.dominating_clique().unwrap().unwrap();
        assert_eq!(w.len(), 2);
        assert!(w.contains(0));
        // P5 contains an induced 2K2: contract error.
        assert!(matches!(
            path(5).dominating_clique(),
            Err(Error::Contract(_))
        ));
    }
}
