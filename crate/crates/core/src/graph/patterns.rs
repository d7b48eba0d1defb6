//! Fixed-pattern induced-subgraph detection and class profiling.
//!
//! Each pattern in the catalogue is recognized by a specialized subset scan:
//! on the vertex counts involved a degree-multiset plus an edge count pins
//! the isomorphism type, so no generic subgraph-isomorphism machinery is
//! needed.

use super::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// The forbidden-induced-subgraph catalogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternName {
    C3,
    C4,
    C5,
    C6,
    TwoK2,
    Claw,
    Diamond,
    K4,
}

impl PatternName {
    pub const ALL: [PatternName; 8] = [
        PatternName::C3,
        PatternName::C4,
        PatternName::C5,
        PatternName::C6,
        PatternName::TwoK2,
        PatternName::Claw,
        PatternName::Diamond,
        PatternName::K4,
    ];

    pub fn order(self) -> usize {
        match self {
            PatternName::C3 => 3,
            PatternName::C5 => 5,
            PatternName::C6 => 6,
            _ => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternName::C3 => "C3",
            PatternName::C4 => "C4",
            PatternName::C5 => "C5",
            PatternName::C6 => "C6",
            PatternName::TwoK2 => "2K2",
            PatternName::Claw => "claw",
            PatternName::Diamond => "diamond",
            PatternName::K4 => "K4",
        }
    }
}

/// True iff some vertex subset of `g` induces the pattern.
pub fn has_induced(g: &Graph, pattern: PatternName) -> bool {
    let k = pattern.order();
    if g.n() < k {
        return false;
    }
    let mut subset = vec![0usize; k];
    scan_subsets(g, pattern, 0, 0, &mut subset)
}

fn scan_subsets(g: &Graph, pattern: PatternName, depth: usize, start: usize, subset: &mut [usize]) -> bool {
    let k = subset.len();
    if depth == k {
        return matches_pattern(g, pattern, subset);
    }
    for v in start..g.n() {
        if g.n() - v < k - depth {
            return false;
        }
        subset[depth] = v;
        if scan_subsets(g, pattern, depth + 1, v + 1, subset) {
            return true;
        }
    }
    false
}

fn matches_pattern(g: &Graph, pattern: PatternName, vs: &[usize]) -> bool {
    let mut degs = [0usize; 6];
    let mut edges = 0usize;
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if g.has_edge(u, v) {
                edges += 1;
                degs[i] += 1;
            }
        }
        // Count edges to earlier members too so degs is the full induced degree.
        for &v in &vs[..i] {
            if g.has_edge(u, v) {
                degs[i] += 1;
            }
        }
    }
    let k = vs.len();
    match pattern {
        PatternName::C3 => edges == 3,
        PatternName::C4 => edges == 4 && degs[..k].iter().all(|&d| d == 2),
        // A 2-regular induced subgraph on 5 or 6 vertices is a cycle iff connected;
        // on 5 vertices 2-regularity already forces C5.
        PatternName::C5 => edges == 5 && degs[..k].iter().all(|&d| d == 2),
        PatternName::C6 => {
            edges == 6
                && degs[..k].iter().all(|&d| d == 2)
                && induced_connected(g, vs)
        }
        PatternName::TwoK2 => edges == 2 && degs[..k].iter().all(|&d| d == 1),
        PatternName::Claw => edges == 3 && degs[..k].contains(&3),
        PatternName::Diamond => edges == 5,
        PatternName::K4 => edges == 6,
    }
}

fn induced_connected(g: &Graph, vs: &[usize]) -> bool {
    let inside: VertexSet = vs.iter().copied().collect();
    let mut seen = VertexSet::singleton(vs[0]);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier.iter() {
            next = next.union(g.neighbours(v).intersection(inside));
        }
        next = next.difference(seen);
        seen = seen.union(next);
        frontier = next;
    }
    seen == inside
}

/// Chordality via maximum cardinality search: the reverse visit order is a
/// perfect elimination ordering iff the graph is chordal.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by_key(|&v| weight[v])
            .unwrap();
        visited.insert(v);
        order.push(v);
        for w in g.neighbours(v).iter() {
            if !visited.contains(w) {
                weight[w] += 1;
            }
        }
    }
    // Verify the perfect elimination ordering (reverse of MCS order): for each
    // vertex, its earlier neighbours must form a clique; it suffices to check
    // the latest earlier neighbour against the rest.
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    for &v in order.iter().rev() {
        let earlier: Vec<usize> = g
            .neighbours(v)
            .iter()
            .filter(|&w| position[w] < position[v])
            .collect();
        if let Some(&pivot) = earlier.iter().max_by_key(|&&w| position[w]) {
            for &w in &earlier {
                if w != pivot && !g.has_edge(pivot, w) {
                    return false;
                }
            }
        }
    }
    true
}

/// Membership flags for the forbidden-subgraph classes and a few structural
/// families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassProfile {
    pub c3_free: bool,
    pub c4_free: bool,
    pub c5_free: bool,
    pub c6_free: bool,
    pub two_k2_free: bool,
    pub claw_free: bool,
    pub diamond_free: bool,
    pub k4_free: bool,
    pub chordal: bool,
    pub complete: bool,
    pub complete_multipartite: bool,
    pub bipartite: bool,
    pub regular: bool,
}

impl ClassProfile {
    /// The set flags as kebab-case names, for reports and CLI output.
    pub fn flag_names(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut add = |cond: bool, name: &'static str| {
            if cond {
                out.push(name);
            }
        };
        add(self.c3_free, "c3-free");
        add(self.c4_free, "c4-free");
        add(self.c5_free, "c5-free");
        add(self.c6_free, "c6-free");
        add(self.two_k2_free, "2k2-free");
        add(self.claw_free, "claw-free");
        add(self.diamond_free, "diamond-free");
        add(self.k4_free, "k4-free");
        add(self.chordal, "chordal");
        add(self.complete, "complete");
        add(self.complete_multipartite, "complete-multipartite");
        add(self.bipartite, "bipartite");
        add(self.regular, "regular");
        out
    }
}

pub fn class_profile(g: &Graph) -> ClassProfile {
    ClassProfile {
        c3_free: !has_induced(g, PatternName::C3),
        c4_free: !has_induced(g, PatternName::C4),
        c5_free: !has_induced(g, PatternName::C5),
        c6_free: !has_induced(g, PatternName::C6),
        two_k2_free: !has_induced(g, PatternName::TwoK2),
        claw_free: !has_induced(g, PatternName::Claw),
        diamond_free: !has_induced(g, PatternName::Diamond),
        k4_free: !has_induced(g, PatternName::K4),
        chordal: is_chordal(g),
        complete: g.is_complete(),
        complete_multipartite: multipartite_parts(g).is_some(),
        bipartite: is_bipartite(g),
        regular: g.is_regular(),
    }
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut colour = vec![2u8; n];
    for s in 0..n {
        if colour[s] != 2 {
            continue;
        }
        colour[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in g.neighbours(v).iter() {
                if colour[w] == 2 {
                    colour[w] = 1 - colour[v];
                    stack.push(w);
                } else if colour[w] == colour[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// If `g` is complete multipartite, its part sizes in descending order.
///
/// A graph is complete multipartite iff every connected component of its
/// complement is a clique of the complement; those components are the parts.
pub fn multipartite_parts(g: &Graph) -> Option<Vec<usize>> {
    let comp = g.complement();
    let mut sizes = Vec::new();
    for part in comp.components() {
        if !comp.is_clique(part) {
            return None;
        }
        sizes.push(part.len());
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Some(sizes)
}

/// True iff `g` is K_{p,p} for some p >= 1.
pub fn is_balanced_complete_bipartite(g: &Graph) -> bool {
    match multipartite_parts(g) {
        Some(parts) => parts.len() == 2 && parts[0] == parts[1],
        None => false,
    }
}

/// True iff `g` is the cycle C_n for `n == g.n()`.
pub fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && g.vertices().all(|v| g.degree(v) == 2)
}
