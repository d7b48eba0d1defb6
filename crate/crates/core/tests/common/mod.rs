//! Naive oracles shared by the integration tests. Everything here is an
//! independent implementation path: subset-and-permutation scans, full n!
//! filters, and a from-scratch graph6 encoder, used to cross-check the
//! library's optimized routines.

#![allow(dead_code)]

use distchrom::graph::{self, Graph, VertexSet};
use distchrom::symmetry::Colouring;
use rand::Rng;

/// All permutations of 0..n (recursive, n <= 8 scale).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// True iff some subset of `g` induces a graph isomorphic to `pattern`,
/// checked by trying every subset and every bijection.
pub fn naive_has_induced(g: &Graph, pattern: &Graph) -> bool {
    let k = pattern.n();
    if g.n() < k {
        return false;
    }
    let perms = permutations(k);
    for subset in subsets_of_size(g.n(), k) {
        'perm: for perm in &perms {
            for i in 0..k {
                for j in i + 1..k {
                    if g.has_edge(subset[i], subset[j]) != pattern.has_edge(perm[i], perm[j]) {
                        continue 'perm;
                    }
                }
            }
            return true;
        }
    }
    false
}

/// The pattern catalogue as explicit graphs.
pub fn pattern_graph(name: &str) -> Graph {
    match name {
        "C3" => graph::cycle(3),
        "C4" => graph::cycle(4),
        "C5" => graph::cycle(5),
        "C6" => graph::cycle(6),
        "2K2" => graph::disjoint_union(&graph::complete(2), &graph::complete(2)),
        "claw" => graph::claw(),
        "diamond" => graph::diamond(),
        "K4" => graph::complete(4),
        other => panic!("unknown pattern {other}"),
    }
}

/// Count automorphisms by filtering all n! permutations.
pub fn naive_aut_count(g: &Graph, colouring: Option<&Colouring>) -> usize {
    let n = g.n();
    permutations(n)
        .into_iter()
        .filter(|perm| {
            if let Some(c) = colouring {
                if (0..n).any(|v| c.colour(v) != c.colour(perm[v])) {
                    return false;
                }
            }
            (0..n).all(|u| (0..n).all(|v| g.has_edge(u, v) == g.has_edge(perm[u], perm[v])))
        })
        .count()
}

/// An independent graph6 encoder: collect the upper-triangle bits
/// column-major into a vector, then pack six at a time.
pub fn reference_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62, "reference encoder covers the short form");
    let mut bits = Vec::new();
    for col in 1..n {
        for row in 0..col {
            bits.push(g.has_edge(row, col));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for &b in chunk {
            value = value << 1 | u8::from(b);
        }
        s.push((value + 63) as char);
    }
    s
}

/// Minimum reference encoding over all relabellings: an independent
/// canonical form for small graphs.
pub fn naive_canonical(g: &Graph) -> String {
    permutations(g.n())
        .into_iter()
        .map(|perm| reference_graph6(&g.relabelled(&perm)))
        .min()
        .expect("at least the identity")
}

/// Erdos-Renyi sample.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("size in range")
}

/// Random total colouring with colours in 1..=max_colour.
pub fn random_colouring<R: Rng>(rng: &mut R, n: usize, max_colour: u32) -> Colouring {
    Colouring::new((0..n).map(|_| rng.random_range(1..=max_colour)).collect()).unwrap()
}

/// Every connected graph on up to `n_max` vertices, via the library
/// enumerator (tests that need independence re-derive their own corpus).
pub fn connected_upto(n_max: usize) -> Vec<Graph> {
    (1..=n_max)
        .flat_map(|n| distchrom::corpus::enumerate_connected(n).expect("within cap"))
        .collect()
}

/// The set of vertices of `g` as a VertexSet.
pub fn vs(members: &[usize]) -> VertexSet {
    members.iter().copied().collect()
}
