//! Constructions for the standard small graphs used throughout the crate.

use super::Graph;

pub fn empty_graph(n: usize) -> Graph {
    Graph::empty(n).expect("builder size in range")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("builder size in range")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("builder size in range")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges).expect("builder size in range")
}

/// The star K_{1,m} with centre 0.
pub fn star(m: usize) -> Graph {
    let edges: Vec<_> = (1..=m).map(|v| (0, v)).collect();
    Graph::from_edges(m + 1, &edges).expect("builder size in range")
}

/// K_{1,3}, the claw.
pub fn claw() -> Graph {
    star(3)
}

/// K_4 minus an edge.
pub fn diamond() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
}

/// A triangle with a pendant edge (K_{1,3}+e in join-of-cliques notation).
pub fn paw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
}

pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    complete_multipartite(&[p, q])
}

pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("builder size in range")
}

/// The cocktail-party graph K_m[2K_1]: m parts of size 2.
pub fn cocktail_party(m: usize) -> Graph {
    complete_multipartite(&vec![2; m])
}

/// Join: all of `g`, all of `h`, and every edge in between.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n = g.n() + h.n();
    let mut edges = g.edges();
    for (u, v) in h.edges() {
        edges.push((u + g.n(), v + g.n()));
    }
    for u in 0..g.n() {
        for v in 0..h.n() {
            edges.push((u, v + g.n()));
        }
    }
    Graph::from_edges(n, &edges).expect("builder size in range")
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let n = g.n() + h.n();
    let mut edges = g.edges();
    for (u, v) in h.edges() {
        edges.push((u + g.n(), v + g.n()));
    }
    Graph::from_edges(n, &edges).expect("builder size in range")
}

pub fn petersen() -> Graph {
    Graph::from_edges(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
        ],
    )
    .unwrap()
}

/// A symmetric tree: the root has `delta` children, every other internal
/// vertex has `delta - 1` children, and all leaves sit at depth `height`.
/// Vertex 0 is the root and children are appended in BFS order.
pub fn symmetric_tree(delta: usize, height: usize) -> Graph {
    assert!(height >= 1 && delta >= 2);
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];
    let mut next_label = 1usize;
    for depth in 0..height {
        let mut next_frontier = Vec::new();
        for &v in &frontier {
            let kids = if depth == 0 { delta } else { delta - 1 };
            for _ in 0..kids {
                edges.push((v, next_label));
                next_frontier.push(next_label);
                next_label += 1;
            }
        }
        frontier = next_frontier;
    }
    Graph::from_edges(next_label, &edges).expect("builder size in range")
}

/// The leaf groups of a symmetric tree: for each support vertex, the set of
/// leaves in its neighbourhood.
fn leaf_groups(t: &Graph) -> Vec<Vec<usize>> {
    let leaves: Vec<usize> = t.vertices().filter(|&v| t.degree(v) == 1).collect();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for v in t.vertices() {
        if t.degree(v) > 1 {
            let mine: Vec<usize> = leaves.iter().copied().filter(|&l| t.has_edge(v, l)).collect();
            if !mine.is_empty() {
                groups.push(mine);
            }
        }
    }
    groups
}

/// The symmetric graph T_A built from `symmetric_tree(delta, height)` by
/// completing each support's set of leaf neighbours into a clique.
pub fn symmetric_graph_a(delta: usize, height: usize) -> Graph {
    let t = symmetric_tree(delta, height);
    let mut edges = t.edges();
    for group in leaf_groups(&t) {
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                edges.push((group[i], group[j]));
            }
        }
    }
    Graph::from_edges(t.n(), &edges).expect("builder size in range")
}

/// The symmetric graph T_B: as T_A, plus one new vertex per support adjacent
/// to exactly that support's leaf neighbours.
pub fn symmetric_graph_b(delta: usize, height: usize) -> Graph {
    let t = symmetric_tree(delta, height);
    let groups = leaf_groups(&t);
    let mut edges = t.edges();
    for group in &groups {
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                edges.push((group[i], group[j]));
            }
        }
    }
    let mut next = t.n();
    for group in &groups {
        for &l in group {
            edges.push((next, l));
        }
        next += 1;
    }
    Graph::from_edges(next, &edges).expect("builder size in range")
}

/// The 9-vertex graph drawn in the figure labelled "L(K_{1,3})": a 6-cycle
/// 0..5 plus three mutually non-adjacent vertices attached to four cycle
/// vertices each. Isomorphic to the 3x3 rook's graph L(K_{3,3}).
pub fn fig_lk13() -> Graph {
    let mut edges: Vec<_> = (1..6).map(|v| (v - 1, v)).collect();
    edges.push((5, 0));
    edges.extend_from_slice(&[(6, 0), (6, 1), (6, 3), (6, 4)]);
    edges.extend_from_slice(&[(7, 0), (7, 2), (7, 3), (7, 5)]);
    edges.extend_from_slice(&[(8, 1), (8, 2), (8, 4), (8, 5)]);
    Graph::from_edges(9, &edges).unwrap()
}
