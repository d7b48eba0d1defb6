//! Distinguishing colourings of connected 2K2-free graphs within
//! `2*Delta - omega + 2` colours.
//!
//! A dominating clique of size omega anchors the construction: its highest
//! degree vertex takes the top colour, its neighbours take `1..=d(w)`
//! injectively, and the remaining vertices are coloured greedily while
//! avoiding the colours of same-trace predecessors (vertices with the same
//! neighbours inside `N[w]`). One exceptional shape admits a direct
//! `n - 1`-colour scheme instead.

use super::certify;
use crate::error::{Error, Result};
use crate::graph::{has_induced, is_balanced_complete_bipartite, Graph, PatternName};
use crate::symmetry::{self, Colouring};

pub fn colour_2k2_free(g: &Graph) -> Result<Colouring> {
    if !g.is_connected() {
        return Err(Error::Contract("colour_2k2_free requires connectivity".into()));
    }
    if has_induced(g, PatternName::TwoK2) {
        return Err(Error::Contract("colour_2k2_free requires a 2K2-free graph".into()));
    }
    let omega = g.clique_number();
    if omega < 3 {
        return Err(Error::Contract(
            "colour_2k2_free requires clique number at least 3".into(),
        ));
    }
    if g.is_complete() {
        return Err(Error::Contract(
            "complete graphs are the equality case; callers use a rainbow colouring".into(),
        ));
    }
    if is_balanced_complete_bipartite(g) {
        return Err(Error::Contract(
            "balanced complete bipartite graphs are the equality case".into(),
        ));
    }
    let delta = g.max_degree();
    let bound = 2 * delta + 2 - omega;
    let top = (2 * delta + 1 - omega) as u32;

    let clique = g
        .dominating_clique()?
        .ok_or_else(|| Error::Internal("2K2-free with omega >= 3 must have a dominating clique".into()))?;
    let w = clique
        .iter()
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .expect("clique is nonempty");

    let mut colours = vec![0u32; g.n()];
    colours[w] = top;
    for (next, v) in (1u32..).zip(g.neighbours(w).iter()) {
        colours[v] = next;
    }

    // Trace: the neighbours inside N[w]; same-trace non-neighbours must
    // receive distinct colours so no automorphism can swap them.
    let closed_w = g.closed_neighbourhood(w);
    let trace = |v: usize| g.neighbours(v).intersection(closed_w).bits();
    let rest: Vec<usize> = g
        .vertices()
        .filter(|&v| !closed_w.contains(v))
        .collect();
    for (i, &v) in rest.iter().enumerate() {
        let mut forbidden: std::collections::BTreeSet<u32> = g
            .neighbours(v)
            .iter()
            .map(|x| colours[x])
            .filter(|&c| c != 0)
            .collect();
        for &p in &rest[..i] {
            if !g.has_edge(p, v) && trace(p) == trace(v) {
                forbidden.insert(colours[p]);
            }
        }
        let mut c = 1u32;
        while forbidden.contains(&c) {
            c += 1;
        }
        colours[v] = c;
    }

    // Exceptional shape: some outside vertex carries the top colour with
    // the same degree as w and every colour of [d(w)] in its neighbourhood.
    // There the graph has exactly 2*Delta - omega + 2 vertices and an
    // (n-1)-colour scheme sharing one colour between a clique vertex and a
    // neighbour of w does better.
    let dw = g.degree(w) as u32;
    let exceptional = rest.iter().any(|&v| {
        colours[v] == top
            && g.degree(v) == dw as usize
            && (1..=dw).all(|c| g.neighbours(v).iter().any(|x| colours[x] == c))
    });
    let c = if exceptional {
        repair_colouring(g, clique.iter().collect::<Vec<_>>().as_slice(), w)?
    } else {
        Colouring::new(colours)?
    };

    if c.distinct_count() > bound {
        return Err(Error::Internal(format!(
            "2K2-free construction used {} colours, beyond the bound {bound}",
            c.distinct_count()
        )));
    }
    certify(g, &c, "colour_2k2_free")?;
    Ok(c)
}

/// The repair scheme: one clique vertex shares its colour with a chosen
/// non-adjacent neighbour of `w`, everything except `w` is otherwise
/// rainbow, giving `n - 1` colours.
fn repair_colouring(g: &Graph, clique: &[usize], w: usize) -> Result<Colouring> {
    let outside_clique: Vec<usize> = g
        .neighbours(w)
        .iter()
        .filter(|&v| !clique.contains(&v))
        .collect();
    for &wp in clique.iter().filter(|&&x| x != w) {
        for &v in &outside_clique {
            if g.has_edge(v, wp) {
                continue;
            }
            let mut colours = vec![0u32; g.n()];
            let mut next = 1u32;
            for x in g.vertices().filter(|&x| x != w && x != v) {
                colours[x] = next;
                next += 1;
            }
            colours[v] = colours[wp];
            colours[w] = next;
            let c = Colouring::new(colours)?;
            if symmetry::is_distinguishing(g, &c)? {
                return Ok(c);
            }
        }
    }
    Err(Error::Internal(
        "repair scheme failed to produce a distinguishing colouring".into(),
    ))
}
