//! Extending a distinguishing colouring over the simplicial vertices, and
//! the chordal colouring procedure built on repeated extension.

use super::{certify, rainbow};
use crate::error::{Error, Result};
use crate::graph::{is_chordal, Graph, VertexSet};
use crate::symmetry::{self, Colouring};

/// Extend a proper distinguishing colouring of `g - s` to all of `g`, where
/// `s` is the (nonempty) set of simplicial vertices of `g`.
///
/// The simplicial vertices are grouped by their neighbourhoods outside `s`;
/// each group is coloured injectively with the smallest colours absent from
/// `base` on its neighbourhood. The result is proper, and distinguishing
/// whenever `base` is.
///
/// `base` is indexed by the labels of `g.remove_vertices(s)`.
pub fn extend_over_simplicial(g: &Graph, s: VertexSet, base: &Colouring) -> Result<Colouring> {
    if !g.is_connected() {
        return Err(Error::Contract(
            "extend_over_simplicial requires a connected graph".into(),
        ));
    }
    if s != g.simplicial_vertices() || s.is_empty() {
        return Err(Error::Contract(
            "s must be the nonempty set of simplicial vertices of g".into(),
        ));
    }
    let (rest, old_of_new) = g.remove_vertices(s)?;
    if rest.n() == 0 {
        return Err(Error::Contract(
            "g - s is empty; callers handle complete graphs directly".into(),
        ));
    }
    if base.n() != rest.n() {
        return Err(Error::Contract(format!(
            "base colours {} vertices but g - s has {}",
            base.n(),
            rest.n()
        )));
    }
    if !symmetry::is_distinguishing(&rest, base)? {
        return Err(Error::Contract(
            "base must be a proper distinguishing colouring of g - s".into(),
        ));
    }

    let mut colours = vec![0u32; g.n()];
    for (new, &old) in old_of_new.iter().enumerate() {
        colours[old] = base.colour(new);
    }

    // Group s by equal neighbourhoods outside s; adjacent simplicial
    // vertices share a closed neighbourhood, so they land in one group.
    let mut groups: Vec<(u64, Vec<usize>)> = Vec::new();
    for v in s.iter() {
        let key = g.neighbours(v).difference(s).bits();
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, members)) => members.push(v),
            None => groups.push((key, vec![v])),
        }
    }
    groups.sort_by_key(|(_, members)| members[0]);

    for (_, members) in &groups {
        let outside: VertexSet = g
            .neighbourhood_of_set(members.iter().copied().collect())
            .difference(s);
        let used: std::collections::BTreeSet<u32> =
            outside.iter().map(|v| colours[v]).collect();
        let mut next = 1u32;
        for &v in members {
            while used.contains(&next) {
                next += 1;
            }
            colours[v] = next;
            next += 1;
        }
    }

    let c = Colouring::new(colours)?;
    certify(g, &c, "extend_over_simplicial")?;
    Ok(c)
}

/// Distinguishing colouring of a connected chordal graph by simplicial
/// peeling: strip the simplicial set, recurse, and extend back out. Uses at
/// most Delta + 2 colours, and at most Delta + 1 off the extremal families.
pub fn colour_chordal(g: &Graph) -> Result<Colouring> {
    if !g.is_connected() {
        return Err(Error::Contract("colour_chordal requires connectivity".into()));
    }
    if !is_chordal(g) {
        return Err(Error::Contract("colour_chordal requires a chordal graph".into()));
    }
    let c = peel(g)?;
    certify(g, &c, "colour_chordal")?;
    Ok(c)
}

fn peel(g: &Graph) -> Result<Colouring> {
    if g.is_complete() {
        return Ok(rainbow(g));
    }
    let s = g.simplicial_vertices();
    // A connected chordal graph always has simplicial vertices, and only
    // complete graphs consist of nothing else.
    debug_assert!(!s.is_empty() && s != g.vertex_set());
    let (rest, _) = g.remove_vertices(s)?;
    let base = peel(&rest)?;
    extend_over_simplicial(g, s, &base)
}
