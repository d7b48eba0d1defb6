//! Distinguishing colourings of connected claw-free graphs within
//! `chi + p` colours, by colouring each part of a maximum module partition
//! with at most one colour beyond its chromatic number and concatenating
//! disjoint colour ranges.

use super::{certify, fixtures, module_partition, rainbow};
use crate::error::{Error, Result};
use crate::exact;
use crate::graph::{has_induced, is_cycle, Graph, PatternName};
use crate::symmetry::Colouring;

/// True iff `g` is one of the two exceptional claw-free graphs: the 6-cycle
/// or the 9-vertex figure graph.
pub(crate) fn is_claw_exception(g: &Graph) -> Result<bool> {
    if is_cycle(g) && g.n() == 6 {
        return Ok(true);
    }
    if g.n() == 9 && g.vertices().all(|v| g.degree(v) == 4) {
        let fig = fixtures::fixture("fig_LK13")?;
        return Ok(crate::symmetry::canonical_form(g)? == crate::symmetry::canonical_form(&fig)?);
    }
    Ok(false)
}

pub fn colour_claw_free(g: &Graph) -> Result<Colouring> {
    if g.n() == 0 {
        return Err(Error::Contract("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Contract("colour_claw_free requires connectivity".into()));
    }
    if has_induced(g, PatternName::Claw) {
        return Err(Error::Contract("colour_claw_free requires a claw-free graph".into()));
    }
    if is_claw_exception(g)? {
        return Err(Error::Domain(
            "exceptional input (C6 or the figure graph): use the exact oracle".into(),
        ));
    }
    if g.is_complete() {
        let c = rainbow(g);
        certify(g, &c, "colour_claw_free")?;
        return Ok(c);
    }

    let partition = module_partition(g)?;
    let mut colours = vec![0u32; g.n()];
    let mut offset = 0u32;
    for part in &partition.parts {
        let keep: crate::graph::VertexSet = part.iter().copied().collect();
        let (sub, old_of_new) = g.induced(keep)?;
        let chi_i = exact::chromatic_number(&sub)?;
        // Parts may induce disconnected graphs (e.g. two cliques); the
        // partition search itself does not need connectivity.
        let ci = exact::capped_partition_search(&sub, chi_i + 1, None)?.ok_or_else(|| {
            Error::TheoremViolation(format!(
                "module part admits no distinguishing colouring within chi+1 = {}",
                chi_i + 1
            ))
        })?;
        for (new, &old) in old_of_new.iter().enumerate() {
            colours[old] = ci.colour(new) + offset;
        }
        offset += ci.max_colour();
    }
    let c = Colouring::new(colours)?;
    let chi = exact::chromatic_number(g)?;
    if c.distinct_count() > chi + partition.p {
        return Err(Error::Internal(format!(
            "claw-free construction used {} colours, beyond chi + p = {}",
            c.distinct_count(),
            chi + partition.p
        )));
    }
    certify(g, &c, "colour_claw_free")?;
    Ok(c)
}
