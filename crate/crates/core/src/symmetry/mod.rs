//! Colour-preserving automorphisms, fixed vertices, and distinguishing
//! certification.
//!
//! Automorphism search backtracks over vertex images inside the cells of an
//! equitable partition seeded by colour classes and degrees. Groups are
//! returned as full element lists: the orders arising here are tiny and the
//! downstream fixed-vertex computation is simplest over the full list.

mod canonical;

pub use canonical::{canonical_form, canonical_graph};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Size cap for full automorphism-group listings.
pub const AUTOMORPHISM_VERTEX_CAP: usize = 16;

/// A bijection on `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Permutation> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(Error::Contract("image is not a bijection".into()));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }
}

/// A total vertex colouring with colours numbered from 1.
///
/// Properness and distinguishing-ness are checked predicates, not type
/// invariants: intermediate constructions colour vertices incrementally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    colours: Vec<u32>,
}

impl Colouring {
    pub fn new(colours: Vec<u32>) -> Result<Colouring> {
        if colours.contains(&0) {
            return Err(Error::Contract("colours must be positive".into()));
        }
        Ok(Colouring { colours })
    }

    /// All vertices coloured 1.
    pub fn constant(n: usize) -> Colouring {
        Colouring {
            colours: vec![1; n],
        }
    }

    /// Vertex `v` coloured `v + 1`.
    pub fn rainbow(n: usize) -> Colouring {
        Colouring {
            colours: (1..=n as u32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.colours.len()
    }

    pub fn colour(&self, v: usize) -> u32 {
        self.colours[v]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colours
    }

    pub fn distinct_count(&self) -> usize {
        self.colours.iter().collect::<std::collections::BTreeSet<_>>().len()
    }

    pub fn max_colour(&self) -> u32 {
        self.colours.iter().copied().max().unwrap_or(0)
    }

    /// Apply a colour renaming.
    pub fn renamed(&self, map: impl Fn(u32) -> u32) -> Result<Colouring> {
        Colouring::new(self.colours.iter().map(|&c| map(c)).collect())
    }
}

/// The colour-preserving automorphism group of `(g, c)`, listed in full.
#[derive(Debug, Clone)]
pub struct AutomorphismReport {
    /// Every element of Aut(g, c); the identity is always present.
    pub all: Vec<Permutation>,
    /// Vertices fixed by every listed automorphism.
    pub fixed: VertexSet,
    /// Group order, equal to `all.len()`.
    pub order: usize,
}

fn check_total(g: &Graph, c: &Colouring) -> Result<()> {
    if c.n() != g.n() {
        return Err(Error::Contract(format!(
            "colouring covers {} vertices but the graph has {}",
            c.n(),
            g.n()
        )));
    }
    Ok(())
}

/// True iff no edge of `g` is monochromatic under `c`.
pub fn is_proper(g: &Graph, c: &Colouring) -> Result<bool> {
    check_total(g, c)?;
    Ok(g
        .edges()
        .iter()
        .all(|&(u, v)| c.colour(u) != c.colour(v)))
}

/// The equitable refinement of the partition of vertices by
/// `(colour, degree)`, as a cell index per vertex. Any colour-preserving
/// automorphism maps each cell onto itself.
fn equitable_cells(g: &Graph, c: Option<&Colouring>) -> Vec<usize> {
    let n = g.n();
    let init_keys: Vec<u64> = (0..n)
        .map(|v| {
            let colour = c.map_or(0, |c| c.colour(v) as u64);
            colour << 32 | g.degree(v) as u64
        })
        .collect();
    let mut cell = assign_cells(&init_keys);
    loop {
        let ncells = cell.iter().max().map_or(0, |&m| m + 1);
        // Signature of a vertex: its cell plus neighbour counts per cell.
        // Splitting by signatures only ever refines the partition, so this
        // reaches a fixpoint in at most n rounds.
        let sigs: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut sig = vec![0usize; ncells + 1];
                sig[0] = cell[v];
                for w in g.neighbours(v).iter() {
                    sig[cell[w] + 1] += 1;
                }
                sig
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
        let mut new_cell = vec![0usize; n];
        let mut next = 0usize;
        for i in 0..n {
            if i > 0 && sigs[order[i]] != sigs[order[i - 1]] {
                next += 1;
            }
            new_cell[order[i]] = next;
        }
        if new_cell == cell {
            break;
        }
        cell = new_cell;
    }
    cell
}

fn assign_cells(keys: &[u64]) -> Vec<usize> {
    let mut sorted: Vec<(usize, u64)> = keys.iter().copied().enumerate().collect();
    sorted.sort_by_key(|&(_, k)| k);
    let mut cell = vec![0usize; keys.len()];
    let mut next = 0usize;
    for i in 0..keys.len() {
        if i > 0 && sorted[i].1 != sorted[i - 1].1 {
            next += 1;
        }
        cell[sorted[i].0] = next;
    }
    cell
}

struct AutSearch<'a> {
    g: &'a Graph,
    cell: Vec<usize>,
    image: Vec<usize>,
    used: u64,
}

impl<'a> AutSearch<'a> {
    fn new(g: &'a Graph, c: Option<&Colouring>) -> AutSearch<'a> {
        AutSearch {
            g,
            cell: equitable_cells(g, c),
            image: vec![usize::MAX; g.n()],
            used: 0,
        }
    }

    /// Enumerate automorphisms; `visit` returns false to stop the search.
    fn run(&mut self, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
        self.extend(0, visit)
    }

    fn extend(&mut self, v: usize, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
        let n = self.g.n();
        if v == n {
            return visit(&self.image);
        }
        for w in 0..n {
            if self.used >> w & 1 == 1 || self.cell[w] != self.cell[v] {
                continue;
            }
            if !self.consistent(v, w) {
                continue;
            }
            self.image[v] = w;
            self.used |= 1 << w;
            let go_on = self.extend(v + 1, visit);
            self.image[v] = usize::MAX;
            self.used &= !(1 << w);
            if !go_on {
                return false;
            }
        }
        true
    }

    fn consistent(&self, v: usize, w: usize) -> bool {
        for u in 0..v {
            if self.g.has_edge(u, v) != self.g.has_edge(self.image[u], w) {
                return false;
            }
        }
        true
    }
}

/// Enumerate Aut(g, c) in full (Aut(g) when `c` is `None`).
///
/// Capped at 16 vertices: listings are for desk-scale graphs.
pub fn automorphisms(g: &Graph, c: Option<&Colouring>) -> Result<AutomorphismReport> {
    if g.n() > AUTOMORPHISM_VERTEX_CAP {
        return Err(Error::Capability(format!(
            "automorphism listing supports n <= {AUTOMORPHISM_VERTEX_CAP}, got {}",
            g.n()
        )));
    }
    if let Some(c) = c {
        check_total(g, c)?;
    }
    let mut all = Vec::new();
    let mut search = AutSearch::new(g, c);
    search.run(&mut |image| {
        all.push(Permutation {
            image: image.to_vec(),
        });
        true
    });
    let mut fixed = g.vertex_set();
    for p in &all {
        let moved: VertexSet = (0..g.n()).filter(|&v| p.apply(v) != v).collect();
        fixed = fixed.difference(moved);
    }
    let order = all.len();
    Ok(AutomorphismReport { all, fixed, order })
}

/// Enumerate Aut(g, c) but give up once more than `limit` elements exist.
pub(crate) fn automorphisms_up_to(
    g: &Graph,
    c: Option<&Colouring>,
    limit: usize,
) -> Option<Vec<Permutation>> {
    let mut all = Vec::new();
    let mut search = AutSearch::new(g, c);
    let complete = search.run(&mut |image| {
        all.push(Permutation {
            image: image.to_vec(),
        });
        all.len() <= limit
    });
    if complete {
        Some(all)
    } else {
        None
    }
}

/// True iff some non-identity automorphism preserves `(g, c)`.
///
/// Early-exits on the first witness, so this works beyond the full-listing
/// cap.
pub fn has_nonidentity_automorphism(g: &Graph, c: Option<&Colouring>) -> bool {
    let mut found = false;
    let mut search = AutSearch::new(g, c);
    search.run(&mut |image| {
        if image.iter().enumerate().any(|(i, &v)| i != v) {
            found = true;
            false
        } else {
            true
        }
    });
    found
}

/// Vertices fixed by every element of Aut(g, c).
pub fn fixed_vertices(g: &Graph, c: &Colouring) -> Result<VertexSet> {
    Ok(automorphisms(g, Some(c))?.fixed)
}

/// True iff `c` is a proper colouring whose only colour-preserving
/// automorphism is the identity.
pub fn is_distinguishing(g: &Graph, c: &Colouring) -> Result<bool> {
    if !is_proper(g, c)? {
        return Ok(false);
    }
    Ok(!has_nonidentity_automorphism(g, Some(c)))
}
