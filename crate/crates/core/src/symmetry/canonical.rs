//! Canonical forms for isomorphism-free enumeration: the minimum graph6
//! string over all relabellings, found by branch and bound over vertex
//! orderings with orbit pruning.

use super::{automorphisms_up_to, Permutation};
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, write_graph6, Graph};

/// Size cap for canonical forms.
pub const CANONICAL_VERTEX_CAP: usize = 12;

/// Give up on full group listings beyond this many elements and fall back to
/// twin-swap pruning (large groups at this scale come from twin-heavy graphs,
/// which twin pruning handles well).
const GROUP_LIST_LIMIT: usize = 20_000;

/// Byte string equal for two graphs iff they are isomorphic: the minimum
/// graph6 encoding over all relabellings of `g`.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    if g.n() > CANONICAL_VERTEX_CAP {
        return Err(Error::Capability(format!(
            "canonical_form supports n <= {CANONICAL_VERTEX_CAP}, got {}",
            g.n()
        )));
    }
    let n = g.n();
    if n <= 1 {
        return write_graph6(g);
    }
    let total_bits = n * (n - 1) / 2;
    let auts = automorphisms_up_to(g, None, GROUP_LIST_LIMIT);
    let mut search = MinSearch {
        g,
        n,
        total_bits,
        best: u128::MAX,
        placed: Vec::with_capacity(n),
        placed_mask: 0,
    };
    match auts {
        Some(auts) => {
            let idx: Vec<usize> = (0..auts.len()).collect();
            search.descend_orbits(0, &auts, idx);
        }
        None => search.descend_twins(0),
    }
    // Rebuild the minimizing adjacency matrix and encode it.
    let mut edges = Vec::new();
    for bit in 0..total_bits {
        if search.best >> (total_bits - 1 - bit) & 1 == 1 {
            edges.push(triangle_position(bit));
        }
    }
    let canon = Graph::from_edges(n, &edges)?;
    write_graph6(&canon)
}

/// The canonically labelled representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    parse_graph6(&canonical_form(g)?)
}

fn triangle_position(idx: usize) -> (usize, usize) {
    let mut col = 1usize;
    let mut start = 0usize;
    while start + col <= idx {
        start += col;
        col += 1;
    }
    (idx - start, col)
}

struct MinSearch<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: usize,
    best: u128,
    placed: Vec<usize>,
    placed_mask: u64,
}

impl<'a> MinSearch<'a> {
    /// Bits contributed by putting `v` at the next position: its adjacency
    /// to the already placed vertices, in placement order.
    fn column_bits(&self, v: usize) -> u128 {
        let mut bits = 0u128;
        for &u in &self.placed {
            bits = bits << 1 | u128::from(self.g.has_edge(u, v));
        }
        bits
    }

    /// Compare the partial string (after appending `col`) against the best;
    /// returns the new partial and whether the branch is still viable.
    fn step(&self, partial: u128, col: u128) -> Option<u128> {
        let k = self.placed.len();
        let new_partial = partial << k | col;
        let done_bits = k * (k + 1) / 2;
        if self.best != u128::MAX {
            let best_prefix = self.best >> (self.total_bits - done_bits);
            if new_partial > best_prefix {
                return None;
            }
        }
        Some(new_partial)
    }

    fn place(&mut self, v: usize) {
        self.placed.push(v);
        self.placed_mask |= 1 << v;
    }

    fn unplace(&mut self) {
        let v = self.placed.pop().unwrap();
        self.placed_mask &= !(1 << v);
    }

    /// Search with full-group orbit pruning: at each level only one
    /// representative per orbit of the stabilizer of the placed prefix.
    fn descend_orbits(&mut self, partial: u128, auts: &[Permutation], live: Vec<usize>) {
        if self.placed.len() == self.n {
            if partial < self.best {
                self.best = partial;
            }
            return;
        }
        let reps = orbit_representatives(self.n, self.placed_mask, auts, &live);
        for v in reps {
            let col = self.column_bits(v);
            if let Some(new_partial) = self.step(partial, col) {
                let next_live: Vec<usize> = live
                    .iter()
                    .copied()
                    .filter(|&i| auts[i].apply(v) == v)
                    .collect();
                self.place(v);
                self.descend_orbits(new_partial, auts, next_live);
                self.unplace();
            }
        }
    }

    /// Fallback search: skip a candidate if it is a twin of an earlier
    /// sibling (the transposition is then an automorphism fixing the placed
    /// prefix, so both subtrees produce identical strings).
    fn descend_twins(&mut self, partial: u128) {
        if self.placed.len() == self.n {
            if partial < self.best {
                self.best = partial;
            }
            return;
        }
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if self.placed_mask >> v & 1 == 1 {
                continue;
            }
            if tried.iter().any(|&u| self.are_twins(u, v)) {
                continue;
            }
            tried.push(v);
            let col = self.column_bits(v);
            if let Some(new_partial) = self.step(partial, col) {
                self.place(v);
                self.descend_twins(new_partial);
                self.unplace();
            }
        }
    }

    fn are_twins(&self, u: usize, v: usize) -> bool {
        let mask = !(1u64 << u | 1u64 << v);
        self.g.neighbours(u).bits() & mask == self.g.neighbours(v).bits() & mask
    }
}

fn orbit_representatives(
    n: usize,
    placed_mask: u64,
    auts: &[Permutation],
    live: &[usize],
) -> Vec<usize> {
    let mut seen = placed_mask;
    let mut reps = Vec::new();
    for v in 0..n {
        if seen >> v & 1 == 1 {
            continue;
        }
        reps.push(v);
        // Mark v's orbit under the live subgroup.
        let mut frontier = vec![v];
        seen |= 1 << v;
        while let Some(x) = frontier.pop() {
            for &i in live {
                let y = auts[i].apply(x);
                if seen >> y & 1 == 0 {
                    seen |= 1 << y;
                    frontier.push(y);
                }
            }
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{claw, complete, cycle, petersen, star};

    #[test]
    fn relabellings_agree() {
        let pet = petersen();
        let base = canonical_form(&pet).unwrap();
        let perm: Vec<usize> = vec![3, 1, 4, 0, 5, 9, 2, 6, 8, 7];
        let relabelled = pet.relabelled(&perm);
        assert_eq!(canonical_form(&relabelled).unwrap(), base);
    }

    #[test]
    fn non_isomorphic_graphs_differ() {
        assert_ne!(
            canonical_form(&cycle(4)).unwrap(),
            canonical_form(&claw()).unwrap()
        );
    }

    #[test]
    fn twin_fallback_matches_orbit_mode() {
        // Stars have huge groups; K_{1,5} is still listable, so both code
        // paths are exercised elsewhere. Here just check stability.
        let s = star(5);
        let f = canonical_form(&s).unwrap();
        let perm = vec![5, 0, 1, 2, 3, 4];
        assert_eq!(canonical_form(&s.relabelled(&perm)).unwrap(), f);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            canonical_form(&complete(13)),
            Err(Error::Capability(_))
        ));
    }
}
