//! Constructive colouring procedures for hereditary classes and the
//! extremal-graph classifiers.
//!
//! Every colouring returned by an operation in this module is certified
//! through the symmetry module before it is handed out; a certification
//! failure is an internal error and surfaces loudly.

mod c4free;
mod claw;
mod extremal;
mod fixtures;
mod line;
mod modules;
mod simplicial;
mod two_k2;

pub use c4free::{colour_c4_free, unique_vertex_check};
pub(crate) use claw::is_claw_exception;
pub use claw::colour_claw_free;
pub use extremal::{classify_extremal, is_join_alpha_k1_clique, ExtremalClass};
pub use fixtures::{fixture, fixture_names, FIXTURES_G6};
pub use line::{colour_claw_diamond_free, line_graph, line_root};
pub use modules::{module_partition, ModulePartition};
pub use simplicial::{colour_chordal, extend_over_simplicial};
pub use two_k2::colour_2k2_free;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry::{self, Colouring};

/// Certify that `c` is a proper distinguishing colouring of `g`; failures
/// indicate an implementation bug in the calling procedure.
pub(crate) fn certify(g: &Graph, c: &Colouring, procedure: &str) -> Result<()> {
    if !symmetry::is_proper(g, c)? {
        return Err(Error::Internal(format!(
            "{procedure} produced an improper colouring"
        )));
    }
    if symmetry::has_nonidentity_automorphism(g, Some(c)) {
        return Err(Error::Internal(format!(
            "{procedure} produced a non-distinguishing colouring"
        )));
    }
    Ok(())
}

/// Rainbow colouring of a complete graph (or any rigid case where all
/// vertices get distinct colours).
pub(crate) fn rainbow(g: &Graph) -> Colouring {
    Colouring::rainbow(g.n())
}
