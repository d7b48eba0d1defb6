//! Named graph fixtures shipped as graph6 strings.
//!
//! `fixtures.g6` holds one graph per line in a fixed order; the names below
//! index into it. The file is part of the crate's public interface and is
//! embedded at compile time.

use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};

/// Contents of the versioned fixtures file.
pub const FIXTURES_G6: &str = include_str!("../../fixtures.g6");

/// Fixture names, in file order.
pub const NAMES: [&str; 9] = [
    "c4",
    "c5",
    "c6",
    "k4",
    "k33",
    "fig_LK13",
    "ts_3_2",
    "ta_3_2",
    "tb_3_2",
];

pub fn fixture_names() -> &'static [&'static str] {
    &NAMES
}

/// Look up a fixture by name.
pub fn fixture(name: &str) -> Result<Graph> {
    let idx = NAMES
        .iter()
        .position(|&n| n == name)
        .ok_or_else(|| Error::Domain(format!("unknown fixture '{name}'")))?;
    let line = FIXTURES_G6
        .lines()
        .nth(idx)
        .ok_or_else(|| Error::Internal("fixtures file is shorter than the name table".into()))?;
    parse_graph6(line.as_bytes())
}
