//! Connection files:
//!
//! ```text
//! graph <path or catalog name>
//! group <spec, e.g. C4 or S3>
//! u v h          (one per edge; h is an element index, P(u,v) = h)
//! ```
//!
//! Blank lines and `#` comments are ignored. The graph and group are resolved
//! by the caller, so this module never touches the file system.

use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use super::{Connection, GaugeError};
use crate::graph_space::Graph;
use crate::perm_group::PermutationGroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionText {
    pub graph: String,
    pub group: String,
    /// `(line, u, v, h)`.
    pub assignments: Vec<(usize, usize, usize, usize)>,
}

fn parse_err(line: usize, reason: impl Into<String>) -> GaugeError {
    GaugeError::Parse {
        line,
        reason: reason.into(),
    }
}

impl FromStr for ConnectionText {
    type Err = GaugeError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let mut header = |key: &str| {
            let (no, l) = lines
                .next()
                .ok_or_else(|| parse_err(1, format!("missing `{key}` line")))?;
            l.strip_prefix(key)
                .map(str::trim)
                .filter(|v| !v.is_empty())
                .map(str::to_string)
                .ok_or_else(|| parse_err(no, format!("expected `{key} <value>`")))
        };
        let graph = header("graph")?;
        let group = header("group")?;
        let mut assignments = Vec::new();
        for (no, l) in lines {
            let nums = l
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| parse_err(no, format!("`{t}` is not an index")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            match nums[..] {
                [u, v, h] => assignments.push((no, u, v, h)),
                _ => return Err(parse_err(no, "edge line must be `u v h_index`")),
            }
        }
        Ok(Self {
            graph,
            group,
            assignments,
        })
    }
}

impl ConnectionText {
    /// Checks that every edge is assigned exactly once and builds the
    /// connection. Lines written as `v u h` with `v > u` store `h⁻¹`.
    pub fn build(
        &self,
        graph: Arc<Graph>,
        group: Arc<PermutationGroup>,
    ) -> Result<Connection<PermutationGroup>, GaugeError> {
        let mut values: Vec<Option<usize>> = vec![None; graph.edge_count()];
        for &(no, u, v, h) in &self.assignments {
            let i = graph
                .edge_index(u, v)
                .ok_or_else(|| parse_err(no, format!("{u}-{v} is not an edge")))?;
            if h >= group.order() {
                return Err(parse_err(
                    no,
                    format!("element index {h} out of range for a group of order {}", group.order()),
                ));
            }
            if values[i].is_some() {
                return Err(GaugeError::DuplicateAssignment(u.min(v), u.max(v)));
            }
            values[i] = Some(if u < v { h } else { group.inv(h) });
        }
        let values = values
            .into_iter()
            .zip(graph.edges())
            .map(|(v, &(x, y))| v.ok_or(GaugeError::MissingAssignment(x, y)))
            .collect::<Result<Vec<_>, _>>()?;
        Connection::new(graph, group, values)
    }
}

impl Connection<PermutationGroup> {
    /// Serialises with the given graph reference and group spec headers.
    pub fn to_text(&self, graph_ref: &str, group_spec: &str) -> String {
        let mut out = format!("graph {graph_ref}\ngroup {group_spec}\n");
        for (&(x, y), h) in self.graph.edges().iter().zip(&self.values) {
            writeln!(out, "{x} {y} {h}").unwrap();
        }
        out
    }
}
