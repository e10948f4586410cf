//! Text format:
//!
//! ```text
//! N_X N_E
//! u v            (N_E lines, 0-based)
//! faces F        (optional)
//! x0 x1 x2 ...   (F lines, one closed walk each)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::str::FromStr;

use super::{Graph, GraphError};

fn parse_err(line: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        reason: reason.into(),
    }
}

fn numbers(line_no: usize, text: &str) -> Result<Vec<usize>, GraphError> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("`{t}` is not a vertex index")))
        })
        .collect()
}

impl Graph {
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for &(u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        if !self.faces().is_empty() {
            writeln!(out, "faces {}", self.faces().len()).unwrap();
            for face in self.faces() {
                let row: Vec<String> = face.iter().map(|x| x.to_string()).collect();
                writeln!(out, "{}", row.join(" ")).unwrap();
            }
        }
        out
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (no, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
        let head = numbers(no, header)?;
        let [n, m] = head[..] else {
            return Err(parse_err(no, "header must be `N_X N_E`"));
        };
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (no, l) = lines
                .next()
                .ok_or_else(|| parse_err(no, format!("expected {m} edge lines")))?;
            match numbers(no, l)?[..] {
                [u, v] => edges.push((u, v)),
                _ => return Err(parse_err(no, "edge line must be `u v`")),
            }
        }
        let graph = Graph::new(n, edges)?;
        let Some((no, l)) = lines.next() else {
            return Ok(graph);
        };
        let count = l
            .strip_prefix("faces")
            .and_then(|rest| rest.trim().parse::<usize>().ok())
            .ok_or_else(|| parse_err(no, "expected `faces F`"))?;
        let mut faces = Vec::with_capacity(count);
        for _ in 0..count {
            let (no, l) = lines
                .next()
                .ok_or_else(|| parse_err(no, format!("expected {count} face lines")))?;
            faces.push(numbers(no, l)?);
        }
        if let Some((no, _)) = lines.next() {
            return Err(parse_err(no, "trailing content"));
        }
        graph.with_faces(faces)
    }
}
