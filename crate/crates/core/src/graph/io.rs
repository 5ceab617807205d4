//! Edge-list text and Graphviz DOT.
//!
//! Edge lists hold the vertex count on the first line and one `u v` pair
//! per following line with `u < v`. Vertex labels, when present, are
//! written as `# label <v> <text>` comment lines between the header and the
//! edges; other `#` lines and blank lines are ignored on input.

use std::fmt::Write as _;

use super::{GraphError, SimpleGraph};

impl SimpleGraph {
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.vertex_count());
        if let Some(labels) = self.labels() {
            for (v, label) in labels.iter().enumerate() {
                let _ = writeln!(out, "# label {v} {label}");
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut graph: Option<SimpleGraph> = None;
        let mut labels: Vec<(usize, usize, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if let Some(entry) = rest.trim_start().strip_prefix("label ") {
                    let (v, label) = entry.split_once(' ').unwrap_or((entry, ""));
                    let v = v.parse().map_err(|_| GraphError::Malformed {
                        line: line_no,
                        message: format!("bad label vertex {v:?}"),
                    })?;
                    labels.push((line_no, v, label.to_string()));
                }
                continue;
            }
            let malformed = |message: String| GraphError::Malformed {
                line: line_no,
                message,
            };
            match graph.as_mut() {
                None => {
                    let n = line
                        .parse()
                        .map_err(|_| malformed(format!("expected vertex count, found {line:?}")))?;
                    graph = Some(SimpleGraph::new(n));
                }
                Some(g) => {
                    let nums: Vec<usize> = line
                        .split_whitespace()
                        .map(|t| {
                            t.parse()
                                .map_err(|_| malformed(format!("bad vertex {t:?}")))
                        })
                        .collect::<Result<_, _>>()?;
                    let [u, v] = nums[..] else {
                        return Err(malformed(format!("expected \"u v\", found {line:?}")));
                    };
                    if u >= v {
                        return Err(malformed(format!("expected u < v, found {u} {v}")));
                    }
                    g.add_edge(u, v)?;
                }
            }
        }
        let graph = graph.ok_or(GraphError::Malformed {
            line: 0,
            message: "missing vertex count".into(),
        })?;
        if labels.is_empty() {
            return Ok(graph);
        }
        let n = graph.vertex_count();
        let mut names: Vec<Option<String>> = vec![None; n];
        for (line, v, label) in labels {
            if v >= n {
                return Err(GraphError::Malformed {
                    line,
                    message: format!("label for vertex {v} out of range"),
                });
            }
            names[v] = Some(label);
        }
        let names = names
            .into_iter()
            .enumerate()
            .map(|(v, l)| l.unwrap_or_else(|| v.to_string()))
            .collect();
        graph.with_labels(names)
    }

    /// Undirected DOT with quoted labels when present.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {} {{\n", quote(name));
        if let Some(labels) = self.labels() {
            for (v, label) in labels.iter().enumerate() {
                let _ = writeln!(out, "  {v} [label={}];", quote(label));
            }
        } else {
            for v in 0..self.vertex_count() {
                let _ = writeln!(out, "  {v};");
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
