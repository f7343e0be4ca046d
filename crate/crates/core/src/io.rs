//! Scheme files.
//!
//! A scheme file is one JSON document in one of two shapes:
//!
//! ```json
//! { "type": "relation_matrix", "name": "pentagon", "n": 5, "d": 2,
//!   "rows": [[0,1,2,2,1], [1,0,1,2,2], [2,1,0,1,2], [2,2,1,0,1], [1,2,2,1,0]] }
//!
//! { "type": "graph", "name": "square", "n": 4,
//!   "edges": [[0,1], [1,2], [2,3], [3,0]] }
//! ```
//!
//! A graph is turned into the distance partition of its vertex set. Either
//! way the result must satisfy the scheme axioms. `name` is optional.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;

use crate::catalog;
use crate::scheme::{adjacency_from_edges, from_distance_partition, validate_axioms, RelationTable};
use crate::{Error, Result};

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum SchemeDoc {
    RelationMatrix {
        name: Option<String>,
        n: usize,
        d: usize,
        rows: Vec<Vec<usize>>,
    },
    Graph {
        name: Option<String>,
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

/// A validated scheme read from a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedScheme {
    pub name: Option<String>,
    pub table: RelationTable,
}

fn line_of(text: &str, field: &str) -> usize {
    let key = format!("\"{field}\"");
    text.lines().position(|l| l.contains(&key)).map_or(1, |i| i + 1)
}

fn parse_error(text: &str, field: &str, message: impl Into<String>) -> Error {
    Error::Parse { line: line_of(text, field), field: field.to_string(), message: message.into() }
}

/// Parses and validates a scheme document.
pub fn parse_scheme(text: &str) -> Result<LoadedScheme> {
    let doc: SchemeDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        field: "document".into(),
        message: e.to_string(),
    })?;
    let (name, table) = match doc {
        SchemeDoc::RelationMatrix { name, n, d, rows } => {
            if rows.len() != n {
                return Err(parse_error(text, "rows", format!("{} rows, but n = {n}", rows.len())));
            }
            let table = RelationTable::from_rows(&rows, d).map_err(|e| match e {
                Error::RaggedTable { row, len, n } => {
                    parse_error(text, "rows", format!("rows[{row}] has {len} entries, expected {n}"))
                }
                Error::RelationOutOfRange { x, y, value, d } => {
                    parse_error(text, "rows", format!("rows[{x}][{y}] = {value} exceeds d = {d}"))
                }
                Error::TooFewPoints(n) => parse_error(text, "n", format!("need n >= 2, got {n}")),
                other => other,
            })?;
            (name, table)
        }
        SchemeDoc::Graph { name, n, edges } => {
            let adj = adjacency_from_edges(n, &edges).map_err(|e| parse_error(text, "edges", e.to_string()))?;
            let table = from_distance_partition(&adj).map_err(|e| match e {
                Error::TooFewPoints(n) => parse_error(text, "n", format!("need n >= 2, got {n}")),
                other => other,
            })?;
            (name, table)
        }
    };
    validate_axioms(&table)?;
    Ok(LoadedScheme { name, table })
}

pub fn load_scheme(path: impl AsRef<Path>) -> Result<LoadedScheme> {
    let text = std::fs::read_to_string(path)?;
    parse_scheme(&text)
}

/// Renders a table as a `relation_matrix` document, one row per line.
pub fn render_scheme(name: Option<&str>, table: &RelationTable) -> String {
    let mut out = String::from("{\n  \"type\": \"relation_matrix\",\n");
    if let Some(name) = name {
        let quoted = serde_json::to_string(name).expect("strings serialize");
        writeln!(out, "  \"name\": {quoted},").unwrap();
    }
    writeln!(out, "  \"n\": {},\n  \"d\": {},\n  \"rows\": [", table.n(), table.d()).unwrap();
    let rows = table.rows();
    for (x, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let sep = if x + 1 == rows.len() { "" } else { "," };
        writeln!(out, "    [{}]{sep}", cells.join(", ")).unwrap();
    }
    out.push_str("  ]\n}\n");
    out
}

/// Writes the catalog scheme `name` to `path`.
pub fn dump_catalog(name: &str, path: impl AsRef<Path>) -> Result<()> {
    let entry = catalog::by_name(name)?;
    std::fs::write(path, render_scheme(Some(&entry.name), &entry.table))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_matrix_pentagon() {
        let text = render_scheme(Some("pentagon"), &catalog::cycle(5).unwrap().table);
        let loaded = parse_scheme(&text).unwrap();
        assert_eq!(loaded.name.as_deref(), Some("pentagon"));
        assert_eq!(loaded.table, catalog::cycle(5).unwrap().table);
    }

    #[test]
    fn graph_document() {
        let text = r#"{"type": "graph", "n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]}"#;
        let loaded = parse_scheme(text).unwrap();
        assert_eq!(loaded.table, catalog::cycle(4).unwrap().table);
        assert_eq!(loaded.name, None);
    }

    #[test]
    fn out_of_range_entry_points_at_rows() {
        let text = "{\n  \"type\": \"relation_matrix\",\n  \"n\": 3,\n  \"d\": 2,\n  \"rows\": [[0,7,1],[7,0,1],[1,1,0]]\n}";
        match parse_scheme(text) {
            Err(Error::Parse { line, field, message }) => {
                assert_eq!(line, 5);
                assert_eq!(field, "rows");
                assert!(message.contains("rows[0][1] = 7"), "{message}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn syntax_and_schema_errors() {
        assert!(matches!(parse_scheme("{ \"type\": \"graph\", "), Err(Error::Parse { .. })));
        assert!(matches!(parse_scheme(r#"{"type": "table", "n": 2}"#), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_scheme(r#"{"type": "graph", "n": 3, "edges": [[0,5]]}"#),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn non_schemes_propagate() {
        let p3 = r#"{"type": "graph", "n": 3, "edges": [[0,1],[1,2]]}"#;
        assert!(matches!(parse_scheme(p3), Err(Error::NotAScheme { .. })));
        let split = r#"{"type": "graph", "n": 4, "edges": [[0,1],[2,3]]}"#;
        assert!(matches!(parse_scheme(split), Err(Error::Disconnected(..))));
    }
}
