//! Text formats: graph6, edge lists, and the family mini-language.

mod edge_list;
mod graph6;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use aenergy_core::{FamilySpec, Graph};

use crate::{Error, Result};

pub use edge_list::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, write_graph6};

/// `name:int(,int)*`, e.g. `star:20` or `doublestar:12,21`.
pub fn parse_family_spec(text: &str) -> Result<FamilySpec> {
    let text = text.trim();
    let (name, params) = text
        .split_once(':')
        .ok_or_else(|| Error::Parse { line: 1, message: format!("`{text}`: expected name:params") })?;
    let params = params
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse { line: 1, message: format!("`{p}` in `{text}`: {e}") })
        })
        .collect::<Result<Vec<_>>>()?;
    match FamilySpec::from_parts(name.trim(), &params) {
        None => Err(Error::UnknownFamily(name.to_string())),
        Some(spec) => Ok(spec?),
    }
}

/// Where a graph comes from on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSpec {
    Family(FamilySpec),
    Graph6(String),
    /// graph6 if the file's first non-blank line has no spaces, otherwise an edge list.
    File(PathBuf),
}

impl GraphSpec {
    pub fn load(&self) -> Result<Graph> {
        match self {
            GraphSpec::Family(f) => Ok(f.generate()?),
            GraphSpec::Graph6(s) => parse_graph6(s),
            GraphSpec::File(path) => read_graph_file(path),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(rest) = s.strip_prefix("g6:") {
            return Ok(GraphSpec::Graph6(rest.to_string()));
        }
        if let Some(rest) = s.strip_prefix("file:") {
            return Ok(GraphSpec::File(PathBuf::from(rest)));
        }
        if !s.contains(':') {
            return Err(Error::GraphSpec(s.to_string()));
        }
        parse_family_spec(s).map(GraphSpec::Family)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Family(spec) => write!(f, "{spec}"),
            GraphSpec::Graph6(s) => write!(f, "g6:{s}"),
            GraphSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

pub fn read_graph_file(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    if first.contains(char::is_whitespace) {
        parse_edge_list(&text)
    } else {
        parse_graph6(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_examples() {
        assert_eq!(parse_family_spec("star:20").unwrap(), FamilySpec::Star(20));
        assert_eq!(parse_family_spec("doublestar:12,21").unwrap(), FamilySpec::DoubleStar(12, 21));
        assert_eq!(parse_family_spec("bipartite:2, 3").unwrap(), FamilySpec::CompleteBipartite(2, 3));
        assert!(matches!(
            parse_family_spec("comb:3,5"),
            Err(Error::Core(aenergy_core::Error::InvalidFamilyParam(_)))
        ));
        assert!(matches!(parse_family_spec("star:1,2"), Err(Error::Core(_))));
        assert!(matches!(parse_family_spec("petersen:10"), Err(Error::UnknownFamily(n)) if n == "petersen"));
        assert!(matches!(parse_family_spec("star:x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_family_spec("star"), Err(Error::Parse { .. })));
        assert!(matches!(parse_family_spec("star:"), Err(Error::Parse { .. })));
    }

    #[test]
    fn graph_specs() {
        let k2 = FamilySpec::Path(2).generate().unwrap();
        assert_eq!("g6:A_".parse::<GraphSpec>().unwrap().load().unwrap(), k2);
        assert_eq!("path:2".parse::<GraphSpec>().unwrap().load().unwrap(), k2);
        assert!(matches!("K2".parse::<GraphSpec>(), Err(Error::GraphSpec(_))));
        let spec: GraphSpec = "doublestar:12,21".parse().unwrap();
        assert_eq!(spec.to_string(), "doublestar:12,21");
        assert!(matches!(
            "file:/nonexistent/graph.g6".parse::<GraphSpec>().unwrap().load(),
            Err(Error::Io { .. })
        ));
    }
}
