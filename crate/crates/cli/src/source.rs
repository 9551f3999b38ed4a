//! Where a graph comes from: a file, an inline edge list, or a named family.

use std::path::Path;

use geodex::generators as gen;
use geodex::{cartesian_product, parse_graph, Graph, GraphError, MAX_VERTICES};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SourceError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {family} needs --{param}")]
    MissingParameter { family: String, param: &'static str },
    #[error("family {family}: {message}")]
    InvalidParameter { family: String, message: String },
    #[error("no graph given: use --input, --edges or --family")]
    NoSource,
}

impl SourceError {
    /// Whether the input was well-formed but too large.
    pub fn is_capacity(&self) -> bool {
        matches!(self, SourceError::Graph(GraphError::Capacity(_)))
    }
}

/// A named graph family with its parameters.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    pub name: String,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub m: Option<usize>,
    #[serde(default)]
    pub dims: Option<Vec<usize>>,
    #[serde(default)]
    pub seed: Option<u64>,
    /// Edge probability for `random-graph`.
    #[serde(default)]
    pub p: Option<f64>,
}

pub const FAMILIES: &[&str] = &[
    "path",
    "cycle",
    "complete",
    "star",
    "complete-bipartite",
    "grid",
    "petersen",
    "paw",
    "bowtie",
    "chair-tree",
    "random-tree",
    "random-block",
    "random-cactus",
    "random-graph",
];

impl FamilySpec {
    pub fn new(name: &str, n: usize) -> Self {
        FamilySpec { name: name.to_owned(), n: Some(n), ..Default::default() }
    }

    fn need<T: Copy>(&self, value: Option<T>, param: &'static str) -> Result<T, SourceError> {
        value.ok_or_else(|| SourceError::MissingParameter { family: self.name.clone(), param })
    }

    fn invalid(&self, message: impl Into<String>) -> SourceError {
        SourceError::InvalidParameter { family: self.name.clone(), message: message.into() }
    }

    /// Builds the graph; random families default to seed 0.
    pub fn build(&self) -> Result<Graph, SourceError> {
        let fits = |count: usize| -> Result<usize, SourceError> {
            if count > MAX_VERTICES {
                Err(GraphError::Capacity(count).into())
            } else {
                Ok(count)
            }
        };
        let seed = self.seed.unwrap_or(0);
        let graph = match self.name.as_str() {
            "path" => gen::path(fits(self.positive_n()?)?),
            "cycle" => {
                let n = fits(self.need(self.n, "n")?)?;
                if n < 3 {
                    return Err(self.invalid("a cycle needs n >= 3"));
                }
                gen::cycle(n)
            }
            "complete" => gen::complete(fits(self.positive_n()?)?),
            "star" => gen::star(fits(self.positive_n()? + 1)? - 1),
            "complete-bipartite" => {
                let (m, n) = (self.need(self.m, "m")?, self.need(self.n, "n")?);
                if m == 0 || n == 0 {
                    return Err(self.invalid("both parts must be nonempty"));
                }
                fits(m + n)?;
                gen::complete_bipartite(m, n)
            }
            "grid" => {
                let dims = self.dims.clone().ok_or_else(|| SourceError::MissingParameter {
                    family: self.name.clone(),
                    param: "dims",
                })?;
                if dims.is_empty() || dims.contains(&0) {
                    return Err(self.invalid("dimensions must be positive"));
                }
                let factors: Vec<Graph> = dims.iter().map(|&d| fits(d).map(gen::path)).collect::<Result<_, _>>()?;
                cartesian_product(&factors)?
            }
            "petersen" => gen::petersen(),
            "paw" => gen::paw(),
            "bowtie" => gen::bowtie(),
            "chair-tree" => gen::chair_tree(),
            "random-tree" => gen::random_tree(fits(self.positive_n()?)?, seed),
            "random-block" => gen::random_block_graph(fits(self.positive_n()?)?, seed),
            "random-cactus" => gen::random_cactus(fits(self.positive_n()?)?, seed),
            "random-graph" => {
                let p = self.p.unwrap_or(0.3);
                if !(0.0..=1.0).contains(&p) {
                    return Err(self.invalid("p must lie in [0, 1]"));
                }
                gen::random_connected_graph(fits(self.positive_n()?)?, p, seed)
            }
            other => return Err(SourceError::UnknownFamily(other.to_owned())),
        };
        Ok(graph)
    }

    fn positive_n(&self) -> Result<usize, SourceError> {
        match self.need(self.n, "n")? {
            0 => Err(self.invalid("n must be positive")),
            n => Ok(n),
        }
    }
}

pub fn read_graph_file(path: &Path) -> Result<Graph, SourceError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| SourceError::Io { path: path.display().to_string(), message: e.to_string() })?;
    Ok(parse_graph(&text)?)
}

/// Parses `"0-1,1-2"` (or whitespace-separated pairs) into a graph on `n` vertices,
/// where `n` defaults to one more than the largest id.
pub fn parse_inline_edges(text: &str, n: Option<usize>) -> Result<Graph, SourceError> {
    let mut edges = Vec::new();
    for (i, token) in text.split([',', ';']).map(str::trim).filter(|t| !t.is_empty()).enumerate() {
        let pair: Vec<&str> = token.split(['-', ' ']).filter(|s| !s.is_empty()).collect();
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| GraphError::Parse { line: i + 1, message: format!("bad vertex id {s:?}") })
        };
        match pair.as_slice() {
            [u, v] => edges.push((parse(u)?, parse(v)?)),
            _ => return Err(GraphError::Parse { line: i + 1, message: format!("expected u-v, got {token:?}") }.into()),
        }
    }
    let count = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Ok(Graph::from_edges(count, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_build() {
        assert_eq!(FamilySpec::new("path", 5).build().unwrap().edge_count(), 4);
        assert_eq!(FamilySpec::new("star", 3).build().unwrap().vertex_count(), 4);
        let kmn = FamilySpec { m: Some(2), ..FamilySpec::new("complete-bipartite", 3) };
        assert_eq!(kmn.build().unwrap().edge_count(), 6);
        let grid = FamilySpec { dims: Some(vec![3, 3]), ..FamilySpec::new("grid", 0) };
        assert_eq!(grid.build().unwrap().edge_count(), 12);
        let a = FamilySpec { seed: Some(4), ..FamilySpec::new("random-cactus", 12) };
        assert_eq!(a.build().unwrap(), a.build().unwrap());
    }

    #[test]
    fn family_errors() {
        assert!(matches!(FamilySpec::new("cycle", 2).build(), Err(SourceError::InvalidParameter { .. })));
        assert!(matches!(FamilySpec::new("moebius", 2).build(), Err(SourceError::UnknownFamily(_))));
        let missing = FamilySpec { n: None, ..FamilySpec::new("path", 0) };
        assert!(matches!(missing.build(), Err(SourceError::MissingParameter { param: "n", .. })));
        assert!(FamilySpec::new("path", 500).build().unwrap_err().is_capacity());
    }

    #[test]
    fn inline_edges() {
        let g = parse_inline_edges("0-1, 1-2,2-0", None).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
        assert_eq!(parse_inline_edges("0 1;1 2", Some(5)).unwrap().vertex_count(), 5);
        assert!(parse_inline_edges("0-x", None).is_err());
        assert!(parse_inline_edges("1-1", None).is_err());
    }
}
