//! Hypergraph data model: vertices, contexts (hyperedges), validation and
//! structural queries.
//!
//! A context is a maximal observable; its members are mutually exclusive
//! outcomes. All downstream analysis (coloring, states, polytopes) requires
//! the hypergraph to be n-uniform, i.e. every context has exactly n members.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Index of a vertex within its hypergraph. Indices are assigned in order of
/// first appearance in the context list, so identical input always yields
/// identical indexing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VertexId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// A hyperedge: an ordered list of pairwise distinct vertices, length >= 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Context {
    pub members: Vec<VertexId>,
}

impl Context {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.contains(&v)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("context {index} is empty")]
    EmptyContext { index: usize },
    #[error("context {index} has fewer than two members")]
    ContextTooSmall { index: usize },
    #[error("vertex {name:?} appears twice in context {index}")]
    DuplicateVertexInContext { index: usize, name: String },
    #[error("contexts {first} and {second} have identical member sets")]
    DuplicateContext { first: usize, second: usize },
    #[error("invalid vertex name {name:?}: names must be nonempty printable tokens without whitespace")]
    InvalidName { name: String },
    #[error("hypergraph is not uniform: context lengths {lengths:?}")]
    NonUniform { lengths: Vec<(usize, usize)> },
    #[error("unknown vertex {name:?}")]
    UnknownVertex { name: String },
}

/// Checks a vertex name token: nonempty, printable, no whitespace, and none
/// of the characters the text format reserves (`#`, `[`, `]`).
pub fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| !c.is_whitespace() && !c.is_control() && c != '#' && c != '[' && c != ']')
}

/// Finite hypergraph with named vertices. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    names: Vec<String>,
    index_of: HashMap<String, usize>,
    contexts: Vec<Context>,
}

impl Hypergraph {
    /// Builds a hypergraph from contexts given as name lists. Vertices are
    /// the union of the names in first-appearance order.
    pub fn from_contexts<S: AsRef<str>>(contexts: &[Vec<S>]) -> Result<Self, HypergraphError> {
        let mut names: Vec<String> = Vec::new();
        let mut index_of: HashMap<String, usize> = HashMap::new();
        let mut built: Vec<Context> = Vec::new();

        for (ci, ctx) in contexts.iter().enumerate() {
            if ctx.is_empty() {
                return Err(HypergraphError::EmptyContext { index: ci });
            }
            if ctx.len() < 2 {
                return Err(HypergraphError::ContextTooSmall { index: ci });
            }
            let mut members = Vec::with_capacity(ctx.len());
            for name in ctx {
                let name = name.as_ref();
                if !valid_name(name) {
                    return Err(HypergraphError::InvalidName {
                        name: name.to_owned(),
                    });
                }
                let idx = *index_of.entry(name.to_owned()).or_insert_with(|| {
                    names.push(name.to_owned());
                    names.len() - 1
                });
                let v = VertexId(idx);
                if members.contains(&v) {
                    return Err(HypergraphError::DuplicateVertexInContext {
                        index: ci,
                        name: name.to_owned(),
                    });
                }
                members.push(v);
            }
            // Set equality defines duplicates; member order does not.
            let mut sorted = members.clone();
            sorted.sort();
            for (pi, prev) in built.iter().enumerate() {
                let mut prev_sorted = prev.members.clone();
                prev_sorted.sort();
                if prev_sorted == sorted {
                    return Err(HypergraphError::DuplicateContext {
                        first: pi,
                        second: ci,
                    });
                }
            }
            built.push(Context { members });
        }

        Ok(Hypergraph {
            names,
            index_of,
            contexts: built,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn context_count(&self) -> usize {
        self.contexts.len()
    }

    pub fn contexts(&self) -> &[Context] {
        &self.contexts
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.names.len()).map(VertexId)
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.index_of.get(name).copied().map(VertexId)
    }

    pub fn require_vertex(&self, name: &str) -> Result<VertexId, HypergraphError> {
        self.vertex(name).ok_or_else(|| HypergraphError::UnknownVertex {
            name: name.to_owned(),
        })
    }

    /// The common context length n, or `NonUniform` listing offending
    /// contexts as (index, length) pairs.
    pub fn uniformity(&self) -> Result<usize, HypergraphError> {
        let n = match self.contexts.first() {
            Some(c) => c.len(),
            None => return Ok(0),
        };
        let offending: Vec<(usize, usize)> = self
            .contexts
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() != n)
            .map(|(i, c)| (i, c.len()))
            .collect();
        if offending.is_empty() {
            Ok(n)
        } else {
            Err(HypergraphError::NonUniform { lengths: offending })
        }
    }

    /// Context-degree of every vertex plus the set of intertwining vertices
    /// (those lying in two or more contexts).
    pub fn incidence_profile(&self) -> IncidenceProfile {
        let mut degrees = vec![0usize; self.names.len()];
        for ctx in &self.contexts {
            for &v in &ctx.members {
                degrees[v.0] += 1;
            }
        }
        let intertwiners = degrees
            .iter()
            .enumerate()
            .filter(|(_, &d)| d >= 2)
            .map(|(i, _)| VertexId(i))
            .collect();
        IncidenceProfile {
            degrees,
            intertwiners,
        }
    }

    /// Indices of the contexts containing `v`.
    pub fn contexts_of(&self, v: VertexId) -> Vec<usize> {
        self.contexts
            .iter()
            .enumerate()
            .filter(|(_, c)| c.contains(v))
            .map(|(i, _)| i)
            .collect()
    }

    /// True iff `u` and `v` share at least one context.
    pub fn co_contextual(&self, u: VertexId, v: VertexId) -> bool {
        self.contexts.iter().any(|c| c.contains(u) && c.contains(v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceProfile {
    /// degrees[i] = number of contexts containing vertex i
    pub degrees: Vec<usize>,
    pub intertwiners: Vec<VertexId>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon_contexts() -> Vec<Vec<&'static str>> {
        vec![
            vec!["1", "2", "3"],
            vec!["3", "4", "5"],
            vec!["5", "6", "7"],
            vec!["7", "8", "9"],
            vec!["9", "10", "1"],
        ]
    }

    #[test]
    fn single_context() {
        let h = Hypergraph::from_contexts(&[vec!["a", "b", "c"]]).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.context_count(), 1);
        assert_eq!(h.uniformity().unwrap(), 3);
        let prof = h.incidence_profile();
        assert_eq!(prof.degrees, vec![1, 1, 1]);
        assert!(prof.intertwiners.is_empty());
    }

    #[test]
    fn pentagon_counts_and_degrees() {
        let h = Hypergraph::from_contexts(&pentagon_contexts()).unwrap();
        assert_eq!(h.vertex_count(), 10);
        assert_eq!(h.context_count(), 5);
        assert_eq!(h.uniformity().unwrap(), 3);
        let prof = h.incidence_profile();
        // odd-numbered vertices intertwine, even-numbered do not
        for v in h.vertices() {
            let name: usize = h.name(v).parse().unwrap();
            let expected = if name % 2 == 1 { 2 } else { 1 };
            assert_eq!(prof.degrees[v.0], expected, "vertex {name}");
        }
        assert_eq!(prof.intertwiners.len(), 5);
        // degree sum equals sum of context lengths
        let total: usize = prof.degrees.iter().sum();
        assert_eq!(total, 15);
    }

    #[test]
    fn duplicate_context_rejected() {
        let err = Hypergraph::from_contexts(&[vec!["a", "b"], vec!["a", "b"]]).unwrap_err();
        assert_eq!(err, HypergraphError::DuplicateContext { first: 0, second: 1 });
        // set equality, not order
        let err = Hypergraph::from_contexts(&[vec!["a", "b"], vec!["b", "a"]]).unwrap_err();
        assert_eq!(err, HypergraphError::DuplicateContext { first: 0, second: 1 });
    }

    #[test]
    fn duplicate_vertex_in_context_rejected() {
        let err = Hypergraph::from_contexts(&[vec!["a", "a", "b"]]).unwrap_err();
        assert!(matches!(err, HypergraphError::DuplicateVertexInContext { .. }));
    }

    #[test]
    fn empty_and_small_contexts_rejected() {
        let empty: Vec<Vec<&str>> = vec![vec![]];
        assert!(matches!(
            Hypergraph::from_contexts(&empty).unwrap_err(),
            HypergraphError::EmptyContext { .. }
        ));
        assert!(matches!(
            Hypergraph::from_contexts(&[vec!["a"]]).unwrap_err(),
            HypergraphError::ContextTooSmall { .. }
        ));
    }

    #[test]
    fn non_uniform_reported() {
        let h = Hypergraph::from_contexts(&[vec!["a", "b", "c"], vec!["c", "d"]]).unwrap();
        match h.uniformity().unwrap_err() {
            HypergraphError::NonUniform { lengths } => assert_eq!(lengths, vec![(1, 2)]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_names_rejected() {
        for bad in ["", "a b", "x[", "#y"] {
            assert!(matches!(
                Hypergraph::from_contexts(&[vec![bad, "z"]]).unwrap_err(),
                HypergraphError::InvalidName { .. }
            ));
        }
    }

    #[test]
    fn deterministic_indexing() {
        let a = Hypergraph::from_contexts(&pentagon_contexts()).unwrap();
        let b = Hypergraph::from_contexts(&pentagon_contexts()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.name(VertexId(0)), "1");
        assert_eq!(a.name(VertexId(3)), "4");
    }
}
