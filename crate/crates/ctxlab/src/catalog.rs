//! Built-in catalog of named quantum logics.
//!
//! Entries:
//! - `pentagon` (aliases `house`, `pentagram`): the cyclically intertwined
//!   five-context logic on ten vertices. Abstract only, no realization.
//! - `yu-oh`: the 25-vertex, 16-context logic with its rational realization
//!   in dimension 3. Thirteen vertices carry published rays; the remaining
//!   twelve are completed by cross products and re-verified.
//! - `g32`: 15 vertices in 10 contexts, three per context, every vertex in
//!   exactly two contexts. Constructed as the edges of the Petersen graph
//!   with one context per graph node.
//! - `triangle-demo`: a single three-element context, for smoke tests.

use thiserror::Error;

use crate::hypergraph::{Hypergraph, VertexId};
use crate::realization::{Ray, Realization};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog name {0:?}")]
    UnknownCatalogName(String),
}

/// A hypergraph bundled with its optional realization and provenance
/// metadata.
#[derive(Debug, Clone)]
pub struct LogicBundle {
    pub hypergraph: Hypergraph,
    pub realization: Option<Realization>,
    pub name: String,
    pub aliases: Vec<String>,
    /// Intertwining vertices in cyclic order, when the logic is a cycle of
    /// contexts.
    pub cycle: Option<Vec<VertexId>>,
    pub notes: String,
}

impl LogicBundle {
    pub fn plain(hypergraph: Hypergraph) -> Self {
        LogicBundle {
            hypergraph,
            realization: None,
            name: String::new(),
            aliases: Vec::new(),
            cycle: None,
            notes: String::new(),
        }
    }
}

pub const CATALOG_NAMES: &[&str] = &["pentagon", "yu-oh", "g32", "triangle-demo"];

/// Looks up a catalog entry by name or alias.
pub fn catalog(name: &str) -> Result<LogicBundle, CatalogError> {
    match name {
        "pentagon" | "house" | "pentagram" => Ok(pentagon()),
        "yu-oh" => Ok(yu_oh()),
        "g32" => Ok(g32()),
        "triangle-demo" => Ok(triangle_demo()),
        other => Err(CatalogError::UnknownCatalogName(other.to_owned())),
    }
}

pub fn triangle_demo() -> LogicBundle {
    let h = Hypergraph::from_contexts(&[vec!["a", "b", "c"]]).expect("triangle-demo is valid");
    LogicBundle {
        name: "triangle-demo".into(),
        notes: "single three-outcome context".into(),
        ..LogicBundle::plain(h)
    }
}

/// The pentagon (house, pentagram) logic: five cyclically intertwined
/// three-element contexts. Vertex numbering matches the usual pair
/// subscripts: intertwining vertices are 1,3,5,7,9.
pub fn pentagon() -> LogicBundle {
    let contexts = vec![
        vec!["1", "2", "3"],
        vec!["3", "4", "5"],
        vec!["5", "6", "7"],
        vec!["7", "8", "9"],
        vec!["9", "10", "1"],
    ];
    let h = Hypergraph::from_contexts(&contexts).expect("pentagon is valid");
    let cycle = ["1", "3", "5", "7", "9"]
        .iter()
        .map(|n| h.vertex(n).unwrap())
        .collect();
    LogicBundle {
        name: "pentagon".into(),
        aliases: vec!["house".into(), "pentagram".into()],
        cycle: Some(cycle),
        notes: "five-cycle of intertwined contexts; abstract (no realization)".into(),
        ..LogicBundle::plain(h)
    }
}

/// Context list of the Yu-Oh logic: nine outer contexts, three spokes into
/// the central vertex h0, three chords, and the triangle {z1,z2,z3}.
fn yu_oh_contexts() -> Vec<Vec<&'static str>> {
    vec![
        vec!["y1+", "z1", "y1-"],
        vec!["y1-", "u1", "h1"],
        vec!["h1", "u2", "y2+"],
        vec!["y2+", "z2", "y2-"],
        vec!["y2-", "u3", "h2"],
        vec!["h2", "u4", "y3+"],
        vec!["y3+", "z3", "y3-"],
        vec!["y3-", "u5", "h3"],
        vec!["h3", "u6", "y1+"],
        vec!["y1-", "u7", "h0"],
        vec!["y2-", "u8", "h0"],
        vec!["y3-", "u9", "h0"],
        vec!["h1", "u10", "y3+"],
        vec!["h2", "u11", "y1+"],
        vec!["h3", "u12", "y2+"],
        vec!["z1", "z2", "z3"],
    ]
}

/// The thirteen published rays of the Yu-Oh realization.
pub fn yu_oh_labeled_rays() -> Vec<(&'static str, [i64; 3])> {
    vec![
        ("z1", [1, 0, 0]),
        ("z2", [0, 1, 0]),
        ("z3", [0, 0, 1]),
        ("y1-", [0, 1, -1]),
        ("y2-", [1, 0, -1]),
        ("y3-", [1, -1, 0]),
        ("y1+", [0, 1, 1]),
        ("y2+", [1, 0, 1]),
        ("y3+", [1, 1, 0]),
        ("h0", [1, 1, 1]),
        ("h1", [-1, 1, 1]),
        ("h2", [1, -1, 1]),
        ("h3", [1, 1, -1]),
    ]
}

pub fn yu_oh() -> LogicBundle {
    let contexts = yu_oh_contexts();
    let h = Hypergraph::from_contexts(&contexts).expect("yu-oh is valid");
    let mut r = Realization::new(3);
    for (name, coords) in yu_oh_labeled_rays() {
        let v = h.vertex(name).expect("labeled vertex exists");
        r.rays.insert(v, Ray::from_ints(&coords).unwrap());
    }
    // Complete every unlabeled vertex as the cross product of the two
    // labeled members of its (unique) context.
    for ctx in h.contexts() {
        let unlabeled: Vec<VertexId> = ctx
            .members
            .iter()
            .copied()
            .filter(|v| !r.rays.contains_key(v))
            .collect();
        if unlabeled.is_empty() {
            continue;
        }
        assert_eq!(unlabeled.len(), 1, "each yu-oh context has one completion");
        let labeled: Vec<&Ray> = ctx
            .members
            .iter()
            .filter(|v| r.rays.contains_key(v))
            .map(|v| &r.rays[v])
            .collect();
        let completed = labeled[0]
            .cross(labeled[1])
            .expect("labeled yu-oh rays are non-collinear");
        r.rays.insert(unlabeled[0], completed);
    }
    LogicBundle {
        name: "yu-oh".into(),
        realization: Some(r),
        notes: "25 rays in dimension 3; completion vertices u1..u12 computed by cross products"
            .into(),
        ..LogicBundle::plain(h)
    }
}

/// G32: contexts are the nodes of the Petersen graph, vertices its edges;
/// each context holds the three edges incident to its node. Edge names:
/// `o0..o4` outer cycle, `i0..i4` inner pentagram, `s0..s4` spokes.
pub fn g32() -> LogicBundle {
    let edge = |prefix: &str, i: usize| format!("{prefix}{i}");
    let mut contexts: Vec<Vec<String>> = Vec::with_capacity(10);
    for i in 0..5 {
        // outer node i: edges o(i-1), o(i), spoke s(i)
        contexts.push(vec![edge("o", (i + 4) % 5), edge("o", i), edge("s", i)]);
    }
    for i in 0..5 {
        // inner node i: pentagram edges i(i-2), i(i), spoke s(i)
        contexts.push(vec![edge("i", (i + 3) % 5), edge("i", i), edge("s", i)]);
    }
    let h = Hypergraph::from_contexts(&contexts).expect("g32 is valid");
    LogicBundle {
        name: "g32".into(),
        notes: "Petersen-edge construction: 15 vertices of degree 2 in 10 contexts".into(),
        ..LogicBundle::plain(h)
    }
}
