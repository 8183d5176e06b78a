//! Exclusive/admissible coloring search: feasibility, chromatic-number
//! certification, exhaustive enumeration, and chromatic separation.
//!
//! All searches are exhaustive and deterministic. A "none" answer is only
//! ever returned after the full (symmetry-reduced) search space has been
//! explored; running out of the configurable node budget is an error, not a
//! negative answer.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, HypergraphError, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring does not cover the hypergraph: expected {expected} vertices, got {got}")]
    DomainMismatch { expected: usize, got: usize },
    #[error(transparent)]
    NonUniform(#[from] HypergraphError),
    #[error("no exclusive coloring with at most {k_max} colors")]
    ExceedsKMax { k_max: usize },
    #[error("search budget of {budget} nodes exceeded")]
    SearchBudgetExceeded { budget: u64 },
    #[error("no admissible coloring exists (chromatic number exceeds uniformity)")]
    NoAdmissibleColoring,
    #[error("color index {color} out of range for k={k}")]
    ColorOutOfRange { color: usize, k: usize },
}

/// Total color assignment: `colors[v] < k` for every vertex index `v`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, k: usize) -> Result<Self, ColoringError> {
        if let Some(&c) = colors.iter().find(|&&c| c >= k) {
            return Err(ColoringError::ColorOutOfRange { color: c, k });
        }
        Ok(Coloring { colors, k })
    }

    pub fn color(&self, v: VertexId) -> usize {
        self.colors[v.0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringViolation {
    /// Two vertices in one context share a color.
    Repeat {
        context: usize,
        u: VertexId,
        v: VertexId,
        color: usize,
    },
    /// A context misses a color.
    MissingColor { context: usize, color: usize },
    /// Color-class sizes differ.
    UnequalClass { color: usize, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringReport {
    pub exclusive: bool,
    pub complete: bool,
    /// exclusive and complete
    pub admissible: bool,
    pub equitable: bool,
    pub violations: Vec<ColoringViolation>,
}

/// Classifies a coloring: exclusivity (no repeated color within a context),
/// completeness (every color present in every context), admissibility, and
/// equitability (equal color-class sizes).
pub fn check_coloring(h: &Hypergraph, c: &Coloring) -> Result<ColoringReport, ColoringError> {
    if c.colors.len() != h.vertex_count() {
        return Err(ColoringError::DomainMismatch {
            expected: h.vertex_count(),
            got: c.colors.len(),
        });
    }
    h.uniformity()?;

    let mut violations = Vec::new();
    let mut exclusive = true;
    let mut complete = true;
    for (ci, ctx) in h.contexts().iter().enumerate() {
        for (i, &u) in ctx.members.iter().enumerate() {
            for &v in &ctx.members[i + 1..] {
                if c.color(u) == c.color(v) {
                    exclusive = false;
                    violations.push(ColoringViolation::Repeat {
                        context: ci,
                        u,
                        v,
                        color: c.color(u),
                    });
                }
            }
        }
        let present: BTreeSet<usize> = ctx.members.iter().map(|&v| c.color(v)).collect();
        for color in 0..c.k {
            if !present.contains(&color) {
                complete = false;
                violations.push(ColoringViolation::MissingColor { context: ci, color });
            }
        }
    }

    let mut counts = vec![0usize; c.k];
    for &col in &c.colors {
        counts[col] += 1;
    }
    let equitable = counts.windows(2).all(|w| w[0] == w[1]);
    if !equitable {
        for (color, &count) in counts.iter().enumerate() {
            violations.push(ColoringViolation::UnequalClass { color, count });
        }
    }

    Ok(ColoringReport {
        exclusive,
        complete,
        admissible: exclusive && complete,
        equitable,
        violations,
    })
}

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

/// Precomputed exclusivity structure: co-contextual neighbor lists.
struct Solver<'a> {
    h: &'a Hypergraph,
    neighbors: Vec<Vec<usize>>,
    k: usize,
    budget: u64,
    nodes: u64,
}

impl<'a> Solver<'a> {
    fn new(h: &'a Hypergraph, k: usize, budget: u64) -> Self {
        let n = h.vertex_count();
        let mut neighbors = vec![BTreeSet::new(); n];
        for ctx in h.contexts() {
            for (i, &u) in ctx.members.iter().enumerate() {
                for &v in &ctx.members[i + 1..] {
                    neighbors[u.0].insert(v.0);
                    neighbors[v.0].insert(u.0);
                }
            }
        }
        Solver {
            h,
            neighbors: neighbors.into_iter().map(|s| s.into_iter().collect()).collect(),
            k,
            budget,
            nodes: 0,
        }
    }

    fn tick(&mut self) -> Result<(), ColoringError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(ColoringError::SearchBudgetExceeded {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    /// Most-constrained-first choice: among uncolored vertices, the one with
    /// the most distinct colors in its colored neighborhood; degree and
    /// vertex index break ties.
    fn pick_saturated(&self, colors: &[Option<usize>]) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None; // (sat, degree, index)
        for v in 0..colors.len() {
            if colors[v].is_some() {
                continue;
            }
            let sat = self.neighbors[v]
                .iter()
                .filter_map(|&u| colors[u])
                .collect::<BTreeSet<_>>()
                .len();
            let degree = self.neighbors[v].len();
            let candidate = (sat, degree, v);
            best = match best {
                None => Some(candidate),
                Some(b) => {
                    // larger saturation, then larger degree, then smaller index
                    if (candidate.0, candidate.1, std::cmp::Reverse(candidate.2))
                        > (b.0, b.1, std::cmp::Reverse(b.2))
                    {
                        Some(candidate)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best.map(|(_, _, v)| v)
    }

    fn feasible(&self, colors: &[Option<usize>], v: usize, color: usize) -> bool {
        self.neighbors[v].iter().all(|&u| colors[u] != Some(color))
    }

    /// Exhaustive search for one exclusive coloring, symmetry-reduced: a new
    /// color may only be introduced as the current maximum plus one.
    fn find_one(
        &mut self,
        colors: &mut Vec<Option<usize>>,
        max_used: usize,
    ) -> Result<Option<Coloring>, ColoringError> {
        let v = match self.pick_saturated(colors) {
            None => {
                let assignment = colors.iter().map(|c| c.unwrap()).collect();
                return Ok(Some(Coloring {
                    colors: assignment,
                    k: self.k,
                }));
            }
            Some(v) => v,
        };
        let limit = (max_used + 1).min(self.k - 1);
        for color in 0..=limit {
            self.tick()?;
            if !self.feasible(colors, v, color) {
                continue;
            }
            colors[v] = Some(color);
            let next_max = max_used.max(color);
            if let Some(found) = self.find_one(colors, next_max)? {
                return Ok(Some(found));
            }
            colors[v] = None;
        }
        Ok(None)
    }

    /// Exhaustive enumeration in static vertex-index order. With
    /// `canonical`, only orbit representatives under color permutation are
    /// emitted (first-appearance colors increase).
    fn enumerate(
        &mut self,
        canonical: bool,
        out: &mut Vec<Coloring>,
    ) -> Result<(), ColoringError> {
        let n = self.h.vertex_count();
        let mut colors: Vec<Option<usize>> = vec![None; n];
        self.enumerate_rec(&mut colors, 0, 0, canonical, out)
    }

    fn enumerate_rec(
        &mut self,
        colors: &mut Vec<Option<usize>>,
        v: usize,
        max_used: usize,
        canonical: bool,
        out: &mut Vec<Coloring>,
    ) -> Result<(), ColoringError> {
        if v == colors.len() {
            out.push(Coloring {
                colors: colors.iter().map(|c| c.unwrap()).collect(),
                k: self.k,
            });
            return Ok(());
        }
        let limit = if canonical {
            if v == 0 {
                0
            } else {
                (max_used + 1).min(self.k - 1)
            }
        } else {
            self.k - 1
        };
        for color in 0..=limit {
            self.tick()?;
            if !self.feasible(colors, v, color) {
                continue;
            }
            colors[v] = Some(color);
            let next_max = if v == 0 { color } else { max_used.max(color) };
            self.enumerate_rec(colors, v + 1, next_max, canonical, out)?;
            colors[v] = None;
        }
        Ok(())
    }
}

/// Searches for an exclusive coloring with at most `k` colors. With
/// `require_complete`, only admissible colorings are accepted, which is
/// satisfiable only for k equal to the uniformity.
pub fn find_coloring(
    h: &Hypergraph,
    k: usize,
    require_complete: bool,
    config: SearchConfig,
) -> Result<Option<Coloring>, ColoringError> {
    let n = h.uniformity()?;
    if k < n {
        return Ok(None);
    }
    if require_complete && k != n {
        // completeness needs every context (n members) to carry all k colors
        return Ok(None);
    }
    let mut solver = Solver::new(h, k, config.node_budget);
    let mut colors = vec![None; h.vertex_count()];
    let found = solver.find_one(&mut colors, 0)?;
    // for k = n, exclusivity of a full context forces completeness
    Ok(found)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticCertificate {
    pub chromatic_number: usize,
    pub witness: Coloring,
    /// Color counts for which the exhaustive search proved no exclusive
    /// coloring exists.
    pub exhausted: Vec<usize>,
}

/// Smallest k admitting an exclusive coloring, with a witness and
/// exhausted-search certificates for every smaller k tried. A hypergraph
/// with no contexts has chromatic number 0.
pub fn chromatic_number(
    h: &Hypergraph,
    k_max: usize,
    config: SearchConfig,
) -> Result<ChromaticCertificate, ColoringError> {
    let n = h.uniformity()?;
    if h.context_count() == 0 {
        return Ok(ChromaticCertificate {
            chromatic_number: 0,
            witness: Coloring {
                colors: vec![],
                k: 0,
            },
            exhausted: vec![],
        });
    }
    let mut exhausted = Vec::new();
    for k in n..=k_max {
        match find_coloring(h, k, false, config)? {
            Some(witness) => {
                return Ok(ChromaticCertificate {
                    chromatic_number: k,
                    witness,
                    exhausted,
                })
            }
            None => exhausted.push(k),
        }
    }
    Err(ColoringError::ExceedsKMax { k_max })
}

/// Default upper bound for the chromatic-number scan: uniformity plus three.
pub fn default_k_max(h: &Hypergraph) -> Result<usize, ColoringError> {
    Ok(h.uniformity()? + 3)
}

/// Enumerates every exclusive k-coloring exactly once, in lexicographic
/// order of the color vector. With `up_to_relabeling`, exactly one
/// representative per color-permutation orbit is emitted (the one whose
/// colors first appear in increasing order).
pub fn enumerate_colorings(
    h: &Hypergraph,
    k: usize,
    up_to_relabeling: bool,
    config: SearchConfig,
) -> Result<Vec<Coloring>, ColoringError> {
    h.uniformity()?;
    if h.vertex_count() > 64 || k > 6 {
        return Err(ColoringError::SearchBudgetExceeded {
            budget: config.node_budget,
        });
    }
    let mut solver = Solver::new(h, k, config.node_budget);
    let mut out = Vec::new();
    solver.enumerate(up_to_relabeling, &mut out)?;
    Ok(out)
}

/// Enumerates the admissible colorings (exclusive with k = uniformity, hence
/// also complete), up to relabeling.
pub fn admissible_colorings(
    h: &Hypergraph,
    config: SearchConfig,
) -> Result<Vec<Coloring>, ColoringError> {
    let n = h.uniformity()?;
    enumerate_colorings(h, n, true, config)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    /// Pairs (u, v), u < v, for which some admissible coloring assigns
    /// different colors.
    pub separated: Vec<(VertexId, VertexId)>,
    pub unseparated: Vec<(VertexId, VertexId)>,
}

/// Chromatic separation: a pair is separated iff some admissible coloring
/// assigns its two vertices different colors. Requires admissible colorings
/// to exist. The underlying notion is not settled terminology; this is the
/// existential reading.
pub fn chromatic_separation(
    h: &Hypergraph,
    config: SearchConfig,
) -> Result<SeparationReport, ColoringError> {
    let colorings = admissible_colorings(h, config)?;
    if colorings.is_empty() {
        return Err(ColoringError::NoAdmissibleColoring);
    }
    let n = h.vertex_count();
    let mut separated = Vec::new();
    let mut unseparated = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let is_sep = colorings.iter().any(|c| c.colors[u] != c.colors[v]);
            let pair = (VertexId(u), VertexId(v));
            if is_sep {
                separated.push(pair);
            } else {
                unseparated.push(pair);
            }
        }
    }
    Ok(SeparationReport {
        separated,
        unseparated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, pentagon, triangle_demo};

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    fn pentagon_example_coloring() -> (Hypergraph, Coloring) {
        let h = pentagon().hypergraph;
        // R=0, G=1, B=2: 1 R, 3 G, 5 R, 7 G, 9 B, 2 B, 4 B, 6 B, 8 R, 10 G
        let mut colors = vec![0usize; 10];
        for (name, c) in [
            ("1", 0),
            ("3", 1),
            ("5", 0),
            ("7", 1),
            ("9", 2),
            ("2", 2),
            ("4", 2),
            ("6", 2),
            ("8", 0),
            ("10", 1),
        ] {
            colors[h.vertex(name).unwrap().0] = c;
        }
        (h.clone(), Coloring { colors, k: 3 })
    }

    #[test]
    fn pentagon_example_is_admissible_not_equitable() {
        let (h, c) = pentagon_example_coloring();
        let report = check_coloring(&h, &c).unwrap();
        assert!(report.exclusive);
        assert!(report.complete);
        assert!(report.admissible);
        assert!(!report.equitable); // class sizes 3, 3, 4
    }

    #[test]
    fn triangle_full_flags() {
        let h = triangle_demo().hypergraph;
        let c = Coloring {
            colors: vec![0, 1, 2],
            k: 3,
        };
        let report = check_coloring(&h, &c).unwrap();
        assert!(report.exclusive && report.complete && report.admissible && report.equitable);
    }

    #[test]
    fn triangle_repeat_detected() {
        let h = triangle_demo().hypergraph;
        let c = Coloring {
            colors: vec![0, 0, 1],
            k: 2,
        };
        let report = check_coloring(&h, &c).unwrap();
        assert!(!report.exclusive);
    }

    #[test]
    fn domain_mismatch() {
        let h = triangle_demo().hypergraph;
        let c = Coloring {
            colors: vec![0, 1],
            k: 2,
        };
        assert!(matches!(
            check_coloring(&h, &c),
            Err(ColoringError::DomainMismatch { .. })
        ));
    }

    #[test]
    fn pentagon_chromatic_number_is_three() {
        let h = pentagon().hypergraph;
        let cert = chromatic_number(&h, 6, cfg()).unwrap();
        assert_eq!(cert.chromatic_number, 3);
        assert!(cert.exhausted.is_empty());
        let report = check_coloring(&h, &cert.witness).unwrap();
        assert!(report.exclusive);
    }

    #[test]
    fn found_colorings_are_exclusive() {
        for name in ["pentagon", "triangle-demo", "g32"] {
            let h = catalog(name).unwrap().hypergraph;
            let cert = chromatic_number(&h, 6, cfg()).unwrap();
            let report = check_coloring(&h, &cert.witness).unwrap();
            assert!(report.exclusive, "{name}");
        }
    }

    #[test]
    fn triangle_enumeration_counts() {
        let h = triangle_demo().hypergraph;
        let reps = enumerate_colorings(&h, 3, true, cfg()).unwrap();
        assert_eq!(reps.len(), 1);
        let all = enumerate_colorings(&h, 3, false, cfg()).unwrap();
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn enumeration_matches_brute_force_on_pentagon() {
        let h = pentagon().hypergraph;
        let all = enumerate_colorings(&h, 3, false, cfg()).unwrap();
        // brute force over all 3^10 assignments
        let mut count = 0usize;
        let n = h.vertex_count();
        for code in 0..3usize.pow(n as u32) {
            let mut colors = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                colors.push(c % 3);
                c /= 3;
            }
            let coloring = Coloring { colors, k: 3 };
            if check_coloring(&h, &coloring).unwrap().exclusive {
                count += 1;
            }
        }
        assert_eq!(all.len(), count);
        // orbit structure: every exclusive 3-coloring of a 3-uniform logic
        // uses all three colors, so each orbit has size 3! = 6
        let reps = enumerate_colorings(&h, 3, true, cfg()).unwrap();
        assert_eq!(all.len(), reps.len() * 6);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let h = pentagon().hypergraph;
        let a = enumerate_colorings(&h, 3, true, cfg()).unwrap();
        let b = enumerate_colorings(&h, 3, true, cfg()).unwrap();
        assert_eq!(a, b);
        // lexicographic emission order
        let mut sorted = a.clone();
        sorted.sort();
        assert_eq!(a, sorted);
    }

    #[test]
    fn pentagon_parity_no_monochromatic_intertwiners() {
        let b = pentagon();
        let h = &b.hypergraph;
        let cycle = b.cycle.as_ref().unwrap();
        for c in enumerate_colorings(h, 3, false, cfg()).unwrap() {
            let first = c.color(cycle[0]);
            assert!(
                cycle.iter().any(|&v| c.color(v) != first),
                "intertwiners monochromatic in {:?}",
                c
            );
        }
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let h = pentagon().hypergraph;
        let tiny = SearchConfig { node_budget: 3 };
        assert!(matches!(
            enumerate_colorings(&h, 3, false, tiny),
            Err(ColoringError::SearchBudgetExceeded { .. })
        ));
    }

    #[test]
    fn triangle_separation() {
        let h = triangle_demo().hypergraph;
        let report = chromatic_separation(&h, cfg()).unwrap();
        assert_eq!(report.separated.len(), 3);
        assert!(report.unseparated.is_empty());
    }

    #[test]
    fn pentagon_pair_2_4_separated() {
        let h = pentagon().hypergraph;
        let report = chromatic_separation(&h, cfg()).unwrap();
        let u = h.vertex("2").unwrap();
        let v = h.vertex("4").unwrap();
        let pair = if u < v { (u, v) } else { (v, u) };
        assert!(report.separated.contains(&pair));
    }

    #[test]
    fn no_admissible_coloring_error() {
        let h = catalog("g32").unwrap().hypergraph;
        assert_eq!(
            chromatic_separation(&h, cfg()).unwrap_err(),
            ColoringError::NoAdmissibleColoring
        );
    }

    #[test]
    fn require_complete_above_uniformity_is_none() {
        let h = triangle_demo().hypergraph;
        assert_eq!(find_coloring(&h, 4, true, cfg()).unwrap(), None);
    }

    #[test]
    fn empty_hypergraph_chromatic_zero() {
        let h = Hypergraph::from_contexts::<&str>(&[]).unwrap();
        let cert = chromatic_number(&h, 3, cfg()).unwrap();
        assert_eq!(cert.chromatic_number, 0);
    }
}
