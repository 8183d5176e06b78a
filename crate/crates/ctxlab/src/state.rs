//! Two-valued states, separability, and aggregation from colorings,
//! including exact fractional (rational-valued) states.
//!
//! A two-valued state assigns 0/1 to every vertex with exactly one 1 per
//! context. Aggregation collapses an admissible coloring to such a state by
//! sending one color to 1 and all others to 0; fractional states send each
//! color to a rational weight, the weights summing to 1.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::coloring::{
    admissible_colorings, check_coloring, Coloring, ColoringError, SearchConfig,
};
use crate::hypergraph::{Hypergraph, HypergraphError, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StateError {
    #[error("assignment does not cover the hypergraph: expected {expected} values, got {got}")]
    DomainMismatch { expected: usize, got: usize },
    #[error(transparent)]
    NonUniform(#[from] HypergraphError),
    #[error("coloring is not admissible; aggregation requires exclusivity and completeness")]
    NotAdmissible,
    #[error("color value map does not sum to 1")]
    ValueMapNotNormalized,
    #[error("value outside [0, 1]")]
    ValueOutOfRange,
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// 0/1 assignment with exactly one 1 per context. Stored as a bit vector
/// indexed by vertex; ordering of states is lexicographic on that vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoValuedState {
    pub values: Vec<bool>,
}

impl TwoValuedState {
    pub fn value(&self, v: VertexId) -> bool {
        self.values[v.0]
    }

    /// Indices of the 1-valued vertices.
    pub fn support(&self) -> Vec<VertexId> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| VertexId(i))
            .collect()
    }
}

/// Exact rational state: values in [0, 1] summing to exactly 1 within each
/// context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalState {
    pub values: Vec<BigRational>,
}

impl RationalState {
    pub fn value(&self, v: VertexId) -> &BigRational {
        &self.values[v.0]
    }
}

/// Map color index -> rational weight; the weights sum to exactly 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorValueMap {
    pub values: Vec<BigRational>,
}

impl ColorValueMap {
    pub fn new(values: Vec<BigRational>) -> Result<Self, StateError> {
        let one = BigRational::one();
        if values.iter().any(|v| v.is_negative() || *v > one) {
            return Err(StateError::ValueOutOfRange);
        }
        let sum: BigRational = values.iter().sum();
        if !sum.is_one() {
            return Err(StateError::ValueMapNotNormalized);
        }
        Ok(ColorValueMap { values })
    }
}

/// Per-context validity report for a candidate 0/1 assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateCheck {
    pub valid: bool,
    /// (context index, number of 1-valued members) for offending contexts
    pub offending: Vec<(usize, usize)>,
}

/// True iff the assignment has exactly one 1 per context.
pub fn check_state(h: &Hypergraph, values: &[bool]) -> Result<StateCheck, StateError> {
    if values.len() != h.vertex_count() {
        return Err(StateError::DomainMismatch {
            expected: h.vertex_count(),
            got: values.len(),
        });
    }
    let mut offending = Vec::new();
    for (ci, ctx) in h.contexts().iter().enumerate() {
        let ones = ctx.members.iter().filter(|v| values[v.0]).count();
        if ones != 1 {
            offending.push((ci, ones));
        }
    }
    Ok(StateCheck {
        valid: offending.is_empty(),
        offending,
    })
}

/// Enumerates every two-valued state in canonical order (lexicographic on
/// the vertex-indexed bit vector). Backtracks per context: choose the
/// 1-vertex of each context and propagate zeros. May be empty.
pub fn enumerate_states(h: &Hypergraph) -> Result<Vec<TwoValuedState>, StateError> {
    h.uniformity()?;
    let n = h.vertex_count();
    // value: None undecided, Some(true/false) fixed
    let mut values: Vec<Option<bool>> = vec![None; n];
    let mut out = Vec::new();
    fill_context(h, 0, &mut values, &mut out);
    out.sort();
    Ok(out)
}

fn fill_context(
    h: &Hypergraph,
    ci: usize,
    values: &mut Vec<Option<bool>>,
    out: &mut Vec<TwoValuedState>,
) {
    if ci == h.context_count() {
        // vertices in no remaining context keep any fixed value; undecided
        // vertices can only occur in a hypergraph with uncovered vertices,
        // which construction forbids
        let state = TwoValuedState {
            values: values.iter().map(|v| v.unwrap_or(false)).collect(),
        };
        out.push(state);
        return;
    }
    let ctx = &h.contexts()[ci];
    let already_one = ctx.members.iter().find(|v| values[v.0] == Some(true));
    if let Some(&_one) = already_one {
        // context already satisfied; all other undecided members become 0
        let mut touched = Vec::new();
        let mut ok = true;
        for &v in &ctx.members {
            match values[v.0] {
                Some(true) => {}
                Some(false) => {}
                None => {
                    values[v.0] = Some(false);
                    touched.push(v);
                }
            }
        }
        // exactly one 1 is guaranteed: a second Some(true) would have been
        // caught when it was assigned
        if ctx.members.iter().filter(|v| values[v.0] == Some(true)).count() != 1 {
            ok = false;
        }
        if ok {
            fill_context(h, ci + 1, values, out);
        }
        for v in touched {
            values[v.0] = None;
        }
        return;
    }
    // pick the 1-vertex among undecided members, in index order
    for pick in 0..ctx.members.len() {
        let chosen = ctx.members[pick];
        if values[chosen.0].is_some() {
            continue; // Some(false): cannot be the 1
        }
        let mut touched = Vec::new();
        values[chosen.0] = Some(true);
        touched.push(chosen);
        let mut conflict = false;
        for &v in &ctx.members {
            if v == chosen {
                continue;
            }
            match values[v.0] {
                Some(true) => conflict = true,
                Some(false) => {}
                None => {
                    values[v.0] = Some(false);
                    touched.push(v);
                }
            }
        }
        if !conflict {
            fill_context(h, ci + 1, values, out);
        }
        for v in touched {
            values[v.0] = None;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingReport {
    pub separating: bool,
    pub unseparated_pairs: Vec<(VertexId, VertexId)>,
}

/// A pair is separated iff some state assigns its vertices different
/// values; the set is separating iff no pair is unseparated.
pub fn separating_report(h: &Hypergraph, states: &[TwoValuedState]) -> SeparatingReport {
    let n = h.vertex_count();
    let mut unseparated_pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let separated = states.iter().any(|s| s.values[u] != s.values[v]);
            if !separated {
                unseparated_pairs.push((VertexId(u), VertexId(v)));
            }
        }
    }
    SeparatingReport {
        separating: unseparated_pairs.is_empty(),
        unseparated_pairs,
    }
}

/// Maximum number of subset members simultaneously valued 1 across the
/// given states. Zero for an empty subset or empty state list.
pub fn subset_value_profile(states: &[TwoValuedState], subset: &[VertexId]) -> usize {
    states
        .iter()
        .map(|s| subset.iter().filter(|v| s.values[v.0]).count())
        .max()
        .unwrap_or(0)
}

/// Collapses an admissible coloring to the two-valued state that is 1
/// exactly on the chosen color class.
pub fn aggregate(
    h: &Hypergraph,
    c: &Coloring,
    color: usize,
) -> Result<TwoValuedState, StateError> {
    let report = check_coloring(h, c)?;
    if !report.admissible {
        return Err(StateError::NotAdmissible);
    }
    if color >= c.k {
        return Err(StateError::Coloring(ColoringError::ColorOutOfRange {
            color,
            k: c.k,
        }));
    }
    Ok(TwoValuedState {
        values: c.colors.iter().map(|&col| col == color).collect(),
    })
}

/// Classification of one two-valued state by aggregability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AggregabilityEntry {
    pub state: TwoValuedState,
    /// Witness (admissible coloring, color index) whose aggregation equals
    /// the state, if one exists.
    pub witness: Option<(Coloring, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AggregabilityReport {
    pub entries: Vec<AggregabilityEntry>,
}

impl AggregabilityReport {
    pub fn non_aggregable(&self) -> Vec<&TwoValuedState> {
        self.entries
            .iter()
            .filter(|e| e.witness.is_none())
            .map(|e| &e.state)
            .collect()
    }
}

/// Classifies every two-valued state as aggregable (with a witness) or not,
/// by exhaustive search over admissible colorings up to relabeling.
/// Aggregation is relabeling-invariant, so orbit representatives suffice.
pub fn aggregability_report(
    h: &Hypergraph,
    config: SearchConfig,
) -> Result<AggregabilityReport, StateError> {
    let colorings = admissible_colorings(h, config)?;
    if colorings.is_empty() {
        return Err(StateError::Coloring(ColoringError::NoAdmissibleColoring));
    }
    let states = enumerate_states(h)?;
    let mut by_state: BTreeMap<TwoValuedState, (Coloring, usize)> = BTreeMap::new();
    for c in &colorings {
        for color in 0..c.k {
            let s = aggregate(h, c, color)?;
            by_state.entry(s).or_insert_with(|| (c.clone(), color));
        }
    }
    let entries = states
        .into_iter()
        .map(|state| {
            let witness = by_state.get(&state).cloned();
            AggregabilityEntry { state, witness }
        })
        .collect();
    Ok(AggregabilityReport { entries })
}

/// Evaluates a color value map on an admissible coloring. Context sums are
/// exactly 1 because every context carries all colors exactly once.
pub fn fractional_state(
    h: &Hypergraph,
    c: &Coloring,
    m: &ColorValueMap,
) -> Result<RationalState, StateError> {
    let report = check_coloring(h, c)?;
    if !report.admissible {
        return Err(StateError::NotAdmissible);
    }
    if m.values.len() != c.k {
        return Err(StateError::ValueMapNotNormalized);
    }
    Ok(RationalState {
        values: c.colors.iter().map(|&col| m.values[col].clone()).collect(),
    })
}

/// Validates a rational state: values in [0, 1] and every context summing
/// to exactly 1.
pub fn check_rational_state(h: &Hypergraph, s: &RationalState) -> Result<bool, StateError> {
    if s.values.len() != h.vertex_count() {
        return Err(StateError::DomainMismatch {
            expected: h.vertex_count(),
            got: s.values.len(),
        });
    }
    let one = BigRational::one();
    if s.values.iter().any(|v| v.is_negative() || *v > one) {
        return Ok(false);
    }
    for ctx in h.contexts() {
        let sum: BigRational = ctx.members.iter().map(|v| s.values[v.0].clone()).sum();
        if !sum.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for an admissible k-coloring and value map whose fractional
/// state equals `target`. For a fixed coloring the value map is forced:
/// every color class must be constant in the target, and the class values
/// must sum to 1. Exhaustive over colorings up to relabeling, which is
/// sound because relabeling a witness just permutes its value map.
pub fn fractional_reachable(
    h: &Hypergraph,
    target: &RationalState,
    k: usize,
    config: SearchConfig,
) -> Result<Option<(Coloring, ColorValueMap)>, StateError> {
    let n = h.uniformity()?;
    if target.values.len() != h.vertex_count() {
        return Err(StateError::DomainMismatch {
            expected: h.vertex_count(),
            got: target.values.len(),
        });
    }
    if k != n {
        return Ok(None); // admissible colorings need k = uniformity
    }
    for c in admissible_colorings(h, config)? {
        let mut map: Vec<Option<BigRational>> = vec![None; k];
        let mut consistent = true;
        for (vi, &color) in c.colors.iter().enumerate() {
            match &map[color] {
                None => map[color] = Some(target.values[vi].clone()),
                Some(existing) => {
                    if *existing != target.values[vi] {
                        consistent = false;
                        break;
                    }
                }
            }
        }
        if !consistent {
            continue;
        }
        let values: Vec<BigRational> = map
            .into_iter()
            .map(|v| v.unwrap_or_else(BigRational::zero))
            .collect();
        if let Ok(m) = ColorValueMap::new(values) {
            let produced = fractional_state(h, &c, &m)?;
            if produced == *target {
                return Ok(Some((c, m)));
            }
        }
    }
    Ok(None)
}

/// Convenience: the all-zeros-except rational state from a two-valued state.
pub fn rational_from_two_valued(s: &TwoValuedState) -> RationalState {
    RationalState {
        values: s
            .values
            .iter()
            .map(|&b| {
                if b {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            })
            .collect(),
    }
}

/// Builds a rational state from per-vertex (numerator, denominator) pairs in
/// vertex-index order.
pub fn rational_state_from_parts(parts: &[(i64, i64)]) -> RationalState {
    RationalState {
        values: parts
            .iter()
            .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, pentagon, triangle_demo};

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    fn state_from_names(h: &Hypergraph, ones: &[&str]) -> Vec<bool> {
        let mut values = vec![false; h.vertex_count()];
        for name in ones {
            values[h.vertex(name).unwrap().0] = true;
        }
        values
    }

    #[test]
    fn triangle_has_three_states() {
        let h = triangle_demo().hypergraph;
        let states = enumerate_states(&h).unwrap();
        assert_eq!(states.len(), 3);
    }

    #[test]
    fn pentagon_has_eleven_states() {
        let h = pentagon().hypergraph;
        let states = enumerate_states(&h).unwrap();
        assert_eq!(states.len(), 11);
        for s in &states {
            assert!(check_state(&h, &s.values).unwrap().valid);
        }
    }

    #[test]
    fn states_in_canonical_order_without_duplicates() {
        let h = pentagon().hypergraph;
        let states = enumerate_states(&h).unwrap();
        for w in states.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn pentagon_middle_state_is_valid() {
        let h = pentagon().hypergraph;
        let middle = state_from_names(&h, &["2", "4", "6", "8", "10"]);
        assert!(check_state(&h, &middle).unwrap().valid);
    }

    #[test]
    fn pentagon_state_1_5_8_is_valid() {
        let h = pentagon().hypergraph;
        let s = state_from_names(&h, &["1", "5", "8"]);
        assert!(check_state(&h, &s).unwrap().valid);
    }

    #[test]
    fn two_ones_in_a_context_rejected() {
        let h = triangle_demo().hypergraph;
        let s = state_from_names(&h, &["a", "b"]);
        let check = check_state(&h, &s).unwrap();
        assert!(!check.valid);
        assert_eq!(check.offending, vec![(0, 2)]);
    }

    #[test]
    fn triangle_single_state_not_separating() {
        let h = triangle_demo().hypergraph;
        let s = TwoValuedState {
            values: state_from_names(&h, &["a"]),
        };
        let report = separating_report(&h, &[s]);
        assert!(!report.separating);
        let b = h.vertex("b").unwrap();
        let c = h.vertex("c").unwrap();
        assert_eq!(report.unseparated_pairs, vec![(b, c)]);
    }

    #[test]
    fn subset_profile_middle_state() {
        let h = pentagon().hypergraph;
        let states = enumerate_states(&h).unwrap();
        let middles: Vec<VertexId> = ["2", "4", "6", "8", "10"]
            .iter()
            .map(|n| h.vertex(n).unwrap())
            .collect();
        assert_eq!(subset_value_profile(&states, &middles), 5);
        assert_eq!(subset_value_profile(&states, &[]), 0);
    }

    #[test]
    fn aggregate_pentagon_example() {
        let h = pentagon().hypergraph;
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
        let c = Coloring { colors, k: 3 };
        let red = aggregate(&h, &c, 0).unwrap();
        assert_eq!(red.values, state_from_names(&h, &["1", "5", "8"]));
        assert!(check_state(&h, &red.values).unwrap().valid);
        let blue = aggregate(&h, &c, 2).unwrap();
        assert_eq!(blue.values, state_from_names(&h, &["9", "2", "4", "6"]));
        assert!(check_state(&h, &blue.values).unwrap().valid);
    }

    #[test]
    fn aggregate_refuses_non_admissible() {
        let h = pentagon().hypergraph;
        // exclusive with 4 colors is not complete
        let c = crate::coloring::find_coloring(&h, 4, false, cfg())
            .unwrap()
            .unwrap();
        // force use of a fourth color so completeness fails for sure
        let mut colors = c.colors.clone();
        colors[h.vertex("2").unwrap().0] = 3;
        let c4 = Coloring { colors, k: 4 };
        if check_coloring(&h, &c4).unwrap().exclusive {
            assert_eq!(aggregate(&h, &c4, 0).unwrap_err(), StateError::NotAdmissible);
        }
    }

    #[test]
    fn aggregation_covering_invariant() {
        // the n aggregated states of one admissible coloring cover every
        // vertex exactly once
        for name in ["pentagon", "triangle-demo"] {
            let h = catalog(name).unwrap().hypergraph;
            for c in admissible_colorings(&h, cfg()).unwrap() {
                let mut hits = vec![0usize; h.vertex_count()];
                for color in 0..c.k {
                    let s = aggregate(&h, &c, color).unwrap();
                    for (i, &b) in s.values.iter().enumerate() {
                        if b {
                            hits[i] += 1;
                        }
                    }
                }
                assert!(hits.iter().all(|&x| x == 1), "{name}");
            }
        }
    }

    #[test]
    fn pentagon_middle_state_not_aggregable() {
        let h = pentagon().hypergraph;
        let report = aggregability_report(&h, cfg()).unwrap();
        let middle = state_from_names(&h, &["2", "4", "6", "8", "10"]);
        let entry = report
            .entries
            .iter()
            .find(|e| e.state.values == middle)
            .expect("middle state enumerated");
        assert!(entry.witness.is_none());
    }

    #[test]
    fn triangle_states_all_aggregable() {
        let h = triangle_demo().hypergraph;
        let report = aggregability_report(&h, cfg()).unwrap();
        assert_eq!(report.entries.len(), 3);
        assert!(report.entries.iter().all(|e| e.witness.is_some()));
    }

    #[test]
    fn parity_odd_cycles_middle_never_aggregable() {
        // cycle logics with 5, 7, 9 contexts: the all-middles state is not
        // aggregable
        for ctxs in [5usize, 7, 9] {
            let mut contexts = Vec::new();
            for i in 0..ctxs {
                let a = 2 * i + 1;
                let b = 2 * i + 2;
                let c = (2 * i + 3 - 1) % (2 * ctxs) + 1;
                contexts.push(vec![a.to_string(), b.to_string(), c.to_string()]);
            }
            let h = Hypergraph::from_contexts(&contexts).unwrap();
            let middles: Vec<bool> = h
                .vertices()
                .map(|v| h.name(v).parse::<usize>().unwrap() % 2 == 0)
                .collect();
            assert!(check_state(&h, &middles).unwrap().valid);
            let report = aggregability_report(&h, cfg()).unwrap();
            let entry = report
                .entries
                .iter()
                .find(|e| e.state.values == middles)
                .expect("middle state exists");
            assert!(entry.witness.is_none(), "cycle of {ctxs}");
        }
    }

    #[test]
    fn fractional_state_triangle() {
        let h = triangle_demo().hypergraph;
        let c = Coloring {
            colors: vec![0, 1, 2],
            k: 3,
        };
        let m = ColorValueMap::new(vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
            BigRational::zero(),
        ])
        .unwrap();
        let s = fractional_state(&h, &c, &m).unwrap();
        assert_eq!(s, rational_state_from_parts(&[(1, 2), (1, 2), (0, 1)]));
        assert!(check_rational_state(&h, &s).unwrap());
    }

    #[test]
    fn degenerate_value_map_equals_aggregation() {
        let h = pentagon().hypergraph;
        let c = admissible_colorings(&h, cfg()).unwrap()[0].clone();
        let m = ColorValueMap::new(vec![
            BigRational::one(),
            BigRational::zero(),
            BigRational::zero(),
        ])
        .unwrap();
        let s = fractional_state(&h, &c, &m).unwrap();
        let agg = aggregate(&h, &c, 0).unwrap();
        assert_eq!(s, rational_from_two_valued(&agg));
    }

    #[test]
    fn half_half_context_sums_exact() {
        let h = pentagon().hypergraph;
        let c = admissible_colorings(&h, cfg()).unwrap()[0].clone();
        let m = ColorValueMap::new(vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
            BigRational::zero(),
        ])
        .unwrap();
        let s = fractional_state(&h, &c, &m).unwrap();
        assert!(check_rational_state(&h, &s).unwrap());
    }

    #[test]
    fn value_map_must_normalize() {
        assert_eq!(
            ColorValueMap::new(vec![BigRational::one(), BigRational::one()]).unwrap_err(),
            StateError::ValueMapNotNormalized
        );
    }

    fn omega_zero(h: &Hypergraph) -> RationalState {
        let half = BigRational::new(1.into(), 2.into());
        RationalState {
            values: h
                .vertices()
                .map(|v| {
                    if h.name(v).parse::<usize>().unwrap() % 2 == 1 {
                        half.clone()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect(),
        }
    }

    #[test]
    fn omega_zero_is_valid_but_unreachable() {
        let h = pentagon().hypergraph;
        let target = omega_zero(&h);
        assert!(check_rational_state(&h, &target).unwrap());
        assert_eq!(fractional_reachable(&h, &target, 3, cfg()).unwrap(), None);
    }

    #[test]
    fn triangle_half_half_reachable() {
        let h = triangle_demo().hypergraph;
        let target = rational_state_from_parts(&[(1, 2), (1, 2), (0, 1)]);
        let witness = fractional_reachable(&h, &target, 3, cfg()).unwrap();
        let (c, m) = witness.expect("witness exists");
        assert_eq!(fractional_state(&h, &c, &m).unwrap(), target);
    }

    #[test]
    fn reachability_of_two_valued_targets_matches_aggregability() {
        let h = pentagon().hypergraph;
        let agg = aggregability_report(&h, cfg()).unwrap();
        for entry in &agg.entries {
            let target = rational_from_two_valued(&entry.state);
            let reach = fractional_reachable(&h, &target, 3, cfg()).unwrap();
            assert_eq!(reach.is_some(), entry.witness.is_some());
        }
    }
}
