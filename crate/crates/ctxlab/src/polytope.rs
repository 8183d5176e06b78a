//! Exact correlation-polytope machinery: coordinate evaluation of state
//! sets, affine hulls, and facet enumeration of the convex hull, all over
//! the rationals with no tolerances.
//!
//! The facet enumerator is a brute-force supporting-hyperplane scan over
//! affinely independent point subsets within the affine hull. It is exact
//! and deterministic, sized for desk-scale inputs (at most 64 points in at
//! most 12 coordinates).

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::hypergraph::{Hypergraph, VertexId};
use crate::state::TwoValuedState;

pub type RationalPoint = Vec<BigRational>;

pub const MAX_DIMENSION: usize = 12;
pub const MAX_POINTS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("coordinate pairs must be distinct")]
    DuplicatePair,
    #[error("no points given")]
    NoPoints,
    #[error("scale budget exceeded: {points} points in dimension {dimension} (limits {MAX_POINTS} / {MAX_DIMENSION})")]
    ScaleBudgetExceeded { points: usize, dimension: usize },
    #[error("inconsistent point dimensions")]
    MixedDimensions,
}

/// Which coordinates to evaluate on each state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoordinateSpec {
    /// coordinate = s(v) for each listed vertex
    Probability(Vec<VertexId>),
    /// coordinate = (1 - 2 s(u)) (1 - 2 s(v)) for each listed pair
    PairProduct(Vec<(VertexId, VertexId)>),
}

impl CoordinateSpec {
    pub fn arity(&self) -> usize {
        match self {
            CoordinateSpec::Probability(vs) => vs.len(),
            CoordinateSpec::PairProduct(ps) => ps.len(),
        }
    }

    /// Builds a probability spec from vertex names.
    pub fn probability(h: &Hypergraph, names: &[&str]) -> Result<Self, PolytopeError> {
        let vs = names
            .iter()
            .map(|n| {
                h.vertex(n)
                    .ok_or_else(|| PolytopeError::UnknownVertex((*n).to_owned()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CoordinateSpec::Probability(vs))
    }

    /// Builds a pair-product spec from name pairs.
    pub fn pair_product(h: &Hypergraph, pairs: &[(&str, &str)]) -> Result<Self, PolytopeError> {
        let mut out = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let u = h
                .vertex(a)
                .ok_or_else(|| PolytopeError::UnknownVertex((*a).to_owned()))?;
            let v = h
                .vertex(b)
                .ok_or_else(|| PolytopeError::UnknownVertex((*b).to_owned()))?;
            if out.contains(&(u, v)) {
                return Err(PolytopeError::DuplicatePair);
            }
            out.push((u, v));
        }
        Ok(CoordinateSpec::PairProduct(out))
    }
}

/// Coordinate image of a state set: deduplicated points with back-references
/// to the states that map to each point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluatedPoints {
    pub points: Vec<RationalPoint>,
    /// state_indices[i] lists the indices (into the input state slice) of
    /// the states mapping to points[i]
    pub state_indices: Vec<Vec<usize>>,
}

fn sign_value(bit: bool) -> BigRational {
    // 0/1 -> +1/-1 via 1 - 2s
    if bit {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

/// Evaluates the coordinate spec on every state, deduplicating identical
/// points while preserving first-appearance order.
pub fn evaluate_coordinates(
    states: &[TwoValuedState],
    spec: &CoordinateSpec,
) -> EvaluatedPoints {
    let mut points: Vec<RationalPoint> = Vec::new();
    let mut state_indices: Vec<Vec<usize>> = Vec::new();
    for (si, s) in states.iter().enumerate() {
        let point: RationalPoint = match spec {
            CoordinateSpec::Probability(vs) => vs
                .iter()
                .map(|v| {
                    if s.value(*v) {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect(),
            CoordinateSpec::PairProduct(ps) => ps
                .iter()
                .map(|(u, v)| sign_value(s.value(*u)) * sign_value(s.value(*v)))
                .collect(),
        };
        match points.iter().position(|p| *p == point) {
            Some(i) => state_indices[i].push(si),
            None => {
                points.push(point);
                state_indices.push(vec![si]);
            }
        }
    }
    EvaluatedPoints {
        points,
        state_indices,
    }
}

/// Inequality `normal . x >= bound` with coprime integer coefficients
/// (gcd over normal entries and bound is 1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearInequality {
    pub normal: Vec<BigInt>,
    pub bound: BigInt,
}

impl LinearInequality {
    /// Canonicalizes a rational inequality `normal . x >= bound`, keeping
    /// its orientation.
    pub fn canonical(normal: &[BigRational], bound: &BigRational) -> LinearInequality {
        let mut lcm = bound.denom().clone();
        for c in normal {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = normal
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut b = bound.numer() * (&lcm / bound.denom());
        let mut g = b.abs();
        for x in &ints {
            g = g.gcd(x);
        }
        if !g.is_zero() && !g.is_one() {
            for x in &mut ints {
                *x /= &g;
            }
            b /= &g;
        }
        LinearInequality {
            normal: ints,
            bound: b,
        }
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        self.normal
            .iter()
            .zip(point)
            .map(|(a, x)| BigRational::from(a.clone()) * x)
            .sum()
    }

    pub fn satisfied_by(&self, point: &[BigRational]) -> bool {
        self.evaluate(point) >= BigRational::from(self.bound.clone())
    }

    pub fn tight_at(&self, point: &[BigRational]) -> bool {
        self.evaluate(point) == BigRational::from(self.bound.clone())
    }

    pub fn negated(&self) -> LinearInequality {
        LinearInequality {
            normal: self.normal.iter().map(|a| -a).collect(),
            bound: -&self.bound,
        }
    }
}

/// Exact H-representation of a convex hull: equalities pinning the affine
/// hull (stored in both orientations) plus the facets within it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeHRep {
    pub equalities: Vec<LinearInequality>,
    pub facets: Vec<LinearInequality>,
    /// affine dimension of the point set
    pub dimension: usize,
}

/// Affine hull of a point set: its dimension and one canonical equality per
/// lost dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineHull {
    pub dimension: usize,
    pub equalities: Vec<LinearInequality>,
    /// coordinate indices on which the point set is affinely injective
    pivot_columns: Vec<usize>,
}

fn check_points(points: &[RationalPoint]) -> Result<usize, PolytopeError> {
    let first = points.first().ok_or(PolytopeError::NoPoints)?;
    let d = first.len();
    if points.iter().any(|p| p.len() != d) {
        return Err(PolytopeError::MixedDimensions);
    }
    Ok(d)
}

/// Reduced row echelon form; returns the reduced matrix and pivot columns.
fn rref(mut m: Vec<Vec<BigRational>>) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let pivot = (r..rows).find(|&i| !m[i][c].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        let pv = m[r][c].clone();
        for x in &mut m[r] {
            *x /= &pv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] = &m[i][j] - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Basis of the null space {x : rows . x = 0}, from the RREF free columns.
fn null_space(rows: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let cols = rows[0].len();
    let (reduced, pivots) = rref(rows);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![BigRational::zero(); cols];
        v[f] = BigRational::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -reduced[ri][f].clone();
        }
        basis.push(v);
    }
    basis
}

fn primitive_direction(v: &[BigRational]) -> Option<Vec<BigRational>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    for x in &mut ints {
        *x /= &g;
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut ints {
                *x = -&*x;
            }
        }
    }
    Some(ints.into_iter().map(BigRational::from).collect())
}

/// Exact affine dimension of a point set plus a complete independent set of
/// equalities satisfied by every point.
pub fn affine_hull(points: &[RationalPoint]) -> Result<AffineHull, PolytopeError> {
    let d = check_points(points)?;
    let base = &points[0];
    let diffs: Vec<Vec<BigRational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    if diffs.is_empty() {
        // single point: one equality per coordinate
        let equalities = (0..d)
            .map(|i| {
                let mut normal = vec![BigRational::zero(); d];
                normal[i] = BigRational::one();
                LinearInequality::canonical(&normal, &base[i])
            })
            .collect();
        return Ok(AffineHull {
            dimension: 0,
            equalities,
            pivot_columns: Vec::new(),
        });
    }
    let (_, pivots) = rref(diffs.clone());
    let dimension = pivots.len();
    let normals = null_space(diffs);
    let mut equalities = Vec::with_capacity(normals.len());
    for n in normals {
        let n = primitive_direction(&n).expect("null basis vectors are nonzero");
        let bound: BigRational = n.iter().zip(base).map(|(a, x)| a * x).sum();
        equalities.push(LinearInequality::canonical(&n, &bound));
    }
    Ok(AffineHull {
        dimension,
        equalities,
        pivot_columns: pivots,
    })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Exact facet enumeration (the Hull problem): every facet of the convex
/// hull exactly once in canonical form, oriented so that all input points
/// satisfy `normal . x >= bound`.
pub fn facet_enumeration(points: &[RationalPoint]) -> Result<PolytopeHRep, PolytopeError> {
    let d = check_points(points)?;
    // dedupe
    let mut unique: Vec<RationalPoint> = Vec::new();
    for p in points {
        if !unique.contains(p) {
            unique.push(p.clone());
        }
    }
    if unique.len() > MAX_POINTS || d > MAX_DIMENSION {
        return Err(PolytopeError::ScaleBudgetExceeded {
            points: unique.len(),
            dimension: d,
        });
    }
    let hull = affine_hull(&unique)?;
    let mut equalities = Vec::new();
    for eq in &hull.equalities {
        equalities.push(eq.clone());
        equalities.push(eq.negated());
    }
    let dd = hull.dimension;
    if dd == 0 {
        return Ok(PolytopeHRep {
            equalities,
            facets: Vec::new(),
            dimension: 0,
        });
    }

    // work in the pivot coordinates, where the point set is full-dimensional
    let cols = &hull.pivot_columns;
    let projected: Vec<Vec<BigRational>> = unique
        .iter()
        .map(|p| cols.iter().map(|&c| p[c].clone()).collect())
        .collect();

    let mut facets: BTreeSet<LinearInequality> = BTreeSet::new();
    if dd == 1 {
        // facets of a segment: its two endpoints, via min and max along the
        // single pivot coordinate
        let values: Vec<&BigRational> = projected.iter().map(|p| &p[0]).collect();
        let min = values.iter().min().unwrap();
        let max = values.iter().max().unwrap();
        facets.insert(lift_facet(&[BigRational::one()], min, cols, d));
        facets.insert(lift_facet(
            &[-BigRational::one()],
            &-(*max).clone(),
            cols,
            d,
        ));
    } else {
        for subset in combinations(projected.len(), dd) {
            let base = &projected[subset[0]];
            let diffs: Vec<Vec<BigRational>> = subset[1..]
                .iter()
                .map(|&i| {
                    projected[i]
                        .iter()
                        .zip(base)
                        .map(|(a, b)| a - b)
                        .collect()
                })
                .collect();
            let normals = null_space(diffs);
            if normals.len() != 1 {
                continue; // subset not affinely independent
            }
            let Some(normal) = primitive_direction(&normals[0]) else {
                continue;
            };
            let value_at = |p: &[BigRational]| -> BigRational {
                normal.iter().zip(p).map(|(a, x)| a * x).sum()
            };
            let b0 = value_at(base);
            let mut has_above = false;
            let mut has_below = false;
            for p in &projected {
                let v = value_at(p);
                if v > b0 {
                    has_above = true;
                } else if v < b0 {
                    has_below = true;
                }
                if has_above && has_below {
                    break;
                }
            }
            if has_above && has_below {
                continue; // not supporting
            }
            let (oriented, bound) = if has_below {
                // flip so all points satisfy >= bound
                (
                    normal.iter().map(|a| -a).collect::<Vec<_>>(),
                    -b0.clone(),
                )
            } else {
                (normal.clone(), b0.clone())
            };
            facets.insert(lift_facet(&oriented, &bound, cols, d));
        }
    }

    Ok(PolytopeHRep {
        equalities,
        facets: facets.into_iter().collect(),
        dimension: dd,
    })
}

/// Embeds a facet found in pivot coordinates back into the ambient space,
/// zero on non-pivot coordinates. Together with the affine-hull equalities
/// this describes the same polytope.
fn lift_facet(
    normal: &[BigRational],
    bound: &BigRational,
    pivot_columns: &[usize],
    ambient: usize,
) -> LinearInequality {
    let mut full = vec![BigRational::zero(); ambient];
    for (j, &c) in pivot_columns.iter().enumerate() {
        full[c] = normal[j].clone();
    }
    LinearInequality::canonical(&full, bound)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRepCheck {
    pub sound: bool,
    /// per-facet count of incident points (in facet order)
    pub tightness: Vec<usize>,
    pub violations: Vec<(usize, usize)>, // (inequality index, point index)
}

/// Independent checker: every point must satisfy every equality with
/// equality and every facet inequality; counts tight points per facet.
pub fn verify_hrep(points: &[RationalPoint], hrep: &PolytopeHRep) -> HRepCheck {
    let mut sound = true;
    let mut violations = Vec::new();
    for (ei, eq) in hrep.equalities.iter().enumerate() {
        for (pi, p) in points.iter().enumerate() {
            if !eq.satisfied_by(p) {
                sound = false;
                violations.push((ei, pi));
            }
        }
    }
    let mut tightness = Vec::with_capacity(hrep.facets.len());
    for (fi, f) in hrep.facets.iter().enumerate() {
        let mut tight = 0;
        for (pi, p) in points.iter().enumerate() {
            if !f.satisfied_by(p) {
                sound = false;
                violations.push((hrep.equalities.len() + fi, pi));
            } else if f.tight_at(p) {
                tight += 1;
            }
        }
        tightness.push(tight);
    }
    HRepCheck {
        sound,
        tightness,
        violations,
    }
}

/// The input points that are vertices of the hull: those where the tight
/// constraints (equalities plus incident facets) have full rank.
pub fn hull_vertices(points: &[RationalPoint], hrep: &PolytopeHRep) -> Vec<RationalPoint> {
    let d = match points.first() {
        Some(p) => p.len(),
        None => return Vec::new(),
    };
    let mut out = Vec::new();
    for p in points {
        let mut rows: Vec<Vec<BigRational>> = hrep
            .equalities
            .iter()
            .map(|e| {
                e.normal
                    .iter()
                    .map(|a| BigRational::from(a.clone()))
                    .collect()
            })
            .collect();
        for f in &hrep.facets {
            if f.tight_at(p) {
                rows.push(
                    f.normal
                        .iter()
                        .map(|a| BigRational::from(a.clone()))
                        .collect(),
                );
            }
        }
        if crate::realization::rational_rank(rows) == d && !out.contains(p) {
            out.push(p.clone());
        }
    }
    out
}
