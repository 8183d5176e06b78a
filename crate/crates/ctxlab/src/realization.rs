//! Exact orthogonal representations: vertices labeled by rays (one
//! dimensional subspaces) with integer coordinates, verified without any
//! floating point.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::hypergraph::{Hypergraph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RealizationError {
    #[error("zero vector cannot define a ray")]
    ZeroVector,
    #[error("cross product requires dimension 3, got {0}")]
    WrongDimension(usize),
    #[error("cross product inputs are collinear")]
    CollinearInput,
    #[error("realization does not cover vertex {0:?}")]
    MissingVertex(String),
    #[error("realization dimension {realization} does not match uniformity {uniformity}")]
    DimensionMismatch {
        realization: usize,
        uniformity: usize,
    },
}

/// A ray: the projective equivalence class of a nonzero rational vector,
/// stored in primitive canonical form (coprime integer entries, first
/// nonzero entry positive).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ray {
    coords: Vec<BigInt>,
}

impl Ray {
    /// Canonicalizes a rational vector to a ray. Idempotent: canonicalizing
    /// a ray's own coordinates returns the same ray.
    pub fn canonical(coords: &[BigRational]) -> Result<Ray, RealizationError> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(RealizationError::ZeroVector);
        }
        // clear denominators
        let mut denom_lcm = BigInt::from(1);
        for c in coords {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = coords
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        // divide by content
        let mut content = BigInt::zero();
        for x in &ints {
            content = content.gcd(x);
        }
        for x in &mut ints {
            *x /= &content;
        }
        // sign convention: first nonzero entry positive
        if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                for x in &mut ints {
                    *x = -&*x;
                }
            }
        }
        Ok(Ray { coords: ints })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Ray, RealizationError> {
        let rats: Vec<BigRational> = coords
            .iter()
            .map(|&c| BigRational::from(BigInt::from(c)))
            .collect();
        Ray::canonical(&rats)
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn dot(&self, other: &Ray) -> BigInt {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// The canonical ray orthogonal to two non-collinear rays in dimension 3.
    pub fn cross(&self, other: &Ray) -> Result<Ray, RealizationError> {
        if self.dimension() != 3 || other.dimension() != 3 {
            return Err(RealizationError::WrongDimension(self.dimension()));
        }
        let a = &self.coords;
        let b = &other.coords;
        let c = [
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ];
        if c.iter().all(|x| x.is_zero()) {
            return Err(RealizationError::CollinearInput);
        }
        let rats: Vec<BigRational> = c.into_iter().map(BigRational::from).collect();
        Ray::canonical(&rats)
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Total map vertex -> ray for a given hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub dimension: usize,
    pub rays: BTreeMap<VertexId, Ray>,
}

impl Realization {
    pub fn new(dimension: usize) -> Self {
        Realization {
            dimension,
            rays: BTreeMap::new(),
        }
    }

    pub fn ray(&self, v: VertexId) -> Option<&Ray> {
        self.rays.get(&v)
    }

    pub fn covers(&self, h: &Hypergraph) -> bool {
        h.vertices().all(|v| self.rays.contains_key(&v))
    }
}

/// One violation found while verifying a realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Two co-contextual vertices with nonzero inner product.
    NotOrthogonal {
        context: usize,
        u: VertexId,
        v: VertexId,
        dot: BigInt,
    },
    /// A context whose rays do not span the full dimension.
    RankDeficient { context: usize, rank: usize },
    /// Faithfulness exception: two vertices sharing no context whose rays
    /// are nonetheless orthogonal.
    ExtraOrthogonality { u: VertexId, v: VertexId },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationReport {
    /// Every context passed pairwise orthogonality and full rank.
    pub contexts_ok: bool,
    /// No extra orthogonalities between vertices outside common contexts.
    /// `None` when the faithfulness check was not requested.
    pub faithful: Option<bool>,
    pub violations: Vec<Violation>,
}

/// Verifies that `r` is an orthogonal representation of `h`: within every
/// context all pairwise inner products vanish and the context's rays have
/// full rank. With `faithful`, additionally scans every non-co-contextual
/// vertex pair for unexpected orthogonality; those are reported as
/// violations but only affect the `faithful` flag.
pub fn verify_realization(
    h: &Hypergraph,
    r: &Realization,
    faithful: bool,
) -> Result<RealizationReport, RealizationError> {
    for v in h.vertices() {
        if !r.rays.contains_key(&v) {
            return Err(RealizationError::MissingVertex(h.name(v).to_owned()));
        }
    }
    let n = h.uniformity().map_err(|_| RealizationError::DimensionMismatch {
        realization: r.dimension,
        uniformity: 0,
    })?;
    if n != r.dimension {
        return Err(RealizationError::DimensionMismatch {
            realization: r.dimension,
            uniformity: n,
        });
    }

    let mut violations = Vec::new();
    for (ci, ctx) in h.contexts().iter().enumerate() {
        for (i, &u) in ctx.members.iter().enumerate() {
            for &v in &ctx.members[i + 1..] {
                let dot = r.rays[&u].dot(&r.rays[&v]);
                if !dot.is_zero() {
                    violations.push(Violation::NotOrthogonal {
                        context: ci,
                        u,
                        v,
                        dot,
                    });
                }
            }
        }
        let rows: Vec<Vec<BigRational>> = ctx
            .members
            .iter()
            .map(|v| {
                r.rays[v]
                    .coords()
                    .iter()
                    .map(|c| BigRational::from(c.clone()))
                    .collect()
            })
            .collect();
        let rank = rational_rank(rows);
        if rank != r.dimension {
            violations.push(Violation::RankDeficient { context: ci, rank });
        }
    }
    let contexts_ok = violations.is_empty();

    let faithful_flag = if faithful {
        let mut ok = true;
        let vs: Vec<VertexId> = h.vertices().collect();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !h.co_contextual(u, v) && r.rays[&u].dot(&r.rays[&v]).is_zero() {
                    violations.push(Violation::ExtraOrthogonality { u, v });
                    ok = false;
                }
            }
        }
        Some(ok)
    } else {
        None
    };

    Ok(RealizationReport {
        contexts_ok,
        faithful: faithful_flag,
        violations,
    })
}

/// Exact rank by Gaussian elimination over the rationals.
pub fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows.len() && col < cols {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        match pivot {
            None => {
                col += 1;
                continue;
            }
            Some(p) => {
                rows.swap(rank, p);
                let pv = rows[rank][col].clone();
                for r in rank + 1..rows.len() {
                    if !rows[r][col].is_zero() {
                        let factor = &rows[r][col] / &pv;
                        for c in col..cols {
                            let sub = &factor * &rows[rank][c];
                            rows[r][c] = &rows[r][c] - sub;
                        }
                    }
                }
                rank += 1;
                col += 1;
            }
        }
    }
    rank
}
