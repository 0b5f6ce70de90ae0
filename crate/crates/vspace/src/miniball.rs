//! Smallest enclosing balls of rational point sets, and the violator table
//! they induce.
//!
//! Everything is exact: coordinates, centers and squared radii are rationals
//! and no square root is ever taken. That matters because the locality axiom
//! is brittle under rounding — cocircular and collinear configurations (the
//! unit square, points on a line) must be classified exactly.
//!
//! The ball of a subset G is found by candidate enumeration over support
//! sets: single points, midpoint balls of pairs, and circumballs of
//! non-collinear triples (dimension 2 only). The smallest candidate covering
//! G is the smallest enclosing ball.

use num::{BigInt, BigRational, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::mask::SubsetMask;
use crate::table::{OperatorKind, OperatorTable};

pub type Rational = BigRational;

/// Materialization is 2^count, so configurations stay small.
pub const MAX_POINTS: usize = 10;

/// A labelled point with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Point {
    label: String,
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(label: impl Into<String>, coords: Vec<Rational>) -> Self {
        Point {
            label: label.into(),
            coords,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }
}

/// A finite point set in dimension 1 or 2, with distinct labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointConfig {
    dim: usize,
    points: Vec<Point>,
}

impl PointConfig {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        if dim == 0 || dim > 2 {
            return Err(Error::BadDimension(dim));
        }
        if points.is_empty() || points.len() > MAX_POINTS {
            return Err(Error::BadPointCount {
                n: points.len(),
                max: MAX_POINTS,
            });
        }
        for (i, p) in points.iter().enumerate() {
            if p.coords.len() != dim {
                return Err(Error::WrongCoordCount {
                    label: p.label.clone(),
                    got: p.coords.len(),
                    expected: dim,
                });
            }
            if points[..i].iter().any(|q| q.label == p.label) {
                return Err(Error::DuplicateLabel(p.label.clone()));
            }
        }
        Ok(PointConfig { dim, points })
    }

    /// Parses the point file format, with rationals as `"p/q"` strings:
    /// `{ "dim": 2, "points": [ {"label": "a", "coords": ["3/2", "0"]}, ... ] }`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: PointFile = serde_json::from_str(text)?;
        let points = file
            .points
            .into_iter()
            .map(|p| {
                let coords = p
                    .coords
                    .iter()
                    .map(|c| parse_rational(c))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Point::new(p.label, coords))
            })
            .collect::<Result<Vec<_>>>()?;
        PointConfig::new(file.dim, points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Ground set whose elements are the point labels, in input order.
    pub fn ground(&self) -> GroundSet {
        GroundSet::new(self.points.iter().map(|p| p.label.clone()))
            .expect("validated configurations have distinct labels within the cap")
    }
}

#[derive(Deserialize)]
struct PointFile {
    dim: usize,
    points: Vec<PointEntry>,
}

#[derive(Deserialize)]
struct PointEntry {
    label: String,
    coords: Vec<String>,
}

/// Parses `"p/q"` or plain `"p"` with a nonzero denominator.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::BadRational(text.to_string());
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let numer: BigInt = numer.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = denom.trim().parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// A ball given by center and squared radius; containment is exact.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ball {
    center: Vec<Rational>,
    radius_sq: Rational,
}

impl Ball {
    pub fn center(&self) -> &[Rational] {
        &self.center
    }

    pub fn radius_sq(&self) -> &Rational {
        &self.radius_sq
    }

    pub fn contains(&self, coords: &[Rational]) -> bool {
        dist_sq(&self.center, coords) <= self.radius_sq
    }

    pub fn strictly_outside(&self, coords: &[Rational]) -> bool {
        dist_sq(&self.center, coords) > self.radius_sq
    }
}

fn dist_sq(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = x - y;
            &d * &d
        })
        .sum()
}

/// The smallest enclosing ball of the points selected by `subset`, or `None`
/// for the empty subset (the empty marker contains nothing).
pub fn smallest_enclosing_ball(config: &PointConfig, subset: SubsetMask) -> Option<Ball> {
    let pts: Vec<&[Rational]> = subset
        .members()
        .filter(|&i| i < config.len())
        .map(|i| config.points[i].coords())
        .collect();
    if pts.is_empty() {
        return None;
    }

    let mut best: Option<Ball> = None;
    let mut consider = |ball: Ball| {
        if !pts.iter().all(|p| ball.contains(p)) {
            return;
        }
        let better = match &best {
            None => true,
            Some(b) => {
                (ball.radius_sq.clone(), ball.center.clone())
                    < (b.radius_sq.clone(), b.center.clone())
            }
        };
        if better {
            best = Some(ball);
        }
    };

    for (i, p) in pts.iter().enumerate() {
        consider(Ball {
            center: p.to_vec(),
            radius_sq: Rational::zero(),
        });
        for (j, q) in pts.iter().enumerate().skip(i + 1) {
            consider(midpoint_ball(p, q));
            if config.dim == 2 {
                for r in pts.iter().skip(j + 1) {
                    if let Some(ball) = circumball(p, q, r) {
                        consider(ball);
                    }
                }
            }
        }
    }
    best
}

/// Ball with the segment pq as a diameter.
fn midpoint_ball(p: &[Rational], q: &[Rational]) -> Ball {
    let two = Rational::from_integer(BigInt::from(2));
    let center: Vec<Rational> = p.iter().zip(q).map(|(a, b)| (a + b) / &two).collect();
    let radius_sq = dist_sq(&center, p);
    Ball { center, radius_sq }
}

/// Circumball of a non-collinear planar triple; `None` when collinear.
fn circumball(a: &[Rational], b: &[Rational], c: &[Rational]) -> Option<Ball> {
    let two = Rational::from_integer(BigInt::from(2));
    let norm = |p: &[Rational]| &p[0] * &p[0] + &p[1] * &p[1];

    // 2(b−a)·z = |b|²−|a|², 2(c−a)·z = |c|²−|a|², solved by Cramer's rule
    let m11 = (&b[0] - &a[0]) * &two;
    let m12 = (&b[1] - &a[1]) * &two;
    let m21 = (&c[0] - &a[0]) * &two;
    let m22 = (&c[1] - &a[1]) * &two;
    let r1 = norm(b) - norm(a);
    let r2 = norm(c) - norm(a);

    let det = &m11 * &m22 - &m12 * &m21;
    if det.is_zero() {
        return None;
    }
    let zx = (&r1 * &m22 - &r2 * &m12) / &det;
    let zy = (&m11 * &r2 - &m21 * &r1) / &det;
    let center = vec![zx, zy];
    let radius_sq = dist_sq(&center, a);
    Some(Ball { center, radius_sq })
}

/// Points of the whole configuration strictly outside the smallest enclosing
/// ball of `g`. The empty subset has no ball, so every point violates it.
pub fn violators(config: &PointConfig, g: SubsetMask) -> SubsetMask {
    let all = config.ground().full_mask();
    match smallest_enclosing_ball(config, g) {
        None => all,
        Some(ball) => {
            let mut out = SubsetMask::EMPTY;
            for (i, p) in config.points.iter().enumerate() {
                if ball.strictly_outside(p.coords()) {
                    out = out.insert(i);
                }
            }
            out
        }
    }
}

/// The violator table of the configuration: V(G) for all 2^count subsets.
pub fn materialize(config: &PointConfig) -> OperatorTable {
    OperatorTable::from_fn(config.ground(), OperatorKind::Violator, |g| {
        violators(config, g)
    })
    .expect("violator sets are subsets of the configuration")
}
