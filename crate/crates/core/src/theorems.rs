//! Executable versions of the inequalities and identities satisfied by
//! bulging triangles.
//!
//! # Pythagorean gap
//!
//! Place a right-angled base triangle at `B(0, 0)`, `C(a, 0)`, `A(a, b)` with
//! legs `a <= b` and put `t = atan(b/a)`, the angle at `B`. The round sides are
//!
//! ```text
//! |AB~| = (a^2 + b^2)/b * t
//! |BC~| = sqrt(a^2 + b^2) * (pi/2 - t)
//! |CA~| = sqrt(a^2 + b^2) * t
//! ```
//!
//! and the normalized gap
//!
//! ```text
//! F(t) = ((|BC~|^2 + |CA~|^2) - |AB~|^2) / (a^2 + b^2)
//!      = (b^2 - a^2)/b^2 * t^2 - pi*t + pi^2/4
//! ```
//!
//! vanishes at `theta0 = pi*b / (2(a + b))`, is non-negative on
//! `[pi/4, theta0]` and negative on `(theta0, pi/2)`.
//!
//! Note the sign: `F >= 0` means the legs' round sides dominate. A prose
//! reading that puts the hypotenuse side on top for `t <= theta0` contradicts
//! `F`; the closed-form lengths side with `F` (for `a = 1`, `b = sqrt(3)`:
//! `|AB~|^2 ~ 5.849` against `|BC~|^2 + |CA~|^2 ~ 5.483`). Moreover
//! `t >= theta0` for every `a <= b` with equality only at `a = b`, so every
//! non-isosceles right-angled bulging triangle has `|AB~|^2` strictly larger
//! than the sum.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::construct::BulgingTriangle;
use crate::error::{Error, Result};
use crate::geom::{Edge, Vertex, EPS_ANGLE};
use crate::metrics::{edge_lengths, EdgeLengths};

/// Relative band (times `a^2 + b^2`) inside which a gap counts as zero.
pub const EQUAL_BAND: f64 = 1e-9;
/// Relative tolerance between the two gap evaluations, in units of `a^2 + b^2`.
pub const PATH_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleInequality {
    pub holds: bool,
    /// Smallest of `x + y - z` over the three choices of `z`.
    pub margin: f64,
}

pub fn check_triangle_inequality(bt: &BulgingTriangle) -> Result<TriangleInequality> {
    if !bt.is_convex() {
        return Err(Error::ConcaveUnsupported);
    }
    let EdgeLengths { ab, bc, ca } = edge_lengths(bt);
    let margin = (bc + ca - ab).min(ca + ab - bc).min(ab + bc - ca);
    Ok(TriangleInequality {
        holds: margin > 0.0,
        margin,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// The hypothesis fails (or is within tolerance of failing).
    NotApplicable,
    Holds,
    Violated,
}

/// One instance of "angle at `smaller` < angle at `larger` <= pi/2 implies the
/// edge opposite `smaller` is shorter than the edge opposite `larger`".
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleLengthCase {
    pub smaller: Vertex,
    pub larger: Vertex,
    pub result: Check,
}

/// "Angle at `min_vertex` is the strict minimum, and the edge opposite
/// `larger` is longer than the edge opposite `smaller`, so the angle at
/// `larger` exceeds the angle at `smaller`."
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConverseCase {
    pub min_vertex: Vertex,
    pub smaller: Vertex,
    pub larger: Vertex,
    pub result: Check,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EdgeOrdering {
    /// Edges sorted by increasing length.
    pub ordered: Vec<(Edge, f64)>,
    /// All six ordered vertex pairs.
    pub angle_length: Vec<AngleLengthCase>,
    /// Empty unless one angle is strictly the smallest.
    pub converse: Vec<ConverseCase>,
}

impl EdgeOrdering {
    pub fn consistent(&self) -> bool {
        self.angle_length.iter().all(|c| c.result != Check::Violated)
            && self.converse.iter().all(|c| c.result != Check::Violated)
    }

    pub fn case(&self, smaller: Vertex, larger: Vertex) -> Option<&AngleLengthCase> {
        self.angle_length
            .iter()
            .find(|c| c.smaller == smaller && c.larger == larger)
    }
}

pub fn edge_ordering_check(bt: &BulgingTriangle) -> Result<EdgeOrdering> {
    if !bt.is_convex() {
        return Err(Error::ConcaveUnsupported);
    }
    let angles = bt.triangle().interior_angles();
    let lengths = edge_lengths(bt);
    let len_opposite = |v: Vertex| lengths.of(v.opposite_edge());

    let mut ordered: Vec<(Edge, f64)> = Edge::ALL.iter().map(|&e| (e, lengths.of(e))).collect();
    ordered.sort_by(|x, y| x.1.total_cmp(&y.1));

    let mut angle_length = Vec::with_capacity(6);
    for smaller in Vertex::ALL {
        for larger in Vertex::ALL {
            if smaller == larger {
                continue;
            }
            let applies = angles.at(smaller) < angles.at(larger) - EPS_ANGLE
                && angles.at(larger) <= FRAC_PI_2 + EPS_ANGLE;
            let result = if !applies {
                Check::NotApplicable
            } else if len_opposite(smaller) < len_opposite(larger) {
                Check::Holds
            } else {
                Check::Violated
            };
            angle_length.push(AngleLengthCase {
                smaller,
                larger,
                result,
            });
        }
    }

    let mut converse = Vec::new();
    let min_vertex = angles.min_vertex();
    let others: Vec<Vertex> = Vertex::ALL.into_iter().filter(|&v| v != min_vertex).collect();
    let strict_min = others
        .iter()
        .all(|&v| angles.at(min_vertex) < angles.at(v) - EPS_ANGLE);
    if strict_min {
        let scale = lengths.perimeter();
        for (&smaller, &larger) in [(&others[0], &others[1]), (&others[1], &others[0])] {
            let longer = len_opposite(larger) > len_opposite(smaller) + 1e-12 * scale;
            let result = if !longer {
                Check::NotApplicable
            } else if angles.at(larger) > angles.at(smaller) {
                Check::Holds
            } else {
                Check::Violated
            };
            converse.push(ConverseCase {
                min_vertex,
                smaller,
                larger,
                result,
            });
        }
    }

    Ok(EdgeOrdering {
        ordered,
        angle_length,
        converse,
    })
}

/// Equal angles at the two ends of the apex's opposite side force equal round
/// sides at the apex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsoscelesCheck {
    pub apex: Vertex,
    pub equal: bool,
    /// `| |e1~| - |e2~| |` for the two edges meeting at the apex.
    pub delta: f64,
}

/// One entry per apex whose base angles agree within `EPS_ANGLE`
/// (three for an equilateral triangle).
pub fn isoceles_edge_equality(bt: &BulgingTriangle) -> Result<Vec<IsoscelesCheck>> {
    let angles = bt.triangle().interior_angles();
    let lengths = edge_lengths(bt);
    let perimeter = lengths.perimeter();
    let checks: Vec<IsoscelesCheck> = Vertex::ALL
        .into_iter()
        .filter_map(|apex| {
            let base = apex.opposite_edge();
            let (y, z) = base.endpoints();
            if (angles.at(y) - angles.at(z)).abs() > EPS_ANGLE {
                return None;
            }
            let delta = (lengths.of(y.opposite_edge()) - lengths.of(z.opposite_edge())).abs();
            Some(IsoscelesCheck {
                apex,
                equal: delta <= 1e-9 * perimeter,
                delta,
            })
        })
        .collect();
    if checks.is_empty() {
        Err(Error::NotIsosceles)
    } else {
        Ok(checks)
    }
}

fn legs_ok(a: f64, b: f64) -> bool {
    a.is_finite() && b.is_finite() && a > 0.0 && b > 0.0
}

/// Normalize legs so that the first is the shorter.
fn ordered_legs(a: f64, b: f64) -> Result<(f64, f64)> {
    if !legs_ok(a, b) {
        return Err(Error::BadLegs { a, b });
    }
    Ok(if a <= b { (a, b) } else { (b, a) })
}

/// Threshold angle `pi*b / (2(a + b))` for legs `0 < a <= b`.
pub fn theta_zero(a: f64, b: f64) -> Result<f64> {
    if !legs_ok(a, b) || a > b {
        return Err(Error::BadLegs { a, b });
    }
    Ok(PI * b / (2.0 * (a + b)))
}

/// Normalized gap `F(t) = (b^2 - a^2)/b^2 * t^2 - pi*t + pi^2/4`.
pub fn gap_parabola(a: f64, b: f64, t: f64) -> f64 {
    (b * b - a * a) / (b * b) * t * t - PI * t + PI * PI / 4.0
}

/// Round-side lengths `(|AB~|, |BC~|, |CA~|)` of the right-angled bulging
/// triangle on `B(0, 0)`, `C(a, 0)`, `A(a, b)`.
///
/// The hypotenuse side's center lies on the longer leg, so its closed form
/// uses the longer leg `l` and shorter leg `s`: `c^2 / l * atan(l / s)`.
pub fn right_edge_lengths(a: f64, b: f64) -> Result<(f64, f64, f64)> {
    if !legs_ok(a, b) {
        return Err(Error::BadLegs { a, b });
    }
    let c2 = a * a + b * b;
    let c = c2.sqrt();
    let t = (b / a).atan();
    let (short, long) = if a <= b { (a, b) } else { (b, a) };
    let ab = c2 / long * (long / short).atan();
    Ok((ab, c * (FRAC_PI_2 - t), c * t))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PythVerdict {
    /// `|BC~|^2 + |CA~|^2 > |AB~|^2`.
    SumDominates,
    Equal,
    /// `|AB~|^2 > |BC~|^2 + |CA~|^2`.
    HypotenuseDominates,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PythReport {
    /// Shorter leg.
    pub a: f64,
    /// Longer leg.
    pub b: f64,
    /// `atan(b/a)`, the angle at `B`.
    pub t: f64,
    pub theta0: f64,
    /// `(a^2 + b^2) * F(t)`.
    pub gap: f64,
    /// The same gap from the three closed-form round-side lengths.
    pub gap_from_edges: f64,
    pub verdict: PythVerdict,
}

pub fn pyth_gap(a: f64, b: f64) -> Result<PythReport> {
    let (a, b) = ordered_legs(a, b)?;
    let t = (b / a).atan();
    let theta0 = theta_zero(a, b)?;
    let scale = a * a + b * b;
    let gap = scale * gap_parabola(a, b, t);

    let (ab, bc, ca) = right_edge_lengths(a, b)?;
    let gap_from_edges = bc * bc + ca * ca - ab * ab;
    if (gap - gap_from_edges).abs() > PATH_TOL * scale {
        return Err(Error::InconsistentPaths {
            parabola: gap,
            edges: gap_from_edges,
        });
    }

    let band = EQUAL_BAND * scale;
    let verdict = if gap > band {
        PythVerdict::SumDominates
    } else if gap < -band {
        PythVerdict::HypotenuseDominates
    } else {
        PythVerdict::Equal
    };
    Ok(PythReport {
        a,
        b,
        t,
        theta0,
        gap,
        gap_from_edges,
        verdict,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PythBranch {
    /// `t <= theta0`, where `F(t) >= 0`.
    InLowerBranch,
    /// `t > theta0`, where `F(t) < 0`.
    InUpperBranch,
}

/// Compare `t = atan(b/a)` with `theta0`; ties within `EPS_ANGLE * theta0`
/// count as the lower branch.
pub fn pyth_classify(a: f64, b: f64) -> Result<PythBranch> {
    let (a, b) = ordered_legs(a, b)?;
    let t = (b / a).atan();
    let theta0 = theta_zero(a, b)?;
    Ok(if t <= theta0 * (1.0 + EPS_ANGLE) {
        PythBranch::InLowerBranch
    } else {
        PythBranch::InUpperBranch
    })
}

/// A right-angled bulging triangle relabeled so the right angle plays `C`:
/// cyclically, `(A', B', C') = (x, y, right)` with `a = |B'C'|`, `b = |C'A'|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RightView {
    pub right: Vertex,
    pub hypotenuse: Edge,
    /// Edge playing `B'C'`.
    pub leg_a: Edge,
    /// Edge playing `C'A'`.
    pub leg_b: Edge,
    pub a: f64,
    pub b: f64,
}

pub fn right_view(bt: &BulgingTriangle) -> Result<RightView> {
    let right = bt.class().right_vertex().ok_or(Error::NotRightAngled)?;
    let (x, y) = right.opposite_edge().endpoints();
    let sides = bt.triangle().side_lengths();
    let leg_a = Edge::joining(y, right);
    let leg_b = Edge::joining(right, x);
    Ok(RightView {
        right,
        hypotenuse: right.opposite_edge(),
        leg_a,
        leg_b,
        a: sides.of_edge(leg_a),
        b: sides.of_edge(leg_b),
    })
}

/// The two leg-side round sides of a right-angled bulging triangle join into
/// a semicircle over the hypotenuse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemicircleCheck {
    /// `|BC~| + |CA~|` in right-at-`C` labels.
    pub leg_edges: f64,
    /// `(pi/2) * sqrt(a^2 + b^2)`.
    pub half_circumference: f64,
    /// `|AB~|`.
    pub hypotenuse_edge: f64,
}

impl SemicircleCheck {
    pub fn relative_error(&self) -> f64 {
        (self.leg_edges - self.half_circumference).abs() / self.half_circumference
    }
}

pub fn semicircle_identity(bt: &BulgingTriangle) -> Result<SemicircleCheck> {
    let view = right_view(bt)?;
    let lengths = edge_lengths(bt);
    Ok(SemicircleCheck {
        leg_edges: lengths.of(view.leg_a) + lengths.of(view.leg_b),
        half_circumference: FRAC_PI_2 * view.a.hypot(view.b),
        hypotenuse_edge: lengths.of(view.hypotenuse),
    })
}
