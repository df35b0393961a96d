//! Closed-form measurements of a bulging triangle.

use crate::construct::{ArcEdge, BulgingTriangle, Convexity};
use crate::error::{Error, Result};
use crate::geom::{Edge, Point2};
use crate::oracles;

/// Relative slack allowed when comparing the boundary against the
/// circumscribed disk, in units of the hypotenuse.
pub const CIRCUMDISK_TOL: f64 = 1e-9;

/// Turning cross products at or above `-CONVEX_TOL * s^2` count as convex.
pub const CONVEX_TOL: f64 = 1e-9;
/// Some turning cross product below `-CONCAVE_TOL * s^2` proves a dent.
pub const CONCAVE_TOL: f64 = 1e-6;

pub fn edge_length(arc: &ArcEdge) -> f64 {
    arc.radius * arc.central_angle
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeLengths {
    pub ab: f64,
    pub bc: f64,
    pub ca: f64,
}

impl EdgeLengths {
    pub fn of(&self, e: Edge) -> f64 {
        match e {
            Edge::AB => self.ab,
            Edge::BC => self.bc,
            Edge::CA => self.ca,
        }
    }

    pub fn perimeter(&self) -> f64 {
        self.ab + self.bc + self.ca
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.ab, self.bc, self.ca]
    }
}

pub fn edge_lengths(bt: &BulgingTriangle) -> EdgeLengths {
    EdgeLengths {
        ab: edge_length(bt.arc_ab()),
        bc: edge_length(bt.arc_bc()),
        ca: edge_length(bt.arc_ca()),
    }
}

/// `phi - sin(phi)` without cancellation for small angles.
fn phi_minus_sin(phi: f64) -> f64 {
    if phi < 1e-2 {
        let p2 = phi * phi;
        phi * p2 / 6.0 * (1.0 - p2 / 20.0 * (1.0 - p2 / 42.0))
    } else {
        phi - phi.sin()
    }
}

/// Area of the circular segment cut off by the arc's chord.
pub fn segment_area(arc: &ArcEdge) -> f64 {
    0.5 * arc.radius * arc.radius * phi_minus_sin(arc.central_angle)
}

/// Base triangle plus the three circular segments. For convex bulging
/// triangles the segments sit on disjoint sides of the base triangle.
pub fn area(bt: &BulgingTriangle) -> Result<f64> {
    if !bt.is_convex() {
        return Err(Error::ConcaveUnsupported);
    }
    Ok(bt.triangle().area() + bt.arcs().iter().map(segment_area).sum::<f64>())
}

/// Disk centered at the hypotenuse midpoint of a right-angled bulging
/// triangle, with the farthest boundary point from that center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircumDisk {
    pub center: Point2,
    pub radius: f64,
    pub max_boundary_distance: f64,
}

impl CircumDisk {
    /// `max_boundary_distance - radius`; non-positive when the boundary is contained.
    pub fn gap(&self) -> f64 {
        self.max_boundary_distance - self.radius
    }

    /// Containment with slack `CIRCUMDISK_TOL * hypotenuse`.
    pub fn contains_boundary(&self) -> bool {
        self.max_boundary_distance <= self.radius + CIRCUMDISK_TOL * 2.0 * self.radius
    }
}

/// Largest distance from `q` to a point of `arc`.
///
/// Distance to a point of the circle peaks in the direction from `q` through
/// the center. If that direction falls inside the arc the peak is
/// `|center - q| + radius`; otherwise the farthest point is an endpoint.
pub fn arc_max_distance(arc: &ArcEdge, q: Point2) -> f64 {
    let d = arc.center - q;
    let dist = d.norm();
    let endpoints = q.distance(arc.start).max(q.distance(arc.end));
    if dist <= 1e-12 * arc.radius {
        return endpoints.max(arc.radius);
    }
    if arc.spans_direction(d) {
        (dist + arc.radius).max(endpoints)
    } else {
        endpoints
    }
}

pub fn max_distance_from(bt: &BulgingTriangle, q: Point2) -> f64 {
    bt.arcs()
        .iter()
        .map(|arc| arc_max_distance(arc, q))
        .fold(0.0, f64::max)
}

pub fn circumdisk_gap(bt: &BulgingTriangle) -> Result<CircumDisk> {
    let right = bt.class().right_vertex().ok_or(Error::NotRightAngled)?;
    let (p, q) = bt.triangle().edge_points(right.opposite_edge());
    let center = p.midpoint(q);
    Ok(CircumDisk {
        center,
        radius: 0.5 * p.distance(q),
        max_boundary_distance: max_distance_from(bt, center),
    })
}

/// Support function `max over the boundary of <x, dir>` in closed form.
pub fn support(bt: &BulgingTriangle, dir: Point2) -> f64 {
    bt.arcs()
        .iter()
        .map(|arc| {
            if arc.spans_direction(dir) {
                arc.center.dot(dir) + arc.radius * dir.norm()
            } else {
                arc.start.dot(dir).max(arc.end.dot(dir))
            }
        })
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Distance between the two support lines orthogonal to the unit vector `dir`.
pub fn width(bt: &BulgingTriangle, dir: Point2) -> f64 {
    support(bt, dir) + support(bt, -dir)
}

/// Sampling check of the stored convexity flag.
///
/// Samples `n` points per arc and looks at the turning cross product at every
/// sample. All turns at or above `-CONVEX_TOL * s^2` mean convex; any turn
/// below `-CONCAVE_TOL * s^2` means concave; anything in between is
/// [`Error::Inconclusive`].
pub fn convexity_check(bt: &BulgingTriangle, n: usize) -> Result<Convexity> {
    if n < 3 {
        return Err(Error::InvalidSampling("need at least 3 samples per arc"));
    }
    let pts = oracles::boundary_samples(bt, n);
    let s = bt.triangle().longest_side();
    let len = pts.len();
    let min_turn = (0..len)
        .map(|i| {
            let prev = pts[(i + len - 1) % len];
            let cur = pts[i];
            let next = pts[(i + 1) % len];
            (cur - prev).cross(next - cur)
        })
        .fold(f64::INFINITY, f64::min);
    if min_turn >= -CONVEX_TOL * s * s {
        Ok(Convexity::Convex)
    } else if min_turn < -CONCAVE_TOL * s * s {
        Ok(Convexity::Concave)
    } else {
        Err(Error::Inconclusive { min_turn })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricsReport {
    pub len_ab: f64,
    pub len_bc: f64,
    pub len_ca: f64,
    pub perimeter: f64,
    /// `None` for concave bulging triangles.
    pub area: Option<f64>,
    pub convexity: Convexity,
    /// Present exactly when the base triangle is right-angled.
    pub circumdisk: Option<CircumDisk>,
}

pub fn measure(bt: &BulgingTriangle) -> MetricsReport {
    let lengths = edge_lengths(bt);
    MetricsReport {
        len_ab: lengths.ab,
        len_bc: lengths.bc,
        len_ca: lengths.ca,
        perimeter: lengths.ab + lengths.bc + lengths.ca,
        area: area(bt).ok(),
        convexity: bt.convexity(),
        circumdisk: circumdisk_gap(bt).ok(),
    }
}
