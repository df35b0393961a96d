//! Construction of bulging triangles.
//!
//! Each side `XY` of the base triangle is replaced by a circular arc through
//! `X` and `Y`. The arc's center is where the perpendicular bisector of `XY`
//! meets the longer of the two remaining sides, which is the side opposite
//! the larger of the endpoint angles. When those angles tie, the bisector runs
//! through the third vertex and the center is that vertex.
//!
//! Writing `m` for the smaller endpoint angle, the isosceles triangle formed by
//! `X`, `Y` and the center has base angles `m`, so the radius is
//! `|XY| / (2 cos m)` and the central angle is `pi - 2m`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geom::{Bounds, Edge, Point2, Triangle, TriangleClass, EPS_ANGLE};

/// Where an edge center sits on the base triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HostSide {
    /// Interior or end point of the given side.
    Side(Edge),
    /// Exactly the vertex opposite the edge (equal endpoint angles).
    ThirdVertex,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeCenter {
    pub point: Point2,
    pub host_side: HostSide,
    /// Position along the host side measured from its first endpoint
    /// (`A` for `AB`, `B` for `BC`, `C` for `CA`); zero for [`HostSide::ThirdVertex`].
    pub param: f64,
}

/// One round side of a bulging triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcEdge {
    pub center: Point2,
    pub radius: f64,
    pub start: Point2,
    pub end: Point2,
    /// Angle subtended at `center`, in `(0, pi)`.
    pub central_angle: f64,
    /// Unit normal of the chord pointing to the side the arc bulges towards.
    pub bulge_outward: Point2,
}

impl ArcEdge {
    /// Arc of the circle `(center, radius)` starting at polar angle
    /// `start_angle` and sweeping counter-clockwise by `sweep` in `(0, pi)`.
    pub fn from_polar(center: Point2, radius: f64, start_angle: f64, sweep: f64) -> Self {
        let start = center + Point2::new(start_angle.cos(), start_angle.sin()) * radius;
        let end_angle = start_angle + sweep;
        let end = center + Point2::new(end_angle.cos(), end_angle.sin()) * radius;
        let chord = end - start;
        ArcEdge {
            center,
            radius,
            start,
            end,
            central_angle: sweep,
            bulge_outward: Point2::new(chord.y, -chord.x).normalized(),
        }
    }

    pub fn chord_length(&self) -> f64 {
        self.start.distance(self.end)
    }

    /// `+1` when travelling from `start` to `end` turns counter-clockwise about
    /// the center, `-1` otherwise. Read off the outward normal: the bulge lies
    /// to the right of the chord exactly when the sweep is counter-clockwise.
    pub fn sweep_sign(&self) -> f64 {
        if (self.end - self.start).cross(self.bulge_outward) < 0.0 {
            1.0
        } else {
            -1.0
        }
    }

    /// Point at fraction `tau` of the central angle, `0` at `start` and `1` at `end`.
    pub fn point_at(&self, tau: f64) -> Point2 {
        if tau == 0.0 {
            return self.start;
        }
        if tau == 1.0 {
            return self.end;
        }
        let u = (self.start - self.center).normalized();
        self.center + u.rotated(self.sweep_sign() * tau * self.central_angle) * self.radius
    }

    pub fn midpoint(&self) -> Point2 {
        self.point_at(0.5)
    }

    /// Whether the direction `dir` (from the center) points into the arc's
    /// angular range.
    pub fn spans_direction(&self, dir: Point2) -> bool {
        let u = self.start - self.center;
        let signed = self.sweep_sign() * u.cross(dir).atan2(u.dot(dir));
        let phi = if signed < 0.0 { signed + 2.0 * PI } else { signed };
        phi <= self.central_angle
    }

    /// Exact bounding box: endpoints plus any axis extreme inside the sweep.
    pub fn bounds(&self) -> Bounds {
        let mut b = Bounds::from_point(self.start);
        b.include(self.end);
        for dir in [
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
            Point2::new(-1.0, 0.0),
            Point2::new(0.0, -1.0),
        ] {
            if self.spans_direction(dir) {
                b.include(self.center + dir * self.radius);
            }
        }
        b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convexity {
    Convex,
    Concave,
}

impl Convexity {
    pub fn name(self) -> &'static str {
        match self {
            Convexity::Convex => "convex",
            Convexity::Concave => "concave",
        }
    }
}

/// A base triangle with its three round sides.
#[derive(Debug, Clone, PartialEq)]
pub struct BulgingTriangle {
    triangle: Triangle,
    class: TriangleClass,
    centers: [EdgeCenter; 3],
    arcs: [ArcEdge; 3],
    convexity: Convexity,
}

impl BulgingTriangle {
    pub fn from_points(p1: Point2, p2: Point2, p3: Point2) -> Result<Self> {
        Ok(build(&Triangle::new(p1, p2, p3)?))
    }

    pub fn triangle(&self) -> &Triangle {
        &self.triangle
    }

    pub fn class(&self) -> TriangleClass {
        self.class
    }

    pub fn convexity(&self) -> Convexity {
        self.convexity
    }

    pub fn is_convex(&self) -> bool {
        self.convexity == Convexity::Convex
    }

    pub fn arc(&self, e: Edge) -> &ArcEdge {
        &self.arcs[e.index()]
    }

    pub fn arc_ab(&self) -> &ArcEdge {
        &self.arcs[0]
    }

    pub fn arc_bc(&self) -> &ArcEdge {
        &self.arcs[1]
    }

    pub fn arc_ca(&self) -> &ArcEdge {
        &self.arcs[2]
    }

    /// Arcs in boundary order AB, BC, CA.
    pub fn arcs(&self) -> &[ArcEdge; 3] {
        &self.arcs
    }

    pub fn center(&self, e: Edge) -> &EdgeCenter {
        &self.centers[e.index()]
    }

    pub fn bounds(&self) -> Bounds {
        self.arcs[1..]
            .iter()
            .fold(self.arcs[0].bounds(), |b, arc| b.union(arc.bounds()))
    }
}

/// Radius and central angle of the arc over a chord whose endpoint angles in
/// the base triangle are `angle_x` and `angle_y`.
pub fn arc_params(chord_length: f64, angle_x: f64, angle_y: f64) -> Result<(f64, f64)> {
    let valid = angle_x > 0.0 && angle_y > 0.0 && angle_x + angle_y < PI;
    if !valid {
        return Err(Error::InvalidAngles { angle_x, angle_y });
    }
    let m = angle_x.min(angle_y);
    Ok((chord_length / (2.0 * m.cos()), PI - 2.0 * m))
}

/// Center of the arc replacing side `edge`.
pub fn edge_center(t: &Triangle, edge: Edge) -> EdgeCenter {
    let angles = t.interior_angles();
    let (vx, vy) = edge.endpoints();
    let vz = edge.opposite_vertex();
    let (ax, ay) = (angles.at(vx), angles.at(vy));

    if (ax - ay).abs() <= EPS_ANGLE {
        return EdgeCenter {
            point: t.vertex(vz),
            host_side: HostSide::ThirdVertex,
            param: 0.0,
        };
    }

    // The center lies on the side opposite the larger endpoint angle, i.e. the
    // side joining the smaller-angle endpoint (the pivot) to the third vertex.
    let (pivot, other) = if ax > ay { (vy, vx) } else { (vx, vy) };
    let p = t.vertex(pivot);
    let q = t.vertex(other);
    let z = t.vertex(vz);

    // Intersect pivot + s (z - pivot) with the bisector {x : (x - mid) . (q - p) = 0}.
    let chord = q - p;
    let s = 0.5 * chord.dot(chord) / (z - p).dot(chord);
    let point = p + (z - p) * s;

    let host = Edge::joining(pivot, vz);
    let param = if host.endpoints().0 == pivot { s } else { 1.0 - s };
    EdgeCenter {
        point,
        host_side: HostSide::Side(host),
        param,
    }
}

fn build_arc(t: &Triangle, edge: Edge, center: &EdgeCenter) -> ArcEdge {
    let angles = t.interior_angles();
    let (vx, vy) = edge.endpoints();
    let (start, end) = t.edge_points(edge);
    let (radius, central_angle) = arc_params(start.distance(end), angles.at(vx), angles.at(vy))
        .expect("interior angles of a valid triangle are admissible");
    let chord = end - start;
    // Counter-clockwise storage puts the third vertex on the left of every
    // side, so the bulge is on the right.
    let bulge_outward = Point2::new(chord.y, -chord.x).normalized();
    ArcEdge {
        center: center.point,
        radius,
        start,
        end,
        central_angle,
        bulge_outward,
    }
}

pub fn build(t: &Triangle) -> BulgingTriangle {
    let centers = Edge::ALL.map(|e| edge_center(t, e));
    let arcs = Edge::ALL.map(|e| build_arc(t, e, &centers[e.index()]));
    let class = t.classify();
    let convexity = if class.is_obtuse() {
        Convexity::Concave
    } else {
        Convexity::Convex
    };
    BulgingTriangle {
        triangle: *t,
        class,
        centers,
        arcs,
        convexity,
    }
}
