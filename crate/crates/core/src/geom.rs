//! Points, triangles, side lengths and interior angles.
//!
//! Every [`Triangle`] is validated and stored counter-clockwise once, at
//! construction. Everything downstream assumes that orientation.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative degeneracy threshold: a triangle is rejected when
/// `|cross(B - A, C - A)| <= EPS_AREA * s^2`, `s` the longest side.
pub const EPS_AREA: f64 = 1e-12;

/// Angular tolerance (radians) for equal-angle ties and right-angle detection.
pub const EPS_ANGLE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Self) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Self) -> f64 {
        (self - other).norm()
    }

    pub fn midpoint(self, other: Self) -> Self {
        Self::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// Unit vector in the same direction. The caller guarantees a non-zero vector.
    pub fn normalized(self) -> Self {
        self * (1.0 / self.norm())
    }

    /// Counter-clockwise rotation by `angle` radians about the origin.
    pub fn rotated(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// Left-hand perpendicular `(-y, x)`.
    pub fn perp(self) -> Self {
        Self::new(-self.y, self.x)
    }
}

impl Add for Point2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Self::new(self.x * k, self.y * k)
    }
}

impl Neg for Point2 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Axis-aligned bounding box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    pub min: Point2,
    pub max: Point2,
}

impl Bounds {
    pub fn from_point(p: Point2) -> Self {
        Self { min: p, max: p }
    }

    pub fn include(&mut self, p: Point2) {
        self.min.x = self.min.x.min(p.x);
        self.min.y = self.min.y.min(p.y);
        self.max.x = self.max.x.max(p.x);
        self.max.y = self.max.y.max(p.y);
    }

    pub fn union(mut self, other: Bounds) -> Self {
        self.include(other.min);
        self.include(other.max);
        self
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn contains(&self, p: Point2) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }
}

/// Vertex label of a triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    /// The side not touching this vertex.
    pub fn opposite_edge(self) -> Edge {
        match self {
            Vertex::A => Edge::BC,
            Vertex::B => Edge::CA,
            Vertex::C => Edge::AB,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Vertex::A => "A",
            Vertex::B => "B",
            Vertex::C => "C",
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A side of the triangle, named in counter-clockwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edge {
    AB,
    BC,
    CA,
}

impl Edge {
    pub const ALL: [Edge; 3] = [Edge::AB, Edge::BC, Edge::CA];

    /// (first, second) endpoint in boundary order.
    pub fn endpoints(self) -> (Vertex, Vertex) {
        match self {
            Edge::AB => (Vertex::A, Vertex::B),
            Edge::BC => (Vertex::B, Vertex::C),
            Edge::CA => (Vertex::C, Vertex::A),
        }
    }

    /// The vertex not on this side.
    pub fn opposite_vertex(self) -> Vertex {
        match self {
            Edge::AB => Vertex::C,
            Edge::BC => Vertex::A,
            Edge::CA => Vertex::B,
        }
    }

    /// The side joining two distinct vertices.
    pub fn joining(p: Vertex, q: Vertex) -> Edge {
        debug_assert_ne!(p, q);
        match (p, q) {
            (Vertex::A, Vertex::B) | (Vertex::B, Vertex::A) => Edge::AB,
            (Vertex::B, Vertex::C) | (Vertex::C, Vertex::B) => Edge::BC,
            _ => Edge::CA,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Edge::AB => "AB",
            Edge::BC => "BC",
            Edge::CA => "CA",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Non-degenerate triangle with vertices stored counter-clockwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    a_vertex: Point2,
    b_vertex: Point2,
    c_vertex: Point2,
}

/// Validate three points and return them as a counter-clockwise triangle.
///
/// Clockwise input keeps `A` and swaps `B` with `C`. Input that is already
/// counter-clockwise is returned unchanged, so normalization is idempotent.
pub fn normalize(p1: Point2, p2: Point2, p3: Point2) -> Result<Triangle> {
    if !(p1.is_finite() && p2.is_finite() && p3.is_finite()) {
        return Err(Error::NonFinitePoint);
    }
    let s = p1.distance(p2).max(p2.distance(p3)).max(p3.distance(p1));
    let cross = (p2 - p1).cross(p3 - p1);
    let threshold = EPS_AREA * s * s;
    if cross.is_nan() || cross.abs() <= threshold {
        return Err(Error::DegenerateTriangle { cross, threshold });
    }
    let (b, c) = if cross > 0.0 { (p2, p3) } else { (p3, p2) };
    Ok(Triangle {
        a_vertex: p1,
        b_vertex: b,
        c_vertex: c,
    })
}

impl Triangle {
    pub fn new(p1: Point2, p2: Point2, p3: Point2) -> Result<Self> {
        normalize(p1, p2, p3)
    }

    pub fn a(&self) -> Point2 {
        self.a_vertex
    }

    pub fn b(&self) -> Point2 {
        self.b_vertex
    }

    pub fn c(&self) -> Point2 {
        self.c_vertex
    }

    pub fn vertex(&self, v: Vertex) -> Point2 {
        match v {
            Vertex::A => self.a_vertex,
            Vertex::B => self.b_vertex,
            Vertex::C => self.c_vertex,
        }
    }

    pub fn vertices(&self) -> [Point2; 3] {
        [self.a_vertex, self.b_vertex, self.c_vertex]
    }

    pub fn edge_points(&self, e: Edge) -> (Point2, Point2) {
        let (p, q) = e.endpoints();
        (self.vertex(p), self.vertex(q))
    }

    pub fn side_lengths(&self) -> SideLengths {
        side_lengths(self)
    }

    pub fn interior_angles(&self) -> TriangleAngles {
        interior_angles(self)
    }

    pub fn classify(&self) -> TriangleClass {
        classify_triangle(self)
    }

    pub fn longest_side(&self) -> f64 {
        self.side_lengths().max()
    }

    pub fn area(&self) -> f64 {
        0.5 * (self.b_vertex - self.a_vertex).cross(self.c_vertex - self.a_vertex)
    }

    pub fn centroid(&self) -> Point2 {
        Point2::new(
            (self.a_vertex.x + self.b_vertex.x + self.c_vertex.x) / 3.0,
            (self.a_vertex.y + self.b_vertex.y + self.c_vertex.y) / 3.0,
        )
    }

    /// Center of the circle through the three vertices.
    pub fn circumcenter(&self) -> Point2 {
        let b = self.b_vertex - self.a_vertex;
        let c = self.c_vertex - self.a_vertex;
        let d = 2.0 * b.cross(c);
        let bb = b.dot(b);
        let cc = c.dot(c);
        self.a_vertex + Point2::new((c.y * bb - b.y * cc) / d, (b.x * cc - c.x * bb) / d)
    }

    /// Closed-triangle membership (boundary counts as inside).
    pub fn contains(&self, p: Point2) -> bool {
        let [a, b, c] = self.vertices();
        (b - a).cross(p - a) >= 0.0 && (c - b).cross(p - b) >= 0.0 && (a - c).cross(p - c) >= 0.0
    }
}

/// `a = |BC|`, `b = |CA|`, `c = |AB|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideLengths {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl SideLengths {
    pub fn of_edge(&self, e: Edge) -> f64 {
        match e {
            Edge::AB => self.c,
            Edge::BC => self.a,
            Edge::CA => self.b,
        }
    }

    pub fn max(&self) -> f64 {
        self.a.max(self.b).max(self.c)
    }

    pub fn perimeter(&self) -> f64 {
        self.a + self.b + self.c
    }
}

/// Interior angles in radians: `alpha` at A, `beta` at B, `gamma` at C.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleAngles {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl TriangleAngles {
    pub fn at(&self, v: Vertex) -> f64 {
        match v {
            Vertex::A => self.alpha,
            Vertex::B => self.beta,
            Vertex::C => self.gamma,
        }
    }

    pub fn sum(&self) -> f64 {
        self.alpha + self.beta + self.gamma
    }

    /// Vertex carrying the largest angle (first in A, B, C order on ties).
    pub fn max_vertex(&self) -> Vertex {
        let mut best = Vertex::A;
        for v in [Vertex::B, Vertex::C] {
            if self.at(v) > self.at(best) {
                best = v;
            }
        }
        best
    }

    pub fn min_vertex(&self) -> Vertex {
        let mut best = Vertex::A;
        for v in [Vertex::B, Vertex::C] {
            if self.at(v) < self.at(best) {
                best = v;
            }
        }
        best
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleClass {
    Acute,
    /// Right angle at the given vertex.
    Right(Vertex),
    /// Obtuse angle at the given vertex.
    Obtuse(Vertex),
}

impl TriangleClass {
    pub fn is_obtuse(self) -> bool {
        matches!(self, TriangleClass::Obtuse(_))
    }

    pub fn right_vertex(self) -> Option<Vertex> {
        match self {
            TriangleClass::Right(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for TriangleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleClass::Acute => f.write_str("acute"),
            TriangleClass::Right(v) => write!(f, "right at {v}"),
            TriangleClass::Obtuse(v) => write!(f, "obtuse at {v}"),
        }
    }
}

pub fn side_lengths(t: &Triangle) -> SideLengths {
    SideLengths {
        a: t.b().distance(t.c()),
        b: t.c().distance(t.a()),
        c: t.a().distance(t.b()),
    }
}

/// Angle at `apex` between the rays towards `p` and `q`, in `[0, pi]`.
fn angle_between(apex: Point2, p: Point2, q: Point2) -> f64 {
    let u = p - apex;
    let v = q - apex;
    u.cross(v).abs().atan2(u.dot(v))
}

pub fn interior_angles(t: &Triangle) -> TriangleAngles {
    let [a, b, c] = t.vertices();
    TriangleAngles {
        alpha: angle_between(a, b, c),
        beta: angle_between(b, c, a),
        gamma: angle_between(c, a, b),
    }
}

pub fn classify_triangle(t: &Triangle) -> TriangleClass {
    let angles = t.interior_angles();
    let v = angles.max_vertex();
    let max = angles.at(v);
    if (max - FRAC_PI_2).abs() <= EPS_ANGLE {
        TriangleClass::Right(v)
    } else if max > FRAC_PI_2 + EPS_ANGLE {
        TriangleClass::Obtuse(v)
    } else {
        TriangleClass::Acute
    }
}
