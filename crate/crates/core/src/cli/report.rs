//! JSON report document.
//!
//! Field order is the declaration order below and never changes within a
//! schema version. Every number is written with 17 significant digits so a
//! report can be re-ingested without loss.

use std::io::{self, Write};

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use super::{TriangleInput, VERSION};
use crate::construct::{ArcEdge, BulgingTriangle, HostSide};
use crate::format::sig17;
use crate::geom::{Edge, Point2};
use crate::metrics::{self, CircumDisk, MetricsReport};
use crate::theorems::{self, PythBranch, PythVerdict};

pub const SCHEMA: &str = "bulge-report/1";

/// `f64` serialized as a 17-significant-digit JSON number (`null` if not finite).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(sig17(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

fn pt(p: Point2) -> [Num; 2] {
    [Num(p.x), Num(p.y)]
}

#[derive(Debug, Serialize)]
struct InputEcho {
    kind: &'static str,
    values: Vec<Num>,
}

#[derive(Debug, Serialize)]
struct AnglesDeg {
    alpha: Num,
    beta: Num,
    gamma: Num,
}

#[derive(Debug, Serialize)]
struct Sides {
    a: Num,
    b: Num,
    c: Num,
}

#[derive(Debug, Serialize)]
struct TriangleDoc {
    a: [Num; 2],
    b: [Num; 2],
    c: [Num; 2],
    class: &'static str,
    distinguished_vertex: Option<&'static str>,
    angles_deg: AnglesDeg,
    sides: Sides,
    area: Num,
}

#[derive(Debug, Serialize)]
struct ArcDoc {
    center: [Num; 2],
    radius: Num,
    central_angle_deg: Num,
    start: [Num; 2],
    end: [Num; 2],
    bulge_outward: [Num; 2],
    host: &'static str,
    host_param: Num,
    length: Num,
}

#[derive(Debug, Serialize)]
struct ArcsDoc {
    ab: ArcDoc,
    bc: ArcDoc,
    ca: ArcDoc,
}

#[derive(Debug, Serialize)]
struct CircumDoc {
    center: [Num; 2],
    radius: Num,
    max_boundary_distance: Num,
    contains_boundary: bool,
}

impl From<&CircumDisk> for CircumDoc {
    fn from(d: &CircumDisk) -> Self {
        CircumDoc {
            center: pt(d.center),
            radius: Num(d.radius),
            max_boundary_distance: Num(d.max_boundary_distance),
            contains_boundary: d.contains_boundary(),
        }
    }
}

#[derive(Debug, Serialize)]
struct MetricsDoc {
    len_ab: Num,
    len_bc: Num,
    len_ca: Num,
    perimeter: Num,
    area: Option<Num>,
    convexity: &'static str,
    circumdisk: Option<CircumDoc>,
}

impl From<&MetricsReport> for MetricsDoc {
    fn from(m: &MetricsReport) -> Self {
        MetricsDoc {
            len_ab: Num(m.len_ab),
            len_bc: Num(m.len_bc),
            len_ca: Num(m.len_ca),
            perimeter: Num(m.perimeter),
            area: m.area.map(Num),
            convexity: m.convexity.name(),
            circumdisk: m.circumdisk.as_ref().map(CircumDoc::from),
        }
    }
}

#[derive(Debug, Serialize)]
struct TriangleInequalityDoc {
    holds: bool,
    margin: Num,
}

#[derive(Debug, Serialize)]
struct PythDoc {
    right_vertex: &'static str,
    a: Num,
    b: Num,
    t_deg: Num,
    theta0_deg: Num,
    gap: Num,
    gap_from_edges: Num,
    verdict: &'static str,
    branch: &'static str,
}

#[derive(Debug, Serialize)]
struct SemicircleDoc {
    leg_edges: Num,
    half_circumference: Num,
    hypotenuse_edge: Num,
}

#[derive(Debug, Serialize)]
struct TheoremsDoc {
    triangle_inequality: Option<TriangleInequalityDoc>,
    pyth: Option<PythDoc>,
    semicircle: Option<SemicircleDoc>,
    circumdisk_gap: Option<Num>,
}

#[derive(Debug, Serialize)]
pub struct ReportDocument {
    schema: &'static str,
    tool_version: &'static str,
    input: InputEcho,
    triangle: TriangleDoc,
    arcs: ArcsDoc,
    metrics: MetricsDoc,
    theorems: TheoremsDoc,
    seed: Option<u64>,
}

fn arc_doc(bt: &BulgingTriangle, e: Edge) -> ArcDoc {
    let arc: &ArcEdge = bt.arc(e);
    let center = bt.center(e);
    ArcDoc {
        center: pt(arc.center),
        radius: Num(arc.radius),
        central_angle_deg: Num(arc.central_angle.to_degrees()),
        start: pt(arc.start),
        end: pt(arc.end),
        bulge_outward: pt(arc.bulge_outward),
        host: match center.host_side {
            HostSide::Side(side) => side.name(),
            HostSide::ThirdVertex => "third_vertex",
        },
        host_param: Num(center.param),
        length: Num(metrics::edge_length(arc)),
    }
}

pub(crate) fn verdict_name(v: PythVerdict) -> &'static str {
    match v {
        PythVerdict::SumDominates => "sum_dominates",
        PythVerdict::Equal => "equal",
        PythVerdict::HypotenuseDominates => "hypotenuse_dominates",
    }
}

fn pyth_doc(bt: &BulgingTriangle) -> Option<PythDoc> {
    let view = theorems::right_view(bt).ok()?;
    let r = theorems::pyth_gap(view.a, view.b).ok()?;
    let branch = theorems::pyth_classify(view.a, view.b).ok()?;
    Some(PythDoc {
        right_vertex: view.right.name(),
        a: Num(r.a),
        b: Num(r.b),
        t_deg: Num(r.t.to_degrees()),
        theta0_deg: Num(r.theta0.to_degrees()),
        gap: Num(r.gap),
        gap_from_edges: Num(r.gap_from_edges),
        verdict: verdict_name(r.verdict),
        branch: match branch {
            PythBranch::InLowerBranch => "lower",
            PythBranch::InUpperBranch => "upper",
        },
    })
}

impl ReportDocument {
    pub fn new(input: &TriangleInput, bt: &BulgingTriangle, seed: Option<u64>) -> Self {
        let t = bt.triangle();
        let angles = t.interior_angles();
        let sides = t.side_lengths();
        let class = bt.class();
        let m = metrics::measure(bt);
        let ti = theorems::check_triangle_inequality(bt).ok();
        let semicircle = theorems::semicircle_identity(bt).ok();
        ReportDocument {
            schema: SCHEMA,
            tool_version: VERSION,
            input: InputEcho {
                kind: input.kind(),
                values: input.values().into_iter().map(Num).collect(),
            },
            triangle: TriangleDoc {
                a: pt(t.a()),
                b: pt(t.b()),
                c: pt(t.c()),
                class: match class {
                    crate::geom::TriangleClass::Acute => "acute",
                    crate::geom::TriangleClass::Right(_) => "right",
                    crate::geom::TriangleClass::Obtuse(_) => "obtuse",
                },
                distinguished_vertex: match class {
                    crate::geom::TriangleClass::Acute => None,
                    crate::geom::TriangleClass::Right(v) | crate::geom::TriangleClass::Obtuse(v) => {
                        Some(v.name())
                    }
                },
                angles_deg: AnglesDeg {
                    alpha: Num(angles.alpha.to_degrees()),
                    beta: Num(angles.beta.to_degrees()),
                    gamma: Num(angles.gamma.to_degrees()),
                },
                sides: Sides {
                    a: Num(sides.a),
                    b: Num(sides.b),
                    c: Num(sides.c),
                },
                area: Num(t.area()),
            },
            arcs: ArcsDoc {
                ab: arc_doc(bt, Edge::AB),
                bc: arc_doc(bt, Edge::BC),
                ca: arc_doc(bt, Edge::CA),
            },
            metrics: MetricsDoc::from(&m),
            theorems: TheoremsDoc {
                triangle_inequality: ti.map(|ti| TriangleInequalityDoc {
                    holds: ti.holds,
                    margin: Num(ti.margin),
                }),
                pyth: pyth_doc(bt),
                semicircle: semicircle.map(|s| SemicircleDoc {
                    leg_edges: Num(s.leg_edges),
                    half_circumference: Num(s.half_circumference),
                    hypotenuse_edge: Num(s.hypotenuse_edge),
                }),
                circumdisk_gap: m.circumdisk.map(|d| Num(d.gap())),
            },
            seed,
        }
    }

    pub fn write(&self, out: &mut dyn Write) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut *out, self)?;
        writeln!(out)
    }
}

pub fn write_metrics(out: &mut dyn Write, m: &MetricsReport) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, &MetricsDoc::from(m))?;
    writeln!(out)
}
