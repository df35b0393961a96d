//! SVG 1.1 figures of bulging triangles.
//!
//! The outline is a single closed path with one elliptical-arc command per
//! round side. Output is byte-deterministic: every number goes through
//! [`crate::format::sig`] with nine significant digits.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::construct::{ArcEdge, BulgingTriangle};
use crate::format::sig;
use crate::geom::{Bounds, Edge, Point2, Vertex};
use crate::metrics;

const DIGITS: usize = 9;

/// Optional layers drawn on top of the outline, in this order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Overlay {
    BaseTriangle,
    Centers,
    PerpBisectors,
    /// Disk around the hypotenuse midpoint for right-angled inputs. For other
    /// inputs an exploratory circle around the base circumcenter that just
    /// contains the boundary.
    Circumcircle,
    Labels,
}

impl Overlay {
    pub fn name(self) -> &'static str {
        match self {
            Overlay::BaseTriangle => "base-triangle",
            Overlay::Centers => "centers",
            Overlay::PerpBisectors => "perp-bisectors",
            Overlay::Circumcircle => "circumcircle",
            Overlay::Labels => "labels",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub width_px: u32,
    pub height_px: u32,
    /// Fraction of the smaller viewport side kept free on every edge, in `[0, 0.4)`.
    pub margin_frac: f64,
    pub overlays: BTreeSet<Overlay>,
    pub stroke: String,
    pub fill: String,
    pub stroke_width: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width_px: 480,
            height_px: 480,
            margin_frac: 0.05,
            overlays: BTreeSet::new(),
            stroke: "#1f3a93".to_string(),
            fill: "#dfe8f7".to_string(),
            stroke_width: 2.0,
        }
    }
}

/// World-to-viewport map: uniform scale, centered, y flipped.
#[derive(Debug, Clone, Copy)]
struct Viewport {
    scale: f64,
    origin: Point2,
    world_min: Point2,
    world_max_y: f64,
}

impl Viewport {
    fn fit(world: Bounds, opts: &RenderOptions) -> Self {
        let (w, h) = (opts.width_px as f64, opts.height_px as f64);
        let margin = opts.margin_frac.clamp(0.0, 0.4) * w.min(h);
        let (avail_w, avail_h) = (w - 2.0 * margin, h - 2.0 * margin);
        let scale = (avail_w / world.width()).min(avail_h / world.height());
        let origin = Point2::new(
            margin + 0.5 * (avail_w - scale * world.width()),
            margin + 0.5 * (avail_h - scale * world.height()),
        );
        Viewport {
            scale,
            origin,
            world_min: world.min,
            world_max_y: world.max.y,
        }
    }

    fn map(&self, p: Point2) -> Point2 {
        Point2::new(
            self.origin.x + self.scale * (p.x - self.world_min.x),
            self.origin.y + self.scale * (self.world_max_y - p.y),
        )
    }

    /// Directions flip their y component.
    fn map_dir(&self, d: Point2) -> Point2 {
        Point2::new(d.x, -d.y)
    }
}

fn num(v: f64) -> String {
    sig(v, DIGITS)
}

fn pt(p: Point2) -> String {
    format!("{} {}", num(p.x), num(p.y))
}

/// SVG sweep flag for `arc` once mapped through `vp`.
///
/// In viewport coordinates flag `1` is the positive-angle direction, which
/// puts the center to the left of the chord and the bulge to its right.
fn sweep_flag(arc: &ArcEdge, vp: &Viewport) -> u8 {
    let chord = vp.map(arc.end) - vp.map(arc.start);
    let bulge = vp.map_dir(arc.bulge_outward);
    if chord.cross(bulge) < 0.0 {
        1
    } else {
        0
    }
}

fn outline_path(bt: &BulgingTriangle, vp: &Viewport) -> String {
    let mut d = format!("M {}", pt(vp.map(bt.arc_ab().start)));
    for arc in bt.arcs() {
        let r = num(arc.radius * vp.scale);
        // Every central angle is below pi, so the large-arc flag is always 0.
        let _ = write!(
            d,
            " A {r} {r} 0 0 {} {}",
            sweep_flag(arc, vp),
            pt(vp.map(arc.end))
        );
    }
    d.push_str(" Z");
    d
}

/// Center and radius of the overlay circle.
pub fn overlay_circle(bt: &BulgingTriangle) -> (Point2, f64, bool) {
    match metrics::circumdisk_gap(bt) {
        Ok(disk) => (disk.center, disk.radius, true),
        Err(_) => {
            let center = bt.triangle().circumcenter();
            (center, metrics::max_distance_from(bt, center), false)
        }
    }
}

fn label_anchor(bt: &BulgingTriangle, v: Vertex) -> Point2 {
    let t = bt.triangle();
    let p = t.vertex(v);
    let away = p - t.centroid();
    p + away.normalized() * (0.06 * t.longest_side())
}

fn world_bounds(bt: &BulgingTriangle, opts: &RenderOptions) -> Bounds {
    let mut b = bt.bounds();
    for e in Edge::ALL {
        b.include(bt.center(e).point);
    }
    if opts.overlays.contains(&Overlay::Circumcircle) {
        let (c, r, _) = overlay_circle(bt);
        b.include(c - Point2::new(r, r));
        b.include(c + Point2::new(r, r));
    }
    if opts.overlays.contains(&Overlay::Labels) {
        for v in Vertex::ALL {
            b.include(label_anchor(bt, v));
        }
    }
    b
}

/// Render `bt` as a standalone SVG 1.1 document.
pub fn to_svg(bt: &BulgingTriangle, opts: &RenderOptions) -> String {
    let vp = Viewport::fit(world_bounds(bt, opts), opts);
    let sw = num(opts.stroke_width);
    let thin = num(0.5 * opts.stroke_width);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = opts.width_px,
        h = opts.height_px
    );
    let _ = writeln!(
        out,
        "  <path id=\"bulging-triangle\" class=\"{}\" d=\"{}\" fill=\"{}\" stroke=\"{}\" stroke-width=\"{sw}\"/>",
        bt.convexity().name(),
        outline_path(bt, &vp),
        opts.fill,
        opts.stroke
    );

    for overlay in &opts.overlays {
        let _ = writeln!(out, "  <g id=\"{}\">", overlay.name());
        match overlay {
            Overlay::BaseTriangle => {
                let pts: Vec<String> = bt
                    .triangle()
                    .vertices()
                    .iter()
                    .map(|&p| {
                        let q = vp.map(p);
                        format!("{},{}", num(q.x), num(q.y))
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "    <polygon points=\"{}\" fill=\"none\" stroke=\"#555555\" stroke-width=\"{thin}\"/>",
                    pts.join(" ")
                );
            }
            Overlay::Centers => {
                for e in Edge::ALL {
                    let q = vp.map(bt.center(e).point);
                    let _ = writeln!(
                        out,
                        "    <circle class=\"center-{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#c0392b\"/>",
                        e.name(),
                        num(q.x),
                        num(q.y),
                        num(1.5 * opts.stroke_width)
                    );
                }
            }
            Overlay::PerpBisectors => {
                for e in Edge::ALL {
                    let arc = bt.arc(e);
                    let from = vp.map(arc.start.midpoint(arc.end));
                    let to = vp.map(arc.center);
                    let _ = writeln!(
                        out,
                        "    <line class=\"bisector-{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#7f8c8d\" stroke-width=\"{thin}\" stroke-dasharray=\"4 3\"/>",
                        e.name(),
                        num(from.x),
                        num(from.y),
                        num(to.x),
                        num(to.y)
                    );
                }
            }
            Overlay::Circumcircle => {
                let (c, r, proven) = overlay_circle(bt);
                let q = vp.map(c);
                let _ = writeln!(
                    out,
                    "    <circle class=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#27ae60\" stroke-width=\"{thin}\"/>",
                    if proven { "hypotenuse-midpoint" } else { "exploratory" },
                    num(q.x),
                    num(q.y),
                    num(r * vp.scale)
                );
            }
            Overlay::Labels => {
                for v in Vertex::ALL {
                    let q = vp.map(label_anchor(bt, v));
                    let _ = writeln!(
                        out,
                        "    <text x=\"{}\" y=\"{}\" font-family=\"serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>",
                        num(q.x),
                        num(q.y),
                        v.name()
                    );
                }
            }
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    out
}
