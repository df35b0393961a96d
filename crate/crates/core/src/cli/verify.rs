//! `bulge verify`: check every claim on one instance or on a seeded random batch.

use std::f64::consts::PI;
use std::io::{self, Write};

use clap::ValueEnum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::VERSION;
use crate::construct::{build, BulgingTriangle, Convexity};
use crate::format::sig17;
use crate::geom::Edge;
use crate::metrics;
use crate::oracles::{self, SampleConfig};
use crate::sample::{self, Kind};
use crate::theorems::{self, PythVerdict, EQUAL_BAND};

pub const CONVEXITY_SAMPLES: usize = 64;
pub const POLYLINE_SAMPLES: usize = 1024;
pub const SEMICIRCLE_TOL: f64 = 1e-9;
pub const MC_SIGMAS: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Acute,
    Right,
    All,
}

impl VerifyKind {
    fn sample_kind(self) -> Kind {
        match self {
            VerifyKind::Acute => Kind::Acute,
            VerifyKind::Right => Kind::Right,
            VerifyKind::All => Kind::AcuteOrRight,
        }
    }

    fn name(self) -> &'static str {
        match self {
            VerifyKind::Acute => "acute",
            VerifyKind::Right => "right",
            VerifyKind::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Claim {
    Construction,
    Convexity,
    TriangleInequality,
    EdgeOrdering,
    Isosceles,
    AreaExceedsBase,
    Polyline,
    Semicircle,
    Circumdisk,
    Pythagorean,
    MonteCarlo,
}

impl Claim {
    const ALL: [Claim; 11] = [
        Claim::Construction,
        Claim::Convexity,
        Claim::TriangleInequality,
        Claim::EdgeOrdering,
        Claim::Isosceles,
        Claim::AreaExceedsBase,
        Claim::Polyline,
        Claim::Semicircle,
        Claim::Circumdisk,
        Claim::Pythagorean,
        Claim::MonteCarlo,
    ];

    fn name(self) -> &'static str {
        match self {
            Claim::Construction => "construction",
            Claim::Convexity => "convexity",
            Claim::TriangleInequality => "triangle_inequality",
            Claim::EdgeOrdering => "edge_ordering",
            Claim::Isosceles => "isosceles",
            Claim::AreaExceedsBase => "area_exceeds_base",
            Claim::Polyline => "polyline_length",
            Claim::Semicircle => "semicircle",
            Claim::Circumdisk => "circumdisk",
            Claim::Pythagorean => "pythagorean_gap",
            Claim::MonteCarlo => "monte_carlo_area",
        }
    }

    fn index(self) -> usize {
        Claim::ALL.iter().position(|&c| c == self).unwrap()
    }
}

/// Outcome of every applicable claim on one instance.
#[derive(Debug, Default)]
struct InstanceResult {
    checked: [bool; 11],
    failures: Vec<(Claim, String)>,
}

impl InstanceResult {
    fn record(&mut self, claim: Claim, ok: bool, detail: impl FnOnce() -> String) {
        self.checked[claim.index()] = true;
        if !ok {
            self.failures.push((claim, detail()));
        }
    }
}

fn check_instance(bt: &BulgingTriangle, mc: Option<SampleConfig>) -> InstanceResult {
    let mut r = InstanceResult::default();
    let t = bt.triangle();
    let scale = t.longest_side();
    let angles = t.interior_angles();

    let construction_ok = Edge::ALL.iter().all(|&e| {
        let arc = bt.arc(e);
        let (x, y) = e.endpoints();
        let m = angles.at(x).min(angles.at(y));
        (arc.center.distance(arc.start) - arc.radius).abs() <= 1e-9 * scale
            && (arc.center.distance(arc.end) - arc.radius).abs() <= 1e-9 * scale
            && (arc.central_angle - (PI - 2.0 * m)).abs() <= 1e-9
    });
    r.record(Claim::Construction, construction_ok, || "arc endpoints or central angle off".into());

    let conv = metrics::convexity_check(bt, CONVEXITY_SAMPLES);
    r.record(
        Claim::Convexity,
        matches!(conv, Ok(Convexity::Convex)) && bt.is_convex(),
        || format!("sampling check gave {conv:?}"),
    );

    if let Ok(ti) = theorems::check_triangle_inequality(bt) {
        r.record(Claim::TriangleInequality, ti.holds, || {
            format!("margin {}", sig17(ti.margin))
        });
    }

    if let Ok(ord) = theorems::edge_ordering_check(bt) {
        r.record(Claim::EdgeOrdering, ord.consistent(), || "ordering case violated".into());
    }

    if let Ok(checks) = theorems::isoceles_edge_equality(bt) {
        if !checks.is_empty() {
            let worst = checks.iter().map(|c| c.delta).fold(0.0, f64::max);
            r.record(Claim::Isosceles, checks.iter().all(|c| c.equal), || {
                format!("edge difference {}", sig17(worst))
            });
        }
    }

    let lengths = metrics::edge_lengths(bt);
    if let Ok(area) = metrics::area(bt) {
        r.record(Claim::AreaExceedsBase, area > t.area(), || {
            format!("area {} vs base {}", sig17(area), sig17(t.area()))
        });
    }

    let n = POLYLINE_SAMPLES as f64;
    let poly_ok = Edge::ALL.iter().all(|&e| {
        let arc = bt.arc(e);
        let l = lengths.of(e);
        (l - oracles::polyline_length(arc, POLYLINE_SAMPLES)).abs() <= 2.0 * l / (n * n)
    });
    r.record(Claim::Polyline, poly_ok, || "closed form and polyline disagree".into());

    if let Ok(s) = theorems::semicircle_identity(bt) {
        r.record(
            Claim::Semicircle,
            s.relative_error() <= SEMICIRCLE_TOL && s.hypotenuse_edge < s.leg_edges,
            || {
                format!(
                    "legs {} half circumference {} hypotenuse {}",
                    sig17(s.leg_edges),
                    sig17(s.half_circumference),
                    sig17(s.hypotenuse_edge)
                )
            },
        );
    }

    if let Ok(d) = metrics::circumdisk_gap(bt) {
        r.record(Claim::Circumdisk, d.contains_boundary(), || {
            format!("boundary reaches {} beyond radius {}", sig17(d.max_boundary_distance), sig17(d.radius))
        });
    }

    if let Ok(view) = theorems::right_view(bt) {
        let scale2 = view.a * view.a + view.b * view.b;
        match theorems::pyth_gap(view.a, view.b) {
            Ok(p) => {
                let equal_legs = (p.a - p.b).abs() <= 1e-12 * p.b;
                let ok = p.gap <= EQUAL_BAND * scale2
                    && p.t >= p.theta0 * (1.0 - 1e-12)
                    && (equal_legs || p.verdict == PythVerdict::HypotenuseDominates);
                r.record(Claim::Pythagorean, ok, || {
                    format!("gap {} t {} theta0 {}", sig17(p.gap), sig17(p.t), sig17(p.theta0))
                });
            }
            Err(e) => r.record(Claim::Pythagorean, false, || e.to_string()),
        }
    }

    if let Some(cfg) = mc {
        if let (Ok(est), Ok(area)) = (oracles::monte_carlo_area(bt, cfg), metrics::area(bt)) {
            r.record(Claim::MonteCarlo, est.z_score(area) <= MC_SIGMAS, || {
                format!("estimate {} vs {} (z = {})", sig17(est.estimate), sig17(area), sig17(est.z_score(area)))
            });
        }
    }
    r
}

#[derive(Debug, Clone, Serialize)]
struct ClaimSummary {
    claim: &'static str,
    checked: u64,
    violations: u64,
    first_violation: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifySummary {
    schema: &'static str,
    tool_version: &'static str,
    mode: &'static str,
    kind: Option<&'static str>,
    instances: u64,
    seed: u64,
    mc_samples: u64,
    claims: Vec<ClaimSummary>,
}

fn describe(index: Option<u64>, bt: &BulgingTriangle) -> String {
    let t = bt.triangle();
    let vs: Vec<String> = t
        .vertices()
        .iter()
        .flat_map(|p| [sig17(p.x), sig17(p.y)])
        .collect();
    match index {
        Some(i) => format!("instance {i} --vertices {}", vs.join(" ")),
        None => format!("--vertices {}", vs.join(" ")),
    }
}

impl VerifySummary {
    fn new(mode: &'static str, kind: Option<VerifyKind>, seed: u64, mc_samples: u64) -> Self {
        VerifySummary {
            schema: "bulge-verify/1",
            tool_version: VERSION,
            mode,
            kind: kind.map(VerifyKind::name),
            instances: 0,
            seed,
            mc_samples,
            claims: Claim::ALL
                .iter()
                .map(|c| ClaimSummary {
                    claim: c.name(),
                    checked: 0,
                    violations: 0,
                    first_violation: None,
                })
                .collect(),
        }
    }

    fn absorb(&mut self, index: Option<u64>, bt: &BulgingTriangle, r: InstanceResult) {
        self.instances += 1;
        for c in Claim::ALL {
            if r.checked[c.index()] {
                self.claims[c.index()].checked += 1;
            }
        }
        for (c, detail) in r.failures {
            let s = &mut self.claims[c.index()];
            s.violations += 1;
            if s.first_violation.is_none() {
                s.first_violation = Some(format!("{}: {detail}", describe(index, bt)));
            }
        }
    }

    pub fn total_violations(&self) -> u64 {
        self.claims.iter().map(|c| c.violations).sum()
    }

    /// First violated claim, as `claim: instance: detail`.
    pub fn first_violation(&self) -> Option<String> {
        self.claims.iter().find_map(|c| {
            c.first_violation
                .as_ref()
                .map(|v| format!("{}: {v}", c.claim))
        })
    }

    pub fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "instances {}  seed {}", self.instances, self.seed)?;
        for c in &self.claims {
            if c.checked == 0 {
                continue;
            }
            let status = if c.violations == 0 { "ok" } else { "VIOLATED" };
            writeln!(
                out,
                "{:<20} {:>8} checked {:>6} violations  {status}",
                c.claim, c.checked, c.violations
            )?;
        }
        Ok(())
    }

    pub fn write_json(&self, out: &mut dyn Write) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut *out, self)?;
        writeln!(out)
    }
}

fn mc_config(mc_samples: u64, seed: u64) -> Option<SampleConfig> {
    SampleConfig::new(mc_samples, seed).ok()
}

pub fn verify_single(bt: &BulgingTriangle, mc_samples: u64, seed: u64) -> VerifySummary {
    let mut summary = VerifySummary::new("single", None, seed, mc_samples);
    let r = check_instance(bt, mc_config(mc_samples, seed));
    summary.absorb(None, bt, r);
    summary
}

/// Instance `i` draws from its own ChaCha stream, so results do not depend on
/// the thread count.
fn instance(seed: u64, i: u64, kind: Kind) -> BulgingTriangle {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    let base = sample::random_triangle(&mut rng, kind);
    build(&base)
}

pub fn verify_random(n: usize, seed: u64, kind: VerifyKind, mc_samples: u64) -> VerifySummary {
    let mut summary = VerifySummary::new("random", Some(kind), seed, mc_samples);
    let results: Vec<(BulgingTriangle, InstanceResult)> = (0..n as u64)
        .into_par_iter()
        .map(|i| {
            let bt = instance(seed, i, kind.sample_kind());
            let mc = mc_config(mc_samples, seed.wrapping_add(i));
            let r = check_instance(&bt, mc);
            (bt, r)
        })
        .collect();
    for (i, (bt, r)) in results.into_iter().enumerate() {
        summary.absorb(Some(i as u64), &bt, r);
    }
    summary
}
