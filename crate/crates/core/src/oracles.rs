//! Brute-force checks for the closed forms.
//!
//! None of these routines use the closed-form length or area formulas; they
//! only need the arcs' geometry. The Monte Carlo estimator draws every sample
//! from a ChaCha stream positioned by `(seed, index)`, so the result does not
//! depend on how the work is split across threads.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::construct::{ArcEdge, BulgingTriangle};
use crate::error::{Error, Result};
use crate::geom::Point2;

/// Samples handled per parallel task.
const CHUNK: u64 = 1 << 14;
/// Each sample consumes two `u64` draws, i.e. four 32-bit ChaCha words.
const WORDS_PER_SAMPLE: u128 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleConfig {
    pub n: u64,
    pub seed: u64,
}

impl SampleConfig {
    pub fn new(n: u64, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSampling("sample count must be at least 1"));
        }
        Ok(Self { n, seed })
    }
}

/// Sum of chord lengths over `n` equal-angle pieces of `arc`.
pub fn polyline_length(arc: &ArcEdge, n: usize) -> f64 {
    let n = n.max(1);
    let mut prev = arc.start;
    let mut total = 0.0;
    for k in 1..=n {
        let q = arc.point_at(k as f64 / n as f64);
        total += prev.distance(q);
        prev = q;
    }
    total
}

/// Whether `p` is inside the circular segment between `arc` and its chord.
fn in_segment(arc: &ArcEdge, p: Point2) -> bool {
    let d = p - arc.center;
    d.dot(d) <= arc.radius * arc.radius && (p - arc.start).dot(arc.bulge_outward) > 0.0
}

/// Membership via the decomposition into the base triangle and three segments.
pub fn point_in_bulging(bt: &BulgingTriangle, p: Point2) -> Result<bool> {
    if !bt.is_convex() {
        return Err(Error::ConcaveUnsupported);
    }
    Ok(contains_unchecked(bt, p))
}

fn contains_unchecked(bt: &BulgingTriangle, p: Point2) -> bool {
    bt.triangle().contains(p) || bt.arcs().iter().any(|arc| in_segment(arc, p))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub hits: u64,
    pub n: u64,
}

impl AreaEstimate {
    /// `|value - estimate|` in units of the standard error.
    pub fn z_score(&self, value: f64) -> f64 {
        (value - self.estimate).abs() / self.std_error
    }
}

fn chunk_hits(bt: &BulgingTriangle, cfg: SampleConfig, first: u64, count: u64) -> u64 {
    let bounds = bt.bounds();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_word_pos(first as u128 * WORDS_PER_SAMPLE);
    let mut hits = 0;
    for _ in 0..count {
        let u: f64 = rng.gen();
        let v: f64 = rng.gen();
        let p = Point2::new(
            bounds.min.x + u * bounds.width(),
            bounds.min.y + v * bounds.height(),
        );
        if contains_unchecked(bt, p) {
            hits += 1;
        }
    }
    hits
}

/// Rejection-sampling area estimate over the exact bounding box.
pub fn monte_carlo_area(bt: &BulgingTriangle, cfg: SampleConfig) -> Result<AreaEstimate> {
    if !bt.is_convex() {
        return Err(Error::ConcaveUnsupported);
    }
    if cfg.n == 0 {
        return Err(Error::InvalidSampling("sample count must be at least 1"));
    }
    let chunks = cfg.n.div_ceil(CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|i| {
            let first = i * CHUNK;
            chunk_hits(bt, cfg, first, CHUNK.min(cfg.n - first))
        })
        .sum();
    let box_area = bt.bounds().area();
    let frac = hits as f64 / cfg.n as f64;
    Ok(AreaEstimate {
        estimate: box_area * frac,
        std_error: box_area * (frac * (1.0 - frac) / cfg.n as f64).sqrt(),
        hits,
        n: cfg.n,
    })
}

/// Boundary points in counter-clockwise order, `n_per_arc` equal-angle steps
/// per arc, starting at vertex `A`. Shared vertices appear once.
pub fn boundary_samples(bt: &BulgingTriangle, n_per_arc: usize) -> Vec<Point2> {
    let n = n_per_arc.max(2);
    let mut pts = Vec::with_capacity(3 * n);
    for arc in bt.arcs() {
        pts.extend((0..n).map(|k| arc.point_at(k as f64 / n as f64)));
    }
    pts
}
