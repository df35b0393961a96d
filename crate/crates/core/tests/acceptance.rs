//! Acceptance suite. Runs every criterion in order, prints one PASS/FAIL line
//! per criterion with its runtime, then fails if any criterion failed.

use std::f64::consts::{FRAC_PI_3, PI};
use std::process::Command;
use std::time::{Duration, Instant};

use bulge::metrics::{self, edge_lengths};
use bulge::oracles::{self, SampleConfig};
use bulge::sample::{self, Kind};
use bulge::theorems::{self, EQUAL_BAND, PATH_TOL};
use bulge::{build, BulgingTriangle, Convexity, Edge, Point2};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(x: f64, y: f64, tol: f64, what: &str) -> Result<(), String> {
    ensure((x - y).abs() <= tol, || format!("{what}: {x:.17e} vs {y:.17e} (tol {tol:e})"))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pts(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> BulgingTriangle {
    BulgingTriangle::from_points(Point2::new(a.0, a.1), Point2::new(b.0, b.1), Point2::new(c.0, c.1))
        .unwrap()
}

/// Right angle at `C`: `A(a, b)`, `B(0, 0)`, `C(a, 0)`.
fn right_legs(a: f64, b: f64) -> BulgingTriangle {
    pts((a, b), (0.0, 0.0), (a, 0.0))
}

fn reuleaux_regression() -> Outcome {
    let bt = pts((0.5, 3f64.sqrt() / 2.0), (0.0, 0.0), (1.0, 0.0));
    let m = metrics::measure(&bt);
    for (len, e) in [(m.len_ab, "AB"), (m.len_bc, "BC"), (m.len_ca, "CA")] {
        within(len, FRAC_PI_3, 1e-12, e)?;
    }
    within(m.perimeter, PI, 1e-12, "perimeter")?;
    let area = m.area.ok_or("area missing")?;
    within(area, (PI - 3f64.sqrt()) / 2.0, 1e-12, "area")?;
    let ratio = area / bt.triangle().area();
    within(ratio, 1.628, 1e-3, "area ratio")?;
    Ok(format!("area {area:.15}, ratio {ratio:.7}"))
}

fn edge_ratio() -> Outcome {
    let iso = edge_lengths(&right_legs(1.0, 1.0));
    within(iso.ab / iso.bc, 2f64.sqrt(), 1e-12, "AB/BC")?;
    within(iso.ab / iso.ca, 2f64.sqrt(), 1e-12, "AB/CA")?;

    let s3 = 3f64.sqrt();
    let l = edge_lengths(&right_legs(1.0, s3));
    within(l.ab, 4.0 * s3 * PI / 9.0, 1e-12, "30-60-90 AB")?;
    within(l.bc, PI / 3.0, 1e-12, "30-60-90 BC")?;
    within(l.ca, 2.0 * PI / 3.0, 1e-12, "30-60-90 CA")?;
    let unit = l.ab / 4.0;
    within(l.bc / unit, s3, 1e-12, "ratio BC")?;
    within(l.ca / unit, 2.0 * s3, 1e-12, "ratio CA")?;
    Ok("sqrt2:1:1 and 4:sqrt3:2sqrt3".into())
}

fn triangle_inequality() -> Outcome {
    let mut r = rng(1);
    let mut worst = f64::INFINITY;
    for i in 0..10_000 {
        let bt = build(&sample::random_triangle(&mut r, Kind::AcuteOrRight));
        let ti = theorems::check_triangle_inequality(&bt).map_err(|e| e.to_string())?;
        let rel = ti.margin / edge_lengths(&bt).perimeter();
        ensure(ti.holds && ti.margin > 0.0, || format!("instance {i}: margin {}", ti.margin))?;
        worst = worst.min(rel);
    }
    Ok(format!("10000 instances, smallest margin/perimeter {worst:.3e}"))
}

fn pythagorean_gap() -> Outcome {
    let (ab, bc, ca) = theorems::right_edge_lengths(1.0, 1.0).map_err(|e| e.to_string())?;
    let quarter = PI * PI / 4.0;
    within(ab * ab, quarter, 1e-12, "|AB~|^2")?;
    within(bc * bc + ca * ca, quarter, 1e-12, "|BC~|^2 + |CA~|^2")?;
    let g = theorems::pyth_gap(1.0, 1.0).map_err(|e| e.to_string())?;
    within(g.gap, 0.0, 1e-12, "gap(1,1)")?;

    let s3 = 3f64.sqrt();
    let g = theorems::pyth_gap(1.0, s3).map_err(|e| e.to_string())?;
    within(g.gap, -PI * PI / 27.0, 1e-9, "gap(1,sqrt3)")?;
    within(g.gap, 4.0 * theorems::gap_parabola(1.0, s3, FRAC_PI_3), 1e-12, "4 F(pi/3)")?;

    let mut r = rng(2);
    let mut worst_path = 0.0f64;
    for i in 0..10_000 {
        let (a, b) = sample::random_legs(&mut r);
        let p = theorems::pyth_gap(a, b).map_err(|e| format!("pair {i} ({a}, {b}): {e}"))?;
        let rel = (p.gap - p.gap_from_edges).abs() / (a * a + b * b);
        ensure(rel <= PATH_TOL, || format!("pair {i}: paths differ by {rel:e}"))?;
        worst_path = worst_path.max(rel);
    }

    let steps = 10_000;
    for k in 0..steps {
        let ratio = 1.0 + 99.0 * k as f64 / (steps - 1) as f64;
        let p = theorems::pyth_gap(1.0, ratio).map_err(|e| e.to_string())?;
        let f0 = theorems::gap_parabola(1.0, ratio, p.theta0);
        within(f0, 0.0, 1e-12 * PI * PI, "F(theta0)")?;
        ensure(p.t >= p.theta0, || format!("b/a = {ratio}: t {} < theta0 {}", p.t, p.theta0))?;
        let scale = 1.0 + ratio * ratio;
        if k == 0 {
            ensure(p.gap.abs() <= EQUAL_BAND * scale, || format!("gap at b/a = 1 is {}", p.gap))?;
        } else {
            ensure(p.gap < 0.0, || format!("b/a = {ratio}: gap {} not negative", p.gap))?;
        }
    }
    Ok(format!("worst two-path difference {worst_path:.2e} (relative)"))
}

fn semicircle() -> Outcome {
    let mut r = rng(3);
    let mut worst = 0.0f64;
    for i in 0..1000 {
        let bt = build(&sample::random_triangle(&mut r, Kind::Right));
        let s = theorems::semicircle_identity(&bt).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(s.relative_error() <= 1e-9, || {
            format!("instance {i}: relative error {:e}", s.relative_error())
        })?;
        ensure(s.hypotenuse_edge < s.leg_edges, || {
            format!("instance {i}: hypotenuse edge {} >= {}", s.hypotenuse_edge, s.leg_edges)
        })?;
        worst = worst.max(s.relative_error());
    }
    Ok(format!("1000 instances, worst relative error {worst:.2e}"))
}

fn circumdisk() -> Outcome {
    let mut r = rng(4);
    for i in 0..1000 {
        let bt = build(&sample::random_triangle(&mut r, Kind::Right));
        let d = metrics::circumdisk_gap(&bt).map_err(|e| format!("instance {i}: {e}"))?;
        let c = 2.0 * d.radius;
        ensure(d.max_boundary_distance <= d.radius + 1e-9 * c, || {
            format!("instance {i}: max distance {} > {}", d.max_boundary_distance, d.radius)
        })?;
        let hyp = bt.class().right_vertex().unwrap().opposite_edge();
        for e in Edge::ALL.into_iter().filter(|&e| e != hyp) {
            for k in 0..=32 {
                let q = bt.arc(e).point_at(k as f64 / 32.0);
                within(q.distance(d.center), d.radius, 1e-9 * c, "leg arc sample")?;
            }
        }
    }

    let bt = right_legs(1.0, 2.0);
    let p = bt.arc(Edge::AB).center;
    let a = bt.triangle().a();
    within(a.distance(p), 1.25, 1e-12, "|AP|")?;
    let d = metrics::circumdisk_gap(&bt).map_err(|e| e.to_string())?;
    let x = d.center + (d.center - p).normalized() * d.radius;
    within(x.distance(p), 3.0 * 5f64.sqrt() / 4.0, 1e-12, "|XP|")?;
    Ok("1000 instances, |AP| = 5/4, |XP| = 3 sqrt5 / 4".into())
}

fn oracle_agreement() -> Outcome {
    let mut r = rng(5);
    let n = 1024usize;
    let mut worst_z = 0.0f64;
    for i in 0..100u64 {
        let bt = build(&sample::random_triangle(&mut r, Kind::AcuteOrRight));
        let lengths = edge_lengths(&bt);
        for e in Edge::ALL {
            let l = lengths.of(e);
            let poly = oracles::polyline_length(bt.arc(e), n);
            ensure((l - poly).abs() <= 2.0 * l / (n * n) as f64, || {
                format!("instance {i} edge {}: {l} vs polyline {poly}", e.name())
            })?;
        }
        let cfg = SampleConfig::new(1_000_000, 1000 + i).map_err(|e| e.to_string())?;
        let est = oracles::monte_carlo_area(&bt, cfg).map_err(|e| e.to_string())?;
        let area = metrics::area(&bt).map_err(|e| e.to_string())?;
        let z = est.z_score(area);
        ensure(z <= 4.0, || format!("instance {i}: area {area} vs {} (z = {z:.2})", est.estimate))?;
        worst_z = worst_z.max(z);
    }
    Ok(format!("100 instances, largest |z| {worst_z:.2}"))
}

fn convexity() -> Outcome {
    let mut r = rng(6);
    for i in 0..1000 {
        let bt = build(&sample::random_triangle(&mut r, Kind::AcuteOrRight));
        let got = metrics::convexity_check(&bt, 64);
        ensure(got == Ok(Convexity::Convex) && bt.is_convex(), || {
            format!("acute/right instance {i}: {got:?}")
        })?;
    }
    for i in 0..1000 {
        let bt = build(&sample::random_triangle(&mut r, Kind::Obtuse));
        let got = metrics::convexity_check(&bt, 64);
        ensure(got == Ok(Convexity::Concave) && !bt.is_convex(), || {
            format!("obtuse instance {i}: {got:?}")
        })?;
    }
    Ok("1000 convex, 1000 concave at 64 samples per arc".into())
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_bulge"))
        .args(args)
        .env_remove("BULGE_SEED")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("{args:?} exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    Ok(out.stdout)
}

fn determinism() -> Outcome {
    let fixed: [&[&str]; 4] = [
        &["build", "--sides", "3", "4", "4.5", "--json", "-"],
        &["sweep", "--leg-a", "1", "--b-from", "1", "--b-to", "5", "--steps", "401", "--csv", "-"],
        &["render", "--right", "1", "2", "--overlay", "base,centers,bisectors,circumcircle,labels", "--out", "-"],
        &["verify", "--right", "2", "3", "--mc-samples", "200000", "--seed", "9", "--json", "-"],
    ];
    for args in fixed {
        ensure(run_cli(args)? == run_cli(args)?, || format!("{args:?} differs between runs"))?;
    }
    let verify = |threads: &str| {
        run_cli(&["verify", "--random", "10000", "--seed", "42", "--mc-samples", "0", "--threads", threads, "--json", "-"])
    };
    let one = verify("1")?;
    ensure(one == verify("1")?, || "verify differs between runs".into())?;
    ensure(one == verify("4")?, || "verify differs between 1 and 4 threads".into())?;
    Ok("build, sweep, render, verify byte-identical; 10000-instance verify clean".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("1 reuleaux regression", reuleaux_regression, Duration::from_millis(1)),
        ("2 edge ratios", edge_ratio, Duration::from_millis(1)),
        ("3 triangle inequality", triangle_inequality, Duration::from_secs(1)),
        ("4 pythagorean gap", pythagorean_gap, Duration::from_secs(2)),
        ("5 semicircle identity", semicircle, Duration::from_millis(100)),
        ("6 circumscribed disk", circumdisk, Duration::from_millis(500)),
        ("7 oracle agreement", oracle_agreement, Duration::from_secs(30)),
        ("8 convexity", convexity, Duration::from_secs(2)),
        ("9 determinism", determinism, Duration::from_secs(60)),
    ];
    let mut failed = Vec::new();
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if took <= budget {
                Ok(msg)
            } else {
                Err(format!("{msg}; took {took:?}, budget {budget:?}"))
            }
        });
        match outcome {
            Ok(msg) => println!("PASS  {name:<24} {:>10.3?}  {msg}", took),
            Err(msg) => {
                println!("FAIL  {name:<24} {:>10.3?}  {msg}", took);
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
