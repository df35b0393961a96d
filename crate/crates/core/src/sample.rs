//! Seeded random triangles for property suites and `verify`.
//!
//! Angles are drawn with a margin of [`ANGLE_MARGIN`] radians from every
//! degenerate or class boundary, then the triangle is placed with a random
//! similarity transform (log-uniform scale in `[0.1, 10]`, any rotation,
//! translation in `[-10, 10]^2`).

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use rand::Rng;

use crate::geom::{Point2, Triangle, Vertex};

pub const ANGLE_MARGIN: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Acute,
    Right,
    Obtuse,
    /// Acute or right with equal probability.
    AcuteOrRight,
}

/// Interior angles `[alpha, beta, gamma]` of the requested kind.
pub fn random_angles<R: Rng + ?Sized>(rng: &mut R, kind: Kind) -> [f64; 3] {
    let d = ANGLE_MARGIN;
    match kind {
        Kind::Acute => loop {
            let alpha = rng.gen_range(d..FRAC_PI_2);
            let beta = rng.gen_range(d..FRAC_PI_2);
            let gamma = PI - alpha - beta;
            if (d..FRAC_PI_2 - 1e-6).contains(&gamma) {
                return [alpha, beta, gamma];
            }
        },
        Kind::Right => {
            let acute = rng.gen_range(d..FRAC_PI_2 - d);
            place(rng, FRAC_PI_2, acute, FRAC_PI_2 - acute)
        }
        Kind::Obtuse => {
            let big = rng.gen_range(FRAC_PI_2 + d..PI - 2.0 * d);
            let rest = PI - big;
            let x = rng.gen_range(d..rest - d);
            place(rng, big, x, rest - x)
        }
        Kind::AcuteOrRight => {
            if rng.gen_bool(0.5) {
                random_angles(rng, Kind::Acute)
            } else {
                random_angles(rng, Kind::Right)
            }
        }
    }
}

/// Put `special` at a random vertex and the other two angles in order after it.
fn place<R: Rng + ?Sized>(rng: &mut R, special: f64, x: f64, y: f64) -> [f64; 3] {
    match rng.gen_range(0..3) {
        0 => [special, x, y],
        1 => [y, special, x],
        _ => [x, y, special],
    }
}

/// Triangle with the given interior angles at `A`, `B`, `C` and unit side `BC`.
pub fn triangle_from_angles(angles: [f64; 3]) -> Triangle {
    let [alpha, beta, gamma] = angles;
    let c = gamma.sin() / alpha.sin();
    Triangle::new(
        Point2::new(c * beta.cos(), c * beta.sin()),
        Point2::new(0.0, 0.0),
        Point2::new(1.0, 0.0),
    )
    .expect("angles bounded away from zero give a valid triangle")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Similarity {
    pub scale: f64,
    pub rotation: f64,
    pub shift: Point2,
}

impl Similarity {
    pub fn apply(&self, p: Point2) -> Point2 {
        p.rotated(self.rotation) * self.scale + self.shift
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Similarity {
            scale: 10f64.powf(rng.gen_range(-1.0..1.0)),
            rotation: rng.gen_range(0.0..TAU),
            shift: Point2::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)),
        }
    }

    pub fn triangle(&self, t: &Triangle) -> Triangle {
        let [a, b, c] = t.vertices();
        Triangle::new(self.apply(a), self.apply(b), self.apply(c))
            .expect("similarities preserve non-degeneracy")
    }
}

pub fn random_triangle<R: Rng + ?Sized>(rng: &mut R, kind: Kind) -> Triangle {
    let base = triangle_from_angles(random_angles(rng, kind));
    Similarity::random(rng).triangle(&base)
}

/// Legs `(a, b)`, each log-uniform in `[0.01, 100]`.
pub fn random_legs<R: Rng + ?Sized>(rng: &mut R) -> (f64, f64) {
    let mut leg = || 10f64.powf(rng.gen_range(-2.0..2.0));
    (leg(), leg())
}

/// Which vertex carries the largest angle in `angles`.
pub fn largest(angles: [f64; 3]) -> Vertex {
    let mut best = 0;
    for i in 1..3 {
        if angles[i] > angles[best] {
            best = i;
        }
    }
    Vertex::ALL[best]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::TriangleClass;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn kinds_produce_their_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..2000 {
            let t = random_triangle(&mut rng, Kind::Right);
            assert!(matches!(t.classify(), TriangleClass::Right(_)));
            let t = random_triangle(&mut rng, Kind::Acute);
            assert_eq!(t.classify(), TriangleClass::Acute);
            let t = random_triangle(&mut rng, Kind::Obtuse);
            assert!(t.classify().is_obtuse());
        }
    }

    #[test]
    fn angles_from_construction_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let angles = random_angles(&mut rng, Kind::Obtuse);
            let t = triangle_from_angles(angles);
            let got = t.interior_angles();
            for (v, want) in Vertex::ALL.into_iter().zip(angles) {
                assert!((got.at(v) - want).abs() < 1e-12);
            }
            assert_eq!(t.classify(), TriangleClass::Obtuse(largest(angles)));
        }
    }
}
