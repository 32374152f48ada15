//! Piecewise paths in the complex plane built from line segments and arcs.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Segment {
    Line {
        from: Complex64,
        to: Complex64,
    },
    /// `center + radius * exp(i theta)` for theta running from `theta0` to `theta1`.
    Arc {
        center: Complex64,
        radius: f64,
        theta0: f64,
        theta1: f64,
    },
}

impl Segment {
    /// Point at local parameter t in [0, 1].
    pub fn point(&self, t: f64) -> Complex64 {
        match *self {
            Segment::Line { from, to } => from + (to - from) * t,
            Segment::Arc {
                center,
                radius,
                theta0,
                theta1,
            } => center + Complex64::from_polar(radius, theta0 + (theta1 - theta0) * t),
        }
    }

    /// dz/dt at local parameter t.
    pub fn derivative(&self, t: f64) -> Complex64 {
        match *self {
            Segment::Line { from, to } => to - from,
            Segment::Arc {
                radius,
                theta0,
                theta1,
                ..
            } => {
                let th = theta0 + (theta1 - theta0) * t;
                Complex64::new(0.0, theta1 - theta0) * Complex64::from_polar(radius, th)
            }
        }
    }

    pub fn start(&self) -> Complex64 {
        self.point(0.0)
    }

    pub fn end(&self) -> Complex64 {
        self.point(1.0)
    }

    pub fn length(&self) -> f64 {
        match *self {
            Segment::Line { from, to } => (to - from).norm(),
            Segment::Arc {
                radius,
                theta0,
                theta1,
                ..
            } => radius * (theta1 - theta0).abs(),
        }
    }

    pub fn reversed(&self) -> Segment {
        match *self {
            Segment::Line { from, to } => Segment::Line { from: to, to: from },
            Segment::Arc {
                center,
                radius,
                theta0,
                theta1,
            } => Segment::Arc {
                center,
                radius,
                theta0: theta1,
                theta1: theta0,
            },
        }
    }

    /// The piece of this segment between local parameters t0 and t1.
    pub fn sub(&self, t0: f64, t1: f64) -> Segment {
        match *self {
            Segment::Line { .. } => Segment::Line {
                from: self.point(t0),
                to: self.point(t1),
            },
            Segment::Arc {
                center,
                radius,
                theta0,
                theta1,
            } => Segment::Arc {
                center,
                radius,
                theta0: theta0 + (theta1 - theta0) * t0,
                theta1: theta0 + (theta1 - theta0) * t1,
            },
        }
    }

    /// Euclidean distance from `p` to the segment.
    pub fn distance_to(&self, p: Complex64) -> f64 {
        match *self {
            Segment::Line { from, to } => {
                let d = to - from;
                let len2 = d.norm_sqr();
                if len2 == 0.0 {
                    return (p - from).norm();
                }
                let t = ((p - from) * d.conj()).re / len2;
                (p - self.point(t.clamp(0.0, 1.0))).norm()
            }
            Segment::Arc {
                center,
                radius,
                theta0,
                theta1,
            } => {
                let ends = (p - self.start()).norm().min((p - self.end()).norm());
                let rel = p - center;
                if rel.norm() == 0.0 {
                    return radius;
                }
                let (lo, hi) = if theta0 <= theta1 {
                    (theta0, theta1)
                } else {
                    (theta1, theta0)
                };
                let phi = rel.arg();
                // Shift phi into [lo, lo + 2 pi) and test membership in the sweep.
                let shifted = lo + (phi - lo).rem_euclid(2.0 * PI);
                if shifted <= hi || hi - lo >= 2.0 * PI {
                    ends.min((rel.norm() - radius).abs())
                } else {
                    ends
                }
            }
        }
    }
}

/// A continuous piecewise path. The global parameter runs over
/// `[0, segments.len()]`, one unit per segment.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegrationPath {
    segments: Vec<Segment>,
}

impl IntegrationPath {
    pub fn new(segments: Vec<Segment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::domain("path needs at least one segment"));
        }
        for w in segments.windows(2) {
            let gap = (w[0].end() - w[1].start()).norm();
            let scale = 1.0 + w[0].end().norm();
            if gap > 1e-12 * scale {
                return Err(Error::domain(format!(
                    "path is discontinuous: gap {gap:.3e} between segments"
                )));
            }
        }
        Ok(IntegrationPath { segments })
    }

    pub fn line(from: Complex64, to: Complex64) -> Self {
        IntegrationPath {
            segments: vec![Segment::Line { from, to }],
        }
    }

    /// Polyline through the given vertices.
    pub fn polyline(points: &[Complex64]) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::domain("polyline needs at least two points"));
        }
        IntegrationPath::new(
            points
                .windows(2)
                .map(|w| Segment::Line {
                    from: w[0],
                    to: w[1],
                })
                .collect(),
        )
    }

    /// Semicircle from 0 to `end` on the right of the direction 0 -> end
    /// (below the real axis when `end` is a positive real).
    pub fn lower_semicircle(end: Complex64) -> Self {
        let base = end.arg();
        IntegrationPath {
            segments: vec![Segment::Arc {
                center: end * 0.5,
                radius: end.norm() * 0.5,
                theta0: base - PI,
                theta1: base,
            }],
        }
    }

    /// Mirror image of [`IntegrationPath::lower_semicircle`].
    pub fn upper_semicircle(end: Complex64) -> Self {
        let base = end.arg();
        IntegrationPath {
            segments: vec![Segment::Arc {
                center: end * 0.5,
                radius: end.norm() * 0.5,
                theta0: base + PI,
                theta1: base,
            }],
        }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn start(&self) -> Complex64 {
        self.segments[0].start()
    }

    pub fn end(&self) -> Complex64 {
        self.segments[self.segments.len() - 1].end()
    }

    pub fn length(&self) -> f64 {
        self.segments.iter().map(Segment::length).sum()
    }

    pub fn reversed(&self) -> Self {
        IntegrationPath {
            segments: self.segments.iter().rev().map(Segment::reversed).collect(),
        }
    }

    /// Minimum distance from the path to `p`.
    pub fn distance_to(&self, p: Complex64) -> f64 {
        self.segments
            .iter()
            .map(|s| s.distance_to(p))
            .fold(f64::INFINITY, f64::min)
    }

    /// Minimum distance from the path to any of `points`.
    pub fn clearance(&self, points: &[Complex64]) -> f64 {
        points
            .iter()
            .map(|&p| self.distance_to(p))
            .fold(f64::INFINITY, f64::min)
    }

    /// Splits the path at the point reached after `fraction` of its total
    /// arc length.
    pub fn split_at_fraction(&self, fraction: f64) -> (IntegrationPath, IntegrationPath) {
        let target = fraction.clamp(0.0, 1.0) * self.length();
        let mut acc = 0.0;
        for (i, seg) in self.segments.iter().enumerate() {
            let len = seg.length();
            if acc + len >= target || i + 1 == self.segments.len() {
                let t = if len > 0.0 {
                    ((target - acc) / len).clamp(0.0, 1.0)
                } else {
                    0.0
                };
                let mut first: Vec<Segment> = self.segments[..i].to_vec();
                first.push(seg.sub(0.0, t));
                let mut second = vec![seg.sub(t, 1.0)];
                second.extend_from_slice(&self.segments[i + 1..]);
                return (
                    IntegrationPath { segments: first },
                    IntegrationPath { segments: second },
                );
            }
            acc += len;
        }
        unreachable!("loop returns on the last segment")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn semicircles_connect_zero_to_end() {
        for end in [c(1.0, 0.0), c(0.3, -2.0)] {
            for p in [IntegrationPath::lower_semicircle(end), IntegrationPath::upper_semicircle(end)] {
                assert!(p.start().norm() < 1e-15);
                assert!((p.end() - end).norm() < 1e-15);
            }
        }
        let low = IntegrationPath::lower_semicircle(c(1.0, 0.0));
        assert!(low.segments()[0].point(0.5).im < 0.0);
        let up = IntegrationPath::upper_semicircle(c(1.0, 0.0));
        assert!(up.segments()[0].point(0.5).im > 0.0);
    }

    #[test]
    fn arc_derivative_matches_finite_difference() {
        let seg = IntegrationPath::lower_semicircle(c(1.0, 0.5)).segments()[0];
        let h = 1e-6;
        let fd = (seg.point(0.3 + h) - seg.point(0.3 - h)) / (2.0 * h);
        assert!((fd - seg.derivative(0.3)).norm() < 1e-8);
    }

    #[test]
    fn distances() {
        let line = IntegrationPath::line(c(0.0, 0.0), c(1.0, 0.0));
        assert!((line.distance_to(c(0.5, 0.2)) - 0.2).abs() < 1e-15);
        assert!((line.distance_to(c(2.0, 0.0)) - 1.0).abs() < 1e-15);
        let low = IntegrationPath::lower_semicircle(c(1.0, 0.0));
        assert!((low.distance_to(c(0.5, 0.0)) - 0.5).abs() < 1e-15);
        assert!((low.distance_to(c(0.5, -0.6)) - 0.1).abs() < 1e-12);
        // Upper half plane points are measured to the arc endpoints.
        assert!((low.distance_to(c(0.5, 0.6)) - c(0.5, 0.6).norm()).abs() < 1e-12);
    }

    #[test]
    fn discontinuous_path_rejected() {
        let segs = vec![
            Segment::Line {
                from: c(0.0, 0.0),
                to: c(1.0, 0.0),
            },
            Segment::Line {
                from: c(1.0, 0.1),
                to: c(2.0, 0.0),
            },
        ];
        assert!(IntegrationPath::new(segs).is_err());
    }

    #[test]
    fn split_and_reverse() {
        let p = IntegrationPath::polyline(&[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0)]).unwrap();
        let (a, b) = p.split_at_fraction(0.25);
        assert!((a.end() - c(0.5, 0.0)).norm() < 1e-15);
        assert!((b.start() - c(0.5, 0.0)).norm() < 1e-15);
        assert!((a.length() + b.length() - 2.0).abs() < 1e-15);
        let r = p.reversed();
        assert_eq!(r.start(), p.end());
        assert_eq!(r.end(), p.start());
    }
}
