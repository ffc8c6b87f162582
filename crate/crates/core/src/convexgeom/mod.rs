//! Support functions, directional widths, breadth and diameter of convex
//! bodies in the plane.

mod io;

pub use io::{format_body, parse_body};

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::angle::{unit_direction, wrap_pi};
use crate::{Error, Result};

/// Angular slack for recognising directions orthogonal to a strip.
pub const STRIP_ANGLE_EPS: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum ConvexBody {
    Empty,
    /// Vertices in strictly convex position, counterclockwise. One vertex
    /// is a point, two a segment.
    Polygon(Vec<Complex64>),
    Disk { center: Complex64, radius: f64 },
    /// `{z : |Im(z·e^{−iφ}) − offset| ≤ width/2}` with `φ = axis`.
    Strip { axis: f64, width: f64, offset: f64 },
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

/// Convex hull by the monotone chain; collinear and repeated points are
/// dropped, the result is counterclockwise starting at the lowest-leftmost
/// vertex.
pub fn convex_hull(points: &[Complex64]) -> Vec<Complex64> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut hull: Vec<Complex64> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let floor = hull.len();
        let iter: Box<dyn Iterator<Item = &Complex64>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= floor + 2 {
                let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
                if cross(b - a, p - b) > 0.0 {
                    break;
                }
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    if hull.len() == 2 && hull[0] == hull[1] {
        hull.truncate(1);
    }
    hull
}

impl ConvexBody {
    /// Convex hull of a finite point cloud; empty input gives the empty body.
    pub fn from_points(points: &[Complex64]) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| !(p.re.is_finite() && p.im.is_finite())) {
            return Err(Error::InvalidBody(format!("non-finite point {p}")));
        }
        if points.is_empty() {
            return Ok(ConvexBody::Empty);
        }
        Ok(ConvexBody::Polygon(convex_hull(points)))
    }

    /// A polygon given by its vertices, which must already be in strictly
    /// convex position and counterclockwise.
    pub fn polygon(vertices: Vec<Complex64>) -> Result<Self> {
        let hull = match ConvexBody::from_points(&vertices)? {
            ConvexBody::Polygon(h) => h,
            _ => return Err(Error::InvalidBody("polygon needs at least one vertex".into())),
        };
        let start = vertices.iter().position(|&v| v == hull[0]);
        let canonical = hull.len() == vertices.len()
            && start.is_some_and(|s| (0..hull.len()).all(|k| vertices[(s + k) % hull.len()] == hull[k]));
        if !canonical {
            return Err(Error::InvalidBody(
                "polygon vertices must be distinct, strictly convex and counterclockwise".into(),
            ));
        }
        Ok(ConvexBody::Polygon(hull))
    }

    pub fn disk(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite() && center.re.is_finite() && center.im.is_finite()) {
            return Err(Error::InvalidBody(format!("disk needs a finite centre and radius > 0, got {radius}")));
        }
        Ok(ConvexBody::Disk { center, radius })
    }

    pub fn strip(axis: f64, width: f64, offset: f64) -> Result<Self> {
        if !(width >= 0.0 && width.is_finite() && axis.is_finite() && offset.is_finite()) {
            return Err(Error::InvalidBody(format!("strip needs a finite width ≥ 0, got {width}")));
        }
        Ok(ConvexBody::Strip { axis, width, offset })
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, ConvexBody::Empty)
    }

    /// `sup_{s∈S} Re(s·e^{−iθ})`.
    pub fn support(&self, theta: f64) -> f64 {
        match self {
            ConvexBody::Empty => f64::NEG_INFINITY,
            ConvexBody::Polygon(vs) => {
                let u = unit_direction(theta);
                vs.iter()
                    .map(|v| v.re * u.re + v.im * u.im)
                    .fold(f64::NEG_INFINITY, f64::max)
            }
            ConvexBody::Disk { center, radius } => {
                let u = unit_direction(theta);
                center.re * u.re + center.im * u.im + radius
            }
            ConvexBody::Strip { axis, width, offset } => match strip_side(*axis, theta) {
                Some(true) => offset + width / 2.0,
                Some(false) => -offset + width / 2.0,
                None => f64::INFINITY,
            },
        }
    }

    /// Positively homogeneous extension `|z|·support(arg z)`, zero at the origin.
    pub fn support_at(&self, z: Complex64) -> f64 {
        if z == Complex64::new(0.0, 0.0) {
            return 0.0;
        }
        let h = self.support(z.arg());
        if h == 0.0 {
            0.0
        } else {
            z.norm() * h
        }
    }

    /// Distance between the two supporting lines orthogonal to `θ`.
    pub fn width(&self, theta: f64) -> f64 {
        match self {
            ConvexBody::Disk { radius, .. } => 2.0 * radius,
            ConvexBody::Strip { axis, width, .. } => match strip_side(*axis, theta) {
                Some(_) => *width,
                None => f64::INFINITY,
            },
            _ => self.support(theta) + self.support(theta + PI),
        }
    }

    /// Smallest width over all directions.
    pub fn breadth(&self) -> f64 {
        match self {
            ConvexBody::Empty => f64::NEG_INFINITY,
            ConvexBody::Disk { radius, .. } => 2.0 * radius,
            ConvexBody::Strip { width, .. } => *width,
            ConvexBody::Polygon(vs) => polygon_breadth(vs),
        }
    }

    /// Largest width over all directions, equal to the largest distance
    /// between two points of the body.
    pub fn diameter(&self) -> f64 {
        match self {
            ConvexBody::Empty => f64::NEG_INFINITY,
            ConvexBody::Disk { radius, .. } => 2.0 * radius,
            ConvexBody::Strip { .. } => f64::INFINITY,
            ConvexBody::Polygon(vs) => polygon_diameter(vs),
        }
    }

    /// The body multiplied by `e^{iφ}`.
    pub fn rotate(&self, phi: f64) -> Self {
        let u = unit_direction(phi);
        match self {
            ConvexBody::Empty => ConvexBody::Empty,
            ConvexBody::Polygon(vs) => {
                ConvexBody::Polygon(convex_hull(&vs.iter().map(|v| v * u).collect::<Vec<_>>()))
            }
            ConvexBody::Disk { center, radius } => ConvexBody::Disk {
                center: center * u,
                radius: *radius,
            },
            ConvexBody::Strip { axis, width, offset } => ConvexBody::Strip {
                axis: axis + phi,
                width: *width,
                offset: *offset,
            },
        }
    }

    pub fn translate(&self, t: Complex64) -> Self {
        match self {
            ConvexBody::Empty => ConvexBody::Empty,
            ConvexBody::Polygon(vs) => ConvexBody::Polygon(vs.iter().map(|v| v + t).collect()),
            ConvexBody::Disk { center, radius } => ConvexBody::Disk {
                center: center + t,
                radius: *radius,
            },
            ConvexBody::Strip { axis, width, offset } => {
                let u = unit_direction(*axis);
                ConvexBody::Strip {
                    axis: *axis,
                    width: *width,
                    offset: offset + u.re * t.im - u.im * t.re,
                }
            }
        }
    }
}

/// `Some(true)` for the normal `axis + π/2`, `Some(false)` for the opposite
/// normal, `None` for directions not orthogonal to the axis.
fn strip_side(axis: f64, theta: f64) -> Option<bool> {
    let d = wrap_pi(theta - axis - FRAC_PI_2);
    if d.abs() <= STRIP_ANGLE_EPS {
        Some(true)
    } else if PI - d.abs() <= STRIP_ANGLE_EPS {
        Some(false)
    } else {
        None
    }
}

/// Minimum over edges of the distance from the edge line to the farthest
/// vertex (rotating calipers).
fn polygon_breadth(vs: &[Complex64]) -> f64 {
    let n = vs.len();
    if n <= 2 {
        return 0.0;
    }
    let mut best = f64::INFINITY;
    let mut j = 1;
    for i in 0..n {
        let e = vs[(i + 1) % n] - vs[i];
        while cross(e, vs[(j + 1) % n] - vs[i]) > cross(e, vs[j] - vs[i]) {
            j = (j + 1) % n;
        }
        best = best.min(cross(e, vs[j] - vs[i]) / e.norm());
    }
    best
}

/// Maximum distance over antipodal vertex pairs.
fn polygon_diameter(vs: &[Complex64]) -> f64 {
    let n = vs.len();
    match n {
        0 | 1 => return 0.0,
        2 => return (vs[0] - vs[1]).norm(),
        _ => {}
    }
    let mut best: f64 = 0.0;
    let mut j = 1;
    for i in 0..n {
        let i1 = (i + 1) % n;
        let e = vs[i1] - vs[i];
        while cross(e, vs[(j + 1) % n] - vs[i]) > cross(e, vs[j] - vs[i]) {
            j = (j + 1) % n;
        }
        let j1 = (j + 1) % n;
        for &(p, q) in &[(i, j), (i1, j), (i, j1), (i1, j1)] {
            best = best.max((vs[p] - vs[q]).norm());
        }
    }
    best
}
