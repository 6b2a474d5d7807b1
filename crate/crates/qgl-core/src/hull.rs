//! Convex hulls and convex-region intersection in slice-chart coordinates.
//!
//! Root sets coming out of floating-point solves are small finite point
//! clouds; their hulls degenerate freely (a single point, a segment, the
//! whole plane for the zero polynomial). The region type makes those
//! degeneracies explicit so intersection and membership stay honest
//! instead of relying on epsilon-thin polygons.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::tol;

/// A closed convex subset of the plane.
///
/// `Polygon` vertices are counterclockwise and strictly convex, starting
/// from the lexicographically smallest vertex; `Segment` holds two
/// distinct endpoints; `WholePlane` is the hull of "everything is a root"
/// (the zero polynomial); `Empty` is the hull of no points.
#[derive(Debug, Clone, PartialEq)]
pub enum ConvexRegion2D {
    Empty,
    Point([f64; 2]),
    Segment([[f64; 2]; 2]),
    Polygon(Vec<[f64; 2]>),
    WholePlane,
}

impl ConvexRegion2D {
    pub fn kind_name(&self) -> &'static str {
        match self {
            ConvexRegion2D::Empty => "empty",
            ConvexRegion2D::Point(_) => "point",
            ConvexRegion2D::Segment(_) => "segment",
            ConvexRegion2D::Polygon(_) => "polygon",
            ConvexRegion2D::WholePlane => "whole_plane",
        }
    }

    /// Boundary vertices; empty for `Empty` and `WholePlane`.
    pub fn vertices(&self) -> &[[f64; 2]] {
        match self {
            ConvexRegion2D::Empty | ConvexRegion2D::WholePlane => &[],
            ConvexRegion2D::Point(p) => std::slice::from_ref(p),
            ConvexRegion2D::Segment(s) => s,
            ConvexRegion2D::Polygon(v) => v,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, ConvexRegion2D::Empty)
    }

    /// Diagonal of the bounding box of the vertices; 0 when there are none.
    pub fn bbox_diagonal(&self) -> f64 {
        bbox_diagonal(self.vertices())
    }

    /// True when `p` lies within Euclidean distance `eps` of the region.
    /// The region is closed: boundary points are members at `eps = 0`.
    pub fn contains(&self, p: [f64; 2], eps: f64) -> bool {
        match self {
            ConvexRegion2D::Empty => false,
            ConvexRegion2D::WholePlane => true,
            _ => self.distance(p) <= eps,
        }
    }

    /// Euclidean distance from `p` to the region (0 inside); +∞ for
    /// `Empty`, 0 everywhere for `WholePlane`.
    pub fn distance(&self, p: [f64; 2]) -> f64 {
        match self {
            ConvexRegion2D::Empty => f64::INFINITY,
            ConvexRegion2D::WholePlane => 0.0,
            ConvexRegion2D::Point(q) => dist(p, *q),
            ConvexRegion2D::Segment([a, b]) => point_segment_distance(p, *a, *b),
            ConvexRegion2D::Polygon(v) => {
                let inside = edges(v).all(|(a, b)| cross(sub(b, a), sub(p, a)) >= 0.0);
                if inside {
                    return 0.0;
                }
                edges(v)
                    .map(|(a, b)| point_segment_distance(p, a, b))
                    .fold(f64::INFINITY, f64::min)
            }
        }
    }
}

impl fmt::Display for ConvexRegion2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind_name())?;
        let vs = self.vertices();
        if vs.is_empty() {
            return Ok(());
        }
        write!(f, " {{")?;
        for (n, [a, b]) in vs.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            match f.precision() {
                Some(p) => write!(f, "({a:.p$}, {b:.p$})")?,
                None => write!(f, "({a}, {b})")?,
            }
        }
        write!(f, "}}")
    }
}

impl Serialize for ConvexRegion2D {
    /// Uniform shape `{"kind": ..., "vertices": [[a,b], ...]}`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ConvexRegion2D", 2)?;
        s.serialize_field("kind", self.kind_name())?;
        s.serialize_field("vertices", self.vertices())?;
        s.end()
    }
}

fn sub(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

fn cross(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn dot(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    sub(a, b)[0].hypot(sub(a, b)[1])
}

fn bbox_diagonal(points: &[[f64; 2]]) -> f64 {
    if points.is_empty() {
        return 0.0;
    }
    let (mut lo, mut hi) = (points[0], points[0]);
    for p in points {
        lo = [lo[0].min(p[0]), lo[1].min(p[1])];
        hi = [hi[0].max(p[0]), hi[1].max(p[1])];
    }
    dist(lo, hi)
}

/// Closed edges of a polygon vertex cycle.
fn edges(v: &[[f64; 2]]) -> impl Iterator<Item = ([f64; 2], [f64; 2])> + '_ {
    (0..v.len()).map(move |n| (v[n], v[(n + 1) % v.len()]))
}

fn point_segment_distance(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let ab = sub(b, a);
    let len_sq = dot(ab, ab);
    if len_sq == 0.0 {
        return dist(p, a);
    }
    let t = (dot(sub(p, a), ab) / len_sq).clamp(0.0, 1.0);
    dist(p, [a[0] + t * ab[0], a[1] + t * ab[1]])
}

/// Convex hull by Andrew's monotone chain, with degeneracy classification.
///
/// Points within `1e-12` of the bounding-box diagonal of each other are
/// treated as coincident, and turns flatter than that tolerance collapse,
/// so nearly-collinear inputs classify as `Segment` rather than producing
/// sliver polygons.
pub fn convex_hull(points: &[[f64; 2]]) -> ConvexRegion2D {
    if points.is_empty() {
        return ConvexRegion2D::Empty;
    }
    let diag = bbox_diagonal(points);
    let eps = tol::COLLINEAR * diag;
    if diag == 0.0 {
        return ConvexRegion2D::Point(points[0]);
    }

    let mut pts: Vec<[f64; 2]> = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup_by(|a, b| dist(*a, *b) <= eps);
    if pts.len() == 1 {
        return ConvexRegion2D::Point(pts[0]);
    }

    // Lower then upper chain; a cross product below the area tolerance
    // counts as a non-left turn and evicts the middle point.
    let area_eps = eps * diag;
    let mut hull: Vec<[f64; 2]> = Vec::with_capacity(pts.len() + 1);
    for pass in 0..2 {
        let start = hull.len() + 2;
        let iter: Box<dyn Iterator<Item = &[f64; 2]>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for p in iter {
            while hull.len() >= start
                && cross(
                    sub(hull[hull.len() - 1], hull[hull.len() - 2]),
                    sub(*p, hull[hull.len() - 1]),
                ) <= area_eps
            {
                hull.pop();
            }
            hull.push(*p);
        }
        hull.pop();
    }

    match hull.len() {
        0 => ConvexRegion2D::Point(pts[0]),
        1 => {
            // All points collinear: the chain keeps only the extremes.
            ConvexRegion2D::Segment([pts[0], *pts.last().unwrap()])
        }
        2 => ConvexRegion2D::Segment([hull[0], hull[1]]),
        _ => ConvexRegion2D::Polygon(hull),
    }
}

/// A closed half-plane `n·x ≤ c` with unit normal.
#[derive(Debug, Clone, Copy)]
struct HalfPlane {
    n: [f64; 2],
    c: f64,
}

impl HalfPlane {
    /// The half-plane to the right of the directed line `a → b` — the
    /// inside of a counterclockwise polygon's edge.
    fn right_of(a: [f64; 2], b: [f64; 2]) -> HalfPlane {
        let d = sub(b, a);
        let len = d[0].hypot(d[1]);
        let n = [d[1] / len, -d[0] / len];
        HalfPlane { n, c: dot(n, a) }
    }

    fn value(&self, p: [f64; 2]) -> f64 {
        dot(self.n, p) - self.c
    }
}

/// Bounding half-planes of a (non-empty, bounded) region.
fn half_planes(region: &ConvexRegion2D) -> Vec<HalfPlane> {
    match region {
        ConvexRegion2D::Empty | ConvexRegion2D::WholePlane => Vec::new(),
        ConvexRegion2D::Point(p) => vec![
            HalfPlane { n: [1.0, 0.0], c: p[0] },
            HalfPlane { n: [-1.0, 0.0], c: -p[0] },
            HalfPlane { n: [0.0, 1.0], c: p[1] },
            HalfPlane { n: [0.0, -1.0], c: -p[1] },
        ],
        ConvexRegion2D::Segment([a, b]) => {
            let side = HalfPlane::right_of(*a, *b);
            // Each cap keeps the side of its endpoint facing the other
            // endpoint: the left of a→(a+n) is the direction of b.
            let cap_a = HalfPlane::right_of(*a, [a[0] + side.n[0], a[1] + side.n[1]]);
            let cap_b = HalfPlane::right_of(*b, [b[0] - side.n[0], b[1] - side.n[1]]);
            vec![
                side,
                HalfPlane { n: [-side.n[0], -side.n[1]], c: -side.c },
                cap_a,
                cap_b,
            ]
        }
        ConvexRegion2D::Polygon(v) => edges(v).map(|(a, b)| HalfPlane::right_of(a, b)).collect(),
    }
}

/// Intersection of two convex regions.
///
/// `WholePlane` is the identity, `Empty` absorbs. Segments and points are
/// clipped directly against the other region's half-planes; polygon pairs
/// go through Sutherland–Hodgman clipping. Degenerate results collapse to
/// `Segment`/`Point` at a tolerance of `1e-9` relative to the geometry
/// scale (floating-point root hulls cannot meaningfully resolve less).
pub fn intersect(a: &ConvexRegion2D, b: &ConvexRegion2D) -> ConvexRegion2D {
    use ConvexRegion2D::*;
    match (a, b) {
        (Empty, _) | (_, Empty) => return ConvexRegion2D::Empty,
        (WholePlane, other) | (other, WholePlane) => return other.clone(),
        _ => {}
    }

    let scale = 1.0
        + a.vertices().iter().chain(b.vertices()).fold(0.0f64, |m, p| {
            m.max(p[0].abs()).max(p[1].abs())
        });
    let eps = tol::COLLINEAR * scale;
    let collapse = 1e-9 * scale;

    match (a, b) {
        (Point(p), other) | (other, Point(p)) => {
            if other.contains(*p, eps) {
                ConvexRegion2D::Point(*p)
            } else {
                ConvexRegion2D::Empty
            }
        }
        (Segment(s), other) | (other, Segment(s)) => {
            clip_segment(*s, &half_planes(other), eps, collapse)
        }
        (Polygon(va), Polygon(_)) => {
            let mut poly = va.clone();
            for hp in half_planes(b) {
                poly = clip_polygon(&poly, hp, eps);
                if poly.is_empty() {
                    return ConvexRegion2D::Empty;
                }
            }
            // Re-hull to dedup interpolated vertices and classify
            // degenerate (point/segment-thin) intersections.
            convex_hull(&poly)
        }
        _ => unreachable!("all kind combinations handled above"),
    }
}

/// Liang–Barsky style interval clipping of a segment by half-planes.
///
/// Planes shifted outward by `eps` decide survival (so a boundary touch
/// is kept, matching closed-hull semantics), while the reported interval
/// comes from the unshifted planes so generic overlaps get exact
/// endpoints. A touch whose exact interval is inverted collapses to its
/// midpoint.
fn clip_segment(
    [p, q]: [[f64; 2]; 2],
    planes: &[HalfPlane],
    eps: f64,
    collapse: f64,
) -> ConvexRegion2D {
    let d = sub(q, p);
    let (mut t0, mut t1) = (0.0f64, 1.0f64);
    let (mut t0_slack, mut t1_slack) = (0.0f64, 1.0f64);
    for hp in planes {
        let vp = hp.value(p);
        let slope = dot(hp.n, d);
        if slope == 0.0 {
            if vp - eps > 0.0 {
                return ConvexRegion2D::Empty;
            }
            continue;
        }
        let t_cross = -vp / slope;
        let t_cross_slack = -(vp - eps) / slope;
        if slope > 0.0 {
            t1 = t1.min(t_cross);
            t1_slack = t1_slack.min(t_cross_slack);
        } else {
            t0 = t0.max(t_cross);
            t0_slack = t0_slack.max(t_cross_slack);
        }
        if t0_slack > t1_slack {
            return ConvexRegion2D::Empty;
        }
    }
    let at = |t: f64| [p[0] + t * d[0], p[1] + t * d[1]];
    if t0 > t1 {
        // Survived only through the slack: a boundary touch.
        return ConvexRegion2D::Point(at(((t0 + t1) / 2.0).clamp(0.0, 1.0)));
    }
    let (u, v) = (at(t0), at(t1));
    if dist(u, v) <= collapse {
        ConvexRegion2D::Point([(u[0] + v[0]) / 2.0, (u[1] + v[1]) / 2.0])
    } else {
        ConvexRegion2D::Segment([u, v])
    }
}

/// One Sutherland–Hodgman pass: clip a vertex cycle by a half-plane.
fn clip_polygon(poly: &[[f64; 2]], hp: HalfPlane, eps: f64) -> Vec<[f64; 2]> {
    let mut out = Vec::with_capacity(poly.len() + 1);
    for n in 0..poly.len() {
        let cur = poly[n];
        let next = poly[(n + 1) % poly.len()];
        let vc = hp.value(cur);
        let vn = hp.value(next);
        if vc <= eps {
            out.push(cur);
        }
        if (vc <= eps) != (vn <= eps) {
            let t = vc / (vc - vn);
            out.push([
                cur[0] + t * (next[0] - cur[0]),
                cur[1] + t * (next[1] - cur[1]),
            ]);
        }
    }
    out
}
