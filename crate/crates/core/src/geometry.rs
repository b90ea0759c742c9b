//! Integer screen geometry: points, deltas, rectangles and the handful of
//! predicates every contour hit test is built from.
//!
//! Coordinates are screen pixels with `y` growing downward. Constructions
//! that go through trigonometry round to the nearest pixel.

use std::ops::{Add, AddAssign, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: i32,
    pub y: i32,
}

impl Point {
    pub const fn new(x: i32, y: i32) -> Self {
        Self { x, y }
    }

    /// The offset that carries `from` onto `self`.
    pub fn delta_from(self, from: Point) -> Delta {
        Delta::new(self.x - from.x, self.y - from.y)
    }
}

/// A relative displacement in pixels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Delta {
    pub dx: i32,
    pub dy: i32,
}

impl Delta {
    pub const ZERO: Delta = Delta { dx: 0, dy: 0 };

    pub const fn new(dx: i32, dy: i32) -> Self {
        Self { dx, dy }
    }

    pub fn is_zero(self) -> bool {
        self.dx == 0 && self.dy == 0
    }
}

impl Add<Delta> for Point {
    type Output = Point;
    fn add(self, d: Delta) -> Point {
        Point::new(self.x + d.dx, self.y + d.dy)
    }
}

impl AddAssign<Delta> for Point {
    fn add_assign(&mut self, d: Delta) {
        self.x += d.dx;
        self.y += d.dy;
    }
}

impl Sub for Point {
    type Output = Delta;
    fn sub(self, other: Point) -> Delta {
        self.delta_from(other)
    }
}

impl Add for Delta {
    type Output = Delta;
    fn add(self, o: Delta) -> Delta {
        Delta::new(self.dx + o.dx, self.dy + o.dy)
    }
}

impl Neg for Delta {
    type Output = Delta;
    fn neg(self) -> Delta {
        Delta::new(-self.dx, -self.dy)
    }
}

/// Axis-aligned rectangle in the usual GUI form: `right = left + width`,
/// `bottom = top + height`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Rect {
    pub left: i32,
    pub top: i32,
    pub width: i32,
    pub height: i32,
}

impl Rect {
    pub const fn new(left: i32, top: i32, width: i32, height: i32) -> Self {
        Self {
            left,
            top,
            width,
            height,
        }
    }

    pub fn right(&self) -> i32 {
        self.left + self.width
    }

    pub fn bottom(&self) -> i32 {
        self.top + self.height
    }

    pub fn left_top(&self) -> Point {
        Point::new(self.left, self.top)
    }

    pub fn right_top(&self) -> Point {
        Point::new(self.right(), self.top)
    }

    pub fn right_bottom(&self) -> Point {
        Point::new(self.right(), self.bottom())
    }

    pub fn left_bottom(&self) -> Point {
        Point::new(self.left, self.bottom())
    }

    pub fn translate(&mut self, d: Delta) {
        self.left += d.dx;
        self.top += d.dy;
    }

    /// Closed containment (edges count as inside).
    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.left && p.x <= self.right() && p.y >= self.top && p.y <= self.bottom()
    }
}

/// Inclusive integer bounding box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bounds {
    pub min: Point,
    pub max: Point,
}

impl Bounds {
    pub fn around(p: Point) -> Self {
        Self { min: p, max: p }
    }

    pub fn of_points<'a>(points: impl IntoIterator<Item = &'a Point>) -> Option<Self> {
        let mut it = points.into_iter();
        let first = *it.next()?;
        Some(it.fold(Bounds::around(first), |b, p| b.including(*p)))
    }

    pub fn including(self, p: Point) -> Self {
        Self {
            min: Point::new(self.min.x.min(p.x), self.min.y.min(p.y)),
            max: Point::new(self.max.x.max(p.x), self.max.y.max(p.y)),
        }
    }

    pub fn union(self, o: Bounds) -> Self {
        self.including(o.min).including(o.max)
    }

    pub fn width(&self) -> i32 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> i32 {
        self.max.y - self.min.y
    }

    pub fn translated(self, d: Delta) -> Self {
        Self {
            min: self.min + d,
            max: self.max + d,
        }
    }
}

pub fn distance(a: Point, b: Point) -> f64 {
    let dx = f64::from(b.x) - f64::from(a.x);
    let dy = f64::from(b.y) - f64::from(a.y);
    dx.hypot(dy)
}

/// Polar construction around `center`: angle 0 points right and positive
/// angles turn counter-clockwise as seen on screen (so `y` is subtracted).
pub fn point_at(center: Point, angle: f64, radius: f64) -> Point {
    Point::new(
        center.x + (radius * angle.cos()).round() as i32,
        center.y - (radius * angle.sin()).round() as i32,
    )
}

/// `a + ratio * (b - a)`, rounded per component.
pub fn point_on_line(a: Point, b: Point, ratio: f64) -> Point {
    let x = f64::from(a.x) + ratio * f64::from(b.x - a.x);
    let y = f64::from(a.y) + ratio * f64::from(b.y - a.y);
    Point::new(x.round() as i32, y.round() as i32)
}

/// Distance from `p` to the closed segment `[a, b]`.
pub fn dist_to_segment(p: Point, a: Point, b: Point) -> f64 {
    let (abx, aby) = (f64::from(b.x - a.x), f64::from(b.y - a.y));
    let len2 = abx * abx + aby * aby;
    if len2 == 0.0 {
        return distance(p, a);
    }
    let (apx, apy) = (f64::from(p.x - a.x), f64::from(p.y - a.y));
    let t = ((apx * abx + apy * aby) / len2).clamp(0.0, 1.0);
    let (cx, cy) = (f64::from(a.x) + t * abx, f64::from(a.y) + t * aby);
    (f64::from(p.x) - cx).hypot(f64::from(p.y) - cy)
}

fn cross(o: Point, a: Point, b: Point) -> i64 {
    let (ax, ay) = (i64::from(a.x - o.x), i64::from(a.y - o.y));
    let (bx, by) = (i64::from(b.x - o.x), i64::from(b.y - o.y));
    ax * by - ay * bx
}

fn on_segment(p: Point, a: Point, b: Point) -> bool {
    cross(a, b, p) == 0
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// Even-odd containment for a simple polygon; points on an edge count as
/// inside. Exact in integer arithmetic.
pub fn point_in_polygon(p: Point, vertices: &[Point]) -> Result<bool, GeometryError> {
    let n = vertices.len();
    if n < 3 {
        return Err(GeometryError::TooFewVertices(n));
    }
    let mut inside = false;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        if on_segment(p, a, b) {
            return Ok(true);
        }
        if (a.y > p.y) != (b.y > p.y) {
            // p is left of the crossing when the sign of the cross product
            // matches the edge direction.
            let c = cross(a, b, p);
            if (c > 0) == (b.y > a.y) {
                inside = !inside;
            }
        }
    }
    Ok(inside)
}
