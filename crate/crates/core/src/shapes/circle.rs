//! N-node contours: circle and ring borders tiled with small interchangeable
//! circular nodes.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{positive, Glyph, ShapeError};
use crate::contour::{Contour, CursorHint, Node};
use crate::geometry::{distance, point_at, point_on_line, Bounds, Delta, Point};
use crate::moveable::{Moveable, MouseButton};

/// Smallest radial distance kept between a ring's inner and outer border.
pub const RING_MIN_GAP: i32 = 8;

/// Number of border nodes needed for a circumference, rounded to nearest.
fn nodes_on_border(radius: i32, spacing: i32) -> usize {
    let n = (2.0 * PI * f64::from(radius) / f64::from(spacing)).round() as usize;
    n.max(3)
}

fn rounded_distance(a: Point, b: Point) -> i32 {
    distance(a, b).round() as i32
}

/// Circle moved by a big central node and resized by any border point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NCircle {
    pub center: Point,
    pub radius: i32,
    /// Radius of each small border node.
    pub node_radius: i32,
    /// Target distance between neighbouring border nodes.
    pub spacing: i32,
    pub min_radius: i32,
}

impl NCircle {
    pub fn new(
        center: Point,
        radius: i32,
        node_radius: i32,
        spacing: i32,
        min_radius: i32,
    ) -> Result<Self, ShapeError> {
        let s = Self {
            center,
            radius,
            node_radius,
            spacing,
            min_radius,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        positive("node radius", self.node_radius)?;
        positive("node spacing", self.spacing)?;
        positive("minimum radius", self.min_radius)?;
        if self.min_radius < self.node_radius {
            return Err(ShapeError::RadiusBelowMinimum {
                radius: self.min_radius,
                min: self.node_radius,
            });
        }
        if self.radius < self.min_radius {
            return Err(ShapeError::RadiusBelowMinimum {
                radius: self.radius,
                min: self.min_radius,
            });
        }
        Ok(())
    }

    pub fn border_nodes(&self) -> usize {
        nodes_on_border(self.radius, self.spacing)
    }

    pub fn glyphs(&self) -> Vec<Glyph> {
        vec![Glyph::Circle {
            center: self.center,
            radius: self.radius,
        }]
    }

    pub fn bounds(&self) -> Bounds {
        let r = self.radius;
        Bounds {
            min: self.center + Delta::new(-r, -r),
            max: self.center + Delta::new(r, r),
        }
    }

    /// Set the radius from the mouse position. Accepted only when it differs
    /// from the current one and respects the minimum.
    pub fn resize_to(&mut self, mouse: Point) -> bool {
        let new_radius = rounded_distance(self.center, mouse);
        if new_radius != self.radius && new_radius >= self.min_radius {
            self.radius = new_radius;
            true
        } else {
            false
        }
    }
}

impl Moveable for NCircle {
    fn define_contour(&self) -> Contour {
        let n = self.border_nodes();
        let mut nodes = Vec::with_capacity(n + 1);
        nodes.push(
            Node::new(0, self.center)
                .with_cursor(CursorHint::SizeAll)
                .circle(self.radius - self.node_radius + 1),
        );
        for i in 1..=n {
            let angle = 2.0 * PI * (i - 1) as f64 / n as f64;
            let p = point_at(self.center, angle, f64::from(self.radius));
            nodes.push(Node::new(i, p).circle(self.node_radius).with_clearance(false));
        }
        Contour::explicit(nodes, None).expect("valid circle contour")
    }

    fn move_by(&mut self, d: Delta) {
        self.center += d;
    }

    fn move_contour_point(&mut self, i: usize, d: Delta, mouse: Point, button: MouseButton) -> bool {
        if button != MouseButton::Left {
            return false;
        }
        if i == 0 {
            if d.is_zero() {
                return false;
            }
            self.move_by(d);
            true
        } else {
            self.resize_to(mouse)
        }
    }
}

/// Node counts of a ring contour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingCounts {
    pub outer: usize,
    pub inner: usize,
    pub poly: usize,
}

impl RingCounts {
    pub fn border(&self) -> usize {
        self.outer + self.inner
    }

    pub fn total(&self) -> usize {
        self.outer + self.inner + self.poly
    }
}

/// Ring with both borders tiled by small nodes and the body covered by
/// trapezoids. Node counts stay frozen while a resize is running and are
/// recomputed only by [`NRing::redefine`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NRing {
    pub center: Point,
    pub r_inner: i32,
    pub r_outer: i32,
    pub node_radius: i32,
    pub spacing: i32,
    /// Counts pinned for the running gesture; `None` at rest.
    #[serde(skip)]
    frozen: Option<RingCounts>,
}

impl NRing {
    pub fn new(
        center: Point,
        r_inner: i32,
        r_outer: i32,
        node_radius: i32,
        spacing: i32,
    ) -> Result<Self, ShapeError> {
        let s = Self {
            center,
            r_inner,
            r_outer,
            node_radius,
            spacing,
            frozen: None,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        positive("ring inner radius", self.r_inner)?;
        positive("node radius", self.node_radius)?;
        positive("node spacing", self.spacing)?;
        if self.r_outer - self.r_inner < RING_MIN_GAP {
            return Err(ShapeError::RadiiOrder {
                inner: self.r_inner,
                outer: self.r_outer,
                gap: RING_MIN_GAP,
            });
        }
        Ok(())
    }

    /// Counts the current radii call for.
    pub fn counts_for_radii(&self) -> RingCounts {
        let outer = nodes_on_border(self.r_outer, self.spacing);
        let inner = nodes_on_border(self.r_inner, self.spacing);
        RingCounts {
            outer,
            inner,
            poly: outer / 2 + 1,
        }
    }

    /// Counts the contour is built with right now.
    pub fn counts(&self) -> RingCounts {
        self.frozen.unwrap_or_else(|| self.counts_for_radii())
    }

    pub fn is_resizing(&self) -> bool {
        self.frozen.is_some()
    }

    /// Recompute node counts from the current radii.
    pub fn redefine(&mut self) {
        self.frozen = None;
    }

    pub fn ratio(&self) -> f64 {
        f64::from(self.r_inner) / f64::from(self.r_outer)
    }

    pub fn glyphs(&self) -> Vec<Glyph> {
        vec![Glyph::Annulus {
            center: self.center,
            inner: self.r_inner,
            outer: self.r_outer,
        }]
    }

    pub fn bounds(&self) -> Bounds {
        let r = self.r_outer;
        Bounds {
            min: self.center + Delta::new(-r, -r),
            max: self.center + Delta::new(r, r),
        }
    }

    fn resize(&mut self, i: usize, mouse: Point) -> bool {
        let counts = self.counts();
        let wanted = rounded_distance(self.center, mouse);
        let (radius, r) = if i < counts.outer {
            (&mut self.r_outer, wanted.max(self.r_inner + RING_MIN_GAP))
        } else {
            (&mut self.r_inner, wanted.clamp(1, self.r_outer - RING_MIN_GAP))
        };
        if r == *radius {
            return false;
        }
        *radius = r;
        self.frozen = Some(counts);
        true
    }
}

impl Moveable for NRing {
    fn define_contour(&self) -> Contour {
        let counts = self.counts();
        let border = |n: usize, radius: i32| -> Vec<Point> {
            (0..n)
                .map(|i| point_at(self.center, 2.0 * PI * i as f64 / n as f64, f64::from(radius)))
                .collect()
        };
        let outer = border(counts.outer, self.r_outer);
        let inner = border(counts.inner, self.r_inner);
        let mut nodes = Vec::with_capacity(counts.total());
        for p in outer.iter().chain(&inner) {
            nodes.push(
                Node::new(nodes.len(), *p)
                    .circle(self.node_radius)
                    .with_clearance(false),
            );
        }
        let ratio = self.ratio();
        for i in 0..counts.poly {
            let j = (i * 2) % counts.outer;
            let p0_out = outer[j];
            let p1_out = outer[(j + 2) % counts.outer];
            let p0_in = point_on_line(self.center, p0_out, ratio);
            let p1_in = point_on_line(self.center, p1_out, ratio);
            nodes.push(
                Node::polygon(nodes.len(), vec![p0_in, p0_out, p1_out, p1_in]).with_clearance(false),
            );
        }
        Contour::explicit(nodes, None).expect("valid ring contour")
    }

    fn move_by(&mut self, d: Delta) {
        self.center += d;
    }

    fn move_contour_point(&mut self, i: usize, d: Delta, mouse: Point, button: MouseButton) -> bool {
        if button != MouseButton::Left {
            return false;
        }
        if i < self.counts().border() {
            self.resize(i, mouse)
        } else if d.is_zero() {
            false
        } else {
            self.move_by(d);
            true
        }
    }

    fn redefine_on_release(&mut self) {
        self.redefine();
    }
}
