//! The case-study objects: rectangles with several contour designs, a
//! graph, a regular polygon, a screw-nut, N-node circle and ring, and a
//! stand-in for a rectangular control.
//!
//! [`Shape`] is the closed set of everything a scene can hold; it forwards
//! the [`Moveable`] contract to the concrete type and is what scene files
//! serialize.

mod circle;
mod control;
mod graph;
mod polygon;
mod rect;

pub use circle::{NCircle, NRing, RING_MIN_GAP};
pub use control::{ControlStub, SizeLimits};
pub use graph::GraphObject;
pub use polygon::{RegularPolygon, ScrewNut};
pub use rect::{CornerStyle, RectCorners, RectEightNode, RectFull, RectSolidMove, RectTiled};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::contour::{Contour, CursorHint, MovementFreedom};
use crate::geometry::{Bounds, Delta, Point, Rect};
use crate::moveable::{Moveable, MouseButton};
use crate::mover::EntryKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("{what} must be positive, got {value}")]
    NotPositive { what: &'static str, value: i32 },
    #[error("rectangle {width}x{height} is below its minimum size {min_w}x{min_h}")]
    BelowMinimum {
        width: i32,
        height: i32,
        min_w: i32,
        min_h: i32,
    },
    #[error("size limits are inconsistent: width {min_w}..{max_w}, height {min_h}..{max_h}")]
    BadLimits {
        min_w: i32,
        max_w: i32,
        min_h: i32,
        max_h: i32,
    },
    #[error("control {width}x{height} lies outside its size limits")]
    OutsideLimits { width: i32, height: i32 },
    #[error("inner radius {inner} must be below outer radius {outer} by at least {gap}")]
    RadiiOrder { inner: i32, outer: i32, gap: i32 },
    #[error("circle radius {radius} is below its minimum {min}")]
    RadiusBelowMinimum { radius: i32, min: i32 },
    #[error("regular polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("graph point, radius and colour lists differ in length ({points}, {radii}, {colors})")]
    GraphLengths {
        points: usize,
        radii: usize,
        colors: usize,
    },
    #[error("graph link {index} ({a}, {b}) is invalid for {points} points")]
    BadLink {
        index: usize,
        a: usize,
        b: usize,
        points: usize,
    },
    #[error("graph needs at least one point")]
    EmptyGraph,
}

pub(crate) fn positive(what: &'static str, value: i32) -> Result<(), ShapeError> {
    if value > 0 {
        Ok(())
    } else {
        Err(ShapeError::NotPositive { what, value })
    }
}

/// Which resizing directions a rectangle with an eight-node contour allows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum ContourResize {
    None,
    NS,
    WE,
    #[default]
    Any,
}

/// Shape-layer drawing instructions. Contours are drawn separately from
/// [`RenderPrimitive`](crate::contour::RenderPrimitive)s.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Glyph {
    Rect {
        rect: Rect,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        label: Option<String>,
    },
    Polygon {
        vertices: Vec<Point>,
    },
    /// Polygon with a polygonal hole (even-odd fill).
    HollowPolygon {
        outer: Vec<Point>,
        inner: Vec<Point>,
    },
    Circle {
        center: Point,
        radius: i32,
    },
    Annulus {
        center: Point,
        inner: i32,
        outer: i32,
    },
    Segment {
        from: Point,
        to: Point,
    },
    Disc {
        center: Point,
        radius: i32,
        color: String,
    },
}

/// Sides of a rectangle a node can drag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Side {
    Left,
    Top,
    Right,
    Bottom,
}

/// Move one side by `amount` (along its axis) unless the rectangle would
/// become smaller than `min`. Returns whether the side moved.
pub(crate) fn drag_side_rejecting(rc: &mut Rect, side: Side, amount: i32, min: i32) -> bool {
    if amount == 0 {
        return false;
    }
    match side {
        Side::Top if rc.height - amount >= min => {
            rc.top += amount;
            rc.height -= amount;
        }
        Side::Bottom if rc.height + amount >= min => rc.height += amount,
        Side::Left if rc.width - amount >= min => {
            rc.left += amount;
            rc.width -= amount;
        }
        Side::Right if rc.width + amount >= min => rc.width += amount,
        _ => return false,
    }
    true
}

/// Move one side by `amount`, clamping the resulting size into
/// `[min, max]`. Returns whether the rectangle changed.
pub(crate) fn drag_side_clamped(rc: &mut Rect, side: Side, amount: i32, min: i32, max: i32) -> bool {
    let before = *rc;
    match side {
        Side::Top => {
            let h = (rc.height - amount).clamp(min, max);
            rc.top += rc.height - h;
            rc.height = h;
        }
        Side::Bottom => rc.height = (rc.height + amount).clamp(min, max),
        Side::Left => {
            let w = (rc.width - amount).clamp(min, max);
            rc.left += rc.width - w;
            rc.width = w;
        }
        Side::Right => rc.width = (rc.width + amount).clamp(min, max),
    }
    *rc != before
}

/// The sides dragged by a corner node of a four-corner contour
/// (`0` left-top, then clockwise).
pub(crate) fn corner_sides(i: usize) -> Option<(Side, Side)> {
    match i {
        0 => Some((Side::Left, Side::Top)),
        1 => Some((Side::Right, Side::Top)),
        2 => Some((Side::Right, Side::Bottom)),
        3 => Some((Side::Left, Side::Bottom)),
        _ => None,
    }
}

/// Eight-node layout shared by [`RectEightNode`] and [`ControlStub`]:
/// corners and side middles, starting at the left-top corner, clockwise.
pub(crate) fn eight_points(rc: &Rect) -> [Point; 8] {
    let (l, t, r, b) = (rc.left, rc.top, rc.right(), rc.bottom());
    let (cx, cy) = (l + rc.width / 2, t + rc.height / 2);
    [
        Point::new(l, t),
        Point::new(cx, t),
        Point::new(r, t),
        Point::new(r, cy),
        Point::new(r, b),
        Point::new(cx, b),
        Point::new(l, b),
        Point::new(l, cy),
    ]
}

/// Horizontal and vertical side dragged by each of the eight nodes.
pub(crate) fn eight_sides(i: usize) -> (Option<Side>, Option<Side>) {
    match i {
        0 => (Some(Side::Left), Some(Side::Top)),
        1 => (None, Some(Side::Top)),
        2 => (Some(Side::Right), Some(Side::Top)),
        3 => (Some(Side::Right), None),
        4 => (Some(Side::Right), Some(Side::Bottom)),
        5 => (None, Some(Side::Bottom)),
        6 => (Some(Side::Left), Some(Side::Bottom)),
        7 => (Some(Side::Left), None),
        _ => (None, None),
    }
}

/// Freedom and cursor of each of the eight nodes for a resize mode.
pub(crate) fn eight_node_modes(resize: ContourResize) -> [(MovementFreedom, CursorHint); 8] {
    use CursorHint as C;
    use MovementFreedom as F;
    match resize {
        ContourResize::Any => [
            (F::Any, C::SizeNWSE),
            (F::NS, C::SizeNS),
            (F::Any, C::SizeNESW),
            (F::WE, C::SizeWE),
            (F::Any, C::SizeNWSE),
            (F::NS, C::SizeNS),
            (F::Any, C::SizeNESW),
            (F::WE, C::SizeWE),
        ],
        ContourResize::NS => {
            let mut m = [(F::NS, C::SizeNS); 8];
            m[3] = (F::None, C::SizeAll);
            m[7] = (F::None, C::SizeAll);
            m
        }
        ContourResize::WE => {
            let mut m = [(F::WE, C::SizeWE); 8];
            m[1] = (F::None, C::SizeAll);
            m[5] = (F::None, C::SizeAll);
            m
        }
        ContourResize::None => [(F::None, C::SizeAll); 8],
    }
}

/// Every object a scene can hold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Shape {
    RectCorners(RectCorners),
    RectEightNode(RectEightNode),
    Graph(GraphObject),
    RegularPolygon(RegularPolygon),
    RectSolidMove(RectSolidMove),
    RectTiled(RectTiled),
    ScrewNut(ScrewNut),
    RectFull(RectFull),
    NCircle(NCircle),
    NRing(NRing),
    ControlStub(ControlStub),
}

macro_rules! each_shape {
    ($self:expr, $s:ident => $body:expr) => {
        match $self {
            Shape::RectCorners($s) => $body,
            Shape::RectEightNode($s) => $body,
            Shape::Graph($s) => $body,
            Shape::RegularPolygon($s) => $body,
            Shape::RectSolidMove($s) => $body,
            Shape::RectTiled($s) => $body,
            Shape::ScrewNut($s) => $body,
            Shape::RectFull($s) => $body,
            Shape::NCircle($s) => $body,
            Shape::NRing($s) => $body,
            Shape::ControlStub($s) => $body,
        }
    };
}

impl Shape {
    pub fn type_tag(&self) -> &'static str {
        match self {
            Shape::RectCorners(_) => "rect_corners",
            Shape::RectEightNode(_) => "rect_eight_node",
            Shape::Graph(_) => "graph",
            Shape::RegularPolygon(_) => "regular_polygon",
            Shape::RectSolidMove(_) => "rect_solid_move",
            Shape::RectTiled(_) => "rect_tiled",
            Shape::ScrewNut(_) => "screw_nut",
            Shape::RectFull(_) => "rect_full",
            Shape::NCircle(_) => "n_circle",
            Shape::NRing(_) => "n_ring",
            Shape::ControlStub(_) => "control_stub",
        }
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        each_shape!(self, s => s.validate())
    }

    pub fn glyphs(&self) -> Vec<Glyph> {
        each_shape!(self, s => s.glyphs())
    }

    /// Extent of the drawn object (not of its contour).
    pub fn bounds(&self) -> Bounds {
        each_shape!(self, s => s.bounds())
    }

    pub fn is_control(&self) -> bool {
        matches!(self, Shape::ControlStub(_))
    }
}

impl Moveable for Shape {
    fn define_contour(&self) -> Contour {
        each_shape!(self, s => s.define_contour())
    }

    fn move_by(&mut self, d: Delta) {
        each_shape!(self, s => s.move_by(d))
    }

    fn move_contour_point(&mut self, node: usize, d: Delta, mouse: Point, button: MouseButton) -> bool {
        each_shape!(self, s => s.move_contour_point(node, d, mouse, button))
    }

    fn redefine_on_release(&mut self) {
        each_shape!(self, s => s.redefine_on_release())
    }

    fn entry_kind(&self) -> EntryKind {
        each_shape!(self, s => s.entry_kind())
    }
}

macro_rules! impl_from_shape {
    ($($variant:ident($ty:ty)),* $(,)?) => {
        $(impl From<$ty> for Shape {
            fn from(s: $ty) -> Self {
                Shape::$variant(s)
            }
        })*
    };
}

impl_from_shape!(
    RectCorners(RectCorners),
    RectEightNode(RectEightNode),
    Graph(GraphObject),
    RegularPolygon(RegularPolygon),
    RectSolidMove(RectSolidMove),
    RectTiled(RectTiled),
    ScrewNut(ScrewNut),
    RectFull(RectFull),
    NCircle(NCircle),
    NRing(NRing),
    ControlStub(ControlStub),
);

pub(crate) fn rect_bounds(rc: &Rect) -> Bounds {
    Bounds {
        min: rc.left_top(),
        max: rc.right_bottom(),
    }
}
