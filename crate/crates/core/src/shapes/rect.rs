use serde::{Deserialize, Serialize};

use super::{
    corner_sides, drag_side_rejecting, eight_node_modes, eight_points, eight_sides, positive,
    rect_bounds, ContourResize, Glyph, ShapeError, Side,
};
use crate::contour::{Connection, Contour, CursorHint, MovementFreedom, Node};
use crate::geometry::{Bounds, Delta, Point, Rect};
use crate::moveable::{Moveable, MouseButton};

fn check_min_size(rect: &Rect, min_w: i32, min_h: i32) -> Result<(), ShapeError> {
    positive("min_w", min_w)?;
    positive("min_h", min_h)?;
    if rect.width < min_w || rect.height < min_h {
        return Err(ShapeError::BelowMinimum {
            width: rect.width,
            height: rect.height,
            min_w,
            min_h,
        });
    }
    Ok(())
}

fn drag_corner(rect: &mut Rect, i: usize, d: Delta, min_w: i32, min_h: i32) -> bool {
    let Some((horizontal, vertical)) = corner_sides(i) else {
        return false;
    };
    let v = drag_side_rejecting(rect, vertical, d.dy, min_h);
    let h = drag_side_rejecting(rect, horizontal, d.dx, min_w);
    v | h
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CornerStyle {
    /// Small squares pushed slightly outside each corner, explicit
    /// connections.
    #[default]
    ShiftedSquares,
    /// Enlarged circles exactly on the corners, auto-looped connections.
    CornerCircles,
}

/// Rectangle moved by its border and resized by its four corners.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectCorners {
    pub rect: Rect,
    pub min_w: i32,
    pub min_h: i32,
    #[serde(default)]
    pub style: CornerStyle,
}

impl RectCorners {
    pub const SHIFT: i32 = 3;
    pub const CIRCLE_RADIUS: i32 = 6;

    pub fn new(rect: Rect, min_w: i32, min_h: i32, style: CornerStyle) -> Result<Self, ShapeError> {
        let s = Self {
            rect,
            min_w,
            min_h,
            style,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        check_min_size(&self.rect, self.min_w, self.min_h)
    }

    pub fn glyphs(&self) -> Vec<Glyph> {
        vec![Glyph::Rect {
            rect: self.rect,
            label: None,
        }]
    }

    pub fn bounds(&self) -> Bounds {
        rect_bounds(&self.rect)
    }
}

impl Moveable for RectCorners {
    fn define_contour(&self) -> Contour {
        let rc = &self.rect;
        match self.style {
            CornerStyle::ShiftedSquares => {
                let shift = Self::SHIFT;
                // node 1 passes its shift separately, the others fold it into
                // the point; both forms are equivalent
                let nodes = vec![
                    Node::new(0, Point::new(rc.left - shift, rc.top - shift)),
                    Node::new(1, rc.right_top()).with_shift(Delta::new(shift, -shift)),
                    Node::new(2, Point::new(rc.right() + shift, rc.bottom() + shift)),
                    Node::new(3, Point::new(rc.left - shift, rc.bottom() + shift)),
                ];
                let cc = vec![
                    Connection::new(0, 1),
                    Connection::new(1, 2),
                    Connection::new(2, 3),
                    Connection::new(3, 0),
                ];
                Contour::explicit(nodes, Some(cc)).expect("valid rectangle contour")
            }
            CornerStyle::CornerCircles => {
                let nodes = [rc.left_top(), rc.right_top(), rc.right_bottom(), rc.left_bottom()]
                    .into_iter()
                    .enumerate()
                    .map(|(i, p)| Node::new(i, p).circle(Self::CIRCLE_RADIUS))
                    .collect();
                Contour::from_nodes(nodes).expect("valid rectangle contour")
            }
        }
    }

    fn move_by(&mut self, d: Delta) {
        self.rect.translate(d);
    }

    fn move_contour_point(&mut self, i: usize, d: Delta, _mouse: Point, button: MouseButton) -> bool {
        if button != MouseButton::Left {
            return false;
        }
        drag_corner(&mut self.rect, i, d, self.min_w, self.min_h)
    }
}

/// Rectangle with nodes at the corners and side middles; which of them
/// resize depends on [`ContourResize`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectEightNode {
    pub rect: Rect,
    pub min_w: i32,
    pub min_h: i32,
    pub resize: ContourResize,
}

impl RectEightNode {
    pub fn new(rect: Rect, min_w: i32, min_h: i32, resize: ContourResize) -> Result<Self, ShapeError> {
        let s = Self {
            rect,
            min_w,
            min_h,
            resize,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        check_min_size(&self.rect, self.min_w, self.min_h)
    }

    pub fn glyphs(&self) -> Vec<Glyph> {
        vec![Glyph::Rect {
            rect: self.rect,
            label: None,
        }]
    }

    pub fn bounds(&self) -> Bounds {
        rect_bounds(&self.rect)
    }
}

impl Moveable for RectEightNode {
    fn define_contour(&self) -> Contour {
        let modes = eight_node_modes(self.resize);
        let nodes = eight_points(&self.rect)
            .into_iter()
            .zip(modes)
            .enumerate()
            .map(|(i, (p, (freedom, cursor)))| {
                let node = Node::new(i, p).with_freedom(freedom).with_cursor(cursor);
                // non-moveable nodes stay in place with an empty area
                if freedom == MovementFreedom::None {
                    node.null_area()
                } else {
                    node
                }
            })
            .collect();
        Contour::from_nodes(nodes).expect("valid eight-node contour")
    }

    fn move_by(&mut self, d: Delta) {
        self.rect.translate(d);
    }

    fn move_contour_point(&mut self, i: usize, d: Delta, _mouse: Point, button: MouseButton) -> bool {
        if button != MouseButton::Left || i >= 8 {
            return false;
        }
        let freedom = eight_node_modes(self.resize)[i].0;
        let (horizontal, vertical) = eight_sides(i);
        let mut changed = false;
        if let Some(side) = vertical.filter(|_| freedom.allows_vertical()) {
            changed |= drag_side_rejecting(&mut self.rect, side, d.dy, self.min_h);
        }
        if let Some(side) = horizontal.filter(|_| freedom.allows_horizontal()) {
            changed |= drag_side_rejecting(&mut self.rect, side, d.dx, self.min_w);
        }
        changed
    }
}

/// Rectangle moved by any inner point through two enlarged square nodes
/// and one wide connection between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectSolidMove {
    pub rect: Rect,
}

impl RectSolidMove {
    pub fn new(rect: Rect) -> Result<Self, ShapeError> {
        let s = Self { rect };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        check_min_size(&self.rect, 2, 2)
    }

    pub fn glyphs(&self) -> Vec<Glyph> {
        vec![Glyph::Rect {
            rect: self.rect,
            label: None,
        }]
    }

    pub fn bounds(&self) -> Bounds {
        rect_bounds(&self.rect)
    }
}

impl Moveable for RectSolidMove {
    fn define_contour(&self) -> Contour {
        let rc = &self.rect;
        let half = rc.width.min(rc.height) / 2;
        let p0 = Point::new(rc.left + half, rc.top + half);
        let p1 = if rc.width >= rc.height {
            Point::new(rc.right() - 1 - half, p0.y)
        } else {
            Point::new(p0.x, rc.bottom() - 1 - half)
        };
        let nodes = [p0, p1]
            .into_iter()
            .enumerate()
            .map(|(i, p)| {
                Node::new(i, p)
                    .with_cursor(CursorHint::SizeAll)
                    .square(half)
                    .with_clearance(false)
            })
            .collect();
        let mut contour = Contour::explicit(nodes, Some(vec![Connection::new(0, 1)]))
            .expect("valid solid-move contour");
        contour.set_connections_sensitivity(half);
        contour
    }

    fn move_by(&mut self, d: Delta) {
        self.rect.translate(d);
    }

    fn move_contour_point(&mut self, _i: usize, d: Delta, _mouse: Point, button: MouseButton) -> bool {
        if button != MouseButton::Left || d.is_zero() {
            return false;
        }
        self.move_by(d);
        true
    }
}

/// Rectangle covered by a row (or column) of stand-alone square nodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectTiled {
    pub rect: Rect,
}

impl RectTiled {
    pub fn new(rect: Rect) -> Result<Self, ShapeError> {
        let s = Self { rect };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        check_min_size(&self.rect, 2, 2)
    }

    pub fn glyphs(&self) -> Vec<Glyph> {
        vec![Glyph::Rect {
            rect: self.rect,
            label: None,
        }]
    }

    pub fn bounds(&self) -> Bounds {
        rect_bounds(&self.rect)
    }

    /// Centers of equal squares laid side by side along the long axis. The
    /// last square is aligned with the far end, so only the last two may
    /// overlap. Returns the centers and the squares' half side.
    pub fn tile_centers(rc: &Rect) -> (Vec<Point>, i32) {
        let side = rc.width.min(rc.height);
        let half = side / 2;
        // a square of half side h spans 2h + 1 pixels
        let step = 2 * half + 1;
        let horizontal = rc.width >= rc.height;
        let (start, length) = if horizontal {
            (rc.left, rc.width)
        } else {
            (rc.top, rc.height)
        };
        let count = ((length + step - 1) / step).max(1);
        let mut along: Vec<i32> = (0..count).map(|k| start + half + k * step).collect();
        if count > 1 {
            along[count as usize - 1] = start + length - 1 - half;
        }
        let cross = if horizontal { rc.top + half } else { rc.left + half };
        let centers = along
            .into_iter()
            .map(|a| if horizontal { Point::new(a, cross) } else { Point::new(cross, a) })
            .collect();
        (centers, half)
    }
}

impl Moveable for RectTiled {
    fn define_contour(&self) -> Contour {
        let (centers, half) = Self::tile_centers(&self.rect);
        let nodes = centers
            .into_iter()
            .enumerate()
            .map(|(i, p)| Node::new(i, p).square(half).with_clearance(false))
            .collect();
        Contour::explicit(nodes, None).expect("valid tiled contour")
    }

    fn move_by(&mut self, d: Delta) {
        self.rect.translate(d);
    }

    fn move_contour_point(&mut self, _i: usize, d: Delta, _mouse: Point, button: MouseButton) -> bool {
        if button != MouseButton::Left || d.is_zero() {
            return false;
        }
        self.move_by(d);
        true
    }
}

/// Rectangle moved by any inner point and resized by any border point:
/// corner circles first, then border strips, then one interior polygon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectFull {
    pub rect: Rect,
    pub min_w: i32,
    pub min_h: i32,
}

impl RectFull {
    pub const STRIP_HALF: i32 = 3;
    pub const CORNER_RADIUS: i32 = 6;
    pub const INTERIOR_NODE: usize = 8;

    pub fn new(rect: Rect, min_w: i32, min_h: i32) -> Result<Self, ShapeError> {
        let s = Self { rect, min_w, min_h };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        check_min_size(&self.rect, self.min_w, self.min_h)
    }

    pub fn glyphs(&self) -> Vec<Glyph> {
        vec![Glyph::Rect {
            rect: self.rect,
            label: None,
        }]
    }

    pub fn bounds(&self) -> Bounds {
        rect_bounds(&self.rect)
    }
}

impl Moveable for RectFull {
    fn define_contour(&self) -> Contour {
        let rc = &self.rect;
        let h = Self::STRIP_HALF;
        let (l, t, r, b) = (rc.left, rc.top, rc.right(), rc.bottom());
        let corners = [
            (rc.left_top(), CursorHint::SizeNWSE),
            (rc.right_top(), CursorHint::SizeNESW),
            (rc.right_bottom(), CursorHint::SizeNWSE),
            (rc.left_bottom(), CursorHint::SizeNESW),
        ];
        let mut nodes: Vec<Node> = corners
            .into_iter()
            .enumerate()
            .map(|(i, (p, cursor))| Node::new(i, p).with_cursor(cursor).circle(Self::CORNER_RADIUS))
            .collect();
        let strips = [
            (
                vec![Point::new(l - h, t), Point::new(l + h, t), Point::new(l + h, b), Point::new(l - h, b)],
                MovementFreedom::WE,
                CursorHint::SizeWE,
            ),
            (
                vec![Point::new(l, t - h), Point::new(r, t - h), Point::new(r, t + h), Point::new(l, t + h)],
                MovementFreedom::NS,
                CursorHint::SizeNS,
            ),
            (
                vec![Point::new(r - h, t), Point::new(r + h, t), Point::new(r + h, b), Point::new(r - h, b)],
                MovementFreedom::WE,
                CursorHint::SizeWE,
            ),
            (
                vec![Point::new(l, b - h), Point::new(r, b - h), Point::new(r, b + h), Point::new(l, b + h)],
                MovementFreedom::NS,
                CursorHint::SizeNS,
            ),
        ];
        for (k, (poly, freedom, cursor)) in strips.into_iter().enumerate() {
            nodes.push(Node::polygon(4 + k, poly).with_freedom(freedom).with_cursor(cursor));
        }
        nodes.push(Node::polygon(
            Self::INTERIOR_NODE,
            vec![rc.left_top(), rc.right_top(), rc.right_bottom(), rc.left_bottom()],
        ));
        Contour::explicit(nodes, None).expect("valid full rectangle contour")
    }

    fn move_by(&mut self, d: Delta) {
        self.rect.translate(d);
    }

    fn move_contour_point(&mut self, i: usize, d: Delta, _mouse: Point, button: MouseButton) -> bool {
        if button != MouseButton::Left {
            return false;
        }
        let rc = &mut self.rect;
        match i {
            0..=3 => drag_corner(rc, i, d, self.min_w, self.min_h),
            4 => drag_side_rejecting(rc, Side::Left, d.dx, self.min_w),
            5 => drag_side_rejecting(rc, Side::Top, d.dy, self.min_h),
            6 => drag_side_rejecting(rc, Side::Right, d.dx, self.min_w),
            7 => drag_side_rejecting(rc, Side::Bottom, d.dy, self.min_h),
            Self::INTERIOR_NODE if !d.is_zero() => {
                rc.translate(d);
                true
            }
            _ => false,
        }
    }
}
