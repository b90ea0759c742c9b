use serde::{Deserialize, Serialize};

use super::{
    drag_side_clamped, eight_node_modes, eight_points, eight_sides, rect_bounds, ContourResize,
    Glyph, ShapeError,
};
use crate::contour::{Connection, Contour, MovementFreedom, Node};
use crate::geometry::{Bounds, Delta, Point, Rect};
use crate::moveable::{Moveable, MouseButton};
use crate::mover::EntryKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SizeLimits {
    pub min_w: i32,
    pub max_w: i32,
    pub min_h: i32,
    pub max_h: i32,
}

impl SizeLimits {
    pub fn new(min_w: i32, max_w: i32, min_h: i32, max_h: i32) -> Self {
        Self {
            min_w,
            max_w,
            min_h,
            max_h,
        }
    }

    pub fn admits(&self, width: i32, height: i32) -> bool {
        (self.min_w..=self.max_w).contains(&width) && (self.min_h..=self.max_h).contains(&height)
    }
}

/// A rectangular control stand-in. Its inside belongs to the control, so
/// the contour lives on the border only: corner squares, growing
/// mid-side strips and connections along the edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ControlStub {
    pub id: String,
    pub rect: Rect,
    pub resize: ContourResize,
    pub limits: SizeLimits,
}

impl ControlStub {
    pub const CORNER_HALF: i32 = 5;
    pub const STRIP_HALF: i32 = 3;
    pub const MID_MIN_LENGTH: i32 = 12;

    pub fn new(
        id: impl Into<String>,
        rect: Rect,
        resize: ContourResize,
        limits: SizeLimits,
    ) -> Result<Self, ShapeError> {
        let s = Self {
            id: id.into(),
            rect,
            resize,
            limits,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        let l = self.limits;
        if l.min_w < 1 || l.min_h < 1 || l.min_w > l.max_w || l.min_h > l.max_h {
            return Err(ShapeError::BadLimits {
                min_w: l.min_w,
                max_w: l.max_w,
                min_h: l.min_h,
                max_h: l.max_h,
            });
        }
        if !l.admits(self.rect.width, self.rect.height) {
            return Err(ShapeError::OutsideLimits {
                width: self.rect.width,
                height: self.rect.height,
            });
        }
        Ok(())
    }

    /// Length of a mid-side strip for a side of `side` pixels.
    pub fn mid_length(side: i32) -> i32 {
        (side / 4).max(Self::MID_MIN_LENGTH)
    }

    fn mid_strip(&self, i: usize, mid: Point) -> Vec<Point> {
        let t = Self::STRIP_HALF;
        let horizontal_side = i == 1 || i == 5;
        let half_len = if horizontal_side {
            Self::mid_length(self.rect.width) / 2
        } else {
            Self::mid_length(self.rect.height) / 2
        };
        let (hx, hy) = if horizontal_side { (half_len, t) } else { (t, half_len) };
        vec![
            Point::new(mid.x - hx, mid.y - hy),
            Point::new(mid.x + hx, mid.y - hy),
            Point::new(mid.x + hx, mid.y + hy),
            Point::new(mid.x - hx, mid.y + hy),
        ]
    }

    pub fn glyphs(&self) -> Vec<Glyph> {
        vec![Glyph::Rect {
            rect: self.rect,
            label: Some(self.id.clone()),
        }]
    }

    pub fn bounds(&self) -> Bounds {
        rect_bounds(&self.rect)
    }
}

impl Moveable for ControlStub {
    fn define_contour(&self) -> Contour {
        let modes = eight_node_modes(self.resize);
        let nodes = eight_points(&self.rect)
            .into_iter()
            .zip(modes)
            .enumerate()
            .map(|(i, (p, (freedom, cursor)))| {
                let node = if i % 2 == 0 {
                    Node::new(i, p).square(Self::CORNER_HALF)
                } else {
                    Node::polygon(i, self.mid_strip(i, p)).with_anchor(p)
                };
                let node = node.with_freedom(freedom).with_cursor(cursor);
                if freedom == MovementFreedom::None {
                    node.null_area()
                } else {
                    node
                }
            })
            .collect();
        let border = vec![
            Connection::new(0, 2),
            Connection::new(2, 4),
            Connection::new(4, 6),
            Connection::new(6, 0),
        ];
        Contour::explicit(nodes, Some(border)).expect("valid control contour")
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
        let l = self.limits;
        let mut changed = false;
        if let Some(side) = vertical.filter(|_| freedom.allows_vertical()) {
            changed |= drag_side_clamped(&mut self.rect, side, d.dy, l.min_h, l.max_h);
        }
        if let Some(side) = horizontal.filter(|_| freedom.allows_horizontal()) {
            changed |= drag_side_clamped(&mut self.rect, side, d.dx, l.min_w, l.max_w);
        }
        changed
    }

    fn entry_kind(&self) -> EntryKind {
        EntryKind::Control {
            resize: self.resize,
            limits: self.limits,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contour::{HitResult, RenderPrimitive};

    fn list_view(resize: ContourResize) -> ControlStub {
        ControlStub::new(
            "listInfo",
            Rect::new(100, 100, 250, 80),
            resize,
            SizeLimits::new(250, 500, 80, 240),
        )
        .unwrap()
    }

    #[test]
    fn any_mode_has_eight_handles() {
        let c = list_view(ContourResize::Any).define_contour();
        assert_eq!(c.nodes().iter().filter(|n| n.is_active()).count(), 8);
        assert_eq!(c.connections().len(), 4);
        // interior is not sensitive
        assert_eq!(c.hit_test(Point::new(225, 140)), HitResult::Miss);
        // border away from the handles moves the control
        assert!(matches!(c.hit_test(Point::new(130, 101)), HitResult::Connection { .. }));
        assert!(matches!(c.hit_test(Point::new(225, 100)), HitResult::Node { index: 1, .. }));
    }

    #[test]
    fn none_mode_moves_by_border_only() {
        let c = list_view(ContourResize::None).define_contour();
        assert!(c.nodes().iter().all(|n| !n.is_active()));
        let prims = c.render_primitives();
        assert!(prims.iter().all(|p| matches!(p, RenderPrimitive::Line { .. })));
        assert!(matches!(c.hit_test(Point::new(100, 100)), HitResult::Connection { .. }));
    }

    #[test]
    fn ns_mode_keeps_all_corners() {
        let c = list_view(ContourResize::NS).define_contour();
        for i in [0, 2, 4, 6] {
            assert!(c.nodes()[i].is_active());
        }
        assert!(!c.nodes()[3].is_active());
        assert!(!c.nodes()[7].is_active());
    }

    #[test]
    fn mid_strips_grow_with_size() {
        assert!(ControlStub::mid_length(500) > ControlStub::mid_length(250));
    }

    #[test]
    fn resizing_is_clamped() {
        let mut s = list_view(ContourResize::Any);
        assert!(s.move_contour_point(3, Delta::new(400, 0), Point::default(), MouseButton::Left));
        assert_eq!(s.rect.width, 500);
        assert!(!s.move_contour_point(3, Delta::new(10, 0), Point::default(), MouseButton::Left));
        assert!(s.move_contour_point(0, Delta::new(0, -500), Point::default(), MouseButton::Left));
        assert_eq!(s.rect.height, 240);
        assert_eq!(s.rect.bottom(), 180);
    }

    #[test]
    fn registration_must_fit_limits() {
        let err = ControlStub::new(
            "x",
            Rect::new(0, 0, 100, 80),
            ContourResize::Any,
            SizeLimits::new(250, 500, 80, 240),
        );
        assert!(matches!(err, Err(ShapeError::OutsideLimits { .. })));
    }
}
