use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{positive, Glyph, ShapeError};
use crate::contour::{Contour, Node};
use crate::geometry::{point_at, Bounds, Delta, Point};
use crate::moveable::{Moveable, MouseButton};

/// Regular polygon moved by its inscribed circle; no resizing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegularPolygon {
    pub center: Point,
    /// Radius of the inscribed circle.
    pub radius: i32,
    pub vertices: usize,
    /// Direction of the first vertex, radians counter-clockwise from +x.
    #[serde(default)]
    pub angle: f64,
}

impl RegularPolygon {
    pub fn new(center: Point, radius: i32, vertices: usize, angle: f64) -> Result<Self, ShapeError> {
        let s = Self {
            center,
            radius,
            vertices,
            angle,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        positive("polygon radius", self.radius)?;
        if self.vertices < 3 {
            return Err(ShapeError::TooFewVertices(self.vertices));
        }
        Ok(())
    }

    pub fn vertex_points(&self) -> Vec<Point> {
        let n = self.vertices as f64;
        let circumradius = f64::from(self.radius) / (PI / n).cos();
        (0..self.vertices)
            .map(|k| point_at(self.center, self.angle + 2.0 * PI * k as f64 / n, circumradius))
            .collect()
    }

    pub fn glyphs(&self) -> Vec<Glyph> {
        vec![Glyph::Polygon {
            vertices: self.vertex_points(),
        }]
    }

    pub fn bounds(&self) -> Bounds {
        Bounds::of_points(&self.vertex_points()).expect("polygon has vertices")
    }
}

impl Moveable for RegularPolygon {
    fn define_contour(&self) -> Contour {
        let node = Node::new(0, self.center).circle(self.radius);
        Contour::explicit(vec![node], None).expect("single node contour")
    }

    fn move_by(&mut self, d: Delta) {
        self.center += d;
    }

    fn move_contour_point(&mut self, _i: usize, d: Delta, _mouse: Point, button: MouseButton) -> bool {
        if button != MouseButton::Left || d.is_zero() {
            return false;
        }
        self.move_by(d);
        true
    }
}

/// Hexagonal screw-nut; six trapezoid polygon nodes fill the body.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScrewNut {
    pub center: Point,
    pub r_inner: i32,
    pub r_outer: i32,
    #[serde(default)]
    pub angle: f64,
}

impl ScrewNut {
    pub fn new(center: Point, r_inner: i32, r_outer: i32, angle: f64) -> Result<Self, ShapeError> {
        let s = Self {
            center,
            r_inner,
            r_outer,
            angle,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        positive("screw-nut inner radius", self.r_inner)?;
        if self.r_inner >= self.r_outer {
            return Err(ShapeError::RadiiOrder {
                inner: self.r_inner,
                outer: self.r_outer,
                gap: 1,
            });
        }
        Ok(())
    }

    fn hexagon(&self, radius: i32) -> Vec<Point> {
        (0..6)
            .map(|i| point_at(self.center, self.angle + 2.0 * PI * f64::from(i) / 6.0, f64::from(radius)))
            .collect()
    }

    pub fn inner_vertices(&self) -> Vec<Point> {
        self.hexagon(self.r_inner)
    }

    pub fn outer_vertices(&self) -> Vec<Point> {
        self.hexagon(self.r_outer)
    }

    pub fn glyphs(&self) -> Vec<Glyph> {
        vec![Glyph::HollowPolygon {
            outer: self.outer_vertices(),
            inner: self.inner_vertices(),
        }]
    }

    pub fn bounds(&self) -> Bounds {
        Bounds::of_points(&self.outer_vertices()).expect("hexagon")
    }
}

impl Moveable for ScrewNut {
    fn define_contour(&self) -> Contour {
        let inner = self.inner_vertices();
        let outer = self.outer_vertices();
        let nodes = (0..6)
            .map(|i| {
                let j = (i + 1) % 6;
                Node::polygon(i, vec![inner[i], inner[j], outer[j], outer[i]]).with_clearance(false)
            })
            .collect();
        Contour::explicit(nodes, None).expect("valid screw-nut contour")
    }

    fn move_by(&mut self, d: Delta) {
        self.center += d;
    }

    fn move_contour_point(&mut self, _i: usize, d: Delta, _mouse: Point, button: MouseButton) -> bool {
        if button != MouseButton::Left || d.is_zero() {
            return false;
        }
        self.move_by(d);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contour::{NodeArea, RenderPrimitive};

    #[test]
    fn triangle_has_one_circle_node() {
        let t = RegularPolygon::new(Point::new(200, 200), 50, 3, PI / 2.0).unwrap();
        let c = t.define_contour();
        assert_eq!(c.nodes().len(), 1);
        assert!(c.connections().is_empty());
        assert_eq!(c.nodes()[0].area, NodeArea::Circle { radius: 50 });
        let prims = c.render_primitives();
        assert_eq!(prims.len(), 1);
        assert!(matches!(prims[0], RenderPrimitive::Circle { .. }));
        // apex straight up at twice the inscribed radius
        assert_eq!(t.vertex_points()[0], Point::new(200, 100));
    }

    #[test]
    fn node_drag_moves_whole_polygon() {
        let mut t = RegularPolygon::new(Point::new(200, 200), 50, 3, 0.0).unwrap();
        assert!(t.move_contour_point(0, Delta::new(4, 4), Point::default(), MouseButton::Left));
        assert_eq!(t.center, Point::new(204, 204));
    }

    #[test]
    fn screw_nut_trapezoids_share_edges() {
        let s = ScrewNut::new(Point::new(0, 0), 30, 60, 0.0).unwrap();
        let c = s.define_contour();
        assert_eq!(c.nodes().len(), 6);
        assert!(c.connections().is_empty());
        let poly = |i: usize| match &c.nodes()[i].area {
            NodeArea::Polygon { vertices } => vertices.clone(),
            _ => panic!("polygon expected"),
        };
        for i in 0..6 {
            let next = poly((i + 1) % 6);
            let this = poly(i);
            assert_eq!(this[1], next[0]);
            assert_eq!(this[2], next[3]);
        }
        assert!(ScrewNut::new(Point::new(0, 0), 60, 30, 0.0).is_err());
    }
}
