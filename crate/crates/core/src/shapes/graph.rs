use serde::{Deserialize, Serialize};

use super::{positive, Glyph, ShapeError};
use crate::contour::{Connection, Contour, Node};
use crate::geometry::{Bounds, Delta, Point};
use crate::moveable::{Moveable, MouseButton};

/// A graph: every vertex is a circular node of its own radius, every link
/// a connection. Vertices move one at a time; any link moves the whole.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphObject {
    pub points: Vec<Point>,
    pub radii: Vec<i32>,
    pub colors: Vec<String>,
    pub links: Vec<(usize, usize)>,
}

impl GraphObject {
    pub fn new(
        points: Vec<Point>,
        radii: Vec<i32>,
        colors: Vec<String>,
        links: Vec<(usize, usize)>,
    ) -> Result<Self, ShapeError> {
        let g = Self {
            points,
            radii,
            colors,
            links,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        let n = self.points.len();
        if n == 0 {
            return Err(ShapeError::EmptyGraph);
        }
        if self.radii.len() != n || self.colors.len() != n {
            return Err(ShapeError::GraphLengths {
                points: n,
                radii: self.radii.len(),
                colors: self.colors.len(),
            });
        }
        for &r in &self.radii {
            positive("graph node radius", r)?;
        }
        for (index, &(a, b)) in self.links.iter().enumerate() {
            if a >= n || b >= n || a == b {
                return Err(ShapeError::BadLink {
                    index,
                    a,
                    b,
                    points: n,
                });
            }
        }
        Ok(())
    }

    pub fn glyphs(&self) -> Vec<Glyph> {
        let mut out: Vec<Glyph> = self
            .links
            .iter()
            .map(|&(a, b)| Glyph::Segment {
                from: self.points[a],
                to: self.points[b],
            })
            .collect();
        out.extend(self.points.iter().zip(&self.radii).zip(&self.colors).map(
            |((&center, &radius), color)| Glyph::Disc {
                center,
                radius,
                color: color.clone(),
            },
        ));
        out
    }

    pub fn bounds(&self) -> Bounds {
        self.points
            .iter()
            .zip(&self.radii)
            .map(|(&p, &r)| Bounds {
                min: p + Delta::new(-r, -r),
                max: p + Delta::new(r, r),
            })
            .reduce(Bounds::union)
            .expect("graph has points")
    }
}

impl Moveable for GraphObject {
    fn define_contour(&self) -> Contour {
        let nodes = self
            .points
            .iter()
            .zip(&self.radii)
            .enumerate()
            .map(|(i, (&p, &r))| Node::new(i, p).circle(r))
            .collect();
        let links = self.links.iter().map(|&(a, b)| Connection::new(a, b)).collect();
        Contour::explicit(nodes, Some(links)).expect("validated graph")
    }

    fn move_by(&mut self, d: Delta) {
        for p in &mut self.points {
            *p += d;
        }
    }

    fn move_contour_point(&mut self, i: usize, d: Delta, _mouse: Point, button: MouseButton) -> bool {
        if button != MouseButton::Left || d.is_zero() {
            return false;
        }
        match self.points.get_mut(i) {
            Some(p) => {
                *p += d;
                true
            }
            None => false,
        }
    }
}
