//! Contours: the sensitive nodes and connections attached to an object.
//!
//! A [`Mover`](crate::mover::Mover) never looks at the objects themselves,
//! only at their contours. Nodes start resizing or reconfiguring (or, when
//! enlarged, moving); connections are strips between two node centers that
//! move the whole object.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{dist_to_segment, distance, point_in_polygon, Bounds, Delta, Point};

pub const DEFAULT_SQUARE_HALF_SIDE: i32 = 3;
pub const DEFAULT_CIRCLE_RADIUS: i32 = 5;
pub const DEFAULT_CONNECTION_SENSITIVITY: i32 = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContourError {
    #[error("a contour needs at least one node")]
    NoNodes,
    #[error("node at position {position} has id {id}; ids must equal list positions")]
    IdMismatch { position: usize, id: usize },
    #[error("node {0}: sense area size must be at least 1")]
    BadAreaSize(usize),
    #[error("node {0}: polygon area needs at least 3 vertices")]
    BadPolygon(usize),
    #[error("connection {index} ({a}, {b}) references a missing node (contour has {nodes})")]
    DanglingConnection {
        index: usize,
        a: usize,
        b: usize,
        nodes: usize,
    },
    #[error("connection {0} joins a node to itself")]
    SelfConnection(usize),
    #[error("connection {0}: sensitivity must be at least 1")]
    BadSensitivity(usize),
    #[error("node index {index} out of range (contour has {nodes})")]
    NodeIndex { index: usize, nodes: usize },
}

/// Which individual movements a node allows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum MovementFreedom {
    None,
    /// Vertical only.
    NS,
    /// Horizontal only.
    WE,
    #[default]
    Any,
}

impl MovementFreedom {
    /// Project a delta onto the directions this freedom permits.
    pub fn constrain(self, d: Delta) -> Delta {
        match self {
            MovementFreedom::None => Delta::ZERO,
            MovementFreedom::NS => Delta::new(0, d.dy),
            MovementFreedom::WE => Delta::new(d.dx, 0),
            MovementFreedom::Any => d,
        }
    }

    pub fn allows_vertical(self) -> bool {
        matches!(self, MovementFreedom::NS | MovementFreedom::Any)
    }

    pub fn allows_horizontal(self) -> bool {
        matches!(self, MovementFreedom::WE | MovementFreedom::Any)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum CursorHint {
    Hand,
    SizeAll,
    SizeNS,
    SizeWE,
    SizeNWSE,
    SizeNESW,
    #[default]
    Default,
}

impl CursorHint {
    /// CSS cursor keyword used by browser front ends.
    pub fn css_name(self) -> &'static str {
        match self {
            CursorHint::Hand => "pointer",
            CursorHint::SizeAll => "move",
            CursorHint::SizeNS => "ns-resize",
            CursorHint::SizeWE => "ew-resize",
            CursorHint::SizeNWSE => "nwse-resize",
            CursorHint::SizeNESW => "nesw-resize",
            CursorHint::Default => "default",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NodeArea {
    Null,
    Square { half_side: i32 },
    Circle { radius: i32 },
    Polygon { vertices: Vec<Point> },
}

/// One sensitive area of a contour.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Node {
    pub id: usize,
    /// The real point on the object this node is associated with.
    pub anchor: Point,
    /// Offset from the anchor to the middle of the sensitive area.
    pub shift: Delta,
    pub area: NodeArea,
    pub freedom: MovementFreedom,
    pub cursor: CursorHint,
    /// Drawn background-filled when contours are shown.
    pub clearance: bool,
}

impl Node {
    /// Square node with the library defaults: no shift, free movement,
    /// hand cursor.
    pub fn new(id: usize, anchor: Point) -> Self {
        Self {
            id,
            anchor,
            shift: Delta::ZERO,
            area: NodeArea::Square {
                half_side: DEFAULT_SQUARE_HALF_SIDE,
            },
            freedom: MovementFreedom::Any,
            cursor: CursorHint::Hand,
            clearance: true,
        }
    }

    /// Polygon node. The anchor defaults to the vertex centroid, the cursor
    /// to `SizeAll` since such nodes are mostly used for moving.
    pub fn polygon(id: usize, vertices: Vec<Point>) -> Self {
        let anchor = centroid(&vertices);
        Self {
            id,
            anchor,
            shift: Delta::ZERO,
            area: NodeArea::Polygon { vertices },
            freedom: MovementFreedom::Any,
            cursor: CursorHint::SizeAll,
            clearance: true,
        }
    }

    pub fn with_shift(mut self, shift: Delta) -> Self {
        self.shift = shift;
        self
    }

    pub fn with_freedom(mut self, freedom: MovementFreedom) -> Self {
        self.freedom = freedom;
        self
    }

    pub fn with_cursor(mut self, cursor: CursorHint) -> Self {
        self.cursor = cursor;
        self
    }

    pub fn with_anchor(mut self, anchor: Point) -> Self {
        self.anchor = anchor;
        self
    }

    pub fn square(mut self, half_side: i32) -> Self {
        self.area = NodeArea::Square { half_side };
        self
    }

    pub fn circle(mut self, radius: i32) -> Self {
        self.area = NodeArea::Circle { radius };
        self
    }

    pub fn null_area(mut self) -> Self {
        self.area = NodeArea::Null;
        self
    }

    pub fn with_clearance(mut self, clearance: bool) -> Self {
        self.clearance = clearance;
        self
    }

    pub fn center(&self) -> Point {
        self.anchor + self.shift
    }

    /// True when the node can be caught at all.
    pub fn is_active(&self) -> bool {
        !matches!(self.area, NodeArea::Null) && self.freedom != MovementFreedom::None
    }

    pub fn contains(&self, p: Point) -> bool {
        let c = self.center();
        match &self.area {
            NodeArea::Null => false,
            NodeArea::Square { half_side } => {
                (p.x - c.x).abs() <= *half_side && (p.y - c.y).abs() <= *half_side
            }
            NodeArea::Circle { radius } => distance(p, c) <= f64::from(*radius),
            NodeArea::Polygon { vertices } => point_in_polygon(p, vertices).unwrap_or(false),
        }
    }

    pub fn bounds(&self) -> Bounds {
        let c = self.center();
        match &self.area {
            NodeArea::Null => Bounds::around(c),
            NodeArea::Square { half_side: h } | NodeArea::Circle { radius: h } => Bounds {
                min: c + Delta::new(-h, -h),
                max: c + Delta::new(*h, *h),
            },
            NodeArea::Polygon { vertices } => {
                Bounds::of_points(vertices).unwrap_or_else(|| Bounds::around(c))
            }
        }
    }

    fn validate(&self, position: usize) -> Result<(), ContourError> {
        if self.id != position {
            return Err(ContourError::IdMismatch {
                position,
                id: self.id,
            });
        }
        match &self.area {
            NodeArea::Square { half_side: s } | NodeArea::Circle { radius: s } if *s < 1 => {
                Err(ContourError::BadAreaSize(position))
            }
            NodeArea::Polygon { vertices } if vertices.len() < 3 => {
                Err(ContourError::BadPolygon(position))
            }
            _ => Ok(()),
        }
    }
}

fn centroid(vertices: &[Point]) -> Point {
    if vertices.is_empty() {
        return Point::default();
    }
    let n = vertices.len() as i64;
    let sx: i64 = vertices.iter().map(|p| i64::from(p.x)).sum();
    let sy: i64 = vertices.iter().map(|p| i64::from(p.y)).sum();
    Point::new((sx / n) as i32, (sy / n) as i32)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Connection {
    pub a: usize,
    pub b: usize,
    /// Maximum distance from the segment at which the strip can be grabbed.
    pub sensitivity: i32,
}

impl Connection {
    pub fn new(a: usize, b: usize) -> Self {
        Self::with_sensitivity(a, b, DEFAULT_CONNECTION_SENSITIVITY)
    }

    pub fn with_sensitivity(a: usize, b: usize, sensitivity: i32) -> Self {
        Self { a, b, sensitivity }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HitResult {
    Miss,
    Node { index: usize, cursor: CursorHint },
    Connection { index: usize, cursor: CursorHint },
}

/// Outline primitives for drawing a contour.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RenderPrimitive {
    Line {
        from: Point,
        to: Point,
    },
    Square {
        center: Point,
        half_side: i32,
        background_fill: bool,
    },
    Circle {
        center: Point,
        radius: i32,
        background_fill: bool,
    },
    Polygon {
        vertices: Vec<Point>,
        background_fill: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Contour {
    nodes: Vec<Node>,
    connections: Vec<Connection>,
    default_sensitivity: i32,
}

impl Contour {
    /// Nodes joined into a closed loop `0-1, 1-2, …, (n-1)-0`. A single
    /// node gets no connection.
    pub fn from_nodes(nodes: Vec<Node>) -> Result<Self, ContourError> {
        let n = nodes.len();
        let connections = if n < 2 {
            Vec::new()
        } else {
            (0..n).map(|i| Connection::new(i, (i + 1) % n)).collect()
        };
        Self::build(nodes, connections)
    }

    /// Nodes with exactly the given connections; `None` means the contour
    /// has no connections at all.
    pub fn explicit(
        nodes: Vec<Node>,
        connections: Option<Vec<Connection>>,
    ) -> Result<Self, ContourError> {
        Self::build(nodes, connections.unwrap_or_default())
    }

    fn build(nodes: Vec<Node>, connections: Vec<Connection>) -> Result<Self, ContourError> {
        if nodes.is_empty() {
            return Err(ContourError::NoNodes);
        }
        for (i, node) in nodes.iter().enumerate() {
            node.validate(i)?;
        }
        for (index, c) in connections.iter().enumerate() {
            if c.a >= nodes.len() || c.b >= nodes.len() {
                return Err(ContourError::DanglingConnection {
                    index,
                    a: c.a,
                    b: c.b,
                    nodes: nodes.len(),
                });
            }
            if c.a == c.b {
                return Err(ContourError::SelfConnection(index));
            }
            if c.sensitivity < 1 {
                return Err(ContourError::BadSensitivity(index));
            }
        }
        Ok(Self {
            nodes,
            connections,
            default_sensitivity: DEFAULT_CONNECTION_SENSITIVITY,
        })
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn connections(&self) -> &[Connection] {
        &self.connections
    }

    pub fn connections_sensitivity(&self) -> i32 {
        self.default_sensitivity
    }

    /// Set one sensitivity for every connection of the contour.
    pub fn set_connections_sensitivity(&mut self, sensitivity: i32) {
        let sensitivity = sensitivity.max(1);
        self.default_sensitivity = sensitivity;
        for c in &mut self.connections {
            c.sensitivity = sensitivity;
        }
    }

    pub fn set_connection_sensitivity(
        &mut self,
        index: usize,
        sensitivity: i32,
    ) -> Option<()> {
        self.connections.get_mut(index)?.sensitivity = sensitivity.max(1);
        Some(())
    }

    pub fn node(&self, index: usize) -> Result<&Node, ContourError> {
        self.nodes.get(index).ok_or(ContourError::NodeIndex {
            index,
            nodes: self.nodes.len(),
        })
    }

    pub fn node_freedom(&self, index: usize) -> Result<MovementFreedom, ContourError> {
        self.node(index).map(|n| n.freedom)
    }

    pub fn connection_contains(&self, c: &Connection, p: Point) -> bool {
        let a = self.nodes[c.a].center();
        let b = self.nodes[c.b].center();
        dist_to_segment(p, a, b) <= f64::from(c.sensitivity)
    }

    /// Nodes first, in list order, then connections in list order.
    pub fn hit_test(&self, p: Point) -> HitResult {
        if let Some((index, node)) = self
            .nodes
            .iter()
            .enumerate()
            .find(|(_, n)| n.is_active() && n.contains(p))
        {
            return HitResult::Node {
                index,
                cursor: node.cursor,
            };
        }
        match self
            .connections
            .iter()
            .position(|c| self.connection_contains(c, p))
        {
            Some(index) => HitResult::Connection {
                index,
                cursor: CursorHint::SizeAll,
            },
            None => HitResult::Miss,
        }
    }

    pub fn render_primitives(&self) -> Vec<RenderPrimitive> {
        let mut out: Vec<RenderPrimitive> = self
            .connections
            .iter()
            .map(|c| RenderPrimitive::Line {
                from: self.nodes[c.a].center(),
                to: self.nodes[c.b].center(),
            })
            .collect();
        for node in self.nodes.iter().filter(|n| n.is_active()) {
            let background_fill = node.clearance;
            out.push(match &node.area {
                NodeArea::Square { half_side } => RenderPrimitive::Square {
                    center: node.center(),
                    half_side: *half_side,
                    background_fill,
                },
                NodeArea::Circle { radius } => RenderPrimitive::Circle {
                    center: node.center(),
                    radius: *radius,
                    background_fill,
                },
                NodeArea::Polygon { vertices } => RenderPrimitive::Polygon {
                    vertices: vertices.clone(),
                    background_fill,
                },
                NodeArea::Null => unreachable!("inactive nodes are filtered"),
            });
        }
        out
    }

    /// Extent of all node areas and connection end points. Strip widths are
    /// not included.
    pub fn bounding_box(&self) -> Bounds {
        let mut b = self.nodes[0].bounds();
        for n in &self.nodes[1..] {
            if matches!(n.area, NodeArea::Null) {
                b = b.including(n.center());
            } else {
                b = b.union(n.bounds());
            }
        }
        b
    }
}
