//! Contour-based moving and resizing of screen objects.
//!
//! Every object that wants to be moved registers with a [`Mover`] and
//! describes its sensitive areas as a [`Contour`]: a set of nodes (small
//! areas that usually resize) joined by connections (thin strips that
//! move the whole object). The mover turns raw mouse events into calls on
//! the [`Moveable`] trait.

pub mod contour;
pub mod geometry;
pub mod moveable;
pub mod mover;
pub mod shapes;
pub mod trace;

pub use contour::{Connection, Contour, ContourError, CursorHint, HitResult, MovementFreedom, Node, NodeArea, RenderPrimitive};
pub use geometry::{Bounds, Delta, Point, Rect};
pub use moveable::{MouseButton, Moveable};
pub use mover::{apply_containment, ContainmentPolicy, EntryKind, Grab, Mover, MoverError, MoverState, WorkArea};
pub use shapes::{Shape, ShapeError};
