//! The contract an object fulfils to be moved and resized by a mover.

use serde::{Deserialize, Serialize};

use crate::contour::Contour;
use crate::geometry::{Delta, Point};
use crate::mover::EntryKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MouseButton {
    #[default]
    Left,
    Right,
}

/// Anything a [`Mover`](crate::mover::Mover) can supervise.
///
/// The object owns its geometry. Its contour is derived from that geometry
/// by [`define_contour`](Moveable::define_contour) and handed to the mover
/// by value; the mover keeps the copy it hit-tests against and asks for a
/// fresh one after every successful change.
pub trait Moveable {
    /// Build the contour for the current geometry. Must be deterministic.
    fn define_contour(&self) -> Contour;

    /// Translate every basic point of the object by `d`. Sizes never change.
    fn move_by(&mut self, d: Delta);

    /// React to node `node` being dragged by `d` (already constrained by the
    /// node's freedom) with the mouse now at `mouse`. Returns `true` iff the
    /// geometry changed; a `false` return leaves the object untouched.
    fn move_contour_point(
        &mut self,
        node: usize,
        d: Delta,
        mouse: Point,
        button: MouseButton,
    ) -> bool;

    /// End-of-gesture hook for contours whose node count has to stay fixed
    /// while a gesture is running. Called by the mover on release.
    fn redefine_on_release(&mut self) {}

    /// How the object is listed in a mover's registry.
    fn entry_kind(&self) -> EntryKind {
        EntryKind::Graphical
    }
}
