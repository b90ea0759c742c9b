//! The supervisor of all moving and resizing: an ordered registry of
//! moveable objects plus the catch / move / release state machine.
//!
//! The mover never inspects objects directly. It keeps each object's
//! current [`Contour`], hit-tests against it, and asks the object for a
//! fresh contour after every change it accepts.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::contour::{Contour, CursorHint, HitResult, MovementFreedom, RenderPrimitive};
use crate::geometry::{Bounds, Delta, Point};
use crate::moveable::{Moveable, MouseButton};
use crate::shapes::{ContourResize, SizeLimits};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoverError {
    #[error("insert position {at} is out of range for {len} entries")]
    InsertPosition { at: usize, len: usize },
    #[error("no entry at index {index} ({len} registered)")]
    EntryIndex { index: usize, len: usize },
    #[error("no gesture has been completed yet")]
    NoGestureYet,
    #[error("invalid containment policy {0:?}; expected unrestricted, inside or partly:N")]
    BadPolicy(String),
}

/// Client area of the hosting surface, `[0, width] × [0, height]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WorkArea {
    pub width: i32,
    pub height: i32,
}

impl WorkArea {
    pub fn new(width: i32, height: i32) -> Self {
        Self { width, height }
    }
}

/// How far whole-object moves may carry an object across the work-area
/// borders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContainmentPolicy {
    Unrestricted,
    /// At least this many pixels of the contour stay inside on each axis.
    PartlyVisible(i32),
    FullyInside,
}

impl Default for ContainmentPolicy {
    fn default() -> Self {
        ContainmentPolicy::PartlyVisible(16)
    }
}

impl fmt::Display for ContainmentPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContainmentPolicy::Unrestricted => f.write_str("unrestricted"),
            ContainmentPolicy::PartlyVisible(m) => write!(f, "partly:{m}"),
            ContainmentPolicy::FullyInside => f.write_str("inside"),
        }
    }
}

impl FromStr for ContainmentPolicy {
    type Err = MoverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unrestricted" => Ok(ContainmentPolicy::Unrestricted),
            "inside" => Ok(ContainmentPolicy::FullyInside),
            _ => s
                .strip_prefix("partly:")
                .and_then(|m| m.parse::<i32>().ok())
                .filter(|m| *m >= 0)
                .map(ContainmentPolicy::PartlyVisible)
                .ok_or_else(|| MoverError::BadPolicy(s.to_owned())),
        }
    }
}

impl Serialize for ContainmentPolicy {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ContainmentPolicy {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Allowed range for a shift along one axis.
fn axis_range(policy: ContainmentPolicy, limit: i32, lo_edge: i32, hi_edge: i32) -> (i32, i32) {
    match policy {
        ContainmentPolicy::Unrestricted => (i32::MIN, i32::MAX),
        ContainmentPolicy::FullyInside => (-lo_edge, limit - hi_edge),
        ContainmentPolicy::PartlyVisible(m) => {
            let m = m.min(hi_edge - lo_edge);
            (m - hi_edge, limit - m - lo_edge)
        }
    }
}

fn clip_axis(policy: ContainmentPolicy, limit: i32, lo_edge: i32, hi_edge: i32, d: i32) -> i32 {
    let (lo, hi) = axis_range(policy, limit, lo_edge, hi_edge);
    // never push further out, but always allow coming back in
    d.clamp(lo.min(0), hi.max(0))
}

/// Clip a whole-object move so the bounding box honours the policy.
pub fn apply_containment(policy: ContainmentPolicy, work: WorkArea, bbox: Bounds, d: Delta) -> Delta {
    Delta::new(
        clip_axis(policy, work.width, bbox.min.x, bbox.max.x, d.dx),
        clip_axis(policy, work.height, bbox.min.y, bbox.max.y, d.dy),
    )
}

/// Total number of pixels by which `bbox` breaks the policy (0 = fine).
pub fn containment_excess(policy: ContainmentPolicy, work: WorkArea, bbox: Bounds) -> i64 {
    let axis = |limit: i32, lo: i32, hi: i32| -> i64 {
        let (min_shift, max_shift) = axis_range(policy, limit, lo, hi);
        i64::from(min_shift.max(0)) + i64::from((-max_shift).max(0))
    };
    axis(work.width, bbox.min.x, bbox.max.x) + axis(work.height, bbox.min.y, bbox.max.y)
}

/// Smallest translation bringing `bbox` back within the policy.
fn pull_inside(policy: ContainmentPolicy, work: WorkArea, bbox: Bounds) -> Delta {
    let axis = |limit: i32, lo: i32, hi: i32| -> i32 {
        let (min_shift, max_shift) = axis_range(policy, limit, lo, hi);
        if min_shift > 0 {
            min_shift
        } else if max_shift < 0 {
            max_shift
        } else {
            0
        }
    };
    Delta::new(
        axis(work.width, bbox.min.x, bbox.max.x),
        axis(work.height, bbox.min.y, bbox.max.y),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum Grab {
    Node(usize),
    Connection(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MoverState {
    #[default]
    Idle,
    Caught {
        object: usize,
        grab: Grab,
        cursor: CursorHint,
        last: Point,
        button: MouseButton,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EntryKind {
    Graphical,
    Control {
        resize: ContourResize,
        limits: SizeLimits,
    },
}

#[derive(Debug, Clone)]
pub struct RegistryEntry<O> {
    object: O,
    contour: Contour,
    kind: EntryKind,
}

impl<O: Moveable> RegistryEntry<O> {
    fn new(object: O) -> Self {
        let contour = object.define_contour();
        let kind = object.entry_kind();
        Self {
            object,
            contour,
            kind,
        }
    }

    pub fn object(&self) -> &O {
        &self.object
    }

    pub fn contour(&self) -> &Contour {
        &self.contour
    }

    pub fn kind(&self) -> EntryKind {
        self.kind
    }

    fn refresh(&mut self) {
        self.contour = self.object.define_contour();
    }
}

/// What lies under the mouse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sense {
    pub cursor: CursorHint,
    pub over: Option<(usize, Grab)>,
}

#[derive(Debug, Clone)]
pub struct Mover<O> {
    entries: Vec<RegistryEntry<O>>,
    state: MoverState,
    was_caught: Option<usize>,
    work: WorkArea,
    policy: ContainmentPolicy,
}

impl<O: Moveable + Clone> Mover<O> {
    pub fn new(work: WorkArea) -> Self {
        Self::with_policy(work, ContainmentPolicy::default())
    }

    pub fn with_policy(work: WorkArea, policy: ContainmentPolicy) -> Self {
        Self {
            entries: Vec::new(),
            state: MoverState::Idle,
            was_caught: None,
            work,
            policy,
        }
    }

    pub fn work_area(&self) -> WorkArea {
        self.work
    }

    pub fn policy(&self) -> ContainmentPolicy {
        self.policy
    }

    pub fn set_policy(&mut self, policy: ContainmentPolicy) {
        self.policy = policy;
    }

    pub fn state(&self) -> MoverState {
        self.state
    }

    pub fn is_caught(&self) -> bool {
        matches!(self.state, MoverState::Caught { .. })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[RegistryEntry<O>] {
        &self.entries
    }

    pub fn entry(&self, index: usize) -> Result<&RegistryEntry<O>, MoverError> {
        self.entries.get(index).ok_or(MoverError::EntryIndex {
            index,
            len: self.entries.len(),
        })
    }

    pub fn objects(&self) -> impl Iterator<Item = &O> {
        self.entries.iter().map(|e| &e.object)
    }

    pub fn into_objects(self) -> Vec<O> {
        self.entries.into_iter().map(|e| e.object).collect()
    }

    /// Register at the lowest priority. Returns the entry index.
    pub fn add(&mut self, object: O) -> usize {
        self.entries.push(RegistryEntry::new(object));
        self.entries.len() - 1
    }

    /// Register at `at`; `insert(0, …)` makes the object the front-most.
    pub fn insert(&mut self, at: usize, object: O) -> Result<(), MoverError> {
        if at > self.entries.len() {
            return Err(MoverError::InsertPosition {
                at,
                len: self.entries.len(),
            });
        }
        self.entries.insert(at, RegistryEntry::new(object));
        Ok(())
    }

    /// Change an object outside of a gesture; its contour is rebuilt.
    pub fn update_object<R>(&mut self, index: usize, f: impl FnOnce(&mut O) -> R) -> Result<R, MoverError> {
        let len = self.entries.len();
        let entry = self
            .entries
            .get_mut(index)
            .ok_or(MoverError::EntryIndex { index, len })?;
        let r = f(&mut entry.object);
        entry.refresh();
        Ok(r)
    }

    fn scan(&self, p: Point) -> Option<(usize, Grab, CursorHint)> {
        self.entries
            .iter()
            .enumerate()
            .find_map(|(i, e)| match e.contour.hit_test(p) {
                HitResult::Miss => None,
                HitResult::Node { index, cursor } => Some((i, Grab::Node(index), cursor)),
                HitResult::Connection { index, cursor } => {
                    Some((i, Grab::Connection(index), cursor))
                }
            })
    }

    /// Mouse down. Grabs the highest-priority contour under `p`.
    pub fn catch(&mut self, p: Point, button: MouseButton) -> bool {
        if self.is_caught() {
            return false;
        }
        match self.scan(p) {
            Some((object, grab, cursor)) => {
                self.state = MoverState::Caught {
                    object,
                    grab,
                    cursor,
                    last: p,
                    button,
                };
                true
            }
            None => false,
        }
    }

    /// Mouse move. Returns whether anything changed (repaint needed).
    pub fn move_to(&mut self, p: Point) -> bool {
        let MoverState::Caught {
            object,
            grab,
            cursor,
            last,
            button,
        } = self.state
        else {
            return false;
        };
        self.state = MoverState::Caught {
            object,
            grab,
            cursor,
            last: p,
            button,
        };
        let d = p - last;
        let (policy, work) = (self.policy, self.work);
        let entry = &mut self.entries[object];
        match grab {
            Grab::Connection(_) => {
                let d = apply_containment(policy, work, entry.contour.bounding_box(), d);
                if d.is_zero() {
                    return false;
                }
                entry.object.move_by(d);
                entry.refresh();
                true
            }
            Grab::Node(i) => {
                // Contours rebuilt mid-gesture may have fewer nodes than the
                // one the grab was made on; such a node is treated as free.
                let freedom = entry
                    .contour
                    .nodes()
                    .get(i)
                    .map_or(MovementFreedom::Any, |n| n.freedom);
                let d = freedom.constrain(d);
                let before = entry.contour.bounding_box();
                let excess_before = containment_excess(policy, work, before);
                let snapshot = entry.object.clone();
                if !entry.object.move_contour_point(i, d, p, button) {
                    return false;
                }
                let contour = entry.object.define_contour();
                if containment_excess(policy, work, contour.bounding_box()) <= excess_before {
                    entry.contour = contour;
                    return true;
                }
                // Over the border: retry with the move clipped as if it were
                // a translation, otherwise drop the step.
                entry.object = snapshot.clone();
                let clipped = apply_containment(policy, work, before, d);
                if clipped != d && !clipped.is_zero() {
                    let mouse = p + (clipped + -d);
                    if entry.object.move_contour_point(i, clipped, mouse, button) {
                        let contour = entry.object.define_contour();
                        if containment_excess(policy, work, contour.bounding_box()) <= excess_before {
                            entry.contour = contour;
                            return true;
                        }
                    }
                    entry.object = snapshot;
                }
                false
            }
        }
    }

    /// Mouse up. Returns `true` iff an object was caught.
    pub fn release(&mut self) -> bool {
        let MoverState::Caught { object, .. } = self.state else {
            return false;
        };
        self.state = MoverState::Idle;
        self.was_caught = Some(object);
        let (policy, work) = (self.policy, self.work);
        let entry = &mut self.entries[object];
        let excess_before = containment_excess(policy, work, entry.contour.bounding_box());
        entry.object.redefine_on_release();
        entry.refresh();
        let bbox = entry.contour.bounding_box();
        if containment_excess(policy, work, bbox) > excess_before {
            let fix = pull_inside(policy, work, bbox);
            if !fix.is_zero() {
                entry.object.move_by(fix);
                entry.refresh();
            }
        }
        true
    }

    /// Index of the object released by the last completed gesture.
    pub fn was_caught_object(&self) -> Result<usize, MoverError> {
        self.was_caught.ok_or(MoverError::NoGestureYet)
    }

    /// Read-only version of the catch scan.
    pub fn sense(&self, p: Point) -> Sense {
        match self.scan(p) {
            Some((i, grab, cursor)) => Sense {
                cursor,
                over: Some((i, grab)),
            },
            None => Sense {
                cursor: CursorHint::Default,
                over: None,
            },
        }
    }

    /// Contour outlines of all entries, back to front.
    pub fn draw_contours(&self) -> Vec<RenderPrimitive> {
        self.entries
            .iter()
            .rev()
            .flat_map(|e| e.contour.render_primitives())
            .collect()
    }
}
