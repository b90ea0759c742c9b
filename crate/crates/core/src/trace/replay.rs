use serde::{Deserialize, Serialize};

use super::events::TraceEvent;
use super::scene::Scene;
use crate::contour::CursorHint;
use crate::geometry::{Delta, Point};
use crate::moveable::MouseButton;
use crate::mover::{containment_excess, ContainmentPolicy, Grab, Mover, MoverState};
use crate::shapes::Shape;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventLog {
    /// down: the catch succeeded; move: a gesture is running; up: something was released.
    pub caught: bool,
    pub repaint: bool,
    pub cursor: CursorHint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GestureSummary {
    pub object: usize,
    pub grab: Grab,
    pub button: MouseButton,
    /// Mouse displacement from press to release.
    pub delta: Delta,
    pub nodes_before: usize,
    pub nodes_after: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReplayReport {
    pub final_scene: Scene,
    pub log: Vec<EventLog>,
    pub gestures: Vec<GestureSummary>,
}

#[derive(Debug, Clone)]
struct OpenGesture {
    object: usize,
    grab: Grab,
    button: MouseButton,
    start: Point,
    nodes_before: usize,
}

/// Feeds events to a mover one at a time, the way the three mouse
/// handlers of a form would.
#[derive(Debug, Clone)]
pub struct Replayer {
    mover: Mover<Shape>,
    log: Vec<EventLog>,
    gestures: Vec<GestureSummary>,
    open: Option<OpenGesture>,
}

impl Replayer {
    pub fn new(scene: &Scene) -> Self {
        Self {
            mover: scene.to_mover(),
            log: Vec::new(),
            gestures: Vec::new(),
            open: None,
        }
    }

    pub fn mover(&self) -> &Mover<Shape> {
        &self.mover
    }

    pub fn set_policy(&mut self, policy: ContainmentPolicy) {
        self.mover.set_policy(policy);
    }

    pub fn scene(&self) -> Scene {
        Scene::from_mover(&self.mover)
    }

    fn cursor_at(&self, p: Point) -> CursorHint {
        match self.mover.state() {
            MoverState::Caught { cursor, .. } => cursor,
            MoverState::Idle => self.mover.sense(p).cursor,
        }
    }

    pub fn step(&mut self, event: TraceEvent) -> EventLog {
        let p = event.point();
        let (caught, repaint) = match event {
            TraceEvent::Down { button, .. } => {
                let caught = self.mover.catch(p, button);
                if caught {
                    if let MoverState::Caught { object, grab, .. } = self.mover.state() {
                        self.open = Some(OpenGesture {
                            object,
                            grab,
                            button,
                            start: p,
                            nodes_before: self.node_count(object),
                        });
                    }
                }
                (caught, false)
            }
            TraceEvent::Move { .. } => (self.mover.is_caught(), self.mover.move_to(p)),
            TraceEvent::Up { .. } => {
                let released = self.mover.release();
                if let Some(g) = self.open.take() {
                    self.gestures.push(GestureSummary {
                        object: g.object,
                        grab: g.grab,
                        button: g.button,
                        delta: p - g.start,
                        nodes_before: g.nodes_before,
                        nodes_after: self.node_count(g.object),
                    });
                }
                (released, released)
            }
        };
        let entry = EventLog {
            caught,
            repaint,
            cursor: self.cursor_at(p),
        };
        self.log.push(entry);
        entry
    }

    fn node_count(&self, object: usize) -> usize {
        self.mover
            .entry(object)
            .map(|e| e.contour().nodes().len())
            .unwrap_or(0)
    }

    pub fn finish(self) -> ReplayReport {
        ReplayReport {
            final_scene: Scene::from_mover(&self.mover),
            log: self.log,
            gestures: self.gestures,
        }
    }
}

pub fn replay(scene: &Scene, events: &[TraceEvent]) -> ReplayReport {
    let mut r = Replayer::new(scene);
    for e in events {
        r.step(*e);
    }
    r.finish()
}

/// Invariant breaches of `after` relative to the scene it was replayed
/// from: invalid objects, and objects pushed further across the border
/// than the policy permits.
pub fn violations(before: &Scene, after: &Scene) -> Vec<String> {
    let mut out = Vec::new();
    for (i, s) in after.objects.iter().enumerate() {
        if let Err(e) = s.validate() {
            out.push(format!("object {i} ({}): {e}", s.type_tag()));
        }
    }
    let excess = |scene: &Scene| -> Vec<i64> {
        scene
            .to_mover()
            .entries()
            .iter()
            .map(|e| containment_excess(after.policy, after.work, e.contour().bounding_box()))
            .collect()
    };
    for (i, (b, a)) in excess(before).into_iter().zip(excess(after)).enumerate() {
        if a > b {
            out.push(format!("object {i} crossed the work-area border by {a} px under {}", after.policy));
        }
    }
    out
}
