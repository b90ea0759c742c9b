//! JSON command/response protocol for an interactive front end. The front
//! end draws only what it receives here and never computes geometry.

use serde::{Deserialize, Serialize};

use super::events::{write_trace, TraceEvent};
use super::gallery::case_scene;
use super::replay::Replayer;
use super::scene::{save_scene, Scene};
use super::svg::emit_svg;
use crate::contour::{CursorHint, RenderPrimitive};
use crate::geometry::Bounds;
use crate::moveable::MouseButton;
use crate::mover::{ContainmentPolicy, MoverState};
use crate::shapes::Glyph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointerKind {
    Down,
    Move,
    Up,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportWhat {
    Scene,
    Svg,
    Trace,
    /// The scene the exported trace starts from.
    Start,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "cmd", rename_all = "snake_case")]
pub enum UiCommand {
    LoadScene {
        scene: Scene,
    },
    /// Load one of the built-in scenes by name.
    LoadGallery {
        name: String,
    },
    Pointer {
        kind: PointerKind,
        x: i32,
        y: i32,
        #[serde(default)]
        button: MouseButton,
    },
    SetContours {
        visible: bool,
    },
    SetPolicy {
        policy: ContainmentPolicy,
    },
    Export {
        what: ExportWhat,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Render {
    pub shapes: Vec<Glyph>,
    pub contours: Vec<RenderPrimitive>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoRow {
    pub index: usize,
    #[serde(rename = "type")]
    pub type_tag: String,
    pub bounds: Bounds,
    pub caught: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UiResponse {
    pub repaint: bool,
    /// CSS cursor name.
    pub cursor: String,
    pub render: Render,
    pub info: Vec<InfoRow>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub export: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

struct Loaded {
    start: Scene,
    replayer: Replayer,
    trace: Vec<TraceEvent>,
}

/// One front-end session. Every pointer event is recorded, so the trace
/// export replays to the on-screen state from the `start` scene.
pub struct Session {
    loaded: Option<Loaded>,
    contours: bool,
    cursor: CursorHint,
}

impl Default for Session {
    fn default() -> Self {
        Self::new()
    }
}

impl Session {
    pub fn new() -> Self {
        Self {
            loaded: None,
            contours: false,
            cursor: CursorHint::Default,
        }
    }

    pub fn scene(&self) -> Option<Scene> {
        self.loaded.as_ref().map(|l| l.replayer.scene())
    }

    fn load(&mut self, scene: Scene) {
        self.cursor = CursorHint::Default;
        self.loaded = Some(Loaded {
            replayer: Replayer::new(&scene),
            start: scene,
            trace: Vec::new(),
        });
    }

    pub fn handle(&mut self, cmd: UiCommand) -> UiResponse {
        match self.apply(cmd) {
            Ok((repaint, export)) => self.response(repaint, export, None),
            Err(e) => self.response(false, None, Some(e)),
        }
    }

    /// Decode one JSON command and encode the response.
    pub fn handle_json(&mut self, line: &str) -> String {
        let resp = match serde_json::from_str::<UiCommand>(line) {
            Ok(cmd) => self.handle(cmd),
            Err(e) => self.response(false, None, Some(format!("bad command: {e}"))),
        };
        serde_json::to_string(&resp).expect("response serializes")
    }

    fn apply(&mut self, cmd: UiCommand) -> Result<(bool, Option<String>), String> {
        match cmd {
            UiCommand::LoadScene { scene } => {
                scene.validate().map_err(|e| e.to_string())?;
                self.load(scene);
                Ok((true, None))
            }
            UiCommand::LoadGallery { name } => {
                let scene = case_scene(&name).ok_or_else(|| format!("no built-in scene named {name:?}"))?;
                self.load(scene);
                Ok((true, None))
            }
            UiCommand::SetContours { visible } => {
                let changed = visible != self.contours;
                self.contours = visible;
                Ok((changed, None))
            }
            UiCommand::Pointer { kind, x, y, button } => {
                let l = self.loaded.as_mut().ok_or("no scene loaded")?;
                let event = match kind {
                    PointerKind::Down => TraceEvent::Down { x, y, button },
                    PointerKind::Move => TraceEvent::Move { x, y },
                    PointerKind::Up => TraceEvent::Up { x, y },
                };
                l.trace.push(event);
                let log = l.replayer.step(event);
                self.cursor = log.cursor;
                Ok((log.repaint, None))
            }
            UiCommand::SetPolicy { policy } => {
                let l = self.loaded.as_mut().ok_or("no scene loaded")?;
                if l.replayer.mover().is_caught() {
                    return Err("cannot change the policy during a gesture".into());
                }
                // Start a fresh recording so the trace stays replayable.
                let mut scene = l.replayer.scene();
                scene.policy = policy;
                self.load(scene);
                Ok((false, None))
            }
            UiCommand::Export { what } => {
                let l = self.loaded.as_ref().ok_or("no scene loaded")?;
                let text = match what {
                    ExportWhat::Scene => save_scene(&l.replayer.scene()),
                    ExportWhat::Start => save_scene(&l.start),
                    ExportWhat::Svg => emit_svg(&l.replayer.scene(), self.contours),
                    ExportWhat::Trace => write_trace(&l.trace),
                };
                Ok((false, Some(text)))
            }
        }
    }

    fn response(&self, repaint: bool, export: Option<String>, error: Option<String>) -> UiResponse {
        let (render, info) = match &self.loaded {
            None => (
                Render {
                    shapes: Vec::new(),
                    contours: Vec::new(),
                },
                Vec::new(),
            ),
            Some(l) => {
                let mover = l.replayer.mover();
                let caught = match mover.state() {
                    MoverState::Caught { object, .. } => Some(object),
                    MoverState::Idle => None,
                };
                let shapes = mover
                    .entries()
                    .iter()
                    .rev()
                    .flat_map(|e| e.object().glyphs())
                    .collect();
                let contours = if self.contours {
                    mover.draw_contours()
                } else {
                    Vec::new()
                };
                let info = mover
                    .entries()
                    .iter()
                    .enumerate()
                    .map(|(index, e)| InfoRow {
                        index,
                        type_tag: e.object().type_tag().to_owned(),
                        bounds: e.object().bounds(),
                        caught: caught == Some(index),
                    })
                    .collect();
                (Render { shapes, contours }, info)
            }
        };
        UiResponse {
            repaint,
            cursor: self.cursor.css_name().to_owned(),
            render,
            info,
            export,
            error,
        }
    }
}

