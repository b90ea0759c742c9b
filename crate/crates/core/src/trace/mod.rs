//! Scenes, pointer traces, replay, SVG snapshots and the front-end protocol.

pub mod events;
pub mod gallery;
pub mod protocol;
pub mod replay;
pub mod scene;
pub mod svg;

pub use events::{parse_trace, write_trace, TraceError, TraceEvent};
pub use replay::{replay, violations, EventLog, GestureSummary, ReplayReport, Replayer};
pub use scene::{digest_text, load_scene, save_scene, Scene, SceneError};
pub use svg::emit_svg;
