use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::Point;
use crate::moveable::MouseButton;

/// One raw pointer event. Only `down` carries a button.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum TraceEvent {
    Down {
        x: i32,
        y: i32,
        #[serde(default)]
        button: MouseButton,
    },
    Move {
        x: i32,
        y: i32,
    },
    Up {
        x: i32,
        y: i32,
    },
}

impl TraceEvent {
    pub fn point(&self) -> Point {
        match *self {
            TraceEvent::Down { x, y, .. } | TraceEvent::Move { x, y } | TraceEvent::Up { x, y } => {
                Point::new(x, y)
            }
        }
    }

    pub fn down(x: i32, y: i32) -> Self {
        TraceEvent::Down {
            x,
            y,
            button: MouseButton::Left,
        }
    }

    pub fn moved(x: i32, y: i32) -> Self {
        TraceEvent::Move { x, y }
    }

    pub fn up(x: i32, y: i32) -> Self {
        TraceEvent::Up { x, y }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct TraceError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Parse JSON-lines; blank lines are skipped, line numbers are 1-based.
pub fn parse_trace(text: &str) -> Result<Vec<TraceEvent>, TraceError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| TraceError {
                line: i + 1,
                column: e.column(),
                message: super::scene::strip_position(&e),
            })
        })
        .collect()
}

pub fn write_trace(events: &[TraceEvent]) -> String {
    events
        .iter()
        .map(|e| serde_json::to_string(e).expect("event serializes") + "\n")
        .collect()
}
