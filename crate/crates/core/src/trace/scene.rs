use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::mover::{ContainmentPolicy, Mover, WorkArea};
use crate::shapes::{Shape, ShapeError};

#[derive(Debug, Error)]
pub enum SceneError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("work area must be positive, got {width}x{height}")]
    WorkArea { width: i32, height: i32 },
    #[error("object {index} ({tag}): {source}")]
    Invalid {
        index: usize,
        tag: &'static str,
        #[source]
        source: ShapeError,
    },
}

impl SceneError {
    /// Malformed input as opposed to a well-formed but inconsistent scene.
    pub fn is_syntax(&self) -> bool {
        matches!(self, SceneError::Syntax { .. })
    }
}

impl From<serde_json::Error> for SceneError {
    fn from(e: serde_json::Error) -> Self {
        SceneError::Syntax {
            line: e.line(),
            column: e.column(),
            message: strip_position(&e),
        }
    }
}

/// serde_json appends " at line L column C"; the position is kept separately.
pub(crate) fn strip_position(e: &serde_json::Error) -> String {
    let text = e.to_string();
    let suffix = format!(" at line {} column {}", e.line(), e.column());
    text.strip_suffix(&suffix).unwrap_or(&text).to_owned()
}

/// Everything needed to rebuild a mover: the surface, the policy and the
/// objects in priority order (index 0 is hit first).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scene {
    pub work: WorkArea,
    #[serde(default)]
    pub policy: ContainmentPolicy,
    #[serde(default)]
    pub objects: Vec<Shape>,
}

impl Scene {
    pub fn new(work: WorkArea, policy: ContainmentPolicy, objects: Vec<Shape>) -> Self {
        Self {
            work,
            policy,
            objects,
        }
    }

    pub fn validate(&self) -> Result<(), SceneError> {
        if self.work.width <= 0 || self.work.height <= 0 {
            return Err(SceneError::WorkArea {
                width: self.work.width,
                height: self.work.height,
            });
        }
        for (index, s) in self.objects.iter().enumerate() {
            s.validate().map_err(|source| SceneError::Invalid {
                index,
                tag: s.type_tag(),
                source,
            })?;
        }
        Ok(())
    }

    pub fn to_mover(&self) -> Mover<Shape> {
        let mut m = Mover::with_policy(self.work, self.policy);
        for s in &self.objects {
            m.add(s.clone());
        }
        m
    }

    pub fn from_mover(m: &Mover<Shape>) -> Self {
        Self::new(m.work_area(), m.policy(), m.objects().cloned().collect())
    }

    /// Hex SHA-256 of the canonical text.
    pub fn digest(&self) -> String {
        digest_text(&save_scene(self))
    }
}

pub fn load_scene(text: &str) -> Result<Scene, SceneError> {
    let scene: Scene = serde_json::from_str(text)?;
    scene.validate()?;
    Ok(scene)
}

/// Canonical form: pretty-printed JSON with a trailing newline.
pub fn save_scene(scene: &Scene) -> String {
    let mut s = serde_json::to_string_pretty(scene).expect("scene serializes");
    s.push('\n');
    s
}

pub fn digest_text(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}
