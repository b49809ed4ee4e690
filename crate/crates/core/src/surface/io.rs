//! JSON surface documents.
//!
//! ```json
//! {"vertices": ["A", "B"], "edges": {"a": ["A", "B"]}, "faces": {"1": ["a", "b", "c"]}}
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use serde::de::{Deserialize, Deserializer, MapAccess, Visitor};
use serde::Serialize;

use super::{Surface, SurfaceError};

/// Object entries in document order, keeping duplicate keys so they can be
/// reported instead of silently overwritten.
struct Entries<T>(Vec<(String, T)>);

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Entries<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct EntriesVisitor<T>(PhantomData<T>);

        impl<'de, T: Deserialize<'de>> Visitor<'de> for EntriesVisitor<T> {
            type Value = Entries<T>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an object of identifiers")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, T>()? {
                    out.push((k, v));
                }
                Ok(Entries(out))
            }
        }

        deserializer.deserialize_map(EntriesVisitor(PhantomData))
    }
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSurface {
    vertices: Vec<String>,
    edges: Entries<[String; 2]>,
    faces: Entries<[String; 3]>,
}

// Field order is the serialized key order.
#[derive(Serialize)]
struct SurfaceDocument<'a> {
    edges: BTreeMap<&'a str, &'a [String; 2]>,
    faces: BTreeMap<&'a str, &'a [String; 3]>,
    vertices: Vec<&'a str>,
}

/// Parses a surface document. Identifiers are kept exactly as written.
pub fn parse_surface(text: &str) -> Result<Surface, SurfaceError> {
    let raw: RawSurface = serde_json::from_str(text).map_err(|e| SurfaceError::Syntax {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    Surface::from_parts(raw.vertices, raw.edges.0, raw.faces.0)
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}

/// Sorted keys, two-space indentation, trailing LF.
pub fn serialize_surface(s: &Surface) -> String {
    let doc = SurfaceDocument {
        edges: s.edges.iter().map(|(k, v)| (k.as_str(), v)).collect(),
        faces: s.faces.iter().map(|(k, v)| (k.as_str(), v)).collect(),
        vertices: s.vertices().collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("surface serializes");
    out.push('\n');
    out
}
