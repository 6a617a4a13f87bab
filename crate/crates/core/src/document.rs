//! Versioned JSON interchange format for fibration descriptions.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "name": "ELLIPTIC_12",
//!   "fiber_genus": 1,
//!   "base_genus": 0,
//!   "fibers": [
//!     { "pieces": [[0, 2]], "curves": [{ "ends": [0, 0], "homology": [1, 0] }] }
//!   ],
//!   "handle_matrices": [[[1, 0], [0, 1]], [[1, 0], [0, 1]]],
//!   "signature": -8,
//!   "flags": { "not_rational_or_ruled": true }
//! }
//! ```
//!
//! Pieces are `[genus, boundary_count]` pairs and curve ends index into the
//! fiber's piece list. Numbers are integers throughout; exact rationals in
//! reports are written as `"p/q"` strings.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::homology::IntegerMatrix;
use crate::invariants::{FibrationBuilder, FibrationDescription, InvariantError, TopologyAssertion};
use crate::surface_config::{Curve, FiberConfiguration, Piece};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDocument {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub fiber_genus: u32,
    pub base_genus: u32,
    pub fibers: Vec<FiberDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub handle_matrices: Option<Vec<Vec<Vec<i64>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signature: Option<i64>,
    #[serde(default, skip_serializing_if = "Flags::is_empty")]
    pub flags: Flags,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberDocument {
    pub pieces: Vec<[u32; 2]>,
    pub curves: Vec<CurveDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDocument {
    pub ends: [usize; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homology: Option<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Flags {
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub not_rational_or_ruled: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ruled: Option<RuledParams>,
}

impl Flags {
    pub fn is_empty(&self) -> bool {
        !self.not_rational_or_ruled && self.ruled.is_none()
    }
}

/// Blowup in `b` points of a sphere bundle over a genus-`a` surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuledParams {
    pub a: u32,
    pub b: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("validation error at `{path}`: {source}")]
    Validation {
        path: String,
        #[source]
        source: InvariantError,
    },
}

impl DocumentError {
    pub fn path(&self) -> &str {
        match self {
            DocumentError::Schema { path, .. } | DocumentError::Validation { path, .. } => path,
        }
    }
}

/// A parsed document: the validated description, its optional name, and
/// warnings (unknown fields, in lenient mode).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedDocument {
    pub name: Option<String>,
    pub fibration: FibrationDescription,
    pub warnings: Vec<String>,
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError::Schema {
        path: path.into(),
        message: message.into(),
    }
}

/// Reads a document without validating the fibration itself.
pub fn parse_document(text: &str, strict: bool) -> Result<(InputDocument, Vec<String>), DocumentError> {
    let mut unknown = Vec::new();
    let mut de = serde_json::Deserializer::from_str(text);
    let mut record = |path: serde_ignored::Path<'_>| unknown.push(path.to_string());
    let ignored = serde_ignored::Deserializer::new(&mut de, &mut record);
    let doc: InputDocument = serde_path_to_error::deserialize(ignored).map_err(|e| {
        let path = e.path().to_string();
        schema(path, e.into_inner().to_string())
    })?;
    de.end().map_err(|e| schema(".", e.to_string()))?;

    if doc.schema_version != SCHEMA_VERSION {
        return Err(schema(
            "schema_version",
            format!("unsupported version {}, expected {SCHEMA_VERSION}", doc.schema_version),
        ));
    }
    if strict {
        if let Some(first) = unknown.first() {
            return Err(schema(first.clone(), "unknown field"));
        }
    }
    let warnings = unknown.into_iter().map(|p| format!("ignored unknown field `{p}`")).collect();
    Ok((doc, warnings))
}

/// Parses and validates a fibration document.
pub fn parse_fibration(text: &str, strict: bool) -> Result<ParsedDocument, DocumentError> {
    let (doc, warnings) = parse_document(text, strict)?;
    let fibration = document_to_fibration(&doc)?;
    Ok(ParsedDocument {
        name: doc.name,
        fibration,
        warnings,
    })
}

pub fn document_to_fibration(doc: &InputDocument) -> Result<FibrationDescription, DocumentError> {
    let assertion = match (doc.flags.not_rational_or_ruled, doc.flags.ruled) {
        (true, Some(_)) => {
            return Err(schema(
                "flags",
                "not_rational_or_ruled and ruled are mutually exclusive",
            ))
        }
        (true, None) => TopologyAssertion::NotRationalOrRuled,
        (false, Some(RuledParams { a, b })) => TopologyAssertion::Ruled { a, b },
        (false, None) => TopologyAssertion::Unspecified,
    };

    let handles = match &doc.handle_matrices {
        Some(ms) => Some(
            ms.iter()
                .enumerate()
                .map(|(i, rows)| {
                    IntegerMatrix::from_rows(rows)
                        .map_err(|e| schema(format!("handle_matrices[{i}]"), e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?,
        ),
        None => None,
    };

    let fibers = doc.fibers.iter().map(|f| {
        FiberConfiguration::new(
            f.pieces.iter().map(|&[g, b]| Piece::new(g, b)).collect(),
            f.curves
                .iter()
                .map(|c| Curve {
                    ends: (c.ends[0], c.ends[1]),
                    homology: c.homology.clone(),
                })
                .collect(),
        )
    });

    FibrationBuilder::new(doc.fiber_genus, doc.base_genus)
        .fibers(fibers)
        .handle_matrices(handles)
        .signature(doc.signature)
        .assertion(assertion)
        .build()
        .map_err(|source| DocumentError::Validation {
            path: error_path(&source),
            source,
        })
}

fn error_path(e: &InvariantError) -> String {
    match e {
        InvariantError::InvalidFiberGenus(_) => "fiber_genus".into(),
        InvariantError::Fiber { index, .. } => format!("fibers[{index}]"),
        InvariantError::HandleCount { .. } => "handle_matrices".into(),
        InvariantError::HandleDimension { index, .. } | InvariantError::MatrixNotSymplectic { index } => {
            format!("handle_matrices[{index}]")
        }
        InvariantError::ParityMismatch { .. } | InvariantError::NegativeBetti { .. } => "signature".into(),
        InvariantError::B1OutOfRange { .. } | InvariantError::InvalidCounts(_) | InvariantError::Homology(_) => {
            ".".into()
        }
    }
}

pub fn fibration_to_document(fd: &FibrationDescription, name: Option<&str>) -> InputDocument {
    let flags = match fd.assertion() {
        TopologyAssertion::Unspecified => Flags::default(),
        TopologyAssertion::NotRationalOrRuled => Flags {
            not_rational_or_ruled: true,
            ruled: None,
        },
        TopologyAssertion::Ruled { a, b } => Flags {
            not_rational_or_ruled: false,
            ruled: Some(RuledParams { a, b }),
        },
    };
    InputDocument {
        schema_version: SCHEMA_VERSION,
        name: name.map(str::to_string),
        fiber_genus: fd.fiber_genus(),
        base_genus: fd.base_genus(),
        fibers: fd
            .fibers()
            .iter()
            .map(|f| FiberDocument {
                pieces: f.pieces().iter().map(|p| [p.genus, p.boundary_count]).collect(),
                curves: f
                    .curves()
                    .iter()
                    .map(|c| CurveDocument {
                        ends: [c.ends.0, c.ends.1],
                        homology: c.homology.clone(),
                    })
                    .collect(),
            })
            .collect(),
        handle_matrices: fd.handle_matrices().map(|ms| {
            ms.iter()
                .map(|m| m.to_i64_rows().expect("handle entries originate from machine integers"))
                .collect()
        }),
        signature: fd.signature(),
        flags,
    }
}

/// Canonical text form: pretty-printed JSON with a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("document types serialize");
    s.push('\n');
    s
}

pub fn serialize_fibration(fd: &FibrationDescription, name: Option<&str>) -> String {
    to_canonical_json(&fibration_to_document(fd, name))
}

pub(crate) fn serialize_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

pub(crate) fn serialize_opt_bigints<S: Serializer>(v: &Option<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => serialize_bigints(v, s),
        None => s.serialize_none(),
    }
}
