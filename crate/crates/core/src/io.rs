//! JSON wire format for function specs.
//!
//! Rationals appear as bare integers (`3`) or fraction strings (`"-7/2"`);
//! the infinities are exactly `"+inf"` and `"-inf"`. The body is tagged by
//! `"kind"`. Parsing always validates, so a spec obtained here is safe to
//! analyze.

use thiserror::Error;

use crate::convexfn::{ConvexFnSpec, ValidationError};

/// Why a JSON document failed to become a usable spec.
#[derive(Debug, Error)]
pub enum SpecIoError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid spec: {0}")]
    Validation(#[from] ValidationError),
}

/// Parses a spec from JSON text and validates it.
pub fn parse_spec(text: &str) -> Result<ConvexFnSpec, SpecIoError> {
    let spec: ConvexFnSpec = serde_json::from_str(text)?;
    spec.validate()?;
    Ok(spec)
}

/// Renders a spec as pretty-printed JSON.
pub fn spec_to_json(spec: &ConvexFnSpec) -> String {
    serde_json::to_string_pretty(spec).expect("spec serialization is total")
}
