//! Composite group-ring constructions of self-dual codes.
//!
//! Rings and groups are table driven; v ∈ RG is laid out as Ω(v) by a
//! [`composite::Layout`]; generators [I | Ω(v)] are mapped to binary codes
//! through the Gray maps in [`gray`] and measured by [`bincodes`].

pub mod bincodes;
pub mod composite;
pub mod construct;
pub mod error;
pub mod gray;
pub mod group;
pub mod group_ring;
pub mod matrix;
pub mod repro;
pub mod ring;

pub use error::{Error, Result};
