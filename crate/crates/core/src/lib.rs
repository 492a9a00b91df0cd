//! Generalized Reed–Solomon codes over small finite fields with
//! Key-Equation and Guruswami–Sudan decoding, where the interpolation step
//! is solved by structured variants of the Fundamental Iterative Algorithm
//! on syndrome matrices.

pub mod channel;
pub mod code;
pub mod decoder;
pub mod error;
pub mod fia;
pub mod field;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod syndromes;

pub use code::{hamming_distance, GrsCode};
pub use decoder::{
    decode_bmd, find_y_roots, find_y_roots_exhaustive, interpolate, list_decode, list_decode_with, params_for,
    BmdOutcome, Candidate, DecodeParams, Interpolation, ListDecodeResult,
};
pub use error::{Error, Result};
pub use field::{Fe, Field, FieldSpec};
pub use matrix::Matrix;
pub use poly::{BiPoly, UniPoly};
pub use syndromes::SyndromeSet;
