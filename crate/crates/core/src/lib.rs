//! Exact arithmetic in `Z[tau]`, the noncrystallographic root systems
//! `H2`, `H3`, `H4`, their affine extensions and the quasicrystal fragments
//! they generate.

pub mod affine;
pub mod cutproject;
pub mod error;
pub mod fragment;
pub mod goldenring;
pub mod linalg;
pub mod lineanalysis;
pub mod rootsystem;

pub use error::{Error, Result};
pub use goldenring::{CycloInt, Embedding, GoldenInt, GoldenRational, Sign};
pub use linalg::GoldenMatrix;
pub use rootsystem::{AlphaVector, CartanMatrix, GroupId, OmegaVector};
pub use fragment::Fragment;
