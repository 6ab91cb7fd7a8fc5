//! Exact A∞-coalgebra structures on the cellular chains of polygons and of
//! closed compact surfaces.
//!
//! Everything here is pure computation over the integers: `∂`, the diagonals
//! `Δ_k` and the structure relation are evaluated term by term with Koszul
//! signs, and `Z₂` answers come from reducing integer results.
#![no_std]

extern crate alloc;

pub mod cell;
pub mod chain;
pub mod complex;
mod error;
pub mod operation;
pub mod polygon;
pub mod relation;
pub mod surface;

pub use cell::{Cell, Label};
pub use chain::{word, ChainElement, Coeff, Combination, TensorElement, TensorWord};
pub use complex::CellComplex;
pub use error::{Error, Result};
pub use operation::{apply_at, apply_at_element, extend_sum, hom_differential, CellMap, GradedOperation};
