//! Exact-arithmetic toolkit for Pisot numbers and the moduli of their
//! Galois conjugates.

pub mod conjecture;
pub mod dyadic;
pub mod error;
pub mod families;
pub mod intpoly;
pub mod pisot;
pub mod real_algebraic;
pub mod rootlab;
pub mod sturm;

pub use error::{Error, Result};
pub use intpoly::IntPoly;
