//! Quandle cocycle invariants of classical knots and twist-spun surface knots.
//!
//! The crate covers finite quandles and their extensions, braid closures and
//! their colorings, exact integer linear algebra, quandle modules with their
//! cocycles, and the invariants built from them.

pub mod braid;
pub mod calibration;
pub mod cocycle;
pub mod error;
pub mod group;
pub mod invariant;
pub mod knots;
pub mod linalg;
pub mod linform;
pub mod module;
pub mod quandle;
pub mod tables;

pub use error::{Error, Result};
