//! Exact plane geometry for the Hirotaka HI-028 sangaku.
//!
//! Two circles tangent to a pair of perpendicular lines have a perpendicular external and
//! internal common tangent; the remaining pair of common tangents is then perpendicular too,
//! and all eight tangent points lie on two perpendicular lines. This crate builds the figure
//! with exact coordinates and checks every such claim as an exact predicate, plus the converse
//! for arbitrary pairs of separate circles.

pub mod exactnum;
pub mod geom;
pub mod hirotaka;
pub mod render;
