//! Transparent rectangle visibility graphs on the plane and the flat torus:
//! exact extraction, layout builders for known families, certified
//! classification and a brute-force recognition oracle for small graphs.

pub mod analysis;
pub mod constructors;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod rational;
pub mod render;
pub mod search;
