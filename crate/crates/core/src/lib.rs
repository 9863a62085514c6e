//! Combinatorial flexibility analysis for mirror-symmetric planar bar-joint
//! frameworks: three-colour edge colourings that witness or rule out
//! symmetry-preserving motions, a fixpoint closure strengthening the
//! negative direction, and explicit parametric motion synthesis with a
//! numeric verifier.

pub mod closure;
pub mod colourings;
pub mod fixtures;
pub mod flexes;
pub mod frameworks;
pub mod graph_core;

pub use graph_core::{Graph, SymmetricGraph};
