//! Evaluation points and characters, the functionals `ev_v ∘ ∂_w ∘ ξ`, the
//! window basis `𝐁` with exact generator actions, block structure, component
//! graphs of regular points and the simplicity probe.

mod action;
mod blocks;
mod functional;
mod graph;
mod point;
mod probe;
mod setup;
mod structural;
mod window;

pub use action::{Coeffs, PreparedGenerator};
pub use blocks::BlockRow;
pub use functional::{eval_functional, eval_operator_functional, Functional};
pub use graph::{component_graph, ComponentGraph, EdgeRule, GraphEdge};
pub use point::{
    character_of, parse_rational, point_action, render_rational, EvalPoint, GZCharacter, PointValue, PointValueSpec,
};
pub use probe::{interior_tables, simplicity_probe, CyclicityEntry, ProbeReport, Step1Entry};
pub use setup::{canonical_representatives, canonicalize, singularity_setup_check, stabilizer, OrbitData, SetupReport};
pub use structural::{expand_in_partials, leibniz_expand, Direction};
pub use window::{
    build_basis_b, build_basis_b_from, specialize, BasisElement, ModuleWindow, RankCertificate, MAX_TEST_DEGREE,
};

#[cfg(test)]
mod tests;
