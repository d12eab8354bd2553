//! Constructions on diagrams: joins, compositions, amalgamation, border
//! decompositions, ribbon staircases and hat diagrams.

mod amalgam;
mod border;
mod hat;
mod join;
mod staircase;

pub use amalgam::{
    amalgamate, amalgamate_power, amalgamated_compose, check_hypotheses, dot_omega, dot_omega_with, protrudes,
    protrusion, End, HypothesisReport, Projection,
};
pub use border::{border_decomposition, sub_ribbon, HashRibbon, OutsideDecomposition, Side};
pub use hat::{hat, overlap_composition, row_ranges, HatDiagram};
pub use join::{compose_alpha_d, compose_d_beta, join, power, JoinMode};
pub use staircase::{
    all_presentations, build_from_staircase, conjugate_depth, detect_staircase, m_intersect, m_union,
    ribbon_transpose, staircase, NestLetter, Nesting, StaircasePresentation,
};
