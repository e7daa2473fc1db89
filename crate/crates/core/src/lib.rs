//! Ordinal motifs of standard scale in formal contexts.
//!
//! The pipeline is: parse a [`FormalContext`], enumerate local full
//! scale-measures into the standard scales ([`enumeration`]), pick a small
//! set of them that covers many extents ([`covering`]), and render each
//! pick as a sentence ([`explain`]).

pub mod basis;
pub mod bitset;
pub mod context;
pub mod covering;
pub mod enumeration;
pub mod error;
pub mod explain;
pub mod io;
pub mod recognition;
pub mod scales;
pub mod scaling;

pub use basis::build_basis;
pub use bitset::{AttributeSet, IndexSet, ObjectSet};
pub use context::{ClarificationMap, Concept, FormalContext, Side};
pub use covering::{covered_extents, family_ratios, greedy_cover, CoveringStep, HeuristicKind};
pub use error::{Error, Result};
pub use explain::{explain_covering, render_motif, ExplanationDoc, ExplanationEntry, LabelMap};
pub use io::{parse_context, serialize_context, ContextFormat};
pub use recognition::{recognize, verify_full, verify_local_full, verify_scale_measure, Motif};
pub use scales::{
    apposition, build_scale, expected_extent_count, semiproduct, ScaleFamily, ScaleSpec,
};
pub use scaling::{scaling_dimension, scaling_witness, Measure};
