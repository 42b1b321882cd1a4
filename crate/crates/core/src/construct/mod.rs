//! Explicit constructions: the parity hypergraph, the step-up coloring and
//! its gadget, extendability closure, and the random-deletion hypergraph.

mod deletion;
mod parity;
mod pipeline;
mod stepup;

pub use deletion::{deletion_construction, DeletionLog, DeletionParams};
pub use parity::{parity_construction, parity_from_aux, ParityOutcome};
pub use pipeline::{
    stepup_pipeline, AttemptRecord, StepupPipelineConfig, StepupPipelineReport,
};
pub use stepup::{
    blue_tuple_extraction, build_f_star, extend_to_extendable, is_extendable, stepup_color,
    stepup_construction, BlueExtraction, ExtendabilityReport, StepupColor,
};
