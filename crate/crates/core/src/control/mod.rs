//! The control-to-terminal-state map, regularized control synthesis and
//! the unique-continuation probe on exterior traces.

mod input_map;
mod probe;
mod synthesis;

pub use input_map::{assemble_input_map, InputMap};
pub use probe::{unique_continuation_probe, ProbeReport};
pub use synthesis::{
    controllability_sweep, synthesize_control, SweepPoint, SweepSetup, SynthesisResult,
    CONDITION_WARNING,
};
