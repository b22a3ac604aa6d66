//! Workspace documents, suite presets and reports for the `plab` binary.

pub mod report;
pub mod search;
pub mod suite;
pub mod workspace;

pub use report::{Format, Record, Report, Status};
pub use suite::{run_preset, run_suite, Preset, Step};
pub use workspace::{emit_workspace, parse_workspace, Object, Workspace};
