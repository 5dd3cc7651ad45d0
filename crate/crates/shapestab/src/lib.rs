//! File formats, reports and commands on top of [`shapestab_core`].
//!
//! * [`problem`]: endomorphism problem files (`generators:`, `x -> x y^2`, …).
//! * [`matrix_file`]: `ring:` / `dim:` matrix files.
//! * [`report`]: the JSON verdict schema and human-readable reports.
//! * [`corpus`]: the bundled regression corpus of worked examples.
//! * [`commands`]: the command implementations used by the binary.

pub mod commands;
pub mod corpus;
pub mod matrix_file;
pub mod problem;
pub mod report;

pub use problem::{parse_problem, parse_word, ProblemFile};
pub use report::VerdictJson;
