//! Front end for `sympow-core`: scenario files, subcommands and the built-in
//! reproduction cases.

pub mod raw;
pub mod repro;
pub mod scenario;
pub mod task;

pub use scenario::{parse_scenario, Field, Fields, InputError};
pub use task::{envelope, execute, Outcome, Task, SCHEMA_VERSION};

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const INPUT: u8 = 1;
    pub const GUARD: u8 = 2;
}
