//! Library half of the `pairdom` command: argument handling and the
//! property campaign, exposed so integration tests can drive them.

pub mod app;
pub mod campaign;
