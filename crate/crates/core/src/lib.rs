// Structure-constant code indexes several tensors with the same loop variable.
#![allow(clippy::needless_range_loop)]

pub mod bialgebra;
pub mod diff_asi;
pub mod error;
pub mod fixtures;
pub mod linear;
pub mod poisson;
pub mod report;
pub mod rota_baxter;
pub mod workbench;
