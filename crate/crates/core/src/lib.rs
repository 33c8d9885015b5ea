//! Bicolored P3 Deletion: given a graph whose edges are colored red or blue,
//! delete at most `k` edges so that no induced path on three vertices has one
//! red and one blue edge.
//!
//! The crate provides detection of the relevant substructures, data reduction,
//! a search-tree solver, polynomial-time solvers for restricted graph classes
//! and instance generators.

pub mod cli;
pub mod detect;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod kernel;
pub mod solve;

pub use error::{BpdError, Result};
pub use graph::{Color, ColoredGraph, Edge, InstanceStats};
pub use kernel::{kernelize, lift_solution, Instance, KernelTrace};
pub use solve::{solve_auto, DeletionSet, Mode, SolveResult};
