//! Instance generators: the SAT reduction, fixture gadgets and random graphs.

mod gadgets;
mod random;
mod reduction;
mod sat;

pub use gadgets::{gadget, GadgetKind};
pub use random::{random_bounded_degree, random_instance};
pub use reduction::{reduce_sat_to_bpd, ClauseLayout, ReductionLayout, VariableLayout};
pub use sat::{parse_dimacs, random_formula, sat_brute_force, CnfFormula, MAX_OCCURRENCES};
