//! Exact curling numbers, chromatic numbers and chi-minus colourings of
//! small graphs, together with generators for twelve cycle-derived graph
//! families and a harness that checks published closed forms for those
//! families against two independent exact computations.
//!
//! The two computations are [`chroma`], a pruned search over colour
//! classes, and [`oracle`], a deliberately naive enumeration of every
//! proper colouring. [`verify`] runs both and compares them with the
//! closed forms in [`formulas`].

pub mod chroma;
pub mod cli;
pub mod curling;
pub mod families;
pub mod figures;
pub mod formulas;
pub mod graph;
pub mod oracle;
pub mod verify;

pub use chroma::{chi_minus, chi_plus, chromatic_number, class_sizes, ChromaError, ChromaticCurlingResult, ClassSizeVector, ColourAssignment};
pub use curling::{curling_number, CurlingResult};
pub use families::{generate, vertex_layout, Family, FamilySpec, VertexLayout};
pub use graph::{DegreeSequence, Graph, GraphError};
pub use formulas::{claimed_values, stated_class_sizes, ClaimRecord};
pub use oracle::{oracle_chromatic, OracleResult, DEFAULT_VERTEX_BUDGET};
pub use verify::{verify_family, witness_check, Verdict, VerdictRecord};
