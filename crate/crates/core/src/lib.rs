//! Decision procedures for the circular-ones and I-circular properties of
//! binary matrices, with witness orders or minimal forbidden-submatrix
//! certificates, and for semi-transitivity of split graphs.
//!
//! Every fast decision in this crate is paired with an exhaustive oracle
//! (`brute_force_*`) so that small instances can be cross-checked, and the
//! [`verify`] module sweeps the structural lemmas behind the forbidden
//! families over bounded parameter ranges.
//!
//! Indices are 1-based in every public type that names a row, column or
//! vertex (`IndexMap`, orders, witnesses, graph files).

pub mod binmat;
pub mod c1p;
pub mod error;
pub mod families;
pub mod icirc;
pub mod seqcore;
pub mod splitgraph;
pub mod verify;
pub mod wordrep;

pub use binmat::{BinaryMatrix, ColSet, ConfigurationWitness};
pub use c1p::{CircularColumnOrder, LinearColumnOrder};
pub use error::{Error, Result};
pub use families::{Certificate, FamilyId, FamilyKind, ForbMember, UVariant};
pub use seqcore::{BinarySequence, IndexMap, QuaternarySequence, Sequence};
pub use splitgraph::{Graph, Orientation, SplitGraph};
