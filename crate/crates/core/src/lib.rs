//! Finite involutory quandles: presentations, Winker-style enumeration of
//! their Cayley graphs, the two-bridge-link-with-axis family, and structural
//! checks on the enumerated quandles.

pub mod analysis;
pub mod error;
pub mod family;
pub mod parser;
pub mod pd;
pub mod report;
pub mod table;
pub mod winker;
pub mod word;

pub use analysis::{components, is_isomorphic, structure_summary, verify_relations};
pub use analysis::{ComponentReport, IsoResult, StructureSummary};
pub use error::{Error, Result};
pub use family::{FamilyParams, SuiteItem, TangleWalk};
pub use parser::{flatten, flatten_equation, parse_presentation, ExprNode};
pub use pd::{parse_pd, wirtinger_presentation, PdCode};
pub use report::{CheckOutcome, VerificationReport};
pub use table::{
    apply_word, check_axioms, full_op_table, quandle_op, CayleyTable, QuandleOpTable, Rep,
};
pub use winker::{
    enumerate, secondary_of, EnumerationBudget, EnumerationResult, SecondaryRelation,
};
pub use word::{normalize_word, GeneratorId, Presentation, Relation, Word};
