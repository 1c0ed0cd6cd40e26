//! Exact counting of restricted partitions, their number-of-parts functions,
//! and Carlitz compositions, with machinery to check identities between them.
//!
//! Every quantity is computed from truncated power series with big-integer
//! coefficients, and most are also available from a second, independent
//! route (divisor enumeration, convolution recurrences, or brute-force
//! enumeration in [`oracle`]).

pub mod arith;
pub mod asymptotics;
pub mod carlitz;
pub mod identities;
pub mod oracle;
pub mod partitions;
pub mod partset;
pub mod report;
pub mod series;
pub mod verify;

pub use asymptotics::{AsymptoticsError, FiniteSetA, QuasiPolyReport, RatioRow, Target};
pub use carlitz::CarlitzTable;
pub use identities::{IdentityReport, Quantities, Status, Tables, VerifyError};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use oracle::{Guardrails, Oracle, OracleCounts, OracleError};
pub use partitions::{Flavor, SequenceTable};
pub use partset::{parse_set_spec, PartSet, PartSetError, SetKind};
pub use series::{Series, SeriesError};
pub use verify::{Mismatch, Verification};
