//! A registry of named, parameterized checks, one per verified identity,
//! each returning pass/fail with a witness.

mod closing;
mod gog_chain;
mod invariance;
mod magog_chain;
mod props;
mod registry;
mod result;
pub(crate) mod util;

pub use invariance::{group_for, wb3_subset, Family};
pub use registry::{registry_ids, run_all, run_check, CheckParams};
pub use result::{CheckResult, Status};
