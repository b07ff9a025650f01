//! Semi-stability decisions, membership in the maximal exact structure and
//! the randomized property suites.

mod pair;
mod report;
mod suites;
mod verdict;

pub use pair::{is_kernel_cokernel_pair, is_split_exact, ExactPair, ExactPairOf};
pub use report::{DiagramTrace, Recheck, Report, Status, VerdictCounts, Violation};
pub use suites::{run_suite, run_suite_with, Suite};
pub use verdict::{
    decide_semistable_cokernel, decide_semistable_kernel, in_maximal_exact, probe_semistable_cokernel,
    probe_semistable_kernel, pullback_to_json, pushout_to_json, refutation_holds, refutation_to_json, verdict_to_json,
    DecisionPolicy, ProbeConfig, Refutation, RefutationOf, Verdict, VerdictOf, DEFAULT_PROBE_BUDGET,
};
