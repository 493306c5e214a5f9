//! System assembly and theorem verification: builds the tuple
//! (f_0..f_n, f_{n+1}, B_0..B_{n+1}, W, LCM, radical) from the input
//! functions and checks every inequality, identity, and equality case.

mod examples;
mod lemmas;
mod limits;
mod system;
mod theorems;

pub use examples::{example1_system, example2_system, run_example, ExampleId, ExamplePair};
pub use lemmas::{
    r_alpha, verify_carleson_formula, verify_dalpha_comparability, verify_vs_inequality,
    CarlesonReport, ComparabilityReport, VsReport, COMPARABILITY_CAP,
};
pub use limits::{limit_demo, LimitRow, LimitTable};
pub use system::{
    build_system, check_divisibility, AnalyticSystem, DivisibilityReport, OrderCheck,
    SystemFunction,
};
pub use theorems::{
    verify_prop3, verify_theorem1, verify_theorem2, verify_theorem4, Prop3Variant, Status,
    SystemCounts, Theorem4Report, VerificationReport, EQUALITY_TOL,
};
