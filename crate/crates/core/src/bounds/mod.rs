//! Closed-form bounds and the per-graph report that checks them against
//! exactly computed values.

mod formulas;
mod report;

pub use formulas::{
    arnautov_upper, clawfree_upper, cor_avg_upper, cor_chi_upper, degen_upper, erdos_bounds,
    faudree_alpha_upper, k1m_upper, main_upper, ng_bounds, rdom_uppers,
};
pub use report::{
    bound_report, BoundEntry, BoundReport, ExactValues, GraphId, InvariantSummary, Quantity,
    Relation, ReportOptions, Satisfied,
};
