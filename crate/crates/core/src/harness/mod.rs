//! Drivers behind the command-line tool: exhaustive and sampled theorem
//! verification, tournament experiments, Schütte witnesses and partition
//! runs. All output is deterministic for a fixed configuration, whatever
//! the worker count.

mod partition;
mod schuette;
mod tournament;
mod verify;

pub use partition::{run_partition, ExtractorKind};
pub use schuette::{schuette, SchutteReport};
pub use tournament::{tournament_experiment, TournamentRow, TournamentRun, TournamentSummary};
pub use verify::{
    check_graph, labeled_graph, labeled_graph_count, verify, NgStats, Theorem, Universe,
    VerificationReport, VerifyConfig, Violation, EXHAUSTIVE_MAX_ORDER, EXHAUSTIVE_MAX_ORDER_LARGE,
};

use crate::{Error, Result};

pub(crate) fn worker_pool(workers: usize) -> Result<rayon::ThreadPool> {
    if workers == 0 {
        return Err(Error::domain("worker count must be at least 1"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::cap(format!("cannot start {workers} workers: {e}")))
}
