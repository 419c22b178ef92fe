//! Directed domination: exact `γ` solvers, the maximum over orientations,
//! and the constructive procedures (stacked dominating sets, semi-kernels,
//! the independent-set orientation).

mod constructions;
mod over_orientations;
mod solver;

use serde::{Deserialize, Serialize};

use crate::{Digraph, Error, Result, VertexSet};

pub use constructions::{adversarial_orientation, semi_kernel, stacked_dds};
pub use over_orientations::{
    gamma_d, gamma_d_sampled, gamma_d_with, GammaOptions, OrientationMaximum, SampledGamma,
};
pub use solver::{gamma, gamma_value, GAMMA_MAX_ORDER};

/// Multiplicity `r` and distance radius `d` of a domination question.
/// `(1, 1)` is plain directed domination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DominationQuery {
    r: usize,
    d: usize,
}

impl DominationQuery {
    pub const PLAIN: DominationQuery = DominationQuery { r: 1, d: 1 };

    pub fn new(r: usize, d: usize) -> Result<Self> {
        if r == 0 || d == 0 {
            return Err(Error::domain(format!(
                "domination query needs r >= 1 and d >= 1, got r={r}, d={d}"
            )));
        }
        Ok(DominationQuery { r, d })
    }

    /// `r`-fold domination at distance 1.
    pub fn multiple(r: usize) -> Result<Self> {
        DominationQuery::new(r, 1)
    }

    /// Single domination within directed distance `d`.
    pub fn distance(d: usize) -> Result<Self> {
        DominationQuery::new(1, d)
    }

    pub fn r(self) -> usize {
        self.r
    }

    pub fn d(self) -> usize {
        self.d
    }
}

impl Default for DominationQuery {
    fn default() -> Self {
        DominationQuery::PLAIN
    }
}

/// A minimum dominating set for a query, lexicographically least among the
/// minimum ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectedDominationResult {
    pub value: usize,
    pub witness: VertexSet,
    pub query: DominationQuery,
}

/// Whether `s` dominates `d` under `q`: every vertex outside `s` has at
/// least `r` vertices of `s` at directed distance `1..=d` from which it is
/// reached.
///
/// For `r > 1` and `d > 1` together the two conditions combine in the obvious
/// way (at least `r` sources within distance `d`).
pub fn is_dds(d: &Digraph, s: VertexSet, q: DominationQuery) -> bool {
    let n = d.order();
    if !s.is_subset(d.vertices()) {
        return false;
    }
    let outside = d.vertices() - s;
    if q.d == 1 {
        return outside
            .iter()
            .all(|u| (d.in_neighbors(u) & s).len() >= q.r);
    }
    // sources within distance d of each vertex, computed per source by BFS
    let mut reached_by = vec![0usize; n];
    for v in s.iter() {
        let ball = d.ball(VertexSet::singleton(v), q.d) - VertexSet::singleton(v);
        for u in ball.iter() {
            reached_by[u] += 1;
        }
    }
    outside.iter().all(|u| reached_by[u] >= q.r)
}
