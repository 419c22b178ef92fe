//! `Γ_d(G)`, `Γ_{d,r}(G)` and `Γ_d(G, d)`: the largest domination number over
//! all orientations of a graph, exactly by sweeping the orientation stream or
//! as a sampled lower bound.

use rayon::prelude::*;
use serde::Serialize;

use super::{gamma_value, DominationQuery};
use crate::graph::{random_orientation, OrientationIndexer, DEFAULT_ORIENTATION_CAP};
use crate::{Digraph, Error, Graph, Orientation, Result, Seed, SplitMix64};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaOptions {
    /// Largest number of orientations swept before giving up.
    pub cap: u64,
    /// Worker threads; `1` sweeps on the calling thread.
    pub workers: usize,
}

impl Default for GammaOptions {
    fn default() -> Self {
        GammaOptions {
            cap: DEFAULT_ORIENTATION_CAP,
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationMaximum {
    pub value: usize,
    /// The first orientation of the stream attaining `value`.
    pub orientation: Orientation,
    /// Its index in the orientation stream.
    pub index: u64,
}

/// Best `(value, index)` over `range`; the earliest index wins ties. The
/// sweep stops at `ceiling`, which no orientation can exceed.
fn sweep(
    ix: &OrientationIndexer,
    q: DominationQuery,
    range: std::ops::Range<u64>,
    ceiling: usize,
) -> Result<(usize, u64)> {
    let mut buf = Digraph::empty(ix.graph().order());
    let mut best = (0, range.start);
    let mut first = true;
    for index in range {
        ix.fill(index, &mut buf);
        let value = gamma_value(&buf, q)?;
        if first || value > best.0 {
            best = (value, index);
            first = false;
            if value >= ceiling {
                break;
            }
        }
    }
    Ok(best)
}

pub fn gamma_d(g: &Graph, q: DominationQuery) -> Result<OrientationMaximum> {
    gamma_d_with(g, q, &GammaOptions::default())
}

/// Sweeps every orientation of `g`. With several workers the index range is
/// cut into consecutive chunks whose results are merged by (largest value,
/// smallest index), which reproduces the serial answer exactly.
pub fn gamma_d_with(g: &Graph, q: DominationQuery, opts: &GammaOptions) -> Result<OrientationMaximum> {
    let ix = OrientationIndexer::new(g)?;
    if ix.count() > opts.cap {
        return Err(Error::cap(format!(
            "graph with {} edges has 2^{} orientations, above the cap of {}; \
             use the sampled estimate or raise the cap",
            ix.edge_count(),
            ix.edge_count(),
            opts.cap
        )));
    }
    if g.order() > super::GAMMA_MAX_ORDER {
        return Err(Error::cap(format!(
            "exact directed domination handles at most {} vertices, got {}",
            super::GAMMA_MAX_ORDER,
            g.order()
        )));
    }
    let ceiling = g.order();
    let total = ix.count();
    let (value, index) = if opts.workers <= 1 || total < 1024 {
        sweep(&ix, q, 0..total, ceiling)?
    } else {
        let chunks = (opts.workers as u64 * 16).min(total);
        let step = total.div_ceil(chunks);
        let ranges: Vec<_> = (0..chunks)
            .map(|c| c * step..((c + 1) * step).min(total))
            .filter(|r| !r.is_empty())
            .collect();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::cap(format!("cannot start worker pool: {e}")))?;
        let parts: Vec<(usize, u64)> = pool.install(|| {
            ranges
                .into_par_iter()
                .map(|r| sweep(&ix, q, r, ceiling))
                .collect::<Result<_>>()
        })?;
        parts
            .into_iter()
            .reduce(|a, b| if b.0 > a.0 { b } else { a })
            .expect("at least one orientation")
    };
    Ok(OrientationMaximum {
        value,
        orientation: ix.orientation(index),
        index,
    })
}

/// A lower bound on the maximum over orientations from random samples.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampledGamma {
    /// Largest value seen; only a lower bound on the true maximum.
    pub lower_bound: usize,
    pub samples: usize,
    pub seed: Seed,
    /// Sample index (0-based) where `lower_bound` was first reached.
    pub best_sample: usize,
}

/// Evaluates `samples` uniformly random orientations drawn from one
/// SplitMix64 stream seeded with `seed`.
pub fn gamma_d_sampled(
    g: &Graph,
    q: DominationQuery,
    samples: usize,
    seed: Seed,
) -> Result<SampledGamma> {
    if samples == 0 {
        return Err(Error::domain("at least one sample is required"));
    }
    let mut rng = SplitMix64::new(seed);
    let mut best = (0, 0);
    for i in 0..samples {
        let o = random_orientation(g, &mut rng);
        let value = gamma_value(o.digraph(), q)?;
        if i == 0 || value > best.0 {
            best = (value, i);
        }
    }
    Ok(SampledGamma {
        lower_bound: best.0,
        samples,
        seed,
        best_sample: best.1,
    })
}
