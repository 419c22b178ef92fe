//! Exact minimum directed (r-fold, distance-d) dominating sets.
//!
//! Candidate sets are enumerated by increasing size and, within a size, in
//! lexicographic order of their sorted ids, so the first hit is the
//! lexicographically least minimum set. Vertices that nothing else can reach
//! (or that fewer than `r` vertices reach) are forced into every solution and
//! removed from the search up front. The greedy peeling set bounds the sizes
//! tried from above.

use super::{DirectedDominationResult, DominationQuery};
use crate::{Digraph, Error, Result, VertexSet};

/// Largest order the exact solver accepts.
pub const GAMMA_MAX_ORDER: usize = 24;

type Table = [VertexSet; GAMMA_MAX_ORDER];

struct Instance {
    n: usize,
    /// closed distance-d ball of each vertex
    cover: Table,
    /// vertices whose ball contains u, u excluded
    sources: Table,
}

impl Instance {
    fn new(d: &Digraph, q: DominationQuery) -> Self {
        let n = d.order();
        let mut cover = [VertexSet::EMPTY; GAMMA_MAX_ORDER];
        let mut sources = [VertexSet::EMPTY; GAMMA_MAX_ORDER];
        for (v, c) in cover.iter_mut().enumerate().take(n) {
            *c = if q.d() == 1 {
                d.closed_out_neighbors(v)
            } else {
                d.ball(VertexSet::singleton(v), q.d())
            };
        }
        for (v, c) in cover.iter().enumerate().take(n) {
            for u in (*c - VertexSet::singleton(v)).iter() {
                sources[u].insert(v);
            }
        }
        Instance { n, cover, sources }
    }
}

fn check_order(d: &Digraph) -> Result<()> {
    if d.order() > GAMMA_MAX_ORDER {
        return Err(Error::cap(format!(
            "exact directed domination handles at most {GAMMA_MAX_ORDER} vertices, got {}",
            d.order()
        )));
    }
    Ok(())
}

/// `γ(D)`, `γ_r(D)` or `γ(D, d)` with the lexicographically least optimal
/// witness.
pub fn gamma(d: &Digraph, q: DominationQuery) -> Result<DirectedDominationResult> {
    check_order(d)?;
    let witness = solve(d, q);
    Ok(DirectedDominationResult {
        value: witness.len(),
        witness,
        query: q,
    })
}

/// The value of [`gamma`] alone; the hot path of orientation sweeps.
pub fn gamma_value(d: &Digraph, q: DominationQuery) -> Result<usize> {
    check_order(d)?;
    Ok(solve(d, q).len())
}

fn solve(d: &Digraph, q: DominationQuery) -> VertexSet {
    let inst = Instance::new(d, q);
    if q.r() == 1 {
        solve_single(&inst)
    } else {
        solve_multiple(&inst, q.r())
    }
}

fn solve_single(inst: &Instance) -> VertexSet {
    let n = inst.n;
    let all = VertexSet::full(n);
    let forced: VertexSet = (0..n).filter(|&u| inst.sources[u].is_empty()).collect();
    let mut covered = VertexSet::EMPTY;
    for f in forced.iter() {
        covered |= inst.cover[f];
    }
    if covered == all {
        return forced;
    }
    let free = all - forced;
    let max_cover = free
        .iter()
        .map(|v| (inst.cover[v] - covered).len())
        .max()
        .unwrap_or(1)
        .max(1);
    let lower = (all - covered).len().div_ceil(max_cover);
    let upper = greedy_cover(inst, forced, covered).len() - forced.len();

    let mut search = SingleSearch {
        inst,
        all,
        free,
        max_cover,
    };
    for k in lower..=upper {
        if let Some(found) = search.run(k, 0, covered, VertexSet::EMPTY) {
            return forced | found;
        }
    }
    unreachable!("the greedy cover is a dominating set of size {upper}");
}

/// Repeatedly takes the free vertex whose ball covers most uncovered
/// vertices (least id on ties). For plain domination this is exactly the
/// out-degree peeling procedure.
fn greedy_cover(inst: &Instance, forced: VertexSet, mut covered: VertexSet) -> VertexSet {
    let all = VertexSet::full(inst.n);
    let mut chosen = forced;
    while covered != all {
        let best = (all - chosen)
            .iter()
            .max_by_key(|&v| ((inst.cover[v] - covered).len(), std::cmp::Reverse(v)))
            .expect("an uncovered vertex is not chosen");
        chosen.insert(best);
        covered |= inst.cover[best];
    }
    chosen
}

struct SingleSearch<'a> {
    inst: &'a Instance,
    all: VertexSet,
    free: VertexSet,
    max_cover: usize,
}

impl SingleSearch<'_> {
    fn run(
        &mut self,
        picks: usize,
        start: usize,
        covered: VertexSet,
        chosen: VertexSet,
    ) -> Option<VertexSet> {
        let uncovered = self.all - covered;
        let Some(u) = uncovered.first() else {
            return Some(chosen);
        };
        if picks == 0 || picks * self.max_cover < uncovered.len() {
            return None;
        }
        // someone at or after `start` has to cover u
        let coverers =
            (self.inst.sources[u] | VertexSet::singleton(u)) & self.free & VertexSet::at_least(start);
        if coverers.is_empty() {
            return None;
        }
        let last = 63 - coverers.bits().leading_zeros() as usize;
        let range = self.free & (VertexSet::at_least(start) - VertexSet::at_least(last + 1));
        for v in range.iter() {
            let mut next = chosen;
            next.insert(v);
            if let Some(s) = self.run(picks - 1, v + 1, covered | self.inst.cover[v], next) {
                return Some(s);
            }
        }
        None
    }
}

fn solve_multiple(inst: &Instance, r: usize) -> VertexSet {
    let n = inst.n;
    let all = VertexSet::full(n);
    let forced: VertexSet = (0..n).filter(|&u| inst.sources[u].len() < r).collect();
    let free = all - forced;
    let search = MultipleSearch { inst, r, free };
    for k in 0..=free.len() {
        if let Some(found) = search.run(k, 0, forced) {
            return found;
        }
    }
    unreachable!("the whole vertex set is r-dominating");
}

struct MultipleSearch<'a> {
    inst: &'a Instance,
    r: usize,
    free: VertexSet,
}

impl MultipleSearch<'_> {
    fn satisfied(&self, u: usize, s: VertexSet) -> bool {
        s.contains(u) || (self.inst.sources[u] & s).len() >= self.r
    }

    fn run(&self, picks: usize, start: usize, chosen: VertexSet) -> Option<VertexSet> {
        let open = self.free & VertexSet::at_least(start);
        if picks == 0 {
            let all = VertexSet::full(self.inst.n);
            return all.iter().all(|u| self.satisfied(u, chosen)).then_some(chosen);
        }
        for v in open.iter() {
            if (open & VertexSet::at_least(v)).len() < picks {
                break;
            }
            // free vertices in [start, v) stay outside for good
            let optimistic = chosen | (open & VertexSet::at_least(v));
            let skipped = open - VertexSet::at_least(v);
            if !skipped.iter().all(|w| self.satisfied(w, optimistic)) {
                break;
            }
            let mut next = chosen;
            next.insert(v);
            if let Some(s) = self.run(picks - 1, v + 1, next) {
                return Some(s);
            }
        }
        None
    }
}
