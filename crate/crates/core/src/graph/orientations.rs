//! Deterministic enumeration of all orientations of a graph.
//!
//! Edges are ordered as in [`Graph::edges`]. Orientation number `k` of a
//! graph with `m` edges sets direction bit `i` to bit `m - 1 - i` of `k`, so
//! the stream runs through the direction vectors in lexicographic order and
//! fixing a prefix of the vector selects a contiguous index range.

use std::ops::Range;

use super::{Digraph, Graph, Orientation};
use crate::{Error, Result};

/// Orientation streams longer than this require an explicit override.
pub const DEFAULT_ORIENTATION_CAP: u64 = 1 << 22;

/// Maps orientation indices to digraphs without allocating.
#[derive(Debug, Clone)]
pub struct OrientationIndexer {
    graph: Graph,
    edges: Vec<(usize, usize)>,
}

impl OrientationIndexer {
    pub fn new(graph: &Graph) -> Result<Self> {
        let edges = graph.edges();
        if edges.len() > 63 {
            return Err(Error::cap(format!(
                "{} edges give more than 2^63 orientations",
                edges.len()
            )));
        }
        Ok(OrientationIndexer {
            graph: graph.clone(),
            edges,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `2^m`.
    pub fn count(&self) -> u64 {
        1u64 << self.edges.len()
    }

    /// Overwrites `d` with orientation number `index`.
    pub fn fill(&self, index: u64, d: &mut Digraph) {
        debug_assert!(index < self.count());
        debug_assert_eq!(d.order(), self.graph.order());
        d.clear();
        let m = self.edges.len();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if (index >> (m - 1 - i)) & 1 == 1 {
                d.add_arc(v, u);
            } else {
                d.add_arc(u, v);
            }
        }
    }

    pub fn digraph(&self, index: u64) -> Digraph {
        let mut d = Digraph::empty(self.graph.order());
        self.fill(index, &mut d);
        d
    }

    pub fn orientation(&self, index: u64) -> Orientation {
        Orientation::from_parts_unchecked(self.graph.clone(), self.digraph(index))
    }

    /// Index of an orientation of the same graph.
    pub fn index_of(&self, o: &Orientation) -> u64 {
        let m = self.edges.len();
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| o.digraph().has_arc(v, u))
            .fold(0, |acc, (i, _)| acc | 1 << (m - 1 - i))
    }
}

/// A restartable, splittable stream over a range of orientation indices.
#[derive(Debug, Clone)]
pub struct Orientations {
    indexer: OrientationIndexer,
    range: Range<u64>,
    next: u64,
}

/// All `2^m` orientations of `g`, refusing streams longer than
/// [`DEFAULT_ORIENTATION_CAP`].
pub fn orientations(g: &Graph) -> Result<Orientations> {
    orientations_with_cap(g, DEFAULT_ORIENTATION_CAP)
}

pub fn orientations_with_cap(g: &Graph, cap: u64) -> Result<Orientations> {
    let indexer = OrientationIndexer::new(g)?;
    if indexer.count() > cap {
        return Err(Error::cap(format!(
            "graph with {} edges has 2^{} orientations, above the cap of {cap}",
            indexer.edge_count(),
            indexer.edge_count()
        )));
    }
    let range = 0..indexer.count();
    Ok(Orientations {
        next: range.start,
        indexer,
        range,
    })
}

impl Orientations {
    pub fn indexer(&self) -> &OrientationIndexer {
        &self.indexer
    }

    pub fn index_range(&self) -> Range<u64> {
        self.range.clone()
    }

    /// Rewinds to the start of this stream's range.
    pub fn restart(&mut self) {
        self.next = self.range.start;
    }

    /// The sub-stream over `range`, clipped to this stream's range.
    pub fn sub_range(&self, range: Range<u64>) -> Orientations {
        let start = range.start.clamp(self.range.start, self.range.end);
        let end = range.end.clamp(start, self.range.end);
        Orientations {
            indexer: self.indexer.clone(),
            range: start..end,
            next: start,
        }
    }

    /// Splits the full stream by the first `prefix_bits` direction bits into
    /// `2^prefix_bits` consecutive sub-streams (fewer bits if `m` is smaller).
    pub fn split_by_prefix(&self, prefix_bits: usize) -> Vec<Orientations> {
        let m = self.indexer.edge_count();
        let p = prefix_bits.min(m);
        let chunk = 1u64 << (m - p);
        (0..1u64 << p)
            .map(|prefix| self.sub_range(prefix * chunk..(prefix + 1) * chunk))
            .filter(|s| !s.range.is_empty())
            .collect()
    }
}

impl Iterator for Orientations {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        if self.next >= self.range.end {
            return None;
        }
        let o = self.indexer.orientation(self.next);
        self.next += 1;
        Some(o)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.range.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Orientations {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, random_gnp};
    use crate::Seed;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(orientations(&complete(3)).unwrap().count(), 8);
        assert_eq!(orientations(&Graph::empty(4)).unwrap().count(), 1);
        assert_eq!(orientations(&path(2)).unwrap().count(), 2);
    }

    #[test]
    fn cap() {
        assert!(matches!(orientations(&complete(8)), Err(Error::ResourceCap(_))));
        assert!(orientations(&complete(7)).is_ok());
        assert!(orientations_with_cap(&complete(8), 1 << 28).is_ok());
    }

    #[test]
    fn lexicographic_direction_order() {
        let g = complete(3);
        let dirs: Vec<Vec<bool>> = orientations(&g).unwrap().map(|o| o.directions()).collect();
        let mut sorted = dirs.clone();
        sorted.sort();
        assert_eq!(dirs, sorted);
        assert_eq!(dirs[0], vec![false, false, false]);
        assert_eq!(dirs[1], vec![false, false, true]);
    }

    #[test]
    fn distinct_antisymmetric_and_restartable() {
        let g = random_gnp(6, 0.5, Seed(11));
        let mut stream = orientations(&g).unwrap();
        let all: Vec<Orientation> = stream.by_ref().collect();
        assert_eq!(all.len() as u64, 1 << g.size());
        let distinct: HashSet<_> = all.iter().map(|o| o.digraph().clone()).collect();
        assert_eq!(distinct.len(), all.len());
        for o in &all {
            assert!(o.digraph().is_oriented());
            assert_eq!(o.digraph().underlying_graph(), g);
        }
        stream.restart();
        assert_eq!(stream.collect::<Vec<_>>(), all);
    }

    #[test]
    fn prefix_split_covers_stream_in_order() {
        let g = cycle(6);
        let full = orientations(&g).unwrap();
        let expected: Vec<_> = full.clone().collect();
        for p in 0..8 {
            let parts = full.split_by_prefix(p);
            assert_eq!(parts.len(), 1 << p.min(6));
            let joined: Vec<_> = parts.into_iter().flatten().collect();
            assert_eq!(joined, expected);
        }
    }

    #[test]
    fn index_round_trip() {
        let g = complete(4);
        let ix = OrientationIndexer::new(&g).unwrap();
        for k in 0..ix.count() {
            assert_eq!(ix.index_of(&ix.orientation(k)), k);
        }
    }
}
