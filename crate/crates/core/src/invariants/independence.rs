//! Maximum independent sets by branch and bound.
//!
//! Independent sets are generated in lexicographic order of their sorted ids
//! (include the smallest candidate first, then recurse on later
//! non-neighbors). A greedy set seeds the incumbent size; branches are cut
//! when a clique-cover bound on the candidates cannot beat the incumbent, or
//! cannot tie it once a set of that size has been found by the search itself.
//! The first set of maximum size reached is therefore the lexicographically
//! least one.

use super::{Invariant, Witness, WitnessedValue};
use crate::{Graph, Result, VertexSet};

/// Number of cliques in a greedy clique cover of `cand`, an upper bound on
/// the size of any independent subset.
fn clique_cover_bound(g: &Graph, mut cand: VertexSet) -> usize {
    let mut cliques = 0;
    while let Some(v) = cand.first() {
        cand.remove(v);
        let mut extend = cand & g.neighbors(v);
        while let Some(u) = extend.first() {
            cand.remove(u);
            extend &= g.neighbors(u);
        }
        cliques += 1;
    }
    cliques
}

fn greedy_independent(g: &Graph, mut cand: VertexSet) -> VertexSet {
    let mut s = VertexSet::EMPTY;
    while !cand.is_empty() {
        let v = cand
            .iter()
            .min_by_key(|&v| ((g.neighbors(v) & cand).len(), v))
            .expect("non-empty");
        s.insert(v);
        cand = cand - g.closed_neighbors(v);
    }
    s
}

struct Search<'a> {
    g: &'a Graph,
    best: VertexSet,
    best_len: usize,
    found: bool,
}

impl Search<'_> {
    fn run(&mut self, chosen: VertexSet, cand: VertexSet) {
        let len = chosen.len();
        if len > self.best_len || (len == self.best_len && !self.found) {
            self.best = chosen;
            self.best_len = len;
            self.found = true;
        }
        if cand.is_empty() {
            return;
        }
        let bound = len + clique_cover_bound(self.g, cand);
        if bound < self.best_len || (bound == self.best_len && self.found) {
            return;
        }
        for v in cand.iter() {
            let rest = cand & VertexSet::at_least(v + 1);
            let mut next = chosen;
            next.insert(v);
            self.run(next, rest - self.g.neighbors(v));
            let bound = len + clique_cover_bound(self.g, rest);
            if bound < self.best_len || (bound == self.best_len && self.found) {
                return;
            }
        }
    }
}

/// The lexicographically least maximum independent set inside `cand`.
pub fn max_independent_set(g: &Graph, cand: VertexSet) -> VertexSet {
    let cand = cand & g.vertices();
    let greedy = greedy_independent(g, cand);
    let mut search = Search {
        g,
        best: greedy,
        best_len: greedy.len(),
        found: false,
    };
    search.run(VertexSet::EMPTY, cand);
    debug_assert!(search.found);
    search.best
}

/// `α(G)` with the lexicographically least maximum independent set.
pub fn independence_number(g: &Graph) -> Result<WitnessedValue> {
    let s = max_independent_set(g, g.vertices());
    Ok(WitnessedValue {
        invariant: Invariant::Independence,
        value: s.len(),
        witness: Witness::Vertices(s),
    })
}

/// The lexicographically least independent `k`-subset of `cand`, if any.
pub fn first_independent_of_size(g: &Graph, cand: VertexSet, k: usize) -> Option<VertexSet> {
    fn go(g: &Graph, chosen: VertexSet, cand: VertexSet, k: usize) -> Option<VertexSet> {
        if chosen.len() == k {
            return Some(chosen);
        }
        if chosen.len() + clique_cover_bound(g, cand) < k {
            return None;
        }
        for v in cand.iter() {
            let rest = cand & VertexSet::at_least(v + 1);
            if chosen.len() + 1 + rest.len() < k {
                break;
            }
            let mut next = chosen;
            next.insert(v);
            if let Some(s) = go(g, next, rest - g.neighbors(v), k) {
                return Some(s);
            }
        }
        None
    }
    go(g, VertexSet::EMPTY, cand & g.vertices(), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, petersen, random_gnp};
    use crate::Seed;

    fn brute_force(g: &Graph) -> VertexSet {
        let n = g.order();
        let mut best = VertexSet::EMPTY;
        for bits in 0..1u64 << n {
            let s = VertexSet::from_bits(bits);
            if g.is_independent(s)
                && (s.len() > best.len()
                    || (s.len() == best.len() && s.lex_cmp(best).is_lt()))
            {
                best = s;
            }
        }
        best
    }

    #[test]
    fn examples() {
        assert_eq!(independence_number(&complete(5)).unwrap().value, 1);
        assert_eq!(independence_number(&Graph::empty(5)).unwrap().value, 5);
        let c5 = independence_number(&cycle(5)).unwrap();
        assert_eq!(c5.value, 2);
        assert_eq!(c5.vertices().unwrap().to_vec(), vec![0, 2]);
        assert_eq!(independence_number(&petersen()).unwrap().value, 4);
        assert_eq!(independence_number(&Graph::empty(0)).unwrap().value, 0);
    }

    #[test]
    fn matches_brute_force_with_lex_least_witness() {
        for s in 0..400 {
            let n = 1 + (s % 11) as usize;
            let g = random_gnp(n, 0.15 + 0.1 * (s % 7) as f64, Seed(s));
            assert_eq!(max_independent_set(&g, g.vertices()), brute_force(&g), "{g:?}");
        }
    }

    #[test]
    fn larger_graphs_finish() {
        let g = random_gnp(64, 0.5, Seed(4));
        let s = max_independent_set(&g, g.vertices());
        assert!(g.is_independent(s));
        assert!(s.len() >= 5);
    }

    #[test]
    fn first_of_size() {
        let c5 = cycle(5);
        assert_eq!(
            first_independent_of_size(&c5, c5.vertices(), 2).unwrap().to_vec(),
            vec![0, 2]
        );
        assert_eq!(first_independent_of_size(&c5, c5.vertices(), 3), None);
        assert_eq!(
            first_independent_of_size(&c5, c5.vertices(), 0),
            Some(VertexSet::EMPTY)
        );
    }
}
