use crate::{Graph, Orientation};

/// `min Δ⁺(D)` over all orientations `D` of a graph, with an orientation
/// attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinMaxOutdegree {
    pub k: usize,
    pub orientation: Orientation,
}

/// Edge-to-tail assignment with at most `k` edges per vertex. `tail[e]` is
/// 0 for the smaller endpoint.
struct Assignment<'a> {
    edges: &'a [(usize, usize)],
    k: usize,
    tail: Vec<u8>,
    owned: Vec<Vec<usize>>,
}

impl Assignment<'_> {
    fn endpoint(&self, e: usize, side: u8) -> usize {
        if side == 0 {
            self.edges[e].0
        } else {
            self.edges[e].1
        }
    }

    /// Frees a slot at `v`, shifting owned edges along an alternating path
    /// when `v` is full.
    fn make_room(&mut self, v: usize, seen: &mut [bool]) -> bool {
        if self.owned[v].len() < self.k {
            return true;
        }
        seen[v] = true;
        for i in 0..self.owned[v].len() {
            let f = self.owned[v][i];
            let other = 1 - self.tail[f];
            let w = self.endpoint(f, other);
            if !seen[w] && self.make_room(w, seen) {
                self.owned[v].swap_remove(i);
                self.owned[w].push(f);
                self.tail[f] = other;
                return true;
            }
        }
        false
    }

    fn place(&mut self, e: usize, seen: &mut [bool]) -> bool {
        for side in 0..2u8 {
            let v = self.endpoint(e, side);
            if !seen[v] && self.make_room(v, seen) {
                self.owned[v].push(e);
                self.tail[e] = side;
                return true;
            }
        }
        false
    }
}

fn assign(g: &Graph, edges: &[(usize, usize)], k: usize) -> Option<Vec<u8>> {
    let mut a = Assignment {
        edges,
        k,
        tail: vec![0; edges.len()],
        owned: vec![Vec::new(); g.order()],
    };
    for e in 0..edges.len() {
        let mut seen = vec![false; g.order()];
        if !a.place(e, &mut seen) {
            return None;
        }
    }
    Some(a.tail)
}

/// Binary search on `k` between the density bound `⌈m/n⌉` and `Δ`, with an
/// augmenting-path feasibility test for each candidate.
pub fn min_max_outdegree(g: &Graph) -> MinMaxOutdegree {
    let edges = g.edges();
    let n = g.order();
    let (mut lo, mut hi) = if edges.is_empty() {
        (0, 0)
    } else {
        (edges.len().div_ceil(n), g.max_degree())
    };
    let mut best = assign(g, &edges, hi).expect("Δ always suffices");
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match assign(g, &edges, mid) {
            Some(t) => {
                best = t;
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    let directions: Vec<bool> = best.iter().map(|&t| t == 1).collect();
    let orientation = Orientation::from_directions(g, &directions).expect("one direction per edge");
    debug_assert!(orientation.digraph().max_out_degree() <= lo);
    MinMaxOutdegree { k: lo, orientation }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, orientations, petersen, random_gnp, star};
    use crate::Seed;

    fn brute_force(g: &Graph) -> usize {
        orientations(g)
            .unwrap()
            .map(|o| o.digraph().max_out_degree())
            .min()
            .unwrap()
    }

    #[test]
    fn examples() {
        for n in 3..9 {
            assert_eq!(min_max_outdegree(&cycle(n)).k, 1);
        }
        assert_eq!(min_max_outdegree(&complete(3)).k, 1);
        assert_eq!(min_max_outdegree(&complete(4)).k, 2);
        assert_eq!(min_max_outdegree(&complete(7)).k, 3);
        assert_eq!(min_max_outdegree(&star(5)).k, 1);
        assert_eq!(min_max_outdegree(&Graph::empty(4)).k, 0);
        assert_eq!(min_max_outdegree(&petersen()).k, 2);
    }

    #[test]
    fn orientation_attains_k() {
        for s in 0..200 {
            let g = random_gnp(12, 0.4, Seed(s));
            let r = min_max_outdegree(&g);
            assert_eq!(r.orientation.graph(), &g);
            assert_eq!(r.orientation.digraph().max_out_degree(), r.k);
        }
    }

    #[test]
    fn matches_brute_force() {
        let mut checked = 0;
        for s in 0..600 {
            let g = random_gnp(2 + (s % 6) as usize, 0.5, Seed(s));
            if g.size() > 10 {
                continue;
            }
            assert_eq!(min_max_outdegree(&g).k, brute_force(&g), "{g:?}");
            checked += 1;
        }
        assert!(checked > 300);
    }
}
