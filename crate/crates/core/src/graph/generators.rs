use super::{Digraph, Graph, Orientation};
use crate::{Seed, SplitMix64, VertexSet};

pub fn empty(n: usize) -> Graph {
    Graph::empty(n)
}

pub fn complete(n: usize) -> Graph {
    let all = VertexSet::full(n);
    Graph::from_adjacency((0..n).map(|v| all - VertexSet::singleton(v)).collect())
}

/// `C_n` with edges `{i, i+1 mod n}`; for `n < 3` this is the path on `n`
/// vertices.
pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(0, n - 1);
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// `K_{1,m}` with center 0 and leaves `1..=m`.
pub fn star(m: usize) -> Graph {
    let mut g = Graph::empty(m + 1);
    for v in 1..=m {
        g.add_edge(0, v);
    }
    g
}

pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// `G(n, p)`: pairs `(u, v)` are visited in [`Graph::edges`] order and each
/// is kept with probability `p`.
pub fn random_gnp(n: usize, p: f64, seed: Seed) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.bernoulli(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Every arc `u → v` (ordered pairs, lexicographic) independently with
/// probability `p`; 2-cycles may occur.
pub fn random_digraph(n: usize, p: f64, seed: Seed) -> Digraph {
    assert!((0.0..=1.0).contains(&p), "arc probability {p} outside [0, 1]");
    let mut rng = SplitMix64::new(seed);
    let mut d = Digraph::empty(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.bernoulli(p) {
                d.add_arc(u, v);
            }
        }
    }
    d
}

/// A uniformly random orientation: one fair coin per edge in
/// [`Graph::edges`] order, heads directing the edge `max → min`.
pub fn random_orientation(g: &Graph, rng: &mut SplitMix64) -> Orientation {
    let directions: Vec<bool> = (0..g.size()).map(|_| rng.coin()).collect();
    Orientation::from_directions(g, &directions).expect("one direction per edge")
}

/// A random tournament: each pair oriented by an independent fair coin.
pub fn random_tournament(n: usize, seed: Seed) -> Digraph {
    let mut rng = SplitMix64::new(seed);
    random_orientation(&complete(n), &mut rng).into_digraph()
}

/// `i → i+1 mod n`. For `n = 2` this is the single arc `0 → 1`.
pub fn directed_cycle(n: usize) -> Digraph {
    let mut d = Digraph::empty(n);
    for v in 0..n {
        let w = (v + 1) % n;
        if w != v && !d.has_arc(w, v) {
            d.add_arc(v, w);
        }
    }
    d
}

/// `i → j` for all `i < j`.
pub fn transitive_tournament(n: usize) -> Digraph {
    let mut d = Digraph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            d.add_arc(i, j);
        }
    }
    d
}

/// The quadratic-residue tournament on `Z_7`: `i → j` iff
/// `(j - i) mod 7 ∈ {1, 2, 4}`.
pub fn qr_tournament_7() -> Digraph {
    let mut d = Digraph::empty(7);
    for i in 0..7 {
        for step in [1, 2, 4] {
            d.add_arc(i, (i + step) % 7);
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_shapes() {
        assert_eq!(complete(3).size(), 3);
        assert_eq!(complete(0).size(), 0);
        let c5 = cycle(5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(cycle(2), path(2));
        assert_eq!(star(3).degree(0), 3);
        assert_eq!(path(4).size(), 3);
        let p = petersen();
        assert_eq!(p.size(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn tournaments() {
        for s in 0..20 {
            let t = random_tournament(5, Seed(s));
            assert_eq!(t.arc_count(), 10);
            assert!(t.is_tournament());
        }
        assert!(transitive_tournament(6).is_tournament());
        assert!(qr_tournament_7().is_tournament());
        assert_eq!(directed_cycle(1).arc_count(), 0);
        assert_eq!(directed_cycle(2).arcs(), vec![(0, 1)]);
    }

    #[test]
    fn seeded_generators_are_reproducible() {
        for s in 0..50 {
            assert_eq!(random_tournament(9, Seed(s)), random_tournament(9, Seed(s)));
            assert_eq!(random_gnp(9, 0.4, Seed(s)), random_gnp(9, 0.4, Seed(s)));
        }
        assert_ne!(random_tournament(9, Seed(1)), random_tournament(9, Seed(2)));
    }

    #[test]
    fn gnp_extremes() {
        assert_eq!(random_gnp(6, 0.0, Seed(3)), Graph::empty(6));
        assert_eq!(random_gnp(6, 1.0, Seed(3)), complete(6));
    }

    #[test]
    fn qr7_common_dominators() {
        let d = qr_tournament_7();
        let mut dominated_pairs = 0;
        for a in 0..7 {
            for b in a + 1..7 {
                if (0..7).any(|u| d.has_arc(u, a) && d.has_arc(u, b)) {
                    dominated_pairs += 1;
                }
            }
        }
        assert_eq!(dominated_pairs, 21);
    }
}
