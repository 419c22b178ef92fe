//! Graphs, digraphs and orientations on at most 64 vertices.

mod generators;
mod graph6;
mod orientations;
mod text;

pub use generators::{
    complete, cycle, directed_cycle, empty, path, petersen, qr_tournament_7, random_digraph,
    random_gnp, random_orientation, random_tournament, star, transitive_tournament,
};
pub use graph6::{encode_graph6, parse_graph6};
pub use orientations::{
    orientations, orientations_with_cap, OrientationIndexer, Orientations,
    DEFAULT_ORIENTATION_CAP,
};
pub use text::{
    parse_digraph, parse_digraphs, parse_edge_list, parse_edge_lists, parse_graph6_lines,
    write_digraph, write_edge_list,
};

use crate::{Error, Result, VertexSet};

pub const MAX_ORDER: usize = 64;

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::OrderTooLarge(n))
    } else {
        Ok(())
    }
}

/// A loopless undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// Panics if `n > 64`; fallible constructors go through [`Graph::from_edges`].
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "graph order {n} exceeds {MAX_ORDER}");
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicate edges
    /// and out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        debug_assert!(adj.len() <= MAX_ORDER);
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.is_well_formed());
        g
    }

    fn is_well_formed(&self) -> bool {
        let all = VertexSet::full(self.n);
        (0..self.n).all(|v| {
            !self.adj[v].contains(v)
                && self.adj[v].is_subset(all)
                && self.adj[v].iter().all(|u| self.adj[u].contains(v))
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        assert_ne!(u, v, "self-loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v] | VertexSet::singleton(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn average_degree(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            2.0 * self.size() as f64 / self.n as f64
        }
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in (self.adj[u] & VertexSet::at_least(u + 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (self.adj[v] & s).is_empty())
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n);
        let adj = (0..self.n)
            .map(|v| all - self.adj[v] - VertexSet::singleton(v))
            .collect();
        Graph::from_adjacency(adj)
    }

    /// The subgraph induced by `s`, relabeled in increasing order of the
    /// original ids.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        check_subset(s, self.n)?;
        let ids = s.to_vec();
        let adj = ids
            .iter()
            .map(|&v| relabel(self.adj[v] & s, &ids))
            .collect();
        Ok(Graph::from_adjacency(adj))
    }

    /// The digraph with both arcs `u→v` and `v→u` for every edge.
    pub fn to_symmetric_digraph(&self) -> Digraph {
        Digraph {
            n: self.n,
            out: self.adj.clone(),
            inc: self.adj.clone(),
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn check_subset(s: VertexSet, n: usize) -> Result<()> {
    match (s - VertexSet::full(n)).first() {
        Some(vertex) => Err(Error::VertexOutOfRange { vertex, n }),
        None => Ok(()),
    }
}

/// Maps a set of original ids into positions within the sorted `ids`.
fn relabel(s: VertexSet, ids: &[usize]) -> VertexSet {
    ids.iter()
        .enumerate()
        .filter(|(_, &v)| s.contains(v))
        .map(|(i, _)| i)
        .collect()
}

/// A loopless digraph on `0..n`. Arcs in both directions between the same
/// pair are allowed; see [`Digraph::is_oriented`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<VertexSet>,
    inc: Vec<VertexSet>,
}

impl Digraph {
    /// Panics if `n > 64`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "digraph order {n} exceeds {MAX_ORDER}");
        Digraph {
            n,
            out: vec![VertexSet::EMPTY; n],
            inc: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut d = Digraph::empty(n);
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if d.has_arc(u, v) {
                return Err(Error::DuplicateEdge(u, v));
            }
            d.add_arc(u, v);
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "arc ({u}, {v}) out of range");
        assert_ne!(u, v, "loop at {u}");
        self.out[u].insert(v);
        self.inc[v].insert(u);
    }

    pub(crate) fn clear(&mut self) {
        self.out.iter_mut().for_each(|s| *s = VertexSet::EMPTY);
        self.inc.iter_mut().for_each(|s| *s = VertexSet::EMPTY);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|s| s.len()).sum()
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].contains(v)
    }

    /// `N⁺(v)`.
    #[inline]
    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.out[v]
    }

    /// `N⁻(v)`.
    #[inline]
    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.inc[v]
    }

    /// `N⁺[v]`.
    #[inline]
    pub fn closed_out_neighbors(&self, v: usize) -> VertexSet {
        self.out[v] | VertexSet::singleton(v)
    }

    /// `N⁻[v]`.
    #[inline]
    pub fn closed_in_neighbors(&self, v: usize) -> VertexSet {
        self.inc[v] | VertexSet::singleton(v)
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.inc[v].len()
    }

    /// `Δ⁺(D)`, zero for the empty digraph.
    pub fn max_out_degree(&self) -> usize {
        self.out.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// `Δ⁻(D)`.
    pub fn max_in_degree(&self) -> usize {
        self.inc.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.out[u].iter().map(move |v| (u, v)))
            .collect()
    }

    /// No pair of vertices carries arcs in both directions.
    pub fn is_oriented(&self) -> bool {
        (0..self.n).all(|u| (self.out[u] & self.inc[u]).is_empty())
    }

    /// Every pair of distinct vertices carries exactly one arc.
    pub fn is_tournament(&self) -> bool {
        self.is_oriented() && self.arc_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// `U` is independent: no arc in either direction inside `U`.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (self.out[v] & s).is_empty())
    }

    /// The graph obtained by forgetting arc directions.
    pub fn underlying_graph(&self) -> Graph {
        let adj = (0..self.n).map(|v| self.out[v] | self.inc[v]).collect();
        Graph::from_adjacency(adj)
    }

    /// The sub-digraph induced by `s`, relabeled in increasing id order.
    pub fn induced_subdigraph(&self, s: VertexSet) -> Result<Digraph> {
        check_subset(s, self.n)?;
        let ids = s.to_vec();
        let out = ids.iter().map(|&v| relabel(self.out[v] & s, &ids)).collect();
        let inc = ids.iter().map(|&v| relabel(self.inc[v] & s, &ids)).collect();
        Ok(Digraph {
            n: ids.len(),
            out,
            inc,
        })
    }

    /// Vertices at directed distance `1..=d` from some vertex of `sources`,
    /// together with `sources` itself.
    pub fn ball(&self, sources: VertexSet, d: usize) -> VertexSet {
        let mut reached = sources;
        let mut frontier = sources;
        for _ in 0..d {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next |= self.out[v];
            }
            frontier = next - reached;
            if frontier.is_empty() {
                break;
            }
            reached |= frontier;
        }
        reached
    }

    /// Directed distances from `source` by breadth-first search; `None` for
    /// unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for v in self.out[u].iter() {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs())
    }
}

/// A digraph together with the graph it orients: every edge carries exactly
/// one arc and non-adjacent pairs carry none.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    graph: Graph,
    digraph: Digraph,
}

impl Orientation {
    /// Validates that `digraph` orients `graph`.
    pub fn new(graph: Graph, digraph: Digraph) -> Result<Self> {
        if graph.order() != digraph.order() {
            return Err(Error::domain(format!(
                "orientation order {} differs from graph order {}",
                digraph.order(),
                graph.order()
            )));
        }
        for u in 0..graph.order() {
            let forward = digraph.out_neighbors(u);
            let backward = digraph.in_neighbors(u);
            if !(forward & backward).is_empty() {
                return Err(Error::domain(format!("vertex {u} lies on a 2-cycle")));
            }
            if forward | backward != graph.neighbors(u) {
                return Err(Error::domain(format!(
                    "arcs at vertex {u} do not match its edges"
                )));
            }
        }
        Ok(Orientation { graph, digraph })
    }

    /// Orients an oriented digraph over its own underlying graph.
    pub fn of_digraph(digraph: Digraph) -> Result<Self> {
        let graph = digraph.underlying_graph();
        Orientation::new(graph, digraph)
    }

    /// Orients the edges of `graph` (in [`Graph::edges`] order): `false`
    /// directs an edge `min → max`, `true` directs it `max → min`.
    pub fn from_directions(graph: &Graph, directions: &[bool]) -> Result<Self> {
        let edges = graph.edges();
        if edges.len() != directions.len() {
            return Err(Error::domain(format!(
                "{} directions for {} edges",
                directions.len(),
                edges.len()
            )));
        }
        let mut d = Digraph::empty(graph.order());
        for (&(u, v), &flip) in edges.iter().zip(directions) {
            if flip {
                d.add_arc(v, u);
            } else {
                d.add_arc(u, v);
            }
        }
        Ok(Orientation {
            graph: graph.clone(),
            digraph: d,
        })
    }

    pub(crate) fn from_parts_unchecked(graph: Graph, digraph: Digraph) -> Self {
        debug_assert!(Orientation::new(graph.clone(), digraph.clone()).is_ok());
        Orientation { graph, digraph }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn into_digraph(self) -> Digraph {
        self.digraph
    }

    /// Direction bits over [`Graph::edges`], inverse of
    /// [`Orientation::from_directions`].
    pub fn directions(&self) -> Vec<bool> {
        self.graph
            .edges()
            .into_iter()
            .map(|(u, v)| self.digraph.has_arc(v, u))
            .collect()
    }
}

impl std::fmt::Debug for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Orientation({:?})", self.digraph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[usize]) -> VertexSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn edge_list_validation() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::from_edges(65, []), Err(Error::OrderTooLarge(65)));
    }

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(complete(5).complement(), Graph::empty(5));
        assert_eq!(Graph::empty(0).complement(), Graph::empty(0));
    }

    #[test]
    fn complement_of_c5_is_a_five_cycle() {
        let c = cycle(5).complement();
        assert_eq!(c.size(), 5);
        assert!((0..5).all(|v| c.degree(v) == 2));
        // connected 2-regular on 5 vertices is C5: walk it
        let (mut prev, mut cur, mut steps) = (0, c.neighbors(0).first().unwrap(), 1);
        while cur != 0 {
            let next = (c.neighbors(cur) - VertexSet::singleton(prev)).first().unwrap();
            prev = cur;
            cur = next;
            steps += 1;
        }
        assert_eq!(steps, 5);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c5 = cycle(5);
        assert_eq!(c5.induced_subgraph(set(&[0, 1, 2])).unwrap(), path(3));
        assert_eq!(c5.induced_subgraph(c5.vertices()).unwrap(), c5);
        assert_eq!(c5.induced_subgraph(VertexSet::EMPTY).unwrap(), Graph::empty(0));
        assert_eq!(
            c5.induced_subgraph(set(&[1, 7])),
            Err(Error::VertexOutOfRange { vertex: 7, n: 5 })
        );
        // {0, 2, 3}: only 2-3 adjacent -> relabeled edge (1, 2)
        let h = c5.induced_subgraph(set(&[0, 2, 3])).unwrap();
        assert_eq!(h.edges(), vec![(1, 2)]);
    }

    #[test]
    fn induced_subdigraph_relabels() {
        let d = directed_cycle(5);
        let h = d.induced_subdigraph(set(&[1, 2, 4])).unwrap();
        assert_eq!(h.arcs(), vec![(0, 1)]);
        assert!(d.induced_subdigraph(set(&[5])).is_err());
    }

    #[test]
    fn digraph_degree_views_agree() {
        let d = qr_tournament_7();
        for v in 0..7 {
            assert_eq!(d.out_degree(v), 3);
            assert_eq!(d.in_degree(v), 3);
            for u in d.out_neighbors(v).iter() {
                assert!(d.in_neighbors(u).contains(v));
            }
        }
        assert!(d.is_tournament());
        assert_eq!(d.max_out_degree(), 3);
        assert_eq!(d.max_in_degree(), 3);
    }

    #[test]
    fn ball_and_distances() {
        let d = directed_cycle(5);
        assert_eq!(d.ball(set(&[0]), 2), set(&[0, 1, 2]));
        assert_eq!(d.ball(set(&[0]), 10), d.vertices());
        let dist = d.distances_from(0);
        assert_eq!(dist[3], Some(3));
        let arcless = Digraph::empty(3);
        assert_eq!(arcless.distances_from(1), vec![None, Some(0), None]);
    }

    #[test]
    fn orientation_validation() {
        let g = complete(3);
        let bad = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert!(Orientation::new(g.clone(), bad).is_err());
        let two_cycle = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert!(Orientation::of_digraph(two_cycle).is_err());
        let o = Orientation::from_directions(&g, &[false, true, false]).unwrap();
        assert_eq!(o.digraph().arcs(), vec![(0, 1), (1, 2), (2, 0)]);
        assert_eq!(o.directions(), vec![false, true, false]);
    }
}
