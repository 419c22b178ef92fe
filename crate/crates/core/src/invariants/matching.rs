use petgraph::algo::maximum_matching;
use petgraph::graph::UnGraph;

use super::{Invariant, Witness, WitnessedValue};
use crate::{Graph, Result, VertexSet};

fn matching_size(g: &Graph, alive: VertexSet) -> usize {
    let mut h = UnGraph::<(), ()>::with_capacity(g.order(), g.size());
    let nodes: Vec<_> = (0..g.order()).map(|_| h.add_node(())).collect();
    for (u, v) in g.edges() {
        if alive.contains(u) && alive.contains(v) {
            h.add_edge(nodes[u], nodes[v], ());
        }
    }
    maximum_matching(&h).len()
}

/// `α′(G)`. The value comes from a blossom matching; the witness is the
/// lexicographically least maximum matching, built edge by edge in sorted
/// order, keeping an edge whenever the rest can still reach the optimum.
pub fn matching_number(g: &Graph) -> Result<WitnessedValue> {
    let target = matching_size(g, g.vertices());
    let mut alive = g.vertices();
    let mut edges = Vec::with_capacity(target);
    for (u, v) in g.edges() {
        if edges.len() == target {
            break;
        }
        if !alive.contains(u) || !alive.contains(v) {
            continue;
        }
        let mut rest = alive;
        rest.remove(u);
        rest.remove(v);
        if edges.len() + 1 + matching_size(g, rest) == target {
            edges.push((u, v));
            alive = rest;
        }
    }
    debug_assert_eq!(edges.len(), target);
    Ok(WitnessedValue {
        invariant: Invariant::Matching,
        value: target,
        witness: Witness::Edges(edges),
    })
}
