use crate::Graph;

/// Removal order of repeated minimum-degree deletion, ties to the least id.
pub fn degeneracy_ordering(g: &Graph) -> Vec<usize> {
    let mut alive = g.vertices();
    let mut order = Vec::with_capacity(g.order());
    while !alive.is_empty() {
        let v = alive
            .iter()
            .min_by_key(|&v| ((g.neighbors(v) & alive).len(), v))
            .expect("non-empty");
        order.push(v);
        alive.remove(v);
    }
    order
}

/// Least `d` such that every induced subgraph has a vertex of degree at
/// most `d`. The empty graph on zero vertices has degeneracy 0.
pub fn degeneracy(g: &Graph) -> usize {
    let mut alive = g.vertices();
    let mut d = 0;
    for v in degeneracy_ordering(g) {
        d = d.max((g.neighbors(v) & alive).len());
        alive.remove(v);
    }
    d
}

pub fn is_complement_d_degenerate(g: &Graph, d: usize) -> bool {
    degeneracy(&g.complement()) <= d
}
