use super::{gamma, is_dds, DominationQuery};
use crate::invariants::max_independent_set;
use crate::{Digraph, Error, Graph, Orientation, Result, VertexSet};

/// Union of `r` successive minimum dominating sets: `S_1` dominates `D`,
/// `S_2` dominates what is left after deleting `S_1`, and so on. The union
/// is a directed `r`-dominating set of `D`.
pub fn stacked_dds(d: &Digraph, r: usize) -> Result<VertexSet> {
    if r == 0 {
        return Err(Error::domain("r must be at least 1"));
    }
    let mut union = VertexSet::EMPTY;
    let mut remaining = d.vertices();
    for _ in 0..r {
        if remaining.is_empty() {
            break;
        }
        let ids = remaining.to_vec();
        let sub = d.induced_subdigraph(remaining)?;
        let stage = gamma(&sub, DominationQuery::PLAIN)?.witness;
        let stage: VertexSet = stage.iter().map(|i| ids[i]).collect();
        union |= stage;
        remaining = remaining - stage;
    }
    let q = DominationQuery::multiple(r)?;
    if !is_dds(d, union, q) {
        return Err(Error::ContractViolation(format!(
            "stacked set {union} is not {r}-dominating"
        )));
    }
    Ok(union)
}

/// An independent set `U` reaching every other vertex within directed
/// distance 2.
///
/// Take the least vertex `v`, solve the digraph left after deleting `N⁺[v]`
/// to get `Q`, and return `Q` when some arc enters `v` from `Q`, else
/// `Q ∪ {v}`. The recursion is unrolled: pivots are collected top-down and
/// the answer is assembled bottom-up.
pub fn semi_kernel(d: &Digraph) -> VertexSet {
    let mut remaining = d.vertices();
    let mut pivots = Vec::new();
    while let Some(v) = remaining.first() {
        pivots.push(v);
        remaining = remaining - d.closed_out_neighbors(v);
    }
    let mut kernel = VertexSet::EMPTY;
    for &v in pivots.iter().rev() {
        if (kernel & d.in_neighbors(v)).is_empty() {
            kernel.insert(v);
        }
    }
    kernel
}

/// Orients `g` so that the lexicographically least maximum independent set
/// `S` has no entering arc: edges between `S` and the rest leave `S`, every
/// other edge goes from the lower id to the higher one. Every distance
/// dominating set of the result contains `S`.
pub fn adversarial_orientation(g: &Graph) -> Orientation {
    let s = max_independent_set(g, g.vertices());
    let mut d = Digraph::empty(g.order());
    for (u, v) in g.edges() {
        if s.contains(v) {
            d.add_arc(v, u);
        } else {
            d.add_arc(u, v);
        }
    }
    Orientation::new(g.clone(), d).expect("every edge oriented once")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, directed_cycle, random_digraph, transitive_tournament};
    use crate::Seed;

    fn set(ids: &[usize]) -> VertexSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn stacked_examples() {
        let c5 = directed_cycle(5);
        assert_eq!(
            stacked_dds(&c5, 1).unwrap(),
            gamma(&c5, DominationQuery::PLAIN).unwrap().witness
        );
        // stage one {0, 1, 3}, stage two {2, 4}
        assert_eq!(stacked_dds(&c5, 2).unwrap(), c5.vertices());
        assert!(stacked_dds(&c5, 0).is_err());
        let t = transitive_tournament(5);
        assert_eq!(stacked_dds(&t, 2).unwrap(), set(&[0, 1]));
    }

    #[test]
    fn semi_kernel_examples() {
        assert_eq!(semi_kernel(&Digraph::empty(4)), set(&[0, 1, 2, 3]));
        assert_eq!(semi_kernel(&transitive_tournament(3)), set(&[0]));
        assert_eq!(semi_kernel(&directed_cycle(5)), set(&[2, 4]));
        assert_eq!(semi_kernel(&Digraph::empty(0)), VertexSet::EMPTY);
    }

    #[test]
    fn semi_kernel_properties_on_random_digraphs() {
        for s in 0..500 {
            let d = random_digraph(9, 0.3, Seed(s));
            let u = semi_kernel(&d);
            assert!(d.is_independent(u));
            assert!(is_dds(&d, u, DominationQuery::distance(2).unwrap()));
        }
    }

    #[test]
    fn adversarial_examples() {
        let k4 = adversarial_orientation(&complete(4));
        assert_eq!(k4.digraph().out_neighbors(0), set(&[1, 2, 3]));
        assert_eq!(gamma(k4.digraph(), DominationQuery::PLAIN).unwrap().value, 1);

        let c5 = adversarial_orientation(&cycle(5));
        assert_eq!(c5.digraph().in_degree(0), 0);
        assert_eq!(c5.digraph().in_degree(2), 0);
        assert_eq!(gamma(c5.digraph(), DominationQuery::PLAIN).unwrap().value, 2);

        let e = adversarial_orientation(&Graph::empty(4));
        assert_eq!(e.digraph().arc_count(), 0);
        assert_eq!(gamma(e.digraph(), DominationQuery::PLAIN).unwrap().value, 4);
    }
}
