use super::{Extractor, Part, PartWitness, SizeFn};
use crate::domination::{is_dds, DominationQuery};
use crate::invariants::{degeneracy, independence_number, max_independent_set};
use crate::{Digraph, Error, Result, VertexSet};

/// The vertex of largest out-degree inside `remaining` (ties to the least
/// id) and its closed out-neighborhood there.
fn peel_step(d: &Digraph, remaining: VertexSet) -> (usize, VertexSet) {
    let v = remaining
        .iter()
        .max_by_key(|&v| ((d.out_neighbors(v) & remaining).len(), std::cmp::Reverse(v)))
        .expect("non-empty remainder");
    (v, d.closed_out_neighbors(v) & remaining)
}

/// Dominating set built by repeatedly taking a vertex of maximum
/// out-degree and deleting its closed out-neighborhood.
pub fn peel_dds(d: &Digraph) -> VertexSet {
    let mut remaining = d.vertices();
    let mut s = VertexSet::EMPTY;
    while !remaining.is_empty() {
        let (v, part) = peel_step(d, remaining);
        s.insert(v);
        remaining = remaining - part;
    }
    debug_assert!(is_dds(d, s, DominationQuery::PLAIN));
    s
}

/// Lexicographically least maximum independent sets; `t = 2`, `f ≡ 1`.
#[derive(Debug, Clone)]
pub struct IndependenceExtractor {
    f: SizeFn,
}

pub fn independence_extractor() -> IndependenceExtractor {
    IndependenceExtractor {
        f: SizeFn::Constant(1.0),
    }
}

impl Extractor for IndependenceExtractor {
    fn name(&self) -> &str {
        "independence"
    }
    fn threshold(&self) -> usize {
        2
    }
    fn size_fn(&self) -> &SizeFn {
        &self.f
    }
    fn extract(&self, d: &Digraph, remaining: VertexSet) -> Part {
        let g = d.underlying_graph();
        Part {
            vertices: max_independent_set(&g, remaining),
            witness: PartWitness::Independent,
        }
    }
}

/// Closed out-neighborhoods of maximum out-degree vertices for graphs with
/// `α ≤ alpha`; `t = α`, `f(x) = (x − α)/(2α) + 1`.
#[derive(Debug, Clone)]
pub struct OutdegreePeel {
    alpha: usize,
    f: SizeFn,
}

pub fn outdegree_peel_extractor(alpha_cap: usize) -> OutdegreePeel {
    OutdegreePeel {
        alpha: alpha_cap,
        f: SizeFn::IndependenceClass { alpha: alpha_cap },
    }
}

impl Extractor for OutdegreePeel {
    fn name(&self) -> &str {
        "outdegree"
    }
    fn threshold(&self) -> usize {
        self.alpha
    }
    fn size_fn(&self) -> &SizeFn {
        &self.f
    }
    fn check_hypothesis(&self, d: &Digraph) -> Result<()> {
        if self.alpha == 0 {
            return Err(Error::HypothesisViolated("independence cap must be at least 1".into()));
        }
        let alpha = independence_number(&d.underlying_graph())?.value;
        if alpha > self.alpha {
            return Err(Error::HypothesisViolated(format!(
                "independence number {alpha} exceeds the cap {}",
                self.alpha
            )));
        }
        Ok(())
    }
    fn extract(&self, d: &Digraph, remaining: VertexSet) -> Part {
        let (v, part) = peel_step(d, remaining);
        Part {
            vertices: part,
            witness: PartWitness::Dominator(v),
        }
    }
}

/// Peeling for graphs whose complement is `d`-degenerate; `t = 2d + 1`,
/// `f(x) = (x − 1)/2 − d + 1`.
#[derive(Debug, Clone)]
pub struct DegeneratePeel {
    d: usize,
    f: SizeFn,
}

pub fn degenerate_peel_extractor(d: usize) -> DegeneratePeel {
    DegeneratePeel {
        d,
        f: SizeFn::DegenerateComplement { d },
    }
}

impl Extractor for DegeneratePeel {
    fn name(&self) -> &str {
        "degenerate"
    }
    fn threshold(&self) -> usize {
        2 * self.d + 1
    }
    fn size_fn(&self) -> &SizeFn {
        &self.f
    }
    fn check_hypothesis(&self, dg: &Digraph) -> Result<()> {
        let k = degeneracy(&dg.underlying_graph().complement());
        if k > self.d {
            return Err(Error::HypothesisViolated(format!(
                "complement is {k}-degenerate, not {}-degenerate",
                self.d
            )));
        }
        Ok(())
    }
    fn extract(&self, d: &Digraph, remaining: VertexSet) -> Part {
        let (v, part) = peel_step(d, remaining);
        Part {
            vertices: part,
            witness: PartWitness::Dominator(v),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, directed_cycle, orientations, transitive_tournament};
    use crate::partition::greedy_partition;

    #[test]
    fn peel_examples() {
        assert_eq!(peel_dds(&transitive_tournament(3)).to_vec(), vec![0]);
        assert_eq!(peel_dds(&Digraph::empty(4)).len(), 4);
        assert_eq!(peel_dds(&directed_cycle(3)).len(), 2);
    }

    #[test]
    fn parameters() {
        let e = outdegree_peel_extractor(3);
        assert_eq!(e.threshold(), 3);
        assert_eq!(e.size_fn().eval(3.0), 1.0);
        assert_eq!(e.size_fn().eval(9.0), 2.0);
        let e = degenerate_peel_extractor(2);
        assert_eq!(e.threshold(), 5);
        assert_eq!(e.size_fn().eval(5.0), 1.0);
        assert_eq!(e.size_fn().eval(9.0), 3.0);
        assert_eq!(independence_extractor().threshold(), 2);
    }

    #[test]
    fn tournament_parts_are_large() {
        for n in 1..=6 {
            for o in orientations(&complete(n)).unwrap() {
                let c = greedy_partition(o.digraph(), &outdegree_peel_extractor(1)).unwrap();
                let mut left = n;
                for p in &c.parts {
                    assert!(p.len() as f64 >= (left as f64 - 1.0) / 2.0 + 1.0);
                    left -= p.len();
                }
                let c = greedy_partition(o.digraph(), &degenerate_peel_extractor(0)).unwrap();
                assert!(c.validate(o.digraph()));
            }
        }
    }
}
