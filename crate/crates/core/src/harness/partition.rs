use std::fmt;
use std::str::FromStr;

use crate::invariants::{degeneracy, independence_number};
use crate::partition::{
    degenerate_peel_extractor, greedy_partition, independence_extractor, outdegree_peel_extractor,
    PartitionCertificate,
};
use crate::{Digraph, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtractorKind {
    Independence,
    Outdegree,
    Degenerate,
}

impl FromStr for ExtractorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "independence" => Ok(ExtractorKind::Independence),
            "outdegree" | "peel" => Ok(ExtractorKind::Outdegree),
            "degenerate" => Ok(ExtractorKind::Degenerate),
            _ => Err(Error::domain(format!("unknown extractor {s:?}"))),
        }
    }
}

impl fmt::Display for ExtractorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtractorKind::Independence => "independence",
            ExtractorKind::Outdegree => "outdegree",
            ExtractorKind::Degenerate => "degenerate",
        })
    }
}

/// Runs one extractor. `param` is the independence cap for `outdegree` and
/// the degeneracy for `degenerate`; by default it is computed from the
/// underlying graph, so the hypothesis holds.
pub fn run_partition(d: &Digraph, kind: ExtractorKind, param: Option<usize>) -> Result<PartitionCertificate> {
    let g = d.underlying_graph();
    match kind {
        ExtractorKind::Independence => greedy_partition(d, &independence_extractor()),
        ExtractorKind::Outdegree => {
            let alpha = match param {
                Some(a) => a,
                None => independence_number(&g)?.value.max(1),
            };
            greedy_partition(d, &outdegree_peel_extractor(alpha))
        }
        ExtractorKind::Degenerate => {
            let k = param.unwrap_or_else(|| degeneracy(&g.complement()));
            greedy_partition(d, &degenerate_peel_extractor(k))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, directed_cycle};
    use crate::Graph;

    #[test]
    fn front_end() {
        let c = run_partition(&directed_cycle(5), ExtractorKind::Outdegree, None).unwrap();
        assert_eq!(c.part_count, 3);
        let e = run_partition(&Graph::empty(4).to_symmetric_digraph(), ExtractorKind::Independence, None).unwrap();
        assert_eq!(e.part_count, 1);
        let c5 = cycle(5).to_symmetric_digraph();
        assert!(run_partition(&c5, ExtractorKind::Degenerate, None).unwrap().validate(&c5));
        assert!(matches!(
            run_partition(&c5, ExtractorKind::Outdegree, Some(1)),
            Err(Error::HypothesisViolated(_))
        ));
        assert_eq!("peel".parse::<ExtractorKind>().unwrap(), ExtractorKind::Outdegree);
        assert!("x".parse::<ExtractorKind>().is_err());
    }
}
