use serde::Serialize;

use crate::graph::{directed_cycle, qr_tournament_7};
use crate::{Digraph, Error, Result, VertexSet};

/// A tournament in which every `k`-set of vertices has a common dominator,
/// with the check for each set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchutteReport {
    pub k: usize,
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
    pub checked: usize,
    pub dominated: usize,
    pub verified: bool,
    pub trace: Vec<String>,
}

fn k_subsets(n: usize, k: usize) -> Vec<VertexSet> {
    (0u64..1 << n)
        .map(VertexSet::from_bits)
        .filter(|s| s.len() == k)
        .collect()
}

fn certify(k: usize, t: Digraph) -> SchutteReport {
    let n = t.order();
    let mut sets = k_subsets(n, k);
    sets.sort_by(|a, b| a.lex_cmp(*b));
    let mut trace = Vec::with_capacity(sets.len());
    let mut dominated = 0;
    for s in &sets {
        let common = s
            .iter()
            .fold(t.vertices(), |acc, v| acc & t.in_neighbors(v));
        match common.first() {
            Some(u) => {
                dominated += 1;
                trace.push(format!("{s} dominated by {u}"));
            }
            None => trace.push(format!("{s} has no common dominator")),
        }
    }
    SchutteReport {
        k,
        n,
        arcs: t.arcs(),
        checked: sets.len(),
        dominated,
        verified: t.is_tournament() && dominated == sets.len(),
        trace,
    }
}

/// Verified witnesses for `k = 1` (the directed triangle) and `k = 2` (the
/// quadratic-residue tournament on seven vertices). Larger `k` is out of
/// scope: no construction is implemented.
pub fn schuette(k: usize) -> Result<SchutteReport> {
    match k {
        0 => Err(Error::domain("k must be at least 1")),
        1 => Ok(certify(1, directed_cycle(3))),
        2 => Ok(certify(2, qr_tournament_7())),
        _ => Err(Error::OutOfScope(format!(
            "no witness tournament is constructed for k = {k}; only k = 1 and k = 2 are available"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses() {
        let one = schuette(1).unwrap();
        assert_eq!((one.n, one.checked, one.dominated), (3, 3, 3));
        assert!(one.verified);
        let two = schuette(2).unwrap();
        assert_eq!((two.n, two.checked, two.dominated), (7, 21, 21));
        assert!(two.verified);
        assert_eq!(two.trace[0], "{0, 1} dominated by 6");
        assert!(matches!(schuette(3), Err(Error::OutOfScope(_))));
        assert!(schuette(0).is_err());
    }

    #[test]
    fn transitive_tournament_is_not_a_witness() {
        let r = certify(1, crate::graph::transitive_tournament(3));
        assert!(!r.verified);
        assert_eq!(r.dominated, 2);
    }
}
