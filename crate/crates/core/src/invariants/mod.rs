//! Classical graph invariants, each computed exactly with a witness.
//!
//! Every search breaks ties toward the lexicographically least witness so
//! repeated runs agree.

mod coloring;
mod degeneracy;
mod independence;
mod matching;
mod outdegree;

use num_rational::Ratio;
use serde::Serialize;

use crate::domination::{gamma, DominationQuery, GAMMA_MAX_ORDER};
use crate::{Error, Graph, Result, VertexSet};

pub use coloring::{chromatic_number, CHROMATIC_MAX_ORDER};
pub use degeneracy::{degeneracy, degeneracy_ordering, is_complement_d_degenerate};
pub use independence::{first_independent_of_size, independence_number, max_independent_set};
pub use matching::matching_number;
pub use outdegree::{min_max_outdegree, MinMaxOutdegree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Independence,
    Matching,
    Chromatic,
    Domination,
    Covering,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Vertices(VertexSet),
    Edges(Vec<(usize, usize)>),
    Classes(Vec<VertexSet>),
}

/// An invariant value with the structure attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessedValue {
    pub invariant: Invariant,
    pub value: usize,
    pub witness: Witness,
}

impl WitnessedValue {
    /// Checks the witness against the defining predicate and the claimed
    /// value. Optimality is not re-proved here.
    pub fn validate(&self, g: &Graph) -> bool {
        let all = g.vertices();
        match (&self.invariant, &self.witness) {
            (Invariant::Independence, Witness::Vertices(s)) => {
                s.is_subset(all) && g.is_independent(*s) && s.len() == self.value
            }
            (Invariant::Covering, Witness::Vertices(s)) => {
                s.is_subset(all)
                    && g.edges().iter().all(|&(u, v)| s.contains(u) || s.contains(v))
                    && s.len() == self.value
            }
            (Invariant::Domination, Witness::Vertices(s)) => {
                let mut dominated = *s;
                for v in s.iter() {
                    dominated |= g.neighbors(v);
                }
                s.is_subset(all) && dominated == all && s.len() == self.value
            }
            (Invariant::Matching, Witness::Edges(edges)) => {
                let mut used = VertexSet::EMPTY;
                for &(u, v) in edges {
                    if !g.has_edge(u, v) || used.contains(u) || used.contains(v) {
                        return false;
                    }
                    used.insert(u);
                    used.insert(v);
                }
                edges.len() == self.value
            }
            (Invariant::Chromatic, Witness::Classes(classes)) => {
                let mut seen = VertexSet::EMPTY;
                for &c in classes {
                    if c.is_empty() || !(seen & c).is_empty() || !g.is_independent(c) {
                        return false;
                    }
                    seen |= c;
                }
                seen == all && classes.len() == self.value
            }
            _ => false,
        }
    }

    pub fn vertices(&self) -> Option<VertexSet> {
        match self.witness {
            Witness::Vertices(s) => Some(s),
            _ => None,
        }
    }
}

/// `γ(G)`, the undirected domination number, through the directed solver on
/// the symmetric digraph of `G`.
pub fn domination_number(g: &Graph) -> Result<WitnessedValue> {
    if g.order() > GAMMA_MAX_ORDER {
        return Err(Error::cap(format!(
            "domination number handles at most {GAMMA_MAX_ORDER} vertices, got {}",
            g.order()
        )));
    }
    let r = gamma(&g.to_symmetric_digraph(), DominationQuery::PLAIN)?;
    Ok(WitnessedValue {
        invariant: Invariant::Domination,
        value: r.value,
        witness: Witness::Vertices(r.witness),
    })
}

/// `β(G) = n − α(G)`, witnessed by the complement of the independence
/// witness.
pub fn covering_number(g: &Graph) -> Result<WitnessedValue> {
    let alpha = independence_number(g)?;
    let cover = g.vertices() - alpha.vertices().expect("vertex witness");
    let value = WitnessedValue {
        invariant: Invariant::Covering,
        value: cover.len(),
        witness: Witness::Vertices(cover),
    };
    debug_assert!(value.validate(g));
    Ok(value)
}

/// `Σ_v 1/(d(v)+1)` as an exact fraction.
pub fn caro_wei(g: &Graph) -> Ratio<i128> {
    let mut by_degree = vec![0i128; g.order().max(1)];
    for v in 0..g.order() {
        by_degree[g.degree(v)] += 1;
    }
    by_degree
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(d, &c)| Ratio::new(c, d as i128 + 1))
        .sum()
}

/// An induced `K_{1,m}`: a center and `m` pairwise non-adjacent neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedStar {
    pub center: usize,
    pub leaves: VertexSet,
}

/// `Ok(None)` when `g` has no induced `K_{1,m}`; otherwise the star with
/// the least center and, for it, the lexicographically least leaf set.
pub fn find_induced_star(g: &Graph, m: usize) -> Result<Option<InducedStar>> {
    if m < 2 {
        return Err(Error::domain(format!("K_(1,m)-freeness needs m >= 2, got {m}")));
    }
    for center in 0..g.order() {
        if let Some(leaves) = first_independent_of_size(g, g.neighbors(center), m) {
            return Ok(Some(InducedStar { center, leaves }));
        }
    }
    Ok(None)
}

pub fn is_k1m_free(g: &Graph, m: usize) -> Result<bool> {
    Ok(find_induced_star(g, m)?.is_none())
}
