//! Greedy partition engine.
//!
//! An [`Extractor`] pulls a part with some hereditary property out of any
//! instance with at least `t` vertices, of size at least `⌈f(n_H)⌉`. The
//! engine applies it until fewer than `t` vertices remain and finishes with
//! singletons; the number of parts then never exceeds
//! `⌈t + ∫_t^max(n,t) dx/f(x)⌉`.
//!
//! Instances are digraphs. A graph enters as its symmetric digraph, so
//! out-neighborhoods are neighborhoods and independence is read off the
//! underlying graph.

mod bound;
mod extractors;

use serde::Serialize;

use crate::{Digraph, Error, Result, VertexSet};

pub use bound::{gpl_bound, gpl_bound_quadrature, integrate_reciprocal, SizeFn, MAX_SUBDIVISIONS, QUADRATURE_TOLERANCE};
pub use extractors::{
    degenerate_peel_extractor, independence_extractor, outdegree_peel_extractor, peel_dds,
    DegeneratePeel, IndependenceExtractor, OutdegreePeel,
};

const SLACK: f64 = 1e-9;

/// Evidence that a part has the extracted property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PartWitness {
    /// The part is independent in the underlying graph.
    Independent,
    /// The part lies in the closed out-neighborhood of this vertex.
    Dominator(usize),
    Singleton,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Part {
    pub vertices: VertexSet,
    pub witness: PartWitness,
}

impl Part {
    pub fn validate(&self, d: &Digraph) -> bool {
        let s = self.vertices;
        !s.is_empty()
            && match self.witness {
                PartWitness::Independent => d.is_independent(s),
                PartWitness::Dominator(v) => s.contains(v) && s.is_subset(d.closed_out_neighbors(v)),
                PartWitness::Singleton => s.len() == 1,
            }
    }
}

pub trait Extractor {
    fn name(&self) -> &str;
    fn threshold(&self) -> usize;
    fn size_fn(&self) -> &SizeFn;

    /// Checks that `d` belongs to the class the size guarantee covers.
    fn check_hypothesis(&self, _d: &Digraph) -> Result<()> {
        Ok(())
    }

    /// A part inside `remaining`, computed on the digraph induced by it.
    fn extract(&self, d: &Digraph, remaining: VertexSet) -> Part;
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartitionCertificate {
    pub extractor: String,
    pub threshold: usize,
    pub parts: Vec<VertexSet>,
    pub witnesses: Vec<PartWitness>,
    pub bound: f64,
    pub part_count: usize,
}

/// `⌈x⌉` with a small allowance for rounding in `x`.
pub(crate) fn ceil_slack(x: f64) -> usize {
    (x - SLACK).ceil().max(0.0) as usize
}

impl PartitionCertificate {
    pub fn bound_ceiling(&self) -> usize {
        ceil_slack(self.bound)
    }

    /// Re-checks the partition, every witness and the part count.
    pub fn validate(&self, d: &Digraph) -> bool {
        let mut seen = VertexSet::EMPTY;
        for (&vertices, &witness) in self.parts.iter().zip(&self.witnesses) {
            if !(seen & vertices).is_empty() || !(Part { vertices, witness }).validate(d) {
                return false;
            }
            seen |= vertices;
        }
        seen == d.vertices()
            && self.parts.len() == self.witnesses.len()
            && self.part_count == self.parts.len()
            && self.part_count <= self.bound_ceiling()
    }

    pub fn dominators(&self) -> VertexSet {
        self.parts
            .iter()
            .zip(&self.witnesses)
            .map(|(p, w)| match *w {
                PartWitness::Dominator(v) => VertexSet::singleton(v),
                _ => *p,
            })
            .fold(VertexSet::EMPTY, |a, b| a | b)
    }
}

/// Runs the greedy recursion and certifies the result.
pub fn greedy_partition(d: &Digraph, e: &dyn Extractor) -> Result<PartitionCertificate> {
    e.check_hypothesis(d)?;
    let t = e.threshold();
    let f = e.size_fn();
    let bound = gpl_bound(t, f, d.order())?;
    let mut remaining = d.vertices();
    let mut parts = Vec::new();
    let mut witnesses = Vec::new();
    while remaining.len() >= t.max(1) {
        let n_h = remaining.len();
        let part = e.extract(d, remaining);
        if part.vertices.is_empty() || !part.vertices.is_subset(remaining) || !part.validate(d) {
            return Err(Error::ContractViolation(format!(
                "extractor {} returned an invalid part {} from {}",
                e.name(),
                part.vertices,
                remaining
            )));
        }
        let need = ceil_slack(f.eval(n_h as f64));
        if part.vertices.len() < need {
            return Err(Error::ContractViolation(format!(
                "extractor {} returned {} vertices from an instance of {n_h}, guaranteed {need}",
                e.name(),
                part.vertices.len()
            )));
        }
        remaining = remaining - part.vertices;
        parts.push(part.vertices);
        witnesses.push(part.witness);
    }
    for v in remaining.iter() {
        parts.push(VertexSet::singleton(v));
        witnesses.push(PartWitness::Singleton);
    }
    let cert = PartitionCertificate {
        extractor: e.name().to_string(),
        threshold: t,
        part_count: parts.len(),
        parts,
        witnesses,
        bound,
    };
    if cert.part_count > cert.bound_ceiling() {
        return Err(Error::ContractViolation(format!(
            "{} parts exceed the bound {:.6}",
            cert.part_count, cert.bound
        )));
    }
    Ok(cert)
}
