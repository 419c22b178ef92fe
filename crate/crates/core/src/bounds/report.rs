use serde::{Serialize, Serializer};

use super::formulas::*;
use crate::domination::{gamma_d_with, DominationQuery, GammaOptions};
use crate::graph::encode_graph6;
use crate::invariants::{
    chromatic_number, degeneracy, domination_number, independence_number, matching_number,
    max_independent_set,
};
use crate::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    /// Multiplicity for `Γ_{d,r}`.
    pub r: usize,
    /// Radius for `Γ_d(G, d)`.
    pub d: usize,
    pub gamma: GammaOptions,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            r: 2,
            d: 2,
            gamma: GammaOptions::default(),
        }
    }
}

/// `true`, `false`, or `"unknown"` when the bounded quantity was not
/// computed or the bound does not apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Satisfied {
    True,
    False,
    Unknown,
}

impl Serialize for Satisfied {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Satisfied::True => s.serialize_bool(true),
            Satisfied::False => s.serialize_bool(false),
            Satisfied::Unknown => s.serialize_str("unknown"),
        }
    }
}

/// The exact quantity a bound speaks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Domination,
    Independence,
    GammaD,
    GammaDr,
    GammaDDist,
    NordhausGaddumSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    AtMost,
    Below,
    AtLeast,
    Equal,
}

impl Relation {
    fn holds(self, exact: usize, value: f64) -> bool {
        let x = exact as f64;
        match self {
            Relation::AtMost => x <= value + 1e-9,
            Relation::Below => x < value,
            Relation::AtLeast => x >= value - 1e-9,
            Relation::Equal => (x - value).abs() < 1e-9,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub applicable: bool,
    pub value: Option<f64>,
    pub satisfied: Satisfied,
    #[serde(skip)]
    pub quantity: Quantity,
    #[serde(skip)]
    pub relation: Relation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphId {
    pub graph6: Option<String>,
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantSummary {
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub matching: usize,
    pub chi: Option<usize>,
    pub gamma: Option<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub avg_degree: f64,
    pub degeneracy: usize,
    pub complement_degeneracy: usize,
    /// Size of the largest induced star `K_{1,s}`.
    pub max_induced_star: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactValues {
    pub r: usize,
    pub d: usize,
    pub gamma_d: Option<usize>,
    pub gamma_dr: Option<usize>,
    pub gamma_d_dist: Option<usize>,
    pub gamma_d_complement: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub graph: GraphId,
    pub invariants: InvariantSummary,
    pub exact: ExactValues,
    pub bounds: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.bounds.iter().filter(|b| b.satisfied == Satisfied::False)
    }

    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.iter().find(|b| b.name == name)
    }
}

fn exact_max(g: &Graph, q: DominationQuery, opts: &GammaOptions) -> Option<usize> {
    gamma_d_with(g, q, opts).ok().map(|m| m.value)
}

/// Computes invariants and exact values within their caps and evaluates
/// every bound. Values out of reach are reported as missing, never guessed.
pub fn bound_report(g: &Graph, opts: &ReportOptions) -> BoundReport {
    let n = g.order();
    let m = g.size();
    let alpha = independence_number(g).expect("independence is uncapped").value;
    let matching = matching_number(g).expect("matching is uncapped").value;
    let chi = chromatic_number(g).ok().map(|w| w.value);
    let gamma = domination_number(g).ok().map(|w| w.value);
    let complement = g.complement();
    let max_induced_star = (0..n)
        .map(|v| max_independent_set(g, g.neighbors(v)).len())
        .max()
        .unwrap_or(0);
    let invariants = InvariantSummary {
        n,
        m,
        alpha,
        matching,
        chi,
        gamma,
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        avg_degree: g.average_degree(),
        degeneracy: degeneracy(g),
        complement_degeneracy: degeneracy(&complement),
        max_induced_star,
    };

    let plain = DominationQuery::PLAIN;
    let exact = ExactValues {
        r: opts.r,
        d: opts.d,
        gamma_d: exact_max(g, plain, &opts.gamma),
        gamma_dr: DominationQuery::multiple(opts.r)
            .ok()
            .and_then(|q| exact_max(g, q, &opts.gamma)),
        gamma_d_dist: DominationQuery::distance(opts.d)
            .ok()
            .and_then(|q| exact_max(g, q, &opts.gamma)),
        gamma_d_complement: exact_max(&complement, plain, &opts.gamma),
    };

    let mut bounds = Vec::new();
    let mut push = |name, applicable: bool, value: Option<f64>, quantity, relation: Relation| {
        let known = match quantity {
            Quantity::Domination => gamma,
            Quantity::Independence => Some(alpha),
            Quantity::GammaD => exact.gamma_d,
            Quantity::GammaDr => exact.gamma_dr,
            Quantity::GammaDDist => exact.gamma_d_dist,
            Quantity::NordhausGaddumSum => exact.gamma_d.zip(exact.gamma_d_complement).map(|(a, b)| a + b),
        };
        let satisfied = match (applicable, known, value) {
            (true, Some(x), Some(v)) if relation.holds(x, v) => Satisfied::True,
            (true, Some(_), Some(_)) => Satisfied::False,
            _ => Satisfied::Unknown,
        };
        bounds.push(BoundEntry {
            name,
            applicable,
            value,
            satisfied,
            quantity,
            relation,
        });
    };

    let alpha_f = Some(alpha as f64);
    push("chain_gamma_le_alpha", true, alpha_f, Quantity::Domination, Relation::AtMost);
    push("chain_alpha_le_gamma_d", true, alpha_f, Quantity::GammaD, Relation::AtLeast);
    push(
        "chain_gamma_d_le_n_minus_matching",
        true,
        Some((n - matching) as f64),
        Quantity::GammaD,
        Relation::AtMost,
    );

    let complete = g.is_complete() && n >= 2;
    let erdos = erdos_bounds(n).ok();
    push("erdos_lower", complete, erdos.map(|e| e.0), Quantity::GammaD, Relation::AtLeast);
    push("erdos_upper", complete, erdos.map(|e| e.1), Quantity::GammaD, Relation::AtMost);

    let main = main_upper(n, alpha).ok();
    push("main_upper", main.is_some(), main, Quantity::GammaD, Relation::AtMost);
    let chi_b = chi.and_then(|c| cor_chi_upper(alpha, c).ok());
    push("cor_chi_upper", chi_b.is_some(), chi_b, Quantity::GammaD, Relation::AtMost);
    let avg_b = (n > 0).then(|| cor_avg_upper(alpha, g.average_degree()).ok()).flatten();
    push("cor_avg_upper", avg_b.is_some(), avg_b, Quantity::GammaD, Relation::AtMost);

    let d_class = invariants.complement_degeneracy.max(1);
    let degen = degen_upper(n, d_class).ok();
    push("degen_upper", degen.is_some(), degen, Quantity::GammaD, Relation::AtMost);

    let star_m = (max_induced_star + 1).max(3);
    let delta = g.min_degree();
    let k1m = (n > 0).then(|| k1m_upper(n, star_m, delta).ok()).flatten();
    push("k1m_upper", k1m.is_some(), k1m, Quantity::GammaD, Relation::Below);
    let claw_free = n > 0 && max_induced_star < 3;
    push(
        "clawfree_upper",
        claw_free,
        (n > 0).then(|| clawfree_upper(n, delta)),
        Quantity::GammaD,
        Relation::AtMost,
    );
    let faudree = (n > 0).then(|| faudree_alpha_upper(n, star_m, delta).ok()).flatten();
    push("faudree_alpha_upper", faudree.is_some(), faudree, Quantity::Independence, Relation::AtMost);
    push(
        "arnautov_upper",
        n > 0,
        (n > 0).then(|| arnautov_upper(n, delta)),
        Quantity::Domination,
        Relation::AtMost,
    );

    let ng = ng_bounds(n).ok();
    push("ng_upper", ng.is_some(), ng.map(|b| b.1 as f64), Quantity::NordhausGaddumSum, Relation::AtMost);

    let rdom = rdom_uppers(n, alpha, opts.r).ok();
    push(
        "rdom_complete_upper",
        rdom.is_some() && g.is_complete(),
        rdom.map(|b| b.0),
        Quantity::GammaDr,
        Relation::AtMost,
    );
    push("rdom_general_upper", rdom.is_some(), rdom.map(|b| b.1), Quantity::GammaDr, Relation::AtMost);

    push("distance_equals_alpha", opts.d >= 2, alpha_f, Quantity::GammaDDist, Relation::Equal);

    BoundReport {
        graph: GraphId {
            graph6: encode_graph6(g).ok(),
            n,
            m,
        },
        invariants,
        exact,
        bounds,
    }
}
