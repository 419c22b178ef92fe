use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::worker_pool;
use crate::bounds::{bound_report, degen_upper, k1m_upper, main_upper, rdom_uppers, ReportOptions};
use crate::domination::{adversarial_orientation, gamma_d_with, gamma_value, is_dds, DominationQuery, GammaOptions};
use crate::graph::{encode_graph6, parse_graph6, random_gnp, OrientationIndexer};
use crate::invariants::{
    degeneracy, domination_number, independence_number, matching_number, max_independent_set,
};
use crate::partition::{greedy_partition, outdegree_peel_extractor, peel_dds};
use crate::{Digraph, Error, Graph, Result, Seed};

/// Largest order enumerated exhaustively by default.
pub const EXHAUSTIVE_MAX_ORDER: usize = 5;
/// Largest order enumerated exhaustively with the large-run override.
pub const EXHAUSTIVE_MAX_ORDER_LARGE: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// `γ ≤ α ≤ Γ_d ≤ n − α′`.
    Chain,
    /// `Γ_d ≤ α(1 + 2 ln(n/α))`.
    Main,
    /// The peeling construction and the partition engine stay within the
    /// main bound on every orientation.
    Peel,
    /// `Γ_d(G) + Γ_d(Ḡ) ≤ n + ⌈n/2⌉`.
    NgUpper,
    /// `Γ_d(G, d) = α` for `d ≥ 2`, and the adversarial orientation attains
    /// `α` for every radius up to `d`.
    Distance,
    /// `Γ_{d,r}` against its two upper bounds.
    Rdom,
    /// `Γ_d ≤ 2d + 1 + 2 ln((n − 2d + 1)/2)` when the complement is
    /// `d`-degenerate.
    Degenerate,
    /// `Γ_d < 2(m−1) n ln(δ+m−1)/(δ+m−1)` for the least `m ≥ 3` with `G`
    /// `K_{1,m}`-free.
    K1m,
    /// Every applicable, exactly checkable entry of the bound report.
    Bounds,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::Chain,
        Theorem::Main,
        Theorem::Peel,
        Theorem::NgUpper,
        Theorem::Distance,
        Theorem::Rdom,
        Theorem::Degenerate,
        Theorem::K1m,
        Theorem::Bounds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Chain => "chain",
            Theorem::Main => "main",
            Theorem::Peel => "peel",
            Theorem::NgUpper => "ng-upper",
            Theorem::Distance => "distance",
            Theorem::Rdom => "rdom",
            Theorem::Degenerate => "degenerate",
            Theorem::K1m => "k1m",
            Theorem::Bounds => "bounds",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('_', "-");
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == key)
            .ok_or_else(|| Error::domain(format!("unknown theorem {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Universe {
    /// Every labeled graph on exactly `n` vertices.
    Exhaustive { n: usize },
    /// `samples` draws of `G(n, p)`; sample `i` uses seed `seed + i`.
    Sampled { n: usize, samples: u64, seed: u64, p: f64 },
}

impl Universe {
    fn describe(&self) -> String {
        match *self {
            Universe::Exhaustive { n } => format!(
                "all {} labeled graphs on {n} vertices",
                labeled_graph_count(n).unwrap_or(u64::MAX)
            ),
            Universe::Sampled { n, samples, seed, p } => {
                format!("{samples} samples of G({n}, {p}), seed {seed}")
            }
        }
    }

    fn count(&self) -> Result<u64> {
        match *self {
            Universe::Exhaustive { n } => labeled_graph_count(n),
            Universe::Sampled { samples, .. } => Ok(samples),
        }
    }

    fn graph(&self, index: u64) -> Graph {
        match *self {
            Universe::Exhaustive { n } => labeled_graph(n, index),
            Universe::Sampled { n, seed, p, .. } => random_gnp(n, p, Seed(seed.wrapping_add(index))),
        }
    }
}

/// `2^C(n,2)`, the number of labeled graphs on `n` vertices.
pub fn labeled_graph_count(n: usize) -> Result<u64> {
    let pairs = n * n.saturating_sub(1) / 2;
    if pairs >= 64 {
        return Err(Error::cap(format!("2^{pairs} labeled graphs on {n} vertices")));
    }
    Ok(1 << pairs)
}

/// The labeled graph whose edge set is bit pattern `index` over the pairs
/// of `{0..n−1}` in sorted order, least significant bit first.
pub fn labeled_graph(n: usize, index: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if index >> bit & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    g
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub theorem: Theorem,
    pub universe: Universe,
    pub r: usize,
    pub d: usize,
    pub gamma: GammaOptions,
    pub workers: usize,
    pub allow_large: bool,
}

impl VerifyConfig {
    pub fn new(theorem: Theorem, universe: Universe) -> Self {
        VerifyConfig {
            theorem,
            universe,
            r: 2,
            d: 2,
            gamma: GammaOptions::default(),
            workers: 1,
            allow_large: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub index: u64,
    pub graph6: String,
    pub detail: String,
}

impl Violation {
    /// Re-runs the check on the stored graph; `true` when the violation
    /// reproduces.
    pub fn replay(&self, cfg: &VerifyConfig) -> Result<bool> {
        let g = parse_graph6(&self.graph6)?;
        Ok(check_graph(cfg, &g)?.violation.is_some())
    }
}

/// Range of `Γ_d(G) + Γ_d(Ḡ)` over the checked graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NgStats {
    pub min: usize,
    pub max: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub universe: String,
    pub checked: u64,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ng: Option<NgStats>,
    pub pass: bool,
    /// Wall-clock time; not serialized, so reports stay byte-identical.
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Result of checking one graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphOutcome {
    pub violation: Option<String>,
    pub ng_sum: Option<usize>,
}

fn exact(g: &Graph, q: DominationQuery, cfg: &VerifyConfig) -> Result<usize> {
    let opts = GammaOptions {
        workers: 1,
        ..cfg.gamma
    };
    Ok(gamma_d_with(g, q, &opts)?.value)
}

fn fail(cond: bool, detail: impl FnOnce() -> String) -> Option<String> {
    (!cond).then(detail)
}

fn for_each_orientation(
    g: &Graph,
    cap: u64,
    mut f: impl FnMut(u64, &Digraph) -> Result<Option<String>>,
) -> Result<Option<String>> {
    let ix = OrientationIndexer::new(g)?;
    if ix.count() > cap {
        return Err(Error::cap(format!(
            "{} orientations exceed the cap {cap}",
            ix.count()
        )));
    }
    let mut buf = Digraph::empty(g.order());
    for index in 0..ix.count() {
        ix.fill(index, &mut buf);
        if let Some(v) = f(index, &buf)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Checks the configured theorem on one graph.
pub fn check_graph(cfg: &VerifyConfig, g: &Graph) -> Result<GraphOutcome> {
    let n = g.order();
    let plain = DominationQuery::PLAIN;
    let mut out = GraphOutcome::default();
    out.violation = match cfg.theorem {
        Theorem::Chain => {
            let gamma = domination_number(g)?.value;
            let alpha = independence_number(g)?.value;
            let big = exact(g, plain, cfg)?;
            let rhs = n - matching_number(g)?.value;
            fail(gamma <= alpha && alpha <= big && big <= rhs, || {
                format!("gamma={gamma} alpha={alpha} Gamma_d={big} n-matching={rhs}")
            })
        }
        Theorem::Main => {
            if n == 0 {
                None
            } else {
                let alpha = independence_number(g)?.value;
                let big = exact(g, plain, cfg)?;
                let bound = main_upper(n, alpha)?;
                fail(big as f64 <= bound + 1e-9, || format!("Gamma_d={big} > {bound:.6} (alpha={alpha})"))
            }
        }
        Theorem::Peel => {
            if n == 0 {
                None
            } else {
                let alpha = independence_number(g)?.value;
                let bound = main_upper(n, alpha)?;
                let extractor = outdegree_peel_extractor(alpha);
                for_each_orientation(g, cfg.gamma.cap, |index, d| {
                    let peel = peel_dds(d);
                    let cert = greedy_partition(d, &extractor)?;
                    let dominators = cert.dominators();
                    Ok(fail(
                        is_dds(d, peel, plain)
                            && is_dds(d, dominators, plain)
                            && cert.validate(d)
                            && peel.len() as f64 <= bound + 1e-9
                            && cert.part_count as f64 <= bound + 1e-9,
                        || {
                            format!(
                                "orientation {index}: peel={} parts={} bound={bound:.6}",
                                peel.len(),
                                cert.part_count
                            )
                        },
                    ))
                })?
            }
        }
        Theorem::NgUpper => {
            let sum = exact(g, plain, cfg)? + exact(&g.complement(), plain, cfg)?;
            out.ng_sum = Some(sum);
            let cap = n + n.div_ceil(2);
            fail(sum <= cap, || format!("Gamma_d(G)+Gamma_d(co-G)={sum} > {cap}"))
        }
        Theorem::Distance => {
            if cfg.d < 2 {
                return Err(Error::domain("the distance theorem needs d >= 2"));
            }
            let alpha = independence_number(g)?.value;
            let big = exact(g, DominationQuery::distance(cfg.d)?, cfg)?;
            let adversarial = adversarial_orientation(g);
            let mut detail = fail(big == alpha, || format!("Gamma_d(G,{})={big} != alpha={alpha}", cfg.d));
            for radius in 1..=cfg.d {
                let v = gamma_value(adversarial.digraph(), DominationQuery::distance(radius)?)?;
                if detail.is_none() && v != alpha {
                    detail = Some(format!("adversarial orientation at d={radius}: gamma={v} != alpha={alpha}"));
                }
            }
            detail
        }
        Theorem::Rdom => {
            if n == 0 {
                None
            } else {
                let alpha = independence_number(g)?.value;
                let big = exact(g, DominationQuery::multiple(cfg.r)?, cfg)?;
                let (complete_case, general) = rdom_uppers(n, alpha, cfg.r)?;
                let ok = big as f64 <= general + 1e-9
                    && (!g.is_complete() || big as f64 <= complete_case + 1e-9);
                fail(ok, || {
                    format!("Gamma_(d,{})={big}; bounds {complete_case:.6} (complete), {general:.6}", cfg.r)
                })
            }
        }
        Theorem::Degenerate => {
            let d = degeneracy(&g.complement()).max(1);
            if n < 2 * d + 1 {
                None
            } else {
                let big = exact(g, plain, cfg)?;
                let bound = degen_upper(n, d)?;
                fail(big as f64 <= bound + 1e-9, || format!("Gamma_d={big} > {bound:.6} (d={d})"))
            }
        }
        Theorem::K1m => {
            if n == 0 {
                None
            } else {
                let star = (0..n)
                    .map(|v| max_independent_set(g, g.neighbors(v)).len())
                    .max()
                    .unwrap_or(0);
                let m = (star + 1).max(3);
                let big = exact(g, plain, cfg)?;
                let bound = k1m_upper(n, m, g.min_degree())?;
                fail((big as f64) < bound, || format!("Gamma_d={big} >= {bound:.6} (m={m})"))
            }
        }
        Theorem::Bounds => {
            let opts = ReportOptions {
                r: cfg.r,
                d: cfg.d,
                gamma: GammaOptions { workers: 1, ..cfg.gamma },
            };
            let report = bound_report(g, &opts);
            let bad: Vec<_> = report.violations().map(|b| b.name).collect();
            fail(bad.is_empty(), || format!("violated: {}", bad.join(", ")))
        }
    };
    Ok(out)
}

fn check_scale(cfg: &VerifyConfig) -> Result<()> {
    let limit = if cfg.allow_large {
        EXHAUSTIVE_MAX_ORDER_LARGE
    } else {
        EXHAUSTIVE_MAX_ORDER
    };
    match cfg.universe {
        Universe::Exhaustive { n } if n > limit => Err(Error::cap(format!(
            "exhaustive verification is limited to n <= {limit}{}",
            if cfg.allow_large { "" } else { " without --allow-large" }
        ))),
        Universe::Sampled { p, .. } if !(0.0..=1.0).contains(&p) => {
            Err(Error::domain(format!("edge probability {p} outside [0, 1]")))
        }
        _ => Ok(()),
    }
}

/// Checks every graph of the universe, in parallel over `cfg.workers`
/// threads; results are merged in index order.
pub fn verify(cfg: &VerifyConfig) -> Result<VerificationReport> {
    check_scale(cfg)?;
    let start = Instant::now();
    let count = cfg.universe.count()?;
    let pool = worker_pool(cfg.workers)?;
    let outcomes: Vec<(u64, GraphOutcome, Graph)> = pool.install(|| {
        (0..count)
            .into_par_iter()
            .map(|i| {
                let g = cfg.universe.graph(i);
                check_graph(cfg, &g).map(|o| (i, o, g))
            })
            .collect::<Result<_>>()
    })?;
    let mut violations = Vec::new();
    let mut ng: Option<NgStats> = None;
    for (index, outcome, g) in outcomes {
        if let Some(sum) = outcome.ng_sum {
            ng = Some(match ng {
                None => NgStats { min: sum, max: sum },
                Some(s) => NgStats {
                    min: s.min.min(sum),
                    max: s.max.max(sum),
                },
            });
        }
        if let Some(detail) = outcome.violation {
            violations.push(Violation {
                index,
                graph6: encode_graph6(&g)?,
                detail,
            });
        }
    }
    Ok(VerificationReport {
        theorem: cfg.theorem,
        universe: cfg.universe.describe(),
        checked: count,
        pass: violations.is_empty(),
        violations,
        ng,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_graphs() {
        assert_eq!(labeled_graph_count(4).unwrap(), 64);
        assert_eq!(labeled_graph_count(5).unwrap(), 1024);
        assert_eq!(labeled_graph(3, 0b111), crate::graph::complete(3));
        assert_eq!(labeled_graph(3, 0b001).edges(), vec![(0, 1)]);
        assert_eq!(labeled_graph(3, 0b100).edges(), vec![(1, 2)]);
        assert!(labeled_graph_count(12).is_err());
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.name().parse::<Theorem>().unwrap(), t);
        }
        assert_eq!("ng_upper".parse::<Theorem>().unwrap(), Theorem::NgUpper);
        assert!("nope".parse::<Theorem>().is_err());
    }

    #[test]
    fn chain_on_four_vertices() {
        let r = verify(&VerifyConfig::new(Theorem::Chain, Universe::Exhaustive { n: 4 })).unwrap();
        assert_eq!(r.checked, 64);
        assert!(r.pass);
    }

    #[test]
    fn distance_on_four_vertices() {
        let r = verify(&VerifyConfig::new(Theorem::Distance, Universe::Exhaustive { n: 4 })).unwrap();
        assert_eq!(r.checked, 64);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn ng_stats_on_four_vertices() {
        let r = verify(&VerifyConfig::new(Theorem::NgUpper, Universe::Exhaustive { n: 4 })).unwrap();
        assert!(r.pass);
        assert_eq!(r.ng, Some(NgStats { min: 4, max: 6 }));
    }

    #[test]
    fn every_theorem_on_small_universes() {
        for t in Theorem::ALL {
            let r = verify(&VerifyConfig::new(t, Universe::Exhaustive { n: 3 })).unwrap();
            assert!(r.pass, "{t}: {:?}", r.violations);
            let mut cfg = VerifyConfig::new(t, Universe::Sampled { n: 5, samples: 20, seed: 9, p: 0.5 });
            cfg.workers = 3;
            assert!(verify(&cfg).unwrap().pass, "{t}");
        }
    }

    #[test]
    fn scale_is_capped() {
        let cfg = VerifyConfig::new(Theorem::Chain, Universe::Exhaustive { n: 6 });
        assert!(matches!(verify(&cfg), Err(Error::ResourceCap(_))));
        let mut cfg = VerifyConfig::new(Theorem::Chain, Universe::Exhaustive { n: 7 });
        cfg.allow_large = true;
        assert!(matches!(verify(&cfg), Err(Error::ResourceCap(_))));
    }

    #[test]
    fn parallel_matches_serial() {
        let base = VerifyConfig::new(Theorem::Main, Universe::Sampled { n: 6, samples: 30, seed: 1, p: 0.5 });
        let serial = verify(&base).unwrap();
        let par = verify(&VerifyConfig { workers: 4, ..base }).unwrap();
        assert_eq!(
            serde_json::to_string(&serial).unwrap(),
            serde_json::to_string(&par).unwrap()
        );
    }

    #[test]
    fn replay_rechecks_the_stored_graph() {
        let cfg = VerifyConfig::new(Theorem::Chain, Universe::Exhaustive { n: 3 });
        let v = Violation {
            index: 0,
            graph6: encode_graph6(&Graph::empty(3)).unwrap(),
            detail: String::new(),
        };
        assert!(!v.replay(&cfg).unwrap());
        let broken = Violation {
            graph6: "~~".into(),
            ..v
        };
        assert!(broken.replay(&cfg).is_err());
    }
}
