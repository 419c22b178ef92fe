use rayon::prelude::*;
use serde::Serialize;

use super::worker_pool;
use crate::domination::{gamma_value, DominationQuery, GAMMA_MAX_ORDER};
use crate::graph::{qr_tournament_7, random_tournament};
use crate::{Error, Result, Seed};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TournamentRow {
    pub n: usize,
    /// Sample index, or `"qr7"` for the quadratic-residue tournament.
    pub sample_index: String,
    /// Seed of the sample, or `"-"` for the fixed tournament.
    pub seed: String,
    pub gamma: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TournamentSummary {
    pub min: usize,
    pub max: usize,
    pub mean: f64,
    /// `(k, fraction of rows with γ ≥ k)` for `k = 1..=max`.
    pub at_least: Vec<(usize, f64)>,
    pub log2_bound: f64,
    /// Rows with `γ > log2(n+1)`.
    pub bound_violations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TournamentRun {
    pub rows: Vec<TournamentRow>,
    pub summary: TournamentSummary,
}

impl TournamentRun {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,sample_index,seed,gamma\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{},{}\n", r.n, r.sample_index, r.seed, r.gamma));
        }
        let s = &self.summary;
        out.push_str(&format!("# min,{}\n# max,{}\n# mean,{:.6}\n", s.min, s.max, s.mean));
        for (k, frac) in &s.at_least {
            out.push_str(&format!("# fraction_gamma_ge_{k},{frac:.6}\n"));
        }
        out.push_str(&format!(
            "# log2_bound,{:.6}\n# bound_violations,{}\n",
            s.log2_bound, s.bound_violations
        ));
        out
    }
}

/// Exact domination numbers of `samples` random tournaments on `n`
/// vertices, sample `i` drawn with seed `seed + i`. With `include_qr7` and
/// `n = 7` the quadratic-residue tournament is appended. Every value is
/// compared against `log2(n+1)`.
pub fn tournament_experiment(
    n: usize,
    samples: u64,
    seed: u64,
    include_qr7: bool,
    workers: usize,
) -> Result<TournamentRun> {
    if n > GAMMA_MAX_ORDER {
        return Err(Error::cap(format!(
            "exact domination handles at most {GAMMA_MAX_ORDER} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Err(Error::domain("tournaments need at least one vertex"));
    }
    if samples == 0 {
        return Err(Error::domain("at least one sample is required"));
    }
    let pool = worker_pool(workers)?;
    let mut rows: Vec<TournamentRow> = pool.install(|| {
        (0..samples)
            .into_par_iter()
            .map(|i| {
                let s = seed.wrapping_add(i);
                let gamma = gamma_value(&random_tournament(n, Seed(s)), DominationQuery::PLAIN)?;
                Ok(TournamentRow {
                    n,
                    sample_index: i.to_string(),
                    seed: s.to_string(),
                    gamma,
                })
            })
            .collect::<Result<_>>()
    })?;
    if include_qr7 && n == 7 {
        rows.push(TournamentRow {
            n,
            sample_index: "qr7".into(),
            seed: "-".into(),
            gamma: gamma_value(&qr_tournament_7(), DominationQuery::PLAIN)?,
        });
    }
    let log2_bound = (n as f64 + 1.0).log2();
    let min = rows.iter().map(|r| r.gamma).min().unwrap_or(0);
    let max = rows.iter().map(|r| r.gamma).max().unwrap_or(0);
    let total = rows.len() as f64;
    let mean = rows.iter().map(|r| r.gamma as f64).sum::<f64>() / total;
    let at_least = (1..=max)
        .map(|k| (k, rows.iter().filter(|r| r.gamma >= k).count() as f64 / total))
        .collect();
    let bound_violations = rows.iter().filter(|r| r.gamma as f64 > log2_bound + 1e-9).count();
    Ok(TournamentRun {
        rows,
        summary: TournamentSummary {
            min,
            max,
            mean,
            at_least,
            log2_bound,
            bound_violations,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_vertices() {
        let run = tournament_experiment(3, 64, 0, false, 1).unwrap();
        assert!(run.rows.iter().all(|r| r.gamma == 1 || r.gamma == 2));
        assert_eq!(run.summary.min, 1);
        assert_eq!(run.summary.max, 2);
        assert_eq!(run.summary.bound_violations, 0);
    }

    #[test]
    fn qr7_reaches_three() {
        let run = tournament_experiment(7, 10, 0, true, 2).unwrap();
        assert_eq!(run.summary.max, 3);
        assert_eq!(run.rows.last().unwrap().sample_index, "qr7");
        assert_eq!(run.summary.bound_violations, 0);
    }

    #[test]
    fn csv_layout_and_determinism() {
        let a = tournament_experiment(5, 12, 42, false, 1).unwrap().to_csv();
        let b = tournament_experiment(5, 12, 42, false, 4).unwrap().to_csv();
        assert_eq!(a, b);
        let mut lines = a.lines();
        assert_eq!(lines.next(), Some("n,sample_index,seed,gamma"));
        assert!(lines.next().unwrap().starts_with("5,0,42,"));
        assert!(a.lines().filter(|l| l.starts_with('#')).count() >= 4);
    }

    #[test]
    fn arguments_are_checked() {
        assert!(tournament_experiment(25, 1, 0, false, 1).is_err());
        assert!(tournament_experiment(5, 0, 0, false, 1).is_err());
        assert!(tournament_experiment(5, 1, 0, false, 0).is_err());
    }
}
