//! Size-doubling timing series with sparse-output instances.

use crate::error::Result;
use crate::generators::{gen_alpha, gen_gamma, gen_interval, star, GenClass, GenSpec};
use crate::hypergraph::Hypergraph;
use crate::oracle::subset_graph_naive;
use crate::sperner::sperner_acyclic;
use crate::subset::{subset_graph_baseline, subset_graph_beta, subset_graph_gamma, subset_graph_interval};
use crate::unionjoin::{union_join_gamma, union_join_interval, union_join_via_subset};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algo {
    SubsetNaive,
    SubsetBaseline,
    SubsetBeta,
    SubsetGamma,
    SubsetInterval,
    UnionJoinGeneric,
    UnionJoinGamma,
    UnionJoinInterval,
    Sperner,
}

impl Algo {
    pub const ALL: [Algo; 9] = [
        Algo::SubsetNaive,
        Algo::SubsetBaseline,
        Algo::SubsetBeta,
        Algo::SubsetGamma,
        Algo::SubsetInterval,
        Algo::UnionJoinGeneric,
        Algo::UnionJoinGamma,
        Algo::UnionJoinInterval,
        Algo::Sperner,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algo::SubsetNaive => "subset_graph_naive",
            Algo::SubsetBaseline => "subset_graph_baseline",
            Algo::SubsetBeta => "subset_graph_beta",
            Algo::SubsetGamma => "subset_graph_gamma",
            Algo::SubsetInterval => "subset_graph_interval",
            Algo::UnionJoinGeneric => "union_join_via_subset",
            Algo::UnionJoinGamma => "union_join_gamma",
            Algo::UnionJoinInterval => "union_join_interval",
            Algo::Sperner => "sperner_acyclic",
        }
    }

    /// Generator class whose sparse instances suit this algorithm.
    pub fn natural_class(self) -> GenClass {
        match self {
            Algo::SubsetGamma | Algo::UnionJoinGamma => GenClass::Gamma,
            Algo::SubsetBeta | Algo::SubsetInterval | Algo::UnionJoinInterval => GenClass::Interval,
            Algo::SubsetNaive | Algo::SubsetBaseline | Algo::UnionJoinGeneric | Algo::Sperner => GenClass::Alpha,
        }
    }

    /// Runs the algorithm and returns the size of its output (edges, or 1/0
    /// for the yes/no answer).
    pub fn run(self, h: &Hypergraph) -> Result<usize> {
        Ok(match self {
            Algo::SubsetNaive => subset_graph_naive(h).edge_count(),
            Algo::SubsetBaseline => subset_graph_baseline(h).edge_count(),
            Algo::SubsetBeta => subset_graph_beta(h)?.edge_count(),
            Algo::SubsetGamma => subset_graph_gamma(h)?.edge_count(),
            Algo::SubsetInterval => subset_graph_interval(h)?.edge_count(),
            Algo::UnionJoinGeneric => union_join_via_subset(h, |s| Ok(subset_graph_baseline(s)))?.edge_count(),
            Algo::UnionJoinGamma => union_join_gamma(h)?.edge_count(),
            Algo::UnionJoinInterval => union_join_interval(h)?.edge_count(),
            Algo::Sperner => usize::from(sperner_acyclic(h)?),
        })
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Algo::ALL.into_iter().find(|a| a.name() == s).ok_or_else(|| format!("unknown algorithm {s:?}"))
    }
}

/// One CSV row: `class,algo,n,m,N,G_edges,millis`.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub class: GenClass,
    pub algo: Algo,
    pub n: usize,
    pub m: usize,
    pub size: usize,
    pub output_edges: usize,
    pub millis: f64,
}

/// A generated instance with total size close to `target` whose vertices
/// join a bounded expected number of hyperedges, so the outputs of the
/// class-specific algorithms stay linear in the input.
pub fn sparse_instance(class: GenClass, target: usize, seed: u64) -> Hypergraph {
    let target = target.max(8);
    match class {
        GenClass::Gamma => {
            let k = target / 2;
            gen_gamma(&GenSpec::new(class, k, k, seed, 0.02))
        }
        GenClass::Star => star(target / 2),
        _ => {
            // Expected span 1 + d(m-1)/2 = 4 hyperedges per vertex.
            let k = target / 4;
            let d = (6.0 / (k.max(2) - 1) as f64).min(1.0);
            let spec = GenSpec::new(class, k, k, seed, d);
            match class {
                GenClass::Interval => gen_interval(&spec),
                _ => gen_alpha(&spec),
            }
        }
    }
}

/// Median wall time in milliseconds over `runs` executions, with the output
/// size of the last run.
pub fn time_median(algo: Algo, h: &Hypergraph, runs: usize) -> Result<(f64, usize)> {
    let mut times = Vec::with_capacity(runs);
    let mut out = 0;
    for _ in 0..runs.max(1) {
        let t = Instant::now();
        out = algo.run(h)?;
        times.push(t.elapsed().as_secs_f64() * 1e3);
    }
    times.sort_by(f64::total_cmp);
    Ok((times[times.len() / 2], out))
}

/// Times `algo` on sparse instances of `class` of sizes `start, 2·start, …`
/// up to `end`.
pub fn series(class: GenClass, algo: Algo, start: usize, end: usize, runs: usize, seed: u64) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    let mut target = start.max(8);
    while target <= end {
        let h = sparse_instance(class, target, seed);
        let (millis, output_edges) = time_median(algo, &h, runs)?;
        rows.push(BenchRow { class, algo, n: h.n(), m: h.m(), size: h.size(), output_edges, millis });
        target *= 2;
    }
    Ok(rows)
}

/// Growth of time per doubling of `N + |G|` between consecutive rows.
pub fn doubling_ratios(rows: &[BenchRow]) -> Vec<f64> {
    rows.windows(2)
        .map(|w| {
            let work = |r: &BenchRow| (r.size + r.output_edges) as f64;
            let doublings = (work(&w[1]) / work(&w[0])).log2();
            (w[1].millis / w[0].millis).powf(1.0 / doublings)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sparse_instances_hit_the_target() {
        for class in [GenClass::Alpha, GenClass::Gamma, GenClass::Interval] {
            let h = sparse_instance(class, 20_000, 1);
            assert!((10_000..40_000).contains(&h.size()), "{class}: N = {}", h.size());
        }
    }

    #[test]
    fn names_round_trip() {
        for a in Algo::ALL {
            assert_eq!(a.name().parse::<Algo>(), Ok(a));
        }
    }

    #[test]
    fn series_doubles() {
        let rows = series(GenClass::Gamma, Algo::SubsetGamma, 1000, 4000, 1, 0).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(doubling_ratios(&rows).len(), 2);
    }
}
