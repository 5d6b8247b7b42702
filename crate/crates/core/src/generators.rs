//! Seeded random instances of each hypergraph class.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::recognition::is_beta;
use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenClass {
    Alpha,
    Beta,
    Gamma,
    Interval,
    Star,
    General,
}

impl GenClass {
    pub const ALL: [GenClass; 6] =
        [GenClass::Alpha, GenClass::Beta, GenClass::Gamma, GenClass::Interval, GenClass::Star, GenClass::General];

    pub fn name(self) -> &'static str {
        match self {
            GenClass::Alpha => "alpha",
            GenClass::Beta => "beta",
            GenClass::Gamma => "gamma",
            GenClass::Interval => "interval",
            GenClass::Star => "star",
            GenClass::General => "general",
        }
    }
}

impl fmt::Display for GenClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        GenClass::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown class {s:?}"))
    }
}

/// Parameters of one random instance. `density` in `[0, 1]` scales how many
/// hyperedges a vertex joins (or, for `Gamma`, the share of twin steps).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenSpec {
    pub class: GenClass,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub density: f64,
}

impl GenSpec {
    pub fn new(class: GenClass, n: usize, m: usize, seed: u64, density: f64) -> Self {
        GenSpec { class, n, m, seed, density }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    fn check(&self) -> Result<()> {
        if self.n == 0 || self.m == 0 {
            return Err(Error::Empty);
        }
        Ok(())
    }
}

/// Dispatches on `spec.class`. `Star` ignores `n` and `density`.
pub fn generate(spec: &GenSpec) -> Result<Hypergraph> {
    spec.check()?;
    Ok(match spec.class {
        GenClass::Alpha => gen_alpha(spec),
        GenClass::Beta => gen_beta(spec),
        GenClass::Gamma => gen_gamma(spec),
        GenClass::Interval => gen_interval(spec),
        GenClass::Star => star(spec.m),
        GenClass::General => gen_general(spec),
    })
}

/// How many hyperedges a vertex joins: `1 + ⌊density · (m-1) · U⌋`.
fn span(rng: &mut impl Rng, m: usize, density: f64) -> usize {
    1 + (density.clamp(0.0, 1.0) * (m - 1) as f64 * rng.random::<f64>()) as usize
}

/// Builds the hypergraph with hyperedge ids shuffled, so that generated ids
/// carry no structure.
fn finish(n: usize, mut edges: Vec<Vec<usize>>, rng: &mut impl Rng) -> Hypergraph {
    edges.shuffle(rng);
    Hypergraph::new(n, edges).expect("generators produce valid hypergraphs")
}

/// Random α-acyclic hypergraph: a random tree on the hyperedges, and every
/// vertex placed on a random connected subtree grown from a random node.
pub fn gen_alpha(spec: &GenSpec) -> Hypergraph {
    let mut rng = spec.rng();
    let (n, m) = (spec.n.max(1), spec.m.max(1));
    let parent: Vec<usize> = (0..m).map(|i| if i == 0 { 0 } else { rng.random_range(0..i) }).collect();
    let mut adj = vec![Vec::new(); m];
    for i in 1..m {
        adj[i].push(parent[i]);
        adj[parent[i]].push(i);
    }
    let mut edges = vec![Vec::new(); m];
    let mut mark = vec![usize::MAX; m];
    let mut frontier = Vec::new();
    for v in 0..n {
        let size = span(&mut rng, m, spec.density);
        let start = if v == 0 { 0 } else { rng.random_range(0..m) };
        frontier.clear();
        frontier.push(start);
        mark[start] = v;
        let mut taken = 0;
        while taken < size && !frontier.is_empty() {
            let x = frontier.swap_remove(rng.random_range(0..frontier.len()));
            edges[x].push(v);
            taken += 1;
            for &y in &adj[x] {
                if mark[y] != v {
                    mark[y] = v;
                    frontier.push(y);
                }
            }
        }
    }
    // Parents precede children, so every hyperedge left empty can extend a
    // vertex of its parent without breaking connectivity.
    for i in 1..m {
        if edges[i].is_empty() {
            let p = &edges[parent[i]];
            let v = p[rng.random_range(0..p.len())];
            edges[i].push(v);
        }
    }
    finish(n, edges, &mut rng)
}

/// Random interval hypergraph: every vertex occupies a random run of
/// consecutive positions of a hidden path order.
pub fn gen_interval(spec: &GenSpec) -> Hypergraph {
    let mut rng = spec.rng();
    let (n, m) = (spec.n.max(1), spec.m.max(1));
    let mut edges = vec![Vec::new(); m];
    for v in 0..n {
        let len = span(&mut rng, m, spec.density);
        let start = if v == 0 { 0 } else { rng.random_range(0..=m - len) };
        for e in &mut edges[start..start + len] {
            e.push(v);
        }
    }
    for i in 1..m {
        if edges[i].is_empty() {
            // Extend a vertex of the previous position, which ends there.
            let v = *edges[i - 1].last().expect("filled left to right");
            edges[i].push(v);
        }
    }
    finish(n, edges, &mut rng)
}

/// Random γ-acyclic hypergraph: grows a connected incidence graph from one
/// vertex-hyperedge pair by pendant and false-twin additions. `density` is
/// the probability of a twin step; 0 yields a tree incidence graph.
pub fn gen_gamma(spec: &GenSpec) -> Hypergraph {
    let mut rng = spec.rng();
    let (n, m) = (spec.n.max(1), spec.m.max(1));
    let twin = spec.density.clamp(0.0, 1.0);
    let mut edges: Vec<Vec<usize>> = vec![vec![0]];
    let mut incidence: Vec<Vec<usize>> = vec![vec![0]];
    let (mut vs, mut es) = (1, 1);
    while vs < n || es < m {
        let add_vertex = es == m || (vs < n && rng.random_range(0..(n - vs) + (m - es)) < n - vs);
        let is_twin = rng.random_bool(twin);
        if add_vertex {
            let holders =
                if is_twin { incidence[rng.random_range(0..vs)].clone() } else { vec![rng.random_range(0..es)] };
            for &e in &holders {
                edges[e].push(vs);
            }
            incidence.push(holders);
            vs += 1;
        } else {
            let members = if is_twin { edges[rng.random_range(0..es)].clone() } else { vec![rng.random_range(0..vs)] };
            for &v in &members {
                incidence[v].push(es);
            }
            edges.push(members);
            es += 1;
        }
    }
    finish(n, edges, &mut rng)
}

/// Random β-acyclic hypergraph: rejection-samples [`gen_alpha`] with
/// shrinking density, falling back to [`gen_gamma`] when every attempt
/// fails.
pub fn gen_beta(spec: &GenSpec) -> Hypergraph {
    gen_beta_with_retries(spec, 32).unwrap_or_else(|_| gen_gamma(spec))
}

/// Rejection sampling only; reports [`Error::RetryExhausted`] when no
/// attempt was β-acyclic.
pub fn gen_beta_with_retries(spec: &GenSpec, retries: usize) -> Result<Hypergraph> {
    let mut rng = spec.rng();
    let mut density = spec.density;
    for _ in 0..retries {
        let h = gen_alpha(&GenSpec { seed: rng.next_u64(), density, ..*spec });
        if is_beta(&h) {
            return Ok(h);
        }
        density *= 0.8;
    }
    Err(Error::RetryExhausted(retries))
}

/// `m` hyperedges `{u, v_i}` sharing the single vertex `u`.
pub fn star(m: usize) -> Hypergraph {
    Hypergraph::from_named_edges((1..=m).map(|i| ["u".to_owned(), format!("v{i}")]))
        .expect("star family with m >= 1 is valid")
}

/// Random hypergraph without any structure; every vertex joins at least
/// one hyperedge.
pub fn gen_general(spec: &GenSpec) -> Hypergraph {
    let mut rng = spec.rng();
    let (n, m) = (spec.n.max(1), spec.m.max(1));
    let mut edges = vec![Vec::new(); m];
    let mut ids: Vec<usize> = (0..m).collect();
    for v in 0..n {
        let k = span(&mut rng, m, spec.density);
        let (chosen, _) = ids.partial_shuffle(&mut rng, k);
        for &e in chosen.iter() {
            edges[e].push(v);
        }
    }
    for e in edges.iter_mut().filter(|e| e.is_empty()) {
        e.push(rng.random_range(0..n));
    }
    finish(n, edges, &mut rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::classify;

    fn specs(class: GenClass) -> impl Iterator<Item = GenSpec> {
        (0..200u64).map(move |seed| {
            let n = 1 + (seed as usize * 7) % 30;
            let m = 1 + (seed as usize * 13) % 30;
            GenSpec::new(class, n, m, seed, (seed % 5) as f64 / 4.0)
        })
    }

    #[test]
    fn outputs_are_in_class() {
        for s in specs(GenClass::Alpha) {
            let h = generate(&s).unwrap();
            assert_eq!((h.n(), h.m()), (s.n, s.m));
            assert!(classify(&h).is_alpha, "{s:?}");
        }
        for s in specs(GenClass::Interval) {
            assert!(classify(&generate(&s).unwrap()).is_interval, "{s:?}");
        }
        for s in specs(GenClass::Gamma) {
            let h = generate(&s).unwrap();
            assert_eq!((h.n(), h.m()), (s.n, s.m));
            assert!(classify(&h).is_gamma, "{s:?}");
        }
        for s in specs(GenClass::Beta) {
            assert!(classify(&generate(&s).unwrap()).is_beta, "{s:?}");
        }
    }

    #[test]
    fn deterministic() {
        for class in GenClass::ALL {
            let s = GenSpec::new(class, 20, 15, 7, 0.3);
            assert_eq!(generate(&s).unwrap(), generate(&s).unwrap());
        }
    }

    #[test]
    fn tree_incidence_without_twins() {
        let h = gen_gamma(&GenSpec::new(GenClass::Gamma, 12, 9, 3, 0.0));
        assert_eq!(h.size(), h.n() + h.m() - 1);
    }

    #[test]
    fn single_hyperedge_holds_everything() {
        let h = gen_alpha(&GenSpec::new(GenClass::Alpha, 5, 1, 1, 0.5));
        assert_eq!(h.edge(0), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn star_shape() {
        let h = star(3);
        assert_eq!(h.m(), 3);
        assert!((0..3).all(|j| h.edge_names(j).contains(&"u") && h.edge(j).len() == 2));
        assert_eq!(GenClass::from_str("star"), Ok(GenClass::Star));
    }
}
