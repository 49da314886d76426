//! Exact solvers: maximum independent set / minimum vertex cover by branch
//! and bound, and definitional brute-force searches for metric and strong
//! metric dimension.
//!
//! Everything here is deterministic: branching always picks the maximum
//! degree vertex with the lowest index, and brute-force searches walk
//! subsets in ascending cardinality, lexicographic within a cardinality.

use serde::Serialize;

use crate::bitset::Bitset;
use crate::graph::Graph;
use crate::srg;
use crate::{Caps, Error, Result};

/// A maximum independent set with its complementary minimum vertex cover.
#[derive(Debug, Clone)]
pub struct CoverSolution {
    /// Independence number.
    pub alpha: usize,
    /// Vertex cover number; `alpha + beta` is the vertex count.
    pub beta: usize,
    /// A minimum vertex cover, ascending.
    pub cover_witness: Vec<usize>,
    /// A maximum independent set, ascending.
    pub independent_witness: Vec<usize>,
}

/// `s` contains no edge of `g`.
pub fn is_independent_set(g: &Graph, s: &[usize]) -> bool {
    s.iter()
        .enumerate()
        .all(|(i, &u)| s[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

/// Every edge of `g` has an endpoint in `s`.
pub fn is_vertex_cover(g: &Graph, s: &[usize]) -> bool {
    let mut marked = Bitset::new(g.vertex_count());
    for &v in s {
        marked.insert(v);
    }
    g.edges()
        .iter()
        .all(|&(u, v)| marked.contains(u) || marked.contains(v))
}

/// Greedy clique cover of the candidate set; its size bounds the
/// independence number of the induced subgraph from above.
fn clique_cover_bound(adj: &[Bitset], candidates: &Bitset) -> usize {
    let mut cliques: Vec<Bitset> = Vec::new();
    for v in candidates.iter() {
        let mut placed = false;
        for clique in &mut cliques {
            if clique.is_subset_of(&adj[v]) {
                clique.insert(v);
                placed = true;
                break;
            }
        }
        if !placed {
            let mut fresh = Bitset::new(adj.len());
            fresh.insert(v);
            cliques.push(fresh);
        }
    }
    cliques.len()
}

struct MisSearch<'a> {
    adj: &'a [Bitset],
    best: Bitset,
    best_size: usize,
}

impl MisSearch<'_> {
    fn expand(&mut self, mut candidates: Bitset, mut chosen: Bitset, mut size: usize) {
        // Vertices with no candidate neighbors always join the set.
        loop {
            let free: Vec<usize> = candidates
                .iter()
                .filter(|&v| self.adj[v].intersection_count(&candidates) == 0)
                .collect();
            if free.is_empty() {
                break;
            }
            for v in free {
                candidates.remove(v);
                chosen.insert(v);
                size += 1;
            }
        }
        if candidates.is_empty() {
            if size > self.best_size {
                self.best_size = size;
                self.best = chosen;
            }
            return;
        }
        if size + clique_cover_bound(self.adj, &candidates) <= self.best_size {
            return;
        }
        // Branch on the maximum-degree candidate, lowest index on ties.
        let v = candidates
            .iter()
            .map(|v| (self.adj[v].intersection_count(&candidates), v))
            .fold((0, usize::MAX), |best, (deg, v)| {
                if deg > best.0 || (deg == best.0 && v < best.1) {
                    (deg, v)
                } else {
                    best
                }
            })
            .1;
        let mut with_v = candidates.clone();
        with_v.remove(v);
        with_v.subtract(&self.adj[v]);
        let mut chosen_v = chosen.clone();
        chosen_v.insert(v);
        self.expand(with_v, chosen_v, size + 1);
        candidates.remove(v);
        self.expand(candidates, chosen, size);
    }
}

/// Exact maximum independent set and minimum vertex cover.
///
/// Branch and bound with a greedy clique-cover bound; graphs above the
/// solve cap are rejected.
pub fn max_independent_set(g: &Graph, caps: &Caps) -> Result<CoverSolution> {
    let n = g.vertex_count();
    if n > caps.solve_cap {
        return Err(Error::CapExceeded {
            what: "exact independent-set solve",
            needed: n as u128,
            cap: caps.solve_cap as u128,
        });
    }
    let adj: Vec<Bitset> = (0..n).map(|v| g.neighbors_bits(v).clone()).collect();
    let mut search = MisSearch {
        adj: &adj,
        best: Bitset::new(n),
        best_size: 0,
    };
    search.expand(Bitset::full(n), Bitset::new(n), 0);
    let independent_witness = search.best.to_vec();
    let cover_witness: Vec<usize> = (0..n)
        .filter(|&v| !search.best.contains(v))
        .collect();
    let solution = CoverSolution {
        alpha: search.best_size,
        beta: n - search.best_size,
        cover_witness,
        independent_witness,
    };
    debug_assert!(is_independent_set(g, &solution.independent_witness));
    debug_assert!(is_vertex_cover(g, &solution.cover_witness));
    debug_assert_eq!(solution.alpha + solution.beta, n);
    Ok(solution)
}

/// How a dimension value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SdimMethod {
    /// Vertex cover of the strong resolving graph.
    SrgCover,
    /// Definitional search over subsets.
    BruteForce,
}

impl std::fmt::Display for SdimMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SdimMethod::SrgCover => write!(f, "srg_cover"),
            SdimMethod::BruteForce => write!(f, "brute_force"),
        }
    }
}

/// A strong metric dimension value with its witness set.
#[derive(Debug, Clone)]
pub struct SdimResult {
    pub value: usize,
    /// Witness strong resolving set as base-graph indices, ascending.
    pub witness: Vec<usize>,
    pub method: SdimMethod,
}

/// Strong metric dimension through the strong resolving graph: the value
/// is the minimum vertex cover size, and the cover lifts to a witness.
pub fn sdim_via_srg(g: &Graph, caps: &Caps) -> Result<SdimResult> {
    let sr = srg::build_srg(g)?;
    let cover = max_independent_set(&sr.graph, caps)?;
    let witness: Vec<usize> = cover
        .cover_witness
        .iter()
        .map(|&i| sr.base_indices[i])
        .collect();
    debug_assert!(matches!(is_strong_resolving_set(g, &witness), Ok(true)));
    Ok(SdimResult {
        value: cover.beta,
        witness,
        method: SdimMethod::SrgCover,
    })
}

fn check_subset(g: &Graph, s: &[usize]) -> Result<()> {
    for &v in s {
        if v >= g.vertex_count() {
            return Err(Error::UnknownVertex(v));
        }
    }
    Ok(())
}

/// Some `w ∈ s` lies on a shortest path witnessing each vertex pair:
/// `d(w,u) = d(w,v) + d(v,u)` or `d(w,v) = d(w,u) + d(u,v)`.
pub fn is_strong_resolving_set(g: &Graph, s: &[usize]) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected(
            "strong resolution is defined on connected graphs".into(),
        ));
    }
    check_subset(g, s)?;
    let n = g.vertex_count();
    let dist = g.distances();
    for u in 0..n {
        for v in u + 1..n {
            let duv = dist[u * n + v];
            let resolved = s.iter().any(|&w| {
                let dwu = dist[w * n + u];
                let dwv = dist[w * n + v];
                dwu == dwv + duv || dwv == dwu + duv
            });
            if !resolved {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Distance vectors to `s` are injective on the vertices outside `s`.
pub fn is_resolving_set(g: &Graph, s: &[usize]) -> Result<bool> {
    check_subset(g, s)?;
    let n = g.vertex_count();
    let dist = g.distances();
    let mut in_s = vec![false; n];
    for &v in s {
        in_s[v] = true;
    }
    let mut vectors: Vec<Vec<u32>> = (0..n)
        .filter(|&v| !in_s[v])
        .map(|v| s.iter().map(|&w| dist[w * n + v]).collect())
        .collect();
    vectors.sort_unstable();
    Ok(vectors.windows(2).all(|w| w[0] != w[1]))
}

/// Pairs `(u, v)` with equal open or equal closed neighborhoods.
///
/// Any resolving or strong resolving set must contain one endpoint of
/// every such pair, since the two vertices are at equal distance from all
/// others.
pub fn twin_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let closed: Vec<Bitset> = (0..n)
        .map(|v| {
            let mut b = g.neighbors_bits(v).clone();
            b.insert(v);
            b
        })
        .collect();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.neighbors_bits(u) == g.neighbors_bits(v) || closed[u] == closed[v] {
                out.push((u, v));
            }
        }
    }
    out
}

/// Pairs at diameter distance. Any strong resolving set must contain one
/// endpoint of each.
pub fn diametral_pairs(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let diam = g.diameter()?;
    let n = g.vertex_count();
    let dist = g.distances();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if dist[u * n + v] == diam {
                out.push((u, v));
            }
        }
    }
    Ok(out)
}

/// Lexicographic subset search of fixed cardinality that skips subsets
/// missing both endpoints of a required pair.
struct SubsetSearch<F: FnMut(&[usize]) -> bool> {
    n: usize,
    /// `required_below[j]` lists the `i < j` with `{i, j}` required.
    required_below: Vec<Vec<usize>>,
    chosen: Vec<usize>,
    in_set: Vec<bool>,
    accept: F,
}

impl<F: FnMut(&[usize]) -> bool> SubsetSearch<F> {
    fn run(&mut self, size: usize) -> Option<Vec<usize>> {
        self.chosen.clear();
        self.in_set.iter_mut().for_each(|b| *b = false);
        self.recurse(0, size)
    }

    fn recurse(&mut self, pos: usize, remaining: usize) -> Option<Vec<usize>> {
        if remaining > self.n - pos {
            return None;
        }
        if pos == self.n {
            return if (self.accept)(&self.chosen) {
                Some(self.chosen.clone())
            } else {
                None
            };
        }
        if remaining > 0 {
            self.chosen.push(pos);
            self.in_set[pos] = true;
            if let Some(found) = self.recurse(pos + 1, remaining - 1) {
                return Some(found);
            }
            self.chosen.pop();
            self.in_set[pos] = false;
        }
        // Skipping `pos` abandons every required pair whose larger
        // endpoint is `pos`, unless the smaller endpoint was taken.
        if self.required_below[pos].iter().all(|&i| self.in_set[i]) {
            return self.recurse(pos + 1, remaining);
        }
        None
    }
}

fn search_minimum_set<F>(n: usize, required: &[(usize, usize)], accept: F) -> (usize, Vec<usize>)
where
    F: FnMut(&[usize]) -> bool,
{
    let mut required_below = vec![Vec::new(); n];
    for &(u, v) in required {
        required_below[v].push(u);
    }
    let mut search = SubsetSearch {
        n,
        required_below,
        chosen: Vec::new(),
        in_set: vec![false; n],
        accept,
    };
    for size in 0..=n {
        if let Some(witness) = search.run(size) {
            return (size, witness);
        }
    }
    unreachable!("the full vertex set always resolves");
}

fn check_brute_cap(g: &Graph, caps: &Caps) -> Result<usize> {
    let n = g.vertex_count();
    if n > caps.brute_cap {
        return Err(Error::CapExceeded {
            what: "brute-force search",
            needed: n as u128,
            cap: caps.brute_cap as u128,
        });
    }
    Ok(n)
}

/// Smallest strong resolving set by direct search.
///
/// Subsets are visited in ascending cardinality, lexicographic within a
/// cardinality; subsets missing both endpoints of a twin or diametral pair
/// are skipped, which never changes the outcome. The witness is therefore
/// the lexicographically first minimum strong resolving set.
pub fn sdim_bruteforce(g: &Graph, caps: &Caps) -> Result<SdimResult> {
    let n = check_brute_cap(g, caps)?;
    if !g.is_connected() {
        return Err(Error::Disconnected(
            "strong metric dimension is defined on connected graphs".into(),
        ));
    }
    if n == 0 {
        return Err(Error::EmptyGraph(
            "strong metric dimension needs at least one vertex".into(),
        ));
    }
    let mut required = twin_pairs(g);
    required.extend(diametral_pairs(g)?);
    let dist = g.distances();
    // Pairs found unresolved recently are tested first; a plain reordering
    // of a conjunction, so the outcome is unchanged.
    let mut pair_order: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let accept = |s: &[usize]| -> bool {
        for (idx, &(u, v)) in pair_order.iter().enumerate() {
            let duv = dist[u * n + v];
            let ok = s.iter().any(|&w| {
                let dwu = dist[w * n + u];
                let dwv = dist[w * n + v];
                dwu == dwv + duv || dwv == dwu + duv
            });
            if !ok {
                pair_order[..=idx].rotate_right(1);
                return false;
            }
        }
        true
    };
    let (value, witness) = search_minimum_set(n, &required, accept);
    Ok(SdimResult {
        value,
        witness,
        method: SdimMethod::BruteForce,
    })
}

/// Smallest resolving set size by direct search with twin skipping.
pub fn dim_bruteforce(g: &Graph, caps: &Caps) -> Result<usize> {
    let n = check_brute_cap(g, caps)?;
    if n == 0 {
        return Err(Error::EmptyGraph(
            "metric dimension needs at least one vertex".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected(
            "metric dimension by distance vectors needs a connected graph".into(),
        ));
    }
    let required = twin_pairs(g);
    let dist = g.distances();
    let mut in_s = vec![false; n];
    let mut vectors: Vec<Vec<u32>> = Vec::new();
    let accept = |s: &[usize]| -> bool {
        in_s.iter_mut().for_each(|b| *b = false);
        for &v in s {
            in_s[v] = true;
        }
        vectors.clear();
        for v in (0..n).filter(|&v| !in_s[v]) {
            vectors.push(s.iter().map(|&w| dist[w * n + v]).collect());
        }
        vectors.sort_unstable();
        vectors.windows(2).all(|w| w[0] != w[1])
    };
    let (value, _) = search_minimum_set(n, &required, accept);
    Ok(value)
}
