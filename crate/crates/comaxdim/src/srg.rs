//! Boundary vertices and the strong resolving graph.
//!
//! A vertex `u` is maximally distant from `v` when no neighbor of `u` is
//! farther from `v` than `u` itself. Pairs that are maximally distant in
//! both directions form the edges of the strong resolving graph, whose
//! vertex set is the boundary of the base graph.

use crate::graph::Graph;
use crate::{Error, Result};

/// The strong resolving graph of a connected base graph.
#[derive(Debug)]
pub struct SrGraph {
    /// Base indices of the boundary vertices, ascending; vertex `i` of
    /// `graph` is base vertex `base_indices[i]`.
    pub base_indices: Vec<usize>,
    /// Graph on the boundary whose edges are the mutually maximally
    /// distant pairs.
    pub graph: Graph,
    /// Mutually maximally distant pairs as base-index pairs, ascending.
    pub mmd_pairs: Vec<(usize, usize)>,
}

fn require_connected(g: &Graph, what: &str) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph(format!("{what} needs at least one vertex")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected(format!("{what} needs a connected graph")));
    }
    Ok(())
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    let n = g.vertex_count();
    if u >= n {
        return Err(Error::UnknownVertex(u));
    }
    if v >= n {
        return Err(Error::UnknownVertex(v));
    }
    if u == v {
        return Err(Error::InvalidArgument(
            "maximal distance is asked of two distinct vertices".into(),
        ));
    }
    Ok(())
}

/// Every neighbor `w` of `u` satisfies `d(v, w) ≤ d(u, v)`.
pub fn is_maximally_distant(g: &Graph, u: usize, v: usize) -> Result<bool> {
    require_connected(g, "maximal distance")?;
    check_pair(g, u, v)?;
    Ok(maximally_distant_unchecked(g, u, v))
}

fn maximally_distant_unchecked(g: &Graph, u: usize, v: usize) -> bool {
    let duv = g.dist(u, v);
    g.neighbors_bits(u).iter().all(|w| g.dist(v, w) <= duv)
}

/// Maximally distant in both directions.
pub fn mutually_maximally_distant(g: &Graph, u: usize, v: usize) -> Result<bool> {
    require_connected(g, "mutual maximal distance")?;
    check_pair(g, u, v)?;
    Ok(maximally_distant_unchecked(g, u, v) && maximally_distant_unchecked(g, v, u))
}

/// Vertices participating in at least one mutually maximally distant pair.
pub fn boundary(g: &Graph) -> Result<Vec<usize>> {
    Ok(build_srg(g)?.base_indices)
}

/// Compute the boundary and the strong resolving graph in one pass.
pub fn build_srg(g: &Graph) -> Result<SrGraph> {
    require_connected(g, "strong resolving graph")?;
    let n = g.vertex_count();
    let mut md = vec![false; n * n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                md[u * n + v] = maximally_distant_unchecked(g, u, v);
            }
        }
    }
    let mut in_boundary = vec![false; n];
    let mut mmd_pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if md[u * n + v] && md[v * n + u] {
                in_boundary[u] = true;
                in_boundary[v] = true;
                mmd_pairs.push((u, v));
            }
        }
    }
    let base_indices: Vec<usize> = (0..n).filter(|&v| in_boundary[v]).collect();
    let mut srg_index = vec![usize::MAX; n];
    for (i, &v) in base_indices.iter().enumerate() {
        srg_index[v] = i;
    }
    let labels: Vec<String> = base_indices
        .iter()
        .map(|&v| g.label(v).to_string())
        .collect();
    let edges: Vec<(usize, usize)> = mmd_pairs
        .iter()
        .map(|&(u, v)| (srg_index[u], srg_index[v]))
        .collect();
    Ok(SrGraph {
        base_indices,
        graph: Graph::new(labels, &edges)?,
        mmd_pairs,
    })
}
