//! The co-maximal ideal graph of a ring and its derived graphs.
//!
//! Vertices are the proper ideals not contained in the Jacobson radical,
//! in ascending level order. The base graph joins comaximal pairs; the
//! derived graphs rewire the same vertex set:
//!
//! * `gamma_star_star`: incomparable pairs that are not comaximal;
//! * `gamma_star`: the base graph if complete, otherwise `gamma_star_star`
//!   with isolated vertices removed;
//! * `gamma_prime`: same nil class, or incomparable non-comaximal prime
//!   reductions.

use crate::graph::Graph;
use crate::ring::{Ideal, RingSpec};
use crate::{Caps, Result};

/// The vertex list shared by all derived graphs of one ring.
#[derive(Debug)]
pub struct DerivedGraphs {
    /// Vertex ideals, ascending; index `i` is vertex `i` in every graph
    /// except `gamma_star`, which uses `gamma_star_base`.
    pub vertices: Vec<Ideal>,
    pub gamma: Graph,
    pub gamma_star_star: Graph,
    /// Indices into `vertices` carried by `gamma_star`.
    pub gamma_star_base: Vec<usize>,
    pub gamma_star: Graph,
    pub gamma_prime: Graph,
}

fn vertex_graph<F>(spec: &RingSpec, vertices: &[Ideal], mut adjacent: F) -> Result<Graph>
where
    F: FnMut(&Ideal, &Ideal) -> bool,
{
    let labels: Vec<String> = vertices.iter().map(|v| spec.ideal_label(v)).collect();
    let mut edges = Vec::new();
    for (i, a) in vertices.iter().enumerate() {
        for (j, b) in vertices.iter().enumerate().skip(i + 1) {
            if adjacent(a, b) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(labels, &edges)
}

/// The co-maximal ideal graph: vertices adjacent when their sum is the ring.
pub fn build_gamma(spec: &RingSpec, caps: &Caps) -> Result<Graph> {
    let vertices = spec.enumerate_vertices(caps)?;
    vertex_graph(spec, &vertices, |a, b| spec.covers(a, b))
}

/// Incomparable, non-comaximal pairs on the same vertex set.
pub fn build_gamma_star_star(spec: &RingSpec, caps: &Caps) -> Result<Graph> {
    let vertices = spec.enumerate_vertices(caps)?;
    vertex_graph(spec, &vertices, |a, b| {
        !spec.covers(a, b) && a.incomparable(b)
    })
}

/// The base graph when complete, otherwise `gamma_star_star` restricted to
/// its non-isolated vertices.
pub fn build_gamma_star(spec: &RingSpec, caps: &Caps) -> Result<Graph> {
    Ok(build_derived(spec, caps)?.gamma_star)
}

/// Edges join same-class pairs, and distinct-class pairs whose prime
/// reductions are incomparable without being comaximal.
pub fn build_gamma_prime(spec: &RingSpec, caps: &Caps) -> Result<Graph> {
    let vertices = spec.enumerate_vertices(caps)?;
    gamma_prime_on(spec, &vertices)
}

fn gamma_prime_on(spec: &RingSpec, vertices: &[Ideal]) -> Result<Graph> {
    let reductions: Vec<Ideal> = vertices
        .iter()
        .map(|v| spec.prime_reduction(v))
        .collect::<Result<_>>()?;
    let labels: Vec<String> = vertices.iter().map(|v| spec.ideal_label(v)).collect();
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let (ri, rj) = (&reductions[i], &reductions[j]);
            let same_class = ri == rj;
            if same_class || (!spec.covers(ri, rj) && ri.incomparable(rj)) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(labels, &edges)
}

/// Build the base graph and every derived graph over one vertex list.
pub fn build_derived(spec: &RingSpec, caps: &Caps) -> Result<DerivedGraphs> {
    let vertices = spec.enumerate_vertices(caps)?;
    let gamma = vertex_graph(spec, &vertices, |a, b| spec.covers(a, b))?;
    let gamma_star_star = vertex_graph(spec, &vertices, |a, b| {
        !spec.covers(a, b) && a.incomparable(b)
    })?;
    let (gamma_star, gamma_star_base) = if gamma.is_complete() {
        (gamma.clone(), (0..vertices.len()).collect())
    } else {
        let keep: Vec<usize> = (0..gamma_star_star.vertex_count())
            .filter(|&v| gamma_star_star.degree(v) > 0)
            .collect();
        (gamma_star_star.induced_subgraph(&keep)?, keep)
    };
    let gamma_prime = gamma_prime_on(spec, &vertices)?;
    Ok(DerivedGraphs {
        vertices,
        gamma,
        gamma_star_star,
        gamma_star_base,
        gamma_star,
        gamma_prime,
    })
}

/// A connected component together with its clique flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Vertices ascending.
    pub vertices: Vec<usize>,
    pub size: usize,
    pub is_clique: bool,
}

/// Connected components ordered by smallest vertex, each tested for
/// being a clique.
pub fn decompose_components(g: &Graph) -> Vec<Component> {
    g.connected_components()
        .into_iter()
        .map(|vertices| {
            let size = vertices.len();
            let inner_edges: usize = vertices
                .iter()
                .enumerate()
                .map(|(i, &u)| {
                    vertices[i + 1..]
                        .iter()
                        .filter(|&&v| g.has_edge(u, v))
                        .count()
                })
                .sum();
            Component {
                is_clique: inner_edges == size * (size - 1) / 2,
                size,
                vertices,
            }
        })
        .collect()
}
