//! Constructors for the named graphs and parametric families the rest of the
//! crate keeps reaching for.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Symbolic description of a named graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_k` minus one edge; requires `k >= 2`.
    CompleteMinusEdge(usize),
    Claw,
    Paw,
    Diamond,
    Gem,
    Hvn,
    TwoK2,
    ThreeK1,
    /// `P4 v K_n`.
    P4JoinK(usize),
    /// `(K2+K1) v K_n`.
    K2K1JoinK(usize),
    /// `C5 v K_n`.
    XFamily(usize),
    /// `C5` with two nonadjacent vertices blown up to `K_n`.
    YFamily(usize),
    /// Complement of the odd cycle on `m` vertices; `m` odd, `m >= 5`.
    OddAntihole(usize),
}

impl NamedGraph {
    pub fn make(&self) -> Result<Graph, CatalogError> {
        match *self {
            NamedGraph::Path(k) => path(k),
            NamedGraph::Cycle(k) => cycle(k),
            NamedGraph::Complete(k) => complete(k),
            NamedGraph::CompleteMinusEdge(k) => complete_minus_edge(k),
            NamedGraph::Claw => Ok(claw()),
            NamedGraph::Paw => Ok(paw()),
            NamedGraph::Diamond => Ok(diamond()),
            NamedGraph::Gem => Ok(gem()),
            NamedGraph::Hvn => Ok(hvn()),
            NamedGraph::TwoK2 => Ok(two_k2()),
            NamedGraph::ThreeK1 => Ok(three_k1()),
            NamedGraph::P4JoinK(n) => p4_join_k(n),
            NamedGraph::K2K1JoinK(n) => k2_k1_join_k(n),
            NamedGraph::XFamily(n) => x_family(n),
            NamedGraph::YFamily(n) => y_family(n),
            NamedGraph::OddAntihole(m) => odd_antihole(m),
        }
    }
}

pub fn path(k: usize) -> Result<Graph, CatalogError> {
    let edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    Ok(Graph::build(k, &edges)?)
}

pub fn cycle(k: usize) -> Result<Graph, CatalogError> {
    if k < 3 {
        return Err(CatalogError::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {k}"
        )));
    }
    let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Ok(Graph::build(k, &edges)?)
}

pub fn complete(k: usize) -> Result<Graph, CatalogError> {
    let mut edges = Vec::new();
    for u in 0..k {
        for v in (u + 1)..k {
            edges.push((u, v));
        }
    }
    Ok(Graph::build(k, &edges)?)
}

/// `K_k` minus the edge between the last two vertices.
pub fn complete_minus_edge(k: usize) -> Result<Graph, CatalogError> {
    if k < 2 {
        return Err(CatalogError::InvalidParameter(format!(
            "K_k - e needs at least 2 vertices, got {k}"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..k {
        for v in (u + 1)..k {
            if (u, v) != (k - 2, k - 1) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::build(k, &edges)?)
}

/// `K2 + K1`: one edge plus an isolated vertex.
pub fn k2_plus_k1() -> Graph {
    Graph::build(3, &[(0, 1)]).expect("static graph")
}

/// `K1 v 3K1`: the star on four vertices, centre last.
pub fn claw() -> Graph {
    Graph::build(4, &[(0, 3), (1, 3), (2, 3)]).expect("static graph")
}

/// `(K2+K1) v K1`: a triangle with a pendant edge.
pub fn paw() -> Graph {
    k2_plus_k1().join(&complete(1).unwrap()).expect("static graph")
}

/// `K4 - e`.
pub fn diamond() -> Graph {
    complete_minus_edge(4).expect("static graph")
}

/// `P4 v K1`.
pub fn gem() -> Graph {
    p4_join_k(1).expect("static graph")
}

/// `(K2+K1) v K2`.
pub fn hvn() -> Graph {
    k2_k1_join_k(2).expect("static graph")
}

pub fn two_k2() -> Graph {
    Graph::build(4, &[(0, 1), (2, 3)]).expect("static graph")
}

pub fn three_k1() -> Graph {
    Graph::empty(3).expect("static graph")
}

pub fn p4_join_k(n: usize) -> Result<Graph, CatalogError> {
    Ok(path(4)?.join(&complete(n)?)?)
}

pub fn k2_k1_join_k(n: usize) -> Result<Graph, CatalogError> {
    Ok(k2_plus_k1().join(&complete(n)?)?)
}

/// `X_n = C5 v K_n`; order `n + 5`.
pub fn x_family(n: usize) -> Result<Graph, CatalogError> {
    Ok(cycle(5)?.join(&complete(n)?)?)
}

/// `Y_n`: a `C5` with two nonadjacent vertices blown up to `K_n`; order `2n + 3`.
pub fn y_family(n: usize) -> Result<Graph, CatalogError> {
    let kn = complete(n)?;
    // Blow up vertex 0, then the vertex that was 2 (nonadjacent to 0) and now
    // sits at index 1 of the intermediate graph.
    let step = cycle(5)?.blow_up(0, &kn)?;
    Ok(step.blow_up(1, &kn)?)
}

/// Complement of `C_m` for odd `m >= 5`.
pub fn odd_antihole(m: usize) -> Result<Graph, CatalogError> {
    if m.is_multiple_of(2) || m < 5 {
        return Err(CatalogError::InvalidParameter(format!(
            "odd antihole order must be odd and at least 5, got {m}"
        )));
    }
    Ok(cycle(m)?.complement())
}
