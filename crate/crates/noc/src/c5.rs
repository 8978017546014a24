//! Neighbourhood decompositions around an induced C5 and around a big
//! antihole, with checkers for the structural claims they support on
//! (2K2, P4 v Kn)-free graphs.
//!
//! Every vertex outside the anchor set Q is classified by its *trace*, the
//! set of its neighbours on Q. Around a C5 the traces that can occur in a
//! 2K2-free graph fall into five shapes (A, B, D, F, Z below); anything else
//! is reported as unclassified rather than guessed. Around an antihole each
//! trace gets its own cell.

use crate::catalog;
use crate::graph::{Graph, VertexSet};
use crate::graph6;
use crate::iso;
use crate::solver;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum C5Error {
    #[error("the given vertices do not induce a C5 in cyclic order: {0}")]
    NotInducedC5(String),
    #[error("the given vertices do not induce an antihole in order: {0}")]
    NotInducedAntihole(String),
}

/// Index arithmetic mod 5. Labels in reports are 1-based (positions 1..=5),
/// storage is 0-based; this helper is the single conversion point.
fn m5(i: usize, shift: isize) -> usize {
    ((i as isize + shift).rem_euclid(5)) as usize
}

/// The partition of a graph around an induced C5 with vertex list Q.
///
/// With indices mod 5 (0-based here, 1-based in the original labels):
/// - `a[i]`: trace is the two cycle-neighbours of position i,
/// - `b[i]`: trace is position i plus the two positions at distance 2,
/// - `d[i]`: trace is everything except position i,
/// - `f`: trace is all of Q,
/// - `z`: empty trace,
/// - `unclassified`: any other trace (impossible in a 2K2-free graph).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct C5Partition {
    pub q: [usize; 5],
    pub a: [VertexSetRepr; 5],
    pub b: [VertexSetRepr; 5],
    pub d: [VertexSetRepr; 5],
    pub f: VertexSetRepr,
    pub z: VertexSetRepr,
    pub unclassified: VertexSetRepr,
}

/// Vertex sets serialize as sorted vertex lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexSetRepr(pub VertexSet);

impl Serialize for VertexSetRepr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

impl C5Partition {
    /// `S_i = A_i + {v_i}`.
    pub fn s(&self, i: usize) -> VertexSet {
        let mut out = self.a[i].0;
        out.insert(self.q[i]);
        out
    }

    pub fn a_union(&self) -> VertexSet {
        self.a.iter().fold(VertexSet::EMPTY, |acc, s| acc.union(&s.0))
    }

    pub fn b_union(&self) -> VertexSet {
        self.b.iter().fold(VertexSet::EMPTY, |acc, s| acc.union(&s.0))
    }

    pub fn d_union(&self) -> VertexSet {
        self.d.iter().fold(VertexSet::EMPTY, |acc, s| acc.union(&s.0))
    }
}

fn check_c5(g: &Graph, q: &[usize; 5]) -> Result<(), C5Error> {
    let mut seen = VertexSet::EMPTY;
    for &v in q {
        if v >= g.n() {
            return Err(C5Error::NotInducedC5(format!("vertex {v} out of range")));
        }
        if seen.contains(v) {
            return Err(C5Error::NotInducedC5(format!("vertex {v} repeated")));
        }
        seen.insert(v);
    }
    for i in 0..5 {
        let next = q[m5(i, 1)];
        let skip = q[m5(i, 2)];
        if !g.has_edge(q[i], next) {
            return Err(C5Error::NotInducedC5(format!(
                "consecutive pair ({}, {next}) not adjacent",
                q[i]
            )));
        }
        if g.has_edge(q[i], skip) {
            return Err(C5Error::NotInducedC5(format!(
                "chord ({}, {skip}) present",
                q[i]
            )));
        }
    }
    Ok(())
}

/// Classifies every vertex outside `q` by its trace on `q`.
pub fn decompose_c5(g: &Graph, q: [usize; 5]) -> Result<C5Partition, C5Error> {
    check_c5(g, &q)?;
    let q_set: VertexSet = q.iter().copied().collect();
    let mut part = C5Partition {
        q,
        a: [VertexSetRepr(VertexSet::EMPTY); 5],
        b: [VertexSetRepr(VertexSet::EMPTY); 5],
        d: [VertexSetRepr(VertexSet::EMPTY); 5],
        f: VertexSetRepr(VertexSet::EMPTY),
        z: VertexSetRepr(VertexSet::EMPTY),
        unclassified: VertexSetRepr(VertexSet::EMPTY),
    };
    for u in g.vertices() {
        if q_set.contains(u) {
            continue;
        }
        let trace: u8 = (0..5)
            .filter(|&i| g.has_edge(u, q[i]))
            .fold(0, |m, i| m | 1 << i);
        match trace_cell(trace) {
            TraceCell::A(i) => part.a[i].0.insert(u),
            TraceCell::B(i) => part.b[i].0.insert(u),
            TraceCell::D(i) => part.d[i].0.insert(u),
            TraceCell::F => part.f.0.insert(u),
            TraceCell::Z => part.z.0.insert(u),
            TraceCell::Other => part.unclassified.0.insert(u),
        }
    }
    Ok(part)
}

enum TraceCell {
    A(usize),
    B(usize),
    D(usize),
    F,
    Z,
    Other,
}

fn trace_cell(trace: u8) -> TraceCell {
    if trace == 0 {
        return TraceCell::Z;
    }
    if trace == 0b11111 {
        return TraceCell::F;
    }
    for i in 0..5 {
        let a_i = (1 << m5(i, -1)) | (1 << m5(i, 1));
        if trace == a_i {
            return TraceCell::A(i);
        }
        let b_i = (1 << i) | (1 << m5(i, -2)) | (1 << m5(i, 2));
        if trace == b_i {
            return TraceCell::B(i);
        }
        if trace == 0b11111 ^ (1 << i) {
            return TraceCell::D(i);
        }
    }
    TraceCell::Other
}

// ---------------------------------------------------------------------------
// Claim checking
// ---------------------------------------------------------------------------

/// The structural claims checked on a C5 partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimId {
    /// Every vertex falls in some cell.
    Coverage,
    /// Each `S_i + Z` is a stable set.
    Stability,
    /// Each `D_i + F` has clique number below n.
    CliqueCap,
    /// `B_i` is complete to `B_{i-1} + B_{i+1} + A_i`.
    Completeness,
    /// Non-neighbourhoods in `B_i` of vertices two steps away are stable.
    NonNeighbourStability,
    /// A big clique in `B_i` empties the far B and D cells.
    Emptiness,
    /// Neighbourhoods in `B_i` of adjacent-position A vertices have clique
    /// number below n.
    NeighbourhoodCliqueCap,
}

pub const ALL_CLAIMS: [ClaimId; 7] = [
    ClaimId::Coverage,
    ClaimId::Stability,
    ClaimId::CliqueCap,
    ClaimId::Completeness,
    ClaimId::NonNeighbourStability,
    ClaimId::Emptiness,
    ClaimId::NeighbourhoodCliqueCap,
];

/// A concrete refutation: the vertices violating a claim, with a note.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub vertices: Vec<usize>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub id: ClaimId,
    pub holds: bool,
    pub certificate: Option<Certificate>,
}

/// Result of checking all claims on one (graph, C5, n) triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub graph6: String,
    pub q: [usize; 5],
    pub n: usize,
    /// Whether the graph is (2K2, P4 v Kn)-free. When false the claims are
    /// still evaluated but are not guaranteed to hold.
    pub hypotheses_met: bool,
    pub claims: Vec<ClaimCheck>,
}

impl ClaimReport {
    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }
}

/// Freeness from `P4 v Kn`. A pattern larger than the supported graph order
/// embeds in nothing, so freeness holds vacuously there.
pub(crate) fn p4_join_free(g: &Graph, n: usize) -> bool {
    match catalog::p4_join_k(n) {
        Ok(pattern) => !iso::contains_induced(g, &pattern),
        Err(_) => true,
    }
}

/// Maps a clique of the subgraph induced by `s` back to host vertex ids.
fn lift_clique(g: &Graph, s: &VertexSet) -> (usize, Vec<usize>) {
    let sub = g.induced(s);
    let (size, local) = solver::clique_number(&sub);
    let members: Vec<usize> = s.iter().collect();
    (size, local.iter().map(|i| members[i]).collect())
}

fn stable_violation(g: &Graph, s: &VertexSet) -> Option<(usize, usize)> {
    let members: Vec<usize> = s.iter().collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if g.has_edge(u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Evaluates all seven claims literally against the partition.
pub fn check_claims(g: &Graph, p: &C5Partition, n: usize) -> ClaimReport {
    let hypotheses_met =
        !iso::contains_induced(g, &catalog::two_k2()) && p4_join_free(g, n);
    let mut claims = Vec::with_capacity(ALL_CLAIMS.len());

    // coverage
    claims.push(match p.unclassified.0.first() {
        None => ClaimCheck {
            id: ClaimId::Coverage,
            holds: true,
            certificate: None,
        },
        Some(_) => ClaimCheck {
            id: ClaimId::Coverage,
            holds: false,
            certificate: Some(Certificate {
                vertices: p.unclassified.0.iter().collect(),
                note: "vertices whose trace matches no cell".into(),
            }),
        },
    });

    // stability of S_i + Z
    let mut stab: Option<Certificate> = None;
    for i in 0..5 {
        if let Some((u, v)) = stable_violation(g, &p.s(i).union(&p.z.0)) {
            stab = Some(Certificate {
                vertices: vec![u, v],
                note: format!("edge inside S_{} + Z", i + 1),
            });
            break;
        }
    }
    claims.push(ClaimCheck {
        id: ClaimId::Stability,
        holds: stab.is_none(),
        certificate: stab,
    });

    // clique cap on D_i + F
    let mut cap: Option<Certificate> = None;
    for i in 0..5 {
        let (size, clique) = lift_clique(g, &p.d[i].0.union(&p.f.0));
        if size + 1 > n {
            cap = Some(Certificate {
                vertices: clique,
                note: format!("clique of size {size} in D_{} + F exceeds n-1", i + 1),
            });
            break;
        }
    }
    claims.push(ClaimCheck {
        id: ClaimId::CliqueCap,
        holds: cap.is_none(),
        certificate: cap,
    });

    // completeness of B_i to B_{i-1} + B_{i+1} + A_i
    let mut comp: Option<Certificate> = None;
    'comp: for i in 0..5 {
        let other = p.b[m5(i, -1)]
            .0
            .union(&p.b[m5(i, 1)].0)
            .union(&p.a[i].0);
        for u in p.b[i].0.iter() {
            for v in other.iter() {
                if u != v && !g.has_edge(u, v) {
                    comp = Some(Certificate {
                        vertices: vec![u, v],
                        note: format!(
                            "nonadjacent pair between B_{} and its complete partners",
                            i + 1
                        ),
                    });
                    break 'comp;
                }
            }
        }
    }
    claims.push(ClaimCheck {
        id: ClaimId::Completeness,
        holds: comp.is_none(),
        certificate: comp,
    });

    // stability of the non-neighbourhood in B_i
    let mut nonn: Option<Certificate> = None;
    'nonn: for i in 0..5 {
        let sources = p.a[m5(i, 2)]
            .0
            .union(&p.a[m5(i, -2)].0)
            .union(&p.b[m5(i, 2)].0)
            .union(&p.b[m5(i, -2)].0)
            .union(&p.d_union())
            .union(&p.f.0);
        for u in sources.iter() {
            let non_nbrs = g.non_neighbours_in(u, &p.b[i].0);
            if let Some((x, y)) = stable_violation(g, &non_nbrs) {
                nonn = Some(Certificate {
                    vertices: vec![u, x, y],
                    note: format!(
                        "edge among non-neighbours of {u} inside B_{}",
                        i + 1
                    ),
                });
                break 'nonn;
            }
        }
    }
    claims.push(ClaimCheck {
        id: ClaimId::NonNeighbourStability,
        holds: nonn.is_none(),
        certificate: nonn,
    });

    // a clique of size n+1 in B_i empties B_{i+2}, B_{i-2}, D_{i+2}, D_{i-2}
    let mut empt: Option<Certificate> = None;
    for i in 0..5 {
        let (size, clique) = lift_clique(g, &p.b[i].0);
        if size > n {
            let far = p.b[m5(i, 2)]
                .0
                .union(&p.b[m5(i, -2)].0)
                .union(&p.d[m5(i, 2)].0)
                .union(&p.d[m5(i, -2)].0);
            if !far.is_empty() {
                let mut vertices: Vec<usize> = far.iter().collect();
                vertices.extend(clique);
                empt = Some(Certificate {
                    vertices,
                    note: format!(
                        "B_{} has clique number {size} >= n+1 but far cells are nonempty",
                        i + 1
                    ),
                });
                break;
            }
        }
    }
    claims.push(ClaimCheck {
        id: ClaimId::Emptiness,
        holds: empt.is_none(),
        certificate: empt,
    });

    // neighbourhood clique cap for A_{i+1} and A_{i-1} vertices
    let mut ncap: Option<Certificate> = None;
    'ncap: for i in 0..5 {
        let sources = p.a[m5(i, 1)].0.union(&p.a[m5(i, -1)].0);
        for u in sources.iter() {
            let nbrs = g.neighbours_in(u, &p.b[i].0);
            let (size, clique) = lift_clique(g, &nbrs);
            if size + 1 > n {
                let mut vertices = vec![u];
                vertices.extend(clique);
                ncap = Some(Certificate {
                    vertices,
                    note: format!(
                        "clique of size {size} among neighbours of {u} in B_{}",
                        i + 1
                    ),
                });
                break 'ncap;
            }
        }
    }
    claims.push(ClaimCheck {
        id: ClaimId::NeighbourhoodCliqueCap,
        holds: ncap.is_none(),
        certificate: ncap,
    });

    ClaimReport {
        graph6: graph6::encode(g),
        q: p.q,
        n,
        hypotheses_met,
        claims,
    }
}

/// Enumerates every induced C5 of `g`, each as a canonical cyclic order,
/// ascending in the vertex 5-tuple. Deterministic.
pub fn all_induced_c5s(g: &Graph) -> Vec<[usize; 5]> {
    let n = g.n();
    let mut out = Vec::new();
    if n < 5 {
        return out;
    }
    let mut pick = [0usize; 5];
    fn rec(g: &Graph, start: usize, depth: usize, pick: &mut [usize; 5], out: &mut Vec<[usize; 5]>) {
        if depth == 5 {
            if let Some(q) = cycle_order(g, pick) {
                out.push(q);
            }
            return;
        }
        for v in start..g.n() {
            pick[depth] = v;
            rec(g, v + 1, depth + 1, pick, out);
        }
    }
    rec(g, 0, 0, &mut pick, &mut out);
    out
}

/// If the five chosen vertices induce a C5, returns the canonical cyclic
/// order (smallest vertex first, smaller neighbour second).
fn cycle_order(g: &Graph, pick: &[usize; 5]) -> Option<[usize; 5]> {
    // all degrees inside the set must be exactly 2; five vertices of degree
    // two form either C5 or C3+C2, and C2 cannot occur in a simple graph
    let set: VertexSet = pick.iter().copied().collect();
    for &v in pick {
        if g.neighbours_in(v, &set).len() != 2 {
            return None;
        }
    }
    let mut cyc = [pick[0]; 5];
    let mut prev = pick[0];
    let mut cur = g.neighbours_in(pick[0], &set).first().expect("degree 2");
    for slot in cyc.iter_mut().skip(1) {
        *slot = cur;
        let next = g
            .neighbours_in(cur, &set)
            .iter()
            .find(|&u| u != prev)
            .expect("degree 2");
        prev = cur;
        cur = next;
    }
    if cur != pick[0] {
        return None; // two short cycles, not one C5
    }
    Some(iso::canonical_cycle_order(cyc))
}

// ---------------------------------------------------------------------------
// Antihole decomposition
// ---------------------------------------------------------------------------

/// The trace partition around an antihole `Q` (consecutive pairs
/// nonadjacent, everything else adjacent), plus the checks the clique-bound
/// argument rests on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AntiholeReport {
    pub graph6: String,
    pub q: Vec<usize>,
    pub r: usize,
    pub n: usize,
    pub hypotheses_met: bool,
    /// r <= 2n+4: a longer antihole would contain `P4 v Kn`.
    pub size_bound_holds: bool,
    pub cells: Vec<AntiholeCell>,
    /// omega(g) <= 2^r * n + floor(r/2).
    pub omega: usize,
    pub omega_bound: u64,
    pub omega_bound_holds: bool,
}

impl AntiholeReport {
    pub fn all_hold(&self) -> bool {
        self.size_bound_holds && self.omega_bound_holds && self.cells.iter().all(|c| c.holds)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellCheckKind {
    /// The complement of the trace has an edge, so the cell must be stable.
    Stable,
    /// The complement of the trace is stable, so the cell sees a P4 on Q and
    /// its clique number stays below n.
    CliqueCap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AntiholeCell {
    /// Positions of the trace on Q (0-based).
    pub trace: Vec<usize>,
    pub members: VertexSetRepr,
    pub check: CellCheckKind,
    pub holds: bool,
    pub certificate: Option<Certificate>,
}

fn check_antihole(g: &Graph, q: &[usize]) -> Result<(), C5Error> {
    let r = q.len();
    if r < 6 {
        return Err(C5Error::NotInducedAntihole(format!(
            "need at least 6 vertices, got {r}"
        )));
    }
    let mut seen = VertexSet::EMPTY;
    for &v in q {
        if v >= g.n() {
            return Err(C5Error::NotInducedAntihole(format!("vertex {v} out of range")));
        }
        if seen.contains(v) {
            return Err(C5Error::NotInducedAntihole(format!("vertex {v} repeated")));
        }
        seen.insert(v);
    }
    for i in 0..r {
        for j in (i + 1)..r {
            let consecutive = j == i + 1 || (i == 0 && j == r - 1);
            if consecutive == g.has_edge(q[i], q[j]) {
                return Err(C5Error::NotInducedAntihole(format!(
                    "pair ({}, {}) {}",
                    q[i],
                    q[j],
                    if consecutive {
                        "adjacent but consecutive"
                    } else {
                        "nonadjacent but not consecutive"
                    }
                )));
            }
        }
    }
    Ok(())
}

/// Partitions the graph around an antihole and evaluates the bound checks.
pub fn decompose_antihole(g: &Graph, q: &[usize], n: usize) -> Result<AntiholeReport, C5Error> {
    check_antihole(g, q)?;
    let r = q.len();
    let hypotheses_met =
        !iso::contains_induced(g, &catalog::two_k2()) && p4_join_free(g, n);
    let q_set: VertexSet = q.iter().copied().collect();

    // nonempty trace cells, keyed by trace bitmask over positions
    let mut cells: std::collections::BTreeMap<u32, VertexSet> = std::collections::BTreeMap::new();
    for u in g.vertices() {
        if q_set.contains(u) {
            continue;
        }
        let mut trace = 0u32;
        for (i, &v) in q.iter().enumerate() {
            if g.has_edge(u, v) {
                trace |= 1 << i;
            }
        }
        cells.entry(trace).or_default().insert(u);
    }

    let mut cell_reports = Vec::with_capacity(cells.len());
    for (&trace, members) in &cells {
        let outside: Vec<usize> = (0..r).filter(|&i| trace >> i & 1 == 0).collect();
        let complement_has_edge = outside
            .iter()
            .enumerate()
            .any(|(a, &i)| outside[a + 1..].iter().any(|&j| g.has_edge(q[i], q[j])));
        let (check, holds, certificate) = if complement_has_edge {
            match stable_violation(g, members) {
                None => (CellCheckKind::Stable, true, None),
                Some((u, v)) => (
                    CellCheckKind::Stable,
                    false,
                    Some(Certificate {
                        vertices: vec![u, v],
                        note: "edge inside a cell that must be stable".into(),
                    }),
                ),
            }
        } else {
            let (size, clique) = lift_clique(g, members);
            if size + 1 > n {
                (
                    CellCheckKind::CliqueCap,
                    false,
                    Some(Certificate {
                        vertices: clique,
                        note: format!("clique of size {size} in a cell capped at n-1"),
                    }),
                )
            } else {
                (CellCheckKind::CliqueCap, true, None)
            }
        };
        cell_reports.push(AntiholeCell {
            trace: (0..r).filter(|&i| trace >> i & 1 == 1).collect(),
            members: VertexSetRepr(*members),
            check,
            holds,
            certificate,
        });
    }

    let (omega, _) = solver::clique_number(g);
    let omega_bound = (1u64 << r) * n as u64 + (r / 2) as u64;
    Ok(AntiholeReport {
        graph6: graph6::encode(g),
        q: q.to_vec(),
        r,
        n,
        hypotheses_met,
        size_bound_holds: r <= 2 * n + 4,
        cells: cell_reports,
        omega,
        omega_bound,
        omega_bound_holds: (omega as u64) <= omega_bound,
    })
}

/// Finds the longest induced antihole on 6+ vertices, as an ordered vertex
/// list, by searching the complement for its longest hole.
pub fn find_antihole(g: &Graph) -> Option<Vec<usize>> {
    let co = g.complement();
    let cyc = solver::longest_induced_cycle(&co)?;
    if cyc.len() >= 6 {
        Some(cyc)
    } else {
        None
    }
}
