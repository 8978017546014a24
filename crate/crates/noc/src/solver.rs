//! Exact clique number, exact chromatic number, odd-hole detection and
//! perfectness at desk scale.
//!
//! Exactness over speed: bounds only ever prune, no heuristic result is
//! returned. The clique search is branch-and-bound over bitset candidate
//! sets with a greedy-colouring bound; the colourability search is
//! backtracking in DSATUR order with colour symmetry broken by capping new
//! colour indices at one past the current maximum. Hole detection
//! enumerates chordless cycles by DFS over chordless paths, which is honest
//! only at small orders, hence the order caps.

use crate::graph::{Graph, VertexSet};
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph order {order} exceeds the solver cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("solve aborted: per-record time budget exhausted")]
    Budget,
}

/// Caps and budget for one solve.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Largest order `chromatic_number` accepts.
    pub max_chromatic_order: usize,
    /// Largest order the hole/antihole enumeration accepts.
    pub max_hole_order: usize,
    /// Optional wall-clock deadline, checked periodically inside the searches.
    pub deadline: Option<Instant>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_chromatic_order: 40,
            max_hole_order: 20,
            deadline: None,
        }
    }
}

/// A proper colouring; colours are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    pub colours: Vec<usize>,
}

impl Colouring {
    pub fn num_colours(&self) -> usize {
        self.colours.iter().copied().max().unwrap_or(0)
    }

    /// Adjacent vertices must receive different colours.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colours.len() == g.n()
            && self.colours.iter().all(|&c| c >= 1)
            && g.edges().all(|(u, v)| self.colours[u] != self.colours[v])
    }
}

struct Ctx {
    deadline: Option<Instant>,
    ticks: u32,
}

impl Ctx {
    fn new(deadline: Option<Instant>) -> Ctx {
        Ctx { deadline, ticks: 0 }
    }

    fn tick(&mut self) -> Result<(), SolverError> {
        if let Some(deadline) = self.deadline {
            // checked on the very first node too, so an expired deadline
            // never starts a search
            if self.ticks.is_multiple_of(1024) && Instant::now() > deadline {
                return Err(SolverError::Budget);
            }
        }
        self.ticks = self.ticks.wrapping_add(1);
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Maximum clique
// ---------------------------------------------------------------------------

/// Exact clique number with a witness maximum clique.
pub fn clique_number(g: &Graph) -> (usize, VertexSet) {
    clique_number_within(g, &Limits::default()).expect("no deadline set")
}

/// Deadline-aware variant used by the streaming harness.
pub fn clique_number_within(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet), SolverError> {
    let mut best = (0usize, VertexSet::EMPTY);
    let mut ctx = Ctx::new(limits.deadline);
    expand_clique(g, 0, VertexSet::EMPTY, g.vertex_set(), &mut best, &mut ctx)?;
    Ok(best)
}

fn expand_clique(
    g: &Graph,
    size: usize,
    members: VertexSet,
    cand: VertexSet,
    best: &mut (usize, VertexSet),
    ctx: &mut Ctx,
) -> Result<(), SolverError> {
    ctx.tick()?;
    if cand.is_empty() {
        if size > best.0 {
            *best = (size, members);
        }
        return Ok(());
    }
    // Greedy colouring of the candidates bounds how much they can add.
    let (order, colours) = greedy_colour_classes(g, &cand);
    let mut live = cand;
    for i in (0..order.len()).rev() {
        let v = order[i];
        if size + colours[i] <= best.0 {
            return Ok(());
        }
        let mut with_v = members;
        with_v.insert(v);
        expand_clique(
            g,
            size + 1,
            with_v,
            live.intersection(&g.neighbours(v)),
            best,
            ctx,
        )?;
        live.remove(v);
    }
    Ok(())
}

/// Greedy colour classes over `cand`, ascending vertex order within classes.
/// Returns vertices sorted by class and the 1-based class index of each.
fn greedy_colour_classes(g: &Graph, cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in cand.iter() {
        match classes.iter_mut().find(|c| !c.intersects(&g.neighbours(v))) {
            Some(c) => c.insert(v),
            None => classes.push(VertexSet::singleton(v)),
        }
    }
    let mut order = Vec::with_capacity(cand.len());
    let mut colours = Vec::with_capacity(cand.len());
    for (k, class) in classes.iter().enumerate() {
        for v in class.iter() {
            order.push(v);
            colours.push(k + 1);
        }
    }
    (order, colours)
}

// ---------------------------------------------------------------------------
// Colourability and chromatic number
// ---------------------------------------------------------------------------

/// Exact `k`-colourability; returns a witness colouring if one exists.
pub fn is_k_colourable(g: &Graph, k: usize) -> Option<Colouring> {
    is_k_colourable_within(g, k, &Limits::default()).expect("no deadline set")
}

pub fn is_k_colourable_within(
    g: &Graph,
    k: usize,
    limits: &Limits,
) -> Result<Option<Colouring>, SolverError> {
    if g.n() == 0 {
        return Ok(Some(Colouring { colours: vec![] }));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut colours = vec![0usize; g.n()];
    let mut ctx = Ctx::new(limits.deadline);
    let found = colour_backtrack(g, k, g.n(), 0, &mut colours, &mut ctx)?;
    Ok(if found {
        let c = Colouring { colours };
        debug_assert!(c.is_proper(g));
        Some(c)
    } else {
        None
    })
}

/// DSATUR-ordered backtracking. `colours[v] == 0` means unassigned.
fn colour_backtrack(
    g: &Graph,
    k: usize,
    remaining: usize,
    max_used: usize,
    colours: &mut [usize],
    ctx: &mut Ctx,
) -> Result<bool, SolverError> {
    ctx.tick()?;
    if remaining == 0 {
        return Ok(true);
    }
    // Most saturated uncoloured vertex; ties by degree, then lowest index.
    let mut pick = usize::MAX;
    let mut pick_key = (0usize, 0usize);
    for v in g.vertices() {
        if colours[v] != 0 {
            continue;
        }
        let mut seen = 0u128;
        for u in g.neighbours(v).iter() {
            if colours[u] != 0 {
                seen |= 1 << (colours[u] - 1);
            }
        }
        let key = (seen.count_ones() as usize, g.degree(v));
        if pick == usize::MAX || key > pick_key {
            pick = v;
            pick_key = key;
        }
    }
    let v = pick;
    let mut forbidden = 0u128;
    for u in g.neighbours(v).iter() {
        if colours[u] != 0 {
            forbidden |= 1 << (colours[u] - 1);
        }
    }
    // New colours only one past the current maximum: symmetry breaking.
    let top = k.min(max_used + 1);
    for c in 1..=top {
        if (forbidden >> (c - 1)) & 1 == 1 {
            continue;
        }
        colours[v] = c;
        if colour_backtrack(g, k, remaining - 1, max_used.max(c), colours, ctx)? {
            return Ok(true);
        }
        colours[v] = 0;
    }
    Ok(false)
}

/// Greedy DSATUR colouring: an upper bound with a concrete witness.
fn dsatur_greedy(g: &Graph) -> Colouring {
    let mut colours = vec![0usize; g.n()];
    for _ in 0..g.n() {
        let mut pick = usize::MAX;
        let mut pick_key = (0usize, 0usize);
        for v in g.vertices() {
            if colours[v] != 0 {
                continue;
            }
            let mut seen = 0u128;
            for u in g.neighbours(v).iter() {
                if colours[u] != 0 {
                    seen |= 1 << (colours[u] - 1);
                }
            }
            let key = (seen.count_ones() as usize, g.degree(v));
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
            }
        }
        let mut c = 1;
        while g.neighbours(pick).iter().any(|u| colours[u] == c) {
            c += 1;
        }
        colours[pick] = c;
    }
    Colouring { colours }
}

/// Exact chromatic number with a witness colouring.
///
/// Searches upward from the clique lower bound; errors if the order exceeds
/// the configured cap rather than ever returning an approximation.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Colouring), SolverError> {
    chromatic_number_within(g, &Limits::default())
}

pub fn chromatic_number_within(
    g: &Graph,
    limits: &Limits,
) -> Result<(usize, Colouring), SolverError> {
    if g.n() > limits.max_chromatic_order {
        return Err(SolverError::OrderCap {
            order: g.n(),
            cap: limits.max_chromatic_order,
        });
    }
    if g.n() == 0 {
        return Ok((0, Colouring { colours: vec![] }));
    }
    let (lb, _) = clique_number_within(g, limits)?;
    let greedy = dsatur_greedy(g);
    let ub = greedy.num_colours();
    debug_assert!(greedy.is_proper(g));
    for k in lb..ub {
        if let Some(c) = is_k_colourable_within(g, k, limits)? {
            return Ok((k, c));
        }
    }
    Ok((ub, greedy))
}

// ---------------------------------------------------------------------------
// Holes, antiholes, perfectness
// ---------------------------------------------------------------------------

/// Walks every chordless cycle (length >= 3) once per direction, shortest
/// vertex first. The callback returns `true` to stop early.
fn scan_chordless_cycles(g: &Graph, mut found: impl FnMut(&[usize]) -> bool) -> bool {
    let n = g.n();
    let mut path: Vec<usize> = Vec::with_capacity(n);
    for v0 in 0..n {
        path.clear();
        path.push(v0);
        if dfs_chordless(g, &mut path, &mut found) {
            return true;
        }
    }
    false
}

fn dfs_chordless(g: &Graph, path: &mut Vec<usize>, found: &mut impl FnMut(&[usize]) -> bool) -> bool {
    let v0 = path[0];
    let last = *path.last().expect("path nonempty");
    // candidates: above the anchor, adjacent to the path end and to no
    // interior path vertex
    let mut cand = g.neighbours(last);
    if path.len() >= 2 {
        for &p in &path[1..path.len() - 1] {
            cand = cand.difference(&g.neighbours(p));
            cand.remove(p);
        }
    }
    cand = cand.difference(&VertexSet::full(v0 + 1));
    let can_close = path.len() >= 2;
    for u in cand.iter() {
        if can_close && g.has_edge(u, v0) {
            // an edge back to the anchor closes a chordless cycle; extending
            // past u would leave that edge as a chord
            path.push(u);
            let hit = found(path);
            path.pop();
            if hit {
                return true;
            }
        } else if !can_close || !g.has_edge(u, v0) {
            path.push(u);
            if dfs_chordless(g, path, found) {
                return true;
            }
            path.pop();
        }
    }
    false
}

/// True iff `g` has an induced odd cycle on five or more vertices.
pub fn has_odd_hole(g: &Graph) -> Result<bool, SolverError> {
    has_odd_hole_within(g, &Limits::default())
}

pub fn has_odd_hole_within(g: &Graph, limits: &Limits) -> Result<bool, SolverError> {
    if g.n() > limits.max_hole_order {
        return Err(SolverError::OrderCap {
            order: g.n(),
            cap: limits.max_hole_order,
        });
    }
    Ok(scan_chordless_cycles(g, |cyc| {
        cyc.len() >= 5 && cyc.len() % 2 == 1
    }))
}

/// True iff the complement of `g` has an induced odd cycle on 5+ vertices.
pub fn has_odd_antihole(g: &Graph) -> Result<bool, SolverError> {
    has_odd_antihole_within(g, &Limits::default())
}

pub fn has_odd_antihole_within(g: &Graph, limits: &Limits) -> Result<bool, SolverError> {
    has_odd_hole_within(&g.complement(), limits)
}

/// Perfectness via the odd hole / odd antihole characterization.
/// Enumeration-based, hence the small order cap.
pub fn is_perfect_small(g: &Graph) -> Result<bool, SolverError> {
    is_perfect_small_within(g, &Limits::default())
}

pub fn is_perfect_small_within(g: &Graph, limits: &Limits) -> Result<bool, SolverError> {
    Ok(!has_odd_hole_within(g, limits)? && !has_odd_antihole_within(g, limits)?)
}

/// Longest induced cycle (length >= 3), with a witness, or None if acyclic.
pub fn longest_induced_cycle(g: &Graph) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    scan_chordless_cycles(g, |cyc| {
        if best.as_ref().is_none_or(|b| cyc.len() > b.len()) {
            best = Some(cyc.to_vec());
        }
        false
    });
    best
}

/// χ(g) <= max(c, ω(g))?
pub fn near_optimal_check(g: &Graph, c: usize) -> Result<bool, SolverError> {
    let (omega, _) = clique_number(g);
    let (chi, _) = chromatic_number(g)?;
    Ok(chi <= c.max(omega))
}

// ---------------------------------------------------------------------------
// Comparable-vertex reduction
// ---------------------------------------------------------------------------

/// Repeatedly deletes a vertex whose neighbourhood is contained in another
/// vertex's neighbourhood. Both χ and ω are preserved: the deleted vertex can
/// reuse the dominating vertex's colour, and any maximum clique through it
/// maps onto one through the dominating vertex.
pub fn reduce_comparable(g: &Graph) -> Graph {
    let mut cur = g.clone();
    'outer: loop {
        for u1 in cur.vertices() {
            for u2 in cur.vertices() {
                if u1 == u2 {
                    continue;
                }
                if cur.neighbours(u1).is_subset_of(&cur.neighbours(u2)) {
                    let mut keep = cur.vertex_set();
                    keep.remove(u1);
                    cur = cur.induced(&keep);
                    continue 'outer;
                }
            }
        }
        return cur;
    }
}
