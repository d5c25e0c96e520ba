//! Exact computation of the chromatic, achromatic and pseudoachromatic
//! numbers on desk-scale graphs by branch and bound over vertex partitions,
//! with class-symmetry breaking and completeness pruning. This is the
//! independent oracle that closes the loop on every claimed value.

use crate::error::{Error, Result};
use crate::exec::Mode;
use crate::graph::{Coloring, Graph};
use crate::verify::eq2_bound;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parameter {
    Chromatic,
    Achromatic,
    Pseudoachromatic,
}

impl Parameter {
    pub fn name(self) -> &'static str {
        match self {
            Parameter::Chromatic => "chromatic",
            Parameter::Achromatic => "achromatic",
            Parameter::Pseudoachromatic => "pseudoachromatic",
        }
    }

    fn needs_proper(self) -> bool {
        !matches!(self, Parameter::Pseudoachromatic)
    }

    fn needs_complete(self) -> bool {
        !matches!(self, Parameter::Chromatic)
    }
}

/// An exact value with its witness coloring. `budget_hit` is false on every
/// returned result: running out of budget is reported as
/// [`Error::BudgetExceeded`] with the surviving bounds instead.
#[derive(Debug, Clone)]
pub struct SolverResult {
    pub parameter: Parameter,
    pub value: u32,
    pub witness: Coloring,
    pub explored: u64,
    pub budget_hit: bool,
}

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Sequential exact search; deterministic witness (lexicographically least
/// class string over the max-degree-first vertex order).
pub fn solve(g: &Graph, parameter: Parameter, budget: u64) -> Result<SolverResult> {
    solve_with(g, parameter, budget, Mode::Sequential)
}

/// Exact search with a scheduling mode. The value is deterministic in both
/// modes; the witness is deterministic only sequentially, since parallel
/// branches race to the first satisfying partition.
pub fn solve_with(g: &Graph, parameter: Parameter, budget: u64, mode: Mode) -> Result<SolverResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParameter("solver needs at least one vertex".into()));
    }
    if n > 64 {
        return Err(Error::InvalidParameter(format!(
            "solver handles at most 64 vertices, got {n}"
        )));
    }

    // Max-degree-first assignment order, ties by ordinal.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | (1 << w)))
        .collect();

    let mut explored = 0u64;
    let upper = eq2_bound(g.m() as u64).min(n as u32);
    match parameter {
        Parameter::Pseudoachromatic | Parameter::Achromatic => {
            for k in (1..=upper).rev() {
                let found = exists_partition(
                    g, &adj, &order, k, parameter, budget, &mut explored, mode,
                )
                .map_err(|_| Error::BudgetExceeded { lower: 1, upper: k, explored })?;
                if let Some(colors) = found {
                    return finish(g, parameter, k, colors, explored);
                }
            }
            unreachable!("k = 1 always admits a complete coloring")
        }
        Parameter::Chromatic => {
            for k in 1..=n as u32 {
                let found = exists_partition(
                    g, &adj, &order, k, parameter, budget, &mut explored, mode,
                )
                .map_err(|_| Error::BudgetExceeded { lower: k, upper: n as u32, explored })?;
                if let Some(colors) = found {
                    return finish(g, parameter, k, colors, explored);
                }
            }
            unreachable!("k = n always admits a proper coloring")
        }
    }
}

fn finish(
    g: &Graph,
    parameter: Parameter,
    value: u32,
    by_position: Vec<u32>,
    explored: u64,
) -> Result<SolverResult> {
    // `by_position` is keyed by assignment order; rebuild by ordinal.
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colors = vec![0u32; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        colors[v] = by_position[pos];
    }
    let witness = Coloring::new(colors, value)?;
    debug_assert!(!parameter.needs_proper() || crate::graph::is_proper(g, &witness).unwrap());
    debug_assert!(!parameter.needs_complete() || crate::graph::is_complete(g, &witness).unwrap());
    Ok(SolverResult { parameter, value, witness, explored, budget_hit: false })
}

struct BudgetAbort;

/// Search state over the fixed vertex order. Class indices are assigned in
/// first-use order (restricted growth), which kills class-permutation
/// symmetry and makes the sequential witness lexicographically least.
#[derive(Clone)]
struct State {
    assignment: Vec<u32>,
    class_mask: Vec<u64>,
    class_size: Vec<u32>,
    classes_used: u32,
    realized: Vec<bool>,
    realized_count: u32,
    spent: u32,
    ext: Vec<u32>,
    un_mask: u64,
    unun: u32,
    deficit: i64,
    pos: usize,
}

struct Ctx<'a> {
    adj: &'a [u64],
    order: &'a [usize],
    k: u32,
    pairs_total: u32,
    m: u32,
    sigma: i64,
    proper: bool,
    complete: bool,
}

impl State {
    fn root(ctx: &Ctx, n: usize) -> State {
        let k = ctx.k as usize;
        State {
            assignment: vec![u32::MAX; n],
            class_mask: vec![0; k],
            class_size: vec![0; k],
            classes_used: 0,
            realized: vec![false; k * k],
            realized_count: 0,
            spent: 0,
            ext: vec![0; k],
            un_mask: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            unun: ctx.m,
            deficit: ctx.k as i64 * ctx.sigma,
            pos: 0,
        }
    }

    /// Assigns the vertex at the current position to class `c`; returns
    /// false when a bound prunes the branch. No undo: callers clone.
    fn assign(&mut self, ctx: &Ctx, c: u32) -> bool {
        let v = ctx.order[self.pos];
        let bit = 1u64 << v;
        let k = ctx.k as usize;
        let is_new = c == self.classes_used;
        if ctx.proper && self.class_mask[c as usize] & ctx.adj[v] != 0 {
            return false;
        }
        self.un_mask &= !bit;
        let to_unassigned = (ctx.adj[v] & self.un_mask).count_ones();
        self.unun -= to_unassigned;
        for j in 0..self.classes_used as usize {
            let e_j = (ctx.adj[v] & self.class_mask[j]).count_ones();
            if e_j == 0 {
                continue;
            }
            self.spent += e_j;
            self.ext[j] -= e_j;
            if ctx.complete && j as u32 != c && !self.realized[c as usize * k + j] {
                self.realized[c as usize * k + j] = true;
                self.realized[j * k + c as usize] = true;
                self.realized_count += 1;
            }
        }
        if is_new {
            self.classes_used += 1;
            self.deficit -= ctx.sigma;
            self.deficit += (ctx.sigma - 1).max(0);
        } else if (self.class_size[c as usize] as i64) < ctx.sigma {
            self.deficit -= 1;
        }
        self.class_mask[c as usize] |= bit;
        self.class_size[c as usize] += 1;
        self.ext[c as usize] += to_unassigned;
        self.assignment[self.pos] = c;
        self.pos += 1;

        let remaining = (ctx.order.len() - self.pos) as i64;
        if self.deficit > remaining {
            return false;
        }
        if ctx.complete {
            let unrealized = ctx.pairs_total - self.realized_count;
            if unrealized > ctx.m - self.spent {
                return false;
            }
            if self.unun == 0 && unrealized > 0 {
                // A pair of classes both closed off from the unassigned
                // vertices can never be realized.
                for a in 0..self.classes_used as usize {
                    if self.ext[a] != 0 {
                        continue;
                    }
                    for b in 0..self.classes_used as usize {
                        if b != a && self.ext[b] == 0 && !self.realized[a * k + b] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn is_solution(&self, ctx: &Ctx) -> bool {
        self.pos == ctx.order.len()
            && self.classes_used == ctx.k
            && (!ctx.complete || self.realized_count == ctx.pairs_total)
    }

    fn candidates(&self, ctx: &Ctx) -> std::ops::RangeInclusive<u32> {
        0..=self.classes_used.min(ctx.k - 1)
    }
}

#[allow(clippy::too_many_arguments)]
fn exists_partition(
    g: &Graph,
    adj: &[u64],
    order: &[usize],
    k: u32,
    parameter: Parameter,
    budget: u64,
    explored: &mut u64,
    mode: Mode,
) -> std::result::Result<Option<Vec<u32>>, BudgetAbort> {
    let n = order.len();
    let m = g.m() as u32;
    let pairs_total = k * (k - 1) / 2;
    if parameter.needs_complete() {
        if pairs_total > m {
            return Ok(None);
        }
        // Every class must see k-1 other classes through incident edges.
        let delta = g.max_degree() as u32;
        if k >= 2 {
            if delta == 0 {
                return Ok(None);
            }
            let sigma = (k - 1).div_ceil(delta);
            if k as u64 * sigma as u64 > n as u64 {
                return Ok(None);
            }
        }
    }
    let delta = g.max_degree().max(1) as u32;
    let sigma = if parameter.needs_complete() && k >= 2 {
        (k - 1).div_ceil(delta) as i64
    } else {
        0
    };
    let ctx = Ctx {
        adj,
        order,
        k,
        pairs_total,
        m,
        sigma,
        proper: parameter.needs_proper(),
        complete: parameter.needs_complete(),
    };

    match mode {
        Mode::Sequential => {
            let mut state = State::root(&ctx, n);
            search_seq(&ctx, &mut state, budget, explored)
        }
        Mode::Parallel => search_par(&ctx, n, budget, explored),
    }
}

/// Depth-first search with clone-on-branch states (state is small).
fn search_seq(
    ctx: &Ctx,
    state: &mut State,
    budget: u64,
    explored: &mut u64,
) -> std::result::Result<Option<Vec<u32>>, BudgetAbort> {
    if state.is_solution(ctx) {
        return Ok(Some(state.assignment.clone()));
    }
    if state.pos == ctx.order.len() {
        return Ok(None);
    }
    for c in state.candidates(ctx) {
        *explored += 1;
        if *explored > budget {
            return Err(BudgetAbort);
        }
        let mut child = state.clone();
        if child.assign(ctx, c) {
            if let Some(hit) = search_seq(ctx, &mut child, budget, explored)? {
                return Ok(Some(hit));
            }
        }
    }
    Ok(None)
}

#[cfg(feature = "parallel")]
fn search_par(
    ctx: &Ctx,
    n: usize,
    budget: u64,
    explored: &mut u64,
) -> std::result::Result<Option<Vec<u32>>, BudgetAbort> {
    use rayon::prelude::*;
    use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
    use std::sync::Mutex;

    // Expand a frontier of prefix states sequentially, then race the rest.
    let fanout = 8 * rayon::current_num_threads().max(1);
    let mut frontier = vec![State::root(ctx, n)];
    let mut local_explored = 0u64;
    while frontier.len() < fanout {
        let Some(idx) = frontier.iter().position(|s| s.pos < n) else { break };
        let state = frontier.swap_remove(idx);
        if state.is_solution(ctx) {
            *explored += local_explored;
            return Ok(Some(state.assignment));
        }
        for c in state.candidates(ctx) {
            local_explored += 1;
            if local_explored > budget {
                *explored += local_explored;
                return Err(BudgetAbort);
            }
            let mut child = state.clone();
            if child.assign(ctx, c) {
                frontier.push(child);
            }
        }
    }

    let nodes = AtomicU64::new(local_explored);
    let found: Mutex<Option<Vec<u32>>> = Mutex::new(None);
    let stop = AtomicBool::new(false);
    let aborted = AtomicBool::new(false);
    frontier.into_par_iter().for_each(|mut state| {
        if stop.load(Ordering::Relaxed) {
            return;
        }
        let result = search_task(ctx, &mut state, budget, &nodes, &stop);
        match result {
            Ok(Some(hit)) => {
                let mut slot = found.lock().unwrap();
                if slot.is_none() {
                    *slot = Some(hit);
                }
                stop.store(true, Ordering::Relaxed);
            }
            Ok(None) => {}
            Err(BudgetAbort) => {
                aborted.store(true, Ordering::Relaxed);
                stop.store(true, Ordering::Relaxed);
            }
        }
    });
    *explored += nodes.load(std::sync::atomic::Ordering::Relaxed);
    let hit = found.into_inner().unwrap();
    if hit.is_none() && aborted.load(std::sync::atomic::Ordering::Relaxed) {
        return Err(BudgetAbort);
    }
    Ok(hit)
}

#[cfg(not(feature = "parallel"))]
fn search_par(
    ctx: &Ctx,
    n: usize,
    budget: u64,
    explored: &mut u64,
) -> std::result::Result<Option<Vec<u32>>, BudgetAbort> {
    let mut state = State::root(ctx, n);
    search_seq(ctx, &mut state, budget, explored)
}

#[cfg(feature = "parallel")]
fn search_task(
    ctx: &Ctx,
    state: &mut State,
    budget: u64,
    nodes: &std::sync::atomic::AtomicU64,
    stop: &std::sync::atomic::AtomicBool,
) -> std::result::Result<Option<Vec<u32>>, BudgetAbort> {
    use std::sync::atomic::Ordering;
    if state.is_solution(ctx) {
        return Ok(Some(state.assignment.clone()));
    }
    if state.pos == ctx.order.len() || stop.load(Ordering::Relaxed) {
        return Ok(None);
    }
    for c in state.candidates(ctx) {
        if nodes.fetch_add(1, Ordering::Relaxed) >= budget {
            return Err(BudgetAbort);
        }
        let mut child = state.clone();
        if child.assign(ctx, c) {
            if let Some(hit) = search_task(ctx, &mut child, budget, nodes, stop)? {
                return Ok(Some(hit));
            }
        }
    }
    Ok(None)
}

/// The closed form max{k : k * floor(k/2) <= n} for the pseudoachromatic
/// number of the cycle C_n.
pub fn psi_s_cycle(n: usize) -> Result<u32> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycles need n >= 3, got {n}")));
    }
    let mut k = 1u32;
    while (k as usize + 1) * ((k as usize + 1) / 2) <= n {
        k += 1;
    }
    Ok(k)
}

/// max{k : C(k,2) <= (n+4)/3}, the matching-based lower bound for maximal
/// planar graphs, with the rational comparison done exactly.
pub fn matching_lower_bound(n: usize) -> Result<u32> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "matching bound applies to maximal planar graphs, n >= 3, got {n}"
        )));
    }
    // C(k,2) <= (n+4)/3  <=>  3*k*(k-1) <= 2*(n+4)
    let mut k = 1u64;
    while 3 * (k + 1) * k <= 2 * (n as u64 + 4) {
        k += 1;
    }
    Ok(k as u32)
}
