//! Backtracking search for filling permutations.
//!
//! Assigning `σ(j) = k` forces `σ(Q(k)) = τ(j)`, which in turn forces the
//! next link of the same chain, so each free choice is followed by unit
//! propagation until the chain closes or conflicts. Partial assignments are
//! pruned on the parity rule, on the number of closed cycles against the
//! target, and on the number of closed 2-cycles against the puncture count.
//! Symbols are branched smallest-first with candidate images ascending,
//! which fixes the order in which solutions are reported.

use std::ops::ControlFlow;

use super::{make_q, make_tau, Perm};
use crate::error::{Error, Result};

const UNSET: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Perm),
    /// The whole space was explored without a solution.
    Exhausted {
        nodes: u64,
    },
    /// The node budget ran out first; nothing is known.
    Inconclusive {
        nodes: u64,
    },
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&Perm> {
        match self {
            SearchOutcome::Found(p) => Some(p),
            _ => None,
        }
    }
}

/// Search parameters. `cycles` and `max_two_cycles` of `None` leave that
/// condition unconstrained.
#[derive(Clone, Copy, Debug)]
pub struct FillingSearch {
    pub m: usize,
    pub cycles: Option<usize>,
    pub max_two_cycles: Option<usize>,
    pub max_nodes: u64,
}

impl FillingSearch {
    /// Conditions for a filling pair on Σ_{g,n} with `i = m`.
    pub fn for_surface(genus: usize, punctures: usize, m: usize, max_nodes: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("m must be at least 1".into()));
        }
        let cycles = (m + 2)
            .checked_sub(2 * genus)
            .filter(|&c| c >= 1)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "m + 2 − 2g must be positive (g = {genus}, m = {m})"
                ))
            })?;
        Ok(FillingSearch {
            m,
            cycles: Some(cycles),
            max_two_cycles: Some(punctures),
            max_nodes,
        })
    }
}

/// First filling permutation for Σ_{g,n} with `m` intersections, in the
/// canonical branching order.
pub fn search_filling(
    genus: usize,
    punctures: usize,
    m: usize,
    max_nodes: u64,
) -> Result<SearchOutcome> {
    let spec = FillingSearch::for_surface(genus, punctures, m, max_nodes)?;
    let mut first = None;
    let (complete, nodes) = for_each_filling(&spec, |p| {
        first = Some(p.clone());
        ControlFlow::Break(())
    });
    Ok(match first {
        Some(p) => SearchOutcome::Found(p),
        None if complete => SearchOutcome::Exhausted { nodes },
        None => SearchOutcome::Inconclusive { nodes },
    })
}

/// Visits every parity-reversing σ with `σQσ = τ` meeting the cycle limits.
/// Returns whether the space was fully explored (neither the budget nor the
/// visitor stopped it) and the number of search nodes used.
pub fn for_each_filling(
    spec: &FillingSearch,
    mut visit: impl FnMut(&Perm) -> ControlFlow<()>,
) -> (bool, u64) {
    let mut solver = Solver::new(spec);
    let flow = solver.branch(&mut visit);
    (flow.is_continue() && !solver.out_of_budget, solver.nodes)
}

struct Solver {
    degree: usize,
    q: Vec<usize>,
    tau: Vec<usize>,
    sigma: Vec<usize>,
    preimage: Vec<usize>,
    trail: Vec<(usize, usize)>,
    assigned: usize,
    closed: usize,
    two_cycles: usize,
    target_cycles: Option<usize>,
    max_two: Option<usize>,
    nodes: u64,
    max_nodes: u64,
    out_of_budget: bool,
}

impl Solver {
    fn new(spec: &FillingSearch) -> Self {
        let degree = 4 * spec.m;
        let q = (0..degree).map(|j| make_q(spec.m).at(j)).collect();
        let tau = (0..degree).map(|j| make_tau(spec.m).at(j)).collect();
        Solver {
            degree,
            q,
            tau,
            sigma: vec![UNSET; degree],
            preimage: vec![UNSET; degree],
            trail: Vec::new(),
            assigned: 0,
            closed: 0,
            two_cycles: 0,
            target_cycles: spec.cycles,
            max_two: spec.max_two_cycles,
            nodes: 0,
            max_nodes: spec.max_nodes,
            out_of_budget: false,
        }
    }

    /// Sets `σ(j) = k`, recording on the trail the length of any cycle it
    /// closes (0 otherwise).
    fn set(&mut self, j: usize, k: usize) -> bool {
        if self.sigma[j] != UNSET {
            return self.sigma[j] == k;
        }
        if self.preimage[k] != UNSET || j % 2 == k % 2 {
            return false;
        }
        self.sigma[j] = k;
        self.preimage[k] = j;
        self.assigned += 1;
        let mut len = 1;
        let mut x = k;
        while x != j && self.sigma[x] != UNSET {
            x = self.sigma[x];
            len += 1;
        }
        let closed_len = if x == j { len } else { 0 };
        if closed_len > 0 {
            self.closed += 1;
            if closed_len == 2 {
                self.two_cycles += 1;
            }
        }
        self.trail.push((j, closed_len));
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (j, closed_len) = self.trail.pop().expect("trail above mark");
            let k = self.sigma[j];
            self.sigma[j] = UNSET;
            self.preimage[k] = UNSET;
            self.assigned -= 1;
            if closed_len > 0 {
                self.closed -= 1;
                if closed_len == 2 {
                    self.two_cycles -= 1;
                }
            }
        }
    }

    /// Assign and propagate the chain of forced values.
    fn assign(&mut self, j: usize, k: usize) -> bool {
        let (mut j, mut k) = (j, k);
        loop {
            if self.sigma[j] == k {
                return true;
            }
            if !self.set(j, k) {
                return false;
            }
            // σ(Q(σ(j))) = τ(j)
            let (nj, nk) = (self.q[k], self.tau[j]);
            j = nj;
            k = nk;
        }
    }

    fn feasible(&self) -> bool {
        let open = self.degree - self.assigned;
        if let Some(max_two) = self.max_two {
            if self.two_cycles > max_two {
                return false;
            }
        }
        if let Some(target) = self.target_cycles {
            // every open chain ends in exactly one unassigned symbol
            if self.closed + open < target {
                return false;
            }
            if self.closed + usize::from(open > 0) > target {
                return false;
            }
        }
        true
    }

    fn branch(&mut self, visit: &mut impl FnMut(&Perm) -> ControlFlow<()>) -> ControlFlow<()> {
        let Some(j) = self.sigma.iter().position(|&k| k == UNSET) else {
            if self.target_cycles.is_none_or(|t| t == self.closed) {
                return visit(&Perm::from_zero_based(self.sigma.clone()));
            }
            return ControlFlow::Continue(());
        };
        for k in ((1 - j % 2)..self.degree).step_by(2) {
            if self.preimage[k] != UNSET {
                continue;
            }
            if self.nodes >= self.max_nodes {
                self.out_of_budget = true;
                return ControlFlow::Break(());
            }
            self.nodes += 1;
            let mark = self.trail.len();
            if self.assign(j, k) && self.feasible() {
                let flow = self.branch(visit);
                if flow.is_break() {
                    self.undo_to(mark);
                    return flow;
                }
            }
            self.undo_to(mark);
        }
        ControlFlow::Continue(())
    }
}
