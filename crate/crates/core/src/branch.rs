//! Search-tree solver for the unweighted decision problem.
//!
//! The driving observations: the set K of intervals starting no later than
//! the earliest interval end is a clique, some maximum colorful independent
//! set contains exactly one member of K, and for single-colored intervals
//! it suffices to try, per color present in K, the first-ending K-member of
//! that color. Committing a vertex removes its colors and everything
//! intersecting it, so the recursion depth is bounded by k and the fanout
//! by the number of colors in K.

use crate::colored::ColoredIntervalGraph;
use crate::error::{CoreError, Result};
use crate::solution::Solution;

/// The clique of intervals starting no later than the earliest end, with
/// the colors present on its members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstClique {
    /// vertex indices, ascending
    pub members: Vec<usize>,
    /// distinct color ids on the members, ascending
    pub colors: Vec<u32>,
}

/// Computes the first clique of a nonempty graph.
pub fn first_clique(g: &ColoredIntervalGraph) -> Result<FirstClique> {
    if g.is_empty() {
        return Err(CoreError::EmptyRepresentation);
    }
    let min_end = (0..g.n()).map(|v| g.interval(v).end()).min().unwrap();
    let members: Vec<usize> = (0..g.n())
        .filter(|&v| g.interval(v).start() <= min_end)
        .collect();
    let mut colors: Vec<u32> = members
        .iter()
        .flat_map(|&v| g.color_list(v).iter().copied())
        .collect();
    colors.sort_unstable();
    colors.dedup();
    Ok(FirstClique { members, colors })
}

#[derive(Debug, Clone, Copy, Default)]
pub struct BranchOptions {
    /// Accept color lists by branching over every first-clique member (plus
    /// a branch that discards the whole first clique, which list instances
    /// need for exactness). Off by default: the per-color first-ending rule
    /// is only valid for singleton colors, and only it gives the
    /// colors-in-clique fanout bound.
    pub allow_color_lists: bool,
}

/// Search statistics; `nodes` counts recursion entries.
#[derive(Debug, Clone, Copy, Default)]
pub struct BranchStats {
    pub nodes: u64,
}

/// Finds a colorful independent set of size exactly `k`, or `None`.
pub fn solve_branch(g: &ColoredIntervalGraph, k: u64) -> Result<Option<Solution>> {
    solve_branch_with(g, k, BranchOptions::default()).map(|(sol, _)| sol)
}

pub fn solve_branch_with(
    g: &ColoredIntervalGraph,
    k: u64,
    opts: BranchOptions,
) -> Result<(Option<Solution>, BranchStats)> {
    if !g.is_unit_weight() {
        return Err(CoreError::RequiresUnitWeights { op: "branch solver" });
    }
    if !opts.allow_color_lists && !g.is_jisp() {
        return Err(CoreError::RequiresSingletonColors { op: "branch solver" });
    }
    let mut search = BranchSearch {
        g,
        lists: opts.allow_color_lists,
        used: vec![false; g.gamma() as usize],
        picked: Vec::new(),
        stats: BranchStats::default(),
    };
    let found = search.recurse(1, k);
    let stats = search.stats;
    if found {
        let picked = search.picked;
        let value = picked.len() as u64;
        Ok((Some(Solution::new(picked, value)), stats))
    } else {
        Ok((None, stats))
    }
}

struct BranchSearch<'a> {
    g: &'a ColoredIntervalGraph,
    lists: bool,
    used: Vec<bool>,
    picked: Vec<usize>,
    stats: BranchStats,
}

impl BranchSearch<'_> {
    fn eligible(&self, v: usize) -> bool {
        self.g.color_list(v).iter().all(|&c| !self.used[c as usize])
    }

    /// Searches the sub-instance of eligible vertices starting at `lo` or
    /// later for `need` more picks.
    fn recurse(&mut self, lo: u32, need: u64) -> bool {
        self.stats.nodes += 1;
        if need == 0 {
            return true;
        }
        // first eligible vertex at or after lo (rep is sorted by start)
        let begin = self
            .g
            .rep()
            .intervals()
            .partition_point(|iv| iv.start() < lo);
        let min_end = (begin..self.g.n())
            .filter(|&v| self.eligible(v))
            .map(|v| self.g.interval(v).end())
            .min();
        let Some(min_end) = min_end else {
            return false;
        };
        let clique: Vec<usize> = (begin..self.g.n())
            .take_while(|&v| self.g.interval(v).start() <= min_end)
            .filter(|&v| self.eligible(v))
            .collect();

        if self.lists {
            // try every clique member, then the branch that discards the
            // whole clique
            for &v in &clique {
                if self.commit(v, need) {
                    return true;
                }
            }
            return self.recurse(min_end + 1, need);
        }
        // singleton colors: per color, the first-ending member suffices
        let mut colors: Vec<u32> = clique.iter().map(|&v| self.g.color_list(v)[0]).collect();
        colors.sort_unstable();
        colors.dedup();
        for color in colors {
            let v = clique
                .iter()
                .copied()
                .filter(|&v| self.g.color_list(v)[0] == color)
                .min_by_key(|&v| (self.g.interval(v).end(), v))
                .expect("color came from the clique");
            if self.commit(v, need) {
                return true;
            }
        }
        false
    }

    fn commit(&mut self, v: usize, need: u64) -> bool {
        for &c in self.g.color_list(v) {
            self.used[c as usize] = true;
        }
        self.picked.push(v);
        if self.recurse(self.g.interval(v).end() + 1, need - 1) {
            return true;
        }
        self.picked.pop();
        for &c in self.g.color_list(v) {
            self.used[c as usize] = false;
        }
        false
    }
}
