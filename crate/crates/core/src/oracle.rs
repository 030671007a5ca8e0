//! Exhaustive reference solvers. These share no code with the production
//! algorithms (intersection and color-disjointness tests are written out
//! here) and exist only to verify them on small instances.
//!
//! Enumeration order and tie-breaking are pinned for reproducibility: the
//! include-first depth-first search keeps the first optimum it reaches.

use crate::colored::{ColoredIntervalGraph, TwoUnionInstance};
use crate::error::{CoreError, Result};
use crate::solution::Solution;

/// Hard size limit for the subset-enumeration solvers.
pub const BRUTE_LIMIT: usize = 24;
/// Hard variable limit for the satisfiability oracle.
pub const SAT_LIMIT: usize = 20;

struct Search<'a> {
    conflict: &'a [Vec<bool>],
    weights: &'a [u64],
    suffix: Vec<u64>,
    chosen: Vec<usize>,
    best: Solution,
    found: bool,
}

impl<'a> Search<'a> {
    fn run(conflict: &'a [Vec<bool>], weights: &'a [u64]) -> Solution {
        let n = weights.len();
        let mut suffix = vec![0u64; n + 1];
        for i in (0..n).rev() {
            suffix[i] = suffix[i + 1] + weights[i];
        }
        let mut s = Search {
            conflict,
            weights,
            suffix,
            chosen: Vec::new(),
            best: Solution::empty(),
            found: false,
        };
        s.dfs(0, 0);
        s.best
    }

    fn dfs(&mut self, i: usize, value: u64) {
        let bound = value + self.suffix[i];
        // ties are pruned once an optimum is recorded, so the first-found
        // optimum is the reported one
        if bound < self.best.value || (bound == self.best.value && self.found) {
            return;
        }
        if i == self.weights.len() {
            if !self.found || value > self.best.value {
                self.best = Solution::new(self.chosen.clone(), value);
                self.found = true;
            }
            return;
        }
        if self.chosen.iter().all(|&u| !self.conflict[u][i]) {
            self.chosen.push(i);
            self.dfs(i + 1, value + self.weights[i]);
            self.chosen.pop();
        }
        self.dfs(i + 1, value);
    }
}

/// Maximum-weight colorful independent set by pruned subset search.
pub fn brute_max_cis(g: &ColoredIntervalGraph) -> Result<Solution> {
    let n = g.n();
    if n > BRUTE_LIMIT {
        return Err(CoreError::OracleLimit {
            n,
            limit: BRUTE_LIMIT,
        });
    }
    // conflict matrix written out independently of the production checks
    let mut conflict = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (a, b) = (g.interval(i), g.interval(j));
            let overlap = a.start() <= b.end() && b.start() <= a.end();
            let shared_color = g
                .color_list(i)
                .iter()
                .any(|c| g.color_list(j).contains(c));
            conflict[i][j] = overlap || shared_color;
        }
    }
    Ok(Search::run(&conflict, g.weights()))
}

/// Maximum-weight independent set of the edge-wise union of the two
/// representations, by the same pruned subset search.
pub fn brute_two_union(t: &TwoUnionInstance) -> Result<Solution> {
    let n = t.n();
    if n > BRUTE_LIMIT {
        return Err(CoreError::OracleLimit {
            n,
            limit: BRUTE_LIMIT,
        });
    }
    let mut conflict = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (a1, b1) = (t.interval1(i), t.interval1(j));
            let (a2, b2) = (t.interval2(i), t.interval2(j));
            let o1 = a1.start() <= b1.end() && b1.start() <= a1.end();
            let o2 = a2.start() <= b2.end() && b2.start() <= a2.end();
            conflict[i][j] = o1 || o2;
        }
    }
    Ok(Search::run(&conflict, t.weights()))
}

/// Pairwise-comparison maxima filter: equal points keep only the
/// lowest-index representative, then a point survives iff no other kept
/// point weakly dominates it componentwise.
pub fn brute_pareto(points: &[[i64; 4]]) -> Vec<usize> {
    let n = points.len();
    let mut kept: Vec<usize> = Vec::new();
    'dedup: for i in 0..n {
        for j in 0..i {
            if points[j] == points[i] {
                continue 'dedup;
            }
        }
        kept.push(i);
    }
    let mut out = Vec::new();
    'outer: for &i in &kept {
        for &j in &kept {
            if j != i && (0..4).all(|d| points[j][d] >= points[i][d]) {
                continue 'outer;
            }
        }
        out.push(i);
    }
    out
}

/// A CNF formula with at most three literals per clause. Variables are
/// 1-based; a negative literal negates its variable. No clause mentions a
/// variable twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf3 {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl Cnf3 {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for (ci, clause) in clauses.iter().enumerate() {
            if clause.len() > 3 {
                return Err(CoreError::MalformedFormula(format!(
                    "clause {ci} has more than three literals"
                )));
            }
            let mut vars: Vec<i32> = clause.iter().map(|l| l.abs()).collect();
            if vars.iter().any(|&v| v == 0 || v as usize > num_vars) {
                return Err(CoreError::MalformedFormula(format!(
                    "clause {ci} mentions a variable outside 1..={num_vars}"
                )));
            }
            vars.sort_unstable();
            let len = vars.len();
            vars.dedup();
            if vars.len() != len {
                return Err(CoreError::MalformedFormula(format!(
                    "clause {ci} mentions a variable twice"
                )));
            }
        }
        Ok(Cnf3 { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Number of clauses containing variable `var` (1-based).
    pub fn occurrences(&self, var: usize) -> usize {
        self.clauses
            .iter()
            .filter(|c| c.iter().any(|l| l.unsigned_abs() as usize == var))
            .count()
    }
}

/// Exhaustive assignment search.
pub fn sat3_satisfiable(f: &Cnf3) -> Result<bool> {
    let n = f.num_vars();
    if n > SAT_LIMIT {
        return Err(CoreError::OracleLimit { n, limit: SAT_LIMIT });
    }
    for assignment in 0u32..(1u32 << n) {
        let ok = f.clauses().iter().all(|clause| {
            clause.iter().any(|&lit| {
                let var = lit.unsigned_abs() as usize;
                let val = assignment >> (var - 1) & 1 == 1;
                if lit > 0 {
                    val
                } else {
                    !val
                }
            })
        });
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_cis_examples() {
        let (e1, _) = ColoredIntervalGraph::from_raw(
            &[(1, 2), (2, 3), (3, 4)],
            &[&[1], &[2], &[2]],
        );
        let best = brute_max_cis(&e1).unwrap();
        assert_eq!(best.value, 2);
        assert_eq!(best.vertices, vec![0, 2]);

        assert_eq!(brute_max_cis(&ColoredIntervalGraph::empty()).unwrap().value, 0);

        let (one, _) =
            ColoredIntervalGraph::from_raw_weighted(&[(1, 1)], &[&[1]], &[7]);
        assert_eq!(brute_max_cis(&one).unwrap().value, 7);
    }

    #[test]
    fn brute_cis_respects_limit() {
        let pairs: Vec<(u32, u32)> = (1..=25).map(|i| (i, i)).collect();
        let lists: Vec<&[u32]> = (0..25).map(|_| &[1u32][..]).collect();
        let (g, _) = ColoredIntervalGraph::from_raw(&pairs, &lists);
        assert!(matches!(
            brute_max_cis(&g),
            Err(CoreError::OracleLimit { n: 25, .. })
        ));
    }

    #[test]
    fn brute_two_union_examples() {
        let t = TwoUnionInstance::from_pairs(
            &[(1, 1), (2, 2), (3, 3)],
            &[(1, 1), (2, 2), (3, 3)],
            0,
        )
        .unwrap();
        assert_eq!(brute_two_union(&t).unwrap().value, 3);

        let t = TwoUnionInstance::from_pairs(&[(1, 1), (1, 1)], &[(1, 1), (1, 1)], 0).unwrap();
        assert_eq!(brute_two_union(&t).unwrap().value, 1);

        // cliques {a,b},{c} against {a},{b,c}
        let t = TwoUnionInstance::from_pairs(
            &[(1, 1), (1, 1), (2, 2)],
            &[(1, 1), (2, 2), (2, 2)],
            0,
        )
        .unwrap();
        assert_eq!(brute_two_union(&t).unwrap().value, 2);
    }

    #[test]
    fn brute_pareto_examples() {
        assert_eq!(brute_pareto(&[[0, 0, 0, 0], [1, 1, 1, 1]]), vec![1]);
        assert_eq!(brute_pareto(&[[5, 5, 5, 5]]), vec![0]);
        assert_eq!(brute_pareto(&[[2, 2, 2, 2], [2, 2, 2, 2]]), vec![0]);
        assert_eq!(brute_pareto(&[[1, 0, 0, 0], [0, 1, 0, 0]]), vec![0, 1]);
    }

    #[test]
    fn sat_examples() {
        let f = Cnf3::new(1, vec![vec![1]]).unwrap();
        assert!(sat3_satisfiable(&f).unwrap());

        let f = Cnf3::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert!(!sat3_satisfiable(&f).unwrap());

        let f = Cnf3::new(
            2,
            vec![vec![1, 2], vec![-1, 2], vec![1, -2], vec![-1, -2]],
        )
        .unwrap();
        assert!(!sat3_satisfiable(&f).unwrap());
    }

    #[test]
    fn cnf_validation() {
        assert!(Cnf3::new(2, vec![vec![1, 1]]).is_err());
        assert!(Cnf3::new(2, vec![vec![1, -1]]).is_err());
        assert!(Cnf3::new(1, vec![vec![2]]).is_err());
        assert!(Cnf3::new(4, vec![vec![1, 2, 3, 4]]).is_err());
    }
}
