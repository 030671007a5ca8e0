//! Interval representations, compactness normalization and structural
//! predicates on the represented interval graph.
//!
//! Positions are 1-based integers. All intervals are closed: `[2,2]` and
//! `[2,5]` intersect. A representation is compact when every endpoint lies
//! in `[c]` and every position in `[c]` carries both an interval start and
//! an interval end; `c` then equals the number of maximal cliques, which is
//! the minimum over all representations of the same graph.

use crate::error::{CoreError, Result};

/// Closed interval with 1-based integer endpoints, `start <= end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    start: u32,
    end: u32,
}

impl Interval {
    /// Panics if `start` is zero or greater than `end`.
    pub fn new(start: u32, end: u32) -> Self {
        assert!(start >= 1, "interval positions are 1-based");
        assert!(start <= end, "interval start must not exceed its end");
        Interval { start, end }
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn end(&self) -> u32 {
        self.end
    }

    /// `end - start`; unit-point intervals have length 0.
    pub fn length(&self) -> u32 {
        self.end - self.start
    }

    pub fn contains_point(&self, p: u32) -> bool {
        self.start <= p && p <= self.end
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.start <= other.end && other.start <= self.end
    }

    /// Weak containment: `other` lies inside `self`.
    pub fn contains(&self, other: &Interval) -> bool {
        self.start <= other.start && other.end <= self.end
    }
}

impl From<(u32, u32)> for Interval {
    fn from((s, e): (u32, u32)) -> Self {
        Interval::new(s, e)
    }
}

/// A set of intervals indexed by vertex; index i is the stable identity of
/// vertex i across transformations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn new(intervals: Vec<Interval>) -> Self {
        IntervalSet { intervals }
    }

    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        IntervalSet {
            intervals: pairs.iter().map(|&(s, e)| Interval::new(s, e)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn get(&self, v: usize) -> Interval {
        self.intervals[v]
    }

    pub fn as_slice(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn iter(&self) -> impl Iterator<Item = &Interval> {
        self.intervals.iter()
    }
}

impl From<Vec<Interval>> for IntervalSet {
    fn from(intervals: Vec<Interval>) -> Self {
        IntervalSet { intervals }
    }
}

/// A compact interval representation: endpoints in `[c]`, every position in
/// `[c]` carries a start and an end, intervals sorted by (start, end,
/// original index). `c == 0` only for the empty set.
///
/// The sorted order is part of the contract; the subset dynamic programs
/// rely on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactRep {
    intervals: Vec<Interval>,
    c: u32,
}

impl CompactRep {
    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn get(&self, v: usize) -> Interval {
        self.intervals[v]
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn iter(&self) -> impl Iterator<Item = &Interval> {
        self.intervals.iter()
    }

    pub fn to_interval_set(&self) -> IntervalSet {
        IntervalSet::new(self.intervals.clone())
    }
}

/// Rewrites interval endpoints onto the smallest possible integer positions
/// while preserving every pairwise intersection, keeping the input order.
/// Returns the rewritten intervals and the resulting compactness.
///
/// Event processing breaks coordinate ties with starts before ends, so
/// intervals touching in a single point stay intersecting.
pub(crate) fn compact_values(intervals: &[Interval]) -> (Vec<Interval>, u32) {
    let n = intervals.len();
    if n == 0 {
        return (Vec::new(), 0);
    }
    // (position, is_end, vertex); starts sort before ends at equal positions
    let mut events: Vec<(u32, bool, usize)> = Vec::with_capacity(2 * n);
    for (v, iv) in intervals.iter().enumerate() {
        events.push((iv.start, false, v));
        events.push((iv.end, true, v));
    }
    events.sort_unstable_by_key(|&(pos, is_end, _)| (pos, is_end));

    let mut cur: u32 = 0;
    let mut end_at_cur = false;
    let mut new_start = vec![0u32; n];
    let mut new_end = vec![0u32; n];
    for (_, is_end, v) in events {
        if is_end {
            new_end[v] = cur;
            end_at_cur = true;
        } else {
            // A start must land strictly after every end at a smaller
            // original position; ends share the position of the latest start.
            if cur == 0 || end_at_cur {
                cur += 1;
                end_at_cur = false;
            }
            new_start[v] = cur;
        }
    }
    let rewritten = (0..n)
        .map(|v| Interval::new(new_start[v], new_end[v]))
        .collect();
    (rewritten, cur)
}

/// Computes the minimum-compactness representation of the graph represented
/// by `s`. Returns the compact representation and the permutation mapping
/// each original vertex index to its position in the sorted output.
///
/// The empty input yields an empty representation with `c == 0`.
pub fn compactify(s: &IntervalSet) -> (CompactRep, Vec<usize>) {
    let (rewritten, c) = compact_values(s.as_slice());
    let n = rewritten.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (rewritten[v].start, rewritten[v].end, v));
    let intervals: Vec<Interval> = order.iter().map(|&v| rewritten[v]).collect();
    let mut perm = vec![0usize; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    (CompactRep { intervals, c }, perm)
}

/// Enumerates all maximal cliques of the interval graph represented by `s`,
/// each as a sorted set of vertex indices, ordered by the sweep position
/// that defines them.
///
/// Every maximal clique of an interval graph is the set of intervals
/// containing some interval end point, so stabbing each end point and
/// discarding non-maximal stab sets is exhaustive. This routine is the
/// independent oracle for [`compactify`]: the clique count must equal `c`.
pub fn maximal_cliques(s: &IntervalSet) -> Vec<Vec<usize>> {
    let n = s.len();
    let mut stabs: Vec<(u32, Vec<usize>)> = Vec::with_capacity(n);
    for iv in s.iter() {
        let p = iv.end();
        let members: Vec<usize> = (0..n).filter(|&j| s.get(j).contains_point(p)).collect();
        stabs.push((p, members));
    }
    stabs.sort();
    stabs.dedup_by(|a, b| a.1 == b.1);

    let mut cliques: Vec<Vec<usize>> = Vec::new();
    'outer: for (i, (_, members)) in stabs.iter().enumerate() {
        for (j, (_, other)) in stabs.iter().enumerate() {
            if i != j && members.len() < other.len() && is_subset(members, other) {
                continue 'outer;
            }
        }
        if !cliques.contains(members) {
            cliques.push(members.clone());
        }
    }
    cliques
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // both sorted
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

/// True iff no interval of this representation is strictly contained in
/// another. The check is on the given representation, not up to
/// re-representation; equal intervals do not count as containment.
pub fn is_proper_rep(r: &CompactRep) -> bool {
    let ivs = r.intervals();
    let mut i = 0;
    let mut max_end_before: Option<u32> = None;
    while i < ivs.len() {
        let start = ivs[i].start();
        let mut j = i;
        while j < ivs.len() && ivs[j].start() == start {
            j += 1;
        }
        // two intervals sharing a start with distinct ends nest strictly
        if ivs[i].end() != ivs[j - 1].end() {
            return false;
        }
        if let Some(m) = max_end_before {
            if ivs[i].end() <= m {
                return false;
            }
        }
        let group_max = ivs[i..j].iter().map(|iv| iv.end()).max().unwrap();
        max_end_before = Some(max_end_before.map_or(group_max, |m| m.max(group_max)));
        i = j;
    }
    true
}

/// True iff every connected component of the represented graph is a clique,
/// i.e. within each component the maximum start is at most the minimum end.
pub fn is_cluster(r: &CompactRep) -> bool {
    let ivs = r.intervals();
    let mut i = 0;
    while i < ivs.len() {
        // grow the component: sorted by start, it extends while the next
        // interval starts inside the running union
        let mut comp_max_end = ivs[i].end();
        let mut min_end = ivs[i].end();
        let mut max_start = ivs[i].start();
        let mut j = i + 1;
        while j < ivs.len() && ivs[j].start() <= comp_max_end {
            comp_max_end = comp_max_end.max(ivs[j].end());
            min_end = min_end.min(ivs[j].end());
            max_start = max_start.max(ivs[j].start());
            j += 1;
        }
        if max_start > min_end {
            return false;
        }
        i = j;
    }
    true
}

/// Maximum interval length of a nonempty representation; at most `c - 1`.
pub fn max_length(r: &CompactRep) -> Result<u32> {
    r.iter()
        .map(|iv| iv.length())
        .max()
        .ok_or(CoreError::EmptyRepresentation)
}
