//! Solutions and the checks that make them trustworthy.

use crate::colored::{ColoredIntervalGraph, TwoUnionInstance};
use std::collections::HashSet;

/// A vertex set claimed to be a colorful independent set, with its value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    /// Vertex indices, ascending.
    pub vertices: Vec<usize>,
    /// Total weight of the members (cardinality under unit weights).
    pub value: u64,
}

impl Solution {
    pub fn empty() -> Self {
        Solution {
            vertices: Vec::new(),
            value: 0,
        }
    }

    pub fn new(mut vertices: Vec<usize>, value: u64) -> Self {
        vertices.sort_unstable();
        Solution { vertices, value }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// First constraint a claimed solution violates, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    VertexOutOfRange(usize),
    DuplicateVertex(usize),
    IntervalsIntersect(usize, usize),
    IntervalsIntersectSecond(usize, usize),
    ColorsIntersect(usize, usize),
    ValueMismatch { claimed: u64, actual: u64 },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            Violation::DuplicateVertex(v) => write!(f, "vertex {v} listed twice"),
            Violation::IntervalsIntersect(a, b) => {
                write!(f, "intervals {a} and {b} intersect")
            }
            Violation::IntervalsIntersectSecond(a, b) => {
                write!(f, "intervals {a} and {b} intersect in the second graph")
            }
            Violation::ColorsIntersect(a, b) => write!(f, "colors of {a} and {b} intersect"),
            Violation::ValueMismatch { claimed, actual } => {
                write!(f, "claimed value {claimed} does not match actual {actual}")
            }
        }
    }
}

/// Checks that `vertices` is a colorful independent set of `g` and returns
/// its total weight.
pub fn check_colorful_independent(
    g: &ColoredIntervalGraph,
    vertices: &[usize],
) -> Result<u64, Violation> {
    let mut seen = HashSet::new();
    for &v in vertices {
        if v >= g.n() {
            return Err(Violation::VertexOutOfRange(v));
        }
        if !seen.insert(v) {
            return Err(Violation::DuplicateVertex(v));
        }
    }
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            // colorfulness is reported before overlap when both fail
            if lists_intersect(g.color_list(a), g.color_list(b)) {
                return Err(Violation::ColorsIntersect(a.min(b), a.max(b)));
            }
            if g.interval(a).intersects(&g.interval(b)) {
                return Err(Violation::IntervalsIntersect(a.min(b), a.max(b)));
            }
        }
    }
    Ok(vertices.iter().map(|&v| g.weight(v)).sum())
}

/// Checks that `vertices` is independent in the edge-wise union of the two
/// representations of `t` and returns its total weight.
pub fn check_two_union_independent(
    t: &TwoUnionInstance,
    vertices: &[usize],
) -> Result<u64, Violation> {
    let mut seen = HashSet::new();
    for &v in vertices {
        if v >= t.n() {
            return Err(Violation::VertexOutOfRange(v));
        }
        if !seen.insert(v) {
            return Err(Violation::DuplicateVertex(v));
        }
    }
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            if t.interval1(a).intersects(&t.interval1(b)) {
                return Err(Violation::IntervalsIntersect(a.min(b), a.max(b)));
            }
            if t.interval2(a).intersects(&t.interval2(b)) {
                return Err(Violation::IntervalsIntersectSecond(a.min(b), a.max(b)));
            }
        }
    }
    Ok(vertices.iter().map(|&v| t.weight(v)).sum())
}

pub(crate) fn lists_intersect(a: &[u32], b: &[u32]) -> bool {
    // both sorted ascending
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}
