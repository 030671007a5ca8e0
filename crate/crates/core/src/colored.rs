//! Colored interval graphs, two-graph union instances, the translation
//! between them, and the live-color index that drives the subset DP.

use crate::error::{CoreError, Result};
use crate::interval::{compactify, maximal_cliques, CompactRep, Interval, IntervalSet};

/// An interval graph whose vertices carry nonempty color lists and weights.
///
/// Construction normalizes: the representation is compactified, vertices are
/// sorted by (start, end, input index), and color ids are renumbered so that
/// every color in `0..gamma` occurs on some vertex. Vertex indices after
/// construction refer to the sorted order; [`VertexMap`] translates back.
///
/// Single colors per vertex model jobs with alternative execution intervals;
/// general lists subsume unions of two interval graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredIntervalGraph {
    rep: CompactRep,
    colors: Vec<Vec<u32>>,
    weights: Vec<u64>,
    gamma: u32,
}

/// Translation record from construction-input indices to the normalized
/// graph and back, including the color renumbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    /// input vertex index -> normalized index
    pub to_sorted: Vec<usize>,
    /// normalized index -> input vertex index
    pub to_input: Vec<usize>,
    /// normalized color id -> input color id
    pub color_to_input: Vec<u32>,
}

impl VertexMap {
    fn identity(n: usize, gamma: u32) -> Self {
        VertexMap {
            to_sorted: (0..n).collect(),
            to_input: (0..n).collect(),
            color_to_input: (0..gamma).collect(),
        }
    }
}

impl ColoredIntervalGraph {
    /// Builds a normalized graph from vertex-aligned intervals, color lists
    /// (arbitrary u32 ids) and weights.
    pub fn new(
        intervals: Vec<Interval>,
        colors: Vec<Vec<u32>>,
        weights: Vec<u64>,
    ) -> Result<(Self, VertexMap)> {
        let n = intervals.len();
        if colors.len() != n {
            return Err(CoreError::MismatchedVertexCount {
                left: n,
                right: colors.len(),
            });
        }
        if weights.len() != n {
            return Err(CoreError::MismatchedVertexCount {
                left: n,
                right: weights.len(),
            });
        }
        for (v, list) in colors.iter().enumerate() {
            if list.is_empty() {
                return Err(CoreError::EmptyColorList { vertex: v });
            }
        }

        let (rep, perm) = compactify(&IntervalSet::new(intervals));

        let mut distinct: Vec<u32> = colors.iter().flatten().copied().collect();
        distinct.sort_unstable();
        distinct.dedup();
        let renumber = |id: u32| distinct.binary_search(&id).unwrap() as u32;

        let mut sorted_colors: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut sorted_weights = vec![0u64; n];
        for v in 0..n {
            let mut list: Vec<u32> = colors[v].iter().map(|&c| renumber(c)).collect();
            list.sort_unstable();
            list.dedup();
            sorted_colors[perm[v]] = list;
            sorted_weights[perm[v]] = weights[v];
        }
        let mut to_input = vec![0usize; n];
        for (input, &sorted) in perm.iter().enumerate() {
            to_input[sorted] = input;
        }
        let gamma = distinct.len() as u32;
        Ok((
            ColoredIntervalGraph {
                rep,
                colors: sorted_colors,
                weights: sorted_weights,
                gamma,
            },
            VertexMap {
                to_sorted: perm,
                to_input,
                color_to_input: distinct,
            },
        ))
    }

    /// Convenience constructor for unit-weight graphs from literal data.
    pub fn from_raw(pairs: &[(u32, u32)], colors: &[&[u32]]) -> (Self, VertexMap) {
        let intervals = pairs.iter().map(|&(s, e)| Interval::new(s, e)).collect();
        let lists = colors.iter().map(|l| l.to_vec()).collect();
        Self::new(intervals, lists, vec![1; pairs.len()]).expect("valid literal instance")
    }

    pub fn from_raw_weighted(
        pairs: &[(u32, u32)],
        colors: &[&[u32]],
        weights: &[u64],
    ) -> (Self, VertexMap) {
        let intervals = pairs.iter().map(|&(s, e)| Interval::new(s, e)).collect();
        let lists = colors.iter().map(|l| l.to_vec()).collect();
        Self::new(intervals, lists, weights.to_vec()).expect("valid literal instance")
    }

    pub fn empty() -> Self {
        let (rep, _) = compactify(&IntervalSet::default());
        ColoredIntervalGraph {
            rep,
            colors: Vec::new(),
            weights: Vec::new(),
            gamma: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rep.is_empty()
    }

    pub fn gamma(&self) -> u32 {
        self.gamma
    }

    pub fn rep(&self) -> &CompactRep {
        &self.rep
    }

    pub fn c(&self) -> u32 {
        self.rep.c()
    }

    pub fn interval(&self, v: usize) -> Interval {
        self.rep.get(v)
    }

    /// Sorted list of 0-based color ids of vertex `v`.
    pub fn color_list(&self, v: usize) -> &[u32] {
        &self.colors[v]
    }

    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// True iff every vertex carries exactly one color.
    pub fn is_jisp(&self) -> bool {
        self.colors.iter().all(|l| l.len() == 1)
    }

    pub fn is_unit_weight(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    /// The same instance under unit weights.
    pub fn with_unit_weights(&self) -> Self {
        let mut g = self.clone();
        g.weights = vec![1; g.n()];
        g
    }

    /// Rebuilds the graph on a vertex subset, renumbering colors. Returns
    /// the graph and, per new vertex, its index in `self`.
    pub fn induced(&self, keep: &[usize]) -> (Self, Vec<usize>) {
        if keep.is_empty() {
            return (Self::empty(), Vec::new());
        }
        let intervals = keep.iter().map(|&v| self.rep.get(v)).collect();
        let colors = keep.iter().map(|&v| self.colors[v].clone()).collect();
        let weights = keep.iter().map(|&v| self.weights[v]).collect();
        let (g, map) = Self::new(intervals, colors, weights).expect("induced of valid graph");
        let back = map.to_input.iter().map(|&i| keep[i]).collect();
        (g, back)
    }
}

/// Two interval representations over the same vertex set plus a target k.
/// Vertex `v` refers to the same job in both representations; the stored
/// intervals keep the caller's vertex order and values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoUnionInstance {
    ivs1: Vec<Interval>,
    ivs2: Vec<Interval>,
    weights: Vec<u64>,
    k: u64,
}

impl TwoUnionInstance {
    pub fn new(ivs1: Vec<Interval>, ivs2: Vec<Interval>, k: u64) -> Result<Self> {
        let weights = vec![1; ivs1.len()];
        Self::new_weighted(ivs1, ivs2, weights, k)
    }

    pub fn new_weighted(
        ivs1: Vec<Interval>,
        ivs2: Vec<Interval>,
        weights: Vec<u64>,
        k: u64,
    ) -> Result<Self> {
        if ivs1.len() != ivs2.len() {
            return Err(CoreError::MismatchedVertexCount {
                left: ivs1.len(),
                right: ivs2.len(),
            });
        }
        if weights.len() != ivs1.len() {
            return Err(CoreError::MismatchedVertexCount {
                left: ivs1.len(),
                right: weights.len(),
            });
        }
        Ok(TwoUnionInstance {
            ivs1,
            ivs2,
            weights,
            k,
        })
    }

    pub fn from_pairs(p1: &[(u32, u32)], p2: &[(u32, u32)], k: u64) -> Result<Self> {
        Self::new(
            p1.iter().map(|&(s, e)| Interval::new(s, e)).collect(),
            p2.iter().map(|&(s, e)| Interval::new(s, e)).collect(),
            k,
        )
    }

    pub fn n(&self) -> usize {
        self.ivs1.len()
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn set_k(&mut self, k: u64) {
        self.k = k;
    }

    pub fn interval1(&self, v: usize) -> Interval {
        self.ivs1[v]
    }

    pub fn interval2(&self, v: usize) -> Interval {
        self.ivs2[v]
    }

    pub fn intervals1(&self) -> &[Interval] {
        &self.ivs1
    }

    pub fn intervals2(&self) -> &[Interval] {
        &self.ivs2
    }

    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn is_unit_weight(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    /// Rewrites both sides onto minimum-compact positions (vertex order and
    /// intersection structure unchanged).
    pub fn compactified(&self) -> Self {
        let (ivs1, _) = crate::interval::compact_values(&self.ivs1);
        let (ivs2, _) = crate::interval::compact_values(&self.ivs2);
        TwoUnionInstance {
            ivs1,
            ivs2,
            weights: self.weights.clone(),
            k: self.k,
        }
    }

    /// Minimum compactness of each side.
    pub fn compactness(&self) -> (u32, u32) {
        let (_, c1) = crate::interval::compact_values(&self.ivs1);
        let (_, c2) = crate::interval::compact_values(&self.ivs2);
        (c1, c2)
    }

    /// Minimum c such that both sides are c-compact.
    pub fn c_all(&self) -> u32 {
        let (c1, c2) = self.compactness();
        c1.max(c2)
    }

    /// Sorted compact representation of one side plus the permutation from
    /// vertex index to sorted position.
    pub fn rep(&self, side: Side) -> (CompactRep, Vec<usize>) {
        match side {
            Side::First => compactify(&IntervalSet::new(self.ivs1.clone())),
            Side::Second => compactify(&IntervalSet::new(self.ivs2.clone())),
        }
    }

    /// Restricts to a vertex subset, preserving interval values.
    pub fn induced(&self, keep: &[usize]) -> Self {
        TwoUnionInstance {
            ivs1: keep.iter().map(|&v| self.ivs1[v]).collect(),
            ivs2: keep.iter().map(|&v| self.ivs2[v]).collect(),
            weights: keep.iter().map(|&v| self.weights[v]).collect(),
            k: self.k,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

/// Which representation becomes the color side of the translation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ColorSide {
    /// Interpret the second representation's positions as colors.
    Second,
    /// Interpret the first representation's positions as colors.
    First,
    /// Color the side with smaller compactness (ties go to the second).
    #[default]
    Auto,
}

/// Translates a two-graph union instance into a colored interval graph:
/// one side keeps its intervals, each position of the other side becomes a
/// color, and a vertex's color list is the position range of its interval
/// there. Two vertices are non-adjacent in the union iff both their
/// intervals and their color lists are disjoint.
///
/// Both sides are compactified first, so the number of colors equals the
/// minimum compactness of the color side.
pub fn two_union_to_cisl(t: &TwoUnionInstance, side: ColorSide) -> (ColoredIntervalGraph, VertexMap) {
    let t = t.compactified();
    let (c1, c2) = (
        t.ivs1.iter().map(|iv| iv.end()).max().unwrap_or(0),
        t.ivs2.iter().map(|iv| iv.end()).max().unwrap_or(0),
    );
    let color_second = match side {
        ColorSide::Second => true,
        ColorSide::First => false,
        ColorSide::Auto => c2 <= c1,
    };
    let (graph_ivs, color_ivs) = if color_second {
        (&t.ivs1, &t.ivs2)
    } else {
        (&t.ivs2, &t.ivs1)
    };
    if t.n() == 0 {
        return (
            ColoredIntervalGraph::empty(),
            VertexMap::identity(0, 0),
        );
    }
    let colors: Vec<Vec<u32>> = color_ivs
        .iter()
        .map(|iv| (iv.start()..=iv.end()).map(|p| p - 1).collect())
        .collect();
    let (g, map) = ColoredIntervalGraph::new(graph_ivs.clone(), colors, t.weights.clone())
        .expect("translation of a valid instance");
    // the color side is compact, so every position occurs and renumbering
    // is the identity
    debug_assert!(map
        .color_to_input
        .iter()
        .enumerate()
        .all(|(i, &c)| i as u32 == c));
    (g, map)
}

/// Per-color liveness windows, slot assignment and the width parameter Q.
///
/// A color is live at position i if some occurrence starts no later than i
/// and some occurrence starts no earlier than i; Q is the maximum number of
/// simultaneously live colors. Slots are assigned greedily along the
/// position axis, so at every position the live colors hold pairwise
/// distinct slots below Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiveColorIndex {
    windows: Vec<(u32, u32)>,
    slots: Vec<u32>,
    q: u32,
    /// deaths[p]: colors whose window ends at position p (p in 1..=c)
    deaths: Vec<Vec<u32>>,
    /// births[p]: colors whose window starts at position p
    births: Vec<Vec<u32>>,
    c: u32,
}

impl LiveColorIndex {
    pub fn q(&self) -> u32 {
        self.q
    }

    /// (first_start, last_start) of the color's occurrences.
    pub fn window(&self, color: u32) -> (u32, u32) {
        self.windows[color as usize]
    }

    pub fn slot(&self, color: u32) -> u32 {
        self.slots[color as usize]
    }

    pub fn is_live(&self, color: u32, position: u32) -> bool {
        let (first, last) = self.windows[color as usize];
        first <= position && position <= last
    }

    pub fn deaths_at(&self, position: u32) -> &[u32] {
        &self.deaths[position as usize]
    }

    pub fn births_at(&self, position: u32) -> &[u32] {
        &self.births[position as usize]
    }
}

/// Builds the live-color index of `g` from per-color minimum and maximum
/// start positions. Uses exactly Q slots.
pub fn build_live_index(g: &ColoredIntervalGraph) -> LiveColorIndex {
    let gamma = g.gamma() as usize;
    let c = g.c();
    let mut windows = vec![(u32::MAX, 0u32); gamma];
    for v in 0..g.n() {
        let s = g.interval(v).start();
        for &col in g.color_list(v) {
            let w = &mut windows[col as usize];
            w.0 = w.0.min(s);
            w.1 = w.1.max(s);
        }
    }
    let mut births = vec![Vec::new(); c as usize + 2];
    let mut deaths = vec![Vec::new(); c as usize + 2];
    for (col, &(first, last)) in windows.iter().enumerate() {
        debug_assert!(first >= 1 && last <= c, "every color occurs on a vertex");
        births[first as usize].push(col as u32);
        deaths[last as usize].push(col as u32);
    }

    let mut slots = vec![0u32; gamma];
    let mut free = std::collections::BinaryHeap::new();
    let mut next_slot = 0u32;
    for p in 1..=c {
        if p >= 2 {
            for &col in &deaths[p as usize - 1] {
                free.push(std::cmp::Reverse(slots[col as usize]));
            }
        }
        for &col in &births[p as usize] {
            slots[col as usize] = match free.pop() {
                Some(std::cmp::Reverse(s)) => s,
                None => {
                    next_slot += 1;
                    next_slot - 1
                }
            };
        }
    }
    LiveColorIndex {
        windows,
        slots,
        q: next_slot,
        deaths,
        births,
        c,
    }
}

/// Structural measurements of an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphStats {
    pub n: usize,
    pub c: u32,
    pub gamma: u32,
    /// maximum number of simultaneously live colors
    pub q: u32,
    /// maximum number of distinct colors in any maximal clique
    pub clique_colors: u32,
    /// maximum clique size
    pub omega: u32,
    /// maximum interval length
    pub ell: u32,
}

/// Computes n, c, gamma, Q, the per-clique color bound, the clique number
/// and the maximum interval length in one sweep over positions.
pub fn stats(g: &ColoredIntervalGraph) -> GraphStats {
    let c = g.c();
    let q = build_live_index(g).q();
    let mut omega = 0u32;
    let mut clique_colors = 0u32;
    if !g.is_empty() {
        // clique size: +1 at start, -1 after end
        let mut diff = vec![0i64; c as usize + 2];
        for v in 0..g.n() {
            let iv = g.interval(v);
            diff[iv.start() as usize] += 1;
            diff[iv.end() as usize + 1] -= 1;
        }
        let mut run = 0i64;
        for p in 1..=c {
            run += diff[p as usize];
            omega = omega.max(run as u32);
        }
        // colors per position: merge each color's coverage into disjoint
        // segments first so overlapping same-color intervals count once
        let mut per_color: Vec<Vec<Interval>> = vec![Vec::new(); g.gamma() as usize];
        for v in 0..g.n() {
            for &col in g.color_list(v) {
                per_color[col as usize].push(g.interval(v));
            }
        }
        let mut cdiff = vec![0i64; c as usize + 2];
        for ivs in &mut per_color {
            ivs.sort_unstable();
            let mut merged: Vec<(u32, u32)> = Vec::new();
            for iv in ivs.iter() {
                match merged.last_mut() {
                    Some(last) if iv.start() <= last.1 => last.1 = last.1.max(iv.end()),
                    _ => merged.push((iv.start(), iv.end())),
                }
            }
            for (s, e) in merged {
                cdiff[s as usize] += 1;
                cdiff[e as usize + 1] -= 1;
            }
        }
        let mut run = 0i64;
        for p in 1..=c {
            run += cdiff[p as usize];
            clique_colors = clique_colors.max(run as u32);
        }
    }
    GraphStats {
        n: g.n(),
        c,
        gamma: g.gamma(),
        q,
        clique_colors,
        omega,
        ell: if g.is_empty() {
            0
        } else {
            crate::interval::max_length(g.rep()).unwrap()
        },
    }
}

/// Maximal cliques of the graph's representation, as vertex index sets.
pub fn graph_maximal_cliques(g: &ColoredIntervalGraph) -> Vec<Vec<usize>> {
    maximal_cliques(&g.rep().to_interval_set())
}
