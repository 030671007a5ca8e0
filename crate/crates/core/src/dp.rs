//! Subset dynamic programs for maximum-weight colorful independent sets.
//!
//! Both programs fill a table T indexed by a position i in 1..=c+1 and a
//! set C of still-available colors: `T[i,C]` is the best total weight using
//! only vertices starting at position >= i whose colors lie inside C. The
//! base row is T[c+1,*] = 0 and the answer is T[1, all colors]. A row is
//! computed from later rows by either skipping the position or committing
//! one vertex that starts there, which consumes its colors and jumps past
//! its end.
//!
//! The reference program ([`solve_dp_gamma`]) indexes C over all subsets of
//! the full color set. The production program ([`solve_dp_q_value`],
//! [`solve_dp_q_witness`]) only distinguishes colors that are live at the
//! current position and encodes C over their slots from
//! [`build_live_index`], so rows have 2^Q entries. Colors outside their
//! live window need no bits: a color whose occurrences all start later is
//! vacuously available, and one whose occurrences all start earlier can
//! never be used again. Re-projecting a subset between two positions is a
//! pair of masks applied per transition:
//!
//! * slots whose color stays live up to the target row keep their bit
//!   (minus the consumed colors),
//! * every other slot bit is forced to 1, which covers both slots dead at
//!   the target row and slots recycled to a color that has not started
//!   yet, available by definition.
//!
//! In value mode the table is a ring of ell+2 rows, since a transition
//! never reads more than ell+1 positions ahead; witness mode keeps all
//! rows plus a decision per entry for one-pass reconstruction.

use crate::colored::{build_live_index, ColoredIntervalGraph};
use crate::error::{CoreError, Result};
use crate::interval::max_length;
use crate::solution::Solution;

/// Default color-count limit of the reference DP.
pub const DEFAULT_GAMMA_LIMIT: u32 = 25;
/// Default live-color limit of the production DP.
pub const DEFAULT_Q_LIMIT: u32 = 30;

const SKIP: u32 = u32::MAX;

/// Reference solver over full color subsets, `O(2^gamma * n)` time with a
/// full `(c+2) * 2^gamma` table.
pub fn solve_dp_gamma(g: &ColoredIntervalGraph) -> Result<u64> {
    solve_dp_gamma_limited(g, DEFAULT_GAMMA_LIMIT)
}

pub fn solve_dp_gamma_limited(g: &ColoredIntervalGraph, gamma_limit: u32) -> Result<u64> {
    if g.gamma() > gamma_limit {
        return Err(CoreError::GammaTooLarge {
            gamma: g.gamma(),
            limit: gamma_limit,
        });
    }
    if g.is_empty() {
        return Ok(0);
    }
    check_total_weight(g)?;
    let table = dp_gamma_table(g);
    let width = 1usize << g.gamma();
    Ok(table[width + (width - 1)])
}

/// Full table of the reference DP; row 0 is unused, row c+1 is the base.
pub(crate) fn dp_gamma_table(g: &ColoredIntervalGraph) -> Vec<u64> {
    let c = g.c() as usize;
    let width = 1usize << g.gamma();
    let batches = start_batches(g);
    let colmask: Vec<u32> = (0..g.n())
        .map(|v| g.color_list(v).iter().fold(0u32, |m, &col| m | 1 << col))
        .collect();
    let mut table = vec![0u64; (c + 2) * width];
    for pos in (1..=c).rev() {
        for cset in 0..width {
            let mut best = table[(pos + 1) * width + cset];
            for v in batches[pos].clone() {
                let cm = colmask[v] as usize;
                if cset & cm == cm {
                    let j = g.interval(v).end() as usize + 1;
                    let cand = g.weight(v) + table[j * width + (cset & !cm)];
                    if cand > best {
                        best = cand;
                    }
                }
            }
            table[pos * width + cset] = best;
        }
    }
    table
}

/// Production solver keyed by live-color slots: `O(2^Q * n)` time,
/// `2^Q * (ell + 2)` table entries.
pub fn solve_dp_q_value(g: &ColoredIntervalGraph) -> Result<u64> {
    solve_dp_q_value_limited(g, DEFAULT_Q_LIMIT)
}

pub fn solve_dp_q_value_limited(g: &ColoredIntervalGraph, q_limit: u32) -> Result<u64> {
    if g.is_empty() {
        return Ok(0);
    }
    check_total_weight(g)?;
    let ctx = SweepCtx::build(g, q_limit)?;
    let width = ctx.width;
    let ring_rows = ctx.ell as usize + 2;
    let mut rows = vec![0u64; ring_rows * width];
    let full = ctx.full;
    for pos in (1..=ctx.c).rev() {
        let row_base = (pos % ring_rows) * width;
        let skip_base = ((pos + 1) % ring_rows) * width;
        let live = ctx.live_mask[pos];
        let dead = full & !live;
        let carry = ctx.carry_mask[pos];
        let ncarry = full & !carry;
        let batch = &ctx.vx[ctx.batches[pos].clone()];
        let mut s = live;
        loop {
            let idx = (s | dead) as usize;
            let mut best = rows[skip_base + ((idx as u32 & carry) | ncarry) as usize];
            for t in batch {
                if idx as u32 & t.colmask == t.colmask {
                    let read = ((idx as u32 & t.keep) | t.force) as usize;
                    let cand = t.weight + rows[t.ring_base + read];
                    if cand > best {
                        best = cand;
                    }
                }
            }
            rows[row_base + idx] = best;
            if s == 0 {
                break;
            }
            s = (s - 1) & live;
        }
    }
    Ok(rows[(1 % ring_rows) * width + full as usize])
}

/// Production solver with witness reconstruction. Keeps a full decision
/// table of `2^Q * (c + 1)` entries instead of the rolling rows.
pub fn solve_dp_q_witness(g: &ColoredIntervalGraph) -> Result<Solution> {
    solve_dp_q_witness_limited(g, DEFAULT_Q_LIMIT)
}

pub fn solve_dp_q_witness_limited(g: &ColoredIntervalGraph, q_limit: u32) -> Result<Solution> {
    if g.is_empty() {
        return Ok(Solution::empty());
    }
    check_total_weight(g)?;
    let ctx = SweepCtx::build(g, q_limit)?;
    let width = ctx.width;
    let full = ctx.full;
    let rows = ctx.c + 2;
    let mut vals = vec![0u64; rows * width];
    let mut dec = vec![SKIP; rows * width];
    for pos in (1..=ctx.c).rev() {
        let live = ctx.live_mask[pos];
        let dead = full & !live;
        let carry = ctx.carry_mask[pos];
        let ncarry = full & !carry;
        let mut s = live;
        loop {
            let idx = (s | dead) as usize;
            let mut best = vals[(pos + 1) * width + ((idx as u32 & carry) | ncarry) as usize];
            let mut choice = SKIP;
            for v in ctx.batches[pos].clone() {
                let t = &ctx.vx[v];
                if idx as u32 & t.colmask == t.colmask {
                    let read = ((idx as u32 & t.keep) | t.force) as usize;
                    let cand = t.weight + vals[t.pos_j * width + read];
                    // among equal values a vertex beats a skip, and the
                    // first (lowest-index) vertex of the batch wins
                    if cand > best || (cand == best && choice == SKIP) {
                        best = cand;
                        choice = v as u32;
                    }
                }
            }
            vals[pos * width + idx] = best;
            dec[pos * width + idx] = choice;
            if s == 0 {
                break;
            }
            s = (s - 1) & live;
        }
    }

    let optimum = vals[width + full as usize];
    let mut vertices = Vec::new();
    let mut pos = 1usize;
    let mut idx = full;
    while pos <= ctx.c {
        let d = dec[pos * width + idx as usize];
        if d == SKIP {
            let carry = ctx.carry_mask[pos];
            idx = (idx & carry) | (full & !carry);
            pos += 1;
        } else {
            let t = &ctx.vx[d as usize];
            vertices.push(d as usize);
            idx = (idx & t.keep) | t.force;
            pos = t.pos_j;
        }
    }
    let value: u64 = vertices.iter().map(|&v| g.weight(v)).sum();
    debug_assert_eq!(value, optimum);
    Ok(Solution::new(vertices, optimum))
}

/// Decision variant: is there a colorful independent set of size `k`
/// (cardinality, ignoring weights)?
pub fn decide(g: &ColoredIntervalGraph, k: u64) -> Result<bool> {
    if k == 0 {
        return Ok(true);
    }
    Ok(solve_dp_q_value(&g.with_unit_weights())? >= k)
}

fn check_total_weight(g: &ColoredIntervalGraph) -> Result<()> {
    let total: u128 = g.weights().iter().map(|&w| w as u128).sum();
    if total > u64::MAX as u128 {
        return Err(CoreError::WeightOverflow);
    }
    Ok(())
}

/// Per-position ranges of vertices sharing that start (rep is sorted).
fn start_batches(g: &ColoredIntervalGraph) -> Vec<std::ops::Range<usize>> {
    let c = g.c() as usize;
    let mut batches = vec![0..0; c + 2];
    let mut v = 0;
    while v < g.n() {
        let s = g.interval(v).start() as usize;
        let mut w = v;
        while w < g.n() && g.interval(w).start() as usize == s {
            w += 1;
        }
        batches[s] = v..w;
        v = w;
    }
    batches
}

/// Precomputed transition of one vertex: its colors as a slot mask at its
/// start position, the kept-slot and forced-one masks for reading the row
/// past its end, and that row's location.
struct VertexTrans {
    colmask: u32,
    keep: u32,
    force: u32,
    weight: u64,
    /// target position end+1
    pos_j: usize,
    /// ring offset of row pos_j in value mode
    ring_base: usize,
}

struct SweepCtx {
    c: usize,
    ell: u32,
    width: usize,
    full: u32,
    /// slot bits of colors live at each position, 1..=c+1
    live_mask: Vec<u32>,
    /// bits of slots whose color at this position is still live at the next
    carry_mask: Vec<u32>,
    batches: Vec<std::ops::Range<usize>>,
    vx: Vec<VertexTrans>,
}

impl SweepCtx {
    fn build(g: &ColoredIntervalGraph, q_limit: u32) -> Result<SweepCtx> {
        let index = build_live_index(g);
        let q = index.q();
        if q > q_limit {
            return Err(CoreError::QTooLarge { q, limit: q_limit });
        }
        let c = g.c() as usize;
        let ell = max_length(g.rep()).expect("nonempty");
        let ring_rows = ell as usize + 2;
        let width = 1usize << q;
        let full = (width - 1) as u32;

        // forward sweep over positions maintaining the live slot set
        let mut live_mask = vec![0u32; c + 2];
        let mut carry_mask = vec![0u32; c + 2];
        // live colors at the current position, ascending by window end
        let mut live: Vec<(u32, u32)> = Vec::new(); // (last_start, color)
        // per position: slots of live colors with window end >= threshold,
        // rebuilt as (sorted ends, suffix slot-or) for the vertex masks
        let mut ends: Vec<u32> = Vec::new();
        let mut suffix_or: Vec<u32> = Vec::new();

        let mut vx: Vec<Option<VertexTrans>> = (0..g.n()).map(|_| None).collect();
        let batches = start_batches(g);

        for pos in 1..=c {
            let p = pos as u32;
            live.retain(|&(last, _)| last >= p);
            for &col in index.births_at(p) {
                live.push((index.window(col).1, col));
            }
            live.sort_unstable();
            let mask = live
                .iter()
                .fold(0u32, |m, &(_, col)| m | 1 << index.slot(col));
            live_mask[pos] = mask;
            carry_mask[pos] = live
                .iter()
                .filter(|&&(last, _)| last > p)
                .fold(0u32, |m, &(_, col)| m | 1 << index.slot(col));

            ends.clear();
            suffix_or.clear();
            ends.extend(live.iter().map(|&(last, _)| last));
            suffix_or.resize(live.len() + 1, 0);
            for i in (0..live.len()).rev() {
                suffix_or[i] = suffix_or[i + 1] | 1 << index.slot(live[i].1);
            }

            for v in batches[pos].clone() {
                let colmask = g
                    .color_list(v)
                    .iter()
                    .fold(0u32, |m, &col| {
                        debug_assert!(index.is_live(col, p));
                        m | 1 << index.slot(col)
                    });
                let j = g.interval(v).end() as usize + 1;
                // slots whose color survives to row j keep their bits
                let cut = ends.partition_point(|&last| last < j as u32);
                let shared = suffix_or[cut];
                vx[v] = Some(VertexTrans {
                    colmask,
                    keep: shared & !colmask,
                    force: full & !shared,
                    weight: g.weight(v),
                    pos_j: j,
                    ring_base: (j % ring_rows) * width,
                });
            }
        }
        Ok(SweepCtx {
            c,
            ell,
            width,
            full,
            live_mask,
            carry_mask,
            batches,
            vx: vx.into_iter().map(|t| t.expect("every vertex starts")).collect(),
        })
    }
}
