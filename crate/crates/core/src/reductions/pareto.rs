//! Maxima of four-dimensional points by divide and conquer with a
//! three-dimensional staircase filter, n log^2 n overall.

use std::collections::BTreeMap;

/// Indices of points that survive the dominance filter: equal points keep
/// only their lowest-index representative, then a point survives iff no
/// other kept point weakly dominates it componentwise.
///
/// The quadratic pairwise filter in the oracle module defines the expected
/// output; this routine must match it exactly.
pub fn pareto_survivors_4d(points: &[[i64; 4]]) -> Vec<usize> {
    // dedup equal points, keeping the lowest index
    let mut by_point: BTreeMap<[i64; 4], usize> = BTreeMap::new();
    for (i, p) in points.iter().enumerate() {
        by_point.entry(*p).or_insert(i);
    }
    let mut entries: Vec<Entry> = by_point
        .into_iter()
        .map(|(p, idx)| Entry { p, idx, alive: true })
        .collect();
    // descending lexicographic order: a dominating point always precedes
    // every point it dominates, so splits only need one-directional filters
    entries.sort_unstable_by_key(|e| std::cmp::Reverse(e.p));
    rec(&mut entries);
    let mut out: Vec<usize> = entries
        .iter()
        .filter(|e| e.alive)
        .map(|e| e.idx)
        .collect();
    out.sort_unstable();
    out
}

#[derive(Clone)]
struct Entry {
    p: [i64; 4],
    idx: usize,
    alive: bool,
}

fn dominates(a: &[i64; 4], b: &[i64; 4]) -> bool {
    (0..4).all(|d| a[d] >= b[d])
}

/// Marks dominated entries dead within the slice (sorted descending lex).
fn rec(entries: &mut [Entry]) {
    let n = entries.len();
    if n <= 32 {
        for i in 0..n {
            if !entries[i].alive {
                continue;
            }
            for j in 0..i {
                // only earlier entries can dominate later ones
                if entries[j].alive && dominates(&entries[j].p, &entries[i].p) {
                    entries[i].alive = false;
                    break;
                }
            }
        }
        return;
    }
    let mid = n / 2;
    let (high, low) = entries.split_at_mut(mid);
    rec(high);
    rec(low);
    // every high point has first coordinate >= every low point's, so a low
    // survivor dies iff some high survivor dominates it in the remaining
    // three coordinates
    filter3(low, high);
}

/// Kills entries of `low` weakly dominated in coordinates 1..4 by an alive
/// entry of `high`. Sweeps coordinate 1 descending while maintaining a
/// (coord 2, coord 3) staircase of the high points seen so far.
fn filter3(low: &mut [Entry], high: &[Entry]) {
    let mut his: Vec<&Entry> = high.iter().filter(|e| e.alive).collect();
    his.sort_unstable_by_key(|e| std::cmp::Reverse(e.p[1]));
    let mut los: Vec<&mut Entry> = low.iter_mut().filter(|e| e.alive).collect();
    los.sort_unstable_by_key(|e| std::cmp::Reverse(e.p[1]));

    // staircase: coord2 -> best coord3, strictly decreasing in coord2
    let mut stairs: BTreeMap<i64, i64> = BTreeMap::new();
    let mut hi = 0;
    for lo in los {
        // admit high points with coord1 >= this low point's (ties count)
        while hi < his.len() && his[hi].p[1] >= lo.p[1] {
            insert_stair(&mut stairs, his[hi].p[2], his[hi].p[3]);
            hi += 1;
        }
        if let Some((_, &c3)) = stairs.range(lo.p[2]..).next() {
            if c3 >= lo.p[3] {
                lo.alive = false;
            }
        }
    }
}

fn insert_stair(stairs: &mut BTreeMap<i64, i64>, c2: i64, c3: i64) {
    if let Some((_, &existing)) = stairs.range(c2..).next() {
        if existing >= c3 {
            return; // already covered
        }
    }
    // remove entries this point covers
    let doomed: Vec<i64> = stairs
        .range(..=c2)
        .rev()
        .take_while(|&(_, &v)| v <= c3)
        .map(|(&k, _)| k)
        .collect();
    for k in doomed {
        stairs.remove(&k);
    }
    stairs.insert(c2, c3);
}
