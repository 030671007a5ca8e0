//! Random instance generators and the satisfiability-based hard-instance
//! construction. Everything is deterministic under the given seed.

use crate::colored::{ColoredIntervalGraph, TwoUnionInstance};
use crate::error::{CoreError, Result};
use crate::interval::Interval;
use crate::oracle::Cnf3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Parameters of the random model: interval endpoints drawn uniformly from
/// `[c]` (swapped into order), each color included independently with
/// `color_prob` (empty lists redrawn), weights uniform in `1..=weight_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenParams {
    pub n: usize,
    pub c: u32,
    pub gamma: u32,
    pub color_prob: f64,
    pub weight_max: u64,
    pub seed: u64,
}

impl GenParams {
    pub fn new(n: usize, c: u32, gamma: u32, seed: u64) -> Self {
        GenParams {
            n,
            c,
            gamma,
            color_prob: 0.5,
            weight_max: 10,
            seed,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.c < 1 || self.gamma < 1 {
            return Err(CoreError::InvalidParams(
                "compactness and color count must be at least 1".into(),
            ));
        }
        if !(self.color_prob > 0.0 && self.color_prob <= 1.0) {
            return Err(CoreError::InvalidParams(
                "color probability must lie in (0, 1]".into(),
            ));
        }
        if self.weight_max < 1 {
            return Err(CoreError::InvalidParams(
                "maximum weight must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Draws a colored instance; the output is normalized (compact, sorted,
/// colors renumbered to those actually drawn).
pub fn gen_cisl(p: &GenParams) -> Result<ColoredIntervalGraph> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut intervals = Vec::with_capacity(p.n);
    let mut colors = Vec::with_capacity(p.n);
    let mut weights = Vec::with_capacity(p.n);
    for _ in 0..p.n {
        let a = rng.gen_range(1..=p.c);
        let b = rng.gen_range(1..=p.c);
        intervals.push(Interval::new(a.min(b), a.max(b)));
        let list = loop {
            let l: Vec<u32> = (0..p.gamma)
                .filter(|_| rng.gen_bool(p.color_prob))
                .collect();
            if !l.is_empty() {
                break l;
            }
        };
        colors.push(list);
        weights.push(rng.gen_range(1..=p.weight_max));
    }
    if p.n == 0 {
        return Ok(ColoredIntervalGraph::empty());
    }
    let (g, _) = ColoredIntervalGraph::new(intervals, colors, weights)?;
    Ok(g)
}

/// Draws two independent endpoint sequences over the same vertices (colors
/// and weights unused); the caller supplies the target k.
pub fn gen_two_union(p: &GenParams, k: u64) -> Result<TwoUnionInstance> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let draw = |rng: &mut ChaCha8Rng| -> Vec<Interval> {
        (0..p.n)
            .map(|_| {
                let a = rng.gen_range(1..=p.c);
                let b = rng.gen_range(1..=p.c);
                Interval::new(a.min(b), a.max(b))
            })
            .collect()
    };
    let ivs1 = draw(&mut rng);
    let ivs2 = draw(&mut rng);
    TwoUnionInstance::new(ivs1, ivs2, k)
}

/// Encodes a formula as a two-graph instance that has an independent set of
/// size k iff the formula is satisfiable, where k is the number of clauses
/// plus the total number of variable occurrences.
///
/// Per clause, its (up to three) literal vertices form a clique in the
/// second graph, each tied by a first-graph edge to a vertex of its
/// variable's gadget. Per variable with m occurrences, a cycle of 2m
/// vertices alternates between second-graph edges and first-graph edges;
/// its two alternating halves encode true and false. A positive literal
/// attaches to a false-side vertex, a negative one to a true-side vertex,
/// and each first-graph cycle edge hosts at most one attachment. The first
/// graph then consists of disjoint paths with at most three vertices and
/// the second of disjoint cliques with at most three vertices, both laid
/// out as intervals in disjoint coordinate windows.
///
/// Every declared variable must occur in some clause.
pub fn reduce_sat3(f: &Cnf3) -> Result<TwoUnionInstance> {
    let m = f.clauses().len();
    let occurrences: Vec<usize> = (1..=f.num_vars()).map(|v| f.occurrences(v)).collect();
    if let Some(var) = occurrences.iter().position(|&o| o == 0) {
        return Err(CoreError::MalformedFormula(format!(
            "variable {} never occurs",
            var + 1
        )));
    }
    let k = (m + occurrences.iter().sum::<usize>()) as u64;

    // vertex ids: cycle vertices per variable, then clause vertices
    let mut cycle_base = vec![0usize; f.num_vars()];
    let mut next = 0usize;
    for (i, &mi) in occurrences.iter().enumerate() {
        cycle_base[i] = next;
        next += 2 * mi;
    }
    let mut clause_vertices: Vec<Vec<usize>> = Vec::with_capacity(m);
    for clause in f.clauses() {
        clause_vertices.push((0..clause.len()).map(|r| next + r).collect());
        next += clause.len();
    }
    let n = next;

    // each occurrence owns one first-graph cycle edge; record the clause
    // vertex and polarity attached to it
    let mut antenna: Vec<Vec<(usize, bool)>> =
        occurrences.iter().map(|&mi| Vec::with_capacity(mi)).collect();
    for (j, clause) in f.clauses().iter().enumerate() {
        for (r, &lit) in clause.iter().enumerate() {
            let var = lit.unsigned_abs() as usize - 1;
            antenna[var].push((clause_vertices[j][r], lit > 0));
        }
    }

    // first graph: per cycle edge, the path clause vertex - attached end -
    // far end. Cycle edge r of a variable runs between false-side vertex
    // 2r+1 and true-side vertex (2r+2) mod 2m; positive literals attach on
    // the false side, negative ones on the true side.
    let mut ivs1 = vec![Interval::new(1, 1); n];
    let mut p = 1u32;
    for (var, &mi) in occurrences.iter().enumerate() {
        for r in 0..mi {
            let f_end = cycle_base[var] + 2 * r + 1;
            let t_end = cycle_base[var] + (2 * r + 2) % (2 * mi);
            let (cv, positive) = antenna[var][r];
            let (attached, other) = if positive { (f_end, t_end) } else { (t_end, f_end) };
            for (step, &v) in [cv, attached, other].iter().enumerate() {
                ivs1[v] = Interval::new(p + step as u32, p + step as u32 + 1);
            }
            p += 5;
        }
    }

    // second graph: disjoint point cliques per clause and per cycle edge
    let mut ivs2 = vec![Interval::new(1, 1); n];
    let mut q = 1u32;
    for members in &clause_vertices {
        for &v in members {
            ivs2[v] = Interval::new(q, q);
        }
        q += 1;
    }
    for (var, &mi) in occurrences.iter().enumerate() {
        for r in 0..mi {
            let a = cycle_base[var] + 2 * r;
            let b = cycle_base[var] + 2 * r + 1;
            ivs2[a] = Interval::new(q, q);
            ivs2[b] = Interval::new(q, q);
            q += 1;
        }
    }

    let mut t = TwoUnionInstance::new(ivs1, ivs2, k)?;
    t.set_k(k);
    Ok(t)
}
