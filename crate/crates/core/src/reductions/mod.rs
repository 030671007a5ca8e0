//! Data reduction rules, kernelization and the polynomial matching case.

mod matching;
mod pareto;

pub use pareto::pareto_survivors_4d;

use crate::colored::{stats, ColoredIntervalGraph, TwoUnionInstance};
use crate::error::{CoreError, Result};
use crate::interval::{is_cluster, is_proper_rep, Interval};
use crate::solution::{check_colorful_independent, Solution};

/// Four-dimensional dominance key of a vertex in a two-graph instance:
/// (-start, end, -start', end'). If one vertex's signature is
/// componentwise at most another's, the latter vertex blocks a superset of
/// choices and can be deleted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature(pub [i64; 4]);

impl Signature {
    pub fn of(t: &TwoUnionInstance, v: usize) -> Self {
        let a = t.interval1(v);
        let b = t.interval2(v);
        Signature([
            -(a.start() as i64),
            a.end() as i64,
            -(b.start() as i64),
            b.end() as i64,
        ])
    }

    pub fn le(&self, other: &Signature) -> bool {
        (0..4).all(|d| self.0[d] <= other.0[d])
    }
}

/// Result of the signature-dominance reduction.
#[derive(Debug, Clone)]
pub struct SignatureReduction {
    pub instance: TwoUnionInstance,
    /// output vertex index -> input vertex index
    pub kept: Vec<usize>,
    /// deleted input vertex indices, ascending
    pub removed: Vec<usize>,
}

/// Deletes dominated vertices. On unit (or uniform) weights, each
/// signature class keeps one survivor (lowest index) and every vertex
/// whose signature is componentwise at most another survivor's signature
/// is deleted; after compact preprocessing the survivors number at most
/// c^3 over the larger compactness c, or 2c^2 when one side is proper.
///
/// Under non-uniform weights dominance deletion is unsound (the dominated
/// vertex may be the heavier one), so only the per-signature dedup runs,
/// keeping the maximum-weight representative; this bounds survivors by
/// c^4. The optimum value is preserved in both regimes.
pub fn signature_reduce(t: &TwoUnionInstance) -> SignatureReduction {
    let n = t.n();
    let sigs: Vec<Signature> = (0..n).map(|v| Signature::of(t, v)).collect();

    // per-signature dedup: max weight, then lowest index
    let mut class_rep: std::collections::HashMap<Signature, usize> = std::collections::HashMap::new();
    for v in 0..n {
        class_rep
            .entry(sigs[v])
            .and_modify(|best| {
                if t.weight(v) > t.weight(*best) {
                    *best = v;
                }
            })
            .or_insert(v);
    }
    let mut reps: Vec<usize> = class_rep.into_values().collect();
    reps.sort_unstable();

    let uniform = (0..n).all(|v| t.weight(v) == t.weight(0));
    let kept: Vec<usize> = if uniform {
        // survivors are the minimal signatures: negate and take maxima
        let points: Vec<[i64; 4]> = reps
            .iter()
            .map(|&v| {
                let s = sigs[v].0;
                [-s[0], -s[1], -s[2], -s[3]]
            })
            .collect();
        pareto_survivors_4d(&points)
            .into_iter()
            .map(|i| reps[i])
            .collect()
    } else {
        reps
    };
    let keep_set: std::collections::HashSet<usize> = kept.iter().copied().collect();
    let removed: Vec<usize> = (0..n).filter(|v| !keep_set.contains(v)).collect();
    SignatureReduction {
        instance: t.induced(&kept),
        kept,
        removed,
    }
}

/// One fired color-removal step: the color (as an id of the input graph)
/// and the monochromatic independent set that justified it, as input
/// vertex indices in greedy order.
#[derive(Debug, Clone)]
pub struct FiredColor {
    pub color: u32,
    pub mono_is: Vec<usize>,
}

/// Result of exhaustively packing away colors with large monochromatic
/// independent sets.
#[derive(Debug, Clone)]
pub struct ColorPackReduction {
    pub graph: ColoredIntervalGraph,
    pub k: u64,
    /// output vertex index -> input vertex index
    pub kept: Vec<usize>,
    pub fired: Vec<FiredColor>,
}

/// While some color's monochromatic subgraph has an independent set of
/// size at least 2k-1, removes that color's intervals entirely and
/// decreases k: a solution of the rest can always be extended by one
/// interval of the removed color, since on a proper representation each
/// chosen interval overlaps at most two members of the packed set.
///
/// Requires a proper representation, singleton color lists and unit
/// weights. Colors are tried in ascending id against the current k until
/// no color fires.
pub fn color_pack_reduce(g: &ColoredIntervalGraph, k: u64) -> Result<ColorPackReduction> {
    if !is_proper_rep(g.rep()) {
        return Err(CoreError::RequiresProperRep { op: "color packing" });
    }
    if !g.is_jisp() {
        return Err(CoreError::RequiresSingletonColors { op: "color packing" });
    }
    if !g.is_unit_weight() {
        return Err(CoreError::RequiresUnitWeights { op: "color packing" });
    }

    // greedy earliest-end maximum independent set per monochromatic
    // subgraph; removing other colors never changes these
    let gamma = g.gamma() as usize;
    let mut mono: Vec<Vec<usize>> = vec![Vec::new(); gamma];
    {
        let mut by_end: Vec<usize> = (0..g.n()).collect();
        by_end.sort_unstable_by_key(|&v| (g.interval(v).end(), g.interval(v).start(), v));
        let mut last_end: Vec<Option<u32>> = vec![None; gamma];
        for v in by_end {
            let col = g.color_list(v)[0] as usize;
            if last_end[col].is_none_or(|e| g.interval(v).start() > e) {
                mono[col].push(v);
                last_end[col] = Some(g.interval(v).end());
            }
        }
    }

    let mut fired: Vec<FiredColor> = Vec::new();
    let mut fired_mask = vec![false; gamma];
    let mut k = k;
    loop {
        let mut progressed = false;
        for col in 0..gamma {
            if fired_mask[col] || k == 0 {
                continue;
            }
            if mono[col].len() as u64 >= 2 * k - 1 {
                fired_mask[col] = true;
                fired.push(FiredColor {
                    color: col as u32,
                    mono_is: mono[col].clone(),
                });
                k -= 1;
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }

    let keep: Vec<usize> = (0..g.n())
        .filter(|&v| !fired_mask[g.color_list(v)[0] as usize])
        .collect();
    let (graph, kept) = g.induced(&keep);
    Ok(ColorPackReduction {
        graph,
        k,
        kept,
        fired,
    })
}

/// Greedily builds a maximal colorful independent set by one sweep over
/// intervals in order of increasing end, picking whatever neither overlaps
/// the last pick nor reuses a color.
pub fn greedy_maximal_cis(g: &ColoredIntervalGraph) -> Result<Solution> {
    if !g.is_jisp() {
        return Err(CoreError::RequiresSingletonColors {
            op: "greedy maximal set",
        });
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_unstable_by_key(|&v| (g.interval(v).end(), g.interval(v).start(), v));
    let mut used = vec![false; g.gamma() as usize];
    let mut picked = Vec::new();
    let mut last_end: Option<u32> = None;
    for v in order {
        let col = g.color_list(v)[0] as usize;
        if used[col] {
            continue;
        }
        if last_end.is_some_and(|e| g.interval(v).start() <= e) {
            continue;
        }
        used[col] = true;
        last_end = Some(g.interval(v).end());
        picked.push(v);
    }
    let value = picked.iter().map(|&v| g.weight(v)).sum();
    Ok(Solution::new(picked, value))
}

/// Outcome of the proper-representation kernelization.
#[derive(Debug, Clone)]
pub enum KernelOutcome {
    /// The greedy set already reaches k; carries a size-k certificate
    /// valid in the *input* graph.
    SolvedYes { certificate: Solution },
    /// The reduced instance with its new target; vertex count is at most
    /// 4 k'^2 omega.
    Reduced {
        graph: ColoredIntervalGraph,
        k: u64,
        /// output vertex index -> input vertex index
        kept: Vec<usize>,
    },
}

/// Kernelization for single-colored instances on a proper representation:
/// packs away colors with large monochromatic independent sets, then
/// either certifies a yes-instance from the greedy maximal set or returns
/// the reduced instance, which has at most 4 k'^2 omega intervals.
pub fn kernelize_proper(g: &ColoredIntervalGraph, k: u64) -> Result<KernelOutcome> {
    let packed = color_pack_reduce(g, k)?;
    let greedy = greedy_maximal_cis(&packed.graph)?;
    if greedy.len() as u64 >= packed.k {
        // lift back through the fired colors, newest first: a trimmed
        // solution blocks at most 2(k_i - 1) members of a packed set of
        // size >= 2 k_i - 1, so a disjoint interval always remains
        let mut chosen: Vec<usize> = greedy.vertices[..packed.k as usize]
            .iter()
            .map(|&v| packed.kept[v])
            .collect();
        for step in packed.fired.iter().rev() {
            let v = step
                .mono_is
                .iter()
                .copied()
                .find(|&u| {
                    chosen
                        .iter()
                        .all(|&w| !g.interval(u).intersects(&g.interval(w)))
                })
                .expect("packed set larger than twice the blockers");
            chosen.push(v);
        }
        let value = chosen.iter().map(|&v| g.weight(v)).sum();
        let certificate = Solution::new(chosen, value);
        debug_assert!(check_colorful_independent(g, &certificate.vertices).is_ok());
        debug_assert!(certificate.len() as u64 >= k);
        Ok(KernelOutcome::SolvedYes { certificate })
    } else {
        let omega = stats(&packed.graph).omega as u64;
        debug_assert!(
            packed.graph.n() as u64 <= 4 * packed.k * packed.k * omega,
            "kernel bound violated: n={} k={} omega={}",
            packed.graph.n(),
            packed.k,
            omega
        );
        Ok(KernelOutcome::Reduced {
            graph: packed.graph,
            k: packed.k,
            kept: packed.kept,
        })
    }
}

/// Solves the case where both representations are cluster graphs exactly,
/// via maximum matching between the cliques of the two sides: an
/// independent set picks at most one vertex per clique on either side, so
/// picks correspond to clique-clique pairs sharing a vertex.
pub fn solve_cluster_cluster(t: &TwoUnionInstance) -> Result<Solution> {
    if !t.is_unit_weight() {
        return Err(CoreError::RequiresUnitWeights {
            op: "cluster-cluster matching",
        });
    }
    let (rep1, _) = t.rep(crate::colored::Side::First);
    let (rep2, _) = t.rep(crate::colored::Side::Second);
    if !is_cluster(&rep1) || !is_cluster(&rep2) {
        return Err(CoreError::RequiresClusterGraphs {
            op: "cluster-cluster matching",
        });
    }
    if t.n() == 0 {
        return Ok(Solution::empty());
    }
    let cliques1 = interval_components(t.intervals1());
    let cliques2 = interval_components(t.intervals2());
    // one edge per clique pair sharing a vertex; remember the lowest such
    // vertex as the pick
    let mut edge_vertex: std::collections::HashMap<(usize, usize), usize> =
        std::collections::HashMap::new();
    for v in 0..t.n() {
        edge_vertex.entry((cliques1[v], cliques2[v])).or_insert(v);
    }
    let left_count = cliques1.iter().max().unwrap() + 1;
    let right_count = cliques2.iter().max().unwrap() + 1;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); left_count];
    let mut edges: Vec<((usize, usize), usize)> = edge_vertex.iter().map(|(&e, &v)| (e, v)).collect();
    edges.sort_unstable();
    for &((a, b), _) in &edges {
        adj[a].push(b);
    }
    let matched = matching::hopcroft_karp(&adj, right_count);
    let mut vertices = Vec::new();
    for (a, b) in matched.iter().enumerate() {
        if let Some(b) = *b {
            vertices.push(edge_vertex[&(a, b)]);
        }
    }
    let value = vertices.len() as u64;
    Ok(Solution::new(vertices, value))
}

/// Connected component id per vertex of an interval set (components of the
/// intersection graph).
fn interval_components(ivs: &[Interval]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..ivs.len()).collect();
    order.sort_unstable_by_key(|&v| (ivs[v].start(), ivs[v].end(), v));
    let mut comp = vec![0usize; ivs.len()];
    let mut current = 0usize;
    let mut reach: Option<u32> = None;
    for &v in &order {
        match reach {
            Some(r) if ivs[v].start() <= r => {
                reach = Some(r.max(ivs[v].end()));
            }
            Some(_) => {
                current += 1;
                reach = Some(ivs[v].end());
            }
            None => reach = Some(ivs[v].end()),
        }
        comp[v] = current;
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp::{decide, solve_dp_q_value};
    use crate::oracle::{brute_max_cis, brute_two_union};
    use crate::solution::check_two_union_independent;
    use rand::{Rng, SeedableRng};

    #[test]
    fn signature_deletes_contained_vertex() {
        // same containment in both graphs: the outer vertex dies
        let t = TwoUnionInstance::from_pairs(&[(1, 4), (2, 3)], &[(1, 4), (2, 3)], 0).unwrap();
        let red = signature_reduce(&t);
        assert_eq!(red.kept, vec![1]);
        assert_eq!(red.removed, vec![0]);
        assert_eq!(red.instance.n(), 1);
    }

    #[test]
    fn signature_keeps_incomparable_instance() {
        let t = TwoUnionInstance::from_pairs(&[(1, 1), (2, 2)], &[(2, 2), (1, 1)], 0).unwrap();
        let red = signature_reduce(&t);
        assert_eq!(red.kept, vec![0, 1]);
        assert!(red.removed.is_empty());
        assert_eq!(red.instance, t);
    }

    #[test]
    fn signature_dedup_keeps_heavier_duplicate() {
        let t = TwoUnionInstance::new_weighted(
            vec![Interval::new(1, 2), Interval::new(1, 2)],
            vec![Interval::new(3, 4), Interval::new(3, 4)],
            vec![3, 5],
            0,
        )
        .unwrap();
        let red = signature_reduce(&t);
        assert_eq!(red.kept, vec![1]);
        assert_eq!(red.instance.weight(0), 5);
        assert_eq!(
            brute_two_union(&red.instance).unwrap().value,
            brute_two_union(&t).unwrap().value
        );
    }

    #[test]
    fn color_pack_examples() {
        let (g, _) = ColoredIntervalGraph::from_raw(&[(1, 1), (2, 2), (3, 3)], &[&[1], &[1], &[1]]);
        let red = color_pack_reduce(&g, 2).unwrap();
        assert_eq!(red.k, 1);
        assert_eq!(red.graph.n(), 0);
        assert_eq!(red.fired.len(), 1);

        let (g, _) = ColoredIntervalGraph::from_raw(&[(1, 1), (2, 2)], &[&[1], &[1]]);
        let red = color_pack_reduce(&g, 2).unwrap();
        assert_eq!(red.k, 2);
        assert_eq!(red.graph.n(), 2);

        let red = color_pack_reduce(&ColoredIntervalGraph::empty(), 3).unwrap();
        assert_eq!(red.k, 3);
        assert!(red.graph.is_empty());
    }

    #[test]
    fn color_pack_requires_proper() {
        // containment across two clique positions survives compactification
        let (g, _) =
            ColoredIntervalGraph::from_raw(&[(1, 4), (2, 2), (3, 3)], &[&[1], &[2], &[3]]);
        assert!(!is_proper_rep(g.rep()));
        assert!(matches!(
            color_pack_reduce(&g, 2),
            Err(CoreError::RequiresProperRep { .. })
        ));
    }

    #[test]
    fn greedy_examples() {
        let (g, _) =
            ColoredIntervalGraph::from_raw(&[(1, 1), (1, 2), (3, 3)], &[&[1], &[2], &[1]]);
        let sol = greedy_maximal_cis(&g).unwrap();
        assert_eq!(sol.vertices, vec![0]);

        let (g, _) =
            ColoredIntervalGraph::from_raw(&[(1, 1), (2, 2), (3, 3)], &[&[1], &[2], &[3]]);
        assert_eq!(greedy_maximal_cis(&g).unwrap().len(), 3);

        assert!(greedy_maximal_cis(&ColoredIntervalGraph::empty())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn greedy_is_maximal() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(83);
        for _ in 0..100 {
            let n = rng.gen_range(0..20);
            let gamma = rng.gen_range(1..6u32);
            let len = rng.gen_range(0..3u32);
            let pairs: Vec<(u32, u32)> = (0..n)
                .map(|_| {
                    let s = rng.gen_range(1..=12u32);
                    (s, s + len)
                })
                .collect();
            let lists: Vec<Vec<u32>> = (0..n).map(|_| vec![rng.gen_range(0..gamma)]).collect();
            let refs: Vec<&[u32]> = lists.iter().map(|l| &l[..]).collect();
            let (g, _) = ColoredIntervalGraph::from_raw(&pairs, &refs);
            let sol = greedy_maximal_cis(&g).unwrap();
            assert!(check_colorful_independent(&g, &sol.vertices).is_ok());
            for v in 0..g.n() {
                if sol.vertices.contains(&v) {
                    continue;
                }
                let conflicts = sol.vertices.iter().any(|&u| {
                    g.interval(u).intersects(&g.interval(v))
                        || g.color_list(u)[0] == g.color_list(v)[0]
                });
                assert!(conflicts, "vertex {v} could extend the greedy set");
            }
        }
    }

    #[test]
    fn kernelize_examples() {
        // greedy reaches k immediately
        let (g, _) =
            ColoredIntervalGraph::from_raw(&[(1, 1), (2, 2)], &[&[1], &[2]]);
        match kernelize_proper(&g, 2).unwrap() {
            KernelOutcome::SolvedYes { certificate } => {
                assert_eq!(certificate.len(), 2);
            }
            _ => panic!("expected a certificate"),
        }
        // k = 1 on any nonempty graph
        match kernelize_proper(&g, 1).unwrap() {
            KernelOutcome::SolvedYes { certificate } => assert!(certificate.len() >= 1),
            _ => panic!("expected a certificate"),
        }
    }

    #[test]
    fn kernelize_certificate_survives_lifting() {
        // color 0 packs away (3 disjoint intervals >= 2k-1 for k = 2), the
        // rest still reaches the reduced target
        let (g, _) = ColoredIntervalGraph::from_raw(
            &[(1, 1), (3, 3), (5, 5), (2, 2)],
            &[&[9], &[9], &[9], &[4]],
        );
        match kernelize_proper(&g, 2).unwrap() {
            KernelOutcome::SolvedYes { certificate } => {
                assert_eq!(certificate.len(), 2);
                assert!(check_colorful_independent(&g, &certificate.vertices).is_ok());
            }
            _ => panic!("expected a certificate"),
        }
    }

    #[test]
    fn kernelize_preserves_answers_and_bound() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(97);
        for _ in 0..120 {
            let n = rng.gen_range(0..=13);
            let gamma = rng.gen_range(1..=5u32);
            let len = rng.gen_range(0..3u32);
            let pairs: Vec<(u32, u32)> = (0..n)
                .map(|_| {
                    let s = rng.gen_range(1..=9u32);
                    (s, s + len)
                })
                .collect();
            let lists: Vec<Vec<u32>> = (0..n).map(|_| vec![rng.gen_range(0..gamma)]).collect();
            let refs: Vec<&[u32]> = lists.iter().map(|l| &l[..]).collect();
            let (g, _) = ColoredIntervalGraph::from_raw(&pairs, &refs);
            if !is_proper_rep(g.rep()) {
                continue;
            }
            let k = rng.gen_range(1..=4u64);
            let yes = decide(&g, k).unwrap();
            match kernelize_proper(&g, k).unwrap() {
                KernelOutcome::SolvedYes { certificate } => {
                    assert!(yes, "certificate on a no-instance");
                    assert!(certificate.len() as u64 >= k);
                    assert!(check_colorful_independent(&g, &certificate.vertices).is_ok());
                }
                KernelOutcome::Reduced { graph, k: k2, .. } => {
                    assert_eq!(decide(&graph, k2).unwrap(), yes);
                    let omega = stats(&graph).omega as u64;
                    assert!(graph.n() as u64 <= 4 * k2 * k2 * omega.max(1));
                }
            }
        }
    }

    #[test]
    fn cluster_cluster_examples() {
        let t = TwoUnionInstance::from_pairs(
            &[(1, 1), (1, 1), (2, 2)],
            &[(1, 1), (2, 2), (2, 2)],
            0,
        )
        .unwrap();
        let sol = solve_cluster_cluster(&t).unwrap();
        assert_eq!(sol.value, 2);
        assert!(check_two_union_independent(&t, &sol.vertices).is_ok());

        let t = TwoUnionInstance::from_pairs(&[(1, 1)], &[(1, 1)], 0).unwrap();
        assert_eq!(solve_cluster_cluster(&t).unwrap().value, 1);

        let t = TwoUnionInstance::from_pairs(
            &[(1, 1), (1, 1), (1, 1)],
            &[(1, 1), (1, 1), (1, 1)],
            0,
        )
        .unwrap();
        assert_eq!(solve_cluster_cluster(&t).unwrap().value, 1);
    }

    #[test]
    fn cluster_cluster_rejects_bad_inputs() {
        let path = TwoUnionInstance::from_pairs(
            &[(1, 2), (2, 3), (3, 4)],
            &[(1, 1), (2, 2), (3, 3)],
            0,
        )
        .unwrap();
        assert!(matches!(
            solve_cluster_cluster(&path),
            Err(CoreError::RequiresClusterGraphs { .. })
        ));
        let weighted = TwoUnionInstance::new_weighted(
            vec![Interval::new(1, 1)],
            vec![Interval::new(1, 1)],
            vec![2],
            0,
        )
        .unwrap();
        assert!(matches!(
            solve_cluster_cluster(&weighted),
            Err(CoreError::RequiresUnitWeights { .. })
        ));
    }

    #[test]
    fn cluster_cluster_matches_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(101);
        for _ in 0..150 {
            let n = rng.gen_range(0..=12);
            let p1: Vec<(u32, u32)> = (0..n)
                .map(|_| {
                    let p = rng.gen_range(1..=4u32);
                    (p, p)
                })
                .collect();
            let p2: Vec<(u32, u32)> = (0..n)
                .map(|_| {
                    let p = rng.gen_range(1..=4u32);
                    (p, p)
                })
                .collect();
            let t = TwoUnionInstance::from_pairs(&p1, &p2, 0).unwrap();
            let sol = solve_cluster_cluster(&t).unwrap();
            assert_eq!(sol.value, brute_two_union(&t).unwrap().value);
            assert!(check_two_union_independent(&t, &sol.vertices).is_ok());
        }
    }

    #[test]
    fn signature_reduce_preserves_optimum() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(103);
        for round in 0..150 {
            let n = rng.gen_range(0..=12);
            let c = rng.gen_range(1..=5u32);
            let draw = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<Interval> {
                (0..n)
                    .map(|_| {
                        let a = rng.gen_range(1..=c);
                        let b = rng.gen_range(1..=c);
                        Interval::new(a.min(b), a.max(b))
                    })
                    .collect()
            };
            let ivs1 = draw(&mut rng);
            let ivs2 = draw(&mut rng);
            let weights: Vec<u64> = (0..n)
                .map(|_| if round % 2 == 0 { 1 } else { rng.gen_range(1..=9) })
                .collect();
            let t = TwoUnionInstance::new_weighted(ivs1, ivs2, weights, 0)
                .unwrap()
                .compactified();
            let red = signature_reduce(&t);
            assert_eq!(
                brute_two_union(&red.instance).unwrap().value,
                brute_two_union(&t).unwrap().value
            );
            // size bounds in terms of the larger compactness
            let c_all = t.c_all() as u64;
            if round % 2 == 0 {
                assert!(red.instance.n() as u64 <= c_all.pow(3));
            } else {
                assert!(red.instance.n() as u64 <= c_all.pow(4));
            }
        }
    }

    #[test]
    fn translation_and_reduction_commute_on_values() {
        // reduced instances solve to the same value through the colored view
        let t = TwoUnionInstance::from_pairs(
            &[(1, 2), (2, 3), (1, 1), (3, 3)],
            &[(1, 1), (1, 2), (2, 2), (1, 1)],
            0,
        )
        .unwrap()
        .compactified();
        let red = signature_reduce(&t);
        let (g, _) = crate::colored::two_union_to_cisl(&red.instance, crate::colored::ColorSide::Auto);
        assert_eq!(
            solve_dp_q_value(&g).unwrap(),
            brute_max_cis(&g).unwrap().value
        );
    }
}
