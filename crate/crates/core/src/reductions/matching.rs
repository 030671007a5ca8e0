//! Hopcroft-Karp maximum bipartite matching, O(E * sqrt(V)).

const NONE: usize = usize::MAX;

/// Maximum matching of the bipartite graph given as adjacency lists of the
/// left side; returns the matched right vertex per left vertex.
pub fn hopcroft_karp(adj: &[Vec<usize>], right_count: usize) -> Vec<Option<usize>> {
    let left_count = adj.len();
    let mut match_left = vec![NONE; left_count];
    let mut match_right = vec![NONE; right_count];
    let mut dist = vec![0usize; left_count];
    let mut queue = std::collections::VecDeque::new();

    loop {
        // BFS layers from free left vertices
        queue.clear();
        for u in 0..left_count {
            if match_left[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = NONE;
            }
        }
        let mut reachable_free_right = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match match_right[v] {
                    NONE => reachable_free_right = true,
                    w if dist[w] == NONE => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        if !reachable_free_right {
            break;
        }
        // DFS augmentation along the layer structure
        for u in 0..left_count {
            if match_left[u] == NONE {
                augment(u, adj, &mut match_left, &mut match_right, &mut dist);
            }
        }
    }
    match_left
        .into_iter()
        .map(|v| if v == NONE { None } else { Some(v) })
        .collect()
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    match_left: &mut [usize],
    match_right: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for &v in &adj[u] {
        let w = match_right[v];
        if w == NONE || (dist[w] == dist[u] + 1 && augment(w, adj, match_left, match_right, dist))
        {
            match_left[u] = v;
            match_right[v] = u;
            return true;
        }
    }
    dist[u] = NONE;
    false
}
