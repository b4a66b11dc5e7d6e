//! Internally vertex-disjoint s-t paths by unit-capacity max flow.
//!
//! Each local vertex `v` other than `s` and `t` is split into `v_in -> v_out`
//! with capacity 1; every arc `u -> v` becomes `u_out -> v_in` with capacity
//! 1, and the flow runs from `s_out` to `t_in` so no path passes through the
//! terminals. By Menger's theorem the flow value is the maximum number of
//! internally disjoint directed paths.

use std::collections::VecDeque;

use crate::orientation::Digraph;

/// Maximum path packing with a matching minimum separator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathPacking {
    pub count: usize,
    /// Local vertices of a minimum separator (never `s` or `t`).
    pub cut: Vec<usize>,
    /// Whether the direct arc `s -> t` is used (it cannot be cut by vertices).
    pub direct: bool,
}

struct Network {
    head: Vec<usize>,
    cap: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    // edge e and its residual twin e ^ 1
    fn add(&mut self, a: usize, b: usize, c: u32) -> usize {
        let e = self.head.len();
        self.head.push(b);
        self.cap.push(c);
        self.out[a].push(e);
        self.head.push(a);
        self.cap.push(0);
        self.out[b].push(e + 1);
        e
    }

    fn augment(&mut self, src: usize, dst: usize) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut queue = VecDeque::from([src]);
        let mut seen = vec![false; self.out.len()];
        seen[src] = true;
        while let Some(u) = queue.pop_front() {
            if u == dst {
                break;
            }
            for &e in &self.out[u] {
                let w = self.head[e];
                if self.cap[e] > 0 && !seen[w] {
                    seen[w] = true;
                    via[w] = e;
                    queue.push_back(w);
                }
            }
        }
        if !seen[dst] {
            return false;
        }
        let mut v = dst;
        while v != src {
            let e = via[v];
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            v = self.head[e ^ 1];
        }
        true
    }

    fn reachable(&self, src: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        let mut stack = vec![src];
        seen[src] = true;
        while let Some(u) = stack.pop() {
            for &e in &self.out[u] {
                let w = self.head[e];
                if self.cap[e] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }
}

/// Maximum number of `s -> t` paths in `g`, pairwise disjoint except at the
/// endpoints. The direct arc `s -> t`, when present, counts as one path.
pub fn max_disjoint_paths(g: &Digraph, s: usize, t: usize) -> PathPacking {
    assert!(s != t && s < g.len() && t < g.len());
    let n = g.len();
    let (vin, vout) = (|v: usize| 2 * v, |v: usize| 2 * v + 1);
    let mut net = Network::new(2 * n);
    let mut split = vec![usize::MAX; n];
    for (v, slot) in split.iter_mut().enumerate() {
        if v != s && v != t {
            *slot = net.add(vin(v), vout(v), 1);
        }
    }
    let mut arc_edges = Vec::new();
    for (a, b) in g.arcs() {
        arc_edges.push((net.add(vout(a), vin(b), 1), a, b));
    }
    let (src, dst) = (vout(s), vin(t));
    let mut count = 0;
    while net.augment(src, dst) {
        count += 1;
    }

    let reach = net.reachable(src);
    let mut cut = Vec::new();
    let mut direct = false;
    for v in 0..n {
        if split[v] != usize::MAX && reach[vin(v)] && !reach[vout(v)] {
            cut.push(v);
        }
    }
    for &(e, a, b) in &arc_edges {
        if reach[vout(a)] && !reach[vin(b)] && net.cap[e] == 0 {
            if b != t {
                cut.push(b);
            } else if a != s {
                cut.push(a);
            } else {
                direct = true;
            }
        }
    }
    cut.sort_unstable();
    cut.dedup();
    PathPacking { count, cut, direct }
}

/// Checks that `packing` is a genuine upper-bound witness: its size equals
/// the claimed count and removing the cut (and the direct arc) leaves no
/// `s -> t` path.
pub fn separator_is_valid(g: &Digraph, s: usize, t: usize, packing: &PathPacking) -> bool {
    if packing.cut.len() + usize::from(packing.direct) != packing.count {
        return false;
    }
    if packing.cut.iter().any(|&v| v == s || v == t || v >= g.len()) {
        return false;
    }
    if packing.direct != g.has_arc(s, t) {
        return false;
    }
    let mut blocked = vec![false; g.len()];
    for &v in &packing.cut {
        blocked[v] = true;
    }
    !g.reaches(s, t, &blocked, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_has_one_path() {
        let g = Digraph::from_arcs(vec![0, 1, 2], &[(0, 1), (1, 2)]);
        let p = max_disjoint_paths(&g, 0, 2);
        assert_eq!(p.count, 1);
        assert_eq!(p.cut, vec![1]);
        assert!(separator_is_valid(&g, 0, 2, &p));
    }

    #[test]
    fn diamond_has_two() {
        let g = Digraph::from_arcs(vec![0, 1, 2, 3], &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        let p = max_disjoint_paths(&g, 0, 3);
        assert_eq!(p.count, 2);
        assert!(separator_is_valid(&g, 0, 3, &p));
    }

    #[test]
    fn shared_vertex_limits_paths() {
        // two routes that both pass through 3
        let g = Digraph::from_arcs(
            vec![0, 1, 2, 3, 4],
            &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)],
        );
        let p = max_disjoint_paths(&g, 0, 4);
        assert_eq!(p.count, 1);
        assert_eq!(p.cut, vec![3]);
        assert!(separator_is_valid(&g, 0, 4, &p));
    }

    #[test]
    fn direct_arc_counts() {
        let g = Digraph::from_arcs(vec![0, 1, 2], &[(0, 2), (0, 1), (1, 2)]);
        let p = max_disjoint_paths(&g, 0, 2);
        assert_eq!(p.count, 2);
        assert!(p.direct);
        assert!(separator_is_valid(&g, 0, 2, &p));
    }

    #[test]
    fn paths_do_not_run_through_terminals() {
        // 1 -> 0 -> 2 would need to enter s again
        let g = Digraph::from_arcs(vec![0, 1, 2, 3], &[(0, 1), (1, 3), (3, 0), (0, 2), (2, 3)]);
        let p = max_disjoint_paths(&g, 0, 3);
        assert_eq!(p.count, 2);
        assert!(separator_is_valid(&g, 0, 3, &p));
    }
}
