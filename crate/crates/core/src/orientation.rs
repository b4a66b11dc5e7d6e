//! Orientations of polytope graphs, induced face digraphs and topological
//! labelings.

use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{parse_err, Error, Result};
use crate::face::Face;
use crate::polytope::{Polytope, Skeleton};

/// One direction bit per canonical undirected edge. Bit set means the edge
/// `(u, v)`, `u < v`, is directed `u -> v`.
#[derive(Clone)]
pub struct Orientation {
    skel: Arc<Skeleton>,
    bits: Vec<u64>,
}

impl PartialEq for Orientation {
    fn eq(&self, other: &Self) -> bool {
        self.polytope() == other.polytope() && self.bits == other.bits
    }
}

impl Eq for Orientation {}

impl Hash for Orientation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.polytope().hash(state);
        self.bits.hash(state);
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Orientation")
            .field("polytope", &self.polytope())
            .field("bits", &self.bits)
            .finish()
    }
}

impl Orientation {
    /// `forward(u, v)` is asked once per edge with `u < v` and returns true
    /// when the edge points `u -> v`.
    pub fn from_fn(p: Polytope, forward: impl FnMut(usize, usize) -> bool) -> Self {
        Self::from_fn_on(p.skeleton(), forward)
    }

    pub fn from_fn_on(skel: Arc<Skeleton>, mut forward: impl FnMut(usize, usize) -> bool) -> Self {
        let m = skel.edges().len();
        let mut bits = vec![0u64; m.div_ceil(64)];
        for (e, &(u, v)) in skel.edges().iter().enumerate() {
            if forward(u, v) {
                bits[e / 64] |= 1 << (e % 64);
            }
        }
        Orientation { skel, bits }
    }

    /// Every edge directed toward the endpoint with the larger label.
    pub fn from_labels(p: Polytope, labels: &[usize]) -> Self {
        assert_eq!(labels.len(), p.num_vertices());
        Self::from_fn(p, |u, v| labels[u] < labels[v])
    }

    /// Build from explicit directed edges; every polytope edge must appear
    /// exactly once.
    pub fn from_arcs(p: Polytope, arcs: &[(usize, usize)]) -> Result<Self> {
        let skel = p.skeleton();
        let m = skel.edges().len();
        let mut bits = vec![0u64; m.div_ceil(64)];
        let mut seen = vec![false; m];
        for &(a, b) in arcs {
            let e = skel.edge_index(a, b).ok_or_else(|| {
                Error::InvalidOrientation(format!(
                    "{} -> {} is not an edge of the {}",
                    p.vertex_name(a),
                    p.vertex_name(b),
                    p
                ))
            })?;
            if std::mem::replace(&mut seen[e], true) {
                return Err(Error::InvalidOrientation(format!(
                    "edge {} {} listed twice",
                    p.vertex_name(a),
                    p.vertex_name(b)
                )));
            }
            if a < b {
                bits[e / 64] |= 1 << (e % 64);
            }
        }
        if let Some(e) = seen.iter().position(|s| !s) {
            let (u, v) = skel.edges()[e];
            return Err(Error::InvalidOrientation(format!(
                "edge {} {} missing",
                p.vertex_name(u),
                p.vertex_name(v)
            )));
        }
        Ok(Orientation { skel, bits })
    }

    pub fn polytope(&self) -> Polytope {
        self.skel.polytope()
    }

    pub fn skeleton(&self) -> &Arc<Skeleton> {
        &self.skel
    }

    pub fn num_edges(&self) -> usize {
        self.skel.edges().len()
    }

    fn forward(&self, e: usize) -> bool {
        self.bits[e / 64] >> (e % 64) & 1 == 1
    }

    /// Directed edge `e` as `(tail, head)`.
    pub fn arc(&self, e: usize) -> (usize, usize) {
        let (u, v) = self.skel.edges()[e];
        if self.forward(e) {
            (u, v)
        } else {
            (v, u)
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.num_edges()).map(|e| self.arc(e))
    }

    /// `Some(true)` if `u -> v` is an arc, `Some(false)` if `v -> u` is, `None`
    /// if `uv` is not an edge.
    pub fn points(&self, u: usize, v: usize) -> Option<bool> {
        let e = self.skel.edge_index(u, v)?;
        Some(self.forward(e) == (u < v))
    }

    pub fn with_edge_reversed(&self, e: usize) -> Self {
        let mut bits = self.bits.clone();
        bits[e / 64] ^= 1 << (e % 64);
        Orientation {
            skel: Arc::clone(&self.skel),
            bits,
        }
    }

    /// The direction bits packed into one word; `None` above 64 edges.
    pub fn key_u64(&self) -> Option<u64> {
        match self.bits.as_slice() {
            [] => Some(0),
            [w] => Some(*w),
            _ => None,
        }
    }

    pub(crate) fn from_key_u64(skel: Arc<Skeleton>, key: u64) -> Self {
        let m = skel.edges().len();
        debug_assert!(m <= 64);
        let bits = if m == 0 { Vec::new() } else { vec![key] };
        Orientation { skel, bits }
    }

    pub fn digraph(&self) -> Digraph {
        let n = self.skel.num_vertices();
        let mut g = Digraph::empty((0..n).collect());
        for (a, b) in self.arcs() {
            g.add_arc(a, b);
        }
        g.sort_lists();
        g
    }

    /// Induced digraph on the vertices of `face`.
    pub fn face_subdigraph(&self, face: &Face) -> Result<Digraph> {
        if !face.belongs_to(self.polytope()) {
            return Err(Error::FaceMismatch);
        }
        if face.is_whole() {
            return Ok(self.digraph());
        }
        let verts = face.vertices();
        let mut g = Digraph::empty(verts.clone());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                match self.points(u, v) {
                    Some(true) => g.add_arc(i, j),
                    Some(false) => g.add_arc(j, i),
                    None => {}
                }
            }
        }
        g.sort_lists();
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let p = self.polytope();
        let mut out = format!("{p}\n");
        for (a, b) in self.arcs() {
            out.push_str(&p.vertex_name(a));
            out.push_str(" -> ");
            out.push_str(&p.vertex_name(b));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
    .trim()
}

pub(crate) fn parse_header(line: &str, lineno: usize) -> Result<Polytope> {
    let mut it = line.split_whitespace();
    let kind = it.next().unwrap_or("");
    let dim: usize = it
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse_err(lineno, "expected `cube N` or `crosspolytope D`"))?;
    if it.next().is_some() {
        return Err(parse_err(lineno, "trailing tokens in header"));
    }
    let p = match kind {
        "cube" => Polytope::cube(dim),
        "crosspolytope" => Polytope::cross(dim),
        _ => return Err(parse_err(lineno, format!("unknown polytope kind `{kind}`"))),
    };
    p.map_err(|e| parse_err(lineno, e.to_string()))
}

/// Significant lines with their 1-based line numbers.
pub(crate) fn content_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty())
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = content_lines(s);
        let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
        let p = parse_header(header, hl)?;
        let mut arcs = Vec::new();
        for (ln, line) in lines {
            let (a, b) = line
                .split_once("->")
                .ok_or_else(|| parse_err(ln, "expected `U -> V`"))?;
            let (a, b) = (a.trim(), b.trim());
            let u = p
                .parse_vertex(a)
                .ok_or_else(|| parse_err(ln, format!("bad vertex `{a}`")))?;
            let v = p
                .parse_vertex(b)
                .ok_or_else(|| parse_err(ln, format!("bad vertex `{b}`")))?;
            if !p.is_edge(u, v) {
                return Err(parse_err(ln, format!("`{a} -> {b}` is not an edge")));
            }
            arcs.push((u, v, ln));
        }
        let plain: Vec<(usize, usize)> = arcs.iter().map(|&(u, v, _)| (u, v)).collect();
        Orientation::from_arcs(p, &plain).map_err(|e| {
            let msg = match e {
                Error::InvalidOrientation(m) => m,
                other => other.to_string(),
            };
            parse_err(arcs.last().map_or(hl, |a| a.2), msg)
        })
    }
}

/// A small digraph on local indices `0..n`, remembering the polytope vertex
/// each local index stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    vertices: Vec<usize>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn empty(vertices: Vec<usize>) -> Self {
        let n = vertices.len();
        Digraph {
            vertices,
            succ: vec![Vec::new(); n],
            pred: vec![Vec::new(); n],
        }
    }

    /// Build from local arcs; `vertices[i]` names local vertex `i`.
    pub fn from_arcs(vertices: Vec<usize>, arcs: &[(usize, usize)]) -> Self {
        let mut g = Digraph::empty(vertices);
        for &(a, b) in arcs {
            g.add_arc(a, b);
        }
        g.sort_lists();
        g
    }

    fn add_arc(&mut self, a: usize, b: usize) {
        self.succ[a].push(b);
        self.pred[b].push(a);
    }

    fn sort_lists(&mut self) {
        self.succ.iter_mut().for_each(|l| l.sort_unstable());
        self.pred.iter_mut().for_each(|l| l.sort_unstable());
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Polytope vertex behind local index `i`.
    pub fn vertex(&self, i: usize) -> usize {
        self.vertices[i]
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn succ(&self, i: usize) -> &[usize] {
        &self.succ[i]
    }

    pub fn pred(&self, i: usize) -> &[usize] {
        &self.pred[i]
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.succ[a].binary_search(&b).is_ok()
    }

    pub fn num_arcs(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(a, l)| l.iter().map(move |&b| (a, b)))
    }

    /// Local sources (no incoming arc), ascending.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.pred[i].is_empty()).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.succ[i].is_empty()).collect()
    }

    /// Labels `1..=n` by Kahn's algorithm, always taking the smallest
    /// available local index.
    pub fn topological_order(&self) -> TopoOrder {
        let mut indeg: Vec<usize> = self.pred.iter().map(Vec::len).collect();
        let mut ready: BinaryHeap<Reverse<usize>> = (0..self.len())
            .filter(|&i| indeg[i] == 0)
            .map(Reverse)
            .collect();
        let mut labels = vec![0; self.len()];
        let mut next = 1;
        while let Some(Reverse(u)) = ready.pop() {
            labels[u] = next;
            next += 1;
            for &w in &self.succ[u] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(Reverse(w));
                }
            }
        }
        if next == self.len() + 1 {
            TopoOrder::Labels(labels)
        } else {
            TopoOrder::Cycle(self.cycle_among(|i| labels[i] == 0))
        }
    }

    /// Topological labels with a caller-chosen tie break: `pick` receives the
    /// currently available local vertices (ascending) and returns a position
    /// in that slice. `None` if the digraph has a cycle.
    pub fn topological_order_by(&self, mut pick: impl FnMut(&[usize]) -> usize) -> Option<Vec<usize>> {
        let mut indeg: Vec<usize> = self.pred.iter().map(Vec::len).collect();
        let mut ready: Vec<usize> = (0..self.len()).filter(|&i| indeg[i] == 0).collect();
        let mut labels = vec![0; self.len()];
        let mut next = 1;
        while !ready.is_empty() {
            let at = pick(&ready);
            let u = ready.remove(at);
            labels[u] = next;
            next += 1;
            for &w in &self.succ[u] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    let pos = ready.partition_point(|&x| x < w);
                    ready.insert(pos, w);
                }
            }
        }
        (next == self.len() + 1).then_some(labels)
    }

    /// A directed cycle inside the vertex set `stuck`, where every member has
    /// a predecessor in `stuck` (what Kahn's algorithm leaves behind).
    fn cycle_among(&self, stuck: impl Fn(usize) -> bool) -> Vec<usize> {
        let start = (0..self.len()).find(|&i| stuck(i)).expect("stuck vertex");
        let mut pos = vec![usize::MAX; self.len()];
        let mut walk = Vec::new();
        let mut cur = start;
        while pos[cur] == usize::MAX {
            pos[cur] = walk.len();
            walk.push(cur);
            cur = *self.pred[cur]
                .iter()
                .find(|&&p| stuck(p))
                .expect("stuck vertex has a stuck predecessor");
        }
        // walk follows arcs backwards; reverse to get forward order
        let mut cycle: Vec<usize> = walk[pos[cur]..].to_vec();
        cycle.reverse();
        cycle
    }

    /// True if `cycle` is a directed cycle of local vertices.
    pub fn is_cycle(&self, cycle: &[usize]) -> bool {
        if cycle.len() < 2 {
            return false;
        }
        let mut seen = vec![false; self.len()];
        for &v in cycle {
            if v >= self.len() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        (0..cycle.len()).all(|i| self.has_arc(cycle[i], cycle[(i + 1) % cycle.len()]))
    }

    /// Vertices reachable from `s` avoiding `blocked` (and optionally
    /// skipping the direct arc `s -> t`).
    pub(crate) fn reaches(&self, s: usize, t: usize, blocked: &[bool], skip_direct: bool) -> bool {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for &w in &self.succ[u] {
                if skip_direct && u == s && w == t {
                    continue;
                }
                if w == t {
                    return true;
                }
                if !seen[w] && !blocked[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }
}

/// Result of topological sorting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopoOrder {
    /// `labels[v]` in `1..=n`; every arc goes from a smaller to a larger label.
    Labels(Vec<usize>),
    /// Local vertices of a directed cycle, in arc order.
    Cycle(Vec<usize>),
}

/// Topological labeling of the whole orientation, indexed by polytope vertex.
pub fn topological_order(o: &Orientation) -> TopoOrder {
    // whole-polytope digraph uses identity local indices
    o.digraph().topological_order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face::CubeFace;

    fn standard_cube(n: usize) -> Orientation {
        // u < v differ in one bit, so v has the extra 1
        Orientation::from_fn(Polytope::cube(n).unwrap(), |_, _| true)
    }

    #[test]
    fn standard_square_labels() {
        let o = standard_cube(2);
        match topological_order(&o) {
            TopoOrder::Labels(l) => {
                assert_eq!(l[0b00], 1);
                assert_eq!(l[0b11], 4);
            }
            TopoOrder::Cycle(_) => panic!("standard cube is acyclic"),
        }
    }

    #[test]
    fn cyclic_square_gives_cycle() {
        let p = Polytope::cube(2).unwrap();
        let o = Orientation::from_arcs(p, &[(0b00, 0b01), (0b01, 0b11), (0b11, 0b10), (0b10, 0b00)]).unwrap();
        match topological_order(&o) {
            TopoOrder::Cycle(c) => {
                assert_eq!(c.len(), 4);
                assert!(o.digraph().is_cycle(&c));
            }
            TopoOrder::Labels(_) => panic!("expected cycle"),
        }
    }

    #[test]
    fn triangle_cycle_in_octahedron() {
        let p = Polytope::cross(3).unwrap();
        // +1 -> +2 -> +3 -> +1, everything else by index
        let o = Orientation::from_fn(p, |u, v| !(u == 0 && v == 4));
        match topological_order(&o) {
            TopoOrder::Cycle(c) => {
                assert!(o.digraph().is_cycle(&c));
            }
            TopoOrder::Labels(_) => panic!("expected cycle"),
        }
    }

    #[test]
    fn diamond_face() {
        let o = standard_cube(3);
        let f = Face::Cube(CubeFace::new(3, &[(3, false)]).unwrap());
        let g = o.face_subdigraph(&f).unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g.num_arcs(), 4);
        let src: Vec<String> = g.sources().iter().map(|&i| o.polytope().vertex_name(g.vertex(i))).collect();
        let snk: Vec<String> = g.sinks().iter().map(|&i| o.polytope().vertex_name(g.vertex(i))).collect();
        assert_eq!(src, ["000"]);
        assert_eq!(snk, ["110"]);
    }

    #[test]
    fn whole_face_is_identity_and_edge_face_is_one_arc() {
        let o = standard_cube(3);
        let whole = o.face_subdigraph(&Face::whole(o.polytope())).unwrap();
        assert_eq!(whole, o.digraph());
        let edge = Face::Cube(CubeFace::new(3, &[(1, true), (2, false)]).unwrap());
        assert_eq!(o.face_subdigraph(&edge).unwrap().num_arcs(), 1);
        let other = Face::whole(Polytope::cube(2).unwrap());
        assert_eq!(o.face_subdigraph(&other), Err(Error::FaceMismatch));
    }

    #[test]
    fn text_round_trip_and_errors() {
        let o = standard_cube(3);
        let back: Orientation = o.to_text().parse().unwrap();
        assert_eq!(back, o);

        let with_comments = "# a square\ncube 2\n00 -> 01 # first\n00 -> 10\n\n01 -> 11\n10 -> 11\n";
        assert_eq!(with_comments.parse::<Orientation>().unwrap(), standard_cube(2));

        let missing = "cube 2\n00 -> 01\n00 -> 10\n01 -> 11\n";
        assert!(missing.parse::<Orientation>().is_err());
        let dup = "cube 2\n00 -> 01\n01 -> 00\n00 -> 10\n01 -> 11\n10 -> 11\n";
        assert!(dup.parse::<Orientation>().is_err());
        let non_edge = "crosspolytope 2\n+1 -> -1\n";
        assert!(non_edge.parse::<Orientation>().is_err());
        assert!("hypercube 3\n".parse::<Orientation>().is_err());
        let x1: Orientation = "crosspolytope 1\n".parse().unwrap();
        assert_eq!(x1.num_edges(), 0);
    }

    #[test]
    fn tie_break_by_choice() {
        let o = standard_cube(2);
        let g = o.digraph();
        // always take the last available vertex
        let labels = g.topological_order_by(|r| r.len() - 1).unwrap();
        assert_eq!(labels, vec![1, 3, 2, 4]);
    }
}
