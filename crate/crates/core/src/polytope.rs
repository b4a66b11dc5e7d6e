//! Combinatorial models of the n-cube and the d-crosspolytope.
//!
//! Vertices are dense indices in canonical order:
//! * cube: the index is the binary value of the vertex string, coordinate 1
//!   being the most significant bit (`011` is vertex 3);
//! * crosspolytope: `+i` is `2(i-1)` and `-i` is `2(i-1)+1`, so vertices sort
//!   by pair and then `+` before `-`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Upper limits on supported dimensions. Enumerations above these are
/// refused rather than attempted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionCaps {
    pub cube: usize,
    pub cross: usize,
}

impl Default for DimensionCaps {
    fn default() -> Self {
        DimensionCaps { cube: 16, cross: 12 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polytope {
    Cube(usize),
    Cross(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A vertex of the n-cube as a bit string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeVertex {
    n: usize,
    bits: u32,
}

impl CubeVertex {
    pub fn new(n: usize, bits: u32) -> Self {
        debug_assert!(n <= 32 && (n == 32 || bits >> n == 0));
        CubeVertex { n, bits }
    }

    pub fn dim(self) -> usize {
        self.n
    }

    /// Coordinate `i` (1-based).
    pub fn coord(self, i: usize) -> bool {
        (self.bits >> (self.n - i)) & 1 == 1
    }

    pub fn index(self) -> usize {
        self.bits as usize
    }

    pub fn ones(self) -> u32 {
        self.bits.count_ones()
    }
}

impl fmt::Display for CubeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            f.write_str(if self.coord(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A vertex of the d-crosspolytope: one end of the antipodal pair `pair`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossVertex {
    pub pair: usize,
    pub sign: Sign,
}

impl CrossVertex {
    pub fn new(pair: usize, sign: Sign) -> Self {
        assert!(pair >= 1, "pair indices start at 1");
        CrossVertex { pair, sign }
    }

    pub fn from_index(v: usize) -> Self {
        let sign = if v.is_multiple_of(2) { Sign::Plus } else { Sign::Minus };
        CrossVertex { pair: v / 2 + 1, sign }
    }

    pub fn index(self) -> usize {
        2 * (self.pair - 1) + usize::from(self.sign == Sign::Minus)
    }

    pub fn antipode(self) -> Self {
        let sign = match self.sign {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        };
        CrossVertex { pair: self.pair, sign }
    }
}

impl fmt::Display for CrossVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.sign.symbol(), self.pair)
    }
}

/// Parse `+i` / `-i` (1-based pair index).
pub(crate) fn parse_signed_index(s: &str) -> Option<(Sign, usize)> {
    let (sign, rest) = match s.as_bytes().first()? {
        b'+' => (Sign::Plus, &s[1..]),
        b'-' => (Sign::Minus, &s[1..]),
        _ => return None,
    };
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let i: usize = rest.parse().ok()?;
    (i >= 1).then_some((sign, i))
}

impl Polytope {
    pub fn cube(n: usize) -> Result<Self> {
        Self::cube_with_caps(n, DimensionCaps::default())
    }

    pub fn cross(d: usize) -> Result<Self> {
        Self::cross_with_caps(d, DimensionCaps::default())
    }

    pub fn cube_with_caps(n: usize, caps: DimensionCaps) -> Result<Self> {
        // vertex indices are u32 bit patterns
        let cap = caps.cube.min(31);
        if n == 0 || n > cap {
            return Err(Error::DimensionOutOfRange {
                kind: "cube",
                dim: n,
                cap,
            });
        }
        Ok(Polytope::Cube(n))
    }

    pub fn cross_with_caps(d: usize, caps: DimensionCaps) -> Result<Self> {
        if d == 0 || d > caps.cross {
            return Err(Error::DimensionOutOfRange {
                kind: "crosspolytope",
                dim: d,
                cap: caps.cross,
            });
        }
        Ok(Polytope::Cross(d))
    }

    pub fn dim(self) -> usize {
        match self {
            Polytope::Cube(n) | Polytope::Cross(n) => n,
        }
    }

    pub fn kind_name(self) -> &'static str {
        match self {
            Polytope::Cube(_) => "cube",
            Polytope::Cross(_) => "crosspolytope",
        }
    }

    pub fn num_vertices(self) -> usize {
        match self {
            Polytope::Cube(n) => 1 << n,
            Polytope::Cross(d) => 2 * d,
        }
    }

    pub fn num_edges(self) -> usize {
        match self {
            Polytope::Cube(n) => n << (n - 1),
            Polytope::Cross(d) => 2 * d * (d - 1),
        }
    }

    pub fn is_edge(self, u: usize, v: usize) -> bool {
        let nv = self.num_vertices();
        if u >= nv || v >= nv || u == v {
            return false;
        }
        match self {
            Polytope::Cube(_) => (u ^ v).count_ones() == 1,
            Polytope::Cross(_) => u / 2 != v / 2,
        }
    }

    pub fn vertex_name(self, v: usize) -> String {
        match self {
            Polytope::Cube(n) => CubeVertex::new(n, v as u32).to_string(),
            Polytope::Cross(_) => CrossVertex::from_index(v).to_string(),
        }
    }

    pub fn parse_vertex(self, s: &str) -> Option<usize> {
        match self {
            Polytope::Cube(n) => {
                if s.len() != n || !s.bytes().all(|b| b == b'0' || b == b'1') {
                    return None;
                }
                u32::from_str_radix(s, 2).ok().map(|b| b as usize)
            }
            Polytope::Cross(d) => {
                let (sign, i) = parse_signed_index(s)?;
                (i <= d).then(|| CrossVertex::new(i, sign).index())
            }
        }
    }

    /// All undirected edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(self) -> Vec<(usize, usize)> {
        let nv = self.num_vertices();
        let mut out = Vec::with_capacity(self.num_edges());
        match self {
            Polytope::Cube(n) => {
                for u in 0..nv {
                    // neighbours above u, ascending
                    for b in 0..n {
                        if u & (1 << b) == 0 {
                            out.push((u, u | (1 << b)));
                        }
                    }
                }
            }
            Polytope::Cross(_) => {
                for u in 0..nv {
                    for v in u + 1..nv {
                        if u / 2 != v / 2 {
                            out.push((u, v));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn skeleton(self) -> Arc<Skeleton> {
        Arc::new(Skeleton::new(self))
    }
}

impl fmt::Display for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind_name(), self.dim())
    }
}

/// Undirected edge graph with edge indices, shared by orientations.
#[derive(Debug)]
pub struct Skeleton {
    polytope: Polytope,
    edges: Vec<(usize, usize)>,
    // (neighbour, edge index), sorted by neighbour
    adj: Vec<Vec<(usize, usize)>>,
}

impl Skeleton {
    pub fn new(polytope: Polytope) -> Self {
        let edges = polytope.edges();
        let mut adj = vec![Vec::new(); polytope.num_vertices()];
        for (e, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Skeleton {
            polytope,
            edges,
            adj,
        }
    }

    pub fn polytope(&self) -> Polytope {
        self.polytope
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, u: usize) -> &[(usize, usize)] {
        &self.adj[u]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let list = self.adj.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }
}

pub fn build_cube_edges(n: usize) -> Result<Vec<(CubeVertex, CubeVertex)>> {
    let p = Polytope::cube(n)?;
    Ok(p.edges()
        .into_iter()
        .map(|(u, v)| (CubeVertex::new(n, u as u32), CubeVertex::new(n, v as u32)))
        .collect())
}

pub fn build_cross_edges(d: usize) -> Result<Vec<(CrossVertex, CrossVertex)>> {
    let p = Polytope::cross(d)?;
    Ok(p.edges()
        .into_iter()
        .map(|(u, v)| (CrossVertex::from_index(u), CrossVertex::from_index(v)))
        .collect())
}
