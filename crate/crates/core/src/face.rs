//! Faces of cubes and crosspolytopes.

use std::fmt;

use crate::error::{Error, Result};
use crate::polytope::{CrossVertex, Polytope, Sign};

/// A face of the n-cube: some coordinates fixed, the rest free.
///
/// `fixed` and `values` are masks in vertex-index bit space (coordinate 1 is
/// the most significant of the `n` bits).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CubeFace {
    n: usize,
    fixed: u32,
    values: u32,
}

impl CubeFace {
    /// `fixed` lists `(coordinate, value)` with 1-based coordinates.
    pub fn new(n: usize, fixed: &[(usize, bool)]) -> Result<Self> {
        let mut face = CubeFace {
            n,
            fixed: 0,
            values: 0,
        };
        for &(coord, value) in fixed {
            if coord == 0 || coord > n {
                return Err(Error::FaceMismatch);
            }
            let bit = 1u32 << (n - coord);
            face.fixed |= bit;
            if value {
                face.values |= bit;
            }
        }
        Ok(face)
    }

    pub fn whole(n: usize) -> Self {
        CubeFace {
            n,
            fixed: 0,
            values: 0,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n - self.fixed.count_ones() as usize
    }

    /// `(coordinate, value)` pairs, ascending by coordinate.
    pub fn fixed_coords(&self) -> Vec<(usize, bool)> {
        (1..=self.n)
            .filter_map(|c| {
                let bit = 1u32 << (self.n - c);
                (self.fixed & bit != 0).then_some((c, self.values & bit != 0))
            })
            .collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        (v as u32) & self.fixed == self.values
    }

    /// Vertex indices in ascending order.
    pub fn vertices(&self) -> Vec<usize> {
        let full = if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        };
        let free = full & !self.fixed;
        let mut out = Vec::with_capacity(1 << self.dim());
        let mut sub = 0u32;
        loop {
            out.push((self.values | sub) as usize);
            sub = sub.wrapping_sub(free) & free;
            if sub == 0 {
                break;
            }
        }
        out
    }

    pub fn pattern(&self) -> String {
        (1..=self.n)
            .map(|c| {
                let bit = 1u32 << (self.n - c);
                match (self.fixed & bit != 0, self.values & bit != 0) {
                    (false, _) => '*',
                    (true, false) => '0',
                    (true, true) => '1',
                }
            })
            .collect()
    }
}

/// A face of the d-crosspolytope: a transversal vertex set, or the whole
/// polytope.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrossFace {
    d: usize,
    // sorted by vertex index; empty iff whole
    members: Vec<CrossVertex>,
}

impl CrossFace {
    pub fn new(d: usize, mut members: Vec<CrossVertex>) -> Result<Self> {
        members.sort();
        let transversal = members.windows(2).all(|w| w[0].pair != w[1].pair);
        if members.is_empty() || !transversal || members.iter().any(|v| v.pair > d) {
            return Err(Error::FaceMismatch);
        }
        Ok(CrossFace { d, members })
    }

    pub fn whole(d: usize) -> Self {
        CrossFace {
            d,
            members: Vec::new(),
        }
    }

    pub fn is_whole(&self) -> bool {
        self.members.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        if self.is_whole() {
            self.d
        } else {
            self.members.len() - 1
        }
    }

    pub fn members(&self) -> &[CrossVertex] {
        &self.members
    }

    pub fn vertices(&self) -> Vec<usize> {
        if self.is_whole() {
            (0..2 * self.d).collect()
        } else {
            self.members.iter().map(|v| v.index()).collect()
        }
    }
}

impl fmt::Display for CrossFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_whole() {
            return f.write_str("whole");
        }
        f.write_str("{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Face {
    Cube(CubeFace),
    Cross(CrossFace),
}

impl Face {
    pub fn whole(p: Polytope) -> Self {
        match p {
            Polytope::Cube(n) => Face::Cube(CubeFace::whole(n)),
            Polytope::Cross(d) => Face::Cross(CrossFace::whole(d)),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Face::Cube(f) => f.dim(),
            Face::Cross(f) => f.dim(),
        }
    }

    pub fn belongs_to(&self, p: Polytope) -> bool {
        match (self, p) {
            (Face::Cube(f), Polytope::Cube(n)) => f.ambient_dim() == n,
            (Face::Cross(f), Polytope::Cross(d)) => f.ambient_dim() == d,
            _ => false,
        }
    }

    pub fn is_whole(&self) -> bool {
        match self {
            Face::Cube(f) => f.fixed == 0,
            Face::Cross(f) => f.is_whole(),
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Face::Cube(f) => f.vertices(),
            Face::Cross(f) => f.vertices(),
        }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Face::Cube(c) => f.write_str(&c.pattern()),
            Face::Cross(c) => write!(f, "{c}"),
        }
    }
}

/// All faces of dimension `k`, in lexicographic order (cube faces by their
/// `01*` pattern, crosspolytope faces by their sorted vertex list).
pub fn enumerate_faces(p: Polytope, k: usize) -> Result<Vec<Face>> {
    let dim = p.dim();
    if k > dim {
        return Err(Error::FaceDimensionOutOfRange { k, max: dim });
    }
    match p {
        Polytope::Cube(n) => {
            let mut faces = Vec::new();
            let full = (1u32 << n) - 1;
            for fixed in 0..=full {
                if fixed.count_ones() as usize != n - k {
                    continue;
                }
                // every values ⊆ fixed
                let mut values = 0u32;
                loop {
                    faces.push(CubeFace { n, fixed, values });
                    values = values.wrapping_sub(fixed) & fixed;
                    if values == 0 {
                        break;
                    }
                }
            }
            let mut keyed: Vec<(String, CubeFace)> =
                faces.into_iter().map(|f| (f.pattern(), f)).collect();
            keyed.sort_by(|a, b| a.0.cmp(&b.0));
            Ok(keyed.into_iter().map(|(_, f)| Face::Cube(f)).collect())
        }
        Polytope::Cross(d) => {
            if k == d {
                return Ok(vec![Face::Cross(CrossFace::whole(d))]);
            }
            let mut faces = Vec::new();
            let mut chosen = Vec::with_capacity(k + 1);
            choose_pairs(d, k + 1, 1, &mut chosen, &mut |pairs| {
                for signs in 0u32..(1 << pairs.len()) {
                    let members = pairs
                        .iter()
                        .enumerate()
                        .map(|(j, &pair)| {
                            let sign = if signs >> (pairs.len() - 1 - j) & 1 == 0 {
                                Sign::Plus
                            } else {
                                Sign::Minus
                            };
                            CrossVertex::new(pair, sign)
                        })
                        .collect();
                    faces.push(CrossFace { d, members });
                }
            });
            faces.sort_by(|a, b| a.members.cmp(&b.members));
            Ok(faces.into_iter().map(Face::Cross).collect())
        }
    }
}

fn choose_pairs(
    d: usize,
    size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == size {
        emit(chosen);
        return;
    }
    for pair in start..=d {
        chosen.push(pair);
        choose_pairs(d, size, pair + 1, chosen, emit);
        chosen.pop();
    }
}

/// Faces of dimension `min_dim..=dim`, by increasing dimension and then
/// lexicographically.
pub fn faces_from(p: Polytope, min_dim: usize) -> Vec<Face> {
    (min_dim..=p.dim())
        .flat_map(|k| enumerate_faces(p, k).expect("k within range"))
        .collect()
}
