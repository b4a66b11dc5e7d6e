//! Facet orderings of the n-cube and their shellings.
//!
//! Facet `+i` is `x_i = 1`, facet `-i` is `x_i = 0`. Under polarity these are
//! the crosspolytope vertices of the same name, so an ordering of the facets
//! is a labeling of the polar crosspolytope, and it is a shelling exactly
//! when the induced pair sequence is good.

use std::fmt;
use std::str::FromStr;

use crate::census::{factorial, unrank_permutation};
use crate::error::{Error, Result};
use crate::pairseq::{is_good, sequence_labels, PairSequence};
use crate::par::{fold_range, Exec};
use crate::polytope::{parse_signed_index, CrossVertex, Sign};
use crate::realize::{realize, Realization};

pub const SHELLING_CENSUS_MAX_N: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacetOrdering {
    facets: Vec<CrossVertex>,
}

impl FacetOrdering {
    pub fn new(facets: Vec<CrossVertex>) -> Result<Self> {
        let len = facets.len();
        if len == 0 || len % 2 == 1 {
            return Err(Error::InvalidOrdering(format!("{len} facets")));
        }
        let mut seen = vec![false; len];
        for f in &facets {
            if f.pair > len / 2 || std::mem::replace(&mut seen[f.index()], true) {
                return Err(Error::InvalidOrdering(format!("facet {f} repeated or out of range")));
            }
        }
        Ok(FacetOrdering { facets })
    }

    pub fn n(&self) -> usize {
        self.facets.len() / 2
    }

    pub fn facets(&self) -> &[CrossVertex] {
        &self.facets
    }

    pub fn reversed(&self) -> Self {
        FacetOrdering {
            facets: self.facets.iter().rev().copied().collect(),
        }
    }

    /// 1-based position of each facet, indexed by crosspolytope vertex index.
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.facets.len()];
        for (j, f) in self.facets.iter().enumerate() {
            pos[f.index()] = j + 1;
        }
        pos
    }
}

impl fmt::Display for FacetOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, x) in self.facets.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for FacetOrdering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let facets = s
            .trim()
            .split(',')
            .map(|t| {
                let t = t.trim();
                parse_signed_index(t)
                    .map(|(sign, i)| CrossVertex::new(i, sign))
                    .ok_or_else(|| Error::InvalidOrdering(format!("bad facet name `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        FacetOrdering::new(facets)
    }
}

pub fn ordering_to_sequence(fo: &FacetOrdering) -> PairSequence {
    let pos = fo.positions();
    PairSequence::new((0..fo.n()).map(|i| (pos[2 * i], pos[2 * i + 1]))).expect("permutation")
}

pub fn is_shelling(fo: &FacetOrdering) -> bool {
    is_good(&ordering_to_sequence(fo)).good
}

/// Shelling test straight from the definition, for the 3-cube only.
///
/// Each facet is a square whose four edges are cut out by the four facets not
/// parallel to it, in cyclic order `+k, +l, -k, -l`. `F_j` meets the earlier
/// facets in the edges they share with it; that must be a nonempty proper arc
/// of the 4-cycle, or the whole cycle at the last step.
pub fn is_shelling_direct_3cube(fo: &FacetOrdering) -> Result<bool> {
    if fo.n() != 3 {
        return Err(Error::InvalidOrdering(format!(
            "direct check needs n = 3, got {}",
            fo.n()
        )));
    }
    for j in 1..6 {
        let f = fo.facets[j];
        let others: Vec<usize> = (1..=3).filter(|&i| i != f.pair).collect();
        let (k, l) = (others[0], others[1]);
        let cycle = [
            CrossVertex::new(k, Sign::Plus),
            CrossVertex::new(l, Sign::Plus),
            CrossVertex::new(k, Sign::Minus),
            CrossVertex::new(l, Sign::Minus),
        ];
        let earlier = &fo.facets[..j];
        let hit: Vec<bool> = cycle.iter().map(|c| earlier.contains(c)).collect();
        let size = hit.iter().filter(|&&h| h).count();
        let ok = match size {
            0 => false,
            1 | 3 => true,
            // two edges form a path unless they are opposite sides
            2 => !((hit[0] && hit[2]) || (hit[1] && hit[3])),
            _ => j == 5,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A realization of the polar crosspolytope whose first-coordinate order of
/// vertices is the facet order: the line-shelling certificate.
pub fn line_shelling_witness(fo: &FacetOrdering) -> Result<Realization> {
    let s = ordering_to_sequence(fo);
    let rz = realize(&s)?;
    // the realization holds label L at the point for sequence slot L; move
    // it to the facet sitting at position L
    let labels = sequence_labels(&s);
    let mut by_label = vec![None; labels.len() + 1];
    for (v, &lab) in labels.iter().enumerate() {
        by_label[lab] = Some(rz.points()[v].clone());
    }
    let points = fo
        .positions()
        .iter()
        .map(|&p| by_label[p].take().expect("each label once"))
        .collect();
    Realization::canonical(points)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShellingCensus {
    pub shellings: u64,
    pub orderings: u64,
}

/// Counts shellings among all `(2n)!` facet orderings.
pub fn shelling_census(n: usize, exec: Exec) -> Result<ShellingCensus> {
    if n == 0 || n > SHELLING_CENSUS_MAX_N {
        return Err(Error::TooLargeForCensus {
            d: n,
            cap: SHELLING_CENSUS_MAX_N,
        });
    }
    let total = factorial(2 * n as u64);
    let shellings = fold_range(
        exec,
        0..total,
        || 0u64,
        |acc, rank| acc + u64::from(is_shelling(&ordering_by_rank(n, rank))),
        |a, b| a + b,
    );
    Ok(ShellingCensus {
        shellings,
        orderings: total,
    })
}

/// Ordering number `rank` in lexicographic order of vertex indices
/// `+1 < -1 < +2 < ...`.
pub fn ordering_by_rank(n: usize, rank: u64) -> FacetOrdering {
    let mut perm = [0usize; 2 * SHELLING_CENSUS_MAX_N + 2];
    let perm = &mut perm[..2 * n];
    unrank_permutation(rank, 2 * n, perm);
    FacetOrdering {
        facets: perm.iter().map(|&x| CrossVertex::from_index(x - 1)).collect(),
    }
}
