//! A doubly-exponential class of Holt-Klee orientations of the n-cube.
//!
//! Edges are grouped by the coordinate their endpoints differ in. Edges in
//! direction `i < n` point toward the endpoint with a 1 in place `i`. An edge
//! in direction `n` looks at the weight `w` of the shared `(n-1)`-bit prefix
//! and compares it with `r = floor(n/2)`: below `r` it points toward last
//! coordinate 1, above `r` toward last coordinate 0, and at exactly `r` it is
//! free. Any choice for the free edges gives a Holt-Klee orientation.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::holt_klee::{is_holt_klee_with, HkOptions};
use crate::orientation::Orientation;
use crate::par::{fold_range, Exec};
use crate::polytope::{DimensionCaps, Polytope};
use crate::util::binomial;

/// One bit per free edge, in [`free_edges`] order. A set bit orients the
/// edge toward last coordinate 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyAssignment {
    n: usize,
    free_bits: Vec<bool>,
}

impl FamilyAssignment {
    pub fn new(n: usize, free_bits: Vec<bool>) -> Result<Self> {
        Polytope::cube(n)?;
        let expected = free_edge_count(n);
        if free_bits.len() != expected {
            return Err(Error::FreeBitsLength {
                got: free_bits.len(),
                expected,
            });
        }
        Ok(FamilyAssignment { n, free_bits })
    }

    /// Assignment number `index`, reading bit `j` of `index` as the bit for
    /// free edge `j`.
    pub fn from_index(n: usize, index: u64) -> Result<Self> {
        let len = free_edge_count(n);
        let bits = (0..len).map(|j| j < 64 && (index >> j) & 1 == 1).collect();
        Self::new(n, bits)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn free_bits(&self) -> &[bool] {
        &self.free_bits
    }
}

pub fn middle_weight(n: usize) -> usize {
    n / 2
}

fn free_edge_count(n: usize) -> usize {
    let prefixes = 1usize << (n - 1);
    (0..prefixes)
        .filter(|p| p.count_ones() as usize == middle_weight(n))
        .count()
}

/// Free last-direction edges `(u, v)` with `v = u | 1`, ordered by the binary
/// value of their `(n-1)`-bit prefix.
pub fn free_edges(n: usize) -> Result<Vec<(usize, usize)>> {
    if n < 2 {
        return Err(Error::DimensionOutOfRange {
            kind: "cube family free edges (needs n >= 2)",
            dim: n,
            cap: DimensionCaps::default().cube,
        });
    }
    Polytope::cube(n)?;
    Ok(free_prefixes(n).into_iter().map(|p| (p << 1, (p << 1) | 1)).collect())
}

fn free_prefixes(n: usize) -> Vec<usize> {
    (0..1usize << (n - 1))
        .filter(|p| p.count_ones() as usize == middle_weight(n))
        .collect()
}

pub fn build_family_orientation(a: &FamilyAssignment) -> Orientation {
    let n = a.n;
    let r = middle_weight(n);
    let p = Polytope::Cube(n);
    let free = free_prefixes(n);
    Orientation::from_fn(p, |u, v| {
        // u < v differ in exactly one bit; v holds the 1
        let bit = u ^ v;
        if bit != 1 {
            return true;
        }
        let prefix = u >> 1;
        let w = prefix.count_ones() as usize;
        match w.cmp(&r) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => {
                let j = free.binary_search(&prefix).expect("free prefix");
                a.free_bits[j]
            }
        }
    })
}

/// `choose(n-1, floor(n/2))`: the family has `2^family_size_log2(n)` members.
pub fn family_size_log2(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(1u32);
    }
    binomial(n as u64 - 1, middle_weight(n) as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub passed: u64,
    pub total: u64,
}

/// Runs the Holt-Klee check over every assignment for dimension `n`.
pub fn sweep_family(n: usize, exec: Exec) -> Result<SweepReport> {
    Polytope::cube(n)?;
    let len = free_edge_count(n);
    if len > 40 {
        return Err(Error::DimensionOutOfRange {
            kind: "cube family sweep",
            dim: n,
            cap: 11,
        });
    }
    let total = 1u64 << len;
    let opts = HkOptions::sequential();
    let passed = fold_range(
        exec,
        0..total,
        || 0u64,
        |acc, idx| {
            let a = FamilyAssignment::from_index(n, idx).expect("valid length");
            acc + u64::from(is_holt_klee_with(&build_family_orientation(&a), opts).passed)
        },
        |x, y| x + y,
    );
    Ok(SweepReport { passed, total })
}
