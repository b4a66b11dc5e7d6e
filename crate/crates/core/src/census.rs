//! Exhaustive census of crosspolytope orientations reachable from vertex
//! labelings, classified as Holt-Klee and as LP.

use std::collections::{BTreeMap, HashMap};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::holt_klee::{is_holt_klee_with, HkOptions};
use crate::orientation::Orientation;
use crate::pairseq::{is_good, PairSequence};
use crate::par::{fold_range, map_slice, Exec};
use crate::polytope::Polytope;

pub const CENSUS_MAX_D: usize = 5;

/// Orientations and labelings lying over one pair sequence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Fiber {
    pub orientations: u64,
    pub labelings: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub d: usize,
    pub labelings: u64,
    pub acyclic: u64,
    pub holt_klee: u64,
    pub lp: u64,
    /// LP-orientations failing Holt-Klee; zero whenever LP is contained in HK.
    pub lp_not_hk: u64,
    pub fibers: BTreeMap<PairSequence, Fiber>,
}

impl CensusReport {
    /// Share of Holt-Klee orientations that are not LP, as an exact fraction.
    pub fn hk_not_lp_fraction(&self) -> Ratio<u64> {
        let hk_not_lp = self.holt_klee + self.lp_not_hk - self.lp;
        Ratio::new(hk_not_lp, self.holt_klee.max(1))
    }

    /// `acyclic=.. holt_klee=.. lp=.. fraction=p/q`.
    pub fn summary_line(&self) -> String {
        let f = self.hk_not_lp_fraction();
        format!(
            "acyclic={} holt_klee={} lp={} fraction={}/{}",
            self.acyclic,
            self.holt_klee,
            self.lp,
            f.numer(),
            f.denom()
        )
    }
}

pub(crate) fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Writes permutation number `rank` of `0..len` (lexicographic) into `out`.
pub(crate) fn unrank_permutation(mut rank: u64, len: usize, out: &mut [usize]) {
    let mut pool: Vec<usize> = (0..len).collect();
    for (i, slot) in out.iter_mut().enumerate().take(len) {
        let f = factorial((len - 1 - i) as u64);
        let j = (rank / f) as usize;
        rank %= f;
        *slot = pool.remove(j) + 1;
    }
}

/// Compact code for the pair sequence of a labeling (4 bits per label).
fn sequence_code(labels: &[usize]) -> u64 {
    let mut pairs: Vec<(usize, usize)> = labels
        .chunks(2)
        .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
        .collect();
    pairs.sort_unstable();
    pairs
        .iter()
        .fold(0u64, |acc, &(a, b)| (acc << 8) | ((a as u64) << 4) | b as u64)
}

fn decode_sequence(code: u64, d: usize) -> PairSequence {
    let pairs = (0..d).rev().map(|i| {
        let byte = (code >> (8 * i)) & 0xff;
        ((byte >> 4) as usize, (byte & 0xf) as usize)
    });
    PairSequence::new(pairs).expect("code from a labeling")
}

#[derive(Default)]
struct Tally {
    // orientation key -> sequence code
    orientations: HashMap<u64, u64>,
    labelings: HashMap<u64, u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        let (mut big, small) = if self.orientations.len() >= other.orientations.len() {
            (std::mem::take(&mut self), other)
        } else {
            (other, self)
        };
        big.orientations.extend(small.orientations);
        for (code, n) in small.labelings {
            *big.labelings.entry(code).or_default() += n;
        }
        big
    }
}

/// Enumerates all `(2d)!` labelings of the `d`-crosspolytope, deduplicates
/// the induced orientations, and classifies each distinct one.
pub fn census(d: usize, hk: HkOptions, exec: Exec) -> Result<CensusReport> {
    if d == 0 || d > CENSUS_MAX_D {
        return Err(Error::TooLargeForCensus {
            d,
            cap: CENSUS_MAX_D,
        });
    }
    let p = Polytope::cross(d)?;
    let skel = p.skeleton();
    let edges = skel.edges().to_vec();
    let nv = 2 * d;
    let total = factorial(nv as u64);

    let tally = fold_range(
        exec,
        0..total,
        Tally::default,
        |mut t, rank| {
            let mut labels = [0usize; 2 * CENSUS_MAX_D];
            unrank_permutation(rank, nv, &mut labels);
            let labels = &labels[..nv];
            let key = edges
                .iter()
                .enumerate()
                .fold(0u64, |k, (e, &(u, v))| k | (u64::from(labels[u] < labels[v]) << e));
            let code = sequence_code(labels);
            t.orientations.entry(key).or_insert(code);
            *t.labelings.entry(code).or_default() += 1;
            t
        },
        Tally::merge,
    );

    let mut keys: Vec<(u64, u64)> = tally.orientations.into_iter().collect();
    keys.sort_unstable();
    let classified = map_slice(exec, &keys, |&(key, code)| {
        let o = Orientation::from_key_u64(skel.clone(), key);
        let seq = decode_sequence(code, d);
        let lp = is_good(&seq).good;
        let hk = is_holt_klee_with(&o, HkOptions { exec: Exec::Sequential, ..hk }).passed;
        (code, hk, lp)
    });

    let mut report = CensusReport {
        d,
        labelings: total,
        acyclic: keys.len() as u64,
        holt_klee: 0,
        lp: 0,
        lp_not_hk: 0,
        fibers: BTreeMap::new(),
    };
    let mut fiber_by_code: BTreeMap<u64, Fiber> = BTreeMap::new();
    for (code, hk, lp) in classified {
        report.holt_klee += u64::from(hk);
        report.lp += u64::from(lp);
        report.lp_not_hk += u64::from(lp && !hk);
        fiber_by_code.entry(code).or_default().orientations += 1;
    }
    for (code, n) in tally.labelings {
        fiber_by_code.entry(code).or_default().labelings = n;
    }
    report.fibers = fiber_by_code
        .into_iter()
        .map(|(code, f)| (decode_sequence(code, d), f))
        .collect();
    Ok(report)
}

/// `(acyclic, holt_klee, lp)` counts.
pub fn count_lp_orientations_bruteforce(d: usize) -> Result<(u64, u64, u64)> {
    let r = census(d, HkOptions::default(), Exec::Parallel)?;
    Ok((r.acyclic, r.holt_klee, r.lp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unranking_is_lexicographic() {
        let mut out = [0; 3];
        let all: Vec<[usize; 3]> = (0..6)
            .map(|r| {
                unrank_permutation(r, 3, &mut out);
                out
            })
            .collect();
        assert_eq!(all[0], [1, 2, 3]);
        assert_eq!(all[1], [1, 3, 2]);
        assert_eq!(all[5], [3, 2, 1]);
    }

    #[test]
    fn sequence_codes_round_trip() {
        let labels = [4, 1, 2, 5, 6, 3];
        let code = sequence_code(&labels);
        assert_eq!(decode_sequence(code, 3).to_string(), "(1,4)(2,5)(3,6)");
    }

    #[test]
    fn tiny_censuses() {
        assert_eq!(count_lp_orientations_bruteforce(1).unwrap(), (1, 1, 1));
        assert_eq!(count_lp_orientations_bruteforce(2).unwrap(), (14, 12, 12));
        assert!(census(6, HkOptions::default(), Exec::Parallel).is_err());
        assert!(census(0, HkOptions::default(), Exec::Parallel).is_err());
    }

    #[test]
    fn square_fibers() {
        let r = census(2, HkOptions::default(), Exec::Sequential).unwrap();
        let get = |s: &str| r.fibers[&s.parse::<PairSequence>().unwrap()];
        assert_eq!(get("(13)(24)").orientations, 8);
        assert_eq!(get("(14)(23)").orientations, 4);
        assert_eq!(get("(12)(34)").orientations, 2);
        for f in r.fibers.values() {
            assert_eq!(f.labelings, 8);
        }
        assert_eq!(r.summary_line(), "acyclic=14 holt_klee=12 lp=12 fraction=0/1");
    }
}
