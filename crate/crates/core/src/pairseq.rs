//! Pair encoding of acyclic crosspolytope orientations.
//!
//! Label the `2d` vertices along a topological order; each antipodal pair
//! then receives two labels, and the resulting partition of `{1..2d}` into
//! pairs (listed by ascending smaller element) does not depend on which
//! topological order was used. An acyclic orientation is an LP-orientation
//! exactly when no proper prefix of its pair sequence is an initial block
//! `{1..2k}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::orientation::{Orientation, TopoOrder};
use crate::polytope::Polytope;
use crate::util::odd_double_factorial;

/// A partition of `{1..2d}` into `d` pairs, each stored smaller-first, listed
/// by ascending smaller element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairSequence {
    pairs: Vec<(usize, usize)>,
}

impl PairSequence {
    /// Validates the partition and puts it in canonical order.
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let d = pairs.len();
        if d == 0 {
            return Err(Error::MalformedSequence("empty sequence".into()));
        }
        let mut seen = vec![false; 2 * d + 1];
        for &(a, b) in &pairs {
            for x in [a, b] {
                if x == 0 || x > 2 * d {
                    return Err(Error::MalformedSequence(format!("label {x} outside 1..={}", 2 * d)));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::MalformedSequence(format!("label {x} repeated")));
                }
            }
        }
        pairs.sort_unstable();
        Ok(PairSequence { pairs })
    }

    /// Pair sequence of a labeling of the crosspolytope vertices, where
    /// `labels[v]` is the label of vertex index `v` (`+i` is `2(i-1)`).
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if !labels.len().is_multiple_of(2) {
            return Err(Error::MalformedSequence("odd number of labels".into()));
        }
        Self::new(labels.chunks(2).map(|c| (c[0], c[1])))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The label-complement `i -> 2d + 1 - i`.
    pub fn complement(&self) -> Self {
        let top = 2 * self.len() + 1;
        Self::new(self.pairs.iter().map(|&(a, b)| (top - b, top - a))).expect("still a partition")
    }

    /// Compact form `(14)(25)(36)`, when every label is a
    /// single digit.
    pub fn compact(&self) -> Option<String> {
        if 2 * self.len() > 9 {
            return None;
        }
        Some(self.pairs.iter().map(|(a, b)| format!("({a}{b})")).collect())
    }
}

impl fmt::Display for PairSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.pairs {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

impl FromStr for PairSequence {
    type Err = Error;

    /// Accepts `(a,b)(c,d)...` and, with single-digit labels, `(ab)(cd)...`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |m: &str| Error::MalformedSequence(format!("{m} in `{}`", s.trim()));
        let mut rest = compact.as_str();
        let mut pairs = Vec::new();
        while !rest.is_empty() {
            let body_end = rest.find(')').ok_or_else(|| bad("unclosed `(`"))?;
            let body = rest
                .strip_prefix('(')
                .map(|r| &r[..body_end - 1])
                .ok_or_else(|| bad("expected `(`"))?;
            let pair = match body.split_once(',') {
                Some((a, b)) => (
                    a.parse().map_err(|_| bad("bad label"))?,
                    b.parse().map_err(|_| bad("bad label"))?,
                ),
                None => {
                    let digits: Vec<u32> = body.chars().filter_map(|c| c.to_digit(10)).collect();
                    if digits.len() != 2 || body.len() != 2 {
                        return Err(bad("compact pairs need two single digits"));
                    }
                    (digits[0] as usize, digits[1] as usize)
                }
            };
            pairs.push(pair);
            rest = &rest[body_end + 1..];
        }
        PairSequence::new(pairs)
    }
}

fn require_cross(o: &Orientation) -> Result<usize> {
    match o.polytope() {
        Polytope::Cross(d) => Ok(d),
        Polytope::Cube(_) => Err(Error::WrongPolytope {
            expected: "crosspolytope",
        }),
    }
}

/// Pair sequence of an acyclic crosspolytope orientation.
pub fn encode(o: &Orientation) -> Result<PairSequence> {
    require_cross(o)?;
    match o.digraph().topological_order() {
        TopoOrder::Labels(labels) => PairSequence::from_labels(&labels),
        TopoOrder::Cycle(c) => Err(Error::Cyclic(c)),
    }
}

/// Vertex labels realizing `s`: pair `i` of the polytope takes pair `i` of the
/// sequence, `+i` the smaller label.
pub fn sequence_labels(s: &PairSequence) -> Vec<usize> {
    s.pairs.iter().flat_map(|&(a, b)| [a, b]).collect()
}

pub fn sequence_to_orientation(s: &PairSequence) -> Orientation {
    let p = Polytope::Cross(s.len());
    Orientation::from_labels(p, &sequence_labels(s))
}

/// Removes pair `index` (0-based) and renumbers the remaining labels onto
/// `1..=2d-2` preserving their order.
pub fn eliminate(s: &PairSequence, index: usize) -> Result<PairSequence> {
    let d = s.len();
    if d == 1 {
        return Err(Error::EliminateSingleton);
    }
    if index >= d {
        return Err(Error::PairIndexOutOfRange { index, len: d });
    }
    let (l, m) = s.pairs[index];
    let shift = |x: usize| x - usize::from(x > l) - usize::from(x > m);
    PairSequence::new(
        s.pairs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != index)
            .map(|(_, &(a, b))| (shift(a), shift(b))),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoodnessVerdict {
    pub good: bool,
    /// Least `k` in `1..d` whose first `k` pairs are exactly `{1..2k}`.
    pub break_k: Option<usize>,
}

/// The first `k` pairs hold `2k` distinct labels, so they are `{1..2k}` iff
/// their maximum is `2k`.
pub fn is_good(s: &PairSequence) -> GoodnessVerdict {
    let d = s.len();
    let mut running_max = 0;
    for (k, &(_, b)) in s.pairs.iter().enumerate().take(d - 1) {
        running_max = running_max.max(b);
        if running_max == 2 * (k + 1) {
            return GoodnessVerdict {
                good: false,
                break_k: Some(k + 1),
            };
        }
    }
    GoodnessVerdict {
        good: true,
        break_k: None,
    }
}

/// Smallest nonempty proper set of polytope pairs (1-based indices, by size
/// then lexicographically) that is initial: every edge leaving it points out.
/// Works directly on the orientation without labels.
pub fn initial_pair_set(o: &Orientation) -> Result<Option<Vec<usize>>> {
    let d = require_cross(o)?;
    let mut subsets: Vec<u32> = (1..(1u32 << d) - 1).collect();
    subsets.sort_by_key(|&m| (m.count_ones(), std::cmp::Reverse(m.reverse_bits())));
    for mask in subsets {
        let inside = |v: usize| mask >> (v / 2) & 1 == 1;
        let initial = o.arcs().all(|(a, b)| !(inside(b) && !inside(a)));
        if initial {
            return Ok(Some((0..d).filter(|&i| mask >> i & 1 == 1).map(|i| i + 1).collect()));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpCertificate {
    /// The orientation is an LP-orientation; its pair sequence.
    Good(PairSequence),
    Cycle(Vec<usize>),
    /// Polytope pairs (1-based) whose vertices carry labels `1..=2k`.
    InitialSet { pairs: Vec<usize>, break_k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpVerdict {
    pub lp: bool,
    pub certificate: LpCertificate,
}

pub fn is_lp_orientation(o: &Orientation) -> Result<LpVerdict> {
    require_cross(o)?;
    let labels = match o.digraph().topological_order() {
        TopoOrder::Labels(l) => l,
        TopoOrder::Cycle(c) => {
            return Ok(LpVerdict {
                lp: false,
                certificate: LpCertificate::Cycle(c),
            })
        }
    };
    let s = PairSequence::from_labels(&labels)?;
    let verdict = is_good(&s);
    Ok(match verdict.break_k {
        None => LpVerdict {
            lp: true,
            certificate: LpCertificate::Good(s),
        },
        Some(k) => {
            let pairs = (0..labels.len() / 2)
                .filter(|&i| labels[2 * i] <= 2 * k)
                .map(|i| i + 1)
                .collect();
            LpVerdict {
                lp: false,
                certificate: LpCertificate::InitialSet { pairs, break_k: k },
            }
        }
    })
}

/// Number of good sequences of length `d`, by first break point:
/// `a_d = M(d) - sum_{k=1}^{d-1} M(k) a_{d-k}` with `M(j) = (2j-1)!!`.
pub fn count_good(d: usize) -> BigUint {
    good_counts(d).pop().expect("d >= 1")
}

/// `[a_1, ..., a_d]`.
pub fn good_counts(d: usize) -> Vec<BigUint> {
    assert!(d >= 1, "count_good needs d >= 1");
    let m: Vec<BigUint> = (0..=d as u64).map(odd_double_factorial).collect();
    // a[0] unused
    let mut a: Vec<BigUint> = vec![BigUint::default(); d + 1];
    for n in 1..=d {
        let bad: BigUint = (1..n).map(|k| &m[k] * &a[n - k]).sum();
        a[n] = &m[n] - bad;
    }
    a.split_off(1)
}

/// Every pair sequence of length `d` in lexicographic order.
pub fn all_sequences(d: usize) -> Vec<PairSequence> {
    fn rec(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<PairSequence>) {
        if free.is_empty() {
            out.push(PairSequence { pairs: cur.clone() });
            return;
        }
        let a = free.remove(0);
        for j in 0..free.len() {
            let b = free.remove(j);
            cur.push((a, b));
            rec(free, cur, out);
            cur.pop();
            free.insert(j, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    rec(&mut (1..=2 * d).collect(), &mut Vec::new(), &mut out);
    out
}

pub fn good_sequences(d: usize) -> Vec<PairSequence> {
    all_sequences(d).into_iter().filter(|s| is_good(s).good).collect()
}
