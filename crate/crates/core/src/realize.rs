//! Exact-rational realizations of good pair sequences as crosspolytopes with
//! the first coordinate as objective, and an independent verifier.
//!
//! The construction is inductive. Drop the last pair `(l, m)`, realize the
//! shorter sequence inside the hyperplane `x_d = 0`, choose first-coordinate
//! targets `l1 < m1` that slot the new vertices into ranks `l` and `m`, pick
//! `r1` strictly between them and strictly inside the old first-coordinate
//! range, find a relative-interior point `r` of the old polytope at height
//! `r1`, and put the new pair on the line through `r` with direction
//! `e_1 + e_d`. A segment through the relative interior of a
//! `(d-1)`-crosspolytope, with ends on both sides of its hyperplane, cones it
//! into a `d`-crosspolytope.

use std::cmp::Ordering;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{parse_err, Error, Result};
use crate::exact::{int, orientation_sign, Rational};
use crate::orientation::{content_lines, parse_header};
use crate::pairseq::{eliminate, is_good, PairSequence};
use crate::polytope::{parse_signed_index, CrossVertex, Polytope, Sign};

pub type RationalPoint = Vec<Rational>;

/// `2d` points in `R^d` with a pairing into `d` antipodal pairs. The
/// objective is the first coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    points: Vec<RationalPoint>,
    pairing: Vec<(usize, usize)>,
}

impl Realization {
    pub fn new(points: Vec<RationalPoint>, pairing: Vec<(usize, usize)>) -> Result<Self> {
        check_shape(&points, &pairing)?;
        Ok(Realization { points, pairing })
    }

    /// Points listed as `+1, -1, +2, -2, ...`.
    pub fn canonical(points: Vec<RationalPoint>) -> Result<Self> {
        let pairing = (0..points.len() / 2).map(|i| (2 * i, 2 * i + 1)).collect();
        Self::new(points, pairing)
    }

    pub fn dim(&self) -> usize {
        self.pairing.len()
    }

    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }

    pub fn pairing(&self) -> &[(usize, usize)] {
        &self.pairing
    }

    fn is_canonical(&self) -> bool {
        self.pairing
            .iter()
            .enumerate()
            .all(|(i, &p)| p == (2 * i, 2 * i + 1))
    }

    pub fn max_denominator_bits(&self) -> u64 {
        self.points
            .iter()
            .flatten()
            .map(|x| x.denom().bits())
            .max()
            .unwrap_or(0)
    }

    pub fn verify(&self) -> CrossVerification {
        verify_crosspolytope(&self.points, &self.pairing).expect("shape checked on construction")
    }

    /// Text form; requires the canonical pairing.
    pub fn to_text(&self) -> Result<String> {
        if !self.is_canonical() {
            return Err(Error::InvalidRealization(
                "text output needs pairs listed as +i, -i".into(),
            ));
        }
        let mut out = format!("{}\n", Polytope::Cross(self.dim()));
        for (v, p) in self.points.iter().enumerate() {
            let _ = write!(out, "{}:", CrossVertex::from_index(v));
            for x in p {
                let _ = write!(out, " {}", fmt_rational(x));
            }
            out.push('\n');
        }
        Ok(out)
    }
}

fn fmt_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    (!d.is_zero()).then(|| Rational::new(n, d))
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_text() {
            Ok(t) => f.write_str(&t),
            Err(_) => write!(f, "{:?}", self),
        }
    }
}

impl FromStr for Realization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = content_lines(s);
        let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
        let d = match parse_header(header, hl)? {
            Polytope::Cross(d) => d,
            Polytope::Cube(_) => return Err(parse_err(hl, "realizations are crosspolytopes")),
        };
        let mut points: Vec<Option<RationalPoint>> = vec![None; 2 * d];
        for (ln, line) in lines {
            let (name, coords) = line
                .split_once(':')
                .ok_or_else(|| parse_err(ln, "expected `+i: x1 ... xd`"))?;
            let (sign, i) = parse_signed_index(name.trim())
                .filter(|&(_, i)| i <= d)
                .ok_or_else(|| parse_err(ln, format!("bad vertex `{}`", name.trim())))?;
            let v = CrossVertex::new(i, sign).index();
            let p: Vec<Rational> = coords
                .split_whitespace()
                .map(|t| parse_rational(t).ok_or_else(|| parse_err(ln, format!("bad rational `{t}`"))))
                .collect::<Result<_>>()?;
            if p.len() != d {
                return Err(parse_err(ln, format!("expected {d} coordinates, got {}", p.len())));
            }
            if points[v].replace(p).is_some() {
                return Err(parse_err(ln, format!("vertex {} listed twice", name.trim())));
            }
        }
        let points = points
            .into_iter()
            .enumerate()
            .map(|(v, p)| p.ok_or_else(|| parse_err(hl, format!("vertex {} missing", CrossVertex::from_index(v)))))
            .collect::<Result<Vec<_>>>()?;
        Realization::canonical(points)
    }
}

fn check_shape(points: &[RationalPoint], pairing: &[(usize, usize)]) -> Result<()> {
    let d = pairing.len();
    if d == 0 || points.len() != 2 * d {
        return Err(Error::InvalidRealization(format!(
            "{} points for {} pairs",
            points.len(),
            d
        )));
    }
    if let Some(p) = points.iter().find(|p| p.len() != d) {
        return Err(Error::InvalidRealization(format!(
            "point of dimension {} in R^{d}",
            p.len()
        )));
    }
    let mut seen = vec![false; 2 * d];
    for &(a, b) in pairing {
        for x in [a, b] {
            if x >= 2 * d || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidRealization("pairing is not a perfect matching".into()));
            }
        }
    }
    Ok(())
}

/// One transversal checked by [`verify_crosspolytope`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetRow {
    /// Point indices, one per pair in pairing order.
    pub transversal: Vec<usize>,
    /// Side of the hyperplane every remaining point lies on.
    pub side: Ordering,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyFailure {
    /// Some remaining point lies on the transversal's affine span (or the
    /// transversal does not span a hyperplane).
    Degenerate { transversal: Vec<usize>, point: usize },
    /// Remaining points on both sides.
    Separates {
        transversal: Vec<usize>,
        above: usize,
        below: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossVerification {
    pub valid: bool,
    /// Rows checked so far; all `2^d` when valid.
    pub facets: Vec<FacetRow>,
    pub failure: Option<VerifyFailure>,
}

/// Checks that every one of the `2^d` transversals (one point per pair)
/// spans a hyperplane with all `d` other points strictly on one side.
pub fn verify_crosspolytope(
    points: &[RationalPoint],
    pairing: &[(usize, usize)],
) -> Result<CrossVerification> {
    check_shape(points, pairing)?;
    let d = pairing.len();
    let mut facets = Vec::with_capacity(1 << d);
    for mask in 0u64..(1 << d) {
        let transversal: Vec<usize> = pairing
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| if mask >> i & 1 == 0 { a } else { b })
            .collect();
        let base: Vec<&[Rational]> = transversal.iter().map(|&i| points[i].as_slice()).collect();
        let rest = pairing
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| if mask >> i & 1 == 0 { b } else { a });
        let mut above = None;
        let mut below = None;
        for q in rest {
            match orientation_sign(&base, &points[q]) {
                Ordering::Equal => {
                    return Ok(CrossVerification {
                        valid: false,
                        facets,
                        failure: Some(VerifyFailure::Degenerate { transversal, point: q }),
                    })
                }
                Ordering::Greater => above = above.or(Some(q)),
                Ordering::Less => below = below.or(Some(q)),
            }
        }
        match (above, below) {
            (Some(a), Some(b)) => {
                return Ok(CrossVerification {
                    valid: false,
                    facets,
                    failure: Some(VerifyFailure::Separates {
                        transversal,
                        above: a,
                        below: b,
                    }),
                })
            }
            (a, _) => facets.push(FacetRow {
                transversal,
                side: if a.is_some() { Ordering::Greater } else { Ordering::Less },
            }),
        }
    }
    Ok(CrossVerification {
        valid: true,
        facets,
        failure: None,
    })
}

/// Pair sequence read off by ranking points on the first coordinate.
pub fn induced_sequence(rz: &Realization) -> Result<PairSequence> {
    let mut order: Vec<usize> = (0..rz.points.len()).collect();
    order.sort_by(|&a, &b| rz.points[a][0].cmp(&rz.points[b][0]));
    for w in order.windows(2) {
        if rz.points[w[0]][0] == rz.points[w[1]][0] {
            return Err(Error::TiedObjective(w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    let mut label = vec![0; order.len()];
    for (rank, &v) in order.iter().enumerate() {
        label[v] = rank + 1;
    }
    PairSequence::new(rz.pairing.iter().map(|&(a, b)| (label[a], label[b])))
}

/// Cones a realization living in `x_d = 0` over the segment `yz`. The new
/// pair is appended as `(y, z)`.
pub fn extend_realization(rz: &Realization, y: &[Rational], z: &[Rational]) -> Result<Realization> {
    let k = rz.dim();
    let d = k + 1;
    if y.len() != d || z.len() != d {
        return Err(Error::InvalidExtension(format!(
            "new points must live in R^{d}"
        )));
    }
    let (yd, zd) = (&y[k], &z[k]);
    if yd.is_zero() || zd.is_zero() || yd.is_positive() == zd.is_positive() {
        return Err(Error::InvalidExtension(
            "new points must lie strictly on opposite sides of x_d = 0".into(),
        ));
    }
    // crossing point of yz with x_d = 0
    let t = yd / (yd - zd);
    let w: Vec<Rational> = (0..k).map(|i| &y[i] + &t * (&z[i] - &y[i])).collect();
    let old = rz.verify();
    if !old.valid {
        return Err(Error::InvalidExtension("base is not a crosspolytope".into()));
    }
    for row in &old.facets {
        let base: Vec<&[Rational]> = row.transversal.iter().map(|&i| rz.points[i].as_slice()).collect();
        if orientation_sign(&base, &w) != row.side {
            return Err(Error::InvalidExtension(
                "segment misses the relative interior of the base".into(),
            ));
        }
    }

    let mut points: Vec<RationalPoint> = rz
        .points
        .iter()
        .map(|p| {
            let mut q = p.clone();
            q.push(Rational::zero());
            q
        })
        .collect();
    points.push(y.to_vec());
    points.push(z.to_vec());
    let mut pairing = rz.pairing.clone();
    pairing.push((2 * k, 2 * k + 1));
    let out = Realization::new(points, pairing)?;
    if !out.verify().valid {
        return Err(Error::InvalidExtension("result failed verification".into()));
    }
    Ok(out)
}

/// Realizes a good sequence; pair `i` of the result carries pair `i` of the
/// sequence, with `+i` taking the smaller label, and the vertex labelled `L`
/// gets first coordinate exactly `L`.
pub fn realize(s: &PairSequence) -> Result<Realization> {
    if let Some(break_k) = is_good(s).break_k {
        return Err(Error::BadSequence { break_k });
    }
    let x1: Vec<Rational> = (1..=2 * s.len() as i64).map(int).collect();
    realize_good(s, &x1)
}

/// `x1[L - 1]` is the first coordinate given to the vertex labelled `L`.
fn realize_good(s: &PairSequence, x1: &[Rational]) -> Result<Realization> {
    let d = s.len();
    if d == 1 {
        return Realization::canonical(vec![vec![x1[0].clone()], vec![x1[1].clone()]]);
    }
    let (l, m) = s.pairs()[d - 1];
    let rest: Vec<Rational> = (1..=2 * d)
        .filter(|&x| x != l && x != m)
        .map(|x| x1[x - 1].clone())
        .collect();
    let old = realize_good(&eliminate(s, d - 1)?, &rest)?;
    let (l1, m1) = (&x1[l - 1], &x1[m - 1]);

    // l >= d >= 2 puts an old vertex below l1, and the last pair is never
    // (2d-1, 2d), so an old vertex lies above l1 too
    let min_old = &rest[0];
    let max_old = &rest[rest.len() - 1];
    let lo = l1.max(min_old);
    let hi = m1.min(max_old);
    debug_assert!(lo < hi, "empty window for r1");
    let r1 = (lo + hi) / int(2);

    // centroid, slid toward the extreme vertex on the side of r1
    let k = d - 1;
    let n_old = int(old.points().len() as i64);
    let centroid: Vec<Rational> = (0..k)
        .map(|i| old.points().iter().map(|p| &p[i]).sum::<Rational>() / &n_old)
        .collect();
    let r: Vec<Rational> = match r1.cmp(&centroid[0]) {
        Ordering::Equal => centroid,
        ord => {
            let extreme = if ord == Ordering::Less { min_old } else { max_old };
            let target = old
                .points()
                .iter()
                .find(|p| &p[0] == extreme)
                .expect("extreme vertex");
            let t = (&r1 - &centroid[0]) / (&target[0] - &centroid[0]);
            (0..k).map(|i| &centroid[i] + &t * (&target[i] - &centroid[i])).collect()
        }
    };

    // the line through r with direction e_1 + e_d
    let along = |x: &Rational| -> Vec<Rational> {
        let step = x - &r1;
        let mut p: Vec<Rational> = r.clone();
        p[0] += &step;
        p.push(step);
        p
    };
    extend_realization(&old, &along(l1), &along(m1))
}

/// The standard crosspolytope `±e_i`, listed `+e_1, -e_1, ...`.
pub fn standard_crosspolytope(d: usize) -> Realization {
    let points = (0..2 * d)
        .map(|v| {
            let cv = CrossVertex::from_index(v);
            (0..d)
                .map(|i| {
                    if i + 1 == cv.pair {
                        int(if cv.sign == Sign::Plus { 1 } else { -1 })
                    } else {
                        int(0)
                    }
                })
                .collect()
        })
        .collect();
    Realization::canonical(points).expect("well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> PairSequence {
        s.parse().unwrap()
    }

    #[test]
    fn base_case() {
        let rz = realize(&seq("(12)")).unwrap();
        assert_eq!(rz.points(), &[vec![int(1)], vec![int(2)]]);
        assert!(rz.verify().valid);
        assert_eq!(induced_sequence(&rz).unwrap(), seq("(12)"));
    }

    #[test]
    fn square() {
        let rz = realize(&seq("(13)(24)")).unwrap();
        assert!(rz.verify().valid);
        assert_eq!(induced_sequence(&rz).unwrap(), seq("(13)(24)"));
        let x1: Vec<Rational> = rz.points().iter().map(|p| p[0].clone()).collect();
        assert_eq!(x1, [int(1), int(3), int(2), int(4)]);
    }

    #[test]
    fn octahedron_round_trip() {
        let s = seq("(14)(25)(36)");
        let rz = realize(&s).unwrap();
        assert!(rz.verify().valid);
        assert_eq!(induced_sequence(&rz).unwrap(), s);
    }

    #[test]
    fn bad_sequences_refused() {
        assert_eq!(realize(&seq("(12)(34)")), Err(Error::BadSequence { break_k: 1 }));
        assert_eq!(realize(&seq("(13)(24)(57)(68)")), Err(Error::BadSequence { break_k: 2 }));
    }

    #[test]
    fn standard_crosspolytopes_verify() {
        for d in 1..=6 {
            let v = standard_crosspolytope(d).verify();
            assert!(v.valid, "d={d}");
            assert_eq!(v.facets.len(), 1 << d);
        }
    }

    #[test]
    fn square_with_adjacent_pairing_fails() {
        let pts = vec![
            vec![int(0), int(0)],
            vec![int(1), int(0)],
            vec![int(1), int(1)],
            vec![int(0), int(1)],
        ];
        let v = verify_crosspolytope(&pts, &[(0, 1), (2, 3)]).unwrap();
        assert!(!v.valid);
        assert!(matches!(v.failure, Some(VerifyFailure::Separates { .. })));
        // the diagonal pairing is the square itself
        assert!(verify_crosspolytope(&pts, &[(0, 2), (1, 3)]).unwrap().valid);
    }

    #[test]
    fn degenerate_is_reported() {
        let pts = vec![
            vec![int(0), int(0)],
            vec![int(2), int(0)],
            vec![int(1), int(0)],
            vec![int(1), int(1)],
        ];
        let v = verify_crosspolytope(&pts, &[(0, 1), (2, 3)]).unwrap();
        assert!(!v.valid);
        assert!(matches!(v.failure, Some(VerifyFailure::Degenerate { .. })));
        assert!(verify_crosspolytope(&pts, &[(0, 1)]).is_err());
    }

    #[test]
    fn extension_of_square_to_octahedron() {
        let sq = standard_crosspolytope(2);
        let oct = extend_realization(&sq, &[int(0), int(0), int(-1)], &[int(0), int(0), int(1)]).unwrap();
        assert!(oct.verify().valid);
        assert!(oct.points().iter().take(4).all(|p| p[2].is_zero()));
        let same_side = extend_realization(&sq, &[int(0), int(0), int(1)], &[int(0), int(0), int(2)]);
        assert!(matches!(same_side, Err(Error::InvalidExtension(_))));
        // crosses x_3 = 0 outside the square
        let outside = extend_realization(&sq, &[int(5), int(0), int(-1)], &[int(5), int(0), int(1)]);
        assert!(matches!(outside, Err(Error::InvalidExtension(_))));
    }

    #[test]
    fn ties_rejected() {
        let rz = standard_crosspolytope(2);
        // +2 and -2 both have x1 = 0
        assert!(matches!(induced_sequence(&rz), Err(Error::TiedObjective(2, 3))));
    }

    #[test]
    fn text_round_trip() {
        let rz = realize(&seq("(14)(25)(36)")).unwrap();
        let text = rz.to_text().unwrap();
        assert!(text.starts_with("crosspolytope 3\n+1: "));
        assert_eq!(text.parse::<Realization>().unwrap(), rz);
        assert!("crosspolytope 1\n+1: 1\n".parse::<Realization>().is_err());
        assert!("crosspolytope 1\n+1: 1\n-1: 1/0\n".parse::<Realization>().is_err());
        assert_eq!("crosspolytope 1\n-1: 4\n+1: 3/2 # comment\n".parse::<Realization>().unwrap().points()[0], vec![Rational::new(3.into(), 2.into())]);
    }
}
