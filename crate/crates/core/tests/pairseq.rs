use std::collections::{BTreeSet, HashSet};

use lporient::census::census;
use lporient::holt_klee::{is_holt_klee, HkOptions};
use lporient::pairseq::{
    all_sequences, count_good, eliminate, encode, good_counts, initial_pair_set, is_good, is_lp_orientation,
    sequence_to_orientation, LpCertificate, PairSequence,
};
use lporient::par::Exec;
use lporient::{BigUint, CrossVertex, Orientation, Polytope, Sign};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn seq(s: &str) -> PairSequence {
    s.parse().unwrap()
}

/// Straight from the definition: some proper prefix of pairs covers exactly
/// `{1..2k}`.
fn bad_by_definition(s: &PairSequence) -> bool {
    let d = s.len();
    (1..d).any(|k| {
        let covered: BTreeSet<usize> = s.pairs()[..k].iter().flat_map(|&(a, b)| [a, b]).collect();
        covered == (1..=2 * k).collect()
    })
}

fn matchings(d: usize) -> u128 {
    (1..=d as u128).map(|i| 2 * i - 1).product()
}

#[test]
fn good_counts_three_ways() {
    let mut fwd = [0u128; 7];
    let mut rev = [0u128; 7];
    for d in 1..=6 {
        fwd[d] = matchings(d) - (1..d).map(|k| matchings(k) * fwd[d - k]).sum::<u128>();
        rev[d] = matchings(d) - (1..d).map(|k| rev[k] * matchings(d - k)).sum::<u128>();
    }
    assert_eq!(&fwd[1..5], &[1, 2, 10, 74]);
    for d in 1..=6 {
        let all = all_sequences(d);
        assert_eq!(all.len() as u128, matchings(d));
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), all.len());
        let brute = all.iter().filter(|s| !bad_by_definition(s)).count() as u128;
        assert_eq!(brute, fwd[d], "d={d}");
        assert_eq!(fwd[d], rev[d]);
        assert_eq!(count_good(d), BigUint::from(brute));
        for s in &all {
            assert_eq!(is_good(s).good, !bad_by_definition(s), "{s}");
        }
    }
    assert_eq!(good_counts(6).len(), 6);
}

#[test]
fn break_point_is_least_bad_prefix() {
    for s in all_sequences(5) {
        let v = is_good(&s);
        if let Some(k) = v.break_k {
            let covered: BTreeSet<usize> = s.pairs()[..k].iter().flat_map(|&(a, b)| [a, b]).collect();
            assert_eq!(covered, (1..=2 * k).collect());
            for j in 1..k {
                assert!(s.pairs()[..j].iter().map(|p| p.1).max().unwrap() > 2 * j);
            }
        }
    }
}

#[test]
fn encode_ignores_tie_breaks() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in 1..=5 {
        let p = Polytope::Cross(d);
        for _ in 0..100 {
            let mut labels: Vec<usize> = (1..=2 * d).collect();
            labels.shuffle(&mut rng);
            let o = Orientation::from_labels(p, &labels);
            let s = encode(&o).unwrap();
            let g = o.digraph();
            for _ in 0..10 {
                let order = g.topological_order_by(|ready| rng.random_range(0..ready.len())).unwrap();
                assert_eq!(PairSequence::from_labels(&order).unwrap(), s);
            }
        }
    }
}

#[test]
fn encode_ignores_pair_renaming() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for d in 2..=5 {
        let p = Polytope::Cross(d);
        for _ in 0..50 {
            let mut labels: Vec<usize> = (1..=2 * d).collect();
            labels.shuffle(&mut rng);
            let mut perm: Vec<usize> = (0..d).collect();
            perm.shuffle(&mut rng);
            // vertex (i, sign) of the copy carries the label of (perm[i], sign)
            let renamed: Vec<usize> = (0..2 * d)
                .map(|v| {
                    let cv = CrossVertex::from_index(v);
                    labels[CrossVertex::new(perm[cv.pair - 1] + 1, cv.sign).index()]
                })
                .collect();
            let a = encode(&Orientation::from_labels(p, &labels)).unwrap();
            let b = encode(&Orientation::from_labels(p, &renamed)).unwrap();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn encode_inverts_sequence_to_orientation() {
    for d in 1..=5 {
        for s in all_sequences(d) {
            assert_eq!(encode(&sequence_to_orientation(&s)).unwrap(), s);
        }
    }
}

#[test]
fn named_sequences() {
    let oct = sequence_to_orientation(&seq("(14)(25)(36)"));
    assert_eq!(encode(&oct).unwrap(), seq("(14)(25)(36)"));
    assert_eq!(sequence_to_orientation(&seq("(12)")).num_edges(), 0);

    let sq = sequence_to_orientation(&seq("(13)(24)"));
    let whole = lporient::Face::whole(sq.polytope());
    let (src, snk) = lporient::holt_klee::face_source_sink(&sq, &whole).unwrap();
    assert_eq!(src, vec![CrossVertex::new(1, Sign::Plus).index()]);
    assert_eq!(snk, vec![CrossVertex::new(2, Sign::Minus).index()]);

    assert_eq!(eliminate(&seq("(14)(25)(36)"), 1).unwrap(), seq("(13)(24)"));
    assert_eq!(eliminate(&seq("(13)(24)"), 0).unwrap(), seq("(12)"));
    assert!(eliminate(&seq("(12)"), 0).is_err());
    assert!(eliminate(&seq("(13)(24)"), 2).is_err());
}

#[test]
fn eliminating_the_last_pair_keeps_goodness() {
    for d in 2..=6 {
        for s in all_sequences(d).iter().filter(|s| is_good(s).good) {
            assert!(is_good(&eliminate(s, d - 1).unwrap()).good, "{s}");
        }
    }
}

#[test]
fn goodness_is_complement_invariant() {
    for d in 1..=6 {
        for s in all_sequences(d) {
            let c = s.complement();
            assert_eq!(is_good(&s).good, is_good(&c).good, "{s}");
            assert_eq!(c.complement(), s);
        }
    }
}

/// Distinct orientations induced by all `(2d)!` labelings.
fn acyclic_orientations(d: usize) -> Vec<Orientation> {
    fn perms(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in 0..k {
            if !used[x] {
                used[x] = true;
                cur.push(x + 1);
                perms(k, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut all = Vec::new();
    perms(2 * d, &mut Vec::new(), &mut vec![false; 2 * d], &mut all);
    let p = Polytope::Cross(d);
    let set: HashSet<Orientation> = all.iter().map(|l| Orientation::from_labels(p, l)).collect();
    let mut v: Vec<Orientation> = set.into_iter().collect();
    v.sort_by_key(|o| o.key_u64());
    v
}

#[test]
fn lp_implies_hk_and_both_lp_formulations_agree() {
    for d in 1..=4 {
        let mut hk_not_lp = 0;
        for o in acyclic_orientations(d) {
            let lp = is_lp_orientation(&o).unwrap();
            let hk = is_holt_klee(&o).passed;
            if lp.lp {
                assert!(hk);
            } else {
                hk_not_lp += usize::from(hk);
                if let LpCertificate::InitialSet { pairs, break_k } = &lp.certificate {
                    assert_eq!(pairs.len(), *break_k);
                }
            }
            assert_eq!(initial_pair_set(&o).unwrap().is_none(), lp.lp);
            if d == 3 {
                assert_eq!(hk, lp.lp);
            }
        }
        assert_eq!(hk_not_lp > 0, d == 4, "d={d}");
    }
}

#[test]
fn counterexample_is_hk_but_not_lp() {
    let s = seq("(13)(24)(57)(68)");
    let o = sequence_to_orientation(&s);
    assert!(is_holt_klee(&o).passed);
    let lp = is_lp_orientation(&o).unwrap();
    assert!(!lp.lp);
    assert_eq!(lp.certificate, LpCertificate::InitialSet { pairs: vec![1, 2], break_k: 2 });
    assert_eq!(initial_pair_set(&o).unwrap(), Some(vec![1, 2]));
    assert_eq!(is_good(&s).break_k, Some(2));
}

#[test]
fn cyclic_orientations_are_not_lp() {
    let p = Polytope::Cross(2);
    // the 4-cycle +1 -> +2 -> -1 -> -2 -> +1
    let (a, b, c, d) = (0, 2, 1, 3);
    let o = Orientation::from_arcs(p, &[(a, b), (b, c), (c, d), (d, a)]).unwrap();
    let v = is_lp_orientation(&o).unwrap();
    assert!(!v.lp);
    assert!(matches!(v.certificate, LpCertificate::Cycle(_)));
    assert!(encode(&o).is_err());
}

#[test]
fn census_agrees_with_direct_classification() {
    for d in 2..=4 {
        let all = acyclic_orientations(d);
        let r = census(d, HkOptions::default(), Exec::Parallel).unwrap();
        assert_eq!(r.acyclic as usize, all.len());
        assert_eq!(r.lp as usize, all.iter().filter(|o| is_lp_orientation(o).unwrap().lp).count());
        assert_eq!(r.holt_klee as usize, all.iter().filter(|o| is_holt_klee(o).passed).count());
        assert_eq!(r.fibers.values().map(|f| f.orientations).sum::<u64>(), r.acyclic);
        let per_sequence = (1..=d as u64).product::<u64>() << d;
        assert!(r.fibers.values().all(|f| f.labelings == per_sequence));
        let seq_sum: u64 = r.fibers.iter().filter(|(s, _)| is_good(s).good).map(|(_, f)| f.orientations).sum();
        assert_eq!(seq_sum, r.lp);
    }
}

#[test]
fn census_is_independent_of_execution() {
    let hk = HkOptions::default();
    let a = census(4, hk, Exec::Sequential).unwrap();
    let b = census(4, hk, Exec::Parallel).unwrap();
    let c = census(4, HkOptions { simplex_fast_path: true, ..hk }, Exec::Parallel).unwrap();
    assert_eq!(a, b);
    assert_eq!(a, c);
}
