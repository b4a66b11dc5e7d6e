use lporient::exact::{int, Rational};
use lporient::pairseq::{all_sequences, good_sequences, is_good};
use lporient::realize::{
    extend_realization, induced_sequence, realize, standard_crosspolytope, verify_crosspolytope, Realization,
};
use lporient::Error;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn every_good_sequence_up_to_five_is_realized() {
    for d in 1..=5 {
        let goods = good_sequences(d);
        for s in &goods {
            let rz = realize(s).unwrap();
            assert!(rz.verify().valid, "{s}");
            assert_eq!(induced_sequence(&rz).unwrap(), *s);
            // first coordinates are exactly the labels
            for (v, p) in rz.points().iter().enumerate() {
                let (a, b) = s.pairs()[v / 2];
                let label = if v % 2 == 0 { a } else { b };
                assert_eq!(p[0], int(label as i64));
            }
        }
    }
}

#[test]
fn bad_sequences_are_refused_with_their_break() {
    for d in 2..=4 {
        for s in all_sequences(d).iter().filter(|s| !is_good(s).good) {
            let k = is_good(s).break_k.unwrap();
            assert_eq!(realize(s), Err(Error::BadSequence { break_k: k }));
        }
    }
}

#[test]
fn realize_is_deterministic() {
    for s in good_sequences(4) {
        assert_eq!(realize(&s).unwrap(), realize(&s).unwrap());
    }
}

fn rational(rng: &mut ChaCha8Rng, span: i64) -> Rational {
    Rational::new(BigInt::from(rng.random_range(-span..=span)), BigInt::from(rng.random_range(1..=7)))
}

/// A random strictly-interior point: a convex combination with positive
/// rational weights.
fn interior_point(rz: &Realization, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let weights: Vec<Rational> = (0..rz.points().len()).map(|_| int(rng.random_range(1..=9))).collect();
    let total: Rational = weights.iter().sum();
    (0..rz.dim())
        .map(|i| {
            rz.points()
                .iter()
                .zip(&weights)
                .map(|(p, w)| &p[i] * w)
                .sum::<Rational>()
                / &total
        })
        .collect()
}

#[test]
fn random_extensions_through_interior_points_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for d in [3usize, 4] {
        let bases: Vec<Realization> = good_sequences(d - 1).iter().map(|s| realize(s).unwrap()).collect();
        for trial in 0..100 {
            let base = &bases[trial % bases.len()];
            let w = interior_point(base, &mut rng);
            // random direction with nonzero last coordinate
            let mut dir: Vec<Rational> = (0..d - 1).map(|_| rational(&mut rng, 5)).collect();
            dir.push(int(rng.random_range(1..=4)));
            let t_up = Rational::new(BigInt::from(rng.random_range(1..=9)), BigInt::from(4));
            let t_down = Rational::new(BigInt::from(-rng.random_range(1..=9)), BigInt::from(4));
            let at = |t: &Rational| -> Vec<Rational> {
                let mut p = w.clone();
                p.push(int(0));
                p.iter().zip(&dir).map(|(x, v)| x + t * v).collect()
            };
            let (y, z) = (at(&t_down), at(&t_up));
            let out = extend_realization(base, &y, &z).unwrap();
            let v = out.verify();
            assert!(v.valid);
            // the new pair never shares a transversal
            let (a, b) = (2 * (d - 1), 2 * (d - 1) + 1);
            assert!(v.facets.iter().all(|f| !(f.transversal.contains(&a) && f.transversal.contains(&b))));
            assert!(!out.points()[a][d - 1].is_zero());
        }
    }
}

#[test]
fn segments_missing_the_base_are_rejected() {
    let base = standard_crosspolytope(2);
    // crosses x_3 = 0 at (2, 2), outside the diamond |x| + |y| <= 1
    let y = vec![int(2), int(2), int(-1)];
    let z = vec![int(2), int(2), int(1)];
    assert!(matches!(extend_realization(&base, &y, &z), Err(Error::InvalidExtension(_))));
    // crosses on the boundary edge
    let y = vec![Rational::new(1.into(), 2.into()), Rational::new(1.into(), 2.into()), int(-1)];
    let z = vec![Rational::new(1.into(), 2.into()), Rational::new(1.into(), 2.into()), int(1)];
    assert!(matches!(extend_realization(&base, &y, &z), Err(Error::InvalidExtension(_))));
    // wrong ambient dimension
    assert!(extend_realization(&base, &[int(0), int(1)], &[int(0), int(-1)]).is_err());
}

#[test]
fn verifier_rejects_perturbed_realizations() {
    let rz = realize(&"(14)(25)(36)".parse().unwrap()).unwrap();
    let mut pts = rz.points().to_vec();
    // push +3 through the opposite side
    pts[4] = pts[5].iter().map(|x| x * int(2)).collect();
    assert!(!verify_crosspolytope(&pts, rz.pairing()).unwrap().valid);
    // collapse -3 onto +3
    let mut pts = rz.points().to_vec();
    pts[5] = pts[4].clone();
    assert!(!verify_crosspolytope(&pts, rz.pairing()).unwrap().valid);
}

#[test]
fn text_files_round_trip() {
    for s in good_sequences(4) {
        let rz = realize(&s).unwrap();
        let back: Realization = rz.to_text().unwrap().parse().unwrap();
        assert_eq!(back, rz);
    }
}
