//! Randomized properties of the exact germ calculations, each checked
//! against an independent route: the normal-form formula, the numeric
//! oracles, or a change of coordinates that must not matter.

mod common;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use siefring_kit::germs::{
    branched_cover, critical_order, delta_from_normal_form, delta_local, intersection_radius, local_intersection,
    normal_form, numeric_intersection_oracle, Germ, GermError, GaussRat, DEFAULT_EPSILON,
};

use common::{draw_germ, TANGENTS};

fn unitaries() -> Vec<[[GaussRat; 2]; 2]> {
    let r = |a, b, c, d| GaussRat::from_parts(a, b, c, d).unwrap();
    let zero = r(0, 1, 0, 1);
    vec![
        // rotation by the 3-4-5 angle
        [[r(3, 5, 0, 1), r(-4, 5, 0, 1)], [r(4, 5, 0, 1), r(3, 5, 0, 1)]],
        // coordinate swap with phases
        [[zero.clone(), GaussRat::i()], [GaussRat::i(), zero.clone()]],
        // diagonal phases
        [[r(3, 5, 4, 5), zero.clone()], [zero, r(0, 1, -1, 1)]],
    ]
}

/// `(z^k, Σ c_n z^n)` with a nonzero `z^{k+1}` term, hence simple.
fn monomial_coordinate_germ(rng: &mut impl Rng, k: usize) -> Germ {
    let mut q = vec![(0, 0); k + 5];
    for (n, c) in q.iter_mut().enumerate().skip(k + 1) {
        *c = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        if n == k + 1 && *c == (0, 0) {
            *c = (1, 0);
        }
    }
    let mut p = vec![(0, 0); k + 1];
    p[k] = (1, 0);
    Germ::from_gauss_ints(&p, &q).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn delta_matches_normal_form(seed in any::<u64>(), k in 1usize..=5) {
        let u = monomial_coordinate_germ(&mut ChaCha8Rng::seed_from_u64(seed), k);
        let nf = normal_form(&u).unwrap();
        prop_assert_eq!(nf.k as usize, k);
        prop_assert_eq!(delta_local(&u).unwrap(), delta_from_normal_form(&nf).unwrap());
    }

    #[test]
    fn delta_ignores_unitary_maps_and_rescaling(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = draw_germ(&mut rng, 1..=4, 2);
        let d = delta_local(&u).unwrap();
        for m in unitaries() {
            prop_assert_eq!(delta_local(&u.map_target(m).unwrap()).unwrap(), d);
        }
        let a = GaussRat::from_parts(1, 2, 1, 3).unwrap();
        prop_assert_eq!(delta_local(&u.rescale(&a)).unwrap(), d);
    }

    #[test]
    fn intersection_is_symmetric_and_coordinate_free(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = draw_germ(&mut rng, 1..=3, 2);
        let v = draw_germ(&mut rng, 1..=3, 2);
        match local_intersection(&u, &v) {
            Ok(n) => {
                prop_assert_eq!(local_intersection(&v, &u).unwrap(), n);
                for m in unitaries() {
                    let (mu, mv) = (u.map_target(m.clone()).unwrap(), v.map_target(m).unwrap());
                    prop_assert_eq!(local_intersection(&mu, &mv).unwrap(), n);
                }
                let a = GaussRat::from_parts(-2, 3, 0, 1).unwrap();
                prop_assert_eq!(local_intersection(&u.rescale(&a), &v).unwrap(), n);
                // positivity: at least the product of the critical orders
                let (ku, _) = critical_order(&u);
                let (kv, _) = critical_order(&v);
                prop_assert!(n >= ku * kv);
            }
            Err(GermError::IdenticalImages | GermError::DomainTooLarge) => {}
            Err(e) => prop_assert!(false, "{u} vs {v}: {e}"),
        }
    }

    #[test]
    fn covers_multiply_and_are_not_simple(seed in any::<u64>(), k in 2u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = draw_germ(&mut rng, 1..=2, 1);
        let cover = branched_cover(&u, k);
        prop_assert_eq!(critical_order(&cover).0, k * critical_order(&u).0);
        prop_assert_eq!(delta_local(&cover), Err(GermError::NotSimple));
    }
}

#[test]
fn oracle_agrees_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let eps = Complex64::from_polar(DEFAULT_EPSILON, 0.7);
    let mut checked = 0;
    for _ in 0..60 {
        let (ku, kv) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let tu = rng.gen_range(0..TANGENTS.len());
        let tv = rng.gen_range(0..TANGENTS.len());
        let u = common::random_germ(&mut rng, ku, tu, 2);
        let v = common::random_germ(&mut rng, kv, tv, 2);
        let Ok(exact) = local_intersection(&u, &v) else { continue };
        let r = intersection_radius(&u, &v).unwrap();
        assert_eq!(numeric_intersection_oracle(&u, &v, eps, r).unwrap(), exact, "{u} vs {v}");
        checked += 1;
    }
    assert!(checked >= 40, "only {checked} usable pairs");
}

#[test]
fn germ_files_round_trip() {
    let u = Germ::from_gauss_ints(&[(0, 0), (0, 0), (2, -1)], &[(0, 0), (0, 0), (0, 0), (1, 1)]).unwrap();
    let back = Germ::from_json(&u.to_json().unwrap()).unwrap();
    assert_eq!(back, u);
    assert!(matches!(Germ::from_json(r#"{"p": [[1, 1, 0, 1]], "q": []}"#), Err(_)));
    assert!(matches!(Germ::from_json(r#"{"p": [[0, 1, 0, 1], [1, 1, 0, 1]], "q": [], "r": []}"#), Err(GermError::Parse(_))));
}
