use okubo_core::exactfield::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_fields() -> Vec<Field> {
    vec![
        Field::gf(2).unwrap(),
        Field::gf(3).unwrap(),
        Field::gf_default(2, 2).unwrap(),
        Field::gf(5).unwrap(),
        Field::gf(7).unwrap(),
        Field::gf_default(2, 3).unwrap(),
        Field::gf_default(3, 2).unwrap(),
    ]
}

fn cube(x: &Fe) -> Fe {
    &(x * x) * x
}

#[test]
fn axioms_exhaustive_up_to_nine() {
    for f in small_fields() {
        let els = f.elements().unwrap();
        let (zero, one) = (f.zero(), f.one());
        for a in &els {
            assert_eq!(a + &zero, *a);
            assert_eq!(a * &one, *a);
            assert!((a + &(-a)).is_zero());
            if !a.is_zero() {
                assert!((a * &a.inv().unwrap()).is_one());
            }
            for b in &els {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                for c in &els {
                    assert_eq!(&(a + b) + c, a + &(b + c));
                    assert_eq!(&(a * b) * c, a * &(b * c));
                    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                }
            }
        }
    }
}

#[test]
fn frobenius_is_bijective_on_gf3k() {
    for k in 1..=4 {
        let f = Field::gf_default(3, k).unwrap();
        let mut images: Vec<Fe> = f.elements().unwrap().iter().map(cube).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len() as u64, f.size().unwrap());
    }
}

fn triple(f: Field, seed: u64, height: u32) -> (Fe, Fe, Fe) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (f.random_element(&mut rng, height), f.random_element(&mut rng, height), f.random_element(&mut rng, height))
}

fn infinite_fields() -> [Field; 2] {
    [Field::rationals(), Field::ratfunc(3).unwrap()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn axioms_on_random_triples(seed in any::<u64>(), which in 0usize..2) {
        let f = infinite_fields()[which];
        let (a, b, c) = triple(f, seed, 3);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn frobenius_is_a_ring_map(seed in any::<u64>(), which in 0usize..3) {
        let f = [Field::gf_default(3, 2).unwrap(), Field::gf_default(3, 3).unwrap(), Field::ratfunc(3).unwrap()][which];
        let (a, b, _) = triple(f, seed, 3);
        prop_assert_eq!(cube(&(&a + &b)), &cube(&a) + &cube(&b));
        prop_assert_eq!(cube(&(&a * &b)), &cube(&a) * &cube(&b));
    }

    #[test]
    fn decomposition_re_expands(seed in any::<u64>()) {
        let f = Field::ratfunc(3).unwrap();
        let (x, _, _) = triple(f, seed, 4);
        let [c0, c1, c2] = x.f3_subfield_decompose().unwrap();
        let t = f.t();
        prop_assert_eq!(&(&c0 + &(&c1 * &t)) + &(&(&c2 * &t) * &t), x);
        for c in [c0, c1, c2] {
            let [d0, d1, d2] = c.f3_subfield_decompose().unwrap();
            prop_assert_eq!(d0, c);
            prop_assert!(d1.is_zero() && d2.is_zero());
        }
    }

    #[test]
    fn cube_classes_are_an_equivalence(seed in any::<u64>(), which in 0usize..3) {
        let f = [Field::gf(7).unwrap(), Field::rationals(), Field::ratfunc(3).unwrap()][which];
        let (a, b, c) = triple(f, seed, 3);
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        prop_assert!(cube(&a).is_cube().unwrap());
        prop_assert!(a.cube_class_equal(&a).unwrap());
        prop_assert_eq!(a.cube_class_equal(&b).unwrap(), b.cube_class_equal(&a).unwrap());
        if a.cube_class_equal(&b).unwrap() && b.cube_class_equal(&c).unwrap() {
            prop_assert!(a.cube_class_equal(&c).unwrap());
        }
        prop_assert!(a.cube_class_equal(&(&a * &cube(&b))).unwrap());
    }
}
