use okubo_core::classify::*;
use okubo_core::compalg::*;
use okubo_core::exactfield::*;
use okubo_core::liealg::*;
use okubo_core::linalg::{vadd, vscale, vzero, Matrix};
use okubo_core::maps::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gf(p: u32) -> Field {
    Field::gf(p).unwrap()
}

/// Product of `len` root exponentials with random roots and parameters.
fn random_automorphism(z: &Algebra, cb: &ChevalleyBasis, roots: &[Root], rng: &mut ChaCha8Rng, len: usize) -> Automorphism {
    let f = z.field();
    let height = if f.characteristic() == 0 || f.is_finite() { 4 } else { 1 };
    let mut psi = Automorphism::identity(z);
    for _ in 0..len {
        let r = roots[rng.gen_range(0..roots.len())];
        let t = f.random_element(rng, height);
        psi = psi.compose(z, &exp_root(z, cb, r, &t).unwrap()).unwrap();
    }
    psi
}

fn field_choice(i: usize) -> Field {
    [gf(2), gf(3), gf(5), gf(7), Field::gf_default(3, 2).unwrap(), Field::rationals(), Field::ratfunc(3).unwrap()][i]
}

fn random_ka(f: Field, rng: &mut ChaCha8Rng, height: u32) -> (EtaleAlgebra, KElem) {
    let k = loop {
        let spec = if rng.gen_bool(0.3) {
            EtaleSpec::Split
        } else {
            EtaleSpec::Quadratic(f.random_element(rng, height), f.random_element(rng, height))
        };
        if let Ok(k) = make_etale(f, spec) {
            break k;
        }
    };
    loop {
        let beta = k.elem(f.random_element(rng, height), f.random_element(rng, height));
        if let Some(inv) = k.inv(&k.conj(&beta)) {
            return (k.clone(), k.mul(&beta, &inv));
        }
    }
}

fn okubo_of(kw: &KwData) -> Algebra {
    petersson(&kw.algebra, kw.tau.matrix()).unwrap().with_tag(Tag::Okubo { idempotent: Some(kw.one()) })
}

fn random_elem(a: &Algebra, rng: &mut ChaCha8Rng) -> Vec<Fe> {
    (0..a.dim()).map(|_| a.field().random_element(rng, 3)).collect()
}

#[test]
fn chevalley_elements_are_derivations() {
    for f in [gf(2), gf(3), gf(5), Field::rationals()] {
        let z = zorn(f);
        let d = derivations(&z).unwrap();
        let cb = chevalley_basis(&z).unwrap();
        assert_eq!(cb.h1.mul(&cb.h2), cb.h2.mul(&cb.h1));
        for e in &cb.elements {
            assert!(d.contains(&e.x), "x_{} over {f}", e.root);
            let (w1, w2) = e.root.weights();
            assert_eq!(cb.h1.bracket(&e.x), e.x.scale(&f.from_i64(w1)));
            assert_eq!(cb.h2.bracket(&e.x), e.x.scale(&f.from_i64(w2)));
        }
    }
}

#[test]
fn normal_forms_in_every_char3_field() {
    let fields = [gf(3), Field::gf_default(3, 2).unwrap(), Field::gf_default(3, 3).unwrap(), Field::ratfunc(3).unwrap()];
    for f in fields {
        let z = zorn(f);
        for kind in 1..=4u8 {
            let c = classify_order3_char3(&z, &tau_normal_form(&z, kind).unwrap()).unwrap();
            assert_eq!(c.type_number(), Some(kind), "{f}");
        }
    }
}

#[test]
fn petersson_product_recovers_hurwitz_product() {
    for f in [gf(2), gf(3), gf(7)] {
        let z = zorn(f);
        let s = split_okubo(f);
        let e = z.unit().unwrap().clone();
        for i in 0..8 {
            for j in 0..8 {
                let (x, y) = (z.basis(i), z.basis(j));
                assert_eq!(s.mul(&s.mul(&e, &x), &s.mul(&y, &e)), z.mul(&x, &y));
            }
        }
    }
}

#[test]
fn fix_of_tau_e_is_the_centralizer() {
    let f = gf(3);
    for s in [split_okubo(f), split_okubo_type1(f).unwrap()] {
        for e in brute_force_idempotents(&s).unwrap() {
            let fx = fix(&tau_from_idempotent(&s, &e).unwrap());
            let c = s.centralizer(&e);
            assert!(fx.contains_subspace(&c) && c.contains_subspace(&fx));
        }
    }
}

#[test]
fn char3_para_hurwitz_idempotents() {
    let f = gf(3);
    let k = make_etale(f, EtaleSpec::Split).unwrap();
    for a in [ground(f), etale_algebra(&k)] {
        let p = para(&a).unwrap();
        assert_eq!(brute_force_idempotents(&p).unwrap(), vec![a.unit().unwrap().clone()]);
    }
    // in a para-Cayley algebra every other idempotent is 1 + x with x² = 0 and
    // n(x) = 0, so an anisotropic norm leaves only the para-unit
    let z = zorn(f);
    let one = z.unit().unwrap().clone();
    let all = brute_force_idempotents(&para(&z).unwrap()).unwrap();
    assert!(all.len() > 1);
    for w in all.iter().filter(|w| **w != one) {
        let x = okubo_core::linalg::vsub(w, &one);
        assert!(z.mul(&x, &x).iter().all(Fe::is_zero));
        assert!(z.norm(&x).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn one_parameter_law(seed in any::<u64>(), which in 0usize..6) {
        let f = field_choice(which);
        let z = zorn(f);
        let cb = chevalley_basis(&z).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = Root::all()[rng.gen_range(0..12)];
        let (t, s) = (f.random_element(&mut rng, 4), f.random_element(&mut rng, 4));
        let lhs = exp_root(&z, &cb, r, &t).unwrap().compose(&z, &exp_root(&z, &cb, r, &s).unwrap()).unwrap();
        let rhs = exp_root(&z, &cb, r, &(&t + &s)).unwrap();
        prop_assert_eq!(lhs.matrix(), rhs.matrix());
    }

    #[test]
    fn automorphisms_are_isometries(seed in any::<u64>(), which in 0usize..7) {
        let f = field_choice(which);
        let z = zorn(f);
        let cb = chevalley_basis(&z).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psi = random_automorphism(&z, &cb, &Root::all(), &mut rng, 4);
        for i in 0..8 {
            for j in 0..8 {
                let (x, y) = (z.basis(i), z.basis(j));
                prop_assert_eq!(z.polar(&psi.apply(&x), &psi.apply(&y)), z.polar(&x, &y));
            }
        }
    }

    #[test]
    fn hurwitz_conjugation(seed in any::<u64>(), which in 0usize..7) {
        let f = field_choice(which);
        let z = zorn(f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (random_elem(&z, &mut rng), random_elem(&z, &mut rng));
        let xb = z.conj(&x).unwrap();
        prop_assert_eq!(z.conj(&xb).unwrap(), x.clone());
        prop_assert_eq!(z.conj(&z.mul(&x, &y)).unwrap(), z.mul(&z.conj(&y).unwrap(), &xb));
        // x² − n(x,1)x + n(x)1 = 0
        let one = z.unit().unwrap();
        let mut ch = z.mul(&x, &x);
        for (c, v) in [(-z.polar(&x, one), &x), (z.norm(&x), one)] {
            ch = vadd(&ch, &vscale(&c, v));
        }
        prop_assert!(ch.iter().all(Fe::is_zero));
    }

    #[test]
    fn composition_law(seed in any::<u64>(), which in 0usize..7) {
        let f = field_choice(which);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for a in [zorn(f), para(&zorn(f)).unwrap(), split_okubo(f)] {
            let (x, y) = (random_elem(&a, &mut rng), random_elem(&a, &mut rng));
            prop_assert_eq!(a.norm(&a.mul(&x, &y)), &a.norm(&x) * &a.norm(&y));
        }
    }

    #[test]
    fn ka_round_trip(seed in any::<u64>(), which in 0usize..3) {
        let f = [gf(3), Field::gf_default(3, 2).unwrap(), Field::ratfunc(3).unwrap()][which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (k, a) = random_ka(f, &mut rng, 2);
        let kw = from_kw(&k, &a).unwrap();
        let c = classify_order3_char3(&kw.algebra, &kw.tau).unwrap();
        let Order3Kind::Type2 { k: k2, a: a2 } = c.kind else {
            return Err(TestCaseError::fail(format!("classified as {}", c.name())));
        };
        prop_assert_eq!(ka_equivalent(&k, &a, &k2, &a2).unwrap(), Decision::Yes);
    }

    #[test]
    fn g_is_semilinear(seed in any::<u64>(), which in 0usize..3) {
        let f = [gf(3), Field::gf_default(3, 2).unwrap(), Field::ratfunc(3).unwrap()][which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (k, a) = random_ka(f, &mut rng, 2);
        for s in [split_okubo(f), okubo_of(&from_kw(&k, &a).unwrap())] {
            let (x, y) = (random_elem(&s, &mut rng), random_elem(&s, &mut rng));
            let lam = f.random_element(&mut rng, 3);
            prop_assert_eq!(g_map(&s, &vadd(&x, &y)), &g_map(&s, &x) + &g_map(&s, &y));
            prop_assert_eq!(g_map(&s, &vscale(&lam, &x)), &(&(&lam * &lam) * &lam) * &g_map(&s, &x));
        }
    }

    #[test]
    fn segre_symbol_is_a_conjugacy_invariant(seed in any::<u64>(), kind in 1u8..=4) {
        let f = gf(3);
        let z = zorn(f);
        let cb = chevalley_basis(&z).unwrap();
        let tau = tau_normal_form(&z, kind).unwrap();
        let id = Matrix::identity(f, 8);
        let want = segre_symbol(&tau.matrix().sub(&id)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            let psi = random_automorphism(&z, &cb, &Root::all(), &mut rng, 3);
            let conj = tau.conjugate_by(&z, &psi).unwrap();
            prop_assert_eq!(&segre_symbol(&conj.matrix().sub(&id)).unwrap(), &want);
            prop_assert_eq!(classify_order3_char3(&z, &conj).unwrap().type_number(), Some(kind));
        }
    }

    #[test]
    fn conjugate_cube_roots_give_para_cayley(seed in any::<u64>(), which in 0usize..2) {
        let f = [gf(7), Field::gf_default(2, 2).unwrap()][which];
        let z = zorn(f);
        let cb = chevalley_basis(&z).unwrap();
        let om = f.elements().unwrap().into_iter().find(|w| !w.is_one() && (&(w * w) + w + f.one()).is_zero()).unwrap();
        let mut w0 = vzero(f, 8);
        w0[E1] = om.clone();
        w0[E2] = &om * &om;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psi = random_automorphism(&z, &cb, &Root::all(), &mut rng, 4);
        let w = psi.apply(&w0);
        let tau = tau_w(&z, &w).unwrap();
        let c = classify_order3_charnot3(&z, &tau).unwrap();
        let Order3Kind::ParaCayley { w: found } = c.kind else {
            return Err(TestCaseError::fail(format!("classified as {}", c.name())));
        };
        let w2 = z.mul(&found, &found);
        for i in 0..8 {
            prop_assert_eq!(z.mul(&z.mul(&found, &z.basis(i)), &w2), tau.apply(&z.basis(i)));
        }
    }

    #[test]
    fn commuting_with_tau_e_means_fixing_e_and_the_product(seed in any::<u64>()) {
        // S = C_τ with e = 1, so Aut(S) ∩ Aut(C) is the centralizer of τ = τ_e
        let f = gf(3);
        let z = zorn(f);
        let s = split_okubo_type1(f).unwrap();
        let tau = tau_normal_form(&z, 1).unwrap();
        let cb = chevalley_basis(&z).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let roots = if rng.gen_bool(0.5) { commuting_roots(&cb, Root::diff(2, 3)) } else { Root::all() };
        let psi = random_automorphism(&z, &cb, &roots, &mut rng, 3);
        let commutes = psi.matrix().mul(tau.matrix()) == tau.matrix().mul(psi.matrix());
        let one = z.unit().unwrap();
        let preserves = psi.apply(one) == *one && is_automorphism(&s, psi.matrix());
        prop_assert_eq!(commutes, preserves);
    }
}

/// Roots whose x_β commutes with x_γ as matrices.
fn commuting_roots(cb: &ChevalleyBasis, gamma: Root) -> Vec<Root> {
    let xg = cb.x(gamma).unwrap();
    Root::all().into_iter().filter(|&r| cb.x(r).unwrap().bracket(xg).is_zero()).collect()
}

#[test]
fn quadratic_class_is_invariant_under_automorphisms() {
    let f = gf(3);
    let z = zorn(f);
    let s = split_okubo_type1(f).unwrap();
    let tau = tau_normal_form(&z, 1).unwrap();
    let cb = chevalley_basis(&z).unwrap();
    let roots = commuting_roots(&cb, Root::diff(2, 3));
    let mut rng = ChaCha8Rng::seed_from_u64(82);
    let quadratic: Vec<(Vec<Fe>, EtaleAlgebra, KElem)> = brute_force_idempotents(&s)
        .unwrap()
        .into_iter()
        .filter_map(|e| match classify_idempotent(&s, &e).unwrap() {
            IdempotentClass::Quadratic { k, a } => Some((e, k, a)),
            _ => None,
        })
        .collect();
    let mut moved = 0;
    for (e, k, a) in quadratic.iter().step_by(7) {
        for _ in 0..20 {
            let mut psi = random_automorphism(&z, &cb, &roots, &mut rng, 3);
            if rng.gen_bool(0.5) {
                psi = psi.compose(&z, &tau).unwrap();
            }
            assert!(is_automorphism(&s, psi.matrix()));
            let img = psi.apply(e);
            moved += usize::from(img != *e);
            match classify_idempotent(&s, &img).unwrap() {
                IdempotentClass::Quadratic { k: k2, a: a2 } => {
                    assert_eq!(ka_equivalent(k, a, &k2, &a2).unwrap(), Decision::Yes)
                }
                other => panic!("{other:?}"),
            }
        }
    }
    assert!(moved > 0, "no sampled automorphism moved an idempotent");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn kw_algebras_compose(seed in any::<u64>(), which in 0usize..3) {
        let f = [gf(3), Field::gf_default(3, 2).unwrap(), Field::ratfunc(3).unwrap()][which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (k, a) = random_ka(f, &mut rng, 3);
        let kw = from_kw(&k, &a).unwrap();
        prop_assert!(check_composition(&kw.algebra, seed).ok);
        let s = okubo_of(&kw);
        prop_assert!(check_composition(&s, seed).ok);
        prop_assert!(check_symmetric(&s).is_ok());
    }
}
