//! Acceptance criteria, one test each. Every test prints a single
//! `criterion N: PASS|FAIL` line; run with `--nocapture` to see them.

use std::time::{Duration, Instant};

use okubo_core::classify::*;
use okubo_core::compalg::*;
use okubo_core::exactfield::*;
use okubo_core::liealg::*;
use okubo_core::linalg::{vadd, vis_zero, vscale, vsub, vzero, Matrix, Subspace};
use okubo_core::maps::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn verdict(n: u32, failures: &[String], detail: &str, elapsed: Duration, limit: Duration) {
    let slow = elapsed >= limit;
    let ok = failures.is_empty() && !slow;
    println!(
        "criterion {n}: {} ({detail}; {} ms, limit {} ms){}",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_millis(),
        limit.as_millis(),
        if failures.is_empty() { String::new() } else { format!(" [{}]", failures.join("; ")) }
    );
    assert!(failures.is_empty(), "criterion {n}: {failures:?}");
    assert!(!slow, "criterion {n} took {elapsed:?}");
}

fn gf(p: u32) -> Field {
    Field::gf(p).unwrap()
}

fn gfq(p: u32, k: u32) -> Field {
    Field::gf_default(p, k).unwrap()
}

fn f3t() -> Field {
    Field::ratfunc(3).unwrap()
}

// Rows and columns in the order e1 e2 u1 u2 u3 v1 v2 v3; 0 for a zero product.
const TABLE: [[&str; 8]; 8] = [
    ["e1", "0", "u1", "u2", "u3", "0", "0", "0"],
    ["0", "e2", "0", "0", "0", "v1", "v2", "v3"],
    ["0", "u1", "0", "v3", "-v2", "-e1", "0", "0"],
    ["0", "u2", "-v3", "0", "v1", "0", "-e1", "0"],
    ["0", "u3", "v2", "-v1", "0", "0", "0", "-e1"],
    ["v1", "0", "-e2", "0", "0", "0", "u3", "-u2"],
    ["v2", "0", "0", "-e2", "0", "-u3", "0", "u1"],
    ["v3", "0", "0", "0", "-e2", "u2", "-u1", "0"],
];

fn table_entry(f: Field, text: &str) -> Vec<Fe> {
    let mut v = vzero(f, 8);
    if text == "0" {
        return v;
    }
    let (sign, name) = match text.strip_prefix('-') {
        Some(n) => (-1, n),
        None => (1, text),
    };
    let i = CANONICAL_NAMES.iter().position(|&n| n == name).unwrap();
    v[i] = f.from_i64(sign);
    v
}

#[test]
fn criterion_01_table() {
    let t0 = Instant::now();
    let mut failures = vec![];
    for f in [gf(2), gf(3), gf(7), Field::rationals()] {
        let z = zorn(f);
        for i in 0..8 {
            for j in 0..8 {
                if *z.basis_product(i, j) != table_entry(f, TABLE[i][j]) {
                    failures.push(format!("{f}: {}*{}", CANONICAL_NAMES[i], CANONICAL_NAMES[j]));
                }
            }
        }
    }
    verdict(1, &failures, "64 products over GF(2), GF(3), GF(7), Q", t0.elapsed(), Duration::from_secs(1));
}

/// Symmetric-composition identities on all basis pairs and triples, computed
/// directly from the product and the polar form.
fn basis_symmetric_failures(s: &Algebra) -> Vec<String> {
    let d = s.dim();
    let b: Vec<Vec<Fe>> = (0..d).map(|i| s.basis(i)).collect();
    let mut out = vec![];
    for i in 0..d {
        for j in 0..d {
            let nb = vscale(&s.norm(&b[i]), &b[j]);
            if s.mul(&s.mul(&b[i], &b[j]), &b[i]) != nb || s.mul(&b[i], &s.mul(&b[j], &b[i])) != nb {
                out.push(format!("{}: (x*y)*x at ({i},{j})", s.field()));
            }
            for k in 0..d {
                if s.polar(&s.mul(&b[i], &b[j]), &b[k]) != s.polar(&b[i], &s.mul(&b[j], &b[k])) {
                    out.push(format!("{}: associativity of n at ({i},{j},{k})", s.field()));
                }
            }
        }
    }
    out
}

#[test]
fn criterion_02_composition_laws() {
    let t0 = Instant::now();
    let mut failures = vec![];
    for f in [gf(2), gf(3)] {
        let c = check_composition(&zorn(f), 0);
        if !c.ok || !c.certificate || matches!(c.mode, CheckMode::Randomized { .. }) {
            failures.push(format!("composition on zorn({f}): {c:?}"));
        }
    }
    let fields = [gf(2), gf(3), gfq(2, 2), gf(5), gf(7), gfq(2, 3), gfq(3, 2)];
    for f in fields {
        for s in [para(&zorn(f)).unwrap(), split_okubo(f)] {
            if let Err(e) = check_symmetric(&s) {
                failures.push(format!("{f} {}: {e}", s.tag().name()));
            }
            failures.extend(basis_symmetric_failures(&s));
        }
    }
    verdict(2, &failures, "zorn over GF(2), GF(3); para-zorn and split Okubo over GF(2..9)", t0.elapsed(), Duration::from_secs(10));
}

/// The automorphism of the Zorn algebra with the given images of u₁, u₂, u₃.
/// U generates the algebra: vᵢ = u_{i+1}·u_{i+2}, e₁ = −u₁·v₁, e₂ = 1 − e₁.
fn from_u_images(z: &Algebra, us: [Vec<Fe>; 3]) -> Matrix {
    let one = z.unit().unwrap().clone();
    let v = |i: usize| z.mul(&us[(i + 1) % 3], &us[(i + 2) % 3]);
    let vs = [v(0), v(1), v(2)];
    let e1 = vsub(&vzero(z.field(), 8), &z.mul(&us[0], &vs[0]));
    let e2 = vsub(&one, &e1);
    let cols = vec![e1, e2, us[0].clone(), us[1].clone(), us[2].clone(), vs[0].clone(), vs[1].clone(), vs[2].clone()];
    Matrix::from_cols(z.field(), &cols)
}

fn lin(z: &Algebra, terms: &[(i64, usize)]) -> Vec<Fe> {
    let f = z.field();
    let mut v = vzero(f, 8);
    for &(c, i) in terms {
        v[i] = &v[i] + &f.from_i64(c);
    }
    v
}

#[test]
fn criterion_03_char3_normal_forms() {
    let t0 = Instant::now();
    let f = gf(3);
    let z = zorn(f);
    let mut failures = vec![];
    // u₃ images printed for the four normal forms; u₁, u₂ fixed except in type 2
    let u = |i: usize| z.basis(i);
    let shift = lin(&z, &[(1, V3), (-1, E1), (1, E2)]);
    let printed = [
        from_u_images(&z, [u(U1), u(U2), vadd(&u(U3), &u(U2))]),
        from_u_images(&z, [u(U2), u(U3), u(U1)]),
        from_u_images(&z, [u(U1), u(U2), vadd(&u(U3), &shift)]),
        from_u_images(&z, [u(U1), u(U2), vadd(&vadd(&u(U3), &u(U2)), &shift)]),
    ];
    let segre = ["(2^2,1^4)", "(3^2,1^2)", "(3,2^2,1)", "(3,2^2,1)"];
    for (k, m) in printed.iter().enumerate() {
        let kind = k as u8 + 1;
        let Ok(tau) = Automorphism::new(&z, m.clone()) else {
            failures.push(format!("printed form {kind} is not an automorphism"));
            continue;
        };
        if tau.matrix() != tau_normal_form(&z, kind).unwrap().matrix() {
            failures.push(format!("tau_normal_form({kind}) differs from the printed action"));
        }
        match classify_order3_char3(&z, &tau) {
            Ok(c) => {
                if c.type_number() != Some(kind) {
                    failures.push(format!("form {kind} classified as {}", c.name()));
                }
                let s = c.segre.map(|s| s.to_string()).unwrap_or_default();
                if s != segre[k] {
                    failures.push(format!("form {kind} has Segre symbol {s}"));
                }
            }
            Err(e) => failures.push(format!("form {kind}: {e}")),
        }
    }
    let cb = chevalley_basis(&z).unwrap();
    let exp1 = exp_root(&z, &cb, Root::diff(2, 3), &f.one()).unwrap();
    if exp1.matrix() != &printed[0] {
        failures.push("type 1 != exp(x_{e2-e3})".into());
    }
    let exp3 = exp_root(&z, &cb, Root::eps(3).neg(), &f.from_i64(-1)).unwrap();
    if exp3.matrix() != &printed[2] {
        failures.push("type 3 != exp(-x_{-e3})".into());
    }
    verdict(3, &failures, "four normal forms over GF(3)", t0.elapsed(), Duration::from_secs(1));
}

/// x_{−ε₃} = −ad v₃ in characteristic 3, so the type 3 form is exp(+x_{−ε₃}).
#[test]
fn type3_is_exp_of_x_minus_e3() {
    let f = gf(3);
    let z = zorn(f);
    let cb = chevalley_basis(&z).unwrap();
    let v3 = z.basis(V3);
    let minus_ad_v3 = z.right_matrix(&v3).sub(&z.left_matrix(&v3));
    assert_eq!(cb.x(Root::eps(3).neg()).unwrap(), &minus_ad_v3);
    let t3 = tau_normal_form(&z, 3).unwrap();
    assert_eq!(exp_root(&z, &cb, Root::eps(3).neg(), &f.one()).unwrap().matrix(), t3.matrix());
    assert_ne!(exp_root(&z, &cb, Root::eps(3).neg(), &f.from_i64(-1)).unwrap().matrix(), t3.matrix());
}

fn primitive_cube_root(f: Field) -> Fe {
    f.elements()
        .unwrap()
        .into_iter()
        .find(|w| !w.is_one() && (&(w * w) + w + f.one()).is_zero())
        .unwrap()
}

#[test]
fn criterion_04_charnot3_classification() {
    let t0 = Instant::now();
    let mut failures = vec![];
    for f in [gf(7), gfq(2, 2)] {
        let z = zorn(f);
        let om = primitive_cube_root(f);
        let mut w = vzero(f, 8);
        w[E1] = om.clone();
        w[E2] = &om * &om;
        let tw = tau_w(&z, &w).unwrap();
        match classify_order3_charnot3(&z, &tw) {
            Ok(c) => match &c.kind {
                Order3Kind::ParaCayley { w: found } => {
                    if c.fix_dim != 2 {
                        failures.push(format!("{f}: tau_w fixes {} dims", c.fix_dim));
                    }
                    let w2 = z.mul(found, found);
                    let ok = (0..8).all(|i| z.mul(&z.mul(found, &z.basis(i)), &w2) == tw.apply(&z.basis(i)));
                    if !ok {
                        failures.push(format!("{f}: returned w does not reproduce tau"));
                    }
                }
                other => failures.push(format!("{f}: tau_w classified as {other:?}")),
            },
            Err(e) => failures.push(format!("{f}: tau_w: {e}")),
        }
        match classify_order3_charnot3(&z, &tau_st(&z).unwrap()) {
            Ok(c) => match c.kind {
                Order3Kind::Okubo { quaternion_split, .. } => {
                    if c.fix_dim != 4 || quaternion_split != Decision::Yes {
                        failures.push(format!("{f}: tau_st fix {} split {quaternion_split}", c.fix_dim));
                    }
                }
                other => failures.push(format!("{f}: tau_st classified as {other:?}")),
            },
            Err(e) => failures.push(format!("{f}: tau_st: {e}")),
        }
    }
    verdict(4, &failures, "tau_w and tau_st over GF(7), GF(4)", t0.elapsed(), Duration::from_secs(1));
}

fn flat(m: &Matrix) -> Vec<Fe> {
    m.entries().to_vec()
}

#[test]
fn criterion_05_chevalley_data() {
    let t0 = Instant::now();
    let mut failures = vec![];
    let f = gf(5);
    let z = zorn(f);
    let d = derivations(&z).unwrap();
    if d.dim() != 14 {
        failures.push(format!("dim Der = {}", d.dim()));
    }
    let cb = chevalley_basis(&z).unwrap();
    let rd = root_decomposition(&d, &cb.h1, &cb.h2).unwrap();
    let ones = rd.spaces.iter().filter(|w| !w.roots.is_empty() && w.space.dim() == 1).count();
    let zero = rd.zero_space().map_or(0, |w| w.space.dim());
    if ones != 12 || zero != 2 || rd.merged || !rd.complete {
        failures.push(format!("root spaces: {ones} lines, Cartan {zero}"));
    }
    for e in &cb.elements {
        let x = cb.in_canonical_coords(&e.x);
        if e.root.is_long() {
            if !x.mul(&x).is_zero() {
                failures.push(format!("x_{}^2 != 0", e.root));
            }
        } else if !x.pow(3).is_zero() {
            failures.push(format!("x_{}^3 != 0", e.root));
        }
    }
    for i in 1..=3 {
        let x = cb.in_canonical_coords(cb.x(Root::eps(i)).unwrap());
        let img = x.mul(&x).mul_vec(&z.basis(V1 + i - 1));
        if img != vscale(&f.from_i64(2), &z.basis(U1 + i - 1)) {
            failures.push(format!("x_e{i}^2(v{i}) = {}", z.elem_text(&img)));
        }
    }
    // ad_C over GF(3): dimension 7 and [Der, ad_C] ⊆ ad_C
    let f3 = gf(3);
    let z3 = zorn(f3);
    let d3 = derivations(&z3).unwrap();
    let ad = inner_derivations(&z3);
    let ad_span = Subspace::span(f3, 64, &ad.iter().map(flat).collect::<Vec<_>>());
    if ad_span.dim() != 7 {
        failures.push(format!("dim ad_C = {}", ad_span.dim()));
    }
    if !ad.iter().all(|m| d3.contains(m)) {
        failures.push("ad_C not inside Der".into());
    }
    let ideal = d3.basis().iter().all(|dm| ad.iter().all(|a| ad_span.contains(&flat(&dm.bracket(a)))));
    if !ideal || !d3.is_ideal(&ad) {
        failures.push("ad_C is not an ideal".into());
    }
    verdict(5, &failures, "Der(zorn(GF(5))) dim 14, 12 root lines; ad_C ideal over GF(3)", t0.elapsed(), Duration::from_secs(30));
}

#[test]
fn criterion_06_lie_centralizers() {
    let t0 = Instant::now();
    let mut failures = vec![];
    let mut measured = vec![];
    let f = gf(3);
    let z = zorn(f);
    let d = derivations(&z).unwrap();
    let bounds = [(1u8, 8usize), (3, 8), (4, 6)];
    for (kind, lower) in bounds {
        let dim = lie_centralizer(&d, tau_normal_form(&z, kind).unwrap().matrix()).dim();
        measured.push(format!("type{kind}={dim}"));
        if dim < lower {
            failures.push(format!("type {kind}: {dim} < {lower}"));
        }
    }
    let dim = lie_centralizer(&d, tau_st(&z).unwrap().matrix()).dim();
    measured.push(format!("tau_st={dim}"));
    if dim <= 4 {
        failures.push(format!("tau_st: {dim} <= 4"));
    }
    for spec in [EtaleSpec::Split, EtaleSpec::Quadratic(f.zero(), f.from_i64(-1))] {
        let k = make_etale(f, spec).unwrap();
        for a in k.norm_one_elements().unwrap() {
            let kw = from_kw(&k, &a).unwrap();
            let dk = derivations(&kw.algebra).unwrap();
            let dim = lie_centralizer(&dk, kw.tau.matrix()).dim();
            if a == k.one() {
                measured.push(format!("tau_K,1[{}]={dim}", k.iso_label()));
            }
            if dim <= 4 {
                failures.push(format!("tau_K,a {}: {dim} <= 4", class_tag(&k, &a)));
            }
        }
    }
    verdict(6, &failures, &format!("GF(3) Lie centralizers {}", measured.join(" ")), t0.elapsed(), Duration::from_secs(30));
}

#[test]
fn criterion_07_idempotent_inventory() {
    let t0 = Instant::now();
    let mut failures = vec![];
    let f = gf(3);
    // the split Okubo algebra as C_τ for the type 1 normal form, where 1 is quaternionic
    let s = split_okubo_type1(f).unwrap();
    let one = zorn(f).unit().unwrap().clone();
    let all = brute_force_idempotents(&s).unwrap();
    let kinds: Vec<IdempotentClass> = all.iter().map(|e| classify_idempotent(&s, e).unwrap()).collect();
    let count = |n: &str| kinds.iter().filter(|k| k.name() == n).count();
    let (q, sg, qd) = (count("quaternionic"), count("singular"), count("quadratic"));
    if q != 1 || sg != 8 || q + sg + qd != all.len() {
        failures.push(format!("{q} quaternionic, {sg} singular, {qd} quadratic of {}", all.len()));
    }
    if !matches!(classify_idempotent(&s, &one).unwrap(), IdempotentClass::Quaternionic) {
        failures.push("1 is not quaternionic".into());
    }
    let mut classes: Vec<(EtaleAlgebra, KElem)> = vec![];
    for k in &kinds {
        if let IdempotentClass::Quadratic { k, a } = k {
            let new = classes.iter().all(|(k2, a2)| ka_equivalent(k, a, k2, a2).unwrap() == Decision::No);
            if new {
                classes.push((k.clone(), a.clone()));
            }
        }
    }
    let mut labels: Vec<String> = classes.iter().map(|(k, _)| k.iso_label()).collect();
    labels.sort();
    if labels != ["GF(9)", "split"] {
        failures.push(format!("quadratic classes {labels:?}"));
    }
    // {1 + x : x ∈ Centr(1), x*x = 0} by enumerating Centr(1)
    let c = s.centralizer(&one);
    let els = f.elements().unwrap();
    let mut cone = vec![];
    for n in 0..3usize.pow(c.dim() as u32) {
        let mut x = vzero(f, 8);
        let mut m = n;
        for b in c.basis() {
            x = vadd(&x, &vscale(&els[m % 3], b));
            m /= 3;
        }
        if vis_zero(&s.mul(&x, &x)) {
            cone.push(vadd(&one, &x));
        }
    }
    cone.sort();
    let mut sorted = all.clone();
    sorted.sort();
    if cone != sorted {
        failures.push(format!("cone has {} elements, brute force {}", cone.len(), sorted.len()));
    }
    // the C_{τ_st} model gives the same inventory around its own quaternionic idempotent
    let st = split_okubo(f);
    let inv = idempotent_inventory(&st).unwrap();
    if inv.count("quaternionic") != 1
        || inv.count("singular") != 8
        || inv.classes.len() != 2
        || inv.entries.len() != all.len()
        || inv.full_closed_form != Some(true)
        || inv.singular_closed_form != Some(true)
    {
        failures.push(format!("C_tau_st inventory: {}", inv.report(&st).to_string().replace('\n', ", ")));
    }
    verdict(
        7,
        &failures,
        &format!("{} idempotents: {q} quaternionic, {sg} singular, {qd} quadratic in classes {labels:?}", all.len()),
        t0.elapsed(),
        Duration::from_secs(10),
    );
}

fn okubo_of(kw: &KwData) -> Algebra {
    petersson(&kw.algebra, kw.tau.matrix()).unwrap().with_tag(Tag::Okubo { idempotent: Some(kw.one()) })
}

#[test]
fn criterion_08_f3t() {
    let t0 = Instant::now();
    let mut failures = vec![];
    let f = f3t();
    let k = make_etale(f, EtaleSpec::Split).unwrap();
    let t = f.t();
    let pair = |x: &Fe| k.from_pair(x, &x.inv().unwrap()).unwrap();
    let dim_for = |a: &KElem| g_image(&okubo_of(&from_kw(&k, a).unwrap())).unwrap().dimension;
    let d_t = dim_for(&pair(&t));
    let d_1 = dim_for(&k.one());
    if d_t != Some(3) || d_1 != Some(1) {
        failures.push(format!("g-image dims {d_t:?}, {d_1:?}"));
    }
    if t.is_cube().unwrap() {
        failures.push("t is a cube".into());
    }
    let a = pair(&t);
    let one_plus_t = &t + &f.one();
    let cases = [(&t * &t, Decision::Yes), (t.clone(), Decision::Yes), (one_plus_t.clone(), Decision::No)];
    for (b, want) in &cases {
        let got = ka_equivalent(&k, &a, &k, &pair(b)).unwrap();
        if got != *want {
            failures.push(format!("(t, {b}) -> {got}"));
        }
    }
    // no μ of degree ≤ 2 over degree ≤ 2 has μ³ = t·(1+t)^{±1}
    let polys: Vec<Vec<i64>> = (0..27).map(|n| vec![n % 3, (n / 3) % 3, n / 9]).collect();
    let targets = [&t * &one_plus_t, t.try_div(&one_plus_t).unwrap()];
    for num in &polys {
        for den in &polys {
            let Ok(mu) = f.ratfunc_from_polys(num, den) else { continue };
            if mu.is_zero() {
                continue;
            }
            let cube = &(&mu * &mu) * &mu;
            if targets.contains(&cube) {
                failures.push(format!("mu = {mu} makes (t, 1+t) equivalent"));
            }
        }
    }
    verdict(8, &failures, "g-image dims 3 and 1; [K,t] vs t, t^2, 1+t", t0.elapsed(), Duration::from_secs(5));
}

/// A random quadratic étale algebra and a norm-one element β/β̄ of it.
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
            let a = k.mul(&beta, &inv);
            if k.norm(&a).is_one() {
                return (k, a);
            }
        }
    }
}

#[test]
fn criterion_09_round_trip() {
    let t0 = Instant::now();
    let mut failures = vec![];
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut runs = 0;
    let mut fields_k = 0;
    for (f, count, height) in [(gf(3), 10, 3), (gfq(3, 2), 10, 9), (f3t(), 5, 2)] {
        for _ in 0..count {
            let (k, a) = random_ka(f, &mut rng, height);
            runs += 1;
            fields_k += usize::from(k.is_split() == Decision::No);
            let kw = match from_kw(&k, &a) {
                Ok(kw) => kw,
                Err(e) => {
                    failures.push(format!("from_kw {}: {e}", class_tag(&k, &a)));
                    continue;
                }
            };
            match classify_order3_char3(&kw.algebra, &kw.tau) {
                Ok(Order3Class { kind: Order3Kind::Type2 { k: k2, a: a2 }, .. }) => {
                    let d = ka_equivalent(&k, &a, &k2, &a2).unwrap();
                    if d != Decision::Yes {
                        failures.push(format!("{f}: {} vs {} -> {d}", class_tag(&k, &a), class_tag(&k2, &a2)));
                    }
                }
                Ok(c) => failures.push(format!("{f}: {} classified as {}", class_tag(&k, &a), c.name())),
                Err(e) => failures.push(format!("{f}: {}: {e}", class_tag(&k, &a))),
            }
        }
    }
    verdict(9, &failures, &format!("{runs} random (K,a) over GF(3), GF(9), F3(t), {fields_k} with K a field"), t0.elapsed(), Duration::from_secs(60));
}

#[test]
fn criterion_10_small_idempotents() {
    let t0 = Instant::now();
    let mut failures = vec![];
    let f7 = gf(7);
    let k = make_etale(f7, EtaleSpec::Quadratic(f7.from_i64(-1), f7.from_i64(-1))).unwrap();
    let pq = para(&etale_algebra(&k)).unwrap();
    let n = brute_force_idempotents(&pq).unwrap().len();
    if n != 3 {
        failures.push(format!("para-quadratic over GF(7): {n} idempotents"));
    }
    for f in [gf(2), gfq(2, 2), gf(7)] {
        let z = zorn(f);
        let p = para(&z).unwrap();
        let one = z.unit().unwrap().clone();
        let closed = idempotents(&p).unwrap();
        let elems = closed.elements().unwrap();
        // every idempotent other than 1 is a root of x² + x + 1 in the Hurwitz algebra
        let roots_ok = elems.iter().filter(|e| **e != one).all(|w| is_cube_root_of_unity(&z, w));
        if !roots_ok || !elems.contains(&one) {
            failures.push(format!("{f}: closed form has elements outside 1 + roots"));
        }
        // non-scalar roots of x² + x + 1 form one G2 orbit of size q³(q³ ± 1)
        let q = f.size().unwrap() as i64;
        let eps = if q % 3 == 1 { 1 } else { -1 };
        let expected = 1 + q.pow(3) * (q.pow(3) + eps);
        if elems.len() as i64 != expected {
            failures.push(format!("{f}: closed form has {} elements, expected {expected}", elems.len()));
        }
        if f.size().unwrap() <= 4 {
            let brute = brute_force_idempotents(&p).unwrap();
            if brute != elems {
                failures.push(format!("{f}: brute force {} vs closed form {}", brute.len(), elems.len()));
            }
        }
    }
    verdict(10, &failures, "para-quadratic GF(7); para-Cayley GF(2), GF(4), GF(7)", t0.elapsed(), Duration::from_secs(60));
}
