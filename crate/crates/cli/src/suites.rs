//! Verification suites run by `okubo verify`.
//!
//! Each suite is a function from the run context to a list of named checks.
//! Suites that only make sense in one characteristic return an input error
//! elsewhere.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use okubo_core::classify::{
    class_tag, classify_order3_char3, classify_order3_charnot3_with, extract_ka, g_image, idempotent_inventory,
    ka_equivalent, Order3Kind,
};
use okubo_core::compalg::{
    brute_force_idempotents, check_composition, check_hurwitz, check_symmetric, from_kw, idempotents,
    is_cube_root_of_unity, para, split_okubo, split_okubo_type1, witness_reproduces_table, zorn,
    CanonicalWitness, E1, E2, U1, V1,
};
use okubo_core::exactfield::{make_etale, Decision, EtaleAlgebra, EtaleSpec, Fe, Field, KElem};
use okubo_core::liealg::{chevalley_basis, derivations, inner_derivations, lie_centralizer, root_decomposition, Root};
use okubo_core::linalg::{vscale, vzero, Subspace};
use okubo_core::maps::{tau_normal_form, tau_st, tau_w};
use okubo_core::{Error, Result};

use crate::algebras::kw_okubo;

pub struct Ctx {
    pub field: Field,
    pub seed: u64,
    pub max_height: u32,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub pass: bool,
    pub witness: String,
}

impl Check {
    fn new(id: impl Into<String>, pass: bool, witness: impl Into<String>) -> Check {
        Check { id: id.into(), pass, witness: witness.into() }
    }
}

pub struct Suite {
    pub id: &'static str,
    pub about: &'static str,
    pub run: fn(&Ctx) -> Result<Vec<Check>>,
}

pub static SUITES: &[Suite] = &[
    Suite { id: "table", about: "zorn(F) reproduces the canonical multiplication table", run: table },
    Suite {
        id: "composition",
        about: "composition law on zorn(F); symmetric composition laws on para-zorn and split Okubo",
        run: composition,
    },
    Suite {
        id: "order3",
        about: "char != 3: tau_w is para-Cayley with 2-dim Fix, tau_st is Okubo with split quaternion Fix",
        run: order3,
    },
    Suite {
        id: "normal-forms",
        about: "char 3: the four normal forms classify as types 1-4 with their Segre symbols",
        run: normal_forms,
    },
    Suite {
        id: "chevalley",
        about: "Der(zorn(F)) has dimension 14, root lines, nilpotent root elements; ad_C ideal in char 3",
        run: chevalley,
    },
    Suite {
        id: "lie-centralizers",
        about: "char 3: Lie centralizer dimensions of the normal forms and of tau_{K,1}",
        run: lie_centralizers,
    },
    Suite {
        id: "idempotent-inventory",
        about: "char 3: idempotents of split Okubo are 1 + square-zero elements of Centr(1)",
        run: inventory,
    },
    Suite { id: "gmap", about: "char 3: F^3-dimension of the image of g(x) = n(x, x*x)", run: gmap },
    Suite {
        id: "ka-round-trip",
        about: "char 3: random (K, a) survive from_kw, classification and extraction",
        run: ka_round_trip,
    },
    Suite {
        id: "para-idempotents",
        about: "para-Cayley idempotents are 1 and the roots of x^2 + x + 1",
        run: para_idempotents,
    },
];

pub fn find(id: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.id == id)
}

fn need_char3(f: Field) -> Result<()> {
    if f.characteristic() != 3 {
        return Err(Error::Characteristic(format!("suite needs characteristic 3, not {f}")));
    }
    Ok(())
}

fn table(c: &Ctx) -> Result<Vec<Check>> {
    let f = c.field;
    let z = zorn(f);
    let t = witness_reproduces_table(&z, &CanonicalWitness::standard(f));
    let mut one = vzero(f, 8);
    one[E1] = f.one();
    one[E2] = f.one();
    Ok(vec![
        Check::new(
            "table.products",
            t.is_ok(),
            t.err().map_or("64 products".to_string(), |(i, j)| format!("{}*{}", z.names()[i], z.names()[j])),
        ),
        Check::new("table.unit", z.unit() == Some(&one), "1 = e1 + e2"),
    ])
}

fn composition(c: &Ctx) -> Result<Vec<Check>> {
    let f = c.field;
    let z = zorn(f);
    let comp = check_composition(&z, c.seed);
    let witness = match &comp.witness {
        Some((x, y)) => format!("x = {}, y = {}", z.elem_text(x), z.elem_text(y)),
        None => format!("{:?}", comp.mode),
    };
    let mut out = vec![
        Check::new("composition.zorn", comp.ok, witness),
        Check::new("composition.certificate", comp.certificate, "coefficientwise identity"),
    ];
    let h = check_hurwitz(&z);
    out.push(Check::new("hurwitz.zorn", h.is_ok(), h.err().map(|e| e.to_string()).unwrap_or_default()));
    for (id, s) in [("symmetric.para-zorn", para(&z)?), ("symmetric.split-okubo", split_okubo(f))] {
        let r = check_symmetric(&s);
        out.push(Check::new(id, r.is_ok(), r.err().map(|e| e.to_string()).unwrap_or_default()));
    }
    Ok(out)
}

fn primitive_cube_root(f: Field) -> Option<Fe> {
    f.elements()?.into_iter().find(|w| !w.is_one() && (&(w * w) + w + f.one()).is_zero())
}

fn order3(c: &Ctx) -> Result<Vec<Check>> {
    let f = c.field;
    if f.characteristic() == 3 {
        return Err(Error::Characteristic("suite needs characteristic other than 3".into()));
    }
    let z = zorn(f);
    let mut out = vec![];
    let st = classify_order3_charnot3_with(&z, &tau_st(&z)?, c.max_height)?;
    let pass = match &st.kind {
        Order3Kind::Okubo { quaternion_split, .. } => st.fix_dim == 4 && *quaternion_split == Decision::Yes,
        _ => false,
    };
    out.push(Check::new("tau-st", pass, format!("{}, dim Fix {}", st.name(), st.fix_dim)));
    match primitive_cube_root(f) {
        Some(om) => {
            let mut w = vzero(f, 8);
            w[E1] = om.clone();
            w[E2] = &om * &om;
            let cl = classify_order3_charnot3_with(&z, &tau_w(&z, &w)?, c.max_height)?;
            let pass = matches!(cl.kind, Order3Kind::ParaCayley { .. }) && cl.fix_dim == 2;
            out.push(Check::new("tau-w", pass, format!("{}, dim Fix {}", cl.name(), cl.fix_dim)));
        }
        None => out.push(Check::new("tau-w", true, "skipped: no primitive cube root of 1 in F")),
    }
    Ok(out)
}

fn normal_forms(c: &Ctx) -> Result<Vec<Check>> {
    let f = c.field;
    need_char3(f)?;
    let z = zorn(f);
    let segre = ["(2^2,1^4)", "(3^2,1^2)", "(3,2^2,1)", "(3,2^2,1)"];
    let mut out = vec![];
    for kind in 1..=4u8 {
        let cl = classify_order3_char3(&z, &tau_normal_form(&z, kind)?)?;
        let s = cl.segre.as_ref().map(|s| s.to_string()).unwrap_or_default();
        let pass = cl.type_number() == Some(kind) && s == segre[kind as usize - 1];
        out.push(Check::new(format!("normal-form.{kind}"), pass, format!("{}, Segre {s}", cl.name())));
    }
    let cb = chevalley_basis(&z)?;
    let exp = okubo_core::liealg::exp_root(&z, &cb, Root::diff(2, 3), &f.one())?;
    out.push(Check::new("normal-form.1-is-exp", exp == tau_normal_form(&z, 1)?, "exp(x_{e2-e3})"));
    Ok(out)
}

fn chevalley(c: &Ctx) -> Result<Vec<Check>> {
    let f = c.field;
    let z = zorn(f);
    let d = derivations(&z)?;
    let cb = chevalley_basis(&z)?;
    let mut out = vec![Check::new("der.dim", d.dim() == 14, format!("dim Der = {}", d.dim()))];
    let rd = root_decomposition(&d, &cb.h1, &cb.h2)?;
    if rd.merged {
        out.push(Check::new("der.root-lines", true, "skipped: roots coincide over F"));
    } else {
        let lines = rd.spaces.iter().filter(|w| !w.roots.is_empty() && w.space.dim() == 1).count();
        let cartan = rd.zero_space().map_or(0, |w| w.space.dim());
        out.push(Check::new("der.root-lines", lines == 12 && cartan == 2, format!("{lines} lines, Cartan {cartan}")));
    }
    let mut long_ok = true;
    let mut short_ok = true;
    for e in &cb.elements {
        let x = cb.in_canonical_coords(&e.x);
        if e.root.is_long() {
            long_ok &= x.mul(&x).is_zero();
        } else {
            short_ok &= x.pow(3).is_zero();
        }
    }
    out.push(Check::new("chevalley.long-square", long_ok, "x_long^2 = 0"));
    out.push(Check::new("chevalley.short-cube", short_ok, "x_short^3 = 0"));
    let mut sq_ok = true;
    for i in 1..=3 {
        let x = cb.in_canonical_coords(cb.x(Root::eps(i)).ok_or_else(|| Error::Inconsistent("missing root".into()))?);
        sq_ok &= x.mul(&x).mul_vec(&z.basis(V1 + i - 1)) == vscale(&f.from_i64(2), &z.basis(U1 + i - 1));
    }
    out.push(Check::new("chevalley.short-square", sq_ok, "x_ei^2(vi) = 2ui"));
    if f.characteristic() == 3 {
        let ad = inner_derivations(&z);
        let flat: Vec<Vec<Fe>> = ad.iter().map(|m| m.entries().to_vec()).collect();
        let span = Subspace::span(f, 64, &flat);
        let ideal = d.is_ideal(&ad);
        out.push(Check::new("inner.ideal", span.dim() == 7 && ideal, format!("dim ad_C = {}", span.dim())));
    }
    Ok(out)
}

fn lie_centralizers(c: &Ctx) -> Result<Vec<Check>> {
    let f = c.field;
    need_char3(f)?;
    let z = zorn(f);
    let d = derivations(&z)?;
    let mut out = vec![];
    for (kind, lower) in [(1u8, 8usize), (3, 8), (4, 6)] {
        let dim = lie_centralizer(&d, tau_normal_form(&z, kind)?.matrix()).dim();
        out.push(Check::new(format!("centralizer.type{kind}"), dim >= lower, format!("dim {dim} >= {lower}")));
    }
    let dim = lie_centralizer(&d, tau_st(&z)?.matrix()).dim();
    out.push(Check::new("centralizer.tau-st", dim > 4, format!("dim {dim} > 4")));
    let k = make_etale(f, EtaleSpec::Split)?;
    let kw = from_kw(&k, &k.one())?;
    let dim = lie_centralizer(&derivations(&kw.algebra)?, kw.tau.matrix()).dim();
    out.push(Check::new("centralizer.tau-k1", dim > 4, format!("dim {dim} > 4")));
    Ok(out)
}

fn inventory(c: &Ctx) -> Result<Vec<Check>> {
    let f = c.field;
    need_char3(f)?;
    let s = split_okubo(f);
    let inv = idempotent_inventory(&s)?;
    let mut out = vec![];
    let flag = |b: Option<bool>| b == Some(true);
    out.push(Check::new(
        "inventory.all",
        flag(inv.full_closed_form),
        format!("{} idempotents = 1 + square-zero part of Centr(1)", inv.entries.len()),
    ));
    out.push(Check::new(
        "inventory.singular",
        flag(inv.singular_closed_form),
        format!("{} singular = 1 + nonzero rad Centr(1)", inv.count("singular")),
    ));
    out.push(Check::new("inventory.quaternionic", inv.count("quaternionic") == 1, format!("{}", inv.count("quaternionic"))));
    if f.is_finite() {
        let tags: Vec<String> = inv.classes.iter().map(|(k, a)| class_tag(k, a)).collect();
        out.push(Check::new("inventory.classes", inv.classes.len() == 2, tags.join(" ")));
    }
    if f.size() == Some(3) {
        let t1 = split_okubo_type1(f)?;
        let n = brute_force_idempotents(&t1)?.len();
        out.push(Check::new("inventory.brute-force", n == inv.entries.len(), format!("{n} by brute force")));
    }
    Ok(out)
}

fn dim_text(d: Option<usize>) -> String {
    d.map_or("dimension unknown".to_string(), |d| format!("dimension {d}"))
}

fn gmap(c: &Ctx) -> Result<Vec<Check>> {
    let f = c.field;
    need_char3(f)?;
    let g = g_image(&split_okubo(f))?;
    let mut out = vec![Check::new("gmap.split-okubo", g.dimension == Some(1), dim_text(g.dimension))];
    if !f.is_finite() {
        let k = make_etale(f, EtaleSpec::Split)?;
        let t = f.t();
        let inv = t.inv().ok_or_else(|| Error::Inconsistent("t = 0".into()))?;
        let a = k.from_pair(&t, &inv).ok_or_else(|| Error::Inconsistent("(t, 1/t)".into()))?;
        let g = g_image(&kw_okubo(&from_kw(&k, &a)?)?)?;
        out.push(Check::new("gmap.kw-split-t", g.dimension == Some(3), dim_text(g.dimension)));
    }
    Ok(out)
}

/// A random quadratic étale K and a norm-one β/β̄ in it.
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
        if let Some(a) = k.inv(&k.conj(&beta)).map(|i| k.mul(&beta, &i)) {
            if k.norm(&a).is_one() {
                return (k, a);
            }
        }
    }
}

fn ka_round_trip(c: &Ctx) -> Result<Vec<Check>> {
    let f = c.field;
    need_char3(f)?;
    let (count, height) = if f.is_finite() { (10, c.max_height.max(1)) } else { (5, c.max_height.min(2)) };
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let mut out = vec![];
    for i in 0..count {
        let (k, a) = random_ka(f, &mut rng, height);
        let tag = class_tag(&k, &a);
        let kw = from_kw(&k, &a)?;
        let (pass, witness) = match extract_ka(&kw.algebra, &kw.tau) {
            Ok(x) => {
                let d = ka_equivalent(&k, &a, &x.k, &x.a)?;
                (d == Decision::Yes, format!("{tag} -> {} ({d})", class_tag(&x.k, &x.a)))
            }
            Err(e) => (false, format!("{tag}: {e}")),
        };
        let type2 = matches!(classify_order3_char3(&kw.algebra, &kw.tau)?.kind, Order3Kind::Type2 { .. });
        out.push(Check::new(format!("round-trip.{i}"), pass && type2, witness));
    }
    Ok(out)
}

fn para_idempotents(c: &Ctx) -> Result<Vec<Check>> {
    let f = c.field;
    let q = f.size().ok_or_else(|| Error::Precondition("suite needs a finite field".into()))? as i64;
    let z = zorn(f);
    let p = para(&z)?;
    let one = z.unit().ok_or(Error::NotHurwitz("para-idempotents"))?.clone();
    let set = idempotents(&p)?;
    let elems = set.elements().ok_or_else(|| Error::Precondition("idempotent set is not finite".into()))?;
    let roots = elems.iter().filter(|e| **e != one).all(|w| is_cube_root_of_unity(&z, w));
    let mut out = vec![Check::new("para.roots", roots && elems.contains(&one), "1 and roots of x^2 + x + 1")];
    if f.characteristic() != 3 {
        let eps = if q % 3 == 1 { 1 } else { -1 };
        let expected = 1 + q.pow(3) * (q.pow(3) + eps);
        out.push(Check::new(
            "para.count",
            elems.len() as i64 == expected,
            format!("{} found, 1 + q^3(q^3 {} 1) = {expected}", elems.len(), if eps == 1 { "+" } else { "-" }),
        ));
    }
    if q <= 4 {
        let brute = brute_force_idempotents(&p)?;
        out.push(Check::new("para.brute-force", brute == elems, format!("{} by brute force", brute.len())));
    }
    Ok(out)
}
