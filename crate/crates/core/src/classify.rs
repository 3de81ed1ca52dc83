//! Decision procedures: order-3 automorphisms of Cayley algebras, the (K, a)
//! invariant in characteristic 3, kinds of idempotents in symmetric
//! composition algebras, the semilinear map g and splitness of Okubo
//! algebras.
//!
//! Conjugacy is always decided through invariants (fixed subalgebras, Segre
//! symbols, para-units, cube classes), never by searching the group.

use std::fmt;

use rayon::prelude::*;

use crate::compalg::{
    brute_force_idempotents, check_symmetric, commutative_center, enumerate_span, find_para_unit, idempotents,
    is_cube_root_of_unity, nonisotropic_perp, petersson, radical_of, Algebra, Elem, IdempotentSet,
};
use crate::error::{Error, Result};
use crate::exactfield::{etale_iso_test, make_etale, Decision, EtaleAlgebra, EtaleSpec, Fe, Field, KElem};
use crate::linalg::{vadd, vaxpy, vis_zero, vscale, Matrix, Subspace};
use crate::maps::{fix, hurwitz_from_idempotent, segre_symbol, tau_from_idempotent, tau_w, Automorphism, SegreSymbol};
use crate::search::{coefficient_pool, find_in_span, SEARCH_CAP};

/// Coordinate height for searches over infinite fields.
pub const DEFAULT_HEIGHT: u32 = 8;

/// Ordered key/value lines, rendered as "key: value".
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<(String, String)>,
}

impl Report {
    pub fn push(&mut self, key: &str, value: impl fmt::Display) {
        self.lines.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.lines {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}

/// "[split; a=(t,1/t)]"
pub fn class_tag(k: &EtaleAlgebra, a: &KElem) -> String {
    format!("[{}; a={}]", k.iso_label(), k.elem_text(a))
}

#[derive(Clone, Debug)]
pub enum Order3Kind {
    /// τ(x) = w·x·w² with w² + w + 1 = 0.
    ParaCayley { w: Elem },
    /// Fix(τ) is a quaternion subalgebra Q and τ(u) = w·u on Q^⊥.
    Okubo { quaternion: Subspace, w: Elem, quaternion_split: Decision },
    Type1,
    Type2 { k: EtaleAlgebra, a: KElem },
    /// τ = τ_w for the para-unit w of C_τ.
    Type3 { w: Elem },
    Type4,
}

#[derive(Clone, Debug)]
pub struct Order3Class {
    pub kind: Order3Kind,
    pub fix_dim: usize,
    pub segre: Option<SegreSymbol>,
}

impl Order3Class {
    /// 1 to 4 for the characteristic-3 types.
    pub fn type_number(&self) -> Option<u8> {
        match self.kind {
            Order3Kind::Type1 => Some(1),
            Order3Kind::Type2 { .. } => Some(2),
            Order3Kind::Type3 { .. } => Some(3),
            Order3Kind::Type4 => Some(4),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            Order3Kind::ParaCayley { .. } => "para-cayley",
            Order3Kind::Okubo { .. } => "okubo",
            Order3Kind::Type1 => "type1",
            Order3Kind::Type2 { .. } => "type2",
            Order3Kind::Type3 { .. } => "type3",
            Order3Kind::Type4 => "type4",
        }
    }

    pub fn report(&self, a: &Algebra) -> Report {
        let mut r = Report::default();
        r.push("kind", self.name());
        r.push("fix_dim", self.fix_dim);
        if let Some(s) = &self.segre {
            r.push("segre", s);
        }
        match &self.kind {
            Order3Kind::ParaCayley { w } => {
                r.push("petersson", "para-cayley");
                r.push("w", a.elem_text(w));
            }
            Order3Kind::Okubo { w, quaternion_split, .. } => {
                r.push("petersson", "okubo");
                r.push("w", a.elem_text(w));
                r.push("fix", if *quaternion_split == Decision::Yes { "split quaternion" } else { "quaternion" });
                r.push("quaternion_split", quaternion_split);
            }
            Order3Kind::Type2 { k, a: ka } => r.push("class", class_tag(k, ka)),
            Order3Kind::Type3 { w } => r.push("para_unit", a.elem_text(w)),
            _ => {}
        }
        r.push("method", "invariants");
        r
    }
}

fn check_order3(a: &Algebra, tau: &Automorphism) -> Result<Elem> {
    let one = a.unit().ok_or(Error::NotHurwitz("order-3 classification"))?.clone();
    if a.dim() != 8 {
        return Err(Error::Dimension(a.dim()));
    }
    let m = tau.matrix();
    if m.is_identity() || !m.pow(3).is_identity() {
        return Err(Error::NotOrder3);
    }
    Ok(one)
}

fn search_height(f: Field, height: u32) -> u32 {
    f.size().map_or(height, |q| q.min(u32::MAX as u64) as u32)
}

/// Does the subspace contain a nonzero isotropic vector? Exhaustive when the
/// search covers every coefficient vector, otherwise `Unknown` on failure.
pub fn has_isotropic_vector(a: &Algebra, s: &Subspace, height: u32) -> Decision {
    let f = a.field();
    let pool = coefficient_pool(f, height);
    if find_in_span(f, s.basis(), &pool, SEARCH_CAP, |x| a.norm(x).is_zero()).is_some() {
        return Decision::Yes;
    }
    let exhaustive =
        f.is_finite() && (pool.len() as f64).powi(s.dim() as i32) <= SEARCH_CAP as f64;
    if exhaustive {
        Decision::No
    } else {
        Decision::Unknown
    }
}

pub fn classify_order3_charnot3(a: &Algebra, tau: &Automorphism) -> Result<Order3Class> {
    classify_order3_charnot3_with(a, tau, DEFAULT_HEIGHT)
}

pub fn classify_order3_charnot3_with(a: &Algebra, tau: &Automorphism, height: u32) -> Result<Order3Class> {
    let f = a.field();
    if f.characteristic() == 3 {
        return Err(Error::Characteristic("use the characteristic-3 classifier".into()));
    }
    let one = check_order3(a, tau)?;
    let fx = fix(tau);
    let u = nonisotropic_perp(a, fx.basis(), search_height(f, height))?;
    let nu = a.norm(&u).inv().expect("nonisotropic");
    // τ(u)·ū = n(u)·w² on the para-Cayley side and n(u)·w on the Okubo side
    let t = a.mul(&tau.apply(&u), &a.conj(&u)?);
    let t = vscale(&nu, &t);
    let kind = match fx.dim() {
        2 => {
            let w = a.mul(&t, &t);
            if !is_cube_root_of_unity(a, &w) || w == one {
                return Err(Error::Inconsistent("recovered w is not a primitive cube root of 1".into()));
            }
            if tau_w(a, &w)?.matrix() != tau.matrix() {
                return Err(Error::Inconsistent("tau is not x -> w x w^2".into()));
            }
            Order3Kind::ParaCayley { w }
        }
        4 => {
            if !fx.contains(&t) || !is_cube_root_of_unity(a, &t) {
                return Err(Error::Inconsistent("recovered w is not a cube root of 1 in Fix".into()));
            }
            let split = has_isotropic_vector(a, &fx, height);
            Order3Kind::Okubo { quaternion: fx.clone(), w: t, quaternion_split: split }
        }
        d => return Err(Error::Inconsistent(format!("Fix(tau) has dimension {d}"))),
    };
    Ok(Order3Class { kind, fix_dim: fx.dim(), segre: None })
}

pub fn classify_order3_char3(a: &Algebra, tau: &Automorphism) -> Result<Order3Class> {
    if a.field().characteristic() != 3 {
        return Err(Error::Characteristic("characteristic 3 required".into()));
    }
    check_order3(a, tau)?;
    let f = a.field();
    let n = tau.matrix().sub(&Matrix::identity(f, 8));
    let segre = segre_symbol(&n)?;
    let fix_dim = fix(tau).dim();
    let kind = if n.mul(&n).is_zero() {
        Order3Kind::Type1
    } else if segre == SegreSymbol(vec![3, 3, 1, 1]) {
        let ka = extract_ka(a, tau)?;
        Order3Kind::Type2 { k: ka.k, a: ka.a }
    } else if segre == SegreSymbol(vec![3, 2, 2, 1]) {
        let c = petersson(a, tau.matrix())?;
        match find_para_unit(&c) {
            Some(w) => Order3Kind::Type3 { w },
            None => Order3Kind::Type4,
        }
    } else {
        return Err(Error::UnexpectedSegre(segre.to_string()));
    };
    Ok(Order3Class { kind, fix_dim, segre: Some(segre) })
}

/// Output of [`extract_ka`]: K ⊂ Fix(τ) as an abstract étale algebra, the
/// norm-one element a, the generator of K inside C and the normalized u.
#[derive(Clone, Debug)]
pub struct KaExtraction {
    pub k: EtaleAlgebra,
    pub a: KElem,
    pub k_generator: Elem,
    pub u: Elem,
}

/// K = F1 ⊕ Fv inside a Cayley algebra with the hermitian form and cross
/// product on W = K^⊥.
struct KwFrame<'a> {
    alg: &'a Algebra,
    k: EtaleAlgebra,
    one: Elem,
    v: Elem,
    gram_inv: Matrix,
}

impl KwFrame<'_> {
    fn embed(&self, x: &KElem) -> Elem {
        let mut out = vscale(&x.a0, &self.one);
        vaxpy(&mut out, &x.a1, &self.v);
        out
    }

    /// Orthogonal projection onto K, in the basis {1, v}.
    fn project(&self, z: &[Fe]) -> KElem {
        let rhs = [self.alg.polar(z, &self.one), self.alg.polar(z, &self.v)];
        let c = self.gram_inv.mul_vec(&rhs);
        self.k.elem(c[0].clone(), c[1].clone())
    }

    fn act(&self, kappa: &KElem, x: &[Fe]) -> Elem {
        self.alg.mul(&self.embed(kappa), x)
    }

    /// x·y = −σ(x,y) + x×y
    fn sigma(&self, x: &[Fe], y: &[Fe]) -> KElem {
        self.k.neg(&self.project(&self.alg.mul(x, y)))
    }

    fn cross(&self, x: &[Fe], y: &[Fe]) -> Elem {
        vadd(&self.alg.mul(x, y), &self.embed(&self.sigma(x, y)))
    }

    fn phi(&self, x: &[Fe], y: &[Fe], z: &[Fe]) -> KElem {
        self.sigma(x, &self.cross(y, z))
    }
}

/// Recovers (K, a) with τ conjugate to τ_{K,a}, for τ of type 2.
///
/// K is any quadratic étale subalgebra of Fix(τ). Then u ∈ K^⊥ is chosen with
/// {u, τu, τ²u} a K-basis, rescaled so n(δu) = −1 (δ = τ − id), and moved to
/// u + a'·δu + b'·δ²u so that σ has matrix [[0,−1,−1],[−1,0,−1],[−1,−1,0]] in
/// the basis {u, τu, τ²u}. Then a = Φ(u, τu, τ²u).
pub fn extract_ka(alg: &Algebra, tau: &Automorphism) -> Result<KaExtraction> {
    let f = alg.field();
    let one = check_order3(alg, tau)?;
    let fx = fix(tau);
    if fx.dim() != 4 {
        return Err(Error::Precondition(format!("Fix(tau) has dimension {}, expected 4", fx.dim())));
    }
    let pool = coefficient_pool(f, 3);
    let four = f.from_i64(4);
    let disc = |v: &Elem| {
        let t = alg.polar(v, &one);
        &(&t * &t) - &(&four * &alg.norm(v))
    };
    let etale = |v: &Elem| if f.characteristic() == 2 { !alg.polar(v, &one).is_zero() } else { !disc(v).is_zero() };
    let v = find_in_span(f, fx.basis(), &pool, SEARCH_CAP, etale)
        .ok_or_else(|| Error::SearchExhausted("no quadratic etale subalgebra in Fix(tau)".into()))?;
    // v² = T(v)v − n(v)1
    let k = make_etale(f, EtaleSpec::Quadratic(alg.polar(&v, &one), -alg.norm(&v)))?;
    let gram = Matrix::from_rows(
        f,
        &[vec![alg.polar(&one, &one), alg.polar(&one, &v)], vec![alg.polar(&v, &one), alg.polar(&v, &v)]],
    );
    let gram_inv = gram.inverse().ok_or_else(|| Error::Inconsistent("K is degenerate".into()))?;
    let fr = KwFrame { alg, k: k.clone(), one: one.clone(), v: v.clone(), gram_inv };
    let w = alg.perp(&Subspace::span(f, 8, &[one.clone(), v.clone()]));
    let delta = tau.matrix().sub(&Matrix::identity(f, 8));
    let d = |x: &[Fe]| delta.mul_vec(x);
    let t = |x: &[Fe]| tau.apply(x);

    // (i) δ²(u) must generate δ²(W) as a K-module
    let generic = |u: &Elem| {
        let d2 = d(&d(u));
        !vis_zero(&d2) && Subspace::span(f, 8, &[d2.clone(), alg.mul(&v, &d2)]).dim() == 2
    };
    let u = find_in_span(f, w.basis(), &pool, SEARCH_CAP, generic)
        .ok_or_else(|| Error::SearchExhausted("no u with {u, tau u, tau^2 u} a K-basis".into()))?;

    // (ii) n(Φ(u, τu, τ²u)) = −n(δu)³
    let a0 = fr.phi(&u, &t(&u), &t(&t(&u)));
    let alpha = alg.norm(&d(&u));
    if k.norm(&a0) != -alpha.pow(3) {
        return Err(Error::Inconsistent("n(Phi(u, tau u, tau^2 u)) != -n(delta u)^3".into()));
    }

    // (iv) ũ = (α a⁻¹)·u has n(δũ) = −1
    let scale = k.scale(&alpha, &k.inv(&a0).ok_or_else(|| Error::Inconsistent("Phi vanishes".into()))?);
    let u1 = fr.act(&scale, &u);
    if !(-alg.norm(&d(&u1))).is_one() {
        return Err(Error::Inconsistent("rescaled u has n(delta u) != -1".into()));
    }
    // a' = q·v makes σ(u', δu') scalar; the v-coordinate is affine in q
    let vd = alg.mul(&v, &d(&u1));
    let shifted = |q: &Fe| {
        let mut x = u1.clone();
        vaxpy(&mut x, q, &vd);
        x
    };
    let vcoord = |q: &Fe| {
        let x = shifted(q);
        fr.sigma(&x, &d(&x)).a1
    };
    let c0 = vcoord(&f.zero());
    let slope = &vcoord(&f.one()) - &c0;
    let q = (-&c0).try_div(&slope).map_err(|_| Error::Inconsistent("cannot make sigma(u, delta u) scalar".into()))?;
    let u2 = shifted(&q);
    // b' = β·1 makes n(u) = 0, and n(u + βδ²u) is affine in β
    let d2 = d(&d(&u2));
    let beta = (-alg.norm(&u2))
        .try_div(&alg.polar(&u2, &d2))
        .map_err(|_| Error::Inconsistent("n(u, delta^2 u) vanishes".into()))?;
    let mut ustar = u2;
    vaxpy(&mut ustar, &beta, &d2);

    let orbit = [ustar.clone(), t(&ustar), t(&t(&ustar))];
    for i in 0..3 {
        for j in 0..3 {
            let expect = if i == j { k.zero() } else { k.scalar(f.from_i64(-1)) };
            if fr.sigma(&orbit[i], &orbit[j]) != expect {
                return Err(Error::Inconsistent(format!("sigma(tau^{i} u, tau^{j} u) is not normalized")));
            }
        }
    }
    let a = fr.phi(&orbit[0], &orbit[1], &orbit[2]);
    if !k.norm(&a).is_one() {
        return Err(Error::Inconsistent("extracted a has norm != 1".into()));
    }
    Ok(KaExtraction { k, a, k_generator: v, u: ustar })
}

fn kpow(k: &EtaleAlgebra, x: &KElem, mut e: u64) -> KElem {
    let mut base = x.clone();
    let mut r = k.one();
    while e > 0 {
        if e & 1 == 1 {
            r = k.mul(&r, &base);
        }
        base = k.mul(&base, &base);
        e >>= 1;
    }
    r
}

/// Cubing is additive in characteristic 3 and X³ = (b² + c)X + bc, so
/// (y₀ + y₁X)³ = (y₀³ + bc·y₁³) + (b² + c)y₁³X. Here b² + c is the
/// discriminant, hence nonzero.
fn is_cube_char3(k: &EtaleAlgebra, c: &KElem) -> Decision {
    let disc = &(k.b() * k.b()) + k.c();
    let Ok(y1_cubed) = c.a1.try_div(&disc) else {
        return Decision::Unknown;
    };
    let y0_cubed = &c.a0 - &(&(k.b() * k.c()) * &y1_cubed);
    let cube = |x: &Fe| if x.is_zero() { Ok(true) } else { x.is_cube() };
    match (cube(&y1_cubed), cube(&y0_cubed)) {
        (Ok(x), Ok(y)) => Decision::from_bool(x && y),
        _ => Decision::Unknown,
    }
}

/// Is c a cube in K?
fn is_cube_in(k: &EtaleAlgebra, c: &KElem) -> Decision {
    let f = k.field();
    if k.is_split() == Decision::Yes {
        let Some((p, q)) = k.to_pair(c) else {
            return Decision::Unknown;
        };
        return match (p.is_cube(), q.is_cube()) {
            (Ok(x), Ok(y)) => Decision::from_bool(x && y),
            _ => Decision::Unknown,
        };
    }
    if f.characteristic() == 3 {
        return is_cube_char3(k, c);
    }
    match f.size() {
        Some(q) => {
            let order = q * q - 1;
            if order % 3 != 0 {
                Decision::Yes
            } else {
                Decision::from_bool(kpow(k, c, order / 3) == k.one())
            }
        }
        None => Decision::Unknown,
    }
}

/// Is there an isomorphism φ: K → K′ with φ(a) ∈ K′³·a′?
pub fn ka_equivalent(k: &EtaleAlgebra, a: &KElem, k2: &EtaleAlgebra, a2: &KElem) -> Result<Decision> {
    if !k.norm(a).is_one() || !k2.norm(a2).is_one() {
        return Err(Error::Precondition("both elements must have norm 1".into()));
    }
    match etale_iso_test(k, k2) {
        Decision::No => return Ok(Decision::No),
        Decision::Unknown => return Ok(Decision::Unknown),
        Decision::Yes => {}
    }
    let Some(img) = k.iso_to(k2) else {
        return Ok(Decision::Unknown);
    };
    let a2_inv = k2.inv(a2).expect("norm one");
    let phi_a = k.apply_map(k2, &img, a);
    let mut unknown = false;
    for c in [phi_a.clone(), k2.conj(&phi_a)] {
        match is_cube_in(k2, &k2.mul(&c, &a2_inv)) {
            Decision::Yes => return Ok(Decision::Yes),
            Decision::Unknown => unknown = true,
            Decision::No => {}
        }
    }
    Ok(if unknown { Decision::Unknown } else { Decision::No })
}

#[derive(Clone, Debug)]
pub enum IdempotentClass {
    ParaUnit,
    Quaternionic,
    Quadratic { k: EtaleAlgebra, a: KElem },
    Singular,
    /// Characteristic ≠ 3, Fix(τ_e) a quaternion algebra.
    OkuboCharNot3 { quaternion_split: Decision },
    /// Characteristic ≠ 3, Fix(τ_e) quadratic: e is not the para-unit of a
    /// para-Cayley algebra.
    ParaCayley { w: Elem },
}

impl IdempotentClass {
    pub fn name(&self) -> &'static str {
        match self {
            IdempotentClass::ParaUnit => "para-unit",
            IdempotentClass::Quaternionic => "quaternionic",
            IdempotentClass::Quadratic { .. } => "quadratic",
            IdempotentClass::Singular => "singular",
            IdempotentClass::OkuboCharNot3 { .. } => "okubo",
            IdempotentClass::ParaCayley { .. } => "para-cayley",
        }
    }

    pub fn report(&self) -> Report {
        let mut r = Report::default();
        r.push("kind", self.name());
        match self {
            IdempotentClass::Quadratic { k, a } => r.push("class", class_tag(k, a)),
            IdempotentClass::OkuboCharNot3 { quaternion_split } => r.push("quaternion_split", quaternion_split),
            _ => {}
        }
        r.push("method", "invariants");
        r
    }
}

pub fn classify_idempotent(s: &Algebra, e: &[Fe]) -> Result<IdempotentClass> {
    let tau = tau_from_idempotent(s, e)?;
    if tau.matrix().is_identity() {
        return Ok(IdempotentClass::ParaUnit);
    }
    let h = hurwitz_from_idempotent(s, e)?;
    let tau = Automorphism::new(&h, tau.matrix().clone())?;
    if s.field().characteristic() == 3 {
        let c = classify_order3_char3(&h, &tau)?;
        return match c.kind {
            Order3Kind::Type1 => Ok(IdempotentClass::Quaternionic),
            Order3Kind::Type2 { k, a } => Ok(IdempotentClass::Quadratic { k, a }),
            Order3Kind::Type4 => Ok(IdempotentClass::Singular),
            Order3Kind::Type3 { .. } => Err(Error::ParaCayleyIdempotent),
            _ => unreachable!("characteristic-3 classifier"),
        };
    }
    let c = classify_order3_charnot3(&h, &tau)?;
    match c.kind {
        Order3Kind::Okubo { quaternion_split, .. } => Ok(IdempotentClass::OkuboCharNot3 { quaternion_split }),
        Order3Kind::ParaCayley { w } => Ok(IdempotentClass::ParaCayley { w }),
        _ => unreachable!("characteristic-not-3 classifier"),
    }
}

/// g(x) = n(x, x*x)
pub fn g_map(s: &Algebra, x: &[Fe]) -> Fe {
    s.polar(x, &s.mul(x, x))
}

/// g(S) = F³-span of the g(bᵢ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GImage {
    pub field: Field,
    pub values: Vec<Fe>,
    /// Dimension over F³, when it can be computed.
    pub dimension: Option<usize>,
}

pub fn g_image(s: &Algebra) -> Result<GImage> {
    let f = s.field();
    if f.characteristic() != 3 {
        return Err(Error::Characteristic(format!("g is semilinear only in characteristic 3, not over {f}")));
    }
    let values: Vec<Fe> = (0..s.dim()).map(|i| g_map(s, &s.basis(i))).collect();
    let nonzero: Vec<&Fe> = values.iter().filter(|x| !x.is_zero()).collect();
    let dimension = if nonzero.is_empty() {
        Some(0)
    } else if f.is_finite() {
        Some(1)
    } else {
        let rows = nonzero
            .iter()
            .map(|x| x.f3_subfield_decompose().map(|c| c.to_vec()))
            .collect::<std::result::Result<Vec<_>, _>>();
        rows.ok().map(|r| Matrix::from_rows(f, &r).rank())
    };
    Ok(GImage { field: f, values, dimension })
}

/// Is the Okubo algebra S split?
pub fn okubo_split_test(s: &Algebra) -> Result<Decision> {
    okubo_split_test_with(s, DEFAULT_HEIGHT)
}

pub fn okubo_split_test_with(s: &Algebra, height: u32) -> Result<Decision> {
    if s.dim() != 8 {
        return Err(Error::Dimension(s.dim()));
    }
    if find_para_unit(s).is_some() {
        return Err(Error::HasParaUnit);
    }
    let f = s.field();
    if f.characteristic() == 3 {
        return Ok(match g_image(s)?.dimension {
            Some(1) => Decision::Yes,
            Some(_) => Decision::No,
            None => Decision::Unknown,
        });
    }
    let isotropic = has_isotropic_vector(s, &Subspace::full(f, 8), search_height(f, height));
    let has_idempotent = match s.tag().known_idempotent().filter(|e| s.is_idempotent(e)) {
        Some(_) => Decision::Yes,
        None => match idempotents(s) {
            Ok(set) => Decision::from_bool(!set.is_empty()),
            Err(_) => Decision::Unknown,
        },
    };
    Ok(isotropic.and(has_idempotent))
}

#[derive(Clone, Debug)]
pub struct InventoryEntry {
    pub element: Elem,
    pub class: IdempotentClass,
}

/// Idempotents of a characteristic-3 Okubo algebra with their kinds, and the
/// closed-form descriptions checked against them.
#[derive(Clone, Debug)]
pub struct Inventory {
    pub entries: Vec<InventoryEntry>,
    /// Representatives of the distinct classes [K, a] among quadratic idempotents.
    pub classes: Vec<(EtaleAlgebra, KElem)>,
    /// Singular set = {e + x : 0 ≠ x ∈ rad Centr(e)} for the quaternionic e.
    pub singular_closed_form: Option<bool>,
    /// Full set = {e + x : x ∈ Centr(e), x*x = 0} for the quaternionic e.
    pub full_closed_form: Option<bool>,
    /// The closed-form set when no enumeration was possible.
    pub closed_form: Option<IdempotentSet>,
}

impl Inventory {
    pub fn count(&self, kind: &str) -> usize {
        self.entries.iter().filter(|e| e.class.name() == kind).count()
    }

    pub fn of_kind(&self, kind: &str) -> Vec<&Elem> {
        self.entries.iter().filter(|e| e.class.name() == kind).map(|e| &e.element).collect()
    }

    pub fn report(&self, s: &Algebra) -> Report {
        let mut r = Report::default();
        r.push("idempotents", self.entries.len());
        for kind in ["quaternionic", "quadratic", "singular"] {
            r.push(kind, self.count(kind));
        }
        let tags: Vec<String> = self.classes.iter().map(|(k, a)| class_tag(k, a)).collect();
        r.push("classes", tags.join(" "));
        if let Some(b) = self.singular_closed_form {
            r.push("singular_closed_form", b);
        }
        if let Some(b) = self.full_closed_form {
            r.push("full_closed_form", b);
        }
        if let Some(IdempotentSet::Affine { base, span }) = &self.closed_form {
            r.push("closed_form", format!("{} + rad Centr (dim {})", s.elem_text(base), span.dim()));
        }
        r
    }
}

pub fn idempotent_inventory(s: &Algebra) -> Result<Inventory> {
    let f = s.field();
    if f.characteristic() != 3 {
        return Err(Error::Characteristic("the inventory is for characteristic 3".into()));
    }
    if s.dim() != 8 {
        return Err(Error::Dimension(s.dim()));
    }
    if !f.is_finite() {
        let set = idempotents(s)?;
        if let IdempotentSet::Affine { base, span } = &set {
            // spot-check the affine description on the spanning vectors
            let mut ok = s.is_idempotent(base);
            for r in span.basis() {
                ok &= s.is_idempotent(&vadd(base, r));
            }
            if !ok {
                return Err(Error::Inconsistent("affine idempotent description fails".into()));
            }
            let class = classify_idempotent(s, base)?;
            return Ok(Inventory {
                entries: vec![InventoryEntry { element: base.clone(), class }],
                classes: vec![],
                singular_closed_form: None,
                full_closed_form: None,
                closed_form: Some(set),
            });
        }
        return Err(Error::NoStrategy("no structural description of the idempotents".into()));
    }
    let elements = brute_force_idempotents(s)?;
    let entries = elements
        .into_par_iter()
        .map(|e| classify_idempotent(s, &e).map(|class| InventoryEntry { element: e, class }))
        .collect::<Result<Vec<_>>>()?;
    let mut classes: Vec<(EtaleAlgebra, KElem)> = vec![];
    for e in &entries {
        if let IdempotentClass::Quadratic { k, a } = &e.class {
            let mut seen = false;
            for (k2, a2) in &classes {
                if ka_equivalent(k, a, k2, a2)? == Decision::Yes {
                    seen = true;
                    break;
                }
            }
            if !seen {
                classes.push((k.clone(), a.clone()));
            }
        }
    }
    let mut inv = Inventory { entries, classes, singular_closed_form: None, full_closed_form: None, closed_form: None };
    let quaternionic = inv.of_kind("quaternionic");
    if let [e] = quaternionic.as_slice() {
        let e = (*e).clone();
        let c = s.centralizer(&e);
        let r = radical_of(s, &c);
        let zero = crate::linalg::vzero(f, 8);
        let mut singular: Vec<Elem> =
            enumerate_span(f, &zero, r.basis(), |x| !vis_zero(x)).iter().map(|x| vadd(&e, x)).collect();
        singular.sort();
        let mut found: Vec<Elem> = inv.of_kind("singular").into_iter().cloned().collect();
        found.sort();
        inv.singular_closed_form = Some(singular == found);
        let mut full: Vec<Elem> = enumerate_span(f, &zero, c.basis(), |x| vis_zero(&s.mul(x, x)))
            .iter()
            .map(|x| vadd(&e, x))
            .collect();
        full.sort();
        let mut all: Vec<Elem> = inv.entries.iter().map(|x| x.element.clone()).collect();
        all.sort();
        inv.full_closed_form = Some(full == all);
    }
    Ok(inv)
}

#[derive(Clone, Debug)]
pub enum SymmetricClass {
    /// A form of a para-Hurwitz algebra.
    ParaHurwitzForm { para_unit: Option<Elem>, center_dim: usize },
    Okubo { idempotent: Elem, idempotent_class: IdempotentClass },
    /// No idempotent over this finite field; one appears after a cubic
    /// field extension.
    NeedsCubicExtension,
}

impl SymmetricClass {
    pub fn report(&self, s: &Algebra) -> Report {
        let mut r = Report::default();
        match self {
            SymmetricClass::ParaHurwitzForm { para_unit, center_dim } => {
                r.push("kind", "para-hurwitz");
                match para_unit {
                    Some(e) => r.push("para_unit", s.elem_text(e)),
                    None => r.push("commutative_center_dim", center_dim),
                }
            }
            SymmetricClass::Okubo { idempotent, idempotent_class } => {
                r.push("kind", "okubo");
                r.push("idempotent", s.elem_text(idempotent));
                r.push("idempotent_kind", idempotent_class.name());
            }
            SymmetricClass::NeedsCubicExtension => {
                r.push("kind", "okubo");
                r.push("note", "no idempotent; extend by a cubic field");
            }
        }
        r
    }
}

pub fn classify_symmetric_composition(s: &Algebra) -> Result<SymmetricClass> {
    check_symmetric(s)?;
    let d = s.dim();
    if ![1, 2, 4, 8].contains(&d) {
        return Err(Error::Dimension(d));
    }
    let para_unit = find_para_unit(s);
    if d <= 4 || para_unit.is_some() {
        return Ok(SymmetricClass::ParaHurwitzForm { para_unit, center_dim: commutative_center(s).dim() });
    }
    let e = match s.tag().known_idempotent().filter(|e| s.is_idempotent(e)) {
        Some(e) => e.clone(),
        None => match idempotents(s)? {
            set @ IdempotentSet::Finite { .. } => match set.elements().and_then(|x| x.first()) {
                Some(e) => e.clone(),
                None => return Ok(SymmetricClass::NeedsCubicExtension),
            },
            IdempotentSet::ParaQuadric { para_unit } => para_unit,
            IdempotentSet::SquareZeroCone { base, .. } | IdempotentSet::Affine { base, .. } => base,
        },
    };
    let class = classify_idempotent(s, &e)?;
    match class {
        IdempotentClass::ParaUnit | IdempotentClass::ParaCayley { .. } => {
            Err(Error::Inconsistent("para-Hurwitz idempotent without a para-unit".into()))
        }
        c => Ok(SymmetricClass::Okubo { idempotent: e, idempotent_class: c }),
    }
}
