//! Parametric generators for the worked examples and for the classical
//! algebras (octonions, cross product) used to exercise the alternative and
//! Lie hypotheses.

use std::collections::BTreeMap;

use num_traits::{One, ToPrimitive};

use crate::error::Error;
use crate::linear::{LinearMap, MultilinearMap, Rational};
use crate::structures::{
    akivis_to_bihom, associated_akivis, yau_twist, AkivisAlgebra, BiHomAlgebra, Structure,
};

/// `μ(e0,e1) = μ(e1,e1) = e0`, all other products zero.
pub fn ex1_base_mu() -> MultilinearMap {
    MultilinearMap::from_entries(2, 2, vec![(vec![0, 1], 0, Rational::one()), (vec![1, 1], 0, Rational::one())])
        .expect("valid table")
}

fn check_lambda(lambda: &Rational) -> Result<Rational, Error> {
    let c = lambda + &Rational::one();
    if c.is_zero() {
        return Err(Error::BadParameter("lambda must differ from -1".into()));
    }
    Ok(c)
}

/// `α_λ(e0) = (λ+1) e0`, `α_λ(e1) = λ e0 + e1`.
pub fn alpha_lambda(lambda: &Rational) -> Result<LinearMap, Error> {
    let c = check_lambda(lambda)?;
    LinearMap::from_columns(vec![vec![c, Rational::zero()], vec![lambda.clone(), Rational::one()]])
}

/// `β_λ(e0) = e0/(λ+1)`, `β_λ(e1) = −λ/(λ+1) e0 + e1`.
pub fn beta_lambda(lambda: &Rational) -> Result<LinearMap, Error> {
    let c = check_lambda(lambda)?;
    let inv = c.recip()?;
    LinearMap::from_columns(vec![vec![inv.clone(), Rational::zero()], vec![-(lambda * &inv), Rational::one()]])
}

/// The λ-family: the base product twisted by `(α_λ, β_λ)`.
pub fn make_ex1(lambda: &Rational) -> Result<BiHomAlgebra, Error> {
    yau_twist(&ex1_base_mu(), &alpha_lambda(lambda)?, &beta_lambda(lambda)?)
}

/// Two-dimensional Akivis algebra `[e0,e1] = [e0,e1,e1] = [e1,e1,e1] = e0`,
/// with the skew completion `[e1,e0] = −e0`.
pub fn make_akivis2d() -> AkivisAlgebra {
    let one = Rational::one();
    let bracket =
        MultilinearMap::from_entries(2, 2, vec![(vec![0, 1], 0, one.clone()), (vec![1, 0], 0, -one.clone())])
            .expect("valid table");
    let triple =
        MultilinearMap::from_entries(2, 3, vec![(vec![0, 1, 1], 0, one.clone()), (vec![1, 1, 1], 0, one)])
            .expect("valid table");
    AkivisAlgebra::new(bracket, triple).expect("Akivis identity holds")
}

fn unipotent_family(t: &Rational) -> LinearMap {
    LinearMap::from_columns(vec![vec![t + &Rational::one(), Rational::zero()], vec![t.clone(), Rational::one()]])
        .expect("2x2")
}

/// `α_r(e0) = (r+1) e0`, `α_r(e1) = r e0 + e1`.
pub fn make_r_map(r: &Rational) -> LinearMap {
    unipotent_family(r)
}

/// `β_s(e0) = (s+1) e0`, `β_s(e1) = s e0 + e1`.
pub fn make_s_map(s: &Rational) -> LinearMap {
    unipotent_family(s)
}

type Quat = [i64; 4];

fn quat_mul(a: Quat, b: Quat) -> Quat {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn quat_conj(a: Quat) -> Quat {
    [a[0], -a[1], -a[2], -a[3]]
}

fn quat_add(a: Quat, b: Quat) -> Quat {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

fn quat_sub(a: Quat, b: Quat) -> Quat {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

/// Octonion multiplication table. Cayley–Dickson doubling of the quaternions
/// with `(a,b)(c,d) = (ac − d̄b, da + bc̄)`; basis `1, i, j, k, ℓ, iℓ, jℓ, kℓ`.
pub fn octonion_product() -> MultilinearMap {
    let split = |n: usize| -> (Quat, Quat) {
        let mut a = [0; 4];
        let mut b = [0; 4];
        if n < 4 {
            a[n] = 1;
        } else {
            b[n - 4] = 1;
        }
        (a, b)
    };
    let mut entries = Vec::new();
    for x in 0..8 {
        for y in 0..8 {
            let (a, b) = split(x);
            let (c, d) = split(y);
            let first = quat_sub(quat_mul(a, c), quat_mul(quat_conj(d), b));
            let second = quat_add(quat_mul(d, a), quat_mul(b, quat_conj(c)));
            for (out, coeff) in first.iter().chain(second.iter()).enumerate() {
                if *coeff != 0 {
                    entries.push((vec![x, y], out, Rational::int(*coeff)));
                }
            }
        }
    }
    MultilinearMap::from_entries(8, 2, entries).expect("valid table")
}

pub fn make_octonions() -> BiHomAlgebra {
    BiHomAlgebra::untwisted(octonion_product()).expect("valid algebra")
}

/// `φ(a, b) = (a, −b)`: fixes `e0..e3`, negates `e4..e7`.
pub fn make_octonion_involution() -> LinearMap {
    let mut m = LinearMap::identity(8);
    for i in 4..8 {
        m.set(i, i, -Rational::one());
    }
    m
}

/// `(a, b) ↦ (σa, σb)` with `σ: i → j → k → i`; an automorphism commuting
/// with the involution.
pub fn make_octonion_cycle() -> LinearMap {
    let mut m = LinearMap::zero(8);
    let image = [0, 2, 3, 1, 4, 6, 7, 5];
    for (src, &dst) in image.iter().enumerate() {
        m.set(dst, src, Rational::one());
    }
    m
}

/// Cross product on 3-space: `[e0,e1] = e2` and cyclic, skew.
pub fn cross3_product() -> MultilinearMap {
    let one = Rational::one();
    let mut entries = Vec::new();
    for (x, y, z) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        entries.push((vec![x, y], z, one.clone()));
        entries.push((vec![y, x], z, -one.clone()));
    }
    MultilinearMap::from_entries(3, 2, entries).expect("valid table")
}

pub fn make_cross3() -> BiHomAlgebra {
    BiHomAlgebra::untwisted(cross3_product()).expect("valid algebra")
}

/// Rotation about `e2` with cosine 3/5 and sine 4/5.
pub fn make_rot_z() -> LinearMap {
    LinearMap::from_columns(vec![
        vec![Rational::frac(3, 5), Rational::frac(4, 5), Rational::zero()],
        vec![Rational::frac(-4, 5), Rational::frac(3, 5), Rational::zero()],
        vec![Rational::zero(), Rational::zero(), Rational::one()],
    ])
    .expect("3x3")
}

/// Zero product with identity maps.
pub fn make_zero(dim: usize) -> Result<BiHomAlgebra, Error> {
    BiHomAlgebra::untwisted(MultilinearMap::zero(dim, 2)?)
}

/// A catalog product: either a structure or a standalone linear map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogItem {
    Structure(Structure),
    Map(LinearMap),
}

#[derive(Clone, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub default: &'static str,
    pub note: &'static str,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub params: &'static [ParamSpec],
}

const LAMBDA: ParamSpec = ParamSpec { name: "lambda", default: "1", note: "rational, != -1" };
const R: ParamSpec = ParamSpec { name: "r", default: "1", note: "rational" };
const S: ParamSpec = ParamSpec { name: "s", default: "2", note: "rational" };
const DIM: ParamSpec = ParamSpec { name: "dim", default: "2", note: "integer in 1..=16" };

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry { name: "ex1", description: "two-dimensional product twisted by (alpha_lambda, beta_lambda)", params: &[LAMBDA] },
    CatalogEntry { name: "ex1-associated", description: "associated BiHom-Akivis algebra of ex1", params: &[LAMBDA] },
    CatalogEntry { name: "ex1-alpha", description: "alpha_lambda as a linear map", params: &[LAMBDA] },
    CatalogEntry { name: "ex1-beta", description: "beta_lambda as a linear map", params: &[LAMBDA] },
    CatalogEntry { name: "akivis2d", description: "two-dimensional Akivis algebra", params: &[] },
    CatalogEntry { name: "akivis2d-twisted", description: "akivis2d twisted by (alpha_r, beta_s)", params: &[R, S] },
    CatalogEntry { name: "r-map", description: "alpha_r as a linear map", params: &[R] },
    CatalogEntry { name: "s-map", description: "beta_s as a linear map", params: &[S] },
    CatalogEntry { name: "octonions", description: "octonions with identity maps", params: &[] },
    CatalogEntry { name: "octonions-associated", description: "associated BiHom-Akivis algebra of the octonions", params: &[] },
    CatalogEntry { name: "octonion-involution", description: "(a,b) -> (a,-b)", params: &[] },
    CatalogEntry { name: "octonion-cycle", description: "i -> j -> k on both quaternion halves", params: &[] },
    CatalogEntry { name: "octonions-hom", description: "octonions twisted by (phi, phi), phi the involution", params: &[] },
    CatalogEntry { name: "octonions-bihom", description: "octonions twisted by (involution, cycle)", params: &[] },
    CatalogEntry { name: "cross3", description: "cross product on 3-space", params: &[] },
    CatalogEntry { name: "rot-z", description: "rational rotation about e2", params: &[] },
    CatalogEntry { name: "cross3-rotated", description: "cross product twisted by (R, R^-1)", params: &[] },
    CatalogEntry { name: "zero", description: "zero product with identity maps", params: &[DIM] },
];

pub fn entry(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

/// Builds a named catalog item. Missing parameters take their defaults;
/// unknown parameters are rejected.
pub fn build(name: &str, params: &BTreeMap<String, Rational>) -> Result<CatalogItem, Error> {
    let spec = entry(name).ok_or_else(|| Error::UnknownExample(name.to_string()))?;
    for key in params.keys() {
        if !spec.params.iter().any(|p| p.name == key) {
            return Err(Error::BadParameter(format!("{name} takes no parameter {key:?}")));
        }
    }
    let get = |p: &ParamSpec| -> Rational {
        params.get(p.name).cloned().unwrap_or_else(|| p.default.parse().expect("valid default"))
    };
    let item = match name {
        "ex1" => CatalogItem::Structure(make_ex1(&get(&LAMBDA))?.into()),
        "ex1-associated" => CatalogItem::Structure(associated_akivis(&make_ex1(&get(&LAMBDA))?)?.into()),
        "ex1-alpha" => CatalogItem::Map(alpha_lambda(&get(&LAMBDA))?),
        "ex1-beta" => CatalogItem::Map(beta_lambda(&get(&LAMBDA))?),
        "akivis2d" => CatalogItem::Structure(make_akivis2d().into()),
        "akivis2d-twisted" => CatalogItem::Structure(
            akivis_to_bihom(&make_akivis2d(), &make_r_map(&get(&R)), &make_s_map(&get(&S)))?.into(),
        ),
        "r-map" => CatalogItem::Map(make_r_map(&get(&R))),
        "s-map" => CatalogItem::Map(make_s_map(&get(&S))),
        "octonions" => CatalogItem::Structure(make_octonions().into()),
        "octonions-associated" => CatalogItem::Structure(associated_akivis(&make_octonions())?.into()),
        "octonion-involution" => CatalogItem::Map(make_octonion_involution()),
        "octonion-cycle" => CatalogItem::Map(make_octonion_cycle()),
        "octonions-hom" => {
            let phi = make_octonion_involution();
            CatalogItem::Structure(yau_twist(&octonion_product(), &phi, &phi)?.into())
        }
        "octonions-bihom" => CatalogItem::Structure(
            yau_twist(&octonion_product(), &make_octonion_involution(), &make_octonion_cycle())?.into(),
        ),
        "cross3" => CatalogItem::Structure(make_cross3().into()),
        "rot-z" => CatalogItem::Map(make_rot_z()),
        "cross3-rotated" => {
            let r = make_rot_z();
            CatalogItem::Structure(yau_twist(&cross3_product(), &r, &r.inverse()?)?.into())
        }
        "zero" => {
            let d = get(&DIM);
            let dim = match (d.denominator().is_one(), d.numerator().to_usize()) {
                (true, Some(n)) if n > 0 => n,
                _ => return Err(Error::BadParameter("dim must be a positive integer".into())),
            };
            CatalogItem::Structure(make_zero(dim)?.into())
        }
        _ => unreachable!("entry table and builder agree"),
    };
    Ok(item)
}

/// Every structure in the catalog at its default parameters, plus the
/// λ and (r, s) grids used by the reproduction checks.
pub fn all_structures() -> Vec<(String, Structure)> {
    let mut out = Vec::new();
    for name in ["ex1", "ex1-associated"] {
        for (label, lambda) in lambda_grid() {
            let mut p = BTreeMap::new();
            p.insert("lambda".to_string(), lambda);
            if let Ok(CatalogItem::Structure(s)) = build(name, &p) {
                out.push((format!("{name}(lambda={label})"), s));
            }
        }
    }
    for (r, s) in rs_grid() {
        let mut p = BTreeMap::new();
        p.insert("r".to_string(), r.clone());
        p.insert("s".to_string(), s.clone());
        if let Ok(CatalogItem::Structure(st)) = build("akivis2d-twisted", &p) {
            out.push((format!("akivis2d-twisted(r={r},s={s})"), st));
        }
    }
    for name in ["akivis2d", "octonions", "octonions-associated", "octonions-hom", "octonions-bihom", "cross3", "cross3-rotated", "zero"] {
        if let Ok(CatalogItem::Structure(s)) = build(name, &BTreeMap::new()) {
            out.push((name.to_string(), s));
        }
    }
    out
}

/// λ values used throughout the reproduction checks.
pub fn lambda_grid() -> Vec<(String, Rational)> {
    [(1, 1), (2, 1), (-1, 2), (5, 3)]
        .into_iter()
        .map(|(n, d)| {
            let q = Rational::frac(n, d);
            (q.to_string(), q)
        })
        .collect()
}

/// `(r, s)` pairs used throughout the reproduction checks.
pub fn rs_grid() -> Vec<(Rational, Rational)> {
    vec![
        (Rational::int(1), Rational::int(2)),
        (Rational::int(0), Rational::int(0)),
        (Rational::int(2), Rational::int(3)),
        (Rational::frac(-1, 2), Rational::int(1)),
    ]
}
