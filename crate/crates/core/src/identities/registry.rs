use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::identities::context::Context;
use crate::identities::engine::Clause;
use crate::linear::{MultilinearMap, Rational, Vector};

/// Built-in identities. Each has a short name and a stable code `I1`..`I21c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Akivis,
    BiHomAssociative,
    LeftAlternative,
    RightAlternative,
    Flexible,
    SkewSymmetry,
    Jacobi,
    Malcev,
    BiHomAkivis,
    AkivisFlexible,
    AkivisLeftAlternative,
    AkivisRightAlternative,
    AlternatingComposite,
    BkAlternating,
    EqF1,
    EqF2,
    EqF3,
    SixAssociator,
    CyclicTripleZero,
    Multiplicativity,
    ShortLeftAlternative,
    ShortRightAlternative,
    ShortFlexible,
}

/// What a structure must provide before an identity can be evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Requirement {
    /// A BiHom-algebra product `μ`.
    Product,
    /// A triple product.
    Triple,
    /// Invertible twisting maps.
    Regular,
    /// Both twisting maps equal to the identity.
    Untwisted,
}

impl Requirement {
    pub fn name(self) -> &'static str {
        match self {
            Requirement::Product => "has-product",
            Requirement::Triple => "has-triple",
            Requirement::Regular => "regular",
            Requirement::Untwisted => "untwisted",
        }
    }

    pub(crate) fn holds(self, ctx: &Context) -> bool {
        match self {
            Requirement::Product => ctx.has_product(),
            Requirement::Triple => ctx.has_triple(),
            Requirement::Regular => ctx.is_regular(),
            Requirement::Untwisted => ctx.is_untwisted(),
        }
    }
}

use IdentityId::*;
use Requirement::*;

impl IdentityId {
    pub const ALL: [IdentityId; 23] = [
        Akivis,
        BiHomAssociative,
        LeftAlternative,
        RightAlternative,
        Flexible,
        SkewSymmetry,
        Jacobi,
        Malcev,
        BiHomAkivis,
        AkivisFlexible,
        AkivisLeftAlternative,
        AkivisRightAlternative,
        AlternatingComposite,
        BkAlternating,
        EqF1,
        EqF2,
        EqF3,
        SixAssociator,
        CyclicTripleZero,
        Multiplicativity,
        ShortLeftAlternative,
        ShortRightAlternative,
        ShortFlexible,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Akivis => "akivis",
            BiHomAssociative => "bihom-associative",
            LeftAlternative => "left-bihom-alternative",
            RightAlternative => "right-bihom-alternative",
            Flexible => "bihom-flexible",
            SkewSymmetry => "bihom-skew-symmetry",
            Jacobi => "bihom-jacobi",
            Malcev => "bihom-malcev",
            BiHomAkivis => "bihom-akivis",
            AkivisFlexible => "akivis-flexible",
            AkivisLeftAlternative => "akivis-left-alternative",
            AkivisRightAlternative => "akivis-right-alternative",
            AlternatingComposite => "alternating-composite",
            BkAlternating => "bk-alternating",
            EqF1 => "eq-f1",
            EqF2 => "eq-f2",
            EqF3 => "eq-f3",
            SixAssociator => "six-associator",
            CyclicTripleZero => "cyclic-triple-zero",
            Multiplicativity => "multiplicativity",
            ShortLeftAlternative => "short-left-alt",
            ShortRightAlternative => "short-right-alt",
            ShortFlexible => "short-flexible",
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            Akivis => "I1",
            BiHomAssociative => "I2",
            LeftAlternative => "I3",
            RightAlternative => "I4",
            Flexible => "I5",
            SkewSymmetry => "I6",
            Jacobi => "I7",
            Malcev => "I8",
            BiHomAkivis => "I9",
            AkivisFlexible => "I10",
            AkivisLeftAlternative => "I11",
            AkivisRightAlternative => "I12",
            AlternatingComposite => "I13",
            BkAlternating => "I14",
            EqF1 => "I15",
            EqF2 => "I16",
            EqF3 => "I17",
            SixAssociator => "I18",
            CyclicTripleZero => "I19",
            Multiplicativity => "I20",
            ShortLeftAlternative => "I21a",
            ShortRightAlternative => "I21b",
            ShortFlexible => "I21c",
        }
    }

    /// The identity as an equation. `as` is the BiHom-associator, `J` the
    /// BiHom-Jacobiator of the binary operation, `⟳` a cyclic sum over x, y, z.
    pub fn formula(self) -> &'static str {
        match self {
            Akivis => "⟳{x,{y,z}} = ⟳{y,x,z} - ⟳{x,y,z}",
            BiHomAssociative => "as(x,y,z) = 0",
            LeftAlternative => "as(βx,αy,z) + as(βy,αx,z) = 0",
            RightAlternative => "as(x,βy,αz) + as(x,βz,αy) = 0",
            Flexible => "as(β²x,αβy,α²z) + as(β²z,αβy,α²x) = 0",
            SkewSymmetry => "[βx,αy] + [βy,αx] = 0",
            Jacobi => "J(x,y,z) = 0",
            Malcev => "J(αβx,αβy,[βx,αz]) = [J(βx,βy,βz),α²β²x]",
            BiHomAkivis => "J(x,y,z) = ⟳[y,x,z] - ⟳[x,y,z]",
            AkivisFlexible => "[αx,αy,αz] + [αz,αy,αx] = 0",
            AkivisLeftAlternative => "[α²x,α²y,βz] + [α²y,α²x,βz] = 0",
            AkivisRightAlternative => "[αx,β²y,β²z] + [αx,β²z,β²y] = 0",
            AlternatingComposite => "as∘(β²⊗αβ⊗α²) is alternating",
            BkAlternating => "the Bruck-Kleinfeld function is alternating",
            EqF1 => "as(β³x,αβ²y,αβx·α²z) = as(α⁻¹β³x,β²y,αβz)·α²β²x",
            EqF2 => "as(β³x,αβ²y,αβz·α²x) = αβ³x·as(β²x,αβy,α²z)",
            EqF3 => "as(β³x,αβ²y,[αβx,α²z]) = [as(α⁻¹β³x,β²y,αβz),α²β²x] (commutator bracket)",
            SixAssociator => "J(x,y,z) = -6[x,y,z]",
            CyclicTripleZero => "⟳[x,y,z] = 0",
            Multiplicativity => "α and β are endomorphisms of every operation",
            ShortLeftAlternative => "as(βx,αx,z) = 0",
            ShortRightAlternative => "as(x,βy,αy) = 0",
            ShortFlexible => "as(β²x,αβy,α²x) = 0",
        }
    }

    pub fn requirements(self) -> &'static [Requirement] {
        match self {
            Akivis => &[Triple, Untwisted],
            BiHomAssociative | LeftAlternative | RightAlternative | Flexible | AlternatingComposite | EqF2 => {
                &[Product]
            }
            ShortLeftAlternative | ShortRightAlternative | ShortFlexible => &[Product],
            BkAlternating | EqF1 | EqF3 => &[Product, Regular],
            SkewSymmetry | Jacobi | Malcev | Multiplicativity => &[],
            BiHomAkivis | AkivisFlexible | AkivisLeftAlternative | AkivisRightAlternative | SixAssociator
            | CyclicTripleZero => &[Triple],
        }
    }

    /// Accepts a name such as `bihom-akivis` or a code such as `I9`.
    pub fn from_name(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == t || id.code().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }

    pub(crate) fn missing_requirement(self, ctx: &Context) -> Option<Requirement> {
        self.requirements().iter().copied().find(|r| !r.holds(ctx))
    }

    /// The residual clauses; the identity holds iff every clause vanishes.
    /// Callers must check [`IdentityId::requirements`] first.
    pub fn clauses<'a>(self, ctx: &'a Context<'a>) -> Vec<Clause<'a>> {
        let c = ctx;
        let xyz = ["x", "y", "z"];
        match self {
            Akivis => vec![Clause::linear("akivis", &xyz, move |s: &[Vector]| {
                cyc(s, |x, y, z| c.br(x, &c.br(y, z))) - cyc(s, |x, y, z| c.tri(y, x, z)) + cyc(s, |x, y, z| c.tri(x, y, z))
            })],
            BiHomAssociative => vec![Clause::linear("associator", &xyz, move |s: &[Vector]| c.ass(&s[0], &s[1], &s[2]))],
            LeftAlternative => vec![Clause::linear("left-alternative", &xyz, move |s: &[Vector]| {
                let (x, y, z) = (&s[0], &s[1], &s[2]);
                c.ass(&c.ap(0, 1, x), &c.ap(1, 0, y), z) + c.ass(&c.ap(0, 1, y), &c.ap(1, 0, x), z)
            })],
            RightAlternative => vec![Clause::linear("right-alternative", &xyz, move |s: &[Vector]| {
                let (x, y, z) = (&s[0], &s[1], &s[2]);
                c.ass(x, &c.ap(0, 1, y), &c.ap(1, 0, z)) + c.ass(x, &c.ap(0, 1, z), &c.ap(1, 0, y))
            })],
            Flexible => vec![Clause::linear("flexible", &xyz, move |s: &[Vector]| {
                let (x, y, z) = (&s[0], &s[1], &s[2]);
                c.ass(&c.ap(0, 2, x), &c.ap(1, 1, y), &c.ap(2, 0, z))
                    + c.ass(&c.ap(0, 2, z), &c.ap(1, 1, y), &c.ap(2, 0, x))
            })],
            SkewSymmetry => vec![Clause::linear("skew-symmetry", &["x", "y"], move |s: &[Vector]| {
                let (x, y) = (&s[0], &s[1]);
                c.br(&c.ap(0, 1, x), &c.ap(1, 0, y)) + c.br(&c.ap(0, 1, y), &c.ap(1, 0, x))
            })],
            Jacobi => vec![Clause::linear("jacobi", &xyz, move |s: &[Vector]| c.jac(&s[0], &s[1], &s[2]))],
            Malcev => vec![Clause::new("malcev", &[("x", 2), ("y", 1), ("z", 1)], move |s: &[Vector]| {
                let (x1, x2, y, z) = (&s[0], &s[1], &s[2], &s[3]);
                let lhs = c.jac(&c.ap(1, 1, x1), &c.ap(1, 1, y), &c.br(&c.ap(0, 1, x2), &c.ap(1, 0, z)));
                let inner = c.jac(&c.ap(0, 1, x1), &c.ap(0, 1, y), &c.ap(0, 1, z));
                lhs - c.br(&inner, &c.ap(2, 2, x2))
            })],
            BiHomAkivis => vec![Clause::linear("bihom-akivis", &xyz, move |s: &[Vector]| {
                c.jac(&s[0], &s[1], &s[2]) - cyc(s, |x, y, z| c.tri(y, x, z)) + cyc(s, |x, y, z| c.tri(x, y, z))
            })],
            AkivisFlexible => vec![Clause::linear("akivis-flexible", &xyz, move |s: &[Vector]| {
                let (x, y, z) = (c.ap(1, 0, &s[0]), c.ap(1, 0, &s[1]), c.ap(1, 0, &s[2]));
                c.tri(&x, &y, &z) + c.tri(&z, &y, &x)
            })],
            AkivisLeftAlternative => vec![Clause::linear("akivis-left-alternative", &xyz, move |s: &[Vector]| {
                let (x, y, z) = (c.ap(2, 0, &s[0]), c.ap(2, 0, &s[1]), c.ap(0, 1, &s[2]));
                c.tri(&x, &y, &z) + c.tri(&y, &x, &z)
            })],
            AkivisRightAlternative => vec![Clause::linear("akivis-right-alternative", &xyz, move |s: &[Vector]| {
                let (x, y, z) = (c.ap(1, 0, &s[0]), c.ap(0, 2, &s[1]), c.ap(0, 2, &s[2]));
                c.tri(&x, &y, &z) + c.tri(&x, &z, &y)
            })],
            AlternatingComposite => alternating_clauses(c.composite()),
            BkAlternating => alternating_clauses(c.bruck_kleinfeld()),
            EqF1 => vec![Clause::new("f1", &[("x", 2), ("y", 1), ("z", 1)], move |s: &[Vector]| {
                let (x1, x2, y, z) = (&s[0], &s[1], &s[2], &s[3]);
                let lhs = c.ass(&c.ap(0, 3, x1), &c.ap(1, 2, y), &c.mul(&c.ap(1, 1, x2), &c.ap(2, 0, z)));
                let inner = c.ass(&c.ap(-1, 3, x1), &c.ap(0, 2, y), &c.ap(1, 1, z));
                lhs - c.mul(&inner, &c.ap(2, 2, x2))
            })],
            EqF2 => vec![Clause::new("f2", &[("x", 2), ("y", 1), ("z", 1)], move |s: &[Vector]| {
                let (x1, x2, y, z) = (&s[0], &s[1], &s[2], &s[3]);
                let lhs = c.ass(&c.ap(0, 3, x1), &c.ap(1, 2, y), &c.mul(&c.ap(1, 1, z), &c.ap(2, 0, x2)));
                let inner = c.ass(&c.ap(0, 2, x2), &c.ap(1, 1, y), &c.ap(2, 0, z));
                lhs - c.mul(&c.ap(1, 3, x1), &inner)
            })],
            EqF3 => vec![Clause::new("f3", &[("x", 2), ("y", 1), ("z", 1)], move |s: &[Vector]| {
                let (x1, x2, y, z) = (&s[0], &s[1], &s[2], &s[3]);
                let lhs = c.ass(&c.ap(0, 3, x1), &c.ap(1, 2, y), &c.comm(&c.ap(1, 1, x2), &c.ap(2, 0, z)));
                let inner = c.ass(&c.ap(-1, 3, x1), &c.ap(0, 2, y), &c.ap(1, 1, z));
                lhs - c.comm(&inner, &c.ap(2, 2, x2))
            })],
            SixAssociator => vec![Clause::linear("six-associator", &xyz, move |s: &[Vector]| {
                let (x, y, z) = (&s[0], &s[1], &s[2]);
                c.jac(x, y, z) + c.tri(x, y, z).scale(&Rational::int(6))
            })],
            CyclicTripleZero => vec![Clause::linear("cyclic-triple", &xyz, move |s: &[Vector]| {
                cyc(s, |x, y, z| c.tri(x, y, z))
            })],
            Multiplicativity => multiplicativity_clauses(c),
            ShortLeftAlternative => vec![Clause::new("short-left", &[("x", 2), ("z", 1)], move |s: &[Vector]| {
                c.ass(&c.ap(0, 1, &s[0]), &c.ap(1, 0, &s[1]), &s[2])
            })],
            ShortRightAlternative => vec![Clause::new("short-right", &[("x", 1), ("y", 2)], move |s: &[Vector]| {
                c.ass(&s[0], &c.ap(0, 1, &s[1]), &c.ap(1, 0, &s[2]))
            })],
            ShortFlexible => vec![Clause::new("short-flexible", &[("x", 2), ("y", 1)], move |s: &[Vector]| {
                c.ass(&c.ap(0, 2, &s[0]), &c.ap(1, 1, &s[2]), &c.ap(2, 0, &s[1]))
            })],
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        IdentityId::from_name(s)
    }
}

fn cyc(s: &[Vector], f: impl Fn(&Vector, &Vector, &Vector) -> Vector) -> Vector {
    let (x, y, z) = (&s[0], &s[1], &s[2]);
    f(x, y, z) + f(y, z, x) + f(z, x, y)
}

/// One clause per adjacent pair of slots: the map with those two arguments
/// filled by a repeated variable. Over characteristic 0 the polarized clauses
/// say exactly that the map is alternating.
pub(crate) fn alternating_clauses(m: &MultilinearMap) -> Vec<Clause<'_>> {
    let k = m.arity();
    (0..k - 1)
        .map(|p| {
            let mut variables: Vec<(&'static str, usize)> = Vec::new();
            for (i, name) in ["a", "b", "c", "d"].iter().enumerate().take(k) {
                if i == p {
                    variables.push(("x", 2));
                } else if i != p + 1 {
                    variables.push((name, 1));
                }
            }
            Clause::new(format!("slots {},{}", p + 1, p + 2), &variables, move |s: &[Vector]| {
                let args: Vec<&Vector> = s.iter().collect();
                m.eval_unchecked(&args)
            })
        })
        .collect()
}

fn multiplicativity_clauses<'a>(c: &'a Context<'a>) -> Vec<Clause<'a>> {
    let mut out = Vec::new();
    for (label, a, b) in [("alpha", 1, 0), ("beta", 0, 1)] {
        out.push(Clause::linear(format!("{label} on binary"), &["x", "y"], move |s: &[Vector]| {
            let (x, y) = (&s[0], &s[1]);
            c.ap(a, b, &c.br(x, y)) - c.br(&c.ap(a, b, x), &c.ap(a, b, y))
        }));
        if c.has_triple() {
            out.push(Clause::linear(format!("{label} on triple"), &["x", "y", "z"], move |s: &[Vector]| {
                let (x, y, z) = (&s[0], &s[1], &s[2]);
                c.ap(a, b, &c.tri(x, y, z)) - c.tri(&c.ap(a, b, x), &c.ap(a, b, y), &c.ap(a, b, z))
            }));
        }
    }
    out
}
