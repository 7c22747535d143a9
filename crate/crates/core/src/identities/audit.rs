use crate::identities::{classify_with, Classification, IdentityId, Verdict};
use crate::structures::{associated_akivis, Structure};

use IdentityId::*;

/// A theorem whose hypotheses hold but whose conclusion does not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub description: String,
}

struct Auditor<'a> {
    c: &'a Classification,
    out: Vec<Violation>,
}

impl Auditor<'_> {
    fn pass(&self, id: IdentityId) -> bool {
        self.c.passes(id)
    }

    fn require(&mut self, rule: &'static str, premise: &str, ids: &[IdentityId]) {
        for &id in ids {
            if !self.pass(id) {
                let found = self.c.verdict(id);
                self.out.push(Violation {
                    rule,
                    description: format!("{premise}, but {} ({}) is {found}", id.name(), id.code()),
                });
            }
        }
    }
}

/// Checks the classification against the implication rules R1..R9. Premises
/// count only when the identities involved passed.
pub fn audit(classification: &Classification, structure: &Structure) -> Vec<Violation> {
    let mut a = Auditor { c: classification, out: Vec::new() };
    let regular = classification.regular;
    let alternative = a.pass(LeftAlternative) && a.pass(RightAlternative);

    if regular && alternative {
        a.require("R1", "regular and BiHom-alternative", &[Flexible]);
    }
    if regular && a.pass(LeftAlternative) && a.pass(Flexible) {
        a.require("R2", "regular, left BiHom-alternative and BiHom-flexible", &[RightAlternative]);
    }
    if regular && a.pass(RightAlternative) && a.pass(Flexible) {
        a.require("R3", "regular, right BiHom-alternative and BiHom-flexible", &[LeftAlternative]);
    }
    if a.pass(BiHomAssociative) {
        a.require("R4", "BiHom-associative", &[LeftAlternative, RightAlternative, Flexible]);
    }
    if regular {
        let composite = classification.verdict(AlternatingComposite);
        if composite != Verdict::NotApplicable
            && classification.verdict(LeftAlternative) != Verdict::NotApplicable
            && alternative != composite.is_pass()
        {
            a.out.push(Violation {
                rule: "R5",
                description: format!(
                    "regular; BiHom-alternative is {alternative} but {} ({}) is {composite}",
                    AlternatingComposite.name(),
                    AlternatingComposite.code()
                ),
            });
        }
    }
    if a.pass(SkewSymmetry) && a.pass(Jacobi) {
        a.require("R6", "BiHom-Lie", &[Malcev]);
    }
    if regular && a.pass(BiHomAkivis) && a.pass(AkivisFlexible) {
        let (j, c) = (classification.verdict(Jacobi), classification.verdict(CyclicTripleZero));
        if j.is_pass() != c.is_pass() {
            a.out.push(Violation {
                rule: "R8",
                description: format!(
                    "regular BiHom-flexible BiHom-Akivis; {} is {j} but {} is {c}",
                    Jacobi.name(),
                    CyclicTripleZero.name()
                ),
            });
        }
    }
    if regular && alternative {
        a.require("R9", "regular and BiHom-alternative", &[BkAlternating, EqF1, EqF2, EqF3]);
    }
    if regular && a.pass(BiHomAkivis) && a.pass(AkivisLeftAlternative) && a.pass(AkivisRightAlternative) {
        a.require("R9", "regular BiHom-alternative BiHom-Akivis", &[SixAssociator]);
    }

    let mut out = a.out;
    if let Structure::BiHom(algebra) = structure {
        let flexible = classification.passes(Flexible);
        if regular && algebra.is_multiplicative() && (flexible || alternative) {
            if let Ok(k) = associated_akivis(algebra) {
                let k = Structure::BiHomAkivis(k);
                let assoc = classify_with(
                    &k,
                    &[AkivisFlexible, AkivisLeftAlternative, AkivisRightAlternative, SkewSymmetry, Malcev, SixAssociator],
                );
                let mut b = Auditor { c: &assoc, out: Vec::new() };
                if flexible {
                    b.require("R7", "flexible algebra; associated BiHom-Akivis algebra", &[AkivisFlexible]);
                }
                if alternative {
                    b.require(
                        "R7",
                        "alternative algebra; associated BiHom-Akivis algebra",
                        &[AkivisLeftAlternative, AkivisRightAlternative],
                    );
                    b.require("R9", "alternative algebra; associated BiHom-Akivis algebra", &[Malcev, SixAssociator]);
                }
                out.extend(b.out);
            }
        }
    }
    out
}
