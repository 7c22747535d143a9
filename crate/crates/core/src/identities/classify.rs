use crate::identities::context::Context;
use crate::identities::{check_in, CheckReport, IdentityId, Verdict};
use crate::structures::Structure;

/// Derived property flags. A flag is set only when every identity it rests on
/// passed; not-applicable never counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PropertyFlags {
    pub bihom_associative: bool,
    pub left_bihom_alternative: bool,
    pub right_bihom_alternative: bool,
    pub bihom_alternative: bool,
    pub bihom_flexible: bool,
    pub bihom_lie: bool,
    pub bihom_malcev: bool,
    pub bihom_akivis: bool,
    pub akivis_flexible: bool,
    pub akivis_left_alt: bool,
    pub akivis_right_alt: bool,
}

impl PropertyFlags {
    fn from_reports(reports: &[CheckReport]) -> Self {
        let p = |id: IdentityId| verdict_in(reports, id).is_pass();
        PropertyFlags {
            bihom_associative: p(IdentityId::BiHomAssociative),
            left_bihom_alternative: p(IdentityId::LeftAlternative),
            right_bihom_alternative: p(IdentityId::RightAlternative),
            bihom_alternative: p(IdentityId::LeftAlternative) && p(IdentityId::RightAlternative),
            bihom_flexible: p(IdentityId::Flexible),
            bihom_lie: p(IdentityId::SkewSymmetry) && p(IdentityId::Jacobi),
            bihom_malcev: p(IdentityId::SkewSymmetry) && p(IdentityId::Malcev),
            bihom_akivis: p(IdentityId::BiHomAkivis),
            akivis_flexible: p(IdentityId::AkivisFlexible),
            akivis_left_alt: p(IdentityId::AkivisLeftAlternative),
            akivis_right_alt: p(IdentityId::AkivisRightAlternative),
        }
    }

    /// `(name, value)` pairs in a fixed order.
    pub fn entries(&self) -> [(&'static str, bool); 11] {
        [
            ("bihom-associative", self.bihom_associative),
            ("left-bihom-alternative", self.left_bihom_alternative),
            ("right-bihom-alternative", self.right_bihom_alternative),
            ("bihom-alternative", self.bihom_alternative),
            ("bihom-flexible", self.bihom_flexible),
            ("bihom-lie", self.bihom_lie),
            ("bihom-malcev", self.bihom_malcev),
            ("bihom-akivis", self.bihom_akivis),
            ("akivis-flexible", self.akivis_flexible),
            ("akivis-left-alt", self.akivis_left_alt),
            ("akivis-right-alt", self.akivis_right_alt),
        ]
    }
}

fn verdict_in(reports: &[CheckReport], id: IdentityId) -> Verdict {
    reports.iter().find(|r| r.id == id.name()).map_or(Verdict::NotApplicable, |r| r.verdict)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub kind: String,
    pub dim: usize,
    pub regular: bool,
    pub multiplicative: bool,
    pub reports: Vec<CheckReport>,
    pub flags: PropertyFlags,
}

impl Classification {
    /// Verdict for `id`; identities that were not run read as not-applicable.
    pub fn verdict(&self, id: IdentityId) -> Verdict {
        verdict_in(&self.reports, id)
    }

    pub fn passes(&self, id: IdentityId) -> bool {
        self.verdict(id).is_pass()
    }

    pub fn report(&self, id: IdentityId) -> Option<&CheckReport> {
        self.reports.iter().find(|r| r.id == id.name())
    }

    pub fn any_failure(&self) -> bool {
        self.reports.iter().any(|r| r.verdict == Verdict::Fail)
    }

    /// Replaces the verdict of `id`, recomputing flags. Intended for building
    /// synthetic classifications in tests of [`super::audit`].
    pub fn set_verdict(&mut self, id: IdentityId, verdict: Verdict) {
        if let Some(r) = self.reports.iter_mut().find(|r| r.id == id.name()) {
            r.verdict = verdict;
            if verdict != Verdict::Fail {
                r.witness = None;
                r.residual = None;
            }
        }
        self.flags = PropertyFlags::from_reports(&self.reports);
    }
}

/// Runs every registry identity.
pub fn classify(structure: &Structure) -> Classification {
    classify_with(structure, &IdentityId::ALL)
}

/// Runs the given identities, in registry order.
pub fn classify_with(structure: &Structure, ids: &[IdentityId]) -> Classification {
    let ctx = Context::new(structure);
    let mut ids = ids.to_vec();
    ids.sort();
    ids.dedup();
    let reports: Vec<CheckReport> = ids.iter().map(|&id| check_in(&ctx, id)).collect();
    Classification {
        kind: structure.kind().to_string(),
        dim: structure.dim(),
        regular: structure.is_regular(),
        multiplicative: structure.is_multiplicative(),
        flags: PropertyFlags::from_reports(&reports),
        reports,
    }
}
