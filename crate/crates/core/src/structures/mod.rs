//! Algebra-level types: BiHom-algebras, Akivis algebras and BiHom-Akivis
//! algebras, plus the constructions relating them.

mod constructions;

pub use constructions::{
    akivis_to_bihom, associated_akivis, bihom_associator, bihom_commutator, bihom_jacobiator,
    bruck_kleinfeld, twist_bihom_akivis, yau_twist,
};

use crate::error::Error;
use crate::identities::{self, IdentityId, Verdict};
use crate::linear::{unflatten, LinearMap, MultilinearMap, Vector};

/// Largest supported dimension. Arity-4 enumeration is `dim^4` tuples.
pub const MAX_DIM: usize = 16;

/// `(A, μ, α, β)` with `αβ = βα`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiHomAlgebra {
    mu: MultilinearMap,
    alpha: LinearMap,
    beta: LinearMap,
    alpha_inv: Option<LinearMap>,
    beta_inv: Option<LinearMap>,
    multiplicative: bool,
}

impl BiHomAlgebra {
    /// Rejects mismatched shapes and non-commuting twisting maps.
    pub fn new(mu: MultilinearMap, alpha: LinearMap, beta: LinearMap) -> Result<Self, Error> {
        check_shape(&mu, 2)?;
        check_map(&alpha, mu.dim())?;
        check_map(&beta, mu.dim())?;
        let report = validate_bihom(&mu, &alpha, &beta)?;
        if !report.commuting.holds {
            return Err(Error::NonCommuting("alpha".into(), "beta".into()));
        }
        let alpha_inv = alpha.inverse().ok();
        let beta_inv = beta.inverse().ok();
        Ok(BiHomAlgebra { mu, alpha, beta, alpha_inv, beta_inv, multiplicative: report.multiplicative.holds })
    }

    /// An ordinary algebra viewed as a BiHom-algebra with identity maps.
    pub fn untwisted(mu: MultilinearMap) -> Result<Self, Error> {
        let id = LinearMap::identity(mu.dim());
        Self::new(mu, id.clone(), id)
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    pub fn mu(&self) -> &MultilinearMap {
        &self.mu
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn beta(&self) -> &LinearMap {
        &self.beta
    }

    pub fn is_regular(&self) -> bool {
        self.alpha_inv.is_some() && self.beta_inv.is_some()
    }

    pub fn is_multiplicative(&self) -> bool {
        self.multiplicative
    }

    pub fn alpha_inv(&self) -> Result<&LinearMap, Error> {
        self.alpha_inv.as_ref().ok_or(Error::NotRegular("alpha"))
    }

    pub fn beta_inv(&self) -> Result<&LinearMap, Error> {
        self.beta_inv.as_ref().ok_or(Error::NotRegular("beta"))
    }

    pub fn validate(&self) -> ValidationReport {
        validate_bihom(&self.mu, &self.alpha, &self.beta).expect("shapes checked at construction")
    }
}

/// `(A, {-,-}, {-,-,-})`: skew bracket and trilinear product satisfying the
/// Akivis identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AkivisAlgebra {
    bracket: MultilinearMap,
    triple: MultilinearMap,
}

impl AkivisAlgebra {
    /// Rejects a bracket that is not skew-symmetric or a pair failing the
    /// Akivis identity on some basis triple.
    pub fn new(bracket: MultilinearMap, triple: MultilinearMap) -> Result<Self, Error> {
        check_shape(&bracket, 2)?;
        check_shape(&triple, 3)?;
        if triple.dim() != bracket.dim() {
            return Err(Error::DimensionMismatch { expected: bracket.dim(), found: triple.dim() });
        }
        let id = LinearMap::identity(bracket.dim());
        if let Some(w) = skew_witness(&bracket, &id, &id) {
            return Err(Error::NotSkewSymmetric(w));
        }
        let k = AkivisAlgebra { bracket, triple };
        let report = identities::check(&Structure::Akivis(k.clone()), IdentityId::Akivis);
        if report.verdict == Verdict::Fail {
            return Err(Error::AkivisIdentityFails { witness: report.witness.unwrap_or_default() });
        }
        Ok(k)
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn bracket(&self) -> &MultilinearMap {
        &self.bracket
    }

    pub fn triple(&self) -> &MultilinearMap {
        &self.triple
    }
}

/// `(V, [-,-], [-,-,-], α, β)` with commuting maps and a BiHom-skew-symmetric
/// bracket. The BiHom-Akivis identity itself is decided by the checker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiHomAkivisAlgebra {
    bracket: MultilinearMap,
    triple: MultilinearMap,
    alpha: LinearMap,
    beta: LinearMap,
    regular: bool,
    multiplicative: bool,
}

impl BiHomAkivisAlgebra {
    pub fn new(
        bracket: MultilinearMap,
        triple: MultilinearMap,
        alpha: LinearMap,
        beta: LinearMap,
    ) -> Result<Self, Error> {
        check_shape(&bracket, 2)?;
        check_shape(&triple, 3)?;
        let dim = bracket.dim();
        if triple.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: triple.dim() });
        }
        check_map(&alpha, dim)?;
        check_map(&beta, dim)?;
        if !alpha.commutes_with(&beta)? {
            return Err(Error::NonCommuting("alpha".into(), "beta".into()));
        }
        if let Some(w) = skew_witness(&bracket, &alpha, &beta) {
            return Err(Error::NotSkewSymmetric(w));
        }
        let regular = alpha.inverse().is_ok() && beta.inverse().is_ok();
        let multiplicative = [&alpha, &beta]
            .iter()
            .all(|f| morphism_witness(f, &bracket, &bracket).is_none() && morphism_witness(f, &triple, &triple).is_none());
        Ok(BiHomAkivisAlgebra { bracket, triple, alpha, beta, regular, multiplicative })
    }

    /// An Akivis algebra with identity twisting maps.
    pub fn from_akivis(k: &AkivisAlgebra) -> Self {
        let id = LinearMap::identity(k.dim());
        Self::new(k.bracket.clone(), k.triple.clone(), id.clone(), id).expect("Akivis algebra is valid")
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn bracket(&self) -> &MultilinearMap {
        &self.bracket
    }

    pub fn triple(&self) -> &MultilinearMap {
        &self.triple
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn beta(&self) -> &LinearMap {
        &self.beta
    }

    pub fn is_regular(&self) -> bool {
        self.regular
    }

    pub fn is_multiplicative(&self) -> bool {
        self.multiplicative
    }
}

/// Any structure the identity engine can classify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    BiHom(BiHomAlgebra),
    Akivis(AkivisAlgebra),
    BiHomAkivis(BiHomAkivisAlgebra),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::BiHom(_) => "bihom-algebra",
            Structure::Akivis(_) => "akivis-algebra",
            Structure::BiHomAkivis(_) => "bihom-akivis-algebra",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Structure::BiHom(a) => a.dim(),
            Structure::Akivis(k) => k.dim(),
            Structure::BiHomAkivis(k) => k.dim(),
        }
    }

    /// Twisting maps; identity for plain Akivis algebras.
    pub fn maps(&self) -> (LinearMap, LinearMap) {
        match self {
            Structure::BiHom(a) => (a.alpha.clone(), a.beta.clone()),
            Structure::Akivis(k) => (LinearMap::identity(k.dim()), LinearMap::identity(k.dim())),
            Structure::BiHomAkivis(k) => (k.alpha.clone(), k.beta.clone()),
        }
    }

    /// The binary operation: `μ` for BiHom-algebras, the bracket otherwise.
    pub fn binary(&self) -> &MultilinearMap {
        match self {
            Structure::BiHom(a) => &a.mu,
            Structure::Akivis(k) => &k.bracket,
            Structure::BiHomAkivis(k) => &k.bracket,
        }
    }

    pub fn triple(&self) -> Option<&MultilinearMap> {
        match self {
            Structure::BiHom(_) => None,
            Structure::Akivis(k) => Some(&k.triple),
            Structure::BiHomAkivis(k) => Some(&k.triple),
        }
    }

    pub fn is_regular(&self) -> bool {
        match self {
            Structure::BiHom(a) => a.is_regular(),
            Structure::Akivis(_) => true,
            Structure::BiHomAkivis(k) => k.regular,
        }
    }

    pub fn is_multiplicative(&self) -> bool {
        match self {
            Structure::BiHom(a) => a.multiplicative,
            Structure::Akivis(_) => true,
            Structure::BiHomAkivis(k) => k.multiplicative,
        }
    }
}

impl From<BiHomAlgebra> for Structure {
    fn from(a: BiHomAlgebra) -> Self {
        Structure::BiHom(a)
    }
}

impl From<AkivisAlgebra> for Structure {
    fn from(k: AkivisAlgebra) -> Self {
        Structure::Akivis(k)
    }
}

impl From<BiHomAkivisAlgebra> for Structure {
    fn from(k: BiHomAkivisAlgebra) -> Self {
        Structure::BiHomAkivis(k)
    }
}

/// One validation flag and, when it fails, where.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagCheck {
    pub holds: bool,
    pub witness: Option<String>,
}

impl FlagCheck {
    fn ok() -> Self {
        FlagCheck { holds: true, witness: None }
    }

    fn failed(witness: String) -> Self {
        FlagCheck { holds: false, witness: Some(witness) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub commuting: FlagCheck,
    pub regular: FlagCheck,
    pub multiplicative: FlagCheck,
}

impl ValidationReport {
    pub fn all_hold(&self) -> bool {
        self.commuting.holds && self.regular.holds && self.multiplicative.holds
    }
}

/// Computes the commuting / regular / multiplicative flags of raw BiHom data
/// without rejecting anything.
pub fn validate_bihom(mu: &MultilinearMap, alpha: &LinearMap, beta: &LinearMap) -> Result<ValidationReport, Error> {
    check_shape(mu, 2)?;
    check_map(alpha, mu.dim())?;
    check_map(beta, mu.dim())?;

    let ab = alpha.compose(beta)?;
    let ba = beta.compose(alpha)?;
    let n = mu.dim();
    let commuting = match (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).find(|&(r, c)| ab.get(r, c) != ba.get(r, c)) {
        None => FlagCheck::ok(),
        Some((r, c)) => FlagCheck::failed(format!("(alpha∘beta)[{r},{c}] = {} but (beta∘alpha)[{r},{c}] = {}", ab.get(r, c), ba.get(r, c))),
    };

    let regular = match (alpha.inverse(), beta.inverse()) {
        (Ok(_), Ok(_)) => FlagCheck::ok(),
        (Err(_), _) => FlagCheck::failed("alpha is singular".into()),
        (_, Err(_)) => FlagCheck::failed("beta is singular".into()),
    };

    let multiplicative = match morphism_witness(alpha, mu, mu) {
        Some(w) => FlagCheck::failed(format!("alpha∘mu != mu∘(alpha⊗alpha) at {w:?}")),
        None => match morphism_witness(beta, mu, mu) {
            Some(w) => FlagCheck::failed(format!("beta∘mu != mu∘(beta⊗beta) at {w:?}")),
            None => FlagCheck::ok(),
        },
    };

    Ok(ValidationReport { commuting, regular, multiplicative })
}

/// First basis tuple (lexicographic) where `f∘src != tgt∘f^{⊗k}`.
pub(crate) fn morphism_witness(f: &LinearMap, src: &MultilinearMap, tgt: &MultilinearMap) -> Option<Vec<usize>> {
    let dim = src.dim();
    let cols: Vec<Vector> = (0..dim).map(|c| f.column(c)).collect();
    let mut idx = vec![0usize; src.arity()];
    for flat in 0..dim.pow(src.arity() as u32) {
        unflatten(dim, flat, &mut idx);
        let lhs = f.apply_unchecked(&src.on_basis_vector(&idx));
        let args: Vec<&Vector> = idx.iter().map(|&i| &cols[i]).collect();
        let rhs = tgt.eval_unchecked(&args);
        if lhs != rhs {
            return Some(idx);
        }
    }
    None
}

/// First basis pair `(i, j)`, `i <= j`, with `[β e_i, α e_j] + [β e_j, α e_i] != 0`.
fn skew_witness(bracket: &MultilinearMap, alpha: &LinearMap, beta: &LinearMap) -> Option<Vec<usize>> {
    let dim = bracket.dim();
    let a: Vec<Vector> = (0..dim).map(|c| alpha.column(c)).collect();
    let b: Vec<Vector> = (0..dim).map(|c| beta.column(c)).collect();
    for i in 0..dim {
        for j in i..dim {
            let s = bracket.eval_unchecked(&[&b[i], &a[j]]) + bracket.eval_unchecked(&[&b[j], &a[i]]);
            if !s.is_zero() {
                return Some(vec![i, j]);
            }
        }
    }
    None
}

fn check_shape(m: &MultilinearMap, arity: usize) -> Result<(), Error> {
    if m.arity() != arity {
        return Err(Error::ArityMismatch { expected: arity, found: m.arity() });
    }
    if m.dim() > MAX_DIM {
        return Err(Error::DimensionTooLarge { dim: m.dim(), max: MAX_DIM });
    }
    Ok(())
}

fn check_map(f: &LinearMap, dim: usize) -> Result<(), Error> {
    if f.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: f.dim() });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linear::Rational;

    #[test]
    fn ex1_family_validates() {
        let a = catalog::make_ex1(&Rational::one()).unwrap();
        let r = a.validate();
        assert!(r.commuting.holds && r.regular.holds && r.multiplicative.holds);
        assert!(a.is_regular() && a.is_multiplicative());
    }

    #[test]
    fn identity_maps_always_validate() {
        let mu = catalog::ex1_base_mu();
        let id = LinearMap::identity(2);
        let r = validate_bihom(&mu, &id, &id).unwrap();
        assert!(r.all_hold());
    }

    #[test]
    fn all_ones_beta_fails_commuting_and_regular() {
        let mu = catalog::ex1_base_mu();
        let alpha = catalog::alpha_lambda(&Rational::one()).unwrap();
        let ones = LinearMap::from_int_columns(&[&[1, 1], &[1, 1]]).unwrap();
        let r = validate_bihom(&mu, &alpha, &ones).unwrap();
        // α = [[2,1],[0,1]], J = all ones: αJ = [[3,3],[1,1]], Jα = [[2,2],[2,2]].
        assert!(!r.commuting.holds);
        assert!(r.commuting.witness.as_deref().unwrap().contains("[0,0]"));
        assert!(!r.regular.holds);
        assert_eq!(r.regular.witness.as_deref(), Some("beta is singular"));
        assert!(matches!(BiHomAlgebra::new(mu, alpha, ones), Err(Error::NonCommuting(..))));
    }

    #[test]
    fn non_multiplicative_witness_is_lexicographic() {
        let mu = catalog::ex1_base_mu();
        let two = LinearMap::scalar(2, &Rational::int(2));
        let a = BiHomAlgebra::new(mu.clone(), two.clone(), LinearMap::identity(2)).unwrap();
        assert!(!a.is_multiplicative());
        assert!(a.is_regular());
        // 2·μ(e0,e0) = 0 = μ(2e0,2e0), first failure is at (0,1).
        assert_eq!(morphism_witness(&two, &mu, &mu), Some(vec![0, 1]));
    }

    #[test]
    fn akivis_rejects_non_skew_bracket() {
        let br = MultilinearMap::from_entries(2, 2, vec![(vec![0, 1], 0, Rational::one())]).unwrap();
        let tri = MultilinearMap::zero(2, 3).unwrap();
        assert!(matches!(AkivisAlgebra::new(br, tri), Err(Error::NotSkewSymmetric(_))));
    }

    #[test]
    fn akivis_rejects_identity_failure() {
        // With a zero bracket the identity says the alternating sum of the
        // triple vanishes; a lone [e0,e1,e2] = e0 breaks that.
        let br = MultilinearMap::zero(3, 2).unwrap();
        let tri = MultilinearMap::from_entries(3, 3, vec![(vec![0, 1, 2], 0, Rational::one())]).unwrap();
        assert!(matches!(AkivisAlgebra::new(br, tri), Err(Error::AkivisIdentityFails { .. })));
    }

    #[test]
    fn dimension_cap_enforced() {
        let mu = MultilinearMap::zero(MAX_DIM + 1, 2).unwrap();
        assert!(matches!(BiHomAlgebra::untwisted(mu), Err(Error::DimensionTooLarge { .. })));
    }
}
