use crate::error::Error;
use crate::identities::{check_morphism, Verdict};
use crate::linear::{LinearMap, MultilinearMap, Rational, Vector};
use crate::structures::{AkivisAlgebra, BiHomAkivisAlgebra, BiHomAlgebra, Structure};

/// `μ ∘ (α ⊗ β)` with twisting maps `(α, β)`. Multiplicativity of the result
/// is recorded, not required.
pub fn yau_twist(mu: &MultilinearMap, alpha: &LinearMap, beta: &LinearMap) -> Result<BiHomAlgebra, Error> {
    if mu.arity() != 2 {
        return Err(Error::ArityMismatch { expected: 2, found: mu.arity() });
    }
    let twisted = mu.precompose(&[alpha, beta])?;
    BiHomAlgebra::new(twisted, alpha.clone(), beta.clone())
}

/// `as(x,y,z) = μ(μ(x,y), β z) − μ(α x, μ(y,z))`.
pub fn bihom_associator(a: &BiHomAlgebra) -> MultilinearMap {
    let dim = a.dim();
    let mu = a.mu();
    let alpha_cols: Vec<Vector> = (0..dim).map(|c| a.alpha().column(c)).collect();
    let beta_cols: Vec<Vector> = (0..dim).map(|c| a.beta().column(c)).collect();
    MultilinearMap::from_basis_fn(dim, 3, |idx| {
        let (x, y, z) = (idx[0], idx[1], idx[2]);
        let left = mu.eval_unchecked(&[&mu.on_basis_vector(&[x, y]), &beta_cols[z]]);
        let right = mu.eval_unchecked(&[&alpha_cols[x], &mu.on_basis_vector(&[y, z])]);
        left - right
    })
    .expect("arity 3 is supported")
}

/// `[x,y] = μ(x,y) − μ(α⁻¹β y, αβ⁻¹ x)`; needs invertible maps.
pub fn bihom_commutator(a: &BiHomAlgebra) -> Result<MultilinearMap, Error> {
    let dim = a.dim();
    let left = a.alpha_inv()?.compose(a.beta())?;
    let right = a.alpha().compose(a.beta_inv()?)?;
    let l: Vec<Vector> = (0..dim).map(|c| left.column(c)).collect();
    let r: Vec<Vector> = (0..dim).map(|c| right.column(c)).collect();
    let mu = a.mu();
    MultilinearMap::from_basis_fn(dim, 2, |idx| {
        mu.on_basis_vector(idx) - mu.eval_unchecked(&[&l[idx[1]], &r[idx[0]]])
    })
}

/// The BiHom-commutator / BiHom-associator algebra of a multiplicative
/// regular BiHom-algebra: bracket as in [`bihom_commutator`], triple
/// `[x,y,z] = as(α⁻¹β² x, β y, α z)`.
pub fn associated_akivis(a: &BiHomAlgebra) -> Result<BiHomAkivisAlgebra, Error> {
    if !a.is_regular() {
        a.alpha_inv()?;
        a.beta_inv()?;
    }
    if !a.is_multiplicative() {
        let detail = a.validate().multiplicative.witness.unwrap_or_default();
        return Err(Error::NotMultiplicative(detail));
    }
    let bracket = bihom_commutator(a)?;
    let first = a.alpha_inv()?.compose(&a.beta().pow(2)?)?;
    let triple = bihom_associator(a).precompose(&[&first, a.beta(), a.alpha()])?;
    BiHomAkivisAlgebra::new(bracket, triple, a.alpha().clone(), a.beta().clone())
}

/// Twists an Akivis algebra by commuting endomorphisms:
/// `[x,y]' = [α x, β y]`, `[x,y,z]' = αβ²([x,y,z])`.
pub fn akivis_to_bihom(k: &AkivisAlgebra, alpha: &LinearMap, beta: &LinearMap) -> Result<BiHomAkivisAlgebra, Error> {
    let source = Structure::Akivis(k.clone());
    for (name, f) in [("alpha", alpha), ("beta", beta)] {
        let report = check_morphism(f, &source, &source)?;
        if report.verdict != Verdict::Pass {
            return Err(Error::NotEndomorphism { map: name.into(), detail: report.summary() });
        }
    }
    if !alpha.commutes_with(beta)? {
        return Err(Error::NonCommuting("alpha".into(), "beta".into()));
    }
    let bracket = k.bracket().precompose(&[alpha, beta])?;
    let triple = k.triple().postcompose(&alpha.compose(&beta.pow(2)?)?)?;
    BiHomAkivisAlgebra::new(bracket, triple, alpha.clone(), beta.clone())
}

/// Twists a BiHom-Akivis algebra by commuting self-morphisms `φ, ψ`:
/// `[x,y]' = [φ x, ψ y]`, `[x,y,z]' = φψ²([x,y,z])`, maps `(φα, ψβ)`.
pub fn twist_bihom_akivis(k: &BiHomAkivisAlgebra, phi: &LinearMap, psi: &LinearMap) -> Result<BiHomAkivisAlgebra, Error> {
    let source = Structure::BiHomAkivis(k.clone());
    for (name, f) in [("phi", phi), ("psi", psi)] {
        let report = check_morphism(f, &source, &source)?;
        if report.verdict != Verdict::Pass {
            return Err(Error::NotMorphism { map: name.into(), detail: report.summary() });
        }
    }
    if !phi.commutes_with(psi)? {
        return Err(Error::NonCommuting("phi".into(), "psi".into()));
    }
    let bracket = k.bracket().precompose(&[phi, psi])?;
    let triple = k.triple().postcompose(&phi.compose(&psi.pow(2)?)?)?;
    let alpha = phi.compose(k.alpha())?;
    let beta = psi.compose(k.beta())?;
    BiHomAkivisAlgebra::new(bracket, triple, alpha, beta)
}

/// `J(x,y,z) = ⟳ [β² x, [β y, α z]]`.
pub fn bihom_jacobiator(bracket: &MultilinearMap, alpha: &LinearMap, beta: &LinearMap) -> Result<MultilinearMap, Error> {
    if bracket.arity() != 2 {
        return Err(Error::ArityMismatch { expected: 2, found: bracket.arity() });
    }
    let dim = bracket.dim();
    for f in [alpha, beta] {
        if f.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: f.dim() });
        }
    }
    let beta2 = beta.pow(2)?;
    let inner = bracket.precompose(&[beta, alpha])?;
    let b2: Vec<Vector> = (0..dim).map(|c| beta2.column(c)).collect();
    MultilinearMap::from_basis_fn(dim, 3, |idx| {
        let mut acc = Vector::zeros(dim);
        for s in 0..3 {
            let (x, y, z) = (idx[s], idx[(s + 1) % 3], idx[(s + 2) % 3]);
            let v = bracket.eval_unchecked(&[&b2[x], &inner.on_basis_vector(&[y, z])]);
            acc.add_scaled(&Rational::one(), &v);
        }
        acc
    })
}

/// The BiHom-Bruck–Kleinfeld function
/// `f(w,x,y,z) = as(β²w·αβx, α²βy, α³z) − as(β²x, αβy, α²z)·α³βw − α²β²x·as(αβw, α²y, α³β⁻¹z)`.
pub fn bruck_kleinfeld(a: &BiHomAlgebra) -> Result<MultilinearMap, Error> {
    let dim = a.dim();
    let beta_inv = a.beta_inv()?.clone();
    a.alpha_inv()?;
    let word = |i: i32, j: i32| -> LinearMap {
        let p = a.alpha().pow(i).expect("regular");
        let q = if j < 0 { beta_inv.pow(-j).expect("regular") } else { a.beta().pow(j).expect("regular") };
        p.compose_unchecked(&q)
    };
    let cols = |f: LinearMap| -> Vec<Vector> { (0..dim).map(|c| f.column(c)).collect() };
    let b2 = cols(word(0, 2));
    let ab = cols(word(1, 1));
    let a2b = cols(word(2, 1));
    let a3 = cols(word(3, 0));
    let a3b = cols(word(3, 1));
    let a2 = cols(word(2, 0));
    let a2b2 = cols(word(2, 2));
    let a3b_inv = cols(word(3, -1));
    let mu = a.mu();
    let assoc = bihom_associator(a);
    MultilinearMap::from_basis_fn(dim, 4, |idx| {
        let (w, x, y, z) = (idx[0], idx[1], idx[2], idx[3]);
        let wx = mu.eval_unchecked(&[&b2[w], &ab[x]]);
        let t1 = assoc.eval_unchecked(&[&wx, &a2b[y], &a3[z]]);
        let as2 = assoc.eval_unchecked(&[&b2[x], &ab[y], &a2[z]]);
        let t2 = mu.eval_unchecked(&[&as2, &a3b[w]]);
        let as3 = assoc.eval_unchecked(&[&ab[w], &a2[y], &a3b_inv[z]]);
        let t3 = mu.eval_unchecked(&[&a2b2[x], &as3]);
        t1 - t2 - t3
    })
}
