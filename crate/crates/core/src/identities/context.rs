use std::sync::OnceLock;

use crate::linear::{LinearMap, MultilinearMap, Vector};
use crate::structures::{self, Structure};

const MIN_EXP: i32 = -2;
const MAX_EXP: i32 = 5;
const SPAN: usize = (MAX_EXP - MIN_EXP + 1) as usize;

/// Everything an identity evaluator needs from a structure, with derived
/// tensors (associator, Jacobiator, ...) materialized on first use.
pub struct Context<'a> {
    structure: &'a Structure,
    alpha: LinearMap,
    beta: LinearMap,
    alpha_inv: Option<LinearMap>,
    beta_inv: Option<LinearMap>,
    words: Vec<OnceLock<LinearMap>>,
    associator: OnceLock<MultilinearMap>,
    commutator: OnceLock<MultilinearMap>,
    jacobiator: OnceLock<MultilinearMap>,
    composite: OnceLock<MultilinearMap>,
    bruck_kleinfeld: OnceLock<MultilinearMap>,
}

impl<'a> Context<'a> {
    pub fn new(structure: &'a Structure) -> Self {
        let (alpha, beta) = structure.maps();
        let alpha_inv = alpha.inverse().ok();
        let beta_inv = beta.inverse().ok();
        Context {
            structure,
            alpha,
            beta,
            alpha_inv,
            beta_inv,
            words: (0..SPAN * SPAN).map(|_| OnceLock::new()).collect(),
            associator: OnceLock::new(),
            commutator: OnceLock::new(),
            jacobiator: OnceLock::new(),
            composite: OnceLock::new(),
            bruck_kleinfeld: OnceLock::new(),
        }
    }

    pub fn structure(&self) -> &Structure {
        self.structure
    }

    pub fn dim(&self) -> usize {
        self.structure.dim()
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

    pub fn has_product(&self) -> bool {
        matches!(self.structure, Structure::BiHom(_))
    }

    pub fn has_triple(&self) -> bool {
        self.structure.triple().is_some()
    }

    pub fn is_untwisted(&self) -> bool {
        self.alpha.is_identity() && self.beta.is_identity()
    }

    /// `α^a β^b`. Negative exponents need a regular structure.
    pub fn word(&self, a: i32, b: i32) -> &LinearMap {
        assert!((MIN_EXP..=MAX_EXP).contains(&a) && (MIN_EXP..=MAX_EXP).contains(&b), "exponent out of range");
        let slot = (a - MIN_EXP) as usize * SPAN + (b - MIN_EXP) as usize;
        self.words[slot].get_or_init(|| {
            let power = |f: &LinearMap, inv: &Option<LinearMap>, e: i32| -> LinearMap {
                if e >= 0 {
                    f.pow(e).expect("nonnegative power")
                } else {
                    inv.as_ref().expect("negative power of a singular map").pow(-e).expect("nonnegative power")
                }
            };
            power(&self.alpha, &self.alpha_inv, a).compose_unchecked(&power(&self.beta, &self.beta_inv, b))
        })
    }

    /// `α^a β^b (v)`.
    pub fn ap(&self, a: i32, b: i32, v: &Vector) -> Vector {
        if a == 0 && b == 0 {
            return v.clone();
        }
        self.word(a, b).apply_unchecked(v)
    }

    /// The binary operation: `μ` of a BiHom-algebra or the bracket of an
    /// (BiHom-)Akivis algebra.
    pub fn binary(&self) -> &MultilinearMap {
        self.structure.binary()
    }

    pub fn mul(&self, u: &Vector, v: &Vector) -> Vector {
        self.binary().eval_unchecked(&[u, v])
    }

    pub fn br(&self, u: &Vector, v: &Vector) -> Vector {
        self.binary().eval_unchecked(&[u, v])
    }

    pub fn tri(&self, u: &Vector, v: &Vector, w: &Vector) -> Vector {
        self.structure.triple().expect("structure has a triple product").eval_unchecked(&[u, v, w])
    }

    fn bihom(&self) -> &structures::BiHomAlgebra {
        match self.structure {
            Structure::BiHom(a) => a,
            _ => panic!("operation needs a BiHom-algebra"),
        }
    }

    pub fn associator(&self) -> &MultilinearMap {
        self.associator.get_or_init(|| structures::bihom_associator(self.bihom()))
    }

    pub fn ass(&self, u: &Vector, v: &Vector, w: &Vector) -> Vector {
        self.associator().eval_unchecked(&[u, v, w])
    }

    /// BiHom-commutator of `μ`; needs a regular BiHom-algebra.
    pub fn commutator(&self) -> &MultilinearMap {
        self.commutator.get_or_init(|| structures::bihom_commutator(self.bihom()).expect("regular algebra"))
    }

    pub fn comm(&self, u: &Vector, v: &Vector) -> Vector {
        self.commutator().eval_unchecked(&[u, v])
    }

    /// BiHom-Jacobiator of the binary operation.
    pub fn jacobiator(&self) -> &MultilinearMap {
        self.jacobiator
            .get_or_init(|| structures::bihom_jacobiator(self.binary(), &self.alpha, &self.beta).expect("shapes agree"))
    }

    pub fn jac(&self, u: &Vector, v: &Vector, w: &Vector) -> Vector {
        self.jacobiator().eval_unchecked(&[u, v, w])
    }

    /// `as ∘ (β² ⊗ αβ ⊗ α²)`.
    pub fn composite(&self) -> &MultilinearMap {
        self.composite.get_or_init(|| {
            self.associator()
                .precompose(&[self.word(0, 2), self.word(1, 1), self.word(2, 0)])
                .expect("shapes agree")
        })
    }

    pub fn bruck_kleinfeld(&self) -> &MultilinearMap {
        self.bruck_kleinfeld.get_or_init(|| structures::bruck_kleinfeld(self.bihom()).expect("regular algebra"))
    }
}
