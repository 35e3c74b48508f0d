//! Graded multiplicity formulas for `V ⊗ O_Ñ` in the exotic heart and the
//! classes of dominant tilting objects.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::affweyl::AffineWeylGroup;
use crate::charring::{Basis, CharRing, CharacterMultiset};
use crate::error::{Error, Result};
use crate::exotic_k::{KClass, KModule};
use crate::laurent::LaurentPoly;
use crate::rootdata::Weight;

/// Outcome of comparing the two computations of `[V ⊗ O_Ñ]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconcileReport {
    pub status: ReconcileStatus,
    /// Weights where the two sides differ, in increasing order.
    pub detail: Vec<WeightDiff>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReconcileStatus {
    Match,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDiff {
    pub weight: Weight,
    pub tensor: LaurentPoly,
    pub costandard: LaurentPoly,
}

impl ReconcileReport {
    pub fn passed(&self) -> bool {
        self.status == ReconcileStatus::Match
    }

    pub fn first_mismatch(&self) -> Option<&WeightDiff> {
        self.detail.first()
    }
}

#[derive(Debug)]
pub struct TiltMult {
    km: KModule,
    ring: CharRing,
}

impl TiltMult {
    pub fn new(group: Arc<AffineWeylGroup>) -> Self {
        let ring = CharRing::new(group.root_system_arc().clone());
        Self { km: KModule::new(group), ring }
    }

    pub fn from_spec(spec: &str) -> Result<Self> {
        Ok(Self::new(Arc::new(AffineWeylGroup::from_spec(spec)?)))
    }

    pub fn kmodule(&self) -> &KModule {
        &self.km
    }

    pub fn ring(&self) -> &CharRing {
        &self.ring
    }

    fn check_dominant(&self, lambda: &Weight) -> Result<()> {
        let rs = self.ring.root_system();
        rs.check_weight(lambda)?;
        if !rs.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        Ok(())
    }

    /// `Σ_k (Γ(Ñ, O(λ))_k : N(ν)) v^k = M_ν^λ(v^2)`
    pub fn gamma_graded_char(&self, lambda: &Weight, nu: &Weight) -> Result<LaurentPoly> {
        self.check_dominant(lambda)?;
        self.check_dominant(nu)?;
        Ok(self.ring.lusztig_q(nu, lambda)?.substitute_power(2))
    }

    /// `Σ_i (V ⊗ O : Δ^μ⟨i⟩) v^i = v^{-δ(μ)} Σ_ν (V : M(ν)) M_ν^{dom μ}(v^-2)`
    pub fn std_mult(&self, v: &CharacterMultiset, mu: &Weight) -> Result<LaurentPoly> {
        v.expect_basis(Basis::Weyl)?;
        v.check(self.ring.root_system())?;
        let rs = self.ring.root_system();
        rs.check_weight(mu)?;
        let rep = rs.dominant_rep(mu);
        let mut sum = LaurentPoly::zero();
        for (nu, &c) in v.mults() {
            let q = self.ring.lusztig_q(nu, &rep.dom)?;
            sum += &q.substitute_power(-2).scale(c as i64);
        }
        Ok(sum.shift(-(rep.delta as i32)))
    }

    /// `Σ_i (V ⊗ O : ∇^μ⟨i⟩) v^i = v^{δ(μ)} Σ_ν (V : N(-w_0 ν)) M_ν^{dom(-μ)}(v^2)`
    pub fn costd_mult(&self, v: &CharacterMultiset, mu: &Weight) -> Result<LaurentPoly> {
        v.expect_basis(Basis::Good)?;
        v.check(self.ring.root_system())?;
        let rs = self.ring.root_system();
        rs.check_weight(mu)?;
        let target = rs.dom(&-mu);
        let mut sum = LaurentPoly::zero();
        for (nu_dual, &c) in v.mults() {
            // (V : N(-w_0 ν)) = c exactly when ν = -w_0 ν_dual
            let nu = rs.minus_w0(nu_dual);
            let q = self.ring.lusztig_q(&nu, &target)?;
            sum += &q.substitute_power(2).scale(c as i64);
        }
        Ok(sum.shift(rs.delta(mu) as i32))
    }

    /// Weights `μ` with `dom(μ) ≼ ν` for some `ν` in the support of `V`.
    pub fn support(&self, v: &CharacterMultiset) -> Vec<Weight> {
        let rs = self.ring.root_system();
        let mut out = BTreeSet::new();
        for nu in v.mults().keys() {
            out.extend(rs.conv_set(nu));
        }
        out.into_iter().collect()
    }

    /// `Σ_μ costd_mult(V, μ) m_μ`
    pub fn costd_class(&self, v: &CharacterMultiset) -> Result<KClass> {
        let mut out = KClass::zero();
        for mu in self.support(v) {
            let c = self.costd_mult(v, &mu)?;
            out.add_term(mu, &c);
        }
        Ok(out)
    }

    /// `Σ_μ std_mult(V, μ) [Δ^μ_Ñ]`
    pub fn std_class(&self, v: &CharacterMultiset) -> Result<KClass> {
        let mut out = KClass::zero();
        for mu in self.support(v) {
            let c = self.std_mult(v, &mu)?;
            if !c.is_zero() {
                out = out.add(&self.km.delta_class(&mu).scale(&c));
            }
        }
        Ok(out)
    }

    /// `[V ⊗ O_Ñ] = m_0 · Σ_μ dim(V_μ) θ_μ`
    pub fn tensor_unit(&self, v: &CharacterMultiset) -> Result<KClass> {
        let weights = self.ring.full_weights(v)?;
        Ok(self.km.tensor_class(&weights, &self.km.unit()))
    }

    /// `[T^λ] = [T(λ) ⊗ O_Ñ]`, with `T(λ) = M(λ)` unless a Weyl-basis character is supplied.
    pub fn dominant_tilting_class(&self, lambda: &Weight, tilt_char: Option<&CharacterMultiset>) -> Result<KClass> {
        self.check_dominant(lambda)?;
        let weyl = match tilt_char {
            Some(t) => {
                t.expect_basis(Basis::Weyl)?;
                t.clone()
            }
            None => CharacterMultiset::single(Basis::Weyl, lambda.clone()),
        };
        // A tilting module has (T : M(ν)) = (T : N(ν)).
        let good = weyl.with_basis(Basis::Good);
        let out = self.costd_class(&good)?;
        let oracle = self.tensor_unit(&good)?;
        assert_eq!(out, oracle, "tilting class disagrees with the tensor product class");
        Ok(out)
    }

    /// Compares `m_0 · Σ dim(V_μ) θ_μ` with `Σ_μ costd_mult(V, μ) m_μ`.
    pub fn reconcile(&self, v: &CharacterMultiset) -> Result<ReconcileReport> {
        let good = v.with_basis(Basis::Good);
        let lhs = self.tensor_unit(&good)?;
        let rhs = self.costd_class(&good)?;
        let weights: BTreeSet<&Weight> = lhs.support().chain(rhs.support()).collect();
        let detail: Vec<WeightDiff> = weights
            .into_iter()
            .filter(|w| lhs.coeff(w) != rhs.coeff(w))
            .map(|w| WeightDiff { weight: w.clone(), tensor: lhs.coeff(w), costandard: rhs.coeff(w) })
            .collect();
        let status = if detail.is_empty() { ReconcileStatus::Match } else { ReconcileStatus::Mismatch };
        Ok(ReconcileReport { status, detail })
    }
}
