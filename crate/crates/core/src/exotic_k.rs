//! A K-theoretic model of the exotic heart: the right H-module with basis
//! `m_λ = [∇^λ_Ñ]`, `λ ∈ X`, in which `m_λ = m_0 · T_{w_λ}`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::affweyl::AffineWeylGroup;
use crate::error::{Error, Result};
use crate::hecke::{BraidGen, BraidWord, HeckeAlgebra, HeckeElement};
use crate::laurent::LaurentPoly;
use crate::rootdata::Weight;

/// A finite `Z[v, v^-1]`-combination of the basis vectors `m_λ`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct KClass {
    terms: BTreeMap<Weight, LaurentPoly>,
}

impl KClass {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `m_λ`
    pub fn basis(lambda: Weight) -> Self {
        Self { terms: BTreeMap::from([(lambda, LaurentPoly::one())]) }
    }

    pub fn terms(&self) -> &BTreeMap<Weight, LaurentPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Weight) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, lambda: Weight, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda).or_default();
        *entry += p;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &KClass) -> KClass {
        let mut out = self.clone();
        for (l, p) in &other.terms {
            out.add_term(l.clone(), p);
        }
        out
    }

    pub fn sub(&self, other: &KClass) -> KClass {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    pub fn scale(&self, p: &LaurentPoly) -> KClass {
        if p.is_zero() {
            return KClass::zero();
        }
        Self { terms: self.terms.iter().map(|(l, c)| (l.clone(), c * p)).collect() }
    }

    /// Every coefficient lies in `Z≥0[v, v^-1]`.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(LaurentPoly::is_nonnegative)
    }

    pub fn to_json(&self) -> Vec<KTermJson> {
        self.terms.iter().map(|(w, p)| KTermJson { weight: w.clone(), poly: p.clone() }).collect()
    }

    pub fn from_json(terms: &[KTermJson]) -> KClass {
        let mut out = KClass::zero();
        for t in terms {
            out.add_term(t.weight.clone(), &t.poly);
        }
        out
    }
}

impl FromIterator<(Weight, LaurentPoly)> for KClass {
    fn from_iter<I: IntoIterator<Item = (Weight, LaurentPoly)>>(iter: I) -> Self {
        let mut out = KClass::zero();
        for (w, p) in iter {
            out.add_term(w, &p);
        }
        out
    }
}

impl fmt::Debug for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Highest weight first, e.g. `m[1] + v*m[-1]`.
impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(w, p)| {
                let m = format!("m{w}");
                if p.is_one() {
                    m
                } else if *p == LaurentPoly::constant(-1) {
                    format!("-{m}")
                } else if p.terms().len() == 1 {
                    format!("{p}*{m}")
                } else {
                    format!("({p})*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// JSON record `{weight, poly}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTermJson {
    pub weight: Weight,
    pub poly: LaurentPoly,
}

/// Which end of a Bott–Samelson sequence acts first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BsOrder {
    /// `(s_1, ..., s_r)` models `Ξ_{s_1} ∘ ⋯ ∘ Ξ_{s_r}`: the last entry acts first.
    #[default]
    InnermostFirst,
    /// The first entry acts first.
    Reversed,
}

/// The right H-module structure on the K-group.
#[derive(Clone, Debug)]
pub struct KModule {
    hecke: HeckeAlgebra,
}

impl KModule {
    pub fn new(group: Arc<AffineWeylGroup>) -> Self {
        Self { hecke: HeckeAlgebra::new(group) }
    }

    pub fn from_spec(spec: &str) -> Result<Self> {
        Ok(Self { hecke: HeckeAlgebra::from_spec(spec)? })
    }

    pub fn hecke(&self) -> &HeckeAlgebra {
        &self.hecke
    }

    pub fn group(&self) -> &AffineWeylGroup {
        self.hecke.group()
    }

    pub fn unit(&self) -> KClass {
        KClass::basis(self.group().root_system().zero())
    }

    /// `m_λ · T_s` for the generator with index `gen`.
    pub fn act_simple_basis(&self, lambda: &Weight, gen: usize) -> KClass {
        let g = self.group();
        let (w, _) = g.w_lambda(lambda);
        let u = g.mul(&w, &g.generators()[gen].1);
        let mu = u.translation();
        if mu == lambda {
            debug_assert_eq!(u.length(), w.length() + 1);
            return KClass::basis(lambda.clone()).scale(&LaurentPoly::v_inv());
        }
        debug_assert!(g.w_lambda(mu).0 == u, "w_λ s not minimal in its coset");
        if u.length() > w.length() {
            KClass::basis(mu.clone())
        } else {
            let mut out = KClass::basis(mu.clone());
            out.add_term(lambda.clone(), &LaurentPoly::v_inv_minus_v());
            out
        }
    }

    /// `m_λ · T_ω`
    pub fn act_omega_basis(&self, lambda: &Weight, k: usize) -> Weight {
        let g = self.group();
        let (w, _) = g.w_lambda(lambda);
        g.mul(&w, g.omega_element(k)).translation().clone()
    }

    pub fn act_simple(&self, c: &KClass, gen: usize) -> KClass {
        let mut out = KClass::zero();
        for (l, p) in &c.terms {
            for (m, q) in self.act_simple_basis(l, gen).terms {
                out.add_term(m, &(p * &q));
            }
        }
        out
    }

    /// `c · T_s^{-1} = c · T_s + (v - v^-1) c`
    pub fn act_simple_inv(&self, c: &KClass, gen: usize) -> KClass {
        self.act_simple(c, gen).add(&c.scale(&LaurentPoly::v_minus_v_inv()))
    }

    pub fn act_omega(&self, c: &KClass, k: usize) -> KClass {
        c.terms.iter().map(|(l, p)| (self.act_omega_basis(l, k), p.clone())).collect()
    }

    pub fn act_letter(&self, c: &KClass, g: BraidGen, inverse: bool) -> KClass {
        match (g, inverse) {
            (BraidGen::Simple(s), false) => self.act_simple(c, s),
            (BraidGen::Simple(s), true) => self.act_simple_inv(c, s),
            (BraidGen::Omega(k), false) => self.act_omega(c, k),
            (BraidGen::Omega(k), true) => self.act_omega(c, self.group().omega_inverse_index(k)),
        }
    }

    pub fn act_word(&self, c: &KClass, word: &BraidWord) -> KClass {
        word.letters().iter().fold(c.clone(), |acc, &(g, inv)| self.act_letter(&acc, g, inv))
    }

    /// `c · ξ`, expanding each `T_x` along a reduced word.
    pub fn act_hecke(&self, c: &KClass, xi: &HeckeElement) -> KClass {
        let mut out = KClass::zero();
        for (x, p) in xi.terms() {
            let part = self.act_word(c, &self.hecke.element_word(x));
            out = out.add(&part.scale(p));
        }
        out
    }

    /// `[∇^λ_Ñ] = m_λ`, checked against `m_0 · T_{w_λ}` in debug builds.
    pub fn nabla_class(&self, lambda: &Weight) -> KClass {
        let out = KClass::basis(lambda.clone());
        debug_assert_eq!(
            self.act_word(&self.unit(), &self.hecke.element_word(&self.group().w_lambda(lambda).0)),
            out
        );
        out
    }

    /// `[Δ^λ_Ñ] = m_0 · (T_{w_λ^{-1}})^{-1}`
    pub fn delta_class(&self, lambda: &Weight) -> KClass {
        let g = self.group();
        let w_inv = g.inverse(&g.w_lambda(lambda).0);
        self.act_word(&self.unit(), &self.hecke.element_word(&w_inv).inverse())
    }

    /// `[O_Ñ(λ)] = m_0 · θ_λ`
    pub fn line_bundle_class(&self, lambda: &Weight) -> KClass {
        let out = self.act_word(&self.unit(), &self.hecke.theta_word(lambda));
        if cfg!(debug_assertions) {
            let rs = self.group().root_system();
            if rs.is_dominant(lambda) {
                assert_eq!(out, KClass::basis(lambda.clone()), "O({lambda}) is not ∇^{lambda}");
            }
            if rs.is_dominant(&-lambda) {
                let shift = LaurentPoly::monomial(1, rs.delta(lambda) as i32);
                assert_eq!(out, self.delta_class(lambda).scale(&shift), "O({lambda}) is not Δ^{lambda}_0");
            }
        }
        out
    }

    /// `m_0 · T_ω · (T_{s_r} + v) ⋯ (T_{s_1} + v)` for `seq = (s_1, ..., s_r)`
    /// of generator indices (in the default order).
    pub fn bott_samelson_class(&self, omega: usize, seq: &[usize], order: BsOrder) -> KClass {
        let start = self.act_omega(&self.unit(), omega);
        let step = |c: KClass, &s: &usize| self.act_simple(&c, s).add(&c.scale(&LaurentPoly::v()));
        match order {
            BsOrder::InnermostFirst => seq.iter().rev().fold(start, step),
            BsOrder::Reversed => seq.iter().fold(start, step),
        }
    }

    /// `c · Σ_μ dim(V_μ) θ_μ` for a full weight-multiplicity map of `V`.
    pub fn tensor_class(&self, weights: &BTreeMap<Weight, u64>, c: &KClass) -> KClass {
        let mut out = KClass::zero();
        for (mu, &dim) in weights {
            if dim == 0 {
                continue;
            }
            let part = self.act_word(c, &self.hecke.theta_word(mu));
            out = out.add(&part.scale(&LaurentPoly::constant(dim as i64)));
        }
        out
    }

    /// Rejects classes with weights of the wrong rank.
    pub fn check_class(&self, c: &KClass) -> Result<()> {
        let rs = self.group().root_system();
        for w in c.support() {
            rs.check_weight(w)?;
        }
        Ok(())
    }

    /// Basis indices of a Bott–Samelson sequence given by names like `s1`, `s0`.
    pub fn parse_sequence(&self, names: &[String]) -> Result<Vec<usize>> {
        let g = self.group();
        names
            .iter()
            .map(|n| {
                let id = g.parse_generator(n)?;
                g.generator_index(id).ok_or_else(|| Error::Parse(format!("unknown generator `{n}`")))
            })
            .collect()
    }
}
