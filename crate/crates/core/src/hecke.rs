//! The extended affine Hecke algebra in the standard basis `{T_x}`.
//!
//! Grading convention: the shift `<1>` is multiplication by `v`, and the
//! quadratic relation reads `(T_s - v^-1)(T_s + v) = 0`, so that
//! `T_s^{-1} = T_s + v - v^-1`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::affweyl::{AffineElement, AffineWeylGroup, ElementJson, SimpleReflectionId};
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::report::Report;
use crate::rootdata::Weight;

/// A generator of the extended affine braid group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BraidGen {
    /// `T_s` for the generator with this index in [`AffineWeylGroup::generators`].
    Simple(usize),
    /// `T_ω` for the Ω element with this index.
    Omega(usize),
}

/// A word in braid generators and their inverses, kept freely reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<(BraidGen, bool)>,
}

impl BraidWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[(BraidGen, bool)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends `g` (or `g^{-1}` when `inverse`), cancelling against the last letter.
    pub fn push(&mut self, g: BraidGen, inverse: bool) {
        if self.letters.last() == Some(&(g, !inverse)) {
            self.letters.pop();
        } else {
            self.letters.push((g, inverse));
        }
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut out = self.clone();
        for &(g, inv) in &other.letters {
            out.push(g, inv);
        }
        out
    }

    pub fn inverse(&self) -> BraidWord {
        let mut out = BraidWord::new();
        for &(g, inv) in self.letters.iter().rev() {
            out.push(g, !inv);
        }
        out
    }
}

impl FromIterator<(BraidGen, bool)> for BraidWord {
    fn from_iter<I: IntoIterator<Item = (BraidGen, bool)>>(iter: I) -> Self {
        let mut w = BraidWord::new();
        for (g, inv) in iter {
            w.push(g, inv);
        }
        w
    }
}

/// A finite `Z[v, v^-1]`-combination of standard basis elements `T_x`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct HeckeElement {
    terms: HashMap<AffineElement, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(x: AffineElement) -> Self {
        Self { terms: HashMap::from([(x, LaurentPoly::one())]) }
    }

    pub fn terms(&self) -> &HashMap<AffineElement, LaurentPoly> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: &AffineElement) -> LaurentPoly {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, x: AffineElement, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&x) {
            Some(c) => {
                *c += p;
                if c.is_zero() {
                    self.terms.remove(&x);
                }
            }
            None => {
                self.terms.insert(x, p.clone());
            }
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (x, p) in &other.terms {
            out.add_term(x.clone(), p);
        }
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    pub fn scale(&self, p: &LaurentPoly) -> HeckeElement {
        if p.is_zero() {
            return HeckeElement::zero();
        }
        Self { terms: self.terms.iter().map(|(x, c)| (x.clone(), c * p)).collect() }
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// JSON record for one term of a Hecke element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeTermJson {
    pub element: ElementJson,
    pub poly: LaurentPoly,
}

/// Hecke algebra operations over a fixed extended affine Weyl group.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    group: Arc<AffineWeylGroup>,
}

impl HeckeAlgebra {
    pub fn new(group: Arc<AffineWeylGroup>) -> Self {
        Self { group }
    }

    pub fn from_spec(spec: &str) -> Result<Self> {
        Ok(Self::new(Arc::new(AffineWeylGroup::from_spec(spec)?)))
    }

    pub fn group(&self) -> &AffineWeylGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<AffineWeylGroup> {
        &self.group
    }

    pub fn one(&self) -> HeckeElement {
        HeckeElement::basis(self.group.identity())
    }

    pub fn basis(&self, x: &AffineElement) -> HeckeElement {
        HeckeElement::basis(x.clone())
    }

    /// `ξ · T_s`: `T_x T_s = T_{xs}` if `ℓ(xs) > ℓ(x)`, else `T_{xs} + (v^-1 - v) T_x`.
    pub fn right_mul_simple(&self, xi: &HeckeElement, gen: usize) -> HeckeElement {
        let s = &self.group.generators()[gen].1;
        let q = LaurentPoly::v_inv_minus_v();
        let mut out = HeckeElement::zero();
        for (x, p) in &xi.terms {
            let xs = self.group.mul(x, s);
            let down = xs.length() < x.length();
            out.add_term(xs, p);
            if down {
                out.add_term(x.clone(), &(p * &q));
            }
        }
        out
    }

    /// `ξ · T_s^{-1} = ξ T_s + (v - v^-1) ξ`.
    pub fn right_mul_simple_inv(&self, xi: &HeckeElement, gen: usize) -> HeckeElement {
        self.right_mul_simple(xi, gen).add(&xi.scale(&LaurentPoly::v_minus_v_inv()))
    }

    /// `ξ · T_ω`, a relabelling of the basis.
    pub fn right_mul_omega(&self, xi: &HeckeElement, k: usize) -> HeckeElement {
        if k == 0 {
            return xi.clone();
        }
        let om = self.group.omega_element(k);
        HeckeElement { terms: xi.terms.iter().map(|(x, p)| (self.group.mul(x, om), p.clone())).collect() }
    }

    /// `T_s · ξ`, by the left-handed version of the multiplication rule.
    pub fn left_mul_simple(&self, gen: usize, xi: &HeckeElement) -> HeckeElement {
        let s = &self.group.generators()[gen].1;
        let q = LaurentPoly::v_inv_minus_v();
        let mut out = HeckeElement::zero();
        for (x, p) in &xi.terms {
            let sx = self.group.mul(s, x);
            let down = sx.length() < x.length();
            out.add_term(sx, p);
            if down {
                out.add_term(x.clone(), &(p * &q));
            }
        }
        out
    }

    pub fn right_mul_letter(&self, xi: &HeckeElement, g: BraidGen, inverse: bool) -> HeckeElement {
        match (g, inverse) {
            (BraidGen::Simple(s), false) => self.right_mul_simple(xi, s),
            (BraidGen::Simple(s), true) => self.right_mul_simple_inv(xi, s),
            (BraidGen::Omega(k), false) => self.right_mul_omega(xi, k),
            (BraidGen::Omega(k), true) => self.right_mul_omega(xi, self.group.omega_inverse_index(k)),
        }
    }

    pub fn right_mul_word(&self, xi: &HeckeElement, word: &BraidWord) -> HeckeElement {
        word.letters.iter().fold(xi.clone(), |acc, &(g, inv)| self.right_mul_letter(&acc, g, inv))
    }

    /// Positive braid word `T_ω T_{s_1} ⋯ T_{s_k}` of `T_x`, from a reduced expression.
    pub fn element_word(&self, x: &AffineElement) -> BraidWord {
        let rw = self.group.reduced_word(x);
        let mut word = BraidWord::new();
        if rw.omega != 0 {
            word.push(BraidGen::Omega(rw.omega), false);
        }
        for id in rw.word {
            word.push(BraidGen::Simple(self.group.generator_index(id).expect("valid id")), false);
        }
        word
    }

    /// The product `ξ η`, expanding each `T_y` of `η` along a reduced word.
    pub fn mul(&self, xi: &HeckeElement, eta: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (y, q) in &eta.terms {
            let part = self.right_mul_word(xi, &self.element_word(y));
            for (x, p) in part.terms {
                out.add_term(x, &(&p * q));
            }
        }
        out
    }

    /// `T_s^{-1} = T_s + (v - v^-1) T_e`; `T_ω^{-1} = T_{ω^{-1}}`.
    pub fn inv_generator(&self, g: BraidGen) -> HeckeElement {
        self.right_mul_letter(&self.one(), g, true)
    }

    pub fn generator(&self, g: BraidGen) -> HeckeElement {
        self.right_mul_letter(&self.one(), g, false)
    }

    /// Image of a braid word in H, multiplied left to right.
    pub fn evaluate_word(&self, word: &BraidWord) -> HeckeElement {
        self.right_mul_word(&self.one(), word)
    }

    /// Braid word for `θ_λ = T_{t_μ} (T_{t_ν})^{-1}` with `ν_i = max(0, -λ_i)`, `μ = λ + ν`.
    pub fn theta_word(&self, lambda: &Weight) -> BraidWord {
        let nu = Weight::new(&lambda.coords().iter().map(|&c| (-c).max(0)).collect::<Vec<_>>());
        self.theta_word_split(&(lambda + &nu), &nu)
    }

    /// `T_{t_μ} (T_{t_ν})^{-1}` for dominant `μ`, `ν`, which is `θ_{μ-ν}`.
    pub fn theta_word_split(&self, mu: &Weight, nu: &Weight) -> BraidWord {
        let rs = self.group.root_system();
        debug_assert!(rs.is_dominant(mu) && rs.is_dominant(nu));
        let pos = self.element_word(&self.group.translation(mu));
        let neg = self.element_word(&self.group.translation(nu)).inverse();
        pos.concat(&neg)
    }

    pub fn theta(&self, lambda: &Weight) -> HeckeElement {
        self.evaluate_word(&self.theta_word(lambda))
    }

    // ---- rendering ----

    fn sort_key(&self, x: &AffineElement) -> (u32, usize, Vec<SimpleReflectionId>) {
        let rw = self.group.reduced_word(x);
        (x.length(), rw.omega, rw.word)
    }

    /// Terms sorted by `(ℓ, reduced word)`.
    pub fn sorted_terms<'a>(&self, xi: &'a HeckeElement) -> Vec<(&'a AffineElement, &'a LaurentPoly)> {
        let mut terms: Vec<_> = xi.terms.iter().map(|(x, p)| (self.sort_key(x), x, p)).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        terms.into_iter().map(|(_, x, p)| (x, p)).collect()
    }

    /// Human-readable form such as `T[s0 s1] * (v - v^-1) + T[e]`.
    pub fn format(&self, xi: &HeckeElement) -> String {
        if xi.is_zero() {
            return "0".to_string();
        }
        self.sorted_terms(xi)
            .into_iter()
            .map(|(x, p)| {
                let name = format!("T[{}]", self.group.format_element(x));
                if p.is_one() {
                    name
                } else if p.terms().len() == 1 {
                    format!("{name} * {p}")
                } else {
                    format!("{name} * ({p})")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn to_json(&self, xi: &HeckeElement) -> Vec<HeckeTermJson> {
        self.sorted_terms(xi)
            .into_iter()
            .map(|(x, p)| HeckeTermJson { element: self.group.to_json(x), poly: p.clone() })
            .collect()
    }

    pub fn from_json(&self, terms: &[HeckeTermJson]) -> Result<HeckeElement> {
        let mut out = HeckeElement::zero();
        for t in terms {
            out.add_term(self.group.from_json(&t.element)?, &t.poly);
        }
        Ok(out)
    }

    /// Parses a product of factors: any element factor accepted by
    /// [`AffineWeylGroup::parse_element`] contributes `T_x`; `theta[..]` gives
    /// `θ_λ`; a generator followed by `^-1` (e.g. `s1^-1`, `omega^-1`) gives
    /// its inverse in H.
    pub fn parse_expr(&self, text: &str) -> Result<HeckeElement> {
        let mut acc = self.one();
        for tok in crate::affweyl::tokenize(text) {
            if let Some(w) = tok.strip_prefix("theta") {
                let lambda = self.group.root_system().parse_weight(w)?;
                acc = self.right_mul_word(&acc, &self.theta_word(&lambda));
            } else if let Some(base) = tok.strip_suffix("^-1") {
                let g = if base == "e" || base.starts_with("omega") {
                    BraidGen::Omega(self.group.parse_omega(base)?)
                } else {
                    BraidGen::Simple(self.group.generator_index(self.group.parse_generator(base)?).unwrap())
                };
                acc = self.right_mul_letter(&acc, g, true);
            } else {
                let x = self.group.parse_element(&tok)?;
                acc = self.mul(&acc, &self.basis(&x));
            }
        }
        Ok(acc)
    }

    // ---- verification suites ----

    /// Quadratic relation on every generator, braid relations for every pair of
    /// generators with finite `m(s,t)`, and Ω-conjugation of generators.
    pub fn verify_relations(&self) -> Report {
        let g = &self.group;
        let mut report = Report::new(format!("hecke-relations {}", g.root_system().spec()));
        let n = g.generators().len();
        let zero = HeckeElement::zero();
        for s in 0..n {
            // (T_s - v^-1)(T_s + v)
            let ts = self.generator(BraidGen::Simple(s));
            let left = ts.sub(&self.one().scale(&LaurentPoly::v_inv()));
            let right = ts.add(&self.one().scale(&LaurentPoly::v()));
            let prod = self.mul(&left, &right);
            report.check(prod == zero, || format!("quadratic relation fails for {}", self.gen_name(s)));
            let inv = self.inv_generator(BraidGen::Simple(s));
            report.check(self.mul(&inv, &ts) == self.one(), || format!("T_s^-1 T_s != 1 for {}", self.gen_name(s)));
        }
        for s in 0..n {
            for t in s + 1..n {
                let Some(m) = self.coxeter_order(s, t) else { continue };
                let alt = |a: usize, b: usize| {
                    (0..m).fold(self.one(), |acc, i| self.right_mul_simple(&acc, if i % 2 == 0 { a } else { b }))
                };
                report.check(alt(s, t) == alt(t, s), || {
                    format!("braid relation m={m} fails for {}, {}", self.gen_name(s), self.gen_name(t))
                });
            }
        }
        for k in 0..g.omega_order() {
            for s in 0..n {
                let conj = [(BraidGen::Omega(k), false), (BraidGen::Simple(s), false), (BraidGen::Omega(k), true)]
                    .into_iter()
                    .collect::<BraidWord>();
                let lhs = self.evaluate_word(&conj);
                let target = g.omega_conjugate(k, s);
                report.check(lhs == self.generator(BraidGen::Simple(target)), || {
                    format!("T_ω{k} T_{} T_ω{k}^-1 is not a simple generator", self.gen_name(s))
                });
            }
        }
        report
    }

    fn gen_name(&self, s: usize) -> String {
        self.group.generator_name(self.group.generator_id(s))
    }

    /// Order of `st` in `W ⋉ ZΦ`, if at most 6.
    pub fn coxeter_order(&self, s: usize, t: usize) -> Option<usize> {
        let g = &self.group;
        let st = g.mul(&g.generators()[s].1, &g.generators()[t].1);
        let mut acc = st.clone();
        for m in 1..=6 {
            if acc.is_identity() {
                return Some(m);
            }
            acc = g.mul(&acc, &st);
        }
        None
    }

    /// Bernstein relations in H for all weights in a box:
    /// (1) `T_v T_w = T_{vw}` when lengths add in W; (2) `θ_λ θ_μ = θ_{λ+μ}`;
    /// (3) `T_s θ_λ = θ_λ T_s` if `<λ, α^∨> = 0`;
    /// (4) `θ_λ = T_s θ_{λ-α} T_s` if `<λ, α^∨> = 1`.
    pub fn verify_bernstein(&self, radius: i64) -> Report {
        let g = &self.group;
        let rs = g.root_system();
        let mut report = Report::new(format!("bernstein {} radius {radius}", rs.spec()));
        if let Ok(weyl) = rs.weyl_group() {
            for a in weyl {
                for b in weyl {
                    let ab = rs.weyl_mul(a, b);
                    if ab.length() == a.length() + b.length() {
                        let lhs = self.mul(&self.basis(&g.finite(a)), &self.basis(&g.finite(b)));
                        report.check(lhs == self.basis(&g.finite(&ab)), || "T_v T_w != T_vw".to_string());
                    }
                }
            }
        }
        let weights = Weight::box_weights(rs.rank(), radius);
        let mut thetas: HashMap<Weight, HeckeElement> = HashMap::new();
        let mut theta = |lambda: &Weight| -> HeckeElement {
            thetas.entry(lambda.clone()).or_insert_with(|| self.theta(lambda)).clone()
        };
        for lambda in &weights {
            let th = theta(lambda);
            for mu in &weights {
                let lhs = self.right_mul_word(&th, &self.theta_word(mu));
                let rhs = theta(&(lambda + mu));
                report.check(lhs == rhs, || format!("θ_{lambda} θ_{mu} != θ_{}", lambda + mu));
            }
        }
        for lambda in &weights {
            let th = theta(lambda);
            for i in 0..rs.rank() {
                let s = g.generator_index(SimpleReflectionId::Finite(i)).unwrap();
                match lambda[i] {
                    0 => {
                        let lhs = self.left_mul_simple(s, &th);
                        let rhs = self.right_mul_simple(&th, s);
                        report.check(lhs == rhs, || format!("T_s{} does not commute with θ_{lambda}", i + 1));
                    }
                    1 => {
                        let shifted = lambda - &rs.simple_root(i);
                        let rhs = self.right_mul_simple(&self.left_mul_simple(s, &theta(&shifted)), s);
                        report.check(th == rhs, || format!("θ_{lambda} != T_s{0} θ_{shifted} T_s{0}", i + 1));
                    }
                    _ => {}
                }
            }
        }
        report
    }

    /// `T_{t_λ} = T_{w^{-1}} θ_{wλ} (T_{w^{-1}})^{-1}` with `w` minimal such
    /// that `wλ` is dominant, for all `λ` in a box.
    pub fn verify_t_translation_conjugation(&self, radius: i64) -> Report {
        let g = &self.group;
        let rs = g.root_system();
        let mut report = Report::new(format!("translation-conjugation {} radius {radius}", rs.spec()));
        for lambda in Weight::box_weights(rs.rank(), radius) {
            let rep = rs.dominant_rep(&lambda);
            let w_inv = g.finite(&rs.weyl_inverse(&rep.v));
            let word = self
                .element_word(&w_inv)
                .concat(&self.theta_word(&rep.dom))
                .concat(&self.element_word(&w_inv).inverse());
            let rhs = self.evaluate_word(&word);
            let lhs = self.basis(&g.translation(&lambda));
            report.check(lhs == rhs, || format!("identity fails at λ = {lambda}"));
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn alg(spec: &str) -> HeckeAlgebra {
        HeckeAlgebra::from_spec(spec).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c)
    }

    fn s_idx(h: &HeckeAlgebra, id: SimpleReflectionId) -> usize {
        h.group().generator_index(id).unwrap()
    }

    #[test]
    fn ts_squared() {
        let h = alg("A1");
        let s = s_idx(&h, SimpleReflectionId::Finite(0));
        let ts = h.generator(BraidGen::Simple(s));
        let expected = h.one().add(&ts.scale(&LaurentPoly::v_inv_minus_v()));
        assert_eq!(h.mul(&ts, &ts), expected);
    }

    #[test]
    fn omega_squared_in_a1() {
        let h = alg("A1");
        let to = h.generator(BraidGen::Omega(1));
        assert_eq!(h.mul(&to, &to), h.one());
        assert_eq!(h.inv_generator(BraidGen::Omega(1)), to);
    }

    #[test]
    fn identity_is_neutral() {
        let h = alg("A2");
        let xi = h.theta(&w(&[-1, 2]));
        assert_eq!(h.mul(&h.one(), &xi), xi);
        assert_eq!(h.mul(&xi, &h.one()), xi);
    }

    #[test]
    fn inverse_generator_examples() {
        let h = alg("A1");
        let s = s_idx(&h, SimpleReflectionId::Finite(0));
        let ts = h.generator(BraidGen::Simple(s));
        let inv = h.inv_generator(BraidGen::Simple(s));
        assert_eq!(h.mul(&inv, &ts), h.one());
        assert_eq!(ts.sub(&inv), h.one().scale(&LaurentPoly::v_inv_minus_v()));
    }

    #[test]
    fn word_evaluation_examples() {
        let h = alg("A1");
        let s = s_idx(&h, SimpleReflectionId::Finite(0));
        assert_eq!(h.evaluate_word(&BraidWord::new()), h.one());
        let w1: BraidWord = [(BraidGen::Simple(s), false), (BraidGen::Simple(s), true)].into_iter().collect();
        assert!(w1.is_empty());
        let w2: BraidWord = [(BraidGen::Omega(1), false), (BraidGen::Simple(s), false)].into_iter().collect();
        assert_eq!(h.evaluate_word(&w2), h.basis(&h.group().translation(&w(&[1]))));
    }

    #[test]
    fn theta_examples() {
        let h = alg("A1");
        assert_eq!(h.theta(&w(&[1])), h.basis(&h.group().translation(&w(&[1]))));
        assert_eq!(h.theta(&w(&[0])), h.one());
        let expected = h
            .basis(&h.group().translation(&w(&[-1])))
            .add(&h.generator(BraidGen::Omega(1)).scale(&LaurentPoly::v_minus_v_inv()));
        assert_eq!(h.theta(&w(&[-1])), expected);
        assert_eq!(h.format(&h.theta(&w(&[-1]))), "T[omega] * (v - v^-1) + T[omega s0]");
    }

    #[test]
    fn theta_independent_of_split() {
        for spec in ["A1", "A2", "B2"] {
            let h = alg(spec);
            let rs = h.group().root_system();
            for lambda in Weight::box_weights(rs.rank(), 1) {
                let base = h.theta(&lambda);
                for extra in Weight::dominant_box(rs.rank(), 1) {
                    let nu = Weight::new(&lambda.coords().iter().map(|&c| (-c).max(0)).collect::<Vec<_>>());
                    let nu = &nu + &extra;
                    let mu = &lambda + &nu;
                    assert_eq!(h.evaluate_word(&h.theta_word_split(&mu, &nu)), base, "{spec} {lambda}");
                }
            }
        }
    }

    #[test]
    fn theta_inverse() {
        for spec in ["A1", "A2", "B2"] {
            let h = alg(spec);
            for lambda in Weight::box_weights(h.group().root_system().rank(), 2) {
                let prod = h.mul(&h.theta(&lambda), &h.theta(&-&lambda));
                assert_eq!(prod, h.one(), "{spec} {lambda}");
            }
        }
    }

    #[test]
    fn relation_instances() {
        let h = alg("A1");
        let s = s_idx(&h, SimpleReflectionId::Finite(0));
        // relation (4) at λ = ϖ
        let rhs = h.right_mul_simple(&h.left_mul_simple(s, &h.theta(&w(&[-1]))), s);
        assert_eq!(h.theta(&w(&[1])), rhs);
        // relation (3) in A1xA1 with λ = (0,1) and the first simple root
        let h = alg("A1xA1");
        let s = s_idx(&h, SimpleReflectionId::Finite(0));
        let th = h.theta(&w(&[0, 1]));
        assert_eq!(h.left_mul_simple(s, &th), h.right_mul_simple(&th, s));
    }

    #[test]
    fn bernstein_and_conjugation_small() {
        let h = alg("A1");
        assert!(h.verify_bernstein(2).passed());
        assert!(h.verify_t_translation_conjugation(3).passed());
        let h = alg("A2");
        let r = h.verify_t_translation_conjugation(1);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn translation_conjugation_a1_instance() {
        let h = alg("A1");
        let s = s_idx(&h, SimpleReflectionId::Finite(0));
        // T_{t_{-ϖ}} = T_s θ_ϖ T_s^{-1}
        let rhs = h.right_mul_simple_inv(&h.left_mul_simple(s, &h.theta(&w(&[1]))), s);
        assert_eq!(h.basis(&h.group().translation(&w(&[-1]))), rhs);
    }

    #[test]
    fn relations_hold() {
        for spec in ["A1", "A2", "B2", "G2", "A1xA1"] {
            let r = alg(spec).verify_relations();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn associativity_on_random_basis_triples() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for spec in ["A1", "A2", "B2"] {
            let h = alg(spec);
            let g = h.group();
            let n = g.generators().len();
            let random_elt = |rng: &mut rand::rngs::StdRng| {
                let len = rng.gen_range(0..=6);
                let k = rng.gen_range(0..g.omega_order());
                (0..len).fold(g.omega_element(k).clone(), |acc, _| {
                    g.mul(&acc, &g.generators()[rng.gen_range(0..n)].1)
                })
            };
            for _ in 0..30 {
                let (a, b, c) = (random_elt(&mut rng), random_elt(&mut rng), random_elt(&mut rng));
                let (a, b, c) = (h.basis(&a), h.basis(&b), h.basis(&c));
                assert_eq!(h.mul(&h.mul(&a, &b), &c), h.mul(&a, &h.mul(&b, &c)));
            }
        }
    }

    #[test]
    fn word_evaluation_is_multiplicative() {
        let h = alg("B2");
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let n = h.group().generators().len();
        let random_word = |rng: &mut rand::rngs::StdRng| -> BraidWord {
            (0..rng.gen_range(0..6))
                .map(|_| {
                    let g = if rng.gen_bool(0.2) {
                        BraidGen::Omega(rng.gen_range(0..h.group().omega_order()))
                    } else {
                        BraidGen::Simple(rng.gen_range(0..n))
                    };
                    (g, rng.gen_bool(0.5))
                })
                .collect()
        };
        for _ in 0..30 {
            let (a, b) = (random_word(&mut rng), random_word(&mut rng));
            assert_eq!(h.evaluate_word(&a.concat(&b)), h.mul(&h.evaluate_word(&a), &h.evaluate_word(&b)));
        }
    }

    #[test]
    fn json_round_trip() {
        let h = alg("A2");
        let xi = h.theta(&w(&[-1, 1]));
        let text = serde_json::to_string(&h.to_json(&xi)).unwrap();
        let parsed: Vec<HeckeTermJson> = serde_json::from_str(&text).unwrap();
        let back = h.from_json(&parsed).unwrap();
        assert_eq!(back, xi);
        assert_eq!(serde_json::to_string(&h.to_json(&back)).unwrap(), text);
    }

    #[test]
    fn expression_parsing() {
        let h = alg("A1");
        assert_eq!(h.parse_expr("theta[-1]").unwrap(), h.theta(&w(&[-1])));
        assert_eq!(h.parse_expr("s1 s1^-1").unwrap(), h.one());
        assert_eq!(h.parse_expr("omega s1").unwrap(), h.basis(&h.group().translation(&w(&[1]))));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(48))]
        #[test]
        fn theta_is_multiplicative(a in proptest::collection::vec(-3i64..=3, 2), b in proptest::collection::vec(-3i64..=3, 2)) {
            let h = alg("B2");
            let (la, mu) = (Weight::new(&a), Weight::new(&b));
            let lhs = h.mul(&h.theta(&la), &h.theta(&mu));
            proptest::prop_assert_eq!(lhs, h.theta(&(&la + &mu)));
        }
    }
}
