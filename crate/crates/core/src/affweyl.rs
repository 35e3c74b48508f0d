//! The extended affine Weyl group `W ⋉ X`.
//!
//! Elements are written `w · t_λ` with `w` finite and `λ` a weight, and
//! multiply by `(w t_λ)(w' t_μ) = (w w') t_{w'^{-1} λ + μ}`. Lengths come from
//! the Iwahori–Matsumoto formula, which is also what the affine simple
//! reflections are searched against.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Weight, WeylElement};

/// A Coxeter generator of `W ⋉ ZΦ`. Finite generators precede affine ones,
/// which is the tie-breaking order used by every descent search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleReflectionId {
    /// 0-based simple index, displayed 1-based as `s1`, `s2`, ...
    Finite(usize),
    /// 0-based irreducible component index, displayed `s0` (or `s0_k` when
    /// there are several components).
    Affine(usize),
}

/// `w · t_λ` together with its length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    finite: WeylElement,
    translation: Weight,
    length: u32,
}

impl AffineElement {
    pub fn finite_part(&self) -> &WeylElement {
        &self.finite
    }

    pub fn translation(&self) -> &Weight {
        &self.translation
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0 && self.finite.is_identity() && self.translation.is_zero()
    }
}

impl fmt::Debug for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}*t{} (len {})", self.finite.matrix(), self.translation, self.length)
    }
}

/// JSON form `{finite: matrix, translation: array}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub finite: Vec<Vec<i64>>,
    pub translation: Weight,
}

/// `x = ω · s_{i1} ⋯ s_{ik}` with `k = ℓ(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    /// Index into [`AffineWeylGroup::omega_elements`].
    pub omega: usize,
    pub word: Vec<SimpleReflectionId>,
}

pub struct AffineWeylGroup {
    rs: Arc<RootSystem>,
    generators: Vec<(SimpleReflectionId, AffineElement)>,
    gen_lookup: HashMap<SimpleReflectionId, usize>,
    class_reps: Vec<Weight>,
    omega: Vec<AffineElement>,
    omega_inverse: Vec<usize>,
    /// `omega_twist[k][g]` is the generator index of `ω_k s_g ω_k^{-1}`.
    omega_twist: Vec<Vec<usize>>,
    word_cache: RwLock<HashMap<AffineElement, ReducedWord>>,
    w_lambda_cache: RwLock<HashMap<Weight, (AffineElement, u32)>>,
}

impl fmt::Debug for AffineWeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AffineWeylGroup").field("root_system", &self.rs.spec()).finish()
    }
}

impl AffineWeylGroup {
    pub fn new(rs: Arc<RootSystem>) -> Result<Self> {
        let mut g = AffineWeylGroup {
            rs,
            generators: Vec::new(),
            gen_lookup: HashMap::new(),
            class_reps: Vec::new(),
            omega: Vec::new(),
            omega_inverse: Vec::new(),
            omega_twist: Vec::new(),
            word_cache: RwLock::new(HashMap::new()),
            w_lambda_cache: RwLock::new(HashMap::new()),
        };
        g.init_generators()?;
        g.init_omega()?;
        Ok(g)
    }

    pub fn from_spec(spec: &str) -> Result<Self> {
        Self::new(Arc::new(RootSystem::new(spec)?))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    fn init_generators(&mut self) -> Result<()> {
        let rs = self.rs.clone();
        for i in 0..rs.rank() {
            let s = self.finite(&rs.simple_reflection(i));
            self.generators.push((SimpleReflectionId::Finite(i), s));
        }
        for (c, comp) in rs.components().iter().enumerate() {
            let found: Vec<AffineElement> = rs
                .positive_roots()
                .iter()
                .enumerate()
                .filter(|(_, r)| comp.indices.iter().any(|&i| r.root_coords[i] > 0))
                .map(|(k, r)| self.element(rs.reflection(k), -&r.weight))
                .filter(|x| x.length == 1)
                .collect();
            match found.as_slice() {
                [x] => self.generators.push((SimpleReflectionId::Affine(c), x.clone())),
                _ => return Err(Error::GeneratorSearch(c)),
            }
        }
        self.gen_lookup = self.generators.iter().enumerate().map(|(k, (id, _))| (*id, k)).collect();
        Ok(())
    }

    fn init_omega(&mut self) -> Result<()> {
        let rs = self.rs.clone();
        // Class representatives of X/ZΦ: sums of 0 or one minuscule fundamental
        // weight per component.
        let mut reps = vec![rs.zero()];
        for comp in rs.components() {
            let minuscule: Vec<usize> = comp
                .indices
                .iter()
                .copied()
                .filter(|&i| rs.positive_roots().iter().all(|r| r.coroot_coords[i] <= 1))
                .collect();
            let mut next = Vec::new();
            for base in &reps {
                next.push(base.clone());
                for &i in &minuscule {
                    next.push(base + &Weight::fundamental(rs.rank(), i));
                }
            }
            reps = next;
        }
        debug_assert_eq!(reps.len() as i64, rs.cartan_det());
        // ω_k is the shortest element of W t_ν for ν = w_0 λ_k (antidominant).
        let w0 = rs.longest_element();
        for rep in &reps {
            let nu = w0.act(rep);
            let v = rs.dominant_rep(&nu).v;
            let x = self.element(v, nu);
            if x.length != 0 {
                return Err(Error::NotLengthZero(format!("{x:?}")));
            }
            self.omega.push(x);
        }
        self.class_reps = reps;
        for k in 0..self.omega.len() {
            let inv = self.inverse(&self.omega[k]);
            let j = self.omega.iter().position(|o| *o == inv).expect("Ω is closed under inverses");
            self.omega_inverse.push(j);
        }
        for k in 0..self.omega.len() {
            let om = self.omega[k].clone();
            let om_inv = self.omega[self.omega_inverse[k]].clone();
            let mut row = Vec::new();
            for (gi, (_, s)) in self.generators.iter().enumerate() {
                let conj = self.mul(&self.mul(&om, s), &om_inv);
                let j = self
                    .generators
                    .iter()
                    .position(|(_, t)| *t == conj)
                    .ok_or_else(|| Error::NotLengthZero(format!("Ω-conjugate of generator {gi}")))?;
                row.push(j);
            }
            self.omega_twist.push(row);
        }
        Ok(())
    }

    // ---- construction and arithmetic ----

    /// `w · t_λ`
    pub fn element(&self, finite: WeylElement, translation: Weight) -> AffineElement {
        let length = self.length_formula(&finite, &translation);
        AffineElement { finite, translation, length }
    }

    pub fn identity(&self) -> AffineElement {
        self.element(self.rs.identity(), self.rs.zero())
    }

    pub fn translation(&self, lambda: &Weight) -> AffineElement {
        self.element(self.rs.identity(), lambda.clone())
    }

    pub fn finite(&self, w: &WeylElement) -> AffineElement {
        self.element(w.clone(), self.rs.zero())
    }

    /// `ℓ(w t_λ) = Σ_{α>0, wα>0} |<λ,α^∨>| + Σ_{α>0, wα<0} |1 + <λ,α^∨>|`
    fn length_formula(&self, w: &WeylElement, lambda: &Weight) -> u32 {
        let rs = &self.rs;
        (0..rs.positive_roots().len())
            .map(|k| {
                let p = rs.pairing(lambda, k);
                if rs.sends_positive(w, k) {
                    p.unsigned_abs()
                } else {
                    (1 + p).unsigned_abs()
                }
            })
            .sum::<u64>() as u32
    }

    pub fn aff_length(&self, x: &AffineElement) -> u32 {
        x.length
    }

    pub fn mul(&self, x: &AffineElement, y: &AffineElement) -> AffineElement {
        if x.is_identity() {
            return y.clone();
        }
        if y.is_identity() {
            return x.clone();
        }
        let finite = self.rs.weyl_mul(&x.finite, &y.finite);
        let translation = &y.finite.act_inverse(&x.translation) + &y.translation;
        self.element(finite, translation)
    }

    /// `(w t_λ)^{-1} = w^{-1} t_{-wλ}`
    pub fn inverse(&self, x: &AffineElement) -> AffineElement {
        let t = -&x.finite.act(&x.translation);
        AffineElement { finite: self.rs.weyl_inverse(&x.finite), translation: t, length: x.length }
    }

    // ---- generators and Ω ----

    pub fn generators(&self) -> &[(SimpleReflectionId, AffineElement)] {
        &self.generators
    }

    pub fn affine_simple_generators(&self) -> Vec<AffineElement> {
        self.generators.iter().map(|(_, x)| x.clone()).collect()
    }

    pub fn generator_index(&self, id: SimpleReflectionId) -> Option<usize> {
        self.gen_lookup.get(&id).copied()
    }

    pub fn generator(&self, id: SimpleReflectionId) -> &AffineElement {
        &self.generators[self.gen_lookup[&id]].1
    }

    pub fn generator_id(&self, index: usize) -> SimpleReflectionId {
        self.generators[index].0
    }

    /// `|Ω| = |X/ZΦ|`
    pub fn omega_order(&self) -> usize {
        self.omega.len()
    }

    pub fn omega_elements(&self) -> &[AffineElement] {
        &self.omega
    }

    pub fn omega_element(&self, k: usize) -> &AffineElement {
        &self.omega[k]
    }

    pub fn omega_inverse_index(&self, k: usize) -> usize {
        self.omega_inverse[k]
    }

    /// Generator index of `ω_k s ω_k^{-1}`.
    pub fn omega_conjugate(&self, k: usize, gen: usize) -> usize {
        self.omega_twist[k][gen]
    }

    /// Index of `ω_a ω_b` in the list of Ω elements.
    pub fn omega_product(&self, a: usize, b: usize) -> usize {
        let p = self.mul(&self.omega[a], &self.omega[b]);
        self.omega.iter().position(|o| *o == p).expect("Ω is a group")
    }

    /// Class of `λ` in `X/ZΦ`, as an index into the Ω elements.
    pub fn class_index(&self, lambda: &Weight) -> usize {
        self.class_reps
            .iter()
            .position(|rep| self.rs.in_root_lattice(&(lambda - rep)))
            .expect("class representatives cover X/ZΦ")
    }

    pub fn omega_index(&self, x: &AffineElement) -> usize {
        self.class_index(&x.translation)
    }

    /// `x = ω · u` with `ℓ(ω) = 0` and `u ∈ W ⋉ ZΦ`; returns `(ω index, u)`.
    pub fn omega_decompose(&self, x: &AffineElement) -> (usize, AffineElement) {
        let k = self.omega_index(x);
        let u = self.mul(&self.omega[self.omega_inverse[k]], x);
        (k, u)
    }

    // ---- words ----

    /// Greedy right-descent reduced expression; smallest generator wins ties.
    pub fn reduced_word(&self, x: &AffineElement) -> ReducedWord {
        if let Some(w) = self.word_cache.read().unwrap().get(x) {
            return w.clone();
        }
        let mut u = x.clone();
        let mut word = Vec::with_capacity(x.length as usize);
        while u.length > 0 {
            let (id, us) = self
                .generators
                .iter()
                .find_map(|(id, s)| {
                    let us = self.mul(&u, s);
                    (us.length < u.length).then_some((*id, us))
                })
                .expect("element of positive length has a right descent");
            word.push(id);
            u = us;
        }
        word.reverse();
        let omega = self.omega.iter().position(|o| *o == u).expect("length-zero remainder lies in Ω");
        let rw = ReducedWord { omega, word };
        self.word_cache.write().unwrap().insert(x.clone(), rw.clone());
        rw
    }

    /// Multiplies out `ω · s_{i1} ⋯ s_{ik}`.
    pub fn from_word(&self, omega: usize, word: &[SimpleReflectionId]) -> AffineElement {
        word.iter().fold(self.omega[omega].clone(), |acc, id| self.mul(&acc, self.generator(*id)))
    }

    // ---- Bruhat order ----

    fn left_descent(&self, u: &AffineElement) -> Option<(usize, AffineElement)> {
        self.generators.iter().enumerate().find_map(|(k, (_, s))| {
            let su = self.mul(s, u);
            (su.length < u.length).then_some((k, su))
        })
    }

    /// Bruhat order on `W ⋉ X`, taken componentwise over Ω: `ωu ≤ ω'u'` iff
    /// `ω = ω'` and `u ≤ u'` in the Coxeter group `W ⋉ ZΦ`.
    pub fn bruhat_leq(&self, x: &AffineElement, y: &AffineElement) -> bool {
        let (kx, mut u) = self.omega_decompose(x);
        let (ky, mut up) = self.omega_decompose(y);
        if kx != ky {
            return false;
        }
        loop {
            if u.length > up.length {
                return false;
            }
            if u.length == up.length {
                return u == up;
            }
            let (k, sup) = self.left_descent(&up).expect("positive length has a left descent");
            let su = self.mul(&self.generators[k].1, &u);
            if su.length < u.length {
                u = su;
            }
            up = sup;
        }
    }

    // ---- w_λ and the order on X ----

    /// The shortest element `w_λ = v t_λ` of `W t_λ` and `δ(λ)`.
    pub fn w_lambda(&self, lambda: &Weight) -> (AffineElement, u32) {
        if let Some(hit) = self.w_lambda_cache.read().unwrap().get(lambda) {
            return hit.clone();
        }
        let rep = self.rs.dominant_rep(lambda);
        let x = self.element(rep.v, lambda.clone());
        let t_len = self.length_formula(&self.rs.identity(), lambda);
        assert_eq!(x.length + rep.delta, t_len, "ℓ(w_λ) = ℓ(t_λ) - δ(λ) failed for {lambda}");
        debug_assert!(!self.has_finite_left_descent(&x), "w_λ not minimal in W t_λ for {lambda}");
        let out = (x, rep.delta);
        self.w_lambda_cache.write().unwrap().insert(lambda.clone(), out.clone());
        out
    }

    /// Whether some finite simple reflection `s` has `ℓ(s x) < ℓ(x)`.
    pub fn has_finite_left_descent(&self, x: &AffineElement) -> bool {
        self.generators.iter().any(|(id, s)| {
            matches!(id, SimpleReflectionId::Finite(_)) && self.mul(s, x).length < x.length
        })
    }

    /// `λ ≤ μ` iff `w_λ ≤ w_μ` in the Bruhat order.
    pub fn order_leq_weights(&self, lambda: &Weight, mu: &Weight) -> bool {
        let (a, _) = self.w_lambda(lambda);
        let (b, _) = self.w_lambda(mu);
        self.bruhat_leq(&a, &b)
    }

    // ---- text and JSON ----

    pub fn generator_name(&self, id: SimpleReflectionId) -> String {
        match id {
            SimpleReflectionId::Finite(i) => format!("s{}", i + 1),
            SimpleReflectionId::Affine(c) if self.rs.components().len() == 1 => {
                let _ = c;
                "s0".to_string()
            }
            SimpleReflectionId::Affine(c) => format!("s0_{}", c + 1),
        }
    }

    pub fn omega_name(&self, k: usize) -> String {
        match (k, self.omega.len()) {
            (0, _) => "e".to_string(),
            (_, 2) => "omega".to_string(),
            _ => format!("omega{k}"),
        }
    }

    pub fn format_word(&self, word: &[SimpleReflectionId]) -> String {
        word.iter().map(|&id| self.generator_name(id)).collect::<Vec<_>>().join(" ")
    }

    /// Renders `x` as `ω s_{i1} ... s_{ik}`, e.g. `omega s1`, `s0 s1`, `e`.
    pub fn format_element(&self, x: &AffineElement) -> String {
        let rw = self.reduced_word(x);
        let mut parts = Vec::new();
        if rw.omega != 0 || rw.word.is_empty() {
            parts.push(self.omega_name(rw.omega));
        }
        if !rw.word.is_empty() {
            parts.push(self.format_word(&rw.word));
        }
        parts.join(" ")
    }

    pub fn parse_generator(&self, tok: &str) -> Result<SimpleReflectionId> {
        let bad = || Error::Parse(format!("unknown generator `{tok}`"));
        let rest = tok.strip_prefix('s').ok_or_else(bad)?;
        let id = if let Some(c) = rest.strip_prefix("0_") {
            let c: usize = c.parse().map_err(|_| bad())?;
            SimpleReflectionId::Affine(c.checked_sub(1).ok_or_else(bad)?)
        } else {
            let i: usize = rest.parse().map_err(|_| bad())?;
            if i == 0 {
                if self.rs.components().len() != 1 {
                    return Err(Error::Parse(format!("`s0` is ambiguous for {}; use s0_k", self.rs.spec())));
                }
                SimpleReflectionId::Affine(0)
            } else {
                SimpleReflectionId::Finite(i - 1)
            }
        };
        self.generator_index(id).map(|_| id).ok_or_else(bad)
    }

    pub fn parse_omega(&self, tok: &str) -> Result<usize> {
        if tok == "e" {
            return Ok(0);
        }
        if tok == "omega" && self.omega.len() == 2 {
            return Ok(1);
        }
        tok.strip_prefix("omega")
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|&k| k < self.omega.len())
            .ok_or_else(|| Error::Parse(format!("unknown length-zero element `{tok}`")))
    }

    /// Parses a product of factors separated by whitespace or `*`. Factors are
    /// `e`, `omega`/`omegaK`, `sI`, `s0`/`s0_K`, `w0` and `t[a1,...,ar]`.
    pub fn parse_element(&self, text: &str) -> Result<AffineElement> {
        let mut acc = self.identity();
        for tok in tokenize(text) {
            let f = self.parse_factor(&tok)?;
            acc = self.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn parse_factor(&self, tok: &str) -> Result<AffineElement> {
        if let Some(rest) = tok.strip_prefix('t') {
            let lambda = self.rs.parse_weight(rest)?;
            return Ok(self.translation(&lambda));
        }
        if tok == "w0" {
            return Ok(self.finite(&self.rs.longest_element()));
        }
        if tok == "e" || tok.starts_with("omega") {
            return Ok(self.omega[self.parse_omega(tok)?].clone());
        }
        Ok(self.generator(self.parse_generator(tok)?).clone())
    }

    pub fn to_json(&self, x: &AffineElement) -> ElementJson {
        ElementJson { finite: x.finite.matrix_rows(), translation: x.translation.clone() }
    }

    pub fn from_json(&self, j: &ElementJson) -> Result<AffineElement> {
        self.rs.check_weight(&j.translation)?;
        let flat: Vec<i32> = j.finite.iter().flatten().map(|&x| x as i32).collect();
        let w = self
            .rs
            .weyl_group()?
            .iter()
            .find(|w| w.matrix() == flat.as_slice())
            .ok_or_else(|| Error::Parse("matrix is not an element of W".into()))?;
        Ok(self.element(w.clone(), j.translation.clone()))
    }
}

/// Splits on whitespace and `*`, keeping bracketed weight literals intact.
pub(crate) fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0;
    for ch in text.chars() {
        match ch {
            '[' => {
                depth += 1;
                cur.push(ch);
            }
            ']' => {
                depth -= 1;
                cur.push(ch);
            }
            c if depth == 0 && (c.is_whitespace() || c == '*') => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c if c.is_whitespace() => {}
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashSet, VecDeque};
    use SimpleReflectionId::*;

    fn group(spec: &str) -> AffineWeylGroup {
        AffineWeylGroup::from_spec(spec).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c)
    }

    /// Word length by breadth-first search in the Cayley graph of W ⋉ ZΦ.
    fn bfs_lengths(g: &AffineWeylGroup, radius: u32) -> HashMap<AffineElement, u32> {
        let mut dist = HashMap::from([(g.identity(), 0u32)]);
        let mut queue = VecDeque::from([g.identity()]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            if d == radius {
                continue;
            }
            for (_, s) in g.generators() {
                let xs = g.mul(&x, s);
                if !dist.contains_key(&xs) {
                    dist.insert(xs.clone(), d + 1);
                    queue.push_back(xs);
                }
            }
        }
        dist
    }

    #[test]
    fn length_examples() {
        let a1 = group("A1");
        assert_eq!(a1.translation(&w(&[1])).length(), 1);
        let s = a1.generator(Finite(0)).clone();
        assert_eq!(a1.mul(&s, &a1.translation(&w(&[-1]))).length(), 0);
        let a2 = group("A2");
        assert_eq!(a2.translation(&w(&[1, 1])).length(), 4);
    }

    #[test]
    fn length_formula_matches_word_length() {
        for (spec, radius) in [("A1", 8), ("A2", 6), ("B2", 6), ("G2", 7), ("A1xA1", 5)] {
            let g = group(spec);
            for (x, d) in bfs_lengths(&g, radius) {
                assert_eq!(x.length(), d, "{spec}: {x:?}");
            }
        }
    }

    #[test]
    fn generator_examples() {
        let a1 = group("A1");
        let s0 = a1.generator(Affine(0));
        assert_eq!(s0.translation(), &w(&[-2]));
        assert_eq!(s0.finite_part(), &a1.root_system().simple_reflection(0));
        let a2 = group("A2");
        assert_eq!(a2.generators().len(), 3);
        assert_eq!(a2.generator(Affine(0)).translation(), &w(&[-1, -1]));
        assert_eq!(group("B2").generators().len(), 3);
        assert_eq!(group("A1xA1").generators().len(), 4);
    }

    #[test]
    fn omega_examples() {
        let a1 = group("A1");
        assert_eq!(a1.omega_order(), 2);
        let om = a1.omega_element(1).clone();
        let s = a1.generator(Finite(0)).clone();
        // ω = s t_{-ϖ} and t_ϖ = ω s
        assert_eq!(om, a1.mul(&s, &a1.translation(&w(&[-1]))));
        let (k, u) = a1.omega_decompose(&a1.translation(&w(&[1])));
        assert_eq!((k, u), (1, s.clone()));
        assert_eq!(a1.omega_decompose(&s), (0, s));
        let a2 = group("A2");
        let t = a2.translation(&w(&[1, 0]));
        let (k, u) = a2.omega_decompose(&t);
        assert_ne!(k, 0);
        assert_eq!(u.length(), t.length());
        for (spec, n) in [("A1", 2), ("A2", 3), ("B2", 2), ("G2", 1), ("A3", 4), ("A1xA1", 4), ("D4", 4)] {
            assert_eq!(group(spec).omega_order(), n, "{spec}");
        }
    }

    #[test]
    fn omega_is_abelian_and_twists_generators() {
        for spec in ["A1", "A2", "A3", "B2", "A1xA1", "D4"] {
            let g = group(spec);
            let n = g.omega_order();
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(g.omega_product(a, b), g.omega_product(b, a));
                }
            }
        }
    }

    #[test]
    fn reduced_word_examples() {
        let a1 = group("A1");
        let e = a1.reduced_word(&a1.identity());
        assert_eq!((e.omega, e.word.len()), (0, 0));
        let rw = a1.reduced_word(&a1.translation(&w(&[1])));
        assert_eq!((rw.omega, rw.word), (1, vec![Finite(0)]));
        let rw = a1.reduced_word(&a1.translation(&w(&[2])));
        assert_eq!((rw.omega, rw.word), (0, vec![Affine(0), Finite(0)]));
    }

    #[test]
    fn bruhat_examples() {
        let a1 = group("A1");
        let om = a1.omega_element(1).clone();
        let t = a1.translation(&w(&[1]));
        let s = a1.generator(Finite(0)).clone();
        assert!(a1.bruhat_leq(&om, &t));
        assert!(!a1.bruhat_leq(&s, &t));
        assert!(a1.bruhat_leq(&a1.identity(), &a1.translation(&w(&[2]))));
    }

    /// Subword oracle: u ≤ x iff u is a subword product of a reduced word of x.
    #[test]
    fn bruhat_matches_subword_property() {
        for spec in ["A1", "A2", "B2"] {
            let g = group(spec);
            let ball: Vec<AffineElement> = bfs_lengths(&g, 4).into_keys().collect();
            for x in &ball {
                let rw = g.reduced_word(x);
                let mut below: HashSet<AffineElement> = HashSet::from([g.identity()]);
                for id in &rw.word {
                    let s = g.generator(*id);
                    let extra: Vec<_> = below.iter().map(|u| g.mul(u, s)).collect();
                    below.extend(extra);
                }
                for u in &ball {
                    assert_eq!(g.bruhat_leq(u, x), below.contains(u), "{spec}");
                }
            }
        }
    }

    #[test]
    fn w_lambda_examples() {
        let a1 = group("A1");
        let (x, d) = a1.w_lambda(&w(&[1]));
        assert_eq!((x, d), (a1.translation(&w(&[1])), 0));
        let (x, d) = a1.w_lambda(&w(&[-1]));
        assert_eq!((x, d), (a1.omega_element(1).clone(), 1));
        let (x, d) = a1.w_lambda(&w(&[-2]));
        assert_eq!((x, d), (a1.generator(Affine(0)).clone(), 1));
    }

    #[test]
    fn order_examples() {
        let a1 = group("A1");
        assert!(a1.order_leq_weights(&w(&[-1]), &w(&[1])));
        assert!(!a1.order_leq_weights(&w(&[1]), &w(&[2])));
        assert!(a1.order_leq_weights(&w(&[3]), &w(&[3])));
    }

    #[test]
    fn element_text_round_trip() {
        let a2 = group("A2");
        for text in ["e", "s1 s2", "s0*s1", "t[1,0]", "s1*t[2,-1]", "omega1 s0", "w0"] {
            let x = a2.parse_element(text).unwrap();
            let back = a2.parse_element(&a2.format_element(&x)).unwrap();
            assert_eq!(x, back, "{text}");
        }
        assert_eq!(group("A1").format_element(&group("A1").translation(&w(&[1]))), "omega s1");
        assert!(a2.parse_element("s4").is_err());
        assert!(a2.parse_element("t[1]").is_err());
        assert!(group("A1xA1").parse_element("s0").is_err());
        assert!(group("A1xA1").parse_element("s0_2").is_ok());
    }

    #[test]
    fn element_json_round_trip() {
        let b2 = group("B2");
        let x = b2.parse_element("s1 s2 t[1,-2]").unwrap();
        let j = b2.to_json(&x);
        let text = serde_json::to_string(&j).unwrap();
        let back: ElementJson = serde_json::from_str(&text).unwrap();
        assert_eq!(b2.from_json(&back).unwrap(), x);
    }

    #[test]
    fn length_invariants() {
        for spec in ["A1", "A2", "B2", "G2"] {
            let g = group(spec);
            let rs = g.root_system();
            for lam in Weight::box_weights(rs.rank(), 4) {
                let t = g.translation(&lam);
                for mu in rs.weyl_orbit(&lam) {
                    assert_eq!(g.translation(&mu).length(), t.length());
                }
                for om in g.omega_elements() {
                    assert_eq!(g.mul(om, &t).length(), t.length());
                    assert_eq!(g.mul(&t, om).length(), t.length());
                }
                for (_, s) in g.generators() {
                    assert_eq!(g.mul(&t, s).length().abs_diff(t.length()), 1);
                }
                let rw = g.reduced_word(&t);
                assert_eq!(rw.word.len(), t.length() as usize);
                assert_eq!(g.from_word(rw.omega, &rw.word), t);
            }
        }
    }

    #[test]
    fn multiplication_is_associative() {
        let g = group("B2");
        let elts: Vec<AffineElement> =
            ["s1 t[1,-1]", "s0 s2", "omega s1 s0", "t[-2,1] s2", "w0 t[0,1]"].iter().map(|t| g.parse_element(t).unwrap()).collect();
        for a in &elts {
            assert!(g.mul(a, &g.inverse(a)).is_identity());
            for b in &elts {
                for c in &elts {
                    assert_eq!(g.mul(&g.mul(a, b), c), g.mul(a, &g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn order_agrees_with_dominance() {
        for spec in ["A1", "A2", "B2"] {
            let g = group(spec);
            let rs = g.root_system();
            let dom = Weight::dominant_box(rs.rank(), 3);
            for a in &dom {
                for b in &dom {
                    assert_eq!(g.order_leq_weights(a, b), rs.dominance_leq(a, b), "{spec} {a} {b}");
                }
                let orbit = rs.weyl_orbit(a);
                for x in &orbit {
                    for y in &orbit {
                        assert_eq!(g.order_leq_weights(x, y), rs.dominance_leq(x, y), "{spec} {x} {y}");
                    }
                }
            }
        }
    }
}
