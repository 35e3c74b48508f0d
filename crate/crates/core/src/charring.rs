//! Characters of G-modules in characteristic zero: the graded Kostant
//! partition function, Lusztig's q-analogue of weight multiplicity,
//! Freudenthal's recursion and tensor product decomposition.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rootdata::{RootSystem, Weight};

/// Whether multiplicities count Weyl modules `M(ν)` or induced modules `N(ν)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "Weyl")]
    Weyl,
    #[serde(rename = "good")]
    Good,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Weyl => "Weyl",
            Basis::Good => "good",
        })
    }
}

/// Filtration multiplicities of a G-module: dominant weight to count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CharacterJson", try_from = "CharacterJson")]
pub struct CharacterMultiset {
    pub basis: Basis,
    mults: BTreeMap<Weight, u64>,
}

#[derive(Serialize, Deserialize)]
struct CharacterJson {
    basis: Basis,
    mults: Vec<MultJson>,
}

#[derive(Serialize, Deserialize)]
struct MultJson {
    weight: Weight,
    count: u64,
}

impl From<CharacterMultiset> for CharacterJson {
    fn from(c: CharacterMultiset) -> Self {
        CharacterJson {
            basis: c.basis,
            mults: c.mults.into_iter().map(|(weight, count)| MultJson { weight, count }).collect(),
        }
    }
}

impl TryFrom<CharacterJson> for CharacterMultiset {
    type Error = Error;
    fn try_from(j: CharacterJson) -> Result<Self> {
        let mut out = CharacterMultiset::new(j.basis);
        for m in j.mults {
            if m.weight.coords().iter().any(|&c| c < 0) {
                return Err(Error::NotDominant(m.weight.to_string()));
            }
            out.insert(m.weight, m.count);
        }
        Ok(out)
    }
}

impl CharacterMultiset {
    pub fn new(basis: Basis) -> Self {
        Self { basis, mults: BTreeMap::new() }
    }

    /// `{ν: 1}`, i.e. `M(ν)` or `N(ν)`.
    pub fn single(basis: Basis, nu: Weight) -> Self {
        let mut out = Self::new(basis);
        out.insert(nu, 1);
        out
    }

    /// Adds `count` copies of the module with highest weight `nu`.
    pub fn insert(&mut self, nu: Weight, count: u64) {
        if count > 0 {
            *self.mults.entry(nu).or_default() += count;
        }
    }

    pub fn mults(&self) -> &BTreeMap<Weight, u64> {
        &self.mults
    }

    pub fn get(&self, nu: &Weight) -> u64 {
        self.mults.get(nu).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// The same multiplicities, relabelled to the other basis. In
    /// characteristic zero `M(ν) = N(ν)`, so this is an identity on modules.
    pub fn with_basis(&self, basis: Basis) -> Self {
        Self { basis, mults: self.mults.clone() }
    }

    pub fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::BasisMismatch { expected: basis.to_string(), got: self.basis.to_string() });
        }
        Ok(())
    }

    pub fn check(&self, rs: &RootSystem) -> Result<()> {
        for nu in self.mults.keys() {
            rs.check_weight(nu)?;
            if !rs.is_dominant(nu) {
                return Err(Error::NotDominant(nu.to_string()));
            }
        }
        Ok(())
    }
}

/// Character computations for one root system, with shared memo tables.
#[derive(Debug)]
pub struct CharRing {
    rs: Arc<RootSystem>,
    /// `(k, root coordinates)` to the partition function using the first `k` positive roots.
    kostant: Mutex<HashMap<(usize, Vec<i64>), LaurentPoly>>,
    weights: RwLock<HashMap<Weight, Arc<BTreeMap<Weight, u64>>>>,
}

impl CharRing {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        Self { rs, kostant: Mutex::new(HashMap::new()), weights: RwLock::new(HashMap::new()) }
    }

    pub fn from_spec(spec: &str) -> Result<Self> {
        Ok(Self::new(Arc::new(RootSystem::new(spec)?)))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    // ---- Kostant partition function ----

    /// `P_μ(v) = Σ v^{#roots}` over multisets of positive roots summing to `μ`.
    pub fn kostant_partition(&self, mu: &Weight) -> LaurentPoly {
        let Some(c) = self.rs.to_root_coords(mu) else { return LaurentPoly::zero() };
        if c.iter().any(|&x| x < 0) {
            return LaurentPoly::zero();
        }
        let roots: Vec<&[i64]> = self.rs.positive_roots().iter().map(|r| r.root_coords.as_slice()).collect();
        let mut memo = self.kostant.lock().unwrap();
        partition_dp(&roots, roots.len(), c, &mut memo)
    }

    /// Full-level memo entries as `(μ, P_μ)` pairs, sorted by weight.
    pub fn export_kostant(&self) -> Vec<(Weight, LaurentPoly)> {
        let n = self.rs.positive_roots().len();
        let memo = self.kostant.lock().unwrap();
        let mut out: Vec<_> = memo
            .iter()
            .filter(|((k, _), _)| *k == n)
            .map(|((_, c), p)| (self.rs.from_root_coords(c), p.clone()))
            .collect();
        out.sort();
        out
    }

    /// Seeds the memo; entries for weights outside the root lattice are ignored.
    pub fn import_kostant(&self, entries: impl IntoIterator<Item = (Weight, LaurentPoly)>) {
        let n = self.rs.positive_roots().len();
        let mut memo = self.kostant.lock().unwrap();
        for (w, p) in entries {
            if w.rank() != self.rs.rank() {
                continue;
            }
            if let Some(c) = self.rs.to_root_coords(&w) {
                memo.insert((n, c), p);
            }
        }
    }

    // ---- q-analogue ----

    /// `M_λ^μ(v) = Σ_{w∈W} (-1)^{ℓ(w)} P_{w(λ+ρ)-(μ+ρ)}(v)`
    pub fn lusztig_q(&self, lambda: &Weight, mu: &Weight) -> Result<LaurentPoly> {
        let rho = self.rs.rho();
        let top = lambda + &rho;
        let base = mu + &rho;
        let mut out = LaurentPoly::zero();
        for w in self.rs.weyl_group()? {
            let p = self.kostant_partition(&(&w.act(&top) - &base));
            if w.length() % 2 == 0 {
                out += &p;
            } else {
                out -= &p;
            }
        }
        Ok(out)
    }

    // ---- Freudenthal ----

    /// All weight multiplicities of `M(λ)` by Freudenthal's recursion.
    pub fn weights_of(&self, lambda: &Weight) -> Result<Arc<BTreeMap<Weight, u64>>> {
        self.rs.check_weight(lambda)?;
        if !self.rs.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        if let Some(hit) = self.weights.read().unwrap().get(lambda) {
            return Ok(hit.clone());
        }
        let rs = &*self.rs;
        let rho = rs.rho();
        let mut dominant = rs.dominant_below(lambda);
        // by increasing depth below λ
        dominant.sort_by_key(|mu| rs.height(&(lambda - mu)).unwrap());
        let norm = |x: &Weight| rs.inner_product_scaled(x, x);
        let top = norm(&(lambda + &rho));
        let mut dom_mult: HashMap<Weight, i64> = HashMap::new();
        let roots: Vec<Weight> = rs.positive_roots().iter().map(|r| r.weight.clone()).collect();
        for mu in &dominant {
            if mu == lambda {
                dom_mult.insert(mu.clone(), 1);
                continue;
            }
            let mut sum = 0i64;
            for a in &roots {
                let mut x = mu + a;
                loop {
                    let d = rs.dom(&x);
                    let Some(&m) = dom_mult.get(&d) else {
                        if rs.dominance_leq(&d, lambda) {
                            unreachable!("dominant weights are processed top-down");
                        }
                        break;
                    };
                    sum += m * rs.inner_product_scaled(&x, a);
                    x = &x + a;
                }
            }
            let denom = top - norm(&(mu + &rho));
            debug_assert!(denom > 0 && (2 * sum) % denom == 0);
            dom_mult.insert(mu.clone(), 2 * sum / denom);
        }
        let mut out = BTreeMap::new();
        for (mu, m) in dom_mult {
            if m > 0 {
                for x in rs.weyl_orbit(&mu) {
                    out.insert(x, m as u64);
                }
            }
        }
        let out = Arc::new(out);
        self.weights.write().unwrap().insert(lambda.clone(), out.clone());
        Ok(out)
    }

    /// `dim M(λ)_μ`
    pub fn freudenthal_mult(&self, lambda: &Weight, mu: &Weight) -> Result<u64> {
        Ok(self.weights_of(lambda)?.get(mu).copied().unwrap_or(0))
    }

    pub fn dim(&self, lambda: &Weight) -> Result<u64> {
        Ok(self.weights_of(lambda)?.values().sum())
    }

    /// `Σ_ν cm(ν) · dim M(ν)_μ` for every weight `μ`.
    pub fn full_weights(&self, cm: &CharacterMultiset) -> Result<BTreeMap<Weight, u64>> {
        cm.check(&self.rs)?;
        let mut out = BTreeMap::new();
        for (nu, &count) in cm.mults() {
            for (mu, &m) in self.weights_of(nu)?.iter() {
                *out.entry(mu.clone()).or_default() += count * m;
            }
        }
        Ok(out)
    }

    // ---- tensor products ----

    /// `(M(λ) ⊗ M(μ) : M(ν))` by the Brauer–Klimyk rule.
    pub fn tensor_decompose(&self, lambda: &Weight, mu: &Weight) -> Result<CharacterMultiset> {
        self.rs.check_weight(lambda)?;
        if !self.rs.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let rho = self.rs.rho();
        let shifted = lambda + &rho;
        let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
        for (xi, &m) in self.weights_of(mu)?.iter() {
            let rep = self.rs.dominant_rep(&(&shifted + xi));
            if rep.dom.coords().contains(&0) {
                continue;
            }
            let sign = if rep.delta.is_multiple_of(2) { 1 } else { -1 };
            *acc.entry(&rep.dom - &rho).or_default() += sign * m as i64;
        }
        let mut out = CharacterMultiset::new(Basis::Weyl);
        for (nu, c) in acc {
            assert!(c >= 0, "negative tensor multiplicity at {nu}");
            out.insert(nu, c as u64);
        }
        Ok(out)
    }
}

fn partition_dp(
    roots: &[&[i64]],
    k: usize,
    c: Vec<i64>,
    memo: &mut HashMap<(usize, Vec<i64>), LaurentPoly>,
) -> LaurentPoly {
    if c.iter().all(|&x| x == 0) {
        return LaurentPoly::one();
    }
    if k == 0 {
        return LaurentPoly::zero();
    }
    let key = (k, c);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let c = key.1.clone();
    // P_k(c) = P_{k-1}(c) + v P_k(c - β_k)
    let mut out = partition_dp(roots, k - 1, c.clone(), memo);
    let beta = roots[k - 1];
    let rest: Vec<i64> = c.iter().zip(beta).map(|(a, b)| a - b).collect();
    if rest.iter().all(|&x| x >= 0) {
        out += &partition_dp(roots, k, rest, memo).shift(1);
    }
    memo.insert(key, out.clone());
    out
}
