//! Finite root systems of simply-connected semisimple type.
//!
//! Weights are integer vectors in fundamental-weight coordinates, so the
//! `i`-th coordinate of `λ` is `<λ, α_i^∨>`. The Cartan matrix is stored with
//! `cartan[i][j] = <α_j, α_i^∨>`, which makes column `j` the coordinate vector
//! of the simple root `α_j`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Index, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub const MAX_RANK: usize = 8;
pub const DEFAULT_WEYL_BOUND: u64 = 1_000_000;

/// A weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(SmallVec<[i64; 8]>);

impl Weight {
    pub fn new(coords: &[i64]) -> Self {
        Weight(SmallVec::from_slice(coords))
    }

    pub fn zero(rank: usize) -> Self {
        Weight(smallvec::smallvec![0; rank])
    }

    /// The `i`-th fundamental weight (0-based index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|&c| c * k).collect())
    }

    /// Sup-norm, used for box enumerations.
    pub fn radius(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    /// All weights with every coordinate in `[-radius, radius]`.
    pub fn box_weights(rank: usize, radius: i64) -> Vec<Weight> {
        let mut out = vec![Weight::zero(0)];
        for _ in 0..rank {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (-radius..=radius).map(move |c| {
                        let mut n = w.clone();
                        n.0.push(c);
                        n
                    })
                })
                .collect();
        }
        out
    }

    /// Dominant weights with every coordinate in `[0, radius]`.
    pub fn dominant_box(rank: usize, radius: i64) -> Vec<Weight> {
        Self::box_weights(rank, radius)
            .into_iter()
            .filter(|w| w.0.iter().all(|&c| c >= 0))
            .collect()
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Parses `[a1,...,ar]`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("weight literal `{s}` must look like [a1,...,ar]")))?;
        if inner.is_empty() {
            return Ok(Weight::zero(0));
        }
        inner
            .split(',')
            .map(|p| p.parse::<i64>().map_err(|_| Error::Parse(format!("bad coordinate `{p}` in `{s}`"))))
            .collect::<Result<SmallVec<_>>>()
            .map(Weight)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<i64> = Vec::deserialize(d)?;
        Ok(Weight(SmallVec::from_vec(v)))
    }
}

/// An element of the finite Weyl group, stored as its matrix on
/// fundamental-weight coordinates together with the inverse matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    matrix: Arc<[i32]>,
    inverse: Arc<[i32]>,
    length: u32,
}

impl WeylElement {
    pub fn length(&self) -> u32 {
        self.length
    }

    /// Row-major matrix acting on column vectors of fundamental coordinates.
    pub fn matrix(&self) -> &[i32] {
        &self.matrix
    }

    pub fn matrix_rows(&self) -> Vec<Vec<i64>> {
        let r = (self.matrix.len() as f64).sqrt() as usize;
        self.matrix.chunks(r.max(1)).map(|row| row.iter().map(|&x| x as i64).collect()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    fn apply_matrix(m: &[i32], w: &Weight) -> Weight {
        let r = w.rank();
        Weight(
            (0..r)
                .map(|k| (0..r).map(|j| m[k * r + j] as i64 * w.0[j]).sum())
                .collect(),
        )
    }

    /// `w(λ)`
    pub fn act(&self, w: &Weight) -> Weight {
        Self::apply_matrix(&self.matrix, w)
    }

    /// `w^{-1}(λ)`
    pub fn act_inverse(&self, w: &Weight) -> Weight {
        Self::apply_matrix(&self.inverse, w)
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement(len={}, {:?})", self.length, self.matrix)
    }
}

/// Lie type of an irreducible component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Debug)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
    /// Global (0-based) simple indices of this component.
    pub indices: Vec<usize>,
    /// Index into [`RootSystem::positive_roots`] of the highest root.
    pub highest_root: usize,
}

impl Component {
    pub fn name(&self) -> String {
        format!("{:?}{}", self.family, self.rank)
    }
}

/// A positive root with its paired coroot.
#[derive(Clone, Debug)]
pub struct Root {
    /// Fundamental-weight coordinates.
    pub weight: Weight,
    /// Coefficients in the basis of simple roots.
    pub root_coords: Vec<i64>,
    /// Coefficients of `α^∨` in the basis of simple coroots.
    pub coroot_coords: Vec<i64>,
    pub height: i64,
}

/// Result of moving a weight into the dominant chamber.
#[derive(Clone, Debug)]
pub struct DominantRep {
    pub dom: Weight,
    /// The minimal-length `v` with `v λ = dom`.
    pub v: WeylElement,
    /// `δ(λ) = ℓ(v)`; also the sign exponent of `v`.
    pub delta: u32,
    /// Simple indices applied, first applied first.
    pub steps: Vec<usize>,
}

pub struct RootSystem {
    spec: String,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    det: i64,
    adjugate: Vec<Vec<i64>>,
    height_row: Vec<i64>,
    components: Vec<Component>,
    positive_roots: Vec<Root>,
    root_lookup: HashMap<Weight, (usize, bool)>,
    weyl_order: u64,
    weyl_bound: u64,
    weyl_group: OnceLock<Vec<WeylElement>>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem").field("spec", &self.spec).field("rank", &self.rank).finish()
    }
}

fn component_cartan(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family {
        Family::A | Family::B | Family::C => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        Family::G => link(0, 1),
    }
    match family {
        // α_n short
        Family::B => a[n - 1][n - 2] = -2,
        // α_n long
        Family::C => a[n - 2][n - 1] = -2,
        // α1, α2 long; α3, α4 short
        Family::F => a[2][1] = -2,
        // α1 short, α2 long
        Family::G => a[0][1] = -3,
        _ => {}
    }
    a
}

fn known_counts(family: Family, n: usize) -> (usize, u64) {
    let fact = |k: u64| (1..=k).product::<u64>();
    let n64 = n as u64;
    match family {
        Family::A => (n * (n + 1) / 2, fact(n64 + 1)),
        Family::B | Family::C => (n * n, (1u64 << n) * fact(n64)),
        Family::D => (n * (n - 1), (1u64 << (n - 1)) * fact(n64)),
        Family::E => match n {
            6 => (36, 51_840),
            7 => (63, 2_903_040),
            _ => (120, 696_729_600),
        },
        Family::F => (24, 1152),
        Family::G => (6, 12),
    }
}

fn parse_component(s: &str) -> Result<(Family, usize)> {
    let unknown = || Error::UnknownType(s.to_string());
    let mut chars = s.chars();
    let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
        Some('A') => Family::A,
        Some('B') => Family::B,
        Some('C') => Family::C,
        Some('D') => Family::D,
        Some('E') => Family::E,
        Some('F') => Family::F,
        Some('G') => Family::G,
        _ => return Err(unknown()),
    };
    let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
    let ok = match family {
        Family::A => n >= 1,
        Family::B | Family::C => n >= 2,
        Family::D => n >= 4,
        Family::E => (6..=8).contains(&n),
        Family::F => n == 4,
        Family::G => n == 2,
    };
    if !ok {
        return Err(unknown());
    }
    Ok((family, n))
}

/// Determinant and adjugate of a small integer matrix (cofactor expansion via
/// fraction-free elimination on minors).
fn det_bareiss(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let mut adj = vec![vec![0i64; n]; n];
    if n == 1 {
        adj[0][0] = 1;
        return adj;
    }
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c]).collect())
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            // adj = transpose of the cofactor matrix
            adj[j][i] = sign * det_bareiss(&minor);
        }
    }
    adj
}

impl RootSystem {
    /// Builds a root system from a type string such as `A2`, `B2`, `G2` or `A1xA1`.
    pub fn new(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let parts: Vec<(Family, usize)> = spec
            .split(['x', 'X', '×'])
            .map(|p| parse_component(p.trim()))
            .collect::<Result<_>>()?;
        if parts.is_empty() {
            return Err(Error::UnknownType(spec.to_string()));
        }
        let rank: usize = parts.iter().map(|p| p.1).sum();
        if rank > MAX_RANK {
            return Err(Error::RankTooLarge(rank));
        }
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut offset = 0;
        let mut comp_indices = Vec::new();
        let mut expected_roots = 0;
        let mut weyl_order = 1u64;
        for &(family, n) in &parts {
            let block = component_cartan(family, n);
            for i in 0..n {
                for j in 0..n {
                    cartan[offset + i][offset + j] = block[i][j];
                }
            }
            comp_indices.push((family, n, (offset..offset + n).collect::<Vec<_>>()));
            let (roots, order) = known_counts(family, n);
            expected_roots += roots;
            weyl_order = weyl_order.saturating_mul(order);
            offset += n;
        }
        Self::from_cartan(spec, cartan, comp_indices, expected_roots, weyl_order)
    }

    fn from_cartan(
        spec: &str,
        cartan: Vec<Vec<i64>>,
        comp_indices: Vec<(Family, usize, Vec<usize>)>,
        expected_roots: usize,
        weyl_order: u64,
    ) -> Result<Self> {
        let rank = cartan.len();
        for i in 0..rank {
            if cartan[i][i] != 2 {
                return Err(Error::InvalidCartan("diagonal entries must be 2".into()));
            }
            for j in 0..rank {
                if i != j && (cartan[i][j] > 0 || ((cartan[i][j] == 0) != (cartan[j][i] == 0))) {
                    return Err(Error::InvalidCartan(format!("bad off-diagonal entry at ({i},{j})")));
                }
            }
        }
        // Symmetrizer d with d_i a_ij = d_j a_ji, normalized per component.
        let mut symmetrizer = vec![0i64; rank];
        for (_, _, idx) in &comp_indices {
            symmetrizer[idx[0]] = 6;
            let mut queue = VecDeque::from([idx[0]]);
            while let Some(i) = queue.pop_front() {
                for &j in idx {
                    if symmetrizer[j] == 0 && cartan[i][j] != 0 {
                        symmetrizer[j] = symmetrizer[i] * cartan[i][j] / cartan[j][i];
                        queue.push_back(j);
                    }
                }
            }
            let g = idx.iter().fold(0, |g, &i| gcd(g, symmetrizer[i]));
            for &i in idx {
                symmetrizer[i] /= g;
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                if symmetrizer[i] * cartan[i][j] != symmetrizer[j] * cartan[j][i] {
                    return Err(Error::InvalidCartan("not symmetrizable".into()));
                }
            }
        }
        let sym: Vec<Vec<i64>> =
            (0..rank).map(|i| (0..rank).map(|j| symmetrizer[i] * cartan[i][j]).collect()).collect();
        for k in 1..=rank {
            let minor: Vec<Vec<i64>> = sym[..k].iter().map(|r| r[..k].to_vec()).collect();
            if det_bareiss(&minor) <= 0 {
                return Err(Error::InvalidCartan("symmetrization is not positive definite".into()));
            }
        }
        let det = det_bareiss(&cartan);
        let adj = adjugate(&cartan);
        let height_row: Vec<i64> = (0..rank).map(|j| (0..rank).map(|i| adj[i][j]).sum()).collect();

        let mut rs = RootSystem {
            spec: spec.to_string(),
            rank,
            cartan,
            symmetrizer,
            det,
            adjugate: adj,
            height_row,
            components: Vec::new(),
            positive_roots: Vec::new(),
            root_lookup: HashMap::new(),
            weyl_order,
            weyl_bound: DEFAULT_WEYL_BOUND,
            weyl_group: OnceLock::new(),
        };
        rs.generate_roots();
        if rs.positive_roots.len() != expected_roots {
            return Err(Error::InvalidCartan(format!(
                "generated {} positive roots, expected {expected_roots}",
                rs.positive_roots.len()
            )));
        }
        for (family, n, indices) in comp_indices {
            let highest_root = rs
                .positive_roots
                .iter()
                .enumerate()
                .filter(|(_, r)| indices.iter().any(|&i| r.root_coords[i] > 0))
                .max_by_key(|(_, r)| r.height)
                .map(|(k, _)| k)
                .expect("component has roots");
            rs.components.push(Component { family, rank: n, indices, highest_root });
        }
        Ok(rs)
    }

    /// Closure of the simple roots under simple reflections, carrying coroots along.
    fn generate_roots(&mut self) {
        let r = self.rank;
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut roots = Vec::new();
        let mut queue = VecDeque::new();
        for i in 0..r {
            let mut rc = vec![0; r];
            rc[i] = 1;
            let root = Root {
                weight: self.simple_root(i),
                root_coords: rc.clone(),
                coroot_coords: rc,
                height: 1,
            };
            seen.insert(root.weight.clone());
            queue.push_back(root);
        }
        while let Some(root) = queue.pop_front() {
            for j in 0..r {
                let p = root.weight[j];
                if p == 0 {
                    continue;
                }
                let mut rc = root.root_coords.clone();
                rc[j] -= p;
                if rc.iter().any(|&c| c < 0) {
                    continue;
                }
                // <α_j, β^∨> where β^∨ = Σ d_k α_k^∨
                let q: i64 = (0..r).map(|k| root.coroot_coords[k] * self.cartan[k][j]).sum();
                let mut cc = root.coroot_coords.clone();
                cc[j] -= q;
                let weight = &root.weight - &self.simple_root(j).scale(p);
                if seen.insert(weight.clone()) {
                    let height = rc.iter().sum();
                    queue.push_back(Root { weight, root_coords: rc, coroot_coords: cc, height });
                }
            }
            roots.push(root);
        }
        roots.sort_by(|a, b| a.height.cmp(&b.height).then_with(|| b.root_coords.cmp(&a.root_coords)));
        for (k, root) in roots.iter().enumerate() {
            self.root_lookup.insert(root.weight.clone(), (k, true));
            self.root_lookup.insert(-&root.weight, (k, false));
        }
        self.positive_roots = roots;
    }

    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// `det` of the Cartan matrix, which is `|X / ZΦ|`.
    pub fn cartan_det(&self) -> i64 {
        self.det
    }

    pub fn weyl_order(&self) -> u64 {
        self.weyl_order
    }

    pub fn weyl_bound(&self) -> u64 {
        self.weyl_bound
    }

    pub fn set_weyl_bound(&mut self, bound: u64) {
        self.weyl_bound = bound;
    }

    /// Simple root `α_i` (column `i` of the Cartan matrix).
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight((0..self.rank).map(|k| self.cartan[k][i]).collect())
    }

    pub fn simple_roots(&self) -> Vec<Weight> {
        (0..self.rank).map(|i| self.simple_root(i)).collect()
    }

    pub fn rho(&self) -> Weight {
        Weight(smallvec::smallvec![1; self.rank])
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank)
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch { weight: w.to_string(), got: w.rank(), expected: self.rank });
        }
        Ok(())
    }

    pub fn parse_weight(&self, s: &str) -> Result<Weight> {
        let w: Weight = s.parse()?;
        self.check_weight(&w)?;
        Ok(w)
    }

    /// `<λ, α^∨>` for the positive root with the given index.
    pub fn pairing(&self, w: &Weight, root: usize) -> i64 {
        self.pairing_coroot(w, &self.positive_roots[root].coroot_coords)
    }

    /// `<λ, β^∨>` for a coroot given in simple-coroot coordinates.
    pub fn pairing_coroot(&self, w: &Weight, coroot: &[i64]) -> i64 {
        w.0.iter().zip(coroot).map(|(a, b)| a * b).sum()
    }

    /// Index and sign of a root, if `w` is a root.
    pub fn root_index(&self, w: &Weight) -> Option<(usize, bool)> {
        self.root_lookup.get(w).copied()
    }

    /// Sign of the height of an element of `ZΦ ⊗ Q`; strictly decides positivity of roots.
    fn height_sign(&self, w: &Weight) -> i64 {
        w.0.iter().zip(&self.height_row).map(|(a, b)| a * b).sum::<i64>().signum()
    }

    /// Coordinates in the basis of simple roots, if `w ∈ ZΦ`.
    pub fn to_root_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        let r = self.rank;
        let mut out = Vec::with_capacity(r);
        for i in 0..r {
            let num: i64 = (0..r).map(|j| self.adjugate[i][j] * w.0[j]).sum();
            if num % self.det != 0 {
                return None;
            }
            out.push(num / self.det);
        }
        Some(out)
    }

    pub fn from_root_coords(&self, c: &[i64]) -> Weight {
        Weight((0..self.rank).map(|k| (0..self.rank).map(|j| self.cartan[k][j] * c[j]).sum()).collect())
    }

    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.to_root_coords(w).is_some()
    }

    /// `height(μ)` for `μ ∈ ZΦ`.
    pub fn height(&self, w: &Weight) -> Option<i64> {
        self.to_root_coords(w).map(|c| c.iter().sum())
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.0.iter().all(|&c| c >= 0)
    }

    /// `λ ≼ μ`: `μ - λ` is a nonnegative integer combination of simple roots.
    pub fn dominance_leq(&self, lambda: &Weight, mu: &Weight) -> bool {
        self.to_root_coords(&(mu - lambda)).is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// `det(A) · (λ, μ)` for the invariant form normalized so that short roots
    /// have squared length 2. Always an integer.
    pub fn inner_product_scaled(&self, lambda: &Weight, mu: &Weight) -> i64 {
        let r = self.rank;
        (0..r)
            .map(|j| {
                let c: i64 = (0..r).map(|k| self.adjugate[j][k] * mu.0[k]).sum();
                c * self.symmetrizer[j] * lambda.0[j]
            })
            .sum()
    }

    // ---- Weyl group ----

    fn identity_matrix(&self) -> Arc<[i32]> {
        let r = self.rank;
        (0..r * r).map(|k| if k / r == k % r { 1 } else { 0 }).collect()
    }

    pub fn identity(&self) -> WeylElement {
        let m = self.identity_matrix();
        WeylElement { matrix: m.clone(), inverse: m, length: 0 }
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let r = self.rank;
        let m: Arc<[i32]> = (0..r * r)
            .map(|k| {
                let (row, col) = (k / r, k % r);
                let id = i32::from(row == col);
                if col == i {
                    id - self.cartan[row][i] as i32
                } else {
                    id
                }
            })
            .collect();
        WeylElement { matrix: m.clone(), inverse: m, length: 1 }
    }

    /// `|{γ ∈ Φ⁺ : wγ ∈ Φ⁻}|`
    fn inversion_count(&self, m: &[i32]) -> u32 {
        self.positive_roots
            .iter()
            .filter(|root| self.height_sign(&WeylElement::apply_matrix(m, &root.weight)) < 0)
            .count() as u32
    }

    fn mat_mul(&self, a: &[i32], b: &[i32]) -> Arc<[i32]> {
        let r = self.rank;
        (0..r * r)
            .map(|k| {
                let (i, j) = (k / r, k % r);
                (0..r).map(|l| a[i * r + l] * b[l * r + j]).sum()
            })
            .collect()
    }

    pub fn weyl_mul(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        if a.length == 0 {
            return b.clone();
        }
        if b.length == 0 {
            return a.clone();
        }
        let matrix = self.mat_mul(&a.matrix, &b.matrix);
        let inverse = self.mat_mul(&b.inverse, &a.inverse);
        let length = self.inversion_count(&matrix);
        WeylElement { matrix, inverse, length }
    }

    pub fn weyl_inverse(&self, w: &WeylElement) -> WeylElement {
        WeylElement { matrix: w.inverse.clone(), inverse: w.matrix.clone(), length: w.length }
    }

    /// Whether `w γ` is a positive root, for the positive root with index `root`.
    pub fn sends_positive(&self, w: &WeylElement, root: usize) -> bool {
        self.height_sign(&w.act(&self.positive_roots[root].weight)) > 0
    }

    /// Reflection `s_γ` in the positive root with the given index.
    pub fn reflection(&self, root: usize) -> WeylElement {
        let r = self.rank;
        let gamma = &self.positive_roots[root];
        // s_γ(λ) = λ - <λ, γ^∨> γ
        let m: Arc<[i32]> = (0..r * r)
            .map(|k| {
                let (row, col) = (k / r, k % r);
                i32::from(row == col) - (gamma.weight[row] * gamma.coroot_coords[col]) as i32
            })
            .collect();
        let length = self.inversion_count(&m);
        WeylElement { matrix: m.clone(), inverse: m, length }
    }

    /// Word in simple reflections for `w` (leftmost letter first), found by
    /// peeling right descents.
    pub fn weyl_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut cur = w.clone();
        let mut word = Vec::new();
        while cur.length > 0 {
            let i = (0..self.rank)
                .find(|&i| {
                    let root = self.root_index(&self.simple_root(i)).unwrap().0;
                    !self.sends_positive(&cur, root)
                })
                .expect("nontrivial element has a right descent");
            cur = self.weyl_mul(&cur, &self.simple_reflection(i));
            word.push(i);
        }
        word.reverse();
        word
    }

    /// The whole Weyl group, enumerated by traversal from the identity under
    /// right multiplication by simple reflections. Ordered by length.
    pub fn weyl_group(&self) -> Result<&[WeylElement]> {
        if self.weyl_order > self.weyl_bound {
            return Err(Error::BoundExceeded {
                what: format!("W({})", self.spec),
                size: self.weyl_order,
                bound: self.weyl_bound,
            });
        }
        Ok(self.weyl_group.get_or_init(|| {
            let gens: Vec<WeylElement> = (0..self.rank).map(|i| self.simple_reflection(i)).collect();
            let mut seen: HashSet<Arc<[i32]>> = HashSet::new();
            let mut out = vec![self.identity()];
            seen.insert(out[0].matrix.clone());
            let mut head = 0;
            while head < out.len() {
                let w = out[head].clone();
                head += 1;
                for s in &gens {
                    let ws = self.weyl_mul(&w, s);
                    if seen.insert(ws.matrix.clone()) {
                        out.push(ws);
                    }
                }
            }
            out.sort_by_key(|w| w.length);
            out
        }))
    }

    /// Distinct weights in the W-orbit of `λ`, sorted.
    pub fn weyl_orbit(&self, lambda: &Weight) -> Vec<Weight> {
        // Orbit traversal by simple reflections, independent of |W|.
        let mut seen: BTreeSet<Weight> = BTreeSet::from([lambda.clone()]);
        let mut stack = vec![lambda.clone()];
        while let Some(mu) = stack.pop() {
            for i in 0..self.rank {
                if mu[i] != 0 {
                    let next = self.reflect_simple(&mu, i);
                    if seen.insert(next.clone()) {
                        stack.push(next);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    /// `s_i(λ) = λ - <λ, α_i^∨> α_i`
    pub fn reflect_simple(&self, w: &Weight, i: usize) -> Weight {
        let p = w[i];
        Weight((0..self.rank).map(|k| w[k] - p * self.cartan[k][i]).collect())
    }

    /// Dominant representative of the orbit of `λ` with the minimal `v`.
    /// Repeatedly reflects in the smallest index `i` with `<λ, α_i^∨> < 0`.
    pub fn dominant_rep(&self, lambda: &Weight) -> DominantRep {
        let mut cur = lambda.clone();
        let mut v = self.identity();
        let mut steps = Vec::new();
        while let Some(i) = (0..self.rank).find(|&i| cur[i] < 0) {
            cur = self.reflect_simple(&cur, i);
            v = self.weyl_mul(&self.simple_reflection(i), &v);
            steps.push(i);
        }
        debug_assert_eq!(v.length as usize, steps.len());
        DominantRep { dom: cur, delta: v.length, v, steps }
    }

    pub fn dom(&self, lambda: &Weight) -> Weight {
        let mut cur = lambda.clone();
        while let Some(i) = (0..self.rank).find(|&i| cur[i] < 0) {
            cur = self.reflect_simple(&cur, i);
        }
        cur
    }

    /// `δ(λ)`
    pub fn delta(&self, lambda: &Weight) -> u32 {
        let mut cur = lambda.clone();
        let mut n = 0;
        while let Some(i) = (0..self.rank).find(|&i| cur[i] < 0) {
            cur = self.reflect_simple(&cur, i);
            n += 1;
        }
        n
    }

    /// The longest element `w_0`.
    pub fn longest_element(&self) -> WeylElement {
        self.dominant_rep(&-&self.rho()).v
    }

    /// `-w_0 λ`
    pub fn minus_w0(&self, lambda: &Weight) -> Weight {
        self.longest_element().act(&-lambda)
    }

    /// Dominant weights `ν ≼ λ` for dominant `λ`, i.e. the dominant weights of
    /// the irreducible module of highest weight `λ`.
    pub fn dominant_below(&self, lambda: &Weight) -> Vec<Weight> {
        self.conv_set(lambda).into_iter().filter(|w| self.is_dominant(w)).collect()
    }

    /// `conv(λ) = {μ ∈ λ + ZΦ : dom(μ) ≼ dom(λ)}`, sorted.
    pub fn conv_set(&self, lambda: &Weight) -> Vec<Weight> {
        let top = self.dom(lambda);
        let mut seen: BTreeSet<Weight> = BTreeSet::from([top.clone()]);
        let mut stack = vec![top.clone()];
        let simple = self.simple_roots();
        while let Some(mu) = stack.pop() {
            for a in &simple {
                let next = &mu - a;
                if !seen.contains(&next) && self.dominance_leq(&self.dom(&next), &top) {
                    seen.insert(next.clone());
                    stack.push(next);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// `conv°(λ) = conv(λ) \ Wλ`
    pub fn conv_interior(&self, lambda: &Weight) -> Vec<Weight> {
        let orbit: BTreeSet<Weight> = self.weyl_orbit(lambda).into_iter().collect();
        self.conv_set(lambda).into_iter().filter(|w| !orbit.contains(w)).collect()
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::new(c)
    }

    #[test]
    fn a1_defining_data() {
        let rs = RootSystem::new("A1").unwrap();
        assert_eq!(rs.rank(), 1);
        assert_eq!(rs.positive_roots().len(), 1);
        assert_eq!(rs.positive_roots()[0].weight, w(&[2]));
    }

    #[test]
    fn a2_positive_roots() {
        let rs = RootSystem::new("A2").unwrap();
        let roots: BTreeSet<Weight> = rs.positive_roots().iter().map(|r| r.weight.clone()).collect();
        let expected: BTreeSet<Weight> = [w(&[2, -1]), w(&[-1, 2]), w(&[1, 1])].into_iter().collect();
        assert_eq!(roots, expected);
        assert_eq!(rs.components()[0].highest_root, 2);
    }

    #[test]
    fn root_counts_for_all_families() {
        for (spec, n) in [
            ("A1", 1),
            ("A2", 3),
            ("B2", 4),
            ("C3", 9),
            ("G2", 6),
            ("A1xA1", 2),
            ("D4", 12),
            ("F4", 24),
            ("E6", 36),
            ("E8", 120),
            ("B3xA2", 12),
        ] {
            let rs = RootSystem::new(spec).unwrap();
            assert_eq!(rs.positive_roots().len(), n, "{spec}");
            for r in rs.positive_roots() {
                assert!(r.root_coords.iter().all(|&c| c >= 0));
                // <α, α^∨> = 2
                assert_eq!(rs.pairing_coroot(&r.weight, &r.coroot_coords), 2);
            }
        }
    }

    #[test]
    fn unknown_types_rejected() {
        assert!(matches!(RootSystem::new("Z9"), Err(Error::UnknownType(_))));
        assert!(matches!(RootSystem::new("E5"), Err(Error::UnknownType(_))));
        assert!(matches!(RootSystem::new("A9"), Err(Error::RankTooLarge(9))));
        assert!(matches!(RootSystem::new("A4xA5"), Err(Error::RankTooLarge(9))));
        assert!(RootSystem::new("").is_err());
    }

    #[test]
    fn pairing_examples() {
        let a1 = RootSystem::new("A1").unwrap();
        assert_eq!(a1.pairing(&w(&[1]), 0), 1);
        assert_eq!(a1.pairing(&w(&[-2]), 0), -2);
        let a2 = RootSystem::new("A2").unwrap();
        assert_eq!(a2.pairing(&a2.rho(), 2), 2);
    }

    #[test]
    fn dominant_rep_examples() {
        let a1 = RootSystem::new("A1").unwrap();
        let d = a1.dominant_rep(&w(&[1]));
        assert_eq!((d.dom, d.delta), (w(&[1]), 0));
        let d = a1.dominant_rep(&w(&[-1]));
        assert_eq!((d.dom, d.delta), (w(&[1]), 1));
        assert_eq!(d.v, a1.simple_reflection(0));

        let a2 = RootSystem::new("A2").unwrap();
        let d = a2.dominant_rep(&w(&[-2, 1]));
        assert_eq!(d.dom, w(&[1, 1]));
        assert_eq!(d.delta, 2);
        // v = s_β s_α
        let expected = a2.weyl_mul(&a2.simple_reflection(1), &a2.simple_reflection(0));
        assert_eq!(d.v, expected);
    }

    #[test]
    fn dominance_examples() {
        let a1 = RootSystem::new("A1").unwrap();
        assert!(a1.dominance_leq(&w(&[0]), &w(&[2])));
        assert!(!a1.dominance_leq(&w(&[0]), &w(&[1])));
        let a2 = RootSystem::new("A2").unwrap();
        assert!(a2.dominance_leq(&w(&[-1, -1]), &w(&[1, 1])));
    }

    #[test]
    fn conv_examples() {
        let a1 = RootSystem::new("A1").unwrap();
        assert_eq!(a1.conv_set(&w(&[2])), vec![w(&[-2]), w(&[0]), w(&[2])]);
        assert_eq!(a1.conv_set(&w(&[1])), vec![w(&[-1]), w(&[1])]);
        assert!(a1.conv_interior(&w(&[1])).is_empty());
        let a2 = RootSystem::new("A2").unwrap();
        assert_eq!(a2.conv_set(&w(&[0, 0])), vec![w(&[0, 0])]);
        assert!(a2.conv_interior(&w(&[0, 0])).is_empty());
    }

    #[test]
    fn weyl_group_examples() {
        let a1 = RootSystem::new("A1").unwrap();
        let lens: Vec<u32> = a1.weyl_group().unwrap().iter().map(|w| w.length()).collect();
        assert_eq!(lens, vec![0, 1]);
        let a2 = RootSystem::new("A2").unwrap();
        let lens: Vec<u32> = a2.weyl_group().unwrap().iter().map(|w| w.length()).collect();
        assert_eq!(lens, vec![0, 1, 1, 2, 2, 3]);
        assert_eq!(a2.weyl_orbit(&a2.rho()).len(), 6);
        for (spec, order) in [("B2", 8), ("G2", 12), ("A3", 24), ("A1xA1", 4)] {
            assert_eq!(RootSystem::new(spec).unwrap().weyl_group().unwrap().len(), order);
        }
    }

    #[test]
    fn weyl_bound_enforced() {
        let mut rs = RootSystem::new("A3").unwrap();
        rs.set_weyl_bound(10);
        assert!(matches!(rs.weyl_group(), Err(Error::BoundExceeded { size: 24, .. })));
        assert!(RootSystem::new("E8").unwrap().weyl_group().is_err());
    }

    #[test]
    fn weight_literals() {
        assert_eq!("[1, -2,3]".parse::<Weight>().unwrap(), w(&[1, -2, 3]));
        assert!("1,2".parse::<Weight>().is_err());
        assert!("[1,x]".parse::<Weight>().is_err());
        let a2 = RootSystem::new("A2").unwrap();
        assert!(matches!(a2.parse_weight("[1]"), Err(Error::RankMismatch { .. })));
        assert_eq!(serde_json::to_string(&w(&[1, -1])).unwrap(), "[1,-1]");
    }

    #[test]
    fn longest_element_properties() {
        for spec in ["A1", "A2", "B2", "G2", "A3", "A1xA2"] {
            let rs = RootSystem::new(spec).unwrap();
            let w0 = rs.longest_element();
            assert_eq!(w0.length() as usize, rs.positive_roots().len());
            assert!(rs.weyl_mul(&w0, &w0).is_identity());
            for lam in Weight::dominant_box(rs.rank(), 2) {
                assert!(rs.is_dominant(&rs.minus_w0(&lam)));
            }
        }
    }

    #[test]
    fn inner_product_is_w_invariant() {
        let rs = RootSystem::new("B2").unwrap();
        let a = w(&[1, 2]);
        let b = w(&[-1, 3]);
        for g in rs.weyl_group().unwrap() {
            assert_eq!(rs.inner_product_scaled(&g.act(&a), &g.act(&b)), rs.inner_product_scaled(&a, &b));
        }
        assert_eq!(
            rs.inner_product_scaled(&a, &b),
            rs.inner_product_scaled(&b, &a),
        );
    }

    #[test]
    fn weyl_lengths_count_inverted_roots() {
        for spec in ["A2", "B2", "G2", "A3", "B3"] {
            let rs = RootSystem::new(spec).unwrap();
            for x in rs.weyl_group().unwrap() {
                let inverted = rs
                    .positive_roots()
                    .iter()
                    .filter(|r| rs.root_index(&x.act(&r.weight)).is_some_and(|(_, pos)| !pos))
                    .count();
                assert_eq!(x.length() as usize, inverted);
            }
        }
    }

    #[test]
    fn dominant_rep_is_minimal() {
        for spec in ["A1", "A2", "B2", "G2", "A3", "B3", "C3"] {
            let rs = RootSystem::new(spec).unwrap();
            let weyl = rs.weyl_group().unwrap();
            let radius = if rs.rank() == 3 { 2 } else { 4 };
            for lam in Weight::box_weights(rs.rank(), radius) {
                let rep = rs.dominant_rep(&lam);
                assert!(rs.is_dominant(&rep.dom));
                assert_eq!(rep.v.act(&lam), rep.dom);
                let best = weyl.iter().filter(|x| rs.is_dominant(&x.act(&lam))).map(|x| x.length()).min();
                assert_eq!(best, Some(rep.delta), "{spec} {lam}");
                let shortest: Vec<_> = weyl.iter().filter(|x| x.length() == rep.delta && x.act(&lam) == rep.dom).collect();
                assert_eq!(shortest.len(), 1, "{spec} {lam}: minimal v is not unique");
            }
        }
    }

    /// Membership in the convex hull of a finite point set in the plane (or on a line).
    fn in_hull(points: &[Weight], x: &Weight) -> bool {
        if x.rank() == 1 {
            let lo = points.iter().map(|p| p[0]).min().unwrap();
            let hi = points.iter().map(|p| p[0]).max().unwrap();
            return lo <= x[0] && x[0] <= hi;
        }
        // Monotone chain hull, then a sign test against every edge.
        let mut pts: Vec<(i64, i64)> = points.iter().map(|p| (p[0], p[1])).collect();
        pts.sort();
        pts.dedup();
        if pts.len() == 1 {
            return (x[0], x[1]) == pts[0];
        }
        let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
        let mut hull: Vec<(i64, i64)> = Vec::new();
        for pass in 0..2 {
            let start = hull.len();
            let iter: Box<dyn Iterator<Item = &(i64, i64)>> =
                if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
            for &p in iter {
                while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                    hull.pop();
                }
                hull.push(p);
            }
            hull.pop();
        }
        let q = (x[0], x[1]);
        if hull.len() == 2 {
            let (a, b) = (hull[0], hull[1]);
            return cross(a, b, q) == 0 && q.0.min(q.1) >= i64::MIN && (q.0 - a.0) * (q.0 - b.0) <= 0 && (q.1 - a.1) * (q.1 - b.1) <= 0;
        }
        (0..hull.len()).all(|i| cross(hull[i], hull[(i + 1) % hull.len()], q) >= 0)
    }

    #[test]
    fn conv_matches_geometric_hull() {
        for spec in ["A1", "A2", "B2", "G2", "A1xA1"] {
            let rs = RootSystem::new(spec).unwrap();
            for lam in Weight::box_weights(rs.rank(), 4) {
                let orbit = rs.weyl_orbit(&lam);
                let bound = orbit.iter().map(|p| p.radius()).max().unwrap();
                let geometric: BTreeSet<Weight> = Weight::box_weights(rs.rank(), bound)
                    .into_iter()
                    .filter(|mu| rs.in_root_lattice(&(mu - &lam)) && in_hull(&orbit, mu))
                    .collect();
                let lattice: BTreeSet<Weight> = rs.conv_set(&lam).into_iter().collect();
                assert_eq!(lattice, geometric, "{spec} {lam}");
            }
        }
    }
}
