//! Verification suites run by `exotic verify`.

use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::affweyl::SimpleReflectionId;
use crate::charring::{Basis, CharacterMultiset};
use crate::error::Error;
use crate::exotic_k::{BsOrder, KClass};
use crate::laurent::LaurentPoly;
use crate::report::Report;
use crate::rootdata::Weight;
use crate::tiltmult::TiltMult;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Bernstein,
    Module,
    Order,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "bernstein" => Ok(Suite::Bernstein),
            "module" => Ok(Suite::Module),
            "order" => Ok(Suite::Order),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite `{s}`"))),
        }
    }
}

pub fn run(tm: &TiltMult, suite: Suite, radius: i64, seed: u64) -> Vec<Report> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Bernstein | Suite::All) {
        let h = tm.kmodule().hecke();
        out.push(h.verify_relations());
        out.push(h.verify_bernstein(radius));
        out.push(h.verify_t_translation_conjugation(radius));
    }
    if matches!(suite, Suite::Order | Suite::All) {
        out.push(lengths(tm, radius));
        out.push(order(tm, radius));
    }
    if matches!(suite, Suite::Module | Suite::All) {
        out.push(module_relations(tm, radius, seed));
        out.push(anchors(tm, radius));
        out.push(positivity(tm, seed));
        out.push(reconciliation(tm, radius.min(2)));
    }
    out
}

/// `ℓ(w_λ) = ℓ(t_λ) - δ(λ)`, minimality of `w_λ`, W-invariance of `ℓ(t_λ)`,
/// reduced-word round trips and the exchange condition.
pub fn lengths(tm: &TiltMult, radius: i64) -> Report {
    let g = tm.kmodule().group();
    let rs = g.root_system();
    let mut r = Report::new(format!("lengths {} radius {radius}", rs.spec()));
    for lambda in Weight::box_weights(rs.rank(), radius) {
        let (w, delta) = g.w_lambda(&lambda);
        let t = g.translation(&lambda);
        r.check(w.length() + delta == t.length(), || format!("ℓ(w_λ) != ℓ(t_λ) - δ(λ) at {lambda}"));
        r.check(!g.has_finite_left_descent(&w), || format!("w_λ has a finite left descent at {lambda}"));
        for mu in rs.weyl_orbit(&lambda) {
            r.check(g.translation(&mu).length() == t.length(), || format!("ℓ(t_{mu}) != ℓ(t_{lambda})"));
        }
        let rw = g.reduced_word(&t);
        r.check(g.from_word(rw.omega, &rw.word) == t && rw.word.len() == t.length() as usize, || {
            format!("reduced word of t_{lambda} does not round-trip")
        });
        for (_, s) in g.generators() {
            let ts = g.mul(&t, s);
            r.check(ts.length().abs_diff(t.length()) == 1, || format!("exchange fails at t_{lambda}"));
        }
    }
    r
}

/// The order `≤` on X against dominance on `X⁺` and on W-orbits, and
/// incomparability across cosets of `ZΦ`.
pub fn order(tm: &TiltMult, radius: i64) -> Report {
    let g = tm.kmodule().group();
    let rs = g.root_system();
    let mut r = Report::new(format!("order {} radius {radius}", rs.spec()));
    let dominant = Weight::dominant_box(rs.rank(), radius);
    for a in &dominant {
        for b in &dominant {
            let same = g.order_leq_weights(a, b) == rs.dominance_leq(a, b);
            r.check(same, || format!("order and dominance differ on X⁺ at ({a}, {b})"));
        }
    }
    for lambda in &dominant {
        let orbit = rs.weyl_orbit(lambda);
        for a in &orbit {
            for b in &orbit {
                let same = g.order_leq_weights(a, b) == rs.dominance_leq(a, b);
                r.check(same, || format!("order and dominance differ on W{lambda} at ({a}, {b})"));
            }
        }
    }
    let all = Weight::box_weights(rs.rank(), radius.min(2));
    for a in &all {
        for b in &all {
            if !rs.in_root_lattice(&(a - b)) {
                let inc = !g.order_leq_weights(a, b) && !g.order_leq_weights(b, a);
                r.check(inc, || format!("{a} and {b} lie in different cosets but are comparable"));
            }
        }
    }
    r
}

/// Quadratic relation and module axioms for the action on `m_λ`.
pub fn module_relations(tm: &TiltMult, radius: i64, seed: u64) -> Report {
    let km = tm.kmodule();
    let g = km.group();
    let h = km.hecke();
    let rs = g.root_system();
    let mut r = Report::new(format!("module {} radius {radius} seed {seed}", rs.spec()));
    let n = g.generators().len();
    for lambda in Weight::box_weights(rs.rank(), radius) {
        let c = KClass::basis(lambda.clone());
        for s in 0..n {
            let a = km.act_simple(&c, s).add(&c.scale(&LaurentPoly::v()));
            let b = km.act_simple(&a, s).sub(&a.scale(&LaurentPoly::v_inv()));
            r.check(b.is_zero(), || format!("(T_s - v^-1)(T_s + v) does not kill m{lambda} (generator {s})"));
        }
    }
    if let Ok(weyl) = rs.weyl_group() {
        for x in weyl {
            let c = km.act_hecke(&km.unit(), &h.basis(&g.finite(x)));
            let expected = km.unit().scale(&LaurentPoly::monomial(1, -(x.length() as i32)));
            r.check(c == expected, || "m_0 T_w != v^-ℓ(w) m_0".to_string());
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..25 {
        let random = |rng: &mut StdRng| {
            let base = g.omega_element(rng.gen_range(0..g.omega_order())).clone();
            let x = (0..rng.gen_range(0..5)).fold(base, |a, _| g.mul(&a, &g.generators()[rng.gen_range(0..n)].1));
            h.basis(&x).add(&h.one().scale(&LaurentPoly::monomial(rng.gen_range(-2..=2), rng.gen_range(-2..=2))))
        };
        let (xi, eta) = (random(&mut rng), random(&mut rng));
        let lambda = Weight::new(&(0..rs.rank()).map(|_| rng.gen_range(-radius..=radius)).collect::<Vec<_>>());
        let c = KClass::basis(lambda.clone());
        let lhs = km.act_hecke(&c, &h.mul(&xi, &eta));
        let rhs = km.act_hecke(&km.act_hecke(&c, &xi), &eta);
        r.check(lhs == rhs, || format!("m{lambda}(ξη) != (m{lambda}ξ)η"));
    }
    r
}

/// Line bundles on dominant/antidominant weights, triangularity of `Δ`, and
/// the action of inverse finite generators on normalized costandard classes.
pub fn anchors(tm: &TiltMult, radius: i64) -> Report {
    let km = tm.kmodule();
    let g = km.group();
    let rs = g.root_system();
    let mut r = Report::new(format!("anchors {} radius {radius}", rs.spec()));
    let nabla0 = |l: &Weight| KClass::basis(l.clone()).scale(&LaurentPoly::monomial(1, rs.delta(l) as i32));
    for lambda in Weight::box_weights(rs.rank(), radius) {
        let line = km.act_word(&km.unit(), &km.hecke().theta_word(&lambda));
        let delta = km.delta_class(&lambda);
        if rs.is_dominant(&lambda) {
            r.check(line == KClass::basis(lambda.clone()), || format!("[O({lambda})] != m{lambda}"));
        }
        if rs.is_dominant(&-&lambda) {
            let shifted = delta.scale(&LaurentPoly::monomial(1, rs.delta(&lambda) as i32));
            r.check(line == shifted, || format!("[O({lambda})] != v^δ [Δ^{lambda}]"));
        }
        r.check(delta.coeff(&lambda).is_one(), || format!("[Δ^{lambda}] has non-unit diagonal"));
        for mu in delta.support() {
            r.check(g.order_leq_weights(mu, &lambda), || format!("[Δ^{lambda}] has m{mu} with {mu} !≤ {lambda}"));
        }
        for i in 0..rs.rank() {
            let s = g.generator_index(SimpleReflectionId::Finite(i)).unwrap();
            let lhs = km.act_simple_inv(&nabla0(&lambda), s);
            if lambda[i] == 0 {
                r.check(lhs == nabla0(&lambda).scale(&LaurentPoly::v()), || format!("∇_0^{lambda} T_s{}^-1", i + 1));
            } else if lambda[i] > 0 {
                let sl = rs.reflect_simple(&lambda, i);
                r.check(lhs == nabla0(&sl).scale(&LaurentPoly::v_inv()), || format!("∇_0^{lambda} T_s{}^-1", i + 1));
            }
        }
    }
    r
}

/// Coefficient positivity of random Bott–Samelson classes, and of their
/// tensor products with characteristic-zero tilting characters.
pub fn positivity(tm: &TiltMult, seed: u64) -> Report {
    let km = tm.kmodule();
    let g = km.group();
    let rs = g.root_system();
    let mut r = Report::new(format!("positivity {} seed {seed}", rs.spec()));
    let mut rng = StdRng::seed_from_u64(seed);
    let n = g.generators().len();
    for i in 0..100 {
        let omega = rng.gen_range(0..g.omega_order());
        let seq: Vec<usize> = (0..rng.gen_range(0..=6)).map(|_| rng.gen_range(0..n)).collect();
        let c = km.bott_samelson_class(omega, &seq, BsOrder::default());
        r.check(c.is_nonnegative(), || format!("BS class ({omega}, {seq:?}) = {c}"));
        if i % 10 == 0 {
            let nu = Weight::new(&(0..rs.rank()).map(|_| rng.gen_range(0..=1)).collect::<Vec<_>>());
            let Ok(weights) = tm.ring().full_weights(&CharacterMultiset::single(Basis::Weyl, nu.clone())) else {
                continue;
            };
            let t = km.tensor_class(&weights, &c);
            r.check(t.is_nonnegative(), || format!("M({nu}) ⊗ BS class ({omega}, {seq:?}) = {t}"));
        }
    }
    r
}

/// `reconcile` for `N(ν)` over a dominant box.
pub fn reconciliation(tm: &TiltMult, radius: i64) -> Report {
    let rs = tm.ring().root_system();
    let mut r = Report::new(format!("reconcile {} radius {radius}", rs.spec()));
    for nu in Weight::dominant_box(rs.rank(), radius) {
        match tm.reconcile(&CharacterMultiset::single(Basis::Good, nu.clone())) {
            Ok(rep) => r.check(rep.passed(), || format!("N({nu}): first mismatch {:?}", rep.first_mismatch())),
            Err(e) => r.check(false, || format!("N({nu}): {e}")),
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_in_a1() {
        let tm = TiltMult::from_spec("A1").unwrap();
        for rep in run(&tm, Suite::All, 3, 1) {
            assert!(rep.passed(), "{rep}");
            assert!(rep.checked > 0);
        }
    }

    #[test]
    fn all_suites_pass_small_rank_two() {
        for spec in ["A2", "B2", "A1xA1"] {
            let tm = TiltMult::from_spec(spec).unwrap();
            for rep in run(&tm, Suite::All, 1, 5) {
                assert!(rep.passed(), "{rep}");
            }
        }
    }

    #[test]
    fn suite_names() {
        assert_eq!("order".parse::<Suite>().unwrap(), Suite::Order);
        assert!("everything".parse::<Suite>().is_err());
    }
}
