//! Small worked structures used by tests, the acceptance suite and the CLI
//! sample documents.
//!
//! * F1: dual numbers `k[x]/(x²)` with `Δ(x) = x⊗x`.
//! * F2: path ε-bialgebra of the Kronecker quiver (two arrows `v0 → v1`).
//! * F3: path ε-bialgebra of the quiver `v2 → v1 ← v3`.
//! * F4: `x² = 0 = xy`, `yx = x`, `y² = y`, twisted by `α(x) = ax`, `α(y) = cx + y`.
//! * F5: `k[x]/(x⁴)` with `Δ(xⁱ) = xⁱ⊗x² − 1⊗xⁱ⁺²`.
//! * F6: dual numbers as the coboundary of `r = 1⊗x`.

use crate::document::Document;
use crate::linalg::{rat, Bilinear, Comult, FinSpace, LinMap, Rational, Tensor2, Vector};
use crate::quiver::{parse_quiver, parse_quiver_morphism, path_bialgebra, Quiver, QuiverMorphism};
use crate::structures::{EpsHomBialgebra, HomAlgebra, Structure};

fn dual_numbers_algebra() -> (FinSpace, Bilinear) {
    let s = FinSpace::new(["1", "x"]).expect("valid labels");
    let mut mu = Bilinear::zero(2);
    mu.set(0, 0, 0, rat(1));
    mu.set(0, 1, 1, rat(1));
    mu.set(1, 0, 1, rat(1));
    (s, mu)
}

pub fn f1() -> EpsHomBialgebra {
    let (s, mu) = dual_numbers_algebra();
    let mut d = Comult::zero(2);
    d.set(1, 1, 1, rat(1));
    EpsHomBialgebra::from_parts(s, mu, d, LinMap::identity(2)).expect("valid shapes")
}

/// The two ε-bialgebra endomorphisms of F1: the identity and `c + dx ↦ c`.
pub fn f1_morphisms() -> Vec<(&'static str, LinMap)> {
    let scalar = LinMap::from_rows(vec![vec![rat(1), rat(0)], vec![rat(0), rat(0)]])
        .expect("square");
    vec![("id", LinMap::identity(2)), ("scalar", scalar)]
}

pub const KRONECKER: &str = "\
# Kronecker quiver
vertex v0
vertex v1
arrow phi1 : v0 -> v1
arrow phi2 : v0 -> v1
";

pub const TRIANGULAR: &str = "\
vertex v1
vertex v2
vertex v3
arrow phi1 : v2 -> v1
arrow phi2 : v3 -> v1
";

pub fn kronecker() -> Quiver {
    parse_quiver(KRONECKER).expect("valid quiver")
}

pub fn triangular() -> Quiver {
    parse_quiver(TRIANGULAR).expect("valid quiver")
}

/// `α_t`, `α_b`, `α_p` on the Kronecker quiver.
pub fn kronecker_morphisms() -> Vec<(&'static str, QuiverMorphism)> {
    let q = kronecker();
    let m = |arrows: &str| {
        let text = format!("vmap v0 -> v0\nvmap v1 -> v1\n{arrows}");
        parse_quiver_morphism(&text, &q, &q).expect("valid morphism")
    };
    vec![
        ("top", m("amap phi1 -> phi1\namap phi2 -> phi1\n")),
        ("bottom", m("amap phi1 -> phi2\namap phi2 -> phi2\n")),
        ("permute", m("amap phi1 -> phi2\namap phi2 -> phi1\n")),
    ]
}

/// The swap `v2 ↔ v3`, `φ1 ↔ φ2`.
pub fn triangular_swap() -> QuiverMorphism {
    let q = triangular();
    let text = "vmap v1 -> v1\nvmap v2 -> v3\nvmap v3 -> v2\namap phi1 -> phi2\namap phi2 -> phi1\n";
    parse_quiver_morphism(text, &q, &q).expect("valid morphism")
}

pub fn f2() -> EpsHomBialgebra {
    path_bialgebra(&kronecker()).expect("acyclic")
}

pub fn f3() -> EpsHomBialgebra {
    path_bialgebra(&triangular()).expect("acyclic")
}

/// `α(x) = ax`, `α(y) = cx + y`
pub fn f4_alpha(a: &Rational, c: &Rational) -> LinMap {
    LinMap::from_rows(vec![vec![a.clone(), c.clone()], vec![rat(0), rat(1)]]).expect("square")
}

/// The untwisted associative algebra `x² = 0 = xy`, `yx = x`, `y² = y`.
pub fn f4_base() -> HomAlgebra {
    let s = FinSpace::new(["x", "y"]).expect("valid labels");
    let mut mu = Bilinear::zero(2);
    mu.set(1, 0, 0, rat(1));
    mu.set(1, 1, 1, rat(1));
    HomAlgebra::new(s, mu, LinMap::identity(2)).expect("valid shapes")
}

/// `(A, α∘μ, α)` for the F4 twisting map.
pub fn f4_algebra(a: &Rational, c: &Rational) -> HomAlgebra {
    let base = f4_base();
    let alpha = f4_alpha(a, c);
    HomAlgebra::new(base.space().clone(), base.mu().then(&alpha), alpha).expect("valid shapes")
}

/// `y⊗x − x⊗y`
pub fn f4_r() -> Tensor2 {
    &Tensor2::basis(2, [1, 0]) - &Tensor2::basis(2, [0, 1])
}

/// The coboundary structure of `f4_r()` on `f4_algebra(1, c)`, written out:
/// `Δ(x) = x⊗x`, `Δ(y) = c·x⊗x + y⊗x`.
pub fn f4_coboundary(c: &Rational) -> EpsHomBialgebra {
    let alg = f4_algebra(&rat(1), c);
    let mut d = Comult::zero(2);
    d.set(0, 0, 0, rat(1));
    d.set(1, 0, 0, c.clone());
    d.set(1, 1, 0, rat(1));
    EpsHomBialgebra::from_parts(alg.space().clone(), alg.mu().clone(), d, alg.alpha().clone())
        .and_then(|b| b.with_r(Some(f4_r())))
        .expect("valid shapes")
}

fn truncated(n: usize) -> (FinSpace, Bilinear) {
    let labels: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let s = FinSpace::new(labels).expect("valid labels");
    let mu = Bilinear::from_fn(n, |i, j| {
        if i + j < n {
            Vector::unit(n, i + j)
        } else {
            Vector::zeros(n)
        }
    });
    (s, mu)
}

pub fn f5() -> EpsHomBialgebra {
    let (s, mu) = truncated(4);
    let mut d = Comult::zero(4);
    for i in 0..4 {
        d.set(i, i, 2, rat(1));
        if i + 2 < 4 {
            let c = d.get(i, 0, i + 2) - rat(1);
            d.set(i, 0, i + 2, c);
        }
    }
    EpsHomBialgebra::from_parts(s, mu, d, LinMap::identity(4)).expect("valid shapes")
}

/// The unit-preserving algebra endomorphism of `k[x]/(x⁴)` with `x ↦ p(x)`.
pub fn f5_algebra_map(p: [Rational; 4]) -> LinMap {
    let (_, mu) = truncated(4);
    let px = Vector::from_vec(p.to_vec());
    let mut cols = vec![Vector::unit(4, 0)];
    for k in 1..4 {
        let next = mu.apply(&cols[k - 1], &px);
        cols.push(next);
    }
    LinMap::from_columns(4, &cols).expect("square")
}

/// `x ↦ sign·x + a₃x³`
pub fn f5_morphism(sign: i64, a3: &Rational) -> LinMap {
    f5_algebra_map([rat(0), rat(sign), rat(0), a3.clone()])
}

pub fn f6() -> EpsHomBialgebra {
    let (s, mu) = dual_numbers_algebra();
    let mut d = Comult::zero(2);
    d.set(1, 1, 1, rat(1));
    EpsHomBialgebra::from_parts(s, mu, d, LinMap::identity(2))
        .and_then(|b| b.with_r(Some(Tensor2::basis(2, [0, 1]))))
        .expect("valid shapes")
}

/// The six fixtures as ε-Hom-bialgebras (F4 as its coboundary structure with `c = 1/2`).
pub fn bialgebra_fixtures() -> Vec<(&'static str, EpsHomBialgebra)> {
    vec![
        ("F1", f1()),
        ("F2", f2()),
        ("F3", f3()),
        ("F4", f4_coboundary(&crate::linalg::ratio(1, 2))),
        ("F5", f5()),
        ("F6", f6()),
    ]
}

/// Sample documents shipped with the CLI.
pub fn documents() -> Vec<(&'static str, Document)> {
    let doc = |name: &str, b: EpsHomBialgebra| Document::new(name, Structure::Bialgebra(b));
    vec![
        ("f1-dual-numbers", doc("dual numbers", f1())),
        ("f2-kronecker", doc("Kronecker path bialgebra", f2())),
        ("f3-triangular", doc("lower-triangular path bialgebra", f3())),
        ("f4-coboundary", doc("two-dimensional coboundary", f4_coboundary(&crate::linalg::ratio(1, 2)))),
        ("f5-truncated", doc("truncated polynomials k[x]/(x^4)", f5())),
        ("f6-square-zero", doc("unital square-zero", f6())),
        (
            "f4-algebra",
            Document::new(
                "two-dimensional algebra, a = 1, c = 1/2",
                Structure::Algebra(f4_algebra(&rat(1), &crate::linalg::ratio(1, 2))),
            ),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{check_eps_hom_bialgebra, check_hom_algebra};

    #[test]
    fn fixtures_are_valid() {
        for (name, b) in bialgebra_fixtures() {
            let r = check_eps_hom_bialgebra(&b);
            assert!(r.passed(), "{name}:\n{r}");
        }
    }

    #[test]
    fn f4_twists_are_hom_associative() {
        for a in [0, 1, 2] {
            for c in [-3, 0, 1] {
                assert!(check_hom_algebra(&f4_algebra(&rat(a), &rat(c))).passed());
            }
        }
    }

    #[test]
    fn f5_coproduct_values() {
        let b = f5();
        // Δ(x) = x⊗x² − 1⊗x³, Δ(x²) = x²⊗x²
        let mut dx = Tensor2::zeros(4);
        dx.set([1, 2], rat(1));
        dx.set([0, 3], rat(-1));
        assert_eq!(b.delta().image(1), dx);
        assert_eq!(b.delta().image(2), Tensor2::basis(4, [2, 2]));
        assert!(b.delta().image(0).is_zero());
    }
}
