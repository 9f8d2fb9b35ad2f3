//! Builders that turn one structure into another: opposites, duals, twists,
//! the derived sequence, coboundary structures, perturbation, and the passage
//! to Hom-Lie (co/bi)algebras.

use crate::error::{Error, Result};
use crate::linalg::{Bilinear, Comult, FinSpace, LinMap, Tensor2, Tensor3, Vector};
use crate::report::Report;
use crate::rmatrix::{
    a_invariance_witness, assoc_yb_tensor, balanceator_asymmetry, check_chybe,
    coboundary_witness, contract_pair, star_bracket, ContractionPattern,
};
use crate::structures::{
    alpha_tensor_delta, check_cobracket_is_ad_r, check_morphism, delta_tensor_alpha, is_fixed_by,
    EpsHomBialgebra, HomAlgebra, HomCoalgebra, HomLieAlgebra, HomLieBialgebra, HomLieCoalgebra,
    Structure, StructureMorphism,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OppositeVariant {
    /// `(A, −μ, Δ, α)`
    NegMu,
    /// `(A, μ, −Δ, α)`
    NegDelta,
    /// `(A, μ^{op}, Δ^{op}, α)`
    Op,
}

impl OppositeVariant {
    pub const ALL: [OppositeVariant; 3] = [Self::NegMu, Self::NegDelta, Self::Op];

    pub fn name(self) -> &'static str {
        match self {
            Self::NegMu => "neg-mu",
            Self::NegDelta => "neg-delta",
            Self::Op => "op",
        }
    }
}

pub fn opposite(b: &EpsHomBialgebra, variant: OppositeVariant) -> EpsHomBialgebra {
    let minus = -crate::linalg::rat(1);
    let (mu, delta) = match variant {
        OppositeVariant::NegMu => (b.mu().scale(&minus), b.delta().clone()),
        OppositeVariant::NegDelta => (b.mu().clone(), b.delta().scale(&minus)),
        OppositeVariant::Op => (b.mu().opposite(), b.delta().opposite()),
    };
    EpsHomBialgebra::from_parts(b.space().clone(), mu, delta, b.alpha().clone())
        .expect("shapes unchanged")
}

pub fn opposite_variants(b: &EpsHomBialgebra) -> [EpsHomBialgebra; 3] {
    OppositeVariant::ALL.map(|v| opposite(b, v))
}

fn dual_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(base) if !base.is_empty() => base.to_string(),
        _ => format!("{l}*"),
    }
}

/// `(A*, Δ*, μ*, α*)` in the dual basis. Labels gain a trailing `*` (or lose
/// one), so dualizing twice returns the original document.
pub fn dualize(b: &EpsHomBialgebra) -> EpsHomBialgebra {
    let n = b.dim();
    let space = FinSpace::new(b.space().labels().iter().map(|l| dual_label(l)))
        .expect("relabelling keeps labels distinct");
    let mut mu = Bilinear::zero(n);
    let mut delta = Comult::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                mu.set(i, j, k, b.delta().get(k, i, j).clone());
                delta.set(k, i, j, b.mu().get(i, j, k).clone());
            }
        }
    }
    EpsHomBialgebra::from_parts(space, mu, delta, b.alpha().transpose()).expect("shapes unchanged")
}

/// `(A, f∘μ, Δ∘f, f)` for an untwisted `b` and an endomorphism `f` of it.
///
/// `r` defaults to the one carried by `b`. When present it must be fixed by
/// `f⊗f` and `b` must be its coboundary; the result then carries it too.
pub fn twist_by_morphism(
    b: &EpsHomBialgebra,
    f: &LinMap,
    r: Option<&Tensor2>,
) -> Result<EpsHomBialgebra> {
    if !b.alpha().is_identity() {
        return Err(Error::AlphaNotIdentity);
    }
    f.check_dim("morphism", b.dim())?;
    let m = StructureMorphism::endo(Structure::Bialgebra(b.clone()), f.clone())?;
    let report = check_morphism(&m, None)?;
    if !report.passed() {
        return Err(Error::NotAMorphism(Box::new(report)));
    }
    let r = r.or(b.r()).cloned();
    if let Some(r) = &r {
        r.check_dim("r", b.dim())?;
        if !is_fixed_by(f, r) {
            return Err(Error::NotFixedByMorphism);
        }
        if let Some(witness) = coboundary_witness(b, r)? {
            return Err(Error::NotCoboundary { witness });
        }
    }
    EpsHomBialgebra::from_parts(
        b.space().clone(),
        b.mu().then(f),
        b.delta().precompose(f),
        f.clone(),
    )?
    .with_r(r)
}

/// `Aⁿ = (α^{2ⁿ−1}∘μ, Δ∘α^{2ⁿ−1}, α^{2ⁿ})`, carrying `r` unchanged.
pub fn derived(b: &EpsHomBialgebra, n: u32) -> Result<EpsHomBialgebra> {
    let power = 1u32
        .checked_shl(n)
        .filter(|_| n < 31)
        .ok_or_else(|| Error::Malformed(format!("derived level {n} is too large")))?;
    let a = b.alpha().pow(power - 1);
    EpsHomBialgebra::from_parts(
        b.space().clone(),
        b.mu().then(&a),
        b.delta().precompose(&a),
        b.alpha().pow(power),
    )?
    .with_r(b.r().cloned())
}

/// Output of [`coboundary_from_r`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coboundary {
    pub bialgebra: EpsHomBialgebra,
    /// `A(r) = 0`, recorded when the structure is built.
    pub quasi_triangular: bool,
}

/// `Δ = [−, r]_*`, accepted exactly when `A(r)` is A-invariant.
pub fn coboundary_from_r(a: &HomAlgebra, r: &Tensor2) -> Result<Coboundary> {
    r.check_dim("r", a.dim())?;
    if !is_fixed_by(a.alpha(), r) {
        return Err(Error::NotAlphaInvariant);
    }
    let ar = assoc_yb_tensor(a, r)?;
    if let Some(witness) = a_invariance_witness(a, &ar) {
        return Err(Error::NotAInvariant { witness });
    }
    let n = a.dim();
    let delta = Comult::from_fn(n, |k| {
        star_bracket(a, &Vector::unit(n, k), r).expect("dimensions checked")
    });
    let coalgebra = HomCoalgebra::new(a.space().clone(), delta, a.alpha().clone())?;
    Ok(Coboundary {
        bialgebra: EpsHomBialgebra::new(a.clone(), coalgebra)?.with_r(Some(r.clone()))?,
        quasi_triangular: ar.is_zero(),
    })
}

/// Verdict of the perturbation condition, with the perturbed structure when it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbationOutcome {
    pub result: Option<EpsHomBialgebra>,
    pub condition_holds: bool,
    pub witness: Option<usize>,
}

/// Both sides of the perturbation condition at a basis vector `a`:
/// `[a, (α⊗Δ)(r) − (Δ⊗α)(r) − A(r)]_•` and `r₂₃Δ(a)₁₃ + Δ(a)₁₃r₁₂`.
pub fn perturbation_sides(
    b: &EpsHomBialgebra,
    r: &Tensor2,
    a: usize,
) -> Result<(Tensor3, Tensor3)> {
    let alg = b.algebra();
    let n = b.dim();
    let inner = &(&alpha_tensor_delta(b.alpha(), b.delta(), r)
        - &delta_tensor_alpha(b.alpha(), b.delta(), r))
        - &assoc_yb_tensor(alg, r)?;
    let lhs = alg.bullet_bracket(&Vector::unit(n, a), &inner)?;
    let da = b.delta().image(a);
    let rhs = &contract_pair(alg, r, &da, ContractionPattern::P23Q13)?
        + &contract_pair(alg, &da, r, ContractionPattern::P13Q12)?;
    Ok((lhs, rhs))
}

/// Tests whether `Δ + [−, r]_*` is again a comultiplication for `(A, μ, α)`.
///
/// The perturbed structure is only built when the condition holds. It carries
/// `r₀ + r` if the input was the coboundary of `r₀`, or `r` if `Δ = 0`.
pub fn perturb(b: &EpsHomBialgebra, r: &Tensor2) -> Result<PerturbationOutcome> {
    r.check_dim("r", b.dim())?;
    if !is_fixed_by(b.alpha(), r) {
        return Err(Error::NotAlphaInvariant);
    }
    if r.is_zero() {
        return Ok(PerturbationOutcome {
            result: Some(b.clone()),
            condition_holds: true,
            witness: None,
        });
    }
    let n = b.dim();
    for a in 0..n {
        let (lhs, rhs) = perturbation_sides(b, r, a)?;
        if lhs != rhs {
            return Ok(PerturbationOutcome {
                result: None,
                condition_holds: false,
                witness: Some(a),
            });
        }
    }
    let alg = b.algebra();
    let star = Comult::from_fn(n, |k| {
        star_bracket(alg, &Vector::unit(n, k), r).expect("dimensions checked")
    });
    let new_r = match b.r() {
        Some(r0) if coboundary_witness(b, r0)?.is_none() => Some(r0 + r),
        None if b.delta().is_zero() => Some(r.clone()),
        _ => None,
    };
    let result = EpsHomBialgebra::from_parts(
        b.space().clone(),
        b.mu().clone(),
        b.delta().add(&star),
        b.alpha().clone(),
    )?
    .with_r(new_r)?;
    Ok(PerturbationOutcome {
        result: Some(result),
        condition_holds: true,
        witness: None,
    })
}

/// `[−,−] = μ ∘ (Id − τ)`
pub fn commutator_hom_lie(a: &HomAlgebra) -> HomLieAlgebra {
    HomLieAlgebra::new(a.space().clone(), a.mu().commutator(), a.alpha().clone())
        .expect("shapes unchanged")
}

/// `δ = (Id − τ) ∘ Δ`
pub fn cocommutator_hom_lie_coalgebra(c: &HomCoalgebra) -> HomLieCoalgebra {
    HomLieCoalgebra::new(c.space().clone(), c.delta().cocommutator(), c.alpha().clone())
        .expect("shapes unchanged")
}

/// Commutator bracket and cocommutator cobracket, accepted exactly when the
/// balanceator is symmetric.
pub fn to_hom_lie_bialgebra(b: &EpsHomBialgebra) -> Result<HomLieBialgebra> {
    if let Some((i, j)) = balanceator_asymmetry(b) {
        return Err(Error::AsymmetricBalanceator(i, j));
    }
    HomLieBialgebra::new(
        commutator_hom_lie(b.algebra()),
        cocommutator_hom_lie_coalgebra(&b.coalgebra()),
    )
}

/// The Hom-Lie bialgebra of a coboundary structure with anti-symmetric `r`,
/// with `δ = ad(r)` verified and, when `A(r) = 0`, the classical equation too
/// (so the result is quasi-triangular whenever the input is).
pub fn coboundary_hom_lie_from_r(b: &EpsHomBialgebra) -> Result<HomLieBialgebra> {
    let r = b.r().ok_or(Error::MissingR)?.clone();
    if !r.is_antisymmetric() {
        return Err(Error::NotAntisymmetric);
    }
    if !is_fixed_by(b.alpha(), &r) {
        return Err(Error::NotAlphaInvariant);
    }
    if let Some(witness) = coboundary_witness(b, &r)? {
        return Err(Error::NotCoboundary { witness });
    }
    let lie = match to_hom_lie_bialgebra(b) {
        Ok(l) => l,
        Err(Error::AsymmetricBalanceator(i, j)) => {
            return Err(Error::Inconsistent(format!(
                "coboundary structure with anti-symmetric r has asymmetric balanceator at ({i},{j})"
            )))
        }
        Err(e) => return Err(e),
    }
    .with_r(Some(r.clone()))?;
    let ad = check_cobracket_is_ad_r(&lie);
    if !ad.passed() {
        return Err(Error::Inconsistent(format!("cobracket differs from ad(r):\n{ad}")));
    }
    if assoc_yb_tensor(b.algebra(), &r)?.is_zero() {
        if !check_chybe(lie.lie(), &r)? {
            return Err(Error::Inconsistent(
                "A(r) = 0 with anti-symmetric r but C(r) != 0".into(),
            ));
        }
    }
    Ok(lie)
}

/// The report attached to a refused twist, if that is why it failed.
pub fn morphism_report(err: &Error) -> Option<&Report> {
    match err {
        Error::NotAMorphism(r) => Some(r),
        _ => None,
    }
}
