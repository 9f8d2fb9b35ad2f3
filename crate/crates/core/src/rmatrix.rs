//! Two-tensor machinery: star and bullet brackets, the contraction patterns
//! behind `A(r)`, the associative and classical Yang–Baxter tensors, the
//! balanceator, and the λ/ρ maps of a coboundary structure.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{
    apply_map_tensor, permute2, Bilinear, LinMap, Rational, Tensor, Tensor2, Tensor3, Vector,
};
use crate::report::{first_failure, tuples, Report};
use crate::structures::{
    check_cobracket_is_ad_r, is_fixed_by, EpsHomBialgebra, HomAlgebra, HomLieAlgebra,
    HomLieBialgebra,
};

/// A 2-tensor with its symmetry and α-invariance flags, always recomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RTensor {
    value: Tensor2,
    symmetric: bool,
    antisymmetric: bool,
    alpha_invariant: bool,
}

impl RTensor {
    pub fn new(alpha: &LinMap, value: Tensor2) -> Result<Self> {
        let fixed = apply_map_tensor([alpha, alpha], &value)?;
        Ok(Self {
            symmetric: value.is_symmetric(),
            antisymmetric: value.is_antisymmetric(),
            alpha_invariant: fixed == value,
            value,
        })
    }

    pub fn value(&self) -> &Tensor2 {
        &self.value
    }
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }
    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetric
    }
    pub fn is_alpha_invariant(&self) -> bool {
        self.alpha_invariant
    }
}

/// `[a, r]_* = Σ μ(a, uᵢ) ⊗ α(vᵢ) − α(uᵢ) ⊗ μ(vᵢ, a)`
pub fn star_bracket(a_alg: &HomAlgebra, a: &Vector, r: &Tensor2) -> Result<Tensor2> {
    a.check_dim("vector", a_alg.dim())?;
    r.check_dim("r", a_alg.dim())?;
    let alpha = a_alg.alpha();
    let left = apply_map_tensor([&a_alg.left_mult(a), alpha], r)?;
    let right = apply_map_tensor([alpha, &a_alg.right_mult(a)], r)?;
    Ok(&left - &right)
}

/// `[a, t]_• = a • t − t • a` for tensors of any rank.
pub fn bullet_bracket<const R: usize>(
    a_alg: &HomAlgebra,
    a: &Vector,
    t: &Tensor<R>,
) -> Result<Tensor<R>> {
    a_alg.bullet_bracket(a, t)
}

/// Placement patterns for products of two 2-tensors `p = Σ p_u ⊗ p_v` and
/// `q = Σ q_u ⊗ q_v` inside the tensor cube.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContractionPattern {
    /// `Σ μ(p_u, q_u) ⊗ α(q_v) ⊗ α(p_v)`
    P13Q12,
    /// `Σ α(p_u) ⊗ μ(p_v, q_u) ⊗ α(q_v)`
    P12Q23,
    /// `Σ α(q_u) ⊗ α(p_u) ⊗ μ(p_v, q_v)`
    P23Q13,
}

fn contract_with(
    mu: &Bilinear,
    alpha: &LinMap,
    p: &Tensor2,
    q: &Tensor2,
    pat: ContractionPattern,
) -> Tensor3 {
    let n = mu.dim();
    let id = LinMap::identity(n);
    let left = |t: &Tensor2| apply_map_tensor([alpha, &id], t).expect("same space");
    let right = |t: &Tensor2| apply_map_tensor([&id, alpha], t).expect("same space");
    let mut out = Tensor3::zeros(n);
    let mut emit = |slot: usize, x: usize, y: usize, others: [usize; 2], c: Rational| {
        for (k, m) in mu.product(x, y).iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            let idx = match slot {
                0 => [k, others[0], others[1]],
                1 => [others[0], k, others[1]],
                _ => [others[0], others[1], k],
            };
            out.add_at(idx, &(&c * m));
        }
    };
    match pat {
        ContractionPattern::P13Q12 => {
            let (p, q) = (right(p), right(q));
            for ([pu, pv], a) in p.nonzero() {
                for ([qu, qv], b) in q.nonzero() {
                    emit(0, pu, qu, [qv, pv], a * b);
                }
            }
        }
        ContractionPattern::P12Q23 => {
            let (p, q) = (left(p), right(q));
            for ([pu, pv], a) in p.nonzero() {
                for ([qu, qv], b) in q.nonzero() {
                    emit(1, pv, qu, [pu, qv], a * b);
                }
            }
        }
        ContractionPattern::P23Q13 => {
            let (p, q) = (left(p), left(q));
            for ([pu, pv], a) in p.nonzero() {
                for ([qu, qv], b) in q.nonzero() {
                    emit(2, pv, qv, [qu, pu], a * b);
                }
            }
        }
    }
    out
}

pub fn contract_pair(
    a_alg: &HomAlgebra,
    p: &Tensor2,
    q: &Tensor2,
    pat: ContractionPattern,
) -> Result<Tensor3> {
    p.check_dim("p", a_alg.dim())?;
    q.check_dim("q", a_alg.dim())?;
    Ok(contract_with(a_alg.mu(), a_alg.alpha(), p, q, pat))
}

fn yb_with(mu: &Bilinear, alpha: &LinMap, r: &Tensor2) -> Tensor3 {
    use ContractionPattern::*;
    let a = contract_with(mu, alpha, r, r, P13Q12);
    let b = contract_with(mu, alpha, r, r, P12Q23);
    let c = contract_with(mu, alpha, r, r, P23Q13);
    &(&a - &b) + &c
}

/// `A(r) = r₁₃r₁₂ − r₁₂r₂₃ + r₂₃r₁₃`
pub fn assoc_yb_tensor(a_alg: &HomAlgebra, r: &Tensor2) -> Result<Tensor3> {
    r.check_dim("r", a_alg.dim())?;
    Ok(yb_with(a_alg.mu(), a_alg.alpha(), r))
}

/// `A(r)′ = Σ μ(uⱼ,uᵢ)⊗α(vⱼ)⊗α(vᵢ) − α(uᵢ)⊗μ(uⱼ,vᵢ)⊗α(vⱼ) + α(uᵢ)⊗α(uⱼ)⊗μ(vᵢ,vⱼ)`
///
/// Term by term this is `A(r)` evaluated with the opposite multiplication.
pub fn assoc_yb_tensor_prime(a_alg: &HomAlgebra, r: &Tensor2) -> Result<Tensor3> {
    r.check_dim("r", a_alg.dim())?;
    Ok(yb_with(&a_alg.mu().opposite(), a_alg.alpha(), r))
}

/// `C(r) = [r₁₂,r₁₃] + [r₁₂,r₂₃] + [r₁₃,r₂₃]`, i.e.
/// `Σ [uᵢ,uⱼ]⊗α(vᵢ)⊗α(vⱼ) + α(uᵢ)⊗[vᵢ,uⱼ]⊗α(vⱼ) + α(uᵢ)⊗α(uⱼ)⊗[vᵢ,vⱼ]`.
pub fn classical_yb_tensor(l: &HomLieAlgebra, r: &Tensor2) -> Result<Tensor3> {
    let n = l.dim();
    r.check_dim("r", n)?;
    let br = l.bracket();
    let id = LinMap::identity(n);
    let ar = apply_map_tensor([l.alpha(), &id], r)?;
    let ra = apply_map_tensor([&id, l.alpha()], r)?;
    let mut out = Tensor3::zeros(n);
    let mut emit = |slot: usize, x: usize, y: usize, others: [usize; 2], c: Rational| {
        for (k, m) in br.product(x, y).iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            let idx = match slot {
                0 => [k, others[0], others[1]],
                1 => [others[0], k, others[1]],
                _ => [others[0], others[1], k],
            };
            out.add_at(idx, &(&c * m));
        }
    };
    for ([ui, vi], a) in ra.nonzero() {
        for ([uj, vj], b) in ra.nonzero() {
            emit(0, ui, uj, [vi, vj], a * b);
        }
    }
    for ([ui, vi], a) in ar.nonzero() {
        for ([uj, vj], b) in ra.nonzero() {
            emit(1, vi, uj, [ui, vj], a * b);
        }
    }
    for ([ui, vi], a) in ar.nonzero() {
        for ([uj, vj], b) in ar.nonzero() {
            emit(2, vi, vj, [ui, uj], a * b);
        }
    }
    Ok(out)
}

/// First basis index `i` with `[eᵢ, t]_• ≠ 0`, or `None` when `t` is A-invariant.
pub fn a_invariance_witness(a_alg: &HomAlgebra, t: &Tensor3) -> Option<usize> {
    let n = a_alg.dim();
    (0..n).find(|&i| !a_alg.bullet_bracket(&Vector::unit(n, i), t).expect("same space").is_zero())
}

pub fn is_a_invariant(a_alg: &HomAlgebra, t: &Tensor3) -> bool {
    a_invariance_witness(a_alg, t).is_none()
}

pub fn check_ahybe(a_alg: &HomAlgebra, r: &Tensor2) -> Result<bool> {
    Ok(assoc_yb_tensor(a_alg, r)?.is_zero())
}

pub fn check_chybe(l: &HomLieAlgebra, r: &Tensor2) -> Result<bool> {
    Ok(classical_yb_tensor(l, r)?.is_zero())
}

/// `r` is attached, `δ = ad(r)`, and `C(r) = 0`.
pub fn is_quasi_triangular_lie(l: &HomLieBialgebra) -> bool {
    let Some(r) = l.r() else {
        return false;
    };
    check_cobracket_is_ad_r(l).passed() && check_chybe(l.lie(), r).unwrap_or(false)
}

/// `r` is attached, α-invariant, `Δ = [−, r]_*`, and `A(r) = 0`.
pub fn is_quasi_triangular(b: &EpsHomBialgebra) -> bool {
    let Some(r) = b.r() else {
        return false;
    };
    is_fixed_by(b.alpha(), r)
        && matches!(coboundary_witness(b, r), Ok(None))
        && check_ahybe(b.algebra(), r).unwrap_or(false)
}

/// `B(x,y) = [x, Δ^{op}(y)]_• + τ([y, Δ^{op}(x)]_•)`
pub fn balanceator(b: &EpsHomBialgebra, x: &Vector, y: &Vector) -> Result<Tensor2> {
    let a = b.algebra();
    let dop = b.delta().opposite();
    let first = a.bullet_bracket(x, &dop.apply(y))?;
    let second = a.bullet_bracket(y, &dop.apply(x))?;
    Ok(&first + &permute2(&second))
}

/// `table[i][j] = B(eᵢ, eⱼ)`
pub fn balanceator_table(b: &EpsHomBialgebra) -> Vec<Vec<Tensor2>> {
    let n = b.dim();
    let a = b.algebra();
    let dop = b.delta().opposite();
    let brackets: Vec<Vec<Tensor2>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| a.bullet_bracket(&Vector::unit(n, i), &dop.image(j)).expect("same space"))
                .collect()
        })
        .collect();
    (0..n)
        .map(|i| (0..n).map(|j| &brackets[i][j] + &permute2(&brackets[j][i])).collect())
        .collect()
}

/// First basis pair with `B(eᵢ,eⱼ) ≠ B(eⱼ,eᵢ)`.
pub fn balanceator_asymmetry(b: &EpsHomBialgebra) -> Option<(usize, usize)> {
    let table = balanceator_table(b);
    let n = b.dim();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| table[i][j] != table[j][i])
}

pub fn is_balanceator_symmetric(b: &EpsHomBialgebra) -> bool {
    balanceator_asymmetry(b).is_none()
}

/// `δ([x,y]) − ad_{α(x)} δ(y) + ad_{α(y)} δ(x)` for the commutator bracket and
/// cocommutator cobracket of `b`.
pub fn homliebi_defect(b: &EpsHomBialgebra, x: &Vector, y: &Vector) -> Result<Tensor2> {
    x.check_dim("x", b.dim())?;
    y.check_dim("y", b.dim())?;
    let lie = HomLieAlgebra::new(b.space().clone(), b.mu().commutator(), b.alpha().clone())?;
    let delta = b.delta().cocommutator();
    let alpha = b.alpha();
    let lhs = delta.apply(&lie.br(x, y));
    let ad_x = lie.ad(&alpha.apply(x), &delta.apply(y));
    let ad_y = lie.ad(&alpha.apply(y), &delta.apply(x));
    Ok(&(&lhs - &ad_x) + &ad_y)
}

/// Matrices of the four maps `A* → A` induced by `r`, in dual-basis/basis
/// coordinates: column `k` is the image of the dual basis vector `e_k*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaRho {
    /// `φ ↦ ⟨φ, α(uᵢ)⟩ vᵢ`
    pub lambda1: LinMap,
    /// `φ ↦ ⟨φ, uᵢ⟩ α(vᵢ)`
    pub lambda2: LinMap,
    /// `φ ↦ uᵢ ⟨φ, α(vᵢ)⟩`
    pub rho1: LinMap,
    /// `φ ↦ α(uᵢ) ⟨φ, vᵢ⟩`
    pub rho2: LinMap,
}

fn matrix_of(t: &Tensor2, transpose: bool) -> LinMap {
    let n = t.dim();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if transpose { t.get([j, i]) } else { t.get([i, j]) }.clone())
                .collect()
        })
        .collect();
    LinMap::from_rows(rows).expect("square")
}

pub fn lambda_rho_maps(b: &EpsHomBialgebra) -> Result<LambdaRho> {
    let r = b.r().ok_or(Error::MissingR)?;
    let n = b.dim();
    let id = LinMap::identity(n);
    let ar = apply_map_tensor([b.alpha(), &id], r)?;
    let ra = apply_map_tensor([&id, b.alpha()], r)?;
    Ok(LambdaRho {
        lambda1: matrix_of(&ar, true),
        lambda2: matrix_of(&ra, true),
        rho1: matrix_of(&ra, false),
        rho2: matrix_of(&ar, false),
    })
}

/// First basis vector on which `Δ ≠ [−, r]_*`.
pub fn coboundary_witness(b: &EpsHomBialgebra, r: &Tensor2) -> Result<Option<usize>> {
    let n = b.dim();
    for k in 0..n {
        if star_bracket(b.algebra(), &Vector::unit(n, k), r)? != b.delta().image(k) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

pub const QT_STATEMENTS: [&str; 7] = [
    "qt1: A(r) = 0",
    "qt2: (α⊗Δ)(r) = r13 r12",
    "qt3: (Δ⊗α)(r) = -r23 r13",
    "qt4: λ2 Δ* = -μop λ1⊗λ1",
    "qt5: ρ2 Δ* = μop ρ1⊗ρ1",
    "qt6: Δ λ1 = λ2⊗λ2 μ*op",
    "qt7: -Δ ρ1 = ρ2⊗ρ2 μ*op",
];

/// Statement (2) alone; defined for any `r`.
pub fn qt_alpha_delta(b: &EpsHomBialgebra, r: &Tensor2) -> (Tensor3, Tensor3) {
    (
        crate::structures::alpha_tensor_delta(b.alpha(), b.delta(), r),
        contract_with(b.mu(), b.alpha(), r, r, ContractionPattern::P13Q12),
    )
}

/// Statement (3) alone; defined for any `r`.
pub fn qt_delta_alpha(b: &EpsHomBialgebra, r: &Tensor2) -> (Tensor3, Tensor3) {
    (
        crate::structures::delta_tensor_alpha(b.alpha(), b.delta(), r),
        -&contract_with(b.mu(), b.alpha(), r, r, ContractionPattern::P23Q13),
    )
}

/// Evaluates all seven quasi-triangularity statements of a coboundary
/// structure without short-circuiting.
pub fn quasi_triangular_equivalences(b: &EpsHomBialgebra) -> Result<Report> {
    let r = b.r().ok_or(Error::MissingR)?;
    if let Some(witness) = coboundary_witness(b, r)? {
        return Err(Error::NotCoboundary { witness });
    }
    let n = b.dim();
    let mu = b.mu();
    let delta = b.delta();
    let maps = lambda_rho_maps(b)?;
    let once = || std::iter::once(Vec::new());
    let mut report = Report::new();

    let ar = assoc_yb_tensor(b.algebra(), r)?;
    report.push(QT_STATEMENTS[0], first_failure(once(), |_| (ar.clone(), Tensor3::zeros(n))));
    report.push(QT_STATEMENTS[1], first_failure(once(), |_| qt_alpha_delta(b, r)));
    report.push(QT_STATEMENTS[2], first_failure(once(), |_| qt_delta_alpha(b, r)));

    // Δ*(eᵢ* ⊗ eⱼ*) = Σ_k Δ(e_k)[i,j] e_k*
    let delta_dual = |i: usize, j: usize| {
        Vector::from_vec((0..n).map(|k| delta.get(k, i, j).clone()).collect())
    };
    report.push(
        QT_STATEMENTS[3],
        first_failure(tuples(n, 2), |t| {
            let lhs = maps.lambda2.apply(&delta_dual(t[0], t[1]));
            let rhs = -&mu.apply(&maps.lambda1.column(t[1]), &maps.lambda1.column(t[0]));
            (lhs, rhs)
        }),
    );
    report.push(
        QT_STATEMENTS[4],
        first_failure(tuples(n, 2), |t| {
            let lhs = maps.rho2.apply(&delta_dual(t[0], t[1]));
            let rhs = mu.apply(&maps.rho1.column(t[1]), &maps.rho1.column(t[0]));
            (lhs, rhs)
        }),
    );

    // μ^{*op}(e_k*) = Σ_{i,j} μ(eᵢ,eⱼ)[k] eⱼ* ⊗ eᵢ*
    let pushed = |f: &LinMap, k: usize| {
        let mut out = Tensor2::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let c = mu.get(i, j, k);
                if !c.is_zero() {
                    out.axpy(c, &Tensor2::outer(&f.column(j), &f.column(i)));
                }
            }
        }
        out
    };
    report.push(
        QT_STATEMENTS[5],
        first_failure(tuples(n, 1), |t| {
            (delta.apply(&maps.lambda1.column(t[0])), pushed(&maps.lambda2, t[0]))
        }),
    );
    report.push(
        QT_STATEMENTS[6],
        first_failure(tuples(n, 1), |t| {
            (-&delta.apply(&maps.rho1.column(t[0])), pushed(&maps.rho2, t[0]))
        }),
    );
    Ok(report)
}
