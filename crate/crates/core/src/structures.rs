//! Hom-structures given by structure constants, and their axiom checks.
//!
//! Constructors validate shapes only; every semantic axiom is an explicit
//! `check_*` call returning a [`Report`]. Axioms are evaluated on basis tuples,
//! which suffices because every identity involved is multilinear.

use crate::error::{Error, Result};
use crate::linalg::{
    apply_map_tensor, permute2, permute3, Bilinear, Comult, FinSpace, LinMap, Perm3,
    Tensor, Tensor2, Tensor3, Vector,
};
use crate::report::{first_failure, tuples, Report};

fn check_alpha(space: &FinSpace, alpha: &LinMap) -> Result<()> {
    alpha.check_dim("alpha", space.dim())
}

/// `(μ, α)` on a finite space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    space: FinSpace,
    mu: Bilinear,
    alpha: LinMap,
}

impl HomAlgebra {
    pub fn new(space: FinSpace, mu: Bilinear, alpha: LinMap) -> Result<Self> {
        mu.check_dim("mu", space.dim())?;
        check_alpha(&space, &alpha)?;
        Ok(Self { space, mu, alpha })
    }

    pub fn space(&self) -> &FinSpace {
        &self.space
    }
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    pub fn mu(&self) -> &Bilinear {
        &self.mu
    }
    pub fn alpha(&self) -> &LinMap {
        &self.alpha
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.mu.apply(x, y)
    }

    /// Matrix of `b ↦ μ(v, b)`.
    pub fn left_mult(&self, v: &Vector) -> LinMap {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|i| self.mul(v, &Vector::unit(n, i))).collect();
        LinMap::from_columns(n, &cols).expect("square by construction")
    }

    /// Matrix of `b ↦ μ(b, v)`.
    pub fn right_mult(&self, v: &Vector) -> LinMap {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|i| self.mul(&Vector::unit(n, i), v)).collect();
        LinMap::from_columns(n, &cols).expect("square by construction")
    }

    /// `a • (b₁⊗…⊗bₙ) = μ(α(a), b₁) ⊗ α(b₂) ⊗ … ⊗ α(bₙ)`
    pub fn bullet_left<const R: usize>(&self, a: &Vector, t: &Tensor<R>) -> Tensor<R> {
        let l = self.left_mult(&self.alpha.apply(a));
        let maps: [&LinMap; R] = std::array::from_fn(|k| if k == 0 { &l } else { &self.alpha });
        apply_map_tensor(maps, t).expect("operands share the space")
    }

    /// `(b₁⊗…⊗bₙ) • a = α(b₁) ⊗ … ⊗ α(bₙ₋₁) ⊗ μ(bₙ, α(a))`
    pub fn bullet_right<const R: usize>(&self, t: &Tensor<R>, a: &Vector) -> Tensor<R> {
        let rm = self.right_mult(&self.alpha.apply(a));
        let maps: [&LinMap; R] =
            std::array::from_fn(|k| if k + 1 == R { &rm } else { &self.alpha });
        apply_map_tensor(maps, t).expect("operands share the space")
    }

    /// `[a, t]_• = a • t − t • a`
    pub fn bullet_bracket<const R: usize>(&self, a: &Vector, t: &Tensor<R>) -> Result<Tensor<R>> {
        a.check_dim("vector", self.dim())?;
        t.check_dim("tensor", self.dim())?;
        Ok(&self.bullet_left(a, t) - &self.bullet_right(t, a))
    }
}

/// `(Δ, α)` on a finite space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebra {
    space: FinSpace,
    delta: Comult,
    alpha: LinMap,
}

impl HomCoalgebra {
    pub fn new(space: FinSpace, delta: Comult, alpha: LinMap) -> Result<Self> {
        delta.check_dim("delta", space.dim())?;
        check_alpha(&space, &alpha)?;
        Ok(Self {
            space,
            delta,
            alpha,
        })
    }

    pub fn space(&self) -> &FinSpace {
        &self.space
    }
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    pub fn delta(&self) -> &Comult {
        &self.delta
    }
    pub fn alpha(&self) -> &LinMap {
        &self.alpha
    }
}

/// An infinitesimal Hom-bialgebra, optionally carrying the 2-tensor `r` it was
/// built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsHomBialgebra {
    algebra: HomAlgebra,
    delta: Comult,
    r: Option<Tensor2>,
}

impl EpsHomBialgebra {
    pub fn new(algebra: HomAlgebra, coalgebra: HomCoalgebra) -> Result<Self> {
        if algebra.space != coalgebra.space {
            return Err(Error::Malformed(
                "algebra and coalgebra live on different spaces".into(),
            ));
        }
        if algebra.alpha != coalgebra.alpha {
            return Err(Error::AlphaMismatch);
        }
        Ok(Self {
            algebra,
            delta: coalgebra.delta,
            r: None,
        })
    }

    pub fn from_parts(space: FinSpace, mu: Bilinear, delta: Comult, alpha: LinMap) -> Result<Self> {
        delta.check_dim("delta", space.dim())?;
        Ok(Self {
            algebra: HomAlgebra::new(space, mu, alpha)?,
            delta,
            r: None,
        })
    }

    pub fn with_r(mut self, r: Option<Tensor2>) -> Result<Self> {
        if let Some(t) = &r {
            t.check_dim("r", self.dim())?;
        }
        self.r = r;
        Ok(self)
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }
    pub fn coalgebra(&self) -> HomCoalgebra {
        HomCoalgebra {
            space: self.algebra.space.clone(),
            delta: self.delta.clone(),
            alpha: self.algebra.alpha.clone(),
        }
    }
    pub fn space(&self) -> &FinSpace {
        &self.algebra.space
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
    pub fn mu(&self) -> &Bilinear {
        &self.algebra.mu
    }
    pub fn delta(&self) -> &Comult {
        &self.delta
    }
    pub fn alpha(&self) -> &LinMap {
        &self.algebra.alpha
    }
    pub fn r(&self) -> Option<&Tensor2> {
        self.r.as_ref()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieAlgebra {
    space: FinSpace,
    bracket: Bilinear,
    alpha: LinMap,
}

impl HomLieAlgebra {
    pub fn new(space: FinSpace, bracket: Bilinear, alpha: LinMap) -> Result<Self> {
        bracket.check_dim("bracket", space.dim())?;
        check_alpha(&space, &alpha)?;
        Ok(Self {
            space,
            bracket,
            alpha,
        })
    }

    pub fn space(&self) -> &FinSpace {
        &self.space
    }
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    pub fn bracket(&self) -> &Bilinear {
        &self.bracket
    }
    pub fn alpha(&self) -> &LinMap {
        &self.alpha
    }

    pub fn br(&self, x: &Vector, y: &Vector) -> Vector {
        self.bracket.apply(x, y)
    }

    /// `ad_x` on `V^{⊗R}`: the bracket with `x` acts on one factor while `α`
    /// acts on all the others, summed over factors.
    pub fn ad<const R: usize>(&self, x: &Vector, t: &Tensor<R>) -> Tensor<R> {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|i| self.br(x, &Vector::unit(n, i))).collect();
        let adx = LinMap::from_columns(n, &cols).expect("square by construction");
        let mut out = Tensor::<R>::zeros(n);
        for slot in 0..R {
            let maps: [&LinMap; R] =
                std::array::from_fn(|k| if k == slot { &adx } else { &self.alpha });
            out = &out + &apply_map_tensor(maps, t).expect("operands share the space");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieCoalgebra {
    space: FinSpace,
    cobracket: Comult,
    alpha: LinMap,
}

impl HomLieCoalgebra {
    pub fn new(space: FinSpace, cobracket: Comult, alpha: LinMap) -> Result<Self> {
        cobracket.check_dim("cobracket", space.dim())?;
        check_alpha(&space, &alpha)?;
        Ok(Self {
            space,
            cobracket,
            alpha,
        })
    }

    pub fn space(&self) -> &FinSpace {
        &self.space
    }
    pub fn cobracket(&self) -> &Comult {
        &self.cobracket
    }
    pub fn alpha(&self) -> &LinMap {
        &self.alpha
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieBialgebra {
    lie: HomLieAlgebra,
    cobracket: Comult,
    r: Option<Tensor2>,
}

impl HomLieBialgebra {
    pub fn new(lie: HomLieAlgebra, colie: HomLieCoalgebra) -> Result<Self> {
        if lie.space != colie.space {
            return Err(Error::Malformed(
                "bracket and cobracket live on different spaces".into(),
            ));
        }
        if lie.alpha != colie.alpha {
            return Err(Error::AlphaMismatch);
        }
        Ok(Self {
            lie,
            cobracket: colie.cobracket,
            r: None,
        })
    }

    pub fn from_parts(
        space: FinSpace,
        bracket: Bilinear,
        cobracket: Comult,
        alpha: LinMap,
    ) -> Result<Self> {
        cobracket.check_dim("cobracket", space.dim())?;
        Ok(Self {
            lie: HomLieAlgebra::new(space, bracket, alpha)?,
            cobracket,
            r: None,
        })
    }

    pub fn with_r(mut self, r: Option<Tensor2>) -> Result<Self> {
        if let Some(t) = &r {
            t.check_dim("r", self.lie.dim())?;
        }
        self.r = r;
        Ok(self)
    }

    pub fn lie(&self) -> &HomLieAlgebra {
        &self.lie
    }
    pub fn colie(&self) -> HomLieCoalgebra {
        HomLieCoalgebra {
            space: self.lie.space.clone(),
            cobracket: self.cobracket.clone(),
            alpha: self.lie.alpha.clone(),
        }
    }
    pub fn space(&self) -> &FinSpace {
        &self.lie.space
    }
    pub fn bracket(&self) -> &Bilinear {
        &self.lie.bracket
    }
    pub fn cobracket(&self) -> &Comult {
        &self.cobracket
    }
    pub fn alpha(&self) -> &LinMap {
        &self.lie.alpha
    }
    pub fn r(&self) -> Option<&Tensor2> {
        self.r.as_ref()
    }
}

/// Any of the six structure kinds, as read from or written to a document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Algebra(HomAlgebra),
    Coalgebra(HomCoalgebra),
    Bialgebra(EpsHomBialgebra),
    LieAlgebra(HomLieAlgebra),
    LieCoalgebra(HomLieCoalgebra),
    LieBialgebra(HomLieBialgebra),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Algebra(_) => "hom_algebra",
            Structure::Coalgebra(_) => "hom_coalgebra",
            Structure::Bialgebra(_) => "eps_hom_bialgebra",
            Structure::LieAlgebra(_) => "hom_lie_algebra",
            Structure::LieCoalgebra(_) => "hom_lie_coalgebra",
            Structure::LieBialgebra(_) => "hom_lie_bialgebra",
        }
    }

    pub fn space(&self) -> &FinSpace {
        match self {
            Structure::Algebra(s) => s.space(),
            Structure::Coalgebra(s) => s.space(),
            Structure::Bialgebra(s) => s.space(),
            Structure::LieAlgebra(s) => s.space(),
            Structure::LieCoalgebra(s) => s.space(),
            Structure::LieBialgebra(s) => s.space(),
        }
    }

    pub fn alpha(&self) -> &LinMap {
        match self {
            Structure::Algebra(s) => s.alpha(),
            Structure::Coalgebra(s) => s.alpha(),
            Structure::Bialgebra(s) => s.alpha(),
            Structure::LieAlgebra(s) => s.alpha(),
            Structure::LieCoalgebra(s) => s.alpha(),
            Structure::LieBialgebra(s) => s.alpha(),
        }
    }

    /// The multiplication or bracket, if this kind has one.
    pub fn product(&self) -> Option<&Bilinear> {
        match self {
            Structure::Algebra(s) => Some(s.mu()),
            Structure::Bialgebra(s) => Some(s.mu()),
            Structure::LieAlgebra(s) => Some(s.bracket()),
            Structure::LieBialgebra(s) => Some(s.bracket()),
            _ => None,
        }
    }

    /// The comultiplication or cobracket, if this kind has one.
    pub fn coproduct(&self) -> Option<&Comult> {
        match self {
            Structure::Coalgebra(s) => Some(s.delta()),
            Structure::Bialgebra(s) => Some(s.delta()),
            Structure::LieCoalgebra(s) => Some(s.cobracket()),
            Structure::LieBialgebra(s) => Some(s.cobracket()),
            _ => None,
        }
    }

    pub fn r(&self) -> Option<&Tensor2> {
        match self {
            Structure::Bialgebra(s) => s.r(),
            Structure::LieBialgebra(s) => s.r(),
            _ => None,
        }
    }
}

// ---------------------------------------------------------------------------
// Checks

fn unit(n: usize, i: usize) -> Vector {
    Vector::unit(n, i)
}

fn check_multiplicativity(report: &mut Report, mu: &Bilinear, alpha: &LinMap) {
    let n = mu.dim();
    report.push(
        "multiplicativity",
        first_failure(tuples(n, 2), |t| {
            (
                alpha.apply(&mu.product_vec(t[0], t[1])),
                mu.apply(&alpha.column(t[0]), &alpha.column(t[1])),
            )
        }),
    );
}

fn check_comultiplicativity(report: &mut Report, delta: &Comult, alpha: &LinMap) {
    let n = delta.dim();
    report.push(
        "comultiplicativity",
        first_failure(tuples(n, 1), |t| {
            (
                apply_map_tensor([alpha, alpha], &delta.image(t[0])).expect("same space"),
                delta.apply(&alpha.column(t[0])),
            )
        }),
    );
}

/// `μ(α(a), bc) = μ(ab, α(c))` on all basis triples, plus multiplicativity.
pub fn check_hom_algebra(a: &HomAlgebra) -> Report {
    let mut report = Report::new();
    check_multiplicativity(&mut report, &a.mu, &a.alpha);
    let (mu, alpha) = (&a.mu, &a.alpha);
    report.push(
        "hom_associativity",
        first_failure(tuples(a.dim(), 3), |t| {
            (
                mu.apply(&alpha.column(t[0]), &mu.product_vec(t[1], t[2])),
                mu.apply(&mu.product_vec(t[0], t[1]), &alpha.column(t[2])),
            )
        }),
    );
    report
}

/// `(α ⊗ Δ)(t)` for a 2-tensor `t`.
pub fn alpha_tensor_delta(alpha: &LinMap, delta: &Comult, t: &Tensor2) -> Tensor3 {
    let n = delta.dim();
    let mut out = Tensor3::zeros(n);
    let at = apply_map_tensor([alpha, &LinMap::identity(n)], t).expect("same space");
    for ([i, j], c) in at.nonzero() {
        for ([b, d], e) in delta.image(j).nonzero() {
            out.add_at([i, b, d], &(c * e));
        }
    }
    out
}

/// `(Δ ⊗ α)(t)` for a 2-tensor `t`.
pub fn delta_tensor_alpha(alpha: &LinMap, delta: &Comult, t: &Tensor2) -> Tensor3 {
    let n = delta.dim();
    let mut out = Tensor3::zeros(n);
    let ta = apply_map_tensor([&LinMap::identity(n), alpha], t).expect("same space");
    for ([i, j], c) in ta.nonzero() {
        for ([a, b], e) in delta.image(i).nonzero() {
            out.add_at([a, b, j], &(c * e));
        }
    }
    out
}

/// Comultiplicativity and `(α ⊗ Δ)Δ = (Δ ⊗ α)Δ` on every basis vector.
pub fn check_hom_coalgebra(c: &HomCoalgebra) -> Report {
    let mut report = Report::new();
    check_comultiplicativity(&mut report, &c.delta, &c.alpha);
    report.push(
        "hom_coassociativity",
        first_failure(tuples(c.dim(), 1), |t| {
            let d = c.delta.image(t[0]);
            (
                alpha_tensor_delta(&c.alpha, &c.delta, &d),
                delta_tensor_alpha(&c.alpha, &c.delta, &d),
            )
        }),
    );
    report
}

/// `Δ(ab) = a • Δ(b) + Δ(a) • b` on all basis pairs.
pub fn check_cocycle(b: &EpsHomBialgebra) -> Report {
    let mut report = Report::new();
    let a = b.algebra();
    let n = b.dim();
    report.push(
        "cocycle",
        first_failure(tuples(n, 2), |t| {
            let (x, y) = (unit(n, t[0]), unit(n, t[1]));
            let lhs = b.delta.apply(&a.mul(&x, &y));
            let rhs = &a.bullet_left(&x, &b.delta.image(t[1]))
                + &a.bullet_right(&b.delta.image(t[0]), &y);
            (lhs, rhs)
        }),
    );
    report
}

/// Algebra, coalgebra and cocycle checks together.
pub fn check_eps_hom_bialgebra(b: &EpsHomBialgebra) -> Report {
    let mut report = check_hom_algebra(b.algebra());
    report.extend(check_hom_coalgebra(&b.coalgebra()));
    report.extend(check_cocycle(b));
    report
}

/// Anti-symmetry (diagonal included), multiplicativity and Hom-Jacobi.
pub fn check_hom_lie(l: &HomLieAlgebra) -> Report {
    let mut report = Report::new();
    let n = l.dim();
    let br = &l.bracket;
    report.push(
        "antisymmetry",
        first_failure(tuples(n, 2), |t| {
            (br.product_vec(t[0], t[1]), -&br.product_vec(t[1], t[0]))
        }),
    );
    check_multiplicativity(&mut report, br, &l.alpha);
    report.push(
        "hom_jacobi",
        first_failure(tuples(n, 3), |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let term = |p: usize, q: usize, s: usize| {
                br.apply(&br.product_vec(p, q), &l.alpha.column(s))
            };
            (&(&term(x, y, z) + &term(z, x, y)) + &term(y, z, x), Vector::zeros(n))
        }),
    );
    report
}

/// `τδ = −δ`, comultiplicativity and `(Id + σ + σ²)(α ⊗ δ)δ = 0`.
pub fn check_hom_lie_coalgebra(c: &HomLieCoalgebra) -> Report {
    let mut report = Report::new();
    let n = c.space.dim();
    let d = &c.cobracket;
    report.push(
        "antisymmetry",
        first_failure(tuples(n, 1), |t| {
            let img = d.image(t[0]);
            (permute2(&img), -&img)
        }),
    );
    check_comultiplicativity(&mut report, d, &c.alpha);
    report.push(
        "hom_cojacobi",
        first_failure(tuples(n, 1), |t| {
            let x = alpha_tensor_delta(&c.alpha, d, &d.image(t[0]));
            let sum = &(&x + &permute3(&x, Perm3::Sigma)) + &permute3(&x, Perm3::SigmaSquared);
            (sum, Tensor3::zeros(n))
        }),
    );
    report
}

/// `δ([x,y]) = ad_{α(x)} δ(y) − ad_{α(y)} δ(x)` on all basis pairs.
pub fn check_compatibility(l: &HomLieBialgebra) -> Report {
    let mut report = Report::new();
    let lie = &l.lie;
    let n = lie.dim();
    let d = &l.cobracket;
    report.push(
        "compatibility",
        first_failure(tuples(n, 2), |t| {
            let lhs = d.apply(&lie.bracket.product_vec(t[0], t[1]));
            let rhs = &lie.ad(&lie.alpha.column(t[0]), &d.image(t[1]))
                - &lie.ad(&lie.alpha.column(t[1]), &d.image(t[0]));
            (lhs, rhs)
        }),
    );
    report
}

/// `δ(x) = ad_x(r)` on every basis vector; skipped when `r` is absent.
pub fn check_cobracket_is_ad_r(l: &HomLieBialgebra) -> Report {
    let mut report = Report::new();
    match &l.r {
        None => report.skip("cobracket_is_ad_r"),
        Some(r) => {
            let n = l.lie.dim();
            report.push(
                "cobracket_is_ad_r",
                first_failure(tuples(n, 1), |t| {
                    (l.cobracket.image(t[0]), l.lie.ad(&unit(n, t[0]), r))
                }),
            );
        }
    }
    report
}

/// Every Hom-Lie bialgebra axiom, plus `δ = ad(r)` when `r` is attached.
pub fn check_hom_lie_bialgebra(l: &HomLieBialgebra) -> Report {
    let mut report = check_hom_lie(&l.lie);
    report.extend(check_hom_lie_coalgebra(&l.colie()));
    report.extend(check_compatibility(l));
    if l.r.is_some() {
        report.extend(check_cobracket_is_ad_r(l));
    }
    report
}

/// The full declared-kind suite, without `r`-dependent identity checks.
pub fn check_structure(s: &Structure) -> Report {
    match s {
        Structure::Algebra(a) => check_hom_algebra(a),
        Structure::Coalgebra(c) => check_hom_coalgebra(c),
        Structure::Bialgebra(b) => check_eps_hom_bialgebra(b),
        Structure::LieAlgebra(l) => check_hom_lie(l),
        Structure::LieCoalgebra(c) => check_hom_lie_coalgebra(c),
        Structure::LieBialgebra(l) => check_hom_lie_bialgebra(l),
    }
}

/// A linear map between two structures of the same kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureMorphism {
    source: Structure,
    target: Structure,
    map: LinMap,
}

impl StructureMorphism {
    pub fn new(source: Structure, target: Structure, map: LinMap) -> Result<Self> {
        if source.kind() != target.kind() {
            return Err(Error::KindMismatch(format!(
                "{} -> {}",
                source.kind(),
                target.kind()
            )));
        }
        if map.cols() != source.space().dim() || map.rows() != target.space().dim() {
            return Err(Error::DimensionMismatch {
                operand: "morphism",
                expected: source.space().dim() * target.space().dim(),
                found: map.rows() * map.cols(),
            });
        }
        Ok(Self {
            source,
            target,
            map,
        })
    }

    /// An endomorphism of `s`.
    pub fn endo(s: Structure, map: LinMap) -> Result<Self> {
        Self::new(s.clone(), s, map)
    }

    pub fn source(&self) -> &Structure {
        &self.source
    }
    pub fn target(&self) -> &Structure {
        &self.target
    }
    pub fn map(&self) -> &LinMap {
        &self.map
    }
}

/// Checks `f∘α = α∘f`, `f∘μ = μ∘f^{⊗2}` and `Δ∘f = f^{⊗2}∘Δ`.
///
/// With `generators`, the coproduct condition is checked on the listed basis
/// vectors only. That shortcut is sound for untwisted infinitesimal
/// bialgebras, so it is refused for any other input.
pub fn check_morphism(m: &StructureMorphism, generators: Option<&[usize]>) -> Result<Report> {
    let f = &m.map;
    let (src, dst) = (&m.source, &m.target);
    let n = src.space().dim();
    if let Some(gens) = generators {
        if !matches!(src, Structure::Bialgebra(_)) {
            return Err(Error::KindMismatch(format!(
                "generator-based check needs eps_hom_bialgebra, got {}",
                src.kind()
            )));
        }
        if !src.alpha().is_identity() || !dst.alpha().is_identity() {
            return Err(Error::GeneratorsNeedUntwisted);
        }
        if let Some(&g) = gens.iter().find(|&&g| g >= n) {
            return Err(Error::GeneratorOutOfRange(g));
        }
    }

    let mut report = Report::new();
    report.push(
        "commutes_with_alpha",
        first_failure(tuples(n, 1), |t| {
            (
                f.apply(&src.alpha().column(t[0])),
                dst.alpha().apply(&f.column(t[0])),
            )
        }),
    );
    if let (Some(mu), Some(mu2)) = (src.product(), dst.product()) {
        report.push(
            "commutes_with_mu",
            first_failure(tuples(n, 2), |t| {
                (
                    f.apply(&mu.product_vec(t[0], t[1])),
                    mu2.apply(&f.column(t[0]), &f.column(t[1])),
                )
            }),
        );
    }
    if let (Some(d), Some(d2)) = (src.coproduct(), dst.coproduct()) {
        let basis: Vec<Vec<usize>> = match generators {
            Some(gens) => {
                let mut g = gens.to_vec();
                g.sort_unstable();
                g.dedup();
                g.into_iter().map(|i| vec![i]).collect()
            }
            None => tuples(n, 1).collect(),
        };
        report.push(
            "commutes_with_delta",
            first_failure(basis, |t| {
                (
                    d2.apply(&f.column(t[0])),
                    apply_map_tensor([f, f], &d.image(t[0])).expect("shape checked"),
                )
            }),
        );
    }
    Ok(report)
}

/// `α ⊗ α` fixes `r`.
pub fn is_fixed_by(f: &LinMap, r: &Tensor2) -> bool {
    apply_map_tensor([f, f], r).map(|t| t == *r).unwrap_or(false)
}
