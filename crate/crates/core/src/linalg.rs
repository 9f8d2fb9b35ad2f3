//! Exact rational linear algebra over small dense spaces.
//!
//! Every container here uses one fixed row-major layout:
//!
//! * a tensor of rank `R` over an `n`-dimensional space stores the coordinate
//!   of `e_{i_1} ⊗ … ⊗ e_{i_R}` at `((i_1·n + i_2)·n + …)·n + i_R`;
//! * a [`LinMap`] stores the coefficient of `e_row` in `f(e_col)` at
//!   `row·n + col`, so column `j` is the image of basis vector `j`;
//! * a [`Bilinear`] map `μ` stores the coefficient of `e_k` in `μ(e_i, e_j)` at
//!   `(i·n + j)·n + k`;
//! * a [`Comult`] `Δ` stores the coefficient of `e_i ⊗ e_j` in `Δ(e_k)` at
//!   `(k·n + i)·n + j`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"`. Zero denominators are rejected; the result is reduced.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(text.to_string());
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A finite-dimensional space with labelled basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinSpace {
    labels: Vec<String>,
}

impl FinSpace {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidBasis("basis must be non-empty".into()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() {
                return Err(Error::InvalidBasis("empty basis label".into()));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidBasis(format!("duplicate label {l:?}")));
            }
        }
        Ok(Self { labels })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

fn check_dim(operand: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            operand,
            expected,
            found,
        })
    }
}

/// Dense coordinates of an element of `V^{⊗R}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor<const R: usize> {
    dim: usize,
    coords: Vec<Rational>,
}

pub type Vector = Tensor<1>;
pub type Tensor2 = Tensor<2>;
pub type Tensor3 = Tensor<3>;

impl<const R: usize> Tensor<R> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            coords: vec![Rational::zero(); dim.pow(R as u32)],
        }
    }

    pub fn from_coords(dim: usize, coords: Vec<Rational>) -> Result<Self> {
        check_dim("tensor coordinates", dim.pow(R as u32), coords.len())?;
        Ok(Self { dim, coords })
    }

    pub fn basis(dim: usize, idx: [usize; R]) -> Self {
        let mut t = Self::zeros(dim);
        t.coords[Self::flat(dim, idx)] = Rational::one();
        t
    }

    pub fn flat(dim: usize, idx: [usize; R]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * dim + i)
    }

    pub fn unflat(dim: usize, mut pos: usize) -> [usize; R] {
        let mut idx = [0; R];
        for slot in idx.iter_mut().rev() {
            *slot = pos % dim;
            pos /= dim;
        }
        idx
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn get(&self, idx: [usize; R]) -> &Rational {
        &self.coords[Self::flat(self.dim, idx)]
    }

    pub fn set(&mut self, idx: [usize; R], value: Rational) {
        let p = Self::flat(self.dim, idx);
        self.coords[p] = value;
    }

    pub fn add_at(&mut self, idx: [usize; R], value: &Rational) {
        let p = Self::flat(self.dim, idx);
        self.coords[p] += value;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = ([usize; R], &Rational)> + '_ {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(p, c)| (Self::unflat(self.dim, p), c))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            dim: self.dim,
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// `self += s · other`
    pub fn axpy(&mut self, s: &Rational, other: &Self) {
        debug_assert_eq!(self.dim, other.dim);
        if s.is_zero() {
            return;
        }
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            if !b.is_zero() {
                *a += s * b;
            }
        }
    }

    pub fn check_dim(&self, operand: &'static str, dim: usize) -> Result<()> {
        check_dim(operand, dim, self.dim)
    }

    /// First coordinate where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, Rational, Rational)> {
        self.coords
            .iter()
            .zip(&other.coords)
            .position(|(a, b)| a != b)
            .map(|p| (p, self.coords[p].clone(), other.coords[p].clone()))
    }
}

impl<const R: usize> Add for &Tensor<R> {
    type Output = Tensor<R>;
    fn add(self, rhs: Self) -> Tensor<R> {
        assert_eq!(self.dim, rhs.dim, "tensor dimension mismatch");
        Tensor {
            dim: self.dim,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<const R: usize> Sub for &Tensor<R> {
    type Output = Tensor<R>;
    fn sub(self, rhs: Self) -> Tensor<R> {
        assert_eq!(self.dim, rhs.dim, "tensor dimension mismatch");
        Tensor {
            dim: self.dim,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<const R: usize> Neg for &Tensor<R> {
    type Output = Tensor<R>;
    fn neg(self) -> Tensor<R> {
        Tensor {
            dim: self.dim,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl<const R: usize> Add for Tensor<R> {
    type Output = Tensor<R>;
    fn add(self, rhs: Self) -> Tensor<R> {
        &self + &rhs
    }
}

impl<const R: usize> Sub for Tensor<R> {
    type Output = Tensor<R>;
    fn sub(self, rhs: Self) -> Tensor<R> {
        &self - &rhs
    }
}

impl<const R: usize> Neg for Tensor<R> {
    type Output = Tensor<R>;
    fn neg(self) -> Tensor<R> {
        -&self
    }
}

impl Vector {
    pub fn from_vec(coords: Vec<Rational>) -> Self {
        Self {
            dim: coords.len(),
            coords,
        }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        Self::basis(dim, [i])
    }
}

impl Tensor2 {
    pub fn outer(u: &Vector, v: &Vector) -> Self {
        assert_eq!(u.dim, v.dim, "tensor dimension mismatch");
        let mut t = Self::zeros(u.dim);
        for ([i], a) in u.nonzero() {
            for ([j], b) in v.nonzero() {
                t.add_at([i, j], &(a * b));
            }
        }
        t
    }

    /// The twist `τ(a ⊗ b) = b ⊗ a`.
    pub fn flip(&self) -> Self {
        permute2(self)
    }

    pub fn is_symmetric(&self) -> bool {
        self.flip() == *self
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.flip() == -self
    }
}

impl Tensor3 {
    pub fn outer3(u: &Vector, v: &Vector, w: &Vector) -> Self {
        let mut t = Self::zeros(u.dim);
        for ([i], a) in u.nonzero() {
            for ([j], b) in v.nonzero() {
                let ab = a * b;
                for ([k], c) in w.nonzero() {
                    t.add_at([i, j, k], &(&ab * c));
                }
            }
        }
        t
    }
}

/// Matrix of a linear map; column `j` is the image of `e_j`.
///
/// Twisting maps are square. Morphisms between structures on different spaces
/// use the rectangular form (`rows` = target dimension, `cols` = source dimension).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinMap {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl LinMap {
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Rational::one();
        }
        m
    }

    pub fn zero(dim: usize) -> Self {
        Self::zero_rect(dim, dim)
    }

    pub fn zero_rect(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    /// Builds a map from row-major `rows[row][col]`.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            check_dim("matrix row", ncols, row.len())?;
            entries.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    /// Builds a map from the images of the basis vectors.
    pub fn from_columns(target_dim: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Self::zero_rect(target_dim, columns.len());
        for (j, col) in columns.iter().enumerate() {
            col.check_dim("matrix column", target_dim)?;
            for (i, c) in col.coords().iter().enumerate() {
                m.entries[i * m.cols + j] = c.clone();
            }
        }
        Ok(m)
    }

    /// Dimension of a square map (the source dimension in general).
    pub fn dim(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.cols + col]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.cols.max(1)).map(<[_]>::to_vec).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::from_vec((0..self.rows).map(|i| self.entry(i, j).clone()).collect())
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.cols, "map/vector dimension mismatch");
        let mut out = Vector::zeros(self.rows);
        for ([j], c) in v.nonzero() {
            for i in 0..self.rows {
                let m = self.entry(i, j);
                if !m.is_zero() {
                    out.coords[i] += m * c;
                }
            }
        }
        out
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.cols, other.rows, "map dimension mismatch");
        let mut out = LinMap::zero_rect(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.entry(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> LinMap {
        assert!(self.is_square(), "power of a non-square map");
        let mut acc = LinMap::identity(self.cols);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base);
            }
        }
        acc
    }

    pub fn transpose(&self) -> LinMap {
        let mut out = LinMap::zero_rect(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.entry(i, j).clone();
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == LinMap::identity(self.cols)
    }

    pub fn scale(&self, s: &Rational) -> LinMap {
        LinMap {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// Fails unless the map is square of dimension `dim`.
    pub fn check_dim(&self, operand: &'static str, dim: usize) -> Result<()> {
        check_dim(operand, dim, self.rows)?;
        check_dim(operand, dim, self.cols)
    }
}

/// Applies `f_1 ⊗ … ⊗ f_R` to `t`, one tensor factor at a time.
///
/// All maps must share one shape with source dimension `t.dim()`; the result
/// lives over the common target dimension.
pub fn apply_map_tensor<const R: usize>(maps: [&LinMap; R], t: &Tensor<R>) -> Result<Tensor<R>> {
    let rows = maps.first().map_or(t.dim(), |m| m.rows());
    for m in maps {
        check_dim("map", t.dim(), m.cols())?;
        check_dim("map", rows, m.rows())?;
    }
    // Sparse accumulation keeps intermediate indices valid while the factors
    // live in spaces of different dimension.
    let mut cur: BTreeMap<[usize; R], Rational> =
        t.nonzero().map(|(idx, c)| (idx, c.clone())).collect();
    for (axis, m) in maps.iter().enumerate() {
        if m.is_identity() {
            continue;
        }
        let mut next: BTreeMap<[usize; R], Rational> = BTreeMap::new();
        for (idx, c) in &cur {
            for i in 0..rows {
                let a = m.entry(i, idx[axis]);
                if a.is_zero() {
                    continue;
                }
                let mut target = *idx;
                target[axis] = i;
                *next.entry(target).or_insert_with(Rational::zero) += a * c;
            }
        }
        cur = next;
    }
    let mut out = Tensor::<R>::zeros(rows);
    for (idx, c) in cur {
        out.set(idx, c);
    }
    Ok(out)
}

/// Slice form of [`apply_map_tensor`] for callers holding a runtime list of maps.
pub fn apply_map_list<const R: usize>(maps: &[&LinMap], t: &Tensor<R>) -> Result<Tensor<R>> {
    let arr: [&LinMap; R] = maps.try_into().map_err(|_| Error::MapCount {
        rank: R,
        given: maps.len(),
    })?;
    apply_map_tensor(arr, t)
}

/// `τ`: swaps the two tensor factors.
pub fn permute2(t: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::zeros(t.dim());
    for ([i, j], c) in t.nonzero() {
        out.set([j, i], c.clone());
    }
    out
}

/// Permutations of three tensor factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Perm3 {
    /// `σ(a ⊗ b ⊗ c) = c ⊗ a ⊗ b`
    Sigma,
    /// `σ²(a ⊗ b ⊗ c) = b ⊗ c ⊗ a`
    SigmaSquared,
    /// `π(a ⊗ b ⊗ c) = c ⊗ b ⊗ a`
    Pi,
}

pub fn permute3(t: &Tensor3, perm: Perm3) -> Tensor3 {
    let mut out = Tensor3::zeros(t.dim());
    for ([a, b, c], v) in t.nonzero() {
        let target = match perm {
            Perm3::Sigma => [c, a, b],
            Perm3::SigmaSquared => [b, c, a],
            Perm3::Pi => [c, b, a],
        };
        out.set(target, v.clone());
    }
    out
}

/// Structure constants of a bilinear map `μ: V ⊗ V → V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bilinear {
    dim: usize,
    c: Vec<Rational>,
}

impl Bilinear {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            c: vec![Rational::zero(); dim * dim * dim],
        }
    }

    pub fn from_constants(dim: usize, c: Vec<Rational>) -> Result<Self> {
        check_dim("multiplication constants", dim * dim * dim, c.len())?;
        Ok(Self { dim, c })
    }

    /// Builds `μ` from its values on basis pairs.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.dim(), dim, "product dimension mismatch");
                let base = (i * dim + j) * dim;
                m.c[base..base + dim].clone_from_slice(v.coords());
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &[Rational] {
        &self.c
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        let n = self.dim;
        self.c[(i * n + j) * n + k] = value;
    }

    /// Coordinates of `μ(e_i, e_j)`.
    pub fn product(&self, i: usize, j: usize) -> &[Rational] {
        let base = (i * self.dim + j) * self.dim;
        &self.c[base..base + self.dim]
    }

    pub fn product_vec(&self, i: usize, j: usize) -> Vector {
        Vector::from_vec(self.product(i, j).to_vec())
    }

    /// `μ(x, y)` for coordinate vectors.
    pub fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for ([i], a) in x.nonzero() {
            for ([j], b) in y.nonzero() {
                let ab = a * b;
                for (k, c) in self.product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out.coords[k] += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// `f ∘ μ`
    pub fn then(&self, f: &LinMap) -> Bilinear {
        Bilinear::from_fn(self.dim, |i, j| f.apply(&self.product_vec(i, j)))
    }

    /// `μ ∘ (f ⊗ g)`
    pub fn precompose(&self, f: &LinMap, g: &LinMap) -> Bilinear {
        Bilinear::from_fn(self.dim, |i, j| self.apply(&f.column(i), &g.column(j)))
    }

    /// `μ^{op} = μ ∘ τ`
    pub fn opposite(&self) -> Bilinear {
        Bilinear::from_fn(self.dim, |i, j| self.product_vec(j, i))
    }

    /// `μ ∘ (Id − τ)`
    pub fn commutator(&self) -> Bilinear {
        Bilinear::from_fn(self.dim, |i, j| &self.product_vec(i, j) - &self.product_vec(j, i))
    }

    pub fn scale(&self, s: &Rational) -> Bilinear {
        Bilinear {
            dim: self.dim,
            c: self.c.iter().map(|v| v * s).collect(),
        }
    }

    pub fn check_dim(&self, operand: &'static str, dim: usize) -> Result<()> {
        check_dim(operand, dim, self.dim)
    }
}

/// `contract_mu`: evaluates `μ(x, y)` with dimension checks.
pub fn contract_mu(mu: &Bilinear, x: &Vector, y: &Vector) -> Result<Vector> {
    x.check_dim("left operand", mu.dim())?;
    y.check_dim("right operand", mu.dim())?;
    Ok(mu.apply(x, y))
}

/// Structure constants of a linear map `Δ: V → V ⊗ V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Comult {
    dim: usize,
    d: Vec<Rational>,
}

impl Comult {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            d: vec![Rational::zero(); dim * dim * dim],
        }
    }

    pub fn from_constants(dim: usize, d: Vec<Rational>) -> Result<Self> {
        check_dim("comultiplication constants", dim * dim * dim, d.len())?;
        Ok(Self { dim, d })
    }

    /// Builds `Δ` from the images of the basis vectors.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize) -> Tensor2) -> Self {
        let mut d = Vec::with_capacity(dim * dim * dim);
        for k in 0..dim {
            let t = f(k);
            assert_eq!(t.dim(), dim, "coproduct dimension mismatch");
            d.extend(t.into_coords());
        }
        Self { dim, d }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &[Rational] {
        &self.d
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.d[(k * self.dim + i) * self.dim + j]
    }

    pub fn set(&mut self, k: usize, i: usize, j: usize, value: Rational) {
        let n = self.dim;
        self.d[(k * n + i) * n + j] = value;
    }

    /// `Δ(e_k)`
    pub fn image(&self, k: usize) -> Tensor2 {
        let nn = self.dim * self.dim;
        Tensor2 {
            dim: self.dim,
            coords: self.d[k * nn..(k + 1) * nn].to_vec(),
        }
    }

    pub fn apply(&self, x: &Vector) -> Tensor2 {
        let mut out = Tensor2::zeros(self.dim);
        for ([k], a) in x.nonzero() {
            out.axpy(a, &self.image(k));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.d.iter().all(Zero::is_zero)
    }

    /// `(f ⊗ g) ∘ Δ`
    pub fn then(&self, f: &LinMap, g: &LinMap) -> Comult {
        Comult::from_fn(self.dim, |k| {
            apply_map_tensor([f, g], &self.image(k)).expect("dimensions checked by caller")
        })
    }

    /// `Δ ∘ f`
    pub fn precompose(&self, f: &LinMap) -> Comult {
        Comult::from_fn(self.dim, |k| self.apply(&f.column(k)))
    }

    /// `Δ^{op} = τ ∘ Δ`
    pub fn opposite(&self) -> Comult {
        Comult::from_fn(self.dim, |k| permute2(&self.image(k)))
    }

    /// `(Id − τ) ∘ Δ`
    pub fn cocommutator(&self) -> Comult {
        Comult::from_fn(self.dim, |k| {
            let t = self.image(k);
            &t - &permute2(&t)
        })
    }

    pub fn scale(&self, s: &Rational) -> Comult {
        Comult {
            dim: self.dim,
            d: self.d.iter().map(|v| v * s).collect(),
        }
    }

    pub fn add(&self, other: &Comult) -> Comult {
        assert_eq!(self.dim, other.dim, "comultiplication dimension mismatch");
        Comult {
            dim: self.dim,
            d: self.d.iter().zip(&other.d).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn check_dim(&self, operand: &'static str, dim: usize) -> Result<()> {
        check_dim(operand, dim, self.dim)
    }
}

/// Basis of the null space of a `rows × cols` matrix given row-major.
pub fn null_space(rows: usize, cols: usize, m: &[Rational]) -> Vec<Vec<Rational>> {
    assert_eq!(m.len(), rows * cols);
    let mut a: Vec<Vec<Rational>> = m.chunks(cols).map(<[_]>::to_vec).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &a[r][j];
                    a[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

/// Basis of the 2-tensors fixed by `α ⊗ α`.
pub fn fixed_tensors(alpha: &LinMap) -> Vec<Tensor2> {
    let n = alpha.dim();
    let nn = n * n;
    // (α⊗α − I) as an nn × nn matrix acting on row-major coordinates.
    let mut m = vec![Rational::zero(); nn * nn];
    for col in 0..nn {
        let [j, l] = Tensor2::unflat(n, col);
        for i in 0..n {
            for k in 0..n {
                let v = alpha.entry(i, j) * alpha.entry(k, l);
                if !v.is_zero() {
                    m[(i * n + k) * nn + col] += v;
                }
            }
        }
        m[col * nn + col] -= Rational::one();
    }
    null_space(nn, nn, &m)
        .into_iter()
        .map(|v| Tensor2 { dim: n, coords: v })
        .collect()
}

pub fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}

/// Renders a tensor in basis-label notation, e.g. `1/2 x⊗x + y⊗x`.
pub struct Pretty<'a, const R: usize> {
    pub space: &'a FinSpace,
    pub tensor: &'a Tensor<R>,
}

impl<const R: usize> fmt::Display for Pretty<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, c) in self.tensor.nonzero() {
            let word = idx
                .iter()
                .map(|&i| self.space.label(i))
                .collect::<Vec<_>>()
                .join("⊗");
            let mag = c.abs();
            let coeff = if mag.is_one() {
                String::new()
            } else {
                format!("{} ", format_rational(&mag))
            };
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{coeff}{word}")?,
                (true, true) => write!(f, "-{coeff}{word}")?,
                (false, false) => write!(f, " + {coeff}{word}")?,
                (false, true) => write!(f, " - {coeff}{word}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
