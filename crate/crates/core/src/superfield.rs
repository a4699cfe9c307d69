//! Grassmann-variable calculus and the superfield expansion of a simplicial Lie algebra.
//!
//! Polynomials have anticommuting generators `θ_i` and coefficients of the form
//! `m ⊗ v`, where `v` is a vector of some `𝔤_n` and `m` is a monomial in formal
//! graded-commutative symbols. A term is written `m v θ^I` with the symbols to
//! the left of the `θ`s. The symbols stand in for the coordinates of the
//! Moore components `a^m`, carrying parity `m + 1`; computing with them
//! instead of numbers turns the expansion of `½[a, a]` into exact
//! polynomial identities from which bracket tables are read off.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::{concat_sign, enum_s, MultiIndex};
use crate::error::AlgebraError;
use crate::lie::{LieAlgebra, Tensor3};
use crate::matrix::{add_scaled, is_zero_vector, unit_vector, Matrix, Vector};
use crate::report::Report;
use crate::scalar::Q;
use crate::simplicial::{s_alpha, MooreComplex, SimplicialLieAlgebra};

/// A formal coordinate; the low bit of the id is its parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u32);

impl Symbol {
    pub fn new(index: u32, odd: bool) -> Self {
        Symbol(index * 2 + odd as u32)
    }

    pub fn is_odd(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn index(self) -> u32 {
        self.0 / 2
    }
}

/// A product of symbols in increasing order; odd symbols appear at most once.
pub type Monomial = Vec<Symbol>;

pub fn monomial_is_odd(m: &[Symbol]) -> bool {
    m.iter().filter(|s| s.is_odd()).count() % 2 == 1
}

/// Normal-ordered product with its Koszul sign (`true` for `−1`); `None` when it vanishes.
pub fn mul_monomials(a: &[Symbol], b: &[Symbol]) -> Option<(bool, Monomial)> {
    let mut v = a.to_vec();
    let mut negative = false;
    for &s in b {
        let mut pos = v.len();
        while pos > 0 && v[pos - 1] > s {
            if v[pos - 1].is_odd() && s.is_odd() {
                negative = !negative;
            }
            pos -= 1;
        }
        if s.is_odd() && pos > 0 && v[pos - 1] == s {
            return None;
        }
        v.insert(pos, s);
    }
    Some((negative, v))
}

fn sign_q(negative: bool) -> Q {
    Q::sign(negative)
}

/// A linear form `Σ c_j θ'_j` used as the image of one generator under substitution.
pub type LinearForm = Vec<(usize, Q)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Rewrite a polynomial in `θ̄` as one in `θ`, using `θ̄_0 = θ_1`, `θ̄_i = θ_{i+1} − θ_i`.
    BarToTheta,
    /// The inverse substitution `θ_{i+1} = θ̄_0 + … + θ̄_i`.
    ThetaToBar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannPoly {
    n_vars: usize,
    dim: usize,
    terms: BTreeMap<(Monomial, u32), Vector>,
}

impl GrassmannPoly {
    pub fn zero(n_vars: usize, dim: usize) -> Self {
        assert!(n_vars < 32);
        GrassmannPoly { n_vars, dim, terms: BTreeMap::new() }
    }

    /// The single term `mono · v · θ^mask`, with `θ^mask` the increasing product.
    pub fn term(n_vars: usize, mono: Monomial, mask: u32, v: Vector) -> Self {
        let mut p = Self::zero(n_vars, v.len());
        p.add_term(&mono, mask, &Q::one(), &v);
        p
    }

    /// Scalar generator `θ_i`.
    pub fn theta(n_vars: usize, i: usize) -> Self {
        Self::term(n_vars, Vec::new(), 1 << i, vec![Q::one()])
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u32, &Vector)> {
        self.terms.iter().map(|((m, i), v)| (m, *i, v))
    }

    pub fn coefficient(&self, mono: &[Symbol], mask: u32) -> Option<&Vector> {
        self.terms.get(&(mono.to_vec(), mask))
    }

    pub fn add_term(&mut self, mono: &[Symbol], mask: u32, c: &Q, v: &[Q]) {
        assert_eq!(v.len(), self.dim);
        if c.is_zero() || is_zero_vector(v) {
            return;
        }
        let key = (mono.to_vec(), mask);
        let entry = self.terms.entry(key.clone()).or_insert_with(|| crate::matrix::zero_vector(self.dim));
        add_scaled(entry, c, v);
        if is_zero_vector(entry) {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.n_vars, self.dim), (other.n_vars, other.dim));
        let mut out = self.clone();
        for ((m, i), v) in &other.terms {
            out.add_term(m, *i, &Q::one(), v);
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.n_vars, self.dim);
        for ((m, i), v) in &self.terms {
            out.add_term(m, *i, c, v);
        }
        out
    }

    /// Applies a linear map to every coefficient vector.
    pub fn map_coefficients(&self, m: &Matrix) -> Self {
        assert_eq!(m.cols(), self.dim);
        let mut out = Self::zero(self.n_vars, m.rows());
        for ((mono, i), v) in &self.terms {
            out.add_term(mono, *i, &Q::one(), &m.apply(v));
        }
        out
    }

    /// `Σ (m₁v θ^I)(m₂w θ^J) = ± (m₁m₂) f(v, w) θ^{I∪J}`, keeping only `I ∪ J = only_mask` if given.
    fn mul_with(&self, other: &Self, out_dim: usize, only_mask: Option<u32>, f: &dyn Fn(&[Q], &[Q]) -> Vector) -> Self {
        assert_eq!(self.n_vars, other.n_vars);
        let mut out = Self::zero(self.n_vars, out_dim);
        for ((m1, i1), v) in &self.terms {
            for ((m2, i2), w) in &other.terms {
                if i1 & i2 != 0 || only_mask.is_some_and(|t| i1 | i2 != t) {
                    continue;
                }
                let Some((neg_m, m)) = mul_monomials(m1, m2) else { continue };
                let cross = (i1.count_ones() % 2 == 1) && monomial_is_odd(m2);
                let neg_t = concat_sign(MultiIndex::from_mask(*i1), MultiIndex::from_mask(*i2)) < 0;
                out.add_term(&m, i1 | i2, &sign_q(neg_m ^ cross ^ neg_t), &f(v, w));
            }
        }
        out
    }

    /// Product where at least one factor is scalar-valued (coefficient dimension 1).
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.n_vars != other.n_vars {
            return Err(AlgebraError::DimensionMismatch { context: "generator count", expected: self.n_vars, found: other.n_vars });
        }
        if other.dim == 1 {
            Ok(self.mul_with(other, self.dim, None, &|v, w| crate::matrix::scale(&w[0], v)))
        } else if self.dim == 1 {
            Ok(self.mul_with(other, other.dim, None, &|v, w| crate::matrix::scale(&v[0], w)))
        } else {
            Err(AlgebraError::DimensionMismatch { context: "one factor must be scalar-valued", expected: 1, found: other.dim })
        }
    }

    /// `[p, q]` computed termwise with the Lie bracket of `g` on coefficients.
    pub fn bracket(&self, other: &Self, g: &LieAlgebra) -> Self {
        assert_eq!((self.dim, other.dim), (g.dim(), g.dim()));
        self.mul_with(other, g.dim(), None, &|v, w| g.br(v, w))
    }

    /// Coefficient polynomial of `θ_0 θ_1 ⋯ θ_{n−1}` in `[p, q]`.
    pub fn top_bracket(&self, other: &Self, g: &LieAlgebra) -> BTreeMap<Monomial, Vector> {
        let full = MultiIndex::full(self.n_vars).mask();
        let p = self.mul_with(other, g.dim(), Some(full), &|v, w| g.br(v, w));
        p.top()
    }

    /// Coefficients of the top generator product `θ_0 ⋯ θ_{n−1}`.
    pub fn top(&self) -> BTreeMap<Monomial, Vector> {
        let full = MultiIndex::full(self.n_vars).mask();
        self.terms.iter().filter(|((_, i), _)| *i == full).map(|((m, _), v)| (m.clone(), v.clone())).collect()
    }

    /// Left derivative in `θ_i`: moves `θ_i` to the far left, past the symbols too, then deletes it.
    pub fn derive(&self, i: usize) -> Result<Self, AlgebraError> {
        if i >= self.n_vars {
            return Err(AlgebraError::IndexOutOfRange { index: i, level: self.n_vars });
        }
        let bit = 1u32 << i;
        let mut out = Self::zero(self.n_vars, self.dim);
        for ((m, mask), v) in &self.terms {
            if mask & bit == 0 {
                continue;
            }
            let before = (mask & (bit - 1)).count_ones() % 2 == 1;
            out.add_term(m, mask & !bit, &sign_q(before ^ monomial_is_odd(m)), v);
        }
        Ok(out)
    }

    /// Replaces `θ_i` by `images[i]`, a linear form in `new_n_vars` generators.
    pub fn substitute(&self, new_n_vars: usize, images: &[LinearForm]) -> Self {
        assert_eq!(images.len(), self.n_vars);
        let mut out = Self::zero(new_n_vars, self.dim);
        for ((m, mask), v) in &self.terms {
            let mut expansion: Vec<(u32, Q)> = vec![(0, Q::one())];
            for i in MultiIndex::from_mask(*mask).ascending() {
                let mut next = Vec::new();
                for (acc, c) in &expansion {
                    for (j, d) in &images[i] {
                        let b = 1u32 << j;
                        if acc & b != 0 || d.is_zero() {
                            continue;
                        }
                        let passes = (acc >> (j + 1)).count_ones() % 2 == 1;
                        next.push((acc | b, &(c * d) * &sign_q(passes)));
                    }
                }
                expansion = next;
            }
            for (new_mask, c) in expansion {
                out.add_term(m, new_mask, &c, v);
            }
        }
        out
    }

    pub fn change_vars(&self, direction: Direction) -> Self {
        let n = self.n_vars;
        let images: Vec<LinearForm> = match direction {
            Direction::BarToTheta => (0..n)
                .map(|i| if i == 0 { vec![(0, Q::one())] } else { vec![(i, Q::one()), (i - 1, -Q::one())] })
                .collect(),
            Direction::ThetaToBar => (0..n).map(|i| (0..=i).map(|j| (j, Q::one())).collect()).collect(),
        };
        self.substitute(n, &images)
    }
}

/// Moore components `a^m = Σ monomial · vector` for `m = 0, 1, …`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Components {
    pub levels: Vec<Vec<(Monomial, Vector)>>,
}

/// Where a symbol of [`Components::symbolic`] came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SymbolOrigin {
    pub copy: usize,
    pub level: usize,
    pub basis: usize,
}

impl Components {
    /// One symbol per level: `a^m = σ_m v_m` with `σ_m` of parity `m + 1`.
    pub fn from_vectors(vectors: &[Vector]) -> Self {
        let levels = vectors
            .iter()
            .enumerate()
            .map(|(m, v)| vec![(vec![Symbol::new(m as u32, m % 2 == 0)], v.clone())])
            .collect();
        Components { levels }
    }

    /// `copies` independent generic points: `a^m = Σ_c Σ_b ξ^{c,m}_b e^m_b` over Moore bases for `m ≤ top`.
    ///
    /// Symbols are numbered by `(copy, level, basis)`, so every symbol of copy 0
    /// sorts before every symbol of copy 1.
    pub fn symbolic(moore: &MooreComplex, top: usize, copies: usize) -> (Self, BTreeMap<Symbol, SymbolOrigin>) {
        let mut levels: Vec<Vec<(Monomial, Vector)>> = vec![Vec::new(); top + 1];
        let mut origins = BTreeMap::new();
        let mut next = 0u32;
        for copy in 0..copies {
            for (m, level) in levels.iter_mut().enumerate() {
                for b in 0..moore.dim(m) {
                    let s = Symbol::new(next, m % 2 == 0);
                    next += 1;
                    origins.insert(s, SymbolOrigin { copy, level: m, basis: b });
                    level.push((vec![s], moore.embed(m, &unit_vector(moore.dim(m), b))));
                }
            }
        }
        (Components { levels }, origins)
    }

    fn check(&self, moore: &MooreComplex) -> Result<(), AlgebraError> {
        for (m, level) in self.levels.iter().enumerate() {
            for (_, v) in level {
                if m > moore.truncation() || !moore.space(m).contains(v) {
                    return Err(AlgebraError::NotInSubspace { context: format!("Moore space at level {m}") });
                }
            }
        }
        Ok(())
    }
}

/// The level-`n` superfield in both coordinate systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Superfield {
    pub n: usize,
    /// In `θ̄_0, …, θ̄_{n−1}`.
    pub bar: GrassmannPoly,
    /// In `θ_1, …, θ_n`, stored as generators `0..n`.
    pub theta: GrassmannPoly,
}

/// `Σ_{α ∈ S(n)} s_α a^{n−♯α} θ̄^{S(n)∖α}`, with `θ̄^β` the increasing product.
pub fn assemble_superfield(
    g: &SimplicialLieAlgebra,
    moore: &MooreComplex,
    n: usize,
    components: &Components,
) -> Result<Superfield, AlgebraError> {
    components.check(moore)?;
    if n > g.truncation() {
        return Err(AlgebraError::LevelOutOfRange { level: n, max: g.truncation() });
    }
    let mut bar = GrassmannPoly::zero(n, g.dim(n));
    for alpha in enum_s(n) {
        let m = n - alpha.len();
        let Some(level) = components.levels.get(m) else { continue };
        let s = s_alpha(g, alpha, n)?;
        let mask = alpha.complement(n).mask();
        for (mono, v) in level {
            bar.add_term(mono, mask, &Q::one(), &s.apply(v));
        }
    }
    let theta = bar.change_vars(Direction::BarToTheta);
    Ok(Superfield { n, bar, theta })
}

/// Checks the four face/degeneracy relations linking the superfields at levels `n` and `n + 1`.
pub fn check_superfield_relations(
    g: &SimplicialLieAlgebra,
    moore: &MooreComplex,
    n: usize,
    components: &Components,
) -> Result<Report, AlgebraError> {
    let mut r = Report::new();
    if n + 1 > g.truncation() {
        return Err(AlgebraError::LevelOutOfRange { level: n + 1, max: g.truncation() });
    }
    let a = assemble_superfield(g, moore, n, components)?.theta;
    let up = assemble_superfield(g, moore, n + 1, components)?.theta;
    if n >= 1 {
        let down = assemble_superfield(g, moore, n - 1, components)?.theta;
        for i in 1..=n {
            // ∂_i a(θ_1..θ_n) = a(θ_1..θ̂_i..θ_n)
            let lhs = a.map_coefficients(g.face(n, i));
            let images: Vec<LinearForm> = (0..n - 1).map(|j| vec![(if j < i - 1 { j } else { j + 1 }, Q::one())]).collect();
            if lhs != down.substitute(n, &images) {
                r.push("superfield-face", vec![n], vec![i], "∂_i a differs from a with θ_i omitted");
            }
        }
    }
    for i in 1..=n {
        // s_i a(θ_1..θ_n) = a(θ_1..θ_i, θ_i..θ_n)
        let lhs = a.map_coefficients(g.degeneracy(n, i));
        let images: Vec<LinearForm> =
            (0..=n).map(|j| vec![(if j < i { j } else { j - 1 }, Q::one())]).collect();
        if lhs != up.substitute(n, &images) {
            r.push("superfield-degeneracy", vec![n], vec![i], "s_i a differs from a with θ_i repeated");
        }
    }
    let mut shift: Vec<LinearForm> = vec![Vec::new()];
    shift.extend((0..n).map(|j| vec![(j, Q::one())]));
    let at_zero = up.substitute(n, &shift);
    // s_0 a(θ_1..θ_n) = a(0, θ_1..θ_n)
    if a.map_coefficients(g.degeneracy(n, 0)) != at_zero {
        r.push("superfield-degeneracy", vec![n], vec![0], "s_0 a differs from a(0, θ)");
    }
    // ∂_0 a(0, θ_1..θ_n) = a(θ_1..θ_n)
    if at_zero.map_coefficients(g.face(n + 1, 0)) != a {
        r.push("superfield-face", vec![n + 1], vec![0], "∂_0 a(0, θ) differs from a(θ)");
    }
    Ok(r.sorted())
}

/// Top `θ` coefficient of `da` at level `n`, as a polynomial in the component symbols:
/// `−(d/dθ_0) ∂_0 a(θ_0, …, θ_n) + ½[a, a]` (the remaining derivative terms have no top part).
///
/// Each coefficient is returned in Moore coordinates; membership in `N𝔤_n` is checked, not forced.
pub fn oracle_expansion(
    g: &SimplicialLieAlgebra,
    moore: &MooreComplex,
    n: usize,
    components: &Components,
) -> Result<BTreeMap<Monomial, Vector>, AlgebraError> {
    if n + 1 > g.truncation() {
        return Err(AlgebraError::LevelOutOfRange { level: n + 1, max: g.truncation() });
    }
    let a = assemble_superfield(g, moore, n, components)?.theta;
    let up = assemble_superfield(g, moore, n + 1, components)?.theta;
    let half = Q::new(1, 2);
    let mut out: BTreeMap<Monomial, Vector> = BTreeMap::new();
    let mut push = |m: Monomial, c: &Q, v: &[Q]| {
        let e = out.entry(m).or_insert_with(|| crate::matrix::zero_vector(v.len()));
        add_scaled(e, c, v);
    };
    for (m, v) in a.top_bracket(&a, g.level(n)) {
        push(m, &half, &v);
    }
    let mut shift: Vec<LinearForm> = vec![Vec::new()];
    shift.extend((0..n).map(|j| vec![(j, Q::one())]));
    let first = up.map_coefficients(g.face(n + 1, 0)).derive(0)?.substitute(n, &shift);
    for (m, v) in first.top() {
        push(m, &-Q::one(), &v);
    }
    let mut coords = BTreeMap::new();
    for (m, v) in out {
        if is_zero_vector(&v) {
            continue;
        }
        let c = moore.coordinates(n, &v)?;
        coords.insert(m, c);
    }
    Ok(coords)
}

/// Coefficients of the generic expansion at level `n`, grouped by the levels of their symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleLevel {
    pub n: usize,
    /// `linear[&m]` maps `N_m → N_n`.
    pub linear: BTreeMap<usize, Matrix>,
    /// `brackets[&(n1, n2)]`: coefficient of `ξ_x η_y` for `x ∈ N_{n1}` of the first copy and `y ∈ N_{n2}` of the second.
    pub brackets: BTreeMap<(usize, usize), Tensor3>,
}

/// Runs the expansion at level `n` with two independent generic points and sorts the coefficients.
pub fn oracle_level(g: &SimplicialLieAlgebra, moore: &MooreComplex, n: usize) -> Result<OracleLevel, AlgebraError> {
    let top = (n + 1).min(moore.truncation());
    let (comps, origins) = Components::symbolic(moore, top, 2);
    let exp = oracle_expansion(g, moore, n, &comps)?;
    let mut linear: BTreeMap<usize, Matrix> = BTreeMap::new();
    let mut brackets: BTreeMap<(usize, usize), Tensor3> = BTreeMap::new();
    for (mono, v) in exp {
        let o: Vec<SymbolOrigin> = mono.iter().map(|s| origins[s]).collect();
        match o.as_slice() {
            [x] if x.copy == 0 => {
                let mat = linear.entry(x.level).or_insert_with(|| Matrix::zeros(moore.dim(n), moore.dim(x.level)));
                for (r, c) in v.iter().enumerate() {
                    mat[(r, x.basis)] = c.clone();
                }
            }
            [x, y] if x.copy == 0 && y.copy == 1 => {
                let t = brackets
                    .entry((x.level, y.level))
                    .or_insert_with(|| Tensor3::zeros(moore.dim(x.level), moore.dim(y.level), moore.dim(n)));
                t.set(x.basis, y.basis, &v);
            }
            // Pure second-copy and same-copy quadratic terms repeat the information above.
            [x] if x.copy == 1 => {}
            [x, y] if x.copy == y.copy => {}
            _ => {
                return Err(AlgebraError::OracleMismatch({
                    let mut r = Report::new();
                    r.push("oracle-degree", vec![n], Vec::new(), "expansion has a term of unexpected shape");
                    r
                }))
            }
        }
    }
    Ok(OracleLevel { n, linear, brackets })
}

/// `N_{n+1} → N_n` part of the expansion at level `n`.
pub fn oracle_differential(g: &SimplicialLieAlgebra, moore: &MooreComplex, n: usize) -> Result<Matrix, AlgebraError> {
    let lvl = oracle_level(g, moore, n)?;
    Ok(lvl.linear.get(&(n + 1)).cloned().unwrap_or_else(|| Matrix::zeros(moore.dim(n), moore.dim(n + 1))))
}

/// Coefficient table `N_{n1} × N_{n2} → N_{n1+n2}` of the quadratic part.
pub fn oracle_bracket_table(
    g: &SimplicialLieAlgebra,
    moore: &MooreComplex,
    n1: usize,
    n2: usize,
) -> Result<Tensor3, AlgebraError> {
    let n = n1 + n2;
    if n > moore.length() {
        return Err(AlgebraError::LevelOutOfRange { level: n, max: moore.length() });
    }
    let lvl = oracle_level(g, moore, n)?;
    Ok(lvl
        .brackets
        .get(&(n1, n2))
        .cloned()
        .unwrap_or_else(|| Tensor3::zeros(moore.dim(n1), moore.dim(n2), moore.dim(n))))
}

/// `Q(ξ)` for every coordinate of one generic point, as scalar polynomials.
fn vector_field(g: &SimplicialLieAlgebra, moore: &MooreComplex) -> Result<BTreeMap<Symbol, BTreeMap<Monomial, Q>>, AlgebraError> {
    let k = moore.length();
    let (comps, origins) = Components::symbolic(moore, (k + 1).min(moore.truncation()), 1);
    let mut field: BTreeMap<Symbol, BTreeMap<Monomial, Q>> = BTreeMap::new();
    for n in 0..=k {
        let exp = oracle_expansion(g, moore, n, &comps)?;
        for (s, o) in &origins {
            if o.level != n {
                continue;
            }
            let poly: BTreeMap<Monomial, Q> =
                exp.iter().filter(|(_, v)| !v[o.basis].is_zero()).map(|(m, v)| (m.clone(), v[o.basis].clone())).collect();
            field.insert(*s, poly);
        }
    }
    Ok(field)
}

/// Applies `Q` as a left derivation of odd degree to a scalar polynomial.
fn apply_field(field: &BTreeMap<Symbol, BTreeMap<Monomial, Q>>, p: &BTreeMap<Monomial, Q>) -> BTreeMap<Monomial, Q> {
    let mut out: BTreeMap<Monomial, Q> = BTreeMap::new();
    for (mono, c) in p {
        let mut negative = false;
        for (i, s) in mono.iter().enumerate() {
            if let Some(q) = field.get(s) {
                for (qm, qc) in q {
                    let Some((n1, left)) = mul_monomials(&mono[..i], qm) else { continue };
                    let Some((n2, full)) = mul_monomials(&left, &mono[i + 1..]) else { continue };
                    let e = out.entry(full).or_insert_with(Q::zero);
                    *e += &(c * qc) * &sign_q(negative ^ n1 ^ n2);
                }
            }
            if s.is_odd() {
                negative = !negative;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `Q² = 0` on every coordinate: the expansion defines a differential.
pub fn oracle_q_squared(g: &SimplicialLieAlgebra, moore: &MooreComplex) -> Result<Report, AlgebraError> {
    let field = vector_field(g, moore)?;
    let mut r = Report::new();
    for (s, q) in &field {
        let qq = apply_field(&field, q);
        if !qq.is_empty() {
            r.push("oracle-q-squared", Vec::new(), vec![s.index() as usize], format!("{} nonzero terms", qq.len()));
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn scalar(n_vars: usize, mono: Monomial, mask: u32, c: i64) -> GrassmannPoly {
        GrassmannPoly::term(n_vars, mono, mask, vec![q(c)])
    }

    #[test]
    fn generators_anticommute_and_square_to_zero() {
        let (t0, t1) = (GrassmannPoly::theta(2, 0), GrassmannPoly::theta(2, 1));
        assert_eq!(t0.mul(&t1).unwrap(), scalar(2, vec![], 0b11, 1));
        assert_eq!(t1.mul(&t0).unwrap(), scalar(2, vec![], 0b11, -1));
        assert!(t0.mul(&t0).unwrap().is_zero());
    }

    #[test]
    fn odd_coefficient_passes_theta_with_sign() {
        let c = Symbol::new(0, true);
        let odd = scalar(1, vec![c], 0, 1);
        let t0 = GrassmannPoly::theta(1, 0);
        let a = odd.mul(&t0).unwrap();
        let b = t0.mul(&odd).unwrap();
        assert_eq!(a, b.scale(&q(-1)));
        let even = scalar(1, vec![Symbol::new(1, false)], 0, 1);
        assert_eq!(even.mul(&t0).unwrap(), t0.mul(&even).unwrap());
    }

    #[test]
    fn multiplication_is_associative_on_mixed_terms() {
        let (x, y) = (Symbol::new(0, true), Symbol::new(1, true));
        let p = scalar(3, vec![x], 0b001, 2).add(&scalar(3, vec![], 0b100, 1));
        let r = scalar(3, vec![y], 0b010, 3).add(&scalar(3, vec![x], 0, 1));
        let s = scalar(3, vec![], 0b100, -1).add(&scalar(3, vec![y], 0b001, 1));
        let left = p.mul(&r).unwrap().mul(&s).unwrap();
        let right = p.mul(&r.mul(&s).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn left_derivatives() {
        let p = scalar(2, vec![], 0b11, 1);
        assert_eq!(p.derive(0).unwrap(), scalar(2, vec![], 0b10, 1));
        assert_eq!(p.derive(1).unwrap(), scalar(2, vec![], 0b01, -1));
        assert!(scalar(2, vec![], 0, 1).derive(0).unwrap().is_zero());
        assert!(p.derive(0).unwrap().derive(0).unwrap().is_zero());
        assert!(p.derive(2).is_err());
    }

    #[test]
    fn change_of_variables_examples_and_round_trip() {
        let bar0 = GrassmannPoly::theta(1, 0).change_vars(Direction::BarToTheta);
        assert_eq!(bar0, GrassmannPoly::theta(1, 0));
        let bar1 = GrassmannPoly::theta(2, 1).change_vars(Direction::BarToTheta);
        assert_eq!(bar1, GrassmannPoly::theta(2, 1).add(&GrassmannPoly::theta(2, 0).scale(&q(-1))));
        let x = Symbol::new(3, true);
        let p = scalar(3, vec![x], 0b111, 2).add(&scalar(3, vec![], 0b101, -5)).add(&scalar(3, vec![x], 0b010, 7));
        assert_eq!(p.change_vars(Direction::BarToTheta).change_vars(Direction::ThetaToBar), p);
        assert_eq!(p.change_vars(Direction::ThetaToBar).change_vars(Direction::BarToTheta), p);
    }

    #[test]
    fn monomial_products() {
        let (a, b, e) = (Symbol::new(0, true), Symbol::new(1, true), Symbol::new(2, false));
        assert_eq!(mul_monomials(&[b], &[a]), Some((true, vec![a, b])));
        assert_eq!(mul_monomials(&[a], &[a]), None);
        assert_eq!(mul_monomials(&[e], &[e]), Some((false, vec![e, e])));
        assert_eq!(mul_monomials(&[e], &[a]), Some((false, vec![a, e])));
    }
}
