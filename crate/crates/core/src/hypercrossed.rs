//! Hypercrossed data and the reconstruction of simplicial Lie algebras from it.
//!
//! Level `n` of the reconstruction is `⊕_{α ∈ S(n)} N_{n−♯α}`; the block of
//! `α` holds the elements `s_α x`. Faces and degeneracies act on blocks
//! through [`face_through`] and [`degeneracy_through`]. Brackets are fixed by
//! three rules:
//!
//! * `[s_α u, s_β v] = s_γ [s_{α'} u, s_{β'} v]` when `γ = α ∩ β ≠ ∅`;
//! * for disjoint `α < β` the `N_n` component of `[s_α u, s_β v]` is the
//!   stored pairing `D(n, α, β)(u, v)`, and `D(n, ∅, ∅)` is the bracket of `N_n`;
//! * the degenerate components are whatever makes `∂_1, …, ∂_n` preserve the bracket.
//!
//! Nothing else is assumed, so the result is checked afterwards: Jacobi at every
//! level and [`validate_simplicial`] on the whole object.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::combinatorics::{degeneracy_through, enum_s, face_through, factor_through, FaceAction, MultiIndex, PeifferPair};
use crate::error::AlgebraError;
use crate::lie::{LieAlgebra, Tensor3};
use crate::matrix::{is_zero_vector, unit_vector, zero_vector, Matrix, Vector};
use crate::report::Report;
use crate::scalar::Q;
use crate::simplicial::{s_alpha, validate_simplicial, MooreComplex, SimplicialLieAlgebra};

pub type PairingKey = (usize, MultiIndex, MultiIndex);

/// Moore spaces `N_0..N_top` (as bare vector spaces), their differentials, and all pairings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypercrossedData {
    dims: Vec<usize>,
    // deltas[m] : N_m → N_{m−1}; deltas[0] is 0×dims[0].
    deltas: Vec<Matrix>,
    pairings: BTreeMap<PairingKey, Tensor3>,
}

fn is_pairing_key(n: usize, alpha: MultiIndex, beta: MultiIndex) -> bool {
    alpha.fits(n)
        && beta.fits(n)
        && alpha.is_disjoint(beta)
        && (alpha < beta || (alpha.is_empty() && beta.is_empty()))
}

impl HypercrossedData {
    /// `deltas[m − 1]` is `δ_m : N_m → N_{m−1}` for `m = 1..dims.len()`.
    pub fn new(dims: Vec<usize>, deltas: Vec<Matrix>) -> Result<Self, AlgebraError> {
        if dims.is_empty() || deltas.len() + 1 != dims.len() {
            return Err(AlgebraError::DimensionMismatch {
                context: "one differential per positive level",
                expected: dims.len().saturating_sub(1),
                found: deltas.len(),
            });
        }
        for (m, d) in deltas.iter().enumerate() {
            if d.rows() != dims[m] || d.cols() != dims[m + 1] {
                return Err(AlgebraError::DimensionMismatch {
                    context: "differential shape",
                    expected: dims[m + 1],
                    found: d.cols(),
                });
            }
        }
        let mut all = alloc::vec![Matrix::zeros(0, dims[0])];
        all.extend(deltas);
        Ok(HypercrossedData { dims, deltas: all, pairings: BTreeMap::new() })
    }

    /// Top stored level; `N_m = 0` above it.
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, m: usize) -> usize {
        self.dims.get(m).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn delta(&self, m: usize) -> Matrix {
        if m == 0 || m > self.top() {
            Matrix::zeros(self.dim(m.saturating_sub(1)), self.dim(m))
        } else {
            self.deltas[m].clone()
        }
    }

    /// Stores `D(n, α, β) : N_{n−♯α} × N_{n−♯β} → N_n`; zero tensors are dropped.
    pub fn set_pairing(&mut self, n: usize, alpha: MultiIndex, beta: MultiIndex, t: Tensor3) -> Result<(), AlgebraError> {
        if !is_pairing_key(n, alpha, beta) {
            return Err(AlgebraError::IndexOutOfRange { index: beta.mask() as usize, level: n });
        }
        let shape = (self.dim(n - alpha.len()), self.dim(n - beta.len()), self.dim(n));
        if t.shape() != shape {
            return Err(AlgebraError::DimensionMismatch { context: "pairing shape", expected: shape.2, found: t.shape().2 });
        }
        if t.is_zero() {
            self.pairings.remove(&(n, alpha, beta));
        } else {
            self.pairings.insert((n, alpha, beta), t);
        }
        Ok(())
    }

    pub fn pairing(&self, n: usize, alpha: MultiIndex, beta: MultiIndex) -> Option<&Tensor3> {
        self.pairings.get(&(n, alpha, beta))
    }

    /// Nonzero pairings in key order.
    pub fn pairings(&self) -> impl Iterator<Item = (&PairingKey, &Tensor3)> {
        self.pairings.iter()
    }
}

/// Block layout of one reconstructed level.
struct Layout {
    blocks: BTreeMap<MultiIndex, (usize, usize)>,
    dim: usize,
}

impl Layout {
    fn new(data: &HypercrossedData, n: usize) -> Self {
        let mut blocks = BTreeMap::new();
        let mut offset = 0;
        for alpha in enum_s(n) {
            let d = data.dim(n - alpha.len());
            blocks.insert(alpha, (offset, d));
            offset += d;
        }
        Layout { blocks, dim: offset }
    }

    fn block(&self, alpha: MultiIndex) -> (usize, usize) {
        self.blocks[&alpha]
    }

    /// Block and in-block index of a basis vector.
    fn locate(&self, p: usize) -> (MultiIndex, usize) {
        for (&alpha, &(off, d)) in &self.blocks {
            if p >= off && p < off + d {
                return (alpha, p - off);
            }
        }
        unreachable!("basis index inside level")
    }
}

/// Builds levels `0..=truncation`, assuming `N_m = 0` above `data.top()`.
pub fn reconstruct(data: &HypercrossedData, truncation: usize) -> Result<SimplicialLieAlgebra, AlgebraError> {
    let layouts: Vec<Layout> = (0..=truncation + 1).map(|n| Layout::new(data, n)).collect();

    let mut faces: Vec<Vec<Matrix>> = Vec::new();
    for n in 1..=truncation {
        let (src, dst) = (&layouts[n], &layouts[n - 1]);
        let mut per_level = Vec::new();
        for i in 0..=n {
            let mut m = Matrix::zeros(dst.dim, src.dim);
            for (&alpha, &(off, d)) in &src.blocks {
                match face_through(alpha, n, i) {
                    FaceAction::Degenerate(a2) => {
                        let (off2, _) = dst.block(a2);
                        for t in 0..d {
                            m[(off2 + t, off + t)] = Q::one();
                        }
                    }
                    FaceAction::Face { j: 0, alpha: a2 } => {
                        let delta = data.delta(n - alpha.len());
                        let (off2, d2) = dst.block(a2);
                        for r in 0..d2 {
                            for c in 0..d {
                                m[(off2 + r, off + c)] = delta[(r, c)].clone();
                            }
                        }
                    }
                    FaceAction::Face { .. } => {}
                }
            }
            per_level.push(m);
        }
        faces.push(per_level);
    }

    let mut degeneracies: Vec<Vec<Matrix>> = Vec::new();
    for n in 0..truncation {
        let (src, dst) = (&layouts[n], &layouts[n + 1]);
        let mut per_level = Vec::new();
        for i in 0..=n {
            let mut m = Matrix::zeros(dst.dim, src.dim);
            for (&alpha, &(off, d)) in &src.blocks {
                let (off2, _) = dst.block(degeneracy_through(alpha, n, i));
                for t in 0..d {
                    m[(off2 + t, off + t)] = Q::one();
                }
            }
            per_level.push(m);
        }
        degeneracies.push(per_level);
    }

    let mut levels: Vec<LieAlgebra> = Vec::new();
    for n in 0..=truncation {
        let lay = &layouts[n];
        let mut t = Tensor3::zeros(lay.dim, lay.dim, lay.dim);
        // Left inverse of (∂_1, …, ∂_n) on the degenerate blocks.
        let (empty_off, empty_dim) = lay.block(MultiIndex::EMPTY);
        let degenerate_cols: Vec<usize> = (0..lay.dim).filter(|&c| c < empty_off || c >= empty_off + empty_dim).collect();
        let phi = if n > 0 {
            let stacked = Matrix::vstack(lay.dim, &faces[n - 1][1..]);
            let cols: Vec<Vector> = degenerate_cols.iter().map(|&c| stacked.column(c)).collect();
            Some(Matrix::from_columns(stacked.rows(), &cols))
        } else {
            None
        };
        let phi_inv = match &phi {
            Some(p) => Some(p.left_inverse().ok_or_else(|| AlgebraError::Inconsistent {
                level: n,
                detail: "degenerate part not detected by inner faces".into(),
            })?),
            None => None,
        };

        for p in 0..lay.dim {
            for q in p + 1..lay.dim {
                let (alpha, a) = lay.locate(p);
                let (beta, b) = lay.locate(q);
                let gamma = alpha.intersection(beta);
                let z = if !gamma.is_empty() {
                    let low = n - gamma.len();
                    let (a2, b2) = (factor_through(alpha, gamma, n), factor_through(beta, gamma, n));
                    let ll = &layouts[low];
                    let x = unit_vector(ll.dim, ll.block(a2).0 + a);
                    let y = unit_vector(ll.dim, ll.block(b2).0 + b);
                    let mut v = levels[low].br(&x, &y);
                    let mut m = low;
                    for i in gamma.ascending() {
                        v = degeneracies[m][i].apply(&v);
                        m += 1;
                    }
                    v
                } else {
                    let (swap, (al, ia), (be, ib)) =
                        if alpha <= beta { (false, (alpha, a), (beta, b)) } else { (true, (beta, b), (alpha, a)) };
                    let mut z = zero_vector(lay.dim);
                    if let Some(d) = data.pairing(n, al, be) {
                        for (r, c) in d.entry(ia, ib).iter().enumerate() {
                            z[empty_off + r] = c.clone();
                        }
                    }
                    if let (Some(phi), Some(phi_inv)) = (&phi, &phi_inv) {
                        let (x, y) = if swap { (q, p) } else { (p, q) };
                        let mut target = Vec::new();
                        for i in 1..=n {
                            let f = &faces[n - 1][i];
                            target.extend(levels[n - 1].br(&f.column(x), &f.column(y)));
                        }
                        let sol = phi_inv.apply(&target);
                        if phi.apply(&sol) != target {
                            return Err(AlgebraError::Inconsistent {
                                level: n,
                                detail: format!("inner faces of [s_{al} e{ia}, s_{be} e{ib}] admit no lift"),
                            });
                        }
                        for (c, v) in degenerate_cols.iter().zip(sol) {
                            z[*c] = v;
                        }
                    }
                    if swap {
                        z.iter().map(|x| -x).collect()
                    } else {
                        z
                    }
                };
                let neg: Vector = z.iter().map(|x| -x).collect();
                t.set(p, q, &z);
                t.set(q, p, &neg);
            }
        }
        let g = LieAlgebra::from_structure_constants(t).map_err(|e| AlgebraError::Inconsistent {
            level: n,
            detail: format!("{e}"),
        })?;
        levels.push(g);
    }

    let g = SimplicialLieAlgebra::new(levels, faces, degeneracies)?;
    let report = validate_simplicial(&g);
    if !report.is_empty() {
        return Err(AlgebraError::Invalid(report));
    }
    Ok(g)
}

/// Reads off Moore data and every pairing `p_n[s_α u, s_β v]` of a simplicial Lie algebra.
///
/// Levels above `moore.length()` are taken to vanish.
pub fn extract(g: &SimplicialLieAlgebra, moore: &MooreComplex) -> Result<HypercrossedData, AlgebraError> {
    let top = moore.length();
    let dims: Vec<usize> = (0..=top).map(|m| moore.dim(m)).collect();
    let deltas = (1..=top).map(|m| moore.delta(m).clone()).collect();
    let mut data = HypercrossedData::new(dims, deltas)?;
    for n in 0..=top {
        if moore.dim(n) == 0 {
            continue;
        }
        let s = enum_s(n);
        for &alpha in &s {
            for &beta in &s {
                if !is_pairing_key(n, alpha, beta) {
                    continue;
                }
                let (ma, mb) = (n - alpha.len(), n - beta.len());
                let (sa, sb) = (s_alpha(g, alpha, n)?, s_alpha(g, beta, n)?);
                let mut t = Tensor3::zeros(moore.dim(ma), moore.dim(mb), moore.dim(n));
                for (i, u) in moore.space(ma).basis().iter().enumerate() {
                    let su = sa.apply(u);
                    for (j, v) in moore.space(mb).basis().iter().enumerate() {
                        let z = moore.projector(n).apply(&g.level(n).br(&su, &sb.apply(v)));
                        t.set(i, j, &moore.coordinates(n, &z)?);
                    }
                }
                data.set_pairing(n, alpha, beta, t)?;
            }
        }
    }
    Ok(data)
}

/// `F_{α,β}(x, y) = p_n[s_α x, s_β y]` for ambient vectors `x ∈ N𝔤_{n−♯α}`, `y ∈ N𝔤_{n−♯β}`.
pub fn peiffer(
    g: &SimplicialLieAlgebra,
    moore: &MooreComplex,
    pair: &PeifferPair,
    x: &[Q],
    y: &[Q],
) -> Result<Vector, AlgebraError> {
    let n = pair.n;
    if !pair.is_valid() || n > g.truncation() {
        return Err(AlgebraError::IndexOutOfRange { index: pair.beta.mask() as usize, level: n });
    }
    let (ma, mb) = (pair.alpha_degree(), pair.beta_degree());
    moore.coordinates(ma, x)?;
    moore.coordinates(mb, y)?;
    let z = g.level(n).br(&s_alpha(g, pair.alpha, n)?.apply(x), &s_alpha(g, pair.beta, n)?.apply(y));
    let z = moore.projector(n).apply(&z);
    moore.coordinates(n, &z)?;
    Ok(z)
}

// Crossed modules and 2-crossed modules.

/// `action.entry(i, j)` is `e_i · h_j` for `e_i` a basis vector of the acting algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModuleSpec {
    pub d: LieAlgebra,
    pub h: LieAlgebra,
    pub delta1: Matrix,
    pub action: Tensor3,
}

/// `δ₂ : 𝔥 → 𝔡`, `δ₁ : 𝔡 → 𝔨`, actions of `𝔨` on `𝔡` and `𝔥`, and the pairing `{−,−} : 𝔡 × 𝔡 → 𝔥`.
///
/// In the simplicial object `k·d = [s_0 k, d]`, `k·h = [s_1 s_0 k, h]` and `{d₁, d₂} = p_2[s_0 d₂, s_1 d₁]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCrossedModuleSpec {
    pub k: LieAlgebra,
    pub d: LieAlgebra,
    pub h: LieAlgebra,
    pub delta1: Matrix,
    pub delta2: Matrix,
    pub action_d: Tensor3,
    pub action_h: Tensor3,
    pub pairing: Tensor3,
}

fn inverse(p: &Matrix) -> Result<Matrix, AlgebraError> {
    if p.rows() != p.cols() {
        return Err(AlgebraError::DimensionMismatch { context: "change of basis must be square", expected: p.rows(), found: p.cols() });
    }
    p.left_inverse().ok_or(AlgebraError::DimensionMismatch { context: "change of basis must be invertible", expected: p.rows(), found: p.rank() })
}

fn transport_lie(g: &LieAlgebra, p: &Matrix, pinv: &Matrix) -> LieAlgebra {
    LieAlgebra::from_constants_unchecked(g.structure_constants().transport(pinv, pinv, p))
}

impl CrossedModuleSpec {
    /// The same crossed module in new bases: `x ↦ p_d x` on `𝔡` and `x ↦ p_h x` on `𝔥`.
    pub fn change_basis(&self, p_d: &Matrix, p_h: &Matrix) -> Result<Self, AlgebraError> {
        let (qd, qh) = (inverse(p_d)?, inverse(p_h)?);
        Ok(CrossedModuleSpec {
            d: transport_lie(&self.d, p_d, &qd),
            h: transport_lie(&self.h, p_h, &qh),
            delta1: p_d.compose(&self.delta1).compose(&qh),
            action: self.action.transport(&qd, &qh, p_h),
        })
    }
}

impl TwoCrossedModuleSpec {
    /// The same 2-crossed module in new bases of `𝔨`, `𝔡`, `𝔥`.
    pub fn change_basis(&self, p_k: &Matrix, p_d: &Matrix, p_h: &Matrix) -> Result<Self, AlgebraError> {
        let (qk, qd, qh) = (inverse(p_k)?, inverse(p_d)?, inverse(p_h)?);
        Ok(TwoCrossedModuleSpec {
            k: transport_lie(&self.k, p_k, &qk),
            d: transport_lie(&self.d, p_d, &qd),
            h: transport_lie(&self.h, p_h, &qh),
            delta1: p_k.compose(&self.delta1).compose(&qd),
            delta2: p_d.compose(&self.delta2).compose(&qh),
            action_d: self.action_d.transport(&qk, &qd, p_d),
            action_h: self.action_h.transport(&qk, &qh, p_h),
            pairing: self.pairing.transport(&qd, &qd, p_h),
        })
    }
}

fn basis(n: usize) -> Vec<Vector> {
    (0..n).map(|i| unit_vector(n, i)).collect()
}

fn shape_report(r: &mut Report, law: &str, ok: bool, detail: &str) -> bool {
    if !ok {
        r.push(law, Vec::new(), Vec::new(), detail);
    }
    ok
}

fn diff(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn sum(vs: &[Vector]) -> Vector {
    let mut out = zero_vector(vs[0].len());
    for v in vs {
        for (o, x) in out.iter_mut().zip(v) {
            *o += x;
        }
    }
    out
}

fn neg(v: &[Q]) -> Vector {
    v.iter().map(|x| -x).collect()
}

fn check(r: &mut Report, law: &str, witness: Vec<usize>, residual: Vector) {
    if !is_zero_vector(&residual) {
        let detail = format!("residual {:?}", residual);
        r.push(law, Vec::new(), witness, detail);
    }
}

/// `a` acting on `g` by derivations and as a Lie action; `act.entry(i, j) = a_i · g_j`.
fn check_action(r: &mut Report, tag: &str, a: &LieAlgebra, g: &LieAlgebra, act: &Tensor3) {
    let (ba, bg) = (basis(a.dim()), basis(g.dim()));
    let on = |x: &[Q], y: &[Q]| act.eval(x, y);
    for (i, x) in ba.iter().enumerate() {
        for (j, u) in bg.iter().enumerate() {
            for (l, v) in bg.iter().enumerate().skip(j + 1) {
                let lhs = on(x, &g.br(u, v));
                let rhs = sum(&[g.br(&on(x, u), v), g.br(u, &on(x, v))]);
                check(r, &format!("{tag}-derivation"), alloc::vec![i, j, l], diff(&lhs, &rhs));
            }
        }
    }
    for (i, x) in ba.iter().enumerate() {
        for (j, y) in ba.iter().enumerate().skip(i + 1) {
            for (l, u) in bg.iter().enumerate() {
                let lhs = on(&a.br(x, y), u);
                let rhs = diff(&on(x, &on(y, u)), &on(y, &on(x, u)));
                check(r, &format!("{tag}-action"), alloc::vec![i, j, l], diff(&lhs, &rhs));
            }
        }
    }
}

pub fn validate_crossed_module(spec: &CrossedModuleSpec) -> Report {
    let mut r = Report::new();
    let (nd, nh) = (spec.d.dim(), spec.h.dim());
    let shapes = shape_report(&mut r, "CM-shape", spec.delta1.rows() == nd && spec.delta1.cols() == nh, "δ₁ must be dim 𝔡 × dim 𝔥")
        & shape_report(&mut r, "CM-shape", spec.action.shape() == (nd, nh, nh), "action must be dim 𝔡 × dim 𝔥 × dim 𝔥");
    if !shapes {
        return r;
    }
    let (bd, bh) = (basis(nd), basis(nh));
    let act = |x: &[Q], y: &[Q]| spec.action.eval(x, y);
    for (i, d) in bd.iter().enumerate() {
        for (j, h) in bh.iter().enumerate() {
            let lhs = spec.delta1.apply(&act(d, h));
            let rhs = spec.d.br(d, &spec.delta1.apply(h));
            check(&mut r, "CM-equivariance", alloc::vec![i, j], diff(&lhs, &rhs));
        }
    }
    for (i, h) in bh.iter().enumerate() {
        for (j, h2) in bh.iter().enumerate() {
            let lhs = act(&spec.delta1.apply(h), h2);
            check(&mut r, "CM-peiffer", alloc::vec![i, j], diff(&lhs, &spec.h.br(h, h2)));
        }
    }
    check_action(&mut r, "CM", &spec.d, &spec.h, &spec.action);
    r.sorted()
}

pub fn validate_two_crossed_module(spec: &TwoCrossedModuleSpec) -> Report {
    let mut r = Report::new();
    let (nk, nd, nh) = (spec.k.dim(), spec.d.dim(), spec.h.dim());
    let shapes = shape_report(&mut r, "2CM-shape", (spec.delta1.rows(), spec.delta1.cols()) == (nk, nd), "δ₁ must be dim 𝔨 × dim 𝔡")
        & shape_report(&mut r, "2CM-shape", (spec.delta2.rows(), spec.delta2.cols()) == (nd, nh), "δ₂ must be dim 𝔡 × dim 𝔥")
        & shape_report(&mut r, "2CM-shape", spec.action_d.shape() == (nk, nd, nd), "action on 𝔡 must be dim 𝔨 × dim 𝔡 × dim 𝔡")
        & shape_report(&mut r, "2CM-shape", spec.action_h.shape() == (nk, nh, nh), "action on 𝔥 must be dim 𝔨 × dim 𝔥 × dim 𝔥")
        & shape_report(&mut r, "2CM-shape", spec.pairing.shape() == (nd, nd, nh), "pairing must be dim 𝔡 × dim 𝔡 × dim 𝔥");
    if !shapes {
        return r;
    }
    let (bk, bd, bh) = (basis(nk), basis(nd), basis(nh));
    let (d1, d2) = (&spec.delta1, &spec.delta2);
    let kd = |x: &[Q], y: &[Q]| spec.action_d.eval(x, y);
    let kh = |x: &[Q], y: &[Q]| spec.action_h.eval(x, y);
    let pb = |x: &[Q], y: &[Q]| spec.pairing.eval(x, y);
    let (bd_, bh_) = (&spec.d, &spec.h);

    for (j, h) in bh.iter().enumerate() {
        check(&mut r, "2CM-i-complex", alloc::vec![j], d1.apply(&d2.apply(h)));
    }
    for (i, k) in bk.iter().enumerate() {
        for (j, d) in bd.iter().enumerate() {
            check(&mut r, "2CM-i-equivariance", alloc::vec![i, j], diff(&d1.apply(&kd(k, d)), &spec.k.br(k, &d1.apply(d))));
        }
        for (j, h) in bh.iter().enumerate() {
            check(&mut r, "2CM-i-equivariance", alloc::vec![i, nd + j], diff(&d2.apply(&kh(k, h)), &kd(k, &d2.apply(h))));
        }
    }
    for (i, x) in bd.iter().enumerate() {
        for (j, y) in bd.iter().enumerate() {
            let rhs = sum(&[d2.apply(&pb(x, y)), kd(&d1.apply(x), y)]);
            check(&mut r, "2CM-ii", alloc::vec![i, j], diff(&bd_.br(x, y), &rhs));
        }
    }
    for (i, x) in bh.iter().enumerate() {
        for (j, y) in bh.iter().enumerate() {
            check(&mut r, "2CM-iii", alloc::vec![i, j], diff(&bh_.br(x, y), &pb(&d2.apply(x), &d2.apply(y))));
        }
    }
    for (i, x) in bd.iter().enumerate() {
        for (j, y) in bd.iter().enumerate() {
            for (l, z) in bd.iter().enumerate() {
                // {[x,y],z} = δ₁(x)·{y,z} + {x,[y,z]} − δ₁(y)·{x,z} − {y,[x,z]}
                let lhs = pb(&bd_.br(x, y), z);
                let rhs = sum(&[
                    kh(&d1.apply(x), &pb(y, z)),
                    pb(x, &bd_.br(y, z)),
                    neg(&kh(&d1.apply(y), &pb(x, z))),
                    neg(&pb(y, &bd_.br(x, z))),
                ]);
                check(&mut r, "2CM-iv", alloc::vec![i, j, l], diff(&lhs, &rhs));
                // {x,[y,z]} = {δ₂{x,y},z} − {δ₂{x,z},y}
                let lhs = pb(x, &bd_.br(y, z));
                let rhs = diff(&pb(&d2.apply(&pb(x, y)), z), &pb(&d2.apply(&pb(x, z)), y));
                check(&mut r, "2CM-v", alloc::vec![i, j, l], diff(&lhs, &rhs));
            }
        }
    }
    for (i, d) in bd.iter().enumerate() {
        for (j, h) in bh.iter().enumerate() {
            let lhs = sum(&[pb(&d2.apply(h), d), pb(d, &d2.apply(h))]);
            check(&mut r, "2CM-vi", alloc::vec![i, j], sum(&[lhs, kh(&d1.apply(d), h)]));
        }
    }
    for (i, k) in bk.iter().enumerate() {
        for (j, x) in bd.iter().enumerate() {
            for (l, y) in bd.iter().enumerate() {
                let rhs = sum(&[pb(&kd(k, x), y), pb(x, &kd(k, y))]);
                check(&mut r, "2CM-pairing-equivariance", alloc::vec![i, j, l], diff(&kh(k, &pb(x, y)), &rhs));
            }
        }
    }
    check_action(&mut r, "2CM-action-d", &spec.k, &spec.d, &spec.action_d);
    check_action(&mut r, "2CM-action-h", &spec.k, &spec.h, &spec.action_h);
    r.sorted()
}

/// Transposes the first two slots and negates: `out.entry(j, i) = −t.entry(i, j)`.
fn neg_swap(t: &Tensor3) -> Tensor3 {
    let (a, b, c) = t.shape();
    let mut out = Tensor3::zeros(b, a, c);
    for i in 0..a {
        for j in 0..b {
            out.set(j, i, &neg(t.entry(i, j)));
        }
    }
    out
}

fn swap(t: &Tensor3) -> Tensor3 {
    let (a, b, c) = t.shape();
    let mut out = Tensor3::zeros(b, a, c);
    for i in 0..a {
        for j in 0..b {
            out.set(j, i, t.entry(i, j));
        }
    }
    out
}

impl CrossedModuleSpec {
    pub fn to_hypercrossed(&self) -> Result<HypercrossedData, AlgebraError> {
        let mut data = HypercrossedData::new(alloc::vec![self.d.dim(), self.h.dim()], alloc::vec![self.delta1.clone()])?;
        let e = MultiIndex::EMPTY;
        data.set_pairing(0, e, e, self.d.structure_constants().clone())?;
        data.set_pairing(1, e, e, self.h.structure_constants().clone())?;
        // [h, s_0 d] = −d·h
        data.set_pairing(1, e, MultiIndex::singleton(0), neg_swap(&self.action))?;
        Ok(data)
    }

    /// Reads a crossed module off Moore data of length at most 1.
    pub fn from_hypercrossed(data: &HypercrossedData) -> Result<Self, AlgebraError> {
        if data.top() > 1 {
            return Err(AlgebraError::MooreLengthExceedsTruncation { length: data.top(), truncation: 1 });
        }
        let e = MultiIndex::EMPTY;
        let (nd, nh) = (data.dim(0), data.dim(1));
        let lie = |n: usize, dim: usize| {
            LieAlgebra::from_structure_constants(data.pairing(n, e, e).cloned().unwrap_or_else(|| Tensor3::zeros(dim, dim, dim)))
        };
        let act = data.pairing(1, e, MultiIndex::singleton(0)).cloned().unwrap_or_else(|| Tensor3::zeros(nh, nd, nh));
        Ok(CrossedModuleSpec { d: lie(0, nd)?, h: lie(1, nh)?, delta1: data.delta(1), action: neg_swap(&act) })
    }
}

impl TwoCrossedModuleSpec {
    pub fn to_hypercrossed(&self) -> Result<HypercrossedData, AlgebraError> {
        let (nd, nh) = (self.d.dim(), self.h.dim());
        let mut data = HypercrossedData::new(
            alloc::vec![self.k.dim(), nd, nh],
            alloc::vec![self.delta1.clone(), self.delta2.clone()],
        )?;
        let e = MultiIndex::EMPTY;
        let (s0, s1) = (MultiIndex::singleton(0), MultiIndex::singleton(1));
        data.set_pairing(0, e, e, self.k.structure_constants().clone())?;
        data.set_pairing(1, e, e, self.d.structure_constants().clone())?;
        data.set_pairing(1, e, s0, neg_swap(&self.action_d))?;
        data.set_pairing(2, e, e, self.h.structure_constants().clone())?;
        // p_2[s_0 x, s_1 y] = {y, x}; [h, s_0 d] = {δ₂h, d}; [h, s_1 d] = {d, δ₂h} + {δ₂h, d}.
        let mut t0 = Tensor3::zeros(nh, nd, nh);
        let mut t1 = Tensor3::zeros(nh, nd, nh);
        for j in 0..nh {
            let dh = self.delta2.column(j);
            for i in 0..nd {
                let d = unit_vector(nd, i);
                let a = self.pairing.eval(&dh, &d);
                let b = self.pairing.eval(&d, &dh);
                t1.set(j, i, &sum(&[a.clone(), b]));
                t0.set(j, i, &a);
            }
        }
        data.set_pairing(2, e, s0, t0)?;
        data.set_pairing(2, e, s1, t1)?;
        data.set_pairing(2, e, MultiIndex::full(2), neg_swap(&self.action_h))?;
        data.set_pairing(2, s0, s1, swap(&self.pairing))?;
        Ok(data)
    }

    /// Reads a 2-crossed module off Moore data of length at most 2.
    pub fn from_hypercrossed(data: &HypercrossedData) -> Result<Self, AlgebraError> {
        if data.top() > 2 {
            return Err(AlgebraError::MooreLengthExceedsTruncation { length: data.top(), truncation: 2 });
        }
        let e = MultiIndex::EMPTY;
        let (nk, nd, nh) = (data.dim(0), data.dim(1), data.dim(2));
        let get = |n: usize, a: MultiIndex, b: MultiIndex, shape: (usize, usize, usize)| {
            data.pairing(n, a, b).cloned().unwrap_or_else(|| Tensor3::zeros(shape.0, shape.1, shape.2))
        };
        let lie = |n: usize, dim: usize| LieAlgebra::from_structure_constants(get(n, e, e, (dim, dim, dim)));
        Ok(TwoCrossedModuleSpec {
            k: lie(0, nk)?,
            d: lie(1, nd)?,
            h: lie(2, nh)?,
            delta1: data.delta(1),
            delta2: data.delta(2),
            action_d: neg_swap(&get(1, e, MultiIndex::singleton(0), (nd, nk, nd))),
            action_h: neg_swap(&get(2, e, MultiIndex::full(2), (nh, nk, nh))),
            pairing: swap(&get(2, MultiIndex::singleton(0), MultiIndex::singleton(1), (nd, nd, nh))),
        })
    }
}

/// The nerve of a crossed module, levels `0..=truncation` with `truncation ≥ 2`.
pub fn from_crossed_module(spec: &CrossedModuleSpec, truncation: usize) -> Result<SimplicialLieAlgebra, AlgebraError> {
    let r = validate_crossed_module(spec);
    if !r.is_empty() {
        return Err(AlgebraError::Invalid(r));
    }
    if truncation < 2 {
        return Err(AlgebraError::MooreLengthExceedsTruncation { length: 1, truncation });
    }
    reconstruct(&spec.to_hypercrossed()?, truncation)
}

/// The simplicial Lie algebra of a 2-crossed module, levels `0..=truncation` with `truncation ≥ 3`.
pub fn from_two_crossed_module(spec: &TwoCrossedModuleSpec, truncation: usize) -> Result<SimplicialLieAlgebra, AlgebraError> {
    let r = validate_two_crossed_module(spec);
    if !r.is_empty() {
        return Err(AlgebraError::Invalid(r));
    }
    if truncation < 3 {
        return Err(AlgebraError::MooreLengthExceedsTruncation { length: 2, truncation });
    }
    reconstruct(&spec.to_hypercrossed()?, truncation)
}
