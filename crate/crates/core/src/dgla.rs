//! The truncated differential graded Lie algebra on the Moore complex.
//!
//! Degrees are homological: `L_n = N𝔤_n` sits in degree `−n`, the differential
//! lowers `n` by one and brackets add levels. Elements are handled in Moore
//! coordinates throughout.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::combinatorics::{enum_pbar, shuffle_sign, MultiIndex, PeifferPair};
use crate::error::AlgebraError;
use crate::hypercrossed::peiffer;
use crate::lie::Tensor3;
use crate::matrix::{add_scaled, is_zero_vector, sub_vectors, unit_vector, zero_vector, Matrix, Vector};
use crate::report::Report;
use crate::scalar::Q;
use crate::simplicial::{s_alpha, MooreComplex, SimplicialLieAlgebra};
use crate::superfield::{check_superfield_relations, oracle_level, oracle_q_squared, Components};

fn parity(e: usize) -> i32 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Global sign of the differential: `d_n = DIFFERENTIAL_SIGN · δ_n`.
pub const DIFFERENTIAL_SIGN: i32 = -1;

/// Factor in front of the Peiffer sum in `[x_{n1}, x_{n2}]`; also the factor turning the
/// oracle's quadratic coefficients into brackets, in every degree.
pub fn bracket_sign(n1: usize, n2: usize) -> i32 {
    parity(n1 * (n2 + 1))
}

/// Sign relating the oracle's linear coefficient at level `n` to `d_{n+1}`.
pub fn oracle_differential_sign(n: usize) -> i32 {
    parity(n)
}

/// Coefficient of `f_{α,β}(x, y)` in the Peiffer sum as stated in prose: `(−1)^{n1(n2+1)}` times the shuffle sign.
pub fn prose_sign(pair: &PeifferPair) -> Result<i32, AlgebraError> {
    let (n1, n2) = (pair.alpha_degree(), pair.beta_degree());
    Ok(parity(n1 * (n2 + 1)) * shuffle_sign(pair.n, pair.alpha, pair.beta)?)
}

/// One row of the sign table: the coefficient of `f_{α,β}(x, y)` in `[x, y]` and in `[y, x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignEntry {
    pub pair: PeifferPair,
    pub prose: i32,
    /// In `[x_{n1}, x_{n2}]`.
    pub forward: i32,
    /// In `[x_{n2}, x_{n1}]`.
    pub reverse: i32,
}

pub fn sign_table(top: usize) -> Result<Vec<SignEntry>, AlgebraError> {
    let mut out = Vec::new();
    for n in 1..=top {
        for pair in enum_pbar(n) {
            let (n1, n2) = (pair.alpha_degree(), pair.beta_degree());
            let prose = prose_sign(&pair)?;
            let forward = bracket_sign(n1, n2) * prose;
            let reverse = bracket_sign(n2, n1) * parity((n1 + 1) * (n2 + 1)) * prose;
            out.push(SignEntry { pair, prose, forward, reverse });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dgla {
    dims: Vec<usize>,
    /// `differential[n] : L_n → L_{n−1}`; entry 0 is the zero map to a zero space.
    differential: Vec<Matrix>,
    /// Tables for `n1 + n2 ≤ top`; missing entries are zero.
    brackets: BTreeMap<(usize, usize), Tensor3>,
}

impl Dgla {
    pub fn new(
        dims: Vec<usize>,
        differential: Vec<Matrix>,
        brackets: BTreeMap<(usize, usize), Tensor3>,
    ) -> Result<Self, AlgebraError> {
        if dims.is_empty() || differential.len() != dims.len() {
            return Err(AlgebraError::DimensionMismatch {
                context: "differential count",
                expected: dims.len(),
                found: differential.len(),
            });
        }
        for (n, d) in differential.iter().enumerate() {
            let rows = if n == 0 { 0 } else { dims[n - 1] };
            if d.rows() != rows || d.cols() != dims[n] {
                return Err(AlgebraError::DimensionMismatch { context: "differential shape", expected: dims[n], found: d.cols() });
            }
        }
        let top = dims.len() - 1;
        for (&(n1, n2), t) in &brackets {
            if n1 + n2 > top {
                return Err(AlgebraError::LevelOutOfRange { level: n1 + n2, max: top });
            }
            if t.shape() != (dims[n1], dims[n2], dims[n1 + n2]) {
                return Err(AlgebraError::DimensionMismatch { context: "bracket table shape", expected: dims[n1 + n2], found: t.shape().2 });
            }
        }
        Ok(Dgla { dims, differential, brackets })
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn differential(&self, n: usize) -> &Matrix {
        &self.differential[n]
    }

    pub fn bracket_table(&self, n1: usize, n2: usize) -> Option<&Tensor3> {
        self.brackets.get(&(n1, n2))
    }

    pub fn bracket_tables(&self) -> &BTreeMap<(usize, usize), Tensor3> {
        &self.brackets
    }

    pub fn with_bracket_table(mut self, n1: usize, n2: usize, t: Tensor3) -> Self {
        self.brackets.insert((n1, n2), t);
        self
    }

    pub fn with_differential(mut self, n: usize, d: Matrix) -> Self {
        self.differential[n] = d;
        self
    }

    /// `d x` for `x ∈ L_n`; zero for `n = 0`.
    pub fn d(&self, n: usize, x: &[Q]) -> Vector {
        self.differential[n].apply(x)
    }

    /// `[x, y]` for `x ∈ L_{n1}`, `y ∈ L_{n2}`; zero beyond the top degree.
    pub fn bracket(&self, n1: usize, x: &[Q], n2: usize, y: &[Q]) -> Vector {
        match self.brackets.get(&(n1, n2)) {
            Some(t) => t.eval(x, y),
            None => zero_vector(self.dim(n1 + n2)),
        }
    }
}

/// `Σ_{P̄(n1,n2)} ± f(x, y) + (−1)^{(n1+1)(n2+1)} Σ_{P̄(n2,n1)} ± f(y, x)` on ambient vectors, with prose signs.
fn peiffer_sum(
    g: &SimplicialLieAlgebra,
    moore: &MooreComplex,
    n1: usize,
    x: &[Q],
    n2: usize,
    y: &[Q],
) -> Result<Vector, AlgebraError> {
    let n = n1 + n2;
    let mut acc = zero_vector(g.dim(n));
    for pair in enum_pbar(n) {
        let (a, b) = (pair.alpha_degree(), pair.beta_degree());
        let c = prose_sign(&pair)?;
        if (a, b) == (n1, n2) {
            add_scaled(&mut acc, &Q::from_int(c as i64), &peiffer(g, moore, &pair, x, y)?);
        }
        if (a, b) == (n2, n1) {
            let c = c * parity((n1 + 1) * (n2 + 1));
            add_scaled(&mut acc, &Q::from_int(c as i64), &peiffer(g, moore, &pair, y, x)?);
        }
    }
    Ok(acc)
}

/// Builds `d_n = DIFFERENTIAL_SIGN · δ_n`, the Lie bracket on `L_0`, `[x_0, x_n] = −[x_n, x_0] = ^{x_0}x_n`,
/// and for `n1, n2 ≥ 1` the Peiffer sum scaled by [`bracket_sign`].
///
/// No oracle check; see [`build_dgla`].
pub fn build_dgla_from_formulas(g: &SimplicialLieAlgebra, moore: &MooreComplex) -> Result<Dgla, AlgebraError> {
    let k = moore.length();
    if g.truncation() < k + 1 {
        return Err(AlgebraError::MooreLengthExceedsTruncation { length: k, truncation: g.truncation() });
    }
    let dims: Vec<usize> = (0..=k).map(|n| moore.dim(n)).collect();
    let sign_d = Q::from_int(DIFFERENTIAL_SIGN as i64);
    let differential: Vec<Matrix> = (0..=k)
        .map(|n| if n == 0 { Matrix::zeros(0, dims[0]) } else { moore.delta(n).scaled(&sign_d) })
        .collect();
    let mut brackets = BTreeMap::new();
    for n in 0..=k {
        for n1 in 0..=n {
            let n2 = n - n1;
            let (d1, d2, d) = (dims[n1], dims[n2], dims[n]);
            if d1 == 0 || d2 == 0 || d == 0 {
                continue;
            }
            let s = Q::from_int(bracket_sign(n1, n2) as i64);
            let mut t = Tensor3::zeros(d1, d2, d);
            for i in 0..d1 {
                let x = moore.embed(n1, &unit_vector(d1, i));
                for j in 0..d2 {
                    let y = moore.embed(n2, &unit_vector(d2, j));
                    let z = if n == 0 {
                        g.level(0).br(&x, &y)
                    } else if n1 == 0 {
                        action(g, n, &x, &y)?
                    } else if n2 == 0 {
                        crate::matrix::scale(&-Q::one(), &action(g, n, &y, &x)?)
                    } else {
                        crate::matrix::scale(&s, &peiffer_sum(g, moore, n1, &x, n2, &y)?)
                    };
                    t.set(i, j, &moore.coordinates(n, &z)?);
                }
            }
            if !t.is_zero() {
                brackets.insert((n1, n2), t);
            }
        }
    }
    Dgla::new(dims, differential, brackets)
}

/// As [`build_dgla_from_formulas`], then compared with the superfield oracle; any disagreement is an error.
///
/// Requires truncation at least Moore length + 1, the level the oracle needs.
pub fn build_dgla(g: &SimplicialLieAlgebra, moore: &MooreComplex) -> Result<Dgla, AlgebraError> {
    let l = build_dgla_from_formulas(g, moore)?;
    let r = oracle_compare(g, moore, &l)?;
    if !r.oracle.is_empty() {
        return Err(AlgebraError::OracleMismatch(r.oracle));
    }
    Ok(l)
}

/// `^{x_0} x_n = [s_{n−1} ⋯ s_0 x_0, x_n]` on ambient vectors.
pub fn action(g: &SimplicialLieAlgebra, n: usize, x0: &[Q], xn: &[Q]) -> Result<Vector, AlgebraError> {
    if n > g.truncation() || x0.len() != g.dim(0) || xn.len() != g.dim(n) {
        return Err(AlgebraError::LevelOutOfRange { level: n, max: g.truncation() });
    }
    let s = s_alpha(g, MultiIndex::full(n), n)?;
    let z = g.level(n).br(&s.apply(x0), xn);
    let p = crate::simplicial::moore_projector(g, n)?;
    if p.apply(xn) != xn || p.apply(&z) != z {
        return Err(AlgebraError::NotInSubspace { context: format!("Moore space at level {n}") });
    }
    Ok(z)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    /// Axiom violations.
    pub axioms: Report,
    /// Disagreements with the superfield expansion; empty when it was not run.
    pub oracle: Report,
    /// Number of basis instances checked per law.
    pub checked: BTreeMap<String, usize>,
    pub sign_table: Vec<SignEntry>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.axioms.is_empty() && self.oracle.is_empty()
    }
}

fn residual(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(|c| format!("{c}")).collect();
    format!("residual [{}]", parts.join(", "))
}

/// Checks `d² = 0`, graded antisymmetry, graded Jacobi and the Leibniz rule on basis elements.
pub fn verify_dgla(l: &Dgla) -> VerificationReport {
    let k = l.top();
    let mut r = Report::new();
    let mut checked: BTreeMap<String, usize> = BTreeMap::new();
    let basis = |n: usize| -> Vec<Vector> { (0..l.dim(n)).map(|i| unit_vector(l.dim(n), i)).collect() };
    let mut count = |law: &str| *checked.entry(String::from(law)).or_insert(0) += 1;

    for n in 2..=k {
        for (i, x) in basis(n).iter().enumerate() {
            count("d-squared");
            let v = l.d(n - 1, &l.d(n, x));
            if !is_zero_vector(&v) {
                r.push("d-squared", alloc::vec![n], alloc::vec![i], residual(&v));
            }
        }
    }
    for n1 in 0..=k {
        for n2 in 0..=k - n1 {
            let (bx, by) = (basis(n1), basis(n2));
            let s = Q::from_int(parity(n1 * n2) as i64);
            for (i, x) in bx.iter().enumerate() {
                for (j, y) in by.iter().enumerate() {
                    count("antisymmetry");
                    let mut v = l.bracket(n1, x, n2, y);
                    add_scaled(&mut v, &s, &l.bracket(n2, y, n1, x));
                    if !is_zero_vector(&v) {
                        r.push("antisymmetry", alloc::vec![n1, n2], alloc::vec![i, j], residual(&v));
                    }

                    // d[x, y] = [dx, y] + (−1)^{n1} [x, dy]
                    if n1 + n2 >= 1 {
                        count("leibniz");
                        let lhs = l.d(n1 + n2, &l.bracket(n1, x, n2, y));
                        let mut rhs = zero_vector(l.dim(n1 + n2 - 1));
                        if n1 >= 1 {
                            add_scaled(&mut rhs, &Q::one(), &l.bracket(n1 - 1, &l.d(n1, x), n2, y));
                        }
                        if n2 >= 1 {
                            let e = Q::from_int(parity(n1) as i64);
                            add_scaled(&mut rhs, &e, &l.bracket(n1, x, n2 - 1, &l.d(n2, y)));
                        }
                        let v = sub_vectors(&lhs, &rhs);
                        if !is_zero_vector(&v) {
                            r.push("leibniz", alloc::vec![n1, n2], alloc::vec![i, j], residual(&v));
                        }
                    }
                }
            }
        }
    }
    // [x, [y, z]] = [[x, y], z] + (−1)^{n1 n2} [y, [x, z]]
    for n1 in 0..=k {
        for n2 in 0..=k - n1 {
            for n3 in 0..=k - n1 - n2 {
                let (bx, by, bz) = (basis(n1), basis(n2), basis(n3));
                let e = Q::from_int(parity(n1 * n2) as i64);
                for (i, x) in bx.iter().enumerate() {
                    for (j, y) in by.iter().enumerate() {
                        let xy = l.bracket(n1, x, n2, y);
                        for (h, z) in bz.iter().enumerate() {
                            count("jacobi");
                            let mut v = l.bracket(n1, x, n2 + n3, &l.bracket(n2, y, n3, z));
                            add_scaled(&mut v, &-Q::one(), &l.bracket(n1 + n2, &xy, n3, z));
                            let yxz = l.bracket(n2, y, n1 + n3, &l.bracket(n1, x, n3, z));
                            add_scaled(&mut v, &-e.clone(), &yxz);
                            if !is_zero_vector(&v) {
                                r.push("jacobi", alloc::vec![n1, n2, n3], alloc::vec![i, j, h], residual(&v));
                            }
                        }
                    }
                }
            }
        }
    }
    VerificationReport { axioms: r, oracle: Report::new(), checked, sign_table: Vec::new() }
}

/// Compares `l` with the superfield expansion of `g`: the relations linking consecutive superfields,
/// `Q² = 0`, the differential and every bracket table. Fills `oracle` and `sign_table`.
pub fn oracle_compare(g: &SimplicialLieAlgebra, moore: &MooreComplex, l: &Dgla) -> Result<VerificationReport, AlgebraError> {
    let k = l.top();
    if g.truncation() < k + 1 {
        return Err(AlgebraError::MooreLengthExceedsTruncation { length: k, truncation: g.truncation() });
    }
    let mut r = Report::new();
    let mut checked: BTreeMap<String, usize> = BTreeMap::new();
    let (comps, _) = Components::symbolic(moore, k + 1, 1);
    for n in 0..=k {
        r.extend(check_superfield_relations(g, moore, n, &comps)?);
    }
    r.extend(oracle_q_squared(g, moore)?);
    for n in 0..=k {
        let lvl = oracle_level(g, moore, n)?;
        for (&m, mat) in &lvl.linear {
            *checked.entry(String::from("oracle-differential")).or_insert(0) += 1;
            let expected = if m == n + 1 && m <= k {
                l.differential(m).scaled(&Q::from_int(oracle_differential_sign(n) as i64))
            } else {
                Matrix::zeros(mat.rows(), mat.cols())
            };
            if *mat != expected {
                r.push("oracle-differential", alloc::vec![m, n], Vec::new(), format!("oracle {mat:?}, expected {expected:?}"));
            }
        }
        if n < k && !lvl.linear.contains_key(&(n + 1)) && !l.differential(n + 1).is_zero() {
            r.push("oracle-differential", alloc::vec![n + 1, n], Vec::new(), "oracle has no linear term");
        }
        for n1 in 0..=n {
            let n2 = n - n1;
            let zero = Tensor3::zeros(l.dim(n1), l.dim(n2), l.dim(n));
            let t = lvl.brackets.get(&(n1, n2)).unwrap_or(&zero);
            let ours = l.bracket_table(n1, n2).unwrap_or(&zero);
            let s = Q::from_int(bracket_sign(n1, n2) as i64);
            for i in 0..l.dim(n1) {
                for j in 0..l.dim(n2) {
                    *checked.entry(String::from("oracle-bracket")).or_insert(0) += 1;
                    let expected = crate::matrix::scale(&s, t.entry(i, j));
                    if ours.entry(i, j) != expected.as_slice() {
                        let v = sub_vectors(ours.entry(i, j), &expected);
                        r.push("oracle-bracket", alloc::vec![n1, n2], alloc::vec![i, j], residual(&v));
                    }
                }
            }
        }
    }
    Ok(VerificationReport { axioms: Report::new(), oracle: r.sorted(), checked, sign_table: sign_table(k)? })
}

/// Builds from the formulas, checks the axioms and compares with the oracle, keeping every finding.
pub fn verify_against_oracle(g: &SimplicialLieAlgebra, moore: &MooreComplex) -> Result<(Dgla, VerificationReport), AlgebraError> {
    let l = build_dgla_from_formulas(g, moore)?;
    let mut report = verify_dgla(&l);
    let o = oracle_compare(g, moore, &l)?;
    report.oracle = o.oracle;
    report.checked.extend(o.checked);
    report.sign_table = o.sign_table;
    Ok((l, report))
}
